use std::str::FromStr;

use bifunctor_cohom::{Polynomial, RationalSeries};
use bifunctor_cohom_cli::{run, EXIT_INVALID, EXIT_OK};
use num_rational::BigRational;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("bifcohom").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn rational(v: &Value) -> BigRational {
    match v {
        Value::Number(n) => BigRational::from_integer(n.as_i64().unwrap().into()),
        Value::String(s) => BigRational::from_str(s).unwrap(),
        other => panic!("unexpected {other}"),
    }
}

fn rationals(v: &Value) -> Vec<BigRational> {
    v.as_array().unwrap().iter().map(rational).collect()
}

const REQUESTS: &[&[&str]] = &[
    &["--p", "3", "--r", "inf", "--partition", "2"],
    &["--p", "2", "--r", "1", "--kind", "ext2", "--order", "6"],
    &["--p", "2", "--r", "2", "--kind", "gamma2", "--order", "20"],
    &["--p", "5", "--r", "1", "--partition", "2,1"],
    &[
        "--p", "7", "--r", "2", "--kind", "tensor", "--n", "3", "--order", "60",
    ],
    &["--q", "4", "--kind", "exp-ext", "--d", "2"],
    &["--q", "5", "--partition", "1,1,1"],
];

#[test]
fn spec_examples() {
    let (code, out, _) = call(&["series", "--p", "3", "--r", "inf", "--partition", "2"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    let first = lines.next().unwrap();
    let g22 = RationalSeries::new(Polynomial::one(), &[(2, 2)]).unwrap();
    let g4 = RationalSeries::new(Polynomial::one(), &[(4, 1)]).unwrap();
    assert_eq!(first, (&g22 + &g4).to_string());
    assert!(lines.next().unwrap().starts_with("2,0,2,0,4,0,4"));

    let (code, out, _) = call(&[
        "expand", "--p", "2", "--r", "1", "--kind", "ext2", "--order", "6",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "1,1,2,0,1,1,0");

    let (code, out, _) = call(&["ledger", "--r", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Λ²: 1,1,2,0,1,1"));
    assert!(out.contains("Γ²: 2,1,3,0,2,1,1"));
}

#[test]
fn json_and_csv_round_trip() {
    for req in REQUESTS {
        let mut args = vec!["series"];
        args.extend_from_slice(req);
        let (code, text, _) = call(&args);
        assert_eq!(code, EXIT_OK, "{req:?}");
        let expansion_line = text.lines().nth(1).unwrap().to_string();

        args.extend_from_slice(&["--format", "json"]);
        let (_, json, _) = call(&args);
        let v: Value = serde_json::from_str(&json).unwrap();
        let order = v["order"].as_u64().unwrap() as usize;
        let num = Polynomial::from_coeffs(rationals(&v["numerator"]));
        let den: Vec<(u32, u32)> = v["denominator"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| (f[0].as_u64().unwrap() as u32, f[1].as_u64().unwrap() as u32))
            .collect();
        assert!(v.get("side_factor").is_none());
        let s = RationalSeries::new(num, &den).unwrap();
        assert_eq!(s.expand(order).to_string(), expansion_line, "{req:?}");
        assert_eq!(s.to_string(), text.lines().next().unwrap());
        assert_eq!(rationals(&v["expansion"]), s.expand(order).coefficients());

        let n = args.len();
        args[n - 1] = "csv";
        let (_, csv, _) = call(&args);
        let mut rows = csv.lines();
        assert_eq!(rows.next(), Some("degree,dimension"));
        let dims: Vec<String> = rows
            .enumerate()
            .map(|(i, row)| {
                let (d, x) = row.split_once(',').unwrap();
                assert_eq!(d.parse::<usize>().unwrap(), i);
                x.to_string()
            })
            .collect();
        assert_eq!(dims.join(","), expansion_line);
    }
}

#[test]
fn output_is_deterministic() {
    for req in REQUESTS {
        let mut args = vec!["series"];
        args.extend_from_slice(req);
        args.extend_from_slice(&["--format", "json"]);
        assert_eq!(call(&args), call(&args));
    }
    assert_eq!(
        call(&["ledger", "--r", "2", "--trace"]),
        call(&["ledger", "--r", "2", "--trace"])
    );
}

#[test]
fn invalid_input_exits_with_two() {
    let bad: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["series", "--p", "3"],
        &["series", "--p", "4", "--n", "2"],
        &["series", "--p", "3", "--r", "minus-one", "--n", "2"],
        &["series", "--p", "3", "--partition", "1,2"],
        &["series", "--p", "3", "--partition", "3"],
        &["series", "--p", "3", "--kind", "tensor"],
        &["series", "--p", "3", "--kind", "sym2", "--partition", "2"],
        &["series", "--p", "3", "--kind", "exp-sym"],
        &["series", "--p", "3", "--kind", "sym2", "--d", "2"],
        &["series", "--q", "2", "--partition", "3"],
        &["series", "--q", "6", "--kind", "sym2"],
        &["series", "--q", "4", "--p", "2", "--kind", "sym2"],
        &["series", "--p", "3", "--n", "2", "--format", "xml"],
        &["ledger", "--r", "inf"],
        &["ledger"],
    ];
    for args in bad {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_INVALID, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = call(&["series", "--q", "2", "--partition", "3"]);
    assert!(err.contains("requires d <= q"));
}

#[test]
fn help_is_not_an_error() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("series") && out.contains("verify"));
}

#[test]
fn ledger_formats() {
    let (code, out, _) = call(&["ledger", "--r", "1", "--format", "json", "--trace"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["lambda"], serde_json::json!([1, 1, 2, 0, 1, 1]));
    assert_eq!(v["rows"][2]["rk_d1"], 2);
    assert!(v["trace"].as_array().unwrap().len() > 10);

    let (_, out, _) = call(&["ledger", "--r", "1", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("degree,tensor,sym,lambda,gamma,rk_d1,rk_d2,rk_k1,rk_k2")
    );
    assert_eq!(lines.next(), Some("0,2,2,1,2,1,0,1,1"));

    let (code, out, _) = call(&["ledger", "--r", "1", "--order", "8"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("degrees 6..=8 lie outside the validity window"));
}

#[test]
fn verify_exits_cleanly() {
    let (code, out, _) = call(&["verify", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c["status"] != "MISMATCH"));
    let (_, out, _) = call(&["verify", "--format", "csv"]);
    assert!(out.starts_with("id,parameters,status,expected,computed,location"));
}
