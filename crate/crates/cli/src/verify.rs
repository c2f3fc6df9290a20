//! Replays the published table of Poincaré series against the engine.
//!
//! Each claim carries the published value, the computed value and a
//! status. The exterior and symmetric cube values (`ps-2`, `ps-3`,
//! `prop8-1`, `prop8-2`) are known to be misprinted: the published
//! series would give the standard-representation summand a
//! non-integral dimension series. They are kept as expected-mismatch
//! baselines.

use std::fmt;
use std::io::{self, Write};

use bifunctor_cohom::cohom::{
    char2_coinvariant_dimensions, char2_series, cohomology_series, gl_finite_series, schur_series,
    tensor_series, Char2Kind,
};
use bifunctor_cohom::extalg::er_basis;
use bifunctor_cohom::ledger::{init_ledger, validity_window};
use bifunctor_cohom::symgrp::{
    burnside_product, oracle_isotypic_dimension, partitions, BurnsideElement, ExplicitModule,
};
use bifunctor_cohom::{
    CoefficientKind, Family, Partition, Polynomial, RationalSeries, Twist, TwistParams,
};
use num_rational::BigRational;
use serde_json::json;

use crate::Format;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Match,
    MismatchKnownErratum,
    Mismatch,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Match => "MATCH",
            Status::MismatchKnownErratum => "MISMATCH_KNOWN_ERRATUM",
            Status::Mismatch => "MISMATCH",
        })
    }
}

/// An auxiliary check attached to a claim, such as an independent
/// re-derivation of the computed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub location: String,
    pub parameters: String,
    pub expected: String,
    pub computed: String,
    pub cross_checks: Vec<CrossCheck>,
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub id: String,
    pub description: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
    pub witnesses: Vec<Witness>,
}

const KNOWN_ERRATA: [&str; 4] = ["ps-2", "ps-3", "prop8-1", "prop8-2"];

impl VerificationReport {
    pub fn has_unexpected_mismatch(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Mismatch)
    }

    pub fn count(&self, s: Status) -> usize {
        self.claims.iter().filter(|c| c.status == s).count()
    }

    pub fn claims_with_id<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Claim> + 'a {
        self.claims.iter().filter(move |c| c.id == id)
    }

    fn push(
        &mut self,
        id: &str,
        location: &str,
        parameters: String,
        expected: Shown,
        computed: Shown,
        checks: Vec<CrossCheck>,
    ) {
        let same = match (&expected.series, &computed.series) {
            (Some(a), Some(b)) => a.equal(b),
            _ => expected.text == computed.text,
        };
        let agree = same && checks.iter().all(|c| c.holds);
        let status = if agree {
            Status::Match
        } else if KNOWN_ERRATA.contains(&id) && checks.iter().all(|c| c.holds) {
            Status::MismatchKnownErratum
        } else {
            Status::Mismatch
        };
        self.claims.push(Claim {
            id: id.into(),
            location: location.into(),
            parameters,
            expected: expected.text,
            computed: computed.text,
            cross_checks: checks,
            status,
        });
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Text => {
                for c in &self.claims {
                    writeln!(
                        out,
                        "{:<22} {:<10} {:<24} {}",
                        c.status, c.id, c.parameters, c.location
                    )?;
                    writeln!(out, "    expected: {}", c.expected)?;
                    writeln!(out, "    computed: {}", c.computed)?;
                    for x in &c.cross_checks {
                        writeln!(
                            out,
                            "    check: {} [{}]",
                            x.name,
                            if x.holds { "ok" } else { "FAILED" }
                        )?;
                    }
                }
                writeln!(out, "witnesses:")?;
                for w in &self.witnesses {
                    writeln!(out, "  {}: {} = {}", w.id, w.description, w.value)?;
                }
                writeln!(
                    out,
                    "{} claims: {} MATCH, {} MISMATCH_KNOWN_ERRATUM, {} MISMATCH",
                    self.claims.len(),
                    self.count(Status::Match),
                    self.count(Status::MismatchKnownErratum),
                    self.count(Status::Mismatch)
                )
            }
            Format::Json => {
                let v = json!({
                    "claims": self.claims.iter().map(|c| json!({
                        "id": c.id,
                        "location": c.location,
                        "parameters": c.parameters,
                        "expected": c.expected,
                        "computed": c.computed,
                        "cross_checks": c.cross_checks.iter().map(|x| json!({"name": x.name, "holds": x.holds})).collect::<Vec<_>>(),
                        "status": c.status.to_string(),
                    })).collect::<Vec<_>>(),
                    "witnesses": self.witnesses.iter().map(|w| json!({
                        "id": w.id, "description": w.description, "value": w.value,
                    })).collect::<Vec<_>>(),
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record([
                    "id",
                    "parameters",
                    "status",
                    "expected",
                    "computed",
                    "location",
                ])?;
                for c in &self.claims {
                    w.write_record([
                        c.id.as_str(),
                        &c.parameters,
                        &c.status.to_string(),
                        &c.expected,
                        &c.computed,
                        &c.location,
                    ])?;
                }
                w.flush()
            }
        }
    }
}

/// A compared value: a series, or a plain label compared as text.
struct Shown {
    series: Option<RationalSeries>,
    text: String,
}

fn shown(s: &RationalSeries) -> Shown {
    Shown {
        series: Some(s.clone()),
        text: s.to_string(),
    }
}

fn label(s: String) -> Shown {
    Shown {
        series: None,
        text: s,
    }
}

/// `P_r(t) = (1 - t^{2p^r}) / (1 - t^2)` written out directly, or
/// `1/(1 - t^2)` for the infinite twist.
fn p_series(p: u32, r: Twist) -> RationalSeries {
    match r {
        Twist::Infinite => RationalSeries::geometric(2),
        Twist::Finite(r) => {
            let top = 2 * (p as usize).pow(r);
            RationalSeries::new(Polynomial::one_minus_t_pow(top), &[(2, 1)]).expect("valid factors")
        }
    }
}

/// `(1 - t^{2^{r+2}}) / (1 - t^4)` and its limit `1/(1 - t^4)`.
fn p2_series(r: Twist) -> RationalSeries {
    p_series(2, r).substitute(2)
}

fn rs(num: &[i64], den: &[(u32, u32)]) -> RationalSeries {
    RationalSeries::new(Polynomial::from_ints(num.iter().copied()), den).expect("valid factors")
}

fn poly(c: &[i64]) -> RationalSeries {
    RationalSeries::from_polynomial(Polynomial::from_ints(c.iter().copied()))
}

fn part(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

fn tp(p: u32, r: Twist) -> TwistParams {
    TwistParams::new(p, r).expect("prime characteristic")
}

const TWISTS: [Twist; 5] = [
    Twist::Finite(0),
    Twist::Finite(1),
    Twist::Finite(2),
    Twist::Finite(3),
    Twist::Infinite,
];

fn params(p: u32, r: Twist) -> String {
    format!("p={p} r={r}")
}

/// Published degree-3 values in characteristic `p > 3`.
fn tensor_cube_claims(rep: &mut VerificationReport) {
    for p in [5, 7] {
        for r in TWISTS {
            let pp = p_series(p, r);
            let expected = pp.pow(3).scale_int(6);
            rep.push(
                "ps-1",
                "tensor cube",
                params(p, r),
                shown(&expected),
                shown(&tensor_series(tp(p, r), 3)),
                vec![],
            );
        }
    }
    for r in TWISTS.into_iter().skip(1) {
        let p = 5;
        let (p1, p2, p3) = (
            p_series(p, r),
            p_series(p, r).substitute(2),
            p_series(p, r).substitute(3),
        );
        let published_ext = &(&p1.pow(3) - &(&p2 * &p1).scale_int(2)) + &p3.scale_int(2);
        let published_sym = &(&p2 * &p1).scale_int(2) + &p3;
        for (id, location, lambda, published) in [
            ("ps-2", "exterior cube", "1,1,1", published_ext),
            ("ps-3", "symmetric cube", "3", published_sym),
        ] {
            let computed = schur_series(tp(p, r), &part(lambda)).expect("p > 3");
            let mut checks = vec![];
            if let Twist::Finite(rr @ 1..=2) = r {
                checks.push(CrossCheck {
                    name: "explicit S3-module oracle agrees through degree 12".into(),
                    holds: oracle_agrees(tp(p, Twist::Finite(rr)), &part(lambda), &computed, 12),
                });
            }
            rep.push(
                id,
                location,
                params(p, r),
                shown(&published),
                shown(&computed),
                checks,
            );
        }
    }
}

/// Coefficientwise comparison with the explicit graded module
/// `E_r^{⊗3} ⊗ kS_3`, truncated at `top`.
fn oracle_agrees(tp: TwistParams, lambda: &Partition, s: &RationalSeries, top: u64) -> bool {
    use bifunctor_cohom::symgrp::{all_permutations, compose, inverse};
    use std::collections::HashMap;
    let n = lambda.n();
    let degrees: Vec<u64> = er_basis(tp, top)
        .expect("finite twist")
        .iter()
        .map(|m| m.degree())
        .collect();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &words {
            for i in 0..degrees.len() {
                let mut w = w.clone();
                w.push(i);
                if w.iter().map(|&i| degrees[i]).sum::<u64>() <= top {
                    next.push(w);
                }
            }
        }
        words = next;
    }
    let elems = all_permutations(n);
    let basis: Vec<(Vec<usize>, Vec<u8>)> = words
        .iter()
        .flat_map(|w| elems.iter().map(move |h| (w.clone(), h.clone())))
        .collect();
    let index: HashMap<_, _> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let grading = basis
        .iter()
        .map(|(w, _)| w.iter().map(|&i| degrees[i]).sum())
        .collect();
    let m = ExplicitModule::from_action(
        n,
        basis.len(),
        |g, x| {
            let (w, h) = &basis[x];
            let mut moved = vec![0; n];
            for (i, &v) in w.iter().enumerate() {
                moved[g[i] as usize] = v;
            }
            index[&(moved, compose(&compose(g, h), &inverse(g)))]
        },
        Some(grading),
    )
    .expect("valid action");
    let e = s.expand(top as usize);
    (0..=top).all(|d| {
        let got = oracle_isotypic_dimension(&m, lambda, Some(d)).expect("graded module");
        e.get(d as usize) == Some(&BigRational::from_integer(got.into()))
    })
}

/// The four characteristic-2 degree-2 closed forms, each re-derived a
/// second way where possible.
fn degree_two_claims(rep: &mut VerificationReport) {
    for r in TWISTS {
        let q = p_series(2, r);
        let q2 = &q * &q;
        let rr = p2_series(r);
        let published = [
            q2.scale_int(2),
            &q2 + &rr,
            &q2 + &(&poly(&[0, 1]) * &rr),
            &q2 + &(&poly(&[1, 1, 1]) * &rr),
        ];
        let kinds = [
            Char2Kind::Tensor,
            Char2Kind::Sym2,
            Char2Kind::Ext2,
            Char2Kind::Gamma2,
        ];
        let names = [
            "tensor square",
            "symmetric square",
            "exterior square",
            "divided square",
        ];
        let ledger = match r {
            Twist::Finite(r) => Some((r, init_ledger(r, None).solve())),
            Twist::Infinite => None,
        };
        for (i, (kind, published)) in kinds.into_iter().zip(published).enumerate() {
            let computed = char2_series(r, kind);
            let mut checks = vec![];
            match (kind, &ledger) {
                (Char2Kind::Sym2, Some((r, _))) => {
                    let order = 1usize << (r + 3);
                    let co: Vec<i64> = char2_coinvariant_dimensions(*r, order)
                        .iter()
                        .map(|&x| x as i64)
                        .collect();
                    checks.push(CrossCheck {
                        name: format!(
                            "swap coinvariants of E_r ⊗ E_r ⊗ kS_2 through degree {order}"
                        ),
                        holds: computed.expand(order).to_i64().as_ref() == Some(&co),
                    });
                }
                (Char2Kind::Ext2 | Char2Kind::Gamma2, Some((r, solved))) => {
                    let n = validity_window(*r);
                    let holds = match solved {
                        Ok(st) if kind == Char2Kind::Ext2 => {
                            st.lambda_series().ok() == Some(computed.expand(n))
                        }
                        Ok(st) => st.gamma_series().ok() == Some(computed.expand(n + 1)),
                        Err(_) => false,
                    };
                    checks.push(CrossCheck {
                        name: format!(
                            "rank ledger from ⊗² and S² alone, degrees 0..={}",
                            if kind == Char2Kind::Ext2 { n } else { n + 1 }
                        ),
                        holds,
                    });
                }
                _ => {}
            }
            rep.push(
                &format!("deg2-{}", i + 1),
                names[i],
                params(2, r),
                shown(&published),
                shown(&computed),
                checks,
            );
        }
    }
}

/// `H(A^2 ⊗ I) = H(A^2)·P + 2P³` in characteristic 2.
fn exponential_char2_claims(rep: &mut VerificationReport) {
    let fams = [
        (Family::Sym, Char2Kind::Sym2, "S²"),
        (Family::Ext, Char2Kind::Ext2, "Λ²"),
        (Family::Gamma, Char2Kind::Gamma2, "Γ²"),
    ];
    for (i, (fam, kind, name)) in fams.into_iter().enumerate() {
        for r in TWISTS {
            let q = p_series(2, r);
            let expected = &(&char2_series(r, kind) * &q) + &q.pow(3).scale_int(2);
            let computed = cohomology_series(tp(2, r), &CoefficientKind::Exponential(fam, 2))
                .expect("degree 2");
            rep.push(
                &format!("cor6-{}", i + 1),
                &format!("{name} ⊗ I in characteristic 2"),
                params(2, r),
                shown(&expected),
                shown(&computed),
                vec![],
            );
        }
    }
}

/// Stable values for `GL` of a finite field.
fn stable_claims(rep: &mut VerificationReport) {
    let g2 = rs(&[1], &[(2, 1)]);
    let g22 = rs(&[1], &[(2, 2)]);
    let g4 = rs(&[1], &[(4, 1)]);
    let bullets: Vec<(&str, &str, CoefficientKind, Vec<u64>, RationalSeries)> = vec![
        (
            "pseries-1",
            "gl",
            CoefficientKind::Tensor(1),
            vec![2, 3, 5, 7],
            g2.clone(),
        ),
        (
            "pseries-2",
            "gl ⊗ gl",
            CoefficientKind::Tensor(2),
            vec![2, 3, 4, 5],
            g22.scale_int(2),
        ),
        (
            "pseries-3",
            "S²(gl)",
            CoefficientKind::Sym2,
            vec![2, 3, 4, 5, 9],
            &g22 + &g4,
        ),
        (
            "pseries-4",
            "Λ²(gl), p = 2",
            CoefficientKind::Ext2,
            vec![2, 4, 8],
            &g22 + &(&poly(&[0, 1]) * &g4),
        ),
        (
            "pseries-5",
            "Λ²(gl), p > 2",
            CoefficientKind::Ext2,
            vec![3, 5, 9],
            &g22 - &g4,
        ),
        (
            "pseries-6",
            "Γ²(gl), p = 2",
            CoefficientKind::Gamma2,
            vec![2, 4],
            &g22 + &(&poly(&[1, 1, 1]) * &g4),
        ),
        (
            "cor8-1",
            "S²(gl) ⊗ gl",
            CoefficientKind::Exponential(Family::Sym, 2),
            vec![2, 3, 5],
            &(&g22.scale_int(3) + &g4) * &g2,
        ),
        (
            "cor8-2",
            "Λ²(gl) ⊗ gl, p = 2",
            CoefficientKind::Exponential(Family::Ext, 2),
            vec![2, 4],
            &(&g22.scale_int(3) + &(&poly(&[0, 1]) * &g4)) * &g2,
        ),
        (
            "cor8-3",
            "Λ²(gl) ⊗ gl, p > 2",
            CoefficientKind::Exponential(Family::Ext, 2),
            vec![3, 5],
            &(&g22.scale_int(3) - &g4) * &g2,
        ),
        (
            "prop8-1",
            "Λ³(gl), p > 3",
            CoefficientKind::Schur(part("1,1,1")),
            vec![5, 7],
            rs(&[1, 0, 0, 0, 0, 0, 5], &[(2, 1), (4, 1), (6, 1)]),
        ),
        (
            "prop8-2",
            "S³(gl), p > 3",
            CoefficientKind::Schur(part("3")),
            vec![5, 7],
            rs(&[3, 0, 2, 0, 1], &[(4, 1), (6, 1)]),
        ),
    ];
    for (id, location, kind, fields, expected) in bullets {
        for q in fields {
            let computed = gl_finite_series(q, &kind).expect("d <= q and p large enough");
            rep.push(
                id,
                location,
                format!("q={q}"),
                shown(&expected),
                shown(&computed.series),
                vec![],
            );
        }
    }
}

/// Consequences of the Schur decomposition for `p > n`.
fn schur_corollary_claims(rep: &mut VerificationReport) {
    for p in [3, 5] {
        for r in [
            Twist::Finite(0),
            Twist::Finite(1),
            Twist::Finite(2),
            Twist::Infinite,
        ] {
            let q = p_series(p, r);
            let (q2, qq) = (&q * &q, q.substitute(2));
            for (lambda, expected) in [("2", &q2 + &qq), ("1,1", &q2 - &qq)] {
                let computed = schur_series(tp(p, r), &part(lambda)).expect("p > 2");
                rep.push(
                    "cor4-n2",
                    "two copies of S²(E_r) and Λ²(E_r)",
                    format!("{} λ=({lambda})", params(p, r)),
                    shown(&expected),
                    shown(&computed),
                    vec![],
                );
            }
        }
    }
    for n in 1..=4 {
        let conj = ExplicitModule::conjugation(n);
        for lambda in partitions(n).expect("small n") {
            let mult = oracle_isotypic_dimension(&conj, &lambda, None).expect("matching n") as i64;
            let expected = RationalSeries::constant(mult);
            for r in [Twist::Finite(1), Twist::Finite(2), Twist::Infinite] {
                let s = schur_series(tp(5, r), &lambda).expect("p > n");
                let h0 = RationalSeries::from_polynomial(Polynomial::from_coeffs(vec![s
                    .expand(0)
                    .coefficients()[0]
                    .clone()]));
                rep.push(
                    "cor4-h0",
                    "degree-0 part is s^λ of the conjugation module",
                    format!("p=5 r={r} λ={lambda}"),
                    shown(&expected),
                    shown(&h0),
                    vec![],
                );
            }
            let s = schur_series(tp(5, Twist::Finite(0)), &lambda).expect("p > n");
            rep.push(
                "cor4-r0",
                "untwisted cohomology vanishes in positive degrees",
                format!("p=5 r=0 λ={lambda}"),
                shown(&expected),
                shown(&s),
                vec![],
            );
        }
    }
}

fn semiring_claims(rep: &mut VerificationReport) {
    let t = |l: &str| BurnsideElement::transitive(3, l).expect("S3 label");
    let s2s3 = burnside_product(&t("S2"), &t("S3")).expect("same n");
    rep.push(
        "ps-semiring-s2s3",
        "S_3-set product S2 × S3",
        "n=3".into(),
        label("S6".into()),
        label(s2s3.to_string()),
        vec![],
    );
}

fn witnesses(rep: &mut VerificationReport) {
    let tpp = tp(5, Twist::Finite(1));
    let pp = p_series(5, Twist::Finite(1));
    let implied = (&pp.pow(3).scale_int(5) - &pp.substitute(3).scale_int(3))
        .scale(&BigRational::new(1.into(), 2.into()));
    let first = implied.expand(64).first_non_dimension();
    rep.witnesses.push(Witness {
        id: "integrality".into(),
        description: "standard-summand series implied by the published cubes, (5P³ - 3P(t³))/2 at p=5 r=1, first non-integral coefficient".into(),
        value: match first {
            Some((d, c)) => format!("degree {d}: {c}"),
            None => "none".into(),
        },
    });
    let computed_std = schur_series(tpp, &part("2,1")).expect("p > 3");
    rep.witnesses.push(Witness {
        id: "standard-summand".into(),
        description: "computed series of the (2,1) summand at p=5 r=1".into(),
        value: computed_std.to_string(),
    });
    let t = |l: &str| BurnsideElement::transitive(3, l).expect("S3 label");
    let sq = burnside_product(&t("S3"), &t("S3")).expect("same n");
    rep.witnesses.push(Witness {
        id: "semiring-s3s3".into(),
        description: "orbit enumeration of S3 × S3 (the product table's rule gives 3*S3)".into(),
        value: sq.to_string(),
    });
}

/// Runs every claim in a fixed order.
pub fn verify_tables() -> VerificationReport {
    let mut rep = VerificationReport::default();
    tensor_cube_claims(&mut rep);
    degree_two_claims(&mut rep);
    exponential_char2_claims(&mut rep);
    stable_claims(&mut rep);
    schur_corollary_claims(&mut rep);
    semiring_claims(&mut rep);
    witnesses(&mut rep);
    rep
}
