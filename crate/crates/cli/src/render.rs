use std::io::{self, Write};

use bifunctor_cohom::ledger::{Complex, LedgerState};
use bifunctor_cohom::{RationalSeries, TruncatedSeries};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::Format;

/// Integers become JSON numbers; anything else is the string `"p/q"`.
fn rational_json(x: &BigRational) -> Value {
    if x.is_integer() {
        if let Some(v) = x.to_integer().to_i64() {
            return json!(v);
        }
    }
    json!(x.to_string())
}

fn expansion_json(e: &TruncatedSeries) -> Value {
    Value::Array(e.coefficients().iter().map(rational_json).collect())
}

/// `{numerator, denominator, expansion, order}`, plus `side_factor` when
/// the denominator does not split into `(1 - t^k)` factors.
pub fn series_json(s: &RationalSeries, order: usize) -> Value {
    let mut v = json!({
        "numerator": s.numerator().coeffs().iter().map(rational_json).collect::<Vec<_>>(),
        "denominator": s.factors().map(|(k, e)| json!([k, e])).collect::<Vec<_>>(),
        "expansion": expansion_json(&s.expand(order)),
        "order": order,
    });
    if let Some(side) = s.side_factor() {
        v["side_factor"] = side.coeffs().iter().map(rational_json).collect();
    }
    v
}

fn joined(e: &TruncatedSeries) -> String {
    e.to_string()
}

/// A computed series together with the requested expansion order.
#[derive(Clone, Debug)]
pub struct SeriesOutput {
    pub series: RationalSeries,
    pub order: usize,
}

impl SeriesOutput {
    pub fn new(series: RationalSeries, order: usize) -> Self {
        SeriesOutput { series, order }
    }

    pub fn write(
        &self,
        format: Format,
        expansion_only: bool,
        out: &mut dyn Write,
    ) -> io::Result<()> {
        let e = self.series.expand(self.order);
        match format {
            Format::Text => {
                if !expansion_only {
                    writeln!(out, "{}", self.series)?;
                }
                writeln!(out, "{}", joined(&e))
            }
            Format::Json => {
                let v = if expansion_only {
                    json!({"expansion": expansion_json(&e), "order": self.order})
                } else {
                    series_json(&self.series, self.order)
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&v)?)
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["degree", "dimension"])?;
                for (i, c) in e.coefficients().iter().enumerate() {
                    w.write_record([i.to_string(), c.to_string()])?;
                }
                w.flush()
            }
        }
    }
}

const LEDGER_HEADER: [&str; 9] = [
    "degree", "tensor", "sym", "lambda", "gamma", "rk_d1", "rk_d2", "rk_k1", "rk_k2",
];

pub fn write_ledger(
    state: &LedgerState,
    trace: bool,
    format: Format,
    out: &mut dyn Write,
) -> io::Result<()> {
    let rows = state.table().expect("solved ledger");
    let lambda = state.lambda_series().expect("solved ledger");
    let gamma = state.gamma_series().expect("solved ledger");
    let beyond: Vec<usize> = (state.resolved_through() + 1..=state.max_degree()).collect();
    let audits: Vec<(Complex, bool)> = Complex::ALL
        .iter()
        .map(|&c| {
            (
                c,
                state
                    .euler_audit(c)
                    .expect("solved ledger")
                    .iter()
                    .all(|r| r.holds),
            )
        })
        .collect();
    match format {
        Format::Text => {
            writeln!(
                out,
                "r = {}, validity window 0..={}",
                state.r(),
                state.window()
            )?;
            writeln!(
                out,
                "{:>3} {:>5} {:>5} {:>5} {:>5} {:>6} {:>6} {:>6} {:>6}",
                "m", "⊗²", "S²", "Λ²", "Γ²", "rk d1", "rk d2", "rk κ1", "rk κ2"
            )?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3} {:>5} {:>5} {:>5} {:>5} {:>6} {:>6} {:>6} {:>6}",
                    r.degree,
                    r.tensor,
                    r.sym,
                    r.lambda,
                    r.gamma,
                    r.rk_d1,
                    r.rk_d2,
                    r.rk_k1,
                    r.rk_k2
                )?;
            }
            writeln!(out, "Λ²: {}", joined(&lambda))?;
            writeln!(out, "Γ²: {}", joined(&gamma))?;
            if let (Some(a), Some(b)) = (beyond.first(), beyond.last()) {
                writeln!(
                    out,
                    "degrees {a}..={b} lie outside the validity window and are not resolved"
                )?;
            }
            let audit: Vec<String> = audits
                .iter()
                .map(|(c, ok)| format!("{c:?} {}", if *ok { "ok" } else { "FAILED" }))
                .collect();
            writeln!(out, "Euler audit: {}", audit.join(", "))?;
            if trace {
                writeln!(out, "trace:")?;
                for t in state.trace() {
                    writeln!(out, "  {t}")?;
                }
            }
            Ok(())
        }
        Format::Json => {
            let mut v = json!({
                "r": state.r(),
                "window": state.window(),
                "rows": rows.iter().map(|r| json!({
                    "degree": r.degree,
                    "tensor": r.tensor,
                    "sym": r.sym,
                    "lambda": r.lambda,
                    "gamma": r.gamma,
                    "rk_d1": r.rk_d1,
                    "rk_d2": r.rk_d2,
                    "rk_k1": r.rk_k1,
                    "rk_k2": r.rk_k2,
                })).collect::<Vec<_>>(),
                "lambda": expansion_json(&lambda),
                "gamma": expansion_json(&gamma),
                "out_of_window": beyond,
                "euler_audit": audits.iter().map(|(c, ok)| json!({"complex": format!("{c:?}"), "holds": ok})).collect::<Vec<_>>(),
            });
            if trace {
                v["trace"] = state
                    .trace()
                    .iter()
                    .map(|t| json!({"variable": t.variable, "value": t.value, "constraint": t.constraint}))
                    .collect();
            }
            writeln!(out, "{}", serde_json::to_string_pretty(&v)?)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(LEDGER_HEADER)?;
            for r in &rows {
                w.write_record(
                    [
                        r.degree as i64,
                        r.tensor,
                        r.sym,
                        r.lambda,
                        r.gamma,
                        r.rk_d1,
                        r.rk_d2,
                        r.rk_k1,
                        r.rk_k2,
                    ]
                    .map(|x| x.to_string()),
                )?;
            }
            w.flush()
        }
    }
}
