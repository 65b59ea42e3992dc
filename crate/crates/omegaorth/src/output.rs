//! Conversions of core results to JSON values and the human and CSV
//! renderings of those values.
//!
//! Complex numbers are `{"re": .., "im": ..}` objects in JSON; the other
//! formats print them as matrix file literals. Every float is written in
//! shortest round-trip form, so all three formats carry the same numbers.

use num_complex::Complex64;
use omegaorth_core::claims::{ClaimReport, SuiteReport, WitnessRecord};
use omegaorth_core::{ParallelWitness, RadiusCertificate, UnitVector, Verdict, Witness};
use serde_json::{json, Map, Value};

use crate::matrix_file::{render_complex, render_entry};

pub fn complex(z: Complex64) -> Value {
    json!({"re": z.re, "im": z.im})
}

pub fn vector(x: &UnitVector) -> Value {
    Value::Array(x.entries().iter().map(|&z| complex(z)).collect())
}

pub fn parallel_witness(w: &ParallelWitness) -> Value {
    json!({
        "kind": "parallel",
        "lambda_phase": w.lambda_phase,
        "lambda": complex(w.lambda()),
        "x": vector(&w.x),
        "product_value": complex(w.product_value),
    })
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::Lambda(lambda) => json!({"kind": "lambda", "lambda": complex(*lambda)}),
        Witness::Entry { row, col, value } => {
            json!({"kind": "entry", "row": row, "col": col, "value": complex(*value)})
        }
        Witness::Theta { theta, x, value } => {
            json!({"kind": "theta", "theta": theta, "x": vector(x), "value": value})
        }
        Witness::Distance { distance, x } => {
            json!({"kind": "distance", "distance": distance, "x": vector(x)})
        }
        Witness::Vector(x) => json!({"kind": "vector", "x": vector(x)}),
        Witness::Parallel(p) => parallel_witness(p),
    }
}

pub fn verdict(v: &Verdict) -> Value {
    json!({
        "status": v.status.as_str(),
        "margin": v.margin,
        "tolerance": v.tolerance,
        "witness": v.witness.as_ref().map_or(Value::Null, witness),
    })
}

pub fn certificate(c: &RadiusCertificate) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("omega".into(), c.omega.into());
    m.insert("theta_star".into(), c.theta_star.into());
    m.insert("x_star".into(), vector(&c.x_star));
    m.insert("residual".into(), c.residual.into());
    m
}

/// The witness matrices as a matrix file snippet.
pub fn witness_snippet(w: &WitnessRecord) -> String {
    let mut out = String::new();
    for (name, m) in &w.matrices {
        out.push_str(&render_entry(name, m));
        out.push('\n');
    }
    out
}

pub fn claim_report(r: &ClaimReport) -> Value {
    let worst = r.worst_witness.as_ref().map_or(Value::Null, |w| {
        json!({
            "trial": w.trial,
            "variant": w.variant,
            "margin": w.margin,
            "detail": w.detail,
            "matrices": witness_snippet(w),
        })
    });
    json!({
        "claim_id": r.claim_id,
        "kind": r.kind.as_str(),
        "trials": r.trials,
        "supported": r.supported,
        "violated": r.violated,
        "inconclusive": r.inconclusive,
        "vacuous": r.vacuous,
        "worst_witness": worst,
    })
}

pub fn suite_report(s: &SuiteReport, seed: u64, trials: usize) -> Value {
    json!({
        "seed": seed,
        "trials": trials,
        "reference_fixtures_pass": s.reference_fixtures_pass(),
        "fixtures": s.fixtures.iter().map(claim_report).collect::<Vec<_>>(),
        "claims": s.claims.iter().map(claim_report).collect::<Vec<_>>(),
    })
}

fn as_complex(v: &Value) -> Option<Complex64> {
    let m = v.as_object()?;
    if m.len() != 2 {
        return None;
    }
    Some(Complex64::new(m.get("re")?.as_f64()?, m.get("im")?.as_f64()?))
}

fn number(n: &serde_json::Number) -> String {
    match (n.as_u64(), n.as_i64(), n.as_f64()) {
        (Some(u), _, _) => u.to_string(),
        (None, Some(i), _) => i.to_string(),
        (None, None, Some(f)) => format!("{f:?}"),
        _ => n.to_string(),
    }
}

/// One-line rendering of a scalar, complex number or array.
pub fn inline(v: &Value) -> String {
    if let Some(z) = as_complex(v) {
        return render_complex(z);
    }
    match v {
        Value::Null => "none".into(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => number(n),
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => m
            .iter()
            .map(|(k, v)| format!("{k}={}", inline(v)))
            .collect::<Vec<_>>()
            .join(" "),
    }
}

/// `key: value` lines, nested objects indented under their key.
pub fn human(v: &Value) -> String {
    let mut out = String::new();
    human_into(v, 0, &mut out);
    out
}

fn human_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v.as_object() {
        Some(m) if as_complex(v).is_none() => {
            for (k, item) in m {
                match item {
                    Value::Object(_) if as_complex(item).is_none() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        human_into(item, depth + 1, out);
                    }
                    Value::String(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for line in s.lines() {
                            out.push_str(&format!("{pad}  {line}\n"));
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", inline(v))),
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) if as_complex(v).is_none() => {
            for (k, item) in m {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                flatten(&key, item, out);
            }
        }
        Value::Array(items) => {
            let cells: Vec<String> = items.iter().map(inline).collect();
            out.push((prefix.to_string(), cells.join(";")));
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        _ => out.push((prefix.to_string(), inline(v))),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Header row of dotted keys and one value row. Arrays are joined by `;`.
pub fn csv_record(v: &Value) -> String {
    let mut cells = Vec::new();
    flatten("", v, &mut cells);
    csv_table(&[cells])
}

/// Header from the first row's keys, then one line per row.
pub fn csv_table(rows: &[Vec<(String, String)>]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let header: Vec<String> = first.iter().map(|(k, _)| csv_cell(k)).collect();
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for row in rows {
        let cells: Vec<String> = row.iter().map(|(_, v)| csv_cell(v)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn csv_rows(values: &[Value]) -> String {
    let rows: Vec<Vec<(String, String)>> = values
        .iter()
        .map(|v| {
            let mut cells = Vec::new();
            flatten("", v, &mut cells);
            cells
        })
        .collect();
    csv_table(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_nested_values() {
        let v = json!({"omega": 0.5, "z": {"re": 1.0, "im": -2.0}, "w": {"kind": "lambda", "n": 3}, "none": null});
        assert_eq!(
            human(&v),
            "omega: 0.5\nz: 1.0-2.0i\nw:\n  kind: lambda\n  n: 3\nnone: none\n"
        );
        assert_eq!(csv_record(&v), "omega,z,w.kind,w.n,none\n0.5,1.0-2.0i,lambda,3,\n");
    }

    #[test]
    fn csv_quotes_cells() {
        let v = json!({"a": "x,y", "b": [1.5, 2.5]});
        assert_eq!(csv_record(&v), "a,b\n\"x,y\",1.5;2.5\n");
    }
}
