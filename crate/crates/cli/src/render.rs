//! Text and CSV renderings of command payloads.

use std::fmt::Write;

use serde_json::Value;

use crate::Report;

fn s(v: &Value) -> String {
    match v {
        Value::String(x) => x.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn list(v: &Value) -> String {
    match v.as_array() {
        Some(a) if !a.is_empty() => a.iter().map(s).collect::<Vec<_>>().join(" "),
        _ => "none".into(),
    }
}

fn verdict(p: &Value) -> &'static str {
    if p.get("pass").and_then(Value::as_bool).unwrap_or(true) {
        "PASS"
    } else {
        "FAIL"
    }
}

fn presentation_report(p: &Value, out: &mut String) {
    let gens: Vec<String> = p["generator_degrees"]
        .as_array()
        .map(|a| a.iter().map(|g| format!("{}:{}", s(&g[0]), s(&g[1]))).collect())
        .unwrap_or_default();
    let _ = writeln!(out, "action: {}", s(&p["action"]));
    let _ = writeln!(out, "claim: {} ({})", s(&p["claim"]), gens.join(" "));
    if let Some(ni) = p.get("non_invariant").filter(|v| !v.is_null()) {
        let _ = writeln!(out, "not invariant: {} under {}", s(&ni["generator"]), s(&ni["group_element"]));
    }
    let _ = writeln!(out, "{:>6} {:>8} {:>8} {:>10}  ok", "degree", "expected", "span", "invariants");
    for r in p["rows"].as_array().into_iter().flatten() {
        let ok = if r["ok"].as_bool().unwrap_or(false) { "yes" } else { "NO" };
        let _ = writeln!(
            out,
            "{:>6} {:>8} {:>8} {:>10}  {ok}",
            s(&r["degree"]),
            s(&r["expected"]),
            s(&r["span_rank"]),
            s(&r["invariants"])
        );
    }
    let _ = writeln!(out, "{}", verdict(p));
}

pub fn text(report: &Report) -> String {
    let p = &report.payload;
    let mut out = String::new();
    match report.command {
        "degrees" => {
            let _ = writeln!(out, "{}", list(&p["degrees"]));
        }
        "primes" => {
            let _ = writeln!(out, "bad: {}", list(&p["bad"]));
            let _ = writeln!(out, "torsion: {}", list(&p["torsion"]));
        }
        "weyl" => {
            let _ = writeln!(out, "{}: |W| = {}", s(&p["group"]), s(&p["order"]));
            let _ = writeln!(out, "elements by length: {}", list(&p["length_counts"]));
            let _ = writeln!(out, "{}", verdict(p));
        }
        "flag-poincare" => {
            let _ = writeln!(out, "{}", list(&p["coefficients"]));
            let _ = writeln!(out, "at q=1: {}", s(&p["at_one"]));
        }
        "invariants" | "inv2-check" => presentation_report(p, &mut out),
        "ring" => {
            let pres = &p["presentation"];
            let gens: Vec<String> = pres["generators"]
                .as_array()
                .map(|a| a.iter().map(|g| format!("{}:{}", s(&g["name"]), s(&g["degree"]))).collect())
                .unwrap_or_default();
            let _ = writeln!(out, "{}: generators {}", s(&pres["label"]), gens.join(" "));
            for r in pres["relations"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "relation: {}", s(r));
            }
            for r in p["rows"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{:>4} {}", s(&r["degree"]), s(&r["dim"]));
            }
        }
        "whitney" => {
            for (m, c) in p["components"].as_array().into_iter().flatten().enumerate() {
                let _ = writeln!(out, "u{m} = {}", s(c));
            }
        }
        "restrict" => {
            let _ = writeln!(out, "{}", s(&p["label"]));
            for im in p["images"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{} -> {}", s(&im["class"]), s(&im["image"]));
            }
        }
        "jacobian" => {
            let _ = writeln!(out, "r = {}, variant {}", s(&p["r"]), s(&p["variant"]));
            for row in p["matrix"].as_array().into_iter().flatten() {
                let cells: Vec<String> = row.as_array().into_iter().flatten().map(s).collect();
                let _ = writeln!(out, "[ {} ]", cells.join(" | "));
            }
            let _ = writeln!(out, "det = {}", s(&p["determinant"]));
            let _ = writeln!(out, "expected = {}", s(&p["expected"]));
            if let Some(f) = p["row_factors"].as_array().filter(|a| !a.is_empty()) {
                let f: Vec<String> = f.iter().map(|x| format!("({})", s(x))).collect();
                let _ = writeln!(out, "row factors: {}", f.join(" "));
                let _ = writeln!(out, "reduced det = {}", s(&p["reduced_determinant"]));
            }
            let _ = writeln!(out, "{}", verdict(p));
        }
        "quillen" => {
            let q = &p["presentation"];
            let _ = writeln!(out, "Spin({}): h = {}, extra generator in degree {}", s(&q["n"]), s(&q["h"]), s(&q["extra_degree"]));
            let _ = writeln!(out, "regular sequence degrees: {}", list(&q["theta_degrees"]));
            for r in p["rows"].as_array().into_iter().flatten() {
                let _ = writeln!(out, "{:>4} {}", s(&r["degree"]), s(&r["dim"]));
            }
        }
        "spin-compare" => {
            let _ = writeln!(out, "D_top = {}", s(&p["D_top"]));
            let _ = writeln!(out, "D_low = {}", s(&p["D_low"]));
            let _ = writeln!(out, "D_dR_lower = {}", s(&p["D_dR_lower"]));
            let _ = writeln!(out, "verdict: {}", s(&p["verdict"]));
        }
        "selftest" => {
            for c in p["checks"].as_array().into_iter().flatten() {
                let tag = if c["ok"].as_bool().unwrap_or(false) { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{tag} {}", s(&c["check"]));
            }
            let _ = writeln!(out, "seed {}", s(&p["seed"]));
        }
        _ => {
            let _ = writeln!(out, "{p}");
        }
    }
    out
}

pub fn csv(report: &Report) -> Option<String> {
    let p = &report.payload;
    let (header, keys): (&str, &[&str]) = match report.command {
        "invariants" | "inv2-check" => ("degree,expected,span_rank,invariants,ok", &["degree", "expected", "span_rank", "invariants", "ok"]),
        "ring" | "quillen" => ("degree,dim", &["degree", "dim"]),
        _ => return None,
    };
    let mut out = String::from(header);
    out.push('\n');
    for r in p["rows"].as_array().into_iter().flatten() {
        let cells: Vec<String> = keys.iter().map(|k| s(&r[*k])).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    Some(out)
}
