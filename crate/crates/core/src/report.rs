//! Canonical JSON and text renderings of decompositions, property reports
//! and regularity reports.
//!
//! JSON objects are built as [`serde_json::Value`] maps, whose keys are kept
//! sorted, so equal reports always serialize to identical bytes. Rationals
//! are written as strings (`"3/2"`), points as integer arrays.

use serde_json::{json, Map, Value};

use crate::decomposition::{Decomposition, MonomialIdeal, Summand};
use crate::homology::{RegularityReport, SummandRegularity};
use crate::lattice::RatVector;
use crate::properties::{show, PropertyReport, Verdict, Witness};
use crate::semigroup::Point;

/// Names of the five properties, in report order.
pub const PROPERTY_NAMES: [&str; 5] = ["seminormal", "normal", "cohenMacaulay", "buchsbaum", "gorenstein"];

pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

fn rationals(v: &RatVector) -> Value {
    Value::Array(v.0.iter().map(|x| Value::String(x.to_string())).collect())
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    json!({
        "numVars": ideal.num_vars(),
        "generators": ideal.generators(),
    })
}

pub fn input_json(name: Option<&str>, generators: &[Point]) -> Value {
    let mut m = Map::new();
    m.insert("generators".into(), json!(generators));
    if let Some(name) = name {
        m.insert("name".into(), json!(name));
    }
    Value::Object(m)
}

fn summand_json(s: &Summand, verbose: bool) -> Value {
    let mut m = Map::new();
    m.insert("coset".into(), json!(s.coset));
    m.insert("representative".into(), json!(s.representative));
    m.insert("gamma".into(), json!(s.gamma));
    m.insert("shift".into(), json!(s.shift));
    m.insert("shiftDegree".into(), json!(s.shift_degree));
    m.insert("ideal".into(), ideal_json(&s.ideal));
    if verbose {
        m.insert("shiftLambda".into(), rationals(&s.shift_lambda));
    }
    Value::Object(m)
}

pub fn decomposition_json(dec: &Decomposition, verbose: bool) -> Value {
    json!({
        "frame": dec.frame.elements(),
        "groupOrder": dec.group_order,
        "invariantFactors": dec.invariant_factors,
        "summands": dec.summands.iter().map(|s| summand_json(s, verbose)).collect::<Vec<_>>(),
    })
}

pub fn witness_json(w: &Witness) -> Value {
    let mut v = match w {
        Witness::Lambda { element, lambda } => json!({
            "kind": "Lambda",
            "element": element,
            "lambda": rationals(lambda),
        }),
        Witness::NonUnitIdeal { coset, shift, ideal } => json!({
            "kind": "NonUnitIdeal",
            "coset": coset,
            "shift": shift,
            "ideal": ideal_json(ideal),
        }),
        Witness::NotUnitOrMaximal { coset, shift, ideal } => json!({
            "kind": "NotUnitOrMaximal",
            "coset": coset,
            "shift": shift,
            "ideal": ideal_json(ideal),
        }),
        Witness::ShiftCollision { shift, generator, sum } => json!({
            "kind": "ShiftCollision",
            "shift": shift,
            "generator": generator,
            "sum": sum,
        }),
        Witness::NonUniqueTop { candidates } => json!({
            "kind": "NonUniqueTop",
            "candidates": candidates,
        }),
        Witness::Unpaired { top, shift } => json!({
            "kind": "Unpaired",
            "top": top,
            "shift": shift,
        }),
    };
    v["message"] = json!(w.to_string());
    v
}

fn verdicts(r: &PropertyReport) -> [&Verdict; 5] {
    [&r.seminormal, &r.normal, &r.cohen_macaulay, &r.buchsbaum, &r.gorenstein]
}

pub fn properties_json(r: &PropertyReport) -> Value {
    let mut m = Map::new();
    let mut witnesses = Map::new();
    for (name, v) in PROPERTY_NAMES.iter().zip(verdicts(r)) {
        m.insert((*name).into(), json!(v.holds));
        if let Some(w) = &v.witness {
            witnesses.insert((*name).into(), witness_json(w));
        }
    }
    m.insert("witnesses".into(), Value::Object(witnesses));
    Value::Object(m)
}

fn summand_regularity_json(s: &SummandRegularity) -> Value {
    json!({
        "coset": s.coset,
        "idealRegularity": s.ideal_regularity,
        "shiftDegree": s.shift_degree,
        "depth": s.depth,
    })
}

pub fn regularity_json(r: &RegularityReport, characteristic: u64, verbose: bool) -> Value {
    let mut v = json!({
        "reg": r.regularity,
        "degree": r.degree,
        "codim": r.codim,
        "bound": r.eg_bound,
        "egHolds": r.eg_holds,
        "depth": r.depth,
        "characteristic": characteristic,
        "witnesses": r.witnesses.iter().map(|w| json!(w.coset)).collect::<Vec<_>>(),
    });
    if verbose {
        v["summands"] = Value::Array(r.summands.iter().map(summand_regularity_json).collect());
    }
    v
}

pub fn eg_json(r: &RegularityReport) -> Value {
    json!({
        "reg": r.regularity,
        "bound": r.eg_bound,
        "holds": r.eg_holds,
    })
}

fn key_text(p: &[i64]) -> String {
    if p.iter().all(|&x| x == 0) {
        "0".to_string()
    } else {
        show(p)
    }
}

/// Hash-table display: `representative => {ideal, shift}`, one summand per
/// line, sorted by representative with the identity coset last.
pub fn decomposition_text(dec: &Decomposition, verbose: bool) -> String {
    let mut rows: Vec<&Summand> = dec.summands.iter().collect();
    rows.sort_by(|a, b| {
        let za = a.representative.iter().all(|&x| x == 0);
        let zb = b.representative.iter().all(|&x| x == 0);
        za.cmp(&zb).then_with(|| a.representative.cmp(&b.representative))
    });
    let mut out = String::from("HashTable{");
    for (i, s) in rows.iter().enumerate() {
        if i > 0 {
            out.push_str("\n          ");
        }
        out.push_str(&format!(
            "{} => {{{}, {}}}",
            key_text(&s.representative),
            s.ideal,
            key_text(&s.shift)
        ));
        if verbose {
            out.push_str(&format!(" -- lambda {}", s.shift_lambda));
        }
    }
    out.push_str("}\n");
    out
}

pub fn properties_text(r: &PropertyReport) -> String {
    let mut out = String::new();
    for (name, v) in PROPERTY_NAMES.iter().zip(verdicts(r)) {
        out.push_str(&format!("{name}: {}\n", v.holds));
        if let Some(w) = &v.witness {
            out.push_str(&format!("  witness: {w}\n"));
        }
    }
    out
}

pub fn regularity_text(r: &RegularityReport, characteristic: u64, verbose: bool) -> String {
    let witnesses: Vec<String> = r.witnesses.iter().map(|w| w.coset.to_string()).collect();
    let mut out = format!(
        "reg: {}\ndegree: {}\ncodim: {}\nbound: {}\negHolds: {}\ndepth: {}\ncharacteristic: {}\nwitnesses: {}\n",
        r.regularity,
        r.degree,
        r.codim,
        r.eg_bound,
        r.eg_holds,
        r.depth,
        characteristic,
        witnesses.join(" ")
    );
    if verbose {
        for s in &r.summands {
            out.push_str(&format!(
                "  coset {}: reg I = {}, deg h = {}, depth I = {}\n",
                s.coset, s.ideal_regularity, s.shift_degree, s.depth
            ));
        }
    }
    out
}

pub fn eg_text(r: &RegularityReport) -> String {
    format!("reg: {}\nbound: {}\nholds: {}\n", r.regularity, r.eg_bound, r.eg_holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::decompose;
    use crate::homology::{analyze, Characteristic};
    use crate::properties::full_report;
    use crate::semigroup::tests::worked_example;

    #[test]
    fn hash_table_matches_session_display() {
        let dec = decompose(&worked_example()).unwrap();
        let text = decomposition_text(&dec, false);
        let lines: Vec<&str> = text.lines().map(str::trim).collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[0], "HashTable{(-1,0,1) => {ideal 1, (3,0,1)}");
        assert!(lines.contains(&"(-1,2,-1) => {ideal 1, (3,2,3)}"));
        assert!(lines.contains(&"(2,2,0) => {ideal 1, (2,2,4)}"));
        assert!(lines
            .iter()
            .any(|l| l.starts_with("(2,0,2) => {ideal (") && l.ends_with(", (2,0,2)}")));
        assert_eq!(lines[7], "0 => {ideal 1, 0}}");
    }

    #[test]
    fn json_keys_are_sorted_and_stable() {
        let b = worked_example();
        let dec = decompose(&b).unwrap();
        let a = to_canonical_string(&decomposition_json(&dec, true));
        let again = to_canonical_string(&decomposition_json(&decompose(&b).unwrap(), true));
        assert_eq!(a, again);
        let v: Value = serde_json::from_str(&a).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["frame", "groupOrder", "invariantFactors", "summands"]);
        assert_eq!(v["groupOrder"], 8);
        assert_eq!(v["invariantFactors"], json!([2, 4]));
    }

    #[test]
    fn property_and_regularity_documents() {
        let b = worked_example();
        let p = properties_json(&full_report(&b).unwrap());
        assert_eq!(p["seminormal"], false);
        assert_eq!(p["buchsbaum"], true);
        assert_eq!(p["witnesses"]["seminormal"]["element"], json!([6, 0, 2]));
        assert_eq!(p["witnesses"]["seminormal"]["lambda"], json!(["3/2", "0", "1/2"]));
        assert!(p["witnesses"].get("buchsbaum").is_none());

        let r = analyze(&b, Characteristic::ZERO).unwrap();
        let v = regularity_json(&r, 0, false);
        assert_eq!(v["reg"], 2);
        assert_eq!(v["bound"], 4);
        assert_eq!(v["depth"], 1);
        assert_eq!(eg_json(&r), json!({"reg": 2, "bound": 4, "holds": true}));
        assert_eq!(eg_text(&r), "reg: 2\nbound: 4\nholds: true\n");
    }
}
