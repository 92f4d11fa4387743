//! Browser bindings for the demo page in `www/`.
//!
//! Every export returns a JSON string; errors become thrown JS strings.

use std::collections::BTreeMap;

use cobweb::{
    binomial_triangle, count_paths, enumerate, is_admissible, min_successor_exponent,
    path_to_sequence, sample_random, EnumerationConfig, FSequence, TreePath,
};
use num_bigint::BigInt;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest triangle the page renders.
const MAX_ROWS: usize = 40;
/// Leaf budget for the tree view.
const MAX_LEAVES: usize = 500;

fn parse_terms(text: &str) -> Result<FSequence, String> {
    let values = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| format!("'{s}' is not an integer"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    FSequence::new(values).map_err(|e| e.to_string())
}

/// The F-nomial triangle of a comma/space separated sequence, with the
/// admissibility verdict and the first failing cell.
pub fn triangle_json(terms: &str) -> Result<String, String> {
    let seq = parse_terms(terms)?;
    if seq.len() > MAX_ROWS {
        return Err(format!("at most {MAX_ROWS} terms"));
    }
    let report = is_admissible(&seq);
    let rows = binomial_triangle(&seq, seq.len()).map_err(|e| e.to_string())?;
    let rows: Vec<Vec<Value>> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| json!({ "value": v.to_string(), "integer": v.is_integer() }))
                .collect()
        })
        .collect();
    Ok(json!({
        "admissible": report.admissible,
        "first_failure": report.first_failure.map(|(n, k)| json!({ "n": n, "k": k })),
        "witness": report.witness_value.map(|w| w.to_string()),
        "rows": rows,
    })
    .to_string())
}

/// The capped tree as a node list (`id`, `parent`, `depth`, `weight`, `label`),
/// truncated after `MAX_LEAVES` leaves.
pub fn tree_json(depth: usize, cap: u64, prime: u32) -> Result<String, String> {
    let p = prime.into();
    let config = EnumerationConfig::new(depth, cap);
    let total = count_paths(&config);
    let mut ids: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut nodes =
        vec![json!({ "id": 0, "parent": null, "depth": 0, "weight": 0, "label": "root" })];
    ids.insert(vec![], 0);
    let mut leaves = 0;
    for path in enumerate(&config).take(MAX_LEAVES) {
        let seq = path_to_sequence(&path, &p).map_err(|e| e.to_string())?;
        let w = path.weights();
        for d in 1..=w.len() {
            if ids.contains_key(&w[..d]) {
                continue;
            }
            let id = nodes.len();
            let parent = ids[&w[..d - 1]];
            nodes.push(json!({
                "id": id,
                "parent": parent,
                "depth": d,
                "weight": w[d - 1],
                "label": seq.terms()[d - 1].to_string(),
            }));
            ids.insert(w[..d].to_vec(), id);
        }
        leaves += 1;
    }
    Ok(json!({
        "count": total.to_string(),
        "shown": leaves,
        "truncated": (leaves as u128) < total,
        "nodes": nodes,
    })
    .to_string())
}

/// One random admissible path with the minimal successor at every step.
pub fn sample_json(depth: usize, mean: f64, seed: u64, prime: u32) -> Result<String, String> {
    let path = sample_random(depth, mean, seed).map_err(|e| e.to_string())?;
    let mut prefix = TreePath::root();
    let minima: Vec<u64> = path
        .weights()
        .iter()
        .map(|&w| {
            let m = min_successor_exponent(&prefix);
            prefix = prefix.extend(w).expect("sampled weights are admissible");
            m
        })
        .collect();
    let seq = path_to_sequence(&path, &prime.into()).map_err(|e| e.to_string())?;
    let terms: Vec<String> = seq.terms().iter().map(ToString::to_string).collect();
    Ok(json!({
        "weights": path.weights(),
        "minima": minima,
        "sequence": terms,
        "admissible": is_admissible(&seq).admissible,
    })
    .to_string())
}

#[wasm_bindgen]
pub fn triangle(terms: &str) -> Result<String, JsValue> {
    triangle_json(terms).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn tree(depth: usize, cap: u32, prime: u32) -> Result<String, JsValue> {
    tree_json(depth, cap.into(), prime).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sample(depth: usize, mean: f64, seed: u32, prime: u32) -> Result<String, JsValue> {
    sample_json(depth, mean, seed.into(), prime).map_err(|e| JsValue::from_str(&e))
}
