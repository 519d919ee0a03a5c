//! wasm-bindgen bindings for the static page in `www/`.
//!
//! Every export returns a JSON string; errors become thrown JS strings.

use serde_json::{json, Value};
use typeb_cells::insertion::g_r;
use typeb_cells::partition::{rank_and_core, Partition};
use typeb_cells::perm::SignedPermutation;
use typeb_cells::symbols::{
    bipartition_to_partition, partition_to_bipartition, partition_to_symbol, sign_on_bipartition,
    WeightParams,
};
use typeb_cells::tableau::DominoTableau;
use wasm_bindgen::prelude::*;

/// Largest word accepted by the page; insertion itself has no limit.
pub const MAX_WORD: usize = 12;

fn grid(t: &DominoTableau) -> String {
    if t.shape().is_empty() {
        "(empty)".into()
    } else {
        t.render()
    }
}

pub fn insertion_json(word: &str, rank: usize) -> Result<Value, String> {
    let w: SignedPermutation = word.parse().map_err(|e| format!("{}", e))?;
    if w.n() > MAX_WORD {
        return Err(format!("at most {} letters", MAX_WORD));
    }
    let pair = g_r(&w, rank);
    Ok(json!({
        "word": w.to_string(),
        "rank": rank,
        "shape": pair.left.shape(),
        "insertion": grid(&pair.left),
        "recording": grid(&pair.right),
    }))
}

pub fn rank_core_json(parts: &str) -> Result<Value, String> {
    let p: Partition = parts.parse().map_err(|e| format!("{}", e))?;
    let d = rank_and_core(&p);
    Ok(json!({"partition": p, "rank": d.rank, "core": d.core, "dominoes": (p.size() - d.core.size()) / 2}))
}

pub fn symbol_json(parts: &str, a: u32, b: u32) -> Result<Value, String> {
    let p: Partition = parts.parse().map_err(|e| format!("{}", e))?;
    let wp = WeightParams::new(a, b).map_err(|e| format!("{}", e))?;
    let r = rank_and_core(&p).rank;
    let sym = partition_to_symbol(&p, wp.epsilon);
    let bp = partition_to_bipartition(&p);
    Ok(json!({
        "symbol": sym.render(),
        "defect": sym.defect(),
        "epsilon": wp.epsilon.to_string(),
        "bipartition": bp.to_string(),
        "sign": bipartition_to_partition(&sign_on_bipartition(&bp), r).to_string(),
    }))
}

fn to_js(v: Result<Value, String>) -> Result<String, JsValue> {
    v.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn insertion(word: &str, rank: usize) -> Result<String, JsValue> {
    to_js(insertion_json(word, rank))
}

#[wasm_bindgen]
pub fn rank_core(parts: &str) -> Result<String, JsValue> {
    to_js(rank_core_json(parts))
}

#[wasm_bindgen]
pub fn symbol(parts: &str, a: u32, b: u32) -> Result<String, JsValue> {
    to_js(symbol_json(parts, a, b))
}
