//! Browser bindings: plane colourings, bound tables and graph classification,
//! each returning JSON for the static page in `www/`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use hfw_core::bounds::best_known;
use hfw_core::constructions::{coloring_t17, coloring_t18, coloring_t19a};
use hfw_core::graph_class::{classify, from_graph6};

fn js_err(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ColoringView {
    n: usize,
    t: usize,
    colors: Vec<u8>,
    per_color: Vec<usize>,
    total: usize,
    /// `cliques[i]`: vertex lists of the maximal cliques of colour `i`.
    cliques: Vec<Vec<Vec<usize>>>,
}

/// A plane colouring (`family` is `t17`, `t18` or `t19a`) with its score.
pub fn plane_coloring_json(family: &str, q: u32) -> Result<String, String> {
    let c = match family {
        "t17" => coloring_t17(q as u64),
        "t18" => coloring_t18(q as u64),
        "t19a" => coloring_t19a(q as u64),
        other => return Err(format!("unknown family {other}")),
    }
    .map_err(|e| e.to_string())?;
    let score = c.score();
    let view = ColoringView {
        n: c.n(),
        t: c.t(),
        colors: c.colors().to_vec(),
        per_color: score.per_color.clone(),
        total: score.total,
        cliques: score
            .reports
            .iter()
            .map(|r| r.cliques.iter().map(|q| q.to_vec()).collect())
            .collect(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

pub fn bounds_json(r: usize, t: usize, from: usize, to: usize) -> Result<String, String> {
    if from == 0 || from > to || to - from > 500 {
        return Err("choose 1 <= from <= to with at most 500 orders".into());
    }
    let rows = (from..=to)
        .map(|n| best_known(r, t, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    serde_json::to_string(&rows).map_err(|e| e.to_string())
}

pub fn classify_json(graph6: &str) -> Result<String, String> {
    let g = from_graph6(graph6.trim()).map_err(|e| e.to_string())?;
    let rec = classify(&g).map_err(|e| e.to_string())?;
    serde_json::to_string(&rec).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = planeColoring)]
pub fn plane_coloring(family: &str, q: u32) -> Result<String, JsError> {
    plane_coloring_json(family, q).map_err(js_err)
}

#[wasm_bindgen(js_name = boundsTable)]
pub fn bounds_table(r: usize, t: usize, from: usize, to: usize) -> Result<String, JsError> {
    bounds_json(r, t, from, to).map_err(js_err)
}

#[wasm_bindgen(js_name = classifyGraph6)]
pub fn classify_graph6(graph6: &str) -> Result<String, JsError> {
    classify_json(graph6).map_err(js_err)
}
