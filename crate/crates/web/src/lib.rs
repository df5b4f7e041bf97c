//! Browser bindings. Each exported function returns a JSON "scene": vertex
//! positions, edges and the sets of a witness, ready for `www/main.js` to draw.
//!
//! Build with `wasm-pack build crates/web --target web --out-dir www/pkg`.

use std::f64::consts::PI;

use balanceable::witness::{circulant_witness, rect_grid_witness, tri_grid_witness};
use balanceable::{
    build_family, decide_balanceable, parse_edge_list, Budget, ConstructionResult, FamilyParams, Graph, Verdict,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest budget the page will ask for; beyond this the tab stalls.
pub const MAX_LOG2_BUDGET: u32 = 26;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Scene {
    pub title: String,
    pub n: usize,
    pub m: usize,
    pub positions: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
    pub verdict: String,
    pub case: Option<String>,
    pub cut_side: Vec<usize>,
    pub induced_set: Vec<usize>,
    pub independent_set: Vec<usize>,
    pub cut_edges: Option<usize>,
    pub induced_edges: Option<usize>,
    pub notes: Vec<String>,
}

fn circle(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|i| {
            let a = 2.0 * PI * i as f64 / n.max(1) as f64 - PI / 2.0;
            [a.cos(), a.sin()]
        })
        .collect()
}

fn rect_positions(rows: usize, cols: usize) -> Vec<[f64; 2]> {
    (0..rows * cols)
        .map(|v| [(v % cols) as f64, (v / cols) as f64])
        .collect()
}

/// Row `j` (1-based from the apex) holds `j` vertices, centered.
fn tri_positions(h: usize) -> Vec<[f64; 2]> {
    let mut out = Vec::with_capacity(h * (h + 1) / 2);
    for j in 1..=h {
        for i in 1..=j {
            out.push([i as f64 - (j as f64 + 1.0) / 2.0, (j - 1) as f64 * 3f64.sqrt() / 2.0]);
        }
    }
    out
}

fn layout(params: Option<&FamilyParams>, n: usize) -> Vec<[f64; 2]> {
    match params {
        Some(FamilyParams::RectGrid { rows, cols }) => rect_positions(*rows, *cols),
        Some(FamilyParams::TriGrid { h }) => tri_positions(*h),
        Some(FamilyParams::Wheel { rim }) => {
            let mut p = circle(*rim);
            p.push([0.0, 0.0]);
            p
        }
        _ => circle(n),
    }
}

fn base_scene(title: String, g: &Graph, positions: Vec<[f64; 2]>) -> Scene {
    Scene {
        title,
        n: g.n(),
        m: g.m(),
        positions,
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        verdict: String::new(),
        case: None,
        cut_side: vec![],
        induced_set: vec![],
        independent_set: vec![],
        cut_edges: None,
        induced_edges: None,
        notes: vec![],
    }
}

fn construction_scene(params: FamilyParams, r: ConstructionResult) -> Result<Scene, String> {
    let g = build_family(&params).map_err(|e| e.to_string())?;
    let mut s = base_scene(params.to_string(), &g, layout(Some(&params), g.n()));
    s.verdict = format!("{:?}", r.verdict);
    s.case = Some(r.lemma.to_string());
    if let Some(w) = &r.witness {
        s.cut_side = w.cut_side.to_vec();
        s.induced_set = w.induced_set.to_vec();
        s.cut_edges = Some(w.cut_edges);
        s.induced_edges = Some(w.induced_edges);
    }
    if let Some(i) = &r.independent_set {
        s.independent_set = i.to_vec();
    }
    s.notes = r.notes;
    Ok(s)
}

pub fn circulant_scene(k: usize, l: usize) -> Result<Scene, String> {
    let r = circulant_witness(k, l).map_err(|e| e.to_string())?;
    construction_scene(FamilyParams::Chorded { k, l }, r)
}

pub fn rect_grid_scene(rows: usize, cols: usize) -> Result<Scene, String> {
    let r = rect_grid_witness(rows, cols).map_err(|e| e.to_string())?;
    construction_scene(FamilyParams::RectGrid { rows, cols }, r)
}

pub fn tri_grid_scene(h: usize) -> Result<Scene, String> {
    let r = tri_grid_witness(h).map_err(|e| e.to_string())?;
    construction_scene(FamilyParams::TriGrid { h }, r)
}

/// `input` is a family spec, or edge-list text when it spans several lines.
pub fn classify_scene(input: &str, log2_budget: u32) -> Result<Scene, String> {
    let (title, params, g) = if input.trim().contains('\n') {
        let g = parse_edge_list(input).map_err(|e| e.to_string())?;
        (format!("edge list (n = {}, m = {})", g.n(), g.m()), None, g)
    } else {
        let params: FamilyParams = input.parse().map_err(|e: balanceable::Error| e.to_string())?;
        let g = build_family(&params).map_err(|e| e.to_string())?;
        (params.to_string(), Some(params), g)
    };
    let budget = Budget::from_log2(log2_budget.clamp(1, MAX_LOG2_BUDGET));
    let verdict = decide_balanceable(&g, budget);
    let mut s = base_scene(title, &g, layout(params.as_ref(), g.n()));
    s.verdict = verdict.to_string();
    match verdict {
        Verdict::Balanceable(w) => {
            s.cut_side = w.cut_side.to_vec();
            s.induced_set = w.induced_set.to_vec();
            s.cut_edges = Some(w.cut_edges);
            s.induced_edges = Some(w.induced_edges);
        }
        Verdict::NotBalanceable(o) => s.notes.push(o.detail),
        Verdict::Undecided(reason) => s.notes.push(reason),
    }
    Ok(s)
}

fn to_js(scene: Result<Scene, String>) -> Result<String, JsValue> {
    scene
        .map(|s| serde_json::to_string(&s).expect("scenes serialize"))
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn circulant(k: usize, l: usize) -> Result<String, JsValue> {
    to_js(circulant_scene(k, l))
}

#[wasm_bindgen]
pub fn rect_grid(rows: usize, cols: usize) -> Result<String, JsValue> {
    to_js(rect_grid_scene(rows, cols))
}

#[wasm_bindgen]
pub fn tri_grid(h: usize) -> Result<String, JsValue> {
    to_js(tri_grid_scene(h))
}

#[wasm_bindgen]
pub fn classify(input: &str, log2_budget: u32) -> Result<String, JsValue> {
    to_js(classify_scene(input, log2_budget))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_scene_carries_witness() {
        let s = circulant_scene(40, 8).unwrap();
        assert_eq!((s.n, s.m, s.positions.len()), (40, 80, 40));
        assert_eq!(s.case.as_deref(), Some("L16"));
        assert_eq!(s.cut_edges, Some(40));
        assert!(!s.independent_set.is_empty());
    }

    #[test]
    fn not_balanceable_scene_has_no_sets() {
        let s = circulant_scene(6, 2).unwrap();
        assert_eq!(s.verdict, "NotBalanceable");
        assert!(s.cut_side.is_empty() && s.induced_set.is_empty());
    }

    #[test]
    fn grid_layouts() {
        let s = rect_grid_scene(3, 5).unwrap();
        assert_eq!(s.positions[7], [2.0, 1.0]);
        let t = tri_grid_scene(9).unwrap();
        assert_eq!(t.positions.len(), 45);
        assert_eq!(t.positions[0], [0.0, 0.0]);
        assert!(tri_grid_scene(6).is_err());
    }

    #[test]
    fn classify_spec_and_edge_list() {
        let s = classify_scene("cycle:6", 20).unwrap();
        assert_eq!(s.verdict, "NotBalanceable (ParityEulerian)");
        let s = classify_scene("4 4\n0 1\n1 2\n2 3\n0 3\n", 20).unwrap();
        assert_eq!(s.verdict, "Balanceable");
        assert_eq!(s.cut_edges, Some(2));
        let s = classify_scene("wheel:5", 20).unwrap();
        assert_eq!(s.positions[5], [0.0, 0.0]);
        assert!(classify_scene("4 1\n0 9\n", 20).unwrap_err().contains("line 2"));
    }

    #[test]
    fn scenes_serialize() {
        let json = serde_json::to_value(tri_grid_scene(8).unwrap()).unwrap();
        assert_eq!(json["case"], "TriCase1");
        assert_eq!(json["edges"].as_array().unwrap().len(), 84);
    }
}
