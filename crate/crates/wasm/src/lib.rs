//! Browser bindings. Each export returns a JSON string; the plain Rust
//! functions underneath are what the tests call.

use std::f64::consts::TAU;

use chernkit::circleops::{self, kernel_dim_truncated, shipped_operator, LatticeOperator};
use chernkit::ncforms::verify::compute_odd_character_integrand;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest window the page may request; SVD cost grows cubically.
pub const MAX_WINDOW: usize = 96;

pub fn odd_character_curve(samples: usize) -> Result<Value, String> {
    let samples = samples.clamp(8, 2048);
    let oc = compute_odd_character_integrand().map_err(|e| e.to_string())?;
    let points: Vec<[f64; 2]> = (0..=samples)
        .map(|k| {
            let t = TAU * k as f64 / samples as f64;
            [t, oc.f.eval(t).re]
        })
        .collect();
    Ok(json!({
        "integrand": oc.f.to_string(),
        "integral": oc.integral.to_string(),
        "value": oc.integral.to_complex().re,
        "points": points,
    }))
}

/// `spec` is a shipped operator name or a JSON operator expression.
pub fn operator_index(spec: &str, n: usize) -> Result<Value, String> {
    let op = match shipped_operator(spec.trim()) {
        Some(op) => op,
        None => LatticeOperator::from_json(spec).map_err(|e| e.to_string())?,
    };
    let d = circleops::index_data(&op).map_err(|e| e.to_string())?;
    let n = n.clamp(op.bandwidth() + 1, MAX_WINDOW.max(op.bandwidth() + 1));
    let ker = kernel_dim_truncated(&op, n, 1e-8);
    let coker = kernel_dim_truncated(&op.adjoint(), n, 1e-8);
    Ok(json!({
        "windingMinus": d.winding_minus,
        "windingPlus": d.winding_plus,
        "index": d.index,
        "n": n,
        "kernelDim": ker,
        "adjointKernelDim": coker,
    }))
}

pub fn character(c1: f64, c2: f64) -> Value {
    let m = circleops::character_matrix(c1, c2).real_entries();
    let d = circleops::odd_character_derivation(c1, c2);
    json!({ "meanRecipe": m, "derivationRecipeColumn3": [d.re + 0.0, d.im + 0.0] })
}

fn to_js(r: Result<Value, String>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = oddCharacterCurve)]
pub fn odd_character_curve_js(samples: usize) -> Result<String, JsValue> {
    to_js(odd_character_curve(samples))
}

#[wasm_bindgen(js_name = operatorIndex)]
pub fn operator_index_js(spec: &str, n: usize) -> Result<String, JsValue> {
    to_js(operator_index(spec, n))
}

#[wasm_bindgen(js_name = characterMatrix)]
pub fn character_js(c1: f64, c2: f64) -> String {
    character(c1, c2).to_string()
}
