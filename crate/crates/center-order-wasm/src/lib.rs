//! Browser bindings: thin JSON-string wrappers over the center-order
//! library for the static demo page in `static/`.
//!
//! The functions are ordinary Rust functions so the crate builds and tests
//! on native targets; the wasm-bindgen attribute only applies when compiled
//! for wasm32 (`wasm-pack build --target web` produces the JS glue).

use center_order::catalog::{Catalog, Sides};
use center_order::decide::{compare_2d, compare_iso, CenterId, OrderKind};
use center_order::families::{SamplePlan, TriangleFamily};
use center_order::geom::{above_bc, normalize, region_of, signed_height_ratio, SideOfBC};
use center_order::render::{render_svg, CenterMark, FigureSpec};
use serde_json::json;
use std::str::FromStr;

#[cfg(target_arch = "wasm32")]
use wasm_bindgen::prelude::wasm_bindgen;

fn err_json(msg: impl std::fmt::Display) -> String {
    json!({"error": msg.to_string()}).to_string()
}

fn parse_sides(a: &str, b: &str, c: &str) -> Result<Sides, String> {
    let p = |s: &str| {
        center_order::exactnum::Rat::from_str(s.trim())
            .map_err(|_| format!("not a rational number: {:?}", s))
    };
    Sides::new(p(a)?, p(b)?, p(c)?).map_err(|e| e.to_string())
}

/// Evaluate center X_n at rational sides; returns coordinates, region
/// information, and the signed height ratio as a JSON string.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn eval_center(n: u32, a: &str, b: &str, c: &str) -> String {
    let cat = Catalog::bundled();
    let s = match parse_sides(a, b, c) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let p = match cat.eval_center(n, &s) {
        Ok(p) => p,
        Err(e) => return err_json(e),
    };
    let q = |v: &center_order::exactnum::QuadExt| {
        json!({
            "rational": v.rational_part.to_string(),
            "radical": v.radical_part.to_string(),
            "radicand": v.radicand.to_string(),
            "approx": v.to_f64(),
        })
    };
    let mut out = json!({
        "center": format!("X{}", n),
        "exact": [q(&p.u), q(&p.v), q(&p.w)],
        "at_infinity": p.coordinate_sum().sign() == 0,
    });
    if let Ok(pn) = normalize(&p) {
        out["normalized_approx"] = json!([pn.u.to_f64(), pn.v.to_f64(), pn.w.to_f64()]);
        let reg = region_of(&p).expect("finite");
        out["region"] = json!([reg.sign_u, reg.sign_v, reg.sign_w]);
        out["rho_approx"] = json!(signed_height_ratio(&p).expect("finite").rho.to_f64());
        out["side_of_bc"] = json!(match above_bc(&p) {
            SideOfBC::Above => "above",
            SideOfBC::On => "on",
            SideOfBC::Below => "below",
            SideOfBC::AtInfinity => "at-infinity",
        });
    }
    out.to_string()
}

/// Compare X_m and X_n under an order ("isosceles", "vertex", "side",
/// "trace"); browser-sized sampling budgets. Returns the verdict JSON.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn compare_centers(order: &str, m: &str, n: &str) -> String {
    let cat = Catalog::bundled();
    let kind = match OrderKind::from_str(order) {
        Ok(k) => k,
        Err(e) => return err_json(e),
    };
    let (m, n) = match (CenterId::from_str(m), CenterId::from_str(n)) {
        (Ok(m), Ok(n)) => (m, n),
        (Err(e), _) | (_, Err(e)) => return err_json(e),
    };
    let verdict = match kind {
        OrderKind::Isosceles => compare_iso(&cat, &m, &n, TriangleFamily::TallIsosceles),
        _ => {
            // Small deterministic budget; certification by subdivision is
            // too slow for a click handler.
            let plan = SamplePlan {
                grid_density: 12,
                random_count: 400,
                rng_seed: 0,
                denominator_bound: 100,
            };
            compare_2d(&cat, kind, &m, &n, &plan, 0)
        }
    };
    match verdict {
        Ok(v) => v.to_json(kind, &m, &n).to_string(),
        Err(e) => err_json(e),
    }
}

/// Render a triangle with the given centers (comma-separated indices) as an
/// SVG document string.
#[cfg_attr(target_arch = "wasm32", wasm_bindgen)]
pub fn render_figure(
    a: &str,
    b: &str,
    c: &str,
    centers: &str,
    traces: bool,
) -> String {
    let cat = Catalog::bundled();
    let s = match parse_sides(a, b, c) {
        Ok(s) => s,
        Err(e) => return err_json(e),
    };
    let mut marks = vec![];
    for part in centers.split(',') {
        let t = part.trim().trim_start_matches('X');
        if t.is_empty() {
            continue;
        }
        match t.parse::<u32>() {
            Ok(n) => marks.push(CenterMark::labeled(n)),
            Err(_) => return err_json(format!("bad center index {:?}", part)),
        }
    }
    let mut spec = FigureSpec::new(s, marks);
    spec.show_traces = traces;
    spec.width = 560;
    spec.height = 420;
    match render_svg(&spec, &cat) {
        Ok(svg) => svg,
        Err(e) => err_json(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_json_roundtrip() {
        let out = eval_center(2, "3", "4", "5");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["normalized_approx"][0], 1.0 / 3.0);
        assert_eq!(v["at_infinity"], false);
    }

    #[test]
    fn compare_json() {
        let out = compare_centers("iso", "20", "22");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "certified-precedes");
    }

    #[test]
    fn render_svg_string() {
        let svg = render_figure("3", "4", "5", "1, 2, 3", true);
        assert!(svg.starts_with("<svg"), "{}", &svg[..svg.len().min(80)]);
    }

    #[test]
    fn errors_become_json() {
        let v: serde_json::Value =
            serde_json::from_str(&eval_center(2, "1", "1", "5")).unwrap();
        assert!(v["error"].as_str().unwrap().contains("triangle"));
    }
}
