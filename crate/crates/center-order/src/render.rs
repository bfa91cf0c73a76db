//! SVG figures: a triangle with labeled centers, optional cevian traces to
//! side BC, and optional distance bands around vertex A.
//!
//! All geometry stays exact until the final pixel conversion; the SVG layer
//! only ever sees 64-bit floats.

use crate::catalog::{Catalog, CatalogError, Sides};
use crate::geom::{atrace, point_cartesian_f64, triangle_cartesian_f64};
use std::fmt::Write as _;
use thiserror::Error;

/// One center to draw.
#[derive(Clone, Debug)]
pub struct CenterMark {
    pub n: u32,
    pub label: bool,
}

impl CenterMark {
    pub fn labeled(n: u32) -> Self {
        CenterMark { n, label: true }
    }
}

#[derive(Clone, Debug)]
pub struct FigureSpec {
    pub sides: Sides,
    pub centers: Vec<CenterMark>,
    /// Draw the cevian from A through each center and mark its trace on BC.
    pub show_traces: bool,
    /// Draw a circle around A through each center (the vertex-order bands).
    pub show_bands: bool,
    pub width: u32,
    pub height: u32,
    pub margin: f64,
}

impl FigureSpec {
    pub fn new(sides: Sides, centers: Vec<CenterMark>) -> Self {
        FigureSpec {
            sides,
            centers,
            show_traces: false,
            show_bands: false,
            width: 640,
            height: 480,
            margin: 40.0,
        }
    }
}

#[derive(Debug, Error)]
pub enum RenderError {
    #[error("canvas dimensions must be positive")]
    BadCanvas,
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Where one requested center ended up.
#[derive(Clone, Debug)]
pub enum PlacedCenter {
    At { n: u32, xy: [f64; 2], trace: Option<[f64; 2]> },
    /// Off the canvas; position kept for the margin note. The trace can
    /// still land on the visible stretch of line BC and is drawn if so.
    Clipped { n: u32, xy: [f64; 2], trace: Option<[f64; 2]> },
    AtInfinity { n: u32 },
}

/// Pixel-space layout: triangle vertices A, B, C and each center's fate.
/// Separated from the SVG text so the placement logic is testable without
/// parsing markup.
#[derive(Clone, Debug)]
pub struct Layout {
    pub a: [f64; 2],
    pub b: [f64; 2],
    pub c: [f64; 2],
    pub centers: Vec<PlacedCenter>,
    pub width: f64,
    pub height: f64,
}

/// Affine map from the Cartesian embedding (B at the origin, C on the x-axis,
/// A above) onto the canvas: uniform scale fitted to the triangle's bounding
/// box inside the margins, y flipped so A renders at the top.
struct Viewport {
    scale: f64,
    x0: f64,
    y0: f64,
    ox: f64,
    oy: f64,
}

impl Viewport {
    fn fit(pts: &[[f64; 2]], w: f64, h: f64, margin: f64) -> Viewport {
        let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in pts {
            xmin = xmin.min(p[0]);
            xmax = xmax.max(p[0]);
            ymin = ymin.min(p[1]);
            ymax = ymax.max(p[1]);
        }
        let sx = (w - 2.0 * margin) / (xmax - xmin).max(1e-12);
        let sy = (h - 2.0 * margin) / (ymax - ymin).max(1e-12);
        let scale = sx.min(sy);
        Viewport {
            scale,
            x0: xmin,
            y0: ymax,
            ox: margin,
            oy: margin,
        }
    }

    fn map(&self, p: [f64; 2]) -> [f64; 2] {
        [
            self.ox + (p[0] - self.x0) * self.scale,
            self.oy + (self.y0 - p[1]) * self.scale,
        ]
    }
}

pub fn layout(spec: &FigureSpec, cat: &Catalog) -> Result<Layout, RenderError> {
    if spec.width == 0 || spec.height == 0 {
        return Err(RenderError::BadCanvas);
    }
    let (w, h) = (spec.width as f64, spec.height as f64);
    let (va, vb, vc) = triangle_cartesian_f64(&spec.sides);
    let vp = Viewport::fit(&[va, vb, vc], w, h, spec.margin);
    let on_canvas = |p: [f64; 2]| {
        p[0].is_finite()
            && p[1].is_finite()
            && p[0] >= 0.0
            && p[0] <= w
            && p[1] >= 0.0
            && p[1] <= h
    };
    let mut centers = vec![];
    for cm in &spec.centers {
        let p = cat.eval_center(cm.n, &spec.sides)?;
        let cart = match point_cartesian_f64(&p, &spec.sides) {
            Some(xy) => xy,
            None => {
                centers.push(PlacedCenter::AtInfinity { n: cm.n });
                continue;
            }
        };
        let xy = vp.map(cart);
        let trace = if spec.show_traces {
            atrace(&p)
                .ok()
                .and_then(|t| point_cartesian_f64(&t, &spec.sides))
                .map(|t| vp.map(t))
        } else {
            None
        };
        if on_canvas(xy) {
            centers.push(PlacedCenter::At {
                n: cm.n,
                xy,
                trace,
            });
        } else {
            centers.push(PlacedCenter::Clipped { n: cm.n, xy, trace });
        }
    }
    Ok(Layout {
        a: vp.map(va),
        b: vp.map(vb),
        c: vp.map(vc),
        centers,
        width: w,
        height: h,
    })
}

fn fmt2(v: f64) -> String {
    format!("{:.2}", v)
}

/// Render the figure as an SVG 1.1 document.
pub fn render_svg(spec: &FigureSpec, cat: &Catalog) -> Result<String, RenderError> {
    let lay = layout(spec, cat)?;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(
        s,
        r#"  <polygon points="{},{} {},{} {},{}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        fmt2(lay.a[0]),
        fmt2(lay.a[1]),
        fmt2(lay.b[0]),
        fmt2(lay.b[1]),
        fmt2(lay.c[0]),
        fmt2(lay.c[1])
    );
    for (name, p, dx, dy) in [
        ("A", lay.a, 0.0, -8.0),
        ("B", lay.b, -12.0, 12.0),
        ("C", lay.c, 8.0, 12.0),
    ] {
        let _ = writeln!(
            s,
            r#"  <text x="{}" y="{}" font-size="14" text-anchor="middle">{}</text>"#,
            fmt2(p[0] + dx),
            fmt2(p[1] + dy),
            name
        );
    }
    let mut notes: Vec<String> = vec![];
    for (i, pc) in lay.centers.iter().enumerate() {
        match pc {
            PlacedCenter::At { n, xy, trace } => {
                if spec.show_bands {
                    let r = ((xy[0] - lay.a[0]).powi(2)
                        + (xy[1] - lay.a[1]).powi(2))
                    .sqrt();
                    let _ = writeln!(
                        s,
                        r##"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="#999" stroke-width="0.5"/>"##,
                        fmt2(lay.a[0]),
                        fmt2(lay.a[1]),
                        fmt2(r)
                    );
                }
                if let Some(t) = trace {
                    let _ = writeln!(
                        s,
                        r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888" stroke-width="0.75" stroke-dasharray="4 3"/>"##,
                        fmt2(lay.a[0]),
                        fmt2(lay.a[1]),
                        fmt2(t[0]),
                        fmt2(t[1])
                    );
                    let _ = writeln!(
                        s,
                        r##"  <rect x="{}" y="{}" width="5" height="5" fill="#c33"/>"##,
                        fmt2(t[0] - 2.5),
                        fmt2(t[1] - 2.5)
                    );
                }
                let _ = writeln!(
                    s,
                    r##"  <circle cx="{}" cy="{}" r="3" fill="#226"/>"##,
                    fmt2(xy[0]),
                    fmt2(xy[1])
                );
                if spec.centers[i].label {
                    // Deterministic radial offset by list position keeps
                    // crowded labels apart without a collision solver.
                    let ang = (i as f64) * 2.399963; // golden angle
                    let (dx, dy) = (11.0 * ang.cos(), 11.0 * ang.sin());
                    let _ = writeln!(
                        s,
                        r#"  <text x="{}" y="{}" font-size="11" text-anchor="middle">X{}</text>"#,
                        fmt2(xy[0] + dx),
                        fmt2(xy[1] + dy),
                        n
                    );
                }
            }
            PlacedCenter::Clipped { n, xy, trace } => {
                if let Some(t) = trace {
                    if t[0] >= 0.0 && t[0] <= lay.width && t[1] >= 0.0 && t[1] <= lay.height {
                        let _ = writeln!(
                            s,
                            r##"  <rect x="{}" y="{}" width="5" height="5" fill="#c33"/>"##,
                            fmt2(t[0] - 2.5),
                            fmt2(t[1] - 2.5)
                        );
                    }
                }
                notes.push(format!(
                    "X{} outside the canvas (at {}, {})",
                    n,
                    fmt2(xy[0]),
                    fmt2(xy[1])
                ));
            }
            PlacedCenter::AtInfinity { n } => {
                notes.push(format!("X{} lies at infinity (omitted)", n));
            }
        }
    }
    for (j, note) in notes.iter().enumerate() {
        let _ = writeln!(
            s,
            r##"  <text x="6" y="{}" font-size="10" fill="#555">{}</text>"##,
            fmt2(lay.height - 6.0 - 12.0 * (notes.len() - 1 - j) as f64),
            note
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Exact Cartesian embedding checks live in geom; this asserts the rendered
/// pixel point is the barycentric combination of the rendered vertices.
pub fn bary_combination_residual(
    lay: &Layout,
    p_norm: (&f64, &f64, &f64),
    xy: [f64; 2],
) -> f64 {
    let (u, v, w) = p_norm;
    let ex = u * lay.a[0] + v * lay.b[0] + w * lay.c[0] - xy[0];
    let ey = u * lay.a[1] + v * lay.b[1] + w * lay.c[1] - xy[1];
    (ex * ex + ey * ey).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::geom::normalize;

    fn cat() -> Catalog {
        Catalog::bundled()
    }

    fn spec_345(ns: &[u32]) -> FigureSpec {
        FigureSpec::new(
            Sides::from_i64(3, 4, 5).unwrap(),
            ns.iter().map(|&n| CenterMark::labeled(n)).collect(),
        )
    }

    #[test]
    fn interior_centers_drawn_with_labels() {
        let svg = render_svg(&spec_345(&[1, 2, 3]), &cat()).unwrap();
        assert_eq!(svg.matches(r#"r="3""#).count(), 3);
        for n in [1, 2, 3] {
            assert!(svg.contains(&format!(">X{}<", n)), "missing X{}", n);
        }
    }

    #[test]
    fn x23_trace_lands_past_c() {
        let mut spec = FigureSpec::new(
            Sides::from_i64(11, 12, 16).unwrap(),
            vec![CenterMark::labeled(23)],
        );
        spec.show_traces = true;
        let lay = layout(&spec, &cat()).unwrap();
        // The center itself sits far outside the view; the trace on BC is
        // the interesting part and lies beyond C.
        let t = match &lay.centers[0] {
            PlacedCenter::At { trace: Some(t), .. }
            | PlacedCenter::Clipped { trace: Some(t), .. } => *t,
            other => panic!("expected a trace, got {:?}", other),
        };
        assert!(t[0] > lay.c[0], "trace {:?} vs C {:?}", t, lay.c);
    }

    #[test]
    fn at_infinity_gets_a_note() {
        let svg = render_svg(&spec_345(&[2, 30]), &cat()).unwrap();
        assert!(svg.contains("X30 lies at infinity"));
    }

    #[test]
    fn output_is_well_formed_xml() {
        let mut spec = spec_345(&[1, 2, 3, 4, 5, 6, 13, 30]);
        spec.show_traces = true;
        spec.show_bands = true;
        let svg = render_svg(&spec, &cat()).unwrap();
        roxmltree::Document::parse(&svg).unwrap();
    }

    #[test]
    fn vertex_pixel_distances_match_sides() {
        let spec = spec_345(&[]);
        let lay = layout(&spec, &cat()).unwrap();
        let d = |p: [f64; 2], q: [f64; 2]| {
            ((p[0] - q[0]).powi(2) + (p[1] - q[1]).powi(2)).sqrt()
        };
        // Uniform scaling preserves the side ratios 3 : 4 : 5.
        let (da, db, dc) = (d(lay.b, lay.c), d(lay.c, lay.a), d(lay.a, lay.b));
        assert!((db / da - 4.0 / 3.0).abs() < 1e-9);
        assert!((dc / da - 5.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn rendered_point_is_barycentric_combination() {
        let spec = spec_345(&[7]);
        let c = cat();
        let lay = layout(&spec, &c).unwrap();
        let p = c
            .eval_center(7, &Sides::from_i64(3, 4, 5).unwrap())
            .unwrap();
        let pn = normalize(&p).unwrap();
        let (u, v, w) = (pn.u.to_f64(), pn.v.to_f64(), pn.w.to_f64());
        match &lay.centers[0] {
            PlacedCenter::At { xy, .. } => {
                let r = bary_combination_residual(&lay, (&u, &v, &w), *xy);
                assert!(r < 1e-9, "residual {}", r);
            }
            other => panic!("{:?}", other),
        }
        let _ = rat(0);
    }
}
