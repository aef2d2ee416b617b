//! Deterministic SVG drawings of tilings.
//!
//! The embedding maps a cell vertex `(u, v)` (u in half-units, v in
//! units) to the pixel `(margin + u·side/2, margin + (2 - v)·side·√3/2)`.
//! Coordinates are rendered with three decimals, so output bytes are a
//! pure function of the complex, the tiling and the `RenderSpec`.

use std::fmt::Write as _;

use crate::engine::Tiling;
use crate::lattice::{Orientation, StripComplex};

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub side_px: f64,
    pub margin_px: f64,
    pub small_fill: String,
    pub large_up_fill: String,
    pub large_down_fill: String,
    pub stroke: String,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            side_px: 40.0,
            margin_px: 10.0,
            small_fill: "#f4f1e8".into(),
            large_up_fill: "#7fb3d5".into(),
            large_down_fill: "#f0b27a".into(),
            stroke: "#34495e".into(),
        }
    }
}

const ROW_HEIGHT: f64 = 0.866_025_403_784_438_6; // √3/2

impl RenderSpec {
    fn px(&self, u: i64, v: i64) -> (f64, f64) {
        (
            self.margin_px + u as f64 * self.side_px / 2.0,
            self.margin_px + (2 - v) as f64 * self.side_px * ROW_HEIGHT,
        )
    }
}

fn polygon(out: &mut String, spec: &RenderSpec, vertices: &[(i64, i64)], fill: &str) {
    out.push_str("<polygon points=\"");
    for (i, &(u, v)) in vertices.iter().enumerate() {
        let (x, y) = spec.px(u, v);
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x:.3},{y:.3}");
    }
    let _ = writeln!(
        out,
        "\" fill=\"{fill}\" stroke=\"{}\" stroke-width=\"1\"/>",
        spec.stroke
    );
}

/// Renders one tiling of a complex: a polygon per small tile and one
/// side-2 polygon per large placement.
pub fn render_svg(complex: &StripComplex, tiling: &Tiling, spec: &RenderSpec) -> String {
    let max_u = complex
        .cells()
        .iter()
        .map(|c| i64::from(c.index()) + 2)
        .max()
        .unwrap_or(0);
    let width = 2.0 * spec.margin_px + max_u as f64 * spec.side_px / 2.0;
    let height = 2.0 * spec.margin_px + 2.0 * spec.side_px * ROW_HEIGHT;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.3}\" \
         height=\"{height:.3}\" viewBox=\"0 0 {width:.3} {height:.3}\">"
    );
    if !complex.name().is_empty() {
        let _ = writeln!(out, "<title>{}</title>", complex.name());
    }
    for cell in tiling.small_cells(complex) {
        polygon(&mut out, spec, &cell.vertices(), &spec.small_fill);
    }
    for placement in tiling.larges() {
        let fill = match placement.orientation() {
            Orientation::Up => &spec.large_up_fill,
            Orientation::Down => &spec.large_down_fill,
        };
        polygon(&mut out, spec, &placement.hull(), fill);
    }
    out.push_str("</svg>\n");
    out
}
