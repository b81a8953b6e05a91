//! SVG rendering of geometric instances, optionally colored.
//!
//! Output is deterministic: fixed palette, fixed decimal precision, elements
//! emitted in object-id order. Colors beyond the fixed six-color palette
//! cycle through it; uncolored objects are gray.

use num_traits::ToPrimitive;

use crate::coloring::PartialColoring;
use crate::geometry::{GeoShape, GeometricInstance, GeometryError, Rational};

const PALETTE: [&str; 6] = [
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#f781bf",
];
const UNCOLORED: &str = "#9e9e9e";

fn fill_for(color: Option<usize>) -> &'static str {
    match color {
        Some(c) if c >= 1 => PALETTE[(c - 1) % PALETTE.len()],
        _ => UNCOLORED,
    }
}

fn approx(r: &Rational) -> f64 {
    r.to_f64().expect("coordinates fit in f64 for rendering")
}

/// Renders the instance as a standalone SVG document. Disks become circles,
/// squares become rects, intervals become horizontal segments stacked by id.
/// A legend maps palette swatches to color indices.
pub fn render_svg(
    inst: &GeometricInstance,
    coloring: Option<&PartialColoring>,
) -> Result<String, GeometryError> {
    if let Some(c) = coloring {
        if c.len() != inst.len() {
            return Err(GeometryError::ColoringSizeMismatch {
                coloring: c.len(),
                instance: inst.len(),
            });
        }
    }

    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    let mut include = |x: f64, y: f64| {
        min_x = min_x.min(x);
        max_x = max_x.max(x);
        min_y = min_y.min(y);
        max_y = max_y.max(y);
    };
    // Interval lane spacing keeps overlapping segments distinguishable.
    const LANE: f64 = 0.6;
    for obj in inst.objects() {
        match &obj.shape {
            GeoShape::Interval { lo, hi } => {
                include(approx(lo), LANE * obj.id as f64);
                include(approx(hi), LANE * obj.id as f64);
            }
            shape => {
                let c = shape.center().expect("2-D object");
                let e = approx(&shape.extent().expect("2-D object"));
                include(approx(&c.x) - e, approx(&c.y) - e);
                include(approx(&c.x) + e, approx(&c.y) + e);
            }
        }
    }
    if inst.is_empty() {
        min_x = 0.0;
        max_x = 1.0;
        min_y = 0.0;
        max_y = 1.0;
    }

    let legend_colors: usize = coloring.map_or(0, |c| c.max_color_used());
    let margin = 1.0;
    let legend_height = 1.2 * (legend_colors + 1) as f64;
    let view_x = min_x - margin;
    let view_y = -(max_y + margin);
    let view_w = (max_x - min_x) + 2.0 * margin;
    let view_h = (max_y - min_y) + 2.0 * margin + legend_height;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{view_x:.3} {view_y:.3} {view_w:.3} {view_h:.3}\" width=\"800\" height=\"{:.0}\">\n",
        800.0 * view_h / view_w.max(1e-9)
    ));

    // Flip y so larger y is drawn upward.
    out.push_str("  <g id=\"objects\">\n");
    for obj in inst.objects() {
        let color = coloring.and_then(|c| c.color(obj.id));
        let fill = fill_for(color);
        match &obj.shape {
            GeoShape::Interval { lo, hi } => {
                let y = -(LANE * obj.id as f64);
                out.push_str(&format!(
                    "    <line x1=\"{:.3}\" y1=\"{y:.3}\" x2=\"{:.3}\" y2=\"{y:.3}\" stroke=\"{fill}\" stroke-width=\"0.3\" stroke-linecap=\"round\"/>\n",
                    approx(lo),
                    approx(hi),
                ));
            }
            GeoShape::UnitDisk { center } | GeoShape::Disk { center, .. } => {
                let r = approx(&obj.shape.extent().expect("disk"));
                out.push_str(&format!(
                    "    <circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{r:.3}\" fill=\"{fill}\" fill-opacity=\"0.45\" stroke=\"#333333\" stroke-width=\"0.02\"/>\n",
                    approx(&center.x),
                    -approx(&center.y),
                ));
            }
            GeoShape::UnitSquare { center } | GeoShape::Square { center, .. } => {
                let h = approx(&obj.shape.extent().expect("square"));
                out.push_str(&format!(
                    "    <rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"{fill}\" fill-opacity=\"0.45\" stroke=\"#333333\" stroke-width=\"0.02\"/>\n",
                    approx(&center.x) - h,
                    -approx(&center.y) - h,
                    2.0 * h,
                    2.0 * h,
                ));
            }
        }
    }
    out.push_str("  </g>\n");

    out.push_str("  <g id=\"legend\" font-size=\"0.7\" font-family=\"sans-serif\">\n");
    let legend_x = min_x - margin + 0.5;
    let mut legend_y = -(min_y - margin) + 1.0;
    for c in 1..=legend_colors {
        out.push_str(&format!(
            "    <rect x=\"{legend_x:.3}\" y=\"{:.3}\" width=\"0.8\" height=\"0.8\" fill=\"{}\"/>\n",
            legend_y - 0.65,
            fill_for(Some(c)),
        ));
        out.push_str(&format!(
            "    <text x=\"{:.3}\" y=\"{legend_y:.3}\">color {c}</text>\n",
            legend_x + 1.1,
        ));
        legend_y += 1.2;
    }
    out.push_str(&format!(
        "    <rect x=\"{legend_x:.3}\" y=\"{:.3}\" width=\"0.8\" height=\"0.8\" fill=\"{UNCOLORED}\"/>\n",
        legend_y - 0.65,
    ));
    out.push_str(&format!(
        "    <text x=\"{:.3}\" y=\"{legend_y:.3}\">uncolored</text>\n",
        legend_x + 1.1,
    ));
    out.push_str("  </g>\n</svg>\n");
    Ok(out)
}
