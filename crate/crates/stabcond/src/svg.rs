//! Plain SVG drawing of a model's edge registry. Edges carry the colour of
//! the kind of generator that acts on them with the highest priority
//! (walls, then ribbons, then promoted products, then bulk checks).

use std::fmt::Write;

use crate::group::Tag;
use crate::model::StabilizerModel;
use crate::pauli::{Orient, Qudit};

const CELL: f64 = 40.0;
const MARGIN: f64 = 20.0;

fn colour(tag: Option<Tag>) -> &'static str {
    match tag {
        Some(Tag::Wall) => "#d62728",
        Some(Tag::Ribbon) => "#9467bd",
        Some(Tag::Promoted) => "#ff7f0e",
        Some(Tag::Edge) => "#2ca02c",
        Some(Tag::Vertex | Tag::Plaquette) => "#1f77b4",
        None => "#bbbbbb",
    }
}

fn rank(t: Tag) -> u8 {
    match t {
        Tag::Wall => 5,
        Tag::Ribbon => 4,
        Tag::Promoted => 3,
        Tag::Edge => 2,
        Tag::Vertex | Tag::Plaquette => 1,
    }
}

fn strongest(model: &StabilizerModel, q: &Qudit) -> Option<Tag> {
    model.generators.iter().filter(|(g, _)| g.sites().contains_key(q)).map(|(_, t)| t).max_by_key(|t| rank(*t))
}

/// Layers are drawn side by side.
pub fn model_svg(model: &StabilizerModel) -> String {
    let (mut w, mut h, mut layers) = (1, 1, 1u8);
    for q in &model.qudits {
        w = w.max(q.x + 1);
        h = h.max(q.y + 1);
        layers = layers.max(q.layer + 1);
    }
    let shift = |q: &Qudit| (q.layer as i32 * (w + 1)) as f64 * CELL;
    let width = 2.0 * MARGIN + (layers as i32 * (w + 1)) as f64 * CELL;
    let height = 2.0 * MARGIN + (h as f64 + 1.0) * CELL;
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#);
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for q in &model.qudits {
        let (x0, y0) = (MARGIN + shift(q) + q.x as f64 * CELL, height - MARGIN - q.y as f64 * CELL);
        let (x1, y1) = match q.orient {
            Orient::H => (x0 + CELL, y0),
            Orient::V => (x0, y0 - CELL),
        };
        let c = colour(strongest(model, q));
        let _ = writeln!(s, r#"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="{c}" stroke-width="3"><title>{q}</title></line>"#);
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;
    use crate::model::{build_model, ModelKind};

    #[test]
    fn one_line_per_edge() {
        let m = build_model(ModelKind::ZdBulk { d: 2 }, LatticeSpec::torus(2, 3)).unwrap();
        let s = model_svg(&m);
        assert_eq!(s.matches("<line").count(), m.num_qudits());
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
    }
}
