//! Square lattices with periodic or open sides.
//!
//! Vertex `(i, j)` sits at integer coordinates. `H(i, j)` runs from `(i, j)` to
//! `(i+1, j)`, `V(i, j)` from `(i, j)` to `(i, j+1)`. Cell `(i, j)` has bottom
//! `H(i, j)`, right `V(i+1, j)`, top `H(i, j+1)` and left `V(i, j)`.
//!
//! An open side is either `Smooth` (the boundary line of edges is kept) or
//! `Rough` (the edges along the boundary line are removed, leaving dangling
//! edges and plaquettes with three edges).

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pauli::{Orient, Qudit};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cut {
    #[default]
    Smooth,
    Rough,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub width: usize,
    pub height: usize,
    #[serde(default)]
    pub wrap_x: bool,
    #[serde(default)]
    pub wrap_y: bool,
    #[serde(default)]
    pub left: Cut,
    #[serde(default)]
    pub right: Cut,
    #[serde(default)]
    pub bottom: Cut,
    #[serde(default)]
    pub top: Cut,
}

impl LatticeSpec {
    pub fn torus(width: usize, height: usize) -> LatticeSpec {
        LatticeSpec { wrap_x: true, wrap_y: true, ..LatticeSpec::disk(width, height) }
    }

    /// Open on all four sides, smooth by default.
    pub fn disk(width: usize, height: usize) -> LatticeSpec {
        LatticeSpec { width, height, wrap_x: false, wrap_y: false, left: Cut::Smooth, right: Cut::Smooth, bottom: Cut::Smooth, top: Cut::Smooth }
    }

    /// Periodic in x, open at bottom and top.
    pub fn cylinder(width: usize, height: usize) -> LatticeSpec {
        LatticeSpec { wrap_x: true, ..LatticeSpec::disk(width, height) }
    }

    pub fn with_cuts(mut self, left: Cut, right: Cut, bottom: Cut, top: Cut) -> LatticeSpec {
        self.left = left;
        self.right = right;
        self.bottom = bottom;
        self.top = top;
        self
    }
}

/// Edge and orientation sign `+1`/`-1` inside a star or plaquette.
pub type Incidence = Vec<(Qudit, i64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeSpec", into = "LatticeSpec")]
pub struct Lattice {
    pub spec: LatticeSpec,
    edges: BTreeSet<Qudit>,
    vertices: Vec<(i32, i32)>,
    stars: Vec<(i32, i32)>,
    plaquettes: Vec<(i32, i32)>,
}

impl TryFrom<LatticeSpec> for Lattice {
    type Error = Error;
    fn try_from(spec: LatticeSpec) -> Result<Lattice> {
        Lattice::build(spec)
    }
}

impl From<Lattice> for LatticeSpec {
    fn from(l: Lattice) -> LatticeSpec {
        l.spec
    }
}

impl Lattice {
    pub fn build(spec: LatticeSpec) -> Result<Lattice> {
        if spec.width == 0 || spec.height == 0 {
            return Err(Error::InvalidLattice("width and height must be at least 1".into()));
        }
        let (w, h) = (spec.width as i32, spec.height as i32);
        let vx = if spec.wrap_x { w } else { w + 1 };
        let vy = if spec.wrap_y { h } else { h + 1 };
        let rough_row = |j: i32| !spec.wrap_y && ((j == 0 && spec.bottom == Cut::Rough) || (j == h && spec.top == Cut::Rough));
        let rough_col = |i: i32| !spec.wrap_x && ((i == 0 && spec.left == Cut::Rough) || (i == w && spec.right == Cut::Rough));
        let mut edges = BTreeSet::new();
        for j in 0..vy {
            for i in 0..w {
                if !rough_row(j) {
                    edges.insert(Qudit::h(i, j));
                }
            }
        }
        for j in 0..h {
            for i in 0..vx {
                if !rough_col(i) {
                    edges.insert(Qudit::v(i, j));
                }
            }
        }
        let mut vertices = Vec::new();
        let mut stars = Vec::new();
        for j in 0..vy {
            for i in 0..vx {
                vertices.push((i, j));
                if !rough_row(j) && !rough_col(i) {
                    stars.push((i, j));
                }
            }
        }
        let plaquettes = (0..h).flat_map(|j| (0..w).map(move |i| (i, j))).collect();
        let mut lat = Lattice { spec, edges, vertices, stars, plaquettes };
        // vertices with no remaining edges (rough corners) carry no star
        let stars: Vec<(i32, i32)> = lat.stars.iter().copied().filter(|&v| !lat.star_raw(v).is_empty()).collect();
        lat.stars = stars;
        Ok(lat)
    }

    pub fn width(&self) -> i32 {
        self.spec.width as i32
    }

    pub fn height(&self) -> i32 {
        self.spec.height as i32
    }

    fn wrap(&self, q: Qudit) -> Qudit {
        let mut q = q;
        if self.spec.wrap_x {
            q.x = q.x.rem_euclid(self.width());
        }
        if self.spec.wrap_y {
            q.y = q.y.rem_euclid(self.height());
        }
        q
    }

    /// Canonical id of an edge, resolving periodic images; `None` if absent.
    pub fn edge(&self, q: Qudit) -> Option<Qudit> {
        let q = self.wrap(q);
        self.edges.contains(&q).then_some(q)
    }

    pub fn canonical_vertex(&self, (i, j): (i32, i32)) -> (i32, i32) {
        let i = if self.spec.wrap_x { i.rem_euclid(self.width()) } else { i };
        let j = if self.spec.wrap_y { j.rem_euclid(self.height()) } else { j };
        (i, j)
    }

    pub fn canonical_cell(&self, c: (i32, i32)) -> Option<(i32, i32)> {
        let (i, j) = self.canonical_vertex(c);
        (i >= 0 && j >= 0 && i < self.width() && j < self.height()).then_some((i, j))
    }

    pub fn edges(&self) -> impl Iterator<Item = Qudit> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Qudit> {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[(i32, i32)] {
        &self.vertices
    }

    /// Vertices that carry a star operator.
    pub fn stars(&self) -> &[(i32, i32)] {
        &self.stars
    }

    pub fn plaquettes(&self) -> &[(i32, i32)] {
        &self.plaquettes
    }

    fn star_raw(&self, (i, j): (i32, i32)) -> Incidence {
        let cand = [(Qudit::h(i, j), 1), (Qudit::v(i, j), 1), (Qudit::h(i - 1, j), -1), (Qudit::v(i, j - 1), -1)];
        cand.into_iter().filter_map(|(q, s)| self.edge(q).map(|q| (q, s))).collect()
    }

    /// Star edges of vertex `v`: `+1` on outgoing (right, up), `-1` on incoming.
    /// Periodic images may repeat an edge.
    pub fn star(&self, v: (i32, i32)) -> Result<Incidence> {
        let v = self.canonical_vertex(v);
        if !self.stars.contains(&v) {
            return Err(Error::UnknownElement(format!("vertex {v:?}")));
        }
        Ok(self.star_raw(v))
    }

    /// Plaquette edges counterclockwise: `+1` on bottom and right, `-1` on top and left.
    pub fn plaquette(&self, p: (i32, i32)) -> Result<Incidence> {
        let (i, j) = self.canonical_cell(p).ok_or_else(|| Error::UnknownElement(format!("plaquette {p:?}")))?;
        let cand = [(Qudit::h(i, j), 1), (Qudit::v(i + 1, j), 1), (Qudit::h(i, j + 1), -1), (Qudit::v(i, j), -1)];
        Ok(cand.into_iter().filter_map(|(q, s)| self.edge(q).map(|q| (q, s))).collect())
    }

    /// Endpoints `(tail, head)` of an edge.
    pub fn endpoints(&self, q: Qudit) -> ((i32, i32), (i32, i32)) {
        let head = match q.orient {
            Orient::H => (q.x + 1, q.y),
            Orient::V => (q.x, q.y + 1),
        };
        (self.canonical_vertex((q.x, q.y)), self.canonical_vertex(head))
    }

    /// Cells on the `+` side and `-` side of an edge (periodic images resolved,
    /// possibly outside an open lattice). The `+` side of a horizontal edge is
    /// the cell above it; of a vertical edge, the cell to its left.
    pub fn sides(&self, q: Qudit) -> ((i32, i32), (i32, i32)) {
        match q.orient {
            Orient::H => (self.canonical_vertex((q.x, q.y)), self.canonical_vertex((q.x, q.y - 1))),
            Orient::V => (self.canonical_vertex((q.x - 1, q.y)), self.canonical_vertex((q.x, q.y))),
        }
    }

    /// Edge joining two neighbouring vertices, with `+1` if the step follows its orientation.
    pub fn step_edge(&self, a: (i32, i32), b: (i32, i32)) -> Option<(Qudit, i64)> {
        let a = self.canonical_vertex(a);
        let b = self.canonical_vertex(b);
        let cands = [(Qudit::h(a.0, a.1), 1), (Qudit::v(a.0, a.1), 1), (Qudit::h(b.0, b.1), -1), (Qudit::v(b.0, b.1), -1)];
        for (q, s) in cands {
            if let Some(q) = self.edge(q) {
                let (t, h) = self.endpoints(q);
                if (s == 1 && t == a && h == b) || (s == -1 && t == b && h == a) {
                    return Some((q, s));
                }
            }
        }
        None
    }

    /// Edge crossed when stepping between neighbouring cells, with `+1` when the
    /// step goes from the `-` side to the `+` side.
    pub fn cross_edge(&self, a: (i32, i32), b: (i32, i32)) -> Option<(Qudit, i64)> {
        let a = self.canonical_vertex(a);
        let b = self.canonical_vertex(b);
        let cands = [Qudit::h(a.0, a.1), Qudit::h(a.0, a.1 + 1), Qudit::v(a.0, a.1), Qudit::v(a.0 + 1, a.1)];
        for q in cands {
            if let Some(q) = self.edge(q) {
                let (plus, minus) = self.sides(q);
                let (pa, pb) = (a, b);
                if minus == pa && plus == pb {
                    return Some((q, 1));
                }
                if plus == pa && minus == pb {
                    return Some((q, -1));
                }
            }
        }
        None
    }

    /// `V - E + F` counting stars-capable vertices as all vertices.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.plaquettes.len() as i64
    }
}

/// A set of edges used by the condensation pipeline: ribbons are measured on
/// both the interior and the boundary path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub interior: BTreeSet<Qudit>,
    #[serde(default)]
    pub boundary: Vec<Segment>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    Direct,
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub edges: Vec<Qudit>,
}

impl Region {
    pub fn from_edges(edges: impl IntoIterator<Item = Qudit>) -> Region {
        Region { interior: edges.into_iter().collect(), boundary: Vec::new() }
    }

    /// All edges of the lattice whose midpoint lies inside the closed box
    /// `[x0, x1] x [y0, y1]` (vertex coordinates); wrapped edges are canonicalized.
    pub fn edges_in_box(lat: &Lattice, x0: i32, y0: i32, x1: i32, y1: i32) -> BTreeSet<Qudit> {
        let mut out = BTreeSet::new();
        // midpoints are at half-integers, so compare doubled coordinates
        for y in y0..=y1 {
            for x in x0..=x1 {
                for q in [Qudit::h(x, y), Qudit::v(x, y)] {
                    let (mx, my) = match q.orient {
                        Orient::H => (2 * x + 1, 2 * y),
                        Orient::V => (2 * x, 2 * y + 1),
                    };
                    if mx >= 2 * x0 && mx <= 2 * x1 && my >= 2 * y0 && my <= 2 * y1 {
                        if let Some(e) = lat.edge(q) {
                            out.insert(e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rectangle of cells `[x0, x1) x [y0, y1)`: interior edges strictly inside,
    /// the border as one direct segment.
    pub fn rect(lat: &Lattice, x0: i32, y0: i32, x1: i32, y1: i32) -> Region {
        let closed = Region::edges_in_box(lat, x0, y0, x1, y1);
        let mut interior = BTreeSet::new();
        let mut border = Vec::new();
        for &q in &closed {
            if Region::on_box_border(lat, q, x0, y0, x1, y1) {
                border.push(q);
            } else {
                interior.insert(q);
            }
        }
        Region { interior, boundary: vec![Segment { kind: SegmentKind::Direct, edges: border }] }
    }

    fn on_box_border(lat: &Lattice, q: Qudit, x0: i32, y0: i32, x1: i32, y1: i32) -> bool {
        let same_x = |a: i32, b: i32| {
            if lat.spec.wrap_x {
                (a - b).rem_euclid(lat.width()) == 0
            } else {
                a == b
            }
        };
        let same_y = |a: i32, b: i32| {
            if lat.spec.wrap_y {
                (a - b).rem_euclid(lat.height()) == 0
            } else {
                a == b
            }
        };
        match q.orient {
            Orient::H => same_y(q.y, y0) || same_y(q.y, y1),
            Orient::V => same_x(q.x, x0) || same_x(q.x, x1),
        }
    }

    /// Every edge on which ribbons are measured.
    pub fn all_edges(&self) -> BTreeSet<Qudit> {
        let mut s = self.interior.clone();
        for seg in &self.boundary {
            s.extend(seg.edges.iter().copied());
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_counts() {
        let l = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        assert_eq!(l.num_edges(), 18);
        assert_eq!(l.stars().len(), 9);
        assert_eq!(l.plaquettes().len(), 9);
        assert_eq!(l.euler_characteristic(), 0);
    }

    #[test]
    fn rough_cylinder_counts() {
        let spec = LatticeSpec::cylinder(3, 3).with_cuts(Cut::Smooth, Cut::Smooth, Cut::Rough, Cut::Rough);
        let l = Lattice::build(spec).unwrap();
        assert_eq!(l.num_edges(), 15);
        assert_eq!(l.stars().len(), 6);
        assert_eq!(l.plaquettes().len(), 9);
        assert!(l.plaquettes().iter().any(|&p| l.plaquette(p).unwrap().len() == 3));
    }

    #[test]
    fn one_by_one_torus() {
        let l = Lattice::build(LatticeSpec::torus(1, 1)).unwrap();
        assert_eq!(l.num_edges(), 2);
        assert_eq!(l.stars().len(), 1);
        let p = l.plaquette((0, 0)).unwrap();
        assert_eq!(p.len(), 4);
        let distinct: BTreeSet<Qudit> = p.iter().map(|e| e.0).collect();
        assert_eq!(distinct.len(), 2);
    }

    #[test]
    fn interior_star_signs() {
        let l = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        let s = l.star((1, 1)).unwrap();
        let signs: Vec<i64> = s.iter().map(|e| e.1).collect();
        assert_eq!(signs, vec![1, 1, -1, -1]);
        assert!(l.star((7, 7)).is_ok());
        assert!(Lattice::build(LatticeSpec::disk(2, 2)).unwrap().star((5, 5)).is_err());
    }

    #[test]
    fn zero_size_rejected() {
        assert!(Lattice::build(LatticeSpec::torus(0, 3)).is_err());
    }

    #[test]
    fn json_round_trip_keeps_ids() {
        let l = Lattice::build(LatticeSpec::cylinder(4, 2).with_cuts(Cut::Smooth, Cut::Smooth, Cut::Rough, Cut::Smooth)).unwrap();
        let s = serde_json::to_string(&l).unwrap();
        let back: Lattice = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert_eq!(back.edges().collect::<Vec<_>>(), l.edges().collect::<Vec<_>>());
    }

    #[test]
    fn steps_and_crossings() {
        let l = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        assert_eq!(l.step_edge((0, 0), (1, 0)), Some((Qudit::h(0, 0), 1)));
        assert_eq!(l.step_edge((0, 0), (2, 0)), Some((Qudit::h(2, 0), -1)));
        assert_eq!(l.cross_edge((0, 0), (0, 1)), Some((Qudit::h(0, 1), 1)));
        assert_eq!(l.cross_edge((0, 1), (0, 0)), Some((Qudit::h(0, 1), -1)));
        assert_eq!(l.cross_edge((0, 0), (0, -1)), Some((Qudit::h(0, 0), -1)));
        assert_eq!(l.cross_edge((1, 0), (0, 0)), Some((Qudit::v(1, 0), 1)));
    }
}
