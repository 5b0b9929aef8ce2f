//! Reference stabilizer models on square lattices and anyon string operators.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{GeneratorSet, StabilizerGroup, Tag};
use crate::lattice::{Cut, Lattice, LatticeSpec};
use crate::pauli::{Orient, PauliOp, Qudit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Boundary {
    Smooth,
    Rough,
    Even,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModelKind {
    ZdBulk { d: i64 },
    DsBulk,
    ZdWithBoundaries { d: i64, left: Boundary, right: Boundary, bottom: Boundary, top: Boundary },
    DsWithBoundary,
}

/// A commuting set of generators together with the qudit registry it acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerModel {
    pub d: i64,
    pub qudits: BTreeSet<Qudit>,
    pub generators: GeneratorSet,
}

impl StabilizerModel {
    pub fn new(d: i64, qudits: impl IntoIterator<Item = Qudit>) -> StabilizerModel {
        StabilizerModel { d, qudits: qudits.into_iter().collect(), generators: GeneratorSet::new(d) }
    }

    pub fn push(&mut self, op: PauliOp, tag: Tag) {
        debug_assert!(op.support().all(|q| self.qudits.contains(q)), "generator {op} leaves the registry");
        if !op.is_identity() {
            self.generators.push(op, tag);
        }
    }

    pub fn ops(&self) -> &[PauliOp] {
        &self.generators.generators
    }

    pub fn num_qudits(&self) -> usize {
        self.qudits.len()
    }

    pub fn group(&self) -> Result<StabilizerGroup> {
        StabilizerGroup::with_qudits(self.d, self.ops(), self.qudits.iter().copied())
    }

    pub fn group_order(&self) -> Result<BigUint> {
        Ok(self.group()?.order())
    }

    /// Relabel every qudit (registry and generators).
    pub fn map_qudits(&self, f: impl Fn(&Qudit) -> Qudit) -> StabilizerModel {
        let mut out = StabilizerModel::new(self.d, self.qudits.iter().map(&f));
        for (g, t) in self.generators.iter() {
            out.push(g.map_qudits(&f), t);
        }
        out
    }

    /// Disjoint union of two models on distinct qudits.
    pub fn union(&self, other: &StabilizerModel) -> Result<StabilizerModel> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(self.d, other.d));
        }
        if self.qudits.intersection(&other.qudits).next().is_some() {
            return Err(Error::Incompatible("models share qudits".into()));
        }
        let mut out = StabilizerModel::new(self.d, self.qudits.union(&other.qudits).copied());
        for (g, t) in self.generators.iter().chain(other.generators.iter()) {
            out.push(g.clone(), t);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ModelRepr::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<StabilizerModel> {
        let r: ModelRepr = serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })?;
        StabilizerModel::try_from(r)
    }
}

#[derive(Serialize, Deserialize)]
struct GenRepr {
    tag: Tag,
    sites: BTreeMap<Qudit, [i64; 2]>,
    #[serde(default)]
    phase: i64,
}

#[derive(Serialize, Deserialize)]
struct ModelRepr {
    d: i64,
    qudits: Vec<Qudit>,
    generators: Vec<GenRepr>,
}

impl From<&StabilizerModel> for ModelRepr {
    fn from(m: &StabilizerModel) -> ModelRepr {
        ModelRepr {
            d: m.d,
            qudits: m.qudits.iter().copied().collect(),
            generators: m
                .generators
                .iter()
                .map(|(g, tag)| GenRepr { tag, sites: g.sites().iter().map(|(q, &(x, z))| (*q, [x, z])).collect(), phase: g.phase() })
                .collect(),
        }
    }
}

impl TryFrom<ModelRepr> for StabilizerModel {
    type Error = Error;
    fn try_from(r: ModelRepr) -> Result<StabilizerModel> {
        if r.d < 2 {
            return Err(Error::Parse { pos: 0, msg: "d must be at least 2".into() });
        }
        let mut m = StabilizerModel::new(r.d, r.qudits);
        for g in r.generators {
            let mut op = PauliOp::identity(r.d).with_phase(g.phase);
            for (q, [x, z]) in g.sites {
                if !m.qudits.contains(&q) {
                    return Err(Error::Parse { pos: 0, msg: format!("generator acts on unregistered qudit {q}") });
                }
                op.set(q, x, z);
            }
            m.push(op, g.tag);
        }
        Ok(m)
    }
}

/// `prod X^{s}` over a star incidence (repeated edges multiply).
pub fn star_op(lat: &Lattice, d: i64, v: (i32, i32)) -> Result<PauliOp> {
    Ok(PauliOp::from_sites(d, 0, lat.star(v)?.into_iter().map(|(q, s)| (q, (s, 0)))))
}

/// `prod Z^{s}` over a plaquette incidence.
pub fn plaquette_op(lat: &Lattice, d: i64, p: (i32, i32)) -> Result<PauliOp> {
    Ok(PauliOp::from_sites(d, 0, lat.plaquette(p)?.into_iter().map(|(q, s)| (q, (0, s)))))
}

/// Partner edge of the two-edge `e^2 m^2` ribbon: `H(i,j) -> V(i+1,j)`, `V(i,j) -> H(i,j+1)`.
pub fn ribbon_partner(q: Qudit) -> Qudit {
    match q.orient {
        Orient::H => Qudit { x: q.x + 1, orient: Orient::V, ..q },
        Orient::V => Qudit { y: q.y + 1, orient: Orient::H, ..q },
    }
}

/// Sign of the `X` exponent a flux picks up when a dual step crosses `q`
/// moving in `+x` (vertical edges) or `+y` (horizontal edges).
pub fn flux_sign(q: Qudit) -> i64 {
    match q.orient {
        Orient::H => 1,
        Orient::V => -1,
    }
}

/// Short dyon ribbon `Z^p` on `q` and `X^{+-r}` on its partner edge, with the
/// sign of a dual step along the ribbon.
pub fn short_ribbon(lat: &Lattice, d: i64, q: Qudit, p: i64, r: i64) -> Option<PauliOp> {
    let e = lat.edge(q)?;
    let mut op = PauliOp::single(d, e, 0, p);
    if r != 0 {
        let partner = lat.edge(ribbon_partner(e))?;
        op = op.multiply(&PauliOp::single(d, partner, flux_sign(partner) * r, 0)).expect("same d");
    }
    Some(op)
}

/// String operator for `e^p m^q`: `Z^{+-p}` along a direct vertex walk and
/// `X^{+-q}` across a dual cell walk. Signs follow the edge orientation for
/// direct steps and the `-` to `+` side convention for dual steps.
pub fn string_operator(lat: &Lattice, d: i64, label: (i64, i64), direct: &[(i32, i32)], dual: &[(i32, i32)]) -> Result<PauliOp> {
    let (p, q) = label;
    let mut op = PauliOp::identity(d);
    for w in direct.windows(2) {
        let (e, s) = lat.step_edge(w[0], w[1]).ok_or_else(|| Error::InvalidPath(format!("vertices {:?} and {:?} are not joined by an edge", w[0], w[1])))?;
        op = op.multiply(&PauliOp::single(d, e, 0, s * p))?;
    }
    for w in dual.windows(2) {
        let (e, s) = lat.cross_edge(w[0], w[1]).ok_or_else(|| Error::InvalidPath(format!("cells {:?} and {:?} do not share an edge", w[0], w[1])))?;
        op = op.multiply(&PauliOp::single(d, e, s * q, 0))?;
    }
    Ok(op)
}

fn zd_bulk_into(m: &mut StabilizerModel, lat: &Lattice) -> Result<()> {
    for &v in lat.stars() {
        m.push(star_op(lat, m.d, v)?, Tag::Vertex);
    }
    for &p in lat.plaquettes() {
        m.push(plaquette_op(lat, m.d, p)?, Tag::Plaquette);
    }
    Ok(())
}

/// Edges with an endpoint on the boundary line of a side.
fn dangling(lat: &Lattice, side: usize) -> BTreeSet<Qudit> {
    let (w, h) = (lat.width(), lat.height());
    lat.edges()
        .filter(|&e| {
            let (a, b) = lat.endpoints(e);
            [a, b].iter().any(|&(i, j)| match side {
                0 => i == 0 && !lat.spec.wrap_x,
                1 => i == w && !lat.spec.wrap_x,
                2 => j == 0 && !lat.spec.wrap_y,
                _ => j == h && !lat.spec.wrap_y,
            })
        })
        .collect()
}

pub fn build_model(kind: ModelKind, spec: LatticeSpec) -> Result<StabilizerModel> {
    let cut = |b: Boundary| if b == Boundary::Smooth { Cut::Smooth } else { Cut::Rough };
    let model = match kind {
        ModelKind::ZdBulk { d } => {
            check_d(d)?;
            let lat = Lattice::build(spec)?;
            let mut m = StabilizerModel::new(d, lat.edges());
            zd_bulk_into(&mut m, &lat)?;
            m
        }
        ModelKind::ZdWithBoundaries { d, left, right, bottom, top } => {
            check_d(d)?;
            let sides = [left, right, bottom, top];
            if d % 2 != 0 && sides.contains(&Boundary::Even) {
                return Err(Error::Incompatible("even boundary needs even d".into()));
            }
            let lat = Lattice::build(spec.with_cuts(cut(left), cut(right), cut(bottom), cut(top)))?;
            let mut even_edges = BTreeSet::new();
            for (s, &b) in sides.iter().enumerate() {
                if b == Boundary::Even {
                    even_edges.extend(dangling(&lat, s));
                }
            }
            let mut m = StabilizerModel::new(d, lat.edges());
            for &v in lat.stars() {
                m.push(star_op(&lat, d, v)?, Tag::Vertex);
            }
            for &p in lat.plaquettes() {
                let b = plaquette_op(&lat, d, p)?;
                if b.support().any(|q| even_edges.contains(q)) {
                    m.push(b.pow(d / 2), Tag::Plaquette);
                } else {
                    m.push(b, Tag::Plaquette);
                }
            }
            for &e in &even_edges {
                m.push(PauliOp::single(d, e, d / 2, 0), Tag::Edge);
            }
            m
        }
        ModelKind::DsBulk => {
            if !(spec.wrap_x && spec.wrap_y) {
                return Err(Error::Incompatible("the double-semion bulk model needs a torus; use ds_with_boundary".into()));
            }
            ds_model(&Lattice::build(spec)?)?
        }
        ModelKind::DsWithBoundary => {
            // the ribbons point up and right, so the lower and left sides come out rough
            let spec = spec.with_cuts(Cut::Rough, Cut::Smooth, Cut::Rough, Cut::Smooth);
            if spec.wrap_x && spec.wrap_y {
                return Err(Error::Incompatible("a boundary needs at least one open direction".into()));
            }
            ds_boundary_model(&Lattice::build(spec)?)?
        }
    };
    // surface internal bugs as errors rather than silently returning a broken model
    crate::group::check_commuting(model.ops())?;
    Ok(model)
}

fn check_d(d: i64) -> Result<()> {
    if d < 2 {
        return Err(Error::Incompatible(format!("local dimension {d} < 2")));
    }
    Ok(())
}

/// `F(v, p) = A(v) B(p)` with `p` the cell to the north-east of `v`.
pub fn f_op(lat: &Lattice, v: (i32, i32)) -> Result<PauliOp> {
    star_op(lat, 4, v)?.multiply(&plaquette_op(lat, 4, v)?)
}

fn ds_model(lat: &Lattice) -> Result<StabilizerModel> {
    let mut m = StabilizerModel::new(4, lat.edges());
    for &v in lat.stars() {
        m.push(f_op(lat, v)?, Tag::Vertex);
    }
    for &p in lat.plaquettes() {
        m.push(plaquette_op(lat, 4, p)?.pow(2), Tag::Plaquette);
    }
    for e in lat.edges() {
        if let Some(c) = short_ribbon(lat, 4, e, 2, 2) {
            m.push(c, Tag::Ribbon);
        }
    }
    Ok(m)
}

/// Double semion on an open lattice with its boundary: `F` where the whole
/// star and its north-east plaquette exist, `B^2` on every plaquette, `A^2` on
/// boundary stars, and the two-edge ribbons cut down to the edges that exist.
fn ds_boundary_model(lat: &Lattice) -> Result<StabilizerModel> {
    let mut m = StabilizerModel::new(4, lat.edges());
    for &v in lat.stars() {
        let full = lat.star(v)?.len() == 4 && lat.canonical_cell(v).is_some();
        if full {
            m.push(f_op(lat, v)?, Tag::Vertex);
        } else {
            m.push(star_op(lat, 4, v)?.pow(2), Tag::Vertex);
        }
    }
    for &p in lat.plaquettes() {
        m.push(plaquette_op(lat, 4, p)?.pow(2), Tag::Plaquette);
    }
    // ribbons whose base edge lies just outside survive as a lone X^2
    let mut bases: BTreeSet<Qudit> = lat.edges().collect();
    for e in lat.edges() {
        bases.insert(match e.orient {
            Orient::H => Qudit { y: e.y - 1, orient: Orient::V, ..e },
            Orient::V => Qudit { x: e.x - 1, orient: Orient::H, ..e },
        });
    }
    for b in bases {
        let mut c = PauliOp::identity(4);
        if let Some(q) = lat.edge(b) {
            c = c.multiply(&PauliOp::single(4, q, 0, 2))?;
        }
        if let Some(q) = lat.edge(ribbon_partner(b)) {
            c = c.multiply(&PauliOp::single(4, q, 2, 0))?;
        }
        m.push(c, Tag::Ribbon);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::check_commuting;

    #[test]
    fn z4_torus_generators() {
        let m = build_model(ModelKind::ZdBulk { d: 4 }, LatticeSpec::torus(3, 3)).unwrap();
        assert_eq!(m.ops().len(), 18);
        assert!(m.ops().iter().all(|g| g.order() == 4));
        assert_eq!(m.group_order().unwrap(), BigUint::from(4u32).pow(16));
    }

    #[test]
    fn one_by_one_torus_generators_cancel() {
        let lat = Lattice::build(LatticeSpec::torus(1, 1)).unwrap();
        assert!(star_op(&lat, 2, (0, 0)).unwrap().is_identity());
        assert!(plaquette_op(&lat, 2, (0, 0)).unwrap().is_identity());
    }

    #[test]
    fn ds_torus_commutes() {
        let m = build_model(ModelKind::DsBulk, LatticeSpec::torus(3, 3)).unwrap();
        check_commuting(m.ops()).unwrap();
    }

    #[test]
    fn ds_ribbon_is_a_string() {
        let lat = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        let s = string_operator(&lat, 4, (2, 2), &[(1, 1), (2, 1)], &[(1, 1), (2, 1)]).unwrap();
        assert_eq!(Some(s), short_ribbon(&lat, 4, Qudit::h(1, 1), 2, 2));
        let s = string_operator(&lat, 4, (2, 2), &[(1, 1), (1, 2)], &[(1, 1), (1, 2)]).unwrap();
        assert_eq!(Some(s), short_ribbon(&lat, 4, Qudit::v(1, 1), 2, 2));
    }

    #[test]
    fn open_strings_violate_endpoints_only() {
        let lat = Lattice::build(LatticeSpec::torus(4, 4)).unwrap();
        let m = build_model(ModelKind::ZdBulk { d: 4 }, LatticeSpec::torus(4, 4)).unwrap();
        let e = string_operator(&lat, 4, (1, 0), &[(0, 0), (1, 0), (1, 1), (1, 2), (0, 2)], &[]).unwrap();
        let bad: Vec<&PauliOp> = m.ops().iter().filter(|g| !g.commutes_with(&e)).collect();
        assert_eq!(bad.len(), 2);
        assert!(bad.iter().all(|g| g.symplectic_product(&e).unwrap() % 2 == 1));
        let mm = string_operator(&lat, 4, (0, 1), &[], &[(0, 0), (1, 0), (1, 1), (2, 1)]).unwrap();
        assert_eq!(m.ops().iter().filter(|g| !g.commutes_with(&mm)).count(), 2);
    }

    #[test]
    fn closed_loops_commute() {
        let lat = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        let m = build_model(ModelKind::ZdBulk { d: 4 }, LatticeSpec::torus(3, 3)).unwrap();
        let e = string_operator(&lat, 4, (1, 0), &[(0, 1), (1, 1), (2, 1), (3, 1)], &[]).unwrap();
        assert_eq!(e.weight(), 3);
        assert!(m.ops().iter().all(|g| g.commutes_with(&e)));
        assert!(!m.group().unwrap().contains_up_to_phase(&e));
    }

    #[test]
    fn disconnected_path_rejected() {
        let lat = Lattice::build(LatticeSpec::torus(3, 3)).unwrap();
        assert!(string_operator(&lat, 4, (1, 0), &[(0, 0), (2, 2)], &[]).is_err());
    }

    #[test]
    fn json_dump_round_trip() {
        let m = build_model(ModelKind::DsBulk, LatticeSpec::torus(2, 2)).unwrap();
        let back = StabilizerModel::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
    }
}
