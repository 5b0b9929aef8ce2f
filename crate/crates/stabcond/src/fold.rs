//! Folding trick: stack a second model mirrored onto the first, condense
//! along the fold, then unfold and stitch identified qudits back together.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::condense::{run_condensation, CondensationJob, CondensationOutput};
use crate::error::{Error, Result};
use crate::group::StabilizerGroup;
use crate::lattice::Lattice;
use crate::linalg::{inv_mod, md};
use crate::model::StabilizerModel;
use crate::model::{flux_sign, ribbon_partner};
use crate::pauli::{Orient, PauliOp, Qudit};

/// Reflection `x -> 2 axis - x` (vertices), optionally periodic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fold {
    pub axis: i32,
    pub period: Option<i32>,
}

impl Fold {
    pub fn new(axis: i32, period: Option<i32>) -> Fold {
        Fold { axis, period }
    }

    /// Fold of a lattice across the vertical line through `axis`.
    pub fn on(lat: &Lattice, axis: i32) -> Fold {
        Fold { axis, period: lat.spec.wrap_x.then(|| lat.width()) }
    }

    fn wrap(&self, x: i32) -> i32 {
        self.period.map_or(x, |p| x.rem_euclid(p))
    }

    /// Mirror image of an edge, same layer. Horizontal edges reverse direction.
    pub fn mirror_qudit(&self, q: Qudit) -> Qudit {
        let x = match q.orient {
            Orient::H => 2 * self.axis - q.x - 1,
            Orient::V => 2 * self.axis - q.x,
        };
        Qudit { x: self.wrap(x), ..q }
    }

    /// Mirror image of an operator: sites move, exponents on horizontal edges flip sign.
    pub fn mirror_op(&self, op: &PauliOp) -> PauliOp {
        let d = op.d();
        op.map_sites(|q, x, z| match q.orient {
            Orient::H => (self.mirror_qudit(*q), md(-x, d), md(-z, d)),
            Orient::V => (self.mirror_qudit(*q), x, z),
        })
    }
}

/// Layer 0 is `a`; layer 1 is `b` reflected through the fold.
pub fn fold(a: &StabilizerModel, b: &StabilizerModel, f: Fold) -> Result<StabilizerModel> {
    if a.d != b.d {
        return Err(Error::DimensionMismatch(a.d, b.d));
    }
    if a.qudits.iter().chain(&b.qudits).any(|q| q.layer != 0) {
        return Err(Error::Incompatible("fold expects single-layer models".into()));
    }
    let mut top = StabilizerModel::new(b.d, b.qudits.iter().map(|q| f.mirror_qudit(*q).on_layer(1)));
    for (g, t) in b.generators.iter() {
        top.push(f.mirror_op(g).map_qudits(|q| q.on_layer(1)), t);
    }
    a.union(&top)
}

/// Ribbons for pairs `(label on layer 0, label on layer 1)`, each label in the
/// conventions of its own unfolded model. The reflection keeps charges and
/// inverts fluxes, so a layer-1 label `(p, q)` is laid down as `(p, -q)` in
/// the folded frame. Dyons are laid down in both framings (flux to the right
/// of the charge and to the left) when the second set commutes with
/// everything else. Ribbons leaving `registry` are skipped.
pub fn wall_ribbons(lat: &Lattice, d: i64, bases: &BTreeSet<Qudit>, pairs: &[((i64, i64), (i64, i64))], registry: &BTreeSet<Qudit>) -> Vec<PauliOp> {
    let mut out = Vec::new();
    let mut second = Vec::new();
    for &(l0, l1) in pairs {
        let l1 = (l1.0, -l1.1);
        let (p, q) = ([md(l0.0, d), md(l1.0, d)], [md(l0.1, d), md(l1.1, d)]);
        let dyon = p != [0, 0] && q != [0, 0];
        let mut alt = Vec::new();
        for &e in bases {
            let Some(e) = lat.edge(e) else { continue };
            // charges along `e`, fluxes across its partner; pure fluxes stay
            // on `e` as in `ribbon_at`
            let partners = if p == [0, 0] {
                vec![e]
            } else if dyon {
                vec![ribbon_partner(e), left_partner(e)]
            } else {
                vec![ribbon_partner(e)]
            };
            for (k, f) in partners.into_iter().enumerate() {
                let Some(f) = lat.edge(f) else { continue };
                let sign = flux_sign(f);
                let mut op = PauliOp::identity(d);
                for (layer, (pl, ql)) in [(0u8, (p[0], q[0])), (1, (p[1], q[1]))] {
                    let part = PauliOp::from_sites(d, 0, [(e.on_layer(layer), (0, pl)), (f.on_layer(layer), (sign * ql, 0))]);
                    op = op.multiply(&part).expect("same d");
                }
                if !op.is_identity() && op.support().all(|q| registry.contains(q)) {
                    if k == 0 {
                        out.push(op)
                    } else {
                        alt.push(op)
                    }
                }
            }
        }
        second.push(alt);
    }
    for alt in second {
        let keep = alt.iter().all(|a| out.iter().all(|r| a.commutes_with(r)) && alt.iter().all(|b| a.commutes_with(b)));
        if keep {
            out.extend(alt);
        }
    }
    out
}

/// Partner edge for the other framing of a dyon ribbon, mirror to
/// [`ribbon_partner`]: `H(i,j) -> V(i,j)`, `V(i,j) -> H(i-1,j+1)`.
fn left_partner(q: Qudit) -> Qudit {
    match q.orient {
        Orient::H => Qudit { orient: Orient::V, ..q },
        Orient::V => Qudit { x: q.x - 1, y: q.y + 1, orient: Orient::H, ..q },
    }
}

/// Edge dual to `q` across the fold: the star of `v` is carried onto the
/// plaquette south-east of `v` and each plaquette onto the star at its
/// south-east corner.
pub fn dual_edge(q: Qudit) -> Qudit {
    match q.orient {
        Orient::H => Qudit { x: q.x + 1, y: q.y - 1, orient: Orient::V, ..q },
        Orient::V => Qudit { orient: Orient::H, ..q },
    }
}

/// Ribbons of the duality walls `e -> m^k`: for each base edge `e`, the pair
/// `Z_0(e) X_1(e*)^{+-k}` and `X_0(e) Z_1(e*)^{+-1/k}` with `e* = dual_edge(e)`
/// on layer 1 (sign + on horizontal, - on vertical bases).
pub fn duality_ribbons(lat: &Lattice, d: i64, bases: &BTreeSet<Qudit>, k: i64, registry: &BTreeSet<Qudit>) -> Result<Vec<PauliOp>> {
    let ki = inv_mod(k, d).ok_or_else(|| Error::Incompatible(format!("{k} is not a unit mod {d}")))?;
    let mut out = Vec::new();
    for &e in bases {
        let (Some(e), Some(f)) = (lat.edge(e), lat.edge(dual_edge(e))) else { continue };
        let sign = if e.orient == Orient::H { 1 } else { -1 };
        let f = f.on_layer(1);
        for op in [PauliOp::from_sites(d, 0, [(e, (0, 1)), (f, (sign * k, 0))]), PauliOp::from_sites(d, 0, [(e, (1, 0)), (f, (0, sign * ki))])] {
            if op.support().all(|q| registry.contains(q)) {
                out.push(op);
            }
        }
    }
    Ok(out)
}

/// How the two layers are glued at one base edge of the condensed half.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gluing {
    /// Bell pair with the same edge: `Z_0 Z_1^a`, `X_0 X_1^{-1/a}`. `a = -1`
    /// gives the transparent wall, `a = 1` the inverse wall.
    Direct(i64),
    /// Bell pair with the dual edge, the duality walls of [`duality_ribbons`].
    Dual(i64),
}

/// Ribbons condensing `bottom` (layer 0) against `top` (layer-1 edges, folded
/// frame), glued edge by edge. Bases are paired in order; a base whose partner
/// is missing or taken is pinned by a single `Z`, and so is every layer-1 edge
/// of `top` left over. Edges on the fold line kept in both layers are
/// identified through [`fixed_line_ribbons`] with the gluing of that edge.
pub fn layout_ribbons(
    folded: &StabilizerModel,
    lat: &Lattice,
    f: Fold,
    bottom: &BTreeSet<Qudit>,
    top: &BTreeSet<Qudit>,
    glue: impl Fn(Qudit) -> Gluing,
) -> Result<Vec<PauliOp>> {
    let d = folded.d;
    let registry = &folded.qudits;
    let mut claimed = BTreeSet::new();
    let mut out = Vec::new();
    for &e in bottom {
        let Some(e) = lat.edge(e) else { continue };
        let g = glue(e);
        let partner = match g {
            Gluing::Direct(_) => Some(e),
            Gluing::Dual(_) => lat.edge(dual_edge(e)),
        };
        match partner {
            Some(p) if top.contains(&p) && !claimed.contains(&p) => {
                claimed.insert(p);
                let one = BTreeSet::from([e]);
                let ops = match g {
                    Gluing::Direct(a) => {
                        let b = inv_mod(a, d).ok_or_else(|| Error::Incompatible(format!("{a} is not a unit mod {d}")))?;
                        wall_ribbons(lat, d, &one, &[((1, 0), (a, 0)), ((0, 1), (0, b))], registry)
                    }
                    Gluing::Dual(k) => duality_ribbons(lat, d, &one, k, registry)?,
                };
                out.extend(ops);
            }
            _ => out.push(PauliOp::single(d, e, 0, 1)),
        }
    }
    for q in top.difference(&claimed) {
        out.push(PauliOp::single(d, q.on_layer(1), 0, 1));
    }
    let kept: BTreeSet<Qudit> = bottom.union(top).copied().collect();
    out.extend(fixed_line_ribbons(folded, lat, f, &kept, glue));
    out.retain(|op| op.support().all(|q| registry.contains(q)));
    Ok(out)
}

/// Ribbons pinning the two copies of each edge lying on the fold line (the
/// edges the mirror fixes) outside `region`. Only the ones commuting with the
/// layer-0 generators away from `region` are kept, so layer 0 stays intact and
/// the pair is identified rather than erased. Dual gluings have no such edges.
pub fn fixed_line_ribbons(folded: &StabilizerModel, lat: &Lattice, f: Fold, region: &BTreeSet<Qudit>, glue: impl Fn(Qudit) -> Gluing) -> Vec<PauliOp> {
    let d = folded.d;
    let away: Vec<&PauliOp> = folded.generators.iter().map(|(g, _)| g).filter(|g| g.support().all(|q| q.layer == 0 && !region.contains(q))).collect();
    let mut out = Vec::new();
    for q in lat.edges().filter(|q| f.mirror_qudit(*q) == *q && !region.contains(q)) {
        let Gluing::Direct(a) = glue(q) else { continue };
        let Some(b) = inv_mod(a, d) else { continue };
        let one = BTreeSet::from([q]);
        let cands = wall_ribbons(lat, d, &one, &[((1, 0), (a, 0)), ((0, 1), (0, b))], &folded.qudits);
        out.extend(cands.into_iter().filter(|r| r.support().all(|p| p.on_layer(0) == q) && away.iter().all(|g| g.commutes_with(r))));
    }
    out
}

/// Move layer 1 back through the fold. Positions already taken by a layer-0
/// qudit keep layer index 1 so that [`stitch`] can merge them.
pub fn unfold(model: &StabilizerModel, f: Fold) -> StabilizerModel {
    let bottom: BTreeSet<Qudit> = model.qudits.iter().filter(|q| q.layer == 0).copied().collect();
    let place = |q: &Qudit| {
        let m = f.mirror_qudit(q.on_layer(0));
        if bottom.contains(&m) {
            m.on_layer(1)
        } else {
            m
        }
    };
    let map_q = |q: &Qudit| if q.layer == 1 { place(q) } else { *q };
    let mut out = StabilizerModel::new(model.d, model.qudits.iter().map(map_q));
    for (g, t) in model.generators.iter() {
        let d = g.d();
        let h = g.map_sites(|q, x, z| {
            if q.layer != 1 {
                return (*q, x, z);
            }
            match q.orient {
                Orient::H => (place(q), md(-x, d), md(-z, d)),
                Orient::V => (place(q), x, z),
            }
        });
        out.push(h, t);
    }
    out
}

/// A two-site relation `R` in the group with a unit exponent on the layer-1
/// qudit `e`, together with its eigenphase and the Z (or X) corrections that
/// make `X_s` and `Z_s` commute with it.
struct Seam {
    e: Qudit,
    s: Qudit,
    rel: PauliOp,
    phi: i64,
    x_unit: bool,
    corr: (i64, i64),
}

fn find_seam(model: &StabilizerModel) -> Result<Option<Seam>> {
    let d = model.d;
    let group = StabilizerGroup::with_qudits(d, model.ops(), model.qudits.iter().copied())?;
    for e in model.qudits.iter().filter(|q| q.layer == 1) {
        let s = e.on_layer(0);
        if !model.qudits.contains(&s) {
            continue;
        }
        for a in 0..d {
            for b in 0..d {
                let x_unit = inv_mod(a, d).is_some();
                if !x_unit && inv_mod(b, d).is_none() {
                    continue;
                }
                for c in 0..d * d {
                    let rel = PauliOp::from_sites(d, 0, [(*e, (a, b)), (s, (c / d, c % d))]);
                    let Some(k) = group.decompose(&rel) else { continue };
                    let h = crate::group::product(d, &group.generators, &k);
                    let fix = |p: PauliOp| -> i64 {
                        // multiplier of the correction on e that makes p commute with rel
                        let corr = if x_unit { PauliOp::single(d, *e, 0, 1) } else { PauliOp::single(d, *e, 1, 0) };
                        let num = p.symplectic_product(&rel).expect("same d");
                        let den = corr.symplectic_product(&rel).expect("same d");
                        md(-num * inv_mod(den, d).expect("unit"), d)
                    };
                    let corr = (fix(PauliOp::single(d, s, 1, 0)), fix(PauliOp::single(d, s, 0, 1)));
                    return Ok(Some(Seam { e: *e, s, phi: md(rel.phase() - h.phase(), d), rel, x_unit, corr }));
                }
            }
        }
    }
    Ok(None)
}

/// Merge each layer-1 qudit with the layer-0 qudit at the same position when
/// the group holds a relation `R` between them with a unit exponent on the
/// layer-1 side. The commutant of `R` on the pair is a single qudit times
/// `<R>`; generators are rewritten on that qudit, which keeps the layer-0 id.
pub fn stitch(model: &StabilizerModel) -> Result<StabilizerModel> {
    let d = model.d;
    let mut cur = model.clone();
    while let Some(seam) = find_seam(&cur)? {
        let Seam { e, s, rel, phi, x_unit, corr } = seam;
        let re = rel.get(&e);
        let lead = if x_unit { re.0 } else { re.1 };
        let li = inv_mod(lead, d).expect("unit");
        let mut next = StabilizerModel::new(d, cur.qudits.iter().filter(|q| **q != e).copied());
        for (g, tag) in cur.generators.iter() {
            if !g.commutes_with(&rel) {
                return Err(Error::Incompatible(format!("{g} does not commute with the identification of {e} and {s}")));
            }
            let (xe, ze) = g.get(&e);
            let m = md(if x_unit { xe } else { ze } * li, d);
            let r = g.multiply(&rel.pow(-m))?;
            let (xs, zs) = r.get(&s);
            let want = md(xs * corr.0 + zs * corr.1, d);
            let left = r.get(&e);
            if left != if x_unit { (0, want) } else { (want, 0) } {
                return Err(Error::Incompatible(format!("{g} leaves {e} outside the merged qudit")));
            }
            let h = r.restrict(|q| *q != e);
            next.push(h.clone().with_phase(h.phase() + m * phi), tag);
        }
        cur = next;
    }
    Ok(cur)
}

/// All `d^4` operators on the pair `(s, e)` with phase 0, identity first.
fn pair_ops(d: i64, s: Qudit, e: Qudit) -> impl Iterator<Item = PauliOp> {
    (0..d.pow(4)).map(move |c| {
        let v = |k: u32| (c / d.pow(k)) % d;
        PauliOp::from_sites(d, 0, [(s, (v(3), v(2))), (e, (v(1), v(0)))])
    })
}

/// Pair operators in the group, up to phase.
fn pair_subgroup(group: &StabilizerGroup, s: Qudit, e: Qudit) -> Vec<PauliOp> {
    pair_ops(group.d, s, e).filter(|p| !p.is_identity() && group.contains_up_to_phase(p)).collect()
}

/// Extra relations for fold-line pairs that [`fixed_line_ribbons`] leaves
/// short. On a pair glued with `Direct(a)` the merged qudit is read off by
/// `Z_0` and `X_0 X_1^{-1/a}`; a pair carries exactly one qudit once its
/// relations (commuting with both) number `d`. Each short pair gets the
/// lightest such operator that commutes with `ribbons`, with the layer-0
/// generators away from `region` and with what the pair already holds, and
/// that brings the count to exactly `d`. `condensed` is the result of the
/// first pass.
pub fn seam_pins(
    condensed: &StabilizerModel,
    folded: &StabilizerModel,
    lat: &Lattice,
    f: Fold,
    region: &BTreeSet<Qudit>,
    ribbons: &[PauliOp],
    glue: impl Fn(Qudit) -> Gluing,
) -> Result<Vec<PauliOp>> {
    let d = folded.d;
    let group = condensed.group()?;
    let away: Vec<&PauliOp> = folded.ops().iter().filter(|g| g.support().all(|q| q.layer == 0 && !region.contains(q))).collect();
    let mut out = Vec::new();
    for q in lat.edges().filter(|q| f.mirror_qudit(*q) == *q && !region.contains(q)) {
        let (s, e) = (q, q.on_layer(1));
        if !condensed.qudits.contains(&s) || !condensed.qudits.contains(&e) {
            continue;
        }
        let Gluing::Direct(a) = glue(q) else { continue };
        let Some(b) = inv_mod(a, d) else { continue };
        let held = pair_subgroup(&group, s, e);
        if held.len() + 1 >= d as usize {
            continue;
        }
        let zl = PauliOp::single(d, s, 0, 1);
        let xl = PauliOp::from_sites(d, 0, [(s, (1, 0)), (e, (md(-b, d), 0))]);
        let mut cands: Vec<PauliOp> = pair_ops(d, s, e)
            .filter(|p| !p.is_identity() && p.commutes_with(&zl) && p.commutes_with(&xl))
            .filter(|p| held.iter().all(|h| h.commutes_with(p)))
            .filter(|p| ribbons.iter().chain(away.iter().copied()).all(|g| g.commutes_with(p)))
            .collect();
        cands.sort_by_key(|p| p.weight());
        for p in cands {
            let mut gens = held.clone();
            gens.push(p.clone());
            if crate::group::group_order(d, &gens)? == num_bigint::BigUint::from(d as u64) {
                out.push(p);
                break;
            }
        }
    }
    Ok(out)
}

/// Condense a folded model along `region`, then add the [`seam_pins`] the
/// fold line asks for and condense again from scratch.
pub fn run_fold_condensation(job: &CondensationJob, lat: &Lattice, f: Fold, glue: impl Fn(Qudit) -> Gluing) -> Result<CondensationOutput> {
    let first = run_condensation(job)?;
    let pins = seam_pins(&first.model, &job.model, lat, f, &job.region.interior, &job.ribbons, glue)?;
    if pins.is_empty() {
        return Ok(first);
    }
    let mut again = job.clone();
    again.ribbons.extend(pins);
    run_condensation(&again)
}

/// A layer-1 qudit `e` whose pair with `s` holds exactly `d` relations but
/// none with a unit exponent on `e`. The pair is one qudit with logicals
/// `Z_s` and the lightest `X_s X_e^r Z_e^t` commuting with the relations.
struct EncodedSeam {
    e: Qudit,
    s: Qudit,
    rels: Vec<PauliOp>,
    xl: PauliOp,
    zl: PauliOp,
}

fn find_encoded_seam(model: &StabilizerModel) -> Result<Option<EncodedSeam>> {
    let d = model.d;
    let group = model.group()?;
    for e in model.qudits.iter().filter(|q| q.layer == 1) {
        let s = e.on_layer(0);
        if !model.qudits.contains(&s) {
            continue;
        }
        let rels = pair_subgroup(&group, s, *e);
        if rels.len() + 1 != d as usize {
            continue;
        }
        let zl = PauliOp::single(d, s, 0, 1);
        if !rels.iter().all(|r| r.commutes_with(&zl)) {
            continue;
        }
        let xl = (0..d * d)
            .map(|c| PauliOp::from_sites(d, 0, [(s, (1, 0)), (*e, (c / d, c % d))]))
            .find(|x| rels.iter().all(|r| r.commutes_with(x)) && x.pow(d).is_identity());
        if let Some(xl) = xl {
            return Ok(Some(EncodedSeam { e: *e, s, rels, xl, zl }));
        }
    }
    Ok(None)
}

fn merge_encoded(model: &StabilizerModel, seam: EncodedSeam) -> Result<StabilizerModel> {
    let d = model.d;
    let EncodedSeam { e, s, rels, xl, zl } = seam;
    let group = model.group()?;
    let on_pair = |q: &Qudit| *q == s || *q == e;
    let mut next = StabilizerModel::new(d, model.qudits.iter().filter(|q| **q != e).copied());
    for (g, tag) in model.generators.iter() {
        let p = g.restrict(on_pair).with_phase(0);
        if p.is_identity() {
            next.push(g.clone(), tag);
            continue;
        }
        let mut found = None;
        'search: for a in 0..d {
            for b in 0..d {
                let l = xl.pow(a).multiply(&zl.pow(b))?;
                let r = p.multiply(&l.inverse())?;
                let bare = r.clone().with_phase(0);
                if r.is_scalar() || rels.contains(&bare) {
                    found = Some((a, b, r));
                    break 'search;
                }
            }
        }
        let Some((a, b, r)) = found else {
            return Err(Error::Incompatible(format!("{g} leaves {e} outside the merged qudit")));
        };
        // p = r l exactly; r acts on the code space as a phase
        let phi = if r.is_scalar() {
            r.phase()
        } else {
            let k = group.decompose(&r).ok_or_else(|| Error::Incompatible(format!("{r} is not fixed by the group")))?;
            r.phase() - crate::group::product(d, &group.generators, &k).phase()
        };
        let merged = PauliOp::single(d, s, a, 0).multiply(&PauliOp::single(d, s, 0, b))?;
        let h = g.restrict(|q| !on_pair(q)).multiply(&merged)?;
        next.push(h.clone().with_phase(h.phase() + phi), tag);
    }
    Ok(next)
}

/// [`stitch`], then merge the pairs identified only through a non-unit
/// relation group of order `d` (see [`seam_pins`]).
pub fn stitch_encoded(model: &StabilizerModel) -> Result<StabilizerModel> {
    let mut cur = stitch(model)?;
    while let Some(seam) = find_encoded_seam(&cur)? {
        cur = merge_encoded(&cur, seam)?;
    }
    Ok(cur)
}

pub fn unfold_and_stitch(model: &StabilizerModel, f: Fold) -> Result<StabilizerModel> {
    stitch_encoded(&unfold(model, f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::gsd_absolute;
    use crate::lattice::LatticeSpec;
    use crate::model::{build_model, ModelKind};

    #[test]
    fn mirror_is_an_involution() {
        let f = Fold::new(3, Some(6));
        for q in [Qudit::h(0, 1), Qudit::h(5, 0), Qudit::v(3, 2), Qudit::v(0, 0)] {
            assert_eq!(f.mirror_qudit(f.mirror_qudit(q)), q);
        }
        assert_eq!(f.mirror_qudit(Qudit::v(3, 0)), Qudit::v(3, 0));
        assert_eq!(f.mirror_qudit(Qudit::h(2, 0)), Qudit::h(3, 0));
    }

    #[test]
    fn mirror_keeps_commutation() {
        let m = build_model(ModelKind::ZdBulk { d: 3 }, LatticeSpec::torus(4, 3)).unwrap();
        let f = Fold::new(2, Some(4));
        let img: Vec<PauliOp> = m.ops().iter().map(|g| f.mirror_op(g)).collect();
        crate::group::check_commuting(&img).unwrap();
        for (a, b) in m.ops().iter().zip(&img) {
            assert_eq!(f.mirror_op(b), *a);
        }
    }

    #[test]
    fn folded_pair_multiplies_degeneracy() {
        let spec = LatticeSpec::torus(4, 3);
        let lat = Lattice::build(spec).unwrap();
        let m = build_model(ModelKind::ZdBulk { d: 2 }, spec).unwrap();
        let folded = fold(&m, &m, Fold::on(&lat, 2)).unwrap();
        assert_eq!(folded.num_qudits(), 2 * m.num_qudits());
        assert_eq!(gsd_absolute(&folded).unwrap(), 16u8.into());
        let back = unfold(&folded, Fold::on(&lat, 2));
        assert_eq!(back.qudits, folded.qudits);
    }

    #[test]
    fn fold_needs_one_dimension() {
        let spec = LatticeSpec::torus(2, 2);
        let a = build_model(ModelKind::ZdBulk { d: 2 }, spec).unwrap();
        let b = build_model(ModelKind::ZdBulk { d: 3 }, spec).unwrap();
        assert!(fold(&a, &b, Fold::new(1, Some(2))).is_err());
    }

    #[test]
    fn duality_needs_a_unit() {
        let lat = Lattice::build(LatticeSpec::torus(4, 4)).unwrap();
        let bases: BTreeSet<Qudit> = lat.edges().collect();
        assert!(duality_ribbons(&lat, 4, &bases, 2, &bases).is_err());
    }
}
