//! Local condensation on stabilizer models: measure ribbons, drop what they
//! confine, promote commuting products, erase condensed qudits.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use num_bigint::BigUint;

use crate::anyon::{AnyonSubgroup, AnyonTheory};
use crate::degeneracy::DeltaRecord;
use crate::error::{Error, Result};
use crate::group::{check_commuting, product, qudit_index, symplectic_matrix, GeneratorSet, StabilizerGroup, Tag};
use crate::lattice::{Lattice, LatticeSpec, Region};
use crate::linalg::{left_kernel, md, Howell, MatZ};
use crate::model::{flux_sign, ribbon_partner, StabilizerModel};
use crate::pauli::{PauliOp, Qudit};

/// One condensation step.
#[derive(Clone, Debug)]
pub struct CondensationJob {
    pub model: StabilizerModel,
    pub region: Region,
    /// Ribbon operators to measure.
    pub ribbons: Vec<PauliOp>,
    /// Side of the box (in lattice units) that promoted products must fit in.
    pub locality_radius: i32,
    pub periods: Periods,
}

impl CondensationJob {
    pub fn new(model: StabilizerModel, region: Region, ribbons: Vec<PauliOp>) -> CondensationJob {
        CondensationJob { model, region, ribbons, locality_radius: 2, periods: Periods::default() }
    }

    /// Ribbons for substrate labels `e^p m^q` on every edge of the region.
    pub fn on_lattice(model: StabilizerModel, lat: &Lattice, region: Region, labels: &[(i64, i64)]) -> CondensationJob {
        let edges = region.all_edges();
        let ribbons = lattice_ribbons(lat, model.d, labels, &edges, &model.qudits);
        let mut job = CondensationJob::new(model, region, ribbons);
        job.periods = Periods::of(lat);
        job
    }

    /// Same as [`on_lattice`] after checking that `subgroup` is condensable in
    /// `theory` and that `labels` name its members through `substrate`.
    pub fn checked(
        model: StabilizerModel,
        lat: &Lattice,
        region: Region,
        theory: &AnyonTheory,
        subgroup: &AnyonSubgroup,
        labels: &[(i64, i64)],
    ) -> Result<CondensationJob> {
        if !theory.is_condensable(subgroup) {
            return Err(Error::NotCondensable(theory.subgroup_names(subgroup).join(",")));
        }
        Ok(CondensationJob::on_lattice(model, lat, region, labels))
    }
}

/// Shortest ribbon for `e^p m^q` based at edge `e`: `Z^p` on the edge for a
/// charge, `X^{+-q}` for a flux, and `Z^p` times `X^{+-q}` on the partner
/// edge for a dyon (signs from [`flux_sign`]). `None` when a needed edge is
/// missing.
pub fn ribbon_at(lat: &Lattice, d: i64, e: Qudit, (p, q): (i64, i64)) -> Option<PauliOp> {
    let (p, q) = (md(p, d), md(q, d));
    let e = lat.edge(e)?;
    if p != 0 && q != 0 {
        let f = lat.edge(ribbon_partner(e))?;
        Some(PauliOp::from_sites(d, 0, [(e, (0, p)), (f, (md(flux_sign(f) * q, d), 0))]))
    } else {
        Some(PauliOp::single(d, e, md(flux_sign(e) * q, d), p))
    }
}

/// [`ribbon_at`] for every label on every edge of `edges`, skipping ribbons
/// that leave `registry`.
pub fn lattice_ribbons(lat: &Lattice, d: i64, labels: &[(i64, i64)], edges: &BTreeSet<Qudit>, registry: &BTreeSet<Qudit>) -> Vec<PauliOp> {
    let mut out = Vec::new();
    for &l in labels {
        for &e in edges {
            match ribbon_at(lat, d, e, l) {
                Some(op) if !op.is_identity() && op.support().all(|q| registry.contains(q)) => out.push(op),
                _ => {}
            }
        }
    }
    out
}

pub fn ribbon_generators(job: &CondensationJob) -> Result<GeneratorSet> {
    check_commuting(&job.ribbons).map_err(|e| Error::NotCondensable(format!("ribbons do not commute: {e}")))?;
    let mut g = GeneratorSet::new(job.model.d);
    for r in &job.ribbons {
        g.push(r.clone(), Tag::Ribbon);
    }
    Ok(g)
}

/// Row span kept in Howell form for redundancy checks.
struct Span {
    index: BTreeMap<Qudit, usize>,
    howell: Howell,
}

impl Span {
    fn new(d: i64, index: BTreeMap<Qudit, usize>, ops: &[PauliOp]) -> Span {
        let rows: Vec<Vec<i64>> = ops.iter().map(|g| g.to_row(&index)).collect();
        let howell = Howell::new(&MatZ { d, cols: 2 * index.len(), rows });
        Span { index, howell }
    }

    fn contains(&self, op: &PauliOp) -> bool {
        self.howell.contains(&op.to_row(&self.index))
    }

    fn insert(&mut self, op: &PauliOp) {
        let mut rows = std::mem::take(&mut self.howell.rows);
        rows.push(op.to_row(&self.index));
        self.howell = Howell::new(&MatZ { d: self.howell.d, cols: self.howell.cols, rows });
    }
}

/// Periods used to measure distances on wrapped lattices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Periods {
    pub x: Option<i32>,
    pub y: Option<i32>,
}

impl Periods {
    pub fn of(lat: &Lattice) -> Periods {
        Periods { x: lat.spec.wrap_x.then(|| lat.width()), y: lat.spec.wrap_y.then(|| lat.height()) }
    }

    fn offset(p: Option<i32>, a: i32, from: i32) -> i32 {
        match p {
            Some(n) => (a - from).rem_euclid(n),
            None => a - from,
        }
    }

    /// Is `q` inside the box of side `r` with lower-left corner `c`?
    fn in_box(&self, q: &Qudit, c: (i32, i32), r: i32) -> bool {
        let dx = Periods::offset(self.x, q.x, c.0);
        let dy = Periods::offset(self.y, q.y, c.1);
        (0..=r).contains(&dx) && (0..=r).contains(&dy)
    }
}

fn near(a: &PauliOp, b: &PauliOp, radius: i32, per: Periods) -> bool {
    let close = |p: Option<i32>, u: i32, v: i32| {
        let t = (u - v).abs();
        match p {
            Some(n) => t.min(n - t % n) <= radius,
            None => t <= radius,
        }
    };
    a.support().any(|p| b.support().any(|q| close(per.x, p.x, q.x) && close(per.y, p.y, q.y)))
}

/// Lower the weight of `op` by multiplying with nearby powers of `pool`.
fn reduce_weight(op: PauliOp, pool: &[PauliOp], radius: i32, per: Periods) -> PauliOp {
    let d = op.d();
    let mut cur = op;
    loop {
        let mut best: Option<PauliOp> = None;
        for g in pool.iter().filter(|g| near(g, &cur, radius, per)) {
            for k in 1..d {
                let cand = cur.multiply(&g.pow(k)).expect("same d");
                let w = best.as_ref().map_or(cur.weight(), |b| b.weight());
                if cand.weight() < w {
                    best = Some(cand);
                }
            }
        }
        match best {
            Some(b) => cur = b,
            None => return cur,
        }
    }
}

/// Local products of `removed` generators that commute with every operator of
/// `new`. A product is local when all of its factors fit in one box of side
/// `radius` (edge coordinates, periodic where `per` says so). The output is
/// weight-reduced and independent of `kept`, `new`, and earlier outputs.
pub fn promoted_generators(removed: &[PauliOp], new: &[PauliOp], kept: &[PauliOp], radius: i32, per: Periods) -> Vec<PauliOp> {
    if removed.is_empty() {
        return Vec::new();
    }
    let d = removed[0].d();
    // candidate windows: boxes touching some removed generator
    let mut subsets: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut corners: BTreeSet<(i32, i32)> = BTreeSet::new();
    for g in removed {
        for q in g.support() {
            for a in 0..=radius {
                for b in 0..=radius {
                    corners.insert((q.x - a, q.y - b));
                }
            }
        }
    }
    for &c in &corners {
        let sub: Vec<usize> = (0..removed.len()).filter(|&i| removed[i].support().all(|q| per.in_box(q, c, radius))).collect();
        if !sub.is_empty() {
            subsets.insert(sub);
        }
    }
    // drop windows contained in larger ones
    let all: Vec<Vec<usize>> = subsets.iter().cloned().collect();
    let maximal: Vec<&Vec<usize>> = all.iter().filter(|s| !all.iter().any(|t| t.len() > s.len() && s.iter().all(|i| t.binary_search(i).is_ok()))).collect();
    let mut raw: Vec<PauliOp> = Vec::new();
    for sub in maximal {
        let gens: Vec<PauliOp> = sub.iter().map(|&i| removed[i].clone()).collect();
        let cols: Vec<&PauliOp> = new.iter().filter(|n| gens.iter().any(|g| !g.commutes_with(n))).collect();
        let kernel = if cols.is_empty() {
            (0..gens.len()).map(|i| (0..gens.len()).map(|j| i64::from(i == j)).collect()).collect()
        } else {
            let pairing =
                MatZ { d, cols: cols.len(), rows: gens.iter().map(|g| cols.iter().map(|n| g.symplectic_product(n).expect("same d")).collect()).collect() };
            left_kernel(&pairing)
        };
        raw.extend(kernel.iter().map(|c| product(d, &gens, c)).filter(|p| !p.is_scalar()));
    }
    let pool: Vec<PauliOp> = kept.iter().chain(new).cloned().collect();
    let mut cands: Vec<PauliOp> = raw.into_iter().map(|p| reduce_weight(p, &pool, radius, per)).collect();
    // stable: equal weights keep discovery order
    cands.sort_by_key(|p| p.weight());
    let index = qudit_index(pool.iter().chain(removed).flat_map(|g| g.support().copied()));
    let mut span = Span::new(d, index, &pool);
    let mut out = Vec::new();
    for c in cands {
        if !span.contains(&c) {
            span.insert(&c);
            out.push(c);
        }
    }
    out
}

/// Eigenphase `c` with `P |psi> = w^c |psi>` on the fixed local state, where
/// `P` is `op` restricted to a fully fixed cluster of qudits.
fn local_eigenphase(group: &StabilizerGroup, op: &PauliOp) -> Option<i64> {
    let c = group.decompose(op)?;
    let h = product(group.d, &group.generators, &c);
    // h = w^k P fixes the state, so P has eigenvalue w^{-k}
    Some(md(-h.phase(), group.d))
}

/// Order of the subgroup supported on `set`, counted by enumeration.
fn local_order(group: &StabilizerGroup, set: &[Qudit]) -> usize {
    let d = group.d;
    let n = 2 * set.len() as u32;
    let mut count = 0;
    for code in 0..(d as usize).pow(n) {
        let mut c = code;
        let mut op = PauliOp::identity(d);
        for q in set {
            let (a, b) = ((c % d as usize) as i64, ((c / d as usize) % d as usize) as i64);
            c /= (d * d) as usize;
            op.set(*q, a, b);
        }
        if group.contains_up_to_phase(&op) {
            count += 1;
        }
    }
    count
}

/// Clusters of qudits whose state the group fixes completely: single qudits
/// with a local subgroup of order `d`, then pairs (tied by at least two
/// two-site generators) with a local subgroup of order `d^2`.
fn condensed_clusters(group: &StabilizerGroup, gens: &[PauliOp], candidates: &BTreeSet<Qudit>, region: &BTreeSet<Qudit>) -> Vec<Vec<Qudit>> {
    let d = group.d as usize;
    let mut out: Vec<Vec<Qudit>> = Vec::new();
    let mut taken: BTreeSet<Qudit> = BTreeSet::new();
    for &q in candidates {
        if local_order(group, &[q]) == d {
            out.push(vec![q]);
            taken.insert(q);
        }
    }
    let mut ties: BTreeMap<(Qudit, Qudit), usize> = BTreeMap::new();
    for g in gens.iter().filter(|g| g.weight() == 2) {
        let s: Vec<Qudit> = g.support().copied().collect();
        if s.iter().all(|q| candidates.contains(q) && !taken.contains(q)) {
            *ties.entry((s[0], s[1])).or_default() += 1;
        }
    }
    for ((a, b), n) in ties {
        if n >= 2 && !taken.contains(&a) && !taken.contains(&b) && local_order(group, &[a, b]) == d * d {
            out.push(vec![a, b]);
            taken.insert(a);
            taken.insert(b);
        }
    }
    // larger clusters: components of the remaining candidates linked by
    // generators living inside them, kept when the state on them is pure
    // only inside the region (any layer), so qudits the wall keeps stay out
    let rest: BTreeSet<Qudit> = candidates.difference(&taken).filter(|q| region.is_empty() || region.contains(&q.on_layer(0))).copied().collect();
    let inside: Vec<&PauliOp> = gens.iter().filter(|g| g.weight() > 1 && g.support().all(|q| rest.contains(q))).collect();
    let mut comp: BTreeMap<Qudit, usize> = BTreeMap::new();
    let mut parts: Vec<BTreeSet<Qudit>> = Vec::new();
    for g in inside {
        let mut hit: BTreeSet<usize> = g.support().filter_map(|q| comp.get(q).copied()).collect();
        let mut merged: BTreeSet<Qudit> = g.support().copied().collect();
        for &i in &hit {
            merged.extend(std::mem::take(&mut parts[i]));
        }
        let id = hit.pop_first().unwrap_or(parts.len());
        if id == parts.len() {
            parts.push(BTreeSet::new());
        }
        for q in &merged {
            comp.insert(*q, id);
        }
        parts[id] = merged;
    }
    for part in parts.into_iter().filter(|p| p.len() > 2 && p.len() <= MAX_CLUSTER) {
        if supported_order(group, &part) == BigUint::from(group.d as u64).pow(part.len() as u32) {
            out.push(part.into_iter().collect());
        }
    }
    out
}

/// Largest cluster tested for a pure state.
const MAX_CLUSTER: usize = 256;

/// Order of the subgroup of `group` supported inside `set`.
fn supported_order(group: &StabilizerGroup, set: &BTreeSet<Qudit>) -> BigUint {
    let d = group.d;
    let gens: Vec<&PauliOp> = group.generators.iter().filter(|g| g.support().any(|q| set.contains(q))).collect();
    let outside: Vec<Qudit> = gens.iter().flat_map(|g| g.support()).filter(|q| !set.contains(q)).copied().collect::<BTreeSet<_>>().into_iter().collect();
    let owned: Vec<PauliOp> = gens.iter().map(|g| (*g).clone()).collect();
    let kernel = if outside.is_empty() {
        (0..owned.len()).map(|i| (0..owned.len()).map(|j| i64::from(i == j)).collect()).collect()
    } else {
        let index = qudit_index(outside);
        let rows = owned.iter().map(|g| g.restrict(|q| index.contains_key(q)).to_row(&index)).collect();
        left_kernel(&MatZ { d, cols: 2 * index.len(), rows })
    };
    let ops: Vec<PauliOp> = kernel.iter().map(|c| product(d, &owned, c).with_phase(0)).filter(|p| !p.is_scalar()).collect();
    crate::group::group_order(d, &ops).unwrap_or_default()
}

/// Result of a condensation run.
#[derive(Clone, Debug)]
pub struct CondensationOutput {
    pub model: StabilizerModel,
    pub delta: DeltaRecord,
    pub removed: Vec<PauliOp>,
    pub promoted: Vec<PauliOp>,
    pub erased: BTreeSet<Qudit>,
}

pub fn apply_condensation(job: &CondensationJob) -> Result<(StabilizerModel, DeltaRecord)> {
    let out = run_condensation(job)?;
    Ok((out.model, out.delta))
}

pub fn run_condensation(job: &CondensationJob) -> Result<CondensationOutput> {
    let d = job.model.d;
    let ribbons = ribbon_generators(job)?;
    if let Some(q) = ribbons.support().into_iter().find(|q| !job.model.qudits.contains(q)) {
        return Err(Error::UnknownElement(format!("ribbon acts on {q}, which is not in the model")));
    }
    let mut kept: Vec<(PauliOp, Tag)> = Vec::new();
    let mut removed: Vec<PauliOp> = Vec::new();
    for (g, t) in job.model.generators.iter() {
        if ribbons.generators.iter().all(|r| g.commutes_with(r)) {
            kept.push((g.clone(), t));
        } else {
            removed.push(g.clone());
        }
    }
    let kept_ops: Vec<PauliOp> = kept.iter().map(|(g, _)| g.clone()).collect();
    let promoted = promoted_generators(&removed, &ribbons.generators, &kept_ops, job.locality_radius, job.periods);

    let mut gens: Vec<(PauliOp, Tag)> = ribbons.iter().map(|(g, t)| (g.clone(), t)).collect();
    gens.extend(kept);
    gens.extend(promoted.iter().map(|g| (g.clone(), Tag::Promoted)));
    let mut qudits = job.model.qudits.clone();
    let mut erased = BTreeSet::new();
    let mut candidates: BTreeSet<Qudit> = ribbons.support();
    let region = job.region.all_edges();

    for _ in 0..=job.model.qudits.len() {
        let ops: Vec<PauliOp> = gens.iter().map(|(g, _)| g.clone()).collect();
        let group = StabilizerGroup::with_qudits(d, &ops, qudits.iter().copied())?;
        let clusters = condensed_clusters(&group, &ops, &candidates, &region);
        if clusters.is_empty() {
            break;
        }
        let gone: BTreeSet<Qudit> = clusters.iter().flatten().copied().collect();
        let mut next = Vec::with_capacity(gens.len());
        candidates.clear();
        for (g, t) in gens {
            if !g.support().any(|q| gone.contains(q)) {
                next.push((g, t));
                continue;
            }
            let mut phase = g.phase();
            for c in clusters.iter().filter(|c| c.iter().any(|q| g.sites().contains_key(q))) {
                let part = g.restrict(|q| c.contains(q)).with_phase(0);
                phase +=
                    local_eigenphase(&group, &part).ok_or_else(|| Error::NonGappable(format!("{g} does not commute with the condensed state on {}", c[0])))?;
            }
            let r = g.restrict(|q| !gone.contains(q)).with_phase(md(phase, d));
            if r.is_scalar() {
                if r.phase() != 0 {
                    return Err(Error::ScalarObstruction { phase: r.phase() });
                }
                continue;
            }
            candidates.extend(r.support().copied());
            next.push((r, t));
        }
        gens = next;
        for q in &gone {
            qudits.remove(q);
        }
        erased.extend(gone);
        let ops: Vec<PauliOp> = gens.iter().map(|(g, _)| g.clone()).collect();
        check_commuting(&ops).map_err(|e| Error::NonGappable(format!("restriction broke commutation: {e}")))?;
    }

    let mut model = StabilizerModel::new(d, qudits);
    for (g, t) in gens {
        model.push(g, t);
    }
    // scalar-freeness of the result
    model.group()?;
    let delta = DeltaRecord::between(&job.model, &model)?;
    Ok(CondensationOutput { model, delta, removed, promoted, erased })
}

/// Apply several jobs in sequence, each on the previous output.
pub fn condense_sequence(model: StabilizerModel, steps: &[(Region, Vec<PauliOp>)]) -> Result<(StabilizerModel, Vec<DeltaRecord>)> {
    let mut cur = model;
    let mut deltas = Vec::new();
    for (region, ribbons) in steps {
        let ribbons: Vec<PauliOp> = ribbons.iter().filter(|r| r.support().all(|q| cur.qudits.contains(q))).cloned().collect();
        let job = CondensationJob::new(cur, region.clone(), ribbons);
        let (m, dlt) = apply_condensation(&job)?;
        cur = m;
        deltas.push(dlt);
    }
    Ok((cur, deltas))
}

/// Symplectic matrix of a model with its registry as columns.
pub fn model_matrix(model: &StabilizerModel) -> MatZ {
    symplectic_matrix(model.d, model.ops(), &qudit_index(model.qudits.iter().copied()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionDescriptor {
    /// Closed box `[x0, y0, x1, y1]` in vertex coordinates.
    Box([i32; 4]),
    Edges(Vec<Qudit>),
}

/// File form of a lattice condensation job. Labels name anyons of `D(Z_d)`
/// such as `"e2m2"`; they must generate a condensable subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobDescriptor {
    pub lattice: LatticeSpec,
    pub region: RegionDescriptor,
    pub labels: Vec<String>,
    #[serde(default = "default_radius")]
    pub locality_radius: i32,
}

fn default_radius() -> i32 {
    2
}

impl JobDescriptor {
    pub fn from_json(s: &str) -> Result<JobDescriptor> {
        serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })
    }

    pub fn job(&self, model: StabilizerModel) -> Result<CondensationJob> {
        let lat = Lattice::build(self.lattice)?;
        let region = match &self.region {
            RegionDescriptor::Box([x0, y0, x1, y1]) => Region::from_edges(Region::edges_in_box(&lat, *x0, *y0, *x1, *y1)),
            RegionDescriptor::Edges(e) => {
                if let Some(q) = e.iter().find(|q| lat.edge(**q).is_none()) {
                    return Err(Error::UnknownElement(q.to_string()));
                }
                Region::from_edges(e.iter().filter_map(|q| lat.edge(*q)))
            }
        };
        let d = model.d;
        let theory = AnyonTheory::dz(d);
        let idx: Vec<usize> = self.labels.iter().map(|l| theory.index_of(l)).collect::<Result<_>>()?;
        let sub = theory.generate(&idx);
        let labels: Vec<(i64, i64)> = idx.iter().map(|&a| (a as i64 / d, a as i64 % d)).collect();
        let mut job = CondensationJob::checked(model, &lat, region, &theory, &sub, &labels)?;
        job.locality_radius = self.locality_radius;
        Ok(job)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degeneracy::{gsd_absolute, gsd_update};
    use crate::model::{build_model, ModelKind};

    fn z(d: i64, n: usize) -> (Lattice, StabilizerModel) {
        let spec = LatticeSpec::torus(n, n);
        (Lattice::build(spec).unwrap(), build_model(ModelKind::ZdBulk { d }, spec).unwrap())
    }

    #[test]
    fn ribbons_commute_with_each_other() {
        let (lat, m) = z(4, 3);
        let region = Region::from_edges(lat.edges());
        let job = CondensationJob::on_lattice(m, &lat, region, &[(2, 2)]);
        assert!(!job.ribbons.is_empty());
        crate::group::check_commuting(&job.ribbons).unwrap();
    }

    #[test]
    fn ledger_matches_each_step() {
        let (lat, m) = z(4, 3);
        let job = CondensationJob::on_lattice(m, &lat, Region::from_edges(Region::edges_in_box(&lat, 0, 0, 1, 1)), &[(2, 2)]);
        let out = run_condensation(&job).unwrap();
        let before = gsd_absolute(&job.model).unwrap();
        assert_eq!(gsd_update(&before, &out.delta).unwrap(), gsd_absolute(&out.model).unwrap());
        crate::group::check_commuting(out.model.ops()).unwrap();
        assert!(!out.removed.is_empty());
    }

    #[test]
    fn full_charge_condensation_kills_the_code() {
        // condensing e everywhere on D(Z2) leaves a trivial product state
        let (lat, m) = z(2, 3);
        let job = CondensationJob::on_lattice(m, &lat, Region::from_edges(lat.edges()), &[(1, 0)]);
        let out = run_condensation(&job).unwrap();
        assert_eq!(gsd_absolute(&out.model).unwrap(), 1u8.into());
    }

    #[test]
    fn descriptor_rejects_anyons_with_spin() {
        let (_, m) = z(4, 3);
        let desc =
            JobDescriptor::from_json(r#"{"lattice":{"width":3,"height":3,"wrap_x":true,"wrap_y":true},"region":{"box":[0,0,1,1]},"labels":["em"]}"#).unwrap();
        assert!(matches!(desc.job(m.clone()), Err(Error::NotCondensable(_))));
        let desc =
            JobDescriptor::from_json(r#"{"lattice":{"width":3,"height":3,"wrap_x":true,"wrap_y":true},"region":{"edges":["e(1,1,H)"]},"labels":["f2"]}"#)
                .unwrap();
        assert!(desc.job(m.clone()).is_err());
        let desc =
            JobDescriptor::from_json(r#"{"lattice":{"width":3,"height":3,"wrap_x":true,"wrap_y":true},"region":{"box":[0,0,1,1]},"labels":["e2m2"]}"#).unwrap();
        assert_eq!(desc.job(m).unwrap().locality_radius, 2);
    }
}
