//! Ground-state degeneracy, logical operators and code distance.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{product, symplectic_matrix, StabilizerGroup};
use crate::linalg::{diagonalize_with_inverse, gcd, left_kernel, md, right_kernel, MatZ};
use crate::model::StabilizerModel;
use crate::pauli::{PauliOp, Qudit};

/// Hilbert dimensions above this are refused by the brute-force oracle.
pub const BRUTE_FORCE_CAP: u64 = 1 << 20;

/// `d^n / |S|`.
pub fn gsd_absolute(model: &StabilizerModel) -> Result<BigUint> {
    let order = model.group_order()?;
    let dim = BigUint::from(model.d as u64).pow(model.num_qudits() as u32);
    let (q, r) = dim.div_rem(&order);
    assert!(r.is_zero(), "group order must divide the Hilbert dimension");
    Ok(q)
}

/// Enumerate the full group generated by `gens` (phases included) and return
/// `Tr(prod_g P_g)` where `P_g` projects onto the `+1` eigenspace of `g`.
///
/// The trace of a Pauli monomial is `d^n w^phase` when it has no X or Z
/// factors and zero otherwise, so the trace is `d^n / |G| * sum_{scalars} w^phase`.
/// The scalar subgroup sums to zero unless it is trivial.
pub fn gsd_bruteforce(model: &StabilizerModel) -> Result<BigUint> {
    let d = model.d;
    let n = model.num_qudits();
    let dim = (d as f64).powi(n as i32);
    if dim > BRUTE_FORCE_CAP as f64 {
        return Err(Error::CapExceeded(format!("{d}^{n}")));
    }
    let index: BTreeMap<Qudit, usize> = model.qudits.iter().enumerate().map(|(i, q)| (*q, i)).collect();
    let elements = enumerate_group(d, model.ops(), &index);
    let scalars: Vec<i64> = elements.iter().filter(|e| e.0.iter().all(|&v| v == 0)).map(|e| e.1).collect();
    if scalars.iter().any(|&p| p != 0) {
        return Ok(BigUint::zero());
    }
    let dim = BigUint::from(d as u64).pow(n as u32);
    let (q, r) = dim.div_rem(&BigUint::from(elements.len()));
    assert!(r.is_zero());
    Ok(q)
}

/// All group elements as `(interleaved exponent row, phase)`, built coset by coset.
pub fn enumerate_group(d: i64, gens: &[PauliOp], index: &BTreeMap<Qudit, usize>) -> Vec<(Vec<u8>, i64)> {
    let key = |p: &PauliOp| -> (Vec<u8>, i64) { (p.to_row(index).into_iter().map(|v| v as u8).collect(), p.phase()) };
    let mut elems: Vec<PauliOp> = vec![PauliOp::identity(d)];
    let mut seen: HashSet<(Vec<u8>, i64)> = HashSet::new();
    seen.insert(key(&elems[0]));
    for g in gens {
        // smallest j > 0 with g^j already present
        let mut powers = vec![];
        let mut gj = g.clone();
        while !seen.contains(&key(&gj)) {
            powers.push(gj.clone());
            gj = gj.multiply(g).expect("same d");
        }
        let base = elems.clone();
        for p in &powers {
            for e in &base {
                let x = e.multiply(p).expect("same d");
                if seen.insert(key(&x)) {
                    elems.push(x);
                }
            }
        }
    }
    elems.iter().map(key).collect()
}

/// Incremental update `GSD' = GSD * r_D / prod_m m^{dn_m - dl_m}`.
pub fn gsd_update(old: &BigUint, delta: &DeltaRecord) -> Result<BigUint> {
    let mut num = old * &delta.r_num;
    let mut den = delta.r_den.clone();
    let orders: BTreeSet<i64> = delta.dn.keys().chain(delta.dl.keys()).copied().collect();
    for m in orders {
        let e = delta.dn.get(&m).copied().unwrap_or(0) - delta.dl.get(&m).copied().unwrap_or(0);
        let f = BigUint::from(m as u64).pow(e.unsigned_abs() as u32);
        if e > 0 {
            den *= f;
        } else {
            num *= f;
        }
    }
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InconsistentDelta(format!("{num}/{den} is not an integer")));
    }
    Ok(q)
}

/// Counting formula from scratch: the update applied to the empty
/// generator set on the same qudits, whose degeneracy is `d^n`.
pub fn gsd_ledger(model: &StabilizerModel) -> Result<BigUint> {
    let empty = StabilizerModel::new(model.d, model.qudits.iter().copied());
    let start = BigUint::from(model.d as u64).pow(model.num_qudits() as u32);
    gsd_update(&start, &DeltaRecord::between(&empty, model)?)
}

/// Change in Hilbert dimension, generator counts `n_m` and dependency counts
/// `l_m` between two generator sets. `n_m` counts generators of order `m`;
/// `l_m = n_m - c_m` with `c_m` the number of `Z_m` factors in the primary
/// decomposition of the group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRecord {
    pub r_num: BigUint,
    pub r_den: BigUint,
    pub dn: BTreeMap<i64, i64>,
    pub dl: BTreeMap<i64, i64>,
}

/// `(n_m, l_m)` maps for a generator set.
pub fn order_counts(group: &StabilizerGroup) -> (BTreeMap<i64, i64>, BTreeMap<i64, i64>) {
    let mut n: BTreeMap<i64, i64> = BTreeMap::new();
    for g in &group.generators {
        *n.entry(g.order()).or_default() += 1;
    }
    let mut c: BTreeMap<i64, i64> = BTreeMap::new();
    for o in primary_parts(&group.cyclic_orders()) {
        *c.entry(o).or_default() += 1;
    }
    let mut l = BTreeMap::new();
    for m in n.keys().chain(c.keys()).copied().collect::<BTreeSet<_>>() {
        l.insert(m, n.get(&m).copied().unwrap_or(0) - c.get(&m).copied().unwrap_or(0));
    }
    (n, l)
}

/// Split cyclic orders into prime-power parts.
fn primary_parts(orders: &[i64]) -> Vec<i64> {
    let mut out = Vec::new();
    for &o in orders {
        let mut rest = o;
        let mut p = 2;
        while rest > 1 {
            if rest % p == 0 {
                let mut q = 1;
                while rest % p == 0 {
                    rest /= p;
                    q *= p;
                }
                out.push(q);
            }
            p += 1;
        }
    }
    out
}

impl DeltaRecord {
    pub fn between(before: &StabilizerModel, after: &StabilizerModel) -> Result<DeltaRecord> {
        let ga = before.group()?;
        let gb = after.group()?;
        let (na, la) = order_counts(&ga);
        let (nb, lb) = order_counts(&gb);
        let diff = |a: &BTreeMap<i64, i64>, b: &BTreeMap<i64, i64>| -> BTreeMap<i64, i64> {
            let keys: BTreeSet<i64> = a.keys().chain(b.keys()).copied().collect();
            keys.into_iter().map(|k| (k, b.get(&k).copied().unwrap_or(0) - a.get(&k).copied().unwrap_or(0))).filter(|&(_, v)| v != 0).collect()
        };
        let da = BigUint::from(before.d as u64).pow(before.num_qudits() as u32);
        let db = BigUint::from(after.d as u64).pow(after.num_qudits() as u32);
        let g = da.gcd(&db);
        Ok(DeltaRecord { r_num: db / &g, r_den: da / &g, dn: diff(&na, &nb), dl: diff(&la, &lb) })
    }
}

/// Generators of the centralizer of `S` (as exponent rows over `index`).
pub fn centralizer_rows(d: i64, gens: &[PauliOp], index: &BTreeMap<Qudit, usize>) -> Vec<Vec<i64>> {
    let n = index.len();
    let m = symplectic_matrix(d, gens, index);
    // P commutes with g iff sum_j (z_g x_P - x_g z_P) = 0
    let w = MatZ { d, cols: 2 * n, rows: m.rows.iter().map(|r| (0..n).flat_map(|j| [r[2 * j + 1], md(-r[2 * j], d)]).collect()).collect() };
    if w.rows.is_empty() {
        return (0..2 * n).map(|i| (0..2 * n).map(|j| i64::from(i == j)).collect()).collect();
    }
    right_kernel(&w)
}

/// Logical operators: a cyclic basis of `C(S)/S` with the order of each element.
pub fn logical_basis(model: &StabilizerModel) -> Result<Vec<(PauliOp, i64)>> {
    let d = model.d;
    let group = model.group()?;
    let index = &group.index;
    let qudits: Vec<Qudit> = index.keys().copied().collect();
    let k_rows = centralizer_rows(d, model.ops(), index);
    let s_rows = symplectic_matrix(d, model.ops(), index).rows;
    // relations c with c K in S: left kernel of [K; S] restricted to the K part
    let mut stacked = MatZ::new(d, 2 * qudits.len());
    for r in k_rows.iter().chain(&s_rows) {
        stacked.push(r.clone());
    }
    let rel: Vec<Vec<i64>> = left_kernel(&stacked).into_iter().map(|c| c[..k_rows.len()].to_vec()).collect();
    let (diag, vinv) = diagonalize_with_inverse(&MatZ { d, cols: k_rows.len(), rows: rel });
    let mut out = Vec::new();
    for (t, coeffs) in vinv.iter().enumerate() {
        let ord = {
            let g = gcd(diag[t], d);
            if g == 0 {
                d
            } else {
                g
            }
        };
        if ord == 1 {
            continue;
        }
        let mut row = vec![0i64; 2 * qudits.len()];
        for (c, kr) in coeffs.iter().zip(&k_rows) {
            if *c != 0 {
                for (a, b) in row.iter_mut().zip(kr) {
                    *a = md(*a + c * b, d);
                }
            }
        }
        out.push((PauliOp::from_row(d, &qudits, &row), ord));
    }
    Ok(out)
}

pub fn logical_generators(model: &StabilizerModel) -> Result<Vec<PauliOp>> {
    Ok(logical_basis(model)?.into_iter().map(|(p, _)| p).collect())
}

/// `|C(S)/S|`.
pub fn quotient_order(model: &StabilizerModel) -> Result<BigUint> {
    Ok(logical_basis(model)?.iter().map(|(_, o)| BigUint::from(*o as u64)).product())
}

/// Physical qubits carried by one qudit of dimension `d` (`log2 d`, rounded up).
pub fn qubits_per_qudit(d: i64) -> usize {
    (64 - (d - 1).leading_zeros()) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParameters {
    pub n_qubits: usize,
    pub gsd: String,
    /// `log2 GSD` when it is an integer.
    pub k: Option<u32>,
    /// Minimal qubit weight per nontrivial logical class found within the cap.
    pub class_weights: Vec<(Vec<i64>, usize)>,
    pub d_x: Option<usize>,
    pub d_z: Option<usize>,
    /// Weight cap in qudits used by the search.
    pub cap: usize,
    /// Every nontrivial class was reached within the cap.
    pub all_classes: bool,
    /// `d_x` and `d_z` are exact: the search below the cap is exhaustive, so
    /// a minimum found there is the true minimum. Also true when `k = 0`.
    pub certified: bool,
}

/// Operators supported inside `sites` commuting with every generator, as a
/// kernel basis.
fn restricted_kernel(d: i64, sites: &[Qudit], gens_on: &[&PauliOp]) -> Vec<PauliOp> {
    let local: BTreeMap<Qudit, usize> = sites.iter().enumerate().map(|(i, q)| (*q, i)).collect();
    let n = sites.len();
    let w = MatZ {
        d,
        cols: 2 * n,
        rows: gens_on
            .iter()
            .map(|g| {
                let mut r = vec![0i64; 2 * n];
                for (q, &(x, z)) in g.sites() {
                    if let Some(&j) = local.get(q) {
                        r[2 * j] = z;
                        r[2 * j + 1] = md(-x, d);
                    }
                }
                r
            })
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect(),
    };
    let kernel = if w.rows.is_empty() { (0..2 * n).map(|i| (0..2 * n).map(|j| i64::from(i == j)).collect()).collect() } else { right_kernel(&w) };
    kernel.iter().map(|kv| PauliOp::from_row(d, sites, kv)).collect()
}

/// Logical class signature of every operator supported inside `sites`.
/// Returns the span of class signatures (pairings with the logical basis).
fn restricted_signatures(d: i64, sites: &[Qudit], gens_on: &[&PauliOp], logicals: &[PauliOp]) -> Vec<Vec<i64>> {
    restricted_kernel(d, sites, gens_on)
        .iter()
        .map(|p| logicals.iter().map(|l| p.symplectic_product(l).expect("same d")).collect::<Vec<i64>>())
        .filter(|s: &Vec<i64>| s.iter().any(|&v| v != 0))
        .collect()
}

fn span_of(d: i64, gens: &[Vec<i64>], len: usize) -> BTreeSet<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    seen.insert(vec![0; len]);
    let mut frontier = vec![vec![0i64; len]];
    while let Some(v) = frontier.pop() {
        for g in gens {
            let w: Vec<i64> = v.iter().zip(g).map(|(a, b)| md(a + b, d)).collect();
            if seen.insert(w.clone()) {
                frontier.push(w);
            }
        }
    }
    seen
}

/// Qudits sharing a generator are neighbours.
fn interaction_graph(model: &StabilizerModel, qudits: &[Qudit]) -> Vec<Vec<usize>> {
    let index: BTreeMap<Qudit, usize> = qudits.iter().enumerate().map(|(i, q)| (*q, i)).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); qudits.len()];
    for g in model.ops() {
        let s: Vec<usize> = g.support().filter_map(|q| index.get(q).copied()).collect();
        for &a in &s {
            for &b in &s {
                if a != b {
                    adj[a].insert(b);
                }
            }
        }
    }
    adj.into_iter().map(|s| s.into_iter().collect()).collect()
}

/// Minimal support size per logical class, up to `cap` qudits.
///
/// A minimal representative splits into pieces no generator touches twice;
/// each piece commutes with every generator on its own and is itself a
/// nontrivial logical (a stabilizer piece could be dropped). So only sets
/// connected in the interaction graph are searched, and the classes of
/// disconnected representatives are recovered as sums afterwards.
pub fn min_support_per_class(model: &StabilizerModel, cap: usize) -> Result<(Vec<PauliOp>, BTreeMap<Vec<i64>, usize>)> {
    let d = model.d;
    let logicals = logical_generators(model)?;
    let mut best: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    if logicals.is_empty() {
        return Ok((logicals, best));
    }
    let total = span_of(d, &class_signatures_of_basis(model, &logicals), logicals.len()).len() - 1;
    let qudits: Vec<Qudit> = model.qudits.iter().copied().collect();
    let adj = interaction_graph(model, &qudits);
    let cap = cap.min(qudits.len());
    for w in 1..=cap {
        let found: Vec<BTreeMap<Vec<i64>, usize>> = (0..qudits.len())
            .into_par_iter()
            .map(|v| {
                let mut out = BTreeMap::new();
                let mut seen: HashSet<usize> = (0..=v).collect();
                let ext: Vec<usize> = adj[v].iter().copied().filter(|&u| u > v).collect();
                seen.extend(ext.iter().copied());
                let mut sub = vec![v];
                connected_sets(model, &qudits, &adj, &logicals, w, v, &mut sub, ext, &mut seen, &mut out);
                out
            })
            .collect();
        for m in found {
            for (sig, k) in m {
                let e = best.entry(sig).or_insert(k);
                *e = (*e).min(k);
            }
        }
        close_under_sums(d, &mut best, cap);
        // sums may overshoot a connected representative not yet searched
        if best.len() == total && best.values().all(|&k| k <= w) {
            break;
        }
    }
    Ok((logicals, best))
}

/// Add classes reachable as sums of found classes within the cap.
fn close_under_sums(d: i64, best: &mut BTreeMap<Vec<i64>, usize>, cap: usize) {
    loop {
        let items: Vec<(Vec<i64>, usize)> = best.iter().map(|(s, w)| (s.clone(), *w)).collect();
        let mut changed = false;
        for (a, wa) in &items {
            for (b, wb) in &items {
                let w = wa + wb;
                if w > cap {
                    continue;
                }
                let c: Vec<i64> = a.iter().zip(b).map(|(x, y)| md(x + y, d)).collect();
                if c.iter().all(|&v| v == 0) {
                    continue;
                }
                let e = best.entry(c).or_insert(usize::MAX);
                if w < *e {
                    *e = w;
                    changed = true;
                }
            }
        }
        if !changed {
            return;
        }
    }
}

fn class_signatures_of_basis(_model: &StabilizerModel, logicals: &[PauliOp]) -> Vec<Vec<i64>> {
    logicals.iter().map(|p| logicals.iter().map(|l| p.symplectic_product(l).expect("same d")).collect()).collect()
}

/// Redelmeier enumeration of the connected sets of size `w` whose smallest
/// index is `root`; each is visited once.
#[allow(clippy::too_many_arguments)]
fn connected_sets(
    model: &StabilizerModel,
    qudits: &[Qudit],
    adj: &[Vec<usize>],
    logicals: &[PauliOp],
    w: usize,
    root: usize,
    sub: &mut Vec<usize>,
    mut ext: Vec<usize>,
    seen: &mut HashSet<usize>,
    out: &mut BTreeMap<Vec<i64>, usize>,
) {
    if sub.len() == w {
        let sites: Vec<Qudit> = sub.iter().map(|&i| qudits[i]).collect();
        let set: BTreeSet<Qudit> = sites.iter().copied().collect();
        let gens_on: Vec<&PauliOp> = model.ops().iter().filter(|g| g.support().any(|q| set.contains(q))).collect();
        let sigs = restricted_signatures(model.d, &sites, &gens_on, logicals);
        if !sigs.is_empty() {
            for s in span_of(model.d, &sigs, logicals.len()) {
                if s.iter().any(|&v| v != 0) {
                    out.entry(s).or_insert(w);
                }
            }
        }
        return;
    }
    while let Some(u) = ext.pop() {
        let mut next = ext.clone();
        let mut added = Vec::new();
        for &x in &adj[u] {
            if x > root && !seen.contains(&x) {
                seen.insert(x);
                added.push(x);
                next.push(x);
            }
        }
        sub.push(u);
        connected_sets(model, qudits, adj, logicals, w, root, sub, next, seen, out);
        sub.pop();
        for x in added {
            seen.remove(&x);
        }
    }
}

/// Weight-capped distance search. Weights are reported in qubits.
pub fn distance(model: &StabilizerModel, cap: usize) -> Result<CodeParameters> {
    let gsd = gsd_absolute(model)?;
    let qpq = qubits_per_qudit(model.d);
    let k = if gsd.count_ones() == 1 { Some(gsd.bits() as u32 - 1) } else { None };
    let (logicals, best) = min_support_per_class(model, cap)?;
    let total = if logicals.is_empty() { 0 } else { span_of(model.d, &class_signatures_of_basis(model, &logicals), logicals.len()).len() - 1 };
    let all_classes = best.len() == total;
    // d_Z: lightest class; d_X: lightest class pairing nontrivially with it
    let lightest = best.iter().min_by_key(|(s, w)| (**w, (*s).clone())).map(|(s, w)| (s.clone(), *w));
    let (d_z, d_x) = match &lightest {
        None => (None, None),
        Some((sig, wz)) => {
            let z_op = op_for_signature(model, &logicals, sig);
            let dx = best
                .iter()
                .filter(|(s, _)| {
                    let other = op_for_signature(model, &logicals, s);
                    !z_op.commutes_with(&other)
                })
                .map(|(_, w)| *w)
                .min();
            (Some(wz * qpq), dx.map(|w| w * qpq))
        }
    };
    let certified = total == 0 || (d_z.is_some() && d_x.is_some());
    Ok(CodeParameters {
        n_qubits: model.num_qudits() * qpq,
        gsd: gsd.to_string(),
        k,
        class_weights: best.into_iter().map(|(s, w)| (s, w * qpq)).collect(),
        d_x,
        d_z,
        cap,
        all_classes,
        certified,
    })
}

/// Pairings of `op` with each element of a logical basis; two logicals are
/// in the same class exactly when their signatures agree.
pub fn class_signature(logicals: &[PauliOp], op: &PauliOp) -> Result<Vec<i64>> {
    logicals.iter().map(|l| op.symplectic_product(l)).collect()
}

/// A logical operator whose pairings with the basis equal `sig`.
fn op_for_signature(model: &StabilizerModel, logicals: &[PauliOp], sig: &[i64]) -> PauliOp {
    let d = model.d;
    let basis_sigs = class_signatures_of_basis(model, logicals);
    // brute-force over coefficient vectors; quotients are tiny in practice
    let k = logicals.len();
    let mut coeffs = vec![0i64; k];
    loop {
        let s: Vec<i64> = (0..k).map(|j| md(coeffs.iter().zip(&basis_sigs).map(|(c, b)| c * b[j]).sum::<i64>(), d)).collect();
        if s == sig {
            return product(d, logicals, &coeffs);
        }
        let mut i = 0;
        loop {
            if i == k {
                panic!("signature {sig:?} is not realized by the logical basis");
            }
            coeffs[i] += 1;
            if coeffs[i] < d {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// Whether some centralizer element outside `S` is supported on `sites`.
pub fn nontrivial_logicals_on(model: &StabilizerModel, sites: &BTreeSet<Qudit>) -> Result<bool> {
    let logicals = logical_generators(model)?;
    Ok(logical_on(model, &logicals, sites).is_some())
}

/// A centralizer element outside `S` supported on `sites`, given a logical
/// basis of `model`.
pub fn logical_on(model: &StabilizerModel, logicals: &[PauliOp], sites: &BTreeSet<Qudit>) -> Option<PauliOp> {
    if logicals.is_empty() {
        return None;
    }
    let sites: Vec<Qudit> = sites.iter().copied().filter(|q| model.qudits.contains(q)).collect();
    let set: BTreeSet<Qudit> = sites.iter().copied().collect();
    let gens_on: Vec<&PauliOp> = model.ops().iter().filter(|g| g.support().any(|q| set.contains(q))).collect();
    restricted_kernel(model.d, &sites, &gens_on).into_iter().find(|p| logicals.iter().any(|l| !p.commutes_with(l)))
}

/// `log2` of an exact power of two, if it is one.
pub fn log2_exact(n: &BigUint) -> Option<u64> {
    (n.count_ones() == 1).then(|| n.bits() - 1)
}

/// Convenience for small values.
pub fn to_u64(n: &BigUint) -> u64 {
    n.to_u64().expect("fits in u64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::LatticeSpec;
    use crate::model::{build_model, ModelKind};

    fn toric(d: i64, w: usize, h: usize) -> StabilizerModel {
        build_model(ModelKind::ZdBulk { d }, LatticeSpec::torus(w, h)).unwrap()
    }

    #[test]
    fn three_counts_agree_on_tori() {
        for (d, w, h) in [(2, 2, 2), (3, 2, 2), (2, 3, 2)] {
            let m = toric(d, w, h);
            let want = BigUint::from((d * d) as u64);
            assert_eq!(gsd_absolute(&m).unwrap(), want);
            assert_eq!(gsd_bruteforce(&m).unwrap(), want);
            assert_eq!(gsd_ledger(&m).unwrap(), want);
            // X and Z partners for every logical qudit
            assert_eq!(quotient_order(&m).unwrap(), &want * &want);
        }
    }

    #[test]
    fn trace_refuses_large_spaces() {
        assert!(matches!(gsd_bruteforce(&toric(4, 4, 4)), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn inconsistent_phase_gives_zero() {
        let q = Qudit::h(0, 0);
        let mut m = StabilizerModel::new(2, [q]);
        m.push(PauliOp::single(2, q, 0, 1), crate::group::Tag::Edge);
        m.push(PauliOp::single(2, q, 0, 1).with_phase(1), crate::group::Tag::Edge);
        assert_eq!(gsd_bruteforce(&m).unwrap(), BigUint::zero());
    }

    #[test]
    fn update_rejects_fractions() {
        let delta = DeltaRecord { r_num: BigUint::from(1u8), r_den: BigUint::from(3u8), dn: BTreeMap::new(), dl: BTreeMap::new() };
        assert!(gsd_update(&BigUint::from(4u8), &delta).is_err());
    }

    #[test]
    fn logical_pairs_and_signatures() {
        let m = toric(3, 2, 2);
        let basis = logical_generators(&m).unwrap();
        assert_eq!(basis.len(), 4);
        for l in &basis {
            assert!(m.ops().iter().all(|g| g.commutes_with(l)));
            let sig = class_signature(&basis, l).unwrap();
            assert!(sig.iter().any(|&s| s != 0), "{l} pairs trivially with every logical");
        }
        let g = &m.ops()[0];
        assert!(class_signature(&basis, g).unwrap().iter().all(|&s| s == 0));
    }

    #[test]
    fn toric_distance_is_the_side() {
        let p = distance(&toric(2, 3, 3), 3).unwrap();
        assert_eq!((p.d_x, p.d_z, p.k, p.n_qubits), (Some(3), Some(3), Some(2), 18));
        assert!(p.certified);
        // mixed classes need six qudits
        assert!(!p.all_classes);
        let p = distance(&toric(4, 2, 2), 2).unwrap();
        assert_eq!((p.d_x, p.d_z), (Some(4), Some(4)));
    }

    #[test]
    fn distance_does_not_depend_on_workers() {
        let m = toric(2, 3, 3);
        let many = distance(&m, 6).unwrap();
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(|| distance(&m, 6).unwrap());
        assert_eq!(one, many);
        // X and Z strings sharing one qudit
        assert!(many.class_weights.iter().any(|(_, w)| *w == 5));
    }

    #[test]
    fn distance_below_the_minimum_finds_nothing() {
        let p = distance(&toric(2, 3, 3), 2).unwrap();
        assert_eq!((p.d_x, p.d_z, p.certified), (None, None, false));
    }

    #[test]
    fn qubit_counts() {
        assert_eq!([2, 3, 4, 5, 8].map(qubits_per_qudit), [1, 2, 2, 3, 3]);
        assert_eq!(log2_exact(&BigUint::from(64u8)), Some(6));
        assert_eq!(log2_exact(&BigUint::from(12u8)), None);
    }
}
