//! Stabilizer groups: commutation, scalar-freeness, order, membership.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{cyclic_orders, left_kernel, MatZ, RowSolver};
use crate::pauli::{PauliOp, Qudit};

/// Where a generator came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Vertex,
    Plaquette,
    Edge,
    Ribbon,
    Wall,
    Promoted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    pub d: i64,
    pub generators: Vec<PauliOp>,
    pub tags: Vec<Tag>,
}

impl GeneratorSet {
    pub fn new(d: i64) -> GeneratorSet {
        GeneratorSet { d, generators: Vec::new(), tags: Vec::new() }
    }

    pub fn push(&mut self, op: PauliOp, tag: Tag) {
        assert_eq!(op.d(), self.d);
        self.generators.push(op);
        self.tags.push(tag);
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PauliOp, Tag)> {
        self.generators.iter().zip(self.tags.iter().copied())
    }

    /// Union of all supports.
    pub fn support(&self) -> BTreeSet<Qudit> {
        self.generators.iter().flat_map(|g| g.support().copied()).collect()
    }
}

/// Qudit to column index.
pub fn qudit_index(qudits: impl IntoIterator<Item = Qudit>) -> BTreeMap<Qudit, usize> {
    let set: BTreeSet<Qudit> = qudits.into_iter().collect();
    set.into_iter().enumerate().map(|(i, q)| (q, i)).collect()
}

pub fn symplectic_matrix(d: i64, gens: &[PauliOp], index: &BTreeMap<Qudit, usize>) -> MatZ {
    MatZ { d, cols: 2 * index.len(), rows: gens.iter().map(|g| g.to_row(index)).collect() }
}

/// Pairwise commutation, checking only pairs that share a qudit.
pub fn check_commuting(gens: &[PauliOp]) -> Result<()> {
    let mut by_site: HashMap<Qudit, Vec<usize>> = HashMap::new();
    for (i, g) in gens.iter().enumerate() {
        for q in g.support() {
            by_site.entry(*q).or_default().push(i);
        }
    }
    let mut checked: BTreeSet<(usize, usize)> = BTreeSet::new();
    for list in by_site.values() {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                if checked.insert((i, j)) {
                    let s = gens[i].symplectic_product(&gens[j])?;
                    if s != 0 {
                        return Err(Error::InvalidStabilizer(i, j, s));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `prod_i g_i^{c_i}` in the given order.
pub fn product(d: i64, gens: &[PauliOp], coeffs: &[i64]) -> PauliOp {
    let mut acc = PauliOp::identity(d);
    for (g, &c) in gens.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.multiply(&g.pow(c)).expect("same d");
        }
    }
    acc
}

/// An analyzed abelian stabilizer group.
pub struct StabilizerGroup {
    pub d: i64,
    pub index: BTreeMap<Qudit, usize>,
    pub generators: Vec<PauliOp>,
    solver: RowSolver,
}

impl StabilizerGroup {
    /// Validate commutation and scalar-freeness; qudits default to the union of supports.
    pub fn new(d: i64, gens: &[PauliOp]) -> Result<StabilizerGroup> {
        let qudits: BTreeSet<Qudit> = gens.iter().flat_map(|g| g.support().copied()).collect();
        StabilizerGroup::with_qudits(d, gens, qudits)
    }

    pub fn with_qudits(d: i64, gens: &[PauliOp], qudits: impl IntoIterator<Item = Qudit>) -> Result<StabilizerGroup> {
        for g in gens {
            if g.d() != d {
                return Err(Error::DimensionMismatch(d, g.d()));
            }
        }
        check_commuting(gens)?;
        let index = qudit_index(qudits.into_iter().chain(gens.iter().flat_map(|g| g.support().copied())));
        // every g^d must be the identity, otherwise exponents are not defined mod d
        for g in gens {
            let ph = g.pow(d).phase();
            if ph != 0 {
                return Err(Error::ScalarObstruction { phase: ph });
            }
        }
        let m = symplectic_matrix(d, gens, &index);
        for rel in left_kernel(&m) {
            let p = product(d, gens, &rel);
            debug_assert!(p.is_scalar());
            if p.phase() != 0 {
                return Err(Error::ScalarObstruction { phase: p.phase() });
            }
        }
        let solver = RowSolver::new(&m);
        Ok(StabilizerGroup { d, index, generators: gens.to_vec(), solver })
    }

    pub fn order(&self) -> BigUint {
        self.solver.span_order()
    }

    pub fn num_qudits(&self) -> usize {
        self.index.len()
    }

    /// Exponents `c` with `prod g_i^{c_i}` equal to `op` up to phase.
    pub fn decompose(&self, op: &PauliOp) -> Option<Vec<i64>> {
        if op.d() != self.d || op.support().any(|q| !self.index.contains_key(q)) {
            return None;
        }
        self.solver.solve(&op.to_row(&self.index))
    }

    /// Membership including the phase.
    pub fn contains(&self, op: &PauliOp) -> bool {
        match self.decompose(op) {
            Some(c) => product(self.d, &self.generators, &c).phase() == op.phase(),
            None => false,
        }
    }

    /// Membership of the exponent vector only.
    pub fn contains_up_to_phase(&self, op: &PauliOp) -> bool {
        self.decompose(op).is_some()
    }

    /// Orders of a cyclic decomposition of the group.
    pub fn cyclic_orders(&self) -> Vec<i64> {
        cyclic_orders(&symplectic_matrix(self.d, &self.generators, &self.index))
    }
}

/// `|<gens>|`; fails on non-commuting generators or a nontrivial scalar.
pub fn group_order(d: i64, gens: &[PauliOp]) -> Result<BigUint> {
    Ok(StabilizerGroup::new(d, gens)?.order())
}

/// Both groups contain each other's generators (phases included).
pub fn same_group(d: i64, a: &[PauliOp], b: &[PauliOp]) -> Result<bool> {
    let ga = StabilizerGroup::new(d, a)?;
    let gb = StabilizerGroup::new(d, b)?;
    Ok(b.iter().all(|g| ga.contains(g)) && a.iter().all(|g| gb.contains(g)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i32) -> Qudit {
        Qudit::h(x, 0)
    }

    #[test]
    fn empty_group() {
        assert_eq!(group_order(4, &[]).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn single_shift() {
        let g = [PauliOp::single(4, q(0), 1, 0)];
        assert_eq!(group_order(4, &g).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn non_commuting_rejected() {
        let g = [PauliOp::single(2, q(0), 1, 0), PauliOp::single(2, q(0), 0, 1)];
        assert!(matches!(group_order(2, &g), Err(Error::InvalidStabilizer(0, 1, 1))));
    }

    #[test]
    fn scalar_obstruction_detected() {
        // XZ on a qubit squares to -1
        let g = [PauliOp::single(2, q(0), 1, 1)];
        assert!(matches!(group_order(2, &g), Err(Error::ScalarObstruction { .. })));
        // X and w X together contain w
        let x = PauliOp::single(4, q(0), 1, 0);
        let g = [x.clone(), x.with_phase(1)];
        assert!(matches!(group_order(4, &g), Err(Error::ScalarObstruction { .. })));
    }

    #[test]
    fn membership_tracks_phase() {
        let a = PauliOp::parse("X@e(0,0,H) X@e(1,0,H)", 4).unwrap();
        let b = PauliOp::parse("Z@e(0,0,H) Z3@e(1,0,H)", 4).unwrap();
        let g = StabilizerGroup::new(4, &[a.clone(), b.clone()]).unwrap();
        let ab = a.multiply(&b).unwrap();
        assert!(g.contains(&ab));
        assert!(!g.contains(&ab.clone().with_phase(ab.phase() + 1)));
        assert!(g.contains_up_to_phase(&ab.with_phase(2)));
        assert_eq!(g.order(), BigUint::from(16u32));
        assert_eq!(g.cyclic_orders(), vec![4, 4]);
    }
}
