//! Pants-decomposition networks. Caps carry `delta_{a,1}`, wall cylinders
//! carry a tunneling matrix and pants carry the fusion rule; the degeneracy
//! is the full contraction of the resulting integer tensor network.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::anyon::{check_tunneling, AnyonTheory, TunnelingMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Node {
    /// One port.
    Cap { theory: String },
    /// Port 0 is the domain side, port 1 the codomain side.
    Cylinder { wall: TunnelingMatrix },
    /// Ports 0 and 1 fuse into port 2.
    Pants { theory: String },
}

impl Node {
    pub fn ports(&self) -> usize {
        match self {
            Node::Cap { .. } => 1,
            Node::Cylinder { .. } => 2,
            Node::Pants { .. } => 3,
        }
    }

    fn port_theory(&self, port: usize) -> &str {
        match self {
            Node::Cap { theory } | Node::Pants { theory } => theory,
            Node::Cylinder { wall } => {
                if port == 0 {
                    &wall.domain
                } else {
                    &wall.codomain
                }
            }
        }
    }
}

/// `(node, port)`.
pub type Port = (usize, usize);

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PantsNetwork {
    pub theories: Vec<AnyonTheory>,
    pub nodes: Vec<Node>,
    pub links: Vec<(Port, Port)>,
}

impl PantsNetwork {
    pub fn new(theories: Vec<AnyonTheory>) -> PantsNetwork {
        PantsNetwork { theories, nodes: Vec::new(), links: Vec::new() }
    }

    pub fn add(&mut self, node: Node) -> usize {
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub fn cap(&mut self, theory: &str) -> usize {
        self.add(Node::Cap { theory: theory.into() })
    }

    pub fn cylinder(&mut self, wall: TunnelingMatrix) -> usize {
        self.add(Node::Cylinder { wall })
    }

    pub fn pants(&mut self, theory: &str) -> usize {
        self.add(Node::Pants { theory: theory.into() })
    }

    pub fn link(&mut self, a: Port, b: Port) {
        self.links.push((a, b));
    }

    pub fn theory(&self, name: &str) -> Result<&AnyonTheory> {
        self.theories.iter().find(|t| t.name == name).ok_or_else(|| Error::InvalidNetwork(format!("unknown theory {name}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<PantsNetwork> {
        serde_json::from_str(s).map_err(|e| Error::Parse { pos: e.column(), msg: format!("line {}: {e}", e.line()) })
    }

    /// Every port linked exactly once, linked ports share an alphabet, every
    /// wall is a valid tunneling matrix.
    pub fn validate(&self) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(Error::InvalidNetwork("empty network".into()));
        }
        let mut seen: BTreeMap<Port, usize> = BTreeMap::new();
        for &(a, b) in &self.links {
            for p in [a, b] {
                if p.0 >= self.nodes.len() || p.1 >= self.nodes[p.0].ports() {
                    return Err(Error::InvalidNetwork(format!("no port {}:{}", p.0, p.1)));
                }
                *seen.entry(p).or_default() += 1;
            }
            let (ta, tb) = (self.nodes[a.0].port_theory(a.1), self.nodes[b.0].port_theory(b.1));
            if ta != tb {
                return Err(Error::InvalidNetwork(format!("alphabet mismatch between {}:{} ({ta}) and {}:{} ({tb})", a.0, a.1, b.0, b.1)));
            }
        }
        for (i, n) in self.nodes.iter().enumerate() {
            for p in 0..n.ports() {
                match seen.get(&(i, p)) {
                    None => return Err(Error::InvalidNetwork(format!("free leg at {i}:{p}"))),
                    Some(&k) if k > 1 => return Err(Error::InvalidNetwork(format!("port {i}:{p} linked {k} times"))),
                    _ => {}
                }
            }
            match n {
                Node::Cap { theory } | Node::Pants { theory } => {
                    self.theory(theory)?;
                }
                Node::Cylinder { wall } => {
                    let (a, b) = (self.theory(&wall.domain)?, self.theory(&wall.codomain)?);
                    if !check_tunneling(wall, a, b)? {
                        return Err(Error::InvalidNetwork(format!("wall {i} from {} to {} is not a valid tunneling matrix", a.name, b.name)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Dense tensor; `legs[k]` is the link id of axis `k`, row-major data.
#[derive(Clone, Debug)]
struct Tensor {
    legs: Vec<usize>,
    dims: Vec<usize>,
    data: Vec<u128>,
}

fn overflow() -> Error {
    Error::Unsupported("contraction exceeds 128-bit range".into())
}

impl Tensor {
    fn size(dims: &[usize]) -> usize {
        dims.iter().product()
    }

    fn strides(dims: &[usize]) -> Vec<usize> {
        let mut s = vec![1; dims.len()];
        for k in (0..dims.len().saturating_sub(1)).rev() {
            s[k] = s[k + 1] * dims[k + 1];
        }
        s
    }

    fn repeated_leg(&self) -> Option<(usize, usize)> {
        for i in 0..self.legs.len() {
            for j in i + 1..self.legs.len() {
                if self.legs[i] == self.legs[j] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Sum over the diagonal of axes `i < j`.
    fn trace(&self, i: usize, j: usize) -> Result<Tensor> {
        let keep: Vec<usize> = (0..self.legs.len()).filter(|&k| k != i && k != j).collect();
        let dims: Vec<usize> = keep.iter().map(|&k| self.dims[k]).collect();
        let st = Tensor::strides(&self.dims);
        let mut data = vec![0u128; Tensor::size(&dims)];
        let mut idx = vec![0usize; dims.len()];
        for out in data.iter_mut() {
            let base: usize = keep.iter().zip(&idx).map(|(&k, &v)| st[k] * v).sum();
            for a in 0..self.dims[i] {
                *out = out.checked_add(self.data[base + a * (st[i] + st[j])]).ok_or_else(overflow)?;
            }
            odometer(&mut idx, &dims);
        }
        Ok(Tensor { legs: keep.iter().map(|&k| self.legs[k]).collect(), dims, data })
    }

    /// Contract every leg shared with `other`.
    fn contract(&self, other: &Tensor) -> Result<Tensor> {
        let shared: Vec<(usize, usize)> = self.legs.iter().enumerate().filter_map(|(i, l)| other.legs.iter().position(|m| m == l).map(|j| (i, j))).collect();
        let fa: Vec<usize> = (0..self.legs.len()).filter(|i| !shared.iter().any(|s| s.0 == *i)).collect();
        let fb: Vec<usize> = (0..other.legs.len()).filter(|j| !shared.iter().any(|s| s.1 == *j)).collect();
        let (sa, sb) = (Tensor::strides(&self.dims), Tensor::strides(&other.dims));
        let dims: Vec<usize> = fa.iter().map(|&i| self.dims[i]).chain(fb.iter().map(|&j| other.dims[j])).collect();
        let sdims: Vec<usize> = shared.iter().map(|&(i, _)| self.dims[i]).collect();
        let mut data = vec![0u128; Tensor::size(&dims)];
        let mut idx = vec![0usize; dims.len()];
        let nsum = Tensor::size(&sdims);
        for out in data.iter_mut() {
            let ba: usize = fa.iter().zip(&idx).map(|(&i, &v)| sa[i] * v).sum();
            let bb: usize = fb.iter().zip(&idx[fa.len()..]).map(|(&j, &v)| sb[j] * v).sum();
            let mut sidx = vec![0usize; shared.len()];
            for _ in 0..nsum {
                let oa: usize = shared.iter().zip(&sidx).map(|(&(i, _), &v)| sa[i] * v).sum();
                let ob: usize = shared.iter().zip(&sidx).map(|(&(_, j), &v)| sb[j] * v).sum();
                let (x, y) = (self.data[ba + oa], other.data[bb + ob]);
                if x != 0 && y != 0 {
                    *out = x.checked_mul(y).and_then(|p| out.checked_add(p)).ok_or_else(overflow)?;
                }
                odometer(&mut sidx, &sdims);
            }
            odometer(&mut idx, &dims);
        }
        let legs = fa.iter().map(|&i| self.legs[i]).chain(fb.iter().map(|&j| other.legs[j])).collect();
        Ok(Tensor { legs, dims, data })
    }
}

fn odometer(idx: &mut [usize], dims: &[usize]) {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < dims[k] {
            return;
        }
        idx[k] = 0;
    }
}

fn node_tensor(net: &PantsNetwork, node: &Node, legs: Vec<usize>) -> Result<Tensor> {
    Ok(match node {
        Node::Cap { theory } => {
            let n = net.theory(theory)?.len();
            Tensor { legs, dims: vec![n], data: (0..n).map(|a| u128::from(a == 0)).collect() }
        }
        Node::Cylinder { wall } => {
            let (r, c) = (wall.rows(), wall.cols());
            let data = (0..c).flat_map(|a| (0..r).map(move |b| u128::from(wall.w[b][a]))).collect();
            Tensor { legs, dims: vec![c, r], data }
        }
        Node::Pants { theory } => {
            let t = net.theory(theory)?;
            let n = t.len();
            let mut data = vec![0u128; n * n * n];
            for a in 0..n {
                for b in 0..n {
                    data[(a * n + b) * n + t.fuse(a, b)] = 1;
                }
            }
            Tensor { legs, dims: vec![n, n, n], data }
        }
    })
}

/// Full contraction. Pairs of tensors are merged greedily by the size of the
/// merged tensor; self-links are traced as soon as they appear.
pub fn contract(net: &PantsNetwork) -> Result<BigUint> {
    net.validate()?;
    let mut port_link: BTreeMap<Port, usize> = BTreeMap::new();
    for (k, &(a, b)) in net.links.iter().enumerate() {
        port_link.insert(a, k);
        port_link.insert(b, k);
    }
    let mut tensors: Vec<Tensor> =
        net.nodes.iter().enumerate().map(|(i, n)| node_tensor(net, n, (0..n.ports()).map(|p| port_link[&(i, p)]).collect())).collect::<Result<_>>()?;
    loop {
        for t in tensors.iter_mut() {
            while let Some((i, j)) = t.repeated_leg() {
                *t = t.trace(i, j)?;
            }
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..tensors.len() {
            for j in i + 1..tensors.len() {
                let (a, b) = (&tensors[i], &tensors[j]);
                if !a.legs.iter().any(|l| b.legs.contains(l)) {
                    continue;
                }
                let size: usize = a
                    .legs
                    .iter()
                    .zip(&a.dims)
                    .chain(b.legs.iter().zip(&b.dims))
                    .filter(|(l, _)| !(a.legs.contains(l) && b.legs.contains(l)))
                    .map(|(_, d)| *d)
                    .product();
                if best.is_none_or(|(_, _, s)| size < s) {
                    best = Some((i, j, size));
                }
            }
        }
        let Some((i, j, _)) = best else { break };
        let b = tensors.remove(j);
        let merged = tensors[i].contract(&b)?;
        tensors[i] = merged;
    }
    let mut total: u128 = 1;
    for t in &tensors {
        debug_assert!(t.legs.is_empty());
        total = total.checked_mul(t.data[0]).ok_or_else(overflow)?;
    }
    Ok(BigUint::from(total))
}

/// Surfaces with a canonical decomposition.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "scenario", rename_all = "snake_case")]
pub enum Scenario {
    /// Torus cut into one cylinder per wall; consecutive walls share a phase
    /// and the last wall returns to the first domain.
    TorusWithWalls { theories: Vec<AnyonTheory>, walls: Vec<TunnelingMatrix> },
    /// `n` contractible patches of `patch` in a torus of `bulk`; `wall` maps
    /// bulk to patch.
    TorusWithPatches { bulk: AnyonTheory, patch: AnyonTheory, wall: TunnelingMatrix, n: usize },
    /// Sphere with `n` patches and one gapped boundary of `bulk`, given as a
    /// wall from the trivial theory.
    CappedPatches { bulk: AnyonTheory, patch: AnyonTheory, wall: TunnelingMatrix, boundary: TunnelingMatrix, n: usize },
}

/// Patch leg: cap of the patch phase, then the wall back into the bulk.
/// Returns the bulk-side port.
fn patch_leg(net: &mut PantsNetwork, patch: &str, wall: &TunnelingMatrix) -> Port {
    let cap = net.cap(patch);
    let cyl = net.cylinder(wall.transpose());
    net.link((cap, 0), (cyl, 0));
    (cyl, 1)
}

pub fn build_standard_network(scenario: &Scenario) -> Result<PantsNetwork> {
    match scenario {
        Scenario::TorusWithWalls { theories, walls } => {
            if walls.is_empty() {
                return Err(Error::Unsupported("torus needs at least one wall".into()));
            }
            let mut net = PantsNetwork::new(theories.clone());
            let ids: Vec<usize> = walls.iter().map(|w| net.cylinder(w.clone())).collect();
            for k in 0..ids.len() {
                let next = (k + 1) % ids.len();
                if walls[k].codomain != walls[next].domain {
                    return Err(Error::Unsupported(format!("wall {k} ends in {} but wall {next} starts in {}", walls[k].codomain, walls[next].domain)));
                }
                net.link((ids[k], 1), (ids[next], 0));
            }
            Ok(net)
        }
        Scenario::TorusWithPatches { bulk, patch, wall, n } => {
            if *n == 0 {
                return Err(Error::Unsupported("need at least one patch".into()));
            }
            let mut net = PantsNetwork::new(vec![bulk.clone(), patch.clone()]);
            let ring: Vec<usize> = (0..*n).map(|_| net.pants(&bulk.name)).collect();
            for (k, &p) in ring.iter().enumerate() {
                let leg = patch_leg(&mut net, &patch.name, wall);
                net.link(leg, (p, 1));
                net.link((p, 2), (ring[(k + 1) % n], 0));
            }
            Ok(net)
        }
        Scenario::CappedPatches { bulk, patch, wall, boundary, n } => {
            if *n == 0 {
                return Err(Error::Unsupported("need at least one patch".into()));
            }
            let vacuum = AnyonTheory::trivial();
            if boundary.domain != vacuum.name {
                return Err(Error::Unsupported("the boundary must be a wall from the trivial theory".into()));
            }
            let mut net = PantsNetwork::new(vec![bulk.clone(), patch.clone(), vacuum.clone()]);
            let vcap = net.cap(&vacuum.name);
            let bcyl = net.cylinder(boundary.clone());
            net.link((vcap, 0), (bcyl, 0));
            // fuse patches 1..n-1 with the boundary, then close on patch n
            let mut acc: Port = (bcyl, 1);
            for _ in 1..*n {
                let leg = patch_leg(&mut net, &patch.name, wall);
                let p = net.pants(&bulk.name);
                net.link(acc, (p, 0));
                net.link(leg, (p, 1));
                acc = (p, 2);
            }
            let last = net.cylinder(wall.clone());
            let cap = net.cap(&patch.name);
            net.link(acc, (last, 0));
            net.link((last, 1), (cap, 0));
            Ok(net)
        }
    }
}

/// Put a transparent cylinder on link `k`.
pub fn insert_transparent(net: &PantsNetwork, k: usize) -> Result<PantsNetwork> {
    let (a, b) = *net.links.get(k).ok_or_else(|| Error::InvalidNetwork(format!("no link {k}")))?;
    let theory = net.theory(net.nodes[a.0].port_theory(a.1))?.clone();
    let mut out = net.clone();
    let cyl = out.cylinder(TunnelingMatrix::identity(&theory));
    out.links[k] = (a, (cyl, 0));
    out.link((cyl, 1), b);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anyon::{dz_automorphism, z4_ds_wall};

    fn em_wall() -> TunnelingMatrix {
        let t = AnyonTheory::dz(2);
        TunnelingMatrix::from_permutation(&t, &dz_automorphism(2, (0, 1), (1, 0)))
    }

    #[test]
    fn plain_torus_counts_labels() {
        for d in [2, 3, 4] {
            let t = AnyonTheory::dz(d);
            let id = TunnelingMatrix::identity(&t);
            let net = build_standard_network(&Scenario::TorusWithWalls { theories: vec![t], walls: vec![id.clone(), id] }).unwrap();
            assert_eq!(contract(&net).unwrap(), BigUint::from((d * d) as u64));
        }
    }

    #[test]
    fn twisted_torus() {
        let t = AnyonTheory::dz(2);
        let net =
            build_standard_network(&Scenario::TorusWithWalls { theories: vec![t.clone()], walls: vec![TunnelingMatrix::identity(&t), em_wall()] }).unwrap();
        assert_eq!(contract(&net).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn transparent_insertion() {
        let w = z4_ds_wall().unwrap();
        let sc = Scenario::TorusWithPatches { bulk: AnyonTheory::dz(4), patch: AnyonTheory::double_semion(), wall: w, n: 2 };
        let net = build_standard_network(&sc).unwrap();
        let base = contract(&net).unwrap();
        for k in 0..net.links.len() {
            assert_eq!(contract(&insert_transparent(&net, k).unwrap()).unwrap(), base);
        }
    }

    #[test]
    fn rejects_free_legs_and_mismatch() {
        assert!(matches!(contract(&PantsNetwork::default()), Err(Error::InvalidNetwork(_))));
        let mut net = PantsNetwork::new(vec![AnyonTheory::dz(2)]);
        let p = net.pants("D(Z2)");
        net.link((p, 0), (p, 2));
        assert!(matches!(contract(&net), Err(Error::InvalidNetwork(m)) if m.contains("free")));
        let mut net = PantsNetwork::new(vec![AnyonTheory::dz(2), AnyonTheory::dz(4)]);
        let (a, b) = (net.cap("D(Z2)"), net.cap("D(Z4)"));
        net.link((a, 0), (b, 0));
        assert!(matches!(contract(&net), Err(Error::InvalidNetwork(m)) if m.contains("mismatch")));
    }

    #[test]
    fn invalid_wall_rejected() {
        let t = AnyonTheory::dz(2);
        let mut w = TunnelingMatrix::identity(&t);
        w.w[1][1] = 0;
        w.w[1][2] = 1;
        let net = build_standard_network(&Scenario::TorusWithWalls { theories: vec![t.clone()], walls: vec![w] }).unwrap();
        assert!(contract(&net).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sc = Scenario::TorusWithPatches { bulk: AnyonTheory::dz(4), patch: AnyonTheory::double_semion(), wall: z4_ds_wall().unwrap(), n: 3 };
        let net = build_standard_network(&sc).unwrap();
        let back = PantsNetwork::from_json(&net.to_json()).unwrap();
        assert_eq!(back, net);
    }
}
