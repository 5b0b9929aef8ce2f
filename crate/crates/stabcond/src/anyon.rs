//! Abelian anyon theories: fusion tables, exact spins, Lagrangian subgroups,
//! condensation and tunneling matrices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{gcd, md};

/// Finite Abelian anyon theory. Spins are `exp(2 pi i spin[a] / den)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnyonTheory {
    pub name: String,
    pub den: i64,
    pub labels: Vec<String>,
    /// `fusion[a][b]` is the unique outcome of `a x b`.
    pub fusion: Vec<Vec<usize>>,
    pub spin: Vec<i64>,
}

/// Subset of labels closed under fusion, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AnyonSubgroup {
    pub members: Vec<usize>,
}

impl AnyonSubgroup {
    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn dz_label(d: i64, p: i64, q: i64) -> String {
    let part = |c: char, k: i64| match k {
        0 => String::new(),
        1 => c.to_string(),
        k => format!("{c}{k}"),
    };
    let s = format!("{}{}", part('e', p), part('m', q));
    let _ = d;
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

impl AnyonTheory {
    /// D(Z_d): labels `e^p m^q`, index `p*d + q`, spin `pq/d`.
    pub fn dz(d: i64) -> AnyonTheory {
        assert!(d >= 2);
        let n = (d * d) as usize;
        let idx = |p: i64, q: i64| (md(p, d) * d + md(q, d)) as usize;
        let mut labels = Vec::with_capacity(n);
        let mut spin = Vec::with_capacity(n);
        let mut fusion = vec![vec![0; n]; n];
        for p in 0..d {
            for q in 0..d {
                labels.push(dz_label(d, p, q));
                spin.push(md(p * q, d));
                for r in 0..d {
                    for s in 0..d {
                        fusion[idx(p, q)][idx(r, s)] = idx(p + r, q + s);
                    }
                }
            }
        }
        AnyonTheory { name: format!("D(Z{d})"), den: d, labels, fusion, spin }
    }

    /// Double semion: 1, s, sb, b with spins 1, i, -i, 1.
    pub fn double_semion() -> AnyonTheory {
        // Z2 x Z2 with s=(1,0), sb=(0,1), b=(1,1)
        let bits = [(0, 0), (1, 0), (0, 1), (1, 1)];
        let find = |v: (i32, i32)| bits.iter().position(|&b| b == v).unwrap();
        let fusion = (0..4).map(|a| (0..4).map(|b| find(((bits[a].0 + bits[b].0) % 2, (bits[a].1 + bits[b].1) % 2))).collect()).collect();
        AnyonTheory { name: "DS".into(), den: 4, labels: vec!["1".into(), "s".into(), "sb".into(), "b".into()], fusion, spin: vec![0, 1, 3, 0] }
    }

    /// Trivial theory with only the vacuum.
    pub fn trivial() -> AnyonTheory {
        AnyonTheory { name: "trivial".into(), den: 1, labels: vec!["1".into()], fusion: vec![vec![0]], spin: vec![0] }
    }

    /// Build from explicit data after checking the group law.
    pub fn custom(name: &str, den: i64, labels: Vec<String>, fusion: Vec<Vec<usize>>, spin: Vec<i64>) -> Result<AnyonTheory> {
        let n = labels.len();
        let bad = |m: &str| Error::Parse { pos: 0, msg: m.to_string() };
        if n == 0 || fusion.len() != n || spin.len() != n || fusion.iter().any(|r| r.len() != n) || den < 1 {
            return Err(bad("inconsistent table sizes"));
        }
        if fusion.iter().flatten().any(|&c| c >= n) {
            return Err(bad("fusion outcome out of range"));
        }
        let t = AnyonTheory { name: name.into(), den, labels, fusion, spin: spin.iter().map(|&s| md(s, den)).collect() };
        for a in 0..n {
            if t.fusion[0][a] != a {
                return Err(bad("label 0 must be the vacuum"));
            }
            if !(0..n).any(|b| t.fusion[a][b] == 0) {
                return Err(bad("missing inverse"));
            }
            for b in 0..n {
                if t.fusion[a][b] != t.fusion[b][a] {
                    return Err(bad("fusion not commutative"));
                }
                for c in 0..n {
                    if t.fusion[t.fusion[a][b]][c] != t.fusion[a][t.fusion[b][c]] {
                        return Err(bad("fusion not associative"));
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vacuum(&self) -> usize {
        0
    }

    pub fn fuse(&self, a: usize, b: usize) -> usize {
        self.fusion[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.len()).find(|&b| self.fusion[a][b] == 0).expect("group")
    }

    /// Look up a label. For D(Z_d) also accepts forms like `e^2m^2`, `e2 m2`, `m^3`.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        let cleaned: String = name.chars().filter(|c| !c.is_whitespace() && *c != '^').collect();
        if let Some(i) = self.labels.iter().position(|l| *l == cleaned || l == name) {
            return Ok(i);
        }
        // unreduced exponents, e.g. e5 in D(Z4)
        if let Some(d) = self.name.strip_prefix("D(Z").and_then(|r| r.strip_suffix(')')).and_then(|r| r.parse::<i64>().ok()) {
            if let Some((p, q)) = parse_em(&cleaned) {
                return Ok((md(p, d) * d + md(q, d)) as usize);
            }
        }
        Err(Error::InvalidLabel(name.to_string()))
    }

    /// Braiding exponent: `B(a,b) = T(ab)/(T(a)T(b))`.
    pub fn braid(&self, a: usize, b: usize) -> i64 {
        md(self.spin[self.fuse(a, b)] - self.spin[a] - self.spin[b], self.den)
    }

    /// Closure of a set of labels under fusion.
    pub fn generate(&self, gens: &[usize]) -> AnyonSubgroup {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(a) = queue.pop_front() {
            for &g in gens {
                let c = self.fuse(a, g);
                if set.insert(c) {
                    queue.push_back(c);
                }
            }
        }
        AnyonSubgroup { members: set.into_iter().collect() }
    }

    pub fn subgroup_from_labels(&self, names: &[&str]) -> Result<AnyonSubgroup> {
        let gens = names.iter().map(|n| self.index_of(n)).collect::<Result<Vec<_>>>()?;
        Ok(self.generate(&gens))
    }

    /// Check closure of an explicit member list.
    pub fn subgroup(&self, members: &[usize]) -> Result<AnyonSubgroup> {
        let s = self.generate(members);
        if s.len() != members.iter().collect::<BTreeSet<_>>().union(&BTreeSet::from([&0])).count() {
            return Err(Error::InvalidLabel("set not closed under fusion".into()));
        }
        Ok(s)
    }

    /// All fusion subgroups, each once.
    pub fn subgroups(&self) -> Vec<AnyonSubgroup> {
        let mut seen: BTreeSet<AnyonSubgroup> = BTreeSet::new();
        let mut frontier = vec![self.generate(&[])];
        seen.insert(frontier[0].clone());
        while let Some(s) = frontier.pop() {
            for a in 0..self.len() {
                if !s.contains(a) {
                    let mut g = s.members.clone();
                    g.push(a);
                    let t = self.generate(&g);
                    if seen.insert(t.clone()) {
                        frontier.push(t);
                    }
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Bosons that braid trivially with each other.
    pub fn is_condensable(&self, s: &AnyonSubgroup) -> bool {
        s.members.iter().all(|&a| self.spin[a] == 0) && s.members.iter().all(|&a| s.members.iter().all(|&b| self.braid(a, b) == 0))
    }

    pub fn is_lagrangian(&self, s: &AnyonSubgroup) -> bool {
        self.is_condensable(s) && (0..self.len()).filter(|a| !s.contains(*a)).all(|a| s.members.iter().any(|&b| self.braid(a, b) != 0))
    }

    pub fn enumerate_lagrangian(&self) -> Vec<AnyonSubgroup> {
        self.subgroups().into_iter().filter(|s| self.is_lagrangian(s)).collect()
    }

    /// Anyons braiding trivially with every member of `c`.
    pub fn deconfined(&self, c: &AnyonSubgroup) -> Vec<usize> {
        (0..self.len()).filter(|&a| c.members.iter().all(|&x| self.braid(a, x) == 0)).collect()
    }

    /// Condense `c`: classes of deconfined anyons modulo `c`. The map sends
    /// confined labels to `None`.
    pub fn condense(&self, c: &AnyonSubgroup) -> Result<(AnyonTheory, Vec<Option<usize>>)> {
        if !self.is_condensable(c) {
            return Err(Error::NotCondensable(format!("{} in {}", self.subgroup_names(c).join(","), self.name)));
        }
        let dec = self.deconfined(c);
        let mut map: Vec<Option<usize>> = vec![None; self.len()];
        let mut reps: Vec<usize> = Vec::new();
        for &a in &dec {
            if map[a].is_some() {
                continue;
            }
            let k = reps.len();
            reps.push(a);
            for &x in &c.members {
                map[self.fuse(a, x)] = Some(k);
            }
        }
        let n = reps.len();
        let fusion = (0..n).map(|i| (0..n).map(|j| map[self.fuse(reps[i], reps[j])].expect("closed")).collect()).collect();
        let labels = reps
            .iter()
            .map(|&r| {
                let members: Vec<&str> = c.members.iter().map(|&x| self.labels[self.fuse(r, x)].as_str()).collect();
                format!("[{}]", members.join(","))
            })
            .collect();
        let spin = reps.iter().map(|&r| self.spin[r]).collect();
        let t = AnyonTheory { name: format!("{}/{}", self.name, self.subgroup_names(c).join(",")), den: self.den, labels, fusion, spin };
        Ok((t, map))
    }

    pub fn subgroup_names(&self, s: &AnyonSubgroup) -> Vec<String> {
        s.members.iter().map(|&a| self.labels[a].clone()).collect()
    }

    /// Unnormalized S entry exponent: conj of the braiding.
    pub fn s_exponent(&self, a: usize, b: usize) -> i64 {
        md(-self.braid(a, b), self.den)
    }

    /// Stacking `self` with the mirror of `other` (spins negated).
    pub fn stack_with_mirror(&self, other: &AnyonTheory) -> AnyonTheory {
        let den = lcm(self.den, other.den);
        let (na, nb) = (self.len(), other.len());
        let mut labels = Vec::with_capacity(na * nb);
        let mut spin = Vec::with_capacity(na * nb);
        for a in 0..na {
            for b in 0..nb {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
                spin.push(md(self.spin[a] * (den / self.den) - other.spin[b] * (den / other.den), den));
            }
        }
        let fusion = (0..na * nb).map(|i| (0..na * nb).map(|j| self.fuse(i / nb, j / nb) * nb + other.fuse(i % nb, j % nb)).collect()).collect();
        AnyonTheory { name: format!("{}x{}^op", self.name, other.name), den, labels, fusion, spin }
    }
}

fn parse_em(s: &str) -> Option<(i64, i64)> {
    if s == "1" {
        return Some((0, 0));
    }
    let mut p = 0;
    let mut q = 0;
    let mut rest = s;
    let mut any = false;
    while let Some(c) = rest.chars().next() {
        rest = &rest[1..];
        let digits: String = rest.chars().take_while(|c| c.is_ascii_digit() || *c == '-').collect();
        rest = &rest[digits.len()..];
        let k: i64 = if digits.is_empty() { 1 } else { digits.parse().ok()? };
        match c {
            'e' => p += k,
            'm' => q += k,
            _ => return None,
        }
        any = true;
    }
    any.then_some((p, q))
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

/// Nonnegative integer matrix `w[b][a]` from theory A (columns) to theory B (rows).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TunnelingMatrix {
    pub domain: String,
    pub codomain: String,
    pub w: Vec<Vec<u64>>,
}

impl TunnelingMatrix {
    pub fn rows(&self) -> usize {
        self.w.len()
    }

    pub fn cols(&self) -> usize {
        self.w.first().map_or(0, |r| r.len())
    }

    pub fn identity(t: &AnyonTheory) -> TunnelingMatrix {
        let n = t.len();
        TunnelingMatrix { domain: t.name.clone(), codomain: t.name.clone(), w: (0..n).map(|b| (0..n).map(|a| u64::from(a == b)).collect()).collect() }
    }

    /// From a condensation map A -> A/C.
    pub fn from_condensation(a: &AnyonTheory, b: &AnyonTheory, map: &[Option<usize>]) -> TunnelingMatrix {
        let mut w = vec![vec![0u64; a.len()]; b.len()];
        for (x, m) in map.iter().enumerate() {
            if let Some(y) = m {
                w[*y][x] = 1;
            }
        }
        TunnelingMatrix { domain: a.name.clone(), codomain: b.name.clone(), w }
    }

    /// Permutation wall `a -> perm[a]`.
    pub fn from_permutation(t: &AnyonTheory, perm: &[usize]) -> TunnelingMatrix {
        let n = t.len();
        let mut w = vec![vec![0u64; n]; n];
        for (a, &b) in perm.iter().enumerate() {
            w[b][a] = 1;
        }
        TunnelingMatrix { domain: t.name.clone(), codomain: t.name.clone(), w }
    }

    /// A gapped boundary seen as a wall from the trivial theory into `t`:
    /// the condensed labels tunnel from the vacuum.
    pub fn boundary(t: &AnyonTheory, lagrangian: &AnyonSubgroup) -> TunnelingMatrix {
        TunnelingMatrix {
            domain: AnyonTheory::trivial().name,
            codomain: t.name.clone(),
            w: (0..t.len()).map(|b| vec![u64::from(lagrangian.contains(b))]).collect(),
        }
    }

    pub fn transpose(&self) -> TunnelingMatrix {
        let (r, c) = (self.rows(), self.cols());
        TunnelingMatrix { domain: self.codomain.clone(), codomain: self.domain.clone(), w: (0..c).map(|a| (0..r).map(|b| self.w[b][a]).collect()).collect() }
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &TunnelingMatrix) -> Result<TunnelingMatrix> {
        if self.cols() != other.rows() {
            return Err(Error::ShapeMismatch(format!("{}x{} * {}x{}", self.rows(), self.cols(), other.rows(), other.cols())));
        }
        let w = (0..self.rows()).map(|i| (0..other.cols()).map(|j| (0..self.cols()).map(|k| self.w[i][k] * other.w[k][j]).sum()).collect()).collect();
        Ok(TunnelingMatrix { domain: other.domain.clone(), codomain: self.codomain.clone(), w })
    }

    pub fn trace(&self) -> u64 {
        (0..self.rows().min(self.cols())).map(|i| self.w[i][i]).sum()
    }

    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.cols()).filter(|&a| (0..self.rows()).any(|b| self.w[b][a] != 0)).collect()
    }
}

/// Group automorphism of D(Z_d) given by images of e and m as (p,q) pairs.
pub fn dz_automorphism(d: i64, e_img: (i64, i64), m_img: (i64, i64)) -> Vec<usize> {
    let mut perm = Vec::with_capacity((d * d) as usize);
    for p in 0..d {
        for q in 0..d {
            let np = md(p * e_img.0 + q * m_img.0, d);
            let nq = md(p * e_img.1 + q * m_img.1, d);
            perm.push((np * d + nq) as usize);
        }
    }
    perm
}

/// An isomorphism `from -> to` preserving fusion and spins, if one exists.
pub fn isomorphism(from: &AnyonTheory, to: &AnyonTheory) -> Option<Vec<usize>> {
    let n = from.len();
    if to.len() != n {
        return None;
    }
    let l = lcm(from.den, to.den);
    let spin_ok = |a: usize, b: usize| from.spin[a] * (l / from.den) == to.spin[b] * (l / to.den);
    fn go(from: &AnyonTheory, to: &AnyonTheory, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>, spin_ok: &dyn Fn(usize, usize) -> bool) -> bool {
        let Some(a) = map.iter().position(|m| m.is_none()) else {
            let n = map.len();
            return (0..n).all(|x| (0..n).all(|y| map[from.fuse(x, y)] == Some(to.fuse(map[x].unwrap(), map[y].unwrap()))));
        };
        for b in 0..to.len() {
            if used[b] || !spin_ok(a, b) {
                continue;
            }
            map[a] = Some(b);
            used[b] = true;
            // images of products with assigned labels are forced
            let consistent = (0..map.len()).all(|x| match map[x] {
                Some(bx) => match map[from.fuse(a, x)] {
                    Some(c) => c == to.fuse(b, bx),
                    None => !used[to.fuse(b, bx)],
                },
                None => true,
            });
            if consistent && go(from, to, map, used, spin_ok) {
                return true;
            }
            map[a] = None;
            used[b] = false;
        }
        false
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    go(from, to, &mut map, &mut used, &spin_ok).then(|| map.into_iter().map(Option::unwrap).collect())
}

/// The D(Z_4) / double-semion wall obtained by condensing `{1, e^2 m^2}`,
/// with rows in the standard double-semion labels.
pub fn z4_ds_wall() -> Result<TunnelingMatrix> {
    let z = AnyonTheory::dz(4);
    let ds = AnyonTheory::double_semion();
    let c = z.subgroup_from_labels(&["1", "e2m2"])?;
    let (q, map) = z.condense(&c)?;
    let iso = isomorphism(&q, &ds).ok_or_else(|| Error::Incompatible("quotient is not the double semion".into()))?;
    let map: Vec<Option<usize>> = map.iter().map(|m| m.map(|k| iso[k])).collect();
    Ok(TunnelingMatrix::from_condensation(&z, &ds, &map))
}

/// The four invertible walls of D(Z_4) as named permutations.
pub fn z4_invertible_walls() -> Vec<(&'static str, Vec<usize>)> {
    vec![
        ("1", dz_automorphism(4, (1, 0), (0, 1))),
        ("e<->e^-1", dz_automorphism(4, (3, 0), (0, 3))),
        ("e<->m", dz_automorphism(4, (0, 1), (1, 0))),
        ("e<->m^-1", dz_automorphism(4, (0, 3), (3, 0))),
    ]
}

/// Does the permutation preserve fusion, spin and hence braiding?
pub fn is_symmetry(t: &AnyonTheory, perm: &[usize]) -> bool {
    let n = t.len();
    perm.len() == n
        && perm.iter().collect::<BTreeSet<_>>().len() == n
        && (0..n).all(|a| t.spin[perm[a]] == t.spin[a])
        && (0..n).all(|a| (0..n).all(|b| perm[t.fuse(a, b)] == t.fuse(perm[a], perm[b])))
}

/// Element of Z[x]/Phi_n(x), used to compare sums of roots of unity exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    n: i64,
    coeffs: Vec<i64>,
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: i64) -> Vec<i64> {
    // x^n - 1 divided by Phi_k for every proper divisor k
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for k in 1..n {
        if n % k == 0 {
            p = poly_div_exact(&p, &cyclotomic_poly(k));
        }
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd] / den[dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            r[i + j] -= c * dj;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

impl Cyclotomic {
    pub fn zero(n: i64) -> Cyclotomic {
        Cyclotomic { n, coeffs: vec![0; n as usize] }
    }

    /// Add `c * zeta_n^k`.
    pub fn add_root(&mut self, k: i64, c: i64) {
        self.coeffs[md(k, self.n) as usize] += c;
    }

    pub fn scale(&mut self, c: i64) {
        self.coeffs.iter_mut().for_each(|x| *x *= c);
    }

    /// Canonical remainder modulo Phi_n.
    pub fn reduced(&self) -> Vec<i64> {
        let phi = cyclotomic_poly(self.n);
        let deg = phi.len() - 1;
        let mut r = self.coeffs.clone();
        for i in (deg..r.len()).rev() {
            let c = r[i];
            if c != 0 {
                // phi is monic
                for (j, &pj) in phi.iter().enumerate() {
                    r[i - deg + j] -= c * pj;
                }
            }
        }
        r.truncate(deg);
        r
    }
}

fn isqrt_exact(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|x| x * x == n)
}

/// Modular and stability checks for a wall `w` from `a` to `b`:
/// `S^B W = W S^A` with normalized S, `T^B W = W T^A`, and
/// `W_{ia} W_{jb} <= W_{i x j, a x b}`.
pub fn check_tunneling(w: &TunnelingMatrix, a: &AnyonTheory, b: &AnyonTheory) -> Result<bool> {
    if w.rows() != b.len() || w.cols() != a.len() || w.w.iter().any(|r| r.len() != a.len()) {
        return Err(Error::ShapeMismatch(format!("W is {}x{}, theories have {} and {} labels", w.rows(), w.cols(), b.len(), a.len())));
    }
    if w.w[0][0] != 1 {
        return Ok(false);
    }
    let n = lcm(a.den, b.den);
    let (sa, sb) = (n / a.den, n / b.den);
    // T
    for j in 0..b.len() {
        for i in 0..a.len() {
            if w.w[j][i] != 0 && a.spin[i] * sa != b.spin[j] * sb {
                return Ok(false);
            }
        }
    }
    // S / D: compare D_A * (S^B W) with D_B * (W S^A)
    let g = gcd(a.len() as i64, b.len() as i64) as u64;
    let (ra, rb) = match (isqrt_exact(a.len() as u64 / g), isqrt_exact(b.len() as u64 / g)) {
        (Some(x), Some(y)) => (x as i64, y as i64),
        _ => return Err(Error::Unsupported("total dimensions with irrational ratio".into())),
    };
    for j in 0..b.len() {
        for i in 0..a.len() {
            let mut lhs = Cyclotomic::zero(n);
            for k in 0..b.len() {
                if w.w[k][i] != 0 {
                    lhs.add_root(b.s_exponent(j, k) * sb, w.w[k][i] as i64);
                }
            }
            lhs.scale(ra);
            let mut rhs = Cyclotomic::zero(n);
            for k in 0..a.len() {
                if w.w[j][k] != 0 {
                    rhs.add_root(a.s_exponent(k, i) * sa, w.w[j][k] as i64);
                }
            }
            rhs.scale(rb);
            if lhs.reduced() != rhs.reduced() {
                return Ok(false);
            }
        }
    }
    // stability
    for i in 0..b.len() {
        for j in 0..b.len() {
            for x in 0..a.len() {
                for y in 0..a.len() {
                    if w.w[i][x] * w.w[j][y] > w.w[b.fuse(i, j)][a.fuse(x, y)] {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Spin as a reduced fraction `(num, den)` of a full turn.
pub fn spin_fraction(t: &AnyonTheory, a: usize) -> (i64, i64) {
    let g = gcd(t.spin[a], t.den).max(1);
    (t.spin[a] / g, t.den / g)
}

/// Multiset of spins as reduced fractions.
pub fn spin_multiset(t: &AnyonTheory) -> BTreeMap<(i64, i64), usize> {
    let mut m = BTreeMap::new();
    for a in 0..t.len() {
        *m.entry(spin_fraction(t, a)).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dz4_braiding_formula() {
        let t = AnyonTheory::dz(4);
        for a in 0..16 {
            for b in 0..16 {
                let (p, q, r, s) = (a as i64 / 4, a as i64 % 4, b as i64 / 4, b as i64 % 4);
                assert_eq!(t.braid(a, b), md(p * s + q * r, 4));
            }
        }
    }

    #[test]
    fn label_parsing() {
        let t = AnyonTheory::dz(4);
        assert_eq!(t.index_of("e^2m^2").unwrap(), 10);
        assert_eq!(t.index_of("e2m2").unwrap(), 10);
        assert_eq!(t.index_of("m").unwrap(), 1);
        assert_eq!(t.index_of("e5").unwrap(), 4);
        assert_eq!(t.index_of("1").unwrap(), 0);
        assert!(t.index_of("s").is_err());
    }

    #[test]
    fn cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        let mut z = Cyclotomic::zero(4);
        z.add_root(0, 1);
        z.add_root(2, 1);
        assert_eq!(z.reduced(), vec![0, 0]);
    }

    #[test]
    fn subgroup_counts() {
        // Z2 x Z2 has 5 subgroups
        assert_eq!(AnyonTheory::dz(2).subgroups().len(), 5);
        // Z4 x Z4 has 15
        assert_eq!(AnyonTheory::dz(4).subgroups().len(), 15);
    }

    #[test]
    fn trivial_theory_lagrangian() {
        let t = AnyonTheory::trivial();
        assert!(t.is_lagrangian(&t.generate(&[])));
    }

    #[test]
    fn non_wall_rejected() {
        let t = AnyonTheory::dz(2);
        // e -> e, m -> 1, em -> e
        let mut w = vec![vec![0u64; 4]; 4];
        w[0][0] = 1;
        w[0][1] = 1;
        w[2][2] = 1;
        w[2][3] = 1;
        let tm = TunnelingMatrix { domain: t.name.clone(), codomain: t.name.clone(), w };
        assert!(!check_tunneling(&tm, &t, &t).unwrap());
        assert!(check_tunneling(&TunnelingMatrix::identity(&t), &t, &t).unwrap());
    }

    #[test]
    fn custom_theory_validated() {
        let ok = AnyonTheory::custom("z2", 2, vec!["1".into(), "a".into()], vec![vec![0, 1], vec![1, 0]], vec![0, 1]);
        assert!(ok.is_ok());
        let bad = AnyonTheory::custom("z2", 2, vec!["1".into(), "a".into()], vec![vec![0, 1], vec![1, 1]], vec![0, 1]);
        assert!(bad.is_err());
    }
}
