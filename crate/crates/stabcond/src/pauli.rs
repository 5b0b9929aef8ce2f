//! Generalized Pauli operators over Z_d.
//!
//! An operator is stored as `w^phase * prod_j X_j^{x_j} Z_j^{z_j}` with every
//! X placed before every Z. Sites with `x = z = 0` are never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{additive_order, gcd, md};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orient {
    H,
    V,
}

/// An edge qudit `e(x, y, orient)` on a given layer. Ordering is row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Qudit {
    pub layer: u8,
    pub y: i32,
    pub x: i32,
    pub orient: Orient,
}

impl Qudit {
    pub const fn h(x: i32, y: i32) -> Qudit {
        Qudit { layer: 0, y, x, orient: Orient::H }
    }

    pub const fn v(x: i32, y: i32) -> Qudit {
        Qudit { layer: 0, y, x, orient: Orient::V }
    }

    pub fn on_layer(self, layer: u8) -> Qudit {
        Qudit { layer, ..self }
    }
}

impl fmt::Display for Qudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orient {
            Orient::H => 'H',
            Orient::V => 'V',
        };
        if self.layer == 0 {
            write!(f, "e({},{},{})", self.x, self.y, o)
        } else {
            write!(f, "e({},{},{},{})", self.x, self.y, o, self.layer)
        }
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

/// Parse `e(x,y,H)` or `e(x,y,V,layer)`; `base` is the byte offset for errors.
fn parse_qudit(s: &str, base: usize) -> Result<Qudit> {
    let inner = s.strip_prefix("e(").and_then(|r| r.strip_suffix(')')).ok_or_else(|| parse_err(base, format!("expected e(x,y,H|V) but found {s:?}")))?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    if parts.len() != 3 && parts.len() != 4 {
        return Err(parse_err(base, format!("edge id needs 3 or 4 fields, got {}", parts.len())));
    }
    let num = |i: usize| -> Result<i32> { parts[i].parse::<i32>().map_err(|_| parse_err(base, format!("bad coordinate {:?}", parts[i]))) };
    let orient = match parts[2] {
        "H" | "h" => Orient::H,
        "V" | "v" => Orient::V,
        o => return Err(parse_err(base, format!("bad orientation {o:?}"))),
    };
    let layer = if parts.len() == 4 { parts[3].parse::<u8>().map_err(|_| parse_err(base, format!("bad layer {:?}", parts[3])))? } else { 0 };
    Ok(Qudit { layer, y: num(1)?, x: num(0)?, orient })
}

impl FromStr for Qudit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Qudit> {
        parse_qudit(s.trim(), 0)
    }
}

impl Serialize for Qudit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Qudit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Qudit, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOp {
    d: i64,
    phase: i64,
    sites: BTreeMap<Qudit, (i64, i64)>,
}

impl PauliOp {
    pub fn identity(d: i64) -> PauliOp {
        assert!(d >= 2, "local dimension must be at least 2");
        PauliOp { d, phase: 0, sites: BTreeMap::new() }
    }

    pub fn single(d: i64, q: Qudit, x: i64, z: i64) -> PauliOp {
        let mut p = PauliOp::identity(d);
        p.set(q, x, z);
        p
    }

    pub fn from_sites(d: i64, phase: i64, sites: impl IntoIterator<Item = (Qudit, (i64, i64))>) -> PauliOp {
        let mut p = PauliOp::identity(d);
        p.phase = md(phase, d);
        for (q, (x, z)) in sites {
            // repeated sites are multiplied in order
            p = p.multiply(&PauliOp::single(d, q, x, z)).expect("same d");
        }
        p
    }

    /// Overwrite the exponents on one site (phase untouched).
    pub fn set(&mut self, q: Qudit, x: i64, z: i64) {
        let (x, z) = (md(x, self.d), md(z, self.d));
        if x == 0 && z == 0 {
            self.sites.remove(&q);
        } else {
            self.sites.insert(q, (x, z));
        }
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn phase(&self) -> i64 {
        self.phase
    }

    pub fn with_phase(mut self, phase: i64) -> PauliOp {
        self.phase = md(phase, self.d);
        self
    }

    pub fn get(&self, q: &Qudit) -> (i64, i64) {
        self.sites.get(q).copied().unwrap_or((0, 0))
    }

    pub fn sites(&self) -> &BTreeMap<Qudit, (i64, i64)> {
        &self.sites
    }

    pub fn support(&self) -> impl Iterator<Item = &Qudit> + '_ {
        self.sites.keys()
    }

    pub fn weight(&self) -> usize {
        self.sites.len()
    }

    /// No X or Z factors (the phase may still be nonzero).
    pub fn is_scalar(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.sites.is_empty() && self.phase == 0
    }

    fn check_d(&self, other: &PauliOp) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(self.d, other.d));
        }
        Ok(())
    }

    /// `s = sum_j (z_P x_Q - x_P z_Q) mod d`, so that `P Q = w^s Q P`.
    pub fn symplectic_product(&self, other: &PauliOp) -> Result<i64> {
        self.check_d(other)?;
        let (small, large, sign) = if self.sites.len() <= other.sites.len() { (self, other, 1) } else { (other, self, -1) };
        let mut s = 0i64;
        for (q, &(x1, z1)) in &small.sites {
            if let Some(&(x2, z2)) = large.sites.get(q) {
                s += z1 * x2 - x1 * z2;
            }
        }
        Ok(md(sign * s, self.d))
    }

    pub fn commutes_with(&self, other: &PauliOp) -> bool {
        matches!(self.symplectic_product(other), Ok(0))
    }

    pub fn multiply(&self, other: &PauliOp) -> Result<PauliOp> {
        self.check_d(other)?;
        let d = self.d;
        let mut out = self.clone();
        let mut carry = 0i64;
        for (q, &(x2, z2)) in &other.sites {
            let (x1, z1) = self.get(q);
            carry += z1 * x2;
            out.set(*q, x1 + x2, z1 + z2);
        }
        out.phase = md(self.phase + other.phase + carry, d);
        Ok(out)
    }

    /// `P^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> PauliOp {
        let d = self.d;
        let k = k.rem_euclid(2 * d);
        let mut out = PauliOp::identity(d);
        let zx: i64 = self.sites.values().map(|&(x, z)| md(x * z, d)).sum();
        for (q, &(x, z)) in &self.sites {
            out.set(*q, k * x, k * z);
        }
        out.phase = md(k * self.phase + md(k * (k - 1) / 2, d) * zx, d);
        out
    }

    pub fn inverse(&self) -> PauliOp {
        self.pow(-1)
    }

    /// Order of the exponent vectors alone (ignoring the phase).
    pub fn vector_order(&self) -> i64 {
        self.sites.values().flat_map(|&(x, z)| [additive_order(x, self.d), additive_order(z, self.d)]).fold(1, |a, b| a / gcd(a, b) * b)
    }

    /// Smallest `m >= 1` with `P^m = I`, phase included.
    pub fn order(&self) -> i64 {
        let m0 = self.vector_order();
        let residual = self.pow(m0).phase;
        m0 * additive_order(residual, self.d)
    }

    /// Keep only the sites in `keep`.
    pub fn restrict(&self, keep: impl Fn(&Qudit) -> bool) -> PauliOp {
        PauliOp { d: self.d, phase: self.phase, sites: self.sites.iter().filter(|(q, _)| keep(q)).map(|(q, v)| (*q, *v)).collect() }
    }

    /// Relabel qudits; `f` must be injective on the support.
    pub fn map_qudits(&self, f: impl Fn(&Qudit) -> Qudit) -> PauliOp {
        let sites: BTreeMap<Qudit, (i64, i64)> = self.sites.iter().map(|(q, v)| (f(q), *v)).collect();
        assert_eq!(sites.len(), self.sites.len(), "qudit relabeling is not injective");
        PauliOp { d: self.d, phase: self.phase, sites }
    }

    /// Relabel qudits and apply a per-site symplectic map `(x, z) -> g(q, x, z)`.
    /// The phase is kept as is, which is valid for maps that send X and Z to
    /// single monomials with `X Z` ordering preserved up to the supplied phase.
    pub fn map_sites(&self, f: impl Fn(&Qudit, i64, i64) -> (Qudit, i64, i64)) -> PauliOp {
        let mut out = PauliOp::identity(self.d).with_phase(self.phase);
        for (q, &(x, z)) in &self.sites {
            let (q2, x2, z2) = f(q, x, z);
            out = out.multiply(&PauliOp::single(self.d, q2, x2, z2)).expect("same d");
        }
        out
    }

    /// Interleaved exponent row `[x_0, z_0, x_1, z_1, ...]` over `index`.
    pub fn to_row(&self, index: &BTreeMap<Qudit, usize>) -> Vec<i64> {
        let mut row = vec![0i64; 2 * index.len()];
        for (q, &(x, z)) in &self.sites {
            let j = *index.get(q).unwrap_or_else(|| panic!("qudit {q} is not registered"));
            row[2 * j] = x;
            row[2 * j + 1] = z;
        }
        row
    }

    /// Inverse of [`PauliOp::to_row`] with zero phase.
    pub fn from_row(d: i64, qudits: &[Qudit], row: &[i64]) -> PauliOp {
        let mut p = PauliOp::identity(d);
        for (j, q) in qudits.iter().enumerate() {
            p.set(*q, row[2 * j], row[2 * j + 1]);
        }
        p
    }

    /// Parse literal syntax such as `w^2 X2Z1@e(3,4,H) Z@e(0,0,V)`; `I` is the identity.
    pub fn parse(s: &str, d: i64) -> Result<PauliOp> {
        let mut op = PauliOp::identity(d);
        let mut seen_factor = false;
        for (start, tok) in tokens(s) {
            if let Some(k) = tok.strip_prefix("w^") {
                if seen_factor {
                    return Err(parse_err(start, "phase prefix must come first"));
                }
                let k: i64 = k.parse().map_err(|_| parse_err(start, format!("bad phase {k:?}")))?;
                op.phase = md(op.phase + k, d);
                continue;
            }
            seen_factor = true;
            if tok == "I" {
                continue;
            }
            let (ops, site) = tok.split_once('@').ok_or_else(|| parse_err(start, format!("expected <ops>@e(..) but found {tok:?}")))?;
            let q = parse_qudit(site, start + ops.len() + 1)?;
            let (x, z) = parse_xz(ops, start)?;
            op = op.multiply(&PauliOp::single(d, q, x, z))?;
        }
        Ok(op)
    }
}

fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut depth = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let sep = (c.is_whitespace() || c == '*') && depth == 0;
        match (sep, start) {
            (true, Some(b)) => {
                out.push((b, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((b, &s[b..]));
    }
    out
}

fn parse_xz(ops: &str, base: usize) -> Result<(i64, i64)> {
    let (mut x, mut z) = (0i64, 0i64);
    let b = ops.as_bytes();
    let mut i = 0;
    let mut last = b'\0';
    while i < b.len() {
        let c = b[i];
        if c != b'X' && c != b'Z' {
            return Err(parse_err(base + i, format!("unexpected {:?}", c as char)));
        }
        if c == b'X' && last == b'Z' {
            return Err(parse_err(base + i, "X must precede Z"));
        }
        i += 1;
        let s = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let e: i64 = if s == i { 1 } else { ops[s..i].parse().map_err(|_| parse_err(base + s, "bad exponent"))? };
        if c == b'X' {
            x += e;
        } else {
            z += e;
        }
        last = c;
    }
    if last == b'\0' {
        return Err(parse_err(base, "empty operator"));
    }
    Ok((x, z))
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.phase != 0 {
            parts.push(format!("w^{}", self.phase));
        }
        if self.sites.is_empty() {
            parts.push("I".into());
        }
        let exp = |c: char, e: i64| match e {
            0 => String::new(),
            1 => c.to_string(),
            e => format!("{c}{e}"),
        };
        for (q, &(x, z)) in &self.sites {
            parts.push(format!("{}{}@{}", exp('X', x), exp('Z', z), q));
        }
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for PauliOp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let sites: BTreeMap<String, [i64; 2]> = self.sites.iter().map(|(q, &(x, z))| (q.to_string(), [x, z])).collect();
        let mut st = s.serialize_struct("PauliOp", 3)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("phase", &self.phase)?;
        st.serialize_field("sites", &sites)?;
        st.end()
    }
}

#[derive(Deserialize)]
struct PauliRepr {
    d: i64,
    #[serde(default)]
    phase: i64,
    sites: BTreeMap<Qudit, [i64; 2]>,
}

impl<'de> Deserialize<'de> for PauliOp {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<PauliOp, D::Error> {
        let r = PauliRepr::deserialize(de)?;
        if r.d < 2 {
            return Err(serde::de::Error::custom("d must be at least 2"));
        }
        let mut p = PauliOp::identity(r.d).with_phase(r.phase);
        for (q, [x, z]) in r.sites {
            p.set(q, x, z);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q0() -> Qudit {
        Qudit::h(0, 0)
    }

    #[test]
    fn zx_is_omega_xz() {
        let z = PauliOp::single(4, q0(), 0, 1);
        let x = PauliOp::single(4, q0(), 1, 0);
        assert_eq!(z.symplectic_product(&x).unwrap(), 1);
        let zx = z.multiply(&x).unwrap();
        assert_eq!(zx.get(&q0()), (1, 1));
        assert_eq!(zx.phase(), 1);
    }

    #[test]
    fn x2z2_squares_to_identity() {
        let p = PauliOp::single(4, q0(), 2, 2);
        assert!(p.multiply(&p).unwrap().is_identity());
        assert_eq!(p.symplectic_product(&p).unwrap(), 0);
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn orders() {
        assert_eq!(PauliOp::single(4, q0(), 1, 0).order(), 4);
        assert_eq!(PauliOp::identity(4).order(), 1);
        // XZ on a qubit squares to -1
        assert_eq!(PauliOp::single(2, q0(), 1, 1).order(), 4);
        // (XZ)^4 = w^6 = -1 for d = 4
        assert_eq!(PauliOp::single(4, q0(), 1, 1).order(), 8);
    }

    #[test]
    fn inverse_and_negative_powers() {
        let p = PauliOp::parse("w^3 X2Z1@e(0,0,H) X1Z3@e(1,0,V)", 4).unwrap();
        assert!(p.multiply(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.pow(-2), p.inverse().multiply(&p.inverse()).unwrap());
        let mut acc = PauliOp::identity(4);
        for k in 0..9 {
            assert_eq!(p.pow(k), acc);
            acc = acc.multiply(&p).unwrap();
        }
    }

    #[test]
    fn literal_round_trip() {
        let s = "w^2 X2Z@e(3,4,H) Z3@e(0,0,V) X@e(1,1,H,1)";
        let p = PauliOp::parse(s, 4).unwrap();
        assert_eq!(PauliOp::parse(&p.to_string(), 4).unwrap(), p);
        assert_eq!(PauliOp::parse("I", 4).unwrap(), PauliOp::identity(4));
        let json = serde_json::to_string(&p).unwrap();
        let back: PauliOp = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn parse_errors_carry_position() {
        match PauliOp::parse("X@e(0,0,H) Q@e(1,0,H)", 2) {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 11),
            other => panic!("{other:?}"),
        }
        assert!(PauliOp::parse("X@e(0,0,D)", 2).is_err());
        assert!(PauliOp::parse("ZX@e(0,0,H)", 2).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let a = PauliOp::single(2, q0(), 1, 0);
        let b = PauliOp::single(4, q0(), 1, 0);
        assert_eq!(a.symplectic_product(&b), Err(Error::DimensionMismatch(2, 4)));
        assert!(a.multiply(&b).is_err());
    }
}
