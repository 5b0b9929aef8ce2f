//! Linear algebra over the ring Z_d.
//!
//! The workhorse is the Howell form: a row echelon form of a module over Z_d
//! in which every element of the row space with leading zeros in the first
//! `k` columns is a combination of the rows that start after column `k`.
//! That property turns membership, solving, and kernels into plain reduction.

use num_bigint::BigUint;

/// Reduce `a` into `0..d`.
#[inline]
pub fn md(a: i64, d: i64) -> i64 {
    let r = a % d;
    if r < 0 {
        r + d
    } else {
        r
    }
}

/// Extended gcd on nonnegative inputs: returns `(g, s, t)` with `s*a + t*b = g`.
/// When `a` divides `b` the answer is `(|a|, ±1, 0)`, which the diagonalization
/// loops rely on to terminate.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if a != 0 && b % a == 0 {
        return (a.abs(), a.signum(), 0);
    }
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    egcd(a.abs(), b.abs()).0
}

/// Multiplicative inverse modulo `d`, if it exists.
pub fn inv_mod(a: i64, d: i64) -> Option<i64> {
    let (g, s, _) = egcd(md(a, d), d);
    if g == 1 {
        Some(md(s, d))
    } else {
        None
    }
}

/// Additive order of `a` in Z_d.
pub fn additive_order(a: i64, d: i64) -> i64 {
    d / gcd(md(a, d), d)
}

/// A unit `u` with `u*a ≡ gcd(a, d) (mod d)`.
pub fn normalizing_unit(a: i64, d: i64) -> i64 {
    let a = md(a, d);
    if a == 0 {
        return 1;
    }
    let (g, s, _) = egcd(a, d);
    let step = d / g;
    let mut u = md(s, d);
    // s is only determined modulo d/g; walk the class until it is a unit
    for _ in 0..d {
        if gcd(u, d) == 1 {
            return u;
        }
        u = md(u + step, d);
    }
    unreachable!("a unit always exists in the residue class")
}

/// Row-major dense matrix over Z_d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatZ {
    pub d: i64,
    pub cols: usize,
    pub rows: Vec<Vec<i64>>,
}

impl MatZ {
    pub fn new(d: i64, cols: usize) -> Self {
        MatZ { d, cols, rows: Vec::new() }
    }

    pub fn from_rows(d: i64, cols: usize, rows: Vec<Vec<i64>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "row length mismatch");
                r.into_iter().map(|v| md(v, d)).collect()
            })
            .collect();
        MatZ { d, cols, rows }
    }

    pub fn push(&mut self, row: Vec<i64>) {
        assert_eq!(row.len(), self.cols);
        let d = self.d;
        self.rows.push(row.into_iter().map(|v| md(v, d)).collect());
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }
}

/// Howell form of a row module over Z_d. Pivots are divisors of `d`.
#[derive(Clone, Debug)]
pub struct Howell {
    pub d: i64,
    pub cols: usize,
    /// Nonzero rows in echelon order.
    pub rows: Vec<Vec<i64>>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

fn row_axpy(target: &mut [i64], src: &[i64], k: i64, d: i64, from: usize) {
    if k == 0 {
        return;
    }
    for j in from..target.len() {
        if src[j] != 0 {
            target[j] = md(target[j] + k * src[j], d);
        }
    }
}

impl Howell {
    /// Compute the Howell form of the row span of `m`.
    pub fn new(m: &MatZ) -> Howell {
        let d = m.d;
        let ncols = m.cols;
        let mut pool: Vec<Vec<i64>> = m.rows.iter().filter(|r| r.iter().any(|&v| v != 0)).cloned().collect();
        let mut out: Vec<Vec<i64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..ncols {
            if pool.is_empty() {
                break;
            }
            // pull every pool row with a nonzero entry here and fold them into one
            let mut idx: Vec<usize> = (0..pool.len()).filter(|&i| pool[i][col] != 0).collect();
            if idx.is_empty() {
                continue;
            }
            let first = idx.remove(0);
            let mut piv = std::mem::take(&mut pool[first]);
            for &i in &idx {
                let mut other = std::mem::take(&mut pool[i]);
                let a = piv[col];
                let b = other[col];
                let (g, s, t) = egcd(a, b);
                let (ag, bg) = (a / g, b / g);
                // [s t; -b/g a/g] has determinant one
                for j in col..ncols {
                    let (x, y) = (piv[j], other[j]);
                    if x == 0 && y == 0 {
                        continue;
                    }
                    piv[j] = md(s * x + t * y, d);
                    other[j] = md(-bg * x + ag * y, d);
                }
                pool[i] = other;
            }
            // normalize the pivot to a divisor of d
            let u = normalizing_unit(piv[col], d);
            if u != 1 {
                for v in piv[col..].iter_mut() {
                    *v = md(*v * u, d);
                }
            }
            let p = piv[col];
            // saturation: annihilator multiple of the pivot row stays in the pool
            let ann = d / p;
            if ann != d {
                let sat: Vec<i64> = piv.iter().map(|&v| md(v * ann, d)).collect();
                if sat.iter().any(|&v| v != 0) {
                    pool.push(sat);
                }
            }
            // reduce earlier rows above this pivot into 0..p
            for r in out.iter_mut() {
                let q = r[col].div_euclid(p);
                if q != 0 {
                    row_axpy(r, &piv, -q, d, col);
                }
            }
            out.push(piv);
            pivots.push(col);
            pool.retain(|r| r.iter().any(|&v| v != 0));
        }
        Howell { d, cols: ncols, rows: out, pivots }
    }

    /// Number of elements of the row module.
    pub fn order(&self) -> BigUint {
        self.rows.iter().zip(&self.pivots).map(|(r, &c)| BigUint::from((self.d / r[c]) as u64)).product()
    }

    /// Additive orders of the pivot rows, in echelon order.
    pub fn pivot_orders(&self) -> Vec<i64> {
        self.rows.iter().zip(&self.pivots).map(|(r, &c)| self.d / r[c]).collect()
    }

    /// Reduce `v` against the rows; returns the remainder and the multipliers used
    /// (`v = Σ mult_i row_i + remainder`).
    pub fn reduce(&self, v: &[i64]) -> (Vec<i64>, Vec<i64>) {
        let d = self.d;
        let mut rem: Vec<i64> = v.iter().map(|&x| md(x, d)).collect();
        let mut mult = vec![0i64; self.rows.len()];
        for (i, (row, &c)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let p = row[c];
            let x = rem[c];
            if x == 0 {
                continue;
            }
            if x % p == 0 {
                let q = x / p;
                row_axpy(&mut rem, row, -q, d, c);
                mult[i] = md(q, d);
            }
        }
        (rem, mult)
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).0.iter().all(|&x| x == 0)
    }
}

/// Left kernel modulo d: generators of `{c : c·M ≡ 0}` as rows.
pub fn left_kernel(m: &MatZ) -> Vec<Vec<i64>> {
    let r = m.nrows();
    let total = m.cols + r;
    let mut aug = MatZ::new(m.d, total);
    for (i, row) in m.rows.iter().enumerate() {
        let mut v = row.clone();
        v.resize(total, 0);
        v[m.cols + i] = 1;
        aug.rows.push(v);
    }
    let h = Howell::new(&aug);
    h.rows.iter().zip(&h.pivots).filter(|(_, &c)| c >= m.cols).map(|(row, _)| row[m.cols..].to_vec()).collect()
}

/// Right kernel modulo d: generators of `{x : M·x ≡ 0}` as vectors.
pub fn right_kernel(m: &MatZ) -> Vec<Vec<i64>> {
    left_kernel(&transpose(m))
}

pub fn transpose(m: &MatZ) -> MatZ {
    let mut t = MatZ::new(m.d, m.nrows());
    for j in 0..m.cols {
        t.rows.push(m.rows.iter().map(|r| r[j]).collect());
    }
    t
}

/// Row-span solver: for a target `v`, find `c` with `c·M ≡ v` if one exists.
pub struct RowSolver {
    cols: usize,
    nrows: usize,
    howell: Howell,
}

impl RowSolver {
    pub fn new(m: &MatZ) -> RowSolver {
        let r = m.nrows();
        let total = m.cols + r;
        let mut aug = MatZ::new(m.d, total);
        for (i, row) in m.rows.iter().enumerate() {
            let mut v = row.clone();
            v.resize(total, 0);
            v[m.cols + i] = 1;
            aug.rows.push(v);
        }
        RowSolver { cols: m.cols, nrows: r, howell: Howell::new(&aug) }
    }

    pub fn solve(&self, v: &[i64]) -> Option<Vec<i64>> {
        let d = self.howell.d;
        let mut target = v.to_vec();
        target.resize(self.cols + self.nrows, 0);
        // (v | 0) - Σ mult·(row_M | row_C) = (0 | -c) when v = c·M
        let (rem, _) = self.howell.reduce(&target);
        if rem[..self.cols].iter().any(|&x| x != 0) {
            return None;
        }
        Some(rem[self.cols..].iter().map(|&x| md(-x, d)).collect())
    }

    /// Order of the row span of the original matrix.
    pub fn span_order(&self) -> BigUint {
        self.howell.rows.iter().zip(&self.howell.pivots).filter(|(_, &c)| c < self.cols).map(|(r, &c)| BigUint::from((self.howell.d / r[c]) as u64)).product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span_enumerate(m: &MatZ) -> std::collections::HashSet<Vec<i64>> {
        let mut seen = std::collections::HashSet::new();
        let zero = vec![0i64; m.cols];
        seen.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(v) = frontier.pop() {
            for r in &m.rows {
                let w: Vec<i64> = v.iter().zip(r).map(|(a, b)| md(a + b, m.d)).collect();
                if seen.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        seen
    }

    #[test]
    fn egcd_and_units() {
        assert_eq!(egcd(12, 18).0, 6);
        assert_eq!(egcd(1, 1), (1, 1, 0));
        assert_eq!(egcd(3, 9), (3, 1, 0));
        assert_eq!(inv_mod(3, 4), Some(3));
        assert_eq!(inv_mod(2, 4), None);
        assert_eq!(md(normalizing_unit(6, 8) * 6, 8), 2);
        assert_eq!(md(normalizing_unit(9, 12) * 9, 12), 3);
        assert_eq!(additive_order(2, 4), 2);
        assert_eq!(additive_order(0, 4), 1);
    }

    #[test]
    fn howell_order_matches_enumeration() {
        let m = MatZ::from_rows(4, 3, vec![vec![2, 0, 2], vec![0, 2, 2], vec![2, 2, 0], vec![1, 3, 0]]);
        let h = Howell::new(&m);
        assert_eq!(h.order(), BigUint::from(span_enumerate(&m).len()));
        let m = MatZ::from_rows(6, 2, vec![vec![2, 3], vec![4, 0]]);
        let h = Howell::new(&m);
        assert_eq!(h.order(), BigUint::from(span_enumerate(&m).len()));
    }

    #[test]
    fn howell_membership_is_complete() {
        // 2*(1,1) = (2,2) is in the span of (1,1) even though the pivot test alone misses (0,2)-type leftovers
        let m = MatZ::from_rows(4, 2, vec![vec![2, 1]]);
        let h = Howell::new(&m);
        let span = span_enumerate(&m);
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(h.contains(&[a, b]), span.contains(&vec![a, b]), "({a},{b})");
            }
        }
    }

    #[test]
    fn kernel_and_solver() {
        let m = MatZ::from_rows(4, 3, vec![vec![1, 2, 0], vec![0, 2, 2]]);
        for k in right_kernel(&m) {
            for r in &m.rows {
                let s: i64 = r.iter().zip(&k).map(|(a, b)| a * b).sum();
                assert_eq!(md(s, 4), 0);
            }
        }
        let solver = RowSolver::new(&m);
        let c = solver.solve(&[1, 0, 2]).expect("in span");
        let back: Vec<i64> = (0..3).map(|j| md(c[0] * m.rows[0][j] + c[1] * m.rows[1][j], 4)).collect();
        assert_eq!(back, vec![1, 0, 2]);
        assert!(solver.solve(&[0, 1, 0]).is_none());
    }
}

/// Cyclic decomposition of the row module: orders `d / gcd(d, s_i)` of the
/// diagonal entries of a two-sided diagonalization over Z_d (orders equal to 1
/// are dropped). Any diagonalization by invertible row and column operations
/// gives a valid direct-sum decomposition.
pub fn cyclic_orders(m: &MatZ) -> Vec<i64> {
    let d = m.d;
    let mut a: Vec<Vec<i64>> = m.rows.iter().filter(|r| r.iter().any(|&v| v != 0)).cloned().collect();
    let rows = a.len();
    let cols = m.cols;
    let mut out = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // pick the entry whose gcd with d is smallest
        let mut best: Option<(usize, usize, i64)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 {
                    let g = gcd(v, d);
                    if best.is_none_or(|(_, _, bg)| g < bg) {
                        best = Some((i, j, g));
                        if g == 1 {
                            break;
                        }
                    }
                }
            }
            if matches!(best, Some((_, _, 1))) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
        }
        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if a[i][t] == 0 {
                    continue;
                }
                let (x, y) = (a[t][t], a[i][t]);
                let (g, s, u) = egcd(x, y);
                let (xg, yg) = (x / g, y / g);
                for j in t..cols {
                    let (p, q) = (a[t][j], a[i][j]);
                    a[t][j] = md(s * p + u * q, d);
                    a[i][j] = md(-yg * p + xg * q, d);
                }
                changed = true;
            }
            for j in t + 1..cols {
                if a[t][j] == 0 {
                    continue;
                }
                let (x, y) = (a[t][t], a[t][j]);
                let (g, s, u) = egcd(x, y);
                let (xg, yg) = (x / g, y / g);
                for row in a.iter_mut().skip(t) {
                    let (p, q) = (row[t], row[j]);
                    row[t] = md(s * p + u * q, d);
                    row[j] = md(-yg * p + xg * q, d);
                }
                changed = true;
            }
            let clear = (t + 1..rows).all(|i| a[i][t] == 0) && (t + 1..cols).all(|j| a[t][j] == 0);
            if clear || !changed {
                break;
            }
        }
        let o = additive_order(a[t][t], d);
        if o > 1 {
            out.push(o);
        }
        t += 1;
    }
    out
}

/// Two-sided diagonalization over Z_d that also tracks the inverse of the
/// accumulated column transform. Returns `(diag, vinv)` where `diag[t]` is the
/// diagonal entry in column `t` (zero past the rank) and `M V = U^{-1} D`.
///
/// The quotient `Z_d^cols / rowspan(M)` then splits as the direct sum of
/// `Z_{gcd(d, diag[t])}`, generated by the rows of `vinv`.
pub fn diagonalize_with_inverse(m: &MatZ) -> (Vec<i64>, Vec<Vec<i64>>) {
    let d = m.d;
    let cols = m.cols;
    let mut a: Vec<Vec<i64>> = m.rows.iter().filter(|r| r.iter().any(|&v| v != 0)).cloned().collect();
    let rows = a.len();
    let mut vinv: Vec<Vec<i64>> = (0..cols).map(|i| (0..cols).map(|j| i64::from(i == j)).collect()).collect();
    let mut diag = vec![0i64; cols];
    let mut t = 0usize;
    while t < rows.min(cols) {
        let mut best: Option<(usize, usize, i64)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 {
                    let g = gcd(v, d);
                    if best.is_none_or(|(_, _, bg)| g < bg) {
                        best = Some((i, j, g));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(t, pi);
        if pj != t {
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            vinv.swap(t, pj);
        }
        loop {
            for i in t + 1..rows {
                if a[i][t] == 0 {
                    continue;
                }
                let (x, y) = (a[t][t], a[i][t]);
                let (g, s, u) = egcd(x, y);
                let (xg, yg) = (x / g, y / g);
                for j in t..cols {
                    let (p, q) = (a[t][j], a[i][j]);
                    a[t][j] = md(s * p + u * q, d);
                    a[i][j] = md(-yg * p + xg * q, d);
                }
            }
            for j in t + 1..cols {
                if a[t][j] == 0 {
                    continue;
                }
                let (x, y) = (a[t][t], a[t][j]);
                let (g, s, u) = egcd(x, y);
                let (xg, yg) = (x / g, y / g);
                for row in a.iter_mut().skip(t) {
                    let (p, q) = (row[t], row[j]);
                    row[t] = md(s * p + u * q, d);
                    row[j] = md(-yg * p + xg * q, d);
                }
                // columns (t, j) <- (t, j) E with E = [s -yg; u xg]; rows of V^{-1} get E^{-1}
                for k in 0..cols {
                    let (p, q) = (vinv[t][k], vinv[j][k]);
                    vinv[t][k] = md(xg * p + yg * q, d);
                    vinv[j][k] = md(-u * p + s * q, d);
                }
            }
            let clear = (t + 1..rows).all(|i| a[i][t] == 0) && (t + 1..cols).all(|j| a[t][j] == 0);
            if clear {
                break;
            }
        }
        diag[t] = a[t][t];
        t += 1;
    }
    (diag, vinv)
}

#[cfg(test)]
mod diag_tests {
    use super::*;

    #[test]
    fn quotient_of_z4_by_two() {
        // Z_4^2 / <(2, 2)> = Z_4 + Z_2
        let m = MatZ::from_rows(4, 2, vec![vec![2, 2]]);
        let (diag, vinv) = diagonalize_with_inverse(&m);
        let mut orders: Vec<i64> = diag.iter().map(|&s| gcd(s, 4)).map(|g| if g == 0 { 4 } else { g }).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 4]);
        assert_eq!(vinv.len(), 2);
    }

    #[test]
    fn transform_is_consistent() {
        let m = MatZ::from_rows(6, 3, vec![vec![2, 3, 1], vec![4, 0, 2], vec![0, 3, 3]]);
        let (diag, vinv) = diagonalize_with_inverse(&m);
        // every original row lies in the span of diag[t] * vinv[t]
        let basis: Vec<Vec<i64>> = (0..3).map(|t| vinv[t].iter().map(|&v| md(v * diag[t], 6)).collect()).collect();
        let h = Howell::new(&MatZ::from_rows(6, 3, basis));
        for r in &m.rows {
            assert!(h.contains(r));
        }
        let hm = Howell::new(&m);
        assert_eq!(h.order(), hm.order());
    }
}
