// Pauli arithmetic against explicit d^n x d^n matrices.

use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use stabcond::pauli::{PauliOp, Qudit};

type Mat = Vec<Vec<Complex64>>;

const SITES: [Qudit; 2] = [Qudit::h(0, 0), Qudit::v(0, 0)];

fn omega(d: i64, k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64)
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn kron(a: &Mat, b: &Mat) -> Mat {
    let (n, m) = (a.len(), b.len());
    (0..n * m).map(|i| (0..n * m).map(|j| a[i / m][j / m] * b[i % m][j % m]).collect()).collect()
}

// X|j> = |j+1>, Z|j> = w^j |j>
fn local(d: i64, x: i64, z: i64) -> Mat {
    let n = d as usize;
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for j in 0..d {
        m[((j + x) % d) as usize][j as usize] = omega(d, j * z);
    }
    m
}

fn dense(p: &PauliOp) -> Mat {
    let d = p.d();
    let mut m = vec![vec![omega(d, p.phase())]];
    for q in SITES {
        let (x, z) = p.get(&q);
        m = kron(&m, &local(d, x, z));
    }
    m
}

fn close(a: &Mat, b: &Mat) -> bool {
    a.iter().flatten().zip(b.iter().flatten()).all(|(u, v)| (u - v).norm() < 1e-9)
}

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| Complex64::new((i == j) as u8 as f64, 0.0)).collect()).collect()
}

fn pauli(d: i64) -> impl Strategy<Value = PauliOp> {
    (0..d, prop::collection::vec((0..d, 0..d), 2)).prop_map(move |(ph, e)| PauliOp::from_sites(d, ph, SITES.iter().copied().zip(e)))
}

fn dim_and_two() -> impl Strategy<Value = (PauliOp, PauliOp)> {
    (2i64..=5).prop_flat_map(|d| (pauli(d), pauli(d)))
}

proptest! {
    #[test]
    fn multiply_matches_matrices((p, q) in dim_and_two()) {
        prop_assert!(close(&dense(&p.multiply(&q).unwrap()), &matmul(&dense(&p), &dense(&q))));
    }

    #[test]
    fn commutation_phase((p, q) in dim_and_two()) {
        let s = p.symplectic_product(&q).unwrap();
        let pq = matmul(&dense(&p), &dense(&q));
        let qp = matmul(&dense(&q), &dense(&p));
        let scaled: Mat = qp.iter().map(|r| r.iter().map(|v| v * omega(p.d(), s)).collect()).collect();
        prop_assert!(close(&pq, &scaled));
        prop_assert_eq!(s, (q.d() - q.symplectic_product(&p).unwrap()) % q.d());
    }

    #[test]
    fn order_and_inverse((p, _) in dim_and_two()) {
        let n = (p.d() * p.d()) as usize;
        let k = p.order();
        let mut acc = identity(n);
        for step in 1..=k {
            acc = matmul(&acc, &dense(&p));
            prop_assert_eq!(close(&acc, &identity(n)), step == k, "step {} of {}", step, k);
        }
        prop_assert!(p.multiply(&p.inverse()).unwrap().is_identity());
        prop_assert!(close(&dense(&p.pow(3)), &matmul(&dense(&p), &matmul(&dense(&p), &dense(&p)))));
    }

    #[test]
    fn associative((p, q) in dim_and_two(), k in 0i64..7) {
        let r = p.pow(k).multiply(&q).unwrap();
        let a = p.multiply(&q).unwrap().multiply(&r).unwrap();
        let b = p.multiply(&q.multiply(&r).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn text_round_trip((p, _) in dim_and_two()) {
        let back = PauliOp::parse(&p.to_string(), p.d()).unwrap();
        prop_assert_eq!(back, p);
    }
}
