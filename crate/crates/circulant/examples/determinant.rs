//! Exact determinants three ways: cyclotomic resultants, the two-value
//! closed form, and brute-force elimination.
//!
//! `det A = prod_{d | n} Res(Phi_d, gamma)` — each factor is the product of
//! the eigenvalues living at the primitive d-th roots of unity, so the
//! report doubles as a divisor-by-divisor diagnosis of where a zero
//! eigenvalue comes from.
//!
//! Run with: cargo run --example determinant

use circulant::oracle::bareiss_det;
use circulant::{two_value_determinant, Circulant};

fn main() {
    println!("=== Exact determinants via cyclotomic resultants ===\n");

    for (label, row) in [
        ("C_3", vec![0i64, 1, 1]),
        ("C_4", vec![0, 1, 0, 1]),
        ("K_4", vec![0, 1, 1, 1]),
        ("10-vertex circulant", vec![0, 1, 0, 0, 1, 1, 1, 0, 0, 1]),
    ] {
        let spec = Circulant::from_row(row).unwrap();
        let report = spec.exact_determinant();
        println!("{label}: det = {}", report.determinant);
        for (d, factor) in &report.factors {
            println!("  Res(Phi_{d}, gamma) = {factor}");
        }
        let oracle = bareiss_det(&spec);
        println!(
            "  brute-force check: {oracle} ({})\n",
            if oracle == report.determinant {
                "agrees"
            } else {
                "DISAGREES"
            }
        );
    }

    println!("=== Two-value rows: (s*a + t*b)*(a - b)^(n-1) or 0 ===\n");
    for (n, a, s, b) in [(4usize, 0i64, 1usize, 1i64), (6, 1, 2, 0), (7, 2, 3, -1)] {
        let det = two_value_determinant(n, a, s, b).unwrap();
        let mut row = vec![b; n];
        for e in row.iter_mut().take(s) {
            *e = a;
        }
        let spec = Circulant::from_row(row).unwrap();
        println!(
            "n={n} a={a} s={s} b={b}: closed form {det}, elimination {}",
            bareiss_det(&spec)
        );
    }
}
