//! Exact singularity classification with witnesses.
//!
//! A circulant is singular exactly when some cyclotomic polynomial `Phi_d`
//! (d | n, d > 1) divides the reduced representer polynomial, or the row
//! sum vanishes. The report lists both the witnessing divisors and the
//! exponents k with gamma(zeta_n^k) = 0.
//!
//! Run with: cargo run --example classify

use circulant::Circulant;

fn classify(label: &str, row: Vec<i64>) {
    let spec = Circulant::from_row(row).unwrap();
    let report = spec.singularity();
    println!("{label}  ({spec})");
    println!("  singular:         {}", report.singular);
    println!("  witness divisors: {:?}", report.witness_divisors);
    println!("  zero exponents:   {:?}", report.zero_exponents);
    println!();
}

fn main() {
    println!("=== Singularity of circulant graphs/digraphs ===\n");

    // The 4-cycle: Phi_4 = x^2 + 1 divides Gamma = 1 + x^2, so the
    // eigenvalues at k = 1, 3 vanish.
    classify("C_4 ", vec![0, 1, 0, 1]);

    // The 5-cycle: 4 does not divide 5, non-singular.
    classify("C_5 ", vec![0, 1, 0, 0, 1]);

    // Complete graph K_6: always non-singular.
    classify("K_6 ", vec![0, 1, 1, 1, 1, 1]);

    // Complement of C_6: Phi_3 divides x^2 + x^3 + x^4 stripped.
    classify("C_6^c", vec![0, 0, 1, 1, 1, 0]);

    // A digraph with a loop at every vertex (3-element digraph on 6
    // vertices): gcd(6, 3) = 3 > 1 forces singularity.
    classify("3-element on 6", vec![1, 1, 1, 0, 0, 0]);

    // Integer rows work too; the verdict is scale- and shift-invariant.
    classify("integer row", vec![2, -1, 0, -1]);
}
