//! The number-theoretic toolbox: divisors, totients, cyclotomic
//! polynomials, and the four-way classification of Phi_m at roots of unity.
//!
//! Run with: cargo run --example cyclotomic_toolkit

use circulant::cyclotomic::{
    cyclotomic, divisors, euler_phi, odlyzko_modulus_class, odlyzko_observed_modulus,
};
use circulant::IntPoly;

fn main() {
    println!("=== Cyclotomic polynomials ===\n");
    for d in [1usize, 2, 3, 4, 6, 12, 105] {
        let phi = cyclotomic(d);
        println!(
            "Phi_{d} (degree {} = phi({d}) = {}):",
            phi.degree().unwrap(),
            euler_phi(d)
        );
        println!("  coefficients: {phi}");
    }

    println!("\n=== Factorization of x^n - 1 ===\n");
    let n = 12;
    println!("divisors({n}) = {:?}", divisors(n));
    let mut product = IntPoly::one();
    for d in divisors(n) {
        product = &product * &cyclotomic(d);
    }
    println!(
        "prod Phi_d over d | {n} equals x^{n} - 1: {}",
        product == IntPoly::x_pow_minus_one(n)
    );

    println!("\n=== Values of Phi_m over the primitive n-th roots ===\n");
    println!("The conjugate product |prod Phi_m(zeta_n^k)| is p-power or 1:");
    for (m, n) in [(4usize, 2usize), (2, 6), (2, 4), (3, 5), (3, 15), (8, 24)] {
        let class = odlyzko_modulus_class(m, n);
        let observed = odlyzko_observed_modulus(m, n);
        println!(
            "  m={m:>2} n={n:>2}: {:?}, predicted {:.6}, observed {:.6}",
            class.case, class.predicted_modulus, observed
        );
    }
}
