//! Numeric eigenvalues of circulants: gamma(zeta_n^k) for k = 0..n-1.
//!
//! The numeric spectrum is for screening and plots; verdicts always come
//! from the exact integer path. This example shows both agreeing on the
//! zero set.
//!
//! Run with: cargo run --example spectrum

use circulant::Circulant;

fn main() {
    println!("=== Numeric spectra ===\n");

    for (label, row) in [
        ("C_6", vec![0i64, 1, 0, 0, 0, 1]),
        ("C_8^(2)", vec![0, 1, 1, 0, 0, 0, 1, 1]),
        ("K_5", vec![0, 1, 1, 1, 1]),
    ] {
        let spec = Circulant::from_row(row).unwrap();
        let spectrum = spec.spectrum_numeric();
        let exact_zeros = spec.singularity().zero_exponents;
        println!("{label}  ({spec})");
        for (k, value) in spectrum.iter().enumerate() {
            let marker = if exact_zeros.contains(&k) {
                "  <- zero (exact)"
            } else {
                ""
            };
            println!("  k={k}: {:+.6} {:+.6}i{marker}", value.re, value.im);
        }
        let numeric_zeros: Vec<usize> = spectrum
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm() < 1e-8)
            .map(|(k, _)| k)
            .collect();
        println!("  exact zero set   {exact_zeros:?}");
        println!("  numeric zero set {numeric_zeros:?}\n");
    }
}
