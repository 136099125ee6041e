//! Wall-time comparison: resultant-path determinant vs brute-force
//! elimination, plus the large-order classification timing.
//!
//! The resultant path factors the determinant over the divisors of n and
//! never touches the n x n matrix, so it wins by orders of magnitude as n
//! grows. A trimmed ladder keeps this example quick; the `bench` CLI
//! subcommand runs the full one.
//!
//! Run with: cargo run --release --example fastpath_bench

use circulant::cli::bench_report;

fn main() {
    println!("=== Determinant fast path vs brute force (median of 3) ===\n");
    let report = bench_report(256, 3, 1);
    println!(
        "{:>6} {:>12} {:>12} {:>9}",
        "n", "exact (ms)", "bareiss (ms)", "speedup"
    );
    for size in &report.sizes {
        println!(
            "{:>6} {:>12.3} {:>12.3} {:>8.1}x",
            size.n, size.exact_ms, size.bareiss_ms, size.speedup
        );
    }
    println!(
        "\nexact singularity classification at n = {}: {:.3} ms",
        report.classify_n, report.classify_ms
    );
}
