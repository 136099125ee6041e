//! Predicate-vs-oracle verification sweeps.
//!
//! Every closed-form predicate is checked against a brute-force
//! fraction-free determinant over all valid instances up to a cutoff, and
//! the exact determinant is cross-validated on seeded random rows.
//!
//! Run with: cargo run --example verify_sweeps

use circulant::families::FamilyKind;
use circulant::oracle::{sweep_family, sweep_random_rows};

fn main() {
    println!("=== Family sweeps (predicate vs brute-force determinant) ===\n");
    let mut total = 0usize;
    let mut disagreements = 0usize;
    for kind in FamilyKind::ALL {
        let n_max = match kind {
            FamilyKind::Rst | FamilyKind::Ijkl => 14,
            _ => 24,
        };
        let summary = sweep_family(kind, n_max).summary();
        println!(
            "{:<28} n_max={:<3} instances={:<6} disagreements={}",
            kind.name(),
            summary.n_max,
            summary.total,
            summary.disagreements.len()
        );
        for outcome in &summary.disagreements {
            println!("  DISAGREE {}", outcome.family);
        }
        total += summary.total;
        disagreements += summary.disagreements.len();
    }
    println!("\ntotal instances {total}, disagreements {disagreements}");

    println!("\n=== Random-row cross-validation ===\n");
    let sweep = sweep_random_rows(20, 150, 42);
    println!(
        "n_max={} samples={} seed={}: passes={} failures={}",
        sweep.n_max,
        sweep.samples,
        sweep.seed,
        sweep.passes,
        sweep.failures.len()
    );
    for failure in &sweep.failures {
        println!(
            "  FAIL {}: exact={} oracle={}",
            failure.spec, failure.exact_det, failure.oracle_det
        );
    }
}
