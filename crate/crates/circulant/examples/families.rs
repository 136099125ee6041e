//! The named graph/digraph families and their closed-form predicates.
//!
//! Every family pairs a first-row constructor with a singularity criterion
//! in its parameters alone — no matrix work needed. This example builds a
//! few members of each family and compares the prediction with the exact
//! verdict.
//!
//! Run with: cargo run --example families

use circulant::{GraphFamily, PredictionKind};

fn show(family: GraphFamily) {
    let spec = family.build().unwrap();
    let prediction = family.predict().unwrap();
    let verdict = spec.singularity().singular;
    let status = match prediction.kind {
        PredictionKind::Exact => {
            if prediction.singular == verdict {
                "ok"
            } else {
                "MISMATCH"
            }
        }
        PredictionKind::SufficientOnly => {
            if !prediction.singular || verdict {
                "ok (one-sided)"
            } else {
                "VIOLATION"
            }
        }
    };
    println!(
        "{:<36} predicted={:<5} actual={:<5} rule={} [{status}]",
        family.to_string(),
        prediction.singular,
        verdict,
        prediction.rule
    );
}

fn main() {
    println!("=== Family predicates vs exact verdicts ===\n");

    println!("-- distance powers of the cycle (C_n^i) --");
    show(GraphFamily::DistancePower { n: 12, i: 2 });
    show(GraphFamily::DistancePower { n: 12, i: 3 });
    show(GraphFamily::DistancePowerComplement { n: 9, i: 4 });
    show(GraphFamily::DistancePowerComplement { n: 12, i: 2 });

    println!("\n-- cycle powers (C_n^(r)) and complements --");
    show(GraphFamily::PowerCycle { n: 8, r: 3 });
    show(GraphFamily::PowerCycle { n: 9, r: 2 });
    show(GraphFamily::PowerCycleComplement { n: 9, r: 4 });
    show(GraphFamily::PowerCycleComplement { n: 10, r: 2 });

    println!("\n-- power-plus-antipodal graphs C(2n, r) and complements --");
    show(GraphFamily::C2nr { n: 3, r: 1 });
    show(GraphFamily::C2nr { n: 5, r: 2 });
    show(GraphFamily::C2nrComplement { n: 5, r: 3 });
    show(GraphFamily::C2nrComplement { n: 6, r: 2 });

    println!("\n-- k-element and (r,s,t)-element digraphs --");
    show(GraphFamily::KElement { n: 7, k: 3 });
    show(GraphFamily::KElement { n: 9, k: 6 });
    show(GraphFamily::RstDigraph {
        n: 6,
        r: 2,
        s: 2,
        t: 1,
    });
    show(GraphFamily::RstDigraph {
        n: 7,
        r: 1,
        s: 1,
        t: 2,
    });

    println!("\n-- block-and-stride digraphs C_n^(i,j,k,l) --");
    show(GraphFamily::Ijkl {
        n: 6,
        i: 0,
        j: 2,
        k: 2,
        l: 1,
    });
    show(GraphFamily::Ijkl {
        n: 10,
        i: 1,
        j: 3,
        k: 2,
        l: 1,
    });

    println!(
        "\nText forms parse back: {:?}",
        "power-cycle:n=8,r=3".parse::<GraphFamily>().unwrap()
    );
}
