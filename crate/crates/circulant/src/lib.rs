//! Exact singularity tests and determinants for circulant graphs and
//! digraphs.
//!
//! A circulant matrix is determined by its first row, and its eigenvalues
//! are the values of the row's representer polynomial at the n-th roots of
//! unity. This crate exploits that structure three ways:
//!
//! - **Exact classification.** A circulant is singular exactly when some
//!   cyclotomic polynomial `Phi_d` (for a divisor `d` of `n`) divides its
//!   reduced representer, or its row sum vanishes. [`Circulant::singularity`]
//!   reports the verdict together with the witnessing divisors and the
//!   exponents of the vanishing eigenvalues — all in integer arithmetic.
//! - **Exact determinants.** `det A` factors as the product of resultants
//!   `Res(Phi_d, gamma)` over the divisors of `n`
//!   ([`Circulant::exact_determinant`]), far faster than elimination on the
//!   full matrix; [`oracle::bareiss_det`] provides the independent
//!   brute-force cross-check.
//! - **Closed-form family predicates.** [`families::GraphFamily`] builds the
//!   first row of each supported graph/digraph family (cycle distance
//!   powers, cycle powers, their complements, `C(2n,r)`, k-element,
//!   (r,s,t)-element and `C_n^{i,j,k,l}` digraphs) and predicts singularity
//!   from its parameters alone; [`oracle::sweep_family`] verifies every
//!   predicate against the brute-force determinant.
//!
//! Start with the runnable examples (`cargo run --example classify`) or the
//! `circulant` binary (`cargo run --bin circulant -- classify --row 0,1,0,1`).
//!
//! ```
//! use circulant::{Circulant, GraphFamily};
//!
//! // The 4-cycle is singular: Phi_4 divides its reduced representer.
//! let c4 = Circulant::from_row(vec![0, 1, 0, 1])?;
//! let report = c4.singularity();
//! assert!(report.singular);
//! assert_eq!(report.witness_divisors, vec![4]);
//! assert_eq!(c4.exact_determinant().determinant, 0.into());
//!
//! // Closed-form family predicate, confirmed by the exact path.
//! let family = GraphFamily::PowerCycle { n: 8, r: 3 };
//! assert!(family.predict()?.singular);
//! assert!(family.build()?.singularity().singular);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cli;
pub mod cyclotomic;
pub mod families;
pub mod matrix;
pub mod oracle;
pub mod poly;

pub use families::{FamilyKind, GraphFamily, Prediction, PredictionKind};
pub use matrix::{two_value_determinant, Circulant, DetReport, SingularityReport};
pub use poly::IntPoly;
