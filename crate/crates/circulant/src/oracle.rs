//! Brute-force ground truth and verification sweeps.
//!
//! [`bareiss_det`] computes exact determinants by fraction-free elimination
//! on the fully materialized matrix, with no polynomial algebra anywhere on
//! the path — an independent check for every closed-form predicate and for
//! the resultant-based determinant. The sweep harnesses compare predictions
//! against it over exhaustive or seeded-random instance sets.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::families::{enumerate_valid, FamilyKind, GraphFamily, Prediction, PredictionKind};
use crate::matrix::Circulant;

/// Exact determinant of the materialized `n x n` circulant matrix by
/// Bareiss fraction-free elimination. Row `i` is the first row cyclically
/// shifted right by `i`. Every division is checked to be exact.
pub fn bareiss_det(spec: &Circulant) -> BigInt {
    let n = spec.n();
    let row = spec.row();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(row[(j + n - i) % n])).collect())
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            let Some(pivot_row) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, pivot_row);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for below in rest.iter_mut() {
            for j in k + 1..n {
                let num = &pivot_row[k] * &below[j] - &below[k] * &pivot_row[j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                assert!(
                    r.is_zero(),
                    "Bareiss elimination produced an inexact division"
                );
                below[j] = q;
            }
            below[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if negate {
        -det
    } else {
        det
    }
}

/// One predicate-vs-oracle comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub family: GraphFamily,
    pub prediction: Prediction,
    pub oracle_det: BigInt,
    pub agree: bool,
}

impl SweepOutcome {
    fn evaluate(family: GraphFamily) -> SweepOutcome {
        let prediction = family.predict().expect("enumerated families are valid");
        let spec = family.build().expect("enumerated families are valid");
        let oracle_det = bareiss_det(&spec);
        let oracle_singular = oracle_det.is_zero();
        let agree = match prediction.kind {
            PredictionKind::Exact => prediction.singular == oracle_singular,
            PredictionKind::SufficientOnly => !prediction.singular || oracle_singular,
        };
        SweepOutcome {
            family,
            prediction,
            oracle_det,
            agree,
        }
    }
}

impl Serialize for SweepOutcome {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SweepOutcome", 4)?;
        s.serialize_field("family", &self.family.to_string())?;
        s.serialize_field("prediction", &self.prediction)?;
        s.serialize_field("oracle_det", &self.oracle_det.to_string())?;
        s.serialize_field("agree", &self.agree)?;
        s.end()
    }
}

/// Every outcome of one family sweep, in enumeration order.
#[derive(Debug, Clone)]
pub struct FamilySweep {
    pub kind: FamilyKind,
    pub n_max: usize,
    pub outcomes: Vec<SweepOutcome>,
}

/// Totals plus every disagreement, verbatim.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub kind: FamilyKind,
    pub n_max: usize,
    pub total: usize,
    pub disagreements: Vec<SweepOutcome>,
}

impl FamilySweep {
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            kind: self.kind,
            n_max: self.n_max,
            total: self.outcomes.len(),
            disagreements: self.outcomes.iter().filter(|o| !o.agree).cloned().collect(),
        }
    }
}

/// Run the closed-form predicate against the Bareiss oracle over every valid
/// instance of `kind` with order at most `n_max`. Instances are evaluated in
/// parallel but reported in enumeration order.
pub fn sweep_family(kind: FamilyKind, n_max: usize) -> FamilySweep {
    let outcomes: Vec<SweepOutcome> = enumerate_valid(kind, n_max)
        .into_par_iter()
        .map(SweepOutcome::evaluate)
        .collect();
    FamilySweep {
        kind,
        n_max,
        outcomes,
    }
}

/// A random-row sample whose exact and oracle answers disagreed.
#[derive(Debug, Clone)]
pub struct RandomRowFailure {
    pub spec: Circulant,
    pub exact_det: BigInt,
    pub oracle_det: BigInt,
    pub singular: bool,
}

impl Serialize for RandomRowFailure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("RandomRowFailure", 4)?;
        s.serialize_field("spec", &self.spec.to_string())?;
        s.serialize_field("exact_det", &self.exact_det.to_string())?;
        s.serialize_field("oracle_det", &self.oracle_det.to_string())?;
        s.serialize_field("singular", &self.singular)?;
        s.end()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RandomRowSweep {
    pub n_max: usize,
    pub samples: usize,
    pub seed: u64,
    pub passes: usize,
    pub failures: Vec<RandomRowFailure>,
}

/// Validate `exact_determinant` and `singularity` against the oracle on
/// seeded random 0/1 rows with `a_0 = 0` and order uniform in `[2, n_max]`.
pub fn sweep_random_rows(n_max: usize, samples: usize, seed: u64) -> RandomRowSweep {
    assert!(n_max >= 2, "sweep_random_rows: n_max must be >= 2");
    assert!(samples >= 1, "sweep_random_rows: samples must be >= 1");
    let specs = random_binary_specs(n_max, samples, seed);
    let results: Vec<Option<RandomRowFailure>> = specs
        .into_par_iter()
        .map(|spec| {
            let exact = spec.exact_determinant();
            let oracle = bareiss_det(&spec);
            let singular = spec.singularity().singular;
            if exact.determinant == oracle && singular == oracle.is_zero() {
                None
            } else {
                Some(RandomRowFailure {
                    spec,
                    exact_det: exact.determinant,
                    oracle_det: oracle,
                    singular,
                })
            }
        })
        .collect();
    let failures: Vec<RandomRowFailure> = results.into_iter().flatten().collect();
    RandomRowSweep {
        n_max,
        samples,
        seed,
        passes: samples - failures.len(),
        failures,
    }
}

/// The deterministic sample set behind [`sweep_random_rows`], exposed so
/// other checks (e.g. the numeric spectrum cross-validation) can reuse the
/// same rows.
pub fn random_binary_specs(n_max: usize, samples: usize, seed: u64) -> Vec<Circulant> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let n = rng.gen_range(2..=n_max);
            let mut row = vec![0i64; n];
            for e in row.iter_mut().skip(1) {
                *e = rng.gen_range(0..=1);
            }
            Circulant::from_row(row).expect("n >= 2")
        })
        .collect()
}

/// Seeded random symmetric 0/1 row with `a_0 = 0`: a loopless circulant
/// graph on `n` vertices.
pub fn random_symmetric_row(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let mut row = vec![0i64; n];
    for i in 1..=n / 2 {
        if rng.gen_range(0..=1) == 1 {
            row[i] = 1;
            row[n - i] = 1;
        }
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::two_value_determinant;

    fn c(row: &[i64]) -> Circulant {
        Circulant::from_row(row.to_vec()).unwrap()
    }

    #[test]
    fn bareiss_examples() {
        assert_eq!(bareiss_det(&c(&[0, 1, 1])), BigInt::from(2));
        assert_eq!(bareiss_det(&c(&[0, 1, 0, 1])), BigInt::zero());
        for n in 1..=8 {
            let mut row = vec![0i64; n];
            row[0] = 1;
            assert_eq!(bareiss_det(&c(&row)), BigInt::one(), "identity n={n}");
        }
        assert_eq!(bareiss_det(&c(&[0, 1, 1, 1])), BigInt::from(-3));
        assert_eq!(bareiss_det(&c(&[7])), BigInt::from(7));
    }

    #[test]
    fn bareiss_matches_two_value_formula() {
        for n in 1..=14 {
            for s in 1..=n {
                for a in [-1i64, 0, 1, 2] {
                    for b in [-1i64, 0, 1, 2] {
                        let mut row = vec![b; n];
                        for e in row.iter_mut().take(s) {
                            *e = a;
                        }
                        let oracle = bareiss_det(&c(&row));
                        let formula = two_value_determinant(n, a, s, b).unwrap();
                        assert_eq!(oracle, formula, "n={n} s={s} a={a} b={b}");
                    }
                }
            }
        }
    }

    #[test]
    fn bareiss_shift_changes_sign_predictably() {
        let spec = c(&[0, 1, 1, 0, 1, 0, 0, 1]);
        let n = spec.n();
        let base = bareiss_det(&spec);
        for k in 0..n {
            let shifted = bareiss_det(&spec.rotated(k));
            let expected = if (k * (n - 1)).is_multiple_of(2) {
                base.clone()
            } else {
                -base.clone()
            };
            assert_eq!(shifted, expected, "shift {k}");
            assert_eq!(shifted.is_zero(), base.is_zero());
        }
    }

    #[test]
    fn family_sweep_small() {
        for kind in [FamilyKind::DistancePower, FamilyKind::C2nr, FamilyKind::Rst] {
            let sweep = sweep_family(kind, 12);
            let summary = sweep.summary();
            assert_eq!(
                summary.disagreements.len(),
                0,
                "{kind}: {:?}",
                summary.disagreements
            );
            assert_eq!(summary.total, sweep.outcomes.len());
        }
    }

    #[test]
    fn random_rows_sweep_small() {
        let sweep = sweep_random_rows(40, 80, 42);
        assert_eq!(sweep.passes, 80);
        assert!(sweep.failures.is_empty());
        // identical seed, identical sample set
        let again = random_binary_specs(16, 60, 42);
        assert_eq!(again, random_binary_specs(16, 60, 42));
    }

    #[test]
    fn symmetric_rows_are_symmetric() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=30 {
            let row = random_symmetric_row(&mut rng, n);
            assert_eq!(row[0], 0);
            for i in 1..n {
                assert_eq!(row[i], row[n - i], "n={n} i={i}");
            }
        }
    }

    #[test]
    fn bareiss_agrees_with_exact_determinant_on_integer_rows() {
        let rows: Vec<Vec<i64>> = vec![
            vec![2, -1, 3],
            vec![1, 2, 3, 4],
            vec![-2, 0, 5, 1, -1],
            vec![3, 3, 3, 3, 3, 3],
            vec![1, 0, -4, 2, 0, 7, -1],
        ];
        for row in rows {
            let spec = c(&row);
            assert_eq!(
                bareiss_det(&spec),
                spec.exact_determinant().determinant,
                "row {row:?}"
            );
        }
    }
}
