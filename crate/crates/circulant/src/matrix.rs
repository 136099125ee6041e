//! The circulant-matrix abstraction.
//!
//! A circulant matrix is fully determined by its first row; its eigenvalues
//! are the representer polynomial evaluated at the n-th roots of unity. That
//! turns singularity into a cyclotomic divisibility question and the
//! determinant into a product of resultants against cyclotomic factors —
//! both answered here in exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cyclotomic::{cyclotomic, divisors};
use crate::poly::IntPoly;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CirculantError {
    #[error("a circulant needs a first row of length >= 1")]
    EmptyRow,
    #[error("row length {len} does not match declared order {n}")]
    LengthMismatch { len: usize, n: usize },
    #[error("the zero polynomial has no monomial factorization x^k * reduced")]
    ZeroPolynomial,
    #[error("complement needs 0/1 entries, found {0} at index {1}")]
    NonBinaryEntry(i64, usize),
    #[error("complement needs a_0 = 0 (no loops), found {0}")]
    LoopEntry(i64),
    #[error("complement needs a symmetric row, but row[{i}] != row[n-{i}]")]
    AsymmetricRow { i: usize },
    #[error("two-value row needs 1 <= s <= n, got s={s}, n={n}")]
    RunLengthOutOfRange { s: usize, n: usize },
    #[error("invalid circulant text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Order `n` plus the integer first row `[a_0, ..., a_{n-1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulant {
    row: Vec<i64>,
}

impl Circulant {
    pub fn from_row(row: Vec<i64>) -> Result<Self, CirculantError> {
        if row.is_empty() {
            return Err(CirculantError::EmptyRow);
        }
        Ok(Circulant { row })
    }

    pub fn n(&self) -> usize {
        self.row.len()
    }

    pub fn row(&self) -> &[i64] {
        &self.row
    }

    pub fn row_sum(&self) -> i64 {
        self.row.iter().sum()
    }

    /// The representer polynomial: coefficient `i` is `row[i]`.
    pub fn representer(&self) -> IntPoly {
        IntPoly::from_coeffs(self.row.iter().map(|&a| BigInt::from(a)).collect())
    }

    /// First row rotated right by `k` (the matrix premultiplied by the
    /// rotation matrix power `W_n^k`).
    pub fn rotated(&self, k: usize) -> Circulant {
        let n = self.n();
        let mut row = vec![0i64; n];
        for (i, &a) in self.row.iter().enumerate() {
            row[(i + k) % n] = a;
        }
        Circulant { row }
    }

    /// Exact singularity verdict with witnesses, by integer arithmetic only.
    pub fn singularity(&self) -> SingularityReport {
        let n = self.n();
        let gamma = self.representer();
        if gamma.is_zero() {
            return SingularityReport {
                singular: true,
                witness_divisors: divisors(n).into_iter().filter(|&d| d > 1).collect(),
                zero_exponents: (0..n).collect(),
            };
        }
        let (_, reduced) = gamma_strip(&gamma).expect("gamma is nonzero");
        let mut witness_divisors = Vec::new();
        for d in divisors(n) {
            if d == 1 {
                continue;
            }
            // Phi_d | Gamma  <=>  Phi_d | (Gamma mod (x^d - 1)), since
            // Phi_d | x^d - 1; folding first keeps the division cheap.
            let folded = reduced.reduce_cyclic(d);
            if crate::cyclotomic::phi_divides(&folded, d) {
                witness_divisors.push(d);
            }
        }
        let root_at_one = self.row_sum() == 0;
        let zero_exponents = (0..n)
            .filter(|&k| {
                let d = n / n.gcd(&k);
                if d == 1 {
                    root_at_one
                } else {
                    witness_divisors.binary_search(&d).is_ok()
                }
            })
            .collect::<Vec<_>>();
        SingularityReport {
            singular: !zero_exponents.is_empty(),
            witness_divisors,
            zero_exponents,
        }
    }

    /// Exact determinant as the product of `Res(Phi_d, gamma)` over the
    /// divisors `d` of `n`, with the per-divisor factors recorded.
    pub fn exact_determinant(&self) -> DetReport {
        let n = self.n();
        let gamma = self.representer();
        let mut factors = BTreeMap::new();
        let mut determinant = BigInt::one();
        for d in divisors(n) {
            // Res(Phi_d, gamma) only sees gamma's values at d-th roots of
            // unity, so reduce mod x^d - 1 first.
            let folded = gamma.reduce_cyclic(d);
            let factor =
                IntPoly::resultant(&cyclotomic(d), &folded).expect("Phi_d is monic and nonzero");
            determinant *= &factor;
            factors.insert(d, factor);
        }
        DetReport {
            determinant,
            factors,
        }
    }

    /// Eigenvalues `gamma(zeta_n^k)` for `k = 0, ..., n-1`, numerically.
    pub fn spectrum_numeric(&self) -> Vec<Complex64> {
        let n = self.n();
        let gamma = self.representer();
        (0..n).map(|k| gamma.eval_unit_circle(n, k)).collect()
    }

    /// First row of the complement graph (`J - A - I`). Requires a loopless
    /// symmetric 0/1 row.
    pub fn complement_row(&self) -> Result<Circulant, CirculantError> {
        for (i, &a) in self.row.iter().enumerate() {
            if a != 0 && a != 1 {
                return Err(CirculantError::NonBinaryEntry(a, i));
            }
        }
        if self.row[0] != 0 {
            return Err(CirculantError::LoopEntry(self.row[0]));
        }
        let tail = &self.row[1..];
        if let Some(i) = tail.iter().zip(tail.iter().rev()).position(|(a, b)| a != b) {
            return Err(CirculantError::AsymmetricRow { i: i + 1 });
        }
        let mut row: Vec<i64> = self.row.iter().map(|&a| 1 - a).collect();
        row[0] = 0;
        Ok(Circulant { row })
    }
}

/// Strip the largest monomial factor: `p = x^k * reduced` with
/// `reduced(0) != 0`. Rejects the zero polynomial.
pub fn gamma_strip(p: &IntPoly) -> Result<(usize, IntPoly), CirculantError> {
    if p.is_zero() {
        return Err(CirculantError::ZeroPolynomial);
    }
    let k = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial has a nonzero coefficient");
    let reduced = IntPoly::from_coeffs(p.coeffs()[k..].to_vec());
    Ok((k, reduced))
}

/// Determinant of the circulant with first row `[a x s, b x (n-s)]`:
/// `(s*a + t*b)*(a - b)^(n-1)` when `gcd(s, n) = 1`, else 0.
pub fn two_value_determinant(n: usize, a: i64, s: usize, b: i64) -> Result<BigInt, CirculantError> {
    if s < 1 || s > n {
        return Err(CirculantError::RunLengthOutOfRange { s, n });
    }
    if n.gcd(&s) != 1 {
        return Ok(BigInt::zero());
    }
    let t = n - s;
    let linear = BigInt::from(s as i64) * a + BigInt::from(t as i64) * b;
    let diff = BigInt::from(a) - BigInt::from(b);
    Ok(linear * pow_bigint(&diff, n - 1))
}

fn pow_bigint(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Singularity verdict plus its exact witnesses: the divisors `d > 1` of `n`
/// with `Phi_d | Gamma`, and the exponents `k` with `gamma(zeta_n^k) = 0`
/// (the eigenvalue at 1 is reported through exponent 0).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    pub singular: bool,
    pub witness_divisors: Vec<usize>,
    pub zero_exponents: Vec<usize>,
}

/// Exact determinant plus the per-divisor resultant factors it is the
/// product of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub determinant: BigInt,
    pub factors: BTreeMap<usize, BigInt>,
}

impl Serialize for DetReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("determinant", &self.determinant.to_string())?;
        let factors: BTreeMap<String, String> = self
            .factors
            .iter()
            .map(|(d, v)| (d.to_string(), v.to_string()))
            .collect();
        map.serialize_entry("factors", &factors)?;
        map.end()
    }
}

/// Text form `n=<int>;row=<comma-separated ints>`.
impl fmt::Display for Circulant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.row.iter().map(|a| a.to_string()).collect();
        write!(f, "n={};row={}", self.n(), parts.join(","))
    }
}

impl FromStr for Circulant {
    type Err = CirculantError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| CirculantError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let (n_part, row_part) = s
            .split_once(';')
            .ok_or_else(|| err("expected `n=<int>;row=<comma-separated ints>`"))?;
        let n = n_part
            .strip_prefix("n=")
            .ok_or_else(|| err("missing `n=` prefix"))?
            .trim()
            .parse::<usize>()
            .map_err(|_| err("order is not a positive integer"))?;
        let row_text = row_part
            .strip_prefix("row=")
            .ok_or_else(|| err("missing `row=` prefix"))?;
        let row = parse_row(row_text).map_err(|reason| CirculantError::Parse {
            text: s.to_string(),
            reason,
        })?;
        if row.len() != n {
            return Err(CirculantError::LengthMismatch { len: row.len(), n });
        }
        Circulant::from_row(row)
    }
}

/// Parse a comma-separated integer row.
pub fn parse_row(text: &str) -> Result<Vec<i64>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| format!("{:?} is not an integer", part.trim()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(row: &[i64]) -> Circulant {
        Circulant::from_row(row.to_vec()).unwrap()
    }

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn representer_examples() {
        assert_eq!(c(&[0, 1, 0, 1]).representer(), p(&[0, 1, 0, 1]));
        assert!(c(&[0, 0, 0]).representer().is_zero());
        assert_eq!(c(&[0, 1, 1, 1, 1]).representer(), p(&[0, 1, 1, 1, 1]));
    }

    #[test]
    fn gamma_strip_examples() {
        assert_eq!(gamma_strip(&p(&[0, 1, 0, 1])).unwrap(), (1, p(&[1, 0, 1])));
        assert_eq!(gamma_strip(&p(&[1, 1])).unwrap(), (0, p(&[1, 1])));
        assert_eq!(
            gamma_strip(&p(&[0, 0, 0, 0, 0, 1])).unwrap(),
            (5, IntPoly::one())
        );
        assert_eq!(
            gamma_strip(&IntPoly::zero()),
            Err(CirculantError::ZeroPolynomial)
        );
    }

    #[test]
    fn singularity_cycle_cases() {
        // C_4: singular with witness Phi_4, zero eigenvalues at k = 1, 3
        let report = c(&[0, 1, 0, 1]).singularity();
        assert!(report.singular);
        assert_eq!(report.witness_divisors, vec![4]);
        assert_eq!(report.zero_exponents, vec![1, 3]);

        // C_5: non-singular
        let report = c(&[0, 1, 0, 0, 1]).singularity();
        assert!(!report.singular);
        assert!(report.witness_divisors.is_empty());
        assert!(report.zero_exponents.is_empty());

        // K_4: non-singular
        assert!(!c(&[0, 1, 1, 1]).singularity().singular);
    }

    #[test]
    fn singularity_zero_row_reports_everything() {
        let report = c(&[0, 0, 0, 0]).singularity();
        assert!(report.singular);
        assert_eq!(report.witness_divisors, vec![2, 4]);
        assert_eq!(report.zero_exponents, vec![0, 1, 2, 3]);
    }

    #[test]
    fn singularity_row_sum_zero_shows_exponent_zero() {
        let report = c(&[1, -1]).singularity();
        assert!(report.singular);
        assert!(report.witness_divisors.is_empty());
        assert_eq!(report.zero_exponents, vec![0]);
    }

    #[test]
    fn exact_determinant_examples() {
        // C_3: det 2, factors {1: 2, 3: 1}
        let report = c(&[0, 1, 1]).exact_determinant();
        assert_eq!(report.determinant, BigInt::from(2));
        assert_eq!(report.factors[&1], BigInt::from(2));
        assert_eq!(report.factors[&3], BigInt::from(1));

        // K_4: det -3
        let report = c(&[0, 1, 1, 1]).exact_determinant();
        assert_eq!(report.determinant, BigInt::from(-3));

        // C_4: det 0 through the d = 4 factor
        let report = c(&[0, 1, 0, 1]).exact_determinant();
        assert_eq!(report.determinant, BigInt::zero());
        assert_eq!(report.factors[&4], BigInt::zero());
        // determinant is the product of all factors
        let prod: BigInt = report.factors.values().product();
        assert_eq!(prod, report.determinant);
    }

    #[test]
    fn two_value_examples() {
        assert_eq!(two_value_determinant(4, 0, 1, 1).unwrap(), BigInt::from(-3));
        assert_eq!(two_value_determinant(6, 1, 2, 0).unwrap(), BigInt::zero());
        assert_eq!(two_value_determinant(5, 1, 1, 1).unwrap(), BigInt::zero());
        assert_eq!(
            two_value_determinant(5, 0, 6, 1),
            Err(CirculantError::RunLengthOutOfRange { s: 6, n: 5 })
        );
        // n = 1 edge: the 1x1 matrix [a]
        assert_eq!(two_value_determinant(1, 7, 1, 0).unwrap(), BigInt::from(7));
    }

    #[test]
    fn spectrum_examples() {
        let spec = c(&[0, 1, 0, 1]).spectrum_numeric();
        let expected = [2.0, 0.0, -2.0, 0.0];
        for (v, e) in spec.iter().zip(expected) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-9, "{v} vs {e}");
        }
        let spec = c(&[0, 1, 1]).spectrum_numeric();
        let expected = [2.0, -1.0, -1.0];
        for (v, e) in spec.iter().zip(expected) {
            assert!((v - Complex64::new(e, 0.0)).norm() < 1e-9);
        }
        for v in c(&[0, 0, 0]).spectrum_numeric() {
            assert!(v.norm() < 1e-12);
        }
    }

    #[test]
    fn complement_examples() {
        assert_eq!(c(&[0, 1, 0, 1]).complement_row().unwrap(), c(&[0, 0, 1, 0]));
        assert_eq!(c(&[0, 1, 1, 1]).complement_row().unwrap(), c(&[0, 0, 0, 0]));
        assert_eq!(
            c(&[0, 1, 0, 0, 1]).complement_row().unwrap(),
            c(&[0, 0, 1, 1, 0])
        );
        assert_eq!(
            c(&[0, 2, 2]).complement_row(),
            Err(CirculantError::NonBinaryEntry(2, 1))
        );
        assert_eq!(
            c(&[1, 1, 1]).complement_row(),
            Err(CirculantError::LoopEntry(1))
        );
        assert_eq!(
            c(&[0, 1, 0, 0]).complement_row(),
            Err(CirculantError::AsymmetricRow { i: 1 })
        );
    }

    #[test]
    fn text_form_round_trip() {
        let spec: Circulant = "n=4;row=0,1,0,1".parse().unwrap();
        assert_eq!(spec, c(&[0, 1, 0, 1]));
        assert_eq!(spec.to_string(), "n=4;row=0,1,0,1");
        assert!(matches!(
            "n=3;row=0,1".parse::<Circulant>(),
            Err(CirculantError::LengthMismatch { len: 2, n: 3 })
        ));
        assert!("row=0,1".parse::<Circulant>().is_err());
        assert!("n=2;row=0,x".parse::<Circulant>().is_err());
    }

    #[test]
    fn zero_exponent_membership_consistency() {
        // k is a zero exponent iff n/gcd(n,k) is a witness (or 1 with zero row sum)
        for row in [
            vec![0i64, 1, 0, 1],
            vec![0, 1, 1, 0, 0, 1, 1, 0],
            vec![1, -1, 1, -1],
            vec![0, 1, 1, 1, 1, 1],
            vec![2, 3, -5],
        ] {
            let spec = c(&row);
            let n = spec.n();
            let report = spec.singularity();
            let root_at_one = spec.row_sum() == 0;
            for k in 0..n {
                let d = n / n.gcd(&k);
                let expected = if d == 1 {
                    root_at_one
                } else {
                    report.witness_divisors.contains(&d)
                };
                assert_eq!(
                    report.zero_exponents.contains(&k),
                    expected,
                    "row={row:?} k={k}"
                );
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_row() -> impl Strategy<Value = Vec<i64>> {
            prop::collection::vec(-3i64..=3, 1..=16)
        }

        fn arb_binary_symmetric_row() -> impl Strategy<Value = Vec<i64>> {
            (2usize..=14, prop::collection::vec(0i64..=1, 1..=7)).prop_map(|(n, half)| {
                let mut row = vec![0i64; n];
                for i in 1..=n / 2 {
                    let bit = half[(i - 1) % half.len()];
                    row[i] = bit;
                    row[n - i] = bit;
                }
                row
            })
        }

        proptest! {
            #[test]
            fn singular_iff_determinant_zero(row in arb_row()) {
                let spec = Circulant::from_row(row).unwrap();
                let report = spec.singularity();
                let det = spec.exact_determinant();
                prop_assert_eq!(report.singular, det.determinant.is_zero());
                let prod: BigInt = det.factors.values().product();
                prop_assert_eq!(prod, det.determinant);
            }

            #[test]
            fn rotation_preserves_singularity(row in arb_row(), k in 0usize..16) {
                let spec = Circulant::from_row(row).unwrap();
                let rotated = spec.rotated(k % spec.n());
                prop_assert_eq!(
                    spec.singularity().singular,
                    rotated.singularity().singular
                );
            }

            #[test]
            fn row_sum_zero_iff_exponent_zero(row in arb_row()) {
                let spec = Circulant::from_row(row).unwrap();
                let report = spec.singularity();
                prop_assert_eq!(
                    report.zero_exponents.first() == Some(&0),
                    spec.row_sum() == 0
                );
            }

            #[test]
            fn complement_is_involutive(row in arb_binary_symmetric_row()) {
                let spec = Circulant::from_row(row).unwrap();
                let twice = spec.complement_row().unwrap().complement_row().unwrap();
                prop_assert_eq!(spec, twice);
            }

            #[test]
            fn zero_exponents_match_numeric_spectrum(
                row in prop::collection::vec(0i64..=1, 1..=40)
            ) {
                let spec = Circulant::from_row(row).unwrap();
                let report = spec.singularity();
                let spectrum = spec.spectrum_numeric();
                for (k, v) in spectrum.iter().enumerate() {
                    prop_assert_eq!(
                        report.zero_exponents.contains(&k),
                        v.norm() < 1e-8,
                        "k={} |v|={}", k, v.norm()
                    );
                }
            }
        }
    }

    #[test]
    fn two_value_agrees_with_exact_determinant() {
        for n in 1..=20 {
            for s in 1..=n {
                for (a, b) in [(0i64, 1i64), (1, 0)] {
                    let mut row = vec![b; n];
                    for e in row.iter_mut().take(s) {
                        *e = a;
                    }
                    let expected = Circulant::from_row(row).unwrap().exact_determinant();
                    let got = two_value_determinant(n, a, s, b).unwrap();
                    assert_eq!(got, expected.determinant, "n={n} s={s} a={a} b={b}");
                }
            }
        }
    }
}
