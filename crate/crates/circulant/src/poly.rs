//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty sequence. Everything here is exact: the
//! only floating-point operation is [`IntPoly::eval_unit_circle`], which is
//! used for numeric screening, never for verdicts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("divisor must be monic (leading coefficient 1), got leading coefficient {0}")]
    NonMonicDivisor(BigInt),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("gcd(0, 0) is undefined")]
    GcdBothZero,
    #[error("resultant requires a monic nonzero first argument")]
    NonMonicResultant,
}

/// Parse failure for the text form `"c0,c1,...,ck"`.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid polynomial text {text:?}: {reason}")]
pub struct ParsePolyError {
    pub text: String,
    pub reason: String,
}

/// A dense polynomial with `BigInt` coefficients, index `i` holding the
/// coefficient of `x^i`. Kept canonical: a nonempty coefficient vector never
/// ends in zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly {
            coeffs: vec![BigInt::one()],
        }
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// The polynomial `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n >= 1, "x^n - 1 needs n >= 1");
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Reduce modulo `x^n - 1` by folding coefficient `i` onto `i mod n`.
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        assert!(n >= 1, "cyclic reduction needs n >= 1");
        if self.coeffs.len() <= n {
            return self.clone();
        }
        let mut folded = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            folded[i % n] += c;
        }
        Self::from_coeffs(folded)
    }

    /// Greatest common divisor of all coefficients (positive; 0 for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient; zero stays zero.
    pub fn primitive_normalized(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact Euclidean division by a monic divisor. Returns `(q, r)` with
    /// `self = den·q + r` and `deg r < deg den`; all coefficients stay
    /// integral because `den` is monic.
    pub fn divrem_monic(&self, den: &IntPoly) -> Result<(IntPoly, IntPoly), PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if !den.is_monic() {
            return Err(PolyError::NonMonicDivisor(
                den.leading_coeff().cloned().unwrap(),
            ));
        }
        let d = den.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            // Skip zero divisor coefficients: cyclotomic divisors are sparse.
            for (j, c) in den.coeffs[..d].iter().enumerate() {
                if !c.is_zero() {
                    rem[i - d + j] -= &q * c;
                }
            }
            quot[i - d] = q;
        }
        rem.truncate(d);
        Ok((IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem)))
    }

    /// True iff `den` is monic and divides `self` exactly.
    pub fn divisible_by_monic(&self, den: &IntPoly) -> Result<bool, PolyError> {
        Ok(self.divrem_monic(den)?.1.is_zero())
    }

    /// Pseudo-remainder: the remainder of `lc(den)^(deg self - deg den + 1) · self`
    /// divided by `den`, which is integral for any nonzero `den`.
    fn pseudo_rem(&self, den: &IntPoly) -> IntPoly {
        let db = den.coeffs.len() - 1;
        let lc = den.leading_coeff().unwrap();
        if self.coeffs.len() <= db {
            // Callers only invoke prem with deg self >= deg den; nothing to
            // reduce otherwise.
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        let mut scale_left = rem.len() - db; // deg a - deg b + 1
        while rem.len() > db {
            let top = rem.last().unwrap().clone();
            rem.pop();
            for c in &mut rem {
                *c *= lc;
            }
            if !top.is_zero() {
                let off = rem.len() - db;
                for (j, c) in den.coeffs[..db].iter().enumerate() {
                    if !c.is_zero() {
                        rem[off + j] -= &top * c;
                    }
                }
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            scale_left -= 1;
            if rem.len() <= db {
                break;
            }
        }
        let mut out = IntPoly::from_coeffs(rem);
        if scale_left > 0 && !out.is_zero() {
            let f = lc.pow(scale_left as u32);
            out = out.scale(&f);
        }
        out
    }

    fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division in PRS");
                    q
                })
                .collect(),
        }
    }

    /// Primitive gcd via the primitive pseudo-remainder sequence. The result
    /// is primitive with positive leading coefficient, so equality tests are
    /// canonical.
    pub fn gcd_primitive(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::GcdBothZero);
        }
        if a.is_zero() {
            return Ok(b.primitive_normalized());
        }
        if b.is_zero() {
            return Ok(a.primitive_normalized());
        }
        let (mut f, mut g) = if a.degree() >= b.degree() {
            (a.primitive_normalized(), b.primitive_normalized())
        } else {
            (b.primitive_normalized(), a.primitive_normalized())
        };
        while !g.is_zero() {
            let r = f.pseudo_rem(&g).primitive_normalized();
            f = g;
            g = r;
        }
        Ok(f.primitive_normalized())
    }

    /// True iff `den` divides `self` in `Q[x]` (`den` nonzero, not
    /// necessarily monic).
    pub fn divisible_rational(&self, den: &IntPoly) -> Result<bool, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(true);
        }
        if self.degree() < den.degree() {
            return Ok(false);
        }
        Ok(self.pseudo_rem(den).is_zero())
    }

    /// Resultant `Res(a, b)` for monic nonzero `a`: the product of `b` over
    /// the roots of `a`, an exact integer. Computed by the subresultant
    /// polynomial-remainder sequence.
    pub fn resultant(a: &IntPoly, b: &IntPoly) -> Result<BigInt, PolyError> {
        if !a.is_monic() {
            return Err(PolyError::NonMonicResultant);
        }
        let da = a.coeffs.len() - 1;
        if da == 0 {
            // a = 1: empty product over no roots.
            return Ok(BigInt::one());
        }
        if b.is_zero() {
            return Ok(BigInt::zero());
        }
        if b.coeffs.len() == 1 {
            return Ok(b.coeffs[0].pow(da as u32));
        }
        Ok(subresultant(a, b))
    }

    /// Numeric evaluation at the root of unity `e^(2πik/n)`. Screening only;
    /// verdicts always come from the exact paths.
    pub fn eval_unit_circle(&self, n: usize, k: usize) -> Complex64 {
        assert!(n >= 1, "eval_unit_circle needs n >= 1");
        assert!(k < n, "eval_unit_circle needs k < n");
        let step = std::f64::consts::TAU / n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        let mut e = 0usize; // k·i mod n, accumulated without overflow
        for c in &self.coeffs {
            if !c.is_zero() {
                acc += c.to_f64().unwrap() * Complex64::from_polar(1.0, e as f64 * step);
            }
            e += k;
            if e >= n {
                e -= n;
            }
        }
        acc
    }
}

/// Subresultant PRS resultant for `a` monic of degree >= 1 and `b` of
/// degree >= 1.
fn subresultant(a: &IntPoly, b: &IntPoly) -> BigInt {
    let mut sign = 1i32;
    let (mut f, mut g) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        if (a.coeffs.len() - 1) % 2 == 1 && (b.coeffs.len() - 1) % 2 == 1 {
            sign = -1;
        }
        (b.clone(), a.clone())
    };
    // Pull out contents: Res(cf·F, cg·G) = cf^(deg G) · cg^(deg F) · Res(F, G).
    let cf = f.content();
    let cg = g.content();
    let scale = cf.pow((g.coeffs.len() - 1) as u32) * cg.pow((f.coeffs.len() - 1) as u32);
    f = f.div_scalar_exact(&cf);
    g = g.div_scalar_exact(&cg);

    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let df = f.coeffs.len() - 1;
        let dg = g.coeffs.len() - 1;
        let delta = df - dg;
        if df % 2 == 1 && dg % 2 == 1 {
            sign = -sign;
        }
        let r = f.pseudo_rem(&g);
        f = g;
        let denom = &gg * h.pow(delta as u32);
        g = if r.is_zero() {
            IntPoly::zero()
        } else {
            r.div_scalar_exact(&denom)
        };
        gg = f.leading_coeff().unwrap().clone();
        h = match delta {
            0 => h,
            1 => gg.clone(),
            _ => {
                let (q, rem) = gg.pow(delta as u32).div_rem(&h.pow((delta - 1) as u32));
                assert!(rem.is_zero(), "inexact division in subresultant PRS");
                q
            }
        };
        if g.is_zero() {
            return BigInt::zero();
        }
        if g.coeffs.len() == 1 {
            let df2 = f.coeffs.len() - 1;
            let num = g.coeffs[0].pow(df2 as u32);
            let res = if df2 >= 1 {
                let (q, rem) = num.div_rem(&h.pow((df2 - 1) as u32));
                assert!(rem.is_zero(), "inexact division in subresultant PRS");
                q
            } else {
                num
            };
            return BigInt::from(sign) * scale * res;
        }
    }
}

impl Default for IntPoly {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly { coeffs }
    }
}

/// Text form: comma-separated ascending coefficients, e.g. `0,1,0,1` for
/// `x + x^3`. The zero polynomial prints as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IntPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let c = part.trim().parse::<BigInt>().map_err(|_| ParsePolyError {
                text: s.to_string(),
                reason: format!("{part:?} is not an integer"),
            })?;
            coeffs.push(c);
        }
        Ok(IntPoly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 1]).degree(), Some(1));
    }

    #[test]
    fn mul_examples() {
        // (1 + x)(1 - x + x^2) = 1 + x^3
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1, 1]), p(&[1, 0, 0, 1]));
        // (x - 1) · 0 = 0
        assert_eq!(&p(&[-1, 1]) * &IntPoly::zero(), IntPoly::zero());
        // (1 + x + x^2)(x - 1) = x^3 - 1
        assert_eq!(&p(&[1, 1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 0, 1]));
        assert_eq!(
            (&p(&[2, 3]) * &p(&[4, 5])).degree(),
            Some(2),
            "degree adds for nonzero inputs"
        );
    }

    #[test]
    fn divrem_monic_examples() {
        // (x^4 - 1) / (x^2 + 1) = (x^2 - 1, 0)
        let (q, r) = p(&[-1, 0, 0, 0, 1]).divrem_monic(&p(&[1, 0, 1])).unwrap();
        assert_eq!(q, p(&[-1, 0, 1]));
        assert!(r.is_zero());
        // (1 + x^2) / (x^2 + 1) = (1, 0)
        let (q, r) = p(&[1, 0, 1]).divrem_monic(&p(&[1, 0, 1])).unwrap();
        assert_eq!(q, IntPoly::one());
        assert!(r.is_zero());
        // (x^3 + 1) / (x^2 + x + 1) = (x - 1, 2), checked by re-multiplication
        let num = p(&[1, 0, 0, 1]);
        let den = p(&[1, 1, 1]);
        let (q, r) = num.divrem_monic(&den).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
        assert_eq!(&(&den * &q) + &r, num);
    }

    #[test]
    fn divrem_rejects_bad_divisors() {
        assert_eq!(
            p(&[1]).divrem_monic(&IntPoly::zero()),
            Err(PolyError::ZeroDivisor)
        );
        assert_eq!(
            p(&[1]).divrem_monic(&p(&[1, 2])),
            Err(PolyError::NonMonicDivisor(BigInt::from(2)))
        );
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^4 - 1, x^2 - 1) = x^2 - 1
        assert_eq!(
            IntPoly::gcd_primitive(&p(&[-1, 0, 0, 0, 1]), &p(&[-1, 0, 1])).unwrap(),
            p(&[-1, 0, 1])
        );
        // gcd(x + x^3, x^4 - 1) = x^2 + 1
        assert_eq!(
            IntPoly::gcd_primitive(&p(&[0, 1, 0, 1]), &p(&[-1, 0, 0, 0, 1])).unwrap(),
            p(&[1, 0, 1])
        );
        // content is stripped: gcd(2 + 2x, 3 + 3x) = 1 + x
        assert_eq!(
            IntPoly::gcd_primitive(&p(&[2, 2]), &p(&[3, 3])).unwrap(),
            p(&[1, 1])
        );
        assert_eq!(
            IntPoly::gcd_primitive(&IntPoly::zero(), &IntPoly::zero()),
            Err(PolyError::GcdBothZero)
        );
        // one zero input: gcd is the other's normalized primitive part
        assert_eq!(
            IntPoly::gcd_primitive(&IntPoly::zero(), &p(&[-2, -2])).unwrap(),
            p(&[1, 1])
        );
    }

    #[test]
    fn resultant_examples() {
        // Res(x - 1, x + x^2) = 2
        assert_eq!(
            IntPoly::resultant(&p(&[-1, 1]), &p(&[0, 1, 1])).unwrap(),
            BigInt::from(2)
        );
        // Res(x^2 + 1, x + x^3) = 0
        assert_eq!(
            IntPoly::resultant(&p(&[1, 0, 1]), &p(&[0, 1, 0, 1])).unwrap(),
            BigInt::zero()
        );
        // Res(x^2 + x + 1, x + x^2) = 1
        assert_eq!(
            IntPoly::resultant(&p(&[1, 1, 1]), &p(&[0, 1, 1])).unwrap(),
            BigInt::one()
        );
        // constant cases
        assert_eq!(
            IntPoly::resultant(&IntPoly::one(), &p(&[7])).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            IntPoly::resultant(&p(&[1, 0, 1]), &p(&[3])).unwrap(),
            BigInt::from(9)
        );
        assert_eq!(
            IntPoly::resultant(&p(&[1, 0, 1]), &IntPoly::zero()).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            IntPoly::resultant(&p(&[1, 2]), &p(&[1])),
            Err(PolyError::NonMonicResultant)
        );
    }

    #[test]
    fn eval_unit_circle_examples() {
        // (x + x^3)(i) = 0
        let v = p(&[0, 1, 0, 1]).eval_unit_circle(4, 1);
        assert!(v.norm() < 1e-12);
        // constant 1
        let v = IntPoly::one().eval_unit_circle(7, 3);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        // (x + x^4)(1) = 2
        let v = p(&[0, 1, 0, 0, 1]).eval_unit_circle(5, 0);
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn reduce_cyclic_folds_exponents() {
        // x^5 + x^2 + 1 mod (x^3 - 1) = x^2 + x^2 ... exponent 5 -> 2
        assert_eq!(p(&[1, 0, 1, 0, 0, 1]).reduce_cyclic(3), p(&[1, 0, 2]));
        assert_eq!(p(&[1, 1]).reduce_cyclic(5), p(&[1, 1]));
    }

    #[test]
    fn text_form_round_trip() {
        let q = "0,1,0,1".parse::<IntPoly>().unwrap();
        assert_eq!(q, p(&[0, 1, 0, 1]));
        assert_eq!(q.to_string(), "0,1,0,1");
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!("-3, 4".parse::<IntPoly>().unwrap(), p(&[-3, 4]));
        assert!("1,x".parse::<IntPoly>().is_err());
        assert!("".parse::<IntPoly>().is_err());
    }

    /// Sylvester-matrix resultant by fraction-free elimination; the
    /// independent route the PRS implementation is checked against.
    fn sylvester_resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let m = a.degree().expect("nonzero");
        let n = match b.degree() {
            Some(n) => n,
            None => return BigInt::zero(),
        };
        if m + n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for i in 0..n {
            for (j, c) in a.coeffs().iter().enumerate() {
                mat[i][i + m - j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in b.coeffs().iter().enumerate() {
                mat[n + i][i + n - j] = c.clone();
            }
        }
        // Bareiss elimination on the Sylvester matrix.
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..size - 1 {
            if mat[k][k].is_zero() {
                let Some(swap) = (k + 1..size).find(|&i| !mat[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                mat.swap(k, swap);
                sign = -sign;
            }
            for i in k + 1..size {
                for j in k + 1..size {
                    let num = &mat[k][k] * &mat[i][j] - &mat[i][k] * &mat[k][j];
                    let (q, r) = num.div_rem(&prev);
                    assert!(r.is_zero());
                    mat[i][j] = q;
                }
                mat[i][k] = BigInt::zero();
            }
            prev = mat[k][k].clone();
        }
        sign * mat[size - 1][size - 1].clone()
    }

    #[test]
    fn resultant_matches_sylvester_route() {
        let cases = [
            (vec![-1i64, 1], vec![0i64, 1, 1]),
            (vec![1, 0, 1], vec![0, 1, 0, 1]),
            (vec![1, 1, 1], vec![0, 1, 1]),
            (vec![-1, 0, 0, 0, 0, 0, 1], vec![3, -2, 0, 5, 1]),
            (vec![2, 0, 0, 1], vec![-7, 1, 4]),
            (vec![1, 1], vec![5, -3, 2, 2]),
        ];
        for (a, b) in cases {
            let a = p(&a);
            let b = p(&b);
            assert_eq!(
                IntPoly::resultant(&a, &b).unwrap(),
                sylvester_resultant(&a, &b),
                "a={a} b={b}"
            );
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-9i64..=9, 0..=max_deg + 1).prop_map(|v| IntPoly::from_i64(&v))
        }

        fn arb_monic(max_deg: usize) -> impl Strategy<Value = IntPoly> {
            (prop::collection::vec(-9i64..=9, 0..=max_deg)).prop_map(|mut v| {
                v.push(1);
                IntPoly::from_i64(&v)
            })
        }

        proptest! {
            #[test]
            fn divrem_reconstructs(num in arb_poly(12), den in arb_monic(6)) {
                let (q, r) = num.divrem_monic(&den).unwrap();
                prop_assert_eq!(&(&den * &q) + &r, num);
                if let Some(dr) = r.degree() {
                    prop_assert!(dr < den.degree().unwrap());
                }
            }

            #[test]
            fn gcd_divides_both(a in arb_poly(8), b in arb_poly(8)) {
                prop_assume!(!a.is_zero() || !b.is_zero());
                let g = IntPoly::gcd_primitive(&a, &b).unwrap();
                prop_assert!(a.divisible_rational(&g).unwrap());
                prop_assert!(b.divisible_rational(&g).unwrap());
                prop_assert_eq!(g.content(), BigInt::one());
                prop_assert!(g.leading_coeff().unwrap() > &BigInt::zero());
            }

            #[test]
            fn resultant_multiplicative(a in arb_monic(5), b in arb_poly(5), c in arb_poly(5)) {
                let lhs = IntPoly::resultant(&a, &(&b * &c)).unwrap();
                let rhs = IntPoly::resultant(&a, &b).unwrap() * IntPoly::resultant(&a, &c).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn resultant_agrees_with_sylvester(a in arb_monic(6), b in arb_poly(6)) {
                prop_assume!(!b.is_zero());
                prop_assume!(a.degree().unwrap() >= 1);
                prop_assert_eq!(
                    IntPoly::resultant(&a, &b).unwrap(),
                    sylvester_resultant(&a, &b)
                );
            }

            #[test]
            fn resultant_against_roots_product(n in 1usize..=24, b in arb_poly(8)) {
                // Res(x^n - 1, b) = prod of b over all n-th roots of unity.
                let a = IntPoly::x_pow_minus_one(n);
                let exact = IntPoly::resultant(&a, &b).unwrap();
                let mut numeric = Complex64::new(1.0, 0.0);
                // Error in a product of n factors, each accurate to ~eps
                // absolute, is bounded relative to the product of the
                // factor magnitudes (clamped at 1), not the result itself.
                let mut scale = 1.0f64;
                for k in 0..n {
                    let factor = b.eval_unit_circle(n, k);
                    numeric *= factor;
                    scale *= factor.norm().max(1.0);
                }
                let exact_f = exact.to_f64().unwrap();
                prop_assert!(
                    (numeric.re - exact_f).abs() / scale < 1e-6,
                    "n={} b={} exact={} numeric={}", n, b, exact, numeric
                );
                prop_assert!(numeric.im.abs() / scale < 1e-6);
            }
        }
    }
}
