//! Cyclotomic polynomials, divisor enumeration, and the Euler totient.
//!
//! `Phi_d` is generated exactly over the integers and memoized per process:
//! the singularity sweeps re-query the same small divisors constantly. The
//! prime-power closed form `Phi_{p^k}(x) = 1 + x^{p^{k-1}} + ... +
//! x^{(p-1)p^{k-1}}` is used as a fast path; everything else falls back to
//! iterated exact division of `x^n - 1` by the `Phi_d` of proper divisors.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

/// All divisors of `n`, ascending, including 1 and `n`.
///
/// Panics if `n == 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1, "divisors: n must be positive");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Euler totient: the count of `k` in `[1, n]` with `gcd(k, n) = 1`.
///
/// Panics if `n == 0`.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1, "euler_phi: n must be positive");
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            phi -= phi / p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

/// Decompose `q` as `p^alpha` with `p` prime and `alpha >= 1`, if possible.
pub fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let mut m = q;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut alpha = 0;
            while m.is_multiple_of(p) {
                m /= p;
                alpha += 1;
            }
            return if m == 1 { Some((p, alpha)) } else { None };
        }
        p += 1;
    }
    Some((m, 1))
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, exact and memoized. Monic with integer
/// coefficients and degree `euler_phi(d)`.
///
/// Panics if `d == 0`.
pub fn cyclotomic(d: usize) -> Arc<IntPoly> {
    assert!(d >= 1, "cyclotomic: d must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return p.clone();
    }
    // Computed outside the lock: the recursive fallback re-enters this
    // function for proper divisors.
    let computed = Arc::new(compute_cyclotomic(d));
    cache().lock().unwrap().entry(d).or_insert(computed).clone()
}

fn compute_cyclotomic(d: usize) -> IntPoly {
    if d == 1 {
        return IntPoly::from_i64(&[-1, 1]);
    }
    if let Some((p, _)) = prime_power(d) {
        // 1 + x^{p^{k-1}} + x^{2 p^{k-1}} + ... + x^{(p-1) p^{k-1}}
        let step = d / p; // p^{k-1}
        let mut coeffs = vec![BigInt::zero(); (p - 1) * step + 1];
        for t in 0..p {
            coeffs[t * step] = BigInt::one();
        }
        return IntPoly::from_coeffs(coeffs);
    }
    let mut quotient = IntPoly::x_pow_minus_one(d);
    for e in divisors(d) {
        if e == d {
            continue;
        }
        let phi_e = cyclotomic(e);
        let (q, r) = quotient.divrem_monic(&phi_e).expect("Phi_e is monic");
        assert!(r.is_zero(), "x^d - 1 must be divisible by Phi_e for e | d");
        quotient = q;
    }
    quotient
}

/// True iff `Phi_d` divides `p` exactly.
pub fn phi_divides(p: &IntPoly, d: usize) -> bool {
    assert!(d >= 1, "phi_divides: d must be positive");
    if p.is_zero() {
        return true;
    }
    let phi = cyclotomic(d);
    if p.degree() < phi.degree() {
        return false;
    }
    p.divisible_by_monic(&phi).expect("Phi_d is monic")
}

/// Which branch of the Kurshan-Odlyzko four-way classification the pair
/// `(m, n)` falls in: `Phi_m(zeta_n)` is a distinguished non-unit part
/// times a unit of `Z[zeta_n]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdlyzkoCase {
    /// `m/n = p^alpha`: `Phi_m(zeta_n) = p·u`.
    PrimePowerUp,
    /// `n/m = p^alpha` with `p` not dividing `m`:
    /// `Phi_m(zeta_n) = (1 - zeta_{p^alpha})·u`.
    PrimePowerDownCoprime,
    /// `n/m = p^alpha` with `p` dividing `m`:
    /// `Phi_m(zeta_n) = (1 - zeta_{p^{alpha+1}})^{p-1}·u`.
    PrimePowerDownDividing,
    /// Otherwise `Phi_m(zeta_n)` is itself a unit.
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdlyzkoClass {
    pub case: OdlyzkoCase,
    /// Predicted modulus of the full conjugate product
    /// `prod_{gcd(k,n)=1} Phi_m(zeta_n^k)`.
    pub predicted_modulus: f64,
}

/// Classify `Phi_m(zeta_n)` for `m != n` per the four-way unit lemma, and
/// predict the modulus of the product of `Phi_m` over all primitive n-th
/// roots of unity. The product is where the classification is numerically
/// observable: an algebraic unit `u` need not have complex modulus 1, but
/// its full conjugate product always has modulus 1 (its field norm is
/// ±1). The non-unit parts contribute `p^phi(n)` in the first case,
/// `p^(phi(n)/phi(p^alpha))` in the second, and
/// `p^((p-1)·phi(n)/phi(p^{alpha+1}))` in the third, because `1 - zeta_q`
/// ranges over the primitive q-th roots with norm product
/// `Phi_q(1) = p`. Used by the numeric property checks only.
///
/// Panics if `m == n` or either argument is zero.
pub fn odlyzko_modulus_class(m: usize, n: usize) -> OdlyzkoClass {
    assert!(
        m >= 1 && n >= 1,
        "odlyzko_modulus_class: m, n must be positive"
    );
    assert!(m != n, "odlyzko_modulus_class: m = n is excluded");
    if m.is_multiple_of(n) {
        if let Some((p, _)) = prime_power(m / n) {
            return OdlyzkoClass {
                case: OdlyzkoCase::PrimePowerUp,
                predicted_modulus: (p as f64).powi(euler_phi(n) as i32),
            };
        }
    }
    if n.is_multiple_of(m) {
        if let Some((p, alpha)) = prime_power(n / m) {
            return if !m.is_multiple_of(p) {
                OdlyzkoClass {
                    case: OdlyzkoCase::PrimePowerDownCoprime,
                    predicted_modulus: (p as f64)
                        .powi((euler_phi(n) / euler_phi(p.pow(alpha))) as i32),
                }
            } else {
                OdlyzkoClass {
                    case: OdlyzkoCase::PrimePowerDownDividing,
                    predicted_modulus: (p as f64)
                        .powi(((p - 1) * euler_phi(n) / euler_phi(p.pow(alpha + 1))) as i32),
                }
            };
        }
    }
    OdlyzkoClass {
        case: OdlyzkoCase::Unit,
        predicted_modulus: 1.0,
    }
}

/// Numeric modulus of `prod_{gcd(k,n)=1} Phi_m(zeta_n^k)`, the observable
/// side of [`odlyzko_modulus_class`].
pub fn odlyzko_observed_modulus(m: usize, n: usize) -> f64 {
    let phi_m = cyclotomic(m);
    (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| phi_m.eval_unit_circle(n, k % n).norm())
        .product()
}
