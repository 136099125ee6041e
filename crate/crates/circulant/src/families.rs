//! Named circulant graph/digraph families and their closed-form
//! singularity predicates.
//!
//! Each family couples a first-row constructor ([`GraphFamily::build`]) with
//! the exact (or, for `rst`, sufficient-only) singularity criterion
//! ([`GraphFamily::predict`]). The verification sweeps in [`crate::oracle`]
//! compare every predicate against a brute-force determinant.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::matrix::Circulant;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("distance-power requires n >= 3 and 1 <= i <= floor(n/2), got n={n}, i={i}")]
    InvalidDistancePower { n: usize, i: usize },
    #[error("power-cycle requires n >= 3 and 1 <= r < floor(n/2), got n={n}, r={r}")]
    InvalidPowerCycle { n: usize, r: usize },
    #[error("c2nr requires n >= 2 and 1 <= r < n, got n={n}, r={r}")]
    InvalidC2nr { n: usize, r: usize },
    #[error("k-element requires 1 <= k <= n, got n={n}, k={k}")]
    InvalidKElement { n: usize, k: usize },
    #[error("rst requires r + s >= 1 and r + s + t <= n, got n={n}, r={r}, s={s}, t={t}")]
    InvalidRst {
        n: usize,
        r: usize,
        s: usize,
        t: usize,
    },
    #[error(
        "ijkl requires j >= 1, j > l and k*j + i + l < n, got n={n}, i={i}, j={j}, k={k}, l={l}"
    )]
    InvalidIjkl {
        n: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
    #[error("invalid family text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Tagged parameter record naming one graph/digraph family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// `C_n^i`: the graph whose adjacency matrix is the i-th distance matrix
    /// of the cycle on n vertices.
    DistancePower { n: usize, i: usize },
    /// Complement of `C_n^i`.
    DistancePowerComplement { n: usize, i: usize },
    /// `C_n^(r)`: the r-th power of the cycle.
    PowerCycle { n: usize, r: usize },
    /// Complement of `C_n^(r)`.
    PowerCycleComplement { n: usize, r: usize },
    /// `C(2n, r)`: the r-th power of `C_2n` plus the antipodal perfect
    /// matching. The order is `2n`.
    C2nr { n: usize, r: usize },
    /// Complement of `C(2n, r)`.
    C2nrComplement { n: usize, r: usize },
    /// k-element circulant digraph: k leading ones.
    KElement { n: usize, k: usize },
    /// (r,s,t)-element circulant digraph: r ones, t zeros, s ones, zeros.
    RstDigraph {
        n: usize,
        r: usize,
        s: usize,
        t: usize,
    },
    /// `C_n^{i,j,k,l}`: representer `sum_{t=0..k} sum_{s=i..i+l} x^(s+tj)`.
    Ijkl {
        n: usize,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
}

/// Family tag without parameters; drives enumeration and the CLI grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    DistancePower,
    DistancePowerComplement,
    PowerCycle,
    PowerCycleComplement,
    C2nr,
    C2nrComplement,
    KElement,
    Rst,
    Ijkl,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::DistancePower,
        FamilyKind::DistancePowerComplement,
        FamilyKind::PowerCycle,
        FamilyKind::PowerCycleComplement,
        FamilyKind::C2nr,
        FamilyKind::C2nrComplement,
        FamilyKind::KElement,
        FamilyKind::Rst,
        FamilyKind::Ijkl,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::DistancePower => "distance-power",
            FamilyKind::DistancePowerComplement => "distance-power-complement",
            FamilyKind::PowerCycle => "power-cycle",
            FamilyKind::PowerCycleComplement => "power-cycle-complement",
            FamilyKind::C2nr => "c2nr",
            FamilyKind::C2nrComplement => "c2nr-complement",
            FamilyKind::KElement => "k-element",
            FamilyKind::Rst => "rst",
            FamilyKind::Ijkl => "ijkl",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown family kind {s:?}; expected one of {}",
                    FamilyKind::ALL.map(|k| k.name()).join(", ")
                )
            })
    }
}

/// Whether a predicate is a two-sided theorem or a one-sided sufficient
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredictionKind {
    Exact,
    SufficientOnly,
}

/// Closed-form singularity prediction. For `kind = Exact` the boolean is a
/// two-sided verdict; for `SufficientOnly`, `singular = false` only means no
/// condition fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub kind: PredictionKind,
    pub singular: bool,
    /// Identifier of the governing theorem.
    pub rule: &'static str,
}

impl GraphFamily {
    pub fn kind(&self) -> FamilyKind {
        match self {
            GraphFamily::DistancePower { .. } => FamilyKind::DistancePower,
            GraphFamily::DistancePowerComplement { .. } => FamilyKind::DistancePowerComplement,
            GraphFamily::PowerCycle { .. } => FamilyKind::PowerCycle,
            GraphFamily::PowerCycleComplement { .. } => FamilyKind::PowerCycleComplement,
            GraphFamily::C2nr { .. } => FamilyKind::C2nr,
            GraphFamily::C2nrComplement { .. } => FamilyKind::C2nrComplement,
            GraphFamily::KElement { .. } => FamilyKind::KElement,
            GraphFamily::RstDigraph { .. } => FamilyKind::Rst,
            GraphFamily::Ijkl { .. } => FamilyKind::Ijkl,
        }
    }

    /// Number of vertices of the built graph (`2n` for the `C(2n, r)`
    /// families).
    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::DistancePower { n, .. }
            | GraphFamily::DistancePowerComplement { n, .. }
            | GraphFamily::PowerCycle { n, .. }
            | GraphFamily::PowerCycleComplement { n, .. }
            | GraphFamily::KElement { n, .. }
            | GraphFamily::RstDigraph { n, .. }
            | GraphFamily::Ijkl { n, .. } => n,
            GraphFamily::C2nr { n, .. } | GraphFamily::C2nrComplement { n, .. } => 2 * n,
        }
    }

    /// Check the family's parameter constraints.
    pub fn validate(&self) -> Result<(), FamilyError> {
        match *self {
            GraphFamily::DistancePower { n, i } | GraphFamily::DistancePowerComplement { n, i } => {
                if n < 3 || i < 1 || i > n / 2 {
                    return Err(FamilyError::InvalidDistancePower { n, i });
                }
            }
            GraphFamily::PowerCycle { n, r } | GraphFamily::PowerCycleComplement { n, r } => {
                if n < 3 || r < 1 || r >= n / 2 {
                    return Err(FamilyError::InvalidPowerCycle { n, r });
                }
            }
            GraphFamily::C2nr { n, r } | GraphFamily::C2nrComplement { n, r } => {
                if n < 2 || r < 1 || r >= n {
                    return Err(FamilyError::InvalidC2nr { n, r });
                }
            }
            GraphFamily::KElement { n, k } => {
                if k < 1 || k > n {
                    return Err(FamilyError::InvalidKElement { n, k });
                }
            }
            GraphFamily::RstDigraph { n, r, s, t } => {
                if r + s < 1 || r + s + t > n {
                    return Err(FamilyError::InvalidRst { n, r, s, t });
                }
            }
            GraphFamily::Ijkl { n, i, j, k, l } => {
                if j < 1 || j <= l || k * j + i + l >= n {
                    return Err(FamilyError::InvalidIjkl { n, i, j, k, l });
                }
            }
        }
        Ok(())
    }

    /// The exact 0/1 first row of the family.
    pub fn build(&self) -> Result<Circulant, FamilyError> {
        self.validate()?;
        let mut row = vec![0i64; self.order()];
        match *self {
            GraphFamily::DistancePower { n, i } => {
                row[i] = 1;
                row[n - i] = 1;
            }
            GraphFamily::DistancePowerComplement { n, i } => {
                for e in row.iter_mut().skip(1) {
                    *e = 1;
                }
                row[i] = 0;
                row[n - i] = 0;
            }
            GraphFamily::PowerCycle { n, r } => {
                for d in 1..=r {
                    row[d] = 1;
                    row[n - d] = 1;
                }
            }
            GraphFamily::PowerCycleComplement { n, r } => {
                for e in row.iter_mut().take(n - r).skip(r + 1) {
                    *e = 1;
                }
            }
            GraphFamily::C2nr { n, r } => {
                for d in 1..=r {
                    row[d] = 1;
                    row[2 * n - d] = 1;
                }
                row[n] = 1;
            }
            GraphFamily::C2nrComplement { n, r } => {
                for e in row.iter_mut().take(n).skip(r + 1) {
                    *e = 1;
                }
                for e in row.iter_mut().take(2 * n - r).skip(n + 1) {
                    *e = 1;
                }
            }
            GraphFamily::KElement { k, .. } => {
                for e in row.iter_mut().take(k) {
                    *e = 1;
                }
            }
            GraphFamily::RstDigraph { r, s, t, .. } => {
                for e in row.iter_mut().take(r) {
                    *e = 1;
                }
                for e in row.iter_mut().take(r + t + s).skip(r + t) {
                    *e = 1;
                }
            }
            GraphFamily::Ijkl { i, j, k, l, .. } => {
                for t in 0..=k {
                    for s in i..=i + l {
                        row[s + t * j] = 1;
                    }
                }
            }
        }
        Ok(Circulant::from_row(row).expect("family orders are >= 1"))
    }

    /// The family's closed-form singularity prediction.
    pub fn predict(&self) -> Result<Prediction, FamilyError> {
        self.validate()?;
        let exact = |singular: bool, rule: &'static str| Prediction {
            kind: PredictionKind::Exact,
            singular,
            rule,
        };
        Ok(match *self {
            GraphFamily::DistancePower { n, i } => exact(
                n % 4 == 0 && (n / 4) % i.gcd(&(n / 2)) == 0,
                "Distance-Power-Lemma",
            ),
            GraphFamily::DistancePowerComplement { n, i } => {
                let singular = if i == n / 2 {
                    n % 2 == 0 || n % 6 == 3
                } else {
                    n % 3 == 0 && (n / 3) % i.gcd(&n) == 0
                };
                exact(singular, "Distance-Power-Complement-Lemma")
            }
            GraphFamily::PowerCycle { n, r } => exact(
                n.gcd(&r) > 1 || (n % 2 == 0 && (n / 2) % (r + 1).gcd(&n) == 0),
                "Ruivivar-Theorem",
            ),
            GraphFamily::PowerCycleComplement { n, r } => {
                exact(n.gcd(&(2 * r + 1)) > 1, "Power-Cycle-Complement-Corollary")
            }
            GraphFamily::C2nr { n, r } => exact(n.gcd(&(2 * r + 1)) >= 3, "C2nr-Theorem"),
            GraphFamily::C2nrComplement { n, r } => {
                let non_singular = n % 2 == r % 2
                    && n.gcd(&(r + 1)) == 1
                    && n.trailing_zeros() < (n - r).trailing_zeros();
                exact(!non_singular, "C2nr-Complement-Lemma")
            }
            GraphFamily::KElement { n, k } => exact(n.gcd(&k) > 1, "K-Element-Lemma"),
            GraphFamily::RstDigraph { n, r, s, t } => {
                if s == 0 {
                    exact(n.gcd(&r) > 1, "K-Element-Lemma")
                } else if r == 0 {
                    exact(n.gcd(&s) > 1, "K-Element-Lemma")
                } else {
                    Prediction {
                        kind: PredictionKind::SufficientOnly,
                        singular: rst_condition_fires(n, r, s, t),
                        rule: "Rst-Sufficiency-Lemma",
                    }
                }
            }
            GraphFamily::Ijkl { n, j, k, l, .. } => exact(
                (l + 1).gcd(&n) >= 2 || (k + 1).gcd(&(n / n.gcd(&j))) >= 2,
                "Ijkl-Theorem",
            ),
        })
    }
}

/// The sufficient conditions for an (r,s,t)-digraph with `r, s >= 1` to be
/// singular. The divisibility moduli `d` are restricted to divisors of `n`:
/// the underlying identity evaluates the representer at `zeta_n^(n/d)`,
/// which is an n-th root of unity only when `d | n` (without that
/// restriction n=7, r=1, s=1, t=2 with d=2 would fire on a non-singular
/// digraph).
fn rst_condition_fires(n: usize, r: usize, s: usize, t: usize) -> bool {
    if n.gcd(&s).gcd(&r) > 1 {
        return true;
    }
    if n.gcd(&s) != 1 {
        return false;
    }
    if s.is_multiple_of(r) {
        let ell = s / r;
        for d in crate::cyclotomic::divisors(n) {
            if d < 2 {
                continue;
            }
            // 2(a): d | t and ell = s/r with ell = -1 (mod d).
            if t.is_multiple_of(d) && ell % d == d - 1 {
                return true;
            }
            // 2(b): n even, d even, r + t an odd multiple of d/2,
            // and ell = 1 (mod d).
            if n.is_multiple_of(2)
                && d.is_multiple_of(2)
                && (r + t).is_multiple_of(d / 2)
                && !((r + t) / (d / 2)).is_multiple_of(2)
                && ell % d == 1
            {
                return true;
            }
        }
    }
    false
}

/// Every valid parameter combination of `kind` with order at most `n_max`,
/// in lexicographic parameter order. For `ijkl` the stride `j` is capped at
/// the order: larger strides only repeat rows already enumerated (the
/// constraint `k*j + i + l < n` leaves `j` unbounded when `k = 0`).
pub fn enumerate_valid(kind: FamilyKind, n_max: usize) -> Vec<GraphFamily> {
    assert!(n_max >= 3, "enumerate_valid: n_max must be >= 3");
    let mut out = Vec::new();
    match kind {
        FamilyKind::DistancePower | FamilyKind::DistancePowerComplement => {
            for n in 3..=n_max {
                for i in 1..=n / 2 {
                    out.push(if kind == FamilyKind::DistancePower {
                        GraphFamily::DistancePower { n, i }
                    } else {
                        GraphFamily::DistancePowerComplement { n, i }
                    });
                }
            }
        }
        FamilyKind::PowerCycle | FamilyKind::PowerCycleComplement => {
            for n in 3..=n_max {
                for r in 1..n / 2 {
                    out.push(if kind == FamilyKind::PowerCycle {
                        GraphFamily::PowerCycle { n, r }
                    } else {
                        GraphFamily::PowerCycleComplement { n, r }
                    });
                }
            }
        }
        FamilyKind::C2nr | FamilyKind::C2nrComplement => {
            for n in 2..=n_max / 2 {
                for r in 1..n {
                    out.push(if kind == FamilyKind::C2nr {
                        GraphFamily::C2nr { n, r }
                    } else {
                        GraphFamily::C2nrComplement { n, r }
                    });
                }
            }
        }
        FamilyKind::KElement => {
            for n in 1..=n_max {
                for k in 1..=n {
                    out.push(GraphFamily::KElement { n, k });
                }
            }
        }
        FamilyKind::Rst => {
            for n in 1..=n_max {
                for r in 0..=n {
                    for s in 0..=n - r {
                        for t in 0..=n - r - s {
                            if r + s >= 1 {
                                out.push(GraphFamily::RstDigraph { n, r, s, t });
                            }
                        }
                    }
                }
            }
        }
        FamilyKind::Ijkl => {
            for n in 1..=n_max {
                for i in 0..n {
                    for j in 1..=n {
                        for k in 0..n {
                            if k * j + i >= n {
                                break;
                            }
                            for l in 0..j.min(n - k * j - i) {
                                out.push(GraphFamily::Ijkl { n, i, j, k, l });
                            }
                        }
                    }
                }
            }
        }
    }
    debug_assert!(out.iter().all(|f| f.validate().is_ok()));
    out
}

/// Text form `<kind>:<k=v>(,<k=v>)*`, e.g. `power-cycle:n=8,r=3`.
impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::DistancePower { n, i } | GraphFamily::DistancePowerComplement { n, i } => {
                write!(f, "{}:n={n},i={i}", self.kind())
            }
            GraphFamily::PowerCycle { n, r }
            | GraphFamily::PowerCycleComplement { n, r }
            | GraphFamily::C2nr { n, r }
            | GraphFamily::C2nrComplement { n, r } => write!(f, "{}:n={n},r={r}", self.kind()),
            GraphFamily::KElement { n, k } => write!(f, "{}:n={n},k={k}", self.kind()),
            GraphFamily::RstDigraph { n, r, s, t } => {
                write!(f, "{}:n={n},r={r},s={s},t={t}", self.kind())
            }
            GraphFamily::Ijkl { n, i, j, k, l } => {
                write!(f, "{}:n={n},i={i},j={j},k={k},l={l}", self.kind())
            }
        }
    }
}

impl FromStr for GraphFamily {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let err = |reason: String| FamilyError::Parse {
            text: text.to_string(),
            reason,
        };
        let (kind_text, params_text) = text
            .split_once(':')
            .ok_or_else(|| err("expected `<kind>:<k=v>(,<k=v>)*`".to_string()))?;
        let kind = kind_text.parse::<FamilyKind>().map_err(err)?;
        let mut params: BTreeMap<&str, usize> = BTreeMap::new();
        for pair in params_text.split(',') {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| err(format!("parameter {pair:?} is not of the form k=v")))?;
            let value = value
                .trim()
                .parse::<usize>()
                .map_err(|_| err(format!("parameter {key:?} is not a non-negative integer")))?;
            if params.insert(key.trim(), value).is_some() {
                return Err(err(format!("duplicate parameter {key:?}")));
            }
        }
        let expected: &[&str] = match kind {
            FamilyKind::DistancePower | FamilyKind::DistancePowerComplement => &["n", "i"],
            FamilyKind::PowerCycle
            | FamilyKind::PowerCycleComplement
            | FamilyKind::C2nr
            | FamilyKind::C2nrComplement => &["n", "r"],
            FamilyKind::KElement => &["n", "k"],
            FamilyKind::Rst => &["n", "r", "s", "t"],
            FamilyKind::Ijkl => &["n", "i", "j", "k", "l"],
        };
        for key in expected {
            if !params.contains_key(key) {
                return Err(err(format!("missing parameter {key:?}")));
            }
        }
        for key in params.keys() {
            if !expected.contains(key) {
                return Err(err(format!("unexpected parameter {key:?}")));
            }
        }
        let get = |key: &str| params[key];
        let family = match kind {
            FamilyKind::DistancePower => GraphFamily::DistancePower {
                n: get("n"),
                i: get("i"),
            },
            FamilyKind::DistancePowerComplement => GraphFamily::DistancePowerComplement {
                n: get("n"),
                i: get("i"),
            },
            FamilyKind::PowerCycle => GraphFamily::PowerCycle {
                n: get("n"),
                r: get("r"),
            },
            FamilyKind::PowerCycleComplement => GraphFamily::PowerCycleComplement {
                n: get("n"),
                r: get("r"),
            },
            FamilyKind::C2nr => GraphFamily::C2nr {
                n: get("n"),
                r: get("r"),
            },
            FamilyKind::C2nrComplement => GraphFamily::C2nrComplement {
                n: get("n"),
                r: get("r"),
            },
            FamilyKind::KElement => GraphFamily::KElement {
                n: get("n"),
                k: get("k"),
            },
            FamilyKind::Rst => GraphFamily::RstDigraph {
                n: get("n"),
                r: get("r"),
                s: get("s"),
                t: get("t"),
            },
            FamilyKind::Ijkl => GraphFamily::Ijkl {
                n: get("n"),
                i: get("i"),
                j: get("j"),
                k: get("k"),
                l: get("l"),
            },
        };
        family.validate()?;
        Ok(family)
    }
}
