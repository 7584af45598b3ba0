//! Hasse interval arithmetic and Waterhouse's classification of the traces
//! of Frobenius that occur for elliptic curves over `F_q`.
//!
//! Every radical in the classical statements is replaced by an exact integer
//! comparison: `|t| <= 2 sqrt(q)` becomes `t^2 <= 4q`, `t = ±sqrt(q)` becomes
//! `t^2 = q`, and so on. Nothing here touches floating point.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::is_prime;

/// Largest `q` accepted by the integer routines (keeps `4q` and `t^2` far
/// from overflow and the trace range small enough to list).
pub const TRACE_ORDER_CAP: u64 = 1 << 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("{p}^{n} exceeds the supported range")]
    TooLarge { p: u64, n: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("group order must be positive, got {0}")]
    NonPositiveOrder(i64),
}

/// `q = p^n`, kept as its factorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    p: u64,
    n: u32,
}

impl PrimePower {
    pub fn new(p: u64, n: u32) -> Result<Self, TraceError> {
        if !is_prime(p) {
            return Err(TraceError::NotPrime(p));
        }
        if n == 0 {
            return Err(TraceError::ZeroDegree);
        }
        match p.checked_pow(n) {
            Some(q) if q <= TRACE_ORDER_CAP => Ok(PrimePower { p, n }),
            _ => Err(TraceError::TooLarge { p, n }),
        }
    }

    /// Factors `q` as `p^n`.
    pub fn from_order(q: u64) -> Result<Self, TraceError> {
        if q < 2 {
            return Err(TraceError::NotPrimePower(q));
        }
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .expect("q >= 2 has a least prime divisor");
        let (mut rest, mut n) = (q, 0);
        while rest % p == 0 {
            rest /= p;
            n += 1;
        }
        if rest != 1 {
            return Err(TraceError::NotPrimePower(q));
        }
        Self::new(p, n)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.p.pow(self.n)
    }

    /// `floor(2 sqrt(q))`, the largest admissible `|t|`.
    pub fn trace_bound(&self) -> i64 {
        (4 * self.q()).sqrt() as i64
    }

    /// Inclusive `[lo, hi]` of group orders allowed by the Hasse bound.
    pub fn hasse_interval(&self) -> (u64, u64) {
        let q1 = self.q() + 1;
        let b = self.trace_bound() as u64;
        (q1 - b, q1 + b)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.p, self.n)
    }
}

/// The five cases of Waterhouse's theorem, in the order they are tried.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaterhouseCondition {
    /// (1) `gcd(t, p) = 1`: ordinary.
    Coprime,
    /// (2) `n` even, `t = ±2 sqrt(q)`.
    TwiceSqrtQ,
    /// (3) `n` even, `p != 1 mod 3`, `t = ±sqrt(q)`.
    SqrtQ,
    /// (4) `n` odd, `p` in `{2, 3}`, `t = ±p^((n+1)/2)`.
    SmallCharacteristicOddDegree,
    /// (5) `t = 0`, with `n` odd, or `n` even and `p != 1 mod 4`.
    ZeroTrace,
}

impl WaterhouseCondition {
    pub fn number(&self) -> u8 {
        match self {
            WaterhouseCondition::Coprime => 1,
            WaterhouseCondition::TwiceSqrtQ => 2,
            WaterhouseCondition::SqrtQ => 3,
            WaterhouseCondition::SmallCharacteristicOddDegree => 4,
            WaterhouseCondition::ZeroTrace => 5,
        }
    }
}

impl fmt::Display for WaterhouseCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.number())
    }
}

/// A trace candidate for `F_q` and its verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceQuery {
    pub t: i64,
    pub field: PrimePower,
    pub admissible: bool,
    /// First condition, in order (1) to (5), that holds; `None` when the
    /// trace is inadmissible.
    pub matched_condition: Option<WaterhouseCondition>,
}

/// `(q + 1 - m)^2 <= 4q`.
pub fn hasse_contains(field: PrimePower, m: i64) -> Result<bool, TraceError> {
    if m <= 0 {
        return Err(TraceError::NonPositiveOrder(m));
    }
    let q = field.q() as i128;
    let t = q + 1 - m as i128;
    Ok(t * t <= 4 * q)
}

/// Classifies `t` as the trace of some elliptic curve over `F_{p^n}`.
pub fn admissible_trace(t: i64, field: PrimePower) -> TraceQuery {
    let matched = matching_condition(t, field);
    TraceQuery {
        t,
        field,
        admissible: matched.is_some(),
        matched_condition: matched,
    }
}

fn matching_condition(t: i64, field: PrimePower) -> Option<WaterhouseCondition> {
    let (p, n) = (field.p() as i128, field.n());
    let q = field.q() as i128;
    let t = t as i128;
    let t2 = t * t;
    if t2 > 4 * q {
        return None;
    }
    let even = n % 2 == 0;
    if t.gcd(&p) == 1 {
        return Some(WaterhouseCondition::Coprime);
    }
    if even && t2 == 4 * q {
        return Some(WaterhouseCondition::TwiceSqrtQ);
    }
    if even && p % 3 != 1 && t2 == q {
        return Some(WaterhouseCondition::SqrtQ);
    }
    if !even && (p == 2 || p == 3) && t2 == q * p {
        return Some(WaterhouseCondition::SmallCharacteristicOddDegree);
    }
    if t == 0 && (!even || p % 4 != 1) {
        return Some(WaterhouseCondition::ZeroTrace);
    }
    None
}

/// Every integer `t` with `t^2 <= 4q`, classified, in ascending order.
pub fn classify_traces(field: PrimePower) -> Vec<TraceQuery> {
    let b = field.trace_bound();
    (-b..=b).map(|t| admissible_trace(t, field)).collect()
}

/// The admissible traces for `F_q`.
pub fn admissible_traces(field: PrimePower) -> BTreeSet<i64> {
    classify_traces(field)
        .into_iter()
        .filter(|tq| tq.admissible)
        .map(|tq| tq.t)
        .collect()
}

/// Group orders `q + 1 - t` over admissible traces `t`.
pub fn admissible_orders(field: PrimePower) -> BTreeSet<u64> {
    let q1 = field.q() as i64 + 1;
    admissible_traces(field)
        .into_iter()
        .map(|t| (q1 - t) as u64)
        .collect()
}

/// Positive multiples of `n` inside the Hasse interval.
pub fn multiples_in_hasse(n: u64, field: PrimePower) -> BTreeSet<u64> {
    assert!(n >= 1, "level must be positive");
    let (lo, hi) = field.hasse_interval();
    let first = lo.max(1).div_ceil(n) * n;
    (first..=hi).step_by(n as usize).collect()
}
