//! Closed forms for the minimal number of colors `K(a,m,n)`, `a <= 1`.
//!
//! Every decision (threshold comparisons, floors of expressions involving
//! square roots) is made in exact integer arithmetic; the real-valued
//! [`Thresholds`] are for display only.

use core::fmt;

use crate::{Error, Result};

/// A color count, or `Infinite` when no graph realizes the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KValue {
    Finite(u64),
    Infinite,
}

impl KValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            KValue::Finite(k) => Some(k),
            KValue::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == KValue::Infinite
    }
}

impl fmt::Display for KValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KValue::Finite(k) => write!(f, "{k}"),
            KValue::Infinite => f.write_str("infinite"),
        }
    }
}

/// The minimal vertex count `n_m` for a given `m` and the smallest maximum
/// degree `delta_m` attaining it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MinimizerResult {
    pub n_m: u64,
    pub delta_m: u64,
}

/// `n1 = 2+m-2√m`, `n2 = 2+m+2√m`, `n3 = 2+m-√(4m-1)`, `n4 = 2+m+√(4m+1)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Thresholds {
    pub n1: f64,
    pub n2: f64,
    pub n3: f64,
    pub n4: f64,
}

/// `⌊√x⌋`.
pub fn isqrt(x: u128) -> u128 {
    x.isqrt()
}

/// `K(0,m,n)`: infinite when every vertex can fail, otherwise a single color.
pub fn k_zero(m: u64, n: u64) -> KValue {
    if n <= m {
        KValue::Infinite
    } else {
        KValue::Finite(1)
    }
}

/// `D = n² + m² - 4n - 2mn + 4 = (n-m-2)² - 4m`.
///
/// Exact for `n, m < 2^63`.
pub fn discriminant(m: u64, n: u64) -> i128 {
    let shifted = n as i128 - m as i128 - 2;
    shifted * shifted - 4 * m as i128
}

pub fn thresholds(m: u64) -> Result<Thresholds> {
    if m == 0 {
        return Err(Error::NoFailures);
    }
    let mf = m as f64;
    let base = 2.0 + mf;
    Ok(Thresholds {
        n1: base - 2.0 * libm::sqrt(mf),
        n2: base + 2.0 * libm::sqrt(mf),
        n3: base - libm::sqrt(4.0 * mf - 1.0),
        n4: base + libm::sqrt(4.0 * mf + 1.0),
    })
}

/// `n - m - 2` when positive.
fn positive_gap(m: u64, n: u64) -> Option<u128> {
    (n as u128).checked_sub(m as u128 + 2).filter(|&g| g > 0)
}

/// `n > 2 + m + √(4m+1)`, decided exactly.
pub fn exceeds_n4(m: u64, n: u64) -> bool {
    // gap < 2^64, so gap² fits in a u128.
    positive_gap(m, n).is_some_and(|gap| gap * gap > 4 * m as u128 + 1)
}

/// Whether `n >= k + m + ⌊m/(k-1)⌋ + 2`.
pub fn feasible(k: u64, m: u64, n: u64) -> Result<bool> {
    if k <= 1 {
        return Err(Error::TooFewColors(k));
    }
    let need = k as u128 + m as u128 + (m / (k - 1)) as u128 + 2;
    Ok(n as u128 >= need)
}

/// `K(1,m,n)`: infinite for `n <= 2+m+√(4m+1)`, otherwise
/// `⌊(n - m - √D)/2⌋ + 1`.
pub fn k_one(m: u64, n: u64) -> Result<KValue> {
    if m == 0 {
        return Err(Error::NoFailures);
    }
    if !exceeds_n4(m, n) {
        return Ok(KValue::Infinite);
    }
    // Above the threshold D > 1 and n - m > 0.
    let gap = positive_gap(m, n).expect("n exceeds n4");
    let d = gap * gap - 4 * m as u128;
    let root = isqrt(d);
    let t = (n - m) as u128 - root;
    // For irrational √D, n-m-√D lies strictly inside (t-1, t).
    let half_floor = if root * root == d { t / 2 } else { (t - 1) / 2 };
    Ok(KValue::Finite(half_floor as u64 + 1))
}

/// `x + ⌊m/x⌋` on positive integers.
pub fn f_pad(x: u64, m: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::NotPositive);
    }
    Ok(x + m / x)
}

/// Smallest positive integer minimizing [`f_pad`] for this `m`.
pub fn pad_minimizer(m: u64) -> u64 {
    // For x > m the floor vanishes and f grows.
    (1..=m.max(1)).min_by_key(|&x| (x + m / x, x)).unwrap_or(1)
}

/// `n_m = min over Δ >= 1 of Δ + m + ⌊m/Δ⌋ + 3`, smallest minimizer on ties.
pub fn min_n(m: u64) -> Result<MinimizerResult> {
    if m == 0 {
        return Err(Error::NoFailures);
    }
    let mut best = MinimizerResult { n_m: u64::MAX, delta_m: 0 };
    for delta in 1..=m + 1 {
        let n = f_pad(delta, m)? + m + 3;
        if n < best.n_m {
            best = MinimizerResult { n_m: n, delta_m: delta };
        }
    }
    Ok(best)
}

/// Necessary conditions on any realization of `(1,m,n,k)` whose graph has
/// maximum degree `delta`:
/// `n >= delta + m + ⌊m/(k-1)⌋ + 3` and `n >= delta + m + ⌊m/delta⌋ + 3`.
///
/// # Panics
///
/// Panics if `k < 2` or `delta < 1`.
pub fn claim_bounds(n: u64, m: u64, k: u64, delta: u64) -> bool {
    assert!(k >= 2 && delta >= 1, "claim_bounds needs k >= 2 and delta >= 1");
    let base = delta as u128 + m as u128 + 3;
    let n = n as u128;
    n >= base + (m / (k - 1)) as u128 && n >= base + (m / delta) as u128
}
