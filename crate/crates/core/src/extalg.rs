//! The algebra `E_r = Ext*(I^(r), I^(r))`.
//!
//! `E_r` is the truncated polynomial algebra on classes `e_1, ..., e_r` with
//! `deg e_i = 2p^(i-1)` and `e_i^p = 0`. Its Poincaré series is
//! `P_r(t) = (1 - t^(2p^r)) / (1 - t^2)`; the stable algebra `E_∞` has
//! series `1 / (1 - t^2)`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::series::RationalSeries;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("the monomial basis is only available for a finite twist")]
    InfiniteTwist,
    #[error("cannot parse twist {0:?}: expected a nonnegative integer or \"inf\"")]
    BadTwist(String),
}

/// Number of Frobenius twists, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Twist {
    Finite(u32),
    Infinite,
}

impl Twist {
    pub fn finite(self) -> Option<u32> {
        match self {
            Twist::Finite(r) => Some(r),
            Twist::Infinite => None,
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Twist::Finite(r) => write!(f, "{r}"),
            Twist::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Twist {
    type Err = ExtError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
            return Ok(Twist::Infinite);
        }
        s.parse::<u32>()
            .map(Twist::Finite)
            .map_err(|_| ExtError::BadTwist(s.to_string()))
    }
}

impl From<u32> for Twist {
    fn from(r: u32) -> Self {
        Twist::Finite(r)
    }
}

pub fn is_prime(n: u32) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Characteristic and twist.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwistParams {
    p: u32,
    r: Twist,
}

impl TwistParams {
    pub fn new(p: u32, r: impl Into<Twist>) -> Result<Self, ExtError> {
        if !is_prime(p) {
            return Err(ExtError::NotPrime(p));
        }
        Ok(TwistParams { p, r: r.into() })
    }

    pub fn stable(p: u32) -> Result<Self, ExtError> {
        Self::new(p, Twist::Infinite)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn r(&self) -> Twist {
        self.r
    }

    /// `p^r` for a finite twist.
    pub fn twist_power(&self) -> Option<u64> {
        self.r.finite().map(|r| (self.p as u64).pow(r))
    }
}

impl fmt::Display for TwistParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, r={}", self.p, self.r)
    }
}

/// A basis monomial `e_1^{a_1} ... e_r^{a_r}` with `0 <= a_i < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtMonomial {
    degree: u64,
    exponents: Vec<u32>,
}

impl ExtMonomial {
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &a) in self.exponents.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if any {
                write!(f, " ")?;
            }
            any = true;
            write!(f, "e{}", i + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if !any {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// `P_r(t)`, or `1 / (1 - t^2)` for the infinite twist.
pub fn er_series(tp: TwistParams) -> RationalSeries {
    match tp.twist_power() {
        Some(q) => RationalSeries::truncated_geometric(2, q as u32),
        None => RationalSeries::geometric(2),
    }
}

/// All basis monomials of degree at most `max_degree`, by increasing degree.
pub fn er_basis(tp: TwistParams, max_degree: u64) -> Result<Vec<ExtMonomial>, ExtError> {
    let r = tp.r.finite().ok_or(ExtError::InfiniteTwist)? as usize;
    let p = tp.p as u64;
    let weights: Vec<u64> = (0..r).map(|i| 2 * p.pow(i as u32)).collect();
    let mut out = Vec::new();
    let mut exps = vec![0u32; r];
    // odometer over exponent tuples, pruning by degree
    loop {
        let degree: u64 = exps.iter().zip(&weights).map(|(&a, &w)| a as u64 * w).sum();
        if degree <= max_degree {
            out.push(ExtMonomial {
                degree,
                exponents: exps.clone(),
            });
        }
        let mut i = 0;
        loop {
            if i == r {
                out.sort();
                return Ok(out);
            }
            exps[i] += 1;
            let deg: u64 = exps.iter().zip(&weights).map(|(&a, &w)| a as u64 * w).sum();
            if (exps[i] as u64) < p && deg <= max_degree {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Least `r` with `2p^r >= s + 1`: from this twist on, degrees `<= s` no
/// longer see the truncation `e_i^p = 0`.
pub fn stable_bound(p: u32, s: u64) -> u32 {
    let mut r = 0;
    let mut pr: u64 = 1;
    while 2 * pr < s + 1 {
        pr *= p as u64;
        r += 1;
    }
    r
}
