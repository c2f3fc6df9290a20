//! Exact univariate generating functions.
//!
//! A [`RationalSeries`] is stored as `numerator / (Π (1 - t^k)^{e_k} · side)`
//! where `side` is a polynomial with constant term 1 that is almost always
//! trivial. Every constructor returns the canonical form: numerator and the
//! expanded denominator are coprime over the rationals and the denominator is
//! re-factored greedily into `(1 - t^k)` factors, largest `k` first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("denominator factor (1 - t^k) needs k >= 1, got k = 0")]
    ZeroFactorOrder,
    #[error("denominator factor (1 - t^{order}) has exponent 0")]
    ZeroExponent { order: u32 },
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense polynomial in `t` over the rationals, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Polynomial::from_coeffs(coeffs.into_iter().map(rat).collect())
    }

    /// `c · t^degree`
    pub fn monomial(c: BigRational, degree: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        coeffs[degree] = c;
        Polynomial::from_coeffs(coeffs)
    }

    /// `1 - t^k`
    pub fn one_minus_t_pow(k: usize) -> Self {
        if k == 0 {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[0] = BigRational::one();
        coeffs[k] = -BigRational::one();
        Polynomial { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Formal substitution `t ↦ t^m`.
    pub fn substitute(&self, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        if self.is_zero() || m == 1 {
            return self.clone();
        }
        let mut coeffs = vec![BigRational::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// `self · (1 - t^k)`
    pub fn mul_one_minus(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(self.coeffs.len() + k, BigRational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i + k] -= c;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact quotient by `(1 - t^k)`, or `None` when it does not divide.
    pub fn div_one_minus(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let deg = self.coeffs.len() - 1;
        if k == 0 || k > deg {
            return None;
        }
        let qlen = deg - k + 1;
        let mut q: Vec<BigRational> = Vec::with_capacity(qlen);
        for i in 0..qlen {
            let mut c = self.coeffs[i].clone();
            if i >= k {
                c += &q[i - k];
            }
            q.push(c);
        }
        for i in qlen..=deg {
            let mut c = self.coeffs[i].clone();
            if i >= k && i - k < qlen {
                c += &q[i - k];
            }
            if !c.is_zero() {
                return None;
            }
        }
        Some(Polynomial::from_coeffs(q))
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dlen = divisor.coeffs.len();
        assert!(dlen > 0, "polynomial division by zero");
        if self.coeffs.len() < dlen {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = divisor.coeffs[dlen - 1].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len() - dlen + 1];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dlen - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &c * d;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dlen - 1);
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Greatest common divisor, normalised to constant term 1 when the
    /// constant term is nonzero and to a monic polynomial otherwise.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = match r.leading() {
                Some(l) => r.scale(&l.recip()),
                None => r,
            };
        }
        a.normalized()
    }

    fn normalized(&self) -> Polynomial {
        match self.coeffs.first() {
            None => Polynomial::zero(),
            Some(c0) if !c0.is_zero() => self.scale(&c0.recip()),
            Some(_) => self.scale(&self.leading().unwrap().recip()),
        }
    }

    /// Splits into integer coefficients and a positive common denominator.
    fn integer_parts(&self) -> (Vec<BigInt>, BigInt) {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        (ints, den)
    }
}

fn convolve_small(a: &[i64], b: &[i64]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] += x as i128 * y as i128;
            }
        }
    }
    out
}

fn convolve_big(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn as_small(v: &[BigInt]) -> Option<Vec<i64>> {
    v.iter().map(|x| x.to_i64()).collect()
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let (a, da) = self.integer_parts();
        let (b, db) = rhs.integer_parts();
        let den = da * db;
        let small = match (as_small(&a), as_small(&b)) {
            (Some(x), Some(y)) => {
                let mx = x.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as u128;
                let my = y.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) as u128;
                let terms = x.len().min(y.len()) as u128;
                mx.checked_mul(my)
                    .and_then(|p| p.checked_mul(terms))
                    .filter(|&bound| bound < (1u128 << 126))
                    .map(|_| convolve_small(&x, &y))
            }
            _ => None,
        };
        let coeffs = match small {
            Some(v) => v
                .into_iter()
                .map(|c| BigRational::new(BigInt::from(c), den.clone()))
                .collect(),
            None => convolve_big(&a, &b)
                .into_iter()
                .map(|c| BigRational::new(c, den.clone()))
                .collect(),
        };
        Polynomial::from_coeffs(coeffs)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $t:ty) => {
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add, Polynomial);
forward_owned!(Sub, sub, Polynomial);
forward_owned!(Mul, mul, Polynomial);

fn fmt_coeff_term(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    deg: usize,
    first: bool,
) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    let show_coeff = deg == 0 || !abs.is_one();
    if show_coeff {
        if abs.is_integer() {
            write!(f, "{}", abs.numer())?;
        } else {
            write!(f, "({}/{})", abs.numer(), abs.denom())?;
        }
    }
    match deg {
        0 => Ok(()),
        1 => write!(f, "t"),
        d => write!(f, "t^{d}"),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            fmt_coeff_term(f, c, i, first)?;
            first = false;
        }
        Ok(())
    }
}

/// Binary operation selector for [`RationalSeries::combine`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    Add,
    Sub,
    Mul,
}

/// Exact rational generating function in canonical form.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    numerator: Polynomial,
    factors: BTreeMap<u32, u32>,
    side: Polynomial,
}

fn expand_factors(factors: &BTreeMap<u32, u32>) -> Polynomial {
    let mut p = Polynomial::one();
    for (&k, &e) in factors {
        for _ in 0..e {
            p = p.mul_one_minus(k as usize);
        }
    }
    p
}

impl RationalSeries {
    /// `numerator / Π (1 - t^k)^{e_k}` in canonical form.
    pub fn new(numerator: Polynomial, factors: &[(u32, u32)]) -> Result<Self, SeriesError> {
        let mut map = BTreeMap::new();
        for &(k, e) in factors {
            if k == 0 {
                return Err(SeriesError::ZeroFactorOrder);
            }
            if e == 0 {
                return Err(SeriesError::ZeroExponent { order: k });
            }
            *map.entry(k).or_insert(0) += e;
        }
        Ok(Self::canonical(numerator, map, Polynomial::one()))
    }

    pub fn zero() -> Self {
        RationalSeries {
            numerator: Polynomial::zero(),
            factors: BTreeMap::new(),
            side: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    pub fn constant(c: i64) -> Self {
        Self::from_polynomial(Polynomial::from_ints([c]))
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        RationalSeries {
            numerator: p,
            factors: BTreeMap::new(),
            side: Polynomial::one(),
        }
    }

    /// `1 / (1 - t^k)`
    pub fn geometric(k: u32) -> Self {
        Self::new(Polynomial::one(), &[(k, 1)]).expect("geometric series needs k >= 1")
    }

    /// `(1 - t^{k·len}) / (1 - t^k)`, i.e. `1 + t^k + ... + t^{k(len-1)}`.
    pub fn truncated_geometric(k: u32, len: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); (k * len.saturating_sub(1)) as usize + 1];
        for i in 0..len {
            coeffs[(i * k) as usize] = BigRational::one();
        }
        if len == 0 {
            return Self::zero();
        }
        Self::from_polynomial(Polynomial::from_coeffs(coeffs))
    }

    fn canonical(numerator: Polynomial, mut factors: BTreeMap<u32, u32>, side: Polynomial) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        // Cheap cancellation of whole (1 - t^k) factors first; the gcd pass
        // below handles whatever is left.
        let mut num = numerator;
        for (&k, e) in factors.iter_mut().rev() {
            while *e > 0 {
                match num.div_one_minus(k as usize) {
                    Some(q) => {
                        num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        factors.retain(|_, e| *e > 0);
        let mut den = &expand_factors(&factors) * &side;
        if den.is_one() {
            return Self::from_polynomial(num);
        }
        let g = num.gcd(&den);
        if g.degree().unwrap_or(0) > 0 {
            num = num.div_rem(&g).0;
            den = den.div_rem(&g).0;
        }
        let (factors, side) = refactor(den);
        RationalSeries {
            numerator: num,
            factors,
            side,
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    /// Denominator factors `(k, e)` for `(1 - t^k)^e`, ascending in `k`.
    pub fn factors(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.factors.iter().map(|(&k, &e)| (k, e))
    }

    /// Residual denominator factor that is not a product of `(1 - t^k)`.
    pub fn side_factor(&self) -> Option<&Polynomial> {
        (!self.side.is_one()).then_some(&self.side)
    }

    pub fn denominator(&self) -> Polynomial {
        &expand_factors(&self.factors) * &self.side
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.factors.is_empty() && self.side.is_one()
    }

    pub fn combine(mode: Combine, a: &RationalSeries, b: &RationalSeries) -> RationalSeries {
        match mode {
            Combine::Mul => {
                if a.is_zero() || b.is_zero() {
                    return Self::zero();
                }
                let mut factors = a.factors.clone();
                for (&k, &e) in &b.factors {
                    *factors.entry(k).or_insert(0) += e;
                }
                Self::canonical(&a.numerator * &b.numerator, factors, &a.side * &b.side)
            }
            Combine::Add | Combine::Sub => {
                let b_num = if mode == Combine::Sub {
                    -&b.numerator
                } else {
                    b.numerator.clone()
                };
                if b.is_zero() {
                    return a.clone();
                }
                if a.is_zero() {
                    return Self::canonical(b_num, b.factors.clone(), b.side.clone());
                }
                let mut common = a.factors.clone();
                for (&k, &e) in &b.factors {
                    let slot = common.entry(k).or_insert(0);
                    *slot = (*slot).max(e);
                }
                let cofactor = |own: &BTreeMap<u32, u32>, other_side: &Polynomial| {
                    let mut p = other_side.clone();
                    for (&k, &e) in &common {
                        for _ in 0..e - own.get(&k).copied().unwrap_or(0) {
                            p = p.mul_one_minus(k as usize);
                        }
                    }
                    p
                };
                let (side, ca, cb) = if a.side == b.side {
                    let one = Polynomial::one();
                    (
                        a.side.clone(),
                        cofactor(&a.factors, &one),
                        cofactor(&b.factors, &one),
                    )
                } else {
                    (
                        &a.side * &b.side,
                        cofactor(&a.factors, &b.side),
                        cofactor(&b.factors, &a.side),
                    )
                };
                let num = &(&a.numerator * &ca) + &(&b_num * &cb);
                Self::canonical(num, common, side)
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> RationalSeries {
        if c.is_zero() {
            return Self::zero();
        }
        RationalSeries {
            numerator: self.numerator.scale(c),
            factors: self.factors.clone(),
            side: self.side.clone(),
        }
    }

    pub fn scale_int(&self, c: i64) -> RationalSeries {
        self.scale(&rat(c))
    }

    pub fn pow(&self, e: u32) -> RationalSeries {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal substitution `t ↦ t^m`, `m >= 1`.
    pub fn substitute(&self, m: u32) -> RationalSeries {
        assert!(m >= 1, "substitution exponent must be positive");
        if m == 1 {
            return self.clone();
        }
        let factors = self.factors.iter().map(|(&k, &e)| (k * m, e)).collect();
        Self::canonical(
            self.numerator.substitute(m as usize),
            factors,
            self.side.substitute(m as usize),
        )
    }

    /// Power-series coefficients through degree `order`.
    pub fn expand(&self, order: usize) -> TruncatedSeries {
        let n = order + 1;
        let mut c: Vec<BigRational> = (0..n).map(|i| self.numerator.coeff(i)).collect();
        if !self.side.is_one() {
            // side has constant term 1, so long division needs no inverse
            let s = self.side.coeffs();
            for i in 0..n {
                let mut acc = c[i].clone();
                for (j, sj) in s.iter().enumerate().skip(1).take_while(|(j, _)| *j <= i) {
                    if !sj.is_zero() {
                        acc -= sj * &c[i - j];
                    }
                }
                c[i] = acc;
            }
        }
        for (&k, &e) in &self.factors {
            let k = k as usize;
            for _ in 0..e {
                for i in k..n {
                    let prev = c[i - k].clone();
                    c[i] += prev;
                }
            }
        }
        TruncatedSeries { coefficients: c }
    }

    /// Equality of rational functions by cross-multiplication.
    pub fn equal(&self, other: &RationalSeries) -> bool {
        &self.numerator * &other.denominator() == &other.numerator * &self.denominator()
    }
}

/// Greedy `(1 - t^k)` factorisation, largest `k` first.
fn refactor(den: Polynomial) -> (BTreeMap<u32, u32>, Polynomial) {
    let mut rest = den;
    let mut factors = BTreeMap::new();
    let mut k = rest.degree().unwrap_or(0);
    while k >= 1 {
        if k <= rest.degree().unwrap_or(0) {
            if let Some(q) = rest.div_one_minus(k) {
                rest = q;
                *factors.entry(k as u32).or_insert(0) += 1;
                continue;
            }
        }
        k -= 1;
    }
    (factors, rest)
}

impl PartialEq for RationalSeries {
    fn eq(&self, other: &Self) -> bool {
        self.equal(other)
    }
}

impl Eq for RationalSeries {}

impl Add for &RationalSeries {
    type Output = RationalSeries;
    fn add(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::combine(Combine::Add, self, rhs)
    }
}

impl Sub for &RationalSeries {
    type Output = RationalSeries;
    fn sub(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::combine(Combine::Sub, self, rhs)
    }
}

impl Mul for &RationalSeries {
    type Output = RationalSeries;
    fn mul(self, rhs: &RationalSeries) -> RationalSeries {
        RationalSeries::combine(Combine::Mul, self, rhs)
    }
}

forward_owned!(Add, add, RationalSeries);
forward_owned!(Sub, sub, RationalSeries);
forward_owned!(Mul, mul, RationalSeries);

impl Neg for &RationalSeries {
    type Output = RationalSeries;
    fn neg(self) -> RationalSeries {
        self.scale_int(-1)
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.numerator);
        }
        let multi_term = self
            .numerator
            .coeffs()
            .iter()
            .filter(|c| !c.is_zero())
            .count()
            > 1;
        if multi_term {
            write!(f, "({})", self.numerator)?;
        } else {
            write!(f, "{}", self.numerator)?;
        }
        write!(f, " / (")?;
        for (&k, &e) in &self.factors {
            if k == 1 {
                write!(f, "(1 - t)")?;
            } else {
                write!(f, "(1 - t^{k})")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if !self.side.is_one() {
            write!(f, "({})", self.side)?;
        }
        write!(f, ")")
    }
}

/// Coefficients of a power series for degrees `0..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coefficients: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coefficients: Vec<BigRational>) -> Self {
        assert!(
            !coefficients.is_empty(),
            "a truncated series has order >= 0"
        );
        TruncatedSeries { coefficients }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::new(coeffs.into_iter().map(rat).collect())
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn get(&self, degree: usize) -> Option<&BigRational> {
        self.coefficients.get(degree)
    }

    /// The coefficients as integers, if they all are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coefficients
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// The coefficients as machine integers, if they all are and fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.to_integers()?.iter().map(|c| c.to_i64()).collect()
    }

    /// First degree whose coefficient is not a nonnegative integer.
    pub fn first_non_dimension(&self) -> Option<(usize, BigRational)> {
        self.coefficients
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_integer() || c.is_negative())
            .map(|(i, c)| (i, c.clone()))
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::new(self.coefficients[..=order.min(self.order())].to_vec())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
