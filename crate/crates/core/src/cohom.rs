//! Poincaré series of bifunctor cohomology `H*(GL, T)`.
//!
//! Everything is built from `P = P_r(t)`, the series of `E_r`. The tensor
//! power `gl^{⊗n(r)}` has cohomology `E_r^{⊗n} ⊗ kS_n`, whose graded
//! character at a permutation of cycle type `(l_1, ..., l_k)` is
//! `z_c · Π P(t^{l_i})`. Schur summands are read off by character inner
//! products when `p > n`; characteristic 2 in degree 2 uses closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::extalg::{er_basis, er_series, stable_bound, ExtError, Twist, TwistParams};
use crate::series::RationalSeries;
use crate::symgrp::{
    centralizer_order, character_table, class_size, factorial, CentralCharacter, CycleType,
    Partition, SymError,
};

/// Degree through which Schur series are checked to be dimension series.
pub const INTEGRALITY_CHECK_ORDER: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CohomError {
    #[error("Schur summand {lambda} needs p > n, got p = {p}, n = {n}")]
    CharacteristicTooSmall { p: u32, n: usize, lambda: Partition },
    #[error("the stable comparison requires d <= q, got d = {d}, q = {q}")]
    DegreeExceedsField { d: usize, q: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} is not a dimension series: coefficient {value} in degree {degree}")]
    NotADimension {
        what: String,
        degree: usize,
        value: String,
    },
    #[error("exponential recursion needs {need} input series, got {got}")]
    InputLength { need: usize, got: usize },
    #[error("the first exponential input must be the series of E_r")]
    BadFirstInput,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error(transparent)]
    Ext(#[from] ExtError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// Exponential-type families `A^*`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Sym,
    Ext,
    Gamma,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Sym => "sym",
            Family::Ext => "ext",
            Family::Gamma => "gamma",
        })
    }
}

/// Coefficient bifunctors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientKind {
    /// `gl^{⊗n}`
    Tensor(usize),
    /// The summand `S^λ(gl)`, `p > |λ|`.
    Schur(Partition),
    Sym2,
    Ext2,
    Gamma2,
    /// `A^d(gl) ⊗ gl`
    Exponential(Family, usize),
}

impl CoefficientKind {
    /// Polynomial degree `d` of the coefficient functor; for
    /// `A^d(gl) ⊗ gl` this is the degree `d` of `A^d`.
    pub fn degree(&self) -> usize {
        match self {
            CoefficientKind::Tensor(n) => *n,
            CoefficientKind::Schur(l) => l.n(),
            CoefficientKind::Sym2 | CoefficientKind::Ext2 | CoefficientKind::Gamma2 => 2,
            CoefficientKind::Exponential(_, d) => *d,
        }
    }
}

impl fmt::Display for CoefficientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientKind::Tensor(n) => write!(f, "tensor^{n}"),
            CoefficientKind::Schur(l) => write!(f, "schur{l}"),
            CoefficientKind::Sym2 => write!(f, "sym2"),
            CoefficientKind::Ext2 => write!(f, "ext2"),
            CoefficientKind::Gamma2 => write!(f, "gamma2"),
            CoefficientKind::Exponential(fam, d) => write!(f, "{fam}^{d} x gl"),
        }
    }
}

/// The four degree-2 coefficients in characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Char2Kind {
    Tensor,
    Sym2,
    Ext2,
    Gamma2,
}

/// Graded character of `E_r^{⊗n} ⊗ kS_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    tp: TwistParams,
    values: CentralCharacter<RationalSeries>,
}

impl GradedCharacter {
    pub fn tp(&self) -> TwistParams {
        self.tp
    }

    pub fn n(&self) -> usize {
        self.values.n()
    }

    pub fn values(&self) -> &CentralCharacter<RationalSeries> {
        &self.values
    }

    pub fn value(&self, c: &CycleType) -> Option<&RationalSeries> {
        self.values.value(c)
    }

    /// The value at the identity, i.e. the graded dimension.
    pub fn dimension_series(&self) -> &RationalSeries {
        &self.values.values()[0]
    }
}

/// `Π_i P(t^{l_i})`, the graded trace of a permutation of tensor factors.
pub fn cycle_trace(tp: TwistParams, c: &CycleType) -> RationalSeries {
    let p = er_series(tp);
    c.parts().iter().fold(RationalSeries::one(), |acc, &l| {
        &acc * &p.substitute(l as u32)
    })
}

pub fn tensor_cohomology_character(tp: TwistParams, n: usize) -> GradedCharacter {
    assert!(n >= 1, "tensor power must be positive");
    let values = CentralCharacter::from_fn(n, |c| {
        cycle_trace(tp, c).scale(&BigRational::from_integer(BigInt::from(centralizer_order(
            c,
        ))))
    });
    GradedCharacter { tp, values }
}

/// `n! · P^n`
pub fn tensor_series(tp: TwistParams, n: usize) -> RationalSeries {
    er_series(tp).pow(n as u32).scale_int(factorial(n) as i64)
}

fn check_dimension_series(what: impl Fn() -> String, s: &RationalSeries) -> Result<(), CohomError> {
    match s.expand(INTEGRALITY_CHECK_ORDER).first_non_dimension() {
        None => Ok(()),
        Some((degree, value)) => Err(CohomError::NotADimension {
            what: what(),
            degree,
            value: value.to_string(),
        }),
    }
}

/// `s^λ = (1/n!) Σ_c |c| χ_λ(c) · char(c)`, for `p > n`.
pub fn schur_series(tp: TwistParams, lambda: &Partition) -> Result<RationalSeries, CohomError> {
    let n = lambda.n();
    if tp.p() as usize <= n {
        return Err(CohomError::CharacteristicTooSmall {
            p: tp.p(),
            n,
            lambda: lambda.clone(),
        });
    }
    let table = character_table(n)?;
    let chi = table
        .character(lambda)
        .expect("every partition indexes a row");
    let character = tensor_cohomology_character(tp, n);
    let order = BigInt::from(factorial(n));
    let mut total = RationalSeries::zero();
    for ((c, value), &x) in character.values().iter().zip(chi) {
        let weight = BigRational::new(BigInt::from(class_size(c)) * x, order.clone());
        total = &total + &value.scale(&weight);
    }
    check_dimension_series(|| format!("schur series {lambda} at {tp}"), &total)?;
    Ok(total)
}

/// The degree-2 closed forms in characteristic 2, with `Q = P_r` and
/// `R = P_r(t^2)`: `2Q²`, `Q² + R`, `Q² + tR`, `Q² + (1+t+t²)R`.
pub fn char2_series(r: Twist, kind: Char2Kind) -> RationalSeries {
    let tp = TwistParams::new(2, r).expect("2 is prime");
    let q = er_series(tp);
    let q2 = &q * &q;
    let rr = q.substitute(2);
    let poly = |c: &[i64]| {
        RationalSeries::from_polynomial(crate::series::Polynomial::from_ints(c.iter().copied()))
    };
    match kind {
        Char2Kind::Tensor => q2.scale_int(2),
        Char2Kind::Sym2 => &q2 + &rr,
        Char2Kind::Ext2 => &q2 + &(&poly(&[0, 1]) * &rr),
        Char2Kind::Gamma2 => &q2 + &(&poly(&[1, 1, 1]) * &rr),
    }
}

/// Dimension of the `S_2`-coinvariants of `E_r^{⊗2} ⊗ kS_2` over `F_2` in
/// each degree, by counting swap orbits on pairs of basis monomials.
pub fn char2_coinvariant_dimensions(r: u32, order: usize) -> Vec<u64> {
    let basis =
        er_basis(TwistParams::new(2, r).expect("2 is prime"), order as u64).expect("finite twist");
    let mut dims = vec![0u64; order + 1];
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let deg = (x.degree() + y.degree()) as usize;
            if deg <= order {
                // one orbit per unordered pair, in each of the two copies
                dims[deg] += 2;
            }
        }
    }
    dims
}

/// `H(A^d ⊗ gl) = (H(A^d) + H(A^{d-1} ⊗ gl)) · P`, anchored at
/// `H(A^1 ⊗ gl) = 2P²`. `inputs[i]` is the series of `A^{i+1}(gl)`.
pub fn exponential_series(
    tp: TwistParams,
    inputs: &[RationalSeries],
    d: usize,
) -> Result<RationalSeries, CohomError> {
    if d == 0 {
        return Err(CohomError::ZeroDegree);
    }
    if inputs.len() < d {
        return Err(CohomError::InputLength {
            need: d,
            got: inputs.len(),
        });
    }
    let p = er_series(tp);
    if !inputs[0].equal(&p) {
        return Err(CohomError::BadFirstInput);
    }
    let mut h = (&p * &p).scale_int(2);
    for a in &inputs[1..d] {
        h = &(a + &h) * &p;
    }
    Ok(h)
}

fn char2_kind(kind: &CoefficientKind) -> Option<Char2Kind> {
    match kind {
        CoefficientKind::Tensor(2) => Some(Char2Kind::Tensor),
        CoefficientKind::Sym2 => Some(Char2Kind::Sym2),
        CoefficientKind::Ext2 => Some(Char2Kind::Ext2),
        CoefficientKind::Gamma2 => Some(Char2Kind::Gamma2),
        CoefficientKind::Schur(l) if l.parts() == [2] => Some(Char2Kind::Sym2),
        CoefficientKind::Schur(l) if l.parts() == [1, 1] => Some(Char2Kind::Ext2),
        _ => None,
    }
}

/// The member of degree `i` of an exponential family.
pub fn family_member(family: Family, i: usize) -> CoefficientKind {
    match (family, i) {
        (_, 1) => CoefficientKind::Tensor(1),
        (Family::Sym, 2) => CoefficientKind::Sym2,
        (Family::Ext, 2) => CoefficientKind::Ext2,
        (Family::Gamma, 2) => CoefficientKind::Gamma2,
        (Family::Ext, i) => CoefficientKind::Schur(Partition::identity(i)),
        (_, i) => CoefficientKind::Schur(Partition::new(vec![i]).expect("single part")),
    }
}

/// Series of `H*(GL, kind^(r))`.
pub fn cohomology_series(
    tp: TwistParams,
    kind: &CoefficientKind,
) -> Result<RationalSeries, CohomError> {
    if tp.p() == 2 {
        if let Some(k) = char2_kind(kind) {
            return Ok(char2_series(tp.r(), k));
        }
    }
    match kind {
        CoefficientKind::Tensor(0) | CoefficientKind::Exponential(_, 0) => {
            Err(CohomError::ZeroDegree)
        }
        CoefficientKind::Tensor(n) => Ok(tensor_series(tp, *n)),
        CoefficientKind::Schur(l) => schur_series(tp, l),
        CoefficientKind::Sym2 | CoefficientKind::Gamma2 => {
            schur_series(tp, &Partition::new(vec![2]).expect("partition"))
        }
        CoefficientKind::Ext2 => schur_series(tp, &Partition::identity(2)),
        CoefficientKind::Exponential(f, d) => {
            let inputs = (1..=*d)
                .map(|i| cohomology_series(tp, &family_member(*f, i)))
                .collect::<Result<Vec<_>, _>>()?;
            exponential_series(tp, &inputs, *d)
        }
    }
}

/// `(p, e)` with `q = p^e`, `e >= 1`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

/// Stable cohomology of `GL(F_q)` together with the twist bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSeries {
    pub q: u64,
    pub p: u32,
    pub kind: CoefficientKind,
    pub series: RationalSeries,
}

impl StableSeries {
    /// Least twist `r` at which `H^s` already takes its stable value.
    pub fn twist_bound(&self, s: u64) -> u32 {
        stable_bound(self.p, s)
    }

    pub fn twist_bounds(&self, order: usize) -> Vec<u32> {
        (0..=order as u64).map(|s| self.twist_bound(s)).collect()
    }
}

/// `H*(GL(F_q), kind)` in the stable range, which requires `d <= q`.
pub fn gl_finite_series(q: u64, kind: &CoefficientKind) -> Result<StableSeries, CohomError> {
    let (p, _) = prime_power(q).ok_or(CohomError::NotPrimePower(q))?;
    let d = kind.degree();
    if d as u64 > q {
        return Err(CohomError::DegreeExceedsField { d, q });
    }
    let series = cohomology_series(TwistParams::stable(p)?, kind)?;
    Ok(StableSeries {
        q,
        p,
        kind: kind.clone(),
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Polynomial;

    fn tp(p: u32, r: u32) -> TwistParams {
        TwistParams::new(p, r).unwrap()
    }

    fn inf(p: u32) -> TwistParams {
        TwistParams::stable(p).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn rs(num: &[i64], den: &[(u32, u32)]) -> RationalSeries {
        RationalSeries::new(Polynomial::from_ints(num.iter().copied()), den).unwrap()
    }

    /// `P`, `P(t^2)`, `P(t^3)` as independent inputs.
    fn pj(t: TwistParams, j: u32) -> RationalSeries {
        er_series(t).substitute(j)
    }

    #[test]
    fn tensor_character_values() {
        for t in [tp(3, 1), tp(5, 2), inf(2)] {
            let p = pj(t, 1);
            let ch2 = tensor_cohomology_character(t, 2);
            assert!(ch2
                .value(&part(&[1, 1]))
                .unwrap()
                .equal(&(&p * &p).scale_int(2)));
            assert!(ch2
                .value(&part(&[2]))
                .unwrap()
                .equal(&pj(t, 2).scale_int(2)));
            let ch3 = tensor_cohomology_character(t, 3);
            assert!(ch3.dimension_series().equal(&p.pow(3).scale_int(6)));
            assert!(ch3
                .value(&part(&[2, 1]))
                .unwrap()
                .equal(&(&pj(t, 2) * &p).scale_int(2)));
            assert!(ch3
                .value(&part(&[3]))
                .unwrap()
                .equal(&pj(t, 3).scale_int(3)));
        }
    }

    #[test]
    fn tensor_series_examples() {
        for r in 0..4 {
            let expect = &(&Polynomial::one_minus_t_pow(1 << (r + 1))
                * &Polynomial::one_minus_t_pow(1 << (r + 1)));
            let expect = RationalSeries::new(expect.clone(), &[(2, 2)])
                .unwrap()
                .scale_int(2);
            assert!(tensor_series(tp(2, r), 2).equal(&expect));
        }
        assert!(tensor_series(tp(7, 2), 1).equal(&er_series(tp(7, 2))));
    }

    #[test]
    fn stable_schur_degree_two() {
        let s2 = schur_series(inf(3), &part(&[2])).unwrap();
        assert!(s2.equal(&(&rs(&[1], &[(2, 2)]) + &rs(&[1], &[(4, 1)]))));
        let l2 = schur_series(inf(5), &part(&[1, 1])).unwrap();
        assert!(l2.equal(&(&rs(&[1], &[(2, 2)]) - &rs(&[1], &[(4, 1)]))));
        for t in [tp(2, 2), tp(3, 0), inf(7)] {
            assert!(schur_series(t, &part(&[1])).unwrap().equal(&er_series(t)));
        }
    }

    #[test]
    fn schur_three_against_class_formula() {
        for t in [tp(5, 0), tp(5, 1), tp(7, 2), inf(5)] {
            let (p1, p2, p3) = (pj(t, 1), pj(t, 2), pj(t, 3));
            let cube = p1.pow(3);
            let mixed = &p2 * &p1;
            let triv = &(&cube + &mixed) + &p3;
            let sign = &(&cube - &mixed) + &p3;
            let std = &cube.scale_int(2) - &p3;
            assert!(schur_series(t, &part(&[3])).unwrap().equal(&triv));
            assert!(schur_series(t, &part(&[1, 1, 1])).unwrap().equal(&sign));
            assert!(schur_series(t, &part(&[2, 1])).unwrap().equal(&std));
        }
    }

    #[test]
    fn schur_needs_large_characteristic() {
        let err = schur_series(tp(3, 1), &part(&[3])).unwrap_err();
        assert!(matches!(
            err,
            CohomError::CharacteristicTooSmall { p: 3, n: 3, .. }
        ));
        assert!(err.to_string().contains("p > n"));
    }

    #[test]
    fn char2_examples() {
        let f = Twist::Finite;
        assert_eq!(
            char2_series(f(1), Char2Kind::Sym2)
                .expand(6)
                .to_i64()
                .unwrap(),
            vec![2, 0, 2, 0, 2, 0, 0]
        );
        assert_eq!(
            char2_series(f(1), Char2Kind::Ext2)
                .expand(6)
                .to_i64()
                .unwrap(),
            vec![1, 1, 2, 0, 1, 1, 0]
        );
        assert_eq!(
            char2_series(f(1), Char2Kind::Gamma2)
                .expand(7)
                .to_i64()
                .unwrap(),
            vec![2, 1, 3, 0, 2, 1, 1, 0]
        );
        assert_eq!(
            char2_series(f(0), Char2Kind::Ext2)
                .expand(3)
                .to_i64()
                .unwrap(),
            vec![1, 1, 0, 0]
        );
        let g = char2_series(Twist::Infinite, Char2Kind::Gamma2);
        assert!(g.equal(&(&rs(&[1], &[(2, 2)]) + &rs(&[1, 1, 1], &[(4, 1)]))));
    }

    #[test]
    fn coinvariants_match_sym2() {
        for r in 0..=3 {
            let order = 1 << (r + 3);
            let sym = char2_series(Twist::Finite(r), Char2Kind::Sym2)
                .expand(order)
                .to_i64()
                .unwrap();
            let co: Vec<i64> = char2_coinvariant_dimensions(r, order)
                .iter()
                .map(|&x| x as i64)
                .collect();
            assert_eq!(co, sym, "r = {r}");
        }
    }

    #[test]
    fn exponential_examples() {
        let t = inf(3);
        let p = er_series(t);
        let s2 = schur_series(t, &part(&[2])).unwrap();
        assert!(exponential_series(t, std::slice::from_ref(&p), 1)
            .unwrap()
            .equal(&(&p * &p).scale_int(2)));
        let got = exponential_series(t, &[p.clone(), s2], 2).unwrap();
        let want = &(&rs(&[3], &[(2, 2)]) + &rs(&[1], &[(4, 1)])) * &rs(&[1], &[(2, 1)]);
        assert!(got.equal(&want));
        let got = cohomology_series(t, &CoefficientKind::Exponential(Family::Ext, 2)).unwrap();
        let want = &(&rs(&[3], &[(2, 2)]) - &rs(&[1], &[(4, 1)])) * &rs(&[1], &[(2, 1)]);
        assert!(got.equal(&want));
        assert_eq!(
            exponential_series(t, std::slice::from_ref(&p), 2),
            Err(CohomError::InputLength { need: 2, got: 1 })
        );
        assert_eq!(
            exponential_series(t, &[p.pow(2)], 1),
            Err(CohomError::BadFirstInput)
        );
    }

    #[test]
    fn finite_field_pipeline() {
        let s = gl_finite_series(4, &CoefficientKind::Sym2).unwrap();
        assert_eq!(s.p, 2);
        assert!(s
            .series
            .equal(&(&rs(&[1], &[(2, 2)]) + &rs(&[1], &[(4, 1)]))));
        let err = gl_finite_series(2, &CoefficientKind::Schur(part(&[3]))).unwrap_err();
        assert_eq!(err, CohomError::DegreeExceedsField { d: 3, q: 2 });
        assert!(err.to_string().contains("requires d <= q"));
        let s = gl_finite_series(7, &CoefficientKind::Schur(part(&[1]))).unwrap();
        assert!(s.series.equal(&rs(&[1], &[(2, 1)])));
        assert_eq!(s.twist_bounds(4), vec![0, 0, 1, 1, 1]);
        assert_eq!(
            gl_finite_series(6, &CoefficientKind::Sym2).unwrap_err(),
            CohomError::NotPrimePower(6)
        );
        assert!(matches!(
            gl_finite_series(9, &CoefficientKind::Schur(part(&[3]))),
            Err(CohomError::CharacteristicTooSmall { .. })
        ));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
