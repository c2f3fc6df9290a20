//! Rank bookkeeping for the degree-2 hypercohomology spectral sequences in
//! characteristic 2.
//!
//! The De Rham (`S² → ⊗² → Λ²`), Koszul (`Λ² → ⊗² → S²`) and Symmetric
//! (`S² → ⊗² → S²`) complexes give three first-quadrant spectral sequences
//! with three columns. Given the dimensions of `H*(⊗²)` and `H*(S²)`, the
//! unknowns are `λ_m = dim H^m(Λ²)`, the ranks of the four first-page maps
//! and of the `d_2` differentials. Known abutments plus the norm-map rank
//! chain pin all of them down by interval propagation, with no search.
//!
//! Column 0 of each sequence sits in total degree `m`, column 1 in `m + 1`
//! and column 2 in `m + 2`. On the second page only `d_2` from column 0 to
//! column 2 survives, so `E_3 = E_∞`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::cohom::{char2_series, tensor_series, Char2Kind};
use crate::extalg::{er_basis, er_series, Twist, TwistParams};
use crate::series::{Polynomial, RationalSeries, TruncatedSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("inconsistent: {constraint} forces {var} into the empty range [{lo}, {hi}]")]
    Inconsistent {
        constraint: String,
        var: String,
        lo: i64,
        hi: i64,
    },
    #[error("undetermined after propagation: {}", .0.join(", "))]
    Undetermined(Vec<String>),
    #[error("the ledger has not been solved")]
    Unsolved,
    #[error("degree {degree} lies outside the validity window 0..={window}")]
    OutOfWindow { degree: usize, window: usize },
}

/// The three complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Complex {
    Koszul,
    Symmetric,
    DeRham,
}

impl Complex {
    pub const ALL: [Complex; 3] = [Complex::Koszul, Complex::Symmetric, Complex::DeRham];

    /// The first-page maps out of column 0 and out of column 1.
    pub fn maps(self) -> (Rank, Rank) {
        match self {
            Complex::Koszul => (Rank::K1, Rank::K2),
            Complex::Symmetric => (Rank::D1, Rank::K2),
            Complex::DeRham => (Rank::D1, Rank::D2),
        }
    }

    /// Whether column 0 (resp. column 2) is `Λ²` rather than `S²`.
    fn lambda_columns(self) -> (bool, bool) {
        match self {
            Complex::Koszul => (true, false),
            Complex::Symmetric => (false, false),
            Complex::DeRham => (false, true),
        }
    }

    fn short(self) -> &'static str {
        match self {
            Complex::Koszul => "K",
            Complex::Symmetric => "S",
            Complex::DeRham => "Ω",
        }
    }
}

/// First-page maps: `d¹: S² → ⊗²`, `d²: ⊗² → Λ²`, `κ¹: Λ² → ⊗²`,
/// `κ²: ⊗² → S²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rank {
    D1,
    D2,
    K1,
    K2,
}

impl Rank {
    pub const ALL: [Rank; 4] = [Rank::D1, Rank::D2, Rank::K1, Rank::K2];
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rank::D1 => "rk_d1",
            Rank::D2 => "rk_d2",
            Rank::K1 => "rk_k1",
            Rank::K2 => "rk_k2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Var {
    Lambda(usize),
    Rank(Rank, usize),
    /// rank of `d_2: E_2^{0,m} → E_2^{2,m-1}`
    Delta(Complex, usize),
    /// `E_∞` of columns 0, 1, 2 in row `m`
    Col0(Complex, usize),
    Col1(Complex, usize),
    Col2(Complex, usize),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Lambda(m) => write!(f, "λ_{m}"),
            Var::Rank(r, m) => write!(f, "{r}_{m}"),
            Var::Delta(c, m) => write!(f, "δ{}_{m}", c.short()),
            Var::Col0(c, m) => write!(f, "E∞{}(0,{m})", c.short()),
            Var::Col1(c, m) => write!(f, "E∞{}(1,{m})", c.short()),
            Var::Col2(c, m) => write!(f, "E∞{}(2,{m})", c.short()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Relation {
    Eq,
    Le,
}

#[derive(Clone, Debug)]
struct Constraint {
    label: String,
    terms: Vec<(i64, usize)>,
    relation: Relation,
    rhs: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Interval {
    lo: i64,
    hi: Option<i64>,
}

impl Interval {
    fn value(self) -> Option<i64> {
        (self.hi == Some(self.lo)).then_some(self.lo)
    }
}

/// One step of the derivation: a constraint narrowed a variable to a value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub variable: String,
    pub value: i64,
    pub constraint: String,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {}  [{}]",
            self.variable, self.value, self.constraint
        )
    }
}

/// Dimensions, unknowns and constraints for one twist `r`.
#[derive(Clone, Debug)]
pub struct LedgerState {
    r: u32,
    max_degree: usize,
    window: usize,
    top: usize,
    tensor: Vec<i64>,
    sym: Vec<i64>,
    squares: Vec<i64>,
    abutments: BTreeMap<Complex, Vec<i64>>,
    index: BTreeMap<Var, usize>,
    names: Vec<Var>,
    bounds: Vec<Interval>,
    constraints: Vec<Constraint>,
    trace: Vec<TraceEntry>,
    solved: bool,
}

fn expand_i64(s: &RationalSeries, order: usize) -> Vec<i64> {
    s.expand(order)
        .to_i64()
        .expect("dimension series have integer coefficients")
}

/// Highest degree `N = 2^{r+2} - 3` in which the norm-map rank chain holds.
pub fn validity_window(r: u32) -> usize {
    (1usize << (r + 2)) - 3
}

/// Builds the ledger for degrees `0..=max_degree`; pass `None` for the
/// whole validity window.
pub fn init_ledger(r: u32, max_degree: Option<usize>) -> LedgerState {
    let window = validity_window(r);
    let max_degree = max_degree.unwrap_or(window);
    let top = max_degree.max(window) + 2;
    let tp = TwistParams::new(2, r).expect("2 is prime");
    let tensor = expand_i64(&tensor_series(tp, 2), top);
    let sym = expand_i64(&char2_series(Twist::Finite(r), Char2Kind::Sym2), top);

    // x ⊗ x basis elements of E_r ⊗ E_r, one per monomial x
    let mut squares = vec![0i64; top + 1];
    for x in er_basis(tp, top as u64).expect("finite twist") {
        let d = 2 * x.degree() as usize;
        if d <= top {
            squares[d] += 1;
        }
    }

    let next = er_series(TwistParams::new(2, r + 1).expect("2 is prime"));
    let mut abutments = BTreeMap::new();
    abutments.insert(Complex::Koszul, vec![0; top + 1]);
    abutments.insert(Complex::Symmetric, expand_i64(&next, top));
    // both rows of the second De Rham sequence carry E_{r+1} and d_2 = 0
    let one_plus_t = RationalSeries::from_polynomial(Polynomial::from_ints([1, 1]));
    abutments.insert(Complex::DeRham, expand_i64(&(&one_plus_t * &next), top));

    let mut st = LedgerState {
        r,
        max_degree,
        window,
        top,
        tensor,
        sym,
        squares,
        abutments,
        index: BTreeMap::new(),
        names: Vec::new(),
        bounds: Vec::new(),
        constraints: Vec::new(),
        trace: Vec::new(),
        solved: false,
    };
    st.install();
    st
}

impl LedgerState {
    fn var(&mut self, v: Var, hi: Option<i64>) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.names.len();
        self.index.insert(v, i);
        self.names.push(v);
        self.bounds.push(Interval { lo: 0, hi });
        i
    }

    fn id(&self, v: Var) -> usize {
        self.index[&v]
    }

    fn push(&mut self, label: String, terms: Vec<(i64, Var)>, relation: Relation, rhs: i64) {
        let terms = terms.into_iter().map(|(c, v)| (c, self.id(v))).collect();
        self.constraints.push(Constraint {
            label,
            terms,
            relation,
            rhs,
        });
    }

    /// Half the dimension of `H^m(⊗²)`, i.e. `dim_m(E_r ⊗ E_r)`.
    fn half(&self, m: usize) -> i64 {
        self.tensor[m] / 2
    }

    fn install(&mut self) {
        use Rank::*;
        use Relation::*;
        let top = self.top;
        for m in 0..=top {
            let (t, s) = (self.tensor[m], self.sym[m]);
            self.var(Var::Lambda(m), None);
            self.var(Var::Rank(D1, m), Some(t.min(s)));
            self.var(Var::Rank(K2, m), Some(t.min(s)));
            self.var(Var::Rank(K1, m), Some(t));
            self.var(Var::Rank(D2, m), Some(t));
            for c in Complex::ALL {
                self.var(Var::Delta(c, m), if m == 0 { Some(0) } else { None });
                self.var(Var::Col0(c, m), None);
                self.var(Var::Col1(c, m), None);
                self.var(Var::Col2(c, m), None);
            }
        }
        for m in 0..=top {
            let (t, s) = (self.tensor[m], self.sym[m]);
            let lam = Var::Lambda(m);
            let r = |k| Var::Rank(k, m);
            // maps into or out of Λ² are bounded by λ
            self.push(
                format!("rk_k1_{m} ≤ λ_{m}"),
                vec![(1, r(K1)), (-1, lam)],
                Le,
                0,
            );
            self.push(
                format!("rk_d2_{m} ≤ λ_{m}"),
                vec![(1, r(D2)), (-1, lam)],
                Le,
                0,
            );

            // E_∞ entries of each complex
            for c in Complex::ALL {
                let (first, second) = c.maps();
                let (lam0, lam2) = c.lambda_columns();
                // column 0: dim - first - δ_m
                let mut terms = vec![(1, Var::Col0(c, m)), (1, r(first)), (1, Var::Delta(c, m))];
                if lam0 {
                    terms.push((-1, lam));
                }
                self.push(
                    format!("{} column 0, row {m}", c.short()),
                    terms,
                    Eq,
                    if lam0 { 0 } else { s },
                );
                // column 1: T - first - second
                self.push(
                    format!("{} column 1, row {m}", c.short()),
                    vec![(1, Var::Col1(c, m)), (1, r(first)), (1, r(second))],
                    Eq,
                    t,
                );
                // column 2: dim2 - second - δ_{m+1}
                let mut terms = vec![(1, Var::Col2(c, m)), (1, r(second))];
                if m < top {
                    terms.push((1, Var::Delta(c, m + 1)));
                }
                if lam2 {
                    terms.push((-1, lam));
                }
                self.push(
                    format!("{} column 2, row {m}", c.short()),
                    terms,
                    Eq,
                    if lam2 { 0 } else { s },
                );
            }

            // the norm map 1 + τ factors through both triangles
            if m <= self.window {
                let d = self.half(m);
                let c = self.squares[m];
                let norm_rank = d - c;
                let norm_kernel = d + c;
                self.push(
                    format!("rk(1+τ)_{m} = {norm_rank} ≤ rk_d1_{m}"),
                    vec![(-1, r(D1))],
                    Le,
                    -norm_rank,
                );
                self.push(
                    format!("rk_d1_{m} ≤ rk_k1_{m}"),
                    vec![(1, r(D1)), (-1, r(K1))],
                    Le,
                    0,
                );
                self.push(
                    format!("rk_k1_{m} ≤ ker κ²_{m}"),
                    vec![(1, r(K1)), (1, r(K2))],
                    Le,
                    t,
                );
                self.push(
                    format!("ker κ²_{m} ≤ ker d²_{m}"),
                    vec![(1, r(D2)), (-1, r(K2))],
                    Le,
                    0,
                );
                self.push(
                    format!("ker d²_{m} ≤ ker(1+τ)_{m} = {norm_kernel}"),
                    vec![(-1, r(D2))],
                    Le,
                    norm_kernel - t,
                );
            }
        }
        // abutments in total degree n
        for c in Complex::ALL {
            for n in 0..=top {
                let mut terms = vec![(1, Var::Col0(c, n))];
                if n >= 1 {
                    terms.push((1, Var::Col1(c, n - 1)));
                }
                if n >= 2 {
                    terms.push((1, Var::Col2(c, n - 2)));
                }
                let a = self.abutments[&c][n];
                self.push(
                    format!("{} abutment in degree {n} is {a}", c.short()),
                    terms,
                    Relation::Eq,
                    a,
                );
            }
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Last degree the ledger resolves: `min(max_degree, N)`.
    pub fn resolved_through(&self) -> usize {
        self.max_degree.min(self.window)
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn tensor_dims(&self) -> &[i64] {
        &self.tensor[..=self.max_degree]
    }

    pub fn sym_dims(&self) -> &[i64] {
        &self.sym[..=self.max_degree]
    }

    pub fn abutment(&self, c: Complex) -> &[i64] {
        &self.abutments[&c][..=self.max_degree]
    }

    pub fn is_solved(&self) -> bool {
        self.solved
    }

    pub fn trace(&self) -> &[TraceEntry] {
        &self.trace
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    fn get(&self, v: Var) -> Option<i64> {
        self.bounds[self.id(v)].value()
    }

    pub fn lambda(&self, m: usize) -> Option<i64> {
        self.get(Var::Lambda(m))
    }

    pub fn rank(&self, k: Rank, m: usize) -> Option<i64> {
        self.get(Var::Rank(k, m))
    }

    pub fn delta(&self, c: Complex, m: usize) -> Option<i64> {
        self.get(Var::Delta(c, m))
    }

    /// The window unknowns `λ_m` and the four ranks for `m <= resolved_through`.
    fn window_unknowns(&self) -> Vec<Var> {
        (0..=self.resolved_through())
            .flat_map(|m| std::iter::once(Var::Lambda(m)).chain(Rank::ALL.map(|k| Var::Rank(k, m))))
            .collect()
    }

    /// Propagates constraints in their installation order.
    pub fn solve(self) -> Result<LedgerState, LedgerError> {
        let order: Vec<usize> = (0..self.constraints.len()).collect();
        self.solve_with_order(&order)
    }

    /// Propagates constraints, visiting them in the given order on every
    /// sweep, until nothing narrows.
    pub fn solve_with_order(mut self, order: &[usize]) -> Result<LedgerState, LedgerError> {
        assert_eq!(
            order.len(),
            self.constraints.len(),
            "order must be a permutation"
        );
        for (i, b) in self.bounds.iter().enumerate() {
            if let Some(v) = b.value() {
                self.trace.push(TraceEntry {
                    variable: self.names[i].to_string(),
                    value: v,
                    constraint: "domain".into(),
                });
            }
        }
        loop {
            let mut changed = false;
            for &ci in order {
                changed |= self.propagate(ci)?;
            }
            if !changed {
                break;
            }
        }
        let open: Vec<String> = self
            .window_unknowns()
            .into_iter()
            .filter(|&v| self.get(v).is_none())
            .map(|v| v.to_string())
            .collect();
        if !open.is_empty() {
            return Err(LedgerError::Undetermined(open));
        }
        self.solved = true;
        Ok(self)
    }

    fn propagate(&mut self, ci: usize) -> Result<bool, LedgerError> {
        let con = &self.constraints[ci];
        let mut narrowed: Vec<(usize, Interval)> = Vec::new();
        // Σ c x ≤ rhs, and for equalities also Σ (-c) x ≤ -rhs
        let sides: &[i64] = match con.relation {
            Relation::Le => &[1],
            Relation::Eq => &[1, -1],
        };
        for &sign in sides {
            let rhs = sign * con.rhs;
            let mins: Vec<Option<i64>> = con
                .terms
                .iter()
                .map(|&(c, v)| {
                    let c = sign * c;
                    let b = self.bounds[v];
                    if c > 0 {
                        Some(c * b.lo)
                    } else {
                        b.hi.map(|h| c * h)
                    }
                })
                .collect();
            for (j, &(c, v)) in con.terms.iter().enumerate() {
                let c = sign * c;
                let rest: Option<i64> = mins
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .try_fold(0i64, |acc, (_, m)| m.map(|m| acc + m));
                let Some(rest) = rest else { continue };
                let room = rhs - rest;
                let mut b = narrowed
                    .iter()
                    .rev()
                    .find(|(u, _)| *u == v)
                    .map_or(self.bounds[v], |(_, b)| *b);
                if c > 0 {
                    let hi = room.div_euclid(c);
                    if b.hi.is_none_or(|h| hi < h) {
                        b.hi = Some(hi);
                        narrowed.push((v, b));
                    }
                } else {
                    let lo = -(room.div_euclid(-c));
                    if lo > b.lo {
                        b.lo = lo;
                        narrowed.push((v, b));
                    }
                }
            }
        }
        let label = con.label.clone();
        let changed = !narrowed.is_empty();
        for (v, b) in narrowed {
            let old = self.bounds[v];
            let b = Interval {
                lo: b.lo.max(old.lo),
                hi: match (b.hi, old.hi) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                },
            };
            if let Some(h) = b.hi {
                if b.lo > h {
                    return Err(LedgerError::Inconsistent {
                        constraint: label,
                        var: self.names[v].to_string(),
                        lo: b.lo,
                        hi: h,
                    });
                }
            }
            if old.value().is_none() {
                if let Some(val) = b.value() {
                    self.trace.push(TraceEntry {
                        variable: self.names[v].to_string(),
                        value: val,
                        constraint: label.clone(),
                    });
                }
            }
            self.bounds[v] = b;
        }
        Ok(changed)
    }

    fn require_solved(&self) -> Result<(), LedgerError> {
        if self.solved {
            Ok(())
        } else {
            Err(LedgerError::Unsolved)
        }
    }

    /// `dim H^m(Λ^{2(r)})` for `m <= resolved_through`.
    pub fn lambda_series(&self) -> Result<TruncatedSeries, LedgerError> {
        self.require_solved()?;
        let vals = (0..=self.resolved_through()).map(|m| self.lambda(m).expect("resolved"));
        Ok(TruncatedSeries::from_ints(vals))
    }

    fn gamma_at(&self, m: usize) -> Option<i64> {
        let here = self.tensor[m] - self.rank(Rank::D2, m)?;
        let prev = if m == 0 {
            0
        } else {
            self.lambda(m - 1)? - self.rank(Rank::D2, m - 1)?
        };
        Some(here + prev)
    }

    /// `dim H^m(Γ^{2(r)}) = (dim⊗_m - rk_d2_m) + (λ_{m-1} - rk_d2_{m-1})`
    /// from `0 → Γ² → ⊗² → Λ² → 0`. When the whole window is resolved this
    /// also covers degree `N + 1`, where `⊗²` vanishes.
    pub fn gamma_series(&self) -> Result<TruncatedSeries, LedgerError> {
        self.require_solved()?;
        let mut vals: Vec<i64> = (0..=self.resolved_through())
            .map(|m| self.gamma_at(m).expect("resolved"))
            .collect();
        let next = self.resolved_through() + 1;
        if next == self.window + 1 {
            if let Some(g) = self.gamma_at(next) {
                vals.push(g);
            }
        }
        Ok(TruncatedSeries::from_ints(vals))
    }

    /// Per total degree `n <= resolved_through`, checks
    /// `Σ_{k<=n} (-1)^k (E1_k - abutment_k) = (-1)^n X_n`, where `X_n` is
    /// the total rank of differentials leaving total degree `n`.
    pub fn euler_audit(&self, c: Complex) -> Result<Vec<EulerRow>, LedgerError> {
        self.require_solved()?;
        let (first, second) = c.maps();
        let (lam0, lam2) = c.lambda_columns();
        let dim = |is_lambda: bool, m: usize| {
            if is_lambda {
                self.lambda(m).expect("resolved")
            } else {
                self.sym[m]
            }
        };
        let dim0 = |m| dim(lam0, m);
        let dim2 = |m| dim(lam2, m);
        let mut rows = Vec::new();
        let mut acc = 0i64;
        for (n, &abut) in self.abutments[&c]
            .iter()
            .enumerate()
            .take(self.resolved_through() + 1)
        {
            let mut e1 = dim0(n);
            if n >= 1 {
                e1 += self.tensor[n - 1];
            }
            if n >= 2 {
                e1 += dim2(n - 2);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            acc += sign * (e1 - abut);
            let mut leaving =
                self.rank(first, n).expect("resolved") + self.delta(c, n).unwrap_or(0);
            if n >= 1 {
                leaving += self.rank(second, n - 1).expect("resolved");
            }
            rows.push(EulerRow {
                degree: n,
                e1,
                abutment: abut,
                alternating_sum: acc,
                leaving_rank: leaving,
                holds: acc == sign * leaving && self.delta(c, n).is_some(),
            });
        }
        Ok(rows)
    }

    /// Rows of the resolved rank table.
    pub fn table(&self) -> Result<Vec<LedgerRow>, LedgerError> {
        self.require_solved()?;
        let gamma = self.gamma_series()?;
        Ok((0..=self.resolved_through())
            .map(|m| LedgerRow {
                degree: m,
                tensor: self.tensor[m],
                sym: self.sym[m],
                lambda: self.lambda(m).expect("resolved"),
                gamma: gamma
                    .get(m)
                    .and_then(|g| g.to_integer().to_i64())
                    .expect("integral"),
                rk_d1: self.rank(Rank::D1, m).expect("resolved"),
                rk_d2: self.rank(Rank::D2, m).expect("resolved"),
                rk_k1: self.rank(Rank::K1, m).expect("resolved"),
                rk_k2: self.rank(Rank::K2, m).expect("resolved"),
            })
            .collect())
    }
}

/// One line of the Euler-characteristic audit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerRow {
    pub degree: usize,
    pub e1: i64,
    pub abutment: i64,
    pub alternating_sum: i64,
    pub leaving_rank: i64,
    pub holds: bool,
}

/// One degree of the resolved ledger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub degree: usize,
    pub tensor: i64,
    pub sym: i64,
    pub lambda: i64,
    pub gamma: i64,
    pub rk_d1: i64,
    pub rk_d2: i64,
    pub rk_k1: i64,
    pub rk_k2: i64,
}
