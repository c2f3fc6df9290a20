//! Brute-force isotypic multiplicities from explicit matrices.
//!
//! A module is given by integer matrices for the adjacent transpositions.
//! The multiplicity of `V_λ` is the rank of the Young symmetrizer
//! `c_λ = a_λ b_λ` acting on the module, computed by exact Gaussian
//! elimination. Nothing here consults the character table.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{all_permutations, compose, factorial, reduced_word, Partition, SymError};

type SparseVec = BTreeMap<usize, BigInt>;

/// Square integer matrix stored by columns; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn identity(dim: usize) -> Self {
        SparseMatrix {
            cols: (0..dim).map(|j| vec![(j, BigInt::one())]).collect(),
        }
    }

    /// Signed permutation matrix: `e_j ↦ sign_j · e_{image_j}`.
    pub fn signed_permutation(images: &[(usize, i64)]) -> Self {
        SparseMatrix {
            cols: images
                .iter()
                .map(|&(i, s)| vec![(i, BigInt::from(s))])
                .collect(),
        }
    }

    /// From row-major dense entries.
    pub fn from_dense(rows: &[Vec<BigInt>]) -> Self {
        let dim = rows.len();
        SparseMatrix {
            cols: (0..dim)
                .map(|j| {
                    (0..dim)
                        .filter(|&i| !rows[i][j].is_zero())
                        .map(|i| (i, rows[i][j].clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let dim = self.dim();
        let mut rows = vec![vec![BigInt::zero(); dim]; dim];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, x) in v {
            for (i, a) in &self.cols[*j] {
                *out.entry(*i).or_insert_with(BigInt::zero) += a * x;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }
}

/// Element of the integral group algebra of `S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl GroupAlgebraElement {
    pub fn terms(&self) -> &BTreeMap<Vec<u8>, BigInt> {
        &self.terms
    }

    pub fn mul(&self, other: &GroupAlgebraElement) -> GroupAlgebraElement {
        let mut terms = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                *terms.entry(compose(g, h)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        terms.retain(|_, v: &mut BigInt| !v.is_zero());
        GroupAlgebraElement { n: self.n, terms }
    }

    pub fn scale(&self, k: &BigInt) -> GroupAlgebraElement {
        let mut terms: BTreeMap<_, _> =
            self.terms.iter().map(|(g, a)| (g.clone(), a * k)).collect();
        terms.retain(|_, v: &mut BigInt| !v.is_zero());
        GroupAlgebraElement { n: self.n, terms }
    }
}

/// `a_λ`, `b_λ` and `c_λ = a_λ b_λ` for the row-filled tableau of shape λ,
/// together with the scalar `κ` in `c_λ² = κ c_λ`.
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    pub row_sum: GroupAlgebraElement,
    pub column_sum: GroupAlgebraElement,
    pub element: GroupAlgebraElement,
    pub kappa: BigInt,
}

impl YoungSymmetrizer {
    /// `dim V_λ = n! / κ`.
    pub fn dim(&self) -> BigInt {
        BigInt::from(factorial(self.element.n)) / &self.kappa
    }

    /// `e_λ = (dim V_λ / n!) c_λ`, returned with rational coefficients.
    pub fn idempotent(&self) -> BTreeMap<Vec<u8>, BigRational> {
        self.element
            .terms
            .iter()
            .map(|(g, a)| (g.clone(), BigRational::new(a.clone(), self.kappa.clone())))
            .collect()
    }
}

fn perm_sign(p: &[u8]) -> i64 {
    if reduced_word(p).len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Builds the Young symmetrizer and checks `c_λ² = κ c_λ` with `κ > 0`.
pub fn young_symmetrizer(lambda: &Partition) -> YoungSymmetrizer {
    let n = lambda.n();
    // tableau: row i holds consecutive entries
    let mut row_of = Vec::with_capacity(n);
    let mut col_of = Vec::with_capacity(n);
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            row_of.push(i);
            col_of.push(j);
        }
    }
    let mut rows = BTreeMap::new();
    let mut cols = BTreeMap::new();
    for g in all_permutations(n) {
        if (0..n).all(|x| row_of[g[x] as usize] == row_of[x]) {
            rows.insert(g.clone(), BigInt::one());
        }
        if (0..n).all(|x| col_of[g[x] as usize] == col_of[x]) {
            let s = perm_sign(&g);
            cols.insert(g, BigInt::from(s));
        }
    }
    let a = GroupAlgebraElement { n, terms: rows };
    let b = GroupAlgebraElement { n, terms: cols };
    let c = a.mul(&b);
    let sq = c.mul(&c);
    let id: Vec<u8> = (0..n as u8).collect();
    let kappa = sq.terms.get(&id).cloned().unwrap_or_default() / c.terms.get(&id).cloned().unwrap();
    assert!(
        kappa.is_positive() && sq == c.scale(&kappa),
        "Young symmetrizer is not quasi-idempotent"
    );
    YoungSymmetrizer {
        row_sum: a,
        column_sum: b,
        element: c,
        kappa,
    }
}

/// A finite-rank `S_n`-representation over the integers, given by the
/// matrices of the adjacent transpositions `s_i = (i, i+1)`.
#[derive(Clone, Debug)]
pub struct ExplicitModule {
    n: usize,
    dim: usize,
    gens: Vec<SparseMatrix>,
    grading: Option<Vec<u64>>,
}

impl ExplicitModule {
    /// Checks the Coxeter relations and, if present, that the grading is
    /// preserved.
    pub fn new(
        n: usize,
        dim: usize,
        gens: Vec<SparseMatrix>,
        grading: Option<Vec<u64>>,
    ) -> Result<Self, SymError> {
        let bad = |m: String| Err(SymError::InvalidAction(m));
        if n == 0 {
            return bad("n must be positive".into());
        }
        if gens.len() != n - 1 {
            return bad(format!("expected {} generators, got {}", n - 1, gens.len()));
        }
        if gens
            .iter()
            .any(|g| g.dim() != dim || g.cols.iter().flatten().any(|(i, _)| *i >= dim))
        {
            return bad("generator matrices have inconsistent sizes".into());
        }
        if let Some(gr) = &grading {
            if gr.len() != dim {
                return bad(format!(
                    "grading has {} entries for dimension {dim}",
                    gr.len()
                ));
            }
            for (k, g) in gens.iter().enumerate() {
                for (j, col) in g.cols.iter().enumerate() {
                    if col.iter().any(|(i, _)| gr[*i] != gr[j]) {
                        return bad(format!("s_{} does not preserve the grading", k + 1));
                    }
                }
            }
        }
        let m = ExplicitModule {
            n,
            dim,
            gens,
            grading,
        };
        for i in 0..n.saturating_sub(1) {
            for j in i..n - 1 {
                let order = match j - i {
                    0 => 1,
                    1 => 3,
                    _ => 2,
                };
                let word: Vec<usize> = (0..order).flat_map(|_| [i, j]).collect();
                for b in 0..dim {
                    let e = SparseVec::from([(b, BigInt::one())]);
                    if m.apply_word(&word, &e) != e {
                        return bad(format!(
                            "relation (s_{} s_{})^{} = 1 fails",
                            i + 1,
                            j + 1,
                            order
                        ));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Permutation module of an action `act(g, x)` on `0..points`, with an
    /// optional sign `±1` per generator and point.
    pub fn from_signed_action(
        n: usize,
        points: usize,
        act: impl Fn(&[u8], usize) -> (usize, i64),
        grading: Option<Vec<u64>>,
    ) -> Result<Self, SymError> {
        let gens = (0..n.saturating_sub(1))
            .map(|i| {
                let mut s: Vec<u8> = (0..n as u8).collect();
                s.swap(i, i + 1);
                let images: Vec<(usize, i64)> = (0..points).map(|x| act(&s, x)).collect();
                if images.iter().any(|&(y, _)| y >= points) {
                    return Err(SymError::InvalidAction("point mapped out of range".into()));
                }
                Ok(SparseMatrix::signed_permutation(&images))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(n, points, gens, grading)
    }

    pub fn from_action(
        n: usize,
        points: usize,
        act: impl Fn(&[u8], usize) -> usize,
        grading: Option<Vec<u64>>,
    ) -> Result<Self, SymError> {
        Self::from_signed_action(n, points, |g, x| (act(g, x), 1), grading)
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_action(n, 1, |_, _| 0, None).expect("trivial action")
    }

    pub fn sign(n: usize) -> Self {
        Self::from_signed_action(n, 1, |g, _| (0, perm_sign(g)), None).expect("sign action")
    }

    /// Left regular module, basis the group elements.
    pub fn regular(n: usize) -> Self {
        let elems = all_permutations(n);
        Self::from_action(
            n,
            elems.len(),
            |g, x| super::perm_rank(&compose(g, &elems[x])),
            None,
        )
        .expect("regular action")
    }

    /// The group algebra under conjugation.
    pub fn conjugation(n: usize) -> Self {
        let elems = all_permutations(n);
        Self::from_action(
            n,
            elems.len(),
            |g, x| super::perm_rank(&compose(&compose(g, &elems[x]), &super::inverse(g))),
            None,
        )
        .expect("conjugation action")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grading(&self) -> Option<&[u64]> {
        self.grading.as_deref()
    }

    pub fn generators(&self) -> &[SparseMatrix] {
        &self.gens
    }

    pub fn direct_sum(&self, other: &ExplicitModule) -> Result<ExplicitModule, SymError> {
        if self.n != other.n {
            return Err(SymError::MismatchedN(self.n, other.n));
        }
        let d = self.dim();
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let mut cols = a.cols.clone();
                cols.extend(
                    b.cols
                        .iter()
                        .map(|c| c.iter().map(|(i, v)| (i + d, v.clone())).collect()),
                );
                SparseMatrix { cols }
            })
            .collect();
        let grading = match (&self.grading, &other.grading) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        Ok(ExplicitModule {
            n: self.n,
            dim: d + other.dim,
            gens,
            grading,
        })
    }

    /// Change of basis `ρ(s) ↦ U ρ(s) U⁻¹` by a unit upper-triangular
    /// integer matrix `U` (row-major). Drops the grading.
    pub fn conjugate_by(&self, u: &[Vec<BigInt>]) -> Result<ExplicitModule, SymError> {
        let d = self.dim();
        let unit = u.len() == d
            && u.iter().enumerate().all(|(i, row)| {
                row.len() == d && row[i].is_one() && row[..i].iter().all(Zero::is_zero)
            });
        if !unit {
            return Err(SymError::InvalidAction(
                "change of basis must be unit upper-triangular".into(),
            ));
        }
        // back substitution for U⁻¹
        let mut inv = vec![vec![BigInt::zero(); d]; d];
        #[allow(clippy::needless_range_loop)]
        for j in 0..d {
            for i in (0..=j).rev() {
                let mut s = if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                for k in i + 1..=j {
                    s -= &u[i][k] * &inv[k][j];
                }
                inv[i][j] = s;
            }
        }
        let mm = |a: &[Vec<BigInt>], b: &[Vec<BigInt>]| -> Vec<Vec<BigInt>> {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).fold(BigInt::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                        .collect()
                })
                .collect()
        };
        let gens = self
            .gens
            .iter()
            .map(|g| SparseMatrix::from_dense(&mm(&mm(u, &g.to_dense()), &inv)))
            .collect();
        ExplicitModule::new(self.n, d, gens, None)
    }

    /// `ρ(s_{w_1}) ... ρ(s_{w_k}) v`
    fn apply_word(&self, word: &[usize], v: &SparseVec) -> SparseVec {
        word.iter()
            .rev()
            .fold(v.clone(), |acc, &i| self.gens[i].apply(&acc))
    }

    fn apply_perm(&self, g: &[u8], v: &SparseVec) -> SparseVec {
        self.apply_word(&reduced_word(g), v)
    }

    fn apply_element(&self, x: &GroupAlgebraElement, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (g, a) in &x.terms {
            for (i, y) in self.apply_perm(g, v) {
                *out.entry(i).or_insert_with(BigInt::zero) += a * y;
            }
        }
        out.retain(|_, x| !x.is_zero());
        out
    }

    /// Trace of `ρ(g)`.
    pub fn trace(&self, g: &[u8]) -> BigInt {
        (0..self.dim())
            .map(|b| {
                self.apply_perm(g, &SparseVec::from([(b, BigInt::one())]))
                    .remove(&b)
                    .unwrap_or_default()
            })
            .sum()
    }

    /// Splits a set of basis indices into blocks that no generator connects.
    fn components(&self, basis: &[usize]) -> Vec<Vec<usize>> {
        let pos: BTreeMap<usize, usize> = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut parent: Vec<usize> = (0..basis.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.gens {
            for (k, &b) in basis.iter().enumerate() {
                for (i, _) in &g.cols[b] {
                    if let Some(&k2) = pos.get(i) {
                        let (x, y) = (find(&mut parent, k), find(&mut parent, k2));
                        parent[x] = y;
                    }
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &b) in basis.iter().enumerate() {
            groups.entry(find(&mut parent, k)).or_default().push(b);
        }
        groups.into_values().collect()
    }
}

/// Rank over the rationals of a list of sparse integer vectors.
fn rank(vectors: Vec<SparseVec>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for v in vectors {
        let mut v: BTreeMap<usize, BigRational> = v
            .into_iter()
            .map(|(i, x)| (i, BigRational::from_integer(x)))
            .collect();
        while let Some((&lead, _)) = v.iter().next() {
            match pivots.get(&lead) {
                Some(row) => {
                    let f = v[&lead].clone() / &row[&lead];
                    for (i, x) in row {
                        let e = v.entry(*i).or_insert_with(BigRational::zero);
                        *e -= &f * x;
                    }
                    v.retain(|_, x| !x.is_zero());
                }
                None => {
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Multiplicity of `V_λ` in `m`, or in its degree-`degree` part.
pub fn oracle_isotypic_dimension(
    m: &ExplicitModule,
    lambda: &Partition,
    degree: Option<u64>,
) -> Result<usize, SymError> {
    if lambda.n() != m.n {
        return Err(SymError::MismatchedN(lambda.n(), m.n));
    }
    let basis: Vec<usize> = match degree {
        None => (0..m.dim()).collect(),
        Some(d) => {
            let gr = m.grading.as_ref().ok_or(SymError::NotGraded)?;
            (0..m.dim()).filter(|&b| gr[b] == d).collect()
        }
    };
    let y = young_symmetrizer(lambda);
    let mut total = 0;
    for comp in m.components(&basis) {
        let images = comp
            .iter()
            .map(|&b| {
                let v = SparseVec::from([(b, BigInt::one())]);
                m.apply_element(&y.row_sum, &m.apply_element(&y.column_sum, &v))
            })
            .collect();
        total += rank(images);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::super::partitions;
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let reg = ExplicitModule::regular(3);
        assert_eq!(
            oracle_isotypic_dimension(&reg, &part(&[2, 1]), None).unwrap(),
            2
        );
        let conj = ExplicitModule::conjugation(3);
        assert_eq!(
            oracle_isotypic_dimension(&conj, &part(&[3]), None).unwrap(),
            3
        );
        let triv = ExplicitModule::trivial(3);
        assert_eq!(
            oracle_isotypic_dimension(&triv, &part(&[1, 1, 1]), None).unwrap(),
            0
        );
    }

    #[test]
    fn symmetrizer_dimensions() {
        for n in 1..=5 {
            let dims: Vec<BigInt> = partitions(n)
                .unwrap()
                .iter()
                .map(|l| young_symmetrizer(l).dim())
                .collect();
            let sum: BigInt = dims.iter().map(|d| d * d).sum();
            assert_eq!(sum, BigInt::from(factorial(n)));
        }
        assert_eq!(young_symmetrizer(&part(&[2, 1])).dim(), BigInt::from(2));
        assert_eq!(young_symmetrizer(&part(&[3, 2])).dim(), BigInt::from(5));
    }

    #[test]
    fn idempotent_squares_to_itself() {
        let y = young_symmetrizer(&part(&[2, 1]));
        let e = y.idempotent();
        let mut sq: BTreeMap<Vec<u8>, BigRational> = BTreeMap::new();
        for (g, a) in &e {
            for (h, b) in &e {
                *sq.entry(compose(g, h)).or_insert_with(BigRational::zero) += a * b;
            }
        }
        sq.retain(|_, v| !v.is_zero());
        assert_eq!(sq, e);
    }

    #[test]
    fn regular_module_multiplicities_are_dimensions() {
        for n in 1..=4 {
            let reg = ExplicitModule::regular(n);
            for l in partitions(n).unwrap() {
                let d = young_symmetrizer(&l).dim();
                assert_eq!(
                    BigInt::from(oracle_isotypic_dimension(&reg, &l, None).unwrap()),
                    d
                );
            }
        }
    }

    #[test]
    fn broken_relations_rejected() {
        // s_2 acting trivially forces (s_1 s_2)^3 = s_1
        let bad = ExplicitModule::new(
            3,
            3,
            vec![
                SparseMatrix::signed_permutation(&[(1, 1), (0, 1), (2, 1)]),
                SparseMatrix::identity(3),
            ],
            None,
        );
        assert!(matches!(bad, Err(SymError::InvalidAction(_))));
        let not_graded = ExplicitModule::new(
            2,
            2,
            vec![SparseMatrix::signed_permutation(&[(1, 1), (0, 1)])],
            Some(vec![0, 2]),
        );
        assert!(not_graded.is_err());
    }

    #[test]
    fn graded_degree_filter() {
        // S_2 swapping two degree-2 vectors, plus a fixed degree-0 vector
        let m = ExplicitModule::from_action(
            2,
            3,
            |g, x| if x == 0 { 0 } else { 1 + g[x - 1] as usize },
            Some(vec![0, 2, 2]),
        )
        .unwrap();
        assert_eq!(
            oracle_isotypic_dimension(&m, &part(&[2]), Some(0)).unwrap(),
            1
        );
        assert_eq!(
            oracle_isotypic_dimension(&m, &part(&[1, 1]), Some(0)).unwrap(),
            0
        );
        assert_eq!(
            oracle_isotypic_dimension(&m, &part(&[2]), Some(2)).unwrap(),
            1
        );
        assert_eq!(
            oracle_isotypic_dimension(&m, &part(&[1, 1]), Some(2)).unwrap(),
            1
        );
        assert_eq!(
            oracle_isotypic_dimension(&m, &part(&[2]), Some(4)).unwrap(),
            0
        );
        assert_eq!(
            oracle_isotypic_dimension(&ExplicitModule::trivial(2), &part(&[2]), Some(0)),
            Err(SymError::NotGraded)
        );
    }

    mod props {
        use super::super::super::character_table;
        use super::*;
        use proptest::prelude::*;

        /// Permutation modules on points, ordered pairs and 2-subsets, plus
        /// the small named ones.
        fn piece(n: usize, kind: u8) -> ExplicitModule {
            match kind % 6 {
                0 => ExplicitModule::trivial(n),
                1 => ExplicitModule::sign(n),
                2 => ExplicitModule::from_action(n, n, |g, x| g[x] as usize, None).unwrap(),
                3 => {
                    let pairs: Vec<(usize, usize)> =
                        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
                    ExplicitModule::from_action(
                        n,
                        pairs.len(),
                        |g, x| {
                            let (a, b) = pairs[x];
                            pairs
                                .iter()
                                .position(|&q| q == (g[a] as usize, g[b] as usize))
                                .unwrap()
                        },
                        None,
                    )
                    .unwrap()
                }
                4 => ExplicitModule::regular(n),
                _ => ExplicitModule::conjugation(n),
            }
        }

        fn random_module(n: usize, kinds: &[u8], noise: &[i64]) -> ExplicitModule {
            let mut m = piece(n, kinds[0]);
            for &k in &kinds[1..] {
                let next = piece(n, k);
                if m.dim() + next.dim() <= 60 {
                    m = m.direct_sum(&next).unwrap();
                }
            }
            let d = m.dim();
            let mut it = noise.iter().cycle();
            let u: Vec<Vec<BigInt>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| match j.cmp(&i) {
                            std::cmp::Ordering::Less => BigInt::zero(),
                            std::cmp::Ordering::Equal => BigInt::one(),
                            std::cmp::Ordering::Greater => BigInt::from(*it.next().unwrap()),
                        })
                        .collect()
                })
                .collect();
            m.conjugate_by(&u).unwrap()
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn multiplicities_account_for_dimension(
                n in 1usize..=4,
                kinds in prop::collection::vec(any::<u8>(), 1..4),
                noise in prop::collection::vec(-2i64..=2, 1..16),
            ) {
                let m = random_module(n, &kinds, &noise);
                let total: BigInt = partitions(n)
                    .unwrap()
                    .iter()
                    .map(|l| young_symmetrizer(l).dim() * BigInt::from(oracle_isotypic_dimension(&m, l, None).unwrap()))
                    .sum();
                prop_assert_eq!(total, BigInt::from(m.dim()));
            }

            #[test]
            fn multiplicities_match_character_inner_products(
                n in 1usize..=4,
                kinds in prop::collection::vec(any::<u8>(), 1..4),
                noise in prop::collection::vec(-2i64..=2, 1..16),
            ) {
                let m = random_module(n, &kinds, &noise);
                let table = character_table(n).unwrap();
                let chi: Vec<i64> = table
                    .classes()
                    .iter()
                    .map(|c| i64::try_from(m.trace(&c.representative())).unwrap())
                    .collect();
                for l in table.rows() {
                    let ip = table.inner_product(&chi, table.character(l).unwrap()).unwrap();
                    prop_assert_eq!(ip, oracle_isotypic_dimension(&m, l, None).unwrap() as i64);
                }
            }
        }
    }
}
