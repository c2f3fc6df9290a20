//! Symmetric groups: partitions, permutations, characters, transitive sets
//! and an explicit-matrix multiplicity oracle.

mod burnside;
mod chartab;
mod oracle;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use burnside::{
    burnside_product, conjugation_set, decompose_action, perm_module_character, transitive_sets,
    BurnsideElement, TransitiveSet, TransitiveSets,
};
pub use chartab::{character_table, CentralCharacter, CharacterTable};
pub use oracle::{
    oracle_isotypic_dimension, young_symmetrizer, ExplicitModule, GroupAlgebraElement, SparseMatrix,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("{what} requires {min} <= n <= {max}, got n = {n}")]
    OutOfRange {
        what: &'static str,
        n: usize,
        min: usize,
        max: usize,
    },
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("elements live over different symmetric groups (S_{0} and S_{1})")]
    MismatchedN(usize, usize),
    #[error("unknown transitive set {label:?} for S_{n}")]
    UnknownLabel { n: usize, label: String },
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("module has no grading")]
    NotGraded,
}

pub(crate) fn check_range(
    what: &'static str,
    n: usize,
    min: usize,
    max: usize,
) -> Result<(), SymError> {
    if n < min || n > max {
        Err(SymError::OutOfRange { what, n, min, max })
    } else {
        Ok(())
    }
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

/// Cycle lengths of a permutation; same shape as a partition.
pub type CycleType = Partition;

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, SymError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SymError::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(1, 1, ..., 1)`, the cycle type of the identity.
    pub fn identity(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition {
            parts: (0..cols)
                .map(|j| self.parts.iter().filter(|&&p| p > j).count())
                .collect(),
        }
    }

    /// Multiplicity `m_j` of each part size `j`, indexed from 0.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.parts.first().copied().unwrap_or(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// A permutation with this cycle type, cycles on consecutive points.
    pub fn representative(&self) -> Vec<u8> {
        let mut perm = Vec::with_capacity(self.n());
        let mut start = 0;
        for &l in &self.parts {
            for i in 0..l {
                perm.push((start + (i + 1) % l) as u8);
            }
            start += l;
        }
        perm
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = SymError;

    /// Accepts `2,1`, `(2,1)` or `2 1`.
    fn from_str(s: &str) -> Result<Self, SymError> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Result<Vec<usize>, _> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect();
        match parts {
            Ok(p) if !p.is_empty() => Partition::new(p),
            _ => Err(SymError::NotAPartition(s.to_string())),
        }
    }
}

/// All partitions of `n` in reverse lexicographic order, `1 <= n <= 12`.
pub fn partitions(n: usize) -> Result<Vec<Partition>, SymError> {
    check_range("partitions", n, 1, 12)?;
    Ok(partitions_unchecked(n))
}

pub(crate) fn partitions_unchecked(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `z_c = Π j^{m_j} m_j!`, the order of the centralizer of any permutation
/// of cycle type `c`.
pub fn centralizer_order(c: &CycleType) -> u64 {
    c.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(j, &m)| (j as u64).pow(m as u32) * factorial(m))
        .product()
}

pub fn class_size(c: &CycleType) -> u64 {
    factorial(c.n()) / centralizer_order(c)
}

/// Cycle type of a permutation given as its image list.
pub fn cycle_type(perm: &[u8]) -> CycleType {
    let mut seen = vec![false; perm.len()];
    let mut lens = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut l = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = perm[x] as usize;
            l += 1;
        }
        lens.push(l);
    }
    Partition::from_unsorted(lens)
}

/// `(a ∘ b)(i) = a(b(i))`
pub fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    b.iter().map(|&i| a[i as usize]).collect()
}

pub fn inverse(a: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u8;
    }
    inv
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

/// Lexicographic rank of a permutation, inverse to [`all_permutations`].
pub fn perm_rank(perm: &[u8]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = perm[i + 1..].iter().filter(|&&x| x < perm[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

/// Writes `perm = s_{w_1} ∘ ... ∘ s_{w_k}` with `s_i` swapping `i` and `i+1`.
pub fn reduced_word(perm: &[u8]) -> Vec<usize> {
    // bubble-sort perm to the identity by right multiplication
    let mut p = perm.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..p.len().saturating_sub(1)).find(|&i| p[i] > p[i + 1]) {
        p.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_lists() {
        assert_eq!(
            partitions(3).unwrap(),
            vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]
        );
        assert_eq!(partitions(2).unwrap(), vec![part(&[2]), part(&[1, 1])]);
        let counts: Vec<usize> = (1..=12).map(|n| partitions(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert!(partitions(0).is_err());
        assert!(partitions(13).is_err());
    }

    #[test]
    fn centralizers_by_enumeration() {
        for n in 1..=5 {
            let perms = all_permutations(n);
            for c in partitions(n).unwrap() {
                let g = c.representative();
                assert_eq!(cycle_type(&g), c);
                let commuting = perms
                    .iter()
                    .filter(|h| compose(h, &g) == compose(&g, h))
                    .count();
                assert_eq!(centralizer_order(&c), commuting as u64, "{c}");
            }
        }
        assert_eq!(centralizer_order(&part(&[1, 1, 1])), 6);
        assert_eq!(centralizer_order(&part(&[2, 1])), 2);
        assert_eq!(centralizer_order(&part(&[3])), 3);
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), part(&[2, 1]));
        assert_eq!("(3)".parse::<Partition>().unwrap(), part(&[3]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    #[test]
    fn permutation_helpers() {
        let perms = all_permutations(4);
        assert_eq!(perms.len(), 24);
        for (i, p) in perms.iter().enumerate() {
            assert_eq!(perm_rank(p), i);
            let w = reduced_word(p);
            let mut q: Vec<u8> = (0..4).collect();
            for &s in &w {
                let mut t: Vec<u8> = (0..4).collect();
                t.swap(s, s + 1);
                q = compose(&q, &t);
            }
            assert_eq!(&q, p);
            assert_eq!(compose(p, &inverse(p)), vec![0, 1, 2, 3]);
        }
    }
}
