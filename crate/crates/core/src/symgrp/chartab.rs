//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::fmt;

use super::{
    centralizer_order, check_range, class_size, factorial, partitions_unchecked, CycleType,
    Partition, SymError,
};

/// A class function: one value per conjugacy class, identity class first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter<T> {
    n: usize,
    classes: Vec<CycleType>,
    values: Vec<T>,
}

impl<T> CentralCharacter<T> {
    /// Values must be listed in [`class_order`] order.
    pub fn new(n: usize, values: Vec<T>) -> Self {
        let classes = class_order(n);
        assert_eq!(classes.len(), values.len(), "one value per conjugacy class");
        CentralCharacter { n, classes, values }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(&CycleType) -> T) -> Self {
        let classes = class_order(n);
        let values = classes.iter().map(&mut f).collect();
        CentralCharacter { n, classes, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn value(&self, c: &CycleType) -> Option<&T> {
        self.classes
            .iter()
            .position(|x| x == c)
            .map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&CycleType, &T)> {
        self.classes.iter().zip(&self.values)
    }
}

impl<T: fmt::Display> fmt::Display for CentralCharacter<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{c}: {v}")?;
        }
        Ok(())
    }
}

/// Conjugacy classes, identity first (the partitions of `n` reversed).
pub(crate) fn class_order(n: usize) -> Vec<CycleType> {
    let mut c = partitions_unchecked(n);
    c.reverse();
    c
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    rows: Vec<Partition>,
    classes: Vec<CycleType>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    fn row_index(&self, lambda: &Partition) -> Option<usize> {
        self.rows.iter().position(|x| x == lambda)
    }

    pub fn character(&self, lambda: &Partition) -> Option<&[i64]> {
        self.row_index(lambda).map(|i| self.values[i].as_slice())
    }

    pub fn value(&self, lambda: &Partition, c: &CycleType) -> Option<i64> {
        let i = self.row_index(lambda)?;
        let j = self.classes.iter().position(|x| x == c)?;
        Some(self.values[i][j])
    }

    pub fn dim(&self, lambda: &Partition) -> Option<i64> {
        self.character(lambda).map(|row| row[0])
    }

    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(class_size).collect()
    }

    /// `Σ_c |c| χ(c) ψ(c) / n!`, which must be an integer for genuine
    /// characters.
    pub fn inner_product(&self, chi: &[i64], psi: &[i64]) -> Option<i64> {
        let total: i128 = self
            .class_sizes()
            .iter()
            .zip(chi.iter().zip(psi))
            .map(|(&s, (&a, &b))| s as i128 * a as i128 * b as i128)
            .sum();
        let order = factorial(self.n) as i128;
        (total % order == 0).then(|| (total / order) as i64)
    }

    /// Both orthogonality relations.
    pub fn is_orthogonal(&self) -> bool {
        let order = factorial(self.n) as i64;
        for (i, a) in self.values.iter().enumerate() {
            for (j, b) in self.values.iter().enumerate() {
                let want = if i == j { 1 } else { 0 };
                if self.inner_product(a, b) != Some(want) {
                    return false;
                }
            }
        }
        for (i, ci) in self.classes.iter().enumerate() {
            for j in 0..self.classes.len() {
                let s: i64 = self.values.iter().map(|row| row[i] * row[j]).sum();
                let want = if i == j {
                    centralizer_order(ci) as i64
                } else {
                    0
                };
                if s != want {
                    return false;
                }
            }
        }
        let dims: i64 = self.values.iter().map(|row| row[0] * row[0]).sum();
        dims == order
    }
}

impl fmt::Display for CharacterTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = 2 * self.n + 3;
        write!(f, "{:width$}", "")?;
        for c in &self.classes {
            write!(f, " {:>width$}", c.to_string())?;
        }
        for (lambda, row) in self.rows.iter().zip(&self.values) {
            writeln!(f)?;
            write!(f, "{:width$}", lambda.to_string())?;
            for v in row {
                write!(f, " {v:>width$}")?;
            }
        }
        Ok(())
    }
}

/// Character table of `S_n` for `1 <= n <= 8`.
pub fn character_table(n: usize) -> Result<CharacterTable, SymError> {
    check_range("character_table", n, 1, 8)?;
    let rows = partitions_unchecked(n);
    let classes = class_order(n);
    let values = rows
        .iter()
        .map(|l| classes.iter().map(|c| mn_value(l, c)).collect())
        .collect();
    Ok(CharacterTable {
        n,
        rows,
        classes,
        values,
    })
}

/// `χ_λ(μ)` via beta-sets: removing a rim hook of length `k` moves one bead
/// from `b` to an empty slot `b - k`, with sign `(-1)^(beads jumped)`.
fn mn_value(lambda: &Partition, mu: &CycleType) -> i64 {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    mn_rec(&beta, mu.parts())
}

fn mn_rec(beta: &[usize], mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut next = beta.to_vec();
        next[idx] = b - k;
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t = character_table(2).unwrap();
        assert_eq!(t.classes(), &[part(&[1, 1]), part(&[2])]);
        assert_eq!(t.character(&part(&[2])).unwrap(), &[1, 1]);
        assert_eq!(t.character(&part(&[1, 1])).unwrap(), &[1, -1]);

        let t = character_table(3).unwrap();
        assert_eq!(t.classes(), &[part(&[1, 1, 1]), part(&[2, 1]), part(&[3])]);
        assert_eq!(t.character(&part(&[2, 1])).unwrap(), &[2, 0, -1]);
        assert_eq!(t.character(&part(&[1, 1, 1])).unwrap(), &[1, -1, 1]);
    }

    #[test]
    fn standard_character_of_s3_from_matrices() {
        // the 2-dim reflection representation on {x in Q^3 : Σx = 0}
        // has trace (fixed points - 1)
        let t = character_table(3).unwrap();
        let std: Vec<i64> = t
            .classes()
            .iter()
            .map(|c| c.parts().iter().filter(|&&l| l == 1).count() as i64 - 1)
            .collect();
        assert_eq!(t.character(&part(&[2, 1])).unwrap(), std.as_slice());
    }

    #[test]
    fn orthogonality_through_eight() {
        for n in 1..=8 {
            let t = character_table(n).unwrap();
            assert!(t.is_orthogonal(), "n = {n}");
        }
        assert!(character_table(9).is_err());
    }

    #[test]
    fn sign_and_conjugate_rows() {
        for n in 1..=7 {
            let t = character_table(n).unwrap();
            let sign: Vec<i64> = t
                .classes()
                .iter()
                .map(|c| if (c.n() - c.len()) % 2 == 0 { 1 } else { -1 })
                .collect();
            for l in t.rows() {
                let a = t.character(l).unwrap();
                let b = t.character(&l.conjugate()).unwrap();
                let twisted: Vec<i64> = a.iter().zip(&sign).map(|(x, s)| x * s).collect();
                assert_eq!(twisted.as_slice(), b);
            }
        }
    }
}
