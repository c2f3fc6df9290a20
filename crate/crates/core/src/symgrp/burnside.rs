//! Transitive `S_n`-sets and the Burnside semiring.
//!
//! Transitive sets are classified by conjugacy classes of subgroups, which
//! are enumerated once per `n` by closing the trivial group under one extra
//! generator at a time. Products are decomposed by enumerating orbits of
//! the diagonal action and reading off point stabilizers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use super::chartab::{class_order, CentralCharacter};
use super::{
    all_permutations, centralizer_order, check_range, compose, cycle_type, inverse, perm_rank,
    SymError,
};

type Bits = Vec<u64>;
/// elements, generators, least conjugate as bits and as elements
type Found = (Vec<usize>, Vec<usize>, Bits, Vec<usize>);

fn bit_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

/// Multiplication table of `S_n` on lexicographically ranked elements.
struct Sym {
    n: usize,
    elems: Vec<Vec<u8>>,
    mul: Vec<u16>,
    inv: Vec<u16>,
    class: Vec<usize>,
}

impl Sym {
    fn new(n: usize) -> Sym {
        let elems = all_permutations(n);
        let order = elems.len();
        let mut mul = vec![0u16; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * order + j] = perm_rank(&compose(a, b)) as u16;
            }
        }
        let inv = elems
            .iter()
            .map(|a| perm_rank(&inverse(a)) as u16)
            .collect();
        let classes = class_order(n);
        let class = elems
            .iter()
            .map(|a| classes.iter().position(|c| *c == cycle_type(a)).unwrap())
            .collect();
        Sym {
            n,
            elems,
            mul,
            inv,
            class,
        }
    }

    fn order(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    fn conj(&self, x: usize, h: usize) -> usize {
        self.mul(self.mul(x, h), self.inv[x] as usize)
    }

    fn words(&self) -> usize {
        self.order().div_ceil(64)
    }

    fn to_bits(&self, elems: &[usize]) -> Bits {
        let mut b = vec![0; self.words()];
        for &e in elems {
            bit_set(&mut b, e);
        }
        b
    }

    /// Generators of the whole group: a transposition and an `n`-cycle.
    fn generators(&self) -> Vec<usize> {
        let n = self.n;
        if n == 1 {
            return vec![0];
        }
        let mut t: Vec<u8> = (0..n as u8).collect();
        t.swap(0, 1);
        let c: Vec<u8> = (0..n).map(|i| ((i + 1) % n) as u8).collect();
        vec![perm_rank(&t), perm_rank(&c)]
    }
}

/// One isomorphism class of transitive `S_n`-sets, i.e. `S_n / H` for a
/// conjugacy class of subgroups `H`.
#[derive(Clone, Debug)]
pub struct TransitiveSet {
    label: String,
    size: u64,
    subgroup: Vec<usize>,
    fixed_points: Vec<u64>,
}

impl TransitiveSet {
    /// `S{size}`, with a letter appended when several classes share a size.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn stabilizer_order(&self) -> usize {
        self.subgroup.len()
    }

    /// Fixed points of each conjugacy class, identity first.
    pub fn fixed_points(&self) -> &[u64] {
        &self.fixed_points
    }
}

/// The transitive `S_n`-sets up to isomorphism, sorted by size.
pub struct TransitiveSets {
    group: Sym,
    sets: Vec<TransitiveSet>,
    lookup: HashMap<Bits, usize>,
}

impl TransitiveSets {
    pub fn n(&self) -> usize {
        self.group.n
    }

    pub fn sets(&self) -> &[TransitiveSet] {
        &self.sets
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.sets.iter().position(|s| s.label == label)
    }

    /// Stabilizer subgroup of the representative point, as permutations.
    pub fn stabilizer(&self, id: usize) -> Vec<Vec<u8>> {
        self.sets[id]
            .subgroup
            .iter()
            .map(|&e| self.group.elems[e].clone())
            .collect()
    }

    fn build(n: usize) -> TransitiveSets {
        let g = Sym::new(n);
        let order = g.order();
        let mut lookup: HashMap<Bits, usize> = HashMap::new();
        let mut found: Vec<Found> = Vec::new();

        let register = |elems: &[usize], lookup: &mut HashMap<Bits, usize>, id: usize| {
            let mut best: Option<(Bits, Vec<usize>)> = None;
            for x in 0..order {
                let mut conj: Vec<usize> = elems.iter().map(|&h| g.conj(x, h)).collect();
                conj.sort_unstable();
                let bits = g.to_bits(&conj);
                if best.as_ref().is_none_or(|(b, _)| bits < *b) {
                    best = Some((bits.clone(), conj));
                }
                lookup.entry(bits).or_insert(id);
            }
            best.unwrap()
        };

        let (b, e) = register(&[0], &mut lookup, 0);
        found.push((vec![0], vec![], b, e));
        let mut i = 0;
        while i < found.len() {
            let (h, gens) = (found[i].0.clone(), found[i].1.clone());
            let hbits = g.to_bits(&h);
            for x in 0..order {
                if bit_get(&hbits, x) {
                    continue;
                }
                let mut gens2 = gens.clone();
                gens2.push(x);
                let k = closure(&g, &h, &gens2);
                let kbits = g.to_bits(&k);
                if lookup.contains_key(&kbits) {
                    continue;
                }
                let id = found.len();
                let (b, e) = register(&k, &mut lookup, id);
                found.push((k, gens2, b, e));
            }
            i += 1;
        }

        let classes = class_order(n);
        let mut sets: Vec<(TransitiveSet, Bits, usize)> = found
            .into_iter()
            .enumerate()
            .map(|(old, (elems, _, bits, canon))| {
                let mut in_class = vec![0u64; classes.len()];
                for &h in &elems {
                    in_class[g.class[h]] += 1;
                }
                let fixed_points = classes
                    .iter()
                    .zip(&in_class)
                    .map(|(c, &m)| centralizer_order(c) * m / elems.len() as u64)
                    .collect();
                let set = TransitiveSet {
                    label: String::new(),
                    size: (order / elems.len()) as u64,
                    subgroup: canon,
                    fixed_points,
                };
                (set, bits, old)
            })
            .collect();
        sets.sort_by(|a, b| {
            (a.0.size, std::cmp::Reverse(&a.0.fixed_points), &a.1).cmp(&(
                b.0.size,
                std::cmp::Reverse(&b.0.fixed_points),
                &b.1,
            ))
        });
        let mut remap = vec![0; sets.len()];
        for (new, (_, _, old)) in sets.iter().enumerate() {
            remap[*old] = new;
        }
        for v in lookup.values_mut() {
            *v = remap[*v];
        }
        let mut sets: Vec<TransitiveSet> = sets.into_iter().map(|(s, _, _)| s).collect();
        let mut start = 0;
        while start < sets.len() {
            let size = sets[start].size;
            let end = sets[start..]
                .iter()
                .position(|s| s.size != size)
                .map_or(sets.len(), |k| start + k);
            for (j, s) in sets[start..end].iter_mut().enumerate() {
                s.label = if end - start == 1 {
                    format!("S{size}")
                } else {
                    format!("S{size}{}", (b'a' + j as u8) as char)
                };
            }
            start = end;
        }
        TransitiveSets {
            group: g,
            sets,
            lookup,
        }
    }

    /// Decomposes a finite set with an `S_n`-action into transitive sets.
    fn decompose(&self, points: usize, act: impl Fn(usize, usize) -> usize) -> BurnsideElement {
        let g = &self.group;
        let gens = g.generators();
        let mut seen = vec![false; points];
        let mut counts = BTreeMap::new();
        for start in 0..points {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &s in &gens {
                    let y = act(s, x);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            let stab: Vec<usize> = (0..g.order()).filter(|&e| act(e, start) == start).collect();
            let id = self.lookup[&g.to_bits(&stab)];
            *counts.entry(id).or_insert(0) += 1;
        }
        BurnsideElement { n: g.n, counts }
    }

    /// Left cosets `gH` of the stabilizer of set `id`: coset index of each
    /// element and a representative element of each coset.
    fn cosets(&self, id: usize) -> (Vec<usize>, Vec<usize>) {
        let g = &self.group;
        let h = &self.sets[id].subgroup;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &y in h {
                coset_of[g.mul(x, y)] = reps.len();
            }
            reps.push(x);
        }
        (coset_of, reps)
    }
}

fn closure(g: &Sym, base: &[usize], gens: &[usize]) -> Vec<usize> {
    let mut inset = vec![false; g.order()];
    let mut list = base.to_vec();
    for &x in &list {
        inset[x] = true;
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        for &s in gens {
            let y = g.mul(x, s);
            if !inset[y] {
                inset[y] = true;
                list.push(y);
            }
        }
        i += 1;
    }
    list.sort_unstable();
    list
}

/// The classification of transitive `S_n`-sets, computed once per `n`.
pub fn transitive_sets(n: usize) -> Result<&'static TransitiveSets, SymError> {
    static CACHE: [OnceLock<TransitiveSets>; 6] = [const { OnceLock::new() }; 6];
    check_range("transitive_sets", n, 1, 6)?;
    Ok(CACHE[n - 1].get_or_init(|| TransitiveSets::build(n)))
}

/// Formal nonnegative combination of transitive `S_n`-sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    n: usize,
    counts: BTreeMap<usize, u64>,
}

impl BurnsideElement {
    pub fn zero(n: usize) -> Result<Self, SymError> {
        transitive_sets(n)?;
        Ok(BurnsideElement {
            n,
            counts: BTreeMap::new(),
        })
    }

    /// The transitive set with the given label, such as `S3` for `n = 3`.
    pub fn transitive(n: usize, label: &str) -> Result<Self, SymError> {
        let id = transitive_sets(n)?
            .by_label(label)
            .ok_or_else(|| SymError::UnknownLabel {
                n,
                label: label.to_string(),
            })?;
        Ok(Self::from_id(n, id))
    }

    pub fn from_id(n: usize, id: usize) -> Self {
        BurnsideElement {
            n,
            counts: BTreeMap::from([(id, 1)]),
        }
    }

    /// Every transitive set of `S_n`, in classification order.
    pub fn all_transitive(n: usize) -> Result<Vec<Self>, SymError> {
        let t = transitive_sets(n)?;
        Ok((0..t.sets().len()).map(|id| Self::from_id(n, id)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn table(&self) -> &'static TransitiveSets {
        transitive_sets(self.n).expect("validated on construction")
    }

    /// `(label, multiplicity)` pairs in classification order.
    pub fn components(&self) -> Vec<(String, u64)> {
        let t = self.table();
        self.counts
            .iter()
            .map(|(&id, &m)| (t.sets[id].label.clone(), m))
            .collect()
    }

    pub fn multiplicity(&self, label: &str) -> u64 {
        self.table()
            .by_label(label)
            .and_then(|id| self.counts.get(&id).copied())
            .unwrap_or(0)
    }

    pub fn cardinality(&self) -> u64 {
        let t = self.table();
        self.counts
            .iter()
            .map(|(&id, &m)| m * t.sets[id].size)
            .sum()
    }

    pub fn add(&self, other: &BurnsideElement) -> Result<BurnsideElement, SymError> {
        if self.n != other.n {
            return Err(SymError::MismatchedN(self.n, other.n));
        }
        let mut counts = self.counts.clone();
        for (&id, &m) in &other.counts {
            *counts.entry(id).or_insert(0) += m;
        }
        Ok(BurnsideElement { n: self.n, counts })
    }

    pub fn scale(&self, k: u64) -> BurnsideElement {
        let counts = if k == 0 {
            BTreeMap::new()
        } else {
            self.counts.iter().map(|(&id, &m)| (id, m * k)).collect()
        };
        BurnsideElement { n: self.n, counts }
    }
}

impl fmt::Display for BurnsideElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps = self.components();
        if comps.is_empty() {
            return write!(f, "0");
        }
        for (i, (label, m)) in comps.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// Decomposes `points` under an action given on permutations of `0..n`.
pub fn decompose_action(
    n: usize,
    points: usize,
    act: impl Fn(&[u8], usize) -> usize,
) -> Result<BurnsideElement, SymError> {
    let t = transitive_sets(n)?;
    for e in &t.group.elems {
        for x in 0..points {
            if act(e, x) >= points {
                return Err(SymError::InvalidAction(format!(
                    "point {x} mapped out of range"
                )));
            }
        }
    }
    Ok(t.decompose(points, |e, x| act(&t.group.elems[e], x)))
}

/// `S_n` acting on itself by conjugation.
pub fn conjugation_set(n: usize) -> Result<BurnsideElement, SymError> {
    let t = transitive_sets(n)?;
    let g = &t.group;
    Ok(t.decompose(g.order(), |e, x| g.conj(e, x)))
}

/// Cartesian product, decomposed by orbit enumeration of the diagonal
/// action on pairs of cosets.
pub fn burnside_product(
    x: &BurnsideElement,
    y: &BurnsideElement,
) -> Result<BurnsideElement, SymError> {
    if x.n != y.n {
        return Err(SymError::MismatchedN(x.n, y.n));
    }
    let t = x.table();
    let g = &t.group;
    let mut out = BurnsideElement::zero(x.n)?;
    for (&i, &a) in &x.counts {
        let (ci, ri) = t.cosets(i);
        for (&j, &b) in &y.counts {
            let (cj, rj) = t.cosets(j);
            let width = rj.len();
            let orbits = t.decompose(ri.len() * width, |e, p| {
                let (u, v) = (p / width, p % width);
                ci[g.mul(e, ri[u])] * width + cj[g.mul(e, rj[v])]
            });
            out = out.add(&orbits.scale(a * b))?;
        }
    }
    Ok(out)
}

/// Fixed-point counts of the permutation module, identity class first.
pub fn perm_module_character(x: &BurnsideElement) -> CentralCharacter<u64> {
    let t = x.table();
    let mut values = vec![0u64; class_order(x.n).len()];
    for (&id, &m) in &x.counts {
        for (v, f) in values.iter_mut().zip(&t.sets[id].fixed_points) {
            *v += m * f;
        }
    }
    CentralCharacter::new(x.n, values)
}
