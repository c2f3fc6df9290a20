use std::collections::HashMap;

use bifunctor_cohom::cohom::schur_series;
use bifunctor_cohom::extalg::{er_basis, TwistParams};
use bifunctor_cohom::symgrp::{
    all_permutations, compose, inverse, oracle_isotypic_dimension, partitions, ExplicitModule,
};
use num_traits::ToPrimitive;

const TRUNCATION: u64 = 12;

/// `E_r^{⊗n} ⊗ kS_n` cut off above `TRUNCATION`, with `S_n` permuting
/// tensor factors and conjugating the group algebra.
fn graded_module(tp: TwistParams, n: usize) -> ExplicitModule {
    let degrees: Vec<u64> = er_basis(tp, TRUNCATION)
        .unwrap()
        .iter()
        .map(|m| m.degree())
        .collect();
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..degrees.len()).map(move |i| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                })
            })
            .filter(|w| w.iter().map(|&i| degrees[i]).sum::<u64>() <= TRUNCATION)
            .collect();
    }
    let elems = all_permutations(n);
    let mut basis = Vec::new();
    for w in &words {
        for h in &elems {
            basis.push((w.clone(), h.clone()));
        }
    }
    let index: HashMap<_, _> = basis
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, b)| (b, i))
        .collect();
    let grading = basis
        .iter()
        .map(|(w, _)| w.iter().map(|&i| degrees[i]).sum())
        .collect();
    ExplicitModule::from_action(
        n,
        basis.len(),
        |g, x| {
            let (w, h) = &basis[x];
            let mut moved = vec![0; n];
            for (i, &v) in w.iter().enumerate() {
                moved[g[i] as usize] = v;
            }
            index[&(moved, compose(&compose(g, h), &inverse(g)))]
        },
        Some(grading),
    )
    .unwrap()
}

#[test]
fn schur_series_matches_explicit_module() {
    let mut positive = 0;
    for r in 0..=2 {
        let tp = TwistParams::new(5, r).unwrap();
        for n in 1..=3 {
            let m = graded_module(tp, n);
            for lambda in partitions(n).unwrap() {
                let s = schur_series(tp, &lambda)
                    .unwrap()
                    .expand(TRUNCATION as usize);
                for d in 0..=TRUNCATION {
                    let want = s.get(d as usize).unwrap().to_integer().to_usize().unwrap();
                    let got = oracle_isotypic_dimension(&m, &lambda, Some(d)).unwrap();
                    assert_eq!(got, want, "r={r} λ={lambda} degree {d}");
                    if d > 0 && got > 0 {
                        positive += got;
                    }
                }
            }
        }
    }
    assert!(positive > 100, "{positive}");
}
