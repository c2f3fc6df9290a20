use bifunctor_cohom::cohom::schur_series;
use bifunctor_cohom::extalg::{Twist, TwistParams};
use bifunctor_cohom::symgrp::{oracle_isotypic_dimension, partitions, ExplicitModule};
use num_bigint::BigInt;

#[test]
fn constant_term_is_conjugation_multiplicity() {
    for n in 1..=4 {
        let conj = ExplicitModule::conjugation(n);
        for lambda in partitions(n).unwrap() {
            let want = BigInt::from(oracle_isotypic_dimension(&conj, &lambda, None).unwrap());
            for r in [
                Twist::Finite(0),
                Twist::Finite(1),
                Twist::Finite(3),
                Twist::Infinite,
            ] {
                let s = schur_series(TwistParams::new(5, r).unwrap(), &lambda).unwrap();
                assert_eq!(
                    s.expand(0).get(0).unwrap().to_integer(),
                    want,
                    "λ={lambda} r={r}"
                );
            }
        }
    }
}

#[test]
fn untwisted_series_are_constant() {
    for n in 1..=4 {
        for lambda in partitions(n).unwrap() {
            let s = schur_series(TwistParams::new(5, 0).unwrap(), &lambda).unwrap();
            assert!(
                s.is_polynomial() && s.numerator().degree().unwrap_or(0) == 0,
                "λ={lambda}: {s}"
            );
        }
    }
}
