use bifunctor_cohom::cohom::{schur_series, tensor_series, INTEGRALITY_CHECK_ORDER};
use bifunctor_cohom::extalg::{er_series, Twist, TwistParams};
use bifunctor_cohom::symgrp::{character_table, partitions};
use bifunctor_cohom::RationalSeries;
use num_traits::Signed;

fn twists() -> [Twist; 4] {
    [
        Twist::Finite(0),
        Twist::Finite(1),
        Twist::Finite(2),
        Twist::Infinite,
    ]
}

#[test]
fn weighted_sum_is_tensor_series() {
    for n in 2..=4 {
        let table = character_table(n).unwrap();
        for r in twists() {
            let tp = TwistParams::new(5, r).unwrap();
            let total = partitions(n)
                .unwrap()
                .iter()
                .map(|l| {
                    schur_series(tp, l)
                        .unwrap()
                        .scale_int(table.dim(l).unwrap())
                })
                .fold(RationalSeries::zero(), |a, b| &a + &b);
            assert_eq!(total, tensor_series(tp, n), "n={n} r={r}");
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(total, er_series(tp).pow(n as u32).scale_int(fact));
        }
    }
}

#[test]
fn schur_series_are_dimension_series() {
    for p in [5, 7] {
        for n in 1..=4 {
            for lambda in partitions(n).unwrap() {
                for r in twists() {
                    let s = schur_series(TwistParams::new(p, r).unwrap(), &lambda).unwrap();
                    let e = s.expand(INTEGRALITY_CHECK_ORDER);
                    assert!(e
                        .coefficients()
                        .iter()
                        .all(|c| c.is_integer() && !c.is_negative()));
                }
            }
        }
    }
}
