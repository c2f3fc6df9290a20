use bifunctor_cohom::symgrp::{
    burnside_product, perm_module_character, transitive_sets, BurnsideElement,
};

#[test]
fn products_multiply_fixed_point_characters() {
    for n in 1..=5 {
        let sets = transitive_sets(n).unwrap();
        let all = BurnsideElement::all_transitive(n).unwrap();
        assert_eq!(all.len(), sets.sets().len());
        for x in &all {
            let cx = perm_module_character(x);
            for y in &all {
                let cy = perm_module_character(y);
                let prod = burnside_product(x, y).unwrap();
                let want: Vec<u64> = cx
                    .values()
                    .iter()
                    .zip(cy.values())
                    .map(|(a, b)| a * b)
                    .collect();
                assert_eq!(
                    perm_module_character(&prod).values(),
                    want.as_slice(),
                    "{x} × {y}"
                );
                assert_eq!(prod.cardinality(), x.cardinality() * y.cardinality());
            }
        }
    }
}

#[test]
fn s3_table() {
    let t = |l: &str| BurnsideElement::transitive(3, l).unwrap();
    assert_eq!(burnside_product(&t("S2"), &t("S3")).unwrap(), t("S6"));
    let sq = burnside_product(&t("S3"), &t("S3")).unwrap();
    assert_ne!(sq, t("S3").scale(3));
    assert_eq!(sq, t("S3").add(&t("S6")).unwrap());
    assert_eq!(sq.to_string(), "S3 + S6");
}
