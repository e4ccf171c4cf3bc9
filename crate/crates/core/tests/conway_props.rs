mod common;

use common::word;
use lescop_core::conway::{
    check_support, conway_seifert, conway_skein, levine_divisible, ConwayEngine,
};
use lescop_core::corpus::{braid_corpus, BraidCorpusSpec};
use lescop_core::diagram::{braid_closure, parse_braid, Sign};
use lescop_core::linkalg::{a0_cofactor, det_exact, hoste_matrix, rows_sum_to_zero};
use lescop_core::poly::LaurentPoly;
use num_bigint::BigInt;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn skein_relation_at_every_crossing(w in word(4, 10)) {
        let d = braid_closure(&w).without_braid();
        let mut e = ConwayEngine::default();
        for c in 0..d.crossing_count() {
            let (plus, minus) = match d.crossings()[c].sign {
                Sign::Positive => (d.clone(), d.switch_crossing(c).unwrap()),
                Sign::Negative => (d.switch_crossing(c).unwrap(), d.clone()),
            };
            let lhs = &e.skein(&plus).unwrap() - &e.skein(&minus).unwrap();
            let rhs = e.skein(&d.smooth_crossing(c).unwrap()).unwrap().shift(1);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn seifert_matches_skein(w in word(4, 10)) {
        let d = braid_closure(&w);
        let seifert = conway_seifert(&d).unwrap();
        prop_assert_eq!(&seifert, &conway_skein(&d.without_braid()).unwrap());
        check_support(&seifert, d.component_count()).unwrap();
    }

    #[test]
    fn hoste_cofactors(w in word(4, 10)) {
        let d = braid_closure(&w);
        let h = hoste_matrix(&d).unwrap();
        prop_assert!(rows_sum_to_zero(&h.0));
        let n = d.component_count();
        let first = det_exact(&h.0.minor(0, 0)).unwrap();
        for i in 0..n {
            for j in 0..n {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                prop_assert_eq!(det_exact(&h.0.minor(i, j)).unwrap() * sign, first.clone());
            }
        }
        let poly = conway_skein(&d.without_braid()).unwrap();
        prop_assert_eq!(a0_cofactor(&h).unwrap(), poly.coeff(n as i32 - 1));
    }
}

#[test]
fn split_links_are_divisible() {
    let spec = BraidCorpusSpec {
        min_components: 2,
        max_components: 3,
        split: true,
        ..BraidCorpusSpec::small(40, 4, 12)
    };
    let corpus = braid_corpus(5, &spec).unwrap();
    assert_eq!(corpus.len(), 40);
    for w in &corpus {
        let d = braid_closure(w);
        let poly = conway_seifert(&d).unwrap();
        assert!(levine_divisible(&poly, d.component_count()), "{w}: {poly}");
    }
}

#[test]
fn two_diagrams_of_the_trefoil() {
    let a = braid_closure(&parse_braid("2: 1 1 1").unwrap());
    let b = braid_closure(&parse_braid("2: 1 1 1 1 -1").unwrap());
    let expected = LaurentPoly::from_terms([(0, 1), (2, 1)]);
    assert_eq!(conway_skein(&a.without_braid()).unwrap(), expected);
    assert_eq!(conway_skein(&b.without_braid()).unwrap(), expected);
    assert_eq!(conway_seifert(&b).unwrap(), expected);
}

#[test]
fn unknot_is_one() {
    let u = braid_closure(&parse_braid("1:").unwrap());
    assert_eq!(conway_skein(&u).unwrap(), LaurentPoly::one());
    let twisted = braid_closure(&parse_braid("3: 1 -2").unwrap()).without_braid();
    assert_eq!(conway_skein(&twisted).unwrap(), LaurentPoly::one());
    assert_eq!(a0_cofactor(&hoste_matrix(&u).unwrap()).unwrap(), BigInt::from(1));
}
