mod common;

use common::word_on;
use lescop_core::conway::ConwayEngine;
use lescop_core::diagram::{braid_closure, BraidWord};
use lescop_core::lescop::{lescop_lambda, ConventionTable, LescopInputs, DEFAULT_SUBSET_BUDGET};
use lescop_core::linkalg::FramedLink;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn framed(w: &BraidWord, framings: &[i64]) -> FramedLink {
    let d = braid_closure(w);
    let n = d.component_count();
    FramedLink::new(d, framings[..n].to_vec()).unwrap()
}

fn lambda(link: &FramedLink) -> BigRational {
    lescop_lambda(link, &ConventionTable::standard()).unwrap().lambda
}

/// `beta` on the first `k` strands, plus an unknot on strand `k` that
/// encircles all of them once; the unknot comes last in component order.
fn with_encircling_unknot(beta: &BraidWord) -> BraidWord {
    let k = beta.strands();
    let mut letters = beta.letters().to_vec();
    letters.extend((2..=k as i32).rev());
    letters.extend([1, 1]);
    letters.extend(2..=k as i32);
    BraidWord::new(k + 1, letters).unwrap()
}

/// `beta` followed by a negative full twist on all strands.
fn with_negative_full_twist(beta: &BraidWord) -> BraidWord {
    let k = beta.strands() as i32;
    let mut letters = beta.letters().to_vec();
    for _ in 0..k {
        letters.extend((1..k).rev().map(|g| -g));
    }
    BraidWord::new(k as usize, letters).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn twelve_lambda_is_integral(
        w in (2usize..=3).prop_flat_map(|k| word_on(k, 8)),
        framings in prop::collection::vec(-3i64..=3, 3),
    ) {
        let link = framed(&w, &framings);
        let report = lescop_lambda(&link, &ConventionTable::standard()).unwrap();
        prop_assert!(report.twelve_lambda().is_some(), "{}", report.lambda);
        prop_assert!(report.audit());
    }

    /// Blowing down a +1-framed unknot around all strands gives a negative
    /// full twist, lowers each framing by the square of its strand count and
    /// leaves the manifold alone.
    #[test]
    fn blow_down_preserves_lambda(
        beta in (2usize..=3).prop_flat_map(|k| word_on(k, 4)),
        framings in prop::collection::vec(-2i64..=2, 3),
    ) {
        let before = with_encircling_unknot(&beta);
        let after = with_negative_full_twist(&beta);
        let cycles = beta.cycles();
        let n = cycles.len();
        let mut f_before = framings[..n].to_vec();
        f_before.push(1);
        let f_after: Vec<i64> = (0..n).map(|i| framings[i] - (cycles[i].len() as i64).pow(2)).collect();
        let link_before = FramedLink::new(braid_closure(&before), f_before).unwrap();
        let link_after = FramedLink::new(braid_closure(&after), f_after).unwrap();
        prop_assert_eq!(link_before.component_count(), n + 1);
        prop_assert_eq!(lambda(&link_before), lambda(&link_after));
    }

    #[test]
    fn relabeling_components_keeps_lambda(
        w in word_on(3, 8),
        framings in prop::collection::vec(-3i64..=3, 3),
        swap in any::<bool>(),
    ) {
        let link = framed(&w, &framings);
        let n = link.component_count();
        prop_assume!(n >= 2);
        let mut e = ConwayEngine::default();
        let inputs = LescopInputs::new(&link, &mut e, DEFAULT_SUBSET_BUDGET).unwrap();
        // reverse or rotate the component order
        let order: Vec<usize> = if swap { (0..n).rev().collect() } else { (1..n).chain([0]).collect() };
        let rows = (0..n).map(|i| (0..n).map(|j| inputs.matrix().get(order[i], order[j])).collect()).collect();
        let matrix = lescop_core::linkalg::IntMatrix::from_rows(rows).unwrap();
        let a1: Vec<BigInt> = (0..1usize << n)
            .map(|mask| {
                let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| order[i]).collect();
                if members.is_empty() { BigInt::from(0) } else { inputs.a1(&members) }
            })
            .collect();
        let permuted = LescopInputs::from_parts(matrix, a1).unwrap();
        let conv = ConventionTable::standard();
        prop_assert_eq!(inputs.evaluate(&conv).unwrap().lambda, permuted.evaluate(&conv).unwrap().lambda);
    }
}

#[test]
fn both_sphere_presentations_agree() {
    use lescop_core::fixtures as fx;
    assert_eq!(lambda(&fx::unknot(1)), lambda(&fx::unknot(-1)));
    assert_eq!(lambda(&fx::unknot(1)), lambda(&fx::hopf(1, [3, 0])));
    // a split 0-framed unknot never changes the evaluation between runs
    let link = fx::unlink(&[1, 0]);
    assert_eq!(lambda(&link), lambda(&link));
}
