mod common;

use common::{cycle_count, word};
use lescop_core::diagram::{braid_closure, LinkDiagram};
use proptest::prelude::*;

fn revalidate(d: &LinkDiagram) {
    let pd: Vec<_> = d.crossings().iter().map(|c| (c.sign, c.pd_arcs().map(u64::from))).collect();
    let free = d.arc_count() as usize - 2 * d.crossing_count();
    LinkDiagram::from_pd(&pd, free).expect("own diagrams validate");
}

proptest! {
    #[test]
    fn closure_components_match_cycles(w in word(5, 12)) {
        prop_assert_eq!(braid_closure(&w).component_count(), cycle_count(&w));
        prop_assert_eq!(w.cycles().len(), cycle_count(&w));
    }

    #[test]
    fn switch_is_an_involution(w in word(4, 10), pick in any::<prop::sample::Index>()) {
        let d = braid_closure(&w);
        prop_assume!(d.crossing_count() > 0);
        let c = pick.index(d.crossing_count());
        let once = d.switch_crossing(c).unwrap();
        prop_assert_ne!(&once.crossings()[c].sign, &d.crossings()[c].sign);
        prop_assert_eq!(once.switch_crossing(c).unwrap(), d);
    }

    #[test]
    fn smoothing_moves_components_by_one(w in word(4, 10), pick in any::<prop::sample::Index>()) {
        let d = braid_closure(&w);
        prop_assume!(d.crossing_count() > 0);
        let c = pick.index(d.crossing_count());
        let s = d.smooth_crossing(c).unwrap();
        prop_assert_eq!(s.component_count().abs_diff(d.component_count()), 1);
        let generic = d.without_braid().smooth_crossing(c).unwrap();
        prop_assert_eq!(generic.component_count(), s.component_count());
    }

    #[test]
    fn constructors_produce_valid_diagrams(w in word(4, 10), pick in any::<prop::sample::Index>()) {
        let d = braid_closure(&w);
        revalidate(&d);
        if d.crossing_count() > 0 {
            let c = pick.index(d.crossing_count());
            revalidate(&d.switch_crossing(c).unwrap());
            revalidate(&d.smooth_crossing(c).unwrap());
            revalidate(&d.without_braid().smooth_crossing(c).unwrap());
        }
    }
}
