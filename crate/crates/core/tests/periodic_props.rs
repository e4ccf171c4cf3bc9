mod common;

use common::word;
use lescop_core::diagram::braid_closure;
use lescop_core::periodic::{apply_switches, build_periodic, equivariant_split_sequence, verify_periodicity};
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn characterizations_agree(q in word(4, 6), p in prime()) {
        let n = q.cycles().len();
        let pres = build_periodic(&q, p, &vec![0; n]).unwrap();
        let v = verify_periodicity(&pres).unwrap();
        prop_assert!(v.consistent());
        let expected = q.cycles().iter().all(|c| (c.len() as u64).is_multiple_of(p));
        prop_assert_eq!(v.strongly_periodic, expected);
        if v.orbitally_separated {
            prop_assert_eq!(v.orbit_sums_vanish, Some(true));
        }
    }

    #[test]
    fn rotation_is_a_symmetry(q in word(4, 6), p in prime()) {
        let n = q.cycles().len();
        let pres = build_periodic(&q, p, &vec![0; n]).unwrap();
        let d = pres.link().diagram();
        let rot = pres.rotation();
        let lk = d.linking_numbers().unwrap();
        for a in 0..lk.len() {
            for b in 0..lk.len() {
                prop_assert_eq!(lk[a][b], lk[rot[a]][rot[b]]);
            }
        }
        // shifting by one copy of the tangle rotates every crossing
        let t = q.len();
        for c in 0..d.crossing_count() {
            let image = (c + t) % d.crossing_count();
            let (x, y) = d.classify_crossing(c).unwrap().strands;
            let (u, v) = d.classify_crossing(image).unwrap().strands;
            prop_assert_eq!((rot[x], rot[y]), (u, v));
            prop_assert_eq!(d.crossings()[c].sign, d.crossings()[image].sign);
        }
        if verify_periodicity(&pres).unwrap().strongly_periodic {
            for (c, &(qc, sc)) in pres.orbit_of().iter().enumerate() {
                prop_assert_eq!(pres.orbit_of()[rot[c]], (qc, sc % p as usize + 1));
            }
        }
        // rot^p is the identity
        for c in 0..rot.len() {
            let mut x = c;
            for _ in 0..p {
                x = rot[x];
            }
            prop_assert_eq!(x, c);
        }
    }

    #[test]
    fn lk_depends_on_sheet_offset(q in word(4, 6), p in prime()) {
        let n = q.cycles().len();
        let pres = build_periodic(&q, p, &vec![0; n]).unwrap();
        if !verify_periodicity(&pres).unwrap().strongly_periodic {
            return Ok(());
        }
        let lk = pres.link().diagram().linking_numbers().unwrap();
        let orbit = pres.orbit_of();
        for a in 0..lk.len() {
            for b in 0..lk.len() {
                let (qa, sa) = orbit[a];
                let (qb, sb) = orbit[b];
                let off = (sb + p as usize - sa) % p as usize;
                let a0 = pres.component(qa, 1).unwrap();
                let b0 = pres.component(qb, (off % p as usize) + 1).unwrap();
                prop_assert_eq!(lk[a][b], lk[a0][b0]);
            }
        }
    }

    #[test]
    fn split_sequence_splits_cover(q in word(4, 6), p in prime()) {
        let n = q.cycles().len();
        let pres = build_periodic(&q, p, &vec![0; n]).unwrap();
        match equivariant_split_sequence(&pres) {
            Ok(letters) => {
                let switched = apply_switches(&q, &letters).unwrap();
                let cover = braid_closure(&switched.repeat(p as usize));
                let lk = cover.linking_numbers().unwrap();
                for (a, row) in lk.iter().enumerate() {
                    for (b, &v) in row.iter().enumerate() {
                        prop_assert!(a == b || v == 0, "lk[{}][{}] = {}", a, b, v);
                    }
                }
            }
            Err(_) => prop_assert!(!verify_periodicity(&pres).unwrap().strongly_periodic),
        }
    }
}
