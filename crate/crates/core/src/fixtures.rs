//! Named framed links used as anchors, examples and test data.

use alloc::vec::Vec;

use crate::diagram::{braid_closure, BraidWord};
use crate::linkalg::FramedLink;

fn framed(strands: usize, letters: &[i32], framings: &[i64]) -> FramedLink {
    let word = BraidWord::new(strands, letters.to_vec()).expect("fixture words are valid");
    FramedLink::new(braid_closure(&word), framings.to_vec()).expect("fixture framings match")
}

pub fn unknot(framing: i64) -> FramedLink {
    framed(1, &[], &[framing])
}

/// Unlink with one component per framing.
pub fn unlink(framings: &[i64]) -> FramedLink {
    framed(framings.len().max(1), &[], framings)
}

/// Hopf link with linking number `sign` (+1 or -1).
pub fn hopf(sign: i32, framings: [i64; 2]) -> FramedLink {
    framed(2, &[sign, sign], &framings)
}

/// Right-handed trefoil.
pub fn trefoil(framing: i64) -> FramedLink {
    framed(2, &[1, 1, 1], &[framing])
}

pub fn figure_eight(framing: i64) -> FramedLink {
    framed(3, &[1, -2, 1, -2], &[framing])
}

pub fn borromean(framings: [i64; 3]) -> FramedLink {
    framed(3, &[1, -2, 1, -2, 1, -2], &framings)
}

/// Three unknots in a chain: `lk(0,1) = lk(1,2) = 1`, `lk(0,2) = 0`.
pub fn chain3(framings: [i64; 3]) -> FramedLink {
    framed(3, &[1, 1, 2, 2], &framings)
}

/// The (3,3) torus link: three fibers of the Hopf fibration, pairwise linking 1.
pub fn torus33(framings: [i64; 3]) -> FramedLink {
    framed(3, &[1, 2, 1, 2, 1, 2], &framings)
}

/// Braid word for the quotient of the (3,3) torus link under the 3-fold rotation.
pub fn torus33_quotient() -> BraidWord {
    BraidWord::new(3, [1, 2].to_vec()).expect("valid")
}

/// Braid word for the quotient of the (5,5) torus link under the 5-fold rotation.
pub fn torus55_quotient() -> BraidWord {
    BraidWord::new(5, [1, 2, 3, 4].to_vec()).expect("valid")
}

/// All named framed links, for listings.
pub fn named() -> Vec<(&'static str, FramedLink)> {
    [
        ("unknot+1", unknot(1)),
        ("unknot-1", unknot(-1)),
        ("unknot0", unknot(0)),
        ("hopf+", hopf(1, [0, 0])),
        ("hopf-", hopf(-1, [0, 0])),
        ("trefoil", trefoil(1)),
        ("figure-eight", figure_eight(1)),
        ("borromean0", borromean([0, 0, 0])),
    ]
    .into_iter()
    .collect()
}
