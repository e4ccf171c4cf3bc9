#![allow(dead_code)]

use lescop_core::diagram::BraidWord;
use proptest::prelude::*;

/// Braid words on `strands` strands with up to `max_len` letters.
pub fn word_on(strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let gen = (1..strands as i32, any::<bool>()).prop_map(|(g, neg)| if neg { -g } else { g });
    prop::collection::vec(gen, 0..=max_len).prop_map(move |l| BraidWord::new(strands, l).unwrap())
}

/// Braid words on 2 to `max_strands` strands.
pub fn word(max_strands: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_strands).prop_flat_map(move |k| word_on(k, max_len))
}

/// Components of a word's closure, by independent cycle tracing of the permutation.
pub fn cycle_count(w: &BraidWord) -> usize {
    let k = w.strands();
    let mut perm: Vec<usize> = (0..k).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        perm.swap(i - 1, i);
    }
    let mut seen = vec![false; k];
    let mut cycles = 0;
    for s in 0..k {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
    }
    cycles
}
