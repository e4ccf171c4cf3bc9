//! Seeded generators for braid closures and periodic presentations.
//!
//! Every generator draws from a ChaCha stream seeded by one `u64`, rejects
//! words that miss the requested shape and drops duplicates, so a seed fixes
//! the corpus exactly.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagram::{braid_closure, BraidWord};
use crate::error::Result;
use crate::periodic::{build_periodic, verify_periodicity, PeriodicPresentation};

/// Draws per requested item before a generator gives up.
const ATTEMPTS_PER_ITEM: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidCorpusSpec {
    pub count: usize,
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_crossings: usize,
    pub min_components: usize,
    pub max_components: usize,
    /// Keep only algebraically split closures.
    pub split: bool,
}

impl BraidCorpusSpec {
    /// Closures with at most `max_strands` strands and `max_crossings` letters.
    pub fn small(count: usize, max_strands: usize, max_crossings: usize) -> Self {
        Self {
            count,
            min_strands: 2,
            max_strands,
            max_crossings,
            min_components: 1,
            max_components: max_strands,
            split: false,
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, strands: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(strands, letters).expect("generators are in range")
}

/// Distinct braid words whose closures match `spec`. May return fewer than
/// `spec.count` words when the shape is too rare.
pub fn braid_corpus(seed: u64, spec: &BraidCorpusSpec) -> Result<Vec<BraidWord>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(spec.count);
    let min_strands = spec.min_strands.max(2);
    for _ in 0..spec.count * ATTEMPTS_PER_ITEM {
        if out.len() == spec.count || min_strands > spec.max_strands {
            break;
        }
        let strands = rng.gen_range(min_strands..=spec.max_strands);
        let len = rng.gen_range(0..=spec.max_crossings);
        let word = random_word(&mut rng, strands, len);
        let n = word.cycles().len();
        if n < spec.min_components || n > spec.max_components {
            continue;
        }
        if spec.split {
            let lk = braid_closure(&word).linking_numbers()?;
            if lk.iter().flatten().any(|&v| v != 0) {
                continue;
            }
        }
        if seen.insert((word.strands(), word.letters().to_vec())) {
            out.push(word);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PeriodicKind {
    /// Every quotient component links the axis `0 mod p` times.
    Strong,
    /// Strong, with an algebraically split quotient.
    OrbitallySeparated,
    /// Orbitally separated with `+-1` framings, so the quotient surgery is a homology sphere.
    HomologySphereQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicCorpusSpec {
    pub p: u64,
    pub count: usize,
    pub kind: PeriodicKind,
    /// Longest quotient word.
    pub max_letters: usize,
    pub max_cover_components: usize,
}

impl PeriodicCorpusSpec {
    pub fn new(p: u64, count: usize, kind: PeriodicKind) -> Self {
        Self { p, count, kind, max_letters: 6, max_cover_components: 12 }
    }
}

/// Distinct periodic presentations `closure(T^p)` of the requested kind.
///
/// Quotients live on a multiple of `p` strands; a quotient component on `c`
/// strands links the braid axis `c` times.
pub fn periodic_corpus(seed: u64, spec: &PeriodicCorpusSpec) -> Result<Vec<PeriodicPresentation>> {
    let p = spec.p as usize;
    let strand_counts: Vec<usize> = (1..)
        .map(|m| m * p)
        // each p-cycle needs p - 1 letters
        .take_while(|&k| k - k / p <= spec.max_letters)
        .filter(|&k| k <= spec.max_cover_components)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(spec.count);
    if strand_counts.is_empty() {
        return Ok(out);
    }
    for _ in 0..spec.count * ATTEMPTS_PER_ITEM {
        if out.len() == spec.count {
            break;
        }
        let k = strand_counts[rng.gen_range(0..strand_counts.len())];
        let len = rng.gen_range(k - k / p..=spec.max_letters);
        let word = random_word(&mut rng, k, len);
        let cycles = word.cycles();
        if cycles.iter().any(|c| c.len() % p != 0) || p * cycles.len() > spec.max_cover_components {
            continue;
        }
        if !seen.insert(word.letters().to_vec()) {
            continue;
        }
        let framings: Vec<i64> = match spec.kind {
            PeriodicKind::HomologySphereQuotient => {
                cycles.iter().map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
            }
            _ => alloc::vec![0; cycles.len()],
        };
        let pres = build_periodic(&word, spec.p, &framings)?;
        if spec.kind != PeriodicKind::Strong && !verify_periodicity(&pres)?.orbitally_separated {
            continue;
        }
        out.push(pres);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_are_reproducible() {
        let spec = BraidCorpusSpec::small(20, 4, 10);
        assert_eq!(braid_corpus(7, &spec).unwrap(), braid_corpus(7, &spec).unwrap());
        assert_ne!(braid_corpus(7, &spec).unwrap(), braid_corpus(8, &spec).unwrap());
    }

    #[test]
    fn periodic_shapes() {
        for p in [3, 5, 7] {
            let spec = PeriodicCorpusSpec::new(p, 10, PeriodicKind::OrbitallySeparated);
            let corpus = periodic_corpus(1, &spec).unwrap();
            assert_eq!(corpus.len(), 10);
            for pres in &corpus {
                let v = verify_periodicity(pres).unwrap();
                assert!(v.orbitally_separated && v.consistent());
            }
        }
    }
}
