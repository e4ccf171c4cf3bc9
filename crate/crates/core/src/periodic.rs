//! Strongly periodic links as closures of `T^p`, where the braid axis is the
//! rotation axis and the rotation shifts the `p` copies of the quotient
//! tangle `T`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::diagram::{braid_closure, BraidWord, LinkDiagram};
use crate::error::{Error, Result};
use crate::linkalg::FramedLink;
use crate::poly::require_odd_prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPresentation {
    quotient: BraidWord,
    p: u64,
    quotient_framings: Vec<i64>,
    link: FramedLink,
    /// Covering component -> (quotient component, sheet in `1..=p`).
    orbit_of: Vec<(usize, usize)>,
    /// Covering component -> its image under the rotation.
    rotation: Vec<usize>,
}

/// Orbit bookkeeping shared by presentations and their crossing variants.
struct Orbits {
    orbit_of: Vec<(usize, usize)>,
    rotation: Vec<usize>,
}

fn orbits(quotient: &BraidWord, cover: &LinkDiagram, p: usize) -> Orbits {
    // shifting by one copy of T carries bottom position x to the strand that
    // arrives there, which started at inv[x]
    let perm = quotient.permutation();
    let mut inv = vec![0; perm.len()];
    for (s, &e) in perm.iter().enumerate() {
        inv[e] = s;
    }
    let comp = |x: usize| cover.component_of(x as u32);
    let n = cover.component_count();
    let mut orbit_of = vec![(usize::MAX, 0); n];
    for (q, cycle) in quotient.cycles().iter().enumerate() {
        let mut x = cycle[0];
        for t in 1..=p {
            let c = comp(x);
            if orbit_of[c].0 == usize::MAX {
                orbit_of[c] = (q, t);
            }
            x = inv[x];
        }
    }
    let mut rotation = vec![0; n];
    for x in 0..quotient.strands() {
        rotation[comp(x)] = comp(inv[x]);
    }
    Orbits { orbit_of, rotation }
}

/// Closure of `T^p` with framings lifted constantly along orbits.
pub fn build_periodic(quotient: &BraidWord, p: u64, quotient_framings: &[i64]) -> Result<PeriodicPresentation> {
    require_odd_prime(p)?;
    let qdiag = braid_closure(quotient);
    if quotient_framings.len() != qdiag.component_count() {
        return Err(Error::FramingCount {
            expected: qdiag.component_count(),
            got: quotient_framings.len(),
        });
    }
    let cover = braid_closure(&quotient.repeat(p as usize));
    let Orbits { orbit_of, rotation } = orbits(quotient, &cover, p as usize);
    let framings = orbit_of.iter().map(|&(q, _)| quotient_framings[q]).collect();
    Ok(PeriodicPresentation {
        quotient: quotient.clone(),
        p,
        quotient_framings: quotient_framings.to_vec(),
        link: FramedLink::new(cover, framings)?,
        orbit_of,
        rotation,
    })
}

impl PeriodicPresentation {
    pub fn quotient(&self) -> &BraidWord {
        &self.quotient
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn quotient_framings(&self) -> &[i64] {
        &self.quotient_framings
    }

    pub fn link(&self) -> &FramedLink {
        &self.link
    }

    pub fn orbit_of(&self) -> &[(usize, usize)] {
        &self.orbit_of
    }

    pub fn rotation(&self) -> &[usize] {
        &self.rotation
    }

    /// The quotient as a framed link.
    pub fn quotient_link(&self) -> FramedLink {
        FramedLink::new(braid_closure(&self.quotient), self.quotient_framings.clone())
            .expect("framing count checked at construction")
    }

    /// Covering component on sheet `t` (1-based) over quotient component `q`.
    pub fn component(&self, q: usize, t: usize) -> Option<usize> {
        self.orbit_of.iter().position(|&o| o == (q, t))
    }
}

/// What goes wrong with a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The quotient component links the axis a nonzero number of times mod p.
    AxisLinking { component: usize, residue: u64 },
    /// Two quotient components link.
    QuotientLinking { components: (usize, usize), linking: i64 },
    /// A covering component fixed by the rotation.
    FixedComponent { component: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicityVerdict {
    pub strongly_periodic: bool,
    pub orbitally_separated: bool,
    pub witnesses: Vec<Witness>,
    /// Per quotient component: strands in its cycle, mod p.
    pub axis_linking_residues: Vec<u64>,
    /// The three equivalent forms of strong periodicity: residues vanish, the
    /// rotation acts freely, the cover has `p` times as many components.
    pub residues_vanish: bool,
    pub rotation_free: bool,
    pub component_count_multiplied: bool,
    /// For orbitally separated presentations: every `sum_t lk(l_i^s, l_j^t)` vanishes.
    pub orbit_sums_vanish: Option<bool>,
}

impl PeriodicityVerdict {
    /// True when the three characterizations agree.
    pub fn consistent(&self) -> bool {
        self.residues_vanish == self.rotation_free && self.rotation_free == self.component_count_multiplied
    }
}

pub fn verify_periodicity(pres: &PeriodicPresentation) -> Result<PeriodicityVerdict> {
    let p = pres.p;
    let cycles = pres.quotient.cycles();
    let residues: Vec<u64> = cycles.iter().map(|c| c.len() as u64 % p).collect();
    let mut witnesses = Vec::new();
    for (q, &r) in residues.iter().enumerate() {
        if r != 0 {
            witnesses.push(Witness::AxisLinking { component: q, residue: r });
        }
    }
    let residues_vanish = residues.iter().all(|&r| r == 0);
    let mut rotation_free = true;
    for (c, &image) in pres.rotation.iter().enumerate() {
        if image == c {
            rotation_free = false;
            witnesses.push(Witness::FixedComponent { component: c });
        }
    }
    // p prime: without fixed points every orbit has length p
    let component_count_multiplied =
        pres.link.component_count() == p as usize * cycles.len();
    let strongly_periodic = residues_vanish;
    let qlk = braid_closure(&pres.quotient).linking_numbers()?;
    let mut split = true;
    for i in 0..qlk.len() {
        for j in i + 1..qlk.len() {
            if qlk[i][j] != 0 {
                split = false;
                witnesses.push(Witness::QuotientLinking { components: (i, j), linking: qlk[i][j] });
            }
        }
    }
    let orbitally_separated = strongly_periodic && split;
    let orbit_sums_vanish = if orbitally_separated {
        let lk = pres.link.diagram().linking_numbers()?;
        let mut ok = true;
        for (a, &(qi, _)) in pres.orbit_of.iter().enumerate() {
            for qj in (0..cycles.len()).filter(|&qj| qj != qi) {
                let sum: i64 = (0..lk.len()).filter(|&b| pres.orbit_of[b].0 == qj).map(|b| lk[a][b]).sum();
                ok &= sum == 0;
            }
        }
        Some(ok)
    } else {
        None
    };
    Ok(PeriodicityVerdict {
        strongly_periodic,
        orbitally_separated,
        witnesses,
        axis_linking_residues: residues,
        residues_vanish,
        rotation_free,
        component_count_multiplied,
        orbit_sums_vanish,
    })
}

/// Covers of the quotient as given, with one letter negated, and with that letter deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitVariants {
    pub plus: LinkDiagram,
    pub minus: LinkDiagram,
    pub zero: LinkDiagram,
}

pub fn orbit_variants(pres: &PeriodicPresentation, quotient_crossing: usize) -> Result<OrbitVariants> {
    let p = pres.p as usize;
    let minus = pres.quotient.with_letter_negated(quotient_crossing)?;
    let zero = pres.quotient.without_letter(quotient_crossing)?;
    Ok(OrbitVariants {
        plus: pres.link.diagram().clone(),
        minus: braid_closure(&minus.repeat(p)),
        zero: braid_closure(&zero.repeat(p)),
    })
}

/// Quotient letters to switch, each simultaneously in all `p` copies, so
/// that the cover becomes algebraically split.
///
/// A letter's copies all join covering components in one class: quotient
/// components `(a, b)` and sheet offset `d`. Linking numbers are constant on
/// a class, each copy contributes one crossing to every pair of its class,
/// and a switch moves that class's linking number by one.
pub fn equivariant_split_sequence(pres: &PeriodicPresentation) -> Result<Vec<usize>> {
    let verdict = verify_periodicity(pres)?;
    if !verdict.strongly_periodic {
        return Err(Error::NotPeriodic {
            reason: "not strongly periodic".into(),
            witnesses: verdict.witnesses,
        });
    }
    let p = pres.p as usize;
    let d = pres.link.diagram();
    let lk = d.linking_numbers()?;
    let mut classes: BTreeMap<(usize, usize, usize), (i64, Vec<usize>)> = BTreeMap::new();
    for c in 0..pres.quotient.len() {
        // letter c in the first copy is crossing c of the cover
        let site = d.classify_crossing(c)?;
        let (x, y) = site.strands;
        if x == y {
            continue;
        }
        let (qa, sa) = pres.orbit_of[x];
        let (qb, sb) = pres.orbit_of[y];
        let key = if qa < qb {
            (qa, qb, (sb + p - sa) % p)
        } else if qb < qa {
            (qb, qa, (sa + p - sb) % p)
        } else {
            let off = (sb + p - sa) % p;
            (qa, qa, off.min(p - off))
        };
        let sign = d.crossings()[c].sign.value();
        let entry = classes.entry(key).or_insert((lk[x][y], Vec::new()));
        if sign == entry.0.signum() {
            entry.1.push(c);
        }
    }
    let mut out = Vec::new();
    for (_, (value, letters)) in classes {
        let need = value.unsigned_abs() as usize;
        out.extend(letters.into_iter().take(need));
    }
    out.sort_unstable();
    Ok(out)
}

/// Negates the listed quotient letters.
pub fn apply_switches(quotient: &BraidWord, letters: &[usize]) -> Result<BraidWord> {
    letters.iter().try_fold(quotient.clone(), |w, &c| w.with_letter_negated(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_braid;

    fn word(k: usize, w: &[i32]) -> BraidWord {
        BraidWord::new(k, w.to_vec()).unwrap()
    }

    #[test]
    fn torus33_presentation() {
        let pres = build_periodic(&word(3, &[1, 2]), 3, &[1]).unwrap();
        assert_eq!(pres.link().component_count(), 3);
        assert_eq!(pres.link().framings(), &[1, 1, 1]);
        assert_eq!(pres.link().diagram(), &braid_closure(&word(3, &[1, 2, 1, 2, 1, 2])));
        let sheets: Vec<usize> = pres.orbit_of().iter().map(|o| o.1).collect();
        let mut sorted = sheets.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, [1, 2, 3]);
        let v = verify_periodicity(&pres).unwrap();
        assert!(v.strongly_periodic && v.orbitally_separated && v.consistent());
        assert_eq!(v.axis_linking_residues, [0]);
        assert_eq!(v.orbit_sums_vanish, Some(true));
        for c in 0..3 {
            assert_ne!(pres.rotation()[c], c);
        }
    }

    #[test]
    fn non_periodic_examples() {
        let pres = build_periodic(&word(1, &[]), 3, &[0]).unwrap();
        assert_eq!(pres.link().component_count(), 1);
        let v = verify_periodicity(&pres).unwrap();
        assert!(!v.strongly_periodic && v.consistent());
        assert!(v.witnesses.contains(&Witness::AxisLinking { component: 0, residue: 1 }));

        let pres = build_periodic(&word(2, &[1]), 5, &[0]).unwrap();
        assert_eq!(pres.link().component_count(), 1);
        let v = verify_periodicity(&pres).unwrap();
        assert!(!v.strongly_periodic && v.consistent());
        assert!(v.witnesses.contains(&Witness::AxisLinking { component: 0, residue: 2 }));
    }

    #[test]
    fn six_strand_knot_quotient() {
        let pres = build_periodic(&word(6, &[1, 2, 3, 4, 5]), 3, &[0]).unwrap();
        let v = verify_periodicity(&pres).unwrap();
        assert_eq!(v.axis_linking_residues, [0]);
        assert!(v.strongly_periodic && v.consistent());
        assert_eq!(pres.link().component_count(), 3);
    }

    #[test]
    fn build_errors() {
        assert_eq!(build_periodic(&word(3, &[1, 2]), 4, &[0]), Err(Error::NotOddPrime(4)));
        assert_eq!(build_periodic(&word(3, &[1, 2]), 2, &[0]), Err(Error::NotOddPrime(2)));
        assert_eq!(
            build_periodic(&word(3, &[1, 2]), 3, &[0, 0]),
            Err(Error::FramingCount { expected: 1, got: 2 })
        );
    }

    #[test]
    fn variants_of_torus33() {
        let pres = build_periodic(&word(3, &[1, 2]), 3, &[0]).unwrap();
        let v = orbit_variants(&pres, 0).unwrap();
        assert_eq!(v.minus, braid_closure(&word(3, &[-1, 2, -1, 2, -1, 2])));
        assert_eq!(v.zero, braid_closure(&word(3, &[2, 2, 2])));
        assert_eq!(v.zero.component_count(), 2);
        assert_eq!(v.zero.piece_count(), 2);
        assert!(orbit_variants(&pres, 2).is_err());
        let back = build_periodic(&pres.quotient().with_letter_negated(0).unwrap(), 3, &[0]).unwrap();
        assert_eq!(orbit_variants(&back, 0).unwrap().minus, v.plus);
    }

    #[test]
    fn split_sequences() {
        // two 3-cycles whose covers are Borromean rings, with a clasp between them
        let clasp = build_periodic(&parse_braid("6: 1 -2 4 -5 3 3").unwrap(), 3, &[0, 0]).unwrap();
        let seq = equivariant_split_sequence(&clasp).unwrap();
        assert_eq!(seq.len(), 1);
        let fixed = build_periodic(&apply_switches(clasp.quotient(), &seq).unwrap(), 3, &[0, 0]).unwrap();
        let lk = fixed.link().diagram().linking_numbers().unwrap();
        assert!(lk.iter().flatten().all(|&v| v == 0));

        let double = build_periodic(&parse_braid("6: 1 -2 4 -5 3 3 3 3").unwrap(), 3, &[0, 0]).unwrap();
        assert_eq!(equivariant_split_sequence(&double).unwrap().len(), 2);

        let split = build_periodic(&parse_braid("6: 1 -2 4 -5").unwrap(), 3, &[0, 0]).unwrap();
        assert_eq!(equivariant_split_sequence(&split).unwrap(), Vec::<usize>::new());

        let trefoil = build_periodic(&word(2, &[1]), 3, &[0]).unwrap();
        assert!(matches!(equivariant_split_sequence(&trefoil), Err(Error::NotPeriodic { .. })));
    }

    #[test]
    fn torus33_cover_is_split_after_switches() {
        let pres = build_periodic(&word(3, &[1, 2]), 3, &[0]).unwrap();
        let seq = equivariant_split_sequence(&pres).unwrap();
        let fixed = build_periodic(&apply_switches(pres.quotient(), &seq).unwrap(), 3, &[0]).unwrap();
        let lk = fixed.link().diagram().linking_numbers().unwrap();
        assert!(lk.iter().flatten().all(|&v| v == 0), "{:?} after {:?}", lk, seq);
    }
}
