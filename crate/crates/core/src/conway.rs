//! Conway polynomials: the skein engine, the Seifert-matrix route for braid
//! closures, coefficient extraction and the triple-linking determinant.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::diagram::{LinkDiagram, Sign};
use crate::error::{Error, Result};
use crate::linkalg::{det_exact, IntMatrix};
use crate::poly::{LaurentPoly, PolyModP};

pub const DEFAULT_CROSSING_BUDGET: usize = 16;

/// Skein evaluator with a memo table keyed by canonical diagram encodings.
#[derive(Clone, Debug)]
pub struct ConwayEngine {
    budget: usize,
    memo: BTreeMap<Vec<u32>, LaurentPoly>,
}

impl Default for ConwayEngine {
    fn default() -> Self {
        Self::new(DEFAULT_CROSSING_BUDGET)
    }
}

impl ConwayEngine {
    pub fn new(budget: usize) -> Self {
        Self { budget, memo: BTreeMap::new() }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Conway polynomial by recursive switching and smoothing toward
    /// descending diagrams.
    pub fn skein(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        if d.crossing_count() > self.budget {
            return Err(Error::CrossingBudget { crossings: d.crossing_count(), budget: self.budget });
        }
        self.eval(d)
    }

    /// The Seifert route when the diagram has a braid form, the skein engine otherwise.
    pub fn conway(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        match d.braid() {
            Some(_) => conway_seifert(d),
            None => self.skein(d),
        }
    }

    fn eval(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        let d = d.without_kinks()?;
        if d.piece_count() > 1 {
            return Ok(LaurentPoly::zero());
        }
        let key = d.canonical_key();
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        let value = match d.first_ascending_crossing() {
            None if d.component_count() == 1 => LaurentPoly::one(),
            None => LaurentPoly::zero(),
            Some(c) => {
                let switched = self.eval(&d.switch_crossing(c)?)?;
                let smoothed = self.eval(&d.smooth_crossing(c)?)?.shift(1);
                match d.crossings()[c].sign {
                    Sign::Positive => switched + smoothed,
                    Sign::Negative => switched - smoothed,
                }
            }
        };
        self.memo.insert(key, value.clone());
        Ok(value)
    }
}

/// Skein evaluation with a fresh engine and the default budget.
pub fn conway_skein(d: &LinkDiagram) -> Result<LaurentPoly> {
    ConwayEngine::default().skein(d)
}

/// Conway polynomial of a braid closure from the Seifert surface made of one
/// disk per strand and one band per letter.
pub fn conway_seifert(d: &LinkDiagram) -> Result<LaurentPoly> {
    let word = d.braid().ok_or(Error::NoBraidForm)?;
    let k = word.strands();
    // bands per level, as (letter position, sign)
    let mut levels: Vec<Vec<(usize, i64)>> = vec![Vec::new(); k.saturating_sub(1)];
    for (t, &g) in word.letters().iter().enumerate() {
        levels[g.unsigned_abs() as usize - 1].push((t, g.signum() as i64));
    }
    if levels.iter().any(Vec::is_empty) {
        return Ok(LaurentPoly::zero());
    }
    let v = seifert_matrix(&levels);
    Ok(conway_from_seifert(&v))
}

/// Generator `(level, j)` runs up band `j` and down band `j + 1` of its level.
fn seifert_matrix(levels: &[Vec<(usize, i64)>]) -> IntMatrix {
    let mut gens: Vec<(usize, usize)> = Vec::new();
    for (i, bands) in levels.iter().enumerate() {
        for j in 0..bands.len().saturating_sub(1) {
            gens.push((i, j));
        }
    }
    let m = gens.len();
    let mut v = IntMatrix::square(m);
    for (x, &(li, lj)) in gens.iter().enumerate() {
        for (y, &(mi, mj)) in gens.iter().enumerate() {
            let value = if li == mi {
                let bands = &levels[li];
                if lj == mj {
                    let (s1, s2) = (bands[lj].1, bands[lj + 1].1);
                    if s1 == s2 { -s1 } else { 0 }
                } else if mj == lj + 1 {
                    // consecutive loops share the band lj + 1
                    let s = bands[mj].1;
                    if s > 0 { 1 } else { 0 }
                } else if lj == mj + 1 {
                    let s = bands[lj].1;
                    if s < 0 { -1 } else { 0 }
                } else {
                    0
                }
            } else if mi == li + 1 {
                let (a1, a2) = (levels[li][lj].0, levels[li][lj + 1].0);
                let (b1, b2) = (levels[mi][mj].0, levels[mi][mj + 1].0);
                cross_level(a1, a2, b1, b2)
            } else {
                0
            };
            v.set(x, y, value);
        }
    }
    v
}

/// Linking of a loop at one level with the push-off of a loop on the next
/// level up. It is nonzero only when the two loops' band intervals interleave.
fn cross_level(a1: usize, a2: usize, b1: usize, b2: usize) -> i64 {
    if a1 < b1 && b1 < a2 && a2 < b2 {
        1
    } else if b1 < a1 && a1 < b2 && b2 < a2 {
        -1
    } else {
        0
    }
}

/// `(-1)^m det(x V - x^-1 V^T)` rewritten in `z = x - x^-1`.
fn conway_from_seifert(v: &IntMatrix) -> LaurentPoly {
    let m = v.rows();
    if m == 0 {
        return LaurentPoly::one();
    }
    // P(q) = det(q V - V^T) has degree <= m; sample q = 0..=m
    let samples: Vec<BigInt> = (0..=m as i64)
        .map(|q| {
            let mut a = IntMatrix::square(m);
            for i in 0..m {
                for j in 0..m {
                    a.set(i, j, q * v.get(i, j) - v.get(j, i));
                }
            }
            det_exact(&a).expect("square")
        })
        .collect();
    let mut p = interpolate(&samples);
    if m % 2 == 1 {
        p.iter_mut().for_each(|c| *c = -&*c);
    }
    // f(x) = (-1)^m x^-m P(x^2)
    let mut f = LaurentPoly::from_terms(p.into_iter().enumerate().map(|(d, c)| (2 * d as i32 - m as i32, c)));
    let step = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut out = LaurentPoly::zero();
    while let Some(top) = f.max_degree() {
        if top < 0 {
            break;
        }
        let c = f.coeff(top);
        out.add_term(top, c.clone());
        f = f - step.pow(top as u32).scale(&c);
    }
    debug_assert!(f.is_zero());
    out
}

/// Newton interpolation through `(i, ys[i])`; the coefficients are integral
/// because the interpolated polynomial has integer coefficients.
fn interpolate(ys: &[BigInt]) -> Vec<BigInt> {
    let n = ys.len();
    let mut coef: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / BigRational::from_integer(BigInt::from(level));
        }
    }
    // expand sum coef[i] * prod_{j<i} (x - j)
    let mut result = vec![BigRational::zero(); n];
    let mut basis = vec![BigRational::one()];
    for (i, c) in coef.iter().enumerate() {
        for (d, b) in basis.iter().enumerate() {
            result[d] += c * b;
        }
        let mut next = vec![BigRational::zero(); basis.len() + 1];
        for (d, b) in basis.iter().enumerate() {
            next[d + 1] += b;
            next[d] -= b * BigRational::from_integer(BigInt::from(i));
        }
        basis = next;
    }
    result
        .into_iter()
        .map(|r| {
            debug_assert!(r.is_integer());
            r.to_integer()
        })
        .collect()
}

/// Checks the `z^(n-1) * (even series)` support of an `n`-component Conway polynomial.
pub fn check_support(poly: &LaurentPoly, n: usize) -> Result<()> {
    let base = n as i32 - 1;
    for (d, _) in poly.terms() {
        if d < base || (d - base).is_odd() {
            return Err(Error::MalformedPolynomial { degree: d, components: n });
        }
    }
    Ok(())
}

/// `a_i`, the coefficient of `z^(n-1+2i)`.
pub fn coefficient_a(poly: &LaurentPoly, n: usize, i: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::TooFewComponents { needed: 1, got: 0 });
    }
    check_support(poly, n)?;
    Ok(poly.coeff(n as i32 - 1 + 2 * i as i32))
}

pub fn reduce_mod_p(poly: &LaurentPoly, p: u64) -> Result<PolyModP> {
    poly.reduce_mod_p(p)
}

/// Triple linking numbers of an algebraically split link, stored for
/// distinct index triples; cyclic under rotation, antisymmetric under transposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBarTensor {
    n: usize,
    values: BTreeMap<(usize, usize, usize), i64>,
}

impl MuBarTensor {
    /// Builds the tensor from values on some index triples, filling in the
    /// other orderings. Conflicting or degenerate entries are rejected.
    pub fn new(n: usize, entries: &[((usize, usize, usize), i64)]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for &((i, j, k), v) in entries {
            if i >= n || j >= n || k >= n {
                return Err(Error::InvalidTensor(format!("index ({}, {}, {}) out of range", i, j, k)));
            }
            if i == j || j == k || i == k {
                if v != 0 {
                    return Err(Error::InvalidTensor(format!(
                        "repeated indices ({}, {}, {}) must carry 0",
                        i, j, k
                    )));
                }
                continue;
            }
            let orbit = [
                ((i, j, k), v),
                ((j, k, i), v),
                ((k, i, j), v),
                ((j, i, k), -v),
                ((i, k, j), -v),
                ((k, j, i), -v),
            ];
            for (key, val) in orbit {
                if let Some(&old) = values.get(&key) {
                    if old != val {
                        return Err(Error::InvalidTensor(format!(
                            "conflicting values at {:?}: {} and {}",
                            key, old, val
                        )));
                    }
                }
                values.insert(key, val);
            }
        }
        values.retain(|_, v| *v != 0);
        Ok(Self { n, values })
    }

    pub fn components(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> i64 {
        self.values.get(&(i, j, k)).copied().unwrap_or(0)
    }

    /// `u_ij = sum_k mu_ijk` for `i, j < n - 1`.
    pub fn u_matrix(&self) -> IntMatrix {
        let m = self.n.saturating_sub(1);
        let mut u = IntMatrix::square(m);
        for i in 0..m {
            for j in 0..m {
                u.set(i, j, (0..self.n).map(|k| self.get(i, j, k)).sum());
            }
        }
        u
    }
}

/// `det(u)`, the top coefficient of an algebraically split link's Conway polynomial.
pub fn levine_top_coefficient(mu: &MuBarTensor) -> Result<BigInt> {
    if mu.n < 2 {
        return Err(Error::TooFewComponents { needed: 2, got: mu.n });
    }
    det_exact(&mu.u_matrix())
}

/// The coefficient of `z^(2n-2)`, which `det(u)` computes for algebraically split links.
pub fn levine_coefficient(poly: &LaurentPoly, n: usize) -> BigInt {
    poly.coeff(2 * n as i32 - 2)
}

/// True when `z^(2n-2)` divides the polynomial.
pub fn levine_divisible(poly: &LaurentPoly, n: usize) -> bool {
    poly.divisible_by_power(2 * n as i32 - 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, BraidWord};
    use num_traits::Signed;

    fn closure(k: usize, w: &[i32]) -> LinkDiagram {
        braid_closure(&BraidWord::new(k, w.to_vec()).unwrap())
    }

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn skein_examples() {
        assert_eq!(conway_skein(&closure(1, &[])).unwrap(), LaurentPoly::one());
        assert_eq!(conway_skein(&closure(2, &[1, 1, 1])).unwrap(), poly(&[(0, 1), (2, 1)]));
        assert_eq!(conway_skein(&closure(2, &[1, 1])).unwrap(), poly(&[(1, 1)]));
        assert_eq!(conway_skein(&closure(2, &[])).unwrap(), LaurentPoly::zero());
        assert_eq!(conway_skein(&closure(3, &[1, -2, 1, -2])).unwrap(), poly(&[(0, 1), (2, -1)]));
        let b = conway_skein(&closure(3, &[1, -2, 1, -2, 1, -2])).unwrap();
        assert!(b.divisible_by_power(4));
        assert_eq!(b.coeff(4).abs(), BigInt::from(1));
    }

    #[test]
    fn crossing_budget() {
        let big = closure(2, &[1; 17]);
        assert_eq!(
            conway_skein(&big),
            Err(Error::CrossingBudget { crossings: 17, budget: DEFAULT_CROSSING_BUDGET })
        );
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        // 3 - 2q + q^3
        let ys: Vec<BigInt> = (0..=3i64).map(|q| BigInt::from(3 - 2 * q + q * q * q)).collect();
        assert_eq!(interpolate(&ys), [3, -2, 0, 1].map(BigInt::from));
    }

    #[test]
    fn coefficient_examples() {
        let trefoil = poly(&[(0, 1), (2, 1)]);
        assert_eq!(coefficient_a(&trefoil, 1, 1).unwrap(), 1.into());
        assert_eq!(coefficient_a(&poly(&[(1, 1)]), 2, 0).unwrap(), 1.into());
        assert_eq!(coefficient_a(&LaurentPoly::zero(), 2, 3).unwrap(), 0.into());
        assert_eq!(
            coefficient_a(&poly(&[(2, 1)]), 2, 0),
            Err(Error::MalformedPolynomial { degree: 2, components: 2 })
        );
    }

    #[test]
    fn levine_examples() {
        assert_eq!(levine_top_coefficient(&MuBarTensor::new(2, &[]).unwrap()).unwrap(), 0.into());
        let borromean = MuBarTensor::new(3, &[((0, 1, 2), 1)]).unwrap();
        assert_eq!(borromean.get(2, 0, 1), 1);
        assert_eq!(borromean.get(1, 0, 2), -1);
        assert_eq!(levine_top_coefficient(&borromean).unwrap(), 1.into());
        assert_eq!(levine_top_coefficient(&MuBarTensor::new(3, &[]).unwrap()).unwrap(), 0.into());
        assert!(levine_top_coefficient(&MuBarTensor::new(1, &[]).unwrap()).is_err());
        assert!(MuBarTensor::new(3, &[((0, 1, 2), 1), ((1, 0, 2), 1)]).is_err());
        assert!(MuBarTensor::new(3, &[((0, 0, 2), 1)]).is_err());
    }
}
