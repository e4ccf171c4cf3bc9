//! Integer Laurent polynomials in one variable and their reductions mod p.
//!
//! Conway polynomials live in `Z[z]`; the Seifert route passes through
//! `Z[x, x^-1]` before rewriting in `z = x - x^-1`, so negative degrees are
//! allowed.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Sparse integer Laurent polynomial. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable itself.
    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, degree: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff.into());
        p
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated degrees add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (d, c) in terms {
            p.add_term(d, c.into());
        }
        p
    }

    pub fn add_term(&mut self, degree: i32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, degree: i32) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing degree.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, c * factor)).collect(),
        }
    }

    /// True when `z^k` divides the polynomial (the zero polynomial is divisible by everything).
    pub fn divisible_by_power(&self, k: i32) -> bool {
        self.min_degree().is_none_or(|d| d >= k)
    }

    /// Substitutes `x -> x^-1`.
    pub fn reflect(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(d, c)| (-d, c.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficientwise reduction modulo an odd prime.
    pub fn reduce_mod_p(&self, p: u64) -> Result<PolyModP> {
        PolyModP::from_poly(self, p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            match *d {
                0 => write!(f, "{}", abs)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}", abs)?;
                    }
                    if *d == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{}", d)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks that `p` is an odd prime.
pub fn require_odd_prime(p: u64) -> Result<u64> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    Ok(p)
}

/// Least nonnegative residue of `value` mod `p`.
pub fn residue(value: &BigInt, p: u64) -> u64 {
    value
        .mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

/// A polynomial with coefficients reduced into `[0, p)` for an odd prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyModP {
    p: u64,
    coeffs: BTreeMap<i32, u64>,
}

impl PolyModP {
    pub fn from_poly(poly: &LaurentPoly, p: u64) -> Result<Self> {
        require_odd_prime(p)?;
        let coeffs = poly
            .terms()
            .filter_map(|(d, c)| {
                let r = residue(c, p);
                (r != 0).then_some((d, r))
            })
            .collect();
        Ok(Self { p, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeff(&self, degree: i32) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u64)> + '_ {
        self.coeffs.iter().map(|(d, c)| (*d, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.coeffs.keys().copied().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_cancels_zero_terms() {
        let a = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        let b = LaurentPoly::from_terms([(2, 1)]);
        let d = &a - &b;
        assert_eq!(d, LaurentPoly::one());
        assert_eq!((&d - &d).terms().count(), 0);
        assert_eq!(&LaurentPoly::z() * &LaurentPoly::z(), LaurentPoly::monomial(1, 2));
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(0, 1), (2, -3), (1, 1)]);
        assert_eq!(alloc::format!("{}", p), "1 + z - 3z^2");
        assert_eq!(alloc::format!("{}", LaurentPoly::zero()), "0");
    }

    #[test]
    fn reduce_examples() {
        let trefoil = LaurentPoly::from_terms([(0, 1), (2, 1)]);
        let r = trefoil.reduce_mod_p(3).unwrap();
        assert_eq!(r.terms().collect::<Vec<_>>(), [(0, 1), (2, 1)]);
        let r = LaurentPoly::monomial(3, 4).reduce_mod_p(3).unwrap();
        assert!(r.is_zero());
        let r = LaurentPoly::monomial(-1, 1).reduce_mod_p(5).unwrap();
        assert_eq!(r.coeff(1), 4);
        assert_eq!(trefoil.reduce_mod_p(4), Err(Error::NotOddPrime(4)));
        assert_eq!(trefoil.reduce_mod_p(2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
