//! Congruence checks for periodic links and periodic surgery manifolds, and
//! obstruction reports built from them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::conway::{coefficient_a, ConwayEngine};
use crate::error::{Error, Result};
use crate::lescop::{lescop_lambda_with, ConventionTable, LescopReport, DEFAULT_SUBSET_BUDGET};
use crate::linkalg::{det_exact, framed_matrix, FramedLink};
use crate::periodic::{orbit_variants, verify_periodicity, PeriodicPresentation, PeriodicityVerdict};
use crate::poly::{require_odd_prime, residue, LaurentPoly, PolyModP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    /// `grad(L_p+) - grad(L_p-) = z^p grad(L_p0)` mod p.
    Lemma51,
    /// `a_1` of an orbitally separated strongly periodic link vanishes mod p.
    Theorem2,
    /// `24 lambda(M) = 3 |H_1(M)| Sig(E(L))` mod p.
    Theorem1,
    /// `24 lambda(M) = 0` mod p when `b_1(M) > 0`.
    Corollary1,
    /// `24 lambda(M) = 0` mod p for algebraically split strongly periodic presentations.
    Corollary2,
    /// `D_1 = 0` mod p.
    D1Vanishes,
    /// `24 D_2 = 0` mod p.
    D2Vanishes,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Lemma51 => "lemma51",
            Self::Theorem2 => "thm2",
            Self::Theorem1 => "thm1",
            Self::Corollary1 => "cor1",
            Self::Corollary2 => "cor2",
            Self::D1Vanishes => "d1",
            Self::D2Vanishes => "d2",
        })
    }
}

/// The two sides of a congruence, exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sides {
    Integer { lhs: BigInt, rhs: BigInt },
    Polynomial { lhs: LaurentPoly, rhs: LaurentPoly },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceVerdict {
    pub statement: Statement,
    pub p: u64,
    pub sides: Sides,
    /// `lhs - rhs` mod p; a constant for integer sides.
    pub residue: PolyModP,
    pub holds: bool,
    /// Factor both sides were multiplied by to make them integers.
    pub denominator: BigInt,
    pub context: String,
    /// Named side conditions checked along the way.
    pub extra_checks: Vec<(String, bool)>,
}

impl CongruenceVerdict {
    fn integer(statement: Statement, p: u64, lhs: BigInt, rhs: BigInt, context: String) -> Result<Self> {
        let residue = PolyModP::from_poly(&LaurentPoly::monomial(&lhs - &rhs, 0), p)?;
        Ok(Self {
            statement,
            p,
            holds: residue.is_zero(),
            residue,
            sides: Sides::Integer { lhs, rhs },
            denominator: BigInt::one(),
            context,
            extra_checks: Vec::new(),
        })
    }

    /// Compares a rational left side with an integer right side, clearing
    /// the left side's denominator from both when needed.
    fn rational(statement: Statement, p: u64, lhs: &BigRational, rhs: BigInt, context: String) -> Result<Self> {
        let den = lhs.denom().clone();
        if residue(&den, p) == 0 {
            return Err(Error::Hypothesis(format!("denominator {den} is divisible by {p}")));
        }
        let mut v = Self::integer(statement, p, lhs.numer().clone(), rhs * &den, context)?;
        v.denominator = den;
        Ok(v)
    }

    fn polynomial(statement: Statement, p: u64, lhs: LaurentPoly, rhs: LaurentPoly, context: String) -> Result<Self> {
        let residue = PolyModP::from_poly(&(&lhs - &rhs), p)?;
        Ok(Self {
            statement,
            p,
            holds: residue.is_zero(),
            residue,
            sides: Sides::Polynomial { lhs, rhs },
            denominator: BigInt::one(),
            context,
            extra_checks: Vec::new(),
        })
    }

    /// The residue as a number, for integer verdicts.
    pub fn residue_value(&self) -> Option<u64> {
        match self.sides {
            Sides::Integer { .. } => Some(self.residue.coeff(0)),
            Sides::Polynomial { .. } => None,
        }
    }

    /// True when the congruence and every side condition hold.
    pub fn all_hold(&self) -> bool {
        self.holds && self.extra_checks.iter().all(|(_, ok)| *ok)
    }
}

fn describe(pres: &PeriodicPresentation) -> String {
    format!("quotient {} framings {:?} p={}", pres.quotient(), pres.quotient_framings(), pres.p())
}

fn require_strongly_periodic(pres: &PeriodicPresentation) -> Result<PeriodicityVerdict> {
    let verdict = verify_periodicity(pres)?;
    if !verdict.strongly_periodic {
        return Err(Error::NotPeriodic { reason: "not strongly periodic".into(), witnesses: verdict.witnesses });
    }
    Ok(verdict)
}

fn require_os(pres: &PeriodicPresentation) -> Result<PeriodicityVerdict> {
    let verdict = require_strongly_periodic(pres)?;
    if !verdict.orbitally_separated {
        return Err(Error::NotPeriodic { reason: "not orbitally separated".into(), witnesses: verdict.witnesses });
    }
    Ok(verdict)
}

/// The skein congruence for the covers of a quotient crossing and its switch
/// and smoothing. The positive variant is the one whose quotient letter is
/// positive, whichever of the two the presentation carries.
pub fn check_lemma51(
    pres: &PeriodicPresentation,
    quotient_crossing: usize,
    engine: &mut ConwayEngine,
) -> Result<CongruenceVerdict> {
    let p = require_odd_prime(pres.p())?;
    require_strongly_periodic(pres)?;
    let v = orbit_variants(pres, quotient_crossing)?;
    let as_is = engine.conway(&v.plus)?;
    let switched = engine.conway(&v.minus)?;
    let zero = engine.conway(&v.zero)?;
    let positive = pres.quotient().letters()[quotient_crossing] > 0;
    let lhs = if positive { &as_is - &switched } else { &switched - &as_is };
    let rhs = zero.shift(p as i32);
    CongruenceVerdict::polynomial(
        Statement::Lemma51,
        p,
        lhs,
        rhs,
        format!("{} crossing {quotient_crossing}", describe(pres)),
    )
}

/// `a_1` of the cover mod p, for orbitally separated strongly periodic presentations.
pub fn check_theorem2(pres: &PeriodicPresentation, engine: &mut ConwayEngine) -> Result<CongruenceVerdict> {
    let p = require_odd_prime(pres.p())?;
    let verdict = require_os(pres)?;
    let mut out = a1_residue(pres.link(), p, engine, describe(pres))?;
    out.extra_checks.push(("characterizations agree".into(), verdict.consistent()));
    if let Some(ok) = verdict.orbit_sums_vanish {
        out.extra_checks.push(("orbit linking sums vanish".into(), ok));
    }
    Ok(out)
}

/// `a_1 = 0` mod p without any hypothesis; for negative controls.
pub fn a1_residue(link: &FramedLink, p: u64, engine: &mut ConwayEngine, context: String) -> Result<CongruenceVerdict> {
    let p = require_odd_prime(p)?;
    let d = link.diagram();
    let a1 = coefficient_a(&engine.conway(d)?, d.component_count(), 1)?;
    CongruenceVerdict::integer(Statement::Theorem2, p, a1, BigInt::zero(), context)
}

/// The main congruence with its two partial sums.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Outcome {
    pub verdict: CongruenceVerdict,
    pub d1: CongruenceVerdict,
    pub d2: CongruenceVerdict,
    pub report: LescopReport,
}

/// `24 lambda(M) = 3 |H_1(M)| Sig(E(L))` mod p for surgery on the cover,
/// when the quotient surgery is a homology sphere.
pub fn check_theorem1(
    pres: &PeriodicPresentation,
    conv: &ConventionTable,
    engine: &mut ConwayEngine,
) -> Result<Theorem1Outcome> {
    let p = require_odd_prime(pres.p())?;
    let qdet = det_exact(&framed_matrix(&pres.quotient_link())?.0)?;
    if qdet.abs() != BigInt::one() {
        return Err(Error::Hypothesis(format!(
            "quotient is not an integral homology sphere: |det| = {}",
            qdet.abs()
        )));
    }
    require_os(pres)?;
    let report = lescop_lambda_with(pres.link(), conv, engine, DEFAULT_SUBSET_BUDGET)?;
    let ctx = describe(pres);
    let t24 = BigRational::from_integer(BigInt::from(24));
    let rhs = BigInt::from(3) * &report.h1_order * BigInt::from(report.sig);
    let verdict = CongruenceVerdict::rational(Statement::Theorem1, p, &(&report.lambda * &t24), rhs, ctx.clone())?;
    let d1 = CongruenceVerdict::rational(Statement::D1Vanishes, p, &report.d1, BigInt::zero(), ctx.clone())?;
    let d2 = CongruenceVerdict::rational(Statement::D2Vanishes, p, &(&report.d2 * &t24), BigInt::zero(), ctx)?;
    Ok(Theorem1Outcome { verdict, d1, d2, report })
}

/// `24 lambda = 0` mod p for a surgery manifold with positive first Betti number.
pub fn check_corollary1(
    link: &FramedLink,
    p: u64,
    conv: &ConventionTable,
    engine: &mut ConwayEngine,
) -> Result<CongruenceVerdict> {
    let p = require_odd_prime(p)?;
    let det = det_exact(&framed_matrix(link)?.0)?;
    if !det.is_zero() {
        return Err(Error::Hypothesis(format!("first Betti number is zero: det E(L) = {det}")));
    }
    let report = lescop_lambda_with(link, conv, engine, DEFAULT_SUBSET_BUDGET)?;
    let t24 = BigRational::from_integer(BigInt::from(24));
    CongruenceVerdict::rational(
        Statement::Corollary1,
        p,
        &(&report.lambda * t24),
        BigInt::zero(),
        format!("{} components, lambda {}", link.component_count(), report.lambda),
    )
}

/// `24 lambda = 0` mod p for a strongly periodic presentation whose cover is
/// algebraically split. Also checks that each framing occurs a multiple of
/// p times and that the signature vanishes mod p.
pub fn check_corollary2(
    pres: &PeriodicPresentation,
    conv: &ConventionTable,
    engine: &mut ConwayEngine,
) -> Result<CongruenceVerdict> {
    let p = require_odd_prime(pres.p())?;
    require_strongly_periodic(pres)?;
    let lk = pres.link().diagram().linking_numbers()?;
    for (i, row) in lk.iter().enumerate() {
        if let Some(j) = (i + 1..row.len()).find(|&j| row[j] != 0) {
            return Err(Error::Hypothesis(format!(
                "cover is not algebraically split: lk({i}, {j}) = {}",
                row[j]
            )));
        }
    }
    let report = lescop_lambda_with(pres.link(), conv, engine, DEFAULT_SUBSET_BUDGET)?;
    let t24 = BigRational::from_integer(BigInt::from(24));
    let mut v = CongruenceVerdict::rational(
        Statement::Corollary2,
        p,
        &(&report.lambda * t24),
        BigInt::zero(),
        describe(pres),
    )?;
    let mut diagonal = pres.link().framings().to_vec();
    diagonal.sort_unstable();
    let multiplicities_ok = diagonal
        .chunk_by(|a, b| a == b)
        .all(|run| (run.len() as u64).is_multiple_of(p));
    v.extra_checks.push(("diagonal multiplicities divisible by p".into(), multiplicities_ok));
    v.extra_checks.push(("signature divisible by p".into(), report.sig.rem_euclid(p as i64) == 0));
    Ok(v)
}

/// The outcome at one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeCheck {
    pub p: u64,
    /// `24 lambda` mod p when the positive-Betti-number test applies.
    pub residue: Option<u64>,
    pub ruled_out: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub manifold_label: String,
    pub lambda: BigRational,
    pub h1_order: BigInt,
    pub sig: i64,
    pub tested_primes: Vec<u64>,
    pub ruled_out: Vec<u64>,
    pub checks: Vec<PrimeCheck>,
    pub caveats: Vec<String>,
}

/// Rules out periods of the surgery manifold where a necessary congruence
/// fails. Never asserts that a period exists.
pub fn obstruction_report(
    label: &str,
    manifold: &FramedLink,
    primes: &[u64],
    conv: &ConventionTable,
    engine: &mut ConwayEngine,
) -> Result<ObstructionReport> {
    for &p in primes {
        require_odd_prime(p)?;
    }
    let report = lescop_lambda_with(manifold, conv, engine, DEFAULT_SUBSET_BUDGET)?;
    let betti_positive = report.det.is_zero();
    let t24 = &report.lambda * BigRational::from_integer(BigInt::from(24));
    let checks: Vec<PrimeCheck> = primes
        .iter()
        .map(|&p| {
            if !betti_positive {
                return PrimeCheck { p, residue: None, ruled_out: false };
            }
            // p never divides the denominator of 24 lambda, which divides 2
            let r = residue(t24.numer(), p);
            PrimeCheck { p, residue: Some(r), ruled_out: r != 0 }
        })
        .collect();
    let mut caveats = alloc::vec![String::from(
        "a prime is ruled out only when a necessary condition for a semi-free action with a circle of fixed points fails; surviving primes are not claimed to be periods"
    )];
    if betti_positive {
        caveats.push("first Betti number is positive: 24 lambda must vanish mod every period".into());
    } else {
        caveats.push(
            "first Betti number is zero: the congruence with 3 |H_1| Sig needs an orbitally separated strongly periodic presentation over a homology sphere quotient, which a single presentation cannot supply; nothing is ruled out"
                .into(),
        );
    }
    Ok(ObstructionReport {
        manifold_label: label.into(),
        lambda: report.lambda,
        h1_order: report.h1_order,
        sig: report.sig,
        tested_primes: primes.to_vec(),
        ruled_out: checks.iter().filter(|c| c.ruled_out).map(|c| c.p).collect(),
        checks,
        caveats,
    })
}
