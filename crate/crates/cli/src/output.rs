//! Report types. Every report serializes to JSON and parses back to an equal value.

use std::fmt::{self, Write as _};

use lescop_core::periodic::Witness;
use lescop_core::theorems::{CongruenceVerdict, Sides};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{CliError, CliResult};

pub const SCHEMA: &str = "lescop-cli/1";

/// An exact integer: a JSON number when it fits in `i64`, a decimal string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Int {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Int(v.into())),
            Raw::Text(t) => t.parse().map(Int).map_err(serde::de::Error::custom),
        }
    }
}

impl From<&BigInt> for Int {
    fn from(v: &BigInt) -> Self {
        Int(v.clone())
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: Int,
    pub den: Int,
}

impl From<&BigRational> for Rational {
    fn from(q: &BigRational) -> Self {
        Rational { num: Int(q.numer().clone()), den: Int(q.denom().clone()) }
    }
}

impl Rational {
    pub fn to_big(&self) -> CliResult<BigRational> {
        if self.den.0 == BigInt::from(0) {
            return Err(CliError::Input("zero denominator".into()));
        }
        Ok(BigRational::new(self.num.0.clone(), self.den.0.clone()))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.0 == BigInt::from(1) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum WitnessOut {
    AxisLinking { component: usize, residue: u64 },
    QuotientLinking { components: (usize, usize), linking: i64 },
    FixedComponent { component: usize },
}

impl From<&Witness> for WitnessOut {
    fn from(w: &Witness) -> Self {
        match *w {
            Witness::AxisLinking { component, residue } => Self::AxisLinking { component, residue },
            Witness::QuotientLinking { components, linking } => Self::QuotientLinking { components, linking },
            Witness::FixedComponent { component } => Self::FixedComponent { component },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub degree: i32,
    pub coeff: Int,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConwayOut {
    pub components: usize,
    pub crossings: usize,
    pub polynomial: String,
    pub terms: Vec<Term>,
    /// `a_i` is the coefficient of `z^(n - 1 + 2i)`.
    pub a: Vec<Int>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkmatOut {
    pub components: usize,
    pub framings: Vec<i64>,
    pub linking_matrix: Vec<Vec<i64>>,
    pub hoste_matrix: Vec<Vec<i64>>,
    pub a0_cofactor: Int,
    pub det: Int,
    pub h1_order: Int,
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
    pub signature: i64,
    pub sign: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsetOut {
    pub subset: Vec<usize>,
    pub det_restricted: Int,
    pub a1: Int,
    pub det_complement: Int,
    pub theta: Int,
    pub d1_term: Rational,
    pub d2_term: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LescopOut {
    pub lambda: Rational,
    pub twelve_lambda: Int,
    pub d1: Rational,
    pub d2: Rational,
    pub sig_term: Rational,
    pub signature: i64,
    pub sign: i64,
    pub det: Int,
    pub h1_order: Int,
    pub conventions_version: String,
    pub audit: bool,
    pub per_subset: Vec<SubsetOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOut {
    pub quotient_component: usize,
    pub sheet: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicOut {
    pub quotient: String,
    pub p: u64,
    pub quotient_framings: Vec<i64>,
    pub cover: String,
    pub cover_components: usize,
    pub cover_framings: Vec<i64>,
    pub orbit_of: Vec<OrbitOut>,
    pub rotation: Vec<usize>,
    pub strongly_periodic: bool,
    pub orbitally_separated: bool,
    pub axis_linking_residues: Vec<u64>,
    pub characterizations_agree: bool,
    pub orbit_sums_vanish: Option<bool>,
    pub witnesses: Vec<WitnessOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SidesOut {
    Integer { lhs: Int, rhs: Int },
    Polynomial { lhs: String, rhs: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictOut {
    pub statement: String,
    pub p: u64,
    pub context: String,
    pub sides: SidesOut,
    /// Nonzero terms of `lhs - rhs` mod p; a constant for integer sides.
    pub residue: Vec<(i32, u64)>,
    pub holds: bool,
    pub denominator: Int,
    pub extra_checks: Vec<CheckOut>,
}

impl From<&CongruenceVerdict> for VerdictOut {
    fn from(v: &CongruenceVerdict) -> Self {
        let sides = match &v.sides {
            Sides::Integer { lhs, rhs } => SidesOut::Integer { lhs: lhs.into(), rhs: rhs.into() },
            Sides::Polynomial { lhs, rhs } => SidesOut::Polynomial { lhs: lhs.to_string(), rhs: rhs.to_string() },
        };
        VerdictOut {
            statement: v.statement.to_string(),
            p: v.p,
            context: v.context.clone(),
            sides,
            residue: v.residue.terms().collect(),
            holds: v.holds,
            denominator: (&v.denominator).into(),
            extra_checks: v.extra_checks.iter().map(|(n, ok)| CheckOut { name: n.clone(), holds: *ok }).collect(),
        }
    }
}

impl VerdictOut {
    pub fn all_hold(&self) -> bool {
        self.holds && self.extra_checks.iter().all(|c| c.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub statement: String,
    pub presentations: usize,
    pub checked: usize,
    pub failed: usize,
    pub holds: bool,
    pub verdicts: Vec<VerdictOut>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOut {
    pub p: u64,
    pub residue: Option<u64>,
    pub ruled_out: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportOut {
    pub manifold: String,
    pub lambda: Rational,
    pub h1_order: Int,
    pub signature: i64,
    pub tested_primes: Vec<u64>,
    pub ruled_out: Vec<u64>,
    pub checks: Vec<PrimeOut>,
    pub caveats: Vec<String>,
}

/// Convention rules by name, as read by `--conventions`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionsOut {
    pub empty_det_value: i64,
    pub singleton: String,
    pub pair: String,
    pub diagonal_chain: String,
    pub off_diagonal_chain: String,
    pub cycles: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrateOut {
    pub conventions: ConventionsOut,
    pub correction: Option<(i64, i64)>,
    pub provenance: Vec<String>,
    pub content_hash: String,
    pub version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "result", rename_all = "kebab-case")]
pub enum Output {
    Conway(Vec<ConwayOut>),
    Linkmat(Vec<LinkmatOut>),
    Lescop(Vec<LescopOut>),
    BuildPeriodic(Vec<PeriodicOut>),
    Verify(VerifyOut),
    Report(ReportOut),
    Calibrate(CalibrateOut),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub schema: String,
    #[serde(flatten)]
    pub output: Output,
}

impl Output {
    /// Exit status: 1 when a checked statement fails, else 0.
    pub fn exit_code(&self) -> u8 {
        match self {
            Output::Verify(v) if !v.holds => 1,
            _ => 0,
        }
    }

    pub fn to_json(&self) -> String {
        let env = Envelope { schema: SCHEMA.into(), output: self.clone() };
        serde_json::to_string_pretty(&env).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        match self {
            Output::Conway(items) => {
                for c in items {
                    let a: Vec<String> = c.a.iter().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "components {}  crossings {}", c.components, c.crossings);
                    let _ = writeln!(s, "conway      {}", c.polynomial);
                    let _ = writeln!(s, "a_i         [{}]", a.join(", "));
                }
            }
            Output::Linkmat(items) => {
                for m in items {
                    let _ = writeln!(s, "linking matrix");
                    for row in &m.linking_matrix {
                        let _ = writeln!(s, "  {}", row_text(row));
                    }
                    let _ = writeln!(s, "hoste matrix");
                    for row in &m.hoste_matrix {
                        let _ = writeln!(s, "  {}", row_text(row));
                    }
                    let _ = writeln!(s, "a0 cofactor {}", m.a0_cofactor);
                    let _ = writeln!(s, "det {}  |H1| {}  sign {}", m.det, m.h1_order, m.sign);
                    let _ = writeln!(
                        s,
                        "signature {}  (b+ {}, b- {}, b0 {})",
                        m.signature, m.b_plus, m.b_minus, m.b_zero
                    );
                }
            }
            Output::Lescop(items) => {
                for l in items {
                    let _ = writeln!(s, "lambda      {}", l.lambda);
                    let _ = writeln!(s, "D1          {}", l.d1);
                    let _ = writeln!(s, "D2          {}", l.d2);
                    let _ = writeln!(s, "|H1|Sig/8   {}", l.sig_term);
                    let _ = writeln!(s, "det {}  |H1| {}  Sig {}", l.det, l.h1_order, l.signature);
                    let _ = writeln!(s, "conventions {}", l.conventions_version);
                    let _ = writeln!(s, "{:<12} {:>8} {:>6} {:>8} {:>8} {:>10} {:>10}", "subset", "detE(;J)", "a1", "detE", "theta", "D1 term", "D2 term");
                    for t in &l.per_subset {
                        let _ = writeln!(
                            s,
                            "{:<12} {:>8} {:>6} {:>8} {:>8} {:>10} {:>10}",
                            format!("{:?}", t.subset),
                            t.det_restricted.to_string(),
                            t.a1.to_string(),
                            t.det_complement.to_string(),
                            t.theta.to_string(),
                            t.d1_term.to_string(),
                            t.d2_term.to_string()
                        );
                    }
                }
            }
            Output::BuildPeriodic(items) => {
                for p in items {
                    let _ = writeln!(s, "quotient {}  p {}  framings {:?}", p.quotient, p.p, p.quotient_framings);
                    let _ = writeln!(s, "cover    {}  ({} components, framings {:?})", p.cover, p.cover_components, p.cover_framings);
                    let _ = writeln!(s, "rotation {:?}", p.rotation);
                    let _ = writeln!(
                        s,
                        "strongly periodic {}  orbitally separated {}  characterizations agree {}",
                        p.strongly_periodic, p.orbitally_separated, p.characterizations_agree
                    );
                    for w in &p.witnesses {
                        let _ = writeln!(s, "witness  {w:?}");
                    }
                }
            }
            Output::Verify(v) => {
                for x in &v.verdicts {
                    let mark = if x.all_hold() { "holds" } else { "FAILS" };
                    let _ = writeln!(s, "{:<6} p={} {mark:<6} residue {:?}  {}", x.statement, x.p, x.residue, x.context);
                    for c in x.extra_checks.iter().filter(|c| !c.holds) {
                        let _ = writeln!(s, "       side condition failed: {}", c.name);
                    }
                }
                let _ = writeln!(
                    s,
                    "{}: {} presentations, {} checks, {} failed",
                    v.statement, v.presentations, v.checked, v.failed
                );
            }
            Output::Report(r) => {
                let _ = writeln!(s, "manifold {}  lambda {}  |H1| {}  Sig {}", r.manifold, r.lambda, r.h1_order, r.signature);
                for c in &r.checks {
                    let verdict = if c.ruled_out { "ruled out" } else { "not ruled out" };
                    let residue = c.residue.map_or("-".to_string(), |r| r.to_string());
                    let _ = writeln!(s, "p={:<4} 24 lambda mod p: {residue:<4} {verdict}", c.p);
                }
                for c in &r.caveats {
                    let _ = writeln!(s, "note: {c}");
                }
            }
            Output::Calibrate(c) => {
                let k = &c.conventions;
                let _ = writeln!(s, "singleton          {}", k.singleton);
                let _ = writeln!(s, "pair               {}", k.pair);
                let _ = writeln!(s, "diagonal chain     {}", k.diagonal_chain);
                let _ = writeln!(s, "off-diagonal chain {}", k.off_diagonal_chain);
                let _ = writeln!(s, "cycles             {}", k.cycles);
                let _ = writeln!(s, "empty det          {}", k.empty_det_value);
                if let Some((a, b)) = c.correction {
                    let _ = writeln!(s, "correction         ({a} + {b} f) / 24 per component");
                }
                let _ = writeln!(s, "version            {}", c.version);
            }
        }
        s
    }
}

fn row_text(row: &[i64]) -> String {
    row.iter().map(|v| format!("{v:>4}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_integers_round_trip() {
        let big = Int("123456789012345678901234567890".parse().unwrap());
        let text = serde_json::to_string(&big).unwrap();
        assert_eq!(text, "\"123456789012345678901234567890\"");
        assert_eq!(serde_json::from_str::<Int>(&text).unwrap(), big);
        assert_eq!(serde_json::to_string(&Int((-7).into())).unwrap(), "-7");
        assert_eq!(serde_json::from_str::<Int>("-7").unwrap(), Int((-7).into()));
    }

    #[test]
    fn envelope_round_trip() {
        let out = Output::Report(ReportOut {
            manifold: "m".into(),
            lambda: Rational { num: Int(1.into()), den: Int(12.into()) },
            h1_order: Int(0.into()),
            signature: 0,
            tested_primes: vec![5],
            ruled_out: vec![5],
            checks: vec![PrimeOut { p: 5, residue: Some(2), ruled_out: true }],
            caveats: vec![],
        });
        let env: Envelope = serde_json::from_str(&out.to_json()).unwrap();
        assert_eq!(env.schema, SCHEMA);
        assert_eq!(env.output, out);
    }
}
