use std::fmt::Debug;
use std::time::{Duration, Instant};

use lescop_core::conway::{coefficient_a, ConwayEngine};
use lescop_core::lescop::{
    calibrate_conventions, lescop_lambda_with, standard_anchors, ConventionTable, CycleCount, DiagonalChainRule,
    OffDiagonalChainRule, PairRule, SingletonRule,
};
use lescop_core::linkalg::{a0_cofactor, framed_matrix, hoste_matrix, signature_data, FramedLink};
use lescop_core::periodic::{verify_periodicity, PeriodicPresentation};
use lescop_core::theorems::{
    check_corollary1, check_corollary2, check_lemma51, check_theorem1, check_theorem2, obstruction_report,
    CongruenceVerdict,
};
use lescop_core::Error as CoreError;

use crate::error::{CliError, CliResult};
use crate::input::{resolve, InputSpec};
use crate::output::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Statement {
    Lemma51,
    Thm1,
    Thm2,
    Cor1,
    Cor2,
}

/// Everything a job needs besides the command itself.
pub struct Job {
    pub input: Option<String>,
    pub moduli: Vec<u64>,
    pub seed: Option<u64>,
    pub max_crossings: usize,
    pub max_components: usize,
    pub time_limit: Option<u64>,
    pub conventions: ConventionTable,
}

impl Job {
    fn input(&self) -> CliResult<InputSpec> {
        let text = self.input.as_deref().ok_or_else(|| CliError::Usage("--input is required".into()))?;
        resolve(text)
    }

    fn modulus(&self) -> CliResult<Option<u64>> {
        match self.moduli.as_slice() {
            [] => Ok(None),
            [p] => Ok(Some(*p)),
            _ => Err(CliError::Usage("this command takes a single --modulus".into())),
        }
    }

    fn engine(&self) -> ConwayEngine {
        ConwayEngine::new(self.max_crossings)
    }

    fn deadline(&self) -> Deadline {
        Deadline { start: Instant::now(), limit: self.time_limit }
    }

    /// Links of a link, periodic or corpus input; periodic inputs contribute their cover.
    fn links(&self) -> CliResult<Vec<FramedLink>> {
        Ok(match self.input()? {
            InputSpec::Link(l) => vec![l.framed()?],
            InputSpec::Periodic(p) => vec![p.build(self.modulus()?)?.link().clone()],
            InputSpec::Corpus(c) => c
                .build(self.modulus()?, self.seed)?
                .iter()
                .map(|p| p.link().clone())
                .collect(),
            InputSpec::Anchors(_) => return Err(CliError::Input("expected a link, not an anchor list".into())),
        })
    }

    fn presentations(&self) -> CliResult<Vec<PeriodicPresentation>> {
        match self.input()? {
            InputSpec::Periodic(p) => Ok(vec![p.build(self.modulus()?)?]),
            InputSpec::Corpus(c) => c.build(self.modulus()?, self.seed),
            _ => Err(CliError::Input("expected a periodic presentation or a corpus".into())),
        }
    }
}

struct Deadline {
    start: Instant,
    limit: Option<u64>,
}

impl Deadline {
    fn check(&self) -> CliResult<()> {
        match self.limit {
            Some(secs) if self.start.elapsed() > Duration::from_secs(secs) => Err(CliError::TimeLimit(secs)),
            _ => Ok(()),
        }
    }
}

pub fn conway(job: &Job) -> CliResult<Output> {
    let mut e = job.engine();
    let deadline = job.deadline();
    let mut out = Vec::new();
    for link in job.links()? {
        deadline.check()?;
        let d = link.diagram();
        let n = d.component_count();
        let poly = e.conway(d)?;
        let top = poly.max_degree().unwrap_or(0);
        let a = (0..)
            .take_while(|i| n as i32 - 1 + 2 * i <= top)
            .map(|i| coefficient_a(&poly, n, i as usize).map(Int))
            .collect::<Result<_, _>>()?;
        out.push(ConwayOut {
            components: n,
            crossings: d.crossing_count(),
            polynomial: poly.to_string(),
            terms: poly.terms().map(|(degree, c)| Term { degree, coeff: c.into() }).collect(),
            a,
        });
    }
    Ok(Output::Conway(out))
}

pub fn linkmat(job: &Job) -> CliResult<Output> {
    let mut out = Vec::new();
    for link in job.links()? {
        let e = framed_matrix(&link)?.0;
        let h = hoste_matrix(link.diagram())?;
        let sig = signature_data(&e)?;
        out.push(LinkmatOut {
            components: link.component_count(),
            framings: link.framings().to_vec(),
            linking_matrix: e.to_rows(),
            hoste_matrix: h.0.to_rows(),
            a0_cofactor: Int(a0_cofactor(&h)?),
            det: (&sig.det).into(),
            h1_order: (&sig.h1_order).into(),
            b_plus: sig.b_plus,
            b_minus: sig.b_minus,
            b_zero: sig.b_zero,
            signature: sig.sig,
            sign: sig.sign_l,
        });
    }
    Ok(Output::Linkmat(out))
}

pub fn lescop(job: &Job) -> CliResult<Output> {
    let mut e = job.engine();
    let deadline = job.deadline();
    let mut out = Vec::new();
    for link in job.links()? {
        deadline.check()?;
        let r = lescop_lambda_with(&link, &job.conventions, &mut e, job.max_components)?;
        let twelve = r.twelve_lambda().ok_or(CoreError::Overflow("12 lambda is not an integer"))?;
        out.push(LescopOut {
            lambda: (&r.lambda).into(),
            twelve_lambda: Int(twelve),
            d1: (&r.d1).into(),
            d2: (&r.d2).into(),
            sig_term: (&r.sig_term).into(),
            signature: r.sig,
            sign: r.sign_l,
            det: (&r.det).into(),
            h1_order: (&r.h1_order).into(),
            conventions_version: r.conventions_version.clone(),
            audit: r.audit(),
            per_subset: r
                .per_subset
                .iter()
                .map(|t| SubsetOut {
                    subset: t.subset.clone(),
                    det_restricted: (&t.det_restricted).into(),
                    a1: (&t.a1).into(),
                    det_complement: (&t.det_complement).into(),
                    theta: (&t.theta).into(),
                    d1_term: (&t.d1_term).into(),
                    d2_term: (&t.d2_term).into(),
                })
                .collect(),
        });
    }
    Ok(Output::Lescop(out))
}

pub fn build_periodic(job: &Job) -> CliResult<Output> {
    let mut out = Vec::new();
    for pres in job.presentations()? {
        let v = verify_periodicity(&pres)?;
        let cover = pres.link().diagram().braid().map_or_else(String::new, |b| b.to_string());
        out.push(PeriodicOut {
            quotient: pres.quotient().to_string(),
            p: pres.p(),
            quotient_framings: pres.quotient_framings().to_vec(),
            cover,
            cover_components: pres.link().component_count(),
            cover_framings: pres.link().framings().to_vec(),
            orbit_of: pres
                .orbit_of()
                .iter()
                .map(|&(q, t)| OrbitOut { quotient_component: q, sheet: t })
                .collect(),
            rotation: pres.rotation().to_vec(),
            strongly_periodic: v.strongly_periodic,
            orbitally_separated: v.orbitally_separated,
            axis_linking_residues: v.axis_linking_residues.clone(),
            characterizations_agree: v.consistent(),
            orbit_sums_vanish: v.orbit_sums_vanish,
            witnesses: v.witnesses.iter().map(WitnessOut::from).collect(),
        });
    }
    Ok(Output::BuildPeriodic(out))
}

pub fn verify(job: &Job, statement: Statement) -> CliResult<Output> {
    let mut e = job.engine();
    let deadline = job.deadline();
    let conv = &job.conventions;
    let mut verdicts: Vec<CongruenceVerdict> = Vec::new();
    let presentations = if statement == Statement::Cor1 {
        let p = job.modulus()?.ok_or_else(|| CliError::Usage("cor1 needs --modulus".into()))?;
        let links = job.links()?;
        for link in &links {
            deadline.check()?;
            verdicts.push(check_corollary1(link, p, conv, &mut e)?);
        }
        links.len()
    } else {
        let presentations = job.presentations()?;
        for pres in &presentations {
            deadline.check()?;
            match statement {
                Statement::Lemma51 => {
                    for c in 0..pres.quotient().len() {
                        verdicts.push(check_lemma51(pres, c, &mut e)?);
                    }
                }
                Statement::Thm2 => verdicts.push(check_theorem2(pres, &mut e)?),
                Statement::Thm1 => {
                    let o = check_theorem1(pres, conv, &mut e)?;
                    verdicts.extend([o.verdict, o.d1, o.d2]);
                }
                Statement::Cor2 => verdicts.push(check_corollary2(pres, conv, &mut e)?),
                Statement::Cor1 => unreachable!("handled above"),
            }
        }
        presentations.len()
    };
    let verdicts: Vec<VerdictOut> = verdicts.iter().map(VerdictOut::from).collect();
    let failed = verdicts.iter().filter(|v| !v.all_hold()).count();
    Ok(Output::Verify(VerifyOut {
        statement: statement_name(statement).into(),
        presentations,
        checked: verdicts.len(),
        failed,
        holds: failed == 0,
        verdicts,
    }))
}

fn statement_name(s: Statement) -> &'static str {
    match s {
        Statement::Lemma51 => "lemma51",
        Statement::Thm1 => "thm1",
        Statement::Thm2 => "thm2",
        Statement::Cor1 => "cor1",
        Statement::Cor2 => "cor2",
    }
}

pub const DEFAULT_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

pub fn report(job: &Job) -> CliResult<Output> {
    let label = job.input.clone().unwrap_or_default();
    let links = job.links()?;
    let [link] = links.as_slice() else {
        return Err(CliError::Input("report takes a single surgery presentation".into()));
    };
    let primes = if job.moduli.is_empty() { DEFAULT_PRIMES.to_vec() } else { job.moduli.clone() };
    let mut e = job.engine();
    let r = obstruction_report(&label, link, &primes, &job.conventions, &mut e)?;
    Ok(Output::Report(ReportOut {
        manifold: r.manifold_label,
        lambda: (&r.lambda).into(),
        h1_order: (&r.h1_order).into(),
        signature: r.sig,
        tested_primes: r.tested_primes,
        ruled_out: r.ruled_out,
        checks: r.checks.iter().map(|c| PrimeOut { p: c.p, residue: c.residue, ruled_out: c.ruled_out }).collect(),
        caveats: r.caveats,
    }))
}

pub fn calibrate(job: &Job) -> CliResult<Output> {
    let anchors = match &job.input {
        None => standard_anchors(),
        Some(_) => match job.input()? {
            InputSpec::Anchors(a) => a.anchors()?,
            _ => return Err(CliError::Input("calibrate expects an anchor list".into())),
        },
    };
    let cal = calibrate_conventions(&anchors)?;
    Ok(Output::Calibrate(CalibrateOut {
        conventions: conventions_out(&cal.table)?,
        correction: cal.correction,
        provenance: cal.table.provenance.clone(),
        content_hash: cal.table.content_hash(),
        version: cal.table.version(),
    }))
}

fn name<T: Debug>(rule: Option<T>) -> CliResult<String> {
    rule.map(|r| format!("{r:?}")).ok_or_else(|| CoreError::ConventionNotFixed("table has unset rules".into()).into())
}

pub fn conventions_out(t: &ConventionTable) -> CliResult<ConventionsOut> {
    Ok(ConventionsOut {
        empty_det_value: t.empty_det_value,
        singleton: name(t.singleton)?,
        pair: name(t.pair)?,
        diagonal_chain: name(t.diagonal_chain)?,
        off_diagonal_chain: name(t.off_diagonal_chain)?,
        cycles: name(t.cycles)?,
    })
}

fn parse_rule<T: Debug + Copy>(all: &[T], field: &str, text: &str) -> CliResult<T> {
    all.iter().copied().find(|r| format!("{r:?}") == text).ok_or_else(|| {
        let names: Vec<String> = all.iter().map(|r| format!("{r:?}")).collect();
        CliError::Input(format!("unknown {field} rule `{text}`; expected one of {}", names.join(", ")))
    })
}

pub fn conventions_from(c: &ConventionsOut) -> CliResult<ConventionTable> {
    let mut t = ConventionTable::with_rules(
        parse_rule(&SingletonRule::ALL, "singleton", &c.singleton)?,
        parse_rule(&PairRule::ALL, "pair", &c.pair)?,
        parse_rule(&DiagonalChainRule::ALL, "diagonal_chain", &c.diagonal_chain)?,
        parse_rule(&OffDiagonalChainRule::ALL, "off_diagonal_chain", &c.off_diagonal_chain)?,
        parse_rule(&CycleCount::ALL, "cycles", &c.cycles)?,
    );
    t.empty_det_value = c.empty_det_value;
    Ok(t)
}

/// Reads a conventions file: either the rules themselves or a saved `calibrate --json` report.
pub fn load_conventions(path: &str) -> CliResult<ConventionTable> {
    let text = std::fs::read_to_string(path)?;
    if let Ok(rules) = serde_json::from_str::<ConventionsOut>(&text) {
        return conventions_from(&rules);
    }
    match serde_json::from_str::<Envelope>(&text)?.output {
        Output::Calibrate(c) => conventions_from(&c.conventions),
        _ => Err(CliError::Input(format!("{path} holds no conventions"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_round_trip() {
        let std = ConventionTable::standard();
        let back = conventions_from(&conventions_out(&std).unwrap()).unwrap();
        assert_eq!(back.rules_text(), std.rules_text());
        let mut bad = conventions_out(&std).unwrap();
        bad.pair = "Cubed".into();
        assert!(conventions_from(&bad).unwrap_err().to_string().contains("LinkingSquared"));
    }
}
