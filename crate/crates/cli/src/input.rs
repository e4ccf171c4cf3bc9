//! Job inputs: framed links, periodic presentations, seeded corpora and
//! anchor lists, given as a file, inline JSON or a fixture name.

use std::path::Path;

use lescop_core::corpus::{periodic_corpus, PeriodicCorpusSpec, PeriodicKind};
use lescop_core::diagram::{braid_closure, parse_braid, LinkDiagram, Sign};
use lescop_core::lescop::{standard_anchors, Anchor};
use lescop_core::linkalg::FramedLink;
use lescop_core::periodic::{build_periodic, PeriodicPresentation};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::output::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputSpec {
    Link(LinkSpec),
    Periodic(PeriodicSpec),
    Corpus(CorpusSpec),
    Anchors(AnchorsSpec),
}

/// A framed link as a braid word (`"3: 1 -2 1"`) or as PD crossings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinkSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braid: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pd: Option<Vec<PdCrossing>>,
    #[serde(default)]
    pub free_loops: usize,
    /// Zero framings when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framings: Option<Vec<i64>>,
}

/// One crossing: `sign` is +1 or -1, `arcs` run counterclockwise from the incoming under arc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdCrossing {
    pub sign: i64,
    pub arcs: [u64; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicSpec {
    pub quotient: String,
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub framings: Option<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusKind {
    Strong,
    OrbitallySeparated,
    HomologySphereQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub corpus: CorpusKind,
    pub p: u64,
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_letters: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_cover_components: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorsSpec {
    pub anchors: Vec<AnchorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchorSpec {
    pub label: String,
    pub link: LinkSpec,
    pub lambda: Rational,
}

fn braid_spec(word: &str, framings: &[i64]) -> InputSpec {
    InputSpec::Link(LinkSpec {
        braid: Some(word.into()),
        pd: None,
        free_loops: 0,
        framings: Some(framings.to_vec()),
    })
}

fn periodic_spec(quotient: &str, p: u64, framings: &[i64]) -> InputSpec {
    InputSpec::Periodic(PeriodicSpec { quotient: quotient.into(), p, framings: Some(framings.to_vec()) })
}

fn corpus_spec(corpus: CorpusKind, p: u64, count: usize) -> InputSpec {
    InputSpec::Corpus(CorpusSpec { corpus, p, count, seed: 1, max_letters: None, max_cover_components: None })
}

/// Named inputs shipped with the tool.
pub fn fixtures() -> Vec<(&'static str, InputSpec)> {
    use CorpusKind::*;
    vec![
        ("unknot+1", braid_spec("1:", &[1])),
        ("unknot-1", braid_spec("1:", &[-1])),
        ("unknot0", braid_spec("1:", &[0])),
        ("hopf+", braid_spec("2: 1 1", &[0, 0])),
        ("hopf-", braid_spec("2: -1 -1", &[0, 0])),
        ("trefoil", braid_spec("2: 1 1 1", &[1])),
        ("figure-eight", braid_spec("3: 1 -2 1 -2", &[1])),
        ("borromean0", braid_spec("3: 1 -2 1 -2 1 -2", &[0, 0, 0])),
        ("torus33", periodic_spec("3: 1 2", 3, &[1])),
        ("t33_p3", periodic_spec("3: 1 2", 3, &[1])),
        ("t55_p5", periodic_spec("5: 1 2 3 4", 5, &[1])),
        ("trefoil_p3", periodic_spec("2: 1", 3, &[1])),
        ("hs_corpus_p3", corpus_spec(HomologySphereQuotient, 3, 20)),
        ("hs_corpus_p5", InputSpec::Corpus(CorpusSpec {
            corpus: HomologySphereQuotient,
            p: 5,
            count: 20,
            seed: 1,
            max_letters: None,
            max_cover_components: Some(5),
        })),
        ("os_corpus_p3", corpus_spec(OrbitallySeparated, 3, 50)),
        ("os_corpus_p5", corpus_spec(OrbitallySeparated, 5, 50)),
        ("os_corpus_p7", corpus_spec(OrbitallySeparated, 7, 50)),
        ("strong_corpus_p3", corpus_spec(Strong, 3, 50)),
        ("strong_corpus_p5", corpus_spec(Strong, 5, 50)),
        ("standard_anchors", standard_anchor_spec()),
    ]
}

fn standard_anchor_spec() -> InputSpec {
    let anchors = standard_anchors()
        .into_iter()
        .map(|a| {
            let d = a.link.diagram();
            let word = d.braid().expect("anchors are braid closures");
            AnchorSpec {
                label: a.label,
                link: LinkSpec {
                    braid: Some(word.to_string()),
                    pd: None,
                    free_loops: 0,
                    framings: Some(a.link.framings().to_vec()),
                },
                lambda: Rational::from(&a.expected),
            }
        })
        .collect();
    InputSpec::Anchors(AnchorsSpec { anchors })
}

pub fn fixture(name: &str) -> CliResult<InputSpec> {
    let all = fixtures();
    let stem = name.strip_suffix(".json").unwrap_or(name);
    all.iter()
        .find(|(n, _)| *n == stem)
        .map(|(_, s)| s.clone())
        .ok_or_else(|| {
            let names: Vec<&str> = all.iter().map(|(n, _)| *n).collect();
            CliError::Input(format!("unknown input `{name}`; fixtures: {}", names.join(", ")))
        })
}

/// Inline JSON when the text starts with `{`, else a file when one exists, else a fixture.
pub fn resolve(input: &str) -> CliResult<InputSpec> {
    let text = input.trim_start();
    if text.starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let path = Path::new(input);
    if path.is_file() {
        return Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?);
    }
    fixture(input)
}

impl LinkSpec {
    pub fn diagram(&self) -> CliResult<LinkDiagram> {
        match (&self.braid, &self.pd) {
            (Some(word), None) => Ok(braid_closure(&parse_braid(word)?)),
            (None, Some(pd)) => {
                let entries = pd
                    .iter()
                    .map(|c| {
                        Sign::from_value(c.sign)
                            .map(|s| (s, c.arcs))
                            .ok_or_else(|| CliError::Input(format!("crossing sign must be +1 or -1, got {}", c.sign)))
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(LinkDiagram::from_pd(&entries, self.free_loops)?)
            }
            _ => Err(CliError::Input("a link needs exactly one of `braid` and `pd`".into())),
        }
    }

    pub fn framed(&self) -> CliResult<FramedLink> {
        let d = self.diagram()?;
        let framings = self.framings.clone().unwrap_or_else(|| vec![0; d.component_count()]);
        Ok(FramedLink::new(d, framings)?)
    }
}

impl PeriodicSpec {
    /// Builds the presentation, with `modulus` replacing `p` when given.
    pub fn build(&self, modulus: Option<u64>) -> CliResult<PeriodicPresentation> {
        let q = parse_braid(&self.quotient)?;
        let framings = self.framings.clone().unwrap_or_else(|| vec![0; q.cycles().len()]);
        Ok(build_periodic(&q, modulus.unwrap_or(self.p), &framings)?)
    }
}

impl CorpusSpec {
    pub fn build(&self, modulus: Option<u64>, seed: Option<u64>) -> CliResult<Vec<PeriodicPresentation>> {
        let kind = match self.corpus {
            CorpusKind::Strong => PeriodicKind::Strong,
            CorpusKind::OrbitallySeparated => PeriodicKind::OrbitallySeparated,
            CorpusKind::HomologySphereQuotient => PeriodicKind::HomologySphereQuotient,
        };
        let mut spec = PeriodicCorpusSpec::new(modulus.unwrap_or(self.p), self.count, kind);
        if let Some(m) = self.max_letters {
            spec.max_letters = m;
        }
        if let Some(m) = self.max_cover_components {
            spec.max_cover_components = m;
        }
        Ok(periodic_corpus(seed.unwrap_or(self.seed), &spec)?)
    }
}

impl AnchorsSpec {
    pub fn anchors(&self) -> CliResult<Vec<Anchor>> {
        self.anchors
            .iter()
            .map(|a| {
                let q = a.lambda.to_big()?;
                Ok(Anchor { label: a.label.clone(), link: a.link.framed()?, expected: q })
            })
            .collect()
    }
}
