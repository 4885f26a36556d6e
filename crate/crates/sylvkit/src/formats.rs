//! Structured documents emitted by `--json`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sylvkit_core::congruence::{CanonicalForm, PrecedenceTable};
use sylvkit_core::deduce::{apply_instance, Derivation};
use sylvkit_core::embed::PhiVector;
use sylvkit_core::evalsearch::{Assignment, SearchReport};
use sylvkit_core::idcheck::{CheckVerdict, Direction, Witness};
use sylvkit_core::word::{Identity, VarWord};
use sylvkit_core::MonoidTag;

fn plain(w: &VarWord) -> String {
    w.iter().map(|x| x.as_char()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchDoc {
    pub monoid: String,
    pub n_vars: usize,
    pub max_len: usize,
    pub minimal_length: Option<usize>,
    pub identities: Vec<String>,
    pub candidates_examined: u64,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl SearchDoc {
    pub fn new(report: &SearchReport, elapsed: f64) -> Self {
        SearchDoc {
            monoid: report.monoid.name().to_string(),
            n_vars: report.n_vars,
            max_len: report.max_len,
            minimal_length: report.minimal_length,
            identities: report.identities.iter().map(Identity::to_string).collect(),
            candidates_examined: report.candidates_examined,
            elapsed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub kind: String,
    pub target: Option<char>,
    pub counted: Option<char>,
    pub direction: Option<String>,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub text: String,
}

impl From<&Witness> for WitnessDoc {
    fn from(w: &Witness) -> Self {
        match *w {
            Witness::Unbalanced => WitnessDoc {
                kind: "unbalanced".into(),
                target: None,
                counted: None,
                direction: None,
                lhs: None,
                rhs: None,
                text: w.to_string(),
            },
            Witness::Counter {
                target,
                counted,
                direction,
                lhs,
                rhs,
            } => WitnessDoc {
                kind: "counter".into(),
                target: Some(target.as_char()),
                counted: Some(counted.as_char()),
                direction: Some(
                    match direction {
                        Direction::RightToLeft => "right-to-left",
                        Direction::LeftToRight => "left-to-right",
                    }
                    .into(),
                ),
                lhs: Some(lhs),
                rhs: Some(rhs),
                text: w.to_string(),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub monoid: String,
    pub identity: String,
    pub satisfied: bool,
    pub witness: Option<WitnessDoc>,
}

impl CheckDoc {
    pub fn new(tag: MonoidTag, id: &Identity, verdict: &CheckVerdict) -> Self {
        CheckDoc {
            monoid: tag.name().into(),
            identity: id.to_string(),
            satisfied: verdict.is_satisfied(),
            witness: verdict.witness().map(WitnessDoc::from),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonDoc {
    pub monoid: String,
    pub word: String,
    /// One word for sylv and sylvh; the #-sylvester word then the sylvester
    /// word for baxt.
    pub canonical: Vec<String>,
}

impl CanonDoc {
    pub fn new(tag: MonoidTag, word: &str, form: &CanonicalForm) -> Self {
        let canonical = match form {
            CanonicalForm::Sylv(w) | CanonicalForm::Sylvh(w) => vec![w.to_string()],
            CanonicalForm::Baxt { sylvh, sylv } => vec![sylvh.to_string(), sylv.to_string()],
        };
        CanonDoc {
            monoid: tag.name().into(),
            word: word.into(),
            canonical,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecedenceDoc {
    pub lower: u32,
    pub upper: u32,
    pub index: usize,
}

pub fn precedences_doc(table: &PrecedenceTable) -> Vec<PrecedenceDoc> {
    table
        .iter()
        .map(|p| PrecedenceDoc {
            lower: p.lower.get(),
            upper: p.upper.get(),
            index: p.index,
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefuteDoc {
    pub monoid: String,
    pub identity: String,
    pub refuted: bool,
    pub assignment: Option<BTreeMap<char, String>>,
    pub lhs_value: Option<String>,
    pub rhs_value: Option<String>,
}

pub fn assignment_doc(psi: &Assignment) -> BTreeMap<char, String> {
    psi.iter().map(|(x, w)| (x.as_char(), w.to_string())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub basis: String,
    pub direction: String,
    pub left_context: String,
    pub substitution: BTreeMap<char, String>,
    pub right_context: String,
    pub output: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationDoc {
    pub monoid: String,
    pub identity: String,
    pub start: String,
    pub steps: Vec<StepDoc>,
}

impl DerivationDoc {
    pub fn new(tag: MonoidTag, id: &Identity, d: &Derivation) -> Self {
        let mut current = d.start.clone();
        let steps = d
            .steps
            .iter()
            .map(|s| {
                current = apply_instance(&current, s).expect("derivation was verified");
                StepDoc {
                    basis: s.basis.to_string(),
                    direction: s.direction.to_string(),
                    left_context: plain(&s.left_context),
                    substitution: s
                        .substitution
                        .iter()
                        .map(|(x, w)| (x.as_char(), plain(w)))
                        .collect(),
                    right_context: plain(&s.right_context),
                    output: current.to_string(),
                }
            })
            .collect();
        DerivationDoc {
            monoid: tag.name().into(),
            identity: id.to_string(),
            start: d.start.to_string(),
            steps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiComponentDoc {
    pub i: u32,
    pub j: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiDoc {
    pub monoid: String,
    pub rank: u32,
    pub word: String,
    pub components: Vec<PhiComponentDoc>,
}

impl PhiDoc {
    pub fn new(tag: MonoidTag, word: &str, v: &PhiVector) -> Self {
        PhiDoc {
            monoid: tag.name().into(),
            rank: v.rank(),
            word: word.into(),
            components: v
                .iter()
                .map(|(p, e)| PhiComponentDoc {
                    i: p.i().get(),
                    j: p.j().get(),
                    value: e.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub checks: Vec<VerifyEntry>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}
