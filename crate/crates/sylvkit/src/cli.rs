//! The `sylvkit` command line.

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sylvkit_core::bst::{p_sylv, p_sylvh};
use sylvkit_core::congruence::{canonicalize, left_precedences, right_precedences};
use sylvkit_core::deduce::{default_budget, derive};
use sylvkit_core::embed::phi_vector;
use sylvkit_core::error::Error;
use sylvkit_core::evalsearch::{evaluate, refute, DEFAULT_CANDIDATE_LIMIT};
use sylvkit_core::idcheck::check_id;
use sylvkit_core::word::{Identity, LetterWord};
use sylvkit_core::MonoidTag;

use crate::formats::{
    assignment_doc, precedences_doc, CanonDoc, CheckDoc, DerivationDoc, PhiDoc, RefuteDoc,
    SearchDoc, VerifyDoc, VerifyEntry,
};
use crate::verify::Outcome;
use crate::{parallel, render, verify};

/// Exit status for a negative verdict.
pub const EXIT_NEGATIVE: i32 = 1;
/// Exit status for unreadable arguments.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when a search gives up without deciding anything.
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Environment variable overriding the search candidate limit.
pub const MAX_CANDIDATES_VAR: &str = "SYLVKIT_MAX_CANDIDATES";

#[derive(Parser, Debug)]
#[command(name = "sylvkit", version, about = "Sylvester, #-sylvester and Baxter monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Monoid {
    Sylv,
    #[value(alias = "sylv#")]
    Sylvh,
    Baxt,
}

impl From<Monoid> for MonoidTag {
    fn from(m: Monoid) -> Self {
        match m {
            Monoid::Sylv => MonoidTag::Sylv,
            Monoid::Sylvh => MonoidTag::Sylvh,
            Monoid::Baxt => MonoidTag::Baxt,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TreeMonoid {
    Sylv,
    #[value(alias = "sylv#")]
    Sylvh,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TreeFormat {
    Ascii,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Right,
    Left,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyTarget {
    Embedding,
    Relations,
    Suite,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical word(s) of a word's class.
    Canon {
        #[arg(short, long)]
        monoid: Monoid,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Draw the search tree of a word.
    Tree {
        #[arg(short, long)]
        monoid: TreeMonoid,
        word: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: TreeFormat,
    },
    /// List the right or left precedences of a word.
    Prec {
        #[arg(long, value_enum)]
        side: Side,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two words represent the same element.
    Equal {
        #[arg(short, long)]
        monoid: Monoid,
        u: String,
        v: String,
    },
    /// Decide whether the monoid satisfies an identity such as "xyxy = yxxy".
    CheckId {
        #[arg(short, long)]
        monoid: Monoid,
        identity: String,
        #[arg(long)]
        json: bool,
    },
    /// Find an assignment of variables separating the two sides.
    Refute {
        #[arg(short, long)]
        monoid: Monoid,
        identity: String,
        #[arg(long)]
        json: bool,
    },
    /// Search exhaustively for the shortest satisfied identities.
    Search {
        #[arg(short, long)]
        monoid: Monoid,
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Derive an identity from the monoid's finite basis.
    Derive {
        #[arg(short, long)]
        monoid: Monoid,
        identity: String,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print the components of the map into rank-2 monoids.
    Embed {
        #[arg(short, long)]
        monoid: Monoid,
        #[arg(long)]
        rank: u32,
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Run exhaustive property suites.
    Verify {
        #[arg(value_enum)]
        suite: VerifyTarget,
        #[arg(long, default_value_t = 3)]
        rank: u32,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

/// Output streams and result of one invocation.
struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

macro_rules! say {
    ($w:expr, $($arg:tt)*) => {{
        let _ = writeln!($w, $($arg)*);
    }};
}

fn json<T: Serialize>(io: &mut Io<'_>, doc: &T) {
    say!(io.out, "{}", serde_json::to_string_pretty(doc).expect("serializable"));
}

fn parse_word(io: &mut Io<'_>, s: &str) -> Option<LetterWord> {
    match s.parse() {
        Ok(w) => Some(w),
        Err(e) => {
            say!(io.err, "error: {e}");
            None
        }
    }
}

fn parse_identity(io: &mut Io<'_>, s: &str) -> Option<Identity> {
    match s.parse() {
        Ok(i) => Some(i),
        Err(e) => {
            say!(io.err, "error: {e}");
            None
        }
    }
}

fn candidate_limit() -> Result<u128, String> {
    match std::env::var(MAX_CANDIDATES_VAR) {
        Err(_) => Ok(DEFAULT_CANDIDATE_LIMIT),
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_CANDIDATES_VAR} must be a non-negative integer, got {s:?}")),
    }
}

/// Runs one invocation; returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { out, err };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(io.err, "{text}");
            } else {
                let _ = write!(io.out, "{text}");
            }
            return code;
        }
    };
    dispatch(cli.command, &mut io)
}

fn dispatch(command: Command, io: &mut Io<'_>) -> i32 {
    match command {
        Command::Canon { monoid, word, json: as_json } => {
            let Some(w) = parse_word(io, &word) else { return EXIT_USAGE };
            let tag = monoid.into();
            let e = canonicalize(tag, &w);
            if as_json {
                json(io, &CanonDoc::new(tag, &word, e.canonical()));
            } else {
                say!(io.out, "{e}");
            }
            0
        }
        Command::Tree { monoid, word, format } => {
            let Some(w) = parse_word(io, &word) else { return EXIT_USAGE };
            let text = match (monoid, format) {
                (TreeMonoid::Sylv, TreeFormat::Ascii) => render::ascii(&p_sylv(&w)),
                (TreeMonoid::Sylvh, TreeFormat::Ascii) => render::ascii(&p_sylvh(&w)),
                (TreeMonoid::Sylv, TreeFormat::Dot) => render::dot(&p_sylv(&w), "sylv"),
                (TreeMonoid::Sylvh, TreeFormat::Dot) => render::dot(&p_sylvh(&w), "sylvh"),
            };
            let _ = write!(io.out, "{text}");
            0
        }
        Command::Prec { side, word, json: as_json } => {
            let Some(w) = parse_word(io, &word) else { return EXIT_USAGE };
            let table = match side {
                Side::Right => right_precedences(&w),
                Side::Left => left_precedences(&w),
            };
            if as_json {
                json(io, &precedences_doc(&table));
            } else if !table.is_empty() {
                say!(io.out, "{table}");
            }
            0
        }
        Command::Equal { monoid, u, v } => {
            let (Some(a), Some(b)) = (parse_word(io, &u), parse_word(io, &v)) else {
                return EXIT_USAGE;
            };
            let tag = monoid.into();
            let (ea, eb) = (canonicalize(tag, &a), canonicalize(tag, &b));
            if ea == eb {
                say!(io.out, "equal: both have canonical form {ea}");
                0
            } else {
                say!(io.out, "not equal: canonical forms {ea} and {eb}");
                EXIT_NEGATIVE
            }
        }
        Command::CheckId { monoid, identity, json: as_json } => {
            let Some(id) = parse_identity(io, &identity) else { return EXIT_USAGE };
            let tag = monoid.into();
            let verdict = check_id(tag, &id);
            if as_json {
                json(io, &CheckDoc::new(tag, &id, &verdict));
            } else {
                say!(io.out, "{verdict}");
            }
            if verdict.is_satisfied() {
                0
            } else {
                EXIT_NEGATIVE
            }
        }
        Command::Refute { monoid, identity, json: as_json } => {
            let Some(id) = parse_identity(io, &identity) else { return EXIT_USAGE };
            let tag = monoid.into();
            let found = refute(&id, tag);
            let values = found.as_ref().map(|psi| {
                let l = evaluate(&id.lhs, psi, tag).expect("support is assigned");
                let r = evaluate(&id.rhs, psi, tag).expect("support is assigned");
                (l, r)
            });
            if as_json {
                json(
                    io,
                    &RefuteDoc {
                        monoid: tag.name().into(),
                        identity: id.to_string(),
                        refuted: found.is_some(),
                        assignment: found.as_ref().map(assignment_doc),
                        lhs_value: values.as_ref().map(|v| v.0.to_string()),
                        rhs_value: values.as_ref().map(|v| v.1.to_string()),
                    },
                );
            } else {
                match (&found, &values) {
                    (Some(psi), Some((l, r))) => {
                        say!(io.out, "refuted by {psi}");
                        say!(io.out, "lhs ↦ {l}");
                        say!(io.out, "rhs ↦ {r}");
                    }
                    _ => say!(io.out, "no counterexample: the identity holds in {tag}"),
                }
            }
            if found.is_some() {
                0
            } else {
                EXIT_NEGATIVE
            }
        }
        Command::Search { monoid, vars, max_len, json: as_json, jobs } => {
            let limit = match candidate_limit() {
                Ok(l) => l,
                Err(e) => {
                    say!(io.err, "error: {e}");
                    return EXIT_USAGE;
                }
            };
            let tag = monoid.into();
            let start = Instant::now();
            let result = parallel::with_jobs(jobs, || parallel::shortest_identities(tag, vars, max_len, limit));
            let elapsed = start.elapsed().as_secs_f64();
            match result {
                Ok(report) => {
                    if as_json {
                        json(io, &SearchDoc::new(&report, elapsed));
                    } else {
                        say!(io.out, "{report}");
                    }
                    0
                }
                Err(e @ Error::BoundExceeded { .. }) => {
                    say!(io.err, "error: {e}; raise {MAX_CANDIDATES_VAR} to allow it");
                    EXIT_USAGE
                }
                Err(e) => {
                    say!(io.err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Command::Derive { monoid, identity, budget, json: as_json } => {
            let Some(id) = parse_identity(io, &identity) else { return EXIT_USAGE };
            let tag = monoid.into();
            let budget = budget.unwrap_or_else(|| default_budget(tag, id.len()));
            match derive(tag, &id, budget) {
                Ok(d) => {
                    if as_json {
                        json(io, &DerivationDoc::new(tag, &id, &d));
                    } else {
                        say!(io.out, "{d}");
                    }
                    0
                }
                Err(Error::NotSatisfied(w)) => {
                    say!(io.out, "not satisfied (witness: {w})");
                    EXIT_NEGATIVE
                }
                Err(e) => {
                    say!(io.err, "{e}");
                    EXIT_INCONCLUSIVE
                }
            }
        }
        Command::Embed { monoid, rank, word, json: as_json } => {
            let Some(w) = parse_word(io, &word) else { return EXIT_USAGE };
            let tag = monoid.into();
            match phi_vector(&w, rank, tag) {
                Ok(v) => {
                    if as_json {
                        json(io, &PhiDoc::new(tag, &word, &v));
                    } else if v.iter().next().is_some() {
                        say!(io.out, "{v}");
                    }
                    0
                }
                Err(e) => {
                    say!(io.err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Command::Verify { suite, rank, max_len, jobs, json: as_json } => {
            let outcomes = parallel::with_jobs(jobs, || match suite {
                VerifyTarget::Embedding => verify::embedding(rank, max_len),
                VerifyTarget::Relations => verify::relations(rank, 2, 1),
                VerifyTarget::Suite => verify::suite(),
            });
            report_outcomes(io, &outcomes, as_json)
        }
    }
}

fn report_outcomes(io: &mut Io<'_>, outcomes: &[Outcome], as_json: bool) -> i32 {
    let passed = outcomes.iter().all(|o| o.passed);
    if as_json {
        let doc = VerifyDoc {
            checks: outcomes
                .iter()
                .map(|o| VerifyEntry {
                    name: o.name.clone(),
                    passed: o.passed,
                    detail: o.detail.clone(),
                })
                .collect(),
            passed,
        };
        json(io, &doc);
    } else {
        for o in outcomes {
            say!(io.out, "{o}");
        }
    }
    if passed {
        0
    } else {
        EXIT_NEGATIVE
    }
}
