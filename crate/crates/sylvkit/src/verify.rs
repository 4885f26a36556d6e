//! Exhaustive property suites behind `sylvkit verify`.

use std::fmt;

use rayon::prelude::*;
use sylvkit_core::bst::{p_baxt, p_sylv, p_sylvh, Traversal};
use sylvkit_core::congruence::{defining_relations, equal, equal_via_precedences, MonoidTag};
use sylvkit_core::deduce::{default_budget, derive, verify_derivation};
use sylvkit_core::evalsearch::{enumerate_identities, refute, refute_with_family, rank_two_words};
use sylvkit_core::idcheck::{check_first_occurrence, check_id, check_id_pairwise};
use sylvkit_core::word::all_words;

use crate::parallel;

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(name: impl Into<String>, failure: Option<String>, detail: String) -> Self {
        match failure {
            None => Outcome {
                name: name.into(),
                passed: true,
                detail,
            },
            Some(f) => Outcome {
                name: name.into(),
                passed: false,
                detail: f,
            },
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

/// Defining relations over letters `1..=rank`; inner words up to
/// `max_inner` for sylv and sylvh and `max_inner_baxt` for baxt.
pub fn relations(rank: u32, max_inner: usize, max_inner_baxt: usize) -> Vec<Outcome> {
    MonoidTag::ALL
        .iter()
        .map(|&tag| {
            let inner = if tag == MonoidTag::Baxt { max_inner_baxt } else { max_inner };
            let rel = defining_relations(tag, rank, inner);
            let bad = rel.par_iter().find_first(|(l, r)| !equal(tag, l, r));
            Outcome::new(
                format!("relations {tag}"),
                bad.map(|(l, r)| format!("{l} and {r} are not equal")),
                format!("{} instances over rank {rank}", rel.len()),
            )
        })
        .collect()
}

pub fn embedding(rank: u32, max_len: usize) -> Vec<Outcome> {
    MonoidTag::ALL
        .iter()
        .map(|&tag| match parallel::verify_embedding(rank, max_len, tag) {
            Ok(r) => Outcome::new(
                format!("embedding {tag} rank {rank} length ≤ {max_len}"),
                r.violation.as_ref().map(|v| v.to_string()),
                format!("{} pairs", r.pairs_checked),
            ),
            Err(e) => Outcome::new(format!("embedding {tag}"), Some(e.to_string()), String::new()),
        })
        .collect()
}

fn round_trips(rank: u32, max_len: usize) -> Outcome {
    let words = all_words(rank, max_len);
    let bad = words.par_iter().find_first(|w| {
        let r = p_sylv(w);
        let l = p_sylvh(w);
        p_sylv(&r.reading(Traversal::Postfix)) != r
            || p_sylvh(&l.reading(Traversal::Prefix)) != l
            || !r.is_valid()
            || !l.is_valid()
            || !p_baxt(w).is_twin()
    });
    Outcome::new(
        "trees",
        bad.map(|w| format!("round trip, strictness or twin property fails on {w}")),
        format!("{} words", words.len()),
    )
}

fn characterization(rank: u32, max_len: usize) -> Outcome {
    let words = all_words(rank, max_len);
    let bad = MonoidTag::ALL.iter().find_map(|&tag| {
        words.par_iter().find_map_first(|u| {
            words
                .iter()
                .find(|v| equal(tag, u, v) != equal_via_precedences(tag, u, v))
                .map(|v| format!("{tag}: {u} vs {v}"))
        })
    });
    Outcome::new(
        "characterization",
        bad,
        format!("{} ordered pairs per monoid", words.len() * words.len()),
    )
}

fn identities(max_vars: usize, max_len: usize) -> Vec<Outcome> {
    let ids: Vec<_> = (1..=max_vars).flat_map(|n| enumerate_identities(n, max_len)).collect();
    let family = rank_two_words(2);
    let checkers = MonoidTag::ALL.iter().find_map(|&tag| {
        ids.par_iter()
            .find_first(|i| {
                let a = check_id(tag, i).is_satisfied();
                a != check_id_pairwise(tag, i).is_satisfied()
                    || a != check_first_occurrence(tag, i).is_satisfied()
            })
            .map(|i| format!("{tag}: checkers disagree on {i}"))
    });
    let oracle = MonoidTag::ALL.iter().find_map(|&tag| {
        ids.par_iter()
            .find_first(|i| {
                let sat = check_id(tag, i).is_satisfied();
                refute(i, tag).is_none() != sat || refute_with_family(i, tag, &family).is_none() != sat
            })
            .map(|i| format!("{tag}: oracle disagrees on {i}"))
    });
    let derivations = MonoidTag::ALL.iter().find_map(|&tag| {
        ids.par_iter()
            .filter(|i| check_id(tag, i).is_satisfied())
            .find_first(|i| match derive(tag, i, default_budget(tag, i.len())) {
                Ok(d) => !verify_derivation(tag, i, &d),
                Err(_) => true,
            })
            .map(|i| format!("{tag}: no checked derivation of {i}"))
    });
    let detail = format!("{} identities, ≤ {max_vars} variables, length ≤ {max_len}", ids.len());
    vec![
        Outcome::new("checker agreement", checkers, detail.clone()),
        Outcome::new("refutation oracle", oracle, detail.clone()),
        Outcome::new("derivations", derivations, detail),
    ]
}

fn shortest() -> Outcome {
    let mut failure = None;
    for (tag, expected) in [(MonoidTag::Sylv, 4), (MonoidTag::Sylvh, 4), (MonoidTag::Baxt, 6)] {
        match parallel::shortest_identities(tag, 2, 6, u128::MAX) {
            Ok(r) if r.minimal_length == Some(expected) => {}
            Ok(r) => failure = Some(format!("{tag}: minimal length {:?}", r.minimal_length)),
            Err(e) => failure = Some(e.to_string()),
        }
    }
    Outcome::new("shortest identities", failure, "two variables, length ≤ 6".into())
}

/// Every suite at desk-scale bounds.
pub fn suite() -> Vec<Outcome> {
    let mut out = vec![round_trips(3, 6), characterization(3, 4)];
    out.extend(relations(4, 2, 1));
    out.extend(identities(3, 6));
    out.push(shortest());
    out.extend(embedding(2, 4));
    out.extend(embedding(3, 3));
    out
}
