//! Multi-threaded versions of the exhaustive searches. Results are merged in
//! input order, so they match the sequential versions exactly.

use rayon::prelude::*;
use sylvkit_core::congruence::MonoidTag;
use sylvkit_core::embed::{check_pair, phi_vector, EmbeddingReport, EMBEDDING_PAIR_LIMIT};
use sylvkit_core::error::Error;
use sylvkit_core::evalsearch::{
    canonical_left_sides, check_search_bound, identities_with_lhs, SearchReport,
};
use sylvkit_core::idcheck::check_id;
use sylvkit_core::word::{all_words, Identity};

/// Runs `f` on a pool of `jobs` threads, or on the global pool for `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

pub fn shortest_identities(
    tag: MonoidTag,
    n_vars: usize,
    max_len: usize,
    limit: u128,
) -> Result<SearchReport, Error> {
    check_search_bound(n_vars, max_len, limit)?;
    let mut report = SearchReport {
        monoid: tag,
        n_vars,
        max_len,
        minimal_length: None,
        identities: Vec::new(),
        candidates_examined: 0,
    };
    for len in 1..=max_len {
        let blocks: Vec<(u64, Vec<Identity>)> = canonical_left_sides(n_vars, len)
            .par_iter()
            .map(|lhs| {
                let ids = identities_with_lhs(lhs);
                let n = ids.len() as u64;
                let sat = ids.into_iter().filter(|i| check_id(tag, i).is_satisfied()).collect();
                (n, sat)
            })
            .collect();
        for (n, sat) in blocks {
            report.candidates_examined += n;
            report.identities.extend(sat);
        }
        if !report.identities.is_empty() {
            report.minimal_length = Some(len);
            break;
        }
    }
    Ok(report)
}

/// Same contract as the sequential `verify_embedding`, including which
/// violation is reported: the first in row-major pair order.
pub fn verify_embedding(n: u32, max_len: usize, tag: MonoidTag) -> Result<EmbeddingReport, Error> {
    let words = all_words(n, max_len);
    let pairs = (words.len() as u128).pow(2);
    if pairs > EMBEDDING_PAIR_LIMIT {
        return Err(Error::BoundExceeded {
            candidates: pairs,
            limit: EMBEDDING_PAIR_LIMIT,
        });
    }
    let vectors: Vec<_> = words
        .par_iter()
        .map(|w| phi_vector(w, n, tag).expect("words are over the rank"))
        .collect();
    let first = (0..words.len()).into_par_iter().find_map_first(|a| {
        (0..words.len()).find_map(|b| {
            check_pair(&words[a], &words[b], &vectors[a], &vectors[b], tag).map(|v| (a, b, v))
        })
    });
    let n_words = words.len() as u64;
    Ok(EmbeddingReport {
        monoid: tag,
        rank: n,
        max_len,
        words: words.len(),
        pairs_checked: match &first {
            Some((a, b, _)) => *a as u64 * n_words + *b as u64 + 1,
            None => n_words * n_words,
        },
        violation: first.map(|(_, _, v)| v),
    })
}
