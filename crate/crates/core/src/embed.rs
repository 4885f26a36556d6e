//! The maps into direct products of rank-2 monoids.
//!
//! For `i < j`, the component map replaces `i` by `1`, `j` by `2`, every `a`
//! with `i < a < j` by `21`, and erases the remaining letters. The same
//! substitution serves sylv, sylvh and baxt; only the congruence applied to
//! the image changes.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::congruence::{canonicalize, equal, multiply, Element, MonoidTag};
use crate::error::Error;
use crate::word::{all_words, letters, Letter, LetterWord};

/// An index `(i, j)` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairIndex {
    i: Letter,
    j: Letter,
}

impl PairIndex {
    /// Returns `None` unless `i < j`.
    pub fn new(i: Letter, j: Letter) -> Option<Self> {
        (i < j).then_some(PairIndex { i, j })
    }

    pub fn i(self) -> Letter {
        self.i
    }

    pub fn j(self) -> Letter {
        self.j
    }

    /// All indices over `1..=n`, lexicographically.
    pub fn all(n: u32) -> Vec<PairIndex> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                out.push(PairIndex {
                    i: Letter::new(i).expect("positive"),
                    j: Letter::new(j).expect("positive"),
                });
            }
        }
        out
    }
}

impl fmt::Display for PairIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// The substituted rank-2 word, before any congruence is applied.
pub fn phi_word(w: &LetterWord, p: PairIndex) -> LetterWord {
    let one = letters(&[1]);
    let two = letters(&[2]);
    let two_one = letters(&[2, 1]);
    w.substitute(|a| {
        if a == p.i {
            one.clone()
        } else if a == p.j {
            two.clone()
        } else if p.i < a && a < p.j {
            two_one.clone()
        } else {
            LetterWord::empty()
        }
    })
}

pub fn phi(w: &LetterWord, p: PairIndex, tag: MonoidTag) -> Element {
    canonicalize(tag, &phi_word(w, p))
}

/// All components of the map for a fixed rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiVector {
    rank: u32,
    components: BTreeMap<PairIndex, Element>,
}

impl PhiVector {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn get(&self, p: PairIndex) -> Option<&Element> {
        self.components.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (PairIndex, &Element)> + '_ {
        self.components.iter().map(|(&p, e)| (p, e))
    }
}

impl fmt::Display for PhiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, e)) in self.components.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{p}: {e}")?;
        }
        Ok(())
    }
}

pub fn phi_vector(w: &LetterWord, n: u32, tag: MonoidTag) -> Result<PhiVector, Error> {
    if let Some(&letter) = w.iter().find(|a| a.get() > n) {
        return Err(Error::SupportExceedsRank { letter, rank: n });
    }
    let components = PairIndex::all(n)
        .into_iter()
        .map(|p| (p, phi(w, p, tag)))
        .collect();
    Ok(PhiVector { rank: n, components })
}

/// First counterexample found by [`verify_embedding`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EmbeddingViolation {
    /// `phi(uv) ≠ phi(u)·phi(v)` at component `index`.
    Homomorphism {
        u: LetterWord,
        v: LetterWord,
        index: PairIndex,
    },
    /// Class equality and vector equality disagree.
    Injectivity {
        u: LetterWord,
        v: LetterWord,
        classes_equal: bool,
    },
}

impl fmt::Display for EmbeddingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EmbeddingViolation::Homomorphism { u, v, index } => {
                write!(f, "homomorphism fails for u={u}, v={v} at {index}")
            }
            EmbeddingViolation::Injectivity { u, v, classes_equal } => write!(
                f,
                "u={u}, v={v}: classes {} but vectors {}",
                if *classes_equal { "equal" } else { "differ" },
                if *classes_equal { "differ" } else { "equal" }
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub monoid: MonoidTag,
    pub rank: u32,
    pub max_len: usize,
    pub words: usize,
    pub pairs_checked: u64,
    pub violation: Option<EmbeddingViolation>,
}

impl EmbeddingReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl fmt::Display for EmbeddingReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "embedding {} rank {} length ≤ {}: {} words, {} pairs: ",
            self.monoid, self.rank, self.max_len, self.words, self.pairs_checked
        )?;
        match &self.violation {
            None => f.write_str("pass"),
            Some(v) => write!(f, "FAIL ({v})"),
        }
    }
}

/// Ceiling on the number of ordered word pairs [`verify_embedding`] visits.
pub const EMBEDDING_PAIR_LIMIT: u128 = 100_000_000;

/// Exhaustive check over all pairs of words over `1..=n` of length at most
/// `max_len` that the map is a homomorphism and separates exactly the
/// distinct classes. Stops at the first violation.
pub fn verify_embedding(n: u32, max_len: usize, tag: MonoidTag) -> Result<EmbeddingReport, Error> {
    let count = (0..=max_len as u32).try_fold(0u128, |acc, l| {
        (n as u128).checked_pow(l).and_then(|c| acc.checked_add(c))
    });
    let pairs = count.and_then(|c| c.checked_mul(c)).unwrap_or(u128::MAX);
    if pairs > EMBEDDING_PAIR_LIMIT {
        return Err(Error::BoundExceeded {
            candidates: pairs,
            limit: EMBEDDING_PAIR_LIMIT,
        });
    }
    let words = all_words(n, max_len);
    let vectors: Vec<PhiVector> = words
        .iter()
        .map(|w| phi_vector(w, n, tag).expect("words are over the rank"))
        .collect();
    let mut report = EmbeddingReport {
        monoid: tag,
        rank: n,
        max_len,
        words: words.len(),
        pairs_checked: 0,
        violation: None,
    };
    for (a, u) in words.iter().enumerate() {
        for (b, v) in words.iter().enumerate() {
            report.pairs_checked += 1;
            if let Some(violation) = check_pair(u, v, &vectors[a], &vectors[b], tag) {
                report.violation = Some(violation);
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Both embedding conditions for one ordered pair.
pub fn check_pair(
    u: &LetterWord,
    v: &LetterWord,
    phi_u: &PhiVector,
    phi_v: &PhiVector,
    tag: MonoidTag,
) -> Option<EmbeddingViolation> {
    let uv = u.concat(v);
    for (index, eu) in phi_u.iter() {
        let ev = phi_v.get(index).expect("same rank");
        let product = multiply(eu, ev).expect("same tag");
        if phi(&uv, index, tag) != product {
            return Some(EmbeddingViolation::Homomorphism {
                u: u.clone(),
                v: v.clone(),
                index,
            });
        }
    }
    let classes_equal = equal(tag, u, v);
    if classes_equal != (phi_u == phi_v) {
        return Some(EmbeddingViolation::Injectivity {
            u: u.clone(),
            v: v.clone(),
            classes_equal,
        });
    }
    None
}
