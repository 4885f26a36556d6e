//! Elements of the sylvester, #-sylvester and Baxter monoids as canonical
//! words, and the precedence tables that characterize equality.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};
use core::str::FromStr;

use crate::bst::{p_sylv, p_sylvh, Traversal};
use crate::error::{Error, ParseError};
use crate::word::{all_words, Content, Letter, LetterWord};

/// Which of the three congruences is in use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonoidTag {
    /// Sylvester monoid: right-strict trees, right precedences.
    Sylv,
    /// #-sylvester monoid: left-strict trees, left precedences.
    Sylvh,
    /// Baxter monoid: both.
    Baxt,
}

impl MonoidTag {
    pub const ALL: [MonoidTag; 3] = [MonoidTag::Sylv, MonoidTag::Sylvh, MonoidTag::Baxt];

    pub const fn name(self) -> &'static str {
        match self {
            MonoidTag::Sylv => "sylv",
            MonoidTag::Sylvh => "sylvh",
            MonoidTag::Baxt => "baxt",
        }
    }

    pub(crate) fn uses_right(self) -> bool {
        matches!(self, MonoidTag::Sylv | MonoidTag::Baxt)
    }

    pub(crate) fn uses_left(self) -> bool {
        matches!(self, MonoidTag::Sylvh | MonoidTag::Baxt)
    }
}

impl fmt::Display for MonoidTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonoidTag {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "sylv" => Ok(MonoidTag::Sylv),
            "sylvh" | "sylv#" => Ok(MonoidTag::Sylvh),
            "baxt" => Ok(MonoidTag::Baxt),
            other => Err(ParseError::UnknownMonoid(other.into())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PrecedenceSide {
    Right,
    Left,
}

/// One precedence between `lower < upper`, with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precedence {
    pub lower: Letter,
    pub upper: Letter,
    pub index: usize,
}

/// The right or left precedences of a word.
///
/// Right tables are keyed by the lower letter `a` of a `b-a` precedence, left
/// tables by the upper letter `b` of an `a-b` precedence: each key has at most
/// one partner.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrecedenceTable {
    side: PrecedenceSide,
    entries: BTreeMap<Letter, (Letter, usize)>,
}

impl PrecedenceTable {
    pub fn side(&self) -> PrecedenceSide {
        self.side
    }

    /// Partner and index for `key`, if the word has such a precedence.
    pub fn get(&self, key: Letter) -> Option<(Letter, usize)> {
        self.entries.get(&key).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in increasing key order.
    pub fn iter(&self) -> impl Iterator<Item = Precedence> + '_ {
        let side = self.side;
        self.entries.iter().map(move |(&key, &(partner, index))| match side {
            PrecedenceSide::Right => Precedence {
                lower: key,
                upper: partner,
                index,
            },
            PrecedenceSide::Left => Precedence {
                lower: partner,
                upper: key,
                index,
            },
        })
    }
}

impl fmt::Display for PrecedenceTable {
    /// One line per entry: `b-a right precedence, index k` or
    /// `a-b left precedence, index k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            match self.side {
                PrecedenceSide::Right => {
                    write!(f, "{}-{} right precedence, index {}", p.upper, p.lower, p.index)?
                }
                PrecedenceSide::Left => {
                    write!(f, "{}-{} left precedence, index {}", p.lower, p.upper, p.index)?
                }
            }
        }
        Ok(())
    }
}

/// Reading right to left, at the first `a` the partner is the least letter
/// above `a` seen so far (nothing strictly between can have been seen), and
/// the index is how often it was seen.
pub fn right_precedences(w: &LetterWord) -> PrecedenceTable {
    let mut seen: BTreeMap<Letter, usize> = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for &a in w.as_slice().iter().rev() {
        if !seen.contains_key(&a) {
            if let Some((&b, &k)) = seen.range(a..).next() {
                entries.insert(a, (b, k));
            }
        }
        *seen.entry(a).or_insert(0) += 1;
    }
    PrecedenceTable {
        side: PrecedenceSide::Right,
        entries,
    }
}

/// Left-to-right dual of [`right_precedences`].
pub fn left_precedences(w: &LetterWord) -> PrecedenceTable {
    let mut seen: BTreeMap<Letter, usize> = BTreeMap::new();
    let mut entries = BTreeMap::new();
    for &b in w {
        if !seen.contains_key(&b) {
            if let Some((&a, &k)) = seen.range(..b).next_back() {
                entries.insert(b, (a, k));
            }
        }
        *seen.entry(b).or_insert(0) += 1;
    }
    PrecedenceTable {
        side: PrecedenceSide::Left,
        entries,
    }
}

/// Canonical word(s) of a class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CanonicalForm {
    /// Postfix reading of the right-strict tree.
    Sylv(LetterWord),
    /// Prefix reading of the left-strict tree.
    Sylvh(LetterWord),
    /// Both of the above, #-sylvester first.
    Baxt { sylvh: LetterWord, sylv: LetterWord },
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalForm::Sylv(w) | CanonicalForm::Sylvh(w) => write!(f, "{w}"),
            CanonicalForm::Baxt { sylvh, sylv } => write!(f, "({sylvh}, {sylv})"),
        }
    }
}

/// A monoid element. Compares by canonical form only; the stored
/// representative is some word of the class, used for multiplication.
#[derive(Clone, Debug)]
pub struct Element {
    form: CanonicalForm,
    representative: LetterWord,
}

impl Element {
    pub fn identity(tag: MonoidTag) -> Self {
        canonicalize(tag, &LetterWord::empty())
    }

    pub fn tag(&self) -> MonoidTag {
        match self.form {
            CanonicalForm::Sylv(_) => MonoidTag::Sylv,
            CanonicalForm::Sylvh(_) => MonoidTag::Sylvh,
            CanonicalForm::Baxt { .. } => MonoidTag::Baxt,
        }
    }

    pub fn canonical(&self) -> &CanonicalForm {
        &self.form
    }

    /// A word of the class. For sylv and sylvh this is the canonical word.
    pub fn representative(&self) -> &LetterWord {
        &self.representative
    }

    pub fn content(&self) -> Content<Letter> {
        self.representative.content()
    }

    pub fn is_identity(&self) -> bool {
        self.representative.is_empty()
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.form == other.form
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.form.hash(state);
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form.fmt(f)
    }
}

pub fn canonicalize(tag: MonoidTag, w: &LetterWord) -> Element {
    let form = match tag {
        MonoidTag::Sylv => CanonicalForm::Sylv(p_sylv(w).reading(Traversal::Postfix)),
        MonoidTag::Sylvh => CanonicalForm::Sylvh(p_sylvh(w).reading(Traversal::Prefix)),
        MonoidTag::Baxt => CanonicalForm::Baxt {
            sylvh: p_sylvh(w).reading(Traversal::Prefix),
            sylv: p_sylv(w).reading(Traversal::Postfix),
        },
    };
    let representative = match &form {
        CanonicalForm::Sylv(c) | CanonicalForm::Sylvh(c) => c.clone(),
        CanonicalForm::Baxt { .. } => w.clone(),
    };
    Element {
        form,
        representative,
    }
}

/// Equality of classes via their trees.
pub fn equal(tag: MonoidTag, u: &LetterWord, v: &LetterWord) -> bool {
    if u.len() != v.len() || u.content() != v.content() {
        return false;
    }
    (!tag.uses_right() || p_sylv(u) == p_sylv(v)) && (!tag.uses_left() || p_sylvh(u) == p_sylvh(v))
}

/// Equality of classes via content and precedence tables.
pub fn equal_via_precedences(tag: MonoidTag, u: &LetterWord, v: &LetterWord) -> bool {
    u.content() == v.content()
        && (!tag.uses_right() || right_precedences(u) == right_precedences(v))
        && (!tag.uses_left() || left_precedences(u) == left_precedences(v))
}

pub fn multiply(a: &Element, b: &Element) -> Result<Element, Error> {
    if a.tag() != b.tag() {
        return Err(Error::TagMismatch {
            left: a.tag(),
            right: b.tag(),
        });
    }
    Ok(canonicalize(
        a.tag(),
        &a.representative.concat(&b.representative),
    ))
}

/// Instances of the defining relations of `tag` over letters `1..=rank`,
/// with every free inner word of length at most `max_inner`.
///
/// * sylv: `(c a u b, a c u b)` for `a ≤ b < c`;
/// * sylvh: `(b u a c, b u c a)` for `a < b ≤ c`;
/// * baxt: `(c u d a v b, c u a d v b)` for `a ≤ b < c ≤ d`, and
///   `(b u d a v c, b u a d v c)` for `a < b ≤ c < d`.
pub fn defining_relations(
    tag: MonoidTag,
    rank: u32,
    max_inner: usize,
) -> Vec<(LetterWord, LetterWord)> {
    let inner = all_words(rank, max_inner);
    let range = || (1..=rank).filter_map(Letter::new);
    let cat = |parts: &[&[Letter]]| -> LetterWord {
        parts.iter().flat_map(|p| p.iter().copied()).collect()
    };
    let mut out = Vec::new();
    match tag {
        MonoidTag::Sylv => {
            for a in range() {
                for b in range().filter(|&b| a <= b) {
                    for c in range().filter(|&c| b < c) {
                        for u in &inner {
                            let u = u.as_slice();
                            out.push((cat(&[&[c, a], u, &[b]]), cat(&[&[a, c], u, &[b]])));
                        }
                    }
                }
            }
        }
        MonoidTag::Sylvh => {
            for a in range() {
                for b in range().filter(|&b| a < b) {
                    for c in range().filter(|&c| b <= c) {
                        for u in &inner {
                            let u = u.as_slice();
                            out.push((cat(&[&[b], u, &[a, c]]), cat(&[&[b], u, &[c, a]])));
                        }
                    }
                }
            }
        }
        MonoidTag::Baxt => {
            for a in range() {
                for b in range() {
                    for c in range() {
                        for d in range() {
                            let first = a <= b && b < c && c <= d;
                            let second = a < b && b <= c && c < d;
                            if !first && !second {
                                continue;
                            }
                            for u in &inner {
                                for v in &inner {
                                    let (u, v) = (u.as_slice(), v.as_slice());
                                    if first {
                                        out.push((
                                            cat(&[&[c], u, &[d, a], v, &[b]]),
                                            cat(&[&[c], u, &[a, d], v, &[b]]),
                                        ));
                                    }
                                    if second {
                                        out.push((
                                            cat(&[&[b], u, &[d, a], v, &[c]]),
                                            cat(&[&[b], u, &[a, d], v, &[c]]),
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}
