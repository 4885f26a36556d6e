//! Words over the ordered alphabet of positive integers and over variables,
//! their content and support, and identities between variable words.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::ParseError;

/// A letter of the ordered alphabet `1 < 2 < 3 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u32);

impl Letter {
    /// Returns `None` for zero.
    pub const fn new(value: u32) -> Option<Self> {
        if value == 0 {
            None
        } else {
            Some(Letter(value))
        }
    }

    pub const fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Number of distinct variables available (`a` through `z`).
pub const MAX_VARIABLES: usize = 26;

/// A variable, rendered as a lowercase ASCII letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable(u8);

impl Variable {
    pub fn from_char(c: char) -> Option<Self> {
        c.is_ascii_lowercase().then(|| Variable(c as u8 - b'a'))
    }

    pub fn from_index(index: usize) -> Option<Self> {
        (index < MAX_VARIABLES).then_some(Variable(index as u8))
    }

    /// Position in `a..=z`; used to index dense per-variable tables.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn as_char(self) -> char {
        (b'a' + self.0) as char
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word. The empty word represents the identity of every monoid here.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<L>(Vec<L>);

pub type LetterWord = Word<Letter>;
pub type VarWord = Word<Variable>;

impl<L> Word<L> {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn as_slice(&self) -> &[L] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<L> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, L> {
        self.0.iter()
    }
}

impl<L: Copy + Ord> Word<L> {
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn reversed(&self) -> Self {
        self.0.iter().rev().copied().collect()
    }

    pub fn content(&self) -> Content<L> {
        let mut counts = BTreeMap::new();
        for &a in &self.0 {
            *counts.entry(a).or_insert(0) += 1;
        }
        Content(counts)
    }

    /// The letters occurring in the word, in increasing order.
    pub fn support(&self) -> BTreeSet<L> {
        self.0.iter().copied().collect()
    }

    /// The subsequence of letters belonging to `keep`.
    pub fn restrict(&self, keep: &BTreeSet<L>) -> Self {
        self.0.iter().copied().filter(|a| keep.contains(a)).collect()
    }

    /// Image under a letter-to-word substitution.
    pub fn substitute<M: Copy, F>(&self, mut image: F) -> Word<M>
    where
        F: FnMut(L) -> Word<M>,
    {
        let mut out = Vec::new();
        for &a in &self.0 {
            out.extend(image(a).0);
        }
        Word(out)
    }
}

impl<L> From<Vec<L>> for Word<L> {
    fn from(letters: Vec<L>) -> Self {
        Word(letters)
    }
}

impl<L> FromIterator<L> for Word<L> {
    fn from_iter<I: IntoIterator<Item = L>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a, L> IntoIterator for &'a Word<L> {
    type Item = &'a L;
    type IntoIter = core::slice::Iter<'a, L>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word<Letter> {
    /// Contiguous digits when every letter is at most 9, comma-separated
    /// otherwise, `ε` for the empty word. A lone letter above 9 gets a
    /// trailing comma so that it does not read back as digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        let compact = self.0.iter().all(|a| a.get() <= 9);
        for (i, a) in self.0.iter().enumerate() {
            if !compact && i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        if !compact && self.0.len() == 1 {
            f.write_str(",")?;
        }
        Ok(())
    }
}

impl fmt::Display for Word<Variable> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("ε");
        }
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

fn is_empty_token(s: &str) -> bool {
    s.is_empty() || s == "ε" || s == "-"
}

impl FromStr for Word<Letter> {
    type Err = ParseError;

    /// Accepts `3123`, `3,1,2,3`, and `ε` (or the empty string) for the empty word.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if is_empty_token(s) {
            return Ok(Word::empty());
        }
        let parse = |tok: &str| {
            tok.trim()
                .parse::<u32>()
                .ok()
                .and_then(Letter::new)
                .ok_or_else(|| ParseError::InvalidLetter(tok.to_string()))
        };
        if s.contains(',') {
            s.strip_suffix(',').unwrap_or(s).split(',').map(parse).collect()
        } else {
            s.chars()
                .map(|c| {
                    let mut buf = [0u8; 4];
                    parse(c.encode_utf8(&mut buf))
                })
                .collect()
        }
    }
}

impl FromStr for Word<Variable> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if is_empty_token(s) {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| Variable::from_char(c).ok_or(ParseError::InvalidVariable(c)))
            .collect()
    }
}

/// Multiplicity of each letter of a word. Letters that do not occur are absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Content<L>(BTreeMap<L, usize>);

impl<L: Copy + Ord> Content<L> {
    pub fn get(&self, a: L) -> usize {
        self.0.get(&a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (L, usize)> + '_ {
        self.0.iter().map(|(&a, &n)| (a, n))
    }

    /// Sum of all multiplicities, i.e. the length of the word.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn support(&self) -> BTreeSet<L> {
        self.0.keys().copied().collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<L: Copy + Ord> FromIterator<(L, usize)> for Content<L> {
    fn from_iter<I: IntoIterator<Item = (L, usize)>>(iter: I) -> Self {
        Content(iter.into_iter().filter(|&(_, n)| n > 0).collect())
    }
}

/// An identity `lhs ≈ rhs` between words over variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Identity {
    pub lhs: VarWord,
    pub rhs: VarWord,
}

impl Identity {
    pub fn new(lhs: VarWord, rhs: VarWord) -> Self {
        Identity { lhs, rhs }
    }

    /// Variables occurring on either side.
    pub fn support(&self) -> BTreeSet<Variable> {
        let mut s = self.lhs.support();
        s.extend(self.rhs.iter().copied());
        s
    }

    pub fn is_balanced(&self) -> bool {
        self.lhs.content() == self.rhs.content()
    }

    /// `u ≈ u`.
    pub fn is_trivial(&self) -> bool {
        self.lhs == self.rhs
    }

    pub fn swapped(&self) -> Self {
        Identity::new(self.rhs.clone(), self.lhs.clone())
    }

    /// Both sides read backwards.
    pub fn reversed(&self) -> Self {
        Identity::new(self.lhs.reversed(), self.rhs.reversed())
    }

    /// Length of the longer side.
    pub fn len(&self) -> usize {
        self.lhs.len().max(self.rhs.len())
    }

    pub fn is_empty(&self) -> bool {
        self.lhs.is_empty() && self.rhs.is_empty()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

impl FromStr for Identity {
    type Err = ParseError;

    /// `xyxy = yxxy`; `≈` is accepted in place of `=`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lhs, rhs) = s
            .split_once('=')
            .or_else(|| s.split_once('≈'))
            .ok_or(ParseError::MissingEquals)?;
        Ok(Identity::new(lhs.parse()?, rhs.parse()?))
    }
}

/// Every word over `1..=rank` of length at most `max_len`, shortest first and
/// lexicographically within a length.
pub fn all_words(rank: u32, max_len: usize) -> Vec<LetterWord> {
    let letters: Vec<Letter> = (1..=rank).filter_map(Letter::new).collect();
    let mut out = vec_of_empty();
    let mut layer = vec_of_empty();
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &a in &letters {
                let mut v = w.as_slice().to_vec();
                v.push(a);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn vec_of_empty() -> Vec<LetterWord> {
    alloc::vec![Word::empty()]
}

/// Shorthand for building letter words in code: `letters(&[3, 1, 2, 3])`.
///
/// # Panics
/// If any value is zero.
pub fn letters(values: &[u32]) -> LetterWord {
    values
        .iter()
        .map(|&v| Letter::new(v).expect("letters are positive"))
        .collect()
}

/// Panicking parse helper for literals in code and tests.
pub fn vars(s: &str) -> VarWord {
    s.parse().expect("valid variable word")
}

pub(crate) fn render_list<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        out.push_str(&item.to_string());
    }
    out
}
