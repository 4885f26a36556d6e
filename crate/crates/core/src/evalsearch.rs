//! Evaluating variable words in the monoids, refuting identities by explicit
//! assignments, and exhaustive search for the shortest satisfied identities.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::congruence::{canonicalize, equal, Element, MonoidTag};
use crate::error::Error;
use crate::idcheck::check_id;
use crate::word::{all_words, letters, render_list, Identity, LetterWord, VarWord, Variable};

/// Default ceiling on `(n_vars ^ max_len)²` for [`shortest_identities`].
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 100_000_000;

/// Values for the variables of an identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Assignment(BTreeMap<Variable, LetterWord>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn set(&mut self, x: Variable, value: LetterWord) {
        self.0.insert(x, value);
    }

    pub fn get(&self, x: Variable) -> Option<&LetterWord> {
        self.0.get(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Variable, &LetterWord)> + '_ {
        self.0.iter().map(|(&x, w)| (x, w))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word obtained by replacing each variable of `u`.
    pub fn apply(&self, u: &VarWord) -> Result<LetterWord, Error> {
        let mut out = Vec::new();
        for &x in u {
            let w = self.0.get(&x).ok_or(Error::UnassignedVariable(x))?;
            out.extend_from_slice(w.as_slice());
        }
        Ok(out.into())
    }
}

impl FromIterator<(Variable, LetterWord)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (Variable, LetterWord)>>(iter: I) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items = self.0.iter().map(|(x, w)| alloc::format!("{x}↦{w}"));
        write!(f, "{{{}}}", render_list(items))
    }
}

pub fn evaluate(u: &VarWord, psi: &Assignment, tag: MonoidTag) -> Result<Element, Error> {
    Ok(canonicalize(tag, &psi.apply(u)?))
}

/// Whether `psi` separates the two sides of `id` in `tag`.
pub fn refutes(id: &Identity, psi: &Assignment, tag: MonoidTag) -> Result<bool, Error> {
    Ok(!equal(tag, &psi.apply(&id.lhs)?, &psi.apply(&id.rhs)?))
}

/// First assignment of each support variable to one of `values` that
/// refutes `id`. Variables are taken in alphabetical order, the first being
/// the most significant digit; values in the order given.
pub fn refute_with_family(id: &Identity, tag: MonoidTag, values: &[LetterWord]) -> Option<Assignment> {
    let support: Vec<Variable> = id.support().into_iter().collect();
    if values.is_empty() {
        return None;
    }
    let mut digits = vec![0usize; support.len()];
    loop {
        let psi: Assignment = support
            .iter()
            .zip(&digits)
            .map(|(&x, &d)| (x, values[d].clone()))
            .collect();
        if refutes(id, &psi, tag).expect("support is assigned") {
            return Some(psi);
        }
        // Odometer increment, last variable fastest.
        let mut i = support.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < values.len() {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// The values `ε, 1, 2`.
pub fn single_letter_family() -> Vec<LetterWord> {
    vec![LetterWord::empty(), letters(&[1]), letters(&[2])]
}

/// A counterexample from the family `{ε, 1, 2}`, which suffices for every
/// identity the checker rejects.
pub fn refute(id: &Identity, tag: MonoidTag) -> Option<Assignment> {
    refute_with_family(id, tag, &single_letter_family())
}

/// Renames variables in order of first appearance (lhs then rhs) to
/// `x, y, z, t, r, s`, then the remaining letters alphabetically.
pub fn rename_by_first_appearance(id: &Identity) -> Identity {
    let mut map: BTreeMap<Variable, Variable> = BTreeMap::new();
    let mut rename = |w: &VarWord| -> VarWord {
        w.iter()
            .map(|&x| {
                let next = naming_order(map.len());
                *map.entry(x).or_insert(next)
            })
            .collect()
    };
    let lhs = rename(&id.lhs);
    let rhs = rename(&id.rhs);
    Identity::new(lhs, rhs)
}

const NAMES: &[u8; 26] = b"xyztrsabcdefghijklmnopquvw";

/// The `k`-th variable name used for canonical representatives.
///
/// # Panics
/// If `k >= 26`.
pub fn naming_order(k: usize) -> Variable {
    Variable::from_char(NAMES[k] as char).expect("lowercase")
}

fn rank_of(x: Variable) -> usize {
    const RANK: [u8; 26] = {
        let mut r = [0u8; 26];
        let mut k = 0;
        while k < 26 {
            r[(NAMES[k] - b'a') as usize] = k as u8;
            k += 1;
        }
        r
    };
    RANK[x.index()] as usize
}

fn ranks(w: &VarWord) -> Vec<usize> {
    w.iter().map(|&x| rank_of(x)).collect()
}

fn key(id: &Identity) -> (Vec<usize>, Vec<usize>) {
    (ranks(&id.lhs), ranks(&id.rhs))
}

/// Representative of the class of `id` under renaming and swapping sides:
/// the smaller of the two first-appearance renamings, comparing variables in
/// naming order.
pub fn canonical_identity(id: &Identity) -> Identity {
    let a = rename_by_first_appearance(id);
    let b = rename_by_first_appearance(&id.swapped());
    if key(&b) < key(&a) {
        b
    } else {
        a
    }
}

/// Whether two identities agree up to renaming variables and swapping sides.
pub fn equivalent(a: &Identity, b: &Identity) -> bool {
    canonical_identity(a) == canonical_identity(b)
}

/// Restricted growth strings of length `len` using exactly `n` symbols, in
/// lexicographic order.
fn growth_strings(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(n: usize, len: usize, used: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            if used == n {
                out.push(cur.clone());
            }
            return;
        }
        // Not enough room left to introduce the missing symbols.
        if n - used > len - cur.len() {
            return;
        }
        for s in 0..=used.min(n - 1) {
            cur.push(s);
            go(n, len, used.max(s + 1), cur, out);
            cur.pop();
        }
    }
    if (1..=26).contains(&n) {
        go(n, len, 0, &mut cur, &mut out);
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn to_word(ranks: &[usize]) -> VarWord {
    ranks.iter().map(|&k| naming_order(k)).collect()
}

/// Left-hand sides of canonical representatives: words of length `len` over
/// exactly `n` variables, named by first appearance.
pub fn canonical_left_sides(n: usize, len: usize) -> Vec<VarWord> {
    growth_strings(n, len).iter().map(|r| to_word(r)).collect()
}

/// Canonical representatives with the given left-hand side, in order.
pub fn identities_with_lhs(lhs: &VarWord) -> Vec<Identity> {
    let l = ranks(lhs);
    let mut perm = l.clone();
    perm.sort_unstable();
    let mut out = Vec::new();
    loop {
        if perm != l {
            let id = Identity::new(lhs.clone(), to_word(&perm));
            let swapped = rename_by_first_appearance(&id.swapped());
            if (l.clone(), perm.clone()) <= key(&swapped) {
                out.push(id);
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

/// Every non-trivial balanced identity in exactly `n_vars` variables with
/// sides of length at most `max_len`, one per equivalence class, shortest
/// first and lexicographically within a length.
pub fn enumerate_identities(n_vars: usize, max_len: usize) -> impl Iterator<Item = Identity> {
    (1..=max_len).flat_map(move |len| {
        canonical_left_sides(n_vars, len)
            .into_iter()
            .flat_map(|lhs| identities_with_lhs(&lhs))
    })
}

/// Canonical identities of exactly this length.
pub fn enumerate_identities_of_length(n_vars: usize, len: usize) -> impl Iterator<Item = Identity> {
    canonical_left_sides(n_vars, len)
        .into_iter()
        .flat_map(|lhs| identities_with_lhs(&lhs))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub monoid: MonoidTag,
    pub n_vars: usize,
    pub max_len: usize,
    /// `None` when no identity of length at most `max_len` holds.
    pub minimal_length: Option<usize>,
    /// Canonical representatives of every class holding at that length.
    pub identities: Vec<Identity>,
    pub candidates_examined: u64,
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.minimal_length {
            None => writeln!(
                f,
                "{}: no identity in {} variables of length ≤ {}",
                self.monoid, self.n_vars, self.max_len
            )?,
            Some(len) => {
                writeln!(
                    f,
                    "{}: shortest identities in {} variables have length {} ({} classes)",
                    self.monoid,
                    self.n_vars,
                    len,
                    self.identities.len()
                )?;
                for id in &self.identities {
                    writeln!(f, "{id}")?;
                }
            }
        }
        write!(f, "candidates examined: {}", self.candidates_examined)
    }
}

/// Refuses searches whose naive candidate count `(n^L)²` exceeds `limit`.
pub fn check_search_bound(n_vars: usize, max_len: usize, limit: u128) -> Result<(), Error> {
    if n_vars == 0 || n_vars > 26 {
        return Err(Error::InvalidArgument(alloc::format!(
            "number of variables must be between 1 and 26, got {n_vars}"
        )));
    }
    let side = (n_vars as u128).checked_pow(max_len as u32);
    let candidates = side.and_then(|s| s.checked_mul(s)).unwrap_or(u128::MAX);
    if candidates > limit {
        return Err(Error::BoundExceeded { candidates, limit });
    }
    Ok(())
}

pub fn shortest_identities(tag: MonoidTag, n_vars: usize, max_len: usize) -> Result<SearchReport, Error> {
    shortest_identities_with_limit(tag, n_vars, max_len, DEFAULT_CANDIDATE_LIMIT)
}

pub fn shortest_identities_with_limit(
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
        for id in enumerate_identities_of_length(n_vars, len) {
            report.candidates_examined += 1;
            if check_id(tag, &id).is_satisfied() {
                report.identities.push(id);
            }
        }
        if !report.identities.is_empty() {
            report.minimal_length = Some(len);
            break;
        }
    }
    Ok(report)
}

/// Every word over `{1, 2}` of length at most `max_len`.
pub fn rank_two_words(max_len: usize) -> Vec<LetterWord> {
    all_words(2, max_len)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::vars;

    fn id(s: &str) -> Identity {
        s.parse().unwrap()
    }

    fn v(c: char) -> Variable {
        Variable::from_char(c).unwrap()
    }

    #[test]
    fn evaluation_examples() {
        let psi: Assignment = [(v('x'), letters(&[1])), (v('y'), letters(&[2]))].into_iter().collect();
        let e = evaluate(&vars("xyxy"), &psi, MonoidTag::Sylv).unwrap();
        // 1212 is already a postfix reading; 1221 lacks its 2-1 right
        // precedence and lies in another class.
        assert_eq!(e.representative(), &letters(&[1, 2, 1, 2]));
        assert!(!equal(MonoidTag::Sylv, &letters(&[1, 2, 1, 2]), &letters(&[1, 2, 2, 1])));

        let psi: Assignment = [
            (v('x'), letters(&[2])),
            (v('y'), letters(&[1])),
            (v('z'), LetterWord::empty()),
            (v('t'), LetterWord::empty()),
        ]
        .into_iter()
        .collect();
        let l = evaluate(&vars("xzxytx"), &psi, MonoidTag::Sylv).unwrap();
        let r = evaluate(&vars("xzyxtx"), &psi, MonoidTag::Sylv).unwrap();
        assert_eq!(l.representative(), &letters(&[2, 2, 1, 2]));
        assert_eq!(r.representative(), &letters(&[2, 1, 2, 2]));

        let eps: Assignment = [(v('x'), LetterWord::empty())].into_iter().collect();
        for tag in MonoidTag::ALL {
            assert!(evaluate(&vars("xxx"), &eps, tag).unwrap().is_identity());
        }
        assert_eq!(
            evaluate(&vars("xy"), &eps, MonoidTag::Sylv),
            Err(Error::UnassignedVariable(v('y')))
        );
    }

    #[test]
    fn refutation_examples() {
        let psi = refute(&id("xy = yx"), MonoidTag::Sylv).unwrap();
        assert_eq!(psi.to_string(), "{x↦1, y↦2}");
        assert_eq!(refute(&id("xyxy = yxxy"), MonoidTag::Sylv), None);
        let psi = refute(&id("xzxytx = xzyxtx"), MonoidTag::Sylv).unwrap();
        assert_eq!(psi.to_string(), "{t↦ε, x↦2, y↦1, z↦ε}");
    }

    #[test]
    fn enumeration_examples() {
        let two: Vec<Identity> = enumerate_identities(2, 2).collect();
        assert_eq!(two, [id("xy = yx")]);
        assert_eq!(enumerate_identities(1, 6).count(), 0);
        assert!(enumerate_identities(2, 4).any(|i| i == id("xyxy = yxxy")));
    }

    #[test]
    fn enumeration_is_one_per_class() {
        let all: Vec<Identity> = enumerate_identities(2, 5).collect();
        let mut canon: Vec<Identity> = all.iter().map(canonical_identity).collect();
        assert_eq!(canon, all);
        canon.sort_by_key(key);
        canon.dedup();
        assert_eq!(canon.len(), all.len());
    }

    #[test]
    fn canonical_identity_examples() {
        assert_eq!(canonical_identity(&id("yxxyxy = yxyxxy")), id("xyxyyx = xyyxyx"));
        assert!(equivalent(&id("ab = ba"), &id("xy = yx")));
        assert!(!equivalent(&id("xyxy = yxxy"), &id("yxyx = yxxy")));
    }

    #[test]
    fn naming() {
        let names: alloc::string::String = (0..8).map(|k| naming_order(k).as_char()).collect();
        assert_eq!(names, "xyztrsab");
    }

    #[test]
    fn guard() {
        assert!(check_search_bound(3, 8, DEFAULT_CANDIDATE_LIMIT).is_ok());
        assert!(matches!(
            check_search_bound(4, 8, DEFAULT_CANDIDATE_LIMIT),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn shortest_two_variables() {
        let r = shortest_identities(MonoidTag::Sylv, 2, 6).unwrap();
        assert_eq!(r.minimal_length, Some(4));
        assert_eq!(r.identities, [id("xyxy = yxxy")]);
        let r = shortest_identities(MonoidTag::Sylv, 2, 3).unwrap();
        assert_eq!(r.minimal_length, None);
    }
}
