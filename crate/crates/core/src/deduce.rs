//! Derivations from the finite bases.
//!
//! Every basis identity swaps two adjacent variables `x y ↔ y x` under side
//! conditions expressed by the surrounding pattern letters. With single-letter
//! images for `x` and `y`, an instance is an adjacent transposition of
//! distinct letters, licensed when the required occurrences of the two letters
//! are found before and/or after it. Derivations are built from such steps.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::congruence::MonoidTag;
use crate::error::Error;
use crate::idcheck::{check_id, CheckVerdict};
use crate::word::{vars, Identity, VarWord, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisId {
    L,
    R,
    O,
    E,
}

impl BasisId {
    pub const ALL: [BasisId; 4] = [BasisId::L, BasisId::R, BasisId::O, BasisId::E];

    pub fn lhs_pattern(self) -> &'static str {
        match self {
            BasisId::L => "xyzxty",
            BasisId::R => "xzytxy",
            BasisId::O => "xzytxyrxsy",
            BasisId::E => "xzytxyrysx",
        }
    }

    pub fn rhs_pattern(self) -> &'static str {
        match self {
            BasisId::L => "yxzxty",
            BasisId::R => "xzytyx",
            BasisId::O => "xzytyxrxsy",
            BasisId::E => "xzytyxrysx",
        }
    }

    pub fn identity(self) -> Identity {
        Identity::new(vars(self.lhs_pattern()), vars(self.rhs_pattern()))
    }

    /// Position of the transposed pair in both patterns.
    fn swap_at(self) -> usize {
        match self {
            BasisId::L => 0,
            BasisId::R | BasisId::O | BasisId::E => 4,
        }
    }

    /// Pattern variables in the order `x, y, z, t, r, s`.
    pub fn variables(self) -> Vec<Variable> {
        let support = vars(self.lhs_pattern()).support();
        vars("xyztrs").iter().copied().filter(|x| support.contains(x)).collect()
    }

    fn pattern(self, direction: RewriteDirection) -> (VarWord, VarWord) {
        let (l, r) = (vars(self.lhs_pattern()), vars(self.rhs_pattern()));
        match direction {
            RewriteDirection::Forward => (l, r),
            RewriteDirection::Backward => (r, l),
        }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BasisId::L => "L",
            BasisId::R => "R",
            BasisId::O => "O",
            BasisId::E => "E",
        };
        f.write_str(s)
    }
}

/// The basis used for each monoid.
pub fn basis_for(tag: MonoidTag) -> &'static [BasisId] {
    match tag {
        MonoidTag::Sylv => &[BasisId::L],
        MonoidTag::Sylvh => &[BasisId::R],
        MonoidTag::Baxt => &[BasisId::O, BasisId::E],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RewriteDirection {
    /// Rewrites an instance of the left pattern into the right one.
    Forward,
    Backward,
}

impl fmt::Display for RewriteDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RewriteDirection::Forward => "forward",
            RewriteDirection::Backward => "backward",
        })
    }
}

/// One application of a basis identity inside a context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RewriteStep {
    pub basis: BasisId,
    pub direction: RewriteDirection,
    pub left_context: VarWord,
    /// Image of each pattern variable.
    pub substitution: BTreeMap<Variable, VarWord>,
    pub right_context: VarWord,
}

impl RewriteStep {
    fn image(&self, pattern: &VarWord) -> Result<VarWord, Error> {
        let mut out = self.left_context.as_slice().to_vec();
        for x in pattern {
            let w = self.substitution.get(x).ok_or(Error::UnassignedVariable(*x))?;
            out.extend_from_slice(w.as_slice());
        }
        out.extend_from_slice(self.right_context.as_slice());
        Ok(out.into())
    }

    /// The word this step rewrites.
    pub fn input(&self) -> Result<VarWord, Error> {
        self.image(&self.basis.pattern(self.direction).0)
    }

    /// The word this step produces.
    pub fn output(&self) -> Result<VarWord, Error> {
        self.image(&self.basis.pattern(self.direction).1)
    }
}

fn quoted(w: &VarWord) -> String {
    w.iter().map(|x| x.as_char()).collect()
}

impl fmt::Display for RewriteStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma: Vec<String> = self
            .basis
            .variables()
            .into_iter()
            .map(|x| match self.substitution.get(&x) {
                Some(w) => format!("{x}→{w}"),
                None => format!("{x}→?"),
            })
            .collect();
        write!(
            f,
            "{} {} ctxL='{}' σ={{{}}} ctxR='{}'",
            self.basis,
            self.direction,
            quoted(&self.left_context),
            sigma.join(", "),
            quoted(&self.right_context)
        )
    }
}

/// Rewrites `w` by `step`, which must factor `w` exactly.
pub fn apply_instance(w: &VarWord, step: &RewriteStep) -> Result<VarWord, Error> {
    let patterns = step.basis.pattern(step.direction);
    if patterns.0.iter().all(|x| step.substitution.get(x).is_some_and(|w| w.is_empty())) {
        return Err(Error::DegenerateSubstitution);
    }
    let input = step.image(&patterns.0)?;
    if &input != w {
        return Err(Error::FactorizationMismatch(format!(
            "step reads {input}, word is {w}"
        )));
    }
    step.image(&patterns.1)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    pub start: VarWord,
    pub steps: Vec<RewriteStep>,
}

impl Derivation {
    pub fn empty(start: VarWord) -> Self {
        Derivation {
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The start word followed by every intermediate word.
    pub fn words(&self) -> Result<Vec<VarWord>, Error> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for step in &self.steps {
            let next = apply_instance(out.last().expect("non-empty"), step)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn end(&self) -> Result<VarWord, Error> {
        Ok(self.words()?.pop().expect("non-empty"))
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "start {}", self.start)?;
        let mut current = self.start.clone();
        for step in &self.steps {
            match apply_instance(&current, step) {
                Ok(next) => {
                    write!(f, "\n{step} ⇒ {next}")?;
                    current = next;
                }
                Err(e) => return write!(f, "\n{step} ⇒ invalid ({e})"),
            }
        }
        Ok(())
    }
}

/// True iff `d` starts at the lhs, ends at the rhs, and uses only exact
/// instances of the basis of `tag`.
pub fn verify_derivation(tag: MonoidTag, id: &Identity, d: &Derivation) -> bool {
    if d.start != id.lhs {
        return false;
    }
    let basis = basis_for(tag);
    if d.steps.iter().any(|s| !basis.contains(&s.basis)) {
        return false;
    }
    matches!(d.end(), Ok(end) if end == id.rhs)
}

/// Instance of `basis` transposing positions `p` and `p + 1` of `w`, if the
/// pattern letters around the pair can be found.
///
/// Before the pair the pattern alternates fixed letter and filler, after it
/// filler and fixed letter. Fixed letters before the pair are matched as far
/// right as possible, those after it as far left as possible.
pub fn swap_instance(
    w: &VarWord,
    p: usize,
    basis: BasisId,
    direction: RewriteDirection,
) -> Option<RewriteStep> {
    let s = w.as_slice();
    if p + 1 >= s.len() || s[p] == s[p + 1] {
        return None;
    }
    let (source, _) = basis.pattern(direction);
    let pat = source.as_slice();
    let at = basis.swap_at();
    let mut sigma: BTreeMap<Variable, VarWord> = BTreeMap::new();
    sigma.insert(pat[at], [s[p]].into_iter().collect());
    sigma.insert(pat[at + 1], [s[p + 1]].into_iter().collect());
    let fixed = |x: Variable, sigma: &BTreeMap<Variable, VarWord>| -> Option<Variable> {
        (x == pat[at] || x == pat[at + 1]).then(|| sigma[&x].as_slice()[0])
    };

    let mut cursor = p;
    let mut pending: Option<Variable> = None;
    for &x in pat[..at].iter().rev() {
        match fixed(x, &sigma) {
            Some(letter) => {
                let pos = s[..cursor].iter().rposition(|&c| c == letter)?;
                match pending.take() {
                    Some(g) => {
                        sigma.insert(g, s[pos + 1..cursor].to_vec().into());
                    }
                    None if pos + 1 != cursor => return None,
                    None => {}
                }
                cursor = pos;
            }
            None => pending = Some(x),
        }
    }
    if let Some(g) = pending.take() {
        sigma.insert(g, s[..cursor].to_vec().into());
        cursor = 0;
    }
    let left_context: VarWord = s[..cursor].to_vec().into();

    let mut cursor = p + 2;
    for &x in &pat[at + 2..] {
        match fixed(x, &sigma) {
            Some(letter) => {
                let pos = cursor + s[cursor..].iter().position(|&c| c == letter)?;
                match pending.take() {
                    Some(g) => {
                        sigma.insert(g, s[cursor..pos].to_vec().into());
                    }
                    None if pos != cursor => return None,
                    None => {}
                }
                cursor = pos + 1;
            }
            None => pending = Some(x),
        }
    }
    if let Some(g) = pending.take() {
        sigma.insert(g, s[cursor..].to_vec().into());
        cursor = s.len();
    }
    let right_context: VarWord = s[cursor..].to_vec().into();

    let step = RewriteStep {
        basis,
        direction,
        left_context,
        substitution: sigma,
        right_context,
    };
    debug_assert_eq!(step.input().as_ref(), Ok(w));
    Some(step)
}

/// First licensed instance transposing positions `p` and `p + 1`.
fn licensed_swap(tag: MonoidTag, w: &VarWord, p: usize) -> Option<RewriteStep> {
    for &basis in basis_for(tag) {
        for direction in [RewriteDirection::Forward, RewriteDirection::Backward] {
            if let Some(step) = swap_instance(w, p, basis, direction) {
                return Some(step);
            }
        }
    }
    None
}

fn common_suffix(a: &[Variable], b: &[Variable]) -> usize {
    a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count()
}

fn common_prefix(a: &[Variable], b: &[Variable]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Outcome of [`derive_guided`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuidedDerivation {
    pub derivation: Derivation,
    /// Step counts after each completed macro-step of the guided strategy.
    pub macro_boundaries: Vec<usize>,
    /// Whether the breadth-first fallback was needed.
    pub used_fallback: bool,
}

/// Default step budget for an identity of the given length.
pub fn default_budget(tag: MonoidTag, len: usize) -> usize {
    match tag {
        MonoidTag::Sylv | MonoidTag::Sylvh => 4 * len,
        MonoidTag::Baxt => 16 * len,
    }
}

/// A derivation of `id` from the basis of `tag` with at most `budget` steps.
pub fn derive(tag: MonoidTag, id: &Identity, budget: usize) -> Result<Derivation, Error> {
    derive_guided(tag, id, budget).map(|g| g.derivation)
}

/// [`derive`], also reporting how the guided strategy went.
///
/// sylv and baxt grow the common suffix of the working word and the rhs: with
/// `q` the rhs letter just before that suffix, the rightmost `q` to its left
/// in the working word is moved right one transposition at a time. sylvh
/// grows the common prefix symmetrically. If a transposition is not licensed
/// the remainder is found by breadth-first search.
pub fn derive_guided(tag: MonoidTag, id: &Identity, budget: usize) -> Result<GuidedDerivation, Error> {
    if let CheckVerdict::Unsatisfied(w) = check_id(tag, id) {
        return Err(Error::NotSatisfied(w));
    }
    let target = id.rhs.as_slice();
    let mut current = id.lhs.clone();
    let mut steps: Vec<RewriteStep> = Vec::new();
    let mut macro_boundaries = Vec::new();
    let from_right = tag != MonoidTag::Sylvh;

    'outer: while current != id.rhs {
        let s = current.as_slice().to_vec();
        let n = s.len();
        let (mut pos, goal) = if from_right {
            let m = n - 1 - common_suffix(&s, target);
            let q = target[m];
            let r = s[..m].iter().rposition(|&c| c == q).expect("balanced");
            (r, m)
        } else {
            let m = common_prefix(&s, target);
            let q = target[m];
            let r = m + s[m + 1..].iter().position(|&c| c == q).expect("balanced") + 1;
            (r, m)
        };
        while pos != goal {
            let p = if from_right { pos } else { pos - 1 };
            let step = match licensed_swap(tag, &current, p) {
                Some(step) if steps.len() < budget => step,
                _ => break 'outer,
            };
            current = apply_instance(&current, &step).expect("instance factors the word");
            steps.push(step);
            pos = if from_right { pos + 1 } else { pos - 1 };
        }
        macro_boundaries.push(steps.len());
    }

    if current == id.rhs {
        return Ok(GuidedDerivation {
            derivation: Derivation {
                start: id.lhs.clone(),
                steps,
            },
            macro_boundaries,
            used_fallback: false,
        });
    }
    let remaining = budget.saturating_sub(steps.len());
    let tail = search(tag, &current, &id.rhs, remaining).ok_or(Error::BudgetExhausted(budget))?;
    steps.extend(tail);
    Ok(GuidedDerivation {
        derivation: Derivation {
            start: id.lhs.clone(),
            steps,
        },
        macro_boundaries,
        used_fallback: true,
    })
}

/// Cap on words visited by the breadth-first fallback.
const SEARCH_STATE_LIMIT: usize = 200_000;

/// Shortest sequence of licensed transpositions from `from` to `to`.
fn search(tag: MonoidTag, from: &VarWord, to: &VarWord, budget: usize) -> Option<Vec<RewriteStep>> {
    let mut parent: BTreeMap<VarWord, Option<(VarWord, RewriteStep)>> = BTreeMap::new();
    let mut queue: VecDeque<(VarWord, usize)> = VecDeque::new();
    parent.insert(from.clone(), None);
    queue.push_back((from.clone(), 0));
    while let Some((w, depth)) = queue.pop_front() {
        if &w == to {
            let mut steps = Vec::new();
            let mut cur = w;
            while let Some(Some((prev, step))) = parent.get(&cur) {
                steps.push(step.clone());
                cur = prev.clone();
            }
            steps.reverse();
            return Some(steps);
        }
        if depth == budget || parent.len() > SEARCH_STATE_LIMIT {
            continue;
        }
        for p in 0..w.len().saturating_sub(1) {
            if let Some(step) = licensed_swap(tag, &w, p) {
                let next = apply_instance(&w, &step).expect("instance factors the word");
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((w.clone(), step)));
                    queue.push_back((next, depth + 1));
                }
            }
        }
    }
    None
}
