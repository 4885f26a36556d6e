use alloc::string::String;

use crate::word::{Letter, Variable};

/// Failure of a library operation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("letter {0} does not occur in the tree")]
    LetterAbsent(Letter),
    #[error("variable {0} does not occur in the word")]
    TargetAbsent(Variable),
    #[error("cannot combine a {left} element with a {right} element")]
    TagMismatch {
        left: crate::MonoidTag,
        right: crate::MonoidTag,
    },
    #[error("variable {0} has no value in the assignment")]
    UnassignedVariable(Variable),
    #[error("letter {letter} exceeds rank {rank}")]
    SupportExceedsRank { letter: Letter, rank: u32 },
    #[error("{candidates} candidates exceed the limit of {limit}")]
    BoundExceeded { candidates: u128, limit: u128 },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("rewrite step does not factor the word: {0}")]
    FactorizationMismatch(String),
    #[error("substitution maps every pattern variable to the empty word")]
    DegenerateSubstitution,
    #[error("identity is not satisfied: {0}")]
    NotSatisfied(crate::idcheck::Witness),
    #[error("no derivation found within a budget of {0} steps")]
    BudgetExhausted(usize),
}

/// Failure to read a word, variable word or identity from text.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("invalid letter {0:?}: letters are positive integers")]
    InvalidLetter(String),
    #[error("invalid variable {0:?}: variables are lowercase ASCII letters")]
    InvalidVariable(char),
    #[error("identity must have the form `<lhs> = <rhs>`")]
    MissingEquals,
    #[error("unknown monoid {0:?}; expected sylv, sylvh or baxt")]
    UnknownMonoid(String),
}
