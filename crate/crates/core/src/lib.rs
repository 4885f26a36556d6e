//! Sylvester, #-sylvester and Baxter monoids: canonical forms via binary
//! search trees, identity checking, evaluation and refutation, the rank-2
//! embeddings, and derivations from finite equational bases.
//!
//! The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bst;
pub mod congruence;
pub mod deduce;
pub mod embed;
pub mod error;
pub mod evalsearch;
pub mod idcheck;
pub mod word;

pub use congruence::{canonicalize, equal, CanonicalForm, Element, MonoidTag};
pub use error::{Error, ParseError};
pub use idcheck::{check_id, CheckVerdict, Witness};
pub use word::{Identity, Letter, LetterWord, VarWord, Variable};
