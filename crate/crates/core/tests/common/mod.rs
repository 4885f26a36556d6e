#![allow(dead_code)]

use proptest::prelude::*;
use sylvkit_core::word::{Identity, LetterWord, VarWord, Variable};
use sylvkit_core::Letter;

pub fn letter_word(rank: u32, max_len: usize) -> impl Strategy<Value = LetterWord> {
    prop::collection::vec(1..=rank, 0..=max_len)
        .prop_map(|v| v.into_iter().map(|a| Letter::new(a).unwrap()).collect())
}

pub fn var_word(n_vars: usize, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = VarWord> {
    prop::collection::vec(0..n_vars, len)
        .prop_map(|v| v.into_iter().map(|k| Variable::from_index(k).unwrap()).collect())
}

/// A balanced identity: the rhs is a shuffle of the lhs.
pub fn balanced_identity(n_vars: usize, max_len: usize) -> impl Strategy<Value = Identity> {
    var_word(n_vars, 0..=max_len)
        .prop_flat_map(|lhs| {
            let v = lhs.as_slice().to_vec();
            (Just(lhs), Just(v).prop_shuffle())
        })
        .prop_map(|(lhs, rhs)| Identity::new(lhs, rhs.into()))
}

/// Mostly balanced identities, sometimes with independently drawn sides.
pub fn any_identity(n_vars: usize, max_len: usize) -> impl Strategy<Value = Identity> {
    prop_oneof![
        3 => balanced_identity(n_vars, max_len),
        1 => (var_word(n_vars, 0..=max_len), var_word(n_vars, 0..=max_len))
            .prop_map(|(l, r)| Identity::new(l, r)),
    ]
}
