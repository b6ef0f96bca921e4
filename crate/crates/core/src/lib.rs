//! Avoidability of finite sets of partial words.
//!
//! A partial word is a word over a finite alphabet that may contain holes,
//! where a hole is compatible with every letter. A set `X` of partial words is
//! *unavoidable* when every two-sided infinite word meets (has a factor
//! compatible with) some member of `X`.
//!
//! The crate provides:
//!
//! * the partial-word algebra ([`PartialWord`], [`WordSet`], [`PeriodicWord`]),
//! * an exact decider over the factor-window graph and a bounded-period
//!   constraint search that produces checkable periodic certificates
//!   ([`decide`]),
//! * the avoidability-preserving set operations ([`reductions`]),
//! * closed-form predicates and constructions for the canonical minimal
//!   sets `X0 = T0 ∪ T0'` and their strengthenings ([`theory`]),
//! * the catalog of avoiding-word families for the two-word strengthenings
//!   of `X0` over three letters ([`patterns`]).
//!
//! The crate is `no_std` and only needs `alloc`.
#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]
#![allow(clippy::manual_is_multiple_of)]

extern crate alloc;

mod alphabet;
mod error;
mod periodic;
mod set;
mod word;

pub mod decide;
pub mod patterns;
pub mod reductions;
pub mod theory;

pub use alphabet::{Alphabet, Letter, MAX_ALPHABET};
pub use error::{Error, Result};
pub use periodic::PeriodicWord;
pub use set::{build_x0, Permutation, WordSet};
pub use word::{PartialWord, Symbol, HOLE_CHAR};
