//! Realizability toolkit for abstract argumentation formalisms.
//!
//! Decides whether a given set of three-valued interpretations is exactly
//! the admissible, complete, preferred or two-valued-model semantics of
//! some AF, SETAF, bipolar ADF or general ADF over a fixed vocabulary, and
//! constructs a realizing knowledge base when one exists. A brute-force
//! oracle independently evaluates all four semantics, backing both the
//! solver's verification mode and the expressiveness reports.
//!
//! Modules, bottom up:
//!
//! * [`interp`] — vocabularies, three-valued interpretations, the
//!   information and truth orders.
//! * [`frameworks`] — AF/SETAF/BADF/ADF knowledge bases, the consensus
//!   operator and the brute-force semantics oracle.
//! * [`charfun`] — characterization functions and relations, plus the
//!   canonical knowledge-base constructions.
//! * [`propagate`] — the sound and monotone derivation rules with their
//!   fixpoint driver.
//! * [`search`] — the propagate-and-guess solver, the all-solutions
//!   stream and the preferred-semantics search.
//! * [`atlas`] — exhaustive enumeration, signatures and expressiveness
//!   comparison.
//! * [`files`] / [`cli`] — text formats and the command-line front end.

pub mod atlas;
pub mod charfun;
pub mod cli;
pub mod error;
pub mod files;
pub mod frameworks;
pub mod interp;
pub mod propagate;
pub mod search;

pub use error::{Error, Result};
