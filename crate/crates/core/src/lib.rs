//! Derived-equivalence invariants of bound quiver algebras over finite fields.
//!
//! The pipeline is: parse or look up a [`presentation::Presentation`], complete
//! its relations into a rewriting system and structure-constant table
//! ([`rewrite`]), then compute centers, commutator spaces, Külshammer ideals
//! ([`invariants`]) and low-degree Hochschild cohomology ([`hochschild`]).

pub mod cli;
pub mod field;
pub mod hochschild;
pub mod invariants;
pub mod linalg;
pub mod presentation;
pub mod rewrite;
