//! Finite matrix semantics for Belnap-Dunn logic and its expansions.
//!
//! - [`syntax`]: signatures, formulas, substitution, parser and printer.
//! - [`matrix`]: logical matrices, valuations, consequence, equivalence,
//!   term functions and simplicity.
//! - [`bd`]: the four-valued Belnap-Dunn matrix, its named connectives,
//!   presets and the strongly regular family.
//! - [`definability`]: synonymity, connective definability and
//!   interdefinability of logics.
//! - [`proof`]: a sequent calculus for BD with implication and falsity,
//!   its classical extension, a checker and a cut-free prover.
//! - [`laws`]: equivalence laws and the law filter over the strongly
//!   regular family.
//! - [`cli`]: the `fdekit` command line.

pub mod syntax;
pub mod matrix;
pub mod bd;
pub mod definability;
pub mod proof;
pub mod laws;
pub mod cli;
