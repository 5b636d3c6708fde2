//! Signatures, formulas, substitutions and the concrete ASCII syntax.

mod enumerate;
mod formula;
mod parse;
mod print;

pub use enumerate::formulas_up_to_depth;
pub use formula::{
    names, Formula, Signature, SignatureError, Substitution, WellFormednessError,
};
pub use parse::{parse, parse_sequent, ParseError, ParseErrorKind, RESERVED};
pub use print::print;
