//! Sequent calculus for BD with implication and falsity, and its classical
//! extension by the two plain negation rules.
//!
//! Sequents are pairs of finite sets, so contraction and weakening are
//! built into the contexts. A rule instance may keep its principal formula
//! in the premise context or drop it; both readings are accepted by the
//! checker, and the prover always keeps it, which makes every backward step
//! grow the sequent inside the finite closure of the goal.

mod check;
mod json;
mod rules;
mod search;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::syntax::{parse_sequent, print, Formula, ParseError, Signature};

pub use check::{check, check_with, CheckFailure};
pub use json::{DerivationFile, JsonError};
pub use rules::{RuleId, RuleSet, Side};
pub use search::{derived_rule_check, prove, DerivedRule, Prover};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum System {
    /// Table rules for BD with implication and falsity.
    Bd,
    /// The same rules plus plain negation left and right.
    Cl,
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::Bd => "BD",
            System::Cl => "CL",
        }
    }

    pub fn from_name(s: &str) -> Option<System> {
        match s {
            "BD" | "bd" => Some(System::Bd),
            "CL" | "cl" => Some(System::Cl),
            _ => None,
        }
    }
}

impl fmt::Display for System {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("rule `{0}` has no schematic instance to derive")]
    NotSchematic(String),
    #[error("unknown proof system `{0}`")]
    UnknownSystem(String),
}

/// `left ⊢ right` over finite sets of formulas, kept in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Sequent {
    pub left: BTreeSet<Formula>,
    pub right: BTreeSet<Formula>,
}

impl Sequent {
    pub fn new<L, R>(left: L, right: R) -> Self
    where
        L: IntoIterator<Item = Formula>,
        R: IntoIterator<Item = Formula>,
    {
        Sequent {
            left: left.into_iter().collect(),
            right: right.into_iter().collect(),
        }
    }

    /// Parses `A, B |- C` over {not, and, or, impl, bot}.
    pub fn parse(text: &str) -> Result<Self, ProofError> {
        let (l, r) = parse_sequent(text, &Signature::bd_impl_bot())?;
        Ok(Sequent::new(l, r))
    }

    /// `self` is contained in `other` side by side.
    pub fn is_subsequent_of(&self, other: &Sequent) -> bool {
        self.left.is_subset(&other.left) && self.right.is_subset(&other.right)
    }

    pub fn left_vec(&self) -> Vec<Formula> {
        self.left.iter().cloned().collect()
    }

    pub fn right_vec(&self) -> Vec<Formula> {
        self.right.iter().cloned().collect()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &BTreeSet<Formula>| s.iter().map(print).collect::<Vec<_>>().join(", ");
        let (l, r) = (side(&self.left), side(&self.right));
        match (l.is_empty(), r.is_empty()) {
            (true, true) => f.write_str("|-"),
            (true, false) => write!(f, "|- {r}"),
            (false, true) => write!(f, "{l} |-"),
            (false, false) => write!(f, "{l} |- {r}"),
        }
    }
}

/// A proof tree. `principal` is the formula the rule acts on: the axiom
/// formula for `Id`, `botL` and `~botR`, the cut formula for `Cut`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub conclusion: Sequent,
    pub rule: RuleId,
    pub principal: Option<Formula>,
    pub premises: Vec<Derivation>,
}

impl Derivation {
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    pub fn height(&self) -> usize {
        1 + self.premises.iter().map(Derivation::height).max().unwrap_or(0)
    }

    /// Rules used, in prefix order.
    pub fn rules(&self) -> Vec<RuleId> {
        let mut out = vec![self.rule];
        for p in &self.premises {
            out.extend(p.rules());
        }
        out
    }

    /// An indented rendering, conclusion first.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        use std::fmt::Write;
        let _ = writeln!(out, "{}{}   [{}]", "  ".repeat(depth), self.conclusion, self.rule.name());
        for p in &self.premises {
            p.render_into(depth + 1, out);
        }
    }
}
