use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Canonical connective names.
pub mod names {
    pub const NOT: &str = "not";
    pub const AND: &str = "and";
    pub const OR: &str = "or";
    pub const IMPL: &str = "impl";
    pub const BOT: &str = "bot";
    pub const DELTA: &str = "delta";
    pub const CIRC: &str = "circ";
    pub const CONS: &str = "cons";
    pub const DET: &str = "det";
    pub const CONFL: &str = "confl";
    pub const BOTH: &str = "B";
    pub const NEITHER: &str = "N";
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("a signature needs at least one connective")]
    Empty,
    #[error("connective `{name}` declared twice")]
    Duplicate { name: String },
    #[error("connective name `{0}` is not an identifier")]
    BadName(String),
}

/// A finite set of named connectives with their arities.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Signature {
    arities: BTreeMap<String, usize>,
}

impl Signature {
    pub fn new<I, S>(connectives: I) -> Result<Self, SignatureError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut arities = BTreeMap::new();
        for (name, arity) in connectives {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(SignatureError::BadName(name));
            }
            if arities.insert(name.clone(), arity).is_some() {
                return Err(SignatureError::Duplicate { name });
            }
        }
        if arities.is_empty() {
            return Err(SignatureError::Empty);
        }
        Ok(Signature { arities })
    }

    /// The alphabet {not, and, or}.
    pub fn bd() -> Self {
        Self::new([(names::NOT, 1), (names::AND, 2), (names::OR, 2)]).unwrap()
    }

    /// The alphabet {not, and, or, impl, bot}.
    pub fn bd_impl_bot() -> Self {
        Self::bd()
            .with(names::IMPL, 2)
            .unwrap()
            .with(names::BOT, 0)
            .unwrap()
    }

    pub fn with(&self, name: &str, arity: usize) -> Result<Self, SignatureError> {
        if !is_identifier(name) {
            return Err(SignatureError::BadName(name.to_string()));
        }
        if self.arities.contains_key(name) {
            return Err(SignatureError::Duplicate {
                name: name.to_string(),
            });
        }
        let mut arities = self.arities.clone();
        arities.insert(name.to_string(), arity);
        Ok(Signature { arities })
    }

    pub fn arity(&self, name: &str) -> Option<usize> {
        self.arities.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.arities.contains_key(name)
    }

    pub fn len(&self) -> usize {
        self.arities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arities.is_empty()
    }

    /// Connectives in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> {
        self.arities.iter().map(|(n, a)| (n.as_str(), *a))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.arities.keys().map(String::as_str)
    }

    pub fn is_subset_of(&self, other: &Signature) -> bool {
        self.iter().all(|(n, a)| other.arity(n) == Some(a))
    }

    /// The sub-signature keeping only `keep`. Unknown names are ignored.
    pub fn restrict<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Signature {
        let keep: BTreeSet<&str> = keep.into_iter().collect();
        Signature {
            arities: self
                .arities
                .iter()
                .filter(|(n, _)| keep.contains(n.as_str()))
                .map(|(n, a)| (n.clone(), *a))
                .collect(),
        }
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// A propositional formula: a variable or a connective applied to arguments.
///
/// The derived ordering (variables before applications, then by name and
/// arguments) is the canonical order used for sets of formulas in sequents.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Var(String),
    App(String, Vec<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn app(conn: impl Into<String>, args: Vec<Formula>) -> Self {
        Formula::App(conn.into(), args)
    }

    pub fn constant(conn: impl Into<String>) -> Self {
        Formula::App(conn.into(), Vec::new())
    }

    pub fn unary(conn: impl Into<String>, arg: Formula) -> Self {
        Formula::App(conn.into(), vec![arg])
    }

    pub fn binary(conn: impl Into<String>, lhs: Formula, rhs: Formula) -> Self {
        Formula::App(conn.into(), vec![lhs, rhs])
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Self {
        Self::unary(names::NOT, a)
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Self::binary(names::AND, a, b)
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Self::binary(names::OR, a, b)
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Self::binary(names::IMPL, a, b)
    }

    pub fn bot() -> Self {
        Self::constant(names::BOT)
    }

    /// `~bot`, the reading of the truth constant.
    pub fn top() -> Self {
        Self::not(Self::bot())
    }

    pub fn is_var(&self) -> bool {
        matches!(self, Formula::Var(_))
    }

    /// The connective at the root, if any.
    pub fn head(&self) -> Option<&str> {
        match self {
            Formula::Var(_) => None,
            Formula::App(c, _) => Some(c),
        }
    }

    pub fn args(&self) -> &[Formula] {
        match self {
            Formula::Var(_) => &[],
            Formula::App(_, args) => args,
        }
    }

    /// `Some(a)` when the formula is `app(conn, [a])`.
    pub fn as_unary(&self, conn: &str) -> Option<&Formula> {
        match self {
            Formula::App(c, args) if c == conn && args.len() == 1 => Some(&args[0]),
            _ => None,
        }
    }

    /// `Some((a, b))` when the formula is `app(conn, [a, b])`.
    pub fn as_binary(&self, conn: &str) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::App(c, args) if c == conn && args.len() == 2 => Some((&args[0], &args[1])),
            _ => None,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::App(_, args) => 1 + args.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Nesting depth of connectives; variables and constants have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::App(_, args) if args.is_empty() => 0,
            Formula::App(_, args) => 1 + args.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_variables(&mut out);
        out
    }

    pub(crate) fn collect_variables(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                if !out.contains(v) {
                    out.insert(v.clone());
                }
            }
            Formula::App(_, args) => args.iter().for_each(|a| a.collect_variables(out)),
        }
    }

    /// All subformulas, the formula itself included.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.insert(self.clone()) {
            for a in self.args() {
                a.collect_subformulas(out);
            }
        }
    }

    /// Connective occurrences, in prefix order.
    pub fn connectives(&self) -> Vec<&str> {
        let mut out = Vec::new();
        fn walk<'a>(f: &'a Formula, out: &mut Vec<&'a str>) {
            if let Formula::App(c, args) = f {
                out.push(c);
                args.iter().for_each(|a| walk(a, out));
            }
        }
        walk(self, &mut out);
        out
    }

    pub fn substitute(&self, s: &Substitution) -> Formula {
        match self {
            Formula::Var(v) => s.get(v).cloned().unwrap_or_else(|| self.clone()),
            Formula::App(c, args) => {
                Formula::App(c.clone(), args.iter().map(|a| a.substitute(s)).collect())
            }
        }
    }

    /// Checks every application against `sig`.
    pub fn check(&self, sig: &Signature) -> Result<(), WellFormednessError> {
        match self {
            Formula::Var(_) => Ok(()),
            Formula::App(c, args) => {
                let expected = sig
                    .arity(c)
                    .ok_or_else(|| WellFormednessError::UnknownConnective(c.clone()))?;
                if expected != args.len() {
                    return Err(WellFormednessError::Arity {
                        connective: c.clone(),
                        expected,
                        found: args.len(),
                    });
                }
                args.iter().try_for_each(|a| a.check(sig))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WellFormednessError {
    #[error("unknown connective `{0}`")]
    UnknownConnective(String),
    #[error("connective `{connective}` takes {expected} argument(s), found {found}")]
    Arity {
        connective: String,
        expected: usize,
        found: usize,
    },
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::print(self))
    }
}

/// A finite map from variables to formulas, identity elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Substitution {
    map: BTreeMap<String, Formula>,
}

impl Substitution {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(var: impl Into<String>, f: Formula) -> Self {
        let mut s = Self::default();
        s.insert(var, f);
        s
    }

    pub fn insert(&mut self, var: impl Into<String>, f: Formula) {
        self.map.insert(var.into(), f);
    }

    pub fn get(&self, var: &str) -> Option<&Formula> {
        self.map.get(var)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Formula)> {
        self.map.iter().map(|(v, f)| (v.as_str(), f))
    }

    /// `self` followed by `then`: `x ↦ then(self(x))`, and `then(x)` where
    /// `self` is the identity.
    pub fn then(&self, then: &Substitution) -> Substitution {
        let mut map: BTreeMap<String, Formula> = self
            .map
            .iter()
            .map(|(v, f)| (v.clone(), f.substitute(then)))
            .collect();
        for (v, f) in &then.map {
            map.entry(v.clone()).or_insert_with(|| f.clone());
        }
        Substitution { map }
    }
}

impl<S: Into<String>> FromIterator<(S, Formula)> for Substitution {
    fn from_iter<T: IntoIterator<Item = (S, Formula)>>(iter: T) -> Self {
        Substitution {
            map: iter.into_iter().map(|(v, f)| (v.into(), f)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Formula {
        Formula::var("p")
    }
    fn q() -> Formula {
        Formula::var("q")
    }
    fn r() -> Formula {
        Formula::var("r")
    }

    #[test]
    fn substitution_examples() {
        let f = Formula::or(p(), q());
        let s = Substitution::single("p", Formula::bot());
        assert_eq!(f.substitute(&s), Formula::or(Formula::bot(), q()));

        let g = Formula::unary("delta", p());
        assert_eq!(g.substitute(&Substitution::identity()), g);

        let h = Formula::and(p(), p());
        let s = Substitution::single("p", Formula::or(q(), r()));
        let qr = Formula::or(q(), r());
        assert_eq!(h.substitute(&s), Formula::and(qr.clone(), qr));
    }

    #[test]
    fn variables_and_subformulas() {
        let f = Formula::implies(p(), Formula::and(q(), p()));
        let vars: Vec<_> = f.variables().into_iter().collect();
        assert_eq!(vars, ["p", "q"]);

        let subs = Formula::not(p()).subformulas();
        assert_eq!(subs.len(), 2);
        assert!(subs.contains(&Formula::not(p())) && subs.contains(&p()));

        assert!(Formula::bot().variables().is_empty());
    }

    #[test]
    fn signature_rejects_duplicates_and_empty() {
        assert_eq!(
            Signature::new(Vec::<(&str, usize)>::new()),
            Err(SignatureError::Empty)
        );
        assert!(matches!(
            Signature::new([("not", 1), ("not", 1)]),
            Err(SignatureError::Duplicate { .. })
        ));
        assert!(Signature::bd().with("not", 1).is_err());
    }

    #[test]
    fn well_formedness() {
        let sig = Signature::bd();
        assert!(Formula::and(p(), Formula::not(q())).check(&sig).is_ok());
        assert!(matches!(
            Formula::bot().check(&sig),
            Err(WellFormednessError::UnknownConnective(_))
        ));
        assert!(matches!(
            Formula::app("not", vec![p(), q()]).check(&sig),
            Err(WellFormednessError::Arity { expected: 1, found: 2, .. })
        ));
    }

    #[test]
    fn depth_and_size() {
        let f = Formula::not(Formula::and(p(), Formula::bot()));
        assert_eq!(f.depth(), 2);
        assert_eq!(f.size(), 4);
        assert_eq!(Formula::bot().depth(), 0);
    }
}
