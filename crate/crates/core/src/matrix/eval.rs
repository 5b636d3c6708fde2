//! Valuations, induced consequence and induced equivalence.
//!
//! Assignments are enumerated with variables in sorted name order (the first
//! variable is the most significant digit) and values in carrier order, so
//! the first countermodel reported is the least one in that order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use super::{for_each_tuple, tuples_until, Matrix, TruthValue};
use crate::syntax::{Formula, WellFormednessError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("formula does not fit the matrix signature: {0}")]
    Signature(#[from] WellFormednessError),
}

/// Values for finitely many variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Assignment(BTreeMap<String, TruthValue>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, var: impl Into<String>, v: TruthValue) -> &mut Self {
        self.0.insert(var.into(), v);
        self
    }

    pub fn get(&self, var: &str) -> Option<TruthValue> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, TruthValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Renders as `p↦b, q↦f` using the value names of `m`.
    pub fn display<'a>(&'a self, m: &'a Matrix) -> impl fmt::Display + 'a {
        DisplayAssignment { a: self, m }
    }

    /// Assignment by value names, e.g. `[("p", "b")]`.
    pub fn from_names<'a, I>(m: &Matrix, pairs: I) -> Option<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut a = Assignment::new();
        for (var, val) in pairs {
            a.set(var, m.value(val)?);
        }
        Some(a)
    }
}

struct DisplayAssignment<'a> {
    a: &'a Assignment,
    m: &'a Matrix,
}

impl fmt::Display for DisplayAssignment<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (var, v)) in self.a.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{var}↦{}", self.m.name_of(v))?;
        }
        Ok(())
    }
}

enum Node {
    Var(usize),
    App { table: usize, arity: usize },
}

/// A formula flattened to postfix form against a fixed variable order.
pub(crate) struct Compiled {
    nodes: Vec<Node>,
}

impl Compiled {
    /// `vars` lists the variable slots; `tables` collects the referenced
    /// tables so evaluation does not look names up.
    pub(crate) fn new<'m>(
        m: &'m Matrix,
        f: &Formula,
        vars: &[String],
        tables: &mut Vec<&'m [u8]>,
    ) -> Result<Self, EvalError> {
        f.check(m.signature())?;
        let mut nodes = Vec::with_capacity(f.size());
        fn walk<'m>(
            m: &'m Matrix,
            f: &Formula,
            vars: &[String],
            tables: &mut Vec<&'m [u8]>,
            nodes: &mut Vec<Node>,
        ) -> Result<(), EvalError> {
            match f {
                Formula::Var(v) => {
                    let slot = vars
                        .iter()
                        .position(|x| x == v)
                        .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?;
                    nodes.push(Node::Var(slot));
                }
                Formula::App(c, args) => {
                    for a in args {
                        walk(m, a, vars, tables, nodes)?;
                    }
                    let entries = m.table(c).expect("checked against signature").entries();
                    let table = match tables.iter().position(|t| std::ptr::eq(*t, entries)) {
                        Some(i) => i,
                        None => {
                            tables.push(entries);
                            tables.len() - 1
                        }
                    };
                    nodes.push(Node::App {
                        table,
                        arity: args.len(),
                    });
                }
            }
            Ok(())
        }
        walk(m, f, vars, tables, &mut nodes)?;
        Ok(Compiled { nodes })
    }

    #[inline]
    pub(crate) fn eval(&self, size: usize, tables: &[&[u8]], values: &[u8], stack: &mut Vec<u8>) -> u8 {
        stack.clear();
        for n in &self.nodes {
            match *n {
                Node::Var(slot) => stack.push(values[slot]),
                Node::App { table, arity } => {
                    let base = stack.len() - arity;
                    let idx = stack[base..].iter().fold(0usize, |acc, &a| acc * size + a as usize);
                    stack.truncate(base);
                    stack.push(tables[table][idx]);
                }
            }
        }
        stack[0]
    }
}

/// The value of `f` under `a` in `m`.
pub fn evaluate(m: &Matrix, f: &Formula, a: &Assignment) -> Result<TruthValue, EvalError> {
    f.check(m.signature())?;
    fn go(m: &Matrix, f: &Formula, a: &Assignment) -> Result<TruthValue, EvalError> {
        match f {
            Formula::Var(v) => a.get(v).ok_or_else(|| EvalError::UnboundVariable(v.clone())),
            Formula::App(c, args) => {
                let vals = args
                    .iter()
                    .map(|x| go(m, x, a))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(m.apply(c, &vals))
            }
        }
    }
    go(m, f, a)
}

fn variables_of<'a, I: IntoIterator<Item = &'a Formula>>(fs: I) -> Vec<String> {
    let mut set = BTreeSet::new();
    for f in fs {
        f.collect_variables(&mut set);
    }
    set.into_iter().collect()
}

/// The first assignment (in enumeration order) under which every member of
/// `premises` is designated and no member of `conclusions` is.
pub fn countermodel(
    m: &Matrix,
    premises: &[Formula],
    conclusions: &[Formula],
) -> Result<Option<Assignment>, EvalError> {
    let vars = variables_of(premises.iter().chain(conclusions));
    let mut tables = Vec::new();
    let prem = premises
        .iter()
        .map(|f| Compiled::new(m, f, &vars, &mut tables))
        .collect::<Result<Vec<_>, _>>()?;
    let conc = conclusions
        .iter()
        .map(|f| Compiled::new(m, f, &vars, &mut tables))
        .collect::<Result<Vec<_>, _>>()?;
    let size = m.size();
    let des = m.designated_mask();
    let mut stack = Vec::new();
    let mut buf = vec![0u8; vars.len()];
    let mut found: Option<Vec<u8>> = None;
    tuples_until(size, &mut buf, &mut |vals| {
        let holds = prem
            .iter()
            .all(|c| des[c.eval(size, &tables, vals, &mut stack) as usize])
            && !conc
                .iter()
                .any(|c| des[c.eval(size, &tables, vals, &mut stack) as usize]);
        if holds {
            found = Some(vals.to_vec());
        }
        holds
    });
    Ok(found.map(|vals| {
        let mut a = Assignment::new();
        for (v, x) in vars.iter().zip(vals) {
            a.set(v.clone(), TruthValue(x));
        }
        a
    }))
}

/// `premises ⊨ conclusions` in `m`: every assignment designating all
/// premises designates some conclusion.
pub fn consequence(m: &Matrix, premises: &[Formula], conclusions: &[Formula]) -> Result<bool, EvalError> {
    Ok(countermodel(m, premises, conclusions)?.is_none())
}

/// The first assignment on which `a` and `b` take different values.
pub fn equivalence_countermodel(
    m: &Matrix,
    a: &Formula,
    b: &Formula,
) -> Result<Option<Assignment>, EvalError> {
    let vars = variables_of([a, b]);
    let mut tables = Vec::new();
    let ca = Compiled::new(m, a, &vars, &mut tables)?;
    let cb = Compiled::new(m, b, &vars, &mut tables)?;
    let size = m.size();
    let mut stack = Vec::new();
    let mut buf = vec![0u8; vars.len()];
    let mut found: Option<Vec<u8>> = None;
    tuples_until(size, &mut buf, &mut |vals| {
        let differ = ca.eval(size, &tables, vals, &mut stack) != cb.eval(size, &tables, vals, &mut stack);
        if differ {
            found = Some(vals.to_vec());
        }
        differ
    });
    Ok(found.map(|vals| {
        let mut asg = Assignment::new();
        for (v, x) in vars.iter().zip(vals) {
            asg.set(v.clone(), TruthValue(x));
        }
        asg
    }))
}

/// `a ≡ b` in `m`: equal values under every assignment.
pub fn equivalent(m: &Matrix, a: &Formula, b: &Formula) -> Result<bool, EvalError> {
    Ok(equivalence_countermodel(m, a, b)?.is_none())
}

/// The value table of `f` over the variables `vars`, in enumeration order.
pub fn truth_table(m: &Matrix, f: &Formula, vars: &[String]) -> Result<Vec<TruthValue>, EvalError> {
    let mut tables = Vec::new();
    let c = Compiled::new(m, f, vars, &mut tables)?;
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut buf = vec![0u8; vars.len()];
    for_each_tuple(m.size(), &mut buf, &mut |vals| {
        out.push(TruthValue(c.eval(m.size(), &tables, vals, &mut stack)))
    });
    Ok(out)
}
