//! Finite logical matrices and the semantics they induce.
//!
//! A [`Matrix`] is a finite carrier of truth values, a designated subset and
//! one tabulated operation per connective of its [`Signature`]. Valuations,
//! consequence and equivalence live in [`eval`]; term functions and the
//! simplicity test live in [`clone`].

pub mod clone;
pub mod eval;
mod json;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::syntax::{Signature, SignatureError};

pub use json::MatrixFile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("a matrix needs at least one truth value")]
    NoValues,
    #[error("truth value `{0}` listed twice")]
    DuplicateValue(String),
    #[error("unknown truth value `{0}`")]
    UnknownValue(String),
    #[error("the designated set must be a non-empty proper subset of the carrier")]
    DegenerateDesignated,
    #[error("no table given for connective `{0}`")]
    MissingTable(String),
    #[error("table for `{name}` has {found} entries, expected {expected}")]
    TableShape {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error("table for `{name}` mentions value index {index} outside the carrier")]
    TableValue { name: String, index: u8 },
    #[error("connective `{0}` already interpreted")]
    DuplicateConnective(String),
    #[error("carrier subset is not closed: {connective}({args}) = {value}")]
    NotClosed {
        connective: String,
        args: String,
        value: String,
    },
    #[error(transparent)]
    Signature(#[from] SignatureError),
    #[error("malformed matrix file: {0}")]
    Format(String),
}

/// A truth value, as an index into a matrix's carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(pub u8);

impl TruthValue {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A total operation `carrier^arity -> carrier` stored in row-major order:
/// the first argument is the most significant digit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    arity: usize,
    entries: Vec<u8>,
}

impl Table {
    pub fn new(arity: usize, entries: Vec<u8>) -> Self {
        Table { arity, entries }
    }

    /// Tabulates `f` over all argument tuples of a carrier of size `size`.
    pub fn from_fn(arity: usize, size: usize, mut f: impl FnMut(&[u8]) -> u8) -> Self {
        let mut entries = Vec::with_capacity(size.pow(arity as u32));
        let mut args = vec![0u8; arity];
        for_each_tuple(size, &mut args, &mut |a| entries.push(f(a)));
        Table { arity, entries }
    }

    pub fn constant(value: u8) -> Self {
        Table {
            arity: 0,
            entries: vec![value],
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    /// Value at `args`; `size` is the carrier size.
    #[inline]
    pub fn get(&self, size: usize, args: &[u8]) -> u8 {
        debug_assert_eq!(args.len(), self.arity);
        self.entries[tuple_index(size, args)]
    }
}

#[inline]
pub(crate) fn tuple_index(size: usize, args: &[u8]) -> usize {
    args.iter().fold(0, |acc, &a| acc * size + a as usize)
}

/// Calls `f` on every tuple over `0..size` of length `buf.len()`, in
/// lexicographic order.
pub(crate) fn for_each_tuple(size: usize, buf: &mut [u8], f: &mut impl FnMut(&[u8])) {
    tuples_until(size, buf, &mut |t| {
        f(t);
        false
    });
}

/// Like [`for_each_tuple`], stopping at the first tuple for which `f`
/// returns true. Returns whether it stopped early.
pub(crate) fn tuples_until(size: usize, buf: &mut [u8], f: &mut impl FnMut(&[u8]) -> bool) -> bool {
    buf.iter_mut().for_each(|x| *x = 0);
    if size == 0 {
        return false;
    }
    loop {
        if f(buf) {
            return true;
        }
        let mut i = buf.len();
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            buf[i] += 1;
            if (buf[i] as usize) < size {
                break;
            }
            buf[i] = 0;
        }
    }
}

/// A logical matrix `(values, designated, interpretation)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    values: Vec<String>,
    designated: Vec<bool>,
    sig: Signature,
    tables: BTreeMap<String, Table>,
}

impl Matrix {
    pub fn new<V, D, T>(values: V, designated: D, tables: T) -> Result<Self, MatrixError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        D: IntoIterator,
        D::Item: AsRef<str>,
        T: IntoIterator<Item = (String, Table)>,
    {
        let values: Vec<String> = values.into_iter().map(Into::into).collect();
        if values.is_empty() {
            return Err(MatrixError::NoValues);
        }
        let mut seen = BTreeSet::new();
        for v in &values {
            if !seen.insert(v.as_str()) {
                return Err(MatrixError::DuplicateValue(v.clone()));
            }
        }
        let mut des = vec![false; values.len()];
        for d in designated {
            let d = d.as_ref();
            let i = values
                .iter()
                .position(|v| v == d)
                .ok_or_else(|| MatrixError::UnknownValue(d.to_string()))?;
            des[i] = true;
        }
        let tables: Vec<(String, Table)> = tables.into_iter().collect();
        let sig = Signature::new(tables.iter().map(|(n, t)| (n.clone(), t.arity)))?;
        let m = Matrix {
            values,
            designated: des,
            sig,
            tables: tables.into_iter().collect(),
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<(), MatrixError> {
        let n_des = self.designated.iter().filter(|d| **d).count();
        if n_des == 0 || n_des == self.values.len() {
            return Err(MatrixError::DegenerateDesignated);
        }
        let k = self.values.len();
        for (name, t) in &self.tables {
            let expected = k.pow(t.arity as u32);
            if t.entries.len() != expected {
                return Err(MatrixError::TableShape {
                    name: name.clone(),
                    expected,
                    found: t.entries.len(),
                });
            }
            if let Some(&bad) = t.entries.iter().find(|&&e| e as usize >= k) {
                return Err(MatrixError::TableValue {
                    name: name.clone(),
                    index: bad,
                });
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> impl Iterator<Item = TruthValue> + '_ {
        (0..self.values.len() as u8).map(TruthValue)
    }

    pub fn value_names(&self) -> &[String] {
        &self.values
    }

    pub fn value(&self, name: &str) -> Option<TruthValue> {
        self.values
            .iter()
            .position(|v| v == name)
            .map(|i| TruthValue(i as u8))
    }

    pub fn name_of(&self, v: TruthValue) -> &str {
        &self.values[v.index()]
    }

    pub fn is_designated(&self, v: TruthValue) -> bool {
        self.designated[v.index()]
    }

    pub fn designated(&self) -> impl Iterator<Item = TruthValue> + '_ {
        self.values().filter(|v| self.is_designated(*v))
    }

    pub(crate) fn designated_mask(&self) -> &[bool] {
        &self.designated
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn table(&self, conn: &str) -> Option<&Table> {
        self.tables.get(conn)
    }

    pub fn tables(&self) -> impl Iterator<Item = (&str, &Table)> {
        self.tables.iter().map(|(n, t)| (n.as_str(), t))
    }

    /// Applies the interpretation of `conn`. Panics if `conn` is unknown.
    pub fn apply(&self, conn: &str, args: &[TruthValue]) -> TruthValue {
        let raw: Vec<u8> = args.iter().map(|a| a.0).collect();
        TruthValue(self.tables[conn].get(self.size(), &raw))
    }

    /// Adds a connective without touching the existing ones.
    pub fn expand(&self, name: &str, table: Table) -> Result<Matrix, MatrixError> {
        if self.tables.contains_key(name) {
            return Err(MatrixError::DuplicateConnective(name.to_string()));
        }
        let mut tables = self.tables.clone();
        tables.insert(name.to_string(), table);
        Matrix::new(
            self.values.clone(),
            self.designated_names(),
            tables,
        )
    }

    pub fn designated_names(&self) -> Vec<String> {
        self.designated().map(|v| self.name_of(v).to_string()).collect()
    }

    /// Forgets every connective not in `keep`.
    pub fn reduct<'a, I: IntoIterator<Item = &'a str>>(&self, keep: I) -> Result<Matrix, MatrixError> {
        let keep: BTreeSet<&str> = keep.into_iter().collect();
        Matrix::new(
            self.values.clone(),
            self.designated_names(),
            self.tables
                .iter()
                .filter(|(n, _)| keep.contains(n.as_str()))
                .map(|(n, t)| (n.clone(), t.clone())),
        )
    }

    /// `self` is an expansion of `base`: same carrier and designated set,
    /// and every connective of `base` is interpreted identically.
    pub fn is_expansion_of(&self, base: &Matrix) -> bool {
        self.values == base.values
            && self.designated == base.designated
            && base
                .tables
                .iter()
                .all(|(n, t)| self.tables.get(n) == Some(t))
    }

    /// The submatrix on `sub` (value names), which must be closed under
    /// every operation.
    pub fn restrict<S: AsRef<str>>(&self, sub: &[S]) -> Result<Matrix, MatrixError> {
        let mut keep = Vec::new();
        for s in sub {
            let v = self
                .value(s.as_ref())
                .ok_or_else(|| MatrixError::UnknownValue(s.as_ref().to_string()))?;
            if !keep.contains(&v.0) {
                keep.push(v.0);
            }
        }
        keep.sort_unstable();
        let mut new_index = vec![u8::MAX; self.size()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v as usize] = i as u8;
        }
        let mut tables = Vec::new();
        for (name, t) in &self.tables {
            let mut entries = Vec::new();
            let mut buf = vec![0u8; t.arity];
            let mut violation = None;
            for_each_tuple(keep.len(), &mut buf, &mut |local| {
                let orig: Vec<u8> = local.iter().map(|&i| keep[i as usize]).collect();
                let out = t.get(self.size(), &orig);
                let mapped = new_index[out as usize];
                if mapped == u8::MAX && violation.is_none() {
                    violation = Some((orig, out));
                }
                entries.push(mapped);
            });
            if let Some((args, out)) = violation {
                return Err(MatrixError::NotClosed {
                    connective: name.clone(),
                    args: args
                        .iter()
                        .map(|&a| self.values[a as usize].as_str())
                        .collect::<Vec<_>>()
                        .join(","),
                    value: self.values[out as usize].clone(),
                });
            }
            tables.push((name.clone(), Table::new(t.arity, entries)));
        }
        let values: Vec<String> = keep.iter().map(|&v| self.values[v as usize].clone()).collect();
        let designated: Vec<String> = keep
            .iter()
            .filter(|&&v| self.designated[v as usize])
            .map(|&v| self.values[v as usize].clone())
            .collect();
        Matrix::new(values, designated, tables)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "values: {}  designated: {}",
            self.values.join(" "),
            self.designated_names().join(" ")
        )?;
        let k = self.size();
        for (name, t) in &self.tables {
            match t.arity {
                0 => writeln!(f, "{name} = {}", self.values[t.entries[0] as usize])?,
                1 => {
                    let row: Vec<String> = (0..k)
                        .map(|a| format!("{}->{}", self.values[a], self.values[t.entries[a] as usize]))
                        .collect();
                    writeln!(f, "{name}: {}", row.join(" "))?
                }
                2 => {
                    writeln!(f, "{name}:")?;
                    write!(f, "     ")?;
                    for b in &self.values {
                        write!(f, " {b:>3}")?;
                    }
                    writeln!(f)?;
                    for a in 0..k {
                        write!(f, "  {:>3}", self.values[a])?;
                        for b in 0..k {
                            write!(f, " {:>3}", self.values[t.entries[a * k + b] as usize])?;
                        }
                        writeln!(f)?;
                    }
                }
                n => writeln!(f, "{name}: arity {n} table with {} entries", t.entries.len())?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_valued() -> Matrix {
        Matrix::new(
            ["t", "f"],
            ["t"],
            [
                ("not".to_string(), Table::new(1, vec![1, 0])),
                ("and".to_string(), Table::new(2, vec![0, 1, 1, 1])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_checks() {
        let m = two_valued();
        assert_eq!(m.size(), 2);
        assert!(m.is_designated(TruthValue(0)));
        assert_eq!(
            Matrix::new(["t", "f"], ["t", "f"], [("not".to_string(), Table::new(1, vec![1, 0]))]),
            Err(MatrixError::DegenerateDesignated)
        );
        assert_eq!(
            Matrix::new(["t", "f"], Vec::<&str>::new(), [("not".to_string(), Table::new(1, vec![1, 0]))]),
            Err(MatrixError::DegenerateDesignated)
        );
        assert!(matches!(
            Matrix::new(["t", "f"], ["t"], [("not".to_string(), Table::new(1, vec![1]))]),
            Err(MatrixError::TableShape { .. })
        ));
        assert!(matches!(
            Matrix::new(["t", "t"], ["t"], [("not".to_string(), Table::new(1, vec![1, 0]))]),
            Err(MatrixError::DuplicateValue(_))
        ));
        assert!(matches!(
            Matrix::new(["t", "f"], ["t"], [("not".to_string(), Table::new(1, vec![1, 2]))]),
            Err(MatrixError::TableValue { .. })
        ));
    }

    #[test]
    fn expansion_relation() {
        let m = two_valued();
        let e = m.expand("bot", Table::constant(1)).unwrap();
        assert!(e.is_expansion_of(&m));
        assert!(!m.is_expansion_of(&e));
        assert!(matches!(
            e.expand("bot", Table::constant(0)),
            Err(MatrixError::DuplicateConnective(_))
        ));
        let r = e.reduct(["not", "and"]).unwrap();
        assert_eq!(r, m);
    }

    #[test]
    fn tuple_order_is_row_major() {
        let mut seen = Vec::new();
        let mut buf = [0u8; 2];
        for_each_tuple(3, &mut buf, &mut |t| seen.push(tuple_index(3, t)));
        assert_eq!(seen, (0..9).collect::<Vec<_>>());
    }
}
