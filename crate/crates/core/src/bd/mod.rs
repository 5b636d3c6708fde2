//! The Belnap-Dunn matrix, its standard connectives and expansions.

pub mod presets;
pub mod regular;

use std::fmt;

use thiserror::Error;

use crate::matrix::{Matrix, MatrixError, Table};
use crate::syntax::names;

pub use presets::{preset, PRESET_NAMES};
pub use regular::{
    count_strongly_regular, is_strongly_regular, sr_decode, sr_encode, RegularError, SrIndex,
    SR_BITS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BdError {
    #[error("unknown connective name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// The four Belnap-Dunn truth values, in carrier order `t, f, b, n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BdValue {
    T = 0,
    F = 1,
    B = 2,
    N = 3,
}

impl BdValue {
    pub const ALL: [BdValue; 4] = [BdValue::T, BdValue::F, BdValue::B, BdValue::N];

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(i: u8) -> BdValue {
        Self::ALL[i as usize]
    }

    pub fn name(self) -> &'static str {
        ["t", "f", "b", "n"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<BdValue> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }

    pub fn is_designated(self) -> bool {
        matches!(self, BdValue::T | BdValue::B)
    }

    pub fn is_classical(self) -> bool {
        matches!(self, BdValue::T | BdValue::F)
    }

    /// The truth order: `f` least, `t` greatest, `b` and `n` incomparable.
    pub fn leq(self, other: BdValue) -> bool {
        self == other || self == BdValue::F || other == BdValue::T
    }

    pub fn meet(self, other: BdValue) -> BdValue {
        if self.leq(other) {
            self
        } else if other.leq(self) {
            other
        } else {
            BdValue::F
        }
    }

    pub fn join(self, other: BdValue) -> BdValue {
        if self.leq(other) {
            other
        } else if other.leq(self) {
            self
        } else {
            BdValue::T
        }
    }

    pub fn negate(self) -> BdValue {
        match self {
            BdValue::T => BdValue::F,
            BdValue::F => BdValue::T,
            v => v,
        }
    }
}

impl fmt::Display for BdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A connective together with its interpretation over `t, f, b, n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedConnective {
    pub name: String,
    pub table: Table,
}

impl NamedConnective {
    pub fn from_fn(name: &str, arity: usize, f: impl Fn(&[BdValue]) -> BdValue) -> Self {
        let table = Table::from_fn(arity, 4, |args| {
            let vals: Vec<BdValue> = args.iter().map(|&a| BdValue::from_index(a)).collect();
            f(&vals).index()
        });
        NamedConnective {
            name: name.to_string(),
            table,
        }
    }

    pub fn constant(name: &str, v: BdValue) -> Self {
        NamedConnective {
            name: name.to_string(),
            table: Table::constant(v.index()),
        }
    }

    pub fn arity(&self) -> usize {
        self.table.arity()
    }

    pub fn eval(&self, args: &[BdValue]) -> BdValue {
        let raw: Vec<u8> = args.iter().map(|a| a.index()).collect();
        BdValue::from_index(self.table.get(4, &raw))
    }

    /// Same table under another name.
    pub fn renamed(&self, name: &str) -> Self {
        NamedConnective {
            name: name.to_string(),
            table: self.table.clone(),
        }
    }
}

fn indicator(name: &str, pred: impl Fn(BdValue) -> bool) -> NamedConnective {
    NamedConnective::from_fn(name, 1, |a| if pred(a[0]) { BdValue::T } else { BdValue::F })
}

/// The standard interpretation of a canonical connective name.
pub fn named(name: &str) -> Result<NamedConnective, BdError> {
    use BdValue::*;
    Ok(match name {
        names::NOT => NamedConnective::from_fn(name, 1, |a| a[0].negate()),
        names::AND => NamedConnective::from_fn(name, 2, |a| a[0].meet(a[1])),
        names::OR => NamedConnective::from_fn(name, 2, |a| a[0].join(a[1])),
        names::IMPL => NamedConnective::from_fn(name, 2, |a| {
            if a[0].is_designated() {
                a[1]
            } else {
                T
            }
        }),
        names::BOT => NamedConnective::constant(name, F),
        names::DELTA => indicator(name, |a| matches!(a, T | B)),
        names::CIRC => indicator(name, |a| matches!(a, T | F)),
        names::CONS => indicator(name, |a| a != B),
        names::DET => indicator(name, |a| a != N),
        names::CONFL => NamedConnective::from_fn(name, 1, |a| match a[0] {
            B => N,
            N => B,
            v => v,
        }),
        names::BOTH => NamedConnective::constant(name, B),
        names::NEITHER => NamedConnective::constant(name, N),
        other => return Err(BdError::UnknownName(other.to_string())),
    })
}

/// The unary connective sending members of `set` to `t` and the rest to `f`.
/// Named `heart_` followed by the member names in carrier order
/// (`heart_` alone for the empty set).
pub fn heart(set: &[BdValue]) -> NamedConnective {
    let mut suffix = String::new();
    for v in BdValue::ALL {
        if set.contains(&v) {
            suffix.push_str(v.name());
        }
    }
    indicator(&format!("heart_{suffix}"), |a| set.contains(&a))
}

/// All 16 members of the `heart` family, indexed by the bitmask of their set
/// (bit `i` for the `i`-th value in carrier order).
pub fn heart_family() -> Vec<NamedConnective> {
    (0u8..16)
        .map(|mask| {
            let set: Vec<BdValue> = BdValue::ALL
                .into_iter()
                .filter(|v| mask & (1 << v.index()) != 0)
                .collect();
            heart(&set)
        })
        .collect()
}

/// The Belnap-Dunn matrix over {not, and, or}: values `t, f, b, n`,
/// designated `t, b`.
pub fn bd_matrix() -> Matrix {
    let tables = [names::NOT, names::AND, names::OR]
        .into_iter()
        .map(|n| {
            let c = named(n).expect("canonical name");
            (c.name, c.table)
        });
    Matrix::new(
        BdValue::ALL.iter().map(|v| v.name()),
        ["t", "b"],
        tables,
    )
    .expect("well-formed")
}

/// Adds the given connectives to `m`.
pub fn expand(m: &Matrix, connectives: &[NamedConnective]) -> Result<Matrix, BdError> {
    let mut out = m.clone();
    for c in connectives {
        out = out.expand(&c.name, c.table.clone())?;
    }
    Ok(out)
}

/// Expands `m` with the canonical connectives named in `names`.
pub fn expand_named(m: &Matrix, names: &[&str]) -> Result<Matrix, BdError> {
    let cs = names.iter().map(|n| named(n)).collect::<Result<Vec<_>, _>>()?;
    expand(m, &cs)
}
