//! Synonymity, definability of connectives and interdefinability of logics.
//!
//! In a simple matrix two formulas are synonymous exactly when they are
//! equivalent, and a connective is definable from others exactly when its
//! table is a term function of those others. Both reductions are used here,
//! so every query first checks that the matrix is simple.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bd::{bd_matrix, BdValue, NamedConnective};
use crate::matrix::clone::{is_simple, projection_var, CloneBuilder, CloneConfig, CloneError};
use crate::matrix::eval::{consequence, equivalent, EvalError};
use crate::matrix::{Matrix, MatrixError};
use crate::syntax::{names, Formula, Substitution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefinabilityError {
    #[error("the matrix is not simple, so synonymity is not induced equivalence")]
    NonSimple,
    #[error("the matrix is not the Belnap-Dunn matrix or an expansion of it")]
    NotBdExpansion,
    #[error("`{0}` is not a connective of the matrix")]
    UnknownConnective(String),
    #[error("the target `{0}` may not be among the connectives used to define it")]
    TargetAllowed(String),
    #[error("the common matrix is not an expansion of {0}")]
    NotCommonExpansion(String),
    #[error(transparent)]
    Clone(#[from] CloneError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Why a connective failed to be definable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CounterReason {
    /// The term functions of the allowed connectives were generated to
    /// their fixpoint (`size` functions) without meeting the target.
    CloneExhausted { size: usize },
    /// The table maps arguments from `preserved` to a value outside it.
    Preservation {
        preserved: Vec<BdValue>,
        args: Vec<BdValue>,
        value: BdValue,
    },
}

impl std::fmt::Display for CounterReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CounterReason::CloneExhausted { size } => {
                write!(f, "not among the {size} term functions of the allowed connectives")
            }
            CounterReason::Preservation { preserved, args, value } => {
                let names = |vs: &[BdValue]| vs.iter().map(|v| v.name()).collect::<Vec<_>>().join(", ");
                write!(f, "maps ({}) to {value} outside {{{}}}", names(args), names(preserved))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinabilityVerdict {
    pub definable: bool,
    /// A formula over `p1..pn` (or `p` for a nullary target) equivalent to
    /// the target applied to `p1..pn`.
    pub witness: Option<Formula>,
    pub reason: Option<CounterReason>,
}

impl DefinabilityVerdict {
    fn yes(witness: Formula) -> Self {
        DefinabilityVerdict {
            definable: true,
            witness: Some(witness),
            reason: None,
        }
    }

    fn no(reason: CounterReason) -> Self {
        DefinabilityVerdict {
            definable: false,
            witness: None,
            reason: Some(reason),
        }
    }
}

fn require_simple(m: &Matrix) -> Result<(), DefinabilityError> {
    if is_simple(m).0 {
        Ok(())
    } else {
        Err(DefinabilityError::NonSimple)
    }
}

/// Synonymity checks against one matrix, verified simple once.
pub struct Synonymity<'m> {
    m: &'m Matrix,
}

impl<'m> Synonymity<'m> {
    pub fn new(m: &'m Matrix) -> Result<Self, DefinabilityError> {
        require_simple(m)?;
        Ok(Synonymity { m })
    }

    pub fn check(&self, a: &Formula, b: &Formula) -> Result<bool, DefinabilityError> {
        Ok(equivalent(self.m, a, b)?)
    }
}

/// Whether `a` and `b` are intersubstitutable in every context.
pub fn synonymous(m: &Matrix, a: &Formula, b: &Formula) -> Result<bool, DefinabilityError> {
    Synonymity::new(m)?.check(a, b)
}

/// Synonymity in BD or an expansion, via four consequence checks:
/// `a ⊨ b`, `b ⊨ a`, `~a ⊨ ~b` and `~b ⊨ ~a`.
pub fn synonymity_via_consequence(
    m: &Matrix,
    a: &Formula,
    b: &Formula,
) -> Result<bool, DefinabilityError> {
    if !m.is_expansion_of(&bd_matrix()) {
        return Err(DefinabilityError::NotBdExpansion);
    }
    let one = |x: &Formula, y: &Formula| consequence(m, std::slice::from_ref(x), std::slice::from_ref(y));
    let (na, nb) = (Formula::not(a.clone()), Formula::not(b.clone()));
    Ok(one(a, b)? && one(b, a)? && one(&na, &nb)? && one(&nb, &na)?)
}

/// `target(p1, ..., pn)`.
pub fn applied(target: &str, arity: usize) -> Formula {
    Formula::app(target, (1..=arity).map(|i| Formula::Var(projection_var(i))).collect())
}

/// Whether `target` is definable in `m` from the connectives in `allowed`.
pub fn definable<S: AsRef<str>>(
    m: &Matrix,
    target: &str,
    allowed: &[S],
    config: &CloneConfig,
) -> Result<DefinabilityVerdict, DefinabilityError> {
    let table = m
        .table(target)
        .ok_or_else(|| DefinabilityError::UnknownConnective(target.to_string()))?;
    let allowed: Vec<&str> = allowed.iter().map(AsRef::as_ref).collect();
    for a in &allowed {
        if *a == target {
            return Err(DefinabilityError::TargetAllowed(target.to_string()));
        }
        if !m.signature().contains(a) {
            return Err(DefinabilityError::UnknownConnective(a.to_string()));
        }
    }
    require_simple(m)?;
    let arity = table.arity();
    let builder = CloneBuilder::new(m, arity, &allowed, config)?;
    let (clone, found) = builder.search(table.entries())?;
    if let Some(i) = found {
        return Ok(DefinabilityVerdict::yes(clone.witness(i)));
    }
    if arity == 0 {
        // A closed formula may be missing while a constant unary term
        // function exists; its witness, read at a fixed variable `p`,
        // defines the constant.
        let constant = vec![table.entries()[0]; m.size()];
        let unary = CloneBuilder::new(m, 1, &allowed, config)?;
        let (uclone, ufound) = unary.search(&constant)?;
        if let Some(i) = ufound {
            let s = Substitution::single(projection_var(1), Formula::var("p"));
            return Ok(DefinabilityVerdict::yes(uclone.witness(i).substitute(&s)));
        }
        return Ok(DefinabilityVerdict::no(CounterReason::CloneExhausted { size: uclone.len() }));
    }
    Ok(DefinabilityVerdict::no(CounterReason::CloneExhausted { size: clone.len() }))
}

/// The first argument tuple (carrier order) on which `c` leaves one of
/// `{t, f, b}` or `{t, f, n}`, checked in that order.
pub fn preservation_violation(c: &NamedConnective) -> Option<CounterReason> {
    use BdValue::*;
    for preserved in [[T, F, B], [T, F, N]] {
        let n = c.arity();
        let total = 3usize.pow(n as u32);
        for p in 0..total {
            let mut x = p;
            let mut args = vec![T; n];
            for slot in args.iter_mut().rev() {
                *slot = preserved[x % 3];
                x /= 3;
            }
            let value = c.eval(&args);
            if !preserved.contains(&value) {
                return Some(CounterReason::Preservation {
                    preserved: preserved.to_vec(),
                    args,
                    value,
                });
            }
        }
    }
    None
}

/// The criterion deciding definability of `c` in BD with implication,
/// falsity and `c`: `c` maps `{t,f,b}^n` into `{t,f,b}` and `{t,f,n}^n` into
/// `{t,f,n}`.
pub fn bd_preservation_criterion(c: &NamedConnective) -> bool {
    preservation_violation(c).is_none()
}

/// A logic given by a matrix and the connectives regarded as its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicHandle {
    pub name: String,
    pub matrix: Matrix,
    pub connectives: BTreeSet<String>,
}

impl LogicHandle {
    pub fn new<S: AsRef<str>>(
        name: &str,
        matrix: Matrix,
        connectives: &[S],
    ) -> Result<Self, DefinabilityError> {
        let mut set = BTreeSet::new();
        for c in connectives {
            let c = c.as_ref();
            if !matrix.signature().contains(c) {
                return Err(DefinabilityError::UnknownConnective(c.to_string()));
            }
            set.insert(c.to_string());
        }
        Ok(LogicHandle {
            name: name.to_string(),
            matrix,
            connectives: set,
        })
    }

    /// A preset matrix with all of its connectives.
    pub fn preset(name: &str) -> Option<Self> {
        let m = crate::bd::preset(name)?;
        let conns: Vec<String> = m.signature().names().map(str::to_string).collect();
        LogicHandle::new(name, m, &conns).ok()
    }

    fn own_matrix(&self) -> Result<Matrix, DefinabilityError> {
        Ok(self.matrix.reduct(self.connectives.iter().map(String::as_str))?)
    }
}

/// Per-connective outcome of a logic-level definability query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogicDefinability {
    pub holds: bool,
    /// Verdicts in evaluation order; evaluation stops at the first failure.
    pub verdicts: Vec<(String, DefinabilityVerdict)>,
}

fn check_common(
    common: &Matrix,
    handles: &[&LogicHandle],
) -> Result<(), DefinabilityError> {
    for h in handles {
        if !common.is_expansion_of(&h.own_matrix()?) {
            return Err(DefinabilityError::NotCommonExpansion(h.name.clone()));
        }
    }
    require_simple(common)
}

fn connective_in(
    common: &Matrix,
    conn: &str,
    using: &BTreeSet<String>,
    config: &CloneConfig,
) -> Result<DefinabilityVerdict, DefinabilityError> {
    if using.contains(conn) {
        let arity = common.signature().arity(conn).expect("checked");
        return Ok(DefinabilityVerdict::yes(applied(conn, arity)));
    }
    let allowed: Vec<&str> = using.iter().map(String::as_str).collect();
    definable(common, conn, &allowed, config)
}

/// Ordered so that cheaper (lower-arity) checks run first.
fn tasks<'a>(a: &'a LogicHandle, common: &Matrix) -> Vec<&'a str> {
    let mut out: Vec<&str> = a.connectives.iter().map(String::as_str).collect();
    out.sort_by_key(|c| (common.signature().arity(c).unwrap_or(0), *c));
    out
}

/// Every connective of `a` is definable in `common` from those of `b`.
pub fn logic_definable_in(
    a: &LogicHandle,
    b: &LogicHandle,
    common: &Matrix,
    config: &CloneConfig,
) -> Result<LogicDefinability, DefinabilityError> {
    check_common(common, &[a, b])?;
    let mut verdicts = Vec::new();
    for conn in tasks(a, common) {
        let v = connective_in(common, conn, &b.connectives, config)?;
        let ok = v.definable;
        verdicts.push((conn.to_string(), v));
        if !ok {
            return Ok(LogicDefinability {
                holds: false,
                verdicts,
            });
        }
    }
    Ok(LogicDefinability {
        holds: true,
        verdicts,
    })
}

/// Outcome of an interdefinability query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interdefinability {
    pub holds: bool,
    /// `(direction, connective, verdict)` where direction `"a<-b"` means a
    /// connective of `a` defined from those of `b`.
    pub verdicts: Vec<(&'static str, String, DefinabilityVerdict)>,
}

/// Both logics are definable in each other within `common`. Checks from
/// both directions are interleaved by arity and the search stops at the
/// first connective that is not definable.
pub fn interdefinable(
    a: &LogicHandle,
    b: &LogicHandle,
    common: &Matrix,
    config: &CloneConfig,
) -> Result<Interdefinability, DefinabilityError> {
    check_common(common, &[a, b])?;
    let mut all: Vec<(&'static str, &str, &BTreeSet<String>)> = Vec::new();
    for c in tasks(a, common) {
        all.push(("a<-b", c, &b.connectives));
    }
    for c in tasks(b, common) {
        all.push(("b<-a", c, &a.connectives));
    }
    all.sort_by_key(|(_, c, _)| common.signature().arity(c).unwrap_or(0));
    let mut verdicts = Vec::new();
    for (dir, conn, using) in all {
        let v = connective_in(common, conn, using, config)?;
        let ok = v.definable;
        verdicts.push((dir, conn.to_string(), v));
        if !ok {
            return Ok(Interdefinability {
                holds: false,
                verdicts,
            });
        }
    }
    Ok(Interdefinability {
        holds: true,
        verdicts,
    })
}

/// The interdefinability queries for which a common expansion is
/// registered: `(a, b, common)` preset names.
pub const INTERDEF_PRESETS: &[(&str, &str, &str)] = &[
    ("bd-impl-bot", "bd-delta", "bd-impl-bot-delta"),
    ("bd-delta", "bd-cons-det", "bd-delta-cons-det"),
    ("bd-cons-det", "bd-circ", "bd-cons-det-circ"),
    ("bd-impl-bot", "bd-confl", "bd-impl-bot-confl"),
    ("bd-impl-bot", "bd-circ", "bd-impl-bot-circ"),
    ("bd-impl-bot", "bd-b-n", "bd-b-n-bot"),
];

/// The registered common expansion for a pair of presets, in either order.
pub fn common_preset(a: &str, b: &str) -> Option<&'static str> {
    INTERDEF_PRESETS
        .iter()
        .find(|(x, y, _)| (*x == a && *y == b) || (*x == b && *y == a))
        .map(|(_, _, c)| *c)
}

/// The canonical connectives of the strongly regular signature.
pub fn impl_bot_connectives() -> [&'static str; 5] {
    [names::NOT, names::AND, names::OR, names::IMPL, names::BOT]
}
