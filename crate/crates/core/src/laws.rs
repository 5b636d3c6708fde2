//! Laws of logical equivalence and the search for strongly regular
//! matrices satisfying them.
//!
//! A law is a pair of schemas over the metavariables `A`, `A1`, `A2`. It
//! holds in a matrix when the two sides are equivalent with the
//! metavariables read as distinct propositional variables; since
//! evaluation is compositional, that is the same as holding for every
//! substitution instance.
//!
//! [`filter_strongly_regular`] finds every member of the 2^38 family that
//! satisfies a set of laws. Each law, instantiated over all values of its
//! metavariables, becomes a batch of equations between table entries. A
//! DPLL-style search fixes entries forced by a single equation and
//! branches otherwise, yielding disjoint cubes: some bits fixed, the rest
//! free because no equation ever reads them.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::bd::regular::{entry_choices, free_cells, is_strongly_regular, sr_decode, SrIndex, SR_BITS};
use crate::bd::BdValue;
use crate::matrix::eval::{equivalence_countermodel, Assignment, EvalError};
use crate::matrix::Matrix;
use crate::syntax::{names, parse, print, Formula, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LawError {
    #[error("matrix lacks connective `{0}` used by law `{1}`")]
    MissingConnective(String, String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Law {
    /// Builds a law from text over {not, and, or, impl, bot}, with `top`
    /// standing for `~bot`.
    pub fn new(name: &str, lhs: &str, rhs: &str) -> Law {
        let sig = Signature::bd_impl_bot();
        Law {
            name: name.to_string(),
            lhs: parse(lhs, &sig).expect("law lhs parses"),
            rhs: parse(rhs, &sig).expect("law rhs parses"),
        }
    }

    /// Metavariables in sorted order.
    pub fn metavariables(&self) -> Vec<String> {
        let mut v = self.lhs.variables();
        v.extend(self.rhs.variables());
        v.into_iter().collect()
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} == {}", self.name, print(&self.lhs), print(&self.rhs))
    }
}

/// The thirteen distinguishing laws, left column first.
pub fn table_laws() -> Vec<Law> {
    [
        ("and-bot", "A & bot", "bot"),
        ("and-top", "A & top", "A"),
        ("and-idem", "A & A", "A"),
        ("and-comm", "A1 & A2", "A2 & A1"),
        ("not-and", "~(A1 & A2)", "~A1 | ~A2"),
        ("not-not", "~~A", "A"),
        ("and-impl-bot", "(A1 & (A1 -> bot)) -> A2", "top"),
        ("or-top", "A | top", "top"),
        ("or-bot", "A | bot", "A"),
        ("or-idem", "A | A", "A"),
        ("or-comm", "A1 | A2", "A2 | A1"),
        ("not-or", "~(A1 | A2)", "~A1 & ~A2"),
        ("or-impl-bot", "(A1 | (A1 -> bot)) -> A2", "A2"),
    ]
    .into_iter()
    .map(|(n, l, r)| Law::new(n, l, r))
    .collect()
}

/// Five classical laws from which the two implication laws follow.
pub fn classical_laws() -> Vec<Law> {
    [
        ("not-as-impl", "~A", "A -> bot"),
        ("contradiction", "A & ~A", "bot"),
        ("excluded-middle", "A | ~A", "top"),
        ("bot-impl", "bot -> A", "top"),
        ("top-impl", "top -> A", "A"),
    ]
    .into_iter()
    .map(|(n, l, r)| Law::new(n, l, r))
    .collect()
}

/// Looks a law up by name among both lists.
pub fn law_by_name(name: &str) -> Result<Law, LawError> {
    table_laws()
        .into_iter()
        .chain(classical_laws())
        .find(|l| l.name == name)
        .ok_or_else(|| LawError::UnknownLaw(name.to_string()))
}

/// `None` when the law holds in `m`, otherwise a countermodel.
pub fn countermodel(m: &Matrix, law: &Law) -> Result<Option<Assignment>, LawError> {
    for side in [&law.lhs, &law.rhs] {
        for c in side.connectives() {
            if !m.signature().contains(c) {
                return Err(LawError::MissingConnective(c.to_string(), law.name.clone()));
            }
        }
    }
    Ok(equivalence_countermodel(m, &law.lhs, &law.rhs)?)
}

pub fn holds(m: &Matrix, law: &Law) -> Result<bool, LawError> {
    Ok(countermodel(m, law)?.is_none())
}

/// A set of indices: bits in `mask` are fixed to their value in `bits`,
/// all others are free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cube {
    pub mask: u64,
    pub bits: u64,
}

impl Cube {
    pub fn count(&self) -> u64 {
        1u64 << (SR_BITS - self.mask.count_ones())
    }

    pub fn contains(&self, i: SrIndex) -> bool {
        i.get() & self.mask == self.bits
    }

    /// Members in increasing order.
    pub fn members(&self) -> impl Iterator<Item = SrIndex> + '_ {
        let free: Vec<u32> = (0..SR_BITS).filter(|b| self.mask >> b & 1 == 0).collect();
        (0..self.count()).map(move |k| {
            let mut i = self.bits;
            for (j, b) in free.iter().enumerate() {
                i |= (k >> j & 1) << b;
            }
            SrIndex::new(i).expect("below 2^38")
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FilterResult {
    /// No laws were given: the whole family.
    All,
    /// Disjoint cubes, sorted.
    Cubes(Vec<Cube>),
}

impl FilterResult {
    pub fn count(&self) -> u64 {
        match self {
            FilterResult::All => 1 << SR_BITS,
            FilterResult::Cubes(cs) => cs.iter().map(Cube::count).sum(),
        }
    }

    pub fn contains(&self, i: SrIndex) -> bool {
        match self {
            FilterResult::All => true,
            FilterResult::Cubes(cs) => cs.iter().any(|c| c.contains(i)),
        }
    }

    /// All members, sorted; `None` for [`FilterResult::All`] or when there
    /// are more than `limit`.
    pub fn indices(&self, limit: u64) -> Option<Vec<SrIndex>> {
        match self {
            FilterResult::All => None,
            FilterResult::Cubes(cs) => {
                if self.count() > limit {
                    return None;
                }
                let mut v: Vec<SrIndex> = cs.iter().flat_map(|c| c.members().collect::<Vec<_>>()).collect();
                v.sort();
                Some(v)
            }
        }
    }
}

/// Evaluation of a schema over BD values, with entries looked up in a
/// partial index.
#[derive(Debug, Clone)]
enum Term {
    Meta(usize),
    App(Conn, Vec<Term>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Conn {
    Not,
    And,
    Or,
    Impl,
    Bot,
}

impl Conn {
    fn name(self) -> &'static str {
        match self {
            Conn::Not => names::NOT,
            Conn::And => names::AND,
            Conn::Or => names::OR,
            Conn::Impl => names::IMPL,
            Conn::Bot => names::BOT,
        }
    }
}

/// Entry lookup: for each connective and argument tuple, either a fixed
/// value or the bit deciding between two.
struct Cells {
    /// Indexed by `conn * 16 + tuple`.
    entries: Vec<Entry>,
}

#[derive(Debug, Clone, Copy)]
enum Entry {
    Fixed(BdValue),
    Free { bit: u32, clear: BdValue, set: BdValue },
}

impl Cells {
    fn new() -> Self {
        let mut entries = Vec::with_capacity(5 * 16);
        for conn in [Conn::Not, Conn::And, Conn::Or, Conn::Impl, Conn::Bot] {
            for t in 0..16u8 {
                let args: Vec<BdValue> = match conn {
                    Conn::Bot => vec![],
                    Conn::Not => vec![BdValue::from_index(t & 3)],
                    _ => vec![BdValue::from_index(t >> 2), BdValue::from_index(t & 3)],
                };
                let choices = entry_choices(conn.name(), &args);
                entries.push(if choices.len() == 1 {
                    Entry::Fixed(choices[0])
                } else {
                    let bit = free_cells()
                        .into_iter()
                        .find(|c| c.connective == conn.name() && c.args == args)
                        .expect("free cell")
                        .bit;
                    Entry::Free {
                        bit,
                        clear: choices[0],
                        set: choices[1],
                    }
                });
            }
        }
        Cells { entries }
    }

    fn get(&self, conn: Conn, args: &[BdValue]) -> Entry {
        let t = match args {
            [] => 0,
            [a] => a.index(),
            [a, b] => a.index() << 2 | b.index(),
            _ => unreachable!(),
        };
        self.entries[conn as usize * 16 + t as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Partial {
    mask: u64,
    bits: u64,
}

impl Partial {
    fn with(self, bit: u32, v: bool) -> Partial {
        Partial {
            mask: self.mask | 1 << bit,
            bits: self.bits | (v as u64) << bit,
        }
    }
}

/// The value, or the first unknown bit evaluation ran into.
fn eval(t: &Term, env: &[BdValue], cells: &Cells, p: Partial) -> Result<BdValue, u32> {
    match t {
        Term::Meta(i) => Ok(env[*i]),
        Term::App(c, args) => {
            let mut vals = [BdValue::T; 2];
            for (k, a) in args.iter().enumerate() {
                vals[k] = eval(a, env, cells, p)?;
            }
            match cells.get(*c, &vals[..args.len()]) {
                Entry::Fixed(v) => Ok(v),
                Entry::Free { bit, clear, set } => {
                    if p.mask >> bit & 1 == 0 {
                        Err(bit)
                    } else if p.bits >> bit & 1 == 1 {
                        Ok(set)
                    } else {
                        Ok(clear)
                    }
                }
            }
        }
    }
}

fn compile(f: &Formula, metas: &[String]) -> Term {
    match f {
        Formula::Var(v) => Term::Meta(metas.iter().position(|m| m == v).expect("metavariable")),
        Formula::App(c, args) => {
            let conn = match c.as_str() {
                names::NOT => Conn::Not,
                names::AND => Conn::And,
                names::OR => Conn::Or,
                names::IMPL => Conn::Impl,
                names::BOT => Conn::Bot,
                other => panic!("`{other}` is outside the strongly regular signature"),
            };
            Term::App(conn, args.iter().map(|a| compile(a, metas)).collect())
        }
    }
}

/// One law at one tuple of metavariable values.
struct Equation {
    lhs: Term,
    rhs: Term,
    env: Vec<BdValue>,
}

enum Status {
    Satisfied,
    Violated,
    /// Needs this bit.
    Open(u32),
}

impl Equation {
    fn status(&self, cells: &Cells, p: Partial) -> Status {
        let l = eval(&self.lhs, &self.env, cells, p);
        let r = eval(&self.rhs, &self.env, cells, p);
        match (l, r) {
            (Ok(a), Ok(b)) if a == b => Status::Satisfied,
            (Ok(_), Ok(_)) => Status::Violated,
            (Err(bit), _) | (_, Err(bit)) => Status::Open(bit),
        }
    }
}

fn equations(laws: &[Law]) -> Vec<Equation> {
    let mut out = Vec::new();
    for law in laws {
        let metas = law.metavariables();
        let lhs = compile(&law.lhs, &metas);
        let rhs = compile(&law.rhs, &metas);
        let n = metas.len();
        for k in 0..4usize.pow(n as u32) {
            let env: Vec<BdValue> = (0..n)
                .map(|i| BdValue::from_index((k / 4usize.pow((n - 1 - i) as u32) % 4) as u8))
                .collect();
            out.push(Equation {
                lhs: lhs.clone(),
                rhs: rhs.clone(),
                env,
            });
        }
    }
    out
}

/// Statistics of one filter run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FilterStats {
    pub equations: usize,
    pub branches: u64,
    pub forced: u64,
}

/// Every strongly regular index whose matrix satisfies all of `laws`.
pub fn filter_strongly_regular(laws: &[Law]) -> FilterResult {
    filter_with_stats(laws).0
}

pub fn filter_with_stats(laws: &[Law]) -> (FilterResult, FilterStats) {
    if laws.is_empty() {
        return (FilterResult::All, FilterStats::default());
    }
    let cells = Cells::new();
    let eqs = equations(laws);
    let mut stats = FilterStats {
        equations: eqs.len(),
        ..Default::default()
    };
    let mut cubes = Vec::new();
    solve(&eqs, &cells, Partial { mask: 0, bits: 0 }, &mut cubes, &mut stats);
    cubes.sort();
    (FilterResult::Cubes(cubes), stats)
}

fn solve(eqs: &[Equation], cells: &Cells, mut p: Partial, out: &mut Vec<Cube>, stats: &mut FilterStats) {
    // Propagate: pin a bit when one of its values violates an equation.
    let branch_bit = loop {
        let mut open = None;
        let mut changed = false;
        for e in eqs {
            match e.status(cells, p) {
                Status::Satisfied => {}
                Status::Violated => return,
                Status::Open(bit) => {
                    let bad = |v| matches!(e.status(cells, p.with(bit, v)), Status::Violated);
                    match (bad(false), bad(true)) {
                        (true, true) => return,
                        (true, false) => {
                            p = p.with(bit, true);
                            changed = true;
                            stats.forced += 1;
                        }
                        (false, true) => {
                            p = p.with(bit, false);
                            changed = true;
                            stats.forced += 1;
                        }
                        (false, false) => {
                            open.get_or_insert(bit);
                        }
                    }
                }
            }
        }
        if !changed {
            break open;
        }
    };
    match branch_bit {
        None => out.push(Cube {
            mask: p.mask,
            bits: p.bits,
        }),
        Some(bit) => {
            stats.branches += 1;
            solve(eqs, cells, p.with(bit, false), out, stats);
            solve(eqs, cells, p.with(bit, true), out, stats);
        }
    }
}

/// An entailment `premise ⊨ conclusion` (or `⊨ conclusion`) valid in one
/// matrix and not in the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub premise: Option<Formula>,
    pub conclusion: Formula,
    /// Whether it is valid in the first matrix.
    pub valid_in_first: bool,
}

/// Looks for a single-premise or premise-free entailment over `corpus`
/// on which the consequence relations of `a` and `b` differ. Both
/// matrices need the connectives of the corpus.
pub fn separating_entailment(a: &Matrix, b: &Matrix, corpus: &[Formula]) -> Result<Option<Separation>, LawError> {
    let vars: Vec<String> = corpus
        .iter()
        .flat_map(|f| f.variables())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // Designation sets as packed bitsets over the assignments.
    let masks = |m: &Matrix| -> Result<Vec<Vec<u64>>, LawError> {
        corpus
            .iter()
            .map(|f| {
                let row = crate::matrix::eval::truth_table(m, f, &vars)?;
                let mut bits = vec![0u64; row.len().div_ceil(64)];
                for (k, v) in row.into_iter().enumerate() {
                    if m.is_designated(v) {
                        bits[k / 64] |= 1 << (k % 64);
                    }
                }
                Ok(bits)
            })
            .collect()
    };
    let (ma, mb) = (masks(a)?, masks(b)?);
    let full = |m: &Matrix| -> Vec<u64> {
        let n = m.size().pow(vars.len() as u32);
        (0..n.div_ceil(64))
            .map(|w| if (w + 1) * 64 <= n { u64::MAX } else { (1u64 << (n % 64)) - 1 })
            .collect()
    };
    let (fa, fb) = (full(a), full(b));
    let valid = |m: &[Vec<u64>], all: &[u64], p: Option<usize>, c: usize| {
        let prem = p.map_or(all, |p| &m[p]);
        prem.iter().zip(&m[c]).all(|(x, y)| x & !y == 0)
    };
    for c in 0..corpus.len() {
        for p in std::iter::once(None).chain((0..corpus.len()).map(Some)) {
            let (va, vb) = (valid(&ma, &fa, p, c), valid(&mb, &fb, p, c));
            if va != vb {
                return Ok(Some(Separation {
                    premise: p.map(|i| corpus[i].clone()),
                    conclusion: corpus[c].clone(),
                    valid_in_first: va,
                }));
            }
        }
    }
    Ok(None)
}

/// Outcome of checking every member of a filter result directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub checked: u64,
    /// Members failing strong regularity or some law, with the law name.
    pub failures: Vec<(SrIndex, String)>,
}

/// Decodes each member and evaluates each law on it, independently of the
/// propagation. `None` when the result has more than `limit` members.
pub fn verify(result: &FilterResult, laws: &[Law], limit: u64) -> Option<Verification> {
    let members = result.indices(limit)?;
    let mut failures = Vec::new();
    for &i in &members {
        let m = sr_decode(i);
        if !is_strongly_regular(&m) {
            failures.push((i, "strong regularity".to_string()));
            continue;
        }
        for law in laws {
            if !holds(&m, law).expect("family signature") {
                failures.push((i, law.name.clone()));
                break;
            }
        }
    }
    Some(Verification {
        checked: members.len() as u64,
        failures,
    })
}

/// Names of the connective entries on which the members of `result`
/// disagree, as `conn(args)` strings. Useful for explaining a result with
/// more than one member.
pub fn undetermined_entries(result: &FilterResult) -> Vec<String> {
    let cubes = match result {
        FilterResult::All => return free_cells().iter().map(cell_name).collect(),
        FilterResult::Cubes(cs) => cs,
    };
    let mut out = BTreeSet::new();
    for cell in free_cells() {
        let b = cell.bit;
        let mut seen = [false; 2];
        for c in cubes {
            if c.mask >> b & 1 == 0 {
                seen = [true, true];
            } else {
                seen[(c.bits >> b & 1) as usize] = true;
            }
        }
        if seen[0] && seen[1] {
            out.insert((b, cell_name(&cell)));
        }
    }
    out.into_iter().map(|(_, n)| n).collect()
}

fn cell_name(c: &crate::bd::regular::FreeCell) -> String {
    let args: Vec<&str> = c.args.iter().map(|a| a.name()).collect();
    format!("{}({})", c.connective, args.join(", "))
}
