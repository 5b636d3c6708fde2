//! Term functions of a matrix and the simplicity test.
//!
//! Term functions of arity `n` are generated breadth-first by witness size:
//! level 1 holds the projections `p1..pn` followed by the nullary
//! generators in name order; level `s` applies each generator (name order)
//! to argument tuples whose witness sizes sum to `s - 1`, size compositions
//! in lexicographic order and functions in discovery order. The first
//! witness found for a table is kept, so every stored witness has minimal
//! size.
//!
//! Simplicity is decided on unary term functions only. If `f` separates `a`
//! from `b` then for tuples differing at position `i` the composite
//! `f(p_i)` separates them, so the all-arity condition reduces to the unary
//! one.

use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use thiserror::Error;

use super::{for_each_tuple, Matrix, Table, TruthValue};
use crate::syntax::Formula;

/// Default upper bound on the arity of generated term functions.
pub const DEFAULT_ARITY_CAP: usize = 2;
/// Default bound on the number of functions a single generation may hold.
pub const DEFAULT_MAX_FUNCTIONS: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CloneError {
    #[error("arity {requested} exceeds the configured cap of {cap}")]
    ArityCap { requested: usize, cap: usize },
    #[error("generator `{0}` is not a connective of the matrix")]
    UnknownGenerator(String),
    #[error("generation stopped after {0} functions without reaching a fixpoint")]
    Budget(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CloneConfig {
    pub arity_cap: usize,
    pub max_functions: usize,
}

impl Default for CloneConfig {
    fn default() -> Self {
        CloneConfig {
            arity_cap: DEFAULT_ARITY_CAP,
            max_functions: DEFAULT_MAX_FUNCTIONS,
        }
    }
}

impl CloneConfig {
    /// Defaults, with the arity cap taken from `FDEKIT_ARITY_CAP` when set.
    pub fn from_env() -> Self {
        let mut c = Self::default();
        if let Some(cap) = std::env::var("FDEKIT_ARITY_CAP")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            c.arity_cap = cap;
        }
        c
    }
}

/// A tabulated function `carrier^arity -> carrier` with a formula over
/// `p1..pn` realising it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermFunction {
    pub arity: usize,
    pub table: Vec<u8>,
    pub witness: Formula,
}

impl TermFunction {
    pub fn apply(&self, size: usize, args: &[TruthValue]) -> TruthValue {
        let raw: Vec<u8> = args.iter().map(|a| a.0).collect();
        TruthValue(self.table[super::tuple_index(size, &raw)])
    }
}

/// Name of the `i`-th projection variable (1-based).
pub fn projection_var(i: usize) -> String {
    format!("p{i}")
}

#[derive(Debug, Clone)]
enum Origin {
    Projection(usize),
    Apply { generator: usize, args: Vec<u32> },
}

/// A set of term functions of one arity, in discovery order.
#[derive(Debug, Clone)]
pub struct Clone {
    arity: usize,
    size: usize,
    generators: Vec<(String, Table)>,
    tables: Vec<Box<[u8]>>,
    origins: Vec<Origin>,
    witness_sizes: Vec<u32>,
    index: HashMap<Box<[u8]>, u32, BuildHasherDefault<TableHasher>>,
    levels: Vec<Vec<u32>>,
    complete: bool,
}

impl Clone {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Whether generation reached the fixpoint.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, table: &[u8]) -> bool {
        self.index.contains_key(table)
    }

    pub fn position(&self, table: &[u8]) -> Option<usize> {
        self.index.get(table).map(|&i| i as usize)
    }

    pub fn table(&self, i: usize) -> &[u8] {
        &self.tables[i]
    }

    pub fn tables(&self) -> impl Iterator<Item = &[u8]> {
        self.tables.iter().map(|t| &t[..])
    }

    pub fn witness_size(&self, i: usize) -> usize {
        self.witness_sizes[i] as usize
    }

    pub fn witness(&self, i: usize) -> Formula {
        match &self.origins[i] {
            Origin::Projection(k) => Formula::Var(projection_var(k + 1)),
            Origin::Apply { generator, args } => Formula::App(
                self.generators[*generator].0.clone(),
                args.iter().map(|&a| self.witness(a as usize)).collect(),
            ),
        }
    }

    pub fn function(&self, i: usize) -> TermFunction {
        TermFunction {
            arity: self.arity,
            table: self.tables[i].to_vec(),
            witness: self.witness(i),
        }
    }

    pub fn get(&self, table: &[u8]) -> Option<TermFunction> {
        self.position(table).map(|i| self.function(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = TermFunction> + '_ {
        (0..self.len()).map(|i| self.function(i))
    }
}

/// Breadth-first generator of term functions.
pub struct CloneBuilder {
    clone: Clone,
    next_level: usize,
    max_functions: usize,
}

impl CloneBuilder {
    pub fn new<S: AsRef<str>>(
        m: &Matrix,
        arity: usize,
        generators: &[S],
        config: &CloneConfig,
    ) -> Result<Self, CloneError> {
        if arity > config.arity_cap {
            return Err(CloneError::ArityCap {
                requested: arity,
                cap: config.arity_cap,
            });
        }
        let mut gens: Vec<(String, Table)> = Vec::new();
        for g in generators {
            let g = g.as_ref();
            let t = m
                .table(g)
                .ok_or_else(|| CloneError::UnknownGenerator(g.to_string()))?;
            if !gens.iter().any(|(n, _)| n == g) {
                gens.push((g.to_string(), t.clone()));
            }
        }
        gens.sort_by(|a, b| a.0.cmp(&b.0));
        let size = m.size();
        let points = size.pow(arity as u32);
        let mut clone = Clone {
            arity,
            size,
            generators: gens,
            tables: Vec::new(),
            origins: Vec::new(),
            witness_sizes: Vec::new(),
            index: HashMap::default(),
            levels: vec![Vec::new(), Vec::new()],
            complete: false,
        };
        let mut level1 = Vec::new();
        for k in 0..arity {
            let mut table = Vec::with_capacity(points);
            let mut buf = vec![0u8; arity];
            for_each_tuple(size, &mut buf, &mut |t| table.push(t[k]));
            if let Some(id) = clone.insert(table, Origin::Projection(k), 1) {
                level1.push(id);
            }
        }
        for g in 0..clone.generators.len() {
            if clone.generators[g].1.arity() == 0 {
                let v = clone.generators[g].1.entries()[0];
                let origin = Origin::Apply {
                    generator: g,
                    args: Vec::new(),
                };
                if let Some(id) = clone.insert(vec![v; points], origin, 1) {
                    level1.push(id);
                }
            }
        }
        clone.levels[1] = level1;
        Ok(CloneBuilder {
            clone,
            next_level: 2,
            max_functions: config.max_functions,
        })
    }

    fn max_generator_arity(&self) -> usize {
        self.clone
            .generators
            .iter()
            .map(|(_, t)| t.arity())
            .max()
            .unwrap_or(0)
    }

    fn done(&self) -> bool {
        // Every combination of known functions has witness size at most
        // K * (largest non-empty level) + 1, so past that level nothing new
        // can appear.
        let largest = self
            .clone
            .levels
            .iter()
            .rposition(|l| !l.is_empty())
            .unwrap_or(0);
        self.next_level > self.max_generator_arity() * largest + 1
    }

    /// Generates one more level. Stops early, returning `true`, as soon as
    /// `stop` accepts a newly found table.
    fn step(&mut self, stop: &mut impl FnMut(&[u8]) -> bool) -> Result<bool, CloneError> {
        let s = self.next_level;
        self.next_level += 1;
        let mut fresh = Vec::new();
        let points = self.clone.size.pow(self.clone.arity as u32);
        let size = self.clone.size;
        for g in 0..self.clone.generators.len() {
            let k = self.clone.generators[g].1.arity();
            if k == 0 || s - 1 < k {
                continue;
            }
            let mut parts = vec![1usize; k];
            parts[k - 1] = s - k;
            loop {
                // Cartesian product over the chosen levels.
                if parts.iter().all(|&p| p < self.clone.levels.len() && !self.clone.levels[p].is_empty()) {
                    let lists: Vec<Vec<u32>> = parts.iter().map(|&p| self.clone.levels[p].clone()).collect();
                    let gtab: Vec<u8> = self.clone.generators[g].1.entries().to_vec();
                    let mut pick = vec![0usize; k];
                    let mut ids = vec![0u32; k];
                    let mut table = vec![0u8; points];
                    'product: loop {
                        for (j, id) in ids.iter_mut().enumerate() {
                            *id = lists[j][pick[j]];
                        }
                        let tables = &self.clone.tables;
                        match ids[..] {
                            [a] => {
                                let a = &tables[a as usize];
                                for (out, &x) in table.iter_mut().zip(a.iter()) {
                                    *out = gtab[x as usize];
                                }
                            }
                            [a, b] => {
                                let (a, b) = (&tables[a as usize], &tables[b as usize]);
                                for ((out, &x), &y) in table.iter_mut().zip(a.iter()).zip(b.iter()) {
                                    *out = gtab[x as usize * size + y as usize];
                                }
                            }
                            _ => {
                                for (x, out) in table.iter_mut().enumerate() {
                                    let at = ids.iter().fold(0, |acc, &id| acc * size + tables[id as usize][x] as usize);
                                    *out = gtab[at];
                                }
                            }
                        }
                        if !self.clone.index.contains_key(&table[..]) {
                            let found = stop(&table);
                            let origin = Origin::Apply {
                                generator: g,
                                args: ids.clone(),
                            };
                            let id = self.clone.insert(table.clone(), origin, s as u32).expect("fresh table");
                            fresh.push(id);
                            if found {
                                self.clone.levels.push(fresh);
                                return Ok(true);
                            }
                            if self.clone.len() > self.max_functions {
                                return Err(CloneError::Budget(self.clone.len()));
                            }
                        }
                        let mut j = k;
                        loop {
                            if j == 0 {
                                break 'product;
                            }
                            j -= 1;
                            pick[j] += 1;
                            if pick[j] < lists[j].len() {
                                break;
                            }
                            pick[j] = 0;
                        }
                    }
                }
                if !next_composition(&mut parts) {
                    break;
                }
            }
        }
        self.clone.levels.push(fresh);
        Ok(false)
    }

    /// Runs to the fixpoint.
    pub fn finish(mut self) -> Result<Clone, CloneError> {
        while !self.done() {
            self.step(&mut |_| false)?;
        }
        self.clone.complete = true;
        Ok(self.clone)
    }

    /// Runs until `table` is generated (returning its position) or the
    /// fixpoint is reached without it.
    pub fn search(mut self, table: &[u8]) -> Result<(Clone, Option<usize>), CloneError> {
        if let Some(i) = self.clone.position(table) {
            return Ok((self.clone, Some(i)));
        }
        while !self.done() {
            if self.step(&mut |t| t == table)? {
                let i = self.clone.position(table);
                return Ok((self.clone, i));
            }
        }
        self.clone.complete = true;
        Ok((self.clone, None))
    }
}

impl Clone {
    fn insert(&mut self, table: Vec<u8>, origin: Origin, wsize: u32) -> Option<u32> {
        let table: Box<[u8]> = table.into_boxed_slice();
        if self.index.contains_key(&table) {
            return None;
        }
        let id = self.tables.len() as u32;
        self.index.insert(table.clone(), id);
        self.tables.push(table);
        self.origins.push(origin);
        self.witness_sizes.push(wsize);
        Some(id)
    }
}

/// Multiplicative hash for short byte strings; tables are hashed once per
/// candidate in the innermost loop, where SipHash dominates.
#[derive(Default)]
struct TableHasher(u64);

impl Hasher for TableHasher {
    fn write(&mut self, bytes: &[u8]) {
        const K: u64 = 0x517c_c1b7_2722_0a95;
        let mut chunks = bytes.chunks_exact(8);
        for c in &mut chunks {
            let w = u64::from_le_bytes(c.try_into().expect("eight bytes"));
            self.0 = (self.0.rotate_left(5) ^ w).wrapping_mul(K);
        }
        for &b in chunks.remainder() {
            self.0 = (self.0.rotate_left(5) ^ b as u64).wrapping_mul(K);
        }
    }

    fn write_usize(&mut self, n: usize) {
        self.0 = (self.0.rotate_left(5) ^ n as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
    }

    fn finish(&self) -> u64 {
        self.0
    }
}

/// Next composition of the same total into `parts.len()` positive parts,
/// in lexicographic order.
fn next_composition(parts: &mut [usize]) -> bool {
    let k = parts.len();
    if k < 2 {
        return false;
    }
    // Find the rightmost position (excluding the last) that can grow.
    let total: usize = parts.iter().sum();
    for i in (0..k - 1).rev() {
        let prefix: usize = parts[..=i].iter().sum();
        let remaining_slots = k - 1 - i;
        if total - prefix > remaining_slots {
            parts[i] += 1;
            for p in parts.iter_mut().take(k - 1).skip(i + 1) {
                *p = 1;
            }
            let used: usize = parts[..k - 1].iter().sum();
            parts[k - 1] = total - used;
            return true;
        }
    }
    false
}

/// All term functions of arity `n` generated from `generators`.
pub fn term_functions<S: AsRef<str>>(
    m: &Matrix,
    n: usize,
    generators: &[S],
    config: &CloneConfig,
) -> Result<Clone, CloneError> {
    CloneBuilder::new(m, n, generators, config)?.finish()
}

/// All unary term functions generated from `generators`.
pub fn unary_term_functions<S: AsRef<str>>(m: &Matrix, generators: &[S]) -> Result<Clone, CloneError> {
    term_functions(m, 1, generators, &CloneConfig::default())
}

/// For each unordered pair of distinct values, a unary term function
/// mapping exactly one of them into the designated set.
pub type Separators = BTreeMap<(TruthValue, TruthValue), TermFunction>;

/// Decides simplicity; on success returns one separator per pair, the first
/// one in generation order.
pub fn is_simple(m: &Matrix) -> (bool, Separators) {
    let gens: Vec<&str> = m.signature().names().collect();
    let clone = unary_term_functions(m, &gens).expect("arity 1 within the default cap");
    let des = m.designated_mask();
    let mut seps = Separators::new();
    let mut simple = true;
    for a in 0..m.size() {
        for b in a + 1..m.size() {
            let hit = (0..clone.len()).find(|&i| {
                let t = clone.table(i);
                des[t[a] as usize] != des[t[b] as usize]
            });
            match hit {
                Some(i) => {
                    seps.insert((TruthValue(a as u8), TruthValue(b as u8)), clone.function(i));
                }
                None => simple = false,
            }
        }
    }
    if !simple {
        seps.clear();
    }
    (simple, seps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::eval::truth_table;

    fn three_with_clone() -> Matrix {
        // f' duplicates f in every table; designated {t}.
        let not = Table::new(1, vec![1, 0, 0]);
        let and = Table::from_fn(2, 3, |a| {
            let c = |x: u8| if x == 0 { 0 } else { 1 };
            if c(a[0]) == 0 && c(a[1]) == 0 {
                0
            } else {
                1
            }
        });
        Matrix::new(
            ["t", "f", "f'"],
            ["t"],
            [("not".to_string(), not), ("and".to_string(), and)],
        )
        .unwrap()
    }

    fn classical() -> Matrix {
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
    fn compositions_are_lexicographic() {
        let mut p = vec![1, 1, 2];
        let mut seen = vec![p.clone()];
        while next_composition(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn classical_unary_clone() {
        let m = classical();
        let c = unary_term_functions(&m, &["not", "and"]).unwrap();
        // identity, negation, and the two constants via p1 & ~p1 and ~(p1 & ~p1)
        assert_eq!(c.len(), 4);
        assert_eq!(c.witness(0), Formula::var("p1"));
        for f in c.iter() {
            let vars = vec!["p1".to_string()];
            let tt: Vec<u8> = truth_table(&m, &f.witness, &vars).unwrap().iter().map(|v| v.0).collect();
            assert_eq!(tt, f.table);
        }
    }

    #[test]
    fn arity_cap_is_enforced() {
        let m = classical();
        let cfg = CloneConfig::default();
        assert_eq!(
            term_functions(&m, 3, &["and"], &cfg).unwrap_err(),
            CloneError::ArityCap { requested: 3, cap: 2 }
        );
        let wide = CloneConfig { arity_cap: 3, ..cfg };
        // binary and-only over two values: projections and their meets, 7 functions
        assert_eq!(term_functions(&m, 3, &["and"], &wide).unwrap().len(), 7);
    }

    #[test]
    fn unknown_generator() {
        assert_eq!(
            unary_term_functions(&classical(), &["or"]).unwrap_err(),
            CloneError::UnknownGenerator("or".into())
        );
    }

    #[test]
    fn simplicity() {
        let (simple, seps) = is_simple(&classical());
        assert!(simple);
        assert_eq!(seps.len(), 1);
        assert_eq!(seps.values().next().unwrap().witness, Formula::var("p1"));

        let (simple, seps) = is_simple(&three_with_clone());
        assert!(!simple);
        assert!(seps.is_empty());
    }

    #[test]
    fn search_stops_at_target() {
        let m = classical();
        let b = CloneBuilder::new(&m, 1, &["not", "and"], &CloneConfig::default()).unwrap();
        let (c, pos) = b.search(&[1, 0]).unwrap();
        assert_eq!(c.witness(pos.unwrap()), Formula::not(Formula::var("p1")));
        let b = CloneBuilder::new(&m, 1, &["and"], &CloneConfig::default()).unwrap();
        let (c, pos) = b.search(&[1, 0]).unwrap();
        assert!(pos.is_none() && c.is_complete());
    }
}
