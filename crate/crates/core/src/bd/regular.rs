//! Strongly regular four-valued matrices.
//!
//! A matrix over {not, and, or, impl, bot} with values `t, f, b, n` and
//! designated `t, b` is strongly regular when `bot` is `f`, each connective
//! is designated exactly when its classical counterpart would be (reading
//! `b` as true and `n` as false, except that `not` is designated exactly on
//! `f` and `b`), and `{t, f}` is closed under every connective.
//!
//! Each such matrix is addressed by a 38-bit [`SrIndex`]:
//!
//! | bits    | entries                                   |
//! |---------|-------------------------------------------|
//! | 0..2    | `not(b)`, `not(n)`                         |
//! | 2..14   | the 12 `and` entries outside `{t,f}²`      |
//! | 14..26  | the 12 `or` entries, same order           |
//! | 26..38  | the 12 `impl` entries, same order         |
//!
//! Binary entries are listed row-major over `(t, f, b, n) × (t, f, b, n)`.
//! A clear bit selects the classical value of the required designatedness
//! class (`t` or `f`), a set bit the other one (`b` or `n`).

use thiserror::Error;

use super::BdValue;
use crate::matrix::{Matrix, Table};
use crate::syntax::names;

/// Number of bits in an [`SrIndex`].
pub const SR_BITS: u32 = 38;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularError {
    #[error("index {0} is not below 2^38")]
    OutOfRange(u64),
    #[error("matrix is not strongly regular: {0}")]
    NotStronglyRegular(String),
}

/// Address of one strongly regular four-valued matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SrIndex(u64);

impl SrIndex {
    pub fn new(i: u64) -> Result<Self, RegularError> {
        if i >> SR_BITS != 0 {
            return Err(RegularError::OutOfRange(i));
        }
        Ok(SrIndex(i))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn bit(self, i: u32) -> bool {
        self.0 >> i & 1 == 1
    }
}

impl std::fmt::Display for SrIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The connectives of the family, with arities, in index order.
pub const SR_CONNECTIVES: [(&str, usize); 5] = [
    (names::NOT, 1),
    (names::AND, 2),
    (names::OR, 2),
    (names::IMPL, 2),
    (names::BOT, 0),
];

/// Whether `conn(args)` has to be designated.
pub fn must_designate(conn: &str, args: &[BdValue]) -> bool {
    let d = |i: usize| args[i].is_designated();
    match conn {
        names::NOT => matches!(args[0], BdValue::F | BdValue::B),
        names::AND => d(0) && d(1),
        names::OR => d(0) || d(1),
        names::IMPL => !d(0) || d(1),
        names::BOT => false,
        _ => panic!("`{conn}` is not a connective of the strongly regular family"),
    }
}

/// Admissible values of `conn(args)`, ordered by the bit selecting them.
pub fn entry_choices(conn: &str, args: &[BdValue]) -> Vec<BdValue> {
    let des = must_designate(conn, args);
    let classical_in = args.iter().all(|a| a.is_classical());
    let (classical, other) = if des {
        (BdValue::T, BdValue::B)
    } else {
        (BdValue::F, BdValue::N)
    };
    if conn == names::BOT || classical_in {
        vec![classical]
    } else {
        vec![classical, other]
    }
}

/// One table entry with two admissible values, and its bit in the index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeCell {
    pub connective: &'static str,
    pub args: Vec<BdValue>,
    pub bit: u32,
}

impl FreeCell {
    pub fn value(&self, bit_set: bool) -> BdValue {
        entry_choices(self.connective, &self.args)[bit_set as usize]
    }
}

/// The 38 free entries in bit order.
pub fn free_cells() -> Vec<FreeCell> {
    let mut cells = Vec::with_capacity(SR_BITS as usize);
    for (conn, arity) in SR_CONNECTIVES {
        let tuples: Vec<Vec<BdValue>> = match arity {
            0 => vec![vec![]],
            1 => BdValue::ALL.iter().map(|&a| vec![a]).collect(),
            _ => BdValue::ALL
                .iter()
                .flat_map(|&a| BdValue::ALL.iter().map(move |&b| vec![a, b]))
                .collect(),
        };
        for args in tuples {
            if entry_choices(conn, &args).len() == 2 {
                let bit = cells.len() as u32;
                cells.push(FreeCell {
                    connective: conn,
                    args,
                    bit,
                });
            }
        }
    }
    debug_assert_eq!(cells.len(), SR_BITS as usize);
    cells
}

/// Size of the family, as the product of the number of admissible values
/// of every table entry.
pub fn count_strongly_regular() -> u64 {
    let mut total: u64 = 1;
    for (conn, arity) in SR_CONNECTIVES {
        let mut args = vec![BdValue::T; arity];
        let points = 4usize.pow(arity as u32);
        for p in 0..points {
            let mut x = p;
            for slot in args.iter_mut().rev() {
                *slot = BdValue::from_index((x % 4) as u8);
                x /= 4;
            }
            total *= entry_choices(conn, &args).len() as u64;
        }
    }
    total
}

/// Position of each BD value in `m`'s carrier, if the carrier is exactly
/// `{t, f, b, n}`.
fn carrier_positions(m: &Matrix) -> Option<[u8; 4]> {
    if m.size() != 4 {
        return None;
    }
    let mut pos = [0u8; 4];
    for v in BdValue::ALL {
        pos[v as usize] = m.value(v.name())?.0;
    }
    Some(pos)
}

fn lookup(m: &Matrix, pos: &[u8; 4], conn: &str, args: &[BdValue]) -> Option<BdValue> {
    let raw: Vec<u8> = args.iter().map(|a| pos[*a as usize]).collect();
    let out = m.table(conn)?.get(4, &raw);
    BdValue::ALL.into_iter().find(|v| pos[*v as usize] == out)
}

fn check(m: &Matrix) -> Result<[u8; 4], String> {
    for (conn, arity) in SR_CONNECTIVES {
        if m.signature().arity(conn) != Some(arity) {
            return Err(format!("missing connective `{conn}`/{arity}"));
        }
    }
    if m.signature().len() != SR_CONNECTIVES.len() {
        return Err("signature has connectives beyond not, and, or, impl, bot".into());
    }
    let pos = carrier_positions(m).ok_or("carrier is not {t, f, b, n}")?;
    let mut des: Vec<&str> = m.designated().map(|v| m.name_of(v)).collect();
    des.sort_unstable();
    if des != ["b", "t"] {
        return Err("designated set is not {t, b}".into());
    }
    for (conn, arity) in SR_CONNECTIVES {
        let mut args = vec![BdValue::T; arity];
        for p in 0..4usize.pow(arity as u32) {
            let mut x = p;
            for slot in args.iter_mut().rev() {
                *slot = BdValue::from_index((x % 4) as u8);
                x /= 4;
            }
            let v = lookup(m, &pos, conn, &args).expect("table present");
            if !entry_choices(conn, &args).contains(&v) {
                let shown: Vec<&str> = args.iter().map(|a| a.name()).collect();
                return Err(format!("{conn}({}) = {v} is not admissible", shown.join(",")));
            }
        }
    }
    Ok(pos)
}

pub fn is_strongly_regular(m: &Matrix) -> bool {
    check(m).is_ok()
}

/// The matrix addressed by `i`, carrier in order `t, f, b, n`.
pub fn sr_decode(i: SrIndex) -> Matrix {
    let mut tables: Vec<(String, Table)> = Vec::new();
    let cells = free_cells();
    for (conn, arity) in SR_CONNECTIVES {
        let table = Table::from_fn(arity, 4, |raw| {
            let args: Vec<BdValue> = raw.iter().map(|&a| BdValue::from_index(a)).collect();
            let choices = entry_choices(conn, &args);
            if choices.len() == 1 {
                return choices[0].index();
            }
            let cell = cells
                .iter()
                .find(|c| c.connective == conn && c.args == args)
                .expect("free entry has a bit");
            choices[i.bit(cell.bit) as usize].index()
        });
        tables.push((conn.to_string(), table));
    }
    Matrix::new(BdValue::ALL.iter().map(|v| v.name()), ["t", "b"], tables).expect("well-formed")
}

/// The index of a strongly regular matrix.
pub fn sr_encode(m: &Matrix) -> Result<SrIndex, RegularError> {
    let pos = check(m).map_err(RegularError::NotStronglyRegular)?;
    let mut i = 0u64;
    for cell in free_cells() {
        let v = lookup(m, &pos, cell.connective, &cell.args).expect("checked");
        if v == cell.value(true) {
            i |= 1 << cell.bit;
        }
    }
    Ok(SrIndex(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bd::preset;

    #[test]
    fn family_size() {
        assert_eq!(count_strongly_regular(), 274_877_906_944);
        assert_eq!(count_strongly_regular(), 1 << 38);
    }

    #[test]
    fn bit_layout() {
        let cells = free_cells();
        assert_eq!(cells.len(), 38);
        assert_eq!((cells[0].connective, cells[0].args.as_slice()), ("not", &[BdValue::B][..]));
        assert_eq!((cells[1].connective, cells[1].args.as_slice()), ("not", &[BdValue::N][..]));
        assert_eq!(cells[2].connective, "and");
        assert_eq!(cells[2].args, [BdValue::T, BdValue::B]);
        assert_eq!(cells[14].connective, "or");
        assert_eq!(cells[26].connective, "impl");
        assert_eq!(cells[37].args, [BdValue::N, BdValue::N]);
        assert_eq!(cells[0].value(false), BdValue::T);
        assert_eq!(cells[1].value(false), BdValue::F);
    }

    #[test]
    fn bd_impl_bot_is_a_member() {
        let m = preset("bd-impl-bot").unwrap();
        assert!(is_strongly_regular(&m));
        let i = sr_encode(&m).unwrap();
        assert_eq!(sr_decode(i), m);
    }

    #[test]
    fn violations() {
        let m = preset("bd-impl-bot").unwrap();
        // not(t) = n breaks closure of {t, f}
        let mut not = m.table("not").unwrap().entries().to_vec();
        not[0] = 3;
        let bad = rebuild(&m, "not", Table::new(1, not));
        assert!(!is_strongly_regular(&bad));
        // and(b, b) = f is not designated
        let mut and = m.table("and").unwrap().entries().to_vec();
        and[2 * 4 + 2] = 1;
        let bad = rebuild(&m, "and", Table::new(2, and));
        assert!(!is_strongly_regular(&bad));
        assert!(matches!(sr_encode(&bad), Err(RegularError::NotStronglyRegular(_))));
        assert!(!is_strongly_regular(&preset("bd").unwrap()));
        assert!(!is_strongly_regular(&preset("bd-b-n-bot").unwrap()));
    }

    fn rebuild(m: &Matrix, conn: &str, t: Table) -> Matrix {
        let tables = m
            .tables()
            .map(|(n, old)| (n.to_string(), if n == conn { t.clone() } else { old.clone() }));
        Matrix::new(m.value_names().to_vec(), m.designated_names(), tables).unwrap()
    }

    #[test]
    fn index_range() {
        assert!(SrIndex::new((1 << 38) - 1).is_ok());
        assert_eq!(SrIndex::new(1 << 38), Err(RegularError::OutOfRange(1 << 38)));
    }

    #[test]
    fn permuted_carrier_encodes_the_same() {
        let m = preset("bd-impl-bot").unwrap();
        let i = sr_encode(&m).unwrap();
        // reorder the carrier as n, b, f, t
        let perm = [3u8, 2, 1, 0];
        let tables = m.tables().map(|(n, t)| {
            let k = t.arity();
            let entries = Table::from_fn(k, 4, |raw| {
                let orig: Vec<u8> = raw.iter().map(|&a| perm[a as usize]).collect();
                let out = t.get(4, &orig);
                perm.iter().position(|&p| p == out).unwrap() as u8
            });
            (n.to_string(), entries)
        });
        let p = Matrix::new(["n", "b", "f", "t"], ["t", "b"], tables).unwrap();
        assert_eq!(sr_encode(&p).unwrap(), i);
    }
}
