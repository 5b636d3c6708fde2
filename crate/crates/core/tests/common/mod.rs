//! Shared generators and semantic oracles for the integration tests.
#![allow(dead_code)]

use fdekit::matrix::eval::truth_table;
use fdekit::matrix::Matrix;
use fdekit::syntax::{Formula, Signature};
use proptest::prelude::*;
use rand::Rng;

/// Every canonical connective with its arity.
pub const ALL_CONNECTIVES: [(&str, usize); 12] = [
    ("not", 1),
    ("and", 2),
    ("or", 2),
    ("impl", 2),
    ("bot", 0),
    ("delta", 1),
    ("circ", 1),
    ("cons", 1),
    ("det", 1),
    ("confl", 1),
    ("B", 0),
    ("N", 0),
];

pub fn full_signature() -> Signature {
    Signature::new(ALL_CONNECTIVES).expect("distinct names")
}

/// Formulas over `conns` and `vars` whose depth is at most `depth`.
pub fn formula(conns: Vec<(&'static str, usize)>, vars: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let mut leaves: Vec<BoxedStrategy<Formula>> = vec![prop::sample::select(vars.to_vec()).prop_map(Formula::var).boxed()];
    for (c, a) in &conns {
        if *a == 0 {
            leaves.push(Just(Formula::constant(*c)).boxed());
        }
    }
    let leaf = prop::strategy::Union::new(leaves).boxed();
    let inner: Vec<(&'static str, usize)> = conns.into_iter().filter(|(_, a)| *a > 0).collect();
    leaf.prop_recursive(depth, 256, 2, move |sub| {
        let options: Vec<BoxedStrategy<Formula>> = inner
            .iter()
            .map(|&(c, a)| prop::collection::vec(sub.clone(), a).prop_map(move |args| Formula::app(c, args)).boxed())
            .collect();
        prop::strategy::Union::new(options)
    })
    .boxed()
}

/// Formulas reaching at least `min` levels, for round-trip tests.
pub fn deep_formula(min: usize, max: u32) -> impl Strategy<Value = Formula> {
    formula(ALL_CONNECTIVES.to_vec(), &["p", "q", "r", "s1"], max).prop_filter("deep enough", move |f| f.depth() >= min)
}

/// A random formula of depth at most `depth` built with `rng`.
pub fn random_formula<R: Rng>(rng: &mut R, conns: &[(&str, usize)], vars: &[&str], depth: usize) -> Formula {
    let leaves: Vec<Formula> = vars
        .iter()
        .map(|v| Formula::var(*v))
        .chain(conns.iter().filter(|(_, a)| *a == 0).map(|(c, _)| Formula::constant(*c)))
        .collect();
    let inner: Vec<&(&str, usize)> = conns.iter().filter(|(_, a)| *a > 0).collect();
    if depth == 0 || inner.is_empty() || rng.gen_bool(0.3) {
        return leaves[rng.gen_range(0..leaves.len())].clone();
    }
    let (c, a) = inner[rng.gen_range(0..inner.len())];
    let args = (0..*a).map(|_| random_formula(rng, conns, vars, depth - 1)).collect();
    Formula::app(*c, args)
}

/// For each formula, the set of rows (assignments over `vars`, in table
/// order) at which it is designated, as a bit mask.
pub fn designation_masks(m: &Matrix, formulas: &[Formula], vars: &[&str]) -> Vec<u128> {
    let vars: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
    assert!(m.size().pow(vars.len() as u32) <= 128);
    formulas
        .iter()
        .map(|f| {
            truth_table(m, f, &vars)
                .expect("evaluates")
                .into_iter()
                .enumerate()
                .filter(|(_, v)| m.is_designated(*v))
                .fold(0u128, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

/// Validity of `left |- right` from designation masks over `rows` rows.
pub fn valid_by_masks(left: &[u128], right: &[u128], rows: usize) -> bool {
    let all = if rows == 128 { u128::MAX } else { (1u128 << rows) - 1 };
    let l = left.iter().fold(all, |acc, m| acc & m);
    let r = right.iter().fold(0, |acc, m| acc | m);
    l & !r == 0
}
