mod common;

use common::{designation_masks, formula, valid_by_masks};
use fdekit::bd::{preset, sr_decode, SrIndex};
use fdekit::matrix::eval::{consequence, countermodel, equivalent};
use fdekit::matrix::Matrix;
use fdekit::syntax::{formulas_up_to_depth, parse_sequent, Formula, Signature, Substitution};
use proptest::prelude::*;

const BD: [(&str, usize); 3] = [("not", 1), ("and", 2), ("or", 2)];
const VARS: &[&str] = &["p", "q", "r"];

fn bd() -> Matrix {
    preset("bd").expect("preset")
}

fn side() -> impl Strategy<Value = Vec<Formula>> {
    prop::collection::vec(formula(BD.to_vec(), VARS, 3), 0..3)
}

fn holds(m: &Matrix, l: &[Formula], r: &[Formula]) -> bool {
    consequence(m, l, r).expect("evaluates")
}

fn joined(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
    a.iter().chain(b).cloned().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn overlap(l in side(), r in side(), a in formula(BD.to_vec(), VARS, 3)) {
        prop_assert!(holds(&bd(), &joined(&l, std::slice::from_ref(&a)), &joined(&r, &[a])));
    }

    #[test]
    fn dilution(l in side(), r in side(), l2 in side(), r2 in side()) {
        let m = bd();
        if holds(&m, &l, &r) {
            prop_assert!(holds(&m, &joined(&l, &l2), &joined(&r, &r2)));
        }
    }

    #[test]
    fn cut(l in side(), r in side(), l2 in side(), r2 in side(), a in formula(BD.to_vec(), VARS, 2)) {
        let m = bd();
        if holds(&m, &l, &joined(&r, std::slice::from_ref(&a))) && holds(&m, &joined(&l2, &[a]), &r2) {
            prop_assert!(holds(&m, &joined(&l, &l2), &joined(&r, &r2)));
        }
    }

    #[test]
    fn structurality(
        l in side(),
        r in side(),
        images in prop::collection::vec(formula(BD.to_vec(), &["p", "q", "s"], 2), 3),
    ) {
        let m = bd();
        if holds(&m, &l, &r) {
            let s: Substitution = VARS.iter().copied().zip(images).collect();
            let sub = |v: &[Formula]| v.iter().map(|f| f.substitute(&s)).collect::<Vec<_>>();
            prop_assert!(holds(&m, &sub(&l), &sub(&r)));
        }
    }

    #[test]
    fn equivalence_gives_mutual_consequence(
        a in formula(BD.to_vec(), &["p", "q"], 3),
        b in formula(BD.to_vec(), &["p", "q"], 3),
    ) {
        for name in ["bd", "lp", "k3", "cl"] {
            let m = preset(name).expect("preset");
            if equivalent(&m, &a, &b).expect("evaluates") {
                prop_assert!(holds(&m, std::slice::from_ref(&a), std::slice::from_ref(&b)));
                prop_assert!(holds(&m, std::slice::from_ref(&b), std::slice::from_ref(&a)));
            }
        }
    }

    #[test]
    fn countermodels_refute(l in side(), r in side()) {
        let m = bd();
        if let Some(cm) = countermodel(&m, &l, &r).expect("evaluates") {
            use fdekit::matrix::eval::evaluate;
            for f in &l {
                prop_assert!(m.is_designated(evaluate(&m, f, &cm).expect("assigned")));
            }
            for f in &r {
                prop_assert!(!m.is_designated(evaluate(&m, f, &cm).expect("assigned")));
            }
        }
    }

    #[test]
    fn matrix_json_round_trips(raw in 0u64..(1 << 38)) {
        let m = sr_decode(SrIndex::new(raw).expect("in range"));
        prop_assert_eq!(Matrix::from_json(&m.to_json()).expect("reads back"), m);
    }
}

/// Every sequent with at most one formula per side over the depth-2 BD
/// formulas in `p`, `q`.
#[test]
fn inclusions_between_the_four_logics() {
    let corpus = formulas_up_to_depth(&Signature::bd(), &["p", "q"], 2);
    let masks = |name: &str| {
        let m = preset(name).expect("preset");
        (designation_masks(&m, &corpus, &["p", "q"]), m.size() * m.size())
    };
    let logics: Vec<(&str, (Vec<u128>, usize))> = ["bd", "lp", "k3", "cl"].into_iter().map(|n| (n, masks(n))).collect();
    let valid = |i: usize, l: Option<usize>, r: Option<usize>| {
        let (m, rows) = &logics[i].1;
        valid_by_masks(&l.map(|x| vec![m[x]]).unwrap_or_default(), &r.map(|x| vec![m[x]]).unwrap_or_default(), *rows)
    };
    let n = corpus.len();
    let mut counts = [0usize; 4];
    let idx = |k: usize| if k == 0 { None } else { Some(k - 1) };
    for a in 0..=n {
        for b in 0..=n {
            let v: Vec<bool> = (0..4).map(|i| valid(i, idx(a), idx(b))).collect();
            for (c, ok) in counts.iter_mut().zip(&v) {
                *c += usize::from(*ok);
            }
            // bd ⊆ lp, bd ⊆ k3, lp ⊆ cl, k3 ⊆ cl
            assert!(!v[0] || (v[1] && v[2]));
            assert!(!v[1] || v[3]);
            assert!(!v[2] || v[3]);
        }
    }
    assert!(counts[0] < counts[1] && counts[0] < counts[2]);
    assert!(counts[1] < counts[3] && counts[2] < counts[3]);

    let witness = |m: &str, s: &str| {
        let m = preset(m).expect("preset");
        let (l, r) = parse_sequent(s, m.signature()).expect("parses");
        holds(&m, &l, &r)
    };
    // Excluded middle separates BD from LP, explosion separates BD from K3.
    assert!(!witness("bd", "|- p | ~p") && witness("lp", "|- p | ~p") && !witness("k3", "|- p | ~p"));
    assert!(!witness("bd", "p & ~p |- q") && witness("k3", "p & ~p |- q") && !witness("lp", "p & ~p |- q"));
    assert!(witness("cl", "|- p | ~p") && witness("cl", "p & ~p |- q"));
}

#[test]
fn classical_submatrices_are_closed() {
    let m = bd();
    for keep in [&["t", "f", "b"][..], &["t", "f", "n"], &["t", "f"]] {
        let sub = m.restrict(keep).expect("closed under the BD operations");
        assert_eq!(sub.size(), keep.len());
    }
}
