mod common;

use common::{designation_masks, valid_by_masks};
use fdekit::bd::{is_strongly_regular, preset, sr_decode, sr_encode, SrIndex, SR_BITS};
use fdekit::laws::{filter_strongly_regular, holds, table_laws, verify};
use fdekit::matrix::eval::consequence;
use fdekit::syntax::{formulas_up_to_depth, Formula, Signature};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn uses_negation(f: &Formula) -> bool {
    f.head() == Some("not") || f.args().iter().any(uses_negation)
}

/// Sequents with at most one formula a side over the depth-1 formulas in
/// `p`, `q`: classical positive validity ⊆ validity in m ⊆ classical validity.
#[test]
fn sampled_members_sit_between_positive_and_full_classical_logic() {
    let corpus = formulas_up_to_depth(&Signature::bd_impl_bot(), &["p", "q"], 1);
    let vars = ["p", "q"];
    let cl = designation_masks(&preset("cl-impl-bot").expect("preset"), &corpus, &vars);
    let positive: Vec<bool> = corpus.iter().map(|f| !uses_negation(f)).collect();
    let n = corpus.len();
    let side = |masks: &[u128], k: usize| if k == n { vec![] } else { vec![masks[k]] };

    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    let p = Formula::var("p");
    let not_p = Formula::not(p.clone());
    for _ in 0..10_000 {
        let i = SrIndex::new(rng.gen_range(0..1u64 << SR_BITS)).expect("in range");
        let m = sr_decode(i);
        assert!(is_strongly_regular(&m), "{i}");
        assert_eq!(sr_encode(&m).expect("member"), i);
        assert!(!consequence(&m, std::slice::from_ref(&p), std::slice::from_ref(&not_p)).expect("evaluates"), "{i}: p |- ~p");
        assert!(!consequence(&m, std::slice::from_ref(&not_p), std::slice::from_ref(&p)).expect("evaluates"), "{i}: ~p |- p");

        let own = designation_masks(&m, &corpus, &vars);
        for a in 0..=n {
            for b in 0..=n {
                let in_m = valid_by_masks(&side(&own, a), &side(&own, b), 16);
                let in_cl = valid_by_masks(&side(&cl, a), &side(&cl, b), 4);
                assert!(!in_m || in_cl, "{i}: valid in m but not classically");
                let pos = (a == n || positive[a]) && (b == n || positive[b]);
                assert!(!(pos && in_cl) || in_m, "{i}: positive classical sequent fails");
            }
        }
    }
}

#[test]
fn laws_filter_is_antitone_and_verified() {
    let laws = table_laws();
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let subset: Vec<_> = laws.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        let extra = laws[rng.gen_range(0..laws.len())].clone();
        let mut bigger = subset.clone();
        if !bigger.iter().any(|l| l.name == extra.name) {
            bigger.push(extra);
        }
        let (small, large) = (filter_strongly_regular(&subset), filter_strongly_regular(&bigger));
        assert!(large.count() <= small.count());
        // Members of the larger law set's result are members of the smaller's.
        for _ in 0..50 {
            let i = SrIndex::new(rng.gen_range(0..1u64 << SR_BITS)).expect("in range");
            if large.contains(i) {
                assert!(small.contains(i));
            }
            // Membership agrees with direct evaluation of every law.
            let direct = bigger.iter().all(|l| holds(&sr_decode(i), l).expect("evaluates"));
            assert_eq!(large.contains(i), direct, "{i}");
        }
        if let Some(v) = verify(&large, &bigger, 2_000) {
            assert!(v.failures.is_empty());
        }
    }
}
