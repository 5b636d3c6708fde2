mod common;

use common::{deep_formula, formula, full_signature, ALL_CONNECTIVES};
use fdekit::syntax::{parse, print, Formula, Substitution};
use proptest::prelude::*;

fn substitution() -> impl Strategy<Value = Substitution> {
    let image = formula(ALL_CONNECTIVES.to_vec(), &["p", "q", "r"], 3);
    prop::collection::vec((prop::sample::select(vec!["p", "q", "r", "s"]), image), 0..4)
        .prop_map(|pairs| pairs.into_iter().collect())
}

fn connective_count(f: &Formula, out: &mut std::collections::BTreeMap<String, usize>) {
    if let Some(h) = f.head() {
        *out.entry(h.to_string()).or_default() += 1;
    }
    for a in f.args() {
        connective_count(a, out);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn printing_then_parsing_is_the_identity(f in deep_formula(6, 9)) {
        let text = print(&f);
        let back = parse(&text, &full_signature()).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
        prop_assert_eq!(back, f);
    }

    #[test]
    fn printed_forms_are_fixpoints(f in formula(ALL_CONNECTIVES.to_vec(), &["p", "q"], 5)) {
        let once = print(&f);
        let twice = print(&parse(&once, &full_signature()).expect("printable text parses"));
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn substitutions_compose(
        f in formula(ALL_CONNECTIVES.to_vec(), &["p", "q", "r", "s"], 4),
        s1 in substitution(),
        s2 in substitution(),
    ) {
        prop_assert_eq!(f.substitute(&s1).substitute(&s2), f.substitute(&s1.then(&s2)));
    }

    #[test]
    fn substitution_only_adds_connectives_from_its_images(
        f in formula(ALL_CONNECTIVES.to_vec(), &["p", "q", "r", "s"], 4),
        s in substitution(),
    ) {
        let g = f.substitute(&s);
        prop_assert!(g.check(&full_signature()).is_ok());
        let (mut before, mut after) = (Default::default(), Default::default());
        connective_count(&f, &mut before);
        connective_count(&g, &mut after);
        // Each occurrence of a variable x contributes the connectives of s(x).
        let mut expected = before.clone();
        fn occurrences(f: &Formula, x: &str) -> usize {
            match f {
                Formula::Var(v) => usize::from(v == x),
                _ => f.args().iter().map(|a| occurrences(a, x)).sum(),
            }
        }
        for (x, image) in s.iter() {
            let k = occurrences(&f, x);
            let mut inner = Default::default();
            connective_count(image, &mut inner);
            for (c, n) in inner {
                *expected.entry(c).or_default() += n * k;
            }
        }
        expected.retain(|_, n| *n > 0);
        prop_assert_eq!(after, expected);
    }

    #[test]
    fn parser_never_panics(text in "[pq ~&|()>-]{0,24}|[a-z ~&|()>-]{0,24}") {
        let _ = parse(&text, &full_signature());
    }
}

#[test]
fn precedence_and_associativity() {
    let sig = full_signature();
    let cases = [
        ("~p & q", "and(not(p), q)"),
        ("p & q | r", "or(and(p, q), r)"),
        ("p -> q -> r", "impl(p, impl(q, r))"),
        ("p | q -> r & s", "impl(or(p, q), and(r, s))"),
        ("delta ~p & circ q", "and(delta(not(p)), circ(q))"),
        ("top", "not(bot)"),
        ("B & N", "and(B, N)"),
    ];
    for (text, tree) in cases {
        assert_eq!(tree_of(&parse(text, &sig).expect(text)), tree, "{text}");
    }
}

fn tree_of(f: &Formula) -> String {
    match f {
        Formula::Var(v) => v.clone(),
        _ if f.args().is_empty() => f.head().expect("application").to_string(),
        _ => {
            let args: Vec<String> = f.args().iter().map(tree_of).collect();
            format!("{}({})", f.head().expect("application"), args.join(", "))
        }
    }
}
