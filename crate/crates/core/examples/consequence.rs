//! Evaluating formulas and deciding consequence in BD and its neighbours.

use fdekit::bd::preset;
use fdekit::matrix::eval::{countermodel, equivalence_countermodel, evaluate, truth_table, Assignment};
use fdekit::syntax::{parse, parse_sequent, print};

fn main() {
    let bd = preset("bd").expect("preset");
    let sig = bd.signature();

    let f = parse("~(p & ~q)", sig).expect("parses");
    let a = Assignment::from_names(&bd, [("p", "b"), ("q", "n")]).expect("values");
    let v = evaluate(&bd, &f, &a).expect("evaluates");
    println!("{} under {} is {}", print(&f), a.display(&bd), bd.name_of(v));

    let vars = ["p".to_string()];
    let excluded = parse("p | ~p", sig).expect("parses");
    let row: Vec<&str> = truth_table(&bd, &excluded, &vars)
        .expect("evaluates")
        .into_iter()
        .map(|v| bd.name_of(v))
        .collect();
    println!("truth table of {} over t f b n: {}", print(&excluded), row.join(" "));

    // The same inferences across the four classic matrices.
    let inferences = ["p & ~p |- q", "|- p | ~p", "p, ~p | q |- q", "~(p & q) |- ~p | ~q", "p |- q | ~q"];
    for name in ["bd", "lp", "k3", "cl"] {
        let m = preset(name).expect("preset");
        println!("\n{name}:");
        for text in inferences {
            let Ok((l, r)) = parse_sequent(text, m.signature()) else {
                println!("  {text:<22} (needs implication)");
                continue;
            };
            match countermodel(&m, &l, &r).expect("evaluates") {
                None => println!("  {text:<22} valid"),
                Some(cm) => println!("  {text:<22} fails at {}", cm.display(&m)),
            }
        }
    }

    let lhs = parse("~(p | q)", sig).expect("parses");
    let rhs = parse("~p & ~q", sig).expect("parses");
    let verdict = equivalence_countermodel(&bd, &lhs, &rhs).expect("evaluates");
    println!("\n{} and {} equivalent in BD: {}", print(&lhs), print(&rhs), verdict.is_none());
}
