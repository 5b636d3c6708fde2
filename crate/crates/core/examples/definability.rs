//! Term functions, synonymity and connective definability.

use fdekit::bd::preset;
use fdekit::definability::{definable, synonymous};
use fdekit::matrix::clone::{is_simple, term_functions, CloneConfig};
use fdekit::syntax::{parse, print};

fn main() {
    let cfg = CloneConfig::from_env();

    let bd = preset("bd").expect("preset");
    let unary = term_functions(&bd, 1, &["not", "and", "or"], &cfg).expect("clone");
    println!("BD has {} unary term functions:", unary.len());
    for f in unary.iter() {
        let row: Vec<&str> = f.table.iter().map(|&v| bd.value_names()[v as usize].as_str()).collect();
        println!("  {}  {}", row.join(" "), print(&f.witness));
    }
    let binary = term_functions(&bd, 2, &["not", "and", "or"], &cfg).expect("clone");
    println!("and {} binary ones", binary.len());

    let (simple, separators) = is_simple(&bd);
    println!("\nBD simple: {simple}");
    for ((x, y), f) in &separators {
        println!("  {} vs {}: {}", bd.name_of(*x), bd.name_of(*y), print(&f.witness));
    }

    let m = preset("bd-impl-bot-delta").expect("preset");
    let sig = m.signature();
    let delta = parse("delta p", sig).expect("parses");
    let via_impl = parse("~(p -> bot)", sig).expect("parses");
    println!(
        "\n{} synonymous with {}: {}",
        print(&delta),
        print(&via_impl),
        synonymous(&m, &delta, &via_impl).expect("simple matrix")
    );

    let base = ["not", "and", "or", "impl", "bot"];
    for (matrix, target) in [("bd-impl-bot-delta", "delta"), ("bd-impl-bot-circ", "circ"), ("bd-impl-bot-confl", "confl")] {
        let m = preset(matrix).expect("preset");
        let v = definable(&m, target, &base, &cfg).expect("definability");
        match (&v.witness, &v.reason) {
            (Some(w), _) => println!("{target} from implication and falsity: {}", print(w)),
            (None, Some(r)) => println!("{target} from implication and falsity: no, {r}"),
            (None, None) => unreachable!(),
        }
    }
}
