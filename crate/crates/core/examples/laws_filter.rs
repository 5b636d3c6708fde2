//! Which strongly regular matrices satisfy the distinguishing laws?
//!
//! Run with `cargo run --release --example laws_filter`.

use fdekit::bd::{preset, sr_decode, sr_encode};
use fdekit::laws::{filter_with_stats, separating_entailment, table_laws, undetermined_entries, verify};
use fdekit::syntax::{formulas_up_to_depth, print, Signature};

fn main() {
    let laws = table_laws();
    for law in &laws {
        println!("{law}");
    }
    let (result, stats) = filter_with_stats(&laws);
    println!(
        "\n{} equations, {} forced entries, {} branches",
        stats.equations, stats.forced, stats.branches
    );
    println!("survivors: {}", result.count());

    let bd = sr_encode(&preset("bd-impl-bot").expect("preset")).expect("member");
    println!("BD with implication and falsity is index {bd}: included = {}", result.contains(bd));

    let open = undetermined_entries(&result);
    if open.is_empty() {
        println!("\nthe laws determine every entry:\n{}", sr_decode(bd));
    } else {
        println!("entries left open by the laws: {}", open.join(", "));
    }

    match verify(&result, &laws, 100_000) {
        Some(v) => println!("verified {} members directly, {} failures", v.checked, v.failures.len()),
        None => println!("too many members to verify one by one"),
    }

    // Distinct matrices may still induce the same logic. Look for an
    // entailment telling each survivor apart from BD.
    let corpus = formulas_up_to_depth(&Signature::bd_impl_bot(), &["p", "q"], 2);
    let bd_matrix = sr_decode(bd);
    let mut same_logic = 0;
    for i in result.indices(100_000).unwrap_or_default() {
        if i == bd {
            continue;
        }
        match separating_entailment(&sr_decode(i), &bd_matrix, &corpus).expect("signature") {
            Some(sep) => {
                let premise = sep.premise.as_ref().map(print).unwrap_or_default();
                println!(
                    "{i}: `{premise} |- {}` is {} there and {} in BD",
                    print(&sep.conclusion),
                    if sep.valid_in_first { "valid" } else { "invalid" },
                    if sep.valid_in_first { "invalid" } else { "valid" },
                );
            }
            None => same_logic += 1,
        }
    }
    println!("survivors not separated from BD on the corpus: {same_logic}");
}
