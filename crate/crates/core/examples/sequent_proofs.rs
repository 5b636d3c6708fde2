//! Proof search, checking and derived rules in the sequent calculus.

use fdekit::proof::{check, derived_rule_check, prove, DerivationFile, RuleId, Sequent, System};

fn main() {
    for (system, text) in [
        (System::Bd, "~(p & q) |- ~p | ~q"),
        (System::Bd, "p, p -> q |- q"),
        (System::Bd, "|- p | ~p"),
        (System::Cl, "|- p | ~p"),
        (System::Cl, "p, ~p |- bot"),
    ] {
        let s = Sequent::parse(text).expect("parses");
        match prove(&s, system) {
            Some(d) => {
                check(&d, system).expect("prover output checks");
                println!("{} proves {s} in {} steps:\n{}", system.name(), d.size(), d.render());
            }
            None => println!("{} does not prove {s}\n", system.name()),
        }
    }

    // A classical derivation is not a BD derivation.
    let s = Sequent::parse("|- p | ~p").expect("parses");
    let d = prove(&s, System::Cl).expect("classically provable");
    println!("checked as BD: {}", check(&d, System::Bd).map_or_else(|e| e.to_string(), |_| "valid".into()));

    let file = DerivationFile { system: System::Cl, derivation: d };
    let json = file.to_json();
    println!("round trip through JSON: {}", DerivationFile::from_json(&json).expect("reads").derivation == file.derivation);

    println!("\nnegated rules from plain negation:");
    for rule in RuleId::ALL.iter().filter(|r| r.is_negated_table_rule()) {
        let r = derived_rule_check(*rule, System::Cl).expect("schematic");
        println!("  {:<5} CL: {}", rule.name(), if r.derivable() { "derived" } else { "not derived" });
    }
    for rule in [RuleId::NotL, RuleId::NotR] {
        let r = derived_rule_check(rule, System::Bd).expect("schematic");
        println!("  {:<5} BD: {}", rule.name(), if r.derivable() { "derived" } else { "not derived" });
    }
}
