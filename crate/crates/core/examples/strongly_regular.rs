//! The strongly regular family of four-valued matrices.

use fdekit::bd::{count_strongly_regular, is_strongly_regular, preset, sr_decode, sr_encode, SrIndex};
use fdekit::matrix::eval::countermodel;
use fdekit::syntax::parse_sequent;

fn main() {
    println!("strongly regular matrices: {}", count_strongly_regular());

    let bd = preset("bd-impl-bot").expect("preset");
    let i = sr_encode(&bd).expect("member");
    println!("BD with implication and falsity has index {i}\n{}", sr_decode(i));

    for name in ["bd-impl-bot", "cl-impl-bot", "bd-delta"] {
        println!("{name} strongly regular: {}", is_strongly_regular(&preset(name).expect("preset")));
    }

    // Members at the two ends of the index range and in between.
    let probes = [0u64, 1, 1 << 20, 13129950543, (1 << 38) - 1];
    let tests = ["p, ~p |- q", "|- p | ~p", "p, p -> q |- q", "~~p |- p"];
    for raw in probes {
        let m = sr_decode(SrIndex::new(raw).expect("in range"));
        let verdicts: Vec<String> = tests
            .iter()
            .map(|t| {
                let (l, r) = parse_sequent(t, m.signature()).expect("parses");
                let valid = countermodel(&m, &l, &r).expect("evaluates").is_none();
                format!("{t}: {}", if valid { "valid" } else { "invalid" })
            })
            .collect();
        println!("{raw:>12}  {}", verdicts.join("; "));
    }
}
