//! Which expansions of BD express the same connectives?

use fdekit::bd::preset;
use fdekit::definability::{common_preset, interdefinable, logic_definable_in, LogicHandle};
use fdekit::matrix::clone::CloneConfig;
use fdekit::syntax::print;

fn main() {
    let cfg = CloneConfig::from_env();
    let pairs = [
        ("bd-impl-bot", "bd-delta"),
        ("bd-delta", "bd-cons-det"),
        ("bd-cons-det", "bd-circ"),
        ("bd-impl-bot", "bd-confl"),
    ];
    for (a, b) in pairs {
        let common_name = common_preset(a, b).expect("registered");
        let common = preset(common_name).expect("preset");
        let (ha, hb) = (LogicHandle::preset(a).expect("a"), LogicHandle::preset(b).expect("b"));
        let r = interdefinable(&ha, &hb, &common, &cfg).expect("query");
        println!("{a} and {b} (inside {common_name}): {}", if r.holds { "interdefinable" } else { "not interdefinable" });
        for (dir, conn, v) in &r.verdicts {
            let how = v.witness.as_ref().map(print).unwrap_or_else(|| "not definable".into());
            println!("  {dir} {conn}: {how}");
        }
    }

    // One direction only.
    for (a, b, common) in [("bd-circ", "bd-impl-bot", "bd-impl-bot-circ"), ("bd-impl-bot", "bd-b-n", "bd-b-n-bot")] {
        let (ha, hb) = (LogicHandle::preset(a).expect("a"), LogicHandle::preset(b).expect("b"));
        let r = logic_definable_in(&ha, &hb, &preset(common).expect("preset"), &cfg).expect("query");
        println!("{a} definable in {b}: {}", r.holds);
    }
}
