//! Named matrices for the logics and common expansions used throughout.

use super::{bd_matrix, expand_named};
use crate::matrix::Matrix;

/// Every preset name, in display order.
pub const PRESET_NAMES: &[&str] = &[
    "bd",
    "bd-impl-bot",
    "bd-delta",
    "bd-circ",
    "bd-cons-det",
    "bd-confl",
    "bd-b-n",
    "lp",
    "k3",
    "cl",
    "cl-impl-bot",
    "bd-impl-bot-delta",
    "bd-impl-bot-circ",
    "bd-impl-bot-cons",
    "bd-impl-bot-det",
    "bd-impl-bot-confl",
    "bd-impl-confl",
    "bd-delta-cons-det",
    "bd-cons-det-circ",
    "bd-b-n-bot",
];

/// The matrix registered under `name`.
///
/// `bd-b-n` is BD with implication and the constants `B`, `N`;
/// `bd-b-n-bot` adds falsity to it.
pub fn preset(name: &str) -> Option<Matrix> {
    let bd = bd_matrix();
    let with = |extra: &[&str]| expand_named(&bd, extra).expect("fresh canonical names");
    Some(match name {
        "bd" => bd,
        "bd-impl-bot" => with(&["impl", "bot"]),
        "bd-delta" => with(&["delta"]),
        "bd-circ" => with(&["circ"]),
        "bd-cons-det" => with(&["cons", "det"]),
        "bd-confl" => with(&["confl"]),
        "bd-b-n" => with(&["impl", "B", "N"]),
        "lp" => bd.restrict(&["t", "f", "b"]).expect("closed"),
        "k3" => bd.restrict(&["t", "f", "n"]).expect("closed"),
        "cl" => bd.restrict(&["t", "f"]).expect("closed"),
        "cl-impl-bot" => with(&["impl", "bot"]).restrict(&["t", "f"]).expect("closed"),
        "bd-impl-bot-delta" => with(&["impl", "bot", "delta"]),
        "bd-impl-bot-circ" => with(&["impl", "bot", "circ"]),
        "bd-impl-bot-cons" => with(&["impl", "bot", "cons"]),
        "bd-impl-bot-det" => with(&["impl", "bot", "det"]),
        "bd-impl-bot-confl" => with(&["impl", "bot", "confl"]),
        "bd-impl-confl" => with(&["impl", "confl"]),
        "bd-delta-cons-det" => with(&["delta", "cons", "det"]),
        "bd-cons-det-circ" => with(&["cons", "det", "circ"]),
        "bd-b-n-bot" => with(&["impl", "B", "N", "bot"]),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::clone::is_simple;

    #[test]
    fn every_preset_builds_and_is_simple() {
        for name in PRESET_NAMES {
            let m = preset(name).unwrap_or_else(|| panic!("{name}"));
            assert!(is_simple(&m).0, "{name} should be simple");
        }
        assert!(preset("nope").is_none());
    }

    #[test]
    fn sub_matrices() {
        let lp = preset("lp").unwrap();
        assert_eq!(lp.value_names(), ["t", "f", "b"]);
        assert_eq!(lp.designated_names(), ["t", "b"]);
        let k3 = preset("k3").unwrap();
        assert_eq!(k3.designated_names(), ["t"]);
        let cl = preset("cl").unwrap();
        assert_eq!(cl.size(), 2);
    }

    #[test]
    fn conflation_blocks_the_paraconsistent_restriction() {
        let m = preset("bd-confl").unwrap();
        let err = m.restrict(&["t", "f", "b"]).unwrap_err();
        assert!(err.to_string().contains("confl(b) = n"), "{err}");
    }
}
