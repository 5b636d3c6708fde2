//! The checklist behind `fdekit repro`: every checkable claim about BD and
//! its expansions that is cheap enough to run interactively, each with its
//! observed outcome.

use crate::bd::regular::{count_strongly_regular, entry_choices, sr_decode, sr_encode, SrIndex};
use crate::bd::{named, preset, BdValue};
use crate::definability::{
    bd_preservation_criterion, definable, impl_bot_connectives, interdefinable, logic_definable_in,
    synonymous, LogicHandle,
};
use crate::laws::{classical_laws, countermodel as law_countermodel, filter_strongly_regular, table_laws};
use crate::matrix::clone::{is_simple, CloneConfig};
use crate::matrix::eval::countermodel;
use crate::matrix::Matrix;
use crate::proof::{derived_rule_check, prove, RuleId, Sequent, System};
use crate::syntax::{parse, Formula};

/// One line of the checklist.
#[derive(Debug, Clone)]
pub struct Claim {
    pub id: String,
    /// The module the claim exercises.
    pub module: &'static str,
    /// The acceptance criterion it belongs to, if any.
    pub criterion: Option<u8>,
    pub statement: String,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    pub fn line(&self) -> String {
        let cite = match self.criterion {
            Some(c) => format!("{}, criterion {c}", self.module),
            None => self.module.to_string(),
        };
        let mark = if self.pass { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("[{mark}] {} ({cite}): {}", self.id, self.statement)
        } else {
            format!("[{mark}] {} ({cite}): {} -- {}", self.id, self.statement, self.detail)
        }
    }
}

struct Sink {
    claims: Vec<Claim>,
}

impl Sink {
    fn push(&mut self, id: &str, module: &'static str, criterion: Option<u8>, statement: &str, outcome: Result<(bool, String), String>) {
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.claims.push(Claim {
            id: id.to_string(),
            module,
            criterion,
            statement: statement.to_string(),
            pass,
            detail,
        });
    }
}

fn get(name: &str) -> Result<Matrix, String> {
    preset(name).ok_or_else(|| format!("no preset `{name}`"))
}

fn formula(m: &Matrix, text: &str) -> Result<Formula, String> {
    parse(text, m.signature()).map_err(|e| e.to_string())
}

fn handle(name: &str) -> Result<LogicHandle, String> {
    LogicHandle::preset(name).ok_or_else(|| format!("no preset `{name}`"))
}

/// Runs every claim, in a fixed order.
pub fn claims() -> Vec<Claim> {
    let mut s = Sink { claims: Vec::new() };
    let cfg = CloneConfig::from_env();

    s.push(
        "sr-count",
        "bd-family",
        Some(1),
        "there are 2^38 strongly regular four-valued matrices",
        Ok({
            let n = count_strongly_regular();
            (n == 1 << 38, n.to_string())
        }),
    );

    let synonymities: [(&str, &str, &str, &str); 11] = [
        ("syn-delta", "bd-impl-bot-delta", "delta p", "~(p -> bot)"),
        ("syn-circ", "bd-impl-bot-circ", "circ p", "((p & ~p) -> bot) & ~((p | ~p) -> bot)"),
        ("syn-cons", "bd-impl-bot-cons", "cons p", "(p & ~p) -> bot"),
        ("syn-det", "bd-impl-bot-det", "det p", "~((p | ~p) -> bot)"),
        ("syn-impl", "bd-impl-bot-delta", "p1 -> p2", "~delta p1 | p2"),
        ("syn-bot-delta", "bd-impl-bot-delta", "bot", "delta p & ~delta p"),
        ("syn-cons-delta", "bd-delta-cons-det", "cons p", "~delta (p & ~p)"),
        ("syn-det-delta", "bd-delta-cons-det", "det p", "delta (p | ~p)"),
        ("syn-delta-cons-det", "bd-delta-cons-det", "delta p", "(p | ~cons p) & det p"),
        ("syn-circ-cons-det", "bd-cons-det-circ", "circ p", "cons p & det p"),
        ("syn-bot-b-n", "bd-b-n-bot", "bot", "B & N"),
    ];
    for (id, m, a, b) in synonymities {
        let out = (|| {
            let m = get(m)?;
            let ok = synonymous(&m, &formula(&m, a)?, &formula(&m, b)?).map_err(|e| e.to_string())?;
            Ok((ok, String::new()))
        })();
        s.push(id, "definability", Some(3), &format!("{a} and {b} are synonymous in {m}"), out);
    }

    s.push(
        "confl-not-definable",
        "definability",
        Some(4),
        "conflation is not definable from {not, and, or, impl, bot}",
        (|| {
            let m = get("bd-impl-bot-confl")?;
            let v = definable(&m, "confl", &impl_bot_connectives(), &cfg).map_err(|e| e.to_string())?;
            let pres = bd_preservation_criterion(&named("confl").map_err(|e| e.to_string())?);
            Ok((!v.definable && !pres, format!("{}; preservation criterion {pres}", v.reason.as_ref().map(|r| r.to_string()).unwrap_or_default())))
        })(),
    );
    s.push(
        "circ-preserves",
        "definability",
        Some(5),
        "circ meets the preservation criterion",
        named("circ").map(|c| (bd_preservation_criterion(&c), String::new())).map_err(|e| e.to_string()),
    );
    s.push(
        "hearts-preserve",
        "definability",
        Some(5),
        "every heart_V meets the preservation criterion",
        Ok({
            let bad: Vec<String> = crate::bd::heart_family()
                .into_iter()
                .filter(|h| !bd_preservation_criterion(h))
                .map(|h| h.name)
                .collect();
            (bad.is_empty(), bad.join(", "))
        }),
    );

    let interdef: [(&str, &str, &str, &str, bool); 4] = [
        ("interdef-impl-bot-delta", "bd-impl-bot", "bd-delta", "bd-impl-bot-delta", true),
        ("interdef-delta-cons-det", "bd-delta", "bd-cons-det", "bd-delta-cons-det", true),
        ("interdef-cons-det-circ", "bd-cons-det", "bd-circ", "bd-cons-det-circ", false),
        ("interdef-impl-bot-confl", "bd-impl-bot", "bd-confl", "bd-impl-bot-confl", false),
    ];
    for (id, a, b, common, expected) in interdef {
        let out = (|| {
            let r = interdefinable(&handle(a)?, &handle(b)?, &get(common)?, &cfg).map_err(|e| e.to_string())?;
            let last = r.verdicts.last().map(|(d, c, v)| format!("last check {d} {c}: {}", v.definable));
            Ok((r.holds == expected, last.unwrap_or_default()))
        })();
        let rel = if expected { "are" } else { "are not" };
        s.push(id, "definability", Some(6), &format!("{a} and {b} {rel} interdefinable"), out);
    }
    let one_way: [(&str, &str, &str, &str); 2] = [
        ("circ-in-impl-bot", "bd-circ", "bd-impl-bot", "bd-impl-bot-circ"),
        ("impl-bot-in-b-n", "bd-impl-bot", "bd-b-n", "bd-b-n-bot"),
    ];
    for (id, a, b, common) in one_way {
        let out = (|| {
            let r = logic_definable_in(&handle(a)?, &handle(b)?, &get(common)?, &cfg).map_err(|e| e.to_string())?;
            Ok((r.holds, String::new()))
        })();
        s.push(id, "definability", Some(6), &format!("{a} is definable in {b}"), out);
    }
    s.push(
        "bot-from-b-n",
        "definability",
        Some(6),
        "bot is definable from {and, B, N}",
        (|| {
            let m = get("bd-b-n-bot")?;
            let v = definable(&m, "bot", &["and", "B", "N"], &cfg).map_err(|e| e.to_string())?;
            let w = v.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            Ok((v.definable, w))
        })(),
    );

    s.push(
        "bd-simple",
        "matrix-core",
        Some(9),
        "the BD matrix is simple",
        Ok({
            let (simple, seps) = is_simple(&crate::bd::bd_matrix());
            (simple && seps.len() == 6, format!("{} separators", seps.len()))
        }),
    );

    let absurd: [(&str, &str, &str, &str); 2] = [
        ("absurdity", "p, ~p |- bot", "p↦b", "A, ~A entails bot fails in BD and holds classically"),
        ("excluded-middle", "|- p | ~p", "p↦n", "A | ~A is not valid in BD and is valid classically"),
    ];
    for (id, seq, cm, text) in absurd {
        let out = (|| {
            let sq = Sequent::parse(seq).map_err(|e| e.to_string())?;
            let bd = get("bd-impl-bot")?;
            let found = countermodel(&bd, &sq.left_vec(), &sq.right_vec())
                .map_err(|e| e.to_string())?
                .map(|a| a.display(&bd).to_string())
                .unwrap_or_default();
            let ok = prove(&sq, System::Bd).is_none() && prove(&sq, System::Cl).is_some() && found == cm;
            Ok((ok, format!("countermodel {found}")))
        })();
        s.push(id, "proof", Some(8), text, out);
    }

    for rule in RuleId::ALL.into_iter().filter(|r| r.is_negated_table_rule()) {
        let out = derived_rule_check(rule, System::Cl)
            .map(|d| (d.derivable(), String::new()))
            .map_err(|e| e.to_string());
        s.push(
            &format!("derived-{}", rule.name()),
            "proof",
            None,
            &format!("{} is derivable classically from plain negation", rule.name()),
            out,
        );
    }
    for rule in [RuleId::NotL, RuleId::NotR] {
        let out = derived_rule_check(rule, System::Bd)
            .map(|d| (!d.derivable(), String::new()))
            .map_err(|e| e.to_string());
        s.push(
            &format!("not-derived-{}", rule.name()),
            "proof",
            None,
            &format!("{} is not derivable in BD", rule.name()),
            out,
        );
    }

    s.push(
        "negation-gap",
        "bd-family",
        None,
        "p does not entail ~p nor ~p entail p under every admissible negation",
        (|| {
            let bd = sr_encode(&get("bd-impl-bot")?).map_err(|e| e.to_string())?;
            let (p, np) = (Formula::var("p"), Formula::not(Formula::var("p")));
            // Only the two free negation entries matter here.
            let mut ok = true;
            for bits in 0..4u64 {
                let m = sr_decode(SrIndex::new(bd.get() & !3 | bits).map_err(|e| e.to_string())?);
                let fwd = countermodel(&m, std::slice::from_ref(&p), std::slice::from_ref(&np)).map_err(|e| e.to_string())?;
                let bwd = countermodel(&m, std::slice::from_ref(&np), std::slice::from_ref(&p)).map_err(|e| e.to_string())?;
                ok &= fwd.is_some() && bwd.is_some();
            }
            let choices = entry_choices("not", &[BdValue::B]).len() * entry_choices("not", &[BdValue::N]).len();
            Ok((ok, format!("{choices} negation tables checked")))
        })(),
    );

    let bd = get("bd-impl-bot");
    for law in table_laws() {
        let out = bd.as_ref().map_err(Clone::clone).and_then(|m| {
            let cm = law_countermodel(m, &law).map_err(|e| e.to_string())?;
            Ok((cm.is_none(), cm.map(|a| format!("countermodel {}", a.display(m))).unwrap_or_default()))
        });
        s.push(&format!("law-{}", law.name), "laws", Some(2), &format!("{law} holds in BD"), out);
    }
    for law in classical_laws() {
        let out = bd.as_ref().map_err(Clone::clone).and_then(|m| {
            let cm = law_countermodel(m, &law).map_err(|e| e.to_string())?;
            Ok(match cm {
                Some(a) => (true, format!("countermodel {}", a.display(m))),
                None => (false, "holds with top read as ~bot".to_string()),
            })
        });
        s.push(&format!("fails-{}", law.name), "laws", None, &format!("{law} fails in BD"), out);
    }
    s.push(
        "laws-unique",
        "laws",
        Some(2),
        "BD is the only strongly regular matrix satisfying all thirteen laws",
        (|| {
            let r = filter_strongly_regular(&table_laws());
            let bd = sr_encode(&get("bd-impl-bot")?).map_err(|e| e.to_string())?;
            Ok((r.count() == 1 && r.contains(bd), format!("{} survivors", r.count())))
        })(),
    );

    s.claims
}
