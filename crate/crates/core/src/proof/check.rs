use std::collections::BTreeSet;
use std::fmt;

use crate::syntax::{Formula, Signature};

use super::rules::{RuleId, RuleSet, Side};
use super::{Derivation, Sequent, System};

/// Where and why a derivation fails to check. `path` lists premise indices
/// from the root to the offending node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub path: Vec<usize>,
    pub reason: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            write!(f, "at root: {}", self.reason)
        } else {
            let p: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            write!(f, "at premise path {}: {}", p.join("."), self.reason)
        }
    }
}

/// Checks `d` against the rules of `system`.
pub fn check(d: &Derivation, system: System) -> Result<(), CheckFailure> {
    check_with(d, RuleSet::for_system(system), &[])
}

/// Checks `d` against an explicit rule set. A `Hyp` leaf is correct when
/// one of `hypotheses` is contained in its conclusion.
pub fn check_with(d: &Derivation, rules: RuleSet, hypotheses: &[Sequent]) -> Result<(), CheckFailure> {
    let sig = Signature::bd_impl_bot();
    let mut path = Vec::new();
    walk(d, rules, hypotheses, &sig, &mut path)
}

fn walk(
    d: &Derivation,
    rules: RuleSet,
    hyps: &[Sequent],
    sig: &Signature,
    path: &mut Vec<usize>,
) -> Result<(), CheckFailure> {
    if let Err(reason) = node(d, rules, hyps, sig) {
        return Err(CheckFailure {
            path: path.clone(),
            reason,
        });
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        walk(p, rules, hyps, sig, path)?;
        path.pop();
    }
    Ok(())
}

fn node(d: &Derivation, rules: RuleSet, hyps: &[Sequent], sig: &Signature) -> Result<(), String> {
    let s = &d.conclusion;
    for f in s.left.iter().chain(&s.right) {
        f.check(sig).map_err(|e| format!("formula `{f}`: {e}"))?;
    }
    let rule = d.rule;
    if rule == RuleId::Hypothesis {
        if !d.premises.is_empty() {
            return Err("Hyp has no premises".into());
        }
        return if hyps.iter().any(|h| h.is_subsequent_of(s)) {
            Ok(())
        } else {
            Err("no hypothesis is contained in the conclusion".into())
        };
    }
    if !rules.contains(rule) {
        return Err(format!("rule {rule} is not admitted here"));
    }
    let expected = match rule {
        RuleId::Id | RuleId::BotL | RuleId::NotBotR => 0,
        RuleId::Cut => 2,
        _ => rule.decompose_arity(),
    };
    if d.premises.len() != expected {
        return Err(format!(
            "rule {rule} needs {expected} premise(s), found {}",
            d.premises.len()
        ));
    }
    let principal = d
        .principal
        .as_ref()
        .ok_or_else(|| format!("rule {rule} needs a principal formula"))?;
    match rule {
        RuleId::Id => {
            if s.left.contains(principal) && s.right.contains(principal) {
                Ok(())
            } else {
                Err(format!("`{principal}` is not on both sides"))
            }
        }
        RuleId::BotL | RuleId::NotBotR => {
            let on_side = match rule.side() {
                Some(Side::Left) => s.left.contains(principal),
                _ => s.right.contains(principal),
            };
            if rule.is_axiom_formula(principal) && on_side {
                Ok(())
            } else {
                Err(format!("`{principal}` is not the axiom formula of {rule} on its side"))
            }
        }
        RuleId::Cut => check_cut(s, principal, &d.premises[0].conclusion, &d.premises[1].conclusion),
        _ => check_logical(s, rule, principal, d),
    }
}

/// Premise `i` must be the conclusion with the principal formula either
/// kept or removed on its side, extended by what the rule adds. The same
/// choice applies to all premises.
fn check_logical(s: &Sequent, rule: RuleId, principal: &Formula, d: &Derivation) -> Result<(), String> {
    let side = rule.side().expect("logical rule");
    let present = match side {
        Side::Left => s.left.contains(principal),
        Side::Right => s.right.contains(principal),
    };
    if !present {
        return Err(format!("principal `{principal}` is not in the conclusion"));
    }
    let parts = rule
        .decompose(principal)
        .ok_or_else(|| format!("`{principal}` does not have the shape required by {rule}"))?;
    for keep in [true, false] {
        let ok = parts.iter().zip(&d.premises).all(|((add_l, add_r), p)| {
            let mut left = s.left.clone();
            let mut right = s.right.clone();
            if !keep {
                match side {
                    Side::Left => left.remove(principal),
                    Side::Right => right.remove(principal),
                };
            }
            left.extend(add_l.iter().cloned());
            right.extend(add_r.iter().cloned());
            p.conclusion.left == left && p.conclusion.right == right
        });
        if ok {
            return Ok(());
        }
    }
    Err(format!("premises do not match {rule} applied to `{principal}`"))
}

/// `Γ ⊢ Δ, A` and `A, Γ′ ⊢ Δ′` give `Γ ∪ Γ′ ⊢ Δ ∪ Δ′`; the cut formula may
/// or may not also occur in the conclusion contexts.
fn check_cut(s: &Sequent, a: &Formula, p1: &Sequent, p2: &Sequent) -> Result<(), String> {
    if !p1.right.contains(a) || !p2.left.contains(a) {
        return Err(format!("cut formula `{a}` missing from a premise"));
    }
    let without = |set: &BTreeSet<Formula>| {
        let mut c = set.clone();
        c.remove(a);
        c
    };
    let delta_options = [p1.right.clone(), without(&p1.right)];
    let gamma2_options = [p2.left.clone(), without(&p2.left)];
    for delta in &delta_options {
        for gamma2 in &gamma2_options {
            let left: BTreeSet<Formula> = p1.left.union(gamma2).cloned().collect();
            let right: BTreeSet<Formula> = delta.union(&p2.right).cloned().collect();
            if left == s.left && right == s.right {
                return Ok(());
            }
        }
    }
    Err(format!("premises do not combine by cut on `{a}` into the conclusion"))
}
