use std::fmt;

use crate::syntax::{names, Formula};

use super::System;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    Id,
    Cut,
    AndL,
    AndR,
    OrL,
    OrR,
    ImplL,
    ImplR,
    BotL,
    NotBotR,
    NotNotL,
    NotNotR,
    NotAndL,
    NotAndR,
    NotOrL,
    NotOrR,
    NotImplL,
    NotImplR,
    NotL,
    NotR,
    /// A leaf closed by one of the extra hypotheses of a derived-rule check.
    Hypothesis,
}

impl RuleId {
    pub const ALL: [RuleId; 21] = [
        RuleId::Id,
        RuleId::Cut,
        RuleId::AndL,
        RuleId::AndR,
        RuleId::OrL,
        RuleId::OrR,
        RuleId::ImplL,
        RuleId::ImplR,
        RuleId::BotL,
        RuleId::NotBotR,
        RuleId::NotNotL,
        RuleId::NotNotR,
        RuleId::NotAndL,
        RuleId::NotAndR,
        RuleId::NotOrL,
        RuleId::NotOrR,
        RuleId::NotImplL,
        RuleId::NotImplR,
        RuleId::NotL,
        RuleId::NotR,
        RuleId::Hypothesis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Id => "Id",
            RuleId::Cut => "Cut",
            RuleId::AndL => "&L",
            RuleId::AndR => "&R",
            RuleId::OrL => "|L",
            RuleId::OrR => "|R",
            RuleId::ImplL => "->L",
            RuleId::ImplR => "->R",
            RuleId::BotL => "botL",
            RuleId::NotBotR => "~botR",
            RuleId::NotNotL => "~~L",
            RuleId::NotNotR => "~~R",
            RuleId::NotAndL => "~&L",
            RuleId::NotAndR => "~&R",
            RuleId::NotOrL => "~|L",
            RuleId::NotOrR => "~|R",
            RuleId::NotImplL => "~->L",
            RuleId::NotImplR => "~->R",
            RuleId::NotL => "~L",
            RuleId::NotR => "~R",
            RuleId::Hypothesis => "Hyp",
        }
    }

    pub fn from_name(s: &str) -> Option<RuleId> {
        Self::ALL.into_iter().find(|r| r.name() == s)
    }

    /// The rules of the BD table whose name starts with negation.
    pub fn is_negated_table_rule(self) -> bool {
        matches!(
            self,
            RuleId::NotBotR
                | RuleId::NotNotL
                | RuleId::NotNotR
                | RuleId::NotAndL
                | RuleId::NotAndR
                | RuleId::NotOrL
                | RuleId::NotOrR
                | RuleId::NotImplL
                | RuleId::NotImplR
        )
    }

    pub fn is_axiom(self) -> bool {
        matches!(self, RuleId::Id | RuleId::BotL | RuleId::NotBotR | RuleId::Hypothesis)
    }

    /// Side of the principal formula for logical rules.
    pub fn side(self) -> Option<Side> {
        use RuleId::*;
        match self {
            AndL | OrL | ImplL | BotL | NotNotL | NotAndL | NotOrL | NotImplL | NotL => Some(Side::Left),
            AndR | OrR | ImplR | NotBotR | NotNotR | NotAndR | NotOrR | NotImplR | NotR => Some(Side::Right),
            Id | Cut | Hypothesis => None,
        }
    }

    /// For a logical (non-axiom) rule and a principal formula of the right
    /// shape: the formulas each premise adds to the left and right.
    pub fn decompose(self, principal: &Formula) -> Option<Vec<(Vec<Formula>, Vec<Formula>)>> {
        use RuleId::*;
        let not = Formula::not;
        let bin = |c: &str| principal.as_binary(c).map(|(a, b)| (a.clone(), b.clone()));
        let under_not = |c: &str| {
            principal
                .as_unary(names::NOT)
                .and_then(|x| x.as_binary(c))
                .map(|(a, b)| (a.clone(), b.clone()))
        };
        Some(match self {
            AndL => {
                let (a, b) = bin(names::AND)?;
                vec![(vec![a, b], vec![])]
            }
            AndR => {
                let (a, b) = bin(names::AND)?;
                vec![(vec![], vec![a]), (vec![], vec![b])]
            }
            OrL => {
                let (a, b) = bin(names::OR)?;
                vec![(vec![a], vec![]), (vec![b], vec![])]
            }
            OrR => {
                let (a, b) = bin(names::OR)?;
                vec![(vec![], vec![a, b])]
            }
            ImplL => {
                let (a, b) = bin(names::IMPL)?;
                vec![(vec![], vec![a]), (vec![b], vec![])]
            }
            ImplR => {
                let (a, b) = bin(names::IMPL)?;
                vec![(vec![a], vec![b])]
            }
            NotNotL => {
                let a = principal.as_unary(names::NOT)?.as_unary(names::NOT)?.clone();
                vec![(vec![a], vec![])]
            }
            NotNotR => {
                let a = principal.as_unary(names::NOT)?.as_unary(names::NOT)?.clone();
                vec![(vec![], vec![a])]
            }
            NotAndL => {
                let (a, b) = under_not(names::AND)?;
                vec![(vec![not(a)], vec![]), (vec![not(b)], vec![])]
            }
            NotAndR => {
                let (a, b) = under_not(names::AND)?;
                vec![(vec![], vec![not(a), not(b)])]
            }
            NotOrL => {
                let (a, b) = under_not(names::OR)?;
                vec![(vec![not(a), not(b)], vec![])]
            }
            NotOrR => {
                let (a, b) = under_not(names::OR)?;
                vec![(vec![], vec![not(a)]), (vec![], vec![not(b)])]
            }
            NotImplL => {
                let (a, b) = under_not(names::IMPL)?;
                vec![(vec![a, not(b)], vec![])]
            }
            NotImplR => {
                let (a, b) = under_not(names::IMPL)?;
                vec![(vec![], vec![a]), (vec![], vec![not(b)])]
            }
            NotL => {
                let a = principal.as_unary(names::NOT)?.clone();
                vec![(vec![], vec![a])]
            }
            NotR => {
                let a = principal.as_unary(names::NOT)?.clone();
                vec![(vec![a], vec![])]
            }
            BotL | NotBotR | Id | Cut | Hypothesis => return None,
        })
    }

    /// Number of premises: 0 for axioms, 2 for Cut.
    pub fn decompose_arity(self) -> usize {
        use RuleId::*;
        match self {
            Id | BotL | NotBotR | Hypothesis => 0,
            AndR | OrL | ImplL | NotAndL | NotOrR | NotImplR | Cut => 2,
            _ => 1,
        }
    }

    /// Whether `f` is the axiom formula of `BotL` / `NotBotR`.
    pub fn is_axiom_formula(self, f: &Formula) -> bool {
        match self {
            RuleId::BotL => *f == Formula::bot(),
            RuleId::NotBotR => *f == Formula::top(),
            _ => false,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A set of admitted rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RuleSet(u32);

impl RuleSet {
    pub fn empty() -> Self {
        RuleSet(0)
    }

    /// Every rule of the system, Cut included.
    pub fn for_system(system: System) -> Self {
        let mut s = RuleSet::empty();
        for r in RuleId::ALL {
            let classical_only = matches!(r, RuleId::NotL | RuleId::NotR);
            if r != RuleId::Hypothesis && (system == System::Cl || !classical_only) {
                s = s.with(r);
            }
        }
        s
    }

    pub fn with(self, r: RuleId) -> Self {
        RuleSet(self.0 | 1 << r as u32)
    }

    pub fn without(self, r: RuleId) -> Self {
        RuleSet(self.0 & !(1 << r as u32))
    }

    pub fn contains(self, r: RuleId) -> bool {
        self.0 >> r as u32 & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = RuleId> {
        RuleId::ALL.into_iter().filter(move |r| self.contains(*r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(RuleId::from_name(r.name()), Some(r));
        }
        assert_eq!(RuleId::from_name("nope"), None);
    }

    #[test]
    fn rule_sets() {
        let bd = RuleSet::for_system(System::Bd);
        assert!(bd.contains(RuleId::Cut) && !bd.contains(RuleId::NotL));
        let cl = RuleSet::for_system(System::Cl);
        assert!(cl.contains(RuleId::NotL) && cl.contains(RuleId::NotR));
        assert!(!cl.contains(RuleId::Hypothesis));
        assert!(!cl.without(RuleId::Cut).contains(RuleId::Cut));
        assert_eq!(bd.iter().count(), 18);
    }

    #[test]
    fn decomposition_shapes() {
        let (p, q) = (Formula::var("p"), Formula::var("q"));
        let f = Formula::not(Formula::implies(p.clone(), q.clone()));
        assert_eq!(
            RuleId::NotImplL.decompose(&f),
            Some(vec![(vec![p.clone(), Formula::not(q.clone())], vec![])])
        );
        assert_eq!(RuleId::AndL.decompose(&f), None);
        assert_eq!(RuleId::NotL.decompose(&f).unwrap()[0].1, vec![Formula::implies(p, q)]);
    }
}
