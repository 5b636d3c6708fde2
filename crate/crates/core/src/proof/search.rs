use std::collections::{BTreeSet, HashMap, HashSet};

use crate::syntax::Formula;

use super::rules::{RuleId, RuleSet, Side};
use super::{Derivation, ProofError, Sequent, System};

/// Backward proof search with a grow-only memo of failed sequents.
///
/// Every premise the search builds strictly contains its conclusion and
/// stays inside the closure of the goal, so there are no cycles and a
/// memoized failure is a failure outright. The memo can therefore be kept
/// across goals: reuse one `Prover` for a batch of sequents.
///
/// Internally formulas are interned; a sequent is a pair of sorted id lists.
#[derive(Debug, Clone)]
pub struct Prover {
    rules: RuleSet,
    hypotheses: Vec<Key>,
    cut_formulas: Vec<Formula>,
    failed: HashSet<Key>,
    arena: Arena,
}

type Id = u32;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
struct Key {
    left: Vec<Id>,
    right: Vec<Id>,
}

impl Key {
    fn contains(&self, side: Side, id: Id) -> bool {
        match side {
            Side::Left => self.left.binary_search(&id).is_ok(),
            Side::Right => self.right.binary_search(&id).is_ok(),
        }
    }

    fn is_subkey_of(&self, other: &Key) -> bool {
        sorted_subset(&self.left, &other.left) && sorted_subset(&self.right, &other.right)
    }

    fn extend(&self, left: &[Id], right: &[Id]) -> Key {
        let mut out = self.clone();
        for &i in left {
            if let Err(pos) = out.left.binary_search(&i) {
                out.left.insert(pos, i);
            }
        }
        for &i in right {
            if let Err(pos) = out.right.binary_search(&i) {
                out.right.insert(pos, i);
            }
        }
        out
    }
}

fn sorted_subset(a: &[Id], b: &[Id]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// A derivation over interned sequents, converted once the search is done.
#[derive(Debug)]
struct Node {
    key: Key,
    rule: RuleId,
    principal: Option<Id>,
    premises: Vec<Node>,
}

/// A logical rule instance on an interned principal.
#[derive(Debug, Clone)]
struct Step {
    rule: RuleId,
    premises: Vec<(Vec<Id>, Vec<Id>)>,
}

#[derive(Debug, Clone)]
struct Arena {
    bot: Id,
    top: Id,
    formulas: Vec<Formula>,
    index: HashMap<Formula, Id>,
    /// Applicable steps per id, on the left and on the right.
    steps: Vec<[Vec<Step>; 2]>,
}

impl Arena {
    fn new(rules: RuleSet) -> Self {
        let mut a = Arena {
            bot: 0,
            top: 0,
            formulas: Vec::new(),
            index: HashMap::new(),
            steps: Vec::new(),
        };
        a.bot = a.intern(&Formula::bot(), rules);
        a.top = a.intern(&Formula::top(), rules);
        a
    }

    fn intern(&mut self, f: &Formula, rules: RuleSet) -> Id {
        if let Some(&i) = self.index.get(f) {
            return i;
        }
        let id = self.formulas.len() as Id;
        self.formulas.push(f.clone());
        self.index.insert(f.clone(), id);
        self.steps.push([Vec::new(), Vec::new()]);
        let mut steps: [Vec<Step>; 2] = [Vec::new(), Vec::new()];
        for rule in rules.iter() {
            if rule.is_axiom() {
                continue;
            }
            let (Some(side), Some(parts)) = (rule.side(), rule.decompose(f)) else {
                continue;
            };
            let premises = parts
                .into_iter()
                .map(|(l, r)| {
                    let l = l.iter().map(|g| self.intern(g, rules)).collect();
                    let r = r.iter().map(|g| self.intern(g, rules)).collect();
                    (l, r)
                })
                .collect();
            steps[side as usize].push(Step { rule, premises });
        }
        self.steps[id as usize] = steps;
        id
    }

    fn formula(&self, id: Id) -> &Formula {
        &self.formulas[id as usize]
    }

    fn key(&mut self, s: &Sequent, rules: RuleSet) -> Key {
        let mut left: Vec<Id> = s.left.iter().map(|f| self.intern(f, rules)).collect();
        let mut right: Vec<Id> = s.right.iter().map(|f| self.intern(f, rules)).collect();
        left.sort_unstable();
        right.sort_unstable();
        Key { left, right }
    }

    fn sequent(&self, k: &Key) -> Sequent {
        Sequent::new(
            k.left.iter().map(|&i| self.formula(i).clone()),
            k.right.iter().map(|&i| self.formula(i).clone()),
        )
    }

    fn derivation(&self, n: Node) -> Derivation {
        Derivation {
            conclusion: self.sequent(&n.key),
            rule: n.rule,
            principal: n.principal.map(|i| self.formula(i).clone()),
            premises: n.premises.into_iter().map(|p| self.derivation(p)).collect(),
        }
    }

    /// Ids of one side in canonical formula order.
    fn ordered(&self, ids: &[Id]) -> Vec<Id> {
        let mut v = ids.to_vec();
        v.sort_by(|a, b| self.formula(*a).cmp(self.formula(*b)));
        v
    }
}

impl Prover {
    /// Cut-free search with the rules of `system`.
    pub fn new(system: System) -> Self {
        Prover::with_rules(RuleSet::for_system(system).without(RuleId::Cut))
    }

    pub fn with_rules(rules: RuleSet) -> Self {
        Prover {
            rules,
            hypotheses: Vec::new(),
            cut_formulas: Vec::new(),
            failed: HashSet::new(),
            arena: Arena::new(rules),
        }
    }

    /// Sequents that close a branch whenever they are contained in it.
    pub fn hypotheses(mut self, hyps: Vec<Sequent>) -> Self {
        let rules = self.rules;
        self.hypotheses = hyps.iter().map(|h| self.arena.key(h, rules)).collect();
        self.failed.clear();
        self
    }

    /// Formulas the search may cut on, tried after every other rule.
    pub fn cut_on(mut self, formulas: Vec<Formula>) -> Self {
        self.cut_formulas = formulas;
        self.failed.clear();
        self
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    /// Number of sequents known to be unprovable.
    pub fn memo_len(&self) -> usize {
        self.failed.len()
    }

    pub fn prove(&mut self, s: &Sequent) -> Option<Derivation> {
        let rules = self.rules;
        let key = self.arena.key(s, rules);
        let cuts: Vec<Id> = self
            .cut_formulas
            .clone()
            .iter()
            .map(|f| self.arena.intern(f, rules))
            .collect();
        let node = self.search(&key, &cuts)?;
        Some(self.arena.derivation(node))
    }

    fn search(&mut self, s: &Key, cuts: &[Id]) -> Option<Node> {
        if self.failed.contains(s) {
            return None;
        }
        if let Some(d) = self.axiom(s) {
            return Some(d);
        }
        let order: Vec<(Side, Id)> = self
            .arena
            .ordered(&s.left)
            .into_iter()
            .map(|i| (Side::Left, i))
            .chain(self.arena.ordered(&s.right).into_iter().map(|i| (Side::Right, i)))
            .collect();
        for arity in [1, 2] {
            for &(side, id) in &order {
                let count = self.arena.steps[id as usize][side as usize].len();
                for k in 0..count {
                    let step = &self.arena.steps[id as usize][side as usize][k];
                    if step.premises.len() != arity {
                        continue;
                    }
                    let rule = step.rule;
                    let premises: Vec<Key> = step.premises.iter().map(|(l, r)| s.extend(l, r)).collect();
                    if premises.iter().any(|p| p == s) {
                        continue;
                    }
                    if let Some(subs) = self.all(&premises, cuts) {
                        return Some(Node {
                            key: s.clone(),
                            rule,
                            principal: Some(id),
                            premises: subs,
                        });
                    }
                }
            }
        }
        for &a in cuts {
            if s.contains(Side::Left, a) || s.contains(Side::Right, a) {
                continue;
            }
            let premises = [s.extend(&[], &[a]), s.extend(&[a], &[])];
            if let Some(subs) = self.all(&premises, cuts) {
                return Some(Node {
                    key: s.clone(),
                    rule: RuleId::Cut,
                    principal: Some(a),
                    premises: subs,
                });
            }
        }
        self.failed.insert(s.clone());
        None
    }

    fn all(&mut self, premises: &[Key], cuts: &[Id]) -> Option<Vec<Node>> {
        let mut subs = Vec::with_capacity(premises.len());
        for p in premises {
            subs.push(self.search(p, cuts)?);
        }
        Some(subs)
    }

    fn axiom(&self, s: &Key) -> Option<Node> {
        let leaf = |rule, principal: Option<Id>| Node {
            key: s.clone(),
            rule,
            principal,
            premises: vec![],
        };
        if self.rules.contains(RuleId::Id) {
            let common: Vec<Id> = s.left.iter().copied().filter(|i| s.contains(Side::Right, *i)).collect();
            if let Some(&first) = self.arena.ordered(&common).first() {
                return Some(leaf(RuleId::Id, Some(first)));
            }
        }
        let (bot, top) = (self.arena.bot, self.arena.top);
        if self.rules.contains(RuleId::BotL) && s.contains(Side::Left, bot) {
            return Some(leaf(RuleId::BotL, Some(bot)));
        }
        if self.rules.contains(RuleId::NotBotR) && s.contains(Side::Right, top) {
            return Some(leaf(RuleId::NotBotR, Some(top)));
        }
        if self.hypotheses.iter().any(|h| h.is_subkey_of(s)) {
            return Some(leaf(RuleId::Hypothesis, None));
        }
        None
    }
}

/// Cut-free backward search in `system`.
pub fn prove(s: &Sequent, system: System) -> Option<Derivation> {
    Prover::new(system).prove(s)
}

/// Outcome of testing whether a rule is derivable from the others.
#[derive(Debug, Clone)]
pub struct DerivedRule {
    pub rule: RuleId,
    pub system: System,
    /// The schematic conclusion, over fresh atoms.
    pub conclusion: Sequent,
    /// The schematic premises, used as closing leaves.
    pub hypotheses: Vec<Sequent>,
    /// The rules the derivation may use besides `Hyp`.
    pub rules: RuleSet,
    pub derivation: Option<Derivation>,
}

impl DerivedRule {
    pub fn derivable(&self) -> bool {
        self.derivation.is_some()
    }
}

/// Is `rule` derivable in `system` without itself?
///
/// The rule is instantiated with fresh atoms (`a`, `a1`, `a2` for the
/// formula parts, `g` and `d` standing for the contexts). Its premises
/// become extra axioms and the search may cut on any formula occurring in
/// them. In CL every negated rule of the BD table is withheld, so the check
/// asks whether plain negation left and right replace them.
pub fn derived_rule_check(rule: RuleId, system: System) -> Result<DerivedRule, ProofError> {
    let (a, a1, a2) = (Formula::var("a"), Formula::var("a1"), Formula::var("a2"));
    let pair = |f: fn(Formula, Formula) -> Formula| f(a1.clone(), a2.clone());
    use RuleId::*;
    let principal = match rule {
        Id => a.clone(),
        AndL | AndR => pair(Formula::and),
        OrL | OrR => pair(Formula::or),
        ImplL | ImplR => pair(Formula::implies),
        BotL => Formula::bot(),
        NotBotR => Formula::top(),
        NotNotL | NotNotR => Formula::not(Formula::not(a.clone())),
        NotAndL | NotAndR => Formula::not(pair(Formula::and)),
        NotOrL | NotOrR => Formula::not(pair(Formula::or)),
        NotImplL | NotImplR => Formula::not(pair(Formula::implies)),
        NotL | NotR => Formula::not(a.clone()),
        Cut | Hypothesis => return Err(ProofError::NotSchematic(rule.name().to_string())),
    };
    let (g, d) = (Formula::var("g"), Formula::var("d"));
    let conclusion = match (rule, rule.side()) {
        (Id, _) => Sequent::new([a.clone(), g.clone()], [d.clone(), a.clone()]),
        (_, Some(Side::Left)) => Sequent::new([principal.clone(), g.clone()], [d.clone()]),
        _ => Sequent::new([g.clone()], [d.clone(), principal.clone()]),
    };
    let hypotheses: Vec<Sequent> = rule
        .decompose(&principal)
        .unwrap_or_default()
        .into_iter()
        .map(|(l, r)| {
            Sequent::new(
                std::iter::once(g.clone()).chain(l),
                std::iter::once(d.clone()).chain(r),
            )
        })
        .collect();

    let mut rules = RuleSet::for_system(system).without(RuleId::Cut).without(rule);
    if system == System::Cl && rule.is_negated_table_rule() {
        for r in RuleId::ALL.into_iter().filter(|r| r.is_negated_table_rule()) {
            rules = rules.without(r);
        }
    }
    let cut_formulas: BTreeSet<Formula> = hypotheses
        .iter()
        .flat_map(|h| h.left.iter().chain(&h.right).cloned())
        .collect();
    let mut prover = Prover::with_rules(rules)
        .hypotheses(hypotheses.clone())
        .cut_on(cut_formulas.into_iter().collect());
    let derivation = prover.prove(&conclusion);
    let rules = if derivation.as_ref().is_some_and(|d| d.rules().contains(&Cut)) {
        rules.with(Cut)
    } else {
        rules
    };
    Ok(DerivedRule {
        rule,
        system,
        conclusion,
        hypotheses,
        rules,
        derivation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::proof::{check, check_with};

    fn seq(s: &str) -> Sequent {
        Sequent::parse(s).unwrap()
    }

    #[test]
    fn de_morgan_direction() {
        let d = prove(&seq("|- ~(p & q) -> ~p | ~q"), System::Bd).expect("provable");
        assert_eq!(check(&d, System::Bd), Ok(()));
        let used = d.rules();
        for r in [RuleId::ImplR, RuleId::NotAndL, RuleId::OrR, RuleId::Id] {
            assert!(used.contains(&r), "{r} missing from\n{}", d.render());
        }
    }

    #[test]
    fn absurdity_and_excluded_middle() {
        for s in ["p, ~p |- bot", "|- p | ~p"] {
            assert!(prove(&seq(s), System::Bd).is_none(), "{s}");
            let d = prove(&seq(s), System::Cl).expect(s);
            assert_eq!(check(&d, System::Cl), Ok(()));
            assert!(check(&d, System::Bd).is_err());
        }
    }

    #[test]
    fn axioms_close() {
        assert_eq!(prove(&seq("bot |-"), System::Bd).unwrap().rule, RuleId::BotL);
        assert_eq!(prove(&seq("|- ~bot"), System::Bd).unwrap().rule, RuleId::NotBotR);
        assert!(prove(&seq("|-"), System::Cl).is_none());
        assert!(prove(&seq("|- bot"), System::Cl).is_none());
    }

    #[test]
    fn shared_memo_is_consistent() {
        let mut shared = Prover::new(System::Bd);
        for s in ["|- p | ~p", "p |- q", "p & q |- q | r", "~~p |- p", "p -> q, p |- q", "|- p | ~p"] {
            let fresh = prove(&seq(s), System::Bd).is_some();
            assert_eq!(shared.prove(&seq(s)).is_some(), fresh, "{s}");
        }
        assert!(shared.memo_len() > 0);
    }

    #[test]
    fn negated_rules_derivable_classically() {
        for r in RuleId::ALL.into_iter().filter(|r| r.is_negated_table_rule()) {
            let out = derived_rule_check(r, System::Cl).unwrap();
            let d = out.derivation.as_ref().unwrap_or_else(|| panic!("{r} not derived"));
            assert_eq!(check_with(d, out.rules, &out.hypotheses), Ok(()), "{r}");
        }
    }

    #[test]
    fn plain_negation_not_derivable_in_bd() {
        assert!(!derived_rule_check(RuleId::NotL, System::Bd).unwrap().derivable());
        assert!(!derived_rule_check(RuleId::NotR, System::Bd).unwrap().derivable());
        assert!(derived_rule_check(RuleId::Cut, System::Bd).is_err());
    }
}
