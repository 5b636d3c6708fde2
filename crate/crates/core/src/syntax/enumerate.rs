use std::collections::BTreeSet;

use super::{Formula, Signature};

/// Every formula over `sig` and `vars` of depth at most `max_depth`, in
/// canonical order. Variables and constants have depth 0.
pub fn formulas_up_to_depth(sig: &Signature, vars: &[&str], max_depth: usize) -> Vec<Formula> {
    let mut level: BTreeSet<Formula> = vars.iter().map(|v| Formula::var(*v)).collect();
    for (name, arity) in sig.iter() {
        if arity == 0 {
            level.insert(Formula::constant(name));
        }
    }
    for _ in 0..max_depth {
        let prev: Vec<Formula> = level.iter().cloned().collect();
        for (name, arity) in sig.iter() {
            if arity == 0 {
                continue;
            }
            let n = prev.len();
            for k in 0..n.pow(arity as u32) {
                let args = (0..arity)
                    .map(|i| prev[k / n.pow((arity - 1 - i) as u32) % n].clone())
                    .collect();
                level.insert(Formula::app(name, args));
            }
        }
    }
    level.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let sig = Signature::bd_impl_bot();
        // p, q, bot; then 3 negations and 27 binary applications.
        assert_eq!(formulas_up_to_depth(&sig, &["p", "q"], 0).len(), 3);
        assert_eq!(formulas_up_to_depth(&sig, &["p", "q"], 1).len(), 33);
        assert_eq!(formulas_up_to_depth(&sig, &["p", "q"], 2).len(), 33 + 33 + 3 * 33 * 33 - 3 - 27);
        let bd = formulas_up_to_depth(&Signature::bd(), &["p"], 2);
        assert!(bd.iter().all(|f| f.depth() <= 2));
        assert_eq!(bd.len(), 4 + 4 + 2 * 16 - 3);
    }
}
