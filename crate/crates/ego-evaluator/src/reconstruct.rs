//! Recovering the arguments of an equality evaluator.
//!
//! Every equality evaluator contains the equivalence `{x ≡ y}` of its two
//! arguments, either as the whole formula or as a conjunct of its top-level
//! conjunction. The candidates read off those positions are confirmed by
//! rebuilding the evaluator.

use ego_core::sugar::equiv;
use ego_core::EFormula;

use crate::evaluator::Evaluator;

/// Argument pairs `(x, y)` whose equivalence `{{{x,{y}},{y,{x}}}}` could be
/// spelled by `e`.
fn equiv_candidates(e: &EFormula, out: &mut Vec<(EFormula, EFormula)>) {
    let [body] = e.members() else { return };
    for implication in body.members() {
        // An implication {a, {b}}; it collapses to {{b}} when a = {b}.
        for a in implication.members() {
            for nb in implication.members() {
                if let [b] = nb.members() {
                    if a != nb || implication.len() == 1 {
                        out.push((a.clone(), b.clone()));
                        out.push((b.clone(), a.clone()));
                    }
                }
            }
        }
    }
}

/// The argument pairs whose equality evaluator, built by `ev`, is exactly
/// `e`. Equivalence is symmetric, so an evaluator of two single-member
/// containers is recovered in both orders; otherwise the pair is unique.
pub fn reconstruct_arguments_with(ev: &mut Evaluator, e: &EFormula) -> Vec<(EFormula, EFormula)> {
    let mut candidates = Vec::new();
    equiv_candidates(e, &mut candidates);
    if let [conjunction] = e.members() {
        for conjunct in conjunction.members() {
            equiv_candidates(conjunct, &mut candidates);
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates.retain(|(x, y)| {
        // Cheap pre-filter before rebuilding the whole evaluator.
        let head = equiv(x.clone(), y.clone());
        (head == *e || e.members().first().is_some_and(|c| c.contains(&head)))
            && ev.equality(x, y).is_ok_and(|built| built.formula() == *e)
    });
    candidates
}

/// [`reconstruct_arguments_with`] using a default builder.
pub fn reconstruct_arguments(e: &EFormula) -> Vec<(EFormula, EFormula)> {
    reconstruct_arguments_with(&mut Evaluator::new(), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ego_core::parse_formula;

    fn f(s: &str) -> EFormula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn round_trips() {
        for (x, y) in [
            ("{0}", "{0,{0}}"),
            ("{{0}}", "{0,{{0}}}"),
            ("{0,{0}}", "{{0},0}"),
            ("{{{0}}}", "0"),
        ] {
            let (x, y) = (f(x), f(y));
            let e = Evaluator::new().equality(&x, &y).unwrap().formula();
            assert!(reconstruct_arguments(&e).contains(&(x, y)));
        }
    }

    #[test]
    fn base_case_is_symmetric() {
        let e = Evaluator::new().equality(&f("0"), &f("{0}")).unwrap().formula();
        assert_eq!(reconstruct_arguments(&e), vec![(f("0"), f("{0}")), (f("{0}"), f("0"))]);
    }

    #[test]
    fn non_evaluators_have_no_arguments() {
        assert!(reconstruct_arguments(&f("{0,{0}}")).is_empty());
        assert!(reconstruct_arguments(&f("0")).is_empty());
    }
}
