//! `ego eval`: build and classify a relational evaluator.

use std::fmt::Write;

use ego_core::parse_formula;
use ego_evaluator::{intersection, union, Evaluator, Verification};

use crate::error::CliError;

/// The relation to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a = b`.
    Eq,
    /// `a ∈ b`.
    In,
    /// `a ⊆ b`.
    Subset,
    /// `a ∩ b`, checked by its defining formula.
    Cap,
    /// `a ∪ b`, checked by its defining formula.
    Cup,
}

/// Parses both arguments, builds the evaluator and returns the printout.
pub fn eval(relation: Relation, a: &str, b: &str, show_expansion: bool) -> Result<String, CliError> {
    let x = parse_formula(a)?;
    let y = parse_formula(b)?;
    let mut out = String::new();
    let mut ev = Evaluator::new();
    let expansion = match relation {
        Relation::Eq => Some(ev.equality(&x, &y)?),
        Relation::In => Some(ev.membership(&x, &y)?),
        Relation::Subset => Some(ev.subset(&x, &y)?),
        Relation::Cap | Relation::Cup => None,
    };
    if let Some(e) = expansion {
        writeln!(out, "evaluator: {e}").unwrap();
        if show_expansion {
            writeln!(out, "expansion: {}", e.formula().pretty()).unwrap();
        }
        writeln!(out, "class: {:?}", e.classify()).unwrap();
        return Ok(out);
    }
    let (result, check) = if relation == Relation::Cap {
        let r = intersection(&x, &y, Verification::Check)?;
        (r.formula.clone(), ev.intersection_check(&x, &y, &r.formula)?)
    } else {
        let r = union(&x, &y, Verification::Check)?;
        (r.formula.clone(), ev.union_check(&x, &y, &r.formula)?)
    };
    writeln!(out, "result: {}", result.pretty()).unwrap();
    writeln!(out, "check: {check}").unwrap();
    if show_expansion {
        writeln!(out, "expansion: {}", check.formula().pretty()).unwrap();
    }
    writeln!(out, "class: {:?}", check.classify()).unwrap();
    Ok(out)
}
