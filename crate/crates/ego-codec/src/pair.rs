//! Ordered pairs and tuples as sets.

use ego_core::EFormula;

use crate::error::CodecError;

/// `⟨x, y⟩ = {{x}, {x, y}}`; `⟨x, x⟩` collapses to `{{x}}`.
pub fn ordered_pair(x: &EFormula, y: &EFormula) -> EFormula {
    EFormula::pair(EFormula::singleton(x.clone()), EFormula::pair(x.clone(), y.clone()))
}

/// `⟨x₁, …, xₙ⟩ = ⟨⟨x₁, …, xₙ₋₁⟩, xₙ⟩`, with `⟨x₁⟩ = x₁`.
///
/// # Panics
/// On an empty slice.
pub fn ordered_tuple(items: &[EFormula]) -> EFormula {
    let (first, rest) = items.split_first().expect("a tuple needs at least one component");
    rest.iter().fold(first.clone(), |acc, x| ordered_pair(&acc, x))
}

/// Inverse of [`ordered_pair`].
pub fn unpair(p: &EFormula) -> Result<(EFormula, EFormula), CodecError> {
    let not_a_pair = || CodecError::NotAPair(p.pretty());
    match p.members() {
        [only] => match only.members() {
            [x] => Ok((x.clone(), x.clone())),
            _ => Err(not_a_pair()),
        },
        [a, b] => {
            // The singleton {x} and the doubleton {x, y}, in either order.
            for (single, double) in [(a, b), (b, a)] {
                if let ([x], [u, v]) = (single.members(), double.members()) {
                    if u == x {
                        return Ok((x.clone(), v.clone()));
                    }
                    if v == x {
                        return Ok((x.clone(), u.clone()));
                    }
                }
            }
            Err(not_a_pair())
        }
        _ => Err(not_a_pair()),
    }
}

/// Inverse of [`ordered_tuple`] for an `n`-tuple.
pub fn untuple(t: &EFormula, n: usize) -> Result<Vec<EFormula>, CodecError> {
    assert!(n >= 1, "a tuple needs at least one component");
    let mut out = Vec::with_capacity(n);
    let mut rest = t.clone();
    for _ in 1..n {
        let (head, last) = unpair(&rest)?;
        out.push(last);
        rest = head;
    }
    out.push(rest);
    out.reverse();
    Ok(out)
}
