//! Containers and surjective pairings between them.

use ego_core::{EFormula, ResourceError};

/// `x` if it has members, otherwise `{∅}`.
pub fn container(x: &EFormula) -> EFormula {
    if x.is_empty() {
        EFormula::singleton(EFormula::empty())
    } else {
        x.clone()
    }
}

/// Which way the underlying surjection runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Onto the container of the second argument.
    XtoY,
    /// Onto the container of the first argument; pairs are still written
    /// with the first argument's member first.
    YtoX,
}

/// One surjection between the two containers, as `(w, z)` pairs with `w`
/// from the first container and `z` from the second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    /// The pairs, in the canonical order of the surjection's domain.
    pub pairs: Vec<(EFormula, EFormula)>,
    /// Direction of the surjection.
    pub direction: Direction,
}

/// The result of [`enumerate_pairings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairings {
    /// Pairings in lexicographic order of their image choices.
    pub pairings: Vec<Pairing>,
    /// Whether enumeration stopped at the limit.
    pub truncated: bool,
    /// Exact number of pairings (saturating).
    pub total: u128,
}

/// Number of surjections from an `m`-set onto an `n`-set, `n!·S(m, n)`,
/// saturating at `u128::MAX`.
pub fn surjection_count(m: usize, n: usize) -> u128 {
    if n > m {
        return 0;
    }
    if n == 0 {
        return u128::from(m == 0);
    }
    // row[k] = surjections from an i-set onto a k-set. The i-th element
    // either takes an image no other element uses or shares one:
    // s(i, k) = k·(s(i-1, k-1) + s(i-1, k)).
    let mut row = vec![0u128; n + 1];
    row[0] = 1;
    for i in 1..=m {
        for k in (1..=n.min(i)).rev() {
            row[k] = (k as u128).saturating_mul(row[k - 1].saturating_add(row[k]));
        }
        row[0] = 0;
    }
    row[n]
}

/// The privileged direction and the two containers.
fn orient(x: &EFormula, y: &EFormula) -> (Direction, EFormula, EFormula) {
    let (cx, cy) = (container(x), container(y));
    if cx.len() >= cy.len() {
        (Direction::XtoY, cx, cy)
    } else {
        (Direction::YtoX, cx, cy)
    }
}

/// Number of pairings [`enumerate_pairings`] would produce.
pub fn pairing_count(x: &EFormula, y: &EFormula) -> u128 {
    let (cx, cy) = (container(x), container(y));
    surjection_count(cx.len().max(cy.len()), cx.len().min(cy.len()))
}

/// All surjections from the container of `x` onto that of `y`, or, when
/// there are none, from the container of `y` onto that of `x` with each
/// pair reordered so the member of `x`'s container comes first. At most
/// `limit` pairings are returned; `truncated` reports whether any were cut.
///
/// # Panics
/// If `limit` is zero.
pub fn enumerate_pairings(x: &EFormula, y: &EFormula, limit: u64) -> Pairings {
    assert!(limit > 0, "pairing limit must be positive");
    let (direction, cx, cy) = orient(x, y);
    let (source, target) = match direction {
        Direction::XtoY => (cx.members(), cy.members()),
        Direction::YtoX => (cy.members(), cx.members()),
    };
    let total = surjection_count(source.len(), target.len());
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(source.len());
    let mut hits = vec![0usize; target.len()];
    let mut uncovered = target.len();
    let mut truncated = false;
    surjections(
        source.len(),
        target.len(),
        &mut images,
        &mut hits,
        &mut uncovered,
        &mut |images| {
            if out.len() as u64 >= limit {
                truncated = true;
                return false;
            }
            let pairs = images
                .iter()
                .enumerate()
                .map(|(s, &t)| match direction {
                    Direction::XtoY => (source[s].clone(), target[t].clone()),
                    Direction::YtoX => (target[t].clone(), source[s].clone()),
                })
                .collect();
            out.push(Pairing { pairs, direction });
            true
        },
    );
    Pairings {
        pairings: out,
        truncated,
        total,
    }
}

/// Like [`enumerate_pairings`] but fails instead of truncating.
pub fn enumerate_pairings_exact(x: &EFormula, y: &EFormula, limit: u64) -> Result<Vec<Pairing>, ResourceError> {
    let total = pairing_count(x, y);
    if total > u128::from(limit) {
        return Err(ResourceError::PairingsExceeded { limit, required: total });
    }
    Ok(enumerate_pairings(x, y, limit.max(1)).pairings)
}

/// Backtracking over image choices, pruning branches that can no longer
/// cover every target. `emit` returns `false` to stop.
fn surjections(
    m: usize,
    n: usize,
    images: &mut Vec<usize>,
    hits: &mut [usize],
    uncovered: &mut usize,
    emit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let placed = images.len();
    if placed == m {
        return *uncovered > 0 || emit(images);
    }
    if m - placed < *uncovered {
        return true;
    }
    for t in 0..n {
        hits[t] += 1;
        if hits[t] == 1 {
            *uncovered -= 1;
        }
        images.push(t);
        let go_on = surjections(m, n, images, hits, uncovered, emit);
        images.pop();
        if hits[t] == 1 {
            *uncovered += 1;
        }
        hits[t] -= 1;
        if !go_on {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use ego_core::parse_formula;

    fn f(s: &str) -> EFormula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn containers() {
        assert_eq!(container(&f("0")), f("{0}"));
        assert_eq!(container(&f("{0}")), f("{0}"));
        assert_eq!(container(&f("{0,{0}}")), f("{0,{0}}"));
    }

    #[test]
    fn surjection_counts() {
        // Inclusion–exclusion: Σ (-1)^k C(n,k) (n-k)^m.
        fn oracle(m: u32, n: u32) -> i128 {
            let mut binom = 1i128;
            let mut total = 0i128;
            for k in 0..=n {
                let term = binom * i128::from(n - k).pow(m);
                total += if k % 2 == 0 { term } else { -term };
                binom = binom * i128::from(n - k) / i128::from(k + 1);
            }
            total
        }
        for m in 0..12u32 {
            for n in 0..12u32 {
                assert_eq!(
                    surjection_count(m as usize, n as usize) as i128,
                    oracle(m, n),
                    "{m}->{n}"
                );
            }
        }
        assert_eq!(surjection_count(400, 200), u128::MAX);
    }

    #[test]
    fn pairing_examples() {
        let p = enumerate_pairings(&f("{{0}}"), &f("{0,{{0}}}"), 10);
        assert_eq!(p.pairings.len(), 1);
        assert_eq!(p.pairings[0].direction, Direction::YtoX);
        assert_eq!(p.pairings[0].pairs, vec![(f("{0}"), f("0")), (f("{0}"), f("{{0}}"))]);

        let p = enumerate_pairings(&f("{0}"), &f("0"), 10);
        assert_eq!(p.pairings[0].pairs, vec![(f("0"), f("0"))]);

        let p = enumerate_pairings(&f("{0,{0}}"), &f("{{0},{{0}}}"), 10);
        assert_eq!(p.pairings.len(), 2);
        assert!(p.pairings.iter().all(|q| q.direction == Direction::XtoY));
    }

    #[test]
    fn truncation_and_exactness() {
        let x = f("{0,{0},{{0}},{{{0}}}}");
        let y = f("{0,{0},{{0}}}");
        let p = enumerate_pairings(&x, &y, 5);
        assert!(p.truncated);
        assert_eq!(p.pairings.len(), 5);
        assert_eq!(p.total, 36);
        assert!(enumerate_pairings_exact(&x, &y, 35).is_err());
        assert_eq!(enumerate_pairings_exact(&x, &y, 36).unwrap().len(), 36);
    }
}
