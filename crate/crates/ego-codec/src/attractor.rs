//! Assemblies for frequency distributions.
//!
//! Frequency `fᵢ` is an *attractor of its left neighbour* when it exceeds
//! both `fᵢ₋₁` and (if present) `fᵢ₋₂`, and symmetrically on the right. A
//! frequency is a *relative maximum* when no neighbour attracts it. Each
//! position gets an assembly:
//!
//! 1. not an attractor: `{∅}`;
//! 2. attractor of the left only: `⟨Xᵢ₋₁, ∅⟩`;
//! 3. attractor of the right only: `⟨∅, Xᵢ₊₁⟩`;
//! 4. attractor of both: `⟨⟨Xᵢ₋₁, ∅⟩, ⟨∅, Xᵢ₊₁⟩⟩` if `fᵢ₋₁ ≥ fᵢ₊₁`,
//!    otherwise the two halves swapped.
//!
//! The distribution's assembly is the ordered tuple of the assemblies at the
//! relative maxima, left to right.

use ego_core::EFormula;

use crate::error::CodecError;
use crate::pair::{ordered_pair, ordered_tuple};

/// A sequence of at least two finite frequencies over contiguous intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyDistribution(Vec<f64>);

impl FrequencyDistribution {
    /// Validates the frequencies.
    pub fn new(frequencies: Vec<f64>) -> Result<Self, CodecError> {
        if frequencies.len() < 2 {
            return Err(CodecError::TooFewFrequencies(frequencies.len()));
        }
        if let Some(i) = frequencies.iter().position(|f| !f.is_finite()) {
            return Err(CodecError::NonFiniteFrequency(i));
        }
        Ok(FrequencyDistribution(frequencies))
    }

    /// The frequencies.
    pub fn frequencies(&self) -> &[f64] {
        &self.0
    }

    /// Whether `fᵢ` attracts `fᵢ₋₁` (0-based `i`).
    pub fn attracts_left(&self, i: usize) -> bool {
        let f = &self.0;
        i >= 1 && f[i] > f[i - 1] && (i < 2 || f[i] > f[i - 2])
    }

    /// Whether `fᵢ` attracts `fᵢ₊₁` (0-based `i`).
    pub fn attracts_right(&self, i: usize) -> bool {
        let f = &self.0;
        i + 1 < f.len() && f[i] > f[i + 1] && (i + 2 >= f.len() || f[i] > f[i + 2])
    }

    /// Whether no neighbour attracts `fᵢ`.
    pub fn is_relative_maximum(&self, i: usize) -> bool {
        let pulled_right = i + 1 < self.0.len() && self.attracts_left(i + 1);
        let pulled_left = i >= 1 && self.attracts_right(i - 1);
        !pulled_right && !pulled_left
    }

    /// 0-based positions of the relative maxima.
    pub fn relative_maxima(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.is_relative_maximum(i)).collect()
    }

    /// The assembly of every position.
    pub fn assemblies(&self) -> Vec<EFormula> {
        let f = &self.0;
        let n = f.len();
        let unit = EFormula::singleton(EFormula::empty());
        let empty = EFormula::empty();
        // An attractor only depends on strictly smaller neighbours, so
        // increasing frequency is a valid evaluation order.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| f[a].total_cmp(&f[b]));
        let mut xs: Vec<Option<EFormula>> = vec![None; n];
        for i in order {
            let get = |j: usize, xs: &[Option<EFormula>]| xs[j].clone().expect("smaller neighbour assigned first");
            let x = match (self.attracts_left(i), self.attracts_right(i)) {
                (false, false) => unit.clone(),
                (true, false) => ordered_pair(&get(i - 1, &xs), &empty),
                (false, true) => ordered_pair(&empty, &get(i + 1, &xs)),
                (true, true) => {
                    let left = ordered_pair(&get(i - 1, &xs), &empty);
                    let right = ordered_pair(&empty, &get(i + 1, &xs));
                    if f[i - 1] >= f[i + 1] {
                        ordered_pair(&left, &right)
                    } else {
                        ordered_pair(&right, &left)
                    }
                }
            };
            xs[i] = Some(x);
        }
        xs.into_iter().map(|x| x.expect("every position assigned")).collect()
    }
}

/// The assembly of a distribution: the ordered tuple of the assemblies at
/// its relative maxima (a single maximum yields its own assembly).
///
/// A constant distribution is rejected: no frequency attracts another, so
/// every position is vacuously a maximum and the encoding would carry no
/// information about the signal.
pub fn attractor_encode(d: &FrequencyDistribution) -> Result<EFormula, CodecError> {
    let f = d.frequencies();
    if f.iter().all(|&x| x == f[0]) {
        log::warn!("constant distribution has no attractors: {f:?}");
        return Err(CodecError::NoRelativeMaximum);
    }
    // The largest frequency is never attracted, so there is always a maximum.
    let maxima = d.relative_maxima();
    let xs = d.assemblies();
    let ys: Vec<EFormula> = maxima.iter().map(|&i| xs[i].clone()).collect();
    Ok(ordered_tuple(&ys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pair::unpair;
    use ego_core::parse_formula;

    fn dist(v: &[f64]) -> FrequencyDistribution {
        FrequencyDistribution::new(v.to_vec()).unwrap()
    }

    #[test]
    fn first_worked_distribution() {
        let d = dist(&[1.0, 3.0, 5.0, 2.0, 4.0, 1.0]);
        assert_eq!(d.relative_maxima(), vec![2, 4]);
        let xs = d.assemblies();
        let unit = parse_formula("{0}").unwrap();
        assert_eq!(xs[0], unit);
        assert_eq!(xs[3], unit);
        assert_eq!(xs[5], unit);
        assert_eq!(xs[1], parse_formula("{{{0}},{{0},0}}").unwrap());
        assert_eq!(xs[4], parse_formula("{{0},{0,{0}}}").unwrap());
        let x = attractor_encode(&d).unwrap();
        assert_eq!(unpair(&x).unwrap(), (xs[2].clone(), xs[4].clone()));
    }

    #[test]
    fn second_and_third_shapes() {
        // Maxima at the first, third and sixth positions; the third attracts
        // both neighbours with the larger one on its left.
        let d = dist(&[4.0, 2.0, 6.0, 1.0, 1.0, 5.0]);
        assert_eq!(d.relative_maxima(), vec![0, 2, 5]);
        assert!(d.attracts_left(2) && d.attracts_right(2) && d.attracts_left(5));
        // Maxima at the first, third and fifth; the fifth attracts both with
        // the larger one on its right, so its halves are swapped.
        let d = dist(&[5.0, 1.0, 3.0, 1.0, 6.0, 2.0]);
        assert_eq!(d.relative_maxima(), vec![0, 2, 4]);
        let xs = d.assemblies();
        let unit = EFormula::singleton(EFormula::empty());
        assert_eq!(xs[0], ordered_pair(&EFormula::empty(), &unit));
        assert_eq!(xs[2], unit);
        let right = ordered_pair(&EFormula::empty(), &xs[5]);
        let left = ordered_pair(&xs[3], &EFormula::empty());
        assert_eq!(xs[4], ordered_pair(&right, &left));
    }

    #[test]
    fn single_maximum_is_not_wrapped() {
        let d = dist(&[1.0, 2.0, 3.0, 2.0]);
        let xs = d.assemblies();
        assert_eq!(d.relative_maxima().len(), 1);
        let m = d.relative_maxima()[0];
        assert_eq!(attractor_encode(&d).unwrap(), xs[m]);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(
            FrequencyDistribution::new(vec![1.0]),
            Err(CodecError::TooFewFrequencies(1))
        );
        assert_eq!(
            FrequencyDistribution::new(vec![1.0, f64::NAN]),
            Err(CodecError::NonFiniteFrequency(1))
        );
        assert_eq!(
            attractor_encode(&dist(&[2.0, 2.0, 2.0])),
            Err(CodecError::NoRelativeMaximum)
        );
    }

    #[test]
    fn ties_take_the_left_first_branch() {
        let d = dist(&[1.0, 3.0, 1.0]);
        let xs = d.assemblies();
        let left = ordered_pair(&xs[0], &EFormula::empty());
        let right = ordered_pair(&EFormula::empty(), &xs[2]);
        assert_eq!(xs[1], ordered_pair(&left, &right));
    }
}
