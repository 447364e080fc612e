//! Binary numbers as sets.
//!
//! Both digit atoms extend the common stem `R = {{∅}, ∅}`:
//!
//! * `0` is `{R, ∅}` = `{{{∅}, ∅}, ∅}`;
//! * `1` is `{R, {∅}}` = `{{{∅}, ∅}, {∅}}`.
//!
//! A digit at position `k` (counting from the right, starting at 0) is its
//! atom wrapped in `k` extra braces, and a number is the set of its wrapped
//! digits. Since position is carried by nesting depth, member order is
//! irrelevant. The value is read back with the nested-loop rule: a digit at
//! position `k` opens `k + 1` nested loops `for i in 0..=d`, the innermost
//! adding `i` to a running total, which contributes `d · 2ᵏ`.

use std::fmt;
use std::sync::OnceLock;

use ego_core::EFormula;

use crate::error::CodecError;

fn stem() -> &'static EFormula {
    static STEM: OnceLock<EFormula> = OnceLock::new();
    STEM.get_or_init(|| EFormula::pair(EFormula::singleton(EFormula::empty()), EFormula::empty()))
}

/// The digit atom `{R, ∅}` for 0 or `{R, {∅}}` for 1.
pub fn digit_atom(bit: bool) -> EFormula {
    let tail = if bit {
        EFormula::singleton(EFormula::empty())
    } else {
        EFormula::empty()
    };
    EFormula::pair(stem().clone(), tail)
}

/// Reads a wrapped digit: its position and bit.
fn read_digit(member: &EFormula) -> Result<(usize, bool), CodecError> {
    let mut k = 0;
    let mut node = member;
    while let [inner] = node.members() {
        node = inner;
        k += 1;
    }
    if *node == digit_atom(false) {
        Ok((k, false))
    } else if *node == digit_atom(true) {
        Ok((k, true))
    } else {
        Err(CodecError::MalformedAtom(member.pretty()))
    }
}

/// A number encoded as a set of wrapped digit atoms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EBinary {
    formula: EFormula,
    /// Digits, most significant first.
    bits: Vec<bool>,
}

impl EBinary {
    /// Encodes a bit string, keeping any leading zeros.
    pub fn from_bits(bits: &str) -> Result<EBinary, CodecError> {
        if bits.is_empty() {
            return Err(CodecError::EmptyBits);
        }
        let digits = bits
            .char_indices()
            .map(|(index, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                found => Err(CodecError::NotABit { index, found }),
            })
            .collect::<Result<Vec<bool>, _>>()?;
        Ok(Self::from_digits(digits))
    }

    fn from_digits(bits: Vec<bool>) -> EBinary {
        let n = bits.len();
        let formula = EFormula::set(
            bits.iter()
                .enumerate()
                .map(|(i, &b)| EFormula::wrap(digit_atom(b), n - 1 - i)),
        );
        EBinary { formula, bits }
    }

    /// Encodes a value with no leading zeros (`0` is the single digit 0).
    pub fn from_value(value: u64) -> EBinary {
        if value == 0 {
            return Self::from_digits(vec![false]);
        }
        let width = 64 - value.leading_zeros() as usize;
        Self::from_digits((0..width).rev().map(|k| value >> k & 1 == 1).collect())
    }

    /// Validates and reads an E-binary: every member must be a wrapped digit
    /// atom, and the positions must be exactly `0..n` with one digit each.
    pub fn from_formula(formula: &EFormula) -> Result<EBinary, CodecError> {
        let mut digits: Vec<Option<bool>> = Vec::new();
        for m in formula.members() {
            let (k, bit) = read_digit(m)?;
            if k >= digits.len() {
                digits.resize(k + 1, None);
            }
            if digits[k].replace(bit).is_some() {
                return Err(CodecError::DuplicatePosition(k));
            }
        }
        if digits.is_empty() {
            return Err(CodecError::MalformedAtom(formula.pretty()));
        }
        let bits = digits
            .iter()
            .enumerate()
            .rev()
            .map(|(k, d)| d.ok_or(CodecError::MissingPosition(k)))
            .collect::<Result<Vec<bool>, _>>()?;
        Ok(EBinary {
            formula: formula.clone(),
            bits,
        })
    }

    /// The set form.
    pub fn formula(&self) -> &EFormula {
        &self.formula
    }

    /// Digits as a `0`/`1` string, most significant first.
    pub fn bits(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    /// Number of digits.
    pub fn width(&self) -> usize {
        self.bits.len()
    }

    /// The encoded value, read with the nested-loop rule.
    pub fn value(&self) -> Result<u64, CodecError> {
        let n = self.bits.len();
        let mut loop_value: u64 = 0;
        for (i, &b) in self.bits.iter().enumerate() {
            let position = n - 1 - i;
            loop_value = loop_value
                .checked_add(nested_loops(u64::from(b), position as u32 + 1)?)
                .ok_or(CodecError::Overflow)?;
        }
        Ok(loop_value)
    }

    /// The next number, without leading zeros.
    pub fn increment(&self) -> Result<EBinary, CodecError> {
        let v = self.value()?.checked_add(1).ok_or(CodecError::Overflow)?;
        Ok(Self::from_value(v))
    }

    /// The ordered log form: the unwrapped atoms in digit order inside
    /// square brackets. Order matters here, so this form is only for
    /// reading and is never parsed back into state.
    pub fn shortcut(&self) -> String {
        let atoms: Vec<String> = self.bits.iter().map(|&b| digit_atom(b).pretty()).collect();
        format!("[{}]", atoms.join(", "))
    }
}

impl fmt::Display for EBinary {
    /// The digit string in square brackets, e.g. `[101]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.bits())
    }
}

/// Total added by `depth` nested loops `for i in 0..=loop_number`, the
/// innermost adding `i`. Each outer loop repeats its body `loop_number + 1`
/// times, so the body total is multiplied rather than re-run.
fn nested_loops(loop_number: u64, depth: u32) -> Result<u64, CodecError> {
    let innermost: u64 = (0..=loop_number).sum();
    (1..depth).try_fold(innermost, |acc, _| {
        acc.checked_mul(loop_number + 1).ok_or(CodecError::Overflow)
    })
}

/// Runs the nested loops literally, one iteration at a time.
pub fn decode_by_iteration(e: &EBinary) -> u64 {
    fn run(loop_number: u64, depth: u32, loop_value: &mut u64) {
        for i in 0..=loop_number {
            if depth == 1 {
                *loop_value += i;
            } else {
                run(loop_number, depth - 1, loop_value);
            }
        }
    }
    let n = e.bits.len();
    let mut loop_value = 0;
    for (i, &b) in e.bits.iter().enumerate() {
        run(u64::from(b), (n - i) as u32, &mut loop_value);
    }
    loop_value
}

/// Encodes a bit string.
pub fn ebinary_encode(bits: &str) -> Result<EBinary, CodecError> {
    EBinary::from_bits(bits)
}

/// Validates and decodes an E-binary formula.
pub fn ebinary_decode(e: &EFormula) -> Result<u64, CodecError> {
    EBinary::from_formula(e)?.value()
}
