//! Encodings between external data and nested-set terms.
//!
//! * [`ordered_pair`] and [`ordered_tuple`]: `⟨x, y⟩ = {{x}, {x, y}}`, folded
//!   to the left for longer tuples.
//! * [`attractor_encode`]: one assembly per frequency distribution, built
//!   from its local attractors and relative maxima.
//! * [`EBinary`]: natural numbers as sets of nested digit atoms, read back
//!   with a nested-loop summation.
//!
//! ```
//! use ego_codec::EBinary;
//!
//! let five = EBinary::from_bits("101").unwrap();
//! assert_eq!(five.value().unwrap(), 5);
//! assert_eq!(EBinary::from_formula(five.formula()).unwrap().bits(), "101");
//! ```

#![warn(missing_docs)]

mod attractor;
mod ebinary;
mod error;
mod pair;

pub use attractor::{attractor_encode, FrequencyDistribution};
pub use ebinary::{decode_by_iteration, digit_atom, ebinary_decode, ebinary_encode, EBinary};
pub use error::CodecError;
pub use pair::{ordered_pair, ordered_tuple, unpair, untuple};
