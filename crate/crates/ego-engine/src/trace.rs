//! The transition trace.
//!
//! Every change the engine makes is recorded as one [`TraceRecord`] and can
//! be written as JSON lines. Field names are stable:
//!
//! | field | meaning |
//! |-------|---------|
//! | `clock` | the clock the record belongs to (0 for initialisation) |
//! | `op` | the operation, see [`Op`] |
//! | `modality` | affected modality id, if any |
//! | `category` | canonical key of the affected category, if any |
//! | `label` | readable name of the category or a short description |
//! | `delta` | change of the category's homeostatic index, if any |
//! | `count` | number of elements involved, when not an index change |
//! | `archetype` | handle (`#serial Typology`) of the archetype recorded |
//! | `formulas` | canonical text of the formulas involved |
//!
//! Only records with a `delta` move the homeostatic index, so summing deltas
//! per category replays the index exactly.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

/// Operation names used in the trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    /// A modality and its category at clock 0.
    Init,
    /// Perturbations arrived and were categorised.
    Perceive,
    /// States disappeared from a modality.
    Remove,
    /// Emergents appeared in a modality.
    Emerge,
    /// An interpretation was stored or recalled for an event.
    Interpret,
    /// A modality lost every compliant state.
    Destroyed,
    /// A modality was chosen for recomposition.
    Target,
    /// A manipulation was built from scratch.
    Manipulate,
    /// A stored manipulation was reused.
    Recall,
    /// A perceived category recalled a behaviour directly.
    SymbolRecall,
    /// No manipulation could be found.
    ManipulateFailed,
    /// Factor elements were used up.
    Consume,
    /// Elements were produced.
    Produce,
    /// An element changed category.
    Genus,
    /// An emotional chain was simulated on a copy of the index.
    Simulate,
    /// An internal state was perturbed by the individual itself.
    Endogenous,
    /// A perceived category was promoted.
    Promote,
    /// End of a clock.
    Status,
}

/// One transition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRecord {
    /// Clock number.
    pub clock: u64,
    /// Operation.
    pub op: Op,
    /// Affected modality id.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modality: Option<u32>,
    /// Canonical category key.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub category: Option<String>,
    /// Readable label.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Change of the homeostatic index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<i64>,
    /// Number of elements involved.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    /// Archetype handle.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub archetype: Option<String>,
    /// Canonical formula texts.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub formulas: Vec<String>,
}

impl TraceRecord {
    /// A bare record.
    pub fn new(clock: u64, op: Op) -> Self {
        TraceRecord {
            clock,
            op,
            modality: None,
            category: None,
            label: None,
            delta: None,
            count: None,
            archetype: None,
            formulas: Vec::new(),
        }
    }

    /// One JSON line, without the newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace records always serialise")
    }
}

/// Writes records as JSON lines.
pub fn write_trace<W: Write>(records: &[TraceRecord], mut out: W) -> io::Result<()> {
    for r in records {
        writeln!(out, "{}", r.to_json())?;
    }
    out.flush()
}

/// Reads JSON lines back.
pub fn read_trace(text: &str) -> Result<Vec<TraceRecord>, serde_json::Error> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_skips_absent_fields() {
        let mut r = TraceRecord::new(3, Op::Consume);
        r.category = Some("{0}".into());
        r.delta = Some(-5);
        let line = r.to_json();
        assert_eq!(line, r#"{"clock":3,"op":"consume","category":"{0}","delta":-5}"#);
        let mut buf = Vec::new();
        write_trace(&[r.clone(), r.clone()], &mut buf).unwrap();
        assert_eq!(
            read_trace(std::str::from_utf8(&buf).unwrap()).unwrap(),
            vec![r.clone(), r]
        );
    }
}
