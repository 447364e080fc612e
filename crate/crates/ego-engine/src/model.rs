//! Modalities, structure snapshots and events.

use std::fmt;

use ego_categorize::CategoryKey;
use ego_core::EFormula;
use serde::{Deserialize, Serialize};

/// Identifier of a modality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ModalityId(pub u32);

impl fmt::Display for ModalityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.0)
    }
}

/// One element of the structure: a formula and the category it is
/// currently assigned to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    /// Engine-wide serial of the element.
    pub id: u64,
    /// The element itself.
    pub formula: EFormula,
    /// The category the element counts for.
    pub category: CategoryKey,
}

/// A part of the structure together with the category fixed at clock 0.
#[derive(Debug, Clone)]
pub struct Modality {
    pub(crate) id: ModalityId,
    pub(crate) category: CategoryKey,
    pub(crate) properties: EFormula,
    pub(crate) initial: usize,
    pub(crate) states: Vec<Element>,
}

impl Modality {
    /// The identifier.
    pub fn id(&self) -> ModalityId {
        self.id
    }

    /// Key of the category fixed at clock 0.
    pub fn category(&self) -> &CategoryKey {
        &self.category
    }

    /// Properties of the category fixed at clock 0.
    pub fn properties(&self) -> &EFormula {
        &self.properties
    }

    /// Number of states at clock 0.
    pub fn initial_count(&self) -> usize {
        self.initial
    }

    /// Every element currently held, in arrival order.
    pub fn states(&self) -> &[Element] {
        &self.states
    }

    /// Elements assigned to the modality's own category.
    pub fn compliant_count(&self) -> usize {
        self.states.iter().filter(|e| e.category == self.category).count()
    }

    /// How many compliant states are missing compared with clock 0.
    pub fn deficit(&self) -> usize {
        self.initial.saturating_sub(self.compliant_count())
    }
}

/// The set of the modality categories, fixed at clock 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Organisation {
    formula: EFormula,
    categories: Vec<(ModalityId, CategoryKey)>,
}

impl Organisation {
    pub(crate) fn new(formula: EFormula, categories: Vec<(ModalityId, CategoryKey)>) -> Self {
        Organisation { formula, categories }
    }

    /// `{C(M₁), …, C(Mₙ)}` as a formula of properties formulas.
    pub fn formula(&self) -> &EFormula {
        &self.formula
    }

    /// The category of each modality.
    pub fn categories(&self) -> &[(ModalityId, CategoryKey)] {
        &self.categories
    }
}

/// The states of one modality at the end of a clock.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModalitySnapshot {
    /// The modality.
    pub id: ModalityId,
    /// Its states, in arrival order.
    pub states: Vec<EFormula>,
}

/// The structure at one clock.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureSnapshot {
    /// The clock.
    pub clock: u64,
    /// One entry per modality, by id.
    pub modalities: Vec<ModalitySnapshot>,
}

impl StructureSnapshot {
    /// The states of one modality.
    pub fn states(&self, id: ModalityId) -> Option<&[EFormula]> {
        self.modalities.iter().find(|m| m.id == id).map(|m| m.states.as_slice())
    }
}

/// Where an event came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EventKind {
    /// Triggered by the environment: a perception.
    Exogenous,
    /// Triggered by the individual itself, as in an emotional chain.
    Endogenous,
}

/// A change of the structure: triggers `X`, removed states `Y` and
/// emergents `Z` in one modality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Event {
    /// The affected modality.
    pub modality: ModalityId,
    /// The perturbations.
    pub triggers: Vec<EFormula>,
    /// States that disappear.
    pub removed: Vec<EFormula>,
    /// States that appear.
    pub emergents: Vec<EFormula>,
    /// Origin of the event.
    pub kind: EventKind,
}

impl Event {
    /// An exogenous event.
    pub fn exogenous(
        modality: ModalityId,
        triggers: Vec<EFormula>,
        removed: Vec<EFormula>,
        emergents: Vec<EFormula>,
    ) -> Self {
        Event {
            modality,
            triggers,
            removed,
            emergents,
            kind: EventKind::Exogenous,
        }
    }

    /// Whether the event is a perception.
    pub fn is_perception(&self) -> bool {
        self.kind == EventKind::Exogenous
    }

    /// `{{{X…}, {Y…}}, {Z…}}`.
    pub fn formula(&self) -> EFormula {
        let x = EFormula::set(self.triggers.iter().cloned());
        let y = EFormula::set(self.removed.iter().cloned());
        let z = EFormula::set(self.emergents.iter().cloned());
        EFormula::pair(EFormula::pair(x, y), z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn event_formula_shape() {
        let e = ego_core::EFormula::empty();
        let one = EFormula::singleton(e.clone());
        let ev = Event::exogenous(ModalityId(1), vec![one.clone()], vec![], vec![e.clone()]);
        assert!(ev.is_perception());
        // {{{{∅}}, ∅}, {∅}}
        assert_eq!(ev.formula(), ego_core::parse_formula("{{{{0}},0},{0}}").unwrap());
    }
}
