//! Manipulations, emotional chains and symbol promotions.

use ego_categorize::CategoryKey;
use ego_core::EFormula;
use serde::Serialize;

use crate::model::ModalityId;

/// One binary step: one element of `first` and one of `second` yield one
/// element of `output`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    /// The first factor category.
    pub first: CategoryKey,
    /// The second factor category.
    pub second: CategoryKey,
    /// The produced category.
    pub output: CategoryKey,
    /// Name of the paradigma archetype holding `{{first, second}, output}`.
    pub paradigma: EFormula,
}

/// A manipulation: how to recompose a target category from factor
/// categories, as a sequence of binary steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    /// Index of the plan in the engine's memory.
    pub id: usize,
    /// The category to recompose.
    pub target: CategoryKey,
    /// The factor categories, in the order they are used.
    pub factors: Vec<CategoryKey>,
    /// The steps; intermediate outputs feed the next step.
    pub steps: Vec<Step>,
    /// Name of the chain archetype listing the factors.
    pub chain: EFormula,
}

/// Which construction an emotional chain follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmotionKind {
    /// Every chain category shares properties with the emotional category.
    Base,
    /// Consecutive chain categories share properties with each other.
    Complex,
}

/// An executed emotional chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmotionChain {
    /// The clock it ran at.
    pub clock: u64,
    /// Base or complex.
    pub kind: EmotionKind,
    /// The category in equilibrium whose state was perturbed and restored.
    pub emotional: CategoryKey,
    /// The modality holding the emotional internal state.
    pub modality: ModalityId,
    /// The surplus categories drained, in order.
    pub factors: Vec<CategoryKey>,
    /// The steps; the first uses the emotional state, the last restores it.
    pub steps: Vec<Step>,
    /// Name of the chain archetype.
    pub chain: EFormula,
}

/// Levels a perceived category can reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum PromotionKind {
    /// The category recalled a behaviour directly.
    PerceptualSymbol,
    /// The recall repeated on consecutive clocks: a structural coupling.
    ObjectiveSymbol,
    /// An emotional simulation used emergents of an objective symbol.
    MentalImage,
}

/// A promotion of a perturbation category.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Promotion {
    /// The clock of the promotion.
    pub clock: u64,
    /// The level reached.
    pub kind: PromotionKind,
    /// The promoted category.
    #[serde(serialize_with = "key_text")]
    pub category: CategoryKey,
    /// Readable label of the category.
    pub label: String,
}

fn key_text<S: serde::Serializer>(k: &CategoryKey, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(k.as_str())
}
