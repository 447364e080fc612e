//! The two messages exchanged with an environment on every clock, and the
//! clock loop that drives them.
//!
//! 1. The environment sends a [`PerturbationBatch`]: groups of perturbation
//!    formulas.
//! 2. The engine categorises them and answers with its
//!    [`StructureSnapshot`]; the environment replies with a
//!    [`SensoryResponse`]: for each affected modality, which states
//!    disappear and which emergents appear.
//!
//! Neither side sees the other's internals.

use ego_core::EFormula;
use serde::Serialize;

use crate::engine::Engine;
use crate::error::EngineError;
use crate::model::{ModalityId, StructureSnapshot};
use crate::plan::Promotion;

/// Perturbations arriving at one clock, in groups.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PerturbationBatch {
    /// Each group is categorised on its own.
    pub groups: Vec<Vec<EFormula>>,
}

/// The environment's account of what one perturbation did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SensoryEvent {
    /// Index of the triggering group in the batch, if any.
    pub group: Option<usize>,
    /// The affected modality.
    pub modality: ModalityId,
    /// States that disappear.
    pub removed: Vec<EFormula>,
    /// States that appear.
    pub emergents: Vec<EFormula>,
}

/// The environment's reply for one clock.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SensoryResponse {
    /// The events, applied in order.
    pub events: Vec<SensoryEvent>,
}

/// Anything that can perturb an individual.
pub trait Environment {
    /// Message one: the perturbations of `clock`.
    fn perturbations(&mut self, clock: u64) -> PerturbationBatch;

    /// Message two: the effect of `batch` on the given structure.
    fn sensory_response(
        &mut self,
        clock: u64,
        structure: &StructureSnapshot,
        batch: &PerturbationBatch,
    ) -> SensoryResponse;
}

/// How a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RunStatus {
    /// Every modality is back to its starting number of compliant states.
    Equilibrium,
    /// A modality lost every compliant state.
    Destroyed,
    /// The clock budget ran out with deficits left, or no clock ran.
    BudgetExhausted,
}

/// Deficits at the end of one clock.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClockDeficits {
    /// The clock.
    pub clock: u64,
    /// `(modality id, missing compliant states)`, by id.
    pub deficits: Vec<(u32, usize)>,
}

/// The homeostatic index of one category at the end of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residual {
    /// Readable label.
    pub label: String,
    /// The index.
    pub index: i64,
}

/// Summary of a run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunReport {
    /// Final status.
    pub status: RunStatus,
    /// Clocks executed.
    pub clocks: u64,
    /// Deficits after each clock.
    pub deficits: Vec<ClockDeficits>,
    /// Final homeostatic index of every category touched.
    pub residuals: Vec<Residual>,
    /// Promotions, in order.
    pub promotions: Vec<Promotion>,
    /// Number of emotional chains executed.
    pub emotions: usize,
}

/// Runs up to `budget` clocks, stopping early if the individual is
/// destroyed.
pub fn run(engine: &mut Engine, env: &mut dyn Environment, budget: u64) -> Result<RunReport, EngineError> {
    let mut deficits = Vec::new();
    for _ in 0..budget {
        engine.tick(env)?;
        deficits.push(ClockDeficits {
            clock: engine.clock(),
            deficits: engine.modalities().iter().map(|m| (m.id().0, m.deficit())).collect(),
        });
        if engine.is_destroyed() {
            break;
        }
    }
    Ok(engine.report(deficits))
}
