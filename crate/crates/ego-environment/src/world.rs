//! The scenario-driven environment.

use std::collections::BTreeMap;

use ego_codec::EBinary;
use ego_core::EFormula;
use ego_engine::{
    ordinal, Engine, EngineConfig, Environment, ModalityId, ModalitySpec, PerturbationBatch, RunReport, SensoryEvent,
    SensoryResponse, StructureSnapshot,
};
use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scenario::{EemDecl, GroupDecl, Scenario, ScenarioError};

/// Name and version of the filler generator, part of the trace contract:
/// the same seed yields the same fillers on every platform.
pub const FILLER_GENERATOR: &str = "rand_chacha 0.3 ChaCha8Rng::seed_from_u64";

/// The k-th instance of a group of tokens.
///
/// The first instance (`k = 0`) is exactly the set of tokens. Later ones add
/// one tag member: a filler when one is given, otherwise the ordinal `k`.
pub fn instance(tokens: &[EFormula], k: usize, filler: Option<&EFormula>) -> EFormula {
    let tag = match (k, filler) {
        (0, _) => None,
        (_, Some(f)) => Some(f.clone()),
        (_, None) => Some(ordinal(k)),
    };
    EFormula::set(tokens.iter().cloned().chain(tag))
}

/// Whether a state carries every token as a member.
pub fn carries(state: &EFormula, tokens: &[EFormula]) -> bool {
    tokens.iter().all(|t| state.contains(t))
}

enum Pending {
    Scripted {
        group: Option<usize>,
        modality: u32,
        properties: Vec<EFormula>,
        remove: usize,
        emergents: Option<(usize, Vec<EFormula>)>,
    },
    Model {
        group: usize,
        b: Vec<EFormula>,
        removals: usize,
        c: Vec<EFormula>,
        emergents: usize,
    },
}

/// An environment replaying a [`Scenario`]: scripted events plus the
/// active environmental event model, with seeded fillers.
pub struct ScenarioEnvironment {
    scenario: Scenario,
    rng: ChaCha8Rng,
    tokens: BTreeMap<String, EFormula>,
    pending: Vec<Pending>,
}

impl ScenarioEnvironment {
    /// Prepares a scenario, seeding the filler generator.
    pub fn new(scenario: Scenario) -> Result<Self, ScenarioError> {
        let mut tokens = BTreeMap::new();
        let mut all: Vec<&String> = scenario.symbols.keys().collect();
        let mut extra = Vec::new();
        for m in &scenario.modalities {
            extra.extend(scenario.modality_tokens(m)?);
        }
        for e in scenario.eem.values() {
            extra.extend(e.a.iter().chain(&e.b).chain(&e.c).cloned());
        }
        for sc in &scenario.script {
            for ev in &sc.events {
                for g in ev.perturbations.iter().chain(&ev.emergents) {
                    extra.extend(g.properties.iter().cloned());
                }
            }
        }
        all.extend(extra.iter());
        for t in all {
            let bits = scenario.resolve(t)?;
            let f = EBinary::from_bits(&bits)
                .map_err(|e| ScenarioError::Invalid(format!("token {t:?}: {e}")))?
                .formula()
                .clone();
            tokens.insert(t.clone(), f);
        }
        Ok(ScenarioEnvironment {
            rng: ChaCha8Rng::seed_from_u64(scenario.seed.value),
            scenario,
            tokens,
            pending: Vec::new(),
        })
    }

    /// The scenario.
    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    /// Readable names of token formulas: symbol names, or the bits of
    /// literal tokens.
    pub fn glossary(&self) -> BTreeMap<EFormula, String> {
        let mut g = BTreeMap::new();
        for (name, f) in &self.tokens {
            // Symbol names win over literal spellings of the same bits.
            if self.scenario.symbols.contains_key(name) || !g.contains_key(f) {
                g.insert(f.clone(), name.clone());
            }
        }
        g
    }

    fn formulas(&self, tokens: &[String]) -> Vec<EFormula> {
        tokens.iter().map(|t| self.tokens[t].clone()).collect()
    }

    fn filler(&mut self) -> Option<EFormula> {
        let len = self.scenario.fillers.length;
        if len == 0 {
            return None;
        }
        loop {
            let bits: String = (0..len)
                .map(|_| if self.rng.gen::<bool>() { '1' } else { '0' })
                .collect();
            let f = EBinary::from_bits(&bits).expect("generated bits").formula().clone();
            if !self.tokens.values().any(|t| *t == f) {
                return Some(f);
            }
        }
    }

    fn group(&mut self, tokens: &[EFormula], count: usize) -> Vec<EFormula> {
        (0..count)
            .map(|k| {
                let filler = if k == 0 { None } else { self.filler() };
                instance(tokens, k, filler.as_ref())
            })
            .collect()
    }

    fn group_decl(&mut self, g: &GroupDecl) -> Vec<EFormula> {
        let tokens = self.formulas(&g.properties);
        self.group(&tokens, g.count)
    }

    /// The starting states of every modality.
    pub fn initial_load(&mut self) -> Result<Vec<ModalitySpec>, ScenarioError> {
        let decls = self.scenario.modalities.clone();
        let mut out = Vec::with_capacity(decls.len());
        for m in &decls {
            let tokens = self.formulas(&self.scenario.modality_tokens(m)?);
            out.push(ModalitySpec {
                id: ModalityId(m.id),
                states: self.group(&tokens, m.count),
            });
        }
        Ok(out)
    }

    /// Builds the individual described by the scenario, with the scenario's
    /// token names as glossary.
    pub fn start(&mut self) -> Result<Engine, ScenarioError> {
        let specs = self.initial_load()?;
        let config = EngineConfig {
            glossary: self.glossary(),
            ..EngineConfig::default()
        };
        Ok(Engine::init(specs, config)?)
    }

    /// Runs the scenario's full budget on a fresh individual.
    pub fn run(&mut self) -> Result<(Engine, RunReport), ScenarioError> {
        let mut engine = self.start()?;
        let budget = self.scenario.schedule.budget;
        let report = ego_engine::run(&mut engine, self, budget)?;
        Ok((engine, report))
    }

    fn active_model(&self, clock: u64) -> Option<EemDecl> {
        let models = self.scenario.models();
        let idx = match self.scenario.schedule.change_clock {
            Some(c) if clock >= c && models.len() > 1 => 1,
            _ => 0,
        };
        models.get(idx).map(|(_, e)| (*e).clone())
    }
}

impl Environment for ScenarioEnvironment {
    fn perturbations(&mut self, clock: u64) -> PerturbationBatch {
        let mut batch = PerturbationBatch::default();
        self.pending.clear();
        let scripted: Vec<_> = self
            .scenario
            .script
            .iter()
            .filter(|s| s.clock == clock)
            .flat_map(|s| s.events.clone())
            .collect();
        for ev in scripted {
            let group = ev.perturbations.as_ref().map(|g| {
                let xs = self.group_decl(g);
                batch.groups.push(xs);
                batch.groups.len() - 1
            });
            let properties = {
                let decl = self
                    .scenario
                    .modalities
                    .iter()
                    .find(|m| m.id == ev.modality)
                    .cloned()
                    .expect("validated modality");
                let tokens = self.scenario.modality_tokens(&decl).expect("validated tokens");
                self.formulas(&tokens)
            };
            let emergents = ev.emergents.as_ref().map(|g| (g.count, self.formulas(&g.properties)));
            self.pending.push(Pending::Scripted {
                group,
                modality: ev.modality,
                properties,
                remove: ev.remove,
                emergents,
            });
        }
        if let Some(model) = self.active_model(clock) {
            let a = self.formulas(&model.a);
            let xs = self.group(&a, model.perturbations);
            if !xs.is_empty() {
                batch.groups.push(xs);
                self.pending.push(Pending::Model {
                    group: batch.groups.len() - 1,
                    b: self.formulas(&model.b),
                    removals: model.removals,
                    c: self.formulas(&model.c),
                    emergents: model.emergents,
                });
            }
        }
        debug!("clock {clock}: {} perturbation groups", batch.groups.len());
        batch
    }

    fn sensory_response(
        &mut self,
        clock: u64,
        structure: &StructureSnapshot,
        _batch: &PerturbationBatch,
    ) -> SensoryResponse {
        let mut response = SensoryResponse::default();
        // States already claimed by an earlier event of this clock.
        let mut claimed: BTreeMap<ModalityId, Vec<usize>> = BTreeMap::new();
        let mut pick = |id: ModalityId, tokens: &[EFormula], n: usize| -> Vec<EFormula> {
            let states = structure.states(id).unwrap_or(&[]);
            let used = claimed.entry(id).or_default();
            let mut out = Vec::new();
            for (i, s) in states.iter().enumerate() {
                if out.len() == n {
                    break;
                }
                if !used.contains(&i) && carries(s, tokens) {
                    used.push(i);
                    out.push(s.clone());
                }
            }
            out
        };
        let pending = std::mem::take(&mut self.pending);
        let mut planned = Vec::new();
        for p in &pending {
            match p {
                Pending::Scripted {
                    group,
                    modality,
                    properties,
                    remove,
                    emergents,
                } => {
                    let id = ModalityId(*modality);
                    let removed = pick(id, properties, *remove);
                    planned.push((*group, id, removed, emergents.clone()));
                }
                Pending::Model {
                    group,
                    b,
                    removals,
                    c,
                    emergents,
                } => {
                    let target = structure
                        .modalities
                        .iter()
                        .find(|m| m.states.iter().any(|s| carries(s, b)))
                        .map(|m| m.id);
                    let Some(id) = target else {
                        debug!("clock {clock}: no modality carries the model's b tokens");
                        continue;
                    };
                    let removed = pick(id, b, *removals);
                    planned.push((Some(*group), id, removed, Some((*emergents, c.clone()))));
                }
            }
        }
        for (group, modality, removed, emergents) in planned {
            let emergents = emergents
                .map(|(count, tokens)| self.group(&tokens, count))
                .unwrap_or_default();
            response.events.push(SensoryEvent {
                group,
                modality,
                removed,
                emergents,
            });
        }
        response
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_instance_is_pure() {
        let t = vec![EBinary::from_bits("01").unwrap().formula().clone()];
        assert_eq!(instance(&t, 0, None), EFormula::set(t.clone()));
        assert_eq!(
            instance(&t, 2, None),
            EFormula::set(t.iter().cloned().chain([ordinal(2)]))
        );
        let f = EFormula::wrap(EFormula::empty(), 3);
        assert!(instance(&t, 1, Some(&f)).contains(&f));
        assert!(carries(&instance(&t, 3, None), &t));
    }
}
