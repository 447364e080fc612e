//! A small scripted environment for driving the engine in tests.

#![allow(dead_code)]

use std::collections::BTreeMap;

use ego_codec::EBinary;
use ego_core::EFormula;
use ego_engine::{
    ordinal, Engine, EngineConfig, Environment, ModalityId, ModalitySpec, PerturbationBatch, SensoryEvent,
    SensoryResponse, StructureSnapshot, TraceRecord,
};

/// The token called `name`: letters map to their position in the alphabet,
/// written as five bits, so every token has the same width.
pub fn token(name: char) -> EFormula {
    let n = name as u32 - 'A' as u32 + 1;
    EBinary::from_bits(&format!("{n:05b}")).unwrap().formula().clone()
}

pub fn tokens(names: &str) -> Vec<EFormula> {
    names.chars().map(token).collect()
}

/// `n` distinct instances of a token group; the first is the bare group.
pub fn group(names: &str, n: usize) -> Vec<EFormula> {
    let t = tokens(names);
    (0..n)
        .map(|k| EFormula::set(t.iter().cloned().chain((k > 0).then(|| ordinal(k)))))
        .collect()
}

pub fn glossary() -> BTreeMap<EFormula, String> {
    ('A'..='Z').map(|c| (token(c), c.to_string())).collect()
}

pub fn engine(modalities: &[(u32, &str, usize)]) -> Engine {
    let specs = modalities
        .iter()
        .map(|&(id, names, n)| ModalitySpec {
            id: ModalityId(id),
            states: group(names, n),
        })
        .collect();
    let config = EngineConfig {
        glossary: glossary(),
        ..EngineConfig::default()
    };
    Engine::init(specs, config).unwrap()
}

/// One scripted event.
#[derive(Debug, Clone)]
pub struct Scripted {
    pub modality: u32,
    pub triggers: (String, usize),
    pub remove: usize,
    pub emergents: (String, usize),
}

pub fn ev(modality: u32, triggers: (&str, usize), remove: usize, emergents: (&str, usize)) -> Scripted {
    Scripted {
        modality,
        triggers: (triggers.0.to_string(), triggers.1),
        remove,
        emergents: (emergents.0.to_string(), emergents.1),
    }
}

/// Replays scripted events; removals take the first states carrying every
/// token of the modality.
pub struct ScriptEnv {
    pub clocks: BTreeMap<u64, Vec<Scripted>>,
    pub modality_tokens: BTreeMap<u32, Vec<EFormula>>,
    groups: Vec<Option<usize>>,
}

impl ScriptEnv {
    pub fn new(modalities: &[(u32, &str, usize)], clocks: Vec<(u64, Vec<Scripted>)>) -> Self {
        ScriptEnv {
            clocks: clocks.into_iter().collect(),
            modality_tokens: modalities.iter().map(|&(id, t, _)| (id, tokens(t))).collect(),
            groups: Vec::new(),
        }
    }
}

impl Environment for ScriptEnv {
    fn perturbations(&mut self, clock: u64) -> PerturbationBatch {
        let mut batch = PerturbationBatch::default();
        self.groups.clear();
        for e in self.clocks.get(&clock).into_iter().flatten() {
            if e.triggers.1 > 0 {
                batch.groups.push(group(&e.triggers.0, e.triggers.1));
                self.groups.push(Some(batch.groups.len() - 1));
            } else {
                self.groups.push(None);
            }
        }
        batch
    }

    fn sensory_response(&mut self, clock: u64, s: &StructureSnapshot, _: &PerturbationBatch) -> SensoryResponse {
        let mut events = Vec::new();
        let mut claimed: Vec<EFormula> = Vec::new();
        for (e, g) in self.clocks.get(&clock).into_iter().flatten().zip(&self.groups) {
            let id = ModalityId(e.modality);
            let own = &self.modality_tokens[&e.modality];
            let removed: Vec<EFormula> = s
                .states(id)
                .unwrap_or(&[])
                .iter()
                .filter(|f| own.iter().all(|t| f.contains(t)) && !claimed.contains(f))
                .take(e.remove)
                .cloned()
                .collect();
            claimed.extend(removed.iter().cloned());
            let emergents = if e.emergents.1 > 0 {
                group(&e.emergents.0, e.emergents.1)
            } else {
                Vec::new()
            };
            events.push(SensoryEvent {
                group: *g,
                modality: id,
                removed,
                emergents,
            });
        }
        SensoryResponse { events }
    }
}

/// Sum of trace deltas per category key.
pub fn replay(trace: &[TraceRecord]) -> BTreeMap<String, i64> {
    let mut out = BTreeMap::new();
    for r in trace {
        if let (Some(k), Some(d)) = (&r.category, r.delta) {
            *out.entry(k.clone()).or_insert(0) += d;
        }
    }
    out
}

pub const THREE: [(u32, &str, usize); 3] = [(1, "ABC", 10), (2, "DE", 11), (3, "FG", 8)];

/// The three-modality run: three clocks, each perturbing one modality.
pub fn three_modalities() -> (Engine, ScriptEnv) {
    let env = ScriptEnv::new(
        &THREE,
        vec![
            (1, vec![ev(1, ("OP", 4), 5, ("CGK", 10))]),
            (2, vec![ev(2, ("QRS", 8), 3, ("AEFP", 12))]),
            (3, vec![ev(3, ("TU", 4), 4, ("BDV", 11))]),
        ],
    );
    (engine(&THREE), env)
}

/// The registered category whose label is `label`.
pub fn key(engine: &Engine, label: &str) -> ego_categorize::CategoryKey {
    engine
        .registry()
        .iter()
        .map(|(k, _)| k.clone())
        .find(|k| engine.label(k) == label)
        .unwrap_or_else(|| panic!("no category labelled {label}"))
}
