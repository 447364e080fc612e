//! Scenario files.
//!
//! A scenario is TOML. Unknown keys are rejected everywhere.
//!
//! ```toml
//! [seed]
//! value = 7                 # seeds the filler generator
//!
//! [schedule]
//! budget = 3                # clocks to run
//! change_clock = 5          # optional: first clock using the second model
//!
//! [fillers]
//! length = 6                # optional: bits per random filler; 0 = none
//!
//! [symbols]                 # optional names for bit-string tokens
//! A = "00001"
//! B = "00010"
//!
//! [[modalities]]
//! id = 1
//! count = 10                # starting states
//! properties = ["A", "B"]   # tokens every starting state carries
//! # or: eem = "1"           # carry the b tokens of that model instead
//!
//! [eem.1]                   # an environmental event model
//! a = ["O", "P"]            # tokens of the perturbations
//! b = ["A", "B"]            # tokens selecting the target modality
//! c = ["C", "K"]            # tokens of the emergents
//! perturbations = 2         # a-instances per clock
//! removals = 1              # states removed per clock
//! emergents = 3             # c-instances per clock
//!
//! [[script]]                # exact events for one clock
//! clock = 1
//! [[script.events]]
//! modality = 1
//! perturbations = { count = 4, properties = ["O", "P"] }
//! remove = 5
//! emergents = { count = 10, properties = ["C", "K"] }
//! ```
//!
//! Tokens may be symbol names or literal bit strings.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

/// Why a scenario could not be used.
#[derive(Debug, Error)]
pub enum ScenarioError {
    /// The file could not be read.
    #[error("cannot read scenario: {0}")]
    Io(#[from] std::io::Error),
    /// The text is not a scenario.
    #[error("malformed scenario: {0}")]
    Parse(#[from] toml::de::Error),
    /// The scenario is well formed but inconsistent.
    #[error("invalid scenario: {0}")]
    Invalid(String),
    /// The engine rejected the starting structure.
    #[error("cannot start the individual: {0}")]
    Rejected(#[from] ego_engine::EngineError),
}

fn invalid<T>(msg: impl Into<String>) -> Result<T, ScenarioError> {
    Err(ScenarioError::Invalid(msg.into()))
}

/// `[seed]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedSection {
    /// The seed.
    pub value: u64,
}

/// `[schedule]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Schedule {
    /// Number of clocks to run.
    pub budget: u64,
    /// First clock at which the second event model replaces the first.
    #[serde(default)]
    pub change_clock: Option<u64>,
}

/// `[fillers]`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fillers {
    /// Bits per random filler; 0 tags instances with ordinals instead.
    #[serde(default)]
    pub length: usize,
}

/// One `[[modalities]]` entry.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModalityDecl {
    /// Modality id.
    pub id: u32,
    /// Optional display name.
    #[serde(default)]
    pub name: Option<String>,
    /// Number of starting states.
    pub count: usize,
    /// Tokens carried by every starting state.
    #[serde(default)]
    pub properties: Vec<String>,
    /// Take the b tokens of this event model as properties.
    #[serde(default)]
    pub eem: Option<String>,
}

/// One `[eem.N]` table.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EemDecl {
    /// Perturbation tokens.
    pub a: Vec<String>,
    /// Target-selecting tokens.
    pub b: Vec<String>,
    /// Emergent tokens.
    pub c: Vec<String>,
    /// a-instances per clock.
    #[serde(default = "one")]
    pub perturbations: usize,
    /// States removed per clock.
    #[serde(default = "one")]
    pub removals: usize,
    /// c-instances per clock.
    #[serde(default = "one")]
    pub emergents: usize,
}

fn one() -> usize {
    1
}

/// `count` instances carrying `properties`.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDecl {
    /// Number of instances.
    pub count: usize,
    /// Tokens every instance carries.
    pub properties: Vec<String>,
}

/// One scripted event.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptEvent {
    /// The affected modality.
    pub modality: u32,
    /// The perturbations, if any.
    #[serde(default)]
    pub perturbations: Option<GroupDecl>,
    /// Number of compliant states removed.
    #[serde(default)]
    pub remove: usize,
    /// The emergents, if any.
    #[serde(default)]
    pub emergents: Option<GroupDecl>,
}

/// The scripted events of one clock.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScriptClock {
    /// The clock.
    pub clock: u64,
    /// Its events, in order.
    #[serde(default)]
    pub events: Vec<ScriptEvent>,
}

/// A whole scenario.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    /// Filler seed.
    #[serde(default)]
    pub seed: SeedSection,
    /// Clock budget and model change.
    pub schedule: Schedule,
    /// Filler configuration.
    #[serde(default)]
    pub fillers: Fillers,
    /// Token names.
    #[serde(default)]
    pub symbols: BTreeMap<String, String>,
    /// Modalities and their starting states.
    #[serde(default)]
    pub modalities: Vec<ModalityDecl>,
    /// Environmental event models, applied in key order.
    #[serde(default)]
    pub eem: BTreeMap<String, EemDecl>,
    /// Scripted events.
    #[serde(default)]
    pub script: Vec<ScriptClock>,
}

fn is_bits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b == b'0' || b == b'1')
}

impl Scenario {
    /// Parses and validates scenario text.
    pub fn from_toml(text: &str) -> Result<Scenario, ScenarioError> {
        let s: Scenario = toml::from_str(text)?;
        s.validate()?;
        Ok(s)
    }

    /// Reads and validates a scenario file.
    pub fn load(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
        Scenario::from_toml(&std::fs::read_to_string(path)?)
    }

    /// The bit string of a token: a symbol's value, or the token itself.
    pub fn resolve(&self, token: &str) -> Result<String, ScenarioError> {
        match self.symbols.get(token) {
            Some(bits) => Ok(bits.clone()),
            None if is_bits(token) => Ok(token.to_string()),
            None => invalid(format!("unknown symbol {token:?}")),
        }
    }

    /// Event models in application order.
    pub fn models(&self) -> Vec<(&String, &EemDecl)> {
        let mut v: Vec<_> = self.eem.iter().collect();
        v.sort_by(|a, b| {
            let num = |k: &str| k.parse::<u64>().ok();
            num(a.0).cmp(&num(b.0)).then(a.0.cmp(b.0))
        });
        v
    }

    /// The properties of a modality, as tokens.
    pub fn modality_tokens(&self, m: &ModalityDecl) -> Result<Vec<String>, ScenarioError> {
        match (&m.eem, m.properties.is_empty()) {
            (Some(e), true) => match self.eem.get(e) {
                Some(model) => Ok(model.b.clone()),
                None => invalid(format!("modality {} refers to unknown model {e:?}", m.id)),
            },
            (None, false) => Ok(m.properties.clone()),
            (Some(_), false) => invalid(format!("modality {} has both properties and a model", m.id)),
            (None, true) => invalid(format!("modality {} has no properties", m.id)),
        }
    }

    fn validate(&self) -> Result<(), ScenarioError> {
        for (name, bits) in &self.symbols {
            if !is_bits(bits) {
                return invalid(format!("symbol {name} is not a bit string: {bits:?}"));
            }
        }
        if self.modalities.is_empty() {
            return invalid("no modalities");
        }
        let mut ids = BTreeSet::new();
        for m in &self.modalities {
            if !ids.insert(m.id) {
                return invalid(format!("modality {} declared twice", m.id));
            }
            if m.count == 0 {
                return invalid(format!("modality {} has no states", m.id));
            }
            for t in self.modality_tokens(m)? {
                self.resolve(&t)?;
            }
        }
        for (k, e) in &self.eem {
            if e.a.is_empty() || e.b.is_empty() || e.c.is_empty() {
                return invalid(format!("model {k} has an empty array"));
            }
            for t in e.a.iter().chain(&e.b).chain(&e.c) {
                self.resolve(t)?;
            }
            let b: BTreeSet<String> = e.b.iter().map(|t| self.resolve(t)).collect::<Result<_, _>>()?;
            let c: BTreeSet<String> = e.c.iter().map(|t| self.resolve(t)).collect::<Result<_, _>>()?;
            if b == c {
                return invalid(format!("model {k} has equal b and c arrays"));
            }
        }
        for sc in &self.script {
            if sc.clock == 0 {
                return invalid("scripted events start at clock 1");
            }
            for ev in &sc.events {
                if !ids.contains(&ev.modality) {
                    return invalid(format!("clock {} refers to unknown modality {}", sc.clock, ev.modality));
                }
                for g in ev.perturbations.iter().chain(&ev.emergents) {
                    if g.properties.is_empty() {
                        return invalid(format!("clock {}: a group has no properties", sc.clock));
                    }
                    for t in &g.properties {
                        self.resolve(t)?;
                    }
                }
            }
        }
        Ok(())
    }
}
