//! The homeostatic individual.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use ego_categorize::{category, is_instance, Category, CategoryKey, CategoryRegistry, HomeostaticLedger};
use ego_codec::EBinary;
use ego_core::EFormula;
use log::debug;

use crate::archetype::{ordered_datum, ArchetypeStore, Typology};
use crate::contract::{ClockDeficits, Environment, Residual, RunReport, RunStatus};
use crate::error::EngineError;
use crate::model::{
    Element, Event, EventKind, Modality, ModalityId, ModalitySnapshot, Organisation, StructureSnapshot,
};
use crate::plan::{EmotionChain, EmotionKind, Plan, Promotion, PromotionKind, Step};
use crate::search::{self, Props};
use crate::trace::{Op, TraceRecord};

/// Tunable limits and names.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Serial of the individual, part of every archetype name.
    pub individual: u64,
    /// Longest chain of binary steps a manipulation or emotion may use.
    pub max_chain: usize,
    /// Consecutive direct recalls after which a perceptual symbol becomes
    /// objective.
    pub coupling_threshold: u32,
    /// Number of structure snapshots kept.
    pub history: usize,
    /// Readable names of properties, used for labels only.
    pub glossary: BTreeMap<EFormula, String>,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            individual: 1,
            max_chain: 6,
            coupling_threshold: 2,
            history: 64,
            glossary: BTreeMap::new(),
        }
    }
}

/// The starting states of one modality.
#[derive(Debug, Clone)]
pub struct ModalitySpec {
    /// The modality id.
    pub id: ModalityId,
    /// Its states at clock 0.
    pub states: Vec<EFormula>,
}

/// Whether a change left a modality with compliant states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChangeKind {
    /// At least one state is still an instance of the modality's category.
    Structural,
    /// No state is; the organisation is lost.
    Destructive,
}

/// Categories assigned to one perception.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perceived {
    /// Category of the perturbations.
    pub triggers: Option<CategoryKey>,
    /// Category of the emergents.
    pub emergents: Option<CategoryKey>,
}

#[derive(Debug, Clone, Default)]
struct SymbolState {
    streak: u32,
    last_clock: u64,
    level: Option<PromotionKind>,
}

type Interpretation = (CategoryKey, CategoryKey, CategoryKey);

/// A deterministic homeostatic individual.
///
/// One clock runs: perceive → classify → recomposition loop (select,
/// manipulate, behave) → genus events → emotions → snapshot.
#[derive(Debug)]
pub struct Engine {
    config: EngineConfig,
    clock: u64,
    modalities: Vec<Modality>,
    organisation: Organisation,
    registry: CategoryRegistry,
    ledger: HomeostaticLedger,
    store: ArchetypeStore,
    category_names: BTreeMap<CategoryKey, EFormula>,
    base_names: HashMap<EFormula, EFormula>,
    quantity_names: BTreeMap<u64, EFormula>,
    pair_names: HashMap<EFormula, EFormula>,
    paradigmas: BTreeMap<(Typology, Interpretation), EFormula>,
    plans: Vec<Plan>,
    perceptions: Vec<Interpretation>,
    damage: BTreeMap<ModalityId, BTreeSet<CategoryKey>>,
    links: BTreeMap<CategoryKey, (ModalityId, usize)>,
    symbols: BTreeMap<CategoryKey, SymbolState>,
    promotions: Vec<Promotion>,
    emotions: Vec<EmotionChain>,
    perceived_now: BTreeSet<CategoryKey>,
    touched: BTreeSet<ModalityId>,
    generic: CategoryKey,
    next_element: u64,
    trace: Vec<TraceRecord>,
    history: VecDeque<StructureSnapshot>,
    destroyed_at: Option<u64>,
}

/// The von Neumann ordinal `k`: `∅, {∅}, {∅,{∅}}, …`.
pub fn ordinal(k: usize) -> EFormula {
    let mut members = Vec::with_capacity(k);
    for _ in 0..k {
        let next = EFormula::set(members.iter().cloned());
        members.push(next);
    }
    EFormula::set(members)
}

/// `count` distinct accidental members for instances of `properties`:
/// ordinals from 0 upward, skipping any that is already a property.
pub fn accidental_members(properties: &Props, count: usize) -> Vec<EFormula> {
    (0..)
        .map(ordinal)
        .filter(|o| !properties.contains(o))
        .take(count)
        .collect()
}

fn props_of(formula: &EFormula) -> Props {
    formula.members().iter().cloned().collect()
}

impl Engine {
    /// Fixes the organisation from the starting states.
    pub fn init(specs: Vec<ModalitySpec>, config: EngineConfig) -> Result<Engine, EngineError> {
        if specs.is_empty() {
            return Err(EngineError::NoModalities);
        }
        let mut specs = specs;
        specs.sort_by_key(|s| s.id);
        let mut owner: HashMap<EFormula, ModalityId> = HashMap::new();
        for w in specs.windows(2) {
            if w[0].id == w[1].id {
                return Err(EngineError::DuplicateModality(w[0].id));
            }
        }
        for s in &specs {
            if s.states.is_empty() {
                return Err(EngineError::EmptyModality(s.id));
            }
            for x in &s.states {
                match owner.get(x) {
                    Some(&first) if first != s.id => {
                        return Err(EngineError::OverlappingStates {
                            state: x.render(),
                            first,
                            second: s.id,
                        })
                    }
                    _ => {
                        owner.insert(x.clone(), s.id);
                    }
                }
            }
        }
        let mut engine = Engine {
            store: ArchetypeStore::new(config.individual),
            config,
            clock: 0,
            modalities: Vec::new(),
            organisation: Organisation::new(EFormula::empty(), Vec::new()),
            registry: CategoryRegistry::new(),
            ledger: HomeostaticLedger::new(),
            category_names: BTreeMap::new(),
            base_names: HashMap::new(),
            quantity_names: BTreeMap::new(),
            pair_names: HashMap::new(),
            paradigmas: BTreeMap::new(),
            plans: Vec::new(),
            perceptions: Vec::new(),
            damage: BTreeMap::new(),
            links: BTreeMap::new(),
            symbols: BTreeMap::new(),
            promotions: Vec::new(),
            emotions: Vec::new(),
            perceived_now: BTreeSet::new(),
            touched: BTreeSet::new(),
            generic: CategoryKey::of(&EFormula::singleton(EFormula::empty())),
            next_element: 0,
            trace: Vec::new(),
            history: VecDeque::new(),
            destroyed_at: None,
        };
        let mut categories = Vec::new();
        for s in specs {
            let ids = engine.fresh_ids(s.states.len());
            let c = category(&s.states).with_provenance(ids.iter().copied());
            let properties = c.properties().clone();
            let key = engine.registry.insert(c);
            engine.ledger.apply(&key, 0);
            let name = engine.category_archetype(&key)?;
            let states = s
                .states
                .into_iter()
                .zip(ids)
                .map(|(formula, id)| Element {
                    id,
                    formula,
                    category: key.clone(),
                })
                .collect::<Vec<_>>();
            let mut r = engine.record(Op::Init);
            r.modality = Some(s.id.0);
            r.count = Some(states.len() as u64);
            engine.describe(&mut r, &key);
            r.archetype = Some(engine.handle(&name));
            engine.push(r);
            categories.push((s.id, key.clone()));
            engine.modalities.push(Modality {
                id: s.id,
                category: key,
                properties,
                initial: states.len(),
                states,
            });
        }
        let formula = EFormula::set(engine.modalities.iter().map(|m| m.properties.clone()));
        engine.organisation = Organisation::new(formula, categories);
        let generic = Category::from_properties(EFormula::singleton(EFormula::empty()));
        engine.generic = engine.registry.insert(generic);
        engine.snapshot_now();
        Ok(engine)
    }

    // ----- accessors -------------------------------------------------------

    /// The current clock (0 before the first tick).
    pub fn clock(&self) -> u64 {
        self.clock
    }

    /// The configuration.
    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// The organisation fixed at clock 0.
    pub fn organisation(&self) -> &Organisation {
        &self.organisation
    }

    /// The modalities, by id.
    pub fn modalities(&self) -> &[Modality] {
        &self.modalities
    }

    /// One modality.
    pub fn modality(&self, id: ModalityId) -> Result<&Modality, EngineError> {
        self.modalities
            .iter()
            .find(|m| m.id == id)
            .ok_or(EngineError::UnknownModality(id))
    }

    fn modality_index(&self, id: ModalityId) -> Result<usize, EngineError> {
        self.modalities
            .iter()
            .position(|m| m.id == id)
            .ok_or(EngineError::UnknownModality(id))
    }

    /// Every known category.
    pub fn registry(&self) -> &CategoryRegistry {
        &self.registry
    }

    /// The homeostatic index of every category.
    pub fn ledger(&self) -> &HomeostaticLedger {
        &self.ledger
    }

    /// The archetype memory.
    pub fn archetypes(&self) -> &ArchetypeStore {
        &self.store
    }

    /// Stored manipulations, oldest first.
    pub fn plans(&self) -> &[Plan] {
        &self.plans
    }

    /// Promotions so far.
    pub fn promotions(&self) -> &[Promotion] {
        &self.promotions
    }

    /// Promotions made at one clock.
    pub fn promotions_at(&self, clock: u64) -> impl Iterator<Item = &Promotion> {
        self.promotions.iter().filter(move |p| p.clock == clock)
    }

    /// Emotional chains executed so far.
    pub fn emotions(&self) -> &[EmotionChain] {
        &self.emotions
    }

    /// The trace so far.
    pub fn trace(&self) -> &[TraceRecord] {
        &self.trace
    }

    /// Recent structure snapshots, oldest first.
    pub fn history(&self) -> impl Iterator<Item = &StructureSnapshot> {
        self.history.iter()
    }

    /// Whether a destructive change ended the run.
    pub fn is_destroyed(&self) -> bool {
        self.destroyed_at.is_some()
    }

    /// The properties of a known category.
    pub fn properties(&self, key: &CategoryKey) -> Result<&EFormula, EngineError> {
        self.registry
            .get(key)
            .map(|c| c.properties())
            .ok_or_else(|| EngineError::UnknownCategory(key.to_string()))
    }

    fn props(&self, key: &CategoryKey) -> Props {
        self.registry
            .get(key)
            .map(|c| props_of(c.properties()))
            .unwrap_or_default()
    }

    /// A readable label: glossary names of the properties, sorted, in braces.
    /// Properties without a name are shown in full.
    pub fn label(&self, key: &CategoryKey) -> String {
        match self.registry.get(key) {
            Some(c) => self.label_props(&props_of(c.properties())),
            None => key.to_string(),
        }
    }

    fn label_props(&self, props: &Props) -> String {
        let mut names: Vec<String> = props
            .iter()
            .map(|p| self.config.glossary.get(p).cloned().unwrap_or_else(|| p.pretty()))
            .collect();
        names.sort();
        format!("{{{}}}", names.join(","))
    }

    /// Elements currently assigned to a category.
    pub fn live_count(&self, key: &CategoryKey) -> usize {
        self.modalities
            .iter()
            .flat_map(|m| m.states.iter())
            .filter(|e| &e.category == key)
            .count()
    }

    /// How many elements of a category can be used as factors: its
    /// positive index, capped by the elements actually present.
    pub fn available(&self, key: &CategoryKey) -> usize {
        let index = self.ledger.index(key);
        if index <= 0 {
            0
        } else {
            (index as usize).min(self.live_count(key))
        }
    }

    /// The current structure.
    pub fn snapshot(&self) -> StructureSnapshot {
        StructureSnapshot {
            clock: self.clock,
            modalities: self
                .modalities
                .iter()
                .map(|m| ModalitySnapshot {
                    id: m.id,
                    states: m.states.iter().map(|e| e.formula.clone()).collect(),
                })
                .collect(),
        }
    }

    fn snapshot_now(&mut self) {
        let s = self.snapshot();
        self.history.push_back(s);
        while self.history.len() > self.config.history.max(1) {
            self.history.pop_front();
        }
    }

    // ----- bookkeeping helpers ---------------------------------------------

    fn fresh_ids(&mut self, n: usize) -> Vec<u64> {
        let start = self.next_element;
        self.next_element += n as u64;
        (start..self.next_element).collect()
    }

    fn record(&self, op: Op) -> TraceRecord {
        TraceRecord::new(self.clock, op)
    }

    fn describe(&self, r: &mut TraceRecord, key: &CategoryKey) {
        r.category = Some(key.to_string());
        r.label = Some(self.label(key));
    }

    fn push(&mut self, r: TraceRecord) {
        debug!("{}", r.to_json());
        self.trace.push(r);
    }

    fn handle(&self, name: &EFormula) -> String {
        self.store
            .get_by_name(name)
            .map(|a| a.handle())
            .unwrap_or_else(|_| name.render())
    }

    fn move_index(&mut self, key: &CategoryKey, delta: i64) {
        self.ledger.apply(key, delta);
    }

    /// The archetype standing for a category: its common aspects as base
    /// archetypes, folded left into composed ones.
    fn category_archetype(&mut self, key: &CategoryKey) -> Result<EFormula, EngineError> {
        if let Some(n) = self.category_names.get(key) {
            return Ok(n.clone());
        }
        let props = self.properties(key)?.clone();
        let aspects: Vec<EFormula> = if props.is_empty() {
            vec![props.clone()]
        } else {
            props.members().to_vec()
        };
        let mut acc: Option<EFormula> = None;
        for a in aspects {
            let base = match self.base_names.get(&a) {
                Some(b) => b.clone(),
                None => {
                    let b = self.store.mint(Typology::AbstractBase, a.clone())?;
                    self.base_names.insert(a, b.clone());
                    b
                }
            };
            acc = Some(match acc {
                None => base,
                Some(prev) => self
                    .store
                    .mint(Typology::AbstractComposed, ordered_datum(&prev, &base))?,
            });
        }
        let name = acc.expect("at least one aspect");
        self.category_names.insert(key.clone(), name.clone());
        Ok(name)
    }

    fn chain_archetype(&mut self, keys: &[CategoryKey]) -> Result<EFormula, EngineError> {
        let mut acc: Option<EFormula> = None;
        for k in keys {
            let n = self.category_archetype(k)?;
            acc = Some(match acc {
                None => n,
                Some(prev) => self.store.mint(Typology::Chain, ordered_datum(&prev, &n))?,
            });
        }
        Ok(acc.expect("non-empty chain"))
    }

    fn quantity(&mut self, n: u64) -> Result<EFormula, EngineError> {
        if let Some(q) = self.quantity_names.get(&n) {
            return Ok(q.clone());
        }
        let q = self
            .store
            .mint(Typology::Quantity, EBinary::from_value(n).formula().clone())?;
        self.quantity_names.insert(n, q.clone());
        Ok(q)
    }

    fn ordered_once(&mut self, t: Typology, a: &EFormula, b: &EFormula) -> Result<EFormula, EngineError> {
        let datum = ordered_datum(a, b);
        let key = EFormula::pair(t.formula(), datum.clone());
        if let Some(n) = self.pair_names.get(&key) {
            return Ok(n.clone());
        }
        let n = self.store.mint(t, datum)?;
        self.pair_names.insert(key, n.clone());
        Ok(n)
    }

    /// Stores or recalls the paradigma of an interpretation. Returns its
    /// name and whether it was already known.
    fn paradigma(
        &mut self,
        t: Typology,
        x: &CategoryKey,
        y: &CategoryKey,
        z: &CategoryKey,
    ) -> Result<(EFormula, bool), EngineError> {
        let key = (t, (x.clone(), y.clone(), z.clone()));
        if let Some(n) = self.paradigmas.get(&key) {
            return Ok((n.clone(), true));
        }
        let (cx, cy, cz) = (
            self.category_archetype(x)?,
            self.category_archetype(y)?,
            self.category_archetype(z)?,
        );
        let factors = self.store.mint(Typology::Factors, ordered_datum(&cx, &cy))?;
        let p = self.store.mint(t, ordered_datum(&factors, &cz))?;
        self.paradigmas.insert(key, p.clone());
        Ok((p, false))
    }

    /// A new event archetype: the paradigma and the quantities `n, m, l`.
    fn event_archetype(&mut self, paradigma: &EFormula, n: u64, m: u64, l: u64) -> Result<EFormula, EngineError> {
        let (qn, qm, ql) = (self.quantity(n)?, self.quantity(m)?, self.quantity(l)?);
        let pair = self.ordered_once(Typology::QuantityPair, &qn, &qm)?;
        let qe = self.ordered_once(Typology::QuantityEvent, &pair, &ql)?;
        self.store.mint(Typology::Event, ordered_datum(paradigma, &qe))
    }

    fn steps_label(&self, first: &[CategoryKey], target: &CategoryKey) -> String {
        let parts: Vec<String> = first.iter().map(|k| self.label(k)).collect();
        format!("{} -> {}", parts.join(" + "), self.label(target))
    }

    // ----- clock structure -------------------------------------------------

    /// Starts a new clock.
    pub fn begin_clock(&mut self) -> Result<u64, EngineError> {
        if let Some(c) = self.destroyed_at {
            return Err(EngineError::Destroyed(c));
        }
        self.clock += 1;
        self.perceived_now.clear();
        self.touched.clear();
        Ok(self.clock)
    }

    /// Runs one clock against an environment: the two-message exchange,
    /// then [`Engine::finish_clock`].
    pub fn tick(&mut self, env: &mut dyn Environment) -> Result<(), EngineError> {
        let clock = self.begin_clock()?;
        let batch = env.perturbations(clock);
        let mut keys = Vec::with_capacity(batch.groups.len());
        for g in &batch.groups {
            keys.push(self.categorise_triggers(g, None, EventKind::Exogenous)?);
        }
        let snapshot = self.snapshot();
        let response = env.sensory_response(clock, &snapshot, &batch);
        for ev in response.events {
            let cx = match ev.group {
                Some(g) => keys.get(g).cloned().ok_or(EngineError::UnknownGroup(g))?,
                None => None,
            };
            let triggers = ev.group.map(|g| batch.groups[g].len()).unwrap_or(0);
            self.apply_event(ev.modality, triggers as u64, &ev.removed, &ev.emergents, cx)?;
        }
        self.finish_clock()
    }

    /// Applies one event: categorises its triggers, removes its `Y`s and
    /// inserts its `Z`s.
    pub fn perceive(&mut self, event: Event) -> Result<Perceived, EngineError> {
        self.modality_index(event.modality)?;
        let cx = self.categorise_triggers(&event.triggers, Some(event.modality), event.kind)?;
        let cz = self.apply_event(
            event.modality,
            event.triggers.len() as u64,
            &event.removed,
            &event.emergents,
            cx.clone(),
        )?;
        Ok(Perceived {
            triggers: cx,
            emergents: cz,
        })
    }

    fn categorise_triggers(
        &mut self,
        triggers: &[EFormula],
        modality: Option<ModalityId>,
        kind: EventKind,
    ) -> Result<Option<CategoryKey>, EngineError> {
        if triggers.is_empty() {
            return Ok(None);
        }
        let ids = self.fresh_ids(triggers.len());
        for x in triggers {
            self.store
                .mint_flagged(Typology::Perception, x.clone(), kind == EventKind::Endogenous)?;
        }
        let key = self.registry.unify(triggers, &ids);
        let cname = self.category_archetype(&key)?;
        let q = self.quantity(triggers.len() as u64)?;
        let su = self.store.mint(Typology::SensusUndam, ordered_datum(&q, &cname))?;
        if kind == EventKind::Exogenous {
            self.perceived_now.insert(key.clone());
        }
        let mut r = self.record(Op::Perceive);
        r.modality = modality.map(|m| m.0);
        self.describe(&mut r, &key);
        r.count = Some(triggers.len() as u64);
        r.archetype = Some(self.handle(&su));
        r.formulas = triggers.iter().map(EFormula::render).collect();
        self.push(r);
        Ok(Some(key))
    }

    fn apply_event(
        &mut self,
        modality: ModalityId,
        triggers: u64,
        removed: &[EFormula],
        emergents: &[EFormula],
        cx: Option<CategoryKey>,
    ) -> Result<Option<CategoryKey>, EngineError> {
        let mi = self.modality_index(modality)?;
        self.touched.insert(modality);
        // Check every removal before touching anything.
        let mut pool: Vec<Option<&Element>> = self.modalities[mi].states.iter().map(Some).collect();
        for y in removed {
            match pool.iter_mut().find(|e| e.is_some_and(|e| &e.formula == y)) {
                Some(slot) => *slot = None,
                None => {
                    return Err(EngineError::StateNotPresent {
                        modality,
                        state: y.render(),
                    })
                }
            }
        }
        let own = self.modalities[mi].category.clone();
        let mut gone: BTreeMap<CategoryKey, Vec<EFormula>> = BTreeMap::new();
        for y in removed {
            let states = &mut self.modalities[mi].states;
            let pos = states.iter().position(|e| &e.formula == y).expect("checked above");
            let e = states.remove(pos);
            gone.entry(e.category).or_default().push(e.formula);
        }
        let lost_compliant = gone.get(&own).map_or(0, Vec::len);
        for (key, formulas) in gone {
            let n = formulas.len() as i64;
            self.move_index(&key, -n);
            let mut r = self.record(Op::Remove);
            r.modality = Some(modality.0);
            self.describe(&mut r, &key);
            r.delta = Some(-n);
            r.count = Some(n as u64);
            r.formulas = formulas.iter().map(EFormula::render).collect();
            self.push(r);
        }
        if lost_compliant > 0 {
            if let Some(cx) = &cx {
                self.damage.entry(modality).or_default().insert(cx.clone());
            }
        }
        let cz = if emergents.is_empty() {
            None
        } else {
            let ids = self.fresh_ids(emergents.len());
            let key = self.registry.unify(emergents, &ids);
            self.category_archetype(&key)?;
            for (formula, id) in emergents.iter().cloned().zip(ids) {
                self.modalities[mi].states.push(Element {
                    id,
                    formula,
                    category: key.clone(),
                });
            }
            let l = emergents.len() as i64;
            self.move_index(&key, l);
            let mut r = self.record(Op::Emerge);
            r.modality = Some(modality.0);
            self.describe(&mut r, &key);
            r.delta = Some(l);
            r.count = Some(l as u64);
            r.formulas = emergents.iter().map(EFormula::render).collect();
            self.push(r);
            Some(key)
        };
        if let (Some(x), Some(z)) = (&cx, &cz) {
            let (p, recalled) = self.paradigma(Typology::Paradigma, x, &own, z)?;
            let ev = self.event_archetype(&p, triggers, removed.len() as u64, emergents.len() as u64)?;
            self.perceptions.push((x.clone(), own.clone(), z.clone()));
            let mut r = self.record(Op::Interpret);
            r.modality = Some(modality.0);
            r.label = Some(format!(
                "{} + {} -> {}{}",
                self.label(x),
                self.label(&own),
                self.label(z),
                if recalled { " (recalled)" } else { "" }
            ));
            r.archetype = Some(self.handle(&ev));
            self.push(r);
        }
        Ok(cz)
    }

    /// Whether a modality still has states complying with its category.
    pub fn classify_change(&self, id: ModalityId) -> Result<ChangeKind, EngineError> {
        let m = self.modality(id)?;
        let c = Category::from_properties(m.properties.clone());
        Ok(if m.states.iter().any(|e| is_instance(&e.formula, &c)) {
            ChangeKind::Structural
        } else {
            ChangeKind::Destructive
        })
    }

    /// Classifies the modalities touched this clock, then runs the
    /// recomposition loop, genus events and emotions, and takes a snapshot.
    pub fn finish_clock(&mut self) -> Result<(), EngineError> {
        let touched: Vec<ModalityId> = self.touched.iter().copied().collect();
        for id in touched {
            if self.classify_change(id)? == ChangeKind::Destructive {
                self.destroyed_at = Some(self.clock);
                let key = self.modality(id)?.category.clone();
                let mut r = self.record(Op::Destroyed);
                r.modality = Some(id.0);
                self.describe(&mut r, &key);
                self.push(r);
                self.snapshot_now();
                return Ok(());
            }
        }
        self.recompose()?;
        self.genus_pass()?;
        if self.modalities.iter().all(|m| m.deficit() == 0) {
            self.run_emotions()?;
        }
        for m in &self.modalities {
            if m.deficit() == 0 {
                self.damage.remove(&m.id);
            }
        }
        self.snapshot_now();
        let open: usize = self.modalities.iter().map(Modality::deficit).sum();
        let mut r = self.record(Op::Status);
        r.label = Some(if open == 0 { "equilibrium" } else { "open" }.to_string());
        r.count = Some(open as u64);
        self.push(r);
        Ok(())
    }

    /// The run status implied by the current state.
    pub fn status(&self) -> RunStatus {
        if self.destroyed_at.is_some() {
            RunStatus::Destroyed
        } else if self.clock > 0 && self.modalities.iter().all(|m| m.deficit() == 0) {
            RunStatus::Equilibrium
        } else {
            RunStatus::BudgetExhausted
        }
    }

    /// Final homeostatic index of every category touched, by label.
    pub fn residuals(&self) -> Vec<Residual> {
        self.ledger
            .iter()
            .map(|(k, index)| Residual {
                label: self.label(k),
                index,
            })
            .collect()
    }

    pub(crate) fn report(&self, deficits: Vec<ClockDeficits>) -> RunReport {
        RunReport {
            status: self.status(),
            clocks: self.clock,
            deficits,
            residuals: self.residuals(),
            promotions: self.promotions.clone(),
            emotions: self.emotions.len(),
        }
    }

    // ----- recomposition ---------------------------------------------------

    /// The modality missing the most compliant states (lowest id on ties),
    /// or none when every modality is complete.
    pub fn select_target(&self) -> Option<ModalityId> {
        self.select_excluding(&BTreeSet::new())
    }

    fn select_excluding(&self, tried: &BTreeSet<ModalityId>) -> Option<ModalityId> {
        self.modalities
            .iter()
            .filter(|m| m.deficit() > 0 && !tried.contains(&m.id))
            .max_by(|a, b| a.deficit().cmp(&b.deficit()).then(b.id.cmp(&a.id)))
            .map(|m| m.id)
    }

    fn recompose(&mut self) -> Result<(), EngineError> {
        let mut tried = BTreeSet::new();
        while let Some(target) = self.select_excluding(&tried) {
            tried.insert(target);
            let (key, d) = {
                let m = self.modality(target)?;
                (m.category.clone(), m.deficit())
            };
            let mut r = self.record(Op::Target);
            r.modality = Some(target.0);
            self.describe(&mut r, &key);
            r.count = Some(d as u64);
            self.push(r);
            let (plan, symbol) = match self.symbol_plan(target) {
                Some((cx, plan)) => {
                    let mut r = self.record(Op::SymbolRecall);
                    r.modality = Some(target.0);
                    self.describe(&mut r, &cx);
                    r.archetype = Some(self.handle(&plan.chain));
                    self.push(r);
                    (Some(plan), Some(cx))
                }
                None => (self.manipulate(target)?, None),
            };
            let Some(plan) = plan else { continue };
            let q = self.behave(target, &plan, d)?;
            if q > 0 {
                if let Some(cx) = symbol {
                    self.promote_recall(&cx);
                }
                let sources: Vec<CategoryKey> = self
                    .damage
                    .get(&target)
                    .map(|s| s.iter().cloned().collect())
                    .unwrap_or_default();
                for cx in sources {
                    self.links.insert(cx, (target, plan.id));
                }
            }
        }
        Ok(())
    }

    fn plan_ready(&self, plan: &Plan) -> bool {
        plan.factors.iter().all(|f| self.available(f) > 0)
    }

    /// A stored behaviour recalled directly by a category perceived this
    /// clock, if its factors are at hand.
    fn symbol_plan(&self, target: ModalityId) -> Option<(CategoryKey, Plan)> {
        self.perceived_now.iter().find_map(|cx| match self.links.get(cx) {
            Some(&(m, id)) if m == target && self.plan_ready(&self.plans[id]) => {
                Some((cx.clone(), self.plans[id].clone()))
            }
            _ => None,
        })
    }

    fn promote(&mut self, kind: PromotionKind, cx: &CategoryKey) {
        let p = Promotion {
            clock: self.clock,
            kind,
            category: cx.clone(),
            label: self.label(cx),
        };
        let mut r = self.record(Op::Promote);
        r.category = Some(cx.to_string());
        r.label = Some(format!("{:?} {}", kind, p.label));
        self.push(r);
        self.promotions.push(p);
    }

    fn promote_recall(&mut self, cx: &CategoryKey) {
        let clock = self.clock;
        let threshold = self.config.coupling_threshold.max(1);
        let s = self.symbols.entry(cx.clone()).or_default();
        s.streak = if s.streak > 0 && s.last_clock + 1 == clock {
            s.streak + 1
        } else {
            1
        };
        s.last_clock = clock;
        let next = if s.streak >= threshold {
            PromotionKind::ObjectiveSymbol
        } else {
            PromotionKind::PerceptualSymbol
        };
        let fresh = match s.level {
            None => true,
            Some(l) => l < next,
        };
        if fresh {
            s.level = Some(next);
            if next == PromotionKind::ObjectiveSymbol
                && !self
                    .promotions
                    .iter()
                    .any(|p| p.kind == PromotionKind::PerceptualSymbol && &p.category == cx)
            {
                self.promote(PromotionKind::PerceptualSymbol, cx);
            }
            self.promote(next, cx);
        }
    }

    /// Looks for a way to recompose the target's category.
    ///
    /// A stored manipulation for the same category is reused when every
    /// factor has surplus. Otherwise the fewest surplus categories whose
    /// properties together include the target's are combined in binary
    /// steps. Returns `None` when neither works.
    pub fn manipulate(&mut self, target: ModalityId) -> Result<Option<Plan>, EngineError> {
        let (key, props) = {
            let m = self.modality(target)?;
            (m.category.clone(), props_of(&m.properties))
        };
        if let Some(plan) = self
            .plans
            .iter()
            .find(|p| p.target == key && self.plan_ready(p))
            .cloned()
        {
            let mut r = self.record(Op::Recall);
            r.modality = Some(target.0);
            self.describe(&mut r, &key);
            r.label = Some(self.steps_label(&plan.factors, &key));
            r.archetype = Some(self.handle(&plan.chain));
            self.push(r);
            return Ok(Some(plan));
        }
        let candidates: Vec<(CategoryKey, Props)> = self
            .registry
            .iter()
            .map(|(k, _)| k.clone())
            .filter(|k| k != &key && self.available(k) > 0)
            .map(|k| {
                let p = self.props(&k);
                (k, p)
            })
            .collect();
        let sets: Vec<Props> = candidates.iter().map(|(_, p)| p.clone()).collect();
        let Some(chosen) = search::find_cover(&props, &sets, self.config.max_chain + 1) else {
            let mut r = self.record(Op::ManipulateFailed);
            r.modality = Some(target.0);
            self.describe(&mut r, &key);
            self.push(r);
            return Ok(None);
        };
        let factors: Vec<CategoryKey> = chosen.iter().map(|&i| candidates[i].0.clone()).collect();
        let factor_props: Vec<&Props> = chosen.iter().map(|&i| &sets[i]).collect();
        let outputs = search::manipulation_outputs(&props, &factor_props);
        let steps = self.build_steps(&factors[0], &factors[1..], &outputs, &key)?;
        let chain = self.chain_archetype(&factors)?;
        let plan = Plan {
            id: self.plans.len(),
            target: key.clone(),
            factors,
            steps,
            chain,
        };
        self.plans.push(plan.clone());
        let mut r = self.record(Op::Manipulate);
        r.modality = Some(target.0);
        r.category = Some(key.to_string());
        r.label = Some(self.steps_label(&plan.factors, &key));
        r.archetype = Some(self.handle(&plan.chain));
        self.push(r);
        Ok(Some(plan))
    }

    /// Registers intermediate categories and paradigmas for a chain of
    /// binary steps; the last output is `last`.
    fn build_steps(
        &mut self,
        first: &CategoryKey,
        seconds: &[CategoryKey],
        outputs: &[Props],
        last: &CategoryKey,
    ) -> Result<Vec<Step>, EngineError> {
        let mut steps = Vec::with_capacity(seconds.len());
        let mut prev = first.clone();
        for (i, second) in seconds.iter().enumerate() {
            let output = if i + 1 == seconds.len() {
                last.clone()
            } else {
                let c = Category::from_properties(EFormula::set(outputs[i].iter().cloned()));
                let k = self.registry.insert(c);
                self.category_archetype(&k)?;
                k
            };
            let (paradigma, _) = self.paradigma(Typology::Paradigma, &prev, second, &output)?;
            steps.push(Step {
                first: prev.clone(),
                second: second.clone(),
                output: output.clone(),
                paradigma,
            });
            prev = output;
        }
        Ok(steps)
    }

    /// Removes up to `n` elements of a category, first by modality id then
    /// by arrival.
    fn take_elements(&mut self, key: &CategoryKey, n: usize) -> Vec<(ModalityId, Element)> {
        let mut out = Vec::with_capacity(n);
        for m in &mut self.modalities {
            while out.len() < n {
                match m.states.iter().position(|e| &e.category == key) {
                    Some(pos) => out.push((m.id, m.states.remove(pos))),
                    None => break,
                }
            }
        }
        out
    }

    fn consume(&mut self, key: &CategoryKey, n: usize, archetype: Option<&EFormula>) {
        let taken = self.take_elements(key, n);
        self.consume_record(key, n, &taken, archetype);
    }

    fn consume_record(
        &mut self,
        key: &CategoryKey,
        n: usize,
        taken: &[(ModalityId, Element)],
        archetype: Option<&EFormula>,
    ) {
        self.move_index(key, -(n as i64));
        let mut r = self.record(Op::Consume);
        self.describe(&mut r, key);
        r.delta = Some(-(n as i64));
        r.count = Some(n as u64);
        r.archetype = archetype.map(|a| self.handle(a));
        r.formulas = taken.iter().map(|(_, e)| e.formula.render()).collect();
        self.push(r);
    }

    fn produce_intermediate(&mut self, key: &CategoryKey, n: usize, archetype: &EFormula) {
        self.move_index(key, n as i64);
        let mut r = self.record(Op::Produce);
        self.describe(&mut r, key);
        r.delta = Some(n as i64);
        r.count = Some(n as u64);
        r.archetype = Some(self.handle(archetype));
        self.push(r);
    }

    fn produce_states(
        &mut self,
        modality: ModalityId,
        key: &CategoryKey,
        n: usize,
        archetype: &EFormula,
    ) -> Result<Vec<EFormula>, EngineError> {
        let props = self.props(key);
        let made: Vec<EFormula> = accidental_members(&props, n)
            .into_iter()
            .map(|acc| EFormula::set(props.iter().cloned().chain([acc])))
            .collect();
        let ids = self.fresh_ids(n);
        let mi = self.modality_index(modality)?;
        for (f, id) in made.iter().cloned().zip(ids) {
            self.modalities[mi].states.push(Element {
                id,
                formula: f,
                category: key.clone(),
            });
        }
        self.move_index(key, n as i64);
        let mut r = self.record(Op::Produce);
        r.modality = Some(modality.0);
        self.describe(&mut r, key);
        r.delta = Some(n as i64);
        r.count = Some(n as u64);
        r.archetype = Some(self.handle(archetype));
        r.formulas = made.iter().map(EFormula::render).collect();
        self.push(r);
        Ok(made)
    }

    /// Executes a manipulation: produces up to `d` new compliant states in
    /// the target modality, limited by the factor elements at hand. Each
    /// produced state holds every property of the target category plus a
    /// distinct accidental member. Returns the number produced.
    pub fn behave(&mut self, target: ModalityId, plan: &Plan, d: usize) -> Result<usize, EngineError> {
        let q = plan.factors.iter().map(|f| self.available(f)).min().unwrap_or(0).min(d);
        if q == 0 {
            return Ok(0);
        }
        for (i, step) in plan.steps.iter().enumerate() {
            if i == 0 {
                self.consume(&step.first, q, Some(&step.paradigma));
            } else {
                // The previous step's output is used up right away.
                self.consume_record(&step.first, q, &[], Some(&step.paradigma));
            }
            self.consume(&step.second, q, Some(&step.paradigma));
            if i + 1 == plan.steps.len() {
                self.produce_states(target, &step.output, q, &step.paradigma)?;
            } else {
                self.produce_intermediate(&step.output, q, &step.paradigma);
            }
            for _ in 0..q {
                self.event_archetype(&step.paradigma, 1, 1, 1)?;
            }
        }
        Ok(q)
    }

    // ----- genus events ----------------------------------------------------

    fn genus_pass(&mut self) -> Result<(), EngineError> {
        loop {
            let mut order: Vec<(usize, ModalityId, CategoryKey)> = self
                .modalities
                .iter()
                .filter(|m| m.deficit() > 0)
                .map(|m| (m.deficit(), m.id, m.category.clone()))
                .collect();
            order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut found = None;
            'search: for (_, _, deficit) in &order {
                let dp = self.props(deficit);
                for (k, c) in self.registry.iter() {
                    if k != deficit && self.available(k) > 0 && dp.is_subset(&props_of(c.properties())) {
                        found = Some((k.clone(), deficit.clone()));
                        break 'search;
                    }
                }
            }
            match found {
                Some((s, d)) => self.genus_event(&s, &d)?,
                None => return Ok(()),
            }
        }
    }

    /// Reassigns one element of a surplus category to the category of a
    /// modality in deficit, moving it into that modality. Both indices
    /// move one unit toward zero.
    pub fn genus_event(&mut self, surplus: &CategoryKey, deficit: &CategoryKey) -> Result<(), EngineError> {
        let (sp, dp) = (self.props(surplus), self.props(deficit));
        if self.registry.get(surplus).is_none() {
            return Err(EngineError::UnknownCategory(surplus.to_string()));
        }
        let target = self
            .modalities
            .iter()
            .find(|m| &m.category == deficit)
            .map(|m| m.id)
            .ok_or_else(|| EngineError::UnknownCategory(deficit.to_string()))?;
        if !dp.is_subset(&sp) {
            return Err(EngineError::NotIncluded {
                surplus: self.label(surplus),
                deficit: self.label(deficit),
            });
        }
        let Some((_, mut e)) = self.take_elements(surplus, 1).pop() else {
            return Err(EngineError::NotIncluded {
                surplus: self.label(surplus),
                deficit: self.label(deficit),
            });
        };
        let generic = self.generic.clone();
        let (p, _) = self.paradigma(Typology::GenusParadigma, &generic, surplus, deficit)?;
        self.event_archetype(&p, 1, 1, 1)?;
        let formula = e.formula.render();
        e.category = deficit.clone();
        let mi = self.modality_index(target)?;
        self.modalities[mi].states.push(e);
        self.move_index(surplus, -1);
        self.move_index(deficit, 1);
        for (key, delta, m) in [(surplus, -1, None), (deficit, 1, Some(target.0))] {
            let mut r = self.record(Op::Genus);
            r.modality = m;
            self.describe(&mut r, key);
            r.delta = Some(delta);
            r.count = Some(1);
            r.archetype = Some(self.handle(&p));
            r.formulas = vec![formula.clone()];
            self.push(r);
        }
        Ok(())
    }

    // ----- emotions --------------------------------------------------------

    /// Drains surplus through emotional chains until none can be found.
    ///
    /// Candidates for the emotional state are categories in equilibrium
    /// with live elements, in key order. Base chains are preferred to
    /// complex ones; every chain is first simulated on a copy of the index.
    pub fn run_emotions(&mut self) -> Result<Vec<EmotionChain>, EngineError> {
        let mut out = Vec::new();
        loop {
            let surplus: Vec<(CategoryKey, Props)> = self
                .registry
                .iter()
                .map(|(k, _)| k.clone())
                .filter(|k| self.available(k) > 0)
                .map(|k| {
                    let p = self.props(&k);
                    (k, p)
                })
                .collect();
            if surplus.is_empty() {
                break;
            }
            let emotional: Vec<CategoryKey> = self
                .registry
                .iter()
                .map(|(k, _)| k.clone())
                .filter(|k| self.ledger.index(k) == 0 && self.live_count(k) > 0)
                .collect();
            let sets: Vec<Props> = surplus.iter().map(|(_, p)| p.clone()).collect();
            let mut found = None;
            for e in emotional {
                let ep = self.props(&e);
                if ep.is_empty() {
                    continue;
                }
                if let Some(c) = search::find_base_chain(&ep, &sets, self.config.max_chain) {
                    found = Some((e, ep, EmotionKind::Base, c));
                    break;
                }
                if let Some(c) = search::find_complex_chain(&ep, &sets, self.config.max_chain) {
                    found = Some((e, ep, EmotionKind::Complex, c));
                    break;
                }
            }
            let Some((e, ep, kind, chosen)) = found else { break };
            let factors: Vec<CategoryKey> = chosen.iter().map(|&i| surplus[i].0.clone()).collect();
            let refs: Vec<&Props> = chosen.iter().map(|&i| &sets[i]).collect();
            let outputs = match kind {
                EmotionKind::Base => search::base_outputs(&ep, &refs),
                EmotionKind::Complex => search::complex_outputs(&ep, &refs),
            };
            let steps = self.build_steps(&e, &factors, &outputs, &e)?;
            let mut keys = vec![e.clone()];
            keys.extend(factors.iter().cloned());
            let chain = self.chain_archetype(&keys)?;
            if !self.simulate(&e, &factors, &steps, kind, &chain) {
                break;
            }
            let modality = self.execute_emotion(&e, &steps)?;
            let ec = EmotionChain {
                clock: self.clock,
                kind,
                emotional: e,
                modality,
                factors,
                steps,
                chain,
            };
            self.emotions.push(ec.clone());
            out.push(ec);
        }
        Ok(out)
    }

    /// Replays a chain on a copy of the index: it must drain only surplus
    /// categories and leave the emotional category in equilibrium. Also
    /// recalls objective symbols whose emergents the chain uses.
    fn simulate(
        &mut self,
        e: &CategoryKey,
        factors: &[CategoryKey],
        steps: &[Step],
        kind: EmotionKind,
        chain: &EFormula,
    ) -> bool {
        let mut copy = self.ledger.clone();
        copy.apply(e, -1);
        for (i, s) in steps.iter().enumerate() {
            if i > 0 {
                copy.apply(&s.first, -1);
            }
            copy.apply(&s.second, -1);
            copy.apply(&s.output, 1);
        }
        let ok = copy.index(e) == 0 && factors.iter().all(|f| copy.index(f) >= 0);
        let mut r = self.record(Op::Simulate);
        self.describe(&mut r, e);
        r.label = Some(format!(
            "{} {}",
            match kind {
                EmotionKind::Base => "base",
                EmotionKind::Complex => "complex",
            },
            self.steps_label(&[vec![e.clone()], factors.to_vec()].concat(), e)
        ));
        r.archetype = Some(self.handle(chain));
        r.count = Some(steps.len() as u64);
        self.push(r);
        if ok {
            let images: BTreeSet<CategoryKey> = self
                .perceptions
                .iter()
                .filter(|(x, _, z)| {
                    factors.contains(z)
                        && self.symbols.get(x).and_then(|s| s.level) == Some(PromotionKind::ObjectiveSymbol)
                })
                .map(|(x, _, _)| x.clone())
                .collect();
            for x in images {
                // One mental image per category and clock, however many
                // chains recall it.
                let seen = self
                    .promotions_at(self.clock)
                    .any(|p| p.kind == PromotionKind::MentalImage && p.category == x);
                if !seen {
                    self.promote(PromotionKind::MentalImage, &x);
                }
            }
        }
        ok
    }

    fn execute_emotion(&mut self, e: &CategoryKey, steps: &[Step]) -> Result<ModalityId, EngineError> {
        let taken = self.take_elements(e, 1);
        let (modality, state) = taken.into_iter().next().expect("emotional category has a live element");
        let p = self
            .store
            .mint_flagged(Typology::Perception, state.formula.clone(), true)?;
        self.move_index(e, -1);
        let mut r = self.record(Op::Endogenous);
        r.modality = Some(modality.0);
        self.describe(&mut r, e);
        r.delta = Some(-1);
        r.count = Some(1);
        r.archetype = Some(self.handle(&p));
        r.formulas = vec![state.formula.render()];
        self.push(r);
        for (i, s) in steps.iter().enumerate() {
            if i > 0 {
                self.consume_record(&s.first, 1, &[], Some(&s.paradigma));
            }
            self.consume(&s.second, 1, Some(&s.paradigma));
            if i + 1 == steps.len() {
                self.produce_states(modality, &s.output, 1, &s.paradigma)?;
            } else {
                self.produce_intermediate(&s.output, 1, &s.paradigma);
            }
            self.event_archetype(&s.paradigma, 1, 1, 1)?;
        }
        Ok(modality)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinals() {
        assert_eq!(ordinal(0), EFormula::empty());
        assert_eq!(ordinal(1).render(), "{0}");
        assert_eq!(ordinal(2), ego_core::parse_formula("{0,{0}}").unwrap());
        assert_eq!(ordinal(4).len(), 4);
    }

    #[test]
    fn accidental_members_skip_properties() {
        let props: Props = [ordinal(0), ordinal(2)].into_iter().collect();
        assert_eq!(accidental_members(&props, 3), vec![ordinal(1), ordinal(3), ordinal(4)]);
    }
}
