//! The archetype memory.
//!
//! An archetype is the formula `{name, meaning}`. The name is
//! `{individual, serial, typology}`: the owning individual's name, an
//! increasing E-binary serial and a typology code. The meaning is
//! `{vinculum, datum}`, where the vinculum repeats the typology code and the
//! datum carries the payload: a formula, a number, or the names of other
//! archetypes tagged with the ordering markers [`marker_a`] and
//! [`marker_b`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use ego_codec::EBinary;
use ego_core::EFormula;
use serde::Serialize;

use crate::error::EngineError;

/// The kinds of archetype, each with a fixed numeric code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Typology {
    /// A perturbation, internal state or emergent, stored as it arrived.
    Perception,
    /// A number.
    Quantity,
    /// An ordered pair of quantity names.
    QuantityPair,
    /// One common aspect of a category.
    AbstractBase,
    /// A category made of two nested category archetypes.
    AbstractComposed,
    /// A count of perturbations together with their category.
    SensusUndam,
    /// An interpretation `{{C(X), C(Y)}, C(Z)}`.
    Paradigma,
    /// The two factor categories of an interpretation.
    Factors,
    /// The three element counts of an event.
    QuantityEvent,
    /// A paradigma together with the quantities of one occurrence.
    Event,
    /// An ordered chain of categories used by a behaviour.
    Chain,
    /// An interpretation recording a change of category.
    GenusParadigma,
}

impl Typology {
    /// Every typology.
    pub const ALL: [Typology; 12] = [
        Typology::Perception,
        Typology::Quantity,
        Typology::QuantityPair,
        Typology::AbstractBase,
        Typology::AbstractComposed,
        Typology::SensusUndam,
        Typology::Paradigma,
        Typology::Factors,
        Typology::QuantityEvent,
        Typology::Event,
        Typology::Chain,
        Typology::GenusParadigma,
    ];

    /// The numeric code carried in names and vincula.
    pub fn code(self) -> u64 {
        match self {
            Typology::AbstractBase => 0,
            Typology::Factors => 1,
            Typology::Paradigma => 2,
            Typology::GenusParadigma => 3,
            Typology::QuantityEvent => 7,
            Typology::Event => 9,
            Typology::Perception => 10,
            Typology::Quantity => 11,
            Typology::QuantityPair => 12,
            Typology::AbstractComposed => 13,
            Typology::Chain => 20,
            Typology::SensusUndam => 21,
        }
    }

    /// The typology with this code.
    pub fn from_code(code: u64) -> Option<Typology> {
        Typology::ALL.into_iter().find(|t| t.code() == code)
    }

    /// The typology formula `{mark, E-binary(code)}`.
    pub fn formula(self) -> EFormula {
        EFormula::pair(typology_mark(), EBinary::from_value(self.code()).formula().clone())
    }

    /// Whether the datum holds the names of two other archetypes.
    pub fn nests_names(self) -> bool {
        !matches!(self, Typology::Perception | Typology::Quantity | Typology::AbstractBase)
    }

    /// Whether archetypes of this typology stand for a category.
    pub fn is_category(self) -> bool {
        matches!(self, Typology::AbstractBase | Typology::AbstractComposed)
    }
}

impl fmt::Display for Typology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `{{{{∅}}}, {∅}}`: the first member of every typology formula.
pub fn typology_mark() -> EFormula {
    EFormula::pair(
        EFormula::wrap(EFormula::empty(), 3),
        EFormula::wrap(EFormula::empty(), 1),
    )
}

/// `{{{{{{∅}}}}}, {∅}}`: the first member of every individual name.
pub fn individual_prefix() -> EFormula {
    EFormula::pair(
        EFormula::wrap(EFormula::empty(), 5),
        EFormula::wrap(EFormula::empty(), 1),
    )
}

/// The name of individual `id`: `{prefix, E-binary(id)}`.
pub fn individual_name(id: u64) -> EFormula {
    EFormula::pair(individual_prefix(), EBinary::from_value(id).formula().clone())
}

/// `{{{{{∅}}}}, ∅}`: tags the first of two ordered names.
pub fn marker_a() -> EFormula {
    EFormula::pair(EFormula::wrap(EFormula::empty(), 4), EFormula::empty())
}

/// `{{{{{∅}}}}, {∅}}`: tags the second of two ordered names.
pub fn marker_b() -> EFormula {
    EFormula::pair(
        EFormula::wrap(EFormula::empty(), 4),
        EFormula::wrap(EFormula::empty(), 1),
    )
}

/// `{{A, first}, {B, second}}`.
pub fn ordered_datum(first: &EFormula, second: &EFormula) -> EFormula {
    EFormula::pair(
        EFormula::pair(marker_a(), first.clone()),
        EFormula::pair(marker_b(), second.clone()),
    )
}

/// Reads `{{A, first}, {B, second}}` back.
pub fn split_ordered(datum: &EFormula) -> Option<(EFormula, EFormula)> {
    let (a, b) = (marker_a(), marker_b());
    let tagged = |tag: &EFormula| -> Option<EFormula> {
        datum.members().iter().find_map(|m| match m.members() {
            [x, y] if x == tag => Some(y.clone()),
            [x, y] if y == tag => Some(x.clone()),
            _ => None,
        })
    };
    if datum.len() != 2 {
        return None;
    }
    Some((tagged(&a)?, tagged(&b)?))
}

/// A stored archetype.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Archetype {
    name: EFormula,
    typology: Typology,
    serial: u64,
    datum: EFormula,
    endogenous: bool,
}

impl Archetype {
    /// The name formula.
    pub fn name(&self) -> &EFormula {
        &self.name
    }

    /// The typology.
    pub fn typology(&self) -> Typology {
        self.typology
    }

    /// The serial number inside the name.
    pub fn serial(&self) -> u64 {
        self.serial
    }

    /// The payload.
    pub fn datum(&self) -> &EFormula {
        &self.datum
    }

    /// Whether a perception came from inside the individual.
    pub fn is_endogenous(&self) -> bool {
        self.endogenous
    }

    /// The vinculum: the typology formula.
    pub fn vinculum(&self) -> EFormula {
        self.typology.formula()
    }

    /// `{vinculum, datum}`.
    pub fn meaning(&self) -> EFormula {
        EFormula::pair(self.vinculum(), self.datum.clone())
    }

    /// The whole archetype `{name, meaning}`.
    pub fn formula(&self) -> EFormula {
        EFormula::pair(self.name.clone(), self.meaning())
    }

    /// A compact handle for logs: `#serial Typology`.
    pub fn handle(&self) -> String {
        format!("#{} {}", self.serial, self.typology)
    }
}

/// The archetypes of one individual, indexed by name.
#[derive(Debug, Clone)]
pub struct ArchetypeStore {
    individual: EFormula,
    entries: Vec<Archetype>,
    by_name: HashMap<EFormula, usize>,
    next_serial: u64,
}

impl ArchetypeStore {
    /// An empty store for individual `id`. Serials start at 1.
    pub fn new(individual_id: u64) -> Self {
        ArchetypeStore {
            individual: individual_name(individual_id),
            entries: Vec::new(),
            by_name: HashMap::new(),
            next_serial: 1,
        }
    }

    /// The owning individual's name.
    pub fn individual(&self) -> &EFormula {
        &self.individual
    }

    /// The name the next archetype of typology `t` would receive.
    pub fn next_name(&self, t: Typology) -> EFormula {
        self.name_for(self.next_serial, t)
    }

    fn name_for(&self, serial: u64, t: Typology) -> EFormula {
        EFormula::set([
            self.individual.clone(),
            EBinary::from_value(serial).formula().clone(),
            t.formula(),
        ])
    }

    /// Reads the serial and typology out of a name of this individual.
    pub fn parse_name(&self, name: &EFormula) -> Result<(u64, Typology), EngineError> {
        let malformed = || EngineError::MalformedName(name.render());
        if name.len() != 3 || !name.contains(&self.individual) {
            return Err(malformed());
        }
        let mark = typology_mark();
        let mut serial = None;
        let mut typology = None;
        for m in name.members().iter().filter(|m| **m != self.individual) {
            if m.contains(&mark) && m.len() == 2 {
                let code = m.members().iter().find(|x| **x != mark).ok_or_else(malformed)?;
                let code = EBinary::from_formula(code)
                    .and_then(|e| e.value())
                    .map_err(|_| malformed())?;
                typology = Typology::from_code(code);
            } else {
                serial = EBinary::from_formula(m).and_then(|e| e.value()).ok();
            }
        }
        match (serial, typology) {
            (Some(s), Some(t)) => Ok((s, t)),
            _ => Err(malformed()),
        }
    }

    /// Creates and stores a new archetype under the next serial.
    pub fn mint(&mut self, typology: Typology, datum: EFormula) -> Result<EFormula, EngineError> {
        self.mint_flagged(typology, datum, false)
    }

    /// [`ArchetypeStore::mint`] with the endogenous flag of perceptions.
    pub fn mint_flagged(
        &mut self,
        typology: Typology,
        datum: EFormula,
        endogenous: bool,
    ) -> Result<EFormula, EngineError> {
        let name = self.next_name(typology);
        self.put(name.clone(), typology, datum, endogenous)?;
        Ok(name)
    }

    /// Stores an archetype under an explicit name.
    ///
    /// The name must belong to this individual, carry the given typology and
    /// be new. Archetypes that nest names may only refer to stored ones.
    pub fn put(
        &mut self,
        name: EFormula,
        typology: Typology,
        datum: EFormula,
        endogenous: bool,
    ) -> Result<(), EngineError> {
        let (serial, named) = self.parse_name(&name)?;
        if named != typology {
            return Err(EngineError::MalformedName(name.render()));
        }
        if self.by_name.contains_key(&name) {
            return Err(EngineError::DuplicateName(name.render()));
        }
        if typology.nests_names() {
            let (x, y) = split_ordered(&datum).ok_or_else(|| EngineError::MalformedName(datum.render()))?;
            for n in [x, y] {
                if !self.by_name.contains_key(&n) {
                    return Err(EngineError::UnknownName(n.render()));
                }
            }
        }
        self.next_serial = self.next_serial.max(serial + 1);
        self.by_name.insert(name.clone(), self.entries.len());
        self.entries.push(Archetype {
            name,
            typology,
            serial,
            datum,
            endogenous,
        });
        Ok(())
    }

    /// Looks an archetype up by name.
    pub fn get_by_name(&self, name: &EFormula) -> Result<&Archetype, EngineError> {
        self.by_name
            .get(name)
            .map(|&i| &self.entries[i])
            .ok_or_else(|| EngineError::UnknownName(name.render()))
    }

    /// Archetypes of one typology, oldest first.
    pub fn find_by_typology(&self, t: Typology) -> impl Iterator<Item = &Archetype> {
        self.entries.iter().filter(move |a| a.typology == t)
    }

    /// Every archetype, oldest first.
    pub fn iter(&self) -> impl Iterator<Item = &Archetype> {
        self.entries.iter()
    }

    /// Number of stored archetypes.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether nothing is stored.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The leaves of a nesting, left to right.
    ///
    /// A composed category descends to its base archetypes; a chain descends
    /// through nested chains to the category archetypes at level 0. Any other
    /// archetype is its own level 0.
    pub fn descend_to_level0(&self, name: &EFormula) -> Result<Vec<&Archetype>, EngineError> {
        let mut out = Vec::new();
        let mut path = BTreeSet::new();
        self.descend(name, None, &mut path, &mut out)?;
        Ok(out)
    }

    fn descend<'a>(
        &'a self,
        name: &EFormula,
        within: Option<Typology>,
        path: &mut BTreeSet<EFormula>,
        out: &mut Vec<&'a Archetype>,
    ) -> Result<(), EngineError> {
        let a = self.get_by_name(name)?;
        let nests = match within {
            None => matches!(a.typology, Typology::AbstractComposed | Typology::Chain),
            Some(t) => a.typology == t,
        };
        if !nests {
            out.push(a);
            return Ok(());
        }
        if !path.insert(name.clone()) {
            return Err(EngineError::Cycle(name.render()));
        }
        let (x, y) = split_ordered(&a.datum).ok_or_else(|| EngineError::MalformedName(a.datum.render()))?;
        self.descend(&x, Some(a.typology), path, out)?;
        self.descend(&y, Some(a.typology), path, out)?;
        path.remove(name);
        Ok(())
    }

    /// The common aspects of a category archetype, read from level 0.
    pub fn aspects_of(&self, name: &EFormula) -> Result<Vec<EFormula>, EngineError> {
        Ok(self
            .descend_to_level0(name)?
            .into_iter()
            .map(|a| a.datum.clone())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> EFormula {
        ego_core::parse_formula(s).unwrap()
    }

    #[test]
    fn fixed_formulas() {
        assert_eq!(typology_mark(), f("{{{{0}}},{0}}"));
        assert_eq!(individual_prefix(), f("{{{{{{0}}}}},{0}}"));
        assert_eq!(marker_a(), f("{{{{{0}}}},0}"));
        assert_eq!(marker_b(), f("{{{{{0}}}},{0}}"));
        let p = EBinary::from_bits("1010").unwrap();
        assert_eq!(
            Typology::Perception.formula(),
            EFormula::pair(typology_mark(), p.formula().clone())
        );
    }

    #[test]
    fn codes_are_distinct() {
        let codes: BTreeSet<u64> = Typology::ALL.iter().map(|t| t.code()).collect();
        assert_eq!(codes.len(), Typology::ALL.len());
        for t in Typology::ALL {
            assert_eq!(Typology::from_code(t.code()), Some(t));
        }
    }

    #[test]
    fn names_round_trip_and_grow() {
        let mut store = ArchetypeStore::new(1);
        let a = store
            .mint(Typology::Quantity, EBinary::from_value(4).formula().clone())
            .unwrap();
        let b = store.mint(Typology::Perception, f("{0}")).unwrap();
        assert_eq!(store.parse_name(&a).unwrap(), (1, Typology::Quantity));
        assert_eq!(store.parse_name(&b).unwrap(), (2, Typology::Perception));
        assert!(a.contains(&individual_name(1)));
        assert_eq!(
            store.get_by_name(&b).unwrap().meaning(),
            EFormula::pair(Typology::Perception.formula(), f("{0}"))
        );
    }

    #[test]
    fn perception_filter() {
        let mut store = ArchetypeStore::new(1);
        store.mint(Typology::Quantity, f("{0}")).unwrap();
        let p = store.mint(Typology::Perception, f("{{0}}")).unwrap();
        let found: Vec<_> = store
            .find_by_typology(Typology::Perception)
            .map(|a| a.name().clone())
            .collect();
        assert_eq!(found, vec![p]);
    }

    #[test]
    fn duplicate_and_unknown_names() {
        let mut store = ArchetypeStore::new(1);
        let a = store.mint(Typology::Quantity, f("{0}")).unwrap();
        assert!(matches!(
            store.put(a.clone(), Typology::Quantity, f("{0}"), false),
            Err(EngineError::DuplicateName(_))
        ));
        let missing = store.next_name(Typology::AbstractBase);
        let datum = ordered_datum(&a, &missing);
        assert!(matches!(
            store.mint(Typology::AbstractComposed, datum),
            Err(EngineError::UnknownName(_))
        ));
        assert!(matches!(store.get_by_name(&missing), Err(EngineError::UnknownName(_))));
        assert!(matches!(
            store.put(f("{0}"), Typology::Quantity, f("{0}"), false),
            Err(EngineError::MalformedName(_))
        ));
    }

    #[test]
    fn composed_descends_to_aspects_in_order() {
        let mut store = ArchetypeStore::new(1);
        let p = f("{{{0}}}");
        let q = f("{0,{0}}");
        let r = f("{{0,{0}}}");
        let bp = store.mint(Typology::AbstractBase, p.clone()).unwrap();
        let bq = store.mint(Typology::AbstractBase, q.clone()).unwrap();
        let br = store.mint(Typology::AbstractBase, r.clone()).unwrap();
        let pq = store.mint(Typology::AbstractComposed, ordered_datum(&bp, &bq)).unwrap();
        assert_eq!(store.aspects_of(&pq).unwrap(), vec![p.clone(), q.clone()]);
        let pqr = store.mint(Typology::AbstractComposed, ordered_datum(&pq, &br)).unwrap();
        assert_eq!(store.aspects_of(&pqr).unwrap(), vec![p, q, r]);
        assert_eq!(store.aspects_of(&bp).unwrap().len(), 1);
    }

    #[test]
    fn chains_stop_at_categories() {
        let mut store = ArchetypeStore::new(1);
        let b1 = store.mint(Typology::AbstractBase, f("{{0}}")).unwrap();
        let b2 = store.mint(Typology::AbstractBase, f("{0,{0}}")).unwrap();
        let c12 = store.mint(Typology::AbstractComposed, ordered_datum(&b1, &b2)).unwrap();
        let b3 = store.mint(Typology::AbstractBase, f("{{{0}}}")).unwrap();
        let ch = store.mint(Typology::Chain, ordered_datum(&c12, &b3)).unwrap();
        let ch2 = store.mint(Typology::Chain, ordered_datum(&ch, &b1)).unwrap();
        let leaves: Vec<_> = store
            .descend_to_level0(&ch2)
            .unwrap()
            .into_iter()
            .map(|a| a.name().clone())
            .collect();
        assert_eq!(leaves, vec![c12, b3, b1]);
    }

    #[test]
    fn split_reads_back() {
        let x = f("{0}");
        let y = f("{{0}}");
        assert_eq!(split_ordered(&ordered_datum(&x, &y)), Some((x.clone(), y.clone())));
        assert_eq!(split_ordered(&ordered_datum(&y, &x)), Some((y, x)));
        assert_eq!(split_ordered(&f("{0}")), None);
    }
}
