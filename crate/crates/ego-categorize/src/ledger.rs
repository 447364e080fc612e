//! The homeostatic index: produced minus consumed, per category.

use std::collections::BTreeMap;

use crate::category::CategoryKey;

/// Per-category signed counters. A category is in equilibrium when its
/// counter is zero.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HomeostaticLedger {
    counters: BTreeMap<CategoryKey, i64>,
}

impl HomeostaticLedger {
    /// All counters at zero.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `delta` to a category's counter and returns the new value.
    pub fn apply(&mut self, key: &CategoryKey, delta: i64) -> i64 {
        let c = self.counters.entry(key.clone()).or_insert(0);
        *c += delta;
        *c
    }

    /// A category's counter (zero if never touched).
    pub fn index(&self, key: &CategoryKey) -> i64 {
        self.counters.get(key).copied().unwrap_or(0)
    }

    /// Whether a category's counter is zero.
    pub fn is_equilibrium(&self, key: &CategoryKey) -> bool {
        self.index(key) == 0
    }

    /// Whether every counter is zero.
    pub fn all_in_equilibrium(&self) -> bool {
        self.counters.values().all(|&c| c == 0)
    }

    /// Non-zero counters in key order.
    pub fn imbalances(&self) -> impl Iterator<Item = (&CategoryKey, i64)> {
        self.counters.iter().filter(|(_, &c)| c != 0).map(|(k, &c)| (k, c))
    }

    /// Every touched counter in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&CategoryKey, i64)> {
        self.counters.iter().map(|(k, &c)| (k, c))
    }
}

/// Functional form of [`HomeostaticLedger::apply`].
pub fn ledger_apply(mut ledger: HomeostaticLedger, key: &CategoryKey, delta: i64) -> HomeostaticLedger {
    ledger.apply(key, delta);
    ledger
}

#[cfg(test)]
mod tests {
    use super::*;
    use ego_core::parse_formula;

    #[test]
    fn produce_and_consume() {
        let k = CategoryKey::of(&parse_formula("{0}").unwrap());
        let l = ledger_apply(HomeostaticLedger::new(), &k, 5);
        let l = ledger_apply(l, &k, -5);
        assert!(l.is_equilibrium(&k));
        assert!(l.all_in_equilibrium());
    }

    #[test]
    fn produced_ten_consumed_nine() {
        let k = CategoryKey::of(&parse_formula("{{0}}").unwrap());
        let mut l = HomeostaticLedger::new();
        l.apply(&k, 10);
        l.apply(&k, -5);
        assert_eq!(l.apply(&k, -4), 1);
        assert_eq!(l.imbalances().count(), 1);
    }

    #[test]
    fn intermediates_are_neutral() {
        let k = CategoryKey::of(&parse_formula("{0,{0}}").unwrap());
        let mut l = HomeostaticLedger::new();
        l.apply(&k, 1);
        l.apply(&k, -1);
        assert_eq!(l.index(&k), 0);
    }
}
