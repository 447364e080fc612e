//! Categories, instance tests and the category registry.

use std::collections::BTreeMap;
use std::fmt;

use ego_core::EFormula;

use crate::aspects::{common_aspects, subterms};

/// Stable identity of a category: the canonical text of its properties.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CategoryKey(String);

impl CategoryKey {
    /// The key of a properties formula.
    pub fn of(properties: &EFormula) -> CategoryKey {
        CategoryKey(properties.render())
    }

    /// The canonical text.
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CategoryKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A set of common aspects, with the ids of the instances it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Category {
    properties: EFormula,
    provenance: Vec<u64>,
}

impl Category {
    /// A category with the given properties.
    pub fn from_properties(properties: EFormula) -> Category {
        Category {
            properties,
            provenance: Vec::new(),
        }
    }

    /// Attaches instance ids (kept sorted and distinct).
    pub fn with_provenance<I: IntoIterator<Item = u64>>(mut self, ids: I) -> Category {
        self.provenance.extend(ids);
        self.provenance.sort_unstable();
        self.provenance.dedup();
        self
    }

    /// The properties: a formula whose members are the common aspects.
    pub fn properties(&self) -> &EFormula {
        &self.properties
    }

    /// Ids of the generating instances.
    pub fn provenance(&self) -> &[u64] {
        &self.provenance
    }

    /// The identity key.
    pub fn key(&self) -> CategoryKey {
        CategoryKey::of(&self.properties)
    }

    /// True for the category whose only aspect is `∅`: every formula is an
    /// instance of it, so it distinguishes nothing.
    pub fn is_generic(&self) -> bool {
        is_generic(&self.properties)
    }
}

/// Whether a properties formula is `{∅}` (or has no members at all).
pub fn is_generic(properties: &EFormula) -> bool {
    properties.members().iter().all(EFormula::is_empty)
}

/// The category of the inputs: the set of their common aspects.
///
/// # Panics
/// On an empty input list.
pub fn category(xs: &[EFormula]) -> Category {
    Category::from_properties(EFormula::set(common_aspects(xs)))
}

/// Whether every property of `c` occurs somewhere in `x`.
pub fn is_instance(x: &EFormula, c: &Category) -> bool {
    has_properties(x, c.properties())
}

/// [`is_instance`] against a bare properties formula.
pub fn has_properties(x: &EFormula, properties: &EFormula) -> bool {
    match properties.members() {
        [] => true,
        [p] => crate::aspects::is_subassembly(p, x),
        ps => {
            let subs = subterms(x);
            ps.iter().all(|p| subs.contains(p))
        }
    }
}

/// Categories known to an individual, keyed by their properties.
///
/// New evidence is unified with what is already known: a batch of elements
/// joins an existing category when every element is an instance of it.
#[derive(Debug, Clone, Default)]
pub struct CategoryRegistry {
    categories: BTreeMap<CategoryKey, Category>,
}

impl CategoryRegistry {
    /// An empty registry.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a category (merging provenance with an equal one) and returns
    /// its key.
    pub fn insert(&mut self, c: Category) -> CategoryKey {
        let key = c.key();
        match self.categories.get_mut(&key) {
            Some(existing) => {
                *existing = existing.clone().with_provenance(c.provenance.iter().copied());
            }
            None => {
                self.categories.insert(key.clone(), c);
            }
        }
        key
    }

    /// Looks a category up.
    pub fn get(&self, key: &CategoryKey) -> Option<&Category> {
        self.categories.get(key)
    }

    /// All categories in key order.
    pub fn iter(&self) -> impl Iterator<Item = (&CategoryKey, &Category)> {
        self.categories.iter()
    }

    /// Number of categories.
    pub fn len(&self) -> usize {
        self.categories.len()
    }

    /// Whether no category is known.
    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    /// The category a batch of elements belongs to.
    ///
    /// The batch's own category is computed first. If it is already known,
    /// that is the answer. Otherwise the batch joins the known non-generic
    /// category with the most properties (ties by key) of which every element
    /// is an instance; failing that, the new category is registered.
    ///
    /// # Panics
    /// On an empty batch.
    pub fn unify(&mut self, elements: &[EFormula], ids: &[u64]) -> CategoryKey {
        let fresh = category(elements).with_provenance(ids.iter().copied());
        let key = fresh.key();
        if self.categories.contains_key(&key) {
            return self.insert(fresh);
        }
        let best = self
            .categories
            .iter()
            .filter(|(_, c)| !c.is_generic() && elements.iter().all(|x| is_instance(x, c)))
            .max_by(|(ka, a), (kb, b)| a.properties().len().cmp(&b.properties().len()).then_with(|| kb.cmp(ka)))
            .map(|(k, _)| k.clone());
        match best {
            Some(k) => {
                let merged = self.categories[&k].clone().with_provenance(ids.iter().copied());
                self.categories.insert(k.clone(), merged);
                k
            }
            None => self.insert(fresh),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ego_core::parse_formula;

    fn f(s: &str) -> EFormula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn worked_category_and_instances() {
        let u = f("{0,{{0}},{0,{{0}}}}");
        let v = f("{{0},{{0}}}");
        let c = category(&[u.clone(), v.clone()]);
        assert_eq!(c.properties(), &f("{{{0}},0}"));
        assert!(is_instance(&u, &c) && is_instance(&v, &c));
        assert!(!is_instance(&f("{0}"), &Category::from_properties(f("{{{0}}}"))));
        assert!(is_instance(&f("{0}"), &Category::from_properties(f("{0}"))));
        assert!(Category::from_properties(f("{0}")).is_generic());
        assert!(!c.is_generic());
    }

    #[test]
    fn keys_are_canonical_text() {
        let c = category(&[f("{{0},{{0}}}"), f("{0,{{0}},{0,{{0}}}}")]);
        assert_eq!(c.key().as_str(), f("{0,{{0}}}").render());
    }

    #[test]
    fn registry_unifies_with_known_categories() {
        let mut reg = CategoryRegistry::new();
        let a = f("{{{0}}}");
        let b = f("{{{{0}}}}");
        let k1 = reg.insert(Category::from_properties(EFormula::set([a.clone(), b.clone()])).with_provenance([1]));
        // A pair sharing both properties but also something more gets its own
        // category first, and the second batch is recognised by instance test.
        let x = EFormula::set([a.clone(), b.clone(), f("{0,{0}}")]);
        let y = EFormula::set([a.clone(), b.clone(), f("{{0},{{0}}}")]);
        let k2 = reg.unify(&[x.clone(), y.clone()], &[2, 3]);
        assert_eq!(k2, k1);
        assert_eq!(reg.get(&k1).unwrap().provenance(), &[1, 2, 3]);
        // A batch that fits nothing known is registered.
        let k3 = reg.unify(&[f("{0}")], &[4]);
        assert_ne!(k3, k1);
        assert_eq!(reg.len(), 2);
    }
}
