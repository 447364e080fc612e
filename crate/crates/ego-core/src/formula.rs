//! Canonical, duplicate-free formulas.
//!
//! An [`EFormula`] is an immutable, reference-counted node. Members are kept
//! deduplicated and sorted in the canonical order, so two formulas denote the
//! same set exactly when they are structurally identical. Every node caches
//! its descendant count, depth, a structural hash and its truth value under
//! both assignments of `∅`, which keeps equality, ordering and classification
//! cheap even for large evaluators that share subterms.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::truth::{SentenceClass, TruthValue};

/// A canonical formula: a finite set built from `∅` alone.
///
/// Cloning is cheap (an atomic reference-count increment).
#[derive(Clone)]
pub struct EFormula(Arc<Node>);

struct Node {
    members: Box<[EFormula]>,
    /// Number of tree nodes (saturating); `∅` counts one.
    desc: u64,
    /// `∅` has depth 0; a set has one more than its deepest member.
    depth: u32,
    hash: u64,
    /// Bit 0: value under `∅ = T`; bit 1: value under `∅ = F`.
    truth: u8,
}

const TRUTH_UNDER_T: u8 = 0b01;
const TRUTH_UNDER_F: u8 = 0b10;

fn mix(mut h: u64) -> u64 {
    // splitmix64 finaliser: cheap and well distributed.
    h ^= h >> 30;
    h = h.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h ^= h >> 27;
    h = h.wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

impl EFormula {
    /// The empty set `∅`, the only atom of the language.
    pub fn empty() -> EFormula {
        static EMPTY: OnceLock<EFormula> = OnceLock::new();
        EMPTY
            .get_or_init(|| {
                EFormula(Arc::new(Node {
                    members: Box::new([]),
                    desc: 1,
                    depth: 0,
                    hash: mix(0x0e60),
                    truth: TRUTH_UNDER_T,
                }))
            })
            .clone()
    }

    /// Builds the set of the given members, removing duplicates and sorting
    /// them canonically. An empty iterator yields `∅`, the set with no members.
    pub fn set<I>(members: I) -> EFormula
    where
        I: IntoIterator<Item = EFormula>,
    {
        let mut members: Vec<EFormula> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Self::from_canonical(members)
    }

    /// `{x}`.
    pub fn singleton(x: EFormula) -> EFormula {
        Self::from_canonical(vec![x])
    }

    /// `{x, y}` (which collapses to `{x}` when the two are equal).
    pub fn pair(x: EFormula, y: EFormula) -> EFormula {
        Self::set([x, y])
    }

    /// Wraps `x` in `n` extra pairs of braces: `wrap(x, 2) = {{x}}`.
    pub fn wrap(x: EFormula, n: usize) -> EFormula {
        (0..n).fold(x, |acc, _| EFormula::singleton(acc))
    }

    /// Builds a node from members that are already sorted and distinct.
    fn from_canonical(members: Vec<EFormula>) -> EFormula {
        if members.is_empty() {
            return Self::empty();
        }
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        let mut desc: u64 = 1;
        let mut depth: u32 = 0;
        let mut hash: u64 = 0x5e7 ^ members.len() as u64;
        let mut all_true_under_t = true;
        let mut all_true_under_f = true;
        for m in &members {
            desc = desc.saturating_add(m.0.desc);
            depth = depth.max(m.0.depth);
            hash = mix(hash.rotate_left(7) ^ m.0.hash);
            all_true_under_t &= m.0.truth & TRUTH_UNDER_T != 0;
            all_true_under_f &= m.0.truth & TRUTH_UNDER_F != 0;
        }
        // NAND: a set is false exactly when every member is true.
        let mut truth = 0;
        if !all_true_under_t {
            truth |= TRUTH_UNDER_T;
        }
        if !all_true_under_f {
            truth |= TRUTH_UNDER_F;
        }
        EFormula(Arc::new(Node {
            members: members.into_boxed_slice(),
            desc,
            depth: depth + 1,
            hash: mix(hash),
            truth,
        }))
    }

    /// The members in canonical order.
    pub fn members(&self) -> &[EFormula] {
        &self.0.members
    }

    /// Whether this is `∅`.
    pub fn is_empty(&self) -> bool {
        self.0.members.is_empty()
    }

    /// Number of members (0 for `∅`).
    pub fn len(&self) -> usize {
        self.0.members.len()
    }

    /// Descendant count: `∅` counts 1, a set counts one plus the counts of
    /// its members. Saturates at `u64::MAX` for astronomically large terms.
    pub fn desc(&self) -> u64 {
        self.0.desc
    }

    /// Nesting depth; `∅` has depth 0.
    pub fn depth(&self) -> u32 {
        self.0.depth
    }

    /// Whether `x` is a member of this set.
    pub fn contains(&self, x: &EFormula) -> bool {
        self.0.members.binary_search(x).is_ok()
    }

    /// Truth value under the assignment `∅ = v` (NAND semantics).
    pub fn truth(&self, v: TruthValue) -> TruthValue {
        let bit = match v {
            TruthValue::T => TRUTH_UNDER_T,
            TruthValue::F => TRUTH_UNDER_F,
        };
        TruthValue::from_bool(self.0.truth & bit != 0)
    }

    /// Tautology, contradiction or contingent sentence.
    pub fn classify(&self) -> SentenceClass {
        match self.0.truth {
            0b11 => SentenceClass::Tautology,
            0b00 => SentenceClass::Contradiction,
            _ => SentenceClass::Contingent,
        }
    }

    /// Whether both handles point at the same shared node.
    pub fn ptr_eq(&self, other: &EFormula) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Streams the canonical ASCII rendering byte by byte without
    /// materialising it.
    pub fn render_bytes(&self) -> RenderBytes<'_> {
        RenderBytes { stack: vec![(self, 0)] }
    }

    /// Canonical ASCII rendering, e.g. `{0,{0}}`.
    pub fn render(&self) -> String {
        self.render_bytes().map(char::from).collect()
    }

    /// Human-oriented rendering with `∅` and `", "` separators, as used in
    /// worked examples: `{∅, {∅}}`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        for b in self.render_bytes() {
            match b {
                b'0' => out.push('∅'),
                b',' => out.push_str(", "),
                other => out.push(char::from(other)),
            }
        }
        out
    }

    /// Iterates over every node of the tree (pre-order, shared subterms
    /// visited once per occurrence).
    pub fn nodes(&self) -> impl Iterator<Item = &EFormula> {
        let mut stack = vec![self];
        std::iter::from_fn(move || {
            let next = stack.pop()?;
            stack.extend(next.members().iter().rev());
            Some(next)
        })
    }
}

fn structural_eq(a: &EFormula, b: &EFormula) -> bool {
    if a.ptr_eq(b) {
        return true;
    }
    a.0.hash == b.0.hash
        && a.0.desc == b.0.desc
        && a.0.members.len() == b.0.members.len()
        && a.0
            .members
            .iter()
            .zip(b.0.members.iter())
            .all(|(x, y)| structural_eq(x, y))
}

impl PartialEq for EFormula {
    fn eq(&self, other: &Self) -> bool {
        structural_eq(self, other)
    }
}

impl Eq for EFormula {}

impl Hash for EFormula {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

/// Canonical order: by descendant count, then by canonical rendering.
impl Ord for EFormula {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.ptr_eq(other) {
            return Ordering::Equal;
        }
        match self.0.desc.cmp(&other.0.desc) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        if self.0.hash == other.0.hash && structural_eq(self, other) {
            return Ordering::Equal;
        }
        self.render_bytes().cmp(other.render_bytes())
    }
}

impl PartialOrd for EFormula {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for EFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut buf = [0u8; 256];
        let mut len = 0;
        for b in self.render_bytes() {
            buf[len] = b;
            len += 1;
            if len == buf.len() {
                // Rendering is pure ASCII, so any split is a char boundary.
                f.write_str(std::str::from_utf8(&buf[..len]).expect("ascii"))?;
                len = 0;
            }
        }
        f.write_str(std::str::from_utf8(&buf[..len]).expect("ascii"))
    }
}

impl fmt::Debug for EFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EFormula({self})")
    }
}

impl Default for EFormula {
    fn default() -> Self {
        EFormula::empty()
    }
}

/// Byte iterator over the canonical rendering of a formula.
///
/// Each stack frame holds a node and a small state counter: `0` means the
/// node has not been opened; odd `2i + 1` means member `i` is next; even
/// `2i + 2` means member `i` has been fully emitted.
pub struct RenderBytes<'a> {
    stack: Vec<(&'a EFormula, usize)>,
}

impl Iterator for RenderBytes<'_> {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        loop {
            let (node, state) = *self.stack.last()?;
            let n = node.members().len();
            let top = self.stack.len() - 1;
            if state == 0 {
                if n == 0 {
                    self.stack.pop();
                    return Some(b'0');
                }
                self.stack[top].1 = 1;
                return Some(b'{');
            }
            if state % 2 == 1 {
                let i = (state - 1) / 2;
                self.stack[top].1 = state + 1;
                self.stack.push((&node.members()[i], 0));
                continue;
            }
            let i = (state - 2) / 2;
            if i + 1 < n {
                self.stack[top].1 = state + 1;
                return Some(b',');
            }
            self.stack.pop();
            return Some(b'}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e() -> EFormula {
        EFormula::empty()
    }

    #[test]
    fn empty_renders_as_zero() {
        assert_eq!(e().render(), "0");
        assert_eq!(e().desc(), 1);
        assert_eq!(e().depth(), 0);
        assert!(e().is_empty());
    }

    #[test]
    fn duplicates_collapse() {
        let x = EFormula::set([e(), e()]);
        assert_eq!(x.render(), "{0}");
        assert_eq!(x, EFormula::singleton(e()));
    }

    #[test]
    fn members_sorted_by_desc_then_rendering() {
        let one = EFormula::singleton(e());
        let x = EFormula::set([one.clone(), e()]);
        assert_eq!(x.render(), "{0,{0}}");
        // Equal descendant counts fall back to the rendering: "{0,{0}}" < "{{{0}}}".
        let two = EFormula::set([e(), one.clone()]);
        let wrapped = EFormula::wrap(e(), 3);
        assert_eq!(two.desc(), wrapped.desc());
        assert!(two < wrapped);
    }

    #[test]
    fn desc_counts_nodes() {
        let one = EFormula::singleton(e());
        let x = EFormula::set([e(), one.clone()]);
        assert_eq!(x.desc(), 4);
        assert_eq!(x.depth(), 2);
        assert_eq!(x.nodes().count(), 4);
    }

    #[test]
    fn display_matches_render_for_long_output() {
        let x = EFormula::wrap(e(), 300);
        assert_eq!(x.to_string(), x.render());
        assert_eq!(x.render().len(), 601);
    }

    #[test]
    fn pretty_uses_set_notation() {
        let one = EFormula::singleton(e());
        let x = EFormula::set([e(), one]);
        assert_eq!(x.pretty(), "{∅, {∅}}");
    }

    #[test]
    fn cached_truth_is_nand() {
        let one = EFormula::singleton(e());
        assert_eq!(one.truth(TruthValue::T), TruthValue::F);
        assert_eq!(one.truth(TruthValue::F), TruthValue::T);
        let x = EFormula::set([e(), one]);
        assert_eq!(x.truth(TruthValue::T), TruthValue::T);
    }
}
