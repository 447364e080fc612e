//! Positional node codes for drawn trees.
//!
//! The root is coded `0`. Its children are coded `0` followed by the
//! zero-free naturals `1, 2, …, 9, 11, …` in drawing order. For any other
//! node with code `d`, split `d = p‖t` where the *terminal part* `t` is the
//! digits after the last `0` and the *initial part* `p` is the rest. Its
//! first child is coded `p‖0‖t` and its `k`-th further child `p‖t‖0‖h(k)`,
//! where `h(k)` is the `k`-th zero-free natural. So the first child of
//! `012004` is `0120004` and the next ones are `01200401`, `01200402`, …
//!
//! Every code except the root ends in a non-zero digit, and the map from
//! nodes to codes is injective; [`subassembly_at`] inverts it by peeling one
//! generation at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use ego_core::Assembly;
use thiserror::Error;

/// The position of a node as child indices from the root (empty for the
/// root).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NodePath(Vec<usize>);

impl NodePath {
    /// The root position.
    pub fn root() -> NodePath {
        NodePath(Vec::new())
    }

    /// Child indices from the root.
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    /// Number of generations below the root.
    pub fn row(&self) -> usize {
        self.0.len()
    }
}

impl From<Vec<usize>> for NodePath {
    fn from(v: Vec<usize>) -> Self {
        NodePath(v)
    }
}

/// A node code: a digit string, never a number.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeCode(String);

/// Errors from code parsing and lookup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    /// The string is not a well-formed code.
    #[error("malformed node code {0:?}")]
    Malformed(String),
    /// The code is well formed but names no node of the tree.
    #[error("node code {0} does not occur in this tree")]
    Unknown(NodeCode),
}

impl NodeCode {
    /// The root code `0`.
    pub fn root() -> NodeCode {
        NodeCode("0".to_owned())
    }

    /// The digits.
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Whether this is the root code.
    pub fn is_root(&self) -> bool {
        self.0 == "0"
    }

    /// Digits after the last `0` (empty for the root).
    pub fn terminal_part(&self) -> &str {
        let cut = self.0.rfind('0').map_or(0, |i| i + 1);
        &self.0[cut..]
    }

    /// Digits up to and including the last `0`.
    pub fn initial_part(&self) -> &str {
        let cut = self.0.rfind('0').map_or(0, |i| i + 1);
        &self.0[..cut]
    }

    /// Code of the `index`-th child (0-based) of the node with this code.
    pub fn child(&self, index: usize) -> NodeCode {
        if self.is_root() {
            return NodeCode(format!("0{}", h_term(index as u64 + 1)));
        }
        let (p, t) = (self.initial_part(), self.terminal_part());
        if index == 0 {
            NodeCode(format!("{p}0{t}"))
        } else {
            NodeCode(format!("{p}{t}0{}", h_term(index as u64)))
        }
    }

    /// Parent code and this node's 0-based index among its siblings, or
    /// `None` for the root.
    pub fn parent(&self) -> Option<(NodeCode, usize)> {
        if self.is_root() {
            return None;
        }
        let (p, t) = (self.initial_part(), self.terminal_part());
        let k = h_index(t)?;
        if p == "0" {
            // A child of the root.
            return Some((NodeCode::root(), (k - 1) as usize));
        }
        let stem = &p[..p.len() - 1];
        if stem.ends_with('0') {
            // First child: p‖0‖t with the parent's initial part p.
            Some((NodeCode(format!("{stem}{t}")), 0))
        } else {
            // Later child: the parent's code followed by 0 and h(k).
            Some((NodeCode(stem.to_owned()), k as usize))
        }
    }
}

impl FromStr for NodeCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ok = s.starts_with('0') && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.ends_with('0'));
        if ok {
            Ok(NodeCode(s.to_owned()))
        } else {
            Err(CodeError::Malformed(s.to_owned()))
        }
    }
}

impl fmt::Display for NodeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The `k`-th (1-based) natural number whose decimal digits contain no `0`:
/// 1, …, 9, 11, …, 19, 21, …, 99, 111, … (bijective base nine).
pub fn h_term(mut k: u64) -> String {
    assert!(k >= 1, "the sequence is 1-based");
    let mut digits = Vec::new();
    while k > 0 {
        k -= 1;
        digits.push(b'1' + (k % 9) as u8);
        k /= 9;
    }
    digits.reverse();
    String::from_utf8(digits).expect("ascii digits")
}

/// Inverse of [`h_term`]; `None` if the string is empty or contains `0` or a
/// non-digit.
fn h_index(s: &str) -> Option<u64> {
    if s.is_empty() {
        return None;
    }
    s.bytes().try_fold(0u64, |acc, b| match b {
        b'1'..=b'9' => acc.checked_mul(9)?.checked_add(u64::from(b - b'0')),
        _ => None,
    })
}

/// The first `n` terms of the zero-free sequence.
pub fn h_sequence(n: usize) -> Vec<String> {
    (1..=n as u64).map(h_term).collect()
}

/// Codes every node of a drawn tree, in pre-order.
pub fn code_nodes(x: &Assembly) -> BTreeMap<NodePath, NodeCode> {
    let mut out = BTreeMap::new();
    let mut stack = vec![(x, Vec::<usize>::new(), NodeCode::root())];
    while let Some((node, path, code)) = stack.pop() {
        for (i, child) in node.children().iter().enumerate().rev() {
            let mut child_path = path.clone();
            child_path.push(i);
            stack.push((child, child_path, code.child(i)));
        }
        out.insert(NodePath(path), code);
    }
    out
}

/// The subtree whose node carries `code`.
pub fn subassembly_at<'a>(x: &'a Assembly, code: &NodeCode) -> Result<&'a Assembly, CodeError> {
    let mut indices = Vec::new();
    let mut current = code.clone();
    while let Some((parent, index)) = current.parent() {
        indices.push(index);
        current = parent;
    }
    let mut node = x;
    for &i in indices.iter().rev() {
        node = node.children().get(i).ok_or_else(|| CodeError::Unknown(code.clone()))?;
    }
    Ok(node)
}
