//! Resource bounds. The language itself is unbounded; these limits keep
//! parsing and evaluator construction predictable.

use thiserror::Error;

/// Bounds on formula shape accepted at public entry points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum nesting depth (`∅` has depth 0).
    pub max_depth: usize,
    /// Maximum number of members of a single set.
    pub max_width: usize,
}

impl Limits {
    /// Default maximum depth.
    pub const DEFAULT_MAX_DEPTH: usize = 64;
    /// Default maximum width.
    pub const DEFAULT_MAX_WIDTH: usize = 1024;

    /// Checks a canonical formula against these bounds.
    pub fn check(&self, x: &crate::EFormula) -> Result<(), ResourceError> {
        if x.depth() as usize > self.max_depth {
            return Err(ResourceError::DepthExceeded {
                limit: self.max_depth,
                found: x.depth() as usize,
            });
        }
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![x];
        while let Some(node) = stack.pop() {
            if !seen.insert(node.clone()) {
                continue;
            }
            if node.len() > self.max_width {
                return Err(ResourceError::WidthExceeded {
                    limit: self.max_width,
                    found: node.len(),
                });
            }
            stack.extend(node.members());
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_depth: Self::DEFAULT_MAX_DEPTH,
            max_width: Self::DEFAULT_MAX_WIDTH,
        }
    }
}

/// A configured resource bound was exceeded.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    /// A formula nests deeper than allowed.
    #[error("nesting depth {found} exceeds the limit of {limit}")]
    DepthExceeded {
        /// Configured bound.
        limit: usize,
        /// Observed depth.
        found: usize,
    },
    /// A set has more members than allowed.
    #[error("set width {found} exceeds the limit of {limit}")]
    WidthExceeded {
        /// Configured bound.
        limit: usize,
        /// Observed width.
        found: usize,
    },
    /// Enumerating the member pairings would exceed the allowed count.
    #[error("{required} pairings required but the limit is {limit}")]
    PairingsExceeded {
        /// Configured bound.
        limit: u64,
        /// Number of pairings that would be needed (saturating).
        required: u128,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::EFormula;

    #[test]
    fn defaults() {
        let l = Limits::default();
        assert_eq!(l.max_depth, 64);
        assert_eq!(l.max_width, 1024);
    }

    #[test]
    fn depth_is_checked() {
        let l = Limits {
            max_depth: 2,
            max_width: 8,
        };
        assert!(l.check(&EFormula::wrap(EFormula::empty(), 2)).is_ok());
        assert_eq!(
            l.check(&EFormula::wrap(EFormula::empty(), 3)),
            Err(ResourceError::DepthExceeded { limit: 2, found: 3 })
        );
    }

    #[test]
    fn width_is_checked() {
        let l = Limits {
            max_depth: 8,
            max_width: 1,
        };
        let x = EFormula::pair(EFormula::empty(), EFormula::singleton(EFormula::empty()));
        assert_eq!(l.check(&x), Err(ResourceError::WidthExceeded { limit: 1, found: 2 }));
    }
}
