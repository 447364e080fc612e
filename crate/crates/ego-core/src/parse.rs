//! Parser for the ASCII surface syntax.
//!
//! ```text
//! formula := "0" | "{" formula ("," formula)* "}"
//! ```
//!
//! ASCII space, tab, carriage return and newline between tokens are ignored.
//! The parser is iterative, so nesting depth is bounded only by [`Limits`].

use std::fmt;

use thiserror::Error;

use crate::assembly::Assembly;
use crate::formula::EFormula;
use crate::limits::{Limits, ResourceError};

/// What went wrong in a syntax error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyntaxErrorKind {
    /// An opening brace is never closed, or a closing brace has no opener.
    UnbalancedBraces,
    /// `{}`: a set must list at least one member.
    EmptyBraces,
    /// A comma with no formula on one side.
    StrayComma,
    /// A character outside the grammar.
    UnexpectedCharacter(char),
    /// A complete formula is followed by more tokens.
    TrailingInput,
    /// No formula at all.
    EmptyInput,
}

impl fmt::Display for SyntaxErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SyntaxErrorKind::UnbalancedBraces => f.write_str("unbalanced braces"),
            SyntaxErrorKind::EmptyBraces => f.write_str("empty braces"),
            SyntaxErrorKind::StrayComma => f.write_str("stray comma"),
            SyntaxErrorKind::UnexpectedCharacter(c) => write!(f, "unexpected character {c:?}"),
            SyntaxErrorKind::TrailingInput => f.write_str("trailing input"),
            SyntaxErrorKind::EmptyInput => f.write_str("empty input"),
        }
    }
}

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{kind} at byte {offset}")]
pub struct SyntaxError {
    /// The kind of error.
    pub kind: SyntaxErrorKind,
    /// Byte offset into the input.
    pub offset: usize,
}

/// Parse failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Input does not follow the grammar.
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    /// Input is well formed but exceeds a configured bound.
    #[error(transparent)]
    Resource(#[from] ResourceError),
}

impl ParseError {
    fn syntax(kind: SyntaxErrorKind, offset: usize) -> ParseError {
        ParseError::Syntax(SyntaxError { kind, offset })
    }
}

/// Parses with the default [`Limits`].
pub fn parse(text: &str) -> Result<Assembly, ParseError> {
    parse_with(text, &Limits::default())
}

/// Parses and normalizes with the default [`Limits`].
pub fn parse_formula(text: &str) -> Result<EFormula, ParseError> {
    parse(text).map(|a| a.normalize())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Expect {
    Formula,
    CommaOrClose,
    End,
}

/// Parses `text` into a raw [`Assembly`], enforcing `limits`.
pub fn parse_with(text: &str, limits: &Limits) -> Result<Assembly, ParseError> {
    // Each frame: members parsed so far and the offset of its opening brace.
    let mut stack: Vec<(Vec<Assembly>, usize)> = Vec::new();
    let mut expect = Expect::Formula;
    let mut result: Option<Assembly> = None;
    let mut last_comma = 0;

    for (offset, ch) in text.char_indices() {
        let done = match ch {
            ' ' | '\t' | '\n' | '\r' => continue,
            '{' => {
                if expect != Expect::Formula {
                    return Err(unexpected(expect, ch, offset));
                }
                stack.push((Vec::new(), offset));
                if stack.len() > limits.max_depth {
                    return Err(ResourceError::DepthExceeded {
                        limit: limits.max_depth,
                        found: stack.len(),
                    }
                    .into());
                }
                None
            }
            '0' => {
                if expect != Expect::Formula {
                    return Err(unexpected(expect, ch, offset));
                }
                Some(Assembly::leaf())
            }
            ',' => {
                if expect != Expect::CommaOrClose {
                    return Err(ParseError::syntax(SyntaxErrorKind::StrayComma, offset));
                }
                last_comma = offset;
                expect = Expect::Formula;
                None
            }
            '}' => match expect {
                Expect::CommaOrClose => {
                    let (members, _) = stack.pop().expect("inside braces");
                    Some(Assembly::branch(members))
                }
                Expect::Formula => {
                    return Err(match stack.last() {
                        Some((members, open)) if members.is_empty() => {
                            ParseError::syntax(SyntaxErrorKind::EmptyBraces, *open)
                        }
                        Some(_) => ParseError::syntax(SyntaxErrorKind::StrayComma, last_comma),
                        None => ParseError::syntax(SyntaxErrorKind::UnbalancedBraces, offset),
                    })
                }
                Expect::End => return Err(ParseError::syntax(SyntaxErrorKind::UnbalancedBraces, offset)),
            },
            other => return Err(ParseError::syntax(SyntaxErrorKind::UnexpectedCharacter(other), offset)),
        };
        if let Some(formula) = done {
            match stack.last_mut() {
                None => {
                    result = Some(formula);
                    expect = Expect::End;
                }
                Some((members, _)) => {
                    members.push(formula);
                    if members.len() > limits.max_width {
                        return Err(ResourceError::WidthExceeded {
                            limit: limits.max_width,
                            found: members.len(),
                        }
                        .into());
                    }
                    expect = Expect::CommaOrClose;
                }
            }
        }
    }

    if let Some((_, open)) = stack.last() {
        return Err(ParseError::syntax(SyntaxErrorKind::UnbalancedBraces, *open));
    }
    result.ok_or_else(|| ParseError::syntax(SyntaxErrorKind::EmptyInput, text.len()))
}

fn unexpected(expect: Expect, ch: char, offset: usize) -> ParseError {
    let kind = if expect == Expect::End {
        SyntaxErrorKind::TrailingInput
    } else {
        SyntaxErrorKind::UnexpectedCharacter(ch)
    };
    ParseError::syntax(kind, offset)
}

impl std::str::FromStr for Assembly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl std::str::FromStr for EFormula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}
