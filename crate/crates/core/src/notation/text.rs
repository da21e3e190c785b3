use std::fmt;
use std::str::FromStr;

use super::{Direction, Move, SignedPermutation, TraversalDefinition};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
enum Token {
    Open(Direction),
    Close(Direction),
    Int(i32),
    Key(char, u32),
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(at, c)) = chars.peek() {
        match c {
            '#' => {
                while let Some(&(_, c)) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            c if c.is_whitespace() || c == ',' => {
                chars.next();
            }
            '[' | '{' | '}' | ']' => {
                chars.next();
                let tok = match c {
                    '[' => Token::Open(Direction::Forward),
                    '{' => Token::Open(Direction::Reverse),
                    '}' => Token::Close(Direction::Forward),
                    _ => Token::Close(Direction::Reverse),
                };
                out.push((at, tok));
            }
            '-' | '\u{2212}' | '+' | '0'..='9' => {
                chars.next();
                let negative = c == '-' || c == '\u{2212}';
                let mut digits = String::new();
                if c.is_ascii_digit() {
                    digits.push(c);
                }
                while let Some(&(_, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                }
                if digits.is_empty() {
                    return Err(parse_err(at, format!("sign '{c}' without a number")));
                }
                let n: i32 = digits
                    .parse()
                    .map_err(|_| parse_err(at, format!("number {digits} is too large")))?;
                out.push((at, Token::Int(if negative { -n } else { n })));
            }
            'd' | 's' | 'm' => {
                chars.next();
                while chars.peek().is_some_and(|&(_, c)| c == ' ' || c == '\t') {
                    chars.next();
                }
                if chars.next_if(|&(_, c)| c == '=').is_none() {
                    return Err(parse_err(at, format!("expected '=' after '{c}'")));
                }
                while chars.peek().is_some_and(|&(_, c)| c == ' ' || c == '\t') {
                    chars.next();
                }
                let mut digits = String::new();
                while let Some((_, d)) = chars.next_if(|&(_, d)| d.is_ascii_digit()) {
                    digits.push(d);
                }
                let n: u32 = digits
                    .parse()
                    .map_err(|_| parse_err(at, format!("expected a positive number after '{c}='")))?;
                if n == 0 {
                    return Err(parse_err(at, format!("'{c}' must be positive")));
                }
                out.push((at, Token::Key(c, n)));
            }
            other => return Err(parse_err(at, format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

/// The scale implied by the entry count alone: the integer `s >= 2` with
/// `s^d = count`, or 2 if there is none.
pub(crate) fn inferred_scale(dim: usize, count: usize) -> u32 {
    let root = (count as f64).powf(1.0 / dim as f64).round() as u64;
    for s in root.saturating_sub(1).max(2)..=root + 1 {
        if u32::try_from(dim)
            .ok()
            .and_then(|d| s.checked_pow(d))
            .is_some_and(|p| p == count as u64)
        {
            return s as u32;
        }
    }
    2
}

/// Parses the textual form of a traversal definition.
///
/// Entries are written `[...}` (forward) or `{...]` (reverse); the integers
/// between two entries form the move joining them. An optional header
/// `d=<dim> s=<scale> m=<move unit>` may precede the first entry, and `#`
/// starts a comment running to the end of the line.
pub fn parse_definition(text: &str) -> Result<TraversalDefinition> {
    let tokens = lex(text)?;
    let (mut dim, mut scale, mut unit) = (None, None, None);
    let mut k = 0;
    while let Some(&(at, Token::Key(c, n))) = tokens.get(k) {
        let slot = match c {
            'd' => &mut dim,
            's' => &mut scale,
            _ => &mut unit,
        };
        if slot.replace(n).is_some() {
            return Err(parse_err(at, format!("'{c}' given twice")));
        }
        k += 1;
    }

    let mut entries: Vec<SignedPermutation> = Vec::new();
    let mut raw_moves: Vec<(usize, Vec<i32>)> = Vec::new();
    let mut pending: Vec<i32> = Vec::new();
    let mut pending_at = 0;
    while k < tokens.len() {
        let (at, tok) = tokens[k];
        match tok {
            Token::Open(dir) => {
                if entries.is_empty() && !pending.is_empty() {
                    return Err(parse_err(pending_at, "move before the first entry"));
                }
                if !entries.is_empty() {
                    raw_moves.push((pending_at, std::mem::take(&mut pending)));
                }
                let mut values = Vec::new();
                k += 1;
                loop {
                    match tokens.get(k) {
                        Some(&(_, Token::Int(n))) => values.push(n),
                        Some(&(_, Token::Close(close))) if close == dir => break,
                        Some(&(close_at, Token::Close(_))) => {
                            return Err(parse_err(close_at, "mismatched closing bracket"))
                        }
                        Some(&(other, _)) => return Err(parse_err(other, "unterminated entry")),
                        None => return Err(parse_err(at, "unterminated entry")),
                    }
                    k += 1;
                }
                let entry = SignedPermutation::new(values, dir).map_err(|e| match e {
                    Error::NotAPermutation { entries, .. } => {
                        parse_err(at, format!("{entries:?} is not a signed permutation"))
                    }
                    other => other,
                })?;
                if let Some(first) = entries.first() {
                    if first.dim() != entry.dim() {
                        return Err(parse_err(
                            at,
                            format!("entry has {} axes, expected {}", entry.dim(), first.dim()),
                        ));
                    }
                }
                entries.push(entry);
            }
            Token::Int(n) => {
                if pending.is_empty() {
                    pending_at = at;
                }
                pending.push(n);
            }
            Token::Close(_) => return Err(parse_err(at, "closing bracket without an entry")),
            Token::Key(..) => return Err(parse_err(at, "header must come before the entries")),
        }
        k += 1;
    }
    if !pending.is_empty() {
        return Err(parse_err(pending_at, "move after the last entry"));
    }
    let Some(first) = entries.first() else {
        return Err(parse_err(text.len(), "no entries"));
    };
    let found = first.dim();
    if let Some(d) = dim {
        if d as usize != found {
            return Err(Error::DimensionMismatch {
                expected: d as usize,
                found,
            });
        }
    }
    let moves = raw_moves
        .into_iter()
        .map(|(at, steps)| {
            Move::new(steps, found).map_err(|e| match e {
                Error::MoveOutOfRange { element, .. } => {
                    parse_err(at, format!("move element {element} is not an axis of dimension {found}"))
                }
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let scale = scale.unwrap_or_else(|| inferred_scale(found, entries.len()));
    TraversalDefinition::with_move_unit(found, scale, unit.unwrap_or(scale), entries, moves)
}

/// Canonical single-line text form; parses back to an equal definition.
pub fn format_definition(def: &TraversalDefinition) -> String {
    let mut out = String::new();
    let inferable = inferred_scale(def.dim(), def.len()) == def.scale();
    if !inferable || def.move_unit() != def.scale() {
        out.push_str(&format!("d={} s={}", def.dim(), def.scale()));
        if def.move_unit() != def.scale() {
            out.push_str(&format!(" m={}", def.move_unit()));
        }
        out.push(' ');
    }
    for (k, entry) in def.entries().iter().enumerate() {
        if k > 0 {
            let m = &def.moves()[k - 1];
            out.push(' ');
            if !m.is_empty() {
                out.push_str(&m.to_string());
                out.push(' ');
            }
        }
        out.push_str(&entry.to_string());
    }
    out
}

impl FromStr for TraversalDefinition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_definition(s)
    }
}

impl fmt::Display for TraversalDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_definition(self))
    }
}
