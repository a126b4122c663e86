//! Planar-diagram code text format.
//!
//! Accepted input is a sequence of `X(a,b,c,d)` or `X[a,b,c,d]` tuples
//! separated by whitespace or commas. A surrounding `PD[...]` or `[...]`
//! wrapper is tolerated, the `X` may be omitted, and `#` starts a comment.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::DiagramError;

/// Validated PD code. Each tuple lists arc labels counterclockwise around a
/// crossing; labels are normalized to `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

impl PdCode {
    pub fn new(raw: Vec<[u32; 4]>) -> Result<Self, DiagramError> {
        if raw.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for t in &raw {
            for &a in t {
                *counts.entry(a).or_default() += 1;
            }
        }
        if let Some((&label, &count)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(DiagramError::ArcMultiplicity { label, count });
        }
        let relabel: BTreeMap<u32, u32> =
            counts.keys().enumerate().map(|(i, &a)| (a, i as u32 + 1)).collect();
        let crossings = raw.iter().map(|t| t.map(|a| relabel[&a])).collect();
        Ok(PdCode { crossings })
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn num_arcs(&self) -> usize {
        2 * self.crossings.len()
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, [a, b, c, d]) in self.crossings.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "X({a},{b},{c},{d})")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for PdCode {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_pd(s)
    }
}

pub fn parse_pd(text: &str) -> Result<PdCode, DiagramError> {
    let cleaned: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(" ");
    let mut s = cleaned.trim();
    if let Some(rest) = s.strip_prefix("PD") {
        s = rest.trim_start();
    }
    // Outer list brackets, if they wrap tuples rather than being a tuple.
    if (s.starts_with('[') && s.ends_with(']')) && s[1..].trim_start().starts_with(['X', '(', '[']) {
        s = s[1..s.len() - 1].trim();
    }
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut raw = Vec::new();
    let err = |pos: usize, msg: &str| DiagramError::MalformedSyntax { position: pos, message: msg.to_string() };
    let skip_sep = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos].is_ascii_whitespace() || bytes[*pos] == b',') {
            *pos += 1;
        }
    };
    loop {
        skip_sep(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        if bytes[pos] == b'X' {
            pos += 1;
        }
        let close = match bytes.get(pos) {
            Some(b'(') => b')',
            Some(b'[') => b']',
            _ => return Err(err(pos, "expected '(' or '['")),
        };
        pos += 1;
        let mut tuple = Vec::with_capacity(4);
        loop {
            skip_sep(&mut pos);
            match bytes.get(pos) {
                Some(&c) if c == close => {
                    pos += 1;
                    break;
                }
                Some(c) if c.is_ascii_digit() => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let v: u32 = s[start..pos].parse().map_err(|_| err(start, "label out of range"))?;
                    tuple.push(v);
                }
                None => return Err(err(pos, "unterminated tuple")),
                _ => return Err(err(pos, "expected a positive integer label")),
            }
        }
        let t: [u32; 4] = tuple.try_into().map_err(|_| err(pos, "crossing tuple must have 4 labels"))?;
        raw.push(t);
    }
    PdCode::new(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_bracket_styles_and_comments() {
        let a = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let b = parse_pd("# trefoil\nPD[X[1, 4, 2, 5], X[3, 6, 4, 1],\n X[5, 2, 6, 3]]").unwrap();
        let c = parse_pd("[(1,4,2,5),(3,6,4,1),(5,2,6,3)]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.num_crossings(), 3);
        assert_eq!(a.num_arcs(), 6);
    }

    #[test]
    fn labels_are_normalized() {
        let p = parse_pd("X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)").unwrap();
        assert_eq!(p, parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(DiagramError::ArcMultiplicity { .. })));
        assert!(matches!(parse_pd(""), Err(DiagramError::EmptyDiagram)));
        assert!(matches!(parse_pd("  # nothing\n"), Err(DiagramError::EmptyDiagram)));
        assert!(matches!(parse_pd("X(1,2,2)"), Err(DiagramError::MalformedSyntax { .. })));
        assert!(matches!(parse_pd("garbage"), Err(DiagramError::MalformedSyntax { .. })));
        assert!(matches!(parse_pd("X(1,2,2,1"), Err(DiagramError::MalformedSyntax { .. })));
        assert!(parse_pd("X(1,2,2,1)").is_ok());
    }

    #[test]
    fn display_round_trips() {
        let p = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(parse_pd(&p.to_string()).unwrap(), p);
    }
}
