//! Parser for group-spec strings.
//!
//! Grammar, case-insensitive, no whitespace:
//!
//! ```text
//! spec   := atom ('x' atom)*
//! atom   := 'C' n | 'Z' n | 'D' n | 'S' n | 'A' n | 'Dic' n
//!         | 'Q' m | 'E' p '^' k
//! ```
//!
//! `Z` is a synonym for `C`. `Q<m>` names the generalized quaternion group
//! of order `m`, so `m` must be a power of two at least 8; it maps onto the
//! dicyclic family as `Dic(m/4)`. Errors carry the byte offset they were
//! detected at.

use std::fmt;

use pg_core::group::spec::{Family, GroupSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SpecParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (at byte {})", self.message, self.offset)
    }
}

impl std::error::Error for SpecParseError {}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, at: usize, message: impl Into<String>) -> SpecParseError {
        SpecParseError {
            offset: at,
            message: message.into(),
        }
    }

    fn take_letters(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii letters")
    }

    fn take_number(&mut self, what: &str) -> Result<u32, SpecParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(start, format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| self.error(start, format!("{what} is too large")))
    }
}

pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecParseError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut atoms = Vec::new();
    loop {
        atoms.push(parse_atom(&mut cur)?);
        match cur.peek() {
            None => break,
            Some(b'x') | Some(b'X') => {
                cur.pos += 1;
                if cur.peek().is_none() {
                    return Err(cur.error(cur.pos, "expected a factor after 'x'"));
                }
            }
            Some(b) => {
                return Err(cur.error(cur.pos, format!("unexpected character '{}'", b as char)))
            }
        }
    }
    Ok(if atoms.len() == 1 {
        atoms.pop().expect("one atom")
    } else {
        GroupSpec::Product(atoms)
    })
}

fn parse_atom(cur: &mut Cursor) -> Result<GroupSpec, SpecParseError> {
    let start = cur.pos;
    let letters = cur.take_letters().to_ascii_uppercase();
    if letters.is_empty() {
        return Err(cur.error(start, "expected a family name"));
    }
    let family = match letters.as_str() {
        "C" | "Z" => Family::Cyclic(cur.take_number("the cyclic order")?),
        "D" => Family::Dihedral(cur.take_number("the dihedral parameter")?),
        "S" => Family::Symmetric(cur.take_number("the symmetric degree")?),
        "A" => Family::Alternating(cur.take_number("the alternating degree")?),
        "DIC" => Family::Dicyclic(cur.take_number("the dicyclic parameter")?),
        "Q" => {
            let m = cur.take_number("the quaternion group order")?;
            if m < 8 || !m.is_power_of_two() {
                return Err(cur.error(
                    start,
                    format!("Q{m} is not a generalized quaternion group; the order must be a power of 2, at least 8"),
                ));
            }
            Family::Dicyclic(m / 4)
        }
        "E" => {
            let p = cur.take_number("the prime")?;
            match cur.peek() {
                Some(b'^') => cur.pos += 1,
                _ => return Err(cur.error(cur.pos, "expected '^' and an exponent")),
            }
            let k = cur.take_number("the exponent")?;
            Family::ElemAbelian(p, k)
        }
        other => {
            return Err(cur.error(
                start,
                format!("unknown family '{other}' (expected C, Z, D, S, A, Dic, Q, or E)"),
            ))
        }
    };
    Ok(GroupSpec::Atom(family))
}
