//! Parser for the textual term grammar.
//!
//! ```text
//! expr  := "pt"
//!        | "S" <n>                  sphere, n a non-negative integer
//!        | "A(" <name> "," <c> ")"  atom with connectivity c >= -1
//!        | "(" expr (" v " expr)+ ")"   wedge
//!        | "(" expr (" ^ " expr)+ ")"   smash
//!        | "Susp(" expr ")"
//!        | "Plus(" expr ")"
//! ```
//!
//! Whitespace between tokens is free-form; [`SpaceExpr`]'s `Display`
//! implementation emits the canonical single-space form, and
//! `parse_space(e.to_string())` returns `e` for every well-formed term.

use super::SpaceExpr;

/// Sphere dimensions above this bound are rejected at parse time, which
/// keeps all later dimension arithmetic comfortably inside `u64`/`i64`.
const DIM_CAP: u64 = 1_000_000_000;

const MAX_DEPTH: u32 = 200;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {found:?} at byte {at}")]
    Unexpected { found: char, at: usize },
    #[error("expected {expected} at byte {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("sphere dimension exceeds {DIM_CAP}")]
    DimensionTooLarge,
    #[error("atom connectivity must be >= -1")]
    BadConnectivity,
    #[error("atom name is empty or contains ','")]
    BadAtomName,
    #[error("wedge and smash cannot be mixed in one group")]
    MixedOperators,
    #[error("nesting deeper than {MAX_DEPTH}")]
    TooDeep,
    #[error("trailing input at byte {at}")]
    Trailing { at: usize },
}

/// Parse a term in the textual grammar.
pub fn parse_space(input: &str) -> Result<SpaceExpr, ParseError> {
    let mut p = Parser {
        src: input.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr(0)?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::Trailing { at: p.pos });
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        Some(b)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b) if b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, byte: u8, what: &'static str) -> Result<(), ParseError> {
        match self.bump() {
            Some(b) if b == byte => Ok(()),
            Some(_) => Err(ParseError::Expected {
                expected: what,
                at: self.pos - 1,
            }),
            None => Err(ParseError::UnexpectedEnd),
        }
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Expected {
                expected: "digits",
                at: start,
            });
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<u64>()
            .map_err(|_| ParseError::DimensionTooLarge)
    }

    fn keyword(&mut self) -> &'a [u8] {
        let start = self.pos;
        while matches!(self.peek(), Some(b) if b.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn expr(&mut self, depth: u32) -> Result<SpaceExpr, ParseError> {
        if depth > MAX_DEPTH {
            return Err(ParseError::TooDeep);
        }
        self.skip_ws();
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => self.group(depth),
            Some(b'S') => {
                // "S<digits>" is a sphere, "Susp(...)" a suspension
                let save = self.pos;
                let word = self.keyword();
                match word {
                    b"S" => {
                        let n = self.digits()?;
                        if n > DIM_CAP {
                            return Err(ParseError::DimensionTooLarge);
                        }
                        Ok(SpaceExpr::Sphere(n))
                    }
                    b"Susp" => {
                        self.expect(b'(', "'(' after Susp")?;
                        let inner = self.expr(depth + 1)?;
                        self.skip_ws();
                        self.expect(b')', "')' closing Susp")?;
                        Ok(SpaceExpr::susp(inner))
                    }
                    _ => Err(ParseError::Expected {
                        expected: "S<n> or Susp(",
                        at: save,
                    }),
                }
            }
            Some(b'P') => {
                let save = self.pos;
                let word = self.keyword();
                if word == b"Plus" {
                    self.expect(b'(', "'(' after Plus")?;
                    let inner = self.expr(depth + 1)?;
                    self.skip_ws();
                    self.expect(b')', "')' closing Plus")?;
                    Ok(SpaceExpr::plus(inner))
                } else {
                    Err(ParseError::Expected {
                        expected: "Plus(",
                        at: save,
                    })
                }
            }
            Some(b'p') => {
                let save = self.pos;
                if self.keyword() == b"pt" {
                    Ok(SpaceExpr::Point)
                } else {
                    Err(ParseError::Expected {
                        expected: "pt",
                        at: save,
                    })
                }
            }
            Some(b'A') => {
                let save = self.pos;
                if self.keyword() != b"A" {
                    return Err(ParseError::Expected {
                        expected: "A(name,conn)",
                        at: save,
                    });
                }
                self.expect(b'(', "'(' after A")?;
                self.atom_body()
            }
            Some(found) => Err(ParseError::Unexpected {
                found: found as char,
                at: self.pos,
            }),
        }
    }

    /// `<name> "," <conn> ")"`; the name runs to the first comma.
    fn atom_body(&mut self) -> Result<SpaceExpr, ParseError> {
        let start = self.pos;
        while !matches!(self.peek(), Some(b',') | None) {
            self.pos += 1;
        }
        if self.peek().is_none() {
            return Err(ParseError::UnexpectedEnd);
        }
        let name = std::str::from_utf8(&self.src[start..self.pos])
            .map_err(|_| ParseError::BadAtomName)?
            .trim()
            .to_string();
        if name.is_empty() {
            return Err(ParseError::BadAtomName);
        }
        self.expect(b',', "','")?;
        self.skip_ws();
        let negative = self.peek() == Some(b'-');
        if negative {
            self.pos += 1;
        }
        let magnitude = self.digits()?;
        let conn = if negative {
            -(magnitude.min(i64::MAX as u64) as i64)
        } else if magnitude > DIM_CAP {
            return Err(ParseError::DimensionTooLarge);
        } else {
            magnitude as i64
        };
        if conn < -1 {
            return Err(ParseError::BadConnectivity);
        }
        self.skip_ws();
        self.expect(b')', "')' closing atom")?;
        Ok(SpaceExpr::atom(name, conn))
    }

    /// `"(" expr (op expr)+ ")"` with a consistent operator.
    fn group(&mut self, depth: u32) -> Result<SpaceExpr, ParseError> {
        self.expect(b'(', "'('")?;
        let mut children = vec![self.expr(depth + 1)?];
        let mut op: Option<u8> = None;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    break;
                }
                Some(b @ (b'v' | b'^')) => {
                    self.pos += 1;
                    match op {
                        None => op = Some(b),
                        Some(prev) if prev != b => return Err(ParseError::MixedOperators),
                        _ => {}
                    }
                    children.push(self.expr(depth + 1)?);
                }
                Some(_) => {
                    return Err(ParseError::Expected {
                        expected: "'v', '^' or ')'",
                        at: self.pos,
                    })
                }
                None => return Err(ParseError::UnexpectedEnd),
            }
        }
        match op {
            Some(b'v') => Ok(SpaceExpr::Wedge(children)),
            Some(_) => Ok(SpaceExpr::Smash(children)),
            None => Err(ParseError::Expected {
                expected: "at least two operands in a group",
                at: self.pos,
            }),
        }
    }
}
