//! Recursive-descent parser.
//!
//! ```text
//! formula := disj
//! disj    := conj { "|" conj }
//! conj    := lit { "&" lit }
//! lit     := "!" lit | "(" formula ")" | atom
//! atom    := IDENT "(" term { "," term } ")" | term "=" term | term "!=" term
//! term    := "x" INT | "y" INT
//! ```
//!
//! `IDENT` is `E` or `R`, indices start at 1, and whitespace is ignored.
//! `&` and `|` associate to the left.

use std::fmt;

use super::{Formula, RelSymbol, Term};

/// Positions are 1-based character offsets; end of input is one past the
/// last character.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: expected {}, found {}",
            self.position,
            self.expected.join(" or "),
            self.found
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(RelSymbol),
    Var(Term),
    LParen,
    RParen,
    Comma,
    Bang,
    Amp,
    Pipe,
    EqSign,
    NotEq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Var(t) => write!(f, "'{t}'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Comma => f.write_str("','"),
            Tok::Bang => f.write_str("'!'"),
            Tok::Amp => f.write_str("'&'"),
            Tok::Pipe => f.write_str("'|'"),
            Tok::EqSign => f.write_str("'='"),
            Tok::NotEq => f.write_str("'!='"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            '&' => Some(Tok::Amp),
            '|' => Some(Tok::Pipe),
            '=' => Some(Tok::EqSign),
            _ => None,
        };
        if let Some(tok) = single {
            out.push((pos, tok));
            i += 1;
            continue;
        }
        if c == '!' {
            if chars.get(i + 1) == Some(&'=') {
                out.push((pos, Tok::NotEq));
                i += 2;
            } else {
                out.push((pos, Tok::Bang));
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            out.push((pos, word_token(&word, pos)?));
            continue;
        }
        return Err(ParseError {
            position: pos,
            expected: vec!["a token"],
            found: format!("'{c}'"),
        });
    }
    out.push((chars.len() + 1, Tok::End));
    Ok(out)
}

fn word_token(word: &str, pos: usize) -> Result<Tok, ParseError> {
    match word {
        "E" => return Ok(Tok::Ident(RelSymbol::E)),
        "R" => return Ok(Tok::Ident(RelSymbol::R)),
        _ => {}
    }
    let bad = || ParseError {
        position: pos,
        expected: vec!["'E'", "'R'", "a variable x<n> or y<n> with n >= 1"],
        found: format!("'{word}'"),
    };
    let (head, digits) = word.split_at(1);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let index: u32 = digits.parse().map_err(|_| bad())?;
    if index == 0 {
        return Err(bad());
    }
    match head {
        "x" => Ok(Tok::Var(Term::Obj(index))),
        "y" => Ok(Tok::Var(Term::Param(index))),
        _ => Err(bad()),
    }
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let tok = self.tokens[self.at].1.clone();
        if tok != Tok::End {
            self.at += 1;
        }
        tok
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let (position, tok) = &self.tokens[self.at];
        ParseError {
            position: *position,
            expected,
            found: tok.to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(vec![name]))
        }
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.conj()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            f = f.or(self.conj()?);
        }
        Ok(f)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.lit()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            f = f.and(self.lit()?);
        }
        Ok(f)
    }

    fn lit(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(self.lit()?.not())
            }
            Tok::LParen => {
                self.bump();
                let f = self.disj()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(f)
            }
            Tok::Ident(symbol) => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let mut args = vec![self.term()?];
                loop {
                    match self.peek() {
                        Tok::Comma => {
                            self.bump();
                            args.push(self.term()?);
                        }
                        Tok::RParen => {
                            self.bump();
                            break;
                        }
                        _ => return Err(self.error(vec!["','", "')'"])),
                    }
                }
                Ok(Formula::Rel { symbol, args })
            }
            Tok::Var(a) => {
                self.bump();
                let negated = match self.peek() {
                    Tok::EqSign => false,
                    Tok::NotEq => true,
                    _ => return Err(self.error(vec!["'='", "'!='"])),
                };
                self.bump();
                let b = self.term()?;
                let eq = Formula::Eq(a, b);
                Ok(if negated { eq.not() } else { eq })
            }
            _ => Err(self.error(vec!["'!'", "'('", "'E'", "'R'", "a variable"])),
        }
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        match *self.peek() {
            Tok::Var(t) => {
                self.bump();
                Ok(t)
            }
            _ => Err(self.error(vec!["a variable"])),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        tokens: lex(text)?,
        at: 0,
    };
    let f = parser.disj()?;
    match parser.peek() {
        Tok::End => Ok(f),
        _ => Err(parser.error(vec!["'&'", "'|'", "end of input"])),
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_formula(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RelSymbol::{E, R};
    use Term::{Obj, Param};

    #[test]
    fn reads_negated_edge_and_disequality() {
        let f = parse_formula("!E(x1,y1) & x1 != y1").unwrap();
        let expected = Formula::rel(E, [Obj(1), Param(1)])
            .not()
            .and(Formula::Eq(Obj(1), Param(1)).not());
        assert_eq!(f, expected);
    }

    #[test]
    fn reads_ternary_relation() {
        let f = parse_formula("!R(x1,x2,y1) & x1 != x2").unwrap();
        let expected = Formula::rel(R, [Obj(1), Obj(2), Param(1)])
            .not()
            .and(Formula::Eq(Obj(1), Obj(2)).not());
        assert_eq!(f, expected);
    }

    #[test]
    fn unterminated_atom_reports_end_position() {
        let err = parse_formula("E(x1").unwrap_err();
        assert_eq!(err.position, 5);
        assert_eq!(err.found, "end of input");
        assert!(err.expected.contains(&"')'"));
    }

    #[test]
    fn precedence_and_associativity() {
        let f = parse_formula("x1=y1 | x1=y2 & x1=y3 | x1=y4").unwrap();
        let eq = |j| Formula::Eq(Obj(1), Param(j));
        assert_eq!(f, eq(1).or(eq(2).and(eq(3))).or(eq(4)));
        let g = parse_formula(" ! ! ( x1 = y1 ) ").unwrap();
        assert_eq!(g, eq(1).not().not());
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, position) in [
            ("", 1),
            ("E(x1,)", 6),
            ("x0 = y1", 1),
            ("z1 = y1", 1),
            ("E(x1) E(x2)", 7),
            ("x1 y1", 4),
            ("F(x1)", 1),
            ("E(x1) & # ", 9),
            ("(E(x1)", 7),
        ] {
            let err = parse_formula(text).unwrap_err();
            assert_eq!(err.position, position, "{text:?}: {err}");
        }
    }
}
