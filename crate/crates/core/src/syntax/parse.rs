//! Recursive-descent parser for the ASCII formula syntax.
//!
//! ```text
//! formula := impl
//! impl    := or ("->" impl)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := ("~" | PREFIXKW) unary | atom
//! atom    := IDENT | "bot" | "top" | "B" | "N" | "(" formula ")"
//! ```
//!
//! Identifiers naming a connective of the signature are read as that
//! connective: nullary ones as atoms, unary ones as prefix operators and
//! wider ones in call syntax `name(a, b, ...)`. `top` is expanded to `~bot`.

use thiserror::Error;

use super::formula::{names, Formula, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character `{0}`")]
    UnexpectedChar(char),
    #[error("unexpected {found}, expected {expected}")]
    Unexpected { found: String, expected: &'static str },
    #[error("unknown connective `{0}` for this signature")]
    UnknownConnective(String),
    #[error("connective `{name}` has arity {arity}, found {found} argument(s)")]
    Arity {
        name: String,
        arity: usize,
        found: usize,
    },
    #[error("missing `|-` in sequent")]
    MissingTurnstile,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {kind}")]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Not,
    And,
    Or,
    Impl,
    LParen,
    RParen,
    Comma,
    Turnstile,
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Not => "`~`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Impl => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, c)) = it.peek() {
        let single = |t: Tok| (t, pos);
        match c {
            c if c.is_whitespace() => {
                it.next();
            }
            '~' | '¬' => {
                it.next();
                out.push(single(Tok::Not));
            }
            '&' | '∧' => {
                it.next();
                out.push(single(Tok::And));
            }
            '∨' => {
                it.next();
                out.push(single(Tok::Or));
            }
            '→' => {
                it.next();
                out.push(single(Tok::Impl));
            }
            '⊢' => {
                it.next();
                out.push(single(Tok::Turnstile));
            }
            '⊥' => {
                it.next();
                out.push(single(Tok::Ident("bot".into())));
            }
            '⊤' => {
                it.next();
                out.push(single(Tok::Ident("top".into())));
            }
            'Δ' => {
                it.next();
                out.push(single(Tok::Ident("delta".into())));
            }
            '∘' => {
                it.next();
                out.push(single(Tok::Ident("circ".into())));
            }
            '|' => {
                it.next();
                if matches!(it.peek(), Some((_, '-'))) {
                    it.next();
                    out.push(single(Tok::Turnstile));
                } else {
                    out.push(single(Tok::Or));
                }
            }
            '-' => {
                it.next();
                match it.next() {
                    Some((_, '>')) => out.push(single(Tok::Impl)),
                    _ => {
                        return Err(ParseError {
                            position: pos,
                            kind: ParseErrorKind::UnexpectedChar('-'),
                        })
                    }
                }
            }
            '(' => {
                it.next();
                out.push(single(Tok::LParen));
            }
            ')' => {
                it.next();
                out.push(single(Tok::RParen));
            }
            ',' => {
                it.next();
                out.push(single(Tok::Comma));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut ident = String::new();
                while let Some(&(_, c)) = it.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' || c == '\'' {
                        ident.push(c);
                        it.next();
                    } else {
                        break;
                    }
                }
                out.push((Tok::Ident(ident), pos));
            }
            other => {
                return Err(ParseError {
                    position: pos,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        }
    }
    out.push((Tok::Eof, text.len()));
    Ok(out)
}

/// Words with a fixed reading, never variables.
pub const RESERVED: &[&str] = &[
    "bot", "top", "B", "N", "delta", "circ", "cons", "det", "confl",
];

const PREFIX_KEYWORDS: &[&str] = &[
    names::DELTA,
    names::CIRC,
    names::CONS,
    names::DET,
    names::CONFL,
];

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    at: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.pos(),
            kind,
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        self.error(ParseErrorKind::Unexpected {
            found: self.peek().describe(),
            expected,
        })
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    /// Builds `conn(args)` after checking the connective against the signature.
    fn apply(&self, conn: &str, args: Vec<Formula>, pos: usize) -> Result<Formula, ParseError> {
        match self.sig.arity(conn) {
            None => Err(ParseError {
                position: pos,
                kind: ParseErrorKind::UnknownConnective(conn.to_string()),
            }),
            Some(arity) if arity != args.len() => Err(ParseError {
                position: pos,
                kind: ParseErrorKind::Arity {
                    name: conn.to_string(),
                    arity,
                    found: args.len(),
                },
            }),
            Some(_) => Ok(Formula::app(conn, args)),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        let lhs = self.or()?;
        if *self.peek() == Tok::Impl {
            self.bump();
            let rhs = self.formula()?;
            return self.apply(names::IMPL, vec![lhs, rhs], pos);
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = self.apply(names::OR, vec![lhs, rhs], pos)?;
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = self.apply(names::AND, vec![lhs, rhs], pos)?;
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Not => {
                self.bump();
                let arg = self.unary()?;
                self.apply(names::NOT, vec![arg], pos)
            }
            Tok::Ident(name) if PREFIX_KEYWORDS.contains(&name.as_str()) => {
                self.bump();
                let arg = self.unary()?;
                self.apply(&name, vec![arg], pos)
            }
            Tok::Ident(name) if !RESERVED.contains(&name.as_str()) => {
                match self.sig.arity(&name) {
                    Some(1) => {
                        self.bump();
                        let arg = self.unary()?;
                        self.apply(&name, vec![arg], pos)
                    }
                    _ => self.atom(),
                }
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Tok::Ident(name) => {
                self.bump();
                match name.as_str() {
                    "top" => {
                        let bot = self.apply(names::BOT, vec![], pos)?;
                        self.apply(names::NOT, vec![bot], pos)
                    }
                    "bot" | "B" | "N" => self.apply(&name, vec![], pos),
                    kw if PREFIX_KEYWORDS.contains(&kw) => Err(ParseError {
                        position: pos,
                        kind: ParseErrorKind::Unexpected {
                            found: format!("`{kw}`"),
                            expected: "an operand",
                        },
                    }),
                    _ => match self.sig.arity(&name) {
                        None => Ok(Formula::Var(name)),
                        Some(0) => self.apply(&name, vec![], pos),
                        Some(_) => {
                            self.expect(Tok::LParen, "`(` after connective name")?;
                            let mut args = vec![self.formula()?];
                            while *self.peek() == Tok::Comma {
                                self.bump();
                                args.push(self.formula()?);
                            }
                            self.expect(Tok::RParen, "`)`")?;
                            self.apply(&name, args, pos)
                        }
                    },
                }
            }
            _ => Err(self.unexpected("a formula")),
        }
    }

    fn list(&mut self) -> Result<Vec<Formula>, ParseError> {
        let mut out = Vec::new();
        if matches!(self.peek(), Tok::Turnstile | Tok::Eof) {
            return Ok(out);
        }
        out.push(self.formula()?);
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.formula()?);
        }
        Ok(out)
    }
}

/// Parses a single formula over `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Formula, ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        sig,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected("end of input"));
    }
    Ok(f)
}

/// Parses `A1, ..., Am |- B1, ..., Bk`; either side may be empty.
pub fn parse_sequent(
    text: &str,
    sig: &Signature,
) -> Result<(Vec<Formula>, Vec<Formula>), ParseError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
        sig,
    };
    let left = p.list()?;
    match p.peek() {
        Tok::Turnstile => {
            p.bump();
        }
        Tok::Eof => return Err(p.error(ParseErrorKind::MissingTurnstile)),
        _ => return Err(p.unexpected("`,` or `|-`")),
    }
    let right = p.list()?;
    if *p.peek() != Tok::Eof {
        return Err(p.unexpected("`,` or end of input"));
    }
    Ok((left, right))
}
