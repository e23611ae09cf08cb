//! Tokenizer and recursive-descent parser for element expressions.
//!
//! Precedence, loosest first: `+ -`, `*`, unary `-`, `ot`, `^`.
//! `x ^ n` with a non-negative integer literal `n` is a power; any other
//! right operand makes `^` the wedge product, which only accepts
//! exterior-typed operands (checked here, before evaluation).

use std::fmt;

use so41_core::scalar::{fmt_q, parse_q};
use so41_core::{BasisIndex, Q};
use thiserror::Error;

pub const NAMED: [&str; 13] = ["D", "Dk", "a1", "a2", "b", "c", "d", "e", "f", "g", "h", "i", "j"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Ad,
    Sigma,
    Tau,
    Rho,
}

impl Func {
    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "ad" => Func::Ad,
            "sigma" => Func::Sigma,
            "tau" => Func::Tau,
            "rho" => Func::Rho,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Func::Ad => "ad",
            Func::Sigma => "sigma",
            Func::Tau => "tau",
            Func::Rho => "rho",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Func::Ad => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Q),
    Gen(BasisIndex),
    Named(&'static str),
    Call(Func, Vec<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Wedge(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// Statically exterior-typed: built from `p` generators, scalars, sums,
    /// scalar multiples and wedges.
    pub fn is_exterior(&self) -> bool {
        match self {
            Expr::Num(_) | Expr::Wedge(..) => true,
            Expr::Gen(b) => b.is_p(),
            Expr::Neg(x) => x.is_exterior(),
            Expr::Add(a, b) | Expr::Sub(a, b) => a.is_exterior() && b.is_exterior(),
            Expr::Mul(a, b) => {
                (matches!(**a, Expr::Num(_)) && b.is_exterior()) || (matches!(**b, Expr::Num(_)) && a.is_exterior())
            }
            Expr::Pow(x, _) => x.is_exterior(),
            Expr::Named(_) | Expr::Call(..) | Expr::Tensor(..) => false,
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(x) => write!(f, "{}", fmt_q(x)),
            Expr::Gen(b) => write!(f, "{b}"),
            Expr::Named(n) => f.write_str(n),
            Expr::Call(func, args) => {
                write!(f, "{}(", func.name())?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
            Expr::Neg(x) => write!(f, "-({x})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Tensor(a, b) => write!(f, "({a} ot {b})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
            Expr::Wedge(a, b) => write!(f, "({a} ^ {b})"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("parse error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("type error at {pos}: {msg}")]
    Type { pos: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(Q),
    /// Non-negative integer literal, kept separately so `^ n` can be a power.
    Int(u32, Q),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            ',' => out.push((Tok::Comma, start)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut text = &src[start..i];
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    text = &src[start..i];
                }
                let value = parse_q(text).ok_or(ParseError::Syntax {
                    pos: start,
                    msg: format!("invalid number `{text}`"),
                })?;
                let tok = match text.parse::<u32>() {
                    Ok(n) => Tok::Int(n, value),
                    Err(_) => Tok::Num(value),
                };
                out.push((tok, start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        }
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
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

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.syntax(format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.tensor()
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.postfix()?;
        while matches!(self.peek(), Tok::Ident(s) if s == "ot") {
            self.bump();
            lhs = Expr::Tensor(Box::new(lhs), Box::new(self.postfix()?));
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.atom()?;
        while *self.peek() == Tok::Caret {
            let caret = self.pos();
            self.bump();
            if let Tok::Int(n, _) = self.peek().clone() {
                self.bump();
                lhs = Expr::Pow(Box::new(lhs), n);
                continue;
            }
            let rhs_pos = self.pos();
            let rhs = self.atom()?;
            for (side, pos) in [(&lhs, caret), (&rhs, rhs_pos)] {
                if !side.is_exterior() {
                    return Err(ParseError::Type {
                        pos,
                        msg: format!("wedge needs p-generators, got `{side}`"),
                    });
                }
            }
            lhs = Expr::Wedge(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(x) | Tok::Int(_, x) => Ok(Expr::Num(x)),
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => {
                if let Some(func) = Func::from_name(&name) {
                    self.expect(Tok::LParen, "`(` after function name")?;
                    let mut args = vec![self.expr()?];
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        args.push(self.expr()?);
                    }
                    self.expect(Tok::RParen, "`)`")?;
                    if args.len() != func.arity() {
                        return Err(ParseError::Syntax {
                            pos,
                            msg: format!("{} takes {} argument(s), got {}", func.name(), func.arity(), args.len()),
                        });
                    }
                    return Ok(Expr::Call(func, args));
                }
                if let Ok(b) = name.parse::<BasisIndex>() {
                    return Ok(Expr::Gen(b));
                }
                if let Some(n) = NAMED.iter().find(|n| **n == name) {
                    return Ok(Expr::Named(n));
                }
                Err(ParseError::Syntax {
                    pos,
                    msg: format!("unknown identifier `{name}`"),
                })
            }
            Tok::End => Err(ParseError::Syntax {
                pos,
                msg: "unexpected end of input".into(),
            }),
            other => Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected token {other:?}"),
            }),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        at: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use so41_core::scalar::{q, qf};
    use BasisIndex::*;

    #[test]
    fn precedence() {
        let e = parse("2 * E1 ot F3 + 1").unwrap();
        let expected = Expr::Add(
            Box::new(Expr::Mul(
                Box::new(Expr::Num(q(2))),
                Box::new(Expr::Tensor(Box::new(Expr::Gen(E1)), Box::new(Expr::Gen(F3)))),
            )),
            Box::new(Expr::Num(q(1))),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn rationals_and_powers() {
        assert_eq!(parse("-1/2").unwrap(), Expr::Neg(Box::new(Expr::Num(qf(1, 2)))));
        assert_eq!(parse("H1^2").unwrap(), Expr::Pow(Box::new(Expr::Gen(H1)), 2));
        assert!(matches!(parse("E3 ^ E4").unwrap(), Expr::Wedge(..)));
    }

    #[test]
    fn wedge_type_errors() {
        assert!(matches!(parse("H1 ^ E3"), Err(ParseError::Type { pos: 3, .. })));
        assert!(matches!(parse("E3 ^ D"), Err(ParseError::Type { .. })));
        assert!(parse("(E3 + 2 * F3) ^ E4").is_ok());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse("E1 + "),
            Err(ParseError::Syntax {
                pos: 5,
                msg: "unexpected end of input".into()
            })
        );
        assert!(matches!(parse("E1 $"), Err(ParseError::Syntax { pos: 3, .. })));
        assert!(matches!(parse("foo"), Err(ParseError::Syntax { pos: 0, .. })));
        assert!(matches!(parse("ad(E1)"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn calls_and_names() {
        assert_eq!(
            parse("ad(E1, D)").unwrap(),
            Expr::Call(Func::Ad, vec![Expr::Gen(E1), Expr::Named("D")])
        );
        assert!(parse("rho(i) * D - D * rho(i)").is_ok());
    }
}
