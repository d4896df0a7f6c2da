//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | name ['^' integer] | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polyring::{Coefficient, Monomial, Polynomial, RingDescriptor};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut line, mut column) = (1, 1);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            line += 1;
            column = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            column += 1;
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            column += i - start;
            Tok::Int(digits.parse().expect("ascii digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            Tok::Name(chars[start..i].iter().collect())
        } else if "+-*/^()".contains(c) {
            i += 1;
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(Error::Parse {
                line,
                column,
                message: format!("unexpected character {c:?}"),
            });
        };
        out.push(Token {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a RingDescriptor,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, token: &Token, message: impl Into<String>) -> Error {
        Error::Parse {
            line: token.line,
            column: token.column,
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let n = self.ring.n();
        let token = self.bump();
        match token.tok {
            Tok::Int(num) => {
                let mut value = Coefficient::from_integer(num);
                if self.eat('/') {
                    let den_tok = self.bump();
                    let Tok::Int(den) = den_tok.tok.clone() else {
                        return Err(self.error_at(&den_tok, "expected a positive integer denominator"));
                    };
                    if den.is_zero() {
                        return Err(self.error_at(&den_tok, "zero denominator"));
                    }
                    value /= Coefficient::from_integer(den);
                }
                Ok(Polynomial::constant(n, value))
            }
            Tok::Name(ref name) => {
                let index = self
                    .ring
                    .index_of(name)
                    .ok_or_else(|| self.error_at(&token, format!("unknown variable {name:?}")))?;
                let mut exps = vec![0u32; n];
                exps[index] = 1;
                if self.eat('^') {
                    let exp_tok = self.bump();
                    let exp = match &exp_tok.tok {
                        Tok::Int(e) if !e.is_negative() => e.to_u32(),
                        _ => None,
                    };
                    exps[index] =
                        exp.ok_or_else(|| self.error_at(&exp_tok, "malformed exponent"))?;
                }
                Ok(Polynomial::term(
                    Coefficient::from_integer(1.into()),
                    Monomial::from_exponents(&exps),
                ))
            }
            Tok::Sym('(') => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::Sym(')') {
                    return Err(self.error_at(&close, "expected ')'"));
                }
                Ok(inner)
            }
            Tok::End => Err(self.error_at(&token, "unexpected end of input")),
            Tok::Sym(c) => Err(self.error_at(&token, format!("unexpected {c:?}"))),
        }
    }
}

/// Parses `src` as a polynomial over `ring`.
pub fn parse_polynomial(src: &str, ring: &RingDescriptor) -> Result<Polynomial> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        ring,
    };
    if parser.peek().tok == Tok::End {
        let t = parser.peek().clone();
        return Err(parser.error_at(&t, "empty expression"));
    }
    let poly = parser.expr()?;
    let rest = parser.peek().clone();
    if rest.tok != Tok::End {
        return Err(parser.error_at(&rest, "unexpected trailing input"));
    }
    Ok(poly)
}
