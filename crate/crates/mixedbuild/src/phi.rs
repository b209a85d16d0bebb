//! A tiny expression grammar for growth targets:
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' atom)?
//! atom   := 'n' | integer | 'log' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Evaluation is exact over unsigned 128-bit integers; `log` is the integer
//! base-2 logarithm (`log(x) = floor(log2 x)`, with `log(0) = 0`).

use crate::MixedError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiExpr {
    Var,
    Const(u128),
    Add(Box<PhiExpr>, Box<PhiExpr>),
    Mul(Box<PhiExpr>, Box<PhiExpr>),
    Pow(Box<PhiExpr>, Box<PhiExpr>),
    Log(Box<PhiExpr>),
}

impl PhiExpr {
    pub fn parse(input: &str) -> Result<PhiExpr, MixedError> {
        let tokens = tokenize(input)?;
        let mut parser = Parser { tokens, pos: 0, src: input.to_string() };
        let expr = parser.expr()?;
        if parser.pos != parser.tokens.len() {
            return Err(MixedError::BadPhi(format!(
                "trailing input at token {} in {input:?}",
                parser.pos
            )));
        }
        Ok(expr)
    }

    pub fn eval(&self, n: u128) -> Result<u128, MixedError> {
        Ok(match self {
            PhiExpr::Var => n,
            PhiExpr::Const(c) => *c,
            PhiExpr::Add(a, b) => {
                a.eval(n)?.checked_add(b.eval(n)?).ok_or(MixedError::PhiOverflow)?
            }
            PhiExpr::Mul(a, b) => {
                a.eval(n)?.checked_mul(b.eval(n)?).ok_or(MixedError::PhiOverflow)?
            }
            PhiExpr::Pow(a, b) => {
                let base = a.eval(n)?;
                let exp = b.eval(n)?;
                let exp: u32 = exp.try_into().map_err(|_| MixedError::PhiOverflow)?;
                base.checked_pow(exp).ok_or(MixedError::PhiOverflow)?
            }
            PhiExpr::Log(a) => {
                let x = a.eval(n)?;
                if x <= 1 {
                    0
                } else {
                    (127 - x.leading_zeros()) as u128
                }
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Var,
    Int(u128),
    Plus,
    Star,
    Caret,
    Log,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<Token>, MixedError> {
    let mut out = Vec::new();
    let bytes: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            'n' => {
                out.push(Token::Var);
                i += 1;
            }
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            'l' if input[i..].starts_with("log") => {
                out.push(Token::Log);
                i += 3;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = bytes[start..i].iter().collect();
                out.push(Token::Int(
                    lit.parse().map_err(|e| MixedError::BadPhi(format!("{lit}: {e}")))?,
                ));
            }
            other => return Err(MixedError::BadPhi(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    src: String,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<PhiExpr, MixedError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            acc = PhiExpr::Add(Box::new(acc), Box::new(self.term()?));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PhiExpr, MixedError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = PhiExpr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<PhiExpr, MixedError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            let exp = self.atom()?;
            return Ok(PhiExpr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<PhiExpr, MixedError> {
        match self.peek().cloned() {
            Some(Token::Var) => {
                self.pos += 1;
                Ok(PhiExpr::Var)
            }
            Some(Token::Int(v)) => {
                self.pos += 1;
                Ok(PhiExpr::Const(v))
            }
            Some(Token::Log) => {
                self.pos += 1;
                if self.peek() != Some(&Token::Open) {
                    return Err(MixedError::BadPhi("log needs parentheses".into()));
                }
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(MixedError::BadPhi("unclosed log".into()));
                }
                self.pos += 1;
                Ok(PhiExpr::Log(Box::new(inner)))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(MixedError::BadPhi("unclosed parenthesis".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            other => Err(MixedError::BadPhi(format!(
                "unexpected token {other:?} in {:?}",
                self.src
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_evaluates() {
        let square = PhiExpr::parse("n^2").unwrap();
        assert_eq!(square.eval(12).unwrap(), 144);
        let linear = PhiExpr::parse("n").unwrap();
        assert_eq!(linear.eval(7).unwrap(), 7);
        let mixed = PhiExpr::parse("n * log(n) + 3").unwrap();
        assert_eq!(mixed.eval(8).unwrap(), 8 * 3 + 3);
        let nested = PhiExpr::parse("(n + 1) * 2").unwrap();
        assert_eq!(nested.eval(5).unwrap(), 12);
    }

    #[test]
    fn rejects_garbage() {
        assert!(PhiExpr::parse("n^").is_err());
        assert!(PhiExpr::parse("m").is_err());
        assert!(PhiExpr::parse("log n").is_err());
        assert!(PhiExpr::parse("(n").is_err());
    }

    #[test]
    fn log_is_floor_log2() {
        let l = PhiExpr::parse("log(n)").unwrap();
        assert_eq!(l.eval(1).unwrap(), 0);
        assert_eq!(l.eval(2).unwrap(), 1);
        assert_eq!(l.eval(1023).unwrap(), 9);
        assert_eq!(l.eval(1024).unwrap(), 10);
    }
}
