use std::sync::Arc;

use super::{tilde_table_conn, Formula};
use crate::algebra::{BinaryOp, UnaryOp};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Var(String),
    Zero,
    One,
    Unary(UnaryOp),
    Tilde(usize, usize),
    Binary(BinaryOp),
    LParen,
    RParen,
    Comma,
    Turnstile,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let rest = &text[i..];
        let tok = if c.is_ascii_lowercase() {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Var(text[start..i].to_string())));
            continue;
        } else if rest.starts_with("~[") {
            let close = rest
                .find(']')
                .ok_or_else(|| err(start, "unterminated `~[`"))?;
            let inner = &rest[2..close];
            let (a, b) = inner
                .split_once('/')
                .ok_or_else(|| err(start, "expected `~[i/n]`"))?;
            let parse_num = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| err(start, "expected a number in `~[i/n]`"))
            };
            i += close + 1;
            out.push((start, Tok::Tilde(parse_num(a)?, parse_num(b)?)));
            continue;
        } else if rest.starts_with("<->") {
            i += 3;
            Tok::Binary(BinaryOp::Iff)
        } else if rest.starts_with("->") {
            i += 2;
            Tok::Binary(BinaryOp::GImp)
        } else if rest.starts_with("=>L") {
            i += 3;
            Tok::Binary(BinaryOp::LukImp)
        } else if rest.starts_with("=>F") {
            i += 3;
            Tok::Binary(BinaryOp::FtImp)
        } else if rest.starts_with("|-") {
            i += 2;
            Tok::Turnstile
        } else {
            i += 1;
            match c {
                b'~' => Tok::Unary(UnaryOp::Inv),
                b'!' => Tok::Unary(UnaryOp::GNeg),
                b'D' => Tok::Unary(UnaryOp::Delta),
                b'&' => Tok::Binary(BinaryOp::And),
                b'|' => Tok::Binary(BinaryOp::Or),
                b'(' => Tok::LParen,
                b')' => Tok::RParen,
                b',' => Tok::Comma,
                b'0' => Tok::Zero,
                b'1' => Tok::One,
                _ => return Err(err(start, &format!("unexpected character `{}`", rest.chars().next().unwrap()))),
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn iff(&mut self) -> Result<Formula> {
        let mut left = self.imp()?;
        while *self.peek() == Tok::Binary(BinaryOp::Iff) {
            self.bump();
            let right = self.imp()?;
            left = left.iff(right);
        }
        Ok(left)
    }

    fn imp(&mut self) -> Result<Formula> {
        let left = self.or()?;
        match self.peek() {
            Tok::Binary(op @ (BinaryOp::GImp | BinaryOp::LukImp | BinaryOp::FtImp)) => {
                let op = *op;
                self.bump();
                let right = self.imp()?;
                Ok(Formula::binary(op, left, right))
            }
            _ => Ok(left),
        }
    }

    fn or(&mut self) -> Result<Formula> {
        let mut left = self.and()?;
        while *self.peek() == Tok::Binary(BinaryOp::Or) {
            self.bump();
            left = left.or(self.and()?);
        }
        Ok(left)
    }

    fn and(&mut self) -> Result<Formula> {
        let mut left = self.unary()?;
        while *self.peek() == Tok::Binary(BinaryOp::And) {
            self.bump();
            left = left.and(self.unary()?);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula> {
        match self.peek().clone() {
            Tok::Unary(op) => {
                self.bump();
                Ok(Formula::unary(op, self.unary()?))
            }
            Tok::Tilde(i, n) => {
                let at = self.offset();
                self.bump();
                let conn = tilde_table_conn(n, i).map_err(|e| Error::Parse {
                    pos: at,
                    msg: e.to_string(),
                })?;
                Formula::table(Arc::new(conn), vec![self.unary()?])
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula> {
        let f = match self.peek().clone() {
            Tok::Var(v) => Formula::Var(v),
            Tok::Zero => Formula::Bot,
            Tok::One => Formula::Top,
            Tok::LParen => {
                self.bump();
                let f = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                f
            }
            _ => return self.error("expected a formula"),
        };
        self.bump();
        Ok(f)
    }

    fn expect_end(&self) -> Result<()> {
        if *self.peek() != Tok::End {
            return self.error("unexpected trailing input");
        }
        Ok(())
    }

    fn list(&mut self, stop: &Tok) -> Result<Vec<Formula>> {
        let mut items = Vec::new();
        if self.peek() == stop {
            return Ok(items);
        }
        loop {
            items.push(self.iff()?);
            if *self.peek() == Tok::Comma {
                self.bump();
            } else {
                return Ok(items);
            }
        }
    }
}

/// Parses a single formula.
pub fn parse(text: &str) -> Result<Formula> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let f = p.iff()?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a comma separated, possibly empty, list of formulas.
pub fn parse_list(text: &str) -> Result<Vec<Formula>> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let items = p.list(&Tok::End)?;
    p.expect_end()?;
    Ok(items)
}

/// Parses `g1, ..., gk |- phi`.
pub fn parse_sequent(text: &str) -> Result<(Vec<Formula>, Formula)> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let premises = p.list(&Tok::Turnstile)?;
    if *p.peek() != Tok::Turnstile {
        return p.error("expected `|-`");
    }
    p.bump();
    let phi = p.iff()?;
    p.expect_end()?;
    Ok((premises, phi))
}
