//! Recursive-descent parser for the expression grammar.

use super::Expr;
use crate::error::{Error, Result};

pub(super) fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { src: src.as_bytes(), pos: 0 };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", c as char)))
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat(b'+') {
                lhs = lhs + self.product()?;
            } else if self.eat(b'-') {
                lhs = lhs - self.product()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = lhs * self.unary()?;
            } else if self.eat(b'/') {
                lhs = lhs / self.unary()?;
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            // a bare `-literal` is a negative constant, so printed constants
            // parse back unchanged; `-(literal)` stays a negation
            self.skip_ws();
            if matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'.') {
                return Ok(Expr::constant(-self.number()?));
            }
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number().map(Expr::constant),
            Some(c) if c.is_ascii_alphabetic() => self.call(),
            Some(c) => Err(self.error(format!("unexpected character `{}`", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let save = self.pos;
            self.pos += 1;
            if matches!(self.src.get(self.pos), Some(b'+' | b'-')) {
                self.pos += 1;
            }
            let exp_start = self.pos;
            digits(self);
            if self.pos == exp_start {
                // `2exp(x)` style juxtaposition is not in the grammar, but do not
                // swallow the `e` of a following identifier either
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => {
                self.pos = start;
                Err(self.error(format!("invalid number `{text}`")))
            }
        }
    }

    fn signed_number(&mut self) -> Result<f64> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let v = self.number()?;
        Ok(if neg { -v } else { v })
    }

    fn call(&mut self) -> Result<Expr> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii slice");
        if name == "x" {
            return Ok(Expr::x());
        }
        let arity = match name {
            "exp" | "log" | "abs" => 1,
            "min" | "max" | "pow" => 2,
            _ => {
                self.pos = start;
                return Err(self.error(format!("unknown identifier `{name}`")));
            }
        };
        let name = name.to_owned();
        self.expect(b'(')?;
        let first = self.sum()?;
        let e = if arity == 1 {
            match name.as_str() {
                "exp" => first.exp(),
                "log" => first.ln(),
                _ => first.abs(),
            }
        } else {
            self.expect(b',')?;
            match name.as_str() {
                "pow" => first.powf(self.signed_number()?),
                "min" => first.min(&self.sum()?),
                _ => first.max(&self.sum()?),
            }
        };
        self.expect(b')')?;
        Ok(e)
    }
}
