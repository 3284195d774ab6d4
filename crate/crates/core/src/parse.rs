//! Text literals for multisegments, infinitesimal parameters and Arthur
//! parameters.
//!
//! ```text
//! ms    := seg ( "+" seg )* | "0"
//! seg   := "[" half ( "," half )? "]" ( "@" label )?
//! half  := int | int "/2"
//! psi   := comp ( "+" comp )*
//! comp  := "(a=" int ",b=" int ")" ( "@" label )?
//! label := [A-Za-z0-9_]+ ( ":" degree )?
//! ```
//!
//! Whitespace between tokens is ignored. The optional `:degree` suffix sets the
//! degree of the cuspidal representation underlying the line.

use crate::arthur::{ArthurComponent, ArthurParameter};
use crate::error::{Error, Result};
use crate::multisegment::{canonicalize, support, HalfInt, InfinitesimalParameter, LineId, Multisegment, Segment};

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected {token:?}"))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        if end < bytes.len() && (bytes[end] == b'-' || bytes[end] == b'+') {
            end += 1;
        }
        let digits = end;
        while end < bytes.len() && bytes[end].is_ascii_digit() {
            end += 1;
        }
        if end == digits {
            return self.err("expected an integer");
        }
        match self.src[start..end].parse::<i64>() {
            Ok(v) => {
                self.pos = end;
                Ok(v)
            }
            Err(_) => self.err("integer out of range"),
        }
    }

    fn half(&mut self) -> Result<HalfInt> {
        let v = self.int()?;
        let twice = if self.eat("/") {
            let d = self.int()?;
            if d != 2 {
                return self.err("only the denominator 2 is allowed");
            }
            v
        } else {
            v.checked_mul(2).unwrap_or(i64::MAX)
        };
        match i32::try_from(twice) {
            Ok(t) if t.checked_abs().is_some() => Ok(HalfInt::from_twice(t)),
            _ => self.err("exponent out of range"),
        }
    }

    fn line(&mut self) -> Result<LineId> {
        if !self.eat("@") {
            return Ok(LineId::default());
        }
        let start = self.pos;
        let bytes = self.src.as_bytes();
        let mut end = start;
        while end < bytes.len() && (bytes[end].is_ascii_alphanumeric() || bytes[end] == b'_') {
            end += 1;
        }
        if end == start {
            return self.err("expected a line label");
        }
        let label = &self.src[start..end];
        self.pos = end;
        let degree = if self.src[self.pos..].starts_with(':') {
            self.pos += 1;
            let d = self.int()?;
            match u32::try_from(d) {
                Ok(d) if d > 0 => d,
                _ => return self.err("base degree must be a positive integer"),
            }
        } else {
            1
        };
        LineId::new(label, degree)
    }

    fn segment(&mut self) -> Result<Segment> {
        self.expect("[")?;
        let at = self.pos;
        let a = self.half()?;
        let b = if self.eat(",") { self.half()? } else { a };
        self.expect("]")?;
        let line = self.line()?;
        Segment::new(line, a, b).map_err(|e| Error::Parse {
            pos: at,
            msg: e.to_string(),
        })
    }

    fn component(&mut self) -> Result<ArthurComponent> {
        self.expect("(")?;
        self.expect("a")?;
        self.expect("=")?;
        let at = self.pos;
        let a = self.int()?;
        self.expect(",")?;
        self.expect("b")?;
        self.expect("=")?;
        let b = self.int()?;
        self.expect(")")?;
        let line = self.line()?;
        let (Ok(a), Ok(b)) = (u32::try_from(a), u32::try_from(b)) else {
            return Err(Error::Parse {
                pos: at,
                msg: "a and b must be positive".into(),
            });
        };
        ArthurComponent::new(line, a, b).map_err(|e| Error::Parse {
            pos: at,
            msg: e.to_string(),
        })
    }
}

/// Parse a multisegment literal such as `[-1/2,1/2]+[1/2]+[-1/2]`.
pub fn parse_multisegment(src: &str) -> Result<Multisegment> {
    let mut c = Cursor::new(src);
    if c.eat("0") {
        if c.at_end() {
            return Ok(Multisegment::empty());
        }
        return c.err("trailing input after the empty multisegment");
    }
    let mut segs = vec![c.segment()?];
    while c.eat("+") {
        segs.push(c.segment()?);
    }
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    Ok(canonicalize(segs))
}

/// Parse an infinitesimal parameter, written as a multisegment literal whose
/// support is taken.
pub fn parse_lambda(src: &str) -> Result<InfinitesimalParameter> {
    parse_multisegment(src).map(|m| support(&m))
}

/// Parse an Arthur parameter literal such as `(a=2,b=1)+(a=1,b=2)`.
pub fn parse_arthur(src: &str) -> Result<ArthurParameter> {
    let mut c = Cursor::new(src);
    if c.peek().is_none() {
        return c.err("empty Arthur parameter");
    }
    let mut comps = vec![c.component()?];
    while c.eat("+") {
        comps.push(c.component()?);
    }
    if !c.at_end() {
        return c.err("unexpected trailing input");
    }
    ArthurParameter::new(comps)
}
