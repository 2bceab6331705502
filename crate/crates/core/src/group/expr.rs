//! Group expressions: the textual input language and its syntax tree.
//!
//! The grammar is a flat product of atoms,
//!
//! ```text
//! expr := atom ('*' atom)*
//! atom := trivial | Z | free(k) | surface(g) | cyclic(m)
//!       | abelian(m1, ..., mk) | perm("cycles", ...)
//! ```
//!
//! so `surface(2) * cyclic(3) * perm("(1 2)")` is a product of three atoms.
//! There is no nesting; a `Product` node always has at least two factors and
//! its factors are atoms. Printing is canonical: `parse(print(e)) == e`.

use std::fmt;

use crate::error::{Error, Result};

/// Syntax tree of a group expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    /// The trivial group.
    Trivial,
    /// The infinite cyclic group.
    Z,
    /// Free group on `k` generators, `k >= 0`. `free(0)` is trivial,
    /// `free(1)` is `Z`.
    Free(u64),
    /// Fundamental group of the closed orientable surface of genus `g >= 1`.
    Surface(u64),
    /// Cyclic group of order `m >= 1`.
    Cyclic(u64),
    /// Direct product of cyclic groups of the given orders, each `>= 1`.
    Abelian(Vec<u64>),
    /// Permutation group generated by the given cycle strings, acting on the
    /// points mentioned in them.
    Perm(Vec<String>),
    /// Direct product of at least two atoms.
    Product(Vec<GroupExpr>),
}

impl GroupExpr {
    /// Factors of the expression: the product's factors, or the expression
    /// itself as a single factor.
    pub fn factors(&self) -> &[GroupExpr] {
        match self {
            GroupExpr::Product(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Trivial => write!(f, "trivial"),
            GroupExpr::Z => write!(f, "Z"),
            GroupExpr::Free(k) => write!(f, "free({k})"),
            GroupExpr::Surface(g) => write!(f, "surface({g})"),
            GroupExpr::Cyclic(m) => write!(f, "cyclic({m})"),
            GroupExpr::Abelian(ms) => {
                write!(f, "abelian(")?;
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ")")
            }
            GroupExpr::Perm(cycles) => {
                write!(f, "perm(")?;
                for (i, s) in cycles.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "\"{s}\"")?;
                }
                write!(f, ")")
            }
            GroupExpr::Product(fs) => {
                for (i, e) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " * ")?;
                    }
                    write!(f, "{e}")?;
                }
                Ok(())
            }
        }
    }
}

/// Parses a group expression. Errors carry the byte offset of the offending
/// token.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.bytes.len() {
        return Err(p.err("unexpected input after expression"));
    }
    Ok(expr)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self) -> Result<GroupExpr> {
        let mut factors = vec![self.atom()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                factors.push(self.atom()?);
            } else {
                break;
            }
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(GroupExpr::Product(factors))
        }
    }

    fn atom(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        match name {
            "trivial" => Ok(GroupExpr::Trivial),
            "Z" => Ok(GroupExpr::Z),
            "free" => {
                let k = self.one_int()?;
                Ok(GroupExpr::Free(k))
            }
            "surface" => {
                let (g, pos) = self.one_int_at()?;
                if g == 0 {
                    return Err(self.err_at(pos, "surface genus must be at least 1"));
                }
                Ok(GroupExpr::Surface(g))
            }
            "cyclic" => {
                let (m, pos) = self.one_int_at()?;
                if m == 0 {
                    return Err(self.err_at(pos, "cyclic order must be at least 1"));
                }
                Ok(GroupExpr::Cyclic(m))
            }
            "abelian" => {
                let ms = self.int_list()?;
                for &(m, pos) in &ms {
                    if m == 0 {
                        return Err(self.err_at(pos, "abelian orders must be at least 1"));
                    }
                }
                Ok(GroupExpr::Abelian(ms.into_iter().map(|(m, _)| m).collect()))
            }
            "perm" => {
                let cycles = self.string_list()?;
                Ok(GroupExpr::Perm(cycles))
            }
            "" => Err(self.err_at(start, "expected group atom")),
            other => Err(self.err_at(start, format!("unknown group atom '{other}'"))),
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        let start = self.pos;
        while self
            .bytes
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
        {
            self.pos += 1;
        }
        // Identifiers are pure ASCII, so the slice is valid UTF-8.
        Ok(std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn integer(&mut self) -> Result<(u64, usize)> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Err(self.err("expected integer"));
        }
        let mut value: u64 = 0;
        while let Some(b) = self.peek() {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| self.err_at(start, "integer literal too large"))?;
            self.pos += 1;
        }
        Ok((value, start))
    }

    fn one_int(&mut self) -> Result<u64> {
        self.one_int_at().map(|(v, _)| v)
    }

    fn one_int_at(&mut self) -> Result<(u64, usize)> {
        self.expect(b'(')?;
        let v = self.integer()?;
        self.expect(b')')?;
        Ok(v)
    }

    fn int_list(&mut self) -> Result<Vec<(u64, usize)>> {
        self.expect(b'(')?;
        let mut out = vec![self.integer()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.integer()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected ',' or ')'")),
            }
        }
    }

    fn string_list(&mut self) -> Result<Vec<String>> {
        self.expect(b'(')?;
        let mut out = vec![self.string()?];
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b',') => {
                    self.pos += 1;
                    out.push(self.string()?);
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return Err(self.err("expected ',' or ')'")),
            }
        }
    }

    fn string(&mut self) -> Result<String> {
        self.skip_ws();
        if self.peek() != Some(b'"') {
            return Err(self.err("expected string literal"));
        }
        let start = self.pos;
        self.pos += 1;
        let content_start = self.pos;
        while let Some(b) = self.peek() {
            if b == b'"' {
                let s = std::str::from_utf8(&self.bytes[content_start..self.pos])
                    .map_err(|_| self.err_at(start, "string literal is not valid UTF-8"))?;
                self.pos += 1;
                return Ok(s.to_owned());
            }
            if b == b'\n' {
                break;
            }
            self.pos += 1;
        }
        Err(self.err_at(start, "unterminated string literal"))
    }
}
