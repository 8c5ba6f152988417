//! Manifold expressions such as `RP(2) * RP(2) * S(1)`.
//!
//! ```text
//! expr := term (('*' | 'x') term)*
//! term := 'S' '(' uint ')' | 'RP' '(' uint ')' | 'T' '(' uint ')' | 'K' | 'M' '(' uint ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and primitive names are case-insensitive. Products
//! associate to the left; a parenthesised product on the right is kept as a
//! nested factor.

use std::fmt;
use std::str::FromStr;

use crate::catalog::{self, ManifoldDescriptor};
use crate::decide::{self, DecisionReport, LipschitzSearch};
use crate::error::{Error, Result};

/// Largest accepted parameter for `S`, `RP` and `M`.
pub const MAX_PARAMETER: u64 = 256;
/// Largest accepted torus dimension; its ring has `2^n` basis elements.
pub const MAX_TORUS: u64 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ManifoldExpr {
    Sphere(u64),
    Rp(u64),
    Torus(u64),
    Klein,
    Mk(u64),
    Product(Box<ManifoldExpr>, Box<ManifoldExpr>),
}

impl ManifoldExpr {
    pub fn product(left: ManifoldExpr, right: ManifoldExpr) -> Self {
        ManifoldExpr::Product(Box::new(left), Box::new(right))
    }

    pub fn dimension(&self) -> u64 {
        match self {
            ManifoldExpr::Sphere(n) | ManifoldExpr::Rp(n) | ManifoldExpr::Torus(n) | ManifoldExpr::Mk(n) => *n,
            ManifoldExpr::Klein => 2,
            ManifoldExpr::Product(l, r) => l.dimension() + r.dimension(),
        }
    }

    /// Checks every primitive parameter against the catalog's rules.
    pub fn check_parameters(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::UnsupportedParameter(msg));
        match *self {
            ManifoldExpr::Sphere(0) => bad("S(n) requires n ≥ 1".into()),
            ManifoldExpr::Rp(0) => bad("RP(n) requires n ≥ 1".into()),
            ManifoldExpr::Torus(0) => bad("T(n) requires n ≥ 1".into()),
            ManifoldExpr::Mk(k) if k < 5 => bad(format!(
                "M({k}): M(k) requires k ≥ 5, the range in which its homology H_0 = Z, H_1 = Z, H_2 = 0 is known"
            )),
            ManifoldExpr::Torus(n) if n > MAX_TORUS => bad(format!("T({n}): the torus is limited to n ≤ {MAX_TORUS}")),
            ManifoldExpr::Sphere(n) | ManifoldExpr::Rp(n) | ManifoldExpr::Mk(n) if n > MAX_PARAMETER => {
                bad(format!("{self}: parameters are limited to {MAX_PARAMETER}"))
            }
            #[cfg(not(feature = "klein"))]
            ManifoldExpr::Klein => bad("K: the Klein bottle is not enabled in this build".into()),
            ManifoldExpr::Product(ref l, ref r) => {
                l.check_parameters()?;
                r.check_parameters()
            }
            _ => Ok(()),
        }
    }

    /// Assembles the descriptor, building products left to right.
    pub fn build(&self) -> Result<ManifoldDescriptor> {
        self.check_parameters()?;
        match *self {
            ManifoldExpr::Sphere(n) => catalog::sphere(n as usize),
            ManifoldExpr::Rp(n) => catalog::rp(n as usize),
            ManifoldExpr::Torus(n) => catalog::torus(n as usize),
            ManifoldExpr::Mk(k) => catalog::mk(k as usize),
            #[cfg(feature = "klein")]
            ManifoldExpr::Klein => catalog::klein(),
            #[cfg(not(feature = "klein"))]
            ManifoldExpr::Klein => unreachable!("rejected by check_parameters"),
            ManifoldExpr::Product(ref l, ref r) => catalog::product(&l.build()?, &r.build()?),
        }
    }

    /// Full report; for a product the outermost split also runs the factor criterion.
    pub fn report(&self, search: &LipschitzSearch) -> Result<DecisionReport> {
        match self {
            ManifoldExpr::Product(l, r) => {
                self.check_parameters()?;
                decide::full_report_product_with(&l.build()?, &r.build()?, search)
            }
            _ => decide::full_report_with(&self.build()?, search),
        }
    }
}

impl fmt::Display for ManifoldExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ManifoldExpr::Sphere(n) => write!(f, "S({n})"),
            ManifoldExpr::Rp(n) => write!(f, "RP({n})"),
            ManifoldExpr::Torus(n) => write!(f, "T({n})"),
            ManifoldExpr::Klein => f.write_str("K"),
            ManifoldExpr::Mk(k) => write!(f, "M({k})"),
            ManifoldExpr::Product(l, r) => match **r {
                ManifoldExpr::Product(..) => write!(f, "{l} * ({r})"),
                _ => write!(f, "{l} * {r}"),
            },
        }
    }
}

impl FromStr for ManifoldExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&self, offset: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset,
            message: message.into(),
        })
    }

    fn describe(c: Option<char>) -> String {
        c.map_or("end of input".into(), |c| format!("{c:?}"))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            other => self.error(self.pos, format!("expected {want:?}, found {}", Self::describe(other))),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            let found = self.src[start..].chars().next();
            return self.error(start, format!("expected a non-negative integer, found {}", Self::describe(found)));
        }
        self.pos += digits;
        self.src[start..self.pos]
            .parse()
            .or_else(|_| self.error(start, "integer is too large"))
    }

    fn parameter(&mut self) -> Result<u64> {
        self.expect('(')?;
        let n = self.uint()?;
        self.expect(')')?;
        Ok(n)
    }

    fn expr(&mut self) -> Result<ManifoldExpr> {
        let mut left = self.term()?;
        while let Some(c) = self.peek() {
            if c != '*' && c != 'x' && c != 'X' {
                break;
            }
            self.pos += 1;
            left = ManifoldExpr::product(left, self.term()?);
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<ManifoldExpr> {
        let Some(c) = self.peek() else {
            return self.error(self.pos, "expected a manifold, found end of input");
        };
        let term_start = self.pos;
        match c.to_ascii_uppercase() {
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            'S' => {
                self.pos += 1;
                Ok(ManifoldExpr::Sphere(self.parameter()?))
            }
            'T' => {
                self.pos += 1;
                Ok(ManifoldExpr::Torus(self.parameter()?))
            }
            'M' => {
                self.pos += 1;
                Ok(ManifoldExpr::Mk(self.parameter()?))
            }
            'K' => {
                self.pos += 1;
                Ok(ManifoldExpr::Klein)
            }
            'R' => {
                self.pos += 1;
                match self.src[self.pos..].chars().next() {
                    Some('P' | 'p') => {
                        self.pos += 1;
                        Ok(ManifoldExpr::Rp(self.parameter()?))
                    }
                    other => self.error(self.pos, format!("expected 'P' after 'R', found {}", Self::describe(other))),
                }
            }
            _ => self.error(term_start, format!("expected S(n), RP(n), T(n), K, M(k) or '(', found {c:?}")),
        }
    }
}

/// Parses an expression; parameters are checked against the catalog rules.
pub fn parse(input: &str) -> Result<ManifoldExpr> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return p.error(p.pos, format!("unexpected {c:?} after a complete expression"));
    }
    e.check_parameters()?;
    Ok(e)
}
