//! Recursive-descent parser for the expression syntax.
//!
//! ```text
//! expr    := term ('+' term)*
//! term    := hairpin | cat
//! hairpin := ('Hr'|'Hl'|'Hp') '[' integer ',' name ']' '(' expr ')'
//! cat     := factor+
//! factor  := base '*'*
//! base    := symbol | '%e' | '%0' | '(' expr ')'
//! ```
//!
//! The operand of a hairpin operator must be regular. Whitespace is ignored.

use super::{HairpinExpr, HairpinKind, Regex, Registry, Symbol};
use crate::error::{Error, Result};

/// Parses `text` against the alphabet and anti-morphisms of `registry`.
pub fn parse(text: &str, registry: &Registry) -> Result<HairpinExpr> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, registry };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected `{}`", p.chars[p.pos])));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    registry: &'a Registry,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => Err(self.error(format!("expected `{c}`, found `{d}`"))),
            None => Err(self.error(format!("expected `{c}`, found end of input"))),
        }
    }

    fn hairpin_ahead(&mut self) -> Option<HairpinKind> {
        self.skip_ws();
        let rest = &self.chars[self.pos..];
        if rest.len() < 3 || rest[0] != 'H' || rest[2] != '[' {
            return None;
        }
        match rest[1] {
            'r' => Some(HairpinKind::Right),
            'l' => Some(HairpinKind::Left),
            'p' => Some(HairpinKind::Prime),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<HairpinExpr> {
        let mut acc = self.term()?;
        while self.peek() == Some('+') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = HairpinExpr::sum(acc, rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<HairpinExpr> {
        match self.hairpin_ahead() {
            Some(kind) => self.hairpin(kind),
            None => self.cat(),
        }
    }

    fn hairpin(&mut self, kind: HairpinKind) -> Result<HairpinExpr> {
        self.pos += 2;
        self.expect('[')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let k: u32 = self.chars[start..self.pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Syntax { pos: start, msg: "expected an integer".into() })?;
        self.expect(',')?;
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if name.is_empty() {
            return Err(self.error("expected an anti-morphism name"));
        }
        let h = self
            .registry
            .get(&name)
            .cloned()
            .ok_or_else(|| Error::UnknownAntiMorphism(name.clone()))?;
        self.expect(']')?;
        self.expect('(')?;
        let operand_pos = self.pos;
        let inner = match self.expr()? {
            HairpinExpr::Reg(r) => r,
            _ => return Err(Error::NestedHairpin(operand_pos)),
        };
        self.expect(')')?;
        match kind {
            HairpinKind::Right => Ok(HairpinExpr::right(k, h, inner)),
            HairpinKind::Left => Ok(HairpinExpr::left(k, h, inner)),
            HairpinKind::Prime => HairpinExpr::prime(k, h, inner),
        }
    }

    fn starts_base(&mut self) -> bool {
        if self.hairpin_ahead().is_some() {
            return false;
        }
        matches!(self.peek(), Some(c) if c == '(' || c == '%' || c.is_ascii_alphanumeric())
    }

    fn cat(&mut self) -> Result<HairpinExpr> {
        let start = self.pos;
        let mut factors = Vec::new();
        while self.starts_base() {
            factors.push((self.pos, self.factor()?));
        }
        if factors.is_empty() {
            return Err(match self.peek() {
                Some(c) => self.error(format!("unexpected `{c}`")),
                None => self.error("unexpected end of input"),
            });
        }
        if self.hairpin_ahead().is_some() {
            return Err(Error::NestedHairpin(self.pos));
        }
        if factors.len() == 1 {
            return Ok(factors.pop().expect("one factor").1);
        }
        let mut acc: Option<Regex> = None;
        for (pos, f) in factors {
            let r = match f {
                HairpinExpr::Reg(r) => r,
                _ => return Err(Error::NestedHairpin(pos.max(start))),
            };
            acc = Some(match acc {
                None => r,
                Some(a) => Regex::cat(a, r),
            });
        }
        Ok(HairpinExpr::Reg(acc.expect("non-empty")))
    }

    fn factor(&mut self) -> Result<HairpinExpr> {
        let pos = self.pos;
        let mut base = self.base()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            base = match base {
                HairpinExpr::Reg(r) => HairpinExpr::Reg(Regex::star(r)),
                _ => return Err(Error::NestedHairpin(pos)),
            };
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<HairpinExpr> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('%') => {
                self.pos += 1;
                match self.chars.get(self.pos) {
                    Some('e') => {
                        self.pos += 1;
                        Ok(HairpinExpr::Reg(Regex::Epsilon))
                    }
                    Some('0') => {
                        self.pos += 1;
                        Ok(HairpinExpr::Reg(Regex::Empty))
                    }
                    _ => Err(self.error("expected `%e` or `%0`")),
                }
            }
            Some(c) => {
                let s = Symbol::new(c).map_err(|_| self.error(format!("unexpected `{c}`")))?;
                if !self.registry.alphabet().contains(s) {
                    return Err(Error::SymbolOutsideAlphabet(c));
                }
                self.pos += 1;
                Ok(HairpinExpr::Reg(Regex::Sym(s)))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }
}
