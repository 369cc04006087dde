//! Partial derivatives.
//!
//! Left and right derivatives follow Antimirov's rules. The two-sided
//! derivative with respect to a couple `(x, y)` removes `x` from the front and
//! `y` from the back of every word at once; on a hairpin operator it is only
//! non-empty when `y = H(x)`, which is what keeps the set of derived terms
//! finite even though the denoted languages are not regular.
//!
//! Every result is a [`TermSet`]: sorted, duplicate-free, and never holding
//! the `∅` expression.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{Alphabet, CoupleSymbol, HairpinExpr, HairpinKind, Mode, Regex, Symbol};

/// Expressions that can be members of a [`TermSet`].
pub trait Term: Ord + Clone + fmt::Display {
    /// True for the `∅` expression itself (not for every empty language).
    fn is_empty_expr(&self) -> bool;
}

impl Term for Regex {
    fn is_empty_expr(&self) -> bool {
        matches!(self, Regex::Empty)
    }
}

impl Term for HairpinExpr {
    fn is_empty_expr(&self) -> bool {
        self.is_empty_regex()
    }
}

/// Sorted set of expressions without `∅`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermSet<T: Term>(BTreeSet<T>);

impl<T: Term> Default for TermSet<T> {
    fn default() -> Self {
        TermSet(BTreeSet::new())
    }
}

impl<T: Term> TermSet<T> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `t` unless it is `∅`.
    pub fn insert(&mut self, t: T) -> bool {
        !t.is_empty_expr() && self.0.insert(t)
    }

    pub fn extend(&mut self, other: TermSet<T>) {
        self.0.extend(other.0);
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: &T) -> bool {
        self.0.contains(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.0.iter()
    }

    /// Applies `f` to every member, dropping any `∅` results.
    pub fn map<U: Term>(self, f: impl Fn(T) -> U) -> TermSet<U> {
        self.0.into_iter().map(f).collect()
    }
}

impl<T: Term> FromIterator<T> for TermSet<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = TermSet::new();
        for t in iter {
            s.insert(t);
        }
        s
    }
}

impl<T: Term> IntoIterator for TermSet<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl<'a, T: Term> IntoIterator for &'a TermSet<T> {
    type Item = &'a T;
    type IntoIter = std::collections::btree_set::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl<T: Term> fmt::Display for TermSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("}")
    }
}

/// Which derivative a fixpoint iterates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

fn left_into(f: &Regex, a: Symbol, mode: Mode, out: &mut TermSet<Regex>) {
    match f {
        Regex::Sym(b) if *b == a => {
            out.insert(Regex::Epsilon);
        }
        Regex::Sym(_) | Regex::Epsilon | Regex::Empty => {}
        Regex::Sum(x, y) => {
            left_into(x, a, mode, out);
            left_into(y, a, mode, out);
        }
        Regex::Concat(x, y) => {
            let mut head = TermSet::new();
            left_into(x, a, mode, &mut head);
            for t in head {
                out.insert(Regex::cat_in(mode, t, (**y).clone()));
            }
            if x.nullable() {
                left_into(y, a, mode, out);
            }
        }
        Regex::Star(x) => {
            let mut head = TermSet::new();
            left_into(x, a, mode, &mut head);
            for t in head {
                out.insert(Regex::cat_in(mode, t, f.clone()));
            }
        }
    }
}

fn right_into(f: &Regex, a: Symbol, mode: Mode, out: &mut TermSet<Regex>) {
    match f {
        Regex::Sym(b) if *b == a => {
            out.insert(Regex::Epsilon);
        }
        Regex::Sym(_) | Regex::Epsilon | Regex::Empty => {}
        Regex::Sum(x, y) => {
            right_into(x, a, mode, out);
            right_into(y, a, mode, out);
        }
        Regex::Concat(x, y) => {
            let mut tail = TermSet::new();
            right_into(y, a, mode, &mut tail);
            for t in tail {
                out.insert(Regex::cat_in(mode, (**x).clone(), t));
            }
            if y.nullable() {
                right_into(x, a, mode, out);
            }
        }
        Regex::Star(x) => {
            let mut tail = TermSet::new();
            right_into(x, a, mode, &mut tail);
            for t in tail {
                out.insert(Regex::cat_in(mode, f.clone(), t));
            }
        }
    }
}

/// Left partial derivative `∂/∂a (f)`.
pub fn left_pd(f: &Regex, a: Symbol, mode: Mode) -> TermSet<Regex> {
    let f = f.canonicalize(mode);
    let mut out = TermSet::new();
    left_into(&f, a, mode, &mut out);
    out
}

/// Right partial derivative `(f) ∂/∂a`.
pub fn right_pd(f: &Regex, a: Symbol, mode: Mode) -> TermSet<Regex> {
    let f = f.canonicalize(mode);
    let mut out = TermSet::new();
    right_into(&f, a, mode, &mut out);
    out
}

/// Derivative by a word, one symbol at a time. On the right side the word is
/// consumed from its first letter too: `(F)∂/∂(aw) = ((F)∂/∂a)∂/∂w`.
pub fn word_pd(f: &Regex, w: &str, side: Side, mode: Mode) -> Result<TermSet<Regex>> {
    let mut current: TermSet<Regex> = std::iter::once(f.canonicalize(mode)).collect();
    if f.canonicalize(mode) == Regex::Empty {
        return Ok(current);
    }
    for c in w.chars() {
        let a = Symbol::new(c)?;
        let mut next = TermSet::new();
        for t in &current {
            next.extend(match side {
                Side::Left => left_pd(t, a, mode),
                Side::Right => right_pd(t, a, mode),
                Side::TwoSided => return Err(Error::NotRegular),
            });
        }
        current = next;
    }
    Ok(current)
}

/// Two-sided derivative of a plain regex: right-only, left-only, or left
/// then right.
pub fn regex_couple_pd(f: &Regex, c: CoupleSymbol, mode: Mode) -> TermSet<Regex> {
    match (c.left(), c.right()) {
        (None, Some(y)) => right_pd(f, y, mode),
        (Some(x), None) => left_pd(f, x, mode),
        (Some(x), Some(y)) => {
            let mut out = TermSet::new();
            for t in left_pd(f, x, mode) {
                out.extend(right_pd(&t, y, mode));
            }
            out
        }
        (None, None) => unreachable!("couple symbols are never (~,~)"),
    }
}

/// Two-sided partial derivative `∂/∂(x,y) (e)`.
pub fn two_sided_pd(e: &HairpinExpr, c: CoupleSymbol, mode: Mode) -> Result<TermSet<HairpinExpr>> {
    if e.min_operator_index() == Some(0) {
        return Err(Error::ZeroIndexOperator);
    }
    let e = e.canonicalize(mode);
    let mut out = TermSet::new();
    two_sided_into(&e, c, mode, &mut out);
    Ok(out)
}

fn two_sided_into(e: &HairpinExpr, c: CoupleSymbol, mode: Mode, out: &mut TermSet<HairpinExpr>) {
    match e {
        HairpinExpr::Reg(f) => {
            out.extend(regex_couple_pd(f, c, mode).map(HairpinExpr::Reg));
        }
        HairpinExpr::Op { kind, k, h, inner } => {
            let (Some(x), Some(y)) = (c.left(), c.right()) else {
                return;
            };
            if h.image(x) != Some(y) {
                return;
            }
            let outer = match kind {
                HairpinKind::Right => left_pd(inner, x, mode),
                HairpinKind::Left => right_pd(inner, y, mode),
                HairpinKind::Prime => TermSet::new(),
            };
            for f in outer {
                out.insert(HairpinExpr::Op { kind: *kind, k: *k, h: h.clone(), inner: f });
            }
            for g in regex_couple_pd(inner, c, mode) {
                if *k == 1 {
                    out.insert(HairpinExpr::Reg(g));
                } else {
                    out.insert(HairpinExpr::Op {
                        kind: HairpinKind::Prime,
                        k: k - 1,
                        h: h.clone(),
                        inner: g,
                    });
                }
            }
        }
        HairpinExpr::Sum(a, b) => {
            two_sided_into(a, c, mode, out);
            two_sided_into(b, c, mode, out);
        }
    }
}

/// Breadth-first closure of `start` under `step`. Returns the terms reachable
/// in at least one step, in discovery order.
fn explore<T, F>(start: &T, mut step: F) -> Result<Vec<T>>
where
    T: Ord + Clone,
    F: FnMut(&T) -> Result<Vec<T>>,
{
    let mut seen = BTreeSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    queue.push_back(start.clone());
    let mut first = true;
    while let Some(t) = queue.pop_front() {
        if !first && !seen.insert(t.clone()) {
            continue;
        }
        if !first {
            order.push(t.clone());
        }
        first = false;
        for next in step(&t)? {
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
    }
    Ok(order)
}

/// A derived-term fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedTerms {
    pub terms: TermSet<HairpinExpr>,
    /// The same terms in breadth-first discovery order.
    pub discovery: Vec<HairpinExpr>,
    pub side: Side,
    pub source: HairpinExpr,
}

impl DerivedTerms {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Left, right or two-sided derived terms of `e` over `alphabet`.
///
/// One-sided derivatives need a plain regex. The source belongs to the result
/// only when some non-empty derivation reaches it again.
pub fn derived_terms(e: &HairpinExpr, side: Side, alphabet: &Alphabet, mode: Mode) -> Result<DerivedTerms> {
    let source = e.canonicalize(mode);
    let discovery = match side {
        Side::Left | Side::Right => {
            let f = source.as_regex().ok_or(Error::NotRegular)?.clone();
            let found = explore(&f, |t| {
                let mut next = Vec::new();
                for &a in alphabet.symbols() {
                    let d = if side == Side::Left { left_pd(t, a, mode) } else { right_pd(t, a, mode) };
                    next.extend(d);
                }
                Ok(next)
            })?;
            found.into_iter().map(HairpinExpr::Reg).collect()
        }
        Side::TwoSided => {
            if source.min_operator_index() == Some(0) {
                return Err(Error::ZeroIndexOperator);
            }
            let couples = alphabet.couples();
            explore(&source, |t| {
                let mut next = Vec::new();
                for &c in &couples {
                    next.extend(two_sided_pd(t, c, mode)?);
                }
                Ok(next)
            })?
        }
    };
    Ok(DerivedTerms { terms: discovery.iter().cloned().collect(), discovery, side, source })
}

/// `φ(0) = 0`, `φ(1) = 1`, `φ(k+1) = φ(k) + 2k(k+1)`.
pub fn phi(k: u64) -> u64 {
    if k == 0 {
        return 0;
    }
    (1..k).fold(1, |acc, j| acc + 2 * j * (j + 1))
}

/// `2m(m+1)(m+2)/3 - 3`, clamped at 0.
pub fn cubic_bound(m: u64) -> u64 {
    (2 * m * (m + 1) * (m + 2) / 3).saturating_sub(3)
}

/// Theoretical cardinality bounds for an expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub left_bound: u64,
    pub right_bound: u64,
    pub two_sided_bound: u64,
    pub state_bound: u64,
}

/// Bounds on derived-term counts and on the two-sided automaton size.
///
/// The cubic term uses the closed form `2m(m+1)(m+2)/3 - 3`; for index
/// `k ≥ 1` it becomes `k·(…) + n`. With width 0 the closed form is clamped
/// at 0 instead of going negative.
pub fn bounds(e: &HairpinExpr) -> Bounds {
    let m = e.metrics();
    let n = m.width as u64;
    let cubic = cubic_bound(m.m as u64);
    let two_sided = match m.index {
        0 => cubic,
        k => u64::from(k) * cubic + n,
    };
    Bounds { left_bound: n, right_bound: n, two_sided_bound: two_sided, state_bound: two_sided + 1 }
}
