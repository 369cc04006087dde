//! Symbols, anti-morphisms and the regular/hairpin expression syntax tree.
//!
//! A hairpin expression is either a regular expression, a hairpin operator
//! (`Hr`, `Hl`, `Hp`) wrapping a regular expression, or a sum of hairpin
//! expressions. Hairpin operators never nest.
//!
//! All types derive a total order (variant tag first, then the fields
//! recursively). Sets of expressions are kept in that order, so every
//! construction downstream is deterministic.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub use parse::parse;

/// A single letter of the alphabet Γ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(c: char) -> Result<Self> {
        if c.is_ascii_alphanumeric() {
            Ok(Symbol(c))
        } else {
            Err(Error::InvalidSymbol(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An ordered finite set of distinct symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Self {
        let mut symbols: Vec<Symbol> = symbols.into_iter().collect();
        symbols.sort();
        symbols.dedup();
        Alphabet { symbols }
    }

    /// Builds an alphabet from the characters of `s`, ignoring whitespace.
    pub fn from_chars(s: &str) -> Result<Self> {
        let symbols = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(Symbol::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Alphabet::new(symbols))
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.binary_search(&s).is_ok()
    }

    pub fn contains_char(&self, c: char) -> bool {
        Symbol::new(c).map(|s| self.contains(s)).unwrap_or(false)
    }

    /// Fails on the first character of `w` outside the alphabet.
    pub fn check_word(&self, w: &str) -> Result<()> {
        match w.chars().find(|&c| !self.contains_char(c)) {
            Some(c) => Err(Error::SymbolOutsideAlphabet(c)),
            None => Ok(()),
        }
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        Alphabet::new(self.symbols.iter().chain(other.symbols.iter()).copied())
    }

    /// All of Σ_Γ in lexicographic `(left, right)` order with ε last on each side.
    pub fn couples(&self) -> Vec<CoupleSymbol> {
        let sides: Vec<Option<Symbol>> = self
            .symbols
            .iter()
            .copied()
            .map(Some)
            .chain(std::iter::once(None))
            .collect();
        let mut out = Vec::with_capacity(sides.len() * sides.len() - 1);
        for &left in &sides {
            for &right in &sides {
                if let Ok(c) = CoupleSymbol::new(left, right) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Couples with both components in Γ.
    pub fn full_couples(&self) -> Vec<CoupleSymbol> {
        self.couples()
            .into_iter()
            .filter(|c| c.left.is_some() && c.right.is_some())
            .collect()
    }

    /// Every word over the alphabet of length at most `max_len`, shortest first.
    pub fn words_upto(&self, max_len: usize) -> Vec<String> {
        let mut out = vec![String::new()];
        let mut layer = vec![String::new()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * self.len());
            for w in &layer {
                for s in &self.symbols {
                    let mut v = w.clone();
                    v.push(s.0);
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A letter of Σ_Γ: a pair of optional symbols, never `(ε, ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CoupleSymbol {
    left: Option<Symbol>,
    right: Option<Symbol>,
}

impl CoupleSymbol {
    /// Smallest couple in the total order.
    pub(crate) const MIN: CoupleSymbol =
        CoupleSymbol { left: Some(Symbol('0')), right: Some(Symbol('0')) };

    pub fn new(left: Option<Symbol>, right: Option<Symbol>) -> Result<Self> {
        if left.is_none() && right.is_none() {
            return Err(Error::EmptyCouple);
        }
        Ok(CoupleSymbol { left, right })
    }

    pub fn both(x: Symbol, y: Symbol) -> Self {
        CoupleSymbol { left: Some(x), right: Some(y) }
    }

    pub fn left_only(x: Symbol) -> Self {
        CoupleSymbol { left: Some(x), right: None }
    }

    pub fn right_only(y: Symbol) -> Self {
        CoupleSymbol { left: None, right: Some(y) }
    }

    /// Parses `(x,y)` where either side may be `~` for ε.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Syntax { pos: 0, msg: format!("{msg} in couple `{text}`") };
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| bad("expected parentheses"))?;
        let (l, r) = inner.split_once(',').ok_or_else(|| bad("expected a comma"))?;
        let side = |s: &str| -> Result<Option<Symbol>> {
            let s = s.trim();
            let mut chars = s.chars();
            match (chars.next(), chars.next()) {
                (Some('~'), None) => Ok(None),
                (Some(c), None) => Symbol::new(c).map(Some),
                _ => Err(bad("expected one symbol or `~` per side")),
            }
        };
        CoupleSymbol::new(side(l)?, side(r)?)
    }

    pub fn left(&self) -> Option<Symbol> {
        self.left
    }

    pub fn right(&self) -> Option<Symbol> {
        self.right
    }

    /// Number of Γ symbols the couple contributes to `Im`.
    pub fn weight(&self) -> usize {
        self.left.is_some() as usize + self.right.is_some() as usize
    }

    fn sort_key(&self) -> (bool, Option<Symbol>, bool, Option<Symbol>) {
        (self.left.is_none(), self.left, self.right.is_none(), self.right)
    }
}

impl PartialOrd for CoupleSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

// ε sorts after every symbol.
impl Ord for CoupleSymbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for CoupleSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: Option<Symbol>| s.map_or('~', Symbol::as_char);
        write!(f, "({},{})", side(self.left), side(self.right))
    }
}

/// A symbol map Γ → Γ extended anti-morphically to words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntiMorphism {
    name: String,
    table: BTreeMap<Symbol, Symbol>,
}

impl AntiMorphism {
    /// The map must be total on its domain, and its image must stay inside
    /// the domain.
    pub fn new(name: impl Into<String>, table: BTreeMap<Symbol, Symbol>) -> Result<Self> {
        let name = name.into();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::InvalidMap(format!("bad name `{name}`")));
        }
        if table.is_empty() {
            return Err(Error::InvalidMap("empty map".into()));
        }
        if let Some(img) = table.values().find(|v| !table.contains_key(v)) {
            return Err(Error::InvalidMap(format!("image `{img}` is outside the domain")));
        }
        Ok(AntiMorphism { name, table })
    }

    /// Inline syntax: `a:a,b:c,c:b`.
    pub fn parse_inline(name: &str, spec: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for pair in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (x, y) = pair
                .split_once(':')
                .ok_or_else(|| Error::InvalidMap(format!("expected `x:y`, got `{pair}`")))?;
            Self::insert_pair(&mut table, x, y)?;
        }
        AntiMorphism::new(name, table)
    }

    /// File syntax: one `x -> y` per line, `#` starts a comment.
    pub fn parse_file(name: &str, text: &str) -> Result<Self> {
        let mut table = BTreeMap::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (x, y) = line
                .split_once("->")
                .ok_or_else(|| Error::InvalidMap(format!("expected `x -> y`, got `{line}`")))?;
            Self::insert_pair(&mut table, x, y)?;
        }
        AntiMorphism::new(name, table)
    }

    fn insert_pair(table: &mut BTreeMap<Symbol, Symbol>, x: &str, y: &str) -> Result<()> {
        let one = |s: &str| -> Result<Symbol> {
            let s = s.trim();
            let mut it = s.chars();
            match (it.next(), it.next()) {
                (Some(c), None) => Symbol::new(c),
                _ => Err(Error::InvalidMap(format!("`{s}` is not a single symbol"))),
            }
        };
        let (x, y) = (one(x)?, one(y)?);
        if table.insert(x, y).is_some_and(|old| old != y) {
            return Err(Error::InvalidMap(format!("`{x}` is mapped twice")));
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The domain Γ of the map.
    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.table.keys().copied())
    }

    pub fn image(&self, a: Symbol) -> Option<Symbol> {
        self.table.get(&a).copied()
    }

    /// Symbols mapped onto `b`.
    pub fn preimages(&self, b: Symbol) -> impl Iterator<Item = Symbol> + '_ {
        self.table.iter().filter(move |(_, &v)| v == b).map(|(&k, _)| k)
    }

    pub fn is_involution(&self) -> bool {
        self.table.iter().all(|(&a, &b)| self.image(b) == Some(a))
    }

    /// `H(a1 … an) = H(an) … H(a1)`.
    pub fn apply(&self, w: &str) -> Result<String> {
        w.chars()
            .rev()
            .map(|c| {
                Symbol::new(c)
                    .ok()
                    .and_then(|s| self.image(s))
                    .map(Symbol::as_char)
                    .ok_or(Error::SymbolOutsideAlphabet(c))
            })
            .collect()
    }

    /// `name: a:a,b:c,c:b`
    pub fn to_inline(&self) -> String {
        self.table.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(",")
    }
}

/// Anti-morphic image of a word; see [`AntiMorphism::apply`].
pub fn h_word(h: &AntiMorphism, w: &str) -> Result<String> {
    h.apply(w)
}

/// Named anti-morphisms sharing one alphabet.
#[derive(Debug, Clone, Default)]
pub struct Registry {
    alphabet: Alphabet,
    maps: BTreeMap<String, Arc<AntiMorphism>>,
}

impl Registry {
    /// A registry without anti-morphisms; only plain regexes parse against it.
    pub fn new(alphabet: Alphabet) -> Self {
        Registry { alphabet, maps: BTreeMap::new() }
    }

    /// Registry whose alphabet is the domain of `h`.
    pub fn with_map(h: AntiMorphism) -> Self {
        let alphabet = h.alphabet();
        let mut maps = BTreeMap::new();
        maps.insert(h.name.clone(), Arc::new(h));
        Registry { alphabet, maps }
    }

    /// Shorthand for a registry holding one map named `H` in inline syntax.
    pub fn from_inline(spec: &str) -> Result<Self> {
        Ok(Registry::with_map(AntiMorphism::parse_inline("H", spec)?))
    }

    /// Adds a map; its domain must be the registry alphabet (or the registry
    /// must be empty, in which case the map defines it).
    pub fn insert(&mut self, h: AntiMorphism) -> Result<()> {
        let domain = h.alphabet();
        if self.maps.is_empty() && self.alphabet.is_empty() {
            self.alphabet = domain;
        } else if domain != self.alphabet {
            return Err(Error::InvalidMap(format!(
                "`{}` has domain {{{domain}}}, registry alphabet is {{{}}}",
                h.name, self.alphabet
            )));
        }
        self.maps.insert(h.name.clone(), Arc::new(h));
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn get(&self, name: &str) -> Option<&Arc<AntiMorphism>> {
        self.maps.get(name)
    }

    pub fn maps(&self) -> impl Iterator<Item = &Arc<AntiMorphism>> {
        self.maps.values()
    }
}

/// Whether builders simplify with the unit/zero laws of `·` and `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// No rewriting at all.
    Raw,
    /// `ε·E → E`, `E·ε → E`, `∅·E → ∅`, `E·∅ → ∅`, `∅+E → E`, `E+∅ → E`.
    #[default]
    Reduced,
}

/// Regular expression syntax tree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    Empty,
    Epsilon,
    Sym(Symbol),
    Sum(Box<Regex>, Box<Regex>),
    Concat(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn sym(c: char) -> Regex {
        Regex::Sym(Symbol::new(c).expect("invalid symbol"))
    }

    pub fn sum(a: Regex, b: Regex) -> Regex {
        Regex::Sum(Box::new(a), Box::new(b))
    }

    pub fn cat(a: Regex, b: Regex) -> Regex {
        Regex::Concat(Box::new(a), Box::new(b))
    }

    pub fn star(a: Regex) -> Regex {
        Regex::Star(Box::new(a))
    }

    /// Concatenation, simplified at the root in reduced mode.
    pub fn cat_in(mode: Mode, a: Regex, b: Regex) -> Regex {
        if mode == Mode::Reduced {
            match (&a, &b) {
                (Regex::Empty, _) | (_, Regex::Empty) => return Regex::Empty,
                (Regex::Epsilon, _) => return b,
                (_, Regex::Epsilon) => return a,
                _ => {}
            }
        }
        Regex::cat(a, b)
    }

    /// Union, simplified at the root in reduced mode.
    pub fn sum_in(mode: Mode, a: Regex, b: Regex) -> Regex {
        if mode == Mode::Reduced {
            match (&a, &b) {
                (Regex::Empty, _) => return b,
                (_, Regex::Empty) => return a,
                _ => {}
            }
        }
        Regex::sum(a, b)
    }

    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Sym(_) => false,
            Regex::Epsilon | Regex::Star(_) => true,
            Regex::Sum(a, b) => a.nullable() || b.nullable(),
            Regex::Concat(a, b) => a.nullable() && b.nullable(),
        }
    }

    pub fn width(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon => 0,
            Regex::Sym(_) => 1,
            Regex::Sum(a, b) | Regex::Concat(a, b) => a.width() + b.width(),
            Regex::Star(a) => a.width(),
        }
    }

    pub fn star_number(&self) -> usize {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => 0,
            Regex::Sum(a, b) | Regex::Concat(a, b) => a.star_number() + b.star_number(),
            Regex::Star(a) => 1 + a.star_number(),
        }
    }

    pub fn canonicalize(&self, mode: Mode) -> Regex {
        match mode {
            Mode::Raw => self.clone(),
            Mode::Reduced => self.reduce(),
        }
    }

    // Children are reduced first, so one root rewrite reaches the fixpoint.
    fn reduce(&self) -> Regex {
        match self {
            Regex::Empty | Regex::Epsilon | Regex::Sym(_) => self.clone(),
            Regex::Sum(a, b) => Regex::sum_in(Mode::Reduced, a.reduce(), b.reduce()),
            Regex::Concat(a, b) => Regex::cat_in(Mode::Reduced, a.reduce(), b.reduce()),
            Regex::Star(a) => Regex::star(a.reduce()),
        }
    }

    /// Symbols occurring in the expression.
    pub fn alphabet(&self) -> Alphabet {
        let mut out = Vec::new();
        self.collect_symbols(&mut out);
        Alphabet::new(out)
    }

    fn collect_symbols(&self, out: &mut Vec<Symbol>) {
        match self {
            Regex::Empty | Regex::Epsilon => {}
            Regex::Sym(s) => out.push(*s),
            Regex::Sum(a, b) | Regex::Concat(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
            Regex::Star(a) => a.collect_symbols(out),
        }
    }

    // 0: sum operand, 1: left concat operand, 2: right concat operand, 3: star operand.
    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
        match self {
            Regex::Empty => f.write_str("%0"),
            Regex::Epsilon => f.write_str("%e"),
            Regex::Sym(s) => write!(f, "{s}"),
            Regex::Star(a) => {
                a.fmt_at(f, 3)?;
                f.write_str("*")
            }
            Regex::Sum(a, b) => {
                if ctx > 0 {
                    f.write_str("(")?;
                }
                a.fmt_at(f, 0)?;
                f.write_str("+")?;
                b.fmt_at(f, 1)?;
                if ctx > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Regex::Concat(a, b) => {
                if ctx > 1 {
                    f.write_str("(")?;
                }
                a.fmt_at(f, 1)?;
                b.fmt_at(f, 2)?;
                if ctx > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// Prints in the concrete syntax accepted by [`parse`]; the printed form
/// parses back to the same tree.
impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

/// Which hairpin operator a node carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HairpinKind {
    /// Right completion `Hr`.
    Right,
    /// Left completion `Hl`.
    Left,
    /// The filter `Hp`.
    Prime,
}

impl HairpinKind {
    fn tag(self) -> &'static str {
        match self {
            HairpinKind::Right => "Hr",
            HairpinKind::Left => "Hl",
            HairpinKind::Prime => "Hp",
        }
    }
}

/// Regular expression, hairpin operator over a regular expression, or a sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HairpinExpr {
    Reg(Regex),
    Op { kind: HairpinKind, k: u32, h: Arc<AntiMorphism>, inner: Regex },
    Sum(Box<HairpinExpr>, Box<HairpinExpr>),
}

impl HairpinExpr {
    pub fn right(k: u32, h: Arc<AntiMorphism>, inner: Regex) -> HairpinExpr {
        HairpinExpr::Op { kind: HairpinKind::Right, k, h, inner }
    }

    pub fn left(k: u32, h: Arc<AntiMorphism>, inner: Regex) -> HairpinExpr {
        HairpinExpr::Op { kind: HairpinKind::Left, k, h, inner }
    }

    pub fn prime(k: u32, h: Arc<AntiMorphism>, inner: Regex) -> Result<HairpinExpr> {
        if k == 0 {
            return Err(Error::PrimeIndexZero);
        }
        Ok(HairpinExpr::Op { kind: HairpinKind::Prime, k, h, inner })
    }

    /// Sum that stays a plain regex when both sides are regular.
    pub fn sum(a: HairpinExpr, b: HairpinExpr) -> HairpinExpr {
        match (a, b) {
            (HairpinExpr::Reg(x), HairpinExpr::Reg(y)) => HairpinExpr::Reg(Regex::sum(x, y)),
            (a, b) => HairpinExpr::Sum(Box::new(a), Box::new(b)),
        }
    }

    pub fn as_regex(&self) -> Option<&Regex> {
        match self {
            HairpinExpr::Reg(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_regular(&self) -> bool {
        matches!(self, HairpinExpr::Reg(_))
    }

    pub fn is_empty_regex(&self) -> bool {
        matches!(self, HairpinExpr::Reg(Regex::Empty))
    }

    /// True iff ε belongs to the denoted language.
    pub fn nullable(&self) -> bool {
        match self {
            HairpinExpr::Reg(r) => r.nullable(),
            // Completions with k = 0 contain ε exactly when the operand does.
            HairpinExpr::Op { k: 0, inner, .. } => inner.nullable(),
            HairpinExpr::Op { .. } => false,
            HairpinExpr::Sum(a, b) => a.nullable() || b.nullable(),
        }
    }

    pub fn metrics(&self) -> ExprMetrics {
        let (n, h) = self.width_and_stars();
        ExprMetrics { width: n, star_number: h, m: n + h, index: self.index() }
    }

    fn width_and_stars(&self) -> (usize, usize) {
        match self {
            HairpinExpr::Reg(r) | HairpinExpr::Op { inner: r, .. } => (r.width(), r.star_number()),
            HairpinExpr::Sum(a, b) => {
                let (n1, h1) = a.width_and_stars();
                let (n2, h2) = b.width_and_stars();
                (n1 + n2, h1 + h2)
            }
        }
    }

    fn index(&self) -> u32 {
        match self {
            HairpinExpr::Reg(_) => 0,
            HairpinExpr::Op { k, .. } => *k,
            HairpinExpr::Sum(a, b) => a.index().max(b.index()),
        }
    }

    /// Applies [`Regex::canonicalize`] to every regex part.
    pub fn canonicalize(&self, mode: Mode) -> HairpinExpr {
        match self {
            HairpinExpr::Reg(r) => HairpinExpr::Reg(r.canonicalize(mode)),
            HairpinExpr::Op { kind, k, h, inner } => HairpinExpr::Op {
                kind: *kind,
                k: *k,
                h: h.clone(),
                inner: inner.canonicalize(mode),
            },
            HairpinExpr::Sum(a, b) => {
                HairpinExpr::Sum(Box::new(a.canonicalize(mode)), Box::new(b.canonicalize(mode)))
            }
        }
    }

    /// Smallest `k` over all hairpin operators, `None` for plain regexes.
    pub fn min_operator_index(&self) -> Option<u32> {
        match self {
            HairpinExpr::Reg(_) => None,
            HairpinExpr::Op { k, .. } => Some(*k),
            HairpinExpr::Sum(a, b) => match (a.min_operator_index(), b.min_operator_index()) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, y) => x.or(y),
            },
        }
    }

    /// Symbols occurring in the expression.
    pub fn alphabet(&self) -> Alphabet {
        match self {
            HairpinExpr::Reg(r) => r.alphabet(),
            HairpinExpr::Op { inner, h, .. } => inner.alphabet().union(&h.alphabet()),
            HairpinExpr::Sum(a, b) => a.alphabet().union(&b.alphabet()),
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, right_operand: bool) -> fmt::Result {
        match self {
            HairpinExpr::Reg(r @ Regex::Sum(..)) if right_operand => write!(f, "({r})"),
            HairpinExpr::Reg(r) => write!(f, "{r}"),
            HairpinExpr::Op { kind, k, h, inner } => {
                write!(f, "{}[{},{}]({})", kind.tag(), k, h.name(), inner)
            }
            HairpinExpr::Sum(a, b) => {
                if right_operand {
                    f.write_str("(")?;
                }
                a.fmt_at(f, false)?;
                f.write_str("+")?;
                b.fmt_at(f, true)?;
                if right_operand {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for HairpinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, false)
    }
}

/// Free-function form of [`HairpinExpr::nullable`].
pub fn nullable(e: &HairpinExpr) -> bool {
    e.nullable()
}

/// Free-function form of [`HairpinExpr::metrics`].
pub fn metrics(e: &HairpinExpr) -> ExprMetrics {
    e.metrics()
}

/// Free-function form of [`HairpinExpr::canonicalize`].
pub fn canonicalize(e: &HairpinExpr, mode: Mode) -> HairpinExpr {
    e.canonicalize(mode)
}

/// Size measures used by the cardinality bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExprMetrics {
    /// Number of symbol occurrences `n`.
    pub width: usize,
    /// Number of stars `h`.
    pub star_number: usize,
    /// `n + h`.
    pub m: usize,
    /// Largest hairpin `k`; 0 for a plain regex.
    pub index: u32,
}

impl fmt::Display for ExprMetrics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} h={} m={} index={}",
            self.width, self.star_number, self.m, self.index
        )
    }
}
