//! Brute-force ground truth.
//!
//! Languages are enumerated up to a length bound directly from their set
//! definitions, without derivatives or automata. Everything else in the crate
//! is tested against these functions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::expr::{AntiMorphism, HairpinExpr, HairpinKind, Regex, Symbol};

/// Largest length bound accepted by the enumerators.
pub const MAX_LEN_CAP: usize = 16;

pub(crate) fn check_cap(max_len: usize) -> Result<()> {
    if max_len > MAX_LEN_CAP {
        return Err(Error::CapExceeded { requested: max_len, cap: MAX_LEN_CAP });
    }
    Ok(())
}

/// A finite set of words that is exact up to `bound`.
///
/// Every word has length at most `bound`, and every language member of that
/// length is present. A bound of `-1` covers nothing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LangSet {
    pub words: BTreeSet<String>,
    pub bound: i64,
}

impl LangSet {
    /// Keeps the words of length at most `bound`.
    pub fn new<I, S>(words: I, bound: i64) -> LangSet
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words = words.into_iter().map(Into::into).filter(|w: &String| fits(w, bound)).collect();
        LangSet { words, bound }
    }

    pub fn empty(bound: i64) -> LangSet {
        LangSet { words: BTreeSet::new(), bound }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &str) -> bool {
        self.words.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    /// Drops the words longer than `bound` (no-op if `bound` is larger).
    pub fn restrict(&self, bound: i64) -> LangSet {
        let bound = bound.min(self.bound);
        LangSet::new(self.words.iter().cloned(), bound)
    }

    /// Union, exact up to the smaller bound.
    pub fn union(&self, other: &LangSet) -> LangSet {
        let bound = self.bound.min(other.bound);
        LangSet::new(self.words.iter().chain(&other.words).cloned(), bound)
    }

    /// Words sorted by length, then lexicographically.
    pub fn sorted(&self) -> Vec<&str> {
        let mut v: Vec<&str> = self.iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }
}

impl fmt::Display for LangSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.sorted().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(if w.is_empty() { "%e" } else { w })?;
        }
        write!(f, "}} up to {}", self.bound)
    }
}

fn fits(w: &str, bound: i64) -> bool {
    (w.len() as i64) <= bound
}

type Buckets = Vec<BTreeSet<String>>;

fn concat_buckets(a: &Buckets, b: &Buckets, max: usize) -> Buckets {
    let mut out = vec![BTreeSet::new(); max + 1];
    for (i, xs) in a.iter().enumerate() {
        for (j, ys) in b.iter().enumerate().take(max + 1 - i) {
            for x in xs {
                for y in ys {
                    out[i + j].insert(format!("{x}{y}"));
                }
            }
        }
    }
    out
}

fn regex_buckets(f: &Regex, max: usize) -> Buckets {
    let mut out = vec![BTreeSet::new(); max + 1];
    match f {
        Regex::Empty => {}
        Regex::Epsilon => {
            out[0].insert(String::new());
        }
        Regex::Sym(s) => {
            if max >= 1 {
                out[1].insert(s.to_string());
            }
        }
        Regex::Sum(a, b) => {
            let (a, b) = (regex_buckets(a, max), regex_buckets(b, max));
            for (i, (x, y)) in a.into_iter().zip(b).enumerate() {
                out[i] = x.into_iter().chain(y).collect();
            }
        }
        Regex::Concat(a, b) => out = concat_buckets(&regex_buckets(a, max), &regex_buckets(b, max), max),
        Regex::Star(a) => {
            let inner = regex_buckets(a, max);
            out[0].insert(String::new());
            for len in 1..=max {
                let mut here = BTreeSet::new();
                for first in 1..=len {
                    for x in &inner[first] {
                        for y in &out[len - first] {
                            here.insert(format!("{x}{y}"));
                        }
                    }
                }
                out[len] = here;
            }
        }
    }
    out
}

/// All words of `L(f)` of length at most `max_len`.
pub fn enum_regex(f: &Regex, max_len: usize) -> Result<LangSet> {
    check_cap(max_len)?;
    let words = regex_buckets(f, max_len).into_iter().flatten().collect();
    Ok(LangSet { words, bound: max_len as i64 })
}

/// Which completion [`complete`] computes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompletionMode {
    /// `αβγH(β) ↦ αβγH(β)H(α)`.
    Right,
    /// `βγH(β)H(α) ↦ αβγH(β)H(α)`.
    Left,
    /// Keep `βγH(β)` with `|β| = k`.
    Prime,
    /// Right completion of the source set united with the left completion of
    /// the given second set.
    Pair(LangSet),
}

fn ends_with_image(h: &AntiMorphism, w: &str, beta: &str) -> Result<bool> {
    Ok(w.ends_with(&h.apply(beta)?))
}

fn right_completion(l: &LangSet, h: &AntiMorphism, k: usize) -> Result<LangSet> {
    let mut out = BTreeSet::new();
    for u in &l.words {
        for a in 0..=u.len() {
            // u = α·β·δ with δ = γ·H(β); |δ| ≥ k keeps β and H(β) apart.
            if a + 2 * k > u.len() {
                break;
            }
            let (alpha, rest) = u.split_at(a);
            let (beta, delta) = rest.split_at(k);
            if ends_with_image(h, delta, beta)? {
                let w = format!("{u}{}", h.apply(alpha)?);
                if fits(&w, l.bound) {
                    out.insert(w);
                }
            }
        }
    }
    Ok(LangSet { words: out, bound: l.bound })
}

/// All `α` with `H(α) = s`.
fn preimages(h: &AntiMorphism, s: &str) -> Result<Vec<String>> {
    // H(α) reverses α, so the last symbol of s constrains the first of α.
    let mut acc = vec![String::new()];
    for c in s.chars().rev() {
        let target = Symbol::new(c)?;
        let pre: Vec<Symbol> = h.preimages(target).collect();
        let mut next = Vec::with_capacity(acc.len() * pre.len());
        for prefix in &acc {
            for p in &pre {
                next.push(format!("{prefix}{p}"));
            }
        }
        acc = next;
    }
    Ok(acc)
}

fn is_prime(h: &AntiMorphism, v: &str, k: usize) -> Result<bool> {
    if v.len() < 2 * k {
        return Ok(false);
    }
    ends_with_image(h, v, &v[..k])
}

fn left_completion(l: &LangSet, h: &AntiMorphism, k: usize) -> Result<LangSet> {
    let mut out = BTreeSet::new();
    for u in &l.words {
        for a in 0..=u.len() {
            if a + 2 * k > u.len() || u.len() + a > l.bound.max(0) as usize {
                break;
            }
            // u = v·H(α) with v = βγH(β).
            let (v, s) = u.split_at(u.len() - a);
            if !is_prime(h, v, k)? {
                continue;
            }
            for alpha in preimages(h, s)? {
                out.insert(format!("{alpha}{u}"));
            }
        }
    }
    Ok(LangSet { words: out, bound: l.bound })
}

/// Hairpin completion of a bounded language, by the set definitions.
///
/// A completion never shortens a word, so the result is exact up to
/// `l.bound`; longer outputs are discarded.
pub fn complete(l: &LangSet, h: &AntiMorphism, k: u32, mode: &CompletionMode) -> Result<LangSet> {
    let k = k as usize;
    match mode {
        CompletionMode::Right => right_completion(l, h, k),
        CompletionMode::Left => left_completion(l, h, k),
        CompletionMode::Prime => {
            if k == 0 {
                return Err(Error::PrimeIndexZero);
            }
            let mut out = BTreeSet::new();
            for u in &l.words {
                if is_prime(h, u, k)? {
                    out.insert(u.clone());
                }
            }
            Ok(LangSet { words: out, bound: l.bound })
        }
        CompletionMode::Pair(l2) => Ok(right_completion(l, h, k)?.union(&left_completion(l2, h, k)?)),
    }
}

/// Two-sided residual `(u, v)⁻¹(l) = {w : u·w·v ∈ l}`.
pub fn residual(l: &LangSet, u: &str, v: &str) -> LangSet {
    let bound = (l.bound - u.len() as i64 - v.len() as i64).max(-1);
    let words = l
        .words
        .iter()
        .filter(|w| w.len() >= u.len() + v.len() && w.starts_with(u) && w.ends_with(v))
        .map(|w| w[u.len()..w.len() - v.len()].to_string())
        .collect();
    LangSet { words, bound }
}

/// All words of `L(e)` of length at most `max_len`.
pub fn hairpin_enum(e: &HairpinExpr, max_len: usize) -> Result<LangSet> {
    check_cap(max_len)?;
    match e {
        HairpinExpr::Reg(f) => enum_regex(f, max_len),
        HairpinExpr::Op { kind, k, h, inner } => {
            let l = enum_regex(inner, max_len)?;
            let mode = match kind {
                HairpinKind::Right => CompletionMode::Right,
                HairpinKind::Left => CompletionMode::Left,
                HairpinKind::Prime => CompletionMode::Prime,
            };
            complete(&l, h, *k, &mode)
        }
        HairpinExpr::Sum(a, b) => Ok(hairpin_enum(a, max_len)?.union(&hairpin_enum(b, max_len)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, Registry};

    fn registry() -> Registry {
        Registry::from_inline("a:a,b:c,c:b").unwrap()
    }

    fn ex(text: &str) -> HairpinExpr {
        parse(text, &registry()).unwrap()
    }

    fn h() -> AntiMorphism {
        AntiMorphism::parse_inline("H", "a:a,b:c,c:b").unwrap()
    }

    fn words(l: &LangSet) -> Vec<&str> {
        l.iter().collect()
    }

    #[test]
    fn regex_examples() {
        let l = enum_regex(ex("a*bc").as_regex().unwrap(), 4).unwrap();
        assert_eq!(words(&l), ["aabc", "abc", "bc"]);
        let l = enum_regex(ex("(a+b)*").as_regex().unwrap(), 1).unwrap();
        assert_eq!(words(&l), ["", "a", "b"]);
        assert!(enum_regex(&Regex::Empty, 8).unwrap().is_empty());
        assert_eq!(
            enum_regex(&Regex::Empty, 17),
            Err(Error::CapExceeded { requested: 17, cap: 16 })
        );
    }

    #[test]
    fn star_of_nullable() {
        let l = enum_regex(ex("(a+%e)*b").as_regex().unwrap(), 3).unwrap();
        assert_eq!(words(&l), ["aab", "ab", "b"]);
    }

    #[test]
    fn completion_examples() {
        let l = LangSet::new(["bc", "abc"], 8);
        let r = complete(&l, &h(), 1, &CompletionMode::Right).unwrap();
        assert_eq!(words(&r), ["abca", "bc"]);
        let p = complete(&l, &h(), 1, &CompletionMode::Prime).unwrap();
        assert_eq!(words(&p), ["bc"]);
        let l = LangSet::new(["bca"], 8);
        let left = complete(&l, &h(), 1, &CompletionMode::Left).unwrap();
        assert_eq!(words(&left), ["abca"]);
        let l = LangSet::new(["abc"], 8);
        let r = complete(&l, &h(), 0, &CompletionMode::Right).unwrap();
        assert_eq!(words(&r), ["abc", "abca", "abcbca", "abcca"]);
        let r = complete(&l.restrict(5), &h(), 0, &CompletionMode::Right).unwrap();
        assert_eq!(words(&r), ["abc", "abca", "abcca"]);
        assert_eq!(complete(&l, &h(), 0, &CompletionMode::Prime), Err(Error::PrimeIndexZero));
    }

    #[test]
    fn left_completion_with_non_injective_map() {
        let h = AntiMorphism::parse_inline("G", "a:b,b:b").unwrap();
        let l = LangSet::new(["ab"], 4);
        let left = complete(&l, &h, 0, &CompletionMode::Left).unwrap();
        // u = v·G(α): "ab" = "a"·"b" gives α ∈ {a, b}; "ab" = ""·"ab" has no preimage.
        assert_eq!(words(&left), ["aab", "ab", "bab"]);
    }

    #[test]
    fn residual_examples() {
        let l = hairpin_enum(&ex("Hr[1,H](a*bc)"), 8).unwrap();
        let r = residual(&l, "a", "a");
        assert_eq!(words(&r), ["aabcaa", "abca", "bc"]);
        assert_eq!(r.bound, 6);
        assert_eq!(residual(&l, "", ""), l);
        let r = residual(&LangSet::new(["ab"], 2), "a", "b");
        assert_eq!(words(&r), [""]);
        assert_eq!(residual(&LangSet::new(["ab"], 2), "ab", "b").bound, -1);
    }

    #[test]
    fn hairpin_examples() {
        let l = hairpin_enum(&ex("Hr[1,H](a*bc)"), 6).unwrap();
        assert_eq!(words(&l), ["aabcaa", "abca", "bc"]);
        let l = hairpin_enum(&ex("Hr[0,H](a*bc)"), 4).unwrap();
        assert_eq!(l.sorted(), ["bc", "abc", "bcc", "aabc", "abca", "bcbc"]);
        let l = hairpin_enum(&ex("Hp[1,H](a*bc)"), 6).unwrap();
        assert_eq!(words(&l), ["bc"]);
    }

    #[test]
    fn display_sorts_by_length() {
        let l = LangSet::new(["ab", "", "b"], 3);
        assert_eq!(l.to_string(), "{%e, b, ab} up to 3");
    }
}
