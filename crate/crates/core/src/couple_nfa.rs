//! Automata over couple symbols.
//!
//! A couple NFA reads a word of couples `(x1,y1)(x2,y2)…(xn,yn)` and the Γ-word
//! it stands for is `x1 x2 … xn yn … y2 y1`: each transition consumes one
//! symbol from the front and one from the back. Such automata recognize
//! exactly the linear context-free languages.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::expr::{Alphabet, CoupleSymbol, Symbol};
use crate::oracle::{check_cap, LangSet};

/// A state with a unique identifier and a free-form display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct State {
    pub id: String,
    pub label: String,
}

/// `(source, couple, target)`, with states given by index.
pub type Transition = (usize, CoupleSymbol, usize);

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoupleNfa {
    alphabet: Alphabet,
    states: Vec<State>,
    index: BTreeMap<String, usize>,
    initial: BTreeSet<usize>,
    finals: BTreeSet<usize>,
    transitions: BTreeSet<Transition>,
}

/// `Im((x,y)·w) = x·Im(w)·y`.
pub fn im(w: &[CoupleSymbol]) -> String {
    let mut front = String::new();
    let mut back = String::new();
    for c in w {
        if let Some(x) = c.left() {
            front.push(x.as_char());
        }
        if let Some(y) = c.right() {
            back.push(y.as_char());
        }
    }
    front.extend(back.chars().rev());
    front
}

fn matches_at(w: &[u8], i: usize, s: Option<Symbol>) -> bool {
    match s {
        None => true,
        Some(s) => w.get(i) == Some(&(s.as_char() as u8)),
    }
}

impl CoupleNfa {
    pub fn new(alphabet: Alphabet) -> Self {
        CoupleNfa { alphabet, ..Default::default() }
    }

    /// Adds a state and returns its index.
    pub fn add_state(&mut self, id: impl Into<String>, label: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if id.is_empty() || id.chars().any(char::is_whitespace) {
            return Err(Error::Format { line: 0, msg: format!("invalid state id `{id}`") });
        }
        if self.index.contains_key(&id) {
            return Err(Error::DuplicateState(id));
        }
        let i = self.states.len();
        self.index.insert(id.clone(), i);
        self.states.push(State { id, label: label.into() });
        Ok(i)
    }

    fn check_index(&self, q: usize) -> Result<()> {
        if q < self.states.len() {
            Ok(())
        } else {
            Err(Error::UnknownState(q.to_string()))
        }
    }

    pub fn set_initial(&mut self, q: usize) -> Result<()> {
        self.check_index(q)?;
        self.initial.insert(q);
        Ok(())
    }

    pub fn set_final(&mut self, q: usize) -> Result<()> {
        self.check_index(q)?;
        self.finals.insert(q);
        Ok(())
    }

    pub fn add_transition(&mut self, src: usize, couple: CoupleSymbol, dst: usize) -> Result<()> {
        self.check_index(src)?;
        self.check_index(dst)?;
        for s in [couple.left(), couple.right()].into_iter().flatten() {
            if !self.alphabet.contains(s) {
                return Err(Error::SymbolOutsideAlphabet(s.as_char()));
            }
        }
        self.transitions.insert((src, couple, dst));
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    fn lookup(&self, id: &str) -> Result<usize> {
        self.state_index(id).ok_or_else(|| Error::UnknownState(id.to_string()))
    }

    /// Index of the state whose label is `label`, if any.
    pub fn state_by_label(&self, label: &str) -> Option<usize> {
        self.states.iter().position(|s| s.label == label)
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn finals(&self) -> &BTreeSet<usize> {
        &self.finals
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    /// Transitions leaving `q`.
    pub fn out(&self, q: usize) -> impl Iterator<Item = &Transition> {
        self.transitions.range((q, CoupleSymbol::MIN, 0)..).take_while(move |t| t.0 == q)
    }

    /// Whether `w` belongs to the Γ-right language of state `q`, by plain
    /// recursion over every split `w = α·w'·β` allowed by an outgoing
    /// transition `(α, β)`. Exponential in the worst case.
    pub fn is_in_right_language(&self, w: &str, q: &str) -> Result<bool> {
        let q = self.lookup(q)?;
        Ok(self.naive(w.as_bytes(), q))
    }

    fn naive(&self, w: &[u8], q: usize) -> bool {
        if w.is_empty() && self.finals.contains(&q) {
            return true;
        }
        self.out(q).any(|&(_, c, q2)| {
            let (l, r) = (c.left().is_some() as usize, c.right().is_some() as usize);
            w.len() >= l + r
                && matches_at(w, 0, c.left())
                && (r == 0 || matches_at(w, w.len() - 1, c.right()))
                && self.naive(&w[l..w.len() - r], q2)
        })
    }

    /// Whether `w` belongs to the Γ-language, by [`Self::is_in_right_language`]
    /// from every initial state.
    pub fn membership_test(&self, w: &str) -> bool {
        self.initial.iter().any(|&q| self.naive(w.as_bytes(), q))
    }

    /// Same answer as [`Self::membership_test`], computed bottom-up over the
    /// intervals of `w` in `O(|Q|·|w|²·|δ|)` time.
    pub fn membership_dp(&self, w: &str) -> bool {
        let w = w.as_bytes();
        let n = w.len();
        let nq = self.states.len();
        // accept[(i * (n + 1) + j) * nq + q]: w[i..j] is in the right language of q.
        let mut accept = vec![false; (n + 1) * (n + 1) * nq];
        let at = |i: usize, j: usize, q: usize| (i * (n + 1) + j) * nq + q;
        for len in 0..=n {
            for i in 0..=n - len {
                let j = i + len;
                for q in 0..nq {
                    let mut ok = len == 0 && self.finals.contains(&q);
                    if !ok {
                        ok = self.out(q).any(|&(_, c, q2)| {
                            let (l, r) = (c.left().is_some() as usize, c.right().is_some() as usize);
                            len >= l + r
                                && matches_at(w, i, c.left())
                                && (r == 0 || matches_at(w, j - 1, c.right()))
                                && accept[at(i + l, j - r, q2)]
                        });
                    }
                    accept[at(i, j, q)] = ok;
                }
            }
        }
        self.initial.iter().any(|&q| accept[at(0, n, q)])
    }

    /// `R[q][ℓ]`: the words of length `ℓ` in the Γ-right language of `q`.
    fn right_languages(&self, max_len: usize) -> Vec<Vec<BTreeSet<String>>> {
        let nq = self.states.len();
        let mut r = vec![vec![BTreeSet::new(); max_len + 1]; nq];
        for &q in &self.finals {
            r[q][0].insert(String::new());
        }
        for len in 1..=max_len {
            for q in 0..nq {
                let mut here = BTreeSet::new();
                for &(_, c, q2) in self.out(q) {
                    let weight = c.weight();
                    if weight > len {
                        continue;
                    }
                    let x = c.left().map(|s| s.to_string()).unwrap_or_default();
                    let y = c.right().map(|s| s.to_string()).unwrap_or_default();
                    for w in &r[q2][len - weight] {
                        here.insert(format!("{x}{w}{y}"));
                    }
                }
                r[q][len] = here;
            }
        }
        r
    }

    /// The Γ-right language of state `q`, up to `max_len`.
    pub fn enumerate_right_language(&self, q: &str, max_len: usize) -> Result<LangSet> {
        check_cap(max_len)?;
        let q = self.lookup(q)?;
        let words = self.right_languages(max_len).swap_remove(q).into_iter().flatten();
        Ok(LangSet::new(words, max_len as i64))
    }

    /// The Γ-language up to `max_len`, built length by length from the right
    /// languages of the states.
    pub fn enumerate_gamma_language(&self, max_len: usize) -> Result<LangSet> {
        check_cap(max_len)?;
        let r = self.right_languages(max_len);
        let words = self.initial.iter().flat_map(|&q| r[q].iter().flatten().cloned());
        Ok(LangSet::new(words, max_len as i64))
    }

    /// Line-oriented text form, read back by [`Self::from_text`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let symbols: String = self.alphabet.symbols().iter().map(|s| s.as_char()).collect();
        writeln!(out, "alphabet {symbols}").unwrap();
        for (i, s) in self.states.iter().enumerate() {
            out.push_str("state ");
            out.push_str(&s.id);
            if self.initial.contains(&i) {
                out.push_str(" initial");
            }
            if self.finals.contains(&i) {
                out.push_str(" final");
            }
            if !s.label.is_empty() {
                out.push_str(" label=");
                out.push_str(&escape_label(&s.label));
            }
            out.push('\n');
        }
        for &(src, c, dst) in &self.transitions {
            let side = |s: Option<Symbol>| s.map_or('~', Symbol::as_char);
            writeln!(
                out,
                "trans {} {} {} {}",
                self.states[src].id,
                side(c.left()),
                side(c.right()),
                self.states[dst].id
            )
            .unwrap();
        }
        out
    }

    /// Parses the format written by [`Self::to_text`]. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn from_text(text: &str) -> Result<CoupleNfa> {
        let mut nfa: Option<CoupleNfa> = None;
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| Error::Format { line, msg };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (head, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest = rest.trim_start();
            match (head, nfa.as_mut()) {
                ("alphabet", None) => {
                    let alphabet = Alphabet::from_chars(rest.trim()).map_err(|e| err(e.to_string()))?;
                    nfa = Some(CoupleNfa::new(alphabet));
                }
                ("alphabet", Some(_)) => return Err(err("duplicate alphabet line".into())),
                (_, None) => return Err(err("expected `alphabet` first".into())),
                ("state", Some(a)) => {
                    let (flags, label) = match rest.find("label=") {
                        Some(p) => (&rest[..p], unescape_label(&rest[p + 6..])),
                        None => (rest, String::new()),
                    };
                    let mut words = flags.split_whitespace();
                    let id = words.next().ok_or_else(|| err("missing state id".into()))?;
                    let q = a.add_state(id, label).map_err(|e| match e {
                        Error::Format { msg, .. } => err(msg),
                        other => other,
                    })?;
                    for flag in words {
                        match flag {
                            "initial" => a.set_initial(q)?,
                            "final" => a.set_final(q)?,
                            other => return Err(err(format!("unknown state flag `{other}`"))),
                        }
                    }
                }
                ("trans", Some(a)) => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    let [src, x, y, dst] = parts[..] else {
                        return Err(err("expected `trans <src> <x> <y> <dst>`".into()));
                    };
                    let side = |t: &str| -> Result<Option<Symbol>> {
                        match t {
                            "~" => Ok(None),
                            _ if t.chars().count() == 1 => Symbol::new(t.chars().next().unwrap()).map(Some),
                            _ => Err(err(format!("bad couple component `{t}`"))),
                        }
                    };
                    let c = CoupleSymbol::new(side(x)?, side(y)?)?;
                    let (s, d) = (a.lookup(src)?, a.lookup(dst)?);
                    a.add_transition(s, c, d)?;
                }
                (other, Some(_)) => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        nfa.ok_or(Error::Format { line: 0, msg: "missing `alphabet` line".into() })
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph couple_nfa {\n  rankdir=LR;\n");
        for (i, s) in self.states.iter().enumerate() {
            let shape = if self.finals.contains(&i) { "doublecircle" } else { "circle" };
            let label = if s.label.is_empty() { &s.id } else { &s.label };
            writeln!(out, "  \"{}\" [shape={shape}, label=\"{}\"];", dot_escape(&s.id), dot_escape(label))
                .unwrap();
        }
        for &q in &self.initial {
            let id = dot_escape(&self.states[q].id);
            writeln!(out, "  \"__start_{id}\" [shape=point];\n  \"__start_{id}\" -> \"{id}\";").unwrap();
        }
        for &(src, c, dst) in &self.transitions {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{c}\"];",
                dot_escape(&self.states[src].id),
                dot_escape(&self.states[dst].id)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape_label(s: &str) -> String {
    s.replace('\\', "\\\\").replace('\n', "\\n")
}

fn unescape_label(s: &str) -> String {
    let mut out = String::new();
    let mut chars = s.chars();
    while let Some(c) = chars.next() {
        if c == '\\' {
            match chars.next() {
                Some('n') => out.push('\n'),
                Some(d) => out.push(d),
                None => out.push('\\'),
            }
        } else {
            out.push(c);
        }
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: char) -> Symbol {
        Symbol::new(c).unwrap()
    }

    fn anbn() -> CoupleNfa {
        CoupleNfa::from_text("alphabet ab\nstate 1 initial final\ntrans 1 a b 1\n").unwrap()
    }

    #[test]
    fn im_examples() {
        let ab = CoupleSymbol::both(s('a'), s('b'));
        assert_eq!(im(&[]), "");
        assert_eq!(im(&[ab]), "ab");
        assert_eq!(im(&[ab, ab]), "aabb");
        assert_eq!(im(&[CoupleSymbol::left_only(s('a')), CoupleSymbol::right_only(s('b'))]), "ab");
    }

    #[test]
    fn anbn_membership() {
        let a = anbn();
        assert!(a.is_in_right_language("ab", "1").unwrap());
        assert!(!a.is_in_right_language("a", "1").unwrap());
        assert_eq!(a.is_in_right_language("a", "2"), Err(Error::UnknownState("2".into())));
        for w in ["", "ab", "aabb"] {
            assert!(a.membership_test(w) && a.membership_dp(w), "{w}");
        }
        for w in ["a", "ba", "abab", "aab", "c"] {
            assert!(!a.membership_test(w) && !a.membership_dp(w), "{w}");
        }
        let long = format!("{}{}", "a".repeat(20), "b".repeat(20));
        assert!(a.membership_dp(&long));
    }

    #[test]
    fn anbn_enumeration() {
        let l = anbn().enumerate_gamma_language(4).unwrap();
        assert_eq!(l.sorted(), ["", "ab", "aabb"]);
        assert!(anbn().enumerate_gamma_language(17).is_err());
    }

    #[test]
    fn one_sided_cycles() {
        // (a,~) loop then (~,b) loop: a* b*.
        let text = "alphabet ab\nstate p initial final\nstate q final\ntrans p a ~ p\ntrans p ~ b q\ntrans q ~ b q\n";
        let a = CoupleNfa::from_text(text).unwrap();
        let l = a.enumerate_gamma_language(2).unwrap();
        assert_eq!(l.sorted(), ["", "a", "b", "aa", "ab", "bb"]);
        assert!(a.membership_test("aabbb") && a.membership_dp("aabbb"));
        assert!(!a.membership_dp("ba"));
    }

    #[test]
    fn text_round_trip() {
        let a = anbn();
        assert!(a.to_text().lines().any(|l| l == "trans 1 a b 1"));
        assert_eq!(CoupleNfa::from_text(&a.to_text()).unwrap(), a);
        let mut b = CoupleNfa::new(Alphabet::from_chars("abc").unwrap());
        let p = b.add_state("0", "Hr[1,H](a*bc)").unwrap();
        let q = b.add_state("1", "weird \\ label\nline").unwrap();
        b.set_initial(p).unwrap();
        b.set_final(q).unwrap();
        b.add_transition(p, CoupleSymbol::right_only(s('c')), q).unwrap();
        assert_eq!(CoupleNfa::from_text(&b.to_text()).unwrap(), b);
        let empty = CoupleNfa::new(Alphabet::from_chars("ab").unwrap());
        assert_eq!(empty.to_text(), "alphabet ab\n");
    }

    #[test]
    fn builder_and_format_errors() {
        let mut a = CoupleNfa::new(Alphabet::from_chars("ab").unwrap());
        let p = a.add_state("p", "").unwrap();
        assert_eq!(a.add_state("p", ""), Err(Error::DuplicateState("p".into())));
        assert_eq!(
            a.add_transition(p, CoupleSymbol::left_only(s('c')), p),
            Err(Error::SymbolOutsideAlphabet('c'))
        );
        assert!(matches!(CoupleNfa::from_text("state 1"), Err(Error::Format { line: 1, .. })));
        assert!(matches!(
            CoupleNfa::from_text("alphabet ab\nstate 1\ntrans 1 ~ ~ 1"),
            Err(Error::EmptyCouple)
        ));
        assert!(matches!(
            CoupleNfa::from_text("alphabet ab\ntrans 1 a b 1"),
            Err(Error::UnknownState(_))
        ));
    }

    #[test]
    fn dot_output() {
        let dot = anbn().to_dot();
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("[label=\"(a,b)\"]"));
        assert!(dot.contains("doublecircle"));
    }
}
