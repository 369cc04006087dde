//! Linear grammars and their conversions to and from couple NFAs.
//!
//! A linear production `A → x B y` is a transition `A –(x,y)→ B`, and `A → ε`
//! makes `A` final. The unit productions `S → B` produced from the initial
//! states are kept apart as axiom links, since they are not linear
//! productions themselves.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::couple_nfa::CoupleNfa;
use crate::error::{Error, Result};
use crate::expr::{Alphabet, CoupleSymbol, Symbol};
use crate::oracle::{check_cap, LangSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Production {
    /// `lhs → x rhs y`.
    Linear { lhs: String, couple: CoupleSymbol, rhs: String },
    /// `lhs → ε`.
    Epsilon { lhs: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearGrammar {
    terminals: Alphabet,
    nonterminals: Vec<String>,
    axiom: String,
    productions: BTreeSet<Production>,
    axiom_links: BTreeSet<String>,
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(Error::Format { line: 0, msg: format!("invalid nonterminal `{name}`") });
    }
    Ok(())
}

impl LinearGrammar {
    /// A grammar with only the axiom and no productions.
    pub fn new(terminals: Alphabet, axiom: impl Into<String>) -> Result<Self> {
        let axiom = axiom.into();
        check_name(&axiom)?;
        Ok(LinearGrammar {
            terminals,
            nonterminals: vec![axiom.clone()],
            axiom,
            productions: BTreeSet::new(),
            axiom_links: BTreeSet::new(),
        })
    }

    /// Declares a nonterminal; declaring one twice is a no-op.
    pub fn add_nonterminal(&mut self, name: impl Into<String>) -> Result<()> {
        let name = name.into();
        check_name(&name)?;
        if !self.nonterminals.contains(&name) {
            self.nonterminals.push(name);
        }
        Ok(())
    }

    fn declared(&self, name: &str) -> Result<()> {
        if self.nonterminals.iter().any(|n| n == name) {
            Ok(())
        } else {
            Err(Error::UnknownNonterminal(name.to_string()))
        }
    }

    pub fn add_production(&mut self, p: Production) -> Result<()> {
        match &p {
            Production::Linear { lhs, couple, rhs } => {
                self.declared(lhs)?;
                self.declared(rhs)?;
                for s in [couple.left(), couple.right()].into_iter().flatten() {
                    if !self.terminals.contains(s) {
                        return Err(Error::SymbolOutsideAlphabet(s.as_char()));
                    }
                }
            }
            Production::Epsilon { lhs } => self.declared(lhs)?,
        }
        self.productions.insert(p);
        Ok(())
    }

    /// Adds the unit production `axiom → b`.
    pub fn add_axiom_link(&mut self, b: impl Into<String>) -> Result<()> {
        let b = b.into();
        self.declared(&b)?;
        self.axiom_links.insert(b);
        Ok(())
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn axiom(&self) -> &str {
        &self.axiom
    }

    pub fn productions(&self) -> &BTreeSet<Production> {
        &self.productions
    }

    pub fn axiom_links(&self) -> &BTreeSet<String> {
        &self.axiom_links
    }

    /// Words derivable from the axiom, up to `max_len`.
    pub fn generate_upto(&self, max_len: usize) -> Result<LangSet> {
        check_cap(max_len)?;
        let idx = |n: &str| self.nonterminals.iter().position(|m| m == n).expect("declared");
        let nn = self.nonterminals.len();
        let mut r = vec![vec![BTreeSet::<String>::new(); max_len + 1]; nn];
        for p in &self.productions {
            if let Production::Epsilon { lhs } = p {
                r[idx(lhs)][0].insert(String::new());
            }
        }
        for len in 1..=max_len {
            for p in &self.productions {
                let Production::Linear { lhs, couple, rhs } = p else { continue };
                let weight = couple.weight();
                if weight > len {
                    continue;
                }
                let x = couple.left().map(|s| s.to_string()).unwrap_or_default();
                let y = couple.right().map(|s| s.to_string()).unwrap_or_default();
                let made: Vec<String> =
                    r[idx(rhs)][len - weight].iter().map(|w| format!("{x}{w}{y}")).collect();
                r[idx(lhs)][len].extend(made);
            }
        }
        let starts = std::iter::once(&self.axiom).chain(&self.axiom_links);
        let words = starts.flat_map(|n| r[idx(n)].iter().flatten().cloned()).collect::<Vec<_>>();
        Ok(LangSet::new(words, max_len as i64))
    }

    /// Text form, read back by [`Self::from_text`].
    pub fn to_text(&self) -> String {
        let symbols: String = self.terminals.symbols().iter().map(|s| s.as_char()).collect();
        let mut out = format!("terminals {symbols}\naxiom {}\n", self.axiom);
        if self.nonterminals.len() > 1 {
            writeln!(out, "nonterminals {}", self.nonterminals[1..].join(" ")).unwrap();
        }
        for b in &self.axiom_links {
            writeln!(out, "unit {} {b}", self.axiom).unwrap();
        }
        let side = |s: Option<Symbol>| s.map_or('~', Symbol::as_char);
        for p in &self.productions {
            match p {
                Production::Linear { lhs, couple, rhs } => {
                    writeln!(out, "prod {lhs} {} {rhs} {}", side(couple.left()), side(couple.right()))
                        .unwrap()
                }
                Production::Epsilon { lhs } => writeln!(out, "prod {lhs} ~").unwrap(),
            }
        }
        out
    }

    /// Parses `axiom`, `unit`, `prod`, and the optional `terminals` and
    /// `nonterminals` lines. Without a `terminals` line the terminals are the
    /// symbols used by the productions. Nonterminals are declared by use.
    pub fn from_text(text: &str) -> Result<LinearGrammar> {
        let mut terminals: Option<Alphabet> = None;
        let mut axiom: Option<String> = None;
        let mut extra: Vec<String> = Vec::new();
        let mut units: Vec<(usize, String)> = Vec::new();
        let mut prods: Vec<(usize, Production)> = Vec::new();
        let mut used = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let err = |msg: String| Error::Format { line, msg };
            let parts: Vec<&str> = raw.split_whitespace().collect();
            if parts.is_empty() || parts[0].starts_with('#') {
                continue;
            }
            match parts[..] {
                ["terminals"] => terminals = Some(Alphabet::default()),
                ["terminals", syms] => terminals = Some(Alphabet::from_chars(syms)?),
                ["axiom", s] => axiom = Some(s.to_string()),
                ["nonterminals", ..] => extra.extend(parts[1..].iter().map(|s| s.to_string())),
                ["unit", a, b] => {
                    if axiom.as_deref() != Some(a) {
                        return Err(err(format!("unit production must start at the axiom, not `{a}`")));
                    }
                    extra.push(b.to_string());
                    units.push((line, b.to_string()));
                }
                ["prod", a, "~"] => {
                    extra.push(a.to_string());
                    prods.push((line, Production::Epsilon { lhs: a.to_string() }));
                }
                ["prod", a, x, b, y] => {
                    let mut side = |t: &str| -> Result<Option<Symbol>> {
                        let mut cs = t.chars();
                        match (cs.next(), cs.next()) {
                            (Some('~'), None) => Ok(None),
                            (Some(c), None) => {
                                let s = Symbol::new(c)?;
                                used.push(s);
                                Ok(Some(s))
                            }
                            _ => Err(err(format!("bad terminal `{t}`"))),
                        }
                    };
                    let couple = CoupleSymbol::new(side(x)?, side(y)?)?;
                    extra.push(a.to_string());
                    extra.push(b.to_string());
                    prods.push((line, Production::Linear { lhs: a.to_string(), couple, rhs: b.to_string() }));
                }
                _ => return Err(err(format!("cannot parse `{}`", raw.trim()))),
            }
        }
        let axiom = axiom.ok_or(Error::Format { line: 0, msg: "missing `axiom` line".into() })?;
        let terminals = terminals.unwrap_or_else(|| Alphabet::new(used));
        let mut g = LinearGrammar::new(terminals, axiom)?;
        for nt in extra {
            g.add_nonterminal(nt)?;
        }
        for (line, b) in units {
            g.add_axiom_link(b).map_err(|e| Error::Format { line, msg: e.to_string() })?;
        }
        for (line, p) in prods {
            g.add_production(p).map_err(|e| Error::Format { line, msg: e.to_string() })?;
        }
        Ok(g)
    }
}

fn nonterminal_for(id: &str) -> String {
    format!("A_{id}")
}

/// Grammar with axiom `S`, one nonterminal `A_q` per state, `S → A_q` for
/// initial `q`, `A_q → ε` for final `q`, and `A_q → x A_q' y` per transition.
pub fn nfa_to_grammar(a: &CoupleNfa) -> LinearGrammar {
    let mut axiom = String::from("S");
    while a.states().iter().any(|s| nonterminal_for(&s.id) == axiom) {
        axiom.push('\'');
    }
    let mut g = LinearGrammar::new(a.alphabet().clone(), axiom).expect("valid axiom");
    for s in a.states() {
        g.add_nonterminal(nonterminal_for(&s.id)).expect("state ids have no whitespace");
    }
    let name = |q: usize| nonterminal_for(&a.states()[q].id);
    for &q in a.initial() {
        g.add_axiom_link(name(q)).expect("declared");
    }
    for &q in a.finals() {
        g.add_production(Production::Epsilon { lhs: name(q) }).expect("declared");
    }
    for &(src, couple, dst) in a.transitions() {
        g.add_production(Production::Linear { lhs: name(src), couple, rhs: name(dst) })
            .expect("declared, symbols checked by the automaton");
    }
    g
}

/// Couple NFA with one state per nonterminal. The initial states are the
/// axiom and every axiom link; `B → ε` makes `B` final.
pub fn grammar_to_nfa(g: &LinearGrammar) -> CoupleNfa {
    let mut a = CoupleNfa::new(g.terminals().clone());
    for nt in g.nonterminals() {
        a.add_state(nt.clone(), nt.clone()).expect("distinct names without whitespace");
    }
    let q = |n: &str| a.state_index(n).expect("declared");
    let initial: Vec<usize> = std::iter::once(g.axiom()).chain(g.axiom_links().iter().map(String::as_str)).map(q).collect();
    let mut finals = Vec::new();
    let mut edges = Vec::new();
    for p in g.productions() {
        match p {
            Production::Epsilon { lhs } => finals.push(q(lhs)),
            Production::Linear { lhs, couple, rhs } => edges.push((q(lhs), *couple, q(rhs))),
        }
    }
    for i in initial {
        a.set_initial(i).expect("declared");
    }
    for f in finals {
        a.set_final(f).expect("declared");
    }
    for (s, c, d) in edges {
        a.add_transition(s, c, d).expect("symbols checked by the grammar");
    }
    a
}
