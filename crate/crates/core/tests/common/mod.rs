//! Corpus and seeded generators shared by the integration tests.
#![allow(dead_code)]

use hairpin::couple_nfa::CoupleNfa;
use hairpin::expr::{parse, Alphabet, CoupleSymbol, HairpinExpr, Regex, Registry, Symbol};
use hairpin::grammar::{LinearGrammar, Production};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Involution on {a,b,c}.
pub const H_ABC: &str = "a:a,b:c,c:b";
/// Involution on {a,b}.
pub const H_SWAP: &str = "a:b,b:a";
/// Cyclic permutation of {a,b,c}; not an involution.
pub const H_CYCLE: &str = "a:b,b:c,c:a";
/// Not injective on {a,b}.
pub const H_COLLAPSE: &str = "a:a,b:a";
/// Not injective on {a,b,c}.
pub const H_SINK: &str = "a:c,b:b,c:c";

/// (map, expression) pairs: every operator kind, k from 1 to 3, sums, and
/// both involutive and non-involutive maps.
pub const HAIRPIN_CORPUS: &[(&str, &str)] = &[
    (H_ABC, "Hr[1,H](a*bc)"),
    (H_ABC, "Hl[1,H](bca*)"),
    (H_ABC, "Hp[1,H](a*bc)"),
    (H_ABC, "Hr[2,H](a*bc)"),
    (H_ABC, "Hr[1,H]((a+b)*c)"),
    (H_ABC, "Hl[2,H](b(a+c)*c)"),
    (H_ABC, "Hp[2,H](ba*c*)"),
    (H_ABC, "Hr[1,H](a*b)+Hl[1,H](ca*)"),
    (H_ABC, "Hr[3,H]((a+b+c)*)"),
    (H_ABC, "Hp[3,H]((ab+c)*)"),
    (H_ABC, "Hl[1,H](a*)+b"),
    (H_ABC, "Hr[1,H](%e+a)"),
    (H_ABC, "Hl[2,H]((a+%e)(b+c)*)"),
    (H_SWAP, "Hr[1,H](a*b)"),
    (H_SWAP, "Hl[1,H](ab*)"),
    (H_SWAP, "Hp[1,H]((a+b)*)"),
    (H_SWAP, "Hr[2,H]((ab)*)"),
    (H_SWAP, "Hr[1,H](a)+Hp[1,H](ab)"),
    (H_SWAP, "Hl[3,H]((a+b)*b)"),
    (H_SWAP, "Hp[1,H](ab*a)"),
    (H_CYCLE, "Hr[1,H](a*b)"),
    (H_CYCLE, "Hl[1,H](b*c)"),
    (H_CYCLE, "Hp[1,H]((a+b+c)*)"),
    (H_CYCLE, "Hr[2,H](ab*c)"),
    (H_CYCLE, "Hr[1,H](a+bc)+Hl[1,H](ca)"),
    (H_CYCLE, "Hp[2,H](a*bc*)"),
    (H_COLLAPSE, "Hr[1,H](ab*)"),
    (H_COLLAPSE, "Hl[1,H](b*a)"),
    (H_COLLAPSE, "Hp[1,H]((a+b)*)"),
    (H_COLLAPSE, "Hr[2,H](a*b*)"),
    (H_SINK, "Hr[1,H](a*bc)"),
    (H_SINK, "Hl[2,H]((a+b)*c)"),
    (H_SINK, "Hp[1,H](a(b+c)*)"),
    (H_SINK, "Hr[1,H](c*)+Hl[1,H](a*)+Hp[2,H](ac)"),
];

/// k = 0 completions, for the effective automaton.
pub const ZERO_CORPUS: &[(&str, &str)] = &[
    (H_ABC, "Hr[0,H](a*bc)"),
    (H_ABC, "Hl[0,H](bca*)"),
    (H_ABC, "Hr[0,H]((a+b)*c)"),
    (H_SWAP, "Hr[0,H](ab*)"),
    (H_SWAP, "Hl[0,H]((a+b)*b)"),
    (H_CYCLE, "Hr[0,H](a+bc)"),
    (H_CYCLE, "Hl[0,H](a*bc*)"),
    (H_COLLAPSE, "Hl[0,H](ab*)"),
    (H_COLLAPSE, "Hr[0,H](a*b)"),
    (H_SINK, "Hl[0,H](c(a+b)*)"),
    (H_ABC, "Hr[0,H](%e)"),
    (H_ABC, "Hl[0,H](%0)"),
];

pub struct Entry {
    pub registry: Registry,
    pub expr: HairpinExpr,
}

pub fn load(map: &str, text: &str) -> Entry {
    let registry = Registry::from_inline(map).unwrap();
    let expr = parse(text, &registry).unwrap_or_else(|e| panic!("{text}: {e}"));
    Entry { registry, expr }
}

pub fn hairpin_corpus() -> Vec<Entry> {
    HAIRPIN_CORPUS.iter().map(|(m, t)| load(m, t)).collect()
}

pub fn zero_corpus() -> Vec<Entry> {
    ZERO_CORPUS.iter().map(|(m, t)| load(m, t)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn alphabet(chars: &str) -> Alphabet {
    Alphabet::from_chars(chars).unwrap()
}

fn pick(rng: &mut ChaCha8Rng, gamma: &Alphabet) -> Symbol {
    gamma.symbols()[rng.gen_range(0..gamma.len())]
}

/// Random regex of width exactly `width`. Stars, `ε` and `∅` leaves all occur.
pub fn random_regex_of_width(rng: &mut ChaCha8Rng, gamma: &Alphabet, width: usize) -> Regex {
    gen(rng, gamma, width, false)
}

fn gen(rng: &mut ChaCha8Rng, gamma: &Alphabet, width: usize, under_star: bool) -> Regex {
    if width == 0 {
        return if rng.gen_bool(0.75) { Regex::Epsilon } else { Regex::Empty };
    }
    if !under_star && rng.gen_bool(0.2) {
        return Regex::star(gen(rng, gamma, width, true));
    }
    if width == 1 {
        return match rng.gen_range(0..10) {
            0 => Regex::cat(gen(rng, gamma, 0, false), Regex::Sym(pick(rng, gamma))),
            1 => Regex::sum(Regex::Sym(pick(rng, gamma)), gen(rng, gamma, 0, false)),
            _ => Regex::Sym(pick(rng, gamma)),
        };
    }
    let left = rng.gen_range(1..width);
    let (a, b) = (gen(rng, gamma, left, false), gen(rng, gamma, width - left, false));
    if rng.gen_bool(0.5) {
        Regex::sum(a, b)
    } else {
        Regex::cat(a, b)
    }
}

/// Random regex of width 1 to `max_width`.
pub fn random_regex(rng: &mut ChaCha8Rng, gamma: &Alphabet, max_width: usize) -> Regex {
    let w = rng.gen_range(1..=max_width);
    random_regex_of_width(rng, gamma, w)
}

fn random_couple(rng: &mut ChaCha8Rng, gamma: &Alphabet) -> CoupleSymbol {
    let couples = gamma.couples();
    couples[rng.gen_range(0..couples.len())]
}

/// Random couple NFA with 1 to `max_states` states and up to
/// `max_transitions` transitions.
pub fn random_nfa(rng: &mut ChaCha8Rng, gamma: &Alphabet, max_states: usize, max_transitions: usize) -> CoupleNfa {
    let mut a = CoupleNfa::new(gamma.clone());
    let n = rng.gen_range(1..=max_states);
    for i in 0..n {
        let q = a.add_state(format!("q{i}"), "").unwrap();
        if i == 0 || rng.gen_bool(0.2) {
            a.set_initial(q).unwrap();
        }
        if rng.gen_bool(0.4) {
            a.set_final(q).unwrap();
        }
    }
    for _ in 0..rng.gen_range(0..=max_transitions) {
        let (s, d) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let c = random_couple(rng, gamma);
        a.add_transition(s, c, d).unwrap();
    }
    a
}

/// Random linear grammar: up to 4 nonterminals and 8 productions, the
/// production kind ((x,y), (x,~), (~,y) or ε) chosen uniformly.
pub fn random_grammar(rng: &mut ChaCha8Rng, gamma: &Alphabet) -> LinearGrammar {
    let mut g = LinearGrammar::new(gamma.clone(), "S").unwrap();
    let n = rng.gen_range(1..=4);
    let names: Vec<String> = std::iter::once("S".to_string()).chain((1..n).map(|i| format!("N{i}"))).collect();
    for name in &names[1..] {
        g.add_nonterminal(name.clone()).unwrap();
    }
    for _ in 0..rng.gen_range(1..=8) {
        let lhs = names[rng.gen_range(0..n)].clone();
        let rhs = names[rng.gen_range(0..n)].clone();
        let x = pick(rng, gamma);
        let y = pick(rng, gamma);
        let p = match rng.gen_range(0..4) {
            0 => Production::Linear { lhs, couple: CoupleSymbol::both(x, y), rhs },
            1 => Production::Linear { lhs, couple: CoupleSymbol::left_only(x), rhs },
            2 => Production::Linear { lhs, couple: CoupleSymbol::right_only(y), rhs },
            _ => Production::Epsilon { lhs },
        };
        g.add_production(p).unwrap();
    }
    for name in &names[1..] {
        if rng.gen_bool(0.25) {
            g.add_axiom_link(name.clone()).unwrap();
        }
    }
    g
}

/// One-state automaton for `{aⁿbⁿ}`.
pub fn anbn() -> CoupleNfa {
    CoupleNfa::from_text("alphabet ab\nstate 1 initial final\ntrans 1 a b 1\n").unwrap()
}
