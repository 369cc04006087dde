//! Automata built from derived terms.
//!
//! States are expressions. In every automaton built here the state ids are
//! `0, 1, …` in breadth-first discovery order (the initial state is `0`) and
//! each label is the printed expression.

use crate::couple_nfa::CoupleNfa;
use crate::derivation::{derived_terms, left_pd, right_pd, two_sided_pd, Side};
use crate::error::{Error, Result};
use crate::expr::{Alphabet, CoupleSymbol, HairpinExpr, HairpinKind, Mode, Regex};

fn assemble<F>(alphabet: &Alphabet, states: &[HairpinExpr], mut delta: F) -> Result<CoupleNfa>
where
    F: FnMut(&HairpinExpr) -> Result<Vec<(CoupleSymbol, HairpinExpr)>>,
{
    let mut a = CoupleNfa::new(alphabet.clone());
    for (i, s) in states.iter().enumerate() {
        let q = a.add_state(i.to_string(), s.to_string())?;
        if s.nullable() {
            a.set_final(q)?;
        }
    }
    if !states.is_empty() {
        a.set_initial(0)?;
    }
    for (i, s) in states.iter().enumerate() {
        for (c, t) in delta(s)? {
            let j = states.iter().position(|u| *u == t).expect("targets are states");
            a.add_transition(i, c, j)?;
        }
    }
    Ok(a)
}

fn with_source(source: HairpinExpr, found: impl IntoIterator<Item = HairpinExpr>) -> Vec<HairpinExpr> {
    let mut states = vec![source];
    for t in found {
        if !states.contains(&t) {
            states.push(t);
        }
    }
    states
}

/// Antimirov's derived term automaton of `f`, with every transition labeled
/// `(a, ~)` so that its Γ-language is `L(f)`.
pub fn regex_dta(f: &Regex, alphabet: &Alphabet, mode: Mode) -> Result<CoupleNfa> {
    let source = HairpinExpr::Reg(f.canonicalize(mode));
    let d = derived_terms(&source, Side::Left, alphabet, mode)?;
    let states = with_source(source, d.discovery);
    assemble(alphabet, &states, |s| {
        let r = s.as_regex().expect("regular state");
        let mut out = Vec::new();
        for &a in alphabet.symbols() {
            for t in left_pd(r, a, mode) {
                out.push((CoupleSymbol::left_only(a), HairpinExpr::Reg(t)));
            }
        }
        Ok(out)
    })
}

/// The two-sided derived term automaton: states `{e} ∪ ↔D_e`, a transition
/// to every member of `∂/∂(x,y)` for every couple, finals the nullable states.
pub fn two_sided_dta(e: &HairpinExpr, alphabet: &Alphabet, mode: Mode) -> Result<CoupleNfa> {
    let d = derived_terms(e, Side::TwoSided, alphabet, mode)?;
    let states = with_source(d.source, d.discovery);
    let couples = alphabet.couples();
    assemble(alphabet, &states, |s| {
        let mut out = Vec::new();
        for &c in &couples {
            for t in two_sided_pd(s, c, mode)? {
                out.push((c, t));
            }
        }
        Ok(out)
    })
}

/// The automaton for `Hr[0,H](F)` or `Hl[0,H](F)` built from one-sided derived
/// terms of `F` only, with at most `2n + 1` states.
///
/// For `Hr`, a wrapped state `Hr[0,H](G)` reads `(x, H(x))` into the wrapped
/// left derivatives of `G` and `(x, ~)` into the bare ones, and a bare state
/// `G` only reads `(x, ~)`. `Hl` is the mirror image with right derivatives.
pub fn effective_automaton(e: &HairpinExpr, alphabet: &Alphabet, mode: Mode) -> Result<CoupleNfa> {
    let e = e.canonicalize(mode);
    let HairpinExpr::Op { kind, k: 0, h, inner } = &e else {
        return Err(Error::NotEffectiveShape);
    };
    let side = match kind {
        HairpinKind::Right => Side::Left,
        HairpinKind::Left => Side::Right,
        HairpinKind::Prime => return Err(Error::NotEffectiveShape),
    };
    let wrap = |g: Regex| HairpinExpr::Op { kind: *kind, k: 0, h: h.clone(), inner: g };
    let d = derived_terms(&HairpinExpr::Reg(inner.clone()), side, alphabet, mode)?;
    let bare: Vec<Regex> = d.discovery.iter().map(|t| t.as_regex().expect("regular").clone()).collect();
    let states = with_source(
        e.clone(),
        bare.iter().cloned().map(wrap).chain(bare.iter().cloned().map(HairpinExpr::Reg)),
    );
    let pd = |g: &Regex, s| if side == Side::Left { left_pd(g, s, mode) } else { right_pd(g, s, mode) };
    assemble(alphabet, &states, |s| {
        let mut out = Vec::new();
        for &a in alphabet.symbols() {
            match s {
                HairpinExpr::Op { inner: g, .. } => {
                    let d = pd(g, a);
                    // a is x for Hr and y for Hl.
                    let paired: Vec<CoupleSymbol> = match kind {
                        HairpinKind::Right => h.image(a).map(|y| CoupleSymbol::both(a, y)).into_iter().collect(),
                        _ => h.preimages(a).map(|x| CoupleSymbol::both(x, a)).collect(),
                    };
                    for c in paired {
                        out.extend(d.iter().map(|t| (c, wrap(t.clone()))));
                    }
                    out.extend(d.into_iter().map(|t| (one_sided(side, a), HairpinExpr::Reg(t))));
                }
                HairpinExpr::Reg(g) => {
                    out.extend(pd(g, a).into_iter().map(|t| (one_sided(side, a), HairpinExpr::Reg(t))));
                }
                HairpinExpr::Sum(..) => unreachable!("no sum states"),
            }
        }
        Ok(out)
    })
}

fn one_sided(side: Side, a: crate::expr::Symbol) -> CoupleSymbol {
    if side == Side::Left {
        CoupleSymbol::left_only(a)
    } else {
        CoupleSymbol::right_only(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse, Registry};
    use std::collections::BTreeSet;

    fn registry() -> Registry {
        Registry::from_inline("a:a,b:c,c:b").unwrap()
    }

    fn ex(text: &str) -> HairpinExpr {
        parse(text, &registry()).unwrap()
    }

    /// Transitions as (source label, couple, target label).
    fn edges(a: &CoupleNfa) -> BTreeSet<(String, String, String)> {
        let label = |q: usize| a.states()[q].label.clone();
        a.transitions().iter().map(|&(s, c, d)| (label(s), c.to_string(), label(d))).collect()
    }

    fn edge_set(list: &[(&str, &str, &str)]) -> BTreeSet<(String, String, String)> {
        list.iter().map(|&(s, c, d)| (s.into(), c.into(), d.into())).collect()
    }

    fn labels(a: &CoupleNfa, qs: &BTreeSet<usize>) -> BTreeSet<String> {
        qs.iter().map(|&q| a.states()[q].label.clone()).collect()
    }

    #[test]
    fn regex_dta_of_a_star_bc() {
        let g = registry().alphabet().clone();
        let a = regex_dta(ex("a*bc").as_regex().unwrap(), &g, Mode::Reduced).unwrap();
        assert_eq!(a.num_states(), 3);
        assert_eq!(
            edges(&a),
            edge_set(&[("a*bc", "(a,~)", "a*bc"), ("a*bc", "(b,~)", "c"), ("c", "(c,~)", "%e")])
        );
        assert_eq!(labels(&a, a.finals()), ["%e".to_string()].into());
        let empty = regex_dta(&Regex::Empty, &g, Mode::Reduced).unwrap();
        assert_eq!((empty.num_states(), empty.finals().len(), empty.transitions().len()), (1, 0, 0));
        let sum = regex_dta(ex("a+b").as_regex().unwrap(), &g, Mode::Reduced).unwrap();
        assert_eq!(sum.num_states(), 2);
        assert_eq!(sum.enumerate_gamma_language(1).unwrap().sorted(), ["a", "b"]);
    }

    #[test]
    fn two_sided_dta_of_hr1_example() {
        let g = registry().alphabet().clone();
        let a = two_sided_dta(&ex("Hr[1,H](a*bc)"), &g, Mode::Reduced).unwrap();
        assert_eq!(a.num_states(), 4);
        assert_eq!(labels(&a, a.initial()), ["Hr[1,H](a*bc)".to_string()].into());
        assert_eq!(labels(&a, a.finals()), ["%e".to_string()].into());
        assert_eq!(
            edges(&a),
            edge_set(&[
                ("Hr[1,H](a*bc)", "(a,a)", "Hr[1,H](a*bc)"),
                ("Hr[1,H](a*bc)", "(b,c)", "Hr[1,H](c)"),
                ("Hr[1,H](a*bc)", "(b,c)", "%e"),
                ("Hr[1,H](c)", "(c,b)", "Hr[1,H](%e)"),
            ])
        );
        assert_eq!(a.enumerate_gamma_language(6).unwrap().sorted(), ["bc", "abca", "aabcaa"]);
    }

    #[test]
    fn two_sided_dta_of_plain_regex() {
        let g = Alphabet::from_chars("ab").unwrap();
        let reg = Registry::new(g.clone());
        let e = parse("ab", &reg).unwrap();
        let a = two_sided_dta(&e, &g, Mode::Reduced).unwrap();
        assert_eq!(a.num_states(), 4);
        assert_eq!(
            edges(&a),
            edge_set(&[
                ("ab", "(a,~)", "b"),
                ("ab", "(~,b)", "a"),
                ("ab", "(a,b)", "%e"),
                ("b", "(b,~)", "%e"),
                ("b", "(~,b)", "%e"),
                ("a", "(a,~)", "%e"),
                ("a", "(~,a)", "%e"),
            ])
        );
        assert_eq!(a.enumerate_gamma_language(2).unwrap().sorted(), ["ab"]);
    }

    #[test]
    fn effective_automaton_of_hr0_example() {
        let g = registry().alphabet().clone();
        let a = effective_automaton(&ex("Hr[0,H](a*bc)"), &g, Mode::Reduced).unwrap();
        assert_eq!(a.num_states(), 6);
        assert_eq!(
            labels(&a, a.finals()),
            ["Hr[0,H](%e)".to_string(), "%e".to_string()].into()
        );
        assert_eq!(
            edges(&a),
            edge_set(&[
                ("Hr[0,H](a*bc)", "(a,a)", "Hr[0,H](a*bc)"),
                ("Hr[0,H](a*bc)", "(b,c)", "Hr[0,H](c)"),
                ("Hr[0,H](c)", "(c,b)", "Hr[0,H](%e)"),
                ("Hr[0,H](a*bc)", "(a,~)", "a*bc"),
                ("Hr[0,H](a*bc)", "(b,~)", "c"),
                ("a*bc", "(a,~)", "a*bc"),
                ("a*bc", "(b,~)", "c"),
                ("c", "(c,~)", "%e"),
                ("Hr[0,H](c)", "(c,~)", "%e"),
            ])
        );
        assert_eq!(
            a.enumerate_gamma_language(4).unwrap().sorted(),
            ["bc", "abc", "bcc", "aabc", "abca", "bcbc"]
        );
    }

    #[test]
    fn effective_shape_errors() {
        let g = registry().alphabet().clone();
        for text in ["Hr[1,H](a)", "a*", "Hr[0,H](a)+b", "Hp[1,H](a)"] {
            assert_eq!(effective_automaton(&ex(text), &g, Mode::Reduced), Err(Error::NotEffectiveShape));
        }
        assert_eq!(two_sided_dta(&ex("Hl[0,H](a)"), &g, Mode::Reduced), Err(Error::ZeroIndexOperator));
    }
}
