//! Derivatives, two-sided automata and grammars for hairpin completions of
//! regular languages.

pub mod cli;
pub mod construction;
pub mod couple_nfa;
pub mod derivation;
pub mod error;
pub mod expr;
pub mod grammar;
pub mod oracle;

pub use error::{Error, Result};

// The guide's snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/expressions.md")]
    pub mod expressions {}
    #[doc = include_str!("../../../book/src/derivatives.md")]
    pub mod derivatives {}
    #[doc = include_str!("../../../book/src/automata.md")]
    pub mod automata {}
    #[doc = include_str!("../../../book/src/effective.md")]
    pub mod effective {}
    #[doc = include_str!("../../../book/src/grammars.md")]
    pub mod grammars {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    pub mod oracle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
