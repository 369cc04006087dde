use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown anti-morphism `{0}`")]
    UnknownAntiMorphism(String),

    #[error("Hp requires k >= 1")]
    PrimeIndexZero,

    #[error("hairpin operator applied to a non-regular subexpression at position {0}")]
    NestedHairpin(usize),

    #[error("symbol `{0}` is not in the alphabet")]
    SymbolOutsideAlphabet(char),

    #[error("invalid symbol `{0}`: symbols are ASCII letters or digits")]
    InvalidSymbol(char),

    #[error("invalid anti-morphism map: {0}")]
    InvalidMap(String),

    #[error("two-sided derivation is undefined for k = 0 hairpin operators")]
    ZeroIndexOperator,

    #[error("expected a plain regular expression")]
    NotRegular,

    #[error("effective automaton requires Hr[0,_](F) or Hl[0,_](F) with F regular")]
    NotEffectiveShape,

    #[error("length bound {requested} exceeds the cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("(~,~) is not a couple symbol")]
    EmptyCouple,

    #[error("unknown state `{0}`")]
    UnknownState(String),

    #[error("duplicate state `{0}`")]
    DuplicateState(String),

    #[error("unknown nonterminal `{0}`")]
    UnknownNonterminal(String),

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
