//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when `member` answers false or
//! `verify-bounds` finds a violation, 2 on usage and input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::construction::{effective_automaton, two_sided_dta};
use crate::couple_nfa::CoupleNfa;
use crate::derivation::{bounds, derived_terms, phi, two_sided_pd, Side};
use crate::error::Error;
use crate::expr::{parse, Alphabet, AntiMorphism, CoupleSymbol, HairpinExpr, Mode, Regex, Registry};
use crate::grammar::{grammar_to_nfa, nfa_to_grammar, LinearGrammar};
use crate::oracle::hairpin_enum;

#[derive(Debug, Parser)]
#[command(name = "hairpin", version, about = "Derivatives and automata for hairpin completions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the syntax tree and size measures of an expression.
    Parse(ExprArgs),
    /// Print the derivative by one couple, or the derived terms.
    Derive {
        #[command(flatten)]
        expr: ExprArgs,
        /// Couple such as "(a,b)" or "(a,~)". Without it, print the derived terms.
        #[arg(long)]
        couple: Option<String>,
        /// Which derived terms to print when no couple is given.
        #[arg(long, value_enum, default_value_t = SideArg::TwoSided)]
        side: SideArg,
    },
    /// Build the two-sided derived term automaton.
    Dta {
        #[command(flatten)]
        expr: ExprArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build the effective automaton of Hr[0,H](F) or Hl[0,H](F).
    Effective {
        #[command(flatten)]
        expr: ExprArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Decide whether a word belongs to the language; prints true or false.
    Member {
        #[command(flatten)]
        expr: ExprArgs,
        /// The word, as a bare string of symbols ("" for the empty word).
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Algo::Dp)]
        algo: Algo,
    },
    /// List the words up to a length, shortest first (the empty word is an empty line).
    Enum {
        #[command(flatten)]
        expr: ExprArgs,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        /// Enumerate from the set definitions instead of the automaton.
        #[arg(long)]
        oracle: bool,
    },
    /// Convert between couple NFAs and linear grammars.
    Grammar {
        /// Expression whose automaton is converted to a grammar.
        #[arg(long)]
        expr: Option<String>,
        #[arg(long)]
        map: Option<String>,
        #[arg(long)]
        map_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Reduce::On)]
        reduce: Reduce,
        /// Automaton in text form, converted to a grammar.
        #[arg(long, conflicts_with_all = ["expr", "grammar_file"])]
        nfa_file: Option<PathBuf>,
        /// Grammar in text form, converted to an automaton.
        #[arg(long, conflicts_with = "expr")]
        grammar_file: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare derived-term and state counts against their theoretical bounds.
    VerifyBounds(ExprArgs),
}

#[derive(Debug, Args)]
struct ExprArgs {
    #[arg(long)]
    expr: String,
    /// Anti-morphism named H, e.g. "a:a,b:c,c:b"; its domain is the alphabet.
    #[arg(long, conflicts_with = "map_file")]
    map: Option<String>,
    /// File with one "x -> y" line per symbol.
    #[arg(long)]
    map_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Reduce::On)]
    reduce: Reduce,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to a file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Dp,
    Naive,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Reduce {
    On,
    Off,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    TwoSided,
}

impl From<Reduce> for Mode {
    fn from(r: Reduce) -> Mode {
        match r {
            Reduce::On => Mode::Reduced,
            Reduce::Off => Mode::Raw,
        }
    }
}

enum Failure {
    Usage(String),
    False(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn registry(expr: &str, map: Option<&str>, map_file: Option<&PathBuf>) -> Result<(Registry, HairpinExpr), Failure> {
    let reg = match (map, map_file) {
        (Some(spec), _) => Registry::from_inline(spec)?,
        (None, Some(path)) => Registry::with_map(AntiMorphism::parse_file("H", &std::fs::read_to_string(path)?)?),
        (None, None) => {
            // No map: the alphabet is whatever the expression uses.
            let all: String = ('0'..='9').chain('A'..='Z').chain('a'..='z').collect();
            let open = Registry::new(Alphabet::from_chars(&all)?);
            let e = parse(expr, &open)?;
            Registry::new(e.alphabet())
        }
    };
    let e = parse(expr, &reg)?;
    Ok((reg, e))
}

fn load(args: &ExprArgs) -> Result<(Registry, HairpinExpr), Failure> {
    registry(&args.expr, args.map.as_deref(), args.map_file.as_ref())
}

/// The automaton used by `member` and `enum`.
fn automaton(e: &HairpinExpr, gamma: &Alphabet, mode: Mode) -> Result<CoupleNfa, Failure> {
    if e.min_operator_index() == Some(0) {
        return effective_automaton(e, gamma, mode).map_err(|_| {
            Failure::Usage("k = 0 operators are only supported as the whole expression Hr[0,_](F) or Hl[0,_](F)".into())
        });
    }
    Ok(two_sided_dta(e, gamma, mode)?)
}

fn render(a: &CoupleNfa, output: &OutputArgs) -> String {
    match output.format {
        Format::Text => a.to_text(),
        Format::Dot => a.to_dot(),
    }
}

fn tree(e: &HairpinExpr, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match e {
        HairpinExpr::Reg(r) => regex_tree(r, depth, out),
        HairpinExpr::Op { kind, k, h, inner } => {
            writeln!(out, "{pad}{kind:?} k={k} map={}", h.name()).unwrap();
            regex_tree(inner, depth + 1, out);
        }
        HairpinExpr::Sum(a, b) => {
            writeln!(out, "{pad}Sum").unwrap();
            tree(a, depth + 1, out);
            tree(b, depth + 1, out);
        }
    }
}

fn regex_tree(r: &Regex, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match r {
        Regex::Empty => writeln!(out, "{pad}Empty").unwrap(),
        Regex::Epsilon => writeln!(out, "{pad}Epsilon").unwrap(),
        Regex::Sym(s) => writeln!(out, "{pad}Sym {s}").unwrap(),
        Regex::Sum(a, b) | Regex::Concat(a, b) => {
            let name = if matches!(r, Regex::Sum(..)) { "Sum" } else { "Concat" };
            writeln!(out, "{pad}{name}").unwrap();
            regex_tree(a, depth + 1, out);
            regex_tree(b, depth + 1, out);
        }
        Regex::Star(a) => {
            writeln!(out, "{pad}Star").unwrap();
            regex_tree(a, depth + 1, out);
        }
    }
}

fn check_line(out: &mut String, what: &str, actual: usize, bound: u64, violations: &mut usize) {
    let ok = actual as u64 <= bound;
    if !ok {
        *violations += 1;
    }
    writeln!(out, "{what}: {actual} <= {bound} {}", if ok { "ok" } else { "VIOLATED" }).unwrap();
}

fn verify_bounds(e: &HairpinExpr, gamma: &Alphabet) -> Result<(String, usize), Failure> {
    let mode = Mode::Raw;
    let b = bounds(e);
    let m = e.metrics();
    let mut out = String::new();
    let mut violations = 0;
    writeln!(out, "expr: {e}\nmetrics: {m}").unwrap();
    let regexes: Vec<&Regex> = match e {
        HairpinExpr::Reg(r) => vec![r],
        _ => Vec::new(),
    };
    for r in regexes {
        let source = HairpinExpr::Reg(r.clone());
        let left = derived_terms(&source, Side::Left, gamma, mode)?.len();
        let right = derived_terms(&source, Side::Right, gamma, mode)?.len();
        check_line(&mut out, "left derived terms", left, b.left_bound, &mut violations);
        check_line(&mut out, "right derived terms", right, b.right_bound, &mut violations);
    }
    if e.min_operator_index() == Some(0) {
        let a = effective_automaton(e, gamma, mode).map_err(|_| {
            Failure::Usage("k = 0 operators are only supported as the whole expression Hr[0,_](F) or Hl[0,_](F)".into())
        })?;
        check_line(&mut out, "effective automaton states", a.num_states(), 2 * m.width as u64 + 1, &mut violations);
    } else {
        let d = derived_terms(e, Side::TwoSided, gamma, mode)?.len();
        check_line(&mut out, "two-sided derived terms", d, b.two_sided_bound, &mut violations);
        let a = two_sided_dta(e, gamma, mode)?;
        check_line(&mut out, "automaton states", a.num_states(), b.state_bound, &mut violations);
        writeln!(out, "recurrence phi(m) = {}", phi(m.m as u64)).unwrap();
    }
    Ok((out, violations))
}

fn write_out(text: &str, path: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Parse(args) => {
            let (reg, e) = load(&args)?;
            let e = e.canonicalize(args.reduce.into());
            let mut out = String::new();
            writeln!(out, "expr: {e}").unwrap();
            tree(&e, 1, &mut out);
            writeln!(out, "metrics: {}", e.metrics()).unwrap();
            writeln!(out, "nullable: {}", e.nullable()).unwrap();
            writeln!(out, "alphabet: {}", reg.alphabet()).unwrap();
            write_out(&out, None, stdout)
        }
        Command::Derive { expr, couple, side } => {
            let (reg, e) = load(&expr)?;
            let mode = expr.reduce.into();
            let mut out = String::new();
            match couple {
                Some(c) => {
                    let c = CoupleSymbol::parse(&c)?;
                    for s in [c.left(), c.right()].into_iter().flatten() {
                        if !reg.alphabet().contains(s) {
                            return Err(Error::SymbolOutsideAlphabet(s.as_char()).into());
                        }
                    }
                    for t in two_sided_pd(&e, c, mode)? {
                        writeln!(out, "{t}").unwrap();
                    }
                }
                None => {
                    let side = match side {
                        SideArg::Left => Side::Left,
                        SideArg::Right => Side::Right,
                        SideArg::TwoSided => Side::TwoSided,
                    };
                    for t in derived_terms(&e, side, reg.alphabet(), mode)?.discovery {
                        writeln!(out, "{t}").unwrap();
                    }
                }
            }
            write_out(&out, None, stdout)
        }
        Command::Dta { expr, output } => {
            let (reg, e) = load(&expr)?;
            let a = two_sided_dta(&e, reg.alphabet(), expr.reduce.into())?;
            write_out(&render(&a, &output), output.out.as_ref(), stdout)
        }
        Command::Effective { expr, output } => {
            let (reg, e) = load(&expr)?;
            let a = effective_automaton(&e, reg.alphabet(), expr.reduce.into())?;
            write_out(&render(&a, &output), output.out.as_ref(), stdout)
        }
        Command::Member { expr, word, algo } => {
            let (reg, e) = load(&expr)?;
            reg.alphabet().check_word(&word)?;
            let a = automaton(&e, reg.alphabet(), expr.reduce.into())?;
            let yes = match algo {
                Algo::Dp => a.membership_dp(&word),
                Algo::Naive => a.membership_test(&word),
            };
            if yes {
                write_out("true\n", None, stdout)
            } else {
                Err(Failure::False("false\n".into()))
            }
        }
        Command::Enum { expr, max_len, oracle } => {
            let (reg, e) = load(&expr)?;
            let l = if oracle {
                hairpin_enum(&e, max_len)?
            } else {
                automaton(&e, reg.alphabet(), expr.reduce.into())?.enumerate_gamma_language(max_len)?
            };
            let mut out = String::new();
            for w in l.sorted() {
                writeln!(out, "{w}").unwrap();
            }
            write_out(&out, None, stdout)
        }
        Command::Grammar { expr, map, map_file, reduce, nfa_file, grammar_file, output } => {
            let text = match (expr, nfa_file, grammar_file) {
                (Some(x), None, None) => {
                    let (reg, e) = registry(&x, map.as_deref(), map_file.as_ref())?;
                    let a = automaton(&e, reg.alphabet(), reduce.into())?;
                    nfa_to_grammar(&a).to_text()
                }
                (None, Some(p), None) => nfa_to_grammar(&CoupleNfa::from_text(&std::fs::read_to_string(p)?)?).to_text(),
                (None, None, Some(p)) => {
                    let a = grammar_to_nfa(&LinearGrammar::from_text(&std::fs::read_to_string(p)?)?);
                    render(&a, &output)
                }
                _ => return Err(Failure::Usage("give exactly one of --expr, --nfa-file, --grammar-file".into())),
            };
            write_out(&text, output.out.as_ref(), stdout)
        }
        Command::VerifyBounds(args) => {
            let (reg, e) = load(&args)?;
            let (out, violations) = verify_bounds(&e, reg.alphabet())?;
            write_out(&out, None, stdout)?;
            if violations > 0 {
                return Err(Failure::False(format!("{violations} bound violation(s)\n")));
            }
            Ok(())
        }
    }
}

/// Runs the command line `argv` (program name first), writing results to
/// `stdout` and diagnostics to `stderr`. Returns the exit status.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(Failure::False(msg)) => {
            let _ = stdout.write_all(msg.as_bytes());
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
