//! The `hairpin` binary, driven as a subprocess.

use std::process::{Command, Output};

use hairpin::couple_nfa::CoupleNfa;

const MAP: &str = "a:a,b:c,c:b";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hairpin")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn member_prints_true_and_false() {
    let yes = run(&["member", "--expr", "Hr[1,H](a*bc)", "--map", MAP, "--word", "abca"]);
    assert_eq!((yes.status.code(), stdout(&yes).trim()), (Some(0), "true"));
    let no = run(&["member", "--expr", "Hr[1,H](a*bc)", "--map", MAP, "--word", "abc", "--algo", "naive"]);
    assert_eq!((no.status.code(), stdout(&no).trim()), (Some(1), "false"));
}

#[test]
fn dta_text_has_four_states() {
    let o = run(&["dta", "--expr", "Hr[1,H](a*bc)", "--map", MAP, "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let a = CoupleNfa::from_text(&stdout(&o)).unwrap();
    assert_eq!(a.num_states(), 4);
    assert_eq!(a.transitions().len(), 4);
    assert_eq!(a.enumerate_gamma_language(6).unwrap().sorted(), ["bc", "abca", "aabcaa"]);
}

#[test]
fn dta_dot_and_out_file() {
    let dir = std::env::temp_dir().join(format!("hairpin-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a.dot");
    let o = run(&["dta", "--expr", "Hr[1,H](a*bc)", "--map", MAP, "--format", "dot", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("doublecircle"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enum_lists_the_short_completions() {
    let o = run(&["enum", "--expr", "Hr[0,H](a*bc)", "--map", MAP, "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["bc", "abc", "bcc", "aabc", "abca", "bcbc"]);
    let oracle = run(&["enum", "--expr", "Hr[0,H](a*bc)", "--map", MAP, "--max-len", "4", "--oracle"]);
    assert_eq!(stdout(&oracle), stdout(&o));
}

#[test]
fn member_agrees_with_enum() {
    for expr in ["Hr[1,H](a*bc)", "Hl[2,H](b(a+c)*c)", "Hp[1,H](a*bc)", "Hr[0,H](a*bc)"] {
        let listed = stdout(&run(&["enum", "--expr", expr, "--map", MAP, "--max-len", "5"]));
        let listed: Vec<&str> = listed.lines().collect();
        for w in ["", "bc", "abca", "abcca", "bcb", "cabcb", "aabca"] {
            let o = run(&["member", "--expr", expr, "--map", MAP, "--word", w]);
            assert_eq!(stdout(&o).trim() == "true", listed.contains(&w), "{expr} {w}");
        }
    }
}

#[test]
fn derive_prints_the_derivative() {
    let o = run(&["derive", "--expr", "Hr[1,H](a*bc)", "--map", MAP, "--couple", "(b,c)"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("Hr[1,H](c)") && out.contains("%e"), "{out}");
}

#[test]
fn effective_has_six_states() {
    let o = run(&["effective", "--expr", "Hr[0,H](a*bc)", "--map", MAP]);
    assert_eq!(CoupleNfa::from_text(&stdout(&o)).unwrap().num_states(), 6);
}

#[test]
fn grammar_conversions_run_both_ways() {
    let g = run(&["grammar", "--expr", "Hr[1,H](a*bc)", "--map", MAP]);
    assert_eq!(g.status.code(), Some(0));
    let dir = std::env::temp_dir().join(format!("hairpin-grammar-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g.txt");
    std::fs::write(&path, g.stdout).unwrap();
    let a = run(&["grammar", "--grammar-file", path.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    let a = CoupleNfa::from_text(&stdout(&a)).unwrap();
    assert_eq!(a.enumerate_gamma_language(6).unwrap().sorted(), ["bc", "abca", "aabcaa"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_bounds_reports_and_fails_honestly() {
    let ok = run(&["verify-bounds", "--expr", "Hr[1,H](a*bc)", "--map", MAP]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(!stdout(&ok).contains("VIOLATED"));
    let bad = run(&["verify-bounds", "--expr", "%ea", "--map", "a:b,b:a"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("VIOLATED"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["member", "--expr", "Hr[1,H](a*bc", "--map", MAP, "--word", "a"][..],
        &["member", "--expr", "a", "--map", "a:z", "--word", "a"],
        &["enum", "--expr", "a*", "--max-len", "99"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["dta", "--expr", "Hr[2,H](a*bc)+Hl[1,H](bca*)", "--map", MAP, "--format", "dot"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
