use std::process::{Command, Output};

use akb::blocks::{BlockSummary, ComponentRecord};
use akb::cli::{AbacusOutput, CoreOutput, ResOutput, UglovOutput, VerifyOutput};

fn akb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akb")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses and re-serializes; the text must come back unchanged.
fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim_end());
    value
}

#[test]
fn res_reports_residue_data() {
    let o = akb(&["res", "--ell", "2", "--charge", "0", "--mp", "[[3]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"d\":[2,1],\"omega\":1,\"hub\":{\"lam\":[1,-2]},\"dim\":2,\"k\":1}\n");
    let r: ResOutput = round_trip(&stdout(&o));
    assert_eq!(r.dim, 2 * r.omega);
}

#[test]
fn uglov_of_the_worked_example() {
    let o = akb(&["uglov", "--ell", "4", "--charge", "0,1,2", "--mp", "[[],[],[2]]"]);
    assert_eq!(stdout(&o), "{\"partition\":[2,2],\"charge\":3}\n");
    let u: UglovOutput = round_trip(&stdout(&o));
    assert_eq!(u.charge, 3);
    // unsorted charges are sorted first
    let o = akb(&["uglov", "--ell", "4", "--charge", "2,0,1", "--mp", "[[2],[],[]]"]);
    assert_eq!(stdout(&o), "{\"partition\":[2,2],\"charge\":3}\n");
}

#[test]
fn uglov_with_explicit_lifts() {
    let o = akb(&["uglov", "--ell", "4", "--charge", "0,1,2", "--lift", "0,1,2", "--mp", "[[],[],[2]]"]);
    assert_eq!(stdout(&o), "{\"partition\":[2,2],\"charge\":3}\n");
    let o = akb(&["uglov", "--ell", "4", "--charge", "0,1,2", "--lift", "0,1,3", "--mp", "[[],[],[2]]"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn blocks_table_has_one_row_per_block() {
    let o = akb(&["blocks", "--ell", "2", "--r", "2", "--n", "2", "--charge", "0,0", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3, "{text}");
    assert!(lines[0].starts_with("d "));
    assert!(lines[1].starts_with("(1,1)") && lines[1].contains("((2)|∅) ((1,1)|∅) (∅|(2)) (∅|(1,1))"));
    assert!(lines[2].starts_with("(2,0)") && lines[2].contains("true"));
}

#[test]
fn blocks_json_round_trips() {
    let o = akb(&["blocks", "--ell", "3", "--n", "4", "--charge", "0,1"]);
    let blocks: Vec<BlockSummary> = round_trip(&stdout(&o));
    assert_eq!(blocks.iter().map(|b| b.members.len()).sum::<usize>(), 20);
}

#[test]
fn tables_truncate_long_member_lists() {
    let o = akb(&["blocks", "--ell", "2", "--n", "6", "--charge", "0,0", "--format", "table"]);
    let text = stdout(&o);
    assert!(text.contains("... (+"), "{text}");
    let json = akb(&["blocks", "--ell", "2", "--n", "6", "--charge", "0,0"]);
    let blocks: Vec<BlockSummary> = round_trip(&stdout(&json));
    assert!(blocks.iter().any(|b| b.members.len() > 20));
    assert!(!stdout(&json).contains("more"));
}

#[test]
fn components_json_round_trips() {
    let o = akb(&["components", "--ell", "2", "--n", "2", "--charge", "0,0"]);
    let comps: Vec<ComponentRecord> = round_trip(&stdout(&o));
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|c| c.dim % 2 == 0 && (0..=8).contains(&c.dim)));
}

#[test]
fn core_json_round_trips() {
    let o = akb(&["core", "--ell", "2", "--charge", "0", "--mp", "[[3]]"]);
    let c: CoreOutput = round_trip(&stdout(&o));
    assert_eq!(c.omega, 1);
    assert_eq!(c.core.to_json(), "[[1]]");
}

#[test]
fn abacus_renders_with_window_and_lifts() {
    let o = akb(&["abacus", "--ell", "2", "--charge", "0", "--mp", "[[1]]", "--window=-2,3", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().next(), Some("oo|.o.."));
    let o = akb(&["abacus", "--ell", "2", "--charge", "0", "--lift", "-2", "--mp", "[[1]]"]);
    let a: AbacusOutput = round_trip(&stdout(&o));
    assert_eq!(a.abacus.charges(), vec![-2]);
    assert_eq!(a.b, vec![vec![-4, -1]]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["res", "--ell", "2", "--mp", "not json"][..],
        &["res", "--ell", "0", "--mp", "[[1]]"],
        &["res", "--ell", "2", "--r", "2", "--charge", "0", "--mp", "[[1],[]]"],
        &["res", "--ell", "2", "--charge", "0,0", "--mp", "[[1]]"],
        &["blocks", "--ell", "2"],
        &["abacus", "--ell", "2", "--mp", "[[1]]", "--window", "3,1"],
        &["nope"],
    ] {
        let o = akb(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(stderr(&o).contains("akb"), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn help_exits_zero() {
    let o = akb(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn verify_passes_and_is_deterministic() {
    let a = akb(&["verify", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert!(stdout(&a).ends_with("all properties hold\n"));
    let b = Command::new(env!("CARGO_BIN_EXE_akb"))
        .args(["verify", "--seed", "7"])
        .env("AKB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_json_round_trips() {
    let o = akb(&["verify", "--n-max", "2", "--format", "json"]);
    let v: VerifyOutput = round_trip(&stdout(&o));
    assert!(v.all_hold);
}

#[test]
fn empty_grid_passes_vacuously() {
    let o = akb(&["verify", "--n-max", "0", "--level-one-n-max", "0"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn transposed_residues_break_the_core_charge_property() {
    let o = akb(&["verify", "--transposed-residues"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("core multicharge")).unwrap();
    assert!(line.starts_with("FAIL") && line.contains("counterexample: (("), "{line}");
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["blocks", "--ell", "3", "--n", "5", "--charge", "0,2,1"];
    assert_eq!(akb(&args).stdout, akb(&args).stdout);
}
