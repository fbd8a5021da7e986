use std::process::{Command, Output};

fn fatpoints(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoints")).args(args).env_remove("FATPOINTS_JOBS").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bound_worked_example() {
    let o = fatpoints(&["bound", "--n", "18", "--m", "2", "--d", "4", "--r", "17", "--which", "both"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "alpha>=9 tau<=9\n");
}

#[test]
fn bound_single_side_and_methods() {
    let o = fatpoints(&[
        "bound", "--n", "33", "--m", "29", "--d", "5", "--r", "29", "--method", "thm-b", "--which", "alpha",
    ]);
    assert_eq!(stdout(&o), "alpha>=165\n");
    let o =
        fatpoints(&["bound", "--n", "38", "--m", "16", "--d", "6", "--r", "37", "--method", "thm-b", "--which", "tau"]);
    assert_eq!(stdout(&o), "tau<=101\n");
    let o = fatpoints(&["bound", "--n", "119", "--m", "13", "--d", "10", "--r", "109", "--method", "thm-c"]);
    assert_eq!(stdout(&o), "alpha>=146\n");
}

#[test]
fn bound_trace_lists_steps() {
    let o = fatpoints(&["bound", "--n", "18", "--m", "2", "--d", "4", "--r", "17", "--which", "alpha", "--trace"]);
    let out = stdout(&o);
    assert!(out.starts_with("alpha>=9\nalpha certificate at t=8:\n"));
    assert!(out.contains("D_0 = 8L - (2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2,2), D_0.C=-2, v_0=34, rule=CurveH0-genus\n"));
    assert!(out.trim_end().ends_with("rule=Terminal-H0"));
}

#[test]
fn bound_nonuniform_sequence() {
    let o = fatpoints(&["bound", "--mvec", "3,3,2,2,2,1,1,1,1,1", "--d", "3", "--r", "6", "--which", "alpha"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).starts_with("alpha>="));
    let o = fatpoints(&["bound", "--n", "9", "--mvec", "1,1", "--d", "1", "--r", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn precondition_errors_exit_two() {
    let o = fatpoints(&["bound", "--n", "18", "--m", "2", "--d", "4", "--r", "99"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("r must satisfy 1<=r<=n"));
    let o = fatpoints(&["bound", "--n", "18", "--m", "2", "--d", "4", "--r", "3", "--method", "thm-a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("d(d+1)/2 <= r fails"));
}

#[test]
fn usage_errors_exit_sixty_four() {
    assert_eq!(fatpoints(&["bound", "--n", "18", "--bogus"]).status.code(), Some(64));
    assert_eq!(fatpoints(&["nonsense"]).status.code(), Some(64));
    assert_eq!(fatpoints(&["figure", "--k", "5"]).status.code(), Some(64));
    assert_eq!(fatpoints(&["search", "--n", "10", "--m", "1", "--trace", "--json"]).status.code(), Some(64));
    assert_eq!(fatpoints(&["--help"]).status.code(), Some(0));
}

#[test]
fn figure_three_first_line() {
    let o = fatpoints(&["figure", "--k", "3", "--topn", "220", "--topm", "220", "--format", "plt"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("\\plt 5 10 1  \n"));
}

#[test]
fn figure_formats() {
    let csv = stdout(&fatpoints(&["figure", "--k", "3", "--topn", "10", "--topm", "5", "--format", "csv"]));
    assert!(csv.starts_with("n,m\n10,1\n"));
    let json = stdout(&fatpoints(&["figure", "--k", "3", "--topn", "10", "--topm", "5", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v[0]["n"], 10);
}

#[test]
fn figure_output_is_deterministic_across_pool_sizes() {
    let a = fatpoints(&["figure", "--k", "1", "--jobs", "1"]);
    let b = Command::new(env!("CARGO_BIN_EXE_fatpoints"))
        .args(["figure", "--k", "1"])
        .env("FATPOINTS_JOBS", "3")
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_kinds() {
    let o = fatpoints(&["verify", "--n", "38", "--m", "16"]);
    assert!(stdout(&o).starts_with("hilbert function of (38;16) verified\n"));
    let o = fatpoints(&["verify", "--n", "38", "--m", "16", "--kind", "nagata"]);
    assert!(stdout(&o).starts_with("nagata bound for (38;16): holds\n"));
    let o = fatpoints(&["verify", "--n", "11", "--m", "2", "--kind", "resolution"]);
    assert_eq!(stdout(&o), "resolution of (11;2) determined by linear-b d=3 eps=1 sign=-\nalpha=7 a=3 b=3 c=0 d=5\n");
    let o = fatpoints(&["verify", "--n", "9", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_json() {
    let o = fatpoints(&["verify", "--n", "38", "--m", "16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["bounds"]["alpha"]["value"], 101);
}

#[test]
fn search_reports_witnesses() {
    let o = fatpoints(&["search", "--n", "33", "--m", "29", "--d-range", "4..5"]);
    assert_eq!(stdout(&o), "alpha>=168 (algorithm d=4 r=23)\ntau<=169 (algorithm d=4 r=23)\n");
    let o = fatpoints(&["search", "--n", "33", "--m", "29", "--d-range", "4..5", "--r-range", "30..40"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_values() {
    assert_eq!(stdout(&fatpoints(&["oracle", "--n", "18", "--m", "2"])), "alpha=9 tau=9 expected alpha=9 tau=9\n");
    assert_eq!(
        stdout(&fatpoints(&["oracle", "--n", "10", "--m", "2", "--t", "7", "--seed", "5"])),
        "h(7)=6 expected=6\n"
    );
    assert_eq!(fatpoints(&["oracle", "--n", "10", "--m", "2", "--prime", "91"]).status.code(), Some(2));
}

#[test]
fn compare_lists_published_constants() {
    let out = stdout(&fatpoints(&["compare", "--n", "190", "--m", "100"]));
    assert!(out.contains("tau_c          1384"));
    assert!(out.contains("tau<=          1390  thm-b d=13 r=180"));
    assert!(out.contains("1406  published"));
    let out = stdout(&fatpoints(&["compare", "--n", "1000", "--m", "13"]));
    assert!(out.contains("alpha>=         412  floor(m sqrt n) + 1"));
    assert!(out.contains("421  published"));
}
