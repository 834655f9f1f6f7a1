use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monocurve")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(run(&["analyze", "6,7,9,10"]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "12,15,20,23"]).status.code(), Some(1));
    let bad = run(&["analyze", "2,4"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("gcd"));
    assert_eq!(run(&["analyze", "5,3"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "3,4,20000"]).status.code(), Some(2));
}

#[test]
fn analyze_json_schema() {
    let o = run(&["analyze", "4,13,19", "--gb", "--apery"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["sequence"], serde_json::json!([4, 13, 19]));
    assert_eq!(v["verdict"], false);
    assert_eq!(v["agree"], true);
    assert_eq!(v["witness"], "x^5*z");
    assert_eq!(v["mu_ini"], 4);
    assert_eq!(v["criteria"].as_object().unwrap().len(), 10);
    assert_eq!(v["bases"]["a"]["gb"]["elements"].as_array().unwrap().len(), 4);
    assert_eq!(v["bases"]["a"]["gb"]["elements"][0]["lead"], "y^5");
    assert_eq!(v["bases"]["last_var"]["std_monomials_count"], 19);
    assert_eq!(v["apery"].as_array().unwrap().len(), 19);
}

#[test]
fn apery_tsv_has_one_row_per_residue() {
    let o = run(&["apery", "3,4,5", "--format", "tsv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "residue\tnu\tmu\tphi\tdual_deg\tin_dual_apery");
    assert_eq!(lines.len(), 6);
}

#[test]
fn family_prop31_sizes() {
    let o = run(&["family", "prop31", "--h-range", "2..6"]);
    assert!(o.status.success());
    let sizes: Vec<u64> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["gb_size"].as_u64().unwrap())
        .collect();
    assert_eq!(sizes, [4, 5, 6, 7, 8]);
}

#[test]
fn family_shifted_reports_invalid_shifts() {
    let o = run(&["family", "shifted", "--base", "4,13,19", "--h-range", "1..3"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[1]["error"].is_string());
    assert!(lines[0]["report"].is_object());
}

#[test]
fn gb_all_sections() {
    let o = run(&["gb", "4,13,19", "--all", "--format", "text"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("# ")).count(), 4);
    assert!(text.contains("y^5 - x^2*z^3"));
}

#[test]
fn sweep_summary_and_seed() {
    let args = ["sweep", "--n", "3", "--an-max", "30", "--count", "25", "--seed", "4"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["instances"], 25);
    assert_eq!(last["summary"]["inconsistencies"], 0);
    let other = run(&["sweep", "--n", "3", "--an-max", "30", "--count", "25", "--seed", "5"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn exhaustive_sweep_counts_triples() {
    let o = run(&["sweep", "--n", "3", "--an-max", "12", "--exhaustive", "--format", "text"]);
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("summary\tinstances="));
    assert!(last.contains("inconsistencies=0"));
}
