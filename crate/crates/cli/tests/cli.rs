use std::process::{Command, Output};

fn fpcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpcoh"))
        .args(args)
        .env_remove("FPCOH_MAX_REDUCTIONS")
        .env_remove("FPCOH_MAX_BASIS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn check_q1_flags_the_hypothesis() {
    let o = fpcoh(&["check-q1", "--p", "2", "--n", "3", "--gens", "x1,x2*x3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["outcome"], "hypothesis_violated");
    assert_eq!(v["sum_deg"], 3);
}

#[test]
fn check_q1_reports_witness() {
    let o = fpcoh(&["check-q1", "--p", "2", "--n", "2", "--gens", "x1^2, x1*x2"]);
    let v = json(&o);
    assert_eq!(v["property_holds"], false);
    assert_eq!(v["witness"][0], "x1");
}

#[test]
fn frobdecomp_example() {
    let o = fpcoh(&["frobdecomp", "--p", "2", "--l", "1", "--n", "1", "--poly", "x1^3"]);
    assert_eq!(stdout(&o).trim(), "(1): x1");
}

#[test]
fn algebra_subcommands() {
    let gb = fpcoh(&["gb", "--p", "5", "--n", "2", "--gens", "x1^2 - x2, x1*x2"]);
    assert_eq!(gb.status.code(), Some(0));
    assert!(stdout(&gb).contains("x2^2"));
    let nf = fpcoh(&["nf", "--p", "5", "--n", "2", "--gens", "x1 - 1", "--poly", "x1^3 + x2"]);
    assert_eq!(stdout(&nf).trim(), "x2 + 1");
    let sat = fpcoh(&["saturate", "--p", "2", "--n", "2", "--gens", "x1^2, x1*x2"]);
    assert_eq!(stdout(&sat).trim(), "x1");
    let frob = fpcoh(&["frobpow", "--p", "3", "--n", "2", "--gens", "x1, x2^2", "--l", "1"]);
    assert_eq!(stdout(&frob).trim(), "x1^3, x2^6");
    let k = fpcoh(&["koszul", "--p", "3", "--n", "2", "--gens", "x1, x2"]);
    assert!(stdout(&k).contains("d∘d = 0: true"));
    let h = fpcoh(&["cohomology", "--p", "2", "--n", "3", "--gens", "x1, x2", "--i", "1"]);
    assert!(stdout(&h).contains("zero: true"));
    let res = fpcoh(&["resolve", "--p", "2", "--n", "3", "--gens", "x1, x2, x3"]);
    assert!(stdout(&res).contains("ranks: 1 <- 3 <- 3 <- 1"));
    let pd = fpcoh(&["pd", "--p", "3", "--n", "3", "--gens", "x1, x2"]);
    assert_eq!(stdout(&pd), "pd: 2\ndepth: 1\n");
    let td = fpcoh(&["td-check", "--p", "3", "--n", "2", "--h", "x1^2 + x2", "--g", "x1*x2", "--l", "1"]);
    assert_eq!(stdout(&td).trim(), "true");
}

#[test]
fn certificates() {
    let top = fpcoh(&["check-topvan", "--p", "2", "--n", "2", "--gens", "x1^2, x1*x2"]);
    let v = json(&top);
    assert_eq!(v["outcome"], "pass");
    assert_eq!(v["level"], 1);
    let pv = fpcoh(&["check-propvan", "--p", "2", "--n", "3", "--gens", "x1, x2", "--i", "2"]);
    assert_eq!(json(&pv)["outcome"], "pass");
    let shifted = fpcoh(&["check-q1", "--p", "3", "--n", "2", "--gens", "x1 - 1", "--point", "1,2"]);
    assert_eq!(json(&shifted)["outcome"], "pass");
}

#[test]
fn usage_errors_exit_two() {
    let bad_prime = fpcoh(&["gb", "--p", "4", "--n", "2", "--gens", "x1"]);
    assert_eq!(bad_prime.status.code(), Some(2));
    let bad_poly = fpcoh(&["gb", "--p", "3", "--n", "2", "--gens", "x3"]);
    assert_eq!(bad_poly.status.code(), Some(2));
    let nonhom = fpcoh(&["pd", "--p", "3", "--n", "2", "--gens", "x1 + 1"]);
    assert_eq!(nonhom.status.code(), Some(2));
    let order = fpcoh(&["gb", "--p", "3", "--n", "2", "--gens", "x1", "--order", "revlex"]);
    assert_eq!(order.status.code(), Some(2));
}

#[test]
fn reduction_ceiling_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fpcoh"))
        .args(["check-q1", "--p", "7", "--n", "3", "--gens", "x1 + x2 + x3, x1*x2 + x2*x3 + x3*x1, x1*x2*x3 - 1"])
        .env("FPCOH_MAX_REDUCTIONS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["outcome"], "resource_limit");
}

#[test]
fn campaign_report_schema_and_reproducibility() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |out: &str| {
        vec![
            "campaign".to_string(),
            "--p".into(),
            "3".into(),
            "--n".into(),
            "4".into(),
            "--degrees".into(),
            "1,2".into(),
            "--trials".into(),
            "100".into(),
            "--seed".into(),
            "7".into(),
            "--out".into(),
            out.into(),
        ]
    };
    let run = |extra: &[&str], out: &std::path::Path| {
        let mut v = args(out.to_str().unwrap());
        v.extend(extra.iter().map(|s| s.to_string()));
        let refs: Vec<&str> = v.iter().map(String::as_str).collect();
        fpcoh(&refs)
    };
    assert_eq!(run(&["--workers", "4"], &a).status.code(), Some(0));
    assert_eq!(run(&["--workers", "1"], &b).status.code(), Some(0));
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let v: serde_json::Value = serde_json::from_slice(&ta).unwrap();
    assert_eq!(v["trials"].as_array().unwrap().len(), 100);
    assert_eq!(v["summary"]["pass"], 100);
    let t0 = &v["trials"][0];
    for key in ["index", "seed", "p", "n", "gens", "outcome", "q1", "pd_bound"] {
        assert!(t0.get(key).is_some(), "missing {key}");
    }
    assert!(t0.get("millis").is_none());
    let timed = dir.path().join("t.json");
    run(&["--timing"], &timed);
    let t: serde_json::Value = serde_json::from_slice(&std::fs::read(&timed).unwrap()).unwrap();
    assert!(t["trials"][0]["millis"].is_u64());
}
