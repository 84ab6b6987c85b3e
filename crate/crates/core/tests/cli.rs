use eulerzeta::cli::{self, coverage, run_suite, Suite, VerifyConfig, ALL_OPS};

fn run_to_string(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.txt");
    let mut argv = vec!["eulerzeta"];
    argv.extend_from_slice(args);
    argv.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let code = cli::run(argv);
    let text = std::fs::read_to_string(&path).unwrap_or_default();
    (code, text)
}

#[test]
fn bernoulli_json_ends_with_b12() {
    let (code, text) = run_to_string(&["numbers", "--kind", "bernoulli", "--max", "12", "--format", "json"]);
    assert_eq!(code, 0);
    let values: Vec<String> = serde_json::from_str(&text).unwrap();
    assert_eq!(values.len(), 13);
    assert_eq!(values.last().unwrap(), "-691/2730");
    assert_eq!(values[1], "-1/2");
}

#[test]
fn euler_zeta_table() {
    let (code, text) = run_to_string(&["zeta", "--euler-even", "2", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(text.contains("-7/360 * pi^4"), "{text}");
}

#[test]
fn other_listings() {
    let (_, text) = run_to_string(&["numbers", "--kind", "euler2", "--max", "6", "--format", "tsv"]);
    assert_eq!(text.lines().last().unwrap(), "6\t-61");
    let (_, text) = run_to_string(&["numbers", "--kind", "euler1", "--max", "3", "--format", "json"]);
    assert_eq!(serde_json::from_str::<Vec<String>>(&text).unwrap(), ["1", "-1/2", "0", "1/4"]);
    let (_, text) = run_to_string(&["polys", "--n", "1", "--x", "7/3", "--format", "tsv"]);
    assert_eq!(text.lines().last().unwrap(), "1\t7/3\t11/6");
    let (_, text) = run_to_string(&["zeta", "--beta-odd", "0", "--format", "tsv"]);
    assert!(text.contains("1/4 * pi^1"));
    let (_, text) = run_to_string(&["zeta", "--neg", "1"]);
    assert!(text.contains("-1/12"));
    let (code, text) = run_to_string(&["eval", "--fn", "zeta", "--s", "2", "--bits", "64", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert!(v["value"].as_str().unwrap().starts_with("1.644934066848"));
    let (_, text) = run_to_string(&["eval", "--fn", "hurwitz", "--s", "2", "--a", "1", "--bits", "64"]);
    assert!(text.contains("1.644934066848"));
    let (_, text) = run_to_string(&["padic", "--p", "3", "--depth", "2", "--moment", "1", "--measure", "fermionic", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["sum"], "4 mod 3^2");
    assert_eq!(v["valuation"], ">=2");
    let (code, text) = run_to_string(&["q", "--q", "1/2", "--m", "2", "--bits", "64"]);
    assert_eq!(code, 0);
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn usage_and_domain_errors_exit_2() {
    assert_eq!(cli::run(["eulerzeta", "zeta", "--even", "0"]), 2);
    assert_eq!(cli::run(["eulerzeta", "zeta"]), 2);
    assert_eq!(cli::run(["eulerzeta", "zeta", "--even", "2", "--neg", "3"]), 2);
    assert_eq!(cli::run(["eulerzeta", "numbers", "--kind", "fibonacci", "--max", "3"]), 2);
    assert_eq!(cli::run(["eulerzeta", "polys", "--n", "3", "--x", "1/0"]), 2);
    assert_eq!(cli::run(["eulerzeta", "eval", "--fn", "zeta", "--s", "1", "--bits", "64"]), 2);
    assert_eq!(cli::run(["eulerzeta", "eval", "--fn", "hurwitz", "--s", "2", "--bits", "64"]), 2);
    assert_eq!(cli::run(["eulerzeta", "padic", "--p", "2", "--depth", "2", "--moment", "1", "--measure", "fermionic"]), 2);
    assert_eq!(cli::run(["eulerzeta", "verify", "--p", "4"]), 2);
    assert_eq!(cli::run(["eulerzeta", "verify", "--bits", "32"]), 2);
    assert_eq!(cli::run(["eulerzeta", "frobnicate"]), 2);
    assert_eq!(cli::run(["eulerzeta", "--help"]), 0);
    assert_eq!(cli::run(["eulerzeta", "--version"]), 0);
}

#[test]
fn exact_suite_at_forty() {
    let (code, text) = run_to_string(&["verify", "--suite", "exact", "--max-index", "40", "--format", "tsv"]);
    assert_eq!(code, 0);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "id\tlhs\trhs\tresidual\tpass");
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 5 && r[3] == "exact" && r[4] == "true"));
    for prefix in ["exact.second_from_first.k=040", "exact.bridge.n=040", "exact.mixed_identity.k=040"] {
        assert!(rows.iter().any(|r| r[0] == prefix), "missing {prefix}");
    }
}

#[test]
fn report_invariants_and_coverage() {
    let report = run_suite(Suite::All, &VerifyConfig::default()).unwrap();
    assert!(report.all_passed());
    assert_eq!(report.summary.total, report.cases.len());
    let ids: Vec<&str> = report.cases.iter().map(|c| c.id.as_str()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len(), "duplicate case ids");
    for c in &report.cases {
        let within = c.residual == "exact" || c.tolerance.is_some();
        assert!(within, "{} has neither an exact residual nor a tolerance", c.id);
    }
    let covered = coverage(&report);
    let missing: Vec<_> = ALL_OPS.iter().filter(|op| !covered.contains(*op)).collect();
    assert!(missing.is_empty(), "operations not exercised: {missing:?}");
}

#[test]
fn failing_case_gives_exit_1_path() {
    // a tolerance that cannot be met: the report must fail and say so
    let config = VerifyConfig { bits: 64, ..VerifyConfig::default() };
    let report = run_suite(Suite::Numeric, &config).unwrap();
    assert!(report.all_passed(), "64-bit numeric suite should still meet its own tolerance");
    let mut broken = report.clone();
    broken.cases[0].pass = false;
    let broken = cli::VerificationReport::new("numeric", broken.config.clone(), broken.cases, broken.diagnostics);
    assert_eq!(broken.summary.failed, 1);
    assert!(!broken.all_passed());
}

#[test]
fn json_is_deterministic_per_suite() {
    for suite in ["exact", "padic", "q"] {
        let (_, a) = run_to_string(&["verify", "--suite", suite, "--format", "json", "--max-index", "12", "--depth", "3"]);
        let (_, b) = run_to_string(&["verify", "--suite", suite, "--format", "json", "--max-index", "12", "--depth", "3"]);
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["suite"], suite);
        assert_eq!(v["config"]["depths"], serde_json::json!([1, 2, 3]));
    }
}
