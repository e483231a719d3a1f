use std::process::{Command, Output};

use vincular::{ConstraintSpec, Dispatcher, Engine, SequenceRecord};

fn vincular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vincular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn count(args: &[&str]) -> String {
    let o = vincular(&[&["count"], args].concat());
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim().to_string()
}

#[test]
fn count_examples() {
    assert_eq!(
        count(&["--avoid", "123,231", "--n", "8", "--engine", "recurrence"]),
        "4368"
    );
    assert_eq!(
        count(&["--avoid", "1-3-2", "--begin", "12", "--end", "123", "--n", "10", "--engine", "series"]),
        "2002"
    );
    assert_eq!(
        count(&["--avoid", "1-2-3", "--begin", "12", "--end", "12", "--n", "3"]),
        "0"
    );
}

#[test]
fn count_engines_agree() {
    let args = ["--avoid", "1-2-3", "--begin", "21", "--end", "12", "--n", "8"];
    let oracle = count(&[&args[..], &["--engine", "oracle"]].concat());
    let formula = count(&[&args[..], &["--engine", "formula"]].concat());
    assert_eq!(oracle, formula);
}

#[test]
fn exactly_flag() {
    let via_formula = count(&[
        "--exactly",
        "12-3:1",
        "--begin",
        "12",
        "--end",
        "1",
        "--n",
        "7",
        "--engine",
        "formula",
    ]);
    let via_oracle = count(&[
        "--exactly",
        "12-3:1",
        "--begin",
        "12",
        "--end",
        "1",
        "--n",
        "7",
        "--engine",
        "oracle",
    ]);
    assert_eq!(via_formula, via_oracle);
}

#[test]
fn uncovered_engine_is_an_explicit_error() {
    let o = vincular(&[
        "count", "--avoid", "1-3-2", "--begin", "132", "--n", "5", "--engine", "series",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no registered formula"));
    assert!(o.stdout.is_empty());
}

#[test]
fn oracle_cap_is_enforced() {
    let o = vincular(&["count", "--avoid", "1-3-2,2-1-3", "--n", "13", "--engine", "oracle"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        &["count", "--avoid", "1-2-2", "--n", "3"][..],
        &["count", "--avoid", "123", "--n", "x"],
        &["count", "--exactly", "12-3", "--n", "3"],
        &["verify", "--suite", "nope"],
        &["seq", "--avoid", "123", "--format", "xml"],
        &["frobnicate"],
    ] {
        assert_eq!(vincular(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn seq_tsv_table() {
    let o = vincular(&["seq", "--avoid", "132,312", "--n-max", "10"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines[0].starts_with("n\t"));
    assert_eq!(lines[10].split('\t').collect::<Vec<_>>(), ["9", "11840"]);
}

#[test]
fn seq_engines_side_by_side() {
    let o = vincular(&[
        "seq",
        "--avoid",
        "123,231",
        "--n-max",
        "8",
        "--engine",
        "recurrence",
        "--engine",
        "oracle",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n\trecurrence\toracle"));
    for line in lines {
        let cols: Vec<&str> = line.split('\t').collect();
        assert_eq!(cols.len(), 3);
        assert_eq!(cols[1], cols[2], "{line}");
    }
}

#[test]
fn seq_json_round_trips() {
    let o = vincular(&[
        "seq", "--avoid", "2-1-3", "--begin", "21", "--n-max", "9", "--format", "json",
    ]);
    assert!(o.status.success());
    let parsed: SequenceRecord = serde_json::from_str(&stdout(&o)).unwrap();

    let spec = ConstraintSpec::avoiding_str("2-1-3")
        .unwrap()
        .with_begin("21".parse().unwrap())
        .unwrap();
    let d = Dispatcher::default();
    let direct = d.sequence(d.cheapest(&spec, 9).unwrap(), &spec, 9).unwrap();
    assert_eq!(parsed, direct);

    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(raw["values"][3]["value"].is_string());
    assert_eq!(raw["values"][3]["n"], 3);
}

#[test]
fn seq_json_array_for_several_engines() {
    let o = vincular(&[
        "seq", "--avoid", "1-2-3", "--n-max", "6", "--format", "json", "--engine", "formula", "--engine", "oracle",
    ]);
    assert!(o.status.success());
    let recs: Vec<SequenceRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0].values, recs[1].values);
    assert_eq!(recs[1].provenance, Engine::Oracle.provenance());
}

#[test]
fn verify_tables() {
    let o = vincular(&["verify", "--suite", "tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS ")).count(), 33);
    assert!(text.contains("33 checks, 33 passed, 0 failed"));
}

#[test]
fn verify_egf_constant_terms() {
    let o = vincular(&["verify", "--suite", "egf", "--n-max", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["checks"].as_array().unwrap().len() > 19);
}

#[test]
fn verify_rejects_bounds_over_the_cap() {
    let o = vincular(&["verify", "--suite", "lemmas", "--n-max", "40"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn series_prints_coefficients() {
    let o = vincular(&["series", "--ogf", "1-3-2/inc", "--k", "1", "--order", "5"]);
    assert!(o.status.success());
    // The begin window rules out the empty permutation.
    assert_eq!(stdout(&o), "0: 0\n1: 1\n2: 2\n3: 5\n4: 14\n");
    let o = vincular(&["series", "--egf", "1-32/inc/dec", "--order", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn cache_file_is_written_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("counts.cache");
    let p = path.to_str().unwrap();
    let args = [
        "--cache", p, "count", "--avoid", "1-3-2", "--begin", "21", "--n", "7", "--engine", "oracle",
    ];
    let first = vincular(&args);
    assert!(first.status.success());
    assert!(std::fs::metadata(&path).unwrap().len() > 0);
    let second = vincular(&args);
    assert_eq!(stdout(&first), stdout(&second));
}
