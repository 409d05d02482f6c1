use std::process::{Command, Output};

use proptest::prelude::*;
use qhgr_cli::config::{Format, RunConfig};

fn qhgr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhgr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn qprod_examples() {
    let o = qhgr(&["qprod", "A2", "--u", "1", "--v", "1,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "q1*q2 + q1*s[1,2]");
    assert_eq!(stdout(&qhgr(&["qprod", "A2", "--u", "", "--v", "1"])).trim(), "s[1]");
    assert_eq!(stdout(&qhgr(&["qprod", "--system", "A2", "--u", "1,2", "--v", "2,1"])).trim(), "q1*q2");
}

#[test]
fn non_reduced_words_warn() {
    let o = qhgr(&["qprod", "A2", "--u", "1,2,1,2", "--v", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("not a reduced word"), "{}", stderr(&o));
    // s1 s2 s1 s2 = s2 s1
    assert_eq!(stdout(&o), stdout(&qhgr(&["qprod", "A2", "--u", "2,1", "--v", "1"])));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["qprod", "A2", "--u", "3", "--v", "1"],
        vec!["qprod", "A2", "--u", "x", "--v", "1"],
        vec!["qprod", "Z9", "--u", "1", "--v", "1"],
        vec!["verify", "A2", "--parabolic", "1", "--suites", "nope"],
        vec!["verify", "A2", "--parabolic", "1,2"],
        vec!["verify", "A2"],
        vec!["qprod", "E6", "--u", "1", "--v", "1"],
        vec!["pw", "A2", "--parabolic", "1", "--lambda", "5:1"],
        vec!["grading-table", "A2", "--parabolic", "1", "--box", "-500..500,-500..500"],
        vec!["qprod", "A2", "--u", "1", "--v", "1", "--format", "yaml"],
        vec!["frobnicate"],
    ] {
        let o = qhgr(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
    assert!(stderr(&qhgr(&["verify", "A2", "--parabolic", "1", "--suites", "nope"])).contains("unknown suite"));
}

#[test]
fn grading_table_reproduces_a2() {
    let o = qhgr(&["grading-table", "A2", "--parabolic", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[0], "| i \\ j | 0 | 1 | 2 | 3 | 4 | 5 | 6 |");
    assert_eq!(rows[2], "| 4 | q1^2 | q1^2*s[2] | q1^2*s[1,2] | q1^2*q2*s[1] | q1^2*q2*s[2,1] | q1^2*q2*s[1,2,1] | q1^3*q2^2 |");
    assert_eq!(rows[5], "| 1 | s[1] | s[2,1] | s[1,2,1] | q1*q2 | q1*q2*s[2] | q1*q2*s[1,2] | q1*q2^2*s[1] |");
    assert_eq!(rows[8], "| -2 | 0 | 0 | 0 | 0 | 0 | 0 | q2^2 |");
    // empty box gives an empty table
    let o = qhgr(&["grading-table", "A2", "--parabolic", "1", "--box", "1..0,0..6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}

#[test]
fn grading_table_json_face() {
    // on the face with last coordinate 0 each cell of A3 over (1,2) has one element
    let o = qhgr(&["grading-table", "A3", "--parabolic", "1,2", "--box", "0..6,0..6,0..0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 49);
    assert!(cells.iter().all(|c| c["terms"].as_array().unwrap().len() == 1));
}

#[test]
fn pw_examples() {
    let o = qhgr(&["pw", "A2", "--parabolic", "1", "--lambda", "2:1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda_b"], serde_json::json!([0, 1]));
    assert_eq!(v["omega_word"], serde_json::json!([1]));
    let o = qhgr(&["pw", "A2", "--parabolic", "1", "--lambda", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda_b"], serde_json::json!([0, 0]));
    assert_eq!(v["omega_word"], serde_json::json!([]));
    // one step up a chain: (u_{j-1}^{(j-1)}, alpha_j^vee)
    let o = qhgr(&["pw", "A4", "--parabolic", "1,2", "--lambda", "3:1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda_b"], serde_json::json!([0, 0, 1, 0]));
    assert_eq!(v["omega_word"], serde_json::json!([1, 2]));
}

#[test]
fn qhp_projective_plane() {
    // QH^*(P^2): h^2 * h^2 = q h, h * h^2 = q
    assert_eq!(stdout(&qhgr(&["qhp", "A2", "--parabolic", "1", "--u", "1,2", "--v", "1,2"])).trim(), "q2*s[2]");
    assert_eq!(stdout(&qhgr(&["qhp", "A2", "--parabolic", "1", "--u", "2", "--v", "1,2"])).trim(), "q2");
    assert_eq!(qhgr(&["qhp", "A2", "--parabolic", "1", "--u", "1", "--v", "2"]).status.code(), Some(2));
}

#[test]
fn mult_table_formats() {
    let o = qhgr(&["mult-table", "A2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 37);
    let o = qhgr(&["mult-table", "A2", "--max-len", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = qhgr(&["verify", "A2", "--parabolic", "1", "--suites", "all", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 8);
    for r in reports {
        for key in ["suite", "system", "parabolic", "order", "total", "passes", "failures", "elapsed_ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    }
    let o = qhgr(&["verify", "B3", "--parabolic", "1,2", "--suites", "key-lemma"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    std::fs::write(&path, "# a run\nsystem=A3\nparabolic=1,2\nformat=json\nseed=7\n").unwrap();
    let o = qhgr(&["verify", "--config", path.to_str().unwrap(), "--suites", "pw-lift"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["system"], "A3");
    let o = qhgr(&["verify", "--config", path.to_str().unwrap(), "--parabolic", "1", "--suites", "pw-lift", "--print-config"]);
    let cfg = RunConfig::parse(&stdout(&o)).unwrap();
    assert_eq!(cfg.parabolic, vec![1]);
    assert_eq!(cfg.seed, 7);
    assert_eq!(cfg.format, Format::Json);
    std::fs::write(&path, "system=A3\nsamplez=4\n").unwrap();
    let o = qhgr(&["verify", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("samplez"));
}

#[test]
fn config_errors_name_the_field() {
    for (text, field) in [("parabolic=1,x", "parabolic"), ("max_weyl=0", "max_weyl"), ("format=pdf", "format"), ("exceptional=maybe", "exceptional"), ("bogus=1", "bogus")] {
        let e = RunConfig::parse(text).unwrap_err();
        assert_eq!(e.field, field);
    }
    let mut c = RunConfig::parse("system=A2\nparabolic=3").unwrap();
    assert_eq!(c.validate().unwrap_err().field, "parabolic");
    c.parabolic = vec![1];
    c.order = Some(vec![2]);
    assert_eq!(c.validate().unwrap_err().field, "order");
}

fn config_strategy() -> impl Strategy<Value = RunConfig> {
    (
        prop::sample::select(vec!["qprod", "verify", "pw", "grading-table"]),
        prop::sample::select(vec!["A2", "B3", "C4", "G2", "D5"]),
        prop::collection::vec(1usize..6, 0..4),
        prop::option::of(prop::collection::vec(1usize..6, 1..4)),
        prop::sample::select(vec![Format::Markdown, Format::Json, Format::Csv]),
        (1usize..5000, 0i32..9, any::<u64>(), 1usize..1000, any::<bool>()),
    )
        .prop_map(|(command, system, parabolic, order, format, (max_weyl, max_q, seed, samples, exceptional))| RunConfig {
            command: command.into(),
            system: system.into(),
            parabolic,
            order,
            format,
            max_weyl,
            max_q,
            seed,
            samples,
            exceptional,
        })
}

proptest! {
    #[test]
    fn config_round_trips(c in config_strategy()) {
        let text = c.emit();
        let back = RunConfig::parse(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(back.emit(), text);
    }
}
