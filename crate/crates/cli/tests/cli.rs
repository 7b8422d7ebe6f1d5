use std::process::{Command, Output};

fn glrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glrep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn act_examples() {
    let o = glrep(&["act", "--finite", "--r", "2", "--lambda", "-", "--i", "2", "--j", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "h1 = e1");

    let o = glrep(&["act", "--finite", "--r", "1", "--lambda", "3", "--i", "2", "--j", "3"]);
    assert!(stdout(&o).trim().ends_with("= e1^2"), "{}", stdout(&o));

    let o = glrep(&["act", "--djkm", "--lambda", "-", "--i", "1", "--j", "0"]);
    assert!(stdout(&o).trim().ends_with("= x1"), "{}", stdout(&o));
}

#[test]
fn act_json_has_both_forms() {
    let o = glrep(&["act", "--finite", "--r", "2", "--lambda", "-", "--i", "2", "--j", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["polynomial"], "e1");
    assert_eq!(v["basis"]["1"], "1");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["act", "--finite", "--r", "2", "--lambda", "1,2", "--i", "0", "--j", "0"][..],
        &["act", "--finite", "--r", "2", "--lambda", "-", "--i", "-1", "--j", "0"],
        &["act", "--finite", "--r", "1", "--lambda", "1,1", "--i", "0", "--j", "0"],
        &["series", "--kind", "gs"],
        &["verify", "--suite", "nope"],
    ] {
        assert_eq!(glrep(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn series_rows() {
    let o = glrep(&["series", "--kind", "thmB", "--r", "2", "--z-max", "1", "--w-max", "0", "--t-degree", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "1\t0\t-\tx1"), "{}", stdout(&o));

    let o = glrep(&["series", "--kind", "oracle", "--r", "2", "--lambda", "-", "--z-max", "0", "--w-max", "0"]);
    assert_eq!(stdout(&o).trim(), "0\t0\t-\t1");
}

#[test]
fn empty_window_gives_empty_rows() {
    let o = glrep(&["series", "--kind", "thmA", "--z-min", "3", "--z-max", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"], serde_json::json!([]));
    assert_eq!(v["meta"]["kind"], "thmA");
}

#[test]
fn series_json_coefficients_parse_back() {
    let o = glrep(&["series", "--kind", "gamma", "--lambda", "2,1", "--z-min", "-2", "--z-max", "2", "--w-min", "-2", "--w-max", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        let s = r["coefficient"].as_str().unwrap();
        let p: glrep::MultiPoly = s.parse().unwrap();
        assert_eq!(p.to_text(), s);
    }
}

#[test]
fn bracket_verify_is_deterministic() {
    let a = glrep(&["verify", "--suite", "bracket", "--seed", "7", "--extra", "40", "--format", "json", "--threads", "1"]);
    let b = glrep(&["verify", "--suite", "bracket", "--seed", "7", "--extra", "40", "--format", "json", "--threads", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = glrep(&["verify", "--suite", "bracket", "--seed", "7", "--extra", "40", "--format", "json", "--threads", "4"]);
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["meta"]["threads"] = serde_json::Value::Null;
        v
    };
    assert_eq!(strip(&a), strip(&c));
}

#[test]
fn passing_suites_exit_zero() {
    for s in ["gs", "kernel"] {
        let o = glrep(&["verify", "--suite", s]);
        assert_eq!(o.status.code(), Some(0), "{s}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
}

#[test]
fn finite_suite_reports_the_first_mismatch() {
    let o = glrep(&["verify", "--suite", "finite"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first mismatch"));
}
