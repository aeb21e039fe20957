use std::process::{Command, Output};

fn toader(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toader"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn eval(args: &[&str]) -> String {
    let mut full = vec!["eval"];
    full.extend_from_slice(args);
    let o = toader(&full);
    assert!(o.status.success(), "{:?}", o);
    stdout(&o).trim().to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(eval(&["--fn", "E", "--r", "0"]), "1.570796326794897");
    assert_eq!(eval(&["--fn", "K", "--r", "0"]), "1.570796326794897");
    assert_eq!(eval(&["--fn", "T", "--a", "3", "--b", "3"]), "3");
    assert_eq!(eval(&["--fn", "C", "--a", "2", "--b", "1"]), "1.666666666666667");
    assert_eq!(eval(&["--fn", "A", "--a", "2", "--b", "1"]), "1.5");
    assert_eq!(eval(&["--fn", "Mp", "--a", "4", "--b", "1", "--p", "0"]), "2");
    assert_eq!(eval(&["--fn", "E", "--r", "1"]), "1");
    assert_eq!(eval(&["--fn", "J", "--a", "2", "--b", "1", "--x", "1"]), "1.666666666666667");
    assert_eq!(eval(&["--fn", "combination", "--a", "5", "--b", "5", "--alpha", "0.3"]), "5");
}

#[test]
fn eval_toader_matches_reference() {
    // (4/pi) E(sqrt(3)/2), 30-digit reference 1.54196442519004...
    let v: f64 = eval(&["--fn", "T", "--a", "2", "--b", "1"]).parse().unwrap();
    assert!((v - 1.5419644251900400).abs() < 1e-15);
    assert_eq!(eval(&["--fn", "T", "--a", "1", "--b", "2"]), eval(&["--fn", "T", "--a", "2", "--b", "1"]));
}

#[test]
fn exit_codes() {
    assert_eq!(toader(&["eval", "--fn", "K", "--r", "1"]).status.code(), Some(1));
    assert_eq!(toader(&["eval", "--fn", "T", "--a", "-1", "--b", "2"]).status.code(), Some(1));
    assert_eq!(toader(&["eval", "--fn", "E", "--r", "1.5"]).status.code(), Some(1));
    assert_eq!(toader(&["eval", "--fn", "E"]).status.code(), Some(2));
    assert_eq!(toader(&["eval", "--fn", "Z", "--r", "0.5"]).status.code(), Some(2));
    assert_eq!(toader(&["eval", "--fn", "E", "--r", "abc"]).status.code(), Some(2));
    assert_eq!(toader(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(toader(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(toader(&["table", "--envelopes"]).status.code(), Some(2));
    assert_eq!(toader(&["table", "--envelopes", "nope"]).status.code(), Some(2));
    assert_eq!(toader(&["sharpness", "--alpha", "1.5"]).status.code(), Some(2));
    assert_eq!(toader(&["sharpness", "--alpha", "0"]).status.code(), Some(2));
}

#[test]
fn errors_go_to_stderr() {
    let o = toader(&["eval", "--fn", "K", "--r", "1"]);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("pole"));
}

fn csv(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn table_shape_and_bounds() {
    let o = toader(&["table", "--envelopes", "corollary33", "--r-min", "0.25", "--r-max", "0.75", "--steps", "3"]);
    assert!(o.status.success());
    let rows = csv(&o);
    assert_eq!(rows[0], ["r", "E", "corollary33_lo", "corollary33_hi"]);
    assert_eq!(rows.len(), 4);
    for row in &rows[1..] {
        assert_eq!(row.len(), 4);
        let v: Vec<f64> = row.iter().map(|s| s.parse().unwrap()).collect();
        assert!(v[2] < v[1] && v[1] < v[3], "{row:?}");
    }
    assert_eq!(rows[1][0], "0.25");
    assert_eq!(rows[3][0], "0.75");
}

#[test]
fn table_e_column_matches_eval() {
    let o = toader(&["table", "--envelopes", "chu34,yinqi36", "--r-min", "0.1", "--r-max", "0.9", "--steps", "5"]);
    let rows = csv(&o);
    assert_eq!(rows[0].len(), 6);
    for row in &rows[1..] {
        assert_eq!(row[1], eval(&["--fn", "E", "--r", &row[0]]));
    }
}

#[test]
fn table_is_deterministic_and_plain() {
    let args = ["table", "--envelopes", "corollary33,chu34,guoqi35,yinqi36", "--r-min", "0", "--r-max", "1", "--steps", "41"];
    let (a, b) = (toader(&args), toader(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.ends_with('\n') && !text.contains('\r'));
    assert_eq!(text.lines().count(), 42);
    for line in text.lines().skip(1) {
        assert!(line.chars().all(|c| c.is_ascii_digit() || ".,-+einf".contains(c)), "{line}");
    }
}

#[test]
fn verify_named_suites() {
    for args in [
        &["verify", "--suite", "theorem31", "--samples", "1000", "--seed", "7"][..],
        &["verify", "--suite", "dominance"],
        &["verify", "--suite", "landen"],
    ] {
        let o = toader(args);
        let text = stdout(&o);
        assert!(o.status.success(), "{text}");
        assert!(text.contains("failures:       0"), "{text}");
        assert!(text.contains("worst_margin:"));
    }
}

#[test]
fn verify_is_reproducible_for_a_seed() {
    let run = |seed: &str| {
        let text = stdout(&toader(&["verify", "--suite", "meanorder", "--samples", "500", "--seed", seed]));
        text.lines().filter(|l| !l.starts_with("elapsed_ms")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run("11"), run("11"));
    assert_ne!(run("11"), run("12"));
}

fn field(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|rest| rest.starts_with(' ')))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
        .trim()
        .parse()
        .unwrap()
}

#[test]
fn sharpness_report() {
    let o = toader(&["sharpness", "--alpha", "0.5", "--tol", "1e-6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(field(&text, "u_low_dev") <= 1e-6);
    assert!(field(&text, "u_high_dev") <= 1e-6);
    assert_eq!(field(&text, "u_low_target"), 0.125);

    let text = stdout(&toader(&["sharpness", "--alpha", "0.75", "--perturb", "0.01"]));
    assert_eq!(field(&text, "u_low_target"), 0.0625);
    assert!(text.contains("witness_lower"));
    assert!(text.contains("witness_upper"));
}

#[test]
fn sharpness_rejects_loose_tolerance() {
    assert_eq!(toader(&["sharpness", "--alpha", "0.5", "--tol", "1e-3"]).status.code(), Some(1));
}
