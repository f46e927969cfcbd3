use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mu-bargmann")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_small_run_passes_with_zero_first_entropy() {
    let o = run(&["verify", "--mu", "0", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "kind,n,mu,closed_form,oracle,abs_err,rel_err,quadrature_err_est,pass");
    let first: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&first[..3], &["entropy_even", "0", "0.0000000000000000e0"]);
    assert_eq!(first[3].parse::<f64>().unwrap(), 0.0);
    assert!(first[4].parse::<f64>().unwrap().abs() <= 1e-9);
    assert_eq!(text.lines().count(), 1 + 3 * 6);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true")));
    assert!(!text.contains('\r'));
}

#[test]
fn verify_json_is_an_array_of_rows() {
    let o = run(&["verify", "--mu", "0,1", "--n-max", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 2 * 21 * 3);
    for key in ["kind", "n", "mu", "closed_form", "oracle", "abs_err", "rel_err", "quadrature_err_est", "pass"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    assert!(rows.iter().all(|r| r["pass"] == true));
}

#[test]
fn invalid_mu_is_a_usage_error() {
    let o = run(&["verify", "--mu", "-0.6", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("mu must exceed -1/2"));
    assert!(o.stdout.is_empty());
}

#[test]
fn unknown_flag_is_a_usage_error() {
    assert_eq!(run(&["table", "entropy", "--bogus"]).status.code(), Some(2));
}

#[test]
fn tight_bands_make_verify_fail() {
    let o = run(&["verify", "--mu", "0.5", "--n-max", "3", "--abs-band", "0", "--rel-band", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(",false"));
}

#[test]
fn energy_table_counts_up_from_one() {
    let o = run(&["table", "energy", "--mu", "0", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let values: Vec<f64> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(3).unwrap().parse().unwrap()).collect();
    assert_eq!(values.len(), 5);
    for (n, v) in values.iter().enumerate() {
        assert!((v - (n + 1) as f64).abs() < 1e-12);
    }
}

#[test]
fn entropy_table_starts_with_known_values() {
    let o = run(&["table", "entropy", "--mu", "0", "--n-max", "3"]);
    let rows: Vec<Vec<f64>> =
        stdout(&o).lines().skip(1).map(|l| l.split(',').skip(3).map(|x| x.parse().unwrap()).collect()).collect();
    let g = 0.577_215_664_901_532_9;
    assert_eq!(rows[0][0], 0.0);
    assert!((rows[1][0] - (1.0 - g)).abs() < 1e-14);
    assert!((rows[2][0] - (3.0 - 2.0 * g - std::f64::consts::LN_2)).abs() < 1e-13);
    assert!((rows[0][1] - rows[1][0]).abs() < 1e-15);
}

#[test]
fn monomial_table_second_row() {
    let o = run(&["table", "monomial-entropy", "--mu", "0.5", "--n-max", "2"]);
    let second = stdout(&o).lines().nth(2).unwrap().to_owned();
    let v: f64 = second.split(',').nth(3).unwrap().parse().unwrap();
    assert!((v - (1.0 - 0.577_215_664_901_532_9)).abs() < 1e-14);
}

#[test]
fn sharpness_examples() {
    for (args, verdict) in [
        (["--parity", "even", "--c", "1.2", "--mu", "0"], "bounded"),
        (["--parity", "even", "--c", "1.0", "--mu", "0"], "unbounded"),
        (["--parity", "odd", "--c", "0.5", "--mu", "2.5"], "unbounded"),
    ] {
        let mut all = vec!["sharpness"];
        all.extend(args);
        all.extend(["--n-max", "10000"]);
        let o = run(&all);
        assert_eq!(o.status.code(), Some(0));
        let row = stdout(&o).lines().nth(1).unwrap().to_owned();
        assert!(row.ends_with(&format!(",{verdict},{verdict},true")), "{row}");
    }
}

#[test]
fn sharpness_sequence_mode_lists_every_term() {
    let o = run(&["sharpness", "--parity", "odd", "--c", "2", "--mu", "1", "--n-max", "50", "--sequence"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("parity,c,mu,k,basis_index,gap,predictor\n"));
    assert_eq!(text.lines().count(), 52);
}

#[test]
fn limit_examples() {
    for args in [
        vec!["limits", "lemma32", "--mu", "1", "--n", "100,1000,10000"],
        vec!["limits", "cesaro", "--mu", "0", "--n", "10000"],
        vec!["limits", "mu-infinity", "--index", "2", "--mu", "1,10,100,1000"],
        vec!["limits", "diff1"],
        vec!["limits", "diff2", "--mu", "-0.25,2.5"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn limit_outside_its_band_fails() {
    let o = run(&["limits", "lemma32", "--mu", "1", "--n", "100,1000", "--band", "1e-6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn limits_reject_decreasing_mu_grid() {
    let o = run(&["limits", "mu-infinity", "--mu", "10,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transform_check_examples() {
    for args in [["--mu", "0", "--n-max", "6"], ["--mu", "1", "--n-max", "6"], ["--mu", "-0.4", "--n-max", "4"]] {
        let mut all = vec!["transform-check"];
        all.extend(args);
        let o = run(&all);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
    }
}

#[test]
fn transform_check_index_cap_is_a_usage_error() {
    assert_eq!(run(&["transform-check", "--n-max", "13"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = ["verify", "--mu", "0,0.5,2.5", "--n-max", "6", "--format", "json"];
    let a = run(&args);
    let b =
        Command::new(env!("CARGO_BIN_EXE_mu-bargmann")).args(args).env("MU_BARGMANN_THREADS", "1").output().unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_mu-bargmann"))
        .args(["table", "entropy"])
        .env("MU_BARGMANN_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_file_and_keeps_stdout_clean() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("energy.csv");
    let o = run(&["table", "energy", "--n-max", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("kind,n,mu,value,difference\n"));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--seed", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().iter().all(|r| r["pass"] == true));
}
