//! End-to-end tests of the `conecurve` binary: output schemas, exit
//! codes, config handling and byte determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_conecurve"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("conecurve-cli-tests").join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn pinned_kappa(s: f64) -> f64 {
    0.5 - 1.5 / (s.cosh() * s.cosh())
}

#[test]
fn eval_writes_frame_csv_with_the_pinned_curvature() {
    let out = tmp("eval-kappa");
    let st = run(&["eval", "--out", out.to_str().unwrap()]);
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    let text = fs::read_to_string(out.join("frame.csv")).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "s,kappa,x1,x2,x3,a1,a2,a3,y1,y2,y3"
    );
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let s: f64 = fields[0].parse().unwrap();
        let kappa: f64 = fields[1].parse().unwrap();
        assert!(
            (kappa - pinned_kappa(s)).abs() <= 1e-9,
            "kappa at s={s}: {kappa}"
        );
        rows += 1;
    }
    assert_eq!(rows, 401);
}

#[test]
fn eval_minimal_two_point_grid() {
    let out = tmp("eval-two");
    let st = run(&[
        "eval",
        "--range",
        "-0.5:0.5",
        "--n",
        "2",
        "--kind",
        "xy",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(st.status.success());
    let text = fs::read_to_string(out.join("curve.csv")).unwrap();
    assert_eq!(text.lines().count(), 3);
    let partner = fs::read_to_string(out.join("partner_xy.csv")).unwrap();
    assert_eq!(
        partner.lines().next().unwrap(),
        "s,sstar,sigma,kappa_g,gamma_self,g1,g2,g3,a1,a2,a3,y1,y2,y3"
    );
    assert_eq!(partner.lines().count(), 3);
}

#[test]
fn non_uniform_csv_exits_two_and_names_the_row() {
    let out = tmp("bad-csv");
    let path = out.join("curve_in.csv");
    let mut text = String::from("s,x1,x2,x3\n");
    for i in 0..8 {
        let s = i as f64 * 0.1;
        let p = conecurve::example1_curve(s).p;
        text.push_str(&format!("{},{},{},{}\n", s, p.x1, p.x2, p.x3));
    }
    text.push_str("0.95,0.1,0.2,0.3\n"); // breaks the uniform step
    fs::write(&path, text).unwrap();
    let st = run(&[
        "eval",
        "--curve",
        &format!("csv:{}", path.display()),
        "--out",
        out.join("o").to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(2));
    let err = String::from_utf8_lossy(&st.stderr);
    assert!(err.contains("row 9"), "stderr: {err}");
}

#[test]
fn empty_domain_exits_three() {
    // ay with unit constants is inadmissible wherever kappa > 0
    let out = tmp("empty");
    let st = run(&[
        "eval",
        "--range",
        "2:3",
        "--n",
        "51",
        "--kind",
        "ay",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(3));
}

#[test]
fn unknown_flags_and_values_exit_two() {
    assert_eq!(run(&["eval", "--range", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--kind", "zz"]).status.code(), Some(2));
    assert_eq!(run(&["figure", "--panel", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--tol", "bogus=1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus-subcommand"]).status.code(), Some(2));
}

#[test]
fn assess_emits_reports_and_succeeds_despite_discrepancies() {
    let out = tmp("assess");
    let st = run(&[
        "assess",
        "--n",
        "101",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(st.status.success());
    let json = fs::read_to_string(out.join("report.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    // the full registry shows up even with discrepant verdicts present
    let ids: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["formula_id"].as_str().unwrap())
        .collect();
    for id in ["3.2:alpha-row", "3.16:kappa", "3.28:speed", "xay-display:curve"] {
        assert!(ids.contains(&id), "missing {id}");
    }
    assert!(fs::read_to_string(out.join("report.md"))
        .unwrap()
        .contains("**discrepant**"));
}

#[test]
fn assess_exits_three_when_every_formula_is_domain_empty() {
    // on [2, 3] the ay oracle is inadmissible everywhere for unit constants
    let out = tmp("assess-empty");
    let st = run(&[
        "assess",
        "--range",
        "2:3",
        "--n",
        "51",
        "--kind",
        "ay",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(st.status.code(), Some(3));
}

#[test]
fn figure_single_panel_and_all_panels() {
    let out = tmp("figs");
    let st = run(&[
        "figure",
        "--panel",
        "A",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(st.status.success());
    assert!(out.join("panel_A.svg").exists());

    let out_all = tmp("figs-all");
    let st = run(&["figure", "--n", "101", "--out", out_all.to_str().unwrap()]);
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    let mut names: Vec<String> = fs::read_dir(&out_all)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 15); // 10 SVG + 5 OBJ
    assert!(names.contains(&"panel_J.obj".to_string()));
}

#[test]
fn repeated_invocations_are_byte_identical() {
    let (a, b) = (tmp("det-a"), tmp("det-b"));
    for out in [&a, &b] {
        let st = run(&[
            "figure",
            "--panel",
            "D",
            "--n",
            "101",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(st.status.success());
        let st = run(&["assess", "--n", "51", "--kind", "xy", "--out", out.to_str().unwrap()]);
        assert!(st.status.success());
    }
    for name in ["panel_D.obj", "panel_D.svg", "report.json", "report.md"] {
        assert_eq!(
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
            "{name} differs between runs"
        );
    }
}

#[test]
fn config_file_is_overridden_by_flags() {
    let out = tmp("cfg");
    let cfg_path = out.join("run.json");
    fs::write(
        &cfg_path,
        format!(
            r#"{{"n": 11, "range": {{"lo": -1.0, "hi": 1.0}}, "out": "{}"}}"#,
            out.join("from-config").display()
        ),
    )
    .unwrap();
    // config's n=11 survives; --out overrides the config's directory
    let flag_out = out.join("from-flag");
    let st = run(&[
        "eval",
        "--config",
        cfg_path.to_str().unwrap(),
        "--out",
        flag_out.to_str().unwrap(),
    ]);
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    assert!(!Path::new(&out.join("from-config")).exists());
    let text = fs::read_to_string(flag_out.join("curve.csv")).unwrap();
    assert_eq!(text.lines().count(), 12);
}

#[test]
fn csv_curve_roundtrips_through_eval() {
    // write a sampled grid, feed it back, and check the frame against the
    // analytic one within the fd tolerance class
    let out = tmp("csv-roundtrip");
    let input = out.join("in.csv");
    let mut text = String::from("s,x1,x2,x3\n");
    let n = 81;
    for i in 0..n {
        let s = -1.0 + 2.0 * i as f64 / (n - 1) as f64;
        let p = conecurve::example1_curve(s).p;
        text.push_str(&format!("{},{},{},{}\n", s, p.x1, p.x2, p.x3));
    }
    fs::write(&input, text).unwrap();
    let st = run(&[
        "eval",
        "--curve",
        &format!("csv:{}", input.display()),
        "--kind",
        "xy",
        "--out",
        out.join("o").to_str().unwrap(),
    ]);
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    let frame = fs::read_to_string(out.join("o").join("frame.csv")).unwrap();
    for line in frame.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let s: f64 = fields[0].parse().unwrap();
        let kappa: f64 = fields[1].parse().unwrap();
        assert!(
            (kappa - pinned_kappa(s)).abs() <= 1e-5,
            "sampled kappa at s={s}: {kappa}"
        );
    }
}
