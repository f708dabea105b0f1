use std::process::{Command, Output};
use std::time::{Duration, Instant};

use zcdft::format::{parse_pattern_csv, parse_sequence_csv, parse_sequence_json};
use zcdft::pattern::{zc_pattern, Orientation};
use zcdft::{plan, zc_time, Direction, Prime, ZcParams};

fn zcdft(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zcdft"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = zcdft(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gen_writes_header_and_first_row() {
    let text = stdout(&["gen", "--p", "13", "--u", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,re,im"));
    assert_eq!(lines.next(), Some("0,1,0"));
    let seq = parse_sequence_csv(&text).unwrap();
    assert_eq!(seq, zc_time(ZcParams::new(13, 3, 0).unwrap()));
}

#[test]
fn bad_arguments_exit_with_2() {
    for args in [
        &["gen", "--p", "4", "--u", "1"][..],
        &["gen", "--p", "13", "--u", "13"],
        &["gen", "--p", "13", "--u", "0"],
        &["gen", "--p", "13", "--u", "3", "--ts", "13"],
        &["dft", "--p", "15", "--u", "2"],
        &["pattern", "--p", "13", "--u", "3", "--flip", "sideways"],
        &["bench", "--p", "9"],
        &["gen", "--p", "13"],
        &["dft", "--p", "13", "--u", "3", "--method", "magic"],
    ] {
        let out = zcdft(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn file_outputs_round_trip_bit_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("z.csv");
    let json = dir.path().join("z.json");
    let params = ZcParams::new(139, 25, 7).unwrap();
    for (path, format) in [(&csv, "csv"), (&json, "json")] {
        stdout(&[
            "dft", "--p", "139", "--u", "25", "--ts", "7", "--out",
            path.to_str().unwrap(), "--format", format,
        ]);
    }
    let expected = plan(params, Direction::Forward).execute(None);
    let from_csv = parse_sequence_csv(&std::fs::read_to_string(&csv).unwrap()).unwrap();
    let (p2, from_json) = parse_sequence_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(from_csv, expected);
    assert_eq!(from_json, expected);
    assert_eq!(p2, params);
}

#[test]
fn dft_methods_agree() {
    let fast = parse_sequence_csv(&stdout(&["dft", "--p", "13", "--u", "3"])).unwrap();
    let g = fast[0];
    assert!((g.re + 2.048_186_572_122_655).abs() < 1e-12);
    assert!((g.im + 2.967_310_527_359_17).abs() < 1e-12);
    for method in ["naive", "reference"] {
        let other = parse_sequence_csv(&stdout(&["dft", "--p", "13", "--u", "3", "--method", method])).unwrap();
        assert!(fast.max_abs_diff(&other) < 1e-9 * 13f64.sqrt(), "{method}");
    }
}

#[test]
fn idft_normalize_divides_by_p() {
    for method in ["fast", "reference", "naive"] {
        let raw = parse_sequence_csv(&stdout(&["idft", "--p", "13", "--u", "3", "--method", method])).unwrap();
        let norm = parse_sequence_csv(&stdout(&[
            "idft", "--p", "13", "--u", "3", "--method", method, "--normalize",
        ]))
        .unwrap();
        assert!(norm.max_abs_diff(&raw.scale(1.0 / 13.0)) < 1e-15);
    }
}

#[test]
fn pattern_flips_compose_in_order() {
    let p = Prime::new(13).unwrap();
    let plain = parse_pattern_csv(&stdout(&["pattern", "--p", "13", "--u", "3"])).unwrap();
    assert_eq!(plain, zc_pattern(p, 3, 0).unwrap());
    let points: Vec<_> = plain.points().collect();
    for want in [(0, 0), (1, -3), (2, -6), (3, 4)] {
        assert!(points.contains(&want));
    }

    let dft = parse_pattern_csv(&stdout(&["pattern", "--p", "13", "--u", "3", "--flip", "dft"])).unwrap();
    assert_eq!(dft.orientation(), Orientation::Reverse);
    assert_eq!(dft, plain.flip_dft());

    let obverse =
        parse_pattern_csv(&stdout(&["pattern", "--p", "13", "--u", "3", "--flip", "dft,conj"])).unwrap();
    assert_eq!(obverse.orientation(), Orientation::Obverse);
    assert_eq!(obverse.read_slope().unwrap(), 9);
    assert_eq!(obverse.first_frequency(), -4);
}

#[test]
fn verify_passes_quickly_and_catches_faults() {
    let start = Instant::now();
    let out = zcdft(&["verify", "--pmax", "61"]);
    assert!(start.elapsed() < Duration::from_secs(10));
    assert_eq!(out.status.code(), Some(0));
    let report = String::from_utf8(out.stdout).unwrap();
    let families = report.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(families >= 12, "{report}");
    assert!(!report.contains("FAIL "));

    let out = zcdft(&["verify", "--pmax", "13", "--inject-fault", "fs-off-by-one"]);
    assert_eq!(out.status.code(), Some(1));
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("FAIL transform.fast_dft_vs_naive"));
}

#[test]
fn verify_default_grid() {
    let out = zcdft(&["verify", "--include-839"]);
    let report = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{report}");
}

#[test]
fn bench_reports_counts() {
    let text = stdout(&["bench", "--p", "839", "--u", "25", "--reps", "5"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["p"], 839);
    assert_eq!(v["u"], 25);
    assert_eq!(v["reps"], 5);
    assert_eq!(v["additions"], 1676);
    assert_eq!(v["modulo_reductions"], 1676);
    assert_eq!(v["exp_evaluations"], 839);
    for key in ["fast_ns", "reference_ns", "naive_ns"] {
        assert!(v[key].as_u64().unwrap() > 0, "{key}");
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["gen", "--p", "31", "--u", "5", "--ts", "3", "--format", "json"][..],
        &["idft", "--p", "31", "--u", "5", "--method", "reference"],
        &["pattern", "--p", "31", "--u", "5", "--flip", "idft,conj,dft"],
    ] {
        assert_eq!(stdout(args), stdout(args));
    }
}
