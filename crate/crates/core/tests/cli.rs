use std::fs;
use std::path::Path;

use sequency::cli::{run, EXIT_IO, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
use sequency::signals::{discretize, load_csv, save_csv, Waveform};

fn sequency(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("sequency").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn transform_round_trip_and_parseval_line() {
    let dir = tempfile::tempdir().unwrap();
    let (input, coeffs, back) = (
        dir.path().join("f.csv"),
        dir.path().join("c.csv"),
        dir.path().join("b.csv"),
    );
    let signal = discretize(&Waveform::triangular(2.0), 5);
    save_csv(&input, signal.values()).unwrap();

    let (code, out, _) = sequency(&[
        "transform",
        "--order",
        "sequency",
        "--input",
        p(&input),
        "--output",
        p(&coeffs),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("parseval:"));
    let (code, _, _) = sequency(&[
        "transform",
        "--order",
        "sequency",
        "--inverse",
        "--input",
        p(&coeffs),
        "--output",
        p(&back),
    ]);
    assert_eq!(code, EXIT_OK);
    let back = load_csv(&back).unwrap();
    for (a, b) in back.iter().zip(signal.values()) {
        assert!((a - b).abs() < 1e-12);
    }
}

#[test]
fn non_power_of_two_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("three.csv");
    fs::write(&input, "1\n2\n3\n").unwrap();
    let out = dir.path().join("o.csv");
    let (code, _, err) = sequency(&[
        "transform",
        "--order",
        "natural",
        "--input",
        p(&input),
        "--output",
        p(&out),
    ]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("not a power of two"));
    assert!(!out.exists());
}

#[test]
fn missing_file_and_bad_flags() {
    let (code, _, _) = sequency(&[
        "transform",
        "--order",
        "natural",
        "--input",
        "/no/such",
        "--output",
        "/tmp/x",
    ]);
    assert_eq!(code, EXIT_IO);
    let (code, _, _) = sequency(&[
        "transform",
        "--order",
        "sideways",
        "--input",
        "a",
        "--output",
        "b",
    ]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = sequency(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn filter_writes_branches_and_meta() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("sq.csv");
    save_csv(&input, discretize(&Waveform::composite_f(), 7).values()).unwrap();
    let prefix = dir.path().join("out");
    let (code, out, err) = sequency(&[
        "filter",
        "--kind",
        "low",
        "--cutoff",
        "N/4",
        "--input",
        p(&input),
        "--output-prefix",
        p(&prefix),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.contains("low-pass"));

    let pass = load_csv(dir.path().join("out.pass.csv")).unwrap();
    let stop = load_csv(dir.path().join("out.stop.csv")).unwrap();
    assert_eq!(pass.len(), 128);
    assert_eq!(stop.len(), 128);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out.meta.json")).unwrap())
            .unwrap();
    assert_eq!(meta["filter"]["cutoff"], 32);
    assert_eq!(meta["ancilla"]["swapped"], false);
    assert_eq!(meta["ancilla"]["ancilla_0"], "pass");
    let total = meta["p_pass"].as_f64().unwrap() + meta["p_stop"].as_f64().unwrap();
    assert!((total - 1.0).abs() < 1e-12);
    assert!(
        meta["quantum_vs_oracle"]["pass"]["l2_rel"]
            .as_f64()
            .unwrap()
            < 1e-10
    );
    assert!(meta["pass_stop_band_leakage"].as_f64().unwrap() < 1e-12);
    assert_eq!(meta["gate_stats"]["mcx"], 1);
}

#[test]
fn swapped_ancilla_gives_the_same_branches() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.csv");
    save_csv(&input, discretize(&Waveform::composite_g(), 6).values()).unwrap();
    for (prefix, extra) in [("a", None), ("b", Some("--swap-ancilla"))] {
        let prefix = dir.path().join(prefix);
        let mut args = vec![
            "filter",
            "--kind",
            "band",
            "--band",
            "N/4:3N/4",
            "--input",
            p(&input),
        ];
        args.extend(["--output-prefix", p(&prefix)]);
        args.extend(extra);
        assert_eq!(sequency(&args).0, EXIT_OK);
    }
    assert_eq!(
        load_csv(dir.path().join("a.pass.csv")).unwrap(),
        load_csv(dir.path().join("b.pass.csv")).unwrap()
    );
    let meta = fs::read_to_string(dir.path().join("b.meta.json")).unwrap();
    assert!(meta.contains("\"swapped\": true"));
}

#[test]
fn filter_rejects_bad_cutoffs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("f.csv");
    save_csv(&input, &[1.0; 16]).unwrap();
    let prefix = dir.path().join("o");
    for cutoff in ["N/3", "0", "17", "lots"] {
        let (code, _, _) = sequency(&[
            "filter",
            "--kind",
            "high",
            "--cutoff",
            cutoff,
            "--input",
            p(&input),
            "--output-prefix",
            p(&prefix),
        ]);
        assert_eq!(code, EXIT_USAGE, "cutoff {cutoff}");
    }
    // an all-zero signal cannot be amplitude encoded
    save_csv(&input, &[0.0; 16]).unwrap();
    let (code, _, _) = sequency(&[
        "filter",
        "--kind",
        "dc",
        "--input",
        p(&input),
        "--output-prefix",
        p(&prefix),
    ]);
    assert_eq!(code, EXIT_IO);
}

#[test]
fn spectrum_both_writes_aligned_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("s.csv");
    save_csv(&input, discretize(&Waveform::square(4.0), 6).values()).unwrap();
    let (code, _, _) = sequency(&[
        "spectrum",
        "--which",
        "both",
        "--input",
        p(&input),
        "--output",
        p(&dir.path().join("spec.csv")),
    ]);
    assert_eq!(code, EXIT_OK);
    let s = fs::read_to_string(dir.path().join("spec.sequency.csv")).unwrap();
    let f = fs::read_to_string(dir.path().join("spec.frequency.csv")).unwrap();
    let index = |t: &str| {
        t.lines()
            .map(|l| l.split(',').next().unwrap().to_string())
            .collect::<Vec<_>>()
    };
    assert_eq!(index(&s), index(&f));
    assert_eq!(index(&s).len(), 64);
    // a 4-cycle square wave is a single Walsh function of sequency 7
    let seq = load_csv(dir.path().join("spec.sequency.csv")).unwrap();
    assert!((seq[7] - 8.0).abs() < 1e-12);
}

#[test]
fn sequency_map_table() {
    let (code, out, _) = sequency(&["sequency-map", "--n", "3"]);
    assert_eq!(code, EXIT_OK);
    let g: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(g, ["0", "7", "3", "4", "1", "6", "2", "5"]);
    let (_, json, _) = sequency(&["sequency-map", "--n", "3", "--format", "json"]);
    let parsed: Vec<u64> = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, [0, 7, 3, 4, 1, 6, 2, 5]);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = sequency(&["verify", "--n-max", "5"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("all suites passed"));
    let (code, out, _) = sequency(&["verify", "--n-max", "4", "--inject-fault", "sign-flip"]);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    assert!(out.contains("FAIL"));
    let (_, help, _) = sequency(&["verify", "--help"]);
    assert!(!help.contains("inject-fault"));
}

#[test]
fn gates_counts_dump_and_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let dump = dir.path().join("c.json");
    let (code, out, _) = sequency(&[
        "gates",
        "--kind",
        "low",
        "--n",
        "7",
        "--cutoff",
        "N/2",
        "--dump",
        p(&dump),
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("H:14 X:1 CNOT:12 SWAP:6 MCX:1 total:34"),
        "{out}"
    );
    let circuit =
        sequency::circuits::Circuit::from_json(&fs::read_to_string(&dump).unwrap()).unwrap();
    assert_eq!(circuit.len(), 34);

    let (code, out, _) = sequency(&["gates", "--kind", "uz", "--n", "6", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let stats: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (stats["cnot"].as_u64(), stats["swap"].as_u64()),
        (Some(5), Some(3))
    );

    let (code, out, _) = sequency(&[
        "gates",
        "--kind",
        "low",
        "--n",
        "3",
        "--cutoff",
        "N/4",
        "--sweep-to",
        "10",
    ]);
    assert_eq!(code, EXIT_OK);
    let totals: Vec<u64> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(7).unwrap().parse().unwrap())
        .collect();
    assert_eq!(totals.len(), 8);
    let expected: Vec<u64> = (3..=10u64)
        .map(|n| 2 * n + 2 * (n - 1) + 2 * (n / 2) + 2)
        .collect();
    assert_eq!(totals, expected);
}
