//! CLI behavior: output shapes, the exit-code contract (0 success,
//! 1 input error, 2 inconclusive/failed checks), and file round-trips.
//! Most tests drive the command layer in-process; one spawns the real
//! binary to check the wiring.

use std::path::Path;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = keller::cli::run(
        args.iter().map(|s| s.to_string()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_golden_matrix(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("golden.mat");
    let (code, _, err) = run(&[
        "example",
        "--params",
        "1,0,0,0,1,0,0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    path
}

#[test]
fn invert_golden_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_golden_matrix(dir.path());
    let (code, out, _) = run(&["invert", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let expected = "G1 = Y3^9 - 3*Y2*Y3^6 + 3*Y2^2*Y3^3 - Y2^3 + Y1\n\
                    G2 = -Y3^3 + Y2\n\
                    G3 = Y3\n\
                    G4 = Y4\n\
                    G5 = Y5\n\
                    m = [5, 2, 1, 1, 1]\n\
                    deg G = 9\n";
    assert_eq!(out, expected);

    // byte-stable across runs
    let (_, again, _) = run(&["invert", path.to_str().unwrap()]);
    assert_eq!(out, again);
}

#[test]
fn invert_zero_matrix_gives_identity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.mat");
    std::fs::write(&path, "dim 2\nentries\n0 0\n0 0\n").unwrap();
    let (code, out, _) = run(&["invert", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "G1 = Y1\nG2 = Y2\nm = [1, 1]\ndeg G = 1\n");
}

#[test]
fn invert_reports_trace_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_golden_matrix(dir.path());
    let (code, out, _) = run(&["invert", path.to_str().unwrap(), "--trace"]);
    assert_eq!(code, 0);
    assert!(out.contains("inversion-trace v1"));
    assert!(out.contains("coordinate 1 m=5"));
}

#[test]
fn invert_cap_exhaustion_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_golden_matrix(dir.path());
    let (code, out, _) = run(&["invert", path.to_str().unwrap(), "--max-iter", "2"]);
    assert_eq!(code, 2);
    assert!(out.contains("INCONCLUSIVE after 2 iterations"));
    assert!(out.contains("coordinate 1 m=UNRESOLVED"));
}

#[test]
fn malformed_rational_exits_one_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.mat");
    std::fs::write(&path, "dim 2\nentries\n0 1/0\n0 0\n").unwrap();
    let (code, _, err) = run(&["invert", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "stderr: {err}");
    assert!(err.contains("field 2"), "stderr: {err}");

    let (code, _, err) = run(&["nilpotency", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn missing_file_exits_one() {
    let (code, _, err) = run(&["invert", "/nonexistent/matrix.mat"]);
    assert_eq!(code, 1);
    assert!(err.contains("error:"));
}

#[test]
fn nilpotency_outputs() {
    let dir = tempfile::tempdir().unwrap();

    let golden = write_golden_matrix(dir.path());
    let (code, out, _) = run(&["nilpotency", golden.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "3\n"));

    let zero = dir.path().join("zero.mat");
    std::fs::write(&zero, "dim 3\nentries\n0 0 0\n0 0 0\n0 0 0\n").unwrap();
    let (code, out, _) = run(&["nilpotency", zero.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "1\n"));

    let cubic = dir.path().join("unit.mat");
    std::fs::write(&cubic, "dim 1\nentries\n1\n").unwrap();
    let (code, out, _) = run(&["nilpotency", cubic.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "NOT_NILPOTENT\n"));
}

#[test]
fn identities_pass_and_fail() {
    let dir = tempfile::tempdir().unwrap();

    let golden = write_golden_matrix(dir.path());
    let (code, out, _) = run(&["identities", golden.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "eq3 PASS\neq4 PASS\neq8 PASS\neq9 PASS\neq10 PASS\n");

    let unit = dir.path().join("unit.mat");
    std::fs::write(&unit, "dim 1\nentries\n1\n").unwrap();
    let (code, out, _) = run(&["identities", unit.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.contains("eq3 FAIL at i=1, l=1: residual = X1^4"));
    assert!(out.contains("eq8 FAIL at i=1: residual = X1^5"));
}

#[test]
fn example_writes_the_family_matrix() {
    // identity parameters to stdout
    let (code, out, _) = run(&["example", "--params", "0,0,0,0,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "dim 5\nentries\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n"
    );

    // rational parameters round-trip through the file
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("family.mat");
    let (code, _, _) = run(&[
        "example",
        "--params",
        "1/2,0,0,0,2,0,0",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "dim 5\nentries\n0 1/2 0 0 0\n0 0 2 0 0\n0 0 0 0 0\n0 0 0 0 0\n0 0 0 0 0\n"
    );
    let map = keller::druzkowski::DruzkowskiMap::read_matrix_file(&path).unwrap();
    assert_eq!(map.to_matrix_text(), text);
}

#[test]
fn example_rejects_bad_params() {
    let (code, _, err) = run(&["example", "--params", "1,2,3"]);
    assert_eq!(code, 1);
    assert!(err.contains("7 rationals"));

    let (code, _, err) = run(&["example", "--params", "1,0,0,0,1/0,0,0"]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid rational"), "stderr: {err}");
}

#[test]
fn conjecture_exit_codes_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("run.txt");
    let (code, out, _) = run(&[
        "conjecture",
        "--dim",
        "4",
        "--g",
        "2",
        "--trials",
        "5",
        "--seed",
        "9",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("5 CONSISTENT, 0 COUNTEREXAMPLE, 0 INCONCLUSIVE"));
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.starts_with("conjecture-report v1\nseed 9\ndim 4\nlevels 2\ntrials 5\n"));

    // a starved budget turns trials inconclusive and exits 2
    let starved = dir.path().join("starved.txt");
    let (code, out, _) = run(&[
        "conjecture",
        "--dim",
        "5",
        "--g",
        "3",
        "--trials",
        "3",
        "--seed",
        "1",
        "--density",
        "1",
        "--budget",
        "3",
        "--out",
        starved.to_str().unwrap(),
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("INCONCLUSIVE"));

    // input errors exit 1
    let (code, _, _) = run(&["conjecture", "--dim", "4", "--g", "9", "--trials", "1"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&["conjecture", "--dim", "4", "--g", "2", "--trials", "0"]);
    assert_eq!(code, 1);
    let (code, _, _) = run(&[
        "conjecture", "--dim", "4", "--g", "2", "--trials", "1", "--density", "7/2",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn unknown_subcommand_exits_one() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn spawned_binary_matches_in_process_behavior() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_golden_matrix(dir.path());
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_keller"))
        .args(["invert", path.to_str().unwrap()])
        .output()
        .expect("binary runs");
    assert!(output.status.success());
    let stdout = String::from_utf8(output.stdout).unwrap();
    assert!(stdout.contains("G1 = Y3^9 - 3*Y2*Y3^6 + 3*Y2^2*Y3^3 - Y2^3 + Y1"));
    assert!(stdout.contains("deg G = 9"));

    let (_, in_process, _) = run(&["invert", path.to_str().unwrap()]);
    assert_eq!(stdout, in_process);
}
