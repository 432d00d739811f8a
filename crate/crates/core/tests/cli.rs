use std::fs;
use std::path::PathBuf;

use mixlat::cli::run;

struct Output {
    status: i32,
    stdout: String,
    stderr: String,
}

fn mixlat(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mixlat").chain(args.iter().copied());
    let status = run(argv, &mut out, &mut err);
    Output {
        status,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mixlat-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p
}

fn divisors_file(n: u64) -> PathBuf {
    let o = mixlat(&["divisor", &n.to_string()]);
    assert_eq!(o.status, 0);
    scratch(&format!("d{n}.mlx"), &o.stdout)
}

#[test]
fn rat_lower_and_upper() {
    let o = mixlat(&["rat", "lower", "7", "5"]);
    assert_eq!((o.status, o.stdout.as_str()), (0, "7/2\n"));
    assert_eq!(mixlat(&["rat", "lower", "14", "10"]).stdout, "7\n");
    assert_eq!(mixlat(&["rat", "upper", "3/2", "4"]).stdout, "9/2\n");
}

#[test]
fn rat_rejects_bad_numbers() {
    for bad in ["0", "-1", "1/0", "x"] {
        let o = mixlat(&["rat", "lower", bad, "5"]);
        assert_eq!(o.status, 2, "{bad}");
        assert!(o.stderr.starts_with("error:"), "{bad}: {}", o.stderr);
    }
}

#[test]
fn rat_check_json() {
    let o = mixlat(&["rat", "check", "--seed", "1", "--count", "50", "--bound", "1000", "--json"]);
    assert_eq!(o.status, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["failures"], 0);
    assert_eq!(v["samples"], 50);
}

#[test]
fn laws_json_on_divisors_of_twelve() {
    let f = divisors_file(12);
    let o = mixlat(&["laws", f.to_str().unwrap(), "--json"]);
    assert_eq!(o.status, 0);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["mixed_lattice"], true);
    assert_eq!(v["laws"]["MONO_LOWER"]["witness"], serde_json::json!(["2", "4", "6"]));
    assert_eq!(v["summary"]["prereg"], true);
    for name in [
        "QR1", "QR2", "MONO_LOWER", "MONO_UPPER", "DIST1", "DIST2", "ASS1", "ASS2", "MOD1", "COND_J",
    ] {
        assert_eq!(v["laws"][name]["holds"], false, "{name}");
    }
}

#[test]
fn laws_text_table() {
    let f = divisors_file(12);
    let o = mixlat(&["laws", f.to_str().unwrap()]);
    assert_eq!(o.status, 0);
    assert!(o.stdout.contains("MONO_LOWER   fails  at (2, 4, 6)"), "{}", o.stdout);
    assert!(o.stdout.contains("PREREG       holds"), "{}", o.stdout);
}

#[test]
fn validate_exit_codes() {
    let one = scratch("one.mlx", "elements: a\nleq:\nsleq:\n");
    assert_eq!(mixlat(&["validate", one.to_str().unwrap()]).status, 0);
    let discrete = scratch("discrete.mlx", "elements: a b\n");
    let o = mixlat(&["validate", discrete.to_str().unwrap()]);
    assert_eq!(o.status, 1);
    assert!(o.stdout.contains("upper envelope of (a, b)"), "{}", o.stdout);
    let broken = scratch("broken.mlx", "elements: a b\nleq:\na b\nb a\n");
    let o = mixlat(&["validate", broken.to_str().unwrap()]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("line 4"), "{}", o.stderr);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(mixlat(&[]).status, 2);
    assert_eq!(mixlat(&["frobnicate"]).status, 2);
    assert_eq!(mixlat(&["convert", "x.mlx"]).status, 2);
    assert_eq!(mixlat(&["enumerate", "9"]).status, 2);
    assert_eq!(mixlat(&["--help"]).status, 0);
}

#[test]
fn help_documents_edge_styles() {
    let o = mixlat(&["--help"]);
    assert!(o.stdout.contains("dotted"), "{}", o.stdout);
}

#[test]
fn missing_file_is_structural_error() {
    assert_eq!(mixlat(&["laws", "/nonexistent/x.mlx"]).status, 1);
}

#[test]
fn convert_round_trip() {
    let f = divisors_file(6);
    let o = mixlat(&["convert", f.to_str().unwrap(), "--to", "algebra"]);
    assert_eq!(o.status, 0, "{}", o.stderr);
    assert!(o.stdout.starts_with("elements: 1 2 3 6\nupper:\n"), "{}", o.stdout);
    let mla = scratch("d6.mla", &o.stdout);
    let back = mixlat(&["convert", mla.to_str().unwrap(), "--to", "orders"]);
    assert_eq!(back.status, 0, "{}", back.stderr);
    assert_eq!(
        mixlat::io::mlx::read_mlx(&back.stdout).unwrap(),
        mixlat::gen::divisor_mixed_lattice(6).unwrap()
    );
    let axioms = mixlat(&["axioms", mla.to_str().unwrap(), "--json"]);
    assert_eq!(axioms.status, 0);
    let v: serde_json::Value = serde_json::from_str(&axioms.stdout).unwrap();
    assert_eq!(v["mixed_lattice"], true);
    assert_eq!(v["summary"]["quasi_regular"], true);
}

#[test]
fn convert_refusals_explained() {
    // two chains in opposite directions: a mixed lattice without r0
    let f = scratch("opposed.mlx", "elements: a b\nleq:\na b\nsleq:\na b\n");
    assert_eq!(mixlat(&["convert", f.to_str().unwrap(), "--to", "algebra"]).status, 0);
    let f = scratch(
        "no-r0.mlx",
        "elements: 0 1 2 3\nleq:\n0 1\n1 2\n2 3\nsleq:\n0 2\n2 1\n1 3\n",
    );
    let o = mixlat(&["convert", f.to_str().unwrap(), "--to", "algebra"]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("refused"), "{}", o.stderr);
    let bad = scratch("proj.mla", "elements: a b\nupper:\na a\nb b\nlower:\na a\nb b\n");
    let o = mixlat(&["convert", bad.to_str().unwrap(), "--to", "orders"]);
    assert_eq!(o.status, 1);
    assert!(o.stderr.contains("refused: axiom M1 fails at (a, b)"), "{}", o.stderr);
}

#[test]
fn sublattice_both_readings() {
    let f = divisors_file(24);
    let path = f.to_str().unwrap();
    let o = mixlat(&["sublattice", path, "--subset", "1,2,3,4,6,12"]);
    assert_eq!(o.status, 0);
    assert_eq!(o.stdout, "not closed: 4 ⩗ 6 = 8 lies outside the subset\n");
    let o = mixlat(&["sublattice", path, "--subset", "1,2,3,4,6,12", "--induced"]);
    assert_eq!(o.status, 0);
    assert!(o.stdout.starts_with("induced structure is a mixed lattice\n"), "{}", o.stdout);
    let o = mixlat(&["sublattice", path, "--subset", "1,2,4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["closed"], true);
    assert_eq!(mixlat(&["sublattice", path, "--subset", "1,5"]).status, 1);
}

#[test]
fn enumerate_summary() {
    let o = mixlat(&["enumerate", "3", "--summary-only"]);
    assert_eq!(o.status, 0);
    assert!(o.stdout.contains("posets: 19\n"), "{}", o.stdout);
    assert!(o.stdout.contains("mixed lattices: 6\n"), "{}", o.stdout);
    assert!(o.stdout.contains("r0 only: 0\n"), "{}", o.stdout);
    let o = mixlat(&["enumerate", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["summary"]["mixed_lattices"], 2);
    assert_eq!(v["structures"].as_array().unwrap().len(), 2);
}

#[test]
fn dot_writes_file() {
    let f = divisors_file(12);
    let out = f.with_extension("dot");
    let o = mixlat(&["dot", f.to_str().unwrap(), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status, 0);
    assert!(o.stdout.is_empty());
    let text = fs::read_to_string(out).unwrap();
    assert!(text.starts_with("graph mixed_lattice {\n"));
    assert!(text.contains("  \"4\" -- \"6\" [style=dashed];\n"));
}
