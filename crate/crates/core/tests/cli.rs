use std::fs;
use std::path::PathBuf;

use z4rm::cli::{run, EXIT_BUDGET, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use z4rm::format::parse_code;

fn z4rm(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("z4rm").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn temp_file(name: &str, contents: &str) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    (dir, path)
}

fn lrm12_file() -> (tempfile::TempDir, PathBuf) {
    let (_, text, _) = z4rm(&["build", "1", "2"]);
    temp_file("lrm12.z4", &text)
}

#[test]
fn verify_1_2_passes() {
    let (code, out, _) = z4rm(&["verify", "1", "2", "--machine"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("claim=length expected=2 got=2 status=pass"));
    assert!(out.contains("claim=log2_size expected=3 got=3 status=pass"));
    assert!(out.contains("claim=min_lee_distance expected=2 got=2 status=pass"));
    assert!(out.contains("image_linear=true pass=true"));
    let (code, out, _) = z4rm(&["verify", "1", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.starts_with("LRM(1,2): PASS"));
}

#[test]
fn verify_budget_exceeded_is_exit_3() {
    let (code, out, _) = z4rm(&["verify", "3", "5", "--budget", "20", "--machine"]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(out.contains("got=skipped status=skipped"));
    let (code, _, err) = z4rm(&["verify", "4", "3"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("invalid order"));
}

#[test]
fn verify_all_summary() {
    let (code, out, _) = z4rm(&["verify-all", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out.lines().count(), 1 + 2 + 3 + 4);
    assert!(out.lines().skip(1).all(|l| l.contains("pass")));
    // skipped rows do not fail the run
    let (code, out, _) = z4rm(&["verify-all", "4", "--budget", "12"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("skipped"));
}

#[test]
fn compare_qrm_rows() {
    let (code, out, _) = z4rm(&["compare-qrm", "5"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.lines().any(|l| l == "3 5 26 30 distinct"));
    assert!(out.lines().any(|l| l == "5 5 32 32 equal"));
}

#[test]
fn member_present_and_absent() {
    let (_dir, path) = lrm12_file();
    let p = path.to_str().unwrap();
    let (code, out, _) = z4rm(&["member", p, "10"]);
    assert_eq!((code, out.trim()), (EXIT_FAIL, "absent"));
    let (code, out, _) = z4rm(&["member", p, "20"]);
    assert_eq!((code, out.trim()), (EXIT_PASS, "present"));
    let (code, _, _) = z4rm(&["member", p, "104"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn build_output_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.z4");
    let (code, _, _) = z4rm(&["build", "2", "4", "-o", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.is_ascii() && !text.contains('\r'));
    assert!(text.lines().all(|l| !l.ends_with(' ')));
    let c = parse_code(&text).unwrap();
    assert_eq!(c.n(), 8);
    assert_eq!(c.log2_size(), 11);
    let (_, printed, _) = z4rm(&["build", "2", "4"]);
    assert_eq!(printed, text);
}

#[test]
fn build_with_override() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/data/lrm_2_4_nonlinear.z4");
    let spec = format!("2,4={data}");
    let (code, out, _) = z4rm(&["build", "3", "5", "--override", &spec]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("override:nonlinear-extended-perfect-16"));
    // wrong node: length mismatch is rejected
    let spec = format!("1,3={data}");
    let (code, _, err) = z4rm(&["build", "3", "5", "--override", &spec]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("length"));
    let (code, _, _) = z4rm(&["build", "3", "5", "--override", "nonsense"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn mindist_wdist_enumerate() {
    let (_dir, path) = lrm12_file();
    let p = path.to_str().unwrap();
    assert_eq!(z4rm(&["mindist", p]).1.trim(), "2");
    assert_eq!(z4rm(&["wdist", p]).1, "0 1\n2 6\n4 1\n");
    let (code, out, _) = z4rm(&["enumerate", p]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "00\n02\n11\n13\n22\n20\n33\n31\n");
    let (code, _, _) = z4rm(&["enumerate", p, "--budget", "2"]);
    assert_eq!(code, EXIT_BUDGET);
}

#[test]
fn gray_and_ungray() {
    let (_dir, path) = lrm12_file();
    let (code, out, _) = z4rm(&["gray", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let mut images: Vec<&str> = out.lines().collect();
    images.sort();
    // the even-weight words of length 4
    assert_eq!(
        images,
        ["0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"]
    );
    let (_d2, words) = temp_file("w.txt", "22\n13\n");
    assert_eq!(z4rm(&["gray", words.to_str().unwrap()]).1, "1111\n0110\n");
    let (_d3, bits) = temp_file("b.txt", "1111\n0110\n0011\n");
    assert_eq!(z4rm(&["ungray", bits.to_str().unwrap()]).1, "22\n13\n11\n");
    let (_d4, odd) = temp_file("b.txt", "011\n");
    assert_eq!(z4rm(&["ungray", odd.to_str().unwrap()]).0, EXIT_USAGE);
}

#[test]
fn image_linear_both_ways() {
    let (_dir, path) = temp_file("w.z4", "Z4CODE v1 n=4 rows=2\n1013\n0112\n");
    let p = path.to_str().unwrap();
    assert_eq!(z4rm(&["image-linear", p]).1.trim(), "nonlinear");
    assert_eq!(z4rm(&["image-linear", p, "--brute"]).1.trim(), "nonlinear");
    let (_d, path) = lrm12_file();
    assert_eq!(
        z4rm(&["image-linear", path.to_str().unwrap()]).1.trim(),
        "linear"
    );
}

#[test]
fn rm_generators() {
    let (code, out, _) = z4rm(&["rm", "1", "2"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(out, "RM(1,2) n=4 rows=3\n1111\n0011\n0101\n");
}

#[test]
fn search_small() {
    let (code, out, _) = z4rm(&["search-nonlinear", "2", "3", "2", "--limit", "2"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.starts_with("found 0 codes"));
    let (code, out, _) = z4rm(&["search-nonlinear", "4", "4", "3"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("Z4CODE v1 n=4 rows=2"));
    let (code, _, _) = z4rm(&["search-nonlinear", "9", "5", "8"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_errors() {
    let (code, _, err) = z4rm(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("Usage"));
    let (code, _, _) = z4rm(&["verify", "1", "2", "--bogus"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = z4rm(&["mindist", "/nonexistent/file.z4"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, out, _) = z4rm(&["--help"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("verify-all"));
}

#[test]
fn malformed_file_reports_position() {
    let (_dir, path) = temp_file("bad.z4", "Z4CODE v1 n=2 rows=1\n012\n");
    let (code, _, err) = z4rm(&["mindist", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
}
