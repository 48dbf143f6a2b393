use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn braces(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_braces"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn catalog(name: &str) -> String {
    let o = braces(&["catalog", name, "--quiet"], None);
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn catalog_pipes_into_check() {
    let dgt = braces(&["catalog", "s3c6"], None);
    let o = braces(&["check", "-"], Some(&stdout(&dgt)));
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    assert!(out.contains("brace (axiom): true"));
    assert!(out.contains("brace (lambda): true"));
}

#[test]
fn catalog_emits_seven_lines_for_z2() {
    assert_eq!(
        catalog("cyclic(2)"),
        "digroup 2\nstar\n0 1\n1 0\ncirc\n0 1\n1 0\n"
    );
}

#[test]
fn decompose_s3c6() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s.dgt", &catalog("s3c6"));
    let o = braces(&["decompose", &path], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("1 nontrivial"));
    assert!(out.contains("B = {0 3}  I = {0 4 5}"));
    assert!(out.contains("phi_star nontrivial, phi_circ trivial, lambda nontrivial"));
}

#[test]
fn non_brace_exits_one() {
    let dir = TempDir::new().unwrap();
    let z2 = write(&dir, "z2.dgt", &catalog("cyclic(2)"));
    let z3 = write(&dir, "z3.dgt", &catalog("cyclic(3)"));
    // sign action in φ∘ only
    let action = "action 2 3\n\
                  phi_star: 0 1 2\nphi_circ: 0 1 2\nlambda: 0 1 2\n\
                  phi_star: 0 1 2\nphi_circ: 0 2 1\nlambda: 0 1 2\n";
    let act = write(&dir, "a.act", action);
    let out_path = dir.path().join("outer.dgt");
    let o = braces(
        &[
            "outer",
            &z2,
            &z3,
            &act,
            "--emit",
            out_path.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("brace (axiom): false"));
    let emitted = fs::read_to_string(&out_path).unwrap();
    let o = braces(&["check", out_path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    assert!(emitted.starts_with("digroup 6\n"));
}

#[test]
fn outer_brace_exits_zero_and_output_is_parseable() {
    let dir = TempDir::new().unwrap();
    let z2 = write(&dir, "z2.dgt", &catalog("cyclic(2)"));
    let z3 = write(&dir, "z3.dgt", &catalog("cyclic(3)"));
    let action = "action 2 3\n\
                  phi_star: 0 1 2\nphi_circ: 0 1 2\nlambda: 0 1 2\n\
                  phi_star: 0 2 1\nphi_circ: 0 1 2\nlambda: 0 1 2\n";
    let act = write(&dir, "a.act", action);
    let o = braces(&["outer", &z2, &z3, &act], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().filter(|l| !l.starts_with('#')).count() == 15);
    let o = braces(&["check", "-"], Some(&out));
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_exits_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(
        &dir,
        "bad.dgt",
        "digroup 2\nstar\n1 0\n0 1\ncirc\n0 1\n1 0\n",
    );
    let o = braces(&["check", &bad], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("identity"));

    let o = braces(&["check", "-"], Some("digroup 2\nstar\n0 1\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let o = braces(&["check", "/nonexistent/file.dgt"], None);
    assert_eq!(o.status.code(), Some(2));

    let o = braces(&["catalog", "nonsense"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn max_order_bound_exits_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s4.dgt", &catalog("s4"));
    let o = braces(&["ideals", &path], None);
    assert_eq!(o.status.code(), Some(2));
    let o = braces(&["ideals", &path, "--max-order", "24"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ideals: 4"));
}

#[test]
fn lambda_and_ideals() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s.dgt", &catalog("s3c6"));
    let out = stdout(&braces(&["lambda", &path], None));
    assert!(out.contains("lambda[1]: 0 2 1 3 5 4"));
    assert!(out.contains("lambda[4]: 0 1 2 3 4 5"));
    let out = stdout(&braces(&["ideals", &path], None));
    assert_eq!(out, "ideals: 3\n{0}\n{0 4 5}\n{0 1 2 3 4 5}\n");
}

#[test]
fn commutator_and_center() {
    let dir = TempDir::new().unwrap();
    let s3 = write(&dir, "s3.dgt", &catalog("s3"));
    let o = braces(
        &[
            "commutator",
            &s3,
            "--i",
            "0,1,2,3,4,5",
            "--j",
            "0,1,2,3,4,5",
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[I,J] = {0 4 5}"));
    let o = braces(&["commutator", &s3, "--i", "0,1", "--j", "0"], None);
    assert_eq!(o.status.code(), Some(1));
    let o = braces(&["center", &s3], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("center: {0}\n"));
}

#[test]
fn ybe_emits_solution() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "s.dgt", &catalog("s3c6"));
    let sol = dir.path().join("s.ybe");
    let o = braces(&["ybe", &path, "--emit", sol.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("braid: true"));
    let text = fs::read_to_string(&sol).unwrap();
    assert_eq!(text.lines().count(), 37);
    assert!(text.starts_with("ybe 6\n0 0 0 0\n"));
}

#[test]
fn enumerate_corpus() {
    let o = braces(&["enumerate", "--star", "s3", "--braces-only"], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# 8 braces"));
    assert_eq!(out.matches("digroup 6").count(), 8);

    let dir = TempDir::new().unwrap();
    let path = write(&dir, "z4.dgt", &catalog("cyclic(4)"));
    let o = braces(&["enumerate", "--star", &path, "--quiet"], None);
    assert_eq!(stdout(&o).matches("digroup 4").count(), 4);
    assert!(Path::new(&path).exists());
}
