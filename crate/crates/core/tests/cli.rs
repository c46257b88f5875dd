mod common;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::indefinite;
use tbt_grc::cost::CSV_HEADER;
use tbt_grc::{DenseHermitian, TbtGenerator};

fn tbt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbt"))
        .args(args)
        .output()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &Path, name: &str, n1: &str, n2: &str, seed: &str) -> PathBuf {
    let out = dir.join(name);
    let o = tbt(&[
        "gen",
        "--n1",
        n1,
        "--n2",
        n2,
        "--seed",
        seed,
        "--output",
        path_str(&out),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = gen(dir.path(), "a.txt", "3", "4", "11");
    let b = gen(dir.path(), "b.txt", "3", "4", "11");
    let c = gen(dir.path(), "c.txt", "3", "4", "12");
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_ne!(fs::read(&a).unwrap(), fs::read(&c).unwrap());
    let g = TbtGenerator::read_text(fs::read(&a).unwrap().as_slice()).unwrap();
    assert_eq!((g.n1(), g.n2()), (3, 4));
}

#[test]
fn invert_methods_agree() {
    let dir = tempfile::tempdir().unwrap();
    let input = gen(dir.path(), "g.txt", "3", "3", "5");
    let mut inverses = Vec::new();
    for method in ["fast", "oracle"] {
        let out = dir.path().join(format!("{method}.txt"));
        let o = tbt(&[
            "invert",
            "--input",
            path_str(&input),
            "--method",
            method,
            "--output",
            path_str(&out),
            "--counter",
        ]);
        assert!(o.status.success());
        let stdout = String::from_utf8(o.stdout).unwrap();
        assert!(stdout.starts_with("mul="), "{stdout}");
        inverses.push(DenseHermitian::read_text(fs::read(&out).unwrap().as_slice()).unwrap());
    }
    let diff = (inverses[0].as_matrix() - inverses[1].as_matrix()).frobenius_norm();
    assert!(diff <= 1e-10 * inverses[1].as_matrix().frobenius_norm());
}

#[test]
fn invert_writes_factor_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = gen(dir.path(), "g.txt", "2", "3", "8");
    let (out, factor) = (dir.path().join("inv.txt"), dir.path().join("factor.txt"));
    let o = tbt(&[
        "invert",
        "--input",
        path_str(&input),
        "--output",
        path_str(&out),
        "--factor",
        path_str(&factor),
    ]);
    assert!(o.status.success());
    let f = tbt_grc::InverseFactor::read_text(fs::read(&factor).unwrap().as_slice()).unwrap();
    let inv = DenseHermitian::read_text(fs::read(&out).unwrap().as_slice()).unwrap();
    assert_eq!(f.n(), 6);
    assert!(
        (f.inverse_dense().as_matrix() - inv.as_matrix()).max_abs()
            <= 1e-14 * inv.as_matrix().max_abs()
    );
}

#[test]
fn verify_passes_on_identity_and_random() {
    let dir = tempfile::tempdir().unwrap();
    let identity = dir.path().join("id.txt");
    TbtGenerator::identity(3, 3)
        .write_text(fs::File::create(&identity).unwrap())
        .unwrap();
    let random = gen(dir.path(), "r.txt", "4", "3", "2");
    for input in [&identity, &random] {
        let o = tbt(&["verify", "--input", path_str(input)]);
        assert_eq!(o.status.code(), Some(0));
        assert!(String::from_utf8(o.stdout).unwrap().contains("PASS"));
    }
}

#[test]
fn not_positive_definite_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.txt");
    indefinite(3, 3)
        .write_text(fs::File::create(&input).unwrap())
        .unwrap();
    let out = dir.path().join("inv.txt");
    for method in ["fast", "oracle"] {
        let o = tbt(&[
            "invert",
            "--input",
            path_str(&input),
            "--method",
            method,
            "--output",
            path_str(&out),
        ]);
        assert_eq!(o.status.code(), Some(2), "{method}");
    }
    assert_eq!(
        tbt(&["verify", "--input", path_str(&input)]).status.code(),
        Some(2)
    );
}

#[test]
fn opcount_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ops.csv");
    let o = tbt(&[
        "opcount",
        "--min",
        "2",
        "--max",
        "5",
        "--output",
        path_str(&out),
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], CSV_HEADER);
    assert_eq!(lines[1], "2,2,23,13.5,24,0.958333");
    assert_eq!(lines.len(), 5);
}

#[test]
fn wwr_reports_residual() {
    let dir = tempfile::tempdir().unwrap();
    let input = gen(dir.path(), "g.txt", "2", "4", "3");
    let out = dir.path().join("coef.txt");
    let o = tbt(&[
        "wwr",
        "--input",
        path_str(&input),
        "--output",
        path_str(&out),
    ]);
    assert!(o.status.success());
    let stdout = String::from_utf8(o.stdout).unwrap();
    let residual: f64 = stdout
        .trim()
        .strip_prefix("residual=")
        .unwrap()
        .parse()
        .unwrap();
    assert!(residual <= 1e-9);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.lines().last().unwrap().starts_with("# residual "));
    assert_eq!(text.split("\n\n").count(), 3);
}

#[test]
fn usage_and_input_errors_exit_with_three() {
    assert_eq!(tbt(&["invert"]).status.code(), Some(3));
    assert_eq!(tbt(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(
        tbt(&[
            "opcount",
            "--min",
            "5",
            "--max",
            "2",
            "--output",
            "/dev/null"
        ])
        .status
        .code(),
        Some(3)
    );
    assert_eq!(
        tbt(&["verify", "--input", "/nonexistent/generator.txt"])
            .status
            .code(),
        Some(3)
    );

    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("single.txt");
    TbtGenerator::identity(2, 1)
        .write_text(fs::File::create(&single).unwrap())
        .unwrap();
    let out = dir.path().join("coef.txt");
    assert_eq!(
        tbt(&[
            "wwr",
            "--input",
            path_str(&single),
            "--output",
            path_str(&out)
        ])
        .status
        .code(),
        Some(3)
    );
}
