use std::path::{Path, PathBuf};
use std::process::Command;

use subbar::Barcode;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_subbar"))
        .args(args.iter().map(|a| {
            if a.contains('.') && !a.starts_with('-') {
                data(a).into_os_string()
            } else {
                a.into()
            }
        }))
        .output()
        .unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn persist_golden() {
    let (out, code) = run(&["persist", "path3.complex", "path3_f.values"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("persist_path3.txt"));
    assert_eq!(Barcode::parse(&out).unwrap().to_text(), out);
}

#[test]
fn persist_single_vertex() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.complex");
    let f = dir.path().join("f.values");
    std::fs::write(&k, "0\n").unwrap();
    std::fs::write(&f, "0 2.5\n").unwrap();
    let (out, code) = run(&["persist", k.to_str().unwrap(), f.to_str().unwrap()]);
    assert_eq!((out.as_str(), code), ("0 2.5 inf\n", 0));
}

#[test]
fn persist_missing_values_exits_2() {
    let (_, code) = run(&["persist", "path3.complex", "missing.values"]);
    assert_eq!(code, 2);
    let (_, code) = run(&["persist", "path3.complex", "two_points.values"]);
    assert_eq!(code, 2);
}

#[test]
fn image_golden() {
    let (out, code) = run(&["image", "path3.complex", "path3_upper.values", "path3_lower.values"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("image_path3.txt"));
    let (same, _) = run(&["image", "path3.complex", "path3_f.values", "path3_f.values"]);
    assert_eq!(same, golden("persist_path3.txt"));
}

#[test]
fn image_bound_violation_exits_2() {
    let (out, code) = run(&["image", "path3.complex", "path3_lower.values", "path3_upper.values"]);
    assert_eq!((out.as_str(), code), ("", 2));
}

#[test]
fn check_golden() {
    let (out, code) = run(&["check", "a.barcode", "b.barcode"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("check_a_in_b.txt"));
    let (out, code) = run(&["check", "a.barcode", "b.barcode", "--witness"]);
    assert_eq!((out.as_str(), code), ("SUB-BARCODE\n0 -> 0\n", 0));
    let (out, code) = run(&["check", "b.barcode", "a.barcode"]);
    assert_eq!((out.as_str(), code), ("NOT-SUB-BARCODE\nunmatched: 0\n", 1));
}

#[test]
fn check_empty_barcode() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.barcode");
    std::fs::write(&empty, "# nothing\n").unwrap();
    let (_, code) = run(&["check", empty.to_str().unwrap(), "b.barcode"]);
    assert_eq!(code, 0);
}

#[test]
fn check_parse_failure_exits_2() {
    let (_, code) = run(&["check", "path3.complex", "b.barcode"]);
    assert_eq!(code, 2);
}

#[test]
fn dist_values() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_owned()
    };
    let wide = write("wide.barcode", "0 0 10\n");
    let narrow = write("narrow.barcode", "0 1 9\n");
    let inf = write("inf.barcode", "0 0 inf\n");
    let empty = write("empty.barcode", "");
    assert_eq!(run(&["dist", &wide, &narrow]), ("1\n".into(), 0));
    assert_eq!(run(&["dist", &wide, &wide, "--metric", "bottleneck"]), ("0\n".into(), 0));
    assert_eq!(run(&["dist", &wide, &wide, "--metric", "sub"]), ("0\n".into(), 0));
    assert_eq!(run(&["dist", &inf, &empty]), ("inf\n".into(), 0));
    let (out, _) = run(&["dist", &wide, &narrow, "--witness"]);
    assert_eq!(out, "1\n0 -> 0\n");
}

#[test]
fn match_lists_pairs() {
    assert_eq!(run(&["match", "a.barcode", "b.barcode"]), ("0 -> 0\n".into(), 0));
}

#[test]
fn hypothesis_golden() {
    let (out, code) = run(&[
        "hypothesis",
        "path3.complex",
        "path3_lower.values",
        "path3_upper.values",
        "path3_lower.values",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("hypothesis_path3.txt"));
}

#[test]
fn hypothesis_falsified_by_component_count() {
    let (out, code) = run(&[
        "hypothesis",
        "two_points.complex",
        "path2_u.values",
        "two_points.values",
        "two_points.values",
        "--u-complex",
        "path2.complex",
    ]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FALSIFIED\n"));
}

#[test]
fn hypothesis_exact_match_is_consistent() {
    let (out, code) = run(&[
        "hypothesis",
        "path3.complex",
        "path3_f.values",
        "path3_f.values",
        "path3_f.values",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("CONSISTENT\n"));
}

#[test]
fn induced_golden() {
    let (out, code) = run(&[
        "induced",
        "path3.complex",
        "path3_upper.values",
        "path3_mid.values",
        "path3_lower.values",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("induced_path3.txt"));
}

#[test]
fn induced_identity() {
    let (out, code) = run(&["induced", "path3.complex", "path3_f.values", "path3_f.values", "path3_f.values"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0 0 [0,inf) -> 0 [0,inf)\n0 1 [1,2) -> 1 [1,2)\n");
    let (sup, _) = run(&[
        "induced",
        "path3.complex",
        "path3_f.values",
        "path3_f.values",
        "path3_f.values",
        "--super",
    ]);
    assert_eq!(sup, out);
}

#[test]
fn induced_bound_violation_exits_2() {
    let (_, code) = run(&[
        "induced",
        "path3.complex",
        "path3_lower.values",
        "path3_mid.values",
        "path3_upper.values",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn plot_golden() {
    let (out, code) = run(&["plot", "path3_f.barcode"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("path3_f.svg"));
    let (out, _) = run(&["plot", "a.barcode", "b.barcode", "--match", "ab.matching"]);
    assert_eq!(out, golden("a_in_b.svg"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("plot.svg");
    let (stdout, code) = run(&["plot", "path3_f.barcode", "--out", target.to_str().unwrap()]);
    assert_eq!((stdout.as_str(), code), ("", 0));
    assert_eq!(std::fs::read_to_string(target).unwrap(), golden("path3_f.svg"));
}

#[test]
fn dim_flag_limits_output() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("circle.complex");
    let f = dir.path().join("circle.values");
    std::fs::write(&k, "0 1\n1 2\n0 2\n").unwrap();
    std::fs::write(&f, "0 0\n1 0\n2 0\n").unwrap();
    let (k, f) = (k.to_str().unwrap(), f.to_str().unwrap());
    assert_eq!(run(&["persist", k, f]).0, "0 0 inf\n1 0 inf\n");
    assert_eq!(run(&["persist", k, f, "--dim", "0"]).0, "0 0 inf\n");
}

#[test]
fn hypothesis_never_falsifies_a_sandwiched_function() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand::rngs::StdRng::seed_from_u64(31);
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    for _ in 0..40 {
        let n = rng.gen_range(2..8);
        let mut complex = String::new();
        for _ in 0..n {
            let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if x != y && y != z && x != z {
                complex += &format!("{x} {y} {z}\n");
            } else if x != y {
                complex += &format!("{x} {y}\n");
            }
        }
        complex += &(0..n).map(|v| format!("{v}\n")).collect::<String>();
        let mut values = [String::new(), String::new(), String::new()];
        for v in 0..n {
            let l = rng.gen_range(0..6) as f64;
            let u = l + rng.gen_range(0..3) as f64 * 0.5;
            let g = u + rng.gen_range(0..3) as f64 * 0.5;
            for (text, x) in values.iter_mut().zip([g, u, l]) {
                *text += &format!("{v} {x}\n");
            }
        }
        std::fs::write(path("k.complex"), &complex).unwrap();
        for (name, text) in ["g.values", "u.values", "l.values"].iter().zip(&values) {
            std::fs::write(path(name), text).unwrap();
        }
        let (out, code) = run(&[
            "hypothesis",
            &path("k.complex"),
            &path("u.values"),
            &path("g.values"),
            &path("l.values"),
        ]);
        assert_eq!(code, 0, "{complex}{out}");
        assert!(out.starts_with("CONSISTENT\n"));
    }
}
