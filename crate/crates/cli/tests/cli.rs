use std::path::PathBuf;
use std::process::{Command, Output};

fn arck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arck")).args(args).output().expect("run arck")
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "sessions", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir = std::env::temp_dir().join(format!("arck-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn fixtures_pass_with_exit_zero() {
    for f in ["basics.ark", "counterexamples.ark"] {
        let o = arck(&["run", &fixture(f)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn json_has_one_record_per_task() {
    let o = arck(&["run", &fixture("counterexamples.ark"), "--json", "--no-timings"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 6);
    for line in out.lines() {
        for key in ["\"task\":", "\"inputs\":", "\"verdict\":", "\"witnesses\":", "\"timings\":{}"] {
            assert!(line.contains(key), "{key} missing in {line}");
        }
    }
    assert!(out.contains("\"witnesses\":[\"x*y*z\"]"));
    // byte-for-byte reproducible
    let again = arck(&["run", &fixture("counterexamples.ark"), "--json", "--no-timings", "--threads", "2"]);
    assert_eq!(out, stdout(&again));
}

#[test]
fn task_filter_and_flags() {
    let o = arck(&["run", &fixture("basics.ark"), "--task", "line", "--deg-cap", "40", "--seed", "9"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("task line (ar): PASS"));
    assert_eq!(out.matches("\ntask ").count(), 0);
    let o = arck(&["run", &fixture("basics.ark"), "--task", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let fail = scratch("fail.ark", "task example1 { n = 2, expect = (out: yes) }\n");
    assert_eq!(arck(&["run", &fail]).status.code(), Some(1));

    let bad = scratch("bad.ark", "ring R { vars = x }\nideal I in S = x\n");
    let o = arck(&["run", &bad]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains(":2:12: unknown ring `S`"), "{err}");

    let capped = scratch("capped.ark", "task example1 { n = 3 }\n");
    let o = arck(&["run", &capped, "--deg-cap", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
    assert!(stdout(&o).contains("RESOURCE-CAP"));

    assert_eq!(arck(&["run", "/nonexistent/session.ark"]).status.code(), Some(2));
}

#[test]
fn fmt_prints_canonical_form() {
    let p = scratch("fmt.ark", "ring {vars=x,y,z; weights=1,1,2; quotient=z^2}\nideal I = x^2, y^2, xy + z\ntask ar{I=I,J=I,nmax=2}\n");
    let o = arck(&["fmt", &p]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(
        out,
        "ring R { field = Q; vars = x, y, z; weights = 1, 1, 2; order = grevlex; quotient = z^2 }\n\
         ideal I in R = x^2, y^2, x*y + z\n\
         task ar { I = I, J = I, mode = table, nmax = 2 }\n"
    );
    // the canonical form is a fixed point
    let q = scratch("fmt2.ark", &out);
    assert_eq!(stdout(&arck(&["fmt", &q])), out);
}
