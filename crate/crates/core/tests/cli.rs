use std::path::Path;
use std::process::{Command, Output};

fn semimono(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semimono"))
        .args(args)
        .env("SEMIMONO_WORKERS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn check_exit_codes_and_replay() {
    let dir = tempfile::tempdir().unwrap();
    let l = write(dir.path(), "l.vox", "dim 2\n# L tromino\n0 0\n1 0\n0 1\n");
    let u = write(dir.path(), "u.vox", "dim 2\n0 0\n1 0\n2 0\n0 1\n2 1\n");
    let bad = write(dir.path(), "bad.vox", "dim 2\n0 0 0\n");

    let o = semimono(&["check", &l]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("verdict=true").count(), 4);

    let o = semimono(&["check", &u, "--method", "band"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert_eq!(text, "verdict=false\nmethod=band\nwitness=cone [x2>1] components=2\n");
    let witness = text.lines().find_map(|l| l.strip_prefix("witness=")).unwrap();
    let o = semimono(&["check", &u, "--replay", witness]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "replay=true\n");
    let o = semimono(&["check", &l, "--replay", witness]);
    assert_eq!(o.status.code(), Some(1));

    assert_eq!(semimono(&["check", &bad]).status.code(), Some(2));
    assert_eq!(semimono(&["check", &l, "--method", "nope"]).status.code(), Some(2));
    assert_eq!(semimono(&["check", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn betti_and_frontier() {
    let dir = tempfile::tempdir().unwrap();
    let ring = write(
        dir.path(),
        "ring.vox",
        "dim 2\n0 0\n1 0\n2 0\n0 1\n2 1\n0 2\n1 2\n2 2\n",
    );
    assert_eq!(stdout(&semimono(&["betti", &ring])), "betti=0 1\n");
    assert_eq!(stdout(&semimono(&["betti", &ring, "--of", "frontier"])), "betti=1 2\n");
    assert_eq!(stdout(&semimono(&["betti", &ring, "--unreduced"])), "betti=1 1\n");
    let square = write(dir.path(), "sq.faces", "0:1 0\n1 0:1\n0:1 1\n0 0:1\n");
    assert_eq!(stdout(&semimono(&["betti", &square, "--complex"])), "betti=0 1\n");
    let o = semimono(&["frontier", &ring, "--faces", "--format", "text"]);
    let text = stdout(&o);
    assert!(text.starts_with("betti: 1 2\nfaces: 32\n"), "{text}");
    assert_eq!(text.lines().count(), 2 + 32);
}

#[test]
fn sweeps() {
    let o = semimono(&["verify-boolean", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for suite in ["commute", "cube", "three", "zero"] {
        assert!(text.contains(&format!("suite={suite} ")), "{text}");
    }
    assert!(text.contains("suite=commute checked=256 failures=0 status=pass"));

    let o = semimono(&["verify-octant-equivalence", "--dim", "2", "--box", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("suite=four-way checked=512 failures=0 status=pass"));

    let o = semimono(&["enumerate", "--dim", "3", "--box", "2", "--cross-check"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("status=pass\n"));

    let o = semimono(&["verify-acyclic-link", "--n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("n4.families=7580\n"));

    let o = semimono(&["counterexample-5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("acyclic=true\n") && text.contains("violation=expected\n"));
    assert_eq!(text.matches(" acyclic=false ").count(), 6);
}

#[test]
fn boolean_input_and_orbits() {
    let dir = tempfile::tempdir().unwrap();
    let fs = write(dir.path(), "f.txt", "vars 2\n0001\n# xor\nvars 2\n0110\n");
    let o = semimono(&["verify-boolean", "--input", &fs]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("suite=commute checked=2 failures=0"));
    let o = semimono(&["verify-boolean", "--input", &fs, "--emit-orbit"]);
    let text = stdout(&o);
    assert!(text.contains("# orbit of size 8 regular=true"));
    assert!(text.contains("# orbit of size 2 regular=false"));
    assert_eq!(semimono(&["verify-boolean", "--n", "7"]).status.code(), Some(2));
}

#[test]
fn generate_is_reproducible() {
    let a = stdout(&semimono(&[
        "generate", "--dim", "3", "--box", "3", "--count", "5", "--seed", "11",
    ]));
    let b = stdout(&semimono(&[
        "generate", "--dim", "3", "--box", "3", "--count", "5", "--seed", "11",
    ]));
    let c = stdout(&semimono(&[
        "generate", "--dim", "3", "--box", "3", "--count", "5", "--seed", "12",
    ]));
    assert_eq!(a, b);
    assert_ne!(a, c);
    assert_eq!(a.matches("dim 3").count(), 5);

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sets");
    let o = semimono(&[
        "generate",
        "--dim",
        "2",
        "--box",
        "3",
        "--exhaustive",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "written=512\n");
    assert_eq!(std::fs::read_dir(&out).unwrap().count(), 512);
}

#[test]
fn vdd_demo() {
    let dir = tempfile::tempdir().unwrap();
    let o = semimono(&[
        "demo-vdd",
        "--resolution",
        "32",
        "--t",
        "3/4",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("components=2\n") && text.contains("outcome=confirmed\n"),
        "{text}"
    );
    assert_eq!(text.matches(".verdict=false").count(), 4);
    let slices: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(slices.len(), 5);
    let pgm = std::fs::read_to_string(dir.path().join("vdd_z016.pgm")).unwrap();
    assert!(pgm.starts_with("P2\n32 32\n255\n"));
    assert_eq!(pgm.lines().count(), 3 + 32);

    let text = stdout(&semimono(&["demo-vdd", "--t", "1/4"]));
    assert!(text.contains("components=1\n") && text.contains("outcome=confirmed\n"));
    let o = semimono(&["demo-vdd", "--resolution", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("outcome=inconclusive\n"));
    assert_eq!(semimono(&["demo-vdd", "--t", "3/2"]).status.code(), Some(2));
}
