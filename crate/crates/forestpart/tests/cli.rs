use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use forestpart::cli::{run, EXIT_HYPOTHESIS, EXIT_NEGATIVE, EXIT_OK, EXIT_REGIME, EXIT_TOO_LARGE, EXIT_USAGE};
use tempfile::TempDir;

struct Outcome {
    code: u8,
    out: String,
    err: String,
}

fn call(args: &[&str]) -> Outcome {
    call_with_input(args, "")
}

fn call_with_input(args: &[&str], input: &str) -> Outcome {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("forestpart").chain(args.iter().copied());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn save(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn build(dir: &TempDir, name: &str, args: &[&str]) -> String {
    let r = call(args);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    save(dir, name, &r.out)
}

#[test]
fn dodecahedron_colors_and_verifies() {
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "d.json", &["construct", "dodecahedron", "--d1", "2", "--d2", "6"]);
    let colored = call(&["color", &g]);
    assert_eq!(colored.code, EXIT_OK);
    assert!(colored.out.contains("\"trace\""));
    let c = save(&dir, "c.json", &colored.out);
    let v = call(&["verify", &g, "--coloring", &c]);
    assert_eq!((v.code, v.out.as_str()), (EXIT_OK, "ok\n"));
    assert_eq!(call(&["girth", &g]).out, "5\n");
}

#[test]
fn potentials_print_as_exact_fractions() {
    let dir = TempDir::new().unwrap();
    let p3 = build(&dir, "p3.json", &["construct", "path", "--d1", "0", "--d2", "2", "--n", "3"]);
    let r = call(&["min-potential", &p3, "--constraint", "nonempty-nonspanning"]);
    assert_eq!(r.out, "4/3 (scaled 8)\nsubset: {0}\n");
    assert_eq!(call(&["oracle", "min-potential", &p3, "--constraint", "nonempty-nonspanning"]).out, r.out);
    assert_eq!(call(&["potential", &p3]).out, "2/1 (scaled 12)\n");
    assert_eq!(call(&["potential", &p3, "--subset", "0,1"]).out, "5/3 (scaled 10)\n");
    assert_eq!(call(&["girth", &p3]).out, "inf\n");
}

#[test]
fn doubled_monochromatic_edge_fails_verification() {
    let dir = TempDir::new().unwrap();
    let g = save(
        &dir,
        "g.json",
        r#"{"params":{"d1":0,"d2":2},"vertices":[{"id":0,"w1":0,"w2":0},{"id":1,"w1":0,"w2":0}],
            "edges":[{"u":0,"v":1,"multiplicity":2}]}"#,
    );
    let c = save(&dir, "c.json", r#"{"assignments":[{"id":0,"class":2},{"id":1,"class":2}]}"#);
    let r = call(&["verify", &g, "--coloring", &c]);
    assert_eq!(r.code, EXIT_NEGATIVE);
    assert_eq!(r.out, "cycle in class 2: 0 1\n");
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let seed = build(&dir, "s.json", &["construct", "seed", "--d1", "0", "--d2", "2"]);
    let r = call(&["color", &seed]);
    assert_eq!(r.code, EXIT_HYPOTHESIS);
    assert!(r.out.contains("\"witness\""));
    assert!(r.out.contains("-1/3 (scaled -2)"));

    let out_of_regime = build(&dir, "r.json", &["construct", "cycle", "--d1", "1", "--d2", "3", "--n", "5"]);
    assert_eq!(call(&["color", &out_of_regime]).code, EXIT_REGIME);

    let big = build(&dir, "big.json", &["construct", "grid", "--d1", "0", "--d2", "2", "--rows", "5", "--cols", "5"]);
    assert_eq!(call(&["oracle", "color", &big]).code, EXIT_TOO_LARGE);
    assert_eq!(call(&["oracle", "critical", &big]).code, EXIT_TOO_LARGE);

    assert_eq!(call(&["nonsense"]).code, EXIT_USAGE);
    assert_eq!(call(&["color"]).code, EXIT_USAGE);
    assert_eq!(call(&["color", "/no/such/file"]).code, EXIT_USAGE);
    let bad = save(&dir, "bad.json", "{\"params\": 1}");
    assert_eq!(call(&["girth", &bad]).code, EXIT_USAGE);
    assert_eq!(call(&["construct", "seed", "--d1", "0", "--d2", "1"]).code, EXIT_USAGE);
    assert_eq!(call(&["construct", "pendant-host", &big, "--vertex", "0"]).code, EXIT_USAGE);
    assert_eq!(call(&["--help"]).code, EXIT_OK);
}

#[test]
fn sparsity_checks() {
    let dir = TempDir::new().unwrap();
    let c5 = build(&dir, "c5.json", &["construct", "cycle", "--d1", "0", "--d2", "2", "--n", "5"]);
    assert_eq!(call(&["check-sparse", &c5, "--a", "1", "--b", "-1/2"]).out, "ok\n");
    let r = call(&["check-sparse", &c5, "--a", "1", "--b", "0"]);
    assert_eq!((r.code, r.out.as_str()), (EXIT_NEGATIVE, "violated: {0, 1, 2, 3, 4}\n"));
    assert_eq!(call(&["check-sparse", &c5, "--a", "x", "--b", "0"]).code, EXIT_USAGE);
}

#[test]
fn gadgets_from_the_command_line() {
    let dir = TempDir::new().unwrap();
    let seed = build(&dir, "s.json", &["construct", "seed", "--d1", "0", "--d2", "2"]);
    let host = build(&dir, "h.json", &["construct", "pendant-host", &seed, "--vertex", "0"]);
    let flag = build(&dir, "f.json", &["construct", "flag", "--part", &format!("{host}:0"), "--part", &format!("{seed}:0")]);
    let leaf = build(&dir, "l.json", &["construct", "null-leaf", &flag, "--vertex", "1", "--class", "2"]);
    for g in [&seed, &host, &flag, &leaf] {
        assert_eq!(call(&["potential", g]).out, "-1/3 (scaled -2)\n");
        assert_eq!(call(&["oracle", "critical", g]).out, "true\n");
        assert_eq!(call(&["oracle", "color", g]).code, EXIT_NEGATIVE);
    }
    let one = build(&dir, "one.json", &["construct", "path", "--d1", "1", "--d2", "2", "--n", "1"]);
    let pennon = call(&["construct", "pennon", &one, "--vertex", "0"]);
    assert_eq!(pennon.code, EXIT_OK);
    assert_eq!(pennon.out.matches("\"multiplicity\"").count(), 10);
}

#[test]
fn clamped_input_warns_and_round_trips() {
    let text = r#"{"params":{"d1":0,"d2":2},"vertices":[{"id":0,"w1":0,"w2":9},{"id":1,"w1":0,"w2":0}],
        "edges":[{"u":0,"v":1,"multiplicity":3}]}"#;
    let r = call_with_input(&["construct", "pendant-host", "-", "--vertex", "0"], text);
    assert_eq!(r.code, EXIT_USAGE, "w1 is zero");
    let r = call_with_input(&["girth", "-"], text);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.err.matches("warning:").count(), 2);
    let dir = TempDir::new().unwrap();
    let g = build(&dir, "x.json", &["construct", "star", "--d1", "0", "--d2", "2", "--k", "3"]);
    let canonical = std::fs::read_to_string(&g).unwrap();
    let again = call_with_input(&["construct", "pennon", "-", "--vertex", "0"], &canonical);
    assert_eq!(again.code, EXIT_OK);
}

fn binary() -> &'static Path {
    Path::new(env!("CARGO_BIN_EXE_forestpart"))
}

fn pipe(args: &[&str], input: &[u8]) -> (i32, Vec<u8>) {
    let mut child = Command::new(binary())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), out.stdout)
}

/// `color` output piped into `verify` through the real binary.
#[test]
fn binary_pipeline() {
    let dir = TempDir::new().unwrap();
    for (d1, d2, n, seed) in [("0", "2", "40", "1"), ("1", "4", "60", "2"), ("2", "6", "80", "3")] {
        let (code, graph) = pipe(&["construct", "random", "--d1", d1, "--d2", d2, "--n", n, "--seed", seed], b"");
        assert_eq!(code, 0);
        let (code, coloring) = pipe(&["color", "-"], &graph);
        assert_eq!(code, 0);
        let c = save(&dir, "c.json", std::str::from_utf8(&coloring).unwrap());
        let (code, report) = pipe(&["verify", "-", "--coloring", &c], &graph);
        assert_eq!((code, report.as_slice()), (0, b"ok\n".as_slice()));
    }
    let (code, _) = pipe(&["bogus"], b"");
    assert_eq!(code, 64);
}
