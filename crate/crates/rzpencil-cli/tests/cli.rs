//! End-to-end tests against the compiled binary: exit codes, transcript
//! fields, file round-trips, and seed determinism.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rzpencil"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn check_rz_exit_codes() {
    // exact accept (quadratic)
    let out = run(&["check-rz", "p3"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("mode: exact"));

    // sampled accept is a semidecision
    let out = run(&["check-rz", "1 - 2*x1^2 + x1^4", "--nvars", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("mode: sampled"));

    // rejection with an exact witness
    let out = run(&["check-rz", "1 - x1^4 - x2^4"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness-direction"));

    // q5 is quadratic over Q(sqrt 2): exact accept
    let out = run(&["check-rz", "q5"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn det_and_verify_roundtrip() {
    let dir = std::env::temp_dir().join("rzpencil-cli-det");
    std::fs::create_dir_all(&dir).unwrap();
    let pencil_path = dir.join("rep.pencil");
    let out = run(&[
        "construct-quadratic",
        "p4",
        "--out",
        pencil_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("identity: proved"));
    assert!(stdout(&out).contains("size: 4"));

    let out = run(&[
        "det",
        pencil_path.to_str().unwrap(),
        "--verify",
        "p4",
        "--power",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: proved"));

    // wrong power fails with a witness point
    let out = run(&[
        "det",
        pencil_path.to_str().unwrap(),
        "--verify",
        "p4",
        "--power",
        "1",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("witness-point"));
}

#[test]
fn equiv_exit_codes() {
    let out = run(&["equiv", "p3-rep-1", "p3-rep-2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("verdict: inequivalent"));
    assert!(stdout(&out).contains("witness-word: 1,2,3"));

    let out = run(&["equiv", "p3-rep-1", "p3-rep-1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: equivalent"));

    let out = run(&["equiv", "bw5-standard", "bw5-negated"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn bounds_output() {
    let out = run(&["bounds", "--n", "4", "--d", "2", "--kind", "symmetric"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bound: k >= 4"));

    let out = run(&["bounds", "--n", "11", "--d", "2", "--kind", "hermitian"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bound: k >= 3"));

    let out = run(&["bounds", "--n", "3", "--d", "2", "--kind", "symmetric"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("bound: none"));
}

#[test]
fn member_exit_codes() {
    let out = run(&["member", "p2", "--point", "0,0"]);
    assert_eq!(code(&out), 0);
    let out = run(&["member", "p2", "--point", "2,0"]);
    assert_eq!(code(&out), 1);
    // pencil membership agrees
    let out = run(&["member", "arrowhead2", "--point", "1/2,1/2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("set: spectrahedron"));
    // boundary point: root exactly at t = 1 stays inside
    let out = run(&["member", "p2", "--point", "1,0"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn obstruct_exit_codes() {
    let out = run(&["obstruct", "ptilde4"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("claim=none-exists"));
    assert!(text.contains("kind=hermitian"));

    let out = run(&["obstruct", "p2"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("conclusion.none"));

    let out = run(&["obstruct", "1 + x1^2", "--nvars", "1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn reduce_and_double() {
    // no common kernel: size unchanged
    let out = run(&["reduce", "arrowhead3", "--out", "/dev/null"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("removed: 0"));

    // compact spectrahedron: cone condition not witnessed
    let out = run(&["reduce", "arrowhead2", "--cone"]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("cone condition not witnessed"));

    // shifted homogenization: the x0 axis witnesses the cone
    let out = run(&["reduce", "ex33", "--cone", "--out", "/dev/null"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("output-size: 2"));

    let dir = std::env::temp_dir().join("rzpencil-cli-double");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("doubled.pencil");
    let out = run(&["double", "p3-rep-1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("output-size: 4"));
    // the doubled pencil represents the square
    let out = run(&[
        "det",
        path.to_str().unwrap(),
        "--verify",
        "p3",
        "--power",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn counterexample_runs() {
    let out = run(&["counterexample", "ptilde4", "--r", "2", "--out", "/dev/null"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("rz-sampled: true"));
    // r must exceed 1
    let out = run(&["counterexample", "ptilde4", "--r", "1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn examples_emit_and_reload() {
    let dir = std::env::temp_dir().join("rzpencil-cli-examples");
    std::fs::create_dir_all(&dir).unwrap();
    for name in ["p5", "ptilde3", "q5", "arrowhead4", "bw5", "ex57", "ex58"] {
        let path = dir.join(format!("{name}.txt"));
        let out = run(&["examples", name, "--out", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "emit {name}");
        assert!(path.exists());
    }
    // emitted ex57 reloads and verifies against q5^2
    let path = dir.join("ex57.txt");
    let out = run(&[
        "det",
        path.to_str().unwrap(),
        "--verify",
        "q5",
        "--power",
        "2",
    ]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("verdict: proved"));

    let out = run(&["examples", "not-a-name"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn seed_env_and_flag_are_deterministic() {
    let run_seeded = |seed: &str| {
        let out = bin()
            .args(["check-rz", "1 - x1^4 - x2^2", "--nvars", "2"])
            .env("RZPENCIL_SEED", seed)
            .output()
            .unwrap();
        (code(&out), stdout(&out))
    };
    let a = run_seeded("12345");
    let b = run_seeded("12345");
    assert_eq!(a, b);
    // --seed overrides the environment
    let out = bin()
        .args(["check-rz", "p3", "--seed", "7"])
        .env("RZPENCIL_SEED", "99999")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn format_errors_exit_three() {
    let dir = std::env::temp_dir().join("rzpencil-cli-bad");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.pencil");
    std::fs::write(
        &path,
        "pencil nvars=1 size=2 domain=rational symmetry=hermitian\n0/1  1/1\n2/1  0/1\n",
    )
    .unwrap();
    let out = run(&["det", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);

    let out = run(&["member", "p2", "--point", "1"]);
    assert_eq!(code(&out), 3);
}
