use std::io::Write;
use std::process::{Command, Stdio};

use nonforesty::cli::run;

fn invoke(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("nonforesty").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn formula_single_and_range() {
    assert_eq!(invoke(&["formula", "--k", "2", "--n", "11"], ""), (0, "20\n".into(), String::new()));
    let (code, out, _) = invoke(&["formula", "--k", "1", "--range", "8:12"], "");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n\tf\tregime\n8\t13\tconnected\n9\t16\tconnected\n10\t18\tconnected\n11\t19\tconnected\n12\t20\tconnected\n"
    );
    let (_, out, _) = invoke(&["formula", "--k", "6", "--n", "9"], "");
    assert_eq!(out, "27\n");
}

#[test]
fn formula_domain_errors_exit_2() {
    let (code, out, err) = invoke(&["formula", "--k", "1", "--n", "7"], "");
    assert_eq!((code, out.as_str()), (2, ""));
    assert!(err.starts_with("error: order 7"));
    let (code, _, err) = invoke(&["formula", "--k", "3", "--n", "12"], "");
    assert_eq!(code, 2);
    assert!(err.contains("k = 3"));
    assert_eq!(invoke(&["formula", "--k", "1", "--range", "9:8"], "").0, 2);
}

#[test]
fn build_formats() {
    assert_eq!(invoke(&["build", "--k", "4", "--n", "8"], ""), (0, "G~Ci[[\n".into(), String::new()));
    let (code, out, _) = invoke(&["build", "--k", "1", "--n", "8", "--format", "edgelist"], "");
    assert_eq!(code, 0);
    assert_eq!(out, "8 13\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n2 5\n4 5\n4 6\n4 7\n5 6\n5 7\n6 7\n");
    let (code, out, _) = invoke(&["build", "--k", "6", "--n", "7"], "");
    assert_eq!((code, out.as_str()), (0, "F~~~w\n"));
    assert_eq!(invoke(&["build", "--k", "5", "--n", "9"], "").0, 2);
}

#[test]
fn check_reads_graph6_lines() {
    assert_eq!(invoke(&["check", "--property", "locally-nonforesty"], "D~{\n"), (0, "true\n".into(), String::new()));
    let (code, out, _) = invoke(&["check", "--property", "forest"], "D~{\nDhc\n");
    assert_eq!((code, out.as_str()), (1, "false\nfalse\n"));
    let (code, out, _) = invoke(&["check", "--property", "k-connected", "--k", "4", "-"], "D~{\nC~\n");
    assert_eq!((code, out.as_str()), (1, "true\nfalse\n"));
    assert_eq!(invoke(&["check", "--property", "k-connected"], "D~{\n").0, 2);
    assert_eq!(invoke(&["check", "--property", "forest"], "D~{!\n").0, 2);
}

#[test]
fn conjecture1_report() {
    let (code, out, _) = invoke(&["conjecture1", "--k", "4", "--n", "12"], "");
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "n: 12\nm: 24\nbound: 77/3\nthree_connected: true\nlocally_nonforesty: true\nsatisfied: false\nconjecture violated\n"
    );
    let (code, out, _) = invoke(&["conjecture1", "--k", "1", "--n", "8"], "");
    assert_eq!(code, 0);
    assert!(out.ends_with("not applicable: graph is not a 3-connected locally nonforesty graph\n"));
}

#[test]
fn blocks_tsv() {
    let (code, out, _) = invoke(&["blocks"], "G~Ci[[\nGzCzGw\n");
    assert_eq!(code, 0, "{out}");
    let mut parts = out.split("\n\n");
    assert_eq!(parts.next().unwrap(), "block\t0 1 2 3 4 5 6 7\ncut_vertices\t\nt\t8\t1");
    assert!(parts.next().is_some());
    let (code, _, err) = invoke(&["blocks"], "G?????\n");
    assert_eq!(code, 2);
    assert!(err.contains("disconnected"));
}

#[test]
fn lemma1_and_verify_min() {
    assert_eq!(invoke(&["lemma1", "--n", "12"], ""), (0, "1\n".into(), String::new()));
    assert_eq!(invoke(&["lemma1", "--n", "9"], "").1, "0\n");
    assert_eq!(invoke(&["lemma1", "--n", "13"], "").0, 2);

    let (code, out, _) = invoke(&["verify-min", "--k", "2", "--n", "8"], "");
    assert_eq!(code, 0);
    let stable: Vec<&str> = out.lines().filter(|l| !l.starts_with("elapsed_ms")).collect();
    assert_eq!(
        stable,
        ["k: 2", "n: 8", "budget: 13", "formula: 14", "graphs_examined: 41", "witness: none", "certified: true"]
    );

    let (code, out, _) = invoke(&["verify-min", "--k", "1", "--n", "8", "--budget", "13"], "");
    assert_eq!(code, 0);
    assert!(out.contains("witness_size: 13"));
    assert_eq!(invoke(&["verify-min", "--k", "1", "--n", "11"], "").0, 2);
}

#[test]
fn gadget_stanza() {
    let (code, out, _) = invoke(&["gadget", "--name", "B1", "--context", "k2"], "");
    assert_eq!(code, 0);
    assert!(out.starts_with("name B1\ncontext k2\n5 9\n"));
    assert_eq!(invoke(&["gadget", "--name", "D1", "--context", "k1"], "").0, 2);
    assert_eq!(invoke(&["gadget", "--name", "B1"], "").0, 2);
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(invoke(&["nonsense"], "").0, 2);
    assert_eq!(invoke(&[], "").0, 2);
    let (code, out, _) = invoke(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("verify-min"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_nonforesty");
    let mut child = Command::new(exe)
        .args(["check", "--property", "locally-foresty"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Dhc\nD~{\n").unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert_eq!(output.stdout, b"true\nfalse\n");

    let output = Command::new(exe).args(["build", "--k", "3", "--n", "9"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let output = Command::new(exe).args(["formula", "--k", "4", "--n", "12"]).output().unwrap();
    assert_eq!((output.status.code(), output.stdout.as_slice()), (Some(0), b"24\n".as_slice()));
}
