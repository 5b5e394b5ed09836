use std::io::Write;
use std::process::{Command, Output, Stdio};

const BACKENDS: [&str; 6] = [
    "naive",
    "traverse",
    "predsucc:baseline",
    "predsucc:veb",
    "predsucc:yfast",
    "stree",
];

fn sagp(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sagp"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn find_prints_golden_records() {
    let o = sagp(&["find"], b"baaabaabaacbaabaabac\n");
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    for want in ["6\t2\t1\t1\t3", "13\t1\t4\t1\t2", "13\t1\t4\t4\t2"] {
        assert!(lines.contains(&want), "missing {want:?}");
    }
    let pivot13: Vec<&str> = lines.iter().copied().filter(|l| l.starts_with("13\t")).collect();
    assert_eq!(pivot13, ["13\t1\t4\t1\t2", "13\t1\t4\t4\t2"]);

    let o = sagp(&["find"], b"acacabaabca");
    assert_eq!(stdout(&o), "7\t1\t2\t1\t2\n7\t1\t2\t3\t2\n");
}

#[test]
fn backends_print_identical_output() {
    let text = b"abaabbaababbbaababaabbabaabaaabab\n";
    let want = stdout(&sagp(&["find", "--backend", "naive"], text));
    assert!(!want.is_empty());
    for b in BACKENDS {
        let o = sagp(&["find", "--backend", b], text);
        assert!(o.status.success(), "{b}");
        assert_eq!(stdout(&o), want, "{b}");
    }
}

#[test]
fn empty_input_prints_nothing() {
    let o = sagp(&["find"], b"");
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
}

#[test]
fn json_has_one_record_per_tsv_line() {
    let text = b"baaabaabaacbaabaabac";
    let tsv = stdout(&sagp(&["find"], text));
    let json: serde_json::Value =
        serde_json::from_slice(&sagp(&["find", "--format", "json"], text).stdout).unwrap();
    assert_eq!(json.as_array().unwrap().len(), tsv.lines().count());
}

#[test]
fn integer_input() {
    let bytes = stdout(&sagp(&["find"], b"acacabaabca"));
    let ints = sagp(&["find", "--input-format", "ints"], b"1 3 1 3 1 2 1 1 2 3 1\n");
    assert!(ints.status.success());
    assert_eq!(stdout(&ints), bytes);
    let bad = sagp(&["find", "--input-format", "ints"], b"1 x 2");
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn unknown_backend_and_missing_file_exit_2() {
    assert_eq!(sagp(&["find", "--backend", "bogus"], b"ab").status.code(), Some(2));
    let o = sagp(&["find", "/nonexistent/input.txt"], b"");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_is_deterministic() {
    let o = sagp(&["gen", "--length", "5", "--sigma", "1"], b"");
    assert_eq!(stdout(&o), "aaaaa\n");
    let args = ["gen", "--length", "40", "--sigma", "4", "--seed", "9"];
    let a = stdout(&sagp(&args, b""));
    assert_eq!(a, stdout(&sagp(&args, b"")));
    assert_eq!(a.trim_end().len(), 40);
    assert!(a.trim_end().bytes().all(|c| (b'a'..=b'd').contains(&c)));
    assert_eq!(sagp(&["gen", "--length", "3", "--sigma", "0"], b"").status.code(), Some(2));
}

#[test]
fn bench_writes_rows_per_backend() {
    let o = sagp(&["bench", "--repeats", "1", "--lengths", "100"], b"");
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("backend,n,sigma,seed,run,millis,occ1,entries_per_pivot,entries_per_output")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    // one run row and one mean row each
    assert_eq!(rows.len(), 2 * BACKENDS.len());
    for b in BACKENDS {
        assert_eq!(rows.iter().filter(|r| r[0] == b).count(), 2, "{b}");
    }
    assert!(rows.iter().all(|r| r.len() == 9 && r[1] == "100"));
    // every backend sees the same text and finds the same count
    let occ: Vec<&str> = rows.iter().filter(|r| r[4] == "0").map(|r| r[6]).collect();
    assert!(occ.windows(2).all(|w| w[0] == w[1]));
    let traverse = rows.iter().find(|r| r[0] == "traverse").unwrap();
    assert!(!traverse[7].is_empty());
}

#[test]
fn verify_exit_codes() {
    let o = sagp(&["verify"], b"acacabaabca\n");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(sagp(&["verify"], b"abcd").status.code(), Some(0));
    assert_eq!(sagp(&["verify", "--max-oracle-n", "5"], b"abcabc").status.code(), Some(2));
}
