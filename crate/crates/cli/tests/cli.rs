use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rs-listdec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

#[test]
fn encode_then_decode_round_trip() {
    let enc = run(&["encode", "--field", "7", "--n", "6", "--k", "3", "--message", "5,2,6"]);
    assert!(enc.status.success());
    let text = stdout(&enc);
    let word = value(&text, "codeword");
    for extra in [&[][..], &["--list"][..], &["--mult", "2"][..]] {
        let mut args = vec!["decode", "--field", "7", "--k", "3", "--word", word];
        args.extend_from_slice(extra);
        let dec = run(&args);
        assert_eq!(dec.status.code(), Some(0));
        let out = stdout(&dec);
        if extra.is_empty() {
            assert_eq!(value(&out, "message"), "5,2,6");
            assert_eq!(value(&out, "distance"), "0");
        } else {
            assert_eq!(value(&out, "candidates.0.message"), "5,2,6");
            assert_eq!(value(&out, "candidates.0.distance"), "0");
        }
    }
}

#[test]
fn corrupt_then_unique_decode() {
    for seed in 0..20 {
        let seed = seed.to_string();
        let c = run(&["corrupt", "--field", "7", "--word", "6,5,2,4,4,2", "--errors", "1", "--seed", &seed]);
        let text = stdout(&c);
        let dec = run(&["decode", "--field", "7", "--k", "3", "--word", value(&text, "word")]);
        assert_eq!(value(&stdout(&dec), "message"), "5,2,6");
    }
}

#[test]
fn corrupt_is_deterministic() {
    let args = ["corrupt", "--field", "2^4", "--word", "1,2,3,4,5,6,7,8", "--errors", "3", "--seed", "42"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(value(&stdout(&a), "positions").split(',').count(), 3);
}

#[test]
fn worked_example_matches() {
    let o = run(&["worked-example"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(value(&text, "status"), "match");
    assert_eq!(value(&text, "q.0"), "6,1,2,4,3,3,4,4");
    assert_eq!(value(&text, "q.3"), "1");
    assert_eq!(value(&text, "candidates.0.message"), "1,3,4");
    assert_eq!(value(&text, "candidates.1.message"), "5,2,6");
}

#[test]
fn decode_failure_has_exit_code_two() {
    let o = run(&["decode", "--field", "7", "--k", "3", "--word", "6,2,4,4,4,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(value(&stdout(&o), "status"), "no_codeword_in_range");

    let o = run(&["decode", "--json", "--field", "7", "--k", "3", "--word", "6,2,4,4,4,2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains(r#""status":"no_codeword_in_range""#));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["decode", "--field", "7", "--k", "1", "--word", "1,2,3"]).status.code(), Some(1));
    assert_eq!(run(&["encode", "--field", "6", "--n", "3", "--k", "2", "--message", "1"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["encode", "--field", "7", "--n", "6", "--k", "3", "--message", "1,2,3,4"]).status.code(), Some(1));
}

#[test]
fn bench_csv_is_monotone_and_reproducible() {
    let args = ["bench", "--n", "16,32,64", "--m", "1,2,3", "--no-timing"];
    let a = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, run(&args).stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,m,l,mult_count,wall_time_ns"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    let count = |n: u64, m: u64| rows.iter().find(|r| r[0] == n && r[2] == m).unwrap()[4];
    for m in 1..=3 {
        assert!(count(16, m) < count(32, m) && count(32, m) < count(64, m));
    }
    for n in [16, 32, 64] {
        assert!(count(n, 1) < count(n, 2) && count(n, 2) < count(n, 3));
        assert!(rows.iter().any(|r| r[0] == n && r[1] == n / 2));
    }
}
