use std::process::{Command, Output};

const LEFT_TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidix")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus(name: &str) -> String {
    format!("{}/../../corpus/{name}.pd", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn unknot_homfly() {
    let o = run(&["homfly", "--inline", "O"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn trefoil_braid_index() {
    let o = run(&["braid-index", "--inline", LEFT_TREFOIL]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exact"], 2);
    assert_eq!(v["lower"], 2);
    assert_eq!(v["homfly"], "-a^4 + a^2*z^2 + 2*a^2");
}

#[test]
fn five_two_report_from_file() {
    let o = run(&["braid-index", "--file", &corpus("five_two")]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["n"].as_u64(), v["exact"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn malformed_pd_is_a_usage_error() {
    let o = run(&["parse", "--inline", "X[1,2,3]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:1"));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["homfly"]).status.code(), Some(2));
    assert_eq!(run(&["homfly", "--inline", "O", "--file", "x.pd"]).status.code(), Some(2));
    assert_eq!(run(&["homfly", "--inline", "O", "--tree", "Q"]).status.code(), Some(2));
    assert_eq!(run(&["homfly", "--file", "/nonexistent.pd"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn trees_match_plain_homfly() {
    let file = corpus("figure_eight");
    let plain = stdout(&run(&["homfly", "--file", &file]));
    for t in ["P", "N", "generic"] {
        assert_eq!(stdout(&run(&["homfly", "--file", &file, "--tree", t])), plain);
    }
    let dump = stdout(&run(&["homfly", "--file", &file, "--tree", "P", "--dump"]));
    assert!(dump.lines().skip(1).all(|l| l.trim_start().starts_with("crossing=")));
}

#[test]
fn seifert_outputs() {
    let dot = stdout(&run(&["seifert", "--inline", LEFT_TREFOIL, "--dot"]));
    assert_eq!(dot, "graph seifert {\n  0;\n  1;\n  0 -- 1 [label=\"3:+0/-3\"];\n}\n");
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["seifert", "--inline", LEFT_TREFOIL, "--json"]))).unwrap();
    assert_eq!(v["circles"].as_array().unwrap().len(), 2);
    assert_eq!(v["stats"]["tau_minus"], 3);
}

#[test]
fn invariants_and_parse() {
    let text = stdout(&run(&["invariants", "--inline", LEFT_TREFOIL]));
    assert!(text.contains("writhe: -3\n") && text.contains("faces: 5\n") && text.contains("reduced: true\n"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&run(&["parse", "--inline", "O O", "--json"]))).unwrap();
    assert_eq!(v["components"], 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["braid-index", "--file", &corpus("merge_pair_sum")][..],
        &["seifert", "--file", &corpus("walk_cycle"), "--json"],
        &["homfly", "--file", &corpus("six_two"), "--tree", "N", "--json", "--dump"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout);
    }
}

#[test]
fn verify_suite() {
    let o = run(&["verify", "--suite", "skein"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("skein: ok ("));
}
