//! End-to-end checks of the command-line interface, run in-process.

use interlacing::cli::{self, EXIT_BOUND, EXIT_OK, EXIT_PARSE, EXIT_VERIFY};
use interlacing::weights::enumerate_strings;
use serde_json::Value;

struct Out {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Out {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(std::iter::once("interlacing").chain(args.iter().copied()), &mut out, &mut err);
    Out {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn enumerate_plain_and_csv() {
    let o = run(&["enumerate", "--n", "2"]);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "AAB\nABA\nBAA\n");

    let o = run(&["enumerate", "--n", "4", "--format", "csv"]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_bytes());
    assert_eq!(rdr.headers().unwrap(), vec!["index", "string", "area"]);
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 35);
    assert_eq!(&rows[0][1], "AAAABBB");
    assert_eq!(&rows[0][2], "12");
    assert_eq!(&rows[34][1], "BBBAAAA");
    assert_eq!(&rows[34][2], "0");

    let v = json(&["enumerate", "--n", "3", "--format", "json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["strings"].as_array().unwrap().len(), 10);
}

#[test]
fn enumerate_bounds() {
    assert_eq!(run(&["enumerate", "--n", "0"]).code, EXIT_BOUND);
    assert_eq!(run(&["enumerate", "--n", "11"]).code, EXIT_BOUND);
    assert_eq!(run(&["enumerate", "--n", "x"]).code, EXIT_PARSE);
}

#[test]
fn analyze_text() {
    let o = run(&["analyze", "--string", "ABA"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("classification: incoherent (predicted rank 1)"), "{}", o.stdout);
    assert!(o.stdout.contains("a1  ##"));
}

#[test]
fn analyze_from_weights() {
    let v = json(&["analyze", "--a", "3.5,1.5,-0.5,-2.5", "--b", "2,0,-2", "--format", "json"]);
    assert_eq!(v["strings"][0], "ABABABA");
    assert_eq!(v["places"][0]["distinguished_pair"]["hc_big"], "1111");
    assert_eq!(v["places"][0]["distinguished_pair"]["hc_small"], "111");
    // weights in no particular order are rejected, naming the problem
    let o = run(&["analyze", "--a", "1.5,3.5", "--b", "2"]);
    assert_eq!(o.code, EXIT_PARSE);
}

#[test]
fn analyze_names_bad_token() {
    let o = run(&["analyze", "--string", "ABBA"]);
    assert_eq!(o.code, EXIT_PARSE);
    assert!(o.stderr.contains("'ABBA'"), "{}", o.stderr);
    let o = run(&["analyze", "--string", "ABA,AXB"]);
    assert_eq!(o.code, EXIT_PARSE);
    assert!(o.stderr.contains("'AXB'"), "{}", o.stderr);
}

#[test]
fn analyze_round_trips_every_string() {
    for n in 1..=7 {
        for s in enumerate_strings(n) {
            let w = s.to_string();
            let v = json(&["analyze", "--string", &w, "--format", "json"]);
            assert_eq!(v["strings"][0], w.as_str());
            assert_eq!(v["places"][0]["area"], s.area());
            assert_eq!(v["n"], n);
            let expected = if s.area() % 2 == 0 { "coherent" } else { "incoherent" };
            assert_eq!(v["classification"]["classification"], expected, "{w}");
        }
    }
}

#[test]
fn analyze_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.svg");
    let o = run(&["analyze", "--string", "ABA,AAB", "--svg", path.to_str().unwrap()]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains(">ABA<") && svg.contains(">AAB<"));
    assert!(svg.trim_end().ends_with("</svg>"));
}

#[test]
fn graph_dot_and_json() {
    let o = run(&["graph", "--n", "2"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.starts_with("graph walls_n2 {"));
    assert_eq!(o.stdout.matches(" -- ").count(), 2);

    let v = json(&["graph", "--n", "3", "--eps-finite", "-1", "--format", "json"]);
    let nodes = v["nodes"].as_array().unwrap();
    assert_eq!(nodes.len(), 10);
    for node in nodes {
        // eps_T = -1 flips the usual parity rule
        let area = node["area"].as_u64().unwrap();
        let want = if area % 2 == 1 { "coherent" } else { "incoherent" };
        assert_eq!(node["coherence"], want);
    }
}

#[test]
fn fibers_n4() {
    let v = json(&["fibers", "--n", "4"]);
    assert_eq!(v["string_count"], 35);
    assert_eq!(v["image_size"], 23);
    assert_eq!(v["all_connected"], true);
    let fibers = v["fibers"].as_array().unwrap();
    let pinned = fibers
        .iter()
        .find(|f| f["strings"].as_array().unwrap().iter().any(|s| s == "BAABBAA"))
        .unwrap();
    assert_eq!(pinned["dist"], serde_json::json!({"small": "010", "big": "0101"}));
    assert!(pinned["strings"].as_array().unwrap().iter().any(|s| s == "BBBAAAA"));
    let sizes: usize = fibers.iter().map(|f| f["size"].as_u64().unwrap() as usize).sum();
    assert_eq!(sizes, 35);
}

#[test]
fn walls_report() {
    let v = json(&["walls", "--strings", "ABA,AAB", "--eps-finite", "+1"]);
    assert_eq!(v["classification"], "incoherent");
    assert_eq!(v["exactly_one_incoherent"], true);
    let neighbors = v["neighbors"].as_array().unwrap();
    assert_eq!(neighbors.len(), 3);
    assert!(neighbors.iter().all(|x| x["classification"] == "coherent"));
}

#[test]
fn oracle_commands() {
    let v = json(&["oracle", "branching", "--lambda", "2,1", "--mu", "1"]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["interlacing"], 1);
    let v = json(&["oracle", "branching", "--lambda", "2,1", "--mu", "3"]);
    assert_eq!(v["weyl_character"], 0);

    let v = json(&["oracle", "u-n-1", "--n", "2", "--k", "1"]);
    assert_eq!(v["blattner_multiplicity"], 1);
    assert_eq!(v["support_is_pattern"], true);

    let v = json(&["oracle", "compact", "--n", "3"]);
    assert_eq!(v["supports_match"], true);

    assert_eq!(run(&["oracle", "u-n-1", "--n", "2", "--k", "5"]).code, EXIT_BOUND);
    assert_eq!(run(&["oracle", "branching", "--lambda", "1,2", "--mu", "1"]).code, EXIT_PARSE);
}

#[test]
fn verify_reports_every_invariant() {
    let o = run(&["verify", "--max-n", "4"]);
    assert!(o.code == EXIT_OK || o.code == EXIT_VERIFY);
    let lines: Vec<&str> = o.stdout.lines().collect();
    let checks = lines.iter().filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")).count();
    assert!(checks >= 10);
    assert!(lines.last().unwrap().ends_with("invariants passed"));
    let failed = lines.iter().any(|l| l.starts_with("FAIL "));
    assert_eq!(o.code == EXIT_VERIFY, failed);
    assert_eq!(run(&["verify", "--max-n", "9"]).code, EXIT_BOUND);
}

#[test]
fn help_and_misuse() {
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["--version"]).code, EXIT_OK);
    assert_eq!(run(&["frobnicate"]).code, EXIT_PARSE);
    assert_eq!(run(&["--workers", "0", "enumerate", "--n", "2"]).code, EXIT_BOUND);
}
