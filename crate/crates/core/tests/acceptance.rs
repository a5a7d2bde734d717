//! Acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line before asserting, so `cargo test --test acceptance --
//! --nocapture` doubles as the report.
//!
//! Tests take a shared lock so wall-clock limits are not distorted by the
//! other criteria running on the same cores.

use std::collections::BTreeSet;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use interlacing::cli;
use interlacing::discrete_series::BinaryCode;
use interlacing::ledger::{
    cell_weights, check_panchishkin, gw_rank_delta, wall_crossing_report, SelmerDatum,
};
use interlacing::oracles::{
    branching_multiplicity, character_branching_oracle, crosscheck_u_n_1, DominantWeight,
};
use interlacing::recipe::{
    arch_root_number, check_relevancy, dist, dist_fibers, distinguished_pair, fiber_connectivity_report,
    harris_numerology, DistValue, RootLedger, Sign, DEFAULT_BOUND,
};
use interlacing::weights::{enumerate_strings, InterlacingString, MultiPlaceString};

// Pinned limits.
const ENUMERATION_LIMIT: Duration = Duration::from_secs(1);
const RELEVANCY_LIMIT: Duration = Duration::from_secs(5);
const BRANCHING_LIMIT: Duration = Duration::from_secs(60);
const WALL_MAX_N: usize = 6;
const BRANCHING_MAX_RANK: usize = 4;
const BRANCHING_ENTRY_RANGE: (i64, i64) = (-4, 4);
const BLATTNER_MAX_N: usize = 5;
const HARRIS_MAX_N: usize = 6;
const DETERMINISM_RUNS: usize = 3;
const DETERMINISM_WORKERS: [usize; 3] = [1, 4, 8];

static SERIAL: Mutex<()> = Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn report(id: u32, name: &str, pass: bool, detail: impl AsRef<str>) {
    println!("{} criterion-{id:02} {name}: {}", if pass { "PASS" } else { "FAIL" }, detail.as_ref());
}

fn s(w: &str) -> InterlacingString {
    w.parse().unwrap()
}

#[test]
fn criterion_01_enumeration_counts() {
    let _g = serial();
    let start = Instant::now();
    let counts: Vec<usize> = (2..=7).map(|n| enumerate_strings(n).len()).collect();
    let elapsed = start.elapsed();
    let expected = vec![3, 10, 35, 126, 462, 1716];
    let pass = counts == expected && elapsed < ENUMERATION_LIMIT;
    report(1, "enumeration-counts", pass, format!("{counts:?} in {elapsed:.2?} (limit {ENUMERATION_LIMIT:?})"));
    assert!(pass);
}

#[test]
fn criterion_02_relevancy_lemma() {
    let _g = serial();
    let start = Instant::now();
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=7 {
        for st in enumerate_strings(n) {
            checked += 1;
            if !check_relevancy(&distinguished_pair(&st)) {
                bad.push(st);
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && checked == 2352 && elapsed < RELEVANCY_LIMIT;
    report(2, "relevancy-lemma", pass, format!("{checked} strings, {} failures, {elapsed:.2?}", bad.len()));
    assert!(pass, "first failures: {:?}", &bad[..bad.len().min(5)]);
}

#[test]
fn criterion_03_compact_endpoints() {
    let _g = serial();
    let mut bad = Vec::new();
    for n in 2..=7 {
        let dp = distinguished_pair(&InterlacingString::diagonal(n));
        let want_small = if n % 2 == 0 { BinaryCode::ones(n - 1) } else { BinaryCode::zeros(n - 1) };
        let want_big = if n % 2 == 0 { BinaryCode::ones(n) } else { BinaryCode::zeros(n) };
        if dp.hc_small != want_small || dp.hc_big != want_big {
            bad.push(n);
        }
    }
    report(3, "compact-endpoints", bad.is_empty(), format!("n = 2..7, mismatches at {bad:?}"));
    assert!(bad.is_empty());
}

#[test]
fn criterion_04_root_number_wall_law() {
    let _g = serial();
    let (mut nearby, mut block, mut bad) = (0, 0, 0);
    for n in 1..=WALL_MAX_N {
        for st in enumerate_strings(n) {
            let e = arch_root_number(&st);
            for t in st.nearby() {
                nearby += 1;
                bad += usize::from(arch_root_number(&t) != -e);
            }
            for t in st.block_moves() {
                block += 1;
                bad += usize::from(arch_root_number(&t) != e);
            }
        }
    }
    let table = [("ABA", Sign::Minus), ("AAB", Sign::Plus), ("BAA", Sign::Plus)];
    let table_ok = table.iter().all(|&(w, e)| arch_root_number(&s(w)) == e);
    let pass = bad == 0 && table_ok;
    report(
        4,
        "root-number-wall-law",
        pass,
        format!("{nearby} nearby + {block} block directed edges, {bad} violations; n=2 table ok: {table_ok}"),
    );
    assert!(pass);
}

#[test]
fn criterion_05_dist_block_invariance() {
    let _g = serial();
    let mut bad = 0;
    let mut edges = 0;
    for n in 1..=6 {
        for st in enumerate_strings(n) {
            let d = dist(&st);
            for t in st.block_moves() {
                edges += 1;
                bad += usize::from(dist(&t) != d);
            }
        }
    }
    let pinned = DistValue {
        small: "010".parse().unwrap(),
        big: "0101".parse().unwrap(),
    };
    let fibers = dist_fibers(4, DEFAULT_BOUND).unwrap();
    let fiber = fibers.fiber_of(&s("BAABBAA")).unwrap();
    let pinned_ok = fiber.value == pinned && fiber.strings.contains(&s("BBBAAAA"));
    let pass = bad == 0 && pinned_ok;
    report(
        5,
        "dist-block-invariance",
        pass,
        format!("{edges} block edges, {bad} violations; {{BAABBAA, BBBAAAA}} -> {}", fiber.value),
    );
    assert!(pass);
}

#[test]
fn criterion_06_panchishkin() {
    let _g = serial();
    let (mut patterns, mut bad) = (0, 0);
    for n in 2..=6 {
        for st in enumerate_strings(n) {
            patterns += 1;
            let (a, b) = st.realize();
            let b = b.unwrap();
            let sum_ok = cell_weights(&a, &b).unwrap().cells.iter().all(|c| c.wt_w + c.wt_wbar == 1);
            // translation keeps the pattern; check a few offsets too
            let shifted_ok = [-3, 5].iter().all(|&t| check_panchishkin(&a.shifted(t), &b.shifted(t)) == Ok(true));
            if !(sum_ok && shifted_ok && check_panchishkin(&a, &b) == Ok(true)) {
                bad += 1;
            }
        }
    }
    report(6, "panchishkin", bad == 0, format!("{patterns} patterns, {bad} failures"));
    assert_eq!(bad, 0);
}

#[test]
fn criterion_07_greenberg_wiles() {
    let _g = serial();
    let (mut self_dual, mut mixed, mut bad) = (0, 0, 0);
    for n in 1..=6 {
        for st in enumerate_strings(n) {
            let m = MultiPlaceString::single(st.clone());
            self_dual += 1;
            bad += usize::from(gw_rank_delta(&SelmerDatum::from_strings(&m)) != 0);
            for t in st.nearby().into_iter().filter(|t| t.area() < st.area()) {
                mixed += 1;
                let d = SelmerDatum::mixed(&m, &MultiPlaceString::single(t)).unwrap();
                bad += usize::from(gw_rank_delta(&d) != 1);
            }
        }
    }
    report(
        7,
        "greenberg-wiles",
        bad == 0,
        format!("{self_dual} self-dual conditions (delta 0), {mixed} nearby-mixed (delta 1), {bad} failures"),
    );
    assert_eq!(bad, 0);
}

#[test]
fn criterion_08_branching_oracles() {
    let _g = serial();
    let start = Instant::now();
    let (lo, hi) = BRANCHING_ENTRY_RANGE;
    let (mut pairs, mut bad) = (0, 0);
    for rank in 1..=BRANCHING_MAX_RANK {
        let mus = DominantWeight::all_in_range(rank - 1, lo, hi);
        for l in DominantWeight::all_in_range(rank, lo, hi) {
            for m in &mus {
                pairs += 1;
                bad += usize::from(character_branching_oracle(&l, m) != Ok(branching_multiplicity(&l, m)));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = bad == 0 && elapsed < BRANCHING_LIMIT;
    report(8, "branching-oracles", pass, format!("{pairs} pairs, {bad} disagreements, {elapsed:.2?}"));
    assert!(pass);
}

#[test]
fn criterion_09_blattner_example() {
    let _g = serial();
    let (mut cases, mut blattner_bad, mut shape_bad) = (0, Vec::new(), Vec::new());
    for n in 1..=BLATTNER_MAX_N {
        for k in 1..=n + 1 {
            cases += 1;
            let r = crosscheck_u_n_1(n, k).unwrap();
            if !(r.blattner_multiplicity == 1 && r.support_is_pattern && r.unseparated_b_vanish) {
                blattner_bad.push((n, k));
            }
            if !r.literal_code_shape {
                shape_bad.push((n, k));
            }
        }
    }
    let odd_only = shape_bad.iter().all(|&(n, _)| n % 2 == 1);
    let pass = blattner_bad.is_empty() && shape_bad.is_empty();
    report(
        9,
        "blattner-example",
        pass,
        format!(
            "{cases} (n,k) cases; Blattner multiplicities {}; chi_(n+1) vs 1010... fails in {} cases{}",
            if blattner_bad.is_empty() { "all as quoted" } else { "WRONG" },
            shape_bad.len(),
            if odd_only && !shape_bad.is_empty() { " (exactly the odd n)" } else { "" }
        ),
    );
    assert!(blattner_bad.is_empty(), "Blattner mismatches at {blattner_bad:?}");
    assert!(shape_bad.is_empty(), "code shape fails at {shape_bad:?}");
}

#[test]
fn criterion_10_harris_numerology() {
    let _g = serial();
    let rows: Vec<_> = (1..=HARRIS_MAX_N).flat_map(harris_numerology).collect();
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.holomorphic_numerology())
        .map(|r| format!("{}:({},{})", r.string, r.q_small, r.q_big))
        .collect();
    report(
        10,
        "harris-numerology",
        bad.is_empty(),
        format!("{} family strings, {} with q != 0: {}", rows.len(), bad.len(), bad.join(" ")),
    );
    assert!(bad.is_empty());
}

#[test]
fn criterion_11_wall_crossing() {
    let _g = serial();
    let (mut tuples, mut bad) = (0, 0);
    for n in 1..=WALL_MAX_N {
        let strings = enumerate_strings(n);
        let mut ms: Vec<MultiPlaceString> = strings.iter().cloned().map(MultiPlaceString::single).collect();
        for x in &strings {
            for y in &strings {
                ms.push(MultiPlaceString::new(vec![x.clone(), y.clone()]).unwrap());
            }
        }
        for m in &ms {
            for eps in [Sign::Plus, Sign::Minus] {
                tuples += 1;
                let r = wall_crossing_report(m, &RootLedger::new(eps, m.g())).unwrap();
                bad += usize::from(!r.exactly_one_incoherent);
            }
        }
    }
    report(11, "wall-crossing", bad == 0, format!("{tuples} (tuple, eps_T) cases, g <= 2, {bad} failures"));
    assert_eq!(bad, 0);
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(std::iter::once("interlacing").chain(args.iter().copied()), &mut out, &mut err);
    (code, out)
}

#[test]
fn criterion_12_determinism() {
    let _g = serial();
    let golden_dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let cases: [(&str, &[&str]); 5] = [
        ("enumerate_n4.txt", &["enumerate", "--n", "4"]),
        ("enumerate_n3.csv", &["enumerate", "--n", "3", "--format", "csv"]),
        ("analyze_ababa.json", &["analyze", "--string", "ABABA", "--format", "json"]),
        ("graph_n3.dot", &["graph", "--n", "3", "--eps-finite", "+1"]),
        ("fibers_n4.json", &["fibers", "--n", "4"]),
    ];
    let mut mismatches = Vec::new();
    let mut runs = 0;
    for (file, args) in cases {
        let golden = std::fs::read(golden_dir.join(file)).unwrap();
        for workers in DETERMINISM_WORKERS {
            for _ in 0..DETERMINISM_RUNS {
                let w = workers.to_string();
                let mut full = vec!["--workers", &w];
                full.extend_from_slice(args);
                let (code, out) = run_cli(&full);
                runs += 1;
                if code != 0 || out != golden {
                    mismatches.push(format!("{file}@{workers}"));
                }
            }
        }
    }
    report(
        12,
        "determinism",
        mismatches.is_empty(),
        format!("{runs} runs over {} commands and workers {DETERMINISM_WORKERS:?}, {} mismatches", cases.len(), mismatches.len()),
    );
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn criterion_13_fiber_experiment() {
    let _g = serial();
    let mut lines = Vec::new();
    for n in 1..=6 {
        let r = fiber_connectivity_report(n, DEFAULT_BOUND).unwrap();
        lines.push(format!(
            "n={n}: {}->{} connected={}",
            r.partition.string_count,
            r.partition.image_size(),
            r.all_connected
        ));
    }
    let two = dist_fibers(2, DEFAULT_BOUND).unwrap();
    let images: BTreeSet<_> = two.fibers.iter().map(|f| f.value.clone()).collect();
    let pass = two.is_injective() && two.string_count == 3 && images.len() == 3;
    report(13, "fiber-experiment", pass, format!("n=2 injective: {}; {}", two.is_injective(), lines.join("; ")));
    assert!(pass);
}
