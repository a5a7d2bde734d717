//! The exhaustive invariant suite behind `verify`.

use rayon::prelude::*;

use crate::discrete_series::BinaryCode;
use crate::error::{Error, Result};
use crate::ledger::{check_panchishkin, gw_rank_delta, selmer_condition, wall_crossing_report, SelmerDatum, cell_weights};
use crate::oracles::{
    branching_multiplicity, character_branching_oracle, crosscheck_compact, crosscheck_u_n_1, DominantWeight,
};
use crate::recipe::{
    arch_root_number, check_relevancy, dist, distinguished_pair, fiber_connectivity_report, harris_numerology, DistValue,
    RootLedger, Sign,
};
use crate::weights::{enumerate_strings, HalfInt, InfinitesimalCharacter, InterlacingString, MultiPlaceString, Symbol};

pub const VERIFY_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name,
            pass,
            detail: detail.into(),
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn counts_detail(ns: impl Iterator<Item = usize>) -> String {
    ns.map(|n| enumerate_strings(n).len().to_string()).collect::<Vec<_>>().join("+")
}

/// Runs `check` on every string of rank `lo..=hi`, returning the number checked
/// and the first failure.
fn over_strings(lo: usize, hi: usize, check: impl Fn(&InterlacingString) -> bool + Sync) -> (usize, Option<InterlacingString>) {
    let mut total = 0;
    for n in lo..=hi {
        let strings = enumerate_strings(n);
        total += strings.len();
        if let Some(bad) = strings.par_iter().find_first(|s| !check(s)) {
            return (total, Some(bad.clone()));
        }
    }
    (total, None)
}

fn string_check(name: &'static str, lo: usize, hi: usize, check: impl Fn(&InterlacingString) -> bool + Sync) -> Check {
    match over_strings(lo, hi, check) {
        (_, None) => Check::new(name, true, format!("{} strings OK", counts_detail(lo..=hi))),
        (_, Some(bad)) => Check::new(name, false, format!("fails at {bad}")),
    }
}

/// A realization of `s` with wider gaps: consecutive merged entries are
/// `1 + 2e` (symbol change) or `2 + 2e` (repeat) half-units apart, `e` cycling
/// through `0..3` from `seed`.
pub fn spread_realization(s: &InterlacingString, seed: usize) -> (InfinitesimalCharacter, InfinitesimalCharacter) {
    let a_parity = ((s.n() - 1) % 2) as i64;
    let word = s.word();
    let mut current = if word[0] == Symbol::A { a_parity } else { 1 - a_parity };
    let mut doubled = vec![current];
    for (pos, pair) in word.windows(2).enumerate() {
        let extra = 2 * ((pos * 7 + seed) % 3) as i64;
        current -= if pair[0] == pair[1] { 2 } else { 1 } + extra;
        doubled.push(current);
    }
    let mid = (doubled[0] + doubled[doubled.len() - 1]) / 2;
    let shift = mid - mid.rem_euclid(2);
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (&sym, &d) in word.iter().zip(&doubled) {
        let v = HalfInt::from_doubled(d - shift);
        match sym {
            Symbol::A => a.push(v),
            Symbol::B => b.push(v),
        }
    }
    (
        InfinitesimalCharacter::new(a).expect("spread a is valid"),
        InfinitesimalCharacter::new(b).expect("spread b is valid"),
    )
}

fn panchishkin_holds(s: &InterlacingString) -> bool {
    let mut pairs = vec![];
    if let (a, Some(b)) = s.realize() {
        pairs.push((a, b));
    }
    pairs.extend((0..3).map(|seed| spread_realization(s, seed)));
    pairs.iter().all(|(a, b)| {
        let small = a.entries().iter().chain(b.entries()).all(|e| e.abs() <= HalfInt::from_int(20));
        let weights_ok = cell_weights(a, b).is_ok_and(|t| t.cells.iter().all(|c| c.wt_w + c.wt_wbar == 1));
        small && weights_ok && check_panchishkin(a, b) == Ok(true)
    })
}

fn branching_grid() -> Check {
    let mut pairs = 0usize;
    for rank in 1..=4 {
        let lambdas = DominantWeight::all_in_range(rank, -4, 4);
        let mus = DominantWeight::all_in_range(rank - 1, -4, 4);
        let bad = lambdas.par_iter().find_map_first(|l| {
            mus.iter()
                .find(|m| character_branching_oracle(l, m) != Ok(branching_multiplicity(l, m)))
                .map(|m| format!("{l} -> {m}"))
        });
        if let Some(bad) = bad {
            return Check::new("branching-oracles", false, format!("disagree at {bad}"));
        }
        pairs += lambdas.len() * mus.len();
    }
    Check::new("branching-oracles", true, format!("{pairs} weight pairs agree"))
}

fn wall_crossing(max_n: usize) -> Check {
    let mut tuples = 0usize;
    for n in 1..=max_n {
        let strings = enumerate_strings(n);
        let mut ms: Vec<MultiPlaceString> = strings.iter().cloned().map(MultiPlaceString::single).collect();
        if n <= 6 {
            for s in &strings {
                for t in &strings {
                    ms.push(MultiPlaceString::new(vec![s.clone(), t.clone()]).expect("same rank"));
                }
            }
        }
        for eps in [Sign::Plus, Sign::Minus] {
            let bad = ms.par_iter().find_first(|m| {
                let ledger = RootLedger::new(eps, m.g());
                !wall_crossing_report(m, &ledger).is_ok_and(|r| r.exactly_one_incoherent)
            });
            if let Some(m) = bad {
                return Check::new("wall-crossing", false, format!("fails at ({m}) with eps_finite {eps}"));
            }
        }
        tuples += ms.len();
    }
    Check::new("wall-crossing", true, format!("{tuples} tuples x 2 signs, g <= 2, OK"))
}

pub fn run_checks(max_n: usize) -> Result<Vec<Check>> {
    if max_n == 0 || max_n > VERIFY_MAX_N {
        return Err(Error::BoundExceeded {
            what: "max-n",
            value: max_n as i64,
            bound: VERIFY_MAX_N as i64,
        });
    }
    let top = max_n.min(6);
    let mut checks = Vec::new();

    let counts_ok = (2..=max_n).all(|n| {
        let strings = enumerate_strings(n);
        strings.len() as u64 == binomial(2 * n as u64 - 1, n as u64) && strings.windows(2).all(|w| w[0] < w[1])
    });
    checks.push(Check::new(
        "enumeration-counts",
        counts_ok,
        format!("{} strings, C(2n-1, n)", counts_detail(2..=max_n)),
    ));
    checks.push(string_check("tableau-bijection", 2, max_n, |s| {
        let t = s.to_tableau();
        t.to_interlacing() == *s && t.area() == s.area()
    }));
    checks.push(string_check("relevancy-lemma", 2, max_n, |s| check_relevancy(&distinguished_pair(s))));

    let endpoints_ok = (2..=max_n).all(|n| {
        let dp = distinguished_pair(&InterlacingString::diagonal(n));
        let want = n % 2 == 0;
        dp.hc_small.bits().iter().chain(dp.hc_big.bits()).all(|&b| b == want)
    });
    checks.push(Check::new(
        "compact-endpoints",
        endpoints_ok,
        format!("diagonal codes for n = 2..{max_n}"),
    ));

    checks.push(string_check("root-number-wall-law", 2, max_n, |s| {
        let e = arch_root_number(s);
        s.nearby().iter().all(|t| arch_root_number(t) == -e) && s.block_moves().iter().all(|t| arch_root_number(t) == e)
    }));

    let mut dist_check = string_check("dist-block-invariance", 2, max_n, |s| {
        let d = dist(s);
        s.block_moves().iter().all(|t| dist(t) == d)
    });
    if max_n >= 4 {
        let pinned = DistValue {
            small: "010".parse::<BinaryCode>().expect("literal"),
            big: "0101".parse::<BinaryCode>().expect("literal"),
        };
        let ok = ["BAABBAA", "BBBAAAA"]
            .iter()
            .all(|w| dist(&w.parse().expect("literal")) == pinned);
        dist_check.pass &= ok;
        dist_check.detail += if ok { "; BAABBAA, BBBAAAA -> (010, 0101)" } else { "; pinned fiber changed" };
    }
    checks.push(dist_check);

    checks.push(string_check("selmer-self-duality", 2, max_n, |s| selmer_condition(s).is_self_dual()));
    checks.push(string_check("panchishkin", 2, top, panchishkin_holds));
    checks.push(string_check("greenberg-wiles", 2, top, |s| {
        let m = MultiPlaceString::single(s.clone());
        gw_rank_delta(&SelmerDatum::from_strings(&m)) == 0
            && s.nearby().iter().all(|t| {
                let mt = MultiPlaceString::single(t.clone());
                let (big, small) = if s.area() > t.area() { (&m, &mt) } else { (&mt, &m) };
                SelmerDatum::mixed(big, small).is_ok_and(|d| gw_rank_delta(&d) == 1)
            })
    }));
    checks.push(wall_crossing(top));
    checks.push(branching_grid());

    let compact_ok = (1..=top).all(|n| {
        crosscheck_compact(n).is_ok_and(|r| r.endpoint_codes_ok && r.supports_match && r.character_oracle_agrees != Some(false))
    });
    checks.push(Check::new(
        "compact-branching-support",
        compact_ok,
        format!("recipe support = branching support for n = 1..{top}"),
    ));

    let blattner_n = max_n.saturating_sub(1).min(5);
    let mut blattner_ok = true;
    let mut shape_failures = Vec::new();
    let mut cases = 0;
    for n in 1..=blattner_n {
        for k in 1..=n + 1 {
            cases += 1;
            match crosscheck_u_n_1(n, k) {
                Ok(r) => {
                    blattner_ok &= r.blattner_multiplicity == 1 && r.support_is_pattern && r.unseparated_b_vanish;
                    if !r.literal_code_shape {
                        shape_failures.push(format!("(n={n},k={k})"));
                    }
                }
                Err(_) => blattner_ok = false,
            }
        }
    }
    checks.push(Check::new(
        "blattner-support",
        blattner_ok,
        format!("{cases} (n, k) cases, quoted pattern is the whole support"),
    ));
    checks.push(if shape_failures.is_empty() {
        Check::new("blattner-code-shape", true, format!("{cases} (n, k) cases"))
    } else {
        Check::new(
            "blattner-code-shape",
            false,
            format!(
                "chi_(n+1) vs 1010...: {} of {cases} cases differ elsewhere, e.g. {}",
                shape_failures.len(),
                shape_failures[0]
            ),
        )
    });

    let harris_failures: Vec<String> = (1..=top)
        .flat_map(harris_numerology)
        .filter(|r| !r.holomorphic_numerology())
        .map(|r| format!("{} (q = {}, {})", r.string, r.q_small, r.q_big))
        .collect();
    checks.push(if harris_failures.is_empty() {
        Check::new("harris-numerology", true, format!("n = 1..{top}"))
    } else {
        Check::new(
            "harris-numerology",
            false,
            format!("{} strings with q != 0, e.g. {}", harris_failures.len(), harris_failures[0]),
        )
    });
    Ok(checks)
}

/// Informational lines: fiber connectivity is an open question, not a check.
pub fn fiber_summary(max_n: usize) -> Vec<String> {
    (1..=max_n.min(6))
        .map(|n| {
            let r = fiber_connectivity_report(n, crate::recipe::DEFAULT_BOUND).expect("within bound");
            format!(
                "fibers n={n}: {} strings, image {}, {} block classes, all fibers connected: {}",
                r.partition.string_count,
                r.partition.image_size(),
                r.block_class_count,
                r.all_connected
            )
        })
        .collect()
}
