//! Recipe versus oracles on the two families where both are explicit.

use serde::Serialize;

use super::blattner::{blattner_multiplicity, blattner_pattern, BlattnerInput, BLATTNER_MAX_N};
use super::branching::{branching_multiplicity, character_branching_oracle, DominantWeight, ORACLE_MAX_ENTRY, ORACLE_MAX_RANK};
use crate::discrete_series::{alternating_code, BinaryCode, Signature};
use crate::error::{Error, Result};
use crate::recipe::distinguished_pair;
use crate::weights::{enumerate_strings, InfinitesimalCharacter, InterlacingString};

/// `(lambda, mu) = (a - rho_n, b - rho_{n-1})` for the canonical realization of
/// `s`: the highest weights of the finite-dimensional representations of
/// `U(n)` and `U(n-1)` with infinitesimal characters `a` and `b`.
pub fn compact_weights(s: &InterlacingString) -> (DominantWeight, DominantWeight) {
    let (a, b) = s.realize();
    let lower = |c: &InfinitesimalCharacter| {
        let rho = InfinitesimalCharacter::rho(c.rank());
        let e = c
            .entries()
            .iter()
            .zip(&rho)
            .map(|(&x, &r)| (x - r).to_integer().expect("c and rho share parity"))
            .collect();
        DominantWeight::new(e).expect("regular characters give dominant weights")
    };
    let mu = b.as_ref().map(lower).unwrap_or_else(|| DominantWeight::new(vec![]).expect("empty is dominant"));
    (lower(&a), mu)
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n == 0 || n > bound {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as i64,
            bound: bound as i64,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactCrosscheck {
    pub n: usize,
    pub diagonal: InterlacingString,
    pub hc_small: BinaryCode,
    pub hc_big: BinaryCode,
    pub sig_small: Signature,
    pub sig_big: Signature,
    /// All ones for even `n`, all zeros for odd `n`.
    pub endpoint_codes_ok: bool,
    /// Strings whose distinguished pair is definite at both ranks.
    pub recipe_support: Vec<InterlacingString>,
    /// Strings whose compact weights branch with multiplicity 1.
    pub branching_support: Vec<InterlacingString>,
    /// `None` when outside the character oracle's bounds.
    pub character_oracle_agrees: Option<bool>,
    pub supports_match: bool,
}

pub fn crosscheck_compact(n: usize) -> Result<CompactCrosscheck> {
    check_bound(n, BLATTNER_MAX_N)?;
    let diagonal = InterlacingString::diagonal(n);
    let dp = distinguished_pair(&diagonal);
    let expected_bit = n.is_multiple_of(2);
    let endpoint_codes_ok = dp.hc_small.bits().iter().all(|&b| b == expected_bit)
        && dp.hc_big.bits().iter().all(|&b| b == expected_bit);

    let strings = enumerate_strings(n);
    let recipe_support: Vec<_> = strings
        .iter()
        .filter(|s| {
            let p = distinguished_pair(s);
            p.sig_small.is_definite() && p.sig_big.is_definite()
        })
        .cloned()
        .collect();
    let weights: Vec<_> = strings.iter().map(compact_weights).collect();
    let branching_support: Vec<_> = strings
        .iter()
        .zip(&weights)
        .filter(|(_, (l, m))| branching_multiplicity(l, m) == 1)
        .map(|(s, _)| s.clone())
        .collect();
    let in_range = weights.iter().all(|(l, m)| {
        l.rank() <= ORACLE_MAX_RANK && l.entries().iter().chain(m.entries()).all(|e| e.abs() <= ORACLE_MAX_ENTRY)
    });
    let character_oracle_agrees = in_range.then(|| {
        weights
            .iter()
            .all(|(l, m)| character_branching_oracle(l, m).ok() == Some(branching_multiplicity(l, m)))
    });
    Ok(CompactCrosscheck {
        n,
        hc_small: dp.hc_small,
        hc_big: dp.hc_big,
        sig_small: dp.sig_small,
        sig_big: dp.sig_big,
        endpoint_codes_ok,
        supports_match: recipe_support == branching_support,
        recipe_support,
        branching_support,
        character_oracle_agrees,
        diagonal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UN1Crosscheck {
    /// Compact rank; the strings have rank `n + 1`.
    pub n: usize,
    pub k: usize,
    pub pattern: InterlacingString,
    pub chi_small: BinaryCode,
    pub chi_big: BinaryCode,
    pub hc_small: BinaryCode,
    pub hc_big: BinaryCode,
    pub sig_small: Signature,
    pub sig_big: Signature,
    pub blattner_multiplicity: u64,
    /// Strings of rank `n + 1` with Blattner multiplicity 1 at this `k`.
    pub blattner_support: Vec<InterlacingString>,
    pub support_is_pattern: bool,
    /// Every string containing `BB` has multiplicity 0.
    pub unseparated_b_vanish: bool,
    /// `chi_small` is `...010` and `chi_big` differs from `1010...` exactly
    /// at bit `k`, read literally.
    pub literal_code_shape: bool,
    /// `hc_small` is constant and `hc_big` differs from the same constant
    /// exactly at bit `k`: a definite small group inside signature `(n,1)` or `(1,n)`.
    pub hc_code_shape: bool,
}

/// Alternating code of the given length ending in 0: `...1010`.
fn alternating_ending_zero(len: usize) -> BinaryCode {
    BinaryCode::new((1..=len).map(|i| (len - i) % 2 == 1).collect())
}

/// Alternating code of the given length starting with 1: `1010...`.
fn alternating_starting_one(len: usize) -> BinaryCode {
    alternating_code(len).complement()
}

pub fn crosscheck_u_n_1(n: usize, k: usize) -> Result<UN1Crosscheck> {
    check_bound(n, BLATTNER_MAX_N)?;
    let pattern = blattner_pattern(n, k)?;
    let dp = distinguished_pair(&pattern);
    let multiplicity = blattner_multiplicity(&BlattnerInput::from_string(k, &pattern)?)?;

    let mut blattner_support = Vec::new();
    let mut unseparated_b_vanish = true;
    for s in enumerate_strings(n + 1) {
        let m = blattner_multiplicity(&BlattnerInput::from_string(k, &s)?)?;
        if m == 1 {
            blattner_support.push(s.clone());
        }
        if s.to_string().contains("BB") && m != 0 {
            unseparated_b_vanish = false;
        }
    }

    let literal_code_shape = dp.chi_small == alternating_ending_zero(n)
        && dp.chi_big.differing_positions(&alternating_starting_one(n + 1)) == vec![k];
    let constant = dp.hc_small.bits().first().copied().unwrap_or(false);
    let hc_code_shape = dp.hc_small.bits().iter().all(|&b| b == constant)
        && dp.hc_big.differing_positions(&BinaryCode::new(vec![constant; n + 1])) == vec![k];

    Ok(UN1Crosscheck {
        n,
        k,
        support_is_pattern: blattner_support == [pattern.clone()],
        pattern,
        chi_small: dp.chi_small,
        chi_big: dp.chi_big,
        hc_small: dp.hc_small,
        hc_big: dp.hc_big,
        sig_small: dp.sig_small,
        sig_big: dp.sig_big,
        blattner_multiplicity: multiplicity,
        blattner_support,
        unseparated_b_vanish,
        literal_code_shape,
        hc_code_shape,
    })
}
