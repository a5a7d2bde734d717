//! `U(n) ↓ U(n-1)` branching, three ways: the interlacing rule, a
//! Gelfand-Tsetlin row count, and exact Weyl-character arithmetic.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// Largest rank accepted by [`character_branching_oracle`].
pub const ORACLE_MAX_RANK: usize = 5;
/// Largest `|entry|` accepted by [`character_branching_oracle`].
pub const ORACLE_MAX_ENTRY: i64 = 8;

/// A weakly decreasing integer highest weight. Rank 0 is allowed (the trivial
/// group below `U(1)`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if let Some(index) = entries.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NonDominant { index });
        }
        Ok(Self { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self {
            entries: self.entries.iter().map(|e| e + by).collect(),
        }
    }

    /// All dominant weights of the given rank with entries in `lo..=hi`.
    pub fn all_in_range(rank: usize, lo: i64, hi: i64) -> Vec<DominantWeight> {
        (lo..=hi)
            .rev()
            .combinations_with_replacement(rank)
            .map(|entries| DominantWeight { entries })
            .collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `1` if `w_1 >= v_1 >= w_2 >= ... >= v_{n-1} >= w_n`, else `0`. Weights of
/// mismatched rank never branch.
pub fn branching_multiplicity(lambda: &DominantWeight, mu: &DominantWeight) -> u64 {
    if mu.rank() + 1 != lambda.rank() {
        return 0;
    }
    let w = lambda.entries();
    let ok = mu.entries().iter().enumerate().all(|(i, &v)| w[i] >= v && v >= w[i + 1]);
    u64::from(ok)
}

/// Counts second rows of Gelfand-Tsetlin patterns with top row `lambda` that
/// equal `mu`, by walking every admissible row.
pub fn gelfand_tsetlin_count(lambda: &DominantWeight, mu: &DominantWeight) -> u64 {
    if mu.rank() + 1 != lambda.rank() {
        return 0;
    }
    if mu.rank() == 0 {
        return 1;
    }
    let w = lambda.entries();
    (0..mu.rank())
        .map(|i| w[i + 1]..=w[i])
        .multi_cartesian_product()
        .filter(|row| row.as_slice() == mu.entries())
        .count() as u64
}

/// Dense polynomial in `vars` variables with exponents `0..side`.
struct Dense {
    vars: usize,
    side: usize,
    coeffs: Vec<i64>,
}

impl Dense {
    fn new(vars: usize, side: usize) -> Self {
        Self {
            vars,
            side,
            coeffs: vec![0; side.pow(vars as u32)],
        }
    }

    fn index(&self, exps: &[usize]) -> usize {
        exps.iter().fold(0, |acc, &e| acc * self.side + e)
    }

    /// Exact division by `(x_axis - 1)`: `q_e = -(p_0 + ... + p_e)` along the axis.
    fn divide_by_x_minus_one(&mut self, axis: usize) {
        let stride = self.side.pow((self.vars - 1 - axis) as u32);
        let block = stride * self.side;
        for start in (0..self.coeffs.len()).step_by(block) {
            for offset in 0..stride {
                let mut running = 0;
                for e in 0..self.side {
                    let i = start + offset + e * stride;
                    running += self.coeffs[i];
                    self.coeffs[i] = -running;
                }
                assert_eq!(running, 0, "polynomial not divisible by (x - 1)");
            }
        }
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Multiplicity read off the Weyl character: with `x_n = 1`,
/// `a_{λ+δ}(x', 1) / Π (x_i - 1) = Σ_μ m_μ a_{μ+δ'}(x')`, so `m_μ` is the
/// coefficient of `x'^{μ+δ'}`.
pub fn weyl_character_count(lambda: &DominantWeight, mu: &DominantWeight) -> u64 {
    let n = lambda.rank();
    if n == 0 || mu.rank() + 1 != n {
        return 0;
    }
    if n == 1 {
        return 1;
    }
    // translation invariance: make every entry of lambda non-negative
    let shift = -lambda.entries()[n - 1];
    let lam = lambda.shifted(shift);
    let mu = mu.shifted(shift);
    let exps: Vec<usize> = lam
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &l)| (l + (n - 1 - i) as i64) as usize)
        .collect();
    let vars = n - 1;
    let side = exps[0] + 1;
    let mut poly = Dense::new(vars, side);
    for perm in (0..n).permutations(n) {
        let sign = permutation_sign(&perm);
        let monomial: Vec<usize> = perm[..vars].iter().map(|&p| exps[p]).collect();
        let i = poly.index(&monomial);
        poly.coeffs[i] += sign;
    }
    for axis in 0..vars {
        poly.divide_by_x_minus_one(axis);
    }
    let target: Option<Vec<usize>> = mu
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &m)| {
            let e = m + (vars - 1 - i) as i64;
            (0..side as i64).contains(&e).then_some(e as usize)
        })
        .collect();
    match target {
        Some(t) => {
            let c = poly.coeffs[poly.index(&t)];
            u64::try_from(c).expect("branching multiplicities are non-negative")
        }
        None => 0,
    }
}

/// Both routes, checked against each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRoutes {
    pub gelfand_tsetlin: u64,
    pub weyl_character: u64,
}

pub fn character_branching_routes(lambda: &DominantWeight, mu: &DominantWeight) -> Result<OracleRoutes> {
    if lambda.rank() > ORACLE_MAX_RANK {
        return Err(Error::BoundExceeded {
            what: "rank",
            value: lambda.rank() as i64,
            bound: ORACLE_MAX_RANK as i64,
        });
    }
    if let Some(&e) = lambda
        .entries()
        .iter()
        .chain(mu.entries())
        .find(|e| e.abs() > ORACLE_MAX_ENTRY)
    {
        return Err(Error::BoundExceeded {
            what: "|weight entry|",
            value: e.abs(),
            bound: ORACLE_MAX_ENTRY,
        });
    }
    if mu.rank() + 1 != lambda.rank() {
        return Err(Error::IncompatibleRanks {
            big: lambda.rank(),
            small: mu.rank(),
        });
    }
    Ok(OracleRoutes {
        gelfand_tsetlin: gelfand_tsetlin_count(lambda, mu),
        weyl_character: weyl_character_count(lambda, mu),
    })
}

/// Multiplicity of `mu` in `lambda|_{U(n-1)}`, computed independently of the
/// interlacing rule. Panics if the two internal routes ever disagree.
pub fn character_branching_oracle(lambda: &DominantWeight, mu: &DominantWeight) -> Result<u64> {
    let r = character_branching_routes(lambda, mu)?;
    assert_eq!(
        r.gelfand_tsetlin, r.weyl_character,
        "branching routes disagree for {lambda} -> {mu}"
    );
    Ok(r.weyl_character)
}
