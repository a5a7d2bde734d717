//! Blattner's formula for the `U(n) × U(1)` types of a discrete series of
//! `U(n, 1)`, in the rank-one case where the partition function is a 0/1
//! predicate.

use itertools::Itertools;
use serde::Serialize;

use super::branching::DominantWeight;
use crate::error::{Error, Result};
use crate::weights::{HalfInt, InfinitesimalCharacter, InterlacingString, Symbol};

/// Largest compact rank for which the `n!`-term Weyl sum is evaluated.
pub const BLATTNER_MAX_N: usize = 6;

/// Discrete series of `U(n, 1)` with infinitesimal character `a` (rank `n+1`)
/// whose noncompact coordinate sits at position `k`, paired with the
/// `U(n) × U(1)` type `(mu, mu_u1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BlattnerInput {
    pub n: usize,
    pub k: usize,
    pub a: InfinitesimalCharacter,
    pub mu: DominantWeight,
    pub mu_u1: i64,
}

fn check_position(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n + 1 {
        return Err(Error::InvalidPosition { k, max: n + 1 });
    }
    Ok(())
}

fn check_bound(n: usize) -> Result<()> {
    if n > BLATTNER_MAX_N {
        return Err(Error::BoundExceeded {
            what: "n",
            value: n as i64,
            bound: BLATTNER_MAX_N as i64,
        });
    }
    Ok(())
}

/// `Σ a - Σ b`, the `U(1)` coordinate that balances the trace.
fn balancing_u1(a: &InfinitesimalCharacter, b: &[HalfInt]) -> i64 {
    let total = a.trace() - b.iter().copied().sum::<HalfInt>();
    total.to_integer().expect("trace difference of opposite parities is integral")
}

impl BlattnerInput {
    pub fn new(k: usize, a: InfinitesimalCharacter, mu: Vec<i64>, mu_u1: i64) -> Result<Self> {
        let n = a.rank() - 1;
        check_position(k, n)?;
        if mu.len() != n {
            return Err(Error::IncompatibleRanks {
                big: a.rank(),
                small: mu.len(),
            });
        }
        let mu = DominantWeight::new(mu)?;
        let input = Self { n, k, a, mu, mu_u1 };
        let expected = balancing_u1(&input.a, &input.mu_plus_rho_c()[..n]);
        if expected != mu_u1 {
            return Err(Error::TraceImbalance {
                expected,
                found: mu_u1,
            });
        }
        Ok(input)
    }

    /// Reads `mu + rho_c = (b_1, ..., b_n, b_{n+1})` off a compact character `b`.
    pub fn from_interlacing(k: usize, a: &InfinitesimalCharacter, b: &InfinitesimalCharacter) -> Result<Self> {
        if b.rank() + 1 != a.rank() {
            return Err(Error::IncompatibleRanks {
                big: a.rank(),
                small: b.rank(),
            });
        }
        let rho = InfinitesimalCharacter::rho(b.rank());
        let mu = b
            .entries()
            .iter()
            .zip(&rho)
            .map(|(&x, &r)| (x - r).to_integer().expect("b and rho_c share parity"))
            .collect();
        Self::new(k, a.clone(), mu, balancing_u1(a, b.entries()))
    }

    /// Uses the canonical realization of a rank-`(n+1)` string.
    pub fn from_string(k: usize, s: &InterlacingString) -> Result<Self> {
        let (a, b) = s.realize();
        match b {
            Some(b) => Self::from_interlacing(k, &a, &b),
            None => Err(Error::IncompatibleRanks { big: 1, small: 0 }),
        }
    }

    /// `(a_1, ..., a_{k-1}, a_{k+1}, ..., a_{n+1}, a_k)`.
    pub fn lambda(&self) -> Vec<HalfInt> {
        let e = self.a.entries();
        let mut out: Vec<HalfInt> = e.iter().enumerate().filter(|&(i, _)| i + 1 != self.k).map(|(_, &x)| x).collect();
        out.push(e[self.k - 1]);
        out
    }

    /// `(a_1 + 1/2, ..., a_{k-1} + 1/2, a_{k+1} - 1/2, ..., a_{n+1} - 1/2, a_k + (n - 2k + 2)/2)`.
    pub fn lambda_plus_rho_n(&self) -> Vec<HalfInt> {
        lambda_plus_rho_n(&self.a, self.k)
    }

    pub fn mu_plus_rho_c(&self) -> Vec<HalfInt> {
        let rho = InfinitesimalCharacter::rho(self.n);
        let mut out: Vec<HalfInt> = self
            .mu
            .entries()
            .iter()
            .zip(&rho)
            .map(|(&m, &r)| HalfInt::from_int(m) + r)
            .collect();
        out.push(HalfInt::from_int(self.mu_u1));
        out
    }
}

fn lambda_plus_rho_n(a: &InfinitesimalCharacter, k: usize) -> Vec<HalfInt> {
    let n = a.rank() - 1;
    let e = a.entries();
    let mut out = Vec::with_capacity(n + 1);
    out.extend(e[..k - 1].iter().map(|&x| x + HalfInt::HALF));
    out.extend(e[k..].iter().map(|&x| x - HalfInt::HALF));
    out.push(e[k - 1] + HalfInt::from_doubled(n as i64 - 2 * k as i64 + 2));
    out
}

/// `Q(c) = 1` iff `c_1..c_{k-1} >= 0`, `c_k..c_n <= 0` and `Σ c = 0`.
fn q_predicate(c: &[HalfInt], k: usize) -> bool {
    let n = c.len() - 1;
    c[..k - 1].iter().all(|&x| x >= HalfInt::ZERO)
        && c[k - 1..n].iter().all(|&x| x <= HalfInt::ZERO)
        && c.iter().copied().sum::<HalfInt>() == HalfInt::ZERO
}

/// `Σ_{w ∈ S_n} sgn(w) Q(w(mu + rho_c) - (lambda + rho_n))`, with `w` acting on
/// the first `n` coordinates.
fn alternating_sum(k: usize, lrn: &[HalfInt], mrc: &[HalfInt]) -> i64 {
    let n = lrn.len() - 1;
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut c: Vec<HalfInt> = perm.iter().enumerate().map(|(i, &p)| mrc[p] - lrn[i]).collect();
            c.push(mrc[n] - lrn[n]);
            if q_predicate(&c, k) {
                permutation_sign(&perm)
            } else {
                0
            }
        })
        .sum()
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = perm.iter().tuple_combinations().filter(|(x, y)| x > y).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn blattner_multiplicity(input: &BlattnerInput) -> Result<u64> {
    check_bound(input.n)?;
    let sum = alternating_sum(input.k, &input.lambda_plus_rho_n(), &input.mu_plus_rho_c());
    Ok(u64::try_from(sum).expect("Blattner multiplicities of dominant types are non-negative"))
}

/// The same alternating sum on an arbitrary (possibly non-dominant or
/// singular) `b = mu + rho_c`, with the `U(1)` coordinate balancing the trace.
pub fn formal_blattner_sum(k: usize, a: &InfinitesimalCharacter, b: &[HalfInt]) -> Result<i64> {
    let n = a.rank() - 1;
    check_position(k, n)?;
    check_bound(n)?;
    if b.len() != n {
        return Err(Error::IncompatibleRanks {
            big: a.rank(),
            small: b.len(),
        });
    }
    let mut mrc = b.to_vec();
    mrc.push(HalfInt::from_int(balancing_u1(a, b)));
    Ok(alternating_sum(k, &lambda_plus_rho_n(a, k), &mrc))
}

/// The rank-`(n+1)` string `b_1 > a_1 > ... > b_{k-1} > a_{k-1} > a_k > a_{k+1}
/// > b_k > a_{k+2} > ... > a_{n+1} > b_n`.
pub fn blattner_pattern(n: usize, k: usize) -> Result<InterlacingString> {
    check_position(k, n)?;
    let mut word = Vec::with_capacity(2 * n + 1);
    for _ in 1..k {
        word.extend([Symbol::B, Symbol::A]);
    }
    word.push(Symbol::A);
    for _ in k..=n {
        word.extend([Symbol::A, Symbol::B]);
    }
    InterlacingString::new(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::enumerate_strings;

    fn h(d: i64) -> HalfInt {
        HalfInt::from_doubled(d)
    }

    #[test]
    fn patterns() {
        assert_eq!(blattner_pattern(2, 1).unwrap().to_string(), "AABAB");
        assert_eq!(blattner_pattern(2, 2).unwrap().to_string(), "BAAAB");
        assert_eq!(blattner_pattern(2, 3).unwrap().to_string(), "BABAA");
        assert_eq!(blattner_pattern(1, 1).unwrap().to_string(), "AAB");
        assert_eq!(blattner_pattern(2, 4), Err(Error::InvalidPosition { k: 4, max: 3 }));
    }

    #[test]
    fn shifts() {
        // a = (2, 0, -2), b = (3/2, -1/2), k = 2
        let a = InfinitesimalCharacter::from_doubled(&[4, 0, -4]).unwrap();
        let input = BlattnerInput::from_interlacing(2, &a, &InfinitesimalCharacter::from_doubled(&[3, -1]).unwrap()).unwrap();
        assert_eq!(input.lambda(), vec![h(4), h(-4), h(0)]);
        assert_eq!(input.lambda_plus_rho_n(), vec![h(5), h(-5), h(0)]);
        assert_eq!(input.mu_plus_rho_c(), vec![h(3), h(-1), h(-2)]);
        assert_eq!(input.mu.entries(), &[1, 0]);
    }

    #[test]
    fn smallest_case_by_hand() {
        // n = 1, k = 1: a = (1/2, -1/2), b = (0); the Weyl group is trivial
        let a = InfinitesimalCharacter::from_doubled(&[1, -1]).unwrap();
        let b = InfinitesimalCharacter::from_doubled(&[0]).unwrap();
        let input = BlattnerInput::from_interlacing(1, &a, &b).unwrap();
        // lambda + rho_n = (a_2 - 1/2, a_1 + 1/2) = (-1, 1); mu + rho_c = (0, 0)
        assert_eq!(input.lambda_plus_rho_n(), vec![h(-2), h(2)]);
        assert_eq!(input.mu_plus_rho_c(), vec![h(0), h(0)]);
        // c = (1, -1): c_1 <= 0 fails, so Q = 0
        assert_eq!(blattner_multiplicity(&input), Ok(0));
        // b = (-1) lies below both entries of a: pattern AAB, the k = 1 shape
        let b = InfinitesimalCharacter::from_doubled(&[-2]).unwrap();
        let input = BlattnerInput::from_interlacing(1, &a, &b).unwrap();
        assert_eq!(blattner_multiplicity(&input), Ok(1));
    }

    #[test]
    fn quoted_pattern_is_the_support() {
        for n in 1..=4 {
            for k in 1..=n + 1 {
                let pattern = blattner_pattern(n, k).unwrap();
                let support: Vec<_> = enumerate_strings(n + 1)
                    .into_iter()
                    .filter(|s| blattner_multiplicity(&BlattnerInput::from_string(k, s).unwrap()) == Ok(1))
                    .collect();
                assert_eq!(support, vec![pattern], "n={n} k={k}");
            }
        }
    }

    #[test]
    fn validation() {
        let a = InfinitesimalCharacter::from_doubled(&[4, 0, -4]).unwrap();
        assert_eq!(
            BlattnerInput::new(2, a.clone(), vec![0, 1], -1),
            Err(Error::NonDominant { index: 0 })
        );
        assert_eq!(
            BlattnerInput::new(2, a.clone(), vec![1, 0], 5),
            Err(Error::TraceImbalance { expected: -1, found: 5 })
        );
        assert_eq!(
            BlattnerInput::new(0, a.clone(), vec![1, 0], -2),
            Err(Error::InvalidPosition { k: 0, max: 3 })
        );
        let big = InfinitesimalCharacter::from_doubled(&[13, 11, 9, 7, 5, 3, 1, -1]).unwrap();
        let input = BlattnerInput::from_interlacing(1, &big, &InfinitesimalCharacter::from_doubled(&[12, 10, 8, 6, 4, 2, 0]).unwrap()).unwrap();
        assert!(matches!(blattner_multiplicity(&input), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn formal_sum_is_alternating() {
        let a = InfinitesimalCharacter::from_doubled(&[7, 3, -1, -5]).unwrap();
        let b = vec![h(4), h(0), h(-4)];
        let base = formal_blattner_sum(2, &a, &b).unwrap();
        let swapped = vec![h(0), h(4), h(-4)];
        assert_eq!(formal_blattner_sum(2, &a, &swapped).unwrap(), -base);
        let singular = vec![h(2), h(2), h(-4)];
        assert_eq!(formal_blattner_sum(2, &a, &singular).unwrap(), 0);
    }
}
