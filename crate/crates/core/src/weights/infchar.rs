use std::fmt;

use serde::Serialize;

use super::HalfInt;
use crate::error::{Error, Result};

/// A regular infinitesimal character `(a_1 > ... > a_n)` with every entry in
/// `Z + (n-1)/2`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct InfinitesimalCharacter {
    entries: Vec<HalfInt>,
}

impl InfinitesimalCharacter {
    pub fn new(entries: Vec<HalfInt>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyCharacter);
        }
        let rank = entries.len();
        let parity = ((rank - 1) % 2) as i64;
        for (index, e) in entries.iter().enumerate() {
            if e.parity() != parity {
                return Err(Error::ParityViolation { index, rank });
            }
        }
        for (index, pair) in entries.windows(2).enumerate() {
            if pair[0] <= pair[1] {
                return Err(Error::NotStrictlyDecreasing { index });
            }
        }
        Ok(Self { entries })
    }

    /// Builds a character from doubled values, e.g. `[7, 3, -1, -5]` for
    /// `(7/2, 3/2, -1/2, -5/2)`.
    pub fn from_doubled(doubled: &[i64]) -> Result<Self> {
        Self::new(doubled.iter().copied().map(HalfInt::from_doubled).collect())
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    /// The `i`-th largest entry, 1-indexed.
    pub fn get(&self, i: usize) -> HalfInt {
        self.entries[i - 1]
    }

    /// Parity of the doubled entries, `(rank - 1) mod 2`.
    pub fn parity(&self) -> i64 {
        self.entries[0].parity()
    }

    pub fn shifted(&self, by: i64) -> Self {
        Self {
            entries: self.entries.iter().map(|&e| e + HalfInt::from_int(by)).collect(),
        }
    }

    pub fn trace(&self) -> HalfInt {
        self.entries.iter().copied().sum()
    }

    /// `rho = ((n-1)/2, (n-3)/2, ..., (1-n)/2)`, the half sum of positive roots.
    pub fn rho(rank: usize) -> Vec<HalfInt> {
        (0..rank)
            .map(|i| HalfInt::from_doubled(rank as i64 - 1 - 2 * i as i64))
            .collect()
    }
}

impl fmt::Display for InfinitesimalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for InfinitesimalCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valid_characters() {
        let a = InfinitesimalCharacter::from_doubled(&[7, 3, -1, -5]).unwrap();
        assert_eq!(a.rank(), 4);
        let a = InfinitesimalCharacter::from_doubled(&[1, -1]).unwrap();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.to_string(), "(1/2, -1/2)");
    }

    #[test]
    fn rejects_ties_and_bad_parity() {
        assert_eq!(
            InfinitesimalCharacter::from_doubled(&[1, 1]),
            Err(Error::NotStrictlyDecreasing { index: 0 })
        );
        assert_eq!(
            InfinitesimalCharacter::from_doubled(&[2, 0]),
            Err(Error::ParityViolation { index: 0, rank: 2 })
        );
        assert_eq!(
            InfinitesimalCharacter::from_doubled(&[4, 1, 0]),
            Err(Error::ParityViolation { index: 1, rank: 3 })
        );
        assert_eq!(InfinitesimalCharacter::new(vec![]), Err(Error::EmptyCharacter));
    }

    #[test]
    fn rho_matches_rank() {
        let r: Vec<i64> = InfinitesimalCharacter::rho(4).iter().map(|h| h.doubled()).collect();
        assert_eq!(r, vec![3, 1, -1, -3]);
    }
}
