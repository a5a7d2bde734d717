use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::InterlacingString;
use crate::error::{Error, Result};

/// One interlacing string per archimedean place, all of the same rank.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPlaceString {
    strings: Vec<InterlacingString>,
}

impl MultiPlaceString {
    pub fn new(strings: Vec<InterlacingString>) -> Result<Self> {
        let first = strings.first().ok_or(Error::NoPlaces)?;
        if strings.iter().any(|s| s.n() != first.n()) {
            return Err(Error::MixedRanks);
        }
        Ok(Self { strings })
    }

    pub fn single(s: InterlacingString) -> Self {
        Self { strings: vec![s] }
    }

    pub fn g(&self) -> usize {
        self.strings.len()
    }

    pub fn n(&self) -> usize {
        self.strings[0].n()
    }

    pub fn strings(&self) -> &[InterlacingString] {
        &self.strings
    }

    pub fn place(&self, sigma: usize) -> &InterlacingString {
        &self.strings[sigma]
    }

    /// Tuples that agree with `self` at all places but one, and are nearby
    /// there. Sorted.
    pub fn nearby(&self) -> Vec<MultiPlaceString> {
        let mut out = BTreeSet::new();
        for (sigma, s) in self.strings.iter().enumerate() {
            for t in s.nearby() {
                let mut strings = self.strings.clone();
                strings[sigma] = t;
                out.insert(MultiPlaceString { strings });
            }
        }
        out.into_iter().collect()
    }

    /// The single place at which `self` and `other` differ, if they are nearby.
    pub fn nearby_place(&self, other: &MultiPlaceString) -> Option<usize> {
        if self.g() != other.g() {
            return None;
        }
        let mut differing = (0..self.g()).filter(|&i| self.strings[i] != other.strings[i]);
        let sigma = differing.next()?;
        if differing.next().is_some() {
            return None;
        }
        self.strings[sigma].nearby().contains(&other.strings[sigma]).then_some(sigma)
    }
}

impl FromStr for MultiPlaceString {
    type Err = Error;

    /// Comma-separated strings, one per place.
    fn from_str(s: &str) -> Result<Self> {
        let strings = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<InterlacingString>>>()?;
        MultiPlaceString::new(strings)
    }
}

impl fmt::Display for MultiPlaceString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.strings.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPlaceString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for MultiPlaceString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.strings.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nearby_multi_examples() {
        let one: MultiPlaceString = "ABA".parse().unwrap();
        let flat: Vec<_> = one.nearby().iter().map(|m| m.place(0).clone()).collect();
        assert_eq!(flat, one.place(0).nearby());

        let two: MultiPlaceString = "ABA,ABA".parse().unwrap();
        assert_eq!(two.nearby().len(), 4);
        let two: MultiPlaceString = "AAB,AAB".parse().unwrap();
        assert_eq!(two.nearby().len(), 2);
        for t in two.nearby() {
            assert!(two.nearby_place(&t).is_some());
        }
    }

    #[test]
    fn validation() {
        assert_eq!(MultiPlaceString::new(vec![]), Err(Error::NoPlaces));
        assert_eq!("ABA,ABABA".parse::<MultiPlaceString>(), Err(Error::MixedRanks));
    }
}
