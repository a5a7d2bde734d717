//! Harish-Chandra codes, signatures and the endoscopic relabelling.
//!
//! Bit `i` of a code always refers to the `i`-th largest entry of the
//! infinitesimal character. A Harish-Chandra code with `p` zeros and `q` ones
//! places a discrete series on `U(p, q)`.

use std::fmt;
use std::ops::BitXor;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::weights::{HalfInt, InfinitesimalCharacter};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BinaryCode {
    bits: Vec<bool>,
}

impl BinaryCode {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// The length-0 code; only arises as the small code of a rank-1 pair.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![false; len] }
    }

    pub fn ones(len: usize) -> Self {
        Self { bits: vec![true; len] }
    }

    /// The unit code with a single 1 at 1-indexed position `k`.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut bits = vec![false; len];
        bits[k - 1] = true;
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// 1-indexed.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    /// 1-indexed positions where the two codes differ.
    pub fn differing_positions(&self, other: &BinaryCode) -> Vec<usize> {
        assert_eq!(self.len(), other.len(), "codes of different lengths");
        (1..=self.len()).filter(|&i| self.bit(i) != other.bit(i)).collect()
    }

    /// Every code of the given length, in lexicographic order.
    pub fn all(len: usize) -> impl Iterator<Item = BinaryCode> {
        (0u64..1 << len).map(move |m| BinaryCode {
            bits: (0..len).map(|i| m >> (len - 1 - i) & 1 == 1).collect(),
        })
    }
}

impl BitXor for &BinaryCode {
    type Output = BinaryCode;

    fn bitxor(self, rhs: &BinaryCode) -> BinaryCode {
        assert_eq!(self.len(), rhs.len(), "codes of different lengths");
        BinaryCode {
            bits: self.bits.iter().zip(&rhs.bits).map(|(a, b)| a ^ b).collect(),
        }
    }
}

impl FromStr for BinaryCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                symbol => Err(Error::InvalidBit { symbol, position }),
            })
            .collect::<Result<Vec<_>>>()?;
        if bits.is_empty() {
            return Err(Error::EmptyCode);
        }
        Ok(Self { bits })
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for BinaryCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The signature `(p, q)` of `U(p, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    pub fn dim(self) -> usize {
        self.p + self.q
    }

    /// `U(n, 0)` or `U(0, n)`.
    pub fn is_definite(self) -> bool {
        self.p == 0 || self.q == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U({},{})", self.p, self.q)
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `p` = number of zeros, `q` = number of ones.
pub fn signature_of(code: &BinaryCode) -> Signature {
    Signature::new(code.count_zeros(), code.count_ones())
}

/// `0101...`: 0 at odd positions, 1 at even ones.
pub fn alternating_code(len: usize) -> BinaryCode {
    BinaryCode::new((1..=len).map(|k| k % 2 == 0).collect())
}

/// Choice of generic datum used to label a Vogan packet.
///
/// Odd-rank packets have a single generic member, with Harish-Chandra code
/// `01...010`. Even-rank packets have two, `01...01` (`PsiBar`) and `10...10`
/// (`Psi`). The distinguished-pair recipe uses `PsiBar`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GenericDatum {
    #[default]
    PsiBar,
    Psi,
}

/// Harish-Chandra code of the generic member (the trivial endoscopic character).
pub fn generic_code(len: usize, datum: GenericDatum) -> BinaryCode {
    let alt = alternating_code(len);
    match datum {
        GenericDatum::Psi if len.is_multiple_of(2) => alt.complement(),
        _ => alt,
    }
}

/// `eps_HC = eps_End + 01...` as a mod-2 sum. An involution.
pub fn hc_from_endoscopic(code: &BinaryCode) -> BinaryCode {
    hc_from_endoscopic_with(code, GenericDatum::PsiBar)
}

pub fn endoscopic_from_hc(code: &BinaryCode) -> BinaryCode {
    hc_from_endoscopic(code)
}

pub fn hc_from_endoscopic_with(code: &BinaryCode, datum: GenericDatum) -> BinaryCode {
    code ^ &generic_code(code.len(), datum)
}

/// Number of pairs `i < j` with a 0 at `i` and a 1 at `j`.
pub fn coherent_degree(code: &BinaryCode) -> usize {
    let mut zeros_seen = 0;
    let mut degree = 0;
    for &b in code.bits() {
        if b {
            degree += zeros_seen;
        } else {
            zeros_seen += 1;
        }
    }
    degree
}

/// `1^q 0^p`, the code of the holomorphic discrete series.
pub fn holomorphic_code(sig: Signature) -> BinaryCode {
    let mut bits = vec![true; sig.q];
    bits.extend(std::iter::repeat_n(false, sig.p));
    BinaryCode::new(bits)
}

/// A discrete-series label: infinitesimal character plus Harish-Chandra code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HCParameter {
    infchar: InfinitesimalCharacter,
    code: BinaryCode,
}

impl HCParameter {
    pub fn new(infchar: InfinitesimalCharacter, code: BinaryCode) -> Result<Self> {
        if infchar.rank() != code.len() {
            return Err(Error::LengthMismatch {
                code: code.len(),
                rank: infchar.rank(),
            });
        }
        Ok(Self { infchar, code })
    }

    pub fn infchar(&self) -> &InfinitesimalCharacter {
        &self.infchar
    }

    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    pub fn signature(&self) -> Signature {
        signature_of(&self.code)
    }

    /// `(a_{i_1}, ..., a_{i_p}; a_{j_1}, ..., a_{j_q})`: the entries at the
    /// zeros of the code, then those at the ones.
    pub fn split(&self) -> (Vec<HalfInt>, Vec<HalfInt>) {
        let (mut zeros, mut ones) = (Vec::new(), Vec::new());
        for (&e, &b) in self.infchar.entries().iter().zip(self.code.bits()) {
            if b {
                ones.push(e);
            } else {
                zeros.push(e);
            }
        }
        (zeros, ones)
    }

    pub fn coherent_degree(&self) -> usize {
        coherent_degree(&self.code)
    }
}
