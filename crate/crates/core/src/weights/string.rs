use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::{HalfInt, InfinitesimalCharacter, Tableau};
use crate::error::{Error, Result};

/// `A` marks an entry of the rank-`n` character, `B` an entry of the rank-`n-1`
/// one. Ordered `A < B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    A,
    B,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::A => 'A',
            Symbol::B => 'B',
        }
    }
}

/// A word of length `2n-1` with `n` A's and `n-1` B's, read left to right in
/// descending weight order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InterlacingString {
    n: usize,
    word: Vec<Symbol>,
}

impl InterlacingString {
    pub fn new(word: Vec<Symbol>) -> Result<Self> {
        let a_count = word.iter().filter(|&&s| s == Symbol::A).count();
        let b_count = word.len() - a_count;
        if a_count == 0 || b_count + 1 != a_count {
            return Err(Error::SymbolCount { a_count, b_count });
        }
        Ok(Self { n: a_count, word })
    }

    /// Skips validation; callers guarantee the symbol counts.
    pub(crate) fn from_word_unchecked(n: usize, word: Vec<Symbol>) -> Self {
        debug_assert_eq!(word.len(), 2 * n - 1);
        Self { n, word }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `ABAB...A`: the perfectly interlaced string `a_1 > b_1 > ... > b_{n-1} > a_n`.
    pub fn diagonal(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let word = (0..2 * n - 1)
            .map(|k| if k % 2 == 0 { Symbol::A } else { Symbol::B })
            .collect();
        Self { n, word }
    }

    /// Number of pairs `(i, j)` with `a_i > b_j`, i.e. the shaded area of the
    /// tableau.
    pub fn area(&self) -> usize {
        let mut b_after = 0;
        let mut area = 0;
        for &s in self.word.iter().rev() {
            match s {
                Symbol::B => b_after += 1,
                Symbol::A => area += b_after,
            }
        }
        area
    }

    pub fn max_area(&self) -> usize {
        self.n * (self.n - 1)
    }

    /// For each A (in order), the number of B's to its right; the row lengths
    /// of the tableau.
    pub fn row_counts(&self) -> Vec<usize> {
        let mut remaining_b = self.n - 1;
        let mut rows = Vec::with_capacity(self.n);
        for &s in &self.word {
            match s {
                Symbol::B => remaining_b -= 1,
                Symbol::A => rows.push(remaining_b),
            }
        }
        rows
    }

    /// For each B (in order), the number of A's to its left; the column
    /// lengths of the tableau indexed by `j`.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut seen_a = 0;
        let mut cols = Vec::with_capacity(self.n.saturating_sub(1));
        for &s in &self.word {
            match s {
                Symbol::A => seen_a += 1,
                Symbol::B => cols.push(seen_a),
            }
        }
        cols
    }

    pub fn to_tableau(&self) -> Tableau {
        let mut cells = BTreeSet::new();
        for (i, &r) in self.row_counts().iter().enumerate() {
            // row i+1 is shaded in the last r columns
            for j in (self.n - r)..self.n {
                cells.insert((i + 1, j));
            }
        }
        Tableau::from_cells_unchecked(self.n, cells)
    }

    fn swapped_at(&self, pos: usize, from: &[Symbol], to: &[Symbol]) -> Option<Self> {
        let end = pos + from.len();
        if end > self.word.len() || self.word[pos..end] != *from {
            return None;
        }
        let mut word = self.word.clone();
        word[pos..end].copy_from_slice(to);
        Some(Self { n: self.n, word })
    }

    /// All strings obtained by one adjacent `AB <-> BA` transposition, sorted.
    pub fn nearby(&self) -> Vec<InterlacingString> {
        use Symbol::{A, B};
        let mut out = BTreeSet::new();
        for pos in 0..self.word.len().saturating_sub(1) {
            if let Some(t) = self.swapped_at(pos, &[A, B], &[B, A]) {
                out.insert(t);
            }
            if let Some(t) = self.swapped_at(pos, &[B, A], &[A, B]) {
                out.insert(t);
            }
        }
        out.into_iter().collect()
    }

    /// All strings obtained by one `AABB <-> BBAA` replacement, sorted.
    pub fn block_moves(&self) -> Vec<InterlacingString> {
        use Symbol::{A, B};
        let mut out = BTreeSet::new();
        for pos in 0..self.word.len().saturating_sub(3) {
            if let Some(t) = self.swapped_at(pos, &[A, A, B, B], &[B, B, A, A]) {
                out.insert(t);
            }
            if let Some(t) = self.swapped_at(pos, &[B, B, A, A], &[A, A, B, B]) {
                out.insert(t);
            }
        }
        out.into_iter().collect()
    }

    /// A concrete pair `(a, b)` whose interlacing string is `self`, with
    /// consecutive merged entries half a unit apart and centred near zero.
    pub fn realize(&self) -> (InfinitesimalCharacter, Option<InfinitesimalCharacter>) {
        let a_parity = ((self.n - 1) % 2) as i64;
        let mut doubled = Vec::with_capacity(self.word.len());
        let mut current = if self.word[0] == Symbol::A {
            a_parity
        } else {
            1 - a_parity
        };
        doubled.push(current);
        for pair in self.word.windows(2) {
            current -= if pair[0] == pair[1] { 2 } else { 1 };
            doubled.push(current);
        }
        // even shift keeps parities; centre the merged list around zero
        let mid = (doubled[0] + doubled[doubled.len() - 1]) / 2;
        let shift = mid - mid.rem_euclid(2);
        let mut a = Vec::with_capacity(self.n);
        let mut b = Vec::with_capacity(self.n - 1);
        for (&s, &d) in self.word.iter().zip(&doubled) {
            let v = HalfInt::from_doubled(d - shift);
            match s {
                Symbol::A => a.push(v),
                Symbol::B => b.push(v),
            }
        }
        let a = InfinitesimalCharacter::new(a).expect("realized a is valid");
        let b = (!b.is_empty()).then(|| InfinitesimalCharacter::new(b).expect("realized b is valid"));
        (a, b)
    }
}

/// Descending merge of `a` (rank n) and `b` (rank n-1).
pub fn interlace(a: &InfinitesimalCharacter, b: &InfinitesimalCharacter) -> Result<InterlacingString> {
    if b.rank() + 1 != a.rank() {
        return Err(Error::IncompatibleRanks {
            big: a.rank(),
            small: b.rank(),
        });
    }
    if a.parity() == b.parity() {
        return Err(Error::ParityClash);
    }
    let (a, b) = (a.entries(), b.entries());
    let mut word = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] > b[j]) {
            word.push(Symbol::A);
            i += 1;
        } else {
            word.push(Symbol::B);
            j += 1;
        }
    }
    Ok(InterlacingString::from_word_unchecked(a.len(), word))
}

/// All interlacing strings of rank `n` in lexicographic order (`A < B`).
pub fn enumerate_strings(n: usize) -> Vec<InterlacingString> {
    fn rec(a_left: usize, b_left: usize, prefix: &mut Vec<Symbol>, n: usize, out: &mut Vec<InterlacingString>) {
        if a_left == 0 && b_left == 0 {
            out.push(InterlacingString::from_word_unchecked(n, prefix.clone()));
            return;
        }
        if a_left > 0 {
            prefix.push(Symbol::A);
            rec(a_left - 1, b_left, prefix, n, out);
            prefix.pop();
        }
        if b_left > 0 {
            prefix.push(Symbol::B);
            rec(a_left, b_left - 1, prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, n - 1, &mut Vec::with_capacity(2 * n - 1), n, &mut out);
    out
}

/// `C(2n-1, n)`, the number of interlacing strings of rank `n`.
pub fn string_count(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let (top, k) = (2 * n as u64 - 1, n as u64);
    (0..k).fold(1u64, |acc, i| acc * (top - i) / (i + 1))
}

impl FromStr for InterlacingString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .trim()
            .chars()
            .enumerate()
            .map(|(position, c)| match c {
                'A' | 'a' => Ok(Symbol::A),
                'B' | 'b' => Ok(Symbol::B),
                symbol => Err(Error::InvalidSymbol { symbol, position }),
            })
            .collect::<Result<Vec<_>>>()?;
        InterlacingString::new(word)
    }
}

impl fmt::Display for InterlacingString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.word {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for InterlacingString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for InterlacingString {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
