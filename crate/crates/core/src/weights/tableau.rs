use std::collections::BTreeSet;

use super::{InterlacingString, Symbol};
use crate::error::{Error, Result};

/// A cell `(i, j)`: row `i` for `a_i`, column `j` for `b_j`, both 1-indexed.
pub type Cell = (usize, usize);

/// The set of cells `(i, j)` with `a_i > b_j` in an `n x (n-1)` grid.
///
/// Closure: if `(i, j)` is shaded then so is every `(i', j')` with `i' <= i`
/// and `j' >= j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    shaded: BTreeSet<Cell>,
}

impl Tableau {
    pub fn from_cells(n: usize, shaded: BTreeSet<Cell>) -> Result<Self> {
        let cols = n.saturating_sub(1);
        for &(row, col) in &shaded {
            if row == 0 || row > n || col == 0 || col > cols {
                return Err(Error::CellOutOfRange { row, col, rows: n, cols });
            }
        }
        for &(row, col) in &shaded {
            let above_ok = row == 1 || shaded.contains(&(row - 1, col));
            let right_ok = col == cols || shaded.contains(&(row, col + 1));
            if !above_ok || !right_ok {
                return Err(Error::ClosureViolation { row, col });
            }
        }
        Ok(Self { n, shaded })
    }

    pub(crate) fn from_cells_unchecked(n: usize, shaded: BTreeSet<Cell>) -> Self {
        Self { n, shaded }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shaded(&self) -> &BTreeSet<Cell> {
        &self.shaded
    }

    pub fn is_shaded(&self, row: usize, col: usize) -> bool {
        self.shaded.contains(&(row, col))
    }

    pub fn area(&self) -> usize {
        self.shaded.len()
    }

    /// Every cell of the grid not in the shaded set.
    pub fn unshaded(&self) -> BTreeSet<Cell> {
        self.all_cells().filter(|c| !self.shaded.contains(c)).collect()
    }

    pub fn all_cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.n).flat_map(move |i| (1..self.n).map(move |j| (i, j)))
    }

    /// Shaded cells in row `i`.
    pub fn row_count(&self, row: usize) -> usize {
        self.shaded.range((row, 0)..(row + 1, 0)).count()
    }

    /// Shaded cells in column `j`.
    pub fn column_count(&self, col: usize) -> usize {
        self.shaded.iter().filter(|&&(_, c)| c == col).count()
    }

    /// Inverse of [`InterlacingString::to_tableau`].
    pub fn to_interlacing(&self) -> InterlacingString {
        let mut word = Vec::with_capacity(2 * self.n - 1);
        let mut b_emitted = 0;
        for i in 1..=self.n {
            // a_i is smaller than exactly (n-1) - row_count(i) of the b's
            let bigger_b = self.n - 1 - self.row_count(i);
            while b_emitted < bigger_b {
                word.push(Symbol::B);
                b_emitted += 1;
            }
            word.push(Symbol::A);
        }
        while b_emitted < self.n - 1 {
            word.push(Symbol::B);
            b_emitted += 1;
        }
        InterlacingString::from_word_unchecked(self.n, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::enumerate_strings;

    fn cells(list: &[Cell]) -> BTreeSet<Cell> {
        list.iter().copied().collect()
    }

    #[test]
    fn tableau_examples() {
        let t = "ABA".parse::<InterlacingString>().unwrap().to_tableau();
        assert_eq!(t.shaded(), &cells(&[(1, 1)]));
        let t = "BBBAAAA".parse::<InterlacingString>().unwrap().to_tableau();
        assert!(t.shaded().is_empty());
        let t = "AAB".parse::<InterlacingString>().unwrap().to_tableau();
        assert_eq!(t.shaded(), &cells(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn closure_is_enforced() {
        assert_eq!(
            Tableau::from_cells(2, cells(&[(2, 1)])),
            Err(Error::ClosureViolation { row: 2, col: 1 })
        );
        // (1,1) shaded needs (1,2) shaded when n = 3
        assert_eq!(
            Tableau::from_cells(3, cells(&[(1, 1)])),
            Err(Error::ClosureViolation { row: 1, col: 1 })
        );
        assert!(matches!(
            Tableau::from_cells(2, cells(&[(1, 2)])),
            Err(Error::CellOutOfRange { .. })
        ));
        let t = Tableau::from_cells(3, cells(&[(1, 2), (1, 1), (2, 2)])).unwrap();
        assert_eq!(t.to_interlacing().to_string(), "ABABA");
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 1..=7 {
            for s in enumerate_strings(n) {
                let t = s.to_tableau();
                assert_eq!(Tableau::from_cells(n, t.shaded().clone()).unwrap(), t);
                assert_eq!(t.to_interlacing(), s);
                assert_eq!(t.area(), s.area());
            }
        }
    }
}
