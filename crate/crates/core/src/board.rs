//! Ferrers boards, rook placements and the partial permutations they encode.
//!
//! A board is stored by its row widths from the bottom row up. Square
//! `(i, j)` is column `i` from the left and row `j` from the bottom; it is on
//! the board iff `1 <= j <= rows` and `1 <= i <= width(j)`. Because boards
//! are closed under moving down and left, a set of squares fits inside some
//! rectangular sub-board iff its bounding square (max column, max row) is on
//! the board. Pattern containment uses that single test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub col: usize,
    pub row: usize,
}

impl Square {
    pub const fn new(col: usize, row: usize) -> Self {
        Square { col, row }
    }
}

impl From<(usize, usize)> for Square {
    fn from((col, row): (usize, usize)) -> Self {
        Square { col, row }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// A Ferrers board in French notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FerrersBoard {
    widths: Vec<usize>,
}

impl FerrersBoard {
    /// Builds a board from its row widths, bottom row first.
    pub fn new(widths: Vec<usize>) -> Result<Self> {
        for (index, &w) in widths.iter().enumerate() {
            if w == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && widths[index - 1] < w {
                return Err(Error::PartsNotDecreasing { index });
            }
        }
        Ok(FerrersBoard { widths })
    }

    pub const fn empty() -> Self {
        FerrersBoard { widths: Vec::new() }
    }

    /// The `cols × rows` rectangle; empty when either side is zero.
    pub fn rectangle(cols: usize, rows: usize) -> Self {
        if cols == 0 {
            return FerrersBoard::empty();
        }
        FerrersBoard { widths: vec![cols; rows] }
    }

    pub fn row_widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn num_rows(&self) -> usize {
        self.widths.len()
    }

    pub fn num_cols(&self) -> usize {
        self.widths.first().copied().unwrap_or(0)
    }

    /// Width of row `row` (1-based); `0` outside the board.
    pub fn width(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.widths.get(row - 1).copied().unwrap_or(0)
    }

    /// Height of column `col` (1-based); `0` outside the board.
    pub fn height(&self, col: usize) -> usize {
        if col == 0 {
            return 0;
        }
        self.widths.iter().take_while(|&&w| w >= col).count()
    }

    pub fn contains(&self, sq: Square) -> bool {
        sq.col >= 1 && sq.row >= 1 && sq.col <= self.width(sq.row)
    }

    pub fn is_rectangular(&self) -> bool {
        self.widths.windows(2).all(|w| w[0] == w[1])
    }

    pub fn num_squares(&self) -> usize {
        self.widths.iter().sum()
    }

    /// The board reflected across the SW–NE diagonal.
    pub fn conjugate(&self) -> FerrersBoard {
        FerrersBoard { widths: (1..=self.num_cols()).map(|c| self.height(c)).collect() }
    }

    /// Columns `a..=b` re-indexed to `1..=b-a+1`.
    pub fn column_band(&self, a: usize, b: usize) -> Result<FerrersBoard> {
        if a == 0 || a > b || b > self.num_cols() {
            return Err(Error::InvalidBand { a, b });
        }
        let widths = self
            .widths
            .iter()
            .take_while(|&&w| w >= a)
            .map(|&w| w.min(b) - a + 1)
            .collect();
        Ok(FerrersBoard { widths })
    }
}

/// The four board/placement reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Across the SW–NE diagonal; the board becomes its conjugate.
    Inverse,
    /// Across a vertical line (rectangular boards only).
    Reverse,
    /// Across the NW–SE diagonal (rectangular boards only).
    Transpose,
    /// Across a horizontal line (rectangular boards only).
    Complement,
}

/// A region to restrict a placement to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `R(i,j)`: all squares `(k,l)` with `k <= i` and `l <= j`.
    Rectangle(Square),
    /// Columns `a..=b`, re-indexed to start at column 1.
    ColumnBand { a: usize, b: usize },
}

/// A set of squares of a board, at most one per row and per column.
///
/// Markers are kept sorted by column.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RookPlacement {
    board: FerrersBoard,
    markers: Vec<Square>,
}

impl RookPlacement {
    pub fn new(board: FerrersBoard, markers: impl IntoIterator<Item = Square>) -> Result<Self> {
        let mut markers: Vec<Square> = markers.into_iter().collect();
        markers.sort_unstable();
        let mut rows_seen = vec![false; board.num_rows() + 1];
        for (idx, &sq) in markers.iter().enumerate() {
            if sq.col == 0 || sq.row == 0 {
                return Err(Error::ZeroCoordinate(sq));
            }
            if !board.contains(sq) {
                return Err(Error::MarkerOffBoard(sq));
            }
            if idx > 0 && markers[idx - 1].col == sq.col {
                return Err(Error::DuplicateColumn { col: sq.col });
            }
            if core::mem::replace(&mut rows_seen[sq.row], true) {
                return Err(Error::DuplicateRow { row: sq.row });
            }
        }
        Ok(RookPlacement { board, markers })
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_sorted_unchecked(board: FerrersBoard, markers: Vec<Square>) -> Self {
        debug_assert!(RookPlacement::new(board.clone(), markers.iter().copied()).is_ok());
        debug_assert!(markers.windows(2).all(|w| w[0].col < w[1].col));
        RookPlacement { board, markers }
    }

    pub fn empty(board: FerrersBoard) -> Self {
        RookPlacement { board, markers: Vec::new() }
    }

    /// The placement of a permutation on the `n × n` square board.
    pub fn from_permutation(perm: &Permutation) -> Self {
        let n = perm.len();
        let markers = perm.as_slice().iter().enumerate().map(|(i, &v)| Square::new(i + 1, v)).collect();
        RookPlacement { board: FerrersBoard::rectangle(n, n), markers }
    }

    pub fn from_partial_permutation(board: FerrersBoard, pi: &PartialPermutation) -> Result<Self> {
        RookPlacement::new(board, pi.pairs().iter().map(|&(i, j)| Square::new(i, j)))
    }

    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    /// Markers in increasing column order.
    pub fn markers(&self) -> &[Square] {
        &self.markers
    }

    pub fn len(&self) -> usize {
        self.markers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.markers.is_empty()
    }

    /// Exactly one marker in every row and every column.
    pub fn is_full(&self) -> bool {
        self.board.num_rows() == self.board.num_cols() && self.markers.len() == self.board.num_cols()
    }

    pub fn contains(&self, sq: Square) -> bool {
        self.markers.binary_search(&sq).is_ok()
    }

    /// Row of the marker in column `col`, if any.
    pub fn row_of_col(&self, col: usize) -> Option<usize> {
        self.markers
            .binary_search_by_key(&col, |s| s.col)
            .ok()
            .map(|i| self.markers[i].row)
    }

    /// Column of the marker in row `row`, if any.
    pub fn col_of_row(&self, row: usize) -> Option<usize> {
        self.markers.iter().find(|s| s.row == row).map(|s| s.col)
    }

    pub fn to_partial_permutation(&self) -> PartialPermutation {
        PartialPermutation { pairs: self.markers.iter().map(|s| (s.col, s.row)).collect() }
    }

    /// The row sequence read left to right.
    pub fn rows(&self) -> Vec<usize> {
        self.markers.iter().map(|s| s.row).collect()
    }

    /// Replaces the marker set, keeping the board. Validates.
    pub fn with_markers(&self, markers: impl IntoIterator<Item = Square>) -> Result<Self> {
        RookPlacement::new(self.board.clone(), markers)
    }

    pub fn symmetry(&self, kind: Symmetry) -> Result<RookPlacement> {
        let rows = self.board.num_rows();
        let cols = self.board.num_cols();
        if kind != Symmetry::Inverse && !self.board.is_rectangular() {
            return Err(Error::NotRectangular);
        }
        let (board, map): (FerrersBoard, fn(Square, usize, usize) -> Square) = match kind {
            Symmetry::Inverse => (self.board.conjugate(), |s, _, _| Square::new(s.row, s.col)),
            Symmetry::Reverse => (self.board.clone(), |s, _, n| Square::new(n + 1 - s.col, s.row)),
            Symmetry::Transpose => (FerrersBoard::rectangle(rows, cols), |s, m, n| {
                Square::new(m + 1 - s.row, n + 1 - s.col)
            }),
            Symmetry::Complement => (self.board.clone(), |s, m, _| Square::new(s.col, m + 1 - s.row)),
        };
        let mut markers: Vec<Square> = self.markers.iter().map(|&s| map(s, rows, cols)).collect();
        markers.sort_unstable();
        Ok(RookPlacement::from_sorted_unchecked(board, markers))
    }

    pub fn restrict(&self, region: Region) -> Result<RookPlacement> {
        match region {
            Region::Rectangle(corner) => {
                if !self.board.contains(corner) {
                    return Err(Error::RegionOffBoard(corner));
                }
                let markers = self
                    .markers
                    .iter()
                    .copied()
                    .filter(|s| s.col <= corner.col && s.row <= corner.row)
                    .collect();
                Ok(RookPlacement::from_sorted_unchecked(
                    FerrersBoard::rectangle(corner.col, corner.row),
                    markers,
                ))
            }
            Region::ColumnBand { a, b } => {
                let board = self.board.column_band(a, b)?;
                let markers = self
                    .markers
                    .iter()
                    .filter(|s| (a..=b).contains(&s.col))
                    .map(|s| Square::new(s.col - a + 1, s.row))
                    .collect();
                Ok(RookPlacement::from_sorted_unchecked(board, markers))
            }
        }
    }

    /// All occurrences of `pattern`, in lexicographic order of their
    /// columns. An occurrence counts only if its bounding square lies on
    /// the board.
    pub fn occurrences(&self, pattern: &Permutation) -> Vec<PatternOccurrence> {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(pattern.len());
        if !pattern.is_empty() {
            self.extend_occurrences(pattern.as_slice(), 0, &mut chosen, &mut out, false);
        }
        out
    }

    /// `true` iff some occurrence of `pattern` exists.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(pattern.len());
        !pattern.is_empty() && self.extend_occurrences(pattern.as_slice(), 0, &mut chosen, &mut out, true)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }

    fn extend_occurrences(
        &self,
        pattern: &[usize],
        start: usize,
        chosen: &mut Vec<Square>,
        out: &mut Vec<PatternOccurrence>,
        stop_at_first: bool,
    ) -> bool {
        let depth = chosen.len();
        if depth == pattern.len() {
            let max_row = chosen.iter().map(|s| s.row).max().unwrap_or(0);
            let corner = Square::new(chosen[depth - 1].col, max_row);
            if self.board.contains(corner) {
                out.push(PatternOccurrence { squares: chosen.clone() });
                return true;
            }
            return false;
        }
        let remaining = pattern.len() - depth;
        if self.markers.len() < remaining {
            return false;
        }
        for idx in start..self.markers.len() + 1 - remaining {
            let cand = self.markers[idx];
            let consistent = chosen
                .iter()
                .zip(pattern)
                .all(|(s, &p)| (s.row < cand.row) == (p < pattern[depth]));
            if !consistent {
                continue;
            }
            chosen.push(cand);
            let found = self.extend_occurrences(pattern, idx + 1, chosen, out, stop_at_first);
            chosen.pop();
            if found && stop_at_first {
                return true;
            }
        }
        false
    }
}

/// A sequence of marker squares with strictly increasing columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternOccurrence {
    pub squares: Vec<Square>,
}

impl PatternOccurrence {
    /// (max column, max row) over the occurrence.
    pub fn bounding_square(&self) -> Option<Square> {
        let last = self.squares.last()?;
        Some(Square::new(last.col, self.squares.iter().map(|s| s.row).max()?))
    }

    pub fn rows(&self) -> Vec<usize> {
        self.squares.iter().map(|s| s.row).collect()
    }
}

/// A bijection between two finite sets of positive integers, stored as
/// `(input, output)` pairs with strictly increasing inputs.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPermutation {
    pairs: Vec<(usize, usize)>,
}

impl PartialPermutation {
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateColumn { col: w[0].0 });
            }
        }
        let mut outputs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        outputs.sort_unstable();
        for w in outputs.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateRow { row: w[0] });
            }
        }
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i == 0 || j == 0) {
            return Err(Error::ZeroCoordinate(Square::new(i, j)));
        }
        Ok(PartialPermutation { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn inputs(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }

    pub fn outputs(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.1).collect()
    }

    pub fn get(&self, input: usize) -> Option<usize> {
        self.pairs.binary_search_by_key(&input, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    pub fn inverse(&self) -> PartialPermutation {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        PartialPermutation { pairs }
    }

    /// Both inputs and outputs are exactly `1..=n`.
    pub fn is_total(&self) -> bool {
        let n = self.pairs.len();
        self.pairs.iter().enumerate().all(|(idx, p)| p.0 == idx + 1) && self.pairs.iter().all(|p| p.1 <= n)
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        if !self.is_total() {
            return Err(Error::NotTotal);
        }
        Ok(Permutation { one_line: self.outputs() })
    }
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || core::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation);
            }
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { one_line: (1..=n).collect() }
    }

    /// `k k-1 … 1`.
    pub fn decreasing(k: usize) -> Self {
        Permutation { one_line: (1..=k).rev().collect() }
    }

    /// The permutation order-isomorphic to a sequence of distinct values.
    pub fn standardize(values: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_unstable_by_key(|&i| values[i]);
        let mut one_line = vec![0; values.len()];
        for (rank, &i) in order.iter().enumerate() {
            one_line[i] = rank + 1;
        }
        Permutation { one_line }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.one_line
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { one_line: inv }
    }

    pub fn to_partial_permutation(&self) -> PartialPermutation {
        PartialPermutation { pairs: self.one_line.iter().enumerate().map(|(i, &v)| (i + 1, v)).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() > 9 { "," } else { "" };
        for (i, v) in self.one_line.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(c: usize, r: usize) -> Square {
        Square::new(c, r)
    }

    fn placement(widths: &[usize], markers: &[(usize, usize)]) -> RookPlacement {
        RookPlacement::new(
            FerrersBoard::new(widths.to_vec()).unwrap(),
            markers.iter().map(|&m| Square::from(m)),
        )
        .unwrap()
    }

    fn fig1_left() -> RookPlacement {
        placement(&[9; 9], &[(1, 8), (2, 4), (3, 1), (4, 5), (6, 7), (7, 9), (9, 2)])
    }

    fn example_23() -> RookPlacement {
        placement(
            &[8, 8, 8, 8, 8, 6, 5, 3],
            &[(1, 4), (2, 5), (3, 8), (4, 6), (5, 7), (6, 3), (7, 1), (8, 2)],
        )
    }

    #[test]
    fn build_board() {
        let b = FerrersBoard::new(vec![8, 8, 8, 8, 8, 6, 5, 3]).unwrap();
        assert_eq!(b.num_rows(), 8);
        assert_eq!(b.num_cols(), 8);
        assert_eq!(b.height(6), 6);
        assert_eq!(b.height(7), 5);
        assert!(b.contains(sq(3, 8)));
        assert!(!b.contains(sq(4, 8)));
        assert_eq!(FerrersBoard::new(vec![]).unwrap(), FerrersBoard::empty());
        assert_eq!(FerrersBoard::new(vec![2, 3]), Err(Error::PartsNotDecreasing { index: 1 }));
        assert_eq!(FerrersBoard::new(vec![2, 0]), Err(Error::NonPositivePart { index: 1 }));
    }

    #[test]
    fn board_contains_every_lower_left_rectangle() {
        let b = FerrersBoard::new(vec![4, 3, 3, 1]).unwrap();
        for j in 1..=4 {
            for i in 1..=b.width(j) {
                for l in 1..=j {
                    for k in 1..=i {
                        assert!(b.contains(sq(k, l)));
                    }
                }
            }
        }
        assert_eq!(b.conjugate().row_widths(), &[4, 3, 3, 1]);
        assert_eq!(FerrersBoard::new(vec![3, 1]).unwrap().conjugate().row_widths(), &[2, 1, 1]);
    }

    #[test]
    fn placement_validation() {
        let b = FerrersBoard::new(vec![2, 1]).unwrap();
        assert_eq!(RookPlacement::new(b.clone(), [sq(2, 2)]), Err(Error::MarkerOffBoard(sq(2, 2))));
        assert_eq!(
            RookPlacement::new(b.clone(), [sq(1, 1), sq(2, 1)]),
            Err(Error::DuplicateRow { row: 1 })
        );
        assert_eq!(
            RookPlacement::new(b.clone(), [sq(1, 1), sq(1, 2)]),
            Err(Error::DuplicateColumn { col: 1 })
        );
        assert_eq!(RookPlacement::new(b, [sq(0, 1)]), Err(Error::ZeroCoordinate(sq(0, 1))));
    }

    #[test]
    fn inverse_of_figure_one() {
        let inv = fig1_left().symmetry(Symmetry::Inverse).unwrap();
        let mut expected = [(8, 1), (4, 2), (1, 3), (5, 4), (7, 6), (9, 7), (2, 9)].map(Square::from);
        expected.sort();
        assert_eq!(inv.markers(), &expected);
        assert_eq!(inv.symmetry(Symmetry::Inverse).unwrap(), fig1_left());
    }

    #[test]
    fn reverse_of_figure_one() {
        let rev = fig1_left().symmetry(Symmetry::Reverse).unwrap();
        let expected = [(1, 2), (3, 9), (4, 7), (6, 5), (7, 1), (8, 4), (9, 8)].map(Square::from);
        assert_eq!(rev.markers(), &expected);
    }

    #[test]
    fn transpose_and_complement_on_non_square_rectangle() {
        // 3 columns, 2 rows.
        let p = placement(&[3, 3], &[(1, 2), (3, 1)]);
        let t = p.symmetry(Symmetry::Transpose).unwrap();
        assert_eq!(t.board().num_cols(), 2);
        assert_eq!(t.board().num_rows(), 3);
        assert_eq!(t.markers(), &[sq(1, 3), sq(2, 1)]);
        assert_eq!(t.symmetry(Symmetry::Transpose).unwrap(), p);
        let c = p.symmetry(Symmetry::Complement).unwrap();
        assert_eq!(c.markers(), &[sq(1, 1), sq(3, 2)]);
        assert_eq!(
            placement(&[2, 1], &[]).symmetry(Symmetry::Reverse),
            Err(Error::NotRectangular)
        );
    }

    #[test]
    fn restrict_to_rectangle() {
        let p = example_23();
        let r = p.restrict(Region::Rectangle(sq(8, 5))).unwrap();
        assert_eq!(r.to_partial_permutation().pairs(), &[(1, 4), (2, 5), (6, 3), (7, 1), (8, 2)]);
        assert_eq!(
            p.restrict(Region::Rectangle(sq(8, 6))),
            Err(Error::RegionOffBoard(sq(8, 6)))
        );
        let q = fig1_left();
        assert_eq!(q.restrict(Region::Rectangle(sq(9, 9))).unwrap(), q);
        let e = RookPlacement::empty(FerrersBoard::rectangle(3, 3));
        assert!(e.restrict(Region::Rectangle(sq(2, 1))).unwrap().is_empty());
    }

    #[test]
    fn restrict_to_column_band() {
        let p = example_23();
        let r = p.restrict(Region::ColumnBand { a: 5, b: 7 }).unwrap();
        assert_eq!(r.board().row_widths(), &[3, 3, 3, 3, 3, 2, 1]);
        assert_eq!(r.markers(), &[sq(1, 7), sq(2, 3), sq(3, 1)]);
        assert_eq!(p.restrict(Region::ColumnBand { a: 0, b: 2 }), Err(Error::InvalidBand { a: 0, b: 2 }));
    }

    #[test]
    fn occurrences_of_321() {
        let p = example_23();
        let occ = p.occurrences(&Permutation::decreasing(3));
        assert!(!occ.is_empty());
        assert!(occ.contains(&PatternOccurrence { squares: vec![sq(1, 4), sq(6, 3), sq(7, 1)] }));
        for o in &occ {
            assert!(p.board().contains(o.bounding_square().unwrap()));
        }
    }

    #[test]
    fn bounding_square_must_be_on_board() {
        let p = placement(&[2, 1], &[(1, 2), (2, 1)]);
        assert!(p.occurrences(&Permutation::new(vec![2, 1]).unwrap()).is_empty());
        assert!(p.avoids(&Permutation::new(vec![2, 1]).unwrap()));
        assert_eq!(p.occurrences(&Permutation::identity(1)).len(), 2);
    }

    #[test]
    fn partial_permutations() {
        let p = example_23();
        let pi = p.to_partial_permutation();
        assert_eq!(pi.to_permutation().unwrap().as_slice(), &[4, 5, 8, 6, 7, 3, 1, 2]);
        let inv = p.symmetry(Symmetry::Inverse).unwrap();
        assert_eq!(inv.to_partial_permutation(), pi.inverse());
        assert!(RookPlacement::empty(FerrersBoard::rectangle(2, 2)).to_partial_permutation().is_empty());
        let single = placement(&[3; 7], &[(3, 7)]);
        assert_eq!(single.to_partial_permutation().pairs(), &[(3, 7)]);
        assert_eq!(single.to_partial_permutation().to_permutation(), Err(Error::NotTotal));
    }

    #[test]
    fn permutations() {
        assert_eq!(Permutation::new(vec![2, 2]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::standardize(&[40, 10, 30]).as_slice(), &[3, 1, 2]);
        let s = Permutation::new(vec![4, 5, 8, 6, 7, 3, 1, 2]).unwrap();
        assert_eq!(s.inverse().inverse(), s);
        assert_eq!(alloc::format!("{s}"), "45867312");
    }
}
