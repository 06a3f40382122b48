//! Robinson–Schensted insertion for partial permutations.

use alloc::vec::Vec;

use crate::board::{PartialPermutation, RookPlacement};
use crate::{Error, Partition, Result};

/// A tableau of distinct positive integers, increasing along rows and down
/// columns. Rows are listed top to bottom; entries keep their original labels.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

/// Which slice of a tableau to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slice {
    /// `Y^-`: all but the top row.
    StripTopRow,
    /// `⁻Y`: every row minus its first cell, empty rows dropped.
    StripLeftColumn,
    /// `Y^tr`: reflected across the NW–SE diagonal.
    Transpose,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        for (r, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::NonPositivePart { index: r });
            }
            if r > 0 && rows[r - 1].len() < row.len() {
                return Err(Error::PartsNotDecreasing { index: r });
            }
            let increasing = row.windows(2).all(|w| w[0] < w[1]);
            let columns = r == 0 || row.iter().zip(&rows[r - 1]).all(|(below, above)| above < below);
            if !increasing || !columns || row.contains(&0) {
                return Err(Error::NotAPermutation);
            }
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotAPermutation);
        }
        Ok(StandardTableau { rows })
    }

    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_padded(self.rows.iter().map(Vec::len).collect())
    }

    pub fn slice(&self, kind: Slice) -> StandardTableau {
        let rows = match kind {
            Slice::StripTopRow => self.rows.iter().skip(1).cloned().collect(),
            Slice::StripLeftColumn => self
                .rows
                .iter()
                .filter(|r| r.len() > 1)
                .map(|r| r[1..].to_vec())
                .collect(),
            Slice::Transpose => {
                let width = self.rows.first().map_or(0, Vec::len);
                (0..width)
                    .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
                    .collect()
            }
        };
        StandardTableau { rows }
    }

    /// Row-inserts `value`, returning the (row, column) of the new cell.
    fn insert(&mut self, mut value: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&x| x > value) {
                Some(pos) => value = core::mem::replace(&mut row[pos], value),
                None => {
                    row.push(value);
                    return (r, row.len() - 1);
                }
            }
        }
        self.rows.push(alloc::vec![value]);
        (self.rows.len() - 1, 0)
    }

    fn place(&mut self, (r, c): (usize, usize), value: usize) {
        if r == self.rows.len() {
            self.rows.push(Vec::new());
        }
        debug_assert_eq!(self.rows[r].len(), c);
        self.rows[r].push(value);
    }
}

/// Insertion and recording tableaux of a partial permutation.
pub fn rs_pair_of(pi: &PartialPermutation) -> (StandardTableau, StandardTableau) {
    let mut insertion = StandardTableau::empty();
    let mut recording = StandardTableau::empty();
    for &(input, output) in pi.pairs() {
        let cell = insertion.insert(output);
        recording.place(cell, input);
    }
    (insertion, recording)
}

/// Insertion and recording tableaux of the placement's partial permutation.
pub fn rs_pair(p: &RookPlacement) -> (StandardTableau, StandardTableau) {
    rs_pair_of(&p.to_partial_permutation())
}

/// Insertion tableau only.
pub fn insertion(p: &RookPlacement) -> StandardTableau {
    let mut t = StandardTableau::empty();
    for s in p.markers() {
        t.insert(s.row);
    }
    t
}

pub fn shape_of(y: &StandardTableau) -> Partition {
    y.shape()
}

pub fn tableau_slice(y: &StandardTableau, kind: Slice) -> StandardTableau {
    y.slice(kind)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{FerrersBoard, Square};
    use alloc::vec;

    fn t(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn two_line_example() {
        let pi = PartialPermutation::new(vec![(1, 4), (2, 5), (6, 3), (7, 1), (8, 2)]).unwrap();
        let (ins, rec) = rs_pair_of(&pi);
        assert_eq!(ins, t(&[&[1, 2], &[3, 5], &[4]]));
        assert_eq!(rec, t(&[&[1, 2], &[6, 8], &[7]]));
        assert_eq!(shape_of(&ins).parts(), &[2, 2, 1]);
    }

    #[test]
    fn figure_one_reverse_placement() {
        let p = RookPlacement::new(
            FerrersBoard::rectangle(9, 9),
            [(1, 2), (3, 9), (4, 7), (6, 5), (7, 1), (8, 4), (9, 8)].map(Square::from),
        )
        .unwrap();
        let (ins, rec) = rs_pair(&p);
        assert_eq!(ins, t(&[&[1, 4, 8], &[2, 5], &[7], &[9]]));
        assert_eq!(rec, t(&[&[1, 3, 9], &[4, 8], &[6], &[7]]));
        assert_eq!(insertion(&p), ins);
        assert_eq!(ins.slice(Slice::StripTopRow), t(&[&[2, 5], &[7], &[9]]));
        assert_eq!(ins.slice(Slice::StripLeftColumn), t(&[&[4, 8], &[5]]));
    }

    #[test]
    fn empty_and_trivial_cases() {
        let (ins, rec) = rs_pair(&RookPlacement::empty(FerrersBoard::rectangle(3, 3)));
        assert!(ins.is_empty() && rec.is_empty());
        assert!(shape_of(&ins).is_empty());
        assert_eq!(shape_of(&t(&[&[1, 2, 3]])).parts(), &[3]);
        assert_eq!(t(&[&[1, 2, 3]]).slice(Slice::Transpose), t(&[&[1], &[2], &[3]]));
        assert!(StandardTableau::empty().slice(Slice::StripLeftColumn).is_empty());
    }

    #[test]
    fn slices_commute_with_transpose() {
        let y = t(&[&[1, 4, 8], &[2, 5], &[7], &[9]]);
        assert_eq!(
            y.slice(Slice::Transpose).slice(Slice::StripTopRow),
            y.slice(Slice::StripLeftColumn).slice(Slice::Transpose)
        );
    }

    #[test]
    fn validation() {
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![3]]).is_err());
    }
}
