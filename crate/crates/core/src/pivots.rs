//! Left and right pivots of a placement on a rectangular board.
//!
//! Pivots are placed row by row from the bottom. The bottom row never gets
//! one. For the marker `X` in row `r`, look at the columns on one side of `X`
//! (left for left pivots, right for right pivots) that hold a marker below
//! row `r` and no pivot yet; if any exist, the pivot goes in row `r` of the
//! one nearest to `X`.

use alloc::vec;
use alloc::vec::Vec;

use crate::board::{RookPlacement, Square};
use crate::{Error, Result};

/// A pivot set is itself a placement on the same board.
pub type PivotSet = RookPlacement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

fn require_rectangular(p: &RookPlacement) -> Result<()> {
    if p.board().is_rectangular() {
        Ok(())
    } else {
        Err(Error::NotRectangular)
    }
}

/// Row-by-row pivot construction.
pub fn pivots(p: &RookPlacement, side: Side) -> Result<PivotSet> {
    require_rectangular(p)?;
    let n = p.board().num_cols();
    let mut row_of_col = vec![usize::MAX; n + 1];
    for s in p.markers() {
        row_of_col[s.col] = s.row;
    }
    let mut has_pivot = vec![false; n + 1];
    let mut by_row: Vec<Square> = p.markers().to_vec();
    by_row.sort_unstable_by_key(|s| s.row);
    let mut out = Vec::new();
    for x in by_row {
        let eligible = |c: &usize| row_of_col[*c] < x.row && !has_pivot[*c];
        let chosen = match side {
            Side::Left => (1..x.col).rev().find(eligible),
            Side::Right => (x.col + 1..=n).find(eligible),
        };
        if let Some(c) = chosen {
            has_pivot[c] = true;
            out.push(Square::new(c, x.row));
        }
    }
    out.sort_unstable();
    Ok(RookPlacement::from_sorted_unchecked(p.board().clone(), out))
}

/// Left pivots by the column construction: columns from right to left, the
/// rightmost column never gets one. For the marker `X` in column `c`, look
/// at the rows above `X` holding a marker right of `c` and no pivot right of
/// `c`; the pivot goes in column `c` of the lowest such row.
pub fn pivots_by_columns(p: &RookPlacement) -> Result<PivotSet> {
    require_rectangular(p)?;
    let m = p.board().num_rows();
    let mut col_of_row = vec![0usize; m + 1];
    for s in p.markers() {
        col_of_row[s.row] = s.col;
    }
    // Column of the pivot in each row; pivots are only ever placed right to
    // left, so any existing one is right of the current column.
    let mut pivot_col = vec![0usize; m + 1];
    let mut out = Vec::new();
    for x in p.markers().iter().rev() {
        let chosen = (x.row + 1..=m).find(|&r| col_of_row[r] > x.col && pivot_col[r] == 0);
        if let Some(r) = chosen {
            pivot_col[r] = x.col;
            out.push(Square::new(x.col, r));
        }
    }
    out.sort_unstable();
    Ok(RookPlacement::from_sorted_unchecked(p.board().clone(), out))
}

/// `ρ` and `κ` lookups against the left pivots of a placement.
#[derive(Clone, Debug)]
pub struct PivotTable {
    placement: RookPlacement,
    pivots: PivotSet,
}

impl PivotTable {
    pub fn new(p: &RookPlacement) -> Result<Self> {
        Ok(PivotTable { placement: p.clone(), pivots: pivots(p, Side::Left)? })
    }

    pub fn placement(&self) -> &RookPlacement {
        &self.placement
    }

    pub fn pivots(&self) -> &PivotSet {
        &self.pivots
    }

    fn check(&self, x: Square) -> Result<()> {
        if self.placement.contains(x) {
            Ok(())
        } else {
            Err(Error::NotAMarker(x))
        }
    }

    /// Row of the left pivot in `x`'s column; `None` stands for `∞`.
    pub fn rho(&self, x: Square) -> Result<Option<usize>> {
        self.check(x)?;
        Ok(self.pivots.row_of_col(x.col))
    }

    /// Column of the left pivot in `x`'s row, or `0`.
    pub fn kappa(&self, x: Square) -> Result<usize> {
        self.check(x)?;
        Ok(self.pivots.col_of_row(x.row).unwrap_or(0))
    }

    /// `row < ρ(x)`, with `ρ = ∞` exceeding every row.
    pub fn rho_exceeds(&self, x: Square, row: usize) -> Result<bool> {
        Ok(self.rho(x)?.is_none_or(|r| row < r))
    }

    /// Increasing, and each consecutive pair is linked through a pivot.
    pub fn is_pivot_path(&self, path: &[Square]) -> Result<bool> {
        for &x in path {
            self.check(x)?;
        }
        for w in path.windows(2) {
            if !(w[0].col < w[1].col && w[0].row < w[1].row) {
                return Ok(false);
            }
            if self.rho(w[0])? != Some(w[1].row) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `(ρ(P, X), κ(P, X))`.
pub fn pivot_coords(p: &RookPlacement, x: Square) -> Result<(Option<usize>, usize)> {
    let table = PivotTable::new(p)?;
    Ok((table.rho(x)?, table.kappa(x)?))
}

pub fn is_pivot_path(p: &RookPlacement, path: &[Square]) -> Result<bool> {
    PivotTable::new(p)?.is_pivot_path(path)
}
