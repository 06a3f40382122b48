//! Fomin growth diagrams on Ferrers boards.
//!
//! Corner `(i, j)` is the NE corner of square `(i, j)`; corners with `i = 0`
//! or `j = 0` lie on the left or bottom edge and always carry `∅`. The label
//! of every other corner is computed from the three other corners of its
//! square by the local rules:
//!
//! 1. `NW != SE`: `NE = NW ∪ SE`.
//! 2. `SW != NW = SE`, with `NW = SW + box in row r`: `NE = NW + box in row r+1`.
//! 3. `SW = NW = SE`: `NE = SW`, or `SW + box in row 1` if the square holds a marker.
//!
//! `GDA_k` replaces rule 2: if the box would open row `k`, it goes to row 1
//! instead, so no label ever has `k` parts.

use alloc::vec;
use alloc::vec::Vec;

use crate::board::{FerrersBoard, RookPlacement, Square};
use crate::{Error, Partition, Result};

/// A labelling of every corner of a board by partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrowthDiagram {
    board: FerrersBoard,
    // labels[j][i] is corner (i, j)
    labels: Vec<Vec<Partition>>,
}

impl GrowthDiagram {
    pub fn board(&self) -> &FerrersBoard {
        &self.board
    }

    /// Label at corner `(i, j)`, or `None` if the corner is not on the board.
    pub fn label(&self, i: usize, j: usize) -> Option<&Partition> {
        self.labels.get(j)?.get(i)
    }

    /// Label at the NE corner of `sq`.
    pub fn ne_label(&self, sq: Square) -> Option<&Partition> {
        self.label(sq.col, sq.row)
    }

    /// All `(i, j, label)` triples, row by row from the bottom.
    pub fn corners(&self) -> impl Iterator<Item = (usize, usize, &Partition)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .flat_map(|(j, row)| row.iter().enumerate().map(move |(i, p)| (i, j, p)))
    }

    /// Labels read along the right/up border, from corner `(cols, 0)` to
    /// corner `(0, rows)`.
    pub fn border_sequence(&self) -> BorderSequence {
        BorderSequence {
            partitions: border_corners(&self.board)
                .into_iter()
                .map(|(i, j)| self.labels[j][i].clone())
                .collect(),
        }
    }
}

/// Number of corners in corner-row `j`, minus one.
fn corner_width(board: &FerrersBoard, j: usize) -> usize {
    if j == 0 {
        board.num_cols()
    } else {
        board.width(j)
    }
}

/// Corners on the right/up border, from `(cols, 0)` to `(0, rows)`.
pub fn border_corners(board: &FerrersBoard) -> Vec<(usize, usize)> {
    let rows = board.num_rows();
    let (mut i, mut j) = (board.num_cols(), 0);
    let mut out = Vec::with_capacity(board.num_cols() + rows + 1);
    out.push((i, j));
    while (i, j) != (0, rows) {
        if j < rows && board.width(j + 1) == i {
            j += 1;
        } else {
            i -= 1;
        }
        out.push((i, j));
    }
    out
}

/// Partitions along the right/up border of a board, bottom-right corner
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BorderSequence {
    partitions: Vec<Partition>,
}

impl BorderSequence {
    /// Checks that the sequence starts and ends with `∅` and that
    /// neighbouring entries are equal or differ by one box.
    pub fn new(partitions: Vec<Partition>) -> Result<Self> {
        let last = partitions.len().saturating_sub(1);
        if partitions.is_empty() {
            return Err(Error::BorderShape { index: 0 });
        }
        if !partitions[0].is_empty() {
            return Err(Error::BorderShape { index: 0 });
        }
        if !partitions[last].is_empty() {
            return Err(Error::BorderShape { index: last });
        }
        if let Some(index) = partitions.windows(2).position(|w| !w[0].is_adjacent(&w[1])) {
            return Err(Error::BorderShape { index: index + 1 });
        }
        Ok(BorderSequence { partitions })
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn reversed(&self) -> BorderSequence {
        let mut partitions = self.partitions.clone();
        partitions.reverse();
        BorderSequence { partitions }
    }
}

/// Fomin's growth diagram of `p`.
pub fn run_gda(p: &RookPlacement) -> GrowthDiagram {
    grow(p, None)
}

/// The modified growth diagram `GDA_k`.
pub fn run_gda_k(p: &RookPlacement, k: usize) -> Result<GrowthDiagram> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    Ok(grow(p, Some(k)))
}

/// `seq(P, F)`.
pub fn seq(p: &RookPlacement) -> BorderSequence {
    run_gda(p).border_sequence()
}

/// `seq_k(P, F)`.
pub fn seq_k(p: &RookPlacement, k: usize) -> Result<BorderSequence> {
    Ok(run_gda_k(p, k)?.border_sequence())
}

fn grow(p: &RookPlacement, cap: Option<usize>) -> GrowthDiagram {
    let board = p.board().clone();
    let rows = board.num_rows();
    let mut marker_row = vec![0usize; board.num_cols() + 1];
    for s in p.markers() {
        marker_row[s.col] = s.row;
    }
    let mut labels: Vec<Vec<Partition>> = Vec::with_capacity(rows + 1);
    labels.push(vec![Partition::empty(); corner_width(&board, 0) + 1]);
    for j in 1..=rows {
        let mut row = Vec::with_capacity(board.width(j) + 1);
        row.push(Partition::empty());
        for i in 1..=board.width(j) {
            let below = &labels[j - 1];
            let ne = local_rule(&below[i - 1], &row[i - 1], &below[i], marker_row[i] == j, cap);
            row.push(ne);
        }
        labels.push(row);
    }
    GrowthDiagram { board, labels }
}

fn local_rule(sw: &Partition, nw: &Partition, se: &Partition, marker: bool, cap: Option<usize>) -> Partition {
    if nw != se {
        return nw.union(se);
    }
    if sw != nw {
        let r = sw.added_box_row(nw).expect("adjacent growth labels differ by one box");
        return match nw.with_box_added(r + 1) {
            Some(ne) if cap.is_some_and(|k| ne.len() >= k) => {
                nw.with_box_added(0).expect("first row can always grow")
            }
            Some(ne) => ne,
            None => unreachable!("row below a grown row is shorter"),
        };
    }
    if marker {
        sw.with_box_added(0).expect("first row can always grow")
    } else {
        sw.clone()
    }
}

/// Rebuilds the growth diagram and the placement from the border labels,
/// using the backward rules:
///
/// - A. `NW != SE`: `SW = NW ∩ SE`.
/// - B. `NW = NE = SE`: `SW = NW`.
/// - C. `NE != NW = SE`: if `NE` grew row `r >= 2`, `SW = NW - box in row r-1`;
///   if it grew row 1, `SW = NW` and square `(i, j)` holds a marker.
pub fn invert_gda(border: &BorderSequence, board: &FerrersBoard) -> Result<(RookPlacement, GrowthDiagram)> {
    let path = border_corners(board);
    if path.len() != border.len() {
        return Err(Error::BorderLength { expected: path.len(), found: border.len() });
    }
    let rows = board.num_rows();
    let mut grid: Vec<Vec<Option<Partition>>> =
        (0..=rows).map(|j| vec![None; corner_width(board, j) + 1]).collect();
    for (&(i, j), label) in path.iter().zip(border.partitions()) {
        grid[j][i] = Some(label.clone());
    }
    let mut markers = Vec::new();
    for j in (1..=rows).rev() {
        for i in (1..=board.width(j)).rev() {
            let missing = Error::Reconstruction { corner: (i, j), reason: "missing neighbouring label" };
            let ne = grid[j][i].clone().ok_or(missing.clone())?;
            let nw = grid[j][i - 1].clone().ok_or(missing.clone())?;
            let se = grid[j - 1][i].clone().ok_or(missing)?;
            let grows = |from: &Partition| from == &ne || from.added_box_row(&ne).is_some();
            if !grows(&nw) || !grows(&se) {
                return Err(Error::Reconstruction {
                    corner: (i, j),
                    reason: "NE is not NW or SE plus at most one box",
                });
            }
            let sw = if nw != se {
                nw.intersection(&se)
            } else if nw == ne {
                nw
            } else {
                match nw.added_box_row(&ne) {
                    Some(0) => {
                        markers.push(Square::new(i, j));
                        nw
                    }
                    Some(r) => nw.with_box_removed(r - 1).ok_or(Error::Reconstruction {
                        corner: (i, j),
                        reason: "rule C would remove a box that is not a corner",
                    })?,
                    None => unreachable!("checked by grows"),
                }
            };
            if (i == 1 || j == 1) && !sw.is_empty() {
                return Err(Error::Reconstruction {
                    corner: (i - 1, j - 1),
                    reason: "edge corner must be labelled by the empty partition",
                });
            }
            grid[j - 1][i - 1] = Some(sw);
        }
    }
    let labels: Vec<Vec<Partition>> = grid
        .into_iter()
        .enumerate()
        .map(|(j, row)| {
            row.into_iter()
                .enumerate()
                .map(|(i, l)| {
                    l.ok_or(Error::Reconstruction { corner: (i, j), reason: "corner was never reached" })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let placement = RookPlacement::new(board.clone(), markers)?;
    Ok((placement, GrowthDiagram { board: board.clone(), labels }))
}
