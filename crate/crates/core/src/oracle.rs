//! Exhaustive enumerators and brute-force oracles.
//!
//! Nothing here calls into insertion, growth or the pattern scanner of
//! [`RookPlacement`], so comparisons against those are between independent
//! computations.

use alloc::vec;
use alloc::vec::Vec;

use crate::board::{FerrersBoard, Permutation, Region, RookPlacement, Square};
use crate::knuth::Direction;
use crate::Result;

/// Every Ferrers board with at most `max_rows` rows, each of width at most
/// `max_cols`, the empty board first. Order: by number of rows, then row
/// widths lexicographically.
pub fn enumerate_boards(max_cols: usize, max_rows: usize) -> Vec<FerrersBoard> {
    let mut out = vec![FerrersBoard::empty()];
    if max_cols == 0 {
        return out;
    }
    for rows in 1..=max_rows {
        let mut widths = vec![1usize; rows];
        loop {
            out.push(FerrersBoard::new(widths.clone()).expect("weakly decreasing positive widths"));
            // Next weakly decreasing sequence, lexicographically.
            let Some(t) = (0..rows).rev().find(|&t| widths[t] < max_cols && (t == 0 || widths[t] < widths[t - 1])) else {
                break;
            };
            widths[t] += 1;
            for w in &mut widths[t + 1..] {
                *w = 1;
            }
        }
    }
    out
}

const UNSET: usize = usize::MAX;

/// Streams the placements of a board column by column. Column choices run
/// through "no marker" (unless `full_only`) then rows bottom to top.
#[derive(Clone, Debug)]
pub struct Placements {
    board: FerrersBoard,
    heights: Vec<usize>,
    full_only: bool,
    choice: Vec<usize>,
    used: Vec<bool>,
    depth: usize,
    done: bool,
}

impl Placements {
    pub fn new(board: FerrersBoard, full_only: bool) -> Self {
        let n = board.num_cols();
        let heights = (1..=n).map(|c| board.height(c)).collect();
        let done = full_only && board.num_rows() != n;
        let used = vec![false; board.num_rows() + 1];
        Placements { board, heights, full_only, choice: vec![UNSET; n], used, depth: 0, done }
    }

    fn current(&self) -> RookPlacement {
        let markers = self
            .choice
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .map(|(c, &r)| Square::new(c + 1, r))
            .collect();
        RookPlacement::from_sorted_unchecked(self.board.clone(), markers)
    }
}

impl Iterator for Placements {
    type Item = RookPlacement;

    fn next(&mut self) -> Option<RookPlacement> {
        if self.done {
            return None;
        }
        let n = self.heights.len();
        if n == 0 {
            self.done = true;
            return Some(self.current());
        }
        loop {
            let c = self.depth;
            let prev = self.choice[c];
            let start = match prev {
                UNSET => usize::from(self.full_only),
                r => {
                    if r != 0 {
                        self.used[r] = false;
                    }
                    r + 1
                }
            };
            match (start..=self.heights[c]).find(|&o| o == 0 || !self.used[o]) {
                Some(o) => {
                    self.choice[c] = o;
                    if o != 0 {
                        self.used[o] = true;
                    }
                    if c + 1 == n {
                        return Some(self.current());
                    }
                    self.depth += 1;
                    self.choice[self.depth] = UNSET;
                }
                None => {
                    self.choice[c] = UNSET;
                    if c == 0 {
                        self.done = true;
                        return None;
                    }
                    self.depth -= 1;
                }
            }
        }
    }
}

pub fn enumerate_placements(board: &FerrersBoard, full_only: bool) -> Placements {
    Placements::new(board.clone(), full_only)
}

/// All permutations of `1..=n` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).expect("succ[i] qualifies");
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation::new(cur).expect("a rearrangement of 1..=n"))
    }
}

pub fn permutations(n: usize) -> Permutations {
    Permutations { next: Some((1..=n).collect()) }
}

/// Length of the longest increasing or decreasing run of markers (in both
/// coordinates) inside `region`, or in the whole placement for `None`.
pub fn longest_monotone(p: &RookPlacement, region: Option<Region>, direction: Direction) -> Result<usize> {
    let q;
    let squares = match region {
        Some(r) => {
            q = p.restrict(r)?;
            q.markers()
        }
        None => p.markers(),
    };
    let mut best = vec![0usize; squares.len()];
    for t in 0..squares.len() {
        best[t] = 1 + (0..t)
            .filter(|&u| match direction {
                Direction::Increasing => squares[u].row < squares[t].row,
                Direction::Decreasing => squares[u].row > squares[t].row,
            })
            .map(|u| best[u])
            .max()
            .unwrap_or(0);
    }
    Ok(best.into_iter().max().unwrap_or(0))
}

/// Containment by checking every `|τ|`-subset of markers.
pub fn contains_brute(p: &RookPlacement, tau: &Permutation) -> bool {
    let k = tau.len();
    let m = p.markers();
    if k == 0 || k > m.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let rows: Vec<usize> = idx.iter().map(|&i| m[i].row).collect();
        let same_order = (0..k).all(|s| (0..k).all(|t| (rows[s] < rows[t]) == (tau.as_slice()[s] < tau.as_slice()[t])));
        let corner = Square::new(m[idx[k - 1]].col, rows.iter().copied().max().unwrap_or(0));
        if same_order && p.board().contains(corner) {
            return true;
        }
        let Some(t) = (0..k).rev().find(|&t| idx[t] < m.len() - k + t) else {
            return false;
        };
        idx[t] += 1;
        for s in t + 1..k {
            idx[s] = idx[s - 1] + 1;
        }
    }
}

/// Number of placements (or full placements) on `board` avoiding `tau`.
pub fn count_avoiders(board: &FerrersBoard, tau: &Permutation, full_only: bool) -> usize {
    enumerate_placements(board, full_only).filter(|p| !contains_brute(p, tau)).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    fn widths(boards: &[FerrersBoard]) -> Vec<Vec<usize>> {
        boards.iter().map(|b| b.row_widths().to_vec()).collect()
    }

    #[test]
    fn boards_in_a_box() {
        assert_eq!(
            widths(&enumerate_boards(2, 2)),
            vec![vec![], vec![1], vec![2], vec![1, 1], vec![2, 1], vec![2, 2]]
        );
        assert_eq!(enumerate_boards(0, 0).len(), 1);
        assert_eq!(enumerate_boards(0, 5).len(), 1);
        assert_eq!(widths(&enumerate_boards(1, 3)), vec![vec![], vec![1], vec![1, 1], vec![1, 1, 1]]);
        // C(8,4) partitions fit in a 4 × 4 box.
        assert_eq!(enumerate_boards(4, 4).len(), 70);
    }

    #[test]
    fn placement_counts() {
        let sq = FerrersBoard::rectangle(2, 2);
        assert_eq!(enumerate_placements(&sq, true).count(), 2);
        assert_eq!(enumerate_placements(&sq, false).count(), 7);
        let stair = FerrersBoard::new(vec![2, 1]).unwrap();
        let full: Vec<_> = enumerate_placements(&stair, true).collect();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].markers(), &[Square::new(1, 2), Square::new(2, 1)]);
        assert_eq!(enumerate_placements(&FerrersBoard::empty(), true).count(), 1);
        assert_eq!(enumerate_placements(&FerrersBoard::rectangle(3, 2), true).count(), 0);
        // Rook numbers of the 3 × 3 board: 1 + 9 + 18 + 6.
        assert_eq!(enumerate_placements(&FerrersBoard::rectangle(3, 3), false).count(), 34);
    }

    #[test]
    fn permutation_stream() {
        let all: Vec<_> = permutations(3).map(|p| p.as_slice().to_vec()).collect();
        assert_eq!(all, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 1, 3], vec![2, 3, 1], vec![3, 1, 2], vec![3, 2, 1]]);
        assert_eq!(permutations(0).count(), 1);
        assert_eq!(permutations(6).count(), 720);
    }

    #[test]
    fn monotone_lengths() {
        let p = RookPlacement::from_permutation(&perm(&[4, 5, 3, 1, 2]));
        assert_eq!(longest_monotone(&p, None, Direction::Increasing).unwrap(), 2);
        assert_eq!(longest_monotone(&p, None, Direction::Decreasing).unwrap(), 3);
        let id = RookPlacement::from_permutation(&Permutation::identity(4));
        assert_eq!(longest_monotone(&id, None, Direction::Increasing).unwrap(), 4);
        assert_eq!(longest_monotone(&id, None, Direction::Decreasing).unwrap(), 1);
        assert_eq!(longest_monotone(&id, Some(Region::Rectangle(Square::new(2, 3))), Direction::Increasing).unwrap(), 2);
        let empty = RookPlacement::empty(FerrersBoard::rectangle(3, 3));
        assert_eq!(longest_monotone(&empty, None, Direction::Increasing).unwrap(), 0);
    }

    #[test]
    fn avoider_counts() {
        assert_eq!(count_avoiders(&FerrersBoard::rectangle(4, 4), &perm(&[3, 2, 1]), true), 14);
        assert_eq!(count_avoiders(&FerrersBoard::new(vec![2, 1]).unwrap(), &perm(&[2, 1]), true), 1);
        assert_eq!(count_avoiders(&FerrersBoard::rectangle(3, 3), &perm(&[1]), true), 0);
        for (n, catalan) in [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            let sq = FerrersBoard::rectangle(n, n);
            assert_eq!(count_avoiders(&sq, &perm(&[1, 2, 3]), true), catalan);
            assert_eq!(count_avoiders(&sq, &perm(&[2, 1, 3]), true), catalan);
        }
    }

    #[test]
    fn brute_containment_respects_board() {
        let stair = FerrersBoard::new(vec![2, 1]).unwrap();
        let p = RookPlacement::new(stair, [Square::new(1, 2), Square::new(2, 1)]).unwrap();
        assert!(!contains_brute(&p, &perm(&[2, 1])));
        assert!(contains_brute(&p, &perm(&[1])));
        let q = RookPlacement::from_permutation(&perm(&[2, 1]));
        assert!(contains_brute(&q, &perm(&[2, 1])));
    }
}
