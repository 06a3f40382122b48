//! Extremal monotone sequences in column bands, shifts, generalized Knuth
//! transformations and ordinary Knuth moves.
//!
//! Within a band of columns `a..=b`, `d_s` / `D_L` are the value-lexicographically
//! smallest / largest among the longest decreasing sequences, and `i_s` / `I_L`
//! the same for increasing sequences. Each generalized transformation shifts
//! one of them into an empty anchor column (`a` for left shifts, `b` for right
//! shifts) and leaves the insertion tableau unchanged.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::board::{Permutation, RookPlacement, Square, Symmetry};
use crate::tableau::insertion;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremum {
    Smallest,
    Largest,
}

/// A longest monotone sequence of markers in a band, extremal among those
/// of its length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonotoneSequence {
    pub squares: Vec<Square>,
    pub direction: Direction,
    pub extremum: Extremum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShiftDirection {
    /// `P(c ← S)`: `S_1` moves to `c`, every other `S_i` to `col(S_{i-1})`.
    Left,
    /// `P(S → c)`: `S_k` moves to `c`, every other `S_i` to `col(S_{i+1})`.
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftSpec {
    pub sequence: Vec<Square>,
    pub anchor: usize,
    pub direction: ShiftDirection,
}

/// The four generalized Knuth transformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GkKind {
    /// `P(a ← d_s)`
    DsLeft,
    /// `P(D_L → b)`
    DlRight,
    /// `P(i_s → b)`
    IsRight,
    /// `P(a ← I_L)`
    IlLeft,
}

impl GkKind {
    pub const ALL: [GkKind; 4] = [GkKind::DsLeft, GkKind::DlRight, GkKind::IsRight, GkKind::IlLeft];

    pub fn anchor(self, a: usize, b: usize) -> usize {
        match self {
            GkKind::DsLeft | GkKind::IlLeft => a,
            GkKind::DlRight | GkKind::IsRight => b,
        }
    }
}

fn check_band(p: &RookPlacement, a: usize, b: usize) -> Result<()> {
    if a == 0 || a >= b || b > p.board().num_cols() {
        Err(Error::InvalidBand { a, b })
    } else {
        Ok(())
    }
}

/// The extremal longest monotone sequence of markers in columns `a..=b`
/// (absolute column numbers). `None` when the band holds no markers.
pub fn extremal_sequence(
    p: &RookPlacement,
    a: usize,
    b: usize,
    direction: Direction,
    extremum: Extremum,
) -> Result<Option<MonotoneSequence>> {
    check_band(p, a, b)?;
    let band: Vec<Square> = p.markers().iter().copied().filter(|s| (a..=b).contains(&s.col)).collect();
    if band.is_empty() {
        return Ok(None);
    }
    let follows = |x: &Square, y: &Square| {
        x.col < y.col
            && match direction {
                Direction::Increasing => x.row < y.row,
                Direction::Decreasing => x.row > y.row,
            }
    };
    // longest[t] = length of the longest monotone sequence starting at band[t]
    let mut longest = vec![1usize; band.len()];
    for t in (0..band.len()).rev() {
        for u in t + 1..band.len() {
            if follows(&band[t], &band[u]) {
                longest[t] = longest[t].max(longest[u] + 1);
            }
        }
    }
    let k = longest.iter().copied().max().unwrap_or(0);
    // Greedy: the lexicographic extreme picks the extreme feasible row at
    // every position.
    let mut squares: Vec<Square> = Vec::with_capacity(k);
    for need in (1..=k).rev() {
        let candidates = (0..band.len())
            .filter(|&t| longest[t] == need && squares.last().is_none_or(|last| follows(last, &band[t])));
        let pick = match extremum {
            Extremum::Smallest => candidates.min_by_key(|&t| band[t].row),
            Extremum::Largest => candidates.max_by_key(|&t| band[t].row),
        };
        squares.push(band[pick.expect("a continuation of the required length exists")]);
    }
    Ok(Some(MonotoneSequence { squares, direction, extremum }))
}

/// Moves the markers of `spec.sequence` one place along the sequence, the
/// end marker landing in the anchor column. Rows never change.
pub fn shift(p: &RookPlacement, spec: &ShiftSpec) -> Result<RookPlacement> {
    let c = spec.anchor;
    if c == 0 || c > p.board().num_cols() {
        return Err(Error::InvalidBand { a: c, b: c });
    }
    if p.row_of_col(c).is_some() {
        return Err(Error::AnchorOccupied { col: c });
    }
    let mut seq = spec.sequence.clone();
    seq.sort_unstable();
    seq.dedup();
    for &s in &seq {
        if !p.contains(s) {
            return Err(Error::NotAMarker(s));
        }
        let right_side = s.col > c;
        if right_side != (spec.direction == ShiftDirection::Left) {
            return Err(Error::SequenceWrongSide { col: c });
        }
    }
    let k = seq.len();
    let moved = (0..k).map(|t| {
        let col = match spec.direction {
            ShiftDirection::Left if t == 0 => c,
            ShiftDirection::Left => seq[t - 1].col,
            ShiftDirection::Right if t + 1 == k => c,
            ShiftDirection::Right => seq[t + 1].col,
        };
        Square::new(col, seq[t].row)
    });
    let markers: Vec<Square> = p.markers().iter().copied().filter(|s| !seq.contains(s)).chain(moved).collect();
    p.with_markers(markers)
}

fn gk_prepare(p: &RookPlacement, kind: GkKind, a: usize, b: usize) -> Result<()> {
    if !p.board().is_rectangular() {
        return Err(Error::NotRectangular);
    }
    check_band(p, a, b)?;
    let anchor = kind.anchor(a, b);
    if p.row_of_col(anchor).is_some() {
        return Err(Error::AnchorOccupied { col: anchor });
    }
    if !p.markers().iter().any(|s| (a..=b).contains(&s.col)) {
        return Err(Error::EmptyBand { a, b });
    }
    Ok(())
}

fn shift_extremal(
    p: &RookPlacement,
    a: usize,
    b: usize,
    direction: Direction,
    extremum: Extremum,
    shift_dir: ShiftDirection,
) -> Result<RookPlacement> {
    let seq = extremal_sequence(p, a, b, direction, extremum)?.ok_or(Error::EmptyBand { a, b })?;
    let anchor = if shift_dir == ShiftDirection::Left { a } else { b };
    shift(p, &ShiftSpec { sequence: seq.squares, anchor, direction: shift_dir })
}

/// A generalized Knuth transformation on the band `a..=b` of a placement on
/// a rectangular board.
///
/// The increasing kinds are computed on the reversed placement, where they
/// become the decreasing kinds; [`gk_transform_direct`] computes them from
/// the increasing sequences themselves.
pub fn gk_transform(p: &RookPlacement, kind: GkKind, a: usize, b: usize) -> Result<RookPlacement> {
    gk_prepare(p, kind, a, b)?;
    let n = p.board().num_cols();
    match kind {
        GkKind::DsLeft => shift_extremal(p, a, b, Direction::Decreasing, Extremum::Smallest, ShiftDirection::Left),
        GkKind::DlRight => shift_extremal(p, a, b, Direction::Decreasing, Extremum::Largest, ShiftDirection::Right),
        GkKind::IsRight | GkKind::IlLeft => {
            let mirrored = if kind == GkKind::IsRight { GkKind::DsLeft } else { GkKind::DlRight };
            let rev = p.symmetry(Symmetry::Reverse)?;
            gk_transform(&rev, mirrored, n + 1 - b, n + 1 - a)?.symmetry(Symmetry::Reverse)
        }
    }
}

/// Same as [`gk_transform`] but always shifts the named extremal sequence of
/// the placement itself.
pub fn gk_transform_direct(p: &RookPlacement, kind: GkKind, a: usize, b: usize) -> Result<RookPlacement> {
    gk_prepare(p, kind, a, b)?;
    let (direction, extremum, shift_dir) = match kind {
        GkKind::DsLeft => (Direction::Decreasing, Extremum::Smallest, ShiftDirection::Left),
        GkKind::DlRight => (Direction::Decreasing, Extremum::Largest, ShiftDirection::Right),
        GkKind::IsRight => (Direction::Increasing, Extremum::Smallest, ShiftDirection::Right),
        GkKind::IlLeft => (Direction::Increasing, Extremum::Largest, ShiftDirection::Left),
    };
    shift_extremal(p, a, b, direction, extremum, shift_dir)
}

/// The placement of `sigma` on an `(n+1) × n` board with an empty column
/// inserted at column `gap` (1-based, `1..=n+1`).
pub fn with_empty_column(sigma: &Permutation, gap: usize) -> Result<RookPlacement> {
    let n = sigma.len();
    if gap == 0 || gap > n + 1 {
        return Err(Error::InvalidBand { a: gap, b: gap });
    }
    let markers = sigma.as_slice().iter().enumerate().map(|(i, &v)| {
        let col = if i + 1 < gap { i + 1 } else { i + 2 };
        Square::new(col, v)
    });
    RookPlacement::new(crate::FerrersBoard::rectangle(n + 1, n), markers)
}

/// Every permutation one standard Knuth move away from `sigma`: swap
/// adjacent `x < z` when a neighbour `y` of the pair has `x < y < z`.
pub fn knuth_neighbors(sigma: &Permutation) -> Vec<Permutation> {
    let w = sigma.as_slice();
    let mut out = BTreeSet::new();
    for p in 0..w.len().saturating_sub(1) {
        let (lo, hi) = (w[p].min(w[p + 1]), w[p].max(w[p + 1]));
        let between = |y: usize| lo < y && y < hi;
        let left = p > 0 && between(w[p - 1]);
        let right = p + 2 < w.len() && between(w[p + 2]);
        if left || right {
            let mut next = w.to_vec();
            next.swap(p, p + 1);
            out.insert(next);
        }
    }
    out.into_iter()
        .map(|v| Permutation::new(v).expect("swapping entries keeps a permutation"))
        .collect()
}

/// Knuth equivalence, decided by comparing insertion tableaux.
pub fn knuth_equivalent(sigma: &Permutation, rho: &Permutation) -> Result<bool> {
    if sigma.len() != rho.len() {
        return Err(Error::LengthMismatch { left: sigma.len(), right: rho.len() });
    }
    Ok(insertion(&RookPlacement::from_permutation(sigma)) == insertion(&RookPlacement::from_permutation(rho)))
}
