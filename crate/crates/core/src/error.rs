use alloc::boxed::Box;
use core::fmt;

use crate::board::Square;
use crate::bwx::PhiTrace;

/// Everything that can go wrong in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
#[non_exhaustive]
pub enum Error {
    /// A partition or board width at `index` (0-based) is zero.
    NonPositivePart { index: usize },
    /// The entry at `index` (0-based) exceeds the one before it.
    PartsNotDecreasing { index: usize },
    /// Coordinates are 1-indexed.
    ZeroCoordinate(Square),
    MarkerOffBoard(Square),
    DuplicateRow { row: usize },
    DuplicateColumn { col: usize },
    /// Reverse, transpose, complement and pivots need a rectangular board.
    NotRectangular,
    /// A rectangle `R(i,j)` whose corner square is not on the board.
    RegionOffBoard(Square),
    /// Column bands need `1 <= a < b <= columns`.
    InvalidBand { a: usize, b: usize },
    /// `k` must be at least 2.
    InvalidK(usize),
    NotAMarker(Square),
    /// The anchor column of a shift already holds a marker.
    AnchorOccupied { col: usize },
    /// The shifted sequence is not entirely on the far side of the anchor.
    SequenceWrongSide { col: usize },
    /// A generalized Knuth transformation on a band with no markers.
    EmptyBand { a: usize, b: usize },
    /// The one-line word is not a permutation of `1..=n`.
    NotAPermutation,
    /// A partial permutation was required to be total.
    NotTotal,
    LengthMismatch { left: usize, right: usize },
    /// A pattern must have length at least 1.
    EmptyPattern,
    /// The border sequence does not have `columns + rows + 1` entries.
    BorderLength { expected: usize, found: usize },
    /// The border sequence does not start and end with `∅`, or two
    /// consecutive entries differ by more than one box.
    BorderShape { index: usize },
    /// Growth-diagram reconstruction failed at corner `(i, j)`.
    Reconstruction { corner: (usize, usize), reason: &'static str },
    /// `φ*` did not reach a fixpoint within its step budget.
    StepBudgetExceeded { budget: usize, trace: Box<PhiTrace> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositivePart { index } => {
                write!(f, "entry {index} is not positive")
            }
            Error::PartsNotDecreasing { index } => {
                write!(f, "entry {index} is larger than the entry before it (widths must weakly decrease)")
            }
            Error::ZeroCoordinate(sq) => write!(f, "square {sq} has a zero coordinate"),
            Error::MarkerOffBoard(sq) => write!(f, "marker off board at {sq}"),
            Error::DuplicateRow { row } => write!(f, "two markers in row {row}"),
            Error::DuplicateColumn { col } => write!(f, "two markers in column {col}"),
            Error::NotRectangular => f.write_str("operation requires a rectangular board"),
            Error::RegionOffBoard(sq) => write!(f, "rectangle R{sq} is not contained in the board"),
            Error::InvalidBand { a, b } => write!(f, "invalid column band ({a},{b})"),
            Error::InvalidK(k) => write!(f, "k must be at least 2, got {k}"),
            Error::NotAMarker(sq) => write!(f, "square {sq} is not a marker of the placement"),
            Error::AnchorOccupied { col } => write!(f, "anchor column {col} is occupied"),
            Error::SequenceWrongSide { col } => {
                write!(f, "shifted sequence is not entirely on the far side of column {col}")
            }
            Error::EmptyBand { a, b } => write!(f, "column band ({a},{b}) holds no markers"),
            Error::NotAPermutation => f.write_str("not a permutation of 1..n"),
            Error::NotTotal => f.write_str("partial permutation is not a permutation of 1..n"),
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::EmptyPattern => f.write_str("pattern must be non-empty"),
            Error::BorderLength { expected, found } => {
                write!(f, "border sequence has {found} entries, board needs {expected}")
            }
            Error::BorderShape { index } => write!(f, "border sequence is inconsistent at entry {index}"),
            Error::Reconstruction { corner, reason } => {
                write!(f, "cannot reconstruct corner ({},{}): {reason}", corner.0, corner.1)
            }
            Error::StepBudgetExceeded { budget, trace } => write!(
                f,
                "phi* did not terminate within {budget} steps ({} recorded)",
                trace.steps.len()
            ),
        }
    }
}

impl core::error::Error for Error {}
