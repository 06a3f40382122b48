use alloc::vec::Vec;
use core::cmp::{max, min};
use core::fmt;

use crate::{Error, Result};

/// An integer partition `λ_1 ≥ λ_2 ≥ … ≥ λ_t ≥ 1`.
///
/// Parts are stored without trailing zeros, so structural equality is the
/// same as comparing entrywise with absent entries read as `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition `∅`.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Validates `parts` as a weakly decreasing sequence of positive integers.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
            if index > 0 && parts[index - 1] < p {
                return Err(Error::PartsNotDecreasing { index });
            }
        }
        Ok(Partition { parts })
    }

    /// Drops zeros before validating; used when building from entrywise
    /// computations.
    pub(crate) fn from_padded(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Entry `i` (0-based), with absent entries read as `0`.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Entrywise maximum `λ ∪ μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let n = max(self.len(), other.len());
        Partition::from_padded((0..n).map(|i| max(self.part(i), other.part(i))).collect())
    }

    /// Entrywise minimum `λ ∩ μ`.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let n = min(self.len(), other.len());
        Partition::from_padded((0..n).map(|i| min(self.part(i), other.part(i))).collect())
    }

    /// Adds one to entry `row` (0-based). Returns `None` when the result is
    /// not a partition.
    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.part(row - 1) == self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == self.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    /// Subtracts one from entry `row` (0-based). Returns `None` when the
    /// result is not a partition.
    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row) == self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Some(Partition::from_padded(parts))
    }

    /// `true` when every entry of `self` is at most the matching entry of
    /// `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && (0..self.len()).all(|i| self.part(i) <= other.part(i))
    }

    /// If `other` is `self` plus one box, the 0-based row of that box.
    pub fn added_box_row(&self, other: &Partition) -> Option<usize> {
        if other.size() != self.size() + 1 || !self.is_contained_in(other) {
            return None;
        }
        (0..other.len()).find(|&i| other.part(i) != self.part(i))
    }

    /// `true` when the two partitions are equal or differ by one box.
    pub fn is_adjacent(&self, other: &Partition) -> bool {
        self == other || self.added_box_row(other).is_some() || other.added_box_row(self).is_some()
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Parts juxtaposed as digits (`221`), comma-separated once any part
/// exceeds 9, and `∅` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let sep = if self.parts.iter().any(|&p| p > 9) { "," } else { "" };
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
