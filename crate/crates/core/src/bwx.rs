//! The Backelin–West–Xin transformation on rook placements.
//!
//! `φ` finds the `k…1` occurrence whose row sequence is lexicographically
//! smallest and rotates its rows one step left: columns `i_1 < … < i_k`
//! holding rows `v_1 > … > v_k` receive `v_2, …, v_k, v_1`. All other
//! markers stay put. `φ*` iterates `φ` until no `k…1` occurrence remains.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::board::{PatternOccurrence, Permutation, RookPlacement, Square};
use crate::{Error, Result};

/// One application of `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhiStep {
    pub occurrence: PatternOccurrence,
    /// `(a, b)`: column of the last square and row of the first square.
    pub bounding: Square,
    pub after: RookPlacement,
}

/// Every step taken by [`phi_star`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhiTrace {
    pub steps: Vec<PhiStep>,
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(())
    }
}

/// The `k…1` occurrence with the lexicographically smallest row sequence.
pub fn smallest_k1_occurrence(p: &RookPlacement, k: usize) -> Result<Option<PatternOccurrence>> {
    check_k(k)?;
    // Rows are distinct, so no two occurrences tie.
    Ok(p.occurrences(&Permutation::decreasing(k)).into_iter().min_by_key(PatternOccurrence::rows))
}

fn apply(p: &RookPlacement, occ: &PatternOccurrence) -> RookPlacement {
    let k = occ.squares.len();
    let moved: Vec<Square> = (0..k)
        .map(|t| Square::new(occ.squares[t].col, occ.squares[(t + 1) % k].row))
        .collect();
    let mut markers: Vec<Square> = p
        .markers()
        .iter()
        .copied()
        .filter(|s| !occ.squares.contains(s))
        .chain(moved)
        .collect();
    markers.sort_unstable();
    p.with_markers(markers).expect("rotating rows inside the occurrence rectangle stays on the board")
}

/// One application of `φ`; the identity on `k…1`-avoiders.
pub fn phi_step(p: &RookPlacement, k: usize) -> Result<RookPlacement> {
    Ok(match smallest_k1_occurrence(p, k)? {
        Some(occ) => apply(p, &occ),
        None => p.clone(),
    })
}

/// `(markers choose k) × markers`, saturating.
pub fn step_budget(markers: usize, k: usize) -> usize {
    if k > markers {
        return 0;
    }
    let mut c: usize = 1;
    for t in 0..k.min(markers - k) {
        c = c.saturating_mul(markers - t) / (t + 1);
    }
    c.saturating_mul(markers)
}

/// Iterates `φ` to a `k…1`-avoiding fixpoint, recording every step.
pub fn phi_star(p: &RookPlacement, k: usize) -> Result<(RookPlacement, PhiTrace)> {
    check_k(k)?;
    let budget = step_budget(p.len(), k);
    let mut trace = PhiTrace::default();
    let mut current = p.clone();
    while let Some(occ) = smallest_k1_occurrence(&current, k)? {
        if trace.steps.len() >= budget {
            return Err(Error::StepBudgetExceeded { budget, trace: Box::new(trace) });
        }
        let next = apply(&current, &occ);
        let bounding = Square::new(occ.squares[k - 1].col, occ.squares[0].row);
        trace.steps.push(PhiStep { occurrence: occ, bounding, after: next.clone() });
        current = next;
    }
    Ok((current, trace))
}

/// `φ*` without keeping the trace.
pub fn phi_star_placement(p: &RookPlacement, k: usize) -> Result<RookPlacement> {
    check_k(k)?;
    let budget = step_budget(p.len(), k);
    let mut current = p.clone();
    let mut steps = 0;
    while let Some(occ) = smallest_k1_occurrence(&current, k)? {
        if steps >= budget {
            // Re-run with tracing so the error carries the full history.
            return phi_star(p, k).map(|(q, _)| q);
        }
        current = apply(&current, &occ);
        steps += 1;
    }
    Ok(current)
}

/// `(a, b)` = (column of the last square, row of the first square) of the
/// smallest `k…1` occurrence; `R(a, b)` is the smallest lower-left rectangle
/// containing it.
pub fn phi_bounding_rectangle(p: &RookPlacement, k: usize) -> Result<Option<Square>> {
    Ok(smallest_k1_occurrence(p, k)?
        .map(|occ| Square::new(occ.squares[k - 1].col, occ.squares[0].row)))
}
