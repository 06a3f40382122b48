//! Rook placements on Ferrers boards and the bijections that act on them.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! - [`board`]: partitions-as-boards, rook placements, partial permutations,
//!   the board symmetries, restrictions and pattern containment;
//! - [`tableau`]: Robinson–Schensted insertion and recording tableaux;
//! - [`growth`]: Fomin's growth diagrams, their inversion from the border,
//!   and the modified diagrams `GDA_k` that cap every shape at `k - 1` rows;
//! - [`bwx`]: the Backelin–West–Xin transformation `φ` and its iterate `φ*`;
//! - [`pivots`]: left and right pivots and pivot-paths;
//! - [`knuth`]: column-band shifts, generalized Knuth transformations and
//!   ordinary Knuth moves;
//! - [`oracle`]: exhaustive enumerators and brute-force computations that
//!   share no code with the algorithms above.
//!
//! Coordinates are 1-indexed `(column, row)` pairs with rows counted from
//! the bottom (French notation).

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod board;
pub mod bwx;
mod error;
pub mod growth;
pub mod knuth;
pub mod oracle;
mod partition;
pub mod pivots;
pub mod tableau;

pub use board::{
    FerrersBoard, PartialPermutation, PatternOccurrence, Permutation, Region, RookPlacement,
    Square, Symmetry,
};
pub use error::Error;
pub use partition::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;
