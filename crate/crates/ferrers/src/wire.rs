//! JSON wire formats.
//!
//! A placement is `{"board": [row widths, bottom to top], "markers": [[col, row], ...]}`
//! with markers sorted by column. Tableaux are arrays of rows, top row
//! first. Growth diagrams map `"i,j"` to the parts of the label at corner
//! `(i, j)`.

use std::fmt;

use ferrers_core::growth::{BorderSequence, GrowthDiagram};
use ferrers_core::tableau::StandardTableau;
use ferrers_core::{FerrersBoard, Partition, Permutation, RookPlacement, Square};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementWire {
    pub board: Vec<usize>,
    pub markers: Vec<[usize; 2]>,
}

#[derive(Debug)]
pub enum WireError {
    Json(serde_json::Error),
    Invalid(ferrers_core::Error),
    BadPermutation(String),
    TooLarge { cols: usize, rows: usize },
}

/// Widest and tallest board accepted on input. Growth diagrams allocate
/// (cols + 1) * (rows + 1) labels, so unbounded sides would abort.
pub const MAX_SIDE: usize = 4096;

impl fmt::Display for WireError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WireError::Json(e) => write!(f, "malformed JSON: {e}"),
            WireError::Invalid(e) => write!(f, "invalid placement: {e}"),
            WireError::BadPermutation(s) => write!(f, "not a permutation: {s:?}"),
            WireError::TooLarge { cols, rows } => {
                write!(f, "board {cols}x{rows} exceeds the {MAX_SIDE}x{MAX_SIDE} input limit")
            }
        }
    }
}

impl std::error::Error for WireError {}

impl From<&RookPlacement> for PlacementWire {
    fn from(p: &RookPlacement) -> Self {
        PlacementWire {
            board: p.board().row_widths().to_vec(),
            markers: p.markers().iter().map(|s| [s.col, s.row]).collect(),
        }
    }
}

impl PlacementWire {
    pub fn to_placement(&self) -> Result<RookPlacement, WireError> {
        let (cols, rows) = (self.board.first().copied().unwrap_or(0), self.board.len());
        if cols > MAX_SIDE || rows > MAX_SIDE {
            return Err(WireError::TooLarge { cols, rows });
        }
        let board = FerrersBoard::new(self.board.clone()).map_err(WireError::Invalid)?;
        RookPlacement::new(board, self.markers.iter().map(|&[c, r]| Square::new(c, r))).map_err(WireError::Invalid)
    }
}

pub fn parse_placement(text: &str) -> Result<RookPlacement, WireError> {
    let wire: PlacementWire = serde_json::from_str(text).map_err(WireError::Json)?;
    wire.to_placement()
}

pub fn placement_value(p: &RookPlacement) -> Value {
    serde_json::to_value(PlacementWire::from(p)).expect("plain data serializes")
}

/// Compact single-line JSON, markers in column order.
pub fn serialize_placement(p: &RookPlacement) -> String {
    placement_value(p).to_string()
}

pub fn tableau_value(t: &StandardTableau) -> Value {
    serde_json::to_value(t.rows()).expect("plain data serializes")
}

pub fn partition_value(p: &Partition) -> Value {
    serde_json::to_value(p.parts()).expect("plain data serializes")
}

pub fn border_value(b: &BorderSequence) -> Value {
    Value::Array(b.partitions().iter().map(partition_value).collect())
}

pub fn diagram_value(g: &GrowthDiagram) -> Value {
    let labels: Map<String, Value> = g.corners().map(|(i, j, l)| (format!("{i},{j}"), partition_value(l))).collect();
    serde_json::json!({ "board": g.board().row_widths(), "labels": labels })
}

/// Reads `"45867312"`, `"4 5 8"` or `"10,2,1,..."`. Without separators
/// every character is one entry.
pub fn parse_permutation(text: &str) -> Result<Permutation, WireError> {
    let text = text.trim();
    let bad = || WireError::BadPermutation(text.to_string());
    let entries: Vec<usize> = if text.contains([',', ' ']) {
        text.split([',', ' ']).filter(|s| !s.is_empty()).map(|s| s.parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    } else {
        text.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?
    };
    Permutation::new(entries).map_err(|_| bad())
}
