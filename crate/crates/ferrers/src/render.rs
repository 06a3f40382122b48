//! Plain-text rendering. Rows are printed top to bottom so the picture
//! matches the French-notation drawings: row 1 is the last line.

use std::fmt::Write;

use ferrers_core::growth::{BorderSequence, GrowthDiagram};
use ferrers_core::tableau::StandardTableau;
use ferrers_core::RookPlacement;

/// One line per row, `•` for a marker and `.` for an empty square, each
/// line prefixed by its row number. An empty board renders as nothing.
pub fn placement(p: &RookPlacement) -> String {
    placement_with(p, None)
}

/// Like [`placement`], with a second placement (pivots, say) drawn as `o`.
pub fn placement_with(p: &RookPlacement, extra: Option<&RookPlacement>) -> String {
    let board = p.board();
    let label_width = board.num_rows().to_string().len();
    let mut out = String::new();
    for row in (1..=board.num_rows()).rev() {
        write!(out, "{row:>label_width$} |").unwrap();
        for col in 1..=board.width(row) {
            let sq = ferrers_core::Square::new(col, row);
            let glyph = if p.contains(sq) {
                "•"
            } else if extra.is_some_and(|e| e.contains(sq)) {
                "o"
            } else {
                "."
            };
            write!(out, " {glyph}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// The corner labels of a growth diagram as a grid, top corner row first,
/// every cell padded to the widest label.
pub fn diagram(g: &GrowthDiagram) -> String {
    let cells: Vec<Vec<String>> = {
        let mut rows: Vec<Vec<String>> = Vec::new();
        for (i, j, label) in g.corners() {
            if rows.len() <= j {
                rows.resize(j + 1, Vec::new());
            }
            debug_assert_eq!(rows[j].len(), i);
            rows[j].push(label.to_string());
        }
        rows
    };
    let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let mut out = String::new();
    for row in cells.iter().rev() {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

/// `(∅, 1, 2, 21, …, ∅)`.
pub fn border(b: &BorderSequence) -> String {
    let parts: Vec<String> = b.partitions().iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Rows top to bottom, entries separated by spaces.
pub fn tableau(t: &StandardTableau) -> String {
    let mut out = String::new();
    for row in t.rows() {
        let line: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
