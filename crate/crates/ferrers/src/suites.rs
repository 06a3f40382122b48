//! Exhaustive verification sweeps.
//!
//! Every suite walks a deterministic case space. Case `i` belongs to shard
//! `i % shards`; workers run whole shards and their reports are merged with
//! violations ordered by case index, so a multi-threaded run reports exactly
//! what a single-threaded one does.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use ferrers_core::bwx::{phi_star, phi_star_placement};
use ferrers_core::growth::{invert_gda, run_gda, run_gda_k, seq};
use ferrers_core::knuth::{
    extremal_sequence, gk_transform, gk_transform_direct, knuth_neighbors, shift, with_empty_column, Direction,
    Extremum, GkKind, ShiftDirection, ShiftSpec,
};
use ferrers_core::oracle::{contains_brute, enumerate_boards, enumerate_placements, longest_monotone, permutations};
use ferrers_core::pivots::{pivots, pivots_by_columns, PivotTable, Side};
use ferrers_core::tableau::{insertion, rs_pair, Slice};
use ferrers_core::{Error, FerrersBoard, Permutation, Region, RookPlacement, Square, Symmetry};
use serde::Serialize;
use serde_json::{json, Value};

use crate::wire::placement_value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    MainTheorem,
    CorollaryInverse,
    Lemma1Shape,
    Schensted,
    Schutzenberger,
    PivotTheorems,
    PivotLemmas,
    Gke,
    ShiftLemmas,
    WilfCounts,
    PhiBijection,
    GdaRoundtrip,
}

impl SuiteName {
    pub const ALL: [SuiteName; 12] = [
        SuiteName::MainTheorem,
        SuiteName::CorollaryInverse,
        SuiteName::Lemma1Shape,
        SuiteName::Schensted,
        SuiteName::Schutzenberger,
        SuiteName::PivotTheorems,
        SuiteName::PivotLemmas,
        SuiteName::Gke,
        SuiteName::ShiftLemmas,
        SuiteName::WilfCounts,
        SuiteName::PhiBijection,
        SuiteName::GdaRoundtrip,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::MainTheorem => "main-theorem",
            SuiteName::CorollaryInverse => "corollary-inverse",
            SuiteName::Lemma1Shape => "lemma1-shape",
            SuiteName::Schensted => "schensted",
            SuiteName::Schutzenberger => "schutzenberger",
            SuiteName::PivotTheorems => "pivot-theorems",
            SuiteName::PivotLemmas => "pivot-lemmas",
            SuiteName::Gke => "gke",
            SuiteName::ShiftLemmas => "shift-lemmas",
            SuiteName::WilfCounts => "wilf-counts",
            SuiteName::PhiBijection => "phi-bijection",
            SuiteName::GdaRoundtrip => "gda-roundtrip",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = SuiteName::ALL.iter().map(|s| s.as_str()).collect();
        write!(f, "unknown suite {:?}; expected one of {}", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for SuiteName {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, UnknownSuite> {
        SuiteName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    /// Boards have at most this many columns.
    pub max_cols: usize,
    /// Boards have at most this many rows.
    pub max_rows: usize,
    /// Permutation-quantified checks run over every `n <= max_n`.
    pub max_n: usize,
    pub ks: Vec<usize>,
    pub full_only: bool,
    pub shards: usize,
    /// Run just this shard; `None` runs them all.
    pub shard: Option<usize>,
    pub threads: usize,
    /// Keep at most this many counterexamples; `None` keeps all.
    pub cap: Option<usize>,
}

impl SuiteParams {
    /// Desk-scale defaults: a 4 × 4 box for placement sweeps, 5 × 5 for the
    /// pivot and shift sweeps, `n <= 6` for permutations (`n <= 7` for
    /// counting).
    pub fn defaults(suite: SuiteName) -> Self {
        let (box_side, max_n, ks) = match suite {
            SuiteName::MainTheorem => (4, 6, vec![2, 3, 4]),
            SuiteName::CorollaryInverse => (4, 6, vec![2, 3]),
            SuiteName::PivotTheorems | SuiteName::PivotLemmas | SuiteName::ShiftLemmas => (5, 6, vec![]),
            SuiteName::Gke => (5, 5, vec![]),
            SuiteName::WilfCounts => (4, 7, vec![]),
            SuiteName::PhiBijection => (4, 6, vec![3]),
            _ => (4, 6, vec![]),
        };
        SuiteParams {
            max_cols: box_side,
            max_rows: box_side,
            max_n,
            ks,
            full_only: false,
            shards: 1,
            shard: None,
            threads: 1,
            cap: Some(10),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub suite: String,
    pub params: SuiteParams,
    pub cases: u64,
    pub violations: Vec<Value>,
    pub violations_total: u64,
    /// Named counters, e.g. how many instances met a lemma's hypothesis.
    pub tallies: BTreeMap<String, u64>,
    pub seconds: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations_total == 0
    }

    pub fn tally(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }
}

/// Per-shard state: which case we are on and what went wrong.
struct Ctx {
    shard: usize,
    shards: usize,
    index: u64,
    cases: u64,
    cap: Option<usize>,
    violations: Vec<(u64, Value)>,
    total: u64,
    tallies: BTreeMap<String, u64>,
}

impl Ctx {
    /// Advances to the next case; `true` if this shard owns it.
    fn take(&mut self) -> bool {
        let mine = self.index % self.shards as u64 == self.shard as u64;
        self.index += 1;
        if mine {
            self.cases += 1;
        }
        mine
    }

    fn fail(&mut self, check: &str, mut detail: Value) {
        self.total += 1;
        if self.cap.is_none_or(|c| self.violations.len() < c) {
            if let Value::Object(map) = &mut detail {
                map.insert("check".into(), json!(check));
                map.insert("case".into(), json!(self.index - 1));
            }
            self.violations.push((self.index - 1, detail));
        }
    }

    fn expect(&mut self, ok: bool, check: &str, detail: impl FnOnce() -> Value) {
        if !ok {
            self.fail(check, detail());
        }
    }

    fn count(&mut self, key: &str, by: u64) {
        *self.tallies.entry(key.to_string()).or_default() += by;
    }
}

fn placement_case(p: &RookPlacement) -> Value {
    json!({ "placement": placement_value(p) })
}

fn placement_k_case(p: &RookPlacement, k: usize) -> Value {
    json!({ "placement": placement_value(p), "k": k })
}

fn error_case(p: &RookPlacement, e: &Error) -> Value {
    json!({ "placement": placement_value(p), "error": e.to_string() })
}

/// Every placement on every board in the box.
fn placements_in_box(params: &SuiteParams) -> impl Iterator<Item = RookPlacement> + '_ {
    enumerate_boards(params.max_cols, params.max_rows)
        .into_iter()
        .flat_map(move |b| enumerate_placements(&b, params.full_only))
}

/// Every placement on every non-empty rectangular board in the box.
fn placements_on_rectangles(params: &SuiteParams) -> impl Iterator<Item = RookPlacement> + '_ {
    (1..=params.max_rows)
        .flat_map(move |rows| (1..=params.max_cols).map(move |cols| FerrersBoard::rectangle(cols, rows)))
        .flat_map(move |b| enumerate_placements(&b, params.full_only))
}

fn run_shard(suite: SuiteName, params: &SuiteParams, shard: usize) -> Ctx {
    let mut ctx = Ctx {
        shard,
        shards: params.shards.max(1),
        index: 0,
        cases: 0,
        cap: params.cap,
        violations: Vec::new(),
        total: 0,
        tallies: BTreeMap::new(),
    };
    match suite {
        SuiteName::MainTheorem => main_theorem(&mut ctx, params),
        SuiteName::CorollaryInverse => corollary_inverse(&mut ctx, params),
        SuiteName::Lemma1Shape => lemma1_shape(&mut ctx, params),
        SuiteName::Schensted => schensted(&mut ctx, params),
        SuiteName::Schutzenberger => schutzenberger(&mut ctx, params),
        SuiteName::PivotTheorems => pivot_theorems(&mut ctx, params),
        SuiteName::PivotLemmas => pivot_lemmas(&mut ctx, params),
        SuiteName::Gke => gke(&mut ctx, params),
        SuiteName::ShiftLemmas => shift_lemmas(&mut ctx, params),
        SuiteName::WilfCounts => wilf_counts(&mut ctx, params),
        SuiteName::PhiBijection => phi_bijection(&mut ctx, params),
        SuiteName::GdaRoundtrip => gda_roundtrip(&mut ctx, params),
    }
    ctx
}

/// Runs a suite. With `params.shard` set only that shard runs; otherwise
/// all shards run on up to `params.threads` worker threads.
pub fn run_suite(suite: SuiteName, params: &SuiteParams) -> SweepReport {
    let start = Instant::now();
    let shards = params.shards.max(1);
    let owned: Vec<usize> = match params.shard {
        Some(s) => vec![s],
        None => (0..shards).collect(),
    };
    let threads = params.threads.clamp(1, owned.len().max(1));
    let results: Vec<Ctx> = if threads == 1 {
        owned.iter().map(|&s| run_shard(suite, params, s)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let mine: Vec<usize> = owned.iter().copied().skip(w).step_by(threads).collect();
                    scope.spawn(move || mine.into_iter().map(|s| run_shard(suite, params, s)).collect::<Vec<_>>())
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite worker panicked")).collect()
        })
    };
    let mut cases = 0;
    let mut total = 0;
    let mut violations = Vec::new();
    let mut tallies: BTreeMap<String, u64> = BTreeMap::new();
    for ctx in results {
        cases += ctx.cases;
        total += ctx.total;
        violations.extend(ctx.violations);
        for (k, v) in ctx.tallies {
            *tallies.entry(k).or_default() += v;
        }
    }
    if suite == SuiteName::WilfCounts && params.shard.is_none() {
        // Class sizes are totals over every shard.
        for n in 0..=params.max_n {
            let got: Vec<u64> = ["123", "213", "321"].iter().map(|t| tallies.get(&format!("n={n} avoid {t}")).copied().unwrap_or(0)).collect();
            if !(got.iter().all(|&c| c == got[0]) && got[0] == catalan(n)) {
                total += 1;
                let detail = json!({ "check": "S_n class sizes differ", "n": n, "counts": got, "catalan": catalan(n) });
                violations.push((u64::MAX, detail));
            }
        }
    }
    violations.sort_by_key(|(i, _)| *i);
    if let Some(c) = params.cap {
        violations.truncate(c);
    }
    SweepReport {
        suite: suite.to_string(),
        params: params.clone(),
        cases,
        violations: violations.into_iter().map(|(_, v)| v).collect(),
        violations_total: total,
        tallies,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn main_theorem(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_in_box(params) {
        for &k in &params.ks {
            if !ctx.take() {
                continue;
            }
            let g = match run_gda_k(&p, k) {
                Ok(g) => g,
                Err(e) => {
                    ctx.fail("run_gda_k", error_case(&p, &e));
                    continue;
                }
            };
            let labels = g.corners().count() as u64;
            ctx.count("gda_k-labels", labels);
            let wide = g.corners().find(|(_, _, l)| l.len() >= k).map(|(i, j, l)| (i, j, l.parts().to_vec()));
            ctx.expect(wide.is_none(), "gda_k label has k or more parts", || {
                json!({ "placement": placement_value(&p), "k": k, "corner": wide })
            });
            let (q, trace) = match phi_star(&p, k) {
                Ok(r) => r,
                Err(e) => {
                    ctx.fail("phi_star", error_case(&p, &e));
                    continue;
                }
            };
            ctx.count("phi-steps", trace.steps.len() as u64);
            ctx.expect(g.border_sequence() == seq(&q), "seq_k(P) != seq(phi*(P))", || placement_k_case(&p, k));
            ctx.expect(!contains_brute(&q, &Permutation::decreasing(k)), "phi*(P) contains k...1", || {
                placement_k_case(&p, k)
            });
            let mut before = p.clone();
            for step in &trace.steps {
                step_lemmas(ctx, &before, &step.after, &step.occurrence.squares, k);
                before = step.after.clone();
            }
        }
    }
}

/// The statements about a single `φ` step from `p` to `q` that moved the
/// smallest occurrence `s`.
fn step_lemmas(ctx: &mut Ctx, p: &RookPlacement, q: &RookPlacement, s: &[Square], k: usize) {
    let (a, b) = (s[k - 1].col, s[0].row);
    let detail = || json!({ "placement": placement_value(p), "k": k, "a": a, "b": b });
    let rect = |r: &RookPlacement, c: usize, w: usize| r.restrict(Region::Rectangle(Square::new(c, w)));
    let (Ok(p_low), Ok(q_low), Ok(p_left), Ok(q_left), Ok(p_r), Ok(q_r)) =
        (rect(p, a, b - 1), rect(q, a, b - 1), rect(p, a - 1, b), rect(q, a - 1, b), rect(p, a, b), rect(q, a, b))
    else {
        ctx.fail("rectangle restriction failed", detail());
        return;
    };
    ctx.expect(insertion(&p_low) == insertion(&q_low), "ins differs on R(a,b-1)", detail);
    ctx.expect(rs_pair(&p_left).1 == rs_pair(&q_left).1, "rec differs on R(a-1,b)", detail);
    let (bp, bq) = (seq(&p_r), seq(&q_r));
    let differing: Vec<usize> =
        (0..bp.len()).filter(|&t| bp.partitions()[t] != bq.partitions()[t]).collect();
    ctx.expect(differing.iter().all(|&t| t == b), "rectangle borders differ away from (a,b)", detail);
    let decreasing = Permutation::decreasing(k);
    let escapes = p_r
        .occurrences(&decreasing)
        .into_iter()
        .any(|o| o.squares[0].row != b || o.squares[k - 1].col != a);
    ctx.expect(!escapes, "k...1 in P|R starts below row b or ends left of column a", detail);
    ctx.expect(!contains_brute(&q_r, &decreasing), "phi(P)|R contains k...1", detail);
    ctx.count("phi-steps-checked", 1);
}

fn corollary_inverse(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_in_box(params) {
        for &k in &params.ks {
            if !ctx.take() {
                continue;
            }
            let inv = p.symmetry(Symmetry::Inverse).and_then(|pi| phi_star_placement(&pi, k));
            let star_inv = phi_star_placement(&p, k).and_then(|q| q.symmetry(Symmetry::Inverse));
            match (inv, star_inv) {
                (Ok(x), Ok(y)) => ctx.expect(x == y, "phi*(P') != phi*(P)'", || placement_k_case(&p, k)),
                (Err(e), _) | (_, Err(e)) => ctx.fail("phi_star", error_case(&p, &e)),
            }
        }
    }
}

fn lemma1_shape(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_in_box(params) {
        if !ctx.take() {
            continue;
        }
        let g = run_gda(&p);
        for (i, j, label) in g.corners().filter(|&(i, j, _)| i > 0 && j > 0) {
            ctx.count("corners", 1);
            let shape = p.restrict(Region::Rectangle(Square::new(i, j))).map(|r| insertion(&r).shape());
            ctx.expect(shape.as_ref() == Ok(label), "NE label != RS shape of R(i,j)", || {
                json!({ "placement": placement_value(&p), "corner": [i, j] })
            });
        }
    }
}

fn schensted(ctx: &mut Ctx, params: &SuiteParams) {
    for n in 0..=params.max_n {
        for sigma in permutations(n) {
            if !ctx.take() {
                continue;
            }
            let p = RookPlacement::from_permutation(&sigma);
            let shape = insertion(&p).shape();
            let inc = longest_monotone(&p, None, Direction::Increasing);
            let dec = longest_monotone(&p, None, Direction::Decreasing);
            ctx.expect(inc == Ok(shape.part(0)), "first row != longest increasing", || json!({ "perm": sigma.as_slice() }));
            ctx.expect(dec == Ok(shape.len()), "row count != longest decreasing", || json!({ "perm": sigma.as_slice() }));
        }
    }
}

fn schutzenberger(ctx: &mut Ctx, params: &SuiteParams) {
    for n in 0..=params.max_n {
        for sigma in permutations(n) {
            if !ctx.take() {
                continue;
            }
            let (ins, rec) = rs_pair(&RookPlacement::from_permutation(&sigma));
            let (ins_inv, rec_inv) = rs_pair(&RookPlacement::from_permutation(&sigma.inverse()));
            ctx.expect(ins == rec_inv && rec == ins_inv, "RS pair of the inverse is not swapped", || {
                json!({ "perm": sigma.as_slice() })
            });
        }
    }
}

fn pivot_set_is_well_formed(p: &RookPlacement, piv: &RookPlacement, side: Side) -> bool {
    piv.markers().iter().all(|v| {
        let below = p.row_of_col(v.col).is_some_and(|r| r < v.row);
        let owner = p.col_of_row(v.row).is_some_and(|c| match side {
            Side::Left => c > v.col,
            Side::Right => c < v.col,
        });
        v.row > 1 && below && owner
    })
}

fn pivot_theorems(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_on_rectangles(params) {
        if !ctx.take() {
            continue;
        }
        let detail = || placement_case(&p);
        let (Ok(left), Ok(right)) = (pivots(&p, Side::Left), pivots(&p, Side::Right)) else {
            ctx.fail("pivots failed", detail());
            continue;
        };
        let (ins, rec) = rs_pair(&p);
        let (ins_r, rec_r) = rs_pair(&right);
        ctx.expect(ins_r == ins.slice(Slice::StripTopRow), "ins(pivR P) != ins(P)^-", detail);
        ctx.expect(rec_r == rec.slice(Slice::StripTopRow), "rec(pivR P) != rec(P)^-", detail);
        ctx.expect(insertion(&left) == ins.slice(Slice::StripLeftColumn), "ins(pivL P) != -ins(P)", detail);
        let rev = p.symmetry(Symmetry::Reverse).and_then(|r| pivots(&r, Side::Right));
        ctx.expect(left.symmetry(Symmetry::Reverse) == rev, "rev(pivL P) != pivR(rev P)", detail);
        let tr = p.symmetry(Symmetry::Transpose).and_then(|t| pivots(&t, Side::Left));
        ctx.expect(left.symmetry(Symmetry::Transpose) == tr, "(pivL P)^tr != pivL(P^tr)", detail);
        ctx.expect(pivots_by_columns(&p).as_ref() == Ok(&left), "column construction != pivL", detail);
        ctx.expect(pivot_set_is_well_formed(&p, &left, Side::Left), "malformed left pivots", detail);
        ctx.expect(pivot_set_is_well_formed(&p, &right, Side::Right), "malformed right pivots", detail);
    }
}

/// Pivot-paths ending at `z`: the backward chain `z, pred(z), …`, where
/// `pred(z)` is the marker in the column of the pivot in `z`'s row.
fn chain_into(p: &RookPlacement, table: &PivotTable, z: Square) -> Vec<Square> {
    let mut out = vec![z];
    let mut cur = z;
    while let Ok(c) = table.kappa(cur) {
        let Some(row) = (c > 0).then(|| p.row_of_col(c)).flatten() else { break };
        cur = Square::new(c, row);
        out.push(cur);
    }
    out
}

/// Longest decreasing sequence starting at each marker.
fn decreasing_from(p: &RookPlacement) -> BTreeMap<Square, usize> {
    let m = p.markers();
    let mut best = vec![1usize; m.len()];
    for t in (0..m.len()).rev() {
        for u in t + 1..m.len() {
            if m[u].row < m[t].row {
                best[t] = best[t].max(best[u] + 1);
            }
        }
    }
    m.iter().copied().zip(best).collect()
}

fn is_12(x: Square, y: Square) -> bool {
    x.col < y.col && x.row < y.row
}

fn is_21(x: Square, y: Square) -> bool {
    x.col < y.col && x.row > y.row
}

fn decreasing_sequences(m: &[Square]) -> Vec<Vec<Square>> {
    (1u32..1 << m.len())
        .map(|mask| (0..m.len()).filter(|t| mask >> t & 1 == 1).map(|t| m[t]).collect::<Vec<_>>())
        .filter(|s| s.windows(2).all(|w| w[0].row > w[1].row))
        .collect()
}

fn pivot_lemmas(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_on_rectangles(params) {
        if !ctx.take() {
            continue;
        }
        let Ok(table) = PivotTable::new(&p) else {
            ctx.fail("pivots failed", placement_case(&p));
            continue;
        };
        let m = p.markers();
        let rho_above = |x: Square, row: usize| table.rho_exceeds(x, row).unwrap_or(false);
        let kappa = |x: Square| table.kappa(x).unwrap_or(0);
        let chains: BTreeMap<Square, Vec<Square>> = m.iter().map(|&z| (z, chain_into(&p, &table, z))).collect();
        let path_from_21 = |x: Square, z: Square| chains[&z].iter().any(|&j| is_21(x, j));
        let dec = decreasing_from(&p);
        for &x in m {
            for &y in m.iter().filter(|&&y| is_12(x, y)) {
                ctx.count("non-crossing", 1);
                ctx.expect(!(rho_above(x, y.row) && kappa(y) < x.col), "pivot-paths cross", || {
                    json!({ "placement": placement_value(&p), "x": [x.col, x.row], "y": [y.col, y.row] })
                });
                if rho_above(x, y.row) {
                    ctx.count("lemma-12", 1);
                    ctx.expect(path_from_21(x, y), "no pivot-path J into Y with XJ1 a 21", || {
                        json!({ "placement": placement_value(&p), "x": [x.col, x.row], "y": [y.col, y.row] })
                    });
                }
                let linked = chains[&y].contains(&x);
                for &z in m.iter().filter(|&&z| z.col > y.col && x.row < z.row && z.row < y.row) {
                    if linked {
                        ctx.count("lemma-132", 1);
                        ctx.expect(path_from_21(x, z), "no pivot-path J into Z with XJ1 a 21", || {
                            json!({ "placement": placement_value(&p), "x": [x.col, x.row], "y": [y.col, y.row], "z": [z.col, z.row] })
                        });
                    }
                }
            }
        }
        for s in decreasing_sequences(m) {
            let (k, s1) = (s.len(), s[0]);
            for &x in m {
                let case = || json!({ "placement": placement_value(&p), "x": [x.col, x.row], "s": s.iter().map(|q| [q.col, q.row]).collect::<Vec<_>>() });
                if is_12(x, s1) {
                    if rho_above(x, s1.row) {
                        ctx.count("lemma-extend-rho", 1);
                        ctx.expect(dec[&x] > k, "no decreasing D of length k+1 from X (rho)", case);
                    }
                    if chains[&s1].contains(&x) {
                        ctx.count("lemma-extend-path", 1);
                        ctx.expect(dec[&x] >= k, "no decreasing D of length k from X (path)", case);
                    }
                }
                if is_12(s1, x) && kappa(x) < s1.col {
                    ctx.count("lemma-extend-kappa", 1);
                    ctx.expect(dec[&x] > k, "no decreasing D of length k+1 from X (kappa)", case);
                }
            }
        }
    }
}

/// Standard Knuth moves on position `p..p+3` and the generalized move that
/// realizes each: the kind, the spacer column and the band.
fn table_moves(w: &[usize], p: usize) -> Vec<(GkKind, usize, usize, usize, Vec<usize>)> {
    let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
    let swap = |i: usize| {
        let mut v = w.to_vec();
        v.swap(i, i + 1);
        v
    };
    // 1-based columns after inserting the spacer before (gap p+1) or after
    // (gap p+4) the triple.
    let mut out = Vec::new();
    if c < a && a < b {
        out.push((GkKind::DsLeft, p + 1, p + 1, p + 4, swap(p + 1)));
    }
    if b < a && a < c {
        out.push((GkKind::DlRight, p + 4, p + 1, p + 4, swap(p + 1)));
    }
    if a < c && c < b {
        out.push((GkKind::IsRight, p + 4, p + 1, p + 4, swap(p)));
    }
    if b < c && c < a {
        out.push((GkKind::IlLeft, p + 1, p + 1, p + 4, swap(p)));
    }
    out
}

fn gke(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_on_rectangles(params) {
        let n = p.board().num_cols();
        for a in 1..n {
            for b in a + 1..=n {
                for kind in GkKind::ALL {
                    if !ctx.take() {
                        continue;
                    }
                    match gk_transform(&p, kind, a, b) {
                        Ok(q) => {
                            ctx.count("admissible", 1);
                            let detail = || json!({ "placement": placement_value(&p), "kind": format!("{kind:?}"), "a": a, "b": b });
                            ctx.expect(insertion(&q) == insertion(&p), "generalized Knuth move changed ins", detail);
                            ctx.expect(gk_transform_direct(&p, kind, a, b).as_ref() == Ok(&q), "reverse and direct routes differ", detail);
                        }
                        Err(Error::AnchorOccupied { .. } | Error::EmptyBand { .. }) => {}
                        Err(e) => ctx.fail("gk_transform", error_case(&p, &e)),
                    }
                }
            }
        }
    }
    for n in 3..=params.max_n {
        for sigma in permutations(n) {
            if !ctx.take() {
                continue;
            }
            let w = sigma.as_slice();
            let mut via_table = BTreeSet::new();
            for pos in 0..n - 2 {
                for (kind, gap, a, b, expected) in table_moves(w, pos) {
                    ctx.count("table-moves", 1);
                    let moved = with_empty_column(&sigma, gap)
                        .and_then(|spaced| gk_transform(&spaced, kind, a, b))
                        .map(|q| Permutation::standardize(&q.rows()).as_slice().to_vec());
                    ctx.expect(moved.as_ref() == Ok(&expected), "table move mismatch", || {
                        json!({ "perm": w, "position": pos, "kind": format!("{kind:?}") })
                    });
                    via_table.insert(expected);
                }
            }
            let direct: BTreeSet<Vec<usize>> = knuth_neighbors(&sigma).iter().map(|q| q.as_slice().to_vec()).collect();
            ctx.expect(direct == via_table, "table does not cover the Knuth neighbours", || json!({ "perm": w }));
        }
    }
}

fn band_dec(p: &RookPlacement, a: usize, b: usize) -> usize {
    longest_monotone(p, Some(Region::ColumnBand { a, b }), Direction::Decreasing).unwrap_or(usize::MAX)
}

fn shift_lemmas(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_on_rectangles(params) {
        let n = p.board().num_cols();
        for a in 1..n {
            for b in a + 1..=n {
                let (a_free, b_free) = (p.row_of_col(a).is_none(), p.row_of_col(b).is_none());
                if !(a_free || b_free) || !ctx.take() {
                    continue;
                }
                let extremal = |e| extremal_sequence(&p, a, b, Direction::Decreasing, e).ok().flatten();
                let (Some(ds), Some(dl)) = (extremal(Extremum::Smallest), extremal(Extremum::Largest)) else {
                    continue;
                };
                let (ds, dl) = (ds.squares, dl.squares);
                let k = ds.len();
                let band: Vec<Square> = p.markers().iter().copied().filter(|s| (a..=b).contains(&s.col)).collect();
                let longest: Vec<Vec<Square>> = decreasing_sequences(&band).into_iter().filter(|s| s.len() == k).collect();
                let detail = || json!({ "placement": placement_value(&p), "a": a, "b": b });
                let shifted = |seq: &[Square], dir| {
                    let anchor = if dir == ShiftDirection::Left { a } else { b };
                    shift(&p, &ShiftSpec { sequence: seq.to_vec(), anchor, direction: dir })
                };
                // Squares of a shifted sequence: same rows, columns moved one place along.
                let moved = |seq: &[Square], q: &RookPlacement| -> Vec<Square> {
                    seq.iter().map(|s| Square::new(q.col_of_row(s.row).unwrap_or(0), s.row)).collect()
                };
                if a_free {
                    let Ok(q) = shifted(&ds, ShiftDirection::Left) else {
                        ctx.fail("left shift failed", detail());
                        continue;
                    };
                    ctx.count("left-shifts", 1);
                    ctx.expect(insertion(&q) == insertion(&p), "P(a<-d_s) changed ins", detail);
                    ctx.expect(band_dec(&q, a, b) == k, "a<-d_s is not longest after the shift", detail);
                    for l in longest.iter().filter(|l| **l != ds) {
                        ctx.count("non-extremal-left", 1);
                        let grew = shifted(l, ShiftDirection::Left).map(|r| band_dec(&r, a, b) > k);
                        ctx.expect(grew == Ok(true), "P(a<-L) has no decreasing sequence of length k+1", detail);
                    }
                    if ds[k - 1].col == b {
                        ctx.count("reversible-left", 1);
                        let back = extremal_sequence(&q, a, b, Direction::Decreasing, Extremum::Largest);
                        ctx.expect(back.ok().flatten().map(|d| d.squares) == Some(moved(&ds, &q)), "D_L(P(a<-d_s)) != a<-d_s", detail);
                    }
                }
                if b_free {
                    let Ok(q) = shifted(&dl, ShiftDirection::Right) else {
                        ctx.fail("right shift failed", detail());
                        continue;
                    };
                    ctx.count("right-shifts", 1);
                    ctx.expect(insertion(&q) == insertion(&p), "P(D_L->b) changed ins", detail);
                    ctx.expect(band_dec(&q, a, b) == k, "D_L->b is not longest after the shift", detail);
                    for l in longest.iter().filter(|l| **l != dl) {
                        ctx.count("non-extremal-right", 1);
                        let grew = shifted(l, ShiftDirection::Right).map(|r| band_dec(&r, a, b) > k);
                        ctx.expect(grew == Ok(true), "P(L->b) has no decreasing sequence of length k+1", detail);
                    }
                    if dl[0].col == a {
                        ctx.count("reversible-right", 1);
                        let back = extremal_sequence(&q, a, b, Direction::Decreasing, Extremum::Smallest);
                        ctx.expect(back.ok().flatten().map(|d| d.squares) == Some(moved(&dl, &q)), "d_s(P(D_L->b)) != D_L->b", detail);
                    }
                }
            }
        }
    }
}

fn catalan(n: usize) -> u64 {
    (0..n).fold(1u64, |c, i| c * 2 * (2 * i as u64 + 1) / (i as u64 + 2))
}

fn wilf_counts(ctx: &mut Ctx, params: &SuiteParams) {
    let patterns: Vec<Permutation> = [[1, 2, 3], [2, 1, 3], [3, 2, 1]]
        .iter()
        .map(|v| Permutation::new(v.to_vec()).expect("literal permutation"))
        .collect();
    for n in 0..=params.max_n {
        let mut counts = vec![0u64; patterns.len()];
        for sigma in permutations(n) {
            if !ctx.take() {
                continue;
            }
            let p = RookPlacement::from_permutation(&sigma);
            for (t, tau) in patterns.iter().enumerate() {
                counts[t] += u64::from(!contains_brute(&p, tau));
            }
        }
        for (t, tau) in patterns.iter().enumerate() {
            ctx.count(&format!("n={n} avoid {}", tau), counts[t]);
        }
    }
    // Full placements on Ferrers boards: 123 ~ 321 and 123 ~ 213.
    for board in enumerate_boards(params.max_cols, params.max_rows) {
        if !ctx.take() {
            continue;
        }
        let counts: Vec<usize> = patterns
            .iter()
            .map(|tau| enumerate_placements(&board, true).filter(|p| !contains_brute(p, tau)).count())
            .collect();
        ctx.expect(counts.iter().all(|&c| c == counts[0]), "board avoider counts differ", || {
            json!({ "board": board.row_widths(), "counts": counts })
        });
    }
}

fn phi_bijection(ctx: &mut Ctx, params: &SuiteParams) {
    for &k in &params.ks {
        if k < 2 {
            continue;
        }
        let domain: Vec<usize> = (1..k).rev().chain([k]).collect();
        let domain = Permutation::new(domain).expect("k-1...1k is a permutation");
        let target = Permutation::decreasing(k);
        for n in 0..=params.max_n {
            if !ctx.take() {
                continue;
            }
            let mut images: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
            let mut expected: BTreeSet<Vec<usize>> = BTreeSet::new();
            for sigma in permutations(n) {
                let p = RookPlacement::from_permutation(&sigma);
                if !contains_brute(&p, &target) {
                    expected.insert(sigma.as_slice().to_vec());
                }
                if contains_brute(&p, &domain) {
                    continue;
                }
                ctx.count("domain", 1);
                let img = match phi_star_placement(&p, k) {
                    Ok(q) => q.rows(),
                    Err(e) => {
                        ctx.fail("phi_star", error_case(&p, &e));
                        continue;
                    }
                };
                if let Some(prev) = images.insert(img.clone(), sigma.as_slice().to_vec()) {
                    ctx.fail("phi* not injective", json!({ "k": k, "perm": sigma.as_slice(), "other": prev, "image": img }));
                }
            }
            let image_set: BTreeSet<Vec<usize>> = images.into_keys().collect();
            ctx.expect(image_set == expected, "phi* image != S_n(k...1)", || {
                let missing: Vec<_> = expected.difference(&image_set).take(5).collect();
                let extra: Vec<_> = image_set.difference(&expected).take(5).collect();
                json!({ "k": k, "n": n, "missing": missing, "extra": extra })
            });
        }
    }
}

fn gda_roundtrip(ctx: &mut Ctx, params: &SuiteParams) {
    for p in placements_in_box(params) {
        if !ctx.take() {
            continue;
        }
        let g = run_gda(&p);
        let back = invert_gda(&g.border_sequence(), p.board());
        ctx.expect(back.as_ref().is_ok_and(|(q, h)| q == &p && h == &g), "invert_gda(seq(P)) != P", || {
            placement_case(&p)
        });
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in SuiteName::ALL {
            assert_eq!(s.as_str().parse::<SuiteName>(), Ok(s));
        }
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<u64> = (0..8).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn sharded_run_matches_single() {
        let mut params = SuiteParams::defaults(SuiteName::GdaRoundtrip);
        params.max_cols = 3;
        params.max_rows = 3;
        let single = run_suite(SuiteName::GdaRoundtrip, &params);
        params.shards = 3;
        params.threads = 2;
        let sharded = run_suite(SuiteName::GdaRoundtrip, &params);
        assert_eq!(single.cases, sharded.cases);
        assert!(single.passed() && sharded.passed());
        params.shard = Some(1);
        let one = run_suite(SuiteName::GdaRoundtrip, &params);
        assert!(one.cases < single.cases);
    }

    #[test]
    fn table_moves_cover_examples() {
        let moves = table_moves(&[2, 3, 1], 0);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].0, GkKind::DsLeft);
        assert_eq!(moves[0].4, vec![2, 1, 3]);
    }
}
