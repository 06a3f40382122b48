//! Command-line front end. [`run`] does all the work and returns the exit
//! status: 0 on success, 1 when `verify` finds violations, 2 on usage or
//! validation errors.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use ferrers_core::bwx::{phi_star, phi_step};
use ferrers_core::growth::{run_gda, run_gda_k};
use ferrers_core::knuth::{gk_transform, knuth_equivalent, knuth_neighbors, GkKind};
use ferrers_core::oracle::count_avoiders;
use ferrers_core::pivots::{pivots, PivotTable, Side};
use ferrers_core::tableau::rs_pair;
use ferrers_core::{FerrersBoard, RookPlacement};
use serde_json::{json, Value};

use crate::suites::{run_suite, SuiteName, SuiteParams};
use crate::{render, wire};

#[derive(Debug, Parser)]
#[command(name = "ferrers", version, about = "Rook placements on Ferrers boards: RS, growth diagrams, phi*, pivots, Knuth moves")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Insertion and recording tableaux.
    Rs {
        /// Placement JSON; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Growth diagram (GDA, or GDA_k with --k).
    Gda {
        input: Option<PathBuf>,
        #[arg(long)]
        k: Option<usize>,
        /// Print only the border sequence.
        #[arg(long)]
        border: bool,
    },
    /// Apply phi once, N times, or until no k...1 pattern remains.
    Phi {
        input: Option<PathBuf>,
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "star")]
        steps: Option<usize>,
        #[arg(long)]
        star: bool,
        /// Also print every step.
        #[arg(long)]
        trace: bool,
    },
    /// Left or right pivots.
    Pivots {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
        /// Also print (rho, kappa) for every marker.
        #[arg(long)]
        coords: bool,
    },
    /// Generalized Knuth transformations on a placement, or ordinary Knuth
    /// moves on a permutation.
    Knuth {
        input: Option<PathBuf>,
        #[arg(long, value_enum, requires_all = ["a", "b"])]
        kind: Option<KindArg>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// List the permutations one Knuth move away, e.g. `--neighbors 213`.
        #[arg(long, value_name = "PERM", conflicts_with_all = ["kind", "equivalent"])]
        neighbors: Option<String>,
        /// Decide Knuth equivalence of two permutations.
        #[arg(long, num_args = 2, value_names = ["PERM", "PERM"], conflicts_with = "kind")]
        equivalent: Option<Vec<String>>,
    },
    /// Count (full) placements on a board avoiding a pattern.
    Count {
        /// Row widths bottom to top, e.g. `4,4,3`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        board: Vec<usize>,
        #[arg(long)]
        pattern: String,
        /// Count all placements, not only full ones.
        #[arg(long)]
        all: bool,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_cols: Option<usize>,
        #[arg(long)]
        max_rows: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        /// Values of k, repeated or comma separated.
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
        #[arg(long)]
        full_only: bool,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long)]
        shard: Option<usize>,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Report every counterexample instead of the first 10.
        #[arg(long)]
        all_violations: bool,
    },
    /// Draw a placement, its growth diagram or its tableaux.
    Render {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = RenderWhat::Placement)]
        what: RenderWhat,
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "ds-left")]
    DsLeft,
    #[value(name = "DL-right", alias = "dl-right")]
    DlRight,
    #[value(name = "is-right")]
    IsRight,
    #[value(name = "IL-left", alias = "il-left")]
    IlLeft,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderWhat {
    Placement,
    Gda,
    Rs,
}

/// A failure that maps to exit status 2.
#[derive(Debug)]
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<(String, i32), Usage>;

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli, stdin) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read_placement(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<RookPlacement, Usage> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(wire::parse_placement(&text)?)
}

fn check_k(k: usize) -> Result<(), Usage> {
    if k < 2 {
        Err(Usage(format!("--k must be at least 2, got {k}")))
    } else {
        Ok(())
    }
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize"))
}

fn rows_line(p: &RookPlacement) -> String {
    let rows: Vec<String> = p.rows().iter().map(ToString::to_string).collect();
    format!("rows: {}\n", rows.join(" "))
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read) -> Outcome {
    let json = cli.json;
    let text = match &cli.command {
        Command::Rs { input } => {
            let p = read_placement(input, stdin)?;
            let (ins, rec) = rs_pair(&p);
            if json {
                pretty(&json!({
                    "insertion": wire::tableau_value(&ins),
                    "recording": wire::tableau_value(&rec),
                    "shape": wire::partition_value(&ins.shape()),
                }))
            } else {
                format!("insertion:\n{}recording:\n{}", render::tableau(&ins), render::tableau(&rec))
            }
        }
        Command::Gda { input, k, border } => {
            if let Some(k) = k {
                check_k(*k)?;
            }
            let p = read_placement(input, stdin)?;
            let g = match k {
                Some(k) => run_gda_k(&p, *k)?,
                None => run_gda(&p),
            };
            let seq = g.border_sequence();
            match (json, border) {
                (true, true) => pretty(&wire::border_value(&seq)),
                (true, false) => {
                    let mut v = wire::diagram_value(&g);
                    v["border"] = wire::border_value(&seq);
                    pretty(&v)
                }
                (false, true) => format!("{}\n", render::border(&seq)),
                (false, false) => render::diagram(&g),
            }
        }
        Command::Phi { input, k, steps, star, trace } => {
            check_k(*k)?;
            let p = read_placement(input, stdin)?;
            let mut history: Vec<(Vec<[usize; 2]>, [usize; 2], RookPlacement)> = Vec::new();
            let result = if *star {
                let (q, tr) = phi_star(&p, *k)?;
                for s in tr.steps {
                    let occ = s.occurrence.squares.iter().map(|x| [x.col, x.row]).collect();
                    history.push((occ, [s.bounding.col, s.bounding.row], s.after));
                }
                q
            } else {
                let mut cur = p.clone();
                for _ in 0..steps.unwrap_or(1) {
                    let Some(occ) = ferrers_core::bwx::smallest_k1_occurrence(&cur, *k)? else { break };
                    let next = phi_step(&cur, *k)?;
                    let corner = [occ.squares[k - 1].col, occ.squares[0].row];
                    history.push((occ.squares.iter().map(|x| [x.col, x.row]).collect(), corner, next.clone()));
                    cur = next;
                }
                cur
            };
            if json {
                let mut v = json!({ "placement": wire::placement_value(&result), "rows": result.rows() });
                if *trace {
                    v["steps"] = history
                        .iter()
                        .map(|(occ, corner, after)| {
                            json!({ "occurrence": occ, "bounding": corner, "placement": wire::placement_value(after) })
                        })
                        .collect();
                }
                pretty(&v)
            } else {
                let mut s = String::new();
                if *trace {
                    for (t, (occ, corner, after)) in history.iter().enumerate() {
                        let squares: Vec<String> = occ.iter().map(|[c, r]| format!("({c},{r})")).collect();
                        s += &format!("step {}: {} in R({},{}) -> {}", t + 1, squares.join(" "), corner[0], corner[1], rows_line(after));
                    }
                }
                s + &render::placement(&result) + &rows_line(&result)
            }
        }
        Command::Pivots { input, side, coords } => {
            let p = read_placement(input, stdin)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            let piv = pivots(&p, side)?;
            let table = if *coords { Some(PivotTable::new(&p)?) } else { None };
            let coord_rows: Vec<(ferrers_core::Square, Option<usize>, usize)> = match &table {
                Some(t) => p.markers().iter().map(|&x| Ok((x, t.rho(x)?, t.kappa(x)?))).collect::<Result<_, ferrers_core::Error>>()?,
                None => Vec::new(),
            };
            if json {
                let mut v = json!({ "pivots": wire::placement_value(&piv) });
                if *coords {
                    v["coords"] = coord_rows
                        .iter()
                        .map(|(x, rho, kappa)| json!({ "marker": [x.col, x.row], "rho": rho, "kappa": kappa }))
                        .collect();
                }
                pretty(&v)
            } else {
                let list: Vec<String> = piv.markers().iter().map(ToString::to_string).collect();
                let mut s = render::placement_with(&p, Some(&piv));
                s += &format!("pivots: {}\n", list.join(" "));
                for (x, rho, kappa) in &coord_rows {
                    let rho = rho.map_or("inf".to_string(), |r| r.to_string());
                    s += &format!("{x} rho={rho} kappa={kappa}\n");
                }
                s
            }
        }
        Command::Knuth { input, kind, a, b, neighbors, equivalent } => {
            if let Some(perm) = neighbors {
                let sigma = wire::parse_permutation(perm)?;
                let list = knuth_neighbors(&sigma);
                if json {
                    pretty(&Value::Array(list.iter().map(|q| json!(q.as_slice())).collect()))
                } else {
                    list.iter().map(|q| format!("{q}\n")).collect()
                }
            } else if let Some(pair) = equivalent {
                let (x, y) = (wire::parse_permutation(&pair[0])?, wire::parse_permutation(&pair[1])?);
                let eq = knuth_equivalent(&x, &y)?;
                if json {
                    pretty(&json!(eq))
                } else {
                    format!("{eq}\n")
                }
            } else {
                let (Some(kind), Some(a), Some(b)) = (kind, a, b) else {
                    return Err(Usage("knuth needs --kind with --a and --b, --neighbors, or --equivalent".into()));
                };
                let p = read_placement(input, stdin)?;
                let kind = match kind {
                    KindArg::DsLeft => GkKind::DsLeft,
                    KindArg::DlRight => GkKind::DlRight,
                    KindArg::IsRight => GkKind::IsRight,
                    KindArg::IlLeft => GkKind::IlLeft,
                };
                let q = gk_transform(&p, kind, *a, *b)?;
                if json {
                    pretty(&wire::placement_value(&q))
                } else {
                    render::placement(&q) + &rows_line(&q)
                }
            }
        }
        Command::Count { board, pattern, all } => {
            let f = FerrersBoard::new(board.clone())?;
            let tau = wire::parse_permutation(pattern)?;
            if tau.is_empty() {
                return Err(Usage("pattern must be non-empty".into()));
            }
            let n = count_avoiders(&f, &tau, !all);
            if json {
                pretty(&json!({ "board": board, "pattern": tau.as_slice(), "full_only": !all, "count": n }))
            } else {
                format!("{n}\n")
            }
        }
        Command::Verify { suite, max_cols, max_rows, max_n, k, full_only, shards, shard, threads, all_violations } => {
            let name: SuiteName = suite.parse()?;
            let mut params = SuiteParams::defaults(name);
            if *shards == 0 || *threads == 0 {
                return Err(Usage("--shards and --threads must be positive".into()));
            }
            if shard.is_some_and(|s| s >= *shards) {
                return Err(Usage(format!("--shard must be below --shards ({shards})")));
            }
            if let Some(&bad) = k.iter().find(|&&k| k < 2) {
                check_k(bad)?;
            }
            params.max_cols = max_cols.unwrap_or(params.max_cols);
            params.max_rows = max_rows.unwrap_or(params.max_rows);
            params.max_n = max_n.unwrap_or(params.max_n);
            if !k.is_empty() {
                params.ks = k.clone();
            }
            params.full_only = *full_only;
            params.shards = *shards;
            params.shard = *shard;
            params.threads = *threads;
            params.cap = if *all_violations { None } else { params.cap };
            let report = run_suite(name, &params);
            let code = if report.passed() { 0 } else { 1 };
            let text = if json {
                pretty(&serde_json::to_value(&report).expect("report serializes"))
            } else {
                let mut s = format!(
                    "{}: {} cases, {} violations, {:.2}s\n",
                    report.suite, report.cases, report.violations_total, report.seconds
                );
                for (key, n) in &report.tallies {
                    s += &format!("  {key}: {n}\n");
                }
                for v in &report.violations {
                    s += &format!("violation: {v}\n");
                }
                s
            };
            return Ok((text, code));
        }
        Command::Render { input, what, k } => {
            if let Some(k) = k {
                check_k(*k)?;
            }
            let p = read_placement(input, stdin)?;
            match what {
                RenderWhat::Placement if json => pretty(&wire::placement_value(&p)),
                RenderWhat::Placement => render::placement(&p),
                RenderWhat::Gda => {
                    let g = match k {
                        Some(k) => run_gda_k(&p, *k)?,
                        None => run_gda(&p),
                    };
                    if json {
                        pretty(&wire::diagram_value(&g))
                    } else {
                        render::diagram(&g)
                    }
                }
                RenderWhat::Rs => {
                    let (ins, rec) = rs_pair(&p);
                    if json {
                        pretty(&json!([wire::tableau_value(&ins), wire::tableau_value(&rec)]))
                    } else {
                        format!("{}\n{}", render::tableau(&ins), render::tableau(&rec))
                    }
                }
            }
        }
    };
    Ok((text, 0))
}
