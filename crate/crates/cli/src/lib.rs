//! Command-line front end for `balanceable`. [`run`] does all the work and
//! returns the text to print plus an exit status, so it can be tested without
//! spawning a process.

pub mod report;

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use balanceable::conditions::{evaluate_all, Outcome};
use balanceable::ramsey::{bal_number, find_balanced_copy, BalOutcome, Coloring};
use balanceable::reduction::{reduce_maxcut_to_exactcut, CutInstance};
use balanceable::witness::{rect_grid_witness, tri_grid_witness};
use balanceable::{
    build_family, decide_balanceable, decide_balanceable_sharded, family_witness, parse_edge_list, write_edge_list,
    Budget, ConstructionResult, Error, FamilyParams, Graph, Verdict, VertexSet,
};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use report::{BalReport, BalResult, BudgetStatus, OracleStatus, ReduceReport, Report, TableReport, TableRow};

#[derive(Debug, Parser)]
#[command(name = "balanceable", version, about = "Decide and construct balanceable graphs")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap exhaustive searches at 2^BUDGET subsets.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_LOG2, value_parser = clap::value_parser!(u32).range(1..=63))]
    pub budget: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact verdict with a witness or an obstruction.
    Classify {
        /// Family spec (`chorded:38,8`, `grid:4x8`, ...) or edge-list file.
        graph: String,
    },
    /// Evaluate every sufficient condition.
    Conditions { graph: String },
    /// Closed-form construction for a circulant or grid family, re-verified.
    Witness { family: String },
    /// Construction verdicts for every chorded cycle with k in range.
    FamilyTable(KRange),
    /// Construction verdicts for rectangular or triangular grids.
    GridTable(GridRange),
    /// Compare constructions against the exhaustive oracle on every C_{k,l}.
    Verify(KRange),
    /// Exact bal(n, G), or a balanced-copy check for one coloring.
    Bal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        graph: String,
        /// Red edges of K_n as a hex bitmask over pairs in lexicographic order.
        #[arg(long)]
        coloring: Option<String>,
    },
    /// Turn a max-cut instance (edge list, k) into an exact-cut instance.
    Reduce {
        file: String,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
pub struct KRange {
    #[arg(long, default_value_t = 4)]
    pub kmin: usize,
    #[arg(long)]
    pub kmax: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct GridRange {
    /// All same-parity rows x cols grids with 2 <= rows <= cols <= RECT.
    #[arg(long)]
    pub rect: Option<usize>,
    /// All triangular grids T_h with h <= TRI that fall under a case.
    #[arg(long)]
    pub tri: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Param(String),
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Param(_) => 1,
            CliError::Budget(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Param(m) | CliError::Budget(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Param(other.to_string()),
        }
    }
}

/// Exit status 0 is success, 1 a parameter error, 2 an exhausted budget and
/// 3 a construction that disagrees with the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: u8,
}

pub const MISMATCH_STATUS: u8 = 3;

/// Reads `arg` as an edge-list file when such a file exists, otherwise as a
/// family spec.
pub fn load_graph(arg: &str) -> Result<(String, Graph), CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Param(format!("{arg}: {e}")))?;
        let g = parse_edge_list(&text).map_err(|e| CliError::Param(format!("{arg}: {e}")))?;
        return Ok((arg.to_string(), g));
    }
    let params: FamilyParams = arg.parse()?;
    let g = build_family(&params)?;
    Ok((params.to_string(), g))
}

fn micros(start: Instant) -> u64 {
    start.elapsed().as_micros().try_into().unwrap_or(u64::MAX)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn set_str(s: &VertexSet) -> String {
    format!("{:?}", s.to_vec())
}

/// Parallel search pays off only when the whole space fits the budget;
/// otherwise the sequential scan may still stop early on a hit.
fn decide(g: &Graph, budget: Budget) -> Verdict {
    let fits = g.n() < 64 && (1u64 << g.n()) <= budget.0;
    if fits && g.n() >= 16 {
        decide_balanceable_sharded(g, budget, rayon::current_num_threads())
    } else {
        decide_balanceable(g, budget)
    }
}

fn write_verdict(out: &mut String, v: &Verdict) {
    writeln!(out, "{v}").unwrap();
    if let Verdict::Balanceable(w) = v {
        writeln!(out, "X = {}  cut edges {}", set_str(&w.cut_side), w.cut_edges).unwrap();
        writeln!(
            out,
            "W = {}  induced edges {}",
            set_str(&w.induced_set),
            w.induced_edges
        )
        .unwrap();
    }
    if let Verdict::NotBalanceable(o) = v {
        if !o.detail.is_empty() {
            writeln!(out, "{}", o.detail).unwrap();
        }
    }
}

fn write_construction(out: &mut String, g: &Graph, r: &ConstructionResult) {
    writeln!(out, "{:?} via {}", r.verdict, r.lemma).unwrap();
    if let Some(w) = &r.witness {
        writeln!(out, "X = {}  cut edges {}", set_str(&w.cut_side), w.cut_edges).unwrap();
        writeln!(
            out,
            "W = {}  induced edges {}",
            set_str(&w.induced_set),
            w.induced_edges
        )
        .unwrap();
    }
    if let Some(i) = &r.independent_set {
        let sum = g.degree_sum(i).expect("same universe");
        writeln!(out, "I = {}  Σd = {sum}", set_str(i)).unwrap();
    }
    for note in &r.notes {
        writeln!(out, "note: {note}").unwrap();
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let budget = Budget::from_log2(cli.budget);
    let start = Instant::now();
    let status = |exceeded| BudgetStatus {
        log2: cli.budget,
        exceeded,
    };
    let done = |text: String| Ok(Output { text, status: 0 });

    match &cli.command {
        Command::Classify { graph } => {
            let (input, g) = load_graph(graph)?;
            let verdict = decide(&g, budget);
            let exceeded = verdict.is_undecided();
            let report = Report {
                command: "classify".into(),
                input,
                n: g.n(),
                m: g.m(),
                verdict: Some(verdict),
                construction: None,
                conditions: vec![],
                elapsed_us: micros(start),
                budget: status(exceeded),
            };
            let text = if cli.json {
                to_json(&report)
            } else {
                let mut out = String::new();
                write_verdict(&mut out, report.verdict.as_ref().unwrap());
                writeln!(
                    out,
                    "{}: n = {}, m = {}, {} us",
                    report.input,
                    g.n(),
                    g.m(),
                    report.elapsed_us
                )
                .unwrap();
                out
            };
            Ok(Output {
                text,
                status: if exceeded { 2 } else { 0 },
            })
        }

        Command::Conditions { graph } => {
            let (input, g) = load_graph(graph)?;
            let conditions = evaluate_all(&g, budget);
            let report = Report {
                command: "conditions".into(),
                input,
                n: g.n(),
                m: g.m(),
                verdict: None,
                construction: None,
                conditions,
                elapsed_us: micros(start),
                budget: status(false),
            };
            if cli.json {
                return done(to_json(&report));
            }
            let mut out = format!("{}: n = {}, m = {}\n", report.input, g.n(), g.m());
            for c in &report.conditions {
                let outcome = match c.outcome {
                    Outcome::ImpliesBalanceable => "implies-balanceable",
                    Outcome::ImpliesNotBalanceable => "implies-not-balanceable",
                    Outcome::Inapplicable => "inapplicable",
                };
                let id = format!("{:?}", c.id);
                write!(out, "{id:<20} {outcome:<24}").unwrap();
                if let Some(w) = &c.witness {
                    write!(out, " I = {}", set_str(w)).unwrap();
                }
                writeln!(out, " {}", c.detail).unwrap();
            }
            done(out)
        }

        Command::Witness { family } => {
            let params: FamilyParams = family.parse()?;
            let g = build_family(&params)?;
            let construction = family_witness(&params)?;
            if let Some(w) = &construction.witness {
                if !w.verify(&g) {
                    return Err(CliError::Param(format!("witness for {params} failed re-verification")));
                }
            }
            let report = Report {
                command: "witness".into(),
                input: params.to_string(),
                n: g.n(),
                m: g.m(),
                verdict: None,
                construction: Some(construction),
                conditions: vec![],
                elapsed_us: micros(start),
                budget: status(false),
            };
            if cli.json {
                return done(to_json(&report));
            }
            let mut out = String::new();
            write_construction(&mut out, &g, report.construction.as_ref().unwrap());
            writeln!(out, "{}: n = {}, m = {}", report.input, g.n(), g.m()).unwrap();
            done(out)
        }

        Command::FamilyTable(range) => {
            let rows = chorded_rows(range, None)?;
            let table = TableReport {
                command: "family-table".into(),
                rows,
                elapsed_us: micros(start),
                budget: status(false),
            };
            done(render_table(&table, cli.json))
        }

        Command::GridTable(range) => {
            let rows = grid_rows(range)?;
            let table = TableReport {
                command: "grid-table".into(),
                rows,
                elapsed_us: micros(start),
                budget: status(false),
            };
            done(render_table(&table, cli.json))
        }

        Command::Verify(range) => {
            let rows = chorded_rows(range, Some(budget))?;
            let mut table = TableReport {
                command: "verify".into(),
                rows,
                elapsed_us: 0,
                budget: status(false),
            };
            table.budget.exceeded = table.undecided() > 0;
            table.elapsed_us = micros(start);
            let mut text = render_table(&table, cli.json);
            if !cli.json {
                writeln!(
                    text,
                    "{} instances, {} disagreements, {} undecided",
                    table.rows.len(),
                    table.mismatches(),
                    table.undecided()
                )
                .unwrap();
            }
            let status = if table.mismatches() > 0 {
                MISMATCH_STATUS
            } else if table.budget.exceeded {
                2
            } else {
                0
            };
            Ok(Output { text, status })
        }

        Command::Bal { n, graph, coloring } => {
            let (input, g) = load_graph(graph)?;
            let result = match coloring {
                Some(hex) => {
                    let c = Coloring::from_hex(*n, hex)?;
                    let copy = find_balanced_copy(&c, &g)?;
                    BalResult::Coloring { coloring: c, copy }
                }
                None => BalResult::Number {
                    outcome: bal_number(*n, &g)?,
                },
            };
            let report = BalReport {
                command: "bal".into(),
                graph: input,
                n: *n,
                result,
                elapsed_us: micros(start),
            };
            if cli.json {
                return done(to_json(&report));
            }
            let text = match &report.result {
                BalResult::Number {
                    outcome: BalOutcome::Threshold { value, extremal },
                } => format!(
                    "bal({}, {}) = {value}\nextremal coloring {} has no balanced copy\n",
                    report.n,
                    report.graph,
                    extremal.to_hex()
                ),
                BalResult::Number {
                    outcome: BalOutcome::AlwaysPresent,
                } => format!(
                    "bal({}, {}): every coloring contains a balanced copy\n",
                    report.n, report.graph
                ),
                BalResult::Coloring {
                    coloring,
                    copy: Some(c),
                } => format!(
                    "coloring {} of K_{} contains a balanced copy: embedding {:?}, {} red edges\n",
                    coloring.to_hex(),
                    report.n,
                    c.embedding,
                    c.red_edges
                ),
                BalResult::Coloring { coloring, copy: None } => {
                    format!(
                        "coloring {} of K_{} has no balanced copy\n",
                        coloring.to_hex(),
                        report.n
                    )
                }
            };
            done(text)
        }

        Command::Reduce { file, k } => {
            let text = std::fs::read_to_string(file).map_err(|e| CliError::Param(format!("{file}: {e}")))?;
            let g = parse_edge_list(&text).map_err(|e| CliError::Param(format!("{file}: {e}")))?;
            let reduced = reduce_maxcut_to_exactcut(&CutInstance::new(g, *k)?);
            let report = ReduceReport {
                command: "reduce".into(),
                input: file.clone(),
                k: *k,
                reduced,
                elapsed_us: micros(start),
            };
            if cli.json {
                return done(to_json(&report));
            }
            done(format!(
                "# k={}\n{}",
                report.reduced.k,
                write_edge_list(&report.reduced.graph)
            ))
        }
    }
}

fn row_for(key: String, g: &Graph, r: &ConstructionResult) -> TableRow {
    TableRow {
        key,
        n: g.n(),
        m: g.m(),
        verdict: r.verdict,
        lemma: r.lemma,
        degree_sum: r
            .independent_set
            .as_ref()
            .map(|i| g.degree_sum(i).expect("same universe")),
        oracle: None,
        agree: None,
    }
}

/// Every `C_{k,l}` with `kmin <= k <= kmax` and `2 <= l <= k - 2`, in key
/// order. With a budget, each row is also checked against the oracle.
fn chorded_rows(range: &KRange, oracle: Option<Budget>) -> Result<Vec<TableRow>, CliError> {
    if range.kmin < 4 || range.kmin > range.kmax {
        return Err(CliError::Param(format!(
            "need 4 <= kmin <= kmax, got kmin = {}, kmax = {}",
            range.kmin, range.kmax
        )));
    }
    let pairs: Vec<(usize, usize)> = (range.kmin..=range.kmax)
        .flat_map(|k| (2..=k - 2).map(move |l| (k, l)))
        .collect();
    pairs
        .par_iter()
        .map(|&(k, l)| {
            let params = FamilyParams::Chorded { k, l };
            let g = build_family(&params)?;
            let r = family_witness(&params)?;
            let mut row = row_for(params.to_string(), &g, &r);
            if let Some(budget) = oracle {
                let status = OracleStatus::from(&decide_balanceable(&g, budget));
                row.oracle = Some(status);
                row.agree = match status {
                    OracleStatus::Undecided => None,
                    s => Some((s == OracleStatus::Balanceable) == r.is_balanceable()),
                };
            }
            Ok(row)
        })
        .collect()
}

fn grid_rows(range: &GridRange) -> Result<Vec<TableRow>, CliError> {
    if let Some(max) = range.rect {
        let pairs: Vec<(usize, usize)> = (2..=max)
            .flat_map(|r| (r..=max).filter(move |c| c % 2 == r % 2).map(move |c| (r, c)))
            .collect();
        return pairs
            .par_iter()
            .map(|&(rows, cols)| {
                let params = FamilyParams::RectGrid { rows, cols };
                let g = build_family(&params)?;
                Ok(row_for(params.to_string(), &g, &rect_grid_witness(rows, cols)?))
            })
            .collect();
    }
    let max = range.tri.unwrap_or(0);
    let hs: Vec<usize> = (1..=max).filter(|h| matches!(h % 8, 0 | 1 | 4 | 5)).collect();
    hs.par_iter()
        .map(|&h| {
            let params = FamilyParams::TriGrid { h };
            let g = build_family(&params)?;
            Ok(row_for(params.to_string(), &g, &tri_grid_witness(h)?))
        })
        .collect()
}

fn render_table(table: &TableReport, json: bool) -> String {
    if json {
        return to_json(table);
    }
    let with_oracle = table.rows.iter().any(|r| r.oracle.is_some());
    let mut out = format!(
        "{:<16} {:>6} {:>7}  {:<14} {:<14} {:>6}",
        "instance", "n", "m", "verdict", "case", "Σd"
    );
    if with_oracle {
        out.push_str("  oracle          agree");
    }
    out.push('\n');
    for r in &table.rows {
        let sum = r.degree_sum.map_or_else(|| "-".to_string(), |s| s.to_string());
        let verdict = format!("{:?}", r.verdict);
        write!(
            out,
            "{:<16} {:>6} {:>7}  {verdict:<14} {:<14} {sum:>6}",
            r.key,
            r.n,
            r.m,
            r.lemma.to_string()
        )
        .unwrap();
        if with_oracle {
            let oracle = match r.oracle {
                Some(OracleStatus::Balanceable) => "Balanceable",
                Some(OracleStatus::NotBalanceable) => "NotBalanceable",
                Some(OracleStatus::Undecided) | None => "Undecided",
            };
            let agree = match r.agree {
                Some(true) => "yes",
                Some(false) => "NO",
                None => "?",
            };
            write!(out, "  {oracle:<15} {agree}").unwrap();
        }
        out.push('\n');
    }
    out
}
