use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use distspec::enumerate::{connected_graphs_with_max, filtered_graphs, HARD_MAX_N};
use distspec::transforms::{self, GraftSite, RelocationSpec};
use distspec::verify::{self, sweep, Outcome, VerificationReport, VerifyOptions};
use distspec::{graph6, spectral_radius, EnumFilter, PerronOptions};

mod input;

use input::Format;

/// Distance spectral radius of connected graphs.
#[derive(Debug, Parser)]
#[command(name = "distspec", version)]
struct Cli {
    /// Largest order enumerated without --allow-large.
    #[arg(long, global = true, env = "DISTSPEC_MAX_N", default_value_t = distspec::enumerate::DEFAULT_MAX_N)]
    max_n: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Perron root and vector of each input graph, one JSON object per line.
    Compute(ComputeArgs),
    /// Print a named graph in graph6.
    Construct(ConstructArgs),
    /// List connected graphs up to isomorphism, one graph6 per line.
    Enumerate(EnumerateArgs),
    /// Check one instance and print its report.
    Verify(VerifyArgs),
    /// Check a whole parameter grid and print a JSON array of reports.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
struct ComputeArgs {
    /// File to read, `-` for standard input.
    #[arg(long, conflicts_with = "graph6")]
    input: Option<String>,
    /// Inline graph6 string.
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Bracket width for the Perron root.
    #[arg(long, default_value_t = distspec::spectrum::DEFAULT_BRACKET_WIDTH)]
    tol: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Gnk,
    Knk,
    Gkl,
    Complete,
    Path,
    Cycle,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Base graph (graph6) for gkl.
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with = "cut_edges")]
    cut_vertices: Option<usize>,
    #[arg(long)]
    cut_edges: Option<usize>,
    /// Permit n = 10 (about 11.7 million graphs).
    #[arg(long)]
    allow_large: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TheoremArg {
    #[value(name = "1")]
    Graft,
    #[value(name = "2")]
    Relocation,
    #[value(name = "3")]
    CutVertices,
    #[value(name = "4")]
    CutEdges,
    #[value(name = "cor1")]
    PendantMass,
    #[value(name = "bound")]
    Bound,
    #[value(name = "mono")]
    Mono,
}

#[derive(Debug, Args)]
struct Common {
    /// Bracket width for certified comparisons.
    #[arg(long, default_value_t = verify::DEFAULT_WIDTH)]
    width: f64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Include wall_time_ms in reports.
    #[arg(long)]
    timing: bool,
    /// Permit n = 10 for theorems 3 and 4.
    #[arg(long)]
    allow_large: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    /// Base graph (graph6) for 1 and cor1.
    #[arg(long)]
    base: Option<String>,
    /// Graph (graph6) for 2, bound and mono.
    #[arg(long)]
    graph: Option<String>,
    /// Second graph (graph6) for bound, on the same vertex set.
    #[arg(long)]
    other: Option<String>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    v: Option<usize>,
    /// Relocation targets for 2, comma separated.
    #[arg(long, value_delimiter = ',')]
    targets: Vec<usize>,
    /// Witness vertex for 2.
    #[arg(long)]
    witness: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Grid {
    /// k > l ≥ 1, k + l ≤ 4.
    Unbalanced,
    /// k = l, 2k ≤ 4.
    Balanced,
    All,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    theorem: TheoremArg,
    /// Order for 3 and 4; largest order otherwise.
    #[arg(long)]
    n: Option<usize>,
    /// (k, l) grid for 1 (cor1 always uses the unbalanced grid).
    #[arg(long, value_enum, default_value_t = Grid::All)]
    grid: Grid,
    #[command(flatten)]
    common: Common,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("distspec: {}", format!("{e:#}").replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Compute(a) => compute(a),
        Command::Construct(a) => construct(a),
        Command::Enumerate(a) => enumerate(a, cli.max_n),
        Command::Verify(a) => verify_one(a, cli.max_n),
        Command::Sweep(a) => sweep_grid(a, cli.max_n),
    }
}

fn need<T>(value: Option<T>, flag: &str) -> Result<T> {
    value.with_context(|| format!("missing required flag --{flag}"))
}

fn compute(a: ComputeArgs) -> Result<u8> {
    let graphs = match (&a.graph6, &a.input) {
        (Some(s), _) => vec![input::parse_graph6(s)?],
        (None, Some(path)) => input::parse_graphs(&input::read_source(path)?, a.format)?,
        (None, None) => bail!("give --input PATH, --input - or --graph6 STRING"),
    };
    let opts = PerronOptions::with_width(a.tol);
    for g in &graphs {
        println!("{}", spectral_radius(g, opts)?.to_json());
    }
    Ok(0)
}

fn construct(a: ConstructArgs) -> Result<u8> {
    let g = match a.family {
        Family::Gnk => transforms::g_nk(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::Knk => transforms::k_nk(need(a.n, "n")?, need(a.k, "k")?)?,
        Family::Complete => transforms::complete(need(a.n, "n")?)?,
        Family::Path => transforms::path(need(a.n, "n")?)?,
        Family::Cycle => transforms::cycle(need(a.n, "n")?)?,
        Family::Gkl => {
            let (k, l) = (need(a.k, "k")?, need(a.l, "l")?);
            let base = input::parse_graph6(&need(a.base, "base")?)?;
            GraftSite::new(base, need(a.u, "u")?, need(a.v, "v")?, k, l)?.member(k, l)?
        }
    };
    println!("{}", graph6::encode(&g));
    Ok(0)
}

/// The enumeration cap after applying `--allow-large`.
fn cap(n: usize, max_n: usize, allow_large: bool) -> Result<usize> {
    if allow_large {
        if n >= HARD_MAX_N {
            eprintln!("distspec: warning: n = {n} enumerates millions of graphs and may take hours");
        }
        return Ok(max_n.max(HARD_MAX_N));
    }
    if n > max_n {
        bail!("n = {n} exceeds the enumeration cap {max_n}; pass --allow-large to go up to {HARD_MAX_N}");
    }
    Ok(max_n)
}

fn enumerate(a: EnumerateArgs, max_n: usize) -> Result<u8> {
    let max_n = cap(a.n, max_n, a.allow_large)?;
    let graphs = match (a.cut_vertices, a.cut_edges) {
        (None, None) => connected_graphs_with_max(a.n, max_n)?,
        (Some(k), _) => filtered_graphs(a.n, &EnumFilter::cut_vertices(k).with_max_n(max_n))?,
        (None, Some(k)) => filtered_graphs(a.n, &EnumFilter::cut_edges(k).with_max_n(max_n))?,
    };
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&graph6::encode(g));
        out.push('\n');
    }
    print!("{out}");
    Ok(0)
}

fn options(c: &Common, max_n: usize) -> VerifyOptions {
    VerifyOptions {
        width: c.width,
        jobs: c.jobs,
        max_n,
    }
}

fn render(r: &VerificationReport, timing: bool) -> String {
    if timing {
        r.to_json_timed()
    } else {
        r.to_json()
    }
}

fn graft_site(a: &VerifyArgs) -> Result<GraftSite> {
    let base = input::parse_graph6(need(a.base.as_deref(), "base")?)?;
    Ok(GraftSite::new(
        base,
        need(a.u, "u")?,
        need(a.v, "v")?,
        need(a.k, "k")?,
        need(a.l, "l")?,
    )?)
}

fn verify_one(a: VerifyArgs, max_n: usize) -> Result<u8> {
    let c = &a.common;
    let width = c.width;
    let report = match a.theorem {
        TheoremArg::Graft => verify::verify_graft_monotonicity(&graft_site(&a)?, width)?,
        TheoremArg::PendantMass => verify::verify_pendant_sum_on_site(&graft_site(&a)?, width)?,
        TheoremArg::Relocation => {
            let g = input::parse_graph6(need(a.graph.as_deref(), "graph")?)?;
            let mut spec = RelocationSpec::new(g, need(a.u, "u")?, need(a.v, "v")?, a.targets.clone())?;
            if let Some(w) = a.witness {
                spec = spec.with_witness(w);
            }
            verify::verify_relocation(&spec, width)?
        }
        TheoremArg::CutVertices | TheoremArg::CutEdges => {
            let (n, k) = (need(a.n, "n")?, need(a.k, "k")?);
            let opts = options(c, cap(n, max_n, c.allow_large)?);
            if a.theorem == TheoremArg::CutVertices {
                verify::verify_min_cut_vertices(n, k, &opts)?
            } else {
                verify::verify_min_cut_edges(n, k, &opts)?
            }
        }
        TheoremArg::Bound => {
            let g = input::parse_graph6(need(a.graph.as_deref(), "graph")?)?;
            let h = input::parse_graph6(need(a.other.as_deref(), "other")?)?;
            verify::verify_perturbation_bound(&g, &h, width)?
        }
        TheoremArg::Mono => {
            let g = input::parse_graph6(need(a.graph.as_deref(), "graph")?)?;
            verify::verify_distance_monotonicity(&g, width)?
        }
    };
    println!("{}", render(&report, c.timing));
    Ok(report.outcome.exit_code() as u8)
}

fn sweep_grid(a: SweepArgs, max_n: usize) -> Result<u8> {
    let c = &a.common;
    let reports = match a.theorem {
        TheoremArg::Graft => {
            let grid: Vec<(usize, usize)> = match a.grid {
                Grid::Unbalanced => sweep::UNBALANCED_GRID.to_vec(),
                Grid::Balanced => sweep::BALANCED_GRID.to_vec(),
                Grid::All => [sweep::UNBALANCED_GRID, sweep::BALANCED_GRID].concat(),
            };
            sweep::sweep_graft(a.n.unwrap_or(6), &grid, &options(c, max_n))?
        }
        TheoremArg::PendantMass => {
            sweep::sweep_pendant_mass(a.n.unwrap_or(6), &sweep::UNBALANCED_GRID, &options(c, max_n))?
        }
        TheoremArg::Relocation => sweep::sweep_relocation(a.n.unwrap_or(6), &options(c, max_n))?,
        TheoremArg::Bound => sweep::sweep_perturbation(a.n.unwrap_or(6), &options(c, max_n))?,
        TheoremArg::Mono => sweep::sweep_monotonicity(a.n.unwrap_or(7), &options(c, max_n))?,
        TheoremArg::CutVertices => {
            let n = need(a.n, "n")?;
            sweep::sweep_min_cut_vertices(n, &options(c, cap(n, max_n, c.allow_large)?))?
        }
        TheoremArg::CutEdges => {
            let n = need(a.n, "n")?;
            sweep::sweep_min_cut_edges(n, &options(c, cap(n, max_n, c.allow_large)?))?
        }
    };
    let body: Vec<String> = reports.iter().map(|r| render(r, c.timing)).collect();
    println!("[{}]", body.join(","));
    let summary = verify::Summary::of(&reports);
    eprintln!(
        "distspec: {} reports, {} pass, {} fail, {} inconclusive",
        summary.total, summary.pass, summary.fail, summary.inconclusive
    );
    Ok(sweep_exit(&reports))
}

fn sweep_exit(reports: &[VerificationReport]) -> u8 {
    if reports.iter().any(|r| r.outcome == Outcome::Fail) {
        1
    } else if reports.iter().all(|r| r.outcome == Outcome::Pass) {
        0
    } else {
        2
    }
}
