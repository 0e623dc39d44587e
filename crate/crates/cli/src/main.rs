//! Command-line surface: index evaluation, argmax tables, exhaustive
//! extremal scans, conjecture verification, hill climbing, bound sweeps,
//! and sequence lookups. Identical flags and seeds give byte-identical
//! output; exit code 0 means every requested check held, 1 a failed check
//! or runtime error, 2 a usage error.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use csz_core::bounds::{linear_cap_report, root_consistency_report, root_floor_ceil_report};
use csz_core::csz::csz;
use csz_core::graph::{Graph, MAX_ORDER};
use csz_core::graph6::{from_edge_list_text, from_graph6, to_graph6};
use csz_core::join::{k_table, optimal_k, row_to_csv, KTableRow};
use csz_core::oeis::{parse_response, MatchMode, OeisClient, SequenceQuery};
use csz_core::recognize_join;
use csz_core::search::{
    enumerate_extremal, local_search, random_connected, verify_conjecture, SearchConfig,
    SearchError, SearchMode,
};

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "csz", version, about = "Complementary second Zagreb index toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the index of graphs in a file (graph6 or edge-list text)
    Csz(CszArgs),
    /// Emit optimal clique-part sizes for a range of orders
    Table(TableArgs),
    /// Exhaustively scan a class of graphs for the extremal value
    Enumerate(EnumerateArgs),
    /// Verify the extremal-join conjecture at one order
    Verify(VerifyArgs),
    /// Hill-climb from random connected seeds
    Search(SearchArgs),
    /// Sweep the max-degree-count bound checks, one JSON line per report
    Bounds(BoundsArgs),
    /// Look up a sequence against the OEIS
    Oeis(OeisArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct CszArgs {
    /// Input file; graph6 accepts one graph per line
    file: String,
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    n_min: usize,
    n_max: usize,
    #[arg(long, value_enum, default_value = "plain")]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Unrestricted,
    UniversalVertex,
}

impl From<ModeArg> for SearchMode {
    fn from(m: ModeArg) -> SearchMode {
        match m {
            ModeArg::Unrestricted => SearchMode::Unrestricted,
            ModeArg::UniversalVertex => SearchMode::UniversalVertex,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Plain,
    Json,
}

#[derive(Args)]
struct EnumerateArgs {
    n: usize,
    /// Defaults to unrestricted up to order 7, universal-vertex beyond
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    /// Scan only this shard (0-based) of the mask space
    #[arg(long)]
    shard_index: Option<usize>,
    /// Allow orders above the default cap (runtime grows exponentially)
    #[arg(long)]
    cap_override: bool,
    #[arg(long, value_enum, default_value = "plain")]
    format: ReportFormat,
}

#[derive(Args)]
struct VerifyArgs {
    n: usize,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long, default_value_t = 1)]
    shards: usize,
    #[arg(long)]
    cap_override: bool,
}

#[derive(Args)]
struct SearchArgs {
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    #[arg(long, default_value_t = 10_000)]
    max_steps: usize,
    /// Edge probability for the random seed graphs
    #[arg(long, default_value_t = 0.5)]
    edge_probability: f64,
    /// Start from this graph file instead of a random seed
    #[arg(long)]
    from: Option<String>,
    #[arg(long, value_enum, default_value = "plain")]
    format: ReportFormat,
}

#[derive(Args)]
struct BoundsArgs {
    n_min: usize,
    n_max: usize,
}

#[derive(Args)]
struct OeisArgs {
    /// Comma-separated terms, e.g. 1,4,9,16
    #[arg(long, conflicts_with = "from_table")]
    terms: Option<String>,
    /// Derive terms from the optimal-k table over this order range
    #[arg(long, num_args = 2, value_names = ["N_MIN", "N_MAX"])]
    from_table: Option<Vec<usize>>,
    /// Query the live service (opt-in; rate limited)
    #[arg(long, conflicts_with = "fixture")]
    live: bool,
    /// Parse a recorded response body instead of going to the network
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long, value_enum, default_value = "subsequence")]
    match_mode: MatchModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum MatchModeArg {
    Subsequence,
    Prefix,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Csz(args) => cmd_csz(args),
        Command::Table(args) => cmd_table(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Oeis(args) => cmd_oeis(args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}

fn usage(message: String) -> Result<u8, String> {
    eprintln!("usage error: {message}");
    Ok(EXIT_USAGE)
}

/// Bad requests (caps, shard ranges, probabilities) are usage errors, not
/// runtime failures.
fn is_usage_error(e: &SearchError) -> bool {
    matches!(
        e,
        SearchError::OverSoftCap { .. }
            | SearchError::OverHardCap { .. }
            | SearchError::ShardIndexOutOfRange { .. }
            | SearchError::ZeroShards
            | SearchError::InvalidEdgeProbability { .. }
    )
}

fn load_graphs(path: &str, format: InputFormat) -> Result<Vec<Graph>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let looks_like_edge_list = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.trim().parse::<usize>().is_ok());
    let as_edge_list = match format {
        InputFormat::EdgeList => true,
        InputFormat::Graph6 => false,
        InputFormat::Auto => looks_like_edge_list,
    };
    if as_edge_list {
        Ok(vec![from_edge_list_text(&text).map_err(|e| format!("{path}: {e}"))?])
    } else {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| from_graph6(l).map_err(|e| format!("{path}: {e}")))
            .collect()
    }
}

fn cmd_csz(args: CszArgs) -> Result<u8, String> {
    let graphs = load_graphs(&args.file, args.input_format)?;
    for g in &graphs {
        println!("{}", csz(g));
    }
    Ok(EXIT_OK)
}

fn plain_table_row(row: &KTableRow) -> String {
    let mut line = format!("{} {} {}", row.n, row.best_k[0], row.best_value);
    if row.is_tie() {
        let ks: Vec<String> = row.best_k.iter().map(usize::to_string).collect();
        line.push_str(&format!(" tie:{}", ks.join(";")));
    }
    line
}

fn cmd_table(args: TableArgs) -> Result<u8, String> {
    if args.n_min < 5 || args.n_min > args.n_max || args.n_max > MAX_ORDER {
        return usage(format!(
            "need 5 <= N_MIN <= N_MAX <= {MAX_ORDER}, got {} and {}",
            args.n_min, args.n_max
        ));
    }
    let rows = k_table(args.n_min, args.n_max).map_err(|e| e.to_string())?;
    match args.format {
        TableFormat::Plain => {
            for row in &rows {
                println!("{}", plain_table_row(row));
            }
        }
        TableFormat::Csv => {
            println!("n,k,value");
            for row in &rows {
                println!("{}", row_to_csv(row));
            }
        }
        TableFormat::Json => {
            println!("{}", serde_json::to_string(&rows).expect("serializable"));
        }
    }
    Ok(EXIT_OK)
}

fn default_mode(n: usize) -> SearchMode {
    if n <= 7 {
        SearchMode::Unrestricted
    } else {
        SearchMode::UniversalVertex
    }
}

fn search_config(n: usize, mode: Option<ModeArg>, shards: usize, cap_override: bool) -> SearchConfig {
    let mut cfg = SearchConfig::new(n, mode.map_or_else(|| default_mode(n), SearchMode::from));
    cfg.shard_count = shards.max(1);
    cfg.cap_override = cap_override;
    if cfg.cap_override {
        eprintln!(
            "warning: cap override engaged for n={n}; the scan space is 2^{} masks",
            match cfg.mode {
                SearchMode::Unrestricted => n * (n - 1) / 2,
                SearchMode::UniversalVertex => (n - 1) * (n - 2) / 2,
            }
        );
    }
    cfg
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8, String> {
    let mut cfg = search_config(args.n, args.mode, args.shards, args.cap_override);
    cfg.shard_index = args.shard_index;
    if args.n >= 9 {
        eprintln!("scanning {} mode at n={} ...", cfg.mode.as_str(), args.n);
    }
    let report = match enumerate_extremal(&cfg) {
        Ok(report) => report,
        Err(e) if is_usage_error(&e) => return usage(e.to_string()),
        Err(e) => return Err(e.to_string()),
    };
    match args.format {
        ReportFormat::Json => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
        }
        ReportFormat::Plain => {
            println!(
                "n={} mode={} max={} scanned={}",
                report.n,
                report.mode.as_str(),
                report.max_value,
                report.graphs_scanned
            );
            for w in &report.witnesses {
                println!(
                    "witness {} degrees={:?} join_k={:?}",
                    w.graph6, w.degree_sequence, w.join_k
                );
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, String> {
    let cfg = search_config(args.n, args.mode, args.shards, args.cap_override);
    if args.n >= 9 {
        eprintln!("scanning {} mode at n={} ...", cfg.mode.as_str(), args.n);
    }
    let check = match verify_conjecture(&cfg) {
        Ok(check) => check,
        Err(e) if is_usage_error(&e) => return usage(e.to_string()),
        Err(e) => return Err(e.to_string()),
    };
    let ks: Vec<String> = check.report.witness_k.iter().map(usize::to_string).collect();
    let ks = if ks.is_empty() { "-".to_string() } else { ks.join(";") };
    if check.holds {
        println!("CONJECTURE HOLDS n={} k={}", args.n, ks);
        Ok(EXIT_OK)
    } else {
        println!(
            "CONJECTURE FAILS n={} witness_k={} all_joins={} max={}",
            args.n, ks, check.report.all_witnesses_are_joins, check.report.max_value
        );
        Ok(EXIT_CHECK_FAILED)
    }
}

fn cmd_search(args: SearchArgs) -> Result<u8, String> {
    if args.restarts == 0 {
        return usage("need at least one restart".into());
    }
    println!("# seed: {}", args.seed);
    println!("# restarts: {}", args.restarts);
    let seed_graph = match &args.from {
        Some(path) => Some(
            load_graphs(path, InputFormat::Auto)?
                .into_iter()
                .next()
                .ok_or_else(|| format!("{path}: no graph found"))?,
        ),
        None => None,
    };

    let mut best: Option<csz_core::search::LocalSearchOutcome> = None;
    for restart in 0..args.restarts {
        let mut cfg = SearchConfig::new(args.n, SearchMode::Unrestricted);
        cfg.seed = args.seed.wrapping_add(restart as u64);
        cfg.max_steps = args.max_steps;
        let seed_graph = match &seed_graph {
            Some(g) => Some(g.clone()),
            None => match random_connected(args.n, args.edge_probability, cfg.seed) {
                Ok(g) => Some(g),
                Err(e) if is_usage_error(&e) => return usage(e.to_string()),
                Err(e) => return Err(e.to_string()),
            },
        };
        let outcome = local_search(&cfg, seed_graph).map_err(|e| e.to_string())?;
        println!(
            "restart {restart}: start={} final={} steps={}",
            outcome.start_value, outcome.final_value, outcome.steps
        );
        if best.as_ref().is_none_or(|b| outcome.final_value > b.final_value) {
            best = Some(outcome);
        }
    }

    let best = best.expect("at least one restart");
    let g = &best.graph;
    let join_k = recognize_join(g);
    let optimum = if args.n >= 5 { Some(optimal_k(args.n).map_err(|e| e.to_string())?) } else { None };
    match args.format {
        ReportFormat::Plain => {
            println!("best value {} graph6 {}", best.final_value, to_graph6(g));
            println!("join_k={join_k:?}");
            if let Some(opt) = &optimum {
                println!(
                    "family optimum for n={}: k={:?} value={} reached={}",
                    args.n,
                    opt.best_k,
                    opt.best_value,
                    best.final_value == opt.best_value
                );
            }
        }
        ReportFormat::Json => {
            let summary = serde_json::json!({
                "seed": args.seed,
                "restarts": args.restarts,
                "final_value": best.final_value,
                "graph6": to_graph6(g),
                "join_k": join_k,
                "family_optimum": optimum,
                "trace_len": best.steps,
            });
            println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8, String> {
    if args.n_min < 4 || args.n_min > args.n_max || args.n_max > 1_000_000 {
        return usage(format!(
            "need 4 <= N_MIN <= N_MAX <= 1000000, got {} and {}",
            args.n_min, args.n_max
        ));
    }
    let mut violations = 0u64;
    for n in args.n_min..=args.n_max {
        let mut reports = vec![linear_cap_report(n), root_floor_ceil_report(n)];
        if n <= 1_000 {
            reports.push(root_consistency_report(n));
        }
        for report in reports {
            if !report.holds {
                violations += 1;
            }
            println!("{}", serde_json::to_string(&report).expect("serializable"));
        }
    }
    if violations > 0 {
        eprintln!("{violations} bound violation(s)");
        return Ok(EXIT_CHECK_FAILED);
    }
    Ok(EXIT_OK)
}

fn cmd_oeis(args: OeisArgs) -> Result<u8, String> {
    let terms: Vec<u64> = if let Some(spec) = &args.terms {
        spec.split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| format!("bad term {t:?}")))
            .collect::<Result<_, _>>()?
    } else if let Some(range) = &args.from_table {
        let (n_min, n_max) = (range[0], range[1]);
        if n_min < 5 || n_min > n_max || n_max > MAX_ORDER {
            return usage(format!("need 5 <= N_MIN <= N_MAX <= {MAX_ORDER}"));
        }
        k_table(n_min, n_max)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|row| row.best_k[0] as u64)
            .collect()
    } else {
        return usage("provide --terms or --from-table".into());
    };

    let mode = match args.match_mode {
        MatchModeArg::Subsequence => MatchMode::Subsequence,
        MatchModeArg::Prefix => MatchMode::Prefix,
    };
    let query = SequenceQuery::new(terms, mode).map_err(|e| e.to_string())?;
    println!("sequence: {}", query.terms_string());

    let matches = if let Some(path) = &args.fixture {
        let body = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        parse_response(&body, &query).map_err(|e| e.to_string())?
    } else if args.live {
        let mut client = OeisClient::new();
        println!("# url: {}", client.request_url(&query));
        client.query_sequence(&query).map_err(|e| e.to_string())?
    } else {
        return usage("pass --live for a network lookup or --fixture FILE for a recorded body".into());
    };

    if matches.is_empty() {
        println!("OEIS REPORT: no match");
    } else {
        println!("OEIS REPORT: {} match(es)", matches.len());
        for m in matches.iter().take(10) {
            println!("  {} {}", m.id, m.name);
        }
    }
    Ok(EXIT_OK)
}
