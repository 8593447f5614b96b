//! `ratsign`: exact computations around signed counts of real simple
//! rational functions. Exit codes: 0 success, 1 verification failure,
//! 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde_json::{json, Value};

use ratsign::json as out;
use ratsign::parse;
use ratsign::verify;

use ratsign_core::algebra::rational_to_string;
use ratsign_core::alternations::{base_series, count_bruteforce, count_recursive, SeriesKind};
use ratsign_core::bwgraphs::{enumerate, Color};
use ratsign_core::profiles::{
    degree_bounds, leading_coefficients, nonvanishing, simple_base_counts_closed, stats,
    trivially_vanishes, Parity,
};
use ratsign_core::snumbers::{
    assemble_fb, asymptotic_report, epsilon_base, extract_s_numbers, s_numbers_empty,
};

#[derive(Parser)]
#[command(
    name = "ratsign",
    version,
    about = "Signed counts of real simple rational functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesArg {
    F,
    G,
    U,
    V,
}

#[derive(Subcommand)]
enum Command {
    /// Tables of ordinary and broken alternation counts.
    Alternations(AlternationsArgs),
    /// Expand one of the base generating series.
    Series(SeriesOpts),
    /// Enumerate real bw-graphs and their signed sums.
    Bwgraphs(BwGraphArgs),
    /// Statistics, vanishing predicates, bounds and leading coefficients
    /// of a reduced profile.
    Profiles(ProfileArgs),
    /// Signed counts for the empty profile.
    Snumbers(SNumberArgs),
    /// Sign and generating series of a base descriptor file.
    Fb(FbArgs),
    /// Run the whole verification suite.
    VerifyAll(VerifyArgs),
}

#[derive(Args)]
struct AlternationsArgs {
    /// Largest n to tabulate.
    #[arg(long, default_value_t = 12)]
    max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cross-check the table against brute force up to this n (at most 10).
    #[arg(long)]
    brute_check: Option<usize>,
}

#[derive(Args)]
struct SeriesOpts {
    #[arg(long, value_enum)]
    which: SeriesArg,
    #[arg(long, default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BwGraphArgs {
    /// White degree partition, e.g. 3,2,1,1.
    #[arg(long)]
    white: Option<String>,
    /// Black degree partition, e.g. 3,2,2.
    #[arg(long)]
    black: Option<String>,
    /// List every graph, not just the sums.
    #[arg(long)]
    list: bool,
    /// Check S(W) = S(B) for every pair of partitions of this degree.
    #[arg(long)]
    verify_invariance: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct ProfileArgs {
    /// Semicolon-separated partitions, e.g. "3,2,1,1;3,2,2"; empty for the
    /// empty profile.
    #[arg(long, default_value = "")]
    lambda: String,
    #[arg(long, value_enum)]
    parity: ParityArg,
    /// Comma-separated report sections: stats,vanishing,bounds,counts,leading.
    #[arg(long, default_value = "stats,vanishing,bounds,counts,leading")]
    report: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct SNumberArgs {
    /// Compute the empty-profile series (the only profile with a full
    /// pipeline).
    #[arg(long)]
    empty: bool,
    #[arg(long, value_enum)]
    parity: ParityArg,
    #[arg(long, default_value_t = 20)]
    max_m: usize,
    /// Shorthand for --format json.
    #[arg(long)]
    json: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct FbArgs {
    /// JSON descriptor file.
    #[arg(long)]
    descriptor: std::path::PathBuf,
    /// Also extract the scaled coefficients up to this m.
    #[arg(long)]
    max_m: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Worker threads (default: RATSIGN_THREADS or the available cores).
    #[arg(long)]
    threads: Option<usize>,
    /// Seed for the randomized property runs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string(value).expect("serialisable"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Alternations(args) => alternations(args),
        Command::Series(args) => series(args),
        Command::Bwgraphs(args) => bwgraphs(args),
        Command::Profiles(args) => profiles_cmd(args),
        Command::Snumbers(args) => snumbers(args),
        Command::Fb(args) => fb(args),
        Command::VerifyAll(args) => verify_all(args),
    }
}

fn alternations(args: AlternationsArgs) -> ExitCode {
    let tables = count_recursive(args.max);
    if let Some(limit) = args.brute_check {
        for n in 1..=limit.min(args.max) {
            match count_bruteforce(n) {
                Ok(brute) => {
                    if tables.a[n] != brute.ordinary.into() || tables.b[n] != brute.broken.into() {
                        eprintln!("brute-force mismatch at n = {n}");
                        return ExitCode::from(1);
                    }
                }
                Err(e) => return usage_error(&e.to_string()),
            }
        }
    }
    match args.format {
        Format::Csv => {
            println!("n,A_n,B_n");
            for n in 0..=args.max {
                println!("{n},{},{}", tables.a[n], tables.b[n]);
            }
        }
        Format::Text => {
            for n in 0..=args.max {
                println!(
                    "n = {n:>3}   A = {:>24}   B = {:>24}",
                    tables.a[n].to_string(),
                    tables.b[n].to_string()
                );
            }
        }
        Format::Json => {
            let rows: Vec<Value> = (0..=args.max)
                .map(|n| json!([n, tables.a[n].to_string(), tables.b[n].to_string()]))
                .collect();
            emit(&json!({ "max": args.max, "rows": rows }));
        }
    }
    ExitCode::SUCCESS
}

fn series(args: SeriesOpts) -> ExitCode {
    let kind = match args.which {
        SeriesArg::F => SeriesKind::F,
        SeriesArg::G => SeriesKind::G,
        SeriesArg::U => SeriesKind::U,
        SeriesArg::V => SeriesKind::V,
    };
    let element = base_series(kind);
    let expansion = element.expand(args.order);
    match args.format {
        Format::Text => {
            for n in 0..=args.order {
                if !expansion.coeff(n).is_zero() {
                    println!("q^{n}: {}", rational_to_string(expansion.coeff(n)));
                }
            }
        }
        Format::Csv => {
            println!("n,coefficient");
            for n in 0..=args.order {
                println!("{n},{}", rational_to_string(expansion.coeff(n)));
            }
        }
        Format::Json => {
            let coeffs: Vec<Value> = expansion
                .coeffs()
                .iter()
                .map(|c| Value::String(rational_to_string(c)))
                .collect();
            emit(&json!({
                "element": out::gelement(&element),
                "order": args.order,
                "coefficients": coeffs,
            }));
        }
    }
    ExitCode::SUCCESS
}

fn bwgraphs(args: BwGraphArgs) -> ExitCode {
    if let Some(d) = args.verify_invariance {
        let parts = verify::partitions_of(d);
        let mut failures = 0;
        for w in &parts {
            for b in &parts {
                let graphs = enumerate(w, b).expect("equal sums");
                let (mut sw, mut sb) = (0i64, 0i64);
                for g in &graphs {
                    match g.side() {
                        Color::White => sw += g.sign().sign as i64,
                        Color::Black => sb += g.sign().sign as i64,
                    }
                }
                let ok = sw == sb;
                if !ok {
                    failures += 1;
                }
                println!(
                    "{} | {} -> S_white = {sw}, S_black = {sb} {}",
                    fmt_partition(w),
                    fmt_partition(b),
                    if ok { "ok" } else { "MISMATCH" }
                );
            }
        }
        return if failures == 0 {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        };
    }

    let (Some(white), Some(black)) = (&args.white, &args.black) else {
        return usage_error("--white and --black are required unless --verify-invariance is given");
    };
    let white = match parse::parse_partition(white) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let black = match parse::parse_partition(black) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let graphs = match enumerate(&white, &black) {
        Ok(g) => g,
        Err(e) => return usage_error(&e.to_string()),
    };
    let (mut s_white, mut s_black) = (0i64, 0i64);
    for g in &graphs {
        match g.side() {
            Color::White => s_white += g.sign().sign as i64,
            Color::Black => s_black += g.sign().sign as i64,
        }
    }
    match args.format {
        Format::Json => {
            let mut doc = json!({
                "white": white,
                "black": black,
                "count": graphs.len(),
                "s_white": s_white,
                "s_black": s_black,
            });
            if args.list {
                doc["graphs"] = Value::Array(graphs.iter().map(out::graph).collect());
            }
            emit(&doc);
        }
        _ => {
            println!(
                "{} graphs of type ({} | {}): S_white = {s_white}, S_black = {s_black}",
                graphs.len(),
                fmt_partition(&white),
                fmt_partition(&black)
            );
            if args.list {
                for (i, g) in graphs.iter().enumerate() {
                    let s = g.sign();
                    let (sw, sb) = g.real_sequences();
                    println!(
                        "#{i:<3} side {:5} cycle {:>2} sigma_w {:?} sigma_b {:?} lev {} pol {} sign {:+}",
                        match g.side() {
                            Color::White => "white",
                            Color::Black => "black",
                        },
                        g.cycle_pos(),
                        sw,
                        sb,
                        s.lev,
                        s.pol,
                        s.sign
                    );
                }
            }
        }
    }
    ExitCode::SUCCESS
}

fn fmt_partition(p: &[u32]) -> String {
    let parts: Vec<String> = p.iter().map(u32::to_string).collect();
    parts.join(",")
}

fn profiles_cmd(args: ProfileArgs) -> ExitCode {
    let profiles = match parse::parse_profiles(&args.lambda, args.parity.into()) {
        Ok(p) => p,
        Err(e) => return usage_error(&e),
    };
    let sections: Vec<&str> = args.report.split(',').map(str::trim).collect();
    let mut doc = serde_json::Map::new();
    doc.insert("lambda".into(), json!(args.lambda));
    doc.insert("parity".into(), out::parity(profiles.parity()));
    for section in &sections {
        match *section {
            "stats" => {
                let s = stats(&profiles);
                doc.insert(
                    "stats".into(),
                    json!({
                        "pairs": s.pairs,
                        "odd_labels": s.odd_labels,
                        "even_labels": s.even_labels,
                        "big_even_labels": s.big_even_labels,
                        "repeat_divisor": s.repeat_divisor.to_string(),
                    }),
                );
            }
            "vanishing" => {
                doc.insert(
                    "vanishing".into(),
                    json!({
                        "nonvanishing": nonvanishing(&profiles),
                        "reason": trivially_vanishes(&profiles).map(|r| format!("{r:?}")),
                    }),
                );
            }
            "bounds" => {
                let b = degree_bounds(&profiles);
                doc.insert(
                    "bounds".into(),
                    json!({
                        "deg_f": [b.deg_f.q_exp, b.deg_f.f_exp],
                        "deg_g": [b.deg_g.q_exp, b.deg_g.f_exp],
                    }),
                );
            }
            "counts" => {
                let closed = simple_base_counts_closed(&profiles);
                doc.insert(
                    "counts".into(),
                    json!({
                        "closed_type_c": closed.type_c.to_string(),
                        "closed_type_b": closed.type_b.map(|b| b.to_string()),
                    }),
                );
            }
            "leading" => {
                let lc = leading_coefficients(&profiles);
                doc.insert(
                    "leading".into(),
                    json!({
                        "f_degree": [lc.f_degree.q_exp, lc.f_degree.f_exp],
                        "f_coeff": rational_to_string(&lc.f_coeff),
                        "g_degree": [lc.g_degree.q_exp, lc.g_degree.f_exp],
                        "g_coeff": rational_to_string(&lc.g_coeff),
                        "sums": {
                            "type_b": lc.sums.type_b,
                            "type_c": lc.sums.type_c,
                            "type_c_weighted": lc.sums.type_c_weighted,
                            "classes_b": lc.sums.classes_b,
                            "classes_c": lc.sums.classes_c,
                        },
                    }),
                );
            }
            other => return usage_error(&format!("unknown report section {other:?}")),
        }
    }
    match args.format {
        Format::Json => emit(&Value::Object(doc)),
        _ => {
            for (key, value) in &doc {
                println!("{key}: {value}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn snumbers(args: SNumberArgs) -> ExitCode {
    if !args.empty {
        return usage_error("only --empty is supported: general profiles have no full pipeline");
    }
    let report = s_numbers_empty(args.max_m, args.parity.into());
    let format = if args.json { Format::Json } else { args.format };
    let diagnostics = asymptotic_report(&report).ok();
    match format {
        Format::Json => {
            let values: Vec<Value> = report
                .values
                .iter()
                .map(|(m, s)| json!([m, s.to_string()]))
                .collect();
            let diag = diagnostics.map(|d| {
                json!({
                    "log_ratio": d.log_ratio.iter().map(|(m, r)| json!([m, r])).collect::<Vec<_>>(),
                    "corrected_ratio": d.corrected_ratio.iter().map(|(k, r)| json!([k, r])).collect::<Vec<_>>(),
                    "radius_estimate": d.radius_estimate,
                })
            });
            emit(&json!({
                "lambda": "",
                "parity": match report.parity {
                    Parity::Odd => "odd",
                    Parity::Even => "even",
                },
                "values": values,
                "series": out::gelement(&report.series),
                "diagnostics": diag,
            }));
        }
        Format::Csv => {
            println!("m,S");
            for (m, s) in &report.values {
                println!("{m},{s}");
            }
        }
        Format::Text => {
            for (m, s) in &report.values {
                println!("S(empty, {m:>3}) = {s}");
            }
            if let Some(d) = diagnostics {
                if let Some((m, r)) = d.log_ratio.last() {
                    println!("log-growth ratio at m = {m}: {r:.4}");
                }
                println!("radius estimate: {:.6}", d.radius_estimate);
            }
        }
    }
    ExitCode::SUCCESS
}

fn fb(args: FbArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.descriptor) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {}: {e}", args.descriptor.display())),
    };
    let value: Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return usage_error(&format!("invalid JSON: {e}")),
    };
    let descriptor = match parse::parse_descriptor(&value) {
        Ok(d) => d,
        Err(e) => return usage_error(&e),
    };
    let eps = epsilon_base(&descriptor).expect("validated");
    let series = assemble_fb(&descriptor).expect("validated");
    let mut doc = serde_json::Map::new();
    doc.insert("epsilon".into(), json!(eps));
    doc.insert("series".into(), out::gelement(&series));
    if let Some(max_m) = args.max_m {
        match extract_s_numbers(&series, max_m) {
            Ok(values) => {
                let list: Vec<Value> = values
                    .iter()
                    .enumerate()
                    .map(|(m, s)| json!([m, s.to_string()]))
                    .collect();
                doc.insert("values".into(), Value::Array(list));
            }
            Err(e) => return usage_error(&e.to_string()),
        }
    }
    match args.format {
        Format::Json => emit(&Value::Object(doc)),
        _ => {
            for (key, value) in &doc {
                println!("{key}: {value}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn verify_all(args: VerifyArgs) -> ExitCode {
    let threads = verify::thread_count(args.threads);
    let results = verify::run_all(args.seed, threads);
    let mut failed = 0;
    for r in &results {
        println!(
            "{} {:32} {}",
            if r.passed { "ok  " } else { "FAIL" },
            r.name,
            r.details
        );
        if !r.passed {
            failed += 1;
        }
    }
    println!(
        "{} of {} checks passed (seed {}, {} threads)",
        results.len() - failed,
        results.len(),
        args.seed,
        threads
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
