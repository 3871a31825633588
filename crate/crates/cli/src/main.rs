//! `footrule`: exact l1 segment and Dumont class computations from the
//! command line.
//!
//! Output goes to stdout and is deterministic for fixed arguments; timing
//! and diagnostics go to stderr. Exit codes: 0 success or verification
//! pass, 1 verification failure, 2 input error, 3 resource cap exceeded.

use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;

use footrule::bijections::{self, Parity, VerificationReport};
use footrule::dumont::{self, DumontKind};
use footrule::metric::{self, CountBackend};
use footrule::search::{self, genocchi_counterpart};
use footrule::{Error, Permutation};

#[derive(Parser)]
#[command(
    name = "footrule",
    version,
    about = "Exact l1 (Spearman footrule) segments, Dumont classes, and Genocchi counts"
)]
struct Cli {
    /// Emit one JSON object instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// l1 distance between two permutations.
    Dist {
        /// First permutation, e.g. "2 3 1" or "231".
        u: String,
        /// Second permutation of the same size.
        v: String,
    },
    /// Count or list the segment [id, u].
    #[command(group(ArgGroup::new("mode").required(true).args(["count", "list"])))]
    Segment {
        u: String,
        /// Print the exact cardinality.
        #[arg(long)]
        count: bool,
        /// Print every member, one per line, lexicographically.
        #[arg(long)]
        list: bool,
        /// Counting backend: subset DP (to n = 26) or backtracking (to n = 12).
        #[arg(long, value_enum, default_value_t = BackendArg::Dp)]
        backend: BackendArg,
        /// Size cap for --list (default 12).
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
    },
    /// Segment cardinalities at the half-rotation for n = 1..=n_max, with
    /// the Genocchi identification of each value.
    Sequence { n_max: usize },
    /// Count or list a Dumont permutation class.
    #[command(group(ArgGroup::new("mode").required(true).args(["count", "list"])))]
    Dumont {
        /// Class kind: `first` (weak even bound) or `second` (strict).
        kind: KindArg,
        /// Even class size.
        size: usize,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        list: bool,
        /// Size cap for --list (default 14).
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
    },
    /// Map a permutation into its Dumont class image; the parity of the
    /// input size selects the odd or even map.
    Map { u: String },
    /// Verify the segment-to-class bijection over the whole ambient group.
    Verify {
        parity: ParityArg,
        /// Block size m; the ambient group is S_{2m+1} (odd) or S_{2m} (even).
        m: usize,
        /// Scan budget in permutations (default 10!).
        #[arg(long, value_name = "COUNT")]
        budget: Option<u64>,
        /// Worker threads (default: all cores).
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
    },
    /// Exhaustive maximal-segment search over S_n.
    Search {
        n: usize,
        /// Size cap (default 9; raising it past 10 means hours of work).
        #[arg(long, value_name = "N")]
        max_n: Option<usize>,
        /// Worker threads (default: all cores).
        #[arg(long, value_name = "K")]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Dp,
    Bt,
}

impl From<BackendArg> for CountBackend {
    fn from(arg: BackendArg) -> Self {
        match arg {
            BackendArg::Dp => CountBackend::BitmaskDp,
            BackendArg::Bt => CountBackend::Backtracking,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    First,
    Second,
}

impl From<KindArg> for DumontKind {
    fn from(arg: KindArg) -> Self {
        match arg {
            KindArg::First => DumontKind::FirstKind,
            KindArg::Second => DumontKind::SecondKind,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(arg: ParityArg) -> Self {
        match arg {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::SizeTooLarge { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Dist { u, v } => cmd_dist(&u, &v, cli.json),
        Command::Segment {
            u,
            count,
            list,
            backend,
            max_n,
        } => cmd_segment(&u, count, list, backend.into(), max_n, cli.json),
        Command::Sequence { n_max } => cmd_sequence(n_max, cli.json),
        Command::Dumont {
            kind,
            size,
            count,
            list,
            max_n,
        } => cmd_dumont(kind.into(), size, count, list, max_n, cli.json),
        Command::Map { u } => cmd_map(&u, cli.json),
        Command::Verify {
            parity,
            m,
            budget,
            jobs,
        } => cmd_verify(parity.into(), m, budget, jobs, cli.json),
        Command::Search { n, max_n, jobs } => cmd_search(n, max_n, jobs, cli.json),
    }
}

fn word_json(p: &Permutation) -> serde_json::Value {
    json!(p.word())
}

/// Runs `f` inside a dedicated rayon pool when a thread count is given.
fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn cmd_dist(u: &str, v: &str, as_json: bool) -> Result<ExitCode, Error> {
    let u: Permutation = u.parse()?;
    let v: Permutation = v.parse()?;
    let d = metric::distance(&u, &v)?;
    if as_json {
        println!(
            "{}",
            json!({ "command": "dist", "u": word_json(&u), "v": word_json(&v), "distance": d })
        );
    } else {
        println!("{d}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_segment(
    u: &str,
    count: bool,
    _list: bool,
    backend: CountBackend,
    max_n: Option<usize>,
    as_json: bool,
) -> Result<ExitCode, Error> {
    let u: Permutation = u.parse()?;
    if count {
        let result = metric::count_segment(&u, backend)?;
        if as_json {
            println!(
                "{}",
                json!({
                    "command": "segment",
                    "mode": "count",
                    "u": word_json(&u),
                    "backend": result.backend.name(),
                    "count": result.count.to_string(),
                })
            );
        } else {
            println!("{}", result.count);
        }
    } else {
        let cap = max_n.unwrap_or(metric::DEFAULT_ENUMERATION_CAP);
        let members = metric::enumerate_segment_with_cap(&u, cap)?;
        if as_json {
            println!(
                "{}",
                json!({
                    "command": "segment",
                    "mode": "list",
                    "u": word_json(&u),
                    "count": members.len().to_string(),
                    "members": members.iter().map(word_json).collect::<Vec<_>>(),
                })
            );
        } else {
            for v in members {
                println!("{v}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Label of the Genocchi value matching the segment count at the
/// half-rotation of size n: G_{n+3} at odd n, H_{n+3} at even n.
fn genocchi_label(n: usize) -> String {
    if n % 2 == 1 {
        format!("G_{}", n + 3)
    } else {
        format!("H_{}", n + 3)
    }
}

fn cmd_sequence(n_max: usize, as_json: bool) -> Result<ExitCode, Error> {
    if n_max < 1 {
        return Err(Error::EmptyInput);
    }
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let wn = Permutation::half_rotation(n);
        let count = metric::count_segment(&wn, CountBackend::BitmaskDp)?.count;
        rows.push((n, wn, count));
    }
    if as_json {
        println!(
            "{}",
            json!({
                "command": "sequence",
                "n_max": n_max,
                "rows": rows
                    .iter()
                    .map(|(n, wn, count)| json!({
                        "n": n,
                        "word": wn.word(),
                        "count": count.to_string(),
                        "genocchi": genocchi_label(*n),
                    }))
                    .collect::<Vec<_>>(),
            })
        );
    } else {
        for (n, wn, count) in rows {
            println!("{n}\t{wn}\t{count}\t{}", genocchi_label(n));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_dumont(
    kind: DumontKind,
    size: usize,
    count: bool,
    _list: bool,
    max_n: Option<usize>,
    as_json: bool,
) -> Result<ExitCode, Error> {
    if count {
        let value = dumont::genocchi_value(kind, size)?;
        if as_json {
            println!(
                "{}",
                json!({
                    "command": "dumont",
                    "mode": "count",
                    "kind": kind.name(),
                    "size": size,
                    "count": value.to_string(),
                })
            );
        } else {
            println!("{value}");
        }
    } else {
        let cap = max_n.unwrap_or(dumont::DEFAULT_DUMONT_CAP);
        let members = dumont::enumerate_dumont_with_cap(kind, size, cap)?;
        if as_json {
            println!(
                "{}",
                json!({
                    "command": "dumont",
                    "mode": "list",
                    "kind": kind.name(),
                    "size": size,
                    "count": members.len().to_string(),
                    "members": members.iter().map(word_json).collect::<Vec<_>>(),
                })
            );
        } else {
            for q in members {
                println!("{q}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_map(u: &str, as_json: bool) -> Result<ExitCode, Error> {
    let u: Permutation = u.parse()?;
    let image = bijections::dumont_map(&u)?;
    if as_json {
        let parity = if u.len() % 2 == 1 { "odd" } else { "even" };
        println!(
            "{}",
            json!({
                "command": "map",
                "u": word_json(&u),
                "parity": parity,
                "image": word_json(&image),
            })
        );
    } else {
        println!("{image}");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify_json(report: &VerificationReport) -> serde_json::Value {
    json!({
        "command": "verify",
        "parity": report.parity.name(),
        "m": report.m,
        "ambient_size": report.ambient_size,
        "group_size": report.group_size,
        "segment_size": report.segment_size,
        "class_size": report.class_size,
        "mismatches": report.mismatches,
        "injective": report.injective,
        "image_matches_class": report.image_matches_class,
        "counterexamples": report.counterexamples.iter().map(|cx| json!({
            "source": cx.source.word(),
            "image": cx.image.word(),
            "in_segment": cx.in_segment,
            "image_in_class": cx.image_in_class,
        })).collect::<Vec<_>>(),
        "passed": report.passed(),
    })
}

fn cmd_verify(
    parity: Parity,
    m: usize,
    budget: Option<u64>,
    jobs: Option<usize>,
    as_json: bool,
) -> Result<ExitCode, Error> {
    let budget = budget.unwrap_or(bijections::DEFAULT_VERIFY_BUDGET);
    let report = with_jobs(jobs, || {
        bijections::verify_bijection_with_budget(parity, m, budget)
    })?;
    eprintln!("scanned {} permutations in {:?}", report.group_size, report.elapsed);
    if as_json {
        println!("{}", verify_json(&report));
    } else {
        let class = match parity {
            Parity::Odd => format!("first-kind class of size {}", report.ambient_size + 1),
            Parity::Even => format!("second-kind class of size {}", report.ambient_size + 2),
        };
        println!(
            "verify {} m={}: ambient S_{} ({} permutations)",
            parity.name(),
            report.m,
            report.ambient_size,
            report.group_size
        );
        println!("segment size = {}", report.segment_size);
        println!("class size = {} ({})", report.class_size, class);
        println!("injective = {}", if report.injective { "yes" } else { "no" });
        println!(
            "image matches class = {}",
            if report.image_matches_class { "yes" } else { "no" }
        );
        println!("mismatches = {}", report.mismatches);
        for cx in &report.counterexamples {
            println!(
                "counterexample: {} -> {} (in segment: {}, image in class: {})",
                cx.source, cx.image, cx.in_segment, cx.image_in_class
            );
        }
        println!("result: {}", if report.passed() { "PASS" } else { "FAIL" });
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_search(
    n: usize,
    max_n: Option<usize>,
    jobs: Option<usize>,
    as_json: bool,
) -> Result<ExitCode, Error> {
    if n < 1 {
        return Err(Error::EmptyInput);
    }
    let cap = max_n.unwrap_or(search::DEFAULT_SEARCH_CAP);
    let report = with_jobs(jobs, || search::max_segment_search_with_cap(n, cap))?;
    eprintln!("scanned S_{n} in {:?}", report.elapsed);
    let wn = Permutation::half_rotation(n);
    let (kind, size) = genocchi_counterpart(n);
    if as_json {
        println!(
            "{}",
            json!({
                "command": "search",
                "n": n,
                "max_cardinality": report.max_cardinality.to_string(),
                "argmax": report.argmax.iter().map(word_json).collect::<Vec<_>>(),
                "wn": wn.word(),
                "wn_is_argmax": report.wn_is_argmax,
                "genocchi": { "kind": kind.name(), "size": size },
            })
        );
    } else {
        println!("n = {n}");
        println!("max segment cardinality = {}", report.max_cardinality);
        println!("argmax count = {}", report.argmax.len());
        for u in &report.argmax {
            println!("argmax: {u}");
        }
        println!(
            "w_n = {wn} (in argmax: {})",
            if report.wn_is_argmax { "yes" } else { "no" }
        );
    }
    Ok(ExitCode::SUCCESS)
}
