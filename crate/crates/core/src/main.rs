//! Command-line front end.
//!
//! Exit codes: 0 success or true, 1 predicate false, 2 input error,
//! 3 resource guard exceeded.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use psemi::cycles::{find_preserved_partition, preserved_m_partition_exists};
use psemi::enumerate::{chi_classes, enumerate_set};
use psemi::membership::{self, Predicate};
use psemi::{
    count, parse_partition, profile_of, verify, EnumOptions, Error, Guard, PartitionProfile,
    SetKind, SetPartition, Strategy, Transformation,
};

#[derive(Parser)]
#[command(name = "psemi", version, about = "Partition-preserving transformation semigroups")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Lines, global = true)]
    format: Format,

    /// Truncate enumerations after this many items.
    #[arg(long, global = true)]
    limit: Option<usize>,

    /// Maximum number of candidates an exhaustive routine may visit.
    #[arg(long, default_value_t = psemi::guard::DEFAULT_GUARD, global = true)]
    guard: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Brute,
    Constructive,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Brute => Strategy::Brute,
            StrategyArg::Constructive => Strategy::Constructive,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a membership predicate for a map and a partition.
    Check {
        #[arg(short = 'p', long)]
        partition: String,
        #[arg(short = 'f', long)]
        map: String,
        /// preserves, sigma, sigma-character, sigma-topology, estar, units,
        /// idempotent or sigma-idempotent
        #[arg(long)]
        predicate: String,
    },
    /// Exact cardinality of T, Sigma, S or E-Sigma.
    Count {
        #[arg(short = 'p', long, conflicts_with = "profile", required_unless_present = "profile")]
        partition: Option<String>,
        /// size:multiplicity pairs, e.g. 2:1,1:1
        #[arg(long)]
        profile: Option<String>,
        #[arg(long)]
        set: String,
    },
    /// List the members of T, Sigma, S, E-Sigma or E-T in lexicographic order.
    Enumerate {
        #[arg(short = 'p', long)]
        partition: String,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Brute)]
        strategy: StrategyArg,
    },
    /// Classes of Sigma under equal character maps.
    Quotient {
        #[arg(short = 'p', long)]
        partition: String,
        /// Keep up to this many members per class.
        #[arg(long)]
        representatives: Option<usize>,
    },
    /// Character map and block-map family of a partition-preserving map.
    Character {
        #[arg(short = 'p', long)]
        partition: String,
        #[arg(short = 'f', long)]
        map: String,
    },
    /// A nontrivial partition preserved by a map, or "none".
    FindPartition {
        #[arg(short = 'f', long)]
        map: String,
        /// For a full cycle: ask for a preserved partition with exactly m blocks.
        #[arg(short = 'm', long)]
        m: Option<usize>,
        /// Re-check membership of the result before printing.
        #[arg(long)]
        verify: bool,
    },
    /// Run every formula and characterization check for all n <= n-max.
    Verify {
        #[arg(long, default_value_t = 5)]
        n_max: usize,
    },
}

/// A failed command, carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::GuardExceeded { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(err: csv::Error) -> Self {
        Failure {
            code: 2,
            message: err.to_string(),
        }
    }
}

type CmdResult = Result<u8, Failure>;

fn parse_pair(partition: &str, map: &str) -> Result<(SetPartition, Transformation), Error> {
    let f: Transformation = map.parse()?;
    let p = parse_partition(partition, f.n())?;
    Ok((p, f))
}

fn print_json(out: &mut impl Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn csv_writer(out: &mut impl Write) -> csv::Writer<&mut dyn Write> {
    csv::Writer::from_writer(out as &mut dyn Write)
}

fn cmd_check(g: &GlobalOpts, partition: &str, map: &str, predicate: &str) -> CmdResult {
    let pred: Predicate = predicate.parse()?;
    let (p, f) = parse_pair(partition, map)?;
    let result = pred.evaluate(&f, &p)?;

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => writeln!(out, "{result}")?,
        Format::Csv => {
            let mut w = csv_writer(&mut out);
            w.write_record(["partition", "map", "predicate", "result"])?;
            w.write_record([p.to_string(), f.to_string(), pred.to_string(), result.to_string()])?;
            w.flush()?;
        }
        Format::Json => {
            let mut obj = json!({
                "partition": p.to_string(),
                "map": f.to_string(),
                "predicate": pred.name(),
                "result": result,
            });
            match membership::character(&f, &p) {
                Ok(chi) => obj["character"] = json!(chi.to_string()),
                Err(e) => obj["witness"] = json!(e.to_string()),
            }
            if let Ok(Some(block)) = membership::missed_block(&f, &p) {
                obj["missed_block"] = json!(block);
            }
            print_json(&mut out, &obj)?;
        }
    }
    Ok(if result { 0 } else { 1 })
}

fn cmd_count(
    g: &GlobalOpts,
    partition: Option<&str>,
    profile: Option<&str>,
    set: &str,
) -> CmdResult {
    let profile: PartitionProfile = match (partition, profile) {
        (Some(text), _) => profile_of(&text.parse::<SetPartition>()?),
        (None, Some(text)) => text.parse()?,
        (None, None) => unreachable!("clap requires one of --partition/--profile"),
    };
    let kind: SetKind = set.parse()?;
    let guard = Guard::new(g.guard);
    let value = match kind {
        SetKind::T => count::count_t(&profile),
        SetKind::Sigma => count::count_sigma(&profile, guard)?,
        SetKind::Units => count::count_units(&profile),
        SetKind::IdempotentsSigma => count::count_sigma_idempotents(&profile),
        SetKind::IdempotentsT => {
            return Err(Failure {
                code: 2,
                message: "no closed form for E-T; use `enumerate --set E-T`".into(),
            })
        }
    };

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => writeln!(out, "{value}")?,
        Format::Csv => {
            let mut w = csv_writer(&mut out);
            w.write_record(["profile", "set", "count"])?;
            w.write_record([profile.to_string(), kind.to_string(), value.to_string()])?;
            w.flush()?;
        }
        Format::Json => print_json(
            &mut out,
            &json!({
                "profile": profile.to_string(),
                "set": kind.name(),
                "count": value.to_string(),
            }),
        )?,
    }
    Ok(0)
}

fn cmd_enumerate(g: &GlobalOpts, partition: &str, set: &str, strategy: StrategyArg) -> CmdResult {
    let p: SetPartition = partition.parse()?;
    let kind: SetKind = set.parse()?;
    let opts = EnumOptions {
        strategy: strategy.into(),
        limit: g.limit,
        guard: Guard::new(g.guard),
    };
    let e = enumerate_set(&p, kind, &opts)?;

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => {
            for f in &e.maps {
                writeln!(out, "{f}")?;
            }
            writeln!(out, "# total={} shown={} truncated={}", e.total, e.len(), e.truncated)?;
        }
        Format::Csv => {
            {
                let mut w = csv_writer(&mut out);
                w.write_record(["index", "map"])?;
                for (i, f) in e.maps.iter().enumerate() {
                    w.write_record([i.to_string(), f.to_string()])?;
                }
                w.flush()?;
            }
            writeln!(out, "# total={} shown={} truncated={}", e.total, e.len(), e.truncated)?;
        }
        Format::Json => print_json(
            &mut out,
            &json!({
                "partition": p.to_string(),
                "set": kind.name(),
                "maps": e.maps.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "total": e.total,
                "truncated": e.truncated,
            }),
        )?,
    }
    Ok(0)
}

fn cmd_quotient(g: &GlobalOpts, partition: &str, representatives: Option<usize>) -> CmdResult {
    let p: SetPartition = partition.parse()?;
    let guard = Guard::new(g.guard);
    let opts = EnumOptions {
        guard,
        ..EnumOptions::brute()
    };
    let classes = chi_classes(&p, &opts, representatives)?;
    let sigma = count::count_sigma_direct(&p, guard)?;
    let class_total: usize = classes.iter().map(|c| c.size).sum();
    let expected_classes = psemi::combinat::factorial(p.block_count());
    let sizes_ok = classes
        .iter()
        .all(|c| num_bigint::BigUint::from(c.size) == c.predicted_size(&p));
    let ok = sizes_ok
        && num_bigint::BigUint::from(classes.len()) == expected_classes
        && num_bigint::BigUint::from(class_total) == sigma;

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => {
            writeln!(out, "character\tsize\tpredicted")?;
            for c in &classes {
                write!(out, "{}\t{}\t{}", c.character, c.size, c.predicted_size(&p))?;
                if let Some(reps) = &c.representatives {
                    let reps: Vec<String> = reps.iter().map(ToString::to_string).collect();
                    write!(out, "\t{}", reps.join(" "))?;
                }
                writeln!(out)?;
            }
            writeln!(
                out,
                "# classes={} expected={} sum={} sigma={} ok={}",
                classes.len(),
                expected_classes,
                class_total,
                sigma,
                ok
            )?;
        }
        Format::Csv => {
            {
                let mut w = csv_writer(&mut out);
                w.write_record(["character", "size", "predicted"])?;
                for c in &classes {
                    w.write_record([
                        c.character.to_string(),
                        c.size.to_string(),
                        c.predicted_size(&p).to_string(),
                    ])?;
                }
                w.flush()?;
            }
            writeln!(
                out,
                "# classes={} expected={} sum={} sigma={} ok={}",
                classes.len(),
                expected_classes,
                class_total,
                sigma,
                ok
            )?;
        }
        Format::Json => {
            let rows: Vec<Value> = classes
                .iter()
                .map(|c| {
                    let mut row = json!({
                        "character": c.character.to_string(),
                        "size": c.size,
                        "predicted": c.predicted_size(&p).to_string(),
                    });
                    if let Some(reps) = &c.representatives {
                        row["representatives"] =
                            json!(reps.iter().map(ToString::to_string).collect::<Vec<_>>());
                    }
                    row
                })
                .collect();
            print_json(
                &mut out,
                &json!({
                    "partition": p.to_string(),
                    "classes": rows,
                    "class_count": classes.len(),
                    "expected_class_count": expected_classes.to_string(),
                    "sum": class_total,
                    "sigma": sigma.to_string(),
                    "ok": ok,
                }),
            )?;
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_character(g: &GlobalOpts, partition: &str, map: &str) -> CmdResult {
    let (p, f) = parse_pair(partition, map)?;
    let chi = membership::character(&f, &p)?;
    let family = membership::block_map_family(&f, &p)?;

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => {
            writeln!(out, "{chi}")?;
        }
        Format::Csv => {
            let mut w = csv_writer(&mut out);
            w.write_record(["block", "codomain", "points", "images"])?;
            for bm in family.maps() {
                let join = |v: &[usize]| {
                    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
                };
                w.write_record([
                    bm.domain.to_string(),
                    bm.codomain.to_string(),
                    join(&bm.points),
                    join(&bm.images),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let maps: Vec<Value> = family
                .maps()
                .iter()
                .map(|bm| {
                    json!({
                        "block": bm.domain,
                        "codomain": bm.codomain,
                        "points": bm.points,
                        "images": bm.images,
                    })
                })
                .collect();
            print_json(
                &mut out,
                &json!({
                    "partition": p.to_string(),
                    "map": f.to_string(),
                    "character": chi.to_string(),
                    "block_maps": maps,
                }),
            )?;
        }
    }
    Ok(0)
}

fn cmd_find_partition(g: &GlobalOpts, map: &str, m: Option<usize>, verify: bool) -> CmdResult {
    let f: Transformation = map.parse()?;
    let found = match m {
        Some(m) => preserved_m_partition_exists(&f, m)?,
        None => find_preserved_partition(&f),
    };
    let membership = if f.is_bijective() { "S" } else { "T" };
    if verify {
        if let Some(p) = &found {
            let ok = !p.is_trivial()
                && if f.is_bijective() {
                    membership::in_units(&f, p)?
                } else {
                    membership::preserves(&f, p)?
                };
            if !ok {
                return Err(Failure {
                    code: 1,
                    message: format!("verification failed for partition {p}"),
                });
            }
        }
    }

    let text = found.as_ref().map_or_else(|| "none".to_string(), ToString::to_string);
    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => writeln!(out, "{text}")?,
        Format::Csv => {
            let mut w = csv_writer(&mut out);
            w.write_record(["map", "partition", "membership"])?;
            w.write_record([f.to_string(), text, membership.to_string()])?;
            w.flush()?;
        }
        Format::Json => print_json(
            &mut out,
            &json!({
                "map": f.to_string(),
                "partition": found.as_ref().map(ToString::to_string),
                "membership": found.as_ref().map(|_| membership),
                "verified": verify && found.is_some(),
            }),
        )?,
    }
    Ok(if found.is_some() { 0 } else { 1 })
}

fn cmd_verify(g: &GlobalOpts, n_max: usize) -> CmdResult {
    let start = Instant::now();
    let report = verify::verify(n_max, Guard::new(g.guard))?;
    let elapsed = start.elapsed();

    let mut out = io::stdout().lock();
    match g.format {
        Format::Lines => {
            write!(out, "{}", report.render())?;
            writeln!(
                out,
                "# n_max={} cases={} passed={} elapsed={:.2}s",
                n_max,
                report.total_cases(),
                report.all_passed(),
                elapsed.as_secs_f64()
            )?;
        }
        Format::Csv => {
            let mut w = csv_writer(&mut out);
            w.write_record(["check", "n", "cases", "failures", "status"])?;
            for r in &report.results {
                let (cases, failures, status) = match &r.outcome {
                    None => (0, 0, "skipped"),
                    Some(o) => (o.cases, o.failures, if o.passed() { "pass" } else { "fail" }),
                };
                w.write_record([
                    r.name.to_string(),
                    r.n.to_string(),
                    cases.to_string(),
                    failures.to_string(),
                    status.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<Value> = report
                .results
                .iter()
                .map(|r| match &r.outcome {
                    None => json!({"check": r.name, "n": r.n, "status": "skipped"}),
                    Some(o) => json!({
                        "check": r.name,
                        "n": r.n,
                        "cases": o.cases,
                        "failures": o.failures,
                        "status": if o.passed() { "pass" } else { "fail" },
                        "first_failure": o.first_failure,
                    }),
                })
                .collect();
            print_json(
                &mut out,
                &json!({"n_max": n_max, "passed": report.all_passed(), "results": rows}),
            )?;
        }
    }
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn run(cli: Cli) -> CmdResult {
    let g = &cli.global;
    match &cli.command {
        Command::Check {
            partition,
            map,
            predicate,
        } => cmd_check(g, partition, map, predicate),
        Command::Count {
            partition,
            profile,
            set,
        } => cmd_count(g, partition.as_deref(), profile.as_deref(), set),
        Command::Enumerate {
            partition,
            set,
            strategy,
        } => cmd_enumerate(g, partition, set, *strategy),
        Command::Quotient {
            partition,
            representatives,
        } => cmd_quotient(g, partition, *representatives),
        Command::Character { partition, map } => cmd_character(g, partition, map),
        Command::FindPartition { map, m, verify } => cmd_find_partition(g, map, *m, *verify),
        Command::Verify { n_max } => cmd_verify(g, *n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
