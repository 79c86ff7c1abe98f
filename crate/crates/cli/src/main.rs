mod cache;
mod engine;
mod failure;
mod source;
mod sweep;

use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use ict_core::groups::{Caps, Family};
use ict_core::oracle::{census_left_loops, classify_by_table_iso, render_dump};

use cache::Cache;
use engine::{compute, crosscheck, MethodArg};
use failure::Failure;
use source::{PairArgs, PairSource};

#[derive(Parser, Debug)]
#[command(name = "ictool", version, about = "Count isomorphism classes of transversals")]
struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(flatten)]
    caps: CapArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CapArgs {
    /// Largest group order materialized
    #[arg(long, global = true, value_name = "N")]
    max_group_order: Option<usize>,
    /// Largest number of transversals or tables enumerated
    #[arg(long, global = true, value_name = "N")]
    max_transversals: Option<u64>,
    /// Largest number of relabelings of {2..n} searched
    #[arg(long, global = true, value_name = "N")]
    max_relabelings: Option<usize>,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        let d = Caps::default();
        Caps {
            max_group_order: self.max_group_order.unwrap_or(d.max_group_order),
            max_transversals: self.max_transversals.unwrap_or(d.max_transversals),
            max_relabelings: self.max_relabelings.unwrap_or(d.max_relabelings),
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long, short, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute ict(G, H) for one pair
    Ict {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
        #[command(flatten)]
        out: OutputArgs,
        /// Skip the result cache
        #[arg(long)]
        no_cache: bool,
        /// Cache directory (default: $ICTOOL_CACHE_DIR, $XDG_CACHE_HOME/ictool or ~/.cache/ictool)
        #[arg(long, value_name = "DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Classify all left loop tables of order N with identity 1
    Census {
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every applicable engine and both oracles on one pair
    Crosscheck {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compute ict over a set of pairs and check the small-value facts
    Sweep {
        /// Dihedral range, e.g. 3..10
        #[arg(long, value_parser = sweep::parse_range)]
        dihedral: Option<std::ops::RangeInclusive<usize>>,
        /// Symmetric range
        #[arg(long, value_parser = sweep::parse_range)]
        sym: Option<std::ops::RangeInclusive<usize>>,
        /// Alternating range
        #[arg(long, value_parser = sweep::parse_range)]
        alt: Option<std::ops::RangeInclusive<usize>>,
        /// A pq pair as P,Q (repeatable)
        #[arg(long, value_parser = sweep::parse_pq)]
        pq: Vec<(usize, usize)>,
        /// Fixture file (repeatable)
        #[arg(long)]
        fixture: Vec<PathBuf>,
        /// Include the bundled fixtures, normal controls among them
        #[arg(long)]
        builtin: bool,
        /// The standard set: small family members plus the bundled fixtures
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Dump one representative per isomorphism class of transversals
    Classes {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            process::exit(1);
        }
    }
    let caps = cli.caps.caps();
    if let Err(e) = run(cli.command, &caps) {
        eprintln!("error: {e}");
        process::exit(e.exit_code());
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializes") + "\n"
}

fn run(command: Command, caps: &Caps) -> Result<(), Failure> {
    match command {
        Command::Ict {
            pair,
            method,
            out,
            no_cache,
            cache_dir,
        } => {
            let source = pair.resolve()?;
            let key = format!(
                "{}|{}|{},{},{}",
                source.identity(),
                method.name(),
                caps.max_group_order,
                caps.max_transversals,
                caps.max_relabelings
            );
            let mut cache = if no_cache {
                None
            } else {
                cache_dir.or_else(cache::default_dir).map(|d| Cache::open(&d))
            };
            let cached = cache.as_ref().and_then(|c| c.get(&key)).cloned();
            let report = match cached {
                Some(r) => {
                    eprintln!("cache: hit");
                    r
                }
                None => {
                    let r = compute(&source, method, caps)?;
                    if let Some(c) = cache.as_mut() {
                        if let Err(e) = c.put(key, r.clone()) {
                            eprintln!("warning: cache not written: {e}");
                        }
                    }
                    r
                }
            };
            let text = match out.format {
                Format::Text => format!("pair: {}\n{report}", source.label()),
                Format::Json => report.to_json() + "\n",
            };
            emit(&out, &text)
        }
        Command::Census { n, out } => {
            let result = census_left_loops(n, caps)?;
            let summary = CensusSummary {
                order: n,
                class_count: result.class_count.to_string(),
                total: result.total.to_string(),
                size_distribution: result
                    .size_distribution()
                    .into_iter()
                    .map(|(s, k)| (s.to_string(), k))
                    .collect(),
            };
            let text = match out.format {
                Format::Text => summary.render(),
                Format::Json => to_json(&summary),
            };
            emit(&out, &text)
        }
        Command::Crosscheck { pair, out } => {
            let source = pair.resolve()?;
            let report = crosscheck(&source, caps)?;
            let text = match out.format {
                Format::Text => report.render(),
                Format::Json => to_json(&report),
            };
            emit(&out, &text)?;
            report.check()
        }
        Command::Sweep {
            dihedral,
            sym,
            alt,
            pq,
            fixture,
            builtin,
            all,
            out,
        } => {
            let mut sources = if all { sweep::standard_set() } else { Vec::new() };
            let families = |r: Option<std::ops::RangeInclusive<usize>>, f: fn(usize) -> Family| {
                r.into_iter().flatten().map(move |n| PairSource::Family(f(n)))
            };
            sources.extend(families(sym, Family::Sym));
            sources.extend(families(alt, Family::Alt));
            sources.extend(families(dihedral, Family::Dihedral));
            sources.extend(pq.into_iter().map(|(p, q)| PairSource::Family(Family::Pq(p, q))));
            for path in fixture {
                let args = PairArgs {
                    sym: None,
                    alt: None,
                    dihedral: None,
                    pq: None,
                    fixture: Some(path),
                };
                sources.push(args.resolve()?);
            }
            if builtin && !all {
                sources.extend(sweep::builtin_fixtures());
            }
            if sources.is_empty() {
                return Err(Failure::Usage("sweep needs at least one pair; try --all".into()));
            }
            let rows = sweep::run_sweep(&sources, caps)?;
            let text = match out.format {
                Format::Text => sweep::render(&rows),
                Format::Json => to_json(&rows),
            };
            emit(&out, &text)?;
            sweep::check_facts(&rows)
        }
        Command::Classes { pair, out } => {
            let source = pair.resolve()?;
            let built = source.build(caps)?;
            let result = classify_by_table_iso(&built, caps)?;
            let text = match out.format {
                Format::Text => render_dump(&result),
                Format::Json => to_json(&result),
            };
            emit(&out, &text)?;
            if out.output.is_some() {
                let total: BigUint = result.class_sizes.iter().sum();
                println!("{} classes over {total} transversals", result.class_count);
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CensusSummary {
    order: usize,
    class_count: String,
    total: String,
    /// `(class size, number of classes of that size)`, ascending by size.
    size_distribution: Vec<(String, usize)>,
}

impl CensusSummary {
    fn render(&self) -> String {
        let mut out = format!(
            "order {}: {} classes among {} left loop tables with identity 1\nclass sizes:\n",
            self.order, self.class_count, self.total
        );
        for (size, count) in &self.size_distribution {
            out.push_str(&format!("  {size:>8} x {count}\n"));
        }
        out
    }
}
