use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use cloneaudit_cli::config::{
    parse_buckets, parse_culture, parse_policy, parse_rules, ConfigFile, ExperimentConfig,
};
use cloneaudit_cli::{axioms_cmd, clones_cmd, regress, sample_cmd};
use cloneaudit_core::samplers::{Culture, CultureSpec};

/// Clone-proximity reports and independence-axiom audits for ordinal
/// elections.
#[derive(Parser)]
#[command(name = "cloneaudit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-pair and per-profile clone proximity reports (CSV + JSON)
    Clones(BatchArgs),
    /// Strong/weak independence and independence-of-losers audits
    Axioms(BatchArgs),
    /// Sample profiles from a culture and write them with a manifest
    Sample(BatchArgs),
    /// Run the bundled fixture regression suite
    Regress,
}

#[derive(Args, Debug)]
struct BatchArgs {
    /// Declarative TOML config; explicit flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Input file glob (repeatable)
    #[arg(long = "input")]
    inputs: Vec<String>,
    /// Culture to sample: ic, identity, antagonistic, uniform, urn,
    /// single-peaked, single-crossing, euclidean
    #[arg(long)]
    culture: Option<String>,
    /// Candidates per sampled profile
    #[arg(long)]
    m: Option<usize>,
    /// Voters per sampled profile
    #[arg(long)]
    n: Option<u64>,
    /// Number of profiles to sample
    #[arg(long)]
    trials: Option<u64>,
    /// Urn contagion parameter (default 0.5)
    #[arg(long)]
    contagion: Option<f64>,
    /// Euclidean space: 1d, 2d, 3d, circle (default 2d)
    #[arg(long)]
    space: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    /// Incomplete-ballot policy: drop-incomplete or strict-complete
    #[arg(long)]
    policy: Option<String>,
    /// Party sidecar applied to every input file
    #[arg(long)]
    parties: Option<PathBuf>,
    /// Rules to audit, comma separated (default all)
    #[arg(long)]
    rules: Vec<String>,
    /// Deletion-score bucket boundaries, comma separated rationals
    #[arg(long)]
    buckets: Vec<String>,
    /// Tie-breaking state cap per evaluation
    #[arg(long)]
    cap: Option<u64>,
    /// Maximum number of pairs sharing one margin value
    #[arg(long = "group-cap")]
    group_cap: Option<usize>,
    /// Output directory
    #[arg(long)]
    out: Option<PathBuf>,
    /// File name prefix for sampled profiles
    #[arg(long, default_value = "sample")]
    prefix: String,
}

fn build_config(args: &BatchArgs) -> Result<ExperimentConfig> {
    let mut config = match &args.config {
        Some(path) => ExperimentConfig::from_file(ConfigFile::load(path)?)?,
        None => ExperimentConfig::default(),
    };
    if !args.inputs.is_empty() {
        config.inputs = args.inputs.clone();
    }
    if let Some(policy) = &args.policy {
        config.policy = parse_policy(policy)?;
    }
    if args.parties.is_some() {
        config.parties = args.parties.clone();
    }
    if !args.rules.is_empty() {
        config.rules = parse_rules(&args.rules)?;
    }
    if !args.buckets.is_empty() {
        config.alpha_buckets = parse_buckets(&args.buckets)?;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
        if let Some(culture) = &mut config.culture {
            culture.seed = seed;
        }
    }
    if let Some(cap) = args.cap {
        config.limits.state_cap = cap;
    }
    if let Some(cap) = args.group_cap {
        config.limits.margin_group_cap = cap;
    }
    if let Some(out) = &args.out {
        config.out_dir = out.clone();
    }
    if let Some(trials) = args.trials {
        config.trials = trials;
    }
    if let Some(name) = &args.culture {
        let culture = parse_culture(
            name,
            args.contagion.unwrap_or(0.5),
            args.space.as_deref().unwrap_or("2d"),
        )?;
        let m = args
            .m
            .or(config.culture.as_ref().map(|c| c.m))
            .context("--culture needs --m")?;
        let n = match args.n.or(config.culture.as_ref().map(|c| c.n)) {
            Some(n) => n,
            None if culture == Culture::UniformComplete => 0,
            None => bail!("--culture needs --n"),
        };
        config.culture = Some(CultureSpec {
            culture,
            m,
            n,
            seed: config.seed,
        });
    }
    config.validate()?;
    Ok(config)
}

fn run() -> Result<u8> {
    match Cli::parse().command {
        Command::Clones(args) => {
            clones_cmd::run(&build_config(&args)?)?;
            Ok(0)
        }
        Command::Axioms(args) => {
            let outcome = axioms_cmd::run(&build_config(&args)?)?;
            if outcome.evaluated_cells == 0 && outcome.resource_cells > 0 {
                eprintln!("error: every cell exceeded the tie-breaking caps");
                Ok(3)
            } else {
                Ok(0)
            }
        }
        Command::Sample(args) => {
            let config = build_config(&args)?;
            let spec = config
                .culture
                .clone()
                .context("sample needs --culture (or a [culture] config section)")?;
            sample_cmd::run(&spec, config.trials, &config.out_dir, &args.prefix)?;
            Ok(0)
        }
        Command::Regress => {
            let report = regress::run();
            for (_, line) in &report.checks {
                println!("{line}");
            }
            if report.passed() {
                println!("regress: all {} expectations hold", report.checks.len());
                Ok(0)
            } else {
                eprintln!(
                    "regress: {} of {} expectations failed",
                    report.failures(),
                    report.checks.len()
                );
                Ok(1)
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
