//! Declarative experiment configuration: a TOML file mirrors the command
//! line flags, and explicit flags override file values.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use serde::Deserialize;

use cloneaudit_core::clones::Rational;
use cloneaudit_core::rules::{PutLimits, RuleId};
use cloneaudit_core::samplers::{Culture, CultureSpec, EuclideanSpace};
use cloneaudit_core::ingest::Policy;

/// Parses a threshold like `0.2`, `1/3`, or `1` into an exact rational, so
/// bucket comparisons never go through floating point.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: i64 = num.trim().parse().context("bad numerator")?;
        let den: i64 = den.trim().parse().context("bad denominator")?;
        if den == 0 {
            bail!("zero denominator in '{text}'");
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        let int_part: i64 = if int.is_empty() {
            0
        } else {
            int.parse().context("bad integer part")?
        };
        if frac.len() > 9 || frac.chars().any(|c| !c.is_ascii_digit()) {
            bail!("bad decimal '{text}'");
        }
        let scale = 10i64.pow(frac.len() as u32);
        let frac_part: i64 = if frac.is_empty() { 0 } else { frac.parse()? };
        return Ok(Rational::new(int_part * scale + frac_part, scale));
    }
    Ok(Rational::from_integer(text.parse().context("bad integer")?))
}

pub fn parse_policy(text: &str) -> Result<Policy> {
    match text.to_ascii_lowercase().as_str() {
        "drop-incomplete" | "drop" => Ok(Policy::DropIncomplete),
        "strict-complete" | "strict" => Ok(Policy::StrictComplete),
        other => bail!("unknown policy '{other}' (use drop-incomplete or strict-complete)"),
    }
}

pub fn parse_culture(name: &str, contagion: f64, space: &str) -> Result<Culture> {
    let space = match space.to_ascii_lowercase().as_str() {
        "1d" | "line" => EuclideanSpace::Line,
        "2d" | "square" => EuclideanSpace::Square,
        "3d" | "cube" => EuclideanSpace::Cube,
        "circle" => EuclideanSpace::Circle,
        other => bail!("unknown euclidean space '{other}'"),
    };
    match name.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
        "ic" | "impartialculture" => Ok(Culture::ImpartialCulture),
        "identity" | "id" => Ok(Culture::Identity),
        "antagonistic" | "an" => Ok(Culture::Antagonistic),
        "uniform" | "uniformcomplete" => Ok(Culture::UniformComplete),
        "urn" => Ok(Culture::Urn { contagion }),
        "singlepeaked" | "sp" => Ok(Culture::SinglePeaked),
        "singlecrossing" | "sc" => Ok(Culture::SingleCrossing),
        "euclidean" => Ok(Culture::Euclidean { space }),
        other => bail!("unknown culture '{other}'"),
    }
}

/// Raw file shape; every field optional so the file can carry just the parts
/// a run needs.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub inputs: Option<Vec<String>>,
    pub policy: Option<String>,
    pub parties: Option<PathBuf>,
    pub rules: Option<Vec<String>>,
    pub alpha_buckets: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub state_cap: Option<u64>,
    pub group_cap: Option<usize>,
    pub out_dir: Option<PathBuf>,
    pub trials: Option<u64>,
    pub culture: Option<CultureFile>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CultureFile {
    pub name: String,
    pub m: usize,
    pub n: u64,
    pub contagion: Option<f64>,
    pub space: Option<String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Fully resolved settings for one batch run.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// File globs; empty when sampling a culture batch instead.
    pub inputs: Vec<String>,
    pub policy: Policy,
    /// Optional sidecar applied to every input file.
    pub parties: Option<PathBuf>,
    pub rules: Vec<RuleId>,
    /// Strictly increasing bucket boundaries in [0, 1], starting at 0.
    pub alpha_buckets: Vec<Rational>,
    pub seed: u64,
    pub limits: PutLimits,
    pub out_dir: PathBuf,
    /// Number of sampled profiles for culture batches.
    pub trials: u64,
    pub culture: Option<CultureSpec>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            inputs: Vec::new(),
            policy: Policy::DropIncomplete,
            parties: None,
            rules: RuleId::ALL.to_vec(),
            alpha_buckets: default_buckets(),
            seed: 0,
            limits: PutLimits::default(),
            out_dir: PathBuf::from("out"),
            trials: 100,
            culture: None,
        }
    }
}

pub fn default_buckets() -> Vec<Rational> {
    (0..=5).map(|i| Rational::new(i, 5)).collect()
}

impl ExperimentConfig {
    /// Applies a config file under the defaults; command line flags are
    /// merged on top by the caller.
    pub fn from_file(file: ConfigFile) -> Result<Self> {
        let mut config = ExperimentConfig::default();
        if let Some(inputs) = file.inputs {
            config.inputs = inputs;
        }
        if let Some(policy) = file.policy {
            config.policy = parse_policy(&policy)?;
        }
        config.parties = file.parties;
        if let Some(rules) = file.rules {
            config.rules = parse_rules(&rules)?;
        }
        if let Some(buckets) = file.alpha_buckets {
            config.alpha_buckets = parse_buckets(&buckets)?;
        }
        if let Some(seed) = file.seed {
            config.seed = seed;
        }
        if let Some(cap) = file.state_cap {
            config.limits.state_cap = cap;
        }
        if let Some(cap) = file.group_cap {
            config.limits.margin_group_cap = cap;
        }
        if let Some(dir) = file.out_dir {
            config.out_dir = dir;
        }
        if let Some(trials) = file.trials {
            config.trials = trials;
        }
        if let Some(culture) = file.culture {
            config.culture = Some(CultureSpec {
                culture: parse_culture(
                    &culture.name,
                    culture.contagion.unwrap_or(0.5),
                    culture.space.as_deref().unwrap_or("2d"),
                )?,
                m: culture.m,
                n: culture.n,
                seed: config.seed,
            });
        }
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            bail!("trial count must be at least 1");
        }
        if self.rules.is_empty() {
            bail!("at least one rule is required");
        }
        let b = &self.alpha_buckets;
        if b.len() < 2 || b[0] != Rational::new(0, 1) {
            bail!("alpha buckets must start at 0 and contain at least one interval");
        }
        if b.windows(2).any(|w| w[0] >= w[1]) {
            bail!("alpha buckets must be strictly increasing");
        }
        if *b.last().unwrap() > Rational::new(1, 1) {
            bail!("alpha buckets must stay within [0, 1]");
        }
        Ok(())
    }
}

pub fn parse_rules(names: &[String]) -> Result<Vec<RuleId>> {
    let mut rules = Vec::new();
    for name in names {
        for part in name.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if part == "all" {
                rules.extend(RuleId::ALL);
                continue;
            }
            rules.push(RuleId::from_str(part).map_err(|e| anyhow::anyhow!(e))?);
        }
    }
    rules.sort();
    rules.dedup();
    if rules.is_empty() {
        bail!("no rules given");
    }
    Ok(rules)
}

pub fn parse_buckets(texts: &[String]) -> Result<Vec<Rational>> {
    let mut buckets = Vec::new();
    for text in texts {
        for part in text.split(',') {
            let part = part.trim();
            if !part.is_empty() {
                buckets.push(parse_rational(part)?);
            }
        }
    }
    Ok(buckets)
}
