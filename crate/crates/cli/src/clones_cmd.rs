//! Batch clone-proximity reports: per-pair scores, per-profile minima,
//! distribution data for the min-score histograms, and a JSON summary with a
//! party split when labels exist.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use cloneaudit_core::clones::{clone_report, Rational};
use cloneaudit_core::ingest::PartyRelation;
use cloneaudit_core::Candidate;

use crate::config::ExperimentConfig;
use crate::inputs::{resolve, NamedProfile};
use crate::report::{float_column, rational_to_f64, Fraction};

#[derive(Debug, Serialize)]
pub struct PartySummary {
    pub labeled_profiles: usize,
    /// Threshold for the "close pair" bucket (the second bucket boundary).
    pub low_alpha_threshold: String,
    pub low_alpha_pairs: u64,
    pub low_alpha_same_party: u64,
    pub low_alpha_same_party_share: Option<f64>,
    pub cross_party_mean_min_alpha: Option<f64>,
    pub cross_party_mean_min_beta: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct ClonesSummary {
    pub profile_count: usize,
    pub file_errors: usize,
    pub profiles_with_perfect_clones: usize,
    pub perfect_clone_share: f64,
    pub mean_min_alpha: f64,
    pub mean_min_beta: f64,
    pub party: Option<PartySummary>,
}

fn pair_label(p: &NamedProfile, pair: (Candidate, Candidate)) -> String {
    format!("{}|{}", p.profile.name(pair.0), p.profile.name(pair.1))
}

pub fn run(config: &ExperimentConfig) -> Result<ClonesSummary> {
    let resolved = resolve(config)?;
    for error in &resolved.errors {
        eprintln!("warning: {error}");
    }
    std::fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;

    let mut pairs_csv = csv::Writer::from_writer(create(&config.out_dir, "pairs.csv")?);
    pairs_csv.write_record([
        "profile",
        "x",
        "y",
        "alpha_exact",
        "alpha",
        "beta_exact",
        "beta",
        "nonadjacent",
        "swaps",
        "party",
    ])?;
    let mut profiles_csv = csv::Writer::from_writer(create(&config.out_dir, "profiles.csv")?);
    profiles_csv.write_record([
        "profile",
        "m",
        "n",
        "discarded_voters",
        "min_alpha_exact",
        "min_alpha",
        "min_beta_exact",
        "min_beta",
        "perfect_pair_count",
        "perfect_pairs",
        "min_alpha_party",
        "min_alpha_pairs",
        "min_beta_pairs",
    ])?;

    let low_threshold = config.alpha_buckets.get(1).copied().unwrap_or(Rational::new(1, 5));
    let mut alpha_histogram: BTreeMap<Rational, u64> = BTreeMap::new();
    let mut beta_histogram: BTreeMap<Rational, u64> = BTreeMap::new();
    let mut perfect_profiles = 0usize;
    let mut sum_min_alpha = 0.0;
    let mut sum_min_beta = 0.0;
    let mut labeled_profiles = 0usize;
    let mut low_alpha = Fraction::default();
    let mut cross_minima: Vec<(f64, f64)> = Vec::new();

    let mut scored_profiles = 0usize;
    for named in &resolved.profiles {
        if named.profile.candidate_count() < 2 {
            eprintln!("warning: {}: single candidate, no pairs to score", named.name);
            continue;
        }
        scored_profiles += 1;
        let report = clone_report(&named.profile)
            .with_context(|| format!("scoring {}", named.name))?;
        let labeled = !named.parties.is_empty();
        if labeled {
            labeled_profiles += 1;
        }
        let mut cross_min: Option<(Rational, Rational)> = None;
        for score in &report.scores {
            let relation = named.parties.relation(score.x, score.y);
            if labeled && score.alpha > Rational::new(0, 1) && score.alpha <= low_threshold {
                // Tallied as "violated" when the close pair is same-party.
                low_alpha.tally(relation == PartyRelation::Same);
            }
            if labeled && relation == PartyRelation::Cross {
                cross_min = Some(match cross_min {
                    None => (score.alpha, score.beta),
                    Some((a, b)) => (a.min(score.alpha), b.min(score.beta)),
                });
            }
            pairs_csv.write_record([
                named.name.as_str(),
                named.profile.name(score.x),
                named.profile.name(score.y),
                &score.alpha.to_string(),
                &float_column(rational_to_f64(&score.alpha)),
                &score.beta.to_string(),
                &float_column(rational_to_f64(&score.beta)),
                &score.nonadjacent_count.to_string(),
                &score.swap_count.to_string(),
                relation.name(),
            ])?;
        }
        if let Some((a, b)) = cross_min {
            cross_minima.push((rational_to_f64(&a), rational_to_f64(&b)));
        }
        if !report.perfect_pairs.is_empty() {
            perfect_profiles += 1;
        }
        sum_min_alpha += rational_to_f64(&report.min_alpha);
        sum_min_beta += rational_to_f64(&report.min_beta);
        *alpha_histogram.entry(report.min_alpha).or_default() += 1;
        *beta_histogram.entry(report.min_beta).or_default() += 1;
        // Party relation common to every min-score pair, or "mixed".
        let min_alpha_party = {
            let relations: Vec<PartyRelation> = report
                .min_alpha_pairs
                .iter()
                .map(|&(x, y)| named.parties.relation(x, y))
                .collect();
            if relations.windows(2).all(|w| w[0] == w[1]) {
                relations[0].name()
            } else {
                "mixed"
            }
        };
        profiles_csv.write_record([
            named.name.as_str(),
            &named.profile.candidate_count().to_string(),
            &named.profile.voter_count().to_string(),
            &named.discarded_voters.to_string(),
            &report.min_alpha.to_string(),
            &float_column(rational_to_f64(&report.min_alpha)),
            &report.min_beta.to_string(),
            &float_column(rational_to_f64(&report.min_beta)),
            &report.perfect_pairs.len().to_string(),
            &report
                .perfect_pairs
                .iter()
                .map(|&pair| pair_label(named, pair))
                .collect::<Vec<_>>()
                .join(";"),
            min_alpha_party,
            &report
                .min_alpha_pairs
                .iter()
                .map(|&pair| pair_label(named, pair))
                .collect::<Vec<_>>()
                .join(";"),
            &report
                .min_beta_pairs
                .iter()
                .map(|&pair| pair_label(named, pair))
                .collect::<Vec<_>>()
                .join(";"),
        ])?;
    }
    pairs_csv.flush()?;
    profiles_csv.flush()?;

    let mut dist_csv = csv::Writer::from_writer(create(&config.out_dir, "min_distributions.csv")?);
    dist_csv.write_record(["metric", "value_exact", "value", "profiles"])?;
    for (metric, histogram) in [("min_alpha", &alpha_histogram), ("min_beta", &beta_histogram)] {
        for (value, count) in histogram {
            dist_csv.write_record([
                metric,
                &value.to_string(),
                &float_column(rational_to_f64(value)),
                &count.to_string(),
            ])?;
        }
    }
    dist_csv.flush()?;

    if scored_profiles == 0 {
        anyhow::bail!("no profile has at least two candidates");
    }
    let count = scored_profiles;
    let summary = ClonesSummary {
        profile_count: count,
        file_errors: resolved.errors.len(),
        profiles_with_perfect_clones: perfect_profiles,
        perfect_clone_share: perfect_profiles as f64 / count as f64,
        mean_min_alpha: sum_min_alpha / count as f64,
        mean_min_beta: sum_min_beta / count as f64,
        party: (labeled_profiles > 0).then(|| PartySummary {
            labeled_profiles,
            low_alpha_threshold: low_threshold.to_string(),
            low_alpha_pairs: low_alpha.total,
            low_alpha_same_party: low_alpha.violated,
            low_alpha_same_party_share: low_alpha.proportion,
            cross_party_mean_min_alpha: mean(cross_minima.iter().map(|x| x.0)),
            cross_party_mean_min_beta: mean(cross_minima.iter().map(|x| x.1)),
        }),
    };
    std::fs::write(
        config.out_dir.join("summary.json"),
        serde_json::to_string_pretty(&summary)? + "\n",
    )?;

    println!(
        "{} profiles ({} file errors); perfect clones in {} ({:.1}%)",
        summary.profile_count,
        summary.file_errors,
        summary.profiles_with_perfect_clones,
        100.0 * summary.perfect_clone_share,
    );
    println!(
        "mean min-alpha {:.4}, mean min-beta {:.4}",
        summary.mean_min_alpha, summary.mean_min_beta
    );
    Ok(summary)
}

fn mean(values: impl Iterator<Item = f64>) -> Option<f64> {
    let collected: Vec<f64> = values.collect();
    if collected.is_empty() {
        None
    } else {
        Some(collected.iter().sum::<f64>() / collected.len() as f64)
    }
}

fn create(dir: &Path, name: &str) -> Result<File> {
    File::create(dir.join(name)).with_context(|| format!("creating {name}"))
}
