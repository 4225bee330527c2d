//! Batch axiom audits: per-pair strong/weak independence verdicts bucketed by
//! deletion score, independence of losers per profile, aggregated violation
//! proportions, and satisfaction curves over the score buckets.
//!
//! Profiles are audited by a work pool; aggregation runs in one deterministic
//! reduction over the name-sorted results, so concurrency never changes the
//! output bytes. Cells that exceed a tie-breaking cap are excluded from the
//! denominators and counted separately, never silently dropped.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::Path;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use cloneaudit_core::axioms::{
    check_independence_of_losers, check_pair_independence, AxiomVerdict, Condition,
};
use cloneaudit_core::clones::{clone_report, Rational};
use cloneaudit_core::rules::RuleId;
use cloneaudit_core::{Candidate, Error, Profile};

use crate::config::ExperimentConfig;
use crate::inputs::{resolve, NamedProfile};
use crate::report::{float_column, rational_to_f64, Fraction};

#[derive(Debug, Default, Serialize, PartialEq)]
pub struct VariantCell {
    pub strong: Fraction,
    pub weak: Fraction,
}

impl VariantCell {
    fn tally(&mut self, strong_violated: bool, weak_violated: bool) {
        self.strong.tally(strong_violated);
        self.weak.tally(weak_violated);
    }
}

#[derive(Debug, Default, Serialize, PartialEq)]
pub struct RuleSummary {
    /// Pairs with deletion score exactly zero.
    pub perfect_clones: VariantCell,
    /// Pairs with score in (0, low_alpha_threshold].
    pub approx_clones: VariantCell,
    /// Every pair, independent of score.
    pub all_pairs: VariantCell,
    /// Profiles violating independence of losers.
    pub losers: Fraction,
    /// (profile, rule) cells skipped because a tie-breaking cap was hit.
    pub resource_errors: u64,
}

#[derive(Debug, Serialize)]
pub struct AxiomsSummary {
    pub profile_count: usize,
    pub skipped_small_profiles: usize,
    pub file_errors: usize,
    pub low_alpha_threshold: String,
    pub rules: BTreeMap<String, RuleSummary>,
}

pub struct AxiomsOutcome {
    pub summary: AxiomsSummary,
    pub evaluated_cells: u64,
    pub resource_cells: u64,
}

struct PairRow {
    x: Candidate,
    y: Candidate,
    alpha: Rational,
    strong: AxiomVerdict,
    weak: AxiomVerdict,
}

struct CellData {
    pairs: Vec<PairRow>,
    losers: AxiomVerdict,
}

fn audit_cell(profile: &Profile, rule: RuleId, config: &ExperimentConfig) -> Result<CellData, Error> {
    let m = profile.candidate_count();
    let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
    let scores = clone_report(profile)?;
    for score in scores.scores {
        let both = check_pair_independence(rule, profile, score.x, score.y, &config.limits)?;
        pairs.push(PairRow {
            x: score.x,
            y: score.y,
            alpha: score.alpha,
            strong: both.strong,
            weak: both.weak,
        });
    }
    let losers = check_independence_of_losers(rule, profile, &config.limits)?;
    Ok(CellData { pairs, losers })
}

fn witness_detail(profile: &Profile, verdict: &AxiomVerdict) -> String {
    if verdict.satisfied {
        return String::new();
    }
    verdict
        .removals
        .iter()
        .filter(|w| !w.failed.is_empty())
        .map(|w| {
            let conditions: Vec<&str> = w
                .failed
                .iter()
                .map(|c| match c {
                    Condition::NonCloneWinners => "non_clone_winners",
                    Condition::CloneTransfer => "clone_transfer",
                    Condition::OutcomeChanged => "outcome_changed",
                })
                .collect();
            format!("drop {}[{}]", profile.name(w.removed), conditions.join("|"))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Bucket index for a score: 0 for exact zero, the first interval
/// (b[i-1], b[i]] containing it otherwise, or buckets.len() for scores above
/// the last configured boundary.
fn bucket_index(buckets: &[Rational], alpha: Rational) -> usize {
    if alpha == Rational::new(0, 1) {
        return 0;
    }
    for i in 1..buckets.len() {
        if alpha <= buckets[i] {
            return i;
        }
    }
    buckets.len()
}

fn bucket_bounds(buckets: &[Rational], bucket: usize) -> (Rational, Rational) {
    if bucket == 0 {
        (Rational::new(0, 1), Rational::new(0, 1))
    } else if bucket < buckets.len() {
        (buckets[bucket - 1], buckets[bucket])
    } else {
        (buckets[buckets.len() - 1], Rational::new(1, 1))
    }
}

pub fn run(config: &ExperimentConfig) -> Result<AxiomsOutcome> {
    let resolved = resolve(config)?;
    for error in &resolved.errors {
        eprintln!("warning: {error}");
    }
    std::fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;

    let (auditable, small): (Vec<&NamedProfile>, Vec<&NamedProfile>) = resolved
        .profiles
        .iter()
        .partition(|p| p.profile.candidate_count() >= 3);
    for skipped in &small {
        eprintln!(
            "warning: {}: fewer than 3 candidates, no checkable pair",
            skipped.name
        );
    }

    // Parallel audit; rayon's collect preserves input order.
    let cells: Vec<Vec<(RuleId, Result<CellData, Error>)>> = auditable
        .par_iter()
        .map(|named| {
            config
                .rules
                .iter()
                .map(|&rule| (rule, audit_cell(&named.profile, rule, config)))
                .collect()
        })
        .collect();

    let mut verdicts_csv = csv::Writer::from_writer(create(&config.out_dir, "verdicts.csv")?);
    verdicts_csv.write_record([
        "profile", "rule", "x", "y", "alpha_exact", "alpha", "axiom", "satisfied", "detail",
    ])?;
    let mut resource_csv = csv::Writer::from_writer(create(&config.out_dir, "resource_errors.csv")?);
    resource_csv.write_record(["profile", "rule", "error"])?;

    let low_threshold = config
        .alpha_buckets
        .get(1)
        .copied()
        .unwrap_or(Rational::new(1, 5));
    let mut rules: BTreeMap<String, RuleSummary> = config
        .rules
        .iter()
        .map(|r| (r.name().to_string(), RuleSummary::default()))
        .collect();
    // curve[(rule, bucket)] = (strong fraction, weak fraction)
    let mut curve: BTreeMap<(RuleId, usize), VariantCell> = BTreeMap::new();
    let mut evaluated_cells = 0u64;
    let mut resource_cells = 0u64;

    for (named, cell_results) in auditable.iter().zip(cells) {
        for (rule, outcome) in cell_results {
            let summary = rules.get_mut(rule.name()).expect("rule present");
            let cell = match outcome {
                Ok(cell) => cell,
                Err(e) if e.is_resource() => {
                    summary.resource_errors += 1;
                    resource_cells += 1;
                    resource_csv.write_record([
                        named.name.as_str(),
                        rule.name(),
                        &e.to_string(),
                    ])?;
                    continue;
                }
                Err(e) => {
                    anyhow::bail!("{}: {rule}: {e}", named.name);
                }
            };
            evaluated_cells += 1;
            for row in &cell.pairs {
                let strong_violated = !row.strong.satisfied;
                let weak_violated = !row.weak.satisfied;
                if row.alpha == Rational::new(0, 1) {
                    summary.perfect_clones.tally(strong_violated, weak_violated);
                } else if row.alpha <= low_threshold {
                    summary.approx_clones.tally(strong_violated, weak_violated);
                }
                summary.all_pairs.tally(strong_violated, weak_violated);
                curve
                    .entry((rule, bucket_index(&config.alpha_buckets, row.alpha)))
                    .or_default()
                    .tally(strong_violated, weak_violated);
                for (axiom, verdict) in [("strong", &row.strong), ("weak", &row.weak)] {
                    verdicts_csv.write_record([
                        named.name.as_str(),
                        rule.name(),
                        named.profile.name(row.x),
                        named.profile.name(row.y),
                        &row.alpha.to_string(),
                        &float_column(rational_to_f64(&row.alpha)),
                        &format!("{axiom}_independence"),
                        &verdict.satisfied.to_string(),
                        &witness_detail(&named.profile, verdict),
                    ])?;
                }
            }
            summary.losers.tally(!cell.losers.satisfied);
            verdicts_csv.write_record([
                named.name.as_str(),
                rule.name(),
                "",
                "",
                "",
                "",
                "independence_of_losers",
                &cell.losers.satisfied.to_string(),
                &witness_detail(&named.profile, &cell.losers),
            ])?;
        }
    }
    verdicts_csv.flush()?;
    resource_csv.flush()?;

    let mut curve_csv = csv::Writer::from_writer(create(&config.out_dir, "alpha_curve.csv")?);
    curve_csv.write_record([
        "rule",
        "variant",
        "bucket_low",
        "bucket_high",
        "pairs",
        "violated",
        "violated_share",
        "satisfied_share",
    ])?;
    for (&(rule, bucket), cell) in &curve {
        let (low, high) = bucket_bounds(&config.alpha_buckets, bucket);
        for (variant, fraction) in [("strong", &cell.strong), ("weak", &cell.weak)] {
            curve_csv.write_record([
                rule.name(),
                variant,
                &low.to_string(),
                &high.to_string(),
                &fraction.total.to_string(),
                &fraction.violated.to_string(),
                &fraction
                    .proportion
                    .map(float_column)
                    .unwrap_or_default(),
                &fraction
                    .proportion
                    .map(|p| float_column(1.0 - p))
                    .unwrap_or_default(),
            ])?;
        }
    }
    curve_csv.flush()?;

    let summary = AxiomsSummary {
        profile_count: auditable.len(),
        skipped_small_profiles: small.len(),
        file_errors: resolved.errors.len(),
        low_alpha_threshold: low_threshold.to_string(),
        rules,
    };
    std::fs::write(
        config.out_dir.join("summary.json"),
        serde_json::to_string_pretty(&summary)? + "\n",
    )?;

    print_table(&summary);
    Ok(AxiomsOutcome {
        summary,
        evaluated_cells,
        resource_cells,
    })
}

/// Violation proportions per rule, strong with weak in parentheses.
fn print_table(summary: &AxiomsSummary) {
    println!(
        "{:<12} {:>13} {:>13} {:>13} {:>8}",
        "rule",
        "perfect",
        format!("alpha<={}", summary.low_alpha_threshold),
        "all pairs",
        "losers"
    );
    for (rule, cell) in &summary.rules {
        let pair = |v: &VariantCell| format!("{} ({})", v.strong.display(), v.weak.display());
        println!(
            "{:<12} {:>13} {:>13} {:>13} {:>8}",
            rule,
            pair(&cell.perfect_clones),
            pair(&cell.approx_clones),
            pair(&cell.all_pairs),
            cell.losers.display(),
        );
    }
}

fn create(dir: &Path, name: &str) -> Result<File> {
    File::create(dir.join(name)).with_context(|| format!("creating {name}"))
}
