//! Resolves a run's inputs into named profiles: either files matched by
//! globs or a seeded culture batch. Profiles are sorted by name so every
//! downstream reduction is deterministic.

use std::path::Path;

use anyhow::{bail, Context, Result};

use cloneaudit_core::ingest::{attach_parties, parse_election, parties_from_metadata, PartyMap};
use cloneaudit_core::samplers::{sample, CultureSpec};
use cloneaudit_core::Profile;

use crate::config::ExperimentConfig;

pub struct NamedProfile {
    pub name: String,
    pub profile: Profile,
    pub parties: PartyMap,
    pub discarded_voters: u64,
}

pub struct ResolvedInputs {
    pub profiles: Vec<NamedProfile>,
    /// Per-file ingestion failures; the run continues without those files.
    pub errors: Vec<String>,
}

fn load_file(path: &Path, config: &ExperimentConfig) -> Result<NamedProfile> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let outcome = parse_election(&text, config.policy)
        .with_context(|| format!("parsing {}", path.display()))?;

    // Party labels: an explicit sidecar wins, then a `<file>.parties`
    // sibling, then PARTY header metadata.
    let sidecar = match &config.parties {
        Some(p) => Some(p.clone()),
        None => {
            let sibling = path.with_extension(format!(
                "{}.parties",
                path.extension().and_then(|e| e.to_str()).unwrap_or("")
            ));
            sibling.exists().then_some(sibling)
        }
    };
    let parties = match sidecar {
        Some(p) => {
            let source = std::fs::read_to_string(&p)
                .with_context(|| format!("reading parties {}", p.display()))?;
            attach_parties(&outcome.raw, &source)
                .with_context(|| format!("parsing parties {}", p.display()))?
        }
        None => parties_from_metadata(&outcome.raw)?,
    };
    Ok(NamedProfile {
        name: path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.display().to_string()),
        profile: outcome.profile,
        parties,
        discarded_voters: outcome.discarded_voters,
    })
}

fn sample_batch(spec: &CultureSpec, trials: u64) -> Result<Vec<NamedProfile>> {
    let mut profiles = Vec::with_capacity(trials as usize);
    let width = trials.to_string().len().max(3);
    for i in 0..trials {
        let per_profile = CultureSpec {
            seed: spec.seed.wrapping_add(i),
            ..spec.clone()
        };
        let profile = sample(&per_profile)?;
        profiles.push(NamedProfile {
            name: format!(
                "{}_m{}_n{}_{:0width$}",
                per_profile.culture.name(),
                profile.candidate_count(),
                profile.voter_count(),
                i,
            ),
            profile,
            parties: PartyMap::default(),
            discarded_voters: 0,
        });
    }
    Ok(profiles)
}

pub fn resolve(config: &ExperimentConfig) -> Result<ResolvedInputs> {
    let mut profiles = Vec::new();
    let mut errors = Vec::new();

    if let Some(spec) = &config.culture {
        profiles.extend(sample_batch(spec, config.trials)?);
    }
    for pattern in &config.inputs {
        let matches = glob::glob(pattern).with_context(|| format!("bad glob '{pattern}'"))?;
        let mut matched_any = false;
        for entry in matches {
            let path = entry.context("reading glob entry")?;
            if path.extension().is_some_and(|e| e == "parties") {
                continue;
            }
            matched_any = true;
            match load_file(&path, config) {
                Ok(profile) => profiles.push(profile),
                Err(e) => errors.push(format!("{}: {e:#}", path.display())),
            }
        }
        if !matched_any {
            errors.push(format!("{pattern}: no files matched"));
        }
    }

    if profiles.is_empty() {
        bail!(
            "no input profiles{}",
            if errors.is_empty() {
                String::new()
            } else {
                format!(" ({} file errors)", errors.len())
            }
        );
    }
    profiles.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(ResolvedInputs { profiles, errors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use cloneaudit_core::samplers::Culture;

    #[test]
    fn culture_batches_are_named_and_sorted() {
        let config = ExperimentConfig {
            culture: Some(CultureSpec {
                culture: Culture::ImpartialCulture,
                m: 3,
                n: 5,
                seed: 11,
            }),
            trials: 4,
            ..ExperimentConfig::default()
        };
        let resolved = resolve(&config).unwrap();
        assert_eq!(resolved.profiles.len(), 4);
        assert!(resolved.errors.is_empty());
        assert_eq!(resolved.profiles[0].name, "ic_m3_n5_000");
        let names: Vec<&String> = resolved.profiles.iter().map(|p| &p.name).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);

        // Same config resolves to identical profiles.
        let again = resolve(&config).unwrap();
        for (a, b) in resolved.profiles.iter().zip(again.profiles.iter()) {
            assert_eq!(a.profile, b.profile);
        }
    }

    #[test]
    fn empty_resolution_is_an_error() {
        let config = ExperimentConfig::default();
        assert!(resolve(&config).is_err());
    }
}
