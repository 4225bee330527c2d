//! Writes a batch of sampled profiles in the canonical text format, plus a
//! manifest recording the spec and the per-profile seeds. Re-running with the
//! same arguments reproduces the files byte for byte.

use std::path::Path;

use anyhow::{Context, Result};
use serde::Serialize;

use cloneaudit_core::ingest::serialize_profile;
use cloneaudit_core::samplers::{sample, Culture, CultureSpec};

#[derive(Debug, Serialize)]
struct ManifestEntry {
    file: String,
    seed: u64,
}

#[derive(Debug, Serialize)]
struct Manifest {
    culture: String,
    m: usize,
    n: u64,
    contagion: Option<f64>,
    space: Option<&'static str>,
    root_seed: u64,
    trials: u64,
    profiles: Vec<ManifestEntry>,
}

pub fn run(spec: &CultureSpec, trials: u64, out_dir: &Path, prefix: &str) -> Result<Vec<String>> {
    std::fs::create_dir_all(out_dir)
        .with_context(|| format!("creating {}", out_dir.display()))?;
    let width = (trials.saturating_sub(1).to_string().len()).max(3);
    let mut entries = Vec::with_capacity(trials as usize);
    for i in 0..trials {
        let per_profile = CultureSpec {
            seed: spec.seed.wrapping_add(i),
            ..spec.clone()
        };
        let profile = sample(&per_profile)?;
        let file = format!("{prefix}_{i:0width$}.soc");
        std::fs::write(out_dir.join(&file), serialize_profile(&profile))
            .with_context(|| format!("writing {file}"))?;
        entries.push(ManifestEntry {
            file,
            seed: per_profile.seed,
        });
    }
    let manifest = Manifest {
        culture: spec.culture.name(),
        m: spec.m,
        n: spec.n,
        contagion: match spec.culture {
            Culture::Urn { contagion } => Some(contagion),
            _ => None,
        },
        space: match spec.culture {
            Culture::Euclidean { space } => Some(space.name()),
            _ => None,
        },
        root_seed: spec.seed,
        trials,
        profiles: entries,
    };
    std::fs::write(
        out_dir.join("manifest.json"),
        serde_json::to_string_pretty(&manifest)? + "\n",
    )?;
    println!(
        "wrote {} profiles to {} (culture {})",
        trials,
        out_dir.display(),
        spec.culture.name()
    );
    Ok(manifest.profiles.into_iter().map(|e| e.file).collect())
}
