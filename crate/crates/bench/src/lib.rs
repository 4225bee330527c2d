//! Benchmark-only crate; see `benches/`.

use cloneaudit_core::samplers::{sample, Culture, CultureSpec};
use cloneaudit_core::Profile;

/// Impartial-culture profile with a fixed seed, shared by the benchmarks.
pub fn ic_profile(m: usize, n: u64) -> Profile {
    sample(&CultureSpec {
        culture: Culture::ImpartialCulture,
        m,
        n,
        seed: 2024,
    })
    .expect("valid spec")
}

/// Urn profile (contagion 0.5) with a fixed seed.
pub fn urn_profile(m: usize, n: u64) -> Profile {
    sample(&CultureSpec {
        culture: Culture::Urn { contagion: 0.5 },
        m,
        n,
        seed: 2024,
    })
    .expect("valid spec")
}
