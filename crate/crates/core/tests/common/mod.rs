//! Shared helpers for the randomized suites: seeded mixed-culture profiles.

use cloneaudit_core::samplers::{sample, Culture, CultureSpec, EuclideanSpace};
use cloneaudit_core::Profile;

pub const CULTURES: [Culture; 10] = [
    Culture::ImpartialCulture,
    Culture::Urn { contagion: 0.5 },
    Culture::Urn { contagion: 2.0 },
    Culture::SinglePeaked,
    Culture::SingleCrossing,
    Culture::Euclidean {
        space: EuclideanSpace::Line,
    },
    Culture::Euclidean {
        space: EuclideanSpace::Square,
    },
    Culture::Euclidean {
        space: EuclideanSpace::Circle,
    },
    Culture::Identity,
    Culture::Antagonistic,
];

/// Deterministic profile for trial index `i`: cultures cycle, sizes vary with
/// the index, the seed is derived from it.
pub fn mixed_profile(i: u64, m_range: (usize, usize), n_range: (u64, u64)) -> Profile {
    let culture = CULTURES[(i % CULTURES.len() as u64) as usize];
    let m = m_range.0 + (i / 7 % (m_range.1 - m_range.0 + 1) as u64) as usize;
    let n = n_range.0 + i / 11 % (n_range.1 - n_range.0 + 1);
    sample(&CultureSpec {
        culture,
        m,
        n,
        seed: 0x5eed ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15),
    })
    .expect("spec is valid")
}
