//! Seeded profile generators for the statistical cultures used in the
//! experiments.
//!
//! Randomness scheme: every profile has one root seed. Stream 0 of the
//! ChaCha8 generator keyed by that seed drives profile-level draws (urn
//! sequence, crossing domain, candidate positions); ballot i draws from
//! stream i + 1. Identical specs therefore produce identical profiles,
//! independent of evaluation order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::profile::{Ballot, Candidate, Profile};

/// Point distribution for the spatial culture.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EuclideanSpace {
    Line,
    Square,
    Cube,
    Circle,
}

impl EuclideanSpace {
    pub fn name(self) -> &'static str {
        match self {
            EuclideanSpace::Line => "1d",
            EuclideanSpace::Square => "2d",
            EuclideanSpace::Cube => "3d",
            EuclideanSpace::Circle => "circle",
        }
    }
}

/// A statistical culture over complete strict rankings.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum Culture {
    /// Every ballot an independent uniform permutation.
    ImpartialCulture,
    /// All voters share the canonical order.
    Identity,
    /// Half the voters hold the canonical order, half its reverse.
    Antagonistic,
    /// Every one of the m! rankings exactly once; n is forced to m!.
    UniformComplete,
    /// Polya urn: a fresh uniform ranking with probability 1/(1 + k*contagion)
    /// at draw k, otherwise a copy of a uniformly chosen earlier draw.
    Urn { contagion: f64 },
    /// Uniform over the 2^(m-1) rankings single-peaked on the canonical axis.
    SinglePeaked,
    /// Uniform position on one random maximal single-crossing domain.
    SingleCrossing,
    /// Voters and candidates as uniform points; ballots by increasing
    /// distance, ties broken by candidate id.
    Euclidean { space: EuclideanSpace },
}

impl Culture {
    pub fn name(&self) -> String {
        match self {
            Culture::ImpartialCulture => "ic".to_string(),
            Culture::Identity => "identity".to_string(),
            Culture::Antagonistic => "antagonistic".to_string(),
            Culture::UniformComplete => "uniform".to_string(),
            Culture::Urn { contagion } => format!("urn({contagion})"),
            Culture::SinglePeaked => "single-peaked".to_string(),
            Culture::SingleCrossing => "single-crossing".to_string(),
            Culture::Euclidean { space } => format!("euclidean-{}", space.name()),
        }
    }
}

/// A fully specified sampling request; deterministic given the seed.
#[derive(Clone, PartialEq, Debug)]
pub struct CultureSpec {
    pub culture: Culture,
    pub m: usize,
    pub n: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SampleError {
    #[error("sampling requires m >= 1 and n >= 1")]
    EmptySpec,
    #[error("urn contagion must be non-negative, got {0}")]
    NegativeContagion(f64),
    #[error("uniform-complete culture supports at most {max} candidates, got {m}")]
    FactorialBlowup { m: usize, max: usize },
}

const UNIFORM_COMPLETE_MAX_M: usize = 8;

fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn ballot_rng(seed: u64, ballot: u64) -> ChaCha8Rng {
    stream_rng(seed, ballot + 1)
}

fn random_permutation(m: usize, rng: &mut ChaCha8Rng) -> Vec<Candidate> {
    let mut order: Vec<Candidate> = (0..m).map(Candidate).collect();
    for i in (1..m).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    order
}

fn canonical_order(m: usize) -> Vec<Candidate> {
    (0..m).map(Candidate).collect()
}

/// All m! rankings in lexicographic order.
pub fn all_rankings(m: usize) -> Vec<Vec<Candidate>> {
    fn rec(
        remaining: &mut Vec<Candidate>,
        prefix: &mut Vec<Candidate>,
        out: &mut Vec<Vec<Candidate>>,
    ) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let c = remaining.remove(i);
            prefix.push(c);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, c);
        }
    }
    let mut out = Vec::new();
    rec(&mut canonical_order(m), &mut Vec::new(), &mut out);
    out
}

fn unit_ballots(rankings: Vec<Vec<Candidate>>) -> Vec<Ballot> {
    rankings
        .into_iter()
        .map(|ranking| Ballot { weight: 1, ranking })
        .collect()
}

fn single_peaked_ballot(m: usize, rng: &mut ChaCha8Rng) -> Vec<Candidate> {
    // Pick the next-worst candidate from either end of the remaining axis
    // interval; the survivor is the peak. Each coin sequence yields a
    // distinct single-peaked ballot, so the draw is uniform over all 2^(m-1).
    let (mut lo, mut hi) = (0usize, m - 1);
    let mut worst_first = Vec::with_capacity(m);
    while lo < hi {
        if rng.gen::<bool>() {
            worst_first.push(Candidate(lo));
            lo += 1;
        } else {
            worst_first.push(Candidate(hi));
            hi -= 1;
        }
    }
    worst_first.push(Candidate(lo));
    worst_first.reverse();
    worst_first
}

/// A maximal single-crossing domain: a walk from the canonical order to its
/// reverse that swaps each pair exactly once, chosen uniformly at each step
/// among the adjacent pairs still in canonical order.
fn single_crossing_domain(m: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<Candidate>> {
    let mut order = canonical_order(m);
    let mut domain = vec![order.clone()];
    loop {
        let ascents: Vec<usize> = (0..order.len().saturating_sub(1))
            .filter(|&i| order[i] < order[i + 1])
            .collect();
        if ascents.is_empty() {
            return domain;
        }
        let i = ascents[rng.gen_range(0..ascents.len())];
        order.swap(i, i + 1);
        domain.push(order.clone());
    }
}

fn euclidean_point(space: EuclideanSpace, rng: &mut ChaCha8Rng) -> [f64; 3] {
    match space {
        EuclideanSpace::Line => [rng.gen::<f64>(), 0.0, 0.0],
        EuclideanSpace::Square => [rng.gen::<f64>(), rng.gen::<f64>(), 0.0],
        EuclideanSpace::Cube => [rng.gen::<f64>(), rng.gen::<f64>(), rng.gen::<f64>()],
        EuclideanSpace::Circle => {
            let angle = rng.gen::<f64>() * std::f64::consts::TAU;
            [angle.cos(), angle.sin(), 0.0]
        }
    }
}

fn squared_distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]) * (a[i] - b[i])).sum()
}

/// Draws one profile. Deterministic: the same spec always yields the same
/// profile, across runs and across concurrent execution.
pub fn sample(spec: &CultureSpec) -> Result<Profile, SampleError> {
    let (m, n) = (spec.m, spec.n);
    if m == 0 || (n == 0 && spec.culture != Culture::UniformComplete) {
        return Err(SampleError::EmptySpec);
    }
    let ballots = match spec.culture {
        Culture::ImpartialCulture => unit_ballots(
            (0..n)
                .map(|i| random_permutation(m, &mut ballot_rng(spec.seed, i)))
                .collect(),
        ),
        Culture::Identity => vec![Ballot {
            weight: n,
            ranking: canonical_order(m),
        }],
        Culture::Antagonistic => {
            let forward = n - n / 2;
            let backward = n / 2;
            let mut ballots = vec![Ballot {
                weight: forward,
                ranking: canonical_order(m),
            }];
            if backward > 0 {
                let mut reversed = canonical_order(m);
                reversed.reverse();
                ballots.push(Ballot {
                    weight: backward,
                    ranking: reversed,
                });
            }
            ballots
        }
        Culture::UniformComplete => {
            if m > UNIFORM_COMPLETE_MAX_M {
                return Err(SampleError::FactorialBlowup {
                    m,
                    max: UNIFORM_COMPLETE_MAX_M,
                });
            }
            unit_ballots(all_rankings(m))
        }
        Culture::Urn { contagion } => {
            if contagion < 0.0 || !contagion.is_finite() {
                return Err(SampleError::NegativeContagion(contagion));
            }
            let mut rng = stream_rng(spec.seed, 0);
            let mut drawn: Vec<Vec<Candidate>> = Vec::with_capacity(n as usize);
            for k in 0..n {
                let fresh = 1.0 / (1.0 + k as f64 * contagion);
                let ranking = if k == 0 || rng.gen::<f64>() < fresh {
                    random_permutation(m, &mut rng)
                } else {
                    drawn[rng.gen_range(0..drawn.len())].clone()
                };
                drawn.push(ranking);
            }
            unit_ballots(drawn)
        }
        Culture::SinglePeaked => unit_ballots(
            (0..n)
                .map(|i| single_peaked_ballot(m, &mut ballot_rng(spec.seed, i)))
                .collect(),
        ),
        Culture::SingleCrossing => {
            let domain = single_crossing_domain(m, &mut stream_rng(spec.seed, 0));
            unit_ballots(
                (0..n)
                    .map(|i| {
                        let pick = ballot_rng(spec.seed, i).gen_range(0..domain.len());
                        domain[pick].clone()
                    })
                    .collect(),
            )
        }
        Culture::Euclidean { space } => {
            let mut profile_rng = stream_rng(spec.seed, 0);
            let candidates: Vec<[f64; 3]> = (0..m)
                .map(|_| euclidean_point(space, &mut profile_rng))
                .collect();
            unit_ballots(
                (0..n)
                    .map(|i| {
                        let voter = euclidean_point(space, &mut ballot_rng(spec.seed, i));
                        let mut order = canonical_order(m);
                        order.sort_by(|a, b| {
                            squared_distance(candidates[a.0], voter)
                                .total_cmp(&squared_distance(candidates[b.0], voter))
                                .then(a.cmp(b))
                        });
                        order
                    })
                    .collect(),
            )
        }
    };
    let names = (1..=m).map(|i| i.to_string()).collect();
    Ok(Profile::new(names, ballots).expect("sampled profiles satisfy the invariants"))
}

/// True when every ballot's top-k set is an interval of the canonical axis,
/// for every k.
pub fn is_single_peaked_on_axis(profile: &Profile) -> bool {
    profile.ballots().iter().all(|ballot| {
        let mut lo = usize::MAX;
        let mut hi = 0usize;
        for (k, &Candidate(c)) in ballot.ranking.iter().enumerate() {
            lo = lo.min(c);
            hi = hi.max(c);
            if hi - lo != k {
                return false;
            }
        }
        true
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clones::clone_report;
    use crate::profile::{condorcet_winner, margin_matrix};
    use crate::rules::{evaluate, RuleId};
    use num_rational::Ratio;

    fn spec(culture: Culture, m: usize, n: u64, seed: u64) -> CultureSpec {
        CultureSpec {
            culture,
            m,
            n,
            seed,
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let cultures = [
            Culture::ImpartialCulture,
            Culture::Identity,
            Culture::Antagonistic,
            Culture::UniformComplete,
            Culture::Urn { contagion: 0.5 },
            Culture::SinglePeaked,
            Culture::SingleCrossing,
            Culture::Euclidean {
                space: EuclideanSpace::Square,
            },
            Culture::Euclidean {
                space: EuclideanSpace::Circle,
            },
        ];
        for culture in cultures {
            let s = spec(culture, 5, 12, 99);
            let a = sample(&s).unwrap();
            let b = sample(&s).unwrap();
            assert_eq!(a, b, "{}", culture.name());
            let other_seed = sample(&spec(culture, 5, 12, 100)).unwrap();
            if !matches!(
                culture,
                Culture::Identity | Culture::Antagonistic | Culture::UniformComplete
            ) {
                assert_ne!(a, other_seed, "{}", culture.name());
            }
        }
    }

    #[test]
    fn identity_profile_shape() {
        let p = sample(&spec(Culture::Identity, 4, 5, 1)).unwrap();
        assert_eq!(p.ballots().len(), 1);
        assert_eq!(p.voter_count(), 5);
        let report = clone_report(&p).unwrap();
        assert_eq!(report.min_alpha, Ratio::new(0, 1));
    }

    #[test]
    fn antagonistic_profile_shape() {
        let p = sample(&spec(Culture::Antagonistic, 5, 10, 1)).unwrap();
        assert_eq!(p.ballots().len(), 2);
        assert_eq!(p.ballots()[0].weight, 5);
        assert_eq!(p.ballots()[1].weight, 5);
        let reversed: Vec<Candidate> = (0..5).rev().map(Candidate).collect();
        assert_eq!(p.ballots()[1].ranking, reversed);

        let odd = sample(&spec(Culture::Antagonistic, 3, 7, 1)).unwrap();
        assert_eq!(odd.ballots()[0].weight, 4);
        assert_eq!(odd.ballots()[1].weight, 3);

        let single = sample(&spec(Culture::Antagonistic, 3, 1, 1)).unwrap();
        assert_eq!(single.ballots().len(), 1);
    }

    #[test]
    fn uniform_complete_is_fully_symmetric() {
        let p = sample(&spec(Culture::UniformComplete, 3, 0, 7)).unwrap();
        assert_eq!(p.voter_count(), 6);
        assert_eq!(p.ballots().len(), 6);
        for score in clone_report(&p).unwrap().scores {
            assert_eq!(score.alpha, Ratio::new(1, 3));
            assert_eq!(score.beta, Ratio::new(1, 3));
        }
        for rule in RuleId::ALL {
            assert_eq!(evaluate(rule, &p).unwrap().len(), 3, "{rule}");
        }
        assert!(matches!(
            sample(&spec(Culture::UniformComplete, 9, 0, 7)),
            Err(SampleError::FactorialBlowup { m: 9, max: 8 })
        ));
    }

    #[test]
    fn single_peaked_profiles_are_single_peaked() {
        for seed in 0..20 {
            let p = sample(&spec(Culture::SinglePeaked, 6, 9, seed)).unwrap();
            assert!(is_single_peaked_on_axis(&p), "seed {seed}");
            // Odd number of voters: a Condorcet winner must exist.
            assert!(condorcet_winner(&margin_matrix(&p)).is_some(), "seed {seed}");
        }
    }

    #[test]
    fn single_crossing_domain_swaps_every_pair_once() {
        for seed in 0..10 {
            let domain = single_crossing_domain(5, &mut stream_rng(seed, 0));
            assert_eq!(domain.len(), 11);
            assert_eq!(domain[0], canonical_order(5));
            let reversed: Vec<Candidate> = (0..5).rev().map(Candidate).collect();
            assert_eq!(domain[10], reversed);
            for window in domain.windows(2) {
                let diff: Vec<usize> = (0..5).filter(|&i| window[0][i] != window[1][i]).collect();
                assert_eq!(diff.len(), 2);
                assert_eq!(diff[1], diff[0] + 1);
            }
        }
    }

    #[test]
    fn euclidean_line_profiles_are_single_peaked_on_the_position_axis() {
        for seed in 0..20 {
            let p = sample(&spec(
                Culture::Euclidean {
                    space: EuclideanSpace::Line,
                },
                5,
                8,
                seed,
            ))
            .unwrap();
            // Relabel candidates along their positions: some permutation of
            // the index axis must make the profile single-peaked.
            let found = all_rankings(5).into_iter().any(|axis| {
                let relabel: Vec<usize> = {
                    let mut inv = vec![0usize; 5];
                    for (pos, &Candidate(c)) in axis.iter().enumerate() {
                        inv[c] = pos;
                    }
                    inv
                };
                let rankings: Vec<(u64, Vec<usize>)> = p
                    .ballots()
                    .iter()
                    .map(|b| {
                        (
                            b.weight,
                            b.ranking.iter().map(|&Candidate(c)| relabel[c]).collect(),
                        )
                    })
                    .collect();
                let relabeled = Profile::from_rankings(5, &rankings).unwrap();
                is_single_peaked_on_axis(&relabeled)
            });
            assert!(found, "seed {seed}");
        }
    }

    #[test]
    fn urn_parameters_are_validated() {
        assert!(matches!(
            sample(&spec(Culture::Urn { contagion: -0.5 }, 3, 5, 1)),
            Err(SampleError::NegativeContagion(_))
        ));
        let p = sample(&spec(Culture::Urn { contagion: 20.0 }, 4, 30, 3)).unwrap();
        assert_eq!(p.voter_count(), 30);
        // Strong contagion concentrates the draws on few distinct rankings.
        let distinct = p.canonicalize().ballots().len();
        assert!(distinct <= 6, "got {distinct} distinct rankings");
    }

    #[test]
    fn empty_specs_are_rejected() {
        assert!(matches!(
            sample(&spec(Culture::ImpartialCulture, 0, 5, 1)),
            Err(SampleError::EmptySpec)
        ));
        assert!(matches!(
            sample(&spec(Culture::ImpartialCulture, 3, 0, 1)),
            Err(SampleError::EmptySpec)
        ));
    }
}
