//! Exact proximity-to-clones measures for candidate pairs.
//!
//! A pair is perfect clones when every voter ranks the two next to each
//! other. The deletion score is the fraction of voters that would have to be
//! removed to get there; the swap score is the average number of adjacent
//! swaps per voter. Both are kept as exact rationals because the report-level
//! identities and threshold comparisons must hold exactly, not up to float
//! rounding.

use num_rational::Ratio;

use crate::error::Error;
use crate::profile::{Candidate, PositionIndex, Profile};

/// Exact score value: a reduced fraction of two 64-bit integers.
pub type Rational = Ratio<i64>;

/// Both proximity measures for one unordered pair, with the raw counts they
/// derive from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CloneScore {
    /// The pair, stored with x < y.
    pub x: Candidate,
    pub y: Candidate,
    /// Voters (multiplicity-weighted) who do not rank the pair adjacently.
    pub nonadjacent_count: u64,
    /// Total adjacent swaps needed to make the pair adjacent on every ballot.
    pub swap_count: u64,
    /// nonadjacent_count / n, in [0, 1].
    pub alpha: Rational,
    /// swap_count / n, in [0, (m-1)(m-2)... bounded by (m-2) * alpha].
    pub beta: Rational,
}

impl CloneScore {
    pub fn pair(&self) -> (Candidate, Candidate) {
        (self.x, self.y)
    }

    pub fn is_perfect(&self) -> bool {
        self.nonadjacent_count == 0
    }
}

fn check_pair(profile: &Profile, x: Candidate, y: Candidate) -> Result<(), Error> {
    let m = profile.candidate_count();
    for c in [x, y] {
        if c.0 >= m {
            return Err(Error::UnknownCandidate(c.0));
        }
    }
    if x == y {
        return Err(Error::IdenticalPair);
    }
    Ok(())
}

fn score_from_positions(
    profile: &Profile,
    positions: &PositionIndex,
    x: Candidate,
    y: Candidate,
) -> CloneScore {
    let (x, y) = if x < y { (x, y) } else { (y, x) };
    let mut nonadjacent: u64 = 0;
    let mut swaps: u64 = 0;
    for (i, ballot) in profile.ballots().iter().enumerate() {
        let gap = positions.rank(i, x).abs_diff(positions.rank(i, y)) as u64;
        if gap > 1 {
            nonadjacent += ballot.weight;
            swaps += ballot.weight * (gap - 1);
        }
    }
    let n = profile.voter_count() as i64;
    CloneScore {
        x,
        y,
        nonadjacent_count: nonadjacent,
        swap_count: swaps,
        alpha: Rational::new(nonadjacent as i64, n),
        beta: Rational::new(swaps as i64, n),
    }
}

/// Both measures for one pair.
pub fn pair_score(profile: &Profile, x: Candidate, y: Candidate) -> Result<CloneScore, Error> {
    check_pair(profile, x, y)?;
    Ok(score_from_positions(
        profile,
        &PositionIndex::new(profile),
        x,
        y,
    ))
}

/// Smallest alpha for which the pair are deletion clones: the weighted
/// fraction of ballots ranking them more than one position apart.
pub fn alpha_deletion(profile: &Profile, x: Candidate, y: Candidate) -> Result<Rational, Error> {
    pair_score(profile, x, y).map(|s| s.alpha)
}

/// Smallest beta for which the pair are swap clones: the average over voters
/// of (rank gap - 1).
pub fn beta_swap(profile: &Profile, x: Candidate, y: Candidate) -> Result<Rational, Error> {
    pair_score(profile, x, y).map(|s| s.beta)
}

/// Scores for every pair of a profile, with minima, exact means, and the
/// perfect-clone pairs.
#[derive(Clone, Debug)]
pub struct CloneReport {
    /// One entry per unordered pair, ordered lexicographically.
    pub scores: Vec<CloneScore>,
    pub min_alpha: Rational,
    /// Every pair attaining min_alpha, not an arbitrary representative.
    pub min_alpha_pairs: Vec<(Candidate, Candidate)>,
    pub min_beta: Rational,
    pub min_beta_pairs: Vec<(Candidate, Candidate)>,
    /// Mean alpha over pairs; always exactly (m-2)/m.
    pub mean_alpha: Rational,
    /// Mean beta over pairs; always exactly (m-2)/3.
    pub mean_beta: Rational,
    pub perfect_pairs: Vec<(Candidate, Candidate)>,
}

pub fn clone_report(profile: &Profile) -> Result<CloneReport, Error> {
    let m = profile.candidate_count();
    if m < 2 {
        return Err(Error::TooFewCandidates {
            required: 2,
            actual: m,
        });
    }
    let positions = PositionIndex::new(profile);
    let mut scores = Vec::with_capacity(m * (m - 1) / 2);
    for x in 0..m {
        for y in x + 1..m {
            scores.push(score_from_positions(
                profile,
                &positions,
                Candidate(x),
                Candidate(y),
            ));
        }
    }
    let min_alpha = scores.iter().map(|s| s.alpha).min().unwrap();
    let min_beta = scores.iter().map(|s| s.beta).min().unwrap();
    let pair_count = Rational::from_integer(scores.len() as i64);
    let mean_alpha = scores.iter().map(|s| s.alpha).sum::<Rational>() / pair_count;
    let mean_beta = scores.iter().map(|s| s.beta).sum::<Rational>() / pair_count;
    debug_assert_eq!(mean_alpha, Rational::new(m as i64 - 2, m as i64));
    debug_assert_eq!(mean_beta, Rational::new(m as i64 - 2, 3));
    Ok(CloneReport {
        min_alpha_pairs: scores
            .iter()
            .filter(|s| s.alpha == min_alpha)
            .map(CloneScore::pair)
            .collect(),
        min_beta_pairs: scores
            .iter()
            .filter(|s| s.beta == min_beta)
            .map(CloneScore::pair)
            .collect(),
        perfect_pairs: scores
            .iter()
            .filter(|s| s.is_perfect())
            .map(CloneScore::pair)
            .collect(),
        scores,
        min_alpha,
        min_beta,
        mean_alpha,
        mean_beta,
    })
}

/// All pairs ranked adjacently by every voter.
pub fn perfect_clones(profile: &Profile) -> Result<Vec<(Candidate, Candidate)>, Error> {
    clone_report(profile).map(|r| r.perfect_pairs)
}
