//! Ordinal preference profiles and the pairwise majority structure on top of
//! them: positions, candidate removal, margins, Condorcet winner, Smith set.
//!
//! A profile stores complete strict rankings with multiplicities. Candidates
//! are 0-based contiguous indices into a name table; ranks are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Index;

use crate::error::Error;

/// A candidate, identified by its 0-based index into the profile's name table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Candidate(pub usize);

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One ballot line: a complete strict ranking cast by `weight` voters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ballot {
    pub weight: u64,
    /// Candidates from most to least preferred; a permutation of the full set.
    pub ranking: Vec<Candidate>,
}

/// A collection of complete strict rankings over a common candidate set.
///
/// Immutable after construction; every operation on it is a pure function.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Profile {
    names: Vec<String>,
    ballots: Vec<Ballot>,
    voters: u64,
}

impl Profile {
    /// Builds a profile and checks its invariants: at least one candidate and
    /// one voter, positive multiplicities, and every ranking a permutation of
    /// the candidate set.
    pub fn new(names: Vec<String>, ballots: Vec<Ballot>) -> Result<Self, Error> {
        let m = names.len();
        if m == 0 {
            return Err(Error::NoCandidates);
        }
        if ballots.is_empty() {
            return Err(Error::NoBallots);
        }
        let mut voters: u64 = 0;
        let mut seen = vec![false; m];
        for (i, ballot) in ballots.iter().enumerate() {
            if ballot.weight == 0 {
                return Err(Error::ZeroMultiplicity { ballot: i });
            }
            if ballot.ranking.len() != m {
                return Err(Error::NotAPermutation { ballot: i });
            }
            seen.iter_mut().for_each(|s| *s = false);
            for &Candidate(c) in &ballot.ranking {
                if c >= m || seen[c] {
                    return Err(Error::NotAPermutation { ballot: i });
                }
                seen[c] = true;
            }
            voters += ballot.weight;
        }
        Ok(Profile {
            names,
            ballots,
            voters,
        })
    }

    /// Convenience constructor using 1-based candidate ids as display names.
    pub fn from_rankings(m: usize, rankings: &[(u64, Vec<usize>)]) -> Result<Self, Error> {
        let names = (1..=m).map(|i| i.to_string()).collect();
        let ballots = rankings
            .iter()
            .map(|(w, order)| Ballot {
                weight: *w,
                ranking: order.iter().map(|&c| Candidate(c)).collect(),
            })
            .collect();
        Profile::new(names, ballots)
    }

    /// Number of candidates m.
    pub fn candidate_count(&self) -> usize {
        self.names.len()
    }

    /// Number of voters n (sum of ballot multiplicities).
    pub fn voter_count(&self) -> u64 {
        self.voters
    }

    pub fn candidates(&self) -> impl Iterator<Item = Candidate> {
        (0..self.names.len()).map(Candidate)
    }

    pub fn ballots(&self) -> &[Ballot] {
        &self.ballots
    }

    pub fn name(&self, c: Candidate) -> &str {
        &self.names[c.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// First candidate whose display name matches, if any.
    pub fn candidate_by_name(&self, name: &str) -> Option<Candidate> {
        self.names.iter().position(|n| n == name).map(Candidate)
    }

    fn check_candidate(&self, c: Candidate) -> Result<(), Error> {
        if c.0 < self.names.len() {
            Ok(())
        } else {
            Err(Error::UnknownCandidate(c.0))
        }
    }

    /// 1-based rank of `candidate` in the given ballot (1 = ranked first).
    pub fn position(&self, ballot: usize, candidate: Candidate) -> Result<u32, Error> {
        self.check_candidate(candidate)?;
        let b = self.ballots.get(ballot).ok_or(Error::BallotOutOfRange {
            index: ballot,
            count: self.ballots.len(),
        })?;
        // Rankings are permutations, so the candidate is always present.
        let pos = b.ranking.iter().position(|&c| c == candidate).unwrap();
        Ok(pos as u32 + 1)
    }

    /// Projects the profile onto the candidates other than `removed`: every
    /// ballot keeps its multiplicity and the relative order of the rest.
    ///
    /// Candidates above the removed index shift down by one; use
    /// [`embed_after_removal`] to map them back.
    pub fn remove_candidate(&self, removed: Candidate) -> Result<Profile, Error> {
        self.check_candidate(removed)?;
        if self.names.len() == 1 {
            return Err(Error::LastCandidate);
        }
        let names = self
            .names
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != removed.0)
            .map(|(_, n)| n.clone())
            .collect();
        let ballots = self
            .ballots
            .iter()
            .map(|b| Ballot {
                weight: b.weight,
                ranking: b
                    .ranking
                    .iter()
                    .filter(|&&c| c != removed)
                    .map(|&c| if c.0 > removed.0 { Candidate(c.0 - 1) } else { c })
                    .collect(),
            })
            .collect();
        Profile::new(names, ballots)
    }

    /// Canonical form: ballots sorted lexicographically by ranking, duplicate
    /// rankings merged by summing multiplicities. Margins, rule outcomes, and
    /// clone scores are all invariant under this rewrite.
    pub fn canonicalize(&self) -> Profile {
        let mut ballots = self.ballots.clone();
        ballots.sort_by(|a, b| a.ranking.cmp(&b.ranking));
        let mut merged: Vec<Ballot> = Vec::with_capacity(ballots.len());
        for b in ballots {
            match merged.last_mut() {
                Some(last) if last.ranking == b.ranking => last.weight += b.weight,
                _ => merged.push(b),
            }
        }
        Profile {
            names: self.names.clone(),
            ballots: merged,
            voters: self.voters,
        }
    }
}

/// Maps a candidate index of `P_{-removed}` back to its index in the original
/// profile. Inverse of the reindexing done by [`Profile::remove_candidate`].
pub fn embed_after_removal(removed: Candidate, c: Candidate) -> Candidate {
    if c.0 >= removed.0 {
        Candidate(c.0 + 1)
    } else {
        c
    }
}

/// Per-ballot candidate positions, precomputed for bulk scoring.
#[derive(Clone, Debug)]
pub struct PositionIndex {
    m: usize,
    /// ranks[ballot * m + candidate] = 1-based rank.
    ranks: Vec<u32>,
}

impl PositionIndex {
    pub fn new(profile: &Profile) -> Self {
        let m = profile.candidate_count();
        let mut ranks = vec![0u32; m * profile.ballots().len()];
        for (i, ballot) in profile.ballots().iter().enumerate() {
            for (pos, &Candidate(c)) in ballot.ranking.iter().enumerate() {
                ranks[i * m + c] = pos as u32 + 1;
            }
        }
        PositionIndex { m, ranks }
    }

    /// 1-based rank of `c` in ballot `ballot`.
    pub fn rank(&self, ballot: usize, c: Candidate) -> u32 {
        self.ranks[ballot * self.m + c.0]
    }
}

/// Antisymmetric matrix of pairwise majority margins:
/// `M[(x, y)]` = voters preferring x to y minus voters preferring y to x.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarginMatrix {
    m: usize,
    data: Vec<i64>,
}

impl MarginMatrix {
    pub fn candidate_count(&self) -> usize {
        self.m
    }

    pub fn candidates(&self) -> impl Iterator<Item = Candidate> {
        (0..self.m).map(Candidate)
    }
}

impl Index<(Candidate, Candidate)> for MarginMatrix {
    type Output = i64;

    fn index(&self, (x, y): (Candidate, Candidate)) -> &i64 {
        &self.data[x.0 * self.m + y.0]
    }
}

/// Computes all pairwise margins, weighting each ballot by its multiplicity.
pub fn margin_matrix(profile: &Profile) -> MarginMatrix {
    let m = profile.candidate_count();
    let mut data = vec![0i64; m * m];
    for ballot in profile.ballots() {
        let w = ballot.weight as i64;
        for (i, &Candidate(x)) in ballot.ranking.iter().enumerate() {
            for &Candidate(y) in &ballot.ranking[i + 1..] {
                data[x * m + y] += w;
                data[y * m + x] -= w;
            }
        }
    }
    MarginMatrix { m, data }
}

/// The candidate with a strictly positive margin against every other
/// candidate, if one exists.
pub fn condorcet_winner(margins: &MarginMatrix) -> Option<Candidate> {
    margins
        .candidates()
        .find(|&x| margins.candidates().all(|y| y == x || margins[(x, y)] > 0))
}

/// Smallest non-empty set whose members all strictly beat all non-members.
///
/// Always non-empty (the full candidate set qualifies vacuously); a singleton
/// exactly when a Condorcet winner exists.
pub fn smith_set(margins: &MarginMatrix) -> BTreeSet<Candidate> {
    let m = margins.candidate_count();
    // Seed with a maximal-Copeland candidate, which always belongs to the
    // Smith set, then close under "is not strictly beaten by a member".
    let seed = margins
        .candidates()
        .max_by_key(|&x| {
            margins
                .candidates()
                .map(|y| {
                    let v = margins[(x, y)];
                    (v > 0) as i64 - (v < 0) as i64
                })
                .sum::<i64>()
        })
        .expect("margin matrix has at least one candidate");
    let mut in_set = vec![false; m];
    in_set[seed.0] = true;
    let mut frontier = vec![seed];
    while let Some(x) = frontier.pop() {
        for y in margins.candidates() {
            if !in_set[y.0] && margins[(y, x)] >= 0 {
                in_set[y.0] = true;
                frontier.push(y);
            }
        }
    }
    (0..m).filter(|&i| in_set[i]).map(Candidate).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn c(i: usize) -> Candidate {
        Candidate(i)
    }

    #[test]
    fn rejects_malformed_profiles() {
        assert_eq!(Profile::from_rankings(0, &[]), Err(Error::NoCandidates));
        assert_eq!(Profile::from_rankings(2, &[]), Err(Error::NoBallots));
        assert_eq!(
            Profile::from_rankings(2, &[(0, vec![0, 1])]),
            Err(Error::ZeroMultiplicity { ballot: 0 })
        );
        assert_eq!(
            Profile::from_rankings(2, &[(1, vec![0, 0])]),
            Err(Error::NotAPermutation { ballot: 0 })
        );
        assert_eq!(
            Profile::from_rankings(2, &[(1, vec![0])]),
            Err(Error::NotAPermutation { ballot: 0 })
        );
        assert_eq!(
            Profile::from_rankings(2, &[(1, vec![0, 2])]),
            Err(Error::NotAPermutation { ballot: 0 })
        );
    }

    #[test]
    fn position_reads_ranks() {
        let maj = fixtures::majority_clone3();
        // Ballot 0 is a > b > c.
        assert_eq!(maj.profile.position(0, c(0)), Ok(1));
        assert_eq!(maj.profile.position(0, c(2)), Ok(3));

        let irv4 = fixtures::irv_spoiler4();
        // The c > d > a > b ballot ranks a third.
        let ballot = irv4
            .profile
            .ballots()
            .iter()
            .position(|b| b.ranking[0] == c(2) && b.ranking[1] == c(3))
            .unwrap();
        assert_eq!(irv4.profile.position(ballot, c(0)), Ok(3));

        let wide = fixtures::wide_spread_pair100();
        // The single a1 > a3 > a100 > ... ballot ranks a2 last.
        let last = wide.profile.ballots().len() - 1;
        assert_eq!(wide.profile.position(last, c(1)), Ok(100));
        assert_eq!(wide.profile.position(last, c(0)), Ok(1));
    }

    #[test]
    fn position_errors() {
        let maj = fixtures::majority_clone3();
        assert_eq!(
            maj.profile.position(0, c(9)),
            Err(Error::UnknownCandidate(9))
        );
        assert_eq!(
            maj.profile.position(99, c(0)),
            Err(Error::BallotOutOfRange {
                index: 99,
                count: 3
            })
        );
    }

    #[test]
    fn remove_candidate_projects() {
        let maj = fixtures::majority_clone3();
        let without_c = maj.profile.remove_candidate(c(2)).unwrap();
        assert_eq!(without_c.candidate_count(), 2);
        assert_eq!(without_c.voter_count(), 5);
        let expected = Profile::new(
            vec!["a".into(), "b".into()],
            vec![
                Ballot { weight: 2, ranking: vec![c(0), c(1)] },
                Ballot { weight: 2, ranking: vec![c(1), c(0)] },
                Ballot { weight: 1, ranking: vec![c(0), c(1)] },
            ],
        )
        .unwrap();
        assert_eq!(without_c, expected);

        let irv4 = fixtures::irv_spoiler4();
        let without_a = irv4.profile.remove_candidate(c(0)).unwrap();
        assert_eq!(without_a.candidate_count(), 3);
        assert_eq!(without_a.voter_count(), 9);
        for (orig, reduced) in irv4.profile.ballots().iter().zip(without_a.ballots()) {
            let projected: Vec<Candidate> = orig
                .ranking
                .iter()
                .filter(|&&x| x != c(0))
                .map(|&x| Candidate(x.0 - 1))
                .collect();
            assert_eq!(reduced.ranking, projected);
            assert_eq!(reduced.weight, orig.weight);
        }
    }

    #[test]
    fn remove_candidate_errors() {
        let maj = fixtures::majority_clone3();
        assert_eq!(
            maj.profile.remove_candidate(c(7)),
            Err(Error::UnknownCandidate(7))
        );
        let single = Profile::from_rankings(1, &[(1, vec![0])]).unwrap();
        assert_eq!(single.remove_candidate(c(0)), Err(Error::LastCandidate));
    }

    #[test]
    fn removals_commute_on_fixtures() {
        for fixture in fixtures::all() {
            let p = &fixture.profile;
            let m = p.candidate_count();
            if !(3..=6).contains(&m) {
                continue;
            }
            for x in 0..m {
                for y in 0..m {
                    if x == y {
                        continue;
                    }
                    // Remove x then y (indices shift after the first removal).
                    let xy = p
                        .remove_candidate(c(x))
                        .unwrap()
                        .remove_candidate(c(if y > x { y - 1 } else { y }))
                        .unwrap();
                    let yx = p
                        .remove_candidate(c(y))
                        .unwrap()
                        .remove_candidate(c(if x > y { x - 1 } else { x }))
                        .unwrap();
                    assert_eq!(xy.canonicalize(), yx.canonicalize());
                }
            }
        }
    }

    #[test]
    fn embed_inverts_removal_reindexing() {
        let p = Profile::from_rankings(4, &[(1, vec![0, 1, 2, 3])]).unwrap();
        let reduced = p.remove_candidate(c(1)).unwrap();
        let back: Vec<&str> = reduced
            .candidates()
            .map(|rc| p.name(embed_after_removal(c(1), rc)))
            .collect();
        assert_eq!(back, vec!["1", "3", "4"]);
    }

    #[test]
    fn margins_match_spoiler4_table() {
        let rp4 = fixtures::ranked_pairs_spoiler4();
        let m = margin_matrix(&rp4.profile);
        let (a, b, cc, d) = (c(0), c(1), c(2), c(3));
        assert_eq!(m[(a, b)], 14);
        assert_eq!(m[(a, cc)], -8);
        assert_eq!(m[(a, d)], 4);
        assert_eq!(m[(b, cc)], 12);
        assert_eq!(m[(b, d)], -2);
        assert_eq!(m[(cc, d)], 0);
    }

    #[test]
    fn margins_on_unanimous_profile() {
        let p = Profile::from_rankings(3, &[(7, vec![2, 0, 1])]).unwrap();
        let m = margin_matrix(&p);
        assert_eq!(m[(c(2), c(0))], 7);
        assert_eq!(m[(c(2), c(1))], 7);
        assert_eq!(m[(c(0), c(1))], 7);
        assert_eq!(m[(c(1), c(2))], -7);
    }

    /// Direct O(ballots) count of a single pairwise margin, independent of
    /// the matrix construction.
    fn margin_by_count(p: &Profile, x: Candidate, y: Candidate) -> i64 {
        let mut m = 0i64;
        for b in p.ballots() {
            let px = b.ranking.iter().position(|&z| z == x).unwrap();
            let py = b.ranking.iter().position(|&z| z == y).unwrap();
            if px < py {
                m += b.weight as i64;
            } else {
                m -= b.weight as i64;
            }
        }
        m
    }

    #[test]
    fn nonsimple3_has_even_tie() {
        let ns = fixtures::nonsimple3();
        let m = margin_matrix(&ns.profile);
        assert_eq!(m[(c(1), c(2))], 0);
        assert_eq!(margin_by_count(&ns.profile, c(1), c(2)), 0);
    }

    #[test]
    fn margin_matrix_agrees_with_direct_count_on_fixtures() {
        for fixture in fixtures::all() {
            let p = &fixture.profile;
            let m = margin_matrix(p);
            let n = p.voter_count() as i64;
            for x in p.candidates() {
                for y in p.candidates() {
                    if x == y {
                        assert_eq!(m[(x, y)], 0);
                        continue;
                    }
                    assert_eq!(m[(x, y)], margin_by_count(p, x, y), "{}", fixture.name);
                    assert_eq!(m[(x, y)], -m[(y, x)]);
                    assert!(m[(x, y)].abs() <= n);
                    assert_eq!(m[(x, y)].rem_euclid(2), n.rem_euclid(2));
                }
            }
        }
    }

    #[test]
    fn condorcet_winner_cases() {
        let unanimous = Profile::from_rankings(3, &[(4, vec![1, 0, 2])]).unwrap();
        assert_eq!(condorcet_winner(&margin_matrix(&unanimous)), Some(c(1)));

        let rp4 = fixtures::ranked_pairs_spoiler4();
        assert_eq!(condorcet_winner(&margin_matrix(&rp4.profile)), None);

        let cycle = Profile::from_rankings(
            3,
            &[(1, vec![0, 1, 2]), (1, vec![1, 2, 0]), (1, vec![2, 0, 1])],
        )
        .unwrap();
        assert_eq!(condorcet_winner(&margin_matrix(&cycle)), None);
    }

    /// Brute force: all dominant subsets, smallest one wins. Only usable for
    /// small m; the fast algorithm must agree with it exactly.
    fn smith_by_brute_force(margins: &MarginMatrix) -> BTreeSet<Candidate> {
        let m = margins.candidate_count();
        let mut best: Option<BTreeSet<Candidate>> = None;
        for mask in 1u32..(1 << m) {
            let inside: Vec<usize> = (0..m).filter(|&i| mask & (1 << i) != 0).collect();
            let dominant = inside.iter().all(|&x| {
                (0..m)
                    .filter(|&y| mask & (1 << y) == 0)
                    .all(|y| margins[(c(x), c(y))] > 0)
            });
            if dominant {
                let set: BTreeSet<Candidate> = inside.into_iter().map(c).collect();
                if best.as_ref().is_none_or(|b| set.len() < b.len()) {
                    best = Some(set);
                }
            }
        }
        best.expect("full candidate set is always dominant")
    }

    #[test]
    fn smith_set_cases() {
        let unanimous = Profile::from_rankings(3, &[(4, vec![1, 0, 2])]).unwrap();
        let margins = margin_matrix(&unanimous);
        assert_eq!(smith_set(&margins), BTreeSet::from([c(1)]));

        let cycle = Profile::from_rankings(
            3,
            &[(1, vec![0, 1, 2]), (1, vec![1, 2, 0]), (1, vec![2, 0, 1])],
        )
        .unwrap();
        assert_eq!(
            smith_set(&margin_matrix(&cycle)),
            BTreeSet::from([c(0), c(1), c(2)])
        );

        // d loses to a but beats b, so no proper subset dominates.
        let rp4 = fixtures::ranked_pairs_spoiler4();
        let margins = margin_matrix(&rp4.profile);
        assert_eq!(
            smith_set(&margins),
            BTreeSet::from([c(0), c(1), c(2), c(3)])
        );
        assert_eq!(smith_set(&margins), smith_by_brute_force(&margins));
    }

    #[test]
    fn smith_set_matches_brute_force_on_fixtures() {
        for fixture in fixtures::all() {
            let p = &fixture.profile;
            if p.candidate_count() > 6 {
                continue;
            }
            let margins = margin_matrix(p);
            assert_eq!(
                smith_set(&margins),
                smith_by_brute_force(&margins),
                "{}",
                fixture.name
            );
        }
    }

    #[test]
    fn canonicalize_sorts_and_merges() {
        let p = Profile::from_rankings(
            2,
            &[(1, vec![1, 0]), (2, vec![0, 1]), (3, vec![0, 1])],
        )
        .unwrap();
        let canon = p.canonicalize();
        assert_eq!(canon.ballots().len(), 2);
        assert_eq!(canon.ballots()[0].weight, 5);
        assert_eq!(canon.ballots()[0].ranking, vec![c(0), c(1)]);
        assert_eq!(canon.voter_count(), 6);
    }
}
