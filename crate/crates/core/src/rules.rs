//! Irresolute voting rules under parallel-universe tie-breaking: every
//! internal tie is resolved in every possible way and the winner set is the
//! union over all resolutions.
//!
//! Sequential elimination memoizes winner sets on the remaining-candidate
//! set, so its cost is bounded by the number of distinct sets reached rather
//! than the number of elimination orders. Pair locking branches over the
//! orderings of equal-margin groups and deduplicates identical locked graphs
//! between groups. Both are bounded by an explicit state cap; exceeding it is
//! an error, never an approximation.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use crate::error::Error;
use crate::profile::{margin_matrix, Candidate, MarginMatrix, Profile};

/// Non-empty set of tied winners.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WinnerSet(BTreeSet<Candidate>);

impl WinnerSet {
    fn from_set(set: BTreeSet<Candidate>) -> Self {
        debug_assert!(!set.is_empty(), "winner sets are never empty");
        WinnerSet(set)
    }

    pub fn contains(&self, c: Candidate) -> bool {
        self.0.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The winner, when there is exactly one.
    pub fn single(&self) -> Option<Candidate> {
        if self.0.len() == 1 {
            self.0.iter().next().copied()
        } else {
            None
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Candidate> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<Candidate> {
        &self.0
    }
}

impl FromIterator<Candidate> for WinnerSet {
    fn from_iter<I: IntoIterator<Item = Candidate>>(iter: I) -> Self {
        let set: BTreeSet<Candidate> = iter.into_iter().collect();
        assert!(!set.is_empty(), "winner sets are never empty");
        WinnerSet(set)
    }
}

impl fmt::Display for WinnerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// The implemented single-winner rules.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RuleId {
    Plurality,
    Borda,
    Irv,
    RankedPairs,
    Schulze,
    Copeland,
}

impl RuleId {
    pub const ALL: [RuleId; 6] = [
        RuleId::Plurality,
        RuleId::Borda,
        RuleId::Irv,
        RuleId::RankedPairs,
        RuleId::Schulze,
        RuleId::Copeland,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::Plurality => "plurality",
            RuleId::Borda => "borda",
            RuleId::Irv => "irv",
            RuleId::RankedPairs => "rankedpairs",
            RuleId::Schulze => "schulze",
            RuleId::Copeland => "copeland",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "plurality" => Ok(RuleId::Plurality),
            "borda" => Ok(RuleId::Borda),
            "irv" => Ok(RuleId::Irv),
            "rankedpairs" => Ok(RuleId::RankedPairs),
            "schulze" => Ok(RuleId::Schulze),
            "copeland" => Ok(RuleId::Copeland),
            other => Err(format!("unknown rule '{other}'")),
        }
    }
}

/// Resource bounds for the branching rules.
#[derive(Clone, Copy, Debug)]
pub struct PutLimits {
    /// Maximum number of tie-breaking states explored per evaluation.
    pub state_cap: u64,
    /// Maximum number of pairs allowed to share one margin value.
    pub margin_group_cap: usize,
}

impl Default for PutLimits {
    fn default() -> Self {
        PutLimits {
            state_cap: 1_000_000,
            margin_group_cap: 6,
        }
    }
}

fn require_candidates(profile: &Profile, required: usize) -> Result<(), Error> {
    let actual = profile.candidate_count();
    if actual < required {
        Err(Error::TooFewCandidates { required, actual })
    } else {
        Ok(())
    }
}

fn argmax_set(scores: &[i64]) -> WinnerSet {
    let best = *scores.iter().max().expect("at least one candidate");
    WinnerSet::from_set(
        scores
            .iter()
            .enumerate()
            .filter(|&(_, s)| *s == best)
            .map(|(i, _)| Candidate(i))
            .collect(),
    )
}

/// All candidates ranked first by the most voters.
pub fn plurality(profile: &Profile) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let mut scores = vec![0i64; profile.candidate_count()];
    for ballot in profile.ballots() {
        scores[ballot.ranking[0].0] += ballot.weight as i64;
    }
    Ok(argmax_set(&scores))
}

/// All candidates with maximal Borda score, where a ballot awards
/// m - rank points to each candidate.
pub fn borda(profile: &Profile) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let m = profile.candidate_count();
    let mut scores = vec![0i64; m];
    for ballot in profile.ballots() {
        for (pos, &Candidate(c)) in ballot.ranking.iter().enumerate() {
            scores[c] += ballot.weight as i64 * (m - 1 - pos) as i64;
        }
    }
    Ok(argmax_set(&scores))
}

/// All candidates maximizing pairwise wins minus pairwise losses; ties in the
/// margin matrix contribute zero.
pub fn copeland(profile: &Profile) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let margins = margin_matrix(profile);
    let scores: Vec<i64> = margins
        .candidates()
        .map(|x| {
            margins
                .candidates()
                .map(|y| {
                    let v = margins[(x, y)];
                    (v > 0) as i64 - (v < 0) as i64
                })
                .sum()
        })
        .collect();
    Ok(argmax_set(&scores))
}

struct IrvSearch<'a> {
    profile: &'a Profile,
    limits: &'a PutLimits,
    states: u64,
    memo: HashMap<Box<[Candidate]>, BTreeSet<Candidate>>,
}

impl IrvSearch<'_> {
    fn winners(&mut self, remaining: &[Candidate]) -> Result<BTreeSet<Candidate>, Error> {
        self.states += 1;
        if self.states > self.limits.state_cap {
            return Err(Error::UniverseCap {
                cap: self.limits.state_cap,
            });
        }
        if let [last] = remaining {
            return Ok(BTreeSet::from([*last]));
        }
        if let Some(hit) = self.memo.get(remaining) {
            return Ok(hit.clone());
        }
        let m = self.profile.candidate_count();
        let mut active = vec![false; m];
        for &c in remaining {
            active[c.0] = true;
        }
        let mut scores = vec![0u64; m];
        for ballot in self.profile.ballots() {
            let top = ballot
                .ranking
                .iter()
                .find(|c| active[c.0])
                .expect("some remaining candidate appears on every ballot");
            scores[top.0] += ballot.weight;
        }
        let fewest = remaining.iter().map(|c| scores[c.0]).min().unwrap();
        // Branch on every candidate tied for fewest first-place votes.
        let mut out = BTreeSet::new();
        for (i, &c) in remaining.iter().enumerate() {
            if scores[c.0] > fewest {
                continue;
            }
            let mut next = remaining.to_vec();
            next.remove(i);
            out.extend(self.winners(&next)?);
        }
        self.memo.insert(remaining.into(), out.clone());
        Ok(out)
    }
}

/// Sequential elimination of the candidate with fewest first-place votes,
/// branching on every tie for fewest.
pub fn irv(profile: &Profile) -> Result<WinnerSet, Error> {
    irv_with(profile, &PutLimits::default())
}

pub fn irv_with(profile: &Profile, limits: &PutLimits) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let mut search = IrvSearch {
        profile,
        limits,
        states: 0,
        memo: HashMap::new(),
    };
    let everyone: Vec<Candidate> = profile.candidates().collect();
    Ok(WinnerSet::from_set(search.winners(&everyone)?))
}

/// Locked-pair digraph, stored as an m*m adjacency bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
struct LockedGraph {
    m: usize,
    bits: Vec<u64>,
}

impl LockedGraph {
    fn empty(m: usize) -> Self {
        LockedGraph {
            m,
            bits: vec![0; (m * m).div_ceil(64)],
        }
    }

    fn has_edge(&self, from: Candidate, to: Candidate) -> bool {
        let i = from.0 * self.m + to.0;
        self.bits[i / 64] & (1 << (i % 64)) != 0
    }

    fn add_edge(&mut self, from: Candidate, to: Candidate) {
        let i = from.0 * self.m + to.0;
        self.bits[i / 64] |= 1 << (i % 64);
    }

    fn reaches(&self, from: Candidate, to: Candidate) -> bool {
        let mut visited = vec![false; self.m];
        let mut stack = vec![from];
        visited[from.0] = true;
        while let Some(x) = stack.pop() {
            if x == to {
                return true;
            }
            for y in 0..self.m {
                if !visited[y] && self.has_edge(x, Candidate(y)) {
                    visited[y] = true;
                    stack.push(Candidate(y));
                }
            }
        }
        false
    }

    /// Candidates with no incoming locked edge.
    fn sources(&self) -> impl Iterator<Item = Candidate> + '_ {
        (0..self.m)
            .filter(|&x| !(0..self.m).any(|z| self.has_edge(Candidate(z), Candidate(x))))
            .map(Candidate)
    }
}

fn for_each_permutation<T: Copy>(
    items: &[T],
    f: &mut impl FnMut(&[T]) -> Result<(), Error>,
) -> Result<(), Error> {
    fn rec<T: Copy>(
        items: &[T],
        used: &mut [bool],
        scratch: &mut Vec<T>,
        f: &mut impl FnMut(&[T]) -> Result<(), Error>,
    ) -> Result<(), Error> {
        if scratch.len() == items.len() {
            return f(scratch);
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                scratch.push(items[i]);
                rec(items, used, scratch, f)?;
                scratch.pop();
                used[i] = false;
            }
        }
        Ok(())
    }
    rec(items, &mut vec![false; items.len()], &mut Vec::new(), f)
}

/// Sorts pairs by decreasing margin and locks each one unless it would close
/// a cycle; only strictly positive margins are ever locked. Equal-margin
/// groups are branched over all orderings; the winners of one universe are
/// the sources of its final locked graph.
pub fn ranked_pairs(profile: &Profile) -> Result<WinnerSet, Error> {
    ranked_pairs_with(profile, &PutLimits::default())
}

pub fn ranked_pairs_with(profile: &Profile, limits: &PutLimits) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let margins = margin_matrix(profile);
    let m = margins.candidate_count();
    let mut pairs: Vec<(i64, Candidate, Candidate)> = Vec::new();
    for x in margins.candidates() {
        for y in margins.candidates() {
            if margins[(x, y)] > 0 {
                pairs.push((margins[(x, y)], x, y));
            }
        }
    }
    pairs.sort_by_key(|&(margin, x, y)| (-margin, x, y));
    let groups: Vec<Vec<(Candidate, Candidate)>> = {
        let mut groups: Vec<Vec<(Candidate, Candidate)>> = Vec::new();
        let mut last_margin = None;
        for (margin, x, y) in pairs {
            if last_margin == Some(margin) {
                groups.last_mut().unwrap().push((x, y));
            } else {
                groups.push(vec![(x, y)]);
                last_margin = Some(margin);
            }
        }
        groups
    };
    for group in &groups {
        if group.len() > limits.margin_group_cap {
            return Err(Error::MarginGroupCap {
                size: group.len(),
                cap: limits.margin_group_cap,
            });
        }
    }

    let mut states: HashSet<LockedGraph> = HashSet::from([LockedGraph::empty(m)]);
    let mut explored: u64 = 0;
    for group in &groups {
        let mut next: HashSet<LockedGraph> = HashSet::new();
        for state in &states {
            for_each_permutation(group, &mut |order| {
                explored += 1;
                if explored > limits.state_cap {
                    return Err(Error::UniverseCap {
                        cap: limits.state_cap,
                    });
                }
                let mut graph = state.clone();
                for &(x, y) in order {
                    if !graph.reaches(y, x) {
                        graph.add_edge(x, y);
                    }
                }
                next.insert(graph);
                Ok(())
            })?;
        }
        states = next;
    }

    let mut winners = BTreeSet::new();
    for state in &states {
        winners.extend(state.sources());
    }
    Ok(WinnerSet::from_set(winners))
}

/// All-pairs widest-path strengths over the margin graph. Entry (x, y) is the
/// maximum over paths from x to y of the minimum margin along the path; the
/// diagonal is fixed at zero and never consulted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BeatpathMatrix {
    m: usize,
    data: Vec<i64>,
}

impl BeatpathMatrix {
    pub fn candidate_count(&self) -> usize {
        self.m
    }
}

impl Index<(Candidate, Candidate)> for BeatpathMatrix {
    type Output = i64;

    fn index(&self, (x, y): (Candidate, Candidate)) -> &i64 {
        &self.data[x.0 * self.m + y.0]
    }
}

pub fn beatpath(margins: &MarginMatrix) -> BeatpathMatrix {
    let m = margins.candidate_count();
    let mut data = vec![0i64; m * m];
    for x in 0..m {
        for y in 0..m {
            if x != y {
                data[x * m + y] = margins[(Candidate(x), Candidate(y))];
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            if i == k {
                continue;
            }
            for j in 0..m {
                if j == i || j == k {
                    continue;
                }
                let via = data[i * m + k].min(data[k * m + j]);
                if via > data[i * m + j] {
                    data[i * m + j] = via;
                }
            }
        }
    }
    BeatpathMatrix { m, data }
}

/// All candidates whose beatpath strength to every rival is at least the
/// rival's strength back; such a candidate always exists.
pub fn schulze(profile: &Profile) -> Result<WinnerSet, Error> {
    require_candidates(profile, 2)?;
    let strengths = beatpath(&margin_matrix(profile));
    let m = strengths.candidate_count();
    let winners: BTreeSet<Candidate> = (0..m)
        .map(Candidate)
        .filter(|&x| {
            (0..m)
                .map(Candidate)
                .all(|y| y == x || strengths[(x, y)] >= strengths[(y, x)])
        })
        .collect();
    Ok(WinnerSet::from_set(winners))
}

/// Uniform dispatch over [`RuleId`] with default limits.
pub fn evaluate(rule: RuleId, profile: &Profile) -> Result<WinnerSet, Error> {
    evaluate_with(rule, profile, &PutLimits::default())
}

pub fn evaluate_with(
    rule: RuleId,
    profile: &Profile,
    limits: &PutLimits,
) -> Result<WinnerSet, Error> {
    match rule {
        RuleId::Plurality => plurality(profile),
        RuleId::Borda => borda(profile),
        RuleId::Irv => irv_with(profile, limits),
        RuleId::RankedPairs => ranked_pairs_with(profile, limits),
        RuleId::Schulze => schulze(profile),
        RuleId::Copeland => copeland(profile),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::profile::Profile;

    fn c(i: usize) -> Candidate {
        Candidate(i)
    }

    fn winners(set: &[usize]) -> WinnerSet {
        set.iter().map(|&i| c(i)).collect()
    }

    fn uniform3() -> Profile {
        Profile::from_rankings(
            3,
            &[
                (1, vec![0, 1, 2]),
                (1, vec![0, 2, 1]),
                (1, vec![1, 0, 2]),
                (1, vec![1, 2, 0]),
                (1, vec![2, 0, 1]),
                (1, vec![2, 1, 0]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn plurality_examples() {
        let maj = fixtures::majority_clone3();
        assert_eq!(plurality(&maj.profile).unwrap(), winners(&[0]));

        let unanimous = Profile::from_rankings(3, &[(5, vec![2, 1, 0])]).unwrap();
        assert_eq!(plurality(&unanimous).unwrap(), winners(&[2]));

        let ns = fixtures::nonsimple3();
        assert_eq!(plurality(&ns.profile).unwrap(), winners(&[2]));
    }

    #[test]
    fn borda_examples() {
        // Scores in majority_clone3: a = 6, b = 4, c = 5.
        let maj = fixtures::majority_clone3();
        assert_eq!(borda(&maj.profile).unwrap(), winners(&[0]));

        let unanimous = Profile::from_rankings(3, &[(5, vec![2, 1, 0])]).unwrap();
        assert_eq!(borda(&unanimous).unwrap(), winners(&[2]));

        assert_eq!(borda(&uniform3()).unwrap(), winners(&[0, 1, 2]));
    }

    #[test]
    fn irv_spoiler_flips_to_d() {
        let p = fixtures::irv_spoiler4().profile;
        assert_eq!(irv(&p).unwrap(), winners(&[0]));
        // Removing either near-clone elects d; d's index shifts after removal.
        let without_a = p.remove_candidate(c(0)).unwrap();
        assert_eq!(irv(&without_a).unwrap(), winners(&[2]));
        let without_b = p.remove_candidate(c(1)).unwrap();
        assert_eq!(irv(&without_b).unwrap(), winners(&[2]));
    }

    #[test]
    fn irv_branches_on_first_round_tie() {
        // Eliminating a reaches an exact b/c tie; eliminating b elects a.
        let ns = fixtures::nonsimple3();
        assert_eq!(irv(&ns.profile).unwrap(), winners(&[0, 1, 2]));
    }

    #[test]
    fn irv_two_candidate_tie_returns_both() {
        let tie = Profile::from_rankings(2, &[(3, vec![0, 1]), (3, vec![1, 0])]).unwrap();
        assert_eq!(irv(&tie).unwrap(), winners(&[0, 1]));
    }

    #[test]
    fn ranked_pairs_locks_by_margin() {
        let p = fixtures::ranked_pairs_spoiler4().profile;
        // Lock a>b (14) and b>c (12), skip c>a (8), lock a>d (4), d>b (2).
        assert_eq!(ranked_pairs(&p).unwrap(), winners(&[0]));
        let without_a = p.remove_candidate(c(0)).unwrap();
        assert_eq!(ranked_pairs(&without_a).unwrap(), winners(&[2]));
        let without_b = p.remove_candidate(c(1)).unwrap();
        assert_eq!(ranked_pairs(&without_b).unwrap(), winners(&[1]));
    }

    #[test]
    fn ranked_pairs_elects_condorcet_winner() {
        let maj = fixtures::majority_clone3();
        assert_eq!(ranked_pairs(&maj.profile).unwrap(), winners(&[0]));
    }

    #[test]
    fn beatpath_on_symmetric_cycle() {
        let cycle = Profile::from_rankings(
            3,
            &[(1, vec![0, 1, 2]), (1, vec![1, 2, 0]), (1, vec![2, 0, 1])],
        )
        .unwrap();
        let s = beatpath(&margin_matrix(&cycle));
        for x in 0..3 {
            for y in 0..3 {
                if x != y {
                    assert_eq!(s[(c(x), c(y))], 1);
                }
            }
        }
    }

    #[test]
    fn beatpath_two_candidates_is_the_margin() {
        let p = Profile::from_rankings(2, &[(3, vec![0, 1]), (1, vec![1, 0])]).unwrap();
        let s = beatpath(&margin_matrix(&p));
        assert_eq!(s[(c(0), c(1))], 2);
        assert_eq!(s[(c(1), c(0))], -2);
    }

    #[test]
    fn beatpath_strengths_on_spoiler4() {
        let p = fixtures::ranked_pairs_spoiler4().profile;
        let s = beatpath(&margin_matrix(&p));
        let expected = [
            // (x, y, strength), worked out from the margin table by hand.
            (0, 1, 14),
            (0, 2, 12),
            (0, 3, 4),
            (1, 0, 8),
            (1, 2, 12),
            (1, 3, 4),
            (2, 0, 8),
            (2, 1, 8),
            (2, 3, 4),
            (3, 0, 2),
            (3, 1, 2),
            (3, 2, 2),
        ];
        for (x, y, strength) in expected {
            assert_eq!(s[(c(x), c(y))], strength, "S[{x}][{y}]");
        }
        // a beats every other candidate in beatpath strength.
        for y in 1..4 {
            assert!(s[(c(0), c(y))] >= s[(c(y), c(0))]);
        }
    }

    #[test]
    fn schulze_examples() {
        let p = fixtures::ranked_pairs_spoiler4().profile;
        assert_eq!(schulze(&p).unwrap(), winners(&[0]));
        let without_a = p.remove_candidate(c(0)).unwrap();
        assert_eq!(schulze(&without_a).unwrap(), winners(&[2]));
        let without_b = p.remove_candidate(c(1)).unwrap();
        assert_eq!(schulze(&without_b).unwrap(), winners(&[1]));

        let maj = fixtures::majority_clone3();
        assert_eq!(schulze(&maj.profile).unwrap(), winners(&[0]));
        assert_eq!(schulze(&uniform3()).unwrap(), winners(&[0, 1, 2]));
    }

    #[test]
    fn copeland_examples() {
        let maj = fixtures::majority_clone3();
        assert_eq!(copeland(&maj.profile).unwrap(), winners(&[0]));

        let cycle = Profile::from_rankings(
            3,
            &[(1, vec![0, 1, 2]), (1, vec![1, 2, 0]), (1, vec![2, 0, 1])],
        )
        .unwrap();
        assert_eq!(copeland(&cycle).unwrap(), winners(&[0, 1, 2]));

        // Win-loss differentials on the spoiler profile: a = +1, b = -1,
        // c = 0, d = 0 (c and d tie pairwise).
        let rp4 = fixtures::ranked_pairs_spoiler4();
        assert_eq!(copeland(&rp4.profile).unwrap(), winners(&[0]));
    }

    #[test]
    fn evaluate_dispatches() {
        let irv4 = fixtures::irv_spoiler4();
        assert_eq!(
            evaluate(RuleId::Irv, &irv4.profile).unwrap(),
            winners(&[0])
        );
        let ns = fixtures::nonsimple3();
        assert_eq!(
            evaluate(RuleId::Plurality, &ns.profile).unwrap(),
            winners(&[2])
        );
        let majority2 = Profile::from_rankings(2, &[(3, vec![1, 0]), (2, vec![0, 1])]).unwrap();
        assert_eq!(
            evaluate(RuleId::Schulze, &majority2).unwrap(),
            winners(&[1])
        );
    }

    #[test]
    fn two_candidates_reduce_to_majority_everywhere() {
        let majority = Profile::from_rankings(2, &[(3, vec![1, 0]), (2, vec![0, 1])]).unwrap();
        let tie = Profile::from_rankings(2, &[(2, vec![1, 0]), (2, vec![0, 1])]).unwrap();
        for rule in RuleId::ALL {
            assert_eq!(evaluate(rule, &majority).unwrap(), winners(&[1]), "{rule}");
            assert_eq!(evaluate(rule, &tie).unwrap(), winners(&[0, 1]), "{rule}");
        }
    }

    #[test]
    fn single_candidate_profiles_are_rejected() {
        let single = Profile::from_rankings(1, &[(1, vec![0])]).unwrap();
        for rule in RuleId::ALL {
            assert_eq!(
                evaluate(rule, &single),
                Err(Error::TooFewCandidates {
                    required: 2,
                    actual: 1
                }),
                "{rule}"
            );
        }
    }

    #[test]
    fn state_cap_is_an_error() {
        let ns = fixtures::nonsimple3();
        let limits = PutLimits {
            state_cap: 2,
            margin_group_cap: 6,
        };
        assert_eq!(
            irv_with(&ns.profile, &limits),
            Err(Error::UniverseCap { cap: 2 })
        );
    }

    #[test]
    fn margin_group_cap_is_an_error() {
        // A unanimous 5-candidate profile puts all 10 pairs at margin n.
        let unanimous = Profile::from_rankings(5, &[(3, vec![0, 1, 2, 3, 4])]).unwrap();
        assert_eq!(
            ranked_pairs(&unanimous),
            Err(Error::MarginGroupCap { size: 10, cap: 6 })
        );
        let relaxed = PutLimits {
            state_cap: 10_000_000,
            margin_group_cap: 10,
        };
        assert_eq!(
            ranked_pairs_with(&unanimous, &relaxed).unwrap(),
            winners(&[0])
        );
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in RuleId::ALL {
            assert_eq!(rule.name().parse::<RuleId>(), Ok(rule));
        }
        assert_eq!("Ranked-Pairs".parse::<RuleId>(), Ok(RuleId::RankedPairs));
        assert!("approval".parse::<RuleId>().is_err());
    }
}
