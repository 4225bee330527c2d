//! Decision procedures for the independence axioms, producing verdicts with
//! machine-checkable witnesses.
//!
//! A verdict is pure data: "violated" is a result, not an error. Errors are
//! reserved for malformed inputs and the tie-breaking resource caps, which
//! propagate from the underlying rule evaluations.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::profile::{embed_after_removal, margin_matrix, smith_set, Candidate, Profile};
use crate::rules::{evaluate_with, PutLimits, RuleId, WinnerSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AxiomId {
    StrongIndependence,
    WeakIndependence,
    IndependenceOfLosers,
    SmithCriterion,
    /// Independence of Smith-dominated alternatives.
    Isda,
}

impl AxiomId {
    pub fn name(self) -> &'static str {
        match self {
            AxiomId::StrongIndependence => "strong_independence",
            AxiomId::WeakIndependence => "weak_independence",
            AxiomId::IndependenceOfLosers => "independence_of_losers",
            AxiomId::SmithCriterion => "smith_criterion",
            AxiomId::Isda => "isda",
        }
    }
}

/// Which condition of the axiom's definition a removal broke.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Condition {
    /// Condition (1): some non-clone candidate entered or left the winner set.
    NonCloneWinners,
    /// Condition (2): clone victory did not transfer the way the axiom
    /// requires (membership of the remaining clone for the strong form,
    /// non-empty intersection with the pair for the weak form).
    CloneTransfer,
    /// The winner set changed at all (losers and Smith-dominated removals).
    OutcomeChanged,
}

/// One tested removal: the deleted candidate, the winners afterwards (in the
/// original profile's indices), and the conditions it broke, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RemovalWitness {
    pub removed: Candidate,
    pub winners_after: WinnerSet,
    pub failed: Vec<Condition>,
}

impl RemovalWitness {
    pub fn passed(&self) -> bool {
        self.failed.is_empty()
    }
}

/// Outcome of one axiom check on one profile.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomVerdict {
    pub axiom: AxiomId,
    pub rule: RuleId,
    pub satisfied: bool,
    pub base_winners: WinnerSet,
    /// Smith set of the profile, for the checks that consult it.
    pub smith: Option<BTreeSet<Candidate>>,
    pub removals: Vec<RemovalWitness>,
}

/// A strong and a weak independence verdict for the same pair, sharing the
/// underlying rule evaluations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairIndependence {
    pub strong: AxiomVerdict,
    pub weak: AxiomVerdict,
}

fn require_candidates(profile: &Profile, required: usize) -> Result<(), Error> {
    let actual = profile.candidate_count();
    if actual < required {
        Err(Error::TooFewCandidates { required, actual })
    } else {
        Ok(())
    }
}

fn check_pair_args(profile: &Profile, x: Candidate, y: Candidate) -> Result<(), Error> {
    for c in [x, y] {
        if c.0 >= profile.candidate_count() {
            return Err(Error::UnknownCandidate(c.0));
        }
    }
    if x == y {
        return Err(Error::IdenticalPair);
    }
    require_candidates(profile, 3)
}

/// Winners of `P_{-removed}`, mapped back to the original candidate indices.
fn winners_after_removal(
    rule: RuleId,
    profile: &Profile,
    removed: Candidate,
    limits: &PutLimits,
) -> Result<WinnerSet, Error> {
    let reduced = profile.remove_candidate(removed)?;
    let winners = evaluate_with(rule, &reduced, limits)?;
    Ok(winners
        .iter()
        .map(|c| embed_after_removal(removed, c))
        .collect())
}

/// Condition (1), shared by every independence variant: candidates outside
/// the pair keep exactly their winner status.
fn non_clone_winners_preserved(
    profile: &Profile,
    pair: (Candidate, Candidate),
    before: &WinnerSet,
    after: &WinnerSet,
    removed: Candidate,
) -> bool {
    profile
        .candidates()
        .filter(|&z| z != pair.0 && z != pair.1 && z != removed)
        .all(|z| before.contains(z) == after.contains(z))
}

/// Checks strong and weak independence of the pair {x, y} in one pass.
///
/// Both removals are always tested, since the roles of x and y are symmetric.
/// The strong form requires every removal to pass both conditions, with the
/// transfer condition read as "some clone won before iff the remaining clone
/// wins after". The weak form requires at least one passing removal, with the
/// transfer condition in its set-intersection reading; it is never upgraded
/// to the strong membership form.
pub fn check_pair_independence(
    rule: RuleId,
    profile: &Profile,
    x: Candidate,
    y: Candidate,
    limits: &PutLimits,
) -> Result<PairIndependence, Error> {
    check_pair_args(profile, x, y)?;
    let base = evaluate_with(rule, profile, limits)?;
    let clone_won = base.contains(x) || base.contains(y);

    let mut strong_removals = Vec::with_capacity(2);
    let mut weak_removals = Vec::with_capacity(2);
    for (removed, remaining) in [(x, y), (y, x)] {
        let after = winners_after_removal(rule, profile, removed, limits)?;
        let others_ok = non_clone_winners_preserved(profile, (x, y), &base, &after, removed);

        let mut strong_failed = Vec::new();
        if !others_ok {
            strong_failed.push(Condition::NonCloneWinners);
        }
        if clone_won != after.contains(remaining) {
            strong_failed.push(Condition::CloneTransfer);
        }
        strong_removals.push(RemovalWitness {
            removed,
            winners_after: after.clone(),
            failed: strong_failed,
        });

        let mut weak_failed = Vec::new();
        if !others_ok {
            weak_failed.push(Condition::NonCloneWinners);
        }
        if clone_won != (after.contains(x) || after.contains(y)) {
            weak_failed.push(Condition::CloneTransfer);
        }
        weak_removals.push(RemovalWitness {
            removed,
            winners_after: after,
            failed: weak_failed,
        });
    }

    let strong = AxiomVerdict {
        axiom: AxiomId::StrongIndependence,
        rule,
        satisfied: strong_removals.iter().all(RemovalWitness::passed),
        base_winners: base.clone(),
        smith: None,
        removals: strong_removals,
    };
    let weak = AxiomVerdict {
        axiom: AxiomId::WeakIndependence,
        rule,
        satisfied: weak_removals.iter().any(RemovalWitness::passed),
        base_winners: base,
        smith: None,
        removals: weak_removals,
    };
    Ok(PairIndependence { strong, weak })
}

/// Strong independence of the pair: both removals must preserve non-clone
/// winners and transfer clone victory to the remaining clone. For a pair of
/// perfect clones this is exactly independence of clones.
pub fn check_strong_independence(
    rule: RuleId,
    profile: &Profile,
    x: Candidate,
    y: Candidate,
    limits: &PutLimits,
) -> Result<AxiomVerdict, Error> {
    check_pair_independence(rule, profile, x, y, limits).map(|v| v.strong)
}

/// Weak independence of the pair: at least one of the two removals must
/// preserve non-clone winners and keep the pair's win/lose status.
pub fn check_weak_independence(
    rule: RuleId,
    profile: &Profile,
    x: Candidate,
    y: Candidate,
    limits: &PutLimits,
) -> Result<AxiomVerdict, Error> {
    check_pair_independence(rule, profile, x, y, limits).map(|v| v.weak)
}

/// Winner-set equality after a removal, restricted to surviving candidates.
fn outcome_preserved(base: &WinnerSet, after: &WinnerSet, removed: Candidate) -> bool {
    let restricted: BTreeSet<Candidate> =
        base.iter().filter(|&c| c != removed).collect();
    restricted == *after.as_set()
}

/// Removing any non-winner must leave the winner set unchanged.
pub fn check_independence_of_losers(
    rule: RuleId,
    profile: &Profile,
    limits: &PutLimits,
) -> Result<AxiomVerdict, Error> {
    require_candidates(profile, 3)?;
    let base = evaluate_with(rule, profile, limits)?;
    let mut removals = Vec::new();
    for z in profile.candidates() {
        if base.contains(z) {
            continue;
        }
        let after = winners_after_removal(rule, profile, z, limits)?;
        let failed = if outcome_preserved(&base, &after, z) {
            Vec::new()
        } else {
            vec![Condition::OutcomeChanged]
        };
        removals.push(RemovalWitness {
            removed: z,
            winners_after: after,
            failed,
        });
    }
    Ok(AxiomVerdict {
        axiom: AxiomId::IndependenceOfLosers,
        rule,
        satisfied: removals.iter().all(RemovalWitness::passed),
        base_winners: base,
        smith: None,
        removals,
    })
}

/// The winner set must be contained in the Smith set.
pub fn check_smith_criterion(
    rule: RuleId,
    profile: &Profile,
    limits: &PutLimits,
) -> Result<AxiomVerdict, Error> {
    require_candidates(profile, 2)?;
    let base = evaluate_with(rule, profile, limits)?;
    let smith = smith_set(&margin_matrix(profile));
    let satisfied = base.iter().all(|c| smith.contains(&c));
    Ok(AxiomVerdict {
        axiom: AxiomId::SmithCriterion,
        rule,
        satisfied,
        base_winners: base,
        smith: Some(smith),
        removals: Vec::new(),
    })
}

/// Removing any candidate outside the Smith set must leave the winner set
/// unchanged (restricted to survivors, for rules that elect outside it).
pub fn check_isda(
    rule: RuleId,
    profile: &Profile,
    limits: &PutLimits,
) -> Result<AxiomVerdict, Error> {
    require_candidates(profile, 3)?;
    let base = evaluate_with(rule, profile, limits)?;
    let smith = smith_set(&margin_matrix(profile));
    let mut removals = Vec::new();
    for z in profile.candidates() {
        if smith.contains(&z) {
            continue;
        }
        let after = winners_after_removal(rule, profile, z, limits)?;
        let failed = if outcome_preserved(&base, &after, z) {
            Vec::new()
        } else {
            vec![Condition::OutcomeChanged]
        };
        removals.push(RemovalWitness {
            removed: z,
            winners_after: after,
            failed,
        });
    }
    Ok(AxiomVerdict {
        axiom: AxiomId::Isda,
        rule,
        satisfied: removals.iter().all(RemovalWitness::passed),
        base_winners: base,
        smith: Some(smith),
        removals,
    })
}

/// True when the rule returns exactly one winner on this profile.
pub fn is_simple(rule: RuleId, profile: &Profile, limits: &PutLimits) -> Result<bool, Error> {
    Ok(evaluate_with(rule, profile, limits)?.len() == 1)
}
