//! Brute-force reference evaluations used by the regression suite to
//! cross-check the library's branching rules.
//!
//! These share no code with the library implementations: plain recursion
//! with no memoization, cycle detection over flat edge lists, and path
//! enumeration instead of the widest-path recurrence.

use std::collections::BTreeSet;

use cloneaudit_core::profile::{margin_matrix, Candidate, MarginMatrix};
use cloneaudit_core::rules::RuleId;
use cloneaudit_core::Profile;

fn irv_branches(p: &Profile, remaining: &[Candidate], out: &mut BTreeSet<Candidate>) {
    if let [winner] = remaining {
        out.insert(*winner);
        return;
    }
    let mut scores = vec![0u64; p.candidate_count()];
    for ballot in p.ballots() {
        let top = ballot
            .ranking
            .iter()
            .find(|&&c| remaining.contains(&c))
            .expect("ballots rank every candidate");
        scores[top.0] += ballot.weight;
    }
    let fewest = remaining.iter().map(|c| scores[c.0]).min().unwrap();
    for (i, &c) in remaining.iter().enumerate() {
        if scores[c.0] == fewest {
            let mut next = remaining.to_vec();
            next.remove(i);
            irv_branches(p, &next, out);
        }
    }
}

fn reaches(edges: &[(Candidate, Candidate)], from: Candidate, to: Candidate) -> bool {
    let mut stack = vec![from];
    let mut seen = BTreeSet::from([from]);
    while let Some(x) = stack.pop() {
        if x == to {
            return true;
        }
        for &(a, b) in edges {
            if a == x && seen.insert(b) {
                stack.push(b);
            }
        }
    }
    false
}

fn positive_margin_groups(margins: &MarginMatrix) -> Vec<Vec<(Candidate, Candidate)>> {
    let mut pairs = Vec::new();
    for x in margins.candidates() {
        for y in margins.candidates() {
            if margins[(x, y)] > 0 {
                pairs.push((margins[(x, y)], x, y));
            }
        }
    }
    pairs.sort_by_key(|&(margin, x, y)| (-margin, x, y));
    let mut groups: Vec<(i64, Vec<(Candidate, Candidate)>)> = Vec::new();
    for (margin, x, y) in pairs {
        match groups.last_mut() {
            Some((m, group)) if *m == margin => group.push((x, y)),
            _ => groups.push((margin, vec![(x, y)])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

fn lock_universes(
    m: usize,
    groups: &[Vec<(Candidate, Candidate)>],
    locked: &[(Candidate, Candidate)],
    out: &mut BTreeSet<Candidate>,
) {
    let Some((group, rest)) = groups.split_first() else {
        for x in (0..m).map(Candidate) {
            if !locked.iter().any(|&(_, to)| to == x) {
                out.insert(x);
            }
        }
        return;
    };
    let mut order: Vec<usize> = (0..group.len()).collect();
    permute(&mut order, 0, &mut |perm| {
        let mut extended = locked.to_vec();
        for &i in perm {
            let (x, y) = group[i];
            if !reaches(&extended, y, x) {
                extended.push((x, y));
            }
        }
        lock_universes(m, rest, &extended, out);
    });
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Maximum over simple paths of the minimum margin, by exhaustive search.
pub fn reference_beatpath(margins: &MarginMatrix, from: Candidate, to: Candidate) -> i64 {
    fn explore(
        margins: &MarginMatrix,
        here: Candidate,
        target: Candidate,
        strength: i64,
        visited: &mut Vec<Candidate>,
        best: &mut i64,
    ) {
        for next in margins.candidates() {
            if visited.contains(&next) {
                continue;
            }
            let along = strength.min(margins[(here, next)]);
            if next == target {
                *best = (*best).max(along);
                continue;
            }
            visited.push(next);
            explore(margins, next, target, along, visited, best);
            visited.pop();
        }
    }
    let mut best = i64::MIN;
    explore(margins, from, to, i64::MAX, &mut vec![from], &mut best);
    best
}

/// Reference winner set for the three branching-sensitive rules. Only usable
/// on small profiles; the regression fixtures all qualify.
pub fn reference_winners(rule: RuleId, p: &Profile) -> BTreeSet<Candidate> {
    match rule {
        RuleId::Irv => {
            let everyone: Vec<Candidate> = p.candidates().collect();
            let mut out = BTreeSet::new();
            irv_branches(p, &everyone, &mut out);
            out
        }
        RuleId::RankedPairs => {
            let groups = positive_margin_groups(&margin_matrix(p));
            let mut out = BTreeSet::new();
            lock_universes(p.candidate_count(), &groups, &[], &mut out);
            out
        }
        RuleId::Schulze => {
            let margins = margin_matrix(p);
            let strong = |x: Candidate, y: Candidate| reference_beatpath(&margins, x, y);
            p.candidates()
                .filter(|&x| p.candidates().all(|y| y == x || strong(x, y) >= strong(y, x)))
                .collect()
        }
        other => panic!("no reference evaluation for {other}"),
    }
}
