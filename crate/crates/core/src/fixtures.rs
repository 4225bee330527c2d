//! Bundled witness profiles used by the regression suite and tests.
//!
//! Each fixture is the smallest instance of a parametric family on which the
//! interesting behavior (clone-score gaps, winner flips after deleting a
//! near-clone, exact ties) already shows up.

use crate::profile::{Candidate, Profile};

/// A named, documented profile constant.
pub struct Fixture {
    pub name: &'static str,
    /// What the profile witnesses.
    pub note: &'static str,
    pub profile: Profile,
}

fn build(m: usize, names: Option<&[&str]>, rankings: &[(u64, Vec<usize>)]) -> Profile {
    match names {
        Some(names) => {
            let names = names.iter().map(|s| s.to_string()).collect();
            let ballots = rankings
                .iter()
                .map(|(w, order)| crate::profile::Ballot {
                    weight: *w,
                    ranking: order.iter().map(|&c| Candidate(c)).collect(),
                })
                .collect();
            Profile::new(names, ballots).expect("fixture profile is valid")
        }
        None => Profile::from_rankings(m, rankings).expect("fixture profile is valid"),
    }
}

/// 10 voters over 100 candidates. The pair {a1, a2} is adjacent on nine
/// ballots but maximally separated on the tenth, so its deletion score is
/// tiny while its swap score is huge; {a1, a3} shows the reverse pattern.
pub fn wide_spread_pair100() -> Fixture {
    let names: Vec<String> = (1..=100).map(|i| format!("a{i}")).collect();
    // a2 > a1 > a3 > a4 > ... > a100
    let mut first = vec![1usize, 0];
    first.extend(2..100);
    // a1 > a2 > a3 > ... > a100
    let second: Vec<usize> = (0..100).collect();
    // a1 > a3 > a100 > a99 > ... > a4 > a2
    let mut third = vec![0usize, 2];
    third.extend((3..100).rev());
    third.push(1);
    let ballots = [(5u64, first), (4, second), (1, third)]
        .into_iter()
        .map(|(w, order)| crate::profile::Ballot {
            weight: w,
            ranking: order.into_iter().map(Candidate).collect(),
        })
        .collect();
    Fixture {
        name: "wide_spread_pair100",
        note: "one far-apart ballot separates the deletion and swap measures",
        profile: Profile::new(names, ballots).expect("fixture profile is valid"),
    }
}

/// 5 voters over {a, b, c}: b and c are perfect clones, a wins, yet deleting
/// a hands the two-candidate majority to c rather than to a's near-clone b.
pub fn majority_clone3() -> Fixture {
    Fixture {
        name: "majority_clone3",
        note: "near-clone pair {a,b} loses the transfer test under any majority-consistent rule",
        profile: build(
            3,
            Some(&["a", "b", "c"]),
            &[(2, vec![0, 1, 2]), (2, vec![2, 1, 0]), (1, vec![0, 2, 1])],
        ),
    }
}

/// 9 voters over {a, b, c, d}. Sequential elimination elects a, but deleting
/// either of the near-clones {a, b} makes d the winner.
pub fn irv_spoiler4() -> Fixture {
    Fixture {
        name: "irv_spoiler4",
        note: "elimination order flips the winner from a to d after deleting either near-clone",
        profile: build(
            4,
            Some(&["a", "b", "c", "d"]),
            &[
                (1, vec![0, 1, 2, 3]),
                (1, vec![1, 0, 2, 3]),
                (1, vec![3, 0, 1, 2]),
                (2, vec![2, 3, 0, 1]),
                (2, vec![0, 3, 1, 2]),
                (2, vec![1, 3, 0, 2]),
            ],
        ),
    }
}

/// 34 voters over {a, b, c, d} with margin table
/// a/b = 14, a/c = -8, a/d = 4, b/c = 12, b/d = -2, c/d = 0.
/// Locking pairs by margin elects a; deleting a elects d, deleting b elects c.
/// The same flips occur under beatpath strengths.
pub fn ranked_pairs_spoiler4() -> Fixture {
    Fixture {
        name: "ranked_pairs_spoiler4",
        note: "pair-locking and beatpath winner a flips to d (drop a) and c (drop b)",
        profile: build(
            4,
            Some(&["a", "b", "c", "d"]),
            &[
                (11, vec![3, 0, 1, 2]),
                (4, vec![2, 0, 1, 3]),
                (10, vec![1, 2, 0, 3]),
                (2, vec![0, 1, 3, 2]),
                (3, vec![2, 0, 3, 1]),
                (4, vec![3, 2, 0, 1]),
            ],
        ),
    }
}

/// 14 voters over {a, b, c}. Elimination elects a, but deleting either of
/// {a, b} leaves an exact pairwise tie with c, so both removals change the
/// winner set. The pair's deletion score sits just above one third.
pub fn irv_threshold3() -> Fixture {
    Fixture {
        name: "irv_threshold3",
        note: "deletion score 3/7 > 1/3 and both removals reach an exact tie with c",
        profile: build(
            3,
            Some(&["a", "b", "c"]),
            &[
                (4, vec![2, 0, 1]),
                (3, vec![0, 2, 1]),
                (3, vec![1, 2, 0]),
                (2, vec![0, 1, 2]),
                (2, vec![1, 0, 2]),
            ],
        ),
    }
}

/// 10 voters over {a, b, c}. The first elimination round ties between a and
/// b, so branching tie-breaking returns several winners: the profile is not
/// simple under sequential elimination.
pub fn nonsimple3() -> Fixture {
    Fixture {
        name: "nonsimple3",
        note: "first-round tie between a and b makes elimination non-simple",
        profile: build(
            3,
            Some(&["a", "b", "c"]),
            &[
                (1, vec![0, 2, 1]),
                (2, vec![0, 1, 2]),
                (3, vec![1, 0, 2]),
                (4, vec![2, 0, 1]),
            ],
        ),
    }
}

/// All bundled fixtures.
pub fn all() -> Vec<Fixture> {
    vec![
        wide_spread_pair100(),
        majority_clone3(),
        irv_spoiler4(),
        ranked_pairs_spoiler4(),
        irv_threshold3(),
        nonsimple3(),
    ]
}
