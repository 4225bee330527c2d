//! The bundled regression suite: every fixture expectation evaluated against
//! the library and cross-checked against the brute-force references, with one
//! pass/fail line per expectation.

use std::collections::BTreeSet;

use cloneaudit_core::axioms::{
    check_strong_independence, check_weak_independence, is_simple,
};
use cloneaudit_core::clones::{alpha_deletion, beta_swap, Rational};
use cloneaudit_core::profile::{margin_matrix, Candidate};
use cloneaudit_core::rules::{evaluate, PutLimits, RuleId, WinnerSet};
use cloneaudit_core::{fixtures, Profile};

use crate::oracles::reference_winners;

pub struct RegressReport {
    /// (passed, line) per expectation, in execution order.
    pub checks: Vec<(bool, String)>,
}

impl RegressReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(ok, _)| *ok)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|(ok, _)| !ok).count()
    }

    fn record(&mut self, name: &str, ok: bool, diff: String) {
        if ok {
            self.checks.push((true, format!("ok - {name}")));
        } else {
            self.checks.push((false, format!("FAIL - {name}: {diff}")));
        }
    }

    fn check_eq<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, expected: T, got: T) {
        let ok = expected == got;
        self.record(
            name,
            ok,
            format!("expected {expected:?}, got {got:?}"),
        );
    }

    fn check(&mut self, name: &str, ok: bool, diff: &str) {
        self.record(name, ok, diff.to_string());
    }
}

fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

fn named_set(p: &Profile, winners: &WinnerSet) -> Vec<String> {
    winners.iter().map(|c| p.name(c).to_string()).collect()
}

/// Evaluates a rule and cross-checks it against the brute-force reference;
/// records the comparison and returns the winner set.
fn evaluate_checked(
    report: &mut RegressReport,
    rule: RuleId,
    p: &Profile,
    label: &str,
) -> WinnerSet {
    let winners = evaluate(rule, p).expect("fixtures stay within the default caps");
    let reference: BTreeSet<Candidate> = reference_winners(rule, p);
    report.check_eq(
        &format!("{label}: {rule} agrees with the brute-force reference"),
        &reference,
        winners.as_set(),
    );
    winners
}

pub fn run() -> RegressReport {
    let mut report = RegressReport { checks: Vec::new() };
    let limits = PutLimits::default();

    // Margin table of the pair-locking spoiler fixture.
    let rp4 = fixtures::ranked_pairs_spoiler4();
    let margins = margin_matrix(&rp4.profile);
    let (a, b, c, d) = (Candidate(0), Candidate(1), Candidate(2), Candidate(3));
    let expected_margins = [
        ((a, b), 14),
        ((a, c), -8),
        ((a, d), 4),
        ((b, c), 12),
        ((b, d), -2),
        ((c, d), 0),
    ];
    let table_ok = expected_margins
        .iter()
        .all(|&((x, y), v)| margins[(x, y)] == v && margins[(y, x)] == -v);
    report.check(
        "ranked_pairs_spoiler4: margin table",
        table_ok,
        &format!(
            "got a/b={} a/c={} a/d={} b/c={} b/d={} c/d={}",
            margins[(a, b)],
            margins[(a, c)],
            margins[(a, d)],
            margins[(b, c)],
            margins[(b, d)],
            margins[(c, d)]
        ),
    );

    // Closed-form deletion scores.
    let maj = fixtures::majority_clone3();
    let irv4 = fixtures::irv_spoiler4();
    let third = fixtures::irv_threshold3();
    report.check_eq(
        "majority_clone3: alpha(a,b) = 1/5",
        ratio(1, 5),
        alpha_deletion(&maj.profile, a, b).unwrap(),
    );
    report.check_eq(
        "majority_clone3: alpha(b,c) = 0",
        ratio(0, 1),
        alpha_deletion(&maj.profile, b, c).unwrap(),
    );
    report.check_eq(
        "irv_spoiler4: alpha(a,b) = 4/9",
        ratio(4, 9),
        alpha_deletion(&irv4.profile, a, b).unwrap(),
    );
    report.check_eq(
        "ranked_pairs_spoiler4: alpha(a,b) = 13/34",
        ratio(13, 34),
        alpha_deletion(&rp4.profile, a, b).unwrap(),
    );
    report.check_eq(
        "irv_threshold3: alpha(a,b) = 3/7",
        ratio(3, 7),
        alpha_deletion(&third.profile, a, b).unwrap(),
    );

    // The wide-spread fixture separates the two measures.
    let wide = fixtures::wide_spread_pair100();
    let (a1, a2, a3) = (Candidate(0), Candidate(1), Candidate(2));
    report.check_eq(
        "wide_spread_pair100: alpha(a1,a2) = 1/10",
        ratio(1, 10),
        alpha_deletion(&wide.profile, a1, a2).unwrap(),
    );
    report.check_eq(
        "wide_spread_pair100: beta(a1,a2) = 49/5",
        ratio(49, 5),
        beta_swap(&wide.profile, a1, a2).unwrap(),
    );
    report.check_eq(
        "wide_spread_pair100: alpha(a1,a3) = 2/5",
        ratio(2, 5),
        alpha_deletion(&wide.profile, a1, a3).unwrap(),
    );
    report.check_eq(
        "wide_spread_pair100: beta(a1,a3) = 2/5",
        ratio(2, 5),
        beta_swap(&wide.profile, a1, a3).unwrap(),
    );

    // Strong independence fails for {a, b} on the majority fixture under
    // every clone-friendly rule, and holds for the perfect clones {b, c}.
    for rule in [RuleId::Irv, RuleId::RankedPairs, RuleId::Schulze] {
        let winners = evaluate_checked(&mut report, rule, &maj.profile, "majority_clone3");
        report.check_eq(
            &format!("majority_clone3: {rule} elects a"),
            vec!["a".to_string()],
            named_set(&maj.profile, &winners),
        );
        let verdict =
            check_strong_independence(rule, &maj.profile, a, b, &limits).unwrap();
        report.check(
            &format!("majority_clone3: {rule} breaks strong independence for {{a,b}}"),
            !verdict.satisfied,
            "verdict unexpectedly satisfied",
        );
        let perfect = check_strong_independence(rule, &maj.profile, b, c, &limits).unwrap();
        report.check(
            &format!("majority_clone3: {rule} keeps strong independence for {{b,c}}"),
            perfect.satisfied,
            "verdict unexpectedly violated",
        );
    }

    // Elimination spoiler: winner a, both removals elect d.
    let winners = evaluate_checked(&mut report, RuleId::Irv, &irv4.profile, "irv_spoiler4");
    report.check_eq(
        "irv_spoiler4: irv elects a",
        vec!["a".to_string()],
        named_set(&irv4.profile, &winners),
    );
    let verdict = check_weak_independence(RuleId::Irv, &irv4.profile, a, b, &limits).unwrap();
    report.check(
        "irv_spoiler4: irv breaks weak independence for {a,b}",
        !verdict.satisfied,
        "verdict unexpectedly satisfied",
    );
    for witness in &verdict.removals {
        let after: Vec<String> = witness
            .winners_after
            .iter()
            .map(|w| irv4.profile.name(w).to_string())
            .collect();
        report.check_eq(
            &format!(
                "irv_spoiler4: dropping {} hands the win to d",
                irv4.profile.name(witness.removed)
            ),
            vec!["d".to_string()],
            after,
        );
    }
    for removed in [a, b] {
        let reduced = irv4.profile.remove_candidate(removed).unwrap();
        evaluate_checked(&mut report, RuleId::Irv, &reduced, "irv_spoiler4 reduced");
    }

    // Pair-locking spoiler: winner a; dropping a elects d, dropping b elects c.
    for rule in [RuleId::RankedPairs, RuleId::Schulze] {
        let winners = evaluate_checked(&mut report, rule, &rp4.profile, "ranked_pairs_spoiler4");
        report.check_eq(
            &format!("ranked_pairs_spoiler4: {rule} elects a"),
            vec!["a".to_string()],
            named_set(&rp4.profile, &winners),
        );
        let verdict = check_weak_independence(rule, &rp4.profile, a, b, &limits).unwrap();
        report.check(
            &format!("ranked_pairs_spoiler4: {rule} breaks weak independence for {{a,b}}"),
            !verdict.satisfied,
            "verdict unexpectedly satisfied",
        );
        let expected_after = [vec!["d".to_string()], vec!["c".to_string()]];
        for (witness, expected) in verdict.removals.iter().zip(expected_after) {
            let after: Vec<String> = witness
                .winners_after
                .iter()
                .map(|w| rp4.profile.name(w).to_string())
                .collect();
            report.check_eq(
                &format!(
                    "ranked_pairs_spoiler4: {rule} after dropping {}",
                    rp4.profile.name(witness.removed)
                ),
                expected,
                after,
            );
        }
        for removed in [a, b] {
            let reduced = rp4.profile.remove_candidate(removed).unwrap();
            evaluate_checked(&mut report, rule, &reduced, "ranked_pairs_spoiler4 reduced");
        }
    }

    // Threshold fixture: weak independence breaks through exact ties.
    let winners = evaluate_checked(&mut report, RuleId::Irv, &third.profile, "irv_threshold3");
    report.check_eq(
        "irv_threshold3: irv elects a",
        vec!["a".to_string()],
        named_set(&third.profile, &winners),
    );
    let verdict = check_weak_independence(RuleId::Irv, &third.profile, a, b, &limits).unwrap();
    report.check(
        "irv_threshold3: irv breaks weak independence for {a,b}",
        !verdict.satisfied,
        "verdict unexpectedly satisfied",
    );
    let tie_sets = [vec!["b", "c"], vec!["a", "c"]];
    for (witness, expected) in verdict.removals.iter().zip(tie_sets) {
        let after: Vec<String> = witness
            .winners_after
            .iter()
            .map(|w| third.profile.name(w).to_string())
            .collect();
        report.check_eq(
            &format!(
                "irv_threshold3: dropping {} reaches the exact tie",
                third.profile.name(witness.removed)
            ),
            expected.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            after,
        );
    }

    // Non-simple fixture: branching returns several winners.
    let ns = fixtures::nonsimple3();
    let winners = evaluate_checked(&mut report, RuleId::Irv, &ns.profile, "nonsimple3");
    report.check_eq(
        "nonsimple3: irv branches to {a,b,c}",
        vec!["a".to_string(), "b".to_string(), "c".to_string()],
        named_set(&ns.profile, &winners),
    );
    report.check(
        "nonsimple3: profile is not irv-simple",
        !is_simple(RuleId::Irv, &ns.profile, &limits).unwrap(),
        "profile unexpectedly simple",
    );

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn the_full_suite_passes() {
        let report = run();
        for (ok, line) in &report.checks {
            assert!(*ok, "{line}");
        }
        assert!(report.checks.len() >= 40);
    }
}
