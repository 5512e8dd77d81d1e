//! Run the sufficient conditions for the transposition symmetry against
//! the shipped rules, then against a deliberately broken rule whose
//! initial weights depend on the inserted letter.

use qgrowth::branching::check_conditions;
use qgrowth::rules::QColumnLetterScaled;
use qgrowth::rule_by_name;

fn main() {
    for name in ["qcol", "qrow", "dyn3"] {
        let rule = rule_by_name(name).unwrap();
        let report = check_conditions(rule.as_ref(), 4, 6);
        println!(
            "{:>4}: {} triplets checked, {}",
            name,
            report.triplets_checked,
            if report.passed() { "all conditions hold" } else { "VIOLATED" }
        );
        assert!(report.passed());
    }

    let broken = check_conditions(&QColumnLetterScaled, 4, 6);
    assert!(!broken.passed());
    let first = &broken.violations[0];
    println!(
        "letter-scaled rule rejected: condition {} at {}",
        first.condition, first.witness
    );
}
