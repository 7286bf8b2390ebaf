mod common;

use clifford_core::invariants::{check, Coverage};

#[test]
fn random_corpus_satisfies_every_invariant() {
    let corpus = common::corpus(500, 0x5eed_c11f);
    let mut seen = Coverage::default();
    let mut failures = Vec::new();
    for s in &corpus {
        let report = check(s);
        seen.symmetric |= report.coverage.symmetric;
        seen.max_embedding |= report.coverage.max_embedding;
        seen.sparse |= report.coverage.sparse;
        seen.monotone_blocks |= report.coverage.monotone_blocks;
        for v in report.violations {
            failures.push(format!("{s}: {} ({})", v.property, v.detail));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
    assert_eq!(
        seen,
        Coverage { symmetric: true, max_embedding: true, sparse: true, monotone_blocks: true },
        "corpus misses a conditional branch"
    );
}

#[test]
fn corpus_is_reproducible_and_in_range() {
    let a = common::corpus(50, 7);
    let b = common::corpus(50, 7);
    assert_eq!(a, b);
    assert!(a.iter().all(|s| s.conductor() <= common::MAX_CONDUCTOR));
    assert!(a.iter().any(|s| s.conductor() > 1_000));
}
