//! The seven acceptance criteria, run in order with pinned time limits.
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fails.

use std::time::Duration;

use heisenberg_zeta::isoclass;
use heisenberg_zeta::quad_ring::QuadRing;
use heisenberg_zeta::selftest::{self, Outcome};

/// Time limits in seconds, keyed by criterion id (criterion 3 has two runs).
const LIMITS: [(u8, &str, u64); 8] = [
    (1, "enumeration", 10),
    (2, "representatives", 120),
    (3, "oracle core", 60),
    (3, "oracle stretch", 600),
    (4, "Dirichlet identity", 10),
    (5, "functional equation", 1),
    (6, "congruence engine", 10),
    (7, "series", 5),
];

/// Oracle comparisons `(d, p, k, n)` and the counts both sides must reach.
const ORACLE_EXPECTED: [((i64, u64, u32, u32), u64); 8] = [
    ((2, 2, 1, 1), 1),
    ((-1, 2, 1, 1), 1),
    ((2, 3, 1, 1), 0),
    ((5, 3, 1, 1), 0),
    ((2, 5, 1, 1), 0),
    ((2, 5, 1, 2), 24),
    ((5, 11, 1, 1), 20),
    ((2, 7, 1, 1), 12),
];

fn report(outcome: &Outcome, limit_secs: u64) -> bool {
    assert_eq!(outcome.limit, Duration::from_secs(limit_secs), "criterion {} limit", outcome.id);
    println!("{}", outcome.summary());
    outcome.passed()
}

fn main() {
    // The oracle grid is the one listed above, and its closed-form side
    // takes the listed values.
    let grid: Vec<_> = selftest::ORACLE_CORE.iter().chain(&selftest::ORACLE_STRETCH).copied().collect();
    assert_eq!(grid, ORACLE_EXPECTED.map(|(case, _)| case));
    for ((d, p, _, n), expected) in ORACLE_EXPECTED {
        let ring = QuadRing::new(d).unwrap();
        assert_eq!(isoclass::closed_form_count(&ring, p, n).unwrap(), expected, "d={d} p={p} n={n}");
    }

    let outcomes = [
        selftest::enumeration_matches_closed_form(),
        selftest::representatives_are_valid(),
        selftest::oracle_agrees_core(),
        selftest::oracle_agrees_stretch(),
        selftest::dirichlet_identity_holds(),
        selftest::functional_equation_exponents(),
        selftest::congruence_engine(1),
        selftest::series_matches_closed_form(),
    ];
    let mut all = true;
    for (outcome, &(id, _, limit)) in outcomes.iter().zip(&LIMITS) {
        assert_eq!(outcome.id, id);
        all &= report(outcome, limit);
    }
    assert!(outcomes[5].checks == 3 && outcomes[6].checks >= 1000);
    if !all {
        eprintln!("at least one acceptance criterion failed");
        std::process::exit(1);
    }
}
