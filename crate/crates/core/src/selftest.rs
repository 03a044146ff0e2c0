//! The acceptance grid: seven end-to-end checks, each with a time budget.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arith;
use crate::congruence::{self, Congruence, MonicQuadratic};
use crate::error::Result;
use crate::isoclass;
use crate::oracle::{self, OracleLimits};
use crate::quad_ring::{PrimeClass, QuadRing};
use crate::repbuild;
use crate::zeta;

/// Square-free `d` values covering both branches and every sign.
pub const D_GRID: [i64; 7] = [-3, -1, 2, 3, 5, 10, 13];
pub const P_GRID: [u64; 6] = [2, 3, 5, 7, 11, 13];
pub const N_MAX: u32 = 6;
/// Largest dimension whose representatives are built and verified.
pub const BUILD_DIM_MAX: u64 = 49;
/// `(d, p, k, n)` oracle comparisons that run with the default limits.
pub const ORACLE_CORE: [(i64, u64, u32, u32); 6] =
    [(2, 2, 1, 1), (-1, 2, 1, 1), (2, 3, 1, 1), (5, 3, 1, 1), (2, 5, 1, 1), (2, 5, 1, 2)];
/// `(d, p, k, n)` oracle comparisons that need [`OracleLimits::stretch`].
pub const ORACLE_STRETCH: [(i64, u64, u32, u32); 2] = [(5, 11, 1, 1), (2, 7, 1, 1)];
pub const IDENTITY_D: [i64; 3] = [-1, 2, 5];
pub const IDENTITY_BOUND: usize = 500;
pub const CONGRUENCE_P_MAX: u64 = 13;
pub const CONGRUENCE_K_MAX: u32 = 5;
pub const RANDOM_QUADRATICS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    /// Number of individual comparisons made.
    pub checks: u64,
    /// The first failed comparison, if any.
    pub failure: Option<String>,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.elapsed <= self.limit
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.within_limit()
    }

    /// One line: `criterion <id> PASS|FAIL <name> ...`.
    pub fn summary(&self) -> String {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let mut line = format!(
            "criterion {} {verdict} {} ({} checks, {:.2}s of {}s)",
            self.id,
            self.name,
            self.checks,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        );
        if let Some(f) = &self.failure {
            line.push_str(&format!(": {f}"));
        }
        if !self.within_limit() {
            line.push_str(": time limit exceeded");
        }
        line
    }
}

/// Counts checks and keeps the first failure.
struct Tally {
    checks: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn record<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(false, || format!("{}: {e}", context()));
                None
            }
        }
    }
}

fn timed(id: u8, name: &'static str, limit_secs: u64, body: impl FnOnce(&mut Tally)) -> Outcome {
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally);
    Outcome {
        id,
        name,
        checks: tally.checks,
        failure: tally.failure,
        elapsed: start.elapsed(),
        limit: Duration::from_secs(limit_secs),
    }
}

fn rings(ds: &[i64]) -> Vec<QuadRing> {
    ds.iter()
        .map(|&d| QuadRing::new(d).expect("grid values are square-free"))
        .collect()
}

/// Enumerated census sizes equal the closed form.
pub fn enumeration_matches_closed_form() -> Outcome {
    timed(1, "enumeration matches closed form", 10, |t| {
        for ring in rings(&D_GRID) {
            for p in P_GRID {
                for n in 0..=N_MAX {
                    let ctx = || format!("d={} p={p} n={n}", ring.d);
                    let (Some(census), Some(expected)) = (
                        t.record(isoclass::enumerate(&ring, p, n), ctx),
                        t.record(isoclass::closed_form_count(&ring, p, n), ctx),
                    ) else {
                        continue;
                    };
                    let got = census.count();
                    t.check(got == expected, || format!("{}: enumerated {got}, closed form {expected}", ctx()));
                }
            }
        }
    })
}

/// Every representative of dimension at most [`BUILD_DIM_MAX`] satisfies the
/// relations, is irreducible, and has twist invariants unique in its census.
pub fn representatives_are_valid() -> Outcome {
    timed(2, "representatives are valid and distinct", 120, |t| {
        for ring in rings(&D_GRID) {
            for p in P_GRID {
                for n in (0..).take_while(|&n| arith::pow(p, n) <= BUILD_DIM_MAX) {
                    let ctx = || format!("d={} p={p} n={n}", ring.d);
                    let Some(census) = t.record(isoclass::enumerate(&ring, p, n), ctx) else {
                        continue;
                    };
                    let mut seen = HashSet::new();
                    for label in census.labels() {
                        let Some(rep) = t.record(repbuild::build(&ring, &label), || format!("{label:?}")) else {
                            continue;
                        };
                        t.check(repbuild::verify_relations(&ring, &rep), || format!("relations fail for {label:?}"));
                        let irreducible = t.record(repbuild::verify_irreducible(&rep), || format!("{label:?}"));
                        if let Some(irr) = irreducible {
                            t.check(irr, || format!("reducible: {label:?}"));
                        }
                        let inv = repbuild::twist_invariants(&rep);
                        t.check(seen.insert(inv), || format!("{}: twist invariants {inv:?} repeat", ctx()));
                    }
                }
            }
        }
    })
}

fn oracle_cases(t: &mut Tally, cases: &[(i64, u64, u32, u32)], limits: &OracleLimits) {
    for &(d, p, k, n) in cases {
        let ctx = || format!("d={d} p={p} k={k} n={n}");
        let Some(ring) = t.record(QuadRing::new(d), ctx) else {
            continue;
        };
        if let Some(c) = t.record(oracle::compare(&ring, p, k, n, limits), ctx) {
            t.check(c.agree, || format!("{}: oracle {}, closed form {}", ctx(), c.oracle_count, c.closed_form));
        }
    }
}

/// Character-table orbit counts equal the closed form on the small quotients.
pub fn oracle_agrees_core() -> Outcome {
    timed(3, "oracle agrees with closed form (core)", 60, |t| {
        oracle_cases(t, &ORACLE_CORE, &OracleLimits::default());
    })
}

/// The same comparison on the two largest quotients.
pub fn oracle_agrees_stretch() -> Outcome {
    timed(3, "oracle agrees with closed form (stretch)", 600, |t| {
        oracle_cases(t, &ORACLE_STRETCH, &OracleLimits::stretch());
    })
}

/// `ζ_K(s−1)/ζ_K(s)` has coefficients `r_n` up to [`IDENTITY_BOUND`].
pub fn dirichlet_identity_holds() -> Outcome {
    timed(4, "global Dirichlet identity", 10, |t| {
        for ring in rings(&IDENTITY_D) {
            let ctx = || format!("d={} N={IDENTITY_BOUND}", ring.d);
            if let Some(ok) = t.record(zeta::check_global_identity(&ring, IDENTITY_BOUND), ctx) {
                t.check(ok, || format!("{}: coefficients differ", ctx()));
            }
        }
    })
}

/// The local factors satisfy the functional equation with exponents 2, 2, 1.
pub fn functional_equation_exponents() -> Outcome {
    timed(5, "functional equation exponents", 1, |t| {
        for (class, expected) in [(PrimeClass::Inert, 2), (PrimeClass::Split, 2), (PrimeClass::Ramified, 1)] {
            if let Some(e) = t.record(zeta::functional_equation_exponent(class), || format!("{class}")) {
                t.check(e == expected, || format!("{class}: exponent {e}, expected {expected}"));
            }
        }
    })
}

/// Test polynomials: the splitting polynomials of [`D_GRID`] and every
/// `x² + bx + c` with `|b|, |c| <= 4`.
fn congruence_grid() -> Vec<MonicQuadratic> {
    let mut polys: Vec<MonicQuadratic> = rings(&D_GRID).iter().map(QuadRing::splitting_poly).collect();
    for b in -4..=4 {
        for c in -4..=4 {
            let f = MonicQuadratic::new(b, c);
            if !polys.contains(&f) {
                polys.push(f);
            }
        }
    }
    polys
}

/// Lifting agrees with the exhaustive scan, and a quadratic whose
/// discriminant is a unit has at most two roots modulo any `p^k`.
pub fn congruence_engine(seed: u64) -> Outcome {
    timed(6, "congruence engine", 10, |t| {
        let primes = arith::primes_up_to(CONGRUENCE_P_MAX);
        for f in congruence_grid() {
            for &p in &primes {
                for k in 0..=CONGRUENCE_K_MAX {
                    let ctx = || format!("{f:?} p={p} k={k}");
                    let Some(c) = t.record(Congruence::new(f, p, k), ctx) else {
                        continue;
                    };
                    if let Some(reference) = t.record(congruence::solve_exhaustive(&c), ctx) {
                        t.check(congruence::solve(&c) == reference, || format!("{}: solvers differ", ctx()));
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut sampled = 0;
        while sampled < RANDOM_QUADRATICS {
            let p = primes[rng.gen_range(0..primes.len())];
            let k = rng.gen_range(1..=CONGRUENCE_K_MAX);
            let f = MonicQuadratic::new(rng.gen_range(-1000..=1000), rng.gen_range(-1000..=1000));
            let disc = f.b as i128 * f.b as i128 - 4 * f.c as i128;
            if arith::modulo(disc, p) == 0 {
                continue;
            }
            sampled += 1;
            let ctx = || format!("{f:?} p={p} k={k}");
            let Some(c) = t.record(Congruence::new(f, p, k), ctx) else {
                continue;
            };
            let roots = congruence::solve(&c);
            t.check(roots.len() <= 2, || format!("{}: {} roots", ctx(), roots.len()));
            if let Some(reference) = t.record(congruence::solve_exhaustive(&c), ctx) {
                t.check(roots == reference, || format!("{}: solvers differ", ctx()));
            }
        }
    })
}

/// Power-series coefficients of the local factors equal the closed form.
pub fn series_matches_closed_form() -> Outcome {
    timed(7, "local factor series matches closed form", 5, |t| {
        for ring in rings(&D_GRID) {
            for p in P_GRID {
                let ctx = || format!("d={} p={p}", ring.d);
                let Some(class) = t.record(ring.classify_prime(p), ctx) else {
                    continue;
                };
                let Some(series) = t.record(zeta::series_expand(&zeta::local_factor(class), p, N_MAX as usize), ctx)
                else {
                    continue;
                };
                for n in 0..=N_MAX {
                    let expected = isoclass::closed_form_for_class(class, p, n);
                    let got = &series[n as usize];
                    t.check(*got == expected.into(), || format!("{} n={n}: series {got}, closed form {expected}", ctx()));
                }
            }
        }
    })
}

/// Runs every criterion in order; criterion 3 appears twice (core, stretch)
/// unless `stretch` is false.
pub fn run_all(seed: u64, stretch: bool) -> Vec<Outcome> {
    let mut out = vec![
        enumeration_matches_closed_form(),
        representatives_are_valid(),
        oracle_agrees_core(),
    ];
    if stretch {
        out.push(oracle_agrees_stretch());
    }
    out.extend([
        dirichlet_identity_holds(),
        functional_equation_exponents(),
        congruence_engine(seed),
        series_matches_closed_form(),
    ]);
    out
}
