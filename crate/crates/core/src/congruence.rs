//! Quadratic congruences modulo prime powers.
//!
//! Roots are found modulo `p` by a scan and then lifted one level at a
//! time. A root with a unit derivative has exactly one lift per level
//! (Hensel); a singular root has either none or all `p` of its lifts, so
//! those are checked individually.

use serde::Serialize;

use crate::arith::{self, modulo};
use crate::error::{Error, Result};

/// Largest modulus accepted by [`solve_exhaustive`].
pub const EXHAUSTIVE_LIMIT: u64 = 10_000_000;

/// The monic quadratic `x^2 + b x + c` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct MonicQuadratic {
    pub b: i64,
    pub c: i64,
}

impl MonicQuadratic {
    pub fn new(b: i64, c: i64) -> Self {
        MonicQuadratic { b, c }
    }

    pub fn eval(&self, x: i128) -> i128 {
        x * x + self.b as i128 * x + self.c as i128
    }

    pub fn derivative(&self, x: i128) -> i128 {
        2 * x + self.b as i128
    }

    /// Value modulo `m` for a residue `x < m`, without overflow for moduli below 2^63.
    pub fn eval_mod(&self, x: u64, m: u64) -> u64 {
        let m128 = m as u128;
        let x = x as u128 % m128;
        let b = modulo(self.b as i128, m) as u128;
        let c = modulo(self.c as i128, m) as u128;
        ((x * x % m128 + b * x % m128) % m128 + c) as u64 % m
    }
}

/// `f(x) ≡ 0 (mod p^k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Congruence {
    pub f: MonicQuadratic,
    pub p: u64,
    pub k: u32,
}

impl Congruence {
    pub fn new(f: MonicQuadratic, p: u64, k: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Congruence { f, p, k })
    }

    pub fn modulus(&self) -> u64 {
        arith::pow(self.p, self.k)
    }
}

/// Sorted, duplicate-free residues in `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSet {
    pub modulus: u64,
    pub roots: Vec<u64>,
}

impl RootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Reference solver: scans every residue.
pub fn solve_exhaustive(c: &Congruence) -> Result<RootSet> {
    let m = c
        .p
        .checked_pow(c.k)
        .filter(|&m| m <= EXHAUSTIVE_LIMIT)
        .ok_or(Error::TooLarge {
            size: (c.p as u128).saturating_pow(c.k),
            limit: EXHAUSTIVE_LIMIT as u128,
        })?;
    let roots = (0..m).filter(|&x| c.f.eval_mod(x, m) == 0).collect();
    Ok(RootSet { modulus: m, roots })
}

/// Roots modulo `p^k` by level-wise lifting from the roots modulo `p`.
pub fn solve(c: &Congruence) -> RootSet {
    let p = c.p;
    if c.k == 0 {
        return RootSet {
            modulus: 1,
            roots: vec![0],
        };
    }
    let mut roots: Vec<u64> = (0..p).filter(|&x| c.f.eval_mod(x, p) == 0).collect();
    let mut modulus = p;
    for _ in 1..c.k {
        let next = modulus * p;
        let mut lifted = Vec::new();
        for &alpha in &roots {
            let deriv = modulo(c.f.derivative(alpha as i128), p);
            if deriv != 0 {
                // f(alpha + t p^e) ≡ f(alpha) + t p^e f'(alpha)  (mod p^{e+1})
                let quotient = (c.f.eval_mod(alpha, next) / modulus) % p;
                let inv = arith::mod_inv(deriv, p).expect("unit derivative");
                let t = (p - quotient) % p * inv % p;
                lifted.push(alpha + t * modulus);
            } else {
                lifted.extend(
                    (0..p)
                        .map(|t| alpha + t * modulus)
                        .filter(|&x| c.f.eval_mod(x, next) == 0),
                );
            }
        }
        roots = lifted;
        modulus = next;
    }
    roots.sort_unstable();
    roots.dedup();
    RootSet { modulus, roots }
}

/// Number of residues `l` modulo `p^r` whose value `f(l)` has p-adic valuation
/// exactly `e` (for `e < r`), or at least `r` (for `e == r`).
///
/// Uses `#{l mod p^r : ord_p f(l) >= e} = p^{r-e} · #{roots mod p^e}`.
/// Returns 0 for `e > r`.
pub fn count_exact_valuation(f: MonicQuadratic, p: u64, r: u32, e: u32) -> u64 {
    if e > r {
        return 0;
    }
    let at_least = |e: u32| -> u64 {
        let roots = solve(&Congruence { f, p, k: e }).len() as u64;
        arith::pow(p, r - e) * roots
    };
    if e == r {
        at_least(r)
    } else {
        at_least(e) - at_least(e + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cong(b: i64, c: i64, p: u64, k: u32) -> Congruence {
        Congruence::new(MonicQuadratic::new(b, c), p, k).unwrap()
    }

    // Oracle for the valuation counts: evaluate every residue.
    fn count_by_scan(f: MonicQuadratic, p: u64, r: u32, e: u32) -> u64 {
        let m = arith::pow(p, r);
        (0..m)
            .filter(|&l| {
                let v = f.eval_mod(l, m);
                match arith::ord_p(v as i128, p) {
                    None => e == r,
                    Some(o) => e < r && o == e,
                }
            })
            .count() as u64
    }

    #[test]
    fn exhaustive_examples() {
        assert_eq!(solve_exhaustive(&cong(0, -2, 7, 1)).unwrap().roots, vec![3, 4]);
        assert!(solve_exhaustive(&cong(0, -2, 5, 1)).unwrap().is_empty());
        assert_eq!(solve_exhaustive(&cong(0, 0, 3, 1)).unwrap().roots, vec![0]);
        assert!(matches!(
            solve_exhaustive(&cong(0, -2, 13, 7)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn lifted_examples() {
        // Frozen from a scan of 0..343.
        assert_eq!(solve(&cong(0, -2, 7, 3)).roots, vec![108, 235]);
        assert!(solve(&cong(0, -2, 2, 3)).is_empty());
        let roots = solve(&cong(-1, -1, 11, 2)).roots;
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r % 11 == 4 || r % 11 == 8));
        assert_eq!(roots, solve_exhaustive(&cong(-1, -1, 11, 2)).unwrap().roots);
    }

    #[test]
    fn zero_exponent_means_everything() {
        assert_eq!(solve(&cong(0, -2, 5, 0)).roots, vec![0]);
    }

    #[test]
    fn singular_roots_lift_in_bulk() {
        // x^2 mod 3^4: roots are the multiples of 9.
        assert_eq!(solve(&cong(0, 0, 3, 4)).roots, vec![0, 9, 18, 27, 36, 45, 54, 63, 72]);
    }

    #[test]
    fn valuation_count_examples() {
        let f = MonicQuadratic::new(0, -2);
        assert_eq!(count_by_scan(f, 7, 2, 1), 12);
        assert_eq!(count_exact_valuation(f, 7, 2, 1), 12);
        assert_eq!(count_exact_valuation(f, 5, 1, 0), 5);
        assert_eq!(count_exact_valuation(f, 2, 1, 1), 1);
    }

    #[test]
    fn valuation_counts_match_scan_and_partition() {
        let polys = [(0, -2), (0, 1), (-1, -1), (0, -3), (-1, 1), (0, -10), (-1, -3), (0, 0)];
        for &(b, c) in &polys {
            let f = MonicQuadratic::new(b, c);
            for p in [2u64, 3, 5, 7] {
                for r in 0..=5u32 {
                    if arith::pow(p, r) > 20_000 {
                        continue;
                    }
                    let mut total = 0;
                    for e in 0..=r {
                        let n = count_exact_valuation(f, p, r, e);
                        assert_eq!(n, count_by_scan(f, p, r, e), "f={f:?} p={p} r={r} e={e}");
                        total += n;
                    }
                    assert_eq!(total, arith::pow(p, r));
                }
            }
        }
    }

    #[test]
    fn not_prime_is_rejected() {
        assert_eq!(
            Congruence::new(MonicQuadratic::new(0, 1), 9, 1),
            Err(Error::NotPrime(9))
        );
    }
}
