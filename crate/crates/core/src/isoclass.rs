//! Twist isoclasses of `p^n`-dimensional irreducible representations.
//!
//! A good representative is determined by `p^r` (the number of eigenvalues
//! of the image of `x`), `p^m` (their common multiplicity, `r + m = n`,
//! `r >= m`) and the pair of central scalars `(Λ, Λ_d) = (ζ^λ, ζ^μ)` with
//! `ζ = exp(2πi/p^r)`. Two regimes occur:
//!
//! * `Case1`: `λ = u` is a unit and `μ = u·l`, where `l` satisfies the
//!   valuation condition on `f(l)` (`f` the splitting polynomial).
//! * `Case2`: `μ = u` is a unit and `λ = u·l` is not (`l ≡ 0 mod p`); only
//!   possible when `r = m`.
//!
//! The census stores each `(r, m, case)` stratum as the product of its unit
//! list and its admissible `l` list. Labels are expanded lazily; for `n = 6`
//! and `p = 13` a single census holds tens of millions of labels.

use serde::Serialize;

use crate::arith::{self, modulo};
use crate::error::{Error, Result};
use crate::quad_ring::{PrimeClass, QuadRing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Case {
    Case1,
    Case2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct IsoclassLabel {
    pub p: u64,
    pub n: u32,
    pub r: u32,
    pub m: u32,
    pub case: Case,
    /// Exponent of the primitive scalar (`Λ` in Case 1, `Λ_d` in Case 2).
    pub u: u64,
    pub l: u64,
    pub lambda_exp: u64,
    pub mu_exp: u64,
}

impl IsoclassLabel {
    /// The label of the trivial one-dimensional representation.
    pub fn trivial(p: u64) -> Self {
        IsoclassLabel {
            p,
            n: 0,
            r: 0,
            m: 0,
            case: Case::Case1,
            u: 0,
            l: 0,
            lambda_exp: 0,
            mu_exp: 0,
        }
    }

    pub fn root_order(&self) -> u64 {
        arith::pow(self.p, self.r)
    }

    pub fn dim(&self) -> u64 {
        arith::pow(self.p, self.n)
    }

    /// The twist-invariant identity of the isoclass.
    pub fn key(&self) -> (u64, u64, u32) {
        (self.lambda_exp, self.mu_exp, self.m)
    }
}

/// The value `f(l)` of the splitting polynomial, which equals `l² − D`.
pub fn case1_value(ring: &QuadRing, l: u64) -> i128 {
    ring.splitting_poly().eval(l as i128)
}

/// Whether `l` satisfies the Case 1 valuation condition for `(r, m)`:
/// `ord_p f(l) = r − m` if `m > 0`, and `f(l) ≡ 0 (mod p^r)` if `m = 0`.
pub fn case1_admissible(ring: &QuadRing, p: u64, r: u32, m: u32, l: u64) -> bool {
    let q = arith::pow(p, r);
    let v = ring.splitting_poly().eval_mod(l % q, q);
    if m == 0 {
        v == 0
    } else {
        v != 0 && arith::ord_p(v as i128, p) == Some(r - m)
    }
}

/// One `(r, m, case)` block of a census: every `(u, l)` in `units × ls` is a label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub r: u32,
    pub m: u32,
    pub case: Case,
    pub units: Vec<u64>,
    pub ls: Vec<u64>,
}

impl Stratum {
    pub fn count(&self) -> u64 {
        self.units.len() as u64 * self.ls.len() as u64
    }

    fn label(&self, p: u64, u: u64, l: u64) -> IsoclassLabel {
        let q = arith::pow(p, self.r);
        let ul = (u as u128 * l as u128 % q as u128) as u64;
        let (lambda_exp, mu_exp) = match self.case {
            Case::Case1 => (u, ul),
            Case::Case2 => (ul, u),
        };
        IsoclassLabel {
            p,
            n: self.r + self.m,
            r: self.r,
            m: self.m,
            case: self.case,
            u,
            l,
            lambda_exp,
            mu_exp,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoclassCensus {
    pub p: u64,
    pub n: u32,
    /// Sorted by `(r, case)`.
    pub strata: Vec<Stratum>,
}

impl IsoclassCensus {
    pub fn count(&self) -> u64 {
        if self.n == 0 {
            return 1;
        }
        self.strata.iter().map(Stratum::count).sum()
    }

    /// All labels in `(r, case, u, l)` order.
    pub fn labels(&self) -> Box<dyn Iterator<Item = IsoclassLabel> + '_> {
        let p = self.p;
        if self.n == 0 {
            return Box::new(std::iter::once(IsoclassLabel::trivial(p)));
        }
        Box::new(self.strata.iter().flat_map(move |s| {
            s.units
                .iter()
                .flat_map(move |&u| s.ls.iter().map(move |&l| s.label(p, u, l)))
        }))
    }

    pub fn label(&self, index: u64) -> Option<IsoclassLabel> {
        if self.n == 0 {
            return (index == 0).then(|| IsoclassLabel::trivial(self.p));
        }
        let mut rest = index;
        for s in &self.strata {
            if rest < s.count() {
                let per_unit = s.ls.len() as u64;
                let u = s.units[(rest / per_unit) as usize];
                let l = s.ls[(rest % per_unit) as usize];
                return Some(s.label(self.p, u, l));
            }
            rest -= s.count();
        }
        None
    }
}

fn units_mod(q: u64, p: u64) -> Vec<u64> {
    if q == 1 {
        return vec![0];
    }
    (1..q).filter(|u| u % p != 0).collect()
}

/// Enumerates the twist isoclasses of dimension `p^n`.
pub fn enumerate(ring: &QuadRing, p: u64, n: u32) -> Result<IsoclassCensus> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut strata = Vec::new();
    if n == 0 {
        return Ok(IsoclassCensus { p, n, strata });
    }
    for m in (0..=n / 2).rev() {
        let r = n - m;
        let q = arith::pow(p, r);
        let units = units_mod(q, p);
        let ls: Vec<u64> = (0..q)
            .filter(|&l| case1_admissible(ring, p, r, m, l))
            .collect();
        if !ls.is_empty() {
            strata.push(Stratum {
                r,
                m,
                case: Case::Case1,
                units: units.clone(),
                ls,
            });
        }
        if r == m {
            // The non-unit exponents for Λ: the multiples of p below p^r.
            let ls: Vec<u64> = (0..q).step_by(p as usize).collect();
            strata.push(Stratum {
                r,
                m,
                case: Case::Case2,
                units,
                ls,
            });
        }
    }
    Ok(IsoclassCensus { p, n, strata })
}

/// The tabulated count of `p^n`-dimensional twist isoclasses.
pub fn closed_form_count(ring: &QuadRing, p: u64, n: u32) -> Result<u64> {
    let class = ring.classify_prime(p)?;
    Ok(closed_form_for_class(class, p, n))
}

pub fn closed_form_for_class(class: PrimeClass, p: u64, n: u32) -> u64 {
    if n == 0 {
        return 1;
    }
    let phi = arith::phi_prime_power(p, n);
    match class {
        // (1 + 1/p) Φ(p^n) for even n
        PrimeClass::Inert if n % 2 == 0 => phi / p * (p + 1),
        PrimeClass::Inert => 0,
        // Φ(p^n) [n(1 − 1/p) + 1 + 1/p] = Φ(p^n) (n(p − 1) + p + 1) / p
        PrimeClass::Split => {
            let scaled = phi as u128 * (n as u128 * (p as u128 - 1) + p as u128 + 1);
            debug_assert_eq!(scaled % p as u128, 0);
            (scaled / p as u128) as u64
        }
        PrimeClass::Ramified => phi,
    }
}

/// `r_n`, assembled multiplicatively over the prime powers exactly dividing `n`.
pub fn r_coeff(ring: &QuadRing, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("r_n is defined for n >= 1".into()));
    }
    arith::factorize(n)
        .into_iter()
        .try_fold(1u64, |acc, (p, a)| Ok(acc * closed_form_count(ring, p, a)?))
}

/// The smallest `k` such that every `p^n`-dimensional isoclass has a
/// representative factoring through `H(O/p^k O)`: the largest `r` of a
/// non-empty stratum (images of the representative have order dividing `p^r`).
pub fn required_quotient_level(ring: &QuadRing, p: u64, n: u32) -> Result<u32> {
    let census = enumerate(ring, p, n)?;
    Ok(census
        .strata
        .iter()
        .filter(|s| s.count() > 0)
        .map(|s| s.r)
        .max()
        .unwrap_or(0))
}

/// Checks every structural invariant of a label against the ring.
pub fn validate_label(ring: &QuadRing, label: &IsoclassLabel) -> Result<()> {
    let bad = |msg: &str| Err(Error::InvalidLabel(format!("{msg}: {label:?}")));
    let p = label.p;
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if label.r + label.m != label.n || label.r < label.m {
        return bad("need r + m = n and r >= m");
    }
    let q = label.root_order();
    if label.u >= q || label.l >= q || label.lambda_exp >= q || label.mu_exp >= q {
        return bad("exponents must be reduced modulo p^r");
    }
    if label.n == 0 {
        return if *label == IsoclassLabel::trivial(p) {
            Ok(())
        } else {
            bad("the only dimension-1 label is the trivial one")
        };
    }
    let is_unit = |x: u64| x % p != 0;
    let ul = (label.u as u128 * label.l as u128 % q as u128) as u64;
    match label.case {
        Case::Case1 => {
            if !is_unit(label.u) || label.lambda_exp != label.u || label.mu_exp != ul {
                return bad("Case 1 needs Λ primitive and Λ_d = Λ^l");
            }
            if !case1_admissible(ring, p, label.r, label.m, label.l) {
                return bad("l violates the valuation condition");
            }
        }
        Case::Case2 => {
            if label.r != label.m {
                return bad("Case 2 only occurs for r = m");
            }
            if !is_unit(label.u) || is_unit(label.l) {
                return bad("Case 2 needs Λ_d primitive and Λ not primitive");
            }
            if label.mu_exp != label.u || label.lambda_exp != ul {
                return bad("Case 2 needs Λ = Λ_d^l");
            }
        }
    }
    Ok(())
}

/// `D − l²` reduced mod `p^r`: the exponent step of `A_d` along the inner cycle.
pub fn inner_step(ring: &QuadRing, label: &IsoclassLabel) -> u64 {
    modulo(-case1_value(ring, label.l), label.root_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    const GRID: [i64; 7] = [-3, -1, 2, 3, 5, 10, 13];

    #[test]
    fn enumerate_examples() {
        let r2 = QuadRing::new(2).unwrap();
        let c = enumerate(&r2, 2, 1).unwrap();
        let labels: Vec<_> = c.labels().collect();
        assert_eq!(labels.len(), 1);
        let l = labels[0];
        assert_eq!((l.r, l.m, l.case, l.u, l.l), (1, 0, Case::Case1, 1, 0));
        assert_eq!((l.lambda_exp, l.mu_exp), (1, 0));
        assert_eq!(enumerate(&r2, 5, 1).unwrap().count(), 0);
        assert_eq!(enumerate(&r2, 7, 1).unwrap().count(), 12);
        let trivial = enumerate(&r2, 3, 0).unwrap();
        assert_eq!(trivial.labels().collect::<Vec<_>>(), vec![IsoclassLabel::trivial(3)]);
    }

    #[test]
    fn closed_form_examples() {
        let r2 = QuadRing::new(2).unwrap();
        assert_eq!(closed_form_count(&r2, 5, 2).unwrap(), 24);
        assert_eq!(closed_form_count(&r2, 7, 1).unwrap(), 12);
        assert_eq!(closed_form_count(&r2, 2, 3).unwrap(), 4);
        assert_eq!(closed_form_count(&r2, 5, 0).unwrap(), 1);
        assert_eq!(r_coeff(&r2, 1).unwrap(), 1);
        assert_eq!(r_coeff(&r2, 14).unwrap(), 12);
        assert_eq!(r_coeff(&r2, 5).unwrap(), 0);
    }

    #[test]
    fn census_matches_closed_form_on_small_grid() {
        for d in GRID {
            let ring = QuadRing::new(d).unwrap();
            for p in [2u64, 3, 5, 7] {
                for n in 0..=4 {
                    let census = enumerate(&ring, p, n).unwrap();
                    let expanded = census.labels().count() as u64;
                    assert_eq!(expanded, census.count());
                    assert_eq!(census.count(), closed_form_count(&ring, p, n).unwrap(), "d={d} p={p} n={n}");
                }
            }
        }
    }

    #[test]
    fn labels_satisfy_invariants_and_are_distinct() {
        for d in GRID {
            let ring = QuadRing::new(d).unwrap();
            for p in [2u64, 3, 5] {
                for n in 0..=4 {
                    let census = enumerate(&ring, p, n).unwrap();
                    let mut keys = HashSet::new();
                    let mut prev = None;
                    for label in census.labels() {
                        validate_label(&ring, &label).unwrap();
                        assert!(keys.insert(label.key()), "duplicate {label:?}");
                        let q = label.root_order();
                        let unit = |x: u64| q == 1 || x % p != 0;
                        assert!(unit(label.lambda_exp) || unit(label.mu_exp));
                        if label.case == Case::Case1 && label.m > 0 {
                            // Λ^{D − l²} is a primitive p^m-th root of unity.
                            let step = (label.u as u128 * inner_step(&ring, &label) as u128
                                % q as u128) as i128;
                            assert_eq!(arith::ord_p(step, p), Some(label.r - label.m));
                        }
                        let order = (label.r, label.case, label.u, label.l);
                        if let Some(prev) = prev {
                            assert!(prev < order);
                        }
                        prev = Some(order);
                    }
                    assert_eq!(keys.len() as u64, census.count());
                }
            }
        }
    }

    #[test]
    fn indexed_access_agrees_with_iteration() {
        let ring = QuadRing::new(-1).unwrap();
        let census = enumerate(&ring, 5, 2).unwrap();
        for (i, label) in census.labels().enumerate() {
            assert_eq!(census.label(i as u64), Some(label));
        }
        assert_eq!(census.label(census.count()), None);
    }

    #[test]
    fn invalid_labels_are_rejected() {
        let ring = QuadRing::new(2).unwrap();
        let mut label = enumerate(&ring, 7, 1).unwrap().labels().next().unwrap();
        assert!(validate_label(&ring, &label).is_ok());
        label.l = 1;
        assert!(matches!(validate_label(&ring, &label), Err(Error::InvalidLabel(_))));
        let mut label = IsoclassLabel::trivial(7);
        label.r = 1;
        assert!(validate_label(&ring, &label).is_err());
    }

    #[test]
    fn quotient_levels() {
        let r2 = QuadRing::new(2).unwrap();
        // 5 is inert for d = 2: only r = m = 1 contributes to n = 2.
        assert_eq!(required_quotient_level(&r2, 5, 2).unwrap(), 1);
        assert_eq!(required_quotient_level(&r2, 7, 2).unwrap(), 2);
        assert_eq!(required_quotient_level(&r2, 2, 3).unwrap(), 2);
    }
}
