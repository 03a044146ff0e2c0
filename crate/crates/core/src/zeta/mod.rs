//! Local representation zeta factors, Dedekind zeta factors and the global
//! identity `ζ_G(s) = ζ_K(s − 1)/ζ_K(s)` for `K = Q(√d)`.
//!
//! Local factors are rational functions in `P` (standing for `p`) and
//! `T = p^{−s}`. Shifting `s ↦ s − 1` is the substitution `T ↦ P·T`, and the
//! functional equation inverts both `P` and `T`.

mod dirichlet;
mod poly;
mod rational;

pub use dirichlet::DirichletCoeffs;
pub use poly::{BiPoly, UPoly};
pub use rational::BiRational;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith;
use crate::error::{Error, Result};
use crate::isoclass;
use crate::quad_ring::{PrimeClass, QuadRing};

fn one_minus(p_deg: usize, t_deg: usize) -> BiPoly {
    BiPoly::from_terms(&[(1, 0, 0), (-1, p_deg, t_deg)])
}

/// The p-local representation zeta function for a prime of the given class.
pub fn local_factor(class: PrimeClass) -> BiRational {
    let ramified = BiRational::new(one_minus(0, 1), one_minus(1, 1));
    match class {
        PrimeClass::Inert => BiRational::new(one_minus(0, 2), one_minus(2, 2)),
        PrimeClass::Split => ramified.pow(2),
        PrimeClass::Ramified => ramified,
    }
}

/// The p-local Dedekind zeta function `Σ_k #{ideals of norm p^k} T^k`.
pub fn dedekind_local(class: PrimeClass) -> BiRational {
    let den = match class {
        PrimeClass::Inert => one_minus(0, 2),
        PrimeClass::Split => one_minus(0, 1).pow(2),
        PrimeClass::Ramified => one_minus(0, 1),
    };
    BiRational::new(BiPoly::one(), den)
}

/// `s ↦ s − 1`, that is `T ↦ P·T`.
pub fn shift_s_minus_1(f: &BiRational) -> BiRational {
    f.subst_t_by_pt()
}

/// Whether the local factor equals `ζ_{K,p}(s − 1)/ζ_{K,p}(s)` exactly.
pub fn check_local_identity(class: PrimeClass) -> bool {
    let dedekind = dedekind_local(class);
    local_factor(class) == shift_s_minus_1(&dedekind).div(&dedekind)
}

/// The integer `γ` with `Z(1/P, 1/T) = P^γ · Z(P, T)`.
pub fn functional_equation_exponent(class: PrimeClass) -> Result<i64> {
    rational_fe_exponent(&local_factor(class))
}

pub fn rational_fe_exponent(z: &BiRational) -> Result<i64> {
    z.invert_variables()
        .div(z)
        .as_p_power()
        .ok_or_else(|| Error::NoCleanFunctionalEquation(z.to_string()))
}

/// Coefficients of `T^0, …, T^n` of `f` at `P = p`.
pub fn series_expand(f: &BiRational, p: u64, n: usize) -> Result<Vec<BigInt>> {
    let x = BigInt::from(p);
    let num = f.num().eval_p(&x);
    let den = f.den().eval_p(&x);
    let d0 = den.coeff(0);
    if d0.is_zero() {
        return Err(Error::NotPowerSeries(f.to_string()));
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut c = num.coeff(k);
        for i in 1..=k {
            c -= den.coeff(i) * &out[k - i];
        }
        let (q, r) = c.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NotPowerSeries(f.to_string()));
        }
        out.push(q);
    }
    Ok(out)
}

/// `a_n` = number of ideals of norm `n` in `O`, for `n <= bound`, as the
/// truncated Euler product of the local Dedekind factors.
pub fn dedekind_coeffs(ring: &QuadRing, bound: usize) -> Result<DirichletCoeffs> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be at least 1".into()));
    }
    let mut a = DirichletCoeffs::unit(bound).coeffs;
    for p in arith::primes_up_to(bound as u64) {
        let class = ring.classify_prime(p)?;
        let p = p as usize;
        let mut powers = vec![1usize];
        while powers.last().unwrap() * p <= bound {
            powers.push(powers.last().unwrap() * p);
        }
        let local = series_expand(&dedekind_local(class), p as u64, powers.len() - 1)?;
        // Multiply by Σ_k local[k] p^{−ks}; `a` is supported on p-free
        // integers, so each product term lands on a distinct index.
        let mut next = a.clone();
        for m in 1..=bound {
            if a[m - 1].is_zero() || m % p == 0 {
                continue;
            }
            for (k, &q) in powers.iter().enumerate().skip(1) {
                if m * q > bound {
                    break;
                }
                next[m * q - 1] = &a[m - 1] * &local[k];
            }
        }
        a = next;
    }
    Ok(DirichletCoeffs::new(a))
}

/// The coefficients `b_n` of `ζ_K(s − 1)/ζ_K(s)`.
pub fn identity_coeffs(ring: &QuadRing, bound: usize) -> Result<DirichletCoeffs> {
    let a = dedekind_coeffs(ring, bound)?;
    Ok(a.shift_s_minus_1().convolve(&a.inverse()?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityRow {
    pub n: u64,
    pub r_n: u64,
    pub b_n: BigInt,
}

/// `(n, r_n, b_n)` for `n <= bound`.
pub fn identity_table(ring: &QuadRing, bound: usize) -> Result<Vec<IdentityRow>> {
    let b = identity_coeffs(ring, bound)?;
    (1..=bound)
        .map(|n| {
            Ok(IdentityRow {
                n: n as u64,
                r_n: isoclass::r_coeff(ring, n as u64)?,
                b_n: b.get(n).clone(),
            })
        })
        .collect()
}

/// Whether `b_n = r_n` for every `n <= bound`.
pub fn check_global_identity(ring: &QuadRing, bound: usize) -> Result<bool> {
    Ok(identity_table(ring, bound)?
        .iter()
        .all(|row| row.b_n == BigInt::from(row.r_n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CLASSES: [PrimeClass; 3] = [PrimeClass::Inert, PrimeClass::Split, PrimeClass::Ramified];

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn local_factor_text() {
        assert_eq!(local_factor(PrimeClass::Inert).to_string(), "(1 - T^2)/(1 - P^2*T^2)");
        assert_eq!(local_factor(PrimeClass::Ramified).to_string(), "(1 - T)/(1 - P*T)");
        assert_eq!(
            local_factor(PrimeClass::Split).to_string(),
            "(1 - 2*T + T^2)/(1 - 2*P*T + P^2*T^2)"
        );
        assert_eq!(dedekind_local(PrimeClass::Inert).to_string(), "1/(1 - T^2)");
        assert_eq!(dedekind_local(PrimeClass::Ramified).to_string(), "1/(1 - T)");
    }

    #[test]
    fn shifting() {
        assert_eq!(shift_s_minus_1(&dedekind_local(PrimeClass::Inert)).to_string(), "1/(1 - P^2*T^2)");
        assert_eq!(shift_s_minus_1(&dedekind_local(PrimeClass::Ramified)).to_string(), "1/(1 - P*T)");
        assert_eq!(shift_s_minus_1(&BiRational::one()), BiRational::one());
    }

    #[test]
    fn local_identity_and_functional_equation() {
        for class in CLASSES {
            assert!(check_local_identity(class));
        }
        assert_eq!(functional_equation_exponent(PrimeClass::Inert), Ok(2));
        assert_eq!(functional_equation_exponent(PrimeClass::Split), Ok(2));
        assert_eq!(functional_equation_exponent(PrimeClass::Ramified), Ok(1));
        let no_fe = BiRational::new(BiPoly::one(), one_minus(0, 1).mul(&one_minus(1, 2)).add(&BiPoly::monomial(1, 0, 3)));
        assert!(matches!(rational_fe_exponent(&no_fe), Err(Error::NoCleanFunctionalEquation(_))));
    }

    #[test]
    fn series_examples() {
        assert_eq!(series_expand(&local_factor(PrimeClass::Inert), 5, 2).unwrap(), ints(&[1, 0, 24]));
        assert_eq!(series_expand(&local_factor(PrimeClass::Ramified), 2, 3).unwrap(), ints(&[1, 1, 2, 4]));
        assert_eq!(series_expand(&local_factor(PrimeClass::Split), 7, 1).unwrap(), ints(&[1, 12]));
        let pole = BiRational::new(BiPoly::one(), BiPoly::monomial(1, 0, 1));
        assert!(matches!(series_expand(&pole, 3, 2), Err(Error::NotPowerSeries(_))));
    }

    #[test]
    fn series_matches_closed_form() {
        for d in [-3, -1, 2, 3, 5, 10, 13] {
            let ring = QuadRing::new(d).unwrap();
            for p in [2u64, 3, 5, 7, 11, 13] {
                let class = ring.classify_prime(p).unwrap();
                let series = series_expand(&local_factor(class), p, 6).unwrap();
                for (n, c) in series.iter().enumerate() {
                    let expected = isoclass::closed_form_count(&ring, p, n as u32).unwrap();
                    assert_eq!(*c, BigInt::from(expected), "d={d} p={p} n={n}");
                }
            }
        }
    }

    // Oracle: count ideals of norm n directly as pairs (p-part choices) from
    // the splitting type of each prime factor.
    fn ideals_of_norm(ring: &QuadRing, n: u64) -> u64 {
        arith::factorize(n)
            .into_iter()
            .map(|(p, e)| match ring.classify_prime(p).unwrap() {
                PrimeClass::Split => e as u64 + 1,
                PrimeClass::Ramified => 1,
                PrimeClass::Inert => u64::from(e % 2 == 0),
            })
            .product()
    }

    #[test]
    fn dedekind_examples() {
        let ring = QuadRing::new(-1).unwrap();
        assert_eq!(dedekind_coeffs(&ring, 5).unwrap().coeffs, ints(&[1, 1, 0, 1, 2]));
        let ring = QuadRing::new(2).unwrap();
        let a = dedekind_coeffs(&ring, 7).unwrap();
        assert_eq!(*a.get(1), BigInt::from(1));
        assert_eq!(*a.get(7), BigInt::from(2));
        for d in [-3, 5, 10] {
            let ring = QuadRing::new(d).unwrap();
            let a = dedekind_coeffs(&ring, 300).unwrap();
            for n in 1..=300 {
                assert_eq!(*a.get(n), BigInt::from(ideals_of_norm(&ring, n as u64)), "d={d} n={n}");
            }
        }
    }

    #[test]
    fn global_identity() {
        let ring = QuadRing::new(2).unwrap();
        let b = identity_coeffs(&ring, 200).unwrap();
        assert_eq!(*b.get(1), BigInt::from(1));
        assert_eq!(*b.get(7), BigInt::from(12));
        assert!(check_global_identity(&ring, 200).unwrap());
        let table = identity_table(&ring, 5).unwrap();
        assert_eq!(table.iter().map(|r| r.r_n).collect::<Vec<_>>(), vec![1, 1, 0, 2, 0]);
    }
}
