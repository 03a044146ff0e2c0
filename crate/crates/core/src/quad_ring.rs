//! The ring of integers `O = Z[ω]` of `Q(√d)` and its residue rings `O/p^k O`.
//!
//! `ω = √d` when `d ≡ 2, 3 (mod 4)` and `ω = (1 + √d)/2` when `d ≡ 1 (mod 4)`;
//! in both cases `ω² = t·ω + n` with the trace/norm pair stored on [`QuadRing`].

use std::fmt;

use serde::Serialize;

use crate::arith::{self, modulo};
use crate::congruence::MonicQuadratic;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    /// `d ≡ 2, 3 (mod 4)`
    Mod23,
    /// `d ≡ 1 (mod 4)`
    Mod1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadRing {
    pub d: i64,
    pub branch: Branch,
    /// `t` in `ω² = t·ω + n`.
    pub trace_t: i64,
    /// `n` in `ω² = t·ω + n`.
    pub norm_n: i64,
    pub discriminant: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PrimeClass {
    Inert,
    Split,
    Ramified,
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PrimeClass::Inert => "Inert",
            PrimeClass::Split => "Split",
            PrimeClass::Ramified => "Ramified",
        };
        f.write_str(s)
    }
}

fn is_square_free(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut q = 2u64;
    while q * q <= n {
        if n % (q * q) == 0 {
            return false;
        }
        q += 1;
    }
    true
}

impl QuadRing {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 {
            return Err(Error::InvalidD(d));
        }
        if !is_square_free(d) {
            return Err(Error::NotSquareFree(d));
        }
        let ring = if d.rem_euclid(4) == 1 {
            QuadRing {
                d,
                branch: Branch::Mod1,
                trace_t: 1,
                norm_n: (d - 1) / 4,
                discriminant: d,
            }
        } else {
            QuadRing {
                d,
                branch: Branch::Mod23,
                trace_t: 0,
                norm_n: d,
                discriminant: 4 * d,
            }
        };
        Ok(ring)
    }

    /// The minimal polynomial of `ω`: `x² − t·x − n`.
    pub fn splitting_poly(&self) -> MonicQuadratic {
        MonicQuadratic::new(-self.trace_t, -self.norm_n)
    }

    /// Number of roots of the splitting polynomial modulo `p`, by direct scan.
    pub fn root_count_mod(&self, p: u64) -> usize {
        let f = self.splitting_poly();
        (0..p).filter(|&x| f.eval_mod(x, p) == 0).count()
    }

    pub fn classify_prime(&self, p: u64) -> Result<PrimeClass> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(match self.root_count_mod(p) {
            0 => PrimeClass::Inert,
            1 => PrimeClass::Ramified,
            2 => PrimeClass::Split,
            n => unreachable!("a quadratic has {n} roots modulo a prime"),
        })
    }

    pub fn elem(&self, a: i128, b: i128, modulus: u64) -> RingElem {
        RingElem {
            a: modulo(a, modulus),
            b: modulo(b, modulus),
            modulus,
        }
    }

    pub fn elem_add(&self, x: &RingElem, y: &RingElem) -> Result<RingElem> {
        check_moduli(x, y)?;
        let m = x.modulus;
        Ok(self.elem(
            x.a as i128 + y.a as i128,
            x.b as i128 + y.b as i128,
            m,
        ))
    }

    /// Product in `O/mO` using `ω² = t·ω + n`.
    pub fn elem_mul(&self, x: &RingElem, y: &RingElem) -> Result<RingElem> {
        check_moduli(x, y)?;
        let m = x.modulus as i128;
        let (a, b, c, d) = (x.a as i128, x.b as i128, y.a as i128, y.b as i128);
        let bd = b * d % m;
        let n = modulo(self.norm_n as i128, x.modulus) as i128;
        let t = self.trace_t as i128;
        let real = (a * c + bd * n) % m;
        let omega = (a * d + b * c + bd * t) % m;
        Ok(self.elem(real, omega, x.modulus))
    }
}

fn check_moduli(x: &RingElem, y: &RingElem) -> Result<()> {
    if x.modulus != y.modulus {
        return Err(Error::ModulusMismatch(x.modulus, y.modulus));
    }
    Ok(())
}

/// `a + b·ω` in `O/mO`, with `0 <= a, b < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingElem {
    pub a: u64,
    pub b: u64,
    pub modulus: u64,
}

impl RingElem {
    pub fn zero(modulus: u64) -> Self {
        RingElem { a: 0, b: 0, modulus }
    }

    pub fn one(modulus: u64) -> Self {
        RingElem {
            a: 1 % modulus,
            b: 0,
            modulus,
        }
    }

    pub fn omega(modulus: u64) -> Self {
        RingElem {
            a: 0,
            b: 1 % modulus,
            modulus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const GRID: [i64; 7] = [-3, -1, 2, 3, 5, 10, 13];

    #[test]
    fn make_ring_examples() {
        let r = QuadRing::new(2).unwrap();
        assert_eq!((r.branch, r.trace_t, r.norm_n, r.discriminant), (Branch::Mod23, 0, 2, 8));
        let r = QuadRing::new(5).unwrap();
        assert_eq!((r.branch, r.trace_t, r.norm_n, r.discriminant), (Branch::Mod1, 1, 1, 5));
        assert_eq!(QuadRing::new(12), Err(Error::NotSquareFree(12)));
        assert_eq!(QuadRing::new(-8), Err(Error::NotSquareFree(-8)));
        assert_eq!(QuadRing::new(0), Err(Error::InvalidD(0)));
        assert_eq!(QuadRing::new(1), Err(Error::InvalidD(1)));
        let r = QuadRing::new(-3).unwrap();
        assert_eq!((r.branch, r.norm_n, r.discriminant), (Branch::Mod1, -1, -3));
    }

    #[test]
    fn splitting_polynomials() {
        assert_eq!(QuadRing::new(2).unwrap().splitting_poly(), MonicQuadratic::new(0, -2));
        assert_eq!(QuadRing::new(5).unwrap().splitting_poly(), MonicQuadratic::new(-1, -1));
        assert_eq!(QuadRing::new(-1).unwrap().splitting_poly(), MonicQuadratic::new(0, 1));
    }

    #[test]
    fn classify_examples() {
        let r2 = QuadRing::new(2).unwrap();
        assert_eq!(r2.classify_prime(7), Ok(PrimeClass::Split));
        assert_eq!(r2.classify_prime(5), Ok(PrimeClass::Inert));
        assert_eq!(r2.classify_prime(2), Ok(PrimeClass::Ramified));
        assert_eq!(QuadRing::new(5).unwrap().classify_prime(5), Ok(PrimeClass::Ramified));
        assert_eq!(r2.classify_prime(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn ramified_iff_prime_divides_discriminant() {
        for d in GRID.into_iter().chain([-7, 6, 7, 17, 21, -15, 33]) {
            let ring = QuadRing::new(d).unwrap();
            for p in arith::primes_up_to(1000) {
                let class = ring.classify_prime(p).unwrap();
                let divides = ring.discriminant.rem_euclid(p as i64) == 0;
                assert_eq!(class == PrimeClass::Ramified, divides, "d={d} p={p}");
            }
        }
    }

    #[test]
    fn omega_squared() {
        let r2 = QuadRing::new(2).unwrap();
        let w = RingElem::omega(5);
        assert_eq!(r2.elem_mul(&w, &w).unwrap(), r2.elem(2, 0, 5));
        let r5 = QuadRing::new(5).unwrap();
        let w = RingElem::omega(7);
        assert_eq!(r5.elem_mul(&w, &w).unwrap(), r5.elem(1, 1, 7));
        let x = r5.elem(3, 4, 7);
        assert_eq!(r5.elem_mul(&x, &RingElem::one(7)).unwrap(), x);
        assert_eq!(
            r5.elem_mul(&x, &RingElem::one(9)),
            Err(Error::ModulusMismatch(7, 9))
        );
    }

    proptest! {
        #[test]
        fn ring_axioms(
            di in 0usize..7,
            pk in prop::sample::select(vec![2u64, 4, 8, 3, 9, 25, 7, 49, 11, 13]),
            v in prop::array::uniform6(0u64..1000),
        ) {
            let ring = QuadRing::new(GRID[di]).unwrap();
            let x = ring.elem(v[0] as i128, v[1] as i128, pk);
            let y = ring.elem(v[2] as i128, v[3] as i128, pk);
            let z = ring.elem(v[4] as i128, v[5] as i128, pk);
            let mul = |a: &RingElem, b: &RingElem| ring.elem_mul(a, b).unwrap();
            let add = |a: &RingElem, b: &RingElem| ring.elem_add(a, b).unwrap();
            prop_assert_eq!(mul(&x, &y), mul(&y, &x));
            prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
            prop_assert_eq!(mul(&x, &add(&y, &z)), add(&mul(&x, &y), &mul(&x, &z)));
        }
    }
}
