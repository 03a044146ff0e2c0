//! The finite Heisenberg group `H(O/p^k O)`.

use serde::Serialize;

use super::group::FiniteGroup;
use crate::arith::{self, modulo};
use crate::error::{Error, Result};
use crate::quad_ring::{QuadRing, RingElem};

/// Triples `(α, β, γ)` over `O/p^k O` with
/// `(α, β, γ)·(α′, β′, γ′) = (α + α′, β + β′, γ + γ′ + α·β′)`.
///
/// Element indices read the six residue coordinates
/// `(α.a, α.b, β.a, β.b, γ.a, γ.b)` as base-`p^k` digits, most significant
/// first, so index order is lexicographic order of the triples.
#[derive(Debug, Clone, Serialize)]
pub struct FiniteHeisenberg {
    pub ring: QuadRing,
    pub p: u64,
    pub k: u32,
    q: u64,
    norm: u64,
    trace: u64,
    order: usize,
}

impl FiniteHeisenberg {
    pub fn modulus(&self) -> u64 {
        self.q
    }

    fn pack(&self, c: [u64; 6]) -> u32 {
        c.iter().fold(0u64, |acc, &x| acc * self.q + x) as u32
    }

    fn unpack(&self, mut x: u32) -> [u64; 6] {
        let mut c = [0u64; 6];
        for slot in c.iter_mut().rev() {
            *slot = x as u64 % self.q;
            x = (x as u64 / self.q) as u32;
        }
        c
    }

    pub fn element(&self, alpha: RingElem, beta: RingElem, gamma: RingElem) -> Result<u32> {
        for e in [alpha, beta, gamma] {
            if e.modulus != self.q {
                return Err(Error::ModulusMismatch(e.modulus, self.q));
            }
        }
        Ok(self.pack([alpha.a, alpha.b, beta.a, beta.b, gamma.a, gamma.b]))
    }

    pub fn triple(&self, x: u32) -> (RingElem, RingElem, RingElem) {
        let c = self.unpack(x);
        let e = |a, b| RingElem {
            a,
            b,
            modulus: self.q,
        };
        (e(c[0], c[1]), e(c[2], c[3]), e(c[4], c[5]))
    }

    /// Whether `x` lies in `{(0, 0, γ)}`.
    pub fn is_in_center_coordinates(&self, x: u32) -> bool {
        let c = self.unpack(x);
        c[..4].iter().all(|&v| v == 0)
    }
}

/// `H(O/p^k O)`, refusing groups larger than `max_order`.
pub fn quotient_group(ring: &QuadRing, p: u64, k: u32, max_order: usize) -> Result<FiniteHeisenberg> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let order = (p as u128).checked_pow(6 * k).unwrap_or(u128::MAX);
    if order > max_order as u128 || order > u32::MAX as u128 {
        return Err(Error::TooLarge {
            size: order,
            limit: max_order as u128,
        });
    }
    let q = arith::pow(p, k);
    Ok(FiniteHeisenberg {
        ring: *ring,
        p,
        k,
        q,
        norm: modulo(ring.norm_n as i128, q),
        trace: modulo(ring.trace_t as i128, q),
        order: order as usize,
    })
}

impl FiniteGroup for FiniteHeisenberg {
    fn order(&self) -> usize {
        self.order
    }

    fn identity(&self) -> u32 {
        0
    }

    fn mul(&self, x: u32, y: u32) -> u32 {
        let q = self.q;
        let a = self.unpack(x);
        let b = self.unpack(y);
        // α·β′ with ω² = tω + n
        let bd = a[1] * b[3] % q;
        let re = (a[0] * b[2] + bd * self.norm) % q;
        let om = (a[0] * b[3] + a[1] * b[2] + bd * self.trace) % q;
        self.pack([
            (a[0] + b[0]) % q,
            (a[1] + b[1]) % q,
            (a[2] + b[2]) % q,
            (a[3] + b[3]) % q,
            (a[4] + b[4] + re) % q,
            (a[5] + b[5] + om) % q,
        ])
    }

    fn inv(&self, x: u32) -> u32 {
        // (α, β, γ)⁻¹ = (−α, −β, −γ + αβ)
        let q = self.q;
        let a = self.unpack(x);
        let bd = a[1] * a[3] % q;
        let re = (a[0] * a[2] + bd * self.norm) % q;
        let om = (a[0] * a[3] + a[1] * a[2] + bd * self.trace) % q;
        let neg = |v: u64| (q - v) % q;
        self.pack([
            neg(a[0]),
            neg(a[1]),
            neg(a[2]),
            neg(a[3]),
            (neg(a[4]) + re) % q,
            (neg(a[5]) + om) % q,
        ])
    }

    /// `x, x_d, y, y_d, z, z_d` with `x = (1, 0, 0)`, `x_d = (ω, 0, 0)` and so on.
    fn generators(&self) -> Vec<u32> {
        (0..6)
            .map(|i| {
                let mut c = [0u64; 6];
                c[i] = 1 % self.q;
                self.pack(c)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::group::derived_subgroup;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn group(d: i64, p: u64, k: u32) -> FiniteHeisenberg {
        quotient_group(&QuadRing::new(d).unwrap(), p, k, 1_000_000).unwrap()
    }

    #[test]
    fn orders_and_guard() {
        assert_eq!(group(2, 2, 1).order(), 64);
        assert_eq!(group(2, 3, 1).order(), 729);
        let ring = QuadRing::new(2).unwrap();
        assert!(matches!(quotient_group(&ring, 11, 1, 1_000_000), Err(Error::TooLarge { .. })));
        assert!(matches!(quotient_group(&ring, 4, 1, 1_000_000), Err(Error::NotPrime(4))));
    }

    #[test]
    fn group_axioms_on_random_triples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (d, p, k) in [(2, 3, 1), (5, 2, 2), (-1, 5, 1), (-3, 3, 1)] {
            let g = group(d, p, k);
            let n = g.order() as u32;
            for _ in 0..1000 {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                assert_eq!(g.mul(a, g.inv(a)), 0);
                assert_eq!(g.mul(g.inv(a), a), 0);
                assert_eq!(g.mul(a, 0), a);
            }
        }
    }

    #[test]
    fn matches_ring_arithmetic() {
        let g = group(5, 3, 1);
        let ring = g.ring;
        let e = |a, b| ring.elem(a, b, 3);
        let x = g.element(e(1, 2), e(0, 1), e(2, 2)).unwrap();
        let y = g.element(e(2, 0), e(1, 1), e(0, 1)).unwrap();
        let (a, b, c) = g.triple(g.mul(x, y));
        let expected_c = ring
            .elem_add(&ring.elem_add(&e(2, 2), &e(0, 1)).unwrap(), &ring.elem_mul(&e(1, 2), &e(1, 1)).unwrap())
            .unwrap();
        assert_eq!((a, b, c), (e(0, 2), e(1, 2), expected_c));
    }

    #[test]
    fn derived_subgroup_is_the_central_coordinate() {
        for (d, p) in [(2, 2), (-1, 3), (5, 5)] {
            let g = group(d, p, 1);
            let derived = derived_subgroup(&g);
            assert_eq!(derived.len() as u64, p * p);
            assert!(derived.iter().all(|&x| g.is_in_center_coordinates(x)));
        }
    }
}
