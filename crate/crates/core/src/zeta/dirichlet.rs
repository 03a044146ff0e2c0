//! Truncated Dirichlet series `Σ_{n ≤ N} c_n n^{−s}` with exact coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCoeffs {
    /// `coeffs[i]` is `c_{i+1}`.
    pub coeffs: Vec<BigInt>,
}

impl DirichletCoeffs {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        DirichletCoeffs { coeffs }
    }

    /// The unit `ε` (`c_1 = 1`, all others 0).
    pub fn unit(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n];
        if n > 0 {
            coeffs[0] = BigInt::one();
        }
        DirichletCoeffs { coeffs }
    }

    /// The truncation bound `N`.
    pub fn bound(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_n` for `1 <= n <= N`.
    pub fn get(&self, n: usize) -> &BigInt {
        &self.coeffs[n - 1]
    }

    /// `(a ∗ b)_n = Σ_{de = n} a_d b_e`, truncated at the smaller bound.
    pub fn convolve(&self, other: &Self) -> Self {
        let n = self.bound().min(other.bound());
        let mut out = vec![BigInt::zero(); n];
        for d in 1..=n {
            let a = self.get(d);
            if a.is_zero() {
                continue;
            }
            for e in 1..=n / d {
                out[d * e - 1] += a * other.get(e);
            }
        }
        DirichletCoeffs { coeffs: out }
    }

    /// The series `b` with `a ∗ b = ε`; requires `c_1 = 1`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.bound();
        if n == 0 || !self.get(1).is_one() {
            return Err(Error::InvalidArgument(
                "Dirichlet inverse needs c_1 = 1".into(),
            ));
        }
        // acc[m] collects Σ_{d | m, d > 1} a_d b_{m/d} as b values become known.
        let mut acc = vec![BigInt::zero(); n + 1];
        let mut out = vec![BigInt::zero(); n];
        for m in 1..=n {
            let b = if m == 1 {
                BigInt::one()
            } else {
                -std::mem::take(&mut acc[m])
            };
            for d in 2..=n / m {
                let a = self.get(d);
                if !a.is_zero() {
                    acc[d * m] += a * &b;
                }
            }
            out[m - 1] = b;
        }
        Ok(DirichletCoeffs { coeffs: out })
    }

    /// `n · c_n`, the coefficients of the series at `s − 1`.
    pub fn shift_s_minus_1(&self) -> Self {
        DirichletCoeffs {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(v: &[i64]) -> DirichletCoeffs {
        DirichletCoeffs::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn zeta_inverse_is_mobius() {
        let zeta = series(&[1; 12]);
        let mu = zeta.inverse().unwrap();
        assert_eq!(mu, series(&[1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]));
        assert_eq!(zeta.convolve(&zeta), series(&[1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]));
        assert!(series(&[2, 1]).inverse().is_err());
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(tail in prop::collection::vec(-5i64..5, 0..60)) {
            let mut v = vec![1];
            v.extend(tail);
            let a = series(&v);
            let inv = a.inverse().unwrap();
            let unit = DirichletCoeffs::unit(a.bound());
            prop_assert_eq!(a.convolve(&inv), unit.clone());
            prop_assert_eq!(inv.convolve(&a), unit);
        }
    }
}
