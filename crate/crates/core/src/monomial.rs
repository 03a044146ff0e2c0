//! Monomial matrices whose non-zero entries are roots of unity, and exact
//! arithmetic in the cyclotomic integers `Z[ζ_M]` for prime-power `M`.

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};

/// The matrix sending basis vector `e_c` to `ζ_M^{exps[c]} e_{perm[c]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialMatrix {
    pub dim: usize,
    pub root_order: u64,
    pub perm: Vec<u32>,
    pub exps: Vec<u64>,
}

impl MonomialMatrix {
    pub fn new(root_order: u64, perm: Vec<u32>, exps: Vec<u64>) -> Result<Self> {
        let dim = perm.len();
        if exps.len() != dim {
            return Err(Error::ShapeMismatch(format!(
                "{} exponents for dimension {dim}",
                exps.len()
            )));
        }
        let mut seen = vec![false; dim];
        for &t in &perm {
            let t = t as usize;
            if t >= dim || std::mem::replace(&mut seen[t], true) {
                return Err(Error::ShapeMismatch("perm is not a bijection".into()));
            }
        }
        let exps = exps.into_iter().map(|e| e % root_order).collect();
        Ok(MonomialMatrix {
            dim,
            root_order,
            perm,
            exps,
        })
    }

    pub fn identity(dim: usize, root_order: u64) -> Self {
        Self::scalar(dim, root_order, 0)
    }

    pub fn scalar(dim: usize, root_order: u64, exp: u64) -> Self {
        MonomialMatrix {
            dim,
            root_order,
            perm: (0..dim as u32).collect(),
            exps: vec![exp % root_order; dim],
        }
    }

    pub fn diagonal(root_order: u64, exps: Vec<u64>) -> Self {
        let dim = exps.len();
        MonomialMatrix {
            dim,
            root_order,
            perm: (0..dim as u32).collect(),
            exps: exps.into_iter().map(|e| e % root_order).collect(),
        }
    }

    pub fn permutation(root_order: u64, perm: Vec<u32>) -> Result<Self> {
        let dim = perm.len();
        Self::new(root_order, perm, vec![0; dim])
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim || self.root_order != other.root_order {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} over ζ_{} vs {}x{} over ζ_{}",
                self.dim, self.dim, self.root_order, other.dim, other.dim, other.root_order
            )));
        }
        Ok(())
    }

    /// `self · other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let m = self.root_order;
        let mut perm = Vec::with_capacity(self.dim);
        let mut exps = Vec::with_capacity(self.dim);
        for c in 0..self.dim {
            let mid = other.perm[c] as usize;
            perm.push(self.perm[mid]);
            exps.push((other.exps[c] + self.exps[mid]) % m);
        }
        Ok(MonomialMatrix {
            dim: self.dim,
            root_order: m,
            perm,
            exps,
        })
    }

    pub fn inverse(&self) -> Self {
        let m = self.root_order;
        let mut perm = vec![0u32; self.dim];
        let mut exps = vec![0u64; self.dim];
        for c in 0..self.dim {
            let t = self.perm[c] as usize;
            perm[t] = c as u32;
            exps[t] = (m - self.exps[c]) % m;
        }
        MonomialMatrix {
            dim: self.dim,
            root_order: m,
            perm,
            exps,
        }
    }

    /// `[X, Y] = X Y X⁻¹ Y⁻¹`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?
            .mul(&self.inverse())?
            .mul(&other.inverse())
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.dim, self.root_order);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same shape");
            }
            base = base.mul(&base).expect("same shape");
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_exp() == Some(0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &t)| t as usize == i)
    }

    pub fn is_permutation(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// The exponent `e` if the matrix is the scalar `ζ^e`.
    pub fn scalar_exp(&self) -> Option<u64> {
        if !self.is_diagonal() {
            return None;
        }
        let first = self.exps.first().copied().unwrap_or(0);
        self.exps.iter().all(|&e| e == first).then_some(first)
    }

    /// Trace as a multiplicity vector: entry `e` counts fixed points with entry `ζ^e`.
    pub fn trace_vector(&self) -> Vec<u64> {
        let mut v = vec![0u64; self.root_order as usize];
        for c in 0..self.dim {
            if self.perm[c] as usize == c {
                v[self.exps[c] as usize] += 1;
            }
        }
        v
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.root_order != other.root_order {
            return Err(Error::ShapeMismatch("root orders differ".into()));
        }
        let shift = self.dim as u32;
        let perm = self
            .perm
            .iter()
            .copied()
            .chain(other.perm.iter().map(|&t| t + shift))
            .collect();
        let exps = self.exps.iter().chain(&other.exps).copied().collect();
        Self::new(self.root_order, perm, exps)
    }

    /// Dense complex entries, row-major; only for small test matrices.
    pub fn to_dense(&self) -> Vec<Vec<(f64, f64)>> {
        let mut out = vec![vec![(0.0, 0.0); self.dim]; self.dim];
        for c in 0..self.dim {
            let angle =
                2.0 * std::f64::consts::PI * self.exps[c] as f64 / self.root_order as f64;
            out[self.perm[c] as usize][c] = (angle.cos(), angle.sin());
        }
        out
    }
}

/// Reduces an integer combination `Σ v[e] ζ^e` of `M`-th roots of unity
/// (`M = p^r`, `v.len() == M`) to its canonical coordinates on
/// `1, ζ, …, ζ^{φ(M)−1}`, using `Φ_M(x) = Σ_{j<p} x^{j·p^{r−1}}`.
pub fn cyclotomic_canonical(mut v: Vec<i128>) -> Vec<i128> {
    let m = v.len() as u64;
    let (p, r) = arith::prime_power(m).expect("root order must be a prime power");
    if r == 0 {
        return vec![v.iter().sum()];
    }
    let step = arith::pow(p, r - 1) as usize;
    let phi = arith::phi_prime_power(p, r) as usize;
    for e in (phi..m as usize).rev() {
        let c = v[e];
        if c == 0 {
            continue;
        }
        v[e] = 0;
        // x^{(p−1)·step} = −Σ_{j<p−1} x^{j·step}
        let base = e - (p as usize - 1) * step;
        for j in 0..p as usize - 1 {
            v[base + j * step] -= c;
        }
    }
    v.truncate(phi);
    v
}

/// `|tr|²` contribution of a trace multiplicity vector, as an unreduced
/// combination of `M`-th roots of unity added into `acc`.
pub fn add_abs_squared(acc: &mut [i128], trace: &[(u64, u64)], m: u64) {
    for &(a, ca) in trace {
        for &(b, cb) in trace {
            let e = (a + m - b) % m;
            acc[e as usize] += ca as i128 * cb as i128;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cmul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
        (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
    }

    fn dense_mul(x: &[Vec<(f64, f64)>], y: &[Vec<(f64, f64)>]) -> Vec<Vec<(f64, f64)>> {
        let n = x.len();
        let mut out = vec![vec![(0.0, 0.0); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    let t = cmul(x[i][k], y[k][j]);
                    out[i][j].0 += t.0;
                    out[i][j].1 += t.1;
                }
            }
        }
        out
    }

    fn arb_matrix(dim: usize, m: u64) -> impl Strategy<Value = MonomialMatrix> {
        (
            Just((0..dim as u32).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(0..m, dim),
        )
            .prop_map(move |(perm, exps)| MonomialMatrix::new(m, perm, exps).unwrap())
    }

    #[test]
    fn identity_and_commutator_basics() {
        let x = MonomialMatrix::new(4, vec![1, 2, 0], vec![1, 3, 2]).unwrap();
        let id = MonomialMatrix::identity(3, 4);
        assert_eq!(x.mul(&id).unwrap(), x);
        assert_eq!(id.mul(&x).unwrap(), x);
        assert!(x.commutator(&x).unwrap().is_identity());
        assert!(x.mul(&x.inverse()).unwrap().is_identity());
        let other = MonomialMatrix::identity(2, 4);
        assert!(matches!(x.mul(&other), Err(Error::ShapeMismatch(_))));
        assert!(MonomialMatrix::new(4, vec![0, 0], vec![0, 0]).is_err());
    }

    #[test]
    fn two_dimensional_commutator_is_minus_one() {
        let a = MonomialMatrix::diagonal(2, vec![0, 1]);
        let b = MonomialMatrix::permutation(2, vec![1, 0]).unwrap();
        assert_eq!(a.commutator(&b).unwrap().scalar_exp(), Some(1));
    }

    #[test]
    fn cyclotomic_reduction() {
        // 1 + ζ_3 + ζ_3² = 0
        assert_eq!(cyclotomic_canonical(vec![1, 1, 1]), vec![0, 0]);
        // ζ_4² = −1
        assert_eq!(cyclotomic_canonical(vec![0, 0, 1, 0]), vec![-1, 0]);
        // ζ_9^6 = −1 − ζ_9^3
        assert_eq!(cyclotomic_canonical(vec![0, 0, 0, 0, 0, 0, 1, 0, 0]), vec![-1, 0, 0, -1, 0, 0]);
        assert_eq!(cyclotomic_canonical(vec![5]), vec![5]);
    }

    proptest! {
        #[test]
        fn product_matches_dense(x in arb_matrix(4, 6), y in arb_matrix(4, 6)) {
            let sparse = x.mul(&y).unwrap().to_dense();
            let dense = dense_mul(&x.to_dense(), &y.to_dense());
            for i in 0..4 {
                for j in 0..4 {
                    prop_assert!((sparse[i][j].0 - dense[i][j].0).abs() < 1e-9);
                    prop_assert!((sparse[i][j].1 - dense[i][j].1).abs() < 1e-9);
                }
            }
        }

        #[test]
        fn canonical_form_matches_complex_value(v in prop::collection::vec(-5i128..5, 27)) {
            let reduced = cyclotomic_canonical(v.clone());
            let value = |coeffs: &[i128]| {
                coeffs.iter().enumerate().fold((0.0, 0.0), |acc, (e, &c)| {
                    let a = 2.0 * std::f64::consts::PI * e as f64 / 27.0;
                    (acc.0 + c as f64 * a.cos(), acc.1 + c as f64 * a.sin())
                })
            };
            let (x, y) = (value(&v), value(&reduced));
            prop_assert!((x.0 - y.0).abs() < 1e-6 && (x.1 - y.1).abs() < 1e-6);
        }
    }
}
