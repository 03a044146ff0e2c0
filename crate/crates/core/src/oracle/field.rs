//! Arithmetic and linear algebra over a prime field `F_ℓ` with `ℓ < 2^32`.

use crate::arith;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    pub l: u64,
}

impl Field {
    pub fn new(l: u64) -> Self {
        assert!(arith::is_prime(l) && l < 1 << 32);
        Field { l }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.l
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.l - b) % self.l
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.l
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.l - a) % self.l
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        arith::mod_pow(a, e, self.l)
    }

    /// # Panics
    /// If `a` is zero.
    pub fn inv(&self, a: u64) -> u64 {
        arith::mod_inv(a, self.l).expect("inverse of zero")
    }

    pub fn from_u64(&self, a: u64) -> u64 {
        a % self.l
    }

    /// An element of multiplicative order exactly `e` (requires `e | ℓ − 1`).
    pub fn root_of_unity(&self, e: u64) -> u64 {
        let n = self.l - 1;
        assert_eq!(n % e, 0);
        let factors: Vec<u64> = arith::factorize(n).into_iter().map(|(q, _)| q).collect();
        let generator = (2..self.l)
            .find(|&g| factors.iter().all(|&q| self.pow(g, n / q) != 1))
            .expect("F_l^* is cyclic");
        self.pow(generator, n / e)
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, i);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// A basis of `{x : M x = 0}` for a square matrix `M` (row-major).
    pub fn nullspace(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let n = m.len();
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI − M)`, ascending coefficients, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        for j in 1..n.saturating_sub(1) {
            let Some(i) = (j..n).find(|&i| h[i][j - 1] != 0) else {
                continue;
            };
            if i != j {
                h.swap(i, j);
                for row in h.iter_mut() {
                    row.swap(i, j);
                }
            }
            let inv = self.inv(h[j][j - 1]);
            for i in j + 1..n {
                let u = self.mul(h[i][j - 1], inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let t = self.mul(u, h[j][c]);
                    h[i][c] = self.sub(h[i][c], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[j] = self.add(row[j], t);
                }
            }
        }
        // p_k = (x − h_kk) p_{k−1} − Σ_{i<k} h_{i,k} (Π_{i<r<=k} h_{r,r−1}) p_{i−1}, 1-based
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(h[k][k], c));
            }
            let mut t = 1u64;
            for i in (0..k).rev() {
                t = self.mul(t, h[i + 1][i]);
                if t == 0 {
                    break;
                }
                let f = self.mul(t, h[i][k]);
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = self.sub(next[d], self.mul(f, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval_poly(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_ℓ` by exhaustive evaluation.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.l).filter(|&x| self.eval_poly(poly, x) == 0).collect()
    }
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > bound`.
pub fn dixon_prime(e: u64, bound: u64) -> Option<u64> {
    let mut l = bound / e * e + 1;
    while l < 1 << 32 {
        if l > bound && arith::is_prime(l) {
            return Some(l);
        }
        l += e;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det(f: &Field, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1u64;
        for c in 0..n {
            let Some(i) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if i != c {
                a.swap(i, c);
                d = f.neg(d);
            }
            d = f.mul(d, a[c][c]);
            let inv = f.inv(a[c][c]);
            for r in c + 1..n {
                let u = f.mul(a[r][c], inv);
                for k in c..n {
                    let t = f.mul(u, a[c][k]);
                    a[r][k] = f.sub(a[r][k], t);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant() {
        let f = Field::new(101);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..7 {
            for _ in 0..10 {
                let m: Vec<Vec<u64>> = (0..n)
                    .map(|_| (0..n).map(|_| rng.gen_range(0..101) * rng.gen_range(0..2)).collect())
                    .collect();
                let cp = f.charpoly(&m);
                assert_eq!(cp.len(), n + 1);
                for x in [0u64, 1, 5, 77] {
                    let shifted: Vec<Vec<u64>> = (0..n)
                        .map(|i| (0..n).map(|j| f.sub(if i == j { x } else { 0 }, m[i][j])).collect())
                        .collect();
                    assert_eq!(f.eval_poly(&cp, x), det(&f, &shifted));
                }
            }
        }
    }

    #[test]
    fn nullspace_and_rref() {
        let f = Field::new(7);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]];
        let ns = f.nullspace(&m);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&ns[0]).fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
            assert_eq!(dot, 0);
        }
        let mut rows = m.clone();
        assert_eq!(f.rref(&mut rows), vec![0, 2]);
        assert_eq!(rows.len(), 2);
    }

    #[test]
    fn primes_and_roots_of_unity() {
        assert_eq!(dixon_prime(2, 16), Some(17));
        assert_eq!(dixon_prime(11, 2662), Some(2663));
        let f = Field::new(2663);
        let w = f.root_of_unity(11);
        assert_eq!(f.pow(w, 11), 1);
        assert_ne!(w, 1);
    }
}
