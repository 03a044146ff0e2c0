//! Integer polynomials in one variable (`Z[P]`) and in two (`Z[P][T]`), with
//! exact division and gcd by primitive pseudo-remainder sequences.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Ascending coefficients, no trailing zeros; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<BigInt>);

impl UPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = UPoly(coeffs);
        p.trim();
        p
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c.into();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        UPoly(coeffs)
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        UPoly(self.0.iter().map(|x| x / &c).collect())
    }

    /// `self / d` if the division is exact over `Z`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.degree() {
            if dr < dd {
                return None;
            }
            let (coef, rem) = r.lead().div_rem(d.lead());
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&d.scale(&coef).shift(dr - dd));
            q[dr - dd] = coef;
        }
        Some(Self::new(q))
    }

    /// Pseudo-remainder of `self` by `b`.
    fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            r = r.scale(b.lead()).sub(&b.scale(&lr).shift(dr - db));
        }
        r
    }

    /// Gcd over `Z` with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.positive();
        }
        if other.is_zero() {
            return self.positive();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c).positive()
    }

    fn positive(&self) -> Self {
        if !self.is_zero() && self.lead().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

/// A polynomial in `P` and `T`, stored as coefficients in `Z[P]` indexed by
/// the degree in `T`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly(Vec<UPoly>);

impl BiPoly {
    pub fn new(coeffs: Vec<UPoly>) -> Self {
        let mut p = BiPoly(coeffs);
        while p.0.last().is_some_and(UPoly::is_zero) {
            p.0.pop();
        }
        p
    }

    pub fn zero() -> Self {
        BiPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![UPoly::constant(c)])
    }

    /// `c · P^p_deg · T^t_deg`.
    pub fn monomial(c: impl Into<BigInt>, p_deg: usize, t_deg: usize) -> Self {
        let mut coeffs = vec![UPoly::zero(); t_deg + 1];
        coeffs[t_deg] = UPoly::monomial(c, p_deg);
        Self::new(coeffs)
    }

    /// Sum of `c · P^i · T^j` over `(c, i, j)`.
    pub fn from_terms(terms: &[(i64, usize, usize)]) -> Self {
        terms
            .iter()
            .fold(Self::zero(), |acc, &(c, i, j)| acc.add(&Self::monomial(c, i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn t_degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn p_degree(&self) -> Option<usize> {
        self.0.iter().filter_map(UPoly::degree).max()
    }

    fn coeff(&self, j: usize) -> UPoly {
        self.0.get(j).cloned().unwrap_or_default()
    }

    fn lead(&self) -> &UPoly {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    /// Non-zero terms keyed by `(P-degree, T-degree)`.
    pub fn terms(&self) -> BTreeMap<(usize, usize), BigInt> {
        let mut out = BTreeMap::new();
        for (j, c) in self.0.iter().enumerate() {
            for (i, x) in c.coeffs().iter().enumerate() {
                if !x.is_zero() {
                    out.insert((i, j), x.clone());
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        Self::new((0..n).map(|j| self.coeff(j).add(&other.coeff(j))).collect())
    }

    pub fn neg(&self) -> Self {
        BiPoly(self.0.iter().map(UPoly::neg).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![UPoly::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    fn scale(&self, c: &UPoly) -> Self {
        Self::new(self.0.iter().map(|x| x.mul(c)).collect())
    }

    fn shift_t(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![UPoly::zero(); k];
        coeffs.extend(self.0.iter().cloned());
        BiPoly(coeffs)
    }

    /// Multiplies by `P^i T^j`.
    pub fn mul_monomial(&self, i: usize, j: usize) -> Self {
        BiPoly(self.0.iter().map(|c| c.shift(i)).collect()).shift_t(j)
    }

    /// Gcd in `Z[P]` of the `T`-coefficients.
    pub fn content(&self) -> UPoly {
        self.0.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
    }

    pub fn primitive(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(
            self.0
                .iter()
                .map(|x| x.div_exact(&c).expect("content divides"))
                .collect(),
        )
    }

    /// `self / d` if the division is exact in `Z[P, T]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let dd = d.t_degree()?;
        let mut r = self.clone();
        let mut q = vec![UPoly::zero(); self.0.len().saturating_sub(dd).max(1)];
        while let Some(dr) = r.t_degree() {
            if dr < dd {
                return None;
            }
            let coef = r.lead().div_exact(d.lead())?;
            r = r.sub(&d.scale(&coef).shift_t(dr - dd));
            q[dr - dd] = coef;
        }
        Some(Self::new(q))
    }

    fn prem(&self, b: &Self) -> Self {
        let db = b.t_degree().expect("nonzero divisor");
        let mut r = self.clone();
        while let Some(dr) = r.t_degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            r = r.scale(b.lead()).sub(&b.scale(&lr).shift_t(dr - db));
        }
        r
    }

    /// A gcd in `Z[P, T]`, determined up to sign.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let c = self.content().gcd(&other.content());
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.t_degree() < b.t_degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    /// `T ↦ P·T`.
    pub fn subst_t_by_pt(&self) -> Self {
        Self::new(self.0.iter().enumerate().map(|(j, c)| c.shift(j)).collect())
    }

    /// `P^a T^b · f(1/P, 1/T)` with `(a, b)` the degrees in `P` and `T`.
    pub fn reciprocal(&self) -> (Self, usize, usize) {
        let (Some(a), Some(b)) = (self.p_degree(), self.t_degree()) else {
            return (Self::zero(), 0, 0);
        };
        let mut out = Self::zero();
        for ((i, j), c) in self.terms() {
            out = out.add(&Self::monomial(c, a - i, b - j));
        }
        (out, a, b)
    }

    /// The polynomial in `T` obtained by setting `P = x`.
    pub fn eval_p(&self, x: &BigInt) -> UPoly {
        UPoly::new(self.0.iter().map(|c| c.eval(x)).collect())
    }

    pub fn eval(&self, p: &BigInt, t: &BigInt) -> BigInt {
        self.eval_p(p).eval(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bp(terms: &[(i64, usize, usize)]) -> BiPoly {
        BiPoly::from_terms(terms)
    }

    #[test]
    fn univariate_gcd_and_division() {
        let a = UPoly::new(vec![(-1).into(), 0.into(), 1.into()]); // x² − 1
        let b = UPoly::new(vec![(-2).into(), 2.into()]); // 2x − 2
        assert_eq!(a.gcd(&b), UPoly::new(vec![(-1).into(), 1.into()]));
        assert_eq!(a.div_exact(&b), None);
        assert_eq!(b.div_exact(&UPoly::constant(2)), Some(UPoly::new(vec![(-1).into(), 1.into()])));
    }

    #[test]
    fn bivariate_gcd_of_known_factors() {
        let one_minus_t = bp(&[(1, 0, 0), (-1, 0, 1)]);
        let one_plus_pt = bp(&[(1, 0, 0), (1, 1, 1)]);
        let x = one_minus_t.mul(&one_plus_pt).mul(&bp(&[(3, 0, 0)]));
        let y = one_minus_t.mul(&one_minus_t).mul(&bp(&[(6, 2, 0)]));
        let g = x.gcd(&y);
        // 3·(1 − T) up to sign
        let expected = one_minus_t.mul(&bp(&[(3, 0, 0)]));
        assert!(g == expected || g == expected.neg(), "{g:?}");
        assert_eq!(x.div_exact(&g).map(|q| q.mul(&g)), Some(x));
    }

    #[test]
    fn substitution_and_reciprocal() {
        let f = bp(&[(1, 0, 0), (-1, 2, 2)]); // 1 − P²T²
        assert_eq!(bp(&[(1, 0, 0), (-1, 0, 2)]).subst_t_by_pt(), f);
        let (r, a, b) = f.reciprocal();
        assert_eq!((a, b), (2, 2));
        assert_eq!(r, bp(&[(1, 2, 2), (-1, 0, 0)]));
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((-3i64..=3, 0usize..3, 0usize..3), 1..5)
            .prop_map(|t| BiPoly::from_terms(&t))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in arb_bipoly(), b in arb_bipoly(), c in arb_bipoly()) {
            prop_assume!(!c.is_zero());
            let (x, y) = (a.mul(&c), b.mul(&c));
            let g = x.gcd(&y);
            if !x.is_zero() {
                prop_assert!(x.div_exact(&g).is_some());
            }
            if !y.is_zero() {
                prop_assert!(y.div_exact(&g).is_some());
            }
            if !x.is_zero() && !y.is_zero() {
                prop_assert!(g.div_exact(&c).is_some());
            }
        }

        #[test]
        fn product_evaluates_pointwise(a in arb_bipoly(), b in arb_bipoly(), p in -4i64..4, t in -4i64..4) {
            let (p, t) = (BigInt::from(p), BigInt::from(t));
            prop_assert_eq!(a.mul(&b).eval(&p, &t), a.eval(&p, &t) * b.eval(&p, &t));
        }
    }
}
