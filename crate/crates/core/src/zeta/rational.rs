//! Rational functions in `P` and `T` with a unique normalized form.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::BiPoly;

/// `num / den` with `gcd(num, den) = 1` and the coefficient of the least
/// monomial of `den` (ordered by `(P-degree, T-degree)`) positive. The zero
/// function is `0/1`. Two values are equal exactly when they are equal as
/// rational functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiRational {
    num: BiPoly,
    den: BiPoly,
}

impl BiRational {
    /// # Panics
    /// If `den` is zero.
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return BiRational {
                num,
                den: BiPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        let first = den.terms().into_values().next().expect("nonzero");
        if first.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        BiRational { num, den }
    }

    pub fn from_poly(num: BiPoly) -> Self {
        Self::new(num, BiPoly::one())
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn num(&self) -> &BiPoly {
        &self.num
    }

    pub fn den(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// # Panics
    /// If `other` is zero.
    pub fn div(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.num.pow(e), self.den.pow(e))
    }

    /// `T ↦ P·T`.
    pub fn subst_t_by_pt(&self) -> Self {
        Self::new(self.num.subst_t_by_pt(), self.den.subst_t_by_pt())
    }

    /// `f(1/P, 1/T)`.
    pub fn invert_variables(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (num, an, bn) = self.num.reciprocal();
        let (den, ad, bd) = self.den.reciprocal();
        // f(1/P,1/T) = P^{ad−an} T^{bd−bn} · num*/den*
        let (pn, pd) = (ad.saturating_sub(an), an.saturating_sub(ad));
        let (tn, td) = (bd.saturating_sub(bn), bn.saturating_sub(bd));
        Self::new(num.mul_monomial(pn, tn), den.mul_monomial(pd, td))
    }

    /// `Some(g)` if the function is the monomial `P^g` (g may be negative).
    pub fn as_p_power(&self) -> Option<i64> {
        let single = |f: &BiPoly| -> Option<usize> {
            let terms = f.terms();
            match terms.iter().next() {
                Some((&(i, 0), c)) if terms.len() == 1 && c.is_one() => Some(i),
                _ => None,
            }
        };
        match (single(&self.num)?, single(&self.den)?) {
            (i, 0) => Some(i as i64),
            (0, j) => Some(-(j as i64)),
            _ => None,
        }
    }

    /// Value at integer points, `None` where the denominator vanishes.
    pub fn eval(&self, p: &BigInt, t: &BigInt) -> Option<(BigInt, BigInt)> {
        let d = self.den.eval(p, t);
        (!d.is_zero()).then(|| (self.num.eval(p, t), d))
    }
}

fn fmt_poly(f: &BiPoly) -> String {
    let mut terms: Vec<((usize, usize), BigInt)> = f.terms().into_iter().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by_key(|&((i, j), _)| (j, i));
    let mut out = String::new();
    for (k, ((i, j), c)) in terms.into_iter().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (k, sign) {
            (0, "-") => out.push('-'),
            (0, _) => {}
            _ => out.push_str(&format!(" {sign} ")),
        }
        let mut factors = Vec::new();
        let abs = c.abs();
        if !abs.is_one() || (i == 0 && j == 0) {
            factors.push(abs.to_string());
        }
        for (var, e) in [("P", i), ("T", j)] {
            match e {
                0 => {}
                1 => factors.push(var.to_string()),
                _ => factors.push(format!("{var}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

fn wrap(f: &BiPoly) -> String {
    let s = fmt_poly(f);
    if f.terms().len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for BiRational {
    /// Terms are listed by increasing `T`-degree, then `P`-degree, e.g.
    /// `(1 - T^2)/(1 - P^2*T^2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            f.write_str(&fmt_poly(&self.num))
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}
