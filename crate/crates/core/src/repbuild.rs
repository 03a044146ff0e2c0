//! Explicit monomial representatives of twist isoclasses and their exact
//! verification.
//!
//! The basis is indexed by `(i, j) ∈ Z/p^r × Z/p^m`, flattened as `i·p^m + j`.
//! Every generator image is either diagonal with an exponent that is linear
//! in `(i, j)` or a translation of the index set, so each commutator of a
//! diagonal image with a translation is the scalar obtained by evaluating
//! the linear form on the translation vector.

use indexmap::IndexSet;
use serde::Serialize;

use crate::arith::{self, modulo};
use crate::error::{Error, Result};
use crate::isoclass::{self, Case, IsoclassLabel};
use crate::monomial::{self, MonomialMatrix};
use crate::quad_ring::{Branch, QuadRing};

/// Largest image group [`verify_irreducible`] will enumerate.
pub const GROUP_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub label: IsoclassLabel,
    /// Image of `x`.
    pub a: MonomialMatrix,
    /// Image of `x_d`.
    pub a_d: MonomialMatrix,
    /// Image of `y`.
    pub b: MonomialMatrix,
    /// Image of `y_d`.
    pub b_d: MonomialMatrix,
    /// Image of `z` (the scalar `Λ`).
    pub lambda: MonomialMatrix,
    /// Image of `z_d` (the scalar `Λ_d`).
    pub mu: MonomialMatrix,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.a.dim
    }

    pub fn root_order(&self) -> u64 {
        self.a.root_order
    }

    /// Images of `x, x_d, y, y_d, z, z_d` in that order.
    pub fn generators(&self) -> [&MonomialMatrix; 6] {
        [&self.a, &self.a_d, &self.b, &self.b_d, &self.lambda, &self.mu]
    }

    /// Generator-wise direct sum; the result is reducible.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(Representation {
            label: self.label,
            a: self.a.direct_sum(&other.a)?,
            a_d: self.a_d.direct_sum(&other.a_d)?,
            b: self.b.direct_sum(&other.b)?,
            b_d: self.b_d.direct_sum(&other.b_d)?,
            lambda: self.lambda.direct_sum(&other.lambda)?,
            mu: self.mu.direct_sum(&other.mu)?,
        })
    }
}

/// Exponent of the scalar `[x_d, y_d]` must map to: `Λ^d`, or `Λ^{(d−1)/4} Λ_d`.
pub fn relation_target(ring: &QuadRing, lambda_exp: u64, mu_exp: u64, q: u64) -> u64 {
    let lambda = lambda_exp as i128;
    match ring.branch {
        Branch::Mod23 => modulo(ring.d as i128 * lambda, q),
        Branch::Mod1 => modulo(ring.norm_n as i128 * lambda + mu_exp as i128, q),
    }
}

struct Grid {
    q: u64,
    g: u64,
}

impl Grid {
    fn dim(&self) -> usize {
        (self.q * self.g) as usize
    }

    fn cells(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        (0..self.q).flat_map(move |i| (0..self.g).map(move |j| (i, j)))
    }

    fn index(&self, i: u64, j: u64) -> u32 {
        ((i % self.q) * self.g + j % self.g) as u32
    }

    fn diagonal(&self, ci: u64, cj: u64) -> MonomialMatrix {
        let q = self.q as u128;
        let exps = self
            .cells()
            .map(|(i, j)| ((ci as u128 * i as u128 + cj as u128 * j as u128) % q) as u64)
            .collect();
        MonomialMatrix::diagonal(self.q, exps)
    }

    fn translation(&self, di: u64, dj: u64) -> MonomialMatrix {
        let perm = self
            .cells()
            .map(|(i, j)| self.index(i + di, j + dj))
            .collect();
        MonomialMatrix::permutation(self.q, perm).expect("translations are bijective")
    }
}

/// Builds the monomial representative of `label`.
///
/// Case 1: `A = diag(ζ^{u i})`, `A_d = diag(ζ^{u(i l + j w)})` with
/// `w = D − l²`, `B: (i, j) ↦ (i + 1, j)`, `B_d: (i, j) ↦ (i + l, j + 1)`.
///
/// Case 2 (`r = m`) swaps the roles of `B` and `B_d`: `B_d` is the block
/// cycle `(i, j) ↦ (i + 1, j)`, `B: (i, j) ↦ (i + l, j + 1)`, `A = diag(ζ^{u i})`
/// and `A_d = diag(ζ^{T i + (u − T l) j})` where `ζ^T` is the required value
/// of `[A_d, B_d]`.
pub fn build(ring: &QuadRing, label: &IsoclassLabel) -> Result<Representation> {
    isoclass::validate_label(ring, label)?;
    let grid = Grid {
        q: label.root_order(),
        g: arith::pow(label.p, label.m),
    };
    let q = grid.q;
    let dim = grid.dim();
    let (u, l) = (label.u, label.l);
    let (a, a_d, b, b_d) = match label.case {
        Case::Case1 => {
            let w = isoclass::inner_step(ring, label);
            let a = grid.diagonal(u, 0);
            let a_d = grid.diagonal(
                (u as u128 * l as u128 % q as u128) as u64,
                (u as u128 * w as u128 % q as u128) as u64,
            );
            (a, a_d, grid.translation(1, 0), grid.translation(l, 1))
        }
        Case::Case2 => {
            let t = relation_target(ring, label.lambda_exp, label.mu_exp, q);
            let tl = (t as u128 * l as u128 % q as u128) as u64;
            let a = grid.diagonal(u, 0);
            let a_d = grid.diagonal(t, (u + q - tl) % q);
            (a, a_d, grid.translation(l, 1), grid.translation(1, 0))
        }
    };
    Ok(Representation {
        label: *label,
        a,
        a_d,
        b,
        b_d,
        lambda: MonomialMatrix::scalar(dim, q, label.lambda_exp),
        mu: MonomialMatrix::scalar(dim, q, label.mu_exp),
    })
}

/// Checks the defining relations of the group on the images.
pub fn verify_relations(ring: &QuadRing, rep: &Representation) -> bool {
    let check = || -> Result<bool> {
        let (Some(lambda), Some(mu)) = (rep.lambda.scalar_exp(), rep.mu.scalar_exp()) else {
            return Ok(false);
        };
        let q = rep.root_order();
        let is_scalar = |m: MonomialMatrix, e: u64| m.scalar_exp() == Some(e % q);
        Ok(is_scalar(rep.a.commutator(&rep.b)?, lambda)
            && is_scalar(rep.a.commutator(&rep.b_d)?, mu)
            && is_scalar(rep.a_d.commutator(&rep.b)?, mu)
            && is_scalar(
                rep.a_d.commutator(&rep.b_d)?,
                relation_target(ring, lambda, mu, q),
            )
            && rep.a.commutator(&rep.a_d)?.is_identity()
            && rep.b.commutator(&rep.b_d)?.is_identity()
            && rep.lambda.dim == rep.dim()
            && rep.mu.dim == rep.dim())
    };
    check().unwrap_or(false)
}

/// Order of the image group and `Σ_g |tr g|²` in canonical cyclotomic form.
pub fn character_norm(rep: &Representation) -> Result<(usize, Vec<i128>)> {
    let m = rep.root_order();
    let dim = rep.dim();
    if dim >= 1 << 16 || m >= 1 << 16 {
        return Err(Error::GroupTooLarge(GROUP_LIMIT));
    }
    let pack = |x: &MonomialMatrix| -> Box<[u32]> {
        (0..dim)
            .map(|c| (x.perm[c] << 16) | x.exps[c] as u32)
            .collect()
    };
    let gens: Vec<Box<[u32]>> = rep.generators().iter().map(|g| pack(g)).collect();
    let mut elements: IndexSet<Box<[u32]>> = IndexSet::new();
    elements.insert(pack(&MonomialMatrix::identity(dim, m)));
    let mask = 0xffffu32;
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next].clone();
        for g in &gens {
            let y: Box<[u32]> = (0..dim)
                .map(|c| {
                    let mid = (g[c] >> 16) as usize;
                    let e = ((g[c] & mask) + (x[mid] & mask)) % m as u32;
                    (x[mid] & !mask) | e
                })
                .collect();
            if elements.insert(y) && elements.len() > GROUP_LIMIT {
                return Err(Error::GroupTooLarge(GROUP_LIMIT));
            }
        }
        next += 1;
    }
    let mut acc = vec![0i128; m as usize];
    let mut counts = vec![0u64; m as usize];
    for x in &elements {
        let mut any = false;
        for (c, &entry) in x.iter().enumerate() {
            if (entry >> 16) as usize == c {
                counts[(entry & mask) as usize] += 1;
                any = true;
            }
        }
        if any {
            let trace: Vec<(u64, u64)> = counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(e, &c)| (e as u64, c))
                .collect();
            monomial::add_abs_squared(&mut acc, &trace, m);
            counts.iter_mut().for_each(|c| *c = 0);
        }
    }
    Ok((elements.len(), monomial::cyclotomic_canonical(acc)))
}

/// Irreducibility via `Σ_{g ∈ Γ} |tr g|² = |Γ|` over the finite image group `Γ`.
pub fn verify_irreducible(rep: &Representation) -> Result<bool> {
    let (order, norm) = character_norm(rep)?;
    Ok(norm[0] == order as i128 && norm[1..].iter().all(|&c| c == 0))
}

/// Exponents of the central scalars `(Λ, Λ_d)`; these are fixed by twisting.
pub fn twist_invariants(rep: &Representation) -> (u64, u64) {
    (rep.lambda.exps[0], rep.mu.exps[0])
}
