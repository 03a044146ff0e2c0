//! Independent count of twist isoclasses from the character table of the
//! finite quotient `G_k = H(O/p^k O)`.
//!
//! Every `p^n`-dimensional isoclass has a representative whose generator
//! images have order dividing `p^r`, where `r` is the largest eigenvalue
//! exponent occurring for that `n`, so it factors through `G_k` for any
//! `k >= r`. A twist relating two representations of `G_k` is trivial on
//! the `p^k`-th powers of the generators and therefore also factors through
//! `G_k`. Counting orbits of the linear characters of `G_k` on its degree
//! `p^n` characters is thus an exact count of isoclasses.

mod abelian;
mod classes;
mod dixon;
mod field;
mod group;
mod heisenberg;
mod orbits;

pub use abelian::AbelianGroup;
pub use classes::ConjugacyClasses;
pub use dixon::{character_table, Character, CharacterTable, LinearCharacters};
pub use field::{dixon_prime, Field};
pub use group::{derived_subgroup, normal_closure, FiniteGroup};
pub use heisenberg::{quotient_group, FiniteHeisenberg};
pub use orbits::{twist_orbit_count, twist_orbits_explicit};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::isoclass;
use crate::quad_ring::QuadRing;

/// Resource guards for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleLimits {
    pub max_order: usize,
    pub max_classes: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_order: 1_000_000,
            max_classes: 5000,
        }
    }
}

impl OracleLimits {
    /// Large enough for `p^6 <= 2·10^6` with `k = 1`.
    pub fn stretch() -> Self {
        OracleLimits {
            max_order: 2_000_000,
            max_classes: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub n: u32,
    pub oracle_count: u64,
    pub closed_form: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub d: i64,
    pub p: u64,
    pub k: u32,
    pub group_order: u64,
    pub class_count: usize,
    pub field_char: u64,
    /// Number of irreducible characters of each degree.
    pub degree_census: BTreeMap<u64, u64>,
    /// Number of twist orbits for each degree.
    pub twist_orbits_by_dim: BTreeMap<u64, u64>,
    /// One entry for each `n` whose isoclasses all factor through `G_k`.
    pub agree_flags: Vec<Comparison>,
}

impl CensusReport {
    pub fn all_agree(&self) -> bool {
        self.agree_flags.iter().all(|c| c.agree)
    }
}

fn check_level(ring: &QuadRing, p: u64, k: u32, n: u32) -> Result<()> {
    let needed = isoclass::required_quotient_level(ring, p, n)?;
    if k < needed {
        return Err(Error::QuotientTooShallow { k, n, needed });
    }
    Ok(())
}

fn compare_with_table(ring: &QuadRing, p: u64, n: u32, table: &CharacterTable) -> Result<Comparison> {
    let oracle_count = twist_orbit_count(table, arith::pow(p, n));
    let closed_form = isoclass::closed_form_count(ring, p, n)?;
    Ok(Comparison {
        n,
        oracle_count,
        closed_form,
        agree: oracle_count == closed_form,
    })
}

/// Oracle count versus closed form for `p^n`-dimensional isoclasses, using `G_k`.
pub fn compare(ring: &QuadRing, p: u64, k: u32, n: u32, limits: &OracleLimits) -> Result<Comparison> {
    check_level(ring, p, k, n)?;
    let g = quotient_group(ring, p, k, limits.max_order)?;
    let table = character_table(&g, limits)?;
    compare_with_table(ring, p, n, &table)
}

/// Full census of `G_k` with comparisons for every `n` that `G_k` resolves.
pub fn census(ring: &QuadRing, p: u64, k: u32, limits: &OracleLimits) -> Result<CensusReport> {
    let g = quotient_group(ring, p, k, limits.max_order)?;
    let table = character_table(&g, limits)?;
    let degree_census = table.degree_census();
    let twist_orbits_by_dim = degree_census
        .keys()
        .map(|&dim| (dim, twist_orbit_count(&table, dim)))
        .collect();
    let mut agree_flags = Vec::new();
    // Degrees are at most p^{2k}.
    for n in 0..=2 * k {
        if check_level(ring, p, k, n).is_ok() {
            agree_flags.push(compare_with_table(ring, p, n, &table)?);
        }
    }
    Ok(CensusReport {
        d: ring.d,
        p,
        k,
        group_order: table.group_order,
        class_count: table.classes.count(),
        field_char: table.field_char(),
        degree_census,
        twist_orbits_by_dim,
        agree_flags,
    })
}
