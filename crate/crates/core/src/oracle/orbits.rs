//! Orbits of the linear characters acting on the irreducible characters by
//! pointwise multiplication.
//!
//! `λχ = χ` exactly when `λ` is trivial on every class where `χ` does not
//! vanish. Over `F_ℓ` this test is exact: reduction mod `ℓ` is injective on
//! irreducible characters and on `exp(G)`-th roots of unity. The stabilizer
//! of `χ` is therefore the annihilator of the subgroup `H_χ` of `G/G′`
//! generated by the support of `χ`, of order `|G/G′| / |H_χ|`.

use std::collections::HashMap;

use super::dixon::CharacterTable;

/// `|Stab(χ)|` for a non-linear character.
fn stabilizer_order(table: &CharacterTable, chi: usize) -> u64 {
    let lin = &table.linear;
    let values = &table.nonlinear[chi].values;
    let support = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(c, _)| lin.class_nf[c]);
    lin.quotient.size() / lin.quotient.subgroup_order(support)
}

/// Number of twist orbits among the irreducible characters of degree `dim`,
/// by Burnside's lemma: `#orbits = Σ_χ |Stab(χ)| / |G/G′|`.
pub fn twist_orbit_count(table: &CharacterTable, dim: u64) -> u64 {
    if dim == 1 {
        return u64::from(table.linear_count() > 0);
    }
    let total: u128 = (0..table.nonlinear.len())
        .filter(|&i| table.nonlinear[i].degree == dim)
        .map(|i| stabilizer_order(table, i) as u128)
        .sum();
    let a = table.linear.quotient.size() as u128;
    assert_eq!(total % a, 0, "Burnside count must be integral");
    (total / a) as u64
}

/// Twist orbits listed explicitly, as sorted character indices (numbering of
/// [`CharacterTable::degree`]). Costs `#chars · |G/G′| · #classes`.
pub fn twist_orbits_explicit(table: &CharacterTable, dim: u64) -> Vec<Vec<usize>> {
    let members: Vec<usize> = (0..table.count()).filter(|&i| table.degree(i) == dim).collect();
    let rows: Vec<Vec<u64>> = members.iter().map(|&i| table.row(i)).collect();
    let index: HashMap<&Vec<u64>, usize> = rows.iter().enumerate().map(|(k, r)| (r, k)).collect();
    let linear_rows: Vec<Vec<u64>> = (0..table.linear_count()).map(|i| table.row(i)).collect();
    let f = table.field;
    let mut seen = vec![false; members.len()];
    let mut orbits = Vec::new();
    for start in 0..members.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        for lam in &linear_rows {
            let twisted: Vec<u64> = rows[start].iter().zip(lam).map(|(&x, &y)| f.mul(x, y)).collect();
            let k = index[&twisted];
            if !std::mem::replace(&mut seen[k], true) {
                orbit.push(members[k]);
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}
