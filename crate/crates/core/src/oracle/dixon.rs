//! Character tables by the Burnside–Dixon method, split by central character.
//!
//! For an irreducible `χ` the vector `w_l = |C_l| χ(g_l)/χ(1)` is a common
//! eigenvector of the class-multiplication matrices `M_j[k][l] = a_{jkl}`
//! (`K_j K_k = Σ_l a_{jkl} K_l`). Working over `F_ℓ` with `ℓ ≡ 1 mod exp(G)`
//! all eigenvalues are rational, so the common eigenspaces are found by
//! repeatedly splitting with one `M_j` at a time.
//!
//! The center `Z` permutes the classes (`z·C`), and `w_{z·C} = ψ(z) w_C` for
//! the central character `ψ` of `χ`. The eigenvectors with a given `ψ` live
//! in the subspace spanned by the `Z`-orbits of classes whose stabilizer lies
//! in `ker ψ`, with one coordinate per orbit. Each such block is split on its
//! own; blocks containing only linear characters are skipped because the
//! linear characters come from the abelianization.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::abelian::{self, AbelianGroup};
use super::classes::ConjugacyClasses;
use super::field::{self, Field};
use super::group::{self, FiniteGroup};
use super::OracleLimits;
use crate::arith;
use crate::error::{Error, Result};

/// The characters of `G/G′`.
#[derive(Debug, Clone)]
pub struct LinearCharacters {
    pub quotient: AbelianGroup,
    /// Normal form in `G/G′` of each class representative.
    pub class_nf: Vec<u64>,
    /// Log vectors mod the exponent, sorted; the trivial character is first.
    pub logs: Vec<Vec<u64>>,
}

/// A character of degree > 1 with its values over `F_ℓ`, one per class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<u32>,
}

#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: u64,
    pub classes: ConjugacyClasses,
    pub exponent: u64,
    pub field: Field,
    /// The chosen primitive `exponent`-th root of unity in `F_ℓ`.
    pub root: u64,
    pub linear: LinearCharacters,
    /// Sorted by `(degree, values)`.
    pub nonlinear: Vec<Character>,
}

impl CharacterTable {
    pub fn field_char(&self) -> u64 {
        self.field.l
    }

    pub fn count(&self) -> usize {
        self.linear.logs.len() + self.nonlinear.len()
    }

    pub fn linear_count(&self) -> usize {
        self.linear.logs.len()
    }

    /// Characters are numbered linear first, then the others.
    pub fn degree(&self, i: usize) -> u64 {
        match i.checked_sub(self.linear_count()) {
            None => 1,
            Some(j) => self.nonlinear[j].degree,
        }
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.count()).map(|i| self.degree(i)).collect()
    }

    /// `χ_i(g_c)` in `F_ℓ`.
    pub fn value(&self, i: usize, class: usize) -> u64 {
        match i.checked_sub(self.linear_count()) {
            None => {
                let q = &self.linear.quotient;
                let log = q.eval_log(&self.linear.logs[i], self.linear.class_nf[class], self.exponent);
                self.field.pow(self.root, log)
            }
            Some(j) => self.nonlinear[j].values[class] as u64,
        }
    }

    pub fn row(&self, i: usize) -> Vec<u64> {
        (0..self.classes.count()).map(|c| self.value(i, c)).collect()
    }

    /// Number of irreducible characters of each degree.
    pub fn degree_census(&self) -> BTreeMap<u64, u64> {
        let mut census = BTreeMap::new();
        if self.linear_count() > 0 {
            census.insert(1, self.linear_count() as u64);
        }
        for chi in &self.nonlinear {
            *census.entry(chi.degree).or_insert(0) += 1;
        }
        census
    }

    /// Checks `Σ χ(1)² = |G|`, `#characters = #classes`, the row norms and,
    /// for at most 1000 classes, column orthogonality.
    pub fn validate(&self) -> Result<()> {
        let h = self.classes.count();
        let f = self.field;
        let sum_sq: u128 = self.degrees().iter().map(|&d| (d as u128).pow(2)).sum();
        if sum_sq != self.group_order as u128 {
            return Err(Error::Dixon(format!("Σ χ(1)² = {sum_sq} ≠ |G| = {}", self.group_order)));
        }
        if self.count() != h {
            return Err(Error::Dixon(format!("{} characters for {h} classes", self.count())));
        }
        let order = f.from_u64(self.group_order);
        let sizes: Vec<u64> = self.classes.sizes.iter().map(|&s| f.from_u64(s)).collect();
        let inverse = &self.classes.inverse;
        let check_linear_rows = (self.linear_count() as u128) * (h as u128) <= 100_000_000;
        let first = if check_linear_rows { 0 } else { self.linear_count() };
        for i in first..self.count() {
            let row = self.row(i);
            let norm = (0..h).fold(0, |acc, c| {
                f.add(acc, f.mul(sizes[c], f.mul(row[c], row[inverse[c] as usize])))
            });
            if norm != order {
                return Err(Error::Dixon(format!("character {i} does not have norm 1")));
            }
        }
        if h <= 1000 {
            let rows: Vec<Vec<u64>> = (0..self.count()).map(|i| self.row(i)).collect();
            for a in 0..h {
                let centralizer = f.mul(order, f.inv(sizes[a]));
                for b in 0..h {
                    let b_inv = inverse[b] as usize;
                    let s = rows.iter().fold(0, |acc, r| f.add(acc, f.mul(r[a], r[b_inv])));
                    let expected = if a == b { centralizer } else { 0 };
                    if s != expected {
                        return Err(Error::Dixon(format!("columns {a} and {b} are not orthogonal")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `Z`-orbits on the classes.
struct CentralAction {
    /// Central elements in increasing order; the identity is first.
    center: Vec<u32>,
    orbit_of_class: Vec<u32>,
    /// Representative class of each orbit (its smallest class).
    orbit_rep: Vec<u32>,
    /// For each class `c` in orbit `O`, the position of the first `z` with
    /// `z·rep(O) = c`.
    shift_of_class: Vec<u32>,
    /// Stabilizer of each orbit's representative, as positions in `center`.
    stabilizer: Vec<Vec<u32>>,
}

impl CentralAction {
    fn compute<G: FiniteGroup + ?Sized>(g: &G, classes: &ConjugacyClasses) -> Self {
        let center = classes.central_elements();
        let h = classes.count();
        let mut orbit_of_class = vec![u32::MAX; h];
        let mut shift_of_class = vec![0u32; h];
        let mut orbit_rep = Vec::new();
        let mut stabilizer = Vec::new();
        for c in 0..h {
            if orbit_of_class[c] != u32::MAX {
                continue;
            }
            let o = orbit_rep.len() as u32;
            orbit_rep.push(c as u32);
            let mut stab = Vec::new();
            for (zi, &z) in center.iter().enumerate() {
                let target = classes.class_of(g.mul(z, classes.reps[c]));
                if target == c {
                    stab.push(zi as u32);
                }
                if orbit_of_class[target] == u32::MAX {
                    orbit_of_class[target] = o;
                    shift_of_class[target] = zi as u32;
                }
            }
            stabilizer.push(stab);
        }
        CentralAction {
            center,
            orbit_of_class,
            orbit_rep,
            shift_of_class,
            stabilizer,
        }
    }
}

struct Context<'a, G: ?Sized> {
    g: &'a G,
    classes: &'a ConjugacyClasses,
    action: &'a CentralAction,
    f: Field,
    group_order: u64,
    divisors: Vec<u64>,
}

impl<G: FiniteGroup + ?Sized> Context<'_, G> {
    /// Splits the block of central character `psi` (values of `ψ` on the
    /// center, as field elements) and returns its characters of degree > 1.
    fn split_block(&self, psi: &[u64], orbits: &[usize]) -> Result<(Vec<Character>, usize)> {
        let f = self.f;
        let classes = self.classes;
        let action = self.action;
        let dim = orbits.len();
        let mut coord = vec![usize::MAX; action.orbit_rep.len()];
        for (i, &o) in orbits.iter().enumerate() {
            coord[o] = i;
        }
        let alpha = |c: usize| psi[action.shift_of_class[c] as usize];

        let mut candidates: Vec<usize> = (0..classes.count()).filter(|&c| classes.sizes[c] > 1).collect();
        candidates.sort_by_key(|&c| (classes.sizes[c], c));

        let mut pending: Vec<(Vec<Vec<u64>>, Vec<usize>)> = Vec::new();
        let mut done: Vec<Vec<u64>> = Vec::new();
        if dim == 1 {
            done.push(vec![1]);
        } else {
            let identity: Vec<Vec<u64>> = (0..dim)
                .map(|i| (0..dim).map(|j| u64::from(i == j)).collect())
                .collect();
            pending.push((identity, (0..dim).collect()));
        }
        for &j in &candidates {
            if pending.is_empty() {
                break;
            }
            // R_j[O'][O] = (|C_{O'}| / |C_O|) Σ_{x ∈ C_j} α(class(x g_{O'}))
            let mut r = vec![vec![0u64; dim]; dim];
            for (row, &o_row) in orbits.iter().enumerate() {
                let rep_class = action.orbit_rep[o_row] as usize;
                let g_rep = classes.reps[rep_class];
                for &x in classes.members(j) {
                    let l = classes.class_of(self.g.mul(x, g_rep));
                    let col = coord[action.orbit_of_class[l] as usize];
                    if col != usize::MAX {
                        r[row][col] = f.add(r[row][col], alpha(l));
                    }
                }
                for (col, &o_col) in orbits.iter().enumerate() {
                    let size_col = classes.sizes[action.orbit_rep[o_col] as usize];
                    let scale = f.mul(f.from_u64(classes.sizes[rep_class]), f.inv(f.from_u64(size_col)));
                    r[row][col] = f.mul(r[row][col], scale);
                }
            }
            let mut next = Vec::new();
            for (basis, pivots) in pending {
                let k = basis.len();
                let images: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|b| {
                        (0..dim)
                            .map(|row| r[row].iter().zip(b).fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y))))
                            .collect()
                    })
                    .collect();
                // restricted[p][i] = coordinate p of R b_i
                let restricted: Vec<Vec<u64>> = pivots
                    .iter()
                    .map(|&pc| images.iter().map(|img| img[pc]).collect())
                    .collect();
                let d0 = restricted[0][0];
                let scalar = (0..k).all(|a| (0..k).all(|b| restricted[a][b] == if a == b { d0 } else { 0 }));
                if scalar {
                    next.push((basis, pivots));
                    continue;
                }
                let roots = f.roots(&f.charpoly(&restricted));
                let mut total = 0;
                for lambda in roots {
                    let shifted: Vec<Vec<u64>> = (0..k)
                        .map(|a| (0..k).map(|b| if a == b { f.sub(restricted[a][b], lambda) } else { restricted[a][b] }).collect())
                        .collect();
                    let mut vectors: Vec<Vec<u64>> = f
                        .nullspace(&shifted)
                        .iter()
                        .map(|c| {
                            (0..dim)
                                .map(|col| basis.iter().zip(c).fold(0, |acc, (b, &ci)| f.add(acc, f.mul(b[col], ci))))
                                .collect()
                        })
                        .collect();
                    total += vectors.len();
                    if vectors.len() == 1 {
                        done.push(vectors.pop().unwrap());
                    } else if !vectors.is_empty() {
                        let piv = f.rref(&mut vectors);
                        next.push((vectors, piv));
                    }
                }
                if total != k {
                    return Err(Error::Dixon(format!(
                        "class {j} is not diagonalizable on a {k}-dimensional eigenspace"
                    )));
                }
            }
            pending = next;
        }
        if !pending.is_empty() {
            return Err(Error::Dixon("classes do not separate the characters".into()));
        }
        let identity_coord = coord[action.orbit_of_class[0] as usize];
        let mut out = Vec::new();
        let mut linear = 0;
        for y in done {
            let chi = self.recover(&y, identity_coord, &coord, &alpha)?;
            if chi.degree == 1 {
                linear += 1;
            } else {
                out.push(chi);
            }
        }
        Ok((out, linear))
    }

    /// Character values from an eigenvector given by its orbit coordinates.
    fn recover(
        &self,
        y: &[u64],
        identity_coord: usize,
        coord: &[usize],
        alpha: &dyn Fn(usize) -> u64,
    ) -> Result<Character> {
        let f = self.f;
        let classes = self.classes;
        let h = classes.count();
        let scale = f.inv(y[identity_coord]);
        let w: Vec<u64> = (0..h)
            .map(|c| {
                let i = coord[self.action.orbit_of_class[c] as usize];
                if i == usize::MAX {
                    0
                } else {
                    f.mul(f.mul(y[i], scale), alpha(c))
                }
            })
            .collect();
        // u_c = χ(g_c)/χ(1) = w_c/|C_c|
        let u: Vec<u64> = (0..h)
            .map(|c| f.mul(w[c], f.inv(f.from_u64(classes.sizes[c]))))
            .collect();
        let s = (0..h).fold(0, |acc, c| {
            let t = f.mul(f.from_u64(classes.sizes[c]), f.mul(u[c], u[classes.inverse[c] as usize]));
            f.add(acc, t)
        });
        if s == 0 {
            return Err(Error::Dixon("degenerate eigenvector".into()));
        }
        let deg_sq = f.mul(f.from_u64(self.group_order), f.inv(s));
        let degree = *self
            .divisors
            .iter()
            .find(|&&d| f.mul(f.from_u64(d), f.from_u64(d)) == deg_sq)
            .ok_or_else(|| Error::Dixon("no admissible degree".into()))?;
        let values = u.iter().map(|&x| f.mul(f.from_u64(degree), x) as u32).collect();
        Ok(Character { degree, values })
    }
}

/// The complete character table of `g`.
pub fn character_table<G: FiniteGroup + ?Sized>(g: &G, limits: &OracleLimits) -> Result<CharacterTable> {
    let n = g.order();
    if n > limits.max_order {
        return Err(Error::TooLarge {
            size: n as u128,
            limit: limits.max_order as u128,
        });
    }
    let classes = ConjugacyClasses::compute(g);
    let h = classes.count();
    if h > limits.max_classes {
        return Err(Error::ClassCountTooLarge {
            classes: h,
            limit: limits.max_classes,
        });
    }
    let exponent = classes.reps.iter().fold(1u64, |e, &r| arith::lcm(e, g.element_order(r)));
    let l = field::dixon_prime(exponent, arith::isqrt(4 * n as u64))
        .ok_or(Error::NoSuitableFieldChar(exponent))?;
    let f = Field::new(l);
    let root = f.root_of_unity(exponent);

    let linear = linear_characters(g, &classes, exponent);
    let action = CentralAction::compute(g, &classes);

    // Central characters and the number of linear characters above each.
    let zn = action.center.len();
    let z_pos: HashMap<u32, usize> = action.center.iter().enumerate().map(|(i, &z)| (z, i)).collect();
    let (zgroup, z_nf) = abelian::presentation(zn, 0, &(0..zn).collect::<Vec<_>>(), |a, b| {
        z_pos[&g.mul(action.center[a], action.center[b])]
    });
    let psis = zgroup.characters(exponent);
    let psi_logs: Vec<Vec<u64>> = psis
        .iter()
        .map(|psi| z_nf.iter().map(|&x| zgroup.eval_log(psi, x, exponent)).collect())
        .collect();
    let psi_index: HashMap<&Vec<u64>, usize> = psi_logs.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let center_class_nf: Vec<u64> = action
        .center
        .iter()
        .map(|&z| linear.class_nf[classes.class_of(z)])
        .collect();
    let mut linear_above = vec![0usize; psis.len()];
    for lam in &linear.logs {
        let restriction: Vec<u64> = center_class_nf
            .iter()
            .map(|&x| linear.quotient.eval_log(lam, x, exponent))
            .collect();
        linear_above[psi_index[&restriction]] += 1;
    }

    let ctx = Context {
        g,
        classes: &classes,
        action: &action,
        f,
        group_order: n as u64,
        divisors: (1..=arith::isqrt(n as u64)).filter(|d| n as u64 % d == 0).collect(),
    };
    let mut nonlinear = Vec::new();
    for (pi, logs) in psi_logs.iter().enumerate() {
        let psi: Vec<u64> = logs.iter().map(|&x| f.pow(root, x)).collect();
        let orbits: Vec<usize> = (0..action.orbit_rep.len())
            .filter(|&o| action.stabilizer[o].iter().all(|&z| psi[z as usize] == 1))
            .collect();
        if orbits.len() == linear_above[pi] {
            continue;
        }
        let (found, linear_found) = ctx.split_block(&psi, &orbits)?;
        if linear_found != linear_above[pi] {
            return Err(Error::Dixon(format!(
                "block {pi}: {linear_found} linear characters, expected {}",
                linear_above[pi]
            )));
        }
        nonlinear.extend(found);
    }
    nonlinear.sort_by(|a, b| (a.degree, &a.values).cmp(&(b.degree, &b.values)));
    let table = CharacterTable {
        group_order: n as u64,
        classes,
        exponent,
        field: f,
        root,
        linear,
        nonlinear,
    };
    table.validate()?;
    Ok(table)
}

fn linear_characters<G: FiniteGroup + ?Sized>(g: &G, classes: &ConjugacyClasses, exponent: u64) -> LinearCharacters {
    let n = g.order();
    let derived = group::derived_subgroup(g);
    let mut coset_of = vec![u32::MAX; n];
    let mut coset_rep = Vec::new();
    for x in 0..n as u32 {
        if coset_of[x as usize] != u32::MAX {
            continue;
        }
        let c = coset_rep.len() as u32;
        coset_rep.push(x);
        for &d in &derived {
            coset_of[g.mul(x, d) as usize] = c;
        }
    }
    let gens: Vec<usize> = g.generators().iter().map(|&x| coset_of[x as usize] as usize).collect();
    let (quotient, nf) = abelian::presentation(coset_rep.len(), 0, &gens, |a, b| {
        coset_of[g.mul(coset_rep[a], coset_rep[b]) as usize] as usize
    });
    let class_nf = classes
        .reps
        .iter()
        .map(|&r| nf[coset_of[r as usize] as usize])
        .collect();
    let mut logs = quotient.characters(exponent);
    logs.sort();
    LinearCharacters {
        quotient,
        class_nf,
        logs,
    }
}
