//! Finite abelian groups in polycyclic normal form and their characters.
//!
//! Generators are adjoined one at a time. If `g_j` has relative order `t_j`
//! over the subgroup built so far, every element is uniquely
//! `Π g_j^{s_j}` with `0 <= s_j < t_j`, and `g_j^{t_j}` is recorded in that
//! normal form. Characters are stored as discrete logarithms (mod the
//! exponent `e` of the ambient group) of their values on the retained
//! generators.

/// An abelian group presented by the polycyclic normal form above.
#[derive(Debug, Clone)]
pub struct AbelianGroup {
    /// Relative orders `t_j > 1` of the retained generators.
    pub orders: Vec<u64>,
    /// `relations[j]`: normal form of `g_j^{t_j}` (length `j`).
    pub relations: Vec<Vec<u64>>,
    strides: Vec<u64>,
    size: u64,
}

impl AbelianGroup {
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// Exponent vector of a normal-form index.
    pub fn decode(&self, idx: u64) -> Vec<u64> {
        self.orders
            .iter()
            .zip(&self.strides)
            .map(|(&t, &s)| idx / s % t)
            .collect()
    }

    pub fn encode(&self, v: &[u64]) -> u64 {
        v.iter().zip(&self.strides).map(|(x, s)| x * s).sum()
    }

    /// Product of two elements given by normal-form index.
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let mut v: Vec<u64> = self
            .decode(a)
            .iter()
            .zip(self.decode(b))
            .map(|(x, y)| x + y)
            .collect();
        for j in (0..v.len()).rev() {
            let carry = v[j] / self.orders[j];
            if carry > 0 {
                v[j] %= self.orders[j];
                for (i, r) in self.relations[j].iter().enumerate() {
                    v[i] += carry * r;
                }
            }
        }
        self.encode(&v)
    }

    /// Order of the subgroup generated by `elements` (normal-form indices).
    pub fn subgroup_order(&self, elements: impl IntoIterator<Item = u64>) -> u64 {
        let mut member = vec![false; self.size as usize];
        member[0] = true;
        let mut list = vec![0u64];
        for s in elements {
            if member[s as usize] {
                continue;
            }
            // <H, s> is the union of the cosets H + k s.
            let base = list.clone();
            let mut shift = s;
            while !member[shift as usize] {
                for &h in &base {
                    let y = self.add(h, shift);
                    member[y as usize] = true;
                    list.push(y);
                }
                shift = self.add(shift, s);
            }
        }
        list.len() as u64
    }

    /// All characters as log vectors mod `exponent`, starting with the trivial one.
    pub fn characters(&self, exponent: u64) -> Vec<Vec<u64>> {
        let mut chars: Vec<Vec<u64>> = vec![Vec::new()];
        for (j, &t) in self.orders.iter().enumerate() {
            assert_eq!(exponent % t, 0, "relative order must divide the exponent");
            let step = exponent / t;
            let mut next = Vec::with_capacity(chars.len() * t as usize);
            for chi in &chars {
                let rhs = self.relations[j]
                    .iter()
                    .zip(chi)
                    .map(|(r, c)| r * c % exponent)
                    .sum::<u64>()
                    % exponent;
                assert_eq!(rhs % t, 0, "character values must extend");
                for k in 0..t {
                    let mut ext = chi.clone();
                    ext.push((rhs / t + k * step) % exponent);
                    next.push(ext);
                }
            }
            chars = next;
        }
        chars
    }

    /// `χ(x)` as a log mod `exponent`.
    pub fn eval_log(&self, chi: &[u64], idx: u64, exponent: u64) -> u64 {
        self.decode(idx)
            .iter()
            .zip(chi)
            .map(|(s, c)| s * c % exponent)
            .sum::<u64>()
            % exponent
    }
}

/// Builds the normal form of an abelian group on the labels `0..size` with
/// identity label `identity` and product `mul`, generated by `gens`.
/// Returns the presentation and the normal-form index of every label.
pub fn presentation(
    size: usize,
    identity: usize,
    gens: &[usize],
    mul: impl Fn(usize, usize) -> usize,
) -> (AbelianGroup, Vec<u64>) {
    let mut nf: Vec<Option<u64>> = vec![None; size];
    nf[identity] = Some(0);
    let mut members = vec![identity];
    let mut group = AbelianGroup {
        orders: Vec::new(),
        relations: Vec::new(),
        strides: Vec::new(),
        size: 1,
    };
    for &g in gens {
        if nf[g].is_some() {
            continue;
        }
        let mut power = g;
        let mut t = 1u64;
        while nf[power].is_none() {
            power = mul(power, g);
            t += 1;
        }
        let relation = group.decode(nf[power].unwrap());
        let stride = group.size;
        let old = members.len();
        let mut gs = identity;
        for s in 1..t {
            gs = mul(gs, g);
            for idx in 0..old {
                let y = mul(members[idx], gs);
                nf[y] = Some(s * stride + idx as u64);
                members.push(y);
            }
        }
        group.orders.push(t);
        group.relations.push(relation);
        group.strides.push(stride);
        group.size *= t;
    }
    assert_eq!(group.size as usize, size, "generators do not generate the group");
    (group, nf.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    // Z/4 × Z/6 on labels a*6 + b.
    fn z4_z6() -> (AbelianGroup, Vec<u64>) {
        let mul = |x: usize, y: usize| ((x / 6 + y / 6) % 4) * 6 + (x % 6 + y % 6) % 6;
        // generators (1,1) and (0,1): relative orders 12 and 2
        presentation(24, 0, &[7, 1, 6], mul)
    }

    #[test]
    fn normal_form_and_products() {
        let (g, nf) = z4_z6();
        assert_eq!(g.size(), 24);
        assert_eq!(g.orders, vec![12, 2]);
        let mul = |x: usize, y: usize| ((x / 6 + y / 6) % 4) * 6 + (x % 6 + y % 6) % 6;
        for x in 0..24 {
            for y in 0..24 {
                assert_eq!(g.add(nf[x], nf[y]), nf[mul(x, y)]);
            }
        }
        assert_eq!(g.subgroup_order([nf[6]]), 4);
        assert_eq!(g.subgroup_order([nf[6], nf[2]]), 12);
        assert_eq!(g.subgroup_order([]), 1);
    }

    #[test]
    fn characters_are_distinct_homomorphisms() {
        let (g, nf) = z4_z6();
        let e = 12;
        let chars = g.characters(e);
        assert_eq!(chars.len(), 24);
        assert!(chars[0].iter().all(|&c| c == 0));
        assert_eq!(chars.iter().collect::<std::collections::HashSet<_>>().len(), 24);
        let mul = |x: usize, y: usize| ((x / 6 + y / 6) % 4) * 6 + (x % 6 + y % 6) % 6;
        for chi in &chars {
            for x in 0..24 {
                for y in 0..24 {
                    let lhs = g.eval_log(chi, nf[mul(x, y)], e);
                    let rhs = (g.eval_log(chi, nf[x], e) + g.eval_log(chi, nf[y], e)) % e;
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
