//! Conjugacy classes by orbit enumeration under generator conjugation.

use serde::Serialize;

use super::group::FiniteGroup;

#[derive(Debug, Clone, Serialize)]
pub struct ConjugacyClasses {
    /// Class index of every element.
    #[serde(skip)]
    pub class_of: Vec<u32>,
    /// Smallest element of each class; classes are numbered in increasing
    /// order of representative, so the identity class is class 0.
    pub reps: Vec<u32>,
    pub sizes: Vec<u64>,
    /// Class of the inverses of the elements of each class.
    pub inverse: Vec<u32>,
    #[serde(skip)]
    offsets: Vec<usize>,
    #[serde(skip)]
    members: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn compute<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        let n = g.order();
        let gens = g.generators();
        let gen_invs: Vec<u32> = gens.iter().map(|&h| g.inv(h)).collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut offsets = vec![0usize];
        let mut members = Vec::with_capacity(n);
        for start in 0..n as u32 {
            if class_of[start as usize] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start);
            class_of[start as usize] = c;
            let first = members.len();
            members.push(start);
            let mut next = first;
            while next < members.len() {
                let x = members[next];
                next += 1;
                for (&h, &hi) in gens.iter().zip(&gen_invs) {
                    let y = g.mul(g.mul(h, x), hi);
                    if class_of[y as usize] == u32::MAX {
                        class_of[y as usize] = c;
                        members.push(y);
                    }
                }
            }
            members[first..].sort_unstable();
            offsets.push(members.len());
        }
        let sizes = offsets.windows(2).map(|w| (w[1] - w[0]) as u64).collect();
        let inverse = reps
            .iter()
            .map(|&r| class_of[g.inv(r) as usize])
            .collect();
        ConjugacyClasses {
            class_of,
            reps,
            sizes,
            inverse,
            offsets,
            members,
        }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Sorted elements of class `c`.
    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[self.offsets[c]..self.offsets[c + 1]]
    }

    pub fn class_of(&self, x: u32) -> usize {
        self.class_of[x as usize] as usize
    }

    /// Classes with a single element, which together form the center.
    pub fn central_elements(&self) -> Vec<u32> {
        (0..self.count())
            .filter(|&c| self.sizes[c] == 1)
            .map(|c| self.reps[c])
            .collect()
    }
}
