//! Finite groups with elements numbered `0..order`.

/// A finite group whose elements are the indices `0..order()`.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> u32;
    fn mul(&self, a: u32, b: u32) -> u32;
    fn inv(&self, a: u32) -> u32;
    /// A generating set.
    fn generators(&self) -> Vec<u32>;

    fn conj(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inv(g))
    }

    fn commutator(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    fn element_order(&self, a: u32) -> u64 {
        let id = self.identity();
        let mut x = a;
        let mut n = 1;
        while x != id {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

/// Elements of the smallest normal subgroup containing `seeds`, in discovery order.
pub fn normal_closure<G: FiniteGroup + ?Sized>(g: &G, seeds: &[u32]) -> Vec<u32> {
    let gens = g.generators();
    let mut member = vec![false; g.order()];
    let id = g.identity();
    member[id as usize] = true;
    let mut elements = vec![id];
    let mut next = 0;
    while next < elements.len() {
        let x = elements[next];
        next += 1;
        let images = seeds
            .iter()
            .map(|&s| g.mul(x, s))
            .chain(gens.iter().map(|&h| g.conj(h, x)));
        for y in images.collect::<Vec<_>>() {
            if !std::mem::replace(&mut member[y as usize], true) {
                elements.push(y);
            }
        }
    }
    elements
}

/// The derived subgroup: the normal closure of the generator commutators.
pub fn derived_subgroup<G: FiniteGroup + ?Sized>(g: &G) -> Vec<u32> {
    let gens = g.generators();
    let seeds: Vec<u32> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| (a, b)))
        .map(|(a, b)| g.commutator(a, b))
        .collect();
    normal_closure(g, &seeds)
}
