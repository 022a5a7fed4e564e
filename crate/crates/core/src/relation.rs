//! Dense binary relations on `0..n`, backed by a bitset.

use fixedbitset::FixedBitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    bits: FixedBitSet,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: FixedBitSet::with_capacity(n * n) }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Relation::empty(n);
        for a in 0..n {
            for b in 0..n {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits.contains(a * self.n + b)
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits.insert(a * self.n + b);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits.set(a * self.n + b, false);
    }

    pub fn pair_count(&self) -> usize {
        self.bits.count_ones(..)
    }

    /// Elements `b` with `a ~ b`.
    pub fn image(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&b| self.contains(a, b))
    }

    /// Elements `a` with `a ~ b`.
    pub fn preimage(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&a| self.contains(a, b))
    }

    pub fn inverse(&self) -> Relation {
        Relation::from_fn(self.n, |a, b| self.contains(b, a))
    }

    pub fn union(&self, other: &Relation) -> Relation {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Relation { n: self.n, bits }
    }

    pub fn intersection(&self, other: &Relation) -> Relation {
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Relation { n: self.n, bits }
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|a| self.contains(a, a))
    }

    /// First `(a, b, c)` with `a~b`, `b~c` but not `a~c`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for a in 0..self.n {
            for b in self.image(a) {
                for c in self.image(b) {
                    if !self.contains(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// First `(a, b)` with `a != b`, `a~b` and `b~a`.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.n {
            for b in self.image(a) {
                if a != b && self.contains(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.transitivity_witness().is_none()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_preorder() && self.antisymmetry_witness().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_is_a_partial_order() {
        let r = Relation::from_fn(7, |a, b| (b + 1) % (a + 1) == 0);
        assert!(r.is_partial_order());
        assert_eq!(r.image(1).collect::<Vec<_>>(), vec![1, 3, 5]);
    }

    #[test]
    fn witnesses() {
        let mut r = Relation::from_fn(3, |a, b| a == b);
        r.insert(0, 1);
        r.insert(1, 2);
        assert_eq!(r.transitivity_witness(), Some((0, 1, 2)));
        r.insert(1, 0);
        assert_eq!(r.antisymmetry_witness(), Some((0, 1)));
    }
}
