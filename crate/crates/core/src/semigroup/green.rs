use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::FiniteSemigroup;

/// Green's relations as class labels. Class ids are assigned in order
/// of the least element of each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenData {
    pub l_class: Vec<usize>,
    pub r_class: Vec<usize>,
    pub h_class: Vec<usize>,
    pub d_class: Vec<usize>,
    pub idempotents: Vec<usize>,
    pub inverses: Vec<Vec<usize>>,
}

fn label_by_key<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> Vec<usize> {
    let mut seen: HashMap<K, usize> = HashMap::new();
    keys.map(|k| {
        let next = seen.len();
        *seen.entry(k).or_insert(next)
    })
    .collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl GreenData {
    pub fn compute(s: &FiniteSemigroup) -> GreenData {
        let n = s.order();
        let left_ideal = |a: usize| {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(a);
            for x in 0..n {
                b.insert(s.mul(x, a));
            }
            b
        };
        let right_ideal = |a: usize| {
            let mut b = FixedBitSet::with_capacity(n);
            b.insert(a);
            for x in 0..n {
                b.insert(s.mul(a, x));
            }
            b
        };
        let l_class = label_by_key((0..n).map(left_ideal));
        let r_class = label_by_key((0..n).map(right_ideal));
        let h_class = label_by_key((0..n).map(|a| (l_class[a], r_class[a])));

        // D is the join of L and R
        let mut parent: Vec<usize> = (0..n).collect();
        let mut first_l: HashMap<usize, usize> = HashMap::new();
        let mut first_r: HashMap<usize, usize> = HashMap::new();
        for a in 0..n {
            for rep in [*first_l.entry(l_class[a]).or_insert(a), *first_r.entry(r_class[a]).or_insert(a)] {
                let (x, y) = (find(&mut parent, a), find(&mut parent, rep));
                if x != y {
                    parent[x.max(y)] = x.min(y);
                }
            }
        }
        let d_class = label_by_key((0..n).map(|a| find(&mut parent, a)));
        let idempotents = s.idempotents();
        let inverses = (0..n).map(|x| s.inverses_of(x).expect("in range")).collect();
        GreenData { l_class, r_class, h_class, d_class, idempotents, inverses }
    }

    pub fn l_related(&self, a: usize, b: usize) -> bool {
        self.l_class[a] == self.l_class[b]
    }

    pub fn r_related(&self, a: usize, b: usize) -> bool {
        self.r_class[a] == self.r_class[b]
    }

    pub fn h_related(&self, a: usize, b: usize) -> bool {
        self.h_class[a] == self.h_class[b]
    }

    pub fn d_related(&self, a: usize, b: usize) -> bool {
        self.d_class[a] == self.d_class[b]
    }

    fn members(labels: &[usize]) -> Vec<Vec<usize>> {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (x, &c) in labels.iter().enumerate() {
            out[c].push(x);
        }
        out
    }

    pub fn l_classes(&self) -> Vec<Vec<usize>> {
        Self::members(&self.l_class)
    }

    pub fn r_classes(&self) -> Vec<Vec<usize>> {
        Self::members(&self.r_class)
    }

    pub fn h_classes(&self) -> Vec<Vec<usize>> {
        Self::members(&self.h_class)
    }

    pub fn d_classes(&self) -> Vec<Vec<usize>> {
        Self::members(&self.d_class)
    }

    pub fn is_regular(&self) -> bool {
        self.inverses.iter().all(|v| !v.is_empty())
    }

    /// Idempotents in the L-class of `x`.
    pub fn idempotents_in_l(&self, x: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&e| self.l_related(e, x)).collect()
    }

    /// Idempotents in the R-class of `x`.
    pub fn idempotents_in_r(&self, x: usize) -> Vec<usize> {
        self.idempotents.iter().copied().filter(|&e| self.r_related(e, x)).collect()
    }
}
