//! Finite semigroups given by a Cayley table.
//!
//! Elements are indices `0..n`. Products read left to right, so
//! `mul(a, b)` is `table[a][b]`. Transformation semigroups act on the
//! right: the product `f g` sends a point `p` to `g(f(p))`.

mod green;
mod iso;

pub use green::GreenData;
pub use iso::{find_isomorphism, is_isomorphism};

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("NotAssociative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("BadIndex: table[{row}][{col}] = {value} is outside 0..{order}")]
    BadIndex { row: usize, col: usize, value: usize, order: usize },
    #[error("BadIndex: table row {row} has {len} entries, expected {order}")]
    RaggedRow { row: usize, len: usize, order: usize },
    #[error("BadIndex: declared order {declared} but table has {rows} rows")]
    OrderMismatch { declared: usize, rows: usize },
    #[error("empty semigroup")]
    Empty,
    #[error("BadMap: generator {generator} sends point {point} to {value}, outside 0..{degree}")]
    BadMap { generator: usize, point: usize, value: usize, degree: usize },
    #[error("BadMap: generator {generator} has length {len}, expected degree {degree}")]
    BadMapLength { generator: usize, len: usize, degree: usize },
    #[error("element {0} is outside the semigroup")]
    NoSuchElement(usize),
    #[error("semigroup is not regular: element {0} has no inverse")]
    NotRegular(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSemigroup {
    name: String,
    table: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from its multiplication table, checking
    /// shape, range and associativity.
    pub fn from_cayley(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self, SemigroupError> {
        let n = table.len();
        if n == 0 {
            return Err(SemigroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::RaggedRow { row, len: r.len(), order: n });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(SemigroupError::BadIndex { row, col, value, order: n });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        Ok(FiniteSemigroup { name: name.into(), table, labels })
    }

    /// Closes a set of self-maps of `0..degree` under composition.
    ///
    /// Element order: generators first (duplicates dropped), then
    /// products in breadth-first discovery order.
    pub fn from_generators(degree: usize, generators: &[Vec<usize>], name: impl Into<String>) -> Result<Self, SemigroupError> {
        let (s, _) = Self::transformation_closure(degree, generators, name)?;
        Ok(s)
    }

    /// Like [`from_generators`](Self::from_generators), also returning
    /// the maps themselves in element order.
    pub fn transformation_closure(
        degree: usize,
        generators: &[Vec<usize>],
        name: impl Into<String>,
    ) -> Result<(Self, Vec<Vec<usize>>), SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        for (g, map) in generators.iter().enumerate() {
            if map.len() != degree {
                return Err(SemigroupError::BadMapLength { generator: g, len: map.len(), degree });
            }
            if let Some((point, &value)) = map.iter().enumerate().find(|(_, &v)| v >= degree) {
                return Err(SemigroupError::BadMap { generator: g, point, value, degree });
            }
        }
        let mut elems: Vec<Vec<usize>> = Vec::new();
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        for g in generators {
            if !index.contains_key(g) {
                index.insert(g.clone(), elems.len());
                elems.push(g.clone());
            }
        }
        let gens: Vec<usize> = generators.iter().map(|g| index[g]).collect();
        let mut queue: VecDeque<usize> = (0..elems.len()).collect();
        while let Some(i) = queue.pop_front() {
            for &g in &gens {
                let prod: Vec<usize> = elems[i].iter().map(|&p| elems[g][p]).collect();
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(prod);
                }
            }
        }
        let n = elems.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        let prod: Vec<usize> = elems[a].iter().map(|&p| elems[b][p]).collect();
                        index[&prod]
                    })
                    .collect()
            })
            .collect();
        let mut s = Self::from_cayley(table, name)?;
        s.labels = elems.iter().map(|m| format!("{m:?}")).collect();
        Ok((s, elems))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "one label per element");
        self.labels = labels;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// Left-to-right product of a nonempty word.
    pub fn product(&self, word: &[usize]) -> usize {
        let (&first, rest) = word.split_first().expect("nonempty word");
        rest.iter().fold(first, |acc, &x| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// The same set with the reversed product.
    pub fn opposite(&self) -> FiniteSemigroup {
        let n = self.order();
        let table = (0..n).map(|a| (0..n).map(|b| self.table[b][a]).collect()).collect();
        FiniteSemigroup { name: format!("{}^op", self.name), table, labels: self.labels.clone() }
    }

    /// Renames element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut table = vec![vec![0; n]; n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.table[a][b]];
            }
        }
        FiniteSemigroup { name: self.name.clone(), table, labels }
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&e| self.is_idempotent(e)).collect()
    }

    pub fn is_inverse_pair(&self, x: usize, y: usize) -> bool {
        self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y
    }

    /// V(x): all `y` with `xyx = x` and `yxy = y`.
    pub fn inverses_of(&self, x: usize) -> Result<Vec<usize>, SemigroupError> {
        if x >= self.order() {
            return Err(SemigroupError::NoSuchElement(x));
        }
        Ok(self.elements().filter(|&y| self.is_inverse_pair(x, y)).collect())
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|x| self.elements().any(|y| self.mul(self.mul(x, y), x) == x))
    }

    pub fn require_regular(&self) -> Result<(), SemigroupError> {
        match self.elements().find(|&x| !self.elements().any(|y| self.mul(self.mul(x, y), x) == x)) {
            Some(x) => Err(SemigroupError::NotRegular(x)),
            None => Ok(()),
        }
    }

    pub fn green(&self) -> GreenData {
        GreenData::compute(self)
    }

    /// `e S f` as a sorted set.
    pub fn sandwich_hom(&self, e: usize, f: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|s| self.mul(self.mul(e, s), f)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple_scan(t: &[Vec<usize>]) -> Option<(usize, usize, usize)> {
        let n = t.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t[t[a][b]][c] != t[a][t[b][c]] {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    #[test]
    fn rejects_non_associative_table() {
        let t = vec![vec![0, 1], vec![0, 0]];
        let (a, b, c) = triple_scan(&t).unwrap();
        assert_eq!(
            FiniteSemigroup::from_cayley(t, "x").unwrap_err(),
            SemigroupError::NotAssociative { a, b, c }
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            FiniteSemigroup::from_cayley(vec![vec![0, 1], vec![0]], "x"),
            Err(SemigroupError::RaggedRow { row: 1, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::from_cayley(vec![vec![0, 2], vec![0, 1]], "x"),
            Err(SemigroupError::BadIndex { row: 0, col: 1, value: 2, .. })
        ));
        assert_eq!(FiniteSemigroup::from_cayley(vec![], "x"), Err(SemigroupError::Empty));
    }

    #[test]
    fn rectangular_band_table() {
        let t: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| 2 * (a / 2) + b % 2).collect()).collect();
        assert_eq!(triple_scan(&t), None);
        let s = FiniteSemigroup::from_cayley(t, "rb").unwrap();
        assert_eq!(s.idempotents(), vec![0, 1, 2, 3]);
        assert_eq!(s.inverses_of(1).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn closure_of_full_transformations() {
        let s = FiniteSemigroup::from_generators(2, &[vec![1, 0], vec![0, 0]], "t2").unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.idempotents().len(), 3);
        let s3 = FiniteSemigroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 1]], "t3").unwrap();
        assert_eq!(s3.order(), 27);
    }

    #[test]
    fn right_action_convention() {
        let (s, maps) = FiniteSemigroup::transformation_closure(3, &[vec![1, 2, 0], vec![0, 0, 2]], "x").unwrap();
        for a in s.elements() {
            for b in s.elements() {
                let expected: Vec<usize> = (0..3).map(|p| maps[b][maps[a][p]]).collect();
                assert_eq!(maps[s.mul(a, b)], expected);
            }
        }
    }

    #[test]
    fn bad_maps() {
        assert!(matches!(
            FiniteSemigroup::from_generators(2, &[vec![0, 2]], "x"),
            Err(SemigroupError::BadMap { generator: 0, point: 1, value: 2, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::from_generators(2, &[vec![0]], "x"),
            Err(SemigroupError::BadMapLength { .. })
        ));
    }

    #[test]
    fn opposite_reverses() {
        let s = FiniteSemigroup::from_generators(3, &[vec![1, 2, 0], vec![0, 0, 2]], "x").unwrap();
        let op = s.opposite();
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(op.mul(a, b), s.mul(b, a));
            }
        }
    }

    #[test]
    fn non_regular_detected() {
        // null semigroup on two elements: x*y = 0
        let s = FiniteSemigroup::from_cayley(vec![vec![0, 0], vec![0, 0]], "null").unwrap();
        assert!(!s.is_regular());
        assert_eq!(s.require_regular(), Err(SemigroupError::NotRegular(1)));
    }
}
