//! Biordered sets: the idempotents of a regular semigroup with the two
//! quasi-orders and the partial product they determine.
//!
//! Elements are local indices `0..len()`; `element(i)` gives the
//! underlying semigroup element (or an opaque tag for biordered sets
//! built from other data).

use itertools::iproduct;
use thiserror::Error;

use crate::relation::Relation;
use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BiorderError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("{0} is not a quasi-order")]
    NotQuasiOrder(&'static str),
    #[error("no product given for ({0}, {1}) in the domain")]
    MissingProduct(usize, usize),
    #[error("element {0} is not in the biordered set")]
    NoSuchElement(usize),
}

#[derive(Clone, Debug)]
pub struct BiorderedSet {
    elements: Vec<usize>,
    labels: Vec<String>,
    omega_l: Relation,
    omega_r: Relation,
    products: Vec<Option<usize>>,
}

/// `[[e, f], [g, h]]` with `e R f L h R g L e`, stored row-major.
pub type ESquare = [usize; 4];

impl BiorderedSet {
    /// Assembles a biordered set from its quasi-orders and a product
    /// defined at least on the domain `D_E`.
    pub fn from_parts(
        elements: Vec<usize>,
        labels: Vec<String>,
        omega_l: Relation,
        omega_r: Relation,
        mut product: impl FnMut(usize, usize) -> Option<usize>,
    ) -> Result<Self, BiorderError> {
        let n = elements.len();
        if !omega_l.is_preorder() {
            return Err(BiorderError::NotQuasiOrder("omega_l"));
        }
        if !omega_r.is_preorder() {
            return Err(BiorderError::NotQuasiOrder("omega_r"));
        }
        let mut products = vec![None; n * n];
        for (e, f) in iproduct!(0..n, 0..n) {
            let in_domain =
                omega_l.contains(e, f) || omega_r.contains(e, f) || omega_l.contains(f, e) || omega_r.contains(f, e);
            if in_domain {
                match product(e, f) {
                    Some(p) if p < n => products[e * n + f] = Some(p),
                    _ => return Err(BiorderError::MissingProduct(e, f)),
                }
            }
        }
        Ok(BiorderedSet { elements, labels, omega_l, omega_r, products })
    }

    /// The biordered set of idempotents of a regular semigroup.
    pub fn from_semigroup(s: &FiniteSemigroup) -> Result<Self, BiorderError> {
        s.require_regular()?;
        let elements = s.idempotents();
        let n = elements.len();
        let mut local = vec![usize::MAX; s.order()];
        for (i, &e) in elements.iter().enumerate() {
            local[e] = i;
        }
        let omega_l = Relation::from_fn(n, |a, b| s.mul(elements[a], elements[b]) == elements[a]);
        let omega_r = Relation::from_fn(n, |a, b| s.mul(elements[b], elements[a]) == elements[a]);
        let labels = elements.iter().map(|&e| s.label(e).to_string()).collect();
        let els = elements.clone();
        Self::from_parts(elements, labels, omega_l, omega_r, |a, b| {
            let p = local[s.mul(els[a], els[b])];
            (p != usize::MAX).then_some(p)
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, i: usize) -> usize {
        self.elements[i]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn local(&self, x: usize) -> Option<usize> {
        self.elements.iter().position(|&e| e == x)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn omega_l_relation(&self) -> &Relation {
        &self.omega_l
    }

    pub fn omega_r_relation(&self) -> &Relation {
        &self.omega_r
    }

    pub fn omega_l(&self, e: usize, f: usize) -> bool {
        self.omega_l.contains(e, f)
    }

    pub fn omega_r(&self, e: usize, f: usize) -> bool {
        self.omega_r.contains(e, f)
    }

    /// Natural partial order.
    pub fn omega(&self, e: usize, f: usize) -> bool {
        self.omega_l(e, f) && self.omega_r(e, f)
    }

    pub fn l_related(&self, e: usize, f: usize) -> bool {
        self.omega_l(e, f) && self.omega_l(f, e)
    }

    pub fn r_related(&self, e: usize, f: usize) -> bool {
        self.omega_r(e, f) && self.omega_r(f, e)
    }

    pub fn in_domain(&self, e: usize, f: usize) -> bool {
        self.products[e * self.len() + f].is_some()
    }

    pub fn product(&self, e: usize, f: usize) -> Option<usize> {
        self.products[e * self.len() + f]
    }

    /// Product of a pair known to be in the domain.
    pub fn mul(&self, e: usize, f: usize) -> usize {
        self.product(e, f).unwrap_or_else(|| panic!("({e}, {f}) outside the domain"))
    }

    pub fn below_l(&self, e: usize) -> Vec<usize> {
        self.omega_l.preimage(e).collect()
    }

    pub fn below_r(&self, e: usize) -> Vec<usize> {
        self.omega_r.preimage(e).collect()
    }

    pub fn below(&self, e: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.omega(g, e)).collect()
    }

    /// M(e,f) = omega_l(e) ∩ omega_r(f).
    pub fn m_set(&self, e: usize, f: usize) -> Vec<usize> {
        (0..self.len()).filter(|&g| self.omega_l(g, e) && self.omega_r(g, f)).collect()
    }

    /// The quasi-order on M(e,f) used to pick sandwich elements.
    pub fn sandwich_preceq(&self, e: usize, f: usize, g: usize, h: usize) -> bool {
        self.omega_r(self.mul(e, g), self.mul(e, h)) && self.omega_l(self.mul(g, f), self.mul(h, f))
    }

    pub fn sandwich_set(&self, e: usize, f: usize) -> Vec<usize> {
        let m = self.m_set(e, f);
        m.iter().copied().filter(|&h| m.iter().all(|&g| self.sandwich_preceq(e, f, g, h))).collect()
    }

    pub fn e_squares(&self) -> Vec<ESquare> {
        let n = self.len();
        let mut out = Vec::new();
        for e in 0..n {
            for f in (0..n).filter(|&f| self.r_related(e, f)) {
                for g in (0..n).filter(|&g| self.l_related(e, g)) {
                    for h in (0..n).filter(|&h| self.r_related(g, h) && self.l_related(f, h)) {
                        out.push([e, f, g, h]);
                    }
                }
            }
        }
        out
    }

    /// Some `k` making the square `[[g, h], [kg, kh]]` with `g, h` below `k` in omega_l.
    pub fn row_singular_witness(&self, sq: &ESquare) -> Option<usize> {
        let [g, h, a, b] = *sq;
        if !self.r_related(g, h) {
            return None;
        }
        (0..self.len()).find(|&k| {
            self.omega_l(g, k) && self.omega_l(h, k) && self.mul(k, g) == a && self.mul(k, h) == b
        })
    }

    /// Some `k` making the square `[[g, gk], [h, hk]]` with `g, h` below `k` in omega_r.
    pub fn column_singular_witness(&self, sq: &ESquare) -> Option<usize> {
        let [g, a, h, b] = *sq;
        if !self.l_related(g, h) {
            return None;
        }
        (0..self.len()).find(|&k| {
            self.omega_r(g, k) && self.omega_r(h, k) && self.mul(g, k) == a && self.mul(h, k) == b
        })
    }

    pub fn singular_squares(&self) -> Vec<ESquare> {
        self.e_squares()
            .into_iter()
            .filter(|sq| self.row_singular_witness(sq).is_some() || self.column_singular_witness(sq).is_some())
            .collect()
    }

    /// The left-right dual: swaps the quasi-orders and reverses products.
    pub fn opposite(&self) -> BiorderedSet {
        let n = self.len();
        let products = (0..n * n).map(|i| self.products[(i % n) * n + i / n]).collect();
        BiorderedSet {
            elements: self.elements.clone(),
            labels: self.labels.clone(),
            omega_l: self.omega_r.clone(),
            omega_r: self.omega_l.clone(),
            products,
        }
    }

    pub fn domain_size(&self) -> usize {
        self.products.iter().filter(|p| p.is_some()).count()
    }
}

/// Checks that `theta` is a bijection such that it and its inverse
/// preserve the domain and the partial products.
pub fn is_biorder_isomorphism(a: &BiorderedSet, b: &BiorderedSet, theta: &[usize]) -> bool {
    let n = a.len();
    if b.len() != n || theta.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &t in theta {
        if t >= n || std::mem::replace(&mut hit[t], true) {
            return false;
        }
    }
    (0..n).all(|e| {
        (0..n).all(|f| {
            a.in_domain(e, f) == b.in_domain(theta[e], theta[f])
                && a.product(e, f).map(|p| theta[p]) == b.product(theta[e], theta[f])
        })
    })
}

/// Backtracking search for a biorder isomorphism `a -> b`.
pub fn biorder_isomorphic(a: &BiorderedSet, b: &BiorderedSet) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n || a.domain_size() != b.domain_size() {
        return None;
    }
    let profile = |x: &BiorderedSet, e: usize| {
        let m = x.len();
        (
            (0..m).filter(|&f| x.omega_l(f, e)).count(),
            (0..m).filter(|&f| x.omega_r(f, e)).count(),
            (0..m).filter(|&f| x.omega_l(e, f)).count(),
            (0..m).filter(|&f| x.omega_r(e, f)).count(),
        )
    };
    let pa: Vec<_> = (0..n).map(|e| profile(a, e)).collect();
    let pb: Vec<_> = (0..n).map(|e| profile(b, e)).collect();

    fn extend(
        a: &BiorderedSet,
        b: &BiorderedSet,
        pa: &[(usize, usize, usize, usize)],
        pb: &[(usize, usize, usize, usize)],
        theta: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = theta.len();
        if k == a.len() {
            return is_biorder_isomorphism(a, b, theta);
        }
        for t in 0..b.len() {
            if used[t] || pa[k] != pb[t] {
                continue;
            }
            let consistent = (0..k).all(|i| {
                a.in_domain(i, k) == b.in_domain(theta[i], t) && a.in_domain(k, i) == b.in_domain(t, theta[i])
            });
            if !consistent {
                continue;
            }
            theta.push(t);
            used[t] = true;
            if extend(a, b, pa, pb, theta, used) {
                return true;
            }
            used[t] = false;
            theta.pop();
        }
        false
    }
    let mut theta = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(a, b, &pa, &pb, &mut theta, &mut used).then_some(theta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn rectangular_band_orders() {
        let e = BiorderedSet::from_semigroup(&corpus::rb22()).unwrap();
        // omega_l(e) is the column of e, omega_r(e) its row
        assert_eq!(e.below_l(0), vec![0, 2]);
        assert_eq!(e.below_r(0), vec![0, 1]);
        assert_eq!(e.below(0), vec![0]);
        assert_eq!(e.m_set(0, 3), vec![2]);
        assert_eq!(e.sandwich_set(0, 3), vec![2]);
    }

    #[test]
    fn brandt_orders() {
        let e = BiorderedSet::from_semigroup(&corpus::b2()).unwrap();
        // local indices: 0 -> zero, 1 -> e, 2 -> f
        assert!(e.omega(0, 1) && e.omega(0, 2));
        assert!(!e.omega_l(1, 2) && !e.omega_r(1, 2) && !e.omega_l(2, 1));
        assert_eq!(e.sandwich_set(2, 1), vec![0]);
        assert!(e.e_squares().iter().all(|sq| sq.iter().collect::<std::collections::HashSet<_>>().len() < 4));
    }

    #[test]
    fn rectangular_band_square_is_not_singular() {
        let e = BiorderedSet::from_semigroup(&corpus::rb22()).unwrap();
        let sq = [0, 1, 2, 3];
        assert!(e.e_squares().contains(&sq));
        assert_eq!(e.row_singular_witness(&sq), None);
        assert_eq!(e.column_singular_witness(&sq), None);
        // degenerate squares such as [[g, g], [e, e]] are row-singular
        assert_eq!(e.row_singular_witness(&[2, 2, 0, 0]), Some(0));
    }

    #[test]
    fn isomorphism_search() {
        let b = BiorderedSet::from_semigroup(&corpus::b2()).unwrap();
        assert_eq!(biorder_isomorphic(&b, &b), Some(vec![0, 1, 2]));
        let rb = BiorderedSet::from_semigroup(&corpus::rb22()).unwrap();
        let sl = BiorderedSet::from_semigroup(&corpus::sl2()).unwrap();
        assert!(biorder_isomorphic(&rb, &sl).is_none());
        // RB22 is self-dual as a biordered set only up to swapping rows and columns
        let theta = biorder_isomorphic(&rb, &rb.opposite()).unwrap();
        assert!(is_biorder_isomorphism(&rb, &rb.opposite(), &theta));
    }

    #[test]
    fn t2_is_not_self_dual() {
        let e = BiorderedSet::from_semigroup(&corpus::t2()).unwrap();
        assert!(biorder_isomorphic(&e, &e.opposite()).is_none());
    }
}
