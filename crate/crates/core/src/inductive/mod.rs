//! Ordered groupoids with an evaluation of E-chains, and the inductive
//! groupoid G(S) of a regular semigroup.
//!
//! Morphisms and objects are indices. Objects are the local indices of
//! the biordered set returned by [`OrderedGroupoid::biorder`].

mod axioms;
pub mod faults;
mod pseudo;

pub use axioms::{verify_inductive_axioms, verify_ordered_axioms};
pub use pseudo::{
    p_classes, p_related, pseudo_product, pseudo_product_invariance, pseudo_product_with, reconstruct_semigroup,
    verify_p_equivalence, PClasses,
};

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::biorder::{BiorderError, BiorderedSet};
use crate::echain::{self, EChain, EChainError};
use crate::relation::Relation;
use crate::semigroup::{FiniteSemigroup, SemigroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InductiveError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Biorder(#[from] BiorderError),
    #[error(transparent)]
    Chain(#[from] EChainError),
    #[error("NotComposable: codomain {cod} differs from domain {dom}")]
    NotComposable { cod: usize, dom: usize },
    #[error("NotBelow: {e} is not below {target} in the natural order")]
    NotBelow { e: usize, target: usize },
    #[error("no morphism ({x}, {x_prime}) in the groupoid")]
    NoSuchMorphism { x: usize, x_prime: usize },
}

pub trait OrderedGroupoid {
    fn biorder(&self) -> &BiorderedSet;
    fn morphism_count(&self) -> usize;
    fn dom(&self, m: usize) -> usize;
    fn cod(&self, m: usize) -> usize;
    fn identity(&self, e: usize) -> usize;
    fn inverse(&self, m: usize) -> usize;
    fn compose(&self, a: usize, b: usize) -> Option<usize>;
    fn leq(&self, a: usize, b: usize) -> bool;
    /// Image of a canonical E-chain under the evaluation functor.
    fn evaluate(&self, c: &EChain) -> usize;
    fn describe(&self, m: usize) -> String;

    /// Label for the p-class of `m` in reconstructed semigroups.
    fn class_label(&self, m: usize) -> String {
        self.describe(m)
    }

    fn below(&self, m: usize) -> Vec<usize> {
        (0..self.morphism_count()).filter(|&u| self.leq(u, m)).collect()
    }

    /// The unique `u <= m` with domain `e`, if there is exactly one.
    fn restrict(&self, m: usize, e: usize) -> Option<usize> {
        let mut found = (0..self.morphism_count()).filter(|&u| self.dom(u) == e && self.leq(u, m));
        let first = found.next()?;
        found.next().is_none().then_some(first)
    }

    /// The unique `u <= m` with codomain `f`, if there is exactly one.
    fn corestrict(&self, m: usize, f: usize) -> Option<usize> {
        let mut found = (0..self.morphism_count()).filter(|&u| self.cod(u) == f && self.leq(u, m));
        let first = found.next()?;
        found.next().is_none().then_some(first)
    }

    /// Evaluation of the two-vertex path `(a, b)`, or `None` if it is not an E-path.
    fn evaluate_pair(&self, a: usize, b: usize) -> Option<usize> {
        echain::canonicalize(self.biorder(), &[a, b]).ok().map(|c| self.evaluate(&c))
    }

    fn compose_all(&self, ms: &[usize]) -> Option<usize> {
        let (&first, rest) = ms.split_first()?;
        rest.iter().try_fold(first, |acc, &m| self.compose(acc, m))
    }
}

/// A morphism `(x, x')` of G(S), from `x x'` to `x' x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IGMorphism {
    pub x: usize,
    pub x_prime: usize,
}

#[derive(Clone, Debug)]
pub struct InductiveGroupoid {
    semigroup: FiniteSemigroup,
    biorder: BiorderedSet,
    local: Vec<Option<usize>>,
    morphisms: Vec<IGMorphism>,
    index: HashMap<IGMorphism, usize>,
    identities: Vec<usize>,
    order: Relation,
}

impl InductiveGroupoid {
    /// G(S): morphisms are the pairs `(x, x')` with `x'` an inverse of `x`,
    /// listed by `x` then `x'`.
    pub fn build(s: &FiniteSemigroup) -> Result<Self, InductiveError> {
        let biorder = BiorderedSet::from_semigroup(s)?;
        let mut local = vec![None; s.order()];
        for (i, &e) in biorder.elements().iter().enumerate() {
            local[e] = Some(i);
        }
        let mut morphisms = Vec::new();
        for x in s.elements() {
            for x_prime in s.inverses_of(x)? {
                morphisms.push(IGMorphism { x, x_prime });
            }
        }
        let index: HashMap<IGMorphism, usize> = morphisms.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let identities = biorder.elements().iter().map(|&e| index[&IGMorphism { x: e, x_prime: e }]).collect();
        let order = Relation::from_fn(morphisms.len(), |a, b| {
            let (m, n) = (morphisms[a], morphisms[b]);
            let e = s.mul(m.x, m.x_prime);
            let f = s.mul(n.x, n.x_prime);
            s.mul(e, f) == e && s.mul(f, e) == e && m.x == s.mul(e, n.x) && m.x_prime == s.mul(n.x_prime, e)
        });
        Ok(InductiveGroupoid { semigroup: s.clone(), biorder, local, morphisms, index, identities, order })
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn morphism(&self, m: usize) -> IGMorphism {
        self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[IGMorphism] {
        &self.morphisms
    }

    pub fn find(&self, x: usize, x_prime: usize) -> Option<usize> {
        self.index.get(&IGMorphism { x, x_prime }).copied()
    }

    /// Object (biorder index) of an idempotent of S.
    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.local.get(e).copied().flatten()
    }

    pub fn order(&self) -> &Relation {
        &self.order
    }

    /// `e ↿ (x, x') = (ex, x'e)` for `e` below `xx'`.
    pub fn restrict_formula(&self, m: usize, e: usize) -> Result<usize, InductiveError> {
        let target = self.dom(m);
        if !self.biorder.omega(e, target) {
            return Err(InductiveError::NotBelow { e, target });
        }
        let s = &self.semigroup;
        let (ee, IGMorphism { x, x_prime }) = (self.biorder.element(e), self.morphisms[m]);
        self.lookup(s.mul(ee, x), s.mul(x_prime, ee))
    }

    /// `(x, x') ⇂ f = (xf, fx')` for `f` below `x'x`.
    pub fn corestrict_formula(&self, m: usize, f: usize) -> Result<usize, InductiveError> {
        let target = self.cod(m);
        if !self.biorder.omega(f, target) {
            return Err(InductiveError::NotBelow { e: f, target });
        }
        let s = &self.semigroup;
        let (ff, IGMorphism { x, x_prime }) = (self.biorder.element(f), self.morphisms[m]);
        self.lookup(s.mul(x, ff), s.mul(ff, x_prime))
    }

    pub fn compose_checked(&self, a: usize, b: usize) -> Result<usize, InductiveError> {
        self.compose(a, b).ok_or(InductiveError::NotComposable { cod: self.cod(a), dom: self.dom(b) })
    }

    fn lookup(&self, x: usize, x_prime: usize) -> Result<usize, InductiveError> {
        self.find(x, x_prime).ok_or(InductiveError::NoSuchMorphism { x, x_prime })
    }
}

impl OrderedGroupoid for InductiveGroupoid {
    fn biorder(&self) -> &BiorderedSet {
        &self.biorder
    }

    fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    fn dom(&self, m: usize) -> usize {
        let IGMorphism { x, x_prime } = self.morphisms[m];
        self.local[self.semigroup.mul(x, x_prime)].expect("xx' is idempotent")
    }

    fn cod(&self, m: usize) -> usize {
        let IGMorphism { x, x_prime } = self.morphisms[m];
        self.local[self.semigroup.mul(x_prime, x)].expect("x'x is idempotent")
    }

    fn identity(&self, e: usize) -> usize {
        self.identities[e]
    }

    fn inverse(&self, m: usize) -> usize {
        let IGMorphism { x, x_prime } = self.morphisms[m];
        self.index[&IGMorphism { x: x_prime, x_prime: x }]
    }

    fn compose(&self, a: usize, b: usize) -> Option<usize> {
        if self.cod(a) != self.dom(b) {
            return None;
        }
        let (m, n) = (self.morphisms[a], self.morphisms[b]);
        let s = &self.semigroup;
        self.find(s.mul(m.x, n.x), s.mul(n.x_prime, m.x_prime))
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.order.contains(a, b)
    }

    fn evaluate(&self, c: &EChain) -> usize {
        let s = &self.semigroup;
        let els: Vec<usize> = c.vertices().iter().map(|&v| self.biorder.element(v)).collect();
        let w = s.product(&els);
        let rev: Vec<usize> = els.iter().rev().copied().collect();
        let w_prime = s.product(&rev);
        self.find(w, w_prime).expect("evaluation of an E-chain is a morphism")
    }

    fn describe(&self, m: usize) -> String {
        let IGMorphism { x, x_prime } = self.morphisms[m];
        format!("({},{})", self.semigroup.label(x), self.semigroup.label(x_prime))
    }

    fn class_label(&self, m: usize) -> String {
        self.semigroup.label(self.morphisms[m].x).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn morphism_counts() {
        for s in corpus::all() {
            let g = InductiveGroupoid::build(&s).unwrap();
            let expected: usize = s.elements().map(|x| s.inverses_of(x).unwrap().len()).sum();
            assert_eq!(g.morphism_count(), expected, "{}", s.name());
        }
        assert_eq!(InductiveGroupoid::build(&corpus::b2()).unwrap().morphism_count(), 5);
        assert_eq!(InductiveGroupoid::build(&corpus::rb22()).unwrap().morphism_count(), 16);
    }

    #[test]
    fn brandt_composition() {
        let g = InductiveGroupoid::build(&corpus::b2()).unwrap();
        let (e, a, a2) = (1, 3, 4);
        let m = g.find(a, a2).unwrap();
        let n = g.find(a2, a).unwrap();
        assert_eq!(g.compose(m, n), g.find(e, e));
        assert_eq!(g.compose(m, m), None);
        assert_eq!(g.inverse(m), n);
    }

    #[test]
    fn rectangular_band_evaluation_and_restriction() {
        let g = InductiveGroupoid::build(&corpus::rb22()).unwrap();
        let c = echain::canonicalize(g.biorder(), &[0, 1, 3]).unwrap();
        assert_eq!(g.morphism(g.evaluate(&c)), IGMorphism { x: 1, x_prime: 2 });
        let m = g.find(1, 2).unwrap();
        assert_eq!(g.restrict_formula(m, 0).unwrap(), m);
        assert!(matches!(g.restrict_formula(m, 3), Err(InductiveError::NotBelow { .. })));
    }

    #[test]
    fn formulas_agree_with_order() {
        for s in corpus::all() {
            let g = InductiveGroupoid::build(&s).unwrap();
            for m in 0..g.morphism_count() {
                for e in g.biorder().below(g.dom(m)) {
                    assert_eq!(g.restrict(m, e), Some(g.restrict_formula(m, e).unwrap()));
                }
                for f in g.biorder().below(g.cod(m)) {
                    assert_eq!(g.corestrict(m, f), Some(g.corestrict_formula(m, f).unwrap()));
                }
            }
        }
    }

    #[test]
    fn strict_restriction_in_t2() {
        let s = corpus::t2();
        let g = InductiveGroupoid::build(&s).unwrap();
        // identity map restricted to a constant idempotent
        let one = g.identity(g.object_of(0).unwrap());
        let c0 = s.elements().find(|&x| s.is_idempotent(x) && x != 0).unwrap();
        let r = g.restrict_formula(one, g.object_of(c0).unwrap()).unwrap();
        assert_eq!(g.morphism(r), IGMorphism { x: c0, x_prime: c0 });
        assert!(g.leq(r, one) && r != one);
    }
}
