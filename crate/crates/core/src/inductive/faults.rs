//! Deliberately broken wrappers around an ordered groupoid, used to
//! confirm that the verifiers report concrete violations.

use super::OrderedGroupoid;
use crate::biorder::BiorderedSet;
use crate::echain::EChain;

macro_rules! delegate_groupoid {
    () => {
        fn biorder(&self) -> &BiorderedSet {
            self.inner.biorder()
        }
        fn morphism_count(&self) -> usize {
            self.inner.morphism_count()
        }
        fn dom(&self, m: usize) -> usize {
            self.inner.dom(m)
        }
        fn cod(&self, m: usize) -> usize {
            self.inner.cod(m)
        }
        fn identity(&self, e: usize) -> usize {
            self.inner.identity(e)
        }
        fn inverse(&self, m: usize) -> usize {
            self.inner.inverse(m)
        }
        fn compose(&self, a: usize, b: usize) -> Option<usize> {
            self.inner.compose(a, b)
        }
        fn describe(&self, m: usize) -> String {
            self.inner.describe(m)
        }
    };
}

/// Forgets the single order pair `below <= above`.
pub struct DropOrderPair<'a, G: ?Sized> {
    pub inner: &'a G,
    pub below: usize,
    pub above: usize,
}

impl<G: OrderedGroupoid + ?Sized> OrderedGroupoid for DropOrderPair<'_, G> {
    delegate_groupoid!();

    fn leq(&self, a: usize, b: usize) -> bool {
        (a, b) != (self.below, self.above) && self.inner.leq(a, b)
    }

    fn evaluate(&self, c: &EChain) -> usize {
        self.inner.evaluate(c)
    }
}

/// Sends one chain to a chosen morphism instead of its evaluation.
pub struct OverrideEvaluation<'a, G: ?Sized> {
    pub inner: &'a G,
    pub chain: EChain,
    pub image: usize,
}

impl<G: OrderedGroupoid + ?Sized> OrderedGroupoid for OverrideEvaluation<'_, G> {
    delegate_groupoid!();

    fn leq(&self, a: usize, b: usize) -> bool {
        self.inner.leq(a, b)
    }

    fn evaluate(&self, c: &EChain) -> usize {
        if *c == self.chain {
            self.image
        } else {
            self.inner.evaluate(c)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::echain;
    use crate::inductive::{verify_inductive_axioms, verify_ordered_axioms, InductiveGroupoid};

    #[test]
    fn missing_restriction_breaks_og3() {
        let s = corpus::b2();
        let g = InductiveGroupoid::build(&s).unwrap();
        let (zero, a, a2) = (0, 3, 4);
        let m = g.find(a, a2).unwrap();
        let r = g.restrict_formula(m, g.object_of(zero).unwrap()).unwrap();
        let bad = DropOrderPair { inner: &g, below: r, above: m };
        let report = verify_ordered_axioms(&bad);
        assert!(report.failed("OG3"), "{report}");
        assert!(report.get("OG3").unwrap().witness.is_some());
    }

    #[test]
    fn wrong_square_edge_breaks_ig2() {
        let s = corpus::t3();
        let g = InductiveGroupoid::build(&s).unwrap();
        let e = g.biorder();
        let [a, b, _, _] = e.singular_squares().into_iter().find(|sq| sq[0] != sq[1]).unwrap();
        let chain = echain::canonicalize(e, &[a, b]).unwrap();
        let bad = OverrideEvaluation { inner: &g, chain, image: g.identity(a) };
        let report = verify_inductive_axioms(&bad, 4);
        assert!(report.failed("IG2"), "{report}");
        assert!(report.get("IG2").unwrap().witness.is_some());
    }
}
