//! The groupoid of paired isomorphisms of `Γ_S` and its inductive
//! isomorphism onto G(S).

use std::collections::HashMap;

use serde::Serialize;

use crate::biorder::{is_biorder_isomorphism, BiorderedSet};
use crate::category::{MorphId, ObjId};
use crate::cxn::{biorder_of_egamma, CxnError, SemigroupCxn};
use crate::echain::{self, EChain};
use crate::inductive::{verify_inductive_axioms, verify_ordered_axioms, InductiveGroupoid, OrderedGroupoid};
use crate::relation::Relation;
use crate::report::{Check, Report};

/// `(ρ_x, λ_{x'})` with `x x' = e` and `x' x = f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairedIso {
    pub rho: MorphId,
    pub lambda: MorphId,
    pub x: usize,
    pub x_prime: usize,
}

pub struct GammaGroupoid<'a> {
    sc: &'a SemigroupCxn,
    biorder: BiorderedSet,
    /// Idempotent of `S` behind each object.
    idem: Vec<usize>,
    morphisms: Vec<PairedIso>,
    index: HashMap<(MorphId, MorphId), usize>,
    identities: Vec<usize>,
    order: Relation,
}

impl<'a> GammaGroupoid<'a> {
    /// Objects are `E_Γ`; morphisms are the pairs of isomorphisms
    /// `(ρ, λ)` whose carriers `x = e·ρ`, `x' = λ·e` are mutually inverse
    /// with `x x' = e`, `x' x = f`.
    pub fn build(sc: &'a SemigroupCxn) -> Result<Self, CxnError> {
        let linked = sc.linked_pairs()?;
        let biorder = biorder_of_egamma(&sc.cxn, &linked)?;
        let s = &sc.semigroup;
        let idem: Vec<usize> = sc
            .cxn
            .e_gamma
            .iter()
            .map(|&p| s.idempotents().into_iter().find(|&e| sc.pair_of(e) == p).expect("pair of an idempotent"))
            .collect();
        let (l, r) = (&sc.left.category, &sc.right.category);
        let mut morphisms = Vec::new();
        for (i, &(c1, d1)) in sc.cxn.e_gamma.iter().enumerate() {
            for (j, &(c2, d2)) in sc.cxn.e_gamma.iter().enumerate() {
                let (e, f) = (idem[i], idem[j]);
                for &rho in l.hom(c1, c2).iter().filter(|&&m| l.is_iso(m)) {
                    for &lambda in r.hom(d1, d2).iter().filter(|&&m| r.is_iso(m)) {
                        let x = s.mul(e, sc.left.carrier(rho));
                        let x_prime = s.mul(sc.right.carrier(lambda), e);
                        if s.mul(x, x_prime) == e && s.mul(x_prime, x) == f && s.is_inverse_pair(x, x_prime) {
                            morphisms.push(PairedIso { rho, lambda, x, x_prime });
                        }
                    }
                }
            }
        }
        Ok(Self::assemble(sc, biorder, idem, morphisms))
    }

    fn assemble(sc: &'a SemigroupCxn, biorder: BiorderedSet, idem: Vec<usize>, morphisms: Vec<PairedIso>) -> Self {
        let index: HashMap<(MorphId, MorphId), usize> =
            morphisms.iter().enumerate().map(|(i, m)| ((m.rho, m.lambda), i)).collect();
        let identities = sc
            .cxn
            .e_gamma
            .iter()
            .map(|&(c, d)| {
                let key = (sc.left.category.identity(c), sc.right.category.identity(d));
                index.get(&key).copied().unwrap_or(usize::MAX)
            })
            .collect();
        let mut g = GammaGroupoid { sc, biorder, idem, morphisms, index, identities, order: Relation::empty(0) };
        let n = g.morphisms.len();
        g.order = Relation::from_fn(n, |a, b| g.leq_gamma(a, b));
        g
    }

    /// The same groupoid with morphism `m` removed.
    pub fn without_morphism(&self, m: usize) -> Self {
        let mut ms = self.morphisms.clone();
        ms.remove(m);
        Self::assemble(self.sc, self.biorder.clone(), self.idem.clone(), ms)
    }

    pub fn morphism(&self, m: usize) -> PairedIso {
        self.morphisms[m]
    }

    pub fn morphisms(&self) -> &[PairedIso] {
        &self.morphisms
    }

    /// Idempotent of `S` behind an object.
    pub fn idempotent(&self, obj: usize) -> usize {
        self.idem[obj]
    }

    fn pair(&self, obj: usize) -> (ObjId, ObjId) {
        self.sc.cxn.e_gamma[obj]
    }

    pub fn object_of(&self, e: usize) -> Option<usize> {
        self.idem.iter().position(|&x| x == e)
    }

    fn find_triple(&self, e: usize, x: usize, x_prime: usize, f: usize) -> Option<usize> {
        let rho = self.sc.left.morphism(e, x, f)?;
        let lambda = self.sc.right.morphism(e, x_prime, f)?;
        self.index.get(&(rho, lambda)).copied()
    }

    /// `m1 ≤ m2` iff both end pairs are included and `m1` is the epi part
    /// of the inclusion followed by `m2`, on both sides.
    pub fn leq_gamma(&self, a: usize, b: usize) -> bool {
        let (l, r) = (&self.sc.left.category, &self.sc.right.category);
        let (m1, m2) = (self.morphisms[a], self.morphisms[b]);
        let ends = |m: PairedIso| (l.dom(m.rho), r.dom(m.lambda), l.cod(m.rho), r.cod(m.lambda));
        let (c1, d1, c1t, d1t) = ends(m1);
        let (c2, d2, c2t, d2t) = ends(m2);
        if !(l.is_subobject(c1t, c2t) && r.is_subobject(d1t, d2t)) {
            return false;
        }
        let (Some(jl), Some(jr)) = (l.inclusion(c1, c2), r.inclusion(d1, d2)) else { return false };
        let via = |cat: &crate::category::FiniteCategory, j: MorphId, m: MorphId| {
            cat.compose(j, m).and_then(|jm| cat.epi_part(jm).ok())
        };
        via(l, jl, m2.rho) == Some(m1.rho) && via(r, jr, m2.lambda) == Some(m1.lambda)
    }

    /// `(ρ(g, gx, h), λ(g, x'g, h))` with `h = x'gx`.
    pub fn restrict_gamma(&self, m: usize, g: usize) -> Result<usize, CxnError> {
        let target = self.dom(m);
        if !self.biorder.omega(g, target) {
            return Err(CxnError::NotBelow { e: g, target });
        }
        let s = &self.sc.semigroup;
        let PairedIso { x, x_prime, .. } = self.morphisms[m];
        let gg = self.idem[g];
        let h = s.product(&[x_prime, gg, x]);
        self.find_triple(gg, s.mul(gg, x), s.mul(x_prime, gg), h).ok_or(CxnError::NotBelow { e: g, target })
    }

    /// `(ρ(g, xh, h), λ(g, hx', h))` with `g = xhx'`.
    pub fn corestrict_gamma(&self, m: usize, h: usize) -> Result<usize, CxnError> {
        let target = self.cod(m);
        if !self.biorder.omega(h, target) {
            return Err(CxnError::NotBelow { e: h, target });
        }
        let s = &self.sc.semigroup;
        let PairedIso { x, x_prime, .. } = self.morphisms[m];
        let hh = self.idem[h];
        let g = s.product(&[x, hh, x_prime]);
        self.find_triple(g, s.mul(x, hh), s.mul(hh, x_prime), hh).ok_or(CxnError::NotBelow { e: h, target })
    }

    pub fn star_compose(&self, a: usize, b: usize) -> Result<usize, CxnError> {
        self.compose(a, b).ok_or(CxnError::NotComposable { cod: self.cod(a), dom: self.dom(b) })
    }

    /// `(ρ_w, λ_{w'})` with `w = e_0 ... e_n` and `w' = e_n ... e_0`.
    pub fn eval_epsilon_gamma(&self, c: &EChain) -> Result<usize, CxnError> {
        let s = &self.sc.semigroup;
        let els: Vec<usize> = c.vertices().iter().map(|&v| self.idem[v]).collect();
        let w = s.product(&els);
        let rev: Vec<usize> = els.iter().rev().copied().collect();
        let w_prime = s.product(&rev);
        let (e0, en) = (els[0], *els.last().expect("nonempty chain"));
        if !(s.is_inverse_pair(w, w_prime) && s.mul(w, w_prime) == e0 && s.mul(w_prime, w) == en) {
            return Err(CxnError::NotRepresented(format!("chain value {} is not paired", s.label(w))));
        }
        self.find_triple(e0, w, w_prime, en).ok_or_else(|| CxnError::NotRepresented(format!("chain value {}", s.label(w))))
    }
}

impl OrderedGroupoid for GammaGroupoid<'_> {
    fn biorder(&self) -> &BiorderedSet {
        &self.biorder
    }

    fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    fn dom(&self, m: usize) -> usize {
        let l = &self.sc.left.category;
        let r = &self.sc.right.category;
        let key = (l.dom(self.morphisms[m].rho), r.dom(self.morphisms[m].lambda));
        (0..self.idem.len()).find(|&i| self.pair(i) == key).expect("paired domain")
    }

    fn cod(&self, m: usize) -> usize {
        let l = &self.sc.left.category;
        let r = &self.sc.right.category;
        let key = (l.cod(self.morphisms[m].rho), r.cod(self.morphisms[m].lambda));
        (0..self.idem.len()).find(|&i| self.pair(i) == key).expect("paired codomain")
    }

    fn identity(&self, e: usize) -> usize {
        self.identities[e]
    }

    fn inverse(&self, m: usize) -> usize {
        let PairedIso { rho, lambda, .. } = self.morphisms[m];
        let l = &self.sc.left.category;
        let r = &self.sc.right.category;
        let key = (l.iso_inverse(rho).expect("iso"), r.iso_inverse(lambda).expect("iso"));
        self.index.get(&key).copied().unwrap_or(usize::MAX)
    }

    fn compose(&self, a: usize, b: usize) -> Option<usize> {
        let (m, n) = (*self.morphisms.get(a)?, *self.morphisms.get(b)?);
        let rho = self.sc.left.category.compose(m.rho, n.rho)?;
        let lambda = self.sc.right.category.compose(m.lambda, n.lambda)?;
        self.index.get(&(rho, lambda)).copied()
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.order.contains(a, b)
    }

    fn evaluate(&self, c: &EChain) -> usize {
        self.eval_epsilon_gamma(c).unwrap_or(usize::MAX)
    }

    fn describe(&self, m: usize) -> String {
        let s = &self.sc.semigroup;
        let PairedIso { x, x_prime, .. } = self.morphisms[m];
        format!("(ρ_{},λ_{})", s.label(x), s.label(x_prime))
    }
}

/// `Φ(ρ_x, λ_{x'}) = (x, x')` checked against G(S), plus the inductive
/// axioms of G(Γ_S) itself.
pub fn verify_phi(gg: &GammaGroupoid<'_>, g: &InductiveGroupoid, max_len: usize) -> Report {
    let suite = "section3";
    let mut report = Report::new();
    let e_gamma = gg.biorder();
    let e_s = g.biorder();

    let theta: Option<Vec<usize>> = (0..e_gamma.len()).map(|i| g.object_of(gg.idempotent(i))).collect();
    let theta_ok = theta.as_ref().is_some_and(|t| is_biorder_isomorphism(e_gamma, e_s, t));
    report.single(suite, "phi-objects", theta_ok, || "object map is not a biorder isomorphism".into());
    let Some(theta) = theta.filter(|_| theta_ok) else { return report };

    let phi: Vec<Option<usize>> = gg.morphisms().iter().map(|m| g.find(m.x, m.x_prime)).collect();
    let mut defined = Check::new(suite, "phi-defined");
    for (m, p) in phi.iter().enumerate() {
        defined.case(p.is_some(), || format!("{} has no image", gg.describe(m)));
    }
    report.push(defined);

    let mut functor = Check::new(suite, "phi-functor");
    for a in 0..gg.morphism_count() {
        let Some(pa) = phi[a] else { continue };
        functor.case(g.dom(pa) == theta[gg.dom(a)] && g.cod(pa) == theta[gg.cod(a)], || format!("ends of {}", gg.describe(a)));
        for b in (0..gg.morphism_count()).filter(|&b| gg.cod(a) == gg.dom(b)) {
            let lhs = gg.compose(a, b).and_then(|ab| phi[ab]);
            let rhs = phi[b].and_then(|pb| g.compose(pa, pb));
            functor.case(lhs.is_some() && lhs == rhs, || format!("{} then {}", gg.describe(a), gg.describe(b)));
        }
    }
    for (e, &t) in theta.iter().enumerate() {
        functor.case(phi.get(gg.identity(e)).copied().flatten() == Some(g.identity(t)), || {
            format!("identity at {}", e_gamma.label(e))
        });
    }
    report.push(functor);

    let mut faithful = Check::new(suite, "phi-faithful");
    let mut preimage: Vec<Option<usize>> = vec![None; g.morphism_count()];
    for (m, p) in phi.iter().enumerate() {
        if let Some(p) = *p {
            faithful.case(preimage[p].replace(m).is_none(), || format!("{} hit twice", g.describe(p)));
        }
    }
    report.push(faithful);

    let mut full = Check::new(suite, "phi-full");
    for (p, pre) in preimage.iter().enumerate() {
        full.case(pre.is_some(), || format!("{} has no preimage", g.describe(p)));
    }
    report.push(full);

    let mut order = Check::new(suite, "phi-order");
    for a in 0..gg.morphism_count() {
        for b in 0..gg.morphism_count() {
            let (Some(pa), Some(pb)) = (phi[a], phi[b]) else { continue };
            order.case(gg.leq(a, b) == g.leq(pa, pb), || format!("{} vs {}", gg.describe(a), gg.describe(b)));
        }
    }
    report.push(order);

    let mut restrict = Check::new(suite, "phi-restriction");
    let mut formula = Check::new(suite, "restriction-formula");
    for m in 0..gg.morphism_count() {
        for h in e_gamma.below(gg.dom(m)) {
            let r = gg.restrict_gamma(m, h).ok();
            formula.case(r.is_some() && r == gg.restrict(m, h), || format!("{} restricted to {}", gg.describe(m), e_gamma.label(h)));
            let expect = phi[m].and_then(|pm| g.restrict_formula(pm, theta[h]).ok());
            restrict.case(r.and_then(|r| phi[r]) == expect && expect.is_some(), || {
                format!("{} restricted to {}", gg.describe(m), e_gamma.label(h))
            });
        }
        for h in e_gamma.below(gg.cod(m)) {
            let r = gg.corestrict_gamma(m, h).ok();
            formula.case(r.is_some() && r == gg.corestrict(m, h), || format!("{} corestricted to {}", gg.describe(m), e_gamma.label(h)));
            let expect = phi[m].and_then(|pm| g.corestrict_formula(pm, theta[h]).ok());
            restrict.case(r.and_then(|r| phi[r]) == expect && expect.is_some(), || {
                format!("{} corestricted to {}", gg.describe(m), e_gamma.label(h))
            });
        }
    }
    report.push(restrict);
    report.push(formula);

    let mut square = Check::new(suite, "evaluation-square");
    for c in echain::enumerate(e_gamma, max_len) {
        let lhs = gg.eval_epsilon_gamma(&c).ok().and_then(|m| phi[m]);
        let mapped: Vec<usize> = c.vertices().iter().map(|&v| theta[v]).collect();
        let rhs = echain::canonicalize(e_s, &mapped).ok().map(|d| g.evaluate(&d));
        square.case(lhs.is_some() && lhs == rhs, || c.display(e_gamma));
    }
    report.push(square);

    // singular squares of either kind commute under the evaluation
    for (name, row) in [("IG2-row", true), ("IG2-column", false)] {
        let mut ck = Check::new(suite, name);
        for sq in e_gamma.e_squares() {
            let witness = if row { e_gamma.row_singular_witness(&sq) } else { e_gamma.column_singular_witness(&sq) };
            if witness.is_none() {
                continue;
            }
            let [a, b, c, d] = sq;
            let top = gg.evaluate_pair(a, b).zip(gg.evaluate_pair(b, d)).and_then(|(p, q)| gg.compose(p, q));
            let left = gg.evaluate_pair(a, c).zip(gg.evaluate_pair(c, d)).and_then(|(p, q)| gg.compose(p, q));
            ck.case(top.is_some() && top == left, || {
                format!("[[{},{}],[{},{}]]", e_gamma.label(a), e_gamma.label(b), e_gamma.label(c), e_gamma.label(d))
            });
        }
        report.push(ck);
    }

    // the axiom suites assume identities and inverses exist
    let mut closed = Check::new(suite, "G(Γ):closed");
    for e in 0..e_gamma.len() {
        closed.case(gg.identity(e) < gg.morphism_count(), || format!("no identity at {}", e_gamma.label(e)));
    }
    for m in 0..gg.morphism_count() {
        closed.case(gg.inverse(m) < gg.morphism_count(), || format!("{} has no inverse", gg.describe(m)));
    }
    let closed_ok = closed.violations() == 0;
    report.push(closed);
    if !closed_ok {
        return report;
    }
    report.extend(verify_ordered_axioms(gg).with_suite(suite).prefixed("G(Γ):"));
    report.extend(verify_inductive_axioms(gg, max_len).with_suite(suite).prefixed("G(Γ):"));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::cxn::build_gamma_s;

    #[test]
    fn brandt_pairs() {
        let s = corpus::b2();
        let sc = build_gamma_s(&s).unwrap();
        let gg = GammaGroupoid::build(&sc).unwrap();
        let g = InductiveGroupoid::build(&s).unwrap();
        assert_eq!(gg.morphism_count(), g.morphism_count());
        let (e, a, a2) = (1, 3, 4);
        let m = gg.morphisms().iter().position(|m| (m.x, m.x_prime) == (a, a2)).unwrap();
        let inv = gg.morphisms().iter().position(|m| (m.x, m.x_prime) == (a2, a)).unwrap();
        assert_eq!(gg.inverse(m), inv);
        let id_e = gg.identity(gg.dom(m));
        assert_eq!(gg.morphism(id_e).x, e);
        assert_eq!(gg.star_compose(m, inv).unwrap(), id_e);
    }

    #[test]
    fn rectangular_band_chain_value() {
        let s = corpus::rb22();
        let sc = build_gamma_s(&s).unwrap();
        let gg = GammaGroupoid::build(&sc).unwrap();
        assert_eq!(gg.morphism_count(), 16);
        let local = |e: usize| gg.object_of(e).unwrap();
        // (0,0) R (0,1) L (1,1)
        let c = echain::canonicalize(gg.biorder(), &[local(0), local(1), local(3)]).unwrap();
        let m = gg.morphism(gg.eval_epsilon_gamma(&c).unwrap());
        assert_eq!((m.x, m.x_prime), (1, 2));
    }

    #[test]
    fn corpus_phi() {
        for s in corpus::all() {
            let sc = build_gamma_s(&s).unwrap();
            let gg = GammaGroupoid::build(&sc).unwrap();
            let g = InductiveGroupoid::build(&s).unwrap();
            let r = verify_phi(&gg, &g, 4);
            assert!(r.passed(), "{}\n{r}", s.name());
        }
    }

    #[test]
    fn dropping_a_morphism_breaks_fullness() {
        let s = corpus::b2();
        let sc = build_gamma_s(&s).unwrap();
        let gg = GammaGroupoid::build(&sc).unwrap();
        let g = InductiveGroupoid::build(&s).unwrap();
        let victim = (0..gg.morphism_count()).find(|&m| gg.dom(m) != gg.cod(m)).unwrap();
        let broken = gg.without_morphism(victim);
        let r = verify_phi(&broken, &g, 4);
        assert!(r.failed("phi-full"), "{r}");
        assert!(r.get("phi-full").unwrap().witness.is_some());
    }
}
