//! The cross-connection of a regular semigroup: principal left and right
//! ideals, principal cones, `Γ_S`, `Δ_S` and the linked pairs `(ρ^a, λ^a)`.

use super::{biorder_of_egamma, CrossConnection, CxnError, LinkedPairs, Part};
use crate::biorder::{biorder_isomorphic, is_biorder_isomorphism, BiorderedSet};
use crate::category::{cone_compose, m_set_of_cone, validate_cone, CatMorphism, FiniteCategory, MorphId, NormalCone, ObjId};
use crate::report::{Check, Report};
use crate::semigroup::{find_isomorphism, FiniteSemigroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Principal left ideals `Se`, partial right translations.
    Left,
    /// Principal right ideals `eS`, partial left translations.
    Right,
}

/// `L_S` or `R_S`. The right side is built as the left side of the
/// opposite semigroup, so one set of formulas serves both.
pub struct TranslationCategory {
    pub side: Side,
    pub category: FiniteCategory,
    ambient: FiniteSemigroup,
    reps: Vec<usize>,
    object_of: Vec<ObjId>,
}

impl TranslationCategory {
    pub fn build(s: &FiniteSemigroup, side: Side) -> Result<Self, CxnError> {
        s.require_regular()?;
        let ambient = match side {
            Side::Left => s.clone(),
            Side::Right => s.opposite(),
        };
        let green = ambient.green();
        let classes = green.l_classes();
        let mut object_of = vec![0; s.order()];
        let mut reps = Vec::with_capacity(classes.len());
        for (i, class) in classes.iter().enumerate() {
            for &x in class {
                object_of[x] = i;
            }
            reps.push(*class.iter().filter(|&&x| ambient.is_idempotent(x)).min().expect("regular semigroup"));
        }
        let labels = reps
            .iter()
            .map(|&e| match side {
                Side::Left => format!("S{}", s.label(e)),
                Side::Right => format!("{}S", s.label(e)),
            })
            .collect();
        let mut morphisms = Vec::new();
        let mut inclusions = Vec::new();
        for (c, &e) in reps.iter().enumerate() {
            for (d, &f) in reps.iter().enumerate() {
                for u in ambient.sandwich_hom(e, f) {
                    morphisms.push(CatMorphism { dom: c, carrier: u, cod: d });
                }
                if c != d && ambient.mul(e, f) == e {
                    inclusions.push(CatMorphism { dom: c, carrier: e, cod: d });
                }
            }
        }
        let name = match side {
            Side::Left => format!("L({})", s.name()),
            Side::Right => format!("R({})", s.name()),
        };
        let category = FiniteCategory::build(
            name,
            labels,
            morphisms,
            |f, g| Some(CatMorphism { dom: f.dom, carrier: ambient.mul(f.carrier, g.carrier), cod: g.cod }),
            &inclusions,
        )?
        .with_carrier_labels(s.labels().to_vec());
        Ok(TranslationCategory { side, category, ambient, reps, object_of })
    }

    /// Object of `Se` (left) or `eS` (right).
    pub fn object_of(&self, x: usize) -> ObjId {
        self.object_of[x]
    }

    /// Least idempotent generating the object.
    pub fn rep(&self, c: ObjId) -> usize {
        self.reps[c]
    }

    pub fn carrier(&self, m: MorphId) -> usize {
        self.category.morphism(m).carrier
    }

    /// `ρ(e, u, f)` (left) or `λ(e, u, f)` (right) for any idempotents
    /// `e`, `f`, reduced to the stored representative.
    pub fn morphism(&self, e: usize, u: usize, f: usize) -> Option<MorphId> {
        let (c, d) = (self.object_of[e], self.object_of[f]);
        let carrier = self.ambient.mul(self.reps[c], u);
        if self.ambient.mul(carrier, self.reps[d]) != carrier {
            return None;
        }
        self.category.find(&CatMorphism { dom: c, carrier, cod: d })
    }

    /// `ρ^a` or `λ^a`: apex `Sa` (resp. `aS`), component `ρ(e, ea, f)`.
    pub fn principal_cone(&self, a: usize) -> NormalCone {
        let apex = self.object_of[a];
        let f = self.reps[apex];
        let components = self
            .reps
            .iter()
            .map(|&e| self.morphism(e, self.ambient.mul(e, a), f).expect("principal component exists"))
            .collect();
        NormalCone { apex, components }
    }
}

/// `Γ(d) = ρ^e` for the representative `e` of `d`, and `λ(e, u, f)`
/// goes to `ρ(f, u, e)`.
fn connect(base: &TranslationCategory, other: &TranslationCategory) -> (Vec<NormalCone>, Vec<MorphId>) {
    let cones = other.category.objects().map(|d| base.principal_cone(other.rep(d))).collect();
    let mor = (0..other.category.morphism_count())
        .map(|m| {
            let cm = other.category.morphism(m);
            base.morphism(other.rep(cm.cod), cm.carrier, other.rep(cm.dom)).expect("reverse morphism exists")
        })
        .collect();
    (cones, mor)
}

pub struct SemigroupCxn {
    pub semigroup: FiniteSemigroup,
    pub left: TranslationCategory,
    pub right: TranslationCategory,
    pub cxn: CrossConnection,
}

pub fn build_gamma_s(s: &FiniteSemigroup) -> Result<SemigroupCxn, CxnError> {
    let left = TranslationCategory::build(s, Side::Left)?;
    let right = TranslationCategory::build(s, Side::Right)?;
    let (gamma, gamma_mor) = connect(&left, &right);
    let (delta, delta_mor) = connect(&right, &left);
    let cxn = CrossConnection::from_parts(
        left.category.clone(),
        right.category.clone(),
        gamma,
        gamma_mor,
        delta,
        delta_mor,
    )?;
    Ok(SemigroupCxn { semigroup: s.clone(), left, right, cxn })
}

impl SemigroupCxn {
    /// `(Se, eS)` for an idempotent `e`.
    pub fn pair_of(&self, e: usize) -> (ObjId, ObjId) {
        (self.left.object_of(e), self.right.object_of(e))
    }

    pub fn linked_pairs(&self) -> Result<LinkedPairs, CxnError> {
        let s = &self.semigroup;
        let pairs = s.elements().map(|a| (self.left.principal_cone(a), self.right.principal_cone(a))).collect();
        LinkedPairs::build(&self.cxn.c, &self.cxn.d, pairs, s.labels().to_vec(), format!("SΓ({})", s.name()))
    }

    /// Local indices of `E_Γ` in the order of `E(S)`.
    pub fn egamma_map(&self, e_s: &BiorderedSet) -> Option<Vec<usize>> {
        (0..e_s.len())
            .map(|i| {
                let p = self.pair_of(e_s.element(i));
                self.cxn.e_gamma.iter().position(|&q| q == p)
            })
            .collect()
    }
}

/// Everything about `Γ_S`: the generic cross-connection checks plus the
/// concrete formulas for hom-sets, principal cones, pairs, transposes and
/// the semigroup of linked pairs.
pub fn verify_gamma_s(sc: &SemigroupCxn) -> Result<Report, CxnError> {
    let suite = "cxn";
    let s = &sc.semigroup;
    let (l, r) = (&sc.left, &sc.right);
    let mut report = sc.cxn.verify();
    let idem = s.idempotents();

    let mut homs = Check::new(suite, "hom-counts");
    for &e in &idem {
        for &f in &idem {
            let lc = l.category.hom(l.object_of(e), l.object_of(f)).len();
            homs.case(lc == s.sandwich_hom(e, f).len(), || format!("|L(S{}, S{})| = {lc}", s.label(e), s.label(f)));
            let rc = r.category.hom(r.object_of(e), r.object_of(f)).len();
            homs.case(rc == s.sandwich_hom(f, e).len(), || format!("|R({}S, {}S)| = {rc}", s.label(e), s.label(f)));
        }
    }
    report.push(homs);

    let green = s.green();
    let mut cones = Check::new(suite, "principal-cones");
    let mut msets = Check::new(suite, "principal-m-sets");
    for a in s.elements() {
        for (side, t) in [("ρ", l), ("λ", r)] {
            let g = t.principal_cone(a);
            cones.case(validate_cone(&t.category, &g).is_ok(), || format!("{side}^{} is not a normal cone", s.label(a)));
            let mut expect: Vec<ObjId> = match t.side {
                Side::Left => green.idempotents_in_r(a),
                Side::Right => green.idempotents_in_l(a),
            }
            .into_iter()
            .map(|e| t.object_of(e))
            .collect();
            expect.sort_unstable();
            expect.dedup();
            msets.case(m_set_of_cone(&t.category, &g) == expect, || format!("M-set of {side}^{}", s.label(a)));
        }
    }
    report.push(cones);
    report.push(msets);

    let mut products = Check::new(suite, "principal-products");
    for a in s.elements() {
        for b in s.elements() {
            let ab = s.mul(a, b);
            let rho = cone_compose(&l.category, &l.principal_cone(a), &l.principal_cone(b))?;
            products.case(rho == l.principal_cone(ab), || format!("ρ^{} ρ^{}", s.label(a), s.label(b)));
            let lam = cone_compose(&r.category, &r.principal_cone(b), &r.principal_cone(a))?;
            products.case(lam == r.principal_cone(ab), || format!("λ^{} λ^{}", s.label(b), s.label(a)));
        }
    }
    report.push(products);

    let mut expected: Vec<(ObjId, ObjId)> = idem.iter().map(|&e| sc.pair_of(e)).collect();
    expected.sort_unstable();
    report.single(suite, "pairs-are-idempotents", expected == sc.cxn.e_gamma, || {
        format!("E_Γ has {} pairs, E(S) has {} idempotents", sc.cxn.e_gamma.len(), idem.len())
    });

    let mut trans = Check::new(suite, "transpose-rule");
    for &e in &idem {
        for &f in &idem {
            for &m in l.category.hom(l.object_of(e), l.object_of(f)) {
                // the same morphism written as ρ(e, u, f) with u ∈ eSf
                let u = s.mul(e, l.carrier(m));
                let got = sc.cxn.transpose(Part::C, m, sc.pair_of(e), sc.pair_of(f));
                trans.case(got.ok() == r.morphism(f, u, e), || format!("transpose of {}", l.category.describe(m)));
            }
        }
    }
    report.push(trans);

    let linked = sc.linked_pairs()?;
    report.single(suite, "linked-pairs-isomorphic", find_isomorphism(s, &linked.semigroup).is_some(), || {
        "SΓ is not isomorphic to S".into()
    });
    let mut lp_idem: Vec<usize> = linked.semigroup.idempotents();
    lp_idem.sort_unstable();
    let from_pairs: Vec<usize> = {
        let mut v: Vec<usize> = idem
            .iter()
            .filter_map(|&e| {
                let (c, d) = sc.pair_of(e);
                linked.position(&sc.cxn.gamma_cd(c, d).ok()?, &sc.cxn.delta_cd(c, d).ok()?)
            })
            .collect();
        v.sort_unstable();
        v
    };
    report.single(suite, "linked-idempotents", lp_idem == from_pairs && from_pairs.len() == idem.len(), || {
        format!("{} idempotent linked pairs, {} from E_Γ", lp_idem.len(), from_pairs.len())
    });

    let eg = biorder_of_egamma(&sc.cxn, &linked)?;
    let es = BiorderedSet::from_semigroup(s)?;
    let direct = sc.egamma_map(&es).is_some_and(|theta| is_biorder_isomorphism(&es, &eg, &theta));
    report.single(suite, "egamma-biorder", direct && biorder_isomorphic(&es, &eg).is_some(), || {
        "e ↦ (Se, eS) is not a biorder isomorphism".into()
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn brandt_hom_sets() {
        let s = corpus::b2();
        let l = TranslationCategory::build(&s, Side::Left).unwrap();
        let (e, f, a) = (1, 2, 3);
        let hom: Vec<usize> = l.category.hom(l.object_of(e), l.object_of(f)).iter().map(|&m| l.carrier(m)).collect();
        assert_eq!(hom, vec![0, a]);
        let rho_a = l.principal_cone(a);
        assert_eq!(rho_a.apex, l.object_of(f));
        assert_eq!(l.carrier(rho_a.components[l.object_of(e)]), a);
        assert!(l.category.is_iso(l.morphism(e, a, f).unwrap()));
        let j = l.category.inclusion(l.object_of(0), l.object_of(e)).unwrap();
        let cl = l.category.classify(j);
        assert!(cl.inclusion && cl.monomorphism);
    }

    #[test]
    fn rectangular_band_right_side() {
        let s = corpus::rb22();
        let r = TranslationCategory::build(&s, Side::Right).unwrap();
        assert_eq!(r.category.object_count(), 2);
        for c in 0..2 {
            for d in 0..2 {
                // |fSe| = 1 in a rectangular band
                assert_eq!(r.category.hom(c, d).len(), 1);
            }
        }
    }

    #[test]
    fn corpus_cross_connections() {
        for s in corpus::all() {
            let sc = build_gamma_s(&s).unwrap();
            let rep = verify_gamma_s(&sc).unwrap();
            assert!(rep.passed(), "{}\n{rep}", s.name());
        }
    }
}
