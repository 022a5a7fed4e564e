//! Normal categories and a cross-connection rebuilt from an inductive
//! groupoid, and the isomorphism back to the semigroup's own
//! cross-connection.
//!
//! Both sides are built by one routine. The right side runs it on the
//! opposite semigroup: classes of `ω^r`, carriers multiplied in reverse, and
//! each groupoid morphism `(x, x')` read as `(x', x)`.

mod poset;
mod quiver;

pub use poset::{is_normal_mapping, is_regular_poset, normal_retraction, ClassPoset, NormalRetraction};
pub use quiver::{ArrowKind, Path, Quiver, TaggedMorphism};

use std::collections::{BTreeSet, HashMap};

use crate::biorder::{is_biorder_isomorphism, BiorderedSet};
use crate::category::{
    cone_compose, isomorphism_check, validate_cone, verify_normal_category, CatMorphism, FiniteCategory, Functor,
    MorphId, NormalCone, ObjId,
};
use crate::cxn::{biorder_of_egamma, verify_cxn_morphism, CrossConnection, CxnError, LinkedPairs, SemigroupCxn, Side, TranslationCategory};
use crate::inductive::{InductiveGroupoid, OrderedGroupoid};
use crate::report::{Check, Report};
use crate::semigroup::{find_isomorphism, FiniteSemigroup, GreenData};

/// `L_G` or `R_G`: classes of idempotents, morphisms are carrier triples
/// `(class e, u, class f)` with `u ∈ eSf` reduced to `u = rep(e) u`.
pub struct ClassCategory {
    pub side: Side,
    pub poset: ClassPoset,
    pub quiver: Quiver,
    pub category: FiniteCategory,
    ambient: FiniteSemigroup,
    biorder: BiorderedSet,
    green: GreenData,
    /// Groupoid morphisms as ambient `(x, x')`.
    pairs: Vec<(usize, usize)>,
    class_of: HashMap<usize, ObjId>,
}

impl ClassCategory {
    pub fn build(g: &InductiveGroupoid, side: Side) -> Result<Self, CxnError> {
        let s = g.semigroup();
        let (ambient, biorder) = match side {
            Side::Left => (s.clone(), g.biorder().clone()),
            Side::Right => (s.opposite(), g.biorder().opposite()),
        };
        let pairs: Vec<(usize, usize)> = g
            .morphisms()
            .iter()
            .map(|m| match side {
                Side::Left => (m.x, m.x_prime),
                Side::Right => (m.x_prime, m.x),
            })
            .collect();
        let poset = ClassPoset::from_biorder(g.biorder(), side);
        let class_of: HashMap<usize, ObjId> =
            poset.classes.iter().enumerate().flat_map(|(c, es)| es.iter().map(move |&e| (e, c))).collect();
        let green = ambient.green();
        let mut cc = ClassCategory {
            side,
            quiver: Quiver { labels: poset.labels.clone(), arrows: vec![] },
            category: FiniteCategory::build("", vec![], vec![], |_, _| None, &[])?,
            poset,
            ambient,
            biorder,
            green,
            pairs,
            class_of,
        };
        cc.quiver.arrows = cc.generating_arrows();

        // close the generating triples under composition
        let mut triples: BTreeSet<CatMorphism> = cc.quiver.arrows.iter().map(|a| a.triple()).collect();
        let mut frontier: Vec<CatMorphism> = triples.iter().copied().collect();
        while let Some(t) = frontier.pop() {
            let current: Vec<CatMorphism> = triples.iter().copied().collect();
            for u in current {
                for (a, b) in [(t, u), (u, t)] {
                    if let Ok(c) = cc.compose_triples(a, b) {
                        if triples.insert(c) {
                            frontier.push(c);
                        }
                    }
                }
            }
        }
        let inclusions: Vec<CatMorphism> =
            cc.quiver.of_kind(ArrowKind::Inclusion).filter(|a| a.dom != a.cod).map(|a| a.triple()).collect();
        let name = match side {
            Side::Left => format!("L_G({})", s.name()),
            Side::Right => format!("R_G({})", s.name()),
        };
        let amb = &cc.ambient;
        cc.category = FiniteCategory::build(
            name,
            cc.poset.labels.clone(),
            triples.into_iter().collect(),
            |f, g| Some(CatMorphism { dom: f.dom, carrier: amb.mul(f.carrier, g.carrier), cod: g.cod }),
            &inclusions,
        )?
        .with_carrier_labels(s.labels().to_vec());
        Ok(cc)
    }

    fn generating_arrows(&self) -> Vec<TaggedMorphism> {
        let mut out: BTreeSet<TaggedMorphism> = BTreeSet::new();
        let tag = |t: CatMorphism, kind| TaggedMorphism { dom: t.dom, carrier: t.carrier, cod: t.cod, kind };
        let reps = &self.poset.reps;
        for a in 0..reps.len() {
            for b in (0..reps.len()).filter(|&b| self.poset.leq(a, b)) {
                out.insert(tag(self.canonical(reps[a], reps[a], reps[b]).expect("inclusion triple"), ArrowKind::Inclusion));
            }
            let f = self.biorder.local(reps[a]).expect("idempotent");
            for u in self.biorder.below(f).into_iter().map(|u| self.biorder.element(u)) {
                out.insert(tag(self.canonical(reps[a], u, u).expect("retraction triple"), ArrowKind::Retraction));
            }
        }
        for &(x, xp) in &self.pairs {
            let (e, f) = (self.ambient.mul(x, xp), self.ambient.mul(xp, x));
            out.insert(tag(self.canonical(e, x, f).expect("groupoid triple"), ArrowKind::Groupoid));
        }
        out.into_iter().collect()
    }

    pub fn class_of(&self, e: usize) -> Option<ObjId> {
        self.class_of.get(&e).copied()
    }

    pub fn rep(&self, c: ObjId) -> usize {
        self.poset.reps[c]
    }

    pub fn carrier(&self, m: MorphId) -> usize {
        self.category.morphism(m).carrier
    }

    /// Normal form of the triple `(e, u, f)`; `None` unless `e`, `f` are
    /// idempotents and `u ∈ eSf`.
    pub fn canonical(&self, e: usize, u: usize, f: usize) -> Option<CatMorphism> {
        let (c, d) = (self.class_of(e)?, self.class_of(f)?);
        let s = &self.ambient;
        if s.mul(e, u) != u || s.mul(u, f) != u {
            return None;
        }
        Some(CatMorphism { dom: c, carrier: s.mul(self.rep(c), u), cod: d })
    }

    pub fn morphism(&self, e: usize, u: usize, f: usize) -> Option<MorphId> {
        self.canonical(e, u, f).and_then(|t| self.category.find(&t))
    }

    /// Raw triples `(e, u, f)` with `e L g`, `f L h` and `u = e v` name the
    /// same morphism as `(g, v, h)` (dually on the right).
    pub fn similar(&self, t1: (usize, usize, usize), t2: (usize, usize, usize)) -> bool {
        let same_class = |a, b| self.class_of(a).is_some() && self.class_of(a) == self.class_of(b);
        same_class(t1.0, t2.0) && same_class(t1.2, t2.2) && t1.1 == self.ambient.mul(t1.0, t2.1)
    }

    pub fn compose_triples(&self, a: CatMorphism, b: CatMorphism) -> Result<CatMorphism, CxnError> {
        if a.cod != b.dom {
            return Err(CxnError::NotComposable { cod: a.cod, dom: b.dom });
        }
        Ok(CatMorphism { dom: a.dom, carrier: self.ambient.mul(a.carrier, b.carrier), cod: b.cod })
    }

    /// Every raw triple `(e, u, f)` over idempotents `e`, `f`.
    pub fn raw_triples(&self) -> Vec<(usize, usize, usize)> {
        let es: Vec<usize> = self.biorder.elements().to_vec();
        let mut out = Vec::new();
        for &e in &es {
            for &f in &es {
                out.extend(self.ambient.sandwich_hom(e, f).into_iter().map(|u| (e, u, f)));
            }
        }
        out
    }

    /// Retraction, then isomorphism, then inclusion, each a generating
    /// arrow, composing to `m`.
    pub fn decomposition(&self, m: MorphId) -> Option<[CatMorphism; 3]> {
        let CatMorphism { dom, carrier: x, cod } = self.category.morphism(m);
        let (e, f) = (self.rep(dom), self.rep(cod));
        let s = &self.ambient;
        let y = *s.inverses_of(x).ok()?.first()?;
        let x2 = s.product(&[f, y, e]);
        let (g, h) = (s.mul(x, x2), s.mul(x2, x));
        Some([self.canonical(e, g, g)?, self.canonical(g, x, h)?, self.canonical(h, h, f)?])
    }

    /// `r^x`: apex the class of `L_x`, component `(g, gx, f)` at each class.
    pub fn principal_cone(&self, x: usize) -> Result<NormalCone, CxnError> {
        let s = &self.ambient;
        let f = *self.green.idempotents_in_l(x).iter().min().ok_or_else(|| CxnError::NotRepresented(s.label(x).into()))?;
        let apex = self.class_of(f).ok_or_else(|| CxnError::NotRepresented(s.label(f).into()))?;
        let components = self
            .category
            .objects()
            .map(|c| {
                let g = self.rep(c);
                self.morphism(g, s.mul(g, x), f).ok_or_else(|| CxnError::NotRepresented(format!("component of {}", s.label(x))))
            })
            .collect::<Result<_, _>>()?;
        Ok(NormalCone { apex, components })
    }

    /// `r^x` again, each component assembled through every sandwich element
    /// `h ∈ S(g, e)`: retraction `(g, gh, h)`, isomorphism `(h, he, he)`,
    /// the restricted groupoid arrow `(he, hex, k)` and inclusion `(k, k, f)`.
    /// Fails if two sandwich elements disagree.
    pub fn principal_cone_via_sandwich(&self, x: usize) -> Result<NormalCone, CxnError> {
        let s = &self.ambient;
        let bad = |what: String| CxnError::NotRepresented(what);
        let f = *self.green.idempotents_in_l(x).iter().min().ok_or_else(|| bad(s.label(x).into()))?;
        let &(_, xp) = self.pairs.iter().find(|&&(a, b)| a == x && s.mul(b, a) == f).ok_or_else(|| bad(s.label(x).into()))?;
        let e = s.mul(x, xp);
        let le = self.biorder.local(e).expect("idempotent");
        let mut components = Vec::new();
        for c in self.category.objects() {
            let g = self.rep(c);
            let lg = self.biorder.local(g).expect("idempotent");
            let mut found: Option<MorphId> = None;
            for h in self.biorder.sandwich_set(lg, le).into_iter().map(|h| self.biorder.element(h)) {
                let he = s.mul(h, e);
                let k = s.product(&[xp, he, x]);
                let parts = [
                    self.morphism(g, s.mul(g, h), h),
                    self.morphism(h, he, he),
                    self.morphism(he, s.mul(he, x), k),
                    self.morphism(k, k, f),
                ];
                let Some(parts) = parts.into_iter().collect::<Option<Vec<_>>>() else {
                    return Err(bad(format!("sandwich path for {} through {}", s.label(x), s.label(h))));
                };
                let m = self.category.compose_path(&parts);
                if found.is_some_and(|prev| prev != m) {
                    return Err(bad(format!("sandwich choice changes the component of {} at {}", s.label(x), self.category.object_label(c))));
                }
                found = Some(m);
            }
            components.push(found.ok_or_else(|| bad(format!("empty sandwich set at {}", self.category.object_label(c))))?);
        }
        let apex = self.class_of(f).expect("idempotent");
        Ok(NormalCone { apex, components })
    }

    /// Sends each class to the object of its representative in `L_S` (or
    /// `R_S`) and `(e, u, f)` to the translation with the same carrier.
    pub fn to_translations(&self, ts: &TranslationCategory) -> Result<Functor, CxnError> {
        self.to_translations_with(ts, |u| u)
    }

    /// As `to_translations`, with each carrier passed through `sigma` first.
    pub fn to_translations_with(&self, ts: &TranslationCategory, sigma: impl Fn(usize) -> usize) -> Result<Functor, CxnError> {
        let objects = self.category.objects().map(|c| ts.object_of(self.rep(c))).collect();
        let morphisms = self
            .category
            .morphisms()
            .iter()
            .map(|m| {
                ts.morphism(self.rep(m.dom), sigma(m.carrier), self.rep(m.cod))
                    .ok_or_else(|| CxnError::NotRepresented(format!("image of {}", self.ambient.label(m.carrier))))
            })
            .collect::<Result<_, _>>()?;
        Ok(Functor { objects, morphisms })
    }

    /// The translation assigned through any raw representative agrees
    /// across each class of similar triples.
    pub fn well_defined(&self, ts: &TranslationCategory, sigma: impl Fn(usize) -> usize) -> Check {
        let mut ck = Check::new("section4", "well-defined");
        let mut seen: HashMap<MorphId, (MorphId, (usize, usize, usize))> = HashMap::new();
        let s = &self.ambient;
        let show = |t: (usize, usize, usize)| format!("({},{},{})", s.label(t.0), s.label(t.1), s.label(t.2));
        for t in self.raw_triples() {
            let (Some(class), Some(img)) = (self.morphism(t.0, t.1, t.2), ts.morphism(t.0, sigma(t.1), t.2)) else {
                ck.fail(format!("{} has no image", show(t)));
                continue;
            };
            match seen.get(&class) {
                Some(&(prev, rep)) => {
                    ck.case(prev == img, || format!("{} and {} are similar but map apart", show(rep), show(t)));
                }
                None => {
                    ck.case(true, String::new);
                    seen.insert(class, (img, t));
                }
            }
        }
        ck
    }

    /// Structural checks on one side, with check names prefixed by `p`.
    pub fn verify(&self, ts: &TranslationCategory, p: &str) -> Report {
        let suite = "section4";
        let cat = &self.category;
        let s = &self.ambient;
        let mut report = Report::new();

        let mut kinds = Check::new(suite, &format!("{p}arrow-kinds"));
        for a in &self.quiver.arrows {
            let Some(m) = cat.find(&a.triple()) else {
                kinds.fail(format!("arrow {:?} missing", a));
                continue;
            };
            let cl = cat.classify(m);
            let ok = match a.kind {
                ArrowKind::Inclusion => cl.inclusion,
                ArrowKind::Retraction => cl.retraction,
                ArrowKind::Groupoid => cl.isomorphism,
                ArrowKind::Composite => true,
            };
            kinds.case(ok, || format!("{:?} arrow {} misclassified", a.kind, cat.describe(m)));
        }
        report.push(kinds);

        let mut homs = Check::new(suite, &format!("{p}hom-counts"));
        for a in cat.objects() {
            for b in cat.objects() {
                let expect = s.sandwich_hom(self.rep(a), self.rep(b)).len();
                homs.case(cat.hom(a, b).len() == expect, || {
                    format!("{} -> {}: {} morphisms, expected {expect}", cat.object_label(a), cat.object_label(b), cat.hom(a, b).len())
                });
            }
        }
        report.push(homs);

        let mut sim = Check::new(suite, &format!("{p}similarity"));
        let raw = self.raw_triples();
        for &t1 in &raw {
            for &t2 in &raw {
                let same = self.canonical(t1.0, t1.1, t1.2) == self.canonical(t2.0, t2.1, t2.2);
                sim.case(self.similar(t1, t2) == same && self.similar(t2, t1) == same, || {
                    format!("({},{},{}) vs ({},{},{})", s.label(t1.0), s.label(t1.1), s.label(t1.2), s.label(t2.0), s.label(t2.1), s.label(t2.2))
                });
            }
        }
        report.push(sim);

        let mut dec = Check::new(suite, &format!("{p}generating-decomposition"));
        for m in 0..cat.morphism_count() {
            let ok = self.decomposition(m).is_some_and(|[q, u, j]| {
                let kinds = self.quiver.contains(q, ArrowKind::Retraction)
                    && self.quiver.contains(u, ArrowKind::Groupoid)
                    && self.quiver.contains(j, ArrowKind::Inclusion);
                let ids: Option<Vec<MorphId>> = [q, u, j].iter().map(|t| cat.find(t)).collect();
                kinds && ids.is_some_and(|ids| cat.compose_path(&ids) == m)
            });
            dec.case(ok, || cat.describe(m));
        }
        report.push(dec);

        let mut split = Check::new(suite, &format!("{p}inclusions-split"));
        for a in cat.objects() {
            for b in cat.objects().filter(|&b| cat.is_subobject(a, b)) {
                let (e, f) = (self.rep(a), self.rep(b));
                let q = self.morphism(f, s.mul(f, e), e);
                let j = cat.inclusion(a, b);
                let ok = q.zip(j).and_then(|(q, j)| cat.compose(j, q)) == Some(cat.identity(a));
                split.case(ok, || format!("{} in {}", cat.object_label(a), cat.object_label(b)));
            }
        }
        report.push(split);

        report.extend(verify_normal_category(cat, &[]).with_suite(suite).prefixed(p));

        let mut cones = Check::new(suite, &format!("{p}principal-cones"));
        let all: Vec<Option<NormalCone>> = s.elements().map(|x| self.principal_cone(x).ok()).collect();
        for x in s.elements() {
            let ok = all[x].as_ref().is_some_and(|c| {
                validate_cone(cat, c).is_ok() && self.principal_cone_via_sandwich(x).as_ref() == Ok(c)
            });
            cones.case(ok, || format!("cone of {}", s.label(x)));
        }
        report.push(cones);

        let mut products = Check::new(suite, &format!("{p}cone-products"));
        for a in s.elements() {
            for b in s.elements() {
                let (Some(ca), Some(cb), Some(cab)) = (&all[a], &all[b], &all[s.mul(a, b)]) else { continue };
                products.case(cone_compose(cat, ca, cb).as_ref() == Ok(cab), || format!("{} then {}", s.label(a), s.label(b)));
            }
        }
        report.push(products);

        report.push(self.well_defined(ts, |u| u).renamed(&format!("{p}well-defined")));
        match self.to_translations(ts).map_err(|e| e.to_string()).and_then(|f| {
            isomorphism_check(&f, cat, &ts.category).map_err(|e| e.to_string())
        }) {
            Ok(r) => report.extend(r.with_suite(suite).prefixed(&format!("{p}to-translations:"))),
            Err(e) => report.single(suite, &format!("{p}to-translations"), false, || e),
        }
        report.extend(is_regular_poset(&self.poset).prefixed(p));
        report
    }
}

/// `Γ_G` and its parts.
pub struct InductiveCxn {
    pub left: ClassCategory,
    pub right: ClassCategory,
    pub cxn: CrossConnection,
}

/// `Γ_G` sends the right class of `e` to `r^e` and `l(e, u, f)` to
/// `r(f, u, e)`; `Δ_G` is the mirror image.
pub fn build_gamma_g(g: &InductiveGroupoid) -> Result<InductiveCxn, CxnError> {
    let left = ClassCategory::build(g, Side::Left)?;
    let right = ClassCategory::build(g, Side::Right)?;
    let (gamma, gamma_mor) = connect(&left, &right)?;
    let (delta, delta_mor) = connect(&right, &left)?;
    let cxn = CrossConnection::from_parts(left.category.clone(), right.category.clone(), gamma, gamma_mor, delta, delta_mor)?;
    Ok(InductiveCxn { left, right, cxn })
}

fn connect(base: &ClassCategory, other: &ClassCategory) -> Result<(Vec<NormalCone>, Vec<MorphId>), CxnError> {
    let cones = other.category.objects().map(|d| base.principal_cone(other.rep(d))).collect::<Result<_, _>>()?;
    let mor = other
        .category
        .morphisms()
        .iter()
        .map(|m| {
            base.morphism(other.rep(m.cod), m.carrier, other.rep(m.dom))
                .ok_or_else(|| CxnError::NotRepresented(format!("transpose of {}", base.ambient.label(m.carrier))))
        })
        .collect::<Result<_, _>>()?;
    Ok((cones, mor))
}

impl InductiveCxn {
    /// `(r^a, l^a)` for every `a`, as a semigroup.
    pub fn linked_semigroup(&self) -> Result<LinkedPairs, CxnError> {
        let s = &self.left.ambient;
        let pairs = s
            .elements()
            .map(|a| Ok((self.left.principal_cone(a)?, self.right.principal_cone(a)?)))
            .collect::<Result<Vec<_>, CxnError>>()?;
        LinkedPairs::build(&self.cxn.c, &self.cxn.d, pairs, s.labels().to_vec(), format!("S_Γ({})", s.name()))
    }

    /// Position in `E_Γ` of the pair of classes of each idempotent.
    pub fn pair_positions(&self, e_s: &BiorderedSet) -> Option<Vec<usize>> {
        e_s.elements()
            .iter()
            .map(|&e| {
                let p = (self.left.class_of(e)?, self.right.class_of(e)?);
                self.cxn.e_gamma.binary_search(&p).ok()
            })
            .collect()
    }
}

/// Everything about `Γ_G`, and `(L_G -> L_S, R_G -> R_S)` as a morphism
/// of cross-connections.
pub fn verify_section4(g: &InductiveGroupoid, ig: &InductiveCxn, sc: &SemigroupCxn) -> Report {
    let suite = "section4";
    let s = g.semigroup();
    let mut report = Report::new();
    report.extend(ig.left.verify(&sc.left, "L:"));
    report.extend(ig.right.verify(&sc.right, "R:"));
    report.extend(ig.cxn.verify().with_suite(suite).prefixed("Γ_G:"));

    // the idempotents, as biordered set
    let e_s = g.biorder();
    let positions = ig.pair_positions(e_s);
    let mut expected: Vec<(ObjId, ObjId)> = e_s
        .elements()
        .iter()
        .filter_map(|&e| Some((ig.left.class_of(e)?, ig.right.class_of(e)?)))
        .collect();
    expected.sort_unstable();
    expected.dedup();
    report.single(suite, "paired-classes", positions.is_some() && expected == ig.cxn.e_gamma, || {
        format!("{} pairs, {} idempotents", ig.cxn.e_gamma.len(), e_s.len())
    });
    let linked = ig.linked_semigroup();
    let biorder_ok = match (&linked, &positions) {
        (Ok(lp), Some(pos)) => biorder_of_egamma(&ig.cxn, lp).is_ok_and(|eg| is_biorder_isomorphism(e_s, &eg, pos)),
        _ => false,
    };
    report.single(suite, "paired-biorder", biorder_ok, || "pairs of classes are not biorder isomorphic to the idempotents".into());
    report.single(suite, "linked-semigroup", linked.as_ref().is_ok_and(|lp| find_isomorphism(&lp.semigroup, s).is_some()), || {
        match &linked {
            Ok(_) => "no isomorphism onto the semigroup".into(),
            Err(e) => e.to_string(),
        }
    });

    match (ig.left.to_translations(&sc.left), ig.right.to_translations(&sc.right)) {
        (Ok(fl), Ok(fr)) => report.extend(verify_cxn_morphism(&fl, &fr, &ig.cxn, &sc.cxn).with_suite(suite)),
        (Err(e), _) | (_, Err(e)) => report.single(suite, "cxn-morphism", false, || e.to_string()),
    }
    report
}

/// Follows `f` by conjugation with an automorphism `alpha[c]` of each
/// object: `m ↦ alpha[dom]^-1 m alpha[cod]`. Identity on objects.
pub fn twist(f: &Functor, target: &FiniteCategory, alpha: &[MorphId]) -> Functor {
    let morphisms = f
        .morphisms
        .iter()
        .map(|&m| {
            let (a, b) = (target.dom(m), target.cod(m));
            let inv = target.iso_inverse(alpha[a]).expect("automorphism");
            target.compose_path(&[inv, m, alpha[b]])
        })
        .collect();
    Functor { objects: f.objects.clone(), morphisms }
}

/// Families of automorphisms, one per object, commuting with every
/// inclusion, other than the identity family.
pub fn inclusion_compatible_twists(cat: &FiniteCategory) -> Vec<Vec<MorphId>> {
    let autos: Vec<Vec<MorphId>> =
        cat.objects().map(|c| cat.hom(c, c).iter().copied().filter(|&m| cat.is_iso(m)).collect()).collect();
    let compatible = |alpha: &[MorphId]| {
        cat.objects().all(|a| {
            cat.objects().all(|b| match cat.inclusion(a, b) {
                Some(j) => cat.compose(j, alpha[b]) == cat.compose(alpha[a], j),
                None => true,
            })
        })
    };
    let mut out = Vec::new();
    let mut alpha: Vec<MorphId> = cat.objects().map(|c| cat.identity(c)).collect();
    fn go(k: usize, autos: &[Vec<MorphId>], alpha: &mut Vec<MorphId>, out: &mut Vec<Vec<MorphId>>, ok: &dyn Fn(&[MorphId]) -> bool) {
        if k == autos.len() {
            if ok(alpha) {
                out.push(alpha.clone());
            }
            return;
        }
        for &m in &autos[k] {
            alpha[k] = m;
            go(k + 1, autos, alpha, out, ok);
        }
    }
    go(0, &autos, &mut alpha, &mut out, &compatible);
    out.retain(|a| a.iter().any(|&m| !cat.is_identity(m)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::cxn::build_gamma_s;

    fn parts(s: &FiniteSemigroup) -> (InductiveGroupoid, InductiveCxn, SemigroupCxn) {
        let g = InductiveGroupoid::build(s).unwrap();
        let ig = build_gamma_g(&g).unwrap();
        let sc = build_gamma_s(s).unwrap();
        (g, ig, sc)
    }

    #[test]
    fn semilattice_inclusion_arrows() {
        let g = InductiveGroupoid::build(&corpus::sl2()).unwrap();
        let l = ClassCategory::build(&g, Side::Left).unwrap();
        let incl: Vec<(usize, usize)> = l.quiver.of_kind(ArrowKind::Inclusion).map(|a| (a.dom, a.cod)).collect();
        assert_eq!(incl, vec![(0, 0), (0, 1), (1, 1)]);
        assert_eq!(l.category.morphism_count(), 5);
    }

    #[test]
    fn groupoid_arrows_match_groupoid() {
        let g = InductiveGroupoid::build(&corpus::rb22()).unwrap();
        let l = ClassCategory::build(&g, Side::Left).unwrap();
        // one arrow per morphism before collapsing to classes
        assert_eq!(l.pairs.len(), g.morphism_count());
        assert_eq!(g.morphism_count(), 16);
    }

    #[test]
    fn brandt_hom_counts_and_cone() {
        let s = corpus::b2();
        let (_, ig, _) = parts(&s);
        let l = &ig.left;
        let (e, f, a) = (1, 2, 3);
        let (ce, cf) = (l.class_of(e).unwrap(), l.class_of(f).unwrap());
        assert_eq!(l.category.hom(ce, cf).len(), s.sandwich_hom(e, f).len());
        let cone = l.principal_cone(a).unwrap();
        assert_eq!(cone.apex, cf);
        assert_eq!(l.category.morphism(cone.component(ce)).carrier, a);
        assert_eq!(l.principal_cone_via_sandwich(a).unwrap(), cone);
        // identity component at the apex of an idempotent cone
        let ce_cone = l.principal_cone(e).unwrap();
        assert!(l.category.is_identity(ce_cone.component(ce_cone.apex)));
        assert_eq!(ig.cxn.e_gamma.len(), 3);
    }

    #[test]
    fn similarity_on_brandt() {
        let g = InductiveGroupoid::build(&corpus::b2()).unwrap();
        let l = ClassCategory::build(&g, Side::Left).unwrap();
        let raw = l.raw_triples();
        for &a in &raw {
            assert!(l.similar(a, a));
            for &b in &raw {
                assert_eq!(l.similar(a, b), l.similar(b, a));
                for &c in &raw {
                    assert!(!(l.similar(a, b) && l.similar(b, c)) || l.similar(a, c));
                }
            }
        }
    }

    #[test]
    fn composing_mismatched_triples_fails() {
        let g = InductiveGroupoid::build(&corpus::b2()).unwrap();
        let l = ClassCategory::build(&g, Side::Left).unwrap();
        let t = l.canonical(1, 1, 1).unwrap();
        let u = l.canonical(2, 2, 2).unwrap();
        assert!(matches!(l.compose_triples(t, u), Err(CxnError::NotComposable { .. })));
    }

    #[test]
    fn corpus_section4() {
        for s in corpus::all() {
            let (g, ig, sc) = parts(&s);
            let r = verify_section4(&g, &ig, &sc);
            assert!(r.passed(), "{}\n{r}", s.name());
        }
    }

    #[test]
    fn permuted_carrier_is_not_well_defined() {
        let s = corpus::rb22();
        let (_, ig, sc) = parts(&s);
        // swap (0,0) and (0,1)
        let sigma = |u: usize| match u {
            0 => 1,
            1 => 0,
            u => u,
        };
        let ck = ig.left.well_defined(&sc.left, sigma).finish();
        assert!(ck.violations > 0 && ck.witness.is_some());
    }

    #[test]
    fn twisted_right_functor_breaks_transposes() {
        let s = corpus::t2();
        let (_, ig, sc) = parts(&s);
        let fl = ig.left.to_translations(&sc.left).unwrap();
        let fr = ig.right.to_translations(&sc.right).unwrap();
        let twists = inclusion_compatible_twists(&sc.right.category);
        assert!(!twists.is_empty());
        let bad = twist(&fr, &sc.right.category, &twists[0]);
        let r = verify_cxn_morphism(&fl, &bad, &ig.cxn, &sc.cxn);
        assert!(r.failed("M2"), "{r}");
        assert!(!r.failed("M1") && !r.failed("G:inclusion-preserving"), "{r}");
        assert!(r.get("M2").unwrap().witness.is_some());
    }
}
