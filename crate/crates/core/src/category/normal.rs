//! Normal factorizations and the normal-category axioms.

use serde::Serialize;

use super::cone::search_cones;
use super::{FiniteCategory, MorphId, NormalCone};
use crate::report::{Check, Report};

const SUITE: &str = "normal-category";

/// Above this many objects the NC3 check only uses supplied candidates.
pub const EXHAUSTIVE_NC3_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub inclusion: bool,
    pub retraction: bool,
    pub isomorphism: bool,
    pub epimorphism: bool,
    pub monomorphism: bool,
}

impl Classification {
    pub fn is_general(&self) -> bool {
        *self == Classification::default()
    }
}

/// `f = retraction · iso · inclusion`, with `epi = retraction · iso`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NormalFactorization {
    pub retraction: MorphId,
    pub iso: MorphId,
    pub inclusion: MorphId,
    pub epi: MorphId,
}

fn factorize(c: &FiniteCategory, f: MorphId) -> Option<NormalFactorization> {
    let (src, tgt) = (c.dom(f), c.cod(f));
    for mid in c.objects() {
        let Some(j) = c.inclusion(mid, tgt) else { continue };
        let Some(&g) = c.hom(src, mid).iter().find(|&&g| c.compose(g, j) == Some(f)) else { continue };
        for img in c.objects() {
            if c.inclusion(img, src).is_none() {
                continue;
            }
            for &q in c.hom(src, img).iter().filter(|&&q| c.is_retraction(q)) {
                if let Some(&u) = c.hom(img, mid).iter().find(|&&u| c.is_iso(u) && c.compose(q, u) == Some(g)) {
                    return Some(NormalFactorization { retraction: q, iso: u, inclusion: j, epi: g });
                }
            }
        }
    }
    None
}

pub(super) fn all_factorizations(c: &FiniteCategory) -> Vec<Option<NormalFactorization>> {
    (0..c.morphism_count()).map(|f| factorize(c, f)).collect()
}

/// Checks that `C` is a category with subobjects.
pub fn verify_subobjects(c: &FiniteCategory) -> Report {
    let mut report = Report::new();
    let mut order = Check::new(SUITE, "inclusion-order");
    for a in c.objects() {
        order.case(c.is_subobject(a, a), || format!("{} not included in itself", c.object_label(a)));
        for b in c.objects() {
            if a != b && c.is_subobject(a, b) {
                order.case(!c.is_subobject(b, a), || {
                    format!("{} and {} include each other", c.object_label(a), c.object_label(b))
                });
            }
            for d in c.objects() {
                if let (Some(ab), Some(bd)) = (c.inclusion(a, b), c.inclusion(b, d)) {
                    order.case(c.inclusion(a, d).is_some() && c.compose(ab, bd) == c.inclusion(a, d), || {
                        format!("j({a},{b}) j({b},{d}) is not j({a},{d})")
                    });
                }
            }
        }
    }
    report.push(order);

    let mut mono = Check::new(SUITE, "inclusions-monic");
    let mut cancel = Check::new(SUITE, "inclusion-cancellation");
    for f in (0..c.morphism_count()).filter(|&f| c.is_inclusion(f)) {
        mono.case(c.is_mono(f), || format!("{} is not monic", c.describe(f)));
        // f = h g with f, g inclusions forces h to be an inclusion
        for g in (0..c.morphism_count()).filter(|&g| c.is_inclusion(g) && c.cod(g) == c.cod(f)) {
            for &h in c.hom(c.dom(f), c.dom(g)) {
                if c.compose(h, g) == Some(f) {
                    cancel.case(c.is_inclusion(h), || format!("{} factors through non-inclusion {}", c.describe(f), c.describe(h)));
                }
            }
        }
    }
    report.push(mono);
    report.push(cancel);
    report
}

/// NC1 to NC3 plus the subobject precheck. NC3 first tries `candidates`
/// and falls back to an exhaustive cone search on small categories.
pub fn verify_normal_category(c: &FiniteCategory, candidates: &[NormalCone]) -> Report {
    let mut report = verify_subobjects(c);

    let mut nc1 = Check::new(SUITE, "NC1");
    let mut epi_incl = Check::new(SUITE, "epi-part");
    for f in 0..c.morphism_count() {
        match c.normal_factorize(f) {
            Ok(nf) => {
                let ok = c.is_retraction(nf.retraction) && c.is_iso(nf.iso) && c.is_inclusion(nf.inclusion);
                nc1.case(ok && c.compose_path(&[nf.retraction, nf.iso, nf.inclusion]) == f, || {
                    format!("bad factorization of {}", c.describe(f))
                });
                epi_incl.case(c.is_epi(nf.epi) && c.compose(nf.epi, nf.inclusion) == Some(f), || {
                    format!("epi part of {} does not recompose", c.describe(f))
                });
            }
            Err(_) => nc1.fail(format!("{} has no normal factorization", c.describe(f))),
        }
    }
    report.push(nc1);
    report.push(epi_incl);

    let mut nc2 = Check::new(SUITE, "NC2");
    for a in c.objects() {
        for b in c.objects().filter(|&b| b != a) {
            let Some(j) = c.inclusion(a, b) else { continue };
            let splits = c.hom(b, a).iter().any(|&q| c.compose(j, q) == Some(c.identity(a)));
            nc2.case(splits, || format!("inclusion {} does not split", c.describe(j)));
        }
    }
    report.push(nc2);

    let mut nc3 = Check::new(SUITE, "NC3");
    for a in c.objects() {
        let id = c.identity(a);
        let from_candidates = candidates
            .iter()
            .any(|g| g.apex == a && g.components.get(a) == Some(&id) && super::validate_cone(c, g).is_ok());
        let found = from_candidates
            || (c.object_count() <= EXHAUSTIVE_NC3_LIMIT && !search_cones(c, a, Some((a, id)), true).is_empty());
        nc3.case(found, || format!("no normal cone with apex {} and identity component", c.object_label(a)));
    }
    report.push(nc3);
    report
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{poset, semilattice_left};
    use super::super::{CatMorphism, FiniteCategory};
    use super::*;

    #[test]
    fn semilattice_category_is_normal() {
        let c = semilattice_left();
        let r = verify_normal_category(&c, &[]);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn non_split_inclusion_fails_nc2() {
        // a ⊆ b with no morphism back from b to a
        let c = poset(2, |a, b| a <= b);
        let r = verify_normal_category(&c, &[]);
        assert!(r.failed("NC2"), "{r}");
        assert!(r.get("NC2").unwrap().witness.as_deref().unwrap().contains("does not split"));
    }

    #[test]
    fn isomorphism_factors_trivially() {
        // two isomorphic objects, no proper inclusions
        let ms: Vec<CatMorphism> =
            [(0, 0), (0, 1), (1, 0), (1, 1)].iter().map(|&(a, b)| CatMorphism { dom: a, carrier: 0, cod: b }).collect();
        let c = FiniteCategory::build("iso", vec!["x".into(), "y".into()], ms, |f, g| {
            Some(CatMorphism { dom: f.dom, carrier: 0, cod: g.cod })
        }, &[])
        .unwrap();
        let f = c.find(&CatMorphism { dom: 0, carrier: 0, cod: 1 }).unwrap();
        let nf = c.normal_factorize(f).unwrap();
        assert_eq!((nf.retraction, nf.iso, nf.inclusion), (c.identity(0), f, c.identity(1)));
        assert!(verify_normal_category(&c, &[]).passed());
    }
}
