//! Functors between finite categories, ideals and local isomorphisms.

use serde::Serialize;

use super::{CatMorphism, CategoryError, FiniteCategory, MorphId, ObjId};
use crate::report::{Check, Report};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Functor {
    pub objects: Vec<ObjId>,
    pub morphisms: Vec<MorphId>,
}

/// Identities, domains and composition; the first violation is an error.
pub fn check_functor(f: &Functor, c: &FiniteCategory, d: &FiniteCategory) -> Result<(), CategoryError> {
    let bad = |msg: String| Err(CategoryError::NotAFunctor(msg));
    if f.objects.len() != c.object_count() || f.morphisms.len() != c.morphism_count() {
        return bad("object or morphism map has the wrong length".into());
    }
    if f.objects.iter().any(|&x| x >= d.object_count()) || f.morphisms.iter().any(|&m| m >= d.morphism_count()) {
        return bad("image out of range".into());
    }
    for m in 0..c.morphism_count() {
        let fm = f.morphisms[m];
        if d.dom(fm) != f.objects[c.dom(m)] || d.cod(fm) != f.objects[c.cod(m)] {
            return bad(format!("{} maps to {} with the wrong ends", c.describe(m), d.describe(fm)));
        }
    }
    for x in c.objects() {
        if f.morphisms[c.identity(x)] != d.identity(f.objects[x]) {
            return bad(format!("identity at {} is not preserved", c.object_label(x)));
        }
    }
    for a in 0..c.morphism_count() {
        for b in 0..c.morphism_count() {
            if let Some(ab) = c.compose(a, b) {
                if d.compose(f.morphisms[a], f.morphisms[b]) != Some(f.morphisms[ab]) {
                    return bad(format!("composite of {} and {} is not preserved", c.describe(a), c.describe(b)));
                }
            }
        }
    }
    Ok(())
}

/// Full subcategory on the objects included in `top`. Carriers of the
/// result are morphism indices of `c`; objects keep their order.
pub fn ideal(c: &FiniteCategory, top: ObjId) -> FiniteCategory {
    let objs: Vec<ObjId> = c.objects().filter(|&x| c.is_subobject(x, top)).collect();
    let local = |x: ObjId| objs.iter().position(|&y| y == x);
    let mut morphisms = Vec::new();
    let mut inclusions = Vec::new();
    for (i, &a) in objs.iter().enumerate() {
        for (k, &b) in objs.iter().enumerate() {
            for &m in c.hom(a, b) {
                let cm = CatMorphism { dom: i, carrier: m, cod: k };
                morphisms.push(cm);
                if c.is_inclusion(m) {
                    inclusions.push(cm);
                }
            }
        }
    }
    let labels = objs.iter().map(|&x| c.object_label(x).to_string()).collect();
    let carriers = (0..c.morphism_count()).map(|m| c.describe(m)).collect();
    FiniteCategory::build(
        format!("<{}>", c.object_label(top)),
        labels,
        morphisms,
        |f, g| {
            let m = c.compose(f.carrier, g.carrier)?;
            Some(CatMorphism { dom: local(c.dom(m))?, carrier: m, cod: local(c.cod(m))? })
        },
        &inclusions,
    )
    .expect("full subcategory of a valid category")
    .with_carrier_labels(carriers)
}

fn fully_faithful(f: &Functor, c: &FiniteCategory, d: &FiniteCategory, check: &mut Check) {
    for a in c.objects() {
        for b in c.objects() {
            let mut image: Vec<MorphId> = c.hom(a, b).iter().map(|&m| f.morphisms[m]).collect();
            image.sort_unstable();
            image.dedup();
            let target = d.hom(f.objects[a], f.objects[b]);
            check.case(image.len() == c.hom(a, b).len() && image.len() == target.len(), || {
                format!(
                    "hom({},{}) has {} morphisms, {} distinct images, target has {}",
                    c.object_label(a),
                    c.object_label(b),
                    c.hom(a, b).len(),
                    image.len(),
                    target.len()
                )
            });
        }
    }
}

fn inclusion_preserving(f: &Functor, c: &FiniteCategory, d: &FiniteCategory, check: &mut Check) {
    for a in c.objects() {
        for b in c.objects() {
            if let Some(j) = c.inclusion(a, b) {
                check.case(d.inclusion(f.objects[a], f.objects[b]) == Some(f.morphisms[j]), || {
                    format!("{} does not map to an inclusion", c.describe(j))
                });
            }
        }
    }
}

/// Inclusion preserving, fully faithful, and an isomorphism of each
/// ideal `<c>` onto `<F(c)>`.
pub fn local_iso_check(f: &Functor, c: &FiniteCategory, d: &FiniteCategory) -> Result<Report, CategoryError> {
    check_functor(f, c, d)?;
    let suite = "local-isomorphism";
    let mut report = Report::new();
    let mut incl = Check::new(suite, "inclusion-preserving");
    inclusion_preserving(f, c, d, &mut incl);
    report.push(incl);
    let mut ff = Check::new(suite, "fully-faithful");
    fully_faithful(f, c, d, &mut ff);
    report.push(ff);
    let mut ideals = Check::new(suite, "ideal-isomorphism");
    for top in c.objects() {
        let below: Vec<ObjId> = c.objects().filter(|&x| c.is_subobject(x, top)).collect();
        let mut image: Vec<ObjId> = below.iter().map(|&x| f.objects[x]).collect();
        image.sort_unstable();
        image.dedup();
        let target: Vec<ObjId> = d.objects().filter(|&y| d.is_subobject(y, f.objects[top])).collect();
        let reflects = below.iter().all(|&x| below.iter().all(|&y| c.is_subobject(x, y) == d.is_subobject(f.objects[x], f.objects[y])));
        ideals.case(image.len() == below.len() && image == target && reflects, || {
            format!("<{}> is not mapped isomorphically onto <{}>", c.object_label(top), d.object_label(f.objects[top]))
        });
    }
    report.push(ideals);
    Ok(report)
}

/// Isomorphism of categories with subobjects.
pub fn isomorphism_check(f: &Functor, c: &FiniteCategory, d: &FiniteCategory) -> Result<Report, CategoryError> {
    check_functor(f, c, d)?;
    let suite = "isomorphism";
    let mut report = Report::new();
    let mut objs = Check::new(suite, "object-bijection");
    let mut seen = vec![false; d.object_count()];
    for &y in &f.objects {
        objs.case(!std::mem::replace(&mut seen[y], true), || format!("{} hit twice", d.object_label(y)));
    }
    objs.case(c.object_count() == d.object_count(), || "object counts differ".into());
    report.push(objs);
    let mut ff = Check::new(suite, "fully-faithful");
    fully_faithful(f, c, d, &mut ff);
    report.push(ff);
    let mut order = Check::new(suite, "inclusion-order");
    inclusion_preserving(f, c, d, &mut order);
    for a in c.objects() {
        for b in c.objects() {
            order.case(c.is_subobject(a, b) == d.is_subobject(f.objects[a], f.objects[b]), || {
                format!("inclusion {} ⊆ {} not reflected", c.object_label(a), c.object_label(b))
            });
        }
    }
    report.push(order);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::poset;
    use super::*;

    fn identity_functor(c: &FiniteCategory) -> Functor {
        Functor { objects: c.objects().collect(), morphisms: (0..c.morphism_count()).collect() }
    }

    #[test]
    fn identity_is_local_iso() {
        let c = poset(3, |a, b| a <= b);
        assert!(local_iso_check(&identity_functor(&c), &c, &c).unwrap().passed());
        assert!(isomorphism_check(&identity_functor(&c), &c, &c).unwrap().passed());
    }

    #[test]
    fn ideal_of_chain() {
        let c = poset(3, |a, b| a <= b);
        let i = ideal(&c, 1);
        assert_eq!(i.object_count(), 2);
        assert_eq!(i.morphism_count(), 3);
        assert!(i.is_subobject(0, 1));
    }

    #[test]
    fn broken_functor_rejected() {
        let c = poset(2, |a, b| a <= b);
        let mut f = identity_functor(&c);
        f.objects.swap(0, 1);
        assert!(matches!(check_functor(&f, &c, &c), Err(CategoryError::NotAFunctor(_))));
    }
}
