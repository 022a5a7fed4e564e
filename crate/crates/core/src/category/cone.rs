//! Normal cones and the cone semigroup.

use serde::Serialize;

use super::{CategoryError, FiniteCategory, MorphId, ObjId};

/// Above this many objects `all_cones` refuses to enumerate.
pub const ALL_CONES_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct NormalCone {
    pub apex: ObjId,
    /// One component per object, indexed by object.
    pub components: Vec<MorphId>,
}

impl NormalCone {
    pub fn component(&self, c: ObjId) -> MorphId {
        self.components[c]
    }

    pub fn display(&self, cat: &FiniteCategory) -> String {
        let parts: Vec<String> = self.components.iter().map(|&m| cat.describe(m)).collect();
        format!("cone@{}[{}]", cat.object_label(self.apex), parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConeViolation {
    /// Wrong number of components, or a component not ending at the apex.
    Ncone1 { object: ObjId },
    Ncone2 { below: ObjId, above: ObjId },
    Ncone3,
}

impl From<ConeViolation> for CategoryError {
    fn from(v: ConeViolation) -> Self {
        match v {
            ConeViolation::Ncone1 { object } => CategoryError::BadCone { which: 1, object },
            ConeViolation::Ncone2 { below, .. } => CategoryError::BadCone { which: 2, object: below },
            ConeViolation::Ncone3 => CategoryError::BadCone { which: 3, object: usize::MAX },
        }
    }
}

pub fn validate_cone(cat: &FiniteCategory, g: &NormalCone) -> Result<(), ConeViolation> {
    if g.components.len() != cat.object_count() {
        return Err(ConeViolation::Ncone1 { object: g.components.len().min(cat.object_count()) });
    }
    for c in cat.objects() {
        let m = g.components[c];
        if m >= cat.morphism_count() || cat.dom(m) != c || cat.cod(m) != g.apex {
            return Err(ConeViolation::Ncone1 { object: c });
        }
    }
    for c in cat.objects() {
        for c2 in cat.objects() {
            if let Some(j) = cat.inclusion(c, c2) {
                if cat.compose(j, g.components[c2]) != Some(g.components[c]) {
                    return Err(ConeViolation::Ncone2 { below: c, above: c2 });
                }
            }
        }
    }
    if !g.components.iter().any(|&m| cat.is_iso(m)) {
        return Err(ConeViolation::Ncone3);
    }
    Ok(())
}

/// `a ↦ γ(a) f` with no checks beyond composability.
pub fn cone_star_unchecked(cat: &FiniteCategory, g: &NormalCone, f: MorphId) -> NormalCone {
    NormalCone {
        apex: cat.cod(f),
        components: g.components.iter().map(|&m| cat.compose(m, f).expect("f starts at the apex")).collect(),
    }
}

pub fn cone_star(cat: &FiniteCategory, g: &NormalCone, f: MorphId) -> Result<NormalCone, CategoryError> {
    if cat.dom(f) != g.apex || !cat.is_epi(f) {
        return Err(CategoryError::NotEpi(f));
    }
    let out = cone_star_unchecked(cat, g, f);
    validate_cone(cat, &out)?;
    Ok(out)
}

/// `γ · σ = γ * (σ(c_γ))°`.
pub fn cone_compose(cat: &FiniteCategory, g: &NormalCone, s: &NormalCone) -> Result<NormalCone, CategoryError> {
    let epi = cat.epi_part(s.components[g.apex])?;
    Ok(cone_star_unchecked(cat, g, epi))
}

pub fn is_idempotent_cone(cat: &FiniteCategory, g: &NormalCone) -> bool {
    g.components[g.apex] == cat.identity(g.apex)
}

pub fn m_set_of_cone(cat: &FiniteCategory, g: &NormalCone) -> Vec<ObjId> {
    cat.objects().filter(|&c| cat.is_iso(g.components[c])).collect()
}

/// `H(γ; c) = { γ * f° : f ∈ C(c_γ, c) }`, sorted and deduplicated.
pub fn h_set(cat: &FiniteCategory, g: &NormalCone, c: ObjId) -> Result<Vec<NormalCone>, CategoryError> {
    let mut out = Vec::new();
    for &f in cat.hom(g.apex, c) {
        out.push(cone_star_unchecked(cat, g, cat.epi_part(f)?));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All normal cones, for categories with at most eight objects.
pub fn all_cones(cat: &FiniteCategory) -> Result<Vec<NormalCone>, CategoryError> {
    if cat.object_count() > ALL_CONES_LIMIT {
        return Err(CategoryError::TooLarge { what: "cone enumeration", objects: cat.object_count(), limit: ALL_CONES_LIMIT });
    }
    Ok(cat.objects().flat_map(|a| search_cones(cat, a, None, false)).collect())
}

/// Normal cones with apex `c` whose component at `c` is the identity.
pub fn cones_with_identity_at(cat: &FiniteCategory, c: ObjId, first_only: bool) -> Vec<NormalCone> {
    search_cones(cat, c, Some((c, cat.identity(c))), first_only)
}

/// Cones are determined by their components at maximal objects, so the
/// search assigns those and propagates downward along inclusions.
pub(super) fn search_cones(
    cat: &FiniteCategory,
    apex: ObjId,
    pin: Option<(ObjId, MorphId)>,
    first_only: bool,
) -> Vec<NormalCone> {
    let maximal: Vec<ObjId> =
        cat.objects().filter(|&m| cat.objects().all(|x| x == m || !cat.is_subobject(m, x))).collect();
    let below: Vec<Vec<(ObjId, MorphId)>> = maximal
        .iter()
        .map(|&m| cat.objects().filter_map(|x| cat.inclusion(x, m).map(|j| (x, j))).collect())
        .collect();

    struct State<'a> {
        cat: &'a FiniteCategory,
        apex: ObjId,
        pin: Option<(ObjId, MorphId)>,
        maximal: &'a [ObjId],
        below: &'a [Vec<(ObjId, MorphId)>],
        comp: Vec<Option<MorphId>>,
        out: Vec<NormalCone>,
        first_only: bool,
    }

    fn go(st: &mut State<'_>, k: usize) {
        if st.first_only && !st.out.is_empty() {
            return;
        }
        if k == st.maximal.len() {
            let cone = NormalCone { apex: st.apex, components: st.comp.iter().map(|c| c.expect("covered")).collect() };
            if validate_cone(st.cat, &cone).is_ok() {
                st.out.push(cone);
            }
            return;
        }
        let m = st.maximal[k];
        let cat = st.cat;
        for &g in cat.hom(m, st.apex) {
            let mut set = Vec::new();
            let mut ok = true;
            for &(x, j) in &st.below[k] {
                let v = cat.compose(j, g).expect("composable");
                if st.pin.is_some_and(|(p, pm)| p == x && pm != v) {
                    ok = false;
                    break;
                }
                match st.comp[x] {
                    Some(prev) if prev != v => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        st.comp[x] = Some(v);
                        set.push(x);
                    }
                }
            }
            if ok {
                go(st, k + 1);
            }
            for x in set {
                st.comp[x] = None;
            }
            if st.first_only && !st.out.is_empty() {
                return;
            }
        }
    }

    let mut st = State {
        cat,
        apex,
        pin,
        maximal: &maximal,
        below: &below,
        comp: vec![None; cat.object_count()],
        out: Vec::new(),
        first_only,
    };
    go(&mut st, 0);
    st.out
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{poset, semilattice_left};
    use super::super::CatMorphism;
    use super::*;

    #[test]
    fn semilattice_cones() {
        let c = semilattice_left();
        let cones = all_cones(&c).unwrap();
        // one idempotent cone per object, as many as elements
        assert_eq!(cones.len(), 2);
        for g in &cones {
            assert!(is_idempotent_cone(&c, g));
            assert_eq!(m_set_of_cone(&c, g), vec![g.apex]);
            assert_eq!(cone_compose(&c, g, g).unwrap(), *g);
        }
        assert_eq!(cone_compose(&c, &cones[0], &cones[1]).unwrap(), cones[0]);
        assert_eq!(cone_compose(&c, &cones[1], &cones[0]).unwrap(), cones[0]);
        // a non-epi carrier yields no isomorphic component
        let top = &cones[1];
        let zero = c.find(&CatMorphism { dom: 1, carrier: 0, cod: 1 }).unwrap();
        assert!(cone_star(&c, top, zero).is_err());
        assert_eq!(validate_cone(&c, &cone_star_unchecked(&c, top, zero)), Err(ConeViolation::Ncone3));
    }

    #[test]
    fn non_iso_cone_rejected() {
        // in the two-object chain every cone must end at the top
        let c = poset(2, |a, b| a <= b);
        let bad = NormalCone { apex: 0, components: vec![c.identity(0), c.identity(0)] };
        assert_eq!(validate_cone(&c, &bad), Err(ConeViolation::Ncone1 { object: 1 }));
        let top = all_cones(&c).unwrap();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].apex, 1);
    }
}
