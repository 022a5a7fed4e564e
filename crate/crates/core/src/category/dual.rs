//! H-functors, their natural transformations and the normal dual.
//!
//! An H-functor is stored extensionally as the list of its elements
//! `(c, σ)` with `σ ∈ H(γ; c)`. Natural transformations come from the
//! Yoneda correspondence with morphisms between representing apexes and
//! are stored as element maps.

use std::collections::HashMap;

use super::cone::{all_cones, cone_star_unchecked, is_idempotent_cone, m_set_of_cone, ALL_CONES_LIMIT};
use super::{CatMorphism, CategoryError, FiniteCategory, MorphId, NormalCone, ObjId};

#[derive(Clone, Debug)]
pub struct HFunctor {
    /// An idempotent cone with this H-functor.
    pub representative: NormalCone,
    /// Sorted by object, then cone.
    pub elements: Vec<(ObjId, NormalCone)>,
    index: HashMap<(ObjId, NormalCone), usize>,
}

impl PartialEq for HFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for HFunctor {}

impl HFunctor {
    pub fn at(&self, c: ObjId) -> impl Iterator<Item = &NormalCone> {
        self.elements.iter().filter(move |(x, _)| *x == c).map(|(_, s)| s)
    }

    pub fn position(&self, c: ObjId, s: &NormalCone) -> Option<usize> {
        self.index.get(&(c, s.clone())).copied()
    }

    /// True if every `H(c)` is contained in the other's.
    pub fn is_subfunctor_of(&self, other: &HFunctor) -> bool {
        self.elements.iter().all(|e| other.index.contains_key(e))
    }

    pub fn apex(&self) -> ObjId {
        self.representative.apex
    }
}

/// `η_γ(σ) = σ(c_γ) j(c_σ, c)` for `σ ∈ H(γ; c)`, `γ` idempotent.
pub fn eta(cat: &FiniteCategory, g: &NormalCone, c: ObjId, s: &NormalCone) -> Option<MorphId> {
    cat.compose(s.components[g.apex], cat.inclusion(s.apex, c)?)
}

/// `η_γ⁻¹(h) = γ * h°`.
pub fn eta_inverse(cat: &FiniteCategory, g: &NormalCone, h: MorphId) -> Result<NormalCone, CategoryError> {
    Ok(cone_star_unchecked(cat, g, cat.epi_part(h)?))
}

/// `H(γ; g)` applied to `σ ∈ H(γ; dom g)`.
pub fn h_action(cat: &FiniteCategory, g: &NormalCone, s: &NormalCone, m: MorphId) -> Result<NormalCone, CategoryError> {
    let f = eta(cat, g, cat.dom(m), s).ok_or(CategoryError::NotAFunctor("element not in H(γ; dom)".into()))?;
    eta_inverse(cat, g, cat.compose(f, m).expect("composable"))
}

pub fn h_functor(cat: &FiniteCategory, g: &NormalCone) -> Result<HFunctor, CategoryError> {
    let mut elements = Vec::new();
    for c in cat.objects() {
        let mut here = Vec::new();
        for &f in cat.hom(g.apex, c) {
            here.push(eta_inverse(cat, g, f)?);
        }
        here.sort();
        here.dedup();
        elements.extend(here.into_iter().map(|s| (c, s)));
    }
    let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    Ok(HFunctor { representative: g.clone(), elements, index })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTrans {
    pub dom: usize,
    pub cod: usize,
    /// `k: apex(cod) -> apex(dom)` in the base category.
    pub yoneda: MorphId,
    /// Element index in `dom` to element index in `cod`.
    pub map: Vec<usize>,
}

/// `σ ↦ η_{γ'}⁻¹(k η_γ(σ))` for `k ∈ C(c_{γ'}, c_γ)`.
pub fn yoneda_transform(
    cat: &FiniteCategory,
    (di, dom): (usize, &HFunctor),
    (ci, cod): (usize, &HFunctor),
    k: MorphId,
) -> Result<NatTrans, CategoryError> {
    let mut map = Vec::with_capacity(dom.elements.len());
    for (c, s) in &dom.elements {
        let h = eta(cat, &dom.representative, *c, s).expect("element of H");
        let k_h = cat.compose(k, h).ok_or(CategoryError::NotAFunctor("Yoneda morphism does not compose".into()))?;
        let image = eta_inverse(cat, &cod.representative, k_h)?;
        let pos = cod
            .position(*c, &image)
            .ok_or_else(|| CategoryError::NotAFunctor("transform leaves the target H-functor".into()))?;
        map.push(pos);
    }
    Ok(NatTrans { dom: di, cod: ci, yoneda: k, map })
}

/// The normal dual as a materialized category. Objects are distinct
/// H-functors of idempotent cones; inclusions are subfunctor inclusions.
pub struct NormalDual {
    pub category: FiniteCategory,
    pub functors: Vec<HFunctor>,
    pub transforms: Vec<NatTrans>,
    lookup: HashMap<(usize, usize, MorphId), MorphId>,
    by_map: HashMap<(usize, usize, Vec<usize>), MorphId>,
}

impl NormalDual {
    /// Uses every idempotent cone when the base has at most eight objects,
    /// otherwise only `candidates`.
    pub fn build(cat: &FiniteCategory, candidates: &[NormalCone]) -> Result<NormalDual, CategoryError> {
        let mut reps: Vec<NormalCone> = candidates.iter().filter(|g| is_idempotent_cone(cat, g)).cloned().collect();
        if cat.object_count() <= ALL_CONES_LIMIT {
            reps.extend(all_cones(cat)?.into_iter().filter(|g| is_idempotent_cone(cat, g)));
        }
        let mut functors: Vec<HFunctor> = Vec::new();
        for g in &reps {
            let h = h_functor(cat, g)?;
            if !functors.contains(&h) {
                functors.push(h);
            }
        }
        let n = functors.len();
        let mut transforms: Vec<NatTrans> = Vec::new();
        let mut by_map: HashMap<(usize, usize, Vec<usize>), usize> = HashMap::new();
        let mut lookup = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                for &k in cat.hom(functors[b].apex(), functors[a].apex()) {
                    let t = yoneda_transform(cat, (a, &functors[a]), (b, &functors[b]), k)?;
                    let id = *by_map.entry((a, b, t.map.clone())).or_insert_with(|| {
                        transforms.push(t);
                        transforms.len() - 1
                    });
                    lookup.insert((a, b, k), id);
                }
            }
        }
        let morphisms: Vec<CatMorphism> =
            transforms.iter().enumerate().map(|(i, t)| CatMorphism { dom: t.dom, carrier: i, cod: t.cod }).collect();
        let mut inclusions = Vec::new();
        for a in 0..n {
            for b in (0..n).filter(|&b| b != a && functors[a].is_subfunctor_of(&functors[b])) {
                let ident: Vec<usize> = functors[a]
                    .elements
                    .iter()
                    .map(|(c, s)| functors[b].position(*c, s).expect("subfunctor"))
                    .collect();
                let t = by_map.get(&(a, b, ident)).ok_or(CategoryError::BadInclusion(CatMorphism { dom: a, carrier: usize::MAX, cod: b }))?;
                inclusions.push(morphisms[*t]);
            }
        }
        let compose = |f: &CatMorphism, g: &CatMorphism| {
            let (s, t) = (&transforms[f.carrier], &transforms[g.carrier]);
            let map: Vec<usize> = s.map.iter().map(|&i| t.map[i]).collect();
            by_map.get(&(s.dom, t.cod, map)).map(|&i| morphisms[i])
        };
        let labels = functors.iter().map(|h| format!("H[{}]", cat.object_label(h.apex()))).collect();
        let carriers = transforms
            .iter()
            .map(|t| format!("nat({})", cat.describe(t.yoneda)))
            .collect();
        let category = FiniteCategory::build(format!("N*{}", cat.name()), labels, morphisms.clone(), compose, &inclusions)?
            .with_carrier_labels(carriers);
        Ok(NormalDual { category, functors, transforms, lookup, by_map })
    }

    /// Object holding `H(γ; -)`.
    pub fn object_of(&self, cat: &FiniteCategory, g: &NormalCone) -> Result<Option<ObjId>, CategoryError> {
        let h = h_functor(cat, g)?;
        Ok(self.functors.iter().position(|x| *x == h))
    }

    /// Morphism induced by `k: apex(b) -> apex(a)` for the stored representatives.
    pub fn transform(&self, a: ObjId, b: ObjId, k: MorphId) -> Option<MorphId> {
        self.lookup.get(&(a, b, k)).copied()
    }

    /// Transform induced by `k: apex(cod_rep) -> apex(dom_rep)`, where the
    /// representatives need not be the stored ones.
    pub fn induced(
        &self,
        cat: &FiniteCategory,
        dom_rep: &NormalCone,
        cod_rep: &NormalCone,
        k: MorphId,
    ) -> Result<Option<MorphId>, CategoryError> {
        let (hd, hc) = (h_functor(cat, dom_rep)?, h_functor(cat, cod_rep)?);
        let (Some(a), Some(b)) =
            (self.functors.iter().position(|x| *x == hd), self.functors.iter().position(|x| *x == hc))
        else {
            return Ok(None);
        };
        let t = yoneda_transform(cat, (a, &hd), (b, &hc), k)?;
        Ok(self.by_map.get(&(a, b, t.map)).copied())
    }

    /// Applies a morphism of the dual to element `(c, σ)` of its domain.
    pub fn apply(&self, m: MorphId, c: ObjId, s: &NormalCone) -> Option<&(ObjId, NormalCone)> {
        let t = &self.transforms[self.category.morphism(m).carrier];
        let pos = self.functors[t.dom].position(c, s)?;
        self.functors[t.cod].elements.get(t.map[pos])
    }

    pub fn m_set(&self, cat: &FiniteCategory, h: ObjId) -> Vec<ObjId> {
        m_set_of_cone(cat, &self.functors[h].representative)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::semilattice_left;
    use super::*;

    #[test]
    fn semilattice_dual() {
        let c = semilattice_left();
        let d = NormalDual::build(&c, &[]).unwrap();
        // the dual of L(SL2) looks like L(SL2) again
        assert_eq!(d.functors.len(), 2);
        assert_eq!(d.category.morphism_count(), c.morphism_count());
        let (lo, hi) = if d.functors[0].apex() == 0 { (0, 1) } else { (1, 0) };
        assert!(d.category.is_subobject(lo, hi));
        assert!(!d.category.is_subobject(hi, lo));
        for h in &d.functors {
            let g = &h.representative;
            for (x, s) in &h.elements {
                let f = eta(&c, g, *x, s).unwrap();
                assert_eq!(eta_inverse(&c, g, f).unwrap(), *s);
            }
        }
    }
}
