//! Finite categories with subobjects.
//!
//! A category is fully materialized: every morphism is a
//! [`CatMorphism`] triple, composition is a dense table, and the
//! inclusions are a chosen morphism `j(c, c')` for each pair `c ⊆ c'`.

mod cone;
mod dual;
mod functor;
mod normal;

pub use cone::{
    all_cones, cone_compose, cone_star, cone_star_unchecked, cones_with_identity_at, h_set, is_idempotent_cone,
    m_set_of_cone, validate_cone, ConeViolation, NormalCone,
};
pub use dual::{eta, eta_inverse, h_action, h_functor, yoneda_transform, HFunctor, NatTrans, NormalDual};
pub use functor::{check_functor, ideal, isomorphism_check, local_iso_check, Functor};
pub use normal::{verify_normal_category, verify_subobjects, Classification, NormalFactorization};

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

pub type ObjId = usize;
pub type MorphId = usize;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CatMorphism {
    pub dom: ObjId,
    pub carrier: usize,
    pub cod: ObjId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("object {0} out of range")]
    NoSuchObject(ObjId),
    #[error("morphism {0:?} listed twice")]
    DuplicateMorphism(CatMorphism),
    #[error("composite of {0:?} and {1:?} is not a listed morphism")]
    NotClosed(CatMorphism, CatMorphism),
    #[error("no identity at object {0}")]
    NoIdentity(ObjId),
    #[error("composition is not associative at {0:?}")]
    NotAssociative([MorphId; 3]),
    #[error("{0:?} cannot be an inclusion")]
    BadInclusion(CatMorphism),
    #[error("NoFactorization: morphism {0} has no normal factorization")]
    NoFactorization(MorphId),
    #[error("NotEpi: morphism {0} is not an epimorphism out of the apex")]
    NotEpi(MorphId),
    #[error("NotAFunctor: {0}")]
    NotAFunctor(String),
    #[error("{what} needs at most {limit} objects, category has {objects}")]
    TooLarge { what: &'static str, objects: usize, limit: usize },
    #[error("Ncone{which} fails at object {object}")]
    BadCone { which: u8, object: ObjId },
}

#[derive(Clone)]
pub struct FiniteCategory {
    name: String,
    object_labels: Vec<String>,
    carrier_labels: Option<Vec<String>>,
    morphisms: Vec<CatMorphism>,
    index: HashMap<CatMorphism, MorphId>,
    hom: Vec<Vec<MorphId>>,
    table: Vec<u32>,
    identities: Vec<MorphId>,
    inclusions: Vec<Option<MorphId>>,
    inverses: Vec<Option<MorphId>>,
    factorizations: OnceLock<Vec<Option<NormalFactorization>>>,
}

impl std::fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("name", &self.name)
            .field("objects", &self.object_labels.len())
            .field("morphisms", &self.morphisms.len())
            .finish()
    }
}

impl FiniteCategory {
    /// Materializes a category. `compose(a, b)` is the composite "a then b"
    /// and is only called on composable pairs. Identities are found by
    /// search; each object is included in itself by its identity.
    pub fn build(
        name: impl Into<String>,
        object_labels: Vec<String>,
        morphisms: Vec<CatMorphism>,
        compose: impl Fn(&CatMorphism, &CatMorphism) -> Option<CatMorphism>,
        inclusions: &[CatMorphism],
    ) -> Result<Self, CategoryError> {
        let n = object_labels.len();
        let m = morphisms.len();
        let mut index = HashMap::with_capacity(m);
        let mut hom = vec![Vec::new(); n * n];
        for (i, &f) in morphisms.iter().enumerate() {
            if f.dom >= n || f.cod >= n {
                return Err(CategoryError::NoSuchObject(f.dom.max(f.cod)));
            }
            if index.insert(f, i).is_some() {
                return Err(CategoryError::DuplicateMorphism(f));
            }
            hom[f.dom * n + f.cod].push(i);
        }
        let mut table = vec![NONE; m * m];
        for a in 0..m {
            let fa = morphisms[a];
            for c in 0..n {
                for &b in &hom[fa.cod * n + c] {
                    let fb = morphisms[b];
                    let ab = compose(&fa, &fb)
                        .filter(|ab| ab.dom == fa.dom && ab.cod == fb.cod)
                        .and_then(|ab| index.get(&ab).copied())
                        .ok_or(CategoryError::NotClosed(fa, fb))?;
                    table[a * m + b] = ab as u32;
                }
            }
        }
        let comp = |a: usize, b: usize| table[a * m + b];
        for a in 0..m {
            for b in (0..m).filter(|&b| comp(a, b) != NONE) {
                let ab = comp(a, b) as usize;
                for c in (0..m).filter(|&c| comp(b, c) != NONE) {
                    if comp(ab, c) != comp(a, comp(b, c) as usize) {
                        return Err(CategoryError::NotAssociative([a, b, c]));
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(n);
        for c in 0..n {
            let id = hom[c * n + c]
                .iter()
                .copied()
                .find(|&i| {
                    (0..m).all(|f| {
                        (morphisms[f].dom != c || comp(i, f) == f as u32) && (morphisms[f].cod != c || comp(f, i) == f as u32)
                    })
                })
                .ok_or(CategoryError::NoIdentity(c))?;
            identities.push(id);
        }
        let mut incl = vec![None; n * n];
        for c in 0..n {
            incl[c * n + c] = Some(identities[c]);
        }
        for j in inclusions {
            let &id = index.get(j).ok_or(CategoryError::BadInclusion(*j))?;
            let slot = &mut incl[j.dom * n + j.cod];
            if slot.is_some_and(|prev| prev != id) {
                return Err(CategoryError::BadInclusion(*j));
            }
            *slot = Some(id);
        }
        let inverses = (0..m)
            .map(|f| {
                let fm = morphisms[f];
                hom[fm.cod * n + fm.dom].iter().copied().find(|&g| {
                    comp(f, g) == identities[fm.dom] as u32 && comp(g, f) == identities[fm.cod] as u32
                })
            })
            .collect();
        Ok(FiniteCategory {
            name: name.into(),
            object_labels,
            carrier_labels: None,
            morphisms,
            index,
            hom,
            table,
            identities,
            inclusions: incl,
            inverses,
            factorizations: OnceLock::new(),
        })
    }

    pub fn with_carrier_labels(mut self, labels: Vec<String>) -> Self {
        self.carrier_labels = Some(labels);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.object_labels.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.object_count()
    }

    pub fn object_label(&self, c: ObjId) -> &str {
        &self.object_labels[c]
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, f: MorphId) -> CatMorphism {
        self.morphisms[f]
    }

    pub fn morphisms(&self) -> &[CatMorphism] {
        &self.morphisms
    }

    pub fn find(&self, f: &CatMorphism) -> Option<MorphId> {
        self.index.get(f).copied()
    }

    pub fn dom(&self, f: MorphId) -> ObjId {
        self.morphisms[f].dom
    }

    pub fn cod(&self, f: MorphId) -> ObjId {
        self.morphisms[f].cod
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorphId] {
        &self.hom[a * self.object_count() + b]
    }

    /// "f then g", defined when `cod f = dom g`.
    pub fn compose(&self, f: MorphId, g: MorphId) -> Option<MorphId> {
        let v = self.table[f * self.morphisms.len() + g];
        (v != NONE).then_some(v as usize)
    }

    /// Composite of a path; panics on a non-composable path.
    pub fn compose_path(&self, path: &[MorphId]) -> MorphId {
        let (&first, rest) = path.split_first().expect("nonempty path");
        rest.iter().fold(first, |acc, &g| self.compose(acc, g).expect("composable path"))
    }

    pub fn identity(&self, c: ObjId) -> MorphId {
        self.identities[c]
    }

    pub fn is_identity(&self, f: MorphId) -> bool {
        self.identities[self.dom(f)] == f
    }

    /// `j(c, c')` when `c ⊆ c'`.
    pub fn inclusion(&self, c: ObjId, c2: ObjId) -> Option<MorphId> {
        self.inclusions[c * self.object_count() + c2]
    }

    pub fn is_subobject(&self, c: ObjId, c2: ObjId) -> bool {
        self.inclusion(c, c2).is_some()
    }

    pub fn is_inclusion(&self, f: MorphId) -> bool {
        self.inclusion(self.dom(f), self.cod(f)) == Some(f)
    }

    pub fn iso_inverse(&self, f: MorphId) -> Option<MorphId> {
        self.inverses[f]
    }

    pub fn is_iso(&self, f: MorphId) -> bool {
        self.inverses[f].is_some()
    }

    /// Left-cancellable: `f h = f k` implies `h = k`.
    pub fn is_epi(&self, f: MorphId) -> bool {
        let d = self.cod(f);
        self.objects().all(|e| {
            let mut seen = std::collections::HashSet::new();
            self.hom(d, e).iter().all(|&h| seen.insert(self.compose(f, h)))
        })
    }

    /// Right-cancellable: `h f = k f` implies `h = k`.
    pub fn is_mono(&self, f: MorphId) -> bool {
        let c = self.dom(f);
        self.objects().all(|b| {
            let mut seen = std::collections::HashSet::new();
            self.hom(b, c).iter().all(|&h| seen.insert(self.compose(h, f)))
        })
    }

    /// `q: c -> c'` with `j(c', c) q = 1_{c'}`.
    pub fn is_retraction(&self, q: MorphId) -> bool {
        let (c, c2) = (self.dom(q), self.cod(q));
        self.inclusion(c2, c).is_some_and(|j| self.compose(j, q) == Some(self.identity(c2)))
    }

    pub fn classify(&self, f: MorphId) -> Classification {
        Classification {
            inclusion: self.is_inclusion(f),
            retraction: self.is_retraction(f),
            isomorphism: self.is_iso(f),
            epimorphism: self.is_epi(f),
            monomorphism: self.is_mono(f),
        }
    }

    pub fn describe(&self, f: MorphId) -> String {
        let m = self.morphisms[f];
        let carrier = match &self.carrier_labels {
            Some(l) => l[m.carrier].clone(),
            None => m.carrier.to_string(),
        };
        format!("{}-[{}]->{}", self.object_labels[m.dom], carrier, self.object_labels[m.cod])
    }

    fn factorizations(&self) -> &[Option<NormalFactorization>] {
        self.factorizations.get_or_init(|| normal::all_factorizations(self))
    }

    /// `f = q u j` with `q` a retraction, `u` an isomorphism, `j` an
    /// inclusion; intermediate objects are the least valid indices.
    pub fn normal_factorize(&self, f: MorphId) -> Result<NormalFactorization, CategoryError> {
        self.factorizations()[f].ok_or(CategoryError::NoFactorization(f))
    }

    /// The epimorphic component `f° = q u`.
    pub fn epi_part(&self, f: MorphId) -> Result<MorphId, CategoryError> {
        self.normal_factorize(f).map(|nf| nf.epi)
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Morphisms wherever `arrow(a, b)`; inclusions along `a <= b`.
    pub fn poset(n: usize, arrow: impl Fn(usize, usize) -> bool) -> FiniteCategory {
        let morphisms: Vec<CatMorphism> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| arrow(a, b))
            .map(|(a, b)| CatMorphism { dom: a, carrier: 0, cod: b })
            .collect();
        let incl: Vec<CatMorphism> = morphisms.iter().copied().filter(|m| m.dom <= m.cod).collect();
        FiniteCategory::build(
            "poset",
            (0..n).map(|i| i.to_string()).collect(),
            morphisms,
            |f, g| Some(CatMorphism { dom: f.dom, carrier: 0, cod: g.cod }),
            &incl,
        )
        .unwrap()
    }

    /// Left ideals of the semilattice {0 < 1}: morphisms `(a, u, b)` with
    /// `u <= min(a, b)`, composed by meet.
    pub fn semilattice_left() -> FiniteCategory {
        let morphisms: Vec<CatMorphism> = (0..2)
            .flat_map(|a| (0..2).flat_map(move |b| (0..=a.min(b)).map(move |u| CatMorphism { dom: a, carrier: u, cod: b })))
            .collect();
        FiniteCategory::build(
            "L(SL2)",
            vec!["S0".into(), "S1".into()],
            morphisms,
            |f, g| Some(CatMorphism { dom: f.dom, carrier: f.carrier.min(g.carrier), cod: g.cod }),
            &[CatMorphism { dom: 0, carrier: 0, cod: 1 }],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_category_basics() {
        let c = fixtures::poset(3, |a, b| a <= b);
        assert_eq!(c.morphism_count(), 6);
        let j = c.inclusion(0, 2).unwrap();
        let cl = c.classify(j);
        assert!(cl.inclusion && cl.monomorphism && cl.epimorphism && !cl.isomorphism && !cl.retraction);
        assert!(c.classify(c.identity(1)).isomorphism);
    }

    #[test]
    fn rejects_non_closed_composition() {
        let ms = vec![CatMorphism { dom: 0, carrier: 0, cod: 0 }, CatMorphism { dom: 0, carrier: 1, cod: 0 }];
        let r = FiniteCategory::build("x", vec!["a".into()], ms, |f, g| Some(CatMorphism { dom: 0, carrier: f.carrier + g.carrier, cod: 0 }), &[]);
        assert!(matches!(r, Err(CategoryError::NotClosed(..))));
    }
}
