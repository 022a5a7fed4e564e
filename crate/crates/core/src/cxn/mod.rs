//! Cross-connections between two normal categories.
//!
//! `Γ: D -> N*C` is given as data: an idempotent cone in `C` per object of
//! `D`, and per morphism `g: d -> d'` of `D` a morphism
//! `apex(Γ d') -> apex(Γ d)` of `C` whose Yoneda transform is `Γ(g)`.
//! The dual `Δ` is given the same way with the roles swapped.

mod linked;
mod semigroup;

pub use linked::{biorder_of_egamma, LinkedPairs};
pub use semigroup::{build_gamma_s, verify_gamma_s, SemigroupCxn, Side, TranslationCategory};

use thiserror::Error;

use crate::biorder::BiorderError;
use crate::category::{
    cone_star_unchecked, eta, local_iso_check, m_set_of_cone, validate_cone, verify_normal_category, CategoryError,
    FiniteCategory, Functor, MorphId, NormalCone, NormalDual, ObjId,
};
use crate::report::{Check, Report};
use crate::semigroup::SemigroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CxnError {
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Biorder(#[from] BiorderError),
    #[error("NotConnected: objects {c} and {d} are not paired")]
    NotConnected { c: ObjId, d: ObjId },
    #[error("{0} has no counterpart in the normal dual")]
    NotRepresented(String),
    #[error("elements {a} and {b} give the same linked pair of cones")]
    DuplicateLinkedPair { a: usize, b: usize },
    #[error("NotBelow: {e} is not below {target}")]
    NotBelow { e: usize, target: usize },
    #[error("NotComposable: codomain {cod} differs from domain {dom}")]
    NotComposable { cod: usize, dom: usize },
    #[error("linked pairs are not closed under the product")]
    NotClosed,
}

/// Which of the two categories a morphism lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    C,
    D,
}

pub struct CrossConnection {
    pub c: FiniteCategory,
    pub d: FiniteCategory,
    pub gamma: Vec<NormalCone>,
    pub gamma_mor: Vec<MorphId>,
    pub delta: Vec<NormalCone>,
    pub delta_mor: Vec<MorphId>,
    pub dual_c: NormalDual,
    pub dual_d: NormalDual,
    /// `Γ` as a functor `D -> N*C`.
    pub gamma_functor: Functor,
    /// `Δ` as a functor `C -> N*D`.
    pub delta_functor: Functor,
    /// Pairs `(c, d)` with `c ∈ MΓ(d)`, sorted.
    pub e_gamma: Vec<(ObjId, ObjId)>,
}

fn materialize(
    base: &FiniteCategory,
    other: &FiniteCategory,
    cones: &[NormalCone],
    mor: &[MorphId],
    dual: &NormalDual,
) -> Result<Functor, CxnError> {
    let mut objects = Vec::with_capacity(cones.len());
    for (x, g) in cones.iter().enumerate() {
        let h = dual.object_of(base, g)?.ok_or_else(|| CxnError::NotRepresented(format!("cone at {}", other.object_label(x))))?;
        objects.push(h);
    }
    let mut morphisms = Vec::with_capacity(mor.len());
    for (m, &k) in mor.iter().enumerate() {
        let (a, b) = (other.dom(m), other.cod(m));
        let t = dual.induced(base, &cones[a], &cones[b], k)?.ok_or_else(|| CxnError::NotRepresented(other.describe(m)))?;
        morphisms.push(t);
    }
    Ok(Functor { objects, morphisms })
}

impl CrossConnection {
    pub fn from_parts(
        c: FiniteCategory,
        d: FiniteCategory,
        gamma: Vec<NormalCone>,
        gamma_mor: Vec<MorphId>,
        delta: Vec<NormalCone>,
        delta_mor: Vec<MorphId>,
    ) -> Result<Self, CxnError> {
        let dual_c = NormalDual::build(&c, &gamma)?;
        let dual_d = NormalDual::build(&d, &delta)?;
        let gamma_functor = materialize(&c, &d, &gamma, &gamma_mor, &dual_c)?;
        let delta_functor = materialize(&d, &c, &delta, &delta_mor, &dual_d)?;
        let mut e_gamma: Vec<(ObjId, ObjId)> = d
            .objects()
            .flat_map(|y| m_set_of_cone(&c, &gamma[y]).into_iter().map(move |x| (x, y)))
            .collect();
        e_gamma.sort_unstable();
        Ok(CrossConnection { c, d, gamma, gamma_mor, delta, delta_mor, dual_c, dual_d, gamma_functor, delta_functor, e_gamma })
    }

    pub fn is_paired(&self, c: ObjId, d: ObjId) -> bool {
        self.e_gamma.binary_search(&(c, d)).is_ok()
    }

    /// `(d, c)` pairs with `d ∈ MΔ(c)`, sorted.
    pub fn e_delta(&self) -> Vec<(ObjId, ObjId)> {
        let mut out: Vec<(ObjId, ObjId)> = self
            .c
            .objects()
            .flat_map(|x| m_set_of_cone(&self.d, &self.delta[x]).into_iter().map(move |y| (y, x)))
            .collect();
        out.sort_unstable();
        out
    }

    /// The idempotent cone with apex `c` and the H-functor of `Γ(d)`.
    pub fn gamma_cd(&self, c: ObjId, d: ObjId) -> Result<NormalCone, CxnError> {
        let g = &self.gamma[d];
        let u = self.c.iso_inverse(g.components[c]).ok_or(CxnError::NotConnected { c, d })?;
        Ok(cone_star_unchecked(&self.c, g, u))
    }

    /// The idempotent cone with apex `d` and the H-functor of `Δ(c)`.
    pub fn delta_cd(&self, c: ObjId, d: ObjId) -> Result<NormalCone, CxnError> {
        let g = &self.delta[c];
        let u = self.d.iso_inverse(g.components[d]).ok_or(CxnError::NotConnected { c, d })?;
        Ok(cone_star_unchecked(&self.d, g, u))
    }

    /// Transpose of `f: c -> c'` in `C` (from `Part::C`) or of `g: d -> d'`
    /// in `D` (from `Part::D`). The first pair is at the domain of the
    /// input morphism, the second at its codomain.
    pub fn transpose(&self, part: Part, m: MorphId, first: (ObjId, ObjId), second: (ObjId, ObjId)) -> Result<MorphId, CxnError> {
        for &(x, y) in [first, second].iter() {
            if !self.is_paired(x, y) {
                return Err(CxnError::NotConnected { c: x, d: y });
            }
        }
        let ((c1, d1), (c2, d2)) = (first, second);
        let (dual, functor, tgt, at, start, end) = match part {
            Part::C => {
                if self.c.dom(m) != c1 || self.c.cod(m) != c2 {
                    return Err(CxnError::NotConnected { c: c1, d: d1 });
                }
                (&self.dual_d, &self.delta_functor, &self.d, d1, self.delta_cd(c1, d1)?, self.delta_cd(c2, d2)?)
            }
            Part::D => {
                if self.d.dom(m) != d1 || self.d.cod(m) != d2 {
                    return Err(CxnError::NotConnected { c: c1, d: d1 });
                }
                (&self.dual_c, &self.gamma_functor, &self.c, c1, self.gamma_cd(c1, d1)?, self.gamma_cd(c2, d2)?)
            }
        };
        let (_, image) = dual
            .apply(functor.morphisms[m], at, &start)
            .ok_or_else(|| CxnError::NotRepresented("transpose element".into()))?;
        eta(tgt, &end, at, image).ok_or_else(|| CxnError::NotRepresented("transpose value".into()))
    }

    /// Normality of both sides, local isomorphism of `Γ` and `Δ`, the
    /// covering condition, and agreement of `E_Γ` with `E_Δ`.
    pub fn verify(&self) -> Report {
        let suite = "cxn";
        let mut report = Report::new();
        report.extend(verify_normal_category(&self.c, &self.gamma).prefixed("C:"));
        report.extend(verify_normal_category(&self.d, &self.delta).prefixed("D:"));

        for (name, base, cones) in [("Γ", &self.c, &self.gamma), ("Δ", &self.d, &self.delta)] {
            let mut ck = Check::new(suite, &format!("{name}:idempotent-cones"));
            for g in cones {
                ck.case(validate_cone(base, g).is_ok() && base.identity(g.apex) == g.components[g.apex], || g.display(base));
            }
            report.push(ck);
        }

        for (name, f, src, dual) in [
            ("Γ", &self.gamma_functor, &self.d, &self.dual_c),
            ("Δ", &self.delta_functor, &self.c, &self.dual_d),
        ] {
            match local_iso_check(f, src, &dual.category) {
                Ok(r) => report.extend(r.with_suite(suite).prefixed(&format!("{name}:"))),
                Err(e) => report.single(suite, &format!("{name}:functor"), false, || e.to_string()),
            }
        }

        let mut cover = Check::new(suite, "covering");
        for x in self.c.objects() {
            cover.case(self.e_gamma.iter().any(|&(c, _)| c == x), || format!("{} lies in no M-set", self.c.object_label(x)));
        }
        let e_delta = self.e_delta();
        for y in self.d.objects() {
            cover.case(e_delta.iter().any(|&(d, _)| d == y), || format!("{} lies in no dual M-set", self.d.object_label(y)));
        }
        report.push(cover);

        let flipped: Vec<(ObjId, ObjId)> = {
            let mut v: Vec<_> = e_delta.iter().map(|&(d, c)| (c, d)).collect();
            v.sort_unstable();
            v
        };
        report.single(suite, "pair-duality", flipped == self.e_gamma, || {
            format!("E_Γ has {} pairs, E_Δ has {}", self.e_gamma.len(), flipped.len())
        });

        let mut m_sets = Check::new(suite, "m-set-of-h-functor");
        for y in self.d.objects() {
            let stored = self.dual_c.m_set(&self.c, self.gamma_functor.objects[y]);
            m_sets.case(stored == m_set_of_cone(&self.c, &self.gamma[y]), || {
                format!("M-sets differ for two representatives of Γ({})", self.d.object_label(y))
            });
        }
        report.push(m_sets);

        let mut inv = Check::new(suite, "transpose-involution");
        for &(c1, d1) in &self.e_gamma {
            for &(c2, d2) in &self.e_gamma {
                for &f in self.c.hom(c1, c2) {
                    let back = self
                        .transpose(Part::C, f, (c1, d1), (c2, d2))
                        .and_then(|g| self.transpose(Part::D, g, (c2, d2), (c1, d1)));
                    inv.case(back == Ok(f), || format!("transpose of {} does not return", self.c.describe(f)));
                }
            }
        }
        report.push(inv);
        report
    }
}

/// (M1) and (M2) for `m = (F, G): Γ -> Γ'`, plus inclusion preservation.
pub fn verify_cxn_morphism(f: &Functor, g: &Functor, x: &CrossConnection, y: &CrossConnection) -> Report {
    let suite = "cxn-morphism";
    let mut report = Report::new();
    for (name, fun, src, tgt) in [("F", f, &x.c, &y.c), ("G", g, &x.d, &y.d)] {
        if let Err(e) = crate::category::check_functor(fun, src, tgt) {
            report.single(suite, &format!("{name}:functor"), false, || e.to_string());
            return report;
        }
        let mut incl = Check::new(suite, &format!("{name}:inclusion-preserving"));
        for a in src.objects() {
            for b in src.objects() {
                if let Some(j) = src.inclusion(a, b) {
                    incl.case(tgt.inclusion(fun.objects[a], fun.objects[b]) == Some(fun.morphisms[j]), || src.describe(j));
                }
            }
        }
        report.push(incl);
    }

    let mut m1 = Check::new(suite, "M1");
    for &(c, d) in &x.e_gamma {
        let (fc, gd) = (f.objects[c], g.objects[d]);
        if !m1.case(y.is_paired(fc, gd), || format!("({}, {}) not sent to a pair", x.c.object_label(c), x.d.object_label(d))) {
            continue;
        }
        let (Ok(src), Ok(tgt)) = (x.gamma_cd(c, d), y.gamma_cd(fc, gd)) else {
            m1.fail(format!("no cone at ({}, {})", x.c.object_label(c), x.d.object_label(d)));
            continue;
        };
        for c2 in x.c.objects() {
            m1.case(f.morphisms[src.components[c2]] == tgt.components[f.objects[c2]], || {
                format!(
                    "component at {} of the cone for ({}, {})",
                    x.c.object_label(c2),
                    x.c.object_label(c),
                    x.d.object_label(d)
                )
            });
        }
    }
    report.push(m1);

    let mut m2 = Check::new(suite, "M2");
    for &(c1, d1) in &x.e_gamma {
        for &(c2, d2) in &x.e_gamma {
            for &h in x.c.hom(c1, c2) {
                let lhs = x.transpose(Part::C, h, (c1, d1), (c2, d2)).map(|t| g.morphisms[t]);
                let rhs = y.transpose(Part::C, f.morphisms[h], (f.objects[c1], g.objects[d1]), (f.objects[c2], g.objects[d2]));
                m2.case(lhs.is_ok() && lhs == rhs, || format!("transpose of {} is not preserved", x.c.describe(h)));
            }
        }
    }
    report.push(m2);
    report
}
