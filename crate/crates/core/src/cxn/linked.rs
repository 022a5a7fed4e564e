//! Semigroups of linked cone pairs and the biordered set of `E_Γ`.

use std::collections::HashMap;

use super::{CrossConnection, CxnError};
use crate::biorder::BiorderedSet;
use crate::category::{cone_compose, FiniteCategory, NormalCone};
use crate::relation::Relation;
use crate::semigroup::FiniteSemigroup;

/// Pairs `(γ_a, δ_a)` indexed like the source elements, multiplied by
/// `(γ, δ)(γ', δ') = (γ · γ', δ' · δ)`.
pub struct LinkedPairs {
    pub pairs: Vec<(NormalCone, NormalCone)>,
    pub semigroup: FiniteSemigroup,
    index: HashMap<(NormalCone, NormalCone), usize>,
}

impl LinkedPairs {
    pub fn build(
        c: &FiniteCategory,
        d: &FiniteCategory,
        pairs: Vec<(NormalCone, NormalCone)>,
        labels: Vec<String>,
        name: impl Into<String>,
    ) -> Result<Self, CxnError> {
        let mut index = HashMap::with_capacity(pairs.len());
        for (a, p) in pairs.iter().enumerate() {
            if let Some(b) = index.insert(p.clone(), a) {
                return Err(CxnError::DuplicateLinkedPair { a: b, b: a });
            }
        }
        let n = pairs.len();
        let mut table = vec![vec![0; n]; n];
        for (a, (g, dl)) in pairs.iter().enumerate() {
            for (b, (g2, dl2)) in pairs.iter().enumerate() {
                let prod = (cone_compose(c, g, g2)?, cone_compose(d, dl2, dl)?);
                table[a][b] = *index.get(&prod).ok_or(CxnError::NotClosed)?;
            }
        }
        let semigroup = FiniteSemigroup::from_cayley(table, name)?.with_labels(labels);
        Ok(LinkedPairs { pairs, semigroup, index })
    }

    pub fn position(&self, g: &NormalCone, d: &NormalCone) -> Option<usize> {
        self.index.get(&(g.clone(), d.clone())).copied()
    }
}

/// `E_Γ` with `ω^l` from inclusions in `C`, `ω^r` from inclusions in `D`,
/// and basic products taken in the linked-pair semigroup.
pub fn biorder_of_egamma(x: &CrossConnection, sg: &LinkedPairs) -> Result<BiorderedSet, CxnError> {
    let mut elements = Vec::with_capacity(x.e_gamma.len());
    for &(c, d) in &x.e_gamma {
        let el = sg
            .position(&x.gamma_cd(c, d)?, &x.delta_cd(c, d)?)
            .ok_or_else(|| CxnError::NotRepresented(format!("pair ({}, {})", x.c.object_label(c), x.d.object_label(d))))?;
        elements.push(el);
    }
    let n = elements.len();
    let pairs = &x.e_gamma;
    let omega_l = Relation::from_fn(n, |i, j| x.c.is_subobject(pairs[i].0, pairs[j].0));
    let omega_r = Relation::from_fn(n, |i, j| x.d.is_subobject(pairs[i].1, pairs[j].1));
    let labels = pairs.iter().map(|&(c, d)| format!("({},{})", x.c.object_label(c), x.d.object_label(d))).collect();
    let product = |i: usize, j: usize| {
        let p = sg.semigroup.mul(elements[i], elements[j]);
        elements.iter().position(|&e| e == p)
    };
    Ok(BiorderedSet::from_parts(elements.clone(), labels, omega_l, omega_r, product)?)
}
