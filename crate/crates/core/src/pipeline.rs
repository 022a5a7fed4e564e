//! Named verification suites and the round trips, run over one semigroup.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::biorder::{biorder_isomorphic, BiorderError, BiorderedSet};
use crate::cxn::{build_gamma_s, verify_gamma_s, CxnError};
use crate::cxn_from_ind::{build_gamma_g, verify_section4};
use crate::echain::{self, verify_chain_groupoid};
use crate::ind_from_cxn::{verify_phi, GammaGroupoid};
use crate::inductive::{
    pseudo_product_invariance, reconstruct_semigroup, verify_inductive_axioms, verify_ordered_axioms,
    verify_p_equivalence, InductiveError, InductiveGroupoid, OrderedGroupoid,
};
use crate::report::{Check, Report};
use crate::semigroup::{find_isomorphism, FiniteSemigroup, SemigroupError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Green,
    Biorder,
    Echain,
    Igroupoid,
    Cxn,
    Section3,
    Section4,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Green, Suite::Biorder, Suite::Echain, Suite::Igroupoid, Suite::Cxn, Suite::Section3, Suite::Section4];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Green => "green",
            Suite::Biorder => "biorder",
            Suite::Echain => "echain",
            Suite::Igroupoid => "igroupoid",
            Suite::Cxn => "cxn",
            Suite::Section3 => "section3",
            Suite::Section4 => "section4",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::ALL.map(Suite::name).join(", ")))
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Biorder(#[from] BiorderError),
    #[error(transparent)]
    Inductive(#[from] InductiveError),
    #[error(transparent)]
    Cxn(#[from] CxnError),
}

/// Reports from the selected suites plus sizes of what was built.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteRun {
    pub semigroup: String,
    pub counts: BTreeMap<String, usize>,
    pub report: Report,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

pub fn run_suites(s: &FiniteSemigroup, suites: &[Suite], max_len: usize) -> Result<SuiteRun, PipelineError> {
    s.require_regular()?;
    let mut counts = BTreeMap::new();
    let mut report = Report::new();
    counts.insert("elements".into(), s.order());
    counts.insert("idempotents".into(), s.idempotents().len());

    let needs = |x: &[Suite]| suites.iter().any(|s| x.contains(s));
    let e = BiorderedSet::from_semigroup(s)?;
    if suites.contains(&Suite::Green) {
        report.extend(verify_green(s));
    }
    if suites.contains(&Suite::Biorder) {
        report.extend(verify_biorder(s, &e));
    }
    if suites.contains(&Suite::Echain) {
        counts.insert("echains".into(), echain::enumerate(&e, max_len).len());
        report.extend(verify_chain_groupoid(&e, max_len));
    }
    let g = if needs(&[Suite::Igroupoid, Suite::Section3, Suite::Section4]) { Some(InductiveGroupoid::build(s)?) } else { None };
    if let (true, Some(g)) = (suites.contains(&Suite::Igroupoid), &g) {
        counts.insert("groupoid_morphisms".into(), g.morphism_count());
        report.extend(verify_ordered_axioms(g));
        report.extend(verify_inductive_axioms(g, max_len));
        report.extend(verify_p_equivalence(g));
        report.extend(roundtrip_groupoid(s, g).with_suite("igroupoid"));
    }
    let sc = if needs(&[Suite::Cxn, Suite::Section3, Suite::Section4]) { Some(build_gamma_s(s)?) } else { None };
    if let (true, Some(sc)) = (suites.contains(&Suite::Cxn), &sc) {
        counts.insert("left_objects".into(), sc.left.category.object_count());
        counts.insert("left_morphisms".into(), sc.left.category.morphism_count());
        counts.insert("right_objects".into(), sc.right.category.object_count());
        counts.insert("right_morphisms".into(), sc.right.category.morphism_count());
        report.extend(verify_gamma_s(sc)?);
    }
    if let (true, Some(g), Some(sc)) = (suites.contains(&Suite::Section3), &g, &sc) {
        let gg = GammaGroupoid::build(sc)?;
        counts.insert("paired_isomorphisms".into(), gg.morphism_count());
        report.extend(verify_phi(&gg, g, max_len));
    }
    if let (true, Some(g), Some(sc)) = (suites.contains(&Suite::Section4), &g, &sc) {
        let ig = build_gamma_g(g)?;
        counts.insert("class_left_morphisms".into(), ig.left.category.morphism_count());
        counts.insert("class_right_morphisms".into(), ig.right.category.morphism_count());
        report.extend(verify_section4(g, &ig, sc));
    }
    Ok(SuiteRun { semigroup: s.name().to_string(), counts, report })
}

/// Table, idempotents, inverses and Green's relations, each recomputed
/// from the Cayley table.
pub fn verify_green(s: &FiniteSemigroup) -> Report {
    let suite = "green";
    let mut report = Report::new();
    let n = s.order();
    let green = s.green();

    let mut assoc = Check::new(suite, "associativity");
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assoc.case(s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c)), || format!("({a},{b},{c})"));
            }
        }
    }
    report.push(assoc);

    let mut inv = Check::new(suite, "inverses");
    for x in 0..n {
        let expect: Vec<usize> = (0..n).filter(|&y| s.product(&[x, y, x]) == x && s.product(&[y, x, y]) == y).collect();
        let got = s.inverses_of(x).unwrap_or_default();
        inv.case(!expect.is_empty() && got == expect, || format!("inverses of {}", s.label(x)));
        if s.mul(x, x) == x {
            inv.case(got.contains(&x), || format!("{} is not self-inverse", s.label(x)));
        }
    }
    report.push(inv);

    let left_ideal = |x: usize| -> Vec<usize> {
        let mut v: Vec<usize> = (0..n).map(|t| s.mul(t, x)).chain([x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let right_ideal = |x: usize| -> Vec<usize> {
        let mut v: Vec<usize> = (0..n).map(|t| s.mul(x, t)).chain([x]).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let lid: Vec<Vec<usize>> = (0..n).map(left_ideal).collect();
    let rid: Vec<Vec<usize>> = (0..n).map(right_ideal).collect();
    let mut rel = Check::new(suite, "principal-ideals");
    let mut hd = Check::new(suite, "h-and-d");
    for a in 0..n {
        for b in 0..n {
            let (l, r) = (lid[a] == lid[b], rid[a] == rid[b]);
            rel.case(green.l_related(a, b) == l && green.r_related(a, b) == r, || format!("{} vs {}", s.label(a), s.label(b)));
            let lr = (0..n).any(|c| lid[a] == lid[c] && rid[c] == rid[b]);
            let rl = (0..n).any(|c| rid[a] == rid[c] && lid[c] == lid[b]);
            hd.case(green.h_related(a, b) == (l && r) && lr == rl && green.d_related(a, b) == lr, || {
                format!("{} vs {}", s.label(a), s.label(b))
            });
        }
    }
    report.push(rel);
    report.push(hd);
    report
}

/// The quasi-orders, the domain and the sandwich sets against the table.
pub fn verify_biorder(s: &FiniteSemigroup, e: &BiorderedSet) -> Report {
    let suite = "biorder";
    let mut report = Report::new();
    let k = e.len();
    let el = |i: usize| e.element(i);
    report.single(suite, "idempotents", e.elements() == s.idempotents().as_slice(), || "element set differs from E(S)".into());
    report.single(suite, "quasi-orders", e.omega_l_relation().is_preorder() && e.omega_r_relation().is_preorder(), || {
        "omega_l or omega_r is not a quasi-order".into()
    });
    let natural = crate::relation::Relation::from_fn(k, |a, b| e.omega(a, b));
    report.single(suite, "natural-order", natural.is_partial_order(), || "omega is not antisymmetric".into());

    let mut table = Check::new(suite, "orders-match-table");
    let mut dom = Check::new(suite, "domain");
    for a in 0..k {
        for b in 0..k {
            let (x, y) = (el(a), el(b));
            table.case(e.omega_l(a, b) == (s.mul(x, y) == x) && e.omega_r(a, b) == (s.mul(y, x) == x), || {
                format!("{} vs {}", e.label(a), e.label(b))
            });
            let related = |p, q| e.omega_l(p, q) || e.omega_r(p, q);
            let in_dom = related(a, b) || related(b, a);
            let ok = match e.product(a, b) {
                Some(p) => in_dom && el(p) == s.mul(x, y),
                None => !in_dom,
            };
            dom.case(ok, || format!("({}, {})", e.label(a), e.label(b)));
        }
    }
    report.push(table);
    report.push(dom);

    let mut sw = Check::new(suite, "sandwich-sets");
    for a in 0..k {
        for b in 0..k {
            let m = e.m_set(a, b);
            let sand = e.sandwich_set(a, b);
            let ok = !sand.is_empty()
                && sand.iter().all(|&h| m.contains(&h) && m.iter().all(|&g| e.sandwich_preceq(a, b, g, h)));
            sw.case(ok, || format!("S({}, {})", e.label(a), e.label(b)));
        }
    }
    report.push(sw);
    report
}

/// The semigroup of p-classes of G(S) is S again, for every choice of
/// sandwich element.
pub fn roundtrip_groupoid(s: &FiniteSemigroup, g: &InductiveGroupoid) -> Report {
    let suite = "roundtrip";
    let mut report = Report::new();
    match reconstruct_semigroup(g, &format!("P({})", s.name())) {
        Ok((t, pc)) => {
            report.single(suite, "groupoid-roundtrip", find_isomorphism(&t, s).is_some(), || {
                format!("semigroup of p-classes ({} elements) is not isomorphic", t.order())
            });
            report.extend(pseudo_product_invariance(g, &pc).with_suite(suite));
        }
        Err(err) => report.single(suite, "groupoid-roundtrip", false, || err.to_string()),
    }
    report
}

/// Both round trips, and the biorder coherence of all three idempotent sets.
pub fn roundtrip(s: &FiniteSemigroup) -> Result<Report, PipelineError> {
    let suite = "roundtrip";
    let g = InductiveGroupoid::build(s)?;
    let sc = build_gamma_s(s)?;
    let mut report = roundtrip_groupoid(s, &g);
    let linked = sc.linked_pairs()?;
    report.single(suite, "cxn-roundtrip", find_isomorphism(&linked.semigroup, s).is_some(), || {
        "semigroup of linked pairs is not isomorphic".into()
    });
    let e_s = BiorderedSet::from_semigroup(s)?;
    let e_gamma = crate::cxn::biorder_of_egamma(&sc.cxn, &linked)?;
    let ig = build_gamma_g(&g)?;
    let e_g = crate::cxn::biorder_of_egamma(&ig.cxn, &ig.linked_semigroup()?)?;
    report.single(suite, "biorder-coherence", biorder_isomorphic(&e_s, &e_gamma).is_some() && biorder_isomorphic(&e_s, &e_g).is_some(), || {
        "idempotent sets are not biorder isomorphic".into()
    });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_on_brandt() {
        let run = run_suites(&corpus::b2(), &Suite::ALL, 4).unwrap();
        assert!(run.passed(), "{}", run.report);
        assert_eq!(run.counts["idempotents"], 3);
        for s in Suite::ALL {
            assert!(run.report.records.iter().any(|r| r.suite == s.name()), "{s}");
        }
    }

    #[test]
    fn roundtrips_on_corpus() {
        for s in corpus::all() {
            let r = roundtrip(&s).unwrap();
            assert!(r.passed(), "{}\n{r}", s.name());
        }
    }

    #[test]
    fn nonregular_is_rejected() {
        // a, a^2, a^3 = a^4
        let s = FiniteSemigroup::from_cayley(vec![vec![1, 2, 2], vec![2, 2, 2], vec![2, 2, 2]], "N3").unwrap();
        assert!(matches!(run_suites(&s, &[Suite::Green], 4), Err(PipelineError::Semigroup(SemigroupError::NotRegular(_)))));
    }
}
