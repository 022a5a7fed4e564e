//! Invariants over random regular semigroups: relabelled corpus members,
//! rectangular bands, and regular transformation semigroups of degree 3.

use proptest::prelude::*;
use proptest::sample::Index;

use regsemi::biorder::BiorderedSet;
use regsemi::corpus;
use regsemi::echain::{self, EChain};
use regsemi::inductive::{verify_ordered_axioms, InductiveGroupoid, OrderedGroupoid};
use regsemi::pipeline::{run_suites, verify_biorder, verify_green, Suite};
use regsemi::semigroup::find_isomorphism;
use regsemi::FiniteSemigroup;

fn relabelled_corpus() -> impl Strategy<Value = FiniteSemigroup> {
    (0..corpus::NAMES.len(), any::<u64>()).prop_map(|(i, seed)| {
        let s = corpus::by_name(corpus::NAMES[i]).unwrap();
        // deterministic shuffle from the seed
        let mut perm: Vec<usize> = (0..s.order()).collect();
        let mut x = seed | 1;
        for k in (1..perm.len()).rev() {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            perm.swap(k, (x % (k as u64 + 1)) as usize);
        }
        s.relabel(&perm)
    })
}

fn rectangular_band() -> impl Strategy<Value = FiniteSemigroup> {
    (1usize..=3, 1usize..=3).prop_map(|(r, c)| corpus::rectangular_band(r, c))
}

fn transformation_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop::collection::vec(prop::collection::vec(0usize..3, 3), 1..=3)
        .prop_map(|gens| FiniteSemigroup::from_generators(3, &gens, "T").unwrap())
        .prop_filter("regular", |s| s.is_regular())
}

fn regular_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    prop_oneof![relabelled_corpus(), rectangular_band(), transformation_semigroup()]
}

/// A random walk along R- and L-related idempotents.
fn random_path(e: &BiorderedSet, start: Index, steps: &[Index]) -> Vec<usize> {
    let mut path = vec![start.index(e.len())];
    for step in steps {
        let last = *path.last().unwrap();
        let next: Vec<usize> = (0..e.len()).filter(|&f| e.r_related(last, f) || e.l_related(last, f)).collect();
        path.push(next[step.index(next.len())]);
    }
    path
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn green_relations_cohere(s in regular_semigroup()) {
        let r = verify_green(&s);
        prop_assert!(r.passed(), "{}", r);
        for x in s.elements() {
            prop_assert!(!s.inverses_of(x).unwrap().is_empty());
        }
        for e in s.idempotents() {
            prop_assert!(s.inverses_of(e).unwrap().contains(&e));
        }
    }

    #[test]
    fn isomorphism_search_is_symmetric(s in regular_semigroup(), seed in any::<u64>()) {
        let n = s.order();
        let perm: Vec<usize> = (0..n).map(|i| (i + (seed as usize % n)) % n).collect();
        let t = s.relabel(&perm);
        prop_assert!(find_isomorphism(&s, &t).is_some());
        prop_assert!(find_isomorphism(&t, &s).is_some());
    }

    #[test]
    fn biorder_invariants(s in regular_semigroup()) {
        let e = BiorderedSet::from_semigroup(&s).unwrap();
        let r = verify_biorder(&s, &e);
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn chain_canonical_form(s in regular_semigroup(), start in any::<Index>(), steps in prop::collection::vec(any::<Index>(), 0..6)) {
        let e = BiorderedSet::from_semigroup(&s).unwrap();
        let path = random_path(&e, start, &steps);
        let c = echain::canonicalize(&e, &path).unwrap();
        prop_assert_eq!(echain::canonicalize(&e, c.vertices()).unwrap(), c.clone());
        prop_assert_eq!(c.invert().invert(), c.clone());
        prop_assert_eq!(c.dom(), path[0]);
        prop_assert_eq!(c.cod(), *path.last().unwrap());
        prop_assert_eq!(echain::compose(&e, &c, &c.invert()).unwrap(), EChain::identity(path[0]));
    }

    #[test]
    fn groupoid_is_ordered(s in regular_semigroup()) {
        let g = InductiveGroupoid::build(&s).unwrap();
        let r = verify_ordered_axioms(&g);
        prop_assert!(r.passed(), "{}", r);
        for m in 0..g.morphism_count() {
            prop_assert_eq!(g.inverse(g.inverse(m)), m);
            for h in g.biorder().below(g.dom(m)) {
                let r = g.restrict(m, h).unwrap();
                prop_assert!(g.leq(r, m));
                prop_assert_eq!(g.dom(r), h);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn every_suite_passes(s in regular_semigroup()) {
        let run = run_suites(&s, &Suite::ALL, 3).unwrap();
        prop_assert!(run.passed(), "{}\n{}", s.name(), run.report);
    }
}
