//! Criteria 1 to 8, one PASS/FAIL line each. Exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use regsemi::biorder::{is_biorder_isomorphism, BiorderedSet};
use regsemi::category::{verify_normal_category, CatMorphism, FiniteCategory};
use regsemi::corpus;
use regsemi::cxn::{build_gamma_s, verify_cxn_morphism};
use regsemi::cxn_from_ind::{build_gamma_g, inclusion_compatible_twists, twist, verify_section4};
use regsemi::echain;
use regsemi::ind_from_cxn::{verify_phi, GammaGroupoid};
use regsemi::inductive::{
    p_classes, pseudo_product_invariance, reconstruct_semigroup, verify_inductive_axioms, verify_ordered_axioms,
    InductiveGroupoid, OrderedGroupoid,
};
use regsemi::inductive::faults::{DropOrderPair, OverrideEvaluation};
use regsemi::report::Report;
use regsemi::semigroup::find_isomorphism;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn require(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn clean(r: &Report, what: &str) -> Result<(), String> {
    match r.failures().next() {
        None => Ok(()),
        Some(f) => Err(format!("{what}: {}/{} {}", f.suite, f.check, f.witness.as_deref().unwrap_or(""))),
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut cases = 0;
    for s in corpus::all() {
        let g = InductiveGroupoid::build(&s).map_err(|e| e.to_string())?;
        let mut r = verify_ordered_axioms(&g);
        r.extend(verify_inductive_axioms(&g, 4));
        for name in ["OG1", "OG2", "OG3", "OG3*", "IG1", "IG1*", "IG2"] {
            require(r.get(name).is_some(), || format!("{}: {name} not run", s.name()))?;
        }
        clean(&r, s.name())?;
        cases += r.records.iter().map(|x| x.instances).sum::<usize>();
    }
    let t = start.elapsed();
    require(t < Duration::from_secs(60), || format!("took {t:?}"))?;
    Ok(format!("{cases} cases in {t:.2?}"))
}

fn criterion_2() -> Outcome {
    for s in corpus::all() {
        let g = InductiveGroupoid::build(&s).map_err(|e| e.to_string())?;
        let (t, pc) = reconstruct_semigroup(&g, "P").map_err(|e| e.to_string())?;
        require(find_isomorphism(&t, &s).is_some(), || format!("{}: p-classes not isomorphic", s.name()))?;
        clean(&pseudo_product_invariance(&g, &pc), s.name())?;
        require(pc.classes.len() == p_classes(&g).classes.len(), || "p-classes unstable".into())?;
    }
    Ok("all six rebuilt from G(S)".into())
}

fn criterion_3() -> Outcome {
    for s in corpus::all() {
        let sc = build_gamma_s(&s).map_err(|e| e.to_string())?;
        let lp = sc.linked_pairs().map_err(|e| e.to_string())?;
        require(find_isomorphism(&lp.semigroup, &s).is_some(), || format!("{}: linked pairs not isomorphic", s.name()))?;
        // pair a is (ρ^a, λ^a), so its idempotents must be exactly E(S)
        require(lp.semigroup.idempotents() == s.idempotents(), || format!("{}: idempotent pairs differ", s.name()))?;
    }
    Ok("all six rebuilt from the cross-connection".into())
}

fn criterion_4() -> Outcome {
    for s in corpus::all() {
        let sc = build_gamma_s(&s).map_err(|e| e.to_string())?;
        let g = InductiveGroupoid::build(&s).map_err(|e| e.to_string())?;
        let gg = GammaGroupoid::build(&sc).map_err(|e| e.to_string())?;
        let r = verify_phi(&gg, &g, 4);
        for name in ["phi-objects", "phi-functor", "phi-faithful", "phi-full", "phi-order", "evaluation-square", "G(Γ):IG2"] {
            require(r.get(name).is_some(), || format!("{}: {name} not run", s.name()))?;
        }
        clean(&r, s.name())?;
    }
    Ok("groupoid of paired isomorphisms is inductive and isomorphic to G(S)".into())
}

fn criterion_5() -> Outcome {
    for s in corpus::all() {
        let g = InductiveGroupoid::build(&s).map_err(|e| e.to_string())?;
        let sc = build_gamma_s(&s).map_err(|e| e.to_string())?;
        let ig = build_gamma_g(&g).map_err(|e| e.to_string())?;
        let r = verify_section4(&g, &ig, &sc);
        for name in ["L:NC1", "L:NC2", "L:NC3", "R:NC1", "R:NC2", "R:NC3", "M1", "M2", "L:regular-poset", "R:regular-poset"] {
            require(r.get(name).is_some(), || format!("{}: {name} not run", s.name()))?;
        }
        clean(&r, s.name())?;
    }
    Ok("class categories are normal and cross-connected isomorphically".into())
}

fn criterion_6() -> Outcome {
    for s in corpus::all() {
        let e_s = BiorderedSet::from_semigroup(&s).map_err(|e| e.to_string())?;
        let sc = build_gamma_s(&s).map_err(|e| e.to_string())?;
        let e_gs = regsemi::cxn::biorder_of_egamma(&sc.cxn, &sc.linked_pairs().map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let to_gs = sc.egamma_map(&e_s).ok_or("no pairing map")?;
        require(is_biorder_isomorphism(&e_s, &e_gs, &to_gs), || format!("{}: E(S) vs pairs of ideals", s.name()))?;

        let g = InductiveGroupoid::build(&s).map_err(|e| e.to_string())?;
        let ig = build_gamma_g(&g).map_err(|e| e.to_string())?;
        let e_gg = regsemi::cxn::biorder_of_egamma(&ig.cxn, &ig.linked_semigroup().map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let to_gg = ig.pair_positions(&e_s).ok_or("no pairing map")?;
        require(is_biorder_isomorphism(&e_s, &e_gg, &to_gg), || format!("{}: E(S) vs pairs of classes", s.name()))?;
    }
    Ok("three idempotent sets agree".into())
}

fn criterion_7() -> Outcome {
    for (name, count) in [("T3", 10), ("T2", 3), ("B2", 3), ("RB22", 4), ("I2", 4)] {
        let got = corpus::by_name(name).unwrap().idempotents().len();
        require(got == count, || format!("|E({name})| = {got}"))?;
    }
    let mut pairs = 0;
    for s in corpus::all() {
        let sc = build_gamma_s(&s).map_err(|e| e.to_string())?;
        for e in s.idempotents() {
            for f in s.idempotents() {
                let hom = sc.left.category.hom(sc.left.object_of(e), sc.left.object_of(f)).len();
                let expect = s.sandwich_hom(e, f).len();
                require(hom == expect, || format!("{}: |L(S{e}, S{f})| = {hom}, |eSf| = {expect}", s.name()))?;
                pairs += 1;
            }
        }
    }
    let rb = BiorderedSet::from_semigroup(&corpus::rb22()).map_err(|e| e.to_string())?;
    let local = |x| rb.local(x).unwrap();
    let sw: Vec<usize> = rb.sandwich_set(local(0), local(3)).into_iter().map(|i| rb.element(i)).collect();
    require(sw == vec![2], || format!("S((0,0),(1,1)) = {sw:?}"))?;
    Ok(format!("idempotent counts, {pairs} hom-set sizes, RB22 sandwich set"))
}

fn criterion_8() -> Outcome {
    let fired = |r: &Report, name: &str| r.failed(name) && r.get(name).is_some_and(|x| x.witness.is_some());

    let b2 = corpus::b2();
    let g = InductiveGroupoid::build(&b2).map_err(|e| e.to_string())?;
    let m = g.find(3, 4).ok_or("no (a,a')")?;
    let r = g.restrict_formula(m, g.object_of(0).unwrap()).map_err(|e| e.to_string())?;
    let og3 = verify_ordered_axioms(&DropOrderPair { inner: &g, below: r, above: m });
    require(fired(&og3, "OG3"), || "OG3 fault not detected".into())?;

    let t3 = corpus::t3();
    let g = InductiveGroupoid::build(&t3).map_err(|e| e.to_string())?;
    let e = g.biorder();
    let sq = e.singular_squares().into_iter().find(|sq| sq[0] != sq[1]).ok_or("no singular square")?;
    let chain = echain::canonicalize(e, &[sq[0], sq[1]]).map_err(|e| e.to_string())?;
    let ig2 = verify_inductive_axioms(&OverrideEvaluation { inner: &g, chain, image: g.identity(sq[0]) }, 4);
    require(fired(&ig2, "IG2"), || "IG2 fault not detected".into())?;

    // 0 ⊆ 1 with nothing from 1 back to 0
    let ms = [(0, 0), (0, 1), (1, 1)].map(|(dom, cod)| CatMorphism { dom, carrier: 0, cod }).to_vec();
    let chain2 = FiniteCategory::build("2", vec!["0".into(), "1".into()], ms, |f, g| {
        Some(CatMorphism { dom: f.dom, carrier: 0, cod: g.cod })
    }, &[CatMorphism { dom: 0, carrier: 0, cod: 1 }])
    .map_err(|e| e.to_string())?;
    let nc2 = verify_normal_category(&chain2, &[]);
    require(fired(&nc2, "NC2"), || "NC2 fault not detected".into())?;

    let t2 = corpus::t2();
    let g = InductiveGroupoid::build(&t2).map_err(|e| e.to_string())?;
    let sc = build_gamma_s(&t2).map_err(|e| e.to_string())?;
    let ig = build_gamma_g(&g).map_err(|e| e.to_string())?;
    let fl = ig.left.to_translations(&sc.left).map_err(|e| e.to_string())?;
    let fr = ig.right.to_translations(&sc.right).map_err(|e| e.to_string())?;
    let alpha = inclusion_compatible_twists(&sc.right.category).into_iter().next().ok_or("no twist")?;
    let m2 = verify_cxn_morphism(&fl, &twist(&fr, &sc.right.category, &alpha), &ig.cxn, &sc.cxn);
    require(fired(&m2, "M2"), || "M2 fault not detected".into())?;

    Ok("OG3, IG2, NC2 and M2 faults each reported with a witness".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("axiom suites on G(S)", criterion_1),
        ("round trip through G(S)", criterion_2),
        ("round trip through the cross-connection", criterion_3),
        ("paired isomorphisms vs G(S)", criterion_4),
        ("class categories vs ideal categories", criterion_5),
        ("biorder coherence", criterion_6),
        ("desk counts", criterion_7),
        ("fault injection", criterion_8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                all = false;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
