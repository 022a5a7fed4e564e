use super::OrderedGroupoid;
use crate::echain;
use crate::report::{Check, Report};

const SUITE: &str = "igroupoid";

/// Groupoid laws, the partial order, and OG1, OG2, OG3, OG3*.
pub fn verify_ordered_axioms<G: OrderedGroupoid + ?Sized>(g: &G) -> Report {
    let n = g.morphism_count();
    let e = g.biorder();
    let show = |m: usize| g.describe(m);
    let mut report = Report::new();

    let mut ident = Check::new(SUITE, "identity");
    for x in 0..e.len() {
        let i = g.identity(x);
        ident.case(g.dom(i) == x && g.cod(i) == x, || format!("identity at {} has wrong ends", e.label(x)));
    }
    for m in 0..n {
        let ok = g.compose(g.identity(g.dom(m)), m) == Some(m) && g.compose(m, g.identity(g.cod(m))) == Some(m);
        ident.case(ok, || show(m));
    }
    report.push(ident);

    let mut inv = Check::new(SUITE, "inverse");
    for m in 0..n {
        let i = g.inverse(m);
        let ok = g.compose(m, i) == Some(g.identity(g.dom(m))) && g.compose(i, m) == Some(g.identity(g.cod(m)));
        inv.case(ok, || show(m));
    }
    report.push(inv);

    let mut comp = Check::new(SUITE, "composition");
    let mut assoc = Check::new(SUITE, "associativity");
    for a in 0..n {
        for b in 0..n {
            let ab = g.compose(a, b);
            let composable = g.cod(a) == g.dom(b);
            let ends = ab.is_none_or(|ab| g.dom(ab) == g.dom(a) && g.cod(ab) == g.cod(b));
            comp.case(ab.is_some() == composable && ends, || format!("{} {}", show(a), show(b)));
            let Some(ab) = ab else { continue };
            for c in (0..n).filter(|&c| g.dom(c) == g.cod(b)) {
                let left = g.compose(ab, c);
                let right = g.compose(b, c).and_then(|bc| g.compose(a, bc));
                assoc.case(left.is_some() && left == right, || format!("{} {} {}", show(a), show(b), show(c)));
            }
        }
    }
    report.push(comp);
    report.push(assoc);

    let mut order = Check::new(SUITE, "partial-order");
    for a in 0..n {
        order.case(g.leq(a, a), || format!("not reflexive at {}", show(a)));
        for b in (0..n).filter(|&b| b != a && g.leq(a, b)) {
            order.case(!g.leq(b, a), || format!("{} and {}", show(a), show(b)));
            for c in (0..n).filter(|&c| g.leq(b, c)) {
                order.case(g.leq(a, c), || format!("{} <= {} <= {}", show(a), show(b), show(c)));
            }
        }
    }
    report.push(order);

    let below: Vec<Vec<usize>> = (0..n).map(|m| g.below(m)).collect();

    let mut og1 = Check::new(SUITE, "OG1");
    for x in 0..n {
        for y in (0..n).filter(|&y| g.dom(y) == g.cod(x)) {
            let xy = g.compose(x, y);
            for &u in &below[x] {
                for &v in below[y].iter().filter(|&&v| g.dom(v) == g.cod(u)) {
                    let ok = match (g.compose(u, v), xy) {
                        (Some(uv), Some(xy)) => g.leq(uv, xy),
                        _ => false,
                    };
                    og1.case(ok, || format!("u={} v={} x={} y={}", show(u), show(v), show(x), show(y)));
                }
            }
        }
    }
    report.push(og1);

    let mut og2 = Check::new(SUITE, "OG2");
    for (x, bx) in below.iter().enumerate() {
        for &u in bx {
            og2.case(g.leq(g.inverse(u), g.inverse(x)), || format!("{} <= {}", show(u), show(x)));
        }
    }
    report.push(og2);

    let mut og3 = Check::new(SUITE, "OG3");
    let mut og3s = Check::new(SUITE, "OG3*");
    for (x, bx) in below.iter().enumerate() {
        for h in 0..e.len() {
            if g.leq(g.identity(h), g.identity(g.dom(x))) {
                let k = bx.iter().filter(|&&u| g.dom(u) == h).count();
                og3.case(k == 1, || format!("{k} restrictions of {} to {}", show(x), e.label(h)));
            }
            if g.leq(g.identity(h), g.identity(g.cod(x))) {
                let k = bx.iter().filter(|&&u| g.cod(u) == h).count();
                og3s.case(k == 1, || format!("{k} corestrictions of {} to {}", show(x), e.label(h)));
            }
        }
    }
    report.push(og3);
    report.push(og3s);
    report
}

/// Evaluation-functor checks on chains with at most `max_len` vertices,
/// then IG1, its dual, and IG2.
pub fn verify_inductive_axioms<G: OrderedGroupoid + ?Sized>(g: &G, max_len: usize) -> Report {
    let e = g.biorder();
    let n = g.morphism_count();
    let show = |m: usize| g.describe(m);
    let mut report = Report::new();
    let chains = echain::enumerate(e, max_len);

    let mut order_match = Check::new(SUITE, "identity-order");
    for a in 0..e.len() {
        for b in 0..e.len() {
            let ok = g.leq(g.identity(a), g.identity(b)) == e.omega(a, b);
            order_match.case(ok, || format!("{} vs {}", e.label(a), e.label(b)));
        }
    }
    report.push(order_match);

    let mut functor = Check::new(SUITE, "evaluation-functor");
    for c in &chains {
        let m = g.evaluate(c);
        functor.case(g.dom(m) == c.dom() && g.cod(m) == c.cod(), || format!("ends of {}", c.display(e)));
        functor.case(g.evaluate(&c.invert()) == g.inverse(m), || format!("inverse of {}", c.display(e)));
        if c.is_identity() {
            functor.case(m == g.identity(c.dom()), || format!("{} is not an identity", c.display(e)));
        }
        for d in chains.iter().filter(|d| d.dom() == c.cod()) {
            let cd = echain::compose(e, c, d).expect("composable");
            let ok = g.compose(m, g.evaluate(d)) == Some(g.evaluate(&cd));
            functor.case(ok, || format!("{} then {}", c.display(e), d.display(e)));
        }
    }
    report.push(functor);

    let mut ordered = Check::new(SUITE, "evaluation-order");
    for c in &chains {
        for h in e.below(c.dom()) {
            let restricted = echain::act(e, h, c).expect("h below domain");
            let ok = g.restrict(g.evaluate(c), h) == Some(g.evaluate(&restricted));
            ordered.case(ok, || format!("{} restricted to {}", c.display(e), e.label(h)));
        }
    }
    report.push(ordered);

    let mut ig1 = Check::new(SUITE, "IG1");
    let mut ig1d = Check::new(SUITE, "IG1*");
    for x in 0..n {
        let below = e.below(g.dom(x));
        for &e1 in &below {
            let Some(r1) = g.restrict(x, e1) else {
                ig1.fail(format!("{} has no restriction to {}", show(x), e.label(e1)));
                continue;
            };
            let f1 = g.cod(r1);
            for &e2 in &below {
                let Some(r2) = g.restrict(x, e2) else { continue };
                let f2 = g.cod(r2);
                let witness = || format!("x={} e1={} e2={}", show(x), e.label(e1), e.label(e2));
                if e.omega_r(e1, e2) {
                    if !ig1.case(e.omega_r(f1, f2), witness) {
                        continue;
                    }
                    let e12 = e.mul(e1, e2);
                    let f12 = e.mul(f1, f2);
                    let lhs = g.evaluate_pair(e1, e12).zip(g.restrict(x, e12)).and_then(|(a, b)| g.compose(a, b));
                    let rhs = g.evaluate_pair(f1, f12).and_then(|b| g.compose(r1, b));
                    ig1.case(lhs.is_some() && lhs == rhs, witness);
                }
                if e.omega_l(e1, e2) {
                    if !ig1d.case(e.omega_l(f1, f2), witness) {
                        continue;
                    }
                    let e21 = e.mul(e2, e1);
                    let f21 = e.mul(f2, f1);
                    let lhs = g.evaluate_pair(e1, e21).zip(g.restrict(x, e21)).and_then(|(a, b)| g.compose(a, b));
                    let rhs = g.evaluate_pair(f1, f21).and_then(|b| g.compose(r1, b));
                    ig1d.case(lhs.is_some() && lhs == rhs, witness);
                }
            }
        }
    }
    report.push(ig1);
    report.push(ig1d);

    let mut ig2 = Check::new(SUITE, "IG2");
    for sq in e.singular_squares() {
        let [a, b, c, d] = sq;
        let top = g.evaluate_pair(a, b).zip(g.evaluate_pair(b, d)).and_then(|(p, q)| g.compose(p, q));
        let left = g.evaluate_pair(a, c).zip(g.evaluate_pair(c, d)).and_then(|(p, q)| g.compose(p, q));
        ig2.case(top.is_some() && top == left, || {
            format!("[[{},{}],[{},{}]]", e.label(a), e.label(b), e.label(c), e.label(d))
        });
    }
    report.push(ig2);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::inductive::InductiveGroupoid;

    #[test]
    fn corpus_groupoids_are_inductive() {
        for s in corpus::all() {
            let g = InductiveGroupoid::build(&s).unwrap();
            let r = verify_ordered_axioms(&g);
            assert!(r.passed(), "{}:\n{r}", s.name());
            let r = verify_inductive_axioms(&g, 4);
            assert!(r.passed(), "{}:\n{r}", s.name());
            assert!(r.get("IG1").unwrap().instances > 0);
        }
    }
}
