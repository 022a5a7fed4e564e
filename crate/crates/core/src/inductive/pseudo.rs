//! The p-relation on an inductive groupoid and the pseudo-product that
//! turns its classes back into a regular semigroup.

use super::{InductiveError, OrderedGroupoid};
use crate::relation::Relation;
use crate::report::{Check, Report};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PClasses {
    /// Class index of each morphism; classes are numbered by least member.
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

/// `x p y`: domains R-related, codomains L-related, and
/// `x ε(r(x), r(y)) = ε(d(x), d(y)) y`.
pub fn p_related<G: OrderedGroupoid + ?Sized>(g: &G, x: usize, y: usize) -> bool {
    let e = g.biorder();
    let (dx, dy, rx, ry) = (g.dom(x), g.dom(y), g.cod(x), g.cod(y));
    if !e.r_related(dx, dy) || !e.l_related(rx, ry) {
        return false;
    }
    let left = g.evaluate_pair(rx, ry).and_then(|c| g.compose(x, c));
    let right = g.evaluate_pair(dx, dy).and_then(|c| g.compose(c, y));
    left.is_some() && left == right
}

fn p_relation<G: OrderedGroupoid + ?Sized>(g: &G) -> Relation {
    Relation::from_fn(g.morphism_count(), |x, y| p_related(g, x, y))
}

/// Reflexivity, symmetry and transitivity of p, checked exhaustively.
pub fn verify_p_equivalence<G: OrderedGroupoid + ?Sized>(g: &G) -> Report {
    let p = p_relation(g);
    let n = p.size();
    let mut c = Check::new("igroupoid", "p-equivalence");
    for x in 0..n {
        c.case(p.contains(x, x), || format!("not reflexive at {}", g.describe(x)));
        for y in p.image(x) {
            c.case(p.contains(y, x), || format!("not symmetric at {} {}", g.describe(x), g.describe(y)));
        }
    }
    if let Some((a, b, d)) = p.transitivity_witness() {
        c.fail(format!("not transitive at {} {} {}", g.describe(a), g.describe(b), g.describe(d)));
    } else {
        c.case(true, String::new);
    }
    let mut r = Report::new();
    r.push(c);
    r
}

pub fn p_classes<G: OrderedGroupoid + ?Sized>(g: &G) -> PClasses {
    let p = p_relation(g);
    let n = g.morphism_count();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (x..n).filter(|&y| class_of[y] == usize::MAX && p.contains(x, y)).collect();
        for &y in &members {
            class_of[y] = classes.len();
        }
        classes.push(members);
    }
    PClasses { class_of, classes }
}

/// `(x ⇂ r(x)h) ε(r(x)h, h) ε(h, h d(y)) (h d(y) ↿ y)` for a sandwich
/// element `h` of `(r(x), d(y))`.
pub fn pseudo_product_with<G: OrderedGroupoid + ?Sized>(g: &G, x: usize, y: usize, h: usize) -> Option<usize> {
    let e = g.biorder();
    let (rx, dy) = (g.cod(x), g.dom(y));
    let k1 = e.product(rx, h)?;
    let k2 = e.product(h, dy)?;
    let parts = [g.corestrict(x, k1)?, g.evaluate_pair(k1, h)?, g.evaluate_pair(h, k2)?, g.restrict(y, k2)?];
    g.compose_all(&parts)
}

/// Class of the pseudo-product of two classes, using the least
/// representatives and the first sandwich element.
pub fn pseudo_product<G: OrderedGroupoid + ?Sized>(g: &G, pc: &PClasses, a: usize, b: usize) -> Option<usize> {
    let (x, y) = (pc.classes[a][0], pc.classes[b][0]);
    let h = *g.biorder().sandwich_set(g.cod(x), g.dom(y)).first()?;
    pseudo_product_with(g, x, y, h).map(|m| pc.class_of[m])
}

/// Tries every representative pair and every sandwich element.
pub fn pseudo_product_invariance<G: OrderedGroupoid + ?Sized>(g: &G, pc: &PClasses) -> Report {
    let e = g.biorder();
    let mut c = Check::new("igroupoid", "pseudo-product-invariance");
    for a in 0..pc.classes.len() {
        for b in 0..pc.classes.len() {
            let expected = pseudo_product(g, pc, a, b);
            for &x in &pc.classes[a] {
                for &y in &pc.classes[b] {
                    let sandwich = e.sandwich_set(g.cod(x), g.dom(y));
                    if sandwich.is_empty() {
                        c.fail(format!("empty sandwich set for {} {}", g.describe(x), g.describe(y)));
                    }
                    for h in sandwich {
                        let got = pseudo_product_with(g, x, y, h).map(|m| pc.class_of[m]);
                        c.case(got.is_some() && got == expected, || {
                            format!("{} * {} via {}", g.describe(x), g.describe(y), e.label(h))
                        });
                    }
                }
            }
        }
    }
    let mut r = Report::new();
    r.push(c);
    r
}

/// The semigroup of p-classes under the pseudo-product.
pub fn reconstruct_semigroup<G: OrderedGroupoid + ?Sized>(
    g: &G,
    name: &str,
) -> Result<(FiniteSemigroup, PClasses), InductiveError> {
    let pc = p_classes(g);
    let k = pc.classes.len();
    let mut table = vec![vec![0; k]; k];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            let (x, y) = (pc.classes[a][0], pc.classes[b][0]);
            *cell = pseudo_product(g, &pc, a, b).ok_or(InductiveError::NotComposable { cod: g.cod(x), dom: g.dom(y) })?;
        }
    }
    let labels = pc.classes.iter().map(|c| g.class_label(c[0])).collect();
    let s = FiniteSemigroup::from_cayley(table, name)?.with_labels(labels);
    Ok((s, pc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::inductive::InductiveGroupoid;
    use crate::semigroup::find_isomorphism;

    #[test]
    fn classes_are_first_coordinates() {
        for s in corpus::all() {
            let g = InductiveGroupoid::build(&s).unwrap();
            let pc = p_classes(&g);
            assert_eq!(pc.classes.len(), s.order(), "{}", s.name());
            for class in &pc.classes {
                let x = g.morphism(class[0]).x;
                assert!(class.iter().all(|&m| g.morphism(m).x == x));
            }
            assert!(verify_p_equivalence(&g).passed());
        }
    }

    #[test]
    fn brandt_square_of_a_is_zero() {
        let s = corpus::b2();
        let g = InductiveGroupoid::build(&s).unwrap();
        let pc = p_classes(&g);
        let m = g.find(3, 4).unwrap();
        let class = pc.class_of[m];
        let prod = pseudo_product(&g, &pc, class, class).unwrap();
        assert_eq!(g.morphism(pc.classes[prod][0]).x, 0);
    }

    #[test]
    fn products_match_the_table() {
        for s in corpus::all() {
            let g = InductiveGroupoid::build(&s).unwrap();
            let pc = p_classes(&g);
            for a in 0..pc.classes.len() {
                for b in 0..pc.classes.len() {
                    let x = g.morphism(pc.classes[a][0]).x;
                    let y = g.morphism(pc.classes[b][0]).x;
                    let c = pseudo_product(&g, &pc, a, b).unwrap();
                    assert_eq!(g.morphism(pc.classes[c][0]).x, s.mul(x, y));
                }
            }
            assert!(pseudo_product_invariance(&g, &pc).passed());
            let (t, _) = reconstruct_semigroup(&g, "r").unwrap();
            assert!(find_isomorphism(&s, &t).is_some());
        }
    }
}
