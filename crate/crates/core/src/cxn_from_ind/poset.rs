//! Posets of Green classes of idempotents, and the search for normal
//! retractions.

use serde::Serialize;

use crate::biorder::BiorderedSet;
use crate::cxn::Side;
use crate::relation::Relation;
use crate::report::{Check, Report};

/// `E/L` ordered by `ω^l`, or `E/R` ordered by `ω^r`.
#[derive(Clone, Debug)]
pub struct ClassPoset {
    pub labels: Vec<String>,
    /// Idempotents (semigroup indices) in each class, ascending.
    pub classes: Vec<Vec<usize>>,
    /// Least idempotent of each class.
    pub reps: Vec<usize>,
    pub leq: Relation,
}

impl ClassPoset {
    pub fn from_biorder(b: &BiorderedSet, side: Side) -> Self {
        let related = |x: usize, y: usize| match side {
            Side::Left => b.l_related(x, y),
            Side::Right => b.r_related(x, y),
        };
        let mut order: Vec<usize> = (0..b.len()).collect();
        order.sort_by_key(|&i| b.element(i));
        let mut locals: Vec<Vec<usize>> = Vec::new();
        for i in order {
            match locals.iter_mut().find(|c| related(c[0], i)) {
                Some(c) => c.push(i),
                None => locals.push(vec![i]),
            }
        }
        let leq = Relation::from_fn(locals.len(), |a, c| match side {
            Side::Left => b.omega_l(locals[a][0], locals[c][0]),
            Side::Right => b.omega_r(locals[a][0], locals[c][0]),
        });
        let labels = locals
            .iter()
            .map(|c| match side {
                Side::Left => format!("L[{}]", b.label(c[0])),
                Side::Right => format!("R[{}]", b.label(c[0])),
            })
            .collect();
        let classes: Vec<Vec<usize>> = locals.iter().map(|c| c.iter().map(|&i| b.element(i)).collect()).collect();
        let reps = classes.iter().map(|c| c[0]).collect();
        ClassPoset { labels, classes, reps, leq }
    }

    /// A bare poset; each element is its own one-point class.
    pub fn from_order(labels: Vec<String>, leq: Relation) -> Self {
        let n = labels.len();
        ClassPoset { labels, classes: (0..n).map(|i| vec![i]).collect(), reps: (0..n).collect(), leq }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn class_of(&self, e: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&e))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.contains(a, b)
    }

    /// The principal ideal of `a`.
    pub fn ideal(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.leq(x, a)).collect()
    }
}

/// An idempotent normal mapping, as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalRetraction {
    pub apex: usize,
    pub map: Vec<usize>,
}

/// Does `alpha` carry the ideal of `y` isomorphically onto the ideal of `t`?
fn maps_ideal_onto(p: &ClassPoset, alpha: &[usize], y: usize, t: usize) -> bool {
    let src = p.ideal(y);
    let tgt = p.ideal(t);
    if src.len() != tgt.len() {
        return false;
    }
    let mut image: Vec<usize> = src.iter().map(|&z| alpha[z]).collect();
    image.sort_unstable();
    image.dedup();
    image == tgt && src.iter().all(|&u| src.iter().all(|&v| p.leq(u, v) == p.leq(alpha[u], alpha[v])))
}

/// Order preserving, image the ideal of `alpha`'s apex, and every `x`
/// has some `y ≤ x` whose ideal maps isomorphically onto that of `alpha(x)`.
pub fn is_normal_mapping(p: &ClassPoset, alpha: &[usize]) -> bool {
    let n = p.len();
    let mut image: Vec<usize> = alpha.to_vec();
    image.sort_unstable();
    image.dedup();
    let Some(&apex) = image.iter().find(|&&a| image.iter().all(|&b| p.leq(b, a))) else { return false };
    image == p.ideal(apex)
        && (0..n).all(|x| (0..n).all(|y| !p.leq(x, y) || p.leq(alpha[x], alpha[y])))
        && (0..n).all(|x| (0..n).any(|y| p.leq(y, x) && maps_ideal_onto(p, alpha, y, alpha[x])))
}

/// A normal retraction with apex `a`: fixes the ideal of `a` and sends
/// everything else into it, monotonically.
pub fn normal_retraction(p: &ClassPoset, a: usize) -> Option<NormalRetraction> {
    let n = p.len();
    let ideal = p.ideal(a);
    let mut alpha: Vec<Option<usize>> = (0..n).map(|x| p.leq(x, a).then_some(x)).collect();
    let free: Vec<usize> = (0..n).filter(|&x| alpha[x].is_none()).collect();

    fn go(p: &ClassPoset, ideal: &[usize], free: &[usize], k: usize, alpha: &mut Vec<Option<usize>>) -> Option<Vec<usize>> {
        if k == free.len() {
            let full: Vec<usize> = alpha.iter().map(|v| v.expect("assigned")).collect();
            return is_normal_mapping(p, &full).then_some(full);
        }
        let x = free[k];
        for &v in ideal {
            let monotone = (0..p.len()).all(|y| match alpha[y] {
                Some(w) => (!p.leq(x, y) || p.leq(v, w)) && (!p.leq(y, x) || p.leq(w, v)),
                None => true,
            });
            if monotone {
                alpha[x] = Some(v);
                if let Some(found) = go(p, ideal, free, k + 1, alpha) {
                    return Some(found);
                }
                alpha[x] = None;
            }
        }
        None
    }

    go(p, &ideal, &free, 0, &mut alpha).map(|map| NormalRetraction { apex: a, map })
}

/// Every element is the apex of a normal retraction.
pub fn is_regular_poset(p: &ClassPoset) -> Report {
    let mut report = Report::new();
    report.single("section4", "partial-order", p.leq.is_partial_order(), || "class order is not a partial order".into());
    let mut ck = Check::new("section4", "regular-poset");
    for a in 0..p.len() {
        ck.case(normal_retraction(p, a).is_some(), || format!("no normal retraction with apex {}", p.labels[a]));
    }
    report.push(ck);
    report
}
