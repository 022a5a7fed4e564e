//! E-chains: E-paths (consecutive vertices R- or L-related) modulo
//! removal of inessential vertices.
//!
//! A vertex is inessential when it sits between two neighbours that are
//! all R-related or all L-related. The stored form has no inessential
//! vertices and no repeated neighbours, so equality is syntactic.

use thiserror::Error;

use crate::biorder::BiorderedSet;
use crate::report::{Check, Report};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EChainError {
    #[error("empty path")]
    Empty,
    #[error("NotAnEPath: vertices {from} and {to} at position {position} are neither R- nor L-related")]
    NotAnEPath { position: usize, from: usize, to: usize },
    #[error("NotComposable: chain ends at {end} but the next starts at {start}")]
    NotComposable { end: usize, start: usize },
    #[error("NotBelow: {h} is not below {e} in the natural order")]
    NotBelow { h: usize, e: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EChain {
    vertices: Vec<usize>,
}

impl EChain {
    pub fn identity(e: usize) -> Self {
        EChain { vertices: vec![e] }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dom(&self) -> usize {
        self.vertices[0]
    }

    pub fn cod(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_identity(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn invert(&self) -> EChain {
        EChain { vertices: self.vertices.iter().rev().copied().collect() }
    }

    pub fn display(&self, e: &BiorderedSet) -> String {
        let parts: Vec<&str> = self.vertices.iter().map(|&v| e.label(v)).collect();
        format!("c({})", parts.join(","))
    }
}

fn linked(e: &BiorderedSet, a: usize, b: usize) -> bool {
    e.r_related(a, b) || e.l_related(a, b)
}

fn inessential(e: &BiorderedSet, a: usize, b: usize, c: usize) -> bool {
    (e.r_related(a, b) && e.r_related(b, c)) || (e.l_related(a, b) && e.l_related(b, c))
}

/// Reduces an E-path to its canonical chain.
pub fn canonicalize(e: &BiorderedSet, path: &[usize]) -> Result<EChain, EChainError> {
    if path.is_empty() {
        return Err(EChainError::Empty);
    }
    for (position, w) in path.windows(2).enumerate() {
        if !linked(e, w[0], w[1]) {
            return Err(EChainError::NotAnEPath { position, from: w[0], to: w[1] });
        }
    }
    let mut st: Vec<usize> = Vec::with_capacity(path.len());
    for &v in path {
        loop {
            if st.last() == Some(&v) {
                break;
            }
            let k = st.len();
            if k >= 2 && inessential(e, st[k - 2], st[k - 1], v) {
                st.pop();
                continue;
            }
            st.push(v);
            break;
        }
    }
    Ok(EChain { vertices: st })
}

pub fn compose(e: &BiorderedSet, c1: &EChain, c2: &EChain) -> Result<EChain, EChainError> {
    if c1.cod() != c2.dom() {
        return Err(EChainError::NotComposable { end: c1.cod(), start: c2.dom() });
    }
    let mut path = c1.vertices.clone();
    path.extend_from_slice(&c2.vertices[1..]);
    canonicalize(e, &path)
}

/// `h · c` for `h` below the domain of `c`: the chain
/// `h_0 = h e_0`, `h_i = e_i h_{i-1} e_i`.
pub fn act(e: &BiorderedSet, h: usize, c: &EChain) -> Result<EChain, EChainError> {
    if !e.omega(h, c.dom()) {
        return Err(EChainError::NotBelow { h, e: c.dom() });
    }
    let mut path = Vec::with_capacity(c.len());
    let mut cur = e.mul(h, c.dom());
    path.push(cur);
    for &v in &c.vertices[1..] {
        cur = e.mul(e.mul(v, cur), v);
        path.push(cur);
    }
    canonicalize(e, &path)
}

pub fn leq(e: &BiorderedSet, c1: &EChain, c2: &EChain) -> bool {
    e.omega(c1.dom(), c2.dom()) && act(e, c1.dom(), c2).as_ref() == Ok(c1)
}

/// Corestriction of `c` to `f` below its codomain.
pub fn coact(e: &BiorderedSet, c: &EChain, f: usize) -> Result<EChain, EChainError> {
    Ok(act(e, f, &c.invert())?.invert())
}

/// All canonical chains with at most `max_len` vertices.
pub fn enumerate(e: &BiorderedSet, max_len: usize) -> Vec<EChain> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..e.len()).map(|v| vec![v]).collect();
    stack.reverse();
    while let Some(p) = stack.pop() {
        if p.len() < max_len {
            let last = *p.last().unwrap();
            for v in (0..e.len()).rev() {
                if v == last || !linked(e, last, v) {
                    continue;
                }
                let k = p.len();
                if k >= 2 && inessential(e, p[k - 2], last, v) {
                    continue;
                }
                let mut q = p.clone();
                q.push(v);
                stack.push(q);
            }
        }
        out.push(EChain { vertices: p });
    }
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    out
}

/// Ordered-groupoid axioms for the chain groupoid, restricted to
/// chains with at most `max_len` vertices.
pub fn verify_chain_groupoid(e: &BiorderedSet, max_len: usize) -> Report {
    const SUITE: &str = "echain";
    let chains = enumerate(e, max_len);
    let show = |c: &EChain| c.display(e);
    let mut report = Report::new();

    let mut canon = Check::new(SUITE, "canonical-form");
    for c in &chains {
        canon.case(canonicalize(e, c.vertices()).as_ref() == Ok(c), || show(c));
    }
    report.push(canon);

    let mut inv = Check::new(SUITE, "inverse");
    for c in &chains {
        let ok = compose(e, c, &c.invert()) == Ok(EChain::identity(c.dom()));
        inv.case(ok, || show(c));
    }
    report.push(inv);

    let mut assoc = Check::new(SUITE, "associativity");
    for a in &chains {
        for b in chains.iter().filter(|b| b.dom() == a.cod()) {
            let ab = compose(e, a, b).unwrap();
            for c in chains.iter().filter(|c| c.dom() == b.cod()) {
                let left = compose(e, &ab, c).unwrap();
                let right = compose(e, a, &compose(e, b, c).unwrap()).unwrap();
                assoc.case(left == right, || format!("{} {} {}", show(a), show(b), show(c)));
            }
        }
    }
    report.push(assoc);

    let mut order = Check::new(SUITE, "partial-order");
    for a in &chains {
        order.case(leq(e, a, a), || format!("not reflexive at {}", show(a)));
        for b in chains.iter().filter(|b| leq(e, a, b)) {
            if a != b {
                order.case(!leq(e, b, a), || format!("{} and {}", show(a), show(b)));
            }
            for c in chains.iter().filter(|c| leq(e, b, c)) {
                order.case(leq(e, a, c), || format!("{} <= {} <= {}", show(a), show(b), show(c)));
            }
        }
    }
    report.push(order);

    let below = |x: &EChain| -> Vec<EChain> {
        e.below(x.dom()).into_iter().map(|h| act(e, h, x).expect("h below domain")).collect()
    };

    let mut og1 = Check::new(SUITE, "OG1");
    for x in &chains {
        let bx = below(x);
        for y in chains.iter().filter(|y| y.dom() == x.cod()) {
            let xy = compose(e, x, y).unwrap();
            let by = below(y);
            for u in &bx {
                for v in by.iter().filter(|v| v.dom() == u.cod()) {
                    let uv = compose(e, u, v).unwrap();
                    og1.case(leq(e, &uv, &xy), || format!("u={} v={} x={} y={}", show(u), show(v), show(x), show(y)));
                }
            }
        }
    }
    report.push(og1);

    let mut og2 = Check::new(SUITE, "OG2");
    for x in &chains {
        for u in below(x) {
            og2.case(leq(e, &u.invert(), &x.invert()), || format!("{} <= {}", show(&u), show(x)));
        }
    }
    report.push(og2);

    let mut og3 = Check::new(SUITE, "OG3");
    let mut og3s = Check::new(SUITE, "OG3*");
    for x in &chains {
        for h in e.below(x.dom()) {
            let n = chains.iter().filter(|u| u.dom() == h && leq(e, u, x)).count();
            og3.case(n == 1, || format!("{n} restrictions of {} to {}", show(x), e.label(h)));
        }
        for f in e.below(x.cod()) {
            let n = chains.iter().filter(|u| u.cod() == f && leq(e, u, x)).count();
            let co = coact(e, x, f).expect("f below codomain");
            og3s.case(n == 1 && co.cod() == f && leq(e, &co, x), || {
                format!("{n} corestrictions of {} to {}", show(x), e.label(f))
            });
        }
    }
    report.push(og3);
    report.push(og3s);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn rb(rows: usize, cols: usize) -> BiorderedSet {
        BiorderedSet::from_semigroup(&corpus::rectangular_band(rows, cols)).unwrap()
    }

    #[test]
    fn removes_inessential_vertices() {
        // (0,0) R (0,1) R (0,2) L (1,2) L (2,2) in a 3x3 band
        let e = rb(3, 3);
        let c = canonicalize(&e, &[0, 1, 2, 5, 8]).unwrap();
        assert_eq!(c.vertices(), &[0, 2, 8]);
    }

    #[test]
    fn rectangular_band_chains() {
        let e = rb(2, 2);
        assert_eq!(canonicalize(&e, &[0, 1, 0]).unwrap(), EChain::identity(0));
        let a = canonicalize(&e, &[0, 1]).unwrap();
        let b = canonicalize(&e, &[1, 3]).unwrap();
        assert_eq!(compose(&e, &a, &b).unwrap().vertices(), &[0, 1, 3]);
        assert_eq!(compose(&e, &a, &a.invert()).unwrap(), EChain::identity(0));
        assert_eq!(compose(&e, &a, &a), Err(EChainError::NotComposable { end: 1, start: 0 }));
        let c = canonicalize(&e, &[0, 2]).unwrap();
        assert_eq!(act(&e, 0, &c).unwrap(), c);
        assert!(leq(&e, &c, &c));
    }

    #[test]
    fn rejects_broken_paths() {
        let e = rb(2, 2);
        assert_eq!(canonicalize(&e, &[0, 3]), Err(EChainError::NotAnEPath { position: 0, from: 0, to: 3 }));
        assert_eq!(canonicalize(&e, &[]), Err(EChainError::Empty));
    }

    #[test]
    fn act_needs_natural_order() {
        let e = BiorderedSet::from_semigroup(&corpus::b2()).unwrap();
        let c = EChain::identity(1);
        assert_eq!(act(&e, 2, &c), Err(EChainError::NotBelow { h: 2, e: 1 }));
        assert_eq!(act(&e, 0, &c).unwrap(), EChain::identity(0));
    }

    #[test]
    fn enumeration_is_canonical_and_complete() {
        let e = rb(2, 3);
        let chains = enumerate(&e, 4);
        for c in &chains {
            assert_eq!(&canonicalize(&e, c.vertices()).unwrap(), c);
        }
        // brute force over all paths of length <= 4
        let n = e.len();
        let mut all = std::collections::BTreeSet::new();
        for len in 1..=4u32 {
            for code in 0..n.pow(len) {
                let path: Vec<usize> = (0..len).map(|i| code / n.pow(i) % n).collect();
                if let Ok(c) = canonicalize(&e, &path) {
                    if c.len() <= 4 {
                        all.insert(c);
                    }
                }
            }
        }
        assert_eq!(chains.iter().cloned().collect::<std::collections::BTreeSet<_>>(), all);
    }

    #[test]
    fn chain_groupoid_axioms_on_corpus() {
        for s in corpus::all() {
            let e = BiorderedSet::from_semigroup(&s).unwrap();
            let r = verify_chain_groupoid(&e, 4);
            assert!(r.passed(), "{}: {r}", s.name());
        }
    }
}
