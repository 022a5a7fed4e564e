//! Tagged generating arrows and paths in the free category they generate.

use serde::Serialize;

use crate::category::CatMorphism;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ArrowKind {
    /// From the order on classes.
    Inclusion,
    /// From a structure mapping onto an idempotent below the domain.
    Retraction,
    /// From a morphism of the inductive groupoid.
    Groupoid,
    Composite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TaggedMorphism {
    pub dom: usize,
    pub carrier: usize,
    pub cod: usize,
    pub kind: ArrowKind,
}

impl TaggedMorphism {
    pub fn triple(&self) -> CatMorphism {
        CatMorphism { dom: self.dom, carrier: self.carrier, cod: self.cod }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Quiver {
    pub labels: Vec<String>,
    pub arrows: Vec<TaggedMorphism>,
}

/// A path: identity at `start` when `arrows` is empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn object_count(&self) -> usize {
        self.labels.len()
    }

    pub fn of_kind(&self, kind: ArrowKind) -> impl Iterator<Item = &TaggedMorphism> {
        self.arrows.iter().filter(move |a| a.kind == kind)
    }

    pub fn contains(&self, t: CatMorphism, kind: ArrowKind) -> bool {
        self.arrows.iter().any(|a| a.kind == kind && a.triple() == t)
    }

    /// All paths with at most `max_len` arrows.
    pub fn paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.object_count()).map(|o| Path { start: o, end: o, arrows: vec![] }).collect();
        let mut frontier: Vec<Path> = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for (i, a) in self.arrows.iter().enumerate().filter(|(_, a)| a.dom == p.end) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { start: p.start, end: a.cod, arrows });
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn describe(&self, p: &Path, arrow_label: impl Fn(usize) -> String) -> String {
        if p.arrows.is_empty() {
            format!("1_{}", self.labels[p.start])
        } else {
            p.arrows.iter().map(|&a| arrow_label(a)).collect::<Vec<_>>().join("")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(dom: usize, carrier: usize, cod: usize) -> TaggedMorphism {
        TaggedMorphism { dom, carrier, cod, kind: ArrowKind::Composite }
    }

    #[test]
    fn two_parallel_then_one() {
        // f, g: a -> b and h: b -> c
        let q = Quiver { labels: vec!["a".into(), "b".into(), "c".into()], arrows: vec![arrow(0, 0, 1), arrow(0, 1, 1), arrow(1, 2, 2)] };
        let names = ["f", "g", "h"];
        let mut got: Vec<String> = q.paths(5).iter().map(|p| q.describe(p, |i| names[i].to_string())).collect();
        got.sort();
        assert_eq!(got, vec!["1_a", "1_b", "1_c", "f", "fh", "g", "gh", "h"]);
    }

    #[test]
    fn single_arrow() {
        let q = Quiver { labels: vec!["a".into(), "b".into()], arrows: vec![arrow(0, 0, 1)] };
        assert_eq!(q.paths(3).len(), 3);
    }

    #[test]
    fn loops_are_bounded() {
        let q = Quiver { labels: vec!["a".into()], arrows: vec![arrow(0, 0, 0)] };
        assert_eq!(q.paths(4).len(), 5);
    }
}
