//! Graphviz text for biordered sets, groupoids, class posets and finite
//! categories. Node order follows element or object index.

use std::fmt::Write;

use crate::biorder::BiorderedSet;
use crate::category::FiniteCategory;
use crate::cxn_from_ind::ClassPoset;
use crate::inductive::{InductiveGroupoid, OrderedGroupoid};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per idempotent; one undirected edge per R-related pair (drawn
/// horizontally) and per L-related pair (vertical), plus covering edges of
/// the natural order.
pub fn biorder_dot(e: &BiorderedSet) -> String {
    let mut out = String::from("graph biorder {\n  node [shape=point, xlabel=\"\"];\n");
    let n = e.len();
    for i in 0..n {
        writeln!(out, "  n{i} [xlabel={}];", quote(e.label(i))).unwrap();
    }
    for a in 0..n {
        for b in a + 1..n {
            if e.r_related(a, b) {
                writeln!(out, "  n{a} -- n{b} [label=\"R\", constraint=false];").unwrap();
                writeln!(out, "  {{ rank=same; n{a}; n{b}; }}").unwrap();
            }
            if e.l_related(a, b) {
                writeln!(out, "  n{a} -- n{b} [label=\"L\"];").unwrap();
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            let covers = a != b && e.omega(a, b) && !(0..n).any(|c| c != a && c != b && e.omega(a, c) && e.omega(c, b));
            if covers {
                writeln!(out, "  n{b} -- n{a} [style=dashed];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Objects are idempotents; each morphism is an arrow labelled `(x,x')`.
pub fn groupoid_dot(g: &InductiveGroupoid) -> String {
    let s = g.semigroup();
    let e = g.biorder();
    let mut out = String::from("digraph groupoid {\n");
    for i in 0..e.len() {
        writeln!(out, "  n{i} [label={}];", quote(e.label(i))).unwrap();
    }
    for (m, mor) in g.morphisms().iter().enumerate() {
        let label = format!("({},{})", s.label(mor.x), s.label(mor.x_prime));
        writeln!(out, "  n{} -> n{} [label={}];", g.dom(m), g.cod(m), quote(&label)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Covering relation of a class poset, smaller below.
pub fn poset_dot(p: &ClassPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
    for (i, l) in p.labels.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(l)).unwrap();
    }
    let n = p.len();
    for a in 0..n {
        for b in 0..n {
            if a != b && p.leq(a, b) && !(0..n).any(|c| c != a && c != b && p.leq(a, c) && p.leq(c, b)) {
                writeln!(out, "  n{a} -> n{b};").unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Non-identity morphisms; inclusions dashed.
pub fn category_dot(c: &FiniteCategory) -> String {
    let mut out = format!("digraph {} {{\n", quote(c.name()));
    for o in c.objects() {
        writeln!(out, "  n{o} [label={}];", quote(c.object_label(o))).unwrap();
    }
    for (m, mor) in c.morphisms().iter().enumerate() {
        if c.is_identity(m) {
            continue;
        }
        let style = if c.is_inclusion(m) { ", style=dashed" } else { "" };
        let label = c.describe(m);
        writeln!(out, "  n{} -> n{} [label={}{style}];", mor.dom, mor.cod, quote(&label)).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::cxn::Side;

    #[test]
    fn rectangular_band_biorder() {
        let e = BiorderedSet::from_semigroup(&corpus::rb22()).unwrap();
        let d = biorder_dot(&e);
        assert_eq!(d.matches("[xlabel=").count(), 4);
        assert_eq!(d.matches("label=\"R\"").count(), 2);
        assert_eq!(d.matches("label=\"L\"").count(), 2);
        assert_eq!(d, biorder_dot(&e));
    }

    #[test]
    fn semilattice_groupoid_loops() {
        let g = InductiveGroupoid::build(&corpus::sl2()).unwrap();
        let d = groupoid_dot(&g);
        assert!(d.contains("n0 -> n0 [label=\"(0,0)\"]"));
        assert!(d.contains("n1 -> n1 [label=\"(1,1)\"]"));
        assert_eq!(d.matches("->").count(), 2);
    }

    #[test]
    fn chain_poset_and_category() {
        let e = BiorderedSet::from_semigroup(&corpus::sl2()).unwrap();
        let p = ClassPoset::from_biorder(&e, Side::Left);
        assert_eq!(poset_dot(&p).matches("->").count(), 1);
        let c = crate::category::fixtures::semilattice_left();
        let d = category_dot(&c);
        assert!(d.contains("style=dashed"));
    }
}
