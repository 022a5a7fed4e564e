//! Built-in test semigroups.

use crate::semigroup::FiniteSemigroup;

pub const NAMES: [&str; 6] = ["SL2", "RB22", "B2", "T2", "I2", "T3"];

/// Two-element semilattice {0 < 1}.
pub fn sl2() -> FiniteSemigroup {
    FiniteSemigroup::from_cayley(vec![vec![0, 0], vec![0, 1]], "SL2").expect("valid table")
}

/// 2x2 rectangular band; element `2i+j` is the pair `(i,j)`.
pub fn rb22() -> FiniteSemigroup {
    rectangular_band(2, 2)
}

pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    let n = rows * cols;
    let table = (0..n).map(|a| (0..n).map(|b| cols * (a / cols) + b % cols).collect()).collect();
    let labels = (0..n).map(|a| format!("({},{})", a / cols, a % cols)).collect();
    FiniteSemigroup::from_cayley(table, format!("RB{rows}{cols}")).expect("valid table").with_labels(labels)
}

/// Five-element Brandt semigroup: 0, e, f, a, a' with e = aa', f = a'a.
pub fn b2() -> FiniteSemigroup {
    // 2x2 matrix units plus zero: index 0 is zero, then E11, E22, E12, E21
    let units: [Option<(usize, usize)>; 5] = [None, Some((1, 1)), Some((2, 2)), Some((1, 2)), Some((2, 1))];
    let find = |u: Option<(usize, usize)>| units.iter().position(|&v| v == u).unwrap();
    let table = (0..5)
        .map(|a| {
            (0..5)
                .map(|b| match (units[a], units[b]) {
                    (Some((i, j)), Some((k, l))) if j == k => find(Some((i, l))),
                    _ => 0,
                })
                .collect()
        })
        .collect();
    let labels = ["0", "e", "f", "a", "a'"].iter().map(|s| s.to_string()).collect();
    FiniteSemigroup::from_cayley(table, "B2").expect("valid table").with_labels(labels)
}

/// All maps of a 2-point set.
pub fn t2() -> FiniteSemigroup {
    FiniteSemigroup::from_generators(2, &[vec![0, 1], vec![1, 0], vec![0, 0]], "T2").expect("valid maps")
}

/// Partial bijections of {0,1}, as maps of {0,1,2} fixing the sink 2.
pub fn i2() -> FiniteSemigroup {
    FiniteSemigroup::from_generators(3, &[vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 2]], "I2").expect("valid maps")
}

/// All maps of a 3-point set, from a transposition, a 3-cycle and a rank-2 map.
pub fn t3() -> FiniteSemigroup {
    FiniteSemigroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 1]], "T3").expect("valid maps")
}

pub fn by_name(name: &str) -> Option<FiniteSemigroup> {
    match name.to_ascii_uppercase().as_str() {
        "SL2" => Some(sl2()),
        "RB22" => Some(rb22()),
        "B2" => Some(b2()),
        "T2" => Some(t2()),
        "I2" => Some(i2()),
        "T3" => Some(t3()),
        _ => None,
    }
}

pub fn all() -> Vec<FiniteSemigroup> {
    NAMES.iter().map(|n| by_name(n).unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_idempotents() {
        let expect = [("SL2", 2, 2), ("RB22", 4, 4), ("B2", 5, 3), ("T2", 4, 3), ("I2", 7, 4), ("T3", 27, 10)];
        for (name, order, idem) in expect {
            let s = by_name(name).unwrap();
            assert_eq!(s.order(), order, "{name}");
            assert_eq!(s.idempotents().len(), idem, "{name}");
            assert!(s.is_regular(), "{name}");
        }
    }

    #[test]
    fn brandt_products() {
        let s = b2();
        let (z, e, f, a, a2) = (0, 1, 2, 3, 4);
        assert_eq!(s.mul(a, a2), e);
        assert_eq!(s.mul(a2, a), f);
        assert_eq!(s.mul(a, a), z);
        assert_eq!(s.inverses_of(a).unwrap(), vec![a2]);
        let g = s.green();
        assert!(g.r_related(e, a) && g.r_related(f, a2));
        assert!(g.l_related(e, a2) && g.l_related(f, a));
        assert_eq!(g.d_classes(), vec![vec![z], vec![e, f, a, a2]]);
    }

    #[test]
    fn i2_is_inverse() {
        // every element has exactly one inverse
        let s = i2();
        for x in s.elements() {
            assert_eq!(s.inverses_of(x).unwrap().len(), 1);
        }
    }
}
