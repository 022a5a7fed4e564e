//! Isomorphism search between finite semigroups.
//!
//! Picks a small generating set of the source, then backtracks over
//! images of the generators among target elements with the same
//! invariant profile. Every partial assignment is propagated through
//! the subsemigroup it generates, which prunes most branches early.

use std::collections::{HashMap, VecDeque};

use super::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    idempotent: bool,
    l: usize,
    r: usize,
    h: usize,
    d: usize,
    inverses: usize,
    two_sided: usize,
    index: usize,
    period: usize,
}

fn profiles(s: &FiniteSemigroup) -> Vec<Profile> {
    let g = s.green();
    let count = |labels: &[usize], c: usize| labels.iter().filter(|&&x| x == c).count();
    s.elements()
        .map(|x| {
            let mut ideal = vec![false; s.order()];
            ideal[x] = true;
            for a in s.elements() {
                ideal[s.mul(a, x)] = true;
                ideal[s.mul(x, a)] = true;
                for b in s.elements() {
                    ideal[s.mul(s.mul(a, x), b)] = true;
                }
            }
            // monogenic subsemigroup x, x^2, ...
            let mut powers = vec![x];
            let (index, period) = loop {
                let next = s.mul(*powers.last().unwrap(), x);
                if let Some(pos) = powers.iter().position(|&p| p == next) {
                    break (pos + 1, powers.len() - pos);
                }
                powers.push(next);
            };
            Profile {
                idempotent: s.is_idempotent(x),
                l: count(&g.l_class, g.l_class[x]),
                r: count(&g.r_class, g.r_class[x]),
                h: count(&g.h_class, g.h_class[x]),
                d: count(&g.d_class, g.d_class[x]),
                inverses: g.inverses[x].len(),
                two_sided: ideal.iter().filter(|&&b| b).count(),
                index,
                period,
            }
        })
        .collect()
}

fn closure(s: &FiniteSemigroup, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; s.order()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &g in gens {
        if !seen[g] {
            seen[g] = true;
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = s.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

fn generating_set(s: &FiniteSemigroup, prof: &[Profile]) -> Vec<usize> {
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(prof[x].two_sided), x));
    let mut gens = Vec::new();
    let mut covered = vec![false; s.order()];
    for x in order {
        if !covered[x] {
            gens.push(x);
            covered = closure(s, &gens);
        }
    }
    gens
}

/// Propagates `gens[i] -> images[i]` through the generated subsemigroup.
/// Returns `None` on any clash.
fn propagate(s: &FiniteSemigroup, t: &FiniteSemigroup, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut phi: Vec<Option<usize>> = vec![None; s.order()];
    let mut used: Vec<Option<usize>> = vec![None; t.order()];
    let mut queue = VecDeque::new();
    let mut assign = |x: usize, y: usize, phi: &mut Vec<Option<usize>>, queue: &mut VecDeque<usize>| -> bool {
        match phi[x] {
            Some(prev) => prev == y,
            None => {
                if used[y].is_some_and(|other| other != x) {
                    return false;
                }
                used[y] = Some(x);
                phi[x] = Some(y);
                queue.push_back(x);
                true
            }
        }
    };
    for (&g, &img) in gens.iter().zip(images) {
        if !assign(g, img, &mut phi, &mut queue) {
            return None;
        }
    }
    while let Some(x) = queue.pop_front() {
        let px = phi[x].unwrap();
        for (&g, &img) in gens.iter().zip(images) {
            if !assign(s.mul(x, g), t.mul(px, img), &mut phi, &mut queue) {
                return None;
            }
        }
    }
    Some(phi)
}

pub fn is_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup, phi: &[usize]) -> bool {
    if s.order() != t.order() || phi.len() != s.order() {
        return false;
    }
    let mut hit = vec![false; t.order()];
    for &y in phi {
        if y >= t.order() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    s.elements().all(|a| s.elements().all(|b| phi[s.mul(a, b)] == t.mul(phi[a], phi[b])))
}

/// Some isomorphism `s -> t` as an element map, or `None`.
pub fn find_isomorphism(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Option<Vec<usize>> {
    if s.order() != t.order() {
        return None;
    }
    let (ps, pt) = (profiles(s), profiles(t));
    let mut sorted_s = ps.clone();
    let mut sorted_t = pt.clone();
    sorted_s.sort();
    sorted_t.sort();
    if sorted_s != sorted_t {
        return None;
    }
    let mut by_profile: HashMap<&Profile, Vec<usize>> = HashMap::new();
    for (y, p) in pt.iter().enumerate() {
        by_profile.entry(p).or_default().push(y);
    }
    let gens = generating_set(s, &ps);
    let candidates: Vec<&Vec<usize>> = gens.iter().map(|&g| &by_profile[&ps[g]]).collect();

    fn search(
        s: &FiniteSemigroup,
        t: &FiniteSemigroup,
        gens: &[usize],
        candidates: &[&Vec<usize>],
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        let k = images.len();
        if k == gens.len() {
            let phi: Vec<usize> = propagate(s, t, gens, images)?.into_iter().collect::<Option<_>>()?;
            return is_isomorphism(s, t, &phi).then_some(phi);
        }
        for &y in candidates[k] {
            images.push(y);
            if propagate(s, t, &gens[..=k], images).is_some() {
                if let Some(phi) = search(s, t, gens, candidates, images) {
                    return Some(phi);
                }
            }
            images.pop();
        }
        None
    }
    search(s, t, &gens, &candidates, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3() -> FiniteSemigroup {
        FiniteSemigroup::from_generators(3, &[vec![1, 0, 2], vec![1, 2, 0], vec![0, 0, 1]], "t3").unwrap()
    }

    #[test]
    fn recovers_a_relabelling() {
        let s = t3();
        let perm: Vec<usize> = (0..27).map(|i| (i * 5 + 3) % 27).collect();
        let t = s.relabel(&perm);
        let phi = find_isomorphism(&s, &t).expect("isomorphic");
        assert!(is_isomorphism(&s, &t, &phi));
    }

    #[test]
    fn opposite_of_t2_is_not_t2() {
        // T2 has a left zero pair of constants; its opposite has right zeros
        let s = FiniteSemigroup::from_generators(2, &[vec![1, 0], vec![0, 0]], "t2").unwrap();
        assert!(find_isomorphism(&s, &s.opposite()).is_none());
        assert!(find_isomorphism(&s, &s).is_some());
    }

    #[test]
    fn order_mismatch() {
        let a = FiniteSemigroup::from_cayley(vec![vec![0]], "triv").unwrap();
        assert!(find_isomorphism(&a, &t3()).is_none());
    }
}
