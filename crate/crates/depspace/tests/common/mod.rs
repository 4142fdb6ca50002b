//! Shared test support: a brute-force oracle computing every notion
//! directly from the definitions over bitmasks, plus the seeded corpus of
//! random spaces used across the suites. The oracle deliberately shares no
//! code with the library's query paths.

#![allow(dead_code)]

use depspace::{DependenceSpace, ElementSet};

pub fn set_to_mask(set: &ElementSet) -> u64 {
    set.iter().fold(0u64, |m, id| m | (1 << id.index()))
}

pub fn mask_to_set(space: &DependenceSpace, mask: u64) -> ElementSet {
    ElementSet::from_ids(
        space
            .element_ids()
            .filter(|id| mask & (1 << id.index()) != 0),
    )
}

pub fn delta_masks(space: &DependenceSpace) -> Vec<u64> {
    space.delta().iter().map(|m| set_to_mask(m.set())).collect()
}

pub fn full_mask(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        (1u64 << n) - 1
    }
}

/// A set is dependent iff it contains some Δ-member.
pub fn naive_dependent(delta: &[u64], set: u64) -> bool {
    delta.iter().any(|&d| d & !set == 0)
}

/// One dependence step: membership, or a Δ-member containing `x` whose
/// other elements all lie in `set`.
pub fn naive_depends_on(delta: &[u64], x: usize, set: u64) -> bool {
    let bit = 1u64 << x;
    if set & bit != 0 {
        return true;
    }
    delta
        .iter()
        .any(|&d| d & bit != 0 && d & !bit & !set == 0)
}

pub fn naive_closure(delta: &[u64], n: usize, set: u64) -> u64 {
    (0..n)
        .filter(|&x| naive_depends_on(delta, x, set))
        .fold(0u64, |m, x| m | (1 << x))
}

pub fn naive_iterated_closure(delta: &[u64], n: usize, set: u64) -> u64 {
    let mut current = set;
    loop {
        let next = naive_closure(delta, n, current);
        if next == current {
            return current;
        }
        current = next;
    }
}

pub fn naive_is_basis(delta: &[u64], n: usize, set: u64) -> bool {
    !naive_dependent(delta, set) && naive_closure(delta, n, set) == full_mask(n)
}

pub fn naive_independent_sets(delta: &[u64], n: usize) -> Vec<u64> {
    (0..=full_mask(n))
        .filter(|&m| !naive_dependent(delta, m))
        .collect()
}

pub fn naive_bases(delta: &[u64], n: usize) -> Vec<u64> {
    (0..=full_mask(n))
        .filter(|&m| naive_is_basis(delta, n, m))
        .collect()
}

pub fn naive_maximal_independent(delta: &[u64], n: usize) -> Vec<u64> {
    (0..=full_mask(n))
        .filter(|&m| {
            !naive_dependent(delta, m)
                && (0..n)
                    .filter(|&x| m & (1 << x) == 0)
                    .all(|x| naive_dependent(delta, m | (1 << x)))
        })
        .collect()
}

/// Scans every (x, A, B) triple straight off the axiom statement.
pub fn naive_transitivity_holds(delta: &[u64], n: usize) -> bool {
    let full = full_mask(n);
    for a in 0..=full {
        for b in 0..=full {
            let premise = (0..n)
                .filter(|&i| a & (1 << i) != 0)
                .all(|i| naive_depends_on(delta, i, b));
            if !premise {
                continue;
            }
            for x in 0..n {
                if naive_depends_on(delta, x, a) && !naive_depends_on(delta, x, b) {
                    return false;
                }
            }
        }
    }
    true
}

/// The deterministic corpus used by the acceptance and property suites:
/// 200 seeded random spaces with 2 to 8 elements.
pub fn corpus() -> Vec<DependenceSpace> {
    (0..200).map(corpus_space).collect()
}

pub fn corpus_space(i: usize) -> DependenceSpace {
    let n = 2 + (i % 7);
    let max_size = (2 + (i % 3)).min(n);
    let available = (0..=full_mask(n))
        .filter(|m| {
            let size = m.count_ones() as usize;
            (2..=max_size).contains(&size)
        })
        .count();
    let count = (i * 7919) % (available + 1);
    depspace::instances::random_space(n, count, max_size, 1000 + i as u64)
        .expect("corpus parameters are feasible by construction")
}

pub fn space1() -> DependenceSpace {
    DependenceSpace::build(
        &["a", "b", "c", "d"],
        &[&["a", "b", "c"]],
        depspace::MinCircuitSize::Two,
    )
    .unwrap()
}

pub fn cliques() -> DependenceSpace {
    DependenceSpace::build(
        &["1", "2", "3", "4"],
        &[&["1", "2"], &["3", "4"]],
        depspace::MinCircuitSize::Two,
    )
    .unwrap()
}

pub fn p3graph() -> DependenceSpace {
    DependenceSpace::build(
        &["x", "a", "b"],
        &[&["x", "a"], &["a", "b"]],
        depspace::MinCircuitSize::Two,
    )
    .unwrap()
}
