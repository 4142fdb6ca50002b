//! Bitmask helpers for exhaustive subset scans. Callers guarantee the
//! ground set fits in a machine word (all public entry points cap |S|).

use crate::space::DependenceSpace;

pub(crate) fn delta_masks(space: &DependenceSpace) -> Vec<u64> {
    debug_assert!(space.len() <= 64);
    space.delta().iter().map(|m| m.set().mask()).collect()
}

/// `out[mask]` is true iff some Δ-member is contained in `mask`.
/// Subset-sum propagation over the lattice, one bit at a time.
pub(crate) fn dependent_bitmap(n: usize, delta_masks: &[u64]) -> Vec<bool> {
    let size = 1usize << n;
    let mut dependent = vec![false; size];
    for &d in delta_masks {
        dependent[d as usize] = true;
    }
    for bit in 0..n {
        let step = 1usize << bit;
        for mask in 0..size {
            if mask & step != 0 && dependent[mask ^ step] {
                dependent[mask] = true;
            }
        }
    }
    dependent
}

/// One-step closure on masks: the set plus every element that is the sole
/// missing piece of some Δ-member.
pub(crate) fn closure_mask(set: u64, delta_masks: &[u64]) -> u64 {
    let mut out = set;
    for &d in delta_masks {
        let outside = d & !set;
        if outside != 0 && outside & (outside - 1) == 0 {
            out |= outside;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::MinCircuitSize;

    #[test]
    fn bitmap_marks_exactly_supersets_of_members() {
        let space = DependenceSpace::build(
            &["a", "b", "c", "d"],
            &[&["a", "b", "c"]],
            MinCircuitSize::Two,
        )
        .unwrap();
        let masks = delta_masks(&space);
        let dependent = dependent_bitmap(4, &masks);
        let expected_dependent = [0b0111usize, 0b1111];
        for (mask, &is_dependent) in dependent.iter().enumerate() {
            assert_eq!(is_dependent, expected_dependent.contains(&mask), "mask {mask:#06b}");
        }
    }

    #[test]
    fn closure_mask_matches_set_closure() {
        let space = DependenceSpace::build(
            &["a", "b", "c", "d"],
            &[&["a", "b", "c"]],
            MinCircuitSize::Two,
        )
        .unwrap();
        let masks = delta_masks(&space);
        // {b, c} -> {a, b, c}
        assert_eq!(closure_mask(0b0110, &masks), 0b0111);
        // {a} stays put.
        assert_eq!(closure_mask(0b0001, &masks), 0b0001);
    }
}
