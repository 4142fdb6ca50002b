//! Element identity and finite element sets.

/// Identifies one element of a space by its 0-based position in declaration
/// order. Ids are only meaningful relative to the space they were obtained
/// from; every query validates them against its own ground set.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ElementId(pub(crate) u32);

impl ElementId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite set of element ids, kept sorted and duplicate-free.
///
/// Iteration order is ascending by element index, which is the canonical
/// order used everywhere: set rendering, Δ-family ordering, and greedy scans.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ElementSet {
    items: Vec<ElementId>,
}

impl ElementSet {
    pub fn new() -> Self {
        Self { items: Vec::new() }
    }

    pub fn from_ids<I: IntoIterator<Item = ElementId>>(ids: I) -> Self {
        let mut items: Vec<ElementId> = ids.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        Self { items }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.items.binary_search(&id).is_ok()
    }

    /// Inserts an id, returning true if it was not already present.
    pub fn insert(&mut self, id: ElementId) -> bool {
        match self.items.binary_search(&id) {
            Ok(_) => false,
            Err(pos) => {
                self.items.insert(pos, id);
                true
            }
        }
    }

    /// A copy of this set with `id` added.
    pub fn with(&self, id: ElementId) -> Self {
        let mut out = self.clone();
        out.insert(id);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.items.iter().copied()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        if self.items.len() > other.items.len() {
            return false;
        }
        let mut rhs = other.items.iter();
        'outer: for id in &self.items {
            for cand in rhs.by_ref() {
                match cand.cmp(id) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn union(&self, other: &ElementSet) -> Self {
        let mut items = Vec::with_capacity(self.items.len() + other.items.len());
        items.extend_from_slice(&self.items);
        items.extend_from_slice(&other.items);
        items.sort_unstable();
        items.dedup();
        Self { items }
    }

    pub fn difference(&self, other: &ElementSet) -> Self {
        Self {
            items: self
                .items
                .iter()
                .copied()
                .filter(|id| !other.contains(*id))
                .collect(),
        }
    }

    /// The single element of `self` not in `other`, if there is exactly one.
    pub(crate) fn sole_outside(&self, other: &ElementSet) -> Option<ElementId> {
        let mut found = None;
        for id in &self.items {
            if !other.contains(*id) {
                if found.is_some() {
                    return None;
                }
                found = Some(*id);
            }
        }
        found
    }

    pub(crate) fn from_mask(mask: u64) -> Self {
        let mut items = Vec::with_capacity(mask.count_ones() as usize);
        let mut rest = mask;
        while rest != 0 {
            let bit = rest.trailing_zeros();
            items.push(ElementId(bit));
            rest &= rest - 1;
        }
        Self { items }
    }

    /// Bitmask over element indices; callers guarantee all indices are < 64.
    pub(crate) fn mask(&self) -> u64 {
        let mut mask = 0u64;
        for id in &self.items {
            debug_assert!(id.index() < 64);
            mask |= 1 << id.0;
        }
        mask
    }
}

impl FromIterator<ElementId> for ElementSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Self::from_ids(iter)
    }
}
