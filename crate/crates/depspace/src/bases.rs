//! Independent sets, maximal extension, and basis machinery.
//!
//! A basis is an independent set whose one-step closure is the whole ground
//! set. Maximal independent sets and bases coincide on every space, which is
//! what lets [`DependenceSpace::find_basis`] work greedily.

use crate::error::QueryError;
use crate::mask;
use crate::set::ElementSet;
use crate::space::DependenceSpace;

/// Largest ground set accepted by the enumeration operations.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// A list of independent sets in canonical (lexicographic) order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndependentFamily {
    sets: Vec<ElementSet>,
}

impl IndependentFamily {
    fn new(mut sets: Vec<ElementSet>) -> Self {
        sets.sort_unstable();
        Self { sets }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &ElementSet> {
        self.sets.iter()
    }

    pub fn contains(&self, set: &ElementSet) -> bool {
        self.sets.binary_search(set).is_ok()
    }

    pub fn as_slice(&self) -> &[ElementSet] {
        &self.sets
    }
}

impl DependenceSpace {
    /// Grows `base` to a maximal independent subset of `universe` by a single
    /// deterministic pass in ground-set order. A rejected element never has
    /// to be reconsidered: supersets of dependent sets stay dependent.
    pub fn extend_to_maximal_independent(
        &self,
        base: &ElementSet,
        universe: &ElementSet,
    ) -> Result<ElementSet, QueryError> {
        self.check_set(base)?;
        self.check_set(universe)?;
        if !base.is_subset(universe) {
            return Err(QueryError::NotContained);
        }
        if self.is_dependent(base)?.is_some() {
            return Err(QueryError::DependentStart);
        }
        let mut current = base.clone();
        for id in universe.iter() {
            if current.contains(id) {
                continue;
            }
            let candidate = current.with(id);
            if self.is_dependent(&candidate)?.is_none() {
                current = candidate;
            }
        }
        Ok(current)
    }

    /// True iff `set` is independent and every element of the space depends
    /// on it in one step.
    pub fn is_basis(&self, set: &ElementSet) -> Result<bool, QueryError> {
        if self.is_dependent(set)?.is_some() {
            return Ok(false);
        }
        Ok(self.closure(set)? == self.ground_set())
    }

    /// Greedy maximal independent extension of the empty set; always a basis.
    pub fn find_basis(&self) -> ElementSet {
        self.extend_to_maximal_independent(&ElementSet::new(), &self.ground_set())
            .expect("the empty set is independent and contained in the ground set")
    }

    /// All independent subsets, canonically ordered.
    pub fn enumerate_independent(&self) -> Result<IndependentFamily, QueryError> {
        self.enumerate_independent_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_independent_capped(&self, cap: usize) -> Result<IndependentFamily, QueryError> {
        let masks = self.enumeration_masks(cap)?;
        Ok(IndependentFamily::new(
            masks.into_iter().map(ElementSet::from_mask).collect(),
        ))
    }

    /// All bases, canonically ordered.
    pub fn enumerate_bases(&self) -> Result<IndependentFamily, QueryError> {
        self.enumerate_bases_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_bases_capped(&self, cap: usize) -> Result<IndependentFamily, QueryError> {
        let delta_masks = self.capped_delta_masks(cap)?;
        let full = if self.is_empty() {
            0
        } else {
            (1u64 << self.len()) - 1
        };
        let dependent = mask::dependent_bitmap(self.len(), &delta_masks);
        let mut sets = Vec::new();
        for candidate in 0..=full {
            if !dependent[candidate as usize]
                && mask::closure_mask(candidate, &delta_masks) == full
            {
                sets.push(ElementSet::from_mask(candidate));
            }
        }
        Ok(IndependentFamily::new(sets))
    }

    fn capped_delta_masks(&self, cap: usize) -> Result<Vec<u64>, QueryError> {
        let cap = cap.min(63);
        if self.len() > cap {
            return Err(QueryError::TooLarge {
                size: self.len(),
                cap,
            });
        }
        Ok(mask::delta_masks(self))
    }

    fn enumeration_masks(&self, cap: usize) -> Result<Vec<u64>, QueryError> {
        let delta_masks = self.capped_delta_masks(cap)?;
        let dependent = mask::dependent_bitmap(self.len(), &delta_masks);
        Ok((0..dependent.len() as u64)
            .filter(|&m| !dependent[m as usize])
            .collect())
    }
}
