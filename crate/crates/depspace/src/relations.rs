//! Direct dependence, the one-step dependence relation, and closure.
//!
//! `depends_on` is deliberately a single application of the defining rule:
//! an element depends on a set if it belongs to it, or if some Δ-member
//! contains the element with all of its other elements inside the set.
//! Transitive chaining is a separate operation ([`DependenceSpace::iterated_closure`]),
//! so whether one step already behaves transitively stays an observable
//! property of a space rather than an assumption of the primitives.

use crate::error::QueryError;
use crate::set::{ElementId, ElementSet};
use crate::space::{DeltaMember, DependenceSpace};

/// Evidence for a positive dependence answer.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DependenceWitness {
    /// The queried element is a member of the queried set.
    Membership(ElementId),
    /// A Δ-member certifying the dependence.
    Circuit(DeltaMember),
}

impl DependenceWitness {
    pub fn circuit(&self) -> Option<&DeltaMember> {
        match self {
            DependenceWitness::Membership(_) => None,
            DependenceWitness::Circuit(member) => Some(member),
        }
    }

    /// Recomputes whether this witness certifies `element` depending on `on`.
    pub fn confirms_depends_on(
        &self,
        space: &DependenceSpace,
        element: ElementId,
        on: &ElementSet,
    ) -> bool {
        match self {
            DependenceWitness::Membership(id) => *id == element && on.contains(element),
            DependenceWitness::Circuit(member) => {
                space.delta().binary_search(member).is_ok()
                    && member.contains(element)
                    && member
                        .set()
                        .iter()
                        .all(|id| id == element || on.contains(id))
            }
        }
    }

    /// Recomputes whether this witness certifies `set` being dependent.
    pub fn confirms_dependence(&self, space: &DependenceSpace, set: &ElementSet) -> bool {
        match self {
            DependenceWitness::Membership(_) => false,
            DependenceWitness::Circuit(member) => {
                space.delta().binary_search(member).is_ok() && member.set().is_subset(set)
            }
        }
    }
}

impl DependenceSpace {
    /// True iff `candidate` itself is a member of Δ. Supersets of members
    /// are dependent but not *directly* dependent.
    pub fn is_directly_dependent(&self, candidate: &ElementSet) -> Result<bool, QueryError> {
        self.check_set(candidate)?;
        Ok(self
            .delta()
            .binary_search_by(|member| member.set().cmp(candidate))
            .is_ok())
    }

    /// Searches Δ in canonical order for a member contained in `set`.
    /// `Some` witness means dependent; `None` means independent.
    pub fn is_dependent(&self, set: &ElementSet) -> Result<Option<DependenceWitness>, QueryError> {
        self.check_set(set)?;
        Ok(self
            .delta()
            .iter()
            .find(|member| member.set().is_subset(set))
            .map(|member| DependenceWitness::Circuit(member.clone())))
    }

    /// One step of the dependence relation: `element` is in `on`, or some
    /// Δ-member contains `element` with the rest inside `on`. Circuit
    /// witnesses are chosen first-in-canonical-order.
    pub fn depends_on(
        &self,
        element: ElementId,
        on: &ElementSet,
    ) -> Result<Option<DependenceWitness>, QueryError> {
        self.check_id(element)?;
        self.check_set(on)?;
        if on.contains(element) {
            return Ok(Some(DependenceWitness::Membership(element)));
        }
        Ok(self
            .delta()
            .iter()
            .find(|member| {
                member.contains(element)
                    && member.set().iter().all(|id| id == element || on.contains(id))
            })
            .map(|member| DependenceWitness::Circuit(member.clone())))
    }

    /// The span of `set` under one dependence step: everything that depends
    /// on it. Extensive and monotone, but not idempotent in general.
    pub fn closure(&self, set: &ElementSet) -> Result<ElementSet, QueryError> {
        self.check_set(set)?;
        let mut out = set.clone();
        // A member with exactly one element outside the set certifies that
        // element; members fully inside contribute nothing new.
        for member in self.delta() {
            if let Some(id) = member.set().sole_outside(set) {
                out.insert(id);
            }
        }
        Ok(out)
    }

    /// Least fixpoint of [`DependenceSpace::closure`] containing `set`.
    /// Coincides with one-step closure exactly when one step already
    /// behaves transitively; reaches the fixpoint in at most |S| rounds.
    pub fn iterated_closure(&self, set: &ElementSet) -> Result<ElementSet, QueryError> {
        let mut current = self.closure(set)?;
        loop {
            let next = self.closure(&current)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }
}
