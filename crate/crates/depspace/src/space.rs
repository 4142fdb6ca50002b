//! The dependence-space data model and construction-time validation.
//!
//! A space is a finite ground set together with a family Δ of directly
//! dependent subsets. The family is stored explicitly and canonically:
//! each member sorted by element index, members ordered lexicographically,
//! duplicates removed. Spaces are immutable once built, so every query in
//! the crate is a pure function and safe to call concurrently.

use std::collections::HashMap;

use crate::error::{BuildError, QueryError};
use crate::set::{ElementId, ElementSet};

/// Smallest admissible Δ-member cardinality.
///
/// The default is two. A space may opt into one-element members to model
/// structures that declare a singleton (such as a zero vector) dependent.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum MinCircuitSize {
    One,
    #[default]
    Two,
}

impl MinCircuitSize {
    pub fn as_usize(self) -> usize {
        match self {
            MinCircuitSize::One => 1,
            MinCircuitSize::Two => 2,
        }
    }
}

/// One member of the Δ-family: a directly dependent set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DeltaMember {
    set: ElementSet,
}

impl DeltaMember {
    pub(crate) fn new(set: ElementSet) -> Self {
        Self { set }
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, id: ElementId) -> bool {
        self.set.contains(id)
    }
}

/// A finite ground set plus its Δ-family.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DependenceSpace {
    elements: Vec<String>,
    by_name: HashMap<String, u32>,
    delta: Vec<DeltaMember>,
    min_circuit_size: MinCircuitSize,
}

fn valid_token(name: &str) -> bool {
    !name.is_empty() && !name.contains(char::is_whitespace) && !name.contains('#')
}

impl DependenceSpace {
    /// Builds a space from element names (declaration order is kept) and a
    /// list of Δ-members given as name lists. The resulting Δ is canonical:
    /// deduplicated, each member sorted by element index, members sorted
    /// lexicographically.
    pub fn build(
        element_names: &[&str],
        delta_members: &[&[&str]],
        min_circuit_size: MinCircuitSize,
    ) -> Result<Self, BuildError> {
        let mut by_name = HashMap::with_capacity(element_names.len());
        let mut elements = Vec::with_capacity(element_names.len());
        for name in element_names {
            if !valid_token(name) {
                return Err(BuildError::InvalidElementName {
                    name: (*name).to_owned(),
                });
            }
            if by_name
                .insert((*name).to_owned(), elements.len() as u32)
                .is_some()
            {
                return Err(BuildError::DuplicateElementName {
                    name: (*name).to_owned(),
                });
            }
            elements.push((*name).to_owned());
        }

        let mut delta = Vec::with_capacity(delta_members.len());
        for member in delta_members {
            let mut set = ElementSet::new();
            for name in *member {
                let id = match by_name.get(*name) {
                    Some(&idx) => ElementId(idx),
                    None => {
                        return Err(BuildError::UnknownElementInDelta {
                            name: (*name).to_owned(),
                        })
                    }
                };
                if !set.insert(id) {
                    return Err(BuildError::DuplicateElementWithinMember {
                        name: (*name).to_owned(),
                    });
                }
            }
            if set.len() < min_circuit_size.as_usize() {
                return Err(BuildError::MemberTooSmall {
                    size: set.len(),
                    min: min_circuit_size.as_usize(),
                });
            }
            delta.push(DeltaMember::new(set));
        }
        delta.sort_unstable();
        delta.dedup();

        Ok(Self {
            elements,
            by_name,
            delta,
            min_circuit_size,
        })
    }

    /// Re-canonicalizes the Δ-family. Idempotent, and the identity on any
    /// space produced by [`DependenceSpace::build`].
    pub fn canonical_form(&self) -> DependenceSpace {
        let mut delta = self.delta.clone();
        delta.sort_unstable();
        delta.dedup();
        DependenceSpace {
            elements: self.elements.clone(),
            by_name: self.by_name.clone(),
            delta,
            min_circuit_size: self.min_circuit_size,
        }
    }

    /// Number of ground-set elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Looks an element up by name.
    pub fn element(&self, name: &str) -> Option<ElementId> {
        self.by_name.get(name).map(|&idx| ElementId(idx))
    }

    /// The declared name of an element. Panics if the id is foreign.
    pub fn name(&self, id: ElementId) -> &str {
        &self.elements[id.index()]
    }

    /// All element ids in declaration order.
    pub fn element_ids(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.elements.len() as u32).map(ElementId)
    }

    /// Element names in declaration order.
    pub fn element_names(&self) -> impl Iterator<Item = &str> {
        self.elements.iter().map(String::as_str)
    }

    /// The whole ground set as a set value.
    pub fn ground_set(&self) -> ElementSet {
        ElementSet::from_ids(self.element_ids())
    }

    pub fn delta(&self) -> &[DeltaMember] {
        &self.delta
    }

    pub fn min_circuit_size(&self) -> MinCircuitSize {
        self.min_circuit_size
    }

    /// Resolves a list of names into a set.
    pub fn set_from_names(&self, names: &[&str]) -> Result<ElementSet, QueryError> {
        let mut set = ElementSet::new();
        for name in names {
            match self.element(name) {
                Some(id) => {
                    set.insert(id);
                }
                None => {
                    return Err(QueryError::UnknownElement {
                        name: (*name).to_owned(),
                    })
                }
            }
        }
        Ok(set)
    }

    /// Comma-joined element names in canonical order.
    pub fn format_set(&self, set: &ElementSet) -> String {
        let mut out = String::new();
        for (i, id) in set.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(self.name(id));
        }
        out
    }

    pub(crate) fn check_id(&self, id: ElementId) -> Result<(), QueryError> {
        if id.index() < self.elements.len() {
            Ok(())
        } else {
            Err(QueryError::ForeignElement {
                index: id.index(),
                space_size: self.elements.len(),
            })
        }
    }

    /// Verifies that every member of `set` belongs to this space.
    pub fn check_set(&self, set: &ElementSet) -> Result<(), QueryError> {
        match set.iter().last() {
            Some(max) => self.check_id(max),
            None => Ok(()),
        }
    }
}
