//! Finite dependence spaces: a ground set equipped with an explicit family Δ
//! of directly dependent subsets.
//!
//! The crate provides the classification of subsets into dependent and
//! independent, the one-step dependence relation between an element and a
//! set, closure operators, basis construction by deterministic greedy
//! extension, a constructive exchange procedure with verifiable
//! certificates, and finite model checking of the transitivity axiom and
//! the structural properties of independence.
//!
//! The transitivity axiom — one dependence step composing with itself — is
//! treated as a property to check rather than an assumption: `depends_on`
//! never chains, `iterated_closure` does, and `axioms::check_transitivity`
//! reports, with counterexample witnesses, whether the two agree on a given
//! space. Instance generators for linkage graphs, planar integer vectors,
//! shared-symbol word sets, and seeded random Δ-systems supply concrete
//! spaces to interrogate.
//!
//! Spaces are immutable after construction and every operation is a pure
//! query, so values can be shared freely across threads.
//!
//! ```
//! use depspace::{DependenceSpace, MinCircuitSize};
//!
//! let space = DependenceSpace::build(
//!     &["a", "b", "c", "d"],
//!     &[&["a", "b", "c"]],
//!     MinCircuitSize::Two,
//! )?;
//! let basis = space.find_basis();
//! assert_eq!(space.format_set(&basis), "a,b,d");
//! assert!(space.is_basis(&basis)?);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod axioms;
mod bases;
pub mod cli;
mod error;
mod exchange;
pub mod instances;
mod mask;
mod relations;
mod rng;
mod set;
mod space;

pub use bases::{IndependentFamily, DEFAULT_ENUMERATION_CAP};
pub use error::{BuildError, GenError, QueryError};
pub use exchange::ExchangeCertificate;
pub use relations::DependenceWitness;
pub use set::{ElementId, ElementSet};
pub use space::{DeltaMember, DependenceSpace, MinCircuitSize};
