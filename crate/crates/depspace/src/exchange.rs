//! Constructive basis exchange with checkable certificates.
//!
//! Given a basis and an independent set, the exchange grows the independent
//! set to a maximal independent subset of their union and reports which part
//! of the basis was displaced. On spaces where one dependence step behaves
//! transitively the result is again a basis; on other spaces the certificate
//! is still produced and [`DependenceSpace::verify_exchange`] reports whether
//! the result happens to span.

use crate::error::QueryError;
use crate::set::ElementSet;
use crate::space::DependenceSpace;

/// The inputs and outcome of one exchange, enough to re-check it from scratch.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeCertificate {
    /// The basis the exchange started from.
    pub basis: ElementSet,
    /// The independent set forced into the result.
    pub independent: ElementSet,
    /// The part of the basis that was displaced.
    pub removed: ElementSet,
    /// The exchanged set: `independent ∪ (basis − removed)`.
    pub result: ElementSet,
}

impl DependenceSpace {
    /// Exchanges `independent` into `basis` deterministically. Never fails
    /// once the preconditions hold; whether the result is a basis is a
    /// property of the space, checked separately by `verify_exchange`.
    pub fn steinitz_exchange(
        &self,
        basis: &ElementSet,
        independent: &ElementSet,
    ) -> Result<ExchangeCertificate, QueryError> {
        self.check_set(basis)?;
        self.check_set(independent)?;
        if !self.is_basis(basis)? {
            return Err(QueryError::NotABasis);
        }
        if self.is_dependent(independent)?.is_some() {
            return Err(QueryError::NotIndependent);
        }
        let universe = basis.union(independent);
        let result = self.extend_to_maximal_independent(independent, &universe)?;
        let removed = basis.difference(&result);
        Ok(ExchangeCertificate {
            basis: basis.clone(),
            independent: independent.clone(),
            removed,
            result,
        })
    }

    /// Re-checks a certificate: structural shape first (errors when the
    /// certificate is malformed), then whether the result is independent,
    /// maximal inside `basis ∪ independent`, and a basis of the space.
    pub fn verify_exchange(&self, cert: &ExchangeCertificate) -> Result<bool, QueryError> {
        self.check_set(&cert.basis)?;
        self.check_set(&cert.independent)?;
        self.check_set(&cert.removed)?;
        self.check_set(&cert.result)?;

        if !cert.removed.is_subset(&cert.basis) {
            return Err(QueryError::MalformedCertificate {
                reason: "removed part is not contained in the basis",
            });
        }
        let universe = cert.basis.union(&cert.independent);
        if cert.result != cert.independent.union(&cert.basis.difference(&cert.removed)) {
            return Err(QueryError::MalformedCertificate {
                reason: "result differs from independent ∪ (basis − removed)",
            });
        }
        if !cert.independent.is_subset(&cert.result) || !cert.result.is_subset(&universe) {
            return Err(QueryError::MalformedCertificate {
                reason: "result is not sandwiched between the independent set and the union",
            });
        }

        if self.is_dependent(&cert.result)?.is_some() {
            return Ok(false);
        }
        let maximal = universe
            .difference(&cert.result)
            .iter()
            .all(|id| match self.is_dependent(&cert.result.with(id)) {
                Ok(answer) => answer.is_some(),
                Err(_) => false,
            });
        if !maximal {
            return Ok(false);
        }
        self.is_basis(&cert.result)
    }
}
