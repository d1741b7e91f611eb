use thiserror::Error;

/// Library-wide error type.
///
/// Variants carry human-readable context (including the offending argument
/// values) rather than structured payloads; callers that need to branch on
/// the failure class can match on the variant itself.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An argument lies outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quadrature failed to reach its tolerance within the configured
    /// refinement budget, or a requested frequency exceeds the node budget.
    #[error("quadrature failure: {0}")]
    Quadrature(String),

    /// A runtime-checked numerical condition failed: the spectral minimum
    /// came out non-negative, a tail scan found a deeper value outside the
    /// search window, or a construction became infeasible in `f64`.
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// Exhaustive colouring is limited to graphs on at most 16 vertices.
    #[error("graph too large: {0} vertices (exhaustive search is capped at 16)")]
    GraphTooLarge(usize),
}

impl Error {
    /// Prefixes the distance being processed onto numeric and quadrature
    /// payloads (unless one is already named), so batch evaluations can
    /// report which grid point failed.
    pub(crate) fn with_distance(self, d: f64) -> Self {
        let tag = |msg: String| {
            if msg.contains("d = ") {
                msg
            } else {
                format!("d = {d}: {msg}")
            }
        };
        match self {
            Error::Quadrature(msg) => Error::Quadrature(tag(msg)),
            Error::Numeric(msg) => Error::Numeric(tag(msg)),
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
