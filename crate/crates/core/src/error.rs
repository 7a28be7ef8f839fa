use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("configuration error: {0}")]
    Config(String),

    /// The truncated Fock basis carries too much thermal population in its top states.
    #[error("truncation error: dim {dim} leaves tail mass {tail_mass:e} in the top 10% of states; use dim >= {suggested_dim}")]
    Truncation {
        dim: usize,
        tail_mass: f64,
        suggested_dim: usize,
    },

    /// A quadrature grid too narrow or too coarse for the state it samples.
    #[error("precision error: {0}")]
    Precision(String),

    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
