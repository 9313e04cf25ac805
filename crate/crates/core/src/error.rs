use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `(n, ell)` outside `2 <= n`, `0 < ell < n`.
    #[error("invalid parameters n={n}, ell={ell}: need n >= 2 and 0 < ell < n")]
    InvalidParams { n: u32, ell: u32 },

    /// The requested computation exceeds a fixed capacity (bit-mask width or
    /// brute-force budget).
    #[error("{what}: {value} exceeds the supported maximum {max}")]
    Capacity { what: &'static str, value: u32, max: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    /// The complex has no non-empty facet, so there are no subspaces to arrange.
    #[error("degenerate arrangement: the complex has no non-empty facet")]
    DegenerateArrangement,

    /// The Alexander dual of the full simplex on the ground set is the empty
    /// collection, which is not a simplicial complex.
    #[error("the Alexander dual of the full simplex is void (contains no faces)")]
    VoidDual,

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
