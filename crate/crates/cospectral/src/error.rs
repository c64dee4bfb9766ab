//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the exact and numeric kernels.
#[derive(Debug, Error)]
pub enum Error {
    /// A graph6 line failed to decode. `pos` is the byte offset of the
    /// offending byte within the line.
    #[error("invalid graph6 at byte {pos}: {reason}")]
    Graph6 { pos: usize, reason: String },

    /// A constructor or operation was handed parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Exact polynomial division left a nonzero remainder.
    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    /// The Jacobi sweep budget was exhausted before the off-diagonal mass
    /// dropped below the convergence threshold.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    EigenSolver { sweeps: usize, off_norm: f64 },

    /// Eigenvalue clustering could not reproduce the input matrix from the
    /// grouped projections to the requested accuracy.
    #[error("degenerate eigenvalue clustering: reconstruction residual {residual:e}")]
    DegenerateClustering { residual: f64 },

    /// A proved implication failed on concrete inputs. This signals a bug in
    /// the exact kernels and is mapped to a dedicated process exit code.
    #[error("theorem check falsified: {0}")]
    TheoremFalsified(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
