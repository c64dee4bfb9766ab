//! Exact and numeric tooling for cospectrality questions on small graphs.
//!
//! Two graphs are *cospectral* when their adjacency spectra coincide,
//! *almost cospectral* when their nonzero eigenvalues (with multiplicity)
//! coincide, and *singularly cospectral* when their nonzero singular values
//! (with multiplicity) coincide. For symmetric adjacency matrices the
//! singular values are the absolute eigenvalues, so all three relations can
//! be decided exactly over the integers: this crate compares characteristic
//! polynomials of `A` and `A²` computed with big-integer arithmetic, and
//! keeps floating point strictly advisory.
//!
//! The crate is organized around that split:
//!
//! * [`graph`] — immutable bit-packed simple graphs plus graph6 I/O.
//! * [`poly`] — exact integer characteristic polynomials, inertia, traces.
//! * [`spectral`] — Jacobi eigenvalues, singular values, energy, Schatten norms.
//! * [`constructions`] — products, double covers, vertex additions, coalescence,
//!   and the parameterized families built over complete graphs.
//! * [`classify`] — exact pair verdicts ([`classify::PairReport`]) and
//!   hypothesis-gated implication checks.
//! * [`walks`] — closed-walk profiles and the walk-count characterization of
//!   singular cospectrality.
//! * [`search`] — bucketed scanning of graph6 streams for singularly
//!   cospectral pairs, with in-house canonical labeling for isomorph rejection.
//! * [`enumerate`] — exhaustive small-graph generation for corpus sweeps.
//! * [`catalog`] — named fixture graphs used across the verification suites.

pub mod canon;
pub mod catalog;
pub mod classify;
pub mod constructions;
pub mod enumerate;
mod error;
pub mod graph;
pub mod graph6;
pub mod poly;
pub mod search;
pub mod spectral;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use poly::{char_poly, inertia, Inertia, IntPolynomial};
pub use spectral::SpectrumNumeric;
