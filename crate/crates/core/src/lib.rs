//! Subdivision hypergraphs and their adjacency spectra.
//!
//! Build a uniform hypergraph, subdivide it, compute the spectrum of the
//! subdivision numerically, and compare it against the closed-form spectra
//! known for several families. Cospectral but non-isomorphic pairs can be
//! constructed from cospectral regular graphs.

pub mod cospectral;
pub mod error;
pub mod families;
pub mod hypergraph;
pub mod io;
pub mod matrix;
pub mod partitions;
pub mod predictors;
pub mod spectra;
pub mod subdivision;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, Options};
pub use matrix::{Matrix, SymMatrix};
pub use partitions::{check_equitable, containment_check, refine_to_equitable, Partition, QuotientMatrix};
pub use spectra::{eigenvalues, multiset_equal, Polynomial, SpectrumMultiset};
pub use subdivision::{subdivide, SubdivisionResult};
pub use predictors::{audit, predict, Flavor, Instance, PredictedSpectrum, Theorem};
pub use cospectral::{are_cospectral, are_isomorphic, CospectralCertificate, IsoVerdict};
