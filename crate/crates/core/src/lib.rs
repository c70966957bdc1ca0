//! Vertex-frequency analysis on finite undirected graphs.
//!
//! The crate fixes a deterministic orthonormal Laplacian eigenbasis for each
//! graph ([`spectral::eigendecompose`]) and builds on it the graph Fourier
//! transform, convolution, modulation and translation operators
//! ([`vertex_freq`]), and the Fiedler-vector analyses in [`fiedler`].

pub mod error;
pub mod fiedler;
pub mod generators;
pub mod graph;
pub mod io;
pub mod spectral;
pub mod tolerance;
pub mod vertex_freq;

#[doc(hidden)]
pub mod testkit;

pub use error::{Error, Result};
pub use graph::{Distance, Graph, VertexSet};
pub use spectral::{eigendecompose, Complex64, EigenBasis, Field};
pub use vertex_freq::{FourierMultiplier, Signal, SpectralSignal};
