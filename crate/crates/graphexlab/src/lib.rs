//! Random graph processes driven by graphexes, empirical graphons, and
//! cut-metric distances between step kernels.
//!
//! A *graphex* is a triple `(I, S, W)` of a dust intensity, a star intensity
//! function, and a graphon. Every graphex generates an increasing family of
//! finite labelled graphs via a Poisson construction on the label axis; this
//! crate samples that family, builds empirical graphons from the samples,
//! measures cut norms and cut distances between step graphons, and runs the
//! desk-scale convergence experiments that tie the two views together.
//!
//! The crate is organised around the pipeline:
//!
//! - [`graphon`] / [`graph`] — step kernels, graphexes, labelled and
//!   canonical unlabelled graphs, adjacency point sets;
//! - [`sampler`] — seeded sampling of the graph process, jump chains, and
//!   Bernoulli/Poisson vertex subsampling with an explicit coupling;
//! - [`empirical`] — empirical graphons and stretching;
//! - [`metrics`] — cut norm (exact and heuristic), cut distance via
//!   permutation alignment on a common refinement, stretched cut distance;
//! - [`oracle`] — exact brute-force probabilities for tiny instances;
//! - [`convergence`] — Monte Carlo experiments comparing sampled laws;
//! - [`cli`] — config files, CSV/SVG emission, and the `graphexlab` binary.
//!
//! Every stochastic entry point takes a seed or an explicit RNG; identical
//! seeds give identical results regardless of worker count.
//!
//! See the `examples/` directory for one runnable example per capability.

pub mod cli;
pub mod convergence;
pub mod empirical;
mod error;
pub mod graph;
pub mod graphon;
pub mod metrics;
pub mod oracle;
pub mod sampler;
pub mod stream;

pub use error::Error;
pub use graph::{LabelledGraph, UnlabelledGraph};
pub use graphon::{Graphex, RectangleUnion, StepFunction, StepGraphon};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
