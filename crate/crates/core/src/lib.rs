//! Exact eccentricities, diameter, reach centrality and opposites on median
//! graphs.
//!
//! The pipeline is: [`theta::compute_theta`] partitions the edges into
//! Θ-classes, [`theta::orient`] directs them away from a basepoint,
//! [`pof::build_pof_index`] indexes every hypercube by anti-basis and
//! signature, and [`labels::compute_labels`] fills the φ/op/ψ tables from
//! which eccentricities and reach centralities are read off.
//! [`driver::ecc_subquadratic`] wraps this in the halfspace-splitting scheme.
//!
//! ```
//! use medianecc::{graph::Graph, labels::{fpt_eccentricities, Backend}};
//!
//! // a 2x3 grid
//! let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)]).unwrap();
//! assert_eq!(fpt_eccentricities(&g, Backend::Minpar).unwrap(), vec![3, 2, 3, 3, 2, 3]);
//! ```

pub mod driver;
pub mod error;
pub mod graph;
pub mod harness;
pub mod labels;
pub mod pof;
pub mod reach;
pub mod theta;
pub mod wopp;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/theta.md")]
    mod theta {}
    #[doc = include_str!("../../../book/src/pofs.md")]
    mod pofs {}
    #[doc = include_str!("../../../book/src/labels.md")]
    mod labels {}
    #[doc = include_str!("../../../book/src/wopp.md")]
    mod wopp {}
    #[doc = include_str!("../../../book/src/reach.md")]
    mod reach {}
    #[doc = include_str!("../../../book/src/splitting.md")]
    mod splitting {}
    #[doc = include_str!("../../../book/src/harness.md")]
    mod harness {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
