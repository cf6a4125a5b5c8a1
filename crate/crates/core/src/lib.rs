//! Rainbow colouring of split and threshold graphs.
//!
//! An edge colouring is *rainbow* when every pair of vertices is joined by a
//! path whose edges carry distinct colours; the rainbow connection number
//! `rc(G)` is the fewest colours that allow one.
//!
//! - [`threshold`] colours connected threshold graphs optimally in linear
//!   time, deciding `rc ≤ 2` with the Kraft inequality and building the
//!   colouring from a prefix-free code ([`kraft`]).
//! - [`split`] colours connected split graphs with at most `rc + 1` colours.
//! - [`reduction`] builds the hypergraph 3-colouring gadgets and maps
//!   colourings across them in both directions.
//! - [`rainbow`] holds the verifier and an exhaustive rc oracle for small
//!   graphs.
//!
//! ```
//! use rainbow_core::graph::Graph;
//! use rainbow_core::rainbow::verify_rainbow;
//! use rainbow_core::threshold::colour_threshold;
//!
//! let star = Graph::star(4);
//! let (colouring, report) = colour_threshold(&star).unwrap();
//! assert_eq!(report.rc, 4);
//! assert!(verify_rainbow(&star, &colouring).unwrap().connected);
//! ```

pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod kraft;
pub mod rainbow;
pub mod recognize;
pub mod reduction;
pub mod split;
pub mod threshold;

pub use graph::{EdgeColouring, Graph, GraphError};
