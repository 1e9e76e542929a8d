//! Exact connectivity toolkit for uniform subset graphs.
//!
//! A uniform subset graph `G(n, k, t)` has the k-subsets of `{1, ..., n}` as
//! vertices, two subsets being adjacent when they intersect in exactly `t`
//! elements. The Johnson graph `J(n, k)` is the case `t = k - 1`; the Kneser
//! graph is `t = 0`.
//!
//! The crate provides:
//! - construction and subset-level primitives ([`subset`], [`graph`]),
//! - exact vertex connectivity and super-connectivity with verifiable
//!   certificates ([`connectivity`]),
//! - explicit cut and disjoint-path witnesses for the closed-form
//!   super-connectivity of Johnson graphs ([`witness`]),
//! - the closed-form values themselves ([`formula`]).
//!
//! All search kernels are data-parallel over independent subproblems when the
//! `parallel` feature (default) is enabled; results are identical for any
//! worker count, including the sequential fallback.

pub mod bitset;
pub mod combin;
pub mod connectivity;
pub mod error;
pub mod exec;
pub mod formula;
pub mod graph;
pub mod report;
pub mod subset;
pub mod witness;

pub use error::Error;
pub use graph::UniformSubsetGraph;
pub use subset::{GraphParams, SubsetVertex};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
