//! Exact combinatorics of binomial edge ideals of clutters.
//!
//! A clutter's binomial edge ideal only depends on its associated graph, and
//! its minimal primes are indexed by the vertex sets with the cut-point
//! property. This crate enumerates those sets, derives heights, dimension and
//! unmixedness from them, checks the result against a brute-force oracle, and
//! decides Cohen-Macaulayness wherever a gluing, cone or chordal reduction
//! applies.

pub mod clique;
pub mod clutter;
pub mod decision;
pub mod error;
pub mod graph;
pub mod io;
pub mod label;
pub mod limits;
pub mod oracle;
pub mod prime;
pub mod random;
pub mod vertex_set;

pub use clique::{free_vertices, is_clique, is_free, maximal_cliques, Facet};
pub use clutter::{Binomial, Clutter, VertexId};
pub use decision::{
    cm_verdict, cm_verdict_with, depth_exact, general_gluing_decomposition, glue, GluingTree, Rule,
    Status, Step, TieBreak, Verdict, VerdictOptions,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use io::{export_generators, read_clutter, write_clutter};
pub use limits::Limits;
pub use oracle::{describe_prime, minimal_primes_oracle, prime_contains, PrimeDescriptor};
pub use prime::{
    component_count, cut_sets, dimension, has_cutpoint_property, is_unmixed, minimal_primes,
    prime_height, CutSetRecord,
};
pub use random::random_clutter;
pub use vertex_set::VertexSet;
