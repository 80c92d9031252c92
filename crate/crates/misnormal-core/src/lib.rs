//! Exact structure of independent sets in direct products of
//! vertex-transitive graphs: constructions, an exact maximum-independent-set
//! solver, automorphism machinery, and instance-level checks of the
//! MIS-normality / IS-primitivity statements.
//!
//! The crate is `no_std` + `alloc`; all IO, timing, and the CLI live in the
//! companion `misnormal` crate.

#![no_std]

extern crate alloc;

pub mod bitset;
pub mod checks;
pub mod env;
pub mod error;
pub mod families;
pub mod graph;
pub mod group;
pub mod perm;
pub mod product;
pub mod solver;

pub use bitset::VertexSet;
pub use env::{Budget, Env, Unlimited};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Graph, InducedSubgraph, Ratio};
pub use group::{automorphism_group, is_set_partition, is_vertex_transitive, PermGroup};
pub use perm::Perm;
pub use product::{direct_product, power, ProductGraph};
pub use solver::{alpha, enumerate_mis, mis_membership_counts, MisResult};
