//! Simplicial complexes of `ell`-zero-sumfree subsets of `Z/nZ`.
//!
//! A set `S ⊆ Z/nZ` is a face of `Δ_{n,ell}` when no multiset of exactly
//! `ell` elements drawn from `S` sums to `0 mod n`. The crate builds these
//! complexes, computes their f- and h-vectors and Alexander duals, derives
//! the intersection posets of the associated coordinate subspace
//! arrangements, and scans small parameter ranges for counterexamples.

pub mod arrangement;
pub mod cli;
pub mod combinatorics;
pub mod complex;
pub mod conjectures;
mod error;
pub mod families;
pub mod hypergraph;
pub mod vertex_set;
pub mod zsf;

pub use error::{Error, Result};
