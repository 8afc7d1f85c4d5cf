//! Cycle-space analysis of simple connected graphs.
//!
//! The crate models the cycle space of a graph over GF(2), builds cycle
//! bases, evaluates the Grinberg condition on planar face partitions, and
//! searches bases for *Hamilton planes*: subsets of basis cycles whose
//! GF(2) sum is a Hamiltonian cycle. Everything here is exact integer /
//! bit-vector arithmetic; there are no tolerances.
//!
//! The crate is `no_std` (with `alloc`). IO, file formats and the CLI live
//! in the companion `cyclespace-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod formats;
pub mod gf2;
pub mod graph;
pub mod grinberg;
pub mod search;
pub mod space;

pub use gf2::EdgeVector;
pub use graph::{Face, Graph, RotationSystem};
pub use space::{Cycle, CycleBasis};
