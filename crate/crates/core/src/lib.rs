//! Sierpiński products of graphs: construction, connectivity and planarity
//! criteria, the colour classes used to classify regular polyhedral products,
//! generators for the families involved, and brute-force reference oracles.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classes;
pub mod classification;
pub mod connectivity;
pub mod embedding;
pub mod generators;
pub mod graph;
pub mod oracles;
pub mod products;

pub use graph::{Graph, GraphError, VertexMap};
