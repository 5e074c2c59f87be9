//! File formats, corpora, sweeps and the command line for `sierpinski-core`.

pub mod cli;
pub mod corpus;
pub mod io;
pub mod sweeps;
