//! graph6 corpora: streaming reads, and the corpora shipped with the crate.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use sierpinski_core::Graph;

use crate::io::{graph6, FormatError};

/// Graphs of a graph6 file, yielded one line at a time.
pub fn stream(path: &Path) -> Result<impl Iterator<Item = Result<Graph, FormatError>>, FormatError> {
    let reader = BufReader::new(File::open(path)?);
    Ok(reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(graph6::decode(l.trim())),
        Err(e) => Some(Err(e.into())),
    }))
}

pub fn read_file(path: &Path) -> Result<Vec<Graph>, FormatError> {
    stream(path)?.collect()
}

pub fn write_file(path: &Path, graphs: &[Graph]) -> Result<(), FormatError> {
    let mut out = BufWriter::new(File::create(path)?);
    for g in graphs {
        writeln!(out, "{}", graph6::encode(g))?;
    }
    out.flush()?;
    Ok(())
}

/// Directory of the bundled corpora.
pub fn bundled_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpora")
}

/// Bundled file name for connected `d`-regular planar graphs on `n` vertices.
pub fn regular_planar_name(n: usize, d: usize) -> String {
    format!("regular{d}_planar_n{n}.g6")
}

/// The 16-vertex A(2,1,1) members from the structured search, coloured by
/// `sweeps::a211_colouring`.
pub const A211_FILE: &str = "a211_16.g6";

pub fn bundled(name: &str) -> Result<Vec<Graph>, FormatError> {
    read_file(&bundled_dir().join(name))
}
