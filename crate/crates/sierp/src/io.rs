//! graph6, JSON and DOT encodings, and path-based reading and writing.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sierpinski_core::classes::Colouring;
use sierpinski_core::generators::{generate, FamilySpec};
use sierpinski_core::{Graph, VertexMap};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("graph: {0}")]
    Graph(#[from] sierpinski_core::GraphError),
    #[error("cannot read {0} graphs")]
    Unreadable(&'static str),
    #[error("bad generator spec {0:?}: {1}")]
    Spec(String, String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    G6,
    Json,
    Dot,
}

impl Format {
    /// From a file extension; graph6 when unknown.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("dot") | Some("gv") => Format::Dot,
            _ => Format::G6,
        }
    }
}

pub mod graph6 {
    use super::*;

    const HEADER: &str = ">>graph6<<";

    fn push_size(out: &mut Vec<u8>, n: usize) {
        if n <= 62 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        } else {
            out.extend([126, 126]);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push(((n >> shift) & 63) as u8 + 63);
            }
        }
    }

    /// One graph6 line without the trailing newline.
    pub fn encode(g: &Graph) -> String {
        let n = g.n();
        let mut out = Vec::new();
        push_size(&mut out, n);
        let mut acc = 0u8;
        let mut bits = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(g.has_edge(i, j));
                bits += 1;
                if bits == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if bits > 0 {
            out.push((acc << (6 - bits)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    pub fn decode(line: &str) -> Result<Graph, FormatError> {
        let line = line.trim_end_matches(['\n', '\r']);
        let line = line.strip_prefix(HEADER).unwrap_or(line);
        let bytes = line.as_bytes();
        let bad = |m: &str| FormatError::Graph6(format!("{m} in {line:?}"));
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(bad("byte outside 63..=126"));
        }
        let six = |b: u8| (b - 63) as usize;
        let (n, rest) = match bytes {
            [] => return Err(bad("empty line")),
            [126, 126, r @ ..] if r.len() >= 6 => (r[..6].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &r[6..]),
            [126, r @ ..] if r.len() >= 3 && r[0] != 126 => {
                (r[..3].iter().fold(0, |acc, &b| (acc << 6) | six(b)), &r[3..])
            }
            [126, ..] => return Err(bad("truncated size")),
            [b, r @ ..] => (six(*b), r),
        };
        let pairs = n * n.saturating_sub(1) / 2;
        let need = pairs.div_ceil(6);
        if rest.len() != need {
            return Err(bad(&format!("expected {need} data bytes, found {}", rest.len())));
        }
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = six(rest[k / 6]);
                if (byte >> (5 - k % 6)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        if pairs % 6 != 0 {
            let last = six(rest[need - 1]);
            if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
                return Err(bad("non-zero padding"));
            }
        }
        Ok(Graph::from_edges(n, &edges)?)
    }

    /// Graphs of a graph6 file, one per non-empty line; an optional header
    /// is skipped.
    pub fn decode_all(text: &str) -> Result<Vec<Graph>, FormatError> {
        text.lines().map(str::trim).filter(|l| !l.is_empty()).map(decode).collect()
    }

    pub fn encode_all(graphs: &[Graph]) -> String {
        let mut s = String::new();
        for g in graphs {
            s.push_str(&encode(g));
            s.push('\n');
        }
        s
    }
}

/// `{"n": 4, "edges": [[0, 1], ...]}` with optional labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges(), labels: g.labels().map(<[String]>::to_vec) }
    }

    pub fn into_graph(self) -> Result<Graph, FormatError> {
        let g = Graph::from_edges(self.n, &self.edges)?;
        Ok(match self.labels {
            Some(l) => g.with_labels(l)?,
            None => g,
        })
    }
}

/// A map file: a bare image list, `{"f": [...]}`, or
/// `{"image": [...], "codomain": k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapJson {
    Image(Vec<usize>),
    Keyed { f: Vec<usize> },
    Full { image: Vec<usize>, codomain: usize },
}

impl MapJson {
    pub fn from_map(f: &VertexMap) -> Self {
        MapJson::Full { image: f.images().to_vec(), codomain: f.codomain_size() }
    }

    /// `default_codomain` is used for bare lists, normally `|V(B)|`.
    pub fn into_map(self, default_codomain: usize) -> Result<VertexMap, FormatError> {
        Ok(match self {
            MapJson::Image(image) | MapJson::Keyed { f: image } => VertexMap::new(image, default_codomain)?,
            MapJson::Full { image, codomain } => VertexMap::new(image, codomain)?,
        })
    }
}

/// DOT text; vertices get a `colour` attribute when a colouring is given.
pub fn to_dot(g: &Graph, colouring: Option<&Colouring>) -> String {
    const NAMES: [&str; 6] = ["white", "red", "blue", "green", "black", "yellow"];
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let label = g.labels().map(|l| l[v].as_str());
        match (label, colouring) {
            (None, None) => writeln!(s, "  {v};").unwrap(),
            _ => {
                let mut attrs = Vec::new();
                if let Some(l) = label {
                    attrs.push(format!("label=\"{}\"", l.replace('"', "\\\"")));
                }
                if let Some(c) = colouring {
                    attrs.push(format!("color={}", NAMES[c.colour(v) as usize]));
                }
                writeln!(s, "  {v} [{}];", attrs.join(", ")).unwrap();
            }
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => graph6::encode(g) + "\n",
        Format::Json => serde_json::to_string(&GraphJson::from_graph(g)).expect("graph serializes") + "\n",
        Format::Dot => to_dot(g, None),
    }
}

pub fn decode(text: &str, format: Format) -> Result<Graph, FormatError> {
    match format {
        Format::G6 => graph6::decode(text.trim()),
        Format::Json => serde_json::from_str::<GraphJson>(text)?.into_graph(),
        Format::Dot => Err(FormatError::Unreadable("DOT")),
    }
}

/// Reads a graph file, an inline `g6:<graph6>` string, or builds a family
/// instance from `gen:<family>:<param>`.
pub fn read_graph(source: &str) -> Result<Graph, FormatError> {
    if let Some(text) = source.strip_prefix("g6:") {
        return graph6::decode(text);
    }
    if let Some(spec) = source.strip_prefix("gen:") {
        let (family, param) =
            spec.split_once(':').ok_or_else(|| FormatError::Spec(source.into(), "need family:param".into()))?;
        let spec = FamilySpec::parse(family, param).map_err(|e| FormatError::Spec(source.into(), e.to_string()))?;
        return generate(spec).map_err(|e| FormatError::Spec(source.into(), e.to_string()));
    }
    let path = Path::new(source);
    decode(&fs::read_to_string(path)?, Format::from_path(path))
}

pub fn write_graph(path: &Path, g: &Graph, format: Format) -> Result<(), FormatError> {
    fs::write(path, encode(g, format))?;
    Ok(())
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, FormatError> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // K4 is "C~" and the 5-cycle is "Dhc" in the reference encoder
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(graph6::encode(&k4), "C~");
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(graph6::encode(&c5), "Dhc");
        assert_eq!(graph6::decode("Dhc").unwrap(), c5);
        assert_eq!(graph6::decode(">>graph6<<C~").unwrap(), k4);
        assert_eq!(graph6::encode(&Graph::empty(0)), "?");
        assert!(graph6::decode("C").is_err());
        assert!(graph6::decode("Bp").is_err());
    }

    #[test]
    fn long_size_field() {
        let g = Graph::from_edges(100, &[(0, 99), (5, 6)]).unwrap();
        let s = graph6::encode(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(graph6::decode(&s).unwrap(), g);
    }

    #[test]
    fn map_forms() {
        let m: MapJson = serde_json::from_str("[0, 1, 1]").unwrap();
        assert_eq!(m.into_map(2).unwrap().images(), &[0, 1, 1]);
        let m: MapJson = serde_json::from_str(r#"{"f": [1, 0]}"#).unwrap();
        assert_eq!(m.into_map(2).unwrap().images(), &[1, 0]);
        let m: MapJson = serde_json::from_str(r#"{"image": [2, 0], "codomain": 3}"#).unwrap();
        assert_eq!(m.into_map(9).unwrap().codomain_size(), 3);
    }
}
