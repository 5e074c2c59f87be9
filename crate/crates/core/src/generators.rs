//! Standard families and the constructions that produce class members.
//!
//! Every construction that claims class membership re-verifies its output
//! with the verifiers in [`crate::classes`]; nothing is trusted by
//! construction.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::classes::{
    check_b_star, consecutive_embedding, find_b_membership, verify_a_certificate, verify_b_certificate,
    AClassCertificate, BClassCertificate, ClassError, ClassSignature, Colouring,
};
use crate::connectivity::is_k_connected;
use crate::embedding::{is_polyhedron, planar_embeddings, planar_rotation, EmbeddingError, PlaneGraph, RotationSystem};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("{family} needs parameter at least {min}, got {n}")]
    Parameter { family: &'static str, n: usize, min: usize },
    #[error("unknown family or solid {0:?}")]
    Unknown(String),
    #[error("{family} is not planar for parameter {n}")]
    NonPlanarFamily { family: &'static str, n: usize },
    #[error("input is not a polyhedron")]
    NotPolyhedron,
    #[error("input is not {0}-regular")]
    NotRegular(usize),
    #[error("vertex {0} out of range")]
    Vertex(usize),
    #[error("{0}{1} is not an edge")]
    Edge(usize, usize),
    #[error("edges {v}{u} and {v}{w} do not share a face")]
    NotCofacial { v: usize, u: usize, w: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("output failed verification: {0}")]
    Verification(&'static str),
    #[error("parameter {h} exceeds the bound {bound}")]
    SizeBound { h: usize, bound: usize },
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 5] =
        [Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron, Solid::Icosahedron];

    pub fn name(self) -> &'static str {
        match self {
            Solid::Tetrahedron => "tetrahedron",
            Solid::Cube => "cube",
            Solid::Octahedron => "octahedron",
            Solid::Dodecahedron => "dodecahedron",
            Solid::Icosahedron => "icosahedron",
        }
    }

    pub fn from_name(name: &str) -> Option<Solid> {
        Solid::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family", content = "n")]
pub enum FamilySpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Prism(usize),
    Antiprism(usize),
    /// Pyramid over an `n`-gon.
    WheelPyramid(usize),
    Bipyramid(usize),
    Platonic(Solid),
}

impl FamilySpec {
    pub const FAMILIES: [&'static str; 8] =
        ["complete", "cycle", "path", "prism", "antiprism", "wheel_pyramid", "bipyramid", "platonic"];

    /// `name` is one of [`FamilySpec::FAMILIES`]; `param` is a count, or a
    /// solid name for `platonic`.
    pub fn parse(name: &str, param: &str) -> Result<FamilySpec, GeneratorError> {
        if name == "platonic" {
            return Solid::from_name(param)
                .map(FamilySpec::Platonic)
                .ok_or_else(|| GeneratorError::Unknown(param.into()));
        }
        let n: usize = param.parse().map_err(|_| GeneratorError::Unknown(param.into()))?;
        let spec = match name {
            "complete" => FamilySpec::Complete(n),
            "cycle" => FamilySpec::Cycle(n),
            "path" => FamilySpec::Path(n),
            "prism" => FamilySpec::Prism(n),
            "antiprism" => FamilySpec::Antiprism(n),
            "wheel_pyramid" | "pyramid" | "wheel" => FamilySpec::WheelPyramid(n),
            "bipyramid" => FamilySpec::Bipyramid(n),
            _ => return Err(GeneratorError::Unknown(name.into())),
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<(), GeneratorError> {
        let (family, n, min) = match *self {
            FamilySpec::Complete(n) => ("complete", n, 1),
            FamilySpec::Cycle(n) => ("cycle", n, 3),
            FamilySpec::Path(n) => ("path", n, 1),
            FamilySpec::Prism(n) => ("prism", n, 3),
            FamilySpec::Antiprism(n) => ("antiprism", n, 3),
            FamilySpec::WheelPyramid(n) => ("wheel_pyramid", n, 3),
            FamilySpec::Bipyramid(n) => ("bipyramid", n, 3),
            FamilySpec::Platonic(_) => return Ok(()),
        };
        if n < min {
            return Err(GeneratorError::Parameter { family, n, min });
        }
        Ok(())
    }
}

fn ring(edges: &mut Vec<(usize, usize)>, vs: &[usize]) {
    for i in 0..vs.len() {
        edges.push((vs[i], vs[(i + 1) % vs.len()]));
    }
}

/// The family instance with the labelling documented on each case:
/// prisms put the two `n`-gons at `0..n` and `n..2n`; antiprisms use the
/// zigzag `0..2n` with even vertices on one `n`-gon; pyramids and bipyramids
/// put the apexes after the base.
pub fn generate(spec: FamilySpec) -> Result<Graph, GeneratorError> {
    spec.validate()?;
    let mut e = Vec::new();
    let n = match spec {
        FamilySpec::Complete(n) => {
            for i in 0..n {
                for j in i + 1..n {
                    e.push((i, j));
                }
            }
            n
        }
        FamilySpec::Cycle(n) => {
            ring(&mut e, &(0..n).collect::<Vec<_>>());
            n
        }
        FamilySpec::Path(n) => {
            e.extend((1..n).map(|i| (i - 1, i)));
            n
        }
        FamilySpec::Prism(n) => {
            ring(&mut e, &(0..n).collect::<Vec<_>>());
            ring(&mut e, &(n..2 * n).collect::<Vec<_>>());
            e.extend((0..n).map(|i| (i, i + n)));
            2 * n
        }
        FamilySpec::Antiprism(n) => {
            let m = 2 * n;
            for i in 0..m {
                e.push((i, (i + 1) % m));
                e.push((i, (i + 2) % m));
            }
            m
        }
        FamilySpec::WheelPyramid(n) => {
            ring(&mut e, &(0..n).collect::<Vec<_>>());
            e.extend((0..n).map(|i| (i, n)));
            n + 1
        }
        FamilySpec::Bipyramid(n) => {
            ring(&mut e, &(0..n).collect::<Vec<_>>());
            e.extend((0..n).map(|i| (i, n)));
            e.extend((0..n).map(|i| (i, n + 1)));
            n + 2
        }
        FamilySpec::Platonic(s) => return Ok(platonic(s)),
    };
    Ok(Graph::from_edges(n, &e)?)
}

fn platonic(s: Solid) -> Graph {
    let mut e = Vec::new();
    let n = match s {
        Solid::Tetrahedron => {
            e.extend([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
            4
        }
        Solid::Cube => {
            ring(&mut e, &[0, 1, 2, 3]);
            ring(&mut e, &[4, 5, 6, 7]);
            e.extend((0..4).map(|i| (i, i + 4)));
            8
        }
        Solid::Octahedron => {
            for i in 0..6 {
                for j in i + 1..6 {
                    if j != i + 3 {
                        e.push((i, j));
                    }
                }
            }
            6
        }
        Solid::Dodecahedron => {
            // outer pentagon 0..5, middle 10-cycle 5..15, inner pentagon 15..20
            ring(&mut e, &[0, 1, 2, 3, 4]);
            ring(&mut e, &(5..15).collect::<Vec<_>>());
            ring(&mut e, &[15, 16, 17, 18, 19]);
            for i in 0..5 {
                e.push((i, 5 + 2 * i));
                e.push((6 + 2 * i, 15 + i));
            }
            20
        }
        Solid::Icosahedron => {
            // apex 0, upper ring 1..6, lower ring 6..11, apex 11
            ring(&mut e, &[1, 2, 3, 4, 5]);
            ring(&mut e, &[6, 7, 8, 9, 10]);
            for i in 0..5 {
                e.push((0, 1 + i));
                e.push((11, 6 + i));
                e.push((1 + i, 6 + i));
                e.push((1 + (i + 1) % 5, 6 + i));
            }
            12
        }
    };
    Graph::from_edges(n, &e).expect("solid edge lists are valid")
}

/// The family instance with an explicit planar embedding.
pub fn generate_plane(spec: FamilySpec) -> Result<PlaneGraph, GeneratorError> {
    let g = generate(spec)?;
    match PlaneGraph::embed(g) {
        Ok(p) => Ok(p),
        Err(EmbeddingError::NonPlanarGraph) => {
            let n = match spec {
                FamilySpec::Complete(n) => n,
                _ => 0,
            };
            Err(GeneratorError::NonPlanarFamily { family: "complete", n })
        }
        Err(e) => Err(e.into()),
    }
}

/// A graph together with a verified `A`-class certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AMember {
    pub graph: Graph,
    pub certificate: AClassCertificate,
}

impl AMember {
    /// Checks the certificate before wrapping it.
    pub fn new(graph: Graph, certificate: AClassCertificate) -> Result<AMember, GeneratorError> {
        if !verify_a_certificate(&graph, &certificate)? {
            return Err(GeneratorError::Verification("A-class certificate rejected"));
        }
        Ok(AMember { graph, certificate })
    }

    /// Certifies `colouring` by searching for a consecutive embedding.
    pub fn from_colouring(
        graph: Graph,
        signature: ClassSignature,
        colouring: Colouring,
    ) -> Result<AMember, GeneratorError> {
        let rotation = consecutive_embedding(&graph, &colouring)
            .ok_or(GeneratorError::Verification("no consecutive embedding"))?;
        AMember::new(graph, AClassCertificate { signature, colouring, rotation })
    }
}

/// A graph together with a verified `B`-class certificate satisfying the
/// starred cut condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BMember {
    pub graph: Graph,
    pub certificate: BClassCertificate,
}

fn certify_b_star(graph: Graph, r: usize, sig: ClassSignature) -> Result<BMember, GeneratorError> {
    let certificate =
        find_b_membership(&graph, r, &sig)?.ok_or(GeneratorError::Verification("no B-class certificate"))?;
    if !verify_b_certificate(&graph, &certificate)? {
        return Err(GeneratorError::Verification("B-class certificate rejected"));
    }
    if !check_b_star(&graph, r) {
        return Err(GeneratorError::Verification("cut condition fails"));
    }
    Ok(BMember { graph, certificate })
}

/// Replaces every vertex `v` by a `deg(v)`-gon, one corner per incident edge.
/// Corner `(v, i)` sits on the edge to the `i`-th neighbour in the rotation at
/// `v` and gets index `offset(v) + i`.
pub fn truncate(p: &PlaneGraph) -> Result<PlaneGraph, GeneratorError> {
    let g = p.graph();
    if !is_polyhedron(g) {
        return Err(GeneratorError::NotPolyhedron);
    }
    let rot = p.rotation();
    let mut offset = vec![0; g.n() + 1];
    for v in 0..g.n() {
        offset[v + 1] = offset[v] + g.degree(v);
    }
    let corner = |v: usize, u: usize| -> usize {
        let i = rot.at(v).iter().position(|&x| x == u).expect("rotation lists the neighbours");
        offset[v] + i
    };
    let mut lists = vec![Vec::new(); offset[g.n()]];
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let d = g.degree(v);
        for i in 0..d {
            let u = rot.at(v)[i];
            let me = offset[v] + i;
            let next = offset[v] + (i + 1) % d;
            let prev = offset[v] + (i + d - 1) % d;
            lists[me] = vec![corner(u, v), next, prev];
            edges.push((me, next));
            if v < u {
                edges.push((me, corner(u, v)));
            }
        }
    }
    let graph = Graph::from_edges(offset[g.n()], &edges)?;
    let rotation = RotationSystem::new(&graph, lists)?;
    Ok(PlaneGraph::new(graph, rotation)?)
}

/// Expands every vertex of an `A(2,2)` member into an edge separating its red
/// pair of neighbours from its blue pair. Vertex `a` becomes `2a` (red side)
/// and `2a + 1` (blue side).
pub fn expand_all(g: &Graph, cert: &AClassCertificate) -> Result<PlaneGraph, GeneratorError> {
    if cert.signature.parts() != [2, 2] {
        return Err(GeneratorError::Precondition(alloc::format!(
            "expansion needs a (2,2) certificate, got {}",
            cert.signature
        )));
    }
    if !verify_a_certificate(g, cert)? {
        return Err(GeneratorError::Verification("input certificate rejected"));
    }
    let col = |v: usize| cert.colouring.colour(v) as usize;
    // the endpoint of the expanded neighbour x that faces a
    let end = |x: usize, a: usize| 2 * x + col(a) - 1;
    let mut lists = vec![Vec::new(); 2 * g.n()];
    let mut edges = Vec::new();
    for a in 0..g.n() {
        let l = cert.rotation.at(a);
        let i = (0..4).find(|&i| col(l[i]) == 1 && col(l[(i + 1) % 4]) == 1).expect("consecutive certificate");
        let at = |k: usize| l[(i + k) % 4];
        lists[2 * a] = vec![end(at(0), a), end(at(1), a), 2 * a + 1];
        lists[2 * a + 1] = vec![end(at(2), a), end(at(3), a), 2 * a];
        edges.push((2 * a, 2 * a + 1));
        for &x in l {
            if a < x {
                edges.push((end(a, x), end(x, a)));
            }
        }
    }
    let graph = Graph::from_edges(2 * g.n(), &edges)?;
    let rotation = RotationSystem::new(&graph, lists)?;
    Ok(PlaneGraph::new(graph, rotation)?)
}

fn require_regular_polyhedron(p: &Graph, r: Option<usize>) -> Result<usize, GeneratorError> {
    let d = p.regular_degree().ok_or(GeneratorError::NotRegular(r.unwrap_or(0)))?;
    if let Some(r) = r {
        if d != r {
            return Err(GeneratorError::NotRegular(r));
        }
    }
    if !is_polyhedron(p) {
        return Err(GeneratorError::NotPolyhedron);
    }
    Ok(d)
}

/// `P - v` for a cubic polyhedron `P`, certified in the starred class with
/// signature `(1,1,1)`. The former neighbours of `v` are coloured in
/// ascending order of their new indices.
pub fn delete_vertex_from_cubic(p: &Graph, v: usize) -> Result<BMember, GeneratorError> {
    if v >= p.n() {
        return Err(GeneratorError::Vertex(v));
    }
    require_regular_polyhedron(p, Some(3))?;
    let (g, _) = p.remove_vertices(&[v]);
    certify_b_star(g, 3, ClassSignature::new(vec![1, 1, 1])?)
}

/// `P - vu - vw` for an `r`-regular polyhedron `P`, `3 <= r <= 5`, where `vu`
/// and `vw` are consecutive around `v`. Certified in the starred class with
/// signature `(2,1,1)`, `v` red.
pub fn delete_two_adjacent_edges(p: &Graph, v: usize, u: usize, w: usize) -> Result<BMember, GeneratorError> {
    for x in [v, u, w] {
        if x >= p.n() {
            return Err(GeneratorError::Vertex(x));
        }
    }
    for x in [u, w] {
        if !p.has_edge(v, x) {
            return Err(GeneratorError::Edge(v, x));
        }
    }
    if u == w {
        return Err(GeneratorError::Precondition("the two edges coincide".into()));
    }
    let r = require_regular_polyhedron(p, None)?;
    if !(3..=5).contains(&r) {
        return Err(GeneratorError::Precondition(alloc::format!("degree {r} outside 3..=5")));
    }
    let rot = planar_rotation(p).ok_or(GeneratorError::NotPolyhedron)?;
    let around = rot.at(v);
    let iu = around.iter().position(|&x| x == u).expect("neighbour in rotation");
    let iw = around.iter().position(|&x| x == w).expect("neighbour in rotation");
    let gap = (iu + r - iw) % r;
    if gap != 1 && gap != r - 1 {
        return Err(GeneratorError::NotCofacial { v, u, w });
    }
    let g = p.edit_edges(&[(v, u), (v, w)], &[])?;
    let member = certify_b_star(g, r, ClassSignature::new(vec![2, 1, 1])?)?;
    debug_assert_eq!(member.certificate.coloured(1), v);
    Ok(member)
}

/// Largest `h` accepted by [`b5_111_family`].
pub const B5_FAMILY_MAX_H: usize = 4;

/// The starred `(1,1,1)` member of degree 5 built on the `(8 + 40h)`-gonal
/// antiprism. The antiprism is the zigzag `0..2N` with inner rim at even and
/// outer rim at odd indices; `2 + 10h` inner vertices follow, each joined to
/// four consecutive inner-rim vertices and paired off by extra edges, then
/// `1 + 8h` outer vertices each joined to five consecutive outer-rim
/// vertices. The last three outer-rim vertices keep degree 4.
pub fn b5_111_family(h: usize) -> Result<BMember, GeneratorError> {
    if h > B5_FAMILY_MAX_H {
        return Err(GeneratorError::SizeBound { h, bound: B5_FAMILY_MAX_H });
    }
    let rim = 8 + 40 * h;
    let inner = 2 + 10 * h;
    let outer = 1 + 8 * h;
    let m = 2 * rim;
    let mut e = Vec::new();
    for i in 0..m {
        e.push((i, (i + 1) % m));
        e.push((i, (i + 2) % m));
    }
    for j in 0..inner {
        let x = m + j;
        e.extend((0..4).map(|k| (x, 2 * (4 * j + k))));
        if j % 2 == 1 {
            e.push((x - 1, x));
        }
    }
    for j in 0..outer {
        let x = m + inner + j;
        e.extend((0..5).map(|k| (x, 2 * (5 * j + k) + 1)));
    }
    let g = Graph::from_edges(m + inner + outer, &e)?;
    certify_b_star(g, 5, ClassSignature::new(vec![1, 1, 1])?)
}

fn faces_with(rotation: &RotationSystem, needed: &[usize]) -> bool {
    rotation.faces().iter().any(|f| needed.iter().all(|v| f.contains(v)))
}

fn check_edge_colour(m: &AMember, e: (usize, usize), c: u8) -> Result<(), GeneratorError> {
    let (x, y) = e;
    if x >= m.graph.n() || y >= m.graph.n() || !m.graph.has_edge(x, y) {
        return Err(GeneratorError::Edge(x, y));
    }
    let col = &m.certificate.colouring;
    if col.colour(x) != c || col.colour(y) != c {
        return Err(GeneratorError::Precondition(alloc::format!("edge {x}{y} is not monochromatic of colour {c}")));
    }
    Ok(())
}

fn glued_member(
    first: &AMember,
    second: &AMember,
    remove: &[(usize, usize)],
    add: &[(usize, usize)],
) -> Result<AMember, GeneratorError> {
    let union = first.graph.disjoint_union(&second.graph);
    let g = union.edit_edges(remove, add)?;
    let mut colours = first.certificate.colouring.colours().to_vec();
    colours.extend_from_slice(second.certificate.colouring.colours());
    AMember::from_colouring(g, first.certificate.signature.clone(), Colouring::new(colours)?)
}

/// Two copies of `a`, the second shifted by `|V(a)|`, joined by
/// `A - a1a2 - a3a4 + a1a3 + a2a4` where `a1a2` is an edge of the first copy
/// and `a3a4` of the second, all four vertices red. The result is
/// re-certified.
pub fn glue_two_copies(a: &AMember, e1: (usize, usize), e2: (usize, usize)) -> Result<AMember, GeneratorError> {
    check_edge_colour(a, e1, 1)?;
    check_edge_colour(a, e2, 1)?;
    let n = a.graph.n();
    let (a1, a2) = e1;
    let (a3, a4) = (e2.0 + n, e2.1 + n);
    glued_member(a, a, &[(a1, a2), (a3, a4)], &[(a1, a3), (a2, a4)])
}

/// Four vertices on one face: a blue edge `(x2, y2)` and a green edge
/// `(x3, y3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluePattern {
    pub blue: (usize, usize),
    pub green: (usize, usize),
}

/// Joins two `(2,1,1)` members along a blue and a green edge of one face in
/// each: the blue edges `u2v2`, `w2x2` are replaced by `u2w2`, `v2x2`, and the
/// green edges likewise. The second member is shifted by `|V(A1)|`.
pub fn glue_a211(a1: &AMember, p1: GluePattern, a2: &AMember, p2: GluePattern) -> Result<AMember, GeneratorError> {
    for m in [a1, a2] {
        if m.certificate.signature.parts() != [2, 1, 1] {
            return Err(GeneratorError::Precondition("gluing needs (2,1,1) members".into()));
        }
    }
    for (m, p) in [(a1, p1), (a2, p2)] {
        check_edge_colour(m, p.blue, 2)?;
        check_edge_colour(m, p.green, 3)?;
        let needed = [p.blue.0, p.blue.1, p.green.0, p.green.1];
        if !faces_with(&m.certificate.rotation, &needed) {
            return Err(GeneratorError::Precondition("pattern vertices do not share a face".into()));
        }
    }
    let n = a1.graph.n();
    let (u2, v2) = p1.blue;
    let (u3, v3) = p1.green;
    let (w2, x2) = (p2.blue.0 + n, p2.blue.1 + n);
    let (w3, x3) = (p2.green.0 + n, p2.green.1 + n);
    glued_member(a1, a2, &[(u2, v2), (w2, x2), (u3, v3), (w3, x3)], &[(u2, w2), (v2, x2), (u3, w3), (v3, x3)])
}

/// Side of a black cycle on which a same-colour cycle runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Inner,
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidedCycle {
    pub vertices: Vec<usize>,
    pub side: Side,
}

/// Black cycles alternate red and blue vertices starting with red; the red
/// and blue cycles cover the red and blue vertices once each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct A22Spec {
    pub black_cycles: Vec<Vec<usize>>,
    pub red_cycles: Vec<SidedCycle>,
    pub blue_cycles: Vec<SidedCycle>,
}

/// Embeddings tried when matching the side flags.
pub const A22_EMBEDDING_LIMIT: usize = 4096;

/// Builds and certifies the `(2,2)` member described by `spec`. Sides are
/// read relative to each black cycle up to swapping inner and outer for that
/// cycle, since which side is inner depends on the choice of outer face.
pub fn a22_from_cycles(spec: &A22Spec) -> Result<AMember, GeneratorError> {
    let n: usize = spec.black_cycles.iter().map(Vec::len).sum();
    let mut colour = vec![0u8; n];
    let mut black_of = vec![(usize::MAX, 0); n];
    let mut edges = Vec::new();
    for (ci, cyc) in spec.black_cycles.iter().enumerate() {
        if cyc.len() < 6 || cyc.len() % 2 == 1 {
            return Err(GeneratorError::Precondition(alloc::format!(
                "black cycle {ci} has length {}, need an even length of at least 6",
                cyc.len()
            )));
        }
        for (i, &v) in cyc.iter().enumerate() {
            if v >= n || colour[v] != 0 {
                return Err(GeneratorError::Precondition(alloc::format!("vertex {v} repeated or out of range")));
            }
            colour[v] = if i % 2 == 0 { 1 } else { 2 };
            black_of[v] = (ci, i);
        }
        ring(&mut edges, cyc);
    }
    let mut flag = vec![None; n];
    for (c, cycles) in [(1u8, &spec.red_cycles), (2u8, &spec.blue_cycles)] {
        for cyc in cycles {
            if cyc.vertices.len() < 3 {
                return Err(GeneratorError::Precondition("same-colour cycles need length at least 3".into()));
            }
            for &v in &cyc.vertices {
                if v >= n || colour[v] != c || flag[v].is_some() {
                    return Err(GeneratorError::Precondition(alloc::format!(
                        "vertex {v} is not an unused vertex of colour {c}"
                    )));
                }
                flag[v] = Some(cyc.side);
            }
            ring(&mut edges, &cyc.vertices);
        }
    }
    if flag.iter().any(Option::is_none) {
        return Err(GeneratorError::Precondition("some vertex lies on no same-colour cycle".into()));
    }
    let g = Graph::from_edges(n, &edges)?;
    if !g.is_connected() {
        return Err(GeneratorError::Verification("result is disconnected"));
    }
    if g.regular_degree() != Some(4) {
        return Err(GeneratorError::Verification("result is not 4-regular"));
    }
    let colouring = Colouring::new(colour)?;
    let embeddings = if is_k_connected(&g, 3) {
        planar_rotation(&g).into_iter().collect()
    } else {
        planar_embeddings(&g, A22_EMBEDDING_LIMIT).map_err(|_| GeneratorError::Verification("result is not planar"))?
    };
    if embeddings.is_empty() {
        return Err(GeneratorError::Verification("result is not planar"));
    }
    let sides_match = |rot: &RotationSystem| {
        // per black cycle: which flag sits on the left
        let mut left_is: Vec<Option<Side>> = vec![None; spec.black_cycles.len()];
        (0..n).all(|v| {
            let (ci, i) = black_of[v];
            let cyc = &spec.black_cycles[ci];
            let next = cyc[(i + 1) % cyc.len()];
            let prev = cyc[(i + cyc.len() - 1) % cyc.len()];
            let around = rot.at(v);
            let start = around.iter().position(|&x| x == next).expect("neighbour");
            // neighbours strictly after `next` and before `prev`
            let same = around[(start + 1) % 4];
            let left = same != prev && colouring.colour(same) == colouring.colour(v);
            let f = flag[v].expect("flag set");
            let here = if left { f } else { other(f) };
            match left_is[ci] {
                None => {
                    left_is[ci] = Some(here);
                    true
                }
                Some(s) => s == here,
            }
        })
    };
    let rotation = embeddings
        .iter()
        .flat_map(|r| [r.clone(), r.reflect()])
        .find(|r| sides_match(r))
        .ok_or(GeneratorError::Precondition("no embedding realises the side flags".into()))?;
    AMember::new(g, AClassCertificate { signature: ClassSignature::new(vec![2, 2])?, colouring, rotation })
}

fn other(s: Side) -> Side {
    match s {
        Side::Inner => Side::Outer,
        Side::Outer => Side::Inner,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let g = generate(FamilySpec::WheelPyramid(4)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 8));
        let g = generate(FamilySpec::Antiprism(4)).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.regular_degree()), (8, 16, Some(4)));
        let g = generate(FamilySpec::Platonic(Solid::Octahedron)).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 12));
        for (s, n, d) in [(Solid::Dodecahedron, 20, 3), (Solid::Icosahedron, 12, 5), (Solid::Cube, 8, 3)] {
            let g = generate(FamilySpec::Platonic(s)).unwrap();
            assert_eq!((g.n(), g.regular_degree()), (n, Some(d)));
            assert!(is_polyhedron(&g));
        }
        assert!(FamilySpec::parse("antiprism", "2").is_err());
        assert!(generate_plane(FamilySpec::Complete(5)).is_err());
    }

    #[test]
    fn truncation_counts() {
        for (spec, n, m) in [
            (FamilySpec::Platonic(Solid::Tetrahedron), 12, 18),
            (FamilySpec::Prism(3), 18, 27),
            (FamilySpec::Platonic(Solid::Cube), 24, 36),
        ] {
            let t = truncate(&generate_plane(spec).unwrap()).unwrap();
            assert_eq!((t.graph().n(), t.graph().edge_count()), (n, m));
            assert!(is_polyhedron(t.graph()));
        }
        assert!(truncate(&generate_plane(FamilySpec::Cycle(5)).unwrap()).is_err());
    }

    #[test]
    fn deletions() {
        let k4 = generate(FamilySpec::Platonic(Solid::Tetrahedron)).unwrap();
        let b = delete_vertex_from_cubic(&k4, 0).unwrap();
        assert_eq!(b.graph, generate(FamilySpec::Cycle(3)).unwrap());
        let b = delete_two_adjacent_edges(&k4, 0, 1, 2).unwrap();
        let expected = Graph::from_edges(4, &[(0, 3), (1, 3), (2, 3), (1, 2)]).unwrap();
        assert_eq!(b.graph, expected);
        let cube = generate(FamilySpec::Platonic(Solid::Cube)).unwrap();
        let b = delete_vertex_from_cubic(&cube, 5).unwrap();
        assert_eq!(b.graph.degree_sequence().degrees, vec![3, 3, 3, 3, 2, 2, 2]);
        // 0 and 2 are both neighbours of 1 in the cube and share a face
        assert!(delete_two_adjacent_edges(&cube, 1, 0, 2).is_ok());
        let oct = generate(FamilySpec::Platonic(Solid::Octahedron)).unwrap();
        // 1 and 4 are antipodal around 0
        assert!(matches!(delete_two_adjacent_edges(&oct, 0, 1, 4), Err(GeneratorError::NotCofacial { .. })));
        assert!(delete_two_adjacent_edges(&oct, 0, 1, 2).is_ok());
    }

    #[test]
    fn b5_family_small() {
        let b = b5_111_family(0).unwrap();
        assert_eq!(b.graph.n(), 19);
        let mut expected = vec![5; 16];
        expected.extend([4, 4, 4]);
        assert_eq!(b.graph.degree_sequence().degrees, expected);
        assert!(b5_111_family(B5_FAMILY_MAX_H + 1).is_err());
    }

    #[test]
    fn a22_antiprism() {
        let n = 5;
        let spec = A22Spec {
            black_cycles: vec![(0..2 * n).collect()],
            red_cycles: vec![SidedCycle { vertices: (0..n).map(|i| 2 * i).collect(), side: Side::Inner }],
            blue_cycles: vec![SidedCycle { vertices: (0..n).map(|i| 2 * i + 1).collect(), side: Side::Outer }],
        };
        let m = a22_from_cycles(&spec).unwrap();
        assert_eq!(m.graph, generate(FamilySpec::Antiprism(n)).unwrap());
        let short = A22Spec { black_cycles: vec![vec![0, 1, 2, 3]], red_cycles: vec![], blue_cycles: vec![] };
        assert!(a22_from_cycles(&short).is_err());
        let expanded = expand_all(&m.graph, &m.certificate).unwrap();
        assert_eq!(expanded.graph().regular_degree(), Some(3));
        assert!(is_k_connected(expanded.graph(), 3));
    }
}
