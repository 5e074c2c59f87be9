//! Colour classes of regular planar graphs (the `A` side) and of the graphs
//! with one deficient face (the `B` side), with searches and verifiers.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_cut_set, is_k_connected};
use crate::embedding::{embedding_with_common_face, is_planar, planar_rotation, EmbeddingError, RotationSystem};
use crate::graph::{Graph, GraphError, VertexMap};

pub const COLOUR_NAMES: [&str; 5] = ["red", "blue", "green", "black", "yellow"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassError {
    #[error("invalid signature {0:?}")]
    Signature(Vec<usize>),
    #[error("colouring has {got} entries for {n} vertices")]
    ColouringLength { got: usize, n: usize },
    #[error("colour {colour} outside 1..={k}")]
    Colour { colour: u8, k: usize },
    #[error("coloured vertex list has {got} entries for {k} colours")]
    ColouredVertices { got: usize, k: usize },
    #[error("regularity {0} outside 2..=5")]
    Regularity(usize),
    #[error("signatures differ: {0:?} and {1:?}")]
    SignatureMismatch(Vec<usize>, Vec<usize>),
    #[error("certificate does not verify")]
    InvalidCertificate,
    #[error("search refused: {n} vertices exceeds the bound {bound}")]
    SearchRefused { n: usize, bound: usize },
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `(n_1 >= ... >= n_k >= 1)` with `k <= 5` and sum at most 5.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ClassSignature {
    parts: Vec<usize>,
}

impl ClassSignature {
    pub fn new(parts: Vec<usize>) -> Result<Self, ClassError> {
        let ok = !parts.is_empty()
            && parts.len() <= 5
            && parts.iter().sum::<usize>() <= 5
            && parts.iter().all(|&p| p >= 1)
            && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(ClassSignature { parts })
        } else {
            Err(ClassError::Signature(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `n_i` for the 1-based colour `c`.
    pub fn part(&self, c: u8) -> usize {
        self.parts[c as usize - 1]
    }

    /// Regularity of the members: `n_1 + ... + n_k`.
    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl TryFrom<Vec<usize>> for ClassSignature {
    type Error = ClassError;
    fn try_from(parts: Vec<usize>) -> Result<Self, ClassError> {
        ClassSignature::new(parts)
    }
}

impl From<ClassSignature> for Vec<usize> {
    fn from(s: ClassSignature) -> Vec<usize> {
        s.parts
    }
}

impl core::fmt::Display for ClassSignature {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Per-vertex colour index, 1-based (`1` is red).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring(Vec<u8>);

impl Colouring {
    pub fn new(colours: Vec<u8>) -> Result<Self, ClassError> {
        if let Some(&c) = colours.iter().find(|&&c| !(1..=5).contains(&c)) {
            return Err(ClassError::Colour { colour: c, k: 5 });
        }
        Ok(Colouring(colours))
    }

    pub fn colour(&self, v: usize) -> u8 {
        self.0[v]
    }

    pub fn colours(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices_of(&self, c: u8) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AClassCertificate {
    pub signature: ClassSignature,
    pub colouring: Colouring,
    pub rotation: RotationSystem,
}

fn check_a_shapes(g: &Graph, cert: &AClassCertificate) -> Result<(), ClassError> {
    if cert.colouring.len() != g.n() {
        return Err(ClassError::ColouringLength { got: cert.colouring.len(), n: g.n() });
    }
    let k = cert.signature.k();
    if let Some(&c) = cert.colouring.colours().iter().find(|&&c| c as usize > k) {
        return Err(ClassError::Colour { colour: c, k });
    }
    RotationSystem::new(g, cert.rotation.lists().to_vec())?;
    Ok(())
}

/// Every vertex has exactly `n_i` neighbours of colour `c_i`.
pub fn colour_counts_hold(g: &Graph, sig: &ClassSignature, colouring: &Colouring) -> bool {
    (0..g.n()).all(|v| {
        let mut count = [0usize; 6];
        for &u in g.neighbours(v) {
            count[colouring.colour(u) as usize] += 1;
        }
        (1..=sig.k()).all(|i| count[i] == sig.parts[i - 1]) && count[sig.k() + 1..].iter().all(|&c| c == 0)
    })
}

/// Around every vertex, neighbours of one colour form a single cyclic block.
pub fn is_consecutive(rotation: &RotationSystem, colouring: &Colouring) -> bool {
    (0..rotation.n()).all(|v| {
        let list = rotation.at(v);
        let d = list.len();
        let mut distinct: Vec<u8> = list.iter().map(|&u| colouring.colour(u)).collect();
        distinct.sort_unstable();
        distinct.dedup();
        let changes = (0..d).filter(|&i| colouring.colour(list[i]) != colouring.colour(list[(i + 1) % d])).count();
        if distinct.len() <= 1 {
            changes == 0
        } else {
            changes == distinct.len()
        }
    })
}

/// The defining conditions plus consecutiveness of colours in the rotation.
pub fn verify_a_certificate(g: &Graph, cert: &AClassCertificate) -> Result<bool, ClassError> {
    check_a_shapes(g, cert)?;
    Ok(g.is_connected()
        && cert.rotation.is_planar()
        && g.regular_degree() == Some(cert.signature.degree())
        && colour_counts_hold(g, &cert.signature, &cert.colouring)
        && is_consecutive(&cert.rotation, &cert.colouring))
}

/// A planar embedding of `g` in which `colouring` is consecutive at every
/// vertex. Each vertex is blown up into a star with one leaf per colour class
/// of its neighbours; the blown-up graph is planar iff such an embedding
/// exists, and contracting the stars recovers it.
pub fn consecutive_embedding(g: &Graph, colouring: &Colouring) -> Option<RotationSystem> {
    let n = g.n();
    // block[v][c] = gadget vertex for colour c at v
    let mut block = vec![[usize::MAX; 6]; n];
    let mut next = n;
    for v in 0..n {
        for &u in g.neighbours(v) {
            let c = colouring.colour(u) as usize;
            if block[v][c] == usize::MAX {
                block[v][c] = next;
                next += 1;
            }
        }
    }
    let mut edges = Vec::new();
    let mut owner = vec![usize::MAX; next];
    for v in 0..n {
        for c in 1..6 {
            if block[v][c] != usize::MAX {
                edges.push((v, block[v][c]));
                owner[block[v][c]] = v;
            }
        }
    }
    for (u, v) in g.edges() {
        edges.push((block[u][colouring.colour(v) as usize], block[v][colouring.colour(u) as usize]));
    }
    let gadget = Graph::from_edges(next, &edges).ok()?;
    let rot = planar_rotation(&gadget)?;
    let lists: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut out = Vec::with_capacity(g.degree(v));
            for &x in rot.at(v) {
                let around = rot.at(x);
                let start = around.iter().position(|&y| y == v).expect("star edge present");
                for step in 1..around.len() {
                    out.push(owner[around[(start + step) % around.len()]]);
                }
            }
            out
        })
        .collect();
    let result = RotationSystem::new(g, lists).ok()?;
    result.is_planar().then_some(result)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBounds {
    /// Vertex bound for graphs that are not 3-connected.
    pub general: usize,
    /// Vertex bound for 3-connected graphs.
    pub three_connected: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { general: 12, three_connected: 16 }
    }
}

impl SearchBounds {
    pub fn uniform(bound: usize) -> Self {
        SearchBounds { general: bound, three_connected: bound.max(16) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub bounds: SearchBounds,
    /// Reject partial colourings that admit no consecutive embedding.
    pub consecutive_pruning: bool,
    /// Reject at once when some colour class size `n * n_i / sum` is fractional,
    /// and bound class sizes during the search.
    pub count_precheck: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { bounds: SearchBounds::default(), consecutive_pruning: true, count_precheck: true }
    }
}

fn check_bound(g: &Graph, bounds: &SearchBounds) -> Result<(), ClassError> {
    let bound = if g.n() > bounds.general && is_k_connected(g, 3) { bounds.three_connected } else { bounds.general };
    if g.n() > bound {
        return Err(ClassError::SearchRefused { n: g.n(), bound });
    }
    Ok(())
}

struct ColouringSearch<'a> {
    g: &'a Graph,
    sig: &'a ClassSignature,
    opts: SearchOptions,
    order: Vec<usize>,
    colour: Vec<u8>,
    count: Vec<[usize; 6]>,
    uncoloured: Vec<usize>,
    used: [usize; 6],
    class_cap: [usize; 6],
}

impl<'a> ColouringSearch<'a> {
    fn new(g: &'a Graph, sig: &'a ClassSignature, opts: SearchOptions) -> Self {
        let n = g.n();
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &u in g.neighbours(v) {
                    if !seen[u] {
                        seen[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        let d = sig.degree().max(1);
        let mut class_cap = [n; 6];
        if opts.count_precheck {
            for i in 1..=sig.k() {
                class_cap[i] = n * sig.parts[i - 1] / d;
            }
        }
        ColouringSearch {
            g,
            sig,
            opts,
            order,
            colour: vec![0; n],
            count: vec![[0; 6]; n],
            uncoloured: (0..n).map(|v| g.degree(v)).collect(),
            used: [0; 6],
            class_cap,
        }
    }

    /// Colours allowed by symmetry: the first of a block of equal parts, or a
    /// later one once its predecessor is in use.
    fn symmetric_ok(&self, c: u8) -> bool {
        let i = c as usize;
        i == 1 || self.sig.parts[i - 2] != self.sig.parts[i - 1] || self.used[i - 1] > 0
    }

    fn partial_colouring(&self) -> Option<RotationSystem> {
        // vertices whose neighbourhood is fully coloured get their blocks;
        // everything else stays a single vertex
        let g = self.g;
        let n = g.n();
        let mut block = vec![[usize::MAX; 6]; n];
        let mut next = n;
        for v in 0..n {
            if self.uncoloured[v] == 0 {
                for &u in g.neighbours(v) {
                    let c = self.colour[u] as usize;
                    if block[v][c] == usize::MAX {
                        block[v][c] = next;
                        next += 1;
                    }
                }
            }
        }
        let mut edges = Vec::new();
        for v in 0..n {
            for c in 1..6 {
                if block[v][c] != usize::MAX {
                    edges.push((v, block[v][c]));
                }
            }
        }
        let end = |v: usize, u: usize| if self.uncoloured[v] == 0 { block[v][self.colour[u] as usize] } else { v };
        for (u, v) in g.edges() {
            edges.push((end(u, v), end(v, u)));
        }
        let gadget = Graph::from_edges(next, &edges).ok()?;
        planar_rotation(&gadget)
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&Colouring) -> bool) -> bool {
        if k == self.order.len() {
            return visit(&Colouring(self.colour.clone()));
        }
        let v = self.order[k];
        for c in 1..=self.sig.k() as u8 {
            let ci = c as usize;
            if !self.symmetric_ok(c) || self.used[ci] >= self.class_cap[ci] {
                continue;
            }
            let need = self.sig.parts[ci - 1];
            if self.g.neighbours(v).iter().any(|&u| self.count[u][ci] >= need) {
                continue;
            }
            self.colour[v] = c;
            self.used[ci] += 1;
            let mut completed = false;
            for &u in self.g.neighbours(v) {
                self.count[u][ci] += 1;
                self.uncoloured[u] -= 1;
                completed |= self.uncoloured[u] == 0;
            }
            let prune = self.opts.consecutive_pruning && completed && self.partial_colouring().is_none();
            let stop = !prune && !self.run(k + 1, visit);
            for &u in self.g.neighbours(v) {
                self.count[u][ci] -= 1;
                self.uncoloured[u] += 1;
            }
            self.used[ci] -= 1;
            self.colour[v] = 0;
            if stop {
                return false;
            }
        }
        true
    }
}

fn a_preconditions(g: &Graph, sig: &ClassSignature, opts: &SearchOptions) -> Result<bool, ClassError> {
    check_bound(g, &opts.bounds)?;
    if g.n() == 0 || !g.is_connected() || g.regular_degree() != Some(sig.degree()) || !is_planar(g) {
        return Ok(false);
    }
    if opts.count_precheck && sig.parts.iter().any(|&p| !(g.n() * p).is_multiple_of(sig.degree())) {
        return Ok(false);
    }
    Ok(true)
}

/// A certificate of membership in `A(sig)`, or `None` after an exhaustive
/// search. With consecutive pruning the certificate's rotation is consecutive;
/// without it the colouring search ignores embeddings and the rotation is a
/// consecutive one when available, otherwise any planar one.
pub fn find_a_membership(
    g: &Graph,
    sig: &ClassSignature,
    opts: &SearchOptions,
) -> Result<Option<AClassCertificate>, ClassError> {
    if !a_preconditions(g, sig, opts)? {
        return Ok(None);
    }
    let mut found = None;
    let mut search = ColouringSearch::new(g, sig, *opts);
    search.run(0, &mut |colouring| {
        let rotation = match consecutive_embedding(g, colouring) {
            Some(r) => r,
            None if opts.consecutive_pruning => return true,
            None => planar_rotation(g).expect("planarity checked"),
        };
        found = Some(AClassCertificate { signature: sig.clone(), colouring: colouring.clone(), rotation });
        false
    });
    Ok(found)
}

/// Every colouring meeting the neighbour counts, up to permuting colours with
/// equal parts. Ignores embeddings.
pub fn all_a_colourings(g: &Graph, sig: &ClassSignature, opts: &SearchOptions) -> Result<Vec<Colouring>, ClassError> {
    let opts = SearchOptions { consecutive_pruning: false, ..*opts };
    if !a_preconditions(g, sig, &opts)? {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    ColouringSearch::new(g, sig, opts).run(0, &mut |c| {
        out.push(c.clone());
        true
    });
    Ok(out)
}

/// Merges colour `from` into colour `to` and renumbers so the new parts are
/// non-increasing. Members of the finer class are members of the coarser one.
pub fn recolour(cert: &AClassCertificate, from: u8, to: u8) -> Result<AClassCertificate, ClassError> {
    let k = cert.signature.k();
    for c in [from, to] {
        if c == 0 || c as usize > k {
            return Err(ClassError::Colour { colour: c, k });
        }
    }
    if from == to {
        return Ok(cert.clone());
    }
    let mut parts: Vec<(usize, u8)> = Vec::new();
    for c in 1..=k as u8 {
        if c == from {
            continue;
        }
        let p = cert.signature.part(c) + if c == to { cert.signature.part(from) } else { 0 };
        parts.push((p, c));
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut relabel = [0u8; 6];
    for (i, &(_, c)) in parts.iter().enumerate() {
        relabel[c as usize] = i as u8 + 1;
    }
    relabel[from as usize] = relabel[to as usize];
    let colouring = Colouring(cert.colouring.colours().iter().map(|&c| relabel[c as usize]).collect());
    let signature = ClassSignature::new(parts.iter().map(|p| p.0).collect())?;
    Ok(AClassCertificate { signature, colouring, rotation: cert.rotation.clone() })
}

/// Extra condition on the 2-cuts of an `A(2,1,1)` member.
pub fn check_a_hash(g: &Graph, cert: &AClassCertificate) -> Result<bool, ClassError> {
    if cert.signature.parts() != [2, 1, 1] || !verify_a_certificate(g, cert)? {
        return Err(ClassError::InvalidCertificate);
    }
    let n = g.n();
    for a1 in 0..n {
        for a2 in a1 + 1..n {
            let w = [a1, a2];
            if !is_cut_set(g, &w) {
                continue;
            }
            let comps = g.components_avoiding(&w);
            if comps.len() != 2 {
                return Ok(false);
            }
            let good = |a: usize| {
                comps.iter().all(|comp| {
                    let inside: Vec<usize> = g.neighbours(a).iter().copied().filter(|u| comp.contains(u)).collect();
                    inside.len() == 2 && inside.iter().filter(|&&u| cert.colouring.colour(u) == 1).count() == 1
                })
            };
            if !good(a1) && !good(a2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

mod colour_keyed {
    use super::COLOUR_NAMES;
    use alloc::collections::BTreeMap;
    use alloc::string::String;
    use alloc::vec::Vec;
    use serde::de::Error;
    use serde::ser::SerializeMap;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[usize], s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(v.len()))?;
        for (i, x) in v.iter().enumerate() {
            map.serialize_entry(COLOUR_NAMES[i], x)?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<usize>, D::Error> {
        let m: BTreeMap<String, usize> = BTreeMap::deserialize(d)?;
        if m.len() > COLOUR_NAMES.len() {
            return Err(D::Error::custom("too many colours"));
        }
        COLOUR_NAMES[..m.len()]
            .iter()
            .map(|name| m.get(*name).copied().ok_or_else(|| D::Error::custom(alloc::format!("missing colour {name}"))))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BClassCertificate {
    pub r: usize,
    pub signature: ClassSignature,
    /// Vertex carrying colour `c_i` at position `i - 1`.
    #[serde(with = "colour_keyed")]
    pub coloured_vertices: Vec<usize>,
    pub rotation: RotationSystem,
    /// Index of a face of `rotation` containing every coloured vertex.
    pub face: usize,
}

impl BClassCertificate {
    pub fn coloured(&self, c: u8) -> usize {
        self.coloured_vertices[c as usize - 1]
    }
}

fn check_b_signature(r: usize, sig: &ClassSignature) -> Result<(), ClassError> {
    if !(2..=5).contains(&r) {
        return Err(ClassError::Regularity(r));
    }
    if sig.k() > 3 {
        return Err(ClassError::Signature(sig.parts.clone()));
    }
    Ok(())
}

/// A certificate of membership in `B_r(sig)`, or `None`. Colours go to the
/// deficient vertices by deficiency; ties are broken by ascending index.
pub fn find_b_membership(g: &Graph, r: usize, sig: &ClassSignature) -> Result<Option<BClassCertificate>, ClassError> {
    check_b_signature(r, sig)?;
    if g.n() == 0 || !g.is_connected() || (0..g.n()).any(|v| g.degree(v) > r) {
        return Ok(None);
    }
    let deficient: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) < r).collect();
    if deficient.len() != sig.k() {
        return Ok(None);
    }
    let mut coloured = Vec::with_capacity(sig.k());
    let mut taken = vec![false; g.n()];
    for &p in sig.parts() {
        match deficient.iter().copied().find(|&v| !taken[v] && r - g.degree(v) == p) {
            Some(v) => {
                taken[v] = true;
                coloured.push(v);
            }
            None => return Ok(None),
        }
    }
    Ok(embedding_with_common_face(g, &coloured).map(|(rotation, face)| BClassCertificate {
        r,
        signature: sig.clone(),
        coloured_vertices: coloured,
        rotation,
        face,
    }))
}

pub fn verify_b_certificate(g: &Graph, cert: &BClassCertificate) -> Result<bool, ClassError> {
    check_b_signature(cert.r, &cert.signature)?;
    if cert.coloured_vertices.len() != cert.signature.k() {
        return Err(ClassError::ColouredVertices { got: cert.coloured_vertices.len(), k: cert.signature.k() });
    }
    RotationSystem::new(g, cert.rotation.lists().to_vec())?;
    let faces = cert.rotation.faces();
    let face = faces.get(cert.face).ok_or(EmbeddingError::FaceIndex(cert.face))?;
    let r = cert.r;
    let mut distinct = cert.coloured_vertices.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != cert.coloured_vertices.len() || distinct.iter().any(|&v| v >= g.n()) {
        return Ok(false);
    }
    let degrees_ok = (0..g.n()).all(|v| match cert.coloured_vertices.iter().position(|&x| x == v) {
        Some(i) => g.degree(v) + cert.signature.parts()[i] == r,
        None => g.degree(v) == r,
    });
    let on_face = g.edge_count() == 0 || cert.coloured_vertices.iter().all(|v| face.contains(v));
    Ok(g.is_connected() && cert.rotation.is_planar() && degrees_ok && on_face)
}

/// For every cut `W` of one or two vertices, each component `J` of `G - W`
/// has total deficiency `sum (r - deg v)` of at least `3 - |W|`.
pub fn check_b_star(g: &Graph, r: usize) -> bool {
    let n = g.n();
    let deficiency = |comp: &[usize]| comp.iter().map(|&v| r.saturating_sub(g.degree(v))).sum::<usize>();
    for a in 0..n {
        if is_cut_set(g, &[a]) && g.components_avoiding(&[a]).iter().any(|j| deficiency(j) < 2) {
            return false;
        }
        for b in a + 1..n {
            if is_cut_set(g, &[a, b]) && g.components_avoiding(&[a, b]).iter().any(|j| deficiency(j) < 1) {
                return false;
            }
        }
    }
    true
}

/// Membership in the starred class: a `B_r(sig)` certificate plus the cut condition.
pub fn find_b_star_membership(
    g: &Graph,
    r: usize,
    sig: &ClassSignature,
) -> Result<Option<BClassCertificate>, ClassError> {
    Ok(find_b_membership(g, r, sig)?.filter(|_| check_b_star(g, r)))
}

/// Sends each vertex of `A` to the vertex of `B` with the same colour.
pub fn colour_preserving_map(a: &AClassCertificate, b: &BClassCertificate) -> Result<VertexMap, ClassError> {
    if a.signature != b.signature {
        return Err(ClassError::SignatureMismatch(a.signature.parts.clone(), b.signature.parts.clone()));
    }
    let image = a.colouring.colours().iter().map(|&c| b.coloured(c)).collect();
    Ok(VertexMap::new(image, b.rotation.n())?)
}

/// Whether `f` sends every vertex to the `B` vertex of its colour.
pub fn preserves_colours(f: &VertexMap, a: &AClassCertificate, b: &BClassCertificate) -> bool {
    f.domain_size() == a.colouring.len()
        && a.signature == b.signature
        && (0..f.domain_size()).all(|v| f.get(v) == b.coloured(a.colouring.colour(v)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanMember {
    pub index: usize,
    pub certificate: AClassCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRefusal {
    pub index: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub signature: ClassSignature,
    pub scanned: usize,
    pub members: Vec<ScanMember>,
    pub refusals: Vec<ScanRefusal>,
}

/// Runs `find_a_membership` over a corpus; refusals are recorded and skipped.
pub fn emptiness_scan<'g>(
    sig: &ClassSignature,
    corpus: impl IntoIterator<Item = &'g Graph>,
    opts: &SearchOptions,
) -> ScanReport {
    let mut report = ScanReport { signature: sig.clone(), scanned: 0, members: Vec::new(), refusals: Vec::new() };
    for (index, g) in corpus.into_iter().enumerate() {
        report.scanned += 1;
        match find_a_membership(g, sig, opts) {
            Ok(Some(certificate)) => report.members.push(ScanMember { index, certificate }),
            Ok(None) => {}
            Err(e) => report.refusals.push(ScanRefusal { index, reason: format!("{e}") }),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::lex_product;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    fn sig(p: &[usize]) -> ClassSignature {
        ClassSignature::new(p.to_vec()).unwrap()
    }

    #[test]
    fn signature_bounds() {
        assert!(ClassSignature::new(vec![1, 2]).is_err());
        assert!(ClassSignature::new(vec![3, 3]).is_err());
        assert!(ClassSignature::new(vec![]).is_err());
        assert_eq!(sig(&[2, 1, 1]).degree(), 4);
    }

    #[test]
    fn c8_pattern_verifies() {
        let g = cycle(8);
        let colouring = Colouring::new(vec![1, 1, 2, 2, 1, 1, 2, 2]).unwrap();
        let rotation = planar_rotation(&g).unwrap();
        let cert = AClassCertificate { signature: sig(&[1, 1]), colouring, rotation };
        assert_eq!(verify_a_certificate(&g, &cert), Ok(true));
    }

    #[test]
    fn c6_is_not_a11() {
        assert_eq!(find_a_membership(&cycle(6), &sig(&[1, 1]), &SearchOptions::default()), Ok(None));
        let unpruned = SearchOptions { count_precheck: false, consecutive_pruning: false, ..Default::default() };
        assert_eq!(find_a_membership(&cycle(6), &sig(&[1, 1]), &unpruned), Ok(None));
    }

    #[test]
    fn octahedron_is_a22() {
        let oct = lex_product(&k(3), &Graph::empty(2));
        let cert = find_a_membership(&oct, &sig(&[2, 2]), &SearchOptions::default()).unwrap().unwrap();
        assert_eq!(verify_a_certificate(&oct, &cert), Ok(true));
        let mut bad = cert.clone();
        bad.colouring = Colouring::new(vec![1, 1, 1, 1, 2, 2]).unwrap();
        assert_eq!(verify_a_certificate(&oct, &bad), Ok(false));
    }

    #[test]
    fn b_examples() {
        let c = find_b_membership(&k(2), 3, &sig(&[2, 2])).unwrap().unwrap();
        assert_eq!(verify_b_certificate(&k(2), &c), Ok(true));
        let c = find_b_membership(&k(3), 3, &sig(&[1, 1, 1])).unwrap().unwrap();
        assert_eq!(verify_b_certificate(&k(3), &c), Ok(true));
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_b_membership(&p3, 3, &sig(&[1, 1, 1])), Ok(None));
        assert!(check_b_star(&k(3), 3));
    }

    #[test]
    fn colour_map_and_mismatch() {
        let oct = lex_product(&k(3), &Graph::empty(2));
        let a = find_a_membership(&oct, &sig(&[2, 2]), &SearchOptions::default()).unwrap().unwrap();
        let b = find_b_membership(&k(2), 3, &sig(&[2, 2])).unwrap().unwrap();
        let f = colour_preserving_map(&a, &b).unwrap();
        assert!(preserves_colours(&f, &a, &b));
        let b3 = find_b_membership(&k(3), 3, &sig(&[1, 1, 1])).unwrap().unwrap();
        assert!(matches!(colour_preserving_map(&a, &b3), Err(ClassError::SignatureMismatch(..))));
    }

    #[test]
    fn recolour_to_coarser() {
        let oct = lex_product(&k(3), &Graph::empty(2));
        let a = find_a_membership(&oct, &sig(&[2, 2]), &SearchOptions::default()).unwrap().unwrap();
        let coarse = recolour(&a, 2, 1).unwrap();
        assert_eq!(coarse.signature, sig(&[4]));
        assert_eq!(verify_a_certificate(&oct, &coarse), Ok(true));
    }
}
