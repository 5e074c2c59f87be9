//! Rotation systems, face tracing, planarity with certificates, and the
//! outerplanar/polyhedron predicates.
//!
//! Planarity is decided per biconnected block with the path-addition scheme of
//! Demoucron, Malgrange and Pertuiset. Non-planar inputs are shrunk to an
//! edge-minimal non-planar subgraph, which is a Kuratowski subdivision.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::connectivity::{biconnected_blocks, is_k_connected};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbeddingError {
    #[error("rotation has {got} lists for {n} vertices")]
    VertexCount { got: usize, n: usize },
    #[error("rotation at vertex {0} is not a permutation of its neighbours")]
    NotPermutation(usize),
    #[error("rotation system has genus {0}, not 0")]
    NotPlanar(usize),
    #[error("graph is not planar")]
    NonPlanarGraph,
    #[error("face index {0} out of range")]
    FaceIndex(usize),
}

/// Cyclic neighbour order at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSystem {
    rot: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Checks that `rot[v]` is a permutation of the neighbours of `v`.
    pub fn new(g: &Graph, rot: Vec<Vec<usize>>) -> Result<Self, EmbeddingError> {
        if rot.len() != g.n() {
            return Err(EmbeddingError::VertexCount { got: rot.len(), n: g.n() });
        }
        for (v, list) in rot.iter().enumerate() {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            if sorted != g.neighbours(v) {
                return Err(EmbeddingError::NotPermutation(v));
            }
        }
        Ok(RotationSystem { rot })
    }

    pub fn lists(&self) -> &[Vec<usize>] {
        &self.rot
    }

    pub fn at(&self, v: usize) -> &[usize] {
        &self.rot[v]
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    /// The underlying graph.
    pub fn graph(&self) -> Graph {
        let adj = self
            .rot
            .iter()
            .map(|l| {
                let mut s = l.clone();
                s.sort_unstable();
                s
            })
            .collect();
        Graph::from_adj_unchecked(adj)
    }

    fn position(&self, v: usize, u: usize) -> usize {
        self.rot[v].iter().position(|&x| x == u).expect("neighbour present in rotation")
    }

    /// The neighbour following `u` in the cyclic order at `v`.
    pub fn successor(&self, v: usize, u: usize) -> usize {
        let list = &self.rot[v];
        list[(self.position(v, u) + 1) % list.len()]
    }

    /// Every cyclic order reversed.
    pub fn reflect(&self) -> RotationSystem {
        RotationSystem {
            rot: self
                .rot
                .iter()
                .map(|l| {
                    let mut r = l.clone();
                    r.reverse();
                    r
                })
                .collect(),
        }
    }

    fn normalized(&self) -> RotationSystem {
        RotationSystem {
            rot: self
                .rot
                .iter()
                .map(|l| {
                    let mut r = l.clone();
                    if let Some(i) = r.iter().enumerate().min_by_key(|&(_, &x)| x).map(|(i, _)| i) {
                        r.rotate_left(i);
                    }
                    r
                })
                .collect(),
        }
    }

    /// Representative of the class {self, reflection} with each cyclic list
    /// starting at its smallest neighbour.
    pub fn canonical(&self) -> RotationSystem {
        let a = self.normalized();
        let b = self.reflect().normalized();
        if a <= b {
            a
        } else {
            b
        }
    }

    /// Face boundary walks. The dart `u -> v` is followed by `v -> w` where `w`
    /// is the successor of `u` at `v`. Each walk lists the tails of its darts.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut used: Vec<Vec<bool>> = self.rot.iter().map(|l| vec![false; l.len()]).collect();
        let mut faces = Vec::new();
        for s in 0..self.rot.len() {
            for si in 0..self.rot[s].len() {
                if used[s][si] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut u, mut i) = (s, si);
                while !used[u][i] {
                    used[u][i] = true;
                    walk.push(u);
                    let v = self.rot[u][i];
                    let p = self.position(v, u);
                    let next = (p + 1) % self.rot[v].len();
                    u = v;
                    i = next;
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Sum over connected components of the orientable genus implied by the
    /// face count. Zero exactly for planar embeddings.
    pub fn genus(&self) -> usize {
        let g = self.graph();
        let faces = self.faces();
        let comps = g.components();
        let mut comp_of = vec![0; g.n()];
        for (c, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = c;
            }
        }
        let mut f = vec![0usize; comps.len()];
        for face in &faces {
            f[comp_of[face[0]]] += 1;
        }
        let mut total = 0;
        for (c, comp) in comps.iter().enumerate() {
            let v = comp.len();
            let e: usize = comp.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
            let faces_c = if e == 0 { 1 } else { f[c] };
            // V - E + F = 2 - 2 genus
            total += (2 + e - v - faces_c) / 2;
        }
        total
    }

    pub fn is_planar(&self) -> bool {
        self.genus() == 0
    }
}

/// A graph with a genus-0 rotation system and a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: RotationSystem,
    faces: Vec<Vec<usize>>,
    outer_face: usize,
}

impl PlaneGraph {
    pub fn new(graph: Graph, rotation: RotationSystem) -> Result<Self, EmbeddingError> {
        let rotation = RotationSystem::new(&graph, rotation.rot)?;
        let genus = rotation.genus();
        if genus != 0 {
            return Err(EmbeddingError::NotPlanar(genus));
        }
        let faces = rotation.faces();
        let outer_face = longest_face(&faces);
        Ok(PlaneGraph { graph, rotation, faces, outer_face })
    }

    /// Embeds `graph` using the planarity tester.
    pub fn embed(graph: Graph) -> Result<Self, EmbeddingError> {
        let rotation = planar_rotation(&graph).ok_or(EmbeddingError::NonPlanarGraph)?;
        PlaneGraph::new(graph, rotation)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer_face
    }

    pub fn with_outer_face(mut self, face: usize) -> Result<Self, EmbeddingError> {
        if face >= self.faces.len() {
            return Err(EmbeddingError::FaceIndex(face));
        }
        self.outer_face = face;
        Ok(self)
    }

    pub fn into_parts(self) -> (Graph, RotationSystem) {
        (self.graph, self.rotation)
    }
}

fn longest_face(faces: &[Vec<usize>]) -> usize {
    let mut best = 0;
    for (i, f) in faces.iter().enumerate() {
        if f.len() > faces[best].len() {
            best = i;
        }
    }
    best
}

/// Face walks of a rotation system after validating it against `g`.
pub fn trace_faces(g: &Graph, rotation: &RotationSystem) -> Result<Vec<Vec<usize>>, EmbeddingError> {
    let r = RotationSystem::new(g, rotation.rot.clone())?;
    Ok(r.faces())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside a graph. For K3,3 the first three
/// branch vertices form one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Kuratowski {
    pub kind: KuratowskiKind,
    pub branch: Vec<usize>,
    /// One path per edge of the underlying K5 or K3,3, endpoints included.
    pub paths: Vec<Vec<usize>>,
}

impl Kuratowski {
    /// Checks the witness against `g`: paths use edges of `g`, join the right
    /// branch pairs, and are internally disjoint from each other and from the
    /// branch set.
    pub fn verify(&self, g: &Graph) -> bool {
        let pairs: Vec<(usize, usize)> = match self.kind {
            KuratowskiKind::K5 => {
                if self.branch.len() != 5 {
                    return false;
                }
                let mut p = Vec::new();
                for i in 0..5 {
                    for j in i + 1..5 {
                        p.push((self.branch[i], self.branch[j]));
                    }
                }
                p
            }
            KuratowskiKind::K33 => {
                if self.branch.len() != 6 {
                    return false;
                }
                let mut p = Vec::new();
                for i in 0..3 {
                    for j in 3..6 {
                        p.push((self.branch[i], self.branch[j]));
                    }
                }
                p
            }
        };
        let distinct: BTreeSet<usize> = self.branch.iter().copied().collect();
        if distinct.len() != self.branch.len() || self.branch.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if self.paths.len() != pairs.len() {
            return false;
        }
        let mut want: BTreeSet<(usize, usize)> = pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        let mut interior = BTreeSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return false;
            }
            let (a, b) = (path[0], path[path.len() - 1]);
            if !want.remove(&(a.min(b), a.max(b))) {
                return false;
            }
            for w in path.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
            }
            for &x in &path[1..path.len() - 1] {
                if distinct.contains(&x) || !interior.insert(x) {
                    return false;
                }
            }
        }
        want.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub embedding: Option<RotationSystem>,
    pub obstruction: Option<Kuratowski>,
}

/// Planarity with an embedding or a Kuratowski witness.
pub fn test_planarity(g: &Graph) -> PlanarityVerdict {
    match planar_rotation(g) {
        Some(rot) => PlanarityVerdict { planar: true, embedding: Some(rot), obstruction: None },
        None => PlanarityVerdict { planar: false, embedding: None, obstruction: Some(kuratowski_subgraph(g)) },
    }
}

pub fn is_planar(g: &Graph) -> bool {
    planar_rotation(g).is_some()
}

/// A genus-0 rotation system, or `None` when `g` is not planar.
pub fn planar_rotation(g: &Graph) -> Option<RotationSystem> {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return None;
    }
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); n];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rot[u].push(v);
            rot[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |x: usize| verts.binary_search(&x).expect("block vertex");
        let mut adj = vec![Vec::new(); verts.len()];
        for &(u, v) in &block {
            adj[local(u)].push(local(v));
            adj[local(v)].push(local(u));
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let faces = embed_biconnected(&adj)?;
        let local_rot = rotation_from_faces(&adj, &faces);
        for (lv, list) in local_rot.into_iter().enumerate() {
            rot[verts[lv]].extend(list.into_iter().map(|x| verts[x]));
        }
    }
    Some(RotationSystem { rot })
}

/// Path addition on a biconnected graph with at least three vertices. Returns
/// oriented face cycles.
fn embed_biconnected(adj: &[Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let n = adj.len();
    let edge_total: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let mut in_h = vec![false; n];
    let mut emb: Vec<Vec<bool>> = adj.iter().map(|l| vec![false; l.len()]).collect();
    let mark = |emb: &mut Vec<Vec<bool>>, u: usize, v: usize| {
        let i = adj[u].binary_search(&v).expect("edge");
        emb[u][i] = true;
        let j = adj[v].binary_search(&u).expect("edge");
        emb[v][j] = true;
    };

    // initial cycle through the edge 0 - adj[0][0]
    let u0 = 0;
    let v0 = adj[0][0];
    let mut parent = vec![usize::MAX; n];
    parent[v0] = v0;
    let mut queue = VecDeque::from([v0]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if parent[y] == usize::MAX && !(x == v0 && y == u0) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![u0];
    let mut cur = u0;
    while cur != v0 {
        cur = parent[cur];
        cycle.push(cur);
    }
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        mark(&mut emb, a, b);
    }
    let mut embedded = cycle.len();
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];
    let set_of = |face: &Vec<usize>| {
        let mut s = vec![false; n];
        for &x in face {
            s[x] = true;
        }
        s
    };
    let mut face_sets: Vec<Vec<bool>> = faces.iter().map(set_of).collect();

    while embedded < edge_total {
        // fragments: (attachments, path endpoints and interior)
        let mut best: Option<(usize, Vec<usize>)> = None;
        let mut best_path: Vec<usize> = Vec::new();
        let consider = |attach: &[usize],
                        path: &dyn Fn() -> Vec<usize>,
                        best: &mut Option<(usize, Vec<usize>)>,
                        best_path: &mut Vec<usize>|
         -> bool {
            let admissible: Vec<usize> =
                (0..faces.len()).filter(|&f| attach.iter().all(|&a| face_sets[f][a])).collect();
            if admissible.is_empty() {
                return false;
            }
            if best.as_ref().is_none_or(|(c, _)| admissible.len() < *c) {
                *best_path = path();
                *best = Some((admissible.len(), admissible));
            }
            true
        };
        for u in 0..n {
            if !in_h[u] {
                continue;
            }
            for (i, &v) in adj[u].iter().enumerate() {
                if u < v && in_h[v] && !emb[u][i] && !consider(&[u, v], &|| vec![u, v], &mut best, &mut best_path) {
                    return None;
                }
            }
        }
        let mut comp = vec![usize::MAX; n];
        for s in 0..n {
            if in_h[s] || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = s;
            let mut members = vec![s];
            let mut q = VecDeque::from([s]);
            let mut attach = BTreeSet::new();
            while let Some(x) = q.pop_front() {
                for &y in &adj[x] {
                    if in_h[y] {
                        attach.insert(y);
                    } else if comp[y] == usize::MAX {
                        comp[y] = s;
                        members.push(y);
                        q.push_back(y);
                    }
                }
            }
            let attach: Vec<usize> = attach.into_iter().collect();
            let comp_ref = &comp;
            let path = || fragment_path(adj, &in_h, comp_ref, s, &attach);
            if !consider(&attach, &path, &mut best, &mut best_path) {
                return None;
            }
        }
        let (_, admissible) = best?;
        let f = admissible[0];
        let path = best_path;
        for w in path.windows(2) {
            mark(&mut emb, w[0], w[1]);
            embedded += 1;
        }
        for &x in &path {
            in_h[x] = true;
        }
        let face = faces.swap_remove(f);
        face_sets.swap_remove(f);
        let (x, y) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&z| z == x)?;
        let j = face.iter().position(|&z| z == y)?;
        let k = face.len();
        let inner = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut t = i;
        loop {
            f1.push(face[t]);
            if t == j {
                break;
            }
            t = (t + 1) % k;
        }
        f1.extend(inner.iter().rev());
        let mut f2 = Vec::new();
        let mut t = j;
        loop {
            f2.push(face[t]);
            if t == i {
                break;
            }
            t = (t + 1) % k;
        }
        f2.extend(inner.iter());
        face_sets.push(set_of(&f1));
        faces.push(f1);
        face_sets.push(set_of(&f2));
        faces.push(f2);
    }
    Some(faces)
}

/// Path from one attachment of a component fragment through the component to
/// a different attachment.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], comp: &[usize], id: usize, attach: &[usize]) -> Vec<usize> {
    let a1 = attach[0];
    let n = adj.len();
    let start = adj[a1].iter().copied().find(|&x| !in_h[x] && comp[x] == id).expect("attachment neighbour");
    let mut parent = vec![usize::MAX; n];
    parent[start] = start;
    let mut q = VecDeque::from([start]);
    while let Some(x) = q.pop_front() {
        if let Some(&a2) = adj[x].iter().find(|&&y| in_h[y] && y != a1) {
            let mut inner = vec![x];
            let mut cur = x;
            while cur != start {
                cur = parent[cur];
                inner.push(cur);
            }
            inner.reverse();
            let mut path = vec![a1];
            path.extend(inner);
            path.push(a2);
            return path;
        }
        for &y in &adj[x] {
            if !in_h[y] && comp[y] == id && parent[y] == usize::MAX {
                parent[y] = x;
                q.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

fn rotation_from_faces(adj: &[Vec<usize>], faces: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    // succ[v][index of u in adj[v]] = w
    let mut succ: Vec<Vec<usize>> = adj.iter().map(|l| vec![usize::MAX; l.len()]).collect();
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let u = face[(i + k - 1) % k];
            let v = face[i];
            let w = face[(i + 1) % k];
            let pu = adj[v].binary_search(&u).expect("edge");
            succ[v][pu] = w;
        }
    }
    (0..n)
        .map(|v| {
            let d = adj[v].len();
            let mut list = Vec::with_capacity(d);
            if d == 0 {
                return list;
            }
            let mut u = adj[v][0];
            for _ in 0..d {
                list.push(u);
                u = succ[v][adj[v].binary_search(&u).expect("edge")];
            }
            list
        })
        .collect()
}

/// Shrinks a non-planar graph to an edge-minimal non-planar subgraph and reads
/// off its branch vertices and paths.
pub fn kuratowski_subgraph(g: &Graph) -> Kuratowski {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = biconnected_blocks(g)
        .into_iter()
        .find(|b| b.len() > 1 && !is_planar(&Graph::from_edges(n, b).expect("block edges are valid")))
        .expect("a non-planar graph has a non-planar block");
    edges.sort_unstable();
    let mut i = 0;
    while i < edges.len() {
        let mut trial = edges.clone();
        trial.remove(i);
        if is_planar(&Graph::from_edges(n, &trial).expect("subset of valid edges")) {
            i += 1;
        } else {
            edges = trial;
        }
    }
    let h = Graph::from_edges(n, &edges).expect("valid edges");
    let branch: Vec<usize> = (0..n).filter(|&v| h.degree(v) >= 3).collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in h.neighbours(b) {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while h.degree(cur) == 2 {
                let next = if h.neighbours(cur)[0] == prev { h.neighbours(cur)[1] } else { h.neighbours(cur)[0] };
                prev = cur;
                cur = next;
                path.push(cur);
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    if branch.len() == 5 {
        return Kuratowski { kind: KuratowskiKind::K5, branch, paths };
    }
    // two-colour the branch vertices of K3,3 through the paths
    let mut side = vec![usize::MAX; n];
    side[branch[0]] = 0;
    let mut changed = true;
    while changed {
        changed = false;
        for p in &paths {
            let (a, b) = (p[0], p[p.len() - 1]);
            if side[a] != usize::MAX && side[b] == usize::MAX {
                side[b] = 1 - side[a];
                changed = true;
            } else if side[b] != usize::MAX && side[a] == usize::MAX {
                side[a] = 1 - side[b];
                changed = true;
            }
        }
    }
    let mut ordered: Vec<usize> = branch.iter().copied().filter(|&v| side[v] == 0).collect();
    ordered.extend(branch.iter().copied().filter(|&v| side[v] == 1));
    Kuratowski { kind: KuratowskiKind::K33, branch: ordered, paths }
}

/// Distinct genus-0 rotation systems up to reflection, at most `limit`, in
/// canonical order. Exhaustive backtracking with face-count pruning; meant for
/// small graphs.
pub fn planar_embeddings(g: &Graph, limit: usize) -> Result<Vec<RotationSystem>, EmbeddingError> {
    planar_rotation(g).ok_or(EmbeddingError::NonPlanarGraph)?;
    if limit == 0 {
        return Ok(Vec::new());
    }
    let mut enumerator = EmbeddingSearch::new(g, limit);
    enumerator.run();
    Ok(enumerator.found.into_iter().collect())
}

/// Builds rotations one face at a time: tracing a face chooses, at each head,
/// the successor of the incoming neighbour. Partial successor maps must stay
/// extendable to a single cyclic order per vertex.
struct EmbeddingSearch<'a> {
    g: &'a Graph,
    /// `pos[v][w]`: index of `w` in the neighbour list of `v`.
    pos: Vec<Vec<usize>>,
    succ: Vec<Vec<Option<usize>>>,
    pred: Vec<Vec<Option<usize>>>,
    used: Vec<Vec<bool>>,
    on_face: Vec<bool>,
    /// Vertices of the face being traced.
    face: Vec<usize>,
    total_darts: usize,
    faces_needed: usize,
    /// Fewest darts on a face: 2 when some component is a single edge.
    min_face: usize,
    /// Faces of a plane 2-connected graph are cycles, so a face meeting a
    /// vertex twice cannot be completed.
    cycles_only: bool,
    limit: usize,
    found: BTreeSet<RotationSystem>,
}

impl<'a> EmbeddingSearch<'a> {
    fn new(g: &'a Graph, limit: usize) -> Self {
        let n = g.n();
        let mut pos = vec![vec![usize::MAX; n]; n];
        for v in 0..n {
            for (i, &w) in g.neighbours(v).iter().enumerate() {
                pos[v][w] = i;
            }
        }
        let mut faces_needed = 0;
        let mut min_face = 3;
        for comp in g.components() {
            let e: usize = comp.iter().map(|&x| g.degree(x)).sum::<usize>() / 2;
            if e > 0 {
                faces_needed += e + 2 - comp.len();
            }
            if e == 1 {
                min_face = 2;
            }
        }
        let cycles_only = n >= 3 && is_k_connected(g, 2);
        EmbeddingSearch {
            min_face,
            g,
            pos,
            succ: (0..n).map(|v| vec![None; g.degree(v)]).collect(),
            pred: (0..n).map(|v| vec![None; g.degree(v)]).collect(),
            used: (0..n).map(|v| vec![false; g.degree(v)]).collect(),
            on_face: vec![false; n],
            face: Vec::new(),
            total_darts: 2 * g.edge_count(),
            faces_needed,
            cycles_only,
            limit,
            found: BTreeSet::new(),
        }
    }

    fn run(&mut self) {
        self.next_face(0, 0);
    }

    fn done(&self) -> bool {
        self.found.len() >= self.limit
    }

    /// Whether `succ[v][i] = j` keeps the successor map at `v` a union of
    /// paths, or closes it into one cycle through every neighbour.
    fn can_link(&self, v: usize, i: usize, j: usize) -> bool {
        if self.succ[v][i].is_some() || self.pred[v][j].is_some() {
            return false;
        }
        let mut k = j;
        let mut len = 1;
        while let Some(next) = self.succ[v][k] {
            k = next;
            len += 1;
        }
        k != i || len == self.g.degree(v)
    }

    fn link(&mut self, v: usize, i: usize, j: usize) {
        self.succ[v][i] = Some(j);
        self.pred[v][j] = Some(i);
    }

    fn unlink(&mut self, v: usize, i: usize, j: usize) {
        self.succ[v][i] = None;
        self.pred[v][j] = None;
    }

    fn next_face(&mut self, faces: usize, used: usize) {
        if self.done() {
            return;
        }
        if used == self.total_darts {
            if faces == self.faces_needed {
                let rot = (0..self.g.n())
                    .map(|v| {
                        let nb = self.g.neighbours(v);
                        let mut list = Vec::with_capacity(nb.len());
                        let mut k = 0;
                        for _ in 0..nb.len() {
                            list.push(nb[k]);
                            k = self.succ[v][k].expect("complete rotation");
                        }
                        list
                    })
                    .collect();
                let r = RotationSystem { rot };
                debug_assert!(r.is_planar());
                self.found.insert(r.canonical());
            }
            return;
        }
        if faces + (self.total_darts - used) / self.min_face < self.faces_needed {
            return;
        }
        let (s, si) = (0..self.g.n())
            .flat_map(|v| (0..self.g.degree(v)).map(move |i| (v, i)))
            .find(|&(v, i)| !self.used[v][i])
            .expect("an unused dart");
        self.on_face[s] = true;
        self.face.push(s);
        self.trace((s, si), (s, si), faces, used);
        self.face.pop();
        self.on_face[s] = false;
    }

    /// Extends the face begun at dart `start` by the dart `cur`.
    fn trace(&mut self, start: (usize, usize), cur: (usize, usize), faces: usize, used: usize) {
        let (x, xi) = cur;
        self.used[x][xi] = true;
        let y = self.g.neighbours(x)[xi];
        let back = self.pos[y][x];
        let fresh_head = !self.on_face[y];
        if fresh_head {
            self.on_face[y] = true;
            self.face.push(y);
        }
        let closing_allowed = y == start.0;
        let continuing_allowed = fresh_head || !self.cycles_only;
        match self.succ[y][back] {
            Some(j) => self.follow(start, (y, j), faces, used + 1, closing_allowed, continuing_allowed),
            None => {
                for j in 0..self.g.degree(y) {
                    if self.done() {
                        break;
                    }
                    if !self.can_link(y, back, j) {
                        continue;
                    }
                    self.link(y, back, j);
                    self.follow(start, (y, j), faces, used + 1, closing_allowed, continuing_allowed);
                    self.unlink(y, back, j);
                }
            }
        }
        if fresh_head {
            self.face.pop();
            self.on_face[y] = false;
        }
        self.used[x][xi] = false;
    }

    fn follow(
        &mut self,
        start: (usize, usize),
        next: (usize, usize),
        faces: usize,
        used: usize,
        closing_allowed: bool,
        continuing_allowed: bool,
    ) {
        if next == start {
            if closing_allowed {
                let closed = core::mem::take(&mut self.face);
                for &v in &closed {
                    self.on_face[v] = false;
                }
                self.next_face(faces + 1, used);
                for &v in &closed {
                    self.on_face[v] = true;
                }
                self.face = closed;
            }
        } else if continuing_allowed && !self.used[next.0][next.1] {
            self.trace(start, next, faces, used);
        }
    }
}

/// An embedding of `g` in which one face contains every vertex of `set`,
/// together with that face's index. Uses an auxiliary vertex joined to `set`.
/// Returns `None` when no such embedding exists or `set` meets more than one
/// component of `g`.
pub fn embedding_with_common_face(g: &Graph, set: &[usize]) -> Option<(RotationSystem, usize)> {
    let n = g.n();
    if set.is_empty() {
        let rot = planar_rotation(g)?;
        return Some((rot, 0));
    }
    let mut edges = g.edges();
    edges.extend(set.iter().map(|&v| (v, n)));
    let with_apex = Graph::from_edges(n + 1, &edges).ok()?;
    let rot = planar_rotation(&with_apex)?;
    let lists: Vec<Vec<usize>> = rot.rot[..n].iter().map(|l| l.iter().copied().filter(|&x| x != n).collect()).collect();
    let rot = RotationSystem { rot: lists };
    let faces = rot.faces();
    if g.edge_count() == 0 {
        // only possible when the set is a single vertex
        return (set.len() == 1).then_some((rot, 0));
    }
    let idx = faces.iter().position(|f| set.iter().all(|v| f.contains(v)))?;
    Some((rot, idx))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarVerdict {
    pub outerplanar: bool,
    pub embedding: Option<RotationSystem>,
    /// For each component with an edge, a face incident to all its vertices.
    pub outer_faces: Vec<usize>,
}

pub fn is_outerplanar(g: &Graph) -> OuterplanarVerdict {
    let no = OuterplanarVerdict { outerplanar: false, embedding: None, outer_faces: Vec::new() };
    let n = g.n();
    let mut edges = g.edges();
    edges.extend((0..n).map(|v| (v, n)));
    let with_apex = Graph::from_edges(n + 1, &edges).expect("valid edges");
    let Some(rot) = planar_rotation(&with_apex) else { return no };
    let lists: Vec<Vec<usize>> = rot.rot[..n].iter().map(|l| l.iter().copied().filter(|&x| x != n).collect()).collect();
    let rot = RotationSystem { rot: lists };
    let faces = rot.faces();
    let mut outer_faces = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        match faces.iter().position(|f| comp.iter().all(|v| f.contains(v))) {
            Some(i) => outer_faces.push(i),
            None => return no,
        }
    }
    OuterplanarVerdict { outerplanar: true, embedding: Some(rot), outer_faces }
}

/// Planar and 3-connected.
pub fn is_polyhedron(g: &Graph) -> bool {
    is_k_connected(g, 3) && is_planar(g)
}
