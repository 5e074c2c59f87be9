//! Simple undirected graphs over dense vertex indices, and vertex maps between them.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("label count {0} does not match vertex count {1}")]
    LabelCount(usize, usize),
    #[error("map has domain {domain} but graph has {n} vertices")]
    MapDomain { domain: usize, n: usize },
    #[error("map image {image} outside codomain of size {codomain}")]
    MapImage { image: usize, codomain: usize },
}

/// A finite simple undirected graph. Neighbour lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], labels: None }
    }

    /// Builds a graph from an edge list. Repeated pairs are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj, labels: None })
    }

    pub(crate) fn from_adj_unchecked(adj: Vec<Vec<usize>>) -> Self {
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount(labels.len(), self.n()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The common degree, if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        self.degree_sequence().regular()
    }

    /// Components ordered by their smallest vertex; each component sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&[])
    }

    /// Components of `G - removed`. Removed vertices belong to no component.
    pub fn components_avoiding(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &r in removed {
            seen[r] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn component_count_avoiding(&self, removed: &[usize]) -> usize {
        self.components_avoiding(removed).len()
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `set`, relabelled by ascending original index. The
    /// second value maps new indices to original ones.
    pub fn induced(&self, set: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = set.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| index[w] != usize::MAX).map(|&w| index[w]).collect())
            .collect();
        let labels = self.labels.as_ref().map(|ls| keep.iter().map(|&v| ls[v].clone()).collect());
        (Graph { adj, labels }, keep)
    }

    /// `G - removed`, relabelled like [`Graph::induced`].
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut drop = vec![false; self.n()];
        for &r in removed {
            drop[r] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !drop[v]).collect();
        self.induced(&keep)
    }

    /// Shortest-path distance, `None` when no path exists.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs_distances(u)[v]
    }

    pub fn bfs_distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `s` to `t` (inclusive), restricted to vertices not
    /// flagged in `blocked`.
    pub fn shortest_path(&self, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n()];
        parent[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &w in &self.adj[u] {
                if parent[w] == usize::MAX && !blocked.get(w).copied().unwrap_or(false) {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        if parent[t] == usize::MAX {
            return None;
        }
        let mut path = vec![t];
        let mut cur = t;
        while cur != s {
            cur = parent[cur];
            path.push(cur);
        }
        path.reverse();
        Some(path)
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n).map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect()).collect();
        Graph { adj, labels: None }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&v| v + shift).collect()));
        Graph { adj, labels: None }
    }

    /// Copy with the listed edges added and removed.
    pub fn edit_edges(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !remove.iter().any(|&(a, b)| (a == u && b == v) || (a == v && b == u)))
            .collect();
        edges.extend_from_slice(add);
        Graph::from_edges(self.n(), &edges)
    }
}

/// Degrees sorted non-increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    pub degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn min_degree(&self) -> usize {
        self.degrees.last().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    pub fn regular(&self) -> Option<usize> {
        let first = *self.degrees.first()?;
        self.degrees.iter().all(|&d| d == first).then_some(first)
    }
}

/// A total function from `0..image.len()` into `0..codomain`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexMap {
    image: Vec<usize>,
    codomain: usize,
}

impl VertexMap {
    pub fn new(image: Vec<usize>, codomain: usize) -> Result<Self, GraphError> {
        if let Some(&bad) = image.iter().find(|&&b| b >= codomain) {
            return Err(GraphError::MapImage { image: bad, codomain });
        }
        Ok(VertexMap { image, codomain })
    }

    /// The map `a -> a`, for the shorthand `A ⊗ B` with `V(A) ⊆ V(B)`.
    pub fn identity(domain: usize, codomain: usize) -> Result<Self, GraphError> {
        VertexMap::new((0..domain).collect(), codomain)
    }

    pub fn constant(domain: usize, value: usize, codomain: usize) -> Result<Self, GraphError> {
        VertexMap::new(vec![value; domain], codomain)
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain
    }

    pub fn get(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn check_domain(&self, a: &Graph) -> Result<(), GraphError> {
        if self.image.len() != a.n() {
            return Err(GraphError::MapDomain { domain: self.image.len(), n: a.n() });
        }
        Ok(())
    }

    /// Sorted distinct images.
    pub fn image_set(&self) -> Vec<usize> {
        let mut s = self.image.clone();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn is_injective(&self) -> bool {
        self.image_set().len() == self.image.len()
    }

    /// Sorted distinct images of the neighbours of `a`.
    pub fn neighbour_images(&self, g: &Graph, a: usize) -> Vec<usize> {
        let mut s: Vec<usize> = g.neighbours(a).iter().map(|&x| self.image[x]).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn is_locally_injective(&self, g: &Graph) -> bool {
        (0..g.n()).all(|a| self.neighbour_images(g, a).len() == g.degree(a))
    }

    pub fn properties(&self, g: &Graph) -> Result<MapProperties, GraphError> {
        self.check_domain(g)?;
        Ok(MapProperties { image: self.image_set(), locally_injective: self.is_locally_injective(g) })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapProperties {
    pub image: Vec<usize>,
    pub locally_injective: bool,
}

/// All maps `0..domain -> 0..codomain` in lexicographic order of image vectors.
pub fn all_maps(domain: usize, codomain: usize) -> impl Iterator<Item = VertexMap> {
    let total = (codomain as u64).checked_pow(domain as u32).unwrap_or(0);
    (0..total).map(move |mut code| {
        let mut image = vec![0; domain];
        for slot in image.iter_mut().rev() {
            *slot = (code % codomain as u64) as usize;
            code /= codomain as u64;
        }
        VertexMap { image, codomain }
    })
}

/// All injective maps `0..domain -> 0..codomain`.
pub fn all_injections(domain: usize, codomain: usize) -> Vec<VertexMap> {
    fn rec(domain: usize, codomain: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<VertexMap>) {
        if cur.len() == domain {
            out.push(VertexMap { image: cur.clone(), codomain });
            return;
        }
        for b in 0..codomain {
            if !used[b] {
                used[b] = true;
                cur.push(b);
                rec(domain, codomain, cur, used, out);
                cur.pop();
                used[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    if domain <= codomain {
        rec(domain, codomain, &mut Vec::new(), &mut vec![false; codomain], &mut out);
    }
    out
}

/// Iterates the `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
