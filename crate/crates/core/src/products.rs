//! Lexicographic and Sierpiński products.
//!
//! Product vertex `(a, b)` has index `a * |V(B)| + b`.

use alloc::string::String;
#[cfg(test)]
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError, VertexMap};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProductError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("map codomain {codomain} differs from |V(B)| = {nb}")]
    Codomain { codomain: usize, nb: usize },
    #[error("second factor is disconnected")]
    DisconnectedB,
    #[error("vertex list is not a path in the first factor")]
    NotAPath,
    #[error("vertex {0} out of range")]
    Vertex(usize),
}

/// The pairing `(a, b) <-> a * nb + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductIndex {
    pub na: usize,
    pub nb: usize,
}

impl ProductIndex {
    pub fn new(na: usize, nb: usize) -> Self {
        ProductIndex { na, nb }
    }

    pub fn index(&self, a: usize, b: usize) -> usize {
        a * self.nb + b
    }

    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.nb, v % self.nb)
    }

    pub fn len(&self) -> usize {
        self.na * self.nb
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `A ∘ B`: `(a1,b1) ~ (a2,b2)` iff `a1 = a2` and `b1 ~ b2`, or `a1 ~ a2`.
pub fn lex_product(a: &Graph, b: &Graph) -> Graph {
    let idx = ProductIndex::new(a.n(), b.n());
    let mut edges = Vec::new();
    for x in 0..a.n() {
        for (b1, b2) in b.edges() {
            edges.push((idx.index(x, b1), idx.index(x, b2)));
        }
    }
    for (x, y) in a.edges() {
        for b1 in 0..b.n() {
            for b2 in 0..b.n() {
                edges.push((idx.index(x, b1), idx.index(y, b2)));
            }
        }
    }
    Graph::from_edges(idx.len(), &edges).expect("product edges are in range and loop-free")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SierpinskiProduct {
    pub graph: Graph,
    pub index: ProductIndex,
    /// Connecting edges that coincided with an edge already present.
    pub duplicates: Vec<(usize, usize)>,
}

/// `A ⊗_f B`: a copy `aB` for each `a`, plus `(a1, f(a2)) ~ (a2, f(a1))` for
/// every edge `a1 a2` of `A`.
pub fn sierpinski_product(a: &Graph, b: &Graph, f: &VertexMap) -> Result<SierpinskiProduct, ProductError> {
    f.check_domain(a)?;
    if f.codomain_size() != b.n() {
        return Err(ProductError::Codomain { codomain: f.codomain_size(), nb: b.n() });
    }
    let idx = ProductIndex::new(a.n(), b.n());
    let mut edges = Vec::new();
    for x in 0..a.n() {
        for (b1, b2) in b.edges() {
            edges.push((idx.index(x, b1), idx.index(x, b2)));
        }
    }
    let mut duplicates = Vec::new();
    let copy_edges = edges.len();
    for (x, y) in a.edges() {
        let e = (idx.index(x, f.get(y)), idx.index(y, f.get(x)));
        let key = (e.0.min(e.1), e.0.max(e.1));
        if edges[copy_edges..].iter().any(|&(p, q)| (p.min(q), p.max(q)) == key) {
            duplicates.push(key);
        }
        edges.push(e);
    }
    let graph = Graph::from_edges(idx.len(), &edges)?;
    Ok(SierpinskiProduct { graph, index: idx, duplicates })
}

/// Product graph only.
pub fn sierpinski(a: &Graph, b: &Graph, f: &VertexMap) -> Result<Graph, ProductError> {
    Ok(sierpinski_product(a, b, f)?.graph)
}

/// `A ⊗ B` with `f` the inclusion `a -> a`; needs `|V(A)| <= |V(B)|`.
pub fn sierpinski_identity(a: &Graph, b: &Graph) -> Result<Graph, ProductError> {
    let f = VertexMap::identity(a.n(), b.n())?;
    sierpinski(a, b, &f)
}

/// A path in `A ⊗_f B` from `(path_a[0], b_start)` to `(path_a[last], b_end)`
/// whose first coordinates all lie on `path_a`. Shortest paths inside the
/// copies are joined by the connecting edges along `path_a`.
pub fn lift_path(
    a: &Graph,
    b: &Graph,
    f: &VertexMap,
    path_a: &[usize],
    b_start: usize,
    b_end: usize,
) -> Result<Vec<usize>, ProductError> {
    f.check_domain(a)?;
    if path_a.is_empty() {
        return Err(ProductError::NotAPath);
    }
    for &x in path_a {
        if x >= a.n() {
            return Err(ProductError::Vertex(x));
        }
    }
    for w in path_a.windows(2) {
        if !a.has_edge(w[0], w[1]) {
            return Err(ProductError::NotAPath);
        }
    }
    let mut distinct = path_a.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != path_a.len() {
        return Err(ProductError::NotAPath);
    }
    if b_start >= b.n() || b_end >= b.n() {
        return Err(ProductError::Vertex(b_start.max(b_end)));
    }
    if !b.is_connected() {
        return Err(ProductError::DisconnectedB);
    }
    let idx = ProductIndex::new(a.n(), b.n());
    let m = path_a.len() - 1;
    let mut walk = Vec::new();
    for i in 0..=m {
        let entry = if i == 0 { b_start } else { f.get(path_a[i - 1]) };
        let exit = if i == m { b_end } else { f.get(path_a[i + 1]) };
        let seg = b.shortest_path(entry, exit, &[]).ok_or(ProductError::DisconnectedB)?;
        walk.extend(seg.into_iter().map(|y| idx.index(path_a[i], y)));
    }
    Ok(shortcut(walk))
}

/// Removes closed sub-walks so no vertex repeats.
fn shortcut(walk: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(walk.len());
    for v in walk {
        if let Some(p) = out.iter().position(|&x| x == v) {
            out.truncate(p + 1);
        } else {
            out.push(v);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LexOutcome {
    PlanarTreeCase,
    PlanarTriangleCase,
    Nonplanar,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LexVerdict {
    InScope {
        outcome: LexOutcome,
        polyhedral: bool,
    },
    /// `B` trivial or `A` without edges.
    OutOfScope {
        reason: String,
    },
}

fn is_tree_component(g: &Graph, comp: &[usize]) -> bool {
    let e: usize = comp.iter().map(|&v| g.degree(v)).sum::<usize>() / 2;
    e + 1 == comp.len()
}

fn is_triangle_component(g: &Graph, comp: &[usize]) -> bool {
    comp.len() == 3 && comp.iter().all(|&v| g.degree(v) == 2)
}

/// Planarity of `A ∘ B` read from the structure of `A` and `B` alone.
pub fn classify_lex_planarity(a: &Graph, b: &Graph) -> LexVerdict {
    if b.n() < 2 {
        return LexVerdict::OutOfScope { reason: "B is trivial".into() };
    }
    if a.edge_count() == 0 {
        return LexVerdict::OutOfScope { reason: "A has no edges".into() };
    }
    let nonplanar = LexVerdict::InScope { outcome: LexOutcome::Nonplanar, polyhedral: false };
    if b.n() > 2 {
        return nonplanar;
    }
    let comps = a.components();
    if b.edge_count() == 1 {
        if comps.iter().all(|c| is_tree_component(a, c)) {
            let polyhedral = a.n() == 2;
            return LexVerdict::InScope { outcome: LexOutcome::PlanarTreeCase, polyhedral };
        }
        return nonplanar;
    }
    let trees = comps.iter().filter(|c| is_tree_component(a, c)).count();
    let triangles = comps.iter().filter(|c| is_triangle_component(a, c)).count();
    if trees + triangles < comps.len() {
        return nonplanar;
    }
    if triangles == 0 {
        LexVerdict::InScope { outcome: LexOutcome::PlanarTreeCase, polyhedral: false }
    } else {
        let polyhedral = comps.len() == 1;
        LexVerdict::InScope { outcome: LexOutcome::PlanarTriangleCase, polyhedral }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn lex_counts() {
        let p2 = k(2);
        let g = lex_product(&p2, &p2);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g, k(4));
        let oct = lex_product(&k(3), &Graph::empty(2));
        assert_eq!(oct.n(), 6);
        assert_eq!(oct.regular_degree(), Some(4));
    }

    #[test]
    fn sierpinski_counts() {
        let p = sierpinski_product(&k(4), &k(4), &VertexMap::identity(4, 4).unwrap()).unwrap();
        assert_eq!(p.graph.n(), 16);
        assert_eq!(p.graph.edge_count(), 30);
        assert!(p.duplicates.is_empty());
    }

    #[test]
    fn lift_trivial_and_k2() {
        let k2 = k(2);
        let f = VertexMap::identity(2, 2).unwrap();
        assert_eq!(lift_path(&k2, &k2, &f, &[1], 0, 0).unwrap(), vec![2]);
        let p = lift_path(&k2, &k2, &f, &[0, 1], 0, 1).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3]);
        assert!(lift_path(&k2, &Graph::empty(2), &VertexMap::new(vec![0, 1], 2).unwrap(), &[0, 1], 0, 1).is_err());
    }

    #[test]
    fn lex_classification_examples() {
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(matches!(
            classify_lex_planarity(&tree, &k(2)),
            LexVerdict::InScope { outcome: LexOutcome::PlanarTreeCase, .. }
        ));
        assert!(matches!(
            classify_lex_planarity(&k(3), &k(2)),
            LexVerdict::InScope { outcome: LexOutcome::Nonplanar, .. }
        ));
        assert_eq!(
            classify_lex_planarity(&k(3), &Graph::empty(2)),
            LexVerdict::InScope { outcome: LexOutcome::PlanarTriangleCase, polyhedral: true }
        );
        assert!(matches!(classify_lex_planarity(&Graph::empty(3), &k(2)), LexVerdict::OutOfScope { .. }));
    }
}
