//! Vertex connectivity, cut-sets, and the separating-vertex and minimal-cut
//! descriptions for Sierpiński products.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::{subsets, Graph, GraphError, VertexMap};
use crate::products::{sierpinski, ProductError, ProductIndex};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConnectivityError {
    #[error("connectivity needs at least two vertices")]
    TooSmall,
    #[error("factor {0} is disconnected or trivial")]
    Factor(char),
    #[error("vertex ({0}, {1}) out of range")]
    Vertex(usize, usize),
    #[error("vertex set is not a cut-set of the product")]
    NotACut,
    #[error("cut-set is not minimal")]
    NotMinimal,
    #[error("minimal cut {0:?} fits none of the three alternatives")]
    Unclassified(Vec<(usize, usize)>),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Product(#[from] ProductError),
}

/// Articulation points, ascending.
pub fn articulation_points(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_art = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // iterative DFS: (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbours(v)[*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        is_art[parent] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            is_art[root] = true;
        }
    }
    (0..n).filter(|&v| is_art[v]).collect()
}

/// Edge sets of the biconnected blocks; bridges appear as single-edge blocks.
/// Each block's edges are `(u, v)` with `u < v`, sorted.
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbours(v)[*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// `|V| > k` and no set of fewer than `k` vertices disconnects the graph.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if n <= k {
        return false;
    }
    match k {
        0 => true,
        1 => g.is_connected(),
        2 => g.is_connected() && articulation_points(g).is_empty(),
        3 => {
            if !is_k_connected(g, 2) {
                return false;
            }
            (0..n).all(|v| {
                let (h, _) = g.remove_vertices(&[v]);
                h.is_connected() && articulation_points(&h).is_empty()
            })
        }
        _ => vertex_connectivity(g).is_ok_and(|c| c >= k),
    }
}

/// Largest `k` with the graph `k`-connected, via unit-capacity vertex-split
/// flows between non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, ConnectivityError> {
    let n = g.n();
    if n < 2 {
        return Err(ConnectivityError::TooSmall);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let c = local_connectivity(g, s, t, best);
            best = best.min(c);
        }
    }
    Ok(best)
}

/// Maximum number of internally disjoint `s`-`t` paths, capped at `cap`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    // node 2v = v_in, 2v+1 = v_out; arc v_in -> v_out capacity 1 (unbounded for s, t)
    let n = g.n();
    let m = 2 * n;
    let mut head: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut to = Vec::new();
    let mut cap_arc = Vec::new();
    let mut add = |head: &mut Vec<Vec<usize>>, u: usize, v: usize, c: usize| {
        head[u].push(to.len());
        to.push(v);
        cap_arc.push(c);
        head[v].push(to.len());
        to.push(u);
        cap_arc.push(0);
    };
    let big = n;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        add(&mut head, 2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        add(&mut head, 2 * u + 1, 2 * v, big);
        add(&mut head, 2 * v + 1, 2 * u, big);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < cap {
        let mut prev = vec![usize::MAX; m];
        let mut seen = vec![false; m];
        seen[source] = true;
        let mut q = VecDeque::from([source]);
        while let Some(x) = q.pop_front() {
            if x == sink {
                break;
            }
            for &arc in &head[x] {
                let y = to[arc];
                if !seen[y] && cap_arc[arc] > 0 {
                    seen[y] = true;
                    prev[y] = arc;
                    q.push_back(y);
                }
            }
        }
        if !seen[sink] {
            break;
        }
        let mut y = sink;
        while y != source {
            let arc = prev[y];
            cap_arc[arc] -= 1;
            cap_arc[arc ^ 1] += 1;
            y = to[arc ^ 1];
        }
        flow += 1;
    }
    flow
}

/// Removal of `set` increases the number of components.
pub fn is_cut_set(g: &Graph, set: &[usize]) -> bool {
    !set.is_empty() && g.component_count_avoiding(set) > g.components().len()
}

/// A cut-set none of whose proper non-empty subsets is a cut-set.
pub fn is_minimal_cut(g: &Graph, set: &[usize]) -> bool {
    if !is_cut_set(g, set) {
        return false;
    }
    let k = set.len();
    (1..k).all(|size| {
        subsets(k, size).iter().all(|sub| {
            let s: Vec<usize> = sub.iter().map(|&i| set[i]).collect();
            !is_cut_set(g, &s)
        })
    })
}

/// All minimal cut-sets of size at most `k`, by size then lexicographically.
pub fn enumerate_min_cuts(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=k.min(g.n()) {
        for s in subsets(g.n(), size) {
            if is_minimal_cut(g, &s) {
                out.push(s);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeparationKind {
    CondI,
    CondIi,
    CondIii,
    NotSeparating,
}

/// Why `(a, b)` does or does not separate `A ⊗_f B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationCertificate {
    pub kind: SeparationKind,
    /// Condition (i): classes of components of `A - a`.
    pub partition: Option<Vec<Vec<usize>>>,
    /// Condition (ii): a component of `B - b` avoiding the neighbour images.
    pub component_j: Option<Vec<usize>>,
    pub neighbours: Vec<usize>,
    pub neighbour_images: Vec<usize>,
}

fn check_factors(a: &Graph, b: &Graph) -> Result<(), ConnectivityError> {
    if a.n() < 2 || !a.is_connected() {
        return Err(ConnectivityError::Factor('A'));
    }
    if b.n() < 2 || !b.is_connected() {
        return Err(ConnectivityError::Factor('B'));
    }
    Ok(())
}

/// Whether every path between `x` and `y` in `b` meets `blocker`. A path with
/// `blocker` as an endpoint meets it.
pub fn blocks_all_paths(b: &Graph, blocker: usize, x: usize, y: usize) -> bool {
    if x == blocker || y == blocker {
        return true;
    }
    let mut blocked = vec![false; b.n()];
    blocked[blocker] = true;
    b.shortest_path(x, y, &blocked).is_none()
}

/// Decides whether `(a, b)` separates `A ⊗_f B` by testing conditions (i),
/// (ii), (iii) in that order, each with a witness.
pub fn separating_vertex_characterization(
    a_graph: &Graph,
    b_graph: &Graph,
    f: &VertexMap,
    a: usize,
    b: usize,
) -> Result<SeparationCertificate, ConnectivityError> {
    check_factors(a_graph, b_graph)?;
    f.check_domain(a_graph)?;
    if a >= a_graph.n() || b >= b_graph.n() {
        return Err(ConnectivityError::Vertex(a, b));
    }
    let neighbours = a_graph.neighbours(a).to_vec();
    let neighbour_images = f.neighbour_images(a_graph, a);
    let mut cert = SeparationCertificate {
        kind: SeparationKind::NotSeparating,
        partition: None,
        component_j: None,
        neighbours: neighbours.clone(),
        neighbour_images: neighbour_images.clone(),
    };

    // (i): merge components of A - a that are forced together
    let comps = a_graph.components_avoiding(&[a]);
    if comps.len() >= 2 {
        let mut comp_of = vec![usize::MAX; a_graph.n()];
        for (i, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = i;
            }
        }
        let mut parent: Vec<usize> = (0..comps.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for (i, &h) in neighbours.iter().enumerate() {
            for &h2 in &neighbours[i + 1..] {
                if !blocks_all_paths(b_graph, b, f.get(h), f.get(h2)) {
                    let (x, y) = (find(&mut parent, comp_of[h]), find(&mut parent, comp_of[h2]));
                    parent[x] = y;
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_of_root = vec![usize::MAX; comps.len()];
        for (i, c) in comps.iter().enumerate() {
            let r = find(&mut parent, i);
            if class_of_root[r] == usize::MAX {
                class_of_root[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[class_of_root[r]].extend_from_slice(c);
        }
        if classes.len() >= 2 {
            for c in &mut classes {
                c.sort_unstable();
            }
            classes.sort();
            cert.kind = SeparationKind::CondI;
            cert.partition = Some(classes);
            return Ok(cert);
        }
    }

    // (ii): a component of B - b missed by every neighbour image
    let b_comps = b_graph.components_avoiding(&[b]);
    if b_comps.len() >= 2 {
        if let Some(j) = b_comps.iter().find(|c| c.iter().all(|y| neighbour_images.binary_search(y).is_err())) {
            cert.kind = SeparationKind::CondIi;
            cert.component_j = Some(j.clone());
            return Ok(cert);
        }
    }

    // (iii): every neighbour of a maps to b
    if neighbours.iter().all(|&h| f.get(h) == b) {
        cert.kind = SeparationKind::CondIii;
    }
    Ok(cert)
}

impl SeparationCertificate {
    /// Re-checks the witness for its stated condition.
    pub fn verify(&self, a_graph: &Graph, b_graph: &Graph, f: &VertexMap, a: usize, b: usize) -> bool {
        match self.kind {
            SeparationKind::CondI => {
                let Some(parts) = &self.partition else { return false };
                if parts.len() < 2 {
                    return false;
                }
                let comps = a_graph.components_avoiding(&[a]);
                let mut covered: Vec<usize> = parts.iter().flatten().copied().collect();
                covered.sort_unstable();
                let mut expect: Vec<usize> = (0..a_graph.n()).filter(|&v| v != a).collect();
                expect.sort_unstable();
                if covered != expect {
                    return false;
                }
                let part_of = |v: usize| parts.iter().position(|p| p.contains(&v));
                for c in &comps {
                    if c.iter().any(|&v| part_of(v) != part_of(c[0])) {
                        return false;
                    }
                }
                let nb = a_graph.neighbours(a);
                for &h in nb {
                    for &h2 in nb {
                        if part_of(h) != part_of(h2) && !blocks_all_paths(b_graph, b, f.get(h), f.get(h2)) {
                            return false;
                        }
                    }
                }
                true
            }
            SeparationKind::CondIi => {
                let Some(j) = &self.component_j else { return false };
                let comps = b_graph.components_avoiding(&[b]);
                comps.len() >= 2 && comps.contains(j) && a_graph.neighbours(a).iter().all(|&h| !j.contains(&f.get(h)))
            }
            SeparationKind::CondIii => a_graph.neighbours(a).iter().all(|&h| f.get(h) == b),
            SeparationKind::NotSeparating => true,
        }
    }
}

/// `A`, `B` are `k`-connected and every vertex of `A` has at least `k`
/// distinct neighbour images.
pub fn kc_hypotheses(a: &Graph, b: &Graph, f: &VertexMap, k: usize) -> bool {
    f.check_domain(a).is_ok()
        && is_k_connected(a, k)
        && is_k_connected(b, k)
        && (0..a.n()).all(|x| f.neighbour_images(a, x).len() >= k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MinCutClass {
    /// The first coordinates form a cut-set of `A`.
    FirstCoordCut { first: Vec<usize> },
    /// One first coordinate `a`; the second coordinates form a cut-set of `B`.
    SecondCoordCut { a: usize, second: Vec<usize> },
    /// One first coordinate `a`; all neighbour images of `a` are second coordinates.
    ImageConfined { a: usize, second: Vec<usize>, neighbour_images: Vec<usize> },
}

impl MinCutClass {
    pub fn verify(&self, a_graph: &Graph, b_graph: &Graph, f: &VertexMap, pairs: &[(usize, usize)]) -> bool {
        let mut firsts: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        firsts.sort_unstable();
        firsts.dedup();
        let mut seconds: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        seconds.sort_unstable();
        seconds.dedup();
        match self {
            MinCutClass::FirstCoordCut { first } => *first == firsts && is_cut_set(a_graph, first),
            MinCutClass::SecondCoordCut { a, second } => {
                firsts == [*a] && *second == seconds && is_cut_set(b_graph, second)
            }
            MinCutClass::ImageConfined { a, second, .. } => {
                firsts == [*a]
                    && *second == seconds
                    && f.neighbour_images(a_graph, *a).iter().all(|y| second.binary_search(y).is_ok())
            }
        }
    }
}

/// Sorts a minimal cut of `A ⊗_f B` (given by product indices) into one of the
/// three alternatives. Errors when the set is not a minimal cut, or when no
/// alternative applies.
pub fn classify_minimal_cut(
    a_graph: &Graph,
    b_graph: &Graph,
    f: &VertexMap,
    cut: &[usize],
) -> Result<MinCutClass, ConnectivityError> {
    let product = sierpinski(a_graph, b_graph, f)?;
    let idx = ProductIndex::new(a_graph.n(), b_graph.n());
    if cut.iter().any(|&v| v >= idx.len()) {
        return Err(ConnectivityError::NotACut);
    }
    if !is_cut_set(&product, cut) {
        return Err(ConnectivityError::NotACut);
    }
    if !is_minimal_cut(&product, cut) {
        return Err(ConnectivityError::NotMinimal);
    }
    let pairs: Vec<(usize, usize)> = cut.iter().map(|&v| idx.pair(v)).collect();
    let mut firsts: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    firsts.sort_unstable();
    firsts.dedup();
    let mut seconds: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    seconds.sort_unstable();
    seconds.dedup();
    if is_cut_set(a_graph, &firsts) {
        return Ok(MinCutClass::FirstCoordCut { first: firsts });
    }
    if firsts.len() == 1 {
        let a = firsts[0];
        if is_cut_set(b_graph, &seconds) {
            return Ok(MinCutClass::SecondCoordCut { a, second: seconds });
        }
        let images = f.neighbour_images(a_graph, a);
        if images.iter().all(|y| seconds.binary_search(y).is_ok()) {
            return Ok(MinCutClass::ImageConfined { a, second: seconds, neighbour_images: images });
        }
    }
    Err(ConnectivityError::Unclassified(pairs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImageBound {
    pub image_size: usize,
    /// Minimum image size a 3-connected product needs: 2 when `B = K2`, else 3.
    pub required: usize,
    pub passes: bool,
}

/// Necessary condition on `|im f|` for `A ⊗_f B` to be 3-connected.
pub fn image_size_bound(b: &Graph, f: &VertexMap) -> ImageBound {
    let image_size = f.image_set().len();
    let b_is_k2 = b.n() == 2 && b.edge_count() == 1;
    let required = if b_is_k2 { 2 } else { 3 };
    ImageBound { image_size, required, passes: image_size >= required }
}
