//! Brute-force reference implementations. Nothing here calls the fast
//! planarity or connectivity code; the graph enumerators are sweep drivers.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("{what} oracle limited to {limit} vertices, got {n}")]
    SizeBound { what: &'static str, limit: usize, n: usize },
}

pub const CONNECTIVITY_BOUND: usize = 16;
pub const PLANARITY_BOUND: usize = 10;
pub const ISOMORPHISM_BOUND: usize = 24;
pub const ENUMERATION_BOUND: usize = 7;

/// One fast-versus-brute comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub claim: String,
    pub instance: String,
    pub fast: String,
    pub brute: String,
    pub agree: bool,
}

impl OracleReport {
    pub fn new(claim: &str, instance: String, fast: String, brute: String) -> Self {
        let agree = fast == brute;
        OracleReport { claim: claim.into(), instance, fast, brute, agree }
    }
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.neighbours(v).iter().fold(0u64, |m, &w| m | (1 << w))).collect()
}

/// Whether the vertices in `alive` induce a connected graph (empty counts as connected).
fn mask_connected(adj: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive & alive.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

/// Smallest number of vertices whose removal leaves a disconnected graph;
/// `n - 1` when no such set exists.
pub fn brute_connectivity(g: &Graph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > CONNECTIVITY_BOUND {
        return Err(OracleError::SizeBound { what: "connectivity", limit: CONNECTIVITY_BOUND, n });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj = masks(g);
    let full: u64 = (1u64 << n) - 1;
    for size in 0..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset(n, size, &mut |s| {
            if !mask_connected(&adj, full & !s) {
                found = true;
                return false;
            }
            true
        });
        if found {
            return Ok(size);
        }
    }
    Ok(n - 1)
}

fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(u64) -> bool) {
    fn rec(start: usize, n: usize, left: usize, cur: u64, visit: &mut dyn FnMut(u64) -> bool) -> bool {
        if left == 0 {
            return visit(cur);
        }
        for v in start..n {
            if n - v < left {
                break;
            }
            if !rec(v + 1, n, left - 1, cur | (1 << v), visit) {
                return false;
            }
        }
        true
    }
    rec(0, n, k, 0, visit);
}

/// No subdivision of K5 or K3,3. Exhaustive over branch sets and routings.
pub fn brute_planarity(g: &Graph) -> Result<bool, OracleError> {
    let n = g.n();
    if n > PLANARITY_BOUND {
        return Err(OracleError::SizeBound { what: "planarity", limit: PLANARITY_BOUND, n });
    }
    let adj = masks(g);
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let all: u64 = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut nonplanar = false;
    // K5
    for_each_subset(n, 5, &mut |set| {
        let branch: Vec<usize> = bits(set);
        if branch.iter().any(|&v| deg[v] < 4) {
            return true;
        }
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((branch[i], branch[j]));
            }
        }
        if route(&adj, &pairs, all & !set) {
            nonplanar = true;
            return false;
        }
        true
    });
    if nonplanar {
        return Ok(false);
    }
    // K3,3
    for_each_subset(n, 6, &mut |set| {
        let six: Vec<usize> = bits(set);
        if six.iter().any(|&v| deg[v] < 3) {
            return true;
        }
        // sides containing six[0]
        for a in 1..6 {
            for b in a + 1..6 {
                let left = [six[0], six[a], six[b]];
                let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
                let mut pairs = Vec::new();
                for &x in &left {
                    for &y in &right {
                        pairs.push((x, y));
                    }
                }
                if route(&adj, &pairs, all & !set) {
                    nonplanar = true;
                    return false;
                }
            }
        }
        true
    });
    Ok(!nonplanar)
}

fn bits(mut m: u64) -> Vec<usize> {
    let mut out = Vec::new();
    while m != 0 {
        out.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    out
}

/// Joins every pair by internally disjoint paths through `free`.
fn route(adj: &[u64], pairs: &[(usize, usize)], free: u64) -> bool {
    let Some((&(x, y), rest)) = pairs.split_first() else { return true };
    if adj[x] & (1 << y) != 0 && route(adj, rest, free) {
        return true;
    }
    // paths x - f1 - ... - fk - y with all fi free
    fn extend(adj: &[u64], cur: usize, y: usize, free: u64, rest: &[(usize, usize)]) -> bool {
        let mut options = adj[cur] & free;
        while options != 0 {
            let f = options.trailing_zeros() as usize;
            options &= options - 1;
            let left = free & !(1 << f);
            if adj[f] & (1 << y) != 0 && route(adj, rest, left) {
                return true;
            }
            if extend(adj, f, y, left, rest) {
                return true;
            }
        }
        false
    }
    extend(adj, x, y, free, rest)
}

/// Joint colour refinement of two graphs; returns stable colours of each.
fn refine_pair(g: &[u64], h: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let all: Vec<u64> = g.iter().chain(h.iter()).copied().collect();
    let ng = g.len();
    // neighbourhoods in the disjoint union
    let nbrs: Vec<Vec<usize>> = all
        .iter()
        .enumerate()
        .map(|(i, &m)| bits(m).into_iter().map(|w| if i < ng { w } else { w + ng }).collect())
        .collect();
    let mut colour: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..all.len())
            .map(|v| {
                let mut s: Vec<usize> = nbrs[v].iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let index: BTreeMap<&(usize, Vec<usize>), usize> =
            distinct.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        let next: Vec<usize> = sigs.iter().map(|s| index[s]).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = next.iter().collect::<BTreeSet<_>>().len();
        colour = next;
        if after == before {
            break;
        }
    }
    let (cg, ch) = colour.split_at(ng);
    (cg.to_vec(), ch.to_vec())
}

/// A bijection `phi` with `u ~ v` in `g` iff `phi(u) ~ phi(v)` in `h`.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, OracleError> {
    for x in [g, h] {
        if x.n() > ISOMORPHISM_BOUND {
            return Err(OracleError::SizeBound { what: "isomorphism", limit: ISOMORPHISM_BOUND, n: x.n() });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() || g.degree_sequence() != h.degree_sequence() {
        return Ok(None);
    }
    let n = g.n();
    let ga = masks(g);
    let ha = masks(h);
    let (cg, ch) = refine_pair(&ga, &ha);
    let mut cg_sorted = cg.clone();
    cg_sorted.sort_unstable();
    let mut ch_sorted = ch.clone();
    ch_sorted.sort_unstable();
    if cg_sorted != ch_sorted {
        return Ok(None);
    }
    // order g's vertices: rarest colour first, then breadth-first
    let mut count = BTreeMap::new();
    for &c in &cg {
        *count.entry(c).or_insert(0usize) += 1;
    }
    let mut order = Vec::new();
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n).filter(|&v| !placed[v]).min_by_key(|&v| (count[&cg[v]], v)).expect("unplaced vertex");
        placed[start] = true;
        let mut queue = alloc::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            let mut next: Vec<usize> = bits(ga[v]).into_iter().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (count[&cg[w]], w));
            for w in next {
                placed[w] = true;
                queue.push_back(w);
            }
        }
    }
    let mut phi = vec![usize::MAX; n];
    let mut used = 0u64;
    fn search(
        k: usize,
        order: &[usize],
        ga: &[u64],
        ha: &[u64],
        cg: &[usize],
        ch: &[usize],
        phi: &mut [usize],
        used: &mut u64,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        for w in 0..ha.len() {
            if *used & (1 << w) != 0 || ch[w] != cg[v] {
                continue;
            }
            let ok = order[..k].iter().all(|&u| ((ga[v] >> u) & 1) == ((ha[w] >> phi[u]) & 1));
            if !ok {
                continue;
            }
            phi[v] = w;
            *used |= 1 << w;
            if search(k + 1, order, ga, ha, cg, ch, phi, used) {
                return true;
            }
            *used &= !(1 << w);
            phi[v] = usize::MAX;
        }
        false
    }
    if search(0, &order, &ga, &ha, &cg, &ch, &mut phi, &mut used) {
        Ok(Some(phi))
    } else {
        Ok(None)
    }
}

/// Checks a claimed isomorphism.
pub fn verify_isomorphism(g: &Graph, h: &Graph, phi: &[usize]) -> bool {
    if g.n() != h.n() || phi.len() != g.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut seen = vec![false; h.n()];
    for &w in phi {
        if w >= h.n() || seen[w] {
            return false;
        }
        seen[w] = true;
    }
    g.edges().iter().all(|&(u, v)| h.has_edge(phi[u], phi[v]))
}

/// Ordered-partition refinement to an equitable partition.
fn refine_cells(adj: &[u64], mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let cell_masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v))).collect();
        let mut next = Vec::with_capacity(cells.len());
        let mut split = false;
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> =
                c.iter().map(|&v| (cell_masks.iter().map(|&m| (adj[v] & m).count_ones()).collect(), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|x| x.1).collect());
                    start = i;
                }
            }
            split |= keyed[0].0 != keyed[keyed.len() - 1].0;
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

/// Canonical code: the largest upper-triangle adjacency word over all
/// labellings reached by individualisation and refinement. Equal codes mean
/// isomorphic graphs. Requires at most 16 vertices.
pub fn canonical_code(g: &Graph) -> u128 {
    let n = g.n();
    assert!(n <= 16, "canonical code supports up to 16 vertices");
    let adj = masks(g);
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(adj[v].count_ones()).or_default().push(v);
    }
    let cells = refine_cells(&adj, by_degree.into_values().collect());
    let mut best = None;
    canon_search(&adj, cells, &mut best);
    best.map(|(code, _)| code).unwrap_or(0)
}

/// Canonical relabelling: vertex `v` of `g` becomes `labels[v]`.
pub fn canonical_labelling(g: &Graph) -> (u128, Vec<usize>) {
    let n = g.n();
    assert!(n <= 16, "canonical labelling supports up to 16 vertices");
    let adj = masks(g);
    let mut by_degree: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(adj[v].count_ones()).or_default().push(v);
    }
    let cells = refine_cells(&adj, by_degree.into_values().collect());
    let mut best = None;
    canon_search(&adj, cells, &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn code_of(adj: &[u64], order: &[usize]) -> u128 {
    let n = order.len();
    let mut code = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            code <<= 1;
            if adj[order[i]] & (1 << order[j]) != 0 {
                code |= 1;
            }
        }
    }
    code
}

fn canon_search(adj: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(u128, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            let mut labels = vec![0; order.len()];
            for (i, &v) in order.iter().enumerate() {
                labels[v] = i;
            }
            *best = Some((code, labels));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = cells.clone();
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&x| x != v).collect();
        next[target] = vec![v];
        next.insert(target + 1, rest);
        let refined = refine_cells(adj, next);
        canon_search(adj, refined, best);
    }
}

/// The graph relabelled canonically.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, labels) = canonical_labelling(g);
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (labels[u], labels[v])).collect();
    Graph::from_edges(g.n(), &edges).expect("relabelled edges are valid")
}

/// All connected graphs on `n` vertices up to isomorphism, canonically
/// labelled, sorted by canonical code.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n > ENUMERATION_BOUND {
        return Err(OracleError::SizeBound { what: "enumeration", limit: ENUMERATION_BOUND, n });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level: Vec<Graph> = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut found: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            let base = g.edges();
            for mask in 1u64..(1 << (m - 1)) {
                let mut edges = base.clone();
                edges.extend(bits(mask).into_iter().map(|v| (v, m - 1)));
                let h = Graph::from_edges(m, &edges).expect("valid edges");
                let (code, labels) = canonical_labelling(&h);
                found.entry(code).or_insert_with(|| {
                    let e: Vec<(usize, usize)> = h.edges().iter().map(|&(u, v)| (labels[u], labels[v])).collect();
                    Graph::from_edges(m, &e).expect("valid edges")
                });
            }
        }
        level = found.into_values().collect();
    }
    Ok(level)
}

/// All graphs (connected or not) on `n <= 8` vertices up to isomorphism.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, OracleError> {
    if n > 8 {
        return Err(OracleError::SizeBound { what: "enumeration", limit: 8, n });
    }
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut found: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            let base = g.edges();
            for mask in 0u64..(1 << (m - 1)) {
                let mut edges = base.clone();
                edges.extend(bits(mask).into_iter().map(|v| (v, m - 1)));
                let h = Graph::from_edges(m, &edges).expect("valid edges");
                let (code, labels) = canonical_labelling(&h);
                found.entry(code).or_insert_with(|| {
                    let e: Vec<(usize, usize)> = h.edges().iter().map(|&(u, v)| (labels[u], labels[v])).collect();
                    Graph::from_edges(m, &e).expect("valid edges")
                });
            }
        }
        level = found.into_values().collect();
    }
    Ok(level)
}

/// Connected `d`-regular graphs on `n <= 16` vertices accepted by `planar`,
/// up to isomorphism, canonically labelled. Builds adjacency vertex by vertex,
/// treats untouched vertices as interchangeable, and prunes with `planar` on
/// every partial graph.
pub fn enumerate_regular_planar(n: usize, d: usize, planar: &dyn Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(n <= 16, "regular enumeration supports up to 16 vertices");
    let mut found: BTreeMap<u128, Graph> = BTreeMap::new();
    if n == 0 || d >= n || (n * d) % 2 == 1 {
        return Vec::new();
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut deg = vec![0usize; n];
    regular_rec(0, n, d, &mut edges, &mut deg, planar, &mut found);
    found.into_values().collect()
}

fn regular_rec(
    v: usize,
    n: usize,
    d: usize,
    edges: &mut Vec<(usize, usize)>,
    deg: &mut Vec<usize>,
    planar: &dyn Fn(&Graph) -> bool,
    found: &mut BTreeMap<u128, Graph>,
) {
    if v == n {
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            let (code, labels) = canonical_labelling(&g);
            found.entry(code).or_insert_with(|| {
                let e: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (labels[a], labels[b])).collect();
                Graph::from_edges(n, &e).expect("valid edges")
            });
        }
        return;
    }
    let need = d - deg[v];
    let touched: Vec<usize> = (v + 1..n).filter(|&w| deg[w] > 0 && deg[w] < d).collect();
    let untouched: Vec<usize> = (v + 1..n).filter(|&w| deg[w] == 0).collect();
    // choose k from touched and the first need-k untouched
    let max_untouched = need.min(untouched.len());
    for from_untouched in 0..=max_untouched {
        let from_touched = need - from_untouched;
        if from_touched > touched.len() {
            continue;
        }
        for pick in crate::graph::subsets(touched.len(), from_touched) {
            let mut chosen: Vec<usize> = pick.iter().map(|&i| touched[i]).collect();
            chosen.extend_from_slice(&untouched[..from_untouched]);
            let before = edges.len();
            for &w in &chosen {
                edges.push((v, w));
                deg[w] += 1;
            }
            deg[v] += need;
            let feasible = (v + 1..n).all(|w| d - deg[w] < n - 1 - v || deg[w] == d);
            if feasible {
                let g = Graph::from_edges(n, edges).expect("valid edges");
                if planar(&g) {
                    regular_rec(v + 1, n, d, edges, deg, planar, found);
                }
            }
            deg[v] -= need;
            for &w in &chosen {
                deg[w] -= 1;
            }
            edges.truncate(before);
        }
    }
}
