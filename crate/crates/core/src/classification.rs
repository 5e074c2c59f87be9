//! Which triples `(A, B, f)` give regular planar or polyhedral products, and
//! the special families with `K_4` or `K_2` as a factor.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::classes::{
    check_a_hash, check_b_star, consecutive_embedding, AClassCertificate, BClassCertificate, ClassError,
    ClassSignature, Colouring, SearchOptions,
};
use crate::connectivity::{is_cut_set, is_k_connected, vertex_connectivity};
use crate::embedding::{embedding_with_common_face, is_planar, is_polyhedron, planar_rotation};
use crate::graph::{Graph, GraphError, VertexMap};
use crate::products::sierpinski;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassificationError {
    #[error("factor {0} is trivial")]
    Trivial(char),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `A` in `A(sig)`, `B` in `B_r(sig)` and `f` colour preserving, with the
/// colours read off the fibres of `f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub r: usize,
    pub signature: ClassSignature,
    pub a_certificate: AClassCertificate,
    pub b_certificate: BClassCertificate,
}

fn check_nontrivial(a: &Graph, b: &Graph, f: &VertexMap) -> Result<(), ClassificationError> {
    f.check_domain(a)?;
    if a.n() < 2 {
        return Err(ClassificationError::Trivial('A'));
    }
    if b.n() < 2 {
        return Err(ClassificationError::Trivial('B'));
    }
    if f.codomain_size() != b.n() {
        return Err(ClassificationError::Hypothesis("map codomain differs from |V(B)|".into()));
    }
    Ok(())
}

/// Number of neighbours of `a` mapped to `b`, for every `b`.
fn fibre_counts(a_graph: &Graph, f: &VertexMap, a: usize, nb: usize) -> Vec<usize> {
    let mut count = vec![0; nb];
    for &u in a_graph.neighbours(a) {
        count[f.get(u)] += 1;
    }
    count
}

/// The decomposition, if one exists. The degree of `(a, b)` in the product is
/// `deg_B(b)` plus the number of neighbours of `a` sent to `b`; regularity
/// forces every colour and part.
pub fn decompose_regular_planar(
    a: &Graph,
    b: &Graph,
    f: &VertexMap,
) -> Result<Option<Decomposition>, ClassificationError> {
    check_nontrivial(a, b, f)?;
    let nb = b.n();
    let r = b.degree(0) + fibre_counts(a, f, 0, nb)[0];
    for x in 0..a.n() {
        let count = fibre_counts(a, f, x, nb);
        if (0..nb).any(|y| b.degree(y) + count[y] != r) {
            return Ok(None);
        }
    }
    let mut coloured: Vec<usize> = (0..nb).filter(|&y| b.degree(y) < r).collect();
    let image = f.image_set();
    if image != coloured {
        return Ok(None);
    }
    // colours by decreasing deficiency, ties by index
    coloured.sort_by(|&x, &y| b.degree(x).cmp(&b.degree(y)).then(x.cmp(&y)));
    let parts: Vec<usize> = coloured.iter().map(|&y| r - b.degree(y)).collect();
    let Ok(signature) = ClassSignature::new(parts) else { return Ok(None) };
    if !(2..=5).contains(&r) || signature.k() > 3 {
        return Ok(None);
    }
    let mut colour_of = vec![0u8; nb];
    for (i, &y) in coloured.iter().enumerate() {
        colour_of[y] = i as u8 + 1;
    }
    let colouring = Colouring::new((0..a.n()).map(|x| colour_of[f.get(x)]).collect())?;
    if !a.is_connected() || !b.is_connected() {
        return Ok(None);
    }
    let Some(a_rotation) = consecutive_embedding(a, &colouring) else { return Ok(None) };
    let Some((b_rotation, face)) = embedding_with_common_face(b, &coloured) else { return Ok(None) };
    Ok(Some(Decomposition {
        r,
        signature: signature.clone(),
        a_certificate: AClassCertificate { signature: signature.clone(), colouring, rotation: a_rotation },
        b_certificate: BClassCertificate { r, signature, coloured_vertices: coloured, rotation: b_rotation, face },
    }))
}

/// Builds the product and tests it: `Some(r)` when it is `r`-regular,
/// connected and planar.
pub fn direct_regular_planar(a: &Graph, b: &Graph, f: &VertexMap) -> Result<Option<usize>, ClassificationError> {
    let p = sierpinski(a, b, f).map_err(|e| ClassificationError::Hypothesis(alloc::format!("{e}")))?;
    Ok(p.regular_degree().filter(|_| p.is_connected() && is_planar(&p)))
}

/// Builds the product and tests it: `Some(r)` when it is an `r`-regular polyhedron.
pub fn direct_regular_polyhedron(a: &Graph, b: &Graph, f: &VertexMap) -> Result<Option<usize>, ClassificationError> {
    let p = sierpinski(a, b, f).map_err(|e| ClassificationError::Hypothesis(alloc::format!("{e}")))?;
    Ok(p.regular_degree().filter(|_| is_polyhedron(&p)))
}

/// Requirement on `A` in a row of the scenario table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AQualifier {
    ThreeConnected,
    /// 2-connected and satisfying the 2-cut condition for `(2,1,1)`.
    HashTwoConnected,
}

/// Requirement on `B` in a row of the scenario table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BQualifier {
    K2,
    Starred,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScenarioRow {
    pub scenario: u8,
    pub r: usize,
    pub parts: &'static [usize],
    pub a: AQualifier,
    pub b: BQualifier,
}

pub const SCENARIOS: [ScenarioRow; 6] = [
    ScenarioRow { scenario: 1, r: 3, parts: &[2, 2], a: AQualifier::ThreeConnected, b: BQualifier::K2 },
    ScenarioRow { scenario: 2, r: 3, parts: &[1, 1, 1], a: AQualifier::ThreeConnected, b: BQualifier::Starred },
    ScenarioRow { scenario: 3, r: 3, parts: &[2, 1, 1], a: AQualifier::HashTwoConnected, b: BQualifier::Starred },
    ScenarioRow { scenario: 4, r: 4, parts: &[2, 1, 1], a: AQualifier::HashTwoConnected, b: BQualifier::Starred },
    ScenarioRow { scenario: 5, r: 5, parts: &[1, 1, 1], a: AQualifier::ThreeConnected, b: BQualifier::Starred },
    ScenarioRow { scenario: 6, r: 5, parts: &[2, 1, 1], a: AQualifier::HashTwoConnected, b: BQualifier::Starred },
];

/// Facts checked for the row matching `(r, signature)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioWitness {
    pub decomposition: Decomposition,
    pub a_connectivity: usize,
    /// The 2-cut condition on `A`, when the row asks for it.
    pub a_hash: Option<bool>,
    pub b_is_k2: bool,
    pub b_star: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScenarioVerdict {
    pub scenario: Option<u8>,
    pub r: Option<usize>,
    pub signature: Option<ClassSignature>,
    pub witness: Option<ScenarioWitness>,
    /// Why no scenario was assigned.
    pub reason: Option<String>,
}

impl ScenarioVerdict {
    fn none(reason: &str) -> Self {
        ScenarioVerdict { scenario: None, r: None, signature: None, witness: None, reason: Some(reason.into()) }
    }
}

fn is_k2(b: &Graph) -> bool {
    b.n() == 2 && b.edge_count() == 1
}

/// The scenario of the table of regular polyhedral products whose conditions
/// `(A, B, f)` satisfies, if any. Rows are tried in order; their `(r, sig)`
/// pairs are distinct so at most one can match.
pub fn scenario_of(a: &Graph, b: &Graph, f: &VertexMap) -> Result<ScenarioVerdict, ClassificationError> {
    let Some(d) = decompose_regular_planar(a, b, f)? else {
        return Ok(ScenarioVerdict::none("no colour decomposition"));
    };
    let Some(row) = SCENARIOS.iter().find(|row| row.r == d.r && row.parts == d.signature.parts()) else {
        let mut v = ScenarioVerdict::none("regularity and signature match no row");
        v.r = Some(d.r);
        v.signature = Some(d.signature);
        return Ok(v);
    };
    let a_connectivity = vertex_connectivity(a).unwrap_or(0);
    let a_hash = match row.a {
        AQualifier::ThreeConnected => None,
        AQualifier::HashTwoConnected => Some(check_a_hash(a, &d.a_certificate)?),
    };
    let a_ok = match row.a {
        AQualifier::ThreeConnected => a_connectivity >= 3,
        AQualifier::HashTwoConnected => a_connectivity >= 2 && a_hash == Some(true),
    };
    let b_is_k2 = is_k2(b);
    let b_star = check_b_star(b, d.r);
    let b_ok = match row.b {
        BQualifier::K2 => b_is_k2,
        BQualifier::Starred => b_star,
    };
    let r = d.r;
    let signature = d.signature.clone();
    let witness = ScenarioWitness { decomposition: d, a_connectivity, a_hash, b_is_k2, b_star };
    let reason = match (a_ok, b_ok) {
        (true, true) => None,
        (false, _) => Some("first factor fails the row's connectivity condition".into()),
        (true, false) => Some("second factor fails the row's condition".into()),
    };
    Ok(ScenarioVerdict {
        scenario: (a_ok && b_ok).then_some(row.scenario),
        r: Some(r),
        signature: Some(signature),
        witness: Some(witness),
        reason,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table2Row {
    pub case: u8,
    pub r: usize,
    pub parts: &'static [usize],
    /// The row applies only when `A` is `K_2`.
    pub a_is_k2: bool,
}

const fn row(case: u8, r: usize, parts: &'static [usize], a_is_k2: bool) -> Table2Row {
    Table2Row { case, r, parts, a_is_k2 }
}

pub const TABLE2: [Table2Row; 24] = [
    row(1, 2, &[1, 1], false),
    row(2, 3, &[1], true),
    row(3, 3, &[1, 1], false),
    row(4, 3, &[2], false),
    row(5, 3, &[1, 1, 1], false),
    row(6, 3, &[2, 1], false),
    row(7, 3, &[2, 1, 1], false),
    row(8, 3, &[2, 2], false),
    row(9, 4, &[1, 1], false),
    row(10, 4, &[2], false),
    row(11, 4, &[2, 1, 1], false),
    row(12, 4, &[2, 2], false),
    row(13, 4, &[3, 1], false),
    row(14, 5, &[1], true),
    row(15, 5, &[1, 1], false),
    row(16, 5, &[2], false),
    row(17, 5, &[1, 1, 1], false),
    row(18, 5, &[2, 1], false),
    row(19, 5, &[3], false),
    row(20, 5, &[2, 1, 1], false),
    row(21, 5, &[2, 2], false),
    row(22, 5, &[3, 1], false),
    row(23, 5, &[4], false),
    row(24, 5, &[4, 1], false),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Verdict {
    pub case: Option<u8>,
    pub r: Option<usize>,
    pub signature: Option<ClassSignature>,
}

/// The row of the table of regular connected planar products matching the
/// decomposition of `(A, B, f)`.
pub fn table2_case(a: &Graph, b: &Graph, f: &VertexMap) -> Result<Table2Verdict, ClassificationError> {
    let Some(d) = decompose_regular_planar(a, b, f)? else {
        return Ok(Table2Verdict { case: None, r: None, signature: None });
    };
    let a_is_k2 = is_k2(a);
    let case = TABLE2
        .iter()
        .find(|row| row.r == d.r && row.parts == d.signature.parts() && (!row.a_is_k2 || a_is_k2))
        .map(|row| row.case);
    Ok(Table2Verdict { case, r: Some(d.r), signature: Some(d.signature) })
}

/// Where the images of the neighbours of `a` sit on a face of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceOrderEntry {
    pub a: usize,
    /// Face of `B` as a vertex cycle.
    pub face: Vec<usize>,
    /// Position along `face` of the image of each neighbour, in the rotation order at `a`.
    pub positions: Vec<usize>,
    pub distinct_images: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceOrderWitness {
    pub entries: Vec<FaceOrderEntry>,
}

/// Whether `positions` (distinct, on a cycle of length `len`) run around the
/// cycle in one direction.
fn cyclically_monotone(positions: &[usize], len: usize) -> bool {
    let d = positions.len();
    if d <= 2 {
        return true;
    }
    let forward = |p: &[usize]| {
        let total: usize = (0..d).map(|i| (p[(i + 1) % d] + len - p[i]) % len).sum();
        total == len
    };
    let reversed: Vec<usize> = positions.iter().rev().copied().collect();
    forward(positions) || forward(&reversed)
}

/// For polyhedra `A`, `B` and locally injective `f`: a face of `B` for every
/// vertex `a` carrying the images of its neighbours in their cyclic order, in
/// either direction. `None` when some vertex has no such face.
pub fn check_siepol(a: &Graph, b: &Graph, f: &VertexMap) -> Result<Option<FaceOrderWitness>, ClassificationError> {
    f.check_domain(a)?;
    if f.codomain_size() != b.n() {
        return Err(ClassificationError::Hypothesis("map codomain differs from |V(B)|".into()));
    }
    if !is_polyhedron(a) {
        return Err(ClassificationError::Hypothesis("A is not a polyhedron".into()));
    }
    if !is_polyhedron(b) {
        return Err(ClassificationError::Hypothesis("B is not a polyhedron".into()));
    }
    if !f.is_locally_injective(a) {
        return Err(ClassificationError::Hypothesis("f is not locally injective".into()));
    }
    let rot_a = planar_rotation(a).expect("polyhedron is planar");
    let faces_b = planar_rotation(b).expect("polyhedron is planar").faces();
    let mut entries = Vec::with_capacity(a.n());
    for x in 0..a.n() {
        let images: Vec<usize> = rot_a.at(x).iter().map(|&u| f.get(u)).collect();
        let mut distinct = images.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let found = faces_b.iter().find_map(|face| {
            let positions: Option<Vec<usize>> = images.iter().map(|y| face.iter().position(|z| z == y)).collect();
            positions.filter(|p| cyclically_monotone(p, face.len())).map(|positions| FaceOrderEntry {
                a: x,
                face: face.clone(),
                positions,
                distinct_images: distinct.len(),
            })
        });
        match found {
            Some(e) if e.distinct_images >= 3 => entries.push(e),
            _ => return Ok(None),
        }
    }
    Ok(Some(FaceOrderWitness { entries }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryMethod {
    Merge,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryFailure {
    NotPolyhedron,
    NotForest,
    MergeFailed,
    ExhaustiveNone,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryOrder {
    pub order: Option<Vec<usize>>,
    pub method: Option<BoundaryMethod>,
    /// Why the merge did not produce the order (also set when the fallback succeeded).
    pub failure: Option<BoundaryFailure>,
}

/// Largest input for the exhaustive fallback.
pub const BOUNDARY_EXHAUSTIVE_BOUND: usize = 8;

/// Vertices of degree at least 4, adjacent when at distance at most 2.
pub fn high_degree_proximity(a: &Graph) -> (Graph, Vec<usize>) {
    let high: Vec<usize> = (0..a.n()).filter(|&v| a.degree(v) >= 4).collect();
    let mut edges = Vec::new();
    for i in 0..high.len() {
        let dist = a.bfs_distances(high[i]);
        for j in i + 1..high.len() {
            if dist[high[j]].is_some_and(|d| d <= 2) {
                edges.push((i, j));
            }
        }
    }
    (Graph::from_edges(high.len(), &edges).expect("valid edges"), high)
}

fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// Every vertex's neighbours appear along `order` in their rotation order, in
/// one direction or the other.
pub fn boundary_order_valid(a: &Graph, order: &[usize]) -> bool {
    let Some(rot) = planar_rotation(a) else { return false };
    let mut pos = vec![usize::MAX; a.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= a.n() || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    if pos.contains(&usize::MAX) {
        return false;
    }
    (0..a.n()).all(|v| {
        let p: Vec<usize> = rot.at(v).iter().map(|&u| pos[u]).collect();
        cyclically_monotone(&p, order.len())
    })
}

/// Inserts the cyclic list `nbrs` into `list` so that the common elements keep
/// their order; new elements go just before the next common element.
fn merge_cyclic(list: &mut Vec<usize>, nbrs: &[usize]) -> bool {
    let common: Vec<usize> = nbrs.iter().copied().filter(|v| list.contains(v)).collect();
    if common.is_empty() {
        list.extend_from_slice(nbrs);
        return true;
    }
    let reversed: Vec<usize> = nbrs.iter().rev().copied().collect();
    for candidate in [nbrs.to_vec(), reversed] {
        let d = candidate.len();
        let pos_in_list = |v: usize| list.iter().position(|&x| x == v);
        let common_idx: Vec<usize> = (0..d).filter(|&i| pos_in_list(candidate[i]).is_some()).collect();
        let p: Vec<usize> = common_idx.iter().map(|&i| pos_in_list(candidate[i]).unwrap()).collect();
        if !cyclically_monotone(&p, list.len()) {
            continue;
        }
        // orientation: the common elements must run forward along `list`
        if p.len() >= 3 {
            let total: usize = (0..p.len()).map(|i| (p[(i + 1) % p.len()] + list.len() - p[i]) % list.len()).sum();
            if total != list.len() {
                continue;
            }
        }
        let mut out = list.clone();
        for (j, &ci) in common_idx.iter().enumerate() {
            // new elements of candidate after common element ci, up to the next common one
            let next = common_idx[(j + 1) % common_idx.len()];
            let mut run = Vec::new();
            let mut i = (ci + 1) % d;
            while i != next {
                run.push(candidate[i]);
                i = (i + 1) % d;
            }
            if run.is_empty() {
                continue;
            }
            let anchor = candidate[next];
            let at = out.iter().position(|&x| x == anchor).unwrap();
            for (k, v) in run.into_iter().enumerate() {
                out.insert(at + k, v);
            }
        }
        *list = out;
        return true;
    }
    false
}

/// A cyclic order of `V(A)` compatible with every vertex's rotation, built by
/// merging neighbour lists along the trees of the high-degree proximity graph.
/// Falls back to exhaustive search for small `A` when the merge is unavailable.
pub fn compatible_boundary_order(a: &Graph) -> BoundaryOrder {
    if !is_polyhedron(a) {
        return BoundaryOrder { order: None, method: None, failure: Some(BoundaryFailure::NotPolyhedron) };
    }
    let (prox, high) = high_degree_proximity(a);
    let failure = if is_forest(&prox) {
        match merge_order(a, &prox, &high) {
            Some(order) if boundary_order_valid(a, &order) => {
                return BoundaryOrder { order: Some(order), method: Some(BoundaryMethod::Merge), failure: None }
            }
            _ => BoundaryFailure::MergeFailed,
        }
    } else {
        BoundaryFailure::NotForest
    };
    if a.n() <= BOUNDARY_EXHAUSTIVE_BOUND {
        let order = exhaustive_order(a);
        let method = Some(BoundaryMethod::Exhaustive);
        return match order {
            Some(o) => BoundaryOrder { order: Some(o), method, failure: Some(failure) },
            None => BoundaryOrder { order: None, method, failure: Some(BoundaryFailure::ExhaustiveNone) },
        };
    }
    BoundaryOrder { order: None, method: Some(BoundaryMethod::Merge), failure: Some(failure) }
}

fn merge_order(a: &Graph, prox: &Graph, high: &[usize]) -> Option<Vec<usize>> {
    let rot = planar_rotation(a)?;
    let mut order: Vec<usize> = Vec::new();
    let mut done = vec![false; prox.n()];
    for root in 0..prox.n() {
        if done[root] {
            continue;
        }
        let mut list: Vec<usize> = Vec::new();
        let mut queue = alloc::collections::VecDeque::from([root]);
        done[root] = true;
        while let Some(t) = queue.pop_front() {
            if !merge_cyclic(&mut list, rot.at(high[t])) {
                return None;
            }
            for &s in prox.neighbours(t) {
                if !done[s] {
                    done[s] = true;
                    queue.push_back(s);
                }
            }
        }
        for v in list {
            if !order.contains(&v) {
                order.push(v);
            }
        }
    }
    order.extend((0..a.n()).filter(|v| !order.contains(v)).collect::<Vec<_>>());
    Some(order)
}

fn exhaustive_order(a: &Graph) -> Option<Vec<usize>> {
    let n = a.n();
    if n == 0 {
        return Some(Vec::new());
    }
    // vertex 0 first; the rest permuted
    let mut rest: Vec<usize> = (1..n).collect();
    fn rec(a: &Graph, k: usize, rest: &mut Vec<usize>) -> Option<Vec<usize>> {
        if k == rest.len() {
            let mut order = vec![0];
            order.extend_from_slice(rest);
            return boundary_order_valid(a, &order).then_some(order);
        }
        for i in k..rest.len() {
            rest.swap(k, i);
            if let Some(o) = rec(a, k + 1, rest) {
                return Some(o);
            }
            rest.swap(k, i);
        }
        None
    }
    rec(a, 0, &mut rest)
}

/// The four conditions for `K_4 (x)_f B` to be a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4BReport {
    pub injective: bool,
    pub planar: bool,
    pub two_connected: bool,
    /// Every 2-cut leaves exactly two components with exactly two images each.
    pub two_cuts_split_images: bool,
    pub images_on_one_face: bool,
}

impl K4BReport {
    pub fn holds(&self) -> bool {
        self.injective && self.planar && self.two_connected && self.two_cuts_split_images && self.images_on_one_face
    }
}

pub fn check_k4b(b: &Graph, f: &VertexMap) -> Result<K4BReport, ClassificationError> {
    if f.domain_size() != 4 || f.codomain_size() != b.n() {
        return Err(ClassificationError::Hypothesis("f must map the four vertices of K4 into B".into()));
    }
    if b.n() == 4 && b.edge_count() == 6 {
        return Err(ClassificationError::OutOfScope("B is K4".into()));
    }
    let images = f.images().to_vec();
    let injective = f.is_injective();
    let planar = is_planar(b);
    let two_connected = is_k_connected(b, 2);
    let mut two_cuts_split_images = true;
    'outer: for x in 0..b.n() {
        for y in x + 1..b.n() {
            if !is_cut_set(b, &[x, y]) {
                continue;
            }
            let comps = b.components_avoiding(&[x, y]);
            if comps.len() != 2 || comps.iter().any(|c| images.iter().filter(|v| c.contains(v)).count() != 2) {
                two_cuts_split_images = false;
                break 'outer;
            }
        }
    }
    let mut distinct = images.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let images_on_one_face = planar && embedding_with_common_face(b, &distinct).is_some();
    Ok(K4BReport { injective, planar, two_connected, two_cuts_split_images, images_on_one_face })
}

/// A red/blue colouring of a polyhedron with minimum degree at least 4 in
/// which every vertex sees at least two of each colour, consecutively.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RbAssignment {
    /// `true` for red.
    pub red: Vec<bool>,
    /// Red to vertex 0 of `K_2`, blue to vertex 1.
    pub map: VertexMap,
}

pub fn check_rb(a: &Graph) -> Option<RbAssignment> {
    if a.n() == 0 || a.min_degree() < 4 || !is_polyhedron(a) {
        return None;
    }
    let rot = planar_rotation(a)?;
    let n = a.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    fn ok_at(rot: &crate::embedding::RotationSystem, colour: &[Option<bool>], v: usize) -> bool {
        let list = rot.at(v);
        let d = list.len();
        let known: Vec<bool> = list.iter().filter_map(|&u| colour[u]).collect();
        let reds = known.iter().filter(|&&c| c).count();
        let blues = known.len() - reds;
        let unknown = d - known.len();
        if reds + unknown < 2 || blues + unknown < 2 {
            return false;
        }
        if unknown > 0 {
            // colour changes between known neighbours adjacent in the rotation
            let changes = (0..d)
                .filter(|&i| matches!((colour[list[i]], colour[list[(i + 1) % d]]), (Some(x), Some(y)) if x != y))
                .count();
            return changes <= 2;
        }
        let changes = (0..d).filter(|&i| colour[list[i]] != colour[list[(i + 1) % d]]).count();
        changes == 2
    }
    fn rec(a: &Graph, rot: &crate::embedding::RotationSystem, colour: &mut Vec<Option<bool>>, v: usize) -> bool {
        if v == colour.len() {
            return true;
        }
        // red first for vertex 0 only, by the red/blue symmetry
        let choices: &[bool] = if v == 0 { &[true] } else { &[true, false] };
        for &c in choices {
            colour[v] = Some(c);
            if a.neighbours(v).iter().all(|&u| ok_at(rot, colour, u)) && rec(a, rot, colour, v + 1) {
                return true;
            }
        }
        colour[v] = None;
        false
    }
    if !rec(a, &rot, &mut colour, 0) {
        return None;
    }
    let red: Vec<bool> = colour.into_iter().map(|c| c.expect("all coloured")).collect();
    let map = VertexMap::new(red.iter().map(|&r| if r { 0 } else { 1 }).collect(), 2).expect("valid map");
    Some(RbAssignment { red, map })
}

/// Default options for the membership searches used by classification sweeps.
pub fn default_search() -> SearchOptions {
    SearchOptions::default()
}
