//! Exhaustive desk-scale sweeps. Work is split across a rayon pool and merged
//! in input order, so reports do not depend on the worker count.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use sierpinski_core::classes::{consecutive_embedding, emptiness_scan, ClassSignature, Colouring, ScanReport};
use sierpinski_core::classification::{check_k4b, check_rb, default_search};
use sierpinski_core::connectivity::{
    classify_minimal_cut, is_k_connected, kc_hypotheses, separating_vertex_characterization, vertex_connectivity,
    ConnectivityError, MinCutClass, SeparationKind,
};
use sierpinski_core::embedding::{is_planar, is_polyhedron, test_planarity};
use sierpinski_core::graph::{all_injections, all_maps, subsets};
use sierpinski_core::oracles::{
    brute_connectivity, brute_planarity, canonical_code, enumerate_connected_graphs, enumerate_graphs,
    enumerate_regular_planar, OracleError,
};
use sierpinski_core::products::{classify_lex_planarity, lex_product, sierpinski, LexVerdict, ProductIndex};
use sierpinski_core::{Graph, VertexMap};

use crate::io::graph6;

/// Recorded examples per failure list; counts are always complete.
pub const EXAMPLE_CAP: usize = 20;

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("{0}")]
    Core(String),
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SweepConfig {
    /// 0 means the rayon default.
    pub workers: usize,
    /// Process only the first `limit` work items.
    pub limit: Option<usize>,
}

impl SweepConfig {
    pub fn single() -> Self {
        SweepConfig { workers: 1, limit: None }
    }

    fn run<T: Sync, R: Send>(&self, items: &[T], job: impl Fn(&T) -> R + Sync + Send) -> Result<Vec<R>, SweepError> {
        let items = &items[..self.limit.unwrap_or(items.len()).min(items.len())];
        let pool = rayon::ThreadPoolBuilder::new().num_threads(self.workers).build()?;
        Ok(pool.install(|| items.par_iter().map(job).collect()))
    }
}

/// An (A, B, f) triple as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub a: String,
    pub b: String,
    pub f: Vec<usize>,
}

struct Triple<'g> {
    a: &'g Graph,
    b: &'g Graph,
    f: VertexMap,
}

impl Triple<'_> {
    fn instance(&self) -> Instance {
        Instance { a: graph6::encode(self.a), b: graph6::encode(self.b), f: self.f.images().to_vec() }
    }
}

/// Connected graphs with 2 to `max` vertices, up to isomorphism.
pub fn connected_factors(max: usize) -> Result<Vec<Graph>, SweepError> {
    let mut out = Vec::new();
    for n in 2..=max {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

fn triples<'g>(a_list: &'g [Graph], b_list: &'g [Graph]) -> Vec<Triple<'g>> {
    let mut out = Vec::new();
    for a in a_list {
        for b in b_list {
            for f in all_maps(a.n(), b.n()) {
                out.push(Triple { a, b, f });
            }
        }
    }
    out
}

fn push_capped<T>(list: &mut Vec<T>, item: T) {
    if list.len() < EXAMPLE_CAP {
        list.push(item);
    }
}

// The brute tests below read separation straight off the product: a vertex
// set separates when deleting it leaves more than one component.

fn separates(g: &Graph, set: &[usize]) -> bool {
    g.component_count_avoiding(set) > g.components().len()
}

fn brute_minimal_cut(g: &Graph, set: &[usize]) -> bool {
    if !separates(g, set) {
        return false;
    }
    (1..set.len()).all(|k| {
        subsets(set.len(), k).iter().all(|pick| {
            let sub: Vec<usize> = pick.iter().map(|&i| set[i]).collect();
            !separates(g, &sub)
        })
    })
}

fn kind_name(kind: SeparationKind) -> &'static str {
    match kind {
        SeparationKind::CondI => "cond_i",
        SeparationKind::CondIi => "cond_ii",
        SeparationKind::CondIii => "cond_iii",
        SeparationKind::NotSeparating => "not_separating",
    }
}

fn cut_kind_name(class: &MinCutClass) -> &'static str {
    match class {
        MinCutClass::FirstCoordCut { .. } => "first_coord_cut",
        MinCutClass::SecondCoordCut { .. } => "second_coord_cut",
        MinCutClass::ImageConfined { .. } => "image_confined",
    }
}

// ---- separating vertices ----

#[derive(Debug, Clone, Serialize)]
pub struct SepCase {
    pub instance: Instance,
    pub vertex: (usize, usize),
    pub characterization: bool,
    pub brute: bool,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct SepReport {
    pub max_a: usize,
    pub max_b: usize,
    pub triples: usize,
    pub vertex_checks: usize,
    pub separating: usize,
    pub by_kind: BTreeMap<String, usize>,
    pub disagreements: usize,
    pub witness_failures: usize,
    pub examples: Vec<SepCase>,
}

impl SepReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.witness_failures == 0
    }
}

/// Characterization of separating vertices against the product itself, for
/// every vertex of every product of connected factors up to the given sizes.
pub fn thm_sep(max_a: usize, max_b: usize, cfg: &SweepConfig) -> Result<SepReport, SweepError> {
    let a_list = connected_factors(max_a)?;
    let b_list = connected_factors(max_b)?;
    let work = triples(&a_list, &b_list);
    let parts = cfg.run(&work, |t| -> Result<SepReport, String> {
        let mut r = SepReport { triples: 1, ..SepReport::default() };
        let product = sierpinski(t.a, t.b, &t.f).map_err(|e| e.to_string())?;
        let idx = ProductIndex::new(t.a.n(), t.b.n());
        for v in 0..idx.len() {
            let (a, b) = idx.pair(v);
            let cert = separating_vertex_characterization(t.a, t.b, &t.f, a, b).map_err(|e| e.to_string())?;
            let claimed = cert.kind != SeparationKind::NotSeparating;
            let brute = separates(&product, &[v]);
            r.vertex_checks += 1;
            r.separating += usize::from(brute);
            *r.by_kind.entry(kind_name(cert.kind).into()).or_default() += 1;
            let witnessed = cert.verify(t.a, t.b, &t.f, a, b);
            if claimed != brute || !witnessed {
                r.disagreements += usize::from(claimed != brute);
                r.witness_failures += usize::from(!witnessed);
                push_capped(
                    &mut r.examples,
                    SepCase { instance: t.instance(), vertex: (a, b), characterization: claimed, brute },
                );
            }
        }
        Ok(r)
    })?;
    let mut total = SepReport { max_a, max_b, ..SepReport::default() };
    for part in parts {
        let part = part.map_err(SweepError::Core)?;
        total.triples += part.triples;
        total.vertex_checks += part.vertex_checks;
        total.separating += part.separating;
        total.disagreements += part.disagreements;
        total.witness_failures += part.witness_failures;
        for (k, v) in part.by_kind {
            *total.by_kind.entry(k).or_default() += v;
        }
        for e in part.examples {
            push_capped(&mut total.examples, e);
        }
    }
    Ok(total)
}

// ---- k-connectivity sufficiency ----

#[derive(Debug, Clone, Serialize)]
pub struct KcCase {
    pub instance: Instance,
    pub k: usize,
    pub product_connectivity: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct KcLevel {
    pub k: usize,
    pub hypotheses_held: usize,
    /// Instances where the product connectivity is exactly `k`.
    pub tight: usize,
    pub violations: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct KcReport {
    pub max_a: usize,
    pub max_b: usize,
    pub triples: usize,
    pub levels: Vec<KcLevel>,
    pub examples: Vec<KcCase>,
}

impl KcReport {
    pub fn passed(&self) -> bool {
        self.levels.iter().all(|l| l.violations == 0)
    }
}

/// For k = 1, 2, 3: whenever the hypotheses hold, the brute connectivity of
/// the product is at least k.
pub fn thm_kc(max_a: usize, max_b: usize, cfg: &SweepConfig) -> Result<KcReport, SweepError> {
    const KS: [usize; 3] = [1, 2, 3];
    let a_list = connected_factors(max_a)?;
    let b_list = connected_factors(max_b)?;
    let work = triples(&a_list, &b_list);
    let parts = cfg.run(&work, |t| -> Result<Vec<(bool, bool, Option<KcCase>)>, SweepError> {
        let held: Vec<bool> = KS.iter().map(|&k| kc_hypotheses(t.a, t.b, &t.f, k)).collect();
        if !held.iter().any(|&h| h) {
            return Ok(vec![(false, false, None); KS.len()]);
        }
        let product = sierpinski(t.a, t.b, &t.f).map_err(|e| SweepError::Core(e.to_string()))?;
        let kappa = brute_connectivity(&product)?;
        Ok(KS
            .iter()
            .zip(held)
            .map(|(&k, h)| {
                let bad = h && kappa < k;
                let case = bad.then(|| KcCase { instance: t.instance(), k, product_connectivity: kappa });
                (h, h && kappa == k, case)
            })
            .collect())
    })?;
    let mut levels: Vec<KcLevel> =
        KS.iter().map(|&k| KcLevel { k, hypotheses_held: 0, tight: 0, violations: 0 }).collect();
    let mut examples = Vec::new();
    let triples = parts.len();
    for part in parts {
        for (level, (held, tight, case)) in levels.iter_mut().zip(part?) {
            level.hypotheses_held += usize::from(held);
            level.tight += usize::from(tight);
            if let Some(c) = case {
                level.violations += 1;
                push_capped(&mut examples, c);
            }
        }
    }
    Ok(KcReport { max_a, max_b, triples, levels, examples })
}

// ---- minimal cuts ----

#[derive(Debug, Clone, Serialize)]
pub struct CutCase {
    pub instance: Instance,
    pub cut: Vec<(usize, usize)>,
    pub product_connectivity: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct MinCutReport {
    pub max_a: usize,
    pub max_b: usize,
    pub max_cut: usize,
    pub triples: usize,
    pub cuts: usize,
    pub by_kind: BTreeMap<String, usize>,
    pub unclassified: usize,
    /// Unclassified cuts whose size equals the product connectivity.
    pub unclassified_minimum: usize,
    pub witness_failures: usize,
    pub examples: Vec<CutCase>,
    pub minimum_examples: Vec<CutCase>,
}

impl MinCutReport {
    pub fn passed(&self) -> bool {
        self.unclassified == 0 && self.witness_failures == 0
    }
}

/// Every inclusion-minimal cut of size at most `max_cut` in every product is
/// found by brute force and handed to the classifier.
pub fn prop_kc(max_a: usize, max_b: usize, max_cut: usize, cfg: &SweepConfig) -> Result<MinCutReport, SweepError> {
    let a_list = connected_factors(max_a)?;
    let b_list = connected_factors(max_b)?;
    let work = triples(&a_list, &b_list);
    let parts = cfg.run(&work, |t| -> Result<MinCutReport, SweepError> {
        let mut r = MinCutReport { triples: 1, ..MinCutReport::default() };
        let product = sierpinski(t.a, t.b, &t.f).map_err(|e| SweepError::Core(e.to_string()))?;
        let idx = ProductIndex::new(t.a.n(), t.b.n());
        let mut kappa = None;
        for size in 1..=max_cut.min(product.n().saturating_sub(2)) {
            for cut in subsets(product.n(), size) {
                if !brute_minimal_cut(&product, &cut) {
                    continue;
                }
                r.cuts += 1;
                let pairs: Vec<(usize, usize)> = cut.iter().map(|&v| idx.pair(v)).collect();
                match classify_minimal_cut(t.a, t.b, &t.f, &cut) {
                    Ok(class) => {
                        *r.by_kind.entry(cut_kind_name(&class).into()).or_default() += 1;
                        if !class.verify(t.a, t.b, &t.f, &pairs) {
                            r.witness_failures += 1;
                        }
                    }
                    Err(ConnectivityError::Unclassified(_)) => {
                        let k = match kappa {
                            Some(k) => k,
                            None => *kappa.insert(brute_connectivity(&product)?),
                        };
                        r.unclassified += 1;
                        let case = CutCase { instance: t.instance(), cut: pairs, product_connectivity: k };
                        if size == k {
                            r.unclassified_minimum += 1;
                            push_capped(&mut r.minimum_examples, case.clone());
                        }
                        push_capped(&mut r.examples, case);
                    }
                    Err(e) => return Err(SweepError::Core(format!("classifier rejected a brute minimal cut: {e}"))),
                }
            }
        }
        Ok(r)
    })?;
    let mut total = MinCutReport { max_a, max_b, max_cut, ..MinCutReport::default() };
    for part in parts {
        let part = part?;
        total.triples += part.triples;
        total.cuts += part.cuts;
        total.unclassified += part.unclassified;
        total.unclassified_minimum += part.unclassified_minimum;
        total.witness_failures += part.witness_failures;
        for (k, v) in part.by_kind {
            *total.by_kind.entry(k).or_default() += v;
        }
        for e in part.examples {
            push_capped(&mut total.examples, e);
        }
        for e in part.minimum_examples {
            push_capped(&mut total.minimum_examples, e);
        }
    }
    Ok(total)
}

// ---- lexicographic products ----

fn named_small_factors() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::from_edges(n, e).expect("valid factor");
    vec![
        ("K2", g(2, &[(0, 1)])),
        ("K2bar", g(2, &[])),
        ("K3", g(3, &[(0, 1), (1, 2), (0, 2)])),
        ("P3", g(3, &[(0, 1), (1, 2)])),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct LexCase {
    pub a: String,
    pub b: &'static str,
    pub verdict_planar: Option<bool>,
    pub direct_planar: bool,
    pub verdict_polyhedral: Option<bool>,
    pub direct_polyhedral: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LexPolyhedron {
    pub a: String,
    pub b: &'static str,
    pub product: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LexReport {
    pub max_a: usize,
    pub pairs: usize,
    pub out_of_scope: usize,
    pub disagreements: Vec<LexCase>,
    pub polyhedral: Vec<LexPolyhedron>,
    pub distinct_polyhedra: usize,
    /// The polyhedral products are exactly K4 and the octahedron up to isomorphism.
    pub k4_and_octahedron: bool,
}

impl LexReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.k4_and_octahedron
    }
}

pub fn lex(max_a: usize, cfg: &SweepConfig) -> Result<LexReport, SweepError> {
    let a_list = connected_factors(max_a)?;
    let bs = named_small_factors();
    let work: Vec<(&Graph, usize)> = a_list.iter().flat_map(|a| (0..bs.len()).map(move |i| (a, i))).collect();
    let rows = cfg.run(&work, |&(a, i)| {
        let (name, b) = &bs[i];
        let product = lex_product(a, b);
        let verdict = classify_lex_planarity(a, b);
        let (vp, vh) = match verdict {
            LexVerdict::InScope { outcome, polyhedral } => {
                (Some(outcome != sierpinski_core::products::LexOutcome::Nonplanar), Some(polyhedral))
            }
            LexVerdict::OutOfScope { .. } => (None, None),
        };
        let case = LexCase {
            a: graph6::encode(a),
            b: name,
            verdict_planar: vp,
            direct_planar: is_planar(&product),
            verdict_polyhedral: vh,
            direct_polyhedral: is_polyhedron(&product),
        };
        (case, product)
    })?;
    let mut report = LexReport {
        max_a,
        pairs: rows.len(),
        out_of_scope: 0,
        disagreements: Vec::new(),
        polyhedral: Vec::new(),
        distinct_polyhedra: 0,
        k4_and_octahedron: false,
    };
    let mut codes = BTreeMap::new();
    for (case, product) in rows {
        if case.verdict_planar.is_none() {
            report.out_of_scope += 1;
        } else if case.verdict_planar != Some(case.direct_planar)
            || case.verdict_polyhedral != Some(case.direct_polyhedral)
        {
            report.disagreements.push(case.clone());
        }
        if case.direct_polyhedral {
            codes.insert(canonical_code(&product), product.n());
            report.polyhedral.push(LexPolyhedron {
                a: case.a,
                b: case.b,
                product: graph6::encode(&product),
                vertices: product.n(),
                edges: product.edge_count(),
            });
        }
    }
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4");
    let octahedron = lex_product(&bs[2].1, &bs[1].1);
    let expected: BTreeMap<u128, usize> =
        [(canonical_code(&k4), 4), (canonical_code(&octahedron), 6)].into_iter().collect();
    report.distinct_polyhedra = codes.len();
    report.k4_and_octahedron = codes == expected;
    Ok(report)
}

// ---- A ⊗ A ----

#[derive(Debug, Clone, Serialize)]
pub struct SelfProduct {
    pub a: String,
    pub vertices: usize,
    pub edges: usize,
    pub polyhedron: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct K4SelfCheck {
    pub vertices: usize,
    pub edges: usize,
    pub connectivity_flow: usize,
    pub connectivity_brute: usize,
    pub polyhedron: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AaReport {
    pub max_a: usize,
    pub graphs: usize,
    /// Every A whose identity self-product is 2-connected and planar.
    pub two_connected_planar: Vec<SelfProduct>,
    pub only_k4: bool,
    /// The same question with "polyhedron" in place of "2-connected and planar".
    pub polyhedral_only_k4: bool,
    pub k4: K4SelfCheck,
}

impl AaReport {
    pub fn passed(&self) -> bool {
        self.only_k4
            && self.k4.polyhedron
            && self.k4.vertices == 16
            && self.k4.edges == 30
            && self.k4.connectivity_flow == 3
            && self.k4.connectivity_brute == 3
    }
}

pub fn aa(max_a: usize, cfg: &SweepConfig) -> Result<AaReport, SweepError> {
    let a_list = connected_factors(max_a)?;
    let rows = cfg.run(&a_list, |a| -> Result<Option<SelfProduct>, String> {
        let f = VertexMap::identity(a.n(), a.n()).map_err(|e| e.to_string())?;
        let p = sierpinski(a, a, &f).map_err(|e| e.to_string())?;
        Ok((is_k_connected(&p, 2) && is_planar(&p)).then(|| SelfProduct {
            a: graph6::encode(a),
            vertices: p.n(),
            edges: p.edge_count(),
            polyhedron: is_polyhedron(&p),
        }))
    })?;
    let mut hits = Vec::new();
    for row in rows {
        if let Some(hit) = row.map_err(SweepError::Core)? {
            hits.push(hit);
        }
    }
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4");
    let k4_g6 = graph6::encode(&k4);
    let id = VertexMap::identity(4, 4).expect("identity");
    let p = sierpinski(&k4, &k4, &id).map_err(|e| SweepError::Core(e.to_string()))?;
    let k4check = K4SelfCheck {
        vertices: p.n(),
        edges: p.edge_count(),
        connectivity_flow: vertex_connectivity(&p).map_err(|e| SweepError::Core(e.to_string()))?,
        connectivity_brute: brute_connectivity(&p)?,
        polyhedron: is_polyhedron(&p),
    };
    let polyhedral: Vec<&str> = hits.iter().filter(|h| h.polyhedron).map(|h| h.a.as_str()).collect();
    Ok(AaReport {
        max_a,
        graphs: a_list.len(),
        only_k4: hits.len() == 1 && hits[0].a == k4_g6,
        polyhedral_only_k4: polyhedral == [k4_g6.as_str()],
        two_connected_planar: hits,
        k4: k4check,
    })
}

// ---- K4 ⊗_f B ----

#[derive(Debug, Clone, Serialize)]
pub struct K4bCase {
    pub b: String,
    pub f: Vec<usize>,
    pub check: bool,
    pub direct: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct K4bReport {
    pub max_b: usize,
    pub graphs: usize,
    pub injections: usize,
    pub polyhedral: usize,
    pub disagreements: usize,
    pub examples: Vec<K4bCase>,
}

impl K4bReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0
    }
}

/// Criterion for `K4 ⊗_f B` against direct polyhedrality, over 2-connected
/// `B` on 4 to `max_b` vertices other than `K4`, and every injection.
pub fn k4b(max_b: usize, cfg: &SweepConfig) -> Result<K4bReport, SweepError> {
    let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4");
    let mut b_list = Vec::new();
    for n in 4..=max_b {
        // K4 itself is outside the criterion's scope
        b_list.extend(
            enumerate_connected_graphs(n)?
                .into_iter()
                .filter(|b| is_k_connected(b, 2) && !(n == 4 && b.edge_count() == 6)),
        );
    }
    let work: Vec<(&Graph, VertexMap)> =
        b_list.iter().flat_map(|b| all_injections(4, b.n()).into_iter().map(move |f| (b, f))).collect();
    let rows = cfg.run(&work, |(b, f)| -> Result<K4bCase, String> {
        let check = check_k4b(b, f).map_err(|e| e.to_string())?.holds();
        let p = sierpinski(&k4, b, f).map_err(|e| e.to_string())?;
        Ok(K4bCase { b: graph6::encode(b), f: f.images().to_vec(), check, direct: is_polyhedron(&p) })
    })?;
    let mut report = K4bReport {
        max_b,
        graphs: b_list.len(),
        injections: rows.len(),
        polyhedral: 0,
        disagreements: 0,
        examples: Vec::new(),
    };
    for row in rows {
        let row = row.map_err(SweepError::Core)?;
        report.polyhedral += usize::from(row.direct);
        if row.check != row.direct {
            report.disagreements += 1;
            push_capped(&mut report.examples, row);
        }
    }
    Ok(report)
}

// ---- A ⊗_f K2 ----

#[derive(Debug, Clone, Serialize)]
pub struct RbCase {
    pub a: String,
    pub check: bool,
    pub direct: bool,
    /// The map built from the check's colouring gives a polyhedron.
    pub map_verified: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RbReport {
    pub graphs: usize,
    /// Corpus graphs that are not polyhedra.
    pub skipped: usize,
    pub with_assignment: usize,
    pub cases: Vec<RbCase>,
}

impl RbReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.check == c.direct && c.map_verified != Some(false))
    }
}

/// Red/blue criterion against a search over all maps into `K2`, for the
/// polyhedra of the corpus.
pub fn rb(corpus: &[Graph], cfg: &SweepConfig) -> Result<RbReport, SweepError> {
    let k2 = Graph::from_edges(2, &[(0, 1)]).expect("K2");
    let polyhedra: Vec<&Graph> = corpus.iter().filter(|g| is_polyhedron(g)).collect();
    let skipped = corpus.len() - polyhedra.len();
    let rows = cfg.run(&polyhedra, |a| -> Result<RbCase, String> {
        let a: &Graph = a;
        let assignment = check_rb(a);
        let map_verified = match &assignment {
            Some(rb) => Some(is_polyhedron(&sierpinski(a, &k2, &rb.map).map_err(|e| e.to_string())?)),
            None => None,
        };
        let mut direct = false;
        for f in all_maps(a.n(), 2) {
            if is_polyhedron(&sierpinski(a, &k2, &f).map_err(|e| e.to_string())?) {
                direct = true;
                break;
            }
        }
        Ok(RbCase { a: graph6::encode(a), check: assignment.is_some(), direct, map_verified })
    })?;
    let cases = rows.into_iter().collect::<Result<Vec<_>, _>>().map_err(SweepError::Core)?;
    Ok(RbReport { graphs: cases.len(), skipped, with_assignment: cases.iter().filter(|c| c.check).count(), cases })
}

// ---- planarity ----

#[derive(Debug, Clone, Serialize)]
pub struct PlanarityCase {
    pub g: String,
    pub fast: bool,
    pub brute: bool,
    pub certificate_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PlanarityReport {
    pub max_n: usize,
    pub graphs: usize,
    pub planar: usize,
    pub euler_failures: usize,
    /// 3-connected planar graphs and how many had more than one embedding.
    pub three_connected_planar: usize,
    pub multiple_embeddings: usize,
    pub disagreements: Vec<PlanarityCase>,
}

impl PlanarityReport {
    pub fn passed(&self) -> bool {
        self.disagreements.is_empty() && self.euler_failures == 0 && self.multiple_embeddings == 0
    }
}

/// `test_planarity` against the brute oracle on every graph up to `max_n`
/// vertices, with Euler's formula on the traced faces and embedding
/// uniqueness for 3-connected planar graphs.
pub fn planarity(max_n: usize, cfg: &SweepConfig) -> Result<PlanarityReport, SweepError> {
    let mut graphs = Vec::new();
    for n in 1..=max_n {
        graphs.extend(enumerate_graphs(n)?);
    }
    let rows = cfg.run(&graphs, |g| -> Result<(PlanarityCase, bool, Option<bool>), SweepError> {
        let verdict = test_planarity(g);
        let brute = brute_planarity(g)?;
        let fast = verdict.planar;
        let (certificate_ok, euler) = match (&verdict.embedding, &verdict.obstruction) {
            (Some(rot), _) => {
                let traced = g.is_connected() && g.edge_count() > 0;
                (rot.is_planar(), !traced || g.n() + rot.faces().len() == g.edge_count() + 2)
            }
            (None, Some(k)) => (k.verify(g), true),
            (None, None) => (false, true),
        };
        let unique = if fast && g.n() >= 4 && is_k_connected(g, 3) {
            let all =
                sierpinski_core::embedding::planar_embeddings(g, 2).map_err(|e| SweepError::Core(e.to_string()))?;
            Some(all.len() == 1)
        } else {
            None
        };
        Ok((PlanarityCase { g: graph6::encode(g), fast, brute, certificate_ok }, euler, unique))
    })?;
    let mut report = PlanarityReport {
        max_n,
        graphs: rows.len(),
        planar: 0,
        euler_failures: 0,
        three_connected_planar: 0,
        multiple_embeddings: 0,
        disagreements: Vec::new(),
    };
    for row in rows {
        let (case, euler, unique) = row?;
        report.planar += usize::from(case.brute);
        report.euler_failures += usize::from(!euler);
        if let Some(u) = unique {
            report.three_connected_planar += 1;
            report.multiple_embeddings += usize::from(!u);
        }
        if case.fast != case.brute || !case.certificate_ok {
            report.disagreements.push(case);
        }
    }
    Ok(report)
}

// ---- class scans and corpora ----

/// Emptiness scan of one signature over a corpus, one graph per work item.
pub fn scan(sig: &ClassSignature, corpus: &[Graph], cfg: &SweepConfig) -> Result<ScanReport, SweepError> {
    let opts = default_search();
    let rows = cfg.run(corpus, |g| emptiness_scan(sig, [g], &opts))?;
    let mut report = ScanReport { signature: sig.clone(), scanned: 0, members: Vec::new(), refusals: Vec::new() };
    for (i, mut row) in rows.into_iter().enumerate() {
        report.scanned += row.scanned;
        for m in &mut row.members {
            m.index = i;
        }
        for r in &mut row.refusals {
            r.index = i;
        }
        report.members.extend(row.members);
        report.refusals.extend(row.refusals);
    }
    Ok(report)
}

/// Connected `d`-regular planar graphs on `n` vertices, canonically labelled
/// and sorted by canonical code.
pub fn regular_planar_corpus(n: usize, d: usize) -> Vec<Graph> {
    enumerate_regular_planar(n, d, &is_planar)
}

/// The colouring used by [`a211_structured_search`]: red 0..8, blue 8..12,
/// green 12..16.
pub fn a211_colouring() -> Colouring {
    let mut c = vec![1u8; 16];
    c[8..12].fill(2);
    c[12..16].fill(3);
    Colouring::new(c).expect("colours in range")
}

fn balanced_maps(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, m: usize, cap: usize, cur: &mut Vec<usize>, cnt: &mut [usize], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for t in 0..m {
            if cnt[t] < cap {
                cnt[t] += 1;
                cur.push(t);
                rec(n, m, cap, cur, cnt, out);
                cur.pop();
                cnt[t] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, m, n / m, &mut Vec::new(), &mut vec![0; m], &mut out);
    out
}

/// 16-vertex members of A(2,1,1) under [`a211_colouring`], one per
/// isomorphism class, found by a structured search: the red vertices form
/// cycles, blue and green together form cycles, and every red vertex has one
/// blue and one green neighbour with each blue and green vertex receiving two.
/// Colour classes of 8, 4 and 4 vertices are forced by the neighbour counts.
pub fn a211_structured_search(cfg: &SweepConfig) -> Result<Vec<Graph>, SweepError> {
    let red_cycles: Vec<Vec<Vec<usize>>> = vec![
        vec![(0..8).collect()],
        vec![(0..5).collect(), (5..8).collect()],
        vec![(0..4).collect(), (4..8).collect()],
    ];
    let bg_cycles: Vec<Vec<Vec<usize>>> =
        vec![vec![vec![8, 9, 12, 13, 10, 11, 14, 15]], vec![vec![8, 9, 12, 13], vec![10, 11, 14, 15]]];
    let colouring = a211_colouring();
    let maps = balanced_maps(8, 4);
    let mut bases = Vec::new();
    for rc in &red_cycles {
        for bc in &bg_cycles {
            let mut base = Vec::new();
            for c in rc.iter().chain(bc) {
                for i in 0..c.len() {
                    base.push((c[i], c[(i + 1) % c.len()]));
                }
            }
            for mb in &maps {
                bases.push((base.clone(), mb));
            }
        }
    }
    let rows = cfg.run(&bases, |(base, mb)| {
        let mut found = Vec::new();
        let mut e1 = base.clone();
        e1.extend((0..8).map(|r| (r, 8 + mb[r])));
        let g1 = Graph::from_edges(16, &e1).expect("valid edges");
        if consecutive_embedding(&g1, &colouring).is_none() {
            return found;
        }
        for mg in &maps {
            let mut e2 = e1.clone();
            e2.extend((0..8).map(|r| (r, 12 + mg[r])));
            let g = Graph::from_edges(16, &e2).expect("valid edges");
            if g.regular_degree() == Some(4) && g.is_connected() && consecutive_embedding(&g, &colouring).is_some() {
                found.push((canonical_code(&g), g));
            }
        }
        found
    })?;
    let mut unique: BTreeMap<u128, Graph> = BTreeMap::new();
    for (code, g) in rows.into_iter().flatten() {
        unique.entry(code).or_insert(g);
    }
    Ok(unique.into_values().collect())
}
