//! Acceptance suite. Prints one PASS/FAIL line per criterion; the process
//! exits non-zero only when an outcome differs from the expected one.
//!
//! Two criteria are expected to fail because the claims they test are false
//! as stated. For those the suite also re-derives the documented
//! counterexample, so a change in either direction is reported.

use std::time::Instant;

use sierp::corpus::{self, A211_FILE};
use sierp::io::graph6;
use sierp::sweeps::{self, SweepConfig};
use sierpinski_core::classes::{
    check_b_star, colour_preserving_map, find_a_membership, find_b_membership, find_b_star_membership, ClassSignature,
    SearchOptions,
};
use sierpinski_core::classification::scenario_of;
use sierpinski_core::connectivity::{
    articulation_points, classify_minimal_cut, is_k_connected, vertex_connectivity, ConnectivityError,
};
use sierpinski_core::embedding::{is_polyhedron, planar_rotation, PlaneGraph};
use sierpinski_core::generators::{
    b5_111_family, delete_two_adjacent_edges, delete_vertex_from_cubic, expand_all, generate, truncate, AMember,
    FamilySpec, Solid,
};
use sierpinski_core::oracles::{enumerate_connected_graphs, is_isomorphic};
use sierpinski_core::products::sierpinski;
use sierpinski_core::{Graph, VertexMap};

// Pinned tolerances. Every count below must be met exactly.
const SEP_MAX: usize = 4;
const SEP_SECONDS: f64 = 600.0;
const KC_MAX: usize = 4;
const MINCUT_MAX_CUT: usize = 3;
const LEX_MAX_A: usize = 6;
const AA_MAX_A: usize = 6;
const SCAN_SECONDS: f64 = 1800.0;
const K4B_MAX_B: usize = 7;
const PLANARITY_MAX_N: usize = 8;
const B5_DEGREES: [(usize, usize); 2] = [(5, 16), (4, 3)];

/// Criteria whose claim is false as stated; the suite expects FAIL.
const EXPECTED_FAIL: [u8; 2] = [3, 5];

struct Outcome {
    passed: bool,
    detail: String,
    /// For expected failures: the documented counterexample reproduces.
    counterexample: bool,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into(), counterexample: false }
}

fn sig(parts: &[usize]) -> ClassSignature {
    ClassSignature::new(parts.to_vec()).unwrap()
}

fn fam(spec: FamilySpec) -> Graph {
    generate(spec).unwrap()
}

fn complete(n: usize) -> Graph {
    fam(FamilySpec::Complete(n))
}

fn pool() -> SweepConfig {
    SweepConfig::default()
}

fn c1() -> Outcome {
    let start = Instant::now();
    let r = sweeps::thm_sep(SEP_MAX, SEP_MAX, &SweepConfig::single()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    outcome(
        r.passed() && secs <= SEP_SECONDS && r.triples > 0,
        format!(
            "{} triples, {} vertex checks, {} disagreements, {} witness failures, {secs:.1}s single worker (limit {SEP_SECONDS}s)",
            r.triples, r.vertex_checks, r.disagreements, r.witness_failures
        ),
    )
}

fn c2() -> Outcome {
    let r = sweeps::thm_kc(KC_MAX, KC_MAX, &pool()).unwrap();
    let levels: Vec<String> = r
        .levels
        .iter()
        .map(|l| format!("k={}: {} held, {} violations", l.k, l.hypotheses_held, l.violations))
        .collect();
    let exercised = r.levels.iter().all(|l| l.hypotheses_held > 0);
    outcome(r.passed() && exercised, levels.join("; "))
}

/// Minimum cut of the identity product of `K3` with itself that fits none of
/// the three alternatives.
fn sierpinski_triangle_cut_unclassified() -> bool {
    let k3 = complete(3);
    let id = VertexMap::identity(3, 3).unwrap();
    let p = sierpinski(&k3, &k3, &id).unwrap();
    let cut = [1, 5];
    vertex_connectivity(&p).unwrap() == 2
        && matches!(classify_minimal_cut(&k3, &k3, &id, &cut), Err(ConnectivityError::Unclassified(_)))
}

fn c3() -> Outcome {
    let r = sweeps::prop_kc(KC_MAX, KC_MAX, MINCUT_MAX_CUT, &pool()).unwrap();
    let witness = sierpinski_triangle_cut_unclassified();
    let mut o = outcome(
        r.passed(),
        format!(
            "{} minimal cuts, {} unclassified ({} of minimum size), {} witness failures; K3 x K3 cut {{(0,1),(1,2)}} unclassified: {witness}",
            r.cuts, r.unclassified, r.unclassified_minimum, r.witness_failures
        ),
    );
    o.counterexample = witness && r.unclassified_minimum > 0 && r.witness_failures == 0;
    o
}

fn c4() -> Outcome {
    let r = sweeps::lex(LEX_MAX_A, &pool()).unwrap();
    outcome(
        r.passed(),
        format!(
            "{} pairs, {} disagreements, {} polyhedral products, exactly K4 and octahedron: {}",
            r.pairs,
            r.disagreements.len(),
            r.distinct_polyhedra,
            r.k4_and_octahedron
        ),
    )
}

fn c5() -> Outcome {
    let r = sweeps::aa(AA_MAX_A, &pool()).unwrap();
    let k3_hit = r.two_connected_planar.iter().any(|h| h.a == graph6::encode(&complete(3)));
    let k = &r.k4;
    let k4_ok =
        k.polyhedron && k.vertices == 16 && k.edges == 30 && k.connectivity_flow == 3 && k.connectivity_brute == 3;
    let mut o = outcome(
        r.passed(),
        format!(
            "{} graphs, {} with 2-connected planar self-product, only K4: {}, only K4 among polyhedra: {}, K3 among them: {k3_hit}; K4 x K4: {} vertices, {} edges, kappa {} (flow) {} (brute), polyhedron {}",
            r.graphs,
            r.two_connected_planar.len(),
            r.only_k4,
            r.polyhedral_only_k4,
            k.vertices,
            k.edges,
            k.connectivity_flow,
            k.connectivity_brute,
            k.polyhedron
        ),
    );
    o.counterexample = k3_hit && r.polyhedral_only_k4 && k4_ok;
    o
}

struct Case {
    name: String,
    a: Graph,
    b: Graph,
    f: VertexMap,
    scenario: u8,
    r: usize,
}

fn regular_polyhedron(p: &Graph, r: usize) -> bool {
    p.regular_degree() == Some(r) && is_polyhedron(p)
}

/// Two neighbours of `v` that are consecutive around it.
fn cofacial_pair(g: &Graph, v: usize) -> (usize, usize) {
    let rot = planar_rotation(g).unwrap();
    (rot.at(v)[0], rot.at(v)[1])
}

/// A graph in `B_3(1,1,1)` that fails the starred cut condition.
fn cut_condition_failure() -> Option<Graph> {
    let s = sig(&[1, 1, 1]);
    (4..=7)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .find(|g| find_b_membership(g, 3, &s).unwrap().is_some() && !check_b_star(g, 3))
}

fn scenario_cases() -> Vec<Case> {
    let opts = SearchOptions::default();
    let oct = fam(FamilySpec::Platonic(Solid::Octahedron));
    let ico = fam(FamilySpec::Platonic(Solid::Icosahedron));
    let prism = fam(FamilySpec::Prism(3));
    let k2 = complete(2);
    let mut cases = Vec::new();

    let a22 = find_a_membership(&oct, &sig(&[2, 2]), &opts).unwrap().unwrap();
    let f = VertexMap::new(a22.colouring.colours().iter().map(|&c| c as usize - 1).collect(), 2).unwrap();
    cases.push(Case { name: "octahedron, K2".into(), a: oct.clone(), b: k2, f, scenario: 1, r: 3 });

    let a111 = find_a_membership(&prism, &sig(&[1, 1, 1]), &opts).unwrap().unwrap();
    let k3 = find_b_star_membership(&complete(3), 3, &sig(&[1, 1, 1])).unwrap().unwrap();
    let f = colour_preserving_map(&a111, &k3).unwrap();
    cases.push(Case { name: "prism, K3".into(), a: prism.clone(), b: complete(3), f, scenario: 2, r: 3 });

    let b5 = b5_111_family(0).unwrap();
    let f = colour_preserving_map(&a111, &b5.certificate).unwrap();
    cases.push(Case { name: "prism, degree-5 family h=0".into(), a: prism, b: b5.graph, f, scenario: 5, r: 5 });

    let members = corpus::bundled(A211_FILE).unwrap();
    for (i, g) in members.into_iter().enumerate() {
        let a = AMember::from_colouring(g, sig(&[2, 1, 1]), sweeps::a211_colouring()).unwrap();
        for (scenario, r, p) in [(3, 3, complete(4)), (4, 4, oct.clone()), (6, 5, ico.clone())] {
            let (u, w) = cofacial_pair(&p, 0);
            let b = delete_two_adjacent_edges(&p, 0, u, w).unwrap();
            let f = colour_preserving_map(&a.certificate, &b.certificate).unwrap();
            cases.push(Case {
                name: format!("A(2,1,1) member {i}, r={r} surgery"),
                a: a.graph.clone(),
                b: b.graph,
                f,
                scenario,
                r,
            });
        }
    }
    cases
}

fn c6() -> Outcome {
    let cases = scenario_cases();
    let mut failures = Vec::new();
    let mut seen = [false; 6];
    for c in &cases {
        let verdict = scenario_of(&c.a, &c.b, &c.f).unwrap();
        let p = sierpinski(&c.a, &c.b, &c.f).unwrap();
        if verdict.scenario != Some(c.scenario) || !regular_polyhedron(&p, c.r) {
            failures.push(format!("{}: scenario {:?}", c.name, verdict.scenario));
        }
        seen[c.scenario as usize - 1] = true;
    }

    // Products the generators predict.
    let oct = fam(FamilySpec::Platonic(Solid::Octahedron));
    let a22 = find_a_membership(&oct, &sig(&[2, 2]), &SearchOptions::default()).unwrap().unwrap();
    let s1 = sierpinski(&cases[0].a, &cases[0].b, &cases[0].f).unwrap();
    let expanded = expand_all(&oct, &a22).unwrap();
    let s1_iso = s1.n() == 12 && is_isomorphic(&s1, expanded.graph()).unwrap().is_some();
    let s2 = sierpinski(&cases[1].a, &cases[1].b, &cases[1].f).unwrap();
    let truncated = truncate(&PlaneGraph::embed(fam(FamilySpec::Prism(3))).unwrap()).unwrap();
    let s2_iso = s2.n() == 18 && s2.edge_count() == 27 && is_isomorphic(&s2, truncated.graph()).unwrap().is_some();
    if !s1_iso {
        failures.push("octahedron product is not the expansion".into());
    }
    if !s2_iso {
        failures.push("prism product is not the truncation".into());
    }

    // Broken instances: a map that moves one vertex off its colour, and a
    // second factor that fails the cut condition.
    let mut broken = 0;
    for c in &cases {
        let mut image = c.f.images().to_vec();
        image[0] = (image[0] + 1) % c.b.n();
        let f = VertexMap::new(image, c.b.n()).unwrap();
        let verdict = scenario_of(&c.a, &c.b, &f).unwrap();
        let p = sierpinski(&c.a, &c.b, &f).unwrap();
        broken += 1;
        if verdict.scenario.is_some() || regular_polyhedron(&p, c.r) {
            failures.push(format!("{}: recoloured map still accepted", c.name));
        }
    }
    let bad_b = cut_condition_failure();
    match &bad_b {
        Some(b) => {
            let a = &cases[1].a;
            let a111 = find_a_membership(a, &sig(&[1, 1, 1]), &SearchOptions::default()).unwrap().unwrap();
            let cert = find_b_membership(b, 3, &sig(&[1, 1, 1])).unwrap().unwrap();
            let f = colour_preserving_map(&a111, &cert).unwrap();
            let verdict = scenario_of(a, b, &f).unwrap();
            let p = sierpinski(a, b, &f).unwrap();
            broken += 1;
            if verdict.scenario.is_some() || regular_polyhedron(&p, 3) {
                failures.push(format!("cut-condition failure {} still accepted", graph6::encode(b)));
            }
        }
        None => failures.push("no B_3(1,1,1) graph on at most 7 vertices fails the cut condition".into()),
    }

    let all_seen = seen.iter().all(|&s| s);
    outcome(
        failures.is_empty() && all_seen,
        format!(
            "{} instances over scenarios 1-6 (all covered: {all_seen}), expansion {s1_iso}, truncation {s2_iso}, {broken} broken instances rejected{}{}",
            cases.len(),
            bad_b.map(|b| format!(" (cut-condition failure {})", graph6::encode(&b))).unwrap_or_default(),
            if failures.is_empty() { String::new() } else { format!("; failures: {failures:?}") }
        ),
    )
}

fn c7() -> Outcome {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    let files = [(6, 4), (8, 4), (9, 4), (10, 4), (10, 5), (12, 5)];
    let mut regenerated = true;
    for (n, d) in files {
        let bundled = corpus::bundled(&corpus::regular_planar_name(n, d)).unwrap();
        let fresh = sweeps::regular_planar_corpus(n, d);
        regenerated &= bundled == fresh;
        parts.push(format!("{d}-regular n={n}: {}", bundled.len()));
    }
    ok &= regenerated;
    let ico = fam(FamilySpec::Platonic(Solid::Icosahedron));
    let twelve = corpus::bundled(&corpus::regular_planar_name(12, 5)).unwrap();
    let has_ico = twelve.len() == 1 && is_isomorphic(&twelve[0], &ico).unwrap().is_some();
    ok &= has_ico;

    let quartic: Vec<Graph> =
        [6, 8, 9, 10].iter().flat_map(|&n| corpus::bundled(&corpus::regular_planar_name(n, 4)).unwrap()).collect();
    let quintic: Vec<Graph> =
        [10, 12].iter().flat_map(|&n| corpus::bundled(&corpus::regular_planar_name(n, 5)).unwrap()).collect();
    let scans = [(&[3, 2][..], &quintic), (&[1, 1, 1, 1][..], &quartic), (&[2, 1, 1, 1][..], &quintic)];
    for (p, corpus) in scans {
        let r = sweeps::scan(&sig(p), corpus, &pool()).unwrap();
        ok &= r.members.is_empty() && r.refusals.is_empty() && r.scanned == corpus.len();
        parts.push(format!("{p:?}: {} scanned, {} members, {} refusals", r.scanned, r.members.len(), r.refusals.len()));
    }

    // Without the count precheck the (3,2) search on the icosahedron must
    // still come back empty.
    let opts = SearchOptions { count_precheck: false, ..SearchOptions::default() };
    let ablation = find_a_membership(&ico, &sig(&[3, 2]), &opts).unwrap().is_none();
    ok &= ablation;
    let secs = start.elapsed().as_secs_f64();
    ok &= secs <= SCAN_SECONDS;
    outcome(
        ok,
        format!(
            "corpora regenerate identically: {regenerated}, icosahedron unique: {has_ico}; {}; (3,2) on icosahedron without count precheck empty: {ablation}; {secs:.1}s (limit {SCAN_SECONDS}s)",
            parts.join("; ")
        ),
    )
}

fn c8() -> Outcome {
    let mut failures = Vec::new();
    let cubic = [
        FamilySpec::Platonic(Solid::Tetrahedron),
        FamilySpec::Prism(3),
        FamilySpec::Platonic(Solid::Cube),
        FamilySpec::Prism(5),
        FamilySpec::Platonic(Solid::Dodecahedron),
    ];
    let mut vertex_deleted = 0;
    for spec in cubic {
        let p = fam(spec);
        for v in 0..p.n() {
            let b = delete_vertex_from_cubic(&p, v).unwrap();
            vertex_deleted += 1;
            let starred = find_b_star_membership(&b.graph, 3, &sig(&[1, 1, 1])).unwrap().is_some();
            if !starred || !is_k_connected(&b.graph, 2) {
                failures.push(format!("{spec:?} minus {v}"));
            }
        }
    }

    let mut edge_deleted = 0;
    let mut separating = 0;
    let regular = [
        FamilySpec::Platonic(Solid::Tetrahedron),
        FamilySpec::Platonic(Solid::Cube),
        FamilySpec::Prism(5),
        FamilySpec::Platonic(Solid::Octahedron),
        FamilySpec::Antiprism(4),
        FamilySpec::Platonic(Solid::Icosahedron),
    ];
    for spec in regular {
        let p = fam(spec);
        let r = p.regular_degree().unwrap();
        let rot = planar_rotation(&p).unwrap();
        for v in 0..p.n() {
            let around = rot.at(v);
            for i in 0..around.len() {
                let (u, w) = (around[i], around[(i + 1) % around.len()]);
                let b = delete_two_adjacent_edges(&p, v, u, w).unwrap();
                edge_deleted += 1;
                if find_b_star_membership(&b.graph, r, &sig(&[2, 1, 1])).unwrap().is_none() {
                    failures.push(format!("{spec:?} minus {v}{u}, {v}{w}: not starred"));
                }
                let red = v;
                for x in articulation_points(&b.graph) {
                    separating += 1;
                    let comps = b.graph.components_avoiding(&[x]);
                    let holder = |y: usize| comps.iter().position(|c| c.contains(&y));
                    let (h1, h2, h3) =
                        (holder(red), holder(b.certificate.coloured(2)), holder(b.certificate.coloured(3)));
                    if comps.len() != 2 || h1.is_none() || h1 == h2 || h2 != h3 {
                        failures.push(format!("{spec:?} minus {v}{u}, {v}{w}: cut vertex {x}"));
                    }
                }
            }
        }
    }

    let b5 = b5_111_family(0).unwrap();
    let mut degrees = std::collections::BTreeMap::new();
    for v in 0..b5.graph.n() {
        *degrees.entry(b5.graph.degree(v)).or_insert(0) += 1;
    }
    let b5_ok = b5.graph.n() == 19 && degrees == B5_DEGREES.into_iter().collect();
    if !b5_ok {
        failures.push(format!("degree-5 family h=0: {} vertices, degrees {degrees:?}", b5.graph.n()));
    }
    outcome(
        failures.is_empty() && separating > 0,
        format!(
            "{vertex_deleted} vertex deletions, {edge_deleted} edge-pair deletions ({separating} separating vertices checked), h=0 member: {} vertices{}",
            b5.graph.n(),
            if failures.is_empty() { String::new() } else { format!("; failures: {failures:?}") }
        ),
    )
}

fn c9() -> Outcome {
    let k = sweeps::k4b(K4B_MAX_B, &pool()).unwrap();
    let quartic: Vec<Graph> =
        [6, 8, 9, 10].iter().flat_map(|&n| corpus::bundled(&corpus::regular_planar_name(n, 4)).unwrap()).collect();
    let r = sweeps::rb(&quartic, &pool()).unwrap();
    outcome(
        k.passed() && r.passed() && r.graphs > 0,
        format!(
            "K4 x B: {} graphs, {} injections, {} polyhedral, {} disagreements; red/blue: {} polyhedra, {} with assignment, all agree: {}",
            k.graphs,
            k.injections,
            k.polyhedral,
            k.disagreements,
            r.graphs,
            r.with_assignment,
            r.passed()
        ),
    )
}

fn c10() -> Outcome {
    let r = sweeps::planarity(PLANARITY_MAX_N, &pool()).unwrap();
    outcome(
        r.passed(),
        format!(
            "{} graphs, {} planar, {} disagreements, {} Euler failures, {} 3-connected planar with {} multiple embeddings",
            r.graphs,
            r.planar,
            r.disagreements.len(),
            r.euler_failures,
            r.three_connected_planar,
            r.multiple_embeddings
        ),
    )
}

fn main() {
    // `cargo test -- --list` and similar probes pass flags; honour a name filter only.
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let criteria: [(u8, &str, fn() -> Outcome); 10] = [
        (1, "separating vertices", c1),
        (2, "k-connectivity of products", c2),
        (3, "minimal cut classification", c3),
        (4, "lexicographic products", c4),
        (5, "self-products", c5),
        (6, "scenario instances", c6),
        (7, "emptiness scans", c7),
        (8, "appendix generators", c8),
        (9, "K4 x B and red/blue", c9),
        (10, "planarity layer", c10),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let label = format!("criterion_{id:02}");
        if filter.as_deref().is_some_and(|f| !label.contains(f) && !name.contains(f)) {
            continue;
        }
        let start = Instant::now();
        let o = run();
        let expected_pass = !EXPECTED_FAIL.contains(&id);
        let mark = if o.passed { "PASS" } else { "FAIL" };
        let as_expected = if expected_pass { o.passed } else { !o.passed && o.counterexample };
        let note = if as_expected { "" } else { " (UNEXPECTED)" };
        println!("{label} {mark}{note} [{name}] {} ({:.1}s)", o.detail, start.elapsed().as_secs_f64());
        unexpected += usize::from(!as_expected);
    }
    if unexpected > 0 {
        println!("{unexpected} unexpected outcome(s)");
        std::process::exit(1);
    }
}
