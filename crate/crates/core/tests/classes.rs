mod common;

use common::*;
use sierpinski_core::classes::{
    all_a_colourings, colour_counts_hold, colour_preserving_map, consecutive_embedding, emptiness_scan,
    find_a_membership, find_b_membership, is_consecutive, recolour, verify_a_certificate, AClassCertificate,
    ClassSignature, Colouring, SearchOptions,
};
use sierpinski_core::connectivity::{articulation_points, is_k_connected, vertex_connectivity};
use sierpinski_core::embedding::is_planar;
use sierpinski_core::generators::{delete_two_adjacent_edges, delete_vertex_from_cubic, generate, FamilySpec, Solid};
use sierpinski_core::oracles::enumerate_regular_planar;
use sierpinski_core::products::sierpinski;
use sierpinski_core::Graph;

fn sig(p: &[usize]) -> ClassSignature {
    ClassSignature::new(p.to_vec()).unwrap()
}

fn signatures_for(d: usize) -> Vec<ClassSignature> {
    match d {
        3 => vec![sig(&[1, 1, 1]), sig(&[2, 1])],
        4 => vec![sig(&[2, 1, 1]), sig(&[2, 2]), sig(&[3, 1]), sig(&[1, 1, 1, 1])],
        _ => unreachable!(),
    }
}

/// Connected planar graphs of degree 3 (n <= 10) and 4 (n <= 10).
fn small_regular_corpus() -> Vec<(usize, Graph)> {
    let mut out = Vec::new();
    for n in (4..=10).step_by(2) {
        out.extend(enumerate_regular_planar(n, 3, &is_planar).into_iter().map(|g| (3, g)));
    }
    for n in 6..=10 {
        out.extend(enumerate_regular_planar(n, 4, &is_planar).into_iter().map(|g| (4, g)));
    }
    out
}

fn induced_components(g: &Graph, keep: impl Fn(usize) -> bool) -> (Graph, Vec<usize>, Vec<Vec<usize>>) {
    let set: Vec<usize> = (0..g.n()).filter(|&v| keep(v)).collect();
    let (h, back) = g.induced(&set);
    let comps = h.components();
    (h, back, comps)
}

/// Walks a 2-regular connected graph as a cycle.
fn cycle_order(h: &Graph, comp: &[usize]) -> Vec<usize> {
    let mut order = vec![comp[0]];
    let mut prev = usize::MAX;
    let mut cur = comp[0];
    loop {
        let next = *h.neighbours(cur).iter().find(|&&x| x != prev).unwrap();
        if next == comp[0] {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Every component of the subgraph on colours `ci`, `cj` is a cycle whose
/// colours run in blocks of exactly two.
fn two_colour_cycles_ok(g: &Graph, col: &Colouring, ci: u8, cj: u8) -> bool {
    let (h, back, comps) = induced_components(g, |v| col.colour(v) == ci || col.colour(v) == cj);
    comps.iter().all(|comp| {
        if comp.iter().any(|&v| h.degree(v) != 2) {
            return false;
        }
        let order = cycle_order(&h, comp);
        let s: Vec<u8> = order.iter().map(|&v| col.colour(back[v])).collect();
        let len = s.len();
        len.is_multiple_of(4) && (0..len).all(|t| (s[t] == s[(t + 1) % len]) != (s[(t + 1) % len] == s[(t + 2) % len]))
    })
}

fn colour_class_regular(g: &Graph, col: &Colouring, c: u8, d: usize) -> bool {
    let (h, _, _) = induced_components(g, |v| col.colour(v) == c);
    (0..h.n()).all(|v| h.degree(v) == d)
}

#[test]
fn literal_colouring_without_consecutive_embedding() {
    let (g, col) = literal_counterexample();
    let s = sig(&[2, 1, 1]);
    assert_eq!(g.regular_degree(), Some(4));
    assert!(is_planar(&g));
    assert_eq!(vertex_connectivity(&g).unwrap(), 4);
    assert!(colour_counts_hold(&g, &s, &col));
    assert!(consecutive_embedding(&g, &col).is_none());

    let colourings = all_a_colourings(&g, &s, &SearchOptions::default()).unwrap();
    assert!(colourings.contains(&col));
    assert!(colourings.iter().all(|c| consecutive_embedding(&g, c).is_none()));
    assert!(find_a_membership(&g, &s, &SearchOptions::default()).unwrap().is_none());

    // the matching product is cubic and connected but not planar
    let k4 = generate(FamilySpec::Platonic(Solid::Tetrahedron)).unwrap();
    let b = delete_two_adjacent_edges(&k4, 0, 1, 2).unwrap();
    let cert = AClassCertificate {
        signature: s,
        colouring: col,
        rotation: sierpinski_core::embedding::planar_rotation(&g).unwrap(),
    };
    let f = colour_preserving_map(&cert, &b.certificate).unwrap();
    let p = sierpinski(&g, &b.graph, &f).unwrap();
    assert_eq!(p.n(), 64);
    assert_eq!(p.regular_degree(), Some(3));
    assert!(p.is_connected());
    assert!(!is_planar(&p));
}

#[test]
fn unrestricted_colourings_of_small_members_are_consecutive() {
    let opts = SearchOptions::default();
    let mut members = 0;
    for (d, g) in small_regular_corpus() {
        for s in signatures_for(d) {
            let all = all_a_colourings(&g, &s, &opts).unwrap();
            for c in &all {
                let rot = consecutive_embedding(&g, c);
                assert!(rot.is_some(), "{:?} {:?} {:?}", g.edges(), s, c);
                assert!(is_consecutive(&rot.unwrap(), c));
            }
            members += usize::from(!all.is_empty());
            let pruned = find_a_membership(&g, &s, &opts).unwrap();
            assert_eq!(pruned.is_some(), !all.is_empty());
        }
    }
    assert!(members > 0);
}

#[test]
fn colour_class_structure_of_small_members() {
    let opts = SearchOptions::default();
    for (d, g) in small_regular_corpus() {
        for s in signatures_for(d) {
            let Some(cert) = find_a_membership(&g, &s, &opts).unwrap() else { continue };
            assert!(verify_a_certificate(&g, &cert).unwrap());
            let col = &cert.colouring;
            match s.parts() {
                [1, 1, 1] => {
                    assert!(is_k_connected(&g, 2));
                    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
                        assert!(two_colour_cycles_ok(&g, col, i, j));
                    }
                }
                [2, 1, 1] => {
                    assert!(colour_class_regular(&g, col, 1, 2));
                    assert!(two_colour_cycles_ok(&g, col, 2, 3));
                }
                [2, 2] => {
                    assert!(colour_class_regular(&g, col, 1, 2));
                    assert!(colour_class_regular(&g, col, 2, 2));
                }
                [n1, 1] => assert!(colour_class_regular(&g, col, 1, *n1)),
                _ => {}
            }
        }
    }
}

#[test]
fn recolouring_gives_coarser_members() {
    let opts = SearchOptions::default();
    let mut checked = 0;
    for (d, g) in small_regular_corpus() {
        for s in signatures_for(d) {
            let Some(cert) = find_a_membership(&g, &s, &opts).unwrap() else { continue };
            let k = s.k() as u8;
            for from in 1..=k {
                for to in 1..=k {
                    if from == to {
                        continue;
                    }
                    let coarse = recolour(&cert, from, to).unwrap();
                    assert_eq!(coarse.signature.degree(), s.degree());
                    assert!(verify_a_certificate(&g, &coarse).unwrap());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn sixteen_vertex_211_member() {
    let (g, col) = a211_member16();
    let s = sig(&[2, 1, 1]);
    assert!(colour_counts_hold(&g, &s, &col));
    let rot = consecutive_embedding(&g, &col).unwrap();
    let cert = AClassCertificate { signature: s.clone(), colouring: col, rotation: rot };
    assert!(verify_a_certificate(&g, &cert).unwrap());
    assert!(sierpinski_core::classes::check_a_hash(&g, &cert).unwrap());
    assert!(find_a_membership(&g, &s, &SearchOptions::default()).unwrap().is_some());
}

#[test]
fn octahedron_scan() {
    let oct = generate(FamilySpec::Platonic(Solid::Octahedron)).unwrap();
    let report = emptiness_scan(&sig(&[2, 2]), [&oct], &SearchOptions::default());
    assert_eq!(report.members.len(), 1);
    let report = emptiness_scan(&sig(&[1, 1, 1, 1]), [&oct], &SearchOptions::default());
    assert!(report.members.is_empty() && report.refusals.is_empty());
}

#[test]
fn prism_maps_onto_triangle() {
    let prism = generate(FamilySpec::Prism(3)).unwrap();
    let a = find_a_membership(&prism, &sig(&[1, 1, 1]), &SearchOptions::default()).unwrap().unwrap();
    let k3 = complete(3);
    let b = find_b_membership(&k3, 3, &sig(&[1, 1, 1])).unwrap().unwrap();
    let f = colour_preserving_map(&a, &b).unwrap();
    let p = sierpinski(&prism, &k3, &f).unwrap();
    assert_eq!(p.regular_degree(), Some(3));
    assert!(sierpinski_core::embedding::is_polyhedron(&p));
    let wrong = find_a_membership(
        &generate(FamilySpec::Platonic(Solid::Octahedron)).unwrap(),
        &sig(&[2, 2]),
        &SearchOptions::default(),
    )
    .unwrap()
    .unwrap();
    assert!(colour_preserving_map(&wrong, &b).is_err());
}

/// Polyhedra used for the deletion checks.
fn cubic_polyhedra() -> Vec<Graph> {
    vec![
        generate(FamilySpec::Platonic(Solid::Tetrahedron)).unwrap(),
        generate(FamilySpec::Prism(3)).unwrap(),
        generate(FamilySpec::Platonic(Solid::Cube)).unwrap(),
        generate(FamilySpec::Prism(5)).unwrap(),
        generate(FamilySpec::Platonic(Solid::Dodecahedron)).unwrap(),
    ]
}

#[test]
fn vertex_deleted_cubic_members_are_two_connected() {
    for p in cubic_polyhedra() {
        for v in 0..p.n() {
            let b = delete_vertex_from_cubic(&p, v).unwrap();
            assert!(is_k_connected(&b.graph, 2));
            // re-adding an apex on the three degree-2 vertices restores a cubic polyhedron
            let mut e = b.graph.edges();
            e.extend(b.certificate.coloured_vertices.iter().map(|&x| (x, b.graph.n())));
            let back = Graph::from_edges(b.graph.n() + 1, &e).unwrap();
            assert_eq!(back.regular_degree(), Some(3));
            assert!(sierpinski_core::embedding::is_polyhedron(&back));
        }
    }
}

#[test]
fn separating_vertices_of_edge_deleted_members() {
    let mut polys: Vec<Graph> = cubic_polyhedra();
    polys.push(generate(FamilySpec::Platonic(Solid::Octahedron)).unwrap());
    polys.push(generate(FamilySpec::Antiprism(4)).unwrap());
    polys.push(generate(FamilySpec::Platonic(Solid::Icosahedron)).unwrap());
    let mut with_cut = 0;
    for p in polys {
        let rot = sierpinski_core::embedding::planar_rotation(&p).unwrap();
        for v in 0..p.n() {
            let around = rot.at(v);
            for i in 0..around.len() {
                let (u, w) = (around[i], around[(i + 1) % around.len()]);
                let b = delete_two_adjacent_edges(&p, v, u, w).unwrap();
                let red = b.certificate.coloured(1);
                assert_eq!(red, v);
                for x in articulation_points(&b.graph) {
                    with_cut += 1;
                    let comps = b.graph.components_avoiding(&[x]);
                    assert_eq!(comps.len(), 2);
                    let holder = |y: usize| comps.iter().position(|c| c.contains(&y));
                    let (h1, h2, h3) =
                        (holder(red), holder(b.certificate.coloured(2)), holder(b.certificate.coloured(3)));
                    assert!(h1.is_some() && h1 != h2 && h2 == h3, "{:?} cut {x}", b.graph.edges());
                }
            }
        }
    }
    assert!(with_cut > 0);
}
