mod common;

use common::*;
use sierpinski_core::classes::{find_a_membership, ClassSignature, SearchOptions};
use sierpinski_core::classification::*;
use sierpinski_core::embedding::is_polyhedron;
use sierpinski_core::generators::{delete_two_adjacent_edges, generate, FamilySpec, Solid};
use sierpinski_core::graph::{all_maps, VertexMap};
use sierpinski_core::oracles::{enumerate_connected_graphs, enumerate_regular_planar};
use sierpinski_core::products::sierpinski;
use sierpinski_core::Graph;

fn fam(spec: FamilySpec) -> Graph {
    generate(spec).unwrap()
}

#[test]
fn decomposition_matches_direct_products() {
    let mut firsts: Vec<Graph> = (2..=5).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect();
    firsts.push(fam(FamilySpec::Prism(3)));
    firsts.push(fam(FamilySpec::Platonic(Solid::Octahedron)));
    let seconds: Vec<Graph> = (2..=4).flat_map(|n| enumerate_connected_graphs(n).unwrap()).collect();
    let mut regular_planar = 0;
    for a in &firsts {
        for b in &seconds {
            if a.n() == 6 && b.n() == 4 {
                continue;
            }
            for f in all_maps(a.n(), b.n()) {
                let d = decompose_regular_planar(a, b, &f).unwrap();
                let direct = direct_regular_planar(a, b, &f).unwrap();
                assert_eq!(d.as_ref().map(|d| d.r), direct, "{:?} {:?} {:?}", a.edges(), b.edges(), f.images());
                regular_planar += usize::from(direct.is_some());
                if let Some(d) = d {
                    assert!(table2_case(a, b, &f).unwrap().case.is_some() || d.signature.k() > 3);
                }
            }
        }
    }
    assert!(regular_planar > 0);
}

#[test]
fn scenario_rows_are_exclusive() {
    for (i, x) in SCENARIOS.iter().enumerate() {
        for y in &SCENARIOS[i + 1..] {
            assert!(x.r != y.r || x.parts != y.parts);
        }
    }
    for (i, x) in TABLE2.iter().enumerate() {
        assert_eq!(x.case as usize, i + 1);
        assert!(x.parts[0] < x.r && x.parts.windows(2).all(|w| w[0] >= w[1]), "{x:?}");
    }
}

#[test]
fn scenario_instances() {
    let oct = fam(FamilySpec::Platonic(Solid::Octahedron));
    let k2 = complete(2);
    let a =
        find_a_membership(&oct, &ClassSignature::new(vec![2, 2]).unwrap(), &SearchOptions::default()).unwrap().unwrap();
    let f = VertexMap::new(a.colouring.colours().iter().map(|&c| c as usize - 1).collect(), 2).unwrap();
    let v = scenario_of(&oct, &k2, &f).unwrap();
    assert_eq!(v.scenario, Some(1));
    // swapping the colours of one vertex breaks regularity
    let mut img = f.images().to_vec();
    img[0] = 1 - img[0];
    let broken = VertexMap::new(img, 2).unwrap();
    assert_eq!(scenario_of(&oct, &k2, &broken).unwrap().scenario, None);

    let k4 = fam(FamilySpec::Platonic(Solid::Tetrahedron));
    let b = delete_two_adjacent_edges(&k4, 0, 1, 2).unwrap();
    let (g, col) = a211_member16();
    let f = VertexMap::new(col.colours().iter().map(|&c| b.certificate.coloured(c)).collect(), 4).unwrap();
    let v = scenario_of(&g, &b.graph, &f).unwrap();
    assert_eq!(v.scenario, Some(3));
    let p = sierpinski(&g, &b.graph, &f).unwrap();
    assert!(is_polyhedron(&p) && p.regular_degree() == Some(3));
}

#[test]
fn face_order_condition_matches_polyhedrality() {
    let firsts = [fam(FamilySpec::Platonic(Solid::Tetrahedron)), fam(FamilySpec::WheelPyramid(4))];
    let seconds = [
        fam(FamilySpec::Platonic(Solid::Tetrahedron)),
        fam(FamilySpec::WheelPyramid(4)),
        fam(FamilySpec::Prism(3)),
        fam(FamilySpec::Platonic(Solid::Octahedron)),
    ];
    let mut polyhedral = 0;
    for a in &firsts {
        for b in &seconds {
            for f in all_maps(a.n(), b.n()).filter(|f| f.is_locally_injective(a)) {
                let witness = check_siepol(a, b, &f).unwrap();
                let direct = is_polyhedron(&sierpinski(a, b, &f).unwrap());
                assert_eq!(witness.is_some(), direct, "{:?} {:?} {:?}", a.edges(), b.edges(), f.images());
                polyhedral += usize::from(direct);
            }
        }
    }
    assert!(polyhedral > 0);
}

#[test]
fn boundary_orders_feed_pyramids() {
    for a in [
        fam(FamilySpec::Platonic(Solid::Tetrahedron)),
        fam(FamilySpec::Prism(3)),
        fam(FamilySpec::Platonic(Solid::Cube)),
    ] {
        let order = compatible_boundary_order(&a).order.unwrap();
        let n = a.n();
        let pyramid = fam(FamilySpec::WheelPyramid(n));
        let mut img = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            img[v] = i;
        }
        let f = VertexMap::new(img, n + 1).unwrap();
        assert!(check_siepol(&a, &pyramid, &f).unwrap().is_some());
        assert!(is_polyhedron(&sierpinski(&a, &pyramid, &f).unwrap()));
    }
    let bip = fam(FamilySpec::Bipyramid(3));
    assert!(compatible_boundary_order(&bip).order.is_none());
}

#[test]
fn k4_condition_matches_polyhedrality() {
    let k4 = complete(4);
    let mut checked = 0;
    for b in (4..=6).flat_map(|n| enumerate_connected_graphs(n).unwrap()) {
        if !sierpinski_core::connectivity::is_k_connected(&b, 2) || b == k4 {
            continue;
        }
        for f in all_maps(4, b.n()).filter(VertexMap::is_injective) {
            let report = check_k4b(&b, &f).unwrap();
            assert_eq!(report.holds(), is_polyhedron(&sierpinski(&k4, &b, &f).unwrap()));
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn red_blue_assignments_match_k2_products() {
    let k2 = complete(2);
    for n in 6..=9 {
        for a in enumerate_regular_planar(n, 4, &sierpinski_core::embedding::is_planar) {
            if !is_polyhedron(&a) {
                continue;
            }
            let direct = all_maps(a.n(), 2).any(|f| is_polyhedron(&sierpinski(&a, &k2, &f).unwrap()));
            let rb = check_rb(&a);
            assert_eq!(rb.is_some(), direct);
            if let Some(rb) = rb {
                assert!(is_polyhedron(&sierpinski(&a, &k2, &rb.map).unwrap()));
            }
        }
    }
}
