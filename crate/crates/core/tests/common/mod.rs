#![allow(dead_code)]

use proptest::prelude::*;
use sierpinski_core::classes::Colouring;
use sierpinski_core::Graph;

pub fn complete(n: usize) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
}

/// Graph on `n` vertices keeping the pairs selected by `mask`, in
/// lexicographic pair order.
pub fn from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut e = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask[k] {
                e.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &e).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.4), pairs).prop_map(move |m| from_mask(n, &m))
    })
}

pub fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.is_connected())
}

/// A 4-regular 4-connected planar graph on 16 vertices whose colouring below
/// has the right neighbour counts for (2,1,1) but admits no embedding with
/// same-coloured neighbours consecutive. Red 4-cycles on `0..4` and `12..16`,
/// an 8-cycle on `4..12` coloured blue, blue, green, green, ...
pub fn literal_counterexample() -> (Graph, Colouring) {
    let t = 4;
    let mut e = Vec::new();
    for i in 0..t {
        e.push((i, (i + 1) % t));
        e.push((3 * t + i, 3 * t + (i + 1) % t));
    }
    for j in 0..2 * t {
        e.push((t + j, t + (j + 1) % (2 * t)));
    }
    for i in 0..t {
        for s in [(2 * i + 1) % (2 * t), (2 * i + 2) % (2 * t)] {
            e.push((i, t + s));
            e.push((3 * t + i, t + s));
        }
    }
    let g = Graph::from_edges(4 * t, &e).unwrap();
    let colours = (0..4 * t)
        .map(|v| {
            if v < t || v >= 3 * t {
                1
            } else if (v - t) % 4 < 2 {
                2
            } else {
                3
            }
        })
        .collect();
    (g, Colouring::new(colours).unwrap())
}

/// A 4-connected (2,1,1) member on 16 vertices: red `0..8`, blue `8..12`,
/// green `12..16`.
pub fn a211_member16() -> (Graph, Colouring) {
    let e = [
        (0, 1),
        (0, 3),
        (0, 8),
        (0, 13),
        (1, 2),
        (1, 8),
        (1, 15),
        (2, 3),
        (2, 10),
        (2, 15),
        (3, 10),
        (3, 13),
        (4, 5),
        (4, 7),
        (4, 9),
        (4, 12),
        (5, 6),
        (5, 9),
        (5, 14),
        (6, 7),
        (6, 11),
        (6, 14),
        (7, 11),
        (7, 12),
        (8, 9),
        (8, 13),
        (9, 12),
        (10, 11),
        (10, 15),
        (11, 14),
        (12, 13),
        (14, 15),
    ];
    let g = Graph::from_edges(16, &e).unwrap();
    let colours = (0..16)
        .map(|v| {
            if v < 8 {
                1
            } else if v < 12 {
                2
            } else {
                3
            }
        })
        .collect();
    (g, Colouring::new(colours).unwrap())
}
