use serde_json::Value;
use sierp::cli::run;

fn sierp(args: &[&str]) -> (i32, Value) {
    let r = run(std::iter::once("sierp").chain(args.iter().copied()));
    (r.code, r.payload)
}

#[test]
fn verdict_exit_codes() {
    assert_eq!(sierp(&["check", "polyhedron", "gen:platonic:cube"]).0, 0);
    let (code, payload) = sierp(&["check", "polyhedron", "gen:cycle:5"]);
    assert_eq!(code, 1);
    assert_eq!(payload["verdict"], Value::Bool(false));
    assert_eq!(sierp(&["check", "planar", "g6:C~"]).0, 0);
    assert_eq!(sierp(&["check", "planar", "/nonexistent/graph.g6"]).0, 2);
}

#[test]
fn usage_errors_exit_2() {
    let (code, payload) = sierp(&["check", "no-such-check"]);
    assert_eq!(code, 2);
    assert_eq!(payload["error"], "usage");
    assert_eq!(sierp(&[]).0, 2);
    assert_eq!(sierp(&["--help"]).0, 0);
}

#[test]
fn map_positional_or_flag() {
    let (c1, p1) = sierp(&["product", "sierpinski", "gen:complete:3", "gen:complete:3", "[0,1,2]"]);
    let (c2, p2) = sierp(&["--map", "[0,1,2]", "product", "sierpinski", "gen:complete:3", "gen:complete:3"]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(p1["graph6"], p2["graph6"]);
    assert_eq!(p1["n"], 9);
    assert_eq!(p1["edges"], 12);
}

#[test]
fn product_writes_graph_and_index() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    let out_s = out.to_str().unwrap();
    let (code, payload) =
        sierp(&["--out", out_s, "product", "sierpinski", "gen:complete:4", "gen:complete:2", "[0,0,1,1]"]);
    assert_eq!(code, 0, "{payload}");
    let g = sierp::io::read_graph(out_s).unwrap();
    assert_eq!(g.n(), 8);
    let index: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("p.json.index.json")).unwrap()).unwrap();
    assert_eq!(index["pairs"][3], serde_json::json!([1, 1]));

    // The written graph reads back through the CLI as well.
    assert_eq!(sierp(&["check", "connectivity", out_s]).1["connectivity"], payload_connectivity(&g));
}

fn payload_connectivity(g: &sierpinski_core::Graph) -> Value {
    Value::from(sierpinski_core::connectivity::vertex_connectivity(g).unwrap())
}

#[test]
fn membership_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let cert_s = cert.to_str().unwrap();
    let (code, _) = sierp(&["--out", cert_s, "class", "find-a", "gen:platonic:octahedron", "2,2"]);
    assert_eq!(code, 0);
    assert_eq!(sierp(&["--cert", cert_s, "class", "check-a", "gen:platonic:octahedron"]).0, 0);
    assert_eq!(sierp(&["class", "find-A", "gen:platonic:cube", "1,1,1"]).0, 1);
}

#[test]
fn seed_is_echoed() {
    let (_, payload) = sierp(&["--seed", "7", "check", "planar", "g6:C~"]);
    assert_eq!(payload["seed"], 7);
}
