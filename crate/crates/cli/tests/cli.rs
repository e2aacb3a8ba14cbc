use std::path::PathBuf;

use bei_cli::{graphfile, run};
use bei_core::graph::Graph;
use proptest::prelude::*;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(
        PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("tests/golden")
            .join(name),
    )
    .unwrap()
}

fn bei(args: &[&str]) -> (String, i32) {
    run(std::iter::once("bei").chain(args.iter().copied()))
}

fn check_golden(args: &[&str], file: &str) {
    let (out, code) = bei(args);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, golden(file));
}

#[test]
fn betti_oracle_on_square() {
    let (out, code) = bei(&["betti", "--oracle", &data("c4.txt")]);
    assert_eq!(code, 0);
    let closed = out.split("oracle:").next().unwrap();
    assert!(closed.contains("beta[2,4]: 9"));
    assert!(out
        .split("oracle:")
        .nth(1)
        .unwrap()
        .contains("beta[2,4]: 9"));
    assert!(out.ends_with("agreement: true\n"));
    check_golden(&["betti", "--oracle", &data("c4.txt")], "betti_c4.txt");
}

#[test]
fn classify_path_is_ci() {
    let (out, _) = bei(&["classify", "--check-mu", &data("p5.txt")]);
    assert!(out.contains("status: CI\n"));
    check_golden(
        &["classify", "--check-mu", &data("p5.txt")],
        "classify_p5.txt",
    );
}

#[test]
fn syzygy_and_groebner_goldens() {
    check_golden(&["syzygy", "--verify", &data("k13.txt")], "syzygy_k13.txt");
    check_golden(
        &["groebner", "--initial", &data("c4.txt")],
        "groebner_initial_c4.txt",
    );
    check_golden(&["dseq", &data("chord6.txt")], "dseq_chord6.txt");
    check_golden(
        &["rees", "--field", "q", &data("k13.txt")],
        "rees_k13_q.txt",
    );
}

#[test]
fn rees_bipartite_counterexample() {
    let args = ["rees", "--linear-type", &data("bipartite8.txt")];
    let (out, code) = bei(&args);
    assert_eq!(code, 0);
    assert!(out.contains("linear_type: false\n"));
    assert!(out.contains("in_kernel: true\n"));
    assert!(out.contains("in_linear_ideal: false\n"));
    assert_eq!(out, golden("rees_linear_type_bipartite8.txt"));
    assert_eq!(bei(&args), (out, code));
}

#[test]
fn exit_codes() {
    assert_eq!(bei(&["betti"]).1, 1);
    assert_eq!(bei(&["frobnicate"]).1, 1);
    assert_eq!(bei(&["classify", "/nonexistent/graph"]).1, 1);
    assert_eq!(bei(&["betti", "--field", "gf2", &data("c4.txt")]).1, 1);
    let (out, code) = bei(&["dseq", &data("triangle_paths.txt")]);
    assert_eq!(code, 1);
    assert!(out.starts_with("error: unsupported graph shape"));
    assert_eq!(bei(&["dseq", &data("p5.txt")]).1, 1);
}

#[test]
fn sweep_small_exits_zero() {
    let (out, code) = bei(&["sweep", "--max-n", "5", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("failures: 0\n"));
    assert_eq!(bei(&["sweep", "--max-n", "5", "--seed", "7"]).0, out);
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..9).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            Graph::build(
                n,
                &pairs
                    .iter()
                    .zip(&mask)
                    .filter(|(_, &k)| k)
                    .map(|(p, _)| *p)
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph_file_round_trip(g in arb_graph()) {
        let text = graphfile::print(&g);
        let back = graphfile::parse(&text).unwrap();
        prop_assert_eq!(graphfile::print(&back), text);
        prop_assert_eq!(back, g);
    }
}
