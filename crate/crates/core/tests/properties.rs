use bei_core::aci::{classify, AciStatus};
use bei_core::beideal::{binomial_edge_ideal, edge_binomial, minimal_primes_and_height};
use bei_core::betti::oracle_beta_squarefree;
use bei_core::graph::enumerate::prufer_decode;
use bei_core::graph::{Claw, Edge, Graph};
use bei_core::groebner::Ideal;
use bei_core::poly::{MonomialOrder, VarUniverse};
use bei_core::rees::{delta_kernel_check, linear_rees_generators};
use bei_core::syzygy::{b_vectors, claw_relation, first_syzygy, SyzygyKind};
use bei_core::{Field, Fp, Q};
use proptest::prelude::*;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = all_pairs(n);
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |mask| {
            let chosen: Vec<(usize, usize)> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &k)| k)
                .map(|(p, _)| *p)
                .collect();
            Graph::build(n, &chosen).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("connected", |g| g.analyze().connected)
}

fn arb_tree(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1..=n, n - 2).prop_map(move |seq| prufer_decode(&seq, n))
    })
}

/// A tree plus one extra edge.
fn arb_unicyclic(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (arb_tree(min_n, max_n), any::<prop::sample::Index>()).prop_map(|(t, idx)| {
        let missing: Vec<(usize, usize)> = all_pairs(t.n())
            .into_iter()
            .filter(|&(a, b)| !t.has_edge(a, b))
            .collect();
        let (a, b) = missing[idx.index(missing.len())];
        t.with_edges([Edge::new(a, b)])
    })
}

fn arb_tree_or_unicyclic(max_n: usize) -> impl Strategy<Value = Graph> {
    prop_oneof![arb_tree(3, max_n), arb_unicyclic(3, max_n)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn edges_sorted_and_in_range(g in arb_graph(9)) {
        let e = g.edges();
        prop_assert!(e.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(e.iter().all(|e| 1 <= e.u && e.u < e.v && e.v <= g.n()));
    }

    #[test]
    fn claws_are_induced(g in arb_graph(8)) {
        for c in g.induced_claws() {
            let [a, b, d] = c.leaves;
            prop_assert!([a, b, d].iter().all(|&l| g.has_edge(c.center, l)));
            prop_assert!(!g.has_edge(a, b) && !g.has_edge(a, d) && !g.has_edge(b, d));
        }
    }

    #[test]
    fn claw_relation_is_a_syzygy(center in 1usize..=9, mut leaves in proptest::sample::subsequence((1usize..=9).collect::<Vec<_>>(), 3)) {
        prop_assume!(!leaves.contains(&center));
        leaves.sort_unstable();
        let uni = VarUniverse::standard(9);
        let s = claw_relation::<Q>(&uni, &Claw { center, leaves: [leaves[0], leaves[1], leaves[2]] });
        prop_assert!(s.psi().is_zero());
        prop_assert_eq!(s.degree, 4);
    }

    #[test]
    fn cut_sets_have_the_cut_point_property(g in arb_connected(7)) {
        for c in g.cut_point_sets(g.n()).unwrap() {
            prop_assert_eq!(c.components, g.components_without(&c.vertices).len());
            for &i in &c.vertices {
                let others: Vec<usize> = c.vertices.iter().copied().filter(|&v| v != i).collect();
                prop_assert!(g.components_without(&others).len() < c.components, "{} in {:?}", i, c.vertices);
            }
        }
    }

    #[test]
    fn edge_binomial_is_symmetric(i in 1usize..=8, j in 1usize..=8) {
        prop_assume!(i != j);
        let uni = VarUniverse::standard(8);
        let a = edge_binomial::<Q>(&uni, i, j).unwrap();
        prop_assert_eq!(a.homogeneous_degree(), Some(2));
        prop_assert_eq!(a, edge_binomial::<Q>(&uni, j, i).unwrap());
    }

    #[test]
    fn prime_components_contain_the_ideal(g in arb_connected(6)) {
        let j: Ideal<Q> = binomial_edge_ideal(&g);
        let mp = minimal_primes_and_height::<Q>(&g).unwrap();
        for p in &mp.components {
            let t = &p.cut_set;
            prop_assert_eq!(p.height, g.n() + t.vertices.len() - t.components);
            prop_assert!(p.ideal.contains_ideal(&j));
        }
    }

    #[test]
    fn reduced_gb_is_monic_and_interreduced(g in arb_graph(6)) {
        let gb = binomial_edge_ideal::<Fp>(&g).gb(&MonomialOrder::lex());
        let order = MonomialOrder::lex();
        let polys = gb.polynomials();
        let leads = gb.leading_monomials();
        for (k, p) in polys.iter().enumerate() {
            prop_assert!(p.leading(&order).unwrap().1.is_one());
            for (l, m) in leads.iter().enumerate() {
                if l != k {
                    prop_assert!(p.terms().iter().all(|(t, _)| m.quotient_of(t).is_none()));
                }
            }
        }
    }

    #[test]
    fn betti_low_rows(g in arb_graph(5)) {
        let t = oracle_beta_squarefree(&binomial_edge_ideal::<Q>(&g), 1, 4).unwrap();
        prop_assert_eq!(t.get(0, 0), 1);
        prop_assert_eq!(t.row(1), if g.edge_count() == 0 { vec![] } else { vec![(2, g.edge_count() as u64)] });
    }

    #[test]
    fn first_syzygies_map_to_zero(g in arb_tree_or_unicyclic(8)) {
        let n = g.n() as u32;
        let girth = g.girth().map(|m| m as u32);
        for s in first_syzygy::<Fp>(&g).unwrap() {
            prop_assert!(s.psi().is_zero(), "{}", s);
            let ok = match s.kind {
                SyzygyKind::KoszulPair | SyzygyKind::Claw => s.degree == 4,
                SyzygyKind::CycleB => Some(s.degree) == girth || s.degree == n,
                SyzygyKind::LinearEn => s.degree == 3,
            };
            prop_assert!(ok, "{} has degree {}", s.label, s.degree);
        }
    }

    #[test]
    fn classifier_invariants(g in arb_tree_or_unicyclic(8)) {
        let v = classify(&g).unwrap();
        prop_assert_eq!(v.status == AciStatus::Ci, g.analyze().is_path);
        if v.status == AciStatus::Aci {
            prop_assert_eq!(v.mu, v.height + 1);
        }
        prop_assert!(v.agrees());
    }

    #[test]
    fn linear_rees_generators_are_in_the_kernel(g in arb_tree_or_unicyclic(6)) {
        for p in linear_rees_generators::<Fp>(&g).unwrap() {
            prop_assert!(delta_kernel_check(&p).unwrap());
        }
    }
}

#[test]
fn b_vector_commutation() {
    let zero = |m: usize| {
        let uni = VarUniverse::standard(m);
        b_vectors(&uni, m).unwrap().iter().all(|b| {
            let g = bei_core::syzygy::cycle_b_generator::<Q>(&uni, b);
            g.psi().is_zero()
        })
    };
    assert!((4..=10).all(zero));
}
