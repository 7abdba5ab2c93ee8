mod common;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cyclability::closure::is_closed;
use cyclability::constructions::{build, route_ordered_cycle_bipartite, ConstructionError, ConstructionSpec, RouteError};
use cyclability::cycles::{self, Budget};
use cyclability::invariants::{sigma_k, vertex_connectivity};

use common::{brute_connectivity, brute_hamiltonian, brute_k_cyclable, naive_circumference};

fn binom2(x: usize) -> usize {
    x * x.saturating_sub(1) / 2
}

#[test]
fn extremal_graphs_against_oracles() {
    for n in 5..=9 {
        for k in (1..).take_while(|k| 2 * k < n) {
            let g = build(&ConstructionSpec::ExtremalNonham { n, k }).unwrap();
            assert_eq!(g.edge_count(), binom2(n - k) + k * k);
            assert_eq!(brute_connectivity(&g), k, "n={n} k={k}");
            assert!(!brute_hamiltonian(&g));
            assert!(is_closed(&g));
            if n >= 2 * (k * k + k) {
                assert_eq!(sigma_k(&g, k + 1).unwrap(), Some(n + k * k - k - 1));
                for (u, v) in g.non_edges() {
                    assert!(brute_hamiltonian(&g.with_edge(u, v).unwrap()), "n={n} k={k} +{u}{v}");
                }
            }
        }
    }
}

#[test]
fn extremal_layout() {
    let g = build(&ConstructionSpec::ExtremalNonham { n: 12, k: 2 }).unwrap();
    assert_eq!(g.edge_count(), 49);
    for x in 10..12 {
        assert_eq!(g.neighbors(x), 0b11);
    }
}

#[test]
fn join_with_two_cliques() {
    for k in 2..=4 {
        let g = build(&ConstructionSpec::JoinK2TwoKk { k }).unwrap();
        assert_eq!(g.order(), 2 * k + 2);
        assert_eq!(brute_connectivity(&g), 2);
        assert!(brute_k_cyclable(&g, 2));
    }
}

#[test]
fn half_join_is_connected_but_not_hamiltonian() {
    for n in 5..=10 {
        let g = build(&ConstructionSpec::HalfJoin { n }).unwrap();
        let p = (n - 1) / 2;
        assert_eq!(g.edge_count(), binom2(p) + p * (n - p));
        assert_eq!(brute_connectivity(&g), p);
        assert!(!brute_hamiltonian(&g));
    }
}

#[test]
fn bipartite_circumference() {
    for n in 2..=9 {
        for k in 1..n {
            let g = build(&ConstructionSpec::CompleteBipartite { k, n }).unwrap();
            let want = if k.min(n - k) >= 2 { 2 * k.min(n - k) } else { 0 };
            assert_eq!(naive_circumference(&g), want);
        }
    }
}

#[test]
fn parameter_validation() {
    for spec in [
        ConstructionSpec::CompleteBipartite { k: 0, n: 4 },
        ConstructionSpec::CompleteBipartite { k: 4, n: 4 },
        ConstructionSpec::ExtremalNonham { n: 6, k: 3 },
        ConstructionSpec::HalfJoin { n: 2 },
    ] {
        assert!(matches!(build(&spec), Err(ConstructionError::InvalidParameters(_))), "{spec}");
    }
    assert!(matches!(build(&ConstructionSpec::Complete { n: 65 }), Err(ConstructionError::Graph(_))));
    for spec in [
        ConstructionSpec::CompleteBipartite { k: 3, n: 8 },
        ConstructionSpec::JoinK2TwoKk { k: 3 },
        ConstructionSpec::ExtremalNonham { n: 12, k: 2 },
        ConstructionSpec::HalfJoin { n: 9 },
        ConstructionSpec::Petersen,
        ConstructionSpec::Complete { n: 5 },
    ] {
        assert_eq!(spec.to_string().parse::<ConstructionSpec>().unwrap(), spec);
        assert_eq!(build(&spec).unwrap().order(), spec.order());
    }
    assert!(matches!("extremal-nonham 12".parse::<ConstructionSpec>(), Err(ConstructionError::Parse(_))));
}

#[test]
fn routing_matches_the_exact_solver() {
    let budget = Budget::default();
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..300 {
        let n = rng.random_range(2..=12usize);
        let k = rng.random_range(1..=n / 2);
        let g = cyclability::Graph::complete_bipartite(k, n - k).unwrap();
        let len = rng.random_range(1..=k + 1);
        let mut seq: Vec<usize> = rand::seq::index::sample(&mut rng, n, len.min(n)).into_vec();
        if rng.random_bool(0.05) {
            seq.push(seq[0]);
        }
        match route_ordered_cycle_bipartite(k, n, &seq) {
            Ok(cert) => {
                assert!(cert.validate(&g).is_ok());
                assert!(cert.visits_in_order(&seq));
                assert!(cycles::has_ordered_cycle(&g, &seq, &budget).unwrap().holds);
            }
            Err(RouteError::BadLength { .. }) => assert!(seq.len() < 2 || seq.len() > k),
            Err(RouteError::Duplicate(_)) => assert!(seq.len() > 1 && seq[0] == *seq.last().unwrap()),
            Err(e) => panic!("unexpected {e} for k={k} n={n} T={seq:?}"),
        }
    }
}

#[test]
fn bipartite_graphs_are_ordered_up_to_k() {
    let budget = Budget::default();
    for n in 4..=9 {
        for k in 2..=n / 2 {
            let g = cyclability::Graph::complete_bipartite(k, n - k).unwrap();
            assert!(cycles::is_k_ordered(&g, k, &budget).unwrap().holds);
            assert_eq!(vertex_connectivity(&g), k);
        }
    }
}
