use std::collections::BTreeSet;

use fracx_core::graph::{
    canonical_key, encode_graph6, enumerate_subcubic_trianglefree, independence_number,
    maximal_independent_sets, members, named_graph, parse_graph6, random_subcubic_trianglefree,
    structural_report, Girth, Graph, VertexSet,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_permuted(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn brute_force_mis(g: &Graph) -> Vec<VertexSet> {
    let all = g.vertices();
    (0..=all)
        .filter(|&s| g.is_independent(s))
        .filter(|&s| members(all & !s).all(|v| !g.is_independent(s | 1 << v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least sorted edge list over all relabelings.
fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e = g.permuted(p).edges();
            e.sort();
            e
        })
        .min()
        .unwrap()
}

fn in_class(g: &Graph) -> bool {
    let r = structural_report(g);
    r.is_connected && r.is_subcubic && r.is_triangle_free
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(40)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn mis_matches_brute_force(g in arb_graph(12)) {
        prop_assert_eq!(maximal_independent_sets(&g).unwrap(), brute_force_mis(&g));
    }

    #[test]
    fn canonical_key_is_invariant((g, perm) in arb_permuted(9)) {
        prop_assert_eq!(canonical_key(&g.permuted(&perm)), canonical_key(&g));
    }

    #[test]
    fn invariant_key_is_invariant(seed in any::<u64>(), perm in Just((0..20).collect::<Vec<usize>>()).prop_shuffle()) {
        let g = random_subcubic_trianglefree(20, seed).unwrap();
        prop_assert_eq!(canonical_key(&g.permuted(&perm)), canonical_key(&g));
    }

    #[test]
    fn random_generator_contract(n in 1usize..=62, seed in any::<u64>()) {
        let g = random_subcubic_trianglefree(n, seed).unwrap();
        prop_assert_eq!(g.n(), n);
        prop_assert!(in_class(&g));
        prop_assert_eq!(&random_subcubic_trianglefree(n, seed).unwrap(), &g);
    }

    #[test]
    fn report_invariants(g in arb_graph(9)) {
        let r = structural_report(&g);
        prop_assert_eq!(r.degrees.iter().sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!(
            r.is_two_edge_connected,
            r.is_connected && g.n() >= 2 && r.bridges.is_empty()
        );
        for &(e, f) in &r.two_edge_cuts {
            prop_assert!(!g.is_connected_without(&[e, f]));
            prop_assert!(g.is_connected_without(&[e]));
            prop_assert!(g.is_connected_without(&[f]));
        }
    }
}

#[test]
fn exhaustive_canonical_key_is_complete() {
    // distinct keys exactly for non-isomorphic graphs, on all graphs with 5 vertices
    let perms = permutations(5);
    let mut by_key = std::collections::BTreeMap::new();
    for mask in 0u32..1 << 10 {
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..5 {
            for i in 0..j {
                if mask >> k & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        let g = Graph::from_edges(5, &edges).unwrap();
        let canon = brute_canonical(&g, &perms);
        let previous = by_key.insert(canonical_key(&g), canon.clone());
        if let Some(previous) = previous {
            assert_eq!(previous, canon);
        }
    }
    // 34 isomorphism classes of graphs on 5 vertices
    assert_eq!(by_key.len(), 34);
}

#[test]
fn enumeration_matches_brute_force_generation() {
    for n in 1..=6 {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut expected = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = members(mask as u64).map(|i| pairs[i]).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if in_class(&g) {
                expected.insert(brute_canonical(&g, &perms));
            }
        }
        let generated: Vec<Graph> = enumerate_subcubic_trianglefree(n).unwrap().collect();
        let got: BTreeSet<_> = generated.iter().map(|g| brute_canonical(g, &perms)).collect();
        assert_eq!(got.len(), generated.len(), "duplicates for n = {n}");
        assert_eq!(got, expected, "n = {n}");
    }
}

#[test]
fn enumeration_contract_up_to_ten() {
    let expected_small = [1, 1, 1, 3];
    for n in 1..=10 {
        let graphs: Vec<Graph> = enumerate_subcubic_trianglefree(n).unwrap().collect();
        let keys: BTreeSet<Vec<u8>> = graphs.iter().map(canonical_key).collect();
        assert_eq!(keys.len(), graphs.len());
        for g in &graphs {
            assert_eq!(g.n(), n);
            assert!(in_class(g));
            assert_eq!(&parse_graph6(&encode_graph6(g).unwrap()).unwrap(), g);
        }
        if n <= 4 {
            assert_eq!(graphs.len(), expected_small[n - 1]);
        }
    }
    // deterministic order
    let a: Vec<Graph> = enumerate_subcubic_trianglefree(7).unwrap().collect();
    let b: Vec<Graph> = enumerate_subcubic_trianglefree(7).unwrap().collect();
    assert_eq!(a, b);
}

#[test]
fn n4_classes_are_path_star_and_square() {
    let perms = permutations(4);
    let got: BTreeSet<_> = enumerate_subcubic_trianglefree(4)
        .unwrap()
        .map(|g| brute_canonical(&g, &perms))
        .collect();
    let want: BTreeSet<_> = [
        named_graph("path_4").unwrap(),
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        named_graph("cycle_4").unwrap(),
    ]
    .iter()
    .map(|g| brute_canonical(g, &perms))
    .collect();
    assert_eq!(got, want);
}

#[test]
fn odd_cycles_and_girths() {
    for k in 1..=5 {
        let g = named_graph(&format!("cycle_{}", 2 * k + 1)).unwrap();
        assert_eq!(independence_number(&g).unwrap(), k);
    }
    for k in 3..=10 {
        let g = named_graph(&format!("cycle_{k}")).unwrap();
        assert_eq!(structural_report(&g).girth, Girth::Finite(k));
    }
}

// brute-force girth: shortest cycle through exhaustive search of simple paths
fn brute_girth(g: &Graph) -> Option<usize> {
    fn extend(g: &Graph, start: usize, last: usize, used: VertexSet, len: usize, best: &mut Option<usize>) {
        for v in members(g.neighbors(last)) {
            if v == start && len >= 3 {
                *best = Some(best.map_or(len, |b: usize| b.min(len)));
            } else if used >> v & 1 == 0 && v > start {
                extend(g, start, v, used | 1 << v, len + 1, best);
            }
        }
    }
    let mut best = None;
    for s in 0..g.n() {
        extend(g, s, s, 1 << s, 1, &mut best);
    }
    best
}

#[test]
fn girth_matches_brute_force() {
    for name in ["c5", "k4prime", "petersen", "path_4"] {
        let g = named_graph(name).unwrap();
        let expected = brute_girth(&g).map_or(Girth::Acyclic, Girth::Finite);
        assert_eq!(structural_report(&g).girth, expected, "{name}");
    }
    assert_eq!(brute_girth(&named_graph("k4prime").unwrap()), Some(4));
    for n in 5..=8 {
        for g in enumerate_subcubic_trianglefree(n).unwrap() {
            let expected = brute_girth(&g).map_or(Girth::Acyclic, Girth::Finite);
            assert_eq!(structural_report(&g).girth, expected);
        }
    }
}
