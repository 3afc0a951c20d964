mod common;

use common::{brute_bipartite, graph};
use minorfree::baker::{baker_partition, ptas_is, PtasConfig};
use minorfree::dp::{nice_decompose, solve_wis, solve_wvc, ForcedSets};
use minorfree::gnc::{gnc_solve_vc, kernelize, GncConfig, KernelChoice, KernelOutcome};
use minorfree::graph::{TwoColoring, VertexWeights};
use minorfree::oddminor::{bip_weighted_is, max_bipartite_matching, sides_of};
use minorfree::oracle::{self, check};
use minorfree::treedec::{exact_treewidth, heuristic_decompose, make_nice, Strategy as Order};
use minorfree::{Graph, Vertex};
use proptest::prelude::*;

fn weights(n: usize) -> impl Strategy<Value = VertexWeights> {
    proptest::collection::vec(0u64..20, n).prop_map(VertexWeights)
}

fn with_weights(lo: usize, hi: usize) -> impl Strategy<Value = (Graph, VertexWeights)> {
    graph(lo, hi).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), weights(n))
    })
}

fn closed_neighborhood(g: &Graph, s: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = s.iter().flat_map(|&v| g.neighbors(v).iter().copied().chain([v])).collect();
    out.sort_unstable();
    out.dedup();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn generated_graphs_are_simple(g in graph(0, 14)) {
        g.audit().unwrap();
        prop_assert_eq!(g.edges().count(), g.m());
    }

    #[test]
    fn bfs_levels_are_distances(g in graph(1, 14)) {
        let l = g.bfs_layers(None).unwrap();
        for (u, v) in g.edges() {
            prop_assert!(l.level[u].abs_diff(l.level[v]) <= 1);
        }
        for v in g.vertices() {
            if l.level[v] > 0 {
                prop_assert!(g.neighbors(v).iter().any(|&u| l.level[u] + 1 == l.level[v]));
            } else {
                prop_assert!(l.roots.contains(&v));
            }
        }
    }

    #[test]
    fn two_coloring_matches_exhaustive(g in graph(0, 10)) {
        match g.two_coloring() {
            TwoColoring::Bipartite(c) => {
                prop_assert!(brute_bipartite(&g));
                prop_assert!(g.edges().all(|(u, v)| c[u] != c[v]));
            }
            TwoColoring::OddCycle(cyc) => {
                prop_assert!(!brute_bipartite(&g));
                prop_assert!(cyc.len() % 2 == 1 && cyc.len() >= 3);
                for i in 0..cyc.len() {
                    prop_assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
                }
            }
        }
    }

    #[test]
    fn heuristics_bound_exact_width(g in graph(0, 10)) {
        let (tw, td) = exact_treewidth(&g).unwrap();
        prop_assert!(td.is_valid(&g));
        prop_assert_eq!(td.width(), tw);
        for s in [Order::MinDegree, Order::MinFill] {
            let h = heuristic_decompose(&g, s);
            prop_assert!(h.is_valid(&g));
            prop_assert!(h.width() >= tw);
        }
    }

    #[test]
    fn nice_form_preserves_validity_and_width(g in graph(0, 12), root in 0usize..12) {
        let td = heuristic_decompose(&g, Order::MinFill);
        let ntd = make_nice(&td, root % td.len());
        ntd.check_shape().unwrap();
        prop_assert!(ntd.to_tree_decomposition().is_valid(&g));
        prop_assert_eq!(ntd.width(), td.width());
    }

    #[test]
    fn subset_dp_matches_oracle((g, w) in with_weights(0, 12), picks in proptest::collection::vec(0u8..8, 12)) {
        let mut state = vec![0u8; g.n()];
        for v in g.vertices() {
            let want = match picks[v] { 0 => 1, 1 => 2, _ => 0 };
            if want != 0 && g.neighbors(v).iter().all(|&u| state[u] != want) {
                state[v] = want;
            }
        }
        let pick = |s| g.vertices().filter(|&v| state[v] == s).collect();
        let forced = ForcedSets::new(pick(1), pick(2));
        let ntd = nice_decompose(&g, Order::MinDegree);
        let is = solve_wis(&g, &w, &ntd, &forced).unwrap();
        prop_assert_eq!(is.value, oracle::max_weight_is(&g, &w, &forced).unwrap().0);
        let set = is.certificate.vertices().unwrap();
        prop_assert!(check::is_independent(&g, set) && check::respects(set, &forced));
        let vc = solve_wvc(&g, &w, &ntd, &forced).unwrap();
        prop_assert_eq!(vc.value, oracle::min_weight_vc(&g, &w, &forced).unwrap().0);
        prop_assert!(check::is_vertex_cover(&g, vc.certificate.vertices().unwrap()));
    }

    #[test]
    fn forcing_in_equals_deleting_closed_neighborhood((g, w) in with_weights(1, 12), seed in any::<u64>()) {
        let mut s: Vec<Vertex> = Vec::new();
        for v in g.vertices() {
            if seed >> (v % 64) & 1 == 1 && g.neighbors(v).iter().all(|u| !s.contains(u)) {
                s.push(v);
            }
        }
        let ntd = nice_decompose(&g, Order::MinFill);
        let forced = solve_wis(&g, &w, &ntd, &ForcedSets::new(s.clone(), vec![])).unwrap().value;
        let (rest, map) = g.without(&closed_neighborhood(&g, &s));
        let rest_ntd = nice_decompose(&rest, Order::MinFill);
        let free = solve_wis(&rest, &w.restrict(&map), &rest_ntd, &ForcedSets::none()).unwrap().value;
        prop_assert_eq!(forced, free + w.sum_over(&s));
    }

    #[test]
    fn table_size_follows_width(g in graph(1, 12)) {
        let ntd = nice_decompose(&g, Order::MinFill);
        let sol = solve_wis(&g, &VertexWeights::unit(g.n()), &ntd, &ForcedSets::none()).unwrap();
        let bound = ntd.len() as u64 * (1u64 << (ntd.width() + 1));
        prop_assert!(sol.stats.table_entries <= bound);
        prop_assert_eq!(sol.stats.width, ntd.width());
    }

    #[test]
    fn kernels_preserve_answers(g in graph(0, 12), k in 0usize..10) {
        let opt = oracle::min_weight_vc(&g, &VertexWeights::unit(g.n()), &ForcedSets::none()).unwrap().0;
        for choice in [KernelChoice::Buss, KernelChoice::Nt, KernelChoice::Both] {
            match kernelize(&g, k, choice) {
                KernelOutcome::NoInstance { .. } => prop_assert!(opt > k as u64),
                KernelOutcome::Reduced(r) => {
                    prop_assert!(r.k_prime <= k);
                    prop_assert_eq!(&g.induced_subgraph(&r.vmap).0, &r.graph);
                    let inner = oracle::min_weight_vc(&r.graph, &VertexWeights::unit(r.graph.n()), &ForcedSets::none()).unwrap().0;
                    prop_assert_eq!(inner <= r.k_prime as u64, opt <= k as u64);
                }
            }
            let out = gnc_solve_vc(&g, k, &GncConfig { kernel: choice, ..GncConfig::default() }).unwrap();
            prop_assert_eq!(out.decision, opt <= k as u64);
        }
    }

    #[test]
    fn konig_equality(a in 1usize..8, b in 1usize..8, bits in any::<u64>()) {
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|u| (0..b).map(move |v| (u, a + v)))
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        let g = Graph::from_edges(a + b, &edges).unwrap();
        let sides = sides_of(&g).unwrap();
        let matching = max_bipartite_matching(&g, &sides).unwrap();
        let mut used = vec![false; g.n()];
        for &(l, r) in &matching {
            prop_assert!(g.has_edge(l, r) && !used[l] && !used[r]);
            used[l] = true;
            used[r] = true;
        }
        let cover = oracle::min_weight_vc(&g, &VertexWeights::unit(g.n()), &ForcedSets::none()).unwrap().0;
        prop_assert_eq!(matching.len() as u64, cover);
    }

    #[test]
    fn bipartite_is_matches_oracle(a in 1usize..7, b in 1usize..7, bits in any::<u64>(), w in proptest::collection::vec(0u64..20, 14)) {
        let edges: Vec<(usize, usize)> = (0..a)
            .flat_map(|u| (0..b).map(move |v| (u, a + v)))
            .enumerate()
            .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
            .map(|(_, e)| e)
            .collect();
        let g = Graph::from_edges(a + b, &edges).unwrap();
        let w = VertexWeights(w[..g.n()].to_vec());
        let sol = bip_weighted_is(&g, &sides_of(&g).unwrap(), &w, &ForcedSets::none()).unwrap();
        prop_assert_eq!(sol.value, oracle::max_weight_is(&g, &w, &ForcedSets::none()).unwrap().0);
    }

    #[test]
    fn layering_and_shifting((g, w) in with_weights(1, 12), t in 2usize..5) {
        let p = baker_partition(&g, t, None).unwrap();
        p.check(&g).unwrap();
        let (sol, rep) = ptas_is(&g, &w, &PtasConfig::new(t, g.n())).unwrap();
        let opt = oracle::max_weight_is(&g, &w, &ForcedSets::none()).unwrap().0;
        prop_assert!(rep.guarantee.holds(sol.value, opt));
        prop_assert!(sol.value <= opt);
    }
}
