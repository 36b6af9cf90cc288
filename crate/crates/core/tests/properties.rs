use std::collections::VecDeque;

use proptest::prelude::*;

use rst_core::algo::bfs::bfs_rst;
use rst_core::algo::cc::{cc_spanning_forest, jump_to_convergence, DisjointState};
use rst_core::algo::euler::{build_euler, compute_successor, root_forest};
use rst_core::algo::pr_rst::{pr_rst, reverse_path, PrState};
use rst_core::forest::{chain_roots, forest_depth};
use rst_core::validate::{canonical_labels, oracle_cc, oracle_root, validate_rooted_forest, UnionFind};
use rst_core::{build_csr, generate, load_edge_list, Engine, EdgeList, Graph, GraphKind, RootedForest};

fn edge_lists() -> impl Strategy<Value = EdgeList> {
    (1usize..60).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..150).prop_map(move |e| EdgeList::new(n, e).unwrap())
    })
}

fn tree(n: usize, seed: u64) -> Graph {
    build_csr(&generate(&GraphKind::Tree { n, seed }).unwrap())
}

fn bfs_distances(g: &Graph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.num_vertices()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

fn recursive_depth(parent: &[usize], v: usize) -> usize {
    if parent[v] == v {
        0
    } else {
        1 + recursive_depth(parent, parent[v])
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn csr_invariants(el in edge_lists()) {
        let g = build_csr(&el);
        let n = g.num_vertices();
        prop_assert_eq!(g.offsets()[0], 0);
        prop_assert_eq!(g.offsets()[n], 2 * g.num_edges());
        prop_assert!(g.offsets().windows(2).all(|w| w[0] <= w[1]));
        for u in 0..n {
            prop_assert!(g.neighbors(u).windows(2).all(|w| w[0] < w[1]));
            for (v, e) in g.arcs(u) {
                prop_assert!(g.has_edge(v, u));
                let (a, b) = g.edge(e);
                prop_assert!((a, b) == (u.min(v), u.max(v)));
            }
        }
    }

    #[test]
    fn text_round_trip(el in edge_lists()) {
        let g = build_csr(&el);
        let again = build_csr(&load_edge_list(g.to_edge_list().to_text().as_bytes()).unwrap());
        prop_assert_eq!(g, again);
    }

    #[test]
    fn bfs_levels_are_shortest(el in edge_lists(), root_seed in any::<usize>()) {
        let g = build_csr(&el);
        let root = root_seed % g.num_vertices();
        let f = bfs_rst(&g, root, &mut Engine::sequential()).unwrap();
        let dist = bfs_distances(&g, root);
        let levels = f.levels.clone().unwrap();
        for v in 0..g.num_vertices() {
            if dist[v] != usize::MAX {
                prop_assert_eq!(levels[v], dist[v]);
            }
        }
        prop_assert!(validate_rooted_forest(&g, &f).unwrap().ok);
    }

    #[test]
    fn bfs_steps_track_depth(n in 2usize..200, p in 0.05f64..0.3, seed in any::<u64>()) {
        let g = build_csr(&generate(&GraphKind::Random { n, p, seed }).unwrap());
        if oracle_cc(&g).iter().all(|&l| l == 0) {
            let mut e = Engine::sequential();
            let f = bfs_rst(&g, 0, &mut e).unwrap();
            let depth = forest_depth(&f).unwrap().max as u64;
            prop_assert!(depth <= e.steps() && e.steps() <= depth + 3);
        }
    }

    #[test]
    fn cc_forest_laws(el in edge_lists()) {
        let g = build_csr(&el);
        let sf = cc_spanning_forest(&g, &mut Engine::sequential()).unwrap();
        let oracle = oracle_cc(&g);
        prop_assert_eq!(canonical_labels(&sf.labels), oracle.clone());
        let comps = oracle.iter().enumerate().filter(|&(v, &l)| v == l).count();
        prop_assert_eq!(sf.tree_edges.len(), g.num_vertices() - comps);
        let mut uf = UnionFind::new(g.num_vertices());
        for (u, v) in sf.edge_pairs(&g) {
            prop_assert!(uf.union(u, v), "tree edges contain a cycle");
        }
    }

    #[test]
    fn all_strategies_valid(el in edge_lists(), root_seed in any::<usize>()) {
        let g = build_csr(&el);
        let root = root_seed % g.num_vertices();
        let mut e = Engine::sequential();
        let sf = cc_spanning_forest(&g, &mut e).unwrap();
        let forests = [
            bfs_rst(&g, root, &mut e).unwrap(),
            root_forest(&g, &sf, Some(root), &mut e).unwrap(),
            pr_rst(&g, root, 5, &mut e).unwrap(),
        ];
        for f in forests {
            let v = validate_rooted_forest(&g, &f).unwrap();
            prop_assert!(v.ok, "{:?}", v.violations);
            prop_assert!(f.roots.contains(&root));
        }
    }

    #[test]
    fn euler_rooting_matches_dfs(n in 2usize..=256, seed in any::<u64>(), root_seed in any::<usize>()) {
        let g = tree(n, seed);
        let root = root_seed % n;
        let mut e = Engine::sequential();
        let sf = cc_spanning_forest(&g, &mut e).unwrap();
        let f = root_forest(&g, &sf, Some(root), &mut e).unwrap();
        prop_assert_eq!(f.parent, oracle_root(n, g.edges(), root).unwrap());
    }

    #[test]
    fn depth_matches_recursive_walk(seed in any::<u64>()) {
        let g = tree(64, seed);
        let parent = oracle_root(64, g.edges(), 0).unwrap();
        let expected = (0..64).map(|v| recursive_depth(&parent, v)).max().unwrap();
        prop_assert_eq!(forest_depth(&RootedForest::from_parents(parent)).unwrap().max, expected);
    }

    #[test]
    fn reversal_matches_sequential(n in 1usize..=256, seed in any::<u64>(), pick in any::<(usize, usize)>()) {
        let g = tree(n, seed);
        let root = pick.0 % n;
        let u = pick.1 % n;
        let parent = oracle_root(n, g.edges(), root).unwrap();

        let mut expected = parent.clone();
        let mut chain = vec![u];
        while parent[*chain.last().unwrap()] != *chain.last().unwrap() {
            chain.push(parent[*chain.last().unwrap()]);
        }
        for w in chain.windows(2) {
            expected[w[1]] = w[0];
        }
        expected[u] = u;

        let mut e = Engine::sequential();
        let mut st = PrState::from_parents(parent.clone(), &mut e).unwrap();
        for k in 0..st.special_anc.len() + 1 {
            for v in 0..n {
                let mut a = v;
                for _ in 0..(1usize << k.min(20)).min(n) {
                    a = parent[a];
                }
                prop_assert_eq!(st.ancestor(v, k), a);
            }
        }
        reverse_path(&mut st, u, root, &mut e).unwrap();
        prop_assert_eq!(st.parent, expected);
    }

    #[test]
    fn mutations_are_detected(n in 2usize..100, seed in any::<u64>(), pick in any::<(usize, usize)>()) {
        // On a tree graph every other parent choice breaks the forest.
        let g = tree(n, seed);
        let f = RootedForest::from_parents(oracle_root(n, g.edges(), 0).unwrap());
        let v = pick.0 % n;
        let w = pick.1 % n;
        prop_assume!(w != f.parent[v]);
        let mut bad = f.clone();
        bad.parent[v] = w;
        prop_assert!(!validate_rooted_forest(&g, &bad).unwrap().ok);
    }

    #[test]
    fn accepted_forests_reroot_to_same_partition(el in edge_lists()) {
        let g = build_csr(&el);
        let f = pr_rst(&g, 0, 5, &mut Engine::sequential()).unwrap();
        prop_assert!(validate_rooted_forest(&g, &f).unwrap().ok);
        let n = g.num_vertices();
        let edges: Vec<(usize, usize)> = (0..n).filter(|&v| f.parent[v] != v).map(|v| (v, f.parent[v])).collect();
        let (_, roots) = chain_roots(&f.parent).unwrap();
        let mut rerooted = vec![usize::MAX; n];
        for &r in &f.roots {
            let members: Vec<usize> = (0..n).filter(|&v| roots[v] == r).collect();
            let local = |v: usize| members.binary_search(&v).unwrap();
            let tree_edges: Vec<(usize, usize)> = edges
                .iter()
                .filter(|&&(a, _)| roots[a] == r)
                .map(|&(a, b)| (local(a), local(b)))
                .collect();
            oracle_root(members.len(), &tree_edges, local(r)).unwrap();
            for &v in &members {
                rerooted[v] = r;
            }
        }
        prop_assert_eq!(canonical_labels(&rerooted), oracle_cc(&g));
    }
}

#[test]
fn successor_cycle_of_random_tree() {
    let g = tree(64, 11);
    let mut e = Engine::sequential();
    let mut es = build_euler(64, g.edges(), &mut e).unwrap();
    compute_successor(&mut es, &mut e);
    let mut at = es.succ[0].unwrap();
    let mut len = 1;
    while at != 0 {
        at = es.succ[at].unwrap();
        len += 1;
    }
    assert_eq!(len, 126);
}

#[test]
fn cc_steps_logarithmic_on_paths() {
    let steps: Vec<u64> = (10..=14)
        .map(|k| {
            let g = build_csr(&generate(&GraphKind::Path(1 << k)).unwrap());
            let mut e = Engine::sequential();
            cc_spanning_forest(&g, &mut e).unwrap();
            e.steps()
        })
        .collect();
    let c = steps[0] as f64 / 10.0;
    for (k, s) in (10..=14).zip(&steps) {
        assert!(*s as f64 <= c * k as f64 * 1.2, "k={k} steps={s}");
    }
}

#[test]
fn jump_steps_bounded_by_log() {
    for len in [3usize, 17, 100, 1023, 4096] {
        let mut st = DisjointState { rep: (0..=len).map(|v| v.saturating_sub(1)).collect() };
        let steps = jump_to_convergence(&mut st, &mut Engine::sequential()).unwrap();
        let bound = (len as f64).log2().ceil() as u64 + 1;
        assert!(steps <= bound, "chain {len}: {steps} > {bound}");
    }
}
