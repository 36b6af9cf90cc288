//! Connectivity by alternating hooking and pointer jumping, recording the
//! hooking edges as an unrooted spanning forest.

use crate::engine::{pack, slot, unpack, Engine, Flag, Slots, NIL};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HookMode {
    /// Hook the larger root under the smaller.
    Min,
    /// Hook the smaller root under the larger.
    Max,
}

impl HookMode {
    pub fn flipped(self) -> Self {
        match self {
            HookMode::Min => HookMode::Max,
            HookMode::Max => HookMode::Min,
        }
    }

    /// `(hooked root, target root)` for two distinct roots.
    pub fn orient(self, a: usize, b: usize) -> (usize, usize) {
        match self {
            HookMode::Min => (a.max(b), a.min(b)),
            HookMode::Max => (a.min(b), a.max(b)),
        }
    }
}

/// Union structure over vertices: `rep[v]` is `v`'s current representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointState {
    pub rep: Vec<usize>,
}

impl DisjointState {
    pub fn singletons(n: usize) -> Self {
        Self { rep: (0..n).collect() }
    }

    pub fn check_compressed(&self) -> Result<()> {
        match (0..self.rep.len()).find(|&v| self.rep[self.rep[v]] != self.rep[v]) {
            Some(v) => Err(Error::Uncompressed(v)),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HookOutcome {
    pub changed: bool,
    /// `(hooked root, winning edge id)`, ascending by root.
    pub winners: Vec<(usize, usize)>,
}

/// Per-root winning candidate over all cross-component edges: the
/// lexicographically smallest `(target root, edge id)`. One step over edges.
/// Returns packed candidates indexed by hooked root.
pub(crate) fn hook_candidates(g: &Graph, rep: &[usize], mode: HookMode, engine: &mut Engine) -> Vec<u64> {
    let best = Slots::new(rep.len(), NIL);
    engine.step(g.num_edges(), |e| {
        let (u, v) = g.edge(e);
        let (ru, rv) = (rep[u], rep[v]);
        if ru != rv {
            let (hooked, target) = mode.orient(ru, rv);
            best.min(hooked, pack(target, e));
        }
    });
    best.into_vec()
}

/// One hooking round on a compressed state. Roots only are re-pointed, all in
/// the same direction, so no cycle can form.
pub fn hook_step(g: &Graph, st: &mut DisjointState, mode: HookMode, engine: &mut Engine) -> Result<HookOutcome> {
    if cfg!(debug_assertions) {
        st.check_compressed()?;
    }
    let best = hook_candidates(g, &st.rep, mode, engine);
    let changed = Flag::new();
    let rep = &st.rep;
    st.rep = engine.map(rep.len(), |r| match slot(best[r]) {
        Some(_) => {
            changed.raise();
            unpack(best[r]).0
        }
        None => rep[r],
    });
    let winners = best.iter().enumerate().filter(|(_, &b)| b != NIL).map(|(r, &b)| (r, unpack(b).1)).collect();
    Ok(HookOutcome { changed: changed.is_raised(), winners })
}

/// Synchronous pointer jumping `rep[v] <- rep[rep[v]]` until every vertex
/// points at a root. Returns the number of jump steps (at least one).
pub fn jump_to_convergence(st: &mut DisjointState, engine: &mut Engine) -> Result<u64> {
    let n = st.rep.len();
    let bound = ceil_log2(n) + 2;
    let mut rounds = 0;
    loop {
        let pending = Flag::new();
        let rep = &st.rep;
        st.rep = engine.map(n, |v| {
            let p = rep[rep[v]];
            if rep[p] != p {
                pending.raise();
            }
            p
        });
        rounds += 1;
        if !pending.is_raised() {
            return Ok(rounds);
        }
        if rounds > bound {
            let v = (0..n).find(|&v| st.rep[v] != v).unwrap_or(0);
            return Err(Error::Cycle(v));
        }
    }
}

/// Unrooted spanning forest plus component labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningForest {
    /// Ascending undirected edge ids.
    pub tree_edges: Vec<usize>,
    /// Converged representatives; equal iff connected.
    pub labels: Vec<usize>,
}

impl SpanningForest {
    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_components(&self) -> usize {
        self.labels.iter().enumerate().filter(|&(v, &l)| v == l).count()
    }

    pub fn edge_pairs(&self, g: &Graph) -> Vec<(usize, usize)> {
        self.tree_edges.iter().map(|&e| g.edge(e)).collect()
    }
}

/// Alternates min and max hooking (min first) with full compression until a
/// hooking round changes nothing.
pub fn cc_spanning_forest(g: &Graph, engine: &mut Engine) -> Result<SpanningForest> {
    let mut st = DisjointState::singletons(g.num_vertices());
    let mut tree_edges = Vec::new();
    let mut mode = HookMode::Min;
    loop {
        let out = hook_step(g, &mut st, mode, engine)?;
        if !out.changed {
            break;
        }
        tree_edges.extend(out.winners.iter().map(|&(_, e)| e));
        jump_to_convergence(&mut st, engine)?;
        mode = mode.flipped();
    }
    tree_edges.sort_unstable();
    Ok(SpanningForest { tree_edges, labels: st.rep })
}

pub(crate) fn ceil_log2(x: usize) -> u64 {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_csr, generate, EdgeList, GraphKind};
    use crate::validate::{canonical_labels, oracle_cc};

    fn g(edges: &[(usize, usize)], n: usize) -> Graph {
        build_csr(&EdgeList::new(n, edges.iter().copied()).unwrap())
    }

    #[test]
    fn hook_path_min() {
        let g = g(&[(0, 1), (1, 2)], 3);
        let mut st = DisjointState::singletons(3);
        let out = hook_step(&g, &mut st, HookMode::Min, &mut Engine::sequential()).unwrap();
        assert_eq!(st.rep, vec![0, 0, 1]);
        assert!(out.changed);
        assert_eq!(out.winners, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn hook_single_component_is_noop() {
        let g = g(&[(0, 1), (1, 2)], 3);
        let mut st = DisjointState { rep: vec![0, 0, 0] };
        let out = hook_step(&g, &mut st, HookMode::Max, &mut Engine::sequential()).unwrap();
        assert!(!out.changed);
        assert!(out.winners.is_empty());
    }

    #[test]
    fn hook_star_takes_min_edge_per_root() {
        let g = g(&[(0, 1), (0, 2)], 3);
        let mut st = DisjointState::singletons(3);
        let out = hook_step(&g, &mut st, HookMode::Min, &mut Engine::sequential()).unwrap();
        assert_eq!(st.rep, vec![0, 0, 0]);
        assert_eq!(out.winners, vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn hook_contested_root_lexicographic() {
        // root 3 sees candidates (0, e0) via (0,3), (1, e1) via (1,3), (2, e2) via (2,3)
        let g = g(&[(0, 3), (1, 3), (2, 3)], 4);
        let mut st = DisjointState::singletons(4);
        let out = hook_step(&g, &mut st, HookMode::Min, &mut Engine::sequential()).unwrap();
        assert_eq!(out.winners, vec![(3, 0)]);
        assert_eq!(st.rep, vec![0, 1, 2, 0]);
        // max mode: roots 0, 1, 2 each hook onto 3
        let mut st = DisjointState::singletons(4);
        let out = hook_step(&g, &mut st, HookMode::Max, &mut Engine::sequential()).unwrap();
        assert_eq!(out.winners, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(st.rep, vec![3, 3, 3, 3]);
    }

    #[cfg(debug_assertions)]
    #[test]
    fn hook_rejects_uncompressed() {
        let g = g(&[(0, 1), (1, 2)], 3);
        let mut st = DisjointState { rep: vec![0, 0, 1] };
        assert!(matches!(
            hook_step(&g, &mut st, HookMode::Min, &mut Engine::sequential()),
            Err(Error::Uncompressed(2))
        ));
    }

    #[test]
    fn jump_chain_of_three() {
        let mut st = DisjointState { rep: vec![0, 0, 1, 2] };
        let steps = jump_to_convergence(&mut st, &mut Engine::sequential()).unwrap();
        assert_eq!(st.rep, vec![0; 4]);
        assert!(steps <= 2, "{steps}");
    }

    #[test]
    fn jump_star_one_step() {
        let mut st = DisjointState { rep: vec![0, 0, 0] };
        assert_eq!(jump_to_convergence(&mut st, &mut Engine::sequential()).unwrap(), 1);
        assert_eq!(st.rep, vec![0, 0, 0]);
    }

    #[test]
    fn jump_long_chain() {
        let mut st = DisjointState { rep: (0..1024).map(|v: usize| v.saturating_sub(1)).collect() };
        let steps = jump_to_convergence(&mut st, &mut Engine::sequential()).unwrap();
        assert!(st.rep.iter().all(|&r| r == 0));
        assert!(steps <= 11, "{steps}");
    }

    #[test]
    fn jump_detects_cycle() {
        let mut st = DisjointState { rep: vec![1, 2, 0] };
        assert!(matches!(jump_to_convergence(&mut st, &mut Engine::sequential()), Err(Error::Cycle(_))));
    }

    #[test]
    fn forest_of_path() {
        let g = build_csr(&generate(&GraphKind::Path(5)).unwrap());
        let sf = cc_spanning_forest(&g, &mut Engine::sequential()).unwrap();
        assert_eq!(sf.tree_edges, vec![0, 1, 2, 3]);
        assert_eq!(sf.num_components(), 1);
    }

    #[test]
    fn forest_of_two_triangles() {
        let g = g(&[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)], 6);
        let sf = cc_spanning_forest(&g, &mut Engine::sequential()).unwrap();
        assert_eq!(sf.tree_edges.len(), 4);
        assert_eq!(sf.num_components(), 2);
        assert_eq!(canonical_labels(&sf.labels), oracle_cc(&g));
    }

    #[test]
    fn forest_of_random_graph() {
        let g = build_csr(&generate(&GraphKind::Random { n: 2000, p: 0.005, seed: 1 }).unwrap());
        let sf = cc_spanning_forest(&g, &mut Engine::sequential()).unwrap();
        let oracle = oracle_cc(&g);
        assert_eq!(canonical_labels(&sf.labels), oracle);
        let comps = oracle.iter().enumerate().filter(|&(v, &l)| v == l).count();
        assert_eq!(sf.tree_edges.len(), 2000 - comps);
    }

    #[test]
    fn log2() {
        assert_eq!([1, 2, 3, 4, 5, 1024, 1025].map(ceil_log2), [0, 1, 2, 2, 3, 10, 11]);
    }
}
