//! Path-reversal rooted spanning trees.
//!
//! Connectivity and rooting are done together. The state is a rooted forest
//! (`parent`) whose tree roots double as component representatives. Each round:
//!
//! 1. **graft**: every tree that finds a cross edge picks one winning edge
//!    `(u, b)` with `u` in the tree, min and max hooking alternating by round;
//! 2. **mark**: the `u -> root` path of each grafting tree is marked using the
//!    special-ancestor table (ancestors at power-of-two distances);
//! 3. **reverse**: every marked edge is flipped in one step, making `u` the
//!    root of its tree, and `u` is hung under `b`;
//! 4. **jump**: pointer jumping over a copy of `parent` finds the new roots,
//!    several jumps per barrier. The intermediate pointer arrays are recorded;
//!    they are exactly the special-ancestor table for the next round.
//!
//! The loop ends when no tree grafts. A final mark-and-reverse moves the root of
//! the designated vertex's tree onto it.

use super::cc::{ceil_log2, hook_candidates, HookMode};
use super::{check_vertex, RstAlgorithm};
use crate::engine::{slot, unpack, Engine, Flag, Slots, NIL};
use crate::error::{Error, Result};
use crate::forest::{chain_roots, RootedForest};
use crate::graph::Graph;

pub const NAME: &str = "pr-rst";
pub const DEFAULT_JUMP_BATCH: usize = 5;

#[derive(Debug, Clone, Copy)]
pub struct PrRst {
    pub jump_batch: usize,
    pub workers: usize,
}

impl Default for PrRst {
    fn default() -> Self {
        Self { jump_batch: DEFAULT_JUMP_BATCH, workers: 1 }
    }
}

impl RstAlgorithm for PrRst {
    fn name(&self) -> &'static str {
        NAME
    }

    fn construct(&self, g: &Graph, root: usize, engine: &mut Engine) -> Result<RootedForest> {
        pr_rst(g, root, self.jump_batch, engine)
    }

    fn workers(&self) -> usize {
        self.workers
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrState {
    pub parent: Vec<usize>,
    /// Tree root of each vertex as of the last jump phase.
    pub rep: Vec<usize>,
    /// Index of the path a vertex is marked on, during a round.
    pub on_path: Vec<Option<usize>>,
    /// `special_anc[k][v]`: ancestor of `v` at distance `2^k`, clamped at the
    /// root. The last level maps every vertex to its root.
    pub special_anc: Vec<Vec<usize>>,
}

impl PrState {
    /// `n` singleton trees.
    pub fn singletons(n: usize) -> Self {
        let id: Vec<usize> = (0..n).collect();
        Self { parent: id.clone(), rep: id.clone(), on_path: vec![None; n], special_anc: vec![id] }
    }

    /// State over an existing forest, with representatives and ancestors built.
    pub fn from_parents(parent: Vec<usize>, engine: &mut Engine) -> Result<Self> {
        let n = parent.len();
        let mut st = Self { parent, rep: Vec::new(), on_path: vec![None; n], special_anc: Vec::new() };
        batched_jump(&mut st, usize::MAX, engine)?;
        Ok(st)
    }

    pub fn num_vertices(&self) -> usize {
        self.parent.len()
    }

    /// Ancestor of `v` at distance `2^k`, clamped at the root.
    pub fn ancestor(&self, v: usize, k: usize) -> usize {
        let level = k.min(self.special_anc.len() - 1);
        self.special_anc[level][v]
    }
}

/// A tree joining another: `vertex` (in the tree rooted at `root`) is hung under
/// `partner` across undirected edge `edge`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Graft {
    pub vertex: usize,
    pub root: usize,
    pub partner: usize,
    pub edge: usize,
}

/// One grafting round. Per grafting tree root, the winner is the
/// lexicographically smallest `(target root, edge id)` among cross edges whose
/// target is smaller (min mode) or larger (max mode).
pub fn graft_round(g: &Graph, st: &mut PrState, mode: HookMode, engine: &mut Engine) -> Vec<Graft> {
    let best = hook_candidates(g, &st.rep, mode, engine);
    let rep = &st.rep;
    let picked = engine.map(rep.len(), |r| {
        let (target, edge) = match slot(best[r]) {
            Some(_) => unpack(best[r]),
            None => return (rep[r], None),
        };
        let (a, b) = g.edge(edge);
        let (vertex, partner) = if rep[a] == r { (a, b) } else { (b, a) };
        (target, Some(Graft { vertex, root: r, partner, edge }))
    });
    let (rep, grafts): (Vec<usize>, Vec<Option<Graft>>) = picked.into_iter().unzip();
    st.rep = rep;
    grafts.into_iter().flatten().collect()
}

/// Marks the `bottom -> root` chain of every `(bottom, root)` pair, tagging each
/// vertex with its pair index. Round `k` extends every mark by the ancestor at
/// distance `2^k`, so after `k` rounds each mark covers the `2^k` nearest
/// vertices of its chain; rounds stop once every root is marked.
pub fn mark_paths(st: &mut PrState, paths: &[(usize, usize)], engine: &mut Engine) -> Result<()> {
    let n = st.num_vertices();
    let lo = Slots::new(n, NIL);
    let hi = Slots::new(n, 0);
    for (i, &(u, _)) in paths.iter().enumerate() {
        lo.min(u, i as u64);
        hi.max(u, i as u64);
    }
    let done = |lo: &Slots| paths.iter().all(|&(_, r)| lo.get(r) != NIL);
    let limit = st.special_anc.len() + 1;
    let mut k = 0;
    while !done(&lo) {
        if k >= limit {
            let (u, r) = paths.iter().copied().find(|&(_, r)| lo.get(r) == NIL).expect("some root unmarked");
            return Err(Error::Corrupt(format!("{r} is not an ancestor of {u}")));
        }
        let snapshot: Vec<u64> = (0..n).map(|v| lo.get(v)).collect();
        let s = &*st;
        engine.step(n, |x| {
            if let Some(i) = slot(snapshot[x]) {
                let a = s.ancestor(x, k);
                lo.min(a, i as u64);
                hi.max(a, i as u64);
            }
        });
        k += 1;
    }
    let (lo, hi) = (lo.into_vec(), hi.into_vec());
    if let Some(v) = (0..n).find(|&v| lo[v] != NIL && lo[v] != hi[v]) {
        return Err(Error::Corrupt(format!("reversal paths overlap at vertex {v}")));
    }
    st.on_path = lo.into_iter().map(slot).collect();
    Ok(())
}

/// Flips every marked chain in one step: each marked non-root `x` becomes the
/// parent of its old parent. The bottom of path `i` is then hung under
/// `attach[i]`, or becomes a root when that is `None`. Clears the marks.
pub fn reverse_paths(st: &mut PrState, bottoms: &[usize], attach: &[Option<usize>], engine: &mut Engine) {
    let n = st.num_vertices();
    let next = Slots::from_values(st.parent.iter().map(|&p| p as u64).collect::<Vec<_>>());
    let s = &*st;
    engine.step(n, |x| {
        let Some(i) = s.on_path[x] else { return };
        let p = s.parent[x];
        if p != x {
            next.set(p, x as u64);
        }
        if bottoms[i] == x {
            next.set(x, attach[i].unwrap_or(x) as u64);
        }
    });
    st.parent = next.into_vec().into_iter().map(|p| p as usize).collect();
    st.on_path.iter_mut().for_each(|m| *m = None);
}

/// Single-pair convenience over [`mark_paths`] and [`reverse_paths`]: reroots
/// the tree containing `u` (currently rooted at `r`) at `u`.
pub fn reverse_path(st: &mut PrState, u: usize, r: usize, engine: &mut Engine) -> Result<()> {
    mark_paths(st, &[(u, r)], engine)?;
    reverse_paths(st, &[u], &[None], engine);
    Ok(())
}

/// Pointer jumping over a copy of `parent` until every pointer reaches a root,
/// `batch` jumps per barrier. Records every intermediate pointer array as
/// `special_anc` and the converged one as `rep`.
pub fn batched_jump(st: &mut PrState, batch: usize, engine: &mut Engine) -> Result<()> {
    let n = st.num_vertices();
    let batch = batch.max(1);
    let bound = ceil_log2(n) as usize + 2;
    let parent = &st.parent;
    let mut levels = vec![parent.clone()];
    let mut done = false;
    while !done {
        let cyclic = engine.fused(|e| {
            for _ in 0..batch {
                let cur = levels.last().expect("level 0 present");
                let pending = Flag::new();
                let jumped = e.map(n, |v| {
                    let a = cur[cur[v]];
                    if parent[a] != a {
                        pending.raise();
                    }
                    a
                });
                levels.push(jumped);
                if !pending.is_raised() {
                    done = true;
                    return false;
                }
                if levels.len() > bound + 1 {
                    return true;
                }
            }
            false
        });
        if cyclic {
            let v = (0..n).find(|&v| parent[v] != v).unwrap_or(0);
            return Err(Error::Cycle(v));
        }
    }
    st.rep = levels.last().expect("nonempty").clone();
    st.special_anc = levels;
    Ok(())
}

/// Checks that `parent` is acyclic; used between rounds in debug builds.
fn check_forest(st: &PrState) -> Result<()> {
    chain_roots(&st.parent).map(|_| ())
}

pub fn pr_rst(g: &Graph, root: usize, jump_batch: usize, engine: &mut Engine) -> Result<RootedForest> {
    check_vertex(g, root)?;
    let mut st = PrState::singletons(g.num_vertices());
    let mut mode = HookMode::Min;
    loop {
        let grafts = graft_round(g, &mut st, mode, engine);
        if grafts.is_empty() {
            break;
        }
        let paths: Vec<(usize, usize)> = grafts.iter().map(|gr| (gr.vertex, gr.root)).collect();
        let bottoms: Vec<usize> = grafts.iter().map(|gr| gr.vertex).collect();
        let attach: Vec<Option<usize>> = grafts.iter().map(|gr| Some(gr.partner)).collect();
        mark_paths(&mut st, &paths, engine)?;
        reverse_paths(&mut st, &bottoms, &attach, engine);
        if cfg!(debug_assertions) {
            check_forest(&st)?;
        }
        batched_jump(&mut st, jump_batch, engine)?;
        mode = mode.flipped();
    }
    let top = st.rep[root];
    if top != root {
        reverse_path(&mut st, root, top, engine)?;
    }
    Ok(RootedForest::from_parents(st.parent))
}
