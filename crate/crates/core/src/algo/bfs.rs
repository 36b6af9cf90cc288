//! Level-synchronous BFS.
//!
//! Discovery slots hold packed `(level, discoverer)` pairs combined with min, so
//! the smallest-id frontier vertex wins each newly discovered vertex and
//! already-discovered vertices are never overwritten. A vertex is in the
//! frontier of level `k` iff its slot carries level `k`; one barrier per level.

use super::{check_vertex, RstAlgorithm};
use crate::engine::{pack, unpack, Engine, Flag, Slots, NIL};
use crate::error::Result;
use crate::forest::RootedForest;
use crate::graph::Graph;

pub const NAME: &str = "bfs";

#[derive(Debug, Clone, Copy, Default)]
pub struct Bfs {
    pub workers: usize,
}

impl RstAlgorithm for Bfs {
    fn name(&self) -> &'static str {
        NAME
    }

    fn construct(&self, g: &Graph, root: usize, engine: &mut Engine) -> Result<RootedForest> {
        bfs_rst(g, root, engine)
    }

    fn workers(&self) -> usize {
        self.workers
    }
}

/// BFS forest: `root`'s component first, then each remaining component from
/// its smallest unvisited vertex. Levels are hop distances to each tree's root.
pub fn bfs_rst(g: &Graph, root: usize, engine: &mut Engine) -> Result<RootedForest> {
    check_vertex(g, root)?;
    let n = g.num_vertices();
    let found = Slots::new(n, NIL);
    // Levels are numbered globally across restarts; `bases` holds the first
    // level of each tree so per-tree depths can be recovered.
    let mut bases = Vec::new();
    let mut roots = Vec::new();
    let mut level = 0usize;
    let mut source = Some(root);

    while let Some(s) = source {
        found.set(s, pack(level, s));
        bases.push(level);
        roots.push(s);
        loop {
            let grew = Flag::new();
            engine.step(n, |u| {
                let (l, _) = unpack(found.get(u));
                if found.get(u) == NIL || l != level {
                    return;
                }
                let claim = pack(level + 1, u);
                for &v in g.neighbors(u) {
                    if found.min(v, claim) {
                        grew.raise();
                    }
                }
            });
            level += 1;
            if !grew.is_raised() {
                break;
            }
        }
        let next = Slots::new(1, NIL);
        engine.step(n, |v| {
            if found.get(v) == NIL {
                next.min(0, v as u64);
            }
        });
        source = crate::engine::slot(next.get(0));
    }

    let found = found.into_vec();
    let mut parent = vec![0; n];
    let mut levels = vec![0; n];
    for v in 0..n {
        let (l, p) = unpack(found[v]);
        parent[v] = p;
        let tree = bases.partition_point(|&b| b <= l) - 1;
        levels[v] = l - bases[tree];
    }
    roots.sort_unstable();
    Ok(RootedForest { parent, roots, levels: Some(levels) })
}
