//! Rooted spanning forests and their depth statistics.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Parent-array representation of a rooted spanning forest.
///
/// `parent[r] == r` exactly for the roots; every other vertex points to its
/// tree parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedForest {
    pub parent: Vec<usize>,
    /// Sorted ascending.
    pub roots: Vec<usize>,
    /// Hop distance from each vertex to its root, when the algorithm tracks it.
    pub levels: Option<Vec<usize>>,
}

impl RootedForest {
    /// Builds a forest whose roots are the self-loops of `parent`.
    pub fn from_parents(parent: Vec<usize>) -> Self {
        let roots = parent.iter().enumerate().filter(|&(v, &p)| v == p).map(|(v, _)| v).collect();
        Self { parent, roots, levels: None }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Number of tree edges, `n - #roots`.
    pub fn num_tree_edges(&self) -> usize {
        self.parent.len() - self.roots.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DepthStats {
    pub per_root: BTreeMap<usize, usize>,
    pub max: usize,
}

/// Hop distance from every vertex to the self-loop its parent chain ends at,
/// and that self-loop.
///
/// Chains are walked iteratively with memoization; a chain that revisits a
/// vertex of the current walk is reported as a cycle.
pub fn chain_roots(parent: &[usize]) -> Result<(Vec<usize>, Vec<usize>)> {
    const UNKNOWN: usize = usize::MAX;
    let n = parent.len();
    let mut depth = vec![UNKNOWN; n];
    let mut root = vec![UNKNOWN; n];
    let mut stamp = vec![usize::MAX; n];
    let mut chain = Vec::new();
    for start in 0..n {
        if depth[start] != UNKNOWN {
            continue;
        }
        chain.clear();
        let mut v = start;
        loop {
            if depth[v] != UNKNOWN {
                break;
            }
            if stamp[v] == start {
                return Err(Error::Cycle(v));
            }
            stamp[v] = start;
            let p = parent[v];
            if p >= n {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            if p == v {
                depth[v] = 0;
                root[v] = v;
                break;
            }
            chain.push(v);
            v = p;
        }
        let (mut d, r) = (depth[v], root[v]);
        for &u in chain.iter().rev() {
            d += 1;
            depth[u] = d;
            root[u] = r;
        }
    }
    Ok((depth, root))
}

/// Maximum parent-chain length per root, plus the overall maximum.
pub fn forest_depth(f: &RootedForest) -> Result<DepthStats> {
    let (depth, root) = chain_roots(&f.parent)?;
    let mut stats = DepthStats::default();
    for (&d, &r) in depth.iter().zip(&root) {
        let e = stats.per_root.entry(r).or_insert(0);
        *e = (*e).max(d);
        stats.max = stats.max.max(d);
    }
    Ok(stats)
}
