//! Rooting an unrooted spanning forest with the Euler-tour technique.
//!
//! Undirected tree edge `i` of `k` becomes directed edges `i` and `i + k`, so
//! the reverse of `e` is `(e + E/2) mod E` with `E = 2k`. Sorting the directed
//! edges by `(from, to)` only yields a permutation from which the per-vertex
//! `first`/`last`/`next` links are read; edges are never relocated.
//!
//! The tour successor of `e = (u -> v)` is the edge after `rev(e)` in `v`'s
//! list, wrapping to `first[v]`. Each tree's tour is cut at its root by
//! clearing the successor of `rev(last[r])`, the chains are list-ranked from
//! their heads, and in each pair `(e, rev(e))` the later edge is the return
//! traversal: if it is `u -> v`, then `parent[u] = v`.

use super::cc::{cc_spanning_forest, ceil_log2, SpanningForest};
use super::{check_vertex, RstAlgorithm};
use crate::engine::{slot, Engine, Flag, Slots, NIL};
use crate::error::{Error, Result};
use crate::forest::RootedForest;
use crate::graph::Graph;
use crate::validate::UnionFind;

pub const NAME: &str = "cc-euler";

/// Connectivity followed by Euler-tour rooting.
#[derive(Debug, Clone, Copy, Default)]
pub struct CcEuler {
    pub workers: usize,
}

impl RstAlgorithm for CcEuler {
    fn name(&self) -> &'static str {
        NAME
    }

    fn construct(&self, g: &Graph, root: usize, engine: &mut Engine) -> Result<RootedForest> {
        check_vertex(g, root)?;
        let sf = cc_spanning_forest(g, engine)?;
        root_forest(g, &sf, Some(root), engine)
    }

    fn workers(&self) -> usize {
        self.workers
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerStructure {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub first: Vec<Option<usize>>,
    pub last: Vec<Option<usize>>,
    pub next: Vec<Option<usize>>,
    pub succ: Vec<Option<usize>>,
    pub rank: Vec<usize>,
}

impl EulerStructure {
    pub fn num_edges(&self) -> usize {
        self.from.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.first.len()
    }

    pub fn rev(&self, e: usize) -> usize {
        let m = self.num_edges();
        (e + m / 2) % m
    }
}

fn opt(v: u64) -> Option<usize> {
    slot(v)
}

/// Doubles the forest edges and links each vertex's out-edges in `(from, to)` order.
pub fn build_euler(n: usize, edges: &[(usize, usize)], engine: &mut Engine) -> Result<EulerStructure> {
    let mut uf = UnionFind::new(n);
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        if !uf.union(u, v) {
            return Err(Error::NotAForest(u, v));
        }
    }
    let k = edges.len();
    let m = 2 * k;
    let from: Vec<usize> = edges.iter().map(|e| e.0).chain(edges.iter().map(|e| e.1)).collect();
    let to: Vec<usize> = edges.iter().map(|e| e.1).chain(edges.iter().map(|e| e.0)).collect();

    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&e| (from[e], to[e]));
    engine.charge(ceil_log2(m), m as u64);

    let first = Slots::new(n, NIL);
    let last = Slots::new(n, NIL);
    let next = Slots::new(m, NIL);
    engine.step(m, |p| {
        let e = order[p];
        let src = from[e];
        if p == 0 || from[order[p - 1]] != src {
            first.set(src, e as u64);
        }
        match order.get(p + 1) {
            Some(&f) if from[f] == src => next.set(e, f as u64),
            _ => last.set(src, e as u64),
        }
    });

    Ok(EulerStructure {
        from,
        to,
        first: first.into_vec().into_iter().map(opt).collect(),
        last: last.into_vec().into_iter().map(opt).collect(),
        next: next.into_vec().into_iter().map(opt).collect(),
        succ: vec![None; m],
        rank: vec![0; m],
    })
}

/// `succ(e) = next(rev(e))`, or `first(from(rev(e)))` when that is empty.
pub fn compute_successor(es: &mut EulerStructure, engine: &mut Engine) {
    let m = es.num_edges();
    let s = &*es;
    let succ = engine.map(m, |e| {
        let r = s.rev(e);
        s.next[r].or(s.first[s.from[r]])
    });
    es.succ = succ;
}

/// Cuts every tour at its root so each tree becomes one chain starting at
/// `first[r]`. Roots without edges are singleton trees and are skipped.
pub fn break_cycles(es: &mut EulerStructure, roots: &[usize], engine: &mut Engine) -> Result<()> {
    let n = es.num_vertices();
    let mut roots = roots.to_vec();
    roots.sort_unstable();
    roots.dedup();
    if let Some(&r) = roots.iter().find(|&&r| r >= n) {
        return Err(Error::VertexOutOfRange { vertex: r, n });
    }
    // In a forest, nonsingleton trees = non-isolated vertices - undirected edges.
    let touched = es.first.iter().filter(|f| f.is_some()).count();
    let trees = touched - es.num_edges() / 2;
    let rooted = roots.iter().filter(|&&r| es.first[r].is_some()).count();
    if rooted != trees {
        return Err(Error::Corrupt(format!("{rooted} roots given for {trees} nonsingleton trees")));
    }

    let cut = Slots::new(es.num_edges(), 0);
    let s = &*es;
    engine.step(roots.len(), |i| {
        if let Some(l) = s.last[roots[i]] {
            cut.set(s.rev(l), 1);
        }
    });
    for (e, c) in cut.into_vec().into_iter().enumerate() {
        if c == 1 {
            es.succ[e] = None;
        }
    }
    Ok(())
}

/// Head-based ranks by pointer jumping over predecessor links with distance
/// accumulation.
pub fn list_rank(es: &mut EulerStructure, engine: &mut Engine) -> Result<()> {
    let m = es.num_edges();
    let pred = Slots::new(m, NIL);
    let succ = &es.succ;
    engine.step(m, |e| {
        if let Some(s) = succ[e] {
            pred.set(s, e as u64);
        }
    });
    let mut link: Vec<Option<usize>> = pred.into_vec().into_iter().map(opt).collect();
    let mut dist: Vec<usize> = link.iter().map(|p| usize::from(p.is_some())).collect();

    let bound = ceil_log2(m) + 2;
    let mut rounds = 0;
    while link.iter().any(Option::is_some) {
        if rounds > bound {
            let e = link.iter().position(Option::is_some).unwrap_or(0);
            return Err(Error::Corrupt(format!("successor links still cyclic at edge {e}")));
        }
        let pending = Flag::new();
        let (l, d) = (&link, &dist);
        let jumped = engine.map(m, |e| match l[e] {
            Some(p) => {
                if l[p].is_some() {
                    pending.raise();
                }
                (d[e] + d[p], l[p])
            }
            None => (d[e], None),
        });
        (dist, link) = jumped.into_iter().unzip();
        rounds += 1;
        if !pending.is_raised() {
            break;
        }
    }
    es.rank = dist;
    Ok(())
}

/// Reads parents off ranked tours. Vertices without tree edges root themselves.
pub fn derive_parents(es: &EulerStructure, engine: &mut Engine) -> Result<RootedForest> {
    let n = es.num_vertices();
    let k = es.num_edges() / 2;
    let parent = Slots::from_values((0..n as u64).collect::<Vec<_>>());
    let tie = Slots::new(1, NIL);
    engine.step(k, |a| {
        let b = a + k;
        let ret = match es.rank[a].cmp(&es.rank[b]) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => {
                tie.min(0, a as u64);
                return;
            }
        };
        parent.set(es.from[ret], es.to[ret] as u64);
    });
    if let Some(e) = slot(tie.get(0)) {
        return Err(Error::Corrupt(format!("edge {e} and its reverse share a rank")));
    }
    Ok(RootedForest::from_parents(parent.into_vec().into_iter().map(|p| p as usize).collect()))
}

/// Roots each component of `sf` at its smallest vertex, except the component
/// of `designated`, which is rooted there.
pub fn root_forest(
    g: &Graph,
    sf: &SpanningForest,
    designated: Option<usize>,
    engine: &mut Engine,
) -> Result<RootedForest> {
    let n = sf.num_vertices();
    if let Some(d) = designated {
        check_vertex(g, d)?;
    }
    let labels = &sf.labels;
    let smallest = Slots::new(n, NIL);
    engine.step(n, |v| {
        smallest.min(labels[v], v as u64);
    });
    let smallest = smallest.into_vec();
    let roots: Vec<usize> = (0..n)
        .filter(|&c| labels[c] == c)
        .map(|c| match designated {
            Some(d) if labels[d] == c => d,
            _ => smallest[c] as usize,
        })
        .collect();

    let mut es = build_euler(n, &sf.edge_pairs(g), engine)?;
    compute_successor(&mut es, engine);
    break_cycles(&mut es, &roots, engine)?;
    list_rank(&mut es, engine)?;
    derive_parents(&es, engine)
}
