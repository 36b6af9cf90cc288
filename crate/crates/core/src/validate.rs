//! Sequential ground-truth oracles and the rooted-forest validator.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::forest::{chain_roots, RootedForest};
use crate::graph::Graph;

/// Sequential union-find with path halving and union by smaller id.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if `a` and `b` were already connected.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        self.parent[hi] = lo;
        true
    }
}

/// Component labels, each the smallest vertex id of its component.
pub fn oracle_cc(g: &Graph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut uf = UnionFind::new(n);
    for &(u, v) in g.edges() {
        uf.union(u, v);
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// Relabels any labeling to smallest-member labels so partitions compare with `==`.
pub fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut first: BTreeMap<usize, usize> = BTreeMap::new();
    labels.iter().enumerate().map(|(v, &l)| *first.entry(l).or_insert(v)).collect()
}

/// Roots the tree formed by `edges` at `root` by depth-first traversal.
///
/// The edges must form one spanning tree over `0..n`.
pub fn oracle_root(n: usize, edges: &[(usize, usize)], root: usize) -> Result<Vec<usize>> {
    if root >= n {
        return Err(Error::VertexOutOfRange { vertex: root, n });
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    const UNSEEN: usize = usize::MAX;
    let mut parent = vec![UNSEEN; n];
    parent[root] = root;
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        let mut skipped_parent = false;
        for &v in &adj[u] {
            if v == parent[u] && u != root && !skipped_parent {
                skipped_parent = true;
                continue;
            }
            if parent[v] != UNSEEN {
                return Err(Error::NotAForest(u, v));
            }
            parent[v] = u;
            stack.push(v);
        }
    }
    if let Some(v) = parent.iter().position(|&p| p == UNSEEN) {
        return Err(Error::Corrupt(format!("vertex {v} is not connected to root {root}")));
    }
    Ok(parent)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rule {
    /// A declared root without a self-loop, or a self-loop that is not declared.
    RootSelfLoop,
    /// `(v, parent[v])` is not an edge of the graph.
    NonEdge,
    /// A parent chain never reaches a root.
    Cycle,
    /// A connected component with zero or several roots.
    RootsPerComponent,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::RootSelfLoop => "root-self-loop",
            Rule::NonEdge => "non-edge",
            Rule::Cycle => "cycle",
            Rule::RootsPerComponent => "roots-per-component",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    /// Vertex the violation was found at.
    pub at: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub components_found: usize,
    /// Empty when the parent array is cyclic.
    pub depth_per_root: BTreeMap<usize, usize>,
}

impl ValidationReport {
    pub fn max_depth(&self) -> usize {
        self.depth_per_root.values().copied().max().unwrap_or(0)
    }
}

/// Checks `f` against the definition of a rooted spanning forest of `g`.
pub fn validate_rooted_forest(g: &Graph, f: &RootedForest) -> Result<ValidationReport> {
    let n = g.num_vertices();
    if f.parent.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: f.parent.len() });
    }
    let mut violations = Vec::new();
    let mut push = |rule, at, message: String| violations.push(Violation { rule, at, message });

    let mut declared = vec![false; n];
    for &r in &f.roots {
        if r >= n {
            push(Rule::RootSelfLoop, r, format!("declared root {r} out of range"));
            continue;
        }
        declared[r] = true;
        if f.parent[r] != r {
            push(Rule::RootSelfLoop, r, format!("root {r} has parent {}", f.parent[r]));
        }
    }
    for (v, &p) in f.parent.iter().enumerate() {
        if p == v {
            if !declared[v] {
                push(Rule::RootSelfLoop, v, format!("undeclared self-loop at {v}"));
            }
        } else if p >= n || !g.has_edge(v, p) {
            push(Rule::NonEdge, v, format!("({v}, {p}) is not an edge"));
        }
    }

    let labels = oracle_cc(g);
    let components_found = labels.iter().enumerate().filter(|&(v, &l)| v == l).count();

    let mut depth_per_root = BTreeMap::new();
    match chain_roots(&f.parent) {
        Ok((depth, root)) => {
            for v in 0..n {
                let e = depth_per_root.entry(root[v]).or_insert(0);
                *e = (*e).max(depth[v]);
            }
            let mut roots_in = vec![0usize; n];
            for v in 0..n {
                if f.parent[v] == v {
                    roots_in[labels[v]] += 1;
                }
            }
            for c in (0..n).filter(|&c| labels[c] == c) {
                if roots_in[c] != 1 {
                    push(
                        Rule::RootsPerComponent,
                        c,
                        format!("component of {c} has {} roots", roots_in[c]),
                    );
                }
            }
        }
        Err(Error::Cycle(v)) => push(Rule::Cycle, v, format!("parent chain through {v} is cyclic")),
        Err(Error::VertexOutOfRange { vertex, .. }) => {
            push(Rule::Cycle, vertex, format!("parent chain leaves the graph at {vertex}"))
        }
        Err(e) => return Err(e),
    }

    Ok(ValidationReport { ok: violations.is_empty(), violations, components_found, depth_per_root })
}
