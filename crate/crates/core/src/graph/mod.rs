//! Undirected graphs: ingestion, normalization, CSR layout and synthetic generators.

mod generate;
mod load;

pub use generate::{generate, GraphKind};
pub use load::{load_edge_list, load_edge_list_with, LoadOptions};

use std::io::Write;

use crate::error::{Error, Result};

/// A normalized undirected edge set.
///
/// Every edge is stored as `(u, v)` with `u < v`; the list is sorted and free of
/// self-loops and duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    original_ids: Option<Vec<u64>>,
}

impl EdgeList {
    /// Normalizes `edges` over `num_vertices` vertices: endpoints are ordered,
    /// self-loops dropped, duplicates collapsed.
    pub fn new(num_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if num_vertices >= u32::MAX as usize {
            return Err(Error::TooLarge(num_vertices));
        }
        let mut out = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= num_vertices {
                    return Err(Error::VertexOutOfRange { vertex: x, n: num_vertices });
                }
            }
            if u != v {
                out.push((u.min(v), u.max(v)));
            }
        }
        out.sort_unstable();
        out.dedup();
        if out.len() >= u32::MAX as usize {
            return Err(Error::TooLarge(out.len()));
        }
        Ok(Self { num_vertices, edges: out, original_ids: None })
    }

    pub(crate) fn with_original_ids(mut self, ids: Option<Vec<u64>>) -> Self {
        self.original_ids = ids;
        self
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// External id of each dense vertex, when ingestion had to remap sparse ids.
    pub fn original_ids(&self) -> Option<&[u64]> {
        self.original_ids.as_deref()
    }

    /// Writes the ingestion text format. Vertices without incident edges are
    /// emitted as self-loop lines so that re-loading preserves the vertex count.
    pub fn write_to<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let mut touched = vec![false; self.num_vertices];
        for &(u, v) in &self.edges {
            writeln!(w, "{u} {v}")?;
            touched[u] = true;
            touched[v] = true;
        }
        for (v, _) in touched.iter().enumerate().filter(|(_, t)| !**t) {
            writeln!(w, "{v} {v}")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list text is ASCII")
    }
}

/// Immutable undirected graph in compressed sparse row form.
///
/// Each undirected edge `i` appears as two arcs, both carrying `edge_origin == i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    edge_origin: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    pub fn neighbor_array(&self) -> &[usize] {
        &self.neighbors
    }

    pub fn edge_origin(&self) -> &[usize] {
        &self.edge_origin
    }

    /// Undirected edges, indexed by edge id.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.neighbors[self.offsets[u]..self.offsets[u + 1]]
    }

    /// `(neighbor, edge id)` pairs of `u`.
    pub fn arcs(&self, u: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let range = self.offsets[u]..self.offsets[u + 1];
        self.neighbors[range.clone()].iter().copied().zip(self.edge_origin[range].iter().copied())
    }

    pub fn degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.num_vertices() && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList { num_vertices: self.num_vertices(), edges: self.edges.clone(), original_ids: None }
    }
}

/// Lays out a normalized edge list as CSR.
pub fn build_csr(el: &EdgeList) -> Graph {
    let n = el.num_vertices;
    let mut offsets = vec![0usize; n + 1];
    for &(u, v) in &el.edges {
        offsets[u + 1] += 1;
        offsets[v + 1] += 1;
    }
    for i in 0..n {
        offsets[i + 1] += offsets[i];
    }
    let mut cursor = offsets.clone();
    let mut neighbors = vec![0usize; 2 * el.edges.len()];
    let mut edge_origin = vec![0usize; 2 * el.edges.len()];
    // Sorted (u, v) order with u < v fills every adjacency range in ascending order.
    for (id, &(u, v)) in el.edges.iter().enumerate() {
        for (a, b) in [(u, v), (v, u)] {
            neighbors[cursor[a]] = b;
            edge_origin[cursor[a]] = id;
            cursor[a] += 1;
        }
    }
    debug_assert!((0..n).all(|u| neighbors[offsets[u]..offsets[u + 1]].windows(2).all(|w| w[0] < w[1])));
    Graph { offsets, neighbors, edge_origin, edges: el.edges.clone() }
}
