//! Simple undirected graphs on the dense vertex set `0..n`.
//!
//! A [`Graph`] is immutable once built. Every algorithm in the crate indexes
//! vertices directly, so labels are left to callers.

mod cut;
mod edgelist;
mod graph6;
pub mod iso;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cut::{boundary_size, edge_connectivity, CutWitness};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};

/// An undirected edge stored with `u < v`.
pub type Edge = (usize, usize);

/// Simple undirected graph. Edges are kept sorted lexicographically and every
/// neighbour list is sorted ascending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, collapsing duplicate pairs.
    ///
    /// Loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edge_list {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Self::from_sorted_edges(n, set.into_iter().collect()))
    }

    /// `edges` must already be normalised, sorted and duplicate free.
    fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of edge `{u, v}` in [`Graph::edges`], if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * (self.n - 1) / 2
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sequence: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        sequence.sort_unstable();
        DegreeProfile {
            delta: sequence[0],
            max_degree: *sequence.last().unwrap(),
            sequence,
        }
    }

    /// Component index for every vertex, components numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
    pub fn component_partition(&self) -> VertexPartition {
        VertexPartition::from_labels(&self.components())
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        self.edges
            .iter()
            .filter(|&&(u, v)| inside[u] && inside[v])
            .count()
    }

    /// Copy of the graph with edge `{u, v}` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        Self::new(self.n, self.edges.iter().copied().chain([(u, v)]))
    }

    /// Copy of the graph without edge `{u, v}` (no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Self::from_sorted_edges(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("permutation keeps the graph simple")
    }

    /// Dense 0/1 adjacency matrix in row-major order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for &(u, v) in &self.edges {
            a[u][v] = 1.0;
            a[v][u] = 1.0;
        }
        a
    }

    /// Dense Laplacian `D - A`.
    pub fn laplacian_matrix(&self) -> Vec<Vec<f64>> {
        let mut l = self.adjacency_matrix();
        for (v, row) in l.iter_mut().enumerate() {
            for x in row.iter_mut() {
                *x = -*x;
            }
            row[v] = self.degree(v) as f64;
        }
        l
    }

    /// Number of edges between distinct blocks of `p`.
    pub fn partition_cross_edges(&self, p: &VertexPartition) -> Result<usize> {
        if p.n() != self.n {
            return Err(Error::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                p.n(),
                self.n
            )));
        }
        let label = p.labels();
        Ok(self
            .edges
            .iter()
            .filter(|&&(u, v)| label[u] != label[v])
            .count())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&write_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_graph6(self))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub delta: usize,
    pub max_degree: usize,
    /// Degrees sorted ascending.
    pub sequence: Vec<usize>,
}

/// A partition of `0..n` into nonempty disjoint blocks.
///
/// Blocks are stored sorted and ordered by their smallest element, so two
/// equal partitions compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for block in &blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} outside 0..{n}"
                    )));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
                }
            }
        }
        let mut blocks = blocks;
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(VertexPartition { blocks })
    }

    /// Partition whose blocks are the classes of `labels` (any integer labels).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut index = std::collections::HashMap::new();
        for (v, &l) in labels.iter().enumerate() {
            let b = *index.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
        }
        VertexPartition { blocks }
    }

    pub fn singletons(n: usize) -> Self {
        VertexPartition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Number of blocks.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }

    /// Number of singleton blocks.
    pub fn t1(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// Number of blocks with at least two vertices.
    pub fn t2(&self) -> usize {
        self.t() - self.t1()
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut label = vec![0; self.n()];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                label[v] = i;
            }
        }
        label
    }
}

impl fmt::Display for VertexPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            let items: Vec<String> = block.iter().map(usize::to_string).collect();
            f.write_str(&items.join(" "))?;
        }
        Ok(())
    }
}
