//! Matroid union over `k` copies of the graphic matroid.
//!
//! The engine keeps `k` edge-disjoint forests. An edge is inserted by
//! breadth-first labelling over exchange moves: an edge `f` outside forest `i`
//! either joins two trees of `i` (augmenting path found) or closes a cycle,
//! in which case every unlabelled edge on that cycle is labelled with
//! `(f, i)`. Shortest augmenting paths keep every forest acyclic after the
//! swaps.

use std::collections::VecDeque;

use crate::graph::{Edge, Graph, VertexPartition};

#[derive(Clone, Copy, Debug)]
struct Label {
    parent: usize,
    forest: usize,
}

pub(crate) struct UnionEngine<'g> {
    g: &'g Graph,
    k: usize,
    /// Forest holding each edge, by edge index.
    owner: Vec<Option<usize>>,
    /// `adj[i][v]`: (neighbour, edge index) pairs of forest `i`.
    adj: Vec<Vec<Vec<(usize, usize)>>>,
    failed: Vec<usize>,
}

impl<'g> UnionEngine<'g> {
    pub(crate) fn new(g: &'g Graph, k: usize) -> Self {
        UnionEngine {
            g,
            k,
            owner: vec![None; g.m()],
            adj: vec![vec![Vec::new(); g.n()]; k],
            failed: Vec::new(),
        }
    }

    /// Inserts every edge of the graph in lexicographic order.
    pub(crate) fn run(g: &'g Graph, k: usize) -> Self {
        let mut engine = Self::new(g, k);
        for e in 0..g.m() {
            if !engine.insert(e) {
                engine.failed.push(e);
            }
        }
        engine
    }

    pub(crate) fn failed(&self) -> &[usize] {
        &self.failed
    }

    /// Total number of edges placed in forests.
    pub(crate) fn rank(&self) -> usize {
        self.owner.iter().filter(|o| o.is_some()).count()
    }

    pub(crate) fn forests(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.k];
        for (e, owner) in self.owner.iter().enumerate() {
            if let Some(i) = owner {
                out[*i].push(self.g.edges()[e]);
            }
        }
        out
    }

    fn link(&mut self, e: usize, i: usize) {
        let (u, v) = self.g.edges()[e];
        self.adj[i][u].push((v, e));
        self.adj[i][v].push((u, e));
        self.owner[e] = Some(i);
    }

    fn unlink(&mut self, e: usize) {
        let Some(i) = self.owner[e].take() else {
            return;
        };
        let (u, v) = self.g.edges()[e];
        self.adj[i][u].retain(|&(_, f)| f != e);
        self.adj[i][v].retain(|&(_, f)| f != e);
    }

    /// Edge indices on the path from `a` to `b` in forest `i`, in path order,
    /// or `None` when they lie in different trees.
    fn forest_path(&self, i: usize, a: usize, b: usize) -> Option<Vec<usize>> {
        let n = self.g.n();
        let mut via: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[a] = true;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &(y, e) in &self.adj[i][x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        if !seen[b] {
            return None;
        }
        let mut path = Vec::new();
        let mut x = b;
        while let Some((p, e)) = via[x] {
            path.push(e);
            x = p;
        }
        path.reverse();
        Some(path)
    }

    /// Breadth-first labelling from `sources`. Returns the sink `(edge,
    /// forest)` if an augmenting path exists, plus labels and the visited set.
    fn label_from(&self, sources: &[usize]) -> (Option<(usize, usize)>, Vec<Option<Label>>, Vec<bool>) {
        let m = self.g.m();
        let mut label: Vec<Option<Label>> = vec![None; m];
        let mut visited = vec![false; m];
        let mut queue = VecDeque::new();
        for &s in sources {
            visited[s] = true;
            queue.push_back(s);
        }
        while let Some(f) = queue.pop_front() {
            let (a, b) = self.g.edges()[f];
            for i in 0..self.k {
                if self.owner[f] == Some(i) {
                    continue;
                }
                match self.forest_path(i, a, b) {
                    None => return (Some((f, i)), label, visited),
                    Some(path) => {
                        for e in path {
                            if !visited[e] {
                                visited[e] = true;
                                label[e] = Some(Label { parent: f, forest: i });
                                queue.push_back(e);
                            }
                        }
                    }
                }
            }
        }
        (None, label, visited)
    }

    /// Tries to add edge `e`; on success the forests are rearranged along a
    /// shortest augmenting path.
    pub(crate) fn insert(&mut self, e: usize) -> bool {
        debug_assert!(self.owner[e].is_none());
        let (sink, label, _) = self.label_from(&[e]);
        let Some((mut cur, mut target)) = sink else {
            return false;
        };
        loop {
            self.unlink(cur);
            self.link(cur, target);
            match label[cur] {
                Some(Label { parent, forest }) => {
                    cur = parent;
                    target = forest;
                }
                None => break,
            }
        }
        debug_assert!(self.forests_acyclic());
        true
    }

    /// Edges reachable by labelling from every failed edge. Each forest
    /// restricted to this set spans it, which is what makes the set a
    /// minimiser of the union rank formula.
    pub(crate) fn clump(&self) -> Vec<usize> {
        let (sink, _, visited) = self.label_from(&self.failed);
        assert!(sink.is_none(), "failed edge became insertable");
        visited
            .iter()
            .enumerate()
            .filter_map(|(e, &v)| v.then_some(e))
            .collect()
    }

    /// Connected components of `(V, clump)` as a vertex partition.
    pub(crate) fn clump_partition(&self) -> VertexPartition {
        let mut uf = UnionFind::new(self.g.n());
        for e in self.clump() {
            let (u, v) = self.g.edges()[e];
            uf.union(u, v);
        }
        let labels: Vec<usize> = (0..self.g.n()).map(|v| uf.find(v)).collect();
        VertexPartition::from_labels(&labels)
    }

    fn forests_acyclic(&self) -> bool {
        (0..self.k).all(|i| {
            let mut uf = UnionFind::new(self.g.n());
            self.owner
                .iter()
                .enumerate()
                .filter(|(_, o)| **o == Some(i))
                .all(|(e, _)| {
                    let (u, v) = self.g.edges()[e];
                    uf.union(u, v)
                })
        })
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
