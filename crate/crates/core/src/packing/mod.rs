//! Spanning-tree packing and forest covers.
//!
//! Both quantities come out of one matroid-union engine: `k` edge-disjoint
//! spanning trees exist iff the union of `k` graphic matroids has rank
//! `k(n-1)`, and `k` forests cover the graph iff that rank is `m`. When the
//! engine falls short, the edges it could still reach while labelling
//! (the clump) give the dual witness directly.

mod oracle;
mod union;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexPartition};

pub use oracle::{
    density_witness, max_density_bound, partition_oracle, DensityWitness, OracleVerdict,
    RestrictedGrowth, DEFAULT_DENSITY_LIMIT, DEFAULT_PARTITION_LIMIT,
};
pub(crate) use union::UnionFind;
use union::UnionEngine;

/// A partition with fewer than `k(t-1)` crossing edges, which rules out `k`
/// edge-disjoint spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub k: usize,
    pub partition: VertexPartition,
    pub cross_edges: usize,
}

impl PartitionWitness {
    pub fn is_violation(&self) -> bool {
        self.cross_edges < self.k * (self.partition.t() - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingCertificate {
    pub tau: usize,
    /// `tau` edge-disjoint spanning trees, each sorted.
    pub trees: Vec<Vec<Edge>>,
    /// Witness that `tau + 1` trees do not exist.
    pub violating: Option<PartitionWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PackingDecision {
    Yes { trees: Vec<Vec<Edge>> },
    No { witness: PartitionWitness },
}

impl PackingDecision {
    pub fn is_yes(&self) -> bool {
        matches!(self, PackingDecision::Yes { .. })
    }
}

fn witness_from(g: &Graph, engine: &UnionEngine<'_>, k: usize) -> PartitionWitness {
    let partition = engine.clump_partition();
    let cross_edges = g
        .partition_cross_edges(&partition)
        .expect("clump partition covers the vertex set");
    let w = PartitionWitness {
        k,
        partition,
        cross_edges,
    };
    debug_assert!(w.is_violation(), "clump partition must violate k(t-1)");
    w
}

/// Decides whether `g` has `k` edge-disjoint spanning trees, returning either
/// the trees or a partition with `e(π) <= k(t-1) - 1`.
pub fn has_k_trees(g: &Graph, k: usize) -> Result<PackingDecision> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if g.n() == 1 {
        return Ok(PackingDecision::Yes {
            trees: vec![Vec::new(); k],
        });
    }
    let engine = UnionEngine::run(g, k);
    if engine.rank() == k * (g.n() - 1) {
        Ok(PackingDecision::Yes {
            trees: engine.forests(),
        })
    } else {
        Ok(PackingDecision::No {
            witness: witness_from(g, &engine, k),
        })
    }
}

/// Spanning-tree packing number with explicit trees and a witness that one
/// more tree is impossible. Disconnected graphs get `tau = 0` and their
/// component split as the witness. A single vertex has no finite packing
/// number; it is reported as `tau = 0` without a witness.
pub fn stp_number(g: &Graph) -> PackingCertificate {
    let n = g.n();
    if n == 1 {
        return PackingCertificate {
            tau: 0,
            trees: Vec::new(),
            violating: None,
        };
    }
    if !g.is_connected() {
        let partition = g.component_partition();
        return PackingCertificate {
            tau: 0,
            trees: Vec::new(),
            violating: Some(PartitionWitness {
                k: 1,
                partition,
                cross_edges: 0,
            }),
        };
    }
    let upper = g.min_degree().min(g.m() / (n - 1));
    let (mut lo, mut hi) = (1, upper);
    let mut trees = None;
    while lo < hi {
        let mid = (lo + hi).div_ceil(2);
        match has_k_trees(g, mid).expect("k >= 1") {
            PackingDecision::Yes { trees: t } => {
                lo = mid;
                trees = Some(t);
            }
            PackingDecision::No { .. } => hi = mid - 1,
        }
    }
    let tau = lo;
    let trees = match trees {
        Some(t) if t.len() == tau => t,
        _ => match has_k_trees(g, tau).expect("k >= 1") {
            PackingDecision::Yes { trees } => trees,
            PackingDecision::No { .. } => unreachable!("tau trees were found"),
        },
    };
    let witness = match has_k_trees(g, tau + 1).expect("k >= 1") {
        PackingDecision::No { witness } => witness,
        PackingDecision::Yes { .. } => unreachable!("tau is maximal"),
    };
    PackingCertificate {
        tau,
        trees,
        violating: Some(witness),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForestCover {
    pub arboricity: usize,
    pub forests: Vec<Vec<Edge>>,
    /// Subgraph that `arboricity - 1` forests cannot cover (when arboricity >= 2).
    pub witness: Option<DensityWitness>,
}

/// Whether `k` forests can cover every edge.
pub fn covers_with(g: &Graph, k: usize) -> bool {
    UnionEngine::run(g, k).failed().is_empty()
}

/// Minimum forest cover with a density certificate of minimality.
pub fn arboricity(g: &Graph) -> ForestCover {
    if g.m() == 0 {
        return ForestCover {
            arboricity: 0,
            forests: Vec::new(),
            witness: None,
        };
    }
    let (mut lo, mut hi) = (g.m().div_ceil(g.n() - 1).max(1), g.degree_profile().max_degree);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if covers_with(g, mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let a = lo;
    let forests = UnionEngine::run(g, a).forests();
    let witness = (a >= 2).then(|| {
        let engine = UnionEngine::run(g, a - 1);
        let partition = engine.clump_partition();
        let (fu, _) = g.edges()[engine.failed()[0]];
        let block = partition
            .blocks()
            .iter()
            .find(|b| b.contains(&fu))
            .expect("every vertex is in a block")
            .clone();
        let w = DensityWitness {
            edge_count: g.induced_edge_count(&block),
            vertex_set: block,
            k: a - 1,
        };
        debug_assert!(w.is_violation());
        w
    });
    ForestCover {
        arboricity: a,
        forests,
        witness,
    }
}

/// Independent check that `trees` are pairwise edge-disjoint spanning trees of `g`.
pub fn validate_spanning_trees(g: &Graph, trees: &[Vec<Edge>]) -> std::result::Result<(), String> {
    let mut used = std::collections::HashSet::new();
    for (i, tree) in trees.iter().enumerate() {
        if tree.len() + 1 != g.n() {
            return Err(format!("tree {i} has {} edges, expected {}", tree.len(), g.n() - 1));
        }
        let mut uf = UnionFind::new(g.n());
        for &(u, v) in tree {
            if !g.has_edge(u, v) {
                return Err(format!("tree {i} uses non-edge {u}-{v}"));
            }
            if !used.insert((u.min(v), u.max(v))) {
                return Err(format!("edge {u}-{v} used twice"));
            }
            if !uf.union(u, v) {
                return Err(format!("tree {i} has a cycle through {u}-{v}"));
            }
        }
    }
    Ok(())
}

/// Independent check that `forests` are acyclic and partition `E(g)`.
pub fn validate_forest_cover(g: &Graph, forests: &[Vec<Edge>]) -> std::result::Result<(), String> {
    let mut used = std::collections::HashSet::new();
    for (i, forest) in forests.iter().enumerate() {
        let mut uf = UnionFind::new(g.n());
        for &(u, v) in forest {
            if !g.has_edge(u, v) {
                return Err(format!("forest {i} uses non-edge {u}-{v}"));
            }
            if !used.insert((u.min(v), u.max(v))) {
                return Err(format!("edge {u}-{v} covered twice"));
            }
            if !uf.union(u, v) {
                return Err(format!("forest {i} has a cycle through {u}-{v}"));
            }
        }
    }
    if used.len() != g.m() {
        return Err(format!("{} of {} edges covered", used.len(), g.m()));
    }
    Ok(())
}

fn fmt_edges(f: &mut fmt::Formatter<'_>, edges: &[Edge]) -> fmt::Result {
    let tokens: Vec<String> = edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    f.write_str(&tokens.join(" "))
}

impl fmt::Display for PartitionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "partition k={} t={} cross={}: {}",
            self.k,
            self.partition.t(),
            self.cross_edges,
            self.partition
        )
    }
}

impl fmt::Display for PackingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tau={}", self.tau)?;
        for (i, tree) in self.trees.iter().enumerate() {
            write!(f, "tree {i}: ")?;
            fmt_edges(f, tree)?;
            writeln!(f)?;
        }
        if let Some(w) = &self.violating {
            writeln!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ForestCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arboricity={}", self.arboricity)?;
        for (i, forest) in self.forests.iter().enumerate() {
            write!(f, "forest {i}: ")?;
            fmt_edges(f, forest)?;
            writeln!(f)?;
        }
        if let Some(w) = &self.witness {
            let vs: Vec<String> = w.vertex_set.iter().map(usize::to_string).collect();
            writeln!(f, "dense k={} edges={}: {}", w.k, w.edge_count, vs.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn tree_has_one() {
        let t = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let c = stp_number(&t);
        assert_eq!(c.tau, 1);
        validate_spanning_trees(&t, &c.trees).unwrap();
        assert!(c.violating.unwrap().is_violation());
        assert_eq!(arboricity(&t).arboricity, 1);
    }

    #[test]
    fn complete_graphs() {
        for (n, tau) in [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)] {
            let g = complete(n);
            let c = stp_number(&g);
            assert_eq!(c.tau, tau, "K{n}");
            validate_spanning_trees(&g, &c.trees).unwrap();
            assert!(c.violating.unwrap().is_violation());
        }
    }

    #[test]
    fn c4_witness() {
        match has_k_trees(&cycle(4), 2).unwrap() {
            PackingDecision::No { witness } => {
                assert!(witness.is_violation());
                assert_eq!(witness.partition, VertexPartition::singletons(4));
                assert_eq!(witness.cross_edges, 4);
            }
            PackingDecision::Yes { .. } => panic!("C4 has no two disjoint spanning trees"),
        }
    }

    #[test]
    fn k6_three_trees() {
        match has_k_trees(&complete(6), 3).unwrap() {
            PackingDecision::Yes { trees } => {
                validate_spanning_trees(&complete(6), &trees).unwrap();
                assert_eq!(trees.len(), 3);
            }
            PackingDecision::No { .. } => panic!("K6 decomposes into three trees"),
        }
    }

    #[test]
    fn disconnected_convention() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let c = stp_number(&g);
        assert_eq!(c.tau, 0);
        let w = c.violating.unwrap();
        assert_eq!(w.partition.blocks(), &[vec![0, 1, 2], vec![3, 4]]);
        assert!(w.is_violation());
        // engine-derived witness on disconnected input is also valid
        match has_k_trees(&g, 1).unwrap() {
            PackingDecision::No { witness } => assert!(witness.is_violation()),
            _ => panic!(),
        }
    }

    #[test]
    fn arboricity_examples() {
        let c5 = arboricity(&cycle(5));
        assert_eq!(c5.arboricity, 2);
        validate_forest_cover(&cycle(5), &c5.forests).unwrap();
        let k4 = arboricity(&complete(4));
        assert_eq!(k4.arboricity, 2);
        let w = k4.witness.unwrap();
        assert_eq!((w.vertex_set.len(), w.edge_count, w.k), (4, 6, 1));
        let empty = arboricity(&Graph::empty(3).unwrap());
        assert_eq!(empty.arboricity, 0);
        assert!(empty.forests.is_empty());
    }

    #[test]
    fn certificate_text() {
        let c = stp_number(&complete(4));
        let text = c.to_string();
        assert!(text.starts_with("tau=2\ntree 0: "));
        assert!(text.contains("partition k=3"));
    }

    #[test]
    fn validators_reject_bad_certificates() {
        let g = complete(4);
        assert!(validate_spanning_trees(&g, &[vec![(0, 1), (1, 2), (0, 2)]]).is_err());
        assert!(validate_spanning_trees(&g, &[vec![(0, 1), (1, 2)]]).is_err());
        assert!(validate_spanning_trees(
            &g,
            &[vec![(0, 1), (1, 2), (2, 3)], vec![(0, 1), (0, 2), (0, 3)]]
        )
        .is_err());
        assert!(validate_forest_cover(&g, &[vec![(0, 1)]]).is_err());
    }
}
