//! Exhaustive oracles: set-partition scans for the tree-packing condition and
//! induced-subgraph scans for forest covers. Both are exponential and guarded
//! by explicit size limits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexPartition};

pub const DEFAULT_PARTITION_LIMIT: usize = 12;
pub const DEFAULT_DENSITY_LIMIT: usize = 16;

/// Set partitions of `0..n` as restricted-growth strings, in lexicographic
/// order: `a[0] = 0` and `a[i] <= 1 + max(a[..i])`.
pub struct RestrictedGrowth {
    a: Vec<usize>,
    /// prefix_max[i] = max(a[..=i])
    prefix_max: Vec<usize>,
    started: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        RestrictedGrowth {
            a: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
        }
    }

    /// Advances to the next string; returns the current one, or `None` when done.
    pub fn next_string(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            return Some(&self.a);
        }
        let n = self.a.len();
        let i = (1..n).rev().find(|&i| self.a[i] <= self.prefix_max[i - 1])?;
        self.a[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.a[i]);
        for j in i + 1..n {
            self.a[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
        Some(&self.a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub k: usize,
    /// `tau >= k`.
    pub holds: bool,
    /// Minimiser of `e(π) - k(t-1)`; ties prefer more blocks, then the
    /// lexicographically first restricted-growth string.
    pub partition: VertexPartition,
    pub cross_edges: usize,
    pub slack: i64,
}

/// Scans every partition of the vertex set and reports the one minimising
/// `e(π) - k(t-1)`. The packing condition holds iff that minimum is `>= 0`.
pub fn partition_oracle(g: &Graph, k: usize, n_limit: usize) -> Result<OracleVerdict> {
    let n = g.n();
    if n > n_limit {
        return Err(Error::LimitExceeded {
            what: "partition oracle vertex count",
            limit: n_limit,
            actual: n,
        });
    }
    let mut rgs = RestrictedGrowth::new(n);
    let mut best: Option<(i64, usize, usize, Vec<usize>)> = None;
    while let Some(a) = rgs.next_string() {
        let t = a.iter().max().unwrap() + 1;
        let cross = g.edges().iter().filter(|&&(u, v)| a[u] != a[v]).count();
        let slack = cross as i64 - (k * (t - 1)) as i64;
        let better = match &best {
            None => true,
            Some((s, bt, _, _)) => slack < *s || (slack == *s && t > *bt),
        };
        if better {
            best = Some((slack, t, cross, a.to_vec()));
        }
    }
    let (slack, _, cross_edges, labels) = best.expect("at least one partition");
    Ok(OracleVerdict {
        k,
        holds: slack >= 0,
        partition: VertexPartition::from_labels(&labels),
        cross_edges,
        slack,
    })
}

/// Vertex set of a subgraph too dense to be covered by `k` forests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityWitness {
    pub vertex_set: Vec<usize>,
    pub edge_count: usize,
    pub k: usize,
}

impl DensityWitness {
    pub fn is_violation(&self) -> bool {
        self.edge_count > self.k * (self.vertex_set.len().saturating_sub(1))
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn induced_edges(adj: &[u32], set: u32) -> usize {
    let mut total = 0;
    let mut rest = set;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += (adj[v] & set).count_ones() as usize;
    }
    total / 2
}

fn check_density_limit(g: &Graph, n_limit: usize) -> Result<()> {
    if g.n() > n_limit.min(31) {
        return Err(Error::LimitExceeded {
            what: "density scan vertex count",
            limit: n_limit.min(31),
            actual: g.n(),
        });
    }
    Ok(())
}

/// Exhaustive search over induced subgraphs `H` (|V(H)| >= 2) for one with
/// `|E(H)| > k(|V(H)|-1)`. Returns the densest violator by
/// `|E(H)|/(|V(H)|-1)`, smaller sets first on ties; `None` means `a(G) <= k`.
pub fn density_witness(g: &Graph, k: usize, n_limit: usize) -> Result<Option<DensityWitness>> {
    check_density_limit(g, n_limit)?;
    let adj = masks(g);
    let mut best: Option<(usize, usize, u32)> = None;
    for set in 1u32..(1u32 << g.n()) {
        let size = set.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let e = induced_edges(&adj, set);
        if e <= k * (size - 1) {
            continue;
        }
        let better = match best {
            None => true,
            // e/(size-1) > be/(bs-1), or equal ratio and smaller set
            Some((be, bs, _)) => {
                let lhs = e * (bs - 1);
                let rhs = be * (size - 1);
                lhs > rhs || (lhs == rhs && size < bs)
            }
        };
        if better {
            best = Some((e, size, set));
        }
    }
    Ok(best.map(|(edge_count, _, set)| DensityWitness {
        vertex_set: (0..g.n()).filter(|&v| set >> v & 1 == 1).collect(),
        edge_count,
        k,
    }))
}

/// `max over induced H of ceil(|E(H)| / (|V(H)|-1))`, by exhaustive scan.
pub fn max_density_bound(g: &Graph, n_limit: usize) -> Result<usize> {
    check_density_limit(g, n_limit)?;
    let adj = masks(g);
    let mut best = 0;
    for set in 1u32..(1u32 << g.n()) {
        let size = set.count_ones() as usize;
        if size >= 2 {
            best = best.max(induced_edges(&adj, set).div_ceil(size - 1));
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn restricted_growth_counts_bell_numbers() {
        let bell = [1, 2, 5, 15, 52, 203, 877];
        for (i, &b) in bell.iter().enumerate() {
            let mut rgs = RestrictedGrowth::new(i + 1);
            let mut count = 0;
            let mut prev: Option<Vec<usize>> = None;
            while let Some(a) = rgs.next_string() {
                if let Some(p) = &prev {
                    assert!(p.as_slice() < a);
                }
                prev = Some(a.to_vec());
                count += 1;
            }
            assert_eq!(count, b);
        }
    }

    #[test]
    fn k4_two_trees() {
        let v = partition_oracle(&complete(4), 2, 12).unwrap();
        assert!(v.holds);
        assert_eq!(v.slack, 0);
        assert_eq!(v.partition, VertexPartition::singletons(4));
    }

    #[test]
    fn c4_two_trees_fail() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let v = partition_oracle(&c4, 2, 12).unwrap();
        assert!(!v.holds);
        assert_eq!(v.partition, VertexPartition::singletons(4));
        assert_eq!((v.cross_edges, v.slack), (4, -2));
    }

    #[test]
    fn oracle_limit() {
        assert!(matches!(
            partition_oracle(&complete(13), 1, 12),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn density_examples() {
        let w = density_witness(&complete(5), 2, 16).unwrap().unwrap();
        assert_eq!(w.vertex_set, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.edge_count, 10);
        assert!(w.is_violation());
        assert!(density_witness(&complete(4), 2, 16).unwrap().is_none());
        let path = Graph::new(5, (0..4).map(|v| (v, v + 1))).unwrap();
        assert!(density_witness(&path, 1, 16).unwrap().is_none());
        assert_eq!(max_density_bound(&complete(4), 16).unwrap(), 2);
    }
}
