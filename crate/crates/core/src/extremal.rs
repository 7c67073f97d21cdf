//! Constructors for the clique-pair families: two disjoint cliques
//! `K_{n1}` and `K_{n-n1}` joined by a few cross edges, the single-hub member
//! of that family, and the join graph `K_k ∇ (K_k ∪ (n-2k) K_1)`.
//!
//! Left clique vertices are `0..n1`, right clique vertices are `n1..n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{iso, Graph};

pub const FAMILY_VERTEX_LIMIT: usize = 20;
pub const FAMILY_CROSS_LIMIT: usize = 4;

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

fn clique_edges(range: std::ops::Range<usize>) -> impl Iterator<Item = (usize, usize)> {
    let end = range.end;
    range.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

/// Cross edges between the two cliques. `(a, b)` joins left vertex `a` to the
/// `b`-th right vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossPattern {
    pub left_size: usize,
    pub right_size: usize,
    pub links: Vec<(usize, usize)>,
}

impl CrossPattern {
    pub fn new(left_size: usize, right_size: usize, links: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &links {
            if a >= left_size || b >= right_size {
                return Err(Error::InvalidParameter(format!(
                    "link ({a}, {b}) outside {left_size} x {right_size}"
                )));
            }
            if !seen.insert((a, b)) {
                return Err(Error::InvalidParameter(format!("link ({a}, {b}) repeated")));
            }
        }
        Ok(CrossPattern {
            left_size,
            right_size,
            links,
        })
    }

    pub fn i(&self) -> usize {
        self.links.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyGraph {
    pub graph: Graph,
    pub n: usize,
    pub n1: usize,
    pub pattern: CrossPattern,
}

/// Edge count shared by every member of the family with split `n1` and `i`
/// cross edges: `C(n1,2) + C(n-n1,2) + i`.
pub fn family_edge_count(n: usize, n1: usize, i: usize) -> usize {
    let pairs = |x: usize| x * x.saturating_sub(1) / 2;
    pairs(n1) + pairs(n - n1) + i
}

/// The member of the family determined by `pattern`.
pub fn family_graph(n: usize, n1: usize, pattern: CrossPattern) -> Result<FamilyGraph> {
    if n1 == 0 || n1 >= n {
        return Err(Error::InvalidParameter(format!(
            "split n1={n1} must satisfy 1 <= n1 <= n-1 (n={n})"
        )));
    }
    if pattern.left_size != n1 || pattern.right_size != n - n1 {
        return Err(Error::InvalidParameter(format!(
            "pattern is {} x {}, split is {} x {}",
            pattern.left_size,
            pattern.right_size,
            n1,
            n - n1
        )));
    }
    let pattern = CrossPattern::new(pattern.left_size, pattern.right_size, pattern.links)?;
    let edges = clique_edges(0..n1)
        .chain(clique_edges(n1..n))
        .chain(pattern.links.iter().map(|&(a, b)| (a, n1 + b)));
    let graph = Graph::new(n, edges)?;
    debug_assert_eq!(graph.m(), family_edge_count(n, n1, pattern.i()));
    Ok(FamilyGraph {
        graph,
        n,
        n1,
        pattern,
    })
}

/// Cross pattern of the single-hub member: left vertex 0 joined to the first
/// `i` right vertices.
pub fn book_pattern(n: usize, delta: usize, i: usize) -> Result<CrossPattern> {
    if n < delta + 2 {
        return Err(Error::InvalidParameter(format!(
            "book graph needs n >= delta + 2 (n={n}, delta={delta})"
        )));
    }
    if i > n - delta - 1 {
        return Err(Error::InvalidParameter(format!(
            "book graph needs i <= n - delta - 1 (i={i}, n={n}, delta={delta})"
        )));
    }
    CrossPattern::new(delta + 1, n - delta - 1, (0..i).map(|b| (0, b)).collect())
}

/// `K_{δ+1} ∪ K_{n-δ-1}` plus `i` edges from hub vertex 0 to the right
/// vertices `δ+1, …, δ+i`.
pub fn book_graph(n: usize, delta: usize, i: usize) -> Result<Graph> {
    let pattern = book_pattern(n, delta, i)?;
    Ok(family_graph(n, delta + 1, pattern)?.graph)
}

/// Exact structural test for `g ≅ book_graph(n, delta, i)`.
pub fn is_book_graph(g: &Graph, delta: usize, i: usize) -> bool {
    let Ok(b) = book_graph(g.n(), delta, i) else {
        return false;
    };
    iso::are_isomorphic(g, &b)
}

/// `K_k ∇ (K_k ∪ (n-2k) K_1)`: vertices `0..k` are joined to everything,
/// `k..2k` form the second clique, the rest only see the first clique.
pub fn join_candidate(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n <= 2 * k {
        return Err(Error::InvalidParameter(format!(
            "join candidate needs k >= 1 and n >= 2k + 1 (n={n}, k={k})"
        )));
    }
    let hub = (0..k).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let g = Graph::new(n, hub.chain(clique_edges(k..2 * k)))?;
    debug_assert_eq!(g.m(), k * (n - 1));
    Ok(g)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical_links(links: &[(usize, usize)], rows: &[Vec<usize>], cols: &[Vec<usize>]) -> Vec<(usize, usize)> {
    let mut best: Option<Vec<(usize, usize)>> = None;
    for r in rows {
        for c in cols {
            let mut mapped: Vec<(usize, usize)> = links.iter().map(|&(a, b)| (r[a], c[b])).collect();
            mapped.sort_unstable();
            if best.as_ref().is_none_or(|b| mapped < *b) {
                best = Some(mapped);
            }
        }
    }
    best.unwrap_or_default()
}

fn subsets_of_size<T: Copy>(items: &[T], size: usize) -> Vec<Vec<T>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if items.len() < size {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (idx, &first) in items.iter().enumerate() {
        for mut rest in subsets_of_size(&items[idx + 1..], size - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// One representative per orbit of `i`-edge cross patterns under
/// permutations inside each clique (the cliques themselves are not swapped).
///
/// Representatives touch left vertices `0..p` and right vertices `0..q` and
/// are the lexicographically least link list of their orbit; output is sorted
/// by `(p, q, links)`.
pub fn enumerate_family(n: usize, n1: usize, i: usize) -> Result<Vec<FamilyGraph>> {
    if n > FAMILY_VERTEX_LIMIT || i > FAMILY_CROSS_LIMIT {
        return Err(Error::LimitExceeded {
            what: "family enumeration (n <= 20, i <= 4)",
            limit: if n > FAMILY_VERTEX_LIMIT { FAMILY_VERTEX_LIMIT } else { FAMILY_CROSS_LIMIT },
            actual: if n > FAMILY_VERTEX_LIMIT { n } else { i },
        });
    }
    if n1 == 0 || n1 >= n {
        return Err(Error::InvalidParameter(format!("split n1={n1} invalid for n={n}")));
    }
    let (left, right) = (n1, n - n1);
    if i > left * right {
        return Err(Error::InvalidParameter(format!(
            "{i} cross edges exceed {left} x {right}"
        )));
    }
    let mut reps: BTreeSet<(usize, usize, Vec<(usize, usize)>)> = BTreeSet::new();
    if i == 0 {
        reps.insert((0, 0, Vec::new()));
    }
    for p in 1..=i.min(left) {
        let rows = permutations(p);
        for q in 1..=i.min(right) {
            if p * q < i {
                continue;
            }
            let cols = permutations(q);
            let cells: Vec<(usize, usize)> = (0..p).flat_map(|a| (0..q).map(move |b| (a, b))).collect();
            for links in subsets_of_size(&cells, i) {
                let rows_hit = links.iter().map(|l| l.0).collect::<BTreeSet<_>>().len();
                let cols_hit = links.iter().map(|l| l.1).collect::<BTreeSet<_>>().len();
                if rows_hit != p || cols_hit != q {
                    continue;
                }
                reps.insert((p, q, canonical_links(&links, &rows, &cols)));
            }
        }
    }
    reps.into_iter()
        .map(|(_, _, links)| family_graph(n, n1, CrossPattern::new(left, right, links)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom2(x: usize) -> usize {
        x * x.saturating_sub(1) / 2
    }

    #[test]
    fn complete_sizes() {
        assert_eq!(complete_graph(1).unwrap().m(), 0);
        assert_eq!(complete_graph(4).unwrap().m(), 6);
        assert_eq!(complete_graph(13).unwrap().m(), 78);
    }

    #[test]
    fn family_members() {
        let f = family_graph(12, 5, CrossPattern::new(5, 7, vec![(0, 0)]).unwrap()).unwrap();
        assert_eq!(f.graph.m(), 32);
        let f = family_graph(10, 5, CrossPattern::new(5, 5, vec![]).unwrap()).unwrap();
        assert!(!f.graph.is_connected());
        let f = family_graph(13, 5, CrossPattern::new(5, 8, vec![(0, 0), (0, 1)]).unwrap()).unwrap();
        assert_eq!(f.graph, book_graph(13, 4, 2).unwrap());
        assert!(CrossPattern::new(5, 8, vec![(5, 0)]).is_err());
        assert!(family_graph(13, 4, CrossPattern::new(5, 8, vec![]).unwrap()).is_err());
    }

    #[test]
    fn book_examples() {
        let b = book_graph(13, 4, 1).unwrap();
        assert_eq!(b.m(), 39);
        assert_eq!(b.min_degree(), 4);
        let b0 = book_graph(13, 4, 0).unwrap();
        assert!(!b0.is_connected());
        let b = book_graph(12, 4, 4).unwrap();
        assert_eq!(b.min_degree(), 4);
        assert!(book_graph(5, 4, 0).is_err());
        assert!(book_graph(8, 4, 4).is_err());
    }

    #[test]
    fn join_examples() {
        assert_eq!(join_candidate(8, 2).unwrap().m(), 14);
        let g = join_candidate(5, 2).unwrap();
        assert_eq!((g.n(), g.m()), (5, 8));
        assert!(join_candidate(4, 2).is_err());
    }

    #[test]
    fn orbit_counts() {
        assert_eq!(enumerate_family(12, 5, 1).unwrap().len(), 1);
        let two = enumerate_family(13, 5, 2).unwrap();
        assert_eq!(two.len(), 3);
        assert!(two.iter().any(|f| f.graph == book_graph(13, 4, 2).unwrap()));
        let none = enumerate_family(10, 4, 0).unwrap();
        assert_eq!(none.len(), 1);
        assert!(!none[0].graph.is_connected());
        assert!(enumerate_family(21, 5, 1).is_err());
        assert!(enumerate_family(12, 5, 5).is_err());
    }

    #[test]
    fn orbit_counts_match_bipartite_classes() {
        // 3-edge bipartite graphs, no isolated vertices, parts unrestricted:
        // 3K2, P4, K_{1,3} (two sides), P3+K2 (two sides) = 6
        assert_eq!(enumerate_family(14, 6, 3).unwrap().len(), 6);
        // a 1 x m left side forces every link onto the single left vertex
        assert_eq!(enumerate_family(8, 1, 3).unwrap().len(), 1);
    }

    #[test]
    fn members_have_family_edge_count() {
        for f in enumerate_family(11, 5, 3).unwrap() {
            assert_eq!(f.graph.m(), family_edge_count(11, 5, 3));
            assert!(f.graph.is_connected());
        }
    }

    #[test]
    fn book_detection() {
        let b = book_graph(13, 4, 2).unwrap();
        let shuffled = b.permuted(&[12, 3, 7, 0, 1, 2, 4, 5, 6, 8, 9, 10, 11]);
        assert!(is_book_graph(&shuffled, 4, 2));
        for f in enumerate_family(13, 5, 2).unwrap() {
            assert_eq!(is_book_graph(&f.graph, 4, 2), f.graph == b);
        }
    }

    #[test]
    fn binomial_shift_inequality() {
        for a in 1..=40 {
            for b in 1..=a {
                assert!(binom2(a) + binom2(b) < binom2(a + 1) + binom2(b - 1), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn book_min_degree() {
        for delta in 1..6 {
            for n in 2 * delta + 2..2 * delta + 6 {
                for i in 1..=delta {
                    assert_eq!(book_graph(n, delta, i).unwrap().min_degree(), delta);
                }
            }
        }
    }
}
