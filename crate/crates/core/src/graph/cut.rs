use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// One side `U` of an edge cut together with `|∂(U)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub side: Vec<usize>,
    pub boundary_size: usize,
}

fn membership(g: &Graph, side: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; g.n()];
    for &v in side {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if std::mem::replace(&mut inside[v], true) {
            return Err(Error::InvalidVertexSet(format!("vertex {v} listed twice")));
        }
    }
    if side.is_empty() || side.len() == g.n() {
        return Err(Error::InvalidVertexSet(format!(
            "cut side must be a nonempty proper subset, got {} of {} vertices",
            side.len(),
            g.n()
        )));
    }
    Ok(inside)
}

/// Number of edges with exactly one endpoint in `side`.
pub fn boundary_size(g: &Graph, side: &[usize]) -> Result<usize> {
    let inside = membership(g, side)?;
    Ok(g.edges()
        .iter()
        .filter(|&&(u, v)| inside[u] != inside[v])
        .count())
}

/// Global minimum edge cut by Stoer–Wagner with unit weights.
///
/// Maximum-adjacency ties go to the lowest vertex index. The returned side is
/// the smaller shore of the cut; on equal sizes, the shore containing vertex 0.
pub fn edge_connectivity(g: &Graph) -> Result<(usize, CutWitness)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { needed: 2, n });
    }
    let mut w = vec![vec![0usize; n]; n];
    for &(u, v) in g.edges() {
        w[u][v] = 1;
        w[v][u] = 1;
    }
    // members[v]: original vertices merged into super-vertex v
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, Vec<usize>)> = None;

    while alive.len() > 1 {
        let mut key = vec![0usize; n];
        let mut added = vec![false; n];
        let mut prev = alive[0];
        let mut last = alive[0];
        added[last] = true;
        for &v in &alive {
            key[v] = w[last][v];
        }
        for _ in 1..alive.len() {
            let next = alive
                .iter()
                .copied()
                .filter(|&v| !added[v])
                .fold(None, |acc: Option<usize>, v| match acc {
                    Some(a) if key[a] >= key[v] => Some(a),
                    _ => Some(v),
                })
                .expect("an unadded vertex remains");
            added[next] = true;
            prev = last;
            last = next;
            for &v in &alive {
                if !added[v] {
                    key[v] += w[next][v];
                }
            }
        }
        let phase_cut = key[last];
        if best.as_ref().is_none_or(|(c, _)| phase_cut < *c) {
            best = Some((phase_cut, members[last].clone()));
        }
        // merge `last` into `prev`
        let moved = std::mem::take(&mut members[last]);
        members[prev].extend(moved);
        for &v in &alive {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
        alive.retain(|&v| v != last);
    }

    let (value, mut side) = best.expect("at least one phase ran");
    side.sort_unstable();
    if 2 * side.len() > n || (2 * side.len() == n && side[0] != 0) {
        let mut inside = vec![false; n];
        for &v in &side {
            inside[v] = true;
        }
        side = (0..n).filter(|&v| !inside[v]).collect();
    }
    debug_assert_eq!(boundary_size(g, &side).ok(), Some(value));
    Ok((
        value,
        CutWitness {
            side,
            boundary_size: value,
        },
    ))
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
    fn complete_and_cycle() {
        for n in 2..9 {
            assert_eq!(edge_connectivity(&complete(n)).unwrap().0, n - 1);
        }
        let (k, w) = edge_connectivity(&cycle(6)).unwrap();
        assert_eq!(k, 2);
        assert_eq!(boundary_size(&cycle(6), &w.side).unwrap(), 2);
    }

    #[test]
    fn disconnected_is_zero() {
        let g = Graph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let (k, w) = edge_connectivity(&g).unwrap();
        assert_eq!(k, 0);
        assert_eq!(w.side, vec![3, 4]);
    }

    #[test]
    fn bridge_between_cliques() {
        // K5 on 0..5, K8 on 5..13, bridge 0-5
        let mut edges: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        edges.extend((5..13).flat_map(|u| (u + 1..13).map(move |v| (u, v))));
        edges.push((0, 5));
        let g = Graph::new(13, edges).unwrap();
        let (k, w) = edge_connectivity(&g).unwrap();
        assert_eq!(k, 1);
        assert_eq!(w.side, vec![0, 1, 2, 3, 4]);
        assert_eq!(boundary_size(&g, &w.side).unwrap(), 1);
    }

    #[test]
    fn boundary_examples_and_errors() {
        assert_eq!(boundary_size(&complete(4), &[0]).unwrap(), 3);
        assert_eq!(boundary_size(&cycle(5), &[1, 2]).unwrap(), 2);
        assert!(boundary_size(&complete(4), &[]).is_err());
        assert!(boundary_size(&complete(4), &[0, 1, 2, 3]).is_err());
        assert!(boundary_size(&complete(4), &[0, 0]).is_err());
        assert!(edge_connectivity(&Graph::empty(1).unwrap()).is_err());
    }
}
