//! Isomorphism testing, canonical forms and small-graph enumeration.
//!
//! Everything here is exact and meant for desk-scale inputs (n up to ~20 for
//! pairwise tests, n up to 8 for canonical enumeration).

use std::collections::HashSet;

use super::Graph;

/// Stable vertex colouring by iterated neighbourhood refinement, seeded with
/// degrees. Colours are isomorphism invariant: equal inputs up to relabelling
/// give equal colour multisets.
pub fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        color = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        if distinct.len() == classes {
            return color;
        }
        classes = distinct.len();
    }
}

fn color_histogram(colors: &[usize]) -> Vec<usize> {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c
}

/// Exact isomorphism test: refinement prefilter, then backtracking over
/// colour-preserving maps.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// A map `phi` with `{u,v} ∈ E(g) ⇔ {phi[u],phi[v]} ∈ E(h)`, if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    if g.degree_profile().sequence != h.degree_profile().sequence {
        return None;
    }
    // refine on the disjoint union so colour names are shared
    let n = g.n();
    let union = Graph::new(
        2 * n,
        g.edges()
            .iter()
            .copied()
            .chain(h.edges().iter().map(|&(u, v)| (u + n, v + n))),
    )
    .expect("disjoint union is simple");
    let colors = refine_colors(&union);
    let (cg, ch) = colors.split_at(n);
    if color_histogram(cg) != color_histogram(ch) {
        return None;
    }
    // map vertices of g in order of rarest colour class first
    let mut count = vec![0usize; 2 * n];
    for &c in cg {
        count[c] += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (count[cg[v]], cg[v], v));

    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        depth: usize,
        order: &[usize],
        g: &Graph,
        h: &Graph,
        cg: &[usize],
        ch: &[usize],
        phi: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&v) = order.get(depth) else {
            return true;
        };
        for w in 0..h.n() {
            if used[w] || ch[w] != cg[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(phi[u], w));
            if !consistent {
                continue;
            }
            phi[v] = w;
            used[w] = true;
            if extend(depth + 1, order, g, h, cg, ch, phi, used) {
                return true;
            }
            used[w] = false;
            phi[v] = usize::MAX;
        }
        false
    }
    extend(0, &order, g, h, cg, ch, &mut phi, &mut used).then_some(phi)
}

/// Canonical form: the lexicographically least upper-triangle bit string
/// (graph6 column order) over all orderings that list refinement classes in
/// increasing colour order. Two graphs are isomorphic iff their forms match.
pub fn canonical_form(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let colors = refine_colors(g);
    let mut cell_of_position: Vec<usize> = colors.clone();
    cell_of_position.sort_unstable();

    struct Search<'a> {
        g: &'a Graph,
        colors: Vec<usize>,
        cell_of_position: Vec<usize>,
        order: Vec<usize>,
        used: Vec<bool>,
        bits: Vec<bool>,
        best: Option<Vec<bool>>,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) {
            let n = self.g.n();
            if depth == n {
                if self.best.as_ref().is_none_or(|b| self.bits < *b) {
                    self.best = Some(self.bits.clone());
                }
                return;
            }
            for v in 0..n {
                if self.used[v] || self.colors[v] != self.cell_of_position[depth] {
                    continue;
                }
                let start = self.bits.len();
                for &u in &self.order {
                    self.bits.push(self.g.has_edge(u, v));
                }
                let worse = self
                    .best
                    .as_ref()
                    .is_some_and(|b| self.bits[..] > b[..self.bits.len()]);
                if !worse {
                    self.order.push(v);
                    self.used[v] = true;
                    self.go(depth + 1);
                    self.used[v] = false;
                    self.order.pop();
                }
                self.bits.truncate(start);
            }
        }
    }

    let mut search = Search {
        g,
        colors,
        cell_of_position,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        bits: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.go(0);
    search.best.unwrap_or_default()
}

/// Rebuilds a graph from a canonical bit string on `n` vertices.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("bit string describes a simple graph")
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// each in canonical labelling, sorted by canonical form.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n >= 1, "at least one vertex");
    let mut level: Vec<Vec<bool>> = vec![Vec::new()];
    for size in 2..=n {
        let mut seen: HashSet<Vec<bool>> = HashSet::new();
        for bits in &level {
            let base = graph_from_bits(size - 1, bits);
            for mask in 0u64..(1 << (size - 1)) {
                let edges = base.edges().iter().copied().chain(
                    (0..size - 1)
                        .filter(|&u| mask >> u & 1 == 1)
                        .map(|u| (u, size - 1)),
                );
                let g = Graph::new(size, edges).expect("augmented graph is simple");
                seen.insert(canonical_form(&g));
            }
        }
        level = seen.into_iter().collect();
        level.sort();
    }
    level.iter().map(|b| graph_from_bits(n, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        // OEIS A000088
        let expected = [1, 2, 4, 11, 34, 156];
        for (i, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(i + 1).len(), count, "n={}", i + 1);
        }
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        let perm = [5, 3, 1, 0, 2, 4];
        let h = g.permuted(&perm);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let phi = isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            assert!(h.has_edge(phi[u], phi[v]));
        }
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C4 ∪ K1 share an adjacency spectrum
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        let c4 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!are_isomorphic(&star, &c4));
        // two 2-regular graphs on 6 vertices: C6 versus 2 C3
        let c6 = Graph::new(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        let two_c3 = Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &two_c3));
        assert_ne!(canonical_form(&c6), canonical_form(&two_c3));
    }
}
