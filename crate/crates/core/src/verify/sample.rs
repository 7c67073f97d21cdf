//! Seeded random graph generators and the connectivity-class sampler.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::checks::{check_connectivity_theorem, connectivity_hypotheses};
use super::record::VerificationRecord;
use crate::error::Result;
use crate::graph::{edge_connectivity, Graph};

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("edges in range")
}

/// `G(n, p)` redrawn until connected. `p` must make connectivity reachable
/// (any `p > 0` does, eventually).
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

struct Adjacency {
    rows: Vec<Vec<bool>>,
    degree: Vec<usize>,
}

impl Adjacency {
    fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut a = Adjacency {
            rows: vec![vec![false; n]; n],
            degree: vec![0; n],
        };
        for (u, v) in edges {
            a.add(u, v);
        }
        a
    }

    fn add(&mut self, u: usize, v: usize) {
        if u != v && !self.rows[u][v] {
            self.rows[u][v] = true;
            self.rows[v][u] = true;
            self.degree[u] += 1;
            self.degree[v] += 1;
        }
    }

    fn remove(&mut self, u: usize, v: usize) {
        if self.rows[u][v] {
            self.rows[u][v] = false;
            self.rows[v][u] = false;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
    }

    /// Lowers `v` to degree `target` by deleting edges `v u` with
    /// `allowed(u)` and `deg(u) > target`. Returns whether it got there.
    fn trim<R: Rng>(&mut self, v: usize, target: usize, allowed: impl Fn(usize) -> bool, rng: &mut R) -> bool {
        while self.degree[v] > target {
            let candidates: Vec<usize> = (0..self.rows.len())
                .filter(|&u| self.rows[v][u] && allowed(u) && self.degree[u] > target)
                .collect();
            let Some(&u) = candidates.choose(rng) else {
                return false;
            };
            self.remove(v, u);
        }
        self.degree[v] == target
    }

    fn graph(&self) -> Graph {
        let n = self.rows.len();
        let edges = (0..n).flat_map(|u| (u + 1..n).filter(move |&v| self.rows[u][v]).map(move |v| (u, v)));
        Graph::new(n, edges).expect("edges in range")
    }
}

/// A connected graph on `n` vertices with minimum degree exactly `delta`:
/// `G(n, p)` with `p` drawn from `[p_low, 1]`, then one random vertex trimmed
/// to degree `delta`. `None` after `attempts` failed draws.
pub fn graph_with_min_degree<R: Rng>(
    n: usize,
    delta: usize,
    p_low: f64,
    attempts: usize,
    rng: &mut R,
) -> Option<Graph> {
    if n <= delta {
        return None;
    }
    for _ in 0..attempts {
        let p = rng.gen_range(p_low..=1.0);
        let g = gnp(n, p, rng);
        if g.min_degree() < delta {
            continue;
        }
        let mut adj = Adjacency::from_edges(n, g.edges().iter().copied());
        let v = rng.gen_range(0..n);
        if !adj.trim(v, delta, |_| true, rng) {
            continue;
        }
        let h = adj.graph();
        if h.min_degree() == delta && h.is_connected() {
            return Some(h);
        }
    }
    None
}

/// Draws one candidate member of the class with minimum degree `delta` and
/// edge connectivity `kappa`: two random dense sides joined by exactly
/// `kappa` random cross edges, one vertex trimmed inside its side down to
/// degree `delta`. The caller verifies membership exactly.
fn class_candidate<R: Rng>(n: usize, delta: usize, kappa: usize, rng: &mut R) -> Graph {
    let s = rng.gen_range(delta + 1..=n - delta - 1);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut side = vec![false; n];
    for &v in &order[..s] {
        side[v] = true;
    }
    let mut adj = Adjacency::from_edges(n, std::iter::empty());
    for part in [&order[..s], &order[s..]] {
        let p = if rng.gen_bool(0.5) { 1.0 } else { rng.gen_range(0.7..=1.0) };
        for (x, &u) in part.iter().enumerate() {
            for &v in &part[x + 1..] {
                if rng.gen_bool(p) {
                    adj.add(u, v);
                }
            }
        }
    }
    let mut added = 0;
    while added < kappa {
        let u = order[rng.gen_range(0..s)];
        let v = order[rng.gen_range(s..n)];
        if !adj.rows[u][v] {
            adj.add(u, v);
            added += 1;
        }
    }
    let v = rng.gen_range(0..n);
    let home = side[v];
    adj.trim(v, delta, |u| side[u] == home, rng);
    adj.graph()
}

/// Result of sampling the connectivity class.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleStream {
    pub records: Vec<VerificationRecord>,
    pub attempts: usize,
    /// Set when the attempt budget ran out before `count` members were found.
    pub diagnostic: Option<String>,
}

/// Attempts allowed per requested sample.
pub const SAMPLER_ATTEMPTS_PER_SAMPLE: usize = 2000;

/// Rejection-samples `count` connected graphs with minimum degree exactly
/// `delta` and edge connectivity exactly `kappa`, each checked against the
/// book-graph bound. Membership is decided exactly before a record is
/// emitted. Deterministic in `seed`.
pub fn sample_connectivity_class(
    n: usize,
    delta: usize,
    kappa: usize,
    count: usize,
    seed: u64,
) -> Result<SampleStream> {
    sample_connectivity_class_with(n, delta, kappa, count, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// [`sample_connectivity_class`] drawing from a caller-supplied generator.
pub fn sample_connectivity_class_with<R: Rng>(
    n: usize,
    delta: usize,
    kappa: usize,
    count: usize,
    rng: &mut R,
) -> Result<SampleStream> {
    connectivity_hypotheses(n, delta, kappa)?;
    let budget = count.saturating_mul(SAMPLER_ATTEMPTS_PER_SAMPLE);
    let mut records = Vec::with_capacity(count);
    let mut attempts = 0;
    while records.len() < count && attempts < budget {
        attempts += 1;
        let g = class_candidate(n, delta, kappa, rng);
        if !g.is_connected() || g.min_degree() != delta {
            continue;
        }
        if edge_connectivity(&g)?.0 != kappa {
            continue;
        }
        records.push(check_connectivity_theorem(&g));
    }
    let diagnostic = (records.len() < count).then(|| {
        format!(
            "sampler budget of {budget} attempts exhausted with {} of {count} members",
            records.len()
        )
    });
    Ok(SampleStream {
        records,
        attempts,
        diagnostic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::record::Verdict;

    #[test]
    fn min_degree_generator_hits_target() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = graph_with_min_degree(12, 4, 0.3, 1000, &mut rng).unwrap();
            assert_eq!(g.min_degree(), 4);
            assert!(g.is_connected());
        }
    }

    #[test]
    fn class_samples_are_members() {
        let stream = sample_connectivity_class(14, 5, 4, 40, 7).unwrap();
        assert_eq!(stream.records.len(), 40);
        assert!(stream.diagnostic.is_none());
        for r in &stream.records {
            assert_eq!((r.delta, r.k_or_kappa), (5, 4));
            assert!(r.premise_holds);
            assert_ne!(r.verdict, Verdict::Counterexample);
        }
    }

    #[test]
    fn infeasible_class_rejected() {
        assert!(sample_connectivity_class(14, 5, 5, 1, 0).is_err());
        assert!(sample_connectivity_class(13, 5, 4, 1, 0).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        let a = sample_connectivity_class(14, 5, 4, 10, 11).unwrap();
        let b = sample_connectivity_class(14, 5, 4, 10, 11).unwrap();
        assert_eq!(a, b);
    }
}
