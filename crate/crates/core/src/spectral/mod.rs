//! Adjacency and Laplacian spectra, the Perron pair, exact spanning-tree
//! counts and the spectral transforms used by the extremal arguments.

mod jacobi;
mod kirchhoff;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use jacobi::{residual, symmetric_eigen, SymmetricEigen};
pub use kirchhoff::{bareiss_determinant, spanning_tree_count, TreeCount};

/// Two spectral radii closer than this are never declared ordered.
pub const SPECTRAL_MARGIN: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub n: usize,
    pub m: usize,
    /// Adjacency eigenvalues, descending.
    pub adjacency_eigs: Vec<f64>,
    pub rho: f64,
    /// Second largest adjacency eigenvalue (`None` when n = 1).
    pub lambda2: Option<f64>,
    /// Laplacian eigenvalues, descending.
    pub laplacian_eigs: Vec<f64>,
    /// Perron vector, present for connected graphs.
    pub perron: Option<Vec<f64>>,
    /// Largest eigen-equation residual over all reported pairs.
    pub residual: f64,
}

impl SpectralReport {
    /// Allowed residual for a graph on `n` vertices.
    pub fn tolerance(n: usize) -> f64 {
        1e-10 * (n.max(1) as f64)
    }

    pub fn mu1(&self) -> f64 {
        self.laplacian_eigs[0]
    }

    pub const CSV_HEADER: &'static str = "n,m,rho,lambda2,mu1,residual";

    /// Flat CSV row matching [`SpectralReport::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{:.12},{},{:.12},{:.3e}",
            self.n,
            self.m,
            self.rho,
            self.lambda2.map(|l| format!("{l:.12}")).unwrap_or_default(),
            self.mu1(),
            self.residual
        )
    }
}

fn max_residual(matrix: &[Vec<f64>], eig: &SymmetricEigen) -> f64 {
    eig.values
        .iter()
        .zip(&eig.vectors)
        .map(|(l, x)| residual(matrix, *l, x))
        .fold(0.0, f64::max)
}

/// Full adjacency and Laplacian spectra with residual bookkeeping.
pub fn spectral_report(g: &Graph) -> SpectralReport {
    let a = g.adjacency_matrix();
    let l = g.laplacian_matrix();
    let adj = symmetric_eigen(&a);
    let lap = symmetric_eigen(&l);
    let mut res = max_residual(&a, &adj).max(max_residual(&l, &lap));
    let perron = if g.is_connected() {
        let (rho, x) = perron_from(g, &a, &adj);
        res = res.max(residual(&a, rho, &x));
        Some(x)
    } else {
        None
    };
    SpectralReport {
        n: g.n(),
        m: g.m(),
        rho: adj.values[0],
        lambda2: adj.values.get(1).copied(),
        adjacency_eigs: adj.values,
        laplacian_eigs: lap.values,
        perron,
        residual: res,
    }
}

/// Largest adjacency eigenvalue.
pub fn spectral_radius(g: &Graph) -> f64 {
    symmetric_eigen(&g.adjacency_matrix()).values[0]
}

/// Spectral radius and positive unit Perron vector of a connected graph.
pub fn perron_pair(g: &Graph) -> Result<(f64, Vec<f64>)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let a = g.adjacency_matrix();
    let eig = symmetric_eigen(&a);
    Ok(perron_from(g, &a, &eig))
}

fn perron_from(g: &Graph, a: &[Vec<f64>], eig: &SymmetricEigen) -> (f64, Vec<f64>) {
    let rho = eig.values[0];
    let mut x = eig.vectors[0].clone();
    if let Some(first) = x.iter().find(|v| v.abs() > 0.0) {
        if *first < 0.0 {
            x.iter_mut().for_each(|v| *v = -*v);
        }
    }
    if x.iter().all(|&v| v > 0.0) || g.n() == 1 {
        if g.n() == 1 {
            x = vec![1.0];
        }
        return (rho, x);
    }
    shifted_power_iteration(a)
}

/// Power iteration on `A + I`. The shift makes the dominant eigenvalue unique
/// in modulus for connected graphs, so bipartite inputs still converge.
fn shifted_power_iteration(a: &[Vec<f64>]) -> (f64, Vec<f64>) {
    let n = a.len();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut lambda = 0.0;
    for _ in 0..100_000 {
        let mut y: Vec<f64> = a
            .iter()
            .zip(&x)
            .map(|(row, xi)| row.iter().zip(&x).map(|(m, xj)| m * xj).sum::<f64>() + xi)
            .collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        y.iter_mut().for_each(|v| *v /= norm);
        lambda = norm - 1.0;
        let diff = y.iter().zip(&x).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
        x = y;
        if diff < 1e-15 {
            break;
        }
    }
    (lambda, x)
}

/// Degree-based upper bound on the spectral radius:
/// `(δ-1)/2 + sqrt(2m - nδ + (δ+1)²/4)`.
pub fn hong_upper_bound(n: usize, m: usize, delta: usize) -> Result<f64> {
    if n == 0 || delta == 0 {
        return Err(Error::InvalidParameter(format!(
            "bound needs n >= 1 and delta >= 1 (n={n}, delta={delta})"
        )));
    }
    let (nf, mf, d) = (n as f64, m as f64, delta as f64);
    let radicand = 2.0 * mf - nf * d + (d + 1.0).powi(2) / 4.0;
    if radicand < 0.0 {
        return Err(Error::NegativeRadicand {
            n,
            m,
            delta,
            radicand,
        });
    }
    Ok((d - 1.0) / 2.0 + radicand.sqrt())
}

/// Moves the edges `v s` (s in `moved`) over to `u s`.
///
/// Every `s` must be a neighbour of `v`, not a neighbour of `u`, and differ
/// from `u`.
pub fn rotate_edges(g: &Graph, u: usize, v: usize, moved: &[usize]) -> Result<Graph> {
    let n = g.n();
    for x in [u, v].iter().chain(moved) {
        if *x >= n {
            return Err(Error::VertexOutOfRange { vertex: *x, n });
        }
    }
    if u == v {
        return Err(Error::Rotation("u and v must differ".into()));
    }
    if moved.is_empty() {
        return Err(Error::Rotation("moved set is empty".into()));
    }
    let mut sorted = moved.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for &s in &sorted {
        if s == u {
            return Err(Error::Rotation(format!("{s} is u itself")));
        }
        if !g.has_edge(v, s) {
            return Err(Error::Rotation(format!("{s} is not a neighbour of v={v}")));
        }
        if g.has_edge(u, s) {
            return Err(Error::Rotation(format!("{s} is already a neighbour of u={u}")));
        }
    }
    let kept = g.edges().iter().copied().filter(|&(a, b)| {
        let other = if a == v {
            b
        } else if b == v {
            a
        } else {
            return true;
        };
        sorted.binary_search(&other).is_err()
    });
    Graph::new(n, kept.chain(sorted.iter().map(|&s| (u, s))))
}

/// Outcome of comparing two spectral radii with [`SPECTRAL_MARGIN`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RadiusOrdering {
    Greater,
    Less,
    Indeterminate,
}

pub fn compare_radii(a: f64, b: f64) -> RadiusOrdering {
    if a - b > SPECTRAL_MARGIN {
        RadiusOrdering::Greater
    } else if b - a > SPECTRAL_MARGIN {
        RadiusOrdering::Less
    } else {
        RadiusOrdering::Indeterminate
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-10
    }

    #[test]
    fn c4_spectra() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = spectral_report(&c4);
        for (got, want) in r.adjacency_eigs.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!(close(*got, want), "{got} vs {want}");
        }
        for (got, want) in r.laplacian_eigs.iter().zip([4.0, 2.0, 2.0, 0.0]) {
            assert!(close(*got, want));
        }
        assert!(r.residual <= SpectralReport::tolerance(4));
        // bipartite: Perron vector still positive
        assert!(r.perron.unwrap().iter().all(|&x| close(x, 0.5)));
    }

    #[test]
    fn k5_spectra() {
        let r = spectral_report(&complete(5));
        assert!(close(r.rho, 4.0));
        assert!(close(r.lambda2.unwrap(), -1.0));
        for (got, want) in r.laplacian_eigs.iter().zip([5.0, 5.0, 5.0, 5.0, 0.0]) {
            assert!(close(*got, want));
        }
    }

    #[test]
    fn perron_examples() {
        let (rho, x) = perron_pair(&complete(4)).unwrap();
        assert!(close(rho, 3.0));
        assert!(x.iter().all(|&v| close(v, 0.5)));
        let star = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        assert!(close(perron_pair(&star).unwrap().0, 2.0));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(perron_pair(&split), Err(Error::Disconnected)));
        assert!(spectral_report(&split).perron.is_none());
    }

    #[test]
    fn power_iteration_fallback_agrees() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
        let (rho, x) = perron_pair(&g).unwrap();
        let (rho2, y) = shifted_power_iteration(&g.adjacency_matrix());
        assert!((rho - rho2).abs() < 1e-10);
        for (a, b) in x.iter().zip(&y) {
            assert!((a - b).abs() < 1e-8);
        }
    }

    #[test]
    fn bound_equality_cases() {
        assert!(close(hong_upper_bound(5, 10, 4).unwrap(), 4.0));
        assert!(close(hong_upper_bound(5, 4, 1).unwrap(), 2.0));
        assert!(close(hong_upper_bound(5, 5, 2).unwrap(), 2.0));
        // 2*0 - 5*3 + 4 < 0
        assert!(matches!(
            hong_upper_bound(5, 0, 3),
            Err(Error::NegativeRadicand { .. })
        ));
        assert!(hong_upper_bound(5, 4, 0).is_err());
    }

    #[test]
    fn rotation_examples() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let r = rotate_edges(&p3, 0, 1, &[2]).unwrap();
        assert_eq!(r.edges(), &[(0, 1), (0, 2)]);
        assert!(close(spectral_radius(&r), spectral_radius(&p3)));

        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = rotate_edges(&p4, 1, 2, &[3]).unwrap();
        assert_eq!(star.edges(), &[(0, 1), (1, 2), (1, 3)]);
        assert!(spectral_radius(&star) > spectral_radius(&p4) + 1e-10);

        // 2 already adjacent to 1
        assert!(matches!(rotate_edges(&p4, 1, 3, &[2]), Err(Error::Rotation(_))));
        assert!(matches!(rotate_edges(&p4, 1, 2, &[]), Err(Error::Rotation(_))));
        assert!(matches!(rotate_edges(&p4, 0, 2, &[0]), Err(Error::Rotation(_))));
    }

    #[test]
    fn comparison_margin() {
        assert_eq!(compare_radii(1.0, 1.0 + 1e-9), RadiusOrdering::Indeterminate);
        assert_eq!(compare_radii(1.0, 1.1), RadiusOrdering::Less);
        assert_eq!(compare_radii(1.1, 1.0), RadiusOrdering::Greater);
    }
}
