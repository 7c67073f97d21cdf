use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Exact number of spanning trees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCount {
    #[serde(with = "decimal")]
    pub count: BigInt,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Matrix-Tree count: the determinant of the Laplacian with the last row and
/// column removed, computed exactly.
pub fn spanning_tree_count(g: &Graph) -> TreeCount {
    let n = g.n();
    let size = n - 1;
    let mut minor = vec![vec![BigInt::zero(); size]; size];
    for (v, row) in minor.iter_mut().enumerate() {
        row[v] = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        if u < size && v < size {
            minor[u][v] = BigInt::from(-1);
            minor[v][u] = BigInt::from(-1);
        }
    }
    let count = bareiss_determinant(minor);
    debug_assert!(!count.is_negative());
    TreeCount { count }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    #[test]
    fn cayley_and_cycles() {
        assert_eq!(spanning_tree_count(&complete(5)).count, BigInt::from(125));
        let c6 = Graph::new(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(spanning_tree_count(&c6).count, BigInt::from(6));
        assert_eq!(spanning_tree_count(&Graph::empty(1).unwrap()).count, BigInt::from(1));
    }

    #[test]
    fn disconnected_counts_zero() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(spanning_tree_count(&g).count.is_zero());
    }

    #[test]
    fn needs_pivoting() {
        // leading entry zero
        let m = vec![
            vec![BigInt::from(0), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(1)],
        ];
        assert_eq!(bareiss_determinant(m), BigInt::from(-6));
    }
}
