//! Sparse exact elimination.

use std::collections::HashMap;

use crate::scalar::Scalar;

/// A sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec<K> = Vec<(usize, K)>;

/// `a + c·b` for sparse vectors.
pub fn axpy<K: Scalar>(a: &SparseVec<K>, c: &K, b: &SparseVec<K>) -> SparseVec<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c.clone() * b[j].1.clone()));
            j += 1;
        } else {
            let v = a[i].1.clone() + c.clone() * b[j].1.clone();
            if !v.is_negligible() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incremental column reduction: keeps a reduced basis of the span of the
/// columns pushed so far.
pub struct Eliminator<K: Scalar> {
    pivots: HashMap<usize, SparseVec<K>>,
}

impl<K: Scalar> Default for Eliminator<K> {
    fn default() -> Self {
        Eliminator {
            pivots: HashMap::new(),
        }
    }
}

impl<K: Scalar> Eliminator<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the stored pivots.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((row, val)) = v.last().cloned() {
            match self.pivots.get(&row) {
                Some(p) => v = axpy(&v, &(-val), p),
                None => break,
            }
        }
        v
    }

    /// Adds a column; returns whether it was independent of the previous
    /// ones.
    pub fn push(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(v);
        match r.last().cloned() {
            None => false,
            Some((row, val)) => {
                let inv = K::one() / val;
                let norm: SparseVec<K> = r.into_iter().map(|(i, x)| (i, x * inv.clone())).collect();
                self.pivots.insert(row, norm);
                true
            }
        }
    }

    pub fn contains(&self, v: SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }
}

/// Exact rank of a set of sparse columns. Sparse columns go first, which
/// keeps fill-in low on boundary matrices.
pub fn rank<K: Scalar>(cols: &[SparseVec<K>]) -> usize {
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&i| (cols[i].len(), i));
    let mut e = Eliminator::new();
    for i in order {
        e.push(cols[i].clone());
    }
    e.rank()
}

/// Inverse of a square dense matrix by Gauss–Jordan elimination, or None
/// when it is singular.
pub fn invert<K: Scalar>(m: &[Vec<K>]) -> Option<Vec<Vec<K>>> {
    let n = m.len();
    let mut a: Vec<Vec<K>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { K::one() } else { K::zero() }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_negligible())?;
        a.swap(c, p);
        let inv = K::one() / a[c][c].clone();
        for x in a[c].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && !row[c].is_negligible() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Indices of the columns that are not in the span of earlier ones.
pub fn dependent_columns<K: Scalar>(cols: &[SparseVec<K>]) -> Vec<usize> {
    let mut e = Eliminator::new();
    cols.iter()
        .enumerate()
        .filter(|(_, c)| !e.push((*c).clone()))
        .map(|(i, _)| i)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::scalar::Coeff;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn small_ranks() {
        let cols = vec![
            vec![(0, q(1)), (1, q(-1))],
            vec![(1, q(1)), (2, q(-1))],
            vec![(0, q(1)), (2, q(-1))],
        ];
        assert_eq!(rank(&cols), 2);
        assert_eq!(dependent_columns(&cols), vec![2]);
    }

    #[test]
    fn float_field() {
        let cols = vec![vec![(0, 1.0f64), (1, 2.0)], vec![(0, 2.0), (1, 4.0)]];
        assert_eq!(rank(&cols), 1);
    }
}
