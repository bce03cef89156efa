//! Reduced Betti numbers of rank-selected order complexes by exact
//! elimination. This is the brute-force route that the ribbon bases are
//! checked against.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::Result;
use crate::linalg::{Eliminator, SparseVec};
use crate::poset::{chains_with_rank_set, GradedPoset, PosetChain, RankSet};
use crate::scalar::Scalar;
use crate::Rational;

/// Faces of the order complex of P^S, grouped by size: entry k holds the
/// chains with k elements. With `below = Some(u)` only chains of elements
/// strictly below u count. The single face of size 0 is the empty chain.
pub fn faces(l: &GradedPoset, s: &RankSet, below: Option<usize>) -> Result<Vec<Vec<PosetChain>>> {
    s.validate(l.rank())?;
    let mut out: Vec<Vec<PosetChain>> = vec![Vec::new(); s.len() + 1];
    for (t, _) in s.subsets() {
        let chains = chains_with_rank_set(l, &t)?;
        let keep = chains
            .into_iter()
            .filter(|c| below.map_or(true, |u| c.iter().all(|&x| x != u && l.leq(x, u))));
        out[t.len()].extend(keep);
    }
    for f in &mut out {
        f.sort();
    }
    Ok(out)
}

fn boundary_columns<K: Scalar>(upper: &[PosetChain], lower: &[PosetChain]) -> Vec<SparseVec<K>> {
    let index: HashMap<&PosetChain, usize> = lower.iter().enumerate().map(|(i, c)| (c, i)).collect();
    upper
        .iter()
        .map(|c| {
            let mut col: SparseVec<K> = (0..c.len())
                .map(|i| {
                    let mut f = c.clone();
                    f.remove(i);
                    let v = if i % 2 == 0 { K::one() } else { -K::one() };
                    (index[&f], v)
                })
                .collect();
            col.sort_by_key(|e| e.0);
            col
        })
        .collect()
}

fn boundary_rank<K: Scalar>(upper: &[PosetChain], lower: &[PosetChain]) -> usize {
    let mut cols = boundary_columns::<K>(upper, lower);
    cols.sort_by_key(|c| c.len());
    let mut e = Eliminator::new();
    for c in cols {
        e.push(c);
    }
    e.rank()
}

/// Reduced Betti numbers β̃_{-1}, β̃_0, …, β̃_{|S|−1} over the field K.
pub fn betti_numbers<K: Scalar>(l: &GradedPoset, s: &RankSet, below: Option<usize>) -> Result<Vec<usize>> {
    let f = faces(l, s, below)?;
    let ranks: Vec<usize> = (0..f.len())
        .map(|k| if k == 0 { 0 } else { boundary_rank::<K>(&f[k], &f[k - 1]) })
        .collect();
    Ok((0..f.len())
        .map(|k| f[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect())
}

/// dim H̃_{|S|−1}(Δ(P^S)): top faces minus the rank of the top boundary.
pub fn betti_top(l: &GradedPoset, s: &RankSet) -> Result<usize> {
    top_from_faces(&faces(l, s, None)?)
}

/// dim H̃_{|S|−1} of the S-selected open interval (0̂, u).
pub fn betti_top_below(l: &GradedPoset, s: &RankSet, u: usize) -> Result<usize> {
    top_from_faces(&faces(l, s, Some(u))?)
}

fn top_from_faces(f: &[Vec<PosetChain>]) -> Result<usize> {
    let k = f.len() - 1;
    if k == 0 {
        return Ok(1);
    }
    Ok(f[k].len() - boundary_rank::<Rational>(&f[k], &f[k - 1]))
}

/// Checks d∘d = 0 on every face of Δ(P^S).
pub fn check_dd_zero(l: &GradedPoset, s: &RankSet) -> Result<bool> {
    let f = faces(l, s, None)?;
    for k in 2..f.len() {
        let d1 = boundary_columns::<Rational>(&f[k], &f[k - 1]);
        let d0 = boundary_columns::<Rational>(&f[k - 1], &f[k - 2]);
        for col in d1 {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for (i, c) in col {
                for (j, v) in &d0[i] {
                    *acc.entry(*j).or_insert_with(Rational::zero) += c.clone() * v.clone();
                }
            }
            if acc.values().any(|v| !v.is_zero()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{boolean_lattice, partition_lattice};

    #[test]
    fn boolean_betti_counts_descent_classes() {
        let b4 = boolean_lattice(4).unwrap();
        let s = RankSet::new(vec![1, 2, 3]).unwrap();
        assert_eq!(betti_top(&b4, &s).unwrap(), 1);
        let s = RankSet::new(vec![2]).unwrap();
        assert_eq!(betti_top(&b4, &s).unwrap(), 5);
        assert_eq!(betti_numbers::<Rational>(&b4, &s, None).unwrap(), vec![0, 5]);
        assert!(check_dd_zero(&b4, &RankSet::new(vec![1, 2, 3]).unwrap()).unwrap());
    }

    #[test]
    fn partition_lattice_full_rank() {
        let p4 = partition_lattice(4).unwrap();
        let s = RankSet::new(vec![1, 2]).unwrap();
        assert_eq!(betti_top(&p4, &s).unwrap(), 6);
        assert_eq!(betti_top(&p4, &RankSet::empty()).unwrap(), 1);
    }
}
