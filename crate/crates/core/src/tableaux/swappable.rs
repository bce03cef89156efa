//! Swappable and ambiguous boxes of a chain filling relative to a tableau
//! and a set partition, and the statistics Sw(u), N(u), K(u).

use crate::error::{Error, Result};
use crate::poset::{GradedPoset, RankSet};
use crate::setpartition::SetPartition;
use crate::shelling::prefix_joins;
use crate::tableaux::ribbon::RibbonFilling;
use crate::tableaux::young::YoungTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxKind {
    Swappable,
    /// Holds a letter from a block of size at least 3.
    AmbiguousA,
    /// Holds a 2-block not lying wholly in the first row of T.
    AmbiguousB,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwappableReport {
    /// Kind of each box, in reading order.
    pub boxes: Vec<BoxKind>,
    pub swappable: usize,
    pub ambiguous_a: usize,
    pub ambiguous_b: usize,
    /// Number of boxes with a box directly below them.
    pub stacked: usize,
    /// Some column holds at least two swappable boxes.
    pub column_with_two_swappable: bool,
}

impl SwappableReport {
    pub fn ambiguous(&self) -> usize {
        self.ambiguous_a + self.ambiguous_b
    }
}

/// Swappable pairs of letters: 2-blocks of u with both letters in the first
/// row of T.
pub fn swappable_pairs(t: &YoungTableau, u: &SetPartition) -> Vec<(usize, usize)> {
    let first = t.rows().first().cloned().unwrap_or_default();
    u.blocks()
        .into_iter()
        .filter(|b| b.len() == 2 && first.contains(&b[0]) && first.contains(&b[1]))
        .map(|b| (b[0], b[1]))
        .collect()
}

/// Classifies the boxes of a filling of Rib_WH(S) by atoms of Π_n; the
/// filling must be the label word of a saturated chain from 0̂ to `u`.
pub fn swappable_analysis(
    l: &GradedPoset,
    t: &YoungTableau,
    u: usize,
    f: &RibbonFilling,
) -> Result<SwappableReport> {
    let joins = prefix_joins(l, f.entries())?;
    if joins.last() != Some(&u) {
        return Err(Error::InvalidInput(format!(
            "filling does not generate a chain ending at {}",
            l.describe(u)
        )));
    }
    let up = l
        .set_partition(u)
        .ok_or_else(|| Error::InvalidInput("swappable analysis needs a partition lattice".into()))?;
    let pairs = swappable_pairs(t, up);
    let mut boxes = Vec::with_capacity(f.entries().len());
    for &p in f.entries() {
        let a = l.atoms()[p];
        let blk = l.set_partition(a).unwrap().nontrivial_blocks();
        let (i, j) = (blk[0][0], blk[0][1]);
        let kind = if up.block_of(i).len() > 2 {
            BoxKind::AmbiguousA
        } else if pairs.contains(&(i, j)) {
            BoxKind::Swappable
        } else {
            BoxKind::AmbiguousB
        };
        boxes.push(kind);
    }
    let cols = f.shape().columns();
    let count = |k: BoxKind| boxes.iter().filter(|&&b| b == k).count();
    Ok(SwappableReport {
        swappable: count(BoxKind::Swappable),
        ambiguous_a: count(BoxKind::AmbiguousA),
        ambiguous_b: count(BoxKind::AmbiguousB),
        stacked: f.shape().rows().len() - 1,
        column_with_two_swappable: cols
            .iter()
            .any(|c| c.iter().filter(|&&p| boxes[p] == BoxKind::Swappable).count() >= 2),
        boxes,
    })
}

fn weighted(u: &SetPartition, w: impl Fn(usize) -> i64) -> i64 {
    u.blocks().iter().map(|b| w(b.len())).sum()
}

/// |λ(u)|: the number of letters in nontrivial blocks.
pub fn lambda_size(u: &SetPartition) -> usize {
    weighted(u, |i| if i >= 2 { i as i64 } else { 0 }) as usize
}

/// λ_1(u) = 4 max S − |S| + 2 − |λ(u)|.
pub fn lambda_first(u: &SetPartition, s: &RankSet) -> i64 {
    4 * s.max() as i64 - s.len() as i64 + 2 - lambda_size(u) as i64
}

/// N(u) = Σ_{i≥3} (i−1) m_i(u).
pub fn n_statistic(u: &SetPartition) -> usize {
    weighted(u, |i| if i >= 3 { i as i64 - 1 } else { 0 }) as usize
}

/// K(u) = Σ_{i≥4} (i−3) m_i(u).
pub fn k_statistic(u: &SetPartition) -> usize {
    weighted(u, |i| if i >= 4 { i as i64 - 3 } else { 0 }) as usize
}

/// K for a block type μ.
pub fn k_statistic_of_type(mu: &crate::partition::IntPartition) -> usize {
    mu.parts().iter().map(|&i| i.saturating_sub(3)).sum()
}

/// Sw(u) = λ_1(u) − Σ_{i≥3} i·m_i(u) − (|λ(u)| − λ_1(u)).
pub fn sw_statistic(u: &SetPartition, s: &RankSet) -> Result<i64> {
    if u.rank() != s.max() {
        return Err(Error::RankMismatch {
            expected: s.max(),
            found: u.rank(),
        });
    }
    let l1 = lambda_first(u, s);
    let big = weighted(u, |i| if i >= 3 { i as i64 } else { 0 });
    Ok(l1 - big - (lambda_size(u) as i64 - l1))
}

/// The partition u′ of the inductive step: split the largest letter off the
/// first block of size ≥ 3, then merge the first two singletons of u.
/// Returns u′ and the size of the shrunken block B′.
pub fn inductive_predecessor(u: &SetPartition) -> Option<(SetPartition, usize)> {
    let blocks = u.blocks();
    let b = blocks.iter().find(|b| b.len() >= 3)?;
    let singles: Vec<usize> = blocks.iter().filter(|b| b.len() == 1).map(|b| b[0]).collect();
    if singles.len() < 2 {
        return None;
    }
    let split = *b.last().unwrap();
    let mut nb: Vec<Vec<usize>> = blocks
        .iter()
        .filter(|c| c.len() > 1)
        .map(|c| c.iter().copied().filter(|&x| x != split).collect())
        .collect();
    nb.push(vec![singles[0], singles[1]]);
    let v = SetPartition::from_blocks(u.n(), &nb)?;
    Some((v, b.len() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_swappable_pair() {
        let t = YoungTableau::new(vec![vec![1, 2, 4, 6, 9], vec![3, 5], vec![7, 8]]).unwrap();
        let u = SetPartition::from_blocks(10, &[vec![2, 7], vec![4, 9], vec![3, 5, 6]]).unwrap();
        assert_eq!(swappable_pairs(&t, &u), vec![(4, 9)]);
    }

    #[test]
    fn sw_steps() {
        let s = RankSet::new(vec![1, 3]).unwrap();
        let u = SetPartition::from_blocks(9, &[vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        assert_eq!(n_statistic(&u), 0);
        assert_eq!(sw_statistic(&u, &s).unwrap(), 2 * (3 - 2 + 2));
        let w = SetPartition::from_blocks(9, &[vec![0, 1, 2], vec![3, 4]]).unwrap();
        let (wp, bp) = inductive_predecessor(&w).unwrap();
        assert_eq!(bp, 2);
        assert_eq!(wp.rank(), w.rank());
        assert_eq!(sw_statistic(&w, &s).unwrap(), sw_statistic(&wp, &s).unwrap());
    }
}
