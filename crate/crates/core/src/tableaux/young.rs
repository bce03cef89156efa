//! Young tableaux, descent sets and Young symmetrizers.

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partition::IntPartition;
use crate::perm::{permutations_of, Perm};
use crate::poset::RankSet;
use crate::scalar::Coeff;
use crate::tableaux::tabloid::TabloidVector;

/// A filling of a Young diagram by distinct letters, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::InvalidInput(format!("{rows:?} is not a Young diagram")));
        }
        let mut all: Vec<usize> = rows.concat();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("tableau entries must be distinct".into()));
        }
        Ok(YoungTableau { rows })
    }

    pub fn shape(&self) -> IntPartition {
        IntPartition::new(self.rows.iter().map(Vec::len).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let w = self.rows.first().map_or(0, Vec::len);
        (0..w)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    /// Entries in increasing order.
    pub fn letters(&self) -> Vec<usize> {
        let mut v = self.rows.concat();
        v.sort_unstable();
        v
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    fn row_of(&self, x: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&x))
    }

    /// Positions i (1-based among the sorted letters) whose successor sits in
    /// a strictly lower row.
    pub fn descent_set(&self) -> Vec<usize> {
        let l = self.letters();
        (1..l.len())
            .filter(|&i| self.row_of(l[i]) > self.row_of(l[i - 1]))
            .collect()
    }
}

/// All standard tableaux of a shape on the given letters.
pub fn standard_tableaux(shape: &IntPartition, letters: &[usize]) -> Vec<YoungTableau> {
    let mut letters = letters.to_vec();
    letters.sort_unstable();
    if shape.size() != letters.len() {
        return Vec::new();
    }
    let parts = shape.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); parts.len()];
    let mut out = Vec::new();
    fn rec(k: usize, letters: &[usize], parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<YoungTableau>) {
        if k == letters.len() {
            out.push(YoungTableau { rows: rows.clone() });
            return;
        }
        for i in 0..parts.len() {
            let len = rows[i].len();
            if len < parts[i] && (i == 0 || rows[i - 1].len() > len) {
                rows[i].push(letters[k]);
                rec(k + 1, letters, parts, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(0, &letters, &parts, &mut rows, &mut out);
    out
}

/// Number of standard tableaux of shape λ with descent set exactly S.
pub fn syt_count_with_descent_set(lambda: &IntPartition, s: &RankSet) -> u64 {
    let n = lambda.size();
    let letters: Vec<usize> = (0..n).collect();
    standard_tableaux(lambda, &letters)
        .iter()
        .filter(|t| t.descent_set() == s.as_slice())
        .count() as u64
}

/// Computes b_T a_T · v, one row factor and then one column factor at a
/// time, stopping as soon as the vector vanishes.
///
/// `entry_map` turns a letter permutation into the induced map on the
/// entries of `v` (for Π_n, on atom positions). The total number of
/// term-by-group-element products is bounded by the group-sum cap.
pub fn young_symmetrizer_apply<C: Coeff>(
    t: &YoungTableau,
    v: &TabloidVector<C>,
    n: usize,
    entry_map: &dyn Fn(&Perm) -> Result<Vec<usize>>,
    guards: &Guards,
) -> Result<TabloidVector<C>> {
    if t.rows().iter().flatten().any(|&x| x >= n) {
        return Err(Error::InvalidInput(format!("tableau letters exceed n = {n}")));
    }
    let mut cur = v.clone();
    let mut work: u128 = 0;
    let factors = t
        .rows()
        .iter()
        .map(|r| (r.clone(), false))
        .chain(t.columns().into_iter().map(|c| (c, true)));
    for (letters, signed) in factors {
        if cur.is_zero() {
            break;
        }
        if letters.len() < 2 {
            continue;
        }
        let group = permutations_of(n, &letters);
        work += cur.len() as u128 * group.len() as u128;
        guards.check_groupsum(work)?;
        let mut next = TabloidVector::zero(cur.row_lengths().to_vec());
        for (g, sgn) in &group {
            let m = entry_map(g)?;
            let c = if signed { C::from_i64(*sgn) } else { C::one() };
            for (word, coef) in cur.terms() {
                next.add_term(word.iter().map(|&e| m[e]).collect(), coef.clone() * c.clone());
            }
        }
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let lam = IntPartition::new(vec![3, 2]);
        let letters: Vec<usize> = (0..5).collect();
        assert_eq!(standard_tableaux(&lam, &letters).len(), 5);
        assert_eq!(syt_count_with_descent_set(&IntPartition::new(vec![4]), &RankSet::empty()), 1);
        for i in 1..4 {
            let s = RankSet::new(vec![i]).unwrap();
            assert_eq!(syt_count_with_descent_set(&IntPartition::new(vec![3, 1]), &s), 1);
        }
    }

    #[test]
    fn descent_set_of_tableau() {
        let t = YoungTableau::new(vec![vec![1, 2, 4], vec![3, 5]]).unwrap();
        assert!(t.is_standard());
        assert_eq!(t.descent_set(), vec![2, 4]);
    }

    #[test]
    fn column_symmetrizer_detects_sign() {
        let t = YoungTableau::new(vec![vec![0], vec![1], vec![2]]).unwrap();
        let mut v = TabloidVector::<i64>::zero(vec![1, 1, 1]);
        v.add_term(vec![0, 1, 2], 1);
        let id = |g: &Perm| Ok(g.images().to_vec());
        let w = young_symmetrizer_apply(&t, &v, 3, &id, &Guards::default()).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.coefficient(&[1, 0, 2]), -1);
        let row = YoungTableau::new(vec![vec![0, 1, 2]]).unwrap();
        let z = young_symmetrizer_apply(&row, &w, 3, &id, &Guards::default()).unwrap();
        assert!(z.is_zero());
    }
}
