//! Tabloids and polytabloids.

use std::collections::BTreeMap;

use crate::perm::arrangements_with_sign;
use crate::scalar::Coeff;
use crate::tableaux::ribbon::RibbonFilling;

/// A formal combination of tabloids of one row shape.
///
/// A tabloid is stored as its reading word with every row sorted, so two
/// fillings with the same row sets share a key.
#[derive(Clone, Debug, PartialEq)]
pub struct TabloidVector<C> {
    rows: Vec<usize>,
    terms: BTreeMap<Vec<usize>, C>,
}

impl<C: Coeff> TabloidVector<C> {
    pub fn zero(rows: Vec<usize>) -> Self {
        TabloidVector {
            rows,
            terms: BTreeMap::new(),
        }
    }

    /// The tabloid {F}.
    pub fn of_filling(f: &RibbonFilling) -> Self {
        let mut v = Self::zero(f.shape().rows().to_vec());
        v.add_term(f.entries().to_vec(), C::one());
        v
    }

    pub fn row_lengths(&self) -> &[usize] {
        &self.rows
    }

    fn canonical(&self, mut word: Vec<usize>) -> Vec<usize> {
        let mut s = 0;
        for &r in &self.rows {
            word[s..s + r].sort_unstable();
            s += r;
        }
        word
    }

    /// Adds `c·{word}`; `word` is a reading word in any row order.
    pub fn add_term(&mut self, word: Vec<usize>, c: C) {
        let key = self.canonical(word);
        let slot = self.terms.entry(key.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_negligible() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as (reading word with sorted rows, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, word: &[usize]) -> C {
        self.terms
            .get(&self.canonical(word.to_vec()))
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// Row sets of a key.
    pub fn split_rows(&self, word: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut s = 0;
        for &r in &self.rows {
            out.push(word[s..s + r].to_vec());
            s += r;
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.rows.clone());
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-C::one()))
    }

    /// Entrywise action: every letter x becomes `f(x)`.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> Self {
        let mut out = Self::zero(self.rows.clone());
        for (k, v) in &self.terms {
            out.add_term(k.iter().map(|&e| f(e)).collect(), v.clone());
        }
        out
    }
}

/// v_F: the signed sum of {σF} over the column group of F.
pub fn polytabloid<C: Coeff>(f: &RibbonFilling) -> TabloidVector<C> {
    let cols = f.shape().columns();
    let mut acc: Vec<(Vec<usize>, i64)> = vec![(f.entries().to_vec(), 1)];
    for col in cols.iter().filter(|c| c.len() > 1) {
        let arrs = arrangements_with_sign(col);
        let mut next = Vec::with_capacity(acc.len() * arrs.len());
        for (word, s) in &acc {
            for (arr, t) in &arrs {
                let mut w = word.clone();
                for (k, &p) in col.iter().enumerate() {
                    w[arr[k]] = word[p];
                }
                next.push((w, s * t));
            }
        }
        acc = next;
    }
    let mut v = TabloidVector::zero(f.shape().rows().to_vec());
    for (w, s) in acc {
        v.add_term(w, C::from_i64(s));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_term_polytabloid() {
        let f = RibbonFilling::from_rows(&[vec![1, 3], vec![2, 4, 5]]).unwrap();
        let v: TabloidVector<i64> = polytabloid(&f);
        assert_eq!(v.len(), 2);
        assert_eq!(v.coefficient(&[1, 3, 2, 4, 5]), 1);
        assert_eq!(v.coefficient(&[1, 2, 3, 4, 5]), -1);
    }

    #[test]
    fn column_group_size() {
        let f = RibbonFilling::from_rows(&[vec![0], vec![1], vec![2], vec![3]]).unwrap();
        let v: TabloidVector<i64> = polytabloid(&f);
        assert_eq!(v.len(), 24);
    }
}
