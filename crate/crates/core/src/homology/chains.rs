//! Formal combinations of chains and the simplicial boundary.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::poset::GradedPoset;
use crate::scalar::{exact_string, Coeff};
use crate::shelling::join_mask;
use crate::tableaux::tabloid::TabloidVector;

/// Which complex a chain lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ChainMode {
    /// Chains of P^S; keys list the elements at the ranks of S.
    Beta,
    /// Chains of (0̂, u)^{S∖max S} followed by u itself, which the boundary
    /// never deletes.
    Whitney,
}

/// A linear combination of chains, keyed by their elements bottom to top.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainVector<C> {
    mode: ChainMode,
    terms: BTreeMap<Vec<usize>, C>,
}

impl<C: Coeff> ChainVector<C> {
    pub fn zero(mode: ChainMode) -> Self {
        ChainVector {
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(mode: ChainMode, chain: Vec<usize>) -> Self {
        let mut v = Self::zero(mode);
        v.add_term(chain, C::one());
        v
    }

    pub fn mode(&self) -> ChainMode {
        self.mode
    }

    pub fn add_term(&mut self, chain: Vec<usize>, c: C) {
        let slot = self.terms.entry(chain.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_negligible() {
            self.terms.remove(&chain);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, chain: &[usize]) -> C {
        self.terms.get(chain).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.mode);
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

    /// d = Σ_i (−1)^{i−1} d_i, where d_i deletes the i-th element.
    pub fn boundary(&self) -> Self {
        let mut out = Self::zero(self.mode);
        for (chain, c) in &self.terms {
            let deletable = match self.mode {
                ChainMode::Beta => chain.len(),
                ChainMode::Whitney => chain.len().saturating_sub(1),
            };
            for i in 0..deletable {
                let mut face = chain.clone();
                face.remove(i);
                let s = if i % 2 == 0 { c.clone() } else { -c.clone() };
                out.add_term(face, s);
            }
        }
        out
    }

    /// Image under a letter permutation acting on the poset.
    pub fn act(&self, l: &GradedPoset, g: &Perm) -> Result<Self> {
        let mut out = Self::zero(self.mode);
        for (chain, c) in &self.terms {
            let img: Option<Vec<usize>> = chain.iter().map(|&x| l.act(g, x)).collect();
            out.add_term(img.ok_or(Error::NoAction)?, c.clone());
        }
        Ok(out)
    }

    pub fn to_json(&self, l: &GradedPoset) -> Vec<ChainTermJson> {
        self.terms
            .iter()
            .map(|(k, v)| ChainTermJson {
                chain: k.iter().map(|&x| l.describe(x)).collect(),
                coeff: exact_string(v),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChainTermJson {
    pub chain: Vec<String>,
    pub coeff: String,
}

/// \bar f_chain: each tabloid goes to the chain of joins of its row
/// prefixes. In β mode the join of all rows is the top and is dropped; in
/// Whitney mode it is kept as the fixed last element.
pub fn bar_f_chain<C: Coeff>(l: &GradedPoset, v: &TabloidVector<C>, mode: ChainMode) -> Result<ChainVector<C>> {
    let rows = v.row_lengths().to_vec();
    let mut cache: HashMap<u64, usize> = HashMap::new();
    let mut out = ChainVector::zero(mode);
    for (word, c) in v.terms() {
        let mut mask = 0u64;
        let mut chain = Vec::with_capacity(rows.len());
        let mut s = 0;
        for &r in &rows {
            for &p in &word[s..s + r] {
                mask |= 1 << p;
            }
            s += r;
            let j = match cache.get(&mask) {
                Some(&j) => j,
                None => {
                    let j = join_mask(l, mask)?;
                    cache.insert(mask, j);
                    j
                }
            };
            if l.rank_of(j) != s {
                return Err(Error::Dependent(word.clone()));
            }
            chain.push(j);
        }
        if mode == ChainMode::Beta {
            if chain.pop() != Some(l.top()) {
                return Err(Error::Dependent(word.clone()));
            }
        }
        out.add_term(chain, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_signs() {
        let mut v = ChainVector::<i64>::zero(ChainMode::Beta);
        v.add_term(vec![1, 2, 3], 1);
        let d = v.boundary();
        assert_eq!(d.coefficient(&[2, 3]), 1);
        assert_eq!(d.coefficient(&[1, 3]), -1);
        assert_eq!(d.coefficient(&[1, 2]), 1);
        assert!(d.boundary().is_zero());
        let mut w = ChainVector::<i64>::zero(ChainMode::Whitney);
        w.add_term(vec![1, 9], 1);
        assert_eq!(w.boundary().coefficient(&[9]), 1);
        assert_eq!(w.boundary().len(), 1);
    }
}
