//! Graded pieces of the Orlik–Solomon algebra of a geometric lattice and
//! their match with WH_{1,…,i} and with NBC sets.
//!
//! The algebra is the one of the simple matroid whose flats form the
//! lattice, with generators indexed by atom positions.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::chains::{bar_f_chain, ChainMode, ChainVector};
use crate::linalg::{Eliminator, SparseVec};
use crate::matroid::Matroid;
use crate::perm::symmetric_group;
use crate::poset::{GradedPoset, RankSet};
use crate::shelling::{is_nbc_set, join_mask, Shelling};
use crate::tableaux::ribbon::{ribbon_wh, RibbonFilling};
use crate::tableaux::tabloid::polytabloid;
use crate::Rational;

const MAX_ATOMS: usize = 20;

fn atom_count(l: &GradedPoset) -> Result<usize> {
    let m = l.atoms().len();
    if m > MAX_ATOMS {
        return Err(Error::Guard {
            what: "atoms for Orlik-Solomon computations",
            value: m as u128,
            cap: MAX_ATOMS as u128,
        });
    }
    Ok(m)
}

fn subsets_of_size(m: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    fn rec(start: usize, m: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for e in start..=m - k {
            rec(e + 1, m, k - 1, cur | 1 << e, out);
        }
    }
    if k <= m {
        rec(0, m, k, 0, &mut out);
    }
    out
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&e| mask >> e & 1 == 1).collect()
}

/// Rank of the join of a set of atom positions.
pub fn atom_set_rank(l: &GradedPoset, mask: u64) -> Result<usize> {
    Ok(l.rank_of(join_mask(l, mask)?))
}

/// Circuits of the simple matroid of the lattice, as masks of atom positions.
pub fn lattice_circuits(l: &GradedPoset) -> Result<Vec<u64>> {
    let m = atom_count(l)?;
    let mut out = Vec::new();
    for k in 3..=(l.rank() + 1).min(m) {
        for c in subsets_of_size(m, k) {
            if atom_set_rank(l, c)? != k - 1 {
                continue;
            }
            let mut minimal = true;
            for e in members(c) {
                if atom_set_rank(l, c & !(1 << e))? != k - 1 {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// e_A ∧ e_B as (sign, A ∪ B), or None when they overlap.
fn wedge(a: u64, b: u64) -> Option<(i64, u64)> {
    if a & b != 0 {
        return None;
    }
    let mut inv = 0;
    for x in members(a) {
        inv += (b & ((1u64 << x) - 1)).count_ones();
    }
    Some((if inv % 2 == 0 { 1 } else { -1 }, a | b))
}

/// ∂e_C = Σ_j (−1)^j e_{C∖c_j}, with C in increasing order.
fn partial(c: u64) -> Vec<(i64, u64)> {
    members(c)
        .into_iter()
        .enumerate()
        .map(|(j, e)| (if j % 2 == 0 { 1 } else { -1 }, c & !(1 << e)))
        .collect()
}

/// dim OS^i: C(m, i) minus the rank of the degree-i part of the ideal
/// spanned by the ∂e_C ∧ e_R.
pub fn os_dimension(l: &GradedPoset, i: usize) -> Result<usize> {
    let m = atom_count(l)?;
    if i > m {
        return Ok(0);
    }
    let monomials = subsets_of_size(m, i);
    let index: HashMap<u64, usize> = monomials.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    let mut e = Eliminator::<Rational>::new();
    for c in lattice_circuits(l)? {
        let k = c.count_ones() as usize;
        if k - 1 > i {
            continue;
        }
        let dc = partial(c);
        for r in subsets_of_size(m, i + 1 - k) {
            let mut acc: HashMap<usize, i64> = HashMap::new();
            for &(s, a) in &dc {
                if let Some((t, ab)) = wedge(a, r) {
                    *acc.entry(index[&ab]).or_default() += s * t;
                }
            }
            let mut v: SparseVec<Rational> = acc
                .into_iter()
                .filter(|e| e.1 != 0)
                .map(|(k, x)| (k, Rational::from_integer(x.into())))
                .collect();
            v.sort_by_key(|e| e.0);
            if !v.is_empty() {
                e.push(v);
            }
        }
    }
    Ok(monomials.len() - e.rank())
}

/// Number of NBC sets of size i.
pub fn nbc_count(sh: &Shelling, i: usize) -> Result<usize> {
    let m = atom_count(sh.lattice)?;
    let mut n = 0;
    for a in subsets_of_size(m, i) {
        if is_nbc_set(sh.lattice, &sh.ord, &members(a))? {
            n += 1;
        }
    }
    Ok(n)
}

/// Size of the ribbon basis of WH_{1,…,i}: descending single-column fillings.
pub fn wh_column_count(sh: &Shelling, i: usize) -> Result<usize> {
    if i == 0 {
        return Ok(1);
    }
    let s = RankSet::interval(i);
    Ok(sh.wh_fillings(&s)?.iter().map(|(_, f)| f.len()).sum())
}

fn column_chain(sh: &Shelling, word: Vec<usize>) -> Result<ChainVector<Rational>> {
    let n = word.len();
    let shape = ribbon_wh(&RankSet::interval(n))?;
    let f = RibbonFilling::new(shape, word)?;
    bar_f_chain(sh.lattice, &polytabloid::<Rational>(&f), ChainMode::Whitney)
}

/// The relation attached to a set D of i+1 atoms of rank i: omit one
/// element of the unique circuit C ⊆ D at a time, keep the other atoms in
/// their places in the descending listing of D, and put what is left of C
/// into the remaining places in descending order.
pub fn generalized_relation(sh: &Shelling, d: u64) -> Result<Vec<(i64, Vec<usize>)>> {
    let l = sh.lattice;
    let i = d.count_ones() as usize - 1;
    if atom_set_rank(l, d)? != i {
        return Err(Error::InvalidInput("D must have nullity one".into()));
    }
    let circuits: Vec<u64> = lattice_circuits(l)?.into_iter().filter(|&c| c & d == c).collect();
    let &[c] = circuits.as_slice() else {
        return Err(Error::InvalidInput("D must contain exactly one circuit".into()));
    };
    let key = |p: &usize| std::cmp::Reverse(sh.ord.key(*p));
    let mut listing = members(d);
    listing.sort_by_key(key);
    let mut circ = members(c);
    circ.sort_by_key(key);
    let last = listing.iter().rposition(|p| c >> p & 1 == 1).unwrap();
    listing.remove(last);
    let slots: Vec<usize> = (0..listing.len()).filter(|&k| c >> listing[k] & 1 == 1).collect();
    let mut out = Vec::with_capacity(circ.len());
    for s in 0..circ.len() {
        let rest: Vec<usize> = circ.iter().enumerate().filter(|&(k, _)| k != s).map(|(_, &p)| p).collect();
        let mut word = listing.clone();
        for (slot, p) in slots.iter().zip(rest) {
            word[*slot] = p;
        }
        out.push((if s % 2 == 0 { 1 } else { -1 }, word));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OsReport {
    pub degree: usize,
    pub os_dimension: usize,
    pub nbc_sets: usize,
    pub wh_basis: usize,
    pub relations_checked: usize,
    pub relations_failed: usize,
}

impl OsReport {
    pub fn passed(&self) -> bool {
        self.os_dimension == self.nbc_sets && self.nbc_sets == self.wh_basis && self.relations_failed == 0
    }
}

/// Compares OS^i, NBC_i and WH_{1..i} in every degree and checks that each
/// generalized relation vanishes after \bar f_chain.
pub fn verify_os(sh: &Shelling) -> Result<Vec<OsReport>> {
    let l = sh.lattice;
    let m = atom_count(l)?;
    let mut out = Vec::new();
    for i in 1..=l.rank() {
        let mut checked = 0;
        let mut failed = 0;
        for d in subsets_of_size(m, i + 1) {
            if atom_set_rank(l, d)? != i {
                continue;
            }
            let mut sum = ChainVector::<Rational>::zero(ChainMode::Whitney);
            for (sign, word) in generalized_relation(sh, d)? {
                let v = column_chain(sh, word)?;
                sum = if sign > 0 { sum.add(&v) } else { sum.sub(&v) };
            }
            checked += 1;
            if !sum.is_zero() {
                failed += 1;
            }
        }
        out.push(OsReport {
            degree: i,
            os_dimension: os_dimension(l, i)?,
            nbc_sets: nbc_count(sh, i)?,
            wh_basis: wh_column_count(sh, i)?,
            relations_checked: checked,
            relations_failed: failed,
        });
    }
    Ok(out)
}

/// One edge list per isomorphism class of simple graphs on `n` vertices
/// with at least one edge.
pub fn graph_classes(n: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let pos: HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let perms = symmetric_group(n);
    let mut canon = BTreeSet::new();
    for mask in 1u64..1 << edges.len() {
        let best = perms
            .iter()
            .map(|g| {
                members(mask).into_iter().fold(0u64, |acc, k| {
                    let (a, b) = edges[k];
                    let (x, y) = (g.apply(a), g.apply(b));
                    acc | 1 << pos[&(x.min(y), x.max(y))]
                })
            })
            .min()
            .unwrap();
        canon.insert(best);
    }
    canon
        .into_iter()
        .map(|m| members(m).into_iter().map(|k| edges[k]).collect())
        .collect()
}

/// The matroids used for the Orlik–Solomon comparison: graphic matroids
/// of all graphs on five vertices, U_{2,3} and U_{3,5}.
pub fn os_test_matroids() -> Result<Vec<(String, Matroid)>> {
    let mut out = Vec::new();
    for g in graph_classes(5) {
        let name = g.iter().map(|(a, b)| format!("{}{}", a + 1, b + 1)).collect::<Vec<_>>().join(",");
        out.push((format!("graph[{name}]"), Matroid::graphic(5, &g)?));
    }
    out.push(("U(2,3)".into(), Matroid::uniform(2, 3)?));
    out.push(("U(3,5)".into(), Matroid::uniform(3, 5)?));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{lattice_of_flats, partition_lattice};

    #[test]
    fn graph_class_count() {
        assert_eq!(graph_classes(4).len(), 10);
        assert_eq!(graph_classes(5).len(), 33);
    }

    #[test]
    fn pi4_os_matches() {
        let p4 = partition_lattice(4).unwrap();
        let sh = Shelling::natural(&p4).unwrap();
        let dims: Vec<usize> = (0..=3).map(|i| os_dimension(&p4, i).unwrap()).collect();
        assert_eq!(dims, vec![1, 6, 11, 6]);
        for r in verify_os(&sh).unwrap() {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn uniform_rank_two() {
        let l = lattice_of_flats(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert_eq!(lattice_circuits(&l).unwrap().len(), 1);
        assert_eq!(os_dimension(&l, 2).unwrap(), 2);
    }
}
