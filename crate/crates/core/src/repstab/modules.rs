//! Characters of the chain modules α_S, the homology modules β_S and the
//! Whitney homology modules WH_S of Boolean, d-divisible and partition
//! lattices.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partition::{partitions, IntPartition};
use crate::perm::{product_of, wreath_product, Perm};
use crate::poset::RankSet;
use crate::repstab::classfn::{decompose_with, ClassFunction, IrrepDecomposition};
use crate::repstab::symfunc::SymFunc;
use crate::setpartition::SetPartition;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    Boolean,
    Partition,
    /// Subsets of [n] whose size is divisible by d.
    DDivisible(usize),
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "boolean" | "b" => Ok(Family::Boolean),
            "partition" | "pi" => Ok(Family::Partition),
            _ => s
                .strip_prefix("divisible:")
                .or_else(|| s.strip_prefix("d-divisible:"))
                .and_then(|d| d.parse().ok())
                .filter(|&d: &usize| d > 0)
                .map(Family::DDivisible)
                .ok_or_else(|| Error::InvalidInput(format!("unknown family {s:?}"))),
        }
    }

    /// Rank of the n-th member, or None if it is undefined.
    pub fn rank(&self, n: usize) -> Option<usize> {
        match self {
            Family::Boolean => Some(n),
            Family::Partition => n.checked_sub(1),
            Family::DDivisible(d) => (n % d == 0).then(|| n / d),
        }
    }

    /// Whether S selects proper ranks of the n-th member.
    pub fn valid(&self, s: &RankSet, n: usize) -> bool {
        match self.rank(n) {
            Some(r) => s.as_slice().iter().all(|&x| x >= 1 && x < r),
            None => false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Family::Boolean => "boolean".into(),
            Family::Partition => "partition".into(),
            Family::DDivisible(d) => format!("divisible:{d}"),
        }
    }
}

/// Set partitions of [n] with `blocks` blocks, refining `below` if given,
/// and fixed by σ.
pub fn fixed_set_partitions(sigma: &Perm, blocks: usize, below: Option<&SetPartition>) -> Vec<SetPartition> {
    let n = sigma.degree();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    let mut reps: Vec<usize> = Vec::new();
    fn rec(
        i: usize,
        n: usize,
        target: usize,
        sigma: &Perm,
        below: Option<&SetPartition>,
        labels: &mut Vec<usize>,
        reps: &mut Vec<usize>,
        out: &mut Vec<SetPartition>,
    ) {
        if reps.len() + (n - i) < target {
            return;
        }
        if i == n {
            let p = SetPartition::from_labels(labels);
            if p.relabel(sigma) == p {
                out.push(p);
            }
            return;
        }
        for b in 0..reps.len() {
            if below.map_or(true, |u| u.same_block(i, reps[b])) {
                labels[i] = b;
                rec(i + 1, n, target, sigma, below, labels, reps, out);
            }
        }
        if reps.len() < target {
            labels[i] = reps.len();
            reps.push(i);
            rec(i + 1, n, target, sigma, below, labels, reps, out);
            reps.pop();
        }
    }
    if n > 0 {
        rec(0, n, blocks, sigma, below, &mut labels, &mut reps, &mut out);
    } else if blocks == 0 {
        out.push(SetPartition::discrete(0));
    }
    out
}

/// Subsets of [n] of size k fixed by σ, as masks: unions of cycles.
pub fn fixed_subsets(sigma: &Perm, k: usize) -> Vec<u64> {
    let cycles: Vec<u64> = sigma.cycles().iter().map(|c| c.iter().fold(0, |m, &x| m | 1 << x)).collect();
    let mut out = Vec::new();
    fn rec(i: usize, cycles: &[u64], left: usize, cur: u64, out: &mut Vec<u64>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        if i == cycles.len() {
            return;
        }
        let c = cycles[i].count_ones() as usize;
        if c <= left {
            rec(i + 1, cycles, left - c, cur | cycles[i], out);
        }
        rec(i + 1, cycles, left, cur, out);
    }
    rec(0, &cycles, k, 0, &mut out);
    out
}

/// Number of chains x_1 < … < x_k with x_i in `levels[i]`, given the order.
fn count_chains<T>(levels: &[Vec<T>], leq: impl Fn(&T, &T) -> bool) -> u128 {
    let Some(first) = levels.first() else {
        return 1;
    };
    let mut cnt: Vec<u128> = vec![1; first.len()];
    for w in 1..levels.len() {
        cnt = levels[w]
            .iter()
            .map(|y| {
                levels[w - 1]
                    .iter()
                    .zip(&cnt)
                    .filter(|(x, _)| leq(x, y))
                    .map(|(_, c)| *c)
                    .sum()
            })
            .collect();
    }
    cnt.iter().sum()
}

/// Number of σ-fixed chains of the family's n-th member with rank set T.
pub fn fixed_chain_count(family: Family, t: &RankSet, sigma: &Perm) -> u128 {
    let n = sigma.degree();
    match family {
        Family::Boolean => {
            let levels: Vec<Vec<u64>> = t.as_slice().iter().map(|&r| fixed_subsets(sigma, r)).collect();
            count_chains(&levels, |a, b| a & b == *a)
        }
        Family::DDivisible(d) => {
            let levels: Vec<Vec<u64>> = t.as_slice().iter().map(|&r| fixed_subsets(sigma, d * r)).collect();
            count_chains(&levels, |a, b| a & b == *a)
        }
        Family::Partition => partition_fixed_chains(sigma, t, None, n),
    }
}

fn partition_fixed_chains(sigma: &Perm, t: &RankSet, below: Option<&SetPartition>, n: usize) -> u128 {
    let levels: Vec<Vec<SetPartition>> = t
        .as_slice()
        .iter()
        .map(|&r| fixed_set_partitions(sigma, n - r, below))
        .collect();
    count_chains(&levels, |a, b| a.refines(b))
}

fn check_family(family: Family, n: usize, g: &Guards) -> Result<()> {
    match family {
        Family::Boolean | Family::DDivisible(_) => g.check("n for Boolean characters", n, g.boolean_max_n),
        Family::Partition => g.check("n for partition characters", n, g.partition_max_n),
    }
}

/// The permutation character of S_n on chains with rank set S.
pub fn character_alpha(family: Family, s: &RankSet, n: usize) -> Result<ClassFunction> {
    character_alpha_with(family, s, n, &Guards::default())
}

pub fn character_alpha_with(family: Family, s: &RankSet, n: usize, g: &Guards) -> Result<ClassFunction> {
    check_family(family, n, g)?;
    if !family.valid(s, n) {
        return Err(Error::InvalidRankSet {
            set: s.as_slice().to_vec(),
            rank: family.rank(n).unwrap_or(0),
        });
    }
    let types = partitions(n);
    let values: Vec<(IntPartition, Rational)> = types
        .into_par_iter()
        .map(|rho| {
            let c = fixed_chain_count(family, s, &Perm::of_cycle_type(&rho));
            (rho, Rational::from_integer(c.into()))
        })
        .collect();
    Ok(ClassFunction {
        n,
        values: values.into_iter().collect(),
    })
}

/// β_S = Σ_{T⊆S} (−1)^{|S∖T|} α_T; the zero function when S is not a set
/// of proper ranks.
pub fn character_beta(family: Family, s: &RankSet, n: usize) -> Result<ClassFunction> {
    character_beta_with(family, s, n, &Guards::default())
}

pub fn character_beta_with(family: Family, s: &RankSet, n: usize, g: &Guards) -> Result<ClassFunction> {
    if !family.valid(s, n) {
        return Ok(ClassFunction::zero(n));
    }
    let mut acc = ClassFunction::zero(n);
    for (t, missing) in s.subsets() {
        let a = character_alpha_with(family, &t, n, g)?;
        acc = if missing % 2 == 0 { acc.add(&a) } else { acc.sub(&a) };
    }
    Ok(acc)
}

/// Decomposition of β_S, which also confirms it is a true character.
pub fn decompose_beta(family: Family, s: &RankSet, n: usize) -> Result<IrrepDecomposition> {
    decompose_with(&character_beta(family, s, n)?, &Guards::default())
}

/// Types μ (no parts equal to 1) of elements of rank r in Π_n:
/// |μ| − ℓ(μ) = r and |μ| ≤ n.
pub fn partition_types(r: usize, n: usize) -> Vec<IntPartition> {
    (0..=n)
        .flat_map(partitions)
        .filter(|m| m.parts().iter().all(|&p| p >= 2) && m.size() - m.len() == r)
        .collect()
}

/// The set partition of [|μ|] into consecutive blocks of sizes μ, with
/// equal parts adjacent.
pub fn standard_element(mu: &IntPartition) -> SetPartition {
    let mut blocks = Vec::new();
    let mut next = 0;
    for &p in mu.parts() {
        blocks.push((next..next + p).collect::<Vec<_>>());
        next += p;
    }
    SetPartition::from_blocks(next, &blocks).unwrap()
}

/// The stabilizer Π_i S_{m_i}[S_i] of [`standard_element`].
pub fn type_stabilizer(mu: &IntPartition) -> Vec<Perm> {
    let n = mu.size();
    let mut factors = Vec::new();
    let mut offset = 0;
    let mut sizes: Vec<usize> = mu.parts().to_vec();
    sizes.dedup();
    for i in sizes {
        let m = mu.multiplicity(i);
        factors.push(wreath_product(n, offset, m, i));
        offset += m * i;
    }
    product_of(n, &factors)
}

/// Frobenius characteristic of the essential part of the type-μ component
/// of WH_S(Π_n): Ind from the stabilizer of u_μ to S_{|μ|} of the action on
/// β_{S∖max S} of (0̂, u_μ).
pub fn essential_part_symfunc(s: &RankSet, mu: &IntPartition) -> Result<SymFunc> {
    if s.is_empty() || mu.size() - mu.len() != s.max() || mu.parts().iter().any(|&p| p < 2) {
        return Err(Error::RankMismatch {
            expected: s.max(),
            found: mu.size().saturating_sub(mu.len()),
        });
    }
    let u = standard_element(mu);
    let n = mu.size();
    let low = s.drop_largest(1);
    let subsets = low.subsets();
    let group = type_stabilizer(mu);
    let order = group.len();
    let contrib: Vec<(IntPartition, i128)> = group
        .par_iter()
        .map(|h| {
            let mut v: i128 = 0;
            for (t, missing) in &subsets {
                let c = partition_fixed_chains(h, t, Some(&u), n) as i128;
                v += if missing % 2 == 0 { c } else { -c };
            }
            (h.cycle_type(), v)
        })
        .collect();
    let mut acc: BTreeMap<IntPartition, i128> = BTreeMap::new();
    for (t, v) in contrib {
        *acc.entry(t).or_default() += v;
    }
    let mut out = SymFunc::zero();
    for (t, v) in acc {
        if v != 0 {
            out = out.add(&SymFunc::p(&t).scale(&Rational::new(v.into(), (order as i128).into())));
        }
    }
    Ok(out)
}

/// Decomposition of the essential part as an S_{|μ|}-module.
pub fn essential_part(s: &RankSet, mu: &IntPartition) -> Result<IrrepDecomposition> {
    essential_part_symfunc(s, mu)?.to_decomposition(mu.size())
}

/// ch WH_{S,μ}(Π_n) = h_{n−|μ|}·(essential part).
pub fn wh_component(s: &RankSet, mu: &IntPartition, n: usize) -> Result<SymFunc> {
    if mu.size() > n {
        return Ok(SymFunc::zero());
    }
    Ok(SymFunc::h(n - mu.size()).mul(&essential_part_symfunc(s, mu)?))
}

/// WH_S as a class function. For Π_n this sums the type components; for
/// the Boolean families it is h_{n−k}·β_{S∖max S}(interval of rank max S).
/// The zero function when max S exceeds the rank.
pub fn character_wh(family: Family, s: &RankSet, n: usize) -> Result<ClassFunction> {
    Ok(wh_symfunc(family, s, n)?.to_class_function(n))
}

pub fn wh_symfunc(family: Family, s: &RankSet, n: usize) -> Result<SymFunc> {
    if s.is_empty() || s.as_slice()[0] == 0 {
        return Err(Error::InvalidRankSet {
            set: s.as_slice().to_vec(),
            rank: family.rank(n).unwrap_or(0),
        });
    }
    let Some(rank) = family.rank(n) else {
        return Ok(SymFunc::zero());
    };
    if s.max() > rank {
        return Ok(SymFunc::zero());
    }
    let k = s.max();
    let low = s.drop_largest(1);
    match family {
        Family::Partition => {
            let mut acc = SymFunc::zero();
            for mu in partition_types(k, n) {
                acc = acc.add(&wh_component(s, &mu, n)?);
            }
            Ok(acc)
        }
        Family::Boolean | Family::DDivisible(_) => {
            let size = match family {
                Family::DDivisible(d) => d * k,
                _ => k,
            };
            let inner = if low.is_empty() {
                ClassFunction::trivial(size)
            } else {
                character_beta(family, &low, size)?
            };
            Ok(SymFunc::h(n - size).mul(&SymFunc::from_class_function(&inner)))
        }
    }
}

/// WH_S = Σ_{T⊆S∖max S} (−1)^{|S∖max S ∖ T|} α_{T∪{max S}}, with α of a
/// rank set containing the top read as α without it.
pub fn character_wh_by_alpha(family: Family, s: &RankSet, n: usize) -> Result<ClassFunction> {
    let Some(rank) = family.rank(n) else {
        return Ok(ClassFunction::zero(n));
    };
    if s.is_empty() || s.max() > rank {
        return Ok(ClassFunction::zero(n));
    }
    let low = s.drop_largest(1);
    let mut acc = ClassFunction::zero(n);
    for (t, missing) in low.subsets() {
        let mut ranks = t.as_slice().to_vec();
        if s.max() < rank {
            ranks.push(s.max());
        }
        let a = character_alpha(family, &RankSet::new(ranks)?, n)?;
        acc = if missing % 2 == 0 { acc.add(&a) } else { acc.sub(&a) };
    }
    Ok(acc)
}

/// WH_S = β_S + β_{S∖max S}.
pub fn character_wh_by_beta(family: Family, s: &RankSet, n: usize) -> Result<ClassFunction> {
    let Some(rank) = family.rank(n) else {
        return Ok(ClassFunction::zero(n));
    };
    if s.is_empty() || s.max() > rank {
        return Ok(ClassFunction::zero(n));
    }
    let low = s.drop_largest(1);
    Ok(character_beta(family, s, n)?.add(&character_beta(family, &low, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repstab::classfn::decompose;
    use crate::repstab::symfunc::ribbon_schur;

    fn rs(v: &[usize]) -> RankSet {
        RankSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn alpha_values() {
        let a = character_alpha(Family::Partition, &rs(&[1]), 5).unwrap();
        assert_eq!(a.degree(), Rational::from_integer(10.into()));
        let d = decompose(&character_alpha(Family::Boolean, &rs(&[1]), 4).unwrap()).unwrap();
        assert_eq!(d.mults.len(), 2);
        assert_eq!(character_beta(Family::Partition, &rs(&[1, 2]), 4).unwrap().degree(), Rational::from_integer(6.into()));
        assert!(character_beta(Family::Partition, &RankSet::empty(), 4).unwrap() == ClassFunction::trivial(4));
    }

    #[test]
    fn boolean_beta_is_ribbon() {
        for n in 2..=6 {
            for s in RankSet::all_nonempty_below(n) {
                let b = character_beta(Family::Boolean, &s, n).unwrap();
                assert_eq!(SymFunc::from_class_function(&b), ribbon_schur(&s, n).unwrap(), "{s} {n}");
            }
        }
    }

    #[test]
    fn wh_routes_agree() {
        for (fam, n) in [(Family::Partition, 5), (Family::Boolean, 5), (Family::DDivisible(2), 6)] {
            let r = fam.rank(n).unwrap();
            for s in RankSet::interval(r).subsets().into_iter().map(|(t, _)| t).filter(|t| !t.is_empty()) {
                let a = character_wh(fam, &s, n).unwrap();
                assert_eq!(a, character_wh_by_alpha(fam, &s, n).unwrap(), "{fam:?} {s}");
                assert_eq!(a, character_wh_by_beta(fam, &s, n).unwrap(), "{fam:?} {s}");
            }
        }
    }

    #[test]
    fn wh1_is_atom_module() {
        for n in 2..=6 {
            let w = wh_symfunc(Family::Partition, &rs(&[1]), n).unwrap();
            assert_eq!(w, SymFunc::h(2).mul(&SymFunc::h(n - 2)));
        }
    }

    #[test]
    fn fixed_partitions_count() {
        let id = Perm::identity(5);
        assert_eq!(fixed_set_partitions(&id, 3, None).len(), 25);
        let t = Perm::transposition(4, 0, 1);
        assert!(fixed_set_partitions(&t, 3, None).iter().all(|p| p.relabel(&t) == *p));
    }
}
