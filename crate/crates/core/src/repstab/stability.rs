//! Representation stability scans and sharpness certificates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::IntPartition;
use crate::poset::RankSet;
use crate::repstab::classfn::{decompose, IrrepDecomposition, PaddedDecomposition};
use crate::repstab::modules::{character_alpha, character_beta, essential_part, partition_types, Family};
use crate::tableaux::swappable::k_statistic_of_type;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Stable from the predicted bound on and not one step earlier.
    Sharp,
    /// The scan contradicts the predicted bound.
    Refuted,
    /// The range cannot decide.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub bound: usize,
    pub range: (usize, usize),
    /// Least N with the padded decomposition at every n in [N, max] equal
    /// to the one at max.
    pub stable_at: Option<usize>,
    pub sharp: bool,
    pub verdict: Verdict,
    /// A λ̄ whose multiplicity at bound−1 differs from the stable value.
    pub witness: Option<IntPartition>,
    pub witness_mults: Option<(u64, u64)>,
}

/// Scans padded decompositions indexed by consecutive n.
pub fn stability_scan(decs: &BTreeMap<usize, IrrepDecomposition>, bound: usize) -> StabilityReport {
    let lo = decs.keys().next().copied().unwrap_or(0);
    let hi = decs.keys().last().copied().unwrap_or(0);
    let padded: BTreeMap<usize, PaddedDecomposition> = decs.iter().map(|(&n, d)| (n, d.padded())).collect();
    let last = &padded[&hi].mults;
    let mut stable_at = hi;
    for n in (lo..hi).rev() {
        match padded.get(&n) {
            Some(p) if &p.mults == last => stable_at = n,
            _ => break,
        }
    }
    let covers = lo < bound && bound + 2 <= hi && (lo..=hi).all(|n| padded.contains_key(&n));
    let (witness, witness_mults) = match bound.checked_sub(1).and_then(|b| padded.get(&b)) {
        Some(p) => {
            let keys: std::collections::BTreeSet<&IntPartition> = p.mults.keys().chain(last.keys()).collect();
            keys.into_iter()
                .find_map(|k| {
                    let a = p.mults.get(k).copied().unwrap_or(0);
                    let b = last.get(k).copied().unwrap_or(0);
                    (a != b).then(|| (k.clone(), (a, b)))
                })
                .map_or((None, None), |(k, m)| (Some(k), Some(m)))
        }
        None => (None, None),
    };
    let sharp = covers && stable_at == bound && stable_at < hi;
    let verdict = if !covers || stable_at == hi {
        Verdict::Inconclusive
    } else if sharp {
        Verdict::Sharp
    } else {
        Verdict::Refuted
    };
    StabilityReport {
        bound,
        range: (lo, hi),
        stable_at: (stable_at < hi).then_some(stable_at),
        sharp,
        verdict,
        witness,
        witness_mults,
    }
}

/// Decompositions of n ↦ module(n) over a range; zero where S does not fit.
pub fn scan_decompositions(
    range: std::ops::RangeInclusive<usize>,
    module: impl Fn(usize) -> Result<crate::repstab::classfn::ClassFunction>,
) -> Result<BTreeMap<usize, IrrepDecomposition>> {
    range.map(|n| Ok((n, decompose(&module(n)?)?))).collect()
}

/// Stability of α_S against k_P·max S (2 for Boolean, 4 for Π_n).
pub fn chain_module_stability(family: Family, s: &RankSet, range: std::ops::RangeInclusive<usize>) -> Result<StabilityReport> {
    let k = match family {
        Family::Boolean => 2,
        Family::Partition => 4,
        Family::DDivisible(d) => 2 * d,
    };
    let decs = scan_decompositions(range, |n| {
        if family.valid(s, n) {
            character_alpha(family, s, n)
        } else {
            Ok(crate::repstab::classfn::ClassFunction::zero(n))
        }
    })?;
    Ok(stability_scan(&decs, k * s.max()))
}

/// β_S of the family over a range, scanned against `bound`.
pub fn beta_stability(family: Family, s: &RankSet, range: std::ops::RangeInclusive<usize>, bound: usize) -> Result<StabilityReport> {
    let decs = scan_decompositions(range, |n| character_beta(family, s, n))?;
    Ok(stability_scan(&decs, bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBound {
    pub mu: IntPartition,
    /// max |λ| + λ_1 over the essential part.
    pub max_weight: usize,
    pub k_statistic: usize,
    /// 4 max S − |S| + 1 − K.
    pub bound: usize,
    pub within_bound: bool,
    /// For μ with smallest part k ≥ 3: whether max |λ̄|+λ̄_1 ≤ (2k/(k−1))·max S.
    pub min_part_bound: Option<bool>,
}

/// For each type μ of rank max S with |μ| ≤ `max_size`, compares the
/// essential part against 4 max S − |S| + 1 − K(μ) and, when every part is
/// at least k ≥ 3, against 2k·max S/(k−1).
pub fn component_bound_check(s: &RankSet, max_size: usize) -> Result<Vec<ComponentBound>> {
    let m = s.max();
    let mut out = Vec::new();
    for mu in partition_types(m, max_size) {
        let ess = essential_part(s, &mu)?;
        let w = ess.max_size_plus_first();
        let k = k_statistic_of_type(&mu);
        let bound = (4 * m + 1).saturating_sub(s.len() + k);
        let kmin = mu.parts().iter().copied().min().unwrap_or(2);
        let min_part_bound = (kmin >= 3).then(|| (w * (kmin - 1)) <= 2 * kmin * m);
        out.push(ComponentBound {
            mu,
            max_weight: w,
            k_statistic: k,
            bound,
            within_bound: w <= bound,
            min_part_bound,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_one_boolean_stable_at_two() {
        let s = RankSet::new(vec![1]).unwrap();
        let r = chain_module_stability(Family::Boolean, &s, 1..=5).unwrap();
        assert_eq!(r.verdict, Verdict::Sharp, "{r:?}");
        assert_eq!(r.stable_at, Some(2));
    }

    #[test]
    fn short_range_is_inconclusive() {
        let s = RankSet::new(vec![1]).unwrap();
        let r = chain_module_stability(Family::Partition, &s, 2..=5).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }
}
