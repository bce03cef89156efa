//! Class functions of S_n, irreducible characters and decompositions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partition::{partitions, IntPartition};
use crate::Rational;

thread_local! {
    static MN_CACHE: RefCell<HashMap<(Vec<usize>, Vec<usize>), i64>> = RefCell::new(HashMap::new());
}

/// χ^λ(ρ) by the Murnaghan–Nakayama rule on beta-numbers.
pub fn irreducible_character(lambda: &IntPartition, rho: &IntPartition) -> i64 {
    assert_eq!(lambda.size(), rho.size(), "character arguments of different sizes");
    let l = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + l - 1 - i).collect();
    mn(beta, rho.parts())
}

fn mn(beta: Vec<usize>, rho: &[usize]) -> i64 {
    let Some((&k, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (beta.clone(), rho.to_vec());
    if let Some(v) = MN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return v;
    }
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(nb, rest);
    }
    MN_CACHE.with(|c| c.borrow_mut().insert(key, total));
    total
}

/// A class function on S_n, keyed by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: BTreeMap<IntPartition, Rational>,
}

impl ClassFunction {
    pub fn zero(n: usize) -> Self {
        ClassFunction {
            n,
            values: partitions(n).into_iter().map(|p| (p, Rational::zero())).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::one())
    }

    pub fn irreducible(lambda: &IntPartition) -> Self {
        Self::from_fn(lambda.size(), |rho| Rational::from_integer(irreducible_character(lambda, rho).into()))
    }

    pub fn from_fn(n: usize, f: impl Fn(&IntPartition) -> Rational) -> Self {
        ClassFunction {
            n,
            values: partitions(n).into_iter().map(|p| {
                let v = f(&p);
                (p, v)
            }).collect(),
        }
    }

    pub fn value(&self, rho: &IntPartition) -> Rational {
        self.values.get(rho).cloned().unwrap_or_else(Rational::zero)
    }

    /// Value at the identity.
    pub fn degree(&self) -> Rational {
        self.value(&IntPartition::new(vec![1; self.n]))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |p| self.value(p) + other.value(p))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_fn(self.n, |p| self.value(p) - other.value(p))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_fn(self.n, |p| self.value(p) * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(Zero::is_zero)
    }

    /// ⟨χ, ψ⟩ = Σ_ρ χ(ρ)ψ(ρ)/z_ρ.
    pub fn inner(&self, other: &Self) -> Rational {
        self.values
            .iter()
            .map(|(p, v)| v.clone() * other.value(p) / Rational::from_integer(p.z().into()))
            .sum()
    }
}

/// Multiplicities of irreducibles S^λ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepDecomposition {
    pub n: usize,
    pub mults: BTreeMap<IntPartition, u64>,
}

impl IrrepDecomposition {
    pub fn zero(n: usize) -> Self {
        IrrepDecomposition {
            n,
            mults: BTreeMap::new(),
        }
    }

    pub fn dimension(&self) -> u128 {
        self.mults.iter().map(|(l, &m)| l.dimension() * m as u128).sum()
    }

    pub fn mult(&self, lambda: &IntPartition) -> u64 {
        self.mults.get(lambda).copied().unwrap_or(0)
    }

    pub fn padded(&self) -> PaddedDecomposition {
        PaddedDecomposition {
            n: self.n,
            mults: self.mults.iter().map(|(l, &m)| (l.strip_first_row(), m)).collect(),
        }
    }

    /// max λ_1 over constituents.
    pub fn max_first_row(&self) -> usize {
        self.mults.keys().map(IntPartition::first).max().unwrap_or(0)
    }

    /// max |λ̄| + λ̄_1 over constituents, with λ̄ the shape minus its first row.
    pub fn max_padded_weight(&self) -> usize {
        self.mults
            .keys()
            .map(|l| {
                let b = l.strip_first_row();
                b.size() + b.first()
            })
            .max()
            .unwrap_or(0)
    }

    /// max |λ| + λ_1.
    pub fn max_size_plus_first(&self) -> usize {
        self.mults.keys().map(|l| l.size() + l.first()).max().unwrap_or(0)
    }

    pub fn to_class_function(&self) -> ClassFunction {
        let mut acc = ClassFunction::zero(self.n);
        for (l, &m) in &self.mults {
            acc = acc.add(&ClassFunction::irreducible(l).scale(&Rational::from_integer(m.into())));
        }
        acc
    }
}

/// Multiplicities indexed by λ̄, the shape with its first row removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddedDecomposition {
    pub n: usize,
    pub mults: BTreeMap<IntPartition, u64>,
}

impl PaddedDecomposition {
    /// Restores the shapes at size m, dropping those that do not fit.
    pub fn repad(&self, m: usize) -> IrrepDecomposition {
        IrrepDecomposition {
            n: m,
            mults: self
                .mults
                .iter()
                .filter_map(|(b, &k)| b.pad(m).map(|l| (l, k)))
                .collect(),
        }
    }
}

/// Multiplicities ⟨χ, χ^λ⟩; fails unless they are nonnegative integers.
pub fn decompose(chi: &ClassFunction) -> Result<IrrepDecomposition> {
    decompose_with(chi, &Guards::default())
}

pub fn decompose_with(chi: &ClassFunction, g: &Guards) -> Result<IrrepDecomposition> {
    g.check("n for decomposition", chi.n, g.decompose_max_n)?;
    let mut out = IrrepDecomposition::zero(chi.n);
    for lambda in partitions(chi.n) {
        let m = chi.inner(&ClassFunction::irreducible(&lambda));
        if !m.is_integer() || m.is_negative() {
            return Err(Error::NotACharacter(format!("multiplicity of {lambda} is {m}")));
        }
        if !m.is_zero() {
            out.mults.insert(lambda, m.to_integer().to_u64().unwrap());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_character_values() {
        let l = IntPartition::new(vec![2, 1]);
        assert_eq!(irreducible_character(&l, &IntPartition::new(vec![1, 1, 1])), 2);
        assert_eq!(irreducible_character(&l, &IntPartition::new(vec![2, 1])), 0);
        assert_eq!(irreducible_character(&l, &IntPartition::new(vec![3])), -1);
        let sign = IntPartition::new(vec![1, 1, 1, 1]);
        assert_eq!(irreducible_character(&sign, &IntPartition::new(vec![2, 1, 1])), -1);
        assert_eq!(irreducible_character(&sign, &IntPartition::new(vec![4])), -1);
    }

    #[test]
    fn regular_character() {
        let n = 5;
        let reg = ClassFunction::from_fn(n, |p| {
            if p.parts().iter().all(|&x| x == 1) {
                Rational::from_integer(120.into())
            } else {
                Rational::zero()
            }
        });
        let d = decompose(&reg).unwrap();
        for (l, m) in &d.mults {
            assert_eq!(*m as u128, l.dimension());
        }
        assert_eq!(d.dimension(), 120);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            for rho in partitions(n) {
                let s: i64 = partitions(n).iter().map(|l| irreducible_character(l, &rho).pow(2)).sum();
                assert_eq!(s as u128, rho.z());
            }
        }
    }
}
