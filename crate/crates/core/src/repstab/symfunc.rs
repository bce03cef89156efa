//! Symmetric functions stored in the power-sum basis with exact rational
//! coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::partition::{partitions, IntPartition};
use crate::poset::RankSet;
use crate::repstab::classfn::{irreducible_character, ClassFunction, IrrepDecomposition};
use crate::tableaux::ribbon::ribbon_of;
use crate::Rational;

fn ratio(a: i64, b: u128) -> Rational {
    Rational::new(a.into(), b.into())
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    /// Coefficient of p_μ.
    pub terms: BTreeMap<IntPartition, Rational>,
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        Self::p(&IntPartition::empty())
    }

    pub fn p(mu: &IntPartition) -> Self {
        let mut f = SymFunc::zero();
        f.terms.insert(mu.clone(), Rational::one());
        f
    }

    /// h_k = Σ_μ p_μ / z_μ.
    pub fn h(k: usize) -> Self {
        SymFunc {
            terms: partitions(k).into_iter().map(|m| {
                let z = m.z();
                (m, ratio(1, z))
            }).collect(),
        }
    }

    /// e_k = Σ_μ ε_μ p_μ / z_μ.
    pub fn e(k: usize) -> Self {
        SymFunc {
            terms: partitions(k)
                .into_iter()
                .map(|m| {
                    let sign = if (m.size() - m.len()) % 2 == 0 { 1 } else { -1 };
                    let z = m.z();
                    (m, ratio(sign, z))
                })
                .collect(),
        }
    }

    /// h_α for a composition α.
    pub fn h_product(parts: &[usize]) -> Self {
        parts.iter().fold(Self::one(), |acc, &k| acc.mul(&Self::h(k)))
    }

    /// s_λ = Σ_ρ χ^λ(ρ) p_ρ / z_ρ.
    pub fn schur(lambda: &IntPartition) -> Self {
        SymFunc {
            terms: partitions(lambda.size())
                .into_iter()
                .filter_map(|rho| {
                    let c = irreducible_character(lambda, &rho);
                    let z = rho.z();
                    (c != 0).then(|| (rho, ratio(c, z)))
                })
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(IntPartition::size).max()
    }

    fn insert(&mut self, mu: IntPartition, c: Rational) {
        let slot = self.terms.entry(mu.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&mu);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SymFunc {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.insert(a.union(b), x.clone() * y.clone());
            }
        }
        out
    }

    /// f[g], with p_k[g] obtained from g by scaling every power-sum index
    /// by k.
    pub fn plethysm(&self, g: &Self) -> Result<Self> {
        self.plethysm_with(g, &Guards::default())
    }

    pub fn plethysm_with(&self, g: &Self, guards: &Guards) -> Result<Self> {
        let df = self.degree().unwrap_or(0);
        let dg = g.degree().unwrap_or(0);
        guards.check("plethysm degree", df * dg, guards.plethysm_max_degree)?;
        let mut pk: BTreeMap<usize, SymFunc> = BTreeMap::new();
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            let mut term = Self::one();
            for &k in mu.parts() {
                let gk = pk
                    .entry(k)
                    .or_insert_with(|| SymFunc {
                        terms: g.terms.iter().map(|(m, v)| (m.scale(k), v.clone())).collect(),
                    })
                    .clone();
                term = term.mul(&gk);
            }
            out = out.add(&term.scale(c));
        }
        Ok(out)
    }

    /// Schur expansion: ⟨f, s_ν⟩ = Σ_ρ c_ρ χ^ν(ρ).
    pub fn to_schur(&self) -> BTreeMap<IntPartition, Rational> {
        let mut out = BTreeMap::new();
        let mut degrees: Vec<usize> = self.terms.keys().map(IntPartition::size).collect();
        degrees.sort_unstable();
        degrees.dedup();
        for d in degrees {
            for nu in partitions(d) {
                let v: Rational = self
                    .terms
                    .iter()
                    .filter(|(rho, _)| rho.size() == d)
                    .map(|(rho, c)| c.clone() * Rational::from_integer(irreducible_character(&nu, rho).into()))
                    .sum();
                if !v.is_zero() {
                    out.insert(nu, v);
                }
            }
        }
        out
    }

    /// The class function of degree n whose characteristic is the degree-n
    /// part of f: value c_ρ·z_ρ at ρ.
    pub fn to_class_function(&self, n: usize) -> ClassFunction {
        ClassFunction::from_fn(n, |rho| {
            self.terms.get(rho).cloned().unwrap_or_else(Rational::zero) * Rational::from_integer(rho.z().into())
        })
    }

    /// The Frobenius characteristic Σ_ρ χ(ρ) p_ρ / z_ρ.
    pub fn from_class_function(chi: &ClassFunction) -> Self {
        let mut out = Self::zero();
        for (rho, v) in &chi.values {
            out.insert(rho.clone(), v.clone() / Rational::from_integer(rho.z().into()));
        }
        out
    }

    /// Decomposition of a homogeneous Schur-positive function of degree n.
    pub fn to_decomposition(&self, n: usize) -> Result<IrrepDecomposition> {
        let mut d = IrrepDecomposition::zero(n);
        for (nu, c) in self.to_schur() {
            if nu.size() != n || !c.is_integer() || c < Rational::zero() {
                return Err(Error::NotACharacter(format!("coefficient {c} on s_{nu}")));
            }
            d.mults.insert(nu, c.to_integer().try_into().unwrap());
        }
        Ok(d)
    }
}

/// Σ mult·s_λ.
pub fn frobenius(d: &IrrepDecomposition) -> SymFunc {
    d.mults
        .iter()
        .fold(SymFunc::zero(), |acc, (l, &m)| acc.add(&SymFunc::schur(l).scale(&Rational::from_integer(m.into()))))
}

/// The ribbon Schur function of Rib(S) in degree n, by inclusion–exclusion
/// over T ⊆ S of h applied to the row lengths of Rib(T).
pub fn ribbon_schur(s: &RankSet, n: usize) -> Result<SymFunc> {
    if s.as_slice().iter().any(|&x| x == 0 || x >= n) {
        return Err(Error::InvalidRankSet {
            set: s.as_slice().to_vec(),
            rank: n,
        });
    }
    let mut out = SymFunc::zero();
    for (t, missing) in s.subsets() {
        let rows = ribbon_of(&t, n)?.rows().to_vec();
        let term = SymFunc::h_product(&rows);
        out = if missing % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> IntPartition {
        IntPartition::new(v.to_vec())
    }

    #[test]
    fn hook_ribbons() {
        for n in 2..7 {
            for i in 1..n {
                let r = ribbon_schur(&RankSet::interval(i), n).unwrap();
                let mut hook = vec![n - i];
                hook.extend(std::iter::repeat(1).take(i));
                assert_eq!(r, SymFunc::schur(&part(&hook)));
            }
        }
    }

    #[test]
    fn pieri_and_plethysm() {
        let s = SymFunc::h(1).mul(&SymFunc::h(3)).to_schur();
        assert_eq!(s.len(), 2);
        assert!(s.contains_key(&part(&[4])) && s.contains_key(&part(&[3, 1])));
        let f = SymFunc::schur(&part(&[2, 1]));
        assert_eq!(SymFunc::h(1).plethysm(&f).unwrap(), f);
        assert_eq!(SymFunc::p(&part(&[1])).plethysm(&f).unwrap(), f);
        let h2h2 = SymFunc::h(2).plethysm(&SymFunc::h(2)).unwrap().to_schur();
        assert_eq!(h2h2.keys().cloned().collect::<Vec<_>>(), vec![part(&[2, 2]), part(&[4])]);
    }

    #[test]
    fn class_function_round_trip() {
        let f = SymFunc::schur(&part(&[3, 1, 1]));
        let chi = f.to_class_function(5);
        assert_eq!(SymFunc::from_class_function(&chi), f);
        assert_eq!(chi, ClassFunction::irreducible(&part(&[3, 1, 1])));
    }
}
