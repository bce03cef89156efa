//! Ribbon bases for β_S and WH_S, their verification, and traces of the
//! symmetric group action written in these bases.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::betti::{betti_top, betti_top_below};
use crate::homology::chains::{bar_f_chain, ChainMode, ChainVector};
use crate::linalg::{invert, Eliminator, SparseVec};
use crate::perm::Perm;
use crate::poset::{GradedPoset, PosetChain, RankSet};
use crate::shelling::{rank_mask, res_s, Shelling};
use crate::tableaux::ribbon::RibbonFilling;
use crate::tableaux::tabloid::polytabloid;
use crate::Rational;

/// One basis vector \bar f_chain(v_F) together with its filling.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub filling: RibbonFilling,
    /// The element u for Whitney homology; the top of P otherwise.
    pub top: usize,
    pub vector: ChainVector<Rational>,
}

/// The chain res_S(M) attached to a standard filling, one per basis
/// element and in the same order.
pub type Facet = PosetChain;

pub fn ribbon_basis_beta(sh: &Shelling, s: &RankSet) -> Result<Vec<BasisElement>> {
    let l = sh.lattice;
    sh.standard_fillings(s)?
        .into_iter()
        .map(|f| {
            let v = bar_f_chain(l, &polytabloid::<Rational>(&f), ChainMode::Beta)?;
            Ok(BasisElement {
                filling: f,
                top: l.top(),
                vector: v,
            })
        })
        .collect()
}

pub fn ribbon_basis_wh(sh: &Shelling, s: &RankSet) -> Result<Vec<BasisElement>> {
    let l = sh.lattice;
    let mut out = Vec::new();
    for (u, fs) in sh.wh_fillings(s)? {
        for f in fs {
            let v = bar_f_chain(l, &polytabloid::<Rational>(&f), ChainMode::Whitney)?;
            out.push(BasisElement {
                filling: f,
                top: u,
                vector: v,
            });
        }
    }
    Ok(out)
}

/// res_S of the maximal chains whose label word has descent set S, in the
/// order of [`ribbon_basis_beta`].
pub fn homology_facets(sh: &Shelling, s: &RankSet) -> Result<Vec<Facet>> {
    s.validate(sh.lattice.rank())?;
    let want = rank_mask(s);
    Ok(sh
        .words_below(sh.lattice.top())
        .into_iter()
        .filter(|cw| cw.descents == want)
        .map(|cw| res_s(&cw.chain, s))
        .collect())
}

/// Facets for Whitney homology: the S∖max S part of the chain followed by u.
pub fn wh_homology_facets(sh: &Shelling, s: &RankSet) -> Result<Vec<Facet>> {
    let l = sh.lattice;
    if s.is_empty() || s.max() > l.rank() {
        return Err(Error::InvalidRankSet {
            set: s.as_slice().to_vec(),
            rank: l.rank(),
        });
    }
    let low = s.drop_largest(1);
    let want = rank_mask(&low);
    let mut out = Vec::new();
    for &u in l.at_rank(s.max()) {
        for cw in sh.words_below(u) {
            if cw.descents == want {
                let mut f = res_s(&cw.chain, &low);
                f.push(u);
                out.push(f);
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisReport {
    pub size: usize,
    /// The brute-force dimension of the homology group.
    pub betti: usize,
    pub all_cycles: bool,
    /// Basis element i meets facet j with coefficient δ_ij.
    pub incidence_identity: bool,
    /// Ones on the diagonal and an acyclic off-diagonal pattern, so some
    /// common reordering makes the incidence matrix unitriangular.
    pub incidence_unitriangular: bool,
    /// A pair (i, j), i ≠ j, with nonzero incidence, if any.
    pub off_diagonal_witness: Option<(usize, usize)>,
    pub rank: usize,
}

impl BasisReport {
    pub fn passed(&self) -> bool {
        self.all_cycles && self.incidence_unitriangular && self.rank == self.size && self.size == self.betti
    }
}

fn acyclic(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in edges {
        out[a].push(b);
        indeg[b] += 1;
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

fn chain_index(vs: &[&ChainVector<Rational>]) -> HashMap<Vec<usize>, usize> {
    let mut idx = HashMap::new();
    for v in vs {
        for (c, _) in v.terms() {
            let n = idx.len();
            idx.entry(c.clone()).or_insert(n);
        }
    }
    idx
}

fn sparse(v: &ChainVector<Rational>, idx: &HashMap<Vec<usize>, usize>) -> SparseVec<Rational> {
    let mut s: SparseVec<Rational> = v.terms().map(|(c, x)| (idx[c], x.clone())).collect();
    s.sort_by_key(|e| e.0);
    s
}

/// Rank of a list of chain vectors over ℚ.
pub fn span_rank(vs: &[&ChainVector<Rational>]) -> usize {
    let idx = chain_index(vs);
    let mut e = Eliminator::new();
    for v in vs {
        e.push(sparse(v, &idx));
    }
    e.rank()
}

/// Checks a candidate basis: cycles, identity incidence with the facets,
/// full rank, and size equal to the brute-force Betti number.
pub fn verify_basis(basis: &[BasisElement], facets: &[Facet], betti: usize) -> BasisReport {
    let all_cycles = basis.iter().all(|b| b.vector.boundary().is_zero());
    let square = basis.len() == facets.len();
    let mut diagonal_ones = square;
    let mut off = Vec::new();
    if square {
        for (i, b) in basis.iter().enumerate() {
            for (j, f) in facets.iter().enumerate() {
                let c = b.vector.coefficient(f);
                if i == j {
                    diagonal_ones &= c.is_one();
                } else if !c.is_zero() {
                    off.push((i, j));
                }
            }
        }
    }
    let vs: Vec<&ChainVector<Rational>> = basis.iter().map(|b| &b.vector).collect();
    BasisReport {
        size: basis.len(),
        betti,
        all_cycles,
        incidence_identity: diagonal_ones && off.is_empty(),
        incidence_unitriangular: diagonal_ones && acyclic(basis.len(), &off),
        off_diagonal_witness: off.first().copied(),
        rank: span_rank(&vs),
    }
}

/// Builds and verifies the ribbon basis of β_S(P).
pub fn check_beta_basis(sh: &Shelling, s: &RankSet) -> Result<BasisReport> {
    let basis = ribbon_basis_beta(sh, s)?;
    let facets = homology_facets(sh, s)?;
    Ok(verify_basis(&basis, &facets, betti_top(sh.lattice, s)?))
}

/// Builds and verifies the ribbon basis of WH_S(P).
pub fn check_wh_basis(sh: &Shelling, s: &RankSet) -> Result<BasisReport> {
    let l = sh.lattice;
    let basis = ribbon_basis_wh(sh, s)?;
    let facets = wh_homology_facets(sh, s)?;
    let low = s.drop_largest(1);
    let mut betti = 0;
    for &u in l.at_rank(s.max()) {
        betti += betti_top_below(l, &low, u)?;
    }
    Ok(verify_basis(&basis, &facets, betti))
}

/// Coordinates of g·b_i in the basis: solves against the facet
/// coefficients and confirms by rebuilding g·b_i.
pub fn action_coordinates(
    l: &GradedPoset,
    basis: &[BasisElement],
    facets: &[Facet],
    g: &Perm,
) -> Result<Vec<Vec<Rational>>> {
    let pairing: Vec<Vec<Rational>> = facets
        .iter()
        .map(|f| basis.iter().map(|b| b.vector.coefficient(f)).collect())
        .collect();
    let inv = invert(&pairing)
        .ok_or_else(|| Error::InvalidInput("basis does not pair nondegenerately with the facets".into()))?;
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let gb = b.vector.act(l, g)?;
        let y: Vec<Rational> = facets.iter().map(|f| gb.coefficient(f)).collect();
        let coords: Vec<Rational> = inv
            .iter()
            .map(|row| row.iter().zip(&y).map(|(a, b)| a.clone() * b.clone()).sum())
            .collect();
        let mut rebuilt = ChainVector::zero(gb.mode());
        for (c, e) in coords.iter().zip(basis) {
            if !c.is_zero() {
                rebuilt = rebuilt.add(&e.vector.scale(c));
            }
        }
        if rebuilt != gb {
            return Err(Error::InvalidInput(
                "g·b is not in the span of the basis; the action does not preserve homology".into(),
            ));
        }
        out.push(coords);
    }
    Ok(out)
}

/// Trace of g on the span of the basis.
pub fn trace(l: &GradedPoset, basis: &[BasisElement], facets: &[Facet], g: &Perm) -> Result<Rational> {
    let m = action_coordinates(l, basis, facets, g)?;
    Ok(m.iter().enumerate().map(|(i, r)| r[i].clone()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{boolean_lattice, partition_lattice};

    #[test]
    fn boolean_and_partition_bases() {
        let b4 = boolean_lattice(4).unwrap();
        let sh = Shelling::natural(&b4).unwrap();
        for s in RankSet::all_nonempty_below(4) {
            let r = check_beta_basis(&sh, &s).unwrap();
            assert!(r.passed(), "B4 {s} {r:?}");
        }
        let p4 = partition_lattice(4).unwrap();
        let sh = Shelling::natural(&p4).unwrap();
        for s in RankSet::all_nonempty_below(3) {
            assert!(check_beta_basis(&sh, &s).unwrap().passed(), "Pi4 {s}");
            assert!(check_wh_basis(&sh, &s).unwrap().passed(), "Pi4 WH {s}");
        }
    }

    #[test]
    fn incidence_is_not_always_diagonal() {
        let b4 = boolean_lattice(4).unwrap();
        let sh = Shelling::natural(&b4).unwrap();
        let r = check_beta_basis(&sh, &RankSet::new(vec![2]).unwrap()).unwrap();
        assert!(r.passed());
        assert!(!r.incidence_identity);
    }

    #[test]
    fn trace_of_identity_is_dimension() {
        let p4 = partition_lattice(4).unwrap();
        let sh = Shelling::natural(&p4).unwrap();
        let s = RankSet::new(vec![1, 2]).unwrap();
        let b = ribbon_basis_beta(&sh, &s).unwrap();
        let f = homology_facets(&sh, &s).unwrap();
        let t = trace(&p4, &b, &f, &Perm::identity(4)).unwrap();
        assert_eq!(t, Rational::from_integer(6.into()));
        let t = trace(&p4, &b, &f, &Perm::transposition(4, 0, 1)).unwrap();
        assert_eq!(t, Rational::from_integer(0.into()));
    }

    #[test]
    fn duplicated_basis_is_rejected() {
        let p4 = partition_lattice(4).unwrap();
        let sh = Shelling::natural(&p4).unwrap();
        let s = RankSet::new(vec![1]).unwrap();
        let mut b = ribbon_basis_beta(&sh, &s).unwrap();
        assert!(verify_basis(&b, &homology_facets(&sh, &s).unwrap(), b.len()).passed());
        let f = homology_facets(&sh, &s).unwrap();
        let betti = b.len();
        b.push(b[0].clone());
        assert!(!verify_basis(&b, &f, betti).passed());
    }
}
