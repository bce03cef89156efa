use proptest::prelude::*;

use latticehom::homology::{
    bar_f_chain, betti_top, homology_facets, ribbon_basis_beta, ribbon_basis_wh, trace, verify_basis, ChainMode,
    ChainVector,
};
use latticehom::lattices::{boolean_lattice, join_atom, partition_lattice};
use latticehom::partition::partitions;
use latticehom::perm::Perm;
use latticehom::poset::{GradedPoset, RankSet};
use latticehom::repstab::modules::decompose_beta;
use latticehom::repstab::{character_beta, character_wh, decompose, Family};
use latticehom::shelling::{atom_action, AtomOrdering, Shelling};
use latticehom::tableaux::{polytabloid, ribbon_of, syt_count_with_descent_set, RibbonFilling};
use latticehom::Rational;

fn lattice(boolean: bool, n: usize) -> GradedPoset {
    if boolean {
        boolean_lattice(n).unwrap()
    } else {
        partition_lattice(n).unwrap()
    }
}

/// A word of atom positions whose prefix joins climb one rank at a time.
fn independent_word(l: &GradedPoset, picks: &[usize]) -> Vec<usize> {
    let mut x = l.bottom();
    let mut w = Vec::new();
    for &p in picks.iter().take(l.rank()) {
        let choices: Vec<usize> = (0..l.atoms().len())
            .filter(|&a| l.rank_of(join_atom(l, x, l.atoms()[a]).unwrap()) == l.rank_of(x) + 1)
            .collect();
        let a = choices[p % choices.len()];
        x = join_atom(l, x, l.atoms()[a]).unwrap();
        w.push(a);
    }
    w
}

fn rank_set_from_mask(rank: usize, mask: u64) -> RankSet {
    RankSet::new((1..rank).filter(|i| mask >> (i - 1) & 1 == 1).collect()).unwrap()
}

fn random_perm(n: usize, seed: &[usize]) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    for (i, &s) in seed.iter().enumerate().take(n) {
        v.swap(i, i + s % (n - i));
    }
    Perm::from_images(v).unwrap()
}

fn lattice_strategy() -> impl Strategy<Value = (bool, usize)> {
    prop_oneof![(Just(false), 3usize..=5), (Just(true), 2usize..=6)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn boundary_squares_to_zero((b, n) in lattice_strategy(), picks in prop::collection::vec(0usize..100, 6), mask in 0u64..64) {
        let l = lattice(b, n);
        let w = independent_word(&l, &picks);
        let chain: Vec<usize> = latticehom::shelling::prefix_joins(&l, &w).unwrap()
            .into_iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1 && i + 1 < l.rank())
            .map(|(_, x)| x)
            .collect();
        let c = ChainVector::<i64>::single(ChainMode::Beta, chain);
        prop_assert!(c.boundary().boundary().is_zero());
    }

    #[test]
    fn independent_fillings_give_cycles((b, n) in lattice_strategy(), picks in prop::collection::vec(0usize..100, 6), mask in 0u64..64) {
        let l = lattice(b, n);
        let s = rank_set_from_mask(l.rank(), mask);
        let w = independent_word(&l, &picks);
        let f = RibbonFilling::new(ribbon_of(&s, l.rank()).unwrap(), w).unwrap();
        let c = bar_f_chain(&l, &polytabloid::<i64>(&f), ChainMode::Beta).unwrap();
        prop_assert!(c.boundary().is_zero());
        let wh = bar_f_chain(&l, &polytabloid::<i64>(&f), ChainMode::Whitney).unwrap();
        prop_assert!(wh.boundary().is_zero());
    }

    #[test]
    fn bar_f_is_equivariant((b, n) in lattice_strategy(), picks in prop::collection::vec(0usize..100, 6), mask in 0u64..64, seed in prop::collection::vec(0usize..100, 6)) {
        let l = lattice(b, n);
        let s = rank_set_from_mask(l.rank(), mask);
        let f = RibbonFilling::new(ribbon_of(&s, l.rank()).unwrap(), independent_word(&l, &picks)).unwrap();
        let g = random_perm(n, &seed);
        let m = atom_action(&l, &g).unwrap();
        let moved = bar_f_chain(&l, &polytabloid::<i64>(&f), ChainMode::Beta).unwrap().act(&l, &g).unwrap();
        let of_moved = bar_f_chain(&l, &polytabloid::<i64>(&f.map(|e| m[e])), ChainMode::Beta).unwrap();
        prop_assert_eq!(moved, of_moved);
    }

    #[test]
    fn basis_size_does_not_depend_on_atom_order((b, n) in lattice_strategy(), mask in 1u64..64, seed in any::<u64>()) {
        let l = lattice(b, n);
        let s = rank_set_from_mask(l.rank(), mask);
        prop_assume!(!s.is_empty());
        let sh = Shelling::new(&l, AtomOrdering::random(&l, seed)).unwrap();
        let basis = ribbon_basis_beta(&sh, &s).unwrap();
        let facets = homology_facets(&sh, &s).unwrap();
        let r = verify_basis(&basis, &facets, betti_top(&l, &s).unwrap());
        prop_assert!(r.passed(), "{:?}", r);
    }

    #[test]
    fn syt_descent_counts_match_boolean_homology(n in 1usize..=7, mask in 0u64..64) {
        let s = rank_set_from_mask(n, mask);
        let d = decompose_beta(Family::Boolean, &s, n).unwrap();
        for lam in partitions(n) {
            prop_assert_eq!(d.mult(&lam), syt_count_with_descent_set(&lam, &s));
        }
    }
}

#[test]
fn hopf_trace_matches_character() {
    for (b, n) in [(false, 4), (false, 5), (true, 4), (true, 5)] {
        let l = lattice(b, n);
        let family = if b { Family::Boolean } else { Family::Partition };
        let sh = Shelling::natural(&l).unwrap();
        for s in RankSet::all_nonempty_below(l.rank()) {
            let basis = ribbon_basis_beta(&sh, &s).unwrap();
            let facets = homology_facets(&sh, &s).unwrap();
            let chi = character_beta(family, &s, n).unwrap();
            for rho in partitions(n) {
                let t = trace(&l, &basis, &facets, &Perm::of_cycle_type(&rho)).unwrap();
                assert_eq!(t, chi.value(&rho), "n={n} S={s} rho={rho}");
            }
        }
    }
}

#[test]
fn whitney_summands_are_distinct() {
    let l = partition_lattice(5).unwrap();
    let sh = Shelling::natural(&l).unwrap();
    for s in RankSet::all_nonempty_below(l.rank() + 1) {
        for b in ribbon_basis_wh(&sh, &s).unwrap() {
            assert!(b.vector.terms().all(|(c, _)| c.last() == Some(&b.top)), "S={s}");
            assert_eq!(l.rank_of(b.top), s.max());
        }
    }
}

#[test]
fn whitney_padded_multiplicities_grow() {
    for s in [[1].as_slice(), &[2], &[1, 2]] {
        let s = RankSet::new(s.to_vec()).unwrap();
        let mut prev: Option<latticehom::repstab::PaddedDecomposition> = None;
        for n in s.max() + 1..=9 {
            let p = decompose(&character_wh(Family::Partition, &s, n).unwrap()).unwrap().padded();
            if let Some(q) = &prev {
                for (lam, &m) in &q.mults {
                    assert!(p.mults.get(lam).copied().unwrap_or(0) >= m, "S={s} n={n} {lam}");
                }
            }
            prev = Some(p);
        }
    }
}

#[test]
fn trace_of_identity_is_betti() {
    let l = partition_lattice(5).unwrap();
    let sh = Shelling::natural(&l).unwrap();
    let s = RankSet::new(vec![1, 3]).unwrap();
    let basis = ribbon_basis_beta(&sh, &s).unwrap();
    let facets = homology_facets(&sh, &s).unwrap();
    let t = trace(&l, &basis, &facets, &Perm::identity(5)).unwrap();
    assert_eq!(t, Rational::from_integer(betti_top(&l, &s).unwrap().into()));
}
