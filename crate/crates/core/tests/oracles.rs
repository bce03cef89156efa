//! Brute-force oracles checked against the library and against frozen values.

use std::collections::BTreeMap;

use latticehom::homology::{betti_top, betti_top_below};
use latticehom::lattices::{boolean_lattice, partition_lattice};
use latticehom::partition::{partitions, IntPartition};
use latticehom::perm::{symmetric_group, Perm};
use latticehom::poset::{GradedPoset, RankSet};
use latticehom::repstab::modules::decompose_beta;
use latticehom::repstab::{character_alpha, character_beta, character_wh, decompose, Family};
use latticehom::Rational;

/// Number of chains x_1 < … < x_k with rank(x_i) = t_i, by walking covers.
fn chain_count(l: &GradedPoset, t: &[usize], below: Option<usize>) -> i64 {
    fn walk(l: &GradedPoset, x: usize, t: &[usize], below: Option<usize>) -> i64 {
        let Some((&r, rest)) = t.split_first() else {
            return 1;
        };
        (0..l.len())
            .filter(|&y| l.rank_of(y) == r && l.leq(x, y) && below.is_none_or(|u| l.leq(y, u)))
            .map(|y| walk(l, y, rest, below))
            .sum()
    }
    walk(l, l.bottom(), t, below)
}

/// β_S = Σ_{T ⊆ S} (−1)^{|S∖T|} α_T for a Cohen–Macaulay poset.
fn flag_h(l: &GradedPoset, s: &RankSet, below: Option<usize>) -> i64 {
    s.subsets()
        .into_iter()
        .map(|(t, missing)| {
            let sign = if missing % 2 == 0 { 1 } else { -1 };
            sign * chain_count(l, t.as_slice(), below)
        })
        .sum()
}

fn descent_set(w: &[usize]) -> Vec<usize> {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

fn rs(v: &[usize]) -> RankSet {
    RankSet::new(v.to_vec()).unwrap()
}

fn part(v: &[usize]) -> IntPartition {
    IntPartition::new(v.to_vec())
}

#[test]
fn betti_numbers_match_flag_h_vectors() {
    let mut lattices = Vec::new();
    for n in 3..=5 {
        lattices.push(partition_lattice(n).unwrap());
    }
    for n in 2..=5 {
        lattices.push(boolean_lattice(n).unwrap());
    }
    for l in &lattices {
        for s in RankSet::all_nonempty_below(l.rank()) {
            assert_eq!(betti_top(l, &s).unwrap() as i64, flag_h(l, &s, None), "S={s}");
        }
    }
}

#[test]
fn betti_below_matches_flag_h_of_interval() {
    let l = partition_lattice(5).unwrap();
    for r in 2..=3 {
        for &u in l.at_rank(r) {
            for s in RankSet::all_nonempty_below(r) {
                assert_eq!(betti_top_below(&l, &s, u).unwrap() as i64, flag_h(&l, &s, Some(u)));
            }
        }
    }
}

#[test]
fn frozen_betti_numbers() {
    for (n, fact) in [(3, 2), (4, 6), (5, 24), (6, 120)] {
        let l = partition_lattice(n).unwrap();
        assert_eq!(betti_top(&l, &RankSet::interval(n - 2)).unwrap(), fact);
    }
    let b4 = boolean_lattice(4).unwrap();
    assert_eq!(betti_top(&b4, &rs(&[2])).unwrap(), 5);
    assert_eq!(betti_top(&b4, &rs(&[1, 3])).unwrap(), 5);
    let b5 = boolean_lattice(5).unwrap();
    assert_eq!(betti_top(&b5, &rs(&[1, 3])).unwrap(), 16);
    assert_eq!(betti_top(&b5, &rs(&[2, 4])).unwrap(), 16);
    let p5 = partition_lattice(5).unwrap();
    assert_eq!(betti_top(&p5, &rs(&[1])).unwrap(), 9);
    assert_eq!(betti_top(&p5, &rs(&[2])).unwrap(), 24);
    assert_eq!(betti_top(&p5, &rs(&[1, 2])).unwrap(), flag_h(&p5, &rs(&[1, 2]), None) as usize);
}

#[test]
fn boolean_beta_degree_counts_descent_classes() {
    for n in 1..=6 {
        let mut counts: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
        for g in symmetric_group(n) {
            *counts.entry(descent_set(g.images())).or_default() += 1;
        }
        for (s, _) in RankSet::interval(n - 1).subsets() {
            let chi = character_beta(Family::Boolean, &s, n).unwrap();
            let want = counts.get(s.as_slice()).copied().unwrap_or(0);
            assert_eq!(chi.degree(), Rational::from_integer(want.into()), "n={n} S={s}");
        }
    }
}

/// α_S(σ) is the number of σ-fixed chains with rank set S.
fn fixed_chains(l: &GradedPoset, s: &RankSet, g: &Perm) -> i64 {
    fn walk(l: &GradedPoset, x: usize, t: &[usize], g: &Perm) -> i64 {
        let Some((&r, rest)) = t.split_first() else {
            return 1;
        };
        l.at_rank(r)
            .iter()
            .filter(|&&y| l.leq(x, y) && l.act(g, y) == Some(y))
            .map(|&y| walk(l, y, rest, g))
            .sum()
    }
    walk(l, l.bottom(), s.as_slice(), g)
}

#[test]
fn alpha_characters_count_fixed_chains() {
    for (family, n) in [(Family::Partition, 4), (Family::Partition, 5), (Family::Boolean, 5)] {
        let l = match family {
            Family::Partition => partition_lattice(n).unwrap(),
            _ => boolean_lattice(n).unwrap(),
        };
        for s in RankSet::all_nonempty_below(l.rank()) {
            let chi = character_alpha(family, &s, n).unwrap();
            for rho in partitions(n) {
                let g = Perm::of_cycle_type(&rho);
                assert_eq!(chi.value(&rho), Rational::from_integer(fixed_chains(&l, &s, &g).into()), "S={s} rho={rho}");
            }
        }
    }
}

#[test]
fn partition_beta_degree_is_betti() {
    for n in 3..=6 {
        let l = partition_lattice(n).unwrap();
        for s in RankSet::all_nonempty_below(l.rank()) {
            let chi = character_beta(Family::Partition, &s, n).unwrap();
            assert_eq!(chi.degree(), Rational::from_integer(betti_top(&l, &s).unwrap().into()), "n={n} S={s}");
        }
    }
}

#[test]
fn frozen_top_homology_of_partition_lattices() {
    let top = |n: usize| decompose_beta(Family::Partition, &RankSet::interval(n - 2), n).unwrap().mults;
    assert_eq!(top(3), BTreeMap::from([(part(&[2, 1]), 1)]));
    assert_eq!(top(4), BTreeMap::from([(part(&[3, 1]), 1), (part(&[2, 1, 1]), 1)]));
    assert_eq!(
        top(5),
        BTreeMap::from([
            (part(&[4, 1]), 1),
            (part(&[3, 2]), 1),
            (part(&[3, 1, 1]), 1),
            (part(&[2, 2, 1]), 1),
            (part(&[2, 1, 1, 1]), 1),
        ])
    );
}

#[test]
fn frozen_whitney_atom_module() {
    for n in 4..=7 {
        let d = decompose(&character_wh(Family::Partition, &rs(&[1]), n).unwrap()).unwrap();
        let want = BTreeMap::from([(part(&[n]), 1), (part(&[n - 1, 1]), 1), (part(&[n - 2, 2]), 1)]);
        assert_eq!(d.mults, want, "n={n}");
    }
}

#[test]
fn frozen_boolean_decompositions() {
    let d = decompose_beta(Family::Boolean, &rs(&[2]), 4).unwrap();
    assert_eq!(d.mults, BTreeMap::from([(part(&[2, 2]), 1), (part(&[3, 1]), 1)]));
    let d = decompose_beta(Family::Boolean, &rs(&[2, 3]), 5).unwrap();
    assert_eq!(d.dimension(), 11);
}
