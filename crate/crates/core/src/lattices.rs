//! The lattice families: Boolean lattices, partition lattices, lattices of
//! flats, and d-divisible Boolean posets.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::config::Guards;
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::poset::{rank_selected_subposet, Descriptor, GradedPoset, PosetBuilder, RankSet};
use crate::setpartition::SetPartition;

pub fn boolean_lattice(n: usize) -> Result<GradedPoset> {
    boolean_lattice_with(n, &Guards::default())
}

/// B_n with the natural S_n action; atoms are the singletons.
pub fn boolean_lattice_with(n: usize, g: &Guards) -> Result<GradedPoset> {
    if n == 0 {
        return Err(Error::InvalidInput("B_n needs n ≥ 1".into()));
    }
    g.check("n for B_n", n, g.boolean_max_n)?;
    let m = 1usize << n;
    g.check_elements("poset elements", m)?;
    let mut covers = Vec::with_capacity(m * n / 2);
    for x in 0..m {
        for i in 0..n {
            if x >> i & 1 == 0 {
                covers.push((x, x | 1 << i));
            }
        }
    }
    PosetBuilder {
        desc: (0..m)
            .map(|x| Descriptor::Subset {
                n: n as u8,
                bits: x as u64,
            })
            .collect(),
        rank: (0..m).map(|x| x.count_ones() as usize).collect(),
        covers,
        degree: Some(n),
        atomic: true,
        ..Default::default()
    }
    .build()
}

pub fn partition_lattice(n: usize) -> Result<GradedPoset> {
    partition_lattice_with(n, &Guards::default())
}

/// Π_n ordered by reverse refinement, with the relabeling action.
pub fn partition_lattice_with(n: usize, g: &Guards) -> Result<GradedPoset> {
    if n < 2 {
        return Err(Error::InvalidInput("Π_n needs n ≥ 2".into()));
    }
    g.check("n for Π_n", n, g.partition_max_n)?;
    partitions_below(&SetPartition::indiscrete(n), g)
}

/// The interval [0̂, u] of Π_n, built from the refinements of u.
pub fn partition_interval(u: &SetPartition) -> Result<GradedPoset> {
    partitions_below(u, &Guards::default())
}

fn partitions_below(u: &SetPartition, g: &Guards) -> Result<GradedPoset> {
    let n = u.n();
    let elems = if u.num_blocks() == 1 {
        SetPartition::all(n)
    } else {
        u.refinements()
    };
    g.check_elements("poset elements", elems.len())?;
    let index: HashMap<&SetPartition, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut covers = Vec::new();
    for (i, p) in elems.iter().enumerate() {
        let blocks = p.blocks();
        for a in 0..blocks.len() {
            for b in a + 1..blocks.len() {
                if u.same_block(blocks[a][0], blocks[b][0]) {
                    let q = p.merge(blocks[a][0], blocks[b][0]);
                    covers.push((i, index[&q]));
                }
            }
        }
    }
    PosetBuilder {
        rank: elems.iter().map(SetPartition::rank).collect(),
        desc: elems.into_iter().map(Descriptor::Blocks).collect(),
        covers,
        degree: Some(n),
        atomic: true,
        ..Default::default()
    }
    .build()
}

pub fn lattice_of_flats(m: &Matroid) -> Result<GradedPoset> {
    lattice_of_flats_with(m, &Guards::default())
}

/// Closed sets of a matroid ordered by inclusion.
pub fn lattice_of_flats_with(m: &Matroid, g: &Guards) -> Result<GradedPoset> {
    let n = m.size();
    let bottom = m.closure(0);
    let mut flats = vec![bottom];
    let mut index: HashMap<u64, usize> = HashMap::from([(bottom, 0)]);
    let mut covers = Vec::new();
    let mut k = 0;
    while k < flats.len() {
        let f = flats[k];
        let mut seen = HashSet::new();
        for e in 0..n {
            if f >> e & 1 == 0 {
                let c = m.closure(f | 1 << e);
                if !seen.insert(c) {
                    continue;
                }
                let j = *index.entry(c).or_insert_with(|| {
                    flats.push(c);
                    flats.len() - 1
                });
                covers.push((k, j));
            }
        }
        g.check("number of flats", flats.len(), g.flats_cap)?;
        g.check_elements("poset elements", flats.len())?;
        k += 1;
    }
    PosetBuilder {
        rank: flats.iter().map(|&f| m.rank_of(f)).collect(),
        desc: flats.into_iter().map(Descriptor::Flat).collect(),
        covers,
        ground_labels: Some(Arc::new(m.ground().to_vec())),
        atomic: true,
        ..Default::default()
    }
    .build()
}

/// B_{n,d}: subsets of size divisible by d.
pub fn d_divisible_boolean(n: usize, d: usize) -> Result<GradedPoset> {
    if d == 0 || n % d != 0 {
        return Err(Error::InvalidInput(format!("d = {d} must divide n = {n}")));
    }
    let b = boolean_lattice(n)?;
    if d == 1 {
        return Ok(b);
    }
    rank_selected_subposet(&b, &RankSet::new((1..n / d).map(|k| k * d).collect())?)
}

/// Least upper bound of `xs` (bottom for the empty set).
pub fn join(p: &GradedPoset, xs: &[usize]) -> Result<usize> {
    let mut acc = p.bottom();
    for &x in xs {
        acc = join2(p, acc, x)?;
    }
    Ok(acc)
}

/// Join of two elements, walking covers when atom sets are available.
pub fn join2(p: &GradedPoset, x: usize, y: usize) -> Result<usize> {
    if p.leq(x, y) {
        return Ok(y);
    }
    if p.leq(y, x) {
        return Ok(x);
    }
    if let Some(bits) = p.atom_bits() {
        let target = bits[x] | bits[y];
        let mut cur = x;
        while bits[cur] & target != target {
            let need = target & !bits[cur];
            let a = need.trailing_zeros() as u64;
            match p.up(cur).iter().find(|&&z| bits[z] >> a & 1 == 1) {
                Some(&z) => cur = z,
                None => return join_generic(p, x, y),
            }
        }
        if p.leq(y, cur) {
            return Ok(cur);
        }
    }
    join_generic(p, x, y)
}

/// Join of an element with an atom: the cover of `x` containing `a`.
pub fn join_atom(p: &GradedPoset, x: usize, a: usize) -> Result<usize> {
    join2(p, x, a)
}

fn join_generic(p: &GradedPoset, x: usize, y: usize) -> Result<usize> {
    let ubs: Vec<usize> = (0..p.len()).filter(|&z| p.leq(x, z) && p.leq(y, z)).collect();
    let mins: Vec<usize> = ubs
        .iter()
        .copied()
        .filter(|&z| !ubs.iter().any(|&w| w != z && p.leq(w, z)))
        .collect();
    match mins.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::NotLattice(format!(
            "{} and {} have {} minimal upper bounds",
            p.describe(x),
            p.describe(y),
            mins.len()
        ))),
    }
}

fn meet_generic(p: &GradedPoset, x: usize, y: usize) -> Result<usize> {
    let lbs: Vec<usize> = (0..p.len()).filter(|&z| p.leq(z, x) && p.leq(z, y)).collect();
    let maxs: Vec<usize> = lbs
        .iter()
        .copied()
        .filter(|&z| !lbs.iter().any(|&w| w != z && p.leq(z, w)))
        .collect();
    match maxs.as_slice() {
        [z] => Ok(*z),
        _ => Err(Error::NotLattice(format!(
            "{} and {} have {} maximal lower bounds",
            p.describe(x),
            p.describe(y),
            maxs.len()
        ))),
    }
}

/// Exhaustive check that `p` is atomic and upper semimodular (hence
/// geometric).
pub fn check_geometric(p: &GradedPoset) -> Result<()> {
    for x in 0..p.len() {
        for y in x + 1..p.len() {
            join_generic(p, x, y)?;
            meet_generic(p, x, y)?;
        }
    }
    let atoms = p.atoms().to_vec();
    for x in 0..p.len() {
        let below: Vec<usize> = atoms.iter().copied().filter(|&a| p.leq(a, x)).collect();
        let mut j = p.bottom();
        for &a in &below {
            j = join_generic(p, j, a)?;
        }
        if j != x {
            return Err(Error::NotGeometric(format!("{} is not a join of atoms", p.describe(x))));
        }
    }
    for z in 0..p.len() {
        let ups = p.up(z);
        for (i, &x) in ups.iter().enumerate() {
            for &y in &ups[i + 1..] {
                let j = join_generic(p, x, y)?;
                if !p.up(x).contains(&j) || !p.up(y).contains(&j) {
                    return Err(Error::NotGeometric(format!(
                        "{} and {} cover {} but their join covers neither",
                        p.describe(x),
                        p.describe(y),
                        p.describe(z)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Isomorphism test for atomic lattices by backtracking over atom
/// bijections.
pub fn atomic_lattices_isomorphic(a: &GradedPoset, b: &GradedPoset) -> bool {
    let (Some(ba), Some(bb)) = (a.atom_bits(), b.atom_bits()) else {
        return false;
    };
    if a.len() != b.len() || a.rank() != b.rank() {
        return false;
    }
    if (0..=a.rank()).any(|r| a.at_rank(r).len() != b.at_rank(r).len()) {
        return false;
    }
    let k = a.atoms().len();
    let targets: HashSet<u64> = bb.iter().copied().collect();
    let mut by_max: Vec<Vec<u64>> = vec![Vec::new(); k];
    for &m in ba {
        if m != 0 {
            by_max[63 - m.leading_zeros() as usize].push(m);
        }
    }
    fn image(m: u64, phi: &[usize]) -> u64 {
        let mut out = 0;
        for (i, &t) in phi.iter().enumerate() {
            if m >> i & 1 == 1 {
                out |= 1 << t;
            }
        }
        out
    }
    fn rec(i: usize, k: usize, phi: &mut Vec<usize>, used: &mut [bool], by_max: &[Vec<u64>], targets: &HashSet<u64>) -> bool {
        if i == k {
            return true;
        }
        for t in 0..k {
            if used[t] {
                continue;
            }
            phi.push(t);
            used[t] = true;
            if by_max[i].iter().all(|&m| targets.contains(&image(m, phi))) && rec(i + 1, k, phi, used, by_max, targets) {
                return true;
            }
            used[t] = false;
            phi.pop();
        }
        false
    }
    rec(0, k, &mut Vec::new(), &mut vec![false; k], &by_max, &targets)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes() {
        let b3 = boolean_lattice(3).unwrap();
        assert_eq!((b3.len(), b3.num_covers()), (8, 12));
        assert_eq!(boolean_lattice(1).unwrap().len(), 2);
        let p4 = partition_lattice(4).unwrap();
        assert_eq!((p4.len(), p4.rank()), (15, 3));
        let atoms: Vec<String> = p4.atoms().iter().map(|&a| p4.describe(a)).collect();
        assert_eq!(atoms, vec!["|12|", "|13|", "|14|", "|23|", "|24|", "|34|"]);
    }

    #[test]
    fn joins() {
        let p4 = partition_lattice(4).unwrap();
        let a = p4.find("|12|").unwrap();
        let b = p4.find("|34|").unwrap();
        assert_eq!(p4.describe(join(&p4, &[a, b]).unwrap()), "|12|34|");
        assert_eq!(join(&p4, &[a, a]).unwrap(), a);
    }

    #[test]
    fn ddiv() {
        assert_eq!(d_divisible_boolean(4, 2).unwrap().len(), 8);
        assert_eq!(d_divisible_boolean(6, 3).unwrap().len(), 22);
        assert!(d_divisible_boolean(5, 2).is_err());
    }

    #[test]
    fn guards() {
        assert!(matches!(partition_lattice(11), Err(Error::Guard { .. })));
        assert!(matches!(boolean_lattice(13), Err(Error::Guard { .. })));
    }
}
