//! Finite bounded graded posets.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::setpartition::{letters_string, SetPartition};

/// A chain listed from bottom to top, normally excluding 0̂ and 1̂.
pub type PosetChain = Vec<usize>;

/// What an element is.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Descriptor {
    /// Adjoined least element of a rank selection.
    Bottom,
    /// Adjoined greatest element of a rank selection.
    Top,
    /// A subset of `{0..n-1}` as a bitmask.
    Subset { n: u8, bits: u64 },
    Blocks(SetPartition),
    /// A flat, as a bitmask over the matroid ground set.
    Flat(u64),
    Named(String),
}

impl Descriptor {
    fn sort_key(&self) -> (u8, Vec<Vec<usize>>, String) {
        match self {
            Descriptor::Bottom => (0, vec![], String::new()),
            Descriptor::Top => (5, vec![], String::new()),
            Descriptor::Subset { bits, .. } => (1, vec![bits_to_vec(*bits)], String::new()),
            Descriptor::Blocks(p) => (2, p.sort_key(), String::new()),
            Descriptor::Flat(bits) => (3, vec![bits_to_vec(*bits)], String::new()),
            Descriptor::Named(s) => (4, vec![], s.clone()),
        }
    }

    fn relabel(&self, g: &Perm) -> Option<Descriptor> {
        match self {
            Descriptor::Bottom | Descriptor::Top => Some(self.clone()),
            Descriptor::Subset { n, bits } => {
                let mut out = 0u64;
                for i in 0..*n as usize {
                    if bits >> i & 1 == 1 {
                        out |= 1 << g.apply(i);
                    }
                }
                Some(Descriptor::Subset { n: *n, bits: out })
            }
            Descriptor::Blocks(p) => Some(Descriptor::Blocks(p.relabel(g))),
            Descriptor::Flat(_) | Descriptor::Named(_) => None,
        }
    }
}

pub(crate) fn bits_to_vec(bits: u64) -> Vec<usize> {
    (0..64).filter(|i| bits >> i & 1 == 1).collect()
}

/// A strictly increasing set of positive ranks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankSet(Vec<usize>);

impl RankSet {
    pub fn new(mut v: Vec<usize>) -> Result<Self> {
        v.sort_unstable();
        let dup = v.windows(2).any(|w| w[0] == w[1]);
        if dup || v.first() == Some(&0) {
            return Err(Error::InvalidRankSet { set: v, rank: 0 });
        }
        Ok(RankSet(v))
    }

    pub fn empty() -> Self {
        RankSet(Vec::new())
    }

    /// `{1, …, k}`.
    pub fn interval(k: usize) -> Self {
        RankSet((1..=k).collect())
    }

    /// Parses a comma list such as `2,5`; the empty string is ∅.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let v: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|t| t.trim().parse::<usize>()).collect();
        Self::new(v.map_err(|e| Error::InvalidInput(format!("rank set {s:?}: {e}")))?)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, r: usize) -> bool {
        self.0.binary_search(&r).is_ok()
    }

    /// S^{(i)}: S with its i largest elements removed.
    pub fn drop_largest(&self, i: usize) -> RankSet {
        RankSet(self.0[..self.0.len().saturating_sub(i)].to_vec())
    }

    pub fn without(&self, r: usize) -> RankSet {
        RankSet(self.0.iter().copied().filter(|&x| x != r).collect())
    }

    /// Every entry multiplied by d.
    pub fn scale(&self, d: usize) -> RankSet {
        RankSet(self.0.iter().map(|x| x * d).collect())
    }

    /// All subsets, each paired with |S \ T|.
    pub fn subsets(&self) -> Vec<(RankSet, usize)> {
        let k = self.0.len();
        (0..1u64 << k)
            .map(|m| {
                let t: Vec<usize> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| self.0[i]).collect();
                let missing = k - t.len();
                (RankSet(t), missing)
            })
            .collect()
    }

    /// All nonempty subsets of `{1..r-1}`.
    pub fn all_nonempty_below(r: usize) -> Vec<RankSet> {
        if r < 2 {
            return Vec::new();
        }
        RankSet::interval(r - 1)
            .subsets()
            .into_iter()
            .map(|(t, _)| t)
            .filter(|t| !t.is_empty())
            .collect()
    }

    /// Checks every element is a nontrivial rank of a poset of rank `rank`.
    pub fn validate(&self, rank: usize) -> Result<()> {
        if self.0.iter().any(|&s| s == 0 || s >= rank) {
            return Err(Error::InvalidRankSet {
                set: self.0.clone(),
                rank,
            });
        }
        Ok(())
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

/// A finite bounded graded poset.
///
/// Elements are dense indices sorted by rank and then by descriptor, so the
/// bottom is 0 and the top is the last index.
#[derive(Debug)]
pub struct GradedPoset {
    desc: Vec<Descriptor>,
    rank: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    by_rank: Vec<Vec<usize>>,
    index: HashMap<Descriptor, usize>,
    atom_bits: Option<Vec<u64>>,
    order_by_atoms: bool,
    masks_native: bool,
    reach: OnceLock<Vec<Vec<u64>>>,
    degree: Option<usize>,
    ground_labels: Option<Arc<Vec<String>>>,
    origin: Option<Vec<Option<usize>>>,
}

/// Raw construction data, sorted and validated by [`PosetBuilder::build`].
#[derive(Default)]
pub struct PosetBuilder {
    pub desc: Vec<Descriptor>,
    pub rank: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
    /// Letters acted on by relabeling descriptors.
    pub degree: Option<usize>,
    pub ground_labels: Option<Arc<Vec<String>>>,
    pub origin: Option<Vec<Option<usize>>>,
    /// Compute atom sets and use them as the order (atomic lattices).
    pub atomic: bool,
    /// Inherited atom sets that decide the order but are not this poset's
    /// own atoms.
    pub inherited_bits: Option<Vec<u64>>,
}

impl PosetBuilder {
    pub fn build(self) -> Result<GradedPoset> {
        let m = self.desc.len();
        if m == 0 || self.rank.len() != m {
            return Err(Error::InvalidPoset("empty or mismatched element table".into()));
        }
        let mut perm: Vec<usize> = (0..m).collect();
        let keys: Vec<_> = self.desc.iter().map(Descriptor::sort_key).collect();
        perm.sort_by(|&a, &b| (self.rank[a], &keys[a]).cmp(&(self.rank[b], &keys[b])));
        let mut pos = vec![0; m];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let desc: Vec<Descriptor> = perm.iter().map(|&o| self.desc[o].clone()).collect();
        let rank: Vec<usize> = perm.iter().map(|&o| self.rank[o]).collect();
        let origin = self
            .origin
            .map(|org| perm.iter().map(|&o| org[o]).collect::<Vec<_>>());
        let inherited = self
            .inherited_bits
            .map(|b| perm.iter().map(|&o| b[o]).collect::<Vec<_>>());
        let mut up = vec![Vec::new(); m];
        let mut down = vec![Vec::new(); m];
        for &(a, b) in &self.covers {
            if a >= m || b >= m {
                return Err(Error::InvalidPoset(format!("cover ({a},{b}) out of range")));
            }
            let (a, b) = (pos[a], pos[b]);
            if rank[b] != rank[a] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover {a}<{b} does not raise rank by one"
                )));
            }
            up[a].push(b);
            down[b].push(a);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        let top_rank = *rank.iter().max().unwrap();
        let mut by_rank = vec![Vec::new(); top_rank + 1];
        for (i, &r) in rank.iter().enumerate() {
            by_rank[r].push(i);
        }
        if by_rank[0].len() != 1 || by_rank[top_rank].len() != 1 {
            return Err(Error::InvalidPoset("needs a unique bottom and a unique top".into()));
        }
        for i in 0..m {
            if rank[i] > 0 && down[i].is_empty() {
                return Err(Error::InvalidPoset(format!("element {i} has no lower cover")));
            }
            if rank[i] < top_rank && up[i].is_empty() {
                return Err(Error::InvalidPoset(format!("element {i} has no upper cover")));
            }
        }
        let mut index = HashMap::with_capacity(m);
        for (i, d) in desc.iter().enumerate() {
            if index.insert(d.clone(), i).is_some() {
                return Err(Error::InvalidPoset(format!("duplicate descriptor {d:?}")));
            }
        }
        let mut p = GradedPoset {
            desc,
            rank,
            up,
            down,
            by_rank,
            index,
            atom_bits: None,
            order_by_atoms: false,
            masks_native: false,
            reach: OnceLock::new(),
            degree: self.degree,
            ground_labels: self.ground_labels,
            origin,
        };
        if self.atomic {
            p.compute_atom_bits()?;
        } else if let Some(b) = inherited {
            p.atom_bits = Some(b);
            p.order_by_atoms = true;
        }
        Ok(p)
    }
}

impl GradedPoset {
    fn compute_atom_bits(&mut self) -> Result<()> {
        let atoms = self.by_rank.get(1).cloned().unwrap_or_default();
        if atoms.len() > 64 {
            return Err(Error::Guard {
                what: "atom count",
                value: atoms.len() as u128,
                cap: 64,
            });
        }
        let mut bits = vec![0u64; self.len()];
        for (k, &a) in atoms.iter().enumerate() {
            bits[a] = 1 << k;
        }
        for r in 2..self.by_rank.len() {
            for &x in &self.by_rank[r] {
                bits[x] = self.down[x].iter().fold(0, |acc, &y| acc | bits[y]);
            }
        }
        self.atom_bits = Some(bits);
        self.order_by_atoms = true;
        self.masks_native = true;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.desc.len()
    }

    pub fn is_empty(&self) -> bool {
        self.desc.is_empty()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.desc.len() - 1
    }

    /// Rank of the top element.
    pub fn rank(&self) -> usize {
        self.by_rank.len() - 1
    }

    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn at_rank(&self, r: usize) -> &[usize] {
        self.by_rank.get(r).map_or(&[], |v| v.as_slice())
    }

    pub fn atoms(&self) -> &[usize] {
        self.at_rank(1)
    }

    pub fn up(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn down(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn num_covers(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn descriptor(&self, x: usize) -> &Descriptor {
        &self.desc[x]
    }

    pub fn index_of(&self, d: &Descriptor) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// The parent index of an element of an induced subposet.
    pub fn origin(&self, x: usize) -> Option<usize> {
        self.origin.as_ref().and_then(|o| o[x])
    }

    /// Atom sets A(x) as bitmasks over `atoms()`, for atomic lattices.
    pub fn atom_bits(&self) -> Option<&[u64]> {
        if self.masks_native {
            self.atom_bits.as_deref()
        } else {
            None
        }
    }

    /// Bit position of an atom in [`Self::atom_bits`].
    pub fn atom_position(&self, a: usize) -> Option<usize> {
        self.atoms().binary_search(&a).ok()
    }

    /// Letters acted on, when the poset carries a permutation action.
    pub fn degree(&self) -> Option<usize> {
        self.degree
    }

    pub fn set_partition(&self, x: usize) -> Option<&SetPartition> {
        match &self.desc[x] {
            Descriptor::Blocks(p) => Some(p),
            _ => None,
        }
    }

    /// Human-readable descriptor, 1-based letters.
    pub fn describe(&self, x: usize) -> String {
        match &self.desc[x] {
            Descriptor::Bottom => "0̂".into(),
            Descriptor::Top => "1̂".into(),
            Descriptor::Subset { n, bits } => {
                if *bits == 0 {
                    "∅".into()
                } else {
                    letters_string(*n as usize, &bits_to_vec(*bits))
                }
            }
            Descriptor::Blocks(p) => p.to_string(),
            Descriptor::Flat(bits) => {
                let v = bits_to_vec(*bits);
                let names: Vec<String> = match &self.ground_labels {
                    Some(l) => v.iter().map(|&i| l[i].clone()).collect(),
                    None => v.iter().map(|i| (i + 1).to_string()).collect(),
                };
                format!("{{{}}}", names.join(","))
            }
            Descriptor::Named(s) => s.clone(),
        }
    }

    /// Looks an element up by its [`Self::describe`] text.
    pub fn find(&self, text: &str) -> Option<usize> {
        (0..self.len()).find(|&x| self.describe(x) == text)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        if x == y {
            return true;
        }
        if self.rank[x] >= self.rank[y] {
            return false;
        }
        if x == self.bottom() || y == self.top() {
            return true;
        }
        if self.order_by_atoms {
            let b = self.atom_bits.as_ref().unwrap();
            return b[x] & !b[y] == 0;
        }
        let reach = self.reach.get_or_init(|| self.compute_reach());
        reach[x][y / 64] >> (y % 64) & 1 == 1
    }

    fn compute_reach(&self) -> Vec<Vec<u64>> {
        let m = self.len();
        let words = m.div_ceil(64);
        let mut reach = vec![vec![0u64; words]; m];
        for x in (0..m).rev() {
            let mut row = vec![0u64; words];
            row[x / 64] |= 1 << (x % 64);
            for &y in &self.up[x] {
                for (w, r) in row.iter_mut().zip(&reach[y]) {
                    *w |= r;
                }
            }
            reach[x] = row;
        }
        reach
    }

    /// Elements of rank `r` that lie above `x`.
    pub fn above_at_rank(&self, x: usize, r: usize) -> Vec<usize> {
        if r < self.rank[x] {
            return Vec::new();
        }
        if self.order_by_atoms || self.rank() <= 2 {
            return self.at_rank(r).iter().copied().filter(|&y| self.leq(x, y)).collect();
        }
        let mut frontier = vec![x];
        for _ in self.rank[x]..r {
            let mut next: Vec<usize> = frontier.iter().flat_map(|&z| self.up[z].iter().copied()).collect();
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
        frontier
    }

    /// Image of an element under a letter permutation, if the poset has an
    /// action and the image is an element.
    pub fn act(&self, g: &Perm, x: usize) -> Option<usize> {
        self.degree?;
        let d = self.desc[x].relabel(g)?;
        self.index.get(&d).copied()
    }

    /// Checks that each permutation maps elements to elements preserving
    /// rank and covers.
    pub fn check_action(&self, gens: &[Perm]) -> Result<()> {
        for g in gens {
            for x in 0..self.len() {
                let gx = self.act(g, x).ok_or(Error::NoAction)?;
                if self.rank[gx] != self.rank[x] {
                    return Err(Error::InvalidPoset(format!("{g} moves rank of {x}")));
                }
                for &y in &self.up[x] {
                    let gy = self.act(g, y).ok_or(Error::NoAction)?;
                    if !self.up[gx].contains(&gy) {
                        return Err(Error::InvalidPoset(format!("{g} breaks cover {x}<{y}")));
                    }
                }
            }
        }
        Ok(())
    }

    /// The closed interval `[x, y]` as a poset in its own right.
    pub fn interval(&self, x: usize, y: usize) -> Result<GradedPoset> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        let mut members = vec![x];
        let mut frontier = vec![x];
        for _ in self.rank[x]..self.rank[y] {
            let mut next: Vec<usize> = frontier
                .iter()
                .flat_map(|&z| self.up[z].iter().copied())
                .filter(|&z| self.leq(z, y))
                .collect();
            next.sort_unstable();
            next.dedup();
            members.extend_from_slice(&next);
            frontier = next;
        }
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &z)| (z, i)).collect();
        let mut covers = Vec::new();
        for (i, &z) in members.iter().enumerate() {
            for w in &self.up[z] {
                if let Some(&j) = pos.get(w) {
                    covers.push((i, j));
                }
            }
        }
        PosetBuilder {
            desc: members.iter().map(|&z| self.desc[z].clone()).collect(),
            rank: members.iter().map(|&z| self.rank[z] - self.rank[x]).collect(),
            covers,
            degree: self.degree,
            ground_labels: self.ground_labels.clone(),
            origin: Some(members.iter().map(|&z| Some(z)).collect()),
            atomic: self.masks_native,
            inherited_bits: None,
        }
        .build()
    }

    /// Number of maximal chains, by dynamic programming.
    pub fn count_maximal_chains(&self) -> u128 {
        let mut c = vec![0u128; self.len()];
        c[self.bottom()] = 1;
        for r in 1..=self.rank() {
            for &x in self.at_rank(r) {
                c[x] = self.down[x].iter().map(|&y| c[y]).sum();
            }
        }
        c[self.top()]
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            elements: (0..self.len()).map(|x| self.describe(x)).collect(),
            covers: (0..self.len())
                .flat_map(|x| self.up[x].iter().map(move |&y| [x, y]))
                .collect(),
            rank: self.rank.clone(),
        }
    }

    pub fn from_json(j: &PosetJson) -> Result<GradedPoset> {
        if j.elements.len() != j.rank.len() {
            return Err(Error::InvalidPoset("elements and rank differ in length".into()));
        }
        PosetBuilder {
            desc: j.elements.iter().map(|s| Descriptor::Named(s.clone())).collect(),
            rank: j.rank.clone(),
            covers: j.covers.iter().map(|c| (c[0], c[1])).collect(),
            ..Default::default()
        }
        .build()
    }
}

/// Serialized poset: `{elements, covers, rank}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    pub covers: Vec<[usize; 2]>,
    pub rank: Vec<usize>,
}

/// P^S: the elements with rank in S plus fresh bounds.
pub fn rank_selected_subposet(p: &GradedPoset, s: &RankSet) -> Result<GradedPoset> {
    s.validate(p.rank())?;
    let mut desc = vec![Descriptor::Bottom];
    let mut rank = vec![0];
    let mut origin = vec![None];
    let mut bits = vec![0u64];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    for (k, &r) in s.as_slice().iter().enumerate() {
        let mut lvl = Vec::new();
        for &x in p.at_rank(r) {
            lvl.push(desc.len());
            desc.push(p.desc[x].clone());
            rank.push(k + 1);
            origin.push(Some(x));
            bits.push(p.atom_bits.as_ref().map_or(0, |b| b[x]));
        }
        levels.push(lvl);
    }
    let top = desc.len();
    desc.push(Descriptor::Top);
    rank.push(s.len() + 1);
    origin.push(None);
    bits.push(u64::MAX);
    let mut covers = Vec::new();
    match levels.first() {
        None => covers.push((0, top)),
        Some(first) => {
            covers.extend(first.iter().map(|&i| (0, i)));
            covers.extend(levels.last().unwrap().iter().map(|&i| (i, top)));
        }
    }
    for w in 0..levels.len().saturating_sub(1) {
        let r_next = s.as_slice()[w + 1];
        let lookup: HashMap<usize, usize> =
            levels[w + 1].iter().map(|&i| (origin[i].unwrap(), i)).collect();
        for &i in &levels[w] {
            for y in p.above_at_rank(origin[i].unwrap(), r_next) {
                covers.push((i, lookup[&y]));
            }
        }
    }
    PosetBuilder {
        desc,
        rank,
        covers,
        degree: p.degree,
        ground_labels: p.ground_labels.clone(),
        origin: Some(origin),
        atomic: false,
        inherited_bits: if p.order_by_atoms { Some(bits) } else { None },
    }
    .build()
}

/// Every chain (without bounds) whose rank set is exactly T.
pub fn chains_with_rank_set(p: &GradedPoset, t: &RankSet) -> Result<Vec<PosetChain>> {
    t.validate(p.rank())?;
    let ranks = t.as_slice();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(ranks.len());
    fn rec(p: &GradedPoset, ranks: &[usize], from: usize, cur: &mut Vec<usize>, out: &mut Vec<PosetChain>) {
        match ranks.split_first() {
            None => out.push(cur.clone()),
            Some((&r, rest)) => {
                for y in p.above_at_rank(from, r) {
                    cur.push(y);
                    rec(p, rest, y, cur, out);
                    cur.pop();
                }
            }
        }
    }
    rec(p, ranks, p.bottom(), &mut cur, &mut out);
    Ok(out)
}

/// μ(x, y) by the recursive definition.
pub fn mobius(p: &GradedPoset, x: usize, y: usize) -> Result<i64> {
    if !p.leq(x, y) {
        return Err(Error::NotComparable(x, y));
    }
    let iv = p.interval(x, y)?;
    let mut mu = vec![0i64; iv.len()];
    mu[0] = 1;
    for z in 1..iv.len() {
        mu[z] = -(0..z).filter(|&w| iv.leq(w, z)).map(|w| mu[w]).sum::<i64>();
    }
    Ok(mu[iv.top()])
}

/// All maximal chains, as their interior elements, in lexicographic order.
pub fn maximal_chains(p: &GradedPoset) -> Vec<PosetChain> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(p: &GradedPoset, x: usize, cur: &mut Vec<usize>, out: &mut Vec<PosetChain>) {
        if p.rank_of(x) + 1 == p.rank() {
            out.push(cur.clone());
            return;
        }
        for &y in p.up(x) {
            cur.push(y);
            rec(p, y, cur, out);
            cur.pop();
        }
    }
    if p.rank() == 0 {
        return vec![Vec::new()];
    }
    rec(p, p.bottom(), &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> GradedPoset {
        let j = PosetJson {
            elements: vec!["a".into(), "b".into(), "c".into(), "d".into()],
            covers: vec![[0, 1], [0, 2], [1, 3], [2, 3]],
            rank: vec![0, 1, 1, 2],
        };
        GradedPoset::from_json(&j).unwrap()
    }

    #[test]
    fn json_round_trip() {
        let p = chain3();
        let q = GradedPoset::from_json(&p.to_json()).unwrap();
        assert_eq!(p.to_json(), q.to_json());
        assert_eq!(maximal_chains(&p).len(), 2);
        assert_eq!(mobius(&p, 0, 3).unwrap(), 1);
    }

    #[test]
    fn rejects_ungraded() {
        let j = PosetJson {
            elements: vec!["a".into(), "b".into(), "c".into()],
            covers: vec![[0, 1], [1, 2], [0, 2]],
            rank: vec![0, 1, 2],
        };
        assert!(GradedPoset::from_json(&j).is_err());
    }

    #[test]
    fn rank_set_parsing() {
        assert_eq!(RankSet::parse("5,2").unwrap().as_slice(), &[2, 5]);
        assert!(RankSet::parse("0,1").is_err());
        assert!(RankSet::parse("").unwrap().is_empty());
        assert_eq!(RankSet::parse("1,2,3").unwrap().drop_largest(1).as_slice(), &[1, 2]);
    }
}
