//! Minimal EL-labelings of geometric lattices, the dictionary between label
//! words, maximal chains and ribbon fillings, and NBC recognition.
//!
//! Atoms are referred to by their position in [`GradedPoset::atoms`], which
//! is also their bit in [`GradedPoset::atom_bits`].

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lattices::join_atom;
use crate::poset::{GradedPoset, PosetChain, RankSet};
use crate::tableaux::ribbon::{ribbon_of, ribbon_wh, RibbonFilling};

/// A total order on the atoms of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtomOrdering {
    /// `key[p]` is the place of atom position `p` in the order.
    key: Vec<usize>,
}

impl AtomOrdering {
    /// Atoms in the lattice's own order (12 < 13 < … for Π_n).
    pub fn natural(l: &GradedPoset) -> Self {
        AtomOrdering {
            key: (0..l.atoms().len()).collect(),
        }
    }

    /// `order` lists atom positions from least to greatest.
    pub fn from_order(l: &GradedPoset, order: &[usize]) -> Result<Self> {
        let m = l.atoms().len();
        let mut key = vec![usize::MAX; m];
        if order.len() != m {
            return Err(Error::InvalidInput(format!("atom order has {} entries, expected {m}", order.len())));
        }
        for (k, &p) in order.iter().enumerate() {
            if p >= m || key[p] != usize::MAX {
                return Err(Error::InvalidInput(format!("atom order {order:?} is not a permutation")));
            }
            key[p] = k;
        }
        Ok(AtomOrdering { key })
    }

    pub fn random(l: &GradedPoset, seed: u64) -> Self {
        let mut order: Vec<usize> = (0..l.atoms().len()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        Self::from_order(l, &order).unwrap()
    }

    /// `natural`, a comma list of 1-based atom numbers, or a
    /// whitespace-separated list of atom descriptions such as `|13| |12| …`.
    pub fn parse(l: &GradedPoset, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "natural" {
            return Ok(Self::natural(l));
        }
        let atoms = l.atoms();
        let order: Option<Vec<usize>> = if text.chars().all(|c| c.is_ascii_digit() || c == ',' || c == ' ') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().ok().and_then(|k| k.checked_sub(1)))
                .collect()
        } else {
            text.split_whitespace()
                .map(|t| {
                    let t = t.trim_matches('|');
                    atoms.iter().position(|&a| l.describe(a).trim_matches('|') == t)
                })
                .collect()
        };
        let order = order.ok_or_else(|| Error::InvalidInput(format!("cannot parse atom order {text:?}")))?;
        Self::from_order(l, &order)
    }

    pub fn len(&self) -> usize {
        self.key.len()
    }

    pub fn is_empty(&self) -> bool {
        self.key.is_empty()
    }

    #[inline]
    pub fn key(&self, p: usize) -> usize {
        self.key[p]
    }

    /// Atom positions from least to greatest.
    pub fn order(&self) -> Vec<usize> {
        let mut o = vec![0; self.key.len()];
        for (p, &k) in self.key.iter().enumerate() {
            o[k] = p;
        }
        o
    }

    /// The least atom of a position mask.
    pub fn min_of(&self, mask: u64) -> Option<usize> {
        bits(mask).min_by_key(|&p| self.key[p])
    }
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn atom_bits(l: &GradedPoset) -> Result<&[u64]> {
    l.atom_bits()
        .ok_or_else(|| Error::NotGeometric("the poset carries no atom sets".into()))
}

/// Labels on cover relations, aligned with [`GradedPoset::up`].
#[derive(Clone, Debug)]
pub struct EdgeLabeling {
    labels: Vec<Vec<usize>>,
    ord: AtomOrdering,
}

impl EdgeLabeling {
    /// Labels from an arbitrary function of the cover; labels are atom
    /// positions compared through `ord`.
    pub fn from_fn(l: &GradedPoset, ord: AtomOrdering, f: impl Fn(usize, usize) -> usize) -> Self {
        let labels = (0..l.len())
            .map(|x| l.up(x).iter().map(|&y| f(x, y)).collect())
            .collect();
        EdgeLabeling { labels, ord }
    }

    pub fn ordering(&self) -> &AtomOrdering {
        &self.ord
    }

    /// Label of the cover `x ≺ y`.
    pub fn label(&self, l: &GradedPoset, x: usize, y: usize) -> Option<usize> {
        let k = l.up(x).iter().position(|&z| z == y)?;
        Some(self.labels[x][k])
    }

    /// Labels of the covers above `x`, aligned with `l.up(x)`.
    pub fn labels_above(&self, x: usize) -> &[usize] {
        &self.labels[x]
    }

    #[inline]
    pub fn key(&self, label: usize) -> usize {
        self.ord.key(label)
    }

    /// Label sequence of a saturated chain given as `from`, then the
    /// listed elements.
    pub fn word(&self, l: &GradedPoset, from: usize, chain: &[usize]) -> Result<Vec<usize>> {
        let mut prev = from;
        let mut w = Vec::with_capacity(chain.len());
        for &z in chain {
            w.push(
                self.label(l, prev, z)
                    .ok_or_else(|| Error::InvalidInput(format!("{} ⋖ {} is not a cover", l.describe(prev), l.describe(z))))?,
            );
            prev = z;
        }
        Ok(w)
    }

    /// Label word of a maximal chain given by its interior elements.
    pub fn chain_word(&self, l: &GradedPoset, m: &[usize]) -> Result<Vec<usize>> {
        let mut full = m.to_vec();
        full.push(l.top());
        self.word(l, l.bottom(), &full)
    }
}

/// Each cover u ≺ v gets the least atom of A(v) \ A(u).
pub fn minimal_labeling(l: &GradedPoset, ord: &AtomOrdering) -> Result<EdgeLabeling> {
    let b = atom_bits(l)?;
    if ord.len() != l.atoms().len() {
        return Err(Error::InvalidInput("atom ordering does not match the lattice".into()));
    }
    let mut labels = Vec::with_capacity(l.len());
    for x in 0..l.len() {
        let mut row = Vec::with_capacity(l.up(x).len());
        for &y in l.up(x) {
            let new = b[y] & !b[x];
            let a = ord.min_of(new).ok_or_else(|| {
                Error::NotGeometric(format!("{} ⋖ {} adds no atom", l.describe(x), l.describe(y)))
            })?;
            row.push(a);
        }
        labels.push(row);
    }
    Ok(EdgeLabeling {
        labels,
        ord: ord.clone(),
    })
}

/// An interval on which the EL property fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElFailure {
    pub lower: usize,
    pub upper: usize,
    /// Number of weakly increasing maximal chains of the interval.
    pub increasing: usize,
    /// Whether the lexicographically first word is unique and increasing.
    pub lex_first_increasing: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ElReport {
    pub intervals: usize,
    pub failures: Vec<ElFailure>,
}

impl ElReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every interval of rank ≥ 1 for a unique weakly increasing maximal
/// chain that is also strictly lexicographically first.
pub fn verify_el_labeling(l: &GradedPoset, lab: &EdgeLabeling) -> ElReport {
    struct Stat {
        increasing: usize,
        min: Option<Vec<usize>>,
        min_count: usize,
        min_increasing: bool,
    }
    let mut report = ElReport::default();
    for x in 0..l.len() {
        let mut stats: Vec<Option<Stat>> = (0..l.len()).map(|_| None).collect();
        let mut word = Vec::new();
        fn dfs(
            l: &GradedPoset,
            lab: &EdgeLabeling,
            y: usize,
            word: &mut Vec<usize>,
            inc: bool,
            stats: &mut Vec<Option<Stat>>,
        ) {
            for (k, &z) in l.up(y).iter().enumerate() {
                let key = lab.key(lab.labels[y][k]);
                let inc_z = inc && word.last().is_none_or(|&w| w <= key);
                word.push(key);
                let st = stats[z].get_or_insert(Stat {
                    increasing: 0,
                    min: None,
                    min_count: 0,
                    min_increasing: false,
                });
                if inc_z {
                    st.increasing += 1;
                }
                match &st.min {
                    Some(m) if *m < *word => {}
                    Some(m) if *m == *word => st.min_count += 1,
                    _ => {
                        st.min = Some(word.clone());
                        st.min_count = 1;
                        st.min_increasing = inc_z;
                    }
                }
                dfs(l, lab, z, word, inc_z, stats);
                word.pop();
            }
        }
        dfs(l, lab, x, &mut word, true, &mut stats);
        for (y, st) in stats.into_iter().enumerate() {
            if let Some(st) = st {
                report.intervals += 1;
                let lex_ok = st.min_count == 1 && st.min_increasing;
                if st.increasing != 1 || !lex_ok {
                    report.failures.push(ElFailure {
                        lower: x,
                        upper: y,
                        increasing: st.increasing,
                        lex_first_increasing: lex_ok,
                    });
                }
            }
        }
    }
    report
}

/// Prefix joins a_1, a_1∨a_2, … of a word of atom positions, checking that
/// each step raises the rank by one.
pub fn prefix_joins(l: &GradedPoset, w: &[usize]) -> Result<Vec<usize>> {
    let atoms = l.atoms();
    let mut cur = l.bottom();
    let mut out = Vec::with_capacity(w.len());
    for &p in w {
        let a = *atoms
            .get(p)
            .ok_or_else(|| Error::InvalidInput(format!("atom position {p} out of range")))?;
        let next = join_atom(l, cur, a)?;
        if l.rank_of(next) != l.rank_of(cur) + 1 {
            return Err(Error::Dependent(w.to_vec()));
        }
        out.push(next);
        cur = next;
    }
    Ok(out)
}

/// The element joining a set of atom positions given as a mask.
pub fn join_mask(l: &GradedPoset, mask: u64) -> Result<usize> {
    let b = atom_bits(l)?;
    let mut cur = l.bottom();
    while b[cur] & mask != mask {
        let need = (mask & !b[cur]).trailing_zeros();
        cur = *l
            .up(cur)
            .iter()
            .find(|&&z| b[z] >> need & 1 == 1)
            .ok_or_else(|| Error::NotLattice("no cover adds a required atom".into()))?;
    }
    Ok(cur)
}

pub fn mask_of(w: &[usize]) -> u64 {
    w.iter().fold(0, |m, &p| m | 1 << p)
}

/// f_chain: the maximal chain of prefix joins of a full-rank independent
/// word, as interior elements.
pub fn f_chain(l: &GradedPoset, w: &[usize]) -> Result<PosetChain> {
    let mut joins = prefix_joins(l, w)?;
    if joins.last().copied().unwrap_or(l.bottom()) != l.top() {
        return Err(Error::Dependent(w.to_vec()));
    }
    joins.pop();
    Ok(joins)
}

/// f_rib: the filling of Rib(S) whose reading word is the label word of M.
pub fn f_rib(l: &GradedPoset, lab: &EdgeLabeling, m: &[usize], s: &RankSet) -> Result<RibbonFilling> {
    let shape = ribbon_of(s, l.rank())?;
    RibbonFilling::new(shape, lab.chain_word(l, m)?)
}

/// The saturated chain from `x` up to `y` whose labels are lexicographically
/// least, chosen greedily; `x` excluded, `y` included.
pub fn lex_first_segment(l: &GradedPoset, lab: &EdgeLabeling, x: usize, y: usize) -> Result<Vec<usize>> {
    if !l.leq(x, y) {
        return Err(Error::NotComparable(x, y));
    }
    let mut cur = x;
    let mut out = Vec::new();
    while cur != y {
        let next = l
            .up(cur)
            .iter()
            .enumerate()
            .filter(|&(_, &z)| l.leq(z, y))
            .min_by_key(|&(k, _)| lab.key(lab.labels_above(cur)[k]))
            .map(|(_, &z)| z)
            .ok_or(Error::NotComparable(cur, y))?;
        out.push(next);
        cur = next;
    }
    Ok(out)
}

/// f_first: the lexicographically earliest maximal chain of L through the
/// elements of γ (given as elements of L, bottom to top).
pub fn f_first(l: &GradedPoset, lab: &EdgeLabeling, gamma: &[usize]) -> Result<PosetChain> {
    let mut out = Vec::new();
    let mut prev = l.bottom();
    for &g in gamma.iter().chain(std::iter::once(&l.top())) {
        out.extend(lex_first_segment(l, lab, prev, g)?);
        prev = g;
    }
    out.pop();
    Ok(out)
}

/// res_S: the elements of a maximal chain at the ranks in S.
pub fn res_s(m: &[usize], s: &RankSet) -> PosetChain {
    s.as_slice().iter().map(|&r| m[r - 1]).collect()
}

/// Independent, and no atom outside A below its join precedes all of A.
pub fn is_nbc_independent(l: &GradedPoset, ord: &AtomOrdering, a: &[usize]) -> Result<bool> {
    let b = atom_bits(l)?;
    if a.is_empty() {
        return Ok(true);
    }
    let mask = mask_of(a);
    let j = join_mask(l, mask)?;
    if l.rank_of(j) != a.len() || mask.count_ones() as usize != a.len() {
        return Ok(false);
    }
    let least = a.iter().map(|&p| ord.key(p)).min().unwrap();
    Ok(bits(b[j] & !mask).all(|p| ord.key(p) > least))
}

/// Independent and free of broken circuits: no subset B admits an atom
/// outside B, below its join, preceding all of B.
pub fn is_nbc_set(l: &GradedPoset, ord: &AtomOrdering, a: &[usize]) -> Result<bool> {
    let b = atom_bits(l)?;
    let mask = mask_of(a);
    if mask.count_ones() as usize != a.len() {
        return Ok(false);
    }
    if a.is_empty() {
        return Ok(true);
    }
    if l.rank_of(join_mask(l, mask)?) != a.len() {
        return Ok(false);
    }
    for sub in 1u64..1 << a.len() {
        let bm: u64 = bits(sub).fold(0, |m, i| m | 1 << a[i]);
        let j = join_mask(l, bm)?;
        let least = bits(bm).map(|p| ord.key(p)).min().unwrap();
        if bits(b[j] & !bm).any(|p| ord.key(p) < least) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// NBC⁺: a full-rank word in which every letter is the least atom newly
/// covered by its prefix join.
pub fn is_nbc_plus(l: &GradedPoset, ord: &AtomOrdering, w: &[usize]) -> Result<bool> {
    let b = atom_bits(l)?;
    if w.len() != l.rank() || w.iter().any(|&p| p >= l.atoms().len()) {
        return Ok(false);
    }
    let joins = match prefix_joins(l, w) {
        Ok(j) => j,
        Err(Error::Dependent(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let mut prev = l.bottom();
    for (k, &j) in joins.iter().enumerate() {
        if ord.min_of(b[j] & !b[prev]) != Some(w[k]) {
            return Ok(false);
        }
        prev = j;
    }
    Ok(prev == l.top() && is_nbc_independent(l, ord, w)?)
}

/// NBC⁺ via the other characterization: the word is the label word of the
/// chain it generates.
pub fn is_nbc_plus_by_image(l: &GradedPoset, lab: &EdgeLabeling, w: &[usize]) -> Result<bool> {
    if w.len() != l.rank() || w.iter().any(|&p| p >= l.atoms().len()) {
        return Ok(false);
    }
    match f_chain(l, w) {
        Ok(m) => Ok(lab.chain_word(l, &m)? == w),
        Err(Error::Dependent(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Descent positions i (1-based) with key(w_i) > key(w_{i+1}), as a bit mask.
pub fn descent_mask(ord: &AtomOrdering, w: &[usize]) -> u64 {
    (1..w.len())
        .filter(|&i| ord.key(w[i - 1]) > ord.key(w[i]))
        .fold(0, |m, i| m | 1 << i)
}

pub fn rank_mask(s: &RankSet) -> u64 {
    s.as_slice().iter().fold(0, |m, &i| m | 1 << i)
}

/// A saturated chain from 0̂ with its label word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainWord {
    /// Elements of ranks 1, 2, …, ending with the chain's top.
    pub chain: Vec<usize>,
    pub word: Vec<usize>,
    pub descents: u64,
}

/// A geometric lattice with a chosen atom order and its minimal labeling.
pub struct Shelling<'a> {
    pub lattice: &'a GradedPoset,
    pub ord: AtomOrdering,
    pub lab: EdgeLabeling,
}

impl<'a> Shelling<'a> {
    pub fn new(l: &'a GradedPoset, ord: AtomOrdering) -> Result<Self> {
        let lab = minimal_labeling(l, &ord)?;
        Ok(Shelling { lattice: l, ord, lab })
    }

    pub fn natural(l: &'a GradedPoset) -> Result<Self> {
        Self::new(l, AtomOrdering::natural(l))
    }

    /// Every saturated chain from 0̂ to `u`.
    pub fn words_below(&self, u: usize) -> Vec<ChainWord> {
        let l = self.lattice;
        let target = l.rank_of(u);
        let mut out = Vec::new();
        let mut chain = Vec::with_capacity(target);
        let mut word = Vec::with_capacity(target);
        fn rec(
            sh: &Shelling,
            u: usize,
            x: usize,
            chain: &mut Vec<usize>,
            word: &mut Vec<usize>,
            out: &mut Vec<ChainWord>,
        ) {
            let l = sh.lattice;
            if x == u {
                out.push(ChainWord {
                    chain: chain.clone(),
                    word: word.clone(),
                    descents: descent_mask(&sh.ord, word),
                });
                return;
            }
            for (k, &z) in l.up(x).iter().enumerate() {
                if l.leq(z, u) {
                    chain.push(z);
                    word.push(sh.lab.labels_above(x)[k]);
                    rec(sh, u, z, chain, word, out);
                    chain.pop();
                    word.pop();
                }
            }
        }
        rec(self, u, l.bottom(), &mut chain, &mut word, &mut out);
        out
    }

    /// Standard NBC⁺ fillings of Rib(S): the label words of maximal chains
    /// whose descent set is exactly S.
    pub fn standard_fillings(&self, s: &RankSet) -> Result<Vec<RibbonFilling>> {
        let words = self.words_below(self.lattice.top());
        self.standard_fillings_from(&words, s)
    }

    pub fn standard_fillings_from(&self, words: &[ChainWord], s: &RankSet) -> Result<Vec<RibbonFilling>> {
        let l = self.lattice;
        s.validate(l.rank())?;
        let shape = ribbon_of(s, l.rank())?;
        let want = rank_mask(s);
        words
            .iter()
            .filter(|cw| cw.descents == want)
            .map(|cw| RibbonFilling::new(shape.clone(), cw.word.clone()))
            .collect()
    }

    /// Standard fillings of Rib_WH(S) for each u of rank max S, taken from
    /// the interval [0̂, u].
    pub fn wh_fillings(&self, s: &RankSet) -> Result<Vec<(usize, Vec<RibbonFilling>)>> {
        let l = self.lattice;
        if s.is_empty() || s.max() > l.rank() {
            return Err(Error::InvalidRankSet {
                set: s.as_slice().to_vec(),
                rank: l.rank(),
            });
        }
        let shape = ribbon_wh(s)?;
        let want = rank_mask(&s.drop_largest(1));
        l.at_rank(s.max())
            .iter()
            .map(|&u| {
                let f: Result<Vec<RibbonFilling>> = self
                    .words_below(u)
                    .into_iter()
                    .filter(|cw| cw.descents == want)
                    .map(|cw| RibbonFilling::new(shape.clone(), cw.word))
                    .collect();
                Ok((u, f?))
            })
            .collect()
    }
}

/// [`Shelling::standard_fillings`] for the minimal labeling from `ord`.
pub fn enumerate_standard_nbc_plus_fillings(
    l: &GradedPoset,
    ord: &AtomOrdering,
    s: &RankSet,
) -> Result<Vec<RibbonFilling>> {
    Shelling::new(l, ord.clone())?.standard_fillings(s)
}

/// Permutation of atom positions induced by a letter permutation.
pub fn atom_action(l: &GradedPoset, g: &crate::perm::Perm) -> Result<Vec<usize>> {
    l.atoms()
        .iter()
        .map(|&a| {
            let ga = l.act(g, a).ok_or(Error::NoAction)?;
            l.atom_position(ga).ok_or(Error::NoAction)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{boolean_lattice, partition_lattice};

    fn pos(l: &GradedPoset, text: &str) -> usize {
        l.atom_position(l.find(text).unwrap()).unwrap()
    }

    #[test]
    fn boolean_labels_are_letters() {
        let b = boolean_lattice(4).unwrap();
        let sh = Shelling::natural(&b).unwrap();
        for x in 0..b.len() {
            for (k, &y) in b.up(x).iter().enumerate() {
                let added = b.atom_bits().unwrap()[y] & !b.atom_bits().unwrap()[x];
                assert_eq!(1u64 << sh.lab.labels_above(x)[k], added);
            }
        }
        assert!(verify_el_labeling(&b, &sh.lab).passed());
    }

    #[test]
    fn pi5_cover_label() {
        let p = partition_lattice(5).unwrap();
        let sh = Shelling::natural(&p).unwrap();
        let x = p.find("|12|").unwrap();
        let y = p.find("|123|").unwrap();
        assert_eq!(sh.lab.label(&p, x, y), Some(pos(&p, "|13|")));
    }

    #[test]
    fn nbc_examples() {
        let p = partition_lattice(4).unwrap();
        let ord = AtomOrdering::natural(&p);
        let a = |t: &str| pos(&p, t);
        assert!(is_nbc_independent(&p, &ord, &[a("|12|"), a("|34|")]).unwrap());
        assert!(!is_nbc_independent(&p, &ord, &[a("|13|"), a("|23|")]).unwrap());
        assert!(is_nbc_independent(&p, &ord, &[]).unwrap());
        let w = [a("|13|"), a("|12|"), a("|14|")];
        assert!(is_nbc_plus(&p, &ord, &w).unwrap());
        let sh = Shelling::natural(&p).unwrap();
        assert!(is_nbc_plus_by_image(&p, &sh.lab, &w).unwrap());
        assert!(!is_nbc_plus(&p, &ord, &[a("|12|"), a("|13|"), a("|23|")]).unwrap());
    }
}
