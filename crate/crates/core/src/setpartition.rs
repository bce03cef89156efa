//! Set partitions of `{0, …, n-1}` in canonical restricted-growth form.

use std::fmt;

use crate::partition::IntPartition;
use crate::perm::Perm;

/// `rgs[i]` is the block of letter `i`; blocks are numbered by their least
/// letter, so equal partitions have equal vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    pub fn discrete(n: usize) -> Self {
        SetPartition {
            rgs: (0..n as u8).collect(),
        }
    }

    pub fn indiscrete(n: usize) -> Self {
        SetPartition { rgs: vec![0; n] }
    }

    /// Canonicalizes arbitrary block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = vec![u8::MAX; labels.iter().max().map_or(0, |m| m + 1)];
        let mut next = 0u8;
        let rgs = labels
            .iter()
            .map(|&l| {
                if map[l] == u8::MAX {
                    map[l] = next;
                    next += 1;
                }
                map[l]
            })
            .collect();
        SetPartition { rgs }
    }

    /// From a list of blocks covering `{0..n-1}`; missing letters become
    /// singletons.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Option<Self> {
        let mut lab = vec![usize::MAX; n];
        for (b, blk) in blocks.iter().enumerate() {
            for &x in blk {
                if x >= n || lab[x] != usize::MAX {
                    return None;
                }
                lab[x] = b;
            }
        }
        let mut extra = blocks.len();
        for l in lab.iter_mut() {
            if *l == usize::MAX {
                *l = extra;
                extra += 1;
            }
        }
        Some(Self::from_labels(&lab))
    }

    /// The atom joining letters a and b.
    pub fn atom(n: usize, a: usize, b: usize) -> Self {
        Self::discrete(n).merge(a, b)
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// n minus the number of blocks.
    pub fn rank(&self) -> usize {
        self.n() - self.num_blocks()
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(i);
        }
        out
    }

    pub fn nontrivial_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }

    pub fn block_type(&self) -> IntPartition {
        IntPartition::new(self.blocks().iter().map(Vec::len).collect())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.rgs[a] == self.rgs[b]
    }

    pub fn block_of(&self, a: usize) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.rgs[x] == self.rgs[a]).collect()
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> bool {
        let mut img = [u8::MAX; 256];
        for (i, &b) in self.rgs.iter().enumerate() {
            let o = other.rgs[i];
            let slot = &mut img[b as usize];
            if *slot == u8::MAX {
                *slot = o;
            } else if *slot != o {
                return false;
            }
        }
        true
    }

    /// Merges the blocks containing a and b.
    pub fn merge(&self, a: usize, b: usize) -> SetPartition {
        let (ba, bb) = (self.rgs[a], self.rgs[b]);
        if ba == bb {
            return self.clone();
        }
        let labels: Vec<usize> = self
            .rgs
            .iter()
            .map(|&x| if x == bb { ba as usize } else { x as usize })
            .collect();
        Self::from_labels(&labels)
    }

    pub fn join(&self, other: &SetPartition) -> SetPartition {
        let mut acc = self.clone();
        for blk in other.blocks() {
            for w in blk.windows(2) {
                acc = acc.merge(w[0], w[1]);
            }
        }
        acc
    }

    /// The image under a letter permutation.
    pub fn relabel(&self, g: &Perm) -> SetPartition {
        let mut lab = vec![0usize; self.n()];
        for (i, &b) in self.rgs.iter().enumerate() {
            lab[g.apply(i)] = b as usize;
        }
        Self::from_labels(&lab)
    }

    /// Sort key: the nontrivial blocks in order of least letter. This makes
    /// atoms sort as 12 < 13 < … < (n-1)n.
    pub fn sort_key(&self) -> Vec<Vec<usize>> {
        self.nontrivial_blocks()
    }

    /// All set partitions of `{0..n-1}`.
    pub fn all(n: usize) -> Vec<SetPartition> {
        fn rec(i: usize, n: usize, max: u8, cur: &mut Vec<u8>, out: &mut Vec<SetPartition>) {
            if i == n {
                out.push(SetPartition { rgs: cur.clone() });
                return;
            }
            for b in 0..=max {
                cur.push(b);
                rec(i + 1, n, if b == max { max + 1 } else { max }, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            out.push(SetPartition { rgs: Vec::new() });
        } else {
            rec(0, n, 0, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every set partition finer than `self`.
    pub fn refinements(&self) -> Vec<SetPartition> {
        let n = self.n();
        let mut acc: Vec<Vec<usize>> = vec![vec![0; n]];
        let mut next_label = 0usize;
        for blk in self.blocks() {
            let subs = SetPartition::all(blk.len());
            let mut grown = Vec::with_capacity(acc.len() * subs.len());
            for lab in &acc {
                for s in &subs {
                    let mut l = lab.clone();
                    for (k, &x) in blk.iter().enumerate() {
                        l[x] = next_label + s.rgs[k] as usize;
                    }
                    grown.push(l);
                }
            }
            next_label += blk.len();
            acc = grown;
        }
        acc.iter().map(|l| Self::from_labels(l)).collect()
    }

    /// Parses `|12|56|` style text (1-based letters, singletons implicit).
    /// Letters may be separated by commas when n > 9.
    pub fn parse(n: usize, s: &str) -> Option<SetPartition> {
        let s = s.trim();
        if s == "0̂" || s == "|" || s.is_empty() {
            return Some(Self::discrete(n));
        }
        let mut blocks = Vec::new();
        for part in s.split('|').filter(|p| !p.is_empty()) {
            let letters: Option<Vec<usize>> = if part.contains(',') {
                part.split(',').map(|t| t.trim().parse::<usize>().ok()).collect()
            } else {
                part.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect()
            };
            let letters = letters?;
            if letters.iter().any(|&x| x == 0 || x > n) {
                return None;
            }
            blocks.push(letters.into_iter().map(|x| x - 1).collect::<Vec<_>>());
        }
        Self::from_blocks(n, &blocks)
    }
}

/// Formats letters 1-based, concatenated when n ≤ 9 and comma separated
/// otherwise.
pub fn letters_string(n: usize, letters: &[usize]) -> String {
    let v: Vec<String> = letters.iter().map(|x| (x + 1).to_string()).collect();
    if n <= 9 {
        v.concat()
    } else {
        v.join(",")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nt = self.nontrivial_blocks();
        if nt.is_empty() {
            return write!(f, "0̂");
        }
        write!(f, "|")?;
        for b in nt {
            write!(f, "{}|", letters_string(self.n(), &b))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let b: Vec<usize> = (0..8).map(|n| SetPartition::all(n).len()).collect();
        assert_eq!(b, vec![1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn parse_and_print() {
        let u = SetPartition::parse(8, "|128|67|45|").unwrap();
        assert_eq!(u.to_string(), "|128|45|67|");
        assert_eq!(u.rank(), 4);
        assert_eq!(u.block_type(), IntPartition::new(vec![3, 2, 2, 1]));
    }

    #[test]
    fn refinement_count() {
        let u = SetPartition::parse(6, "|123|45|").unwrap();
        let r = u.refinements();
        assert_eq!(r.len(), 5 * 2);
        assert!(r.iter().all(|x| x.refines(&u)));
    }

    #[test]
    fn join_and_merge() {
        let a = SetPartition::atom(4, 0, 1);
        let b = SetPartition::atom(4, 2, 3);
        assert_eq!(a.join(&b).to_string(), "|12|34|");
        assert!(a.refines(&a.join(&b)));
        assert!(!a.join(&b).refines(&a));
    }
}
