//! Integer partitions.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntPartition(Vec<usize>);

impl IntPartition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        IntPartition(parts)
    }

    pub fn empty() -> Self {
        IntPartition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// m_i, the number of parts equal to i.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// The order of the centralizer of a permutation of this cycle type.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.0.len() {
            let p = self.0[i];
            let mut m = 0;
            while i < self.0.len() && self.0[i] == p {
                m += 1;
                i += 1;
            }
            z *= (p as u128).pow(m as u32) * factorial(m);
        }
        z
    }

    pub fn conjugate(&self) -> IntPartition {
        let mut out = Vec::new();
        for k in 1..=self.first() {
            out.push(self.0.iter().filter(|&&p| p >= k).count());
        }
        IntPartition(out)
    }

    /// λ with its first row removed.
    pub fn strip_first_row(&self) -> IntPartition {
        IntPartition(self.0.iter().skip(1).copied().collect())
    }

    /// λ̄ padded by a first row to size n, if that yields a partition.
    pub fn pad(&self, n: usize) -> Option<IntPartition> {
        let s = self.size();
        if n < s || n - s < self.first() {
            return None;
        }
        let mut v = vec![n - s];
        v.extend_from_slice(&self.0);
        Some(IntPartition::new(v))
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num = factorial(self.size());
        let mut den: u128 = 1;
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let hook = (row - j - 1) + (conj.0[j] - i - 1) + 1;
                den *= hook as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        num / den
    }

    /// Union of parts (the product of power sums).
    pub fn union(&self, other: &IntPartition) -> IntPartition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IntPartition::new(v)
    }

    /// Every part multiplied by k.
    pub fn scale(&self, k: usize) -> IntPartition {
        IntPartition(self.0.iter().map(|p| p * k).collect())
    }

    pub fn comma_string(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.comma_string())
    }
}

/// All partitions of n, in reverse lexicographic order ((n) first).
pub fn partitions(n: usize) -> Vec<IntPartition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
        if n == 0 {
            out.push(IntPartition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i as u128 + 1);
    }
    r
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn hook_lengths() {
        assert_eq!(IntPartition::new(vec![3, 2]).dimension(), 5);
        assert_eq!(IntPartition::new(vec![2, 2, 1]).dimension(), 5);
        let total: u128 = partitions(6).iter().map(|l| l.dimension().pow(2)).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn class_sizes_sum() {
        for n in 1..8 {
            let s: u128 = partitions(n).iter().map(|m| factorial(n) / m.z()).sum();
            assert_eq!(s, factorial(n));
        }
    }

    #[test]
    fn padding() {
        let l = IntPartition::new(vec![2, 1]);
        assert_eq!(l.pad(5), Some(IntPartition::new(vec![2, 2, 1])));
        assert_eq!(l.pad(4), None);
        assert_eq!(IntPartition::new(vec![4, 2, 1]).strip_first_row(), l);
    }
}
