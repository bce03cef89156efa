//! Permutations of `{0, …, n-1}`.
//!
//! Letters are stored 0-based; descriptors print them 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::IntPartition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds from an image vector; `None` if it is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return None;
            }
            seen[x] = true;
        }
        Some(Perm(images))
    }

    /// Builds from disjoint cycles of 0-based letters.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Option<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n || touched[x] {
                    return None;
                }
                touched[x] = true;
                img[x] = c[(k + 1) % c.len()];
            }
        }
        Some(Perm(img))
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        img.swap(a, b);
        Perm(img)
    }

    /// The standard element of a cycle type: consecutive letters in each cycle.
    pub fn of_cycle_type(mu: &IntPartition) -> Self {
        let n = mu.size();
        let mut img = vec![0; n];
        let mut start = 0;
        for &k in mu.parts() {
            for j in 0..k {
                img[start + j] = start + (j + 1) % k;
            }
            start += k;
        }
        Perm(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.0[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.0[x];
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> IntPartition {
        IntPartition::new(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn sign(&self) -> i64 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cyc: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cyc.is_empty() {
            return write!(f, "()");
        }
        for c in cyc {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `items` with their signs relative to the given order.
///
/// Heap's algorithm; the identity arrangement comes first.
pub fn arrangements_with_sign<T: Clone>(items: &[T]) -> Vec<(Vec<T>, i64)> {
    let mut a = items.to_vec();
    let n = a.len();
    let mut out = vec![(a.clone(), 1)];
    let mut c = vec![0usize; n];
    let mut sign = 1;
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            sign = -sign;
            out.push((a.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Every element of S_n.
pub fn symmetric_group(n: usize) -> Vec<Perm> {
    let id: Vec<usize> = (0..n).collect();
    arrangements_with_sign(&id)
        .into_iter()
        .map(|(v, _)| Perm(v))
        .collect()
}

/// Every permutation of `{0..n-1}` supported on `letters`.
pub fn permutations_of(n: usize, letters: &[usize]) -> Vec<(Perm, i64)> {
    arrangements_with_sign(letters)
        .into_iter()
        .map(|(arr, s)| {
            let mut img: Vec<usize> = (0..n).collect();
            for (k, &x) in letters.iter().enumerate() {
                img[x] = arr[k];
            }
            (Perm(img), s)
        })
        .collect()
}

/// Elements of a direct product of subgroups with disjoint supports.
pub fn product_of(n: usize, factors: &[Vec<Perm>]) -> Vec<Perm> {
    let mut acc = vec![Perm::identity(n)];
    for f in factors {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for a in &acc {
            for g in f {
                next.push(a.compose(g));
            }
        }
        acc = next;
    }
    acc
}

/// The wreath product S_k[S_m] acting on `k` consecutive blocks of size `m`
/// laid out from letter `offset`.
pub fn wreath_product(n: usize, offset: usize, k: usize, m: usize) -> Vec<Perm> {
    let mut base = Vec::new();
    for b in 0..k {
        let letters: Vec<usize> = (0..m).map(|j| offset + b * m + j).collect();
        base.push(permutations_of(n, &letters).into_iter().map(|(p, _)| p).collect());
    }
    let inner = product_of(n, &base);
    let blocks: Vec<usize> = (0..k).collect();
    let mut out = Vec::with_capacity(inner.len() * crate::partition::factorial(k) as usize);
    for (arr, _) in arrangements_with_sign(&blocks) {
        let mut img: Vec<usize> = (0..n).collect();
        for b in 0..k {
            for j in 0..m {
                img[offset + b * m + j] = offset + arr[b] * m + j;
            }
        }
        let top = Perm(img);
        for h in &inner {
            out.push(top.compose(h));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_signs_match_cycle_signs() {
        let id: Vec<usize> = (0..5).collect();
        for (arr, s) in arrangements_with_sign(&id) {
            assert_eq!(Perm::from_images(arr).unwrap().sign(), s);
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(symmetric_group(4).len(), 24);
        let w = wreath_product(6, 0, 3, 2);
        assert_eq!(w.len(), 48);
        let mut d = w.clone();
        d.sort();
        d.dedup();
        assert_eq!(d.len(), 48);
    }

    #[test]
    fn cycle_type_rep() {
        let mu = IntPartition::new(vec![3, 2, 2, 1]);
        assert_eq!(Perm::of_cycle_type(&mu).cycle_type(), mu);
    }

    #[test]
    fn compose_inverse() {
        let g = Perm::from_cycles(5, &[vec![0, 2, 4], vec![1, 3]]).unwrap();
        assert!(g.compose(&g.inverse()).is_identity());
        assert_eq!(g.to_string(), "(1 3 5)(2 4)");
    }
}
