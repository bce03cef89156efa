//! Ribbon shapes and their fillings.
//!
//! Rows are listed bottom to top. The last box of each row sits directly
//! below the first box of the next row, and the reading order runs left to
//! right along each row starting from the bottom.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::RankSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RibbonShape {
    rows: Vec<usize>,
}

impl RibbonShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || rows.contains(&0) {
            return Err(Error::InvalidInput(format!("ribbon rows {rows:?}")));
        }
        Ok(RibbonShape { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Reading positions where each row starts.
    pub fn row_starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.rows.len());
        let mut s = 0;
        for &r in &self.rows {
            out.push(s);
            s += r;
        }
        out
    }

    /// Cumulative row lengths: the descent positions of a standard filling
    /// together with the size.
    pub fn cut_points(&self) -> Vec<usize> {
        self.rows
            .iter()
            .scan(0, |s, &r| {
                *s += r;
                Some(*s)
            })
            .collect()
    }

    /// Columns as lists of reading positions, bottom box first.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let starts = self.row_starts();
        let mut cols: Vec<Vec<usize>> = Vec::new();
        for p in 0..self.size() {
            let joins_below = p > 0 && starts[1..].contains(&p);
            if joins_below {
                cols.last_mut().unwrap().push(p);
            } else {
                cols.push(vec![p]);
            }
        }
        cols
    }

    /// The hook/column structure as the number of columns.
    pub fn num_columns(&self) -> usize {
        self.size() + 1 - self.rows.len()
    }
}

/// Rib(S) for a poset of rank n: rows (s_1, s_2 − s_1, …, n − s_k).
pub fn ribbon_of(s: &RankSet, n: usize) -> Result<RibbonShape> {
    if !s.is_empty() && s.max() >= n {
        return Err(Error::InvalidRankSet {
            set: s.as_slice().to_vec(),
            rank: n,
        });
    }
    let mut rows = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &x in s.as_slice() {
        rows.push(x - prev);
        prev = x;
    }
    rows.push(n - prev);
    RibbonShape::new(rows)
}

/// Rib_WH(S): (s_1, s_2 − s_1, …, max S − s_{r−1}), of size max S.
pub fn ribbon_wh(s: &RankSet) -> Result<RibbonShape> {
    if s.is_empty() {
        return Err(Error::InvalidInput("Rib_WH needs a nonempty rank set".into()));
    }
    ribbon_of(&s.drop_largest(1), s.max())
}

/// A filling of a ribbon, entries in reading order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RibbonFilling {
    shape: RibbonShape,
    entries: Vec<usize>,
}

impl PartialOrd for RibbonShape {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RibbonShape {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rows.cmp(&other.rows)
    }
}

impl RibbonFilling {
    pub fn new(shape: RibbonShape, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != shape.size() {
            return Err(Error::InvalidInput(format!(
                "{} entries for a ribbon of size {}",
                entries.len(),
                shape.size()
            )));
        }
        let mut s = entries.clone();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput("ribbon entries must be distinct".into()));
        }
        Ok(RibbonFilling { shape, entries })
    }

    /// Builds from rows listed bottom to top.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let shape = RibbonShape::new(rows.iter().map(Vec::len).collect())?;
        Self::new(shape, rows.concat())
    }

    pub fn shape(&self) -> &RibbonShape {
        &self.shape
    }

    /// The reading word.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut s = 0;
        for &r in self.shape.rows() {
            out.push(self.entries[s..s + r].to_vec());
            s += r;
        }
        out
    }

    /// Rows strictly increase left to right and columns strictly increase
    /// top to bottom, comparing entries by `key`.
    pub fn is_standard(&self, key: impl Fn(usize) -> usize) -> bool {
        let cuts = self.shape.cut_points();
        (0..self.entries.len().saturating_sub(1)).all(|p| {
            let (a, b) = (key(self.entries[p]), key(self.entries[p + 1]));
            if cuts.contains(&(p + 1)) {
                a > b
            } else {
                a < b
            }
        })
    }

    /// Applies a map to every entry.
    pub fn map(&self, f: impl Fn(usize) -> usize) -> RibbonFilling {
        RibbonFilling {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|&e| f(e)).collect(),
        }
    }

    /// Merges rows l and l+1 (1-based l), the filling-level boundary d_l.
    pub fn merge_rows(&self, l: usize) -> Result<RibbonFilling> {
        let rows = self.shape.rows();
        if l == 0 || l >= rows.len() {
            return Err(Error::InvalidInput(format!("cannot merge row {l} of {}", rows.len())));
        }
        let mut nr = rows[..l - 1].to_vec();
        nr.push(rows[l - 1] + rows[l]);
        nr.extend_from_slice(&rows[l + 1..]);
        Ok(RibbonFilling {
            shape: RibbonShape::new(nr)?,
            entries: self.entries.clone(),
        })
    }

    pub fn to_json(&self, label: impl Fn(usize) -> String) -> FillingJson {
        FillingJson {
            shape: self.shape.rows().to_vec(),
            rows: self
                .rows()
                .iter()
                .map(|r| r.iter().map(|&e| label(e)).collect())
                .collect(),
        }
    }
}

/// Serialized filling: `{shape, rows}` with rows bottom to top.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FillingJson {
    pub shape: Vec<usize>,
    pub rows: Vec<Vec<String>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_from_rank_sets() {
        let s = RankSet::new(vec![2, 5]).unwrap();
        assert_eq!(ribbon_of(&s, 8).unwrap().rows(), &[2, 3, 3]);
        assert_eq!(ribbon_of(&s, 7).unwrap().rows(), &[2, 3, 2]);
        assert_eq!(ribbon_of(&RankSet::interval(3), 6).unwrap().rows(), &[1, 1, 1, 3]);
        assert!(ribbon_of(&s, 5).is_err());
        let wh = ribbon_wh(&RankSet::new(vec![2, 3, 4, 5, 8, 9]).unwrap()).unwrap();
        assert_eq!(wh.rows(), &[2, 1, 1, 1, 3, 1]);
    }

    #[test]
    fn columns() {
        let r = RibbonShape::new(vec![2, 1, 1, 1, 3, 1]).unwrap();
        assert_eq!(r.columns(), vec![vec![0], vec![1, 2, 3, 4, 5], vec![6], vec![7, 8]]);
        assert_eq!(r.num_columns(), 4);
    }

    #[test]
    fn standardness() {
        let f = RibbonFilling::from_rows(&[vec![3, 4], vec![1, 6, 7], vec![2, 5, 8]]).unwrap();
        assert!(f.is_standard(|e| e));
        let g = RibbonFilling::from_rows(&[vec![1, 3], vec![4, 2, 5]]).unwrap();
        assert!(!g.is_standard(|e| e));
    }
}
