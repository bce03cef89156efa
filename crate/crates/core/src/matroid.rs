//! Matroids on at most 64 ground elements.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
enum Source {
    Bases(Vec<u64>),
    Circuits(Vec<u64>),
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
}

#[derive(Clone, Debug)]
pub struct Matroid {
    ground: Vec<String>,
    source: Source,
}

fn popcount(x: u64) -> usize {
    x.count_ones() as usize
}

fn subset_string(ground: &[String], x: u64) -> String {
    let v: Vec<&str> = (0..ground.len())
        .filter(|i| x >> i & 1 == 1)
        .map(|i| ground[i].as_str())
        .collect();
    format!("{{{}}}", v.join(","))
}

impl Matroid {
    pub fn from_bases(ground: Vec<String>, bases: Vec<u64>) -> Result<Self> {
        check_ground(&ground)?;
        let full = full_mask(ground.len());
        if bases.is_empty() {
            return Err(Error::MatroidAxiom {
                axiom: "at least one basis",
                witness: "{}".into(),
            });
        }
        let r = popcount(bases[0]);
        let set: std::collections::HashSet<u64> = bases.iter().copied().collect();
        for &b in &bases {
            if b & !full != 0 || popcount(b) != r {
                return Err(Error::MatroidAxiom {
                    axiom: "bases equicardinal within the ground set",
                    witness: subset_string(&ground, b),
                });
            }
        }
        for &a in &set {
            for &b in &set {
                for x in 0..ground.len() {
                    if a >> x & 1 == 1 && b >> x & 1 == 0 {
                        let ok = (0..ground.len()).any(|y| {
                            b >> y & 1 == 1 && a >> y & 1 == 0 && set.contains(&((a & !(1 << x)) | (1 << y)))
                        });
                        if !ok {
                            return Err(Error::MatroidAxiom {
                                axiom: "basis exchange",
                                witness: format!(
                                    "{} and {}",
                                    subset_string(&ground, a),
                                    subset_string(&ground, b)
                                ),
                            });
                        }
                    }
                }
            }
        }
        let mut bases: Vec<u64> = set.into_iter().collect();
        bases.sort_unstable();
        Ok(Matroid {
            ground,
            source: Source::Bases(bases),
        })
    }

    pub fn from_circuits(ground: Vec<String>, circuits: Vec<u64>) -> Result<Self> {
        check_ground(&ground)?;
        let full = full_mask(ground.len());
        let mut cs = circuits.clone();
        cs.sort_unstable();
        cs.dedup();
        for &c in &cs {
            if c == 0 || c & !full != 0 {
                return Err(Error::MatroidAxiom {
                    axiom: "circuits are nonempty subsets of the ground set",
                    witness: subset_string(&ground, c),
                });
            }
        }
        for &a in &cs {
            for &b in &cs {
                if a != b && a & b == a {
                    return Err(Error::MatroidAxiom {
                        axiom: "no circuit contains another",
                        witness: format!("{} and {}", subset_string(&ground, a), subset_string(&ground, b)),
                    });
                }
                if a < b && a & b != 0 {
                    let u = a | b;
                    for e in 0..ground.len() {
                        if (a & b) >> e & 1 == 1 {
                            let rest = u & !(1 << e);
                            if !cs.iter().any(|&c| c & rest == c) {
                                return Err(Error::MatroidAxiom {
                                    axiom: "circuit elimination",
                                    witness: format!(
                                        "{} and {}",
                                        subset_string(&ground, a),
                                        subset_string(&ground, b)
                                    ),
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(Matroid {
            ground,
            source: Source::Circuits(cs),
        })
    }

    /// The cycle matroid of a graph; vertices are `0..vertices`.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.len() > 64 {
            return Err(Error::InvalidInput("at most 64 edges".into()));
        }
        for &(u, v) in edges {
            if u >= vertices || v >= vertices {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) out of range")));
            }
        }
        let ground = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (u.min(v) + 1, u.max(v) + 1);
                if vertices <= 9 {
                    format!("{a}{b}")
                } else {
                    format!("{a}-{b}")
                }
            })
            .collect();
        Ok(Matroid {
            ground,
            source: Source::Graphic {
                vertices,
                edges: edges.to_vec(),
            },
        })
    }

    pub fn complete_graph(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::graphic(n, &edges)
    }

    /// U_{r,n}.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        let ground: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let bases = (0..1u64 << n).filter(|&b| popcount(b) == r).collect();
        Self::from_bases(ground, bases)
    }

    pub fn free(n: usize) -> Result<Self> {
        Self::uniform(n, n)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank_of(&self, x: u64) -> usize {
        match &self.source {
            Source::Bases(bs) => bs.iter().map(|&b| popcount(b & x)).max().unwrap_or(0),
            Source::Circuits(cs) => {
                let mut indep = 0u64;
                for e in 0..self.ground.len() {
                    if x >> e & 1 == 1 {
                        let cand = indep | 1 << e;
                        if !cs.iter().any(|&c| c & cand == c) {
                            indep = cand;
                        }
                    }
                }
                popcount(indep)
            }
            Source::Graphic { vertices, edges } => {
                let mut parent: Vec<usize> = (0..*vertices).collect();
                fn find(p: &mut [usize], mut a: usize) -> usize {
                    while p[a] != a {
                        p[a] = p[p[a]];
                        a = p[a];
                    }
                    a
                }
                let mut r = 0;
                for (e, &(u, v)) in edges.iter().enumerate() {
                    if x >> e & 1 == 1 {
                        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                        if a != b {
                            parent[a] = b;
                            r += 1;
                        }
                    }
                }
                r
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank_of(full_mask(self.ground.len()))
    }

    pub fn closure(&self, x: u64) -> u64 {
        let r = self.rank_of(x);
        let mut out = x;
        for e in 0..self.ground.len() {
            if x >> e & 1 == 0 && self.rank_of(x | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    pub fn is_independent(&self, x: u64) -> bool {
        self.rank_of(x) == popcount(x)
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Result<Vec<u64>> {
        if let Source::Circuits(cs) = &self.source {
            return Ok(cs.clone());
        }
        let n = self.ground.len();
        if n > 24 {
            return Err(Error::Guard {
                what: "ground set size for circuit enumeration",
                value: n as u128,
                cap: 24,
            });
        }
        let mut out: Vec<u64> = Vec::new();
        let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); n + 1];
        for x in 0..1u64 << n {
            by_size[popcount(x)].push(x);
        }
        for level in by_size {
            for x in level {
                if !self.is_independent(x) && !out.iter().any(|&c| c & x == c) {
                    out.push(x);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        match j {
            MatroidJson::Graphic { vertices, edges } => {
                let mut es = Vec::new();
                for e in edges {
                    if e[0] == 0 || e[1] == 0 {
                        return Err(Error::InvalidInput("graph vertices are numbered from 1".into()));
                    }
                    es.push((e[0] - 1, e[1] - 1));
                }
                Self::graphic(*vertices, &es)
            }
            MatroidJson::Sets { ground, bases, circuits } => {
                let idx: HashMap<&str, usize> =
                    ground.iter().enumerate().map(|(i, g)| (g.as_str(), i)).collect();
                let to_mask = |set: &Vec<Item>| -> Result<u64> {
                    let mut m = 0u64;
                    for it in set {
                        let i = match it {
                            Item::Index(i) => *i,
                            Item::Label(s) => *idx
                                .get(s.as_str())
                                .ok_or_else(|| Error::InvalidInput(format!("unknown ground label {s}")))?,
                        };
                        if i >= ground.len() {
                            return Err(Error::InvalidInput(format!("ground index {i} out of range")));
                        }
                        m |= 1 << i;
                    }
                    Ok(m)
                };
                match (bases, circuits) {
                    (Some(b), None) => Self::from_bases(ground.clone(), b.iter().map(to_mask).collect::<Result<_>>()?),
                    (None, Some(c)) => {
                        Self::from_circuits(ground.clone(), c.iter().map(to_mask).collect::<Result<_>>()?)
                    }
                    _ => Err(Error::InvalidInput("give exactly one of bases or circuits".into())),
                }
            }
        }
    }
}

fn check_ground(ground: &[String]) -> Result<()> {
    if ground.len() > 64 {
        return Err(Error::InvalidInput("at most 64 ground elements".into()));
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A ground element named by label or by 0-based index.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Item {
    Index(usize),
    Label(String),
}

/// Matroid file formats.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MatroidJson {
    Graphic {
        vertices: usize,
        edges: Vec<[usize; 2]>,
    },
    Sets {
        ground: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bases: Option<Vec<Vec<Item>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        circuits: Option<Vec<Vec<Item>>>,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_rank() {
        let m = Matroid::uniform(2, 4).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of(0b1), 1);
        assert_eq!(m.circuits().unwrap().len(), 4);
    }

    #[test]
    fn bad_bases_rejected() {
        let g: Vec<String> = (1..=4).map(|i| i.to_string()).collect();
        let e = Matroid::from_bases(g, vec![0b0011, 0b1100]).unwrap_err();
        assert!(matches!(e, Error::MatroidAxiom { axiom: "basis exchange", .. }));
    }

    #[test]
    fn circuits_agree_with_graph() {
        let k4 = Matroid::complete_graph(4).unwrap();
        let cs = k4.circuits().unwrap();
        assert_eq!(cs.iter().filter(|c| c.count_ones() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.count_ones() == 4).count(), 3);
        let m2 = Matroid::from_circuits(k4.ground().to_vec(), cs).unwrap();
        for x in 0..1u64 << 6 {
            assert_eq!(k4.rank_of(x), m2.rank_of(x));
        }
    }

    #[test]
    fn json_forms() {
        let j: MatroidJson = serde_json::from_str(r#"{"vertices":3,"edges":[[1,2],[2,3],[1,3]]}"#).unwrap();
        assert_eq!(Matroid::from_json(&j).unwrap().rank(), 2);
        let j: MatroidJson =
            serde_json::from_str(r#"{"ground":["a","b","c"],"circuits":[["a","b","c"]]}"#).unwrap();
        assert_eq!(Matroid::from_json(&j).unwrap().rank(), 2);
    }
}
