//! Counts of the small patterns that appear in the moment closed forms.
//!
//! A pattern occurrence is a set of edges whose union, taken as a
//! hypergraph on the vertices it covers, is isomorphic to the pattern.
//! The subset scan is the reference; the degree formulas are fast paths for
//! linear inputs.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_key;
use crate::error::{Error, Result};
use crate::family::{hyperpath, hyperstar};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Pattern {
    P1,
    P2,
    P3,
    S3,
}

impl Pattern {
    pub const ALL: [Pattern; 4] = [Pattern::P1, Pattern::P2, Pattern::P3, Pattern::S3];

    pub fn edge_count(self) -> usize {
        match self {
            Pattern::P1 => 1,
            Pattern::P2 => 2,
            Pattern::P3 | Pattern::S3 => 3,
        }
    }

    pub fn hypergraph(self, m: usize) -> Result<Hypergraph> {
        match self {
            Pattern::S3 => hyperstar(m, 3),
            p => hyperpath(m, p.edge_count()),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Number of edge subsets of `h` spanning a copy of `p`.
pub fn count_pattern(h: &Hypergraph, p: Pattern) -> Result<u64> {
    let m = h.m();
    let k = p.edge_count();
    let target = p.hypergraph(m)?;
    let target_key = canonical_key(&target);
    let mut count = 0;
    for subset in (0..h.q()).combinations(k) {
        let mut verts: Vec<usize> = subset
            .iter()
            .flat_map(|&i| h.edge(i).iter().copied())
            .collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != target.n() {
            continue;
        }
        let (sub, _) = h.sub_hypergraph(&subset)?;
        if canonical_key(&sub) == target_key {
            count += 1;
        }
    }
    Ok(count)
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// `Σ_v C(d_v, 2)`: two edges meeting at a vertex.
pub fn count_p2_by_degrees(h: &Hypergraph) -> Result<u64> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    Ok(h.degrees().iter().map(|&d| binomial(d, 2)).sum())
}

/// `Σ_v C(d_v, 3)`: three edges through a common vertex.
pub fn count_s3_by_degrees(h: &Hypergraph) -> Result<u64> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    Ok(h.degrees().iter().map(|&d| binomial(d, 3)).sum())
}

/// Loose 3-edge paths of a linear hypergraph, counted from their middle edge:
/// two distinct vertices `x, y` of the middle edge, an edge through each,
/// and the two outer edges disjoint.
pub fn count_p3_linear(h: &Hypergraph) -> Result<u64> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let inc = h.incidence();
    let disjoint =
        |a: usize, b: usize| !h.edge(a).iter().any(|v| h.edge(b).binary_search(v).is_ok());
    let mut count = 0;
    for (mid, e) in h.edges().iter().enumerate() {
        for (x, y) in e.iter().tuple_combinations() {
            for &a in inc[*x].iter().filter(|&&a| a != mid) {
                for &b in inc[*y].iter().filter(|&&b| b != mid) {
                    if disjoint(a, b) {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// The four pattern counts used by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub s3: u64,
}

impl Census {
    /// Fast counts for linear inputs, brute force otherwise.
    pub fn of(h: &Hypergraph) -> Result<Census> {
        if h.is_linear() {
            Ok(Census {
                p1: h.q() as u64,
                p2: count_p2_by_degrees(h)?,
                p3: count_p3_linear(h)?,
                s3: count_s3_by_degrees(h)?,
            })
        } else {
            Self::brute_force(h)
        }
    }

    pub fn brute_force(h: &Hypergraph) -> Result<Census> {
        Ok(Census {
            p1: count_pattern(h, Pattern::P1)?,
            p2: count_pattern(h, Pattern::P2)?,
            p3: count_pattern(h, Pattern::P3)?,
            s3: count_pattern(h, Pattern::S3)?,
        })
    }

    pub fn get(&self, p: Pattern) -> u64 {
        match p {
            Pattern::P1 => self.p1,
            Pattern::P2 => self.p2,
            Pattern::P3 => self.p3,
            Pattern::S3 => self.s3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hypercycle, pendant_cycle};

    #[test]
    fn cycle_counts() {
        let c3 = hypercycle(3, 3).unwrap();
        assert_eq!(count_pattern(&c3, Pattern::P3).unwrap(), 0);
        assert_eq!(count_pattern(&c3, Pattern::P2).unwrap(), 3);
        let c4 = hypercycle(3, 4).unwrap();
        assert_eq!(count_pattern(&c4, Pattern::P3).unwrap(), 4);
        assert_eq!(count_p3_linear(&c4).unwrap(), 4);
    }

    #[test]
    fn star_counts() {
        for q in 1..=6 {
            let s = hyperstar(3, q).unwrap();
            assert_eq!(count_pattern(&s, Pattern::S3).unwrap(), binomial(q, 3));
            assert_eq!(count_s3_by_degrees(&s).unwrap(), binomial(q, 3));
        }
    }

    #[test]
    fn degree_fast_paths() {
        let tri = Hypergraph::new(2, [[0, 1], [1, 2], [0, 2]]).unwrap();
        assert_eq!(count_p2_by_degrees(&tri).unwrap(), 3);
        for q in 1..=5 {
            assert_eq!(
                count_p2_by_degrees(&hyperpath(3, q).unwrap()).unwrap(),
                q as u64 - 1
            );
        }
        assert_eq!(
            count_p2_by_degrees(&pendant_cycle(3, 3, 2).unwrap()).unwrap(),
            8
        );
        assert_eq!(
            count_s3_by_degrees(&pendant_cycle(3, 3, 1).unwrap()).unwrap(),
            1
        );
        assert_eq!(count_s3_by_degrees(&hyperpath(3, 5).unwrap()).unwrap(), 0);
    }

    #[test]
    fn path_p3_count() {
        for m in 2..=4 {
            for q in 3..=7 {
                let p = hyperpath(m, q).unwrap();
                assert_eq!(count_pattern(&p, Pattern::P3).unwrap(), q as u64 - 2);
                assert_eq!(count_p3_linear(&p).unwrap(), q as u64 - 2);
            }
        }
    }

    #[test]
    fn non_linear_rejected_by_fast_paths() {
        let h = Hypergraph::new(3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(count_p2_by_degrees(&h), Err(Error::NotLinear));
        assert_eq!(count_s3_by_degrees(&h), Err(Error::NotLinear));
        assert_eq!(count_pattern(&h, Pattern::P2).unwrap(), 0);
        assert_eq!(Census::of(&h).unwrap().p1, 2);
    }
}
