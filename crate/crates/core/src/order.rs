//! Lexicographic comparison of moment sequences.
//!
//! Sequences are compared on `S_0 .. S_dmax` only. When every computed
//! value agrees the outcome is [`Relation::EqualUpTo`], which says nothing
//! about higher orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::moments::{moment_sequence, MomentSequence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Before,
    After,
    EqualUpTo,
}

impl Relation {
    pub fn reversed(self) -> Relation {
        match self {
            Relation::Before => Relation::After,
            Relation::After => Relation::Before,
            Relation::EqualUpTo => Relation::EqualUpTo,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderOutcome {
    pub relation: Relation,
    /// First order at which the sequences differ.
    pub deciding_index: Option<usize>,
    pub d_max: usize,
    /// The inputs have different vertex counts, so `S_0` decides.
    pub cross_size: bool,
}

/// Compares two already computed sequences.
pub fn compare_sequences(
    a: &MomentSequence,
    b: &MomentSequence,
) -> Result<(Relation, Option<usize>)> {
    if a.m != b.m {
        return Err(Error::MixedUniformity(a.m, b.m));
    }
    for ((d, x), (_, y)) in a.entries.iter().zip(&b.entries) {
        match x.cmp(y) {
            Ordering::Less => return Ok((Relation::Before, Some(*d))),
            Ordering::Greater => return Ok((Relation::After, Some(*d))),
            Ordering::Equal => {}
        }
    }
    Ok((Relation::EqualUpTo, None))
}

pub fn s_compare(h1: &Hypergraph, h2: &Hypergraph, d_max: usize) -> Result<OrderOutcome> {
    Ok(s_compare_full(h1, h2, d_max)?.0)
}

/// Like [`s_compare`], also returning both sequences.
pub fn s_compare_full(
    h1: &Hypergraph,
    h2: &Hypergraph,
    d_max: usize,
) -> Result<(OrderOutcome, MomentSequence, MomentSequence)> {
    if h1.m() != h2.m() {
        return Err(Error::MixedUniformity(h1.m(), h2.m()));
    }
    let a = moment_sequence(h1, d_max)?;
    let b = moment_sequence(h2, d_max)?;
    let (relation, deciding_index) = compare_sequences(&a, &b)?;
    let outcome = OrderOutcome {
        relation,
        deciding_index,
        d_max,
        cross_size: h1.n() != h2.n(),
    };
    Ok((outcome, a, b))
}

#[derive(Debug, Clone)]
pub struct Member {
    pub hypergraph: Hypergraph,
    pub key: CanonicalKey,
    pub moments: MomentSequence,
}

/// Members with equal sequences through `d_max`, in canonical-key order.
#[derive(Debug, Clone)]
pub struct Block {
    pub members: Vec<Member>,
}

impl Block {
    pub fn contains(&self, key: &CanonicalKey) -> bool {
        self.members.iter().any(|m| &m.key == key)
    }
}

/// Sorts a family into blocks of equal sequences, smallest first.
pub fn sort_family(hs: &[Hypergraph], d_max: usize) -> Result<Vec<Block>> {
    if let Some(first) = hs.first() {
        if let Some(other) = hs.iter().find(|h| h.m() != first.m()) {
            return Err(Error::MixedUniformity(first.m(), other.m()));
        }
    }
    let mut members: Vec<Member> = hs
        .iter()
        .map(|h| {
            Ok(Member {
                hypergraph: h.clone(),
                key: canonical_key(h),
                moments: moment_sequence(h, d_max)?,
            })
        })
        .collect::<Result<_>>()?;
    let values = |m: &Member| m.moments.values().cloned().collect::<Vec<_>>();
    members.sort_by(|a, b| values(a).cmp(&values(b)).then_with(|| a.key.cmp(&b.key)));
    let mut blocks: Vec<Block> = Vec::new();
    for member in members {
        match blocks.last_mut() {
            Some(block) if block.members[0].moments.entries == member.moments.entries => {
                block.members.push(member)
            }
            _ => blocks.push(Block {
                members: vec![member],
            }),
        }
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hypercycle, hyperpath, hyperstar};

    #[test]
    fn path_before_star_for_graphs() {
        let o = s_compare(&hyperpath(2, 3).unwrap(), &hyperstar(2, 3).unwrap(), 6).unwrap();
        assert_eq!(o.relation, Relation::Before);
        assert_eq!(o.deciding_index, Some(4));
        assert!(!o.cross_size);
    }

    #[test]
    fn path_before_star_for_hypergraphs() {
        let o = s_compare(&hyperpath(3, 4).unwrap(), &hyperstar(3, 4).unwrap(), 9).unwrap();
        assert_eq!((o.relation, o.deciding_index), (Relation::Before, Some(6)));
        let r = s_compare(&hyperstar(3, 4).unwrap(), &hyperpath(3, 4).unwrap(), 9).unwrap();
        assert_eq!(r.relation, Relation::After);
    }

    #[test]
    fn self_comparison_ties() {
        let c = hypercycle(3, 4).unwrap();
        let o = s_compare(&c, &c, 9).unwrap();
        assert_eq!((o.relation, o.deciding_index), (Relation::EqualUpTo, None));
    }

    #[test]
    fn cross_size_and_mixed_m() {
        let o = s_compare(&hyperpath(3, 2).unwrap(), &hyperpath(3, 3).unwrap(), 9).unwrap();
        assert_eq!(
            (o.relation, o.deciding_index, o.cross_size),
            (Relation::Before, Some(0), true)
        );
        assert_eq!(
            s_compare(&hyperpath(3, 2).unwrap(), &hyperpath(2, 2).unwrap(), 6),
            Err(Error::MixedUniformity(3, 2))
        );
    }

    #[test]
    fn sorting_small_family() {
        let blocks = sort_family(&[hyperstar(3, 3).unwrap(), hyperpath(3, 3).unwrap()], 9).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].members[0].hypergraph, hyperpath(3, 3).unwrap());
        let single = sort_family(&[hyperpath(3, 1).unwrap()], 9).unwrap();
        assert_eq!(single.len(), 1);
        let twice = sort_family(&[hyperpath(3, 2).unwrap(), hyperpath(3, 2).unwrap()], 9).unwrap();
        assert_eq!(twice.len(), 1);
        assert_eq!(twice[0].members.len(), 2);
    }
}
