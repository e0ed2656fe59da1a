//! Spectral moments `S_d`, the traces of the adjacency tensor.
//!
//! Two engines are available for `m >= 3`: closed forms over pattern counts
//! (orders up to `3m`) and the weighted-subgraph expansion (any order up to
//! a configurable cap). For `m = 2` the trace of the adjacency-matrix power
//! is exact and serves as the reference. [`moment_sequence`] picks the
//! engines for a hypergraph's class and cross-checks them where both apply.

mod closed;
mod general;
mod omega;
mod oracle;

use num_bigint::BigInt;
use num_traits::Zero;

pub use closed::{s0, s_low, s_m, tree_moment, unicyclic_s2m, unicyclic_s3m};
pub use general::{general_moment, general_moment_capped, DEFAULT_CAP_MULTIPLE};
pub use omega::omega_cycle;
pub use oracle::{matrix_oracle, ORACLE_MAX_ORDER, ORACLE_MAX_VERTICES};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, StructureClass};

/// Exact rational used inside the weighted-subgraph expansion.
pub type ExactScalar = num_rational::BigRational;

/// `S_0 .. S_dmax` of one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentSequence {
    pub m: usize,
    pub entries: Vec<(usize, BigInt)>,
}

impl MomentSequence {
    pub fn get(&self, d: usize) -> Option<&BigInt> {
        self.entries.iter().find(|(i, _)| *i == d).map(|(_, v)| v)
    }

    pub fn d_max(&self) -> usize {
        self.entries.last().map_or(0, |(d, _)| *d)
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentConfig {
    /// The expansion engine runs up to order `general_cap_multiple * m`.
    pub general_cap_multiple: usize,
    /// Recompute closed-form values with the second engine and fail on
    /// disagreement.
    pub cross_check: bool,
}

impl Default for MomentConfig {
    fn default() -> Self {
        MomentConfig {
            general_cap_multiple: DEFAULT_CAP_MULTIPLE,
            cross_check: true,
        }
    }
}

/// Default number of orders computed: through `3m`.
pub fn default_d_max(m: usize) -> usize {
    3 * m
}

pub fn moment_sequence(h: &Hypergraph, d_max: usize) -> Result<MomentSequence> {
    moment_sequence_with(h, d_max, &MomentConfig::default())
}

pub fn moment_sequence_with(
    h: &Hypergraph,
    d_max: usize,
    config: &MomentConfig,
) -> Result<MomentSequence> {
    let entries = (0..=d_max)
        .map(|d| Ok((d, moment(h, d, config)?)))
        .collect::<Result<_>>()?;
    Ok(MomentSequence { m: h.m(), entries })
}

fn agree(d: usize, a: BigInt, b: &BigInt, what: &str) -> Result<BigInt> {
    if &a == b {
        Ok(a)
    } else {
        Err(Error::Inconsistent(format!(
            "S_{d}: {what} gives {a}, reference gives {b}"
        )))
    }
}

/// A single `S_d`, using whichever engines cover `h` and `d`.
pub fn moment(h: &Hypergraph, d: usize, config: &MomentConfig) -> Result<BigInt> {
    let m = h.m();
    if d == 0 {
        return Ok(s0(h));
    }
    if d < m {
        return s_low(h, d);
    }
    let class = h.structure_class();
    if m == 2 {
        let reference = matrix_oracle(h, d)?;
        if config.cross_check && d.is_multiple_of(2) {
            let closed = match (class, d) {
                (_, 2) => Some(s_m(h)),
                (StructureClass::Hypertree, 4 | 6) => Some(tree_moment(h, d)?),
                (StructureClass::LinearUnicyclic { girth }, 4) if girth != 4 => {
                    Some(unicyclic_s2m(h)?)
                }
                (StructureClass::LinearUnicyclic { girth }, 6) if girth != 4 && girth != 6 => {
                    Some(unicyclic_s3m(h)?)
                }
                _ => None,
            };
            if let Some(c) = closed {
                return agree(d, c, &reference, "closed form");
            }
        }
        return Ok(reference);
    }
    if d == m && class == StructureClass::Other {
        return Ok(s_m(h));
    }
    let closed = match class {
        StructureClass::Other => {
            return Err(Error::OutOfScope(format!(
                "S_{d} needs a hypertree or a linear unicyclic hypergraph"
            )))
        }
        _ if !d.is_multiple_of(m) => Some(BigInt::zero()),
        StructureClass::Hypertree if d <= 3 * m => Some(tree_moment(h, d)?),
        StructureClass::LinearUnicyclic { .. } if d == m => Some(s_m(h)),
        StructureClass::LinearUnicyclic { .. } if d == 2 * m => Some(unicyclic_s2m(h)?),
        StructureClass::LinearUnicyclic { .. } if d == 3 * m => Some(unicyclic_s3m(h)?),
        _ => None,
    };
    match closed {
        Some(c) if config.cross_check && d <= config.general_cap_multiple * m => {
            let g = general_moment_capped(h, d, config.general_cap_multiple)?;
            agree(d, g, &c, "weighted-subgraph expansion")
        }
        Some(c) => Ok(c),
        None => general_moment_capped(h, d, config.general_cap_multiple),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hypercycle, hyperpath};

    #[test]
    fn path_sequence() {
        let s = moment_sequence(&hyperpath(3, 3).unwrap(), 9).unwrap();
        assert_eq!(s.entries.len(), 10);
        assert_eq!(s.get(0), Some(&BigInt::from(7 * 64)));
        assert_eq!(s.get(3), Some(&BigInt::from(432)));
        for d in [1, 2, 4, 5, 7, 8] {
            assert!(s.get(d).unwrap().is_zero());
        }
    }

    #[test]
    fn triangle_sequence() {
        let s = moment_sequence(&hypercycle(3, 3).unwrap(), 12).unwrap();
        assert_eq!(s.get(3), Some(&BigInt::from(216)));
        assert_eq!(s.get(6), Some(&BigInt::from(540)));
        assert_eq!(s.get(9), Some(&BigInt::from(1836)));
        assert!(s.get(12).is_some());
        assert_eq!(s.d_max(), 12);
    }

    #[test]
    fn graph_sequences_use_the_oracle() {
        let s = moment_sequence(&hypercycle(2, 4).unwrap(), 8).unwrap();
        assert_eq!(s.get(4), Some(&BigInt::from(32)));
        let non_tree = crate::Hypergraph::new(2, [[0, 1], [1, 2], [0, 2], [2, 3], [1, 3]]).unwrap();
        assert!(moment_sequence(&non_tree, 6).is_ok());
    }

    #[test]
    fn other_class_out_of_scope() {
        let h = crate::Hypergraph::new(3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(moment_sequence(&h, 3).is_ok());
        assert!(matches!(moment_sequence(&h, 6), Err(Error::OutOfScope(_))));
    }
}
