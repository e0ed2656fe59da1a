//! The weighted-subgraph expansion of `S_d` for hypertrees and linear
//! unicyclic hypergraphs with `m >= 3`.
//!
//! `S_d` is `d (m-1)^|V|` times a sum over connected sub-hypergraphs with at
//! most `d/m` edges and over positive edge weights summing to `d/m`. Every
//! term is an exact rational; the total must come out integral.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::omega::{factorial, omega_cycle};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, StructureClass};

pub const DEFAULT_CAP_MULTIPLE: usize = 4;

/// Connected edge subsets with at most `k` edges, grown one adjacent edge at
/// a time from every single edge.
pub(crate) fn connected_edge_subsets(h: &Hypergraph, k: usize) -> Vec<Vec<usize>> {
    let inc = h.incidence();
    let mut all = Vec::new();
    let mut level: BTreeSet<Vec<usize>> = (0..h.q()).map(|i| vec![i]).collect();
    for _ in 0..k {
        if level.is_empty() {
            break;
        }
        let mut next = BTreeSet::new();
        for subset in &level {
            for &i in subset {
                for &v in h.edge(i) {
                    for &j in &inc[v] {
                        if let Err(pos) = subset.binary_search(&j) {
                            let mut grown = subset.clone();
                            grown.insert(pos, j);
                            next.insert(grown);
                        }
                    }
                }
            }
        }
        all.extend(std::mem::replace(&mut level, next));
    }
    all
}

/// Ordered ways to write `total` as `parts` positive integers.
pub(crate) fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts >= 1 && total >= parts {
        go(total, parts, &mut Vec::new(), &mut out);
    }
    out
}

fn pow_rational(base: usize, exp: i64) -> BigRational {
    let p = BigInt::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

/// `∏_v (d_v(ω)-1)! ∏_e ω(e)^(m-1) / (ω(e)!)^m` over the chosen edges.
fn weight_product(h: &Hypergraph, subset: &[usize], weights: &[usize]) -> BigRational {
    let m = h.m();
    let mut vertex_weight = vec![0usize; h.n()];
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (&e, &w) in subset.iter().zip(weights) {
        for &v in h.edge(e) {
            vertex_weight[v] += w;
        }
        num *= BigInt::from(w).pow((m - 1) as u32);
        den *= factorial(w).pow(m as u32);
    }
    for &dv in vertex_weight.iter().filter(|&&dv| dv > 0) {
        num *= factorial(dv - 1);
    }
    BigRational::new(num, den)
}

/// `S_d` by the weighted-subgraph expansion, for `d <= cap_multiple * m`.
pub fn general_moment_capped(u: &Hypergraph, d: usize, cap_multiple: usize) -> Result<BigInt> {
    let m = u.m();
    if m < 3 {
        return Err(Error::OutOfScope(
            "the weighted-subgraph expansion is only valid for m >= 3".into(),
        ));
    }
    let cycle = match u.structure_class() {
        StructureClass::Hypertree => None,
        StructureClass::LinearUnicyclic { .. } => u.cycle_edges(),
        other => {
            return Err(Error::WrongClass {
                expected: "hypertree or linear unicyclic",
                found: other.to_string(),
            })
        }
    };
    if d == 0 {
        return Err(Error::Precondition("order must be positive".into()));
    }
    if d > cap_multiple * m {
        return Err(Error::OutOfScope(format!(
            "order {d} exceeds the configured cap {}",
            cap_multiple * m
        )));
    }
    if !d.is_multiple_of(m) {
        return Ok(BigInt::zero());
    }
    let k = d / m;
    let mut sum = BigRational::zero();
    for subset in connected_edge_subsets(u, k) {
        let vertices = subset
            .iter()
            .flat_map(|&e| u.edge(e).iter().copied())
            .collect::<BTreeSet<_>>()
            .len();
        let e = subset.len() as i64;
        let is_tree = vertices == subset.len() * (m - 1) + 1;
        let prefactor = if is_tree {
            pow_rational(m - 1, -(vertices as i64)) * pow_rational(m, (m as i64 - 2) * e)
        } else {
            BigRational::from_integer(BigInt::from(2))
                * pow_rational(m - 1, -(vertices as i64))
                * pow_rational(m, (m as i64 - 2) * e - 1)
        };
        let cycle_positions: Vec<usize> = match (&cycle, is_tree) {
            (Some(c), false) => c
                .iter()
                .map(|ce| {
                    subset.iter().position(|s| s == ce).ok_or_else(|| {
                        Error::Inconsistent("cycle-containing subset misses a cycle edge".into())
                    })
                })
                .collect::<Result<_>>()?,
            (None, false) => {
                return Err(Error::Inconsistent(
                    "a hypertree has a cyclic edge subset".into(),
                ))
            }
            _ => Vec::new(),
        };
        let mut inner = BigRational::zero();
        for weights in compositions(k, subset.len()) {
            let mut t = weight_product(u, &subset, &weights);
            if !is_tree {
                let w0: Vec<usize> = cycle_positions.iter().map(|&p| weights[p]).collect();
                t *= omega_cycle(&w0)?;
            }
            inner += t;
        }
        sum += prefactor * inner;
    }
    let total =
        sum * BigRational::from_integer(BigInt::from(d) * BigInt::from(m - 1).pow(u.n() as u32));
    if !total.is_integer() {
        return Err(Error::Inconsistent(format!(
            "weighted-subgraph expansion gave a non-integer S_{d} = {total}"
        )));
    }
    Ok(total.to_integer())
}

pub fn general_moment(u: &Hypergraph, d: usize) -> Result<BigInt> {
    general_moment_capped(u, d, DEFAULT_CAP_MULTIPLE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hypercycle, hyperpath, hyperstar};

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        assert_eq!(compositions(4, 2).len(), 3);
        assert_eq!(compositions(5, 3).len(), 6);
        assert!(compositions(2, 3).is_empty());
    }

    #[test]
    fn connected_subsets_of_a_path() {
        let p = hyperpath(3, 4).unwrap();
        // 4 singles, 3 pairs, 2 triples
        assert_eq!(connected_edge_subsets(&p, 3).len(), 9);
        let c = hypercycle(3, 3).unwrap();
        assert_eq!(connected_edge_subsets(&c, 3).len(), 7);
    }

    #[test]
    fn triangle_anchors() {
        let c = hypercycle(3, 3).unwrap();
        assert_eq!(general_moment(&c, 3).unwrap(), BigInt::from(216));
        assert_eq!(general_moment(&c, 6).unwrap(), BigInt::from(540));
        assert_eq!(general_moment(&c, 9).unwrap(), BigInt::from(1836));
        assert_eq!(general_moment(&c, 4).unwrap(), BigInt::from(0));
    }

    #[test]
    fn short_path() {
        assert_eq!(
            general_moment(&hyperpath(3, 2).unwrap(), 3).unwrap(),
            BigInt::from(72)
        );
    }

    #[test]
    fn scope() {
        assert!(matches!(
            general_moment(&hypercycle(2, 3).unwrap(), 6),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(
            general_moment(&hyperstar(3, 2).unwrap(), 15),
            Err(Error::OutOfScope(_))
        ));
        assert!(general_moment_capped(&hyperstar(3, 2).unwrap(), 15, 5).is_ok());
        let non_linear = Hypergraph::new(3, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(matches!(
            general_moment(&non_linear, 3),
            Err(Error::WrongClass { .. })
        ));
    }
}
