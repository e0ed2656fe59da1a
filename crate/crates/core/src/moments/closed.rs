//! Closed forms for `S_m`, `S_2m` and `S_3m` in terms of pattern counts.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::census::Census;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, StructureClass};

/// `coeff * m^a * (m-1)^b * count`, where `b` may only be negative when the
/// count vanishes or `m = 2`.
fn term(coeff: u64, m: usize, a: i64, b: i64, count: u64) -> Result<BigInt> {
    if count == 0 {
        return Ok(BigInt::zero());
    }
    if a < 0 || (b < 0 && m > 2) {
        return Err(Error::Inconsistent(format!(
            "negative exponent with a nonzero count (m^{a} (m-1)^{b})"
        )));
    }
    let m1 = if m == 2 { 0 } else { b.max(0) as u32 };
    Ok(BigInt::from(coeff)
        * BigInt::from(m).pow(a as u32)
        * BigInt::from(m - 1).pow(m1)
        * BigInt::from(count))
}

pub fn s0(h: &Hypergraph) -> BigInt {
    BigInt::from(h.n()) * BigInt::from(h.m() - 1).pow((h.n() - 1) as u32)
}

/// `S_d` for `1 <= d < m`, which vanishes for every uniform hypergraph.
pub fn s_low(h: &Hypergraph, d: usize) -> Result<BigInt> {
    if d == 0 || d >= h.m() {
        return Err(Error::Precondition(format!(
            "low orders are 1..{}, got {d}",
            h.m() - 1
        )));
    }
    Ok(BigInt::zero())
}

/// `S_m = q m^(m-1) (m-1)^(n-m)`.
pub fn s_m(h: &Hypergraph) -> BigInt {
    let m = h.m();
    BigInt::from(h.q())
        * BigInt::from(m).pow((m - 1) as u32)
        * BigInt::from(m - 1).pow((h.n() - m) as u32)
}

fn require_tree(h: &Hypergraph) -> Result<()> {
    match h.structure_class() {
        StructureClass::Hypertree => Ok(()),
        other => Err(Error::WrongClass {
            expected: "hypertree",
            found: other.to_string(),
        }),
    }
}

fn require_unicyclic(h: &Hypergraph) -> Result<usize> {
    match h.structure_class() {
        StructureClass::LinearUnicyclic { girth } => Ok(girth),
        other => Err(Error::WrongClass {
            expected: "linear unicyclic",
            found: other.to_string(),
        }),
    }
}

/// Hypertree moments at orders up to `3m`. Orders that are not multiples of
/// `m` give 0.
pub fn tree_moment(t: &Hypergraph, d: usize) -> Result<BigInt> {
    require_tree(t)?;
    let m = t.m();
    if d == 0 {
        return Ok(s0(t));
    }
    if d > 3 * m {
        return Err(Error::OutOfScope(format!(
            "tree closed forms stop at d = 3m = {}",
            3 * m
        )));
    }
    if !d.is_multiple_of(m) {
        return Ok(BigInt::zero());
    }
    let c = Census::of(t)?;
    let (mi, q) = (m as i64, t.q() as i64);
    let exp = |k: i64| (q - k) * (mi - 1);
    let mut s = term(1, m, mi - 1, exp(1), c.p1)?;
    match d / m {
        1 => {}
        2 => s += term(2, m, 2 * mi - 3, exp(2), c.p2)?,
        _ => {
            s += term(6, m, 2 * mi - 3, exp(2), c.p2)?;
            s += term(3, m, 3 * mi - 5, exp(3), c.p3)?;
            s += term(6, m, 3 * mi - 5, exp(3), c.s3)?;
        }
    }
    Ok(s)
}

/// `S_2m` of a linear unicyclic hypergraph. For `m = 2` the form counts
/// closed 4-walks correctly unless the cycle is a 4-cycle.
pub fn unicyclic_s2m(u: &Hypergraph) -> Result<BigInt> {
    let g = require_unicyclic(u)?;
    let m = u.m();
    if m == 2 && g == 4 {
        return Err(Error::OutOfScope(
            "the S_2m closed form misses the 4-cycle walks of a 2-uniform 4-cycle".into(),
        ));
    }
    let c = Census::of(u)?;
    let (mi, v) = (m as i64, u.n() as i64);
    Ok(term(1, m, mi - 1, v - mi, c.p1)? + term(2, m, 2 * mi - 3, v - 2 * mi + 1, c.p2)?)
}

/// `S_3m` of a linear unicyclic hypergraph, with the extra cycle term at
/// girth 3. For `m = 2` girths 4 and 6 are rejected.
pub fn unicyclic_s3m(u: &Hypergraph) -> Result<BigInt> {
    let g = require_unicyclic(u)?;
    let m = u.m();
    if m == 2 && (g == 4 || g == 6) {
        return Err(Error::OutOfScope(format!(
            "the S_3m closed form misses walks around a 2-uniform {g}-cycle"
        )));
    }
    let c = Census::of(u)?;
    let (mi, v) = (m as i64, u.n() as i64);
    let mut s = term(1, m, mi - 1, v - mi, c.p1)?
        + term(6, m, 2 * mi - 3, v + 1 - 2 * mi, c.p2)?
        + term(3, m, 3 * mi - 5, v + 2 - 3 * mi, c.p3)?
        + term(6, m, 3 * mi - 5, v + 2 - 3 * mi, c.s3)?;
    if g == 3 {
        s += term(24, m, 3 * mi - 6, v - 3 * mi + 3, 1)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{hypercycle, hyperpath, hyperstar, pendant_cycle};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn zeroth_and_low_orders() {
        assert_eq!(s0(&hyperpath(3, 2).unwrap()), big(80));
        assert_eq!(s0(&hyperpath(2, 6).unwrap()), big(7));
        assert_eq!(s0(&hyperpath(3, 1).unwrap()), big(12));
        let h = hypercycle(4, 3).unwrap();
        assert_eq!(s_low(&h, 3).unwrap(), big(0));
        assert!(s_low(&h, 4).is_err());
    }

    #[test]
    fn first_nonzero_order() {
        assert_eq!(s_m(&hypercycle(3, 3).unwrap()), big(216));
        assert_eq!(s_m(&hyperpath(3, 2).unwrap()), big(72));
        assert_eq!(s_m(&hyperpath(3, 3).unwrap()), big(432));
        assert_eq!(s_m(&hypercycle(2, 5).unwrap()), big(10));
        for q in 1..=5 {
            let p = hyperpath(3, q).unwrap();
            assert_eq!(tree_moment(&p, 3).unwrap(), s_m(&p));
        }
    }

    #[test]
    fn small_graph_values() {
        assert_eq!(tree_moment(&hyperpath(2, 2).unwrap(), 4).unwrap(), big(8));
        assert_eq!(tree_moment(&hyperstar(2, 3).unwrap(), 6).unwrap(), big(54));
        assert_eq!(tree_moment(&hyperstar(2, 3).unwrap(), 5).unwrap(), big(0));
        assert_eq!(unicyclic_s3m(&hypercycle(2, 3).unwrap()).unwrap(), big(66));
        assert_eq!(unicyclic_s2m(&hypercycle(2, 5).unwrap()).unwrap(), big(30));
        assert_eq!(unicyclic_s2m(&hypercycle(2, 3).unwrap()).unwrap(), big(18));
    }

    #[test]
    fn triangle_hypergraph() {
        let c = hypercycle(3, 3).unwrap();
        assert_eq!(unicyclic_s2m(&c).unwrap(), big(540));
        assert_eq!(unicyclic_s3m(&c).unwrap(), big(1836));
    }

    #[test]
    fn scope_errors() {
        let c4 = hypercycle(2, 4).unwrap();
        assert!(matches!(unicyclic_s2m(&c4), Err(Error::OutOfScope(_))));
        assert!(matches!(unicyclic_s3m(&c4), Err(Error::OutOfScope(_))));
        assert!(matches!(
            unicyclic_s3m(&hypercycle(2, 6).unwrap()),
            Err(Error::OutOfScope(_))
        ));
        assert!(matches!(tree_moment(&c4, 4), Err(Error::WrongClass { .. })));
        assert!(matches!(
            unicyclic_s2m(&hyperpath(3, 3).unwrap()),
            Err(Error::WrongClass { .. })
        ));
        assert!(unicyclic_s3m(&pendant_cycle(3, 4, 1).unwrap()).is_ok());
        assert!(matches!(
            tree_moment(&hyperpath(3, 2).unwrap(), 12),
            Err(Error::OutOfScope(_))
        ));
    }
}
