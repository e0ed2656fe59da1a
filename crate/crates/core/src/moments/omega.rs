//! The cyclic factor weighting cycle-containing terms of the
//! weighted-subgraph expansion.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub(crate) fn factorial(k: usize) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Evaluates the cycle factor for cycle-edge weights `w_1..w_n` taken in
/// traversal order. Indices are cyclic, so `w_0` is `w_n`. A shift `x` that
/// drives any factorial argument negative contributes nothing.
pub fn omega_cycle(weights: &[usize]) -> Result<BigRational> {
    let n = weights.len();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "a cycle needs at least 3 weights, got {n}"
        )));
    }
    if weights.contains(&0) {
        return Err(Error::Precondition("cycle weights must be positive".into()));
    }
    let w: Vec<i64> = weights.iter().map(|&x| x as i64).collect();
    let wmin = *w.iter().min().expect("nonempty");
    let prev = |i: usize| w[(i + n - 1) % n];

    let mut total = BigRational::zero();
    for x in 0..=2 * wmin {
        // `down[i]` and `up[i]` are w_{i-1}+wmin-x and w_i-wmin+x, 0-based.
        let down: Vec<i64> = (0..n).map(|i| prev(i) + wmin - x).collect();
        let up: Vec<i64> = (0..n).map(|i| w[i] - wmin + x).collect();
        if down.iter().chain(&up).any(|&a| a < 0) {
            continue;
        }
        let mut coeff = BigRational::one();
        for i in 0..n {
            let wf = factorial(weights[i]);
            coeff *= BigRational::new(
                &wf * &wf,
                factorial(down[i] as usize) * factorial(up[i] as usize),
            );
        }
        // Σ_l ∏_{i=1}^{l} (w_i+wmin-x) ∏_{i=l+2}^{n} (w_i-wmin+x), 1-based.
        let mut inner = BigInt::zero();
        for l in 0..n {
            let left: BigInt = (1..=l).map(|i| BigInt::from(w[i - 1] + wmin - x)).product();
            let right: BigInt = (l + 2..=n)
                .map(|i| BigInt::from(w[i - 1] - wmin + x))
                .product();
            inner += left * right;
        }
        total += coeff * BigRational::from_integer(inner);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn unit_triangle() {
        assert_eq!(omega_cycle(&[1, 1, 1]).unwrap(), int(4));
    }

    #[test]
    fn hand_evaluated_values() {
        // Evaluated term by term outside this crate.
        assert_eq!(omega_cycle(&[2, 1, 1]).unwrap(), int(7));
        assert_eq!(omega_cycle(&[2, 2, 1]).unwrap(), int(12));
        assert_eq!(omega_cycle(&[3, 1, 1]).unwrap(), int(10));
        assert_eq!(omega_cycle(&[2, 1, 1, 1]).unwrap(), int(9));
        assert_eq!(omega_cycle(&[2, 1, 3]).unwrap(), int(17));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(omega_cycle(&[]).is_err());
        assert!(omega_cycle(&[1, 1]).is_err());
        assert!(omega_cycle(&[1, 0, 1]).is_err());
    }
}
