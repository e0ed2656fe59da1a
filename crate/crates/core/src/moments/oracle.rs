//! Closed-walk counts of ordinary graphs: the trace of a power of the
//! adjacency matrix.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const ORACLE_MAX_VERTICES: usize = 64;
pub const ORACLE_MAX_ORDER: usize = 16;

/// `trace(A^d)` for a 2-uniform hypergraph, by repeated matrix products.
pub fn matrix_oracle(g: &Hypergraph, d: usize) -> Result<BigInt> {
    if g.m() != 2 {
        return Err(Error::WrongClass {
            expected: "a 2-uniform graph",
            found: format!("m = {}", g.m()),
        });
    }
    let n = g.n();
    if n > ORACLE_MAX_VERTICES || d > ORACLE_MAX_ORDER {
        return Err(Error::OutOfScope(format!(
            "matrix oracle handles n <= {ORACLE_MAX_VERTICES} and d <= {ORACLE_MAX_ORDER}"
        )));
    }
    if d == 0 {
        return Ok(BigInt::from(n));
    }
    let mut adj = vec![vec![0u128; n]; n];
    for e in g.edges() {
        adj[e[0]][e[1]] = 1;
        adj[e[1]][e[0]] = 1;
    }
    // Walk counts stay below n * (n-1)^16 < 2^128 within the caps.
    let mut power = adj.clone();
    for _ in 1..d {
        let mut next = vec![vec![0u128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if power[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += power[i][k] * adj[k][j];
                }
            }
        }
        power = next;
    }
    Ok((0..n).map(|i| BigInt::from(power[i][i])).sum())
}
