//! Small exact integer linear algebra: column Hermite reduction for integer
//! kernels, preimages, and the monoid generators of pairing cones
//! `{x : A x >= 0}` in the simplicial, surjective case.

use crate::{Error, Result};

/// Column echelon reduction of `a` (m x n) by unimodular column operations.
/// Returns the reduced matrix and the transformation `u` with
/// `reduced = a * u`, plus the pivot (row, col) list.
fn column_reduce(a: &[Vec<i64>]) -> (Vec<Vec<i128>>, Vec<Vec<i128>>, Vec<(usize, usize)>) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut h: Vec<Vec<i128>> = a
        .iter()
        .map(|row| row.iter().map(|&c| c as i128).collect())
        .collect();
    let mut u: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut col = 0usize;
    for row in 0..m {
        if col >= n {
            break;
        }
        // gcd-reduce the entries h[row][col..] by column operations
        loop {
            let mut nonzero: Vec<usize> = (col..n).filter(|&c| h[row][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&c| h[row][c].unsigned_abs());
            let c_small = nonzero[0];
            for &c in &nonzero[1..] {
                let q = h[row][c] / h[row][c_small];
                for r in 0..m {
                    let t = q * h[r][c_small];
                    h[r][c] -= t;
                }
                for r in 0..n {
                    let t = q * u[r][c_small];
                    u[r][c] -= t;
                }
            }
        }
        if let Some(c) = (col..n).find(|&c| h[row][c] != 0) {
            h.iter_mut().for_each(|r| r.swap(col, c));
            u.iter_mut().for_each(|r| r.swap(col, c));
            if h[row][col] < 0 {
                for r in 0..m {
                    h[r][col] = -h[r][col];
                }
                for r in 0..n {
                    u[r][col] = -u[r][col];
                }
            }
            pivots.push((row, col));
            col += 1;
        }
    }
    (h, u, pivots)
}

/// Lattice basis of the integer kernel `{x in Z^n : a x = 0}`.
pub fn integer_kernel_basis(a: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    if a.is_empty() {
        return (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    let (_, u, pivots) = column_reduce(a);
    let rank = pivots.len();
    (rank..n)
        .map(|c| (0..n).map(|r| u[r][c] as i64).collect())
        .collect()
}

/// Solves `a x = y` over the integers, if possible.
pub fn integer_preimage(a: &[Vec<i64>], y: &[i64]) -> Option<Vec<i64>> {
    let m = a.len();
    let n = a[0].len();
    let (h, u, pivots) = column_reduce(a);
    let mut residual: Vec<i128> = y.iter().map(|&c| c as i128).collect();
    let mut t = vec![0i128; n];
    for &(row, col) in &pivots {
        let p = h[row][col];
        if residual[row] % p != 0 {
            return None;
        }
        let coeff = residual[row] / p;
        t[col] = coeff;
        for r in 0..m {
            residual[r] -= coeff * h[r][col];
        }
    }
    if residual.iter().any(|&c| c != 0) {
        return None;
    }
    Some(
        (0..n)
            .map(|r| (0..n).map(|c| u[r][c] * t[c]).sum::<i128>() as i64)
            .collect(),
    )
}

/// Monoid generators of `{x in Z^n : a x >= 0}` in the simplicial case:
/// the rows of `a` must be linearly independent and the map `x -> a x`
/// surjective onto `Z^m`. The generators are a lattice basis of the kernel
/// (both signs) together with integral preimages of the unit vectors.
pub fn pairing_cone_monoid_generators(a: &[Vec<i64>], n: usize) -> Result<Vec<Vec<i64>>> {
    let m = a.len();
    if m == 0 {
        let mut gens = Vec::new();
        for b in integer_kernel_basis(a, n) {
            gens.push(b.iter().map(|&c| -c).collect());
            gens.push(b);
        }
        return Ok(gens);
    }
    let (_, _, pivots) = column_reduce(a);
    if pivots.len() < m {
        return Err(Error::NotSimplicial);
    }
    let mut gens: Vec<Vec<i64>> = Vec::new();
    for b in integer_kernel_basis(a, n) {
        gens.push(b.iter().map(|&c| -c).collect());
        gens.push(b);
    }
    for k in 0..m {
        let mut e = vec![0i64; m];
        e[k] = 1;
        let x = integer_preimage(a, &e).ok_or(Error::NotSimplicial)?;
        gens.push(x);
    }
    Ok(gens)
}
