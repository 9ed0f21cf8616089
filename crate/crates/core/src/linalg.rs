//! Exact linear algebra over `Q` by fraction-free (Bareiss) elimination.
//!
//! Rows are first scaled to integer entries; elimination then stays in
//! `Z`, with every division exact. Pivots are chosen as the first nonzero
//! entry scanning columns left to right and rows top to bottom, so results
//! are reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{dimension, Result};
use crate::poly::Rational;

/// Integer row echelon form together with its pivot columns.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
    /// Product of the row swaps' signs.
    sign: i8,
    last_pivot: BigInt,
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// Runs Bareiss elimination on the first `pivot_cols` columns.
fn echelon(mut rows: Vec<Vec<BigInt>>, pivot_cols: usize) -> Echelon {
    let n_rows = rows.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut sign = 1i8;
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            sign = -sign;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = &pivot_row[c];
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in c..row.len() {
                // (pivot * a_ij - a_ic * a_rj) / prev is exact
                let v = pivot * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        // entries left of the pivot in the pivot row are already zero; earlier
        // rows are not touched, which is all back substitution needs
        prev = pivot.clone();
        pivots.push((r, c));
        r += 1;
    }
    Echelon { rows, pivots, sign, last_pivot: prev }
}

/// Solves `a * x = b` exactly.
///
/// Returns `None` when the system is inconsistent. Free variables are set
/// to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if a.len() != b.len() {
        return Err(dimension("right-hand side length differs from row count"));
    }
    let n_cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != n_cols) {
        return Err(dimension("ragged coefficient matrix"));
    }
    let rows: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut full = row.clone();
            full.push(rhs.clone());
            integer_row(&full)
        })
        .collect();
    let ech = echelon(rows, n_cols);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[n_cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n_cols];
    for &(r, c) in ech.pivots.iter().rev() {
        let row = &ech.rows[r];
        let mut acc = Rational::from_integer(row[n_cols].clone());
        for (j, xj) in x.iter().enumerate().skip(c + 1) {
            if !xj.is_zero() && !row[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * xj;
            }
        }
        x[c] = acc / Rational::from_integer(row[c].clone());
    }
    Ok(Some(x))
}

fn check_square(m: &[Vec<Rational>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(dimension("matrix is not square"));
    }
    Ok(n)
}

pub fn determinant(m: &[Vec<Rational>]) -> Result<Rational> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(Rational::one());
    }
    // det(m) = det(scaled) / product of row scales
    let mut scale = Rational::one();
    let rows: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let int_row = integer_row(row);
            if let Some((orig, scaled)) = row.iter().zip(&int_row).find(|(c, _)| !c.is_zero()) {
                scale *= Rational::from_integer(scaled.clone()) / orig;
            }
            int_row
        })
        .collect();
    let ech = echelon(rows, n);
    if ech.pivots.len() < n {
        return Ok(Rational::zero());
    }
    let det = Rational::from_integer(ech.last_pivot * BigInt::from(ech.sign));
    Ok(det / scale)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &[Vec<Rational>]) -> Result<Option<Vec<Vec<Rational>>>> {
    let n = check_square(m)?;
    if determinant(m)?.is_zero() {
        return Ok(None);
    }
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for k in 0..n {
        let e: Vec<Rational> = (0..n)
            .map(|i| if i == k { Rational::one() } else { Rational::zero() })
            .collect();
        match solve(m, &e)? {
            Some(col) => cols.push(col),
            None => return Ok(None),
        }
    }
    Ok(Some(
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect(),
    ))
}
