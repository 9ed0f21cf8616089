use num_bigint::BigInt;

use super::{ExtendedDegree, Monomial, Polynomial, Rational};
use crate::error::{dimension, Result};

impl Polynomial {
    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        assert!(i < self.var_count, "variable index {i} out of range");
        let mut out = Polynomial::zero(self.var_count);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut dm: Monomial = m.clone();
            dm.0[i] -= 1;
            out.terms.insert(dm, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }
}

/// All 2×2 minors `∂f/∂x_i ∂g/∂x_j − ∂f/∂x_j ∂g/∂x_i` for `i < j`, in
/// lexicographic order of `(i, j)`.
pub fn jacobian_minors(f: &Polynomial, g: &Polynomial) -> Result<Vec<((usize, usize), Polynomial)>> {
    f.check_same_ring(g)?;
    let n = f.var_count();
    if n < 2 {
        return Err(dimension(format!("Jacobian minors need at least 2 variables, got {n}")));
    }
    let df: Vec<_> = (0..n).map(|i| f.derivative(i)).collect();
    let dg: Vec<_> = (0..n).map(|i| g.derivative(i)).collect();
    let mut minors = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let m = &df[i] * &dg[j] - &df[j] * &dg[i];
            minors.push(((i, j), m));
        }
    }
    Ok(minors)
}

/// Two polynomials are algebraically independent over a field of
/// characteristic zero iff their Jacobian has a nonzero 2×2 minor.
pub fn algebraically_independent(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    Ok(jacobian_minors(f, g)?.iter().any(|(_, m)| !m.is_zero()))
}

/// Degree of the Poisson bracket `[f, g]`, where each formal symbol
/// `[X_i, X_j]` carries degree 2.
///
/// For an independent pair this is `2 + max deg(minor)`; a dependent pair
/// gets degree 0. If either argument is the zero polynomial the bracket is
/// the zero sum and the result is `-∞`.
pub fn poisson_degree(f: &Polynomial, g: &Polynomial) -> Result<ExtendedDegree> {
    let minors = jacobian_minors(f, g)?;
    if f.is_zero() || g.is_zero() {
        return Ok(ExtendedDegree::NegInfinity);
    }
    let top = minors
        .iter()
        .filter(|(_, m)| !m.is_zero())
        .map(|(_, m)| m.degree())
        .max();
    Ok(match top {
        Some(d) => ExtendedDegree::Finite(2) + d,
        None => ExtendedDegree::Finite(0),
    })
}
