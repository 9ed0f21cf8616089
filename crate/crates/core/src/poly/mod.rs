//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] lives in `Q[x_0, …, x_{n-1}]` for a fixed `var_count = n`.
//! Terms are kept in a map keyed by exponent vector, ordered graded
//! lexicographically with `x_0 > x_1 > …`, and no stored coefficient is ever
//! zero, so structural equality is equality of polynomials.

mod calculus;
mod degree;
mod subst;
mod text;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{dimension, Result};

pub use calculus::{algebraically_independent, jacobian_minors, poisson_degree};
pub use degree::{leading_in_subring, ExtendedDegree, LeadingForm};
pub use text::{default_var_names, parse, parse_with, render, render_with};

/// Exact coefficient type.
pub type Rational = BigRational;

/// Builds a rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exponent vector of a single term.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(var_count: usize) -> Self {
        Monomial(SmallVec::from_elem(0, var_count))
    }

    /// The monomial `x_i`.
    pub fn var(var_count: usize, i: usize) -> Self {
        let mut m = Self::one(var_count);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = u32>>(exponents: I) -> Self {
        Monomial(exponents.into_iter().collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn var_count(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A polynomial in `var_count` variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    var_count: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(var_count: usize) -> Self {
        Polynomial {
            var_count,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var_count: usize) -> Self {
        Self::constant(var_count, Rational::one())
    }

    pub fn constant(var_count: usize, c: Rational) -> Self {
        Self::term(Monomial::one(var_count), c)
    }

    /// The coordinate function `x_i`.
    ///
    /// Panics if `i >= var_count`.
    pub fn var(var_count: usize, i: usize) -> Self {
        assert!(i < var_count, "variable index {i} out of range for {var_count} variables");
        Self::term(Monomial::var(var_count, i), Rational::one())
    }

    /// A single term `c * m`; zero if `c` is zero.
    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.var_count());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(var_count: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(var_count);
        for (m, c) in terms {
            if m.var_count() != var_count {
                return Err(dimension(format!(
                    "exponent vector of length {} in a ring with {var_count} variables",
                    m.var_count()
                )));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Constant term (zero if absent).
    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.var_count))
    }

    /// Whether variable `i` occurs in some term.
    pub fn involves(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    /// Largest exponent of variable `i` over all terms (0 for the zero polynomial).
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.var_count != other.var_count {
            return Err(dimension(format!(
                "operands have {} and {} variables",
                self.var_count, other.var_count
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.var_count));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        // integer coefficients skip the gcd normalisation of rational arithmetic
        let integral = self.terms.values().chain(other.terms.values()).all(|c| c.is_integer());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                if integral {
                    let c = ca.numer() * cb.numer();
                    match acc.get_mut(&m) {
                        Some(e) => *e = Rational::from_integer(e.numer() + c),
                        None => {
                            acc.insert(m, Rational::from_integer(c));
                        }
                    }
                } else {
                    let c = ca * cb;
                    acc.entry(m).and_modify(|e| *e += &c).or_insert(c);
                }
            }
        }
        Ok(Polynomial {
            var_count: self.var_count,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.var_count);
        }
        Polynomial {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.var_count);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = &result * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Reinterprets the polynomial in a ring with `var_count` variables,
    /// sending variable `i` to variable `mapping[i]`.
    pub fn remap(&self, var_count: usize, mapping: &[usize]) -> Result<Polynomial> {
        if mapping.len() != self.var_count || mapping.iter().any(|&j| j >= var_count) {
            return Err(dimension("variable remapping does not fit the target ring"));
        }
        let mut out = Polynomial::zero(var_count);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(var_count);
            for (i, &k) in m.0.iter().enumerate() {
                e.0[mapping[i]] += k;
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl fmt::Display for Polynomial {
    /// Renders with `x, y, z` for up to three variables and `x0, x1, …` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics if the operands have different `var_count`; use the
            /// `checked_*` form to get an error instead.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            var_count: self.var_count,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(p("x + y") + p("x - y"), p("2*x"));
        assert_eq!(p("x + y") - p("x + y"), Polynomial::zero(3));
    }

    #[test]
    fn zero_absorbs() {
        assert!((p("y^2 + z*x") * Polynomial::zero(3)).is_zero());
    }

    #[test]
    fn nagata_quadric_is_preserved_at_first_step() {
        let g1 = p("y - z*(y^2+z*x)");
        let h1 = p("x + 2*y*(y^2+z*x) - z*(y^2+z*x)^2");
        let f1 = p("z");
        assert_eq!(g1.pow(2) + h1 * f1, p("y^2 + z*x"));
    }

    #[test]
    fn mismatched_rings_are_rejected() {
        let a = Polynomial::var(2, 0);
        let b = Polynomial::var(3, 0);
        assert!(matches!(a.checked_add(&b), Err(crate::Error::Dimension(_))));
        assert!(matches!(a.checked_mul(&b), Err(crate::Error::Dimension(_))));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let a = p("x - 2*y + 1/3");
        let mut acc = Polynomial::one(3);
        for k in 0..7 {
            assert_eq!(a.pow(k), acc);
            acc = &acc * &a;
        }
    }

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let m = Monomial::from_exponents([1, 0, 0]);
        let q = Polynomial::from_terms(3, [(m.clone(), rat(2)), (m, rat(-2))]).unwrap();
        assert!(q.is_zero());
        let bad = Polynomial::from_terms(3, [(Monomial::from_exponents([1, 0]), rat(1))]);
        assert!(bad.is_err());
    }

    #[test]
    fn grlex_order() {
        let xs = Monomial::from_exponents([1, 0, 0]);
        let y2 = Monomial::from_exponents([0, 2, 0]);
        let yz = Monomial::from_exponents([0, 1, 1]);
        let xz = Monomial::from_exponents([1, 0, 1]);
        assert!(y2 > xs);
        assert!(xz > y2);
        assert!(y2 > yz);
    }
}
