//! Polynomial maps of affine space and the constructions built from them.
//!
//! A [`PolyMap`] `F = (F_1, …, F_n)` acts on points; `compose(outer, inner)`
//! is `outer ∘ inner`, i.e. component `i` is `outer_i(inner_1, …, inner_n)`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{dimension, invalid, Result};
use crate::linalg;
use crate::poly::{parse, parse_with, ExtendedDegree, Polynomial, Rational};

/// A polynomial endomorphism with as many components as variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMap {
    components: Vec<Polynomial>,
}

impl PolyMap {
    pub fn new(components: Vec<Polynomial>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(dimension("a map needs at least one component"));
        }
        if let Some(bad) = components.iter().find(|p| p.var_count() != n) {
            return Err(dimension(format!(
                "{n} components but a component in {} variables",
                bad.var_count()
            )));
        }
        Ok(PolyMap { components })
    }

    pub fn identity(n: usize) -> Self {
        PolyMap {
            components: (0..n).map(|i| Polynomial::var(n, i)).collect(),
        }
    }

    pub fn var_count(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Polynomial {
        &self.components[i]
    }

    pub fn into_components(self) -> Vec<Polynomial> {
        self.components
    }

    pub fn multidegree(&self) -> Multidegree {
        Multidegree(self.components.iter().map(Polynomial::degree).collect())
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PolyMap) -> Result<PolyMap> {
        compose(self, inner)
    }
}

impl fmt::Debug for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.components.iter().map(|c| c.to_string())).finish()
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `outer ∘ inner`.
pub fn compose(outer: &PolyMap, inner: &PolyMap) -> Result<PolyMap> {
    if outer.var_count() != inner.var_count() {
        return Err(dimension(format!(
            "cannot compose maps of {} and {} variables",
            outer.var_count(),
            inner.var_count()
        )));
    }
    let components = outer
        .components
        .iter()
        .map(|c| c.substitute(&inner.components))
        .collect::<Result<_>>()?;
    Ok(PolyMap { components })
}

/// Componentwise degrees of a map.
///
/// Ordered by the componentwise partial order: `a < b` when every entry of
/// `a` is at most the matching entry of `b` and at least one is strictly
/// smaller. Incomparable tuples yield `None` from `partial_cmp`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multidegree(pub Vec<ExtendedDegree>);

impl Multidegree {
    pub fn from_finite(degrees: &[u64]) -> Self {
        Multidegree(degrees.iter().map(|&d| ExtendedDegree::Finite(d)).collect())
    }

    pub fn degrees(&self) -> &[ExtendedDegree] {
        &self.0
    }

    /// The degrees as plain integers, if none is `-∞`.
    pub fn to_finite(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|d| d.finite()).collect()
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.0.len() != other.0.len() {
            return None;
        }
        let mut le = true;
        let mut ge = true;
        for (a, b) in self.0.iter().zip(&other.0) {
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Elementary automorphism of `Q^n`: `x_i ↦ x_i + g`, all other coordinates
/// fixed. `i` is 0-based and `g` must not involve `x_i`.
pub fn elementary(i: usize, g: &Polynomial) -> Result<PolyMap> {
    let n = g.var_count();
    if i >= n {
        return Err(invalid(format!("coordinate {i} out of range for {n} variables")));
    }
    if g.involves(i) {
        return Err(invalid(format!("shift polynomial {g} involves the shifted coordinate")));
    }
    let mut map = PolyMap::identity(n);
    map.components[i] = &map.components[i] + g;
    Ok(map)
}

/// `(x, y + f2(x), z + f3(x, y))`.
pub fn triangular(f2: &Polynomial, f3: &Polynomial) -> Result<PolyMap> {
    if f2.var_count() != 3 || f3.var_count() != 3 {
        return Err(dimension("triangular maps are built in three variables"));
    }
    if f2.involves(1) || f2.involves(2) {
        return Err(invalid(format!("{f2} must depend on x alone")));
    }
    if f3.involves(2) {
        return Err(invalid(format!("{f3} must not involve z")));
    }
    let x = Polynomial::var(3, 0);
    let y = Polynomial::var(3, 1);
    let z = Polynomial::var(3, 2);
    PolyMap::new(vec![x, y + f2, z + f3])
}

/// The linear automorphism whose component `i` is the linear form given by
/// row `i` of `m`.
pub fn linear(m: &[Vec<Rational>]) -> Result<PolyMap> {
    let n = m.len();
    if linalg::determinant(m)?.is_zero() {
        return Err(invalid("matrix is singular"));
    }
    let components = m
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .fold(Polynomial::zero(n), |acc, (j, c)| acc + Polynomial::var(n, j).scale(c))
        })
        .collect();
    PolyMap::new(components)
}

/// The map permuting coordinates: component `i` is `x_{perm[i]}`.
pub fn permutation(perm: &[usize]) -> Result<PolyMap> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(invalid(format!("{perm:?} is not a permutation")));
        }
    }
    PolyMap::new(perm.iter().map(|&p| Polynomial::var(n, p)).collect())
}

/// `T: (x, y, z) ↦ (z, y, x)`.
pub fn swap_xz() -> PolyMap {
    permutation(&[2, 1, 0]).expect("valid permutation")
}

/// The invariant quadric `y^2 + zx` of the Nagata map.
pub fn nagata_quadric() -> Polynomial {
    parse("y^2 + z*x").expect("static polynomial")
}

/// Nagata's automorphism
/// `N = (x + 2y(y^2+zx) - z(y^2+zx)^2, y - z(y^2+zx), z)`.
pub fn nagata() -> PolyMap {
    let q = nagata_quadric();
    let x = Polynomial::var(3, 0);
    let y = Polynomial::var(3, 1);
    let z = Polynomial::var(3, 2);
    let two = Polynomial::constant(3, Rational::from_integer(2.into()));
    let first = &x + &(&two * &y * &q) - &z * &q.pow(2);
    let second = &y - &(&z * &q);
    PolyMap::new(vec![first, second, z]).expect("three components in three variables")
}

/// `T ∘ N` written over `Q[x, y, z, w]` with `w` standing for `y^2 + zx`:
/// `(z, y - z w, x + 2 y w - z w^2)`.
fn twisted_step_over_quadric() -> Vec<Polynomial> {
    let names = ["x", "y", "z", "w"];
    ["z", "y - z*w", "x + 2*y*w - z*w^2"]
        .iter()
        .map(|s| parse_with(s, &names).expect("static polynomial"))
        .collect()
}

/// `(T ∘ N) ∘ inner`.
///
/// Same result as `compose(&compose(&swap_xz(), &nagata())?, inner)`, but
/// the quadric `y^2 + zx` is evaluated at `inner` once and substituted as a
/// unit, which avoids expanding the high-degree terms that cancel in the
/// flat form.
pub fn twisted_step(inner: &PolyMap) -> Result<PolyMap> {
    if inner.var_count() != 3 {
        return Err(dimension("the twisted Nagata step acts on maps of 3 components"));
    }
    let w = nagata_quadric().substitute(inner.components())?;
    let mut images = inner.components().to_vec();
    images.push(w);
    let components = twisted_step_over_quadric()
        .iter()
        .map(|c| c.substitute(&images))
        .collect::<Result<_>>()?;
    PolyMap::new(components)
}

/// `(T ∘ N)^n`, composing with `T ∘ N` one step at a time. `n = 0` gives the
/// identity.
pub fn twisted_iterate(n: u32) -> PolyMap {
    let mut acc = PolyMap::identity(3);
    for _ in 0..n {
        acc = twisted_step(&acc).expect("three components");
    }
    acc
}

/// Whether `(f, g, h)` satisfies `g^2 + h f = y^2 + z x`.
pub fn keystone_invariant_holds(map: &PolyMap) -> bool {
    if map.var_count() != 3 {
        return false;
    }
    let [f, g, h] = [&map.components[0], &map.components[1], &map.components[2]];
    g.pow(2) + h * f == nagata_quadric()
}

/// The `n × n` identity matrix.
pub fn identity_matrix(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect()
}
