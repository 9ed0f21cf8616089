#![allow(dead_code)]

use num_bigint::BigInt;
use polyaut::{Monomial, Polynomial, Rational};
use rand::Rng;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    let mut n = rng.gen_range(-5i64..=5);
    if n == 0 {
        n = 1;
    }
    if rng.gen_bool(0.2) {
        Rational::new(BigInt::from(n), BigInt::from(rng.gen_range(2i64..=4)))
    } else {
        int(n)
    }
}

/// All exponent vectors of total degree exactly `d` in `vars` variables.
pub fn monomials_of_degree(vars: usize, d: u32) -> Vec<Vec<u32>> {
    if vars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials_of_degree(vars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A random homogeneous polynomial of degree `d` with up to `max_terms` terms
/// (never zero).
pub fn random_form<R: Rng>(rng: &mut R, vars: usize, d: u32, max_terms: usize) -> Polynomial {
    let pool = monomials_of_degree(vars, d);
    loop {
        let count = rng.gen_range(1..=max_terms.min(pool.len()));
        let terms = (0..count).map(|_| {
            let m = &pool[rng.gen_range(0..pool.len())];
            (Monomial::from_exponents(m.iter().copied()), small_rational(rng))
        });
        let p = Polynomial::from_terms(vars, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random polynomial of degree exactly `d`, sparse below the top.
pub fn random_poly<R: Rng>(rng: &mut R, vars: usize, d: u32, max_terms: usize) -> Polynomial {
    let mut p = random_form(rng, vars, d, max_terms);
    for lower in 0..d {
        if rng.gen_bool(0.4) {
            p = &p + &random_form(rng, vars, lower, 2);
        }
    }
    p
}

/// A random polynomial in two variables `(u, v)` with `deg_u <= max_x` and
/// `deg_v` exactly `y_degree`.
pub fn random_bivariate<R: Rng>(rng: &mut R, max_x: u32, y_degree: u32) -> Polynomial {
    loop {
        let mut terms = vec![(
            Monomial::from_exponents([rng.gen_range(0..=max_x), y_degree]),
            small_rational(rng),
        )];
        for _ in 0..rng.gen_range(0..6) {
            let m = [rng.gen_range(0..=max_x), rng.gen_range(0..=y_degree)];
            terms.push((Monomial::from_exponents(m), small_rational(rng)));
        }
        let p = Polynomial::from_terms(2, terms).unwrap();
        if p.degree_in(1) == y_degree {
            return p;
        }
    }
}

/// A random univariate polynomial `c_0 + c_1 t + ... ` of degree exactly `d`,
/// evaluated at `t`.
pub fn random_univariate_at<R: Rng>(rng: &mut R, t: &Polynomial, d: u32) -> Polynomial {
    let vars = t.var_count();
    let mut acc = Polynomial::zero(vars);
    for k in 0..=d {
        if k == d || rng.gen_bool(0.5) {
            acc = &acc + &t.pow(k).scale(&small_rational(rng));
        }
    }
    acc
}
