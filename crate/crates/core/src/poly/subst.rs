use std::collections::BTreeMap;

use super::{Polynomial, Rational};
use crate::error::{dimension, Result};

/// Lazily filled table of `images[i]^k`.
struct PowerCache<'a> {
    images: &'a [Polynomial],
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> PowerCache<'a> {
    fn new(images: &'a [Polynomial], var_count: usize) -> Self {
        let powers = images
            .iter()
            .map(|_| vec![Polynomial::one(var_count)])
            .collect();
        PowerCache { images, powers }
    }

    fn get(&mut self, var: usize, k: u32) -> &Polynomial {
        let k = k as usize;
        let table = &mut self.powers[var];
        while table.len() <= k {
            let next = table.last().unwrap() * &self.images[var];
            table.push(next);
        }
        &table[k]
    }
}

impl Polynomial {
    /// Evaluates `self` with variable `i` replaced by `images[i]`.
    ///
    /// The result lives in the ring shared by the images. Terms are grouped by
    /// exponent, one variable at a time, so every power of an image is
    /// computed once.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.var_count {
            return Err(dimension(format!(
                "{} images supplied for {} variables",
                images.len(),
                self.var_count
            )));
        }
        let target = match images.first() {
            Some(p) => p.var_count(),
            // no variables: the polynomial is a constant, but there is no
            // target ring to put it in
            None => return Err(dimension("substitution needs at least one image")),
        };
        if images.iter().any(|p| p.var_count() != target) {
            return Err(dimension("images live in rings of different sizes"));
        }
        let terms: Vec<(&[u32], &Rational)> =
            self.terms.iter().map(|(m, c)| (m.exponents(), c)).collect();
        let mut cache = PowerCache::new(images, target);
        Ok(horner(&terms, 0, target, &mut cache))
    }
}

fn horner(terms: &[(&[u32], &Rational)], var: usize, target: usize, cache: &mut PowerCache<'_>) -> Polynomial {
    if terms.is_empty() {
        return Polynomial::zero(target);
    }
    if var == cache.images.len() {
        // all exponents consumed; `terms` holds a single coefficient
        let c: Rational = terms.iter().map(|(_, c)| (*c).clone()).sum();
        return Polynomial::constant(target, c);
    }
    let mut groups: BTreeMap<u32, Vec<(&[u32], &Rational)>> = BTreeMap::new();
    for &(e, c) in terms {
        groups.entry(e[var]).or_default().push((e, c));
    }
    let mut acc = Polynomial::zero(target);
    for (k, group) in groups {
        let inner = horner(&group, var + 1, target, cache);
        let part = if k == 0 { inner } else { cache.get(var, k) * &inner };
        acc = acc + part;
    }
    acc
}
