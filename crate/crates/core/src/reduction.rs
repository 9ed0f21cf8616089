//! Elementary reductions and the degree lower bound for `G(f, g)`.
//!
//! A map `F = (F_1, F_2, F_3)` admits an elementary reduction when some
//! `F_i - g(F_a, F_b)` (with `{a, b}` the other two coordinates) has lower
//! degree than `F_i`. [`find_elementary_reduction`] looks for such a `g`
//! among polynomials whose monomials `u^α v^β` satisfy
//! `α deg F_a + β deg F_b <= bound`, by solving for the unknown coefficients
//! exactly. A `None` result means "none within the bound", not "none exists".

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use num_traits::Zero;

use crate::automorphism::PolyMap;
use crate::error::{dimension, invalid, Error, Result};
use crate::linalg;
use crate::poly::{
    algebraically_independent, leading_in_subring, ExtendedDegree, Monomial, Polynomial,
    Rational,
};

/// `F_target - g(F_a, F_b)` has degree `achieved_degree < deg F_target`,
/// where `(a, b) = arguments` are the two other coordinates in ascending
/// order. All indices are 0-based; `g` is a polynomial in two variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub target: usize,
    pub arguments: (usize, usize),
    pub g: Polynomial,
    pub achieved_degree: ExtendedDegree,
}

impl Reduction {
    /// Recomputes `F_target - g(F_a, F_b)`.
    pub fn residual(&self, map: &PolyMap) -> Result<Polynomial> {
        let (a, b) = self.arguments;
        let images = [map.component(a).clone(), map.component(b).clone()];
        map.component(self.target).checked_sub(&self.g.substitute(&images)?)
    }

    /// Whether this reduction really lowers the degree of `map`'s target.
    pub fn verify(&self, map: &PolyMap) -> Result<bool> {
        let residual = self.residual(map)?;
        Ok(residual.degree() == self.achieved_degree
            && self.achieved_degree < map.component(self.target).degree())
    }
}

/// The bound used when the caller does not choose one: twice the largest
/// component degree.
pub fn default_bound(map: &PolyMap) -> u64 {
    2 * map
        .multidegree()
        .degrees()
        .iter()
        .filter_map(|d| d.finite())
        .max()
        .unwrap_or(0)
}

/// Searches each target coordinate in turn and returns the first that
/// reduces. Among the candidate `g` for that target, the one reaching the
/// lowest residual degree is returned, with free coefficients set to zero.
pub fn find_elementary_reduction(map: &PolyMap, max_total_degree: u64) -> Result<Option<Reduction>> {
    if map.var_count() != 3 {
        return Err(dimension(format!(
            "elementary reductions are searched for maps of 3 components, got {}",
            map.var_count()
        )));
    }
    for target in 0..3 {
        let (a, b) = match target {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        if let Some(r) = reduce_target(map, target, (a, b), max_total_degree)? {
            return Ok(Some(r));
        }
    }
    Ok(None)
}

/// Monomials `u^α v^β`, `(α, β) != (0, 0)`, with `α da + β db <= bound`.
fn support(da: u64, db: u64, bound: u64) -> Vec<(u32, u32)> {
    // a constant argument only ever contributes constants
    let max_alpha = bound.checked_div(da).unwrap_or(0);
    let mut out = Vec::new();
    for alpha in 0..=max_alpha {
        let rest = bound - alpha * da;
        let max_beta = rest.checked_div(db).unwrap_or(0);
        for beta in 0..=max_beta {
            if alpha + beta > 0 {
                out.push((alpha as u32, beta as u32));
            }
        }
    }
    out
}

struct Powers<'a> {
    base: &'a Polynomial,
    table: Vec<Polynomial>,
}

impl<'a> Powers<'a> {
    fn new(base: &'a Polynomial) -> Self {
        Powers { base, table: vec![Polynomial::one(base.var_count())] }
    }

    fn get(&mut self, k: u32) -> &Polynomial {
        while self.table.len() <= k as usize {
            let next = self.table.last().unwrap() * self.base;
            self.table.push(next);
        }
        &self.table[k as usize]
    }
}

fn reduce_target(map: &PolyMap, target: usize, (a, b): (usize, usize), bound: u64) -> Result<Option<Reduction>> {
    let f = map.component(target);
    let Some(df) = f.degree().finite() else {
        return Ok(None);
    };
    let (fa, fb) = (map.component(a), map.component(b));
    let (Some(da), Some(db)) = (fa.degree().finite(), fb.degree().finite()) else {
        return Ok(None);
    };
    let exps = support(da, db, bound);
    if exps.is_empty() {
        return Ok(None);
    }
    let mut pa = Powers::new(fa);
    let mut pb = Powers::new(fb);
    let products: Vec<Polynomial> = exps
        .iter()
        .map(|&(alpha, beta)| {
            let left = pa.get(alpha).clone();
            &left * pb.get(beta)
        })
        .collect();

    // First ask for every coefficient of degree >= deg F to vanish; then keep
    // lowering the threshold while the system stays solvable.
    let mut best: Option<Vec<Rational>> = None;
    let mut threshold = df;
    while let Some(sol) = solve_above(f, &products, threshold)? {
        best = Some(sol);
        if threshold == 0 {
            break;
        }
        threshold -= 1;
    }
    let Some(coeffs) = best else {
        return Ok(None);
    };
    let g = Polynomial::from_terms(
        2,
        exps.iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(alpha, beta), c)| (Monomial::from_exponents([alpha, beta]), c)),
    )?;
    let mut reduction = Reduction {
        target,
        arguments: (a, b),
        g,
        achieved_degree: ExtendedDegree::NegInfinity,
    };
    let residual = reduction.residual(map)?;
    reduction.achieved_degree = residual.degree();
    if reduction.achieved_degree >= f.degree() {
        // the linear system guarantees cancellation; reaching this is a bug
        return Err(Error::InvalidArgument(format!(
            "reduction check failed for coordinate {target}"
        )));
    }
    Ok(Some(reduction))
}

/// Solves for coefficients `c` such that `f - Σ c_k products[k]` has no
/// monomial of total degree `>= threshold`.
fn solve_above(f: &Polynomial, products: &[Polynomial], threshold: u64) -> Result<Option<Vec<Rational>>> {
    let mut rows: BTreeSet<Monomial> = BTreeSet::new();
    for p in products.iter().chain(std::iter::once(f)) {
        rows.extend(
            p.terms()
                .map(|(m, _)| m)
                .take_while(|m| m.total_degree() >= threshold)
                .cloned(),
        );
    }
    let index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut matrix = vec![vec![Rational::zero(); products.len()]; rows.len()];
    for (k, p) in products.iter().enumerate() {
        for (m, c) in p.terms().take_while(|(m, _)| m.total_degree() >= threshold) {
            matrix[index[m]][k] = c.clone();
        }
    }
    let rhs: Vec<Rational> = rows.iter().map(|m| f.coefficient(m)).collect();
    linalg::solve(&matrix, &rhs)
}

/// Inputs to the lower bound on `deg G(f, g)`.
///
/// `deg_y G = p q + r` with `p = deg_f / gcd(deg_f, deg_g)` and `0 <= r < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundInputs {
    pub deg_f: u64,
    pub deg_g: u64,
    pub deg_bracket: ExtendedDegree,
    pub q: u64,
    pub r: u64,
}

impl BoundInputs {
    pub fn p(&self) -> u64 {
        self.deg_f / self.deg_f.gcd(&self.deg_g)
    }

    /// Splits `y_degree` as `p q + r`.
    pub fn from_y_degree(deg_f: u64, deg_g: u64, deg_bracket: ExtendedDegree, y_degree: u64) -> Result<Self> {
        if deg_f == 0 {
            return Err(invalid("deg f must be positive"));
        }
        let p = deg_f / deg_f.gcd(&deg_g);
        let b = BoundInputs { deg_f, deg_g, deg_bracket, q: y_degree / p, r: y_degree % p };
        b.validate()?;
        Ok(b)
    }

    fn validate(&self) -> Result<()> {
        if self.deg_f == 0 || self.deg_f >= self.deg_g {
            return Err(invalid(format!(
                "need 0 < deg f < deg g, got {} and {}",
                self.deg_f, self.deg_g
            )));
        }
        if self.r >= self.p() {
            return Err(invalid(format!("r = {} is not below p = {}", self.r, self.p())));
        }
        if !self.deg_bracket.is_finite() {
            return Err(invalid("bracket degree of an independent pair is finite"));
        }
        Ok(())
    }
}

/// `q (p deg_g - deg_g - deg_f + deg[f,g]) + r deg_g`.
pub fn prop24_lower_bound(b: &BoundInputs) -> Result<i64> {
    b.validate()?;
    let to_i = |v: u64| i64::try_from(v).map_err(|_| invalid("degree out of range"));
    let (df, dg) = (to_i(b.deg_f)?, to_i(b.deg_g)?);
    let bracket = to_i(b.deg_bracket.finite().unwrap_or(0))?;
    let p = to_i(b.p())?;
    Ok(to_i(b.q)? * (p * dg - dg - df + bracket) + to_i(b.r)? * dg)
}

/// Whether `f, g` are algebraically independent and neither leading form
/// lies in the algebra generated by the other.
///
/// The degree ordering `deg f < deg g` is checked by [`BoundInputs`], not here.
pub fn prop24_hypotheses_hold(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(invalid("hypotheses need nonzero polynomials"));
    }
    if !algebraically_independent(f, g)? {
        return Ok(false);
    }
    let (fbar, gbar) = (f.leading_form()?, g.leading_form()?);
    Ok(!leading_in_subring(&fbar, &gbar)? && !leading_in_subring(&gbar, &fbar)?)
}
