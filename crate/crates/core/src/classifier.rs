//! Which multidegrees `(d1, d2, d3)` are attainable by tame automorphisms of
//! affine 3-space, as far as known criteria decide.
//!
//! Permuting coordinates is a linear automorphism, so the question only
//! depends on the sorted triple. Rules are tried in order and the first
//! whose hypotheses hold decides:
//!
//! | rule | verdict  | hypothesis |
//! |------|----------|------------|
//! | R1   | tame     | `d1 | d2`, or `d3 ∈ d1·N + d2·N` |
//! | R2   | not tame | `3 <= d1 < d2`, both odd, coprime, `d3 ∉ d1·N + d2·N` |
//! | R3   | not tame | `d1 = 3`, `3 ∤ d2`, `d3 ∉ 3·N + d2·N` |
//! | R4   | not tame | `3 <= d1 < d2` both prime, `d3 ∉ d1·N + d2·N` |
//! | R5   | not tame | one of `(3,4,5), (3,5,7), (4,5,7), (4,5,11)` |
//!
//! Anything else is reported as unknown.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::automorphism::{compose, elementary, Multidegree, PolyMap};
use crate::error::{invalid, Result};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::semigroup::is_member;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Tame,
    NotTame,
    Unknown,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Tame => "TAME",
            Status::NotTame => "NOT_TAME",
            Status::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    R1,
    R2,
    R3,
    R4,
    R5,
    #[serde(rename = "NONE")]
    None,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::R1 => {
                "d2 is a multiple of d1 or d3 lies in d1*N + d2*N; \
                 a composition of elementary automorphisms attains the multidegree"
            }
            Rule::R2 => {
                "d1 < d2 odd and coprime with d3 outside d1*N + d2*N; \
                 no tame automorphism has this multidegree"
            }
            Rule::R3 => {
                "d1 = 3, 3 does not divide d2 and d3 lies outside 3*N + d2*N \
                 (known classification for d1 = 3)"
            }
            Rule::R4 => {
                "d1 < d2 primes with d3 outside d1*N + d2*N \
                 (known classification for prime d1, d2)"
            }
            Rule::R5 => "listed exceptional multidegree (known non-tame multidegrees)",
            Rule::None => "no known criterion applies",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::None => f.write_str("NONE"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// One elementary factor `x_i ↦ x_i + shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryFactor {
    /// 0-based coordinate index.
    pub coordinate: usize,
    pub shift: Polynomial,
}

impl ElementaryFactor {
    pub fn to_map(&self) -> Result<PolyMap> {
        elementary(self.coordinate, &self.shift)
    }
}

/// A tame map together with its factorization into elementary maps.
///
/// `factors` is listed outermost first: `map = factors[0] ∘ factors[1] ∘ …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub map: PolyMap,
    pub factors: Vec<ElementaryFactor>,
}

impl Witness {
    /// Recomposes the factors.
    pub fn compose_factors(&self) -> Result<PolyMap> {
        let mut acc = PolyMap::identity(self.map.var_count());
        for f in self.factors.iter().rev() {
            acc = compose(&f.to_map()?, &acc)?;
        }
        Ok(acc)
    }
}

/// Why a sorted triple is attainable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessEvidence {
    /// `d2 = k * d1`.
    Multiple { k: u64 },
    /// `d3 = k1 * d1 + k2 * d2`.
    Combination { k1: u64, k2: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub rule: Rule,
    pub citation: String,
    pub witness: Option<Witness>,
    pub sorted_input: [u64; 3],
}

impl Verdict {
    fn decided(status: Status, rule: Rule, sorted: [u64; 3]) -> Self {
        Verdict {
            status,
            rule,
            citation: rule.citation().to_string(),
            witness: None,
            sorted_input: sorted,
        }
    }
}

fn sorted_triple(d1: u64, d2: u64, d3: u64) -> Result<[u64; 3]> {
    if d1 < 1 || d2 < 1 || d3 < 1 {
        return Err(invalid(format!("degrees must be positive, got ({d1}, {d2}, {d3})")));
    }
    let mut d = [d1, d2, d3];
    d.sort_unstable();
    Ok(d)
}

/// R1 evidence for a sorted triple, preferring `d1 | d2`.
pub fn r1_evidence(d: [u64; 3]) -> Option<WitnessEvidence> {
    let [d1, d2, d3] = d;
    if d2 % d1 == 0 {
        return Some(WitnessEvidence::Multiple { k: d2 / d1 });
    }
    is_member(d3, d1, d2).map(|r| WitnessEvidence::Combination { k1: r.k1, k2: r.k2 })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// The not-tame rule (R2 to R5) matching a sorted triple, if any.
fn obstruction(d: [u64; 3]) -> Option<Rule> {
    let [d1, d2, d3] = d;
    let outside = is_member(d3, d1, d2).is_none();
    if outside && 3 <= d1 && d1 < d2 && d1 % 2 == 1 && d2 % 2 == 1 && d1.gcd(&d2) == 1 {
        return Some(Rule::R2);
    }
    if outside && d1 == 3 && d2 % 3 != 0 {
        return Some(Rule::R3);
    }
    if outside && 3 <= d1 && d1 < d2 && is_prime(d1) && is_prime(d2) {
        return Some(Rule::R4);
    }
    if matches!(d, [3, 4, 5] | [3, 5, 7] | [4, 5, 7] | [4, 5, 11]) {
        return Some(Rule::R5);
    }
    None
}

/// Classifies the multidegree `(d1, d2, d3)` in any order.
///
/// Tame verdicts carry an explicit witness whose multidegree is the sorted
/// triple.
pub fn classify(d1: u64, d2: u64, d3: u64) -> Result<Verdict> {
    let d = sorted_triple(d1, d2, d3)?;
    if let Some(evidence) = r1_evidence(d) {
        let mut v = Verdict::decided(Status::Tame, Rule::R1, d);
        v.witness = Some(construct_witness(d, evidence)?);
        return Ok(v);
    }
    Ok(match obstruction(d) {
        Some(rule) => Verdict::decided(Status::NotTame, rule, d),
        None => Verdict::decided(Status::Unknown, Rule::None, d),
    })
}

/// Like [`classify`] but skips witness construction, which can be costly for
/// large degrees.
pub fn classify_status(d1: u64, d2: u64, d3: u64) -> Result<(Status, Rule)> {
    let d = sorted_triple(d1, d2, d3)?;
    if r1_evidence(d).is_some() {
        return Ok((Status::Tame, Rule::R1));
    }
    Ok(match obstruction(d) {
        Some(rule) => (Status::NotTame, rule),
        None => (Status::Unknown, Rule::None),
    })
}

fn exponent(k: u64) -> Result<u32> {
    u32::try_from(k).map_err(|_| invalid(format!("exponent {k} is too large")))
}

fn monomial(exps: [u64; 3]) -> Result<Polynomial> {
    let exps = [exponent(exps[0])?, exponent(exps[1])?, exponent(exps[2])?];
    Ok(Polynomial::term(Monomial::from_exponents(exps), Rational::from_integer(1.into())))
}

/// Builds an explicit tame map of multidegree `d` (sorted ascending).
///
/// * `d3 = k1*d1 + k2*d2`: `E_z ∘ E_y ∘ E_x` with `E_x: x ↦ x + z^d1`,
///   `E_y: y ↦ y + z^d2`, `E_z: z ↦ z + x^k1 y^k2`, giving
///   `(x + z^d1, y + z^d2, z + (x + z^d1)^k1 (y + z^d2)^k2)`.
/// * `d2 = k*d1`: `E_y ∘ E_x ∘ E_z` with `E_z: z ↦ z + x^d3`,
///   `E_x: x ↦ x + y^d1`, `E_y: y ↦ y + x^k`, giving
///   `(x + y^d1, y + (x + y^d1)^k, z + x^d3)`.
pub fn construct_witness(d: [u64; 3], evidence: WitnessEvidence) -> Result<Witness> {
    let [d1, d2, d3] = d;
    if d1 < 1 || d1 > d2 || d2 > d3 {
        return Err(invalid(format!("({d1}, {d2}, {d3}) is not a sorted positive triple")));
    }
    let factors = match evidence {
        WitnessEvidence::Combination { k1, k2 } => {
            if k1.checked_mul(d1).zip(k2.checked_mul(d2)).and_then(|(a, b)| a.checked_add(b)) != Some(d3) {
                return Err(invalid(format!("{k1}*{d1} + {k2}*{d2} != {d3}")));
            }
            vec![
                ElementaryFactor { coordinate: 2, shift: monomial([k1, k2, 0])? },
                ElementaryFactor { coordinate: 1, shift: monomial([0, 0, d2])? },
                ElementaryFactor { coordinate: 0, shift: monomial([0, 0, d1])? },
            ]
        }
        WitnessEvidence::Multiple { k } => {
            if k.checked_mul(d1) != Some(d2) {
                return Err(invalid(format!("{k}*{d1} != {d2}")));
            }
            vec![
                ElementaryFactor { coordinate: 1, shift: monomial([k, 0, 0])? },
                ElementaryFactor { coordinate: 0, shift: monomial([0, d1, 0])? },
                ElementaryFactor { coordinate: 2, shift: monomial([d3, 0, 0])? },
            ]
        }
    };
    let mut w = Witness { map: PolyMap::identity(3), factors };
    w.map = w.compose_factors()?;
    let expected = Multidegree::from_finite(&d);
    if w.map.multidegree() != expected {
        return Err(invalid(format!(
            "witness has multidegree {} instead of {expected}",
            w.map.multidegree()
        )));
    }
    Ok(w)
}
