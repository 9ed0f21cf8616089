use std::fmt;
use std::ops::Add;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Total degree extended by `-∞`, the degree of the zero polynomial.
///
/// `NegInfinity` sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedDegree {
    NegInfinity,
    Finite(u64),
}

impl ExtendedDegree {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedDegree::NegInfinity => None,
            ExtendedDegree::Finite(d) => Some(d),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedDegree::Finite(_))
    }
}

impl From<u64> for ExtendedDegree {
    fn from(d: u64) -> Self {
        ExtendedDegree::Finite(d)
    }
}

impl Add for ExtendedDegree {
    type Output = ExtendedDegree;
    fn add(self, rhs: ExtendedDegree) -> ExtendedDegree {
        match (self, rhs) {
            (ExtendedDegree::Finite(a), ExtendedDegree::Finite(b)) => ExtendedDegree::Finite(a + b),
            _ => ExtendedDegree::NegInfinity,
        }
    }
}

impl fmt::Display for ExtendedDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedDegree::NegInfinity => f.write_str("-inf"),
            ExtendedDegree::Finite(d) => write!(f, "{d}"),
        }
    }
}

// JSON: a number, or the string "-inf".
impl Serialize for ExtendedDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtendedDegree::NegInfinity => s.serialize_str("-inf"),
            ExtendedDegree::Finite(d) => s.serialize_u64(*d),
        }
    }
}

impl<'de> Deserialize<'de> for ExtendedDegree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u64),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(ExtendedDegree::Finite(n)),
            Repr::Str(s) if s == "-inf" => Ok(ExtendedDegree::NegInfinity),
            Repr::Str(s) => Err(serde::de::Error::custom(format!("not a degree: {s}"))),
        }
    }
}

impl Polynomial {
    /// Total degree; `-∞` for the zero polynomial.
    pub fn degree(&self) -> ExtendedDegree {
        // grlex keeps the highest total degree last
        self.terms
            .keys()
            .next_back()
            .map_or(ExtendedDegree::NegInfinity, |m| m.total_degree().into())
    }

    /// The highest homogeneous part.
    pub fn leading_form(&self) -> Result<LeadingForm> {
        let d = self
            .degree()
            .finite()
            .ok_or_else(|| Error::UndefinedInput("leading form of the zero polynomial".into()))?;
        let mut lead = Polynomial::zero(self.var_count);
        for (m, c) in self.terms.iter().rev() {
            if m.total_degree() != d {
                break;
            }
            lead.terms.insert(m.clone(), c.clone());
        }
        Ok(LeadingForm(lead))
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.total_degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }
}

/// A nonzero homogeneous polynomial, typically the leading form of another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeadingForm(Polynomial);

impl LeadingForm {
    /// Wraps `p` if it is nonzero and homogeneous.
    pub fn new(p: Polynomial) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::UndefinedInput("leading form must be nonzero".into()));
        }
        if !p.is_homogeneous() {
            return Err(Error::InvalidArgument(format!("{p} is not homogeneous")));
        }
        Ok(LeadingForm(p))
    }

    pub fn as_polynomial(&self) -> &Polynomial {
        &self.0
    }

    pub fn into_polynomial(self) -> Polynomial {
        self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.degree().finite().unwrap_or(0)
    }
}

/// Whether `fbar` lies in the algebra `Q[gbar]`.
///
/// For homogeneous forms this means `fbar = c * gbar^k` for a nonzero
/// rational `c` and some `k >= 0`.
pub fn leading_in_subring(fbar: &LeadingForm, gbar: &LeadingForm) -> Result<bool> {
    let (f, g) = (&fbar.0, &gbar.0);
    f.check_same_ring(g)?;
    let (df, dg) = (fbar.degree(), gbar.degree());
    if dg == 0 {
        return Ok(df == 0);
    }
    if df % dg != 0 {
        return Ok(false);
    }
    let k = u32::try_from(df / dg)
        .map_err(|_| Error::InvalidArgument("degree too large".into()))?;
    let power = g.pow(k);
    if power.num_terms() != f.num_terms() {
        return Ok(false);
    }
    // same support and a constant coefficient ratio
    let mut ratio: Option<Rational> = None;
    for ((mf, cf), (mp, cp)) in f.terms.iter().zip(power.terms.iter()) {
        if mf != mp {
            return Ok(false);
        }
        let r = cf / cp;
        match &ratio {
            None => ratio = Some(r),
            Some(r0) if *r0 == r => {}
            Some(_) => return Ok(false),
        }
    }
    Ok(ratio.is_some_and(|r| !r.is_zero()))
}
