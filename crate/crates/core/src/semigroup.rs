//! The numerical semigroup `d1*N + d2*N`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Witness `k1*d1 + k2*d2 = target` with `k1, k2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRepresentation {
    pub k1: u64,
    pub k2: u64,
}

/// Finds `k1, k2 >= 0` with `k1*d1 + k2*d2 = target`, minimising `k2`.
///
/// `d1` and `d2` need not be coprime. Returns `None` if either generator is
/// zero and the target is not reachable with the other.
pub fn is_member(target: u64, d1: u64, d2: u64) -> Option<SemigroupRepresentation> {
    if d2 == 0 {
        return represent_single(target, d1).map(|k1| SemigroupRepresentation { k1, k2: 0 });
    }
    let mut k2 = 0u64;
    loop {
        let used = k2.checked_mul(d2)?;
        if used > target {
            return None;
        }
        if let Some(k1) = represent_single(target - used, d1) {
            return Some(SemigroupRepresentation { k1, k2 });
        }
        k2 += 1;
    }
}

fn represent_single(target: u64, d: u64) -> Option<u64> {
    match (target, d) {
        (0, _) => Some(0),
        (_, 0) => None,
        _ if target.is_multiple_of(d) => Some(target / d),
        _ => None,
    }
}

/// Largest integer outside `d1*N + d2*N`, i.e. `(d1-1)(d2-1) - 1`.
///
/// Requires `d1, d2 >= 2` and `gcd(d1, d2) = 1`; with a generator equal to 1
/// every integer is a member and there is no Frobenius number.
pub fn frobenius(d1: u64, d2: u64) -> Result<u64> {
    if d1 < 2 || d2 < 2 {
        return Err(invalid(format!(
            "Frobenius number needs generators >= 2, got ({d1}, {d2})"
        )));
    }
    if d1.gcd(&d2) != 1 {
        return Err(invalid(format!("generators ({d1}, {d2}) are not coprime")));
    }
    Ok((d1 - 1) * (d2 - 1) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert_eq!(is_member(12, 5, 7), Some(SemigroupRepresentation { k1: 1, k2: 1 }));
        assert_eq!(is_member(9, 5, 7), None);
        assert_eq!(is_member(0, 5, 7), Some(SemigroupRepresentation { k1: 0, k2: 0 }));
        // smallest k2 first: 35 = 7*5 + 0*7
        assert_eq!(is_member(35, 5, 7), Some(SemigroupRepresentation { k1: 7, k2: 0 }));
    }

    #[test]
    fn family_exponent_is_not_a_member() {
        for n in 2..50u64 {
            assert_eq!(is_member(4 * n + 1, 4 * n - 3, 4 * n - 1), None, "n = {n}");
        }
    }

    #[test]
    fn non_coprime_generators() {
        assert_eq!(is_member(10, 4, 6), Some(SemigroupRepresentation { k1: 1, k2: 1 }));
        assert_eq!(is_member(7, 4, 6), None);
        assert_eq!(is_member(4, 4, 0), Some(SemigroupRepresentation { k1: 1, k2: 0 }));
    }

    #[test]
    fn frobenius_numbers() {
        assert_eq!(frobenius(5, 7).unwrap(), 23);
        assert_eq!(frobenius(2, 3).unwrap(), 1);
        assert_eq!(frobenius(3, 5).unwrap(), 7);
        assert!(frobenius(4, 6).is_err());
        assert!(frobenius(1, 6).is_err());
    }
}
