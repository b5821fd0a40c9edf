//! Arithmetic in the prime field `Z_p`: canonical representatives, inverses,
//! quadratic residues.
//!
//! Moduli are validated primes below `2^31`, so every product fits in `i64`
//! and a fortiori in the `i128` intermediates used here; no operation can
//! silently wrap. Inverses go through extended Euclid rather than Fermat
//! exponentiation.

use crate::{Error, Result};

const MAX_PRIME: i64 = 1 << 31;

fn is_prime(p: i64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A validated prime modulus `2 <= p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeModulus {
    p: i64,
}

impl PrimeModulus {
    pub fn new(p: i64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus { p })
    }

    pub fn value(self) -> i64 {
        self.p
    }

    /// True when `1 < q < p-1` admits solutions, i.e. `p >= 5`.
    pub fn standard_range_nonempty(self) -> bool {
        self.p >= 5
    }

    /// Canonical representative of `a` in `{0, ..., p-1}` (floor semantics:
    /// `reduce(-4) = 1` for `p = 5`).
    pub fn reduce(self, a: i64) -> i64 {
        a.rem_euclid(self.p)
    }

    pub fn residue(self, a: i64) -> Residue {
        Residue {
            value: self.reduce(a),
            modulus: self,
        }
    }

    /// `a * b mod p` on plain integers, exact via 128-bit intermediates.
    pub fn mul(self, a: i64, b: i64) -> i64 {
        ((a as i128 * b as i128).rem_euclid(self.p as i128)) as i64
    }

    pub(crate) fn inv_int(self, a: i64) -> Result<i64> {
        let a = self.reduce(a);
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        // Extended Euclid: maintain x with a*x ≡ r (mod p).
        let (mut r0, mut r1) = (self.p, a);
        let (mut x0, mut x1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (x0, x1) = (x1, x0 - q * x1);
        }
        debug_assert_eq!(r0, 1, "p prime and a nonzero force gcd 1");
        Ok(self.reduce(x0))
    }
}

/// Canonical representative of `a` modulo `p`.
pub fn canonical_rep(a: i64, p: PrimeModulus) -> Residue {
    p.residue(a)
}

/// An element of `Z_p` in canonical form `0 <= value < p`.
///
/// Equality compares value and modulus; combining residues over different
/// primes is surfaced as [`Error::ModulusMismatch`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: i64,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_modulus(self, other: Residue) -> Result<PrimeModulus> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.p,
                right: other.modulus.p,
            });
        }
        Ok(self.modulus)
    }

    // Binary operations must check the moduli, so they return Result and
    // cannot be the std operator traits.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: Residue) -> Result<Residue> {
        let p = self.same_modulus(other)?;
        Ok(p.residue(self.value + other.value))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(self, other: Residue) -> Result<Residue> {
        let p = self.same_modulus(other)?;
        Ok(p.residue(self.value - other.value))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Residue) -> Result<Residue> {
        let p = self.same_modulus(other)?;
        Ok(p.residue(p.mul(self.value, other.value)))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(self) -> Residue {
        self.modulus.residue(-self.value)
    }

    /// Multiplicative inverse, by extended Euclid.
    pub fn inv(self) -> Result<Residue> {
        Ok(self.modulus.residue(self.modulus.inv_int(self.value)?))
    }

    /// True iff some nonzero `x` has `x² ≡ self (mod p)`, by Euler's criterion.
    pub fn is_quadratic_residue(self) -> Result<bool> {
        if self.value == 0 {
            return Err(Error::ZeroInput);
        }
        let p = self.modulus;
        if p.p == 2 {
            return Ok(true);
        }
        // a^((p-1)/2) is 1 for residues, p-1 for non-residues.
        let mut result = 1i64;
        let mut base = self.value;
        let mut exp = (p.p - 1) / 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = p.mul(result, base);
            }
            base = p.mul(base, base);
            exp >>= 1;
        }
        Ok(result == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn pm(p: i64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    #[test]
    fn primality_gate() {
        assert!(PrimeModulus::new(2).is_ok());
        assert!(PrimeModulus::new(5).is_ok());
        assert!(PrimeModulus::new(2147483647).is_ok()); // 2^31 - 1
        assert_eq!(PrimeModulus::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeModulus::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeModulus::new(-7), Err(Error::NotPrime(-7)));
        assert_eq!(PrimeModulus::new(1 << 31), Err(Error::NotPrime(1 << 31)));
    }

    #[test]
    fn canonical_rep_examples() {
        assert_eq!(canonical_rep(-4, pm(5)).value(), 1);
        assert_eq!(canonical_rep(21, pm(5)).value(), 1);
        assert_eq!(canonical_rep(0, pm(7)).value(), 0);
    }

    #[test]
    fn canonical_rep_is_periodic() {
        let p = pm(13);
        for a in -40..40 {
            for k in -3..=3 {
                assert_eq!(canonical_rep(a + k * 13, p), canonical_rep(a, p));
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(pm(5).residue(2).inv().unwrap().value(), 3);
        assert_eq!(pm(7).residue(1).inv().unwrap().value(), 1);
        // Oracle: exhaustive search for 3·b ≡ 1 (mod 7).
        let expect = (1..7).find(|b| (3 * b) % 7 == 1).unwrap();
        assert_eq!(expect, 5);
        assert_eq!(pm(7).residue(3).inv().unwrap().value(), expect);
        assert_eq!(pm(7).residue(0).inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn inverse_is_an_involution() {
        for &p in &[5i64, 7, 11, 13, 101] {
            let p = pm(p);
            for a in 1..p.value() {
                let r = p.residue(a);
                let inv = r.inv().unwrap();
                assert_eq!(r.mul(inv).unwrap().value(), 1);
                assert_eq!(inv.inv().unwrap(), r);
            }
        }
    }

    #[test]
    fn quadratic_residue_examples() {
        // Oracle: brute-force square tables.
        let squares_mod7: Vec<i64> = (1..7).map(|x| (x * x) % 7).collect();
        assert!(squares_mod7.contains(&2));
        assert!(!squares_mod7.contains(&3));
        assert_eq!(pm(7).residue(2).is_quadratic_residue(), Ok(true));
        assert_eq!(pm(7).residue(3).is_quadratic_residue(), Ok(false));
        assert_eq!(pm(13).residue(1).is_quadratic_residue(), Ok(true));
        assert_eq!(
            pm(7).residue(0).is_quadratic_residue(),
            Err(Error::ZeroInput)
        );
    }

    #[test]
    fn euler_criterion_matches_brute_force() {
        for &p in &[3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
            let m = pm(p);
            let squares: Vec<i64> = (1..p).map(|x| m.mul(x, x)).collect();
            for a in 1..p {
                let expect = squares.contains(&a);
                assert_eq!(
                    m.residue(a).is_quadratic_residue().unwrap(),
                    expect,
                    "p={p} a={a}"
                );
            }
        }
    }

    #[test]
    fn half_of_the_units_are_squares() {
        let mut p = 3;
        while p <= 100 {
            if is_prime(p) {
                let m = pm(p);
                let count = (1..p)
                    .filter(|&a| m.residue(a).is_quadratic_residue().unwrap())
                    .count() as i64;
                assert_eq!(count, (p - 1) / 2, "p={p}");
            }
            p += 2;
        }
    }

    #[test]
    fn modulus_mismatch_is_surfaced() {
        let a = pm(5).residue(2);
        let b = pm(7).residue(2);
        assert_eq!(a.mul(b), Err(Error::ModulusMismatch { left: 5, right: 7 }));
        assert_ne!(a, b);
    }
}
