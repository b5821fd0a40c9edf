//! The lens space `L(p, q)` and its classification predicates.
//!
//! `L(p, q)` is the quotient of `S³` by `(z₁, z₂) ↦ (e^{iθ}z₁, e^{iqθ}z₂)`,
//! `θ = 2π/p`. The classification predicates are arithmetic: homotopy
//! equivalence is `qq' ≡ ±a² (mod p)`, diffeomorphism is `q ≡ ±(q')^{±1}`, and
//! a positive contactomorphism of standard contact structures forces
//! `q ≡ (q')^{±1}`.

use alloc::vec::Vec;

use crate::modp::{PrimeModulus, Residue};
use crate::{Error, Result};

/// `L(p, q)` with the derived inverse `v` (`v·q ≡ 1 mod p`).
///
/// Classification predicates accept any `0 < q < p`; the Reeb-dynamics
/// operations elsewhere in the crate require the standard range `1 < q < p-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LensSpace {
    p: PrimeModulus,
    q: Residue,
    v: Residue,
    standard_range: bool,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        let pm = PrimeModulus::new(p)?;
        if q <= 0 || q >= p {
            return Err(Error::QOutOfRange { p, q });
        }
        let qr = pm.residue(q);
        let v = qr.inv()?;
        Ok(LensSpace {
            p: pm,
            q: qr,
            v,
            standard_range: q != 1 && q != p - 1,
        })
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn p_value(&self) -> i64 {
        self.p.value()
    }

    pub fn q(&self) -> Residue {
        self.q
    }

    /// The inverse `v` of `q`, with `v·q ≡ 1 (mod p)`.
    pub fn v(&self) -> Residue {
        self.v
    }

    pub fn is_standard_range(&self) -> bool {
        self.standard_range
    }

    pub(crate) fn require_standard(&self) -> Result<()> {
        if self.standard_range {
            Ok(())
        } else {
            Err(Error::NotStandardRange {
                p: self.p.value(),
                q: self.q.value(),
            })
        }
    }

    fn require_same_p(&self, other: &LensSpace) -> Result<()> {
        if self.p != other.p {
            return Err(Error::ModulusMismatch {
                left: self.p.value(),
                right: other.p.value(),
            });
        }
        Ok(())
    }

    /// Poincaré dual of the Euler class of the standard contact structure, as
    /// the coefficient of the generator `[γ̄₀]`: `(q + 1) mod p`.
    pub fn euler_class_pd(&self) -> Residue {
        self.p.residue(self.q.value() + 1)
    }

    /// `qq' ≡ a²` or `qq' ≡ -a² (mod p)` for some `a`.
    pub fn homotopy_equivalent(&self, other: &LensSpace) -> Result<bool> {
        self.require_same_p(other)?;
        let prod = self.q.mul(other.q)?;
        Ok(prod.is_quadratic_residue()? || prod.neg().is_quadratic_residue()?)
    }

    /// `q ≡ ±(q')^{±1} (mod p)`.
    pub fn diffeomorphic(&self, other: &LensSpace) -> Result<bool> {
        self.require_same_p(other)?;
        let q = self.q;
        let q2 = other.q;
        let q2_inv = q2.inv()?;
        Ok(q == q2 || q == q2.neg() || q == q2_inv || q == q2_inv.neg())
    }

    /// Necessary condition `q ≡ (q')^{±1} (mod p)` for a positive
    /// contactomorphism between the standard contact structures.
    pub fn positive_contactomorphism_possible(&self, other: &LensSpace) -> Result<bool> {
        self.require_same_p(other)?;
        self.require_standard()?;
        other.require_standard()?;
        Ok(self.q == other.q || self.q == other.q.inv()?)
    }
}

/// How `{1, ..., p-1}` partitions under the two classification relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    pub p: i64,
    /// Orbits of `q ↦ {±q^{±1}}`, each sorted, listed by smallest member.
    pub diffeo_classes: Vec<Vec<i64>>,
    /// Classes of the relation `qq' ≡ ±a²`, each sorted, listed by smallest member.
    pub homotopy_classes: Vec<Vec<i64>>,
    /// Pairs `(q, q')`, `q < q'`, homotopy equivalent but not diffeomorphic.
    pub homotopy_not_diffeo_pairs: Vec<(i64, i64)>,
}

/// Tabulates the classification predicates over all of `{1, ..., p-1}`.
pub fn enumerate_classes(p: i64) -> Result<ClassPartition> {
    let spaces: Vec<LensSpace> = (1..p)
        .map(|q| LensSpace::new(p, q))
        .collect::<Result<_>>()?;
    let classes_of = |same: &dyn Fn(&LensSpace, &LensSpace) -> bool| -> Vec<Vec<i64>> {
        let mut seen = alloc::vec![false; spaces.len()];
        let mut classes = Vec::new();
        for i in 0..spaces.len() {
            if seen[i] {
                continue;
            }
            let mut class = Vec::new();
            for j in i..spaces.len() {
                if !seen[j] && same(&spaces[i], &spaces[j]) {
                    seen[j] = true;
                    class.push(spaces[j].q.value());
                }
            }
            classes.push(class);
        }
        classes
    };
    let diffeo_classes = classes_of(&|a, b| a.diffeomorphic(b).unwrap());
    let homotopy_classes = classes_of(&|a, b| a.homotopy_equivalent(b).unwrap());
    let mut pairs = Vec::new();
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            if spaces[i].homotopy_equivalent(&spaces[j]).unwrap()
                && !spaces[i].diffeomorphic(&spaces[j]).unwrap()
            {
                pairs.push((spaces[i].q.value(), spaces[j].q.value()));
            }
        }
    }
    Ok(ClassPartition {
        p,
        diffeo_classes,
        homotopy_classes,
        homotopy_not_diffeo_pairs: pairs,
    })
}
