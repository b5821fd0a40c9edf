//! Closed Reeb orbits in `L(p, q)` and in its cover `S³`: actions, homotopy
//! classes, nondegeneracy, and Conley-Zehnder indices.
//!
//! In the quotient the two simple non-contractible orbits `γ̄₀`, `γ̄∞` have
//! period `2π/p` and `[γ̄∞] = q·[γ̄₀]` generates `π₁`. Contractible orbits come
//! in two-sphere Morse-Bott families of action `2πk`. All Conley-Zehnder
//! indices here are indices of rotation paths `t ↦ e^{2πist}` with respect to
//! the fixed trivializations (global on `S³`, vanishing along a knot disjoint
//! from the orbits in the quotient); no other path family is supported.

use crate::lens::LensSpace;
use crate::modp::Residue;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitCore {
    /// Iterates of the simple orbit `γ̄₀` over `0 ∈ CP¹` (or its lift `γ₀`).
    Gamma0,
    /// Iterates of the simple orbit `γ̄∞` over `∞ ∈ CP¹` (or its lift `γ∞`).
    GammaInfty,
    /// Orbits in the two-sphere family `S_k`.
    Contractible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    LensQuotient,
    SphereCover,
}

/// A closed Reeb orbit class: core, multiplicity, and ambient space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrbitClass {
    core: OrbitCore,
    multiplicity: i64,
    ambient: Ambient,
}

impl OrbitClass {
    pub fn new(core: OrbitCore, multiplicity: i64, ambient: Ambient) -> Result<Self> {
        if multiplicity < 1 {
            return Err(Error::NonPositiveMultiplicity(multiplicity));
        }
        Ok(OrbitClass {
            core,
            multiplicity,
            ambient,
        })
    }

    pub fn core(&self) -> OrbitCore {
        self.core
    }

    pub fn multiplicity(&self) -> i64 {
        self.multiplicity
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_contractible(&self) -> bool {
        matches!(self.core, OrbitCore::Contractible)
    }
}

/// A Conley-Zehnder index stored as `2μ`, so the half-integer values of the
/// axiomatic normalization stay representable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CzIndex {
    doubled: i64,
}

impl CzIndex {
    pub const fn from_doubled(doubled: i64) -> Self {
        CzIndex { doubled }
    }

    pub const fn from_integer(mu: i64) -> Self {
        CzIndex { doubled: 2 * mu }
    }

    pub fn doubled(self) -> i64 {
        self.doubled
    }

    /// `Some(μ)` when the index is an integer.
    pub fn as_integer(self) -> Option<i64> {
        (self.doubled % 2 == 0).then_some(self.doubled / 2)
    }
}

impl core::ops::Add for CzIndex {
    type Output = CzIndex;
    fn add(self, rhs: CzIndex) -> CzIndex {
        CzIndex::from_doubled(self.doubled + rhs.doubled)
    }
}

impl core::ops::Neg for CzIndex {
    type Output = CzIndex;
    fn neg(self) -> CzIndex {
        CzIndex::from_doubled(-self.doubled)
    }
}

impl core::fmt::Display for CzIndex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// Action of the orbit as a multiple of `2π`.
///
/// Simple non-contractible quotient orbits have period `2π/p`; contractible
/// quotient orbits and every orbit upstairs have period `2π` per cover.
pub fn action(orbit: &OrbitClass, lens: &LensSpace) -> Rational {
    let k = orbit.multiplicity;
    match (orbit.ambient, orbit.core) {
        (Ambient::LensQuotient, OrbitCore::Gamma0 | OrbitCore::GammaInfty) => {
            Rational::new(k, lens.p_value())
        }
        _ => Rational::from_integer(k),
    }
}

/// Homotopy class as the coefficient of the generator `[γ̄₀]`:
/// `k·γ̄₀ ↦ k`, `k·γ̄∞ ↦ qk`, contractible `↦ 0`. Orbits in the simply
/// connected cover are all contractible, hence `0`.
pub fn homotopy_class(orbit: &OrbitClass, lens: &LensSpace) -> Residue {
    let p = lens.p();
    match (orbit.ambient, orbit.core) {
        (Ambient::LensQuotient, OrbitCore::Gamma0) => p.residue(orbit.multiplicity),
        (Ambient::LensQuotient, OrbitCore::GammaInfty) => {
            p.residue(p.mul(lens.q().value(), p.reduce(orbit.multiplicity)))
        }
        _ => p.residue(0),
    }
}

/// `k·γ̄₀` and `k·γ̄∞` are nondegenerate iff `k ≢ 0 (mod p)`.
pub fn is_nondegenerate(orbit: &OrbitClass, lens: &LensSpace) -> Result<bool> {
    if orbit.core == OrbitCore::Contractible {
        // Contractible orbits always come in Morse-Bott families.
        return Err(Error::WrongCore);
    }
    if orbit.ambient != Ambient::LensQuotient {
        return Err(Error::WrongAmbient);
    }
    Ok(orbit.multiplicity % lens.p_value() != 0)
}

/// Dimension of the Morse-Bott orbit space containing the orbit: `0` for
/// nondegenerate quotient orbits, `2` for the sphere families.
pub fn orbit_space_dim(orbit: &OrbitClass, lens: &LensSpace) -> Result<i64> {
    match orbit.ambient {
        Ambient::SphereCover => Ok(2),
        Ambient::LensQuotient => match orbit.core {
            OrbitCore::Contractible => Ok(2),
            _ => {
                if orbit.multiplicity % lens.p_value() == 0 {
                    Err(Error::DegenerateNonContractible {
                        k: orbit.multiplicity,
                        p: lens.p_value(),
                    })
                } else {
                    Ok(0)
                }
            }
        },
    }
}

/// Conley-Zehnder index of the rotation path `t ↦ e^{2πist}`, `t ∈ [0, 1]`:
/// `2⌊s⌋ + 1` for non-integer `s`, and `2s` for the loop case `s ∈ Z`.
pub fn cz_rotation(winding: Rational) -> CzIndex {
    if winding.is_integer() {
        CzIndex::from_integer(2 * winding.numerator())
    } else {
        CzIndex::from_integer(2 * winding.floor() + 1)
    }
}

fn nondegenerate_multiple(lens: &LensSpace, k: i64) -> Result<()> {
    if k < 1 {
        return Err(Error::NonPositiveMultiplicity(k));
    }
    lens.require_standard()?;
    if k % lens.p_value() == 0 {
        return Err(Error::DegenerateOrbit {
            k,
            p: lens.p_value(),
        });
    }
    Ok(())
}

/// `μ(k·γ̄∞) = 2⌊k(1-q)/p⌋ + 1` with respect to the trivialization that
/// vanishes along a knot disjoint from the orbit.
pub fn cz_gamma_infty(lens: &LensSpace, k: i64) -> Result<CzIndex> {
    nondegenerate_multiple(lens, k)?;
    Ok(cz_rotation(Rational::new(
        k * (1 - lens.q().value()),
        lens.p_value(),
    )))
}

/// `μ(k·γ̄₀) = 2⌊k(1-v)/p⌋ + 1`, the `γ̄₀` companion of [`cz_gamma_infty`].
pub fn cz_gamma_0(lens: &LensSpace, k: i64) -> Result<CzIndex> {
    nondegenerate_multiple(lens, k)?;
    Ok(cz_rotation(Rational::new(
        k * (1 - lens.v().value()),
        lens.p_value(),
    )))
}

/// `μ(kγ) = 4k` for every `k`-fold closed Reeb orbit in `S³` with respect to
/// the global trivialization of the contact structure.
pub fn cz_contractible_sphere(k: i64) -> Result<CzIndex> {
    if k < 1 {
        return Err(Error::NonPositiveMultiplicity(k));
    }
    Ok(CzIndex::from_integer(4 * k))
}

/// Index of the lifted non-contractible orbits with respect to the vanishing
/// trivialization upstairs: the paths are integer loops, so
/// `μ(k·γ∞) = 2k(1-q)` and `μ(k·γ₀) = 2k(1-v)`.
pub fn cz_lifted_noncontractible(lens: &LensSpace, core: OrbitCore, k: i64) -> Result<CzIndex> {
    if k < 1 {
        return Err(Error::NonPositiveMultiplicity(k));
    }
    let coeff = match core {
        OrbitCore::GammaInfty => 1 - lens.q().value(),
        OrbitCore::Gamma0 => 1 - lens.v().value(),
        OrbitCore::Contractible => return Err(Error::WrongCore),
    };
    Ok(cz_rotation(Rational::from_integer(k * coeff)))
}
