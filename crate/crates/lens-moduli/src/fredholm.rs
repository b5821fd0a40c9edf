//! Fredholm and equivariant index formulas, and the regularity identity.
//!
//! The virtual dimension of a moduli space of punctured rational curves in a
//! Morse-Bott contact 3-manifold is
//! `2c₁ + Σμ⁺ - Σμ⁻ + ½Σ dim S_i + #Γ - χ(Σ)`. For the pair-of-pants
//! components enumerated in [`crate::moduli`] this Fredholm index always
//! equals the dimension `4 + 4 d_I` of the equivariant deformation space,
//! which is what makes the standard quotient almost complex structure
//! regular on those components.

use crate::lens::LensSpace;
use crate::modp::PrimeModulus;
use crate::moduli::PantsComponent;
use crate::orbits::{cz_gamma_0, cz_gamma_infty, CzIndex};
use crate::{Error, Result};

/// Fredholm index against equivariant dimension for one component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub fredholm: i64,
    pub equivariant: i64,
    /// `fredholm == equivariant`: the component is cut out transversally.
    pub regular: bool,
}

/// The general punctured-curve index formula.
///
/// `orbit_space_dims` lists the Morse-Bott orbit-space dimension at every
/// puncture (zero for nondegenerate ends); `punctures` must match the total
/// count of CZ entries and of dimension entries. Fails with
/// [`Error::HalfIntegerResult`] when the half-integer bookkeeping does not
/// close to an integer.
pub fn fredholm_index(
    c1_relative: i64,
    cz_positive: &[CzIndex],
    cz_negative: &[CzIndex],
    orbit_space_dims: &[i64],
    punctures: usize,
    euler_characteristic: i64,
) -> Result<i64> {
    assert_eq!(
        cz_positive.len() + cz_negative.len(),
        punctures,
        "one CZ index per puncture"
    );
    assert_eq!(
        orbit_space_dims.len(),
        punctures,
        "one orbit space per puncture"
    );
    let mut doubled = 4 * c1_relative;
    for mu in cz_positive {
        doubled += mu.doubled();
    }
    for mu in cz_negative {
        doubled -= mu.doubled();
    }
    for dim in orbit_space_dims {
        doubled += dim;
    }
    doubled += 2 * punctures as i64 - 2 * euler_characteristic;
    if doubled % 2 != 0 {
        return Err(Error::HalfIntegerResult);
    }
    Ok(doubled / 2)
}

/// Fredholm index of the pair of pants with positive ends `k⁰γ̄₀`, `k^∞γ̄∞`
/// and a negative contractible end of multiplicity `k`:
///
/// `μ(k^∞γ̄∞) + μ(k⁰γ̄₀) + (2/p)(d + k⁰v + k^∞q) - 2k + 2`, `d = k⁰ + k^∞ - pk`.
///
/// The middle term is integral exactly when the multiplicities satisfy the
/// equivariance congruences; other data fails with
/// [`Error::NonIntegralIndex`].
pub fn pants_index(lens: &LensSpace, k0: i64, k_inf: i64, k: i64) -> Result<i64> {
    lens.require_standard()?;
    if k < 1 {
        return Err(Error::NonPositiveMultiplicity(k));
    }
    let p = lens.p_value();
    let mu_inf = cz_gamma_infty(lens, k_inf)?
        .as_integer()
        .expect("odd integer index");
    let mu_0 = cz_gamma_0(lens, k0)?
        .as_integer()
        .expect("odd integer index");
    let d = k0 + k_inf - p * k;
    let chern_term = d + k0 * lens.v().value() + k_inf * lens.q().value();
    if chern_term % p != 0 {
        return Err(Error::NonIntegralIndex);
    }
    Ok(mu_inf + mu_0 + 2 * (chern_term / p) - 2 * k + 2)
}

/// The closed form the pants index must equal: `4 + 4 d_I`.
pub fn pants_index_expected(d_i: i64) -> i64 {
    assert!(d_i >= 0);
    4 + 4 * d_i
}

/// Index of the unparametrized cylinder components: `2 + 4 d_I` (the pants
/// value minus the reparametrization freedom).
pub fn cylinder_index(d_i: i64) -> i64 {
    assert!(d_i >= 0);
    2 + 4 * d_i
}

/// Dimension of the space of equivariant deformations: the base curve
/// contributes `4⌊d/p⌋ + 2`, the section rescaling `2`, and each extra
/// contractible end `2`.
pub fn equivariant_index(base_degree: i64, p: PrimeModulus, extra_pos: i64, extra_neg: i64) -> i64 {
    assert!(base_degree >= 1, "base curve must be non-constant");
    assert!(extra_pos >= 0 && extra_neg >= 0);
    4 + 4 * (base_degree / p.value()) + 2 * extra_pos + 2 * extra_neg
}

/// Compares the Fredholm index of a pants component with its equivariant
/// dimension; `regular` records that they agree.
pub fn regularity_report(lens: &LensSpace, component: &PantsComponent) -> Result<IndexReport> {
    let fredholm = pants_index(lens, component.k0, component.k_inf, component.k)?;
    let equivariant =
        equivariant_index(component.r + lens.p_value() * component.d_i, lens.p(), 0, 0);
    Ok(IndexReport {
        fredholm,
        equivariant,
        regular: fredholm == equivariant,
    })
}
