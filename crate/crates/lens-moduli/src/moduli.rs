//! Moduli problems for rational curves in `R × L(p, q)` and their necessary
//! existence conditions.
//!
//! A rational curve with non-contractible ends lifts over a `Z_p` branched
//! covering of its domain to an equivariant curve upstairs, which is a
//! meromorphic section of a line bundle pulled back along a base curve
//! `c: Σ → CP¹`. Everything observable about that picture at the level of
//! asymptotic data is arithmetic: the degree of the divisor, a homotopy-class
//! balance mod `p`, local ramification congruences at the two fixed points,
//! and the dimension counts for the resulting component.

use alloc::vec::Vec;

use crate::lens::LensSpace;
use crate::modp::{PrimeModulus, Residue};
use crate::orbits::{Ambient, OrbitClass, OrbitCore};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

/// One asymptotic end of a moduli problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndDatum {
    pub orbit: OrbitClass,
    pub sign: Sign,
}

impl EndDatum {
    pub fn new(orbit: OrbitClass, sign: Sign) -> Self {
        EndDatum { orbit, sign }
    }

    pub fn is_positive(&self) -> bool {
        self.sign == Sign::Positive
    }
}

/// Puncture counts split by core and sign.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EndCounts {
    pub n0_pos: usize,
    pub n0_neg: usize,
    pub ninf_pos: usize,
    pub ninf_neg: usize,
    pub nc_pos: usize,
    pub nc_neg: usize,
}

impl EndCounts {
    pub fn noncontractible(&self) -> usize {
        self.n0_pos + self.n0_neg + self.ninf_pos + self.ninf_neg
    }

    pub fn total(&self) -> usize {
        self.noncontractible() + self.nc_pos + self.nc_neg
    }
}

/// Why a moduli problem is empty, when the necessary conditions already fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmptyReason {
    /// The divisor degree of the would-be section is negative.
    NegativeDegree,
    /// Degree zero forces a constant base curve, which cannot carry
    /// non-contractible ends.
    ConstantBaseCurve,
    /// The homotopy classes of positive and negative ends do not balance.
    HomotopyObstruction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// All necessary conditions hold; the moduli space may be non-empty.
    Candidate,
    Empty(EmptyReason),
}

/// The full asymptotic datum of a rational curve in `R × L(p, q)`.
#[derive(Clone, Debug)]
pub struct ModuliProblem {
    lens: LensSpace,
    ends: Vec<EndDatum>,
}

impl ModuliProblem {
    /// Validates the asymptotic data: at least one positive end (maximum
    /// principle), all orbits in the quotient, and non-contractible
    /// multiplicities `k ≢ 0 (mod p)`.
    pub fn new(lens: LensSpace, ends: Vec<EndDatum>) -> Result<Self> {
        if !ends.iter().any(EndDatum::is_positive) {
            return Err(Error::MissingPositiveEnd);
        }
        for end in &ends {
            if end.orbit.ambient() != Ambient::LensQuotient {
                return Err(Error::WrongAmbient);
            }
            if !end.orbit.is_contractible() && end.orbit.multiplicity() % lens.p_value() == 0 {
                return Err(Error::DegenerateOrbit {
                    k: end.orbit.multiplicity(),
                    p: lens.p_value(),
                });
            }
        }
        Ok(ModuliProblem { lens, ends })
    }

    pub fn lens(&self) -> &LensSpace {
        &self.lens
    }

    pub fn ends(&self) -> &[EndDatum] {
        &self.ends
    }

    pub fn end_counts(&self) -> EndCounts {
        let mut c = EndCounts::default();
        for end in &self.ends {
            match (end.orbit.core(), end.sign) {
                (OrbitCore::Gamma0, Sign::Positive) => c.n0_pos += 1,
                (OrbitCore::Gamma0, Sign::Negative) => c.n0_neg += 1,
                (OrbitCore::GammaInfty, Sign::Positive) => c.ninf_pos += 1,
                (OrbitCore::GammaInfty, Sign::Negative) => c.ninf_neg += 1,
                (OrbitCore::Contractible, Sign::Positive) => c.nc_pos += 1,
                (OrbitCore::Contractible, Sign::Negative) => c.nc_neg += 1,
            }
        }
        c
    }

    /// Genus of the domain of the `Z_p`-equivariant lift:
    /// `g = (p-1)(n_nc - 2)/2` from Riemann-Hurwitz, where every
    /// non-contractible end is a full branch point and contractible ends lift
    /// to `p` regular points.
    pub fn lifted_genus(&self) -> Result<i64> {
        let n_nc = self.end_counts().noncontractible();
        if n_nc < 2 {
            return Err(Error::TooFewNonContractibleEnds { found: n_nc });
        }
        let numerator = (self.lens.p_value() - 1) * (n_nc as i64 - 2);
        if numerator % 2 != 0 {
            return Err(Error::HalfIntegerResult);
        }
        Ok(numerator / 2)
    }

    /// Degree `d` of the lifted base curve, read off the divisor of the
    /// section: positive minus negative multiplicities, with contractible
    /// ends weighted by `p`. A negative or zero value (with non-contractible
    /// ends) means the moduli space is empty.
    pub fn base_degree(&self) -> i64 {
        let mut d = 0;
        for end in &self.ends {
            let weight = if end.orbit.is_contractible() {
                self.lens.p_value() * end.orbit.multiplicity()
            } else {
                end.orbit.multiplicity()
            };
            match end.sign {
                Sign::Positive => d += weight,
                Sign::Negative => d -= weight,
            }
        }
        d
    }

    /// The homotopy-class balance: with `[γ̄∞] = q[γ̄₀]`,
    /// `Σk^{0,-} + qΣk^{∞,-} - Σk^{0,+} - qΣk^{∞,+} ≡ 0 (mod p)`.
    pub fn homotopy_balanced(&self) -> bool {
        let q = self.lens.q().value();
        let mut sum: i64 = 0;
        for end in &self.ends {
            let term = match end.orbit.core() {
                OrbitCore::Gamma0 => end.orbit.multiplicity(),
                OrbitCore::GammaInfty => q * end.orbit.multiplicity(),
                OrbitCore::Contractible => 0,
            };
            match end.sign {
                Sign::Positive => sum -= term,
                Sign::Negative => sum += term,
            }
        }
        sum.rem_euclid(self.lens.p_value()) == 0
    }

    pub fn existence_verdict(&self) -> Verdict {
        let d = self.base_degree();
        if d < 0 {
            return Verdict::Empty(EmptyReason::NegativeDegree);
        }
        if d == 0 && self.end_counts().noncontractible() > 0 {
            return Verdict::Empty(EmptyReason::ConstantBaseCurve);
        }
        if !self.homotopy_balanced() {
            return Verdict::Empty(EmptyReason::HomotopyObstruction);
        }
        Verdict::Candidate
    }

    /// Local data of the lifted base curve at each non-contractible end: the
    /// ramification class `r̄` and the deck-rotation class `m̄`, both in
    /// `{1, ..., p-1}`.
    ///
    /// The congruences invert the multiplicity relations: a positive `γ̄₀` end
    /// of multiplicity `k` has `r̄ ≡ k(1-v)`, a positive `γ̄∞` end has
    /// `r̄ ≡ k(1-q)`, and the negative ends carry the opposite signs; the deck
    /// rotation is `m̄ ≡ (1-q)·r̄^{-1}` at `γ̄₀` ends and `m̄ ≡ (q-1)·r̄^{-1}` at
    /// `γ̄∞` ends.
    pub fn ramification_data(&self) -> Result<Vec<EndRamification>> {
        self.lens.require_standard()?;
        let p = self.lens.p();
        let q = self.lens.q().value();
        let v = self.lens.v().value();
        let mut out = Vec::new();
        for (index, end) in self.ends.iter().enumerate() {
            let k = end.orbit.multiplicity();
            let r_bar = match (end.orbit.core(), end.sign) {
                (OrbitCore::Contractible, _) => continue,
                (OrbitCore::Gamma0, Sign::Positive) => p.reduce(k * (1 - v)),
                (OrbitCore::Gamma0, Sign::Negative) => p.reduce(k * (v - 1)),
                (OrbitCore::GammaInfty, Sign::Positive) => p.reduce(k * (1 - q)),
                (OrbitCore::GammaInfty, Sign::Negative) => p.reduce(k * (q - 1)),
            };
            debug_assert!(r_bar != 0, "k and 1-q, 1-v are units");
            let m_coeff = match end.orbit.core() {
                OrbitCore::Gamma0 => 1 - q,
                OrbitCore::GammaInfty => q - 1,
                OrbitCore::Contractible => unreachable!(),
            };
            let m_bar = p.mul(p.reduce(m_coeff), p.inv_int(r_bar)?);
            out.push(EndRamification {
                end_index: index,
                r_bar,
                m_bar,
            });
        }
        Ok(out)
    }
}

/// Ramification and deck-rotation classes of one non-contractible end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EndRamification {
    /// Index into [`ModuliProblem::ends`].
    pub end_index: usize,
    /// Local degree class of the base curve, in `{1, ..., p-1}`.
    pub r_bar: i64,
    /// Local deck rotation `e^{i m̄ θ}`, `m̄ ∈ {1, ..., p-1}`.
    pub m_bar: i64,
}

/// Dimension data of the space of admissible base curves for a three-end
/// problem (`k^{0,+}`, `k^{∞,+}` poles, `k^{0,-}` zero).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseModuliDim {
    /// Free zero blocks: `(d - r̄^{0,+} - r̄^{0,-})/p`.
    pub n0: i64,
    /// Free pole blocks: `(d - r̄^{∞,+})/p`.
    pub n_inf: i64,
    /// `2 + 2 n0 + 2 n_inf`.
    pub dim: i64,
}

fn check_rbar(p: PrimeModulus, r_bar: i64) -> Result<()> {
    if r_bar < 1 || r_bar >= p.value() {
        return Err(Error::InconsistentRamification);
    }
    Ok(())
}

/// Dimension of the base-curve moduli for degree `d` and fixed ramification
/// representatives `r̄^{0,+}, r̄^{0,-}, r̄^{∞,+} ∈ {1, ..., p-1}`.
pub fn base_moduli_dim(
    p: PrimeModulus,
    d: i64,
    rbar_0_pos: i64,
    rbar_0_neg: i64,
    rbar_inf_pos: i64,
) -> Result<BaseModuliDim> {
    check_rbar(p, rbar_0_pos)?;
    check_rbar(p, rbar_0_neg)?;
    check_rbar(p, rbar_inf_pos)?;
    let zeros = d - rbar_0_pos - rbar_0_neg;
    let poles = d - rbar_inf_pos;
    if zeros % p.value() != 0 || poles % p.value() != 0 || zeros < 0 || poles < 0 {
        return Err(Error::InconsistentRamification);
    }
    let n0 = zeros / p.value();
    let n_inf = poles / p.value();
    Ok(BaseModuliDim {
        n0,
        n_inf,
        dim: 2 + 2 * n0 + 2 * n_inf,
    })
}

/// Dimension of the full moduli space: the base-curve dimension plus the
/// `C^*` of section rescalings, equal to
/// `4 + (2/p)(2d - r̄^{0,+} - r̄^{0,-} - r̄^{∞,+})`.
pub fn moduli_dim(
    p: PrimeModulus,
    d: i64,
    rbar_0_pos: i64,
    rbar_0_neg: i64,
    rbar_inf_pos: i64,
) -> Result<i64> {
    Ok(base_moduli_dim(p, d, rbar_0_pos, rbar_0_neg, rbar_inf_pos)?.dim + 2)
}

/// The same dimension count applied to a whole problem:
/// `4 + (2/p)(2d - Σ r̄)` over all non-contractible ends.
///
/// The base-curve degree must be congruent to the sum of the ramification
/// classes on each side (`γ̄₀` ends are zeros of the base curve, `γ̄∞` ends are
/// poles); otherwise the data admits no base curve at all.
pub fn problem_moduli_dim(prob: &ModuliProblem) -> Result<i64> {
    let p = prob.lens().p_value();
    let d = prob.base_degree();
    let data = prob.ramification_data()?;
    let mut side_0 = 0i64;
    let mut side_inf = 0i64;
    for entry in &data {
        match prob.ends()[entry.end_index].orbit.core() {
            OrbitCore::Gamma0 => side_0 += entry.r_bar,
            OrbitCore::GammaInfty => side_inf += entry.r_bar,
            OrbitCore::Contractible => unreachable!(),
        }
    }
    if (d - side_0) % p != 0 || (d - side_inf) % p != 0 {
        return Err(Error::InconsistentRamification);
    }
    Ok(4 + 2 * (2 * d - side_0 - side_inf) / p)
}

/// One component of the pair-of-pants moduli space: two positive
/// non-contractible ends `k⁰γ̄₀`, `k^∞γ̄∞` and one negative contractible end of
/// multiplicity `k`, indexed by the base-curve degree class `r ∈ {1,...,p-1}`
/// and the block count `d_I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PantsComponent {
    /// Base-curve degree mod `p`; also indexes the homotopy class of the ends.
    pub r: i64,
    /// Number of `p`-fold zero blocks of the base curve: `d_I = ⌊d/p⌋`.
    pub d_i: i64,
    /// Multiplicity of the negative contractible end.
    pub k: i64,
    /// Multiplicity at `γ̄₀`, with `k⁰ ≡ rq(q-1)^{-1} (mod p)`.
    pub k0: i64,
    /// Multiplicity at `γ̄∞`, with `k^∞ ≡ r(1-q)^{-1} (mod p)`.
    pub k_inf: i64,
    /// Component dimension `4 + 4 d_I`.
    pub dim: i64,
}

impl PantsComponent {
    /// The moduli problem carried by this component.
    pub fn problem(&self, lens: &LensSpace) -> Result<ModuliProblem> {
        let ends = alloc::vec![
            EndDatum::new(
                OrbitClass::new(OrbitCore::Gamma0, self.k0, Ambient::LensQuotient)?,
                Sign::Positive,
            ),
            EndDatum::new(
                OrbitClass::new(OrbitCore::GammaInfty, self.k_inf, Ambient::LensQuotient)?,
                Sign::Positive,
            ),
            EndDatum::new(
                OrbitClass::new(OrbitCore::Contractible, self.k, Ambient::LensQuotient)?,
                Sign::Negative,
            ),
        ];
        ModuliProblem::new(*lens, ends)
    }
}

/// Enumerates every pair-of-pants component with `d_I <= max_d_i` and
/// contractible multiplicity `k <= max_k`.
///
/// For fixed `(r, d_I, k)` the multiplicities satisfy
/// `k⁰ + k^∞ = r + p(d_I + k)` and `k⁰ ≡ rq(q-1)^{-1} (mod p)`; every
/// splitting with `k⁰, k^∞ >= 1` is emitted as its own component. Output is
/// sorted by `(r, d_I, k, k⁰)`.
pub fn pants_components(lens: &LensSpace, max_d_i: i64, max_k: i64) -> Result<Vec<PantsComponent>> {
    lens.require_standard()?;
    let p = lens.p();
    let pv = p.value();
    let q = lens.q().value();
    // k0 ≡ r·q·(q-1)^{-1} (mod p)
    let q_minus_1_inv = p.inv_int(q - 1)?;
    let mut out = Vec::new();
    for r in 1..pv {
        let k0_class = p.mul(p.mul(r, q), q_minus_1_inv);
        debug_assert!(k0_class != 0);
        for d_i in 0..=max_d_i {
            for k in 1..=max_k {
                let total = r + pv * (d_i + k);
                let mut k0 = k0_class;
                while k0 < total {
                    out.push(PantsComponent {
                        r,
                        d_i,
                        k,
                        k0,
                        k_inf: total - k0,
                        dim: 4 + 4 * d_i,
                    });
                    k0 += pv;
                }
            }
        }
    }
    Ok(out)
}

/// Dimension of a component with `s⁺` extra positive and `s⁻` extra negative
/// contractible ends: `4 + 4 d_I + 2s⁺ + 2s⁻`.
pub fn dim_with_extra_contractible_ends(d_i: i64, s_plus: i64, s_minus: i64) -> i64 {
    assert!(d_i >= 0 && s_plus >= 0 && s_minus >= 0);
    4 + 4 * d_i + 2 * s_plus + 2 * s_minus
}

/// Multiplicity and ramification data of a three-end section problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionProblem {
    pub k0_pos: i64,
    pub k_inf_pos: i64,
    pub k0_neg: i64,
    pub rbar_0_pos: i64,
    pub rbar_0_neg: i64,
    pub rbar_inf_pos: i64,
}

/// Result of the mod-`p` divisor-descent test for equivariant sections.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SectionCheck {
    /// The tested twist `l` of the reference divisor `l·0 - (l+1)·∞`.
    pub shift: i64,
    /// Divisor coefficients at the three marked points:
    /// `k^{0,-} - l·r̄^{0,-}`, `-k^{0,+} - l·r̄^{0,+}`, `(l+1)·r̄^{∞,+} - k^{∞,+}`.
    pub coefficients: [i64; 3],
    /// The coefficients divided by `p` — the divisor that descends to the
    /// orbit sphere — present exactly when the check passes.
    pub witness: Option<[i64; 3]>,
    pub ok: bool,
}

/// Tests whether the difference between the section divisor and the pulled
/// back reference divisor is `p` times an integral divisor, which is what
/// makes the descended divisor principal and the equivariant section exist.
pub fn section_descent_check(
    lens: &LensSpace,
    prob: &SectionProblem,
    shift: i64,
) -> Result<SectionCheck> {
    lens.require_standard()?;
    let p = lens.p_value();
    let coefficients = [
        prob.k0_neg - shift * prob.rbar_0_neg,
        -prob.k0_pos - shift * prob.rbar_0_pos,
        (shift + 1) * prob.rbar_inf_pos - prob.k_inf_pos,
    ];
    let ok = coefficients.iter().all(|c| c.rem_euclid(p) == 0);
    Ok(SectionCheck {
        shift,
        coefficients,
        witness: ok.then(|| coefficients.map(|c| c / p)),
        ok,
    })
}

/// The twist class that makes [`section_descent_check`] succeed for every
/// problem satisfying the ramification congruences: `l ≡ (v-1)^{-1} (mod p)`.
pub fn canonical_section_shift(lens: &LensSpace) -> Result<Residue> {
    lens.require_standard()?;
    lens.p().residue(lens.v().value() - 1).inv()
}

/// Whether the Laurent coefficient at exponent `n` may be nonzero for an
/// equivariant local section: `m·n ≡ target (mod p)`, with `target = q` in
/// the chart at `0` and `target = 1` in the chart at `∞`.
pub fn laurent_exponent_allowed(m: Residue, target: Residue, n: i64) -> Result<bool> {
    if m.is_zero() {
        return Err(Error::ZeroM);
    }
    let p = m.modulus();
    if p != target.modulus() {
        return Err(Error::ModulusMismatch {
            left: p.value(),
            right: target.modulus().value(),
        });
    }
    Ok(p.mul(m.value(), p.reduce(n)) == target.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    fn end(core: OrbitCore, k: i64, sign: Sign) -> EndDatum {
        EndDatum::new(
            OrbitClass::new(core, k, Ambient::LensQuotient).unwrap(),
            sign,
        )
    }

    fn pants_problem(lens: LensSpace, k0: i64, k_inf: i64, k: i64) -> ModuliProblem {
        ModuliProblem::new(
            lens,
            alloc::vec![
                end(OrbitCore::Gamma0, k0, Sign::Positive),
                end(OrbitCore::GammaInfty, k_inf, Sign::Positive),
                end(OrbitCore::Contractible, k, Sign::Negative),
            ],
        )
        .unwrap()
    }

    #[test]
    fn problem_validation() {
        let lens = l(5, 2);
        assert_eq!(
            ModuliProblem::new(lens, alloc::vec![end(OrbitCore::Gamma0, 1, Sign::Negative)]).err(),
            Some(Error::MissingPositiveEnd)
        );
        assert_eq!(
            ModuliProblem::new(lens, alloc::vec![end(OrbitCore::Gamma0, 5, Sign::Positive)]).err(),
            Some(Error::DegenerateOrbit { k: 5, p: 5 })
        );
    }

    #[test]
    fn genus_examples() {
        let p5 = pants_problem(l(5, 2), 2, 4, 1);
        assert_eq!(p5.lifted_genus(), Ok(0));

        // three non-contractible ends over p = 5: g = 4·1/2 = 2
        let three = ModuliProblem::new(
            l(5, 2),
            alloc::vec![
                end(OrbitCore::Gamma0, 7, Sign::Positive),
                end(OrbitCore::GammaInfty, 1, Sign::Positive),
                end(OrbitCore::Gamma0, 4, Sign::Negative),
            ],
        )
        .unwrap();
        assert_eq!(three.lifted_genus(), Ok(2));

        // four ends over p = 5: g = 4
        let four = ModuliProblem::new(
            l(5, 2),
            alloc::vec![
                end(OrbitCore::Gamma0, 1, Sign::Positive),
                end(OrbitCore::Gamma0, 1, Sign::Positive),
                end(OrbitCore::GammaInfty, 1, Sign::Positive),
                end(OrbitCore::GammaInfty, 1, Sign::Negative),
            ],
        )
        .unwrap();
        assert_eq!(four.lifted_genus(), Ok(4));

        let one = ModuliProblem::new(
            l(7, 2),
            alloc::vec![end(OrbitCore::Gamma0, 1, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(
            one.lifted_genus(),
            Err(Error::TooFewNonContractibleEnds { found: 1 })
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(pants_problem(l(5, 2), 2, 4, 1).base_degree(), 1);

        let plane = ModuliProblem::new(
            l(5, 2),
            alloc::vec![end(OrbitCore::Contractible, 1, Sign::Positive)],
        )
        .unwrap();
        assert_eq!(plane.base_degree(), 5);

        let bad = ModuliProblem::new(
            l(5, 2),
            alloc::vec![
                end(OrbitCore::Gamma0, 1, Sign::Positive),
                end(OrbitCore::Gamma0, 2, Sign::Negative),
            ],
        )
        .unwrap();
        assert_eq!(bad.base_degree(), -1);
        assert_eq!(
            bad.existence_verdict(),
            Verdict::Empty(EmptyReason::NegativeDegree)
        );
    }

    #[test]
    fn homotopy_balance_examples() {
        assert!(pants_problem(l(5, 2), 2, 4, 1).homotopy_balanced());

        let bad = ModuliProblem::new(
            l(5, 2),
            alloc::vec![
                end(OrbitCore::Gamma0, 1, Sign::Positive),
                end(OrbitCore::GammaInfty, 1, Sign::Positive),
                end(OrbitCore::Gamma0, 1, Sign::Negative),
            ],
        )
        .unwrap();
        assert!(!bad.homotopy_balanced());
        assert_eq!(
            bad.existence_verdict(),
            Verdict::Empty(EmptyReason::HomotopyObstruction)
        );

        let contractible_only = ModuliProblem::new(
            l(5, 2),
            alloc::vec![
                end(OrbitCore::Contractible, 2, Sign::Positive),
                end(OrbitCore::Contractible, 1, Sign::Negative),
            ],
        )
        .unwrap();
        assert!(contractible_only.homotopy_balanced());
        assert_eq!(contractible_only.existence_verdict(), Verdict::Candidate);
    }

    #[test]
    fn ramification_examples() {
        let lens = l(5, 2); // v = 3
        let prob = ModuliProblem::new(
            lens,
            alloc::vec![
                end(OrbitCore::Gamma0, 2, Sign::Positive),
                end(OrbitCore::GammaInfty, 4, Sign::Positive),
                end(OrbitCore::Gamma0, 4, Sign::Negative),
            ],
        )
        .unwrap();
        let data = prob.ramification_data().unwrap();
        assert_eq!(data[0].r_bar, 1); // 2·(1-3) ≡ 1 (mod 5)
        assert_eq!(data[1].r_bar, 1); // 4·(1-2) ≡ 1
        assert_eq!(data[2].r_bar, 3); // 4·(3-1) ≡ 3
    }

    #[test]
    fn ramification_inverts_the_multiplicity_congruences() {
        for p in [5i64, 7, 11, 13] {
            for q in 2..p - 1 {
                let lens = l(p, q);
                let pm = lens.p();
                let v = lens.v().value();
                for k in 1..=2 * p {
                    if k % p == 0 {
                        continue;
                    }
                    let prob = ModuliProblem::new(
                        lens,
                        alloc::vec![
                            end(OrbitCore::Gamma0, k, Sign::Positive),
                            end(OrbitCore::GammaInfty, k, Sign::Positive),
                            end(OrbitCore::Gamma0, k, Sign::Negative),
                            end(OrbitCore::GammaInfty, k, Sign::Negative),
                        ],
                    )
                    .unwrap();
                    let data = prob.ramification_data().unwrap();
                    // k ≡ r̄·(1-v)^{-1} etc. recovers the input multiplicity class
                    let recover = [
                        pm.mul(data[0].r_bar, pm.inv_int(1 - v).unwrap()),
                        pm.mul(data[1].r_bar, pm.inv_int(1 - q).unwrap()),
                        pm.mul(data[2].r_bar, pm.inv_int(v - 1).unwrap()),
                        pm.mul(data[3].r_bar, pm.inv_int(q - 1).unwrap()),
                    ];
                    for got in recover {
                        assert_eq!(got, pm.reduce(k), "p={p} q={q} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn base_dim_examples() {
        let p = PrimeModulus::new(5).unwrap();
        let d4 = base_moduli_dim(p, 4, 1, 3, 4).unwrap();
        assert_eq!((d4.n0, d4.n_inf, d4.dim), (0, 0, 2));
        let d9 = base_moduli_dim(p, 9, 1, 3, 4).unwrap();
        assert_eq!((d9.n0, d9.n_inf, d9.dim), (1, 1, 6));
        assert_eq!(
            base_moduli_dim(p, 3, 1, 3, 4),
            Err(Error::InconsistentRamification)
        );

        assert_eq!(moduli_dim(p, 4, 1, 3, 4), Ok(4));
        assert_eq!(moduli_dim(p, 9, 1, 3, 4), Ok(8));
        // the C* factor
        for d in [4i64, 9, 14] {
            assert_eq!(
                moduli_dim(p, d, 1, 3, 4).unwrap(),
                base_moduli_dim(p, d, 1, 3, 4).unwrap().dim + 2
            );
        }
    }

    #[test]
    fn pants_enumeration_examples() {
        let lens = l(5, 2);
        let comps = pants_components(&lens, 0, 1).unwrap();
        // r = 1: unique splitting (2, 4)
        let r1: Vec<_> = comps.iter().filter(|c| c.r == 1).collect();
        assert_eq!(r1.len(), 1);
        assert_eq!((r1[0].k0, r1[0].k_inf, r1[0].k, r1[0].dim), (2, 4, 1, 4));
        // r = 3: k0 ≡ 1 (mod 5), total 8 → (1,7) and (6,2)
        let r3: Vec<_> = comps.iter().filter(|c| c.r == 3).collect();
        assert_eq!(
            r3.iter().map(|c| (c.k0, c.k_inf)).collect::<Vec<_>>(),
            alloc::vec![(1, 7), (6, 2)]
        );
        // exactly p-1 values of r occur
        let mut rs: Vec<i64> = comps.iter().map(|c| c.r).collect();
        rs.dedup();
        assert_eq!(rs, alloc::vec![1, 2, 3, 4]);

        assert!(pants_components(&lens, 0, 0).unwrap().is_empty());
        assert_eq!(
            pants_components(&l(7, 6), 0, 1).err(),
            Some(Error::NotStandardRange { p: 7, q: 6 })
        );
    }

    #[test]
    fn pants_components_satisfy_the_necessary_conditions() {
        for p in [5i64, 7, 11, 13] {
            for q in 2..p - 1 {
                let lens = l(p, q);
                for comp in pants_components(&lens, 2, 3).unwrap() {
                    assert_eq!(comp.k0 + comp.k_inf, comp.r + p * (comp.d_i + comp.k));
                    assert_eq!((comp.k0 + comp.k_inf).rem_euclid(p), comp.r);
                    let prob = comp.problem(&lens).unwrap();
                    assert!(prob.homotopy_balanced(), "p={p} q={q} {comp:?}");
                    assert_eq!(prob.base_degree(), comp.r + p * comp.d_i);
                    assert_eq!(prob.existence_verdict(), Verdict::Candidate);
                }
            }
        }
    }

    #[test]
    fn extra_ends_dimension() {
        assert_eq!(dim_with_extra_contractible_ends(0, 0, 0), 4);
        assert_eq!(dim_with_extra_contractible_ends(1, 2, 0), 12);
        assert_eq!(dim_with_extra_contractible_ends(0, 0, 3), 10);
    }

    #[test]
    fn section_check_worked_example() {
        let lens = l(5, 2); // v = 3
        let prob = SectionProblem {
            k0_pos: 7,
            k_inf_pos: 1,
            k0_neg: 4,
            rbar_0_pos: 1,
            rbar_0_neg: 3,
            rbar_inf_pos: 4,
        };
        // canonical shift is (v-1)^{-1} = 2^{-1} = 3 (mod 5)
        let shift = canonical_section_shift(&lens).unwrap().value();
        assert_eq!(shift, 3);
        let check = section_descent_check(&lens, &prob, shift).unwrap();
        assert!(check.ok);
        assert_eq!(check.coefficients, [-5, -10, 15]);
        assert_eq!(check.witness, Some([-1, -2, 3]));

        let fail = section_descent_check(&lens, &prob, 1).unwrap();
        assert!(!fail.ok);
        assert_eq!(fail.coefficients[1], -8); // -7 - 1·1 ≢ 0 (mod 5)
        assert_eq!(fail.witness, None);

        // exact cancellation in the first coefficient
        let exact = SectionProblem {
            k0_neg: 3 * 3,
            ..prob
        };
        let c = section_descent_check(&lens, &exact, 3).unwrap();
        assert_eq!(c.coefficients[0], 0);
    }

    #[test]
    fn laurent_filter_examples() {
        let p = PrimeModulus::new(5).unwrap();
        let m = p.residue(3);
        let target = p.residue(2);
        assert_eq!(laurent_exponent_allowed(m, target, 4), Ok(true));
        assert_eq!(laurent_exponent_allowed(m, target, 1), Ok(false));
        for n in -10..10 {
            assert_eq!(
                laurent_exponent_allowed(m, target, n),
                laurent_exponent_allowed(m, target, n + 5)
            );
        }
        assert_eq!(
            laurent_exponent_allowed(p.residue(0), target, 1),
            Err(Error::ZeroM)
        );
    }
}
