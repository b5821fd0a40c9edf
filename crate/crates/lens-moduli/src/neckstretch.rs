//! The arithmetic endgame of the neck-stretching argument: action-profile
//! case analysis and the congruence `q' ≡ q^{±1} (mod p)` forced by a
//! positive contactomorphism `L(p, q) → L(p, q')`.
//!
//! Stretching the neck along the image of the contactomorphism degenerates the
//! constrained minimal pair of pants into a building whose middle-level
//! actions `A^±` can only take three profiles; two are eliminated, and in the
//! surviving one the multiplicities of the connecting cylinders are pinned by
//! action monotonicity, which forces the congruence.

use alloc::vec::Vec;

use crate::lens::LensSpace;
use crate::rational::Rational;
use crate::Result;

/// Total actions of the middle-level positive and negative ends, as
/// multiples of `2π`. Monotonicity keeps `a_plus >= a_minus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionProfile {
    pub a_plus: Rational,
    pub a_minus: Rational,
}

/// Why a profile dies, or why it survives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EliminationReason {
    /// The surviving profile `(2π(1+1/p), 2π)`: every upper/lower-level
    /// cylinder is trivial.
    SurvivesMainCase,
    /// A negative end of action `2π(1+1/p)` would have to be contractible,
    /// but `2πk = 2π(1+1/p)` has no integer solution.
    NegativeEndNotContractible,
    /// The `(2π, 2π)` case at the neck-stretch stage: the essential component
    /// would cover a trivial cylinder, which misses the constraint point.
    TrivialCylinderMissesPoint,
    /// The `(2π, 2π)` case at the cobordism stage: the index budget of the
    /// building cannot accommodate the constrained component.
    IndexContradiction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CaseVerdict {
    pub profile: ActionProfile,
    pub eliminated: bool,
    pub reason: EliminationReason,
}

/// The two places the case analysis runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StretchStage {
    /// Deforming the almost complex structure inside one symplectization.
    Cobordism,
    /// The final stretch along the contactomorphism image.
    NeckStretch,
}

/// The three action profiles compatible with monotonicity, top action
/// `2π(1 + 1/p)`, and the orbit action spectrum.
pub fn enumerate_profiles(p: i64) -> Vec<ActionProfile> {
    assert!(p >= 5, "standard-range lens spaces need p >= 5");
    let top = Rational::new(p + 1, p);
    let bottom = Rational::from_integer(1);
    alloc::vec![
        ActionProfile {
            a_plus: top,
            a_minus: bottom
        },
        ActionProfile {
            a_plus: top,
            a_minus: top
        },
        ActionProfile {
            a_plus: bottom,
            a_minus: bottom
        },
    ]
}

/// Runs the case elimination for the limiting building.
///
/// Case 2 dies because no contractible orbit has action `2π(1 + 1/p)`; case 3
/// dies for a stage-dependent reason; case 1 survives and carries the
/// congruence derivation.
pub fn eliminate_cases(lens: &LensSpace, stage: StretchStage) -> Result<Vec<CaseVerdict>> {
    lens.require_standard()?;
    let p = lens.p_value();
    let profiles = enumerate_profiles(p);
    // contractible actions are integer multiples of 2π, so (p+1)/p is never one
    debug_assert!((p + 1) % p != 0);
    // the pinned multiplicities k0 + k_inf = p + 1 leave no room for a p-fold
    // cover: p cannot divide both k0 - 1 and k_inf
    debug_assert!({
        let k0 = lens
            .p()
            .residue(1)
            .sub(lens.v())
            .unwrap()
            .inv()
            .unwrap()
            .value();
        let k_inf = p + 1 - k0;
        (k0 - 1) % p != 0 || k_inf % p != 0
    });
    Ok(alloc::vec![
        CaseVerdict {
            profile: profiles[0],
            eliminated: false,
            reason: EliminationReason::SurvivesMainCase,
        },
        CaseVerdict {
            profile: profiles[1],
            eliminated: true,
            reason: EliminationReason::NegativeEndNotContractible,
        },
        CaseVerdict {
            profile: profiles[2],
            eliminated: true,
            reason: match stage {
                StretchStage::Cobordism => EliminationReason::IndexContradiction,
                StretchStage::NeckStretch => EliminationReason::TrivialCylinderMissesPoint,
            },
        },
    ])
}

/// Which way the surviving building matches the ends of the original pants to
/// the ends of the limit pants in `R × L(p, q')`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndAssignment {
    /// `γ̄₀ ↦ γ̄₀'`, `γ̄∞ ↦ γ̄∞'`; consistency forces `q' ≡ q`.
    Straight,
    /// `γ̄₀ ↦ γ̄∞'`, `γ̄∞ ↦ γ̄₀'`; consistency forces `q' ≡ q^{-1}`.
    Swapped,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceRelation {
    /// `q' ≡ q (mod p)`.
    Identity,
    /// `q' ≡ q^{-1} (mod p)`.
    Inverse,
}

/// The residue chase of one end assignment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CongruenceReport {
    /// Multiplicities of the original minimal pants, pinned in `{1, ..., p}`
    /// by `k⁰ ≡ (1-v)^{-1}`, `k^∞ ≡ (1-q)^{-1}`, `k⁰ + k^∞ = p + 1`.
    pub k0: i64,
    pub k_inf: i64,
    /// Multiplicities of the limit pants under this assignment, pinned the
    /// same way from `(q', v')`.
    pub l0: i64,
    pub l_inf: i64,
    /// Action monotonicity of the connecting cylinders forces `l⁰ = k⁰` and
    /// `l^∞ = k^∞`; this records whether the pinned values agree.
    pub consistent: bool,
    pub relation: CongruenceRelation,
    /// Whether the forced congruence actually holds between `q` and `q'`.
    pub relation_holds: bool,
}

/// Pins the minimal-pants multiplicities `k⁰ ≡ (1-v)^{-1}`,
/// `k^∞ ≡ (1-q)^{-1}` inside `{1, ..., p}` using `k⁰ + k^∞ = p + 1`.
pub fn pinned_multiplicities(lens: &LensSpace) -> Result<(i64, i64)> {
    lens.require_standard()?;
    let p = lens.p();
    let one = p.residue(1);
    let k0 = one.sub(lens.v())?.inv()?.value();
    let k_inf = one.sub(lens.q())?.inv()?.value();
    // (1-v)^{-1} + (1-q)^{-1} ≡ 1 (mod p), so the representatives sum to p+1
    debug_assert_eq!(k0 + k_inf, p.value() + 1);
    Ok((k0, k_inf))
}

/// Replays the congruence derivation for one end assignment.
pub fn derive_congruence(
    lens: &LensSpace,
    target: &LensSpace,
    assignment: EndAssignment,
) -> Result<CongruenceReport> {
    if lens.p() != target.p() {
        return Err(crate::Error::ModulusMismatch {
            left: lens.p_value(),
            right: target.p_value(),
        });
    }
    let (k0, k_inf) = pinned_multiplicities(lens)?;
    let (t0, t_inf) = pinned_multiplicities(target)?;
    let (l0, l_inf) = match assignment {
        EndAssignment::Straight => (t0, t_inf),
        EndAssignment::Swapped => (t_inf, t0),
    };
    let consistent = l0 == k0 && l_inf == k_inf;
    let (relation, relation_holds) = match assignment {
        EndAssignment::Straight => (CongruenceRelation::Identity, target.q() == lens.q()),
        EndAssignment::Swapped => (CongruenceRelation::Inverse, target.q() == lens.v()),
    };
    Ok(CongruenceReport {
        k0,
        k_inf,
        l0,
        l_inf,
        consistent,
        relation,
        relation_holds,
    })
}

/// Whether some end assignment is consistent — equivalently, whether
/// `q' ≡ q^{±1} (mod p)`, the necessary condition for a positive
/// contactomorphism.
pub fn verify_theorem(p: i64, q: i64, q2: i64) -> Result<bool> {
    let lens = LensSpace::new(p, q)?;
    let target = LensSpace::new(p, q2)?;
    let straight = derive_congruence(&lens, &target, EndAssignment::Straight)?;
    let swapped = derive_congruence(&lens, &target, EndAssignment::Swapped)?;
    Ok(straight.consistent || swapped.consistent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn l(p: i64, q: i64) -> LensSpace {
        LensSpace::new(p, q).unwrap()
    }

    #[test]
    fn profiles() {
        let profiles = enumerate_profiles(5);
        assert_eq!(profiles.len(), 3);
        assert_eq!(profiles[0].a_plus, Rational::new(6, 5));
        assert_eq!(profiles[0].a_minus, Rational::from_integer(1));
        assert_eq!(profiles[1].a_plus, profiles[1].a_minus);
        assert_eq!(profiles[2].a_plus, Rational::from_integer(1));
        for pr in &profiles {
            assert!(pr.a_plus >= pr.a_minus);
        }
    }

    #[test]
    fn elimination_pattern() {
        for (lens, stage, case3) in [
            (
                l(5, 2),
                StretchStage::NeckStretch,
                EliminationReason::TrivialCylinderMissesPoint,
            ),
            (
                l(7, 3),
                StretchStage::Cobordism,
                EliminationReason::IndexContradiction,
            ),
        ] {
            let verdicts = eliminate_cases(&lens, stage).unwrap();
            assert!(!verdicts[0].eliminated);
            assert!(verdicts[1].eliminated);
            assert_eq!(
                verdicts[1].reason,
                EliminationReason::NegativeEndNotContractible
            );
            assert!(verdicts[2].eliminated);
            assert_eq!(verdicts[2].reason, case3);
        }
        assert_eq!(
            eliminate_cases(&l(7, 1), StretchStage::NeckStretch).err(),
            Some(Error::NotStandardRange { p: 7, q: 1 })
        );
    }

    #[test]
    fn pinned_multiplicities_of_the_minimal_pants() {
        // L(5,2): k0 = (1-3)^{-1} = 3^{-1} = 2, k_inf = (1-2)^{-1} = 4
        assert_eq!(pinned_multiplicities(&l(5, 2)), Ok((2, 4)));
        for p in [5i64, 7, 11, 13, 17] {
            for q in 2..p - 1 {
                let (k0, k_inf) = pinned_multiplicities(&l(p, q)).unwrap();
                assert_eq!(k0 + k_inf, p + 1);
                assert!(k0 % p != 0 && k_inf % p != 0);
            }
        }
    }

    #[test]
    fn pinning_is_forced() {
        // given l0 + l_inf = p + 1 with 1 <= l0, l_inf <= p and a fixed
        // residue for l0, the pair is unique
        let p = 11i64;
        for residue in 1..p {
            let solutions: alloc::vec::Vec<(i64, i64)> = (1..=p)
                .filter(|l0| (l0 - residue) % p == 0 && (1..=p).contains(&(p + 1 - l0)))
                .map(|l0| (l0, p + 1 - l0))
                .collect();
            assert_eq!(solutions.len(), 1);
        }
    }

    #[test]
    fn congruence_examples() {
        let id = derive_congruence(&l(7, 2), &l(7, 2), EndAssignment::Straight).unwrap();
        assert!(id.consistent && id.relation_holds);
        assert_eq!(id.relation, CongruenceRelation::Identity);

        // L(7,2) → L(7,4): 4 = 2^{-1} (mod 7), so only the swapped matching works
        let swapped = derive_congruence(&l(7, 2), &l(7, 4), EndAssignment::Swapped).unwrap();
        assert!(swapped.consistent && swapped.relation_holds);
        assert_eq!((swapped.k0, swapped.k_inf), (2, 6));
        assert_eq!((swapped.l0, swapped.l_inf), (2, 6));
        let straight = derive_congruence(&l(7, 2), &l(7, 4), EndAssignment::Straight).unwrap();
        assert!(!straight.consistent && !straight.relation_holds);

        for assignment in [EndAssignment::Straight, EndAssignment::Swapped] {
            let report = derive_congruence(&l(7, 2), &l(7, 3), assignment).unwrap();
            assert!(!report.consistent);
        }

        assert_eq!(
            derive_congruence(&l(7, 2), &l(5, 2), EndAssignment::Straight).err(),
            Some(Error::ModulusMismatch { left: 7, right: 5 })
        );
    }

    #[test]
    fn theorem_examples() {
        assert_eq!(verify_theorem(7, 2, 4), Ok(true));
        assert_eq!(verify_theorem(7, 2, 3), Ok(false));
        assert_eq!(verify_theorem(13, 5, 5), Ok(true));
        assert_eq!(
            verify_theorem(7, 1, 2),
            Err(Error::NotStandardRange { p: 7, q: 1 })
        );
    }

    #[test]
    fn consistency_equals_the_congruence() {
        for p in [5i64, 7, 11] {
            for q in 2..p - 1 {
                for q2 in 2..p - 1 {
                    let straight =
                        derive_congruence(&l(p, q), &l(p, q2), EndAssignment::Straight).unwrap();
                    assert_eq!(straight.consistent, straight.relation_holds);
                    let swapped =
                        derive_congruence(&l(p, q), &l(p, q2), EndAssignment::Swapped).unwrap();
                    assert_eq!(swapped.consistent, swapped.relation_holds);
                }
            }
        }
    }
}
