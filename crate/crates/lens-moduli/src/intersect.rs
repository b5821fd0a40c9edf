//! Homology and intersection theory in the fiberwise-compactified
//! tautological bundle over `CP¹`.
//!
//! `H₂` is spanned by the zero section `[S₀]` and the section at infinity
//! `[S∞]`, with `[S₀]² = -1`, `[S∞]² = +1`, `[S₀]·[S∞] = 0`. A punctured
//! curve upstairs extends to a closed curve whose class is
//! `-K⁻[S₀] + K⁺[S∞]`, where `K^±` are the total end multiplicities; the
//! adjunction formula then turns action monotonicity into integer
//! inequalities in `K^±`.

use crate::moduli::{ModuliProblem, Sign};
use crate::rational::Rational;
use crate::{Error, Result};

/// A class `m[S₀] + n[S∞]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BundleClass {
    /// Coefficient of the zero section `[S₀]`.
    pub s0: i64,
    /// Coefficient of the section at infinity `[S∞]`.
    pub s_inf: i64,
}

impl BundleClass {
    pub const S0: BundleClass = BundleClass { s0: 1, s_inf: 0 };
    pub const S_INF: BundleClass = BundleClass { s0: 0, s_inf: 1 };
    /// The fiber class `[S∞] - [S₀]`, of self-intersection zero.
    pub const FIBER: BundleClass = BundleClass { s0: -1, s_inf: 1 };
}

/// The intersection form: `-m₁m₂ + n₁n₂`.
pub fn pairing(a: BundleClass, b: BundleClass) -> i64 {
    -a.s0 * b.s0 + a.s_inf * b.s_inf
}

/// First Chern number of the class: `c₁([S₀]) = 1`, `c₁([S∞]) = 3`.
pub fn chern(c: BundleClass) -> i64 {
    c.s0 + 3 * c.s_inf
}

/// Total end multiplicities of a lifted curve: `K⁺ = Σk⁺ᵢ`, `K⁻ = Σk⁻ⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftedMultiplicities {
    k_plus: i64,
    k_minus: i64,
}

impl LiftedMultiplicities {
    /// `k_plus >= 1` (a curve without positive ends cannot exist) and
    /// `k_minus >= 0`.
    pub fn new(k_plus: i64, k_minus: i64) -> Result<Self> {
        if k_plus < 1 {
            return Err(Error::MissingPositiveEnd);
        }
        if k_minus < 0 {
            return Err(Error::NonPositiveMultiplicity(k_minus));
        }
        Ok(LiftedMultiplicities { k_plus, k_minus })
    }

    pub fn k_plus(&self) -> i64 {
        self.k_plus
    }

    pub fn k_minus(&self) -> i64 {
        self.k_minus
    }
}

/// Class of the closed extension: `[û] = -K⁻[S₀] + K⁺[S∞]`, so that
/// `[û]·[S₀] = K⁻` and `[û]·[S∞] = K⁺`.
pub fn extended_class(k: &LiftedMultiplicities) -> BundleClass {
    BundleClass {
        s0: -k.k_minus,
        s_inf: k.k_plus,
    }
}

/// Twice the count of double points of a simple extended curve:
/// `2δ = (K⁺)² - (K⁻)² - 3K⁺ + K⁻ + 2 - 2g`.
///
/// Positivity of intersections makes this non-negative for data realized by a
/// simple curve, with zero exactly for embedded ones; negative input data is
/// rejected as unrealizable.
pub fn adjunction_defect(k: &LiftedMultiplicities, genus: i64) -> Result<i64> {
    assert!(genus >= 0);
    let kp = k.k_plus;
    let km = k.k_minus;
    let two_delta = kp * kp - km * km - 3 * kp + km + 2 - 2 * genus;
    if two_delta < 0 {
        return Err(Error::AdjunctionViolation { two_delta });
    }
    if two_delta % 2 != 0 {
        return Err(Error::ParityViolation { two_delta });
    }
    Ok(two_delta)
}

/// The inequality the adjunction argument certifies for realizable data:
/// `K⁺ >= K⁻`.
pub fn action_monotone(k: &LiftedMultiplicities) -> bool {
    k.k_plus >= k.k_minus
}

/// End multiplicities of the `Z_p`-equivariant lift of a quotient curve:
/// non-contractible ends keep their multiplicity, contractible ends lift to
/// `p` copies.
pub fn lift_multiplicities(prob: &ModuliProblem) -> LiftedMultiplicities {
    let p = prob.lens().p_value();
    let mut k_plus = 0;
    let mut k_minus = 0;
    for end in prob.ends() {
        let weight = if end.orbit.is_contractible() {
            p * end.orbit.multiplicity()
        } else {
            end.orbit.multiplicity()
        };
        match end.sign {
            Sign::Positive => k_plus += weight,
            Sign::Negative => k_minus += weight,
        }
    }
    LiftedMultiplicities::new(k_plus, k_minus).expect("problems have a positive end")
}

/// Total actions (as multiples of `2π`) of the positive and negative ends of
/// a quotient curve, with the monotonicity verdict of its lift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionComparison {
    pub a_plus: Rational,
    pub a_minus: Rational,
    pub monotone: bool,
}

/// Divides the lifted multiplicities by `p`: `A^± = (2π/p)·K^±`.
pub fn total_action_comparison(prob: &ModuliProblem) -> ActionComparison {
    let k = lift_multiplicities(prob);
    let p = prob.lens().p_value();
    ActionComparison {
        a_plus: Rational::new(k.k_plus(), p),
        a_minus: Rational::new(k.k_minus(), p),
        monotone: action_monotone(&k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lens::LensSpace;
    use crate::moduli::{EndDatum, PantsComponent};
    use crate::orbits::{Ambient, OrbitClass, OrbitCore};
    use alloc::vec;

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pairing(BundleClass { s0: -5, s_inf: 6 }, BundleClass::S0),
            5
        );
        assert_eq!(pairing(BundleClass::FIBER, BundleClass::FIBER), 0);
        assert_eq!(pairing(BundleClass::S0, BundleClass::S_INF), 0);
        assert_eq!(pairing(BundleClass::S0, BundleClass::S0), -1);
        assert_eq!(pairing(BundleClass::S_INF, BundleClass::S_INF), 1);
    }

    #[test]
    fn pairing_is_symmetric_bilinear_of_determinant_minus_one() {
        let classes = [-3i64, -1, 0, 2, 5];
        for &m1 in &classes {
            for &n1 in &classes {
                let a = BundleClass { s0: m1, s_inf: n1 };
                for &m2 in &classes {
                    for &n2 in &classes {
                        let b = BundleClass { s0: m2, s_inf: n2 };
                        assert_eq!(pairing(a, b), pairing(b, a));
                        let sum = BundleClass {
                            s0: m1 + m2,
                            s_inf: n1 + n2,
                        };
                        for &m3 in &classes {
                            for &n3 in &classes {
                                let c = BundleClass { s0: m3, s_inf: n3 };
                                assert_eq!(pairing(sum, c), pairing(a, c) + pairing(b, c));
                            }
                        }
                    }
                }
            }
        }
        // Gram matrix on (S0, S_inf) has determinant -1: signature (1,1)
        let det = pairing(BundleClass::S0, BundleClass::S0)
            * pairing(BundleClass::S_INF, BundleClass::S_INF)
            - pairing(BundleClass::S0, BundleClass::S_INF).pow(2);
        assert_eq!(det, -1);
    }

    #[test]
    fn extended_class_examples() {
        let pants = LiftedMultiplicities::new(6, 5).unwrap();
        assert_eq!(extended_class(&pants), BundleClass { s0: -5, s_inf: 6 });
        let cyl = LiftedMultiplicities::new(1, 1).unwrap();
        assert_eq!(extended_class(&cyl), BundleClass::FIBER);
        let plane = LiftedMultiplicities::new(1, 0).unwrap();
        assert_eq!(extended_class(&plane), BundleClass::S_INF);
        assert_eq!(
            LiftedMultiplicities::new(0, 0),
            Err(Error::MissingPositiveEnd)
        );
    }

    #[test]
    fn pairing_recovers_multiplicities() {
        for kp in 1i64..20 {
            for km in 0i64..20 {
                let k = LiftedMultiplicities::new(kp, km).unwrap();
                let c = extended_class(&k);
                assert_eq!(pairing(c, BundleClass::S0), km);
                assert_eq!(pairing(c, BundleClass::S_INF), kp);
                assert_eq!(pairing(c, c), kp * kp - km * km);
            }
        }
    }

    #[test]
    fn chern_examples() {
        assert_eq!(chern(BundleClass { s0: -5, s_inf: 6 }), 13);
        assert_eq!(chern(BundleClass::S0), 1);
        assert_eq!(chern(BundleClass::S_INF), 3);
    }

    #[test]
    fn adjunction_examples() {
        let pants = LiftedMultiplicities::new(6, 5).unwrap();
        assert_eq!(adjunction_defect(&pants, 0), Ok(0)); // embedded
        let fiber = LiftedMultiplicities::new(1, 1).unwrap();
        assert_eq!(adjunction_defect(&fiber, 0), Ok(0));
        let bad = LiftedMultiplicities::new(1, 3).unwrap();
        assert_eq!(
            adjunction_defect(&bad, 0),
            Err(Error::AdjunctionViolation { two_delta: -6 })
        );
    }

    #[test]
    fn monotonicity_and_covers() {
        assert!(action_monotone(&LiftedMultiplicities::new(6, 5).unwrap()));
        assert!(action_monotone(&LiftedMultiplicities::new(1, 0).unwrap()));
        assert!(action_monotone(&LiftedMultiplicities::new(2, 2).unwrap()));
        // scaling by a covering degree preserves the verdict
        for kp in 1i64..10 {
            for km in 0i64..12 {
                let base = LiftedMultiplicities::new(kp, km).unwrap();
                for n in 1i64..5 {
                    let cover = LiftedMultiplicities::new(n * kp, n * km).unwrap();
                    assert_eq!(action_monotone(&base), action_monotone(&cover));
                }
            }
        }
    }

    #[test]
    fn lift_and_actions_of_the_minimal_pants() {
        let lens = LensSpace::new(5, 2).unwrap();
        let comp = PantsComponent {
            r: 1,
            d_i: 0,
            k: 1,
            k0: 2,
            k_inf: 4,
            dim: 4,
        };
        let prob = comp.problem(&lens).unwrap();
        let k = lift_multiplicities(&prob);
        assert_eq!((k.k_plus(), k.k_minus()), (6, 5));
        assert_eq!(k.k_plus() - k.k_minus(), prob.base_degree());

        let cmp = total_action_comparison(&prob);
        assert_eq!(cmp.a_plus, Rational::new(6, 5));
        assert_eq!(cmp.a_minus, Rational::from_integer(1));
        assert!(cmp.monotone);
    }

    #[test]
    fn trivial_cylinder_actions_balance() {
        // a cylinder over γ̄₀ has A⁺ = A⁻ = 2π/p; the base curve is constant,
        // so the enumeration-side verdict is still "empty"
        let lens = LensSpace::new(5, 2).unwrap();
        let g0 = |sign| {
            EndDatum::new(
                OrbitClass::new(OrbitCore::Gamma0, 1, Ambient::LensQuotient).unwrap(),
                sign,
            )
        };
        let prob =
            crate::moduli::ModuliProblem::new(lens, vec![g0(Sign::Positive), g0(Sign::Negative)])
                .unwrap();
        let cmp = total_action_comparison(&prob);
        assert_eq!(cmp.a_plus, Rational::new(1, 5));
        assert_eq!(cmp.a_minus, Rational::new(1, 5));
        assert!(cmp.monotone);
        assert_eq!(
            prob.existence_verdict(),
            crate::moduli::Verdict::Empty(crate::moduli::EmptyReason::ConstantBaseCurve)
        );
    }

    #[test]
    fn negative_degree_problems_are_not_monotone() {
        let lens = LensSpace::new(5, 2).unwrap();
        let end = |k, sign| {
            EndDatum::new(
                OrbitClass::new(OrbitCore::Gamma0, k, Ambient::LensQuotient).unwrap(),
                sign,
            )
        };
        let prob = crate::moduli::ModuliProblem::new(
            lens,
            vec![end(1, Sign::Positive), end(2, Sign::Negative)],
        )
        .unwrap();
        assert!(!total_action_comparison(&prob).monotone);
        assert_eq!(
            prob.existence_verdict(),
            crate::moduli::Verdict::Empty(crate::moduli::EmptyReason::NegativeDegree)
        );
    }

    #[test]
    fn all_contractible_problem_lifts_p_fold() {
        let lens = LensSpace::new(7, 3).unwrap();
        let prob = crate::moduli::ModuliProblem::new(
            lens,
            vec![EndDatum::new(
                OrbitClass::new(OrbitCore::Contractible, 1, Ambient::LensQuotient).unwrap(),
                Sign::Positive,
            )],
        )
        .unwrap();
        let k = lift_multiplicities(&prob);
        assert_eq!((k.k_plus(), k.k_minus()), (7, 0));
        let cmp = total_action_comparison(&prob);
        assert_eq!(cmp.a_plus, Rational::from_integer(1));
        assert!(cmp.monotone);
    }
}
