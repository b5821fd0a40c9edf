//! One handler per subcommand. Each returns the filled output envelope plus a
//! flag for mathematical-property failures (exit code 3, as opposed to input
//! errors, which exit 2).

use lens_moduli::curves::{check_equivariance, sample_component};
use lens_moduli::fredholm::{
    cylinder_index, equivariant_index, pants_index_expected, regularity_report,
};
use lens_moduli::intersect::{
    action_monotone, adjunction_defect, chern, extended_class, lift_multiplicities, pairing,
    total_action_comparison, BundleClass, LiftedMultiplicities,
};
use lens_moduli::lens::{enumerate_classes, LensSpace};
use lens_moduli::moduli::{
    base_moduli_dim, canonical_section_shift, pants_components, problem_moduli_dim,
    section_descent_check, EndDatum, ModuliProblem, PantsComponent, SectionProblem, Sign, Verdict,
};
use lens_moduli::neckstretch::{
    derive_congruence, eliminate_cases, enumerate_profiles, verify_theorem, CaseVerdict,
    CongruenceRelation, CongruenceReport, EliminationReason, EndAssignment, StretchStage,
};
use lens_moduli::orbits::{
    action, cz_contractible_sphere, cz_gamma_0, cz_gamma_infty, cz_lifted_noncontractible,
    is_nondegenerate, Ambient, OrbitClass, OrbitCore,
};
use lens_moduli::rational::Rational;
use serde_json::{json, Map, Value};

use crate::output::envelope;

pub struct Outcome {
    pub envelope: Value,
    pub math_failure: bool,
}

pub struct CliError(pub String);

impl From<lens_moduli::Error> for CliError {
    fn from(err: lens_moduli::Error) -> Self {
        CliError(err.to_string())
    }
}

type CmdResult = Result<Outcome, CliError>;

fn ok(envelope: Value) -> CmdResult {
    Ok(Outcome {
        envelope,
        math_failure: false,
    })
}

// Bounds that keep enumeration sizes and 64-bit products sane.
const MAX_ENUM_P: i64 = 100_000;
const MAX_BOUND: i64 = 1_000;
const MAX_MULT: i64 = 1_000_000_000;

fn check_enum_bounds(p: i64, max_di: i64, max_k: i64) -> Result<(), CliError> {
    if p > MAX_ENUM_P {
        return Err(CliError(format!("enumeration supports p <= {MAX_ENUM_P}")));
    }
    if !(0..=MAX_BOUND).contains(&max_di) || !(0..=MAX_BOUND).contains(&max_k) {
        return Err(CliError(format!("bounds must lie in [0, {MAX_BOUND}]")));
    }
    // rough row estimate: (p-1) groups × splittings per group
    let rows = (p - 1)
        .saturating_mul(max_di + 1)
        .saturating_mul(max_k.max(1))
        .saturating_mul(max_di + max_k + 2);
    if rows > 10_000_000 {
        return Err(CliError(
            "requested enumeration is too large; shrink p or the bounds".into(),
        ));
    }
    Ok(())
}

fn check_mult(name: &str, k: i64) -> Result<(), CliError> {
    if !(1..=MAX_MULT).contains(&k) {
        return Err(CliError(format!("{name} must lie in [1, {MAX_MULT}]")));
    }
    Ok(())
}

fn rational_str(r: Rational) -> Value {
    Value::String(r.to_string())
}

fn lens_json(lens: &LensSpace) -> Value {
    json!({
        "p": lens.p_value(),
        "q": lens.q().value(),
        "v": lens.v().value(),
        "standard_range": lens.is_standard_range(),
        "euler_class_pd": lens.euler_class_pd().value(),
    })
}

pub fn classify(p: i64, q: i64, q2: i64) -> CmdResult {
    let a = LensSpace::new(p, q)?;
    let b = LensSpace::new(p, q2)?;
    let contacto = if a.is_standard_range() && b.is_standard_range() {
        Value::Bool(a.positive_contactomorphism_possible(&b)?)
    } else {
        Value::Null
    };
    let mut result = Map::new();
    result.insert("lens".into(), lens_json(&a));
    result.insert("lens2".into(), lens_json(&b));
    result.insert(
        "homotopy_equivalent".into(),
        Value::Bool(a.homotopy_equivalent(&b)?),
    );
    result.insert("diffeomorphic".into(), Value::Bool(a.diffeomorphic(&b)?));
    result.insert(
        "positive_contactomorphism_possible".into(),
        contacto.clone(),
    );
    if contacto.is_null() {
        result.insert(
            "contact_note".into(),
            json!("contact predicate needs 1 < q < p-1 on both sides"),
        );
    }
    ok(envelope(
        "classify",
        json!({"p": p, "q": q, "q2": q2}),
        Value::Object(result),
    ))
}

pub fn classes(p: i64) -> CmdResult {
    let part = enumerate_classes(p)?;
    ok(envelope(
        "classes",
        json!({"p": p}),
        json!({
            "p": part.p,
            "diffeo_classes": part.diffeo_classes,
            "homotopy_classes": part.homotopy_classes,
            "homotopy_not_diffeo_pairs": part.homotopy_not_diffeo_pairs,
        }),
    ))
}

fn component_row(lens: &LensSpace, comp: &PantsComponent) -> Result<(Value, bool), CliError> {
    let report = regularity_report(lens, comp)?;
    let prob = comp.problem(lens)?;
    let lift = lift_multiplicities(&prob);
    let two_delta = adjunction_defect(&lift, prob.lifted_genus()?)?;
    let actions = total_action_comparison(&prob);
    let cz0 = cz_gamma_0(lens, comp.k0)?
        .as_integer()
        .expect("odd integer");
    let cz_inf = cz_gamma_infty(lens, comp.k_inf)?
        .as_integer()
        .expect("odd integer");
    let row = json!({
        "r": comp.r,
        "d_i": comp.d_i,
        "k": comp.k,
        "k0": comp.k0,
        "k_inf": comp.k_inf,
        "dim": comp.dim,
        "cz_gamma0": cz0,
        "cz_gamma_inf": cz_inf,
        "fredholm": report.fredholm,
        "equivariant": report.equivariant,
        "regular": report.regular,
        "k_plus": lift.k_plus(),
        "k_minus": lift.k_minus(),
        "two_delta": two_delta,
        "action_plus": rational_str(actions.a_plus),
        "action_minus": rational_str(actions.a_minus),
        "monotone": actions.monotone,
    });
    Ok((row, report.regular))
}

pub fn pants(p: i64, q: i64, max_di: i64, max_k: i64) -> CmdResult {
    check_enum_bounds(p, max_di, max_k)?;
    let lens = LensSpace::new(p, q)?;
    let comps = pants_components(&lens, max_di, max_k)?;
    let mut rows = Vec::new();
    let mut all_regular = true;
    for comp in &comps {
        let (row, regular) = component_row(&lens, comp)?;
        all_regular &= regular;
        rows.push(row);
    }
    let env = envelope(
        "pants",
        json!({"p": p, "q": q, "max_di": max_di, "max_k": max_k}),
        json!({
            "lens": lens_json(&lens),
            "components": rows,
            "count": comps.len(),
            "all_regular": all_regular,
        }),
    );
    Ok(Outcome {
        envelope: env,
        math_failure: !all_regular,
    })
}

pub fn cylinders(p: i64, q: i64, max_di: i64) -> CmdResult {
    check_enum_bounds(p, max_di, 1)?;
    let lens = LensSpace::new(p, q)?;
    lens.require_standard_cli()?;
    let rows: Vec<Value> = (0..=max_di)
        .map(|d_i| {
            json!({
                "d_i": d_i,
                "index": cylinder_index(d_i),
                "pants_index_minus_two": pants_index_expected(d_i) - 2,
            })
        })
        .collect();
    ok(envelope(
        "cylinders",
        json!({"p": p, "q": q, "max_di": max_di}),
        json!({
            "lens": lens_json(&lens),
            "rows": rows,
            "components_per_d_i": p - 1,
        }),
    ))
}

pub fn cz(p: i64, q: i64, k: i64) -> CmdResult {
    check_mult("k", k)?;
    let lens = LensSpace::new(p, q)?;
    lens.require_standard_cli()?;
    let quotient = |core: OrbitCore| -> Result<Value, CliError> {
        let orbit = OrbitClass::new(core, k, Ambient::LensQuotient)?;
        let nondegenerate = is_nondegenerate(&orbit, &lens)?;
        let cz = if nondegenerate {
            let mu = match core {
                OrbitCore::Gamma0 => cz_gamma_0(&lens, k)?,
                _ => cz_gamma_infty(&lens, k)?,
            };
            json!(mu.as_integer().expect("odd integer"))
        } else {
            Value::Null
        };
        Ok(json!({
            "nondegenerate": nondegenerate,
            "cz": cz,
            "action": rational_str(action(&orbit, &lens)),
            "homotopy_class": lens_moduli::orbits::homotopy_class(&orbit, &lens).value(),
            "lifted_cz": cz_lifted_noncontractible(&lens, core, k)?.as_integer().unwrap(),
        }))
    };
    ok(envelope(
        "cz",
        json!({"p": p, "q": q, "k": k}),
        json!({
            "lens": lens_json(&lens),
            "gamma0": quotient(OrbitCore::Gamma0)?,
            "gamma_inf": quotient(OrbitCore::GammaInfty)?,
            "contractible_sphere_cz": cz_contractible_sphere(k)?.as_integer().unwrap(),
        }),
    ))
}

fn parse_end(spec: &str) -> Result<EndDatum, CliError> {
    let bad = || {
        CliError(format!(
            "bad end spec '{spec}': expected (+|-)(g0|ginf|c):<mult>"
        ))
    };
    let (sign, rest) = match spec.split_at_checked(1) {
        Some(("+", rest)) => (Sign::Positive, rest),
        Some(("-", rest)) => (Sign::Negative, rest),
        _ => return Err(bad()),
    };
    let (core_str, mult_str) = rest.split_once(':').ok_or_else(bad)?;
    let core = match core_str {
        "g0" => OrbitCore::Gamma0,
        "ginf" => OrbitCore::GammaInfty,
        "c" => OrbitCore::Contractible,
        _ => return Err(bad()),
    };
    let multiplicity: i64 = mult_str.parse().map_err(|_| bad())?;
    check_mult("end multiplicity", multiplicity)?;
    let orbit = OrbitClass::new(core, multiplicity, Ambient::LensQuotient)?;
    Ok(EndDatum::new(orbit, sign))
}

pub fn moduli_check(p: i64, q: i64, end_specs: &[String]) -> CmdResult {
    let lens = LensSpace::new(p, q)?;
    if end_specs.is_empty() {
        return Err(CliError("at least one --end is required".into()));
    }
    let ends: Vec<EndDatum> = end_specs
        .iter()
        .map(|s| parse_end(s))
        .collect::<Result<_, _>>()?;
    let prob = ModuliProblem::new(lens, ends)?;
    let counts = prob.end_counts();
    let genus = prob.lifted_genus().ok();
    let verdict = match prob.existence_verdict() {
        Verdict::Candidate => "candidate".to_string(),
        Verdict::Empty(reason) => format!("empty: {reason:?}"),
    };
    let ramification = prob.ramification_data().ok().map(|data| {
        data.iter()
            .map(|e| json!({"end_index": e.end_index, "r_bar": e.r_bar, "m_bar": e.m_bar}))
            .collect::<Vec<_>>()
    });
    let dim = problem_moduli_dim(&prob).ok();
    let lift = lift_multiplicities(&prob);
    let actions = total_action_comparison(&prob);
    let adjunction = genus.map(|g| match adjunction_defect(&lift, g) {
        Ok(two_delta) => json!({"two_delta": two_delta, "embedded": two_delta == 0}),
        Err(err) => json!({"unrealizable": err.to_string()}),
    });
    let end_rows: Vec<Value> = prob
        .ends()
        .iter()
        .map(|e| {
            json!({
                "core": match e.orbit.core() {
                    OrbitCore::Gamma0 => "gamma0",
                    OrbitCore::GammaInfty => "gamma_inf",
                    OrbitCore::Contractible => "contractible",
                },
                "sign": if e.is_positive() { "+" } else { "-" },
                "multiplicity": e.orbit.multiplicity(),
            })
        })
        .collect();
    ok(envelope(
        "moduli-check",
        json!({"p": p, "q": q, "ends": end_specs}),
        json!({
            "lens": lens_json(&lens),
            "ends": end_rows,
            "counts": {
                "n0_pos": counts.n0_pos, "n0_neg": counts.n0_neg,
                "ninf_pos": counts.ninf_pos, "ninf_neg": counts.ninf_neg,
                "nc_pos": counts.nc_pos, "nc_neg": counts.nc_neg,
                "noncontractible": counts.noncontractible(),
            },
            "degree": prob.base_degree(),
            "homotopy_balanced": prob.homotopy_balanced(),
            "verdict": verdict,
            "lifted_genus": genus,
            "ramification": ramification,
            "moduli_dim": dim,
            "k_plus": lift.k_plus(),
            "k_minus": lift.k_minus(),
            "action_plus": rational_str(actions.a_plus),
            "action_minus": rational_str(actions.a_minus),
            "monotone": actions.monotone,
            "adjunction": adjunction,
        }),
    ))
}

pub fn section_check(
    p: i64,
    q: i64,
    k0p: i64,
    kinfp: i64,
    k0m: i64,
    ell: Option<i64>,
) -> CmdResult {
    let lens = LensSpace::new(p, q)?;
    lens.require_standard_cli()?;
    check_mult("k0_pos", k0p)?;
    check_mult("k_inf_pos", kinfp)?;
    check_mult("k0_neg", k0m)?;
    if let Some(shift) = ell {
        if shift.abs() > MAX_MULT {
            return Err(CliError(format!(
                "ell must lie in [-{MAX_MULT}, {MAX_MULT}]"
            )));
        }
    }
    let pm = lens.p();
    if k0p % p == 0 || kinfp % p == 0 || k0m % p == 0 {
        return Err(CliError(format!(
            "multiplicities must not be divisible by p = {p}"
        )));
    }
    let v = lens.v().value();
    let prob = SectionProblem {
        k0_pos: k0p,
        k_inf_pos: kinfp,
        k0_neg: k0m,
        rbar_0_pos: pm.reduce(k0p * (1 - v)),
        rbar_0_neg: pm.reduce(k0m * (v - 1)),
        rbar_inf_pos: pm.reduce(kinfp * (1 - q)),
    };
    let canonical = canonical_section_shift(&lens)?.value();
    let shift = ell.unwrap_or(canonical);
    let check = section_descent_check(&lens, &prob, shift)?;
    let d = k0p + kinfp - k0m;
    let base = base_moduli_dim(pm, d, prob.rbar_0_pos, prob.rbar_0_neg, prob.rbar_inf_pos).ok();
    ok(envelope(
        "section-check",
        json!({"p": p, "q": q, "k0_pos": k0p, "k_inf_pos": kinfp, "k0_neg": k0m, "ell": shift}),
        json!({
            "lens": lens_json(&lens),
            "rbar": {
                "rbar_0_pos": prob.rbar_0_pos,
                "rbar_0_neg": prob.rbar_0_neg,
                "rbar_inf_pos": prob.rbar_inf_pos,
            },
            "degree": d,
            "base_dim": base.map(|b| json!({"n0": b.n0, "n_inf": b.n_inf, "dim": b.dim})),
            "moduli_dim": base.map(|b| b.dim + 2),
            "shift": check.shift,
            "canonical_shift": canonical,
            "coefficients": check.coefficients,
            "witness": check.witness,
            "ok": check.ok,
        }),
    ))
}

pub fn sample_curve(p: i64, q: i64, r: i64, d_i: i64, seed: u64, tol: f64) -> CmdResult {
    let lens = LensSpace::new(p, q)?;
    lens.require_standard_cli()?;
    if r < 1 || r >= p {
        return Err(CliError(format!(
            "r must satisfy 1 <= r <= p-1 = {}",
            p - 1
        )));
    }
    if d_i < 0 {
        return Err(CliError("d_i must be >= 0".into()));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(CliError("tol must be positive".into()));
    }
    // the sampled curve only depends on (r, d_i); pick the minimal splitting
    // for the component bookkeeping
    let pm = lens.p();
    let k0 = pm.mul(pm.mul(r, q), pm.residue(q - 1).inv()?.value());
    let comp = PantsComponent {
        r,
        d_i,
        k: 1,
        k0,
        k_inf: r + p * (d_i + 1) - k0,
        dim: 4 + 4 * d_i,
    };
    let map = sample_component(&lens, &comp, seed)?;
    let report = check_equivariance(&map, 1000, seed.wrapping_add(1), tol);
    let factors: Vec<Value> = map
        .zero_factors()
        .iter()
        .map(|(a, k)| json!({"re": a.re, "im": a.im, "multiplicity": k}))
        .collect();
    let env = envelope(
        "sample-curve",
        json!({"p": p, "q": q, "r": r, "d_i": d_i, "seed": seed, "tol": tol}),
        json!({
            "lens": lens_json(&lens),
            "r": map.r(),
            "m": map.m(),
            "lambda": {"re": map.lambda().re, "im": map.lambda().im},
            "zero_factors": factors,
            "degree": map.degree(),
            "equivariance": {
                "samples": report.checked,
                "max_residual": report.max_residual,
                "tol": tol,
                "passed": report.passed,
            },
        }),
    );
    Ok(Outcome {
        envelope: env,
        math_failure: !report.passed,
    })
}

pub fn intersect(k_plus: i64, k_minus: i64, genus: i64) -> CmdResult {
    if genus < 0 {
        return Err(CliError("genus must be >= 0".into()));
    }
    let k = LiftedMultiplicities::new(k_plus, k_minus)?;
    let class = extended_class(&k);
    let adjunction = match adjunction_defect(&k, genus) {
        Ok(two_delta) => json!({"two_delta": two_delta, "embedded": two_delta == 0}),
        Err(err) => json!({"unrealizable": err.to_string()}),
    };
    ok(envelope(
        "intersect",
        json!({"k_plus": k_plus, "k_minus": k_minus, "genus": genus}),
        json!({
            "class": {"s0": class.s0, "s_inf": class.s_inf},
            "pair_s0": pairing(class, BundleClass::S0),
            "pair_s_inf": pairing(class, BundleClass::S_INF),
            "self_pairing": pairing(class, class),
            "chern": chern(class),
            "adjunction": adjunction,
            "action_monotone": action_monotone(&k),
        }),
    ))
}

fn reason_str(reason: EliminationReason) -> &'static str {
    match reason {
        EliminationReason::SurvivesMainCase => "survives_main_case",
        EliminationReason::NegativeEndNotContractible => "negative_end_not_contractible",
        EliminationReason::TrivialCylinderMissesPoint => "trivial_cylinder_misses_point",
        EliminationReason::IndexContradiction => "index_contradiction",
    }
}

fn verdict_json(verdict: &CaseVerdict) -> Value {
    json!({
        "a_plus": rational_str(verdict.profile.a_plus),
        "a_minus": rational_str(verdict.profile.a_minus),
        "eliminated": verdict.eliminated,
        "reason": reason_str(verdict.reason),
    })
}

fn congruence_json(report: &CongruenceReport) -> Value {
    json!({
        "k0": report.k0,
        "k_inf": report.k_inf,
        "l0": report.l0,
        "l_inf": report.l_inf,
        "consistent": report.consistent,
        "relation": match report.relation {
            CongruenceRelation::Identity => "q2 ≡ q",
            CongruenceRelation::Inverse => "q2 ≡ q^{-1}",
        },
        "relation_holds": report.relation_holds,
    })
}

pub fn neck(p: i64, q: i64, q2: i64) -> CmdResult {
    let lens = LensSpace::new(p, q)?;
    let target = LensSpace::new(p, q2)?;
    let profiles: Vec<Value> = enumerate_profiles(p)
        .iter()
        .map(|pr| json!({"a_plus": rational_str(pr.a_plus), "a_minus": rational_str(pr.a_minus)}))
        .collect();
    let cobordism: Vec<Value> = eliminate_cases(&lens, StretchStage::Cobordism)?
        .iter()
        .map(verdict_json)
        .collect();
    let stretch: Vec<Value> = eliminate_cases(&lens, StretchStage::NeckStretch)?
        .iter()
        .map(verdict_json)
        .collect();
    let straight = derive_congruence(&lens, &target, EndAssignment::Straight)?;
    let swapped = derive_congruence(&lens, &target, EndAssignment::Swapped)?;
    let theorem = verify_theorem(p, q, q2)?;
    let classification = lens.positive_contactomorphism_possible(&target)?;
    let env = envelope(
        "neck",
        json!({"p": p, "q": q, "q2": q2}),
        json!({
            "lens": lens_json(&lens),
            "lens2": lens_json(&target),
            "profiles": profiles,
            "cases_cobordism": cobordism,
            "cases_neck_stretch": stretch,
            "straight": congruence_json(&straight),
            "swapped": congruence_json(&swapped),
            "contactomorphism_congruence_holds": theorem,
            "classification_agrees": theorem == classification,
        }),
    );
    Ok(Outcome {
        envelope: env,
        math_failure: theorem != classification,
    })
}

// --- verify: the invariant sweeps -------------------------------------------

struct Suite {
    name: &'static str,
    checked: u64,
    failures: u64,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite {
            name,
            checked: 0,
            failures: 0,
        }
    }

    fn check(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn to_json(&self) -> Value {
        json!({"name": self.name, "checked": self.checked, "failures": self.failures})
    }
}

fn primes_up_to(n: i64) -> Vec<i64> {
    (2..=n)
        .filter(|&p| lens_moduli::modp::PrimeModulus::new(p).is_ok())
        .collect()
}

fn standard_pairs(p: i64) -> Vec<LensSpace> {
    (2..p - 1).map(|q| LensSpace::new(p, q).unwrap()).collect()
}

pub fn verify(p_max: i64) -> CmdResult {
    if !(5..=200).contains(&p_max) {
        return Err(CliError(format!(
            "p_max must lie in [5, 200] so the sweep has standard-range primes, got {p_max}"
        )));
    }
    let sweep_primes: Vec<i64> = primes_up_to(p_max.min(13))
        .into_iter()
        .filter(|&p| p >= 5)
        .collect();
    let all_primes: Vec<i64> = primes_up_to(p_max)
        .into_iter()
        .filter(|&p| p >= 5)
        .collect();

    let mut regularity = Suite::new("regularity_identity");
    let mut lifted = Suite::new("lifted_index_identity");
    let mut adjunction = Suite::new("adjunction_positivity");
    for &p in &sweep_primes {
        for lens in standard_pairs(p) {
            for comp in pants_components(&lens, 3, 5).unwrap() {
                let report = regularity_report(&lens, &comp).unwrap();
                regularity
                    .check(report.regular && report.fredholm == pants_index_expected(comp.d_i));
                regularity.check(
                    report.equivariant == equivariant_index(comp.r + p * comp.d_i, lens.p(), 0, 0),
                );
                lifted.check(lifted_index_matches(&lens, &comp));
                let prob = comp.problem(&lens).unwrap();
                let k = lift_multiplicities(&prob);
                let two_delta = adjunction_defect(&k, 0);
                adjunction.check(matches!(two_delta, Ok(d) if d >= 0 && d % 2 == 0));
                adjunction.check(total_action_comparison(&prob).monotone);
            }
        }
    }

    let mut cz_suite = Suite::new("cz_axioms");
    for num in -24i64..=24 {
        for den in 1i64..=6 {
            let s = Rational::new(num, den);
            cz_suite.check(
                lens_moduli::orbits::cz_rotation(s).doubled()
                    + lens_moduli::orbits::cz_rotation(-s).doubled()
                    == 0,
            );
            for n in -3i64..=3 {
                cz_suite.check(
                    lens_moduli::orbits::cz_rotation(s + Rational::from_integer(n)).doubled()
                        == lens_moduli::orbits::cz_rotation(s).doubled() + 4 * n,
                );
            }
        }
    }
    cz_suite.check(lens_moduli::orbits::cz_rotation(Rational::new(1, 2)).as_integer() == Some(1));
    for &p in &sweep_primes {
        for lens in standard_pairs(p) {
            for k in 1..=3 * p {
                if k % p == 0 {
                    continue;
                }
                let q = lens.q().value();
                let v = lens.v().value();
                cz_suite.check(
                    cz_gamma_infty(&lens, k).unwrap()
                        == lens_moduli::orbits::cz_rotation(Rational::new(k * (1 - q), p)),
                );
                cz_suite.check(
                    cz_gamma_0(&lens, k).unwrap()
                        == lens_moduli::orbits::cz_rotation(Rational::new(k * (1 - v), p)),
                );
            }
        }
    }

    let mut section = Suite::new("section_descent");
    for &p in &sweep_primes {
        for lens in standard_pairs(p) {
            let pm = lens.p();
            let q = lens.q().value();
            let v = lens.v().value();
            let inv = |a: i64| pm.residue(a).inv().unwrap().value();
            let canonical = canonical_section_shift(&lens).unwrap().value();
            for rbar_0_pos in 1..p {
                for rbar_0_neg in 1..p {
                    let rbar_inf_pos = pm.reduce(rbar_0_pos + rbar_0_neg);
                    if rbar_inf_pos == 0 {
                        continue;
                    }
                    let k0_pos = pm.reduce(rbar_0_pos * inv(1 - v));
                    let k0_neg = pm.reduce(rbar_0_neg * inv(v - 1));
                    let mut k_inf_pos = pm.reduce(rbar_inf_pos * inv(1 - q));
                    while k0_pos + k_inf_pos - k0_neg < rbar_0_pos + rbar_0_neg
                        || k0_pos + k_inf_pos - k0_neg < rbar_inf_pos
                    {
                        k_inf_pos += p;
                    }
                    let prob = SectionProblem {
                        k0_pos,
                        k_inf_pos,
                        k0_neg,
                        rbar_0_pos,
                        rbar_0_neg,
                        rbar_inf_pos,
                    };
                    section.check(section_descent_check(&lens, &prob, canonical).unwrap().ok);
                    section.check(
                        !section_descent_check(&lens, &prob, canonical + 1)
                            .unwrap()
                            .ok,
                    );
                }
            }
        }
    }

    let mut theorem = Suite::new("theorem_crosscheck");
    let mut refinement = Suite::new("classification_refinement");
    for &p in &all_primes {
        let spaces: Vec<LensSpace> = (1..p).map(|q| LensSpace::new(p, q).unwrap()).collect();
        for a in &spaces {
            for b in &spaces {
                if a.diffeomorphic(b).unwrap() {
                    refinement.check(a.homotopy_equivalent(b).unwrap());
                }
                if a.is_standard_range() && b.is_standard_range() {
                    let by_stretching = verify_theorem(p, a.q().value(), b.q().value()).unwrap();
                    let by_predicate = a.positive_contactomorphism_possible(b).unwrap();
                    theorem.check(by_stretching == by_predicate);
                    let by_congruence = b.q() == a.q() || b.q() == a.q().inv().unwrap();
                    theorem.check(by_stretching == by_congruence);
                }
            }
        }
    }

    let suites = [
        regularity, lifted, adjunction, cz_suite, section, theorem, refinement,
    ];
    let all_passed = suites.iter().all(|s| s.failures == 0);
    let env = envelope(
        "verify",
        json!({"p_max": p_max}),
        json!({
            "suites": suites.iter().map(Suite::to_json).collect::<Vec<_>>(),
            "all_passed": all_passed,
        }),
    );
    Ok(Outcome {
        envelope: env,
        math_failure: !all_passed,
    })
}

/// The index of the lifted curve, computed through the general formula with
/// the global trivialization, must equal `4d + 2p + 2`.
fn lifted_index_matches(lens: &LensSpace, comp: &PantsComponent) -> bool {
    let p = lens.p_value();
    let pos = vec![
        cz_contractible_sphere(comp.k0).unwrap(),
        cz_contractible_sphere(comp.k_inf).unwrap(),
    ];
    let neg: Vec<_> = (0..p)
        .map(|_| cz_contractible_sphere(comp.k).unwrap())
        .collect();
    let dims = vec![2i64; (p + 2) as usize];
    let ind =
        lens_moduli::fredholm::fredholm_index(0, &pos, &neg, &dims, (p + 2) as usize, 2).unwrap();
    let d = comp.k0 + comp.k_inf - p * comp.k;
    ind == 4 * d + 2 * p + 2
}

/// `require_standard` mirrored for CLI-facing messages.
trait RequireStandard {
    fn require_standard_cli(&self) -> Result<(), CliError>;
}

impl RequireStandard for LensSpace {
    fn require_standard_cli(&self) -> Result<(), CliError> {
        if self.is_standard_range() {
            Ok(())
        } else {
            Err(CliError(format!(
                "L({},{}) is outside the standard range 1 < q < p-1",
                self.p_value(),
                self.q().value()
            )))
        }
    }
}
