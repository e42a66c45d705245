//! Randomized checks of the coefficient bounds on constructed members, plus
//! the exact identity checks between the bound formulas.
//!
//! Sample `i` of a run draws its two Schwarz witnesses from a ChaCha8 stream
//! keyed by `(seed, i)`, so reports do not depend on execution order.

use malachite_base::num::basic::traits::{NegativeOne, One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{
    compare_improvement, cor1_bound, cor2_bound, cor_c_bound, cor_cs_bound, cor_libera_bound, cor_qk_bound,
    thm1_bound, thm2_bound, thm_a_bound, thm_b_bound, BoundError, BoundParams,
};
use crate::classes::{lemma3_bound, lemma4_bound, ClassError, PhiFamily, SchwarzSpec};
use crate::membership::{make_member, ClassKind, ClassSpec, MembershipError, OperatorParams};
use crate::scalar::{
    format_rational, int, norm_sqr, rat, rational_to_f64, serde_rational, Backend, ExactComplex, FloatComplex,
    Rational, Scalar, DEFAULT_TOLERANCE,
};
use crate::series::Series;

pub const DEFAULT_SAMPLES: usize = 10_000;
pub const DEFAULT_VERIFY_ORDER: usize = 24;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error("verification needs at least one sample")]
    NoSamples,
    #[error("verification needs order N >= 4, got {0}")]
    OrderTooSmall(usize),
    #[error("tolerance must be finite and nonnegative, got {0}")]
    Tolerance(f64),
    #[error("family `{0}` is not built in; its range cannot be certified convex")]
    UnsupportedFamily(String),
    #[error("|{which}'(0)| is zero, so the bound degenerates")]
    DegenerateFamily { which: &'static str },
    #[error(transparent)]
    Membership(#[from] MembershipError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Bound(#[from] BoundError),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationConfig {
    pub spec: ClassSpec,
    pub order: usize,
    pub samples: usize,
    pub seed: u64,
    /// `exact` runs every witness exactly except irrational rotations, which
    /// fall back to floating point; `float` runs everything in floating point.
    pub backend: Backend,
    pub tolerance: f64,
}

impl VerificationConfig {
    pub fn new(spec: ClassSpec, seed: u64) -> Self {
        VerificationConfig {
            spec,
            order: DEFAULT_VERIFY_ORDER,
            samples: DEFAULT_SAMPLES,
            seed,
            backend: Backend::Exact,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.samples == 0 {
            return Err(VerifyError::NoSamples);
        }
        if self.order < 4 {
            return Err(VerifyError::OrderTooSmall(self.order));
        }
        if !self.tolerance.is_finite() || self.tolerance < 0.0 {
            return Err(VerifyError::Tolerance(self.tolerance));
        }
        self.spec.validate()?;
        for family in [&self.spec.phi, &self.spec.psi] {
            if !family.is_builtin() {
                return Err(VerifyError::UnsupportedFamily(family.to_string()));
            }
        }
        let p = BoundParams::from_spec(&self.spec)?;
        if p.phi_prime0_abs == 0u32 {
            return Err(VerifyError::DegenerateFamily { which: "phi" });
        }
        if p.psi_prime0_abs == 0u32 {
            return Err(VerifyError::DegenerateFamily { which: "psi" });
        }
        Ok(())
    }
}

/// Worst observed `|a_n| / bound(n)` at one index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexSummary {
    pub n: usize,
    #[serde(with = "serde_rational")]
    pub bound: Rational,
    pub worst_ratio: f64,
    /// Square of the worst ratio among exactly computed samples.
    #[serde(with = "serde_rational::option")]
    pub worst_exact_ratio_squared: Option<Rational>,
    pub worst_sample: usize,
    pub worst_witness: WitnessPair,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessPair {
    /// Witness of the auxiliary function `g`.
    pub g: SchwarzSpec,
    /// Witness of the subordinate quotient.
    pub quotient: SchwarzSpec,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Violation {
    /// `|a_n|` exceeds the theorem's bound.
    BoundExceeded { sample: usize, n: usize, ratio: f64, witness: WitnessPair },
    /// A quotient coefficient exceeds `|φ'(0)|`.
    QuotientCoefficient { sample: usize, m: usize, modulus: f64, witness: WitnessPair },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub spec: ClassSpec,
    pub order: usize,
    pub seed: u64,
    pub backend: Backend,
    pub tolerance: f64,
    pub sample_count: usize,
    pub exact_samples: usize,
    pub float_samples: usize,
    pub per_n: Vec<IndexSummary>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Largest ratio over all indices.
    pub fn worst_ratio(&self) -> f64 {
        self.per_n.iter().map(|s| s.worst_ratio).fold(0.0, f64::max)
    }
}

/// Per-scalar measurement of `|z|` against a rational bound.
trait Measure: Scalar {
    /// `(ratio, exact ratio squared if available, exceeds?)`.
    fn against(&self, bound: &Rational, bound_sq: &Rational, tolerance: f64) -> (f64, Option<Rational>, bool);
}

impl Measure for ExactComplex {
    fn against(&self, _bound: &Rational, bound_sq: &Rational, _tolerance: f64) -> (f64, Option<Rational>, bool) {
        let r2 = norm_sqr(self) / bound_sq;
        let exceeds = r2 > 1u32;
        (rational_to_f64(&r2).sqrt(), Some(r2), exceeds)
    }
}

impl Measure for FloatComplex {
    fn against(&self, bound: &Rational, _bound_sq: &Rational, tolerance: f64) -> (f64, Option<Rational>, bool) {
        let ratio = self.norm() / rational_to_f64(bound);
        (ratio, None, !(ratio <= 1.0 + tolerance))
    }
}

pub fn sample_witnesses(seed: u64, index: usize) -> WitnessPair {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let g = SchwarzSpec::sample(&mut rng);
    let quotient = SchwarzSpec::sample(&mut rng);
    WitnessPair { g, quotient }
}

struct Accumulator {
    per_n: Vec<IndexSummary>,
    violations: Vec<Violation>,
}

impl Accumulator {
    fn new(bounds: &[Rational]) -> Self {
        let placeholder = WitnessPair { g: SchwarzSpec::Zero, quotient: SchwarzSpec::Zero };
        let per_n = bounds
            .iter()
            .enumerate()
            .map(|(i, b)| IndexSummary {
                n: i + 2,
                bound: b.clone(),
                worst_ratio: -1.0,
                worst_exact_ratio_squared: None,
                worst_sample: 0,
                worst_witness: placeholder.clone(),
            })
            .collect();
        Accumulator { per_n, violations: Vec::new() }
    }

    fn record<S: Measure>(
        &mut self,
        sample: usize,
        witness: &WitnessPair,
        f: &Series<S>,
        quotient: &Series<S>,
        bounds_sq: &[Rational],
        phi1: &Rational,
        tolerance: f64,
    ) {
        for (i, summary) in self.per_n.iter_mut().enumerate() {
            let n = i + 2;
            let (ratio, exact_sq, exceeds) = f.coeff(n).against(&summary.bound, &bounds_sq[i], tolerance);
            if let Some(r2) = exact_sq {
                if summary.worst_exact_ratio_squared.as_ref().map_or(true, |w| r2 > *w) {
                    summary.worst_exact_ratio_squared = Some(r2);
                }
            }
            if ratio > summary.worst_ratio {
                summary.worst_ratio = ratio;
                summary.worst_sample = sample;
                summary.worst_witness = witness.clone();
            }
            if exceeds {
                self.violations.push(Violation::BoundExceeded { sample, n, ratio, witness: witness.clone() });
            }
        }
        let phi1_sq = phi1 * phi1;
        for m in 1..=quotient.order() {
            let (modulus, _, exceeds) = quotient.coeff(m).against(phi1, &phi1_sq, tolerance);
            if exceeds {
                let modulus = modulus * rational_to_f64(phi1);
                self.violations.push(Violation::QuotientCoefficient { sample, m, modulus, witness: witness.clone() });
            }
        }
    }
}

fn run_sample<S: Measure>(
    cfg: &VerificationConfig,
    acc: &mut Accumulator,
    sample: usize,
    witness: &WitnessPair,
    bounds_sq: &[Rational],
    phi1: &Rational,
) -> Result<(), VerifyError> {
    let m = make_member::<S>(&cfg.spec, &witness.g, &witness.quotient, cfg.order)?;
    acc.record(sample, witness, &m.f, &m.quotient, bounds_sq, phi1, cfg.tolerance);
    Ok(())
}

/// Verifies the bound matching `cfg.spec.kind`: Theorem 1 for `K`,
/// Theorem 2 for `S`. Violations are report content, not errors.
pub fn verify_class(cfg: &VerificationConfig) -> Result<VerificationReport, VerifyError> {
    cfg.validate()?;
    let p = BoundParams::from_spec(&cfg.spec)?;
    let (theorem, bounds) = match cfg.spec.kind {
        ClassKind::K => ("thm1", (2..=cfg.order).map(|n| thm1_bound(&p, n)).collect::<Result<Vec<_>, _>>()?),
        ClassKind::S => ("thm2", (2..=cfg.order).map(|n| thm2_bound(&p, n)).collect::<Result<Vec<_>, _>>()?),
    };
    let bounds_sq: Vec<Rational> = bounds.iter().map(|b| b * b).collect();
    let mut acc = Accumulator::new(&bounds);
    let (mut exact_samples, mut float_samples) = (0, 0);
    for sample in 0..cfg.samples {
        let witness = sample_witnesses(cfg.seed, sample);
        let exact = cfg.backend == Backend::Exact && witness.g.is_exact() && witness.quotient.is_exact();
        if exact {
            exact_samples += 1;
            run_sample::<ExactComplex>(cfg, &mut acc, sample, &witness, &bounds_sq, &p.phi_prime0_abs)?;
        } else {
            float_samples += 1;
            run_sample::<FloatComplex>(cfg, &mut acc, sample, &witness, &bounds_sq, &p.phi_prime0_abs)?;
        }
    }
    Ok(VerificationReport {
        theorem: theorem.to_string(),
        spec: cfg.spec.clone(),
        order: cfg.order,
        seed: cfg.seed,
        backend: cfg.backend,
        tolerance: cfg.tolerance,
        sample_count: cfg.samples,
        exact_samples,
        float_samples,
        per_n: acc.per_n,
        violations: acc.violations,
    })
}

pub fn verify_theorem1(cfg: &VerificationConfig) -> Result<VerificationReport, VerifyError> {
    if cfg.spec.kind != ClassKind::K {
        return Err(MembershipError::KindMismatch { expected: ClassKind::K, got: cfg.spec.kind }.into());
    }
    verify_class(cfg)
}

pub fn verify_theorem2(cfg: &VerificationConfig) -> Result<VerificationReport, VerifyError> {
    if cfg.spec.kind != ClassKind::S {
        return Err(MembershipError::KindMismatch { expected: ClassKind::S, got: cfg.spec.kind }.into());
    }
    verify_class(cfg)
}

/// Coefficient domination for `φ∘ω`: with `φ = 1 + A_1 z + ...` convex and
/// `φ∘ω = 1 + B_1 z + ...`, every `|B_n| <= |A_1|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubordinationCheck {
    pub phi: PhiFamily,
    pub witness: SchwarzSpec,
    pub order: usize,
    #[serde(with = "serde_rational")]
    pub a1_abs: Rational,
    /// `max_n |B_n| / |A_1|`.
    pub worst_ratio: f64,
    /// Indices `n` with `|B_n| > |A_1|`.
    pub violations: Vec<usize>,
}

impl SubordinationCheck {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn check_subordination_coeffs(
    phi: &PhiFamily,
    witness: &SchwarzSpec,
    order: usize,
) -> Result<SubordinationCheck, VerifyError> {
    if !phi.is_builtin() {
        return Err(VerifyError::UnsupportedFamily(phi.to_string()));
    }
    let a1 = phi.prime0_abs()?;
    let a1_sq = &a1 * &a1;
    let (worst_ratio, violations) = if witness.is_exact() {
        subordination_ratios::<ExactComplex>(phi, witness, order, &a1, &a1_sq)?
    } else {
        subordination_ratios::<FloatComplex>(phi, witness, order, &a1, &a1_sq)?
    };
    Ok(SubordinationCheck { phi: phi.clone(), witness: witness.clone(), order, a1_abs: a1, worst_ratio, violations })
}

fn subordination_ratios<S: Measure>(
    phi: &PhiFamily,
    witness: &SchwarzSpec,
    order: usize,
    a1: &Rational,
    a1_sq: &Rational,
) -> Result<(f64, Vec<usize>), VerifyError> {
    let composed = phi.compose_witness::<S>(witness, order)?;
    let mut worst: f64 = 0.0;
    let mut violations = Vec::new();
    for n in 1..=order {
        let (ratio, _, exceeds) = composed.coeff(n).against(a1, a1_sq, DEFAULT_TOLERANCE);
        worst = worst.max(ratio);
        if exceeds {
            violations.push(n);
        }
    }
    Ok((worst, violations))
}

/// One arrow of the specialization lattice, checked over a parameter grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub grid_points: usize,
    pub comparisons: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n_max: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn grid_points(&self) -> usize {
        self.checks.iter().map(|c| c.grid_points).sum()
    }
}

struct CheckBuilder {
    check: IdentityCheck,
}

impl CheckBuilder {
    fn new(identity: &str) -> Self {
        CheckBuilder {
            check: IdentityCheck { identity: identity.to_string(), grid_points: 0, comparisons: 0, failures: Vec::new() },
        }
    }

    fn point(&mut self) {
        self.check.grid_points += 1;
    }

    fn compare(&mut self, label: impl FnOnce() -> String, left: &Rational, right: &Rational) {
        self.check.comparisons += 1;
        if left != right {
            self.check.failures.push(format!("{}: {} != {}", label(), format_rational(left), format_rational(right)));
        }
    }
}

pub const LATTICE_N_MAX: usize = 20;

fn derivative_grid() -> Vec<Rational> {
    vec![rat(1, 3), rat(1, 2), int(1), rat(4, 3), rat(3, 2), int(2), rat(5, 2), int(3)]
}

/// Janowski pairs `(A, B)` with `-1 <= B < A <= 1`, on a grid of step 1/4.
pub fn janowski_grid() -> Vec<(Rational, Rational)> {
    let steps: Vec<Rational> = (-4..=4).map(|k| rat(k, 4)).collect();
    let mut out = Vec::new();
    for a in &steps {
        for b in &steps {
            if b < a {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn lambda_grid() -> Vec<Rational> {
    vec![Rational::ZERO, rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4), Rational::ONE]
}

/// Exact equality of every specialization arrow between the bound formulas,
/// for `n = 2..=20` over fixed rational grids.
pub fn verify_specialization_lattice() -> Result<IdentityReport, VerifyError> {
    let ns = 2..=LATTICE_N_MAX;
    let derivs = derivative_grid();
    let mut checks = Vec::new();

    let mut qk = CheckBuilder::new("thm1(lambda=1, delta=0) == cor_qk");
    let mut c = CheckBuilder::new("thm1(lambda=0, delta=0) == cor_c");
    let mut cs = CheckBuilder::new("thm2(lambda=0, delta=0) == cor_cs");
    for phi1 in &derivs {
        for psi1 in &derivs {
            let p_qk = BoundParams::new(Rational::ONE, Rational::ZERO, phi1.clone(), psi1.clone())?;
            let p_c = BoundParams::new(Rational::ZERO, Rational::ZERO, phi1.clone(), psi1.clone())?;
            qk.point();
            c.point();
            cs.point();
            for n in ns.clone() {
                let label = || format!("phi1 = {}, psi1 = {}, n = {n}", format_rational(phi1), format_rational(psi1));
                qk.compare(label, &thm1_bound(&p_qk, n)?, &cor_qk_bound(phi1, psi1, n)?);
                c.compare(label, &thm1_bound(&p_c, n)?, &cor_c_bound(phi1, psi1, n)?);
                cs.compare(label, &thm2_bound(&p_c, n)?, &cor_cs_bound(phi1, psi1, n)?);
            }
        }
    }
    checks.extend([qk.check, c.check, cs.check]);

    let mut libera = CheckBuilder::new("cor_c(2(1-alpha), 2(1-beta)) == libera(alpha, beta)");
    let orders: Vec<Rational> = (0..5).map(|k| rat(k, 5)).collect();
    for alpha in &orders {
        for beta in &orders {
            libera.point();
            let phi1 = int(2) * (Rational::ONE - alpha);
            let psi1 = int(2) * (Rational::ONE - beta);
            for n in ns.clone() {
                let label = || format!("alpha = {}, beta = {}, n = {n}", format_rational(alpha), format_rational(beta));
                libera.compare(label, &cor_c_bound(&phi1, &psi1, n)?, &cor_libera_bound(alpha, beta, n)?);
            }
        }
    }
    checks.push(libera.check);

    let mut q1 = CheckBuilder::new("thm1(delta=0, psi1=2, phi1=A-B) == cor1");
    let mut q2 = CheckBuilder::new("thm2(delta=0, psi1=2, phi1=A-B) == cor2");
    for lambda in lambda_grid() {
        for (a, b) in janowski_grid() {
            let p = BoundParams::new(lambda.clone(), Rational::ZERO, &a - &b, int(2))?;
            q1.point();
            q2.point();
            for n in ns.clone() {
                let label = || {
                    format!(
                        "lambda = {}, A = {}, B = {}, n = {n}",
                        format_rational(&lambda),
                        format_rational(&a),
                        format_rational(&b)
                    )
                };
                q1.compare(label, &thm1_bound(&p, n)?, &cor1_bound(&lambda, &a, &b, n)?);
                q2.compare(label, &thm2_bound(&p, n)?, &cor2_bound(&lambda, &a, &b, n)?);
            }
        }
    }
    checks.extend([q1.check, q2.check]);

    let mut ratio = CheckBuilder::new("thm2 == n * thm1");
    for lambda in lambda_grid() {
        for delta in lambda_grid().into_iter().filter(|d| *d <= lambda) {
            for (phi1, psi1) in derivs.iter().zip(derivs.iter().rev()) {
                let p = BoundParams::new(lambda.clone(), delta.clone(), phi1.clone(), psi1.clone())?;
                ratio.point();
                for n in ns.clone() {
                    let label = || format!("{p:?}, n = {n}");
                    ratio.compare(label, &thm2_bound(&p, n)?, &(int(n as i64) * thm1_bound(&p, n)?));
                }
            }
        }
    }
    checks.push(ratio.check);

    checks.push(classical_reductions(LATTICE_N_MAX)?);
    Ok(IdentityReport { n_max: LATTICE_N_MAX, checks })
}

/// The classical special values: convex `n`, close-to-star `n²`, quasi-convex
/// `1`, the Lemma bounds at `|ψ'(0)| = 2`, and Libera at `α = β = 0`.
pub fn classical_reductions(n_max: usize) -> Result<IdentityCheck, VerifyError> {
    let mut check = CheckBuilder::new("classical reductions");
    check.point();
    let (one, m1, two) = (Rational::ONE, Rational::NEGATIVE_ONE, int(2));
    for n in 2..=n_max {
        let n_r = int(n as i64);
        let label = |what: &'static str| move || format!("{what}, n = {n}");
        check.compare(label("cor1(0, 1, -1) == n"), &cor1_bound(&Rational::ZERO, &one, &m1, n)?, &n_r);
        check.compare(label("cor2(0, 1, -1) == n^2"), &cor2_bound(&Rational::ZERO, &one, &m1, n)?, &(&n_r * &n_r));
        check.compare(label("cor1(1, 1, -1) == 1"), &cor1_bound(&one, &one, &m1, n)?, &one);
        check.compare(label("lemma3(2) == 1"), &lemma3_bound(&two, n)?, &one);
        check.compare(label("lemma4(2) == n"), &lemma4_bound(&two, n)?, &n_r);
        check.compare(label("libera(0, 0) == n"), &cor_libera_bound(&Rational::ZERO, &Rational::ZERO, n)?, &n_r);
    }
    Ok(check.check)
}

/// Outcome of comparing the new Janowski bounds against the earlier ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ImprovementReport {
    pub grid_points: usize,
    pub comparisons: usize,
    pub strict: usize,
    pub equal: usize,
    /// Rows where the expected relation (`<` when `B > -1`, `=` when
    /// `B = -1`) does not hold.
    pub failures: Vec<String>,
}

impl ImprovementReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `cor1 <= thmA` and `cor2 <= thmB` over the grid `λ × (A, B)`, strict
/// exactly when `B > -1`.
pub fn verify_improvement_grid(n_max: usize) -> Result<ImprovementReport, VerifyError> {
    let mut report = ImprovementReport { grid_points: 0, comparisons: 0, strict: 0, equal: 0, failures: Vec::new() };
    for lambda in lambda_grid() {
        for (a, b) in janowski_grid() {
            report.grid_points += 1;
            for n in 2..=n_max {
                let pairs = [
                    ("cor1/thmA", cor1_bound(&lambda, &a, &b, n)?, thm_a_bound(&lambda, &a, &b, n)?),
                    ("cor2/thmB", cor2_bound(&lambda, &a, &b, n)?, thm_b_bound(&lambda, &a, &b, n)?),
                ];
                for (name, new, old) in pairs {
                    report.comparisons += 1;
                    let ok = if b == -1i32 { new == old } else { new < old };
                    if new == old {
                        report.equal += 1;
                    } else if new < old {
                        report.strict += 1;
                    }
                    if !ok {
                        report.failures.push(format!(
                            "{name} at lambda = {}, A = {}, B = {}, n = {n}: {} vs {}",
                            format_rational(&lambda),
                            format_rational(&a),
                            format_rational(&b),
                            format_rational(&new),
                            format_rational(&old)
                        ));
                    }
                }
            }
            // The row-level postcondition inside compare_improvement must agree.
            compare_improvement(&lambda, &a, &b, n_max)?;
        }
    }
    Ok(report)
}

/// The default class specs: the same eight `(λ, δ, φ, ψ)` choices for both
/// `K` and `S`.
pub fn default_presets() -> Vec<ClassSpec> {
    let rows: Vec<(Rational, Rational, PhiFamily, PhiFamily)> = vec![
        (Rational::ZERO, Rational::ZERO, PhiFamily::HalfPlane, PhiFamily::HalfPlane),
        (Rational::ONE, Rational::ZERO, PhiFamily::HalfPlane, PhiFamily::HalfPlane),
        (rat(1, 2), rat(1, 4), janowski(rat(1, 2), rat(-1, 2)), PhiFamily::HalfPlane),
        (Rational::ONE, Rational::ONE, janowski(Rational::ONE, Rational::ZERO), alpha(rat(1, 3))),
        (rat(1, 3), Rational::ZERO, alpha(rat(1, 4)), alpha(rat(1, 2))),
        (rat(3, 4), rat(1, 2), janowski(rat(3, 5), rat(-1, 5)), janowski(Rational::ONE, rat(-1, 3))),
        (Rational::ONE, rat(1, 2), janowski(rat(1, 3), Rational::NEGATIVE_ONE), alpha(Rational::ZERO)),
        (rat(2, 3), rat(2, 3), PhiFamily::HalfPlane, janowski(rat(1, 2), rat(-1, 2))),
    ];
    let mut out = Vec::new();
    for kind in [ClassKind::K, ClassKind::S] {
        for (lambda, delta, phi, psi) in &rows {
            let params = OperatorParams::new(lambda.clone(), delta.clone()).expect("preset parameters are valid");
            out.push(ClassSpec::new(kind, params, phi.clone(), psi.clone()).expect("preset spec is valid"));
        }
    }
    out
}

fn janowski(a: Rational, b: Rational) -> PhiFamily {
    PhiFamily::janowski(a, b).expect("preset Janowski parameters are valid")
}

fn alpha(a: Rational) -> PhiFamily {
    PhiFamily::order_alpha(a).expect("preset order is valid")
}

/// Declarative description of a full verification run. Every key is
/// top level; the optional `kind`, `lambda`, `delta`, `phi`, `psi` keys
/// describe one extra class spec and must appear together.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub schema_version: u32,
    #[serde(default = "default_order")]
    pub order: usize,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_backend")]
    pub backend: Backend,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Run the identity and improvement checks as well.
    #[serde(default = "default_true")]
    pub identities: bool,
    /// Include the sixteen built-in class specs.
    #[serde(default = "default_true")]
    pub presets: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<ClassKind>,
    #[serde(default, with = "serde_rational::option", skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Rational>,
    #[serde(default, with = "serde_rational::option", skip_serializing_if = "Option::is_none")]
    pub delta: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<PhiFamily>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi: Option<PhiFamily>,
}

pub const SUITE_SCHEMA_VERSION: u32 = 1;

fn default_order() -> usize {
    DEFAULT_VERIFY_ORDER
}
fn default_samples() -> usize {
    DEFAULT_SAMPLES
}
fn default_backend() -> Backend {
    Backend::Exact
}
fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}
fn default_true() -> bool {
    true
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            schema_version: SUITE_SCHEMA_VERSION,
            order: DEFAULT_VERIFY_ORDER,
            samples: DEFAULT_SAMPLES,
            seed: 0,
            backend: Backend::Exact,
            tolerance: DEFAULT_TOLERANCE,
            identities: true,
            presets: true,
            kind: None,
            lambda: None,
            delta: None,
            phi: None,
            psi: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub identities: Option<IdentityReport>,
    pub improvement: Option<ImprovementReport>,
    pub runs: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.identities.as_ref().map_or(true, IdentityReport::passed)
            && self.improvement.as_ref().map_or(true, ImprovementReport::passed)
            && self.runs.iter().all(VerificationReport::passed)
    }

    pub fn violation_count(&self) -> usize {
        self.runs.iter().map(|r| r.violations.len()).sum()
    }
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unsupported config schema_version {0} (expected {SUITE_SCHEMA_VERSION})")]
    Schema(u32),
    #[error("config lists no class specs")]
    Empty,
    #[error("config keys kind, lambda, delta, phi, psi must be given together")]
    PartialClass,
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl SuiteConfig {
    /// The extra class spec, if the config names one.
    pub fn extra_spec(&self) -> Result<Option<ClassSpec>, SuiteError> {
        match (&self.kind, &self.lambda, &self.delta, &self.phi, &self.psi) {
            (None, None, None, None, None) => Ok(None),
            (Some(kind), Some(lambda), Some(delta), Some(phi), Some(psi)) => {
                let params = OperatorParams::new(lambda.clone(), delta.clone()).map_err(VerifyError::from)?;
                let spec = ClassSpec::new(*kind, params, phi.clone(), psi.clone()).map_err(VerifyError::from)?;
                Ok(Some(spec))
            }
            _ => Err(SuiteError::PartialClass),
        }
    }

    pub fn specs(&self) -> Result<Vec<ClassSpec>, SuiteError> {
        let mut specs = if self.presets { default_presets() } else { Vec::new() };
        specs.extend(self.extra_spec()?);
        Ok(specs)
    }
}

/// Runs everything a config asks for. Class specs run in listed order with
/// the config seed, so equal configs give equal reports.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport, SuiteError> {
    if cfg.schema_version != SUITE_SCHEMA_VERSION {
        return Err(SuiteError::Schema(cfg.schema_version));
    }
    let specs = cfg.specs()?;
    if specs.is_empty() && !cfg.identities {
        return Err(SuiteError::Empty);
    }
    let mut runs = Vec::with_capacity(specs.len());
    for spec in specs {
        let vc = VerificationConfig {
            spec,
            order: cfg.order,
            samples: cfg.samples,
            seed: cfg.seed,
            backend: cfg.backend,
            tolerance: cfg.tolerance,
        };
        runs.push(verify_class(&vc)?);
    }
    let (identities, improvement) = if cfg.identities {
        (Some(verify_specialization_lattice()?), Some(verify_improvement_grid(LATTICE_N_MAX)?))
    } else {
        (None, None)
    };
    Ok(SuiteReport { identities, improvement, runs })
}
