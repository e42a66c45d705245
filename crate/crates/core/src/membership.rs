//! The two comprehensive classes `K_{λ,δ}(φ,ψ)` and `S_{λ,δ}(φ,ψ)`.
//!
//! For `0 <= δ <= λ <= 1` the differential operators are
//!
//! ```text
//! L_K f = f' + (λ - δ + 2λδ) z f'' + λδ z² f'''
//! L_S f = (1 - λ + δ) f + (λ - δ) z f' + λδ z² f''
//! ```
//!
//! and `f` belongs to `K_{λ,δ}(φ,ψ)` when `L_K f / g' ≺ φ` for some
//! `g ∈ K(ψ)`, to `S_{λ,δ}(φ,ψ)` when `L_S f / g ≺ φ` for some `g ∈ S*(ψ)`.
//! Members are built by choosing `g` and the subordinate quotient from two
//! independent Schwarz witnesses and solving for the coefficients of `f`.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{make_convex, make_starlike, ClassError, GeneratedMember, PhiFamily, SchwarzSpec};
use crate::scalar::{format_rational, int, serde_rational, Rational, Scalar};
use crate::series::{Series, SeriesError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MembershipError {
    #[error("operator parameters need 0 <= delta <= lambda <= 1, got lambda = {lambda}, delta = {delta}")]
    Params { lambda: String, delta: String },
    #[error("class spec is for {got}, expected {expected}")]
    KindMismatch { expected: ClassKind, got: ClassKind },
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// `(λ, δ)` with `0 <= δ <= λ <= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorParams {
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub delta: Rational,
}

impl OperatorParams {
    pub fn new(lambda: Rational, delta: Rational) -> Result<Self, MembershipError> {
        let p = OperatorParams { lambda, delta };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), MembershipError> {
        if self.delta < 0u32 || self.delta > self.lambda || self.lambda > 1u32 {
            return Err(MembershipError::Params {
                lambda: format_rational(&self.lambda),
                delta: format_rational(&self.delta),
            });
        }
        Ok(())
    }

    /// `λ - δ + 2λδ`, the weight of `z f''` in `L_K`.
    pub fn mixed_weight(&self) -> Rational {
        &self.lambda - &self.delta + int(2) * &self.lambda * &self.delta
    }

    /// `λδ`.
    pub fn product(&self) -> Rational {
        &self.lambda * &self.delta
    }

    /// `D_K(n) = 1 + (n-1)(λ - δ + 2λδ) + (n-1)(n-2)λδ`.
    pub fn k_bracket(&self, n: usize) -> Rational {
        let m = int(n as i64 - 1);
        Rational::ONE + &m * self.mixed_weight() + &m * int(n as i64 - 2) * self.product()
    }

    /// `D_S(n) = 1 - λ + δ + n(λ - δ) + n(n-1)λδ`, the coefficient multiplier of `L_S`.
    /// Equal to [`OperatorParams::k_bracket`] as a polynomial.
    pub fn s_bracket(&self, n: usize) -> Rational {
        let n_r = int(n as i64);
        Rational::ONE - &self.lambda + &self.delta
            + &n_r * (&self.lambda - &self.delta)
            + &n_r * int(n as i64 - 1) * self.product()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassKind {
    /// `K_{λ,δ}(φ,ψ)`, auxiliary function convex.
    K,
    /// `S_{λ,δ}(φ,ψ)`, auxiliary function starlike.
    S,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassKind::K => f.write_str("K"),
            ClassKind::S => f.write_str("S"),
        }
    }
}

impl FromStr for ClassKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "K" | "k" => Ok(ClassKind::K),
            "S" | "s" => Ok(ClassKind::S),
            other => Err(format!("unknown class kind `{other}` (expected K or S)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub kind: ClassKind,
    pub params: OperatorParams,
    pub phi: PhiFamily,
    pub psi: PhiFamily,
}

impl ClassSpec {
    pub fn new(
        kind: ClassKind,
        params: OperatorParams,
        phi: PhiFamily,
        psi: PhiFamily,
    ) -> Result<Self, MembershipError> {
        let spec = ClassSpec { kind, params, phi, psi };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), MembershipError> {
        self.params.validate()?;
        self.phi.validate()?;
        self.psi.validate()?;
        Ok(())
    }

    /// Multiplier `D(n)` of `a_n` on the left of the coefficient identity.
    pub fn bracket(&self, n: usize) -> Rational {
        match self.kind {
            ClassKind::K => self.params.k_bracket(n),
            ClassKind::S => self.params.s_bracket(n),
        }
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[lambda={}, delta={}](phi={}, psi={})",
            self.kind,
            format_rational(&self.params.lambda),
            format_rational(&self.params.delta),
            self.phi,
            self.psi
        )
    }
}

/// A constructed member `f` together with everything that certifies it.
#[derive(Clone, Debug, PartialEq)]
pub struct MemberWitness<S: Scalar> {
    pub f: Series<S>,
    /// Auxiliary function, convex for `K`, starlike for `S`.
    pub g: GeneratedMember<S>,
    /// `φ∘ω`: `p = L_K f / g'` or `q = L_S f / g`.
    pub quotient: Series<S>,
    pub quotient_witness: SchwarzSpec,
    pub spec: ClassSpec,
}

/// `f' + (λ - δ + 2λδ) z f'' + λδ z² f'''`.
///
/// Built as `(z f' + μ z² f'' + λδ z³ f''') / z` from the lossless shifted
/// derivatives, so only the top coefficient is lost; the coefficient of
/// `z^{n-1}` is `n · D_K(n) · a_n`.
pub fn operator_lk<S: Scalar>(f: &Series<S>, params: &OperatorParams) -> Result<Series<S>, SeriesError> {
    let mu = S::from_rational(&params.mixed_weight());
    let ld = S::from_rational(&params.product());
    let shifted = f
        .z_shift_derivative(1)?
        .add(&f.z_shift_derivative(2)?.scale(&mu))?
        .add(&f.z_shift_derivative(3)?.scale(&ld))?;
    shifted.div_z()
}

/// `(1 - λ + δ) f + (λ - δ) z f' + λδ z² f''`; coefficient `n` is `D_S(n) · a_n`.
pub fn operator_ls<S: Scalar>(f: &Series<S>, params: &OperatorParams) -> Result<Series<S>, SeriesError> {
    let c0 = S::from_rational(&(Rational::ONE - &params.lambda + &params.delta));
    let c1 = S::from_rational(&(&params.lambda - &params.delta));
    let c2 = S::from_rational(&params.product());
    f.scale(&c0)
        .add(&f.z_shift_derivative(1)?.scale(&c1))?
        .add(&f.z_shift_derivative(2)?.scale(&c2))
}

fn expect_kind(spec: &ClassSpec, expected: ClassKind) -> Result<(), MembershipError> {
    spec.validate()?;
    if spec.kind != expected {
        return Err(MembershipError::KindMismatch { expected, got: spec.kind });
    }
    Ok(())
}

/// Member of `K_{λ,δ}(φ,ψ)`: `g = ` convex member from `w_g`, `p = φ∘ω_p`,
/// and `a_n` from
/// `n D_K(n) a_n = n b_n + Σ_{k=1}^{n-1} (n-k) c_k b_{n-k}`.
pub fn make_k_member<S: Scalar>(
    spec: &ClassSpec,
    w_g: &SchwarzSpec,
    w_p: &SchwarzSpec,
    order: usize,
) -> Result<MemberWitness<S>, MembershipError> {
    expect_kind(spec, ClassKind::K)?;
    let g = make_convex::<S>(&spec.psi, w_g, order)?;
    let p = spec.phi.compose_witness::<S>(w_p, order)?;
    let b = g.series.coeffs();
    let c = p.coeffs();
    let mut a = vec![S::zero(), S::one()];
    for n in 2..=order {
        let mut rhs = b[n].mul_ref(&S::from_i64(n as i64));
        for k in 1..n {
            if c[k].is_zero() || b[n - k].is_zero() {
                continue;
            }
            let term = c[k].mul_ref(&b[n - k]);
            rhs = rhs.add_ref(&term.mul_ref(&S::from_i64((n - k) as i64)));
        }
        let lhs = int(n as i64) * spec.params.k_bracket(n);
        a.push(rhs.div_ref(&S::from_rational(&lhs)));
    }
    Ok(MemberWitness {
        f: Series::from_prefix(a, order)?,
        g,
        quotient: p,
        quotient_witness: w_p.clone(),
        spec: spec.clone(),
    })
}

/// Member of `S_{λ,δ}(φ,ψ)`: `g = ` starlike member from `w_g`, `q = φ∘ω_q`,
/// and `a_n` from `D_S(n) a_n = b_n + Σ_{k=1}^{n-1} d_k b_{n-k}`.
pub fn make_s_member<S: Scalar>(
    spec: &ClassSpec,
    w_g: &SchwarzSpec,
    w_q: &SchwarzSpec,
    order: usize,
) -> Result<MemberWitness<S>, MembershipError> {
    expect_kind(spec, ClassKind::S)?;
    let g = make_starlike::<S>(&spec.psi, w_g, order)?;
    let q = spec.phi.compose_witness::<S>(w_q, order)?;
    let b = g.series.coeffs();
    let d = q.coeffs();
    let mut a = vec![S::zero(), S::one()];
    for n in 2..=order {
        let mut rhs = b[n].clone();
        for k in 1..n {
            if d[k].is_zero() || b[n - k].is_zero() {
                continue;
            }
            rhs = rhs.add_ref(&d[k].mul_ref(&b[n - k]));
        }
        a.push(rhs.div_ref(&S::from_rational(&spec.params.s_bracket(n))));
    }
    Ok(MemberWitness {
        f: Series::from_prefix(a, order)?,
        g,
        quotient: q,
        quotient_witness: w_q.clone(),
        spec: spec.clone(),
    })
}

/// Dispatches on `spec.kind`.
pub fn make_member<S: Scalar>(
    spec: &ClassSpec,
    w_g: &SchwarzSpec,
    w_q: &SchwarzSpec,
    order: usize,
) -> Result<MemberWitness<S>, MembershipError> {
    match spec.kind {
        ClassKind::K => make_k_member(spec, w_g, w_q, order),
        ClassKind::S => make_s_member(spec, w_g, w_q, order),
    }
}

impl<S: Scalar> MemberWitness<S> {
    /// Left side of the defining subordination recomputed from `f` and `g`:
    /// `L_K f / g'` or `L_S f / g`, valid through order `N - 1`.
    pub fn recomputed_quotient(&self) -> Result<Series<S>, SeriesError> {
        match self.spec.kind {
            ClassKind::K => operator_lk(&self.f, &self.spec.params)?.div(&self.g.series.derivative()),
            ClassKind::S => operator_ls(&self.f, &self.spec.params)?.div_z()?.div(&self.g.series.div_z()?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{exact, norm_sqr, rat, ExactComplex};

    type Ex = Series<ExactComplex>;

    fn ex(prefix: &[i64], order: usize) -> Ex {
        Series::from_i64s(prefix, order).unwrap()
    }

    fn params(l: Rational, d: Rational) -> OperatorParams {
        OperatorParams::new(l, d).unwrap()
    }

    fn sample_f(order: usize) -> Ex {
        let coeffs: Vec<ExactComplex> = (0..=order as i64)
            .map(|k| match k {
                0 => <ExactComplex as Scalar>::zero(),
                1 => <ExactComplex as Scalar>::one(),
                _ => exact(rat(3 - k, k + 1), rat(k % 3, 2)),
            })
            .collect();
        Series::from_coeffs(coeffs).unwrap()
    }

    fn grid() -> Vec<OperatorParams> {
        let steps: Vec<Rational> = (0..=6).map(|i| rat(i, 6)).collect();
        let mut out = vec![];
        for l in &steps {
            for d in steps.iter().filter(|d| *d <= l) {
                out.push(params(l.clone(), d.clone()));
            }
        }
        out
    }

    #[test]
    fn parameter_range() {
        assert!(OperatorParams::new(rat(1, 2), rat(1, 2)).is_ok());
        assert!(OperatorParams::new(rat(1, 2), rat(3, 4)).is_err());
        assert!(OperatorParams::new(rat(5, 4), rat(0, 1)).is_err());
        assert!(OperatorParams::new(rat(1, 2), rat(-1, 4)).is_err());
    }

    #[test]
    fn brackets_agree_as_polynomials() {
        for p in grid() {
            for n in 2..=30 {
                assert_eq!(p.k_bracket(n), p.s_bracket(n));
                assert!(p.k_bracket(n) >= Rational::ONE);
            }
        }
    }

    #[test]
    fn lk_collapses() {
        let f = sample_f(8);
        let zero = params(int(0), int(0));
        assert_eq!(operator_lk(&f, &zero).unwrap(), f.derivative());

        // λ = 1, δ = 0: f' + z f'' = (z f')'.
        let qcv = params(int(1), int(0));
        let lhs = operator_lk(&f, &qcv).unwrap();
        let rhs = f.z_shift_derivative(1).unwrap().derivative();
        for n in 0..8 {
            assert_eq!(lhs.coeff(n), rhs.coeff(n));
        }
        assert!(lhs.is_top_lossy());
    }

    #[test]
    fn lk_coefficient_of_cubic() {
        // f = z + z^3, λ = δ = 1: D_K(3) = 1 + 2·2 + 2·1·1 = 7, coefficient of z² is 3·7.
        let f = ex(&[0, 1, 0, 1], 5);
        let out = operator_lk(&f, &params(int(1), int(1))).unwrap();
        assert_eq!(out.coeff(2), ExactComplex::from_i64(21));
        // Matches the unshifted definition f' + 2 z f'' + z² f''' termwise.
        let d1 = f.derivative();
        let z = Ex::variable(5).unwrap();
        let direct = d1
            .add(&z.mul(&d1.derivative()).unwrap().scale(&ExactComplex::from_i64(2)))
            .unwrap()
            .add(&z.mul(&z).unwrap().mul(&d1.derivative().derivative()).unwrap())
            .unwrap();
        for n in 0..3 {
            assert_eq!(out.coeff(n), direct.coeff(n));
        }
    }

    #[test]
    fn lk_multiplier_is_n_times_bracket() {
        let f = sample_f(10);
        for p in grid() {
            let out = operator_lk(&f, &p).unwrap();
            for n in 1..=10 {
                let expected = f.coeff(n).mul_ref(&ExactComplex::from_rational(&(int(n as i64) * p.k_bracket(n))));
                assert_eq!(out.coeff(n - 1), expected);
            }
        }
    }

    #[test]
    fn ls_collapses_and_multiplier() {
        let f = sample_f(8);
        assert_eq!(operator_ls(&f, &params(int(0), int(0))).unwrap(), f);
        assert_eq!(operator_ls(&f, &params(int(1), int(0))).unwrap(), f.z_shift_derivative(1).unwrap());
        for p in grid() {
            let out = operator_ls(&f, &p).unwrap();
            for n in 1..=8 {
                assert_eq!(out.coeff(n), f.coeff(n).mul_ref(&ExactComplex::from_rational(&p.s_bracket(n))));
            }
        }
    }

    fn spec(kind: ClassKind, l: Rational, d: Rational, phi: PhiFamily, psi: PhiFamily) -> ClassSpec {
        ClassSpec::new(kind, params(l, d), phi, psi).unwrap()
    }

    #[test]
    fn zero_witnesses_give_identity() {
        let phi = PhiFamily::janowski(rat(1, 2), rat(-1, 2)).unwrap();
        for kind in [ClassKind::K, ClassKind::S] {
            let s = spec(kind, rat(2, 3), rat(1, 3), phi.clone(), PhiFamily::HalfPlane);
            let m = make_member::<ExactComplex>(&s, &SchwarzSpec::Zero, &SchwarzSpec::Zero, 10).unwrap();
            assert_eq!(m.f, Ex::variable(10).unwrap());
            assert_eq!(m.quotient, Ex::one(10).unwrap());
        }
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let s = spec(ClassKind::S, int(0), int(0), PhiFamily::HalfPlane, PhiFamily::HalfPlane);
        let err = make_k_member::<ExactComplex>(&s, &SchwarzSpec::Zero, &SchwarzSpec::Zero, 4).unwrap_err();
        assert_eq!(err, MembershipError::KindMismatch { expected: ClassKind::K, got: ClassKind::S });
    }

    #[test]
    fn quasi_convex_extremal_stays_below_one() {
        let s = spec(ClassKind::K, int(1), int(0), PhiFamily::janowski(int(1), int(-1)).unwrap(), PhiFamily::HalfPlane);
        let id = SchwarzSpec::identity();
        let m = make_k_member::<ExactComplex>(&s, &id, &id, 20).unwrap();
        for n in 2..=20 {
            assert!(norm_sqr(&m.f.coeff(n)) <= Rational::ONE, "n = {n}");
        }
    }

    #[test]
    fn close_to_convex_extremal_is_n() {
        let s = spec(ClassKind::K, int(0), int(0), PhiFamily::HalfPlane, PhiFamily::HalfPlane);
        let id = SchwarzSpec::identity();
        let m = make_k_member::<ExactComplex>(&s, &id, &id, 16).unwrap();
        for n in 1..=16 {
            assert_eq!(m.f.coeff(n), ExactComplex::from_i64(n as i64));
        }
    }

    #[test]
    fn close_to_starlike_extremal_below_n_squared() {
        let s = spec(ClassKind::S, int(0), int(0), PhiFamily::HalfPlane, PhiFamily::HalfPlane);
        let id = SchwarzSpec::identity();
        let m = make_s_member::<ExactComplex>(&s, &id, &id, 16).unwrap();
        for n in 2..=16 {
            let n2 = int((n * n) as i64);
            assert!(norm_sqr(&m.f.coeff(n)) <= &n2 * &n2);
            // (1+z)/(1-z) · z/(1-z)² = z(1+z)/(1-z)³ has coefficients n².
            assert_eq!(m.f.coeff(n), ExactComplex::from_rational(&n2));
        }
    }

    fn witnesses() -> Vec<SchwarzSpec> {
        vec![
            SchwarzSpec::identity(),
            SchwarzSpec::Monomial { m: 2 },
            SchwarzSpec::Rotation { theta: std::f64::consts::FRAC_PI_2 },
            SchwarzSpec::Blaschke { c: exact(rat(1, 3), rat(-1, 4)) },
            SchwarzSpec::Zero,
        ]
    }

    #[test]
    fn operator_round_trips() {
        let order = 10;
        let phi = PhiFamily::janowski(rat(2, 3), rat(-1, 3)).unwrap();
        let psi = PhiFamily::order_alpha(rat(1, 4)).unwrap();
        for kind in [ClassKind::K, ClassKind::S] {
            let s = spec(kind, rat(3, 4), rat(1, 2), phi.clone(), psi.clone());
            for wg in witnesses() {
                for wq in witnesses() {
                    let m = make_member::<ExactComplex>(&s, &wg, &wq, order).unwrap();
                    assert!(m.f.is_normalized());
                    let back = m.recomputed_quotient().unwrap();
                    for n in 0..order {
                        assert_eq!(back.coeff(n), m.quotient.coeff(n), "{kind} {wg} {wq} n = {n}");
                    }
                }
            }
        }
    }

    #[test]
    fn summation_and_division_forms_agree() {
        // a_n from [z^{n-1}](p g') / (n D_K(n)) versus the summation recurrence.
        let order = 12;
        let s = spec(
            ClassKind::K,
            rat(1, 2),
            rat(1, 4),
            PhiFamily::janowski(rat(1, 2), rat(-1, 2)).unwrap(),
            PhiFamily::HalfPlane,
        );
        let wg = SchwarzSpec::Blaschke { c: exact(rat(1, 5), rat(1, 5)) };
        let wp = SchwarzSpec::Monomial { m: 2 };
        let m = make_k_member::<ExactComplex>(&s, &wg, &wp, order).unwrap();
        let product = m.quotient.mul(&m.g.series.derivative()).unwrap();
        for n in 2..=order {
            let lhs = int(n as i64) * s.params.k_bracket(n);
            assert_eq!(m.f.coeff(n), product.coeff(n - 1).div_ref(&ExactComplex::from_rational(&lhs)));
        }

        let s = ClassSpec { kind: ClassKind::S, ..s };
        let m = make_s_member::<ExactComplex>(&s, &wg, &wp, order).unwrap();
        let product = m.quotient.mul(&m.g.series).unwrap();
        for n in 2..=order {
            assert_eq!(
                m.f.coeff(n),
                product.coeff(n).div_ref(&ExactComplex::from_rational(&s.params.s_bracket(n)))
            );
        }
    }

    #[test]
    fn quotient_first_coefficient_within_phi_prime() {
        let phi = PhiFamily::janowski(rat(3, 5), rat(-1, 5)).unwrap();
        let bound = phi.prime0_abs().unwrap();
        for kind in [ClassKind::K, ClassKind::S] {
            let s = spec(kind, rat(1, 3), int(0), phi.clone(), PhiFamily::HalfPlane);
            for wq in witnesses() {
                let m = make_member::<ExactComplex>(&s, &SchwarzSpec::identity(), &wq, 8).unwrap();
                assert_eq!(m.quotient.coeff(0), <ExactComplex as Scalar>::one());
                assert!(norm_sqr(&m.quotient.coeff(1)) <= &bound * &bound);
            }
        }
    }

    #[test]
    fn float_backend_tracks_exact() {
        let order = 14;
        let s = spec(
            ClassKind::S,
            rat(2, 3),
            rat(1, 5),
            PhiFamily::janowski(rat(1, 2), rat(-1, 3)).unwrap(),
            PhiFamily::order_alpha(rat(1, 3)).unwrap(),
        );
        let wg = SchwarzSpec::Blaschke { c: exact(rat(-1, 2), rat(1, 4)) };
        let wq = SchwarzSpec::Monomial { m: 3 };
        let exact = make_member::<ExactComplex>(&s, &wg, &wq, order).unwrap();
        let float = make_member::<num_complex::Complex64>(&s, &wg, &wq, order).unwrap();
        for n in 0..=order {
            assert!((exact.f.coeff(n).to_float() - float.f.coeff(n)).norm() < 1e-9);
        }
    }

    #[test]
    fn spec_serializes_with_rational_strings() {
        let s = spec(ClassKind::K, rat(1, 2), rat(1, 4), PhiFamily::HalfPlane, PhiFamily::order_alpha(rat(1, 3)).unwrap());
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"K","params":{"lambda":"1/2","delta":"1/4"},"phi":"halfplane","psi":"alpha:1/3"}"#
        );
        assert_eq!(serde_json::from_str::<ClassSpec>(&json).unwrap(), s);
    }
}
