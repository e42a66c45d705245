//! Comparison functions, Schwarz functions and generated members of the
//! Ma–Minda starlike and convex classes.
//!
//! Members are always *constructed* from a Schwarz witness `ω`: for a
//! starlike member `g` the quotient `z g'(z) / g(z)` is set to `ψ(ω(z))`, so
//! subordination to `ψ` holds by definition instead of being tested.

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::{NegativeOne, One, Zero};
use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{
    exact, f64_to_rational, format_rational, int, norm_sqr, parse_exact_complex, parse_rational, rat,
    rational_sqrt, Backend, ExactComplex, ParseScalarError, Rational, Scalar,
};
use crate::series::{Series, SeriesError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ClassError {
    #[error("Janowski parameters need -1 <= B < A <= 1, got A = {a}, B = {b}")]
    Janowski { a: String, b: String },
    #[error("order alpha needs 0 <= alpha < 1, got {0}")]
    OrderAlpha(String),
    #[error("user comparison series must satisfy phi(0) = 1")]
    UserSeriesNotUnit,
    #[error("|phi'(0)| = sqrt({0}) is not rational")]
    IrrationalDerivative(String),
    #[error("monomial Schwarz function needs m >= 1")]
    MonomialDegree,
    #[error("Blaschke parameter needs |c| < 1, got |c|^2 = {0}")]
    BlaschkeOutsideDisk(String),
    #[error("rotation by {0} rad has no exact representation; use the float backend")]
    InexactRotation(f64),
    #[error("rotation angle must be finite")]
    NonFiniteRotation,
    #[error("n must be at least 2, got {0}")]
    IndexTooSmall(usize),
    #[error("cannot parse `{text}`: {reason}")]
    Parse { text: String, reason: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

impl From<ParseScalarError> for ClassError {
    fn from(e: ParseScalarError) -> Self {
        ClassError::Parse { text: String::new(), reason: e.to_string() }
    }
}

/// A comparison function `φ` with `φ(0) = 1`, convex range and positive real part.
#[derive(Clone, Debug, PartialEq)]
pub enum PhiFamily {
    /// `(1 + A z) / (1 + B z)`.
    Janowski { a: Rational, b: Rational },
    /// `(1 + (1 - 2α) z) / (1 - z)`, i.e. Janowski with `A = 1 - 2α`, `B = -1`.
    OrderAlpha { alpha: Rational },
    /// `(1 + z) / (1 - z)`.
    HalfPlane,
    /// Arbitrary coefficients. Convexity and positivity of the range are the
    /// caller's responsibility; only `φ(0) = 1` is checked.
    UserSeries(Series<ExactComplex>),
}

impl PhiFamily {
    pub fn janowski(a: Rational, b: Rational) -> Result<Self, ClassError> {
        let fam = PhiFamily::Janowski { a, b };
        fam.validate()?;
        Ok(fam)
    }

    pub fn order_alpha(alpha: Rational) -> Result<Self, ClassError> {
        let fam = PhiFamily::OrderAlpha { alpha };
        fam.validate()?;
        Ok(fam)
    }

    pub fn validate(&self) -> Result<(), ClassError> {
        match self {
            PhiFamily::Janowski { a, b } => {
                if !(Rational::NEGATIVE_ONE <= *b && b < a && *a <= Rational::ONE) {
                    return Err(ClassError::Janowski { a: format_rational(a), b: format_rational(b) });
                }
            }
            PhiFamily::OrderAlpha { alpha } => {
                if *alpha < 0u32 || *alpha >= 1u32 {
                    return Err(ClassError::OrderAlpha(format_rational(alpha)));
                }
            }
            PhiFamily::HalfPlane => {}
            PhiFamily::UserSeries(s) => {
                if s.coeff(0) != ExactComplex::ONE {
                    return Err(ClassError::UserSeriesNotUnit);
                }
            }
        }
        Ok(())
    }

    /// `(A, B)` for the Möbius families.
    pub fn janowski_params(&self) -> Option<(Rational, Rational)> {
        match self {
            PhiFamily::Janowski { a, b } => Some((a.clone(), b.clone())),
            PhiFamily::OrderAlpha { alpha } => Some((Rational::ONE - int(2) * alpha, Rational::NEGATIVE_ONE)),
            PhiFamily::HalfPlane => Some((Rational::ONE, Rational::NEGATIVE_ONE)),
            PhiFamily::UserSeries(_) => None,
        }
    }

    pub fn is_builtin(&self) -> bool {
        !matches!(self, PhiFamily::UserSeries(_))
    }

    /// `φ` truncated at `order`. For the Möbius families the coefficients are
    /// `1, (A-B), (A-B)(-B), (A-B)(-B)^2, ...`.
    pub fn series<S: Scalar>(&self, order: usize) -> Result<Series<S>, ClassError> {
        self.validate()?;
        match self.janowski_params() {
            Some((a, b)) => {
                let mut coeffs = Vec::with_capacity(order + 1);
                coeffs.push(S::one());
                let mut c = a - &b;
                let ratio = -b;
                for _ in 1..=order {
                    coeffs.push(S::from_rational(&c));
                    c *= &ratio;
                }
                Ok(Series::from_prefix(coeffs, order)?)
            }
            None => {
                let PhiFamily::UserSeries(s) = self else { unreachable!() };
                let s = s.with_order(order)?;
                Ok(Series::from_prefix(s.coeffs().iter().map(S::from_exact), order)?)
            }
        }
    }

    /// `φ(ω(z))`. Möbius families use `(1 + Aω)/(1 + Bω)` directly, one
    /// series division instead of a full composition.
    pub fn compose_schwarz<S: Scalar>(&self, omega: &Series<S>) -> Result<Series<S>, ClassError> {
        self.validate()?;
        let order = omega.order();
        match self.janowski_params() {
            Some((a, b)) => {
                let one = Series::one(order)?;
                let num = one.add(&omega.scale(&S::from_rational(&a)))?;
                let den = one.add(&omega.scale(&S::from_rational(&b)))?;
                Ok(num.div(&den)?)
            }
            None => Ok(self.series::<S>(order)?.compose(omega)?),
        }
    }

    /// `φ∘ω` for a witness, keeping `ω = P/Q` as a quotient of short
    /// polynomials so the Janowski case reduces to one sparse division
    /// `(Q + A P) / (Q + B P)`.
    pub fn compose_witness<S: Scalar>(
        &self,
        witness: &SchwarzSpec,
        order: usize,
    ) -> Result<Series<S>, ClassError> {
        self.validate()?;
        match self.janowski_params() {
            Some((a, b)) => {
                let (p, q) = witness.rational_parts::<S>(order)?;
                let num = q.add(&p.scale(&S::from_rational(&a)))?;
                let den = q.add(&p.scale(&S::from_rational(&b)))?;
                Ok(num.div(&den)?)
            }
            None => self.compose_schwarz(&witness.series::<S>(order)?),
        }
    }

    /// `|φ'(0)|`, read from the first coefficient of the generated series.
    pub fn prime0_abs(&self) -> Result<Rational, ClassError> {
        let c1 = self.series::<ExactComplex>(1)?.coeff(1);
        let sq = norm_sqr(&c1);
        rational_sqrt(&sq).ok_or_else(|| ClassError::IrrationalDerivative(format_rational(&sq)))
    }
}

impl fmt::Display for PhiFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiFamily::Janowski { a, b } => write!(f, "janowski:{},{}", format_rational(a), format_rational(b)),
            PhiFamily::OrderAlpha { alpha } => write!(f, "alpha:{}", format_rational(alpha)),
            PhiFamily::HalfPlane => f.write_str("halfplane"),
            PhiFamily::UserSeries(s) => {
                f.write_str("series:")?;
                let parts: Vec<String> = s.coeffs().iter().map(format_exact_complex).collect();
                f.write_str(&parts.join(","))
            }
        }
    }
}

fn format_exact_complex(z: &ExactComplex) -> String {
    if z.imaginary == 0u32 {
        format_rational(&z.real)
    } else {
        let sign = if z.imaginary < 0u32 { "" } else { "+" };
        format!("{}{}{}i", format_rational(&z.real), sign, format_rational(&z.imaginary))
    }
}

fn parse_error(text: &str, reason: impl fmt::Display) -> ClassError {
    ClassError::Parse { text: text.to_string(), reason: reason.to_string() }
}

impl FromStr for PhiFamily {
    type Err = ClassError;

    /// `halfplane`, `janowski:A,B`, `alpha:α` or `series:c0,c1,...`.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        let (tag, args) = t.split_once(':').unwrap_or((t, ""));
        let fam = match tag.to_ascii_lowercase().as_str() {
            "halfplane" if args.is_empty() => PhiFamily::HalfPlane,
            "janowski" => {
                let (a, b) = args.split_once(',').ok_or_else(|| parse_error(t, "expected janowski:A,B"))?;
                PhiFamily::Janowski {
                    a: parse_rational(a).map_err(|e| parse_error(t, e))?,
                    b: parse_rational(b).map_err(|e| parse_error(t, e))?,
                }
            }
            "alpha" => PhiFamily::OrderAlpha { alpha: parse_rational(args).map_err(|e| parse_error(t, e))? },
            "series" => {
                let coeffs = args
                    .split(',')
                    .map(parse_exact_complex)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| parse_error(t, e))?;
                let order = coeffs.len().max(2) - 1;
                PhiFamily::UserSeries(Series::from_prefix(coeffs, order)?)
            }
            _ => return Err(parse_error(t, "expected halfplane, janowski:A,B, alpha:a or series:c0,c1,...")),
        };
        fam.validate()?;
        Ok(fam)
    }
}

impl Serialize for PhiFamily {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PhiFamily {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite family of Schwarz functions `ω` (analytic, `ω(0) = 0`, `|ω| < 1`).
#[derive(Clone, Debug, PartialEq)]
pub enum SchwarzSpec {
    /// `e^{iθ} z`.
    Rotation { theta: f64 },
    /// `z^m`.
    Monomial { m: u32 },
    /// `z (z + c) / (1 + c̄ z)` with `|c| < 1`.
    Blaschke { c: ExactComplex },
    /// `ω ≡ 0`.
    Zero,
}

/// Grid denominator for sampled Blaschke parameters.
pub const BLASCHKE_GRID: i64 = 40;
/// Sampled Blaschke parameters stay in the disk of this radius.
pub const BLASCHKE_RADIUS: (i64, i64) = (9, 10);
/// Sampled monomial degrees are `1..=MAX_SAMPLED_DEGREE`.
pub const MAX_SAMPLED_DEGREE: u32 = 4;

impl SchwarzSpec {
    pub fn identity() -> Self {
        SchwarzSpec::Monomial { m: 1 }
    }

    pub fn validate(&self) -> Result<(), ClassError> {
        match self {
            SchwarzSpec::Rotation { theta } if !theta.is_finite() => Err(ClassError::NonFiniteRotation),
            SchwarzSpec::Monomial { m: 0 } => Err(ClassError::MonomialDegree),
            SchwarzSpec::Blaschke { c } => {
                let r2 = norm_sqr(c);
                if r2 >= 1u32 {
                    Err(ClassError::BlaschkeOutsideDisk(format_rational(&r2)))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Rotations are exact only when the angle is a whole number of quarter
    /// turns (to within 1e-12 rad), where `e^{iθ}` is one of `±1, ±i`.
    pub fn exact_rotation(theta: f64) -> Option<(i64, i64)> {
        let quarters = theta / FRAC_PI_2;
        let nearest = quarters.round();
        if (quarters - nearest).abs() * FRAC_PI_2 > 1e-12 {
            return None;
        }
        Some(match (nearest as i64).rem_euclid(4) {
            0 => (1, 0),
            1 => (0, 1),
            2 => (-1, 0),
            _ => (0, -1),
        })
    }

    /// Whether the exact backend can represent this witness.
    pub fn is_exact(&self) -> bool {
        match self {
            SchwarzSpec::Rotation { theta } => Self::exact_rotation(*theta).is_some(),
            _ => true,
        }
    }

    pub fn series<S: Scalar>(&self, order: usize) -> Result<Series<S>, ClassError> {
        let (p, q) = self.rational_parts::<S>(order)?;
        match self {
            SchwarzSpec::Blaschke { .. } => Ok(p.div(&q)?),
            _ => Ok(p),
        }
    }

    /// Numerator and denominator polynomials with `ω = P / Q`. Only the
    /// Blaschke variant has a nontrivial denominator.
    pub fn rational_parts<S: Scalar>(&self, order: usize) -> Result<(Series<S>, Series<S>), ClassError> {
        self.validate()?;
        let one = Series::one(order)?;
        let p = match self {
            SchwarzSpec::Zero => Series::zero(order)?,
            SchwarzSpec::Monomial { m } => Series::monomial(S::one(), *m as usize, order)?,
            SchwarzSpec::Rotation { theta } => {
                let unit = match (S::BACKEND, Self::exact_rotation(*theta)) {
                    (_, Some((re, im))) => S::from_exact(&exact(int(re), int(im))),
                    (Backend::Float, None) => {
                        // f64 -> rational is lossless, so this reproduces e^{iθ} bit for bit.
                        let u = Complex64::from_polar(1.0, *theta);
                        S::from_exact(&exact(f64_rational(u.re), f64_rational(u.im)))
                    }
                    (Backend::Exact, None) => return Err(ClassError::InexactRotation(*theta)),
                };
                Series::monomial(unit, 1, order)?
            }
            SchwarzSpec::Blaschke { c } => {
                let c_s = S::from_exact(c);
                let num = Series::from_prefix([S::zero(), c_s.clone(), S::one()], order)?;
                let den = Series::from_prefix([S::one(), c_s.conj()], order)?;
                return Ok((num, den));
            }
        };
        Ok((p, one))
    }

    /// Uniform over the four variants; `θ ∈ [0, 2π)`, `m ∈ 1..=4`, and `c`
    /// uniform over the grid points of `(1/40)(ℤ + iℤ)` inside `|c| < 9/10`.
    pub fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        match rng.gen_range(0..4) {
            0 => SchwarzSpec::Rotation { theta: rng.gen_range(0.0..TAU) },
            1 => SchwarzSpec::Monomial { m: rng.gen_range(1..=MAX_SAMPLED_DEGREE) },
            2 => {
                let (rn, rd) = BLASCHKE_RADIUS;
                // |c| < rn/rd  <=>  (x^2 + y^2) rd^2 < (rn G)^2.
                let bound = rn * BLASCHKE_GRID;
                let reach = bound / rd;
                loop {
                    let x = rng.gen_range(-reach..=reach);
                    let y = rng.gen_range(-reach..=reach);
                    if (x * x + y * y) * rd * rd < bound * bound {
                        break SchwarzSpec::Blaschke {
                            c: exact(rat(x, BLASCHKE_GRID), rat(y, BLASCHKE_GRID)),
                        };
                    }
                }
            }
            _ => SchwarzSpec::Zero,
        }
    }
}

fn f64_rational(x: f64) -> Rational {
    f64_to_rational(x).unwrap_or(Rational::ZERO)
}

impl fmt::Display for SchwarzSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchwarzSpec::Rotation { theta } => write!(f, "rotation:{theta:?}"),
            SchwarzSpec::Monomial { m } => write!(f, "monomial:{m}"),
            SchwarzSpec::Blaschke { c } => {
                write!(f, "blaschke:{},{}", format_rational(&c.real), format_rational(&c.imaginary))
            }
            SchwarzSpec::Zero => f.write_str("zero"),
        }
    }
}

impl FromStr for SchwarzSpec {
    type Err = ClassError;

    /// `zero`, `identity`, `monomial:m`, `rotation:θ` (radians, decimal
    /// allowed) or `blaschke:re,im` with rational parts.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let t = text.trim();
        let (tag, args) = t.split_once(':').unwrap_or((t, ""));
        let spec = match tag.to_ascii_lowercase().as_str() {
            "zero" if args.is_empty() => SchwarzSpec::Zero,
            "identity" if args.is_empty() => SchwarzSpec::identity(),
            "monomial" => SchwarzSpec::Monomial { m: args.trim().parse().map_err(|e| parse_error(t, e))? },
            "rotation" => SchwarzSpec::Rotation { theta: args.trim().parse().map_err(|e| parse_error(t, e))? },
            "blaschke" => {
                let (re, im) = args.split_once(',').unwrap_or((args, "0"));
                SchwarzSpec::Blaschke {
                    c: exact(
                        parse_rational(re).map_err(|e| parse_error(t, e))?,
                        parse_rational(im).map_err(|e| parse_error(t, e))?,
                    ),
                }
            }
            _ => return Err(parse_error(t, "expected zero, identity, monomial:m, rotation:theta or blaschke:re,im")),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl Serialize for SchwarzSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SchwarzSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MemberKind {
    Starlike,
    Convex,
}

/// A normalized member `g(z) = z + Σ b_n z^n` of `S*(ψ)` or `K(ψ)` together
/// with the Schwarz function that witnesses it.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratedMember<S: Scalar> {
    pub series: Series<S>,
    pub witness: SchwarzSpec,
    pub psi: PhiFamily,
    pub kind: MemberKind,
}

/// Member of `S*(ψ)`: solves `z g' = g · ψ(ω)` coefficientwise,
/// `(n - 1) b_n = Σ_{k=1}^{n-1} p_k b_{n-k}` with `b_1 = 1`.
pub fn make_starlike<S: Scalar>(
    psi: &PhiFamily,
    witness: &SchwarzSpec,
    order: usize,
) -> Result<GeneratedMember<S>, ClassError> {
    let p = psi.compose_witness::<S>(witness, order)?;
    let pc = p.coeffs();
    let mut b: Vec<S> = vec![S::zero(), S::one()];
    for n in 2..=order {
        let mut acc = S::zero();
        for k in 1..n {
            if pc[k].is_zero() || b[n - k].is_zero() {
                continue;
            }
            acc = acc.add_ref(&pc[k].mul_ref(&b[n - k]));
        }
        b.push(acc.div_ref(&S::from_i64(n as i64 - 1)));
    }
    Ok(GeneratedMember {
        series: Series::from_prefix(b, order)?,
        witness: witness.clone(),
        psi: psi.clone(),
        kind: MemberKind::Starlike,
    })
}

/// Member of `K(ψ)`: `g` with `z g' = s` for the starlike member `s`, i.e.
/// `b_n = s_n / n`.
pub fn make_convex<S: Scalar>(
    psi: &PhiFamily,
    witness: &SchwarzSpec,
    order: usize,
) -> Result<GeneratedMember<S>, ClassError> {
    let starlike = make_starlike::<S>(psi, witness, order)?;
    let coeffs = starlike
        .series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, s)| if n == 0 { S::zero() } else { s.div_ref(&S::from_i64(n as i64)) })
        .collect();
    Ok(GeneratedMember {
        series: Series::from_coeffs(coeffs)?,
        witness: witness.clone(),
        psi: psi.clone(),
        kind: MemberKind::Convex,
    })
}

/// `∏_{j=0}^{count-1} (j + x)`.
pub fn rising_product(x: &Rational, count: usize) -> Rational {
    (0..count).fold(Rational::ONE, |acc, j| acc * (int(j as i64) + x))
}

pub fn factorial(n: usize) -> Rational {
    (2..=n).fold(Rational::ONE, |acc, k| acc * int(k as i64))
}

/// Coefficient bound for `K(ψ)`: `∏_{j=0}^{n-2}(j + |ψ'(0)|) / n!`.
pub fn lemma3_bound(psi1: &Rational, n: usize) -> Result<Rational, ClassError> {
    Ok(lemma4_bound(psi1, n)? / int(n as i64))
}

/// Coefficient bound for `S*(ψ)`: `∏_{j=0}^{n-2}(j + |ψ'(0)|) / (n-1)!`.
pub fn lemma4_bound(psi1: &Rational, n: usize) -> Result<Rational, ClassError> {
    if n < 2 {
        return Err(ClassError::IndexTooSmall(n));
    }
    Ok(rising_product(psi1, n - 1) / factorial(n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    type Ex = Series<ExactComplex>;

    fn ex(prefix: &[i64], order: usize) -> Ex {
        Series::from_i64s(prefix, order).unwrap()
    }

    fn cx(re: Rational, im: Rational) -> ExactComplex {
        exact(re, im)
    }

    #[test]
    fn sparse_composition_matches_dense() {
        let witnesses = [
            SchwarzSpec::Zero,
            SchwarzSpec::identity(),
            SchwarzSpec::Monomial { m: 3 },
            SchwarzSpec::Rotation { theta: std::f64::consts::PI },
            SchwarzSpec::Blaschke { c: cx(rat(-7, 40), rat(3, 10)) },
        ];
        let phis = [
            PhiFamily::HalfPlane,
            PhiFamily::janowski(rat(3, 5), rat(-1, 5)).unwrap(),
            PhiFamily::order_alpha(rat(1, 3)).unwrap(),
        ];
        for w in &witnesses {
            for phi in &phis {
                let sparse = phi.compose_witness::<ExactComplex>(w, 14).unwrap();
                let dense = phi.compose_schwarz(&w.series::<ExactComplex>(14).unwrap()).unwrap();
                assert_eq!(sparse, dense, "{phi} after {w}");
            }
        }
    }

    #[test]
    fn phi_series_examples() {
        assert_eq!(PhiFamily::HalfPlane.series::<ExactComplex>(3).unwrap(), ex(&[1, 2, 2, 2], 3));
        let j10 = PhiFamily::janowski(int(1), int(0)).unwrap();
        assert_eq!(j10.series::<ExactComplex>(3).unwrap(), ex(&[1, 1, 0, 0], 3));
        let j = PhiFamily::janowski(rat(2, 3), rat(-1, 4)).unwrap();
        assert_eq!(j.series::<ExactComplex>(2).unwrap().coeff(1), ExactComplex::from_rational(&rat(11, 12)));
    }

    #[test]
    fn janowski_closed_form_matches_division() {
        let (a, b) = (rat(3, 5), rat(-2, 7));
        let fam = PhiFamily::janowski(a.clone(), b.clone()).unwrap();
        let num = Ex::from_prefix([cx(int(1), int(0)), cx(a, int(0))], 10).unwrap();
        let den = Ex::from_prefix([cx(int(1), int(0)), cx(b, int(0))], 10).unwrap();
        assert_eq!(fam.series::<ExactComplex>(10).unwrap(), num.div(&den).unwrap());
    }

    #[test]
    fn family_aliases_agree() {
        let hp = PhiFamily::HalfPlane.series::<ExactComplex>(12).unwrap();
        assert_eq!(PhiFamily::janowski(int(1), int(-1)).unwrap().series::<ExactComplex>(12).unwrap(), hp);
        let alpha = PhiFamily::order_alpha(rat(1, 3)).unwrap();
        let jan = PhiFamily::janowski(rat(1, 3), int(-1)).unwrap();
        assert_eq!(alpha.series::<ExactComplex>(12).unwrap(), jan.series::<ExactComplex>(12).unwrap());
        assert_eq!(alpha.prime0_abs().unwrap(), rat(4, 3));
    }

    #[test]
    fn family_parameter_validation() {
        assert!(PhiFamily::janowski(int(1), int(1)).is_err());
        assert!(PhiFamily::janowski(rat(1, 2), int(-2)).is_err());
        assert!(PhiFamily::janowski(int(2), int(0)).is_err());
        assert!(PhiFamily::order_alpha(int(1)).is_err());
        assert!(PhiFamily::order_alpha(rat(-1, 5)).is_err());
        assert!("series:2,1".parse::<PhiFamily>().is_err());
    }

    #[test]
    fn user_series_derivative_must_be_rational() {
        let fam: PhiFamily = "series:1,1+i".parse().unwrap();
        assert!(matches!(fam.prime0_abs(), Err(ClassError::IrrationalDerivative(_))));
        let fam: PhiFamily = "series:1,3/5+4/5i,1".parse().unwrap();
        assert_eq!(fam.prime0_abs().unwrap(), int(1));
    }

    #[test]
    fn family_text_round_trip() {
        for text in ["halfplane", "janowski:1/2,-1/3", "alpha:1/4", "series:1,2,-1/2+3i"] {
            let fam: PhiFamily = text.parse().unwrap();
            assert_eq!(fam.to_string().parse::<PhiFamily>().unwrap(), fam);
        }
    }

    #[test]
    fn schwarz_series_examples() {
        assert_eq!(SchwarzSpec::identity().series::<ExactComplex>(4).unwrap(), Ex::variable(4).unwrap());
        let rot = SchwarzSpec::Rotation { theta: std::f64::consts::PI };
        assert_eq!(rot.series::<ExactComplex>(4).unwrap(), ex(&[0, -1], 4));
        let half = SchwarzSpec::Blaschke { c: cx(rat(1, 2), int(0)) };
        let s = half.series::<ExactComplex>(3).unwrap();
        let expected = [int(0), rat(1, 2), rat(3, 4), rat(-3, 8)];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(s.coeff(n), ExactComplex::from_rational(e));
        }
        assert_eq!(SchwarzSpec::Zero.series::<ExactComplex>(4).unwrap(), Ex::zero(4).unwrap());
        assert_eq!(SchwarzSpec::Monomial { m: 9 }.series::<ExactComplex>(4).unwrap(), Ex::zero(4).unwrap());
    }

    #[test]
    fn schwarz_domain_errors() {
        let outside = SchwarzSpec::Blaschke { c: cx(rat(3, 5), rat(4, 5)) };
        assert!(matches!(outside.series::<ExactComplex>(4), Err(ClassError::BlaschkeOutsideDisk(_))));
        assert!(SchwarzSpec::Monomial { m: 0 }.validate().is_err());
        let irrational = SchwarzSpec::Rotation { theta: 1.0 };
        assert!(!irrational.is_exact());
        assert_eq!(irrational.series::<ExactComplex>(3), Err(ClassError::InexactRotation(1.0)));
        let float = irrational.series::<Complex64>(3).unwrap();
        assert!((float.coeff(1) - Complex64::from_polar(1.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn quarter_turns_are_exact() {
        use std::f64::consts::PI;
        assert_eq!(SchwarzSpec::exact_rotation(0.0), Some((1, 0)));
        assert_eq!(SchwarzSpec::exact_rotation(PI / 2.0), Some((0, 1)));
        assert_eq!(SchwarzSpec::exact_rotation(-PI / 2.0), Some((0, -1)));
        assert_eq!(SchwarzSpec::exact_rotation(3.0 * PI), Some((-1, 0)));
        assert_eq!(SchwarzSpec::exact_rotation(0.3), None);
    }

    #[test]
    fn schwarz_text_round_trip() {
        for text in ["zero", "monomial:3", "rotation:1.25", "blaschke:1/2,-1/3"] {
            let w: SchwarzSpec = text.parse().unwrap();
            assert_eq!(w.to_string().parse::<SchwarzSpec>().unwrap(), w);
        }
        assert_eq!("identity".parse::<SchwarzSpec>().unwrap(), SchwarzSpec::identity());
        assert!("blaschke:1,0".parse::<SchwarzSpec>().is_err());
    }

    #[test]
    fn sampled_witnesses_are_valid_and_deterministic() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let draws: Vec<SchwarzSpec> = (0..400).map(|_| SchwarzSpec::sample(&mut rng)).collect();
        for w in &draws {
            w.validate().unwrap();
            if let SchwarzSpec::Blaschke { c } = w {
                assert!(norm_sqr(c) < rat(81, 100));
            }
            if let SchwarzSpec::Monomial { m } = w {
                assert!((1..=4).contains(m));
            }
        }
        for tag in ["rotation", "monomial", "blaschke", "zero"] {
            assert!(draws.iter().any(|w| w.to_string().starts_with(tag)), "{tag} never drawn");
        }
        let mut again = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let redraw: Vec<SchwarzSpec> = (0..400).map(|_| SchwarzSpec::sample(&mut again)).collect();
        assert_eq!(draws, redraw);
    }

    #[test]
    fn koebe_from_half_plane() {
        let g = make_starlike::<ExactComplex>(&PhiFamily::HalfPlane, &SchwarzSpec::identity(), 12).unwrap();
        for n in 1..=12 {
            assert_eq!(g.series.coeff(n), ExactComplex::from_i64(n as i64));
            if n >= 2 {
                assert_eq!(ExactComplex::from_rational(&lemma4_bound(&int(2), n).unwrap()), g.series.coeff(n));
            }
        }
        let k = make_convex::<ExactComplex>(&PhiFamily::HalfPlane, &SchwarzSpec::identity(), 12).unwrap();
        let mut ones = vec![1; 13];
        ones[0] = 0;
        assert_eq!(k.series, ex(&ones, 12));
    }

    #[test]
    fn zero_witness_gives_identity_member() {
        let psi = PhiFamily::janowski(rat(1, 2), rat(-1, 2)).unwrap();
        let z = Ex::variable(8).unwrap();
        assert_eq!(make_starlike::<ExactComplex>(&psi, &SchwarzSpec::Zero, 8).unwrap().series, z);
        assert_eq!(make_convex::<ExactComplex>(&psi, &SchwarzSpec::Zero, 8).unwrap().series, z);
    }

    #[test]
    fn convex_is_antiderivative_of_starlike() {
        let psi = PhiFamily::order_alpha(rat(1, 3)).unwrap();
        let w = SchwarzSpec::Blaschke { c: cx(rat(1, 4), rat(-1, 3)) };
        let s = make_starlike::<ExactComplex>(&psi, &w, 10).unwrap();
        let g = make_convex::<ExactComplex>(&psi, &w, 10).unwrap();
        assert_eq!(g.series.z_shift_derivative(1).unwrap(), s.series);
        assert!(g.series.is_normalized() && s.series.is_normalized());
    }

    #[test]
    fn starlike_quotient_round_trip() {
        let psi = PhiFamily::janowski(rat(1, 2), rat(-1, 3)).unwrap();
        let w = SchwarzSpec::Blaschke { c: cx(rat(-1, 5), rat(2, 5)) };
        let order = 10;
        let g = make_starlike::<ExactComplex>(&psi, &w, order).unwrap().series;
        // z g' / g = (z g')/z ÷ g/z keeps both sides away from the zero at 0.
        let quotient = g.z_shift_derivative(1).unwrap().div_z().unwrap().div(&g.div_z().unwrap()).unwrap();
        let target = psi.compose_schwarz(&w.series::<ExactComplex>(order).unwrap()).unwrap();
        for n in 0..order {
            assert_eq!(quotient.coeff(n), target.coeff(n), "n = {n}");
        }
    }

    #[test]
    fn lemma_bounds() {
        for n in 2..=15 {
            assert_eq!(lemma3_bound(&int(2), n).unwrap(), int(1));
            assert_eq!(lemma4_bound(&int(2), n).unwrap(), int(n as i64));
        }
        assert_eq!(lemma3_bound(&int(1), 3).unwrap(), rat(1, 3));
        assert_eq!(lemma4_bound(&int(2), 5).unwrap(), int(5));
        let x = rat(7, 5);
        for n in 2..=12 {
            assert_eq!(lemma4_bound(&x, n).unwrap(), int(n as i64) * lemma3_bound(&x, n).unwrap());
        }
        assert_eq!(lemma3_bound(&int(2), 1), Err(ClassError::IndexTooSmall(1)));
        assert_eq!(lemma4_bound(&int(2), 0), Err(ClassError::IndexTooSmall(0)));
    }
}
