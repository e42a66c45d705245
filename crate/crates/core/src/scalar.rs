//! Coefficient scalars.
//!
//! Two backends share one trait: exact Gaussian rationals (pairs of
//! arbitrary-precision fractions) and double-precision complex numbers with
//! an explicit comparison tolerance. Every series in this crate is generic
//! over [`Scalar`], so mixing backends inside one computation is a type
//! error rather than a runtime check.

use std::fmt;
use std::str::FromStr;

use malachite_base::num::arithmetic::traits::{AbsSquared, CheckedSqrt, Conjugate};
use malachite_base::num::basic::traits::{NegativeOne, One, Zero};
use malachite_base::num::conversion::traits::RoundingFrom;
use malachite_base::rounding_modes::RoundingMode;
use malachite_q::gaussian_rational::GaussianRational;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use malachite_q::Rational;

pub type ExactComplex = GaussianRational;
pub type FloatComplex = Complex64;

/// Comparison tolerance of the floating backend.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

pub trait Scalar: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn from_exact(z: &ExactComplex) -> Self;
    fn to_float(&self) -> FloatComplex;

    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    /// Panics on an exact zero divisor; callers check [`Scalar::is_negligible`] first.
    fn div_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn conj(&self) -> Self;

    /// Exactly zero.
    fn is_zero(&self) -> bool;
    /// Zero for the purpose of division and domain checks: exact zero on the
    /// exact backend, modulus within [`DEFAULT_TOLERANCE`] on the float one.
    fn is_negligible(&self) -> bool;
    /// Equality up to the backend tolerance (componentwise for floats).
    fn approx_eq(&self, rhs: &Self) -> bool;
    fn abs_f64(&self) -> f64;
    fn to_value(&self) -> ScalarValue;
}

impl Scalar for ExactComplex {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        GaussianRational::ZERO
    }
    fn one() -> Self {
        GaussianRational::ONE
    }
    fn from_i64(v: i64) -> Self {
        GaussianRational::from(Rational::from(v))
    }
    fn from_rational(q: &Rational) -> Self {
        GaussianRational::from(q.clone())
    }
    fn from_exact(z: &ExactComplex) -> Self {
        z.clone()
    }
    fn to_float(&self) -> FloatComplex {
        Complex64::new(rational_to_f64(&self.real), rational_to_f64(&self.imaginary))
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        // Real operands (family parameters, recurrence multipliers) skip the
        // four-product form.
        if rhs.imaginary == Rational::ZERO {
            exact(&self.real * &rhs.real, &self.imaginary * &rhs.real)
        } else if self.imaginary == Rational::ZERO {
            exact(&self.real * &rhs.real, &self.real * &rhs.imaginary)
        } else {
            self * rhs
        }
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        if rhs.imaginary == Rational::ZERO {
            exact(&self.real / &rhs.real, &self.imaginary / &rhs.real)
        } else {
            self / rhs
        }
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Conjugate::conjugate(self)
    }

    fn is_zero(&self) -> bool {
        self.real == Rational::ZERO && self.imaginary == Rational::ZERO
    }
    fn is_negligible(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn approx_eq(&self, rhs: &Self) -> bool {
        self == rhs
    }
    fn abs_f64(&self) -> f64 {
        self.to_float().norm()
    }
    fn to_value(&self) -> ScalarValue {
        ScalarValue::Exact { re: self.real.clone(), im: self.imaginary.clone() }
    }
}

impl Scalar for FloatComplex {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_rational(q: &Rational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }
    fn from_exact(z: &ExactComplex) -> Self {
        z.to_float()
    }
    fn to_float(&self) -> FloatComplex {
        *self
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn is_negligible(&self) -> bool {
        self.norm() <= DEFAULT_TOLERANCE
    }
    fn approx_eq(&self, rhs: &Self) -> bool {
        (self.re - rhs.re).abs() <= DEFAULT_TOLERANCE && (self.im - rhs.im).abs() <= DEFAULT_TOLERANCE
    }
    fn abs_f64(&self) -> f64 {
        self.norm()
    }
    fn to_value(&self) -> ScalarValue {
        ScalarValue::Float { re: self.re, im: self.im }
    }
}

/// `re + i im`.
pub fn exact(re: Rational, im: Rational) -> ExactComplex {
    GaussianRational { real: re, imaginary: im }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    f64::rounding_from(q, RoundingMode::Nearest).0
}

/// Exact value of a finite float.
pub fn f64_to_rational(x: f64) -> Option<Rational> {
    Rational::try_from(x).ok()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::from_signeds(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from(n)
}

/// Exact square root of a nonnegative rational, when it is itself rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if *q < 0u32 {
        return None;
    }
    q.checked_sqrt()
}

/// Squared modulus of an exact complex number.
pub fn norm_sqr(z: &ExactComplex) -> Rational {
    z.abs_squared()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseScalarError {
    #[error("empty numeric literal")]
    Empty,
    #[error("`{0}` is not an exact rational (expected an integer or p/q)")]
    NotRational(String),
    #[error("`{0}` has a zero denominator")]
    ZeroDenominator(String),
    #[error("`{0}` is not a complex rational (expected re, re+imi or imi)")]
    NotComplex(String),
}

/// Parses `p`, `p/q` and signed variants. Decimal literals are rejected so
/// exact inputs never pass through a binary float.
pub fn parse_rational(text: &str) -> Result<Rational, ParseScalarError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    if !digits(num.strip_prefix(['-', '+']).unwrap_or(num)) || !digits(den) {
        return Err(ParseScalarError::NotRational(t.to_string()));
    }
    if den.bytes().all(|b| b == b'0') {
        return Err(ParseScalarError::ZeroDenominator(t.to_string()));
    }
    Rational::from_str(&format!("{num}/{den}")).map_err(|_| ParseScalarError::NotRational(t.to_string()))
}

/// Parses `re`, `imi`, `re+imi` or `re-imi` with rational parts.
pub fn parse_exact_complex(text: &str) -> Result<ExactComplex, ParseScalarError> {
    let t = text.trim();
    if t.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(exact(parse_rational(t)?, Rational::ZERO));
    };
    // Split at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let bad = || ParseScalarError::NotComplex(t.to_string());
    let imag = |s: &str| match s {
        "" | "+" => Ok(Rational::ONE),
        "-" => Ok(Rational::NEGATIVE_ONE),
        _ => parse_rational(s).map_err(|_| bad()),
    };
    match split {
        Some(i) => Ok(exact(parse_rational(&body[..i]).map_err(|_| bad())?, imag(&body[i..])?)),
        None => Ok(exact(Rational::ZERO, imag(body)?)),
    }
}

/// `p/q` with a positive denominator, always including the denominator.
pub fn format_rational(q: &Rational) -> String {
    let sign = if *q < 0u32 { "-" } else { "" };
    format!("{sign}{}/{}", q.numerator_ref(), q.denominator_ref())
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }

    pub mod option {
        use super::*;

        pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match q {
                Some(q) => s.serialize_some(&format_rational(q)),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
            Option::<String>::deserialize(d)?
                .map(|t| parse_rational(&t).map_err(serde::de::Error::custom))
                .transpose()
        }
    }

    pub mod map {
        use super::*;
        use serde::ser::SerializeMap;
        use std::collections::BTreeMap;

        pub fn serialize<S: Serializer>(m: &BTreeMap<String, Rational>, s: S) -> Result<S::Ok, S::Error> {
            let mut out = s.serialize_map(Some(m.len()))?;
            for (k, v) in m {
                out.serialize_entry(k, &format_rational(v))?;
            }
            out.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<String, Rational>, D::Error> {
            BTreeMap::<String, String>::deserialize(d)?
                .into_iter()
                .map(|(k, v)| parse_rational(&v).map(|q| (k, q)).map_err(serde::de::Error::custom))
                .collect()
        }
    }
}

/// A coefficient in serialized form: exact parts as `"p/q"` strings, floating
/// parts as shortest round-trip decimals.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarValue {
    Exact {
        #[serde(with = "serde_rational")]
        re: Rational,
        #[serde(with = "serde_rational")]
        im: Rational,
    },
    Float {
        re: f64,
        im: f64,
    },
}

impl ScalarValue {
    pub fn of<S: Scalar>(value: &S) -> Self {
        value.to_value()
    }

    pub fn to_float(&self) -> FloatComplex {
        match self {
            ScalarValue::Exact { re, im } => Complex64::new(rational_to_f64(re), rational_to_f64(im)),
            ScalarValue::Float { re, im } => Complex64::new(*re, *im),
        }
    }

    /// `(re, im)` as text, for tabular output.
    pub fn text_parts(&self) -> (String, String) {
        match self {
            ScalarValue::Exact { re, im } => (format_rational(re), format_rational(im)),
            ScalarValue::Float { re, im } => (re.to_string(), im.to_string()),
        }
    }
}
