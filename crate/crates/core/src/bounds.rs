//! Closed-form coefficient bounds, all evaluated in exact rational arithmetic.
//!
//! Every bound is presented in the form `|a_n| <= value`, i.e. already
//! divided by the operator bracket `D_K(n) = D_S(n)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use malachite_base::num::basic::traits::{NegativeOne, One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classes::{factorial, lemma3_bound, lemma4_bound, rising_product, ClassError, PhiFamily};
use crate::membership::{ClassSpec, MembershipError, OperatorParams};
use crate::scalar::{format_rational, int, serde_rational, Rational};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundError {
    #[error("bounds are stated for n >= 2, got n = {0}")]
    IndexTooSmall(usize),
    #[error(transparent)]
    Params(#[from] MembershipError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: String },
    #[error("Janowski parameters need -1 <= B < A <= 1, got A = {a}, B = {b}")]
    Janowski { a: String, b: String },
    #[error("lambda must lie in [0, 1], got {0}")]
    Lambda(String),
    #[error("alpha and beta must lie in [0, 1), got alpha = {alpha}, beta = {beta}")]
    OrderRange { alpha: String, beta: String },
    #[error("formula `{formula}` needs input `{input}`")]
    MissingInput { formula: Formula, input: &'static str },
    #[error("unknown formula `{0}`")]
    UnknownFormula(String),
    #[error("improvement fails at n = {n}: {detail}")]
    NotImproved { n: usize, detail: String },
}

/// Inputs of the two main theorems: the operator parameters together with
/// `|φ'(0)|` and `|ψ'(0)|`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(flatten)]
    pub op: OperatorParams,
    #[serde(with = "serde_rational")]
    pub phi_prime0_abs: Rational,
    #[serde(with = "serde_rational")]
    pub psi_prime0_abs: Rational,
}

impl BoundParams {
    pub fn new(
        lambda: Rational,
        delta: Rational,
        phi_prime0_abs: Rational,
        psi_prime0_abs: Rational,
    ) -> Result<Self, BoundError> {
        let p = BoundParams { op: OperatorParams::new(lambda, delta)?, phi_prime0_abs, psi_prime0_abs };
        p.validate()?;
        Ok(p)
    }

    /// Reads `|φ'(0)|` and `|ψ'(0)|` off the generated family series.
    pub fn from_families(op: OperatorParams, phi: &PhiFamily, psi: &PhiFamily) -> Result<Self, BoundError> {
        let p = BoundParams { op, phi_prime0_abs: phi.prime0_abs()?, psi_prime0_abs: psi.prime0_abs()? };
        p.validate()?;
        Ok(p)
    }

    pub fn from_spec(spec: &ClassSpec) -> Result<Self, BoundError> {
        Self::from_families(spec.params.clone(), &spec.phi, &spec.psi)
    }

    pub fn validate(&self) -> Result<(), BoundError> {
        self.op.validate()?;
        nonnegative("|phi'(0)|", &self.phi_prime0_abs)?;
        nonnegative("|psi'(0)|", &self.psi_prime0_abs)
    }
}

fn nonnegative(name: &'static str, q: &Rational) -> Result<(), BoundError> {
    if *q < 0u32 {
        return Err(BoundError::Negative { name, value: format_rational(q) });
    }
    Ok(())
}

fn check_n(n: usize) -> Result<(), BoundError> {
    if n < 2 {
        return Err(BoundError::IndexTooSmall(n));
    }
    Ok(())
}

fn check_janowski(lambda: &Rational, a: &Rational, b: &Rational) -> Result<(), BoundError> {
    if *lambda < 0u32 || *lambda > 1u32 {
        return Err(BoundError::Lambda(format_rational(lambda)));
    }
    if !(Rational::NEGATIVE_ONE <= *b && b < a && *a <= 1u32) {
        return Err(BoundError::Janowski { a: format_rational(a), b: format_rational(b) });
    }
    Ok(())
}

/// `1 + Σ_{k=1}^{n-2} ∏_{j=0}^{n-k-2}(j + x) / (n-k-1)!`, which is empty
/// beyond the leading 1 when `n = 2`.
fn tail_sum(x: &Rational, n: usize) -> Rational {
    let mut total = Rational::ONE;
    for k in 1..=n.saturating_sub(2) {
        let m = n - k - 1;
        total += rising_product(x, m) / factorial(m);
    }
    total
}

/// Numerator parts shared by all `φ,ψ` bounds: `(∏_{j=0}^{n-2}(j+ψ1), tail)`.
fn parts(psi1: &Rational, n: usize) -> (Rational, Rational) {
    (rising_product(psi1, n - 1), tail_sum(psi1, n))
}

/// Bound for `K_{λ,δ}(φ,ψ)`:
/// `[∏(j+ψ1)/n! + (φ1/n)(1 + Σ ...)] / D_K(n)`.
pub fn thm1_bound(p: &BoundParams, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    p.validate()?;
    let (prod, tail) = parts(&p.psi_prime0_abs, n);
    let numerator = prod / factorial(n) + &p.phi_prime0_abs / int(n as i64) * tail;
    Ok(numerator / p.op.k_bracket(n))
}

/// Bound for `S_{λ,δ}(φ,ψ)`:
/// `[∏(j+ψ1)/(n-1)! + φ1(1 + Σ ...)] / D_S(n)`.
pub fn thm2_bound(p: &BoundParams, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    p.validate()?;
    let (prod, tail) = parts(&p.psi_prime0_abs, n);
    let numerator = prod / factorial(n - 1) + &p.phi_prime0_abs * tail;
    Ok(numerator / p.op.s_bracket(n))
}

/// Bound for `QK(φ,ψ)` written with the `1/n²` prefactors.
pub fn cor_qk_bound(phi1: &Rational, psi1: &Rational, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    nonnegative("|phi'(0)|", phi1)?;
    nonnegative("|psi'(0)|", psi1)?;
    let (prod, tail) = parts(psi1, n);
    let n2 = int((n * n) as i64);
    Ok(prod / (&n2 * factorial(n - 1)) + phi1 / n2 * tail)
}

/// Bound for `C(φ,ψ)`.
pub fn cor_c_bound(phi1: &Rational, psi1: &Rational, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    nonnegative("|phi'(0)|", phi1)?;
    nonnegative("|psi'(0)|", psi1)?;
    let (prod, tail) = parts(psi1, n);
    Ok(prod / factorial(n) + phi1 / int(n as i64) * tail)
}

/// Bound for `CS(φ,ψ)`.
pub fn cor_cs_bound(phi1: &Rational, psi1: &Rational, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    nonnegative("|phi'(0)|", phi1)?;
    nonnegative("|psi'(0)|", psi1)?;
    let (prod, tail) = parts(psi1, n);
    Ok(prod / factorial(n - 1) + phi1 * tail)
}

/// Close-to-convex functions of order `α` and type `β`:
/// `2(3-2β)(4-2β)···(n-2β)[n(1-α) + (α-β)] / n!`.
pub fn cor_libera_bound(alpha: &Rational, beta: &Rational, n: usize) -> Result<Rational, BoundError> {
    check_n(n)?;
    let in_range = |q: &Rational| *q >= 0u32 && *q < 1u32;
    if !in_range(alpha) || !in_range(beta) {
        return Err(BoundError::OrderRange { alpha: format_rational(alpha), beta: format_rational(beta) });
    }
    let two_beta = int(2) * beta;
    let prod = (3..=n).fold(int(2), |acc, j| acc * (int(j as i64) - &two_beta));
    let n_r = int(n as i64);
    Ok(prod * (&n_r * (Rational::ONE - alpha) + (alpha - beta)) / factorial(n))
}

fn janowski_bound(lambda: &Rational, a: &Rational, b: &Rational, n: usize, denom: Rational) -> Result<Rational, BoundError> {
    check_n(n)?;
    check_janowski(lambda, a, b)?;
    let m = int(n as i64 - 1);
    Ok((Rational::ONE + &m * (a - b) / denom) / (Rational::ONE + m * lambda))
}

/// `Q_CV(λ,A,B)`: `(1 + (n-1)(A-B)/2) / (1 + (n-1)λ)`.
pub fn cor1_bound(lambda: &Rational, a: &Rational, b: &Rational, n: usize) -> Result<Rational, BoundError> {
    janowski_bound(lambda, a, b, n, int(2))
}

/// `Q_ST(λ,A,B)`: `n` times [`cor1_bound`].
pub fn cor2_bound(lambda: &Rational, a: &Rational, b: &Rational, n: usize) -> Result<Rational, BoundError> {
    Ok(int(n as i64) * cor1_bound(lambda, a, b, n)?)
}

/// The earlier `Q_CV` bound `(1 + (n-1)(A-B)/(1-B)) / (1 + (n-1)λ)`.
pub fn thm_a_bound(lambda: &Rational, a: &Rational, b: &Rational, n: usize) -> Result<Rational, BoundError> {
    janowski_bound(lambda, a, b, n, Rational::ONE - b)
}

/// The earlier `Q_ST` bound, `n` times [`thm_a_bound`].
pub fn thm_b_bound(lambda: &Rational, a: &Rational, b: &Rational, n: usize) -> Result<Rational, BoundError> {
    Ok(int(n as i64) * thm_a_bound(lambda, a, b, n)?)
}

/// Identifiers used in tables and on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Thm1,
    Thm2,
    CorQk,
    CorC,
    CorCs,
    Libera,
    Cor1,
    Cor2,
    ThmA,
    ThmB,
    Lemma3,
    Lemma4,
}

impl Formula {
    pub const ALL: [Formula; 12] = [
        Formula::Thm1,
        Formula::Thm2,
        Formula::CorQk,
        Formula::CorC,
        Formula::CorCs,
        Formula::Libera,
        Formula::Cor1,
        Formula::Cor2,
        Formula::ThmA,
        Formula::ThmB,
        Formula::Lemma3,
        Formula::Lemma4,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Formula::Thm1 => "thm1",
            Formula::Thm2 => "thm2",
            Formula::CorQk => "cor_qk",
            Formula::CorC => "cor_c",
            Formula::CorCs => "cor_cs",
            Formula::Libera => "libera",
            Formula::Cor1 => "cor1",
            Formula::Cor2 => "cor2",
            Formula::ThmA => "thmA",
            Formula::ThmB => "thmB",
            Formula::Lemma3 => "lemma3",
            Formula::Lemma4 => "lemma4",
        }
    }

    pub fn evaluate(self, inputs: &FormulaInputs, n: usize) -> Result<Rational, BoundError> {
        let need = |input: &'static str, v: &Option<Rational>| {
            v.clone().ok_or(BoundError::MissingInput { formula: self, input })
        };
        let theorem_params = || -> Result<BoundParams, BoundError> {
            BoundParams::new(
                inputs.lambda.clone(),
                inputs.delta.clone(),
                need("phi1", &inputs.phi1)?,
                need("psi1", &inputs.psi1)?,
            )
        };
        match self {
            Formula::Thm1 => thm1_bound(&theorem_params()?, n),
            Formula::Thm2 => thm2_bound(&theorem_params()?, n),
            Formula::CorQk => cor_qk_bound(&need("phi1", &inputs.phi1)?, &need("psi1", &inputs.psi1)?, n),
            Formula::CorC => cor_c_bound(&need("phi1", &inputs.phi1)?, &need("psi1", &inputs.psi1)?, n),
            Formula::CorCs => cor_cs_bound(&need("phi1", &inputs.phi1)?, &need("psi1", &inputs.psi1)?, n),
            Formula::Libera => cor_libera_bound(&need("alpha", &inputs.alpha)?, &need("beta", &inputs.beta)?, n),
            Formula::Cor1 => cor1_bound(&inputs.lambda, &need("A", &inputs.a)?, &need("B", &inputs.b)?, n),
            Formula::Cor2 => cor2_bound(&inputs.lambda, &need("A", &inputs.a)?, &need("B", &inputs.b)?, n),
            Formula::ThmA => thm_a_bound(&inputs.lambda, &need("A", &inputs.a)?, &need("B", &inputs.b)?, n),
            Formula::ThmB => thm_b_bound(&inputs.lambda, &need("A", &inputs.a)?, &need("B", &inputs.b)?, n),
            Formula::Lemma3 => {
                let psi1 = need("psi1", &inputs.psi1)?;
                nonnegative("|psi'(0)|", &psi1)?;
                Ok(lemma3_bound(&psi1, n)?)
            }
            Formula::Lemma4 => {
                let psi1 = need("psi1", &inputs.psi1)?;
                nonnegative("|psi'(0)|", &psi1)?;
                Ok(lemma4_bound(&psi1, n)?)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Formula {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        Formula::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(t))
            .ok_or_else(|| BoundError::UnknownFormula(t.to_string()))
    }
}

/// The union of all formula inputs. `λ` and `δ` default to zero; the rest
/// are required only by the formulas that use them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaInputs {
    pub lambda: Rational,
    pub delta: Rational,
    pub phi1: Option<Rational>,
    pub psi1: Option<Rational>,
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub alpha: Option<Rational>,
    pub beta: Option<Rational>,
}

impl Default for FormulaInputs {
    fn default() -> Self {
        FormulaInputs {
            lambda: Rational::ZERO,
            delta: Rational::ZERO,
            phi1: None,
            psi1: None,
            a: None,
            b: None,
            alpha: None,
            beta: None,
        }
    }
}

/// One index `n` with the values of several formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub n: usize,
    #[serde(with = "serde_rational::map")]
    pub values: BTreeMap<String, Rational>,
}

pub fn bound_table(
    formulas: &[Formula],
    inputs: &FormulaInputs,
    ns: impl IntoIterator<Item = usize>,
) -> Result<Vec<BoundRow>, BoundError> {
    ns.into_iter()
        .map(|n| {
            let values = formulas
                .iter()
                .map(|f| Ok((f.id().to_string(), f.evaluate(inputs, n)?)))
                .collect::<Result<_, BoundError>>()?;
            Ok(BoundRow { n, values })
        })
        .collect()
}

/// Side-by-side `cor1, cor2, thmA, thmB` for `n = 2..=n_max`, with the
/// ratios `cor1/thmA` and `cor2/thmB`. Fails if any row is not an
/// improvement, which the algebra rules out for valid parameters.
pub fn compare_improvement(
    lambda: &Rational,
    a: &Rational,
    b: &Rational,
    n_max: usize,
) -> Result<Vec<BoundRow>, BoundError> {
    check_n(n_max)?;
    check_janowski(lambda, a, b)?;
    let mut rows = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let cor1 = cor1_bound(lambda, a, b, n)?;
        let cor2 = cor2_bound(lambda, a, b, n)?;
        let thm_a = thm_a_bound(lambda, a, b, n)?;
        let thm_b = thm_b_bound(lambda, a, b, n)?;
        if cor1 > thm_a || cor2 > thm_b {
            return Err(BoundError::NotImproved {
                n,
                detail: format!(
                    "cor1 = {}, thmA = {}, cor2 = {}, thmB = {}",
                    format_rational(&cor1),
                    format_rational(&thm_a),
                    format_rational(&cor2),
                    format_rational(&thm_b)
                ),
            });
        }
        let mut values = BTreeMap::new();
        values.insert("ratio_A".to_string(), &cor1 / &thm_a);
        values.insert("ratio_B".to_string(), &cor2 / &thm_b);
        values.insert("cor1".to_string(), cor1);
        values.insert("cor2".to_string(), cor2);
        values.insert("thmA".to_string(), thm_a);
        values.insert("thmB".to_string(), thm_b);
        rows.push(BoundRow { n, values });
    }
    Ok(rows)
}
