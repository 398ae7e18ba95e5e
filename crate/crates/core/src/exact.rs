//! Exact real numbers as rational coordinate vectors over a declared basis.
//!
//! A [`RealBasis`] is a finite list of real numbers, the first of which is
//! always the unit `1`, that the caller declares to be linearly independent
//! over ℚ. The library never attempts to prove that declaration (deciding
//! ℚ-independence from floating approximations is impossible in general);
//! it is a user contract. Under that contract an [`ExactReal`] — a vector
//! of exact rational coordinates — supports exact equality, addition, and
//! rational scaling, which makes integer-relation questions decidable.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::InputError;

/// Exact rational scalar used throughout the ℚ-linear layer.
pub type Rational = BigRational;

/// Build a rational from an integer pair, panicking on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A declared ℚ-linearly-independent basis of real numbers.
///
/// `labels[0]` is always `"1"` with float value exactly `1.0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RealBasis {
    labels: Vec<String>,
    float_values: Vec<f64>,
}

impl RealBasis {
    pub fn new(labels: Vec<String>, float_values: Vec<f64>) -> Result<Arc<Self>, InputError> {
        if labels.is_empty() {
            return Err(InputError::new("basis must contain at least the unit"));
        }
        if labels.len() != float_values.len() {
            return Err(InputError::new("basis labels and float values differ in length"));
        }
        if labels[0] != "1" || float_values[0] != 1.0 {
            return Err(InputError::new("first basis entry must be the unit 1"));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[i + 1..].contains(a) {
                return Err(InputError::new(format!("duplicate basis label {a:?}")));
            }
        }
        if float_values.iter().any(|v| !v.is_finite()) {
            return Err(InputError::new("basis float values must be finite"));
        }
        Ok(Arc::new(RealBasis { labels, float_values }))
    }

    /// The trivial basis `{1}`; exact reals over it are plain rationals.
    pub fn rational() -> Arc<Self> {
        Self::new(vec!["1".into()], vec![1.0]).expect("unit basis is valid")
    }

    /// Convenience basis `{1, √2, √3}` used by many desk-scale examples.
    pub fn one_sqrt2_sqrt3() -> Arc<Self> {
        Self::new(
            vec!["1".into(), "sqrt2".into(), "sqrt3".into()],
            vec![1.0, 2.0_f64.sqrt(), 3.0_f64.sqrt()],
        )
        .expect("valid basis")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn float_values(&self) -> &[f64] {
        &self.float_values
    }
}

/// An exact element of the ℚ-span of a [`RealBasis`].
#[derive(Debug, Clone)]
pub struct ExactReal {
    basis: Arc<RealBasis>,
    coeffs: Vec<Rational>,
}

impl PartialEq for ExactReal {
    fn eq(&self, other: &Self) -> bool {
        self.basis.labels() == other.basis.labels() && self.coeffs == other.coeffs
    }
}

impl Eq for ExactReal {}

impl ExactReal {
    pub fn new(basis: Arc<RealBasis>, coeffs: Vec<Rational>) -> Result<Self, InputError> {
        if coeffs.len() != basis.len() {
            return Err(InputError::new(format!(
                "coefficient vector has length {} but basis has {} elements",
                coeffs.len(),
                basis.len()
            )));
        }
        Ok(ExactReal { basis, coeffs })
    }

    /// The zero element of the span.
    pub fn zero(basis: &Arc<RealBasis>) -> Self {
        ExactReal {
            basis: basis.clone(),
            coeffs: vec![Rational::zero(); basis.len()],
        }
    }

    /// A plain rational, i.e. `r · 1`.
    pub fn from_rational(basis: &Arc<RealBasis>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); basis.len()];
        coeffs[0] = r;
        ExactReal { basis: basis.clone(), coeffs }
    }

    pub fn from_integer(basis: &Arc<RealBasis>, n: i64) -> Self {
        Self::from_rational(basis, ratio(n, 1))
    }

    /// The `i`-th basis element as an exact real.
    pub fn basis_element(basis: &Arc<RealBasis>, i: usize) -> Result<Self, InputError> {
        if i >= basis.len() {
            return Err(InputError::new("basis index out of range"));
        }
        let mut coeffs = vec![Rational::zero(); basis.len()];
        coeffs[i] = Rational::one();
        Ok(ExactReal { basis: basis.clone(), coeffs })
    }

    /// Build from small integer coordinates, one per basis element.
    pub fn from_int_coeffs(basis: &Arc<RealBasis>, ints: &[i64]) -> Result<Self, InputError> {
        Self::new(basis.clone(), ints.iter().map(|&n| ratio(n, 1)).collect())
    }

    pub fn basis(&self) -> &Arc<RealBasis> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Floating approximation via the declared basis values.
    pub fn float_value(&self) -> f64 {
        self.coeffs
            .iter()
            .zip(self.basis.float_values())
            .map(|(c, v)| c.to_f64().unwrap_or(f64::NAN) * v)
            .sum()
    }

    pub fn add(&self, other: &Self) -> Result<Self, InputError> {
        self.check_same_basis(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ExactReal { basis: self.basis.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, InputError> {
        self.check_same_basis(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ExactReal { basis: self.basis.clone(), coeffs })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        ExactReal {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ExactReal {
            basis: self.basis.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn check_same_basis(&self, other: &Self) -> Result<(), InputError> {
        if self.basis.labels() != other.basis.labels() {
            return Err(InputError::new("exact reals over different bases"));
        }
        Ok(())
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, label) in self.coeffs.iter().zip(self.basis.labels()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if label == "1" {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}·{label}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Serialization form: labels plus exact integer pairs.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExactRealDto {
    pub basis: Vec<String>,
    pub coeffs: Vec<(i64, i64)>,
}

impl ExactReal {
    pub fn to_dto(&self) -> Result<ExactRealDto, InputError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let n = c.numer().to_i64();
                let d = c.denom().to_i64();
                match (n, d) {
                    (Some(n), Some(d)) => Ok((n, d)),
                    _ => Err(InputError::new("coefficient exceeds i64 in serialization")),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactRealDto {
            basis: self.basis.labels().to_vec(),
            coeffs,
        })
    }

    pub fn from_dto(dto: &ExactRealDto, basis: &Arc<RealBasis>) -> Result<Self, InputError> {
        if dto.basis != basis.labels() {
            return Err(InputError::new("serialized basis labels do not match the declared basis"));
        }
        let coeffs = dto
            .coeffs
            .iter()
            .map(|&(n, d)| {
                if d == 0 {
                    Err(InputError::new("zero denominator in serialized rational"))
                } else {
                    Ok(ratio(n, d))
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(basis.clone(), coeffs)
    }
}

/// Serializable description of a basis, used by CLI basis files.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RealBasisDto {
    pub labels: Vec<String>,
    pub float_values: Vec<f64>,
}

impl RealBasisDto {
    pub fn build(&self) -> Result<Arc<RealBasis>, InputError> {
        RealBasis::new(self.labels.clone(), self.float_values.clone())
    }
}

impl From<&RealBasis> for RealBasisDto {
    fn from(b: &RealBasis) -> Self {
        RealBasisDto {
            labels: b.labels().to_vec(),
            float_values: b.float_values().to_vec(),
        }
    }
}

/// Sum `Σ p_j · λ_j` with integer weights, exactly.
pub fn integer_combination(weights: &[i64], values: &[ExactReal]) -> Result<ExactReal, InputError> {
    if weights.len() != values.len() {
        return Err(InputError::new("weight and value lists differ in length"));
    }
    if values.is_empty() {
        return Err(InputError::new("empty combination"));
    }
    let mut acc = ExactReal::zero(values[0].basis());
    for (&w, v) in weights.iter().zip(values) {
        if w != 0 {
            acc = acc.add(&v.scale(&ratio(w, 1)))?;
        }
    }
    Ok(acc)
}

/// Exact sign-aware absolute-value-free check that all entries share a basis.
pub fn check_common_basis(values: &[ExactReal]) -> Result<(), InputError> {
    if values.is_empty() {
        return Err(InputError::new("empty list of exact reals"));
    }
    let first = values[0].basis().labels();
    for v in &values[1..] {
        if v.basis().labels() != first {
            return Err(InputError::new("exact reals over mismatched bases"));
        }
    }
    Ok(())
}

/// Exact rational value if the element lies in ℚ·1, i.e. all non-unit
/// coordinates vanish.
pub fn as_rational(x: &ExactReal) -> Option<&Rational> {
    if x.coeffs()[1..].iter().all(|c| c.is_zero()) {
        Some(&x.coeffs()[0])
    } else {
        None
    }
}

/// Positivity of the float approximation, used only for ordering checks.
pub fn float_sign(x: &ExactReal) -> f64 {
    let v = x.float_value();
    if v.abs() < f64::EPSILON && x.is_zero() {
        0.0
    } else {
        v.signum() * v.abs().max(f64::MIN_POSITIVE)
    }
}
