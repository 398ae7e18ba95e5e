//! Command-line value parsing: rationals, floats, and exact coefficient
//! tuples over a declared basis.

use std::sync::Arc;

use anyhow::{bail, Context, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow::Pow, Zero};

use tfrunner_core::exact::{ExactReal, Rational, RealBasis};

/// Parse "3", "-4/7", or "0.25" into an exact rational.
pub fn rational(token: &str) -> Result<Rational> {
    let t = token.trim();
    if t.is_empty() {
        bail!("empty rational token");
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().with_context(|| format!("bad numerator in {t:?}"))?;
        let d: BigInt = den.trim().parse().with_context(|| format!("bad denominator in {t:?}"))?;
        if d.is_zero() {
            bail!("zero denominator in {t:?}");
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_digits = if int_part.is_empty() || int_part == "-" { "0" } else { int_part };
        let i: BigInt = int_digits.parse().with_context(|| format!("bad number {t:?}"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let f: BigInt = if frac_part.is_empty() {
            BigInt::zero()
        } else {
            frac_part.parse().with_context(|| format!("bad fraction digits in {t:?}"))?
        };
        let signed_f = if negative { -f } else { f };
        return Ok(BigRational::new(i * &scale + signed_f, scale));
    }
    let n: BigInt = t.parse().with_context(|| format!("bad integer {t:?}"))?;
    Ok(BigRational::from(n))
}

pub fn float_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().with_context(|| format!("bad float {t:?}")))
        .collect()
}

/// Parse a comma-separated list of exact values. Without a basis each token
/// is a rational over the unit basis; with a basis each token is a
/// colon-separated coefficient tuple (one rational per basis element).
pub fn exact_values(s: &str, basis: Option<&Arc<RealBasis>>) -> Result<Vec<ExactReal>> {
    match basis {
        None => {
            let unit = RealBasis::rational();
            s.split(',')
                .map(|t| Ok(ExactReal::from_rational(&unit, rational(t)?)))
                .collect()
        }
        Some(basis) => s
            .split(',')
            .map(|tuple| {
                let coeffs: Result<Vec<Rational>> =
                    tuple.split(':').map(rational).collect();
                let coeffs = coeffs?;
                if coeffs.len() != basis.len() {
                    bail!(
                        "tuple {tuple:?} has {} coefficients but the basis has {} elements",
                        coeffs.len(),
                        basis.len()
                    );
                }
                Ok(ExactReal::new(basis.clone(), coeffs)?)
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tfrunner_core::exact::ratio;

    #[test]
    fn rational_forms() {
        assert_eq!(rational("3").unwrap(), ratio(3, 1));
        assert_eq!(rational("-4/7").unwrap(), ratio(-4, 7));
        assert_eq!(rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(rational("-1.5").unwrap(), ratio(-3, 2));
        assert!(rational("1/0").is_err());
        assert!(rational("abc").is_err());
    }

    #[test]
    fn exact_tuples() {
        let basis = RealBasis::one_sqrt2_sqrt3();
        let vals = exact_values("0:1:0,1:0:0", Some(&basis)).unwrap();
        assert_eq!(vals.len(), 2);
        assert!((vals[0].float_value() - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(exact_values("0:1", Some(&basis)).is_err());
    }

    #[test]
    fn plain_rationals() {
        let vals = exact_values("0,1,2,3", None).unwrap();
        assert_eq!(vals.len(), 4);
        assert_eq!(vals[3].float_value(), 3.0);
    }
}
