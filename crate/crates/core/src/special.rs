//! Scalar special functions: Pochhammer symbols, the Euler Beta function and
//! generalized hypergeometric series ₚF_q.
//!
//! ```text
//! pFq(a_1..a_p; b_1..b_q; x) = Σ_k (a_1)_k···(a_p)_k / ((b_1)_k···(b_q)_k) · x^k / k!
//! ```
//!
//! The series is summed with the multiplicative term recurrence
//! `t_{k+1} = t_k · Π(a_j + k) / Π(b_j + k) · x / (k + 1)`, carried in
//! double-double arithmetic so that cancellation between terms (negative or
//! complex arguments) does not eat the double-precision result.

use num_complex::Complex64;

use crate::dd::{CDd, Dd};
use crate::error::{Error, Result};

/// Below this `k` the Pochhammer symbol is formed as an explicit product.
const POCHHAMMER_PRODUCT_MAX: u64 = 64;

/// Consecutive small terms required before the series is declared summed.
const SMALL_TERMS_REQUIRED: usize = 3;

pub const DEFAULT_TOLERANCE: f64 = 1e-14;
pub const DEFAULT_MAX_TERMS: usize = 100_000;

/// Natural log of `|Γ(x)|`.
#[inline]
pub fn ln_gamma(x: f64) -> f64 {
    libm::lgamma(x)
}

/// A real number stored as sign and natural log of its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLn {
    /// -1, 0 or +1.
    pub sign: f64,
    /// `ln |value|`; `-inf` when the value is zero.
    pub ln_abs: f64,
}

impl SignedLn {
    pub const ZERO: SignedLn = SignedLn {
        sign: 0.0,
        ln_abs: f64::NEG_INFINITY,
    };

    pub fn positive(ln_abs: f64) -> Self {
        SignedLn { sign: 1.0, ln_abs }
    }

    /// Converts to linear scale, failing when the magnitude is not representable.
    pub fn to_f64(self) -> Result<f64> {
        if self.sign == 0.0 {
            return Ok(0.0);
        }
        let v = self.ln_abs.exp();
        if !v.is_finite() {
            return Err(Error::Overflow {
                ln_magnitude: self.ln_abs,
            });
        }
        Ok(self.sign * v)
    }
}

/// Rising factorial `(a)_k = a (a+1) ··· (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: f64, k: u64) -> Result<f64> {
    if k == 0 {
        return Ok(1.0);
    }
    if k <= POCHHAMMER_PRODUCT_MAX || a <= 0.0 {
        let mut p = 1.0;
        for j in 0..k {
            p *= a + j as f64;
            if p == 0.0 {
                return Ok(0.0);
            }
        }
        if p.is_finite() {
            return Ok(p);
        }
        return Err(Error::Overflow {
            ln_magnitude: ln_pochhammer(a, k).ln_abs,
        });
    }
    ln_pochhammer(a, k).to_f64()
}

/// `(a)_k` in sign/log-magnitude form; never overflows.
pub fn ln_pochhammer(a: f64, k: u64) -> SignedLn {
    if k == 0 {
        return SignedLn::positive(0.0);
    }
    if a > 0.0 && k > POCHHAMMER_PRODUCT_MAX {
        return SignedLn::positive(ln_gamma(a + k as f64) - ln_gamma(a));
    }
    let mut sign = 1.0;
    let mut ln_abs = 0.0;
    for j in 0..k {
        let f = a + j as f64;
        if f == 0.0 {
            return SignedLn::ZERO;
        }
        if f < 0.0 {
            sign = -sign;
        }
        ln_abs += f.abs().ln();
    }
    SignedLn { sign, ln_abs }
}

/// Euler Beta function `B(x, y) = Γ(x)Γ(y)/Γ(x+y)` for `x, y > 0`.
pub fn euler_beta(x: f64, y: f64) -> Result<f64> {
    SignedLn::positive(ln_euler_beta(x, y)?).to_f64()
}

/// `ln B(x, y)` for `x, y > 0`.
pub fn ln_euler_beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0) {
        return Err(Error::Domain(format!(
            "Euler Beta requires x > 0 and y > 0, got ({x}, {y})"
        )));
    }
    Ok(ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y))
}

/// Principal `ln(1 - x)` for `|x| < 1`, accurate for small `|x|`.
pub(crate) fn ln_one_minus(x: Complex64) -> Complex64 {
    // |1 - x|² - 1 = -2 Re x + |x|²
    let re = 0.5 * (x.norm_sqr() - 2.0 * x.re).ln_1p();
    let im = (-x.im).atan2(1.0 - x.re);
    Complex64::new(re, im)
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

/// Parameters and argument of a generalized hypergeometric series.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    numerator: Vec<f64>,
    denominator: Vec<f64>,
    argument: Complex64,
}

impl HypergeometricSpec {
    /// Builds `pFq(numerator; denominator; argument)`.
    ///
    /// Accepts `p <= q + 1`; denominator parameters must not be zero or a
    /// negative integer.
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>, argument: Complex64) -> Result<Self> {
        if numerator.len() > denominator.len() + 1 {
            return Err(Error::InvalidParameter(format!(
                "{}F{} series has zero radius of convergence",
                numerator.len(),
                denominator.len()
            )));
        }
        if let Some(b) = denominator.iter().find(|b| is_nonpositive_integer(**b)) {
            return Err(Error::InvalidParameter(format!(
                "denominator parameter {b} is zero or a negative integer"
            )));
        }
        if numerator
            .iter()
            .chain(denominator.iter())
            .any(|v| !v.is_finite())
            || !argument.re.is_finite()
            || !argument.im.is_finite()
        {
            return Err(Error::InvalidParameter(
                "hypergeometric parameters and argument must be finite".into(),
            ));
        }
        Ok(HypergeometricSpec {
            numerator,
            denominator,
            argument,
        })
    }

    pub fn numerator(&self) -> &[f64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[f64] {
        &self.denominator
    }

    pub fn argument(&self) -> Complex64 {
        self.argument
    }

    /// True for the `(q+1, q)` family, which only converges inside the unit disk.
    pub fn has_unit_radius(&self) -> bool {
        self.numerator.len() == self.denominator.len() + 1
    }

    /// Real coefficient ratio `Π(a_j + k) / Π(b_j + k) / (k + 1)` in double-double.
    fn coefficient_ratio(&self, k: u64) -> Dd {
        let kf = k as f64;
        let num = self
            .numerator
            .iter()
            .fold(Dd::ONE, |acc, &a| acc * Dd::sum_f64(a, kf));
        let den = self
            .denominator
            .iter()
            .fold(Dd::from_f64(kf + 1.0), |acc, &b| acc * Dd::sum_f64(b, kf));
        num / den
    }
}

/// Outcome of summing a hypergeometric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSumResult {
    pub value: Complex64,
    pub terms_used: usize,
    pub estimated_tail: f64,
    pub converged: bool,
}

/// Sums `spec`, failing with [`Error::NotConverged`] when `max_terms` is reached.
pub fn hypergeometric_sum(
    spec: &HypergeometricSpec,
    tolerance: f64,
    max_terms: usize,
) -> Result<SeriesSumResult> {
    let res = hypergeometric_partial_sum(spec, tolerance, max_terms)?;
    if !res.converged {
        return Err(Error::NotConverged {
            terms: res.terms_used,
            last_term: res.estimated_tail,
            partial_sum: res.value.norm(),
        });
    }
    Ok(res)
}

/// `hypergeometric_sum` with the crate defaults for tolerance and term cap.
pub fn hypergeometric(spec: &HypergeometricSpec) -> Result<Complex64> {
    hypergeometric_sum(spec, DEFAULT_TOLERANCE, DEFAULT_MAX_TERMS).map(|r| r.value)
}

/// Sums `spec` and reports the partial sum even if the stopping rule never fired.
///
/// The series is declared summed once three consecutive terms satisfy
/// `|t_k| <= tolerance · |S|` and the geometric tail bound
/// `|t_k| · r / (1 - r)` (with `r` the next term ratio) is below the same
/// threshold. `estimated_tail` holds that bound, or the last term magnitude
/// if the ratio has not yet dropped below one.
pub fn hypergeometric_partial_sum(
    spec: &HypergeometricSpec,
    tolerance: f64,
    max_terms: usize,
) -> Result<SeriesSumResult> {
    if !(tolerance > 0.0 && tolerance < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance must lie in (0, 1), got {tolerance}"
        )));
    }
    if max_terms == 0 {
        return Err(Error::InvalidParameter("max_terms must be positive".into()));
    }
    let x = spec.argument;
    if spec.has_unit_radius() && x.norm() >= 1.0 {
        return Err(Error::Divergent { modulus: x.norm() });
    }

    let xd = CDd::new(x.re, x.im);
    let mut term = CDd::ONE;
    let mut sum = CDd::ONE;
    let mut terms_used = 1usize;
    let mut small_run = 0usize;
    let mut tail = f64::INFINITY;
    let mut k: u64 = 0;

    while terms_used < max_terms {
        term = (term * xd).scale(spec.coefficient_ratio(k));
        k += 1;
        if !term.is_finite() {
            return Err(Error::Overflow {
                ln_magnitude: f64::INFINITY,
            });
        }
        sum = sum + term;
        terms_used += 1;

        let t_abs = term.norm_f64();
        let threshold = tolerance * sum.norm_f64().max(f64::MIN_POSITIVE);
        if t_abs > threshold {
            small_run = 0;
            tail = t_abs;
            continue;
        }
        small_run += 1;
        if t_abs == 0.0 {
            tail = 0.0;
        } else {
            let r = spec.coefficient_ratio(k).abs().to_f64() * x.norm();
            tail = if r < 1.0 {
                t_abs * r / (1.0 - r)
            } else {
                t_abs
            };
            if r >= 1.0 {
                continue;
            }
        }
        if small_run >= SMALL_TERMS_REQUIRED && tail <= threshold {
            return Ok(SeriesSumResult {
                value: Complex64::new(sum.re.to_f64(), sum.im.to_f64()),
                terms_used,
                estimated_tail: tail,
                converged: true,
            });
        }
    }

    Ok(SeriesSumResult {
        value: Complex64::new(sum.re.to_f64(), sum.im.to_f64()),
        terms_used,
        estimated_tail: tail,
        converged: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(3.0, 0).unwrap(), 1.0);
        assert_eq!(pochhammer(1.0, 5).unwrap(), 120.0);
        // direct product 2.5 * 3.5 * 4.5
        assert_eq!(pochhammer(2.5, 3).unwrap(), 2.5 * 3.5 * 4.5);
        assert_eq!(pochhammer(-2.0, 3).unwrap(), 0.0);
        assert_eq!(pochhammer(-2.0, 2).unwrap(), 2.0);
    }

    #[test]
    fn pochhammer_factorials_exact() {
        let mut fact: u64 = 1;
        for k in 0..=20u64 {
            if k > 0 {
                fact *= k;
            }
            assert_eq!(pochhammer(1.0, k).unwrap(), fact as f64, "k = {k}");
        }
    }

    #[test]
    fn pochhammer_large_k_uses_log_gamma() {
        // (1)_100 = 100!
        let v = pochhammer(1.0, 100).unwrap();
        let ln_fact: f64 = (1..=100).map(|j| (j as f64).ln()).sum();
        assert_relative_eq!(v.ln(), ln_fact, max_relative = 1e-13);
    }

    #[test]
    fn pochhammer_overflow_is_reported() {
        let err = pochhammer(1.0, 400).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
        let ln = ln_pochhammer(1.0, 400);
        assert!(ln.ln_abs.is_finite() && ln.ln_abs > 709.0);
    }

    #[test]
    fn ln_pochhammer_tracks_sign() {
        // (-2.5)_3 = (-2.5)(-1.5)(-0.5) = -1.875
        let s = ln_pochhammer(-2.5, 3);
        assert_eq!(s.sign, -1.0);
        assert_relative_eq!(s.to_f64().unwrap(), -1.875, max_relative = 1e-15);
    }

    #[test]
    fn beta_examples() {
        assert_relative_eq!(euler_beta(1.0, 1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            euler_beta(2.0, 3.0).unwrap(),
            1.0 / 12.0,
            max_relative = 1e-14
        );
        assert!(matches!(euler_beta(0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(euler_beta(1.0, -0.5), Err(Error::Domain(_))));
    }

    #[test]
    fn spec_validation() {
        assert!(HypergeometricSpec::new(vec![1.0], vec![0.0], c(0.1)).is_err());
        assert!(HypergeometricSpec::new(vec![1.0], vec![-3.0], c(0.1)).is_err());
        assert!(HypergeometricSpec::new(vec![1.0, 1.0, 1.0], vec![1.0], c(0.1)).is_err());
        assert!(HypergeometricSpec::new(vec![1.0, 1.0], vec![-0.5], c(0.1)).is_ok());
    }

    #[test]
    fn argument_zero_gives_one() {
        let s = HypergeometricSpec::new(vec![1.0, 1.0, 2.0], vec![1.0, 1.0], c(0.0)).unwrap();
        let r = hypergeometric_sum(&s, 1e-14, 1000).unwrap();
        assert_eq!(r.value, c(1.0));
        assert!(r.converged);
    }

    #[test]
    fn gauss_log_identity() {
        // x 2F1(1,1;2;x) = ln(1/(1-x)) at x = 1/2
        let s = HypergeometricSpec::new(vec![1.0, 1.0], vec![2.0], c(0.5)).unwrap();
        let v = hypergeometric(&s).unwrap();
        assert_relative_eq!(v.re, 2.0 * std::f64::consts::LN_2, max_relative = 1e-14);
        assert_relative_eq!(v.re, 1.3862943611, max_relative = 1e-10);
    }

    #[test]
    fn boundary_is_divergent() {
        let s = HypergeometricSpec::new(vec![1.0, 1.0, 3.0], vec![4.0, 4.0], c(1.0)).unwrap();
        assert!(matches!(
            hypergeometric_sum(&s, 1e-14, 100),
            Err(Error::Divergent { .. })
        ));
        let s =
            HypergeometricSpec::new(vec![1.0, 1.0], vec![2.0], Complex64::new(0.0, -1.5)).unwrap();
        assert!(matches!(hypergeometric(&s), Err(Error::Divergent { .. })));
    }

    #[test]
    fn term_cap_reports_not_converged() {
        let s = HypergeometricSpec::new(vec![1.0, 1.0], vec![1.0, 1.0], c(50.0)).unwrap();
        let err = hypergeometric_sum(&s, 1e-14, 10).unwrap_err();
        assert!(matches!(err, Error::NotConverged { terms: 10, .. }));
        let partial = hypergeometric_partial_sum(&s, 1e-14, 10).unwrap();
        assert!(!partial.converged);
        assert_eq!(partial.terms_used, 10);
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, 1; 1; x) = (1 - x)^2
        let s = HypergeometricSpec::new(vec![-2.0, 1.0], vec![1.0], c(0.3)).unwrap();
        let r = hypergeometric_sum(&s, 1e-14, 100).unwrap();
        assert_relative_eq!(r.value.re, 0.49, max_relative = 1e-15);
        assert_eq!(r.estimated_tail, 0.0);
    }

    #[test]
    fn bad_tolerance_rejected() {
        let s = HypergeometricSpec::new(vec![1.0], vec![1.0], c(0.3)).unwrap();
        assert!(hypergeometric_sum(&s, 0.0, 100).is_err());
        assert!(hypergeometric_sum(&s, 1.0, 100).is_err());
        assert!(hypergeometric_sum(&s, 1e-12, 0).is_err());
    }

    #[test]
    fn large_negative_exponential_keeps_precision() {
        // 1F1(1;1;-20) = e^-20; cancellation ratio ~ e^40
        let s = HypergeometricSpec::new(vec![1.0], vec![1.0], c(-20.0)).unwrap();
        let v = hypergeometric(&s).unwrap();
        assert_relative_eq!(v.re, (-20.0f64).exp(), max_relative = 1e-12);
    }
}
