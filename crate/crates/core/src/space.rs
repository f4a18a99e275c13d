//! Behaviour shared by the disk and plane spaces.
//!
//! Both spaces have the monomials `e_n(z) = z^n` as an orthogonal basis, so
//! inner products, norms and kernel sections follow from the monomial norms
//! alone. Only the monomial norms and the closed-form kernel differ.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::CoefficientSeries;
use crate::special::{DEFAULT_MAX_TERMS, DEFAULT_TOLERANCE};

/// Knobs for reproducing-kernel evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelOptions {
    /// Relative stopping tolerance handed to the series engine.
    pub tolerance: f64,
    pub max_terms: usize,
    /// Skip closed-form shortcuts and always sum the hypergeometric series.
    pub force_series: bool,
    /// Disk only: refuse `|z w̄| > (1 - margin) R²`.
    pub boundary_margin: f64,
}

impl Default for KernelOptions {
    fn default() -> Self {
        KernelOptions {
            tolerance: DEFAULT_TOLERANCE,
            max_terms: DEFAULT_MAX_TERMS,
            force_series: false,
            boundary_margin: 1e-6,
        }
    }
}

impl KernelOptions {
    pub fn with_tolerance(tolerance: f64) -> Self {
        KernelOptions {
            tolerance,
            ..Default::default()
        }
    }

    pub fn series_only() -> Self {
        KernelOptions {
            force_series: true,
            ..Default::default()
        }
    }
}

/// A Hilbert space of analytic functions with orthogonal monomial basis.
pub trait FunctionSpace {
    /// `ln ‖z^n‖²`.
    fn ln_monomial_norm_sq(&self, n: usize) -> f64;

    /// Rejects series that are not known to be analytic on the space's domain.
    fn check_series(&self, f: &CoefficientSeries) -> Result<()>;

    /// Reproducing kernel `K(z, w)`.
    fn kernel(&self, z: Complex64, w: Complex64, opts: &KernelOptions) -> Result<Complex64>;

    /// `‖z^n‖²` on linear scale.
    fn monomial_norm_sq(&self, n: usize) -> Result<f64> {
        let ln = self.ln_monomial_norm_sq(n);
        let v = ln.exp();
        if !v.is_finite() || v == 0.0 {
            return Err(Error::Overflow { ln_magnitude: ln });
        }
        Ok(v)
    }

    /// `⟨f, g⟩ = Σ a_n conj(b_n) ‖z^n‖²`, scaled by the largest monomial norm
    /// in play before summation.
    fn inner_product(&self, f: &CoefficientSeries, g: &CoefficientSeries) -> Result<Complex64> {
        self.check_series(f)?;
        self.check_series(g)?;
        let zero = Complex64::new(0.0, 0.0);
        let common = f.len().min(g.len());
        let products: Vec<(Complex64, f64)> = (0..common)
            .map(|n| (f.coefficient(n) * g.coefficient(n).conj(), n))
            .filter(|(p, _)| *p != zero)
            .map(|(p, n)| (p, self.ln_monomial_norm_sq(n)))
            .collect();
        let Some(scale) = products.iter().map(|(_, l)| *l).reduce(f64::max) else {
            return Ok(zero);
        };
        let sum: Complex64 = products.iter().map(|(p, l)| p * (l - scale).exp()).sum();
        let out = sum * scale.exp();
        if !(out.re.is_finite() && out.im.is_finite()) {
            return Err(Error::Overflow {
                ln_magnitude: scale + sum.norm().ln(),
            });
        }
        Ok(out)
    }

    /// `‖f‖²`.
    fn norm_sq(&self, f: &CoefficientSeries) -> Result<f64> {
        Ok(self.inner_product(f, f)?.re.max(0.0))
    }

    /// `ln ‖f‖²`; `-inf` for the zero function, never overflows.
    fn ln_norm_sq(&self, f: &CoefficientSeries) -> Result<f64> {
        self.check_series(f)?;
        let terms: Vec<f64> = f
            .coefficients()
            .iter()
            .enumerate()
            .filter(|(_, a)| a.norm() > 0.0)
            .map(|(n, a)| 2.0 * a.norm().ln() + self.ln_monomial_norm_sq(n))
            .collect();
        let Some(scale) = terms.iter().copied().reduce(f64::max) else {
            return Ok(f64::NEG_INFINITY);
        };
        Ok(scale + terms.iter().map(|t| (t - scale).exp()).sum::<f64>().ln())
    }

    /// `Σ_{n<=degree} conj(w)^n / ‖z^n‖² · z^n`, the kernel section at `w`
    /// truncated to `degree`.
    fn kernel_section(&self, w: Complex64, degree: usize) -> CoefficientSeries {
        let wc = w.conj();
        let mut coefficients = Vec::with_capacity(degree + 1);
        let mut power = Complex64::new(1.0, 0.0);
        for n in 0..=degree {
            coefficients.push(power * (-self.ln_monomial_norm_sq(n)).exp());
            power *= wc;
        }
        CoefficientSeries::new(coefficients)
    }

    /// `C_z = sqrt(K(z, z))`, the norm of point evaluation at `z`.
    fn evaluation_bound(&self, z: Complex64) -> Result<f64> {
        let k = self.kernel(z, z, &KernelOptions::default())?;
        Ok(k.re.sqrt())
    }
}

/// `(z w̄)^m / (m!)²` as a running product, without forming `m!`.
pub(crate) fn scaled_power(zw: Complex64, m: usize) -> Complex64 {
    (1..=m).fold(Complex64::new(1.0, 0.0), |acc, j| {
        acc * zw / ((j * j) as f64)
    })
}

pub(crate) fn check_point(z: Complex64, name: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {z}")))
    }
}
