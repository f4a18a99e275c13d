//! Weighted Bargmann–Dirichlet space of order `m` on the whole plane, with
//! Gaussian measure `e^{-ν|z|²} dλ(z)`.
//!
//! ```text
//! ‖z^n‖² = π n! / ν^{n+1}                      n <  m
//! ‖z^n‖² = π (n!)² / (ν^{n-m+1} (n-m)!)        n >= m
//!
//! K(z,w) = ν/π { Σ_{n<m} (ν z w̄)^n / n! + (z w̄)^m / (m!)² · 2F2(1, 1; m+1, m+1; ν z w̄) }
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{CoefficientSeries, DEFAULT_DEGREE_CAP};
use crate::space::{check_point, scaled_power, FunctionSpace, KernelOptions};
use crate::special::{hypergeometric_sum, ln_gamma, HypergeometricSpec};

/// `(ν, m)` with Gaussian parameter `ν > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneSpaceParams {
    nu: f64,
    order: usize,
}

impl PlaneSpaceParams {
    pub fn new(nu: f64, order: usize) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "Gaussian parameter nu must be positive and finite, got {nu}"
            )));
        }
        Ok(PlaneSpaceParams { nu, order })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn with_order(&self, order: usize) -> Self {
        PlaneSpaceParams { order, ..*self }
    }

    /// `‖z^n‖²_m / ‖z^n‖²_{m+1}`.
    pub fn embedding_ratio(&self, n: usize) -> f64 {
        let next = self.with_order(self.order + 1);
        (self.ln_monomial_norm_sq(n) - next.ln_monomial_norm_sq(n)).exp()
    }

    /// `sup_{n <= degree_cap} ‖z^n‖²_m / ‖z^n‖²_{m+1}`, so that
    /// `‖f‖²_m <= C ‖f‖²_{m+1}` for every `f` of degree at most `degree_cap`.
    pub fn embedding_constant(&self, degree_cap: usize) -> f64 {
        (0..=degree_cap)
            .map(|n| self.embedding_ratio(n))
            .fold(0.0, f64::max)
    }

    /// [`embedding_constant`](Self::embedding_constant) at the default degree cap.
    pub fn default_embedding_constant(&self) -> f64 {
        self.embedding_constant(DEFAULT_DEGREE_CAP)
    }

    fn kernel_series(&self, zw: Complex64, opts: &KernelOptions) -> Result<Complex64> {
        let x = zw * self.nu;
        let m = self.order;
        let mut head = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for n in 0..m {
            head += term;
            term *= x / (n as f64 + 1.0);
        }
        let spec =
            HypergeometricSpec::new(vec![1.0, 1.0], vec![m as f64 + 1.0, m as f64 + 1.0], x)?;
        let tail = hypergeometric_sum(&spec, opts.tolerance, opts.max_terms)?.value;
        Ok(self.nu / PI * (head + scaled_power(zw, m) * tail))
    }
}

impl FunctionSpace for PlaneSpaceParams {
    fn ln_monomial_norm_sq(&self, n: usize) -> f64 {
        let ln_nu = self.nu.ln();
        let ln_fact_n = ln_gamma(n as f64 + 1.0);
        if n < self.order {
            PI.ln() + ln_fact_n - (n + 1) as f64 * ln_nu
        } else {
            let p = n - self.order;
            PI.ln() + 2.0 * ln_fact_n - (p + 1) as f64 * ln_nu - ln_gamma(p as f64 + 1.0)
        }
    }

    fn check_series(&self, f: &CoefficientSeries) -> Result<()> {
        match f.domain() {
            crate::series::AnalyticDomain::Entire => Ok(()),
            crate::series::AnalyticDomain::Disk { radius } => Err(Error::Domain(format!(
                "series is only known to be analytic on radius {radius}, not on the plane"
            ))),
        }
    }

    fn kernel(&self, z: Complex64, w: Complex64, opts: &KernelOptions) -> Result<Complex64> {
        check_point(z, "z")?;
        check_point(w, "w")?;
        let zw = z * w.conj();
        if self.order == 0 && !opts.force_series {
            return Ok(self.nu / PI * (zw * self.nu).exp());
        }
        self.kernel_series(zw, opts)
    }
}
