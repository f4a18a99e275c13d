//! Weighted Bergman–Dirichlet space of order `m` on the disk `|z| < R`.
//!
//! The underlying measure is `(1 - |z/R|²)^α dλ(z)`; the order-`m` inner
//! product pairs the degree `< m` parts directly and the degree `>= m` parts
//! through their `m`-th derivatives. Monomials are orthogonal with
//!
//! ```text
//! ‖z^n‖² = π R^{2n+2}       n! Γ(α+1) / Γ(n+α+2)                n <  m
//! ‖z^n‖² = π R^{2(n-m)+2} (n!)² Γ(α+1) / ((n-m)! Γ(n-m+α+2))    n >= m
//! ```
//!
//! and the reproducing kernel is
//!
//! ```text
//! K(z,w) = (α+1)/(πR²) { Σ_{n<m} (α+2)_n (z w̄)^n / (n! R^{2n})
//!                        + (z w̄)^m / (m!)² · 3F2(1, 1, α+2; m+1, m+1; z w̄/R²) }
//! ```

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{AnalyticDomain, CoefficientSeries};
use crate::space::{check_point, scaled_power, FunctionSpace, KernelOptions};
use crate::special::{
    hypergeometric_sum, ln_gamma, ln_one_minus, ln_pochhammer, HypergeometricSpec,
};

/// `(R, α, m)` for the space on `|z| < R` with weight exponent `α > -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DiskSpaceParams {
    radius: f64,
    alpha: f64,
    order: usize,
}

impl DiskSpaceParams {
    pub fn new(radius: f64, alpha: f64, order: usize) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "disk radius must be positive and finite, got {radius}"
            )));
        }
        // For alpha <= -1 the space contains only the zero function.
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "weight exponent alpha must exceed -1, got {alpha}"
            )));
        }
        Ok(DiskSpaceParams {
            radius,
            alpha,
            order,
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Same `(R, α)` with a different order.
    pub fn with_order(&self, order: usize) -> Self {
        DiskSpaceParams { order, ..*self }
    }

    /// The constant `C` of the continuous embedding of order `m+1` into
    /// order `m`, `‖f‖²_m <= ‖f‖²_{m+1} / C`, as
    /// `min(1, R^{2m} Γ(α+2) / (m! Γ(m+α+2)), α/R²)`.
    ///
    /// Non-positive for `α <= 0`, where the bound says nothing.
    pub fn embedding_constant(&self) -> f64 {
        let m = self.order as u64;
        let r2 = self.radius * self.radius;
        let middle = (2.0 * m as f64 * self.radius.ln()
            - ln_gamma(m as f64 + 1.0)
            - ln_pochhammer(self.alpha + 2.0, m).ln_abs)
            .exp();
        1.0f64.min(middle).min(self.alpha / r2)
    }

    fn check_inside(&self, z: Complex64, name: &str) -> Result<()> {
        check_point(z, name)?;
        if z.norm() >= self.radius {
            return Err(Error::Domain(format!(
                "|{name}| = {} is not inside the disk of radius {}",
                z.norm(),
                self.radius
            )));
        }
        Ok(())
    }

    fn kernel_prefactor(&self) -> f64 {
        (self.alpha + 1.0) / (PI * self.radius * self.radius)
    }

    /// `(α+1)/(πR²) · (1 - x)^{-(α+2)}` with `x = z w̄ / R²`; order 0 only.
    fn bergman_closed_form(&self, x: Complex64) -> Complex64 {
        self.kernel_prefactor() * (-(self.alpha + 2.0) * ln_one_minus(x)).exp()
    }

    fn is_classical_dirichlet(&self) -> bool {
        self.order == 1 && self.alpha == 0.0 && self.radius == 1.0
    }

    fn kernel_series(&self, zw: Complex64, opts: &KernelOptions) -> Result<Complex64> {
        let r2 = self.radius * self.radius;
        let x = zw / r2;
        let m = self.order;

        let mut head = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for n in 0..m {
            head += term;
            term *= x * ((self.alpha + 2.0 + n as f64) / (n as f64 + 1.0));
        }

        let spec = HypergeometricSpec::new(
            vec![1.0, 1.0, self.alpha + 2.0],
            vec![m as f64 + 1.0, m as f64 + 1.0],
            x,
        )?;
        let tail = hypergeometric_sum(&spec, opts.tolerance, opts.max_terms)?.value;
        Ok(self.kernel_prefactor() * (head + scaled_power(zw, m) * tail))
    }
}

impl FunctionSpace for DiskSpaceParams {
    fn ln_monomial_norm_sq(&self, n: usize) -> f64 {
        let ln_r = self.radius.ln();
        let ln_fact_n = ln_gamma(n as f64 + 1.0);
        if n < self.order {
            // Γ(α+1)/Γ(n+α+2) = 1/(α+1)_{n+1}
            PI.ln() + (2 * n + 2) as f64 * ln_r + ln_fact_n
                - ln_pochhammer(self.alpha + 1.0, n as u64 + 1).ln_abs
        } else {
            let p = n - self.order;
            PI.ln() + (2 * p + 2) as f64 * ln_r + 2.0 * ln_fact_n
                - ln_gamma(p as f64 + 1.0)
                - ln_pochhammer(self.alpha + 1.0, p as u64 + 1).ln_abs
        }
    }

    fn check_series(&self, f: &CoefficientSeries) -> Result<()> {
        match f.domain() {
            AnalyticDomain::Disk { radius } if radius < self.radius => Err(Error::Domain(format!(
                "series is only known to be analytic on radius {radius} < R = {}",
                self.radius
            ))),
            _ => Ok(()),
        }
    }

    fn kernel(&self, z: Complex64, w: Complex64, opts: &KernelOptions) -> Result<Complex64> {
        self.check_inside(z, "z")?;
        self.check_inside(w, "w")?;
        let r2 = self.radius * self.radius;
        let zw = z * w.conj();
        if zw.norm() > (1.0 - opts.boundary_margin) * r2 {
            return Err(Error::Domain(format!(
                "|z w̄| = {} is within the boundary margin of R² = {r2}",
                zw.norm()
            )));
        }
        if !opts.force_series {
            if self.order == 0 {
                return Ok(self.bergman_closed_form(zw / r2));
            }
            if self.is_classical_dirichlet() {
                return Ok((1.0 - ln_one_minus(zw)) / PI);
            }
        }
        self.kernel_series(zw, opts)
    }
}
