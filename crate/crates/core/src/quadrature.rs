//! Independent quadrature for the underlying `L²` inner products.
//!
//! Integrals over the disk use polar coordinates `z = R √t e^{iθ}`, so that
//!
//! ```text
//! ∫_{|z|<R} F (1 - |z/R|²)^α dλ = R²/2 ∫_0^1 ∫_0^{2π} F (1 - t)^α dθ dt
//! ∫_C F e^{-ν|z|²} dλ           = 1/(2ν) ∫_0^∞ ∫_0^{2π} F e^{-t} dθ dt,   z = √(t/ν) e^{iθ}
//! ```
//!
//! The radial factor is a Gauss rule for the exact weight (`(1-t)^α` on
//! `(0,1)`, `e^{-t}` on `(0,∞)`) built by Golub–Welsch from the three-term
//! recurrence of the monic orthogonal polynomials; the angular factor is the
//! equispaced trapezoid rule, exact for `e^{ikθ}` with `|k| < angular_count`.
//! Polynomial integrands are therefore integrated exactly up to rule order.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::CoefficientSeries;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RuleDomain {
    Disk { radius: f64, alpha: f64 },
    Plane { nu: f64 },
}

/// A radial node `t` (the squared, rescaled radius) and its Gauss weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialNode {
    pub t: f64,
    pub weight: f64,
}

/// Tensor rule: Gauss nodes in `t` times equispaced angles.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    radial_nodes: Vec<RadialNode>,
    angular_count: usize,
    domain: RuleDomain,
}

/// Golub–Welsch: nodes are the eigenvalues of the Jacobi matrix, weights are
/// `μ0 · v_0²` for the normalized eigenvectors `v`.
fn golub_welsch(diag: &[f64], off: &[f64], mu0: f64) -> Vec<RadialNode> {
    let n = diag.len();
    let mut jm = DMatrix::<f64>::zeros(n, n);
    for i in 0..n {
        jm[(i, i)] = diag[i];
        if i + 1 < n {
            jm[(i, i + 1)] = off[i];
            jm[(i + 1, i)] = off[i];
        }
    }
    let eig = SymmetricEigen::new(jm);
    let mut nodes: Vec<RadialNode> = (0..n)
        .map(|j| RadialNode {
            t: eig.eigenvalues[j],
            weight: mu0 * eig.eigenvectors[(0, j)].powi(2),
        })
        .collect();
    nodes.sort_by(|a, b| a.t.total_cmp(&b.t));
    nodes
}

/// Gauss rule for `(1 - t)^α` on `(0, 1)`: shifted Jacobi with `(a, b) = (α, 0)`.
fn jacobi_shifted(points: usize, alpha: f64) -> Vec<RadialNode> {
    let (a, b) = (alpha, 0.0);
    let ab = a + b;
    let diag: Vec<f64> = (0..points)
        .map(|k| {
            let s = 2.0 * k as f64 + ab;
            let x = if k == 0 {
                (b - a) / (ab + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            };
            0.5 * (x + 1.0)
        })
        .collect();
    let off: Vec<f64> = (1..points)
        .map(|k| {
            let kf = k as f64;
            let s = 2.0 * kf + ab;
            let beta = 4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0));
            0.5 * beta.sqrt()
        })
        .collect();
    golub_welsch(&diag, &off, 1.0 / (alpha + 1.0))
}

/// Gauss–Laguerre rule for `e^{-t}` on `(0, ∞)`.
fn laguerre(points: usize) -> Vec<RadialNode> {
    let diag: Vec<f64> = (0..points).map(|k| 2.0 * k as f64 + 1.0).collect();
    let off: Vec<f64> = (1..points).map(|k| k as f64).collect();
    golub_welsch(&diag, &off, 1.0)
}

/// Radial and angular counts for `f · conj(g)` with `f`, `g` of degree at
/// most `degree`: the fewest radial nodes that are exact, and `4·degree + 1`
/// angles (`degree + 1` would already be exact).
pub fn rule_size_for_degree(degree: usize) -> (usize, usize) {
    (degree / 2 + 1, 4 * degree + 1)
}

impl QuadratureRule {
    pub fn disk(
        radius: f64,
        alpha: f64,
        radial_points: usize,
        angular_count: usize,
    ) -> Result<Self> {
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "weight (1-t)^alpha has no finite moments for alpha = {alpha}"
            )));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        Self::check_counts(radial_points, angular_count)?;
        Ok(QuadratureRule {
            radial_nodes: jacobi_shifted(radial_points, alpha),
            angular_count,
            domain: RuleDomain::Disk { radius, alpha },
        })
    }

    pub fn plane(nu: f64, radial_points: usize, angular_count: usize) -> Result<Self> {
        if !(nu > 0.0 && nu.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "nu must be positive, got {nu}"
            )));
        }
        Self::check_counts(radial_points, angular_count)?;
        Ok(QuadratureRule {
            radial_nodes: laguerre(radial_points),
            angular_count,
            domain: RuleDomain::Plane { nu },
        })
    }

    /// Disk rule exact for products of polynomials of degree `<= degree`.
    pub fn disk_for_degree(radius: f64, alpha: f64, degree: usize) -> Result<Self> {
        let (radial, angular) = rule_size_for_degree(degree);
        Self::disk(radius, alpha, radial, angular)
    }

    /// Plane rule exact for products of polynomials of degree `<= degree`.
    pub fn plane_for_degree(nu: f64, degree: usize) -> Result<Self> {
        let (radial, angular) = rule_size_for_degree(degree);
        Self::plane(nu, radial, angular)
    }

    fn check_counts(radial_points: usize, angular_count: usize) -> Result<()> {
        if radial_points == 0 || angular_count == 0 {
            return Err(Error::InvalidParameter(
                "quadrature needs at least one radial point and one angle".into(),
            ));
        }
        Ok(())
    }

    pub fn radial_nodes(&self) -> &[RadialNode] {
        &self.radial_nodes
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
    }

    pub fn domain(&self) -> RuleDomain {
        self.domain
    }

    /// Jacobian of the polar substitution and the radius for a node `t`.
    fn radial_map(&self, t: f64) -> (f64, f64) {
        match self.domain {
            RuleDomain::Disk { radius, .. } => (0.5 * radius * radius, radius * t.sqrt()),
            RuleDomain::Plane { nu } => (0.5 / nu, (t / nu).sqrt()),
        }
    }

    /// Weighted integral of `integrand` over the rule's domain.
    pub fn integrate<F: Fn(Complex64) -> Complex64>(&self, integrand: F) -> Complex64 {
        let m = self.angular_count;
        let dtheta = 2.0 * PI / m as f64;
        let angles: Vec<Complex64> = (0..m)
            .map(|l| Complex64::from_polar(1.0, l as f64 * dtheta))
            .collect();
        let mut total = Complex64::new(0.0, 0.0);
        for node in &self.radial_nodes {
            let (jac, r) = self.radial_map(node.t);
            let ring: Complex64 = angles.iter().map(|u| integrand(u * r)).sum();
            total += ring * (node.weight * jac * dtheta);
        }
        total
    }

    /// `∫ f conj(g) dμ` for the rule's weight.
    pub fn inner_product(&self, f: &CoefficientSeries, g: &CoefficientSeries) -> Complex64 {
        self.integrate(|z| f.eval(z) * g.eval(z).conj())
    }

    /// `⟨f_{1,m}, g_{1,m}⟩ + ⟨f_{2,m}^{(m)}, g_{2,m}^{(m)}⟩`, the order-`m`
    /// inner product from its definition.
    pub fn modified_inner_product(
        &self,
        m: usize,
        f: &CoefficientSeries,
        g: &CoefficientSeries,
    ) -> Complex64 {
        let fs = f.split(m);
        let gs = g.split(m);
        let head = self.inner_product(&fs.head, &gs.head);
        let tail = self.inner_product(&fs.tail.derivative(m), &gs.tail.derivative(m));
        head + tail
    }
}
