//! Self-checks behind `bdspace verify`.
//!
//! Each check reduces to one number compared against a threshold; a check
//! passes when `measured <= threshold`. Random inputs come from a fixed seed.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::asymptotics::{hypergeometric_limit_check, kernel_convergence_table};
use crate::disk::DiskSpaceParams;
use crate::error::Result;
use crate::gram::{gram_matrix, hermitian_eigenvalues, trace};
use crate::plane::PlaneSpaceParams;
use crate::quadrature::QuadratureRule;
use crate::series::CoefficientSeries;
use crate::space::{FunctionSpace, KernelOptions};

pub const SEED: u64 = 0x5eed_b0d1;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub name: &'static str,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

impl CheckResult {
    fn new(name: &'static str, measured: f64, threshold: f64) -> Self {
        CheckResult {
            name,
            measured,
            threshold,
            passed: measured <= threshold,
        }
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(f64::MIN_POSITIVE)
}

/// Uniform point in the disk of radius `r`.
pub fn random_point(rng: &mut impl Rng, r: f64) -> Complex64 {
    let rho = r * rng.random::<f64>().sqrt();
    Complex64::from_polar(rho, rng.random_range(0.0..2.0 * PI))
}

/// Polynomial of exact degree `degree` with coefficients uniform in the unit square.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize) -> CoefficientSeries {
    CoefficientSeries::new(
        (0..=degree)
            .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect(),
    )
}

fn grid(r: f64, n: usize) -> Vec<Complex64> {
    let step = 2.0 * r / (n - 1) as f64;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let z = c(-r + i as f64 * step, -r + j as f64 * step);
            if z.norm() <= r {
                out.push(z);
            }
        }
    }
    out
}

fn bergman_reduction() -> Result<CheckResult> {
    let series = KernelOptions::series_only();
    let mut worst = 0.0f64;
    for radius in [1.0, 2.0] {
        for alpha in [0.0, 0.5, 2.5] {
            let d = DiskSpaceParams::new(radius, alpha, 0)?;
            let pts = grid(0.9 * radius, 5);
            for &z in &pts {
                for &w in &pts {
                    let x = z * w.conj() / (radius * radius);
                    let closed =
                        (alpha + 1.0) / (PI * radius * radius) * (1.0 - x).powf(-(alpha + 2.0));
                    worst = worst.max(rel(d.kernel(z, w, &series)?, closed));
                }
            }
        }
    }
    Ok(CheckResult::new(
        "bergman_series_vs_closed_form",
        worst,
        1e-12,
    ))
}

fn dirichlet_reduction() -> Result<CheckResult> {
    let d = DiskSpaceParams::new(1.0, 0.0, 1)?;
    let series = KernelOptions::series_only();
    let pts = grid(0.9f64.sqrt(), 5);
    let mut worst = 0.0f64;
    for &z in &pts {
        for &w in &pts {
            let closed = (1.0 - (1.0 - z * w.conj()).ln()) / PI;
            worst = worst.max(rel(d.kernel(z, w, &series)?, closed));
        }
    }
    Ok(CheckResult::new(
        "dirichlet_series_vs_closed_form",
        worst,
        1e-10,
    ))
}

fn fock_reduction() -> Result<CheckResult> {
    let series = KernelOptions::series_only();
    let mut worst = 0.0f64;
    for nu in [0.5, 1.0, 2.0] {
        let p = PlaneSpaceParams::new(nu, 0)?;
        let pts = grid((20.0 / nu).sqrt(), 5);
        for &z in &pts {
            for &w in &pts {
                let closed = nu / PI * (nu * z * w.conj()).exp();
                worst = worst.max(rel(p.kernel(z, w, &series)?, closed));
            }
        }
    }
    Ok(CheckResult::new("fock_series_vs_exponential", worst, 1e-12))
}

/// Radius of the disk spaces below; points are drawn inside it for both kinds.
const REACH: f64 = 1.5;

/// A space, a quadrature rule for its weight, and its order.
type Case = (Box<dyn FunctionSpace>, QuadratureRule, usize);

fn spaces() -> Result<Vec<Case>> {
    let mut out: Vec<Case> = Vec::new();
    for m in 0..3 {
        out.push((
            Box::new(DiskSpaceParams::new(REACH, 0.5, m)?),
            QuadratureRule::disk_for_degree(REACH, 0.5, 12)?,
            m,
        ));
        out.push((
            Box::new(PlaneSpaceParams::new(2.0, m)?),
            QuadratureRule::plane_for_degree(2.0, 12)?,
            m,
        ));
    }
    Ok(out)
}

/// Max over `n, k <= 10` of `|<z^n, z^k>_quad - δ_nk ‖z^n‖²| / ‖z^n‖²`.
fn orthogonality() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (space, rule, m) in spaces()? {
        for n in 0..=10 {
            let norm_n = space.monomial_norm_sq(n)?;
            for k in 0..=10 {
                let q = rule.modified_inner_product(
                    m,
                    &CoefficientSeries::monomial(n),
                    &CoefficientSeries::monomial(k),
                );
                let expect = if n == k { norm_n } else { 0.0 };
                worst = worst.max((q - expect).norm() / norm_n);
            }
        }
    }
    Ok(CheckResult::new("quadrature_orthogonality", worst, 1e-10))
}

fn oracle_inner_product(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (space, rule, m) in spaces()? {
        for _ in 0..5 {
            let f = random_polynomial(rng, 8);
            let g = random_polynomial(rng, 8);
            let exact = space.inner_product(&f, &g)?;
            let scale = (space.norm_sq(&f)? * space.norm_sq(&g)?).sqrt();
            worst = worst.max((rule.modified_inner_product(m, &f, &g) - exact).norm() / scale);
        }
    }
    Ok(CheckResult::new("oracle_inner_product", worst, 1e-8))
}

/// `<f, K(·, w)> = f(w)` and `Σ conj(w)^n z^n / ‖z^n‖² = K(z, w)`.
fn reproducing(rng: &mut ChaCha8Rng) -> Result<Vec<CheckResult>> {
    let opts = KernelOptions::default();
    let mut worst_rep = 0.0f64;
    let mut worst_exp = 0.0f64;
    for (space, _, _) in spaces()? {
        for _ in 0..5 {
            let f = random_polynomial(rng, 10);
            let w = random_point(rng, 0.8 * REACH);
            let z = random_point(rng, 0.8 * REACH);
            let section = space.kernel_section(w, 10);
            let lhs = space.inner_product(&f, &section)?;
            let fw = f.eval(w);
            worst_rep = worst_rep.max((lhs - fw).norm() / f.eval_abs(w).max(1.0));

            let k = space.kernel(z, w, &opts)?;
            let expansion = space.kernel_section(w, 400).eval(z);
            worst_exp = worst_exp.max(rel(expansion, k));
        }
    }
    Ok(vec![
        CheckResult::new("reproducing_identity", worst_rep, 1e-10),
        CheckResult::new("kernel_expansion", worst_exp, 1e-10),
    ])
}

/// `max(0, -λ_min) / tr G` over random point sets.
fn gram_psd(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let opts = KernelOptions::default();
    let mut worst = 0.0f64;
    for (space, _, _) in spaces()? {
        let pts: Vec<Complex64> = (0..8).map(|_| random_point(rng, 0.9 * REACH)).collect();
        let g = gram_matrix(space.as_ref(), &pts, &opts)?;
        let min = hermitian_eigenvalues(&g)[0];
        worst = worst.max((-min).max(0.0) / trace(&g));
    }
    Ok(CheckResult::new("gram_psd", worst, 1e-10))
}

/// `err(R = 40) / err(R = 5)` for the disk-to-plane kernel limit.
fn kernel_convergence() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for m in 0..3 {
        let t = kernel_convergence_table(
            1.0,
            m,
            c(1.0, 1.0),
            c(0.5, 0.0),
            &[5.0, 40.0],
            &KernelOptions::default(),
        )?;
        worst = worst.max(t[1].abs_error / t[0].abs_error);
    }
    Ok(CheckResult::new("kernel_convergence_ratio", worst, 0.1))
}

/// Spread `max / min` of `ρ · err(ρ)`, which stays bounded for an O(1/ρ) gap.
fn limit_rate() -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for m in 0..3 {
        for xi in [0.5, 1.0, 2.0] {
            let t = hypergeometric_limit_check(m, c(xi, 0.0), &[1e2, 1e3, 1e4], 1e-15)?;
            let scaled: Vec<f64> = t.iter().map(|r| r.rho * r.abs_error).collect();
            let hi = scaled.iter().copied().fold(f64::MIN, f64::max);
            let lo = scaled.iter().copied().fold(f64::MAX, f64::min);
            worst = worst.max(hi / lo);
        }
    }
    Ok(CheckResult::new("limit_rate_spread", worst, 3.0))
}

/// `‖f‖²_m / (‖f‖²_{m+1} / C)` for the disk constant, which must not exceed 1.
fn embedding(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for alpha in [1.0, 2.0, 4.0] {
        for radius in [1.0, 2.0] {
            for m in 0..2 {
                let d = DiskSpaceParams::new(radius, alpha, m)?;
                let next = d.with_order(m + 1);
                let cst = d.embedding_constant();
                for _ in 0..5 {
                    let f = random_polynomial(rng, 12);
                    worst = worst.max(d.norm_sq(&f)? * cst / next.norm_sq(&f)?);
                }
            }
        }
    }
    Ok(CheckResult::new("embedding_inequality", worst, 1.0 + 1e-12))
}

/// `|f(z)| / (‖f‖ sqrt(K(z, z)))`, which must not exceed 1.
fn evaluation_bound(rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut worst = 0.0f64;
    for (space, _, _) in spaces()? {
        for _ in 0..5 {
            let f = random_polynomial(rng, 8);
            let z = random_point(rng, 0.9 * REACH);
            worst = worst
                .max(f.eval(z).norm() / (space.norm_sq(&f)?.sqrt() * space.evaluation_bound(z)?));
        }
    }
    Ok(CheckResult::new(
        "point_evaluation_bound",
        worst,
        1.0 + 1e-12,
    ))
}

pub fn run_all() -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = vec![
        bergman_reduction()?,
        dirichlet_reduction()?,
        fock_reduction()?,
        orthogonality()?,
    ];
    out.push(oracle_inner_product(&mut rng)?);
    out.extend(reproducing(&mut rng)?);
    out.push(gram_psd(&mut rng)?);
    out.push(kernel_convergence()?);
    out.push(limit_rate()?);
    out.push(embedding(&mut rng)?);
    out.push(evaluation_bound(&mut rng)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        for check in run_all().unwrap() {
            assert!(check.passed, "{check:?}");
        }
    }
}
