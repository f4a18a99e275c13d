//! Large-radius limit of the disk spaces.
//!
//! With the coupling `α = νR²` the disk kernel `K^{νR²}_{R,m}` tends to the
//! plane kernel `K^ν_m` as `R → ∞`, uniformly on compact sets. The underlying
//! series statement is
//!
//! ```text
//! lim_{ρ→∞} 3F2(1, 1, c+ρ; m+1, m+1; ξ/ρ) = 2F2(1, 1; m+1, m+1; ξ)
//! ```
//!
//! and the weights converge as `(1 - |z/R|²)^{νR²} → e^{-ν|z|²}`. The
//! routines here tabulate the gap at finite `R` (or `ρ`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk::DiskSpaceParams;
use crate::error::{Error, Result};
use crate::plane::PlaneSpaceParams;
use crate::space::{FunctionSpace, KernelOptions};
use crate::special::{hypergeometric_sum, HypergeometricSpec};

/// Numerator shift used by the disk kernel: `α + 2 = νR² + 2`.
pub const KERNEL_LIMIT_SHIFT: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRecord {
    pub radius: f64,
    pub z: Complex64,
    pub w: Complex64,
    pub disk_kernel_value: Complex64,
    pub plane_kernel_value: Complex64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LimitRecord {
    pub rho: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityRecord {
    pub radius: f64,
    pub abs_error: f64,
}

fn sorted_positive(values: &[f64], name: &str) -> Result<Vec<f64>> {
    if let Some(v) = values.iter().find(|v| !(**v > 0.0 && v.is_finite())) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be positive and finite, got {v}"
        )));
    }
    let mut out = values.to_vec();
    out.sort_by(f64::total_cmp);
    Ok(out)
}

/// Disk kernel with `(R, α = νR², m)` against the plane kernel `(ν, m)` at
/// each radius, ascending in `R`.
pub fn kernel_convergence_table(
    nu: f64,
    m: usize,
    z: Complex64,
    w: Complex64,
    radii: &[f64],
    opts: &KernelOptions,
) -> Result<Vec<ConvergenceRecord>> {
    let plane = PlaneSpaceParams::new(nu, m)?;
    let plane_value = plane.kernel(z, w, opts)?;
    sorted_positive(radii, "radii")?
        .into_iter()
        .map(|radius| {
            if z.norm() >= radius || w.norm() >= radius {
                return Err(Error::Domain(format!(
                    "radius {radius} does not contain z = {z} and w = {w}"
                )));
            }
            let disk = DiskSpaceParams::new(radius, nu * radius * radius, m)?;
            let disk_value = disk.kernel(z, w, opts)?;
            Ok(ConvergenceRecord {
                radius,
                z,
                w,
                disk_kernel_value: disk_value,
                plane_kernel_value: plane_value,
                abs_error: (disk_value - plane_value).norm(),
            })
        })
        .collect()
}

/// `|3F2(1,1,2+ρ; m+1,m+1; ξ/ρ) - 2F2(1,1; m+1,m+1; ξ)|` for each `ρ`, ascending.
pub fn hypergeometric_limit_check(
    m: usize,
    xi: Complex64,
    rhos: &[f64],
    tolerance: f64,
) -> Result<Vec<LimitRecord>> {
    hypergeometric_limit_check_with_shift(m, xi, rhos, KERNEL_LIMIT_SHIFT, tolerance)
}

/// [`hypergeometric_limit_check`] with an arbitrary numerator shift `c`.
pub fn hypergeometric_limit_check_with_shift(
    m: usize,
    xi: Complex64,
    rhos: &[f64],
    shift: f64,
    tolerance: f64,
) -> Result<Vec<LimitRecord>> {
    let b = m as f64 + 1.0;
    let limit_spec = HypergeometricSpec::new(vec![1.0, 1.0], vec![b, b], xi)?;
    let limit =
        hypergeometric_sum(&limit_spec, tolerance, crate::special::DEFAULT_MAX_TERMS)?.value;
    sorted_positive(rhos, "rhos")?
        .into_iter()
        .map(|rho| {
            let spec = HypergeometricSpec::new(vec![1.0, 1.0, shift + rho], vec![b, b], xi / rho)?;
            let v = hypergeometric_sum(&spec, tolerance, crate::special::DEFAULT_MAX_TERMS)?.value;
            Ok(LimitRecord {
                rho,
                abs_error: (v - limit).norm(),
            })
        })
        .collect()
}

/// `|(1 - |z/R|²)^{νR²} - e^{-ν|z|²}|` for each radius, ascending.
pub fn measure_density_convergence(
    nu: f64,
    z: Complex64,
    radii: &[f64],
) -> Result<Vec<DensityRecord>> {
    if !(nu > 0.0 && nu.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "nu must be positive, got {nu}"
        )));
    }
    let r2z = z.norm_sqr();
    let limit = (-nu * r2z).exp();
    sorted_positive(radii, "radii")?
        .into_iter()
        .map(|radius| {
            if z.norm() >= radius {
                return Err(Error::Domain(format!("|z| = {} >= R = {radius}", z.norm())));
            }
            let r2 = radius * radius;
            let density = (nu * r2 * (-r2z / r2).ln_1p()).exp();
            Ok(DensityRecord {
                radius,
                abs_error: (density - limit).abs(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{E, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn bergman_to_fock_examples() {
        let opts = KernelOptions::default();
        let rows =
            kernel_convergence_table(1.0, 0, c(1.0, 0.0), c(1.0, 0.0), &[20.0, 5.0, 10.0], &opts)
                .unwrap();
        assert_eq!(
            rows.iter().map(|r| r.radius).collect::<Vec<_>>(),
            vec![5.0, 10.0, 20.0]
        );
        assert!(rows.windows(2).all(|p| p[1].abs_error < p[0].abs_error));
        assert!((rows[0].plane_kernel_value.re - E / PI).abs() < 1e-15);
    }

    #[test]
    fn constant_kernels_at_origin() {
        let opts = KernelOptions::default();
        for m in 0..3 {
            let rows = kernel_convergence_table(
                1.7,
                m,
                c(0.4, 2.0),
                c(0.0, 0.0),
                &[5.0, 10.0, 20.0],
                &opts,
            )
            .unwrap();
            for r in rows {
                let expect = 1.0 / (PI * r.radius * r.radius);
                assert!((r.abs_error - expect).abs() <= 1e-14 * expect.max(1.0));
            }
        }
    }

    #[test]
    fn order_one_rate() {
        let opts = KernelOptions::default();
        let rows =
            kernel_convergence_table(1.0, 1, c(1.0, 0.0), c(1.0, 0.0), &[10.0, 100.0], &opts)
                .unwrap();
        assert!(rows[1].abs_error < rows[0].abs_error / 10.0);
    }

    #[test]
    fn radius_too_small() {
        let opts = KernelOptions::default();
        let err = kernel_convergence_table(1.0, 0, c(3.0, 0.0), c(0.0, 0.0), &[2.0, 5.0], &opts)
            .unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
        assert!(
            kernel_convergence_table(1.0, 0, c(0.0, 0.0), c(0.0, 0.0), &[-1.0], &opts).is_err()
        );
    }

    #[test]
    fn limit_check_examples() {
        let rows = hypergeometric_limit_check(1, c(0.0, 0.0), &[10.0, 100.0], 1e-15).unwrap();
        assert!(rows.iter().all(|r| r.abs_error == 0.0));

        let rows = hypergeometric_limit_check(1, c(1.0, 0.0), &[1e2, 1e3, 1e4], 1e-15).unwrap();
        assert!(rows.windows(2).all(|p| p[1].abs_error < p[0].abs_error));
        let scaled: Vec<f64> = rows.iter().map(|r| r.rho * r.abs_error).collect();
        let (lo, hi) = scaled
            .iter()
            .fold((f64::MAX, 0.0f64), |(l, h), v| (l.min(*v), h.max(*v)));
        assert!(hi / lo < 3.0);

        let rows = hypergeometric_limit_check(0, c(2.0, 0.0), &[1e2, 1e3], 1e-15).unwrap();
        assert!(rows[1].abs_error < rows[0].abs_error);
    }

    #[test]
    fn limit_check_divergent() {
        let err = hypergeometric_limit_check(1, c(5.0, 0.0), &[2.0], 1e-14).unwrap_err();
        assert!(matches!(err, Error::Divergent { .. }));
    }

    #[test]
    fn density_examples() {
        let rows = measure_density_convergence(1.0, c(0.0, 0.0), &[1.0, 10.0]).unwrap();
        assert!(rows.iter().all(|r| r.abs_error == 0.0));
        let rows = measure_density_convergence(1.0, c(0.6, 0.8), &[10.0, 100.0]).unwrap();
        assert!(rows[1].abs_error < rows[0].abs_error);
        let rows = measure_density_convergence(2.0, c(0.5, 0.0), &[4.0, 8.0, 16.0]).unwrap();
        assert!(rows.windows(2).all(|p| p[1].abs_error < p[0].abs_error));
        assert!(measure_density_convergence(1.0, c(2.0, 0.0), &[1.0]).is_err());
    }
}
