//! The `bdspace` command-line front end.
//!
//! [`args`] turns argv into a [`RunConfig`]; [`run`] executes it and returns a
//! [`Report`] that can be written as CSV or JSON.

pub mod args;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use num_complex::Complex64;
use serde_json::{json, Value};

use crate::asymptotics::{hypergeometric_limit_check_with_shift, kernel_convergence_table};
use crate::disk::DiskSpaceParams;
use crate::error::Error;
use crate::gram::{gram_matrix, hermitian_eigenvalues, trace};
use crate::plane::PlaneSpaceParams;
use crate::series::CoefficientSeries;
use crate::space::{FunctionSpace, KernelOptions};
use crate::verify;

pub use output::{Cell, Table};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpaceParams {
    Disk(DiskSpaceParams),
    Plane(PlaneSpaceParams),
}

impl SpaceParams {
    pub fn as_space(&self) -> &dyn FunctionSpace {
        match self {
            SpaceParams::Disk(d) => d,
            SpaceParams::Plane(p) => p,
        }
    }

    fn to_json(self) -> Value {
        match self {
            SpaceParams::Disk(d) => json!({
                "space": "disk", "R": d.radius(), "alpha": d.alpha(), "m": d.order()
            }),
            SpaceParams::Plane(p) => json!({ "space": "plane", "nu": p.nu(), "m": p.order() }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    Kernel {
        space: SpaceParams,
        z: Complex64,
        w: Complex64,
        force_series: bool,
    },
    Norm {
        space: SpaceParams,
        coefficients: CoefficientSeries,
    },
    Gram {
        space: SpaceParams,
        points: Vec<Complex64>,
        force_series: bool,
    },
    Converge {
        nu: f64,
        m: usize,
        z: Complex64,
        w: Complex64,
        radii: Vec<f64>,
    },
    LimitCheck {
        m: usize,
        xi: Complex64,
        rhos: Vec<f64>,
        shift: f64,
    },
    Verify,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Kernel { .. } => "kernel",
            Command::Norm { .. } => "norm",
            Command::Gram { .. } => "gram",
            Command::Converge { .. } => "converge",
            Command::LimitCheck { .. } => "limit-check",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub tolerance: f64,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

/// Everything a command produced. `passed` is false only when `verify`
/// found a failing check.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub table: Table,
    pub passed: bool,
}

impl Report {
    pub fn write<W: Write>(&self, format: OutputFormat, mut out: W) -> std::io::Result<()> {
        match format {
            OutputFormat::Csv => self.table.write_csv(out),
            OutputFormat::Json => {
                let doc = self.table.to_json(self.command, self.params.clone());
                serde_json::to_writer_pretty(&mut out, &doc)?;
                writeln!(out)?;
                out.flush()
            }
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 1 for bad input, 2 for numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Validation(e.to_string())
        }
    }
}

fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let tol = config.tolerance;
    if !(tol > 0.0 && tol < 1.0) {
        return Err(CliError::Validation(format!(
            "--tol must lie in (0, 1), got {tol}"
        )));
    }
    let mut opts = KernelOptions::with_tolerance(tol);
    let command = config.command.name();
    let mut passed = true;

    let (params, table) = match &config.command {
        Command::Kernel {
            space,
            z,
            w,
            force_series,
        } => {
            opts.force_series = *force_series;
            let k = space.as_space().kernel(*z, *w, &opts)?;
            let mut t = Table::new(&["z_re", "z_im", "w_re", "w_im", "kernel_re", "kernel_im"]);
            t.push([z.re, z.im, w.re, w.im, k.re, k.im].map(Cell::Num).to_vec());
            let mut p = space.to_json();
            p["z"] = complex_json(*z);
            p["w"] = complex_json(*w);
            p["force_series"] = json!(force_series);
            (p, t)
        }
        Command::Norm {
            space,
            coefficients,
        } => {
            let s = space.as_space();
            let total = s.norm_sq(coefficients)?;
            let mut t = Table::new(&[
                "degree",
                "coeff_re",
                "coeff_im",
                "monomial_norm_sq",
                "contribution",
            ]);
            for (n, a) in coefficients.coefficients().iter().enumerate() {
                let mono = s.monomial_norm_sq(n)?;
                t.push(vec![
                    Cell::Int(n as i64),
                    Cell::Num(a.re),
                    Cell::Num(a.im),
                    Cell::Num(mono),
                    Cell::Num(a.norm_sqr() * mono),
                ]);
            }
            t.summarize("norm_sq", total);
            (space.to_json(), t)
        }
        Command::Gram {
            space,
            points,
            force_series,
        } => {
            opts.force_series = *force_series;
            let g = gram_matrix(space.as_space(), points, &opts)?;
            let mut t = Table::new(&["i", "j", "re", "im"]);
            for (i, row) in g.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    t.push(vec![
                        Cell::Int(i as i64),
                        Cell::Int(j as i64),
                        Cell::Num(v.re),
                        Cell::Num(v.im),
                    ]);
                }
            }
            let min_eig = hermitian_eigenvalues(&g).first().copied().unwrap_or(0.0);
            t.summarize("min_eigenvalue", min_eig);
            t.summarize("trace", trace(&g));
            let mut p = space.to_json();
            p["points"] = Value::Array(points.iter().copied().map(complex_json).collect());
            (p, t)
        }
        Command::Converge { nu, m, z, w, radii } => {
            let records = kernel_convergence_table(*nu, *m, *z, *w, radii, &opts)?;
            let mut t = Table::new(&[
                "R",
                "re(K_disk)",
                "im(K_disk)",
                "re(K_plane)",
                "im(K_plane)",
                "abs_error",
            ]);
            for r in &records {
                t.push(
                    [
                        r.radius,
                        r.disk_kernel_value.re,
                        r.disk_kernel_value.im,
                        r.plane_kernel_value.re,
                        r.plane_kernel_value.im,
                        r.abs_error,
                    ]
                    .map(Cell::Num)
                    .to_vec(),
                );
            }
            let p = json!({
                "nu": nu, "m": m, "z": complex_json(*z), "w": complex_json(*w), "radii": radii
            });
            (p, t)
        }
        Command::LimitCheck { m, xi, rhos, shift } => {
            let records = hypergeometric_limit_check_with_shift(*m, *xi, rhos, *shift, tol)?;
            let mut t = Table::new(&["rho", "abs_error", "rho_times_error"]);
            for r in &records {
                t.push(
                    [r.rho, r.abs_error, r.rho * r.abs_error]
                        .map(Cell::Num)
                        .to_vec(),
                );
            }
            let p = json!({ "m": m, "xi": complex_json(*xi), "rhos": rhos, "c": shift });
            (p, t)
        }
        Command::Verify => {
            let checks = verify::run_all()?;
            let mut t = Table::new(&["check", "measured", "threshold", "passed"]);
            for c in &checks {
                passed &= c.passed;
                t.push(vec![
                    Cell::Text(c.name.to_string()),
                    Cell::Num(c.measured),
                    Cell::Num(c.threshold),
                    Cell::Bool(c.passed),
                ]);
            }
            (json!({ "seed": verify::SEED }), t)
        }
    };

    let mut params = params;
    params["tol"] = json!(tol);
    Ok(Report {
        command,
        params,
        table,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn cfg(command: Command) -> RunConfig {
        RunConfig {
            command,
            tolerance: 1e-14,
            format: OutputFormat::Csv,
            output: None,
        }
    }

    #[test]
    fn kernel_report() {
        let space = SpaceParams::Disk(DiskSpaceParams::new(1.0, 0.0, 0).unwrap());
        let z = Complex64::new(0.5, 0.0);
        let r = run(&cfg(Command::Kernel {
            space,
            z,
            w: z,
            force_series: false,
        }))
        .unwrap();
        let Cell::Num(k) = r.table.rows[0][4] else {
            panic!()
        };
        assert!((k - 16.0 / (9.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn bad_tolerance_is_validation() {
        let mut c = cfg(Command::Verify);
        c.tolerance = 1.5;
        assert_eq!(run(&c).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn domain_error_is_validation() {
        let space = SpaceParams::Disk(DiskSpaceParams::new(1.0, 0.0, 0).unwrap());
        let z = Complex64::new(1.5, 0.0);
        let e = run(&cfg(Command::Kernel {
            space,
            z,
            w: z,
            force_series: false,
        }))
        .unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }

    #[test]
    fn overflow_is_numerical() {
        let space = SpaceParams::Plane(PlaneSpaceParams::new(1.0, 0).unwrap());
        let coefficients = CoefficientSeries::monomial(400);
        let e = run(&cfg(Command::Norm {
            space,
            coefficients,
        }))
        .unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn gram_summary() {
        let space = SpaceParams::Plane(PlaneSpaceParams::new(1.0, 1).unwrap());
        let points = vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 1.0)];
        let r = run(&cfg(Command::Gram {
            space,
            points,
            force_series: false,
        }))
        .unwrap();
        assert_eq!(r.table.rows.len(), 4);
        let names: Vec<&str> = r.table.summary.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["min_eigenvalue", "trace"]);
        assert!(r.table.summary[0].1 > 0.0);
    }
}
