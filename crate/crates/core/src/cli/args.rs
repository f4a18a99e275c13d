//! Argument parsing for `bdspace`.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use super::{CliError, Command, OutputFormat, RunConfig, SpaceParams};
use crate::asymptotics::KERNEL_LIMIT_SHIFT;
use crate::disk::DiskSpaceParams;
use crate::plane::PlaneSpaceParams;
use crate::series::CoefficientSeries;
use crate::special::DEFAULT_TOLERANCE;

#[derive(Debug, Parser)]
#[command(
    name = "bdspace",
    version,
    about = "Bergman-Dirichlet and Bargmann-Dirichlet space calculator"
)]
pub struct Cli {
    /// Relative tolerance for series summation, in (0, 1).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceKind {
    Disk,
    Plane,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    #[arg(long, value_enum)]
    pub space: SpaceKind,

    /// Disk radius (default 1).
    #[arg(long = "R", allow_hyphen_values = true)]
    pub radius: Option<f64>,

    /// Disk weight exponent, > -1 (default 0).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,

    /// Gaussian parameter of the plane space (default 1).
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,

    /// Order of the space.
    #[arg(long, default_value_t = 0)]
    pub m: usize,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Reproducing kernel K(z, w).
    Kernel {
        #[command(flatten)]
        space: SpaceArgs,
        /// "re,im" or "re".
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        w: Complex64,
        /// Sum the hypergeometric series even where a closed form exists.
        #[arg(long)]
        force_series: bool,
    },
    /// Norm of a polynomial given by its Taylor coefficients.
    Norm {
        #[command(flatten)]
        space: SpaceArgs,
        /// "re,im;re,im;..." starting at degree 0.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "coeffs_file")]
        coeffs: Option<String>,
        /// One coefficient per line as "re im"; '#' starts a comment.
        #[arg(long)]
        coeffs_file: Option<PathBuf>,
    },
    /// Gram matrix of the kernel over a point set.
    Gram {
        #[command(flatten)]
        space: SpaceArgs,
        /// "re,im;re,im;...".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "points_file")]
        points: Option<String>,
        /// One point per line as "re im"; '#' starts a comment.
        #[arg(long)]
        points_file: Option<PathBuf>,
        #[arg(long)]
        force_series: bool,
    },
    /// Disk kernel with alpha = nu R² against the plane kernel, per radius.
    Converge {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        w: Complex64,
        /// Comma-separated radii.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        radii: Vec<f64>,
    },
    /// |3F2(1,1,c+rho; m+1,m+1; xi/rho) - 2F2(1,1; m+1,m+1; xi)| per rho.
    LimitCheck {
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        xi: Complex64,
        /// Comma-separated values of rho.
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        rhos: Vec<f64>,
        #[arg(long, default_value_t = KERNEL_LIMIT_SHIFT, allow_hyphen_values = true)]
        c: f64,
    },
    /// Run the built-in invariant checks; exits non-zero if any fails.
    Verify,
}

/// Parses "re,im" or a bare real "re".
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<f64>()
            .map_err(|e| format!("bad number {t:?}: {e}"))
    };
    let z = match parts.as_slice() {
        [re] => Complex64::new(num(re)?, 0.0),
        [re, im] => Complex64::new(num(re)?, num(im)?),
        _ => return Err(format!("expected \"re,im\", got {s:?}")),
    };
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(format!("non-finite complex number {s:?}"));
    }
    Ok(z)
}

/// Parses "re,im;re,im;...".
pub fn parse_complex_list(s: &str) -> Result<Vec<Complex64>, String> {
    s.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_complex)
        .collect()
}

/// Reads one complex number per line as "re im" (or "re,im", or "re"),
/// skipping blank lines and `#` comments.
pub fn read_complex_file(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let joined = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect::<Vec<_>>()
            .join(",");
        let z = parse_complex(&joined)
            .map_err(|e| CliError::Validation(format!("{}:{}: {e}", path.display(), lineno + 1)))?;
        out.push(z);
    }
    Ok(out)
}

impl SpaceArgs {
    pub fn resolve(&self) -> Result<SpaceParams, CliError> {
        let v = |e: crate::Error| CliError::Validation(e.to_string());
        match self.space {
            SpaceKind::Disk => {
                if self.nu.is_some() {
                    return Err(CliError::Validation(
                        "--nu does not apply to --space disk".into(),
                    ));
                }
                let d = DiskSpaceParams::new(
                    self.radius.unwrap_or(1.0),
                    self.alpha.unwrap_or(0.0),
                    self.m,
                )
                .map_err(v)?;
                Ok(SpaceParams::Disk(d))
            }
            SpaceKind::Plane => {
                if self.radius.is_some() || self.alpha.is_some() {
                    return Err(CliError::Validation(
                        "--R and --alpha do not apply to --space plane".into(),
                    ));
                }
                let p = PlaneSpaceParams::new(self.nu.unwrap_or(1.0), self.m).map_err(v)?;
                Ok(SpaceParams::Plane(p))
            }
        }
    }
}

fn inline_or_file(
    inline: &Option<String>,
    file: &Option<PathBuf>,
    what: &str,
) -> Result<Vec<Complex64>, CliError> {
    let values = match (inline, file) {
        (Some(s), None) => parse_complex_list(s).map_err(CliError::Validation)?,
        (None, Some(p)) => read_complex_file(p)?,
        _ => {
            return Err(CliError::Validation(format!(
                "give exactly one of --{what} and --{what}-file"
            )))
        }
    };
    if values.is_empty() {
        return Err(CliError::Validation(format!("no {what} given")));
    }
    Ok(values)
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let command = match self.command {
            Cmd::Kernel {
                space,
                z,
                w,
                force_series,
            } => Command::Kernel {
                space: space.resolve()?,
                z,
                w,
                force_series,
            },
            Cmd::Norm {
                space,
                coeffs,
                coeffs_file,
            } => Command::Norm {
                space: space.resolve()?,
                coefficients: CoefficientSeries::new(inline_or_file(
                    &coeffs,
                    &coeffs_file,
                    "coeffs",
                )?),
            },
            Cmd::Gram {
                space,
                points,
                points_file,
                force_series,
            } => Command::Gram {
                space: space.resolve()?,
                points: inline_or_file(&points, &points_file, "points")?,
                force_series,
            },
            Cmd::Converge { nu, m, z, w, radii } => Command::Converge { nu, m, z, w, radii },
            Cmd::LimitCheck { m, xi, rhos, c } => Command::LimitCheck {
                m,
                xi,
                rhos,
                shift: c,
            },
            Cmd::Verify => Command::Verify,
        };
        Ok(RunConfig {
            command,
            tolerance: self.tol,
            format: self.format,
            output: self.output,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        let cli = Cli::try_parse_from(std::iter::once("bdspace").chain(args.iter().copied()))
            .map_err(|e| CliError::Validation(e.to_string()))?;
        cli.into_config()
    }

    #[test]
    fn complex_forms() {
        assert_eq!(parse_complex("0.5,-1").unwrap(), Complex64::new(0.5, -1.0));
        assert_eq!(parse_complex(" -2 ").unwrap(), Complex64::new(-2.0, 0.0));
        assert!(parse_complex("1,2,3").is_err());
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("nan").is_err());
        assert_eq!(parse_complex_list("1,0; 0,1").unwrap().len(), 2);
    }

    #[test]
    fn kernel_args() {
        let c = parse(&[
            "kernel", "--space", "disk", "--R", "1", "--alpha", "0", "--m", "0", "--z", "0.5,0",
            "--w", "-0.5,0",
        ])
        .unwrap();
        let Command::Kernel {
            space: SpaceParams::Disk(d),
            w,
            ..
        } = c.command
        else {
            panic!()
        };
        assert_eq!(d.radius(), 1.0);
        assert_eq!(w, Complex64::new(-0.5, 0.0));
    }

    #[test]
    fn global_flags_after_subcommand() {
        let c = parse(&[
            "limit-check",
            "--m",
            "1",
            "--xi",
            "1",
            "--rhos",
            "100,1000",
            "--format",
            "json",
            "--tol",
            "1e-12",
        ])
        .unwrap();
        assert_eq!(c.format, OutputFormat::Json);
        assert_eq!(c.tolerance, 1e-12);
        let Command::LimitCheck { rhos, shift, .. } = c.command else {
            panic!()
        };
        assert_eq!(rhos, vec![100.0, 1000.0]);
        assert_eq!(shift, 2.0);
    }

    #[test]
    fn mismatched_space_parameters() {
        assert!(
            parse(&["kernel", "--space", "disk", "--nu", "1", "--z", "0", "--w", "0"]).is_err()
        );
        assert!(
            parse(&["kernel", "--space", "plane", "--R", "2", "--z", "0", "--w", "0"]).is_err()
        );
        assert!(
            parse(&["kernel", "--space", "disk", "--alpha", "-1", "--z", "0", "--w", "0"]).is_err()
        );
    }

    #[test]
    fn coefficient_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.txt");
        std::fs::write(&path, "# f = 1 + i z^2\n1 0\n\n0 0  # z\n0 1\n").unwrap();
        let c = parse(&[
            "norm",
            "--space",
            "plane",
            "--coeffs-file",
            path.to_str().unwrap(),
        ])
        .unwrap();
        let Command::Norm { coefficients, .. } = c.command else {
            panic!()
        };
        assert_eq!(
            coefficients.coefficients(),
            &[
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 1.0)
            ]
        );
    }

    #[test]
    fn points_required() {
        assert!(parse(&["gram", "--space", "plane"]).is_err());
    }
}
