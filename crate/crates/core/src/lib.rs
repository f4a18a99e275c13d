//! Weighted Bergman–Dirichlet spaces on a disk and Bargmann–Dirichlet spaces
//! on the plane.
//!
//! Functions are represented by finite Taylor coefficient vectors. The crate
//! computes monomial norms, inner products and norms from the coefficient
//! characterization, evaluates reproducing kernels through ₃F₂ / ₂F₂ series
//! (with closed-form shortcuts for the Bergman, classical Dirichlet and Fock
//! cases), and checks all of it against an independent polar-coordinate
//! quadrature. The [`asymptotics`] module tabulates the convergence of the
//! disk kernels with `α = νR²` to the plane kernels as `R` grows.
//!
//! ```
//! use bergman_dirichlet::{DiskSpaceParams, FunctionSpace, KernelOptions};
//! use num_complex::Complex64;
//!
//! let bergman = DiskSpaceParams::new(1.0, 0.0, 0).unwrap();
//! let z = Complex64::new(0.5, 0.0);
//! let k = bergman.kernel(z, z, &KernelOptions::default()).unwrap();
//! assert!((k.re - 16.0 / (9.0 * std::f64::consts::PI)).abs() < 1e-14);
//! ```

pub mod asymptotics;
pub mod cli;
mod dd;
pub mod disk;
pub mod error;
pub mod gram;
pub mod plane;
pub mod quadrature;
pub mod series;
pub mod space;
pub mod special;
pub mod verify;

pub use disk::DiskSpaceParams;
pub use error::{Error, Result};
pub use plane::PlaneSpaceParams;
pub use quadrature::QuadratureRule;
pub use series::{CoefficientSeries, SplitSeries};
pub use space::{FunctionSpace, KernelOptions};
pub use special::{HypergeometricSpec, SeriesSumResult};
