//! Finite Taylor coefficient vectors standing in for analytic functions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Highest degree accepted by the CLI and used for empirical suprema.
pub const DEFAULT_DEGREE_CAP: usize = 512;

/// Where the represented function is known to be analytic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum AnalyticDomain {
    Disk { radius: f64 },
    Entire,
}

/// `f(z) = Σ a_n z^n` truncated to finitely many coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSeries {
    coefficients: Vec<Complex64>,
    domain: AnalyticDomain,
}

impl CoefficientSeries {
    /// A polynomial, hence entire.
    pub fn new(coefficients: Vec<Complex64>) -> Self {
        CoefficientSeries {
            coefficients,
            domain: AnalyticDomain::Entire,
        }
    }

    pub fn from_real(coefficients: &[f64]) -> Self {
        Self::new(
            coefficients
                .iter()
                .map(|&a| Complex64::new(a, 0.0))
                .collect(),
        )
    }

    pub fn with_domain(mut self, domain: AnalyticDomain) -> Self {
        self.domain = domain;
        self
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
        c[n] = Complex64::new(1.0, 0.0);
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn domain(&self) -> AnalyticDomain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Index of the last nonzero coefficient, `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients
            .iter()
            .rposition(|a| *a != Complex64::new(0.0, 0.0))
    }

    /// Coefficient of `z^n`, zero beyond the stored range.
    pub fn coefficient(&self, n: usize) -> Complex64 {
        self.coefficients
            .get(n)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Horner evaluation at `z`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }

    /// `Σ |a_n| |z|^n`, the scale against which `eval` rounding is measured.
    pub fn eval_abs(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, a| acc * r + a.norm())
    }

    /// `k`-th derivative: the coefficient of `z^(n-k)` is `a_n · n!/(n-k)!`.
    pub fn derivative(&self, k: usize) -> Self {
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .skip(k)
            .map(|(n, &a)| {
                let falling: f64 = ((n - k + 1)..=n).map(|j| j as f64).product();
                a * falling
            })
            .collect();
        CoefficientSeries {
            coefficients,
            domain: self.domain,
        }
    }

    /// Splits into the part of degree `< m` and the part of degree `>= m`.
    pub fn split(&self, m: usize) -> SplitSeries {
        let cut = m.min(self.coefficients.len());
        let head = CoefficientSeries {
            coefficients: self.coefficients[..cut].to_vec(),
            domain: self.domain,
        };
        let mut tail = self.coefficients.clone();
        if cut == tail.len() {
            tail.clear();
        } else {
            tail[..cut].fill(Complex64::new(0.0, 0.0));
        }
        SplitSeries {
            head,
            tail: CoefficientSeries {
                coefficients: tail,
                domain: self.domain,
            },
        }
    }
}

/// `f = f_{1,m} + f_{2,m}`: the degree `< m` head and the degree `>= m` tail.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitSeries {
    pub head: CoefficientSeries,
    pub tail: CoefficientSeries,
}

impl SplitSeries {
    /// Coefficient-wise `head + tail`.
    pub fn recombine(&self) -> CoefficientSeries {
        let len = self.head.len().max(self.tail.len());
        CoefficientSeries {
            coefficients: (0..len)
                .map(|n| self.head.coefficient(n) + self.tail.coefficient(n))
                .collect(),
            domain: self.head.domain,
        }
    }
}
