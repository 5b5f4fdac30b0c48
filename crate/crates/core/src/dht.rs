//! Discrete Hankel Transform of integer order on `[0, R]`.
//!
//! The transform matrix follows Lemoine's quadrature construction: with
//! `x_1 < ... < x_{M+1}` the positive zeros of `J_n` and `x_L = x_{M+1}`
//! the scale zero,
//!
//! ```text
//! B[m][j] = (2 / x_L) J_n(x_m x_j / x_L) / |J_{n+1}(x_m) J_{n+1}(x_j)|,
//! ```
//!
//! nodes `r_m = (x_m / x_L) R` and weights `1 / J_{n+1}(x_m)^2`. A forward
//! transform is the symmetric sandwich `g_m = f_m / |J_{n+1}(x_m)|`,
//! `ghat = B g`, `c_j = (2 / x_L) ghat_j / |J_{n+1}(x_j)|`, producing
//! coefficients of `f(r) ~ sum_j c_j J_n(alpha_j r)` with
//! `alpha_j = x_j / R`. The scaling comes from Fourier-Bessel
//! orthogonality combined with the quadrature rule
//! `int_0^R g(r) r dr ~ (2 R^2 / x_L^2) sum_m g(r_m) / J_{n+1}(x_m)^2`;
//! the radius cancels, so coefficients are radius-independent for
//! radius-scaled inputs.

use ndarray::{Array1, Array2};
use rayon::prelude::*;

use crate::specfun::{bessel_j, bessel_j_pair, bessel_j_zeros};
use crate::{Error, Result};

/// Precomputed transform of order `n` and size `M` on `[0, R]`.
///
/// Immutable after construction; transforms against a shared plan may run
/// concurrently.
#[derive(Debug, Clone)]
pub struct DhtPlan {
    order: usize,
    size: usize,
    radius: f64,
    /// `M + 1` positive zeros of `J_n`; the last is the scale zero.
    zeros: Vec<f64>,
    /// Node radii `r_m`, strictly increasing in `(0, R)`.
    nodes: Vec<f64>,
    /// Signed `J_{n+1}(x_m)` at each of the `M` interior zeros.
    j_next: Vec<f64>,
    /// Residuals `J_n(x_m)`, at rounding level; kept for the solver, which
    /// uses the transform zeros verbatim.
    j_residual: Vec<f64>,
    /// Quadrature weights `1 / J_{n+1}(x_m)^2`.
    weights: Vec<f64>,
    matrix: Array2<f64>,
}

impl DhtPlan {
    /// Build the order-`n`, size-`M` plan on `[0, radius]`. Costs `O(M^2)`
    /// (matrix fill dominates).
    pub fn new(order: usize, size: usize, radius: f64) -> Result<Self> {
        if size < 4 {
            return Err(Error::Domain(format!("DHT size must be >= 4, got {size}")));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("DHT radius must be > 0, got {radius}")));
        }
        let zeros = bessel_j_zeros(order, size + 1)?.zeros;
        let scale = zeros[size];
        let nodes: Vec<f64> = zeros[..size].iter().map(|&z| (z / scale) * radius).collect();
        let mut j_next = Vec::with_capacity(size);
        let mut j_residual = Vec::with_capacity(size);
        for &z in &zeros[..size] {
            let (jn, jn1) = bessel_j_pair(order, z);
            j_residual.push(jn);
            j_next.push(jn1);
        }
        let weights: Vec<f64> = j_next.iter().map(|&j| 1.0 / (j * j)).collect();
        let absj: Vec<f64> = j_next.iter().map(|&j| j.abs()).collect();

        // upper triangle, then mirror: symmetric to the bit
        let rows: Vec<Vec<f64>> = (0..size)
            .into_par_iter()
            .map(|m| {
                (m..size)
                    .map(|j| {
                        let arg = zeros[m] * zeros[j] / scale;
                        (2.0 / scale) * bessel_j(order, arg) / (absj[m] * absj[j])
                    })
                    .collect()
            })
            .collect();
        let mut matrix = Array2::zeros((size, size));
        for (m, row) in rows.iter().enumerate() {
            for (off, &v) in row.iter().enumerate() {
                let j = m + off;
                matrix[(m, j)] = v;
                matrix[(j, m)] = v;
            }
        }

        Ok(DhtPlan { order, size, radius, zeros, nodes, j_next, j_residual, weights, matrix })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// The scale zero `x_{M+1}`.
    pub fn scale_zero(&self) -> f64 {
        self.zeros[self.size]
    }

    /// The `M` interior zeros `x_1..x_M`.
    pub fn interior_zeros(&self) -> &[f64] {
        &self.zeros[..self.size]
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub(crate) fn j_next(&self) -> &[f64] {
        &self.j_next
    }

    pub(crate) fn j_residual(&self) -> &[f64] {
        &self.j_residual
    }

    pub fn matrix(&self) -> &Array2<f64> {
        &self.matrix
    }

    /// Radial wavenumbers `alpha_j = x_j / R`.
    pub fn alphas(&self) -> Vec<f64> {
        self.zeros[..self.size].iter().map(|&z| z / self.radius).collect()
    }

    /// Forward transform of samples taken at [`DhtPlan::nodes`].
    pub fn apply(&self, samples: &[f64]) -> Result<HankelCoefficients> {
        if samples.len() != self.size {
            return Err(Error::Shape(format!(
                "expected {} samples at the transform nodes, got {}",
                self.size,
                samples.len()
            )));
        }
        let g: Array1<f64> = samples
            .iter()
            .zip(&self.j_next)
            .map(|(&s, &j)| s / j.abs())
            .collect();
        let ghat = self.matrix.dot(&g);
        let scale = self.scale_zero();
        let c: Vec<f64> = ghat
            .iter()
            .zip(&self.j_next)
            .map(|(&gh, &j)| (2.0 / scale) * gh / j.abs())
            .collect();
        Ok(HankelCoefficients {
            order: self.order,
            radius: self.radius,
            alpha: self.alphas(),
            c,
        })
    }

    /// Evaluate the expansion back on the transform nodes,
    /// `sum_j c_j J_n(alpha_j r_m)`, reusing the plan matrix.
    pub fn nodes_from_coefficients(&self, coeffs: &HankelCoefficients) -> Result<Vec<f64>> {
        if coeffs.c.len() != self.size || coeffs.order != self.order {
            return Err(Error::Shape("coefficient vector does not match this plan".into()));
        }
        let scale = self.scale_zero();
        let d: Array1<f64> = coeffs
            .c
            .iter()
            .zip(&self.j_next)
            .map(|(&c, &j)| c * j.abs())
            .collect();
        let bd = self.matrix.dot(&d);
        Ok(bd
            .iter()
            .zip(&self.j_next)
            .map(|(&v, &j)| (scale / 2.0) * v * j.abs())
            .collect())
    }
}

/// Fourier-Bessel expansion coefficients produced by [`DhtPlan::apply`]:
/// `f(r) ~ sum_j c[j] J_n(alpha[j] r)`.
#[derive(Debug, Clone)]
pub struct HankelCoefficients {
    pub order: usize,
    pub radius: f64,
    pub alpha: Vec<f64>,
    pub c: Vec<f64>,
}
