//! Closed-form convolution of the modified-Bessel Green's function with
//! order-n Bessel modes, and the mode solver built on it.
//!
//! The Green's function of `u'' + u'/r - (n^2/r^2 + kappa^2) u = f` on
//! `[0, R]` with axis regularity and outer decay is
//! `G_n(kappa, r, s) = -s I_n(kappa r_<) K_n(kappa r_>)`. Its convolution
//! with `J_n(alpha s)` has a closed form in which modified Bessel
//! functions enter only through well-scaled ratios and products:
//!
//! ```text
//! int_0^R G_n J_n(alpha s) ds =
//!   - R I_n(kr) K_n(kR) / (a^2 + k^2) [ a J_{n+1}(aR) - k J_n(aR) K_{n+1}(kR)/K_n(kR) ]
//!   - k r I_n(kr) K_n(kr) J_n(ar) / (a^2 + k^2) [ I_{n+1}(kr)/I_n(kr) + K_{n+1}(kr)/K_n(kr) ]
//! ```
//!
//! for `r != 0`, with the axis values `AXIS_SIGN / (a^2 + k^2)` for
//! `n = 0` and `0` otherwise. The unscaled closed-form indefinite
//! integrals it was assembled from stay available as small-parameter
//! oracles ([`oracle_integral_ij`], [`oracle_integral_kj`]).

use crate::dht::{DhtPlan, HankelCoefficients};
use crate::specfun::{
    bessel_j, bessel_j_pair, i0_scaled, ik_product_split_tables, k0_scaled, RatioTable,
};
use crate::{Error, Result};

/// Sign of the on-axis convolution value for order zero.
///
/// Fixed once by requiring the differential-operator residual of a solved
/// mode to reproduce `+f` (not `-f`); pinned by the residual tests.
pub const AXIS_SIGN: f64 = -1.0;

/// `int_0^R G_n(kappa, r, s) J_n(alpha s) ds`.
///
/// `ratios_r` and `ratios_outer` must be tables of order at least `n + 1`
/// at arguments `kappa * r` and `kappa * R`; they are ignored for `r = 0`.
pub fn green_convolve(
    n: usize,
    kappa: f64,
    alpha: f64,
    r: f64,
    radius: f64,
    ratios_r: &RatioTable,
    ratios_outer: &RatioTable,
) -> f64 {
    assert!(kappa > 0.0 && kappa.is_finite(), "green_convolve: kappa must be > 0, got {kappa}");
    assert!((0.0..=radius).contains(&r), "green_convolve: need 0 <= r <= R, got r = {r}");
    let denom = alpha * alpha + kappa * kappa;
    if r == 0.0 {
        return if n == 0 { AXIS_SIGN / denom } else { 0.0 };
    }
    debug_assert_eq!(ratios_r.argument, kappa * r);
    debug_assert_eq!(ratios_outer.argument, kappa * radius);
    let (jn_outer, jn1_outer) = bessel_j_pair(n, alpha * radius);
    let krat_outer = ratios_outer.k_ratio[n];
    let split = ik_product_split_tables(ratios_r, ratios_outer, n);
    let boundary = -radius * split / denom * (alpha * jn1_outer - kappa * jn_outer * krat_outer);
    let local = ratios_r.ik_product(n);
    let jnr = bessel_j(n, alpha * r);
    let interior = -kappa * r * local * jnr / denom * ratios_r.ratio_sum(n);
    boundary + interior
}

/// Solution of one `(n, kappa)` mode sampled at `eval_points`.
#[derive(Debug, Clone)]
pub struct ModeSolution {
    pub order: usize,
    pub kappa: f64,
    pub radius: f64,
    pub eval_points: Vec<f64>,
    pub values: Vec<f64>,
}

/// Solve `u'' + u'/r - (n^2/r^2 + kappa^2) u = f` given the Fourier-Bessel
/// coefficients of `f`, evaluating the solution at `eval_points`.
///
/// Ratio tables are computed once per evaluation point and once for the
/// outer radius, never per coefficient, so the cost after setup is one
/// `J_n` evaluation per (coefficient, point) pair: `O(M * NP)`.
pub fn solve_mode(
    plan: &DhtPlan,
    kappa: f64,
    coeffs: &HankelCoefficients,
    eval_points: &[f64],
) -> Result<ModeSolution> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::Domain(format!("mode solver requires kappa > 0, got {kappa}")));
    }
    if coeffs.c.len() != plan.size() || coeffs.order != plan.order() {
        return Err(Error::Shape("coefficients do not match the transform plan".into()));
    }
    let n = plan.order();
    let radius = plan.radius();
    if let Some(&bad) = eval_points.iter().find(|&&r| !(0.0..=radius).contains(&r)) {
        return Err(Error::Domain(format!(
            "evaluation point {bad} outside [0, {radius}]"
        )));
    }

    let alphas = &coeffs.alpha;
    let denoms: Vec<f64> = alphas.iter().map(|&a| a * a + kappa * kappa).collect();
    let outer = RatioTable::new(n + 1, kappa * radius);
    let krat_outer = outer.k_ratio[n];

    // boundary bracket contracted with the coefficients once per solve
    let mut boundary_sum = 0.0;
    for j in 0..plan.size() {
        let e = -radius
            * (alphas[j] * plan.j_next()[j] - kappa * plan.j_residual()[j] * krat_outer)
            / denoms[j];
        boundary_sum += coeffs.c[j] * e;
    }

    let values: Vec<f64> = eval_points
        .iter()
        .map(|&r| {
            if r == 0.0 {
                if n == 0 {
                    let mut s = 0.0;
                    for j in 0..plan.size() {
                        s += coeffs.c[j] * (AXIS_SIGN / denoms[j]);
                    }
                    s
                } else {
                    0.0
                }
            } else {
                let table = RatioTable::new(n + 1, kappa * r);
                let split = ik_product_split_tables(&table, &outer, n);
                let local_factor = -kappa * r * table.ik_product(n) * table.ratio_sum(n);
                let mut interior = 0.0;
                for j in 0..plan.size() {
                    interior += coeffs.c[j] * bessel_j(n, alphas[j] * r) / denoms[j];
                }
                split * boundary_sum + local_factor * interior
            }
        })
        .collect();

    if let Some(&bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Numerical(format!(
            "mode solution produced a non-finite value {bad} (n = {n}, kappa = {kappa})"
        )));
    }
    Ok(ModeSolution { order: n, kappa, radius, eval_points: eval_points.to_vec(), values })
}

fn i_unscaled(n: usize, x: f64) -> f64 {
    let t = RatioTable::new(n, x);
    let mut v = i0_scaled(x) * x.exp();
    for i in 0..n {
        v *= t.i_ratio[i];
    }
    v
}

fn k_unscaled(n: usize, x: f64) -> f64 {
    let t = RatioTable::new(n, x);
    let mut v = k0_scaled(x) * (-x).exp();
    for i in 0..n {
        v *= t.k_ratio[i];
    }
    v
}

/// Closed form of `int_0^r I_n(kappa s) J_n(alpha s) s ds` with unscaled
/// Bessel functions. Small-parameter oracle only: representable for
/// roughly `n <= 8`, `kappa r <= 30`.
pub fn oracle_integral_ij(n: usize, kappa: f64, alpha: f64, r: f64) -> f64 {
    assert!(r >= 0.0, "oracle_integral_ij: r must be >= 0");
    if r == 0.0 {
        return 0.0;
    }
    let (jn, jn1) = bessel_j_pair(n, alpha * r);
    (alpha * jn1 * i_unscaled(n, kappa * r) + kappa * i_unscaled(n + 1, kappa * r) * jn) * r
        / (alpha * alpha + kappa * kappa)
}

/// Closed form of `int_0^r K_n(kappa s) J_n(alpha s) s ds`; the
/// `(alpha/kappa)^n` term comes from the lower limit. Same small-parameter
/// box as [`oracle_integral_ij`].
pub fn oracle_integral_kj(n: usize, kappa: f64, alpha: f64, r: f64) -> f64 {
    assert!(r > 0.0, "oracle_integral_kj: r must be > 0");
    let (jn, jn1) = bessel_j_pair(n, alpha * r);
    ((alpha / kappa).powi(n as i32) + alpha * r * jn1 * k_unscaled(n, kappa * r)
        - kappa * r * k_unscaled(n + 1, kappa * r) * jn)
        / (alpha * alpha + kappa * kappa)
}

/// The convolution assembled directly from the two unscaled indefinite
/// integrals; agrees with [`green_convolve`] on the small-parameter box
/// and is used to validate it.
pub fn convolve_from_oracles(n: usize, kappa: f64, alpha: f64, r: f64, radius: f64) -> f64 {
    let inner = if r > 0.0 {
        k_unscaled(n, kappa * r) * oracle_integral_ij(n, kappa, alpha, r)
    } else {
        0.0
    };
    let outer_part = oracle_integral_kj(n, kappa, alpha, radius)
        - if r > 0.0 { oracle_integral_kj(n, kappa, alpha, r) } else { 0.0 };
    let i_r = if r > 0.0 { i_unscaled(n, kappa * r) } else if n == 0 { 1.0 } else { 0.0 };
    -(inner + i_r * outer_part)
}
