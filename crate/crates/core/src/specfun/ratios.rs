//! Ratio recursions for the modified Bessel functions and the well-scaled
//! products built from them.
//!
//! The solver never evaluates `I_n` or `K_n` directly. It works with the
//! ratios `I_{i+1}(x)/I_i(x)` (stable by downward recurrence, seeded from
//! the large-order asymptotic expansion) and `K_{i+1}(x)/K_i(x)` (stable
//! upward, seeded with `K_1/K_0` from the scaled kernels), and assembles
//! `I_n K_n` and the split product `I_n(kappa r) K_n(kappa R)` by
//! multiplying ratio pairs together before joining the running product, so
//! no intermediate ever leaves the representable range.

use super::scaled::{i0_scaled, k0_scaled, k1_scaled};

/// Ratio tables `I_{i+1}(x)/I_i(x)` and `K_{i+1}(x)/K_i(x)` for
/// `i = 0..order_max`, for one argument `x > 0`.
///
/// Immutable after construction; the order-zero scaled kernel values are
/// cached so products can be assembled without re-evaluating them.
#[derive(Debug, Clone)]
pub struct RatioTable {
    pub order_max: usize,
    pub argument: f64,
    pub i_ratio: Vec<f64>,
    pub k_ratio: Vec<f64>,
    pub i0e: f64,
    pub k0e: f64,
}

impl RatioTable {
    pub fn new(order_max: usize, x: f64) -> Self {
        assert!(x > 0.0 && x.is_finite(), "RatioTable: argument must be > 0, got {x}");
        RatioTable {
            order_max,
            argument: x,
            i_ratio: i_ratio_sequence(order_max, x),
            k_ratio: k_ratio_sequence(order_max, x),
            i0e: i0_scaled(x),
            k0e: k0_scaled(x),
        }
    }

    /// `I_n(x) K_n(x)` from the cached kernels and ratio pairs.
    pub fn ik_product(&self, n: usize) -> f64 {
        assert!(n <= self.order_max, "ik_product: order {n} exceeds table order {}", self.order_max);
        let mut p = self.i0e * self.k0e;
        for i in 0..n {
            p *= self.i_ratio[i] * self.k_ratio[i];
        }
        p
    }

    /// `I_{n+1}(x)/I_n(x) + K_{n+1}(x)/K_n(x)`, the bracket of the local
    /// Green's-function term.
    pub fn ratio_sum(&self, n: usize) -> f64 {
        self.i_ratio[n] + self.k_ratio[n]
    }
}

/// `K_{i+1}(x)/K_i(x)` for `i = 0..n`, by upward recurrence
/// `K_{i+1}/K_i = 2i/x + 1/(K_i/K_{i-1})` seeded with `K_1/K_0`.
pub fn k_ratio_sequence(n: usize, x: f64) -> Vec<f64> {
    assert!(x > 0.0 && x.is_finite(), "k_ratio_sequence: argument must be > 0, got {x}");
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return out;
    }
    let mut r = k1_scaled(x) / k0_scaled(x);
    out.push(r);
    for i in 1..n {
        r = 2.0 * i as f64 / x + 1.0 / r;
        out.push(r);
    }
    out
}

/// `I_{i+1}(x)/I_i(x)` for `i = 0..n`.
///
/// For small arguments, `(x/2)^2 < n + 1`, every ratio comes from the
/// ascending series of `I_n` in normalized form. Otherwise the downward
/// recurrence `I_nu/I_{nu-1} = x/(2 nu + x I_{nu+1}/I_nu)` runs from
/// `nu = max(n + 8, 32)`, seeded with the large-order asymptotic ratio; the
/// recurrence contracts the seed error far below the 1e-12 contract.
pub fn i_ratio_sequence(n: usize, x: f64) -> Vec<f64> {
    assert!(x > 0.0 && x.is_finite(), "i_ratio_sequence: argument must be > 0, got {x}");
    if n == 0 {
        return Vec::new();
    }
    if 0.25 * x * x < (n + 1) as f64 {
        return (0..n).map(|i| i_ratio_series(i, x)).collect();
    }
    let start = (n + 8).max(32);
    let mut out = vec![0.0; n];
    let mut r = olver_ratio(start as f64, x);
    for nu in (1..start).rev() {
        r = x / (2.0 * nu as f64 + x * r);
        if nu <= n {
            out[nu - 1] = r;
        }
    }
    out
}

/// `I_{i+1}(x)/I_i(x)` from the ascending series with the common
/// `(x/2)^i / i!` prefactor divided out; every term is positive, so the
/// sums are perfectly conditioned. Terms below 1e-17 of the running sum
/// are dropped, which keeps the ratio well inside its 1e-12 contract.
fn i_ratio_series(i: usize, x: f64) -> f64 {
    let y = 0.25 * x * x;
    let series = |order: usize| -> f64 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..400 {
            term *= y / ((k * (order + k)) as f64);
            sum += term;
            if term < 1e-17 * sum {
                break;
            }
        }
        sum
    };
    0.5 * x / (i + 1) as f64 * series(i + 1) / series(i)
}

fn olver_u_series(nu: f64, x: f64) -> (f64, f64) {
    // returns (sqrt(1+z^2), truncated u_q(t) series) with z = x/nu
    let z = x / nu;
    let s = (1.0 + z * z).sqrt();
    let t = 1.0 / s;
    let t2 = t * t;
    let u1 = t * (3.0 - 5.0 * t2) / 24.0;
    let u2 = t2 * (81.0 - t2 * (462.0 - 385.0 * t2)) / 1152.0;
    let u3 = t * t2 * (30375.0 - t2 * (369603.0 - t2 * (765765.0 - 425425.0 * t2))) / 414720.0;
    (s, 1.0 + (u1 + (u2 + u3 / nu) / nu) / nu)
}

/// Large-order asymptotic estimate of `I_n(x)`, truncated after the
/// `u_3` term. Only the ratio of adjacent orders is contractual
/// (relative error `<= 1e-6` for `n >= 32`); the value itself may
/// overflow or underflow at extreme arguments.
pub fn olver_i(n: usize, x: f64) -> f64 {
    debug_assert!(n >= 8, "olver_i: order {n} below accuracy contract");
    assert!(x > 0.0 && x.is_finite(), "olver_i: argument must be > 0, got {x}");
    let nu = n as f64;
    let z = x / nu;
    let (s, series) = olver_u_series(nu, x);
    let eta = s + (z / (1.0 + s)).ln();
    (nu * eta).exp() / ((2.0 * std::f64::consts::PI * nu).sqrt() * s.sqrt()) * series
}

/// Asymptotic `I_nu(x)/I_{nu-1}(x)` used to seed the downward recurrence.
///
/// The exponent difference `nu eta(x/nu) - (nu-1) eta(x/(nu-1))` is
/// evaluated in a cancellation-free form; subtracting the two exponents
/// directly would cost ~ulp(x) of relative accuracy at large `x`.
fn olver_ratio(nu: f64, x: f64) -> f64 {
    let mu = nu - 1.0;
    let s_nu = f64::hypot(nu, x);
    let s_mu = f64::hypot(mu, x);
    let ds = (nu + mu) / (s_nu + s_mu); // s_nu - s_mu
    let delta = ds + (x / (mu + s_mu)).ln() - nu * ((1.0 + ds) / (mu + s_mu)).ln_1p();
    let (_, ser_nu) = olver_u_series(nu, x);
    let (_, ser_mu) = olver_u_series(mu, x);
    // prefactor ratio: sqrt(mu/nu) * ((1+z_mu^2)/(1+z_nu^2))^{1/4}
    let pref = (mu / nu).sqrt() * (s_mu * nu / (mu * s_nu)).sqrt();
    delta.exp() * pref * (ser_nu / ser_mu)
}

/// `I_n(x) K_n(x)` for a single argument.
pub fn ik_product(n: usize, x: f64) -> f64 {
    RatioTable::new(n, x).ik_product(n)
}

/// `I_n(kappa r) K_n(kappa R)` for `0 <= r <= R`, distributed as
/// `[I_0(kr) e^{-kr}][K_0(kR) e^{kR}] prod_i A (I_{i+1}/I_i)(kr) (K_{i+1}/K_i)(kR)`
/// with `A = e^{kappa (r - R)/n}`, so each factor of the product is O(1).
/// May underflow to exactly 0 once `kappa (R - r)` exceeds ~745; the true
/// value is then below the smallest representable double and the zero is
/// returned rather than an error.
pub fn ik_product_split(n: usize, kappa: f64, r: f64, radius: f64) -> f64 {
    assert!(kappa > 0.0 && kappa.is_finite(), "ik_product_split: kappa must be > 0, got {kappa}");
    assert!((0.0..=radius).contains(&r), "ik_product_split: need 0 <= r <= R, got r = {r}, R = {radius}");
    if r == 0.0 {
        // I_n(0) is 1 for n = 0 and 0 otherwise
        return if n == 0 {
            k0_scaled(kappa * radius) * (-kappa * radius).exp()
        } else {
            0.0
        };
    }
    let table_r = RatioTable::new(n, kappa * r);
    let table_outer = RatioTable::new(n, kappa * radius);
    ik_product_split_tables(&table_r, &table_outer, n)
}

/// `I_n(x_r) K_n(x_R)` from precomputed ratio tables at the two arguments.
pub fn ik_product_split_tables(inner: &RatioTable, outer: &RatioTable, n: usize) -> f64 {
    debug_assert!(inner.argument <= outer.argument);
    let head = inner.i0e * outer.k0e;
    if n == 0 {
        return head * (inner.argument - outer.argument).exp();
    }
    let a = ((inner.argument - outer.argument) / n as f64).exp();
    let mut p = head;
    for i in 0..n {
        p *= a * inner.i_ratio[i] * outer.k_ratio[i];
    }
    p
}
