//! Ordinary Bessel function `J_n` for integer orders and its positive zeros.
//!
//! `J_0` and `J_1` use the ascending series for tiny arguments, backward
//! recurrence with Neumann-sum normalization in the middle range, and the
//! large-argument modulus/phase expansion beyond `x = 25`. Higher orders
//! recur upward from `J_0`, `J_1` when `n <= x` (stable there) and
//! otherwise evaluate the continued fraction for `J_n/J_{n-1}` followed by
//! backward recurrence, normalized against `J_0` or `J_1`.
//!
//! Zeros are found by a scan for a sign change followed by
//! bisection-safeguarded Newton iteration, O(1) function evaluations per
//! zero. The contract box is `n <= 512`, `0 <= x <= 2e4`, absolute error
//! `<= 1e-13`.

use crate::{Error, Result};

/// Largest order the evaluation contract covers.
pub const MAX_ORDER: usize = 512;
/// Largest argument the evaluation contract covers.
pub const MAX_ARGUMENT: f64 = 2.0e4;

const PI_4_HI: f64 = 0.785_398_163_397_448_3;
const PI_4_LO: f64 = 3.061_616_997_868_383e-17;

/// J_0, J_1 by the ascending series; adequate for `x <= 1`.
fn j01_series(x: f64) -> (f64, f64) {
    let y = 0.25 * x * x;
    let mut term = 1.0;
    let mut s0 = 1.0;
    for k in 1..30 {
        term *= -y / ((k * k) as f64);
        s0 += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    let mut term = 0.5 * x;
    let mut s1 = term;
    for k in 1..30 {
        term *= -y / ((k * (k + 1)) as f64);
        s1 += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    (s0, s1)
}

/// J_0, J_1 by backward recurrence normalized with the Neumann sum
/// `J_0 + 2 J_2 + 2 J_4 + ... = 1`; used on `1 <= x < 25`.
fn j01_miller(x: f64) -> (f64, f64) {
    let mut start = x as usize + 28;
    if start % 2 == 1 {
        start += 1;
    }
    let mut jp = 0.0_f64; // J_{k+1}
    let mut j = 1e-30_f64; // J_k
    let mut sum = 0.0_f64;
    let mut j1 = 0.0_f64;
    for k in (1..=start).rev() {
        let jm = (2.0 * k as f64 / x) * j - jp;
        jp = j;
        j = jm;
        if k == 1 {
            j1 = jp;
        }
        if k % 2 == 0 {
            sum += 2.0 * jp;
        }
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            sum *= 1e-250;
            j1 *= 1e-250;
        }
    }
    sum += j;
    (j / sum, j1 / sum)
}

/// Modulus/phase asymptotic expansion for J_nu, nu in {0, 1}, x >= 25.
fn j_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut a = 1.0;
    for k in 1..24 {
        let kf = k as f64;
        a *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (kf * 8.0 * x);
        match k % 4 {
            1 => q += a,
            2 => p -= a,
            3 => q -= a,
            _ => p += a,
        }
        if a.abs() < 1e-19 {
            break;
        }
    }
    // chi = x - (2 nu + 1) pi/4, with pi/4 split to keep the phase exact
    let c = 2.0 * nu + 1.0;
    let chi = (x - c * PI_4_HI) - c * PI_4_LO;
    (2.0 / (std::f64::consts::PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

fn j01(x: f64) -> (f64, f64) {
    if x < 1.0 {
        j01_series(x)
    } else if x < 25.0 {
        j01_miller(x)
    } else {
        (j_asymptotic(0.0, x), j_asymptotic(1.0, x))
    }
}

/// Continued fraction for `J_n(x)/J_{n-1}(x)`; the term count is chosen by
/// the growth of the dominant-solution recurrence.
fn j_ratio_cf(n: usize, x: f64) -> f64 {
    let w = 2.0 * n as f64 / x;
    let h = 2.0 / x;
    let mut z = w + h;
    let mut q0 = w;
    let mut q1 = w * z - 1.0;
    let mut terms = 1usize;
    while q1 < 1e17 && terms < 60_000 {
        terms += 1;
        z += h;
        let q = z * q1 - q0;
        q0 = q1;
        q1 = q;
    }
    let mut t = 0.0_f64;
    for i in (0..=terms).rev() {
        t = 1.0 / (2.0 * (n + i) as f64 / x - t);
    }
    t
}

/// `J_n(x)` for integer `n >= 0`, `x >= 0`. Absolute error `<= 1e-13` on
/// the contract box `n <= 512`, `x <= 2e4`.
pub fn bessel_j(n: usize, x: f64) -> f64 {
    debug_assert!(n <= MAX_ORDER && (0.0..=MAX_ARGUMENT).contains(&x), "bessel_j({n}, {x}) outside contract box");
    assert!(x >= 0.0 && x.is_finite(), "bessel_j: x must be >= 0, got {x}");
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    let (j0, j1) = j01(x);
    match n {
        0 => j0,
        1 => j1,
        _ if (n as f64) <= x => {
            let (mut a, mut b) = (j0, j1);
            for k in 1..n {
                let next = (2.0 * k as f64 / x) * b - a;
                a = b;
                b = next;
            }
            b
        }
        _ => {
            let ratio = j_ratio_cf(n, x);
            // backward recurrence from (J_n, J_{n-1}) ~ (ratio, 1)
            let mut a = ratio; // ~ J_i
            let mut b = 1.0; // ~ J_{i-1}
            let mut t = ratio;
            for i in (1..n).rev() {
                let bm = (2.0 * i as f64 / x) * b - a;
                a = b;
                b = bm;
                if b.abs() > 1e250 {
                    a /= b;
                    t /= b;
                    b = 1.0;
                }
            }
            // now b ~ J_0, a ~ J_1 up to a common factor
            if j0.abs() >= j1.abs() {
                t * (j0 / b)
            } else {
                t * (j1 / a)
            }
        }
    }
}

/// `(J_n(x), J_{n+1}(x))` in one pass.
pub fn bessel_j_pair(n: usize, x: f64) -> (f64, f64) {
    assert!(x >= 0.0 && x.is_finite(), "bessel_j_pair: x must be >= 0, got {x}");
    if x == 0.0 {
        return (bessel_j(n, x), 0.0);
    }
    if (n as f64) + 1.0 <= x {
        let (j0, j1) = j01(x);
        let (mut a, mut b) = (j0, j1);
        for k in 1..=n {
            let next = (2.0 * k as f64 / x) * b - a;
            a = b;
            b = next;
        }
        // a = J_n, b = J_{n+1}
        (a, b)
    } else {
        (bessel_j(n, x), bessel_j(n + 1, x))
    }
}

/// The first positive zeros of `J_n`.
///
/// `zeros[k]` is the (k+1)-th positive zero; residuals satisfy
/// `|J_n(zeros[k])| <= 1e-13` and the gaps tend to pi.
#[derive(Debug, Clone)]
pub struct BesselZeros {
    pub order: usize,
    pub zeros: Vec<f64>,
}

impl BesselZeros {
    /// Consecutive spacings `zeros[k+1] - zeros[k]`.
    pub fn gaps(&self) -> Vec<f64> {
        self.zeros.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

/// McMahon's expansion for the k-th zero (1-based); accurate for k >> n.
fn mcmahon_zero(n: usize, k: usize) -> f64 {
    let mu = 4.0 * (n * n) as f64;
    let beta = (k as f64 + 0.5 * n as f64 - 0.25) * std::f64::consts::PI;
    let b8 = 8.0 * beta;
    beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

/// Find the first `count` positive zeros of `J_n` by a forward scan for a
/// sign change followed by bisection-safeguarded Newton iteration.
pub fn bessel_j_zeros(n: usize, count: usize) -> Result<BesselZeros> {
    assert!(count >= 1, "bessel_j_zeros: count must be >= 1");
    debug_assert!(n <= MAX_ORDER && count <= 4096, "bessel_j_zeros({n}, {count}) outside contract box");
    let mut zeros = Vec::with_capacity(count);
    // J_n > 0 on (0, j_{n,1}); start the first scan near the turning point,
    // where J_n is still comfortably representable.
    let mut lo = if n == 0 { 0.5 } else { n as f64 + 0.5 * (n as f64).cbrt() };
    let mut f_lo = bessel_j(n, lo);
    let step = 0.5 * std::f64::consts::PI;
    for k in 1..=count {
        // McMahon is reliable deep into the zero sequence; use it to jump
        // the scan forward when it lands safely beyond the current point.
        if k > n {
            let guess = mcmahon_zero(n, k);
            if guess - step > lo && (k == 1 || guess - step > zeros[k - 2] + 0.2) {
                let cand = guess - step;
                let f_cand = bessel_j(n, cand);
                if f_cand.signum() == f_lo.signum() {
                    lo = cand;
                    f_lo = f_cand;
                }
            }
        }
        // scan for a bracket
        let mut hi;
        let mut f_hi;
        let mut tries = 0;
        loop {
            hi = lo + step;
            f_hi = bessel_j(n, hi);
            if f_hi == 0.0 {
                // landed on the zero exactly
                break;
            }
            if f_hi.signum() != f_lo.signum() {
                break;
            }
            lo = hi;
            f_lo = f_hi;
            tries += 1;
            if tries > 10_000 {
                return Err(Error::Convergence(format!(
                    "no sign change found for zero {k} of J_{n}"
                )));
            }
        }
        let z = if f_hi == 0.0 {
            hi
        } else {
            newton_zero(n, lo, hi, f_lo)?
        };
        zeros.push(z);
        lo = z + 0.25;
        f_lo = bessel_j(n, lo);
    }
    Ok(BesselZeros { order: n, zeros })
}

/// Newton iteration on `J_n` within the bracket `[lo, hi]`, falling back to
/// bisection whenever a step leaves the bracket.
fn newton_zero(n: usize, mut lo: f64, mut hi: f64, mut f_lo: f64) -> Result<f64> {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..50 {
        let (jn, jn1) = bessel_j_pair(n, x);
        let deriv = if n == 0 { -jn1 } else { (n as f64 / x) * jn - jn1 };
        // keep the bracket current
        if jn.signum() == f_lo.signum() {
            lo = x;
            f_lo = jn;
        } else {
            hi = x;
        }
        let mut next = x - jn / deriv;
        if !(next > lo && next < hi) || deriv == 0.0 {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 1e-15 * x.abs() {
            return Ok(polish(n, next));
        }
        x = next;
    }
    Err(Error::Convergence(format!(
        "Newton iteration for a zero of J_{n} did not converge in 50 steps"
    )))
}

/// One final Newton step to push the residual to rounding level.
fn polish(n: usize, x: f64) -> f64 {
    let (jn, jn1) = bessel_j_pair(n, x);
    let deriv = if n == 0 { -jn1 } else { (n as f64 / x) * jn - jn1 };
    if deriv != 0.0 {
        x - jn / deriv
    } else {
        x
    }
}
