//! Benchmark harness: the analytic test mode, its forcing, parameter
//! sweeps and timing studies, with CSV emission.
//!
//! The test solution is
//!
//! ```text
//! u(r) = (r / r_max)^m e^{-(r^2 - r_max^2)/alpha^2} cos(beta r),
//! r_max = alpha sqrt(m / 2),
//! ```
//!
//! a unit-amplitude bump at `r_max` whose oscillation frequency `beta`
//! controls how much radial bandwidth the solver must resolve. The
//! matching forcing `f = u'' + u'/r - (n^2/r^2 + kappa^2) u` is assembled
//! in closed form. Sweeps solve the mode either directly on transform
//! nodes or from a Chebyshev block grid through interpolation, and record
//! the max-norm error `eps = max|u_c - u| / max|u|` clamped to 1.

use std::collections::HashMap;
use std::io::Write as IoWrite;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;

use crate::dht::DhtPlan;
use crate::greens::solve_mode;
use crate::interp::BlockGrid;
use crate::{Error, Result};

/// One analytic mode problem: order, wavenumber and bump parameters.
#[derive(Debug, Clone, Copy)]
pub struct TestCase {
    pub order: usize,
    pub kappa: f64,
    /// Gaussian width of the bump.
    pub alpha: f64,
    /// Radial oscillation frequency.
    pub beta: f64,
    /// Axis-regularity exponent, `m >= max(order, 2)`.
    pub m: usize,
}

impl TestCase {
    /// `m = max(order, 2)`, the exponent used throughout the sweeps. The
    /// floor of 2 keeps `r_max > 0` for the low orders.
    pub fn new(order: usize, kappa: f64, alpha: f64, beta: f64) -> Self {
        Self::with_exponent(order, kappa, alpha, beta, order.max(2))
    }

    pub fn with_exponent(order: usize, kappa: f64, alpha: f64, beta: f64, m: usize) -> Self {
        assert!(m >= order, "test case requires m >= order for axis regularity");
        assert!(m >= 2, "test case requires m >= 2 so the forcing has an axis limit");
        assert!(alpha > 0.0 && beta >= 0.0 && kappa > 0.0);
        TestCase { order, kappa, alpha, beta, m }
    }

    /// The radius maximizing `r^m e^{-r^2/alpha^2}`.
    pub fn r_max(&self) -> f64 {
        self.alpha * (self.m as f64 / 2.0).sqrt()
    }

    fn envelope(&self, r: f64) -> f64 {
        let rm = self.r_max();
        (r / rm).powi(self.m as i32) * (-(r * r - rm * rm) / (self.alpha * self.alpha)).exp()
    }

    /// The analytic solution `u(r)`; equals 1 at `r_max` when `beta = 0`.
    pub fn solution(&self, r: f64) -> f64 {
        assert!(r >= 0.0);
        if r == 0.0 {
            return 0.0;
        }
        self.envelope(r) * (self.beta * r).cos()
    }

    /// The forcing `u'' + u'/r - (n^2/r^2 + kappa^2) u` in closed form.
    ///
    /// With `g = (r/r_max)^m e^{-(r^2 - r_max^2)/alpha^2}` and
    /// `L = g'/g = m/r - 2 r/alpha^2`:
    /// `u'' = g ((L^2 - m/r^2 - 2/alpha^2) cos - 2 L beta sin - beta^2 cos)`,
    /// and the `1/r^2` terms combine to `(m^2 - n^2)/r^2`, which cancels
    /// for `m = n` and has a finite axis limit for `m = 2`.
    pub fn forcing(&self, r: f64) -> f64 {
        assert!(r >= 0.0);
        let (m, n) = (self.m as f64, self.order as f64);
        let a2 = self.alpha * self.alpha;
        if r == 0.0 {
            return if self.m == 2 {
                let rm2 = self.r_max() * self.r_max();
                (m * m - n * n) * (rm2 / a2).exp() / rm2
            } else {
                0.0
            };
        }
        let g = self.envelope(r);
        let cos_coef = (m * m - n * n) / (r * r) - (4.0 * m + 4.0) / a2 + 4.0 * r * r / (a2 * a2)
            - self.kappa * self.kappa
            - self.beta * self.beta;
        let sin_coef = -self.beta * ((2.0 * m + 1.0) / r - 4.0 * r / a2);
        g * (cos_coef * (self.beta * r).cos() + sin_coef * (self.beta * r).sin())
    }
}

/// Where the input samples live.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepMode {
    /// Input sampled directly on the transform nodes.
    DhtDirect,
    /// Input on a Chebyshev block grid, interpolated onto the nodes.
    Chebyshev,
}

impl SweepMode {
    pub fn label(&self) -> &'static str {
        match self {
            SweepMode::DhtDirect => "dht-direct",
            SweepMode::Chebyshev => "chebyshev",
        }
    }
}

/// One parameter combination of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SweepCase {
    pub mode: SweepMode,
    pub order: usize,
    pub kappa: f64,
    pub beta: f64,
    /// Transform size `M`.
    pub dht_size: usize,
    /// Block count `N` (0 in direct mode).
    pub blocks: usize,
    /// Points per block `P` (0 in direct mode).
    pub points_per_block: usize,
}

/// Error/timing record for one parameter combination.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub case: SweepCase,
    /// Max-norm relative error, clamped to `[0, 1]`.
    pub epsilon: f64,
    /// Transform + evaluation time, seconds.
    pub wall_time_s: f64,
    /// Plan (zeros + matrix) construction time, seconds.
    pub plan_time_s: f64,
}

/// Sweep configuration shared by all cases.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub radius: f64,
    pub alpha: f64,
    pub cases: Vec<SweepCase>,
}

impl SweepConfig {
    /// The transform-node error study: `beta in {0, 8, 16}`,
    /// `kappa in {16, 1024}`, `n in {0, 16, 32, 64}`, `M` swept.
    pub fn dht_grid() -> Self {
        let mut cases = Vec::new();
        for &order in &[0usize, 16, 32, 64] {
            for &kappa in &[16.0, 1024.0] {
                for &beta in &[0.0, 8.0, 16.0] {
                    for &m in &[8usize, 16, 24, 32, 48, 64, 96, 128, 192, 256] {
                        cases.push(SweepCase {
                            mode: SweepMode::DhtDirect,
                            order,
                            kappa,
                            beta,
                            dht_size: m,
                            blocks: 0,
                            points_per_block: 0,
                        });
                    }
                }
            }
        }
        SweepConfig { radius: 16.0, alpha: 1.0, cases }
    }

    /// The Chebyshev-node error study at `kappa = 1024`, `P = 16`:
    /// `M in {128, 256}` and the block count `N` swept.
    pub fn chebyshev_grid() -> Self {
        let mut cases = Vec::new();
        for &order in &[0usize, 16, 32, 64] {
            for &dht_size in &[128usize, 256] {
                for &beta in &[0.0, 8.0, 16.0] {
                    for &blocks in &[2usize, 4, 8, 16, 32, 64, 128] {
                        cases.push(SweepCase {
                            mode: SweepMode::Chebyshev,
                            order,
                            kappa: 1024.0,
                            beta,
                            dht_size,
                            blocks,
                            points_per_block: 16,
                        });
                    }
                }
            }
        }
        SweepConfig { radius: 16.0, alpha: 1.0, cases }
    }

    /// The timing study at `n = 64`, `kappa = 1024`, `beta = 16`.
    pub fn timing_grid() -> Self {
        let mut cases = Vec::new();
        for &m in &[64usize, 96, 128, 192, 256, 384, 512, 768, 1024] {
            cases.push(SweepCase {
                mode: SweepMode::DhtDirect,
                order: 64,
                kappa: 1024.0,
                beta: 16.0,
                dht_size: m,
                blocks: 0,
                points_per_block: 0,
            });
        }
        for &m in &[64usize, 128, 256] {
            for &blocks in &[8usize, 16, 32, 64, 128] {
                cases.push(SweepCase {
                    mode: SweepMode::Chebyshev,
                    order: 64,
                    kappa: 1024.0,
                    beta: 16.0,
                    dht_size: m,
                    blocks,
                    points_per_block: 16,
                });
            }
        }
        SweepConfig { radius: 16.0, alpha: 1.0, cases }
    }
}

/// Plans keyed by `(order, size)` for one radius, built once and shared.
pub struct PlanCache {
    radius: f64,
    plans: HashMap<(usize, usize), (Arc<DhtPlan>, f64)>,
}

impl PlanCache {
    pub fn new(radius: f64) -> Self {
        PlanCache { radius, plans: HashMap::new() }
    }

    pub fn get(&mut self, order: usize, size: usize) -> Result<(Arc<DhtPlan>, f64)> {
        if let Some(entry) = self.plans.get(&(order, size)) {
            return Ok(entry.clone());
        }
        let t0 = Instant::now();
        let plan = Arc::new(DhtPlan::new(order, size, self.radius)?);
        let dt = t0.elapsed().as_secs_f64();
        self.plans.insert((order, size), (plan.clone(), dt));
        Ok((plan, dt))
    }
}

fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0_f64, |a, &b| a.max(b.abs()))
}

/// Solve one case; returns (epsilon, solve seconds). Step 1 (plan) and
/// step 2 (interpolation) are excluded from the timed region.
fn solve_case(
    plan: &DhtPlan,
    case: &SweepCase,
    radius: f64,
    alpha: f64,
) -> Result<(f64, f64)> {
    let tc = TestCase::new(case.order, case.kappa, alpha, case.beta);
    let (node_samples, eval_points): (Vec<f64>, Vec<f64>) = match case.mode {
        SweepMode::DhtDirect => {
            let f: Vec<f64> = plan.nodes().iter().map(|&r| tc.forcing(r)).collect();
            (f, plan.nodes().to_vec())
        }
        SweepMode::Chebyshev => {
            let grid = BlockGrid::new(case.blocks, case.points_per_block, radius);
            let f: Vec<f64> = grid.nodes().iter().map(|&r| tc.forcing(r)).collect();
            let interpolated = grid.interpolate(&f, plan.nodes())?;
            (interpolated, grid.nodes().to_vec())
        }
    };
    let t0 = Instant::now();
    let coeffs = plan.apply(&node_samples)?;
    let sol = solve_mode(plan, case.kappa, &coeffs, &eval_points)?;
    let wall = t0.elapsed().as_secs_f64();
    let exact: Vec<f64> = eval_points.iter().map(|&r| tc.solution(r)).collect();
    let scale = max_abs(&exact);
    if scale == 0.0 {
        return Err(Error::Numerical("exact solution is identically zero".into()));
    }
    let err = sol
        .values
        .iter()
        .zip(&exact)
        .fold(0.0_f64, |a, (&u, &v)| a.max((u - v).abs()));
    Ok(((err / scale).min(1.0), wall))
}

/// Run every case of a sweep. Cases run concurrently; a solver failure in
/// one case records `epsilon = 1` and never aborts the sweep. Results come
/// back ordered by parameter tuple and the epsilon column is deterministic
/// for a given config.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<SweepResult>> {
    let mut cache = PlanCache::new(config.radius);
    for case in &config.cases {
        cache.get(case.order, case.dht_size)?;
    }
    let cache = &cache;
    let mut results: Vec<SweepResult> = config
        .cases
        .par_iter()
        .map(|case| {
            let (plan, plan_time) = cache
                .plans
                .get(&(case.order, case.dht_size))
                .expect("plan cache was prepopulated")
                .clone();
            let (epsilon, wall) = solve_case(&plan, case, config.radius, config.alpha)
                .unwrap_or((1.0, 0.0));
            SweepResult { case: *case, epsilon, wall_time_s: wall, plan_time_s: plan_time }
        })
        .collect();
    results.sort_by(|a, b| a.case.partial_cmp(&b.case).unwrap());
    Ok(results)
}

/// Run a timing sweep: cases run sequentially and each timed region is
/// repeated until it accumulates enough wall time to be trustworthy; the
/// fastest repetition is reported.
pub fn run_timing(config: &SweepConfig) -> Result<Vec<SweepResult>> {
    let mut cache = PlanCache::new(config.radius);
    let mut results = Vec::with_capacity(config.cases.len());
    for case in &config.cases {
        let (plan, plan_time) = cache.get(case.order, case.dht_size)?;
        let mut best = f64::INFINITY;
        let mut spent = 0.0;
        let mut reps = 0;
        while reps < 3 || (spent < 0.05 && reps < 50) {
            let (epsilon, wall) = solve_case(&plan, case, config.radius, config.alpha)?;
            best = best.min(wall);
            spent += wall;
            reps += 1;
            if reps >= 3 && spent > 1.0 {
                break;
            }
            let _ = epsilon;
        }
        let (epsilon, _) = solve_case(&plan, case, config.radius, config.alpha)?;
        results.push(SweepResult {
            case: *case,
            epsilon,
            wall_time_s: best,
            plan_time_s: plan_time,
        });
    }
    Ok(results)
}

pub const CSV_HEADER: &str = "mode,n,kappa,beta,M,N,P,epsilon,wall_time_s,plan_time_s";

/// Emit results as CSV, one row per case, plot-ready.
pub fn write_csv<W: IoWrite>(results: &[SweepResult], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in results {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{:e},{:e},{:e}",
            r.case.mode.label(),
            r.case.order,
            r.case.kappa,
            r.case.beta,
            r.case.dht_size,
            r.case.blocks,
            r.case.points_per_block,
            r.epsilon,
            r.wall_time_s,
            r.plan_time_s
        )?;
    }
    Ok(())
}
