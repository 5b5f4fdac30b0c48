//! Cylindrical Poisson driver.
//!
//! Fields live on a grid that is a Chebyshev block grid in radius,
//! uniform in the azimuth and periodic-uniform along the axis. The driver
//! Fourier-transforms the forcing in `theta` and `z`, solves one modified
//! Bessel equation per `(n, k)` mode with the order-`|n|` transform plan,
//! and inverse-transforms the mode solutions back to the grid.
//!
//! The axial wavenumber of mode `k` is `kappa_k = 2 pi |k| / L_z`. The
//! `kappa = 0` modes are outside the method (the Green's function is not
//! defined there); inputs carrying axial-mean energy are rejected.

use ndarray::{azip, Array3};
use num_complex::Complex64;
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::Arc;

use crate::dht::DhtPlan;
use crate::greens::solve_mode;
use crate::interp::BlockGrid;
use crate::{Error, Result};

/// Discretization of the cylinder `[0, R] x [0, 2 pi) x [0, L_z)`.
#[derive(Debug, Clone)]
pub struct CylGrid {
    pub radial: BlockGrid,
    pub n_theta: usize,
    pub n_z: usize,
    pub length_z: f64,
}

impl CylGrid {
    pub fn new(radial: BlockGrid, n_theta: usize, n_z: usize, length_z: f64) -> Result<Self> {
        for (label, n) in [("n_theta", n_theta), ("n_z", n_z)] {
            if n < 4 || n % 2 != 0 {
                return Err(Error::Domain(format!(
                    "{label} must be an even integer >= 4, got {n}"
                )));
            }
        }
        if !(length_z > 0.0 && length_z.is_finite()) {
            return Err(Error::Domain(format!("length_z must be > 0, got {length_z}")));
        }
        Ok(CylGrid { radial, n_theta, n_z, length_z })
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.radial.len(), self.n_theta, self.n_z)
    }

    /// Azimuthal order of transform index `i`, wrapped to
    /// `[-n_theta/2, n_theta/2)`.
    pub fn azimuthal_order(&self, i: usize) -> i64 {
        wrap_index(i, self.n_theta)
    }

    /// Axial wavenumber of transform index `k`.
    pub fn axial_wavenumber(&self, k: usize) -> f64 {
        2.0 * std::f64::consts::PI * wrap_index(k, self.n_z).unsigned_abs() as f64 / self.length_z
    }
}

fn wrap_index(i: usize, n: usize) -> i64 {
    if i < n / 2 {
        i as i64
    } else {
        i as i64 - n as i64
    }
}

/// Complex Fourier modes of a real field, indexed `[radial, i_theta, i_z]`
/// with the transform's wrapped frequency convention.
#[derive(Debug, Clone)]
pub struct ModeSet {
    pub data: Array3<Complex64>,
}

impl ModeSet {
    /// Relative L2 weight of the `kappa = 0` (axial-mean) plane.
    pub fn axial_mean_fraction(&self, grid: &CylGrid) -> f64 {
        let mut zero = 0.0;
        let mut total = 0.0;
        for ((_, _, iz), v) in self.data.indexed_iter() {
            let e = v.norm_sqr();
            total += e;
            if wrap_index(iz, grid.n_z) == 0 {
                zero += e;
            }
        }
        if total == 0.0 {
            0.0
        } else {
            (zero / total).sqrt()
        }
    }
}

fn dft_twiddles(n: usize, sign: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| {
            let ang = sign * 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            Complex64::new(ang.cos(), ang.sin())
        })
        .collect()
}

/// Discrete Fourier transform over the theta and z axes; `1/(n_theta n_z)`
/// normalization on the forward side so resynthesis is a plain sum.
pub fn decompose(grid: &CylGrid, field: &Array3<f64>) -> Result<ModeSet> {
    let shape = grid.shape();
    if field.dim() != shape {
        return Err(Error::Shape(format!(
            "field shape {:?} does not match grid {:?}",
            field.dim(),
            shape
        )));
    }
    let (nr, nt, nz) = shape;
    let wt = dft_twiddles(nt, -1.0);
    let wz = dft_twiddles(nz, -1.0);
    // theta transform
    let mut half = Array3::<Complex64>::zeros(shape);
    for ir in 0..nr {
        for kt in 0..nt {
            for iz in 0..nz {
                let mut acc = Complex64::new(0.0, 0.0);
                for jt in 0..nt {
                    acc += wt[(kt * jt) % nt] * field[(ir, jt, iz)];
                }
                half[(ir, kt, iz)] = acc;
            }
        }
    }
    // z transform + normalization
    let norm = 1.0 / (nt * nz) as f64;
    let mut out = Array3::<Complex64>::zeros(shape);
    for ir in 0..nr {
        for kt in 0..nt {
            for kz in 0..nz {
                let mut acc = Complex64::new(0.0, 0.0);
                for jz in 0..nz {
                    acc += wz[(kz * jz) % nz] * half[(ir, kt, jz)];
                }
                out[(ir, kt, kz)] = acc * norm;
            }
        }
    }
    Ok(ModeSet { data: out })
}

/// Inverse of [`decompose`]; returns the real field and the largest
/// imaginary residue encountered.
pub fn resynthesize(grid: &CylGrid, modes: &ModeSet) -> Result<(Array3<f64>, f64)> {
    let shape = grid.shape();
    if modes.data.dim() != shape {
        return Err(Error::Shape("mode set does not match grid".into()));
    }
    let (nr, nt, nz) = shape;
    let wt = dft_twiddles(nt, 1.0);
    let wz = dft_twiddles(nz, 1.0);
    let mut half = Array3::<Complex64>::zeros(shape);
    for ir in 0..nr {
        for jt in 0..nt {
            for kz in 0..nz {
                let mut acc = Complex64::new(0.0, 0.0);
                for kt in 0..nt {
                    acc += wt[(jt * kt) % nt] * modes.data[(ir, kt, kz)];
                }
                half[(ir, jt, kz)] = acc;
            }
        }
    }
    let mut out = Array3::<f64>::zeros(shape);
    let mut residue = 0.0_f64;
    for ir in 0..nr {
        for jt in 0..nt {
            for jz in 0..nz {
                let mut acc = Complex64::new(0.0, 0.0);
                for kz in 0..nz {
                    acc += wz[(jz * kz) % nz] * half[(ir, jt, kz)];
                }
                out[(ir, jt, jz)] = acc.re;
                residue = residue.max(acc.im.abs());
            }
        }
    }
    Ok((out, residue))
}

/// Solve the cylindrical Poisson equation for a real forcing field
/// sampled on the grid; `dht_size` is the transform size used for every
/// mode.
///
/// Rejects inputs whose `kappa = 0` plane carries more than `1e-12` of
/// the L2 norm; those modes have no radiating solution in this
/// formulation and are excluded.
pub fn solve_poisson(grid: &CylGrid, dht_size: usize, field: &Array3<f64>) -> Result<Array3<f64>> {
    solve_poisson_with_residue(grid, dht_size, field).map(|(u, _)| u)
}

/// [`solve_poisson`], also reporting the largest imaginary residue left by
/// the final inverse transform (a conjugate-symmetry health measure).
pub fn solve_poisson_with_residue(
    grid: &CylGrid,
    dht_size: usize,
    field: &Array3<f64>,
) -> Result<(Array3<f64>, f64)> {
    let modes = decompose(grid, field)?;
    let mean_fraction = modes.axial_mean_fraction(&modes_grid(grid));
    if mean_fraction > 1e-12 {
        return Err(Error::Domain(format!(
            "input carries kappa = 0 (axial mean) energy at relative level {mean_fraction:.3e}; \
             the mode solver is not defined there"
        )));
    }
    let (nr, nt, nz) = grid.shape();
    let radius = grid.radial.radius();

    // one plan per distinct |n|, shared read-only across the mode solves
    let mut plans: HashMap<usize, Arc<DhtPlan>> = HashMap::new();
    for kt in 0..nt {
        let order = grid.azimuthal_order(kt).unsigned_abs() as usize;
        if let std::collections::hash_map::Entry::Vacant(e) = plans.entry(order) {
            e.insert(Arc::new(DhtPlan::new(order, dht_size, radius)?));
        }
    }

    let pairs: Vec<(usize, usize)> =
        (0..nt).flat_map(|kt| (0..nz).map(move |kz| (kt, kz))).collect();
    let solved: Result<Vec<((usize, usize), Vec<Complex64>)>> = pairs
        .par_iter()
        .map(|&(kt, kz)| {
            let kappa = grid.axial_wavenumber(kz);
            if kappa == 0.0 {
                return Ok(((kt, kz), vec![Complex64::new(0.0, 0.0); nr]));
            }
            let order = grid.azimuthal_order(kt).unsigned_abs() as usize;
            let plan = &plans[&order];
            let re: Vec<f64> = (0..nr).map(|ir| modes.data[(ir, kt, kz)].re).collect();
            let im: Vec<f64> = (0..nr).map(|ir| modes.data[(ir, kt, kz)].im).collect();
            let mut solved_parts: Vec<Vec<f64>> = Vec::with_capacity(2);
            for part in [re, im] {
                let on_nodes = grid.radial.interpolate(&part, plan.nodes())?;
                let coeffs = plan.apply(&on_nodes)?;
                let sol = solve_mode(plan, kappa, &coeffs, grid.radial.nodes())?;
                solved_parts.push(sol.values);
            }
            let line: Vec<Complex64> = (0..nr)
                .map(|ir| Complex64::new(solved_parts[0][ir], solved_parts[1][ir]))
                .collect();
            Ok(((kt, kz), line))
        })
        .collect();

    let mut out_modes = ModeSet { data: Array3::zeros(grid.shape()) };
    for ((kt, kz), line) in solved? {
        for (ir, v) in line.into_iter().enumerate() {
            out_modes.data[(ir, kt, kz)] = v;
        }
    }
    let (field_out, residue) = resynthesize(grid, &out_modes)?;
    let scale = field_out.iter().fold(0.0_f64, |a, &b| a.max(b.abs()));
    if residue > 1e-9 * scale.max(1e-300) {
        return Err(Error::Numerical(format!(
            "resynthesis imaginary residue {residue:.3e} exceeds tolerance"
        )));
    }
    if field_out.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numerical("Poisson solution contains non-finite values".into()));
    }
    Ok((field_out, residue))
}

fn modes_grid(grid: &CylGrid) -> CylGrid {
    grid.clone()
}

/// Max-norm of the elementwise difference; test helper shared by the
/// integration suites.
pub fn max_abs_diff(a: &Array3<f64>, b: &Array3<f64>) -> f64 {
    let mut worst = 0.0_f64;
    azip!((&x in a, &y in b) worst = worst.max((x - y).abs()));
    worst
}
