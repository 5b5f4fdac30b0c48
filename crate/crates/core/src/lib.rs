//! Solver for the modified Bessel equation
//!
//! ```text
//! u'' + u'/r - (n^2/r^2 + kappa^2) u = f,    0 <= r <= R,
//! ```
//!
//! with regularity on the axis and a radiation condition at the outer
//! radius, as it arises from Fourier decomposition of the Poisson equation
//! in cylindrical coordinates. The right-hand side is expanded in a
//! Fourier-Bessel series with a discrete Hankel transform ([`dht`]) and the
//! solution is assembled from closed-form convolutions of the Green's
//! function with each Bessel mode ([`greens`]). All modified Bessel
//! function evaluations go through exponentially scaled kernels and ratio
//! recursions ([`specfun`]) so the solver stays in range for large orders
//! and large wavenumbers.
//!
//! [`interp`] supplies the block Chebyshev grid and barycentric
//! interpolation used to move input data onto transform nodes, [`poisson`]
//! drives the full three-dimensional cylindrical Poisson solve, and
//! [`harness`] contains the benchmark test functions and sweep machinery
//! behind the `mbsolve` command-line tool.

pub mod dht;
mod error;
pub mod field;
pub mod greens;
pub mod harness;
pub mod interp;
pub mod poisson;
pub mod specfun;

pub use error::{Error, Result};

#[cfg(test)]
mod testdata;
