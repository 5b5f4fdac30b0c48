//! Scaled Bessel-function kernels, ratio recursions and well-scaled products.
//!
//! Everything the solver needs from the modified Bessel functions is
//! expressed through four order-zero/one scaled kernels (`i0_scaled`,
//! `i1_scaled`, `k0_scaled`, `k1_scaled`), ratio sequences
//! `I_{i+1}/I_i` and `K_{i+1}/K_i`, and pairwise-grouped products of
//! those ratios. The ordinary Bessel function `J_n` and its zeros are
//! computed here as well.

mod besselj;
mod ratios;
mod scaled;

pub use besselj::{bessel_j, bessel_j_pair, bessel_j_zeros, BesselZeros};
pub use ratios::{
    i_ratio_sequence, ik_product, ik_product_split, ik_product_split_tables, k_ratio_sequence,
    olver_i, RatioTable,
};
pub use scaled::{i0_scaled, i1_scaled, k0_scaled, k1_scaled};
