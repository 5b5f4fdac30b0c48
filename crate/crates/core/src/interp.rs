//! Block-structured Chebyshev grid on `[0, R]` and barycentric Lagrange
//! interpolation, used to move input data onto transform nodes.
//!
//! The domain is split into `N` blocks; each block carries `P + 1`
//! Chebyshev points of the second kind, `mid + half * cos(p pi / P)`,
//! stored in that (descending) order, with the classical barycentric
//! weights `(-1)^p delta_p`, `delta_0 = delta_P = 1/2`. Evaluation inside
//! a block uses the second barycentric form, which is exact at the nodes
//! and stable for any target in the block.

use crate::{Error, Result};

/// `N` Chebyshev blocks of `P + 1` nodes covering `[0, R]`.
#[derive(Debug, Clone)]
pub struct BlockGrid {
    block_count: usize,
    points_per_block: usize,
    /// `N + 1` block boundaries, `0 = R_0 < R_1 < ... < R_N = R`.
    boundaries: Vec<f64>,
    /// `N (P + 1)` node radii; within a block the nodes descend from the
    /// right boundary to the left, both included.
    nodes: Vec<f64>,
    /// Barycentric weights shared by every block.
    weights: Vec<f64>,
}

impl BlockGrid {
    /// Uniform blocks `R_k = k R / N`.
    pub fn new(block_count: usize, points_per_block: usize, radius: f64) -> Self {
        assert!(radius > 0.0 && radius.is_finite(), "BlockGrid: radius must be > 0");
        assert!(block_count >= 1, "BlockGrid: need at least one block");
        let boundaries: Vec<f64> = (0..=block_count)
            .map(|k| radius * k as f64 / block_count as f64)
            .collect();
        Self::with_boundaries(boundaries, points_per_block)
    }

    /// Arbitrary (e.g. graded) block boundaries; `boundaries[0]` must be 0.
    pub fn with_boundaries(boundaries: Vec<f64>, points_per_block: usize) -> Self {
        let p = points_per_block;
        assert!(p >= 2, "BlockGrid: need at least 2 points per block");
        assert!(boundaries.len() >= 2 && boundaries[0] == 0.0, "BlockGrid: boundaries must start at 0");
        assert!(boundaries.windows(2).all(|w| w[1] > w[0]), "BlockGrid: boundaries must increase");
        let block_count = boundaries.len() - 1;
        let mut nodes = Vec::with_capacity(block_count * (p + 1));
        for b in 0..block_count {
            let (lo, hi) = (boundaries[b], boundaries[b + 1]);
            let mid = 0.5 * (hi + lo);
            let half = 0.5 * (hi - lo);
            for q in 0..=p {
                // pin the shared endpoints to the boundary values exactly
                nodes.push(if q == 0 {
                    hi
                } else if q == p {
                    lo
                } else {
                    mid + half * (q as f64 * std::f64::consts::PI / p as f64).cos()
                });
            }
        }
        let weights: Vec<f64> = (0..=p)
            .map(|q| {
                let delta = if q == 0 || q == p { 0.5 } else { 1.0 };
                if q % 2 == 0 {
                    delta
                } else {
                    -delta
                }
            })
            .collect();
        BlockGrid { block_count, points_per_block: p, boundaries, nodes, weights }
    }

    pub fn block_count(&self) -> usize {
        self.block_count
    }

    pub fn points_per_block(&self) -> usize {
        self.points_per_block
    }

    pub fn radius(&self) -> f64 {
        *self.boundaries.last().unwrap()
    }

    pub fn boundaries(&self) -> &[f64] {
        &self.boundaries
    }

    /// All `N (P + 1)` node radii, block by block.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// Total node count `N (P + 1)`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index of the block a target belongs to; targets exactly on an
    /// interior boundary resolve to the left block.
    fn block_of(&self, target: f64) -> usize {
        if target == 0.0 {
            return 0;
        }
        // largest k with R_k < target
        let mut lo = 0usize;
        let mut hi = self.block_count;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.boundaries[mid] < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// Barycentric interpolation of `samples` (aligned with
    /// [`BlockGrid::nodes`]) at the given targets. No extrapolation:
    /// every target must lie in `[0, R]`.
    pub fn interpolate(&self, samples: &[f64], targets: &[f64]) -> Result<Vec<f64>> {
        if samples.len() != self.nodes.len() {
            return Err(Error::Shape(format!(
                "expected {} samples on the block grid, got {}",
                self.nodes.len(),
                samples.len()
            )));
        }
        let radius = self.radius();
        targets
            .iter()
            .map(|&t| {
                if !(0.0..=radius).contains(&t) {
                    return Err(Error::Domain(format!(
                        "interpolation target {t} outside [0, {radius}]"
                    )));
                }
                let b = self.block_of(t);
                let lo = b * (self.points_per_block + 1);
                let hi = lo + self.points_per_block + 1;
                Ok(bary_eval(&self.nodes[lo..hi], &samples[lo..hi], &self.weights, t))
            })
            .collect()
    }
}

/// Second-form barycentric evaluation; a target that coincides with a node
/// short-circuits to the sample to avoid 0/0.
fn bary_eval(nodes: &[f64], samples: &[f64], weights: &[f64], t: f64) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for ((&x, &f), &w) in nodes.iter().zip(samples).zip(weights) {
        let d = t - x;
        if d == 0.0 {
            return f;
        }
        let q = w / d;
        num += q * f;
        den += q;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_block_nodes() {
        let g = BlockGrid::new(1, 2, 2.0);
        assert_eq!(g.nodes(), &[2.0, 1.0, 0.0]);
    }

    #[test]
    fn node_count_and_shared_boundaries() {
        let g = BlockGrid::new(5, 7, 3.0);
        assert_eq!(g.len(), 5 * 8);
        for b in 0..4 {
            // nodes descend within a block, so the boundary shared by
            // blocks b and b+1 is the first node of b and the last of b+1
            let first_of_b = g.nodes()[b * 8];
            let last_of_next = g.nodes()[(b + 1) * 8 + 7];
            assert_eq!(first_of_b, last_of_next);
            assert_eq!(first_of_b, g.boundaries()[b + 1]);
        }
        // block b runs from its right edge down to its left edge
        for b in 0..5 {
            assert_eq!(g.nodes()[b * 8], g.boundaries()[b + 1]);
            assert_eq!(g.nodes()[b * 8 + 7], g.boundaries()[b]);
        }
        assert!(g.nodes().contains(&0.0) && g.nodes().contains(&3.0));
    }

    #[test]
    fn nodes_reproduced_exactly() {
        let g = BlockGrid::new(3, 6, 1.0);
        let samples: Vec<f64> = g.nodes().iter().map(|&r| (3.1 * r).sin()).collect();
        let back = g.interpolate(&samples, g.nodes()).unwrap();
        assert_eq!(samples, back);
    }

    #[test]
    fn cubic_is_exact_with_p4() {
        let g = BlockGrid::new(4, 4, 2.0);
        let f = |r: f64| r * r * r - 0.5 * r + 2.0;
        let samples: Vec<f64> = g.nodes().iter().map(|&r| f(r)).collect();
        let targets: Vec<f64> = (0..200).map(|i| 2.0 * i as f64 / 199.0).collect();
        let vals = g.interpolate(&samples, &targets).unwrap();
        for (&t, &v) in targets.iter().zip(&vals) {
            assert!((v - f(t)).abs() <= 1e-13 * f(t).abs().max(1.0), "t = {t}");
        }
    }

    #[test]
    fn boundary_targets_use_left_block() {
        // a target on an interior boundary is owned by both blocks; the
        // value must still be the shared sample
        let g = BlockGrid::new(4, 5, 4.0);
        let samples: Vec<f64> = g.nodes().iter().map(|&r| r.exp()).collect();
        for k in 1..4 {
            let t = g.boundaries()[k];
            let v = g.interpolate(&samples, &[t]).unwrap()[0];
            assert_eq!(v, t.exp());
        }
    }

    #[test]
    fn rejects_extrapolation() {
        let g = BlockGrid::new(2, 4, 1.0);
        let samples = vec![0.0; g.len()];
        assert!(g.interpolate(&samples, &[1.0000001]).is_err());
        assert!(g.interpolate(&samples, &[-1e-12]).is_err());
        assert!(g.interpolate(&samples, &[0.0, 1.0]).is_ok());
    }

    proptest! {
        #[test]
        fn polynomials_up_to_degree_p_are_reproduced(
            coeffs in proptest::collection::vec(-1.0..1.0f64, 5),
            n_blocks in 1usize..6,
            t01 in 0.0..1.0f64,
        ) {
            let p = 4usize;
            let g = BlockGrid::new(n_blocks, p, 1.5);
            let f = |r: f64| coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c);
            let samples: Vec<f64> = g.nodes().iter().map(|&r| f(r)).collect();
            let t = 1.5 * t01;
            let v = g.interpolate(&samples, &[t]).unwrap()[0];
            prop_assert!((v - f(t)).abs() <= 1e-13 * f(t).abs().max(1.0));
        }

        #[test]
        fn lebesgue_bound_holds(
            samples01 in proptest::collection::vec(-1.0..1.0f64, 17),
            t01 in 0.0..1.0f64,
        ) {
            // interpolating data bounded by 1 stays within the Lebesgue
            // constant of the Chebyshev points, ~ 2/pi log(P+1) + 1
            let p = 16usize;
            let g = BlockGrid::new(1, p, 1.0);
            let v = g.interpolate(&samples01, &[t01]).unwrap()[0];
            let bound = 1.0 + 2.0 / std::f64::consts::PI * ((p + 1) as f64).ln() + 1.0;
            prop_assert!(v.abs() <= bound);
        }
    }
}
