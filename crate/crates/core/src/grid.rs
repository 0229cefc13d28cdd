// Copyright 2026 The psdmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Uniform frequency grid on `[-π, π)` and the averages that stand in for
//! `∫ · dθ/2π`.
//!
//! The rule is the left-endpoint Riemann sum with weight `1/n`. For
//! 2π-periodic integrands this is the trapezoid rule, which is exact for
//! trigonometric polynomials of degree below `n` and spectrally accurate for
//! smooth spectra.

use std::f64::consts::PI;

use crate::error::{invalid, Result};

/// Grid size used by the command line when nothing else fixes it.
pub const DEFAULT_GRID_SIZE: usize = 4096;

/// `n` equally spaced angles `θ_k = -π + 2πk/n`, each carrying weight `1/n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrequencyGrid {
    n: usize,
}

impl FrequencyGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("grid needs at least 2 nodes, got {n}")));
        }
        Ok(Self { n })
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn spacing(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    pub fn weight(&self) -> f64 {
        1.0 / self.n as f64
    }

    pub fn node(&self, k: usize) -> f64 {
        -PI + 2.0 * PI * k as f64 / self.n as f64
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(|k| self.node(k))
    }

    /// Index of the node at `-θ_k`. The node at `-π` is its own mirror.
    pub fn mirror(&self, k: usize) -> usize {
        (self.n - k) % self.n
    }

    /// Samples `x(θ)` at every node.
    pub fn sample(&self, mut x: impl FnMut(f64) -> f64) -> Vec<f64> {
        self.nodes().map(&mut x).collect()
    }

    /// Grid average of `samples`, approximating `∫ x(θ) dθ/2π`.
    pub fn mean(&self, samples: &[f64]) -> Result<f64> {
        self.check(samples)?;
        Ok(self.mean_unchecked(samples))
    }

    /// `mean(x²) - mean(x)²`, the quantity under the root of the geodesic
    /// distance.
    ///
    /// Evaluated as the mean squared deviation from the mean, which is
    /// nonnegative by construction and keeps full relative accuracy when the
    /// samples sit on a large offset.
    pub fn central_variance(&self, samples: &[f64]) -> Result<f64> {
        self.check(samples)?;
        Ok(self.central_variance_unchecked(samples))
    }

    pub(crate) fn mean_unchecked(&self, samples: &[f64]) -> f64 {
        samples.iter().sum::<f64>() / self.n as f64
    }

    pub(crate) fn central_variance_unchecked(&self, samples: &[f64]) -> f64 {
        let m = self.mean_unchecked(samples);
        samples.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / self.n as f64
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(invalid(format!(
                "sample vector has length {len}, grid has {} nodes",
                self.n
            )));
        }
        Ok(())
    }

    fn check(&self, samples: &[f64]) -> Result<()> {
        self.check_len(samples.len())?;
        if let Some(k) = samples.iter().position(|x| !x.is_finite()) {
            return Err(invalid(format!("non-finite sample at index {k}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn smallest_grid() {
        let g = FrequencyGrid::new(2).unwrap();
        assert_eq!(g.nodes().collect::<Vec<_>>(), vec![-PI, 0.0]);
        assert_eq!(g.weight(), 0.5);
    }

    #[test]
    fn four_nodes() {
        let g = FrequencyGrid::new(4).unwrap();
        let nodes: Vec<_> = g.nodes().collect();
        assert_eq!(nodes, vec![-PI, -PI / 2.0, 0.0, PI / 2.0]);
        assert_eq!(g.mirror(0), 0);
        assert_eq!(g.mirror(1), 3);
        assert_eq!(g.mirror(2), 2);
    }

    #[test]
    fn large_grid_spacing_and_weights() {
        let g = FrequencyGrid::new(4096).unwrap();
        assert_eq!(g.spacing(), 2.0 * PI / 4096.0);
        let total: f64 = (0..g.len()).map(|_| g.weight()).sum();
        assert!((total - 1.0).abs() < 1e-12);
        let nodes: Vec<_> = g.nodes().collect();
        for w in nodes.windows(2) {
            assert!(w[1] > w[0]);
            assert!((w[1] - w[0] - g.spacing()).abs() < 1e-12);
        }
        assert!(*nodes.last().unwrap() < PI);
    }

    #[test]
    fn rejects_tiny_grids() {
        assert!(FrequencyGrid::new(0).is_err());
        assert!(FrequencyGrid::new(1).is_err());
    }

    #[test]
    fn mean_examples() {
        for n in [2, 3, 7, 64] {
            let g = FrequencyGrid::new(n).unwrap();
            assert!((g.mean(&vec![1.0; n]).unwrap() - 1.0).abs() < 1e-15);
            assert!(g.mean(&g.sample(f64::cos)).unwrap().abs() < 1e-15);
        }
        for n in [3, 4, 9, 128] {
            let g = FrequencyGrid::new(n).unwrap();
            let m = g.mean(&g.sample(|t| t.cos().powi(2))).unwrap();
            assert!((m - 0.5).abs() < 1e-15, "n={n}: {m}");
        }
    }

    #[test]
    fn variance_examples() {
        let g = FrequencyGrid::new(16).unwrap();
        assert_eq!(g.central_variance(&[2.5; 16]).unwrap(), 0.0);
        for n in [3, 5, 16, 1024] {
            let g = FrequencyGrid::new(n).unwrap();
            let v = g.central_variance(&g.sample(f64::cos)).unwrap();
            assert!((v - 0.5).abs() < 1e-14, "n={n}: {v}");
            let v = g
                .central_variance(&g.sample(|t| 3.0 * t.cos() + 5.0))
                .unwrap();
            assert!((v - 4.5).abs() < 1e-13, "n={n}: {v}");
        }
    }

    #[test]
    fn mean_rejects_bad_input() {
        let g = FrequencyGrid::new(4).unwrap();
        assert!(g.mean(&[1.0, 2.0, 3.0]).is_err());
        assert!(g.mean(&[1.0, f64::NAN, 3.0, 4.0]).is_err());
        assert!(g.central_variance(&[1.0, f64::INFINITY, 3.0, 4.0]).is_err());
    }

    #[test]
    fn trig_polynomials_integrate_exactly_above_twice_the_degree() {
        // degree 5: cos(5θ)² has mean 1/2 and sin(2θ)cos(3θ) has mean 0
        let g = FrequencyGrid::new(11).unwrap();
        let x = g.sample(|t| (5.0 * t).cos() + 2.0 * (2.0 * t).sin() - 0.5 * (3.0 * t).cos());
        let m = g.mean(&x).unwrap();
        let v = g.central_variance(&x).unwrap();
        assert!(m.abs() < 1e-14);
        assert!((v - (0.5 + 2.0 + 0.125)).abs() < 1e-13, "{v}");
    }

    fn samples(n: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-1e3f64..1e3, n)
    }

    proptest! {
        #[test]
        fn mean_is_linear(x in samples(32), y in samples(32), a in -10.0f64..10.0, b in -10.0f64..10.0) {
            let g = FrequencyGrid::new(32).unwrap();
            let z: Vec<f64> = x.iter().zip(&y).map(|(x, y)| a * x + b * y).collect();
            let lhs = g.mean(&z).unwrap();
            let rhs = a * g.mean(&x).unwrap() + b * g.mean(&y).unwrap();
            // |a·x| ≤ 1e4 per term; 1e-9 is a few ulps of the running sum
            prop_assert!((lhs - rhs).abs() <= 1e-9);
        }

        #[test]
        fn variance_is_shift_invariant_and_nonnegative(x in prop::collection::vec(-10.0f64..10.0, 2..64), c in -100.0f64..100.0) {
            let g = FrequencyGrid::new(x.len()).unwrap();
            let shifted: Vec<f64> = x.iter().map(|v| v + c).collect();
            let v0 = g.central_variance(&x).unwrap();
            let v1 = g.central_variance(&shifted).unwrap();
            prop_assert!(v0 >= 0.0 && v1 >= 0.0);
            prop_assert!((v0 - v1).abs() <= 1e-12);
        }

        #[test]
        fn rms_dominates_mean(x in prop::collection::vec(-1e3f64..1e3, 2..64)) {
            let g = FrequencyGrid::new(x.len()).unwrap();
            let sq: Vec<f64> = x.iter().map(|v| v * v).collect();
            let rms = g.mean(&sq).unwrap().sqrt();
            prop_assert!(rms >= g.mean(&x).unwrap() * (1.0 - 1e-15));
        }
    }
}
