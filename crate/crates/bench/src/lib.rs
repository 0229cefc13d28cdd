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

//! Shared inputs for the benchmarks.

use psdmetric::{FrequencyGrid, Psd};

/// Strictly positive trigonometric polynomial `c + Σ cos(kθ + k)/k`.
pub fn trig_spectrum(grid: FrequencyGrid, degree: usize, seed: u64) -> Psd {
    let offset = 1.0 + (1..=degree).map(|k| 1.0 / k as f64).sum::<f64>();
    Psd::from_fn(grid, |t| {
        offset
            + (1..=degree)
                .map(|k| ((k as f64) * t + (k as u64 * seed) as f64).cos() / k as f64)
                .sum::<f64>()
    })
    .expect("positive by construction")
}

/// A deterministic pseudo-random series from a linear congruential
/// generator; good enough to exercise the estimators.
pub fn noise(len: usize, seed: u64) -> Vec<f64> {
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
    (0..len)
        .map(|_| {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        })
        .collect()
}
