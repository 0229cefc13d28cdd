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

#![allow(dead_code)]

use psdmetric::{FrequencyGrid, Psd};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn grid(n: usize) -> FrequencyGrid {
    FrequencyGrid::new(n).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `c + Σ_{k≤deg} a_k cos kθ + b_k sin kθ` with `c` above the coefficient
/// mass, so the polynomial is strictly positive.
pub fn random_trig_spectrum(grid: FrequencyGrid, rng: &mut impl Rng, max_degree: usize) -> Psd {
    let degree = rng.random_range(1..=max_degree);
    let coeffs: Vec<(f64, f64)> = (0..degree)
        .map(|_| (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let mass: f64 = coeffs.iter().map(|(a, b)| a.abs() + b.abs()).sum();
    let offset = mass + rng.random_range(0.05..1.0);
    Psd::from_fn(grid, |t| {
        offset
            + coeffs
                .iter()
                .enumerate()
                .map(|(k, (a, b))| {
                    let kt = (k + 1) as f64 * t;
                    a * kt.cos() + b * kt.sin()
                })
                .sum::<f64>()
    })
    .unwrap()
}

/// `Li₂(x) = Σ x^k/k²`, summed until terms drop below 1e-18.
pub fn dilog(x: f64) -> f64 {
    let (mut sum, mut power) = (0.0, 1.0);
    for k in 1..10_000u32 {
        power *= x;
        let term = power / f64::from(k * k);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

/// `I_ν(x)` by its power series.
pub fn bessel_i(order: u32, x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = half.powi(order as i32) / (1..=order).map(f64::from).product::<f64>();
    let mut sum = term;
    for k in 1..200u32 {
        term *= half * half / (f64::from(k) * f64::from(k + order));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// Stationary AR(1) path `x_t = a x_{t-1} + e_t` with unit innovations,
/// after a burn-in of 1000 samples.
pub fn simulate_ar1(a: f64, len: usize, seed: u64) -> Vec<f64> {
    let mut rng = rng(seed);
    let mut x = 0.0;
    let mut out = Vec::with_capacity(len);
    for t in 0..len + 1000 {
        let e: f64 = StandardNormal.sample(&mut rng);
        x = a * x + e;
        if t >= 1000 {
            out.push(x);
        }
    }
    out
}
