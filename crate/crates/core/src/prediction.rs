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

//! One-step linear prediction from autocovariances.
//!
//! This is an independent route to [`prediction_ratio`]: fit a finite-order
//! predictor to one spectrum with the Levinson-Durbin recursion, apply it to
//! a process with another spectrum, and compare the resulting error variance
//! with the Szegő limit `exp(mean log f)`.
//!
//! Only real processes are handled, so spectra must be even on the grid.
//!
//! [`prediction_ratio`]: crate::prediction_ratio

use crate::error::{invalid, Error, Result};
use crate::spectra::{error_filter_gain, Psd};

/// Relative tolerance for the evenness check `f(θ) = f(-θ)`.
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Autocovariance lags `c_0..=c_M` of a real stationary process.
#[derive(Debug, Clone, PartialEq)]
pub struct Autocovariance {
    lags: Vec<f64>,
}

impl Autocovariance {
    /// Validates `c_0 > 0` and `|c_k| ≤ c_0`.
    pub fn new(lags: Vec<f64>) -> Result<Self> {
        let c0 = *lags
            .first()
            .ok_or_else(|| invalid("autocovariance needs at least lag 0"))?;
        if !(c0 > 0.0 && c0.is_finite()) {
            return Err(invalid(format!(
                "lag-0 autocovariance must be positive, got {c0}"
            )));
        }
        if let Some(k) = lags.iter().position(|c| !c.is_finite() || c.abs() > c0) {
            return Err(invalid(format!(
                "lag {k} autocovariance {} exceeds the variance {c0}",
                lags[k]
            )));
        }
        Ok(Self { lags })
    }

    pub fn lags(&self) -> &[f64] {
        &self.lags
    }

    pub fn max_lag(&self) -> usize {
        self.lags.len() - 1
    }
}

/// Order-`p` one-step predictor `u(0) ≈ Σ_ℓ coeffs[ℓ-1]·u(-ℓ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictorCoeffs {
    coeffs: Vec<f64>,
    attained_variance: f64,
}

impl PredictorCoeffs {
    /// The predictor that always predicts zero.
    pub fn zero(order: usize, variance: f64) -> Self {
        Self {
            coeffs: vec![0.0; order],
            attained_variance: variance,
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Minimum prediction error variance reached for the fitted covariance.
    pub fn attained_variance(&self) -> f64 {
        self.attained_variance
    }
}

/// `c_k = mean f(θ)·cos(kθ)` for `k = 0..=max_lag`.
pub fn autocov_from_psd(f: &Psd, max_lag: usize) -> Result<Autocovariance> {
    let grid = f.grid();
    if 2 * max_lag >= grid.len() {
        return Err(invalid(format!(
            "max lag {max_lag} needs a grid of more than {} nodes, got {}",
            2 * max_lag,
            grid.len()
        )));
    }
    check_even(f)?;
    let values = f.values();
    let lags = (0..=max_lag)
        .map(|k| {
            let weighted: Vec<f64> = grid
                .nodes()
                .zip(values)
                .map(|(theta, v)| v * (k as f64 * theta).cos())
                .collect();
            grid.mean_unchecked(&weighted)
        })
        .collect();
    Autocovariance::new(lags)
}

fn check_even(f: &Psd) -> Result<()> {
    let grid = f.grid();
    let values = f.values();
    for (k, &v) in values.iter().enumerate() {
        let w = values[grid.mirror(k)];
        if (v - w).abs() > SYMMETRY_TOL * v.abs().max(w.abs()) {
            return Err(invalid(format!(
                "spectrum is not even: f({:.6}) = {v} but f({:.6}) = {w}",
                grid.node(k),
                -grid.node(k)
            )));
        }
    }
    Ok(())
}

/// Levinson-Durbin recursion for the order-`p` normal equations.
pub fn levinson(acv: &Autocovariance, p: usize) -> Result<PredictorCoeffs> {
    if p == 0 {
        return Err(invalid("predictor order must be at least 1"));
    }
    if p > acv.max_lag() {
        return Err(invalid(format!(
            "order {p} needs lags up to {p}, only {} available",
            acv.max_lag()
        )));
    }
    let c = acv.lags();
    let mut coeffs: Vec<f64> = Vec::with_capacity(p);
    let mut variance = c[0];
    for m in 1..=p {
        let acc: f64 = coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| a * c[m - 1 - j])
            .sum();
        let reflection = (c[m] - acc) / variance;
        let previous = coeffs.clone();
        for (j, a) in coeffs.iter_mut().enumerate() {
            *a -= reflection * previous[m - 2 - j];
        }
        coeffs.push(reflection);
        variance *= 1.0 - reflection * reflection;
        if variance.is_nan() || variance <= 0.0 {
            return Err(Error::DegenerateCovariance { order: m, variance });
        }
    }
    Ok(PredictorCoeffs {
        coeffs,
        attained_variance: variance,
    })
}

/// Prediction error variance `mean |1 - Σ p_ℓ e^{-iℓθ}|²·f(θ)` of `pred`
/// applied to a process with spectrum `f`.
pub fn degraded_variance(f: &Psd, pred: &PredictorCoeffs) -> Result<f64> {
    let grid = f.grid();
    if grid.len() <= 2 * pred.order() {
        return Err(invalid(format!(
            "order-{} predictor needs a grid of more than {} nodes, got {}",
            pred.order(),
            2 * pred.order(),
            grid.len()
        )));
    }
    let weighted: Vec<f64> = grid
        .nodes()
        .zip(f.values())
        .map(|(theta, v)| error_filter_gain(&pred.coeffs, theta) * v)
        .collect();
    Ok(grid.mean_unchecked(&weighted))
}

/// Degraded variance of the order-`p` predictor fitted to `f2` on a process
/// with spectrum `f1`, over the infinite-order optimum `exp(mean log f1)`.
///
/// Converges to `prediction_ratio(f1, f2)` as `p` grows.
pub fn rho_empirical(f1: &Psd, f2: &Psd, p: usize) -> Result<f64> {
    f1.same_grid(f2)?;
    if !f1.is_strictly_positive() || !f2.is_strictly_positive() {
        return Err(invalid("prediction ratio needs strictly positive spectra"));
    }
    check_even(f1)?;
    let pred = levinson(&autocov_from_psd(f2, p)?, p)?;
    Ok(degraded_variance(f1, &pred)? / f1.geometric_mean())
}
