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

//! Power spectral densities sampled on a [`FrequencyGrid`].

use crate::error::{invalid, Error, Result};
use crate::grid::FrequencyGrid;

/// Smallest `|A(e^{iθ})|` on the grid accepted by [`Psd::from_ar`].
pub const AR_STABILITY_FLOOR: f64 = 1e-8;

/// A nonnegative, not identically zero spectrum on a grid.
///
/// Grid points where the value is exactly `0.0` form the zero set. Tiny
/// positive values are kept as they are.
#[derive(Debug, Clone, PartialEq)]
pub struct Psd {
    grid: FrequencyGrid,
    values: Vec<f64>,
    zero_set: Vec<usize>,
}

impl Psd {
    pub fn from_samples(grid: FrequencyGrid, values: Vec<f64>) -> Result<Self> {
        grid.check_len(values.len())?;
        if let Some((index, &value)) = values
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::ConeViolation { index, value });
        }
        let zero_set: Vec<usize> = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 0.0)
            .map(|(k, _)| k)
            .collect();
        if zero_set.len() == values.len() {
            return Err(invalid("spectrum is identically zero"));
        }
        Ok(Self {
            grid,
            values,
            zero_set,
        })
    }

    pub fn from_fn(grid: FrequencyGrid, f: impl FnMut(f64) -> f64) -> Result<Self> {
        Self::from_samples(grid, grid.sample(f))
    }

    pub fn constant(grid: FrequencyGrid, level: f64) -> Result<Self> {
        Self::from_samples(grid, vec![level; grid.len()])
    }

    /// Spectrum `σ² / |A(e^{iθ})|²` of the autoregression
    /// `u(t) = Σ a_ℓ u(t-ℓ) + e(t)`, with `A(z) = 1 - Σ a_ℓ z^{-ℓ}`.
    ///
    /// The model is rejected when `|A|` drops below [`AR_STABILITY_FLOOR`] at
    /// some grid node. This only certifies the model at the grid resolution.
    pub fn from_ar(a: &[f64], sigma2: f64, grid: FrequencyGrid) -> Result<Self> {
        if !(sigma2 > 0.0 && sigma2.is_finite()) {
            return Err(invalid(format!(
                "innovation variance must be positive, got {sigma2}"
            )));
        }
        if a.iter().any(|c| !c.is_finite()) {
            return Err(invalid("non-finite autoregressive coefficient"));
        }
        let gains = grid.sample(|theta| error_filter_gain(a, theta));
        let min_gain = gains.iter().copied().fold(f64::INFINITY, f64::min).sqrt();
        if min_gain <= AR_STABILITY_FLOOR {
            return Err(Error::UnstableModel { min_gain });
        }
        Self::from_samples(grid, gains.into_iter().map(|g| sigma2 / g).collect())
    }

    pub fn grid(&self) -> FrequencyGrid {
        self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Indices where the spectrum is exactly zero, ascending.
    pub fn zero_set(&self) -> &[usize] {
        &self.zero_set
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.zero_set.is_empty()
    }

    /// `κ·f` for `κ > 0`.
    pub fn scaled(&self, kappa: f64) -> Result<Self> {
        if !(kappa > 0.0 && kappa.is_finite()) {
            return Err(invalid(format!(
                "scale factor must be positive, got {kappa}"
            )));
        }
        Self::from_samples(self.grid, self.values.iter().map(|v| v * kappa).collect())
    }

    /// Arithmetic mean over the grid.
    pub fn mean(&self) -> f64 {
        self.grid.mean_unchecked(&self.values)
    }

    /// Power mean `(mean f^r)^{1/r}` for `r ≠ 0`.
    pub fn generalized_mean(&self, r: f64) -> Result<f64> {
        if r == 0.0 || !r.is_finite() {
            return Err(invalid(format!(
                "power mean exponent must be finite and nonzero, got {r} (use geometric_mean for 0)"
            )));
        }
        if r < 0.0 && !self.is_strictly_positive() {
            return Err(Error::DivisionByZero(format!(
                "power mean with exponent {r} of a spectrum with {} zero(s)",
                self.zero_set.len()
            )));
        }
        let logs: Vec<f64> = self.values.iter().map(|v| v.ln()).collect();
        Ok(log_power_mean(&logs, r).exp())
    }

    /// `exp(mean log f)`, or 0 when the spectrum has zeros.
    pub fn geometric_mean(&self) -> f64 {
        if !self.is_strictly_positive() {
            return 0.0;
        }
        let logs: Vec<f64> = self.values.iter().map(|v| v.ln()).collect();
        self.grid.mean_unchecked(&logs).exp()
    }

    pub(crate) fn same_grid(&self, other: &Psd) -> Result<()> {
        if self.grid != other.grid {
            return Err(invalid(format!(
                "spectra live on different grids ({} vs {} nodes)",
                self.grid.len(),
                other.grid.len()
            )));
        }
        Ok(())
    }
}

/// `|A(e^{iθ})|²` for `A(z) = 1 - Σ_ℓ a_ℓ z^{-ℓ}`, `ℓ = 1..=a.len()`.
pub(crate) fn error_filter_gain(a: &[f64], theta: f64) -> f64 {
    let (mut re, mut im) = (1.0, 0.0);
    for (l, &c) in a.iter().enumerate() {
        let phase = (l + 1) as f64 * theta;
        re -= c * phase.cos();
        im += c * phase.sin();
    }
    re * re + im * im
}

/// `(1/r) log mean exp(r·x)` over a vector of logarithms.
///
/// Entries may be `±inf` (zero or unbounded ratios).
pub(crate) fn log_power_mean(logs: &[f64], r: f64) -> f64 {
    if logs.iter().all(|x| x.is_finite()) {
        let centre = logs.iter().sum::<f64>() / logs.len() as f64;
        let deviations: Vec<f64> = logs.iter().map(|x| x - centre).collect();
        return centre + centred_log_power_mean(&deviations, r);
    }
    let scaled: Vec<f64> = logs.iter().map(|x| r * x).collect();
    let top = scaled.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if top.is_infinite() {
        return top / r;
    }
    let sum = scaled.iter().map(|x| (x - top).exp()).sum::<f64>() / logs.len() as f64;
    (top + sum.ln()) / r
}

/// `(1/r) log mean exp(r·x)` for finite `x` with zero mean.
///
/// Summed through `expm1`/`ln_1p` so that the result keeps its relative
/// accuracy when all deviations are small.
pub(crate) fn centred_log_power_mean(deviations: &[f64], r: f64) -> f64 {
    let n = deviations.len() as f64;
    let top = deviations
        .iter()
        .map(|x| r * x)
        .fold(f64::NEG_INFINITY, f64::max);
    if top < 700.0 {
        let excess = deviations.iter().map(|x| (r * x).exp_m1()).sum::<f64>() / n;
        excess.ln_1p() / r
    } else {
        let sum = deviations.iter().map(|x| (r * x - top).exp()).sum::<f64>() / n;
        (top + sum.ln()) / r
    }
}

/// Normalized representative of the equivalence class `{κ f : κ > 0}`.
///
/// The representative has geometric mean one. Spectra with zeros have no
/// such representative.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralRay {
    representative: Psd,
}

impl SpectralRay {
    pub fn representative(&self) -> &Psd {
        &self.representative
    }

    pub fn into_representative(self) -> Psd {
        self.representative
    }
}

pub fn normalize_to_ray(f: &Psd) -> Result<SpectralRay> {
    if !f.is_strictly_positive() {
        return Err(Error::NotNormalizable {
            zeros: f.zero_set.len(),
        });
    }
    let g = f.geometric_mean();
    let representative = Psd::from_samples(f.grid, f.values.iter().map(|v| v / g).collect())?;
    Ok(SpectralRay { representative })
}

/// `log(f1/f2)` on the grid, or the marker that it is not square integrable.
#[derive(Debug, Clone, PartialEq)]
pub enum LogRatio {
    Samples(Vec<f64>),
    /// Some grid point has exactly one of the two spectra equal to zero.
    NotSquareLoggable,
}

impl LogRatio {
    pub fn samples(&self) -> Option<&[f64]> {
        match self {
            LogRatio::Samples(s) => Some(s),
            LogRatio::NotSquareLoggable => None,
        }
    }
}

/// Pointwise `log(f1/f2)`.
///
/// Where both spectra vanish the ratio is undefined; those nodes take the
/// mean log ratio over the common support, so `d_g(f, κf) = 0` holds for
/// spectra with zeros too. When the zero sets differ the log ratio is
/// unbounded and the result is [`LogRatio::NotSquareLoggable`].
pub fn log_ratio(f1: &Psd, f2: &Psd) -> Result<LogRatio> {
    f1.same_grid(f2)?;
    if f1.zero_set != f2.zero_set {
        return Ok(LogRatio::NotSquareLoggable);
    }
    Ok(LogRatio::Samples(extended_log_ratio(f1, f2)))
}

/// `ln f1 - ln f2` in the extended reals, with shared zeros filled by the
/// mean over the nodes where both spectra are positive.
///
/// The difference of logarithms is exactly antisymmetric in the arguments.
pub(crate) fn extended_log_ratio(f1: &Psd, f2: &Psd) -> Vec<f64> {
    let mut logs = Vec::with_capacity(f1.values.len());
    let (mut support_sum, mut support_len) = (0.0, 0usize);
    for (&a, &b) in f1.values.iter().zip(&f2.values) {
        let l = a.ln() - b.ln();
        if a > 0.0 && b > 0.0 {
            support_sum += l;
            support_len += 1;
        }
        logs.push(l);
    }
    if f1.zero_set.iter().any(|k| f2.values[*k] == 0.0) {
        let fill = if support_len > 0 {
            support_sum / support_len as f64
        } else {
            0.0
        };
        for (l, (&a, &b)) in logs.iter_mut().zip(f1.values.iter().zip(&f2.values)) {
            if a == 0.0 && b == 0.0 {
                *l = fill;
            }
        }
    }
    logs
}
