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

//! Nonparametric spectral estimates from sampled time series.
//!
//! Estimates are evaluated exactly at the grid nodes. Raw periodograms can
//! contain exact zeros for contrived signals, and those zeros make every
//! distance to a positive spectrum infinite; averaging with [`welch`]
//! avoids that in practice. No flooring is applied.

use std::f64::consts::PI;

use rustfft::num_complex::Complex;
use rustfft::FftPlanner;

use crate::error::{invalid, Error, Result};
use crate::grid::FrequencyGrid;
use crate::spectra::Psd;

pub const MIN_SEGMENT: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    samples: Vec<f64>,
    label: Option<String>,
}

impl TimeSeries {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(invalid(format!(
                "time series needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        if let Some(k) = samples.iter().position(|x| !x.is_finite()) {
            return Err(invalid(format!("non-finite sample at index {k}")));
        }
        Ok(Self {
            samples,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.samples.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Window {
    Rectangular,
    Hann,
}

impl Window {
    /// Periodic window of length `len`.
    pub fn coefficients(self, len: usize) -> Vec<f64> {
        match self {
            Window::Rectangular => vec![1.0; len],
            Window::Hann => (0..len)
                .map(|t| 0.5 * (1.0 - (2.0 * PI * t as f64 / len as f64).cos()))
                .collect(),
        }
    }
}

impl std::str::FromStr for Window {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rectangular" | "rect" | "boxcar" => Ok(Window::Rectangular),
            "hann" | "hanning" => Ok(Window::Hann),
            other => Err(invalid(format!("unknown window {other:?}"))),
        }
    }
}

/// `|Σ_t x_t e^{-itθ_k}|²` at every grid node.
///
/// With `θ_k = -π + 2πk/n` the sum is the length-`n` DFT of `x_t·(-1)^t`
/// folded modulo `n`, so the grid values are exact for any series length.
struct GridTransform {
    fft: std::sync::Arc<dyn rustfft::Fft<f64>>,
    n: usize,
}

impl GridTransform {
    fn new(grid: FrequencyGrid) -> Self {
        let n = grid.len();
        Self {
            fft: FftPlanner::new().plan_fft_forward(n),
            n,
        }
    }

    fn power(&self, x: impl Iterator<Item = f64>, out: &mut [f64]) {
        let mut buf = vec![Complex::new(0.0, 0.0); self.n];
        for (t, v) in x.enumerate() {
            let sign = if t % 2 == 0 { 1.0 } else { -1.0 };
            buf[t % self.n].re += sign * v;
        }
        self.fft.process(&mut buf);
        for (o, z) in out.iter_mut().zip(&buf) {
            *o = z.norm_sqr();
        }
    }
}

fn into_psd(grid: FrequencyGrid, values: Vec<f64>) -> Result<Psd> {
    Psd::from_samples(grid, values).map_err(|e| Error::EstimationFailed(e.to_string()))
}

/// `|Σ_t x_t e^{-itθ}|² / L` on the grid.
pub fn periodogram(ts: &TimeSeries, grid: FrequencyGrid) -> Result<Psd> {
    let mut values = vec![0.0; grid.len()];
    GridTransform::new(grid).power(ts.samples.iter().copied(), &mut values);
    let len = ts.len() as f64;
    values.iter_mut().for_each(|v| *v /= len);
    into_psd(grid, values)
}

/// Welch estimate: the average of windowed periodograms over segments of
/// length `segment` advanced by `floor(segment·(1 - overlap))` samples.
///
/// Each segment is normalized by the window power, so white noise of
/// variance `v` has an expected grid mean of `v`.
pub fn welch(
    ts: &TimeSeries,
    segment: usize,
    overlap: f64,
    window: Window,
    grid: FrequencyGrid,
) -> Result<Psd> {
    if segment < MIN_SEGMENT {
        return Err(invalid(format!(
            "segment length must be at least {MIN_SEGMENT}, got {segment}"
        )));
    }
    if segment > ts.len() {
        return Err(invalid(format!(
            "segment length {segment} exceeds the series length {}",
            ts.len()
        )));
    }
    if !(0.0..1.0).contains(&overlap) {
        return Err(invalid(format!(
            "overlap must lie in [0, 1), got {overlap}"
        )));
    }
    let hop = (segment as f64 * (1.0 - overlap)).floor() as usize;
    if hop == 0 {
        return Err(invalid(format!("overlap {overlap} leaves a zero hop")));
    }

    let taper = window.coefficients(segment);
    let scale = taper.iter().map(|w| w * w).sum::<f64>();
    let transform = GridTransform::new(grid);
    let mut acc = vec![0.0; grid.len()];
    let mut scratch = vec![0.0; grid.len()];
    let mut count = 0usize;
    for chunk in ts.samples.windows(segment).step_by(hop) {
        transform.power(chunk.iter().zip(&taper).map(|(x, w)| x * w), &mut scratch);
        acc.iter_mut().zip(&scratch).for_each(|(a, s)| *a += s);
        count += 1;
    }
    let norm = scale * count as f64;
    acc.iter_mut().for_each(|v| *v /= norm);
    into_psd(grid, acc)
}
