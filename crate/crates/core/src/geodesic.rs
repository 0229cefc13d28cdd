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

//! Geodesics between spectra: pointwise geometric interpolation
//! `f_τ = f0^(1-τ) · f1^τ`.
//!
//! Along such a path `d_g(f0, f_τ) = τ·d_g(f0, f1)`, so the length of any
//! sampled path equals the distance between its end points.

use crate::error::{invalid, Error, Result};
use crate::metrics::{geodesic_distance, DistanceResult};
use crate::spectra::Psd;

/// Point at parameter `tau ∈ [0, 1]` on the geodesic from `f0` to `f1`.
///
/// Shared zeros stay zero. Extrapolation outside `[0, 1]` is refused.
pub fn geodesic_point(f0: &Psd, f1: &Psd, tau: f64) -> Result<Psd> {
    f0.same_grid(f1)?;
    if !(0.0..=1.0).contains(&tau) {
        return Err(invalid(format!("tau must lie in [0, 1], got {tau}")));
    }
    if f0.zero_set() != f1.zero_set() {
        return Err(Error::NoFiniteGeodesic);
    }
    let values = f0
        .values()
        .iter()
        .zip(f1.values())
        .map(|(&a, &b)| {
            if a == 0.0 {
                0.0
            } else {
                a.powf(1.0 - tau) * b.powf(tau)
            }
        })
        .collect();
    Psd::from_samples(f0.grid(), values)
}

/// Geodesic sampled at `m` uniformly spaced parameters including both end
/// points.
#[derive(Debug, Clone)]
pub struct GeodesicPath {
    taus: Vec<f64>,
    points: Vec<Psd>,
}

impl GeodesicPath {
    pub fn taus(&self) -> &[f64] {
        &self.taus
    }

    pub fn points(&self) -> &[Psd] {
        &self.points
    }

    pub fn start(&self) -> &Psd {
        &self.points[0]
    }

    pub fn end(&self) -> &Psd {
        &self.points[self.points.len() - 1]
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.points.len()
    }
}

pub fn geodesic_path(f0: &Psd, f1: &Psd, m: usize) -> Result<GeodesicPath> {
    if m < 2 {
        return Err(invalid(format!("a path needs at least 2 points, got {m}")));
    }
    let last = (m - 1) as f64;
    let taus: Vec<f64> = (0..m).map(|k| k as f64 / last).collect();
    let points = taus
        .iter()
        .map(|&tau| geodesic_point(f0, f1, tau))
        .collect::<Result<Vec<_>>>()?;
    Ok(GeodesicPath { taus, points })
}

/// Sum of geodesic distances between consecutive points.
pub fn path_length(path: &GeodesicPath) -> f64 {
    match polyline_length(&path.points) {
        Ok(DistanceResult::Finite(v)) => v,
        // every point of a geodesic shares the end points' grid and zero set
        other => unreachable!("geodesic segment is not finite: {other:?}"),
    }
}

/// Length of an arbitrary chain of spectra under `d_g`.
pub fn polyline_length(points: &[Psd]) -> Result<DistanceResult> {
    points
        .windows(2)
        .map(|w| geodesic_distance(&w[0], &w[1]))
        .try_fold(DistanceResult::Finite(0.0), |acc, d| Ok(acc + d?))
}
