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

//! Intrinsic distances between power spectral density functions.
//!
//! Spectra are sampled on a uniform grid over `[-π, π)` and every integral
//! `∫ · dθ/2π` becomes a grid average. On top of that the crate provides:
//!
//! | Item | Measures |
//! |------|----------|
//! | [`geodesic_distance`] | standard deviation of `log(f1/f2)`, or `Infinite` |
//! | [`scaled_metric_d`] | `d_g` plus the gap between arithmetic means |
//! | [`divergence_ag`] | log of arithmetic over geometric mean of `f1/f2` |
//! | [`divergence_sym`] | `divergence_ag` in both directions |
//! | [`divergence_rs`] | log ratio of two power means of `f1/f2` |
//! | [`prediction_ratio`] | degradation of one-step prediction variance |
//! | [`riemannian_form`], [`fisher_form`] | quadratic forms on perturbations |
//!
//! Geodesics are pointwise geometric interpolants `f0^(1-τ) f1^τ`
//! ([`geodesic_point`], [`geodesic_path`]), and their length equals the
//! distance between the end points.
//!
//! [`prediction`] rebuilds the prediction ratio from finite-order
//! Levinson-Durbin predictors, independently of the closed form.
//!
//! ```
//! use psdmetric::{geodesic_distance, FrequencyGrid, Psd};
//!
//! let grid = FrequencyGrid::new(1024).unwrap();
//! let f1 = Psd::from_fn(grid, |theta| theta.cos().exp()).unwrap();
//! let f2 = Psd::constant(grid, 1.0).unwrap();
//! let d = geodesic_distance(&f1, &f2).unwrap();
//! assert!((d.value().unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
//! ```
//!
//! ## Zeros
//!
//! Spectra may vanish at grid points. Zero detection is exact; a pair whose
//! zero sets differ is at infinite distance. Nothing is floored silently, so
//! raw periodograms with empty bins will report `inf`.

mod error;
#[cfg(test)]
mod oracles;

pub mod estimation;
pub mod geodesic;
pub mod grid;
pub mod io;
pub mod metrics;
pub mod prediction;
pub mod spectra;

pub use error::{Error, Result};
pub use estimation::{periodogram, welch, TimeSeries, Window};
pub use geodesic::{geodesic_path, geodesic_point, path_length, polyline_length, GeodesicPath};
pub use grid::FrequencyGrid;
pub use io::{
    format_significant, read_psd_csv, read_time_series_csv, write_distance_matrix_csv,
    write_psd_csv, DistanceMatrix,
};
pub use metrics::{
    classify, divergence_ag, divergence_rs, divergence_sym, fisher_form, geodesic_distance,
    prediction_ratio, riemannian_form, scaled_metric_d, DistanceResult, ExtendedReal,
    SpectrumClass,
};
pub use prediction::{
    autocov_from_psd, degraded_variance, levinson, rho_empirical, Autocovariance, PredictorCoeffs,
};
pub use spectra::{log_ratio, normalize_to_ray, LogRatio, Psd, SpectralRay};
