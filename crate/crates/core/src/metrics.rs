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

//! Scalar comparisons between spectra: the geodesic distance, the
//! prediction-error divergences and the two quadratic forms.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Result};
use crate::io::format_significant;
use crate::spectra::{
    centred_log_power_mean, extended_log_ratio, log_power_mean, log_ratio, LogRatio, Psd,
};

/// Tolerance on the normalizations required by [`fisher_form`].
pub const FISHER_NORMALIZATION_TOL: f64 = 1e-9;

/// A distance in `[0, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistanceResult {
    Finite(f64),
    Infinite,
}

/// A divergence value in `ℝ ∪ {+∞}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtendedReal {
    Finite(f64),
    Infinite,
}

macro_rules! extended_value {
    ($ty:ident) => {
        impl $ty {
            pub fn value(self) -> Option<f64> {
                match self {
                    $ty::Finite(v) => Some(v),
                    $ty::Infinite => None,
                }
            }

            pub fn is_infinite(self) -> bool {
                matches!(self, $ty::Infinite)
            }

            /// The value as an `f64`, with `Infinite` mapped to `f64::INFINITY`.
            pub fn to_f64(self) -> f64 {
                self.value().unwrap_or(f64::INFINITY)
            }
        }

        impl std::ops::Add for $ty {
            type Output = $ty;

            fn add(self, rhs: $ty) -> $ty {
                match (self, rhs) {
                    ($ty::Finite(a), $ty::Finite(b)) => $ty::Finite(a + b),
                    _ => $ty::Infinite,
                }
            }
        }

        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                match (self, other) {
                    ($ty::Finite(a), $ty::Finite(b)) => a.partial_cmp(b),
                    ($ty::Finite(_), $ty::Infinite) => Some(Ordering::Less),
                    ($ty::Infinite, $ty::Finite(_)) => Some(Ordering::Greater),
                    ($ty::Infinite, $ty::Infinite) => Some(Ordering::Equal),
                }
            }
        }

        /// Twelve significant digits, or `inf`.
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self {
                    $ty::Finite(v) => f.write_str(&format_significant(*v, 12)),
                    $ty::Infinite => f.write_str("inf"),
                }
            }
        }
    };
}

extended_value!(DistanceResult);
extended_value!(ExtendedReal);

/// Geodesic distance: the grid standard deviation of `log(f1/f2)`.
///
/// `Infinite` exactly when the zero sets of the two spectra differ. The
/// distance ignores scale, `d_g(f, κf) = 0`.
pub fn geodesic_distance(f1: &Psd, f2: &Psd) -> Result<DistanceResult> {
    Ok(match log_ratio(f1, f2)? {
        LogRatio::Samples(l) => {
            DistanceResult::Finite(f1.grid().central_variance_unchecked(&l).sqrt())
        }
        LogRatio::NotSquareLoggable => DistanceResult::Infinite,
    })
}

/// `d_g(f1, f2) + |mean f1 - mean f2|`, a metric that also sees scale.
pub fn scaled_metric_d(f1: &Psd, f2: &Psd) -> Result<DistanceResult> {
    let dg = geodesic_distance(f1, f2)?;
    Ok(dg + DistanceResult::Finite((f1.mean() - f2.mean()).abs()))
}

/// `log mean(f1/f2) - mean log(f1/f2)`: the log of the arithmetic over the
/// geometric mean of the ratio.
///
/// Nonnegative, and zero only for proportional spectra. Infinite when the
/// zero sets differ (either the arithmetic mean or the geometric term
/// diverges).
pub fn divergence_ag(f1: &Psd, f2: &Psd) -> Result<ExtendedReal> {
    Ok(match log_ratio(f1, f2)? {
        LogRatio::Samples(l) => {
            let centre = f1.grid().mean_unchecked(&l);
            let deviations: Vec<f64> = l.iter().map(|x| x - centre).collect();
            ExtendedReal::Finite(centred_log_power_mean(&deviations, 1.0).max(0.0))
        }
        LogRatio::NotSquareLoggable => ExtendedReal::Infinite,
    })
}

pub fn divergence_sym(f1: &Psd, f2: &Psd) -> Result<ExtendedReal> {
    Ok(divergence_ag(f1, f2)? + divergence_ag(f2, f1)?)
}

/// `log M_r(f1/f2) - log M_s(f1/f2)` where `M_r` is the power mean with
/// exponent `r`.
///
/// Nonnegative when `r > s`. Exponents must be nonzero and distinct. Where
/// only one spectrum vanishes the ratio is `0` or `∞`; a negative exponent
/// cannot be applied to a zero ratio, and a value of `-∞` (possible only
/// with `r < s`) is reported as an error.
pub fn divergence_rs(f1: &Psd, f2: &Psd, r: f64, s: f64) -> Result<ExtendedReal> {
    for (name, e) in [("r", r), ("s", s)] {
        if e == 0.0 || !e.is_finite() {
            return Err(invalid(format!(
                "exponent {name} must be finite and nonzero, got {e}"
            )));
        }
    }
    if r == s {
        return Err(invalid(format!("exponents must differ, got r = s = {r}")));
    }
    match log_ratio(f1, f2)? {
        LogRatio::Samples(l) => {
            let centre = f1.grid().mean_unchecked(&l);
            let deviations: Vec<f64> = l.iter().map(|x| x - centre).collect();
            let value =
                centred_log_power_mean(&deviations, r) - centred_log_power_mean(&deviations, s);
            Ok(ExtendedReal::Finite(value))
        }
        LogRatio::NotSquareLoggable => {
            let logs = extended_log_ratio(f1, f2);
            if r.min(s) < 0.0 && logs.contains(&f64::NEG_INFINITY) {
                return Err(invalid(
                    "negative exponent applied to a ratio that vanishes (f1 = 0 < f2)",
                ));
            }
            let (lr, ls) = (log_power_mean(&logs, r), log_power_mean(&logs, s));
            if lr.is_infinite() && ls.is_infinite() {
                return Err(invalid(
                    "both power means diverge; the divergence is undefined",
                ));
            }
            let value = lr - ls;
            if value == f64::INFINITY {
                Ok(ExtendedReal::Infinite)
            } else if value == f64::NEG_INFINITY {
                Err(invalid("divergence is -inf; use r > s"))
            } else {
                Ok(ExtendedReal::Finite(value))
            }
        }
    }
}

/// Ratio of the degraded to the optimal one-step prediction error variance
/// when a predictor designed for `f2` is applied to a process with spectrum
/// `f1`: `mean(f1/f2) / exp(mean log(f1/f2))`, always `≥ 1`.
pub fn prediction_ratio(f1: &Psd, f2: &Psd) -> Result<ExtendedReal> {
    Ok(match divergence_ag(f1, f2)? {
        ExtendedReal::Finite(v) => ExtendedReal::Finite(v.exp()),
        ExtendedReal::Infinite => ExtendedReal::Infinite,
    })
}

/// `mean((Δ/f)²) - mean(Δ/f)²`, the quadratic form induced by the
/// divergences at `f`. Degenerate along `Δ ∝ f`.
pub fn riemannian_form(f: &Psd, delta: &[f64]) -> Result<f64> {
    let relative = relative_perturbation(f, delta)?;
    f.grid().central_variance(&relative)
}

/// `mean(Δ²/f)` for a probability density `f` (mean one) and a tangent
/// direction `Δ` with mean zero.
pub fn fisher_form(f: &Psd, delta: &[f64]) -> Result<f64> {
    let relative = relative_perturbation(f, delta)?;
    let grid = f.grid();
    let mass = f.mean();
    if (mass - 1.0).abs() > FISHER_NORMALIZATION_TOL {
        return Err(invalid(format!(
            "fisher form needs a probability density: mean(f) = {mass}, expected 1"
        )));
    }
    let drift = grid.mean_unchecked(delta);
    if drift.abs() > FISHER_NORMALIZATION_TOL {
        return Err(invalid(format!(
            "fisher form needs a zero-mean perturbation: mean(delta) = {drift}"
        )));
    }
    let weighted: Vec<f64> = relative.iter().zip(delta).map(|(r, d)| r * d).collect();
    Ok(grid.mean_unchecked(&weighted))
}

fn relative_perturbation(f: &Psd, delta: &[f64]) -> Result<Vec<f64>> {
    f.grid().check_len(delta.len())?;
    if !f.is_strictly_positive() {
        return Err(invalid(format!(
            "base spectrum vanishes at {} grid point(s)",
            f.zero_set().len()
        )));
    }
    if let Some(k) = delta.iter().position(|d| !d.is_finite()) {
        return Err(invalid(format!("non-finite perturbation at index {k}")));
    }
    Ok(delta.iter().zip(f.values()).map(|(d, v)| d / v).collect())
}

/// Grid-level position of a spectrum.
///
/// `StrictlyPositive` spectra have square-integrable logs on the grid, so
/// they lie at finite distance from each other and from constants.
/// `HasZeros` spectra are infinitely far from all of those. A finite grid
/// cannot tell square-integrable from merely integrable logs, so this is the
/// only dichotomy that can be decided here.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumClass {
    StrictlyPositive,
    HasZeros,
}

impl fmt::Display for SpectrumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumClass::StrictlyPositive => "strictly-positive",
            SpectrumClass::HasZeros => "has-zeros",
        })
    }
}

pub fn classify(f: &Psd) -> SpectrumClass {
    if f.is_strictly_positive() {
        SpectrumClass::StrictlyPositive
    } else {
        SpectrumClass::HasZeros
    }
}
