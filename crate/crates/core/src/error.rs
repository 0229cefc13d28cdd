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

use std::path::PathBuf;

/// Errors produced by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A value outside the cone of nonnegative spectra.
    #[error("negative or non-finite spectral value {value} at index {index}")]
    ConeViolation { index: usize, value: f64 },

    #[error("unstable autoregressive model: min |A(e^iθ)| = {min_gain:e} on the grid")]
    UnstableModel { min_gain: f64 },

    #[error("spectrum vanishes at {zeros} grid point(s) and has no ray representative")]
    NotNormalizable { zeros: usize },

    #[error("no finite geodesic: the end points have different zero sets")]
    NoFiniteGeodesic,

    #[error(
        "degenerate covariance sequence: prediction error variance {variance:e} at order {order}"
    )]
    DegenerateCovariance { order: usize, variance: f64 },

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("estimation failed: {0}")]
    EstimationFailed(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("{}:{line}: {message}", path.display())]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("{}: invalid grid: {message}", path.display())]
    InvalidGrid { path: PathBuf, message: String },

    #[error("{}:{line}: negative spectral value {value}", path.display())]
    FileConeViolation {
        path: PathBuf,
        line: u64,
        value: f64,
    },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
