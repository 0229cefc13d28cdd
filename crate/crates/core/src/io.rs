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

//! File formats.
//!
//! * PSD files: header `theta,psd`, one row per grid node, `theta`
//!   ascending from `-π` with uniform spacing `2π/n`.
//! * Time series: header `t,value` or `value`, rows in sample order.
//! * Distance matrices: label header row and column, `inf` for infinite
//!   entries, finite entries with 12 significant digits.
//!
//! All files use `,` separators and LF line endings.

use std::f64::consts::PI;
use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{invalid, Error, Result};
use crate::estimation::TimeSeries;
use crate::grid::FrequencyGrid;
use crate::metrics::{geodesic_distance, DistanceResult};
use crate::spectra::Psd;

/// Allowed deviation of a file's `theta` column from the uniform grid,
/// relative to the full period `2π`.
pub const GRID_TOLERANCE: f64 = 1e-9;

/// Formats `x` with at most `digits` significant digits in the manner of
/// C's `%g`: fixed notation for moderate exponents, scientific otherwise,
/// trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent");
    if exp >= -5 && exp < digits as i32 {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exp}", trim_fraction(mantissa))
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

fn csv_error(path: &Path, err: csv::Error) -> Error {
    let line = err.position().map(|p| p.line()).unwrap_or(0);
    match err.into_kind() {
        csv::ErrorKind::Io(source) => Error::Io {
            path: path.to_path_buf(),
            source,
        },
        kind => Error::Parse {
            path: path.to_path_buf(),
            line,
            message: format!("{kind:?}"),
        },
    }
}

fn open_csv(path: &Path) -> Result<csv::Reader<File>> {
    let file = File::open(path).map_err(io_error(path))?;
    Ok(reader(file))
}

fn reader<R: Read>(r: R) -> csv::Reader<R> {
    csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(r)
}

fn parse_field(path: &Path, line: u64, name: &str, field: Option<&str>) -> Result<f64> {
    let parse_err = |message: String| Error::Parse {
        path: path.to_path_buf(),
        line,
        message,
    };
    let text = field.ok_or_else(|| parse_err(format!("missing column `{name}`")))?;
    let value: f64 = text
        .parse()
        .map_err(|_| parse_err(format!("`{name}` is not a number: {text:?}")))?;
    if !value.is_finite() {
        return Err(parse_err(format!("`{name}` is not finite: {text:?}")));
    }
    Ok(value)
}

/// Reads a PSD file and recovers its grid from the `theta` column.
pub fn read_psd_csv(path: impl AsRef<Path>) -> Result<Psd> {
    let path = path.as_ref();
    let mut rdr = open_csv(path)?;
    let headers = rdr.headers().map_err(|e| csv_error(path, e))?.clone();
    if headers.len() != 2 || &headers[0] != "theta" || &headers[1] != "psd" {
        return Err(Error::Parse {
            path: path.to_path_buf(),
            line: 1,
            message: format!(
                "expected header `theta,psd`, found {:?}",
                headers.iter().collect::<Vec<_>>()
            ),
        });
    }
    let mut thetas = Vec::new();
    let mut values = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 2 {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line,
                message: format!("expected 2 fields, found {}", record.len()),
            });
        }
        let theta = parse_field(path, line, "theta", record.get(0))?;
        let value = parse_field(path, line, "psd", record.get(1))?;
        if value < 0.0 {
            return Err(Error::FileConeViolation {
                path: path.to_path_buf(),
                line,
                value,
            });
        }
        thetas.push(theta);
        values.push(value);
    }

    let invalid_grid = |message: String| Error::InvalidGrid {
        path: path.to_path_buf(),
        message,
    };
    let grid = FrequencyGrid::new(thetas.len())
        .map_err(|_| invalid_grid(format!("need at least 2 rows, found {}", thetas.len())))?;
    for (k, &theta) in thetas.iter().enumerate() {
        let expected = grid.node(k);
        if (theta - expected).abs() > GRID_TOLERANCE * 2.0 * PI {
            return Err(invalid_grid(format!(
                "row {} has theta {theta}, uniform grid of {} nodes expects {expected}",
                k + 1,
                grid.len()
            )));
        }
    }
    Psd::from_samples(grid, values).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

/// Writes `theta,psd` rows with shortest round-trip formatting, so reading
/// the file back reproduces every value bit for bit.
pub fn write_psd_csv(psd: &Psd, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(io_error(path))?;
    let mut out = BufWriter::new(file);
    write_psd(psd, &mut out)
        .and_then(|_| out.flush())
        .map_err(io_error(path))
}

/// Same layout as [`write_psd_csv`], to any writer.
pub fn write_psd<W: Write + ?Sized>(psd: &Psd, out: &mut W) -> std::io::Result<()> {
    writeln!(out, "theta,psd")?;
    for (theta, value) in psd.grid().nodes().zip(psd.values()) {
        writeln!(out, "{theta},{value}")?;
    }
    Ok(())
}

/// Reads a `t,value` or `value` file. The label is the file stem.
pub fn read_time_series_csv(path: impl AsRef<Path>) -> Result<TimeSeries> {
    let path = path.as_ref();
    let mut rdr = open_csv(path)?;
    let headers = rdr.headers().map_err(|e| csv_error(path, e))?.clone();
    let column = match headers.iter().collect::<Vec<_>>().as_slice() {
        ["t", "value"] => 1,
        ["value"] => 0,
        other => {
            return Err(Error::Parse {
                path: path.to_path_buf(),
                line: 1,
                message: format!("expected header `t,value` or `value`, found {other:?}"),
            })
        }
    };
    let mut samples = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        samples.push(parse_field(path, line, "value", record.get(column))?);
    }
    let ts = TimeSeries::new(samples).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
    Ok(match path.file_stem() {
        Some(stem) => ts.with_label(stem.to_string_lossy()),
        None => ts,
    })
}

/// Symmetric matrix of pairwise geodesic distances.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    labels: Vec<String>,
    entries: Vec<DistanceResult>,
}

impl DistanceMatrix {
    /// Evaluates every unordered pair once, in parallel. The result does not
    /// depend on the thread count.
    pub fn from_spectra(labels: Vec<String>, spectra: &[Psd]) -> Result<Self> {
        if labels.len() != spectra.len() {
            return Err(invalid(format!(
                "{} labels for {} spectra",
                labels.len(),
                spectra.len()
            )));
        }
        if let Some(first) = spectra.first() {
            for s in &spectra[1..] {
                first.same_grid(s)?;
            }
        }
        let n = spectra.len();
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let distances = pairs
            .par_iter()
            .map(|&(i, j)| geodesic_distance(&spectra[i], &spectra[j]))
            .collect::<Result<Vec<_>>>()?;
        let mut entries = vec![DistanceResult::Finite(0.0); n * n];
        for (&(i, j), d) in pairs.iter().zip(distances) {
            entries[i * n + j] = d;
            entries[j * n + i] = d;
        }
        Ok(Self { labels, entries })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn get(&self, i: usize, j: usize) -> DistanceResult {
        self.entries[i * self.len() + j]
    }

    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(std::iter::once("").chain(self.labels.iter().map(String::as_str)))?;
        for (i, label) in self.labels.iter().enumerate() {
            let row: Vec<String> = (0..self.len())
                .map(|j| self.get(i, j).to_string())
                .collect();
            w.write_record(std::iter::once(label.as_str()).chain(row.iter().map(String::as_str)))?;
        }
        w.flush()?;
        Ok(())
    }
}

pub fn write_distance_matrix_csv(m: &DistanceMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path: PathBuf = path.as_ref().to_path_buf();
    let file = File::create(&path).map_err(io_error(&path))?;
    m.write_csv(BufWriter::new(file))
        .map_err(|e| csv_error(&path, e))
}
