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

//! Command-line front end.
//!
//! Spectrum operands are either PSD files (`theta,psd` CSV) or analytic
//! fixtures written with a leading `@`:
//!
//! | Operand | Spectrum |
//! |---------|----------|
//! | `@const:C` | constant `C` |
//! | `@expcos:K` | `exp(K cos θ)` |
//! | `@ar:A1,A2,...[:S2]` | AR spectrum `S2 / |1 - Σ A_ℓ e^{-iℓθ}|²` (`S2` defaults to 1) |
//!
//! Analytic operands are evaluated on the `--grid` size, or on the grid of
//! the file operands. Files are never resampled.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use psdmetric::grid::DEFAULT_GRID_SIZE;
use psdmetric::io::write_psd;
use psdmetric::{
    classify, divergence_ag, divergence_rs, divergence_sym, format_significant, geodesic_distance,
    geodesic_path, geodesic_point, path_length, periodogram, prediction_ratio, read_psd_csv,
    read_time_series_csv, rho_empirical, scaled_metric_d, welch, write_psd_csv, DistanceMatrix,
    FrequencyGrid, Psd, Window,
};

/// Distances, divergences and geodesics between power spectral densities.
#[derive(Debug, Parser)]
#[command(name = "psdmetric", version)]
pub struct Cli {
    /// Worker threads for `matrix` (defaults to the number of CPUs).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distance or divergence between two spectra.
    Dist {
        f1: String,
        f2: String,
        #[arg(long, value_enum, default_value_t = Metric::Dg)]
        metric: Metric,
        /// Upper exponent for `--metric rs`.
        #[arg(long, allow_negative_numbers = true)]
        r: Option<f64>,
        /// Lower exponent for `--metric rs`.
        #[arg(long, allow_negative_numbers = true)]
        s: Option<f64>,
        /// Grid size for analytic operands.
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Point on, or samples of, the geodesic between two spectra.
    #[command(alias = "morph")]
    Geodesic {
        f1: String,
        f2: String,
        /// Single point at this parameter in [0, 1].
        #[arg(long, conflicts_with = "steps")]
        tau: Option<f64>,
        /// Number of uniformly spaced points, end points included.
        #[arg(long, requires = "out")]
        steps: Option<usize>,
        /// Output directory for `--steps`, output file for `--tau`.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Pairwise geodesic distances between PSD files.
    Matrix {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Estimate a PSD from a time-series file.
    Estimate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Welch)]
        method: Method,
        #[arg(long, default_value_t = 256)]
        segment: usize,
        #[arg(long, default_value_t = 0.5)]
        overlap: f64,
        #[arg(long, value_enum, default_value_t = WindowArg::Hann)]
        window: WindowArg,
        #[arg(long, default_value_t = DEFAULT_GRID_SIZE)]
        grid: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether a spectrum vanishes anywhere on its grid.
    Classify {
        file: String,
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Prediction-error variance ratio of a predictor fitted to F2 applied to F1.
    Rho {
        f1: String,
        f2: String,
        /// Predictor order for `--oracle levinson`.
        #[arg(long, default_value_t = 64)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Oracle::Formula)]
        oracle: Oracle,
        #[arg(long)]
        grid: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    /// geodesic distance
    Dg,
    /// geodesic distance plus the gap between means
    D,
    /// arithmetic/geometric-mean divergence
    Ag,
    /// symmetrized `ag`
    Sym,
    /// power-mean divergence with exponents --r > --s
    Rs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Periodogram,
    Welch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WindowArg {
    Rectangular,
    Hann,
}

impl From<WindowArg> for Window {
    fn from(w: WindowArg) -> Self {
        match w {
            WindowArg::Rectangular => Window::Rectangular,
            WindowArg::Hann => Window::Hann,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    /// arithmetic over geometric mean of the ratio
    Formula,
    /// finite-order Levinson-Durbin predictor
    Levinson,
}

/// Failure of a command, mapped onto the exit status.
#[derive(Debug)]
pub enum CliError {
    /// Bad flag combination; exit 2.
    Usage(String),
    /// Failure while computing or doing I/O; exit 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<psdmetric::Error> for CliError {
    fn from(e: psdmetric::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> CliError + '_ {
    move |e| CliError::Domain(format!("{}: {e}", path.display()))
}

type CliResult<T> = Result<T, CliError>;

/// A spectrum operand before grid resolution.
#[derive(Debug, Clone, PartialEq)]
pub enum Operand {
    File(PathBuf),
    Constant(f64),
    ExpCos(f64),
    Ar { coeffs: Vec<f64>, sigma2: f64 },
}

impl Operand {
    pub fn parse(text: &str) -> CliResult<Self> {
        let Some(body) = text.strip_prefix('@') else {
            return Ok(Operand::File(PathBuf::from(text)));
        };
        let bad = |why: &str| CliError::Usage(format!("invalid analytic operand {text:?}: {why}"));
        let number = |s: &str| s.trim().parse::<f64>().map_err(|_| bad("not a number"));
        let (kind, args) = body.split_once(':').unwrap_or((body, ""));
        match kind {
            "const" => Ok(Operand::Constant(number(args)?)),
            "expcos" => Ok(Operand::ExpCos(number(args)?)),
            "ar" => {
                let (coeffs, sigma2) = match args.split_once(':') {
                    Some((c, s)) => (c, number(s)?),
                    None => (args, 1.0),
                };
                let coeffs = coeffs
                    .split(',')
                    .filter(|c| !c.trim().is_empty())
                    .map(number)
                    .collect::<CliResult<Vec<_>>>()?;
                Ok(Operand::Ar { coeffs, sigma2 })
            }
            _ => Err(bad("expected @const, @expcos or @ar")),
        }
    }

    fn label(&self, text: &str) -> String {
        match self {
            Operand::File(p) => p
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| text.to_string()),
            _ => text.to_string(),
        }
    }

    fn evaluate(&self, grid: FrequencyGrid) -> CliResult<Psd> {
        Ok(match self {
            Operand::File(_) => unreachable!("files are read, not evaluated"),
            Operand::Constant(c) => Psd::constant(grid, *c)?,
            Operand::ExpCos(k) => Psd::from_fn(grid, |t| (k * t.cos()).exp())?,
            Operand::Ar { coeffs, sigma2 } => Psd::from_ar(coeffs, *sigma2, grid)?,
        })
    }
}

/// Loads all operands onto one grid: files fix it, `--grid` must agree with
/// them, analytic operands follow.
fn load_spectra(texts: &[String], grid: Option<usize>) -> CliResult<Vec<Psd>> {
    let operands = texts
        .iter()
        .map(|t| Operand::parse(t))
        .collect::<CliResult<Vec<_>>>()?;
    let mut loaded: Vec<Option<Psd>> = Vec::with_capacity(operands.len());
    for op in &operands {
        loaded.push(match op {
            Operand::File(path) => Some(read_psd_csv(path)?),
            _ => None,
        });
    }
    let file_grid = loaded.iter().flatten().map(Psd::grid).next();
    if let (Some(n), Some(fg)) = (grid, file_grid) {
        if n != fg.len() {
            return Err(CliError::Domain(format!(
                "--grid {n} differs from the {}-node grid of the input files; files are not resampled",
                fg.len()
            )));
        }
    }
    let grid = match (file_grid, grid) {
        (Some(g), _) => g,
        (None, Some(n)) => FrequencyGrid::new(n).map_err(|e| CliError::Usage(e.to_string()))?,
        (None, None) => FrequencyGrid::new(DEFAULT_GRID_SIZE)?,
    };
    operands
        .iter()
        .zip(loaded)
        .map(|(op, l)| match l {
            Some(psd) => Ok(psd),
            None => op.evaluate(grid),
        })
        .collect()
}

fn load_pair(f1: &str, f2: &str, grid: Option<usize>) -> CliResult<(Psd, Psd)> {
    let mut v = load_spectra(&[f1.to_string(), f2.to_string()], grid)?;
    let b = v.pop().expect("two spectra");
    let a = v.pop().expect("two spectra");
    Ok((a, b))
}

fn write_stdout_or_file(out: Option<&Path>, stdout: &mut dyn Write, body: &[u8]) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, body).map_err(io_err(path)),
        None => stdout
            .write_all(body)
            .map_err(io_err(Path::new("<stdout>"))),
    }
}

/// Parses `argv` (program name first) and runs the command.
///
/// Returns the process exit status: 0 on success, 1 on domain errors, 2 on
/// usage errors. An infinite distance is a result, not an error.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Dist {
            f1,
            f2,
            metric,
            r,
            s,
            grid,
        } => {
            let exponents = match (metric, r, s) {
                (Metric::Rs, Some(r), Some(s)) if r > s => Some((*r, *s)),
                (Metric::Rs, Some(r), Some(s)) => {
                    return Err(CliError::Usage(format!(
                        "--metric rs needs --r greater than --s, got r = {r}, s = {s}"
                    )))
                }
                (Metric::Rs, _, _) => {
                    return Err(CliError::Usage("--metric rs needs both --r and --s".into()))
                }
                (_, None, None) => None,
                _ => {
                    return Err(CliError::Usage(
                        "--r and --s only apply to --metric rs".into(),
                    ))
                }
            };
            let (a, b) = load_pair(f1, f2, *grid)?;
            let text = match metric {
                Metric::Dg => geodesic_distance(&a, &b)?.to_string(),
                Metric::D => scaled_metric_d(&a, &b)?.to_string(),
                Metric::Ag => divergence_ag(&a, &b)?.to_string(),
                Metric::Sym => divergence_sym(&a, &b)?.to_string(),
                Metric::Rs => {
                    let (r, s) = exponents.expect("checked above");
                    if r == 0.0 || s == 0.0 {
                        return Err(CliError::Usage("--r and --s must be nonzero".into()));
                    }
                    divergence_rs(&a, &b, r, s)?.to_string()
                }
            };
            writeln!(stdout, "{text}").map_err(io_err(Path::new("<stdout>")))
        }
        Command::Geodesic {
            f1,
            f2,
            tau,
            steps,
            out,
            grid,
        } => {
            let (a, b) = load_pair(f1, f2, *grid)?;
            match (tau, steps) {
                (Some(tau), None) => {
                    let point = geodesic_point(&a, &b, *tau)?;
                    let mut body = Vec::new();
                    write_psd(&point, &mut body).expect("in-memory write");
                    write_stdout_or_file(out.as_deref(), stdout, &body)
                }
                (None, Some(m)) => {
                    let dir = out.as_deref().expect("clap requires --out with --steps");
                    let path = geodesic_path(&a, &b, *m)?;
                    write_path(dir, path.taus(), path.points())?;
                    writeln!(stdout, "{}", format_significant(path_length(&path), 12))
                        .map_err(io_err(Path::new("<stdout>")))
                }
                _ => Err(CliError::Usage(
                    "geodesic needs exactly one of --tau or --steps".into(),
                )),
            }
        }
        Command::Matrix { files, out, grid } => {
            let spectra = load_spectra(files, *grid)?;
            let labels = files
                .iter()
                .map(|t| Ok(Operand::parse(t)?.label(t)))
                .collect::<CliResult<Vec<_>>>()?;
            let matrix = match cli.threads {
                Some(threads) => rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build()
                    .map_err(|e| CliError::Domain(e.to_string()))?
                    .install(|| DistanceMatrix::from_spectra(labels, &spectra))?,
                None => DistanceMatrix::from_spectra(labels, &spectra)?,
            };
            let mut body = Vec::new();
            matrix
                .write_csv(&mut body)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            write_stdout_or_file(out.as_deref(), stdout, &body)
        }
        Command::Estimate {
            input,
            method,
            segment,
            overlap,
            window,
            grid,
            out,
        } => {
            let ts = read_time_series_csv(input)?;
            let grid = FrequencyGrid::new(*grid).map_err(|e| CliError::Usage(e.to_string()))?;
            let psd = match method {
                Method::Periodogram => periodogram(&ts, grid)?,
                Method::Welch => welch(&ts, *segment, *overlap, (*window).into(), grid)?,
            };
            match out {
                Some(path) => Ok(write_psd_csv(&psd, path)?),
                None => write_psd(&psd, stdout).map_err(io_err(Path::new("<stdout>"))),
            }
        }
        Command::Classify { file, grid } => {
            let f = load_spectra(std::slice::from_ref(file), *grid)?.remove(0);
            writeln!(stdout, "{}", classify(&f)).map_err(io_err(Path::new("<stdout>")))
        }
        Command::Rho {
            f1,
            f2,
            order,
            oracle,
            grid,
        } => {
            let (a, b) = load_pair(f1, f2, *grid)?;
            let text = match oracle {
                Oracle::Formula => prediction_ratio(&a, &b)?.to_string(),
                Oracle::Levinson => format_significant(rho_empirical(&a, &b, *order)?, 12),
            };
            writeln!(stdout, "{text}").map_err(io_err(Path::new("<stdout>")))
        }
    }
}

/// Writes `point_XXXX.csv` per sample and an index `path.csv` with columns
/// `index,tau,file`.
fn write_path(dir: &Path, taus: &[f64], points: &[Psd]) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut index = String::from("index,tau,file\n");
    for (k, (tau, point)) in taus.iter().zip(points).enumerate() {
        let name = format!("point_{k:04}.csv");
        write_psd_csv(point, dir.join(&name))?;
        index.push_str(&format!("{k},{tau},{name}\n"));
    }
    let index_path = dir.join("path.csv");
    fs::write(&index_path, index).map_err(io_err(&index_path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_operands() {
        assert_eq!(
            Operand::parse("a.csv").unwrap(),
            Operand::File("a.csv".into())
        );
        assert_eq!(
            Operand::parse("@const:2.5").unwrap(),
            Operand::Constant(2.5)
        );
        assert_eq!(Operand::parse("@expcos:-1").unwrap(), Operand::ExpCos(-1.0));
        assert_eq!(
            Operand::parse("@ar:0.5,-0.25:2").unwrap(),
            Operand::Ar {
                coeffs: vec![0.5, -0.25],
                sigma2: 2.0
            }
        );
        assert_eq!(
            Operand::parse("@ar:").unwrap(),
            Operand::Ar {
                coeffs: vec![],
                sigma2: 1.0
            }
        );
        assert!(Operand::parse("@sinc:1").is_err());
        assert!(Operand::parse("@const:x").is_err());
    }

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("psdmetric").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn analytic_distances() {
        let (code, out, _) = run_str(&["dist", "@expcos:1", "@const:1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "0.707106781187\n");
        let (_, out, _) = run_str(&["dist", "@const:1", "@const:2", "--metric", "d"]);
        assert_eq!(out, "1\n");
        let (_, out, _) = run_str(&["rho", "@ar:0.5", "@const:1"]);
        assert_eq!(out, "1.33333333333\n");
        let (_, out, _) = run_str(&[
            "rho", "@ar:0.5", "@const:1", "--oracle", "levinson", "--order", "3",
        ]);
        assert_eq!(out, "1.33333333333\n");
        let (_, out, _) = run_str(&[
            "dist",
            "@expcos:1",
            "@const:1",
            "--metric",
            "rs",
            "--r",
            "1",
            "--s",
            "-1",
        ]);
        assert_eq!(out, "0.471828717014\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        for args in [
            &["dist", "a", "b", "--metric", "rs", "--r", "1", "--s", "1"][..],
            &["dist", "a", "b", "--metric", "rs", "--r", "1"],
            &["dist", "a", "b", "--r", "2", "--s", "1"],
            &["frobnicate"],
            &["dist", "a"],
            &["geodesic", "@const:1", "@const:2"],
            &[
                "geodesic", "@const:1", "@const:2", "--tau", "0.5", "--steps", "3",
            ],
            &["dist", "@foo", "@const:1"],
        ] {
            let (code, _, err) = run_str(args);
            assert_eq!(code, 2, "{args:?}: {err}");
        }
    }

    #[test]
    fn domain_errors_exit_1() {
        let (code, _, err) = run_str(&["dist", "/nonexistent/a.csv", "@const:1"]);
        assert_eq!(code, 1);
        assert!(err.contains("/nonexistent/a.csv"), "{err}");
        let (code, _, _) = run_str(&["geodesic", "@const:1", "@const:2", "--tau", "2"]);
        assert_eq!(code, 1);
        let (code, _, _) = run_str(&["dist", "@ar:1.0", "@const:1"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_str(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("dist"));
    }
}
