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

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use psdmetric::{
    autocov_from_psd, divergence_ag, geodesic_distance, geodesic_path, levinson, welch,
    DistanceMatrix, FrequencyGrid, Psd, TimeSeries, Window,
};
use psdmetric_bench::{noise, trig_spectrum};
use std::hint::black_box;

fn distances(c: &mut Criterion) {
    let mut group = c.benchmark_group("geodesic_distance");
    for n in [1024, 4096, 16384] {
        let grid = FrequencyGrid::new(n).unwrap();
        let (a, b) = (trig_spectrum(grid, 8, 1), trig_spectrum(grid, 8, 2));
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| geodesic_distance(black_box(&a), black_box(&b)).unwrap())
        });
    }
    group.finish();

    let grid = FrequencyGrid::new(4096).unwrap();
    let (a, b) = (trig_spectrum(grid, 8, 1), trig_spectrum(grid, 8, 2));
    c.bench_function("divergence_ag/4096", |bench| {
        bench.iter(|| divergence_ag(black_box(&a), black_box(&b)).unwrap())
    });
    c.bench_function("geodesic_path/4096x11", |bench| {
        bench.iter(|| geodesic_path(black_box(&a), black_box(&b), 11).unwrap())
    });
}

fn matrix(c: &mut Criterion) {
    let grid = FrequencyGrid::new(4096).unwrap();
    let spectra: Vec<Psd> = (0..32).map(|s| trig_spectrum(grid, 8, s)).collect();
    let labels: Vec<String> = (0..32).map(|s| format!("s{s}")).collect();
    c.bench_function("distance_matrix/32x4096", |bench| {
        bench.iter(|| DistanceMatrix::from_spectra(labels.clone(), black_box(&spectra)).unwrap())
    });
}

fn prediction(c: &mut Criterion) {
    let grid = FrequencyGrid::new(4096).unwrap();
    let f = trig_spectrum(grid, 8, 3);
    let acv = autocov_from_psd(&f, 64).unwrap();
    c.bench_function("levinson/64", |bench| {
        bench.iter(|| levinson(black_box(&acv), 64).unwrap())
    });
}

fn estimation(c: &mut Criterion) {
    let ts = TimeSeries::new(noise(1 << 15, 9)).unwrap();
    let grid = FrequencyGrid::new(1024).unwrap();
    c.bench_function("welch/32768/512", |bench| {
        bench.iter(|| welch(black_box(&ts), 512, 0.5, Window::Hann, grid).unwrap())
    });
}

criterion_group!(benches, distances, matrix, prediction, estimation);
criterion_main!(benches);
