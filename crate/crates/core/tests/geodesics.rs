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

//! Geodesics are logarithmic intervals and the distance is intrinsic.

mod common;

use common::{grid, random_trig_spectrum, rng};
use proptest::prelude::*;
use psdmetric::{geodesic_distance, geodesic_path, geodesic_point, path_length, Psd};

fn dg(a: &Psd, b: &Psd) -> f64 {
    geodesic_distance(a, b).unwrap().value().unwrap()
}

#[test]
fn distance_is_proportional_along_the_path() {
    let g = grid(1024);
    let mut r = rng(21);
    for _ in 0..20 {
        let f0 = random_trig_spectrum(g, &mut r, 8);
        let f1 = random_trig_spectrum(g, &mut r, 8);
        let total = dg(&f0, &f1);
        for k in 1..=9 {
            let tau = k as f64 / 10.0;
            let ft = geodesic_point(&f0, &f1, tau).unwrap();
            assert!((dg(&f0, &ft) - tau * total).abs() <= 1e-10);
            assert!((dg(&ft, &f1) - (1.0 - tau) * total).abs() <= 1e-10);
        }
    }
}

#[test]
fn sampled_paths_have_the_endpoint_length() {
    let g = grid(1024);
    let mut r = rng(22);
    for _ in 0..20 {
        let f0 = random_trig_spectrum(g, &mut r, 8);
        let f1 = random_trig_spectrum(g, &mut r, 8);
        let total = dg(&f0, &f1);
        for m in [2, 3, 11, 101] {
            let path = geodesic_path(&f0, &f1, m).unwrap();
            assert_eq!(path.len(), m);
            assert_eq!(path.start(), &f0);
            assert_eq!(path.end(), &f1);
            assert!((path_length(&path) - total).abs() <= 1e-10, "m={m}");
        }
    }
}

#[test]
fn a_detour_is_longer() {
    let g = grid(256);
    let f0 = Psd::from_fn(g, |t| t.cos().exp()).unwrap();
    let f1 = Psd::constant(g, 1.0).unwrap();
    let off = Psd::from_ar(&[0.7], 1.0, g).unwrap();
    let detour = dg(&f0, &off) + dg(&off, &f1);
    assert!(detour > dg(&f0, &f1) + 0.1);
}

fn positive(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(1e-3f64..1e3, len)
}

proptest! {
    #[test]
    fn scaling_the_end_points_scales_the_path(
        a in positive(24), b in positive(24),
        k0 in 1e-3f64..1e3, k1 in 1e-3f64..1e3, tau in 0.0f64..=1.0,
    ) {
        let g = grid(24);
        let (f0, f1) = (Psd::from_samples(g, a).unwrap(), Psd::from_samples(g, b).unwrap());
        let base = geodesic_point(&f0, &f1, tau).unwrap();
        let moved = geodesic_point(&f0.scaled(k0).unwrap(), &f1.scaled(k1).unwrap(), tau).unwrap();
        let factor = k0.powf(1.0 - tau) * k1.powf(tau);
        for (x, y) in base.values().iter().zip(moved.values()) {
            prop_assert!((x * factor - y).abs() <= 1e-12 * y);
        }
    }

    #[test]
    fn reversing_the_path_reverses_the_parameter(a in positive(24), b in positive(24), tau in 0.0f64..=1.0) {
        let g = grid(24);
        let (f0, f1) = (Psd::from_samples(g, a).unwrap(), Psd::from_samples(g, b).unwrap());
        let fwd = geodesic_point(&f0, &f1, tau).unwrap();
        let back = geodesic_point(&f1, &f0, 1.0 - tau).unwrap();
        for (x, y) in fwd.values().iter().zip(back.values()) {
            prop_assert!((x - y).abs() <= 1e-12 * x);
        }
    }
}
