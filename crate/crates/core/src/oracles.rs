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

//! Closed-form reference values used by the unit tests. Everything here is
//! computed from series expansions and never touches the library code paths.

/// Modified Bessel function `I_ν(x)` for integer order via its power series.
pub(crate) fn bessel_i(order: u32, x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = half.powi(order as i32) / (1..=order).map(f64::from).product::<f64>();
    let mut sum = term;
    for k in 1..200u32 {
        term *= half * half / (f64::from(k) * f64::from(k + order));
        sum += term;
        if term < 1e-18 * sum {
            break;
        }
    }
    sum
}

/// `Li₂(x) = Σ x^k / k²` for `|x| < 1`.
pub(crate) fn dilog(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    for k in 1..10_000u32 {
        power *= x;
        let term = power / f64::from(k * k);
        sum += term;
        if term.abs() < 1e-18 {
            break;
        }
    }
    sum
}

#[test]
fn oracle_values() {
    // tabulated: I0(1), I0(2), I1(1)
    assert!((bessel_i(0, 1.0) - 1.266_065_877_752_008_4).abs() < 1e-15);
    assert!((bessel_i(0, 2.0) - 2.279_585_302_336_067_3).abs() < 1e-14);
    assert!((bessel_i(1, 1.0) - 0.565_159_103_992_485).abs() < 1e-15);
    // Li2(1/2) = π²/12 - ln²2 / 2
    let exact = std::f64::consts::PI.powi(2) / 12.0 - std::f64::consts::LN_2.powi(2) / 2.0;
    assert!((dilog(0.5) - exact).abs() < 1e-14);
}
