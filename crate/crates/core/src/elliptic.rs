//! Complete elliptic integrals by the arithmetic-geometric mean.
//!
//! Arguments are the modulus `k` (not the parameter `m = k^2`).

use std::f64::consts::FRAC_PI_2;

const MAX_ITER: usize = 64;

/// `K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t)`, `0 <= k < 1`.
pub fn ellipk(k: f64) -> f64 {
    if !(0.0..1.0).contains(&k) {
        return if k == 1.0 { f64::INFINITY } else { f64::NAN };
    }
    let (a, _) = agm(1.0, (1.0 - k * k).sqrt(), |_, _| {});
    FRAC_PI_2 / a
}

/// `E(k) = int_0^{pi/2} sqrt(1 - k^2 sin^2 t) dt`, `0 <= k <= 1`.
pub fn ellipe(k: f64) -> f64 {
    if k == 1.0 {
        return 1.0;
    }
    if !(0.0..1.0).contains(&k) {
        return f64::NAN;
    }
    // E = K (1 - sum_n 2^{n-1} c_n^2), c_0 = k
    let mut sum = 0.5 * k * k;
    let mut weight = 0.5;
    let (a, _) = agm(1.0, (1.0 - k * k).sqrt(), |an, bn| {
        weight *= 2.0;
        let c = 0.5 * (an - bn);
        sum += weight * c * c;
    });
    FRAC_PI_2 / a * (1.0 - sum)
}

/// Runs the AGM iteration, calling `step(a_n, b_n)` before each update.
fn agm(mut a: f64, mut b: f64, mut step: impl FnMut(f64, f64)) -> (f64, f64) {
    for _ in 0..MAX_ITER {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        step(a, b);
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    (a, b)
}
