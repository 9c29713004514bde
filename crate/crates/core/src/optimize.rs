//! Derivative-free one-dimensional minimization.

const INV_PHI: f64 = 0.618_033_988_749_894_9;
const MAX_ITER: usize = 200;

/// Minimizes `f` on `[a, b]` by golden-section search until the bracket is
/// narrower than `tol`. Returns `(x, f(x))` for the best point evaluated.
/// Near a smooth minimum `x` is only resolved to about `sqrt(eps)` relative,
/// whatever `tol` is, since the compared values stop differing.
pub fn golden_section(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> (f64, f64) {
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..MAX_ITER {
        if (b - a).abs() <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}
