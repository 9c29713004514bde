/// Determinant of a dense square matrix (row-major, `n * n` entries) by LU
/// decomposition with partial pivoting.
pub fn determinant(mut a: Vec<f64>, n: usize) -> f64 {
    assert_eq!(a.len(), n * n);
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x * n + col].abs().total_cmp(&a[y * n + col].abs()))
            .unwrap();
        let p = a[pivot * n + col];
        if p == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        det *= p;
        for row in (col + 1)..n {
            let factor = a[row * n + col] / p;
            if factor == 0.0 {
                continue;
            }
            for k in (col + 1)..n {
                a[row * n + k] -= factor * a[col * n + k];
            }
        }
    }
    det
}

/// Determinant of the `n x n` Toeplitz matrix with entries `entry(i - j)`.
pub fn toeplitz_determinant(n: usize, entry: impl Fn(i64) -> f64) -> f64 {
    let mut a = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            a.push(entry(i as i64 - j as i64));
        }
    }
    determinant(a, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(vec![3.0], 1), 3.0);
        assert_eq!(determinant(vec![1.0, 2.0, 3.0, 4.0], 2), -2.0);
        let d = determinant(vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0], 3);
        assert_eq!(d, 1.0);
        assert_eq!(determinant(vec![1.0, 2.0, 2.0, 4.0], 2), 0.0);
    }

    #[test]
    fn tridiagonal_toeplitz() {
        // det of tridiag(1, 2, 1) of size n is n + 1
        for n in 1..12 {
            let d = toeplitz_determinant(n, |k| match k {
                0 => 2.0,
                1 | -1 => 1.0,
                _ => 0.0,
            });
            assert!((d - (n as f64 + 1.0)).abs() < 1e-10);
        }
    }
}
