//! Small floating-point helpers shared by the checkers.

/// Relative tolerance used wherever an operation reassociates sums.
pub const REL_TOL: f64 = 1e-9;

/// Scale used for relative comparisons; values below 1 are compared absolutely.
#[inline]
pub fn scale(a: f64, b: f64) -> f64 {
    1.0_f64.max(a.abs()).max(b.abs())
}

#[inline]
pub fn approx_eq(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * scale(a, b)
}

/// `a <= b` up to the relative tolerance.
#[inline]
pub fn le_tol(a: f64, b: f64, rel: f64) -> bool {
    a <= b + rel * scale(a, b)
}

/// Float formatted with 17 significant digits, as used in all exports.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "NaN".into()
    } else if x > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

/// `n` points evenly spaced on `[lo, hi]` (inclusive).
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i + 1 == n { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linspace_hits_endpoints() {
        let g = linspace(0.0, 3.0, 4);
        assert_eq!(g, vec![0.0, 1.0, 2.0, 3.0]);
        assert!(linspace(1.0, 2.0, 0).is_empty());
    }

    #[test]
    fn seventeen_significant_digits() {
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        assert_eq!(fmt_f64(-2.0), "-2.0000000000000000e0");
        assert_eq!(fmt_f64(0.1).parse::<f64>().unwrap(), 0.1);
    }

    #[test]
    fn tolerance_is_absolute_near_zero() {
        assert!(approx_eq(0.0, 5e-10, REL_TOL));
        assert!(!approx_eq(0.0, 5e-9, REL_TOL));
        assert!(approx_eq(1e6, 1e6 + 1e-4, REL_TOL));
        assert!(le_tol(1.0 + 1e-12, 1.0, REL_TOL));
    }
}
