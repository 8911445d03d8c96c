//! Small statistical helpers shared by the simulator and its tests.

/// Kolmogorov–Smirnov statistic of a sorted sample against a CDF.
pub fn ks_statistic<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        let hi = (i + 1) as f64 / n - f;
        let lo = f - i as f64 / n;
        d = d.max(hi).max(lo);
    }
    d
}

/// Normal-approximation binomial half-width `z·sqrt(p̂(1-p̂)/n)`.
pub fn binomial_half_width(p_hat: f64, n: u64, z: f64) -> f64 {
    if n == 0 {
        return f64::INFINITY;
    }
    z * (p_hat * (1.0 - p_hat) / n as f64).sqrt()
}

/// Mean and standard error of a sample.
pub fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    if xs.is_empty() {
        return (f64::NAN, f64::INFINITY);
    }
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, f64::INFINITY);
    }
    let var = xs.iter().map(|&x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ks_of_perfect_grid_is_small() {
        let n = 1000;
        let xs: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let d = ks_statistic(&xs, |x| x);
        assert!(d <= 0.5 / n as f64 + 1e-12, "d = {d}");
    }

    #[test]
    fn half_width_shrinks_with_n() {
        let w1 = binomial_half_width(0.5, 100, 3.0);
        let w2 = binomial_half_width(0.5, 10_000, 3.0);
        assert!(w2 < w1);
        assert!((w2 - 0.015).abs() < 1e-12);
    }

    #[test]
    fn mean_and_stderr_basic() {
        let (m, se) = mean_and_stderr(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m, 2.5);
        assert!(se > 0.0);
    }
}
