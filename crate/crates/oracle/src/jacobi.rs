//! Jacobi polynomials with integer parameters.

/// `a` choose `b` for any integer `a` and `b ≥ 0` (falling-factorial form).
pub fn binomial(a: i64, b: i64) -> f64 {
    if b < 0 {
        return 0.0;
    }
    let mut acc = 1.0;
    for i in 0..b {
        acc *= (a - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// `P_c^{(α,β)}(x)` from the explicit finite sum
/// `Σ_s C(c+α, c−s) C(c+β, s) ((x−1)/2)^s ((x+1)/2)^{c−s}`.
///
/// Works for negative `α` or `β` through the generalized binomial.
pub fn jacobi(alpha: i64, beta: i64, c: u32, x: f64) -> f64 {
    let c = c as i64;
    let lo = (x - 1.0) / 2.0;
    let hi = (x + 1.0) / 2.0;
    (0..=c)
        .map(|s| binomial(c + alpha, c - s) * binomial(c + beta, s) * lo.powi(s as i32) * hi.powi((c - s) as i32))
        .sum()
}

/// Three-term recurrence; only meaningful for `α, β ≥ 0`.
pub fn jacobi_recurrence(alpha: i64, beta: i64, c: u32, x: f64) -> f64 {
    let (a, b) = (alpha as f64, beta as f64);
    let mut prev = 1.0;
    if c == 0 {
        return prev;
    }
    let mut cur = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0;
    for n in 2..=c {
        let n = n as f64;
        let s = 2.0 * n + a + b;
        let lhs = 2.0 * n * (n + a + b) * (s - 2.0);
        let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur
            - 2.0 * (n + a - 1.0) * (n + b - 1.0) * s * prev)
            / lhs;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degree_values() {
        assert_eq!(jacobi(3, -2, 0, 0.3), 1.0);
        assert!((jacobi(0, 0, 1, 0.37) - 0.37).abs() < 1e-15);
        assert!((jacobi(1, 1, 2, 0.0) + 0.75).abs() < 1e-15);
    }

    #[test]
    fn sum_matches_recurrence() {
        for alpha in 0..4 {
            for beta in 0..4 {
                for c in 0..8 {
                    for &x in &[-0.9, -0.2, 0.0, 0.45, 1.0] {
                        let (a, b) = (jacobi(alpha, beta, c, x), jacobi_recurrence(alpha, beta, c, x));
                        assert!((a - b).abs() < 1e-10 * (1.0 + b.abs()), "{alpha} {beta} {c} {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn negative_binomials() {
        assert_eq!(binomial(-1, 3), -1.0);
        assert_eq!(binomial(2, 3), 0.0);
        assert_eq!(binomial(5, 2), 10.0);
    }
}
