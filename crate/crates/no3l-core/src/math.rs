//! Scalar numerics shared by the census and the heuristic chain: float
//! shims that work without `std`, a Lanczos log-gamma, log-binomials, and a
//! bisection root finder.

/// Natural logarithm.
#[inline]
pub fn ln(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.ln()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::log(x)
    }
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.sqrt()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::sqrt(x)
    }
}

#[inline]
pub fn cbrt(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.cbrt()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::cbrt(x)
    }
}

/// Round half away from zero, like `f64::round`.
#[inline]
pub fn round(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.round()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::round(x)
    }
}

#[inline]
pub fn abs(x: f64) -> f64 {
    #[cfg(feature = "std")]
    {
        x.abs()
    }
    #[cfg(not(feature = "std"))]
    {
        libm::fabs(x)
    }
}

/// Binary GCD. `gcd(0, b) = b` and `gcd(a, 0) = a`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    if a == 0 {
        return b;
    }
    if b == 0 {
        return a;
    }
    let shift = (a | b).trailing_zeros();
    a >>= a.trailing_zeros();
    loop {
        b >>= b.trailing_zeros();
        if a > b {
            core::mem::swap(&mut a, &mut b);
        }
        b -= a;
        if b == 0 {
            return a << shift;
        }
    }
}

/// ln Γ(x) for x > 0 via the 6-term Lanczos approximation (g = 5).
///
/// Absolute error on ln Γ is below ~2·10⁻¹⁰ over the whole domain, which is
/// far tighter than any tolerance in this crate; no Stirling truncation is
/// involved.
pub fn ln_gamma(x: f64) -> f64 {
    debug_assert!(x > 0.0, "ln_gamma needs a positive argument, got {x}");
    const COEFFICIENTS: [f64; 6] = [
        76.18009172947146,
        -86.50532032941677,
        24.01409824083091,
        -1.231739572450155,
        0.1208650973866179e-2,
        -0.5395239384953e-5,
    ];
    let tmp = x + 5.5;
    let log = (x + 0.5) * ln(tmp) - tmp;
    let mut series = 1.000000000190015;
    let mut denom = x;
    for coeff in &COEFFICIENTS {
        denom += 1.0;
        series += coeff / denom;
    }
    // 2.5066... = sqrt(2π)
    log + ln(2.5066282746310005 * series / x)
}

/// ln C(n, k) via log-gamma. Returns negative infinity for k > n.
pub fn ln_choose(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    if k == 0 || k == n {
        return 0.0;
    }
    ln_gamma(n as f64 + 1.0) - ln_gamma(k as f64 + 1.0) - ln_gamma((n - k) as f64 + 1.0)
}

/// Bisection root of `f` on `[lo, hi]`, assuming a sign change. Runs until
/// the bracket collapses to f64 resolution, so the result is accurate to a
/// few ulps of the root.
pub fn bisect_root(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    debug_assert!(lo < hi);
    let f_lo = f(lo);
    debug_assert!(
        f_lo == 0.0 || f_lo.signum() != f(hi).signum(),
        "bisect_root bracket does not straddle a sign change"
    );
    // ~90 halvings take any finite bracket below 1 ulp.
    for _ in 0..128 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid).signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_small_table() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(17, 5), 1);
        assert_eq!(gcd(4, 6), 2);
        assert_eq!(gcd(1 << 40, 3 << 40), 1 << 40);
    }

    #[test]
    fn ln_gamma_matches_integer_factorials() {
        // ln Γ(k+1) = ln k! = Σ ln j, an independent summation route.
        for k in [1u64, 2, 5, 10, 20, 100, 1000, 20000] {
            let direct: f64 = (2..=k).map(|j| (j as f64).ln()).sum();
            let lanczos = ln_gamma(k as f64 + 1.0);
            let tol = 1e-10 * direct.abs().max(1.0);
            assert!(
                (lanczos - direct).abs() <= tol,
                "lnΓ({k}+1): lanczos {lanczos} vs direct {direct}"
            );
        }
    }

    #[test]
    fn ln_gamma_half() {
        // Γ(1/2) = √π.
        let expected = core::f64::consts::PI.sqrt().ln();
        assert!((ln_gamma(0.5) - expected).abs() < 1e-10);
    }

    #[test]
    fn ln_choose_against_log_sum() {
        // ln C(N, m) = Σ_{j=1..m} ln((N-m+j)/j), exact up to f64 rounding.
        for &(n, m) in &[(9u64, 3u64), (100, 30), (10_000, 200), (100_000_000, 20_000)] {
            let direct: f64 = (1..=m)
                .map(|j| ((n - m + j) as f64).ln() - (j as f64).ln())
                .sum();
            let via_gamma = ln_choose(n, m);
            assert!(
                (via_gamma - direct).abs() <= 1e-9 * direct.abs(),
                "ln C({n},{m}): gamma {via_gamma} vs sum {direct}"
            );
        }
    }

    #[test]
    fn ln_choose_edges() {
        assert_eq!(ln_choose(5, 0), 0.0);
        assert_eq!(ln_choose(5, 5), 0.0);
        assert_eq!(ln_choose(4, 5), f64::NEG_INFINITY);
        // C(9,3) = 84 exactly.
        assert!((ln_choose(9, 3) - (84f64).ln()).abs() < 1e-12);
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let root = bisect_root(|x| x * x - 2.0, 0.0, 2.0);
        assert!((root - core::f64::consts::SQRT_2).abs() < 1e-14);
    }
}
