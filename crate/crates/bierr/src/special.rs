//! Special functions underlying the distribution CDFs: the error
//! function, the log-gamma function, and the regularized incomplete
//! beta function.
//!
//! Everything here is evaluated to near machine precision so that the
//! CDF/quantile round-trip contracts of [`crate::dist`] hold with
//! comfortable margin.

use crate::error::{Error, Result};

/// 1/sqrt(pi).
const ONE_OVER_SQRT_PI: f64 = 0.5 * std::f64::consts::FRAC_2_SQRT_PI;

/// Lanczos coefficients for `log_gamma`, g = 671/128.
///
/// Godfrey's 14-term set; relative error below 1e-14 over x > 0.
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.000_033_994_649_984_811_888,
    0.000_046_523_628_927_048_575,
    -0.000_098_374_475_304_879_564,
    0.000_158_088_703_224_912_49,
    -0.000_210_264_441_724_104_88,
    0.000_217_439_618_115_212_64,
    -0.000_164_318_106_536_763_89,
    0.000_084_418_223_983_852_743,
    -0.000_026_190_838_401_581_408,
    0.000_003_689_918_265_953_162_5,
];

/// Error function erf(x) = (2/sqrt(pi)) * integral of exp(-t^2) over [0, x].
///
/// Uses the non-alternating scaled Maclaurin series for |x| < 2 and a
/// Lentz continued fraction for the complement beyond, so no regime
/// suffers cancellation. Absolute error is below 1e-15 everywhere.
pub fn erf(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return -erf(-x);
    }
    if x == 0.0 {
        return 0.0;
    }
    if x < 2.0 {
        erf_series(x)
    } else {
        1.0 - erfc_continued_fraction(x)
    }
}

/// Complementary error function erfc(x) = 1 - erf(x).
///
/// Computed directly in the upper tail so that values like erfc(6)
/// retain full relative precision.
pub fn erfc(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x < 0.0 {
        return 2.0 - erfc(-x);
    }
    if x < 2.0 {
        1.0 - erf_series(x)
    } else if x > 27.0 {
        0.0 // below the smallest positive subnormal
    } else {
        erfc_continued_fraction(x)
    }
}

/// erf via the scaled series erf(x) = (2x e^{-x^2}/sqrt(pi)) * sum_n (2x^2)^n / (2n+1)!!.
///
/// All terms are positive, so the sum is cancellation-free.
fn erf_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut odd = 1.0;
    for _ in 0..200 {
        odd += 2.0;
        term *= 2.0 * x2 / odd;
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    std::f64::consts::FRAC_2_SQRT_PI * x * (-x2).exp() * sum
}

/// erfc via the Laplace continued fraction
/// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
/// evaluated with the modified Lentz algorithm. Converges rapidly for x >= 2.
fn erfc_continued_fraction(x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    let mut c = x / TINY;
    let mut d = 1.0 / x;
    let mut h = d;
    for n in 1..200 {
        let a = n as f64 / 2.0;
        // b_n = x; a_n = n/2
        d = x + a * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = x + a / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    (-x * x).exp() * ONE_OVER_SQRT_PI * h
}

/// Natural log of the gamma function for x > 0.
///
/// Lanczos approximation; relative error below 1e-13.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("log_gamma requires x > 0, got {x}")));
    }
    Ok(log_gamma_raw(x))
}

/// `log_gamma` without the domain check; callers guarantee x > 0.
pub(crate) fn log_gamma_raw(x: f64) -> f64 {
    let mut series = 0.999_999_999_999_997_1;
    let mut y = x;
    for coeff in LANCZOS_COEFFS {
        y += 1.0;
        series += coeff / y;
    }
    let t = x + 5.242_187_5;
    (x + 0.5) * t.ln() - t + (2.506_628_274_631_000_5 * series / x).ln()
}

/// Regularized incomplete beta function I_x(a, b).
///
/// Continued fraction (modified Lentz) with the usual symmetry switch
/// at x = (a+1)/(a+b+2); absolute error below 1e-13 for moderate a, b.
pub fn reg_incomplete_beta(a: f64, b: f64, x: f64) -> Result<f64> {
    if a.is_nan() || a <= 0.0 || b.is_nan() || b <= 0.0 {
        return Err(Error::domain(format!(
            "reg_incomplete_beta requires a > 0 and b > 0, got a={a}, b={b}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!(
            "reg_incomplete_beta requires x in [0, 1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    // log of the prefactor x^a (1-x)^b / B(a, b)
    let log_front = log_gamma_raw(a + b) - log_gamma_raw(a) - log_gamma_raw(b)
        + a * x.ln()
        + b * (1.0 - x).ln();
    let front = log_front.exp();
    if x < (a + 1.0) / (a + b + 2.0) {
        Ok(front * beta_continued_fraction(a, b, x)? / a)
    } else {
        Ok(1.0 - front * beta_continued_fraction(b, a, 1.0 - x)? / b)
    }
}

/// Lentz evaluation of the incomplete-beta continued fraction.
fn beta_continued_fraction(a: f64, b: f64, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-15;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;

    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;

    for m in 1..=300 {
        let m = f64::from(m);
        let m2 = 2.0 * m;

        // even step
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        // odd step
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            return Ok(h);
        }
    }
    Err(Error::numeric(format!(
        "incomplete beta continued fraction did not converge for a={a}, b={b}, x={x}"
    )))
}
