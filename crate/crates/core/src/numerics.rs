//! Special functions and distribution tails used by the HMM likelihood and the
//! hypothesis tests. Everything is plain `f64`; accuracy targets are roughly
//! 1e-13 relative over the argument ranges the pipeline touches.

use crate::error::{Error, Result};

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Degrees of freedom of an F distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FTestDistribution {
    df1: u32,
    df2: u32,
}

impl FTestDistribution {
    pub fn new(df1: u32, df2: u32) -> Result<Self> {
        if df1 == 0 || df2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "F distribution needs positive degrees of freedom, got ({df1}, {df2})"
            )));
        }
        Ok(Self { df1, df2 })
    }

    pub fn df1(&self) -> u32 {
        self.df1
    }

    pub fn df2(&self) -> u32 {
        self.df2
    }
}

/// Natural log of the Gamma function for `x > 0`.
///
/// Shifts the argument above 10 with the recurrence, then sums the Stirling
/// series through the x^-15 term.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "log_gamma",
            value: x,
        });
    }
    let mut z = x;
    let mut shift = 1.0;
    while z < 10.0 {
        shift *= z;
        z += 1.0;
    }
    Ok(stirling_log_gamma(z) - shift.ln())
}

fn stirling_log_gamma(z: f64) -> f64 {
    const COEFFS: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    let inv = 1.0 / z;
    let inv2 = inv * inv;
    let mut series = 0.0;
    for c in COEFFS.iter().rev() {
        series = series * inv2 + c;
    }
    // (z - 1/2) ln z - z written to avoid one rounding of the large terms
    (z - 0.5) * (z.ln() - 1.0) - 0.5 + HALF_LN_2PI + series * inv
}

/// Digamma function ψ(x) = d/dx ln Γ(x) for `x > 0`.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain {
            function: "digamma",
            value: x,
        });
    }
    let mut z = x;
    let mut acc = 0.0;
    while z < 10.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Bernoulli asymptotic series: B_2n / (2n z^2n)
    const COEFFS: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 120.0,
        1.0 / 252.0,
        -1.0 / 240.0,
        1.0 / 132.0,
        -691.0 / 32_760.0,
        1.0 / 12.0,
    ];
    let inv2 = 1.0 / (z * z);
    let mut series = 0.0;
    for c in COEFFS.iter().rev() {
        series = series * inv2 + c;
    }
    Ok(acc + z.ln() - 0.5 / z - series * inv2)
}

/// Regularized incomplete beta function I_x(a, b).
///
/// Uses the Lentz continued fraction on whichever side of the mean converges
/// fastest, with the symmetry I_x(a,b) = 1 - I_{1-x}(b,a) for the other side.
pub fn regularized_incomplete_beta(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain {
            function: "regularized_incomplete_beta(a)",
            value: a,
        });
    }
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::Domain {
            function: "regularized_incomplete_beta(b)",
            value: b,
        });
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            function: "regularized_incomplete_beta(x)",
            value: x,
        });
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x == 1.0 {
        return Ok(1.0);
    }
    let ln_front = log_gamma(a + b)? - log_gamma(a)? - log_gamma(b)? + a * x.ln() + b * (-x).ln_1p();
    let front = ln_front.exp();
    let value = if x < (a + 1.0) / (a + b + 2.0) {
        front * beta_continued_fraction(a, b, x)? / a
    } else {
        1.0 - front * beta_continued_fraction(b, a, 1.0 - x)? / b
    };
    Ok(value.clamp(0.0, 1.0))
}

fn beta_continued_fraction(a: f64, b: f64, x: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let max_iter = 1000 + (a.max(b).sqrt() * 20.0) as usize;

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
    for m in 1..=max_iter {
        let m = m as f64;
        let m2 = 2.0 * m;
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
    Err(Error::Estimation(format!(
        "incomplete beta continued fraction did not converge (a={a}, b={b}, x={x})"
    )))
}

/// Upper tail P(F >= f) of the F distribution.
pub fn f_sf(f: f64, dist: FTestDistribution) -> Result<f64> {
    if !(f >= 0.0) {
        return Err(Error::Domain {
            function: "f_sf",
            value: f,
        });
    }
    if f.is_infinite() {
        return Ok(0.0);
    }
    let df1 = f64::from(dist.df1);
    let df2 = f64::from(dist.df2);
    let z = df2 / (df2 + df1 * f);
    regularized_incomplete_beta(df2 / 2.0, df1 / 2.0, z)
}

/// Exact binomial upper tail P(X >= k) for X ~ Binomial(n, p).
pub fn binomial_tail(k: u64, n: u64, p: f64) -> Result<f64> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "binomial tail needs k <= n, got k={k}, n={n}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain {
            function: "binomial_tail",
            value: p,
        });
    }
    if k == 0 {
        return Ok(1.0);
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    if p == 1.0 {
        return Ok(1.0);
    }
    let total: f64 = (k..=n).map(|j| binomial_pmf(j, n, p)).sum();
    Ok(total.min(1.0))
}

/// Point mass P(X = j) for X ~ Binomial(n, p).
pub fn binomial_pmf(j: u64, n: u64, p: f64) -> f64 {
    if j > n {
        return 0.0;
    }
    if n <= 60 {
        // exact-integer coefficient while it fits the mantissa
        let j_small = j.min(n - j);
        let mut coef = 1.0f64;
        for i in 0..j_small {
            coef = coef * (n - i) as f64 / (i + 1) as f64;
        }
        return coef * p.powi(j as i32) * (1.0 - p).powi((n - j) as i32);
    }
    let n_f = n as f64;
    let j_f = j as f64;
    let ln_coef = log_gamma(n_f + 1.0).unwrap_or(0.0)
        - log_gamma(j_f + 1.0).unwrap_or(0.0)
        - log_gamma(n_f - j_f + 1.0).unwrap_or(0.0);
    (ln_coef + j_f * p.ln() + (n_f - j_f) * (-p).ln_1p()).exp()
}
