//! Special functions underlying every closed form: gamma, regularized lower
//! incomplete gamma, power-series multinomial coefficients, log-binomials,
//! and the modified Bessel function of the second kind at integer order.
//!
//! All functions are pure; none hold state.

use crate::{quad, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    let mut a = LANCZOS[0];
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x - 1.0 + i as f64);
    }
    a
}

/// Gamma function Γ(x) for x > 0. For integer n this equals (n-1)!.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Reflection keeps the Lanczos kernel in its accurate range.
        let pi = std::f64::consts::PI;
        return Ok(pi / ((pi * x).sin() * gamma_fn(1.0 - x)?));
    }
    let t = x + LANCZOS_G - 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(x - 0.5) * (-t).exp() * lanczos_sum(x))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        let pi = std::f64::consts::PI;
        return Ok(pi.ln() - (pi * x).sin().ln() - ln_gamma(1.0 - x)?);
    }
    let t = x + LANCZOS_G - 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (x - 0.5) * t.ln() - t + lanczos_sum(x).ln())
}

/// ln n! — thin wrapper used by the big alternating sums.
pub(crate) fn log_factorial(n: u64) -> f64 {
    ln_gamma(n as f64 + 1.0).expect("n + 1 > 0")
}

const MAX_ITER: usize = 600;

/// Regularized lower incomplete gamma P(s, x) = γ(s, x) / Γ(s) ∈ [0, 1].
///
/// Series expansion for x < s + 1, Lentz continued fraction otherwise; for
/// integer s this reproduces the finite series 1 - e^{-x} Σ x^k/k! to near
/// machine precision.
pub fn lower_incomplete_gamma_regularized(s: f64, x: f64) -> Result<f64> {
    if !s.is_finite() || !x.is_finite() || s <= 0.0 || x < 0.0 {
        return Err(Error::Domain(format!(
            "regularized incomplete gamma requires s > 0, x >= 0, got s={s}, x={x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let ln_prefactor = s * x.ln() - x - ln_gamma(s)?;
    if x < s + 1.0 {
        // Ascending series for γ(s, x).
        let mut ap = s;
        let mut term = 1.0 / s;
        let mut sum = term;
        for _ in 0..MAX_ITER {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if term.abs() < sum.abs() * f64::EPSILON {
                return Ok((sum.ln() + ln_prefactor).exp().clamp(0.0, 1.0));
            }
        }
        Err(Error::Numerical(format!(
            "incomplete gamma series failed to converge for s={s}, x={x}"
        )))
    } else {
        // Continued fraction for Γ(s, x), modified Lentz.
        const TINY: f64 = 1e-300;
        let mut b = x + 1.0 - s;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..=MAX_ITER {
            let an = -(i as f64) * (i as f64 - s);
            b += 2.0;
            d = an * d + b;
            if d.abs() < TINY {
                d = TINY;
            }
            c = b + an / c;
            if c.abs() < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if (del - 1.0).abs() < f64::EPSILON {
                let q = (ln_prefactor + h.ln()).exp();
                return Ok((1.0 - q).clamp(0.0, 1.0));
            }
        }
        Err(Error::Numerical(format!(
            "incomplete gamma continued fraction failed to converge for s={s}, x={x}"
        )))
    }
}

/// Base coefficients c_0..c_{g_c-1} of a truncated power series; coefficients
/// beyond index g_c - 1 are treated as exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesCoefficients {
    base: Vec<f64>,
}

impl SeriesCoefficients {
    /// The recurrence divides by c_0, so c_0 must be nonzero.
    pub fn new(base: Vec<f64>) -> Result<Self> {
        if base.is_empty() {
            return Err(Error::Domain("series base must be non-empty".into()));
        }
        if base.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("series base must be finite".into()));
        }
        if base[0] == 0.0 {
            return Err(Error::Domain(
                "series base c_0 must be nonzero (recurrence divides by it)".into(),
            ));
        }
        Ok(Self { base })
    }

    /// First `terms` coefficients of exp(rate·x), i.e. c_ρ = rate^ρ / ρ!.
    ///
    /// This is the base every Nakagami-m expansion uses, with rate = m/Ω
    /// and cutoff g_c equal to the Gamma shape.
    pub fn truncated_exp_series(rate: f64, terms: usize) -> Result<Self> {
        if terms == 0 || !rate.is_finite() {
            return Err(Error::Domain(format!(
                "truncated exp series needs terms >= 1 and finite rate, got terms={terms}, rate={rate}"
            )));
        }
        let mut base = Vec::with_capacity(terms);
        let mut c = 1.0;
        for rho in 0..terms {
            if rho > 0 {
                c *= rate / rho as f64;
            }
            base.push(c);
        }
        Self::new(base)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.base
    }

    /// Cutoff g_c: the number of retained coefficients.
    pub fn cutoff(&self) -> usize {
        self.base.len()
    }
}

/// Coefficients ϑ_0..ϑ_{max_degree} of the normalized series power
/// (Σ_ρ c_ρ x^ρ)^b = c_0^b Σ_a ϑ_a x^a, by the single-pass recurrence
/// ϑ_a = (1/(a c_0)) Σ_{ρ=1}^{a} (ρ(b+1) - a) c_ρ ϑ_{a-ρ}, ϑ_0 = 1.
///
/// `max_degree` must not exceed b·(g_c - 1); higher coefficients are
/// identically zero.
pub fn multinomial_coeffs(
    base: &SeriesCoefficients,
    power: u32,
    max_degree: usize,
) -> Result<Vec<f64>> {
    let gc = base.cutoff();
    if max_degree > power as usize * (gc - 1) {
        return Err(Error::Domain(format!(
            "degree {max_degree} exceeds b(g_c - 1) = {}; those coefficients are identically zero",
            power as usize * (gc - 1)
        )));
    }
    let c = base.coeffs();
    let mut theta = Vec::with_capacity(max_degree + 1);
    theta.push(1.0);
    for a in 1..=max_degree {
        let mut acc = 0.0;
        for rho in 1..=a.min(gc - 1) {
            acc += (rho as f64 * (power as f64 + 1.0) - a as f64) * c[rho] * theta[a - rho];
        }
        theta.push(acc / (a as f64 * c[0]));
    }

    // The recurrence indexing is a known typo hazard; cross-check against
    // direct convolution in debug builds.
    #[cfg(debug_assertions)]
    {
        let direct = convolution_power(c, power, max_degree);
        let norm = c[0].powi(power as i32);
        for a in 0..=max_degree {
            let want = direct[a] / norm;
            let got = theta[a];
            let scale = want.abs().max(got.abs()).max(1e-300);
            debug_assert!(
                (want - got).abs() <= 1e-9 * scale,
                "multinomial recurrence drifted from convolution at degree {a}: {got} vs {want}"
            );
        }
    }

    Ok(theta)
}

/// Plain repeated polynomial convolution, truncated at `max_degree`.
#[cfg(debug_assertions)]
fn convolution_power(c: &[f64], power: u32, max_degree: usize) -> Vec<f64> {
    let mut acc = vec![0.0; max_degree + 1];
    acc[0] = 1.0;
    for _ in 0..power {
        let mut next = vec![0.0; max_degree + 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in c.iter().enumerate() {
                if i + j <= max_degree {
                    next[i + j] += a * b;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Modified Bessel function of the second kind K_ν(x) at integer order.
///
/// Orders 0..=2 are evaluated from the integral representation
/// ∫_0^∞ e^{-x cosh t} cosh(νt) dt; higher orders follow by upward
/// recurrence K_{ν+1} = K_{ν-1} + (2ν/x) K_ν, which is stable for K.
pub fn bessel_k(order: u32, x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "bessel_k requires x > 0 (K diverges at 0), got {x}"
        )));
    }
    if order <= 2 {
        return bessel_k_quadrature(order, x);
    }
    let mut km1 = bessel_k_quadrature(1, x)?;
    let mut k = bessel_k_quadrature(2, x)?;
    for nu in 2..order {
        let next = km1 + (2.0 * nu as f64 / x) * k;
        km1 = k;
        k = next;
    }
    Ok(k)
}

fn bessel_k_quadrature(order: u32, x: f64) -> Result<f64> {
    let nu = order as f64;
    // Truncate once e^{-x cosh t} cosh(νt) is below any representable
    // contribution; cosh grows fast so this loop exits quickly.
    let mut upper = 1.0_f64;
    while x * upper.cosh() - nu * upper < 780.0 && upper < 60.0 {
        upper += 0.5;
    }
    quad::integrate(
        &mut |t: f64| (-x * t.cosh()).exp() * (nu * t).cosh(),
        0.0,
        upper,
        f64::MIN_POSITIVE,
        1e-12,
    )
}

/// ln C(n, k). Exact binomials via u128 arithmetic for n ≤ 128 keep the
/// exponentiated value within a few ulps; larger n falls back to ln Γ.
pub fn log_binomial(n: u64, k: u64) -> Result<f64> {
    if k > n {
        return Err(Error::Domain(format!("binomial requires k <= n, got C({n},{k})")));
    }
    let k = k.min(n - k);
    if k == 0 {
        return Ok(0.0);
    }
    if n <= 128 {
        let mut c: u128 = 1;
        for i in 1..=k as u128 {
            c = c * (n as u128 - k as u128 + i) / i;
        }
        Ok((c as f64).ln())
    } else {
        Ok(ln_gamma(n as f64 + 1.0)? - ln_gamma(k as f64 + 1.0)? - ln_gamma((n - k) as f64 + 1.0)?)
    }
}
