//! Adaptive Gauss–Kronrod quadrature (7-15 pair).
//!
//! Shared by the Bessel-K integral representation and the direct-quadrature
//! outage evaluation. Plain bisection with a worst-first interval queue;
//! the |K − G| difference is used as a conservative error estimate.

use crate::{Error, Result};

// 15-point Kronrod abscissae on [-1, 1] (positive half) and weights,
// with the embedded 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// One Gauss–Kronrod 7-15 pass over [a, b]; returns (kronrod, |k - g|).
fn gk15<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);

    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;

    for j in 0..7 {
        let x = h * XGK[j];
        let f1 = f(c - x);
        let f2 = f(c + x);
        kronrod += WGK[j] * (f1 + f2);
        // Odd Kronrod indices coincide with the Gauss-7 nodes.
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    (kronrod * h, (kronrod - gauss).abs() * h.abs())
}

/// Integrate `f` over [a, b] to absolute tolerance `abs_tol` (with a relative
/// floor of `rel_tol * |integral|`). Errors if the interval budget is spent
/// before the estimate converges.
pub(crate) fn integrate<F: FnMut(f64) -> f64>(
    f: &mut F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "quadrature limits must be finite, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(0.0);
    }

    const MAX_INTERVALS: usize = 4096;

    let (v, e) = gk15(f, a, b);
    // (lo, hi, value, err); crude worst-first refinement.
    let mut segs: Vec<(f64, f64, f64, f64)> = vec![(a, b, v, e)];
    let mut total_v = v;
    let mut total_e = e;

    while total_e > abs_tol.max(rel_tol * total_v.abs()) {
        if segs.len() >= MAX_INTERVALS {
            return Err(Error::Numerical(format!(
                "quadrature did not converge on [{a}, {b}]: \
                 {} intervals, residual error {total_e:.3e}",
                segs.len()
            )));
        }
        let worst = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, v0, e0) = segs.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // Interval at floating-point resolution; keep its estimate.
            segs.push((lo, hi, v0, 0.0));
            total_e -= e0;
            continue;
        }
        let (v1, e1) = gk15(f, lo, mid);
        let (v2, e2) = gk15(f, mid, hi);
        total_v += v1 + v2 - v0;
        total_e += e1 + e2 - e0;
        segs.push((lo, mid, v1, e1));
        segs.push((mid, hi, v2, e2));
    }

    // Fold in ascending order for run-to-run determinism.
    segs.sort_by(|x, y| x.0.total_cmp(&y.0));
    Ok(segs.iter().map(|s| s.2).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(&mut |x: f64| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12, 1e-14)
            .unwrap();
        // antiderivative x^4/4 - x^2 + x evaluated on [-1, 3]
        let exact = (81.0 / 4.0 - 9.0 + 3.0) - (0.25 - 1.0 - 1.0);
        assert!((v - exact).abs() < 1e-10, "got {v}, want {exact}");
    }

    #[test]
    fn sine_over_period() {
        let v = integrate(&mut f64::sin, 0.0, std::f64::consts::PI, 1e-12, 1e-14).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn sharp_peak_subdivides() {
        // Narrow Gaussian: forces adaptive refinement.
        let v = integrate(
            &mut |x: f64| (-((x - 0.3) / 1e-3).powi(2)).exp(),
            0.0,
            1.0,
            1e-13,
            1e-10,
        )
        .unwrap();
        let exact = 1e-3 * std::f64::consts::PI.sqrt();
        assert!((v - exact).abs() / exact < 1e-8, "got {v}, want {exact}");
    }

    #[test]
    fn reversed_limits_change_sign() {
        let fwd = integrate(&mut f64::sin, 0.0, 1.0, 1e-12, 1e-12).unwrap();
        let rev = integrate(&mut f64::sin, 1.0, 0.0, 1e-12, 1e-12).unwrap();
        assert!((fwd + rev).abs() < 1e-12);
    }

    #[test]
    fn nonfinite_limits_rejected() {
        assert!(integrate(&mut |x: f64| x, 0.0, f64::INFINITY, 1e-9, 1e-9).is_err());
    }
}
