//! Signed log-space series accumulation.
//!
//! The big alternating sums mix binomials, factorials, and powers spanning
//! many orders of magnitude, so each term is assembled as (sign, ln|term|)
//! and the series is reduced with a Kahan-compensated sum of rescaled
//! exponentials. The accumulator also tracks the sum of magnitudes so the
//! caller can detect catastrophic cancellation.

/// Accumulates terms given as (sign, ln|magnitude|).
#[derive(Debug, Clone)]
pub(crate) struct SignedLogSum {
    terms: Vec<(f64, f64)>, // (sign, ln_mag)
}

pub(crate) struct SumOutcome {
    /// The signed sum in linear scale.
    pub value: f64,
    /// Estimated relative error of the sum: eps * Σ|t| / |Σ t|.
    pub relative_residual: f64,
}

impl SignedLogSum {
    pub fn new() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn add(&mut self, sign: f64, ln_mag: f64) {
        if ln_mag == f64::NEG_INFINITY || ln_mag.is_nan() {
            // exp(-inf) = 0 contributes nothing; NaN magnitudes only arise
            // from 0 * inf products the caller has already screened out.
            return;
        }
        self.terms.push((sign, ln_mag));
    }

    /// Reduce the series. Terms are rescaled by the largest magnitude before
    /// exponentiation so intermediate overflow cannot occur.
    pub fn reduce(&self) -> SumOutcome {
        let max_ln = self
            .terms
            .iter()
            .map(|t| t.1)
            .fold(f64::NEG_INFINITY, f64::max);
        if max_ln == f64::NEG_INFINITY {
            return SumOutcome {
                value: 0.0,
                relative_residual: 0.0,
            };
        }

        // Kahan-compensated signed sum plus magnitude total.
        let mut sum = 0.0_f64;
        let mut comp = 0.0_f64;
        let mut mag = 0.0_f64;
        for &(sign, ln_mag) in &self.terms {
            let t = (ln_mag - max_ln).exp();
            mag += t;
            let y = sign * t - comp;
            let s = sum + y;
            comp = (s - sum) - y;
            sum = s;
        }

        let value = sum * max_ln.exp();
        let relative_residual = if sum == 0.0 {
            if mag == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            f64::EPSILON * mag / sum.abs()
        };
        SumOutcome {
            value,
            relative_residual,
        }
    }
}
