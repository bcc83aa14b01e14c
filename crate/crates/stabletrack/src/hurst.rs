//! Scaling-exponent estimation and tail-compensating gaussianization.
//!
//! [`structure_function`] works on the process itself (for return data:
//! the cumulative sum), not on increments. For an i.i.d. return series
//! `x_{t+tau} - x_t` does not depend on tau and every exponent would come out
//! zero; the scaling story only makes sense on the integrated process.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::normal_quantile;
use crate::real::Real;
use crate::stable::stable_cdf;
use crate::track::ParamTrack;

/// 1% critical value of a chi-squared(2) law, the acceptance threshold for
/// [`jarque_bera`]: exactly -2 ln(0.01).
pub const JB_CRIT_1PCT: f64 = 9.210340371976184;

/// Structure-function fit: one scaling exponent per moment order, with the
/// raw `S_q(tau)` values kept around so the fit can be re-examined or dumped.
#[derive(Debug, Clone)]
pub struct ScalingEstimate<T> {
    pub qs: Vec<T>,
    pub taus: Vec<usize>,
    /// Fitted exponent zeta(q); NaN where the row is undefined (see `notes`).
    pub zeta: Vec<T>,
    /// Regression R-squared per q; NaN on undefined rows.
    pub r2: Vec<T>,
    /// `s[i][j]` = mean |x_{t+taus[j]} - x_t|^qs[i].
    pub s: Vec<Vec<T>>,
    /// Per-q diagnostic when the fit could not be made (overflow, zeros).
    pub notes: Vec<Option<String>>,
}

impl<T: Real> ScalingEstimate<T> {
    /// One row per moment order: `q,zeta,r2`. Undefined rows serialize as NaN.
    pub fn write_zeta_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "q,zeta,r2")?;
        for i in 0..self.qs.len() {
            writeln!(
                w,
                "{:.17e},{:.17e},{:.17e}",
                self.qs[i].as_f64(),
                self.zeta[i].as_f64(),
                self.r2[i].as_f64()
            )?;
        }
        Ok(())
    }

    /// Long format, one row per (q, tau) pair: `q,tau,s`.
    pub fn write_structure_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "q,tau,s")?;
        for (i, &q) in self.qs.iter().enumerate() {
            for (j, &tau) in self.taus.iter().enumerate() {
                writeln!(w, "{:.17e},{},{:.17e}", q.as_f64(), tau, self.s[i][j].as_f64())?;
            }
        }
        Ok(())
    }
}

/// Default lag grid: powers of two whose largest member is at most n/10.
pub fn default_tau_grid(n: usize) -> Vec<usize> {
    let cap = (n / 10).max(1);
    let mut taus = Vec::new();
    let mut tau = 1usize;
    while tau <= cap {
        taus.push(tau);
        tau *= 2;
    }
    taus
}

fn check_taus(taus: &[usize]) -> Result<()> {
    if taus.len() < 2 {
        return Err(Error::Domain(format!(
            "need at least two lags, got {}",
            taus.len()
        )));
    }
    for pair in taus.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::Domain(format!(
                "lags must be strictly increasing, got {} then {}",
                pair[0], pair[1]
            )));
        }
    }
    if taus[0] == 0 {
        return Err(Error::Domain("lags must be >= 1".into()));
    }
    Ok(())
}

/// Scaling exponents of a process: S_q(tau) = mean_t |x_{t+tau} - x_t|^q is
/// computed on the lag grid and ln S_q is regressed on ln tau; the slope is
/// zeta(q). Rows where S overflows or degenerates to zero are reported as NaN
/// with a diagnostic in `notes` rather than failing the whole call.
pub fn structure_function<T: Real>(
    series: &[T],
    qs: &[T],
    taus: &[usize],
) -> Result<ScalingEstimate<T>> {
    check_taus(taus)?;
    if qs.is_empty() {
        return Err(Error::Domain("need at least one moment order".into()));
    }
    for &q in qs {
        if !q.is_finite() || !(q > T::zero()) {
            return Err(Error::Domain(format!("moment orders must be > 0, got {:?}", q)));
        }
    }
    let max_tau = *taus.last().unwrap();
    if series.len() <= 4 * max_tau {
        return Err(Error::TooShort { need: 4 * max_tau + 1, got: series.len() });
    }
    if let Some(i) = series.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }

    let log_taus: Vec<f64> = taus.iter().map(|&t| (t as f64).ln()).collect();
    let rows: Vec<(Vec<T>, T, T, Option<String>)> = qs
        .par_iter()
        .map(|&q| {
            let s: Vec<T> = taus
                .iter()
                .map(|&tau| {
                    let mut acc = T::zero();
                    for t in 0..series.len() - tau {
                        acc += (series[t + tau] - series[t]).abs().powf(q);
                    }
                    acc / T::of((series.len() - tau) as f64)
                })
                .collect();
            if let Some(j) = s.iter().position(|v| !v.is_finite()) {
                let note = format!(
                    "structure value overflowed at tau={} (q={:?} too large for this data)",
                    taus[j], q
                );
                return (s, T::nan(), T::nan(), Some(note));
            }
            if let Some(j) = s.iter().position(|v| *v <= T::zero()) {
                let note = format!("structure value is zero at tau={} (constant series?)", taus[j]);
                return (s, T::nan(), T::nan(), Some(note));
            }
            let ys: Vec<f64> = s.iter().map(|v| v.as_f64().ln()).collect();
            let (slope, r2) = ols_slope_r2(&log_taus, &ys);
            (s, T::of(slope), T::of(r2), None)
        })
        .collect();

    let mut est = ScalingEstimate {
        qs: qs.to_vec(),
        taus: taus.to_vec(),
        zeta: Vec::with_capacity(qs.len()),
        r2: Vec::with_capacity(qs.len()),
        s: Vec::with_capacity(qs.len()),
        notes: Vec::with_capacity(qs.len()),
    };
    for (s, z, r2, note) in rows {
        est.s.push(s);
        est.zeta.push(z);
        est.r2.push(r2);
        est.notes.push(note);
    }
    Ok(est)
}

fn ols_slope_r2(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - xbar) * (x - xbar);
        sxy += (x - xbar) * (y - ybar);
        syy += (y - ybar) * (y - ybar);
    }
    let slope = sxy / sxx;
    if syy <= 0.0 {
        // All responses identical: the constant fit is exact.
        return (slope, 1.0);
    }
    let ss_res = (syy - slope * sxy).max(0.0);
    (slope, (1.0 - ss_res / syy).clamp(0.0, 1.0))
}

/// Per-tick Hurst trajectory implied by the tracked stability index:
/// H_t = 1/alpha_t. Ticks where the q-th absolute moment does not exist
/// (q >= alpha_t) come back as NaN markers.
pub fn adaptive_hurst<T: Real>(track: &ParamTrack<T>, q: T) -> Result<Vec<T>> {
    if !q.is_finite() || !(q > T::zero()) {
        return Err(Error::Domain(format!("moment order must be > 0, got {:?}", q)));
    }
    Ok(track
        .thetas
        .iter()
        .map(|th| if q >= th.alpha { T::nan() } else { th.alpha.recip() })
        .collect())
}

/// Probability integral transform through the per-tick fitted law followed by
/// the standard normal quantile. `xs` is the full series the track came from;
/// the result covers `xs[track.start..]` and has length `track.len()`.
///
/// The CDF value is clamped to [1e-15, 1 - 1e-15] before inversion so a tail
/// observation maps to a large finite normal score instead of infinity.
pub fn gaussianize<T: Real>(xs: &[T], track: &ParamTrack<T>) -> Result<Vec<T>> {
    if xs.len() != track.start + track.len() {
        return Err(Error::Mismatch(format!(
            "series length {} does not match track start {} + {} entries",
            xs.len(),
            track.start,
            track.len()
        )));
    }
    let lo = T::of(1e-15);
    let hi = T::one() - T::of(1e-15);
    xs[track.start..]
        .par_iter()
        .zip(track.thetas.par_iter())
        .map(|(&x, th)| {
            let z = (x - th.mu) / th.sigma;
            let u = stable_cdf(z, th.alpha, th.beta)?;
            Ok(normal_quantile(u.max(lo).min(hi)))
        })
        .collect()
}

/// Jarque-Bera normality statistic n (skew^2/6 + (kurt - 3)^2/24); small
/// values mean the sample looks Gaussian. Compare against [`JB_CRIT_1PCT`].
pub fn jarque_bera<T: Real>(xs: &[T]) -> Result<T> {
    if xs.len() < 8 {
        return Err(Error::TooShort { need: 8, got: xs.len() });
    }
    if let Some(i) = xs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }
    let n = T::of(xs.len() as f64);
    let mean = xs.iter().copied().sum::<T>() / n;
    let mut m2 = T::zero();
    let mut m3 = T::zero();
    let mut m4 = T::zero();
    for &x in xs {
        let d = x - mean;
        let d2 = d * d;
        m2 += d2;
        m3 += d2 * d;
        m4 += d2 * d2;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    if m2 <= T::zero() {
        return Err(Error::Degenerate("zero variance".into()));
    }
    let skew = m3 / m2.powf(T::of(1.5));
    let kurt = m4 / (m2 * m2);
    let three = T::of(3.0);
    Ok(n * (skew * skew / T::of(6.0) + (kurt - three) * (kurt - three) / T::of(24.0)))
}
