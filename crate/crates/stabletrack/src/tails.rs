//! Empirical vs model tail exceedance curves and extreme-event counting.
//!
//! Observations are reduced to sigma multiples z_t = (x_t - mu_t) / sigma_t
//! before counting, either through a tracked parameter path or through one
//! static theta for whole-sample comparisons.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::real::Real;
use crate::stable::{stable_cdf, StableParams};
use crate::track::ParamTrack;

/// Model exceedance probabilities for one symmetric stable shape.
#[derive(Debug, Clone)]
pub struct ModelCurve<T> {
    pub alpha: T,
    /// P(Z < -k) per k.
    pub left: Vec<T>,
    /// P(Z > k) per k.
    pub right: Vec<T>,
}

/// Empirical tail exceedance fractions with model curves to compare against.
#[derive(Debug, Clone)]
pub struct TailCurve<T> {
    /// Thresholds in sigma multiples, strictly increasing.
    pub ks: Vec<T>,
    /// Fraction of normalized observations below -k.
    pub left_emp: Vec<T>,
    /// Fraction of normalized observations above k.
    pub right_emp: Vec<T>,
    pub model_curves: Vec<ModelCurve<T>>,
}

impl<T: Real> TailCurve<T> {
    /// Long format, one probability per row: `k,side,source,probability`,
    /// empirical rows first, then one block per alpha in input order.
    pub fn write_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "k,side,source,probability")?;
        for (j, &k) in self.ks.iter().enumerate() {
            writeln!(w, "{:.17e},left,empirical,{:.17e}", k.as_f64(), self.left_emp[j].as_f64())?;
            writeln!(w, "{:.17e},right,empirical,{:.17e}", k.as_f64(), self.right_emp[j].as_f64())?;
        }
        for curve in &self.model_curves {
            for (j, &k) in self.ks.iter().enumerate() {
                writeln!(
                    w,
                    "{:.17e},left,alpha={},{:.17e}",
                    k.as_f64(),
                    curve.alpha.as_f64(),
                    curve.left[j].as_f64()
                )?;
                writeln!(
                    w,
                    "{:.17e},right,alpha={},{:.17e}",
                    k.as_f64(),
                    curve.alpha.as_f64(),
                    curve.right[j].as_f64()
                )?;
            }
        }
        Ok(())
    }
}

fn check_ks<T: Real>(ks: &[T]) -> Result<()> {
    if ks.is_empty() {
        return Err(Error::Domain("need at least one threshold".into()));
    }
    for &k in ks {
        if !k.is_finite() || !(k > T::zero()) {
            return Err(Error::Domain(format!("thresholds must be > 0, got {:?}", k)));
        }
    }
    for pair in ks.windows(2) {
        if pair[1] <= pair[0] {
            return Err(Error::Domain(format!(
                "thresholds must be strictly increasing, got {:?} then {:?}",
                pair[0], pair[1]
            )));
        }
    }
    Ok(())
}

fn normalized_z<T: Real>(xs: &[T], track: &ParamTrack<T>) -> Result<Vec<T>> {
    if xs.len() != track.start + track.len() {
        return Err(Error::Mismatch(format!(
            "series length {} does not match track start {} + {} entries",
            xs.len(),
            track.start,
            track.len()
        )));
    }
    Ok(xs[track.start..]
        .iter()
        .zip(&track.thetas)
        .map(|(&x, th)| (x - th.mu) / th.sigma)
        .collect())
}

fn curve_from_z<T: Real>(zs: &[T], ks: &[T], alphas: &[T]) -> Result<TailCurve<T>> {
    check_ks(ks)?;
    if zs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    let n = T::of(zs.len() as f64);
    let mut left_emp = Vec::with_capacity(ks.len());
    let mut right_emp = Vec::with_capacity(ks.len());
    for &k in ks {
        let below = zs.iter().filter(|&&z| z < -k).count();
        let above = zs.iter().filter(|&&z| z > k).count();
        left_emp.push(T::of(below as f64) / n);
        right_emp.push(T::of(above as f64) / n);
    }
    let model_curves: Vec<ModelCurve<T>> = alphas
        .par_iter()
        .map(|&alpha| {
            let mut left = Vec::with_capacity(ks.len());
            let mut right = Vec::with_capacity(ks.len());
            for &k in ks {
                left.push(stable_cdf(-k, alpha, T::zero())?);
                right.push(T::one() - stable_cdf(k, alpha, T::zero())?);
            }
            Ok(ModelCurve { alpha, left, right })
        })
        .collect::<Result<_>>()?;
    Ok(TailCurve { ks: ks.to_vec(), left_emp, right_emp, model_curves })
}

/// Exceedance curves under the tracker's one-step-ahead normalization:
/// z_t = (x_t - mu_t) / sigma_t with theta_t built from earlier data only.
pub fn exceedance_curve<T: Real>(
    xs: &[T],
    track: &ParamTrack<T>,
    ks: &[T],
    alphas: &[T],
) -> Result<TailCurve<T>> {
    let zs = normalized_z(xs, track)?;
    curve_from_z(&zs, ks, alphas)
}

/// Whole-sample variant: every observation is normalized by the same theta.
pub fn exceedance_curve_static<T: Real>(
    xs: &[T],
    theta: &StableParams<T>,
    ks: &[T],
    alphas: &[T],
) -> Result<TailCurve<T>> {
    let zs: Vec<T> = xs.iter().map(|&x| (x - theta.mu) / theta.sigma).collect();
    curve_from_z(&zs, ks, alphas)
}

/// Counts of normalized observations beyond -k (left) and k (right).
pub fn count_extreme<T: Real>(
    xs: &[T],
    track: &ParamTrack<T>,
    k: T,
) -> Result<(usize, usize)> {
    if !k.is_finite() || !(k > T::zero()) {
        return Err(Error::Domain(format!("threshold must be > 0, got {:?}", k)));
    }
    let zs = normalized_z(xs, track)?;
    let left = zs.iter().filter(|&&z| z < -k).count();
    let right = zs.iter().filter(|&&z| z > k).count();
    Ok((left, right))
}
