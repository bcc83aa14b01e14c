//! Comparison models: the best single sigma at a fixed shape, and GARCH(1,1).
//!
//! Both score observations one step ahead after a 300-tick conditioning
//! prefix ([`GARCH_PREFIX`], matching the default tracker warmup) so their
//! mean log-likelihoods are comparable with tracked runs.

use crate::error::{Error, Result};
use crate::real::Real;
use crate::stable::{sample_stable, LogPdfCache, StableParams};

/// Conditioning prefix for GARCH evaluation; scores start at this index.
pub const GARCH_PREFIX: usize = 300;

const LN_2PI: f64 = 1.8378770664093453;

/// GARCH(1,1) coefficients: v_t = omega + a x_{t-1}^2 + b v_{t-1}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GarchParams<T> {
    pub omega: T,
    pub a: T,
    pub b: T,
}

impl<T: Real> GarchParams<T> {
    pub fn new(omega: T, a: T, b: T) -> Result<Self> {
        let p = GarchParams { omega, a, b };
        p.check()?;
        Ok(p)
    }

    pub fn check(&self) -> Result<()> {
        if !self.omega.is_finite() || !(self.omega > T::zero()) {
            return Err(Error::Domain(format!("omega must be > 0, got {:?}", self.omega)));
        }
        if !self.a.is_finite() || self.a < T::zero() {
            return Err(Error::Domain(format!("a must be >= 0, got {:?}", self.a)));
        }
        if !self.b.is_finite() || self.b < T::zero() {
            return Err(Error::Domain(format!("b must be >= 0, got {:?}", self.b)));
        }
        if !(self.a + self.b < T::one()) {
            return Err(Error::Domain(format!(
                "a + b must be < 1 for stationarity, got {:?}",
                self.a + self.b
            )));
        }
        Ok(())
    }
}

/// Result of [`garch11_fit`]. `converged` is false when the search hit its
/// iteration cap; the best point found is still returned.
#[derive(Debug, Clone)]
pub struct GarchFit<T> {
    pub params: GarchParams<T>,
    pub mean_loglik: T,
    pub converged: bool,
}

/// Best single scale at fixed (alpha, beta) with the center pinned at 0:
/// maximizes the mean log-density over sigma by golden-section search on
/// ln sigma, to relative tolerance 1e-6. Returns (sigma, mean log-likelihood).
pub fn fit_static_sigma_mle<T: Real>(xs: &[T], alpha: T, beta: T) -> Result<(T, T)> {
    if xs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    if let Some(i) = xs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }
    let cache = LogPdfCache::new(alpha, beta)?;

    // Median |x| as the bracket pivot: scale-free and outlier-proof even for
    // the heaviest tails the crate evaluates.
    let mut abs: Vec<T> = xs.iter().map(|x| x.abs()).collect();
    abs.sort_by(|p, q| p.partial_cmp(q).unwrap());
    let mut pivot = abs[abs.len() / 2];
    if pivot <= T::zero() {
        pivot = abs.iter().copied().sum::<T>() / T::of(abs.len() as f64);
    }
    if pivot <= T::zero() {
        return Err(Error::Degenerate("all observations are zero".into()));
    }

    let n = T::of(xs.len() as f64);
    let mean_ll = |ln_sigma: f64| -> T {
        let sigma = T::of(ln_sigma.exp());
        xs.iter().map(|&x| cache.logpdf_full(x, T::zero(), sigma)).sum::<T>() / n
    };

    let span = 1024f64.ln();
    let mut a = pivot.as_f64().ln() - span;
    let mut b = pivot.as_f64().ln() + span;
    let invphi = 0.618_033_988_749_894_9;
    let mut c = b - invphi * (b - a);
    let mut d = a + invphi * (b - a);
    let mut fc = mean_ll(c);
    let mut fd = mean_ll(d);
    while b - a > 1e-6 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = mean_ll(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = mean_ll(d);
        }
    }
    let ln_sigma = 0.5 * (a + b);
    Ok((T::of(ln_sigma.exp()), mean_ll(ln_sigma)))
}

fn prefix_variance(xs: &[f64]) -> f64 {
    let n = GARCH_PREFIX as f64;
    let mean = xs[..GARCH_PREFIX].iter().sum::<f64>() / n;
    xs[..GARCH_PREFIX].iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0)
}

fn garch_mean_loglik_f64(xs: &[f64], omega: f64, a: f64, b: f64) -> f64 {
    let mut v = prefix_variance(xs);
    let mut acc = 0.0;
    for t in GARCH_PREFIX..xs.len() {
        let prev = xs[t - 1];
        v = omega + a * prev * prev + b * v;
        acc += -0.5 * (LN_2PI + v.ln() + xs[t] * xs[t] / v);
    }
    acc / (xs.len() - GARCH_PREFIX) as f64
}

/// Gaussian one-step-ahead mean log-likelihood under a GARCH(1,1) recursion.
/// The variance state is seeded with the sample variance of the 300-point
/// prefix; scores cover everything after it.
pub fn garch11_loglik<T: Real>(xs: &[T], params: &GarchParams<T>) -> Result<T> {
    params.check()?;
    if xs.len() <= GARCH_PREFIX {
        return Err(Error::TooShort { need: GARCH_PREFIX + 1, got: xs.len() });
    }
    if let Some(i) = xs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }
    let buf: Vec<f64> = xs.iter().map(|x| x.as_f64()).collect();
    Ok(T::of(garch_mean_loglik_f64(
        &buf,
        params.omega.as_f64(),
        params.a.as_f64(),
        params.b.as_f64(),
    )))
}

fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

fn logit(p: f64) -> f64 {
    (p / (1.0 - p)).ln()
}

// Unconstrained coordinates -> valid (omega, a, b): log scale for omega,
// logistic for the persistence a+b and the split a/(a+b).
fn unpack(th: &[f64; 3]) -> (f64, f64, f64) {
    let omega = th[0].exp().max(1e-300);
    let s = sigmoid(th[1]).min(1.0 - 1e-6);
    let frac = sigmoid(th[2]);
    (omega, s * frac, s * (1.0 - frac))
}

fn nelder_mead<F: Fn(&[f64; 3]) -> f64>(
    f: F,
    x0: [f64; 3],
    step: f64,
    max_iter: usize,
) -> ([f64; 3], f64, bool) {
    let mut simplex: Vec<([f64; 3], f64)> = Vec::with_capacity(4);
    simplex.push((x0, f(&x0)));
    for i in 0..3 {
        let mut v = x0;
        v[i] += step;
        simplex.push((v, f(&v)));
    }
    let mut converged = false;
    for _ in 0..max_iter {
        simplex.sort_by(|p, q| p.1.partial_cmp(&q.1).unwrap());
        let best = simplex[0].1;
        let worst = simplex[3].1;
        let spread = (0..3)
            .map(|i| {
                simplex.iter().map(|(v, _)| v[i]).fold(f64::NEG_INFINITY, f64::max)
                    - simplex.iter().map(|(v, _)| v[i]).fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        if (worst - best).abs() < 1e-10 * (1.0 + best.abs()) && spread < 1e-7 {
            converged = true;
            break;
        }

        let mut centroid = [0.0; 3];
        for (v, _) in &simplex[..3] {
            for i in 0..3 {
                centroid[i] += v[i] / 3.0;
            }
        }
        let at = |coef: f64| {
            let mut v = [0.0; 3];
            for i in 0..3 {
                v[i] = centroid[i] + coef * (centroid[i] - simplex[3].0[i]);
            }
            let fv = f(&v);
            (v, fv)
        };

        let (xr, fr) = at(1.0);
        if fr < simplex[0].1 {
            let (xe, fe) = at(2.0);
            simplex[3] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[2].1 {
            simplex[3] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[3].1 { at(0.5) } else { at(-0.5) };
            if fc < simplex[3].1.min(fr) {
                simplex[3] = (xc, fc);
            } else {
                // Shrink toward the best vertex.
                let x_best = simplex[0].0;
                for k in 1..4 {
                    for i in 0..3 {
                        simplex[k].0[i] = x_best[i] + 0.5 * (simplex[k].0[i] - x_best[i]);
                    }
                    simplex[k].1 = f(&simplex[k].0);
                }
            }
        }
    }
    simplex.sort_by(|p, q| p.1.partial_cmp(&q.1).unwrap());
    (simplex[0].0, simplex[0].1, converged)
}

/// Fits GARCH(1,1) by maximizing [`garch11_loglik`] with Nelder-Mead in
/// transformed coordinates (so every visited point is stationary), starting
/// from (omega, a, b) = (0.1 var, 0.05, 0.90). Deterministic. The search runs
/// in f64 whatever the scalar type.
pub fn garch11_fit<T: Real>(xs: &[T]) -> Result<GarchFit<T>> {
    if xs.len() < 1000 {
        return Err(Error::TooShort { need: 1000, got: xs.len() });
    }
    if let Some(i) = xs.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { index: i });
    }
    let buf: Vec<f64> = xs.iter().map(|x| x.as_f64()).collect();
    let n = buf.len() as f64;
    let mean = buf.iter().sum::<f64>() / n;
    let var = buf.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    if var <= 0.0 {
        return Err(Error::Degenerate("zero variance".into()));
    }

    let objective = |th: &[f64; 3]| -> f64 {
        let (omega, a, b) = unpack(th);
        if !omega.is_finite() {
            return 1e300;
        }
        let ll = garch_mean_loglik_f64(&buf, omega, a, b);
        if ll.is_finite() {
            -ll
        } else {
            1e300
        }
    };

    let x0 = [(0.1 * var).ln(), logit(0.95), logit(0.05 / 0.95)];
    let (x_best, f_best, converged) = nelder_mead(objective, x0, 0.25, 800);
    let (omega, a, b) = unpack(&x_best);
    Ok(GarchFit {
        params: GarchParams::new(T::of(omega), T::of(a), T::of(b))?,
        mean_loglik: T::of(-f_best),
        converged,
    })
}

/// Simulates a Gaussian GARCH(1,1) path of length `n`: the variance state
/// starts at the stationary value and 500 burn-in draws are discarded.
/// Deterministic in `seed`; the recursion runs in f64 whatever the scalar type.
pub fn garch11_simulate<T: Real>(params: &GarchParams<T>, n: usize, seed: u64) -> Result<Vec<T>> {
    params.check()?;
    if n == 0 {
        return Err(Error::Domain("need n >= 1 samples".into()));
    }
    let omega = params.omega.as_f64();
    let a = params.a.as_f64();
    let b = params.b.as_f64();
    let burn = 500;
    // N(0,1) innovations: the alpha=2 stable law with sigma = 1/sqrt(2).
    let unit = StableParams::new(0.0, std::f64::consts::FRAC_1_SQRT_2, 2.0, 0.0)?;
    let zs = sample_stable::<f64>(&unit, burn + n, seed)?;
    let mut v = omega / (1.0 - a - b);
    let mut out = Vec::with_capacity(n);
    for (i, &z) in zs.iter().enumerate() {
        let x = v.sqrt() * z;
        if i >= burn {
            out.push(T::of(x));
        }
        v = omega + a * x * x + b * v;
    }
    Ok(out)
}
