//! The moving estimator: per-tick EMA updates of μ and absolute central
//! moments, the derived (σ_t, α_t) trajectory, and one-step-ahead likelihood
//! scoring.

use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::estim::{AlphaTable, MomentPowers};
use crate::real::Real;
use crate::stable::{moment_constant, stable_logpdf_full, LogPdfCache, StableParams, MIN_EVAL_ALPHA};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LearningRates<T> {
    pub eta1: T,
    pub eta2: T,
    pub eta3: T,
}

impl<T: Real> LearningRates<T> {
    pub fn new(eta1: T, eta2: T, eta3: T) -> Result<Self> {
        for (name, eta) in [("eta1", eta1), ("eta2", eta2), ("eta3", eta3)] {
            if !eta.is_finite() || eta <= T::zero() || eta >= T::one() {
                return Err(Error::Domain(format!("{} must be in (0, 1), got {:?}", name, eta)));
            }
        }
        Ok(LearningRates { eta1, eta2, eta3 })
    }
}

impl<T: Real> Default for LearningRates<T> {
    /// η₁ = 0.002, η₂ = 0.03, η₃ = 0.006.
    fn default() -> Self {
        LearningRates { eta1: T::of(0.002), eta2: T::of(0.03), eta3: T::of(0.006) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AlphaMode<T> {
    /// α_t from the moment-ratio table every tick.
    Adaptive,
    /// α pinned; the moment EMAs still run but do not influence θ_t.
    Fixed(T),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MuMode<T> {
    /// μ_t follows the η₁ EMA seeded from the warmup mean.
    Adaptive,
    /// μ_t pinned (the sweep uses Fixed(0): everything centered).
    Fixed(T),
}

#[derive(Debug, Clone)]
pub struct TrackerConfig<T> {
    pub rates: LearningRates<T>,
    pub powers: MomentPowers<T>,
    pub alpha_table: AlphaTable<T>,
    pub beta_fixed: T,
    pub sigma_multiplier: T,
    pub warmup_length: usize,
    pub alpha_mode: AlphaMode<T>,
    pub mu_mode: MuMode<T>,
    pub sigma_floor: T,
}

impl<T: Real> TrackerConfig<T> {
    pub fn new(
        rates: LearningRates<T>,
        powers: MomentPowers<T>,
        alpha_table: AlphaTable<T>,
        beta_fixed: T,
        sigma_multiplier: T,
        warmup_length: usize,
        alpha_mode: AlphaMode<T>,
        sigma_floor: T,
    ) -> Result<Self> {
        let cfg = TrackerConfig {
            rates,
            powers,
            alpha_table,
            beta_fixed,
            sigma_multiplier,
            warmup_length,
            alpha_mode,
            mu_mode: MuMode::Adaptive,
            sigma_floor,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Reference rates and multiplier, symmetric β, adaptive α over `table`.
    pub fn with_defaults(alpha_table: AlphaTable<T>) -> Self {
        let (p1, p2) = alpha_table.powers();
        TrackerConfig {
            rates: LearningRates::default(),
            powers: MomentPowers { p_sigma: T::of(0.25), p1, p2 },
            alpha_table,
            beta_fixed: T::zero(),
            sigma_multiplier: T::of(1.05),
            warmup_length: 300,
            alpha_mode: AlphaMode::Adaptive,
            mu_mode: MuMode::Adaptive,
            sigma_floor: T::of(1e-12),
        }
    }

    pub fn validate(&self) -> Result<()> {
        LearningRates::new(self.rates.eta1, self.rates.eta2, self.rates.eta3)?;
        MomentPowers::new(self.powers.p_sigma, self.powers.p1, self.powers.p2)?;
        let (tp1, tp2) = self.alpha_table.powers();
        if tp1 != self.powers.p1 || tp2 != self.powers.p2 {
            return Err(Error::Mismatch(format!(
                "config powers (p1={:?}, p2={:?}) differ from the table's ({:?}, {:?})",
                self.powers.p1, self.powers.p2, tp1, tp2
            )));
        }
        if !self.beta_fixed.is_finite() || self.beta_fixed.abs() > T::one() {
            return Err(Error::Domain(format!(
                "beta must be in [-1, 1], got {:?}",
                self.beta_fixed
            )));
        }
        if !(self.sigma_multiplier > T::zero()) || !self.sigma_multiplier.is_finite() {
            return Err(Error::Domain("sigma_multiplier must be positive".into()));
        }
        if !(self.sigma_floor > T::zero()) || !self.sigma_floor.is_finite() {
            return Err(Error::Domain("sigma_floor must be positive".into()));
        }
        if self.warmup_length < 2 {
            return Err(Error::Domain(format!(
                "warmup_length must be >= 2, got {}",
                self.warmup_length
            )));
        }
        if let AlphaMode::Fixed(a) = self.alpha_mode {
            if !a.is_finite() || a < T::of(MIN_EVAL_ALPHA) || a > T::of(2.0) {
                return Err(Error::Domain(format!(
                    "fixed alpha must be in [{}, 2], got {:?}",
                    MIN_EVAL_ALPHA, a
                )));
            }
            // a fixed shape must be a valid stable law together with β
            StableParams::standard(a, self.beta_fixed)?;
        }
        if let MuMode::Fixed(c) = self.mu_mode {
            if !c.is_finite() {
                return Err(Error::Domain("fixed mu must be finite".into()));
            }
        }
        Ok(())
    }
}

/// EMA state: location, the three absolute-moment accumulators, and the tick
/// counter (total observations absorbed, warmup included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentState<T> {
    pub mu: T,
    pub m_sigma: T,
    pub m1: T,
    pub m2: T,
    pub t: usize,
}

/// Seed the state from a prefix: μ is the prefix mean (unless pinned), each
/// accumulator the plain average of |x−μ|^p. Residuals are floored at
/// `sigma_floor`, which turns an all-equal prefix into the documented
/// `sigma_floor^p` seeding with no special case.
pub fn warmup<T: Real>(prefix: &[T], config: &TrackerConfig<T>) -> Result<MomentState<T>> {
    config.validate()?;
    if prefix.len() < config.warmup_length {
        return Err(Error::TooShort { need: config.warmup_length, got: prefix.len() });
    }
    if prefix.len() != config.warmup_length {
        return Err(Error::Mismatch(format!(
            "warmup expects exactly warmup_length={} samples, got {}",
            config.warmup_length,
            prefix.len()
        )));
    }
    for (i, x) in prefix.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index: i });
        }
    }
    let n = T::of(prefix.len() as f64);
    let mu = match config.mu_mode {
        MuMode::Adaptive => {
            let mut s = T::zero();
            for &x in prefix {
                s += x;
            }
            s / n
        }
        MuMode::Fixed(c) => c,
    };
    let mut m_sigma = T::zero();
    let mut m1 = T::zero();
    let mut m2 = T::zero();
    for &x in prefix {
        let a = (x - mu).abs().max(config.sigma_floor);
        m_sigma += a.powf(config.powers.p_sigma);
        m1 += a.powf(config.powers.p1);
        m2 += a.powf(config.powers.p2);
    }
    Ok(MomentState {
        mu,
        m_sigma: m_sigma / n,
        m1: m1 / n,
        m2: m2 / n,
        t: prefix.len(),
    })
}

/// Derive θ_t from the current state (before seeing x).
fn derive_theta<T: Real>(state: &MomentState<T>, config: &TrackerConfig<T>) -> Result<StableParams<T>> {
    let alpha_raw = match config.alpha_mode {
        AlphaMode::Adaptive => config.alpha_table.alpha_from_moments(state.m1, state.m2),
        AlphaMode::Fixed(a) => a,
    };
    // β ≠ 0 needs α strictly inside (1, 2); the tracked α legitimately parks
    // at the Gaussian end, so pull it in by a margin instead of failing
    let alpha_t = if config.beta_fixed != T::zero() {
        alpha_raw.max(T::one() + T::of(1e-6)).min(T::of(2.0) - T::of(1e-6))
    } else {
        alpha_raw
    };
    let p = config.powers.p_sigma;
    // moments of order p only exist for p < α; substitute the boundary
    // constant when the tracked α dips below the user's power
    let alpha_m = alpha_t.max(p + T::of(0.01)).min(T::of(2.0));
    let mconst = moment_constant(alpha_m, p)?;
    let sigma_t = config.sigma_multiplier
        * (state.m_sigma.powf(p.recip()) / mconst).max(config.sigma_floor);
    StableParams::new(state.mu, sigma_t, alpha_t, config.beta_fixed)
}

fn update_state<T: Real>(state: &mut MomentState<T>, x: T, config: &TrackerConfig<T>) {
    let a = (x - state.mu).abs().max(config.sigma_floor);
    if let MuMode::Adaptive = config.mu_mode {
        state.mu += config.rates.eta1 * (x - state.mu);
    }
    state.m_sigma += config.rates.eta2 * (a.powf(config.powers.p_sigma) - state.m_sigma);
    state.m1 += config.rates.eta3 * (a.powf(config.powers.p1) - state.m1);
    state.m2 += config.rates.eta3 * (a.powf(config.powers.p2) - state.m2);
    state.t += 1;
}

/// One tick: derive θ_t from the pre-x state, score x out-of-sample, then
/// absorb x (μ first, moment updates against the pre-update μ_t residual).
/// The state is untouched on error.
pub fn step<T: Real>(
    state: &mut MomentState<T>,
    x: T,
    config: &TrackerConfig<T>,
) -> Result<(StableParams<T>, T)> {
    if !x.is_finite() {
        return Err(Error::NonFinite { index: state.t });
    }
    let theta = derive_theta(state, config)?;
    let logpdf = stable_logpdf_full(x, &theta)?;
    update_state(state, x, config);
    Ok((theta, logpdf))
}

/// Per-tick parameters and one-step-ahead scores for `xs[start..]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamTrack<T> {
    /// Index into the input of the first tracked observation (= warmup length).
    pub start: usize,
    pub thetas: Vec<StableParams<T>>,
    pub logpdfs: Vec<T>,
    /// Arithmetic mean of `logpdfs` (nats per observation).
    pub mean_loglik: T,
}

impl<T: Real> ParamTrack<T> {
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    /// CSV with one row per tracked tick; `xs` is the full input series the
    /// track was computed from.
    pub fn write_csv<W: Write>(&self, xs: &[T], w: &mut W) -> Result<()> {
        if xs.len() != self.start + self.thetas.len() {
            return Err(Error::Mismatch(format!(
                "series length {} does not match track start {} + {} entries",
                xs.len(),
                self.start,
                self.thetas.len()
            )));
        }
        let io = |e: std::io::Error| Error::Mismatch(format!("write failure: {}", e));
        writeln!(w, "t,x,mu,sigma,alpha,beta,logpdf").map_err(io)?;
        for (i, (theta, lp)) in self.thetas.iter().zip(&self.logpdfs).enumerate() {
            let t = self.start + i;
            writeln!(
                w,
                "{},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e},{:.17e}",
                t,
                xs[t].as_f64(),
                theta.mu.as_f64(),
                theta.sigma.as_f64(),
                theta.alpha.as_f64(),
                theta.beta.as_f64(),
                lp.as_f64()
            )
            .map_err(io)?;
        }
        Ok(())
    }
}

enum EvalBackend<T> {
    Direct,
    Cached(LogPdfCache<T>),
}

impl<T: Real> EvalBackend<T> {
    fn logpdf(&self, x: T, theta: &StableParams<T>) -> Result<T> {
        match self {
            EvalBackend::Direct => stable_logpdf_full(x, theta),
            EvalBackend::Cached(c) => Ok(c.logpdf_full(x, theta.mu, theta.sigma)),
        }
    }
}

/// Warm up on the prefix, then fold [`step`] over the remainder. Fixed-α runs
/// evaluate the density through an interpolation cache for the one shape.
pub fn track<T: Real>(xs: &[T], config: &TrackerConfig<T>) -> Result<ParamTrack<T>> {
    config.validate()?;
    let w = config.warmup_length;
    if xs.len() <= w {
        return Err(Error::TooShort { need: w + 1, got: xs.len() });
    }
    let backend = match config.alpha_mode {
        AlphaMode::Fixed(a) => EvalBackend::Cached(LogPdfCache::new(a, config.beta_fixed)?),
        AlphaMode::Adaptive => EvalBackend::Direct,
    };
    let mut state = warmup(&xs[..w], config)?;
    let n = xs.len() - w;
    let mut thetas = Vec::with_capacity(n);
    let mut logpdfs = Vec::with_capacity(n);
    let mut sum = T::zero();
    for (i, &x) in xs[w..].iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index: w + i });
        }
        let theta = derive_theta(&state, config)?;
        let lp = backend.logpdf(x, &theta)?;
        update_state(&mut state, x, config);
        sum += lp;
        thetas.push(theta);
        logpdfs.push(lp);
    }
    Ok(ParamTrack { start: w, thetas, logpdfs, mean_loglik: sum / T::of(n as f64) })
}

/// Likelihood curve over pinned α values: each point is a full fixed-α track
/// with μ pinned at zero. Points run in parallel; output order matches input.
pub fn sweep_fixed_alpha<T: Real>(
    xs: &[T],
    alphas: &[T],
    config_base: &TrackerConfig<T>,
) -> Result<Vec<(T, T)>> {
    if alphas.is_empty() {
        return Err(Error::Domain("need at least one alpha".into()));
    }
    alphas
        .par_iter()
        .map(|&a| {
            let mut cfg = config_base.clone();
            cfg.alpha_mode = AlphaMode::Fixed(a);
            cfg.mu_mode = MuMode::Fixed(T::zero());
            cfg.validate()?;
            let tr = track(xs, &cfg)?;
            Ok((a, tr.mean_loglik))
        })
        .collect()
}

/// Mean log-density of `xs` under one constant parameter set (the static
/// comparison point for adaptive runs), evaluated through the shape cache.
pub fn mean_loglik_fixed<T: Real>(xs: &[T], params: &StableParams<T>) -> Result<T> {
    if xs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    let cache = LogPdfCache::new(params.alpha, params.beta)?;
    let mut sum = T::zero();
    for (i, &x) in xs.iter().enumerate() {
        if !x.is_finite() {
            return Err(Error::NonFinite { index: i });
        }
        sum += cache.logpdf_full(x, params.mu, params.sigma);
    }
    Ok(sum / T::of(xs.len() as f64))
}
