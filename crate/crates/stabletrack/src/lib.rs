//! Adaptive fitting of alpha-stable distributions to nonstationary series.
//!
//! The crate is generic over the scalar type through the [`Real`] trait
//! (implemented for `f32` and `f64`); the accuracy figures quoted in the docs
//! assume `f64`. Concrete aliases like [`StableParams64`] are exported at the
//! root.

pub mod baselines;
pub mod error;
pub mod estim;
pub mod hurst;
pub mod numerics;
pub mod real;
pub mod stable;
pub mod tails;
pub mod track;

pub use error::{Error, Result};
pub use real::Real;

pub use baselines::{
    fit_static_sigma_mle, garch11_fit, garch11_loglik, garch11_simulate, GarchFit, GarchParams,
    GARCH_PREFIX,
};
pub use estim::{
    build_alpha_table, estimate_alpha, estimate_mu, estimate_sigma, optimal_sigma_power,
    AlphaTable, MomentPowers,
};
pub use hurst::{
    adaptive_hurst, default_tau_grid, gaussianize, jarque_bera, structure_function,
    ScalingEstimate, JB_CRIT_1PCT,
};
pub use numerics::{MonotoneInverse, QuadratureSpec};
pub use stable::{
    glued_pdf, moment_constant, rho0, sample_stable, stable_cdf, stable_logpdf_full,
    stable_logpdf_standard, stable_pdf, stable_pdf_quadrature, stable_tail_pdf,
    tail_coefficients, z_switch, GluedAsymmetry, LogPdfCache, StableParams,
};
pub use tails::{
    count_extreme, exceedance_curve, exceedance_curve_static, ModelCurve, TailCurve,
};
pub use track::{
    mean_loglik_fixed, step, sweep_fixed_alpha, track, warmup, AlphaMode, LearningRates,
    MomentState, MuMode, ParamTrack, TrackerConfig,
};

pub type StableParams64 = StableParams<f64>;
pub type StableParams32 = StableParams<f32>;
pub type GluedAsymmetry64 = GluedAsymmetry<f64>;
pub type GluedAsymmetry32 = GluedAsymmetry<f32>;
pub type QuadratureSpec64 = QuadratureSpec<f64>;
pub type QuadratureSpec32 = QuadratureSpec<f32>;
pub type MomentPowers64 = MomentPowers<f64>;
pub type MomentPowers32 = MomentPowers<f32>;
pub type AlphaTable64 = AlphaTable<f64>;
pub type AlphaTable32 = AlphaTable<f32>;
pub type TrackerConfig64 = TrackerConfig<f64>;
pub type TrackerConfig32 = TrackerConfig<f32>;
pub type MomentState64 = MomentState<f64>;
pub type MomentState32 = MomentState<f32>;
pub type ParamTrack64 = ParamTrack<f64>;
pub type ParamTrack32 = ParamTrack<f32>;
pub type ScalingEstimate64 = ScalingEstimate<f64>;
pub type ScalingEstimate32 = ScalingEstimate<f32>;
pub type GarchParams64 = GarchParams<f64>;
pub type GarchParams32 = GarchParams<f32>;
pub type GarchFit64 = GarchFit<f64>;
pub type GarchFit32 = GarchFit<f32>;
pub type TailCurve64 = TailCurve<f64>;
pub type TailCurve32 = TailCurve<f32>;
