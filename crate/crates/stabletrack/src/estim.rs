//! Whole-sample method-of-moments estimators for (μ, σ, α) and the moment
//! ratio table that inverts r(α) = M_{αp₁}/M_{αp₂}.

use std::io::{BufRead, BufReader, Read, Write};

use crate::error::{Error, Result};
use crate::numerics::MonotoneInverse;
use crate::real::Real;
use crate::stable::moment_constant;

/// Powers for the moment-based estimators. `p_sigma` drives the scale
/// conversion, `p1`/`p2` the α ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentPowers<T> {
    pub p_sigma: T,
    pub p1: T,
    pub p2: T,
}

impl<T: Real> MomentPowers<T> {
    pub fn new(p_sigma: T, p1: T, p2: T) -> Result<Self> {
        if !p_sigma.is_finite() || p_sigma <= T::of(-1.0) || p_sigma >= T::of(2.0)
            || p_sigma == T::zero()
        {
            return Err(Error::Domain(format!(
                "p_sigma must be in (-1, 2) and nonzero, got {:?}",
                p_sigma
            )));
        }
        for (name, p) in [("p1", p1), ("p2", p2)] {
            if !p.is_finite() || p <= T::zero() || p >= T::of(2.0) {
                return Err(Error::Domain(format!("{} must be in (0, 2), got {:?}", name, p)));
            }
        }
        if p1 == p2 {
            return Err(Error::Domain("p1 and p2 must be distinct".into()));
        }
        Ok(MomentPowers { p_sigma, p1, p2 })
    }
}

impl<T: Real> Default for MomentPowers<T> {
    fn default() -> Self {
        MomentPowers { p_sigma: T::of(0.25), p1: T::of(0.5), p2: T::of(0.2) }
    }
}

/// Sample mean. Caveat: for α ≤ 1 this has no LLN and the estimate does not
/// concentrate; it is still returned as the documented approximation.
pub fn estimate_mu<T: Real>(xs: &[T]) -> Result<T> {
    if xs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    let mut s = T::zero();
    for &x in xs {
        s += x;
    }
    Ok(s / T::of(xs.len() as f64))
}

/// (mean |x − μ|^p)^{1/p} / M_{αp}. Requires p in the moment-existence range
/// for this α (delegated to [`moment_constant`]).
pub fn estimate_sigma<T: Real>(xs: &[T], mu: T, alpha: T, p: T) -> Result<T> {
    let m = moment_constant(alpha, p)?;
    if xs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    let mut acc = T::zero();
    let mut any_nonzero = false;
    for &x in xs {
        let r = (x - mu).abs();
        if r > T::zero() {
            any_nonzero = true;
        }
        acc += r.powf(p);
    }
    if !any_nonzero {
        return Err(Error::Degenerate("all residuals are zero".into()));
    }
    let mean = acc / T::of(xs.len() as f64);
    if !mean.is_finite() || !(mean > T::zero()) {
        // e.g. negative p with exact-zero residuals present
        return Err(Error::Degenerate(format!(
            "moment mean is not a positive finite number: {:?}",
            mean
        )));
    }
    Ok(mean.powf(p.recip()) / m)
}

/// Advisory default for p_sigma: 2 at the Gaussian point, (α−1)/2 inside (1, 2).
pub fn optimal_sigma_power<T: Real>(alpha: T) -> Result<T> {
    if !alpha.is_finite() || alpha <= T::one() || alpha > T::of(2.0) {
        return Err(Error::Domain(format!("alpha must be in (1, 2], got {:?}", alpha)));
    }
    if alpha == T::of(2.0) {
        Ok(T::of(2.0))
    } else {
        Ok((alpha - T::one()) / T::of(2.0))
    }
}

/// Lookup table for α from the two-power moment ratio, with linear
/// interpolation and clamping at the grid ends.
#[derive(Debug, Clone)]
pub struct AlphaTable<T> {
    p1: T,
    p2: T,
    grid: Vec<(T, T)>,
    inv: MonotoneInverse<T>,
}

impl<T: Real> AlphaTable<T> {
    fn from_grid(p1: T, p2: T, grid: Vec<(T, T)>) -> Result<Self> {
        let inv = MonotoneInverse::new(&grid).map_err(|_| {
            Error::Table(format!(
                "moment ratio is not strictly monotone over the grid; \
                 power pair (p1={:?}, p2={:?}) is unusable",
                p1, p2
            ))
        })?;
        Ok(AlphaTable { p1, p2, grid, inv })
    }

    pub fn powers(&self) -> (T, T) {
        (self.p1, self.p2)
    }

    pub fn alpha_min(&self) -> T {
        self.grid[0].0
    }

    pub fn alpha_max(&self) -> T {
        self.grid[self.grid.len() - 1].0
    }

    pub fn rows(&self) -> &[(T, T)] {
        &self.grid
    }

    /// α for a given population/empirical ratio, clamped to the grid range.
    pub fn alpha_from_ratio(&self, ratio: T) -> T {
        self.inv.invert(ratio)
    }

    /// α from moment values m1 ≈ E|x−μ|^{p1}, m2 ≈ E|x−μ|^{p2} (both > 0).
    pub fn alpha_from_moments(&self, m1: T, m2: T) -> T {
        let ratio = m1.powf(self.p1.recip()) / m2.powf(self.p2.recip());
        self.inv.invert(ratio)
    }

    /// Two-column CSV (`alpha,ratio`) with the powers in a comment line so the
    /// file round-trips.
    pub fn to_csv<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "# p1={:.17e} p2={:.17e}", self.p1.as_f64(), self.p2.as_f64())?;
        writeln!(w, "alpha,ratio")?;
        for (a, r) in &self.grid {
            writeln!(w, "{:.17e},{:.17e}", a.as_f64(), r.as_f64())?;
        }
        Ok(())
    }

    pub fn from_csv<R: Read>(r: R) -> Result<Self> {
        let reader = BufReader::new(r);
        let mut p1: Option<T> = None;
        let mut p2: Option<T> = None;
        let mut grid = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Table(format!("read failure: {}", e)))?;
            let line = line.trim();
            if line.is_empty() || line == "alpha,ratio" {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("p1=") {
                        p1 = v.parse::<f64>().ok().map(T::of);
                    } else if let Some(v) = tok.strip_prefix("p2=") {
                        p2 = v.parse::<f64>().ok().map(T::of);
                    }
                }
                continue;
            }
            let mut parts = line.split(',');
            let parse = |s: Option<&str>| -> Result<T> {
                s.and_then(|v| v.trim().parse::<f64>().ok())
                    .map(T::of)
                    .ok_or_else(|| Error::Table(format!("line {}: bad row {:?}", lineno + 1, line)))
            };
            let a = parse(parts.next())?;
            let ratio = parse(parts.next())?;
            grid.push((a, ratio));
        }
        let (p1, p2) = match (p1, p2) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::Table("missing `# p1=… p2=…` header".into())),
        };
        Self::from_grid(p1, p2, grid)
    }
}

/// Tabulate r(α) = M_{αp₁}/M_{αp₂} on the inclusive grid and validate that it
/// is strictly monotone (it decreases in α for p1 > p2).
pub fn build_alpha_table<T: Real>(
    p1: T,
    p2: T,
    alpha_min: T,
    alpha_max: T,
    step: T,
) -> Result<AlphaTable<T>> {
    if p1 == p2 {
        return Err(Error::Domain("p1 and p2 must be distinct".into()));
    }
    for (name, p) in [("p1", p1), ("p2", p2)] {
        if !p.is_finite() || p <= T::zero() || p >= alpha_min {
            return Err(Error::Domain(format!(
                "{} must be in (0, alpha_min={:?}), got {:?}",
                name, alpha_min, p
            )));
        }
    }
    if !(alpha_min >= T::of(0.5) && alpha_min < alpha_max && alpha_max <= T::of(2.0)) {
        return Err(Error::Domain(format!(
            "need 0.5 <= alpha_min < alpha_max <= 2, got [{:?}, {:?}]",
            alpha_min, alpha_max
        )));
    }
    if !(step > T::zero()) || !step.is_finite() {
        return Err(Error::Domain(format!("step must be positive, got {:?}", step)));
    }
    let span = alpha_max - alpha_min;
    let n = (span / step + T::of(1e-9)).floor().as_f64() as usize;
    let mut grid = Vec::with_capacity(n + 2);
    for i in 0..=n {
        let a = alpha_min + step * T::of(i as f64);
        grid.push((a, ratio_at(a, p1, p2)?));
    }
    if grid.last().map(|g| g.0 < alpha_max - step * T::of(1e-9)).unwrap_or(true) {
        grid.push((alpha_max, ratio_at(alpha_max, p1, p2)?));
    }
    AlphaTable::from_grid(p1, p2, grid)
}

fn ratio_at<T: Real>(alpha: T, p1: T, p2: T) -> Result<T> {
    Ok(moment_constant(alpha, p1)? / moment_constant(alpha, p2)?)
}

/// α from the empirical two-power moment ratio, clamped to the table range.
pub fn estimate_alpha<T: Real>(xs: &[T], mu: T, table: &AlphaTable<T>) -> Result<T> {
    if xs.is_empty() {
        return Err(Error::TooShort { need: 1, got: 0 });
    }
    let (p1, p2) = table.powers();
    let mut m1 = T::zero();
    let mut m2 = T::zero();
    let mut any_nonzero = false;
    for &x in xs {
        let r = (x - mu).abs();
        if r > T::zero() {
            any_nonzero = true;
        }
        m1 += r.powf(p1);
        m2 += r.powf(p2);
    }
    if !any_nonzero {
        return Err(Error::Degenerate("all residuals are zero".into()));
    }
    let n = T::of(xs.len() as f64);
    Ok(table.alpha_from_moments(m1 / n, m2 / n))
}
