//! Exact distributions of sample extremes under exchangeable Archimax
//! dependence.
//!
//! For an exchangeable sample whose dependence is Archimax with generator
//! `phi` and tail dependence `ell`, the largest of `k` components has cdf
//!
//! ```text
//! F_(k:k)(x) = phi(k * psi(F(x)) * A_k),   A_k = ell(1/k, ..., 1/k),
//! ```
//!
//! the second largest of `n` has cdf `n F_(n-1:n-1) - (n-1) F_(n:n)` in that
//! diagonal notation, and minima obey the mirrored formulas with the margin
//! survival function in place of its cdf. Densities come from the analytic
//! chain rule, not differencing.

use crate::copula::ArchimaxCopula;
use crate::error::{Error, Result};
use crate::tail_dependence::diagonal_a_unchecked;

/// Interior clip applied to margin probabilities before the generator
/// inverse: avoids the indeterminate `phi'(0) * psi'(1)` and `psi(0)`
/// overflow at the support edges while perturbing exact results by less
/// than any stated tolerance.
const P_CLIP: f64 = 1e-12;

/// A baseline life distribution (survival function on `[0, inf)`).
#[derive(Debug, Clone, PartialEq)]
pub enum Baseline {
    /// `S(x) = exp(-x)`.
    Exponential,
    /// `S(x) = exp(-x^shape)`, `shape > 0`.
    Weibull { shape: f64 },
    /// Piecewise-linear survival table. Has no density, so anything needing
    /// a derivative of a tabulated baseline reports an error.
    Tabulated { xs: Vec<f64>, survival: Vec<f64> },
}

impl Baseline {
    pub fn weibull(shape: f64) -> Result<Self> {
        if !shape.is_finite() || shape <= 0.0 {
            return Err(Error::Parameter(format!("Weibull shape must be > 0, got {shape}")));
        }
        Ok(Baseline::Weibull { shape })
    }

    /// Build a tabulated baseline. `xs` must be strictly increasing and
    /// non-negative, `survival` non-increasing inside `[0, 1]` and starting
    /// at 1 (to 1e-9).
    pub fn tabulated(xs: Vec<f64>, survival: Vec<f64>) -> Result<Self> {
        if xs.len() < 2 || xs.len() != survival.len() {
            return Err(Error::Parameter(format!(
                "need two or more aligned nodes, got {} xs and {} survival values",
                xs.len(),
                survival.len()
            )));
        }
        for w in xs.windows(2) {
            if !w[0].is_finite() || !w[1].is_finite() || w[1] <= w[0] {
                return Err(Error::Parameter(format!(
                    "abscissae must be finite and strictly increasing, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        if xs[0] < 0.0 {
            return Err(Error::Parameter(format!("abscissae must be >= 0, got {}", xs[0])));
        }
        if (survival[0] - 1.0).abs() > 1e-9 {
            return Err(Error::Parameter(format!(
                "survival must start at 1, got {}",
                survival[0]
            )));
        }
        for w in survival.windows(2) {
            if !(0.0..=1.0).contains(&w[1]) || w[1] > w[0] + 1e-12 {
                return Err(Error::Parameter(format!(
                    "survival values must be non-increasing within [0, 1], got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Baseline::Tabulated { xs, survival })
    }

    /// Survival `S(x)`, total on all of the reals (1 left of the support).
    pub fn survival(&self, x: f64) -> f64 {
        match self {
            Baseline::Exponential => {
                if x <= 0.0 {
                    1.0
                } else {
                    (-x).exp()
                }
            }
            Baseline::Weibull { shape } => {
                if x <= 0.0 {
                    1.0
                } else {
                    (-x.powf(*shape)).exp()
                }
            }
            Baseline::Tabulated { xs, survival } => {
                if x <= xs[0] {
                    return 1.0;
                }
                if x >= *xs.last().unwrap() {
                    return *survival.last().unwrap();
                }
                let i = xs.partition_point(|&v| v <= x);
                let (x0, x1) = (xs[i - 1], xs[i]);
                let (s0, s1) = (survival[i - 1], survival[i]);
                s0 + (s1 - s0) * (x - x0) / (x1 - x0)
            }
        }
    }

    /// Density `-S'(x)`, strict: errors left of the support and for
    /// tabulated baselines.
    pub fn density(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("density argument must be finite, got {x}")));
        }
        match self {
            Baseline::Exponential => {
                if x < 0.0 {
                    Err(Error::Domain(format!("exponential support is [0, inf), got {x}")))
                } else {
                    Ok((-x).exp())
                }
            }
            Baseline::Weibull { shape } => {
                if x < 0.0 {
                    Err(Error::Domain(format!("Weibull support is [0, inf), got {x}")))
                } else {
                    Ok(shape * x.powf(shape - 1.0) * (-x.powf(*shape)).exp())
                }
            }
            Baseline::Tabulated { .. } => Err(Error::Incompatible(
                "tabulated baselines carry no density".into(),
            )),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Baseline::Exponential => "exponential",
            Baseline::Weibull { .. } => "weibull",
            Baseline::Tabulated { .. } => "tabulated",
        }
    }
}

/// A univariate margin for the components of an exchangeable sample.
#[derive(Debug, Clone, PartialEq)]
pub enum Margin {
    /// Standard uniform on `[0, 1]`.
    Uniform01,
    /// Exponential with the given rate.
    Exponential { rate: f64 },
    /// Proportional-hazards tilt of a baseline: `F(x) = 1 - S(x)^exponent`.
    PhrPower { baseline: Baseline, exponent: f64 },
}

impl Margin {
    pub fn uniform01() -> Self {
        Margin::Uniform01
    }

    pub fn exponential(rate: f64) -> Result<Self> {
        if !rate.is_finite() || rate <= 0.0 {
            return Err(Error::Parameter(format!("rate must be > 0, got {rate}")));
        }
        Ok(Margin::Exponential { rate })
    }

    pub fn phr_power(baseline: Baseline, exponent: f64) -> Result<Self> {
        if !exponent.is_finite() || exponent <= 0.0 {
            return Err(Error::Parameter(format!(
                "proportional-hazards exponent must be > 0, got {exponent}"
            )));
        }
        Ok(Margin::PhrPower { baseline, exponent })
    }

    /// Total cdf (clamped to 0/1 outside the support).
    pub fn cdf(&self, x: f64) -> f64 {
        match self {
            Margin::Uniform01 => x.clamp(0.0, 1.0),
            Margin::Exponential { rate } => {
                if x <= 0.0 {
                    0.0
                } else {
                    -(-rate * x).exp_m1()
                }
            }
            Margin::PhrPower { baseline, exponent } => {
                let s = baseline.survival(x);
                if s == 0.0 {
                    1.0
                } else {
                    -(exponent * s.ln()).exp_m1()
                }
            }
        }
    }

    /// Total survival function `1 - F(x)`, computed without cancellation.
    pub fn survival(&self, x: f64) -> f64 {
        match self {
            Margin::Uniform01 => (1.0 - x).clamp(0.0, 1.0),
            Margin::Exponential { rate } => {
                if x <= 0.0 {
                    1.0
                } else {
                    (-rate * x).exp()
                }
            }
            Margin::PhrPower { baseline, exponent } => {
                let s = baseline.survival(x);
                if s == 0.0 {
                    0.0
                } else {
                    (exponent * s.ln()).exp()
                }
            }
        }
    }

    /// Density, strict: errors outside the support (and for margins built on
    /// a density-free baseline).
    pub fn pdf(&self, x: f64) -> Result<f64> {
        match self {
            Margin::Uniform01 => {
                if (0.0..=1.0).contains(&x) {
                    Ok(1.0)
                } else {
                    Err(Error::Domain(format!("uniform support is [0, 1], got {x}")))
                }
            }
            Margin::Exponential { rate } => {
                if x < 0.0 {
                    Err(Error::Domain(format!("exponential support is [0, inf), got {x}")))
                } else {
                    Ok(rate * (-rate * x).exp())
                }
            }
            Margin::PhrPower { baseline, exponent } => {
                let b = baseline.density(x)?;
                let s = baseline.survival(x);
                if s == 0.0 {
                    return Ok(0.0);
                }
                Ok(exponent * ((exponent - 1.0) * s.ln()).exp() * b)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Margin::Uniform01 => "uniform01",
            Margin::Exponential { .. } => "exponential",
            Margin::PhrPower { .. } => "phr-power",
        }
    }
}

/// Which extreme of the sample a density refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderStat {
    /// Largest of `k` components.
    Max(usize),
    /// Second largest of `n` components.
    SecondMax(usize),
    /// Smallest of `k` components.
    Min(usize),
    /// Second smallest of `n` components.
    SecondMin(usize),
}

/// An exchangeable sample of nominal size `n` with a common margin and an
/// Archimax dependence structure.
///
/// The order arguments of the distribution methods are explicit (not tied to
/// `n`) because the ordering theorems compare extremes across sample sizes
/// `n - 1`, `n` and `n + 1` of the same model.
#[derive(Debug, Clone, PartialEq)]
pub struct ExchangeableSample {
    margin: Margin,
    copula: ArchimaxCopula,
    n: usize,
}

impl ExchangeableSample {
    pub fn new(margin: Margin, copula: ArchimaxCopula, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
        }
        if copula.dimension() != n {
            log::warn!(
                "copula dimension {} differs from nominal sample size {n}; the diagonal \
                 formulas extend the tail shape to every order they need",
                copula.dimension()
            );
        }
        Ok(ExchangeableSample { margin, copula, n })
    }

    #[inline]
    pub fn margin(&self) -> &Margin {
        &self.margin
    }

    #[inline]
    pub fn copula(&self) -> &ArchimaxCopula {
        &self.copula
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `phi(k * psi(u) * A_k)` — the diagonal evaluation underlying every
    /// extreme. `u = 0` short-circuits to 0, otherwise `u` is lifted to at
    /// least `1e-12` so the strict inverse stays finite.
    fn diag_term(&self, k: usize, u: f64) -> Result<f64> {
        if u == 0.0 {
            return Ok(0.0);
        }
        let g = self.copula.generator();
        let a = diagonal_a_unchecked(self.copula.tail().kind(), k);
        g.phi(k as f64 * g.psi(u.max(P_CLIP))? * a)
    }

    /// Derivative of [`Self::diag_term`] in `u`, with `u` clipped into
    /// `[1e-12, 1 - 1e-12]`.
    fn diag_term_d1(&self, k: usize, u: f64) -> Result<f64> {
        let u = u.clamp(P_CLIP, 1.0 - P_CLIP);
        let g = self.copula.generator();
        let a = diagonal_a_unchecked(self.copula.tail().kind(), k);
        let ka = k as f64 * a;
        Ok(g.phi_d1(ka * g.psi(u)?)? * ka * g.psi_d1(u)?)
    }

    /// Cdf of the largest of `k >= 2` components at `x`.
    pub fn cdf_max(&self, k: usize, x: f64) -> Result<f64> {
        if k < 2 {
            return Err(Error::Parameter(format!("maximum order must be >= 2, got {k}")));
        }
        self.diag_term(k, self.margin.cdf(x))
    }

    /// Cdf of the second largest of `n >= 2` components at `x`.
    pub fn cdf_second_max(&self, n: usize, x: f64) -> Result<f64> {
        Ok(self.cdf_second_max_with_clamp(n, x)?.0)
    }

    /// Like [`Self::cdf_second_max`], also returning how far the raw
    /// combination fell outside `[0, 1]` before clamping (0 when clean).
    /// The combination `n F_(n-1) - (n-1) F_(n)` is exact in real
    /// arithmetic; any clamp is rounding noise and is logged at debug level.
    pub fn cdf_second_max_with_clamp(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        if n < 2 {
            return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
        }
        let u = self.margin.cdf(x);
        let raw = n as f64 * self.diag_term(n - 1, u)? - (n - 1) as f64 * self.diag_term(n, u)?;
        Ok(clamp01_reporting(raw, "second-largest cdf"))
    }

    /// Survival function of the smallest of `k >= 2` components at `x`.
    pub fn sf_min(&self, k: usize, x: f64) -> Result<f64> {
        if k < 2 {
            return Err(Error::Parameter(format!("minimum order must be >= 2, got {k}")));
        }
        self.diag_term(k, self.margin.survival(x))
    }

    /// Cdf of the smallest of `k >= 2` components at `x`.
    pub fn cdf_min(&self, k: usize, x: f64) -> Result<f64> {
        Ok(1.0 - self.sf_min(k, x)?)
    }

    /// Survival function of the second smallest of `n >= 2` components.
    pub fn sf_second_min(&self, n: usize, x: f64) -> Result<f64> {
        Ok(self.sf_second_min_with_clamp(n, x)?.0)
    }

    /// Like [`Self::sf_second_min`], also returning the clamp magnitude.
    pub fn sf_second_min_with_clamp(&self, n: usize, x: f64) -> Result<(f64, f64)> {
        if n < 2 {
            return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
        }
        let s = self.margin.survival(x);
        let raw = n as f64 * self.diag_term(n - 1, s)? - (n - 1) as f64 * self.diag_term(n, s)?;
        Ok(clamp01_reporting(raw, "second-smallest survival"))
    }

    /// Cdf of the second smallest of `n >= 2` components at `x`.
    pub fn cdf_second_min(&self, n: usize, x: f64) -> Result<f64> {
        Ok(1.0 - self.sf_second_min(n, x)?)
    }

    /// Density of the requested extreme at `x`, by the analytic chain rule.
    /// Requires a margin with a density; results are floored at 0 (the
    /// closed forms are non-negative up to rounding).
    pub fn pdf_order_stat(&self, stat: OrderStat, x: f64) -> Result<f64> {
        let f = self.margin.pdf(x)?;
        let v = match stat {
            OrderStat::Max(k) => {
                if k < 2 {
                    return Err(Error::Parameter(format!("maximum order must be >= 2, got {k}")));
                }
                self.diag_term_d1(k, self.margin.cdf(x))? * f
            }
            OrderStat::SecondMax(n) => {
                if n < 2 {
                    return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
                }
                let u = self.margin.cdf(x);
                (n as f64 * self.diag_term_d1(n - 1, u)?
                    - (n - 1) as f64 * self.diag_term_d1(n, u)?)
                    * f
            }
            // the chain rule for the minima runs through the survival
            // argument, whose own -f cancels the leading minus of -dS/dx,
            // so the weights match the maxima exactly
            OrderStat::Min(k) => {
                if k < 2 {
                    return Err(Error::Parameter(format!("minimum order must be >= 2, got {k}")));
                }
                self.diag_term_d1(k, self.margin.survival(x))? * f
            }
            OrderStat::SecondMin(n) => {
                if n < 2 {
                    return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
                }
                let s = self.margin.survival(x);
                (n as f64 * self.diag_term_d1(n - 1, s)?
                    - (n - 1) as f64 * self.diag_term_d1(n, s)?)
                    * f
            }
        };
        Ok(v.max(0.0))
    }
}

/// Clamp to `[0, 1]`, reporting the clamped amount (logged at debug level).
fn clamp01_reporting(raw: f64, what: &str) -> (f64, f64) {
    let clamped = raw.clamp(0.0, 1.0);
    let overshoot = (raw - clamped).abs();
    if overshoot > 0.0 {
        log::debug!("{what} clamped by {overshoot:.3e} (raw {raw})");
    }
    (clamped, overshoot)
}
