//! Archimedean generators.
//!
//! A generator is a continuous, non-increasing, convex map `phi` from
//! `[0, inf)` onto `(0, 1]` with `phi(0) = 1` and `phi(t) -> 0`, together with
//! its inverse `psi` on `(0, 1]`. All shipped families are strict
//! (`psi(0) = +inf`) and completely monotone on their declared parameter
//! ranges, so they are admissible in any dimension; `dimension_hint` records
//! the order a caller intends to use and is validated numerically by
//! [`Generator::check_n_monotone`], never enforced at evaluation time.
//!
//! The module also provides the Williamson integral transform
//! `x -> integral over (x, inf) of (1 - x/r)^(n-1) dF(r)`, which builds an
//! n-monotone generator from a radial law `F`.

use crate::error::{Error, Result};
use crate::report::{CheckReport, Grid, Witness};
use std::ops::Neg;

/// Generator family together with its parameter.
///
/// * `Gumbel` (theta >= 1): `phi(t) = exp(-t^(1/theta))`
/// * `Clayton` (alpha > 0): `phi(t) = (1 + alpha t)^(-1/alpha)`
/// * `Joe` (theta >= 1): `phi(t) = 1 - (1 - e^(-t))^(1/theta)`
/// * `ParetoType` (alpha > 0): `phi(t) = (1 + t)^(-alpha)`
/// * `UnitExponential`: `phi(t) = e^(-t)` (the extreme-value case)
///
/// Every family is completely monotone on its range (Joe included, for
/// theta >= 1), hence n-monotone for every n.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Gumbel { theta: f64 },
    Clayton { alpha: f64 },
    Joe { theta: f64 },
    ParetoType { alpha: f64 },
    UnitExponential,
}

/// A validated Archimedean generator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generator {
    family: Family,
    dimension_hint: usize,
}

impl Generator {
    /// Validate the parameter eagerly and build the generator.
    pub fn new(family: Family) -> Result<Self> {
        match family {
            Family::Gumbel { theta } | Family::Joe { theta } => {
                if !theta.is_finite() || theta < 1.0 {
                    return Err(Error::Parameter(format!(
                        "{} requires theta >= 1, got {theta}",
                        family_name(&family)
                    )));
                }
            }
            Family::Clayton { alpha } | Family::ParetoType { alpha } => {
                if !alpha.is_finite() || alpha <= 0.0 {
                    return Err(Error::Parameter(format!(
                        "{} requires alpha > 0, got {alpha}",
                        family_name(&family)
                    )));
                }
            }
            Family::UnitExponential => {}
        }
        Ok(Generator { family, dimension_hint: 2 })
    }

    pub fn gumbel(theta: f64) -> Result<Self> {
        Self::new(Family::Gumbel { theta })
    }

    pub fn clayton(alpha: f64) -> Result<Self> {
        Self::new(Family::Clayton { alpha })
    }

    pub fn joe(theta: f64) -> Result<Self> {
        Self::new(Family::Joe { theta })
    }

    pub fn pareto_type(alpha: f64) -> Result<Self> {
        Self::new(Family::ParetoType { alpha })
    }

    pub fn unit_exponential() -> Self {
        Generator { family: Family::UnitExponential, dimension_hint: 2 }
    }

    /// Record the monotonicity order the caller intends to rely on (n >= 2).
    pub fn with_dimension_hint(mut self, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parameter(format!("dimension hint must be >= 2, got {n}")));
        }
        self.dimension_hint = n;
        Ok(self)
    }

    #[inline]
    pub fn family(&self) -> Family {
        self.family
    }

    #[inline]
    pub fn family_name(&self) -> &'static str {
        family_name(&self.family)
    }

    /// The family parameter, if the family has one.
    #[inline]
    pub fn parameter(&self) -> Option<f64> {
        match self.family {
            Family::Gumbel { theta } | Family::Joe { theta } => Some(theta),
            Family::Clayton { alpha } | Family::ParetoType { alpha } => Some(alpha),
            Family::UnitExponential => None,
        }
    }

    #[inline]
    pub fn dimension_hint(&self) -> usize {
        self.dimension_hint
    }

    /// `phi(t)` for `t >= 0`. `phi(0) = 1` exactly.
    pub fn phi(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        Ok(match self.family {
            Family::Gumbel { theta } => (-t.powf(1.0 / theta)).exp(),
            Family::Clayton { alpha } => (-(alpha * t).ln_1p() / alpha).exp(),
            // 1 - (1 - e^-t)^(1/theta), kept accurate for both tiny and large t
            Family::Joe { theta } => -(ln_one_minus_exp(-t) / theta).exp_m1(),
            Family::ParetoType { alpha } => (-alpha * t.ln_1p()).exp(),
            Family::UnitExponential => (-t).exp(),
        })
    }

    /// `1 - phi(t)`, computed without cancellation.
    pub fn one_minus_phi(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        Ok(match self.family {
            Family::Gumbel { theta } => -(-t.powf(1.0 / theta)).exp_m1(),
            Family::Clayton { alpha } => -(-(alpha * t).ln_1p() / alpha).exp_m1(),
            Family::Joe { theta } => (ln_one_minus_exp(-t) / theta).exp(),
            Family::ParetoType { alpha } => -(-alpha * t.ln_1p()).exp_m1(),
            Family::UnitExponential => -(-t).exp_m1(),
        })
    }

    /// Analytic first derivative `phi'(t) <= 0` for `t >= 0`.
    ///
    /// Families with theta > 1 have an infinite one-sided derivative at 0;
    /// the limit (`-inf`) is returned there.
    pub fn phi_d1(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        Ok(match self.family {
            Family::Gumbel { theta } => {
                let u = 1.0 / theta;
                -u * t.powf(u - 1.0) * (-t.powf(u)).exp()
            }
            Family::Clayton { alpha } => (-(1.0 / alpha + 1.0) * (alpha * t).ln_1p()).exp().neg(),
            Family::Joe { theta } => {
                let u = 1.0 / theta;
                let s = -(-t).exp_m1(); // 1 - e^-t
                -u * s.powf(u - 1.0) * (-t).exp()
            }
            Family::ParetoType { alpha } => -alpha * (-(alpha + 1.0) * t.ln_1p()).exp(),
            Family::UnitExponential => -(-t).exp(),
        })
    }

    /// Analytic second derivative `phi''(t) >= 0` for `t > 0`.
    pub fn phi_d2(&self, t: f64) -> Result<f64> {
        check_t(t)?;
        Ok(match self.family {
            Family::Gumbel { theta } => {
                let u = 1.0 / theta;
                u * t.powf(u - 2.0) * (-t.powf(u)).exp() * ((1.0 - u) + u * t.powf(u))
            }
            Family::Clayton { alpha } => {
                (1.0 + alpha) * (-(1.0 / alpha + 2.0) * (alpha * t).ln_1p()).exp()
            }
            Family::Joe { theta } => {
                let u = 1.0 / theta;
                let e = (-t).exp();
                let s = -(-t).exp_m1(); // 1 - e^-t
                u * e * s.powf(u - 2.0) * (s + (1.0 - u) * e)
            }
            Family::ParetoType { alpha } => {
                alpha * (alpha + 1.0) * (-(alpha + 2.0) * t.ln_1p()).exp()
            }
            Family::UnitExponential => (-t).exp(),
        })
    }

    /// Inverse `psi(u)` on `[0, 1]`, with `psi(0) = +inf` (strict families)
    /// and `psi(1) = 0` exactly.
    pub fn psi(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        Ok(match self.family {
            Family::Gumbel { theta } => (-u.ln()).powf(theta),
            Family::Clayton { alpha } => (-alpha * u.ln()).exp_m1() / alpha,
            // -ln(1 - (1-u)^theta) via the two-branch log so that both
            // endpoints keep full relative precision (psi(0) = +inf exactly)
            Family::Joe { theta } => ln_one_minus_exp(theta * (-u).ln_1p()).neg(),
            Family::ParetoType { alpha } => (-u.ln() / alpha).exp_m1(),
            Family::UnitExponential => -u.ln(),
        })
    }

    /// Analytic derivative `psi'(u) <= 0` on `(0, 1]`.
    pub fn psi_d1(&self, u: f64) -> Result<f64> {
        check_u(u)?;
        if u == 0.0 {
            return Err(Error::Domain("psi'(0) is not defined for strict generators".into()));
        }
        Ok(match self.family {
            Family::Gumbel { theta } => -theta * (-u.ln()).powf(theta - 1.0) / u,
            Family::Clayton { alpha } => -(-(alpha + 1.0) * u.ln()).exp(),
            Family::Joe { theta } => {
                let s = (1.0 - u).powf(theta - 1.0);
                // denominator 1 - (1-u)^theta, cancellation-free near u = 0
                let denom = -(theta * (-u).ln_1p()).exp_m1();
                -theta * s / denom
            }
            Family::ParetoType { alpha } => -(-(1.0 / alpha + 1.0) * u.ln()).exp() / alpha,
            Family::UnitExponential => -1.0 / u,
        })
    }

    /// Numerically verify n-monotonicity of `phi` on a grid over `(0, inf)`:
    /// sign-alternation of the first `min(n-2, 4)` numerical derivatives plus
    /// convexity of the highest checked derivative.
    pub fn check_n_monotone(&self, n: usize, grid: &Grid) -> Result<CheckReport> {
        let phi = *self;
        check_n_monotone_fn(move |t| phi.phi(t).unwrap_or(f64::NAN), n, grid)
    }
}

#[inline]
fn family_name(f: &Family) -> &'static str {
    match f {
        Family::Gumbel { .. } => "gumbel",
        Family::Clayton { .. } => "clayton",
        Family::Joe { .. } => "joe",
        Family::ParetoType { .. } => "pareto",
        Family::UnitExponential => "unit-exponential",
    }
}

/// `ln(1 - e^z)` for `z <= 0`, accurate over the whole range: the `expm1`
/// route keeps precision while `e^z` is close to 1, the `ln_1p` route once
/// `e^z` is small enough that `1 - e^z` would round to 1.
#[inline]
fn ln_one_minus_exp(z: f64) -> f64 {
    if z > -std::f64::consts::LN_2 {
        (-z.exp_m1()).ln()
    } else {
        (-z.exp()).ln_1p()
    }
}

#[inline]
fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!("generator argument must be finite and >= 0, got {t}")));
    }
    Ok(())
}

#[inline]
fn check_u(u: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::Domain(format!("inverse argument must lie in [0, 1], got {u}")));
    }
    Ok(())
}

/// Central finite difference of order `k` with step `h`.
fn central_difference(f: &impl Fn(f64) -> f64, t: f64, k: usize, h: f64) -> f64 {
    // sum_{i=0..k} (-1)^i C(k,i) f(t + (k/2 - i) h) / h^k
    let mut acc = 0.0;
    let mut binom = 1.0_f64;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * binom * f(t + (k as f64 / 2.0 - i as f64) * h);
        binom = binom * (k - i) as f64 / (i + 1) as f64;
    }
    acc / h.powi(k as i32)
}

/// Rounding-noise bound for a k-th order central difference of a function
/// bounded by `scale` in magnitude.
fn difference_noise(k: usize, h: f64, scale: f64) -> f64 {
    2f64.powi(k as i32) * f64::EPSILON * scale.max(1.0) / h.powi(k as i32)
}

/// Near-optimal steps for k-th order central differences in f64.
const DIFF_STEP: [f64; 4] = [6e-6, 1.2e-4, 7.4e-4, 2.5e-3];

/// Numerical n-monotonicity check for an arbitrary candidate generator `f`.
///
/// Verifies on the grid (which must lie in `(0, inf)`):
/// 1. `f` itself is non-increasing;
/// 2. `(-1)^k D_k f >= 0` (within derivative noise) for `k = 1..=min(n-2, 4)`,
///    where `D_k` is a k-th central difference — derivative order is capped
///    at 4 because higher central differences drown in rounding noise;
/// 3. convexity of `g = (-1)^m D_m f` (`m` the capped order) via slopes of
///    consecutive grid points.
///
/// `n = 2` reduces to "non-increasing and convex".
pub fn check_n_monotone_fn(f: impl Fn(f64) -> f64, n: usize, grid: &Grid) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::Parameter(format!("monotonicity order must be >= 2, got {n}")));
    }
    if grid.lo <= 0.0 {
        return Err(Error::Grid("n-monotonicity grid must lie in (0, inf)".into()));
    }
    let pts = grid.points();
    let base_tol = 1e-6;
    let notes = |m: usize| {
        format!(
            "checked monotonicity, sign alternation of derivative orders 1..={m} \
             (order capped at 4), and convexity of the order-{m} difference"
        )
    };
    let m = (n - 2).min(4);

    // 1. plain monotonicity of f
    let values: Vec<f64> = pts.iter().map(|&t| f(t)).collect();
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Ok(CheckReport::inconclusive(
            *grid,
            base_tol,
            Some(Witness::new(vec![pts[i]], vec![values[i]], "non-finite value")),
            "candidate generator produced a non-finite value",
        ));
    }
    if let Some(w) = crate::report::first_monotonicity_violation(
        &pts,
        &values,
        crate::report::Direction::NonIncreasing,
        base_tol,
    ) {
        return Ok(CheckReport::fail(*grid, base_tol, w, notes(m)));
    }

    // 2. sign alternation of numerical derivatives up to order m
    let step = |k: usize, t: f64| -> f64 {
        let h = DIFF_STEP[k - 1] * t.max(1.0);
        // keep the whole stencil strictly positive
        h.min(t / (k as f64))
    };
    for k in 1..=m {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        for &t in &pts {
            let h = step(k, t);
            let d = central_difference(&f, t, k, h);
            let tol = base_tol * (1.0 + d.abs()) + 8.0 * difference_noise(k, h, 1.0);
            if sign * d < -tol {
                return Ok(CheckReport::fail(
                    *grid,
                    base_tol,
                    Witness::new(
                        vec![t],
                        vec![d],
                        format!("sign of derivative order {k} violates alternation"),
                    ),
                    notes(m),
                ));
            }
        }
    }

    // 3. convexity of g = (-1)^m D_m f via slope monotonicity
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let g: Vec<f64> = if m == 0 {
        values
    } else {
        pts.iter().map(|&t| sign * central_difference(&f, t, m, step(m, t))).collect()
    };
    let mut prev_slope = f64::NEG_INFINITY;
    let mut prev_t = pts[0];
    for i in 1..pts.len() {
        let dt = pts[i] - pts[i - 1];
        let slope = (g[i] - g[i - 1]) / dt;
        let noise = if m == 0 { f64::EPSILON } else { difference_noise(m, step(m, pts[i]), 1.0) };
        let tol = base_tol * (1.0 + slope.abs().max(prev_slope.abs())) + 16.0 * noise / dt;
        if slope < prev_slope - tol {
            return Ok(CheckReport::fail(
                *grid,
                base_tol,
                Witness::new(
                    vec![prev_t, pts[i]],
                    vec![prev_slope, slope],
                    format!("convexity of the order-{m} difference fails (slope decreases)"),
                ),
                notes(m),
            ));
        }
        prev_slope = slope;
        prev_t = pts[i];
    }

    Ok(CheckReport::pass(*grid, base_tol, notes(m)))
}

/// A scalar distribution on `(0, inf)` used as the radial law of the
/// Williamson transform.
pub trait ScalarCdf {
    fn cdf(&self, r: f64) -> f64;
    /// Left-continuous generalized inverse at `p` in `(0, 1)`.
    fn quantile(&self, p: f64) -> f64;
    /// `Some(r0)` when the law is a single atom at `r0`.
    fn as_point_mass(&self) -> Option<f64> {
        None
    }
}

/// Degenerate radial law: all mass at `at > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointMassRadial {
    at: f64,
}

impl PointMassRadial {
    pub fn new(at: f64) -> Result<Self> {
        if !at.is_finite() || at <= 0.0 {
            return Err(Error::Parameter(format!("point mass must sit at a positive value, got {at}")));
        }
        Ok(PointMassRadial { at })
    }
}

impl ScalarCdf for PointMassRadial {
    fn cdf(&self, r: f64) -> f64 {
        if r >= self.at {
            1.0
        } else {
            0.0
        }
    }

    fn quantile(&self, _p: f64) -> f64 {
        self.at
    }

    fn as_point_mass(&self) -> Option<f64> {
        Some(self.at)
    }
}

/// Uniform radial law on `(lo, hi]` with `0 <= lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformRadial {
    lo: f64,
    hi: f64,
}

impl UniformRadial {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || lo < 0.0 || lo >= hi {
            return Err(Error::Parameter(format!("need 0 <= lo < hi, got [{lo}, {hi}]")));
        }
        Ok(UniformRadial { lo, hi })
    }
}

impl ScalarCdf for UniformRadial {
    fn cdf(&self, r: f64) -> f64 {
        ((r - self.lo) / (self.hi - self.lo)).clamp(0.0, 1.0)
    }

    fn quantile(&self, p: f64) -> f64 {
        self.lo + p * (self.hi - self.lo)
    }
}

/// Exponential radial law with the given rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentialRadial {
    rate: f64,
}

impl ExponentialRadial {
    pub fn new(rate: f64) -> Result<Self> {
        if !rate.is_finite() || rate <= 0.0 {
            return Err(Error::Parameter(format!("rate must be positive, got {rate}")));
        }
        Ok(ExponentialRadial { rate })
    }
}

impl ScalarCdf for ExponentialRadial {
    fn cdf(&self, r: f64) -> f64 {
        if r <= 0.0 {
            0.0
        } else {
            -(-self.rate * r).exp_m1()
        }
    }

    fn quantile(&self, p: f64) -> f64 {
        -(-p).ln_1p() / self.rate
    }
}

/// Adaptive-quadrature controls for [`williamson_phi`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Absolute error budget for the whole integral.
    pub tol: f64,
    /// Maximum recursion depth before reporting non-convergence.
    pub max_depth: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { tol: 1e-10, max_depth: 48 }
    }
}

/// Williamson transform of a radial law:
/// `phi(x) = integral over (x, inf) of (1 - x/r)^(n-1) dF(r)`.
///
/// Point-mass laws short-circuit to the closed form `(1 - x/r0)_+^(n-1)`.
/// Other laws are integrated by adaptive midpoint subdivision against `F`
/// on `(x, R_max]`, where `R_max` is the `1 - 1e-10` quantile; the truncated
/// tail contributes at most `1e-10` and is patched with a one-term bound.
pub fn williamson_phi(
    radial: &dyn ScalarCdf,
    n: usize,
    x: f64,
    quad: QuadratureSpec,
) -> Result<f64> {
    if n < 2 {
        return Err(Error::Parameter(format!("transform order must be >= 2, got {n}")));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("argument must be finite and >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    if let Some(r0) = radial.as_point_mass() {
        return Ok(if x >= r0 { 0.0 } else { (1.0 - x / r0).powi(n as i32 - 1) });
    }
    let rmax = radial.quantile(1.0 - 1e-10);
    if x >= rmax {
        return Ok(0.0);
    }
    let g = |r: f64| (1.0 - x / r).max(0.0).powi(n as i32 - 1);

    // adaptive midpoint rule against dF with one-level Richardson correction
    fn refine(
        g: &dyn Fn(f64) -> f64,
        cdf: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        coarse: f64,
        tol: f64,
        depth: u32,
    ) -> Result<f64> {
        let m = 0.5 * (a + b);
        let left = g(0.5 * (a + m)) * (cdf(m) - cdf(a));
        let right = g(0.5 * (m + b)) * (cdf(b) - cdf(m));
        let fine = left + right;
        if (fine - coarse).abs() <= tol {
            return Ok(fine + (fine - coarse) / 3.0);
        }
        if depth == 0 {
            return Err(Error::Numerical(format!(
                "radial quadrature failed to converge on [{a}, {b}] (estimates {coarse} vs {fine})"
            )));
        }
        Ok(refine(g, cdf, a, m, left, tol / 2.0, depth - 1)?
            + refine(g, cdf, m, b, right, tol / 2.0, depth - 1)?)
    }

    let cdf = |r: f64| radial.cdf(r);
    let coarse = g(0.5 * (x + rmax)) * (cdf(rmax) - cdf(x));
    let bulk = refine(&g, &cdf, x, rmax, coarse, quad.tol, quad.max_depth)?;
    let tail = g(rmax) * (1.0 - cdf(rmax));
    Ok((bulk + tail).clamp(0.0, 1.0))
}
