//! Stochastic-order criteria and verifiers for sample extremes.
//!
//! For exchangeable Archimax samples, each classical ordering of an extreme
//! against its neighbours is equivalent to a one-dimensional monotonicity
//! property of a generator ratio:
//!
//! * reverse-hazard chain of maxima  <=>  `t phi'(t) / phi(t)` non-increasing;
//! * hazard-rate chain of maxima     <=>  `t phi'(t) / (1 - phi(t))` non-decreasing;
//! * likelihood-ratio chain          <=>  `t phi''(t) / phi'(t)` non-increasing;
//!
//! and the minima chains swap the first two criteria. The `check_*`
//! functions test such an equivalence as concordance: the analytic criterion
//! verdict must agree with direct empirical ratio checks on distribution
//! curves, with both-fail counting as agreement.
//!
//! The module also carries the vector pre-orders (majorization and friends)
//! used by the heterogeneous proportional-hazards comparisons.

use crate::error::{Error, Result};
use crate::generators::Generator;
use crate::order_stats::{ExchangeableSample, OrderStat};
use crate::report::{CheckReport, Direction, Grid, Verdict, Witness};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Slack scale for the analytic generator-ratio criteria.
pub const CRITERION_TOL: f64 = 1e-10;
/// Slack scale for empirical curve-ratio monotonicity (curves stack margin,
/// copula and extreme evaluations, so they carry more rounding noise).
pub const EMPIRICAL_TOL: f64 = 1e-9;

/// A pairwise stochastic order between two distributions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StochOrder {
    /// Usual order: survival of the larger dominates pointwise.
    St,
    /// Hazard-rate order: survival ratio non-decreasing.
    Hr,
    /// Reverse-hazard order: cdf ratio non-decreasing.
    Rh,
    /// Likelihood-ratio order: density ratio non-decreasing.
    Lr,
}

/// Which part of an extremes-ordering equivalence to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderPart {
    Rh,
    Hr,
    Lr,
}

/// Evaluate a ratio on the grid and report on its monotonicity.
/// Non-finite values make the verdict Inconclusive rather than Fail.
fn monotone_ratio_report(
    ratio: impl Fn(f64) -> f64,
    direction: Direction,
    grid: &Grid,
    tol: f64,
    notes: &str,
) -> CheckReport {
    let pts = grid.points();
    let vals: Vec<f64> = pts.iter().map(|&t| ratio(t)).collect();
    if let Some(i) = vals.iter().position(|v| !v.is_finite()) {
        return CheckReport::inconclusive(
            *grid,
            tol,
            Some(Witness::new(vec![pts[i]], vec![vals[i]], "ratio is not finite here")),
            format!("{notes}; evaluation broke down numerically"),
        );
    }
    match crate::report::first_monotonicity_violation(&pts, &vals, direction, tol) {
        Some(w) => CheckReport::fail(*grid, tol, w, notes),
        None => CheckReport::pass(*grid, tol, notes),
    }
}

fn require_positive_grid(grid: &Grid) -> Result<()> {
    if grid.lo <= 0.0 {
        return Err(Error::Grid("criterion grids must lie in (0, inf)".into()));
    }
    Ok(())
}

/// Criterion for the reverse-hazard chain of maxima (equivalently the
/// hazard-rate chain of minima): `t phi'(t) / phi(t)` non-increasing.
pub fn criterion_rh(g: &Generator, grid: &Grid, tol: f64) -> Result<CheckReport> {
    require_positive_grid(grid)?;
    let g = *g;
    Ok(monotone_ratio_report(
        move |t| {
            let num = t * g.phi_d1(t).unwrap_or(f64::NAN);
            num / g.phi(t).unwrap_or(f64::NAN)
        },
        Direction::NonIncreasing,
        grid,
        tol,
        "t phi'/phi must be non-increasing",
    ))
}

/// Criterion for the hazard-rate chain of maxima (equivalently the
/// reverse-hazard chain of minima): `t phi'(t) / (1 - phi(t))`
/// non-decreasing. The ratio is negative and rises toward 0.
pub fn criterion_hr(g: &Generator, grid: &Grid, tol: f64) -> Result<CheckReport> {
    require_positive_grid(grid)?;
    let g = *g;
    Ok(monotone_ratio_report(
        move |t| {
            let num = t * g.phi_d1(t).unwrap_or(f64::NAN);
            num / g.one_minus_phi(t).unwrap_or(f64::NAN)
        },
        Direction::NonDecreasing,
        grid,
        tol,
        "t phi'/(1 - phi) must be non-decreasing",
    ))
}

/// Criterion for the likelihood-ratio chains: `t phi''(t) / phi'(t)`
/// non-increasing. A vanishing `phi'` at a grid point makes the ratio
/// undefined, which reports Inconclusive.
pub fn criterion_lr(g: &Generator, grid: &Grid, tol: f64) -> Result<CheckReport> {
    require_positive_grid(grid)?;
    let g = *g;
    Ok(monotone_ratio_report(
        move |t| {
            let d1 = g.phi_d1(t).unwrap_or(f64::NAN);
            if d1 == 0.0 {
                return f64::NAN; // undefined ratio -> Inconclusive
            }
            t * g.phi_d2(t).unwrap_or(f64::NAN) / d1
        },
        Direction::NonIncreasing,
        grid,
        tol,
        "t phi''/phi' must be non-increasing",
    ))
}

/// Decide whether the distribution behind `fb` dominates the one behind
/// `fa` in the given order, by direct evaluation on the grid.
///
/// What to pass:
/// * `St`, `Hr`: survival functions; St is pointwise dominance
///   `fb >= fa`, Hr is monotonicity of `fb/fa`;
/// * `Rh`: cdfs, monotonicity of `fb/fa`;
/// * `Lr`: densities, monotonicity of `fb/fa`.
///
/// Points where both values vanish (below 1e-300) are skipped and counted in
/// the notes; a ratio reaching `+inf` (fa hits zero first) is treated as
/// larger than everything after it.
pub fn verify_order(
    fa: impl Fn(f64) -> Result<f64>,
    fb: impl Fn(f64) -> Result<f64>,
    order: StochOrder,
    grid: &Grid,
    tol: f64,
) -> Result<CheckReport> {
    let pts = grid.points();
    const ZERO: f64 = 1e-300;

    if order == StochOrder::St {
        let notes = "pointwise survival dominance";
        for &x in &pts {
            let (a, b) = (fa(x)?, fb(x)?);
            if !a.is_finite() || !b.is_finite() {
                return Ok(CheckReport::inconclusive(
                    *grid,
                    tol,
                    Some(Witness::new(vec![x], vec![a, b], "non-finite value")),
                    notes,
                ));
            }
            if b < a - tol * (1.0 + a.abs()) {
                return Ok(CheckReport::fail(
                    *grid,
                    tol,
                    Witness::new(vec![x], vec![a, b], "survival dominance fails"),
                    notes,
                ));
            }
        }
        return Ok(CheckReport::pass(*grid, tol, notes));
    }

    let notes = match order {
        StochOrder::Hr => "survival ratio must be non-decreasing",
        StochOrder::Rh => "cdf ratio must be non-decreasing",
        StochOrder::Lr => "density ratio must be non-decreasing",
        StochOrder::St => unreachable!(),
    };
    let mut kept_x = Vec::with_capacity(pts.len());
    let mut ratios = Vec::with_capacity(pts.len());
    let mut skipped = 0usize;
    for &x in &pts {
        let (a, b) = (fa(x)?, fb(x)?);
        if a.abs() < ZERO && b.abs() < ZERO {
            skipped += 1;
            continue;
        }
        let r = b / a;
        if r.is_nan() {
            return Ok(CheckReport::inconclusive(
                *grid,
                tol,
                Some(Witness::new(vec![x], vec![a, b], "indeterminate ratio")),
                notes,
            ));
        }
        kept_x.push(x);
        ratios.push(r);
    }
    let final_notes = if skipped > 0 {
        format!("{notes}; skipped {skipped} points where both values vanish")
    } else {
        notes.to_string()
    };
    // infinities: allowed as a terminal plateau; prev = inf followed by a
    // finite value is a genuine decrease and is caught by the comparison.
    match crate::report::first_monotonicity_violation(
        &kept_x,
        &ratios,
        Direction::NonDecreasing,
        tol,
    ) {
        Some(w) => Ok(CheckReport::fail(*grid, tol, w, final_notes)),
        None => Ok(CheckReport::pass(*grid, tol, final_notes)),
    }
}

/// Outcome bundle for an equivalence check: the analytic criterion report,
/// the two empirical pair reports, and the combined concordance verdict.
fn concordance_report(
    criterion: CheckReport,
    emp1: CheckReport,
    emp2: CheckReport,
    grid: &Grid,
    what: &str,
) -> CheckReport {
    if criterion.verdict == Verdict::Inconclusive
        || emp1.verdict == Verdict::Inconclusive
        || emp2.verdict == Verdict::Inconclusive
    {
        return CheckReport::inconclusive(
            *grid,
            EMPIRICAL_TOL,
            criterion.witness.or(emp1.witness).or(emp2.witness),
            format!(
                "{what}: criterion {}, adjacent-pair checks {} and {}; \
                 cannot decide concordance",
                criterion.verdict, emp1.verdict, emp2.verdict
            ),
        );
    }
    let empirical = emp1.is_pass() && emp2.is_pass();
    let notes = format!(
        "{what}: criterion {}, adjacent-pair checks {} and {}",
        criterion.verdict, emp1.verdict, emp2.verdict
    );
    if criterion.is_pass() == empirical {
        CheckReport::pass(*grid, EMPIRICAL_TOL, format!("{notes}; verdicts agree"))
    } else {
        let witness = criterion
            .witness
            .or(emp1.witness)
            .or(emp2.witness)
            .unwrap_or_else(|| Witness::new(vec![], vec![], "sides disagree with no witness"));
        CheckReport::fail(*grid, EMPIRICAL_TOL, witness, format!("{notes}; verdicts disagree"))
    }
}

/// Internal grid for the analytic criteria inside the equivalence checks.
fn criterion_grid() -> Grid {
    Grid::log(1e-4, 1e2, 500).expect("static grid")
}

/// Check the equivalence "ordering chain of the largest statistics
/// `X_(n-1:n) <= X_(n:n) <= X_(n+1:n+1)` holds in the given order" <=>
/// "the matching generator ratio is monotone".
///
/// The analytic criterion runs on an internal log grid over `t`; the
/// empirical pair checks run on the caller's grid over the margin's
/// support. Pass means the two sides agree (including agreeing on failure);
/// Fail means they disagree; Inconclusive propagates from either side.
pub fn check_maxima_order_equivalence(
    s: &ExchangeableSample,
    n: usize,
    part: OrderPart,
    grid: &Grid,
) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
    }
    let g = s.copula().generator();
    let cg = criterion_grid();
    let criterion = match part {
        OrderPart::Rh => criterion_rh(g, &cg, CRITERION_TOL)?,
        OrderPart::Hr => criterion_hr(g, &cg, CRITERION_TOL)?,
        OrderPart::Lr => criterion_lr(g, &cg, CRITERION_TOL)?,
    };
    let (emp1, emp2) = match part {
        OrderPart::Rh => (
            verify_order(
                |x| s.cdf_second_max(n, x),
                |x| s.cdf_max(n, x),
                StochOrder::Rh,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| s.cdf_max(n, x),
                |x| s.cdf_max(n + 1, x),
                StochOrder::Rh,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
        OrderPart::Hr => (
            verify_order(
                |x| Ok(1.0 - s.cdf_second_max(n, x)?),
                |x| Ok(1.0 - s.cdf_max(n, x)?),
                StochOrder::Hr,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| Ok(1.0 - s.cdf_max(n, x)?),
                |x| Ok(1.0 - s.cdf_max(n + 1, x)?),
                StochOrder::Hr,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
        OrderPart::Lr => (
            verify_order(
                |x| s.pdf_order_stat(OrderStat::SecondMax(n), x),
                |x| s.pdf_order_stat(OrderStat::Max(n), x),
                StochOrder::Lr,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| s.pdf_order_stat(OrderStat::Max(n), x),
                |x| s.pdf_order_stat(OrderStat::Max(n + 1), x),
                StochOrder::Lr,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
    };
    Ok(concordance_report(
        criterion,
        emp1,
        emp2,
        grid,
        &format!("maxima chain, {part:?} order, n = {n}"),
    ))
}

/// Check the equivalence for the smallest statistics,
/// `X_(1:n+1) <= X_(1:n) <= X_(2:n)`: the hazard-rate chain pairs with the
/// `t phi'/phi` criterion, the reverse-hazard chain with
/// `t phi'/(1 - phi)` (the criteria swap relative to maxima), and the
/// likelihood-ratio chain keeps `t phi''/phi'`.
pub fn check_minima_order_equivalence(
    s: &ExchangeableSample,
    n: usize,
    part: OrderPart,
    grid: &Grid,
) -> Result<CheckReport> {
    if n < 2 {
        return Err(Error::Parameter(format!("sample size must be >= 2, got {n}")));
    }
    let g = s.copula().generator();
    let cg = criterion_grid();
    let criterion = match part {
        OrderPart::Hr => criterion_rh(g, &cg, CRITERION_TOL)?,
        OrderPart::Rh => criterion_hr(g, &cg, CRITERION_TOL)?,
        OrderPart::Lr => criterion_lr(g, &cg, CRITERION_TOL)?,
    };
    let (emp1, emp2) = match part {
        OrderPart::Hr => (
            verify_order(
                |x| s.sf_min(n + 1, x),
                |x| s.sf_min(n, x),
                StochOrder::Hr,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| s.sf_min(n, x),
                |x| s.sf_second_min(n, x),
                StochOrder::Hr,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
        OrderPart::Rh => (
            verify_order(
                |x| s.cdf_min(n + 1, x),
                |x| s.cdf_min(n, x),
                StochOrder::Rh,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| s.cdf_min(n, x),
                |x| s.cdf_second_min(n, x),
                StochOrder::Rh,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
        OrderPart::Lr => (
            verify_order(
                |x| s.pdf_order_stat(OrderStat::Min(n + 1), x),
                |x| s.pdf_order_stat(OrderStat::Min(n), x),
                StochOrder::Lr,
                grid,
                EMPIRICAL_TOL,
            )?,
            verify_order(
                |x| s.pdf_order_stat(OrderStat::Min(n), x),
                |x| s.pdf_order_stat(OrderStat::SecondMin(n), x),
                StochOrder::Lr,
                grid,
                EMPIRICAL_TOL,
            )?,
        ),
    };
    Ok(concordance_report(
        criterion,
        emp1,
        emp2,
        grid,
        &format!("minima chain, {part:?} order, n = {n}"),
    ))
}

/// Absolute-plus-relative slack for prefix-sum comparisons.
const MAJORIZE_TOL: f64 = 1e-12;

fn check_pair(b: &[f64], a: &[f64]) -> Result<()> {
    if b.len() != a.len() {
        return Err(Error::Dimension { expected: a.len(), got: b.len() });
    }
    if b.is_empty() {
        return Err(Error::Parameter("vectors must be non-empty".into()));
    }
    for &v in b.iter().chain(a.iter()) {
        if !v.is_finite() {
            return Err(Error::Domain(format!("vector entries must be finite, got {v}")));
        }
    }
    Ok(())
}

fn sorted(v: &[f64], ascending: bool) -> Vec<f64> {
    let mut s = v.to_vec();
    s.sort_by(|x, y| x.partial_cmp(y).unwrap());
    if !ascending {
        s.reverse();
    }
    s
}

/// `b` is weakly super-majorized by `a`: every ascending-sorted prefix sum
/// of `b` is at least the matching prefix sum of `a`.
pub fn weak_super_majorize(b: &[f64], a: &[f64]) -> Result<bool> {
    check_pair(b, a)?;
    let (bs, as_) = (sorted(b, true), sorted(a, true));
    let (mut pb, mut pa) = (0.0, 0.0);
    for i in 0..bs.len() {
        pb += bs[i];
        pa += as_[i];
        if pb < pa - MAJORIZE_TOL * (1.0 + pb.abs().max(pa.abs())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `b` is weakly sub-majorized by `a`: every descending-sorted prefix sum
/// of `b` is at most the matching prefix sum of `a`.
pub fn weak_sub_majorize(b: &[f64], a: &[f64]) -> Result<bool> {
    check_pair(b, a)?;
    let (bs, as_) = (sorted(b, false), sorted(a, false));
    let (mut pb, mut pa) = (0.0, 0.0);
    for i in 0..bs.len() {
        pb += bs[i];
        pa += as_[i];
        if pb > pa + MAJORIZE_TOL * (1.0 + pb.abs().max(pa.abs())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `b` is majorized by `a`: totals are equal and every ascending-sorted
/// prefix sum of `b` (up to `n - 1`) is at least `a`'s.
pub fn majorize(b: &[f64], a: &[f64]) -> Result<bool> {
    check_pair(b, a)?;
    let (tb, ta) = (b.iter().sum::<f64>(), a.iter().sum::<f64>());
    if (tb - ta).abs() > MAJORIZE_TOL * (1.0 + tb.abs().max(ta.abs())) {
        return Ok(false);
    }
    let (bs, as_) = (sorted(b, true), sorted(a, true));
    let (mut pb, mut pa) = (0.0, 0.0);
    for i in 0..bs.len() - 1 {
        pb += bs[i];
        pa += as_[i];
        if pb < pa - MAJORIZE_TOL * (1.0 + pb.abs().max(pa.abs())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `b` is p-smaller than `a`: every ascending-sorted prefix product of `b`
/// is at least the matching prefix product of `a`. Requires strictly
/// positive entries; equivalent to the logs being weakly super-majorized.
pub fn p_smaller(b: &[f64], a: &[f64]) -> Result<bool> {
    check_pair(b, a)?;
    if b.iter().chain(a.iter()).any(|&v| v <= 0.0) {
        return Err(Error::Domain("p-ordering needs strictly positive entries".into()));
    }
    let (bs, as_) = (sorted(b, true), sorted(a, true));
    let (mut pb, mut pa) = (1.0, 1.0);
    for i in 0..bs.len() {
        pb *= bs[i];
        pa *= as_[i];
        if pb < pa - MAJORIZE_TOL * (1.0 + pb.abs().max(pa.abs())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Probe Schur-convexity of `f`: generate random pairs `x` majorized by `y`
/// (via Robin Hood transfers that preserve the total) and demand
/// `f(x) <= f(y) + tol`.
pub fn schur_convex_probe(
    f: impl Fn(&[f64]) -> Result<f64>,
    dimension: usize,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    if dimension < 2 {
        return Err(Error::Parameter(format!("dimension must be >= 2, got {dimension}")));
    }
    if trials == 0 {
        return Err(Error::Parameter("need at least one trial".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let grid = Grid::linear(0.0, 1.0, 2).expect("static grid");
    let tol = 1e-10;
    let notes = format!(
        "f(x) <= f(y) on random pairs x majorized-by y; {trials} trials, seed {seed}"
    );
    for _ in 0..trials {
        let y: Vec<f64> = (0..dimension).map(|_| rng.gen_range(0.0..5.0)).collect();
        let mut x = y.clone();
        for _ in 0..rng.gen_range(1..=4usize) {
            let i = rng.gen_range(0..dimension);
            let j = rng.gen_range(0..dimension);
            if x[i] <= x[j] {
                continue;
            }
            // move part of the gap from the larger to the smaller entry:
            // keeps the total and contracts the spread
            let delta = rng.gen_range(0.0..=0.5) * (x[i] - x[j]);
            x[i] -= delta;
            x[j] += delta;
        }
        let (fx, fy) = (f(&x)?, f(&y)?);
        if fx > fy + tol * (1.0 + fy.abs()) {
            let mut point = x;
            point.extend_from_slice(&y);
            return Ok(CheckReport::fail(
                grid,
                tol,
                Witness::new(point, vec![fx, fy], "value increases under contraction"),
                notes,
            ));
        }
    }
    Ok(CheckReport::pass(grid, tol, notes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::copula::ArchimaxCopula;
    use crate::order_stats::Margin;
    use crate::tail_dependence::TailDependence;

    fn tgrid() -> Grid {
        Grid::log(1e-4, 1e2, 500).unwrap()
    }

    fn xgrid() -> Grid {
        Grid::linear(1e-6, 1.0 - 1e-6, 300).unwrap()
    }

    fn sample(g: Generator, tail_theta: f64, n: usize) -> ExchangeableSample {
        let c = ArchimaxCopula::new(
            g.with_dimension_hint(n + 1).unwrap(),
            TailDependence::logistic(tail_theta, n).unwrap(),
        )
        .unwrap();
        ExchangeableSample::new(Margin::uniform01(), c, n).unwrap()
    }

    #[test]
    fn criteria_pass_for_shipped_families() {
        let grid = tgrid();
        for g in [
            Generator::gumbel(4.0).unwrap(),
            Generator::gumbel(8.0).unwrap(),
            Generator::gumbel(5.0).unwrap(),
            Generator::pareto_type(4.0).unwrap(),
            Generator::pareto_type(8.0).unwrap(),
            Generator::pareto_type(5.0).unwrap(),
            Generator::clayton(1.7).unwrap(),
            Generator::joe(3.0).unwrap(),
            Generator::unit_exponential(),
        ] {
            assert!(criterion_rh(&g, &grid, CRITERION_TOL).unwrap().is_pass(), "{g:?} rh");
            assert!(criterion_hr(&g, &grid, CRITERION_TOL).unwrap().is_pass(), "{g:?} hr");
            assert!(criterion_lr(&g, &grid, CRITERION_TOL).unwrap().is_pass(), "{g:?} lr");
        }
    }

    #[test]
    fn criteria_match_closed_forms() {
        // Gumbel: t phi'/phi = -t^(1/theta)/theta
        let g = Generator::gumbel(4.0).unwrap();
        for &t in &[0.1, 1.0, 10.0] {
            let got = t * g.phi_d1(t).unwrap() / g.phi(t).unwrap();
            let want = -t.powf(0.25) / 4.0;
            assert!((got - want).abs() < 1e-10, "rh at {t}: {got} vs {want}");
        }
        // Pareto-type: t phi''/phi' = (1+theta)/(1+t) - theta - 1
        let p = Generator::pareto_type(5.0).unwrap();
        for &t in &[0.1, 1.0, 10.0] {
            let got = t * p.phi_d2(t).unwrap() / p.phi_d1(t).unwrap();
            let want = 6.0 / (1.0 + t) - 6.0;
            assert!((got - want).abs() < 1e-10, "lr at {t}: {got} vs {want}");
        }
    }

    #[test]
    fn criterion_grid_must_be_positive() {
        let g = Generator::gumbel(2.0).unwrap();
        let grid = Grid::linear(0.0, 1.0, 10).unwrap();
        assert!(criterion_rh(&g, &grid, 1e-10).is_err());
    }

    #[test]
    fn criterion_lr_is_inconclusive_when_the_derivative_underflows() {
        // exp(-t) underflows to exactly 0 past t ~ 745, making the ratio 0/0
        let g = Generator::unit_exponential();
        let grid = Grid::linear(700.0, 800.0, 11).unwrap();
        let report = criterion_lr(&g, &grid, 1e-10).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn verify_order_iid_fixtures() {
        let grid = xgrid();
        // survival ratio (1-x^5)/(1-x^4) is non-decreasing
        let hr = verify_order(
            |x| Ok(1.0 - x.powi(4)),
            |x| Ok(1.0 - x.powi(5)),
            StochOrder::Hr,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert!(hr.is_pass(), "{hr:?}");
        // density ratio 5x^4 / 4x^3 = 5x/4 is non-decreasing
        let lr = verify_order(
            |x| Ok(4.0 * x.powi(3)),
            |x| Ok(5.0 * x.powi(4)),
            StochOrder::Lr,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert!(lr.is_pass(), "{lr:?}");
        // reflexivity
        for order in [StochOrder::St, StochOrder::Hr, StochOrder::Rh, StochOrder::Lr] {
            let r = verify_order(
                |x| Ok(1.0 - x * 0.9),
                |x| Ok(1.0 - x * 0.9),
                order,
                &grid,
                EMPIRICAL_TOL,
            )
            .unwrap();
            assert!(r.is_pass(), "{order:?}");
        }
    }

    #[test]
    fn verify_order_detects_violations() {
        let grid = xgrid();
        // fb/fa = 1 - x is decreasing: Rh must fail
        let r = verify_order(
            |_| Ok(1.0),
            |x| Ok(1.0 - x),
            StochOrder::Rh,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
        // St: survival of "B" dips below A's
        let r = verify_order(
            |x| Ok(1.0 - x),
            |x| Ok((1.0 - 2.0 * x).max(0.0)),
            StochOrder::St,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn verify_order_skips_joint_zeros_and_allows_infinite_tails() {
        // supports [0, 0.5] vs [0, 1]: ratio climbs to +inf, then both hit 0
        let grid = Grid::linear(0.0, 1.0, 101).unwrap();
        let r = verify_order(
            |x| Ok((1.0 - 2.0 * x).max(0.0)),
            |x| Ok((1.0 - x).max(0.0)),
            StochOrder::Hr,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert!(r.is_pass(), "{r:?}");
        assert!(r.notes.contains("skipped 1"), "{}", r.notes);
    }

    #[test]
    fn maxima_equivalence_passes_for_shipped_instances() {
        let grid = xgrid();
        for (theta, part) in [
            (4.0, OrderPart::Rh),
            (8.0, OrderPart::Hr),
            (5.0, OrderPart::Lr),
        ] {
            let s = sample(Generator::gumbel(theta).unwrap(), theta, 4);
            let r = check_maxima_order_equivalence(&s, 4, part, &grid).unwrap();
            assert!(r.is_pass(), "theta={theta} {part:?}: {r:?}");
            assert!(r.notes.contains("agree"));
        }
    }

    #[test]
    fn maxima_equivalence_passes_for_independence() {
        let grid = xgrid();
        let s = sample(Generator::unit_exponential(), 1.0, 3);
        for part in [OrderPart::Rh, OrderPart::Hr, OrderPart::Lr] {
            let r = check_maxima_order_equivalence(&s, 3, part, &grid).unwrap();
            assert!(r.is_pass(), "{part:?}: {r:?}");
        }
    }

    #[test]
    fn minima_equivalence_passes_for_shipped_instances() {
        let grid = xgrid();
        for (theta, part) in [
            (4.0, OrderPart::Hr),
            (8.0, OrderPart::Rh),
            (5.0, OrderPart::Lr),
        ] {
            let s = sample(Generator::pareto_type(theta).unwrap(), theta, 4);
            let r = check_minima_order_equivalence(&s, 4, part, &grid).unwrap();
            assert!(r.is_pass(), "theta={theta} {part:?}: {r:?}");
        }
    }

    #[test]
    fn equivalence_checks_validate_n() {
        let s = sample(Generator::gumbel(2.0).unwrap(), 2.0, 3);
        let grid = xgrid();
        assert!(check_maxima_order_equivalence(&s, 1, OrderPart::Rh, &grid).is_err());
        assert!(check_minima_order_equivalence(&s, 0, OrderPart::Hr, &grid).is_err());
    }

    #[test]
    fn majorization_fixtures() {
        assert!(majorize(&[1.0, 1.0, 1.0], &[0.0, 1.0, 2.0]).unwrap());
        assert!(!majorize(&[0.0, 1.0, 2.0], &[1.0, 1.0, 1.0]).unwrap());
        assert!(!majorize(&[1.0, 1.0], &[1.0, 2.0]).unwrap()); // totals differ
        assert!(weak_super_majorize(&[1.5, 1.5], &[1.0, 2.0]).unwrap());
        assert!(!weak_super_majorize(&[0.5, 0.5], &[2.0, 1.0]).unwrap());
        assert!(weak_sub_majorize(&[1.0, 1.0], &[2.0, 1.0]).unwrap());
        assert!(!weak_sub_majorize(&[3.0, 1.0], &[2.0, 1.0]).unwrap());
        assert!(p_smaller(&[2.0, 2.0], &[1.0, 4.0]).unwrap());
        assert!(!p_smaller(&[0.5, 0.5], &[1.0, 4.0]).unwrap());
        assert!(p_smaller(&[1.0, -1.0], &[1.0, 1.0]).is_err());
        assert!(weak_super_majorize(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn majorize_is_order_insensitive() {
        assert!(majorize(&[1.0, 1.0, 1.0], &[2.0, 0.0, 1.0]).unwrap());
        assert!(majorize(&[1.0, 1.0, 1.0], &[1.0, 2.0, 0.0]).unwrap());
    }

    #[test]
    fn p_smaller_agrees_with_log_super_majorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..500 {
            let n = rng.gen_range(2..6);
            let b: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..4.0)).collect();
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(0.05..4.0)).collect();
            let lb: Vec<f64> = b.iter().map(|v| v.ln()).collect();
            let la: Vec<f64> = a.iter().map(|v| v.ln()).collect();
            assert_eq!(
                p_smaller(&b, &a).unwrap(),
                weak_super_majorize(&lb, &la).unwrap(),
                "b={b:?} a={a:?}"
            );
        }
    }

    #[test]
    fn majorize_implies_both_weak_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut hits = 0;
        for _ in 0..2000 {
            let n = rng.gen_range(2..5);
            let a: Vec<f64> = (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect();
            // contract toward the mean so that b is majorized by a
            let mean = a.iter().sum::<f64>() / n as f64;
            let lam: f64 = rng.gen_range(0.0..1.0);
            let b: Vec<f64> = a.iter().map(|&v| mean + lam * (v - mean)).collect();
            if majorize(&b, &a).unwrap() {
                hits += 1;
                assert!(weak_super_majorize(&b, &a).unwrap(), "b={b:?} a={a:?}");
                assert!(weak_sub_majorize(&b, &a).unwrap(), "b={b:?} a={a:?}");
            }
        }
        assert!(hits > 1000, "construction should produce majorized pairs, got {hits}");
    }

    #[test]
    fn schur_probe_accepts_and_rejects() {
        let max = |x: &[f64]| Ok(x.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        assert!(schur_convex_probe(max, 3, 300, 42).unwrap().is_pass());
        let exp_sum = |x: &[f64]| Ok(x.iter().map(|v| v.exp()).sum());
        assert!(schur_convex_probe(exp_sum, 4, 300, 42).unwrap().is_pass());
        let neg_max = |x: &[f64]| Ok(-x.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
        let r = schur_convex_probe(neg_max, 3, 300, 42).unwrap();
        assert_eq!(r.verdict, Verdict::Fail);
        assert!(r.witness.is_some());
    }

    #[test]
    fn hr_or_rh_imply_st_on_extreme_pairs() {
        let grid = xgrid();
        let s = sample(Generator::gumbel(3.0).unwrap(), 2.0, 4);
        // survival pair for Hr and St
        let hr = verify_order(
            |x| Ok(1.0 - s.cdf_max(4, x)?),
            |x| Ok(1.0 - s.cdf_max(5, x)?),
            StochOrder::Hr,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        let st = verify_order(
            |x| Ok(1.0 - s.cdf_max(4, x)?),
            |x| Ok(1.0 - s.cdf_max(5, x)?),
            StochOrder::St,
            &grid,
            EMPIRICAL_TOL,
        )
        .unwrap();
        assert!(hr.is_pass());
        assert!(st.is_pass(), "hazard-rate dominance must imply plain dominance");
    }
}
