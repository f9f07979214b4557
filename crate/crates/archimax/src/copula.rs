//! The Archimax copula `C(u) = phi(ell(psi(u_1), ..., psi(u_d)))`.
//!
//! The two limiting shapes are recovered as special cases and carry
//! independent evaluation paths for cross-validation:
//!
//! * sum-shaped tail -> plain Archimedean copula `phi(sum psi(u_i))`;
//! * unit-exponential generator -> extreme-value copula
//!   `exp(-ell(-ln u_1, ..., -ln u_d))`.

use crate::error::{Error, Result};
use crate::generators::{Family, Generator};
use crate::report::{CheckReport, Grid, Verdict, Witness};
use crate::tail_dependence::{TailDependence, TailKind};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Coordinates below this are clipped before `psi` to keep the (strict)
/// generator inverse finite; exact zeros short-circuit to 0 first.
const U_CLIP: f64 = 1e-12;

/// An Archimax copula: an Archimedean generator composed with a stable tail
/// dependence function. The copula dimension is the tail's dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArchimaxCopula {
    generator: Generator,
    tail: TailDependence,
}

impl ArchimaxCopula {
    /// Combine a generator and a tail dependence function.
    ///
    /// If the tail's dimension exceeds the generator's declared
    /// n-monotonicity hint this logs a warning (the hint is advisory) but
    /// still builds the copula.
    pub fn new(generator: Generator, tail: TailDependence) -> Result<Self> {
        if tail.dimension() > generator.dimension_hint() {
            log::warn!(
                "tail dimension {} exceeds the generator's monotonicity hint {}; \
                 run check_n_monotone at the larger order if the generator is custom",
                tail.dimension(),
                generator.dimension_hint()
            );
        }
        Ok(ArchimaxCopula { generator, tail })
    }

    #[inline]
    pub fn generator(&self) -> &Generator {
        &self.generator
    }

    #[inline]
    pub fn tail(&self) -> &TailDependence {
        &self.tail
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.tail.dimension()
    }

    fn check_point(&self, u: &[f64]) -> Result<()> {
        if u.len() != self.dimension() {
            return Err(Error::Dimension { expected: self.dimension(), got: u.len() });
        }
        for &v in u {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::Domain(format!(
                    "copula arguments must lie in [0, 1], got {v}"
                )));
            }
        }
        Ok(())
    }

    /// `C(u) = phi(ell(psi(u_1), ..., psi(u_d)))`.
    ///
    /// Exact zero coordinates give 0 exactly; other coordinates are clipped
    /// to `[1e-12, 1]` before inversion.
    pub fn cdf(&self, u: &[f64]) -> Result<f64> {
        self.check_point(u)?;
        if u.iter().any(|&v| v == 0.0) {
            return Ok(0.0);
        }
        if matches!(self.tail.kind(), TailKind::Max) {
            // comonotone case: phi(max_i psi(u_i)) = phi(psi(min u)) = min u,
            // taken literally so the upper Frechet bound holds exactly
            return Ok(u.iter().cloned().fold(1.0, f64::min));
        }
        let psis = u
            .iter()
            .map(|&v| self.generator.psi(v.max(U_CLIP)))
            .collect::<Result<Vec<f64>>>()?;
        let t = self.tail.ell(&psis)?;
        self.generator.phi(t)
    }

    /// Same copula through the dependence-function route:
    /// `phi(s * A(psi(u)/s))` with `s = sum psi(u_i)`. Exists to
    /// cross-validate [`ArchimaxCopula::cdf`]; the two must agree to
    /// rounding error.
    pub fn cdf_pickands(&self, u: &[f64]) -> Result<f64> {
        self.check_point(u)?;
        if u.iter().any(|&v| v == 0.0) {
            return Ok(0.0);
        }
        let psis = u
            .iter()
            .map(|&v| self.generator.psi(v.max(U_CLIP)))
            .collect::<Result<Vec<f64>>>()?;
        let s: f64 = psis.iter().sum();
        if s == 0.0 {
            // all u_i = 1
            return Ok(1.0);
        }
        let w: Vec<f64> = psis.iter().map(|&p| p / s).collect();
        let a = self.tail.pickands(&w)?;
        self.generator.phi(s * a)
    }

    /// Evaluate the copula at the survival-transformed point: with all
    /// margins standard uniform this is the joint lower-orthant functional
    /// used by minima, `P(U_1 > 1-u_1, ...)` under the postulated survival
    /// model. Numerically it is the same Archimax form evaluated at `u`.
    pub fn survival_cdf(&self, u: &[f64]) -> Result<f64> {
        self.cdf(u)
    }

    /// Independent Archimedean route `phi(sum psi(u_i))`, defined only for
    /// the sum-shaped tail.
    pub fn archimedean_reduction(&self, u: &[f64]) -> Result<f64> {
        if !matches!(self.tail.kind(), TailKind::Sum) {
            return Err(Error::Incompatible(
                "the Archimedean reduction requires the sum-shaped tail".into(),
            ));
        }
        self.check_point(u)?;
        if u.iter().any(|&v| v == 0.0) {
            return Ok(0.0);
        }
        let mut s = 0.0;
        for &v in u {
            s += self.generator.psi(v.max(U_CLIP))?;
        }
        self.generator.phi(s)
    }

    /// Independent extreme-value route `exp(-ell(-ln u))`, defined only for
    /// the unit-exponential generator.
    pub fn extreme_value_form(&self, u: &[f64]) -> Result<f64> {
        if !matches!(self.generator.family(), Family::UnitExponential) {
            return Err(Error::Incompatible(
                "the extreme-value form requires the unit-exponential generator".into(),
            ));
        }
        self.check_point(u)?;
        if u.iter().any(|&v| v == 0.0) {
            return Ok(0.0);
        }
        let logs: Vec<f64> = u.iter().map(|&v| -v.max(U_CLIP).ln()).collect();
        Ok((-self.tail.ell(&logs)?).exp())
    }

    /// Randomized check of copula axioms: groundedness, uniform margins and
    /// (in dimension <= 4) non-negativity of rectangle volumes.
    ///
    /// Rectangle checks cost `2^d` evaluations each, so above dimension 4
    /// they are skipped and the notes say so.
    pub fn check_copula_axioms(&self, trials: usize, seed: u64) -> Result<CheckReport> {
        if trials == 0 {
            return Err(Error::Parameter("need at least one trial".into()));
        }
        let d = self.dimension();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = Grid::linear(0.0, 1.0, 2).expect("static grid");
        let tol = 1e-10;
        let rect_note = if d <= 4 {
            "rectangle volumes checked"
        } else {
            "rectangle volumes skipped above dimension 4 (cost 2^d per box)"
        };
        let notes = format!(
            "groundedness, uniform margins, {rect_note}; {trials} randomized trials, seed {seed}"
        );

        for _ in 0..trials {
            // groundedness: any zero coordinate collapses the value to 0
            let mut u: Vec<f64> = (0..d).map(|_| rng.gen_range(0.0..1.0)).collect();
            let j = rng.gen_range(0..d);
            let saved = u[j];
            u[j] = 0.0;
            let v = self.cdf(&u)?;
            if v != 0.0 {
                return Ok(CheckReport::fail(
                    grid,
                    tol,
                    Witness::new(u, vec![v], "copula is not grounded"),
                    notes,
                ));
            }
            u[j] = saved;

            // margins: all other coordinates at 1 leaves the j-th untouched
            let mut edge = vec![1.0; d];
            edge[j] = saved;
            let v = self.cdf(&edge)?;
            if (v - saved).abs() > 1e-12 * (1.0 + saved) {
                return Ok(CheckReport::fail(
                    grid,
                    tol,
                    Witness::new(edge, vec![v, saved], "margin is not uniform"),
                    notes,
                ));
            }

            // rectangle volume >= 0 over a random box
            if d <= 4 {
                let lo: Vec<f64> = (0..d).map(|_| rng.gen_range(0.0..1.0)).collect();
                let hi: Vec<f64> =
                    lo.iter().map(|&l| rng.gen_range(l..1.0f64.min(l + 0.8))).collect();
                let mut volume = 0.0;
                for mask in 0..(1u32 << d) {
                    let mut corner = vec![0.0; d];
                    let mut lows = 0;
                    for (k, c) in corner.iter_mut().enumerate() {
                        if mask & (1 << k) == 0 {
                            *c = lo[k];
                            lows += 1;
                        } else {
                            *c = hi[k];
                        }
                    }
                    let sign = if lows % 2 == 0 { 1.0 } else { -1.0 };
                    volume += sign * self.cdf(&corner)?;
                }
                if volume < -tol {
                    let mut point = lo;
                    point.extend_from_slice(&hi);
                    return Ok(CheckReport::fail(
                        grid,
                        tol,
                        Witness::new(point, vec![volume], "negative rectangle volume"),
                        notes,
                    ));
                }
            }
        }

        Ok(CheckReport::pass(grid, tol, notes))
    }

    /// Probe max-stability: `C(u_1^(1/k), ..., u_d^(1/k))^k = C(u)`.
    ///
    /// Extreme-value copulas (unit-exponential generator) must satisfy this
    /// identity to 1e-10 and get a Pass/Fail verdict. For any other
    /// generator the identity is not expected to hold, so the verdict is
    /// `Inconclusive` and the witness records the largest deviation found.
    pub fn max_stability_check(&self, k: u32, trials: usize, seed: u64) -> Result<CheckReport> {
        if k == 0 {
            return Err(Error::Parameter("stability exponent must be >= 1".into()));
        }
        if trials == 0 {
            return Err(Error::Parameter("need at least one trial".into()));
        }
        let d = self.dimension();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let grid = Grid::linear(0.0, 1.0, 2).expect("static grid");
        let tol = 1e-10;
        let is_ev = matches!(self.generator.family(), Family::UnitExponential);

        let mut worst_dev = 0.0;
        let mut worst_u: Vec<f64> = vec![];
        let mut worst_vals = vec![0.0, 0.0];
        for _ in 0..trials {
            let u: Vec<f64> = (0..d).map(|_| rng.gen_range(0.01..1.0)).collect();
            let direct = self.cdf(&u)?;
            let root: Vec<f64> = u.iter().map(|&v| v.powf(1.0 / k as f64)).collect();
            let lifted = self.cdf(&root)?.powi(k as i32);
            let dev = (direct - lifted).abs();
            if dev > worst_dev {
                worst_dev = dev;
                worst_u = u;
                worst_vals = vec![direct, lifted];
            }
        }

        let notes = format!(
            "max-stability with exponent {k}; {trials} randomized trials, seed {seed}"
        );
        if is_ev {
            if worst_dev <= tol {
                Ok(CheckReport::pass(grid, tol, notes))
            } else {
                Ok(CheckReport::fail(
                    grid,
                    tol,
                    Witness::new(worst_u, worst_vals, "max-stability identity fails"),
                    notes,
                ))
            }
        } else {
            Ok(CheckReport {
                verdict: Verdict::Inconclusive,
                witness: Some(Witness::new(
                    worst_u,
                    worst_vals,
                    format!("largest deviation {worst_dev:.3e} (identity not expected to hold)"),
                )),
                grid,
                tolerance: tol,
                notes: format!("{notes}; generator is not unit-exponential"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Generator;
    use crate::tail_dependence::TailDependence;

    fn gumbel_logistic(theta_g: f64, theta_t: f64, d: usize) -> ArchimaxCopula {
        ArchimaxCopula::new(
            Generator::gumbel(theta_g).unwrap(),
            TailDependence::logistic(theta_t, d).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn frozen_value_gumbel_logistic() {
        // C(0.5, 0.5) = exp(-2^(1/4) ln 2) for Gumbel 2 with logistic 2
        let c = gumbel_logistic(2.0, 2.0, 2);
        let v = c.cdf(&[0.5, 0.5]).unwrap();
        assert!((v - 0.43854381197983004).abs() < 1e-15, "got {v}");
    }

    #[test]
    fn zero_coordinate_gives_exact_zero() {
        let c = gumbel_logistic(2.0, 3.0, 3);
        assert_eq!(c.cdf(&[0.0, 0.5, 0.9]).unwrap(), 0.0);
        assert_eq!(c.cdf_pickands(&[0.5, 0.0, 0.9]).unwrap(), 0.0);
    }

    #[test]
    fn all_ones_gives_one() {
        let c = gumbel_logistic(2.0, 3.0, 3);
        assert_eq!(c.cdf(&[1.0, 1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(c.cdf_pickands(&[1.0, 1.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn input_validation() {
        let c = gumbel_logistic(2.0, 2.0, 2);
        assert!(c.cdf(&[0.5]).is_err());
        assert!(c.cdf(&[0.5, 1.2]).is_err());
        assert!(c.cdf(&[0.5, -0.1]).is_err());
        assert!(c.cdf(&[0.5, f64::NAN]).is_err());
    }

    #[test]
    fn pickands_route_agrees_with_direct_route() {
        let cases = [
            gumbel_logistic(2.5, 1.7, 2),
            gumbel_logistic(1.0, 4.0, 3),
            ArchimaxCopula::new(
                Generator::clayton(1.7).unwrap(),
                TailDependence::max(3).unwrap(),
            )
            .unwrap(),
            ArchimaxCopula::new(
                Generator::joe(3.0).unwrap(),
                TailDependence::sum(2).unwrap(),
            )
            .unwrap(),
        ];
        for c in cases {
            let d = c.dimension();
            for i in 1..8 {
                let u: Vec<f64> = (0..d).map(|j| (0.1 * i as f64 + 0.07 * j as f64).min(0.95)).collect();
                let a = c.cdf(&u).unwrap();
                let b = c.cdf_pickands(&u).unwrap();
                assert!((a - b).abs() <= 1e-12 * (1.0 + a), "{c:?} at {u:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn sum_tail_matches_archimedean_reduction() {
        let c = ArchimaxCopula::new(
            Generator::clayton(2.0).unwrap(),
            TailDependence::sum(3).unwrap(),
        )
        .unwrap();
        let u = [0.3, 0.6, 0.85];
        let a = c.cdf(&u).unwrap();
        let b = c.archimedean_reduction(&u).unwrap();
        assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        // reduction refuses non-sum tails
        let c2 = gumbel_logistic(2.0, 2.0, 2);
        assert!(c2.archimedean_reduction(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn unit_exponential_matches_extreme_value_form() {
        let c = ArchimaxCopula::new(
            Generator::unit_exponential(),
            TailDependence::logistic(3.0, 2).unwrap(),
        )
        .unwrap();
        let u = [0.4, 0.75];
        let a = c.cdf(&u).unwrap();
        let b = c.extreme_value_form(&u).unwrap();
        assert!((a - b).abs() < 1e-14, "{a} vs {b}");
        // EV form refuses other generators
        let c2 = gumbel_logistic(2.0, 2.0, 2);
        assert!(c2.extreme_value_form(&[0.5, 0.5]).is_err());
    }

    #[test]
    fn max_tail_is_comonotone() {
        // the max-shaped tail gives C(u) = min(u) for any generator
        let c = ArchimaxCopula::new(
            Generator::gumbel(3.0).unwrap(),
            TailDependence::max(3).unwrap(),
        )
        .unwrap();
        for u in [[0.2, 0.7, 0.4], [0.9, 0.95, 0.91], [0.5, 0.5, 0.5]] {
            let v = c.cdf(&u).unwrap();
            let m = u.iter().cloned().fold(1.0, f64::min);
            assert!((v - m).abs() < 1e-12, "at {u:?}: {v} vs {m}");
        }
    }

    #[test]
    fn independence_case() {
        // unit-exponential generator + logistic theta = 1 is the product copula
        let c = ArchimaxCopula::new(
            Generator::unit_exponential(),
            TailDependence::logistic(1.0, 3).unwrap(),
        )
        .unwrap();
        let u = [0.3, 0.5, 0.7];
        let v = c.cdf(&u).unwrap();
        assert!((v - 0.105).abs() < 1e-14, "got {v}");
    }

    #[test]
    fn axioms_pass_for_a_spread_of_models() {
        for c in [
            gumbel_logistic(2.5, 2.5, 2),
            gumbel_logistic(1.0, 1.0, 3),
            ArchimaxCopula::new(Generator::clayton(1.7).unwrap(), TailDependence::max(4).unwrap())
                .unwrap(),
            ArchimaxCopula::new(Generator::joe(3.0).unwrap(), TailDependence::sum(2).unwrap())
                .unwrap(),
            ArchimaxCopula::new(
                Generator::pareto_type(4.0).unwrap(),
                TailDependence::logistic(4.0, 4).unwrap(),
            )
            .unwrap(),
        ] {
            let report = c.check_copula_axioms(200, 42).unwrap();
            assert!(report.is_pass(), "{c:?}: {report:?}");
        }
    }

    #[test]
    fn axioms_note_rectangle_skip_in_high_dimension() {
        let c = ArchimaxCopula::new(
            Generator::gumbel(2.0).unwrap().with_dimension_hint(5).unwrap(),
            TailDependence::logistic(2.0, 5).unwrap(),
        )
        .unwrap();
        let report = c.check_copula_axioms(50, 1).unwrap();
        assert!(report.is_pass());
        assert!(report.notes.contains("skipped"), "{}", report.notes);
    }

    #[test]
    fn max_stability_passes_for_extreme_value_models() {
        let c = ArchimaxCopula::new(
            Generator::unit_exponential(),
            TailDependence::logistic(2.5, 3).unwrap(),
        )
        .unwrap();
        for k in [2, 5, 10] {
            let report = c.max_stability_check(k, 200, 42).unwrap();
            assert!(report.is_pass(), "k = {k}: {report:?}");
        }
    }

    #[test]
    fn max_stability_is_inconclusive_with_deviation_for_other_generators() {
        let c = ArchimaxCopula::new(
            Generator::clayton(1.0).unwrap(),
            TailDependence::sum(2).unwrap(),
        )
        .unwrap();
        let report = c.max_stability_check(2, 300, 42).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
        let w = report.witness.unwrap();
        // the Clayton copula genuinely is not max-stable: deviation is macroscopic
        let dev = (w.values[0] - w.values[1]).abs();
        assert!(dev > 1e-3, "expected a visible deviation, got {dev}");
    }

    #[test]
    fn survival_route_matches_cdf_route() {
        let c = gumbel_logistic(2.0, 2.0, 2);
        let u = [0.35, 0.8];
        assert_eq!(c.cdf(&u).unwrap(), c.survival_cdf(&u).unwrap());
    }
}
