//! Stable tail dependence functions.
//!
//! A stable tail dependence function `ell` on `[0, inf)^d` is homogeneous of
//! order 1, satisfies `ell(e_j) = 1` on unit vectors, is bounded between the
//! maximum and the sum of its arguments, and is fully d-max decreasing. The
//! restriction of `ell` to the unit simplex is the dependence function `A`.

use crate::error::{Error, Result};
use crate::report::{CheckReport, Grid, Verdict, Witness};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The shape of a stable tail dependence function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailKind {
    /// `ell(x) = (sum x_i^theta)^(1/theta)`, `theta >= 1`. `theta = 1` is
    /// independence in the extreme-value sense.
    Logistic { theta: f64 },
    /// `ell(x) = max x_i` — complete dependence.
    Max,
    /// `ell(x) = sum x_i` — the Archimedean (no extremal dependence) case.
    Sum,
}

/// A validated stable tail dependence function of fixed dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailDependence {
    kind: TailKind,
    dimension: usize,
}

impl TailDependence {
    pub fn new(kind: TailKind, dimension: usize) -> Result<Self> {
        if dimension < 2 {
            return Err(Error::Parameter(format!(
                "tail dependence dimension must be >= 2, got {dimension}"
            )));
        }
        if let TailKind::Logistic { theta } = kind {
            if !theta.is_finite() || theta < 1.0 {
                return Err(Error::Parameter(format!(
                    "logistic tail requires theta >= 1, got {theta}"
                )));
            }
        }
        Ok(TailDependence { kind, dimension })
    }

    pub fn logistic(theta: f64, dimension: usize) -> Result<Self> {
        Self::new(TailKind::Logistic { theta }, dimension)
    }

    pub fn max(dimension: usize) -> Result<Self> {
        Self::new(TailKind::Max, dimension)
    }

    pub fn sum(dimension: usize) -> Result<Self> {
        Self::new(TailKind::Sum, dimension)
    }

    #[inline]
    pub fn kind(&self) -> TailKind {
        self.kind
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    #[inline]
    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            TailKind::Logistic { .. } => "logistic",
            TailKind::Max => "max",
            TailKind::Sum => "sum",
        }
    }

    /// Evaluate `ell(x)` for `x` in `[0, inf)^d`.
    pub fn ell(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension {
            return Err(Error::Dimension { expected: self.dimension, got: x.len() });
        }
        for &v in x {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::Domain(format!(
                    "tail dependence arguments must be finite and >= 0, got {v}"
                )));
            }
        }
        Ok(match self.kind {
            TailKind::Logistic { theta } => {
                // scale by the max so x_i^theta cannot overflow for large
                // theta or large coordinates
                let m = x.iter().cloned().fold(0.0, f64::max);
                if m == 0.0 {
                    0.0
                } else {
                    let s: f64 = x.iter().map(|&v| (v / m).powf(theta)).sum();
                    m * s.powf(1.0 / theta)
                }
            }
            TailKind::Max => x.iter().cloned().fold(0.0, f64::max),
            TailKind::Sum => x.iter().sum(),
        })
    }

    /// Restriction of `ell` to the unit simplex: the dependence function
    /// `A(w) = ell(w)` with `sum w = 1`. Always lies in `[1/d, 1]`.
    pub fn pickands(&self, w: &[f64]) -> Result<f64> {
        if w.len() != self.dimension {
            return Err(Error::Dimension { expected: self.dimension, got: w.len() });
        }
        let total: f64 = w.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!(
                "simplex weights must sum to 1, got sum {total}"
            )));
        }
        let a = self.ell(w)?;
        let lo = 1.0 / self.dimension as f64;
        if a < lo - 1e-12 || a > 1.0 + 1e-12 {
            return Err(Error::Numerical(format!(
                "dependence function value {a} escapes [{lo}, 1]"
            )));
        }
        Ok(a.clamp(lo, 1.0))
    }

    /// Dependence function at the barycenter of the k-dimensional face,
    /// `A_k = ell(1/k, ..., 1/k)` with `k` coordinates: the factor that turns
    /// a diagonal copula evaluation into `phi(k * psi(u) * A_k)`.
    pub fn diagonal_a(&self, k: usize) -> Result<f64> {
        if k < 2 {
            return Err(Error::Parameter(format!("diagonal order must be >= 2, got {k}")));
        }
        Ok(diagonal_a_unchecked(self.kind, k))
    }
}

/// `ell(1/k, ..., 1/k)` without the `k >= 2` guard; `k = 1` gives 1 for any
/// kind, which is what second-extreme recursions need.
pub(crate) fn diagonal_a_unchecked(kind: TailKind, k: usize) -> f64 {
    let k = k as f64;
    match kind {
        TailKind::Logistic { theta } => k.powf(1.0 / theta - 1.0),
        TailKind::Max => 1.0 / k,
        TailKind::Sum => 1.0,
    }
}

/// Check the defining properties of a validated [`TailDependence`].
pub fn check_stdf_axioms(
    tail: &TailDependence,
    trials: usize,
    seed: u64,
) -> Result<CheckReport> {
    let t = *tail;
    check_stdf_axioms_fn(move |x| t.ell(x), t.dimension, trials, seed)
}

/// Check stable-tail-dependence axioms for an arbitrary candidate `ell`.
///
/// Randomized over `trials` draws from a seeded generator:
/// 1. homogeneity: `ell(c x) = c ell(x)` for `c` in `[0.1, 10]`;
/// 2. unit vectors: `ell(e_j) = 1`;
/// 3. bounds: `max(x) <= ell(x) <= sum(x)`;
/// 4. max-decreasingness over one- and two-coordinate boxes: the inclusion-
///    exclusion alternating sum of `ell` over box corners is non-positive.
pub fn check_stdf_axioms_fn(
    ell: impl Fn(&[f64]) -> Result<f64>,
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
    let grid = Grid::linear(0.0, 2.0, 2).expect("static grid");
    let tol = 1e-10;
    let notes = "homogeneity, unit vectors, max/sum bounds, and 1- and \
                 2-coordinate max-decreasingness on random boxes";

    // 2. unit vectors (deterministic, check once)
    for j in 0..dimension {
        let mut e = vec![0.0; dimension];
        e[j] = 1.0;
        let v = ell(&e)?;
        if (v - 1.0).abs() > 1e-12 {
            return Ok(CheckReport::fail(
                grid,
                tol,
                Witness::new(e, vec![v], format!("ell(e_{j}) must equal 1")),
                notes,
            ));
        }
    }

    for _ in 0..trials {
        let x: Vec<f64> = (0..dimension).map(|_| rng.gen_range(0.0..2.0)).collect();
        let v = ell(&x)?;

        // 3. bounds
        let mx = x.iter().cloned().fold(0.0, f64::max);
        let sm: f64 = x.iter().sum();
        if v < mx - tol * (1.0 + mx) || v > sm + tol * (1.0 + sm) {
            return Ok(CheckReport::fail(
                grid,
                tol,
                Witness::new(x, vec![v, mx, sm], "value escapes [max(x), sum(x)]"),
                notes,
            ));
        }

        // 1. homogeneity
        let c = rng.gen_range(0.1..10.0);
        let scaled: Vec<f64> = x.iter().map(|&v| c * v).collect();
        let vc = ell(&scaled)?;
        if (vc - c * v).abs() > 1e-10 * (1.0 + (c * v).abs()) {
            return Ok(CheckReport::fail(
                grid,
                tol,
                Witness::new(x, vec![c, vc, c * v], "homogeneity of order 1 fails"),
                notes,
            ));
        }

        // 4. max-decreasingness on small boxes. With corner signs
        // (-1)^(#coordinates left at the lower face), the alternating sum is
        // the first difference (card 1, must be >= 0: ell non-decreasing) or
        // the mixed second difference (card 2, must be <= 0).
        for card in 1..=2usize.min(dimension) {
            let mut idx: Vec<usize> = (0..dimension).collect();
            // Fisher-Yates prefix shuffle to pick `card` distinct coordinates
            for i in 0..card {
                let j = rng.gen_range(i..dimension);
                idx.swap(i, j);
            }
            let coords = &idx[..card];
            let mut hi = vec![0.0; card];
            for (slot, &j) in coords.iter().enumerate() {
                let h: f64 = rng.gen_range(0.0..1.0);
                hi[slot] = x[j] + h + 1e-6;
            }
            let mut alternating = 0.0;
            for mask in 0..(1u32 << card) {
                let mut corner = x.clone();
                let mut lower = card;
                for (slot, &j) in coords.iter().enumerate() {
                    if mask & (1 << slot) != 0 {
                        corner[j] = hi[slot];
                        lower -= 1;
                    }
                }
                let sign = if lower % 2 == 0 { 1.0 } else { -1.0 };
                alternating += sign * ell(&corner)?;
            }
            let bad = if card == 1 { alternating < -1e-10 } else { alternating > 1e-10 };
            if bad {
                let detail = if card == 1 {
                    "ell decreases in a coordinate"
                } else {
                    "two-coordinate box difference is positive"
                };
                return Ok(CheckReport::fail(
                    grid,
                    tol,
                    Witness::new(x, vec![alternating], detail),
                    notes,
                ));
            }
        }
    }

    Ok(CheckReport {
        verdict: Verdict::Pass,
        witness: None,
        grid,
        tolerance: tol,
        notes: format!("{notes}; {trials} randomized trials, seed {seed}"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(TailDependence::logistic(0.5, 2).is_err());
        assert!(TailDependence::logistic(f64::NAN, 2).is_err());
        assert!(TailDependence::logistic(2.0, 1).is_err());
        assert!(TailDependence::max(0).is_err());
        assert!(TailDependence::sum(2).is_ok());
    }

    #[test]
    fn ell_known_values() {
        let t = TailDependence::logistic(2.0, 2).unwrap();
        // (3^2 + 4^2)^(1/2) = 5
        assert!((t.ell(&[3.0, 4.0]).unwrap() - 5.0).abs() < 1e-14);
        let m = TailDependence::max(3).unwrap();
        assert_eq!(m.ell(&[0.3, 0.9, 0.1]).unwrap(), 0.9);
        let s = TailDependence::sum(3).unwrap();
        assert!((s.ell(&[0.3, 0.9, 0.1]).unwrap() - 1.3).abs() < 1e-15);
    }

    #[test]
    fn ell_rejects_bad_input() {
        let t = TailDependence::logistic(2.0, 2).unwrap();
        assert!(t.ell(&[0.5]).is_err());
        assert!(t.ell(&[0.5, -0.1]).is_err());
        assert!(t.ell(&[0.5, f64::INFINITY]).is_err());
        assert!(t.ell(&[0.5, f64::NAN]).is_err());
    }

    #[test]
    fn ell_scaled_form_handles_extremes() {
        // naive sum x_i^theta overflows at theta = 400; the scaled form must not
        let t = TailDependence::logistic(400.0, 2).unwrap();
        let v = t.ell(&[1e200, 1e200]).unwrap();
        assert!(v.is_finite() && v >= 1e200);
        assert_eq!(t.ell(&[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn pickands_is_ell_on_simplex() {
        let t = TailDependence::logistic(3.0, 3).unwrap();
        let w = [0.2, 0.3, 0.5];
        let a = t.pickands(&w).unwrap();
        assert!((a - t.ell(&w).unwrap()).abs() < 1e-15);
        assert!(t.pickands(&[0.2, 0.3, 0.4]).is_err()); // sums to 0.9
    }

    #[test]
    fn pickands_range_endpoints() {
        let m = TailDependence::max(4).unwrap();
        assert!((m.pickands(&[0.25; 4]).unwrap() - 0.25).abs() < 1e-15);
        let s = TailDependence::sum(4).unwrap();
        assert!((s.pickands(&[0.25; 4]).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal_a_values() {
        // logistic theta=4, k=4: 4^(1/4 - 1) = 2^(-3/2)
        let t = TailDependence::logistic(4.0, 4).unwrap();
        assert!((t.diagonal_a(4).unwrap() - 0.3535533905932738).abs() < 1e-16);
        // sum: always 1; max: 1/k
        assert_eq!(TailDependence::sum(3).unwrap().diagonal_a(5).unwrap(), 1.0);
        assert_eq!(TailDependence::max(3).unwrap().diagonal_a(4).unwrap(), 0.25);
        assert!(t.diagonal_a(1).is_err());
        assert_eq!(diagonal_a_unchecked(TailKind::Max, 1), 1.0);
    }

    #[test]
    fn axioms_pass_for_shipped_kinds() {
        for tail in [
            TailDependence::logistic(1.0, 2).unwrap(),
            TailDependence::logistic(2.5, 3).unwrap(),
            TailDependence::logistic(7.0, 4).unwrap(),
            TailDependence::max(3).unwrap(),
            TailDependence::sum(4).unwrap(),
        ] {
            let report = check_stdf_axioms(&tail, 300, 42).unwrap();
            assert!(report.is_pass(), "{tail:?}: {report:?}");
        }
    }

    #[test]
    fn axioms_reject_a_non_homogeneous_candidate() {
        let report =
            check_stdf_axioms_fn(|x| Ok(x.iter().sum::<f64>() + 0.1), 2, 200, 7).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
    }

    #[test]
    fn axioms_reject_a_candidate_below_the_max_bound() {
        // the coordinate mean is homogeneous but equals 1/2 on unit vectors,
        // so the unit-vector clause catches it
        let report = check_stdf_axioms_fn(
            |x| Ok(x.iter().sum::<f64>() / x.len() as f64),
            2,
            200,
            11,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
    }

    #[test]
    fn axioms_reject_a_concave_dependence_profile() {
        // (x+y) * (max(w, 1-w) + 0.3 sin(pi w)) with w = y/(x+y) stays
        // homogeneous, equal to 1 on unit vectors, monotone, and within the
        // max/sum bounds, but the sine bump makes the profile concave, so
        // two-coordinate box differences turn positive.
        let report = check_stdf_axioms_fn(
            |x| {
                let s = x[0] + x[1];
                if s == 0.0 {
                    return Ok(0.0);
                }
                let w = x[1] / s;
                Ok(s * (w.max(1.0 - w) + 0.3 * (std::f64::consts::PI * w).sin()))
            },
            2,
            400,
            13,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Fail, "{report:?}");
        let w = report.witness.unwrap();
        assert!(w.detail.contains("box") || w.detail.contains("escapes"), "{}", w.detail);
    }

    #[test]
    fn logistic_theta_one_is_sum() {
        let t = TailDependence::logistic(1.0, 3).unwrap();
        let s = TailDependence::sum(3).unwrap();
        for x in [[0.1, 0.2, 0.3], [1.0, 0.0, 2.0], [0.7, 0.7, 0.7]] {
            assert!((t.ell(&x).unwrap() - s.ell(&x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn large_theta_approaches_max() {
        let t = TailDependence::logistic(200.0, 2).unwrap();
        let x = [0.4, 0.9];
        assert!((t.ell(&x).unwrap() - 0.9).abs() < 1e-2);
    }
}
