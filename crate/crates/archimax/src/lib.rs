//! Numerical core for Archimax dependence models.
//!
//! The crate provides:
//!
//! * validated Archimedean [`generators`] with analytic derivatives and a
//!   numerical n-monotonicity check, plus the Williamson transform of a
//!   radial law;
//! * stable tail dependence functions ([`tail_dependence`]) with axiom
//!   checks;
//! * the Archimax copula itself ([`copula`]) and its limiting/special cases;
//! * exact distributions of extremes of exchangeable samples
//!   ([`order_stats`]): largest, second largest, smallest, second smallest;
//! * analytic criteria and empirical verifiers for hazard-rate,
//!   reverse-hazard, likelihood-ratio and usual stochastic orderings of
//!   those extremes ([`stochastic_orders`]), with majorization utilities;
//! * proportional-hazards models with heterogeneous exponents coupled by an
//!   Archimax copula ([`phr`]), and comparison checks driven by generator
//!   dominance plus weak majorization.
//!
//! Every verifier returns a [`CheckReport`] (verdict + witness + the grid and
//! tolerance it used) instead of a bare boolean, so failures are actionable
//! and "could not decide" is distinct from "holds".

pub mod copula;
pub mod error;
pub mod generators;
pub mod order_stats;
pub mod phr;
pub mod report;
pub mod stochastic_orders;
pub mod tail_dependence;

pub use copula::ArchimaxCopula;
pub use error::{Error, Result};
pub use generators::{
    check_n_monotone_fn, williamson_phi, ExponentialRadial, Family, Generator, PointMassRadial,
    QuadratureSpec, ScalarCdf, UniformRadial,
};
pub use order_stats::{Baseline, ExchangeableSample, Margin, OrderStat};
pub use phr::{
    copula_dominance_check, default_scaling_values, generator_dominance_conditions,
    phr_majorization_check, PhrModel,
};
pub use report::{CheckReport, Grid, Spacing, Verdict, Witness};
pub use stochastic_orders::{
    check_maxima_order_equivalence, check_minima_order_equivalence, criterion_hr, criterion_lr,
    criterion_rh, majorize, p_smaller, schur_convex_probe, verify_order, weak_sub_majorize,
    weak_super_majorize, OrderPart, StochOrder,
};
pub use tail_dependence::{check_stdf_axioms, check_stdf_axioms_fn, TailDependence, TailKind};
