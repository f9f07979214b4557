//! Shared fixtures for the criterion benchmarks.

use archimax::{ArchimaxCopula, ExchangeableSample, Generator, Margin, TailDependence};

/// A mid-sized working model exercising the non-trivial code paths:
/// curved generator, logistic tail, four exchangeable coordinates.
pub fn working_sample() -> ExchangeableSample {
    let copula = ArchimaxCopula::new(
        Generator::gumbel(2.5)
            .unwrap()
            .with_dimension_hint(4)
            .unwrap(),
        TailDependence::logistic(2.5, 4).unwrap(),
    )
    .unwrap();
    ExchangeableSample::new(Margin::uniform01(), copula, 4).unwrap()
}
