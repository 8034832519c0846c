//! Exact arithmetic for the Ravenel complex `C(n)`, its cohomology with
//! Morava and truncated coefficients, the degree bookkeeping for `v`-power
//! ideals, and the Toda-style generator tables used in the search routines.

pub mod cohomology;
pub mod complex;
pub mod degree;
pub mod error;
pub mod fp;
pub mod l33;
pub mod suite;
pub mod toda;

pub use cohomology::{CoefficientProfile, CohomologyEngine, SliceCohomology};
pub use complex::{BiDegree, ComplexParams, Element, GeneratorId, Monomial, RavenelComplex, Sign};
pub use degree::{DigitVector, IdealSpec};
pub use error::{Error, Result};
pub use fp::{FpMatrix, PrimeModulus};
pub use suite::{run_all, run_check, CheckReport, CheckStatus};
pub use toda::{SearchHit, SkeletonCells, TodaTable};
