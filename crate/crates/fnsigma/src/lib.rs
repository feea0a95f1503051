//! Evaluation of the entire function
//! F(x) = sum_k sin(n gamma_k)/sin(gamma_k) * x^k / (k! G(mu - sigma k)),
//! gamma_k = (k+1) pi / (2n), a finite combination of Wright functions,
//! by high-precision reference series and by its large-|x| asymptotic
//! expansions, with exact selection of the expansion regime.
//!
//! Modules:
//! - [`params`]: exact rational inputs, angle arithmetic, regime thresholds.
//! - [`numerics`]: precision contexts and gamma kernels.
//! - [`series`]: oracle evaluation by direct Taylor summation.
//! - [`psi_asym`]: asymptotics of the companion function Psi(z).
//! - [`f_asym`]: composite expansions of F for x -> +/-inf.
//! - [`harness`]: reference-table reproduction, error metrics, sweeps.

pub mod error;
pub mod f_asym;
pub mod harness;
pub mod numerics;
pub mod params;
pub mod psi_asym;
pub mod series;

pub use error::{Error, Result};
pub use f_asym::{Component, ExpansionResult, Regime, RetainedExp, Side};
pub use numerics::{BigComplex, BigReal, PrecisionCtx};
pub use params::{DerivedParams, Parameters, PiAngle, Threshold};
pub use psi_asym::{AsymCoeffs, SectorClass, SectorTag, TruncPolicy};
pub use series::SeriesResult;
