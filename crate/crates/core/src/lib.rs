//! Lower bounds on Borsuk numbers of finite-dimensional `l_p` spaces.
//!
//! The Borsuk number `b(M^d)` of a `d`-dimensional normed space is the least
//! number of strictly-smaller-diameter parts that suffice to split every
//! bounded non-singleton subset. This crate builds the classical lifted
//! (0,1)-vector point sets that force large Borsuk numbers in `l_p^d`,
//! evaluates the Frankl–Wilson counting bound exactly, and optimizes the
//! asymptotic growth constant `c(p)` with `b(l_p^d) >= (c(p)+o(1))^sqrt(d)`.
//!
//! Modules:
//! - [`numeric`]: exact binomials, entropy, prime-power tests.
//! - [`lifting`]: the point set `V`, the lifting map, and the quadratic
//!   intersection-to-distance law.
//! - [`bound`]: end-to-end bound certificates and parameter search.
//! - [`asymptotic`]: the Stirling-limit exponent and the `c(p)` curve.
//! - [`oracle`]: brute-force verification of every closed form at desk scale.

pub mod asymptotic;
pub mod bound;
pub mod lifting;
pub mod numeric;
pub mod oracle;

pub use asymptotic::AsymptoticOptimum;
pub use bound::{BoundCertificate, Rejection};
pub use lifting::{CharacteristicVector, Lambda, LiftedConfiguration, Parameters, QuadraticForm};
pub use numeric::BigCount;
pub use oracle::OracleReport;
