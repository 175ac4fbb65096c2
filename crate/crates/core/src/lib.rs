//! Exact and numerical tools around parity-refined partitions into squares.
//!
//! The crate splits n-partitions into squares by the parity of their number
//! of parts, tracks the signed difference a_2(n) both by dynamic programming
//! and by expanding its infinite-product generating function, and verifies
//! the analytic machinery that controls a_2(n) asymptotically: quadratic
//! Gauss sums, the singular series lambda*_{a,b} with its uniform bound,
//! Wright's modular transformation for H_2, and the saddle-point main terms
//! with their Meinardus-form cross-identities.
//!
//! Modules:
//! - [`series`]: exact counting (DP, product expansion, enumeration oracle)
//! - [`gauss`]: quadratic Gauss sums, closed form and direct
//! - [`zeta`]: Riemann/Hurwitz zeta and the Dirichlet series D(s)
//! - [`lambda`]: Lambda*/lambda*, bound scans, envelopes, f(t)
//! - [`modular`]: Wright transformation and product-side verifications
//! - [`asympt`]: saddle-point parameters, main terms, Meinardus constants

// Negated float comparisons in the domain guards are NaN-rejecting on
// purpose: `!(y > 0.0)` refuses NaN, `y <= 0.0` would wave it through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asympt;
pub mod error;
pub mod gauss;
pub mod lambda;
pub mod modular;
pub mod series;
pub mod zeta;

pub use error::{Error, Result};
pub use gauss::ReducedFraction;
pub use series::{CoefficientSeries, ParityRow, ProductSpec};
pub use zeta::SpecialConstants;
