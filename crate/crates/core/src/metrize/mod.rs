//! Dyadic prenorm construction, coset spaces and the quotient metric.

pub mod audit;
pub mod coset;
pub mod dyadic;
pub mod family;
pub mod prenorm;
pub mod quotient;

pub use audit::{prenorm_audit, prenorm_audit_radial, RadialCarrier};
pub use coset::{coset_space, CosetSpace};
pub use dyadic::Dyadic;
pub use family::{build_dyadic, PrenormFamily, MAX_DEPTH};
pub use prenorm::{Construction, FinitePrenorm};
pub use quotient::{ball_correspondence, probe_radii, quotient_metric, BallComparison, QuotientMetric, Variant};
