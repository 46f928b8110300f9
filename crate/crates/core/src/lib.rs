//! Computational workbench for gyrogroups.
//!
//! The crate is organised bottom-up:
//!
//! * [`gyro`]: the [`Gyrogroup`](gyro::Gyrogroup) interface, derived gyrations,
//!   and the axiom / identity verification engines producing [`CheckReport`]s.
//! * [`models`]: concrete realizations (Möbius disk, Einstein ball, finite
//!   Cayley tables, group adapters) and the JSON model file format.
//! * [`sets`]: set-level gyro-arithmetic on finite carriers and closed-form
//!   radius arithmetic for origin-centered balls.
//! * [`subgyro`]: subgyrogroup predicates, invariant generation, neighborhood
//!   chains, neutrality and the coset-space set-inclusion kernels.
//! * [`metrize`]: the dyadic family, the prenorm `N`, the coset space `G/H`
//!   and its quotient metric.

pub mod error;
pub mod gyro;
pub mod metrize;
pub mod models;
pub mod rational;
pub mod sets;
pub mod subgyro;

pub use error::{Error, Result};
pub use gyro::report::{CheckReport, ReportBuilder, Verdict, Violation};
pub use gyro::{Gyrogroup, Strategy};
