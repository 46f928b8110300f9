//! Concrete gyrogroups and the model file format.

pub mod cayley;
pub mod einstein;
pub mod fixtures;
pub mod group;
pub mod io;
pub mod mobius;

pub use cayley::{CayleyGyro, CayleyTable};
pub use einstein::{einstein_add, einstein_gamma, EinsteinBall, Vec3};
pub use group::{Cyclic, GroupAdapter, Perm, PermGroup};
pub use io::{load_model, table_emit, table_load, Model, ModelDoc};
pub use mobius::{
    mobius_add, mobius_add_exact, mobius_gyr_factor, mobius_gyr_factor_exact, ExactComplex, MobiusDisk,
    MobiusExact,
};
