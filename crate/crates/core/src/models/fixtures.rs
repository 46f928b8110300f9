//! Bundled finite models, neighbourhood chains and base families.
//!
//! `g8` and `g16` are gyrogroups that are not groups; they were produced by
//! `examples/twisted_search.rs` and ship with their exhaustive axiom
//! certificates (`*.cert.json`).

use super::cayley::CayleyGyro;
use super::io::table_load;

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub document: &'static str,
}

impl Fixture {
    pub fn load(&self) -> CayleyGyro {
        table_load(self.document).unwrap_or_else(|e| panic!("bundled fixture {} is invalid: {e}", self.name))
    }
}

macro_rules! fixture {
    ($name:literal) => {
        Fixture {
            name: $name,
            document: include_str!(concat!("../../fixtures/", $name, ".json")),
        }
    };
}

pub const Z4: Fixture = fixture!("z4");
pub const Z6: Fixture = fixture!("z6");
pub const Z8: Fixture = fixture!("z8");
pub const Z12: Fixture = fixture!("z12");
pub const S3: Fixture = fixture!("s3");
pub const G8: Fixture = fixture!("g8");
pub const G16: Fixture = fixture!("g16");

pub const ALL: [Fixture; 7] = [Z4, Z6, Z8, Z12, S3, G8, G16];

/// Certificates shipped next to the nondegenerate fixtures.
pub const CERTIFICATES: [(&str, &str); 2] = [
    ("g8", include_str!("../../fixtures/g8.cert.json")),
    ("g16", include_str!("../../fixtures/g16.cert.json")),
];

pub fn all() -> impl Iterator<Item = (&'static str, CayleyGyro)> {
    ALL.iter().map(|f| (f.name, f.load()))
}

pub fn by_name(name: &str) -> Option<Fixture> {
    ALL.iter().copied().find(|f| f.name == name)
}

/// A bundled neighbourhood chain. `model` is `None` for radial chains.
#[derive(Debug, Clone, Copy)]
pub struct ChainFixture {
    pub name: &'static str,
    pub model: Option<Fixture>,
    pub document: &'static str,
}

macro_rules! chain_fixture {
    ($name:literal, $model:expr) => {
        ChainFixture {
            name: $name,
            model: $model,
            document: include_str!(concat!("../../fixtures/", $name, "_chain.json")),
        }
    };
}

pub const CHAINS: [ChainFixture; 8] = [
    chain_fixture!("z4", Some(Z4)),
    chain_fixture!("z6", Some(Z6)),
    chain_fixture!("z8", Some(Z8)),
    chain_fixture!("z12", Some(Z12)),
    chain_fixture!("s3", Some(S3)),
    chain_fixture!("g8", Some(G8)),
    chain_fixture!("g16", Some(G16)),
    chain_fixture!("mobius", None),
];

/// Bundled base families, keyed by the model they live on.
pub const BASES: [(Fixture, &str); 4] = [
    (Z8, include_str!("../../fixtures/z8_base.json")),
    (Z12, include_str!("../../fixtures/z12_base.json")),
    (S3, include_str!("../../fixtures/s3_base.json")),
    (G8, include_str!("../../fixtures/g8_base.json")),
];
