#![allow(dead_code)]

use gyrokit::models::fixtures::{self, ChainFixture};
use gyrokit::models::CayleyGyro;
use gyrokit::sets::FinSubset;
use gyrokit::subgyro::io::{parse_base_doc, parse_chain_doc};
use gyrokit::subgyro::{BaseFamily, NeighborhoodChain};
use gyrokit::sets::FiniteAlgebra;

pub fn set(order: usize, v: &[usize]) -> FinSubset {
    FinSubset::from_indices(order, v.iter().copied()).unwrap()
}

/// Every bundled finite chain with its model.
pub fn finite_chains() -> Vec<(&'static str, CayleyGyro, NeighborhoodChain<FinSubset>)> {
    fixtures::CHAINS
        .iter()
        .filter_map(|c: &ChainFixture| {
            let model = c.model?.load();
            let chain = parse_chain_doc(c.document).unwrap().finite_chain(&model).unwrap();
            Some((c.name, model, chain))
        })
        .collect()
}

pub fn base_of(name: &str) -> Option<(CayleyGyro, BaseFamily<FinSubset>)> {
    let (f, doc) = fixtures::BASES.iter().find(|(f, _)| f.name == name)?;
    let model = f.load();
    let base = parse_base_doc(doc).unwrap().family(&model).unwrap();
    Some((model, base))
}

/// The strongly invariant base made of every gyr-invariant symmetric
/// neighbourhood of a small model.
pub fn invariant_base(model: &CayleyGyro) -> BaseFamily<FinSubset> {
    let sets = gyrokit::sets::finite::symmetric_neighborhoods(model)
        .into_iter()
        .filter(|u| gyrokit::sets::finite::gyr_invariance_witness(model, u).unwrap().is_none())
        .collect();
    BaseFamily::new(&FiniteAlgebra::new(model), sets).unwrap()
}
