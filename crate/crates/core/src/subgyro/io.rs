//! Chain and base documents.
//!
//! ```text
//! {"kind":"finite","model":"z8.json","sets":[[0,1,2,3,4,5,6,7],[0,1,7],[0]]}
//! {"kind":"radial","balls":[{"r":"1/4","closed":true},{"r":"1/16"},{"r":"0"}]}
//! {"kind":"radial","model":{"kind":"einstein","c":"1"},"balls":[...]}
//! {"sets":[[0],[0,3]]}
//! ```
//!
//! A finite chain's `model` is a path resolved by the caller; radial chains
//! default to the Möbius disk. Balls are closed unless `"closed": false`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::models::cayley::CayleyGyro;
use crate::rational::parse_rational;
use crate::sets::finite::FinSubset;
use crate::sets::radial::{RadialBall, RadialModel};
use crate::sets::FiniteAlgebra;

use super::chain::{BaseFamily, NeighborhoodChain};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BallDoc {
    pub r: String,
    #[serde(default = "closed_default")]
    pub closed: bool,
}

fn closed_default() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ChainDoc {
    Finite {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        model: Option<String>,
        sets: Vec<Vec<usize>>,
    },
    Radial {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        model: Option<RadialModel>,
        balls: Vec<BallDoc>,
    },
}

pub fn parse_chain_doc(text: &str) -> Result<ChainDoc> {
    Ok(serde_json::from_str(text)?)
}

fn subset(order: usize, indices: &[usize]) -> Result<FinSubset> {
    FinSubset::from_indices(order, indices.iter().copied())
}

impl ChainDoc {
    /// The model path of a finite chain document.
    pub fn model_path(&self) -> Option<&str> {
        match self {
            ChainDoc::Finite { model, .. } => model.as_deref(),
            ChainDoc::Radial { .. } => None,
        }
    }

    pub fn is_radial(&self) -> bool {
        matches!(self, ChainDoc::Radial { .. })
    }

    /// Builds the chain of a finite document over `model`.
    pub fn finite_chain(&self, model: &CayleyGyro) -> Result<NeighborhoodChain<FinSubset>> {
        match self {
            ChainDoc::Finite { sets, .. } => {
                let sets = sets.iter().map(|s| subset(model.order(), s)).collect::<Result<Vec<_>>>()?;
                NeighborhoodChain::new(sets)
            }
            ChainDoc::Radial { .. } => Err(crate::Error::Malformed("expected a finite chain".into())),
        }
    }

    /// Builds the chain of a radial document.
    pub fn radial_chain(&self) -> Result<(RadialModel, NeighborhoodChain<RadialBall>)> {
        match self {
            ChainDoc::Radial { model, balls } => {
                let model = match model {
                    Some(RadialModel::Einstein { c }) => RadialModel::einstein(c.clone())?,
                    _ => RadialModel::Mobius,
                };
                let sets = balls
                    .iter()
                    .map(|b| RadialBall::new(model.clone(), parse_rational(&b.r)?, b.closed))
                    .collect::<Result<Vec<_>>>()?;
                Ok((model, NeighborhoodChain::new(sets)?))
            }
            ChainDoc::Finite { .. } => Err(crate::Error::Malformed("expected a radial chain".into())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseDoc {
    pub sets: Vec<Vec<usize>>,
}

pub fn parse_base_doc(text: &str) -> Result<BaseDoc> {
    Ok(serde_json::from_str(text)?)
}

impl BaseDoc {
    pub fn family(&self, model: &CayleyGyro) -> Result<BaseFamily<FinSubset>> {
        let sets = self
            .sets
            .iter()
            .map(|s| subset(model.order(), s))
            .collect::<Result<Vec<_>>>()?;
        BaseFamily::new(&FiniteAlgebra::new(model), sets)
    }
}
