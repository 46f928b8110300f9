//! Tabulated prenorms on finite carriers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::models::cayley::CayleyGyro;
use crate::sets::FiniteAlgebra;

use super::dyadic::Dyadic;
use super::family::PrenormFamily;

/// How `N` is obtained from the dyadic family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `f(x) = inf{q : x ∈ V(q)}`.
    #[default]
    Infimum,
    /// `N(x) = sup_y |f(x⊕y) − f(y)|`. This is a gyr-invariant prenorm
    /// whenever `f` is gyr-invariant, and it equals `f` when `f` already is
    /// symmetric and subadditive.
    Regularized,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Infimum => "infimum",
            Construction::Regularized => "regularized",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "infimum" => Ok(Construction::Infimum),
            "regularized" => Ok(Construction::Regularized),
            other => Err(Error::Malformed(format!("unknown construction {other:?}"))),
        }
    }
}

/// `N` tabulated over a finite carrier.
#[derive(Debug, Clone)]
pub struct FinitePrenorm<'a> {
    model: &'a CayleyGyro,
    family: PrenormFamily<FiniteAlgebra<'a>>,
    construction: Construction,
    values: Vec<Dyadic>,
}

impl<'a> FinitePrenorm<'a> {
    pub fn new(family: PrenormFamily<FiniteAlgebra<'a>>, construction: Construction) -> Self {
        let model = family.algebra().model;
        let n = model.order();
        let f: Vec<Dyadic> = (0..n).map(|x| family.eval(&x)).collect();
        let values = match construction {
            Construction::Infimum => f,
            Construction::Regularized => (0..n)
                .map(|x| {
                    (0..n)
                        .map(|y| f[model.add(x, y)].abs_diff(f[y]))
                        .max()
                        .unwrap_or(Dyadic::ZERO)
                })
                .collect(),
        };
        FinitePrenorm {
            model,
            family,
            construction,
            values,
        }
    }

    pub fn model(&self) -> &'a CayleyGyro {
        self.model
    }

    pub fn family(&self) -> &PrenormFamily<FiniteAlgebra<'a>> {
        &self.family
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    /// `N(x)`.
    pub fn n(&self, x: usize) -> Dyadic {
        self.values[x]
    }

    pub fn values(&self) -> &[Dyadic] {
        &self.values
    }
}
