//! Closed-form arithmetic on origin-centred balls of the Möbius disk and the
//! Einstein ball.
//!
//! For balls `B(r)` and `B(s)` centred at the origin, `{a⊕b : a∈B(r), b∈B(s)}`
//! is the ball of radius `(r+s)/(1+rs/c²)` (with `c = 1` for Möbius). The
//! bound is attained at collinear boundary points, and the image is a
//! connected rotation-invariant set containing 0, so it fills the ball. The
//! sum is closed when both operands are closed and open otherwise.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::format_rational;

/// The analytic model a radial ball lives in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RadialModel {
    Mobius,
    Einstein {
        #[serde(with = "rational_string")]
        c: BigRational,
    },
}

pub(crate) mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{format_rational, parse_rational};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

impl RadialModel {
    pub fn einstein(c: BigRational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::Domain(format!("speed bound c = {} must be positive", format_rational(&c))));
        }
        Ok(RadialModel::Einstein { c })
    }

    /// Supremum of the norms in the carrier.
    pub fn bound(&self) -> BigRational {
        match self {
            RadialModel::Mobius => BigRational::one(),
            RadialModel::Einstein { c } => c.clone(),
        }
    }

    fn name(&self) -> String {
        match self {
            RadialModel::Mobius => "mobius".into(),
            RadialModel::Einstein { c } => format!("einstein(c={})", format_rational(c)),
        }
    }

    fn check_radius(&self, r: &BigRational) -> Result<()> {
        if r.is_negative() || *r >= self.bound() {
            return Err(Error::Domain(format!(
                "radius {} outside [0, {})",
                format_rational(r),
                format_rational(&self.bound())
            )));
        }
        Ok(())
    }

    fn compose(&self, r: &BigRational, s: &BigRational) -> BigRational {
        let b = self.bound();
        (r + s) / (BigRational::one() + r * s / (&b * &b))
    }
}

/// Radius of the elementwise sum of two centred balls with radii `r` and `s`.
pub fn radial_oplus(r: &BigRational, s: &BigRational, model: &RadialModel) -> Result<BigRational> {
    model.check_radius(r)?;
    model.check_radius(s)?;
    Ok(model.compose(r, s))
}

/// An origin-centred ball. The whole carrier is represented as the open ball
/// whose radius equals the model bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialBall {
    model: RadialModel,
    radius: BigRational,
    closed: bool,
}

impl RadialBall {
    /// A ball with `0 ≤ r < bound`. Open balls must have positive radius so
    /// that they contain 0.
    pub fn new(model: RadialModel, radius: BigRational, closed: bool) -> Result<Self> {
        model.check_radius(&radius)?;
        if !closed && radius.is_zero() {
            return Err(Error::Domain("an open ball of radius 0 is empty".into()));
        }
        Ok(RadialBall { model, radius, closed })
    }

    /// The one-point set `{0}`.
    pub fn zero(model: RadialModel) -> Self {
        RadialBall {
            model,
            radius: BigRational::zero(),
            closed: true,
        }
    }

    pub fn whole(model: RadialModel) -> Self {
        let radius = model.bound();
        RadialBall {
            model,
            radius,
            closed: false,
        }
    }

    pub fn model(&self) -> &RadialModel {
        &self.model
    }

    pub fn radius(&self) -> &BigRational {
        &self.radius
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_whole(&self) -> bool {
        !self.closed && self.radius == self.model.bound()
    }

    fn same_model(&self, other: &Self) -> Result<()> {
        if self.model == other.model {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: self.model.name(),
                right: other.model.name(),
            })
        }
    }

    /// `{a⊕b : a∈self, b∈other}`.
    pub fn oplus(&self, other: &Self) -> Result<Self> {
        self.same_model(other)?;
        if self.is_whole() || other.is_whole() {
            return Ok(Self::whole(self.model.clone()));
        }
        Ok(RadialBall {
            model: self.model.clone(),
            radius: self.model.compose(&self.radius, &other.radius),
            closed: self.closed && other.closed,
        })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_model(other)?;
        Ok(match self.radius.cmp(&other.radius) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => !self.closed || other.closed,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.is_subset(other)
            .map(|inside| if inside { self.clone() } else { other.clone() })
    }

    /// Membership of a point with squared norm `norm_sq`.
    pub fn contains_norm_sq(&self, norm_sq: &BigRational) -> bool {
        let r2 = &self.radius * &self.radius;
        if self.closed {
            *norm_sq <= r2
        } else {
            *norm_sq < r2
        }
    }

    /// A norm realised in `self` but not in `other`, when `self ⊄ other`.
    pub fn norm_outside(&self, other: &Self) -> Result<Option<BigRational>> {
        if self.is_subset(other)? {
            return Ok(None);
        }
        Ok(Some(if self.radius == other.radius || self.closed {
            self.radius.clone()
        } else {
            (&self.radius + &other.radius) / BigRational::from_integer(2.into())
        }))
    }
}

impl fmt::Display for RadialBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_whole() {
            return f.write_str("whole");
        }
        let kind = if self.closed { "closed" } else { "open" };
        write!(f, "{kind}({})", format_rational(&self.radius))
    }
}
