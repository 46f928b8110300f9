//! Set-level gyro-arithmetic, shared by the subgyrogroup and metrization
//! layers through [`SetAlgebra`].

pub mod finite;
pub mod radial;

use std::fmt;

use num_rational::BigRational;

use crate::error::Result;
use crate::models::cayley::CayleyGyro;

pub use finite::{gyr_image, parse_index_set, set_neg, set_oplus, FinSubset};
pub use radial::{radial_oplus, RadialBall, RadialModel};

/// Operations the dyadic construction needs from a family of sets.
pub trait SetAlgebra {
    type Set: Clone + PartialEq + fmt::Debug + fmt::Display;
    /// What membership is tested on: an element index for finite carriers,
    /// a squared norm for radial balls.
    type Point;

    /// `{0}`.
    fn zero_set(&self) -> Self::Set;

    fn whole(&self) -> Self::Set;

    fn oplus(&self, a: &Self::Set, b: &Self::Set) -> Result<Self::Set>;

    fn neg(&self, a: &Self::Set) -> Result<Self::Set>;

    fn is_subset(&self, a: &Self::Set, b: &Self::Set) -> Result<bool>;

    fn intersection(&self, a: &Self::Set, b: &Self::Set) -> Result<Self::Set>;

    fn contains(&self, a: &Self::Set, p: &Self::Point) -> bool;

    /// `⋃_{t≥0} h⊕(h⊕(…⊕s))`, the least superset of `s` closed under `h⊕·`.
    fn left_saturate(&self, h: &Self::Set, s: &Self::Set) -> Result<Self::Set>;

    /// Describes a point of `a \ b`, when `a ⊄ b`.
    fn witness_outside(&self, a: &Self::Set, b: &Self::Set) -> Result<Option<String>>;

    /// A pair `(x, y)` with `gyr[x,y](a) ≠ a`, described, or `None`.
    fn gyr_invariance_witness(&self, a: &Self::Set) -> Result<Option<String>>;

    /// `0 ∈ a` and `⊖a = a`.
    fn is_symmetric_neighborhood(&self, a: &Self::Set) -> Result<bool> {
        Ok(self.is_subset(&self.zero_set(), a)? && self.neg(a)? == *a)
    }
}

/// Subsets of a finite Cayley model.
#[derive(Debug, Clone, Copy)]
pub struct FiniteAlgebra<'a> {
    pub model: &'a CayleyGyro,
}

impl<'a> FiniteAlgebra<'a> {
    pub fn new(model: &'a CayleyGyro) -> Self {
        FiniteAlgebra { model }
    }
}

impl SetAlgebra for FiniteAlgebra<'_> {
    type Set = FinSubset;
    type Point = usize;

    fn zero_set(&self) -> FinSubset {
        FinSubset::from_indices(self.model.order(), [self.model.zero_index()]).expect("zero index in range")
    }

    fn whole(&self) -> FinSubset {
        FinSubset::full(self.model.order())
    }

    fn oplus(&self, a: &FinSubset, b: &FinSubset) -> Result<FinSubset> {
        set_oplus(self.model, a, b)
    }

    fn neg(&self, a: &FinSubset) -> Result<FinSubset> {
        set_neg(self.model, a)
    }

    fn is_subset(&self, a: &FinSubset, b: &FinSubset) -> Result<bool> {
        a.is_subset(b)
    }

    fn intersection(&self, a: &FinSubset, b: &FinSubset) -> Result<FinSubset> {
        a.intersection(b)
    }

    fn contains(&self, a: &FinSubset, p: &usize) -> bool {
        a.contains(*p)
    }

    fn left_saturate(&self, h: &FinSubset, s: &FinSubset) -> Result<FinSubset> {
        let mut acc = *s;
        loop {
            let next = acc.union(&set_oplus(self.model, h, &acc)?)?;
            if next == acc {
                return Ok(acc);
            }
            acc = next;
        }
    }

    fn witness_outside(&self, a: &FinSubset, b: &FinSubset) -> Result<Option<String>> {
        Ok(a.first_outside(b)?.map(|i| self.model.label_of(i).to_string()))
    }

    fn gyr_invariance_witness(&self, a: &FinSubset) -> Result<Option<String>> {
        let m = self.model;
        Ok(finite::gyr_invariance_witness(m, a)?.map(|(x, y)| format!("gyr[{},{}]", m.label_of(x), m.label_of(y))))
    }
}

/// Origin-centred balls of an analytic model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialAlgebra {
    pub model: RadialModel,
}

impl RadialAlgebra {
    pub fn new(model: RadialModel) -> Self {
        RadialAlgebra { model }
    }
}

impl SetAlgebra for RadialAlgebra {
    type Set = RadialBall;
    type Point = BigRational;

    fn zero_set(&self) -> RadialBall {
        RadialBall::zero(self.model.clone())
    }

    fn whole(&self) -> RadialBall {
        RadialBall::whole(self.model.clone())
    }

    fn oplus(&self, a: &RadialBall, b: &RadialBall) -> Result<RadialBall> {
        a.oplus(b)
    }

    fn neg(&self, a: &RadialBall) -> Result<RadialBall> {
        Ok(a.clone())
    }

    fn is_subset(&self, a: &RadialBall, b: &RadialBall) -> Result<bool> {
        a.is_subset(b)
    }

    fn intersection(&self, a: &RadialBall, b: &RadialBall) -> Result<RadialBall> {
        a.intersection(b)
    }

    fn contains(&self, a: &RadialBall, norm_sq: &BigRational) -> bool {
        a.contains_norm_sq(norm_sq)
    }

    /// A nontrivial centred ball keeps growing under `h⊕·` and its radii
    /// converge to the bound, so the union is the whole carrier.
    fn left_saturate(&self, h: &RadialBall, s: &RadialBall) -> Result<RadialBall> {
        s.is_subset(&self.whole())?;
        if h.is_subset(&self.zero_set())? {
            Ok(s.clone())
        } else {
            Ok(self.whole())
        }
    }

    fn witness_outside(&self, a: &RadialBall, b: &RadialBall) -> Result<Option<String>> {
        Ok(a.norm_outside(b)?.map(|r| format!("|x|={}", crate::rational::format_rational(&r))))
    }

    /// Gyrations of both models act as rotations, so centred balls are
    /// invariant.
    fn gyr_invariance_witness(&self, _a: &RadialBall) -> Result<Option<String>> {
        Ok(None)
    }
}
