//! Subgyrogroup predicates and constructions on finite models, plus
//! neighbourhood chains over any [`SetAlgebra`](crate::sets::SetAlgebra).

pub mod chain;
pub mod io;
pub mod kernels;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::cayley::CayleyGyro;
use crate::sets::finite::{gyr_image, is_symmetric_neighborhood, set_neg, set_oplus, FinSubset};
use crate::sets::radial::{RadialBall, RadialModel};

pub use chain::{chain_intersection, finite_chain_subgroup, validate_chain, BaseFamily, Level, NeighborhoodChain};
pub use kernels::{is_neutral, is_neutral_mirrored, saturation_check, verify_char_inclusion};

/// A yes/no answer that carries a witness whenever it is no.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Outcome<W> {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<W>,
}

impl<W> Outcome<W> {
    pub fn yes() -> Self {
        Outcome { holds: true, witness: None }
    }

    pub fn no(witness: W) -> Self {
        Outcome {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Why a set is not a subgyrogroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SubgyroWitness {
    MissingIdentity,
    NotSymmetric { element: usize },
    NotClosed { a: usize, b: usize },
}

impl fmt::Display for SubgyroWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubgyroWitness::MissingIdentity => f.write_str("0 is missing"),
            SubgyroWitness::NotSymmetric { element } => write!(f, "⊖{element} is missing"),
            SubgyroWitness::NotClosed { a, b } => write!(f, "{a}⊕{b} is outside"),
        }
    }
}

fn nonempty(h: &FinSubset) -> Result<()> {
    if h.is_empty() {
        Err(Error::Precondition("the empty set is not a candidate subgyrogroup".into()))
    } else {
        Ok(())
    }
}

/// `0 ∈ H`, `⊖H = H` and `H⊕H ⊆ H`. The witness is the first failure in that
/// order, with pairs scanned lexicographically.
pub fn is_subgyrogroup(model: &CayleyGyro, h: &FinSubset) -> Result<Outcome<SubgyroWitness>> {
    nonempty(h)?;
    set_neg(model, h)?;
    if !h.contains(model.zero_index()) {
        return Ok(Outcome::no(SubgyroWitness::MissingIdentity));
    }
    if let Some(element) = h.iter().find(|&x| !h.contains(model.neg(x))) {
        return Ok(Outcome::no(SubgyroWitness::NotSymmetric { element }));
    }
    for a in h.iter() {
        for b in h.iter() {
            if !h.contains(model.add(a, b)) {
                return Ok(Outcome::no(SubgyroWitness::NotClosed { a, b }));
            }
        }
    }
    Ok(Outcome::yes())
}

/// Whether `gyr[a,h](H) = H` for all `a ∈ G`, `h ∈ H`; the witness is `(a, h)`.
pub fn is_l_subgyrogroup(model: &CayleyGyro, h: &FinSubset) -> Result<Outcome<(usize, usize)>> {
    if let Some(w) = is_subgyrogroup(model, h)?.witness {
        return Err(Error::Precondition(format!("{h} is not a subgyrogroup: {w}")));
    }
    for a in 0..model.order() {
        for x in h.iter() {
            if gyr_image(model, a, x, h)? != *h {
                return Ok(Outcome::no((a, x)));
            }
        }
    }
    Ok(Outcome::yes())
}

/// The increasing sequence `U₀ = U`, `Uₙ = ⊖(Uₙ₋₁⊕Uₙ₋₁) ∪ (Uₙ₋₁⊕Uₙ₋₁)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generation {
    /// Distinct stages `U₀ ⊊ U₁ ⊊ … ⊊ H`.
    pub trace: Vec<FinSubset>,
    /// Number of generation steps applied, including the final one that
    /// confirmed the fixed point.
    pub steps: usize,
}

impl Generation {
    pub fn subgroup(&self) -> FinSubset {
        *self.trace.last().expect("trace is never empty")
    }
}

/// One generation step `⊖(U⊕U) ∪ (U⊕U)`.
pub fn generation_step(model: &CayleyGyro, u: &FinSubset) -> Result<FinSubset> {
    let uu = set_oplus(model, u, u)?;
    set_neg(model, &uu)?.union(&uu)
}

/// Iterates [`generation_step`] from a symmetric `U ∋ 0` to its fixed point.
pub fn generate_invariant(model: &CayleyGyro, u: &FinSubset) -> Result<Generation> {
    if !is_symmetric_neighborhood(model, u)? {
        return Err(Error::Precondition(format!("{u} must contain 0 and equal its negation")));
    }
    let mut trace = vec![*u];
    loop {
        let last = *trace.last().expect("nonempty");
        let next = generation_step(model, &last)?;
        if next == last {
            let steps = trace.len();
            return Ok(Generation { trace, steps });
        }
        trace.push(next);
    }
}

/// Radial analogue of [`Generation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialGeneration {
    /// `U₀` followed by the first few stages of the radius recursion.
    pub trace: Vec<RadialBall>,
    pub subgroup: RadialBall,
    /// True when the radii increase towards the bound, so `H` is the whole
    /// carrier.
    pub reaches_bound: bool,
}

/// Stages listed in a radial trace before the limit is reported.
pub const RADIAL_TRACE_LEN: usize = 6;

/// Generation from a centred ball: `{0}` is fixed, and any ball of positive
/// radius grows under `r ↦ r⊕r` towards the bound.
pub fn generate_invariant_radial(u: &RadialBall) -> Result<RadialGeneration> {
    let model: &RadialModel = u.model();
    if *u == RadialBall::zero(model.clone()) {
        return Ok(RadialGeneration {
            trace: vec![u.clone()],
            subgroup: u.clone(),
            reaches_bound: false,
        });
    }
    let mut trace = vec![u.clone()];
    while trace.len() < RADIAL_TRACE_LEN {
        let last = trace.last().expect("nonempty");
        trace.push(last.oplus(last)?);
    }
    Ok(RadialGeneration {
        trace,
        subgroup: RadialBall::whole(model.clone()),
        reaches_bound: true,
    })
}

/// Every subgyrogroup of a small finite model, in increasing bitmask order.
pub fn all_subgyrogroups(model: &CayleyGyro) -> Vec<FinSubset> {
    let mut found: Vec<FinSubset> = crate::sets::finite::symmetric_neighborhoods(model)
        .into_iter()
        .filter(|h| is_subgyrogroup(model, h).map(|o| o.holds).unwrap_or(false))
        .collect();
    found.sort();
    found
}
