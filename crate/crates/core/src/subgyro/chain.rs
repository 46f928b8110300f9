//! Neighbourhood chains `U₀ ⊇ U₁ ⊇ …` and families of candidate
//! neighbourhoods.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gyro::report::{CheckReport, ReportBuilder};
use crate::gyro::Strategy;
use crate::models::cayley::CayleyGyro;
use crate::sets::finite::FinSubset;
use crate::sets::{FiniteAlgebra, SetAlgebra};

use super::{is_l_subgyrogroup, is_subgyrogroup};

/// Inclusion strength between consecutive chain members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    None,
    /// `Uₙ₊₁⊕Uₙ₊₁ ⊆ Uₙ`.
    Double,
    /// `Uₙ₊₁⊕(Uₙ₊₁⊕Uₙ₊₁) ⊆ Uₙ`, the admissible condition.
    Triple,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::None => "none",
            Level::Double => "double",
            Level::Triple => "triple",
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Level::None),
            "double" => Ok(Level::Double),
            "triple" | "admissible" => Ok(Level::Triple),
            other => Err(Error::Malformed(format!("unknown level {other:?}"))),
        }
    }
}

/// A finite list `U₀, …, U_{L−1}` extended by repeating `U_{L−1}` forever.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodChain<S> {
    sets: Vec<S>,
    certified: Level,
}

impl<S: Clone> NeighborhoodChain<S> {
    pub fn new(sets: Vec<S>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Malformed("a chain needs at least one set".into()));
        }
        Ok(NeighborhoodChain {
            sets,
            certified: Level::None,
        })
    }

    pub fn listed(&self) -> &[S] {
        &self.sets
    }

    /// Number of listed sets before the tail repeats.
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `Uₙ` under the tail rule.
    pub fn set(&self, n: usize) -> &S {
        &self.sets[n.min(self.sets.len() - 1)]
    }

    pub fn tail(&self) -> &S {
        self.sets.last().expect("chains are nonempty")
    }

    pub fn certified(&self) -> Level {
        self.certified
    }

    /// Validates the chain at `level` and records the level on success.
    pub fn certify<A: SetAlgebra<Set = S>>(
        &mut self,
        alg: &A,
        level: Level,
        base: Option<&BaseFamily<S>>,
    ) -> Result<CheckReport>
    where
        S: PartialEq,
    {
        let report = validate_chain(alg, self, level, base)?;
        if report.passed() {
            self.certified = self.certified.max(level);
        }
        Ok(report)
    }
}

/// A finite family of candidate neighbourhoods of 0, each symmetric.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseFamily<S> {
    sets: Vec<S>,
    strongly_invariant: bool,
}

impl<S: Clone + PartialEq + fmt::Display> BaseFamily<S> {
    /// Checks that every member contains 0 and equals its negation, and
    /// records whether every member is invariant under every gyration.
    pub fn new<A: SetAlgebra<Set = S>>(alg: &A, sets: Vec<S>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Precondition("a base family needs at least one set".into()));
        }
        let mut strongly_invariant = true;
        for u in &sets {
            if !alg.is_symmetric_neighborhood(u)? {
                return Err(Error::Precondition(format!("base set {u} must contain 0 and equal its negation")));
            }
            strongly_invariant &= alg.gyr_invariance_witness(u)?.is_none();
        }
        Ok(BaseFamily {
            sets,
            strongly_invariant,
        })
    }

    pub fn sets(&self) -> &[S] {
        &self.sets
    }

    pub fn is_strongly_invariant(&self) -> bool {
        self.strongly_invariant
    }

    pub fn contains(&self, u: &S) -> bool {
        self.sets.contains(u)
    }
}

pub const CONTAINS_ZERO: &str = "contains-zero";
pub const SYMMETRIC: &str = "symmetric";
pub const DOUBLE: &str = "double-inclusion";
pub const TRIPLE: &str = "triple-inclusion";
pub const IN_BASE: &str = "in-base";
pub const BASE_INVARIANT: &str = "base-strongly-invariant";

/// Checks symmetry, `0`-membership and the inclusion at `level` for every
/// consecutive pair, including the tail pair `(U_{L−1}, U_{L−1})`. With a
/// base attached, every `Uₙ` must belong to it and the base must be strongly
/// invariant. Witnesses start with the offending index `n`.
pub fn validate_chain<A: SetAlgebra>(
    alg: &A,
    chain: &NeighborhoodChain<A::Set>,
    level: Level,
    base: Option<&BaseFamily<A::Set>>,
) -> Result<CheckReport> {
    let mut rep = ReportBuilder::new(format!("chain-{level}"), Strategy::Exhaustive, 0.0);
    let zero = alg.zero_set();
    for (n, u) in chain.listed().iter().enumerate() {
        rep.add_tuples(1);
        if !alg.is_subset(&zero, u)? {
            rep.fail(CONTAINS_ZERO, vec![n.to_string(), u.to_string()]);
        }
        let neg = alg.neg(u)?;
        if neg != *u {
            let w = alg.witness_outside(u, &neg)?.or(alg.witness_outside(&neg, u)?);
            rep.fail_with(SYMMETRIC, vec![n.to_string(), u.to_string()], w.unwrap_or_default());
        }
    }
    if level > Level::None {
        for n in 0..chain.len() {
            rep.add_tuples(1);
            let (outer, inner) = (chain.set(n), chain.set(n + 1));
            let pair = alg.oplus(inner, inner)?;
            let (item, composed) = match level {
                Level::Triple => (TRIPLE, alg.oplus(inner, &pair)?),
                _ => (DOUBLE, pair),
            };
            if let Some(w) = alg.witness_outside(&composed, outer)? {
                rep.fail_with(
                    item,
                    vec![n.to_string(), composed.to_string(), outer.to_string()],
                    format!("{w} escapes U_{n}"),
                );
            }
        }
    }
    if let Some(base) = base {
        rep.add_tuples(1);
        if !base.is_strongly_invariant() {
            rep.fail(BASE_INVARIANT, vec![]);
        }
        for (n, u) in chain.listed().iter().enumerate() {
            rep.add_tuples(1);
            if !base.contains(u) {
                rep.fail(IN_BASE, vec![n.to_string(), u.to_string()]);
            }
        }
    }
    Ok(rep.finish())
}

/// `⋂ₙ Uₙ`, which under the tail rule is the intersection of the listed sets.
pub fn chain_intersection<A: SetAlgebra>(alg: &A, chain: &NeighborhoodChain<A::Set>) -> Result<A::Set> {
    let mut acc = chain.listed()[0].clone();
    for u in &chain.listed()[1..] {
        acc = alg.intersection(&acc, u)?;
    }
    Ok(acc)
}

/// [`chain_intersection`] on a finite chain, asserting that the result is an
/// L-subgyrogroup.
pub fn finite_chain_subgroup(model: &CayleyGyro, chain: &NeighborhoodChain<FinSubset>) -> Result<FinSubset> {
    let h = chain_intersection(&FiniteAlgebra::new(model), chain)?;
    if let Some(w) = is_subgyrogroup(model, &h)?.witness {
        return Err(Error::Precondition(format!("chain intersection {h} is not a subgyrogroup: {w}")));
    }
    if let Some((a, x)) = is_l_subgyrogroup(model, &h)?.witness {
        return Err(Error::Precondition(format!(
            "chain intersection {h} is not an L-subgyrogroup: gyr[{a},{x}] moves it"
        )));
    }
    Ok(h)
}
