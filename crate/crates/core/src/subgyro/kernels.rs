//! Neutrality and the finite set-inclusion kernels behind the coset-space
//! arguments.

use crate::error::{Error, Result};
use crate::gyro::report::{CheckReport, ReportBuilder};
use crate::gyro::Strategy;
use crate::models::cayley::CayleyGyro;
use crate::sets::finite::{gyr_invariance_witness, is_symmetric_neighborhood, set_neg, set_oplus, FinSubset};

use super::chain::BaseFamily;
use super::{is_l_subgyrogroup, is_subgyrogroup, Outcome};

fn require_l_subgyrogroup(model: &CayleyGyro, h: &FinSubset) -> Result<()> {
    match is_l_subgyrogroup(model, h)?.witness {
        None => Ok(()),
        Some((a, x)) => Err(Error::Precondition(format!(
            "{h} is not an L-subgyrogroup: gyr[{a},{x}] moves it"
        ))),
    }
}

/// Whether for every `U` in the base some `V` in the base has
/// `H⊕V ⊆ U⊕H`. The witness is a `U` with no such `V`.
pub fn is_neutral(model: &CayleyGyro, h: &FinSubset, base: &BaseFamily<FinSubset>) -> Result<Outcome<FinSubset>> {
    require_l_subgyrogroup(model, h)?;
    for u in base.sets() {
        let rhs = set_oplus(model, u, h)?;
        let mut found = false;
        for v in base.sets() {
            if set_oplus(model, h, v)?.is_subset(&rhs)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Outcome::no(*u));
        }
    }
    Ok(Outcome::yes())
}

/// The mirrored condition: for every `U` some `V` has `V⊕H ⊆ H⊕U`. For an
/// L-subgyrogroup and a strongly invariant base, `⊖(H⊕V) = V⊕H`, so this
/// agrees with [`is_neutral`].
pub fn is_neutral_mirrored(
    model: &CayleyGyro,
    h: &FinSubset,
    base: &BaseFamily<FinSubset>,
) -> Result<Outcome<FinSubset>> {
    require_l_subgyrogroup(model, h)?;
    for u in base.sets() {
        let rhs = set_oplus(model, h, u)?;
        let mut found = false;
        for v in base.sets() {
            if set_oplus(model, v, h)?.is_subset(&rhs)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Outcome::no(*u));
        }
    }
    Ok(Outcome::yes())
}

pub const PRE_SYMMETRIC: &str = "precondition-symmetric";
pub const PRE_SUBGYROGROUP: &str = "precondition-subgyrogroup";
pub const PRE_NESTED: &str = "precondition-w-subset-u";
pub const PRE_NEUTRAL: &str = "precondition-neutral-pair";
pub const PRE_INVARIANT: &str = "precondition-gyr-invariant";
pub const INCLUSION: &str = "inclusion";

/// Checks `(W⊕H)⊕(⊖(W⊕H)) ⊆ (U⊕U)⊕H`.
///
/// Preconditions: `U` and `W` contain 0 and are symmetric, `H` is a
/// subgyrogroup, `W ⊆ U`, `H⊕W ⊆ U⊕H`, and `U`, `W`, `H` are invariant under
/// every gyration. Unmet preconditions are reported and the inclusion is not
/// evaluated.
pub fn verify_char_inclusion(model: &CayleyGyro, u: &FinSubset, w: &FinSubset, h: &FinSubset) -> Result<CheckReport> {
    let mut rep = ReportBuilder::new("char-inclusion", Strategy::Exhaustive, 0.0);
    rep.add_tuples(1);
    for (name, set) in [("U", u), ("W", w)] {
        if !is_symmetric_neighborhood(model, set)? {
            rep.fail(PRE_SYMMETRIC, vec![name.into(), set.to_string()]);
        }
    }
    if h.is_empty() {
        rep.fail(PRE_SUBGYROGROUP, vec!["H".into(), h.to_string()]);
    } else if let Some(why) = is_subgyrogroup(model, h)?.witness {
        rep.fail_with(PRE_SUBGYROGROUP, vec!["H".into(), h.to_string()], why.to_string());
    }
    if let Some(x) = w.first_outside(u)? {
        rep.fail(PRE_NESTED, vec![x.to_string()]);
    }
    let hw = set_oplus(model, h, w)?;
    let uh = set_oplus(model, u, h)?;
    if let Some(x) = hw.first_outside(&uh)? {
        rep.fail(PRE_NEUTRAL, vec![x.to_string()]);
    }
    for (name, set) in [("U", u), ("W", w), ("H", h)] {
        if let Some((x, y)) = gyr_invariance_witness(model, set)? {
            rep.fail(PRE_INVARIANT, vec![name.into(), x.to_string(), y.to_string()]);
        }
    }
    if rep.is_clean() {
        let wh = set_oplus(model, w, h)?;
        let lhs = set_oplus(model, &wh, &set_neg(model, &wh)?)?;
        let rhs = set_oplus(model, &set_oplus(model, u, u)?, h)?;
        if let Some(x) = lhs.first_outside(&rhs)? {
            rep.fail_with(INCLUSION, vec![x.to_string()], format!("{lhs} ⊄ {rhs}"));
        }
    }
    Ok(rep.finish())
}

/// Whether every left coset `x⊕H` meets `A⊕U`.
///
/// Preconditions (errors when unmet): `H` is an L-subgyrogroup, `A` meets
/// every coset, `U` belongs to the base, and `H` is neutral with respect to
/// the base.
pub fn saturation_check(
    model: &CayleyGyro,
    a: &FinSubset,
    u: &FinSubset,
    h: &FinSubset,
    base: &BaseFamily<FinSubset>,
) -> Result<bool> {
    require_l_subgyrogroup(model, h)?;
    if let Some(x) = missed_coset(model, a, h)? {
        return Err(Error::Precondition(format!("{a} misses the coset of {x}")));
    }
    if !base.contains(u) {
        return Err(Error::Precondition(format!("{u} is not in the base")));
    }
    if let Some(w) = is_neutral(model, h, base)?.witness {
        return Err(Error::Precondition(format!("{h} is not neutral: no V works for U = {w}")));
    }
    Ok(missed_coset(model, &set_oplus(model, a, u)?, h)?.is_none())
}

/// The least `x` whose coset `x⊕H` is disjoint from `s`.
pub fn missed_coset(model: &CayleyGyro, s: &FinSubset, h: &FinSubset) -> Result<Option<usize>> {
    for x in 0..model.order() {
        let coset = set_oplus(model, &FinSubset::singleton(model.order(), x)?, h)?;
        if coset.intersection(s)?.is_empty() {
            return Ok(Some(x));
        }
    }
    Ok(None)
}
