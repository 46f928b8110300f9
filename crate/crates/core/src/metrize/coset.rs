//! Left coset spaces `G/H = {a⊕H : a∈G}`.

use crate::error::{Error, Result};
use crate::models::cayley::CayleyGyro;
use crate::sets::finite::{set_oplus, FinSubset};
use crate::subgyro::is_l_subgyrogroup;

/// The partition of a finite carrier into left cosets of an
/// L-subgyrogroup. Cosets are numbered by their least element, which is
/// also the canonical representative.
#[derive(Debug, Clone)]
pub struct CosetSpace<'a> {
    model: &'a CayleyGyro,
    h: FinSubset,
    cosets: Vec<FinSubset>,
    coset_of: Vec<usize>,
}

/// Computes and certifies the partition `{a⊕H}`.
pub fn coset_space<'a>(model: &'a CayleyGyro, h: &FinSubset) -> Result<CosetSpace<'a>> {
    if let Some((a, x)) = is_l_subgyrogroup(model, h)?.witness {
        return Err(Error::Precondition(format!(
            "{h} is not an L-subgyrogroup (gyr[{a},{x}] moves it)"
        )));
    }
    let n = model.order();
    let mut cosets: Vec<FinSubset> = Vec::new();
    let mut coset_of = vec![usize::MAX; n];
    for a in 0..n {
        let c = set_oplus(model, &FinSubset::singleton(n, a)?, h)?;
        if !c.contains(a) {
            return Err(Error::Precondition(format!("{a} is not in its own coset {c}")));
        }
        if coset_of[a] != usize::MAX {
            if cosets[coset_of[a]] != c {
                return Err(Error::Precondition(format!(
                    "cosets {} and {c} overlap without being equal",
                    cosets[coset_of[a]]
                )));
            }
            continue;
        }
        if let Some(x) = c.iter().find(|&x| coset_of[x] != usize::MAX) {
            return Err(Error::Precondition(format!(
                "cosets {} and {c} overlap without being equal",
                cosets[coset_of[x]]
            )));
        }
        for x in c.iter() {
            coset_of[x] = cosets.len();
        }
        cosets.push(c);
    }
    Ok(CosetSpace {
        model,
        h: *h,
        cosets,
        coset_of,
    })
}

impl<'a> CosetSpace<'a> {
    pub fn model(&self) -> &'a CayleyGyro {
        self.model
    }

    pub fn subgroup(&self) -> &FinSubset {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn cosets(&self) -> &[FinSubset] {
        &self.cosets
    }

    /// `π(a)`, the index of the coset containing `a`.
    pub fn project(&self, a: usize) -> usize {
        self.coset_of[a]
    }

    /// The least element of coset `p`.
    pub fn representative(&self, p: usize) -> usize {
        self.cosets[p].iter().next().expect("cosets are nonempty")
    }

    /// `π⁻¹(S)` for a set of coset indices.
    pub fn preimage(&self, cosets: impl IntoIterator<Item = usize>) -> FinSubset {
        let mut out = FinSubset::empty(self.model.order());
        for p in cosets {
            out = out.union(&self.cosets[p]).expect("same carrier");
        }
        out
    }
}
