//! Exact subset algebra over finite carriers.

use std::fmt;

use crate::error::{Error, Result};
use crate::models::cayley::CayleyGyro;
use crate::models::io::MAX_ORDER;

/// A subset of a finite carrier of order at most [`MAX_ORDER`], stored as a
/// membership bitmask over element indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinSubset {
    order: usize,
    bits: u128,
}

impl FinSubset {
    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER, "carrier order {order} exceeds {MAX_ORDER}");
        FinSubset { order, bits: 0 }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.bits = if order == 128 { u128::MAX } else { (1u128 << order) - 1 };
        s
    }

    pub fn singleton(order: usize, index: usize) -> Result<Self> {
        Self::from_indices(order, [index])
    }

    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Malformed(format!("carrier order {order} exceeds {MAX_ORDER}")));
        }
        let mut s = Self::empty(order);
        for i in indices {
            if i >= order {
                return Err(Error::IndexOutOfRange { index: i, order });
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    /// `{i : keep(i)}` over the whole carrier.
    pub fn from_predicate(order: usize, keep: impl Fn(usize) -> bool) -> Self {
        let mut s = Self::empty(order);
        for i in (0..order).filter(|&i| keep(i)) {
            s.bits |= 1 << i;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, index: usize) -> bool {
        index < self.order && self.bits >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) -> Result<()> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange { index, order: self.order });
        }
        self.bits |= 1 << index;
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&i| self.contains(i))
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::ModelMismatch {
                left: format!("order {}", self.order),
                right: format!("order {}", other.order),
            })
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(FinSubset { order: self.order, bits: self.bits | other.bits })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(FinSubset { order: self.order, bits: self.bits & other.bits })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(FinSubset { order: self.order, bits: self.bits & !other.bits })
    }

    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.same_order(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Least member of `self \ other`, if any.
    pub fn first_outside(&self, other: &Self) -> Result<Option<usize>> {
        Ok(self.difference(other)?.iter().next())
    }

    /// Formats members with the model's labels, e.g. `{0,1,7}`.
    pub fn display_with(&self, model: &CayleyGyro) -> String {
        let parts: Vec<&str> = self.iter().map(|i| model.label_of(i)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl fmt::Display for FinSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// Parses `"i,j,k"` (whitespace allowed, optional surrounding braces) into a
/// subset of a carrier of the given order. The empty string is the empty set.
pub fn parse_index_set(text: &str, order: usize) -> Result<FinSubset> {
    let body = text.trim();
    let body = body
        .strip_prefix('{')
        .and_then(|b| b.strip_suffix('}'))
        .unwrap_or(body)
        .trim();
    if body.is_empty() {
        return FinSubset::from_indices(order, []);
    }
    let mut indices = Vec::new();
    for part in body.split(',') {
        let part = part.trim();
        let i: usize = part
            .parse()
            .map_err(|_| Error::Malformed(format!("invalid element index {part:?}")))?;
        indices.push(i);
    }
    FinSubset::from_indices(order, indices)
}

fn check_model(model: &CayleyGyro, set: &FinSubset) -> Result<()> {
    if model.order() == set.order() {
        Ok(())
    } else {
        Err(Error::ModelMismatch {
            left: format!("model of order {}", model.order()),
            right: format!("set over order {}", set.order()),
        })
    }
}

/// `{a⊕b : a∈A, b∈B}`.
pub fn set_oplus(model: &CayleyGyro, a: &FinSubset, b: &FinSubset) -> Result<FinSubset> {
    check_model(model, a)?;
    check_model(model, b)?;
    let mut out = FinSubset::empty(model.order());
    for x in a.iter() {
        for y in b.iter() {
            out.bits |= 1 << model.add(x, y);
        }
    }
    Ok(out)
}

/// `{⊖a : a∈A}`.
pub fn set_neg(model: &CayleyGyro, a: &FinSubset) -> Result<FinSubset> {
    check_model(model, a)?;
    Ok(map(a, |i| model.neg(i)))
}

/// `{gyr[x,y](a) : a∈A}`.
pub fn gyr_image(model: &CayleyGyro, x: usize, y: usize, a: &FinSubset) -> Result<FinSubset> {
    check_model(model, a)?;
    for i in [x, y] {
        if i >= model.order() {
            return Err(Error::IndexOutOfRange { index: i, order: model.order() });
        }
    }
    let perm = model.gyr_perm(x, y);
    Ok(map(a, |i| perm[i]))
}

fn map(a: &FinSubset, f: impl Fn(usize) -> usize) -> FinSubset {
    let mut out = FinSubset::empty(a.order());
    for i in a.iter() {
        out.bits |= 1 << f(i);
    }
    out
}

/// `0 ∈ A` and `⊖A = A`.
pub fn is_symmetric_neighborhood(model: &CayleyGyro, a: &FinSubset) -> Result<bool> {
    Ok(a.contains(model.zero_index()) && set_neg(model, a)? == *a)
}

/// First `(x, y)` with `gyr[x,y](A) ≠ A`, or `None` when `A` is invariant under
/// every gyration.
pub fn gyr_invariance_witness(model: &CayleyGyro, a: &FinSubset) -> Result<Option<(usize, usize)>> {
    check_model(model, a)?;
    let n = model.order();
    for x in 0..n {
        for y in 0..n {
            if gyr_image(model, x, y, a)? != *a {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// All subsets that contain 0 and are closed under `⊖`, in increasing bitmask
/// order. Feasible only for small carriers; callers bound the order.
pub fn symmetric_neighborhoods(model: &CayleyGyro) -> Vec<FinSubset> {
    let n = model.order();
    let zero = model.zero_index();
    let mut orbits: Vec<u128> = Vec::new();
    let mut seen = 0u128;
    for i in 0..n {
        if i == zero || seen >> i & 1 == 1 {
            continue;
        }
        let mask = (1u128 << i) | (1u128 << model.neg(i));
        seen |= mask;
        orbits.push(mask);
    }
    assert!(orbits.len() < 32, "too many inverse pairs to enumerate");
    let mut out = Vec::with_capacity(1 << orbits.len());
    for choice in 0u64..(1 << orbits.len()) {
        let mut bits = 1u128 << zero;
        for (k, m) in orbits.iter().enumerate() {
            if choice >> k & 1 == 1 {
                bits |= m;
            }
        }
        out.push(FinSubset { order: n, bits });
    }
    out.sort();
    out
}
