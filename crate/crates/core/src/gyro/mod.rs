//! The gyrogroup interface and its verification engines.

pub mod axioms;
pub mod identities;
pub mod report;

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use axioms::{check_axioms, check_table_axioms};
pub use identities::check_identities;

/// Deterministic sampler used by every seeded strategy.
pub type SampleRng = ChaCha8Rng;

pub fn sample_rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Default tolerance for floating-point models.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A carrier with identity, `⊕`, `⊖` and gyrations.
///
/// Implementations must be pure: every method is a function of its
/// arguments and the (immutable) model.
pub trait Gyrogroup {
    type Elem: Clone + fmt::Debug;

    fn zero(&self) -> Self::Elem;

    fn oplus(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn ominus(&self, a: &Self::Elem) -> Self::Elem;

    /// `gyr[x,y](z)`. Models with a closed form override this; otherwise the
    /// derived gyration is used.
    fn gyr(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> Self::Elem {
        self.gyr_derived(x, y, z)
    }

    /// The unique `w` with `(x⊕y)⊕w = x⊕(y⊕z)`, obtained here through left
    /// cancellation `w = ⊖(x⊕y)⊕(x⊕(y⊕z))`. Finite tables override this with
    /// a direct search.
    fn gyr_derived(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> Self::Elem {
        let xy = self.oplus(x, y);
        let rhs = self.oplus(x, &self.oplus(y, z));
        self.oplus(&self.ominus(&xy), &rhs)
    }

    /// Zero iff the two elements are equal (exact models), otherwise a
    /// distance used as residual.
    fn discrepancy(&self, a: &Self::Elem, b: &Self::Elem) -> f64;

    /// Whether arithmetic is exact. Exact models compare by equality.
    fn is_exact(&self) -> bool;

    fn tolerance(&self) -> f64 {
        if self.is_exact() {
            0.0
        } else {
            DEFAULT_TOLERANCE
        }
    }

    /// All carrier elements, for finite models.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn sample(&self, rng: &mut SampleRng) -> Self::Elem;

    fn label(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }
}

/// Apply `gyr[x,y]` to `z`.
pub fn gyr_apply<M: Gyrogroup + ?Sized>(model: &M, x: &M::Elem, y: &M::Elem, z: &M::Elem) -> M::Elem {
    model.gyr(x, y, z)
}

/// How tuples are drawn for a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Strategy {
    Exhaustive,
    Sampled { count: u64, seed: u64 },
}

impl Strategy {
    pub fn sampled(count: u64, seed: u64) -> Self {
        Strategy::Sampled { count, seed }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strategy::Exhaustive => f.write_str("exhaustive"),
            Strategy::Sampled { count, seed } => write!(f, "sampled(count={count}, seed={seed})"),
        }
    }
}

/// Visits `K`-tuples of elements according to `strategy` and returns how many
/// were visited. Exhaustive order is lexicographic with the last slot fastest.
pub fn for_each_tuple<M, const K: usize, F>(model: &M, strategy: Strategy, mut f: F) -> Result<u64>
where
    M: Gyrogroup + ?Sized,
    F: FnMut(&[M::Elem; K]),
{
    match strategy {
        Strategy::Exhaustive => {
            let elems = model.elements().ok_or(Error::ExhaustiveUnsupported)?;
            let n = elems.len();
            if n == 0 || K == 0 {
                return Ok(0);
            }
            let mut idx = [0usize; K];
            let mut visited = 0u64;
            loop {
                let tuple: [M::Elem; K] = std::array::from_fn(|i| elems[idx[i]].clone());
                f(&tuple);
                visited += 1;
                let mut pos = K;
                loop {
                    if pos == 0 {
                        return Ok(visited);
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < n {
                        break;
                    }
                    idx[pos] = 0;
                }
            }
        }
        Strategy::Sampled { count, seed } => {
            let mut rng = sample_rng(seed);
            for _ in 0..count {
                let tuple: [M::Elem; K] = std::array::from_fn(|_| model.sample(&mut rng));
                f(&tuple);
            }
            Ok(count)
        }
    }
}
