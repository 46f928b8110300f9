//! The dyadic family `q ↦ V(q)` and the prenorm `N`.
//!
//! For a chain `U₀, U₁, …` the family is
//!
//! * `V(1) = U₀`, `V(1/2ⁿ) = Uₙ`,
//! * `V(2m/2ⁿ) = V(m/2ⁿ⁻¹)`, `V((2m+1)/2ⁿ) = Uₙ ⊕ V(m/2ⁿ⁻¹)`,
//! * `V(q) = G` for `q > 1`,
//!
//! and `N(x) = inf{q : x ∈ V(q)}`.
//!
//! Unrolling the recursion, `V(q)` for `q = Σ 2^{-nᵢ}` is
//! `U_{n_r} ⊕ (… ⊕ (U_{n_2} ⊕ U_{n_1}))` with the highest bit innermost.
//! Once the chain is constant, `Uₙ = H` for `n ≥ k`, so every `q` splits into
//! a prefix `q₀` on the grid `2^{-(k-1)}` and a tail of `t` bits, each
//! contributing one `H⊕` on the left. Tails can be made arbitrarily small,
//! hence `x` has infimum `q₀` over that cell exactly when `x` lies in the
//! left saturation `⋃ₜ Hᵗ⊕V(q₀)` (with `V(0)` read as `{0}`). Scanning the
//! grid cells therefore yields `N` exactly, independent of the depth.

use crate::error::{Error, Result};
use crate::sets::SetAlgebra;
use crate::subgyro::chain::{Level, NeighborhoodChain};

use super::dyadic::Dyadic;

/// Largest supported depth; the family stores `2^D` sets.
pub const MAX_DEPTH: u32 = 20;

#[derive(Debug, Clone)]
pub struct PrenormFamily<A: SetAlgebra> {
    alg: A,
    chain: NeighborhoodChain<A::Set>,
    depth: u32,
    /// `grid[j - 1] = V(j / 2^depth)` for `j = 1..=2^depth`.
    grid: Vec<A::Set>,
    /// Exponent `k - 1` of the exact evaluation grid.
    cell_exp: u32,
    /// Left saturations of `V(j / 2^cell_exp)` for `j = 0..2^cell_exp`.
    cells: Vec<A::Set>,
}

/// `V(j / 2^depth)` for `j = 1..=2^depth`.
fn materialize<A: SetAlgebra>(alg: &A, chain: &NeighborhoodChain<A::Set>, depth: u32) -> Result<Vec<A::Set>> {
    let size = 1usize << depth;
    let mut grid: Vec<Option<A::Set>> = vec![None; size];
    grid[size - 1] = Some(chain.set(0).clone());
    for n in 1..=depth {
        let stride = 1usize << (depth - n);
        for odd in (1..(1usize << n)).step_by(2) {
            let value = if odd == 1 {
                chain.set(n as usize).clone()
            } else {
                let parent = grid[(odd / 2) * 2 * stride - 1].as_ref().expect("coarser level filled first");
                alg.oplus(chain.set(n as usize), parent)?
            };
            grid[odd * stride - 1] = Some(value);
        }
    }
    Ok(grid.into_iter().map(|s| s.expect("every grid point filled")).collect())
}

impl<A: SetAlgebra + Clone> PrenormFamily<A> {
    /// Materializes the family to `depth` (default: chain length + 2) and
    /// audits monotonicity, which is a hard requirement.
    pub fn build(alg: &A, chain: &NeighborhoodChain<A::Set>, depth: Option<u32>) -> Result<Self> {
        if chain.certified() < Level::Double {
            return Err(Error::Uncertified("double"));
        }
        let depth = depth.unwrap_or(chain.len() as u32 + 2);
        if !(1..=MAX_DEPTH).contains(&depth) {
            return Err(Error::Depth(depth));
        }
        let grid = materialize(alg, chain, depth)?;
        for j in 1..grid.len() {
            if let Some(w) = alg.witness_outside(&grid[j - 1], &grid[j])? {
                return Err(Error::Monotonicity {
                    lower: Dyadic::new(j as u64, depth).to_string(),
                    upper: Dyadic::new(j as u64 + 1, depth).to_string(),
                    witness: w,
                });
            }
        }
        let tail_start = chain.len() as u32 - 1;
        let cell_exp = tail_start.max(1) - 1;
        if cell_exp > MAX_DEPTH {
            return Err(Error::Depth(cell_exp));
        }
        let h = chain.tail().clone();
        let mut cells = vec![alg.left_saturate(&h, &alg.zero_set())?];
        if cell_exp > 0 {
            let coarse = materialize(alg, chain, cell_exp)?;
            for v in &coarse[..coarse.len() - 1] {
                cells.push(alg.left_saturate(&h, v)?);
            }
        }
        Ok(PrenormFamily {
            alg: alg.clone(),
            chain: chain.clone(),
            depth,
            grid,
            cell_exp,
            cells,
        })
    }

    pub fn algebra(&self) -> &A {
        &self.alg
    }

    pub fn chain(&self) -> &NeighborhoodChain<A::Set> {
        &self.chain
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `V(q)` for a stored `q ≤ 1` or any `q > 1`; `None` for `q = 0` or a
    /// denominator finer than the depth.
    pub fn v(&self, q: Dyadic) -> Option<A::Set> {
        if q > Dyadic::ONE {
            return Some(self.alg.whole());
        }
        if q.is_zero() || q.exponent() > self.depth {
            return None;
        }
        let j = (q.numerator() << (self.depth - q.exponent())) as usize;
        Some(self.grid[j - 1].clone())
    }

    /// Stored points `(q, V(q))` in increasing order of `q`.
    pub fn stored(&self) -> impl Iterator<Item = (Dyadic, &A::Set)> + '_ {
        self.grid
            .iter()
            .enumerate()
            .map(move |(i, s)| (Dyadic::new(i as u64 + 1, self.depth), s))
    }

    /// Exact `N(p)`.
    pub fn eval(&self, p: &A::Point) -> Dyadic {
        self.cells
            .iter()
            .position(|cell| self.alg.contains(cell, p))
            .map(|j| Dyadic::new(j as u64, self.cell_exp))
            .unwrap_or(Dyadic::ONE)
    }

    /// `min{q stored : p ∈ V(q)}`, or 1. An upper bound on `N(p)`; the
    /// resolution is `2^-depth`.
    pub fn eval_truncated(&self, p: &A::Point) -> Dyadic {
        self.grid
            .iter()
            .position(|v| self.alg.contains(v, p))
            .map(|j| Dyadic::new(j as u64 + 1, self.depth))
            .unwrap_or(Dyadic::ONE)
    }

    pub fn resolution(&self) -> Dyadic {
        Dyadic::pow2_inv(self.depth)
    }

    /// The sets whose membership determines `N`, with their values.
    pub fn level_sets(&self) -> impl Iterator<Item = (Dyadic, &A::Set)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .map(move |(j, s)| (Dyadic::new(j as u64, self.cell_exp), s))
    }
}

/// Builds the dyadic family of a chain certified at least at the double
/// level.
pub fn build_dyadic<A: SetAlgebra + Clone>(
    alg: &A,
    chain: &NeighborhoodChain<A::Set>,
    depth: Option<u32>,
) -> Result<PrenormFamily<A>> {
    PrenormFamily::build(alg, chain, depth)
}
