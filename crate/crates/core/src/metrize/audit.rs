//! Audits of the prenorm `N`:
//!
//! * (i)   `N(⊖x) = N(x)`
//! * (ii)  `N(x⊕y) ≤ N(x) + N(y)`
//! * (iii) `N(gyr[x,y](z)) = N(z)`
//! * (iv)  `N(x⊕h) = N(x)` for `h ∈ H`
//! * (v)   `{N < 2⁻ⁿ} ⊆ Uₙ ⊆ {N ≤ 2¹⁻ⁿ}` for `0 ≤ n ≤ D`
//! * (vi)  `N(x) = 0` iff `x ∈ H`
//!
//! where `H` is the intersection of the chain.

use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Result;
use crate::gyro::report::{CheckReport, ReportBuilder};
use crate::gyro::{for_each_tuple, Gyrogroup, Strategy};
use crate::models::einstein::{EinsteinBall, Vec3};
use crate::models::mobius::{ExactComplex, MobiusDisk, MobiusExact};
use crate::rational::{from_f64, to_f64};
use crate::sets::{RadialAlgebra, RadialModel, SetAlgebra};
use crate::subgyro::chain::chain_intersection;

use super::dyadic::Dyadic;
use super::family::PrenormFamily;
use super::prenorm::FinitePrenorm;

pub const SYMMETRIC: &str = "i-symmetric";
pub const SUBADDITIVE: &str = "ii-subadditive";
pub const GYR_INVARIANT: &str = "iii-gyr-invariant";
pub const H_INVARIANT: &str = "iv-h-invariant";
pub const SANDWICH_LOWER: &str = "v-sandwich-lower";
pub const SANDWICH_UPPER: &str = "v-sandwich-upper";
pub const ZERO_SET: &str = "vi-zero-set";
pub const CHAIN_INVARIANT: &str = "chain-gyr-invariant";

/// Shared single-point checks (v) and (vi) for a point whose prenorm is
/// `n_p`.
fn point_checks<A: SetAlgebra + Clone>(
    rep: &mut ReportBuilder,
    family: &PrenormFamily<A>,
    h: &A::Set,
    p: &A::Point,
    n_p: Dyadic,
    label: impl Fn() -> String,
) {
    let alg = family.algebra();
    for n in 0..=family.depth() {
        let u = family.chain().set(n as usize);
        let inside = alg.contains(u, p);
        if n_p < Dyadic::pow2_inv(n) && !inside {
            rep.fail_with(SANDWICH_LOWER, vec![n.to_string(), label()], format!("N = {n_p}"));
        }
        if inside && n_p > Dyadic::new(2, n) {
            rep.fail_with(SANDWICH_UPPER, vec![n.to_string(), label()], format!("N = {n_p}"));
        }
    }
    if n_p.is_zero() != alg.contains(h, p) {
        rep.fail_with(ZERO_SET, vec![label()], format!("N = {n_p}"));
    }
}

/// Exhaustive audit on a finite model.
pub fn prenorm_audit(prenorm: &FinitePrenorm<'_>) -> Result<CheckReport> {
    let model = prenorm.model();
    let family = prenorm.family();
    let alg = family.algebra();
    let mut rep = ReportBuilder::new(format!("prenorm-{}", prenorm.construction()), Strategy::Exhaustive, 0.0);
    let h = chain_intersection(alg, family.chain())?;
    let n_of = prenorm.values();
    let lab = |x: usize| model.label_of(x).to_string();

    for (n, u) in family.chain().listed().iter().enumerate() {
        rep.add_tuples(1);
        if let Some(w) = alg.gyr_invariance_witness(u)? {
            rep.fail_with(CHAIN_INVARIANT, vec![n.to_string(), u.to_string()], w);
        }
    }
    for x in 0..model.order() {
        rep.add_tuples(1);
        if n_of[model.neg(x)] != n_of[x] {
            rep.fail(SYMMETRIC, vec![lab(x)]);
        }
        point_checks(&mut rep, family, &h, &x, n_of[x], || lab(x));
        for y in 0..model.order() {
            rep.add_tuples(1);
            let s = model.add(x, y);
            if n_of[s] > n_of[x] + n_of[y] {
                rep.fail_with(SUBADDITIVE, vec![lab(x), lab(y)], format!("{} > {} + {}", n_of[s], n_of[x], n_of[y]));
            }
            if h.contains(y) && n_of[s] != n_of[x] {
                rep.fail(H_INVARIANT, vec![lab(x), lab(y)]);
            }
            for z in 0..model.order() {
                rep.add_tuples(1);
                if n_of[model.gyr_at(x, y, z)] != n_of[z] {
                    rep.fail(GYR_INVARIANT, vec![lab(x), lab(y), lab(z)]);
                }
            }
        }
    }
    Ok(rep.finish())
}

/// An analytic model whose elements can be located relative to centred
/// balls.
pub trait RadialCarrier: Gyrogroup {
    fn radial_model(&self) -> RadialModel;

    /// Squared norm, exact for exact models and the exact value of the
    /// floating-point result otherwise.
    fn norm_sq(&self, e: &Self::Elem) -> BigRational;

    /// A point of norm `r` on the first axis.
    fn on_axis(&self, r: &BigRational) -> Self::Elem;
}

impl RadialCarrier for MobiusExact {
    fn radial_model(&self) -> RadialModel {
        RadialModel::Mobius
    }
    fn norm_sq(&self, e: &ExactComplex) -> BigRational {
        e.norm_sqr()
    }
    fn on_axis(&self, r: &BigRational) -> ExactComplex {
        ExactComplex::new(r.clone(), BigRational::zero())
    }
}

impl RadialCarrier for MobiusDisk {
    fn radial_model(&self) -> RadialModel {
        RadialModel::Mobius
    }
    fn norm_sq(&self, e: &Complex64) -> BigRational {
        from_f64(e.norm_sqr()).unwrap_or_else(|| BigRational::from_integer(2.into()))
    }
    fn on_axis(&self, r: &BigRational) -> Complex64 {
        Complex64::new(to_f64(r), 0.0)
    }
}

impl RadialCarrier for EinsteinBall {
    fn radial_model(&self) -> RadialModel {
        RadialModel::Einstein {
            c: from_f64(self.c).expect("finite speed bound"),
        }
    }
    fn norm_sq(&self, e: &Vec3) -> BigRational {
        let n2 = e[0] * e[0] + e[1] * e[1] + e[2] * e[2];
        from_f64(n2).unwrap_or_else(|| BigRational::from_integer(2.into()) * from_f64(self.c * self.c).unwrap())
    }
    fn on_axis(&self, r: &BigRational) -> Vec3 {
        [to_f64(r), 0.0, 0.0]
    }
}

/// Range of `N` over the closed shell `{ |e| − τ ≤ |·| ≤ |e| + τ }`, where `τ`
/// is the model tolerance. For exact models the range is the single value
/// `N(e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Band {
    lo: Dyadic,
    hi: Dyadic,
}

impl Band {
    fn overlaps(self, other: Band) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

/// Audit of a radial family on samples drawn by `strategy`, supplemented by
/// the origin and by axis points on every boundary radius of the chain and
/// the stored family.
///
/// For floating-point models the relational items (i)–(iv) compare `N` over
/// norm shells of width `τ`: `N` is a step function of the norm, and a
/// rounding error of `10⁻¹⁶` at a level boundary moves it by a whole level.
/// Items (v) and (vi) evaluate the family at the exact norm of each point.
pub fn prenorm_audit_radial<M: RadialCarrier>(
    model: &M,
    family: &PrenormFamily<RadialAlgebra>,
    strategy: Strategy,
) -> Result<CheckReport> {
    let alg = family.algebra();
    let tol = model.tolerance();
    let mut rep = ReportBuilder::new("prenorm", strategy, tol);
    let h = chain_intersection(alg, family.chain())?;
    let band = |e: &M::Elem| -> Band {
        let p = model.norm_sq(e);
        if tol == 0.0 {
            let n = family.eval(&p);
            return Band { lo: n, hi: n };
        }
        let r = to_f64(&p).sqrt();
        let shell = |x: f64| from_f64(x * x).unwrap_or_else(|| p.clone());
        Band {
            lo: family.eval(&shell((r - tol).max(0.0))),
            hi: family.eval(&shell(r + tol)),
        }
    };
    let bound = alg.model.bound();

    let mut special = vec![model.zero()];
    let radii = family
        .chain()
        .listed()
        .iter()
        .chain(family.stored().map(|(_, s)| s))
        .map(|b| b.radius().clone());
    for r in radii {
        if r < bound && !r.is_zero() {
            special.push(model.on_axis(&r));
            special.push(model.ominus(&model.on_axis(&r)));
        }
    }

    let single = |rep: &mut ReportBuilder, x: &M::Elem| {
        rep.add_tuples(1);
        let (a, b) = (band(&model.ominus(x)), band(x));
        if !a.overlaps(b) {
            rep.fail_with(SYMMETRIC, vec![model.label(x)], format!("{a} vs {b}"));
        }
        let p = model.norm_sq(x);
        point_checks(rep, family, &h, &p, family.eval(&p), || model.label(x));
    };
    let pair = |rep: &mut ReportBuilder, x: &M::Elem, y: &M::Elem| {
        rep.add_tuples(1);
        let s = model.oplus(x, y);
        let (nx, ny, ns) = (band(x), band(y), band(&s));
        if ns.lo > nx.hi + ny.hi {
            rep.fail_with(SUBADDITIVE, vec![model.label(x), model.label(y)], format!("{ns} > {nx} + {ny}"));
        }
        if alg.contains(&h, &model.norm_sq(y)) && !ns.overlaps(nx) {
            rep.fail_with(H_INVARIANT, vec![model.label(x), model.label(y)], format!("{ns} vs {nx}"));
        }
    };

    for x in &special {
        single(&mut rep, x);
        for y in &special {
            pair(&mut rep, x, y);
        }
    }
    let n = for_each_tuple(model, strategy, |[x, y, z]: &[M::Elem; 3]| {
        single(&mut rep, x);
        pair(&mut rep, x, y);
        pair(&mut rep, x, &model.zero());
        for w in std::iter::once(z).chain(special.iter()) {
            let (a, b) = (band(&model.gyr(x, y, w)), band(w));
            if !a.overlaps(b) {
                rep.fail_with(
                    GYR_INVARIANT,
                    vec![model.label(x), model.label(y), model.label(w)],
                    format!("{a} vs {b}"),
                );
            }
        }
    })?;
    rep.add_tuples(n);
    Ok(rep.finish())
}
