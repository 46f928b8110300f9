//! Gyrogroup identities used by the metric constructions:
//!
//! * (i)   `⊖x⊕y = (⊖x⊕z)⊕gyr[⊖x,z](⊖z⊕y)`
//! * (ii)  `⊖(a⊕b) = gyr[a,b](⊖b⊕(⊖a))`
//! * (iii) `x = (x⊕h)⊕gyr[x,h](⊖h)`
//! * (iv)  `⊖a⊕(a⊕b) = b`
//! * (v)   `gyr[x⊕y,y](z) = gyr[x,y](z)`
//!
//! Each is evaluated on triples `(x, y, z)` with `a = x`, `b = h = y`.

use super::report::{CheckReport, ReportBuilder};
use super::{for_each_tuple, Gyrogroup, Strategy};
use crate::error::Result;

pub const GYROTRIANGLE: &str = "i-gyrotriangle";
pub const NEG_OF_SUM: &str = "ii-negation-of-sum";
pub const RIGHT_RECOVERY: &str = "iii-right-recovery";
pub const LEFT_CANCELLATION: &str = "iv-left-cancellation";
pub const LOOP: &str = "v-loop";

pub fn check_identities<M: Gyrogroup + ?Sized>(model: &M, strategy: Strategy) -> Result<CheckReport> {
    let mut rep = ReportBuilder::new("identities", strategy, model.tolerance());
    let lab = |e: &M::Elem| model.label(e);
    let n = for_each_tuple(model, strategy, |[x, y, z]: &[M::Elem; 3]| {
        let w = || vec![lab(x), lab(y), lab(z)];
        let nx = model.ominus(x);
        let ny = model.ominus(y);
        let nz = model.ominus(z);

        let lhs = model.oplus(&nx, y);
        let rhs = model.oplus(&model.oplus(&nx, z), &model.gyr(&nx, z, &model.oplus(&nz, y)));
        rep.compare(model, GYROTRIANGLE, &lhs, &rhs, w);

        let lhs = model.ominus(&model.oplus(x, y));
        let rhs = model.gyr(x, y, &model.oplus(&ny, &nx));
        rep.compare(model, NEG_OF_SUM, &lhs, &rhs, w);

        let rhs = model.oplus(&model.oplus(x, y), &model.gyr(x, y, &ny));
        rep.compare(model, RIGHT_RECOVERY, x, &rhs, w);

        let lhs = model.oplus(&nx, &model.oplus(x, y));
        rep.compare(model, LEFT_CANCELLATION, &lhs, y, w);

        let lhs = model.gyr(&model.oplus(x, y), y, z);
        rep.compare(model, LOOP, &lhs, &model.gyr(x, y, z), w);
    })?;
    rep.add_tuples(n);
    Ok(rep.finish())
}
