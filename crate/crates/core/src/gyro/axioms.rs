//! Verification of the gyrogroup axioms G1–G4.
//!
//! [`check_axioms`] works on any [`Gyrogroup`] and trusts its `zero`,
//! `ominus` and `gyr`. [`check_table_axioms`] works on a raw Cayley table and
//! derives everything from `⊕` alone, so it is sound and complete for finite
//! groupoids that may not be gyrogroups at all.

use super::report::{CheckReport, ReportBuilder};
use super::{for_each_tuple, Gyrogroup, Strategy};
use crate::error::Result;
use crate::models::cayley::CayleyTable;

pub const G1: &str = "G1";
pub const G2: &str = "G2";
pub const G3_SOLVABLE: &str = "G3-solvable";
pub const G3_GYROASSOCIATIVE: &str = "G3-gyroassociative";
pub const G3_BIJECTIVE: &str = "G3-bijective";
pub const G3_AUTOMORPHISM: &str = "G3-automorphism";
pub const G3_DERIVED: &str = "G3-declared-equals-derived";
pub const G4: &str = "G4";

/// Checks G1–G4 on a model under `strategy`.
///
/// Bijectivity of `gyr[x,y]` is checked by pairwise distinctness of images
/// when exhaustive, and through `gyr[y,x] ∘ gyr[x,y] = id` when sampled.
pub fn check_axioms<M: Gyrogroup + ?Sized>(model: &M, strategy: Strategy) -> Result<CheckReport> {
    let mut rep = ReportBuilder::new("axioms", strategy, model.tolerance());
    let zero = model.zero();
    let lab = |e: &M::Elem| model.label(e);

    let n = for_each_tuple(model, strategy, |[a]: &[M::Elem; 1]| {
        rep.compare(model, G1, &model.oplus(&zero, a), a, || vec![lab(a)]);
        rep.compare(model, G1, &model.oplus(a, &zero), a, || vec![lab(a)]);
        let na = model.ominus(a);
        rep.compare(model, G2, &model.oplus(&na, a), &zero, || vec![lab(a)]);
        rep.compare(model, G2, &model.oplus(a, &na), &zero, || vec![lab(a)]);
    })?;
    rep.add_tuples(n);

    let n = for_each_tuple(model, strategy, |[x, y, z]: &[M::Elem; 3]| {
        let w = || vec![lab(x), lab(y), lab(z)];
        let g = model.gyr(x, y, z);
        let lhs = model.oplus(x, &model.oplus(y, z));
        let rhs = model.oplus(&model.oplus(x, y), &g);
        rep.compare(model, G3_GYROASSOCIATIVE, &lhs, &rhs, w);
        rep.compare(model, G3_DERIVED, &g, &model.gyr_derived(x, y, z), w);
        let g4 = model.gyr(&model.oplus(x, y), y, z);
        rep.compare(model, G4, &g4, &g, w);
        if !matches!(strategy, Strategy::Exhaustive) {
            let back = model.gyr(y, x, &g);
            rep.compare(model, G3_BIJECTIVE, &back, z, w);
        }
    })?;
    rep.add_tuples(n);

    let n = for_each_tuple(model, strategy, |[x, y, z, u]: &[M::Elem; 4]| {
        let lhs = model.gyr(x, y, &model.oplus(z, u));
        let rhs = model.oplus(&model.gyr(x, y, z), &model.gyr(x, y, u));
        rep.compare(model, G3_AUTOMORPHISM, &lhs, &rhs, || vec![lab(x), lab(y), lab(z), lab(u)]);
    })?;
    rep.add_tuples(n);

    if let (Strategy::Exhaustive, Some(elems)) = (strategy, model.elements()) {
        for x in &elems {
            for y in &elems {
                let images: Vec<M::Elem> = elems.iter().map(|z| model.gyr(x, y, z)).collect();
                rep.add_tuples(1);
                'pairs: for i in 0..images.len() {
                    for j in i + 1..images.len() {
                        if model.discrepancy(&images[i], &images[j]) <= model.tolerance() {
                            rep.fail(G3_BIJECTIVE, vec![lab(x), lab(y), lab(&elems[i]), lab(&elems[j])]);
                            break 'pairs;
                        }
                    }
                }
            }
        }
    }
    Ok(rep.finish())
}

/// Exhaustive G1–G4 on a raw table, with gyrations obtained by solving
/// `(x⊕y)⊕w = x⊕(y⊕z)`. Every violating tuple is listed.
pub fn check_table_axioms(table: &CayleyTable) -> CheckReport {
    let n = table.order();
    let mut rep = ReportBuilder::new("axioms", Strategy::Exhaustive, 0.0);
    let lab = |i: usize| table.labels()[i].clone();

    let identities = table.two_sided_identities();
    rep.add_tuples(n as u64);
    let zero = match identities.as_slice() {
        [e] => Some(*e),
        [] => {
            rep.fail_with(G1, vec![], "no two-sided identity".into());
            None
        }
        many => {
            rep.fail_with(G1, many.iter().map(|&e| lab(e)).collect(), "identity not unique".into());
            None
        }
    };
    if zero.is_none() {
        rep.fail_with(G2, vec![], "inverses undefined without an identity".into());
    }
    if let Some(e) = zero {
        for x in 0..n {
            rep.add_tuples(1);
            let inv = table.inverses(x, e);
            if inv.len() != 1 {
                rep.fail_with(G2, vec![lab(x)], format!("{} two-sided inverses", inv.len()));
            }
        }
    }

    // gyr[x,y](z), or None where the solution is missing or not unique.
    let mut gyr: Vec<Option<usize>> = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                rep.add_tuples(1);
                let sols = table.gyr_solutions(x, y, z);
                if sols.len() == 1 {
                    gyr.push(Some(sols[0]));
                } else {
                    rep.fail_with(
                        G3_SOLVABLE,
                        vec![lab(x), lab(y), lab(z)],
                        format!("{} solutions", sols.len()),
                    );
                    gyr.push(None);
                }
            }
        }
    }
    let at = |x: usize, y: usize, z: usize| gyr[(x * n + y) * n + z];

    for x in 0..n {
        for y in 0..n {
            rep.add_tuples(1);
            let mut hit = vec![false; n];
            for z in 0..n {
                match at(x, y, z) {
                    Some(w) if hit[w] => {
                        let first = (0..z).find(|&p| at(x, y, p) == Some(w)).unwrap_or(z);
                        rep.fail(G3_BIJECTIVE, vec![lab(x), lab(y), lab(first), lab(z)]);
                        break;
                    }
                    Some(w) => hit[w] = true,
                    None => {}
                }
            }
            for z in 0..n {
                for u in 0..n {
                    rep.add_tuples(1);
                    let (Some(gz), Some(gu), Some(gzu)) = (at(x, y, z), at(x, y, u), at(x, y, table.op(z, u))) else {
                        continue;
                    };
                    if gzu != table.op(gz, gu) {
                        rep.fail(G3_AUTOMORPHISM, vec![lab(x), lab(y), lab(z), lab(u)]);
                    }
                }
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let xy = table.op(x, y);
            for z in 0..n {
                rep.add_tuples(1);
                if let (Some(a), Some(b)) = (at(xy, y, z), at(x, y, z)) {
                    if a != b {
                        rep.fail(G4, vec![lab(x), lab(y), lab(z)]);
                    }
                }
            }
        }
    }
    rep.finish()
}
