//! Searches for finite gyrogroups that are not groups and prints the first one
//! found as a model document.
//!
//! Construction: in a finite group `Γ` with an involution `t`, pick one element
//! from every left coset `{g, gt}` of `H = {e, t}`. If the chosen set `B`
//! contains `e`, is closed under inverses, satisfies `aba ∈ B` for `a, b ∈ B`
//! and `tBt = B`, then `a ⊕ b := the B-element of the coset abH` turns `B`
//! into a gyrogroup. Every candidate is re-certified by the exhaustive axiom
//! checker before it is printed.
//!
//! ```text
//! cargo run -p gyrokit --example twisted_search -- 8   # from Z2 x D8
//! cargo run -p gyrokit --example twisted_search -- 16  # from Z2 x D16
//! ```

use std::collections::BTreeSet;

use gyrokit::gyro::check_table_axioms;
use gyrokit::models::cayley::CayleyTable;
use gyrokit::models::group::{Perm, PermGroup};
use gyrokit::models::io::emit_table;

fn z2_times_dihedral(n: usize) -> PermGroup {
    let deg = n + 2;
    let mut rot: Vec<usize> = (0..deg).collect();
    let mut refl: Vec<usize> = (0..deg).collect();
    for i in 0..n {
        rot[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    let mut swap: Vec<usize> = (0..deg).collect();
    swap.swap(n, n + 1);
    PermGroup::generate(deg, &[Perm(rot), Perm(refl), Perm(swap)])
}

fn search(group: &PermGroup) -> Option<CayleyTable> {
    let elems = group.perms();
    let e = Perm::identity(group.degree());
    for t in elems.iter().filter(|t| !t.is_identity() && t.compose(t).is_identity()) {
        let mut seen = BTreeSet::new();
        let mut cosets = Vec::new();
        for g in elems {
            if seen.contains(g) {
                continue;
            }
            let gt = g.compose(t);
            seen.insert(g.clone());
            seen.insert(gt.clone());
            cosets.push([g.clone(), gt]);
        }
        let k = cosets.len();
        for mask in 0u64..(1u64 << (k - 1)) {
            let mut chosen: Vec<Perm> = vec![e.clone()];
            for (i, coset) in cosets.iter().enumerate().skip(1) {
                chosen.push(coset[((mask >> (k - 1 - i)) & 1) as usize].clone());
            }
            let set: BTreeSet<&Perm> = chosen.iter().collect();
            let inverse_closed = chosen.iter().all(|b| set.contains(&b.inverse()));
            let normalized = chosen.iter().all(|b| set.contains(&t.compose(b).compose(t)));
            if !inverse_closed || !normalized {
                continue;
            }
            let twisted = chosen
                .iter()
                .all(|a| chosen.iter().all(|b| set.contains(&a.compose(b).compose(a))));
            if !twisted {
                continue;
            }
            let b: Vec<Perm> = set.into_iter().cloned().collect();
            let index = |p: &Perm| b.binary_search(p).ok();
            let table = CayleyTable::from_fn(b.len(), |i, j| {
                let ab = b[i].compose(&b[j]);
                index(&ab).or_else(|| index(&ab.compose(t))).expect("B is a transversal")
            })
            .expect("square table");
            let n = b.len();
            let associative = (0..n).all(|x| {
                (0..n).all(|y| {
                    (0..n).all(|z| table.op(table.op(x, y), z) == table.op(x, table.op(y, z)))
                })
            });
            if !associative {
                return Some(table);
            }
        }
    }
    None
}

fn main() {
    let order: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(8);
    let group = match order {
        8 => z2_times_dihedral(4),
        16 => z2_times_dihedral(8),
        _ => {
            eprintln!("supported orders: 8, 16");
            std::process::exit(2);
        }
    };
    let Some(table) = search(&group) else {
        eprintln!("no non-associative candidate found");
        std::process::exit(1);
    };
    let report = check_table_axioms(&table);
    if !report.passed() {
        eprintln!("candidate failed certification: {}", report.summary_line());
        std::process::exit(1);
    }
    print!("{}", emit_table(&table));
}
