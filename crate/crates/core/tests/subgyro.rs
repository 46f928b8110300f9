mod common;

use common::{base_of, finite_chains, invariant_base, set};
use gyrokit::models::{fixtures, CayleyGyro};
use gyrokit::rational::ratio;
use gyrokit::sets::finite::{gyr_invariance_witness, symmetric_neighborhoods};
use gyrokit::sets::{FinSubset, FiniteAlgebra, RadialAlgebra, RadialBall, RadialModel};
use gyrokit::subgyro::kernels::{INCLUSION, PRE_INVARIANT, PRE_NEUTRAL};
use gyrokit::subgyro::{
    all_subgyrogroups, chain_intersection, generate_invariant, generate_invariant_radial, is_l_subgyrogroup,
    is_neutral, is_neutral_mirrored, is_subgyrogroup, saturation_check, validate_chain, verify_char_inclusion,
    Level, NeighborhoodChain,
};

fn small_fixtures() -> impl Iterator<Item = (&'static str, CayleyGyro)> {
    fixtures::all().filter(|(_, g)| g.order() <= 12)
}

/// Closure of `u` under `⊕` and `⊖`, by breadth-first search.
fn closure(g: &CayleyGyro, u: &FinSubset) -> FinSubset {
    let mut members: Vec<usize> = u.indices();
    let mut i = 0;
    while i < members.len() {
        let a = members[i];
        let mut fresh = vec![g.neg(a)];
        for &b in &members.clone() {
            fresh.push(g.add(a, b));
            fresh.push(g.add(b, a));
        }
        for x in fresh {
            if !members.contains(&x) {
                members.push(x);
            }
        }
        i += 1;
    }
    FinSubset::from_indices(g.order(), members).unwrap()
}

fn moved_by_some_gyration(g: &CayleyGyro, h: &FinSubset) -> bool {
    let n = g.order();
    (0..n).any(|x| (0..n).any(|y| h.iter().any(|z| !h.contains(g.gyr_at(x, y, z)))))
}

#[test]
fn generation_reaches_the_generated_subgyrogroup() {
    for (name, g) in small_fixtures() {
        for u in symmetric_neighborhoods(&g) {
            let gen = generate_invariant(&g, &u).unwrap();
            let h = gen.subgroup();
            assert_eq!(h, closure(&g, &u), "{name} U={u}");
            assert!(is_subgyrogroup(&g, &h).unwrap().holds);
            assert!(gen.trace.windows(2).all(|w| w[0].is_subset(&w[1]).unwrap() && w[0] != w[1]));
            if !moved_by_some_gyration(&g, &u) {
                assert!(!moved_by_some_gyration(&g, &h), "{name} invariant U={u} gave H={h}");
            }
        }
    }
}

/// Symmetric sets whose generated subgyrogroup some gyration moves, for the
/// two smallest nondegenerate inputs. Every one of them is itself moved by a
/// gyration, so none is a member of a strongly invariant base.
#[test]
fn generation_from_non_invariant_sets_can_leave_a_moved_subgyrogroup() {
    let g8 = fixtures::G8.load();
    let moved: Vec<FinSubset> = symmetric_neighborhoods(&g8)
        .into_iter()
        .filter(|u| moved_by_some_gyration(&g8, &generate_invariant(&g8, u).unwrap().subgroup()))
        .collect();
    assert!(moved.contains(&set(8, &[0, 7])));
    assert!(moved.contains(&set(8, &[0, 2])));
    assert!(moved.iter().all(|u| moved_by_some_gyration(&g8, u)));
    let h = generate_invariant(&g8, &set(8, &[0, 7])).unwrap().subgroup();
    assert_eq!(h, set(8, &[0, 7]));
    assert!(gyr_invariance_witness(&g8, &h).unwrap().is_some());

    for (name, g) in small_fixtures().filter(|(_, g)| !g.has_nontrivial_gyration()) {
        for u in symmetric_neighborhoods(&g) {
            assert!(!moved_by_some_gyration(&g, &generate_invariant(&g, &u).unwrap().subgroup()), "{name}");
        }
    }
}

#[test]
fn generation_rejects_non_symmetric_input() {
    let z6 = CayleyGyro::cyclic(6);
    assert!(generate_invariant(&z6, &set(6, &[0, 1])).is_err());
    assert!(generate_invariant(&z6, &set(6, &[1, 5])).is_err());
    let gen = generate_invariant(&z6, &set(6, &[0, 2, 4])).unwrap();
    assert_eq!(gen.trace.len(), 1);
    assert_eq!(gen.steps, 1);
}

#[test]
fn radial_generation() {
    let zero = RadialBall::zero(RadialModel::Mobius);
    let gen = generate_invariant_radial(&zero).unwrap();
    assert_eq!(gen.subgroup, zero);
    let quarter = RadialBall::new(RadialModel::Mobius, ratio(1, 4), true).unwrap();
    let gen = generate_invariant_radial(&quarter).unwrap();
    assert!(gen.reaches_bound && gen.subgroup.is_whole());
    assert_eq!(gen.trace[1].radius(), &ratio(8, 17));
    assert!(gen.trace.windows(2).all(|w| w[0].radius() < w[1].radius()));
}

#[test]
fn l_subgyrogroups_match_brute_force() {
    for (name, g) in fixtures::all() {
        let n = g.order();
        for h in all_subgyrogroups(&g) {
            let brute = (0..n).all(|a| h.iter().all(|x| h.iter().all(|z| h.contains(g.gyr_at(a, x, z)))));
            assert_eq!(is_l_subgyrogroup(&g, &h).unwrap().holds, brute, "{name} H={h}");
            assert_eq!(closure(&g, &h), h);
        }
    }
}

#[test]
fn bundled_chains_are_admissible_and_meet_in_l_subgyrogroups() {
    for (name, g, chain) in finite_chains() {
        let alg = FiniteAlgebra::new(&g);
        let rep = validate_chain(&alg, &chain, Level::Triple, None).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.violations);
        let h = chain_intersection(&alg, &chain).unwrap();
        assert!(is_l_subgyrogroup(&g, &h).unwrap().holds, "{name}");
        if let Some((_, base)) = base_of(name).filter(|_| name != "s3") {
            let rep = validate_chain(&alg, &chain, Level::Triple, Some(&base)).unwrap();
            assert!(rep.passed(), "{name} with base: {:?}", rep.violations);
        }
    }
    let balls = [(1, 4), (1, 16), (0, 1)]
        .map(|(p, q)| RadialBall::new(RadialModel::Mobius, ratio(p, q), true).unwrap());
    let chain = NeighborhoodChain::new(balls.to_vec()).unwrap();
    let alg = RadialAlgebra::new(RadialModel::Mobius);
    assert!(validate_chain(&alg, &chain, Level::Triple, None).unwrap().passed());
    assert_eq!(chain_intersection(&alg, &chain).unwrap(), RadialBall::zero(RadialModel::Mobius));
}

#[test]
fn chain_validation_reports_the_failing_index() {
    let z8 = CayleyGyro::cyclic(8);
    let chain = NeighborhoodChain::new(vec![set(8, &[0, 1, 7]), set(8, &[0, 1, 7])]).unwrap();
    let rep = validate_chain(&FiniteAlgebra::new(&z8), &chain, Level::Double, None).unwrap();
    assert!(!rep.passed());
    assert_eq!(rep.violations[0].witness[0], "0");
    let chain = NeighborhoodChain::new(vec![set(8, &[0, 1])]).unwrap();
    let rep = validate_chain(&FiniteAlgebra::new(&z8), &chain, Level::None, None).unwrap();
    assert!(!rep.passed());
}

#[test]
fn trivial_subgyrogroup_is_neutral_on_every_base() {
    for (name, g) in fixtures::all() {
        let zero = set(g.order(), &[g.zero_index()]);
        if g.order() <= 12 {
            assert!(is_neutral(&g, &zero, &invariant_base(&g)).unwrap().holds, "{name}");
        }
        if let Some((_, base)) = base_of(name) {
            assert!(is_neutral(&g, &zero, &base).unwrap().holds, "{name}");
        }
    }
}

#[test]
fn s3_base_is_not_neutral_for_a_reflection_subgroup() {
    let (s3, base) = base_of("s3").unwrap();
    let h = set(6, &[0, 1]);
    let out = is_neutral(&s3, &h, &base).unwrap();
    assert!(!out.holds);
    assert_eq!(out.witness, Some(set(6, &[0, 2])));
}

#[test]
fn mirrored_neutrality_agrees_on_invariant_bases() {
    for (name, g) in small_fixtures() {
        let base = invariant_base(&g);
        assert!(base.is_strongly_invariant());
        for h in all_subgyrogroups(&g) {
            if !is_l_subgyrogroup(&g, &h).unwrap().holds {
                assert!(is_neutral(&g, &h, &base).is_err());
                continue;
            }
            let a = is_neutral(&g, &h, &base).unwrap().holds;
            let b = is_neutral_mirrored(&g, &h, &base).unwrap().holds;
            assert_eq!(a, b, "{name} H={h}");
        }
    }
}

fn cosets(g: &CayleyGyro, h: &FinSubset) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.order() {
        let mut c: Vec<usize> = h.iter().map(|x| g.add(a, x)).collect();
        c.sort();
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

fn transversals(parts: &[Vec<usize>], order: usize) -> Vec<FinSubset> {
    let mut out = vec![Vec::new()];
    for part in parts {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                part.iter().map(move |&x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(|v| FinSubset::from_indices(order, v).unwrap()).collect()
}

#[test]
fn saturation_holds_whenever_its_preconditions_do() {
    let mut checked = 0usize;
    for (name, g) in small_fixtures() {
        let mut bases = vec![invariant_base(&g)];
        bases.extend(base_of(name).map(|(_, b)| b));
        for base in &bases {
            for h in all_subgyrogroups(&g) {
                if !is_l_subgyrogroup(&g, &h).unwrap().holds || !is_neutral(&g, &h, base).unwrap().holds {
                    continue;
                }
                let parts = cosets(&g, &h);
                for a in transversals(&parts, g.order()) {
                    for u in base.sets() {
                        assert!(saturation_check(&g, &a, u, &h, base).unwrap(), "{name} A={a} U={u} H={h}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 10_000, "{checked}");
}

#[test]
fn saturation_refuses_unmet_preconditions() {
    let z6 = CayleyGyro::cyclic(6);
    let base = invariant_base(&z6);
    let h = set(6, &[0, 3]);
    let u = set(6, &[0, 3]);
    assert!(saturation_check(&z6, &set(6, &[0]), &u, &h, &base).is_err());
    assert!(saturation_check(&z6, &set(6, &[0, 1, 2]), &set(6, &[0, 1]), &h, &base).is_err());
    assert!(saturation_check(&z6, &set(6, &[0, 1, 2]), &u, &h, &base).unwrap());
}

/// Every qualifying triple: `U`, `W` gyr-invariant symmetric neighbourhoods
/// with `W ⊆ U`, `H` a gyr-invariant subgyrogroup with `H⊕W ⊆ U⊕H`.
#[test]
fn char_inclusion_holds_on_every_qualifying_triple() {
    let mut qualifying = 0usize;
    for (name, g) in fixtures::all() {
        assert!(g.order() <= 16);
        let invariant: Vec<FinSubset> = symmetric_neighborhoods(&g)
            .into_iter()
            .filter(|u| !moved_by_some_gyration(&g, u))
            .collect();
        let hs: Vec<FinSubset> = all_subgyrogroups(&g)
            .into_iter()
            .filter(|h| !moved_by_some_gyration(&g, h))
            .collect();
        for u in &invariant {
            for w in invariant.iter().filter(|w| w.is_subset(u).unwrap()) {
                for h in &hs {
                    let hw = gyrokit::sets::set_oplus(&g, h, w).unwrap();
                    let uh = gyrokit::sets::set_oplus(&g, u, h).unwrap();
                    let rep = verify_char_inclusion(&g, u, w, h).unwrap();
                    if hw.is_subset(&uh).unwrap() {
                        qualifying += 1;
                        assert!(rep.passed(), "{name} U={u} W={w} H={h}: {:?}", rep.violations);
                    } else {
                        assert!(rep.violations_of(PRE_NEUTRAL).next().is_some());
                        assert!(rep.violations_of(INCLUSION).next().is_none());
                    }
                }
            }
        }
    }
    assert!(qualifying > 1_000, "{qualifying}");
}

#[test]
fn char_inclusion_reports_moved_sets_as_preconditions() {
    let g8 = fixtures::G8.load();
    let rep = verify_char_inclusion(&g8, &FinSubset::full(8), &set(8, &[0, 7]), &set(8, &[0])).unwrap();
    assert!(!rep.passed());
    assert!(rep.violations_of(PRE_INVARIANT).next().is_some());
    assert!(rep.violations_of(INCLUSION).next().is_none());
}
