mod common;

use common::{finite_chains, set};
use gyrokit::gyro::Gyrogroup;
use gyrokit::metrize::audit::prenorm_audit_radial;
use gyrokit::metrize::{
    ball_correspondence, build_dyadic, coset_space, prenorm_audit, probe_radii, quotient_metric, Construction,
    Dyadic, FinitePrenorm, Variant,
};
use gyrokit::models::{CayleyGyro, EinsteinBall, MobiusDisk};
use gyrokit::rational::ratio;
use gyrokit::sets::{set_oplus, FinSubset, FiniteAlgebra, RadialAlgebra, RadialBall, RadialModel};
use gyrokit::subgyro::{chain_intersection, finite_chain_subgroup, Level, NeighborhoodChain};
use gyrokit::Strategy;

/// `V(m / 2ⁿ)` straight from the recursion, with no sharing.
fn v_oracle(g: &CayleyGyro, chain: &NeighborhoodChain<FinSubset>, m: u64, n: u32) -> FinSubset {
    if m == 1u64 << n {
        return *chain.set(0);
    }
    if m % 2 == 0 {
        return v_oracle(g, chain, m / 2, n - 1);
    }
    if m == 1 {
        return *chain.set(n as usize);
    }
    set_oplus(g, chain.set(n as usize), &v_oracle(g, chain, m / 2, n - 1)).unwrap()
}

fn certified(mut items: Vec<(&'static str, CayleyGyro, NeighborhoodChain<FinSubset>)>) -> Vec<(&'static str, CayleyGyro, NeighborhoodChain<FinSubset>)> {
    for (_, g, chain) in &mut items {
        chain.certify(&FiniteAlgebra::new(g), Level::Double, None).unwrap();
    }
    items
}

#[test]
fn stored_family_matches_the_recursion() {
    for (name, g, chain) in certified(finite_chains()) {
        let fam = build_dyadic(&FiniteAlgebra::new(&g), &chain, None).unwrap();
        assert_eq!(fam.depth(), chain.len() as u32 + 2);
        for (q, v) in fam.stored() {
            assert_eq!(*v, v_oracle(&g, &chain, q.numerator(), q.exponent()), "{name} V({q})");
        }
        let pairs: Vec<_> = fam.stored().collect();
        assert!(pairs.windows(2).all(|w| w[0].1.is_subset(w[1].1).unwrap()), "{name}");
    }
}

/// At a depth well past the chain length the truncated scan reaches the
/// infimum, and it never undercuts it at any depth.
#[test]
fn exact_prenorm_is_the_limit_of_truncated_scans() {
    for (name, g, chain) in certified(finite_chains()) {
        let alg = FiniteAlgebra::new(&g);
        let exact = build_dyadic(&alg, &chain, None).unwrap();
        for depth in 1..=12 {
            let fam = build_dyadic(&alg, &chain, Some(depth)).unwrap();
            for x in 0..g.order() {
                assert_eq!(fam.eval(&x), exact.eval(&x));
                assert!(fam.eval_truncated(&x) >= exact.eval(&x), "{name} x={x} D={depth}");
            }
        }
        let deep = build_dyadic(&alg, &chain, Some(12)).unwrap();
        for x in 0..g.order() {
            let scanned = (1..=4096u64)
                .find(|&j| v_oracle(&g, &chain, j, 12).contains(x))
                .map(|j| Dyadic::new(j, 12))
                .unwrap_or(Dyadic::ONE);
            assert_eq!(deep.eval_truncated(&x), scanned);
            assert!(scanned.to_f64() - exact.eval(&x).to_f64() <= 1.0 / 4096.0, "{name} x={x}");
        }
    }
}

#[test]
fn z8_prenorm_values() {
    let (_, g, chain) = certified(finite_chains()).into_iter().find(|c| c.0 == "z8").unwrap();
    let fam = build_dyadic(&FiniteAlgebra::new(&g), &chain, Some(3)).unwrap();
    let p = FinitePrenorm::new(fam, Construction::Infimum);
    let expected = [(0, 0), (1, 1), (2, 2), (3, 2), (4, 2), (5, 2), (6, 2), (7, 1)];
    for (x, halves) in expected {
        assert_eq!(p.n(x), Dyadic::new(halves, 1), "N({x})");
    }
}

#[test]
fn prenorm_audits_pass_on_bundled_chains() {
    for (name, g, chain) in certified(finite_chains()) {
        let fam = build_dyadic(&FiniteAlgebra::new(&g), &chain, None).unwrap();
        for construction in [Construction::Infimum, Construction::Regularized] {
            let p = FinitePrenorm::new(fam.clone(), construction);
            let rep = prenorm_audit(&p).unwrap();
            assert!(rep.passed(), "{name} {construction}: {:?}", &rep.violations[..rep.violations.len().min(3)]);
        }
        let inf = FinitePrenorm::new(fam.clone(), Construction::Infimum);
        let reg = FinitePrenorm::new(fam, Construction::Regularized);
        assert_eq!(inf.values(), reg.values(), "{name}");
    }
}

fn mobius_chain() -> (RadialAlgebra, NeighborhoodChain<RadialBall>) {
    let alg = RadialAlgebra::new(RadialModel::Mobius);
    let balls = [(1, 4), (1, 16), (0, 1)]
        .map(|(p, q)| RadialBall::new(RadialModel::Mobius, ratio(p, q), true).unwrap());
    let mut chain = NeighborhoodChain::new(balls.to_vec()).unwrap();
    chain.certify(&alg, Level::Triple, None).unwrap();
    (alg, chain)
}

#[test]
fn radial_prenorm_audits() {
    let (alg, chain) = mobius_chain();
    let fam = build_dyadic(&alg, &chain, None).unwrap();
    let rep = prenorm_audit_radial(&MobiusDisk::default(), &fam, Strategy::sampled(2_000, 0)).unwrap();
    assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(3)]);
    assert_eq!(rep.tolerance, 1e-9);

    let model = RadialModel::einstein(ratio(1, 1)).unwrap();
    let alg = RadialAlgebra::new(model.clone());
    let balls = [(1, 2), (1, 8), (0, 1)].map(|(p, q)| RadialBall::new(model.clone(), ratio(p, q), true).unwrap());
    let mut chain = NeighborhoodChain::new(balls.to_vec()).unwrap();
    chain.certify(&alg, Level::Triple, None).unwrap();
    let fam = build_dyadic(&alg, &chain, None).unwrap();
    let rep = prenorm_audit_radial(&EinsteinBall::new(1.0).unwrap(), &fam, Strategy::sampled(1_000, 0)).unwrap();
    assert!(rep.passed(), "{:?}", &rep.violations[..rep.violations.len().min(3)]);
}

#[test]
fn radial_values_follow_the_ball_radii() {
    let (alg, chain) = mobius_chain();
    let fam = build_dyadic(&alg, &chain, Some(2)).unwrap();
    let disk = MobiusDisk::default();
    assert_eq!(fam.eval(&ratio(0, 1)), Dyadic::ZERO);
    assert_eq!(fam.eval(&ratio(1, 256)), Dyadic::new(1, 1));
    assert_eq!(fam.eval(&ratio(1, 16)), Dyadic::ONE);
    assert_eq!(fam.eval(&ratio(9, 100)), Dyadic::ONE);
    let a = num_complex::Complex64::new(0.2, 0.0);
    assert!((disk.oplus(&a, &a).norm() - 0.4 / 1.04).abs() < 1e-15);
}

/// Ground-truth quotient checks computed from the prenorm values alone.
#[test]
fn quotient_metric_matches_brute_force() {
    for (name, g, chain) in certified(finite_chains()) {
        let fam = build_dyadic(&FiniteAlgebra::new(&g), &chain, None).unwrap();
        let p = FinitePrenorm::new(fam, Construction::Infimum);
        let h = finite_chain_subgroup(&g, &chain).unwrap();
        let space = coset_space(&g, &h).unwrap();
        let (metric, rep) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
        assert!(rep.passed(), "{name}: {:?}", rep.violations);
        let n = g.order();
        let rho = |x: usize, y: usize| p.n(g.add(g.neg(x), y)) + p.n(g.add(g.neg(y), x));
        for x in 0..n {
            for y in 0..n {
                let same = h.contains(g.add(g.neg(x), y));
                assert_eq!(metric.rho_of(x, y), rho(x, y), "{name} ({x},{y})");
                assert_eq!(rho(x, y).is_zero(), same, "{name} ({x},{y})");
                assert_eq!(rho(x, y), rho(y, x));
                for z in 0..n {
                    assert!(rho(x, y) <= rho(x, z) + rho(z, y));
                }
            }
        }
    }
}

#[test]
fn quotient_golden_values() {
    let all = certified(finite_chains());
    let (_, g, chain) = all.iter().find(|c| c.0 == "z8").unwrap();
    let fam = build_dyadic(&FiniteAlgebra::new(g), chain, Some(3)).unwrap();
    let p = FinitePrenorm::new(fam, Construction::Infimum);
    let space = coset_space(g, &set(8, &[0])).unwrap();
    let (metric, _) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
    assert_eq!(metric.rho_of(0, 1), Dyadic::ONE);
    assert_eq!(metric.rho_of(0, 2), Dyadic::new(2, 0));
    assert!(metric.to_csv().lines().any(|l| l == "0,1,1"));

    let (_, g, chain) = all.iter().find(|c| c.0 == "z6").unwrap();
    let fam = build_dyadic(&FiniteAlgebra::new(g), chain, None).unwrap();
    let p = FinitePrenorm::new(fam, Construction::Infimum);
    let h = chain_intersection(&FiniteAlgebra::new(g), chain).unwrap();
    assert_eq!(h, set(6, &[0, 3]));
    let space = coset_space(g, &h).unwrap();
    assert_eq!(space.cosets(), &[set(6, &[0, 3]), set(6, &[1, 4]), set(6, &[2, 5])]);
    let (metric, rep) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
    assert!(rep.passed());
    for a in 0..3 {
        for b in 0..3 {
            let expected = if a == b { Dyadic::ZERO } else { Dyadic::new(2, 0) };
            assert_eq!(metric.rho(a, b), expected);
        }
    }
}

#[test]
fn mismatched_subgroup_is_rejected() {
    let all = certified(finite_chains());
    let (_, g, chain) = all.iter().find(|c| c.0 == "z8").unwrap();
    let fam = build_dyadic(&FiniteAlgebra::new(g), chain, None).unwrap();
    let p = FinitePrenorm::new(fam, Construction::Infimum);
    let space = coset_space(g, &set(8, &[0, 4])).unwrap();
    assert!(quotient_metric(&space, &p, Variant::TwoSided).is_err());
}

#[test]
fn two_sided_balls_correspond_exhaustively() {
    let mut compared = 0;
    for (name, g, chain) in certified(finite_chains()) {
        let fam = build_dyadic(&FiniteAlgebra::new(&g), &chain, None).unwrap();
        let p = FinitePrenorm::new(fam, Construction::Infimum);
        let space = coset_space(&g, &finite_chain_subgroup(&g, &chain).unwrap()).unwrap();
        let (metric, _) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
        for x in 0..g.order() {
            let mut radii = probe_radii(&metric, x);
            radii.extend((1..=24).map(|k| ratio(k, 8)));
            for eps in &radii {
                let cmp = ball_correspondence(&metric, x, eps).unwrap();
                assert!(cmp.report.passed(), "{name} x={x} eps={eps}");
                assert_eq!(cmp.ball, cmp.preimage);
                compared += 1;
            }
        }
    }
    assert!(compared > 500);
}

#[test]
fn printed_variant_records_the_z8_counterexample() {
    let all = certified(finite_chains());
    let (_, g, chain) = all.iter().find(|c| c.0 == "z8").unwrap();
    let fam = build_dyadic(&FiniteAlgebra::new(g), chain, Some(3)).unwrap();
    let p = FinitePrenorm::new(fam, Construction::Infimum);
    let space = coset_space(g, &set(8, &[0])).unwrap();
    let (metric, _) = quotient_metric(&space, &p, Variant::AbsPrinted).unwrap();
    let cmp = ball_correspondence(&metric, 0, &ratio(3, 5)).unwrap();
    assert_eq!(cmp.ball, set(8, &[0, 1, 7]));
    assert_eq!(cmp.preimage, set(8, &[0]));
    assert!(cmp.report.passed());
    assert_eq!(cmp.report.counterexamples.len(), 1);

    let (metric, _) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
    let cmp = ball_correspondence(&metric, 0, &ratio(3, 5)).unwrap();
    assert_eq!(cmp.ball, set(8, &[0]));
    assert!(cmp.report.counterexamples.is_empty());
    let whole = ball_correspondence(&metric, 3, &ratio(100, 1)).unwrap();
    assert_eq!(whole.ball, FinSubset::full(8));
}
