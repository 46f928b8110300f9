//! Acceptance suite. Prints one line per criterion and exits non-zero when
//! any criterion fails.

use std::panic;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use gyrokit::gyro::{check_axioms, check_identities, check_table_axioms, sample_rng, Gyrogroup};
use gyrokit::metrize::{
    ball_correspondence, build_dyadic, coset_space, prenorm_audit, prenorm_audit_radial, probe_radii,
    quotient_metric, Construction, Dyadic, FinitePrenorm, Variant,
};
use gyrokit::models::fixtures::{self, ChainFixture};
use gyrokit::models::mobius::{exact, mobius_add_exact, mobius_gyr_factor};
use gyrokit::models::{einstein_add, einstein_gamma, CayleyGyro, EinsteinBall, MobiusDisk};
use gyrokit::rational::ratio;
use gyrokit::sets::finite::{gyr_invariance_witness, symmetric_neighborhoods};
use gyrokit::sets::{set_oplus, FinSubset, FiniteAlgebra};
use gyrokit::subgyro::io::{parse_base_doc, parse_chain_doc};
use gyrokit::subgyro::{
    all_subgyrogroups, finite_chain_subgroup, generate_invariant, generation_step, is_l_subgyrogroup, is_neutral,
    is_subgyrogroup, saturation_check, verify_char_inclusion, BaseFamily, Level, NeighborhoodChain,
};
use gyrokit::Strategy;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn set(order: usize, v: &[usize]) -> FinSubset {
    FinSubset::from_indices(order, v.iter().copied()).unwrap()
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn finite_chains() -> Vec<(&'static str, CayleyGyro, NeighborhoodChain<FinSubset>)> {
    fixtures::CHAINS
        .iter()
        .filter_map(|c: &ChainFixture| {
            let g = c.model?.load();
            let mut chain = parse_chain_doc(c.document).unwrap().finite_chain(&g).unwrap();
            chain.certify(&FiniteAlgebra::new(&g), Level::Double, None).unwrap();
            Some((c.name, g, chain))
        })
        .collect()
}

fn prenorm_of<'a>(g: &'a CayleyGyro, chain: &NeighborhoodChain<FinSubset>, depth: Option<u32>) -> FinitePrenorm<'a> {
    FinitePrenorm::new(build_dyadic(&FiniteAlgebra::new(g), chain, depth).unwrap(), Construction::Infimum)
}

fn moved(g: &CayleyGyro, h: &FinSubset) -> bool {
    gyr_invariance_witness(g, h).unwrap().is_some()
}

fn invariant_base(g: &CayleyGyro) -> BaseFamily<FinSubset> {
    let sets = symmetric_neighborhoods(g).into_iter().filter(|u| !moved(g, u)).collect();
    BaseFamily::new(&FiniteAlgebra::new(g), sets).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut nontrivial = 0;
    for f in fixtures::ALL {
        let g = f.load();
        if g.order() > 16 {
            return outcome(false, format!("{} has order {}", f.name, g.order()));
        }
        let rep = check_axioms(&g, Strategy::Exhaustive).unwrap();
        if !rep.passed() {
            return outcome(false, format!("{}: {}", f.name, rep.summary_line()));
        }
        nontrivial += usize::from(g.has_nontrivial_gyration());
    }
    let elapsed = start.elapsed();
    let mut mutations = 0;
    for f in fixtures::ALL {
        let t = f.load().table().clone();
        let n = t.order();
        for a in 0..n {
            for b in 0..n {
                let v = (t.op(a, b) + 1 + (a * 7 + b) % (n - 1)) % n;
                let rep = check_table_axioms(&t.with_entry(a, b, v).unwrap());
                if rep.passed() || rep.violations.iter().all(|w| w.witness.is_empty()) {
                    return outcome(false, format!("{}: mutation ({a},{b}) -> {v} undetected", f.name));
                }
                mutations += 1;
            }
        }
    }
    outcome(
        nontrivial >= 1 && elapsed < Duration::from_secs(10),
        format!(
            "{} fixtures pass exhaustively in {:.2}s, {nontrivial} with nonidentity gyrations, {mutations} mutations detected",
            fixtures::ALL.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Outcome {
    let disk = MobiusDisk::default();
    let axioms = check_axioms(&disk, Strategy::sampled(10_000, 0)).unwrap();
    let ids = check_identities(&disk, Strategy::sampled(10_000, 0)).unwrap();
    let mut rng = sample_rng(0);
    let mut modulus: f64 = 0.0;
    for _ in 0..10_000 {
        let (a, b) = (disk.sample(&mut rng), disk.sample(&mut rng));
        modulus = modulus.max((mobius_gyr_factor(a, b).unwrap().norm() - 1.0).abs());
    }
    let half = ratio(1, 2);
    let zero = ratio(0, 1);
    let s1 = mobius_add_exact(&exact(half.clone(), zero.clone()), &exact(half.clone(), zero.clone())).unwrap();
    let s2 = mobius_add_exact(&exact(zero.clone(), half.clone()), &exact(half, zero.clone())).unwrap();
    let spots = s1 == exact(ratio(4, 5), zero) && s2 == exact(ratio(6, 17), ratio(10, 17));
    let residual = axioms.max_residual.max(ids.max_residual);
    outcome(
        axioms.passed() && ids.passed() && residual < 1e-12 && modulus < 1e-12 && spots,
        format!("max residual {residual:e}, factor modulus error {modulus:e}, exact spot checks {spots}"),
    )
}

fn criterion_3() -> Outcome {
    let ball = EinsteinBall::new(1.0).unwrap();
    let u = [0.25, -0.5, 0.125];
    let identity = ball.oplus(&[0.0; 3], &u) == u && ball.oplus(&u, &[0.0; 3]) == u;
    let w = einstein_add([0.5, 0.0, 0.0], [0.5, 0.0, 0.0], 1.0).unwrap();
    let collinear = (w[0] - 0.8).abs();
    let gamma = (einstein_gamma([0.6, 0.0, 0.0], 1.0).unwrap() - 1.25).abs();
    let mut rng = sample_rng(0);
    let mut escaped = 0;
    for _ in 0..10_000 {
        let (a, b) = (ball.sample(&mut rng), ball.sample(&mut rng));
        escaped += usize::from(!ball.contains(&ball.oplus(&a, &b)));
    }
    outcome(
        identity && collinear < 1e-12 && gamma < 1e-12 && escaped == 0,
        format!("identity {identity}, collinear error {collinear:e}, gamma error {gamma:e}, {escaped} of 10000 sums outside the ball"),
    )
}

/// As stated: every symmetric `U` of every fixture of order at most 12
/// yields a fixed point that is a subgyrogroup invariant under every
/// gyration.
fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut total = 0;
    let mut not_fixed = 0;
    let mut not_sub = 0;
    let mut not_invariant = Vec::new();
    for (name, g) in fixtures::all().filter(|(_, g)| g.order() <= 12) {
        for u in symmetric_neighborhoods(&g) {
            total += 1;
            let h = generate_invariant(&g, &u).unwrap().subgroup();
            not_fixed += usize::from(generation_step(&g, &h).unwrap() != h);
            not_sub += usize::from(!is_subgyrogroup(&g, &h).unwrap().holds);
            if moved(&g, &h) {
                not_invariant.push(format!("{name} U={u} H={h}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let mut detail = format!(
        "{total} sets in {:.2}s: {not_fixed} not fixed, {not_sub} not subgyrogroups, {} not gyr-invariant",
        elapsed.as_secs_f64(),
        not_invariant.len()
    );
    if let Some(first) = not_invariant.first() {
        detail.push_str(&format!(" (first: {first})"));
    }
    outcome(
        not_fixed == 0 && not_sub == 0 && not_invariant.is_empty() && elapsed < Duration::from_secs(30),
        detail,
    )
}

fn criterion_5() -> Outcome {
    let mut audited = 0;
    for (name, g, chain) in finite_chains() {
        let rep = prenorm_audit(&prenorm_of(&g, &chain, None)).unwrap();
        if !rep.passed() {
            return outcome(false, format!("{name}: {}", rep.summary_line()));
        }
        audited += 1;
    }
    let radial = fixtures::CHAINS.iter().find(|c| c.model.is_none()).unwrap();
    let (model, mut chain) = parse_chain_doc(radial.document).unwrap().radial_chain().unwrap();
    let alg = gyrokit::sets::RadialAlgebra::new(model);
    chain.certify(&alg, Level::Double, None).unwrap();
    let fam = build_dyadic(&alg, &chain, None).unwrap();
    let rep = prenorm_audit_radial(&MobiusDisk::with_tolerance(1e-9), &fam, Strategy::sampled(10_000, 0)).unwrap();
    outcome(
        rep.passed(),
        format!("{audited} finite chains pass exhaustively; radial chain: {}", rep.summary_line()),
    )
}

fn criterion_6() -> Outcome {
    let mut spaces = Vec::new();
    for (name, g, chain) in finite_chains() {
        let p = prenorm_of(&g, &chain, None);
        let space = coset_space(&g, &finite_chain_subgroup(&g, &chain).unwrap()).unwrap();
        let (_, rep) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
        if !rep.passed() {
            return outcome(false, format!("{name}: {}", rep.summary_line()));
        }
        spaces.push(format!("{name}/{}", space.subgroup()));
    }
    let required = ["z8/{0}", "z6/{0,3}"].iter().all(|s| spaces.iter().any(|t| t == s));
    let (_, g, chain) = finite_chains().into_iter().find(|c| c.0 == "z8").unwrap();
    let p = prenorm_of(&g, &chain, Some(3));
    let space = coset_space(&g, &set(8, &[0])).unwrap();
    let (metric, _) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
    let golden = metric.rho_of(0, 1) == Dyadic::ONE && metric.rho_of(0, 2) == Dyadic::new(2, 0);
    outcome(
        required && golden,
        format!("audits pass on {}; golden values {golden}", spaces.join(" ")),
    )
}

fn criterion_7() -> Outcome {
    let mut compared = 0;
    for (name, g, chain) in finite_chains() {
        let p = prenorm_of(&g, &chain, None);
        let space = coset_space(&g, &finite_chain_subgroup(&g, &chain).unwrap()).unwrap();
        let (metric, _) = quotient_metric(&space, &p, Variant::TwoSided).unwrap();
        for x in 0..g.order() {
            for eps in probe_radii(&metric, x) {
                let cmp = ball_correspondence(&metric, x, &eps).unwrap();
                if !cmp.report.passed() {
                    return outcome(false, format!("{name}: {}", cmp.report.violations[0].detail));
                }
                compared += 1;
            }
        }
    }
    let (_, g, chain) = finite_chains().into_iter().find(|c| c.0 == "z8").unwrap();
    let p = prenorm_of(&g, &chain, Some(3));
    let space = coset_space(&g, &set(8, &[0])).unwrap();
    let (metric, _) = quotient_metric(&space, &p, Variant::AbsPrinted).unwrap();
    let cmp = ball_correspondence(&metric, 0, &ratio(3, 5)).unwrap();
    let recorded = cmp.ball == set(8, &[0, 1, 7]) && cmp.preimage == set(8, &[0]) && cmp.report.counterexamples.len() == 1;
    outcome(
        recorded,
        format!("{compared} two-sided ball comparisons agree; abs_printed counterexample recorded {recorded}"),
    )
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
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for part in parts {
        out = out
            .into_iter()
            .flat_map(|prefix| {
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

fn criterion_8() -> Outcome {
    let mut bases: Vec<(CayleyGyro, BaseFamily<FinSubset>)> = fixtures::BASES
        .iter()
        .map(|(f, doc)| {
            let g = f.load();
            let base = parse_base_doc(doc).unwrap().family(&g).unwrap();
            (g, base)
        })
        .collect();
    for (_, g) in fixtures::all().filter(|(_, g)| g.order() <= 12) {
        let base = invariant_base(&g);
        bases.push((g, base));
    }
    for (g, base) in &bases {
        if !is_neutral(g, &set(g.order(), &[g.zero_index()]), base).unwrap().holds {
            return outcome(false, "H={0} not neutral");
        }
    }
    let s3 = fixtures::S3.load();
    let s3_base = parse_base_doc(fixtures::BASES[2].1).unwrap().family(&s3).unwrap();
    let s3_out = is_neutral(&s3, &set(6, &[0, 1]), &s3_base).unwrap();
    let s3_ok = !s3_out.holds && s3_out.witness.is_some();

    let mut saturations = 0;
    for (g, base) in bases.iter().filter(|(g, _)| g.order() <= 12) {
        for h in all_subgyrogroups(g) {
            if !is_l_subgyrogroup(g, &h).unwrap().holds || !is_neutral(g, &h, base).unwrap().holds {
                continue;
            }
            for a in transversals(&cosets(g, &h), g.order()) {
                for u in base.sets() {
                    if !saturation_check(g, &a, u, &h, base).unwrap() {
                        return outcome(false, format!("saturation fails for A={a} U={u} H={h}"));
                    }
                    saturations += 1;
                }
            }
        }
    }

    let mut triples = 0;
    for (name, g) in fixtures::all().filter(|(_, g)| g.order() <= 16) {
        let inv: Vec<FinSubset> = symmetric_neighborhoods(&g).into_iter().filter(|u| !moved(&g, u)).collect();
        let hs: Vec<FinSubset> = all_subgyrogroups(&g).into_iter().filter(|h| !moved(&g, h)).collect();
        for u in &inv {
            let uu = set_oplus(&g, u, u).unwrap();
            for w in inv.iter().filter(|w| w.is_subset(u).unwrap()) {
                for h in &hs {
                    if !set_oplus(&g, h, w).unwrap().is_subset(&set_oplus(&g, u, h).unwrap()).unwrap() {
                        continue;
                    }
                    let rep = verify_char_inclusion(&g, u, w, h).unwrap();
                    if !rep.passed() {
                        return outcome(false, format!("{name} U={u} W={w} H={h} (U⊕U={uu})"));
                    }
                    triples += 1;
                }
            }
        }
    }
    outcome(
        s3_ok,
        format!(
            "H={{0}} neutral on {} bases; S3 witness {:?}; {saturations} saturation checks; {triples} char-inclusion triples",
            bases.len(),
            s3_out.witness.map(|w| w.to_string())
        ),
    )
}

fn gyrokit(args: &[String]) -> i32 {
    gyrokit_cli::execute(std::iter::once("gyrokit".to_string()).chain(args.iter().cloned())).code
}

fn sweep(out: &Path) -> Vec<(String, i32)> {
    let dir = fixture_dir();
    let f = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let mut jobs: Vec<(String, Vec<String>)> = Vec::new();
    for fx in fixtures::ALL {
        let model = f(&format!("{}.json", fx.name));
        for cmd in ["check-axioms", "check-identities", "gyr-table"] {
            jobs.push((format!("{}-{cmd}.json", fx.name), vec![cmd.into(), "--model".into(), model.clone()]));
        }
        jobs.push((format!("{}-gyr-table.csv", fx.name), vec!["gyr-table".into(), "--model".into(), model]));
    }
    for m in ["mobius", "einstein"] {
        for cmd in ["check-axioms", "check-identities"] {
            jobs.push((format!("{m}-{cmd}.json"), vec![cmd.into(), "--model".into(), f(&format!("{m}.json"))]));
        }
    }
    for c in fixtures::CHAINS {
        let chain = f(&format!("{}_chain.json", c.name));
        let mut cmds = vec!["admissible", "prenorm"];
        if c.model.is_some() {
            cmds.push("quotient");
        }
        for cmd in cmds {
            for ext in ["json", "csv"] {
                jobs.push((format!("{}-{cmd}.{ext}", c.name), vec![cmd.into(), "--chain".into(), chain.clone()]));
            }
        }
    }
    let mut codes = Vec::new();
    for (file, mut args) in jobs {
        let target = out.join(&file);
        args.extend(["--seed".into(), "0".into(), "--out".into(), target.to_string_lossy().into_owned()]);
        codes.push((file, gyrokit(&args)));
    }
    let mut reports: Vec<String> = std::fs::read_dir(out)
        .unwrap()
        .map(|e| e.unwrap().path().to_string_lossy().into_owned())
        .filter(|p| p.ends_with(".json"))
        .collect();
    reports.sort();
    let mut args = vec!["report".to_string()];
    args.extend(reports);
    args.extend(["--out".into(), out.join("summary.json").to_string_lossy().into_owned()]);
    codes.push(("summary.json".into(), gyrokit(&args)));
    codes
}

fn criterion_9(suite_start: Instant) -> Outcome {
    let runs = [tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap()];
    let codes: Vec<_> = runs.iter().map(|d| sweep(d.path())).collect();
    let failing: Vec<&(String, i32)> = codes[0].iter().filter(|(_, c)| *c != 0).collect();
    let mut differing = Vec::new();
    for (file, _) in &codes[0] {
        let a = std::fs::read(runs[0].path().join(file)).unwrap_or_default();
        let b = std::fs::read(runs[1].path().join(file)).unwrap_or_default();
        if a.is_empty() || a != b {
            differing.push(file.clone());
        }
    }
    let total = suite_start.elapsed();
    outcome(
        failing.is_empty() && differing.is_empty() && codes[0] == codes[1] && total < Duration::from_secs(120),
        format!(
            "{} artifacts, {} differ, {} non-zero exits; suite time {:.1}s",
            codes[0].len(),
            differing.len(),
            failing.len(),
            total.as_secs_f64()
        ),
    )
}

fn run(n: usize, name: &str, f: impl FnOnce() -> Outcome + panic::UnwindSafe) -> bool {
    let start = Instant::now();
    let result = panic::catch_unwind(f).unwrap_or_else(|_| outcome(false, "panicked"));
    println!(
        "criterion {n} {name}: {} [{:.2}s] {}",
        if result.pass { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64(),
        result.detail
    );
    result.pass
}

fn main() {
    let start = Instant::now();
    let results = [
        run(1, "axioms", criterion_1),
        run(2, "mobius", criterion_2),
        run(3, "einstein", criterion_3),
        run(4, "generation", criterion_4),
        run(5, "prenorm", criterion_5),
        run(6, "quotient-metric", criterion_6),
        run(7, "ball-correspondence", criterion_7),
        run(8, "neutrality-kernels", criterion_8),
        run(9, "determinism", move || criterion_9(start)),
    ];
    let failed = results.iter().filter(|p| !**p).count();
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
