//! One handler per subcommand. Each handler turns a [`CommandSpec`] into an
//! [`Artifact`].

use std::fs;
use std::path::{Path, PathBuf};

use gyrokit::gyro::{check_axioms, check_identities, check_table_axioms, Gyrogroup, Strategy};
use gyrokit::metrize::{
    ball_correspondence, build_dyadic, coset_space, prenorm_audit, prenorm_audit_radial, quotient_metric,
    Construction, FinitePrenorm, Variant,
};
use gyrokit::models::cayley::CayleyGyro;
use gyrokit::models::einstein::{EinsteinBall, Vec3};
use gyrokit::models::io::{load_model, parse_complex, parse_finite_element, parse_model_doc, parse_vec3, Model, ModelDoc};
use gyrokit::models::mobius::{label_exact, mobius_gyr_factor_exact, MobiusDisk};
use gyrokit::rational::{parse_rational, to_f64};
use gyrokit::sets::finite::gyr_invariance_witness;
use gyrokit::sets::{parse_index_set, set_oplus, FinSubset, FiniteAlgebra, RadialAlgebra, RadialBall, RadialModel};
use gyrokit::subgyro::chain::BaseFamily;
use gyrokit::subgyro::io::{parse_base_doc, parse_chain_doc};
use gyrokit::subgyro::{
    finite_chain_subgroup, generate_invariant, generate_invariant_radial, generation_step, is_l_subgyrogroup,
    is_neutral, is_neutral_mirrored, is_subgyrogroup, kernels::missed_coset, saturation_check, verify_char_inclusion, Level,
    NeighborhoodChain,
};
use gyrokit::{CheckReport, ReportBuilder};
use serde_json::{json, Map, Value};

use crate::args::{Command, CommandSpec, Options, DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::merge::report_merge;
use crate::{Artifact, CliError};

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(spec: &CommandSpec) -> Result<Artifact> {
    let o = &spec.options;
    let name = spec.command.name();
    match &spec.command {
        Command::CheckAxioms => check_axioms_cmd(name, o),
        Command::CheckIdentities => check_identities_cmd(name, o),
        Command::GyrTable => gyr_table(name, o),
        Command::Generate => generate(name, o),
        Command::SubgyroCheck => subgyro_check(name, o),
        Command::Admissible => admissible(name, o),
        Command::Neutral => neutral(name, o),
        Command::Prenorm => prenorm(name, o),
        Command::Quotient => quotient(name, o),
        Command::Saturate => saturate(name, o),
        Command::CharInclusion => char_inclusion(name, o),
        Command::Report { files } => report(name, files),
    }
}

// ── Input loading ───────────────────────────────────────────────────────

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
}

fn required<'a, T>(value: &'a Option<T>, flag: &str) -> Result<&'a T> {
    value.as_ref().ok_or_else(|| CliError::Input(format!("--{flag} is required")))
}

fn tolerance(o: &Options) -> Result<Option<f64>> {
    o.tol
        .as_deref()
        .map(|t| {
            let r = parse_rational(t)?;
            if !gyrokit::rational::is_nonnegative(&r) {
                return Err(CliError::Input(format!("negative tolerance {t}")));
            }
            Ok(to_f64(&r))
        })
        .transpose()
}

fn load_model_file(o: &Options) -> Result<Model> {
    let text = read(required(&o.model, "model")?)?;
    let mut model = load_model(&text)?;
    if let Some(t) = tolerance(o)? {
        match &mut model {
            Model::Mobius(m) => m.tolerance = t,
            Model::Einstein { ball, .. } => ball.tolerance = t,
            Model::Cayley(_) => {}
        }
    }
    Ok(model)
}

fn load_finite(o: &Options) -> Result<CayleyGyro> {
    match load_model_file(o)? {
        Model::Cayley(g) => Ok(g),
        _ => Err(CliError::Input("this command needs a finite (cayley) model".into())),
    }
}

fn sampled(o: &Options) -> Result<Strategy> {
    if o.exhaustive {
        return Err(gyrokit::Error::ExhaustiveUnsupported.into());
    }
    Ok(Strategy::sampled(
        o.samples.unwrap_or(DEFAULT_SAMPLES),
        o.seed.unwrap_or(DEFAULT_SEED),
    ))
}

fn sets(o: &Options, model: &CayleyGyro, names: &[&str]) -> Result<Vec<FinSubset>> {
    if o.sets.len() != names.len() {
        return Err(CliError::Input(format!(
            "expected {} --set flag(s) ({}), found {}",
            names.len(),
            names.join(", "),
            o.sets.len()
        )));
    }
    o.sets
        .iter()
        .map(|s| Ok(parse_index_set(s, model.order())?))
        .collect()
}

fn base(o: &Options, model: &CayleyGyro) -> Result<BaseFamily<FinSubset>> {
    let text = read(required(&o.base, "base")?)?;
    Ok(parse_base_doc(&text)?.family(model)?)
}

fn optional_base(o: &Options, model: &CayleyGyro) -> Result<Option<BaseFamily<FinSubset>>> {
    o.base.as_ref().map(|_| base(o, model)).transpose()
}

enum LoadedChain {
    Finite {
        model: CayleyGyro,
        chain: NeighborhoodChain<FinSubset>,
    },
    Radial {
        model: RadialModel,
        chain: NeighborhoodChain<RadialBall>,
    },
}

fn load_chain(o: &Options) -> Result<LoadedChain> {
    let path = required(&o.chain, "chain")?;
    let doc = parse_chain_doc(&read(path)?)?;
    if doc.is_radial() {
        let (model, chain) = doc.radial_chain()?;
        return Ok(LoadedChain::Radial { model, chain });
    }
    let model_path: PathBuf = match (&o.model, doc.model_path()) {
        (Some(p), _) => p.clone(),
        (None, Some(rel)) => path.parent().unwrap_or(Path::new(".")).join(rel),
        (None, None) => return Err(CliError::Input("finite chain names no model; pass --model".into())),
    };
    let model = match load_model(&read(&model_path)?)? {
        Model::Cayley(g) => g,
        _ => return Err(CliError::Input("a finite chain needs a cayley model".into())),
    };
    let chain = doc.finite_chain(&model)?;
    Ok(LoadedChain::Finite { model, chain })
}

fn indices(s: &FinSubset) -> Value {
    json!(s.indices())
}

fn level(o: &Options) -> Result<Level> {
    Ok(o.level.parse::<Level>()?)
}

fn construction(o: &Options) -> Result<Construction> {
    Ok(o.construction.parse::<Construction>()?)
}

// ── gyro-core ───────────────────────────────────────────────────────────

fn check_axioms_cmd(name: &'static str, o: &Options) -> Result<Artifact> {
    let text = read(required(&o.model, "model")?)?;
    let doc = parse_model_doc(&text)?;
    let mut art = Artifact::new(name);
    if let ModelDoc::Cayley { .. } = doc {
        let table = doc.to_table()?;
        art.data.insert("order".into(), json!(table.order()));
        let report = check_table_axioms(&table);
        if report.passed() {
            let g = CayleyGyro::new(table)?;
            art.data.insert("distinct_gyrations".into(), json!(g.distinct_gyrations().len()));
        }
        art.reports.push(report);
        return Ok(art);
    }
    let report = match load_model_file(o)? {
        Model::Mobius(m) => check_axioms(&m, sampled(o)?)?,
        Model::Einstein { ball, .. } => check_axioms(&ball, sampled(o)?)?,
        Model::Cayley(_) => unreachable!("cayley documents are handled above"),
    };
    art.reports.push(report);
    Ok(art)
}

fn check_identities_cmd(name: &'static str, o: &Options) -> Result<Artifact> {
    let report = match load_model_file(o)? {
        Model::Cayley(g) => check_identities(&g, Strategy::Exhaustive)?,
        Model::Mobius(m) => check_identities(&m, sampled(o)?)?,
        Model::Einstein { ball, .. } => check_identities(&ball, sampled(o)?)?,
    };
    let mut art = Artifact::new(name);
    art.reports.push(report);
    Ok(art)
}

fn fmt_vec3(v: &Vec3) -> String {
    format!("{},{},{}", v[0], v[1], v[2])
}

fn gyr_table(name: &'static str, o: &Options) -> Result<Artifact> {
    let mut art = Artifact::new(name);
    match load_model_file(o)? {
        Model::Cayley(g) => {
            let elems = o
                .elements
                .iter()
                .map(|e| Ok(parse_finite_element(e, &g)?))
                .collect::<Result<Vec<usize>>>()?;
            match elems.as_slice() {
                [] => {
                    let mut rows = Vec::new();
                    let mut csv = String::from("x,y,perm\n");
                    for x in 0..g.order() {
                        for y in 0..g.order() {
                            if g.is_identity_gyration(x, y) {
                                continue;
                            }
                            let perm = g.gyr_perm(x, y).to_vec();
                            let joined = perm.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
                            art.lines.push(format!("gyr[{x},{y}] = [{joined}]"));
                            csv.push_str(&format!("{x},{y},{joined}\n"));
                            rows.push(json!({"x": x, "y": y, "perm": perm}));
                        }
                    }
                    art.data.insert("order".into(), json!(g.order()));
                    art.data.insert("distinct_gyrations".into(), json!(g.distinct_gyrations().len()));
                    art.data.insert("gyrations".into(), Value::Array(rows));
                    art.csv = Some(csv);
                }
                [x, y] => {
                    let perm = g.gyr_perm(*x, *y).to_vec();
                    art.lines.push(format!("gyr[{x},{y}] = {perm:?}"));
                    art.data.insert("perm".into(), json!(perm));
                }
                [x, y, z] => {
                    let w = g.gyr_at(*x, *y, *z);
                    art.lines.push(format!("gyr[{x},{y}]({z}) = {w}"));
                    art.data.insert("value".into(), json!(w));
                }
                _ => return Err(CliError::Input("gyr-table takes zero, two or three --element flags".into())),
            }
        }
        Model::Mobius(_) => {
            let elems = o
                .elements
                .iter()
                .map(|e| Ok(parse_complex(e)?))
                .collect::<Result<Vec<_>>>()?;
            if !(2..=3).contains(&elems.len()) {
                return Err(CliError::Input("a Möbius gyration needs two or three --element flags".into()));
            }
            let factor = mobius_gyr_factor_exact(&elems[0], &elems[1])?;
            art.lines.push(format!("factor = {}", label_exact(&factor)));
            art.data.insert("factor".into(), json!(label_exact(&factor)));
            if let Some(z) = elems.get(2) {
                if !MobiusDisk::default().contains(gyrokit::models::mobius::to_complex64(z)) {
                    return Err(gyrokit::Error::Domain(label_exact(z)).into());
                }
                let value = factor * z;
                art.lines.push(format!("value = {}", label_exact(&value)));
                art.data.insert("value".into(), json!(label_exact(&value)));
            }
        }
        Model::Einstein { ball, .. } => {
            let elems = o
                .elements
                .iter()
                .map(|e| Ok(parse_vec3(e)?))
                .collect::<Result<Vec<_>>>()?;
            let [x, y, z] = elems.as_slice() else {
                return Err(CliError::Input("an Einstein gyration needs three --element flags".into()));
            };
            for v in [x, y, z] {
                if !ball.contains(v) {
                    return Err(gyrokit::Error::Domain(fmt_vec3(v)).into());
                }
            }
            let w = ball.gyr(x, y, z);
            art.lines.push(format!("value = {}", fmt_vec3(&w)));
            art.data.insert("value".into(), json!(fmt_vec3(&w)));
        }
    }
    Ok(art)
}

// ── subgyro ─────────────────────────────────────────────────────────────

fn generate(name: &'static str, o: &Options) -> Result<Artifact> {
    let mut art = Artifact::new(name);
    match load_model_file(o)? {
        Model::Cayley(g) => {
            let [u] = sets(o, &g, &["U"])?[..] else { unreachable!() };
            let gen = generate_invariant(&g, &u)?;
            let h = gen.subgroup();
            let mut rep = ReportBuilder::new("generate", Strategy::Exhaustive, 0.0);
            rep.add_tuples(1);
            if generation_step(&g, &h)? != h {
                rep.fail("fixed-point", vec![h.to_string()]);
            }
            if let Some(w) = is_subgyrogroup(&g, &h)?.witness {
                rep.fail_with("subgyrogroup", vec![h.to_string()], w.to_string());
            }
            if let Some((x, y)) = gyr_invariance_witness(&g, &h)? {
                rep.fail("gyr-invariant", vec![h.to_string(), x.to_string(), y.to_string()]);
            }
            art.reports.push(rep.finish());
            for (n, s) in gen.trace.iter().enumerate() {
                art.lines.push(format!("U_{n} = {}", s.display_with(&g)));
            }
            art.lines.push(format!("H = {}", h.display_with(&g)));
            art.data
                .insert("trace".into(), Value::Array(gen.trace.iter().map(indices).collect()));
            art.data.insert("subgroup".into(), indices(&h));
            art.data.insert("steps".into(), json!(gen.steps));
        }
        model => {
            let radial = match model {
                Model::Mobius(_) => RadialModel::Mobius,
                Model::Einstein { c, .. } => RadialModel::einstein(c)?,
                Model::Cayley(_) => unreachable!(),
            };
            let [r] = o.sets.as_slice() else {
                return Err(CliError::Input("radial generation takes one --set RADIUS".into()));
            };
            let ball = RadialBall::new(radial, parse_rational(r)?, true)?;
            let gen = generate_invariant_radial(&ball)?;
            let trace: Vec<String> = gen.trace.iter().map(|b| b.to_string()).collect();
            for (n, b) in trace.iter().enumerate() {
                art.lines.push(format!("U_{n} = {b}"));
            }
            art.lines.push(format!("H = {}", gen.subgroup));
            art.data.insert("trace".into(), json!(trace));
            art.data.insert("subgroup".into(), json!(gen.subgroup.to_string()));
            art.data.insert("reaches_bound".into(), json!(gen.reaches_bound));
        }
    }
    Ok(art)
}

fn subgyro_check(name: &'static str, o: &Options) -> Result<Artifact> {
    let g = load_finite(o)?;
    let [h] = sets(o, &g, &["H"])?[..] else { unreachable!() };
    let mut art = Artifact::new(name);
    let mut rep = ReportBuilder::new("subgyro-check", Strategy::Exhaustive, 0.0);
    rep.add_tuples(1);
    let sub = is_subgyrogroup(&g, &h)?;
    art.data.insert("subgyrogroup".into(), json!(sub.holds));
    match sub.witness {
        Some(w) => {
            rep.fail_with("subgyrogroup", vec![h.to_string()], w.to_string());
            art.data.insert("l_subgyrogroup".into(), Value::Null);
        }
        None => {
            let l = is_l_subgyrogroup(&g, &h)?;
            if let Some((a, x)) = l.witness {
                rep.fail("l-subgyrogroup", vec![a.to_string(), x.to_string()]);
            }
            art.data.insert("l_subgyrogroup".into(), json!(l.holds));
        }
    }
    art.data
        .insert("gyr_invariant".into(), json!(gyr_invariance_witness(&g, &h)?.is_none()));
    art.reports.push(rep.finish());
    Ok(art)
}

fn admissible(name: &'static str, o: &Options) -> Result<Artifact> {
    let level = level(o)?;
    let mut art = Artifact::new(name);
    match load_chain(o)? {
        LoadedChain::Finite { model, mut chain } => {
            let alg = FiniteAlgebra::new(&model);
            let base = optional_base(o, &model)?;
            let rep = chain.certify(&alg, level, base.as_ref())?;
            let passed = rep.passed();
            art.reports.push(rep);
            art.data.insert("certified".into(), json!(chain.certified().name()));
            if passed && level > Level::None {
                let h = finite_chain_subgroup(&model, &chain)?;
                art.lines.push(format!("H = {}", h.display_with(&model)));
                art.data.insert("intersection".into(), indices(&h));
            }
        }
        LoadedChain::Radial { model, mut chain } => {
            if o.base.is_some() {
                return Err(CliError::Input("base families apply to finite chains only".into()));
            }
            let alg = RadialAlgebra::new(model);
            let rep = chain.certify(&alg, level, None)?;
            art.reports.push(rep);
            art.data.insert("certified".into(), json!(chain.certified().name()));
            let h = gyrokit::subgyro::chain_intersection(&alg, &chain)?;
            art.lines.push(format!("H = {h}"));
            art.data.insert("intersection".into(), json!(h.to_string()));
        }
    }
    Ok(art)
}

fn neutral(name: &'static str, o: &Options) -> Result<Artifact> {
    let g = load_finite(o)?;
    let [h] = sets(o, &g, &["H"])?[..] else { unreachable!() };
    let base = base(o, &g)?;
    let out = is_neutral(&g, &h, &base)?;
    let mirrored = is_neutral_mirrored(&g, &h, &base)?;
    let mut rep = ReportBuilder::new("neutral", Strategy::Exhaustive, 0.0);
    rep.add_tuples(base.sets().len() as u64);
    if let Some(u) = out.witness {
        rep.fail_with("neutral", vec![u.to_string()], format!("no V in the base has H⊕V ⊆ {u}⊕H"));
    }
    let mut art = Artifact::new(name);
    art.reports.push(rep.finish());
    art.data.insert("neutral".into(), json!(out.holds));
    art.data.insert("mirrored".into(), json!(mirrored.holds));
    Ok(art)
}

fn saturate(name: &'static str, o: &Options) -> Result<Artifact> {
    let g = load_finite(o)?;
    let [a, u, h] = sets(o, &g, &["A", "U", "H"])?[..] else { unreachable!() };
    let base = base(o, &g)?;
    let holds = saturation_check(&g, &a, &u, &h, &base)?;
    let mut rep = ReportBuilder::new("saturate", Strategy::Exhaustive, 0.0);
    rep.add_tuples(1);
    if !holds {
        let x = missed_coset(&g, &set_oplus(&g, &a, &u)?, &h)?;
        rep.fail("saturation", vec![x.map(|x| x.to_string()).unwrap_or_default()]);
    }
    let mut art = Artifact::new(name);
    art.reports.push(rep.finish());
    art.data.insert("saturates".into(), json!(holds));
    Ok(art)
}

fn char_inclusion(name: &'static str, o: &Options) -> Result<Artifact> {
    let g = load_finite(o)?;
    let [u, w, h] = sets(o, &g, &["U", "W", "H"])?[..] else { unreachable!() };
    let mut art = Artifact::new(name);
    art.reports.push(verify_char_inclusion(&g, &u, &w, &h)?);
    Ok(art)
}

// ── metrize ─────────────────────────────────────────────────────────────

fn prenorm(name: &'static str, o: &Options) -> Result<Artifact> {
    let construction = construction(o)?;
    let mut art = Artifact::new(name);
    match load_chain(o)? {
        LoadedChain::Finite { model, mut chain } => {
            let alg = FiniteAlgebra::new(&model);
            let cert = chain.certify(&alg, Level::Double, None)?;
            let certified = cert.passed();
            art.reports.push(cert);
            if !certified {
                return Ok(art);
            }
            let family = build_dyadic(&alg, &chain, o.depth)?;
            art.data.insert("depth".into(), json!(family.depth()));
            let prenorm = FinitePrenorm::new(family, construction);
            art.reports.push(prenorm_audit(&prenorm)?);
            art.data.insert("construction".into(), json!(construction.name()));
            let mut csv = String::from("element,n\n");
            let mut values = Vec::new();
            for x in 0..model.order() {
                let n = prenorm.n(x);
                art.lines.push(format!("N({}) = {n}", model.label_of(x)));
                csv.push_str(&format!("{},{n}\n", crate::csv_field(model.label_of(x))));
                values.push(json!({"element": x, "n": n}));
            }
            art.data.insert("values".into(), Value::Array(values));
            art.csv = Some(csv);
        }
        LoadedChain::Radial { model, mut chain } => {
            if construction != Construction::Infimum {
                return Err(CliError::Input("the regularized construction needs a finite carrier".into()));
            }
            let alg = RadialAlgebra::new(model.clone());
            let cert = chain.certify(&alg, Level::Double, None)?;
            let certified = cert.passed();
            art.reports.push(cert);
            if !certified {
                return Ok(art);
            }
            let family = build_dyadic(&alg, &chain, o.depth)?;
            let strategy = sampled(o)?;
            let tol = tolerance(o)?;
            let audit = match &model {
                RadialModel::Mobius => {
                    let mut m = MobiusDisk::default();
                    if let Some(t) = tol {
                        m.tolerance = t;
                    }
                    prenorm_audit_radial(&m, &family, strategy)?
                }
                RadialModel::Einstein { c } => {
                    let mut b = EinsteinBall::new(to_f64(c))?;
                    if let Some(t) = tol {
                        b.tolerance = t;
                    }
                    prenorm_audit_radial(&b, &family, strategy)?
                }
            };
            art.reports.push(audit);
            art.data.insert("depth".into(), json!(family.depth()));
            let mut csv = String::from("q,ball\n");
            let mut levels = Vec::new();
            for (q, ball) in family.stored() {
                art.lines.push(format!("V({q}) = {ball}"));
                csv.push_str(&format!("{q},{ball}\n"));
                levels.push(json!({"q": q, "ball": ball.to_string()}));
            }
            art.data.insert("levels".into(), Value::Array(levels));
            art.csv = Some(csv);
        }
    }
    Ok(art)
}

fn quotient(name: &'static str, o: &Options) -> Result<Artifact> {
    let variant: Variant = o.variant.parse()?;
    let construction = construction(o)?;
    let LoadedChain::Finite { model, mut chain } = load_chain(o)? else {
        return Err(CliError::Input("quotient needs a finite chain".into()));
    };
    let mut art = Artifact::new(name);
    let alg = FiniteAlgebra::new(&model);
    let cert = chain.certify(&alg, Level::Double, None)?;
    let certified = cert.passed();
    art.reports.push(cert);
    if !certified {
        return Ok(art);
    }
    let family = build_dyadic(&alg, &chain, o.depth)?;
    let prenorm = FinitePrenorm::new(family, construction);
    let h = finite_chain_subgroup(&model, &chain)?;
    let space = coset_space(&model, &h)?;
    let (metric, audit) = quotient_metric(&space, &prenorm, variant)?;
    art.reports.push(audit);

    art.data.insert("subgroup".into(), indices(&h));
    art.data.insert(
        "cosets".into(),
        Value::Array(space.cosets().iter().map(indices).collect()),
    );
    let rows: Vec<Value> = metric
        .rows()
        .into_iter()
        .map(|(i, j, rho)| json!({"coset_i": i, "coset_j": j, "rho": rho}))
        .collect();
    art.data.insert("rho".into(), Value::Array(rows));
    for (i, j, rho) in metric.rows() {
        art.lines.push(format!("rho({i},{j}) = {rho}"));
    }
    art.csv = Some(metric.to_csv());

    if let Some(eps) = &o.eps {
        let eps = parse_rational(eps)?;
        let centres = if o.elements.is_empty() {
            (0..model.order()).collect()
        } else {
            o.elements
                .iter()
                .map(|e| Ok(parse_finite_element(e, &model)?))
                .collect::<Result<Vec<usize>>>()?
        };
        let mut balls = Vec::new();
        for x in centres {
            let cmp = ball_correspondence(&metric, x, &eps)?;
            balls.push(json!({
                "centre": x,
                "ball": indices(&cmp.ball),
                "preimage": indices(&cmp.preimage),
            }));
            art.reports.push(cmp.report);
        }
        art.data.insert("eps".into(), json!(gyrokit::rational::format_rational(&eps)));
        art.data.insert("balls".into(), Value::Array(balls));
    }
    Ok(art)
}

// ── report merging ──────────────────────────────────────────────────────

fn reports_in(value: Value, path: &Path) -> Result<Vec<CheckReport>> {
    let bad = |e: serde_json::Error| CliError::Input(format!("{}: not a report: {e}", path.display()));
    match value {
        Value::Array(items) => items
            .into_iter()
            .map(|v| serde_json::from_value(v).map_err(bad))
            .collect(),
        Value::Object(mut obj) if obj.contains_key("reports") => {
            let inner = obj.remove("reports").unwrap_or(Value::Null);
            serde_json::from_value(inner).map_err(bad)
        }
        other => Ok(vec![serde_json::from_value(other).map_err(bad)?]),
    }
}

fn report(name: &'static str, files: &[PathBuf]) -> Result<Artifact> {
    let mut all = Vec::new();
    for f in files {
        let text = read(f)?;
        let value: Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: invalid JSON: {e}", f.display())))?;
        all.extend(reports_in(value, f)?);
    }
    let summary = report_merge(&all);
    let mut art = Artifact::new(name);
    art.ok = summary.verdict.is_pass();
    for c in &summary.checks {
        art.lines.push(format!(
            "{}: {} reports, {} passed, {} failed, {} tuples, {} violations",
            c.check, c.reports, c.passed, c.failed, c.tuples, c.violations
        ));
    }
    let mut csv = String::from("check,reports,passed,failed,tuples,violations,counterexamples\n");
    for c in summary.checks.iter().chain(std::iter::once(&summary.totals)) {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            crate::csv_field(&c.check),
            c.reports,
            c.passed,
            c.failed,
            c.tuples,
            c.violations,
            c.counterexamples
        ));
    }
    art.csv = Some(csv);
    let Value::Object(mut map) = serde_json::to_value(&summary).map_err(|e| CliError::Input(e.to_string()))? else {
        unreachable!("a summary serializes to an object")
    };
    map.remove("verdict");
    art.data = Map::from_iter(map);
    Ok(art)
}
