use std::path::Path;

use serde_json::{json, Value};

use hopf_cyclic::constructions::*;
use hopf_cyclic::homology::*;
use hopf_cyclic::hopf::*;
use hopf_cyclic::io::{self, AnyModule};
use hopf_cyclic::report::Report;
use hopf_cyclic::theorems::*;
use hopf_cyclic::tensor::permutation_matrix;
use hopf_cyclic::{Error, FieldTag, Matrix, Result};

use crate::builtins;
use crate::{Cli, Command, Construction, Dual, HomologyKind, HomologyMethod, Outcome, Target};

struct Loaded {
    hopf: HopfAlgebra,
    candidates: Candidates,
    builtin: bool,
}

fn field_arg(cli: &Cli) -> Result<Option<FieldTag>> {
    cli.field.as_deref().map(str::parse).transpose()
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

/// A module file, or a `build`/`dualize` report carrying one under `module`.
fn read_module_file(path: &Path) -> Result<AnyModule> {
    let text = read_file(path)?;
    if let Ok(Value::Object(mut o)) = serde_json::from_str::<Value>(&text) {
        if let Some(inner @ Value::Object(_)) = o.remove("module") {
            return io::read_module(&inner.to_string());
        }
    }
    io::read_module(&text)
}

fn check_field(found: FieldTag, wanted: Option<FieldTag>, what: &str) -> Result<()> {
    match wanted {
        Some(f) if f != found => Err(Error::Input(format!("{what} is over {found} but --field is {f}"))),
        _ => Ok(()),
    }
}

fn load(name: &str, field: Option<FieldTag>) -> Result<Loaded> {
    if let Some((hopf, candidates)) = builtins::lookup(name, field.unwrap_or(FieldTag::Rationals))? {
        return Ok(Loaded { hopf, candidates, builtin: true });
    }
    let (hopf, candidates) = io::read_hopf(&read_file(Path::new(name))?)?;
    check_field(hopf.field(), field, name)?;
    Ok(Loaded { hopf, candidates, builtin: false })
}

struct Chosen {
    delta: String,
    sigma: String,
    pair: ModularPair,
}

fn choose_pair(l: &Loaded, arg: &str) -> Result<Chosen> {
    if arg == "auto" {
        if !l.builtin {
            return Err(Error::Input("--pair auto searches built-ins only; name the pair as DELTA,SIGMA".into()));
        }
        let found = search_involution_pairs(&l.hopf, &l.candidates)
            .into_iter()
            .next()
            .ok_or(Error::NotInInvolution)?;
        return Ok(Chosen { delta: found.delta, sigma: found.sigma, pair: found.pair });
    }
    let (dn, sn) = arg
        .split_once(',')
        .ok_or_else(|| Error::Input(format!("--pair expects auto or DELTA,SIGMA, got {arg:?}")))?;
    let delta = l
        .candidates
        .character(dn)
        .ok_or_else(|| Error::Input(format!("no character named {dn:?}")))?;
    let sigma = l
        .candidates
        .grouplike(sn)
        .ok_or_else(|| Error::Input(format!("no grouplike named {sn:?}")))?;
    let pair = verify_modular_pair(&l.hopf, delta, sigma)?;
    Ok(Chosen { delta: dn.to_string(), sigma: sn.to_string(), pair })
}

fn coefficients(l: &Loaded, t: &Target) -> Result<(SaydModule, Value)> {
    match &t.module {
        Some(path) => {
            let m = io::read_sayd(&l.hopf, &read_file(path)?)?;
            Ok((m, json!(path.display().to_string())))
        }
        None => {
            let c = choose_pair(l, &t.pair)?;
            let m = sayd_from_modular_pair(&l.hopf, &c.pair, SaydVariant::LR)?;
            Ok((m, json!(format!("k({},{})", c.delta, c.sigma))))
        }
    }
}

fn pair_value(c: &Chosen) -> Value {
    json!({ "delta": c.delta, "sigma": c.sigma, "in_involution": c.pair.in_involution })
}

fn header(verb: &str, l: &Loaded, truncation: usize) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("verb".into(), json!(verb));
    m.insert("hopf".into(), json!(l.hopf.name()));
    m.insert("dim".into(), json!(l.hopf.dim()));
    m.insert("field".into(), json!(l.hopf.field().to_string()));
    m.insert("truncation".into(), json!(truncation));
    m
}

fn finish(mut m: serde_json::Map<String, Value>, report: &Report) -> Outcome {
    let passed = report.all_passed();
    m.insert("passed".into(), json!(passed));
    m.insert("failures".into(), json!(report.failure_names()));
    m.insert("report".into(), serde_json::to_value(report).expect("serializable"));
    Outcome { text: io::to_json(&Value::Object(m)), passed }
}

fn build(l: &Loaded, c: Construction, t: &Target) -> Result<(AnyModule, Value)> {
    let h = &l.hopf;
    let n = t.truncation;
    let with_pair = |f: &dyn Fn(&ModularPair) -> Result<AnyModule>| -> Result<(AnyModule, Value)> {
        let chosen = choose_pair(l, &t.pair)?;
        Ok((f(&chosen.pair)?, pair_value(&chosen)))
    };
    let with_module = |f: &dyn Fn(&SaydModule) -> Result<AnyModule>| -> Result<(AnyModule, Value)> {
        let (m, name) = coefficients(l, t)?;
        Ok((f(&m)?, name))
    };
    match c {
        Construction::Alg => Ok((AnyModule::Cyclic(algebra_cyclic(&h.algebra(), n)), Value::Null)),
        Construction::Coalg => Ok((AnyModule::Cocyclic(coalgebra_cocyclic(&h.coalgebra(), n)), Value::Null)),
        Construction::Cm => with_pair(&|p| connes_moscovici(h, p, n).map(AnyModule::Cocyclic)),
        Construction::Kr => with_pair(&|p| kr_cyclic(h, p, n).map(AnyModule::Cyclic)),
        Construction::Calg => with_module(&|m| alg_with_coefficients(h, m, n).map(AnyModule::Cyclic)),
        Construction::Ccoalg => with_module(&|m| coalg_with_coefficients(h, m, n).map(AnyModule::Cocyclic)),
        Construction::K => with_module(&|m| k_dual_module(h, m, n).map(AnyModule::Cyclic)),
        Construction::Invariant => with_module(&|m| invariant_cyclic(h, m, n).map(|x| AnyModule::Cyclic(x.module))),
        Construction::Coinvariant => {
            with_module(&|m| coinvariant_cocyclic(h, m, n).map(|x| AnyModule::Cocyclic(x.module)))
        }
    }
}

fn module_value(m: &AnyModule) -> Result<(Value, Report, Value)> {
    let (json, rel) = match m {
        AnyModule::Cyclic(x) => (io::to_json(&io::cyclic_json(x)), x.check_relations()?),
        AnyModule::Cocyclic(y) => (io::to_json(&io::cocyclic_json(y)), y.check_relations()?),
    };
    let value: Value = serde_json::from_str(&json).expect("valid JSON");
    let strength = json!({ "cyclic": rel.cyclic(), "orders": rel.orders });
    Ok((value, rel.report, strength))
}

fn module_outcome(verb: &str, m: &AnyModule, extra: &[(&str, Value)]) -> Result<Outcome> {
    let (value, report, strength) = module_value(m)?;
    let mut out = serde_json::Map::new();
    out.insert("verb".into(), json!(verb));
    for (k, v) in extra {
        out.insert((*k).into(), v.clone());
    }
    out.insert("module".into(), value);
    out.insert("strength".into(), strength);
    Ok(finish(out, &report))
}

fn homology(m: &AnyModule, kind: HomologyKind, method: HomologyMethod, up_to: Option<usize>) -> Result<HomologyReport> {
    match m {
        AnyModule::Cyclic(x) => {
            let up = up_to.unwrap_or(x.truncation().saturating_sub(1));
            match (kind, method) {
                (HomologyKind::Hochschild, _) => hochschild_dims(x, up),
                (HomologyKind::Cyclic, HomologyMethod::Bicomplex) => cyclic_dims(x, up),
                (HomologyKind::Cyclic, HomologyMethod::Connes) => connes_dims(x, up),
            }
        }
        AnyModule::Cocyclic(y) => {
            let up = up_to.unwrap_or(y.truncation().saturating_sub(1));
            match (kind, method) {
                (HomologyKind::Hochschild, _) => hochschild_cohomology_dims(y, up),
                (HomologyKind::Cyclic, HomologyMethod::Bicomplex) => cyclic_cohomology_dims(y, up),
                (HomologyKind::Cyclic, HomologyMethod::Connes) => connes_cohomology_dims(y, up),
            }
        }
    }
}

fn is_commutative(h: &HopfAlgebra) -> bool {
    let flip = permutation_matrix(h.field(), &[h.dim(), h.dim()], &[1, 0]);
    h.mult == &h.mult * &flip
}

fn pairing(l: &Loaded, t: &Target) -> Result<Outcome> {
    let h = &l.hopf;
    let g = dual_hopf(h)?;
    let chosen = choose_pair(l, &t.pair)?;
    let ev = evaluation_pairing(h);
    let one = Matrix::identity(h.field(), 1);
    let m = sayd_from_modular_pair(h, &chosen.pair, SaydVariant::LR)?;
    let g_delta = Character::new(&g, chosen.pair.sigma.vector().transpose())?;
    let g_sigma = Grouplike::new(&g, chosen.pair.delta.functional().transpose())?;
    let g_pair = verify_modular_pair(&g, &g_delta, &g_sigma)?;
    let n = sayd_from_modular_pair(&g, &g_pair, SaydVariant::LR)?;
    let mut n_right = SaydModule::one_dimensional(&g, &g_delta, &g_sigma, SaydVariant::RL);
    n_right.space = n.space.clone();
    let mut r = Report::new();
    r.absorb("Hopf pairing", verify_hopf_pairing(h, &g, &ev)?);
    r.absorb("module pairing", verify_module_pairing(h, &g, &m, &n_right, &ev, &one)?);
    let p = pairing_morphism(h, &g, &m, &n, &ev, &one, t.truncation)?;
    r.absorb("pairing morphism", p.report);
    let mut out = header("check-pairing", l, t.truncation);
    out.insert("dual".into(), json!(g.name()));
    out.insert("pair".into(), pair_value(&chosen));
    out.insert("dims".into(), json!(p.map.maps.iter().map(|m| [m.rows(), m.cols()]).collect::<Vec<_>>()));
    Ok(finish(out, &r))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let field = field_arg(cli)?;
    match &cli.command {
        Command::VerifyHopf { hopf } => {
            let (name, data) = match builtins::lookup(hopf, field.unwrap_or(FieldTag::Rationals))? {
                Some((h, _)) => (h.name().to_string(), h.data().clone()),
                None => {
                    let (name, data, _) = io::parse_hopf_data(&read_file(Path::new(hopf))?)?;
                    check_field(data.field(), field, hopf)?;
                    (name, data)
                }
            };
            let report = verify_hopf_axioms(&data)?;
            let mut out = serde_json::Map::new();
            out.insert("verb".into(), json!("verify-hopf"));
            out.insert("hopf".into(), json!(name));
            out.insert("dim".into(), json!(data.dim()));
            out.insert("field".into(), json!(data.field().to_string()));
            Ok(finish(out, &report))
        }
        Command::VerifySayd { hopf, module } => {
            let l = load(hopf, field)?;
            let m = io::read_sayd(&l.hopf, &read_file(module)?)?;
            let report = verify_sayd(&l.hopf, &m)?;
            let mut out = header("verify-sayd", &l, 0);
            out.remove("truncation");
            out.insert("module".into(), json!(module.display().to_string()));
            out.insert("variant".into(), json!(format!("{:?}", m.variant)));
            Ok(finish(out, &report))
        }
        Command::Build { construction, target } => {
            let l = load(&target.hopf, field)?;
            let (m, coeff) = build(&l, *construction, target)?;
            let name = format!("{construction:?}").to_lowercase();
            let extra = [
                ("construction", json!(name)),
                ("hopf", json!(l.hopf.name())),
                ("field", json!(l.hopf.field().to_string())),
                ("truncation", json!(target.truncation)),
                ("coefficients", coeff),
            ];
            module_outcome("build", &m, &extra)
        }
        Command::Dualize { which, file } => {
            let m = read_module_file(file)?;
            let out = match (which, &m) {
                (Dual::Hat, AnyModule::Cocyclic(y)) => AnyModule::Cyclic(y.hat_dual()?),
                (Dual::Check, AnyModule::Cyclic(x)) => AnyModule::Cocyclic(x.check_dual()?),
                (Dual::Hat, AnyModule::Cyclic(_)) => {
                    return Err(Error::Input("hat applies to cocyclic modules".into()));
                }
                (Dual::Check, AnyModule::Cocyclic(_)) => {
                    return Err(Error::Input("check applies to cyclic modules".into()));
                }
            };
            module_outcome("dualize", &out, &[("source", json!(m.name()))])
        }
        Command::Homology { kind, input, construction, target, up_to, method, table } => {
            let m = match input {
                Some(path) => {
                    let m = read_module_file(path)?;
                    let f = match &m {
                        AnyModule::Cyclic(x) => x.field,
                        AnyModule::Cocyclic(y) => y.field,
                    };
                    check_field(f, field, &path.display().to_string())?;
                    m
                }
                None => build(&load(&target.hopf, field)?, *construction, target)?.0,
            };
            let report = homology(&m, *kind, *method, *up_to)?;
            let text = if *table { report.table() } else { io::to_json(&json!({ "verb": "homology", "report": report })) };
            Ok(Outcome { text, passed: true })
        }
        Command::CheckProp31 { target } => {
            let l = load(&target.hopf, field)?;
            let (m, coeff) = coefficients(&l, target)?;
            let mut r = Report::new();
            r.absorb("θ morphism", verify_theta_morphism(&l.hopf, &m, target.truncation)?);
            r.absorb("descent", verify_theta_descent(&l.hopf, &m, target.truncation)?);
            let mut out = header("check-prop31", &l, target.truncation);
            out.insert("coefficients".into(), coeff);
            let d = l.hopf.dim() as u64;
            let dims: Vec<[u64; 2]> = (0..=target.truncation as u32)
                .map(|n| {
                    let size = d.pow(n + 1) * m.dim() as u64;
                    [size, size]
                })
                .collect();
            out.insert("dims".into(), json!(dims));
            Ok(finish(out, &r))
        }
        Command::CheckTheorem31 { target } => {
            let l = load(&target.hopf, field)?;
            let (m, coeff) = coefficients(&l, target)?;
            let r = verify_theta_bar(&l.hopf, &m, target.truncation)?;
            let mut out = header("check-theorem31", &l, target.truncation);
            out.insert("coefficients".into(), coeff);
            let d = l.hopf.dim() as u64;
            let dims: Vec<u64> = (0..=target.truncation as u32).map(|n| d.pow(n) * m.dim() as u64).collect();
            out.insert("dims".into(), json!(dims));
            Ok(finish(out, &r))
        }
        Command::CheckIdentifications { target } => {
            let l = load(&target.hopf, field)?;
            let chosen = choose_pair(&l, &target.pair)?;
            let mut r = Report::new();
            let kr = invariant_to_kr(&l.hopf, &chosen.pair, target.truncation)?;
            r.absorb("invariant ≅ KR", kr.report);
            let cm = coinvariant_to_cm(&l.hopf, &chosen.pair, target.truncation)?;
            r.absorb("coinvariant ≅ CM", cm.report);
            let mut out = header("check-identifications", &l, target.truncation);
            out.insert("pair".into(), pair_value(&chosen));
            Ok(finish(out, &r))
        }
        Command::CheckLemma23 { target } => {
            let l = load(&target.hopf, field)?;
            let h = &l.hopf;
            let a = contracting_homotopy_algebra(&h.algebra(), &first_coordinate(h.field(), h.dim()), target.truncation)?;
            let c = contracting_homotopy_coalgebra(&h.coalgebra(), &h.unit, target.truncation)?;
            let mut r = Report::new();
            r.absorb("algebra", a.report.clone());
            r.absorb("coalgebra", c.report.clone());
            let mut out = header("check-lemma23", &l, target.truncation);
            out.insert("algebra_cohomology".into(), serde_json::to_value(&a.homology).expect("serializable"));
            out.insert("coalgebra_homology".into(), serde_json::to_value(&c.homology).expect("serializable"));
            out.insert("degree_zero".into(), json!({ "algebra": a.degree_zero, "coalgebra": c.degree_zero }));
            Ok(finish(out, &r))
        }
        Command::CheckPairing { target } => pairing(&load(&target.hopf, field)?, target),
        Command::Examples => {
            let f = field.unwrap_or(FieldTag::Rationals);
            let mut list = Vec::new();
            for name in builtins::all_names() {
                match builtins::lookup(&name, f) {
                    Ok(Some((h, c))) => list.push(json!({
                        "name": name,
                        "dim": h.dim(),
                        "commutative": is_commutative(&h),
                        "cocommutative": h.is_cocommutative(),
                        "characters": c.characters.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                        "grouplikes": c.grouplikes.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>(),
                    })),
                    Ok(None) => {}
                    Err(e) => list.push(json!({ "name": name, "unavailable": e.to_string() })),
                }
            }
            Ok(Outcome { text: io::to_json(&json!({ "field": f.to_string(), "examples": list })), passed: true })
        }
        Command::Export { name } => {
            let f = field.unwrap_or(FieldTag::Rationals);
            let (h, c) = builtins::lookup(name, f)?.ok_or_else(|| Error::Input(format!("no built-in named {name:?}")))?;
            Ok(Outcome { text: io::to_json(&io::hopf_json(&h, name, Some(&c))), passed: true })
        }
    }
}
