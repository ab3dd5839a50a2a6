use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use hopf_cyclic::constructions::*;
use hopf_cyclic::cyclic::{ParaCocyclicModule, ParaCyclicModule, RelationReport};
use hopf_cyclic::homology::*;
use hopf_cyclic::hopf::*;
use hopf_cyclic::theorems::*;
use hopf_cyclic::{FieldTag, Matrix};

const Q: FieldTag = FieldTag::Rationals;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn c2() -> HopfAlgebra {
    group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap()
}

fn c2_fixture() -> (HopfAlgebra, ModularPair, SaydModule) {
    let h = c2();
    let pair = verify_modular_pair(&h, &Character::counit(&h), &Grouplike::unit(&h)).unwrap();
    let m = sayd_from_modular_pair(&h, &pair, SaydVariant::LR).unwrap();
    (h, pair, m)
}

fn h4_fixtures() -> Vec<(HopfAlgebra, ModularPair, SaydModule)> {
    let h = sweedler_h4(Q);
    search_involution_pairs(&h, &sweedler_h4_candidates(&h))
        .into_iter()
        .map(|found| {
            let m = sayd_from_modular_pair(&h, &found.pair, SaydVariant::LR).unwrap();
            (h.clone(), found.pair, m)
        })
        .collect()
}

/// Both fixtures with their truncation: k[C₂] at 4, H₄ at 3.
fn fixtures() -> Vec<(HopfAlgebra, ModularPair, SaydModule, usize)> {
    let (h, p, m) = c2_fixture();
    let mut v = vec![(h, p, m, 4)];
    v.extend(h4_fixtures().into_iter().map(|(h, p, m)| (h, p, m, 3)));
    v
}

fn report_ok(r: &hopf_cyclic::report::Report, what: &str) -> Outcome {
    ensure(r.all_passed(), format!("{what}: {:?}", r.failure_names()))
}

fn hopf_suite() -> Vec<HopfAlgebra> {
    let mut v = vec![ground_field(Q)];
    for n in 2..=4 {
        v.push(group_algebra(Q, &format!("c{n}"), &cyclic_group_table(n)).unwrap());
    }
    v.push(group_algebra(Q, "s3", &symmetric_group_s3_table()).unwrap());
    let duals: Vec<_> = v.iter().map(|h| dual_hopf(h).unwrap()).collect();
    v.extend(duals);
    v.push(sweedler_h4(Q));
    v
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let suite = hopf_suite();
    ensure(suite.len() == 11, "eleven Hopf algebras")?;
    for h in &suite {
        report_ok(&verify_hopf_axioms(h.data()).unwrap(), h.name())?;
    }
    for h in suite.iter().filter(|h| h.dim() > 1) {
        let mut bad = h.data().clone();
        bad.antipode = Matrix::zeros(Q, h.dim(), h.dim());
        let r = verify_hopf_axioms(&bad).unwrap();
        ensure(r.failed("antipode left") && r.failed("antipode right"), format!("{}: zero antipode", h.name()))?;
        let mut bad = h.data().clone();
        bad.counit = Matrix::zeros(Q, 1, h.dim());
        let r = verify_hopf_axioms(&bad).unwrap();
        ensure(r.failed("left counit"), format!("{}: zero counit", h.name()))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))
}

const CYCLIC_NAMES: [&str; 7] = [
    "face-face",
    "degeneracy-degeneracy",
    "face-degeneracy",
    "face-cyclic",
    "first-face-cyclic",
    "degeneracy-cyclic",
    "first-degeneracy-cyclic",
];
const COCYCLIC_NAMES: [&str; 7] = [
    "coface-coface",
    "codegeneracy-codegeneracy",
    "codegeneracy-coface",
    "cyclic-coface",
    "cyclic-first-coface",
    "cyclic-codegeneracy",
    "cyclic-first-codegeneracy",
];

fn relations_ok(r: &RelationReport, names: &[&str], cyclic: bool, what: &str) -> Outcome {
    for name in names {
        ensure(r.report.checks.iter().any(|c| c.name == *name), format!("{what}: {name} never checked"))?;
        ensure(!r.report.failed(name), format!("{what}: {name} fails"))?;
    }
    ensure(r.paracyclic(), format!("{what}: {:?}", r.report.failure_names()))?;
    ensure(!cyclic || r.cyclic(), format!("{what}: orders {:?}", r.orders))
}

fn cyclic_ok(x: &ParaCyclicModule, cyclic: bool) -> Outcome {
    relations_ok(&x.check_relations().map_err(|e| e.to_string())?, &CYCLIC_NAMES, cyclic, &x.name)
}

fn cocyclic_ok(y: &ParaCocyclicModule, cyclic: bool) -> Outcome {
    relations_ok(&y.check_relations().map_err(|e| e.to_string())?, &COCYCLIC_NAMES, cyclic, &y.name)
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for (h, pair, _, n) in fixtures() {
        cyclic_ok(&algebra_cyclic(&h.algebra(), n), true)?;
        cocyclic_ok(&coalgebra_cocyclic(&h.coalgebra(), n), true)?;
        cocyclic_ok(&connes_moscovici(&h, &pair, n).unwrap(), true)?;
        cyclic_ok(&kr_cyclic(&h, &pair, n).unwrap(), true)?;
    }
    for (h, _, m) in h4_fixtures() {
        cyclic_ok(&alg_with_coefficients(&h, &m, 3).unwrap(), false)?;
        cocyclic_ok(&coalg_with_coefficients(&h, &m, 3).unwrap(), false)?;
        cyclic_ok(&k_dual_module(&h, &m, 3).unwrap(), false)?;
        cyclic_ok(&invariant_cyclic(&h, &m, 3).unwrap().module, true)?;
        cocyclic_ok(&coinvariant_cocyclic(&h, &m, 3).unwrap().module, true)?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(120), format!("took {elapsed:?}"))
}

fn criterion_3() -> Outcome {
    for (h, pair, m, n) in fixtures() {
        let cyclic = [
            (algebra_cyclic(&h.algebra(), n), true),
            (kr_cyclic(&h, &pair, n).unwrap(), true),
            (alg_with_coefficients(&h, &m, n).unwrap(), false),
            (k_dual_module(&h, &m, n).unwrap(), false),
            (invariant_cyclic(&h, &m, n).unwrap().module, true),
        ];
        for (x, strict) in &cyclic {
            cocyclic_ok(&x.check_dual().map_err(|e| format!("{}: {e}", x.name))?, *strict)?;
        }
        let cocyclic = [
            (coalgebra_cocyclic(&h.coalgebra(), n), true),
            (connes_moscovici(&h, &pair, n).unwrap(), true),
            (coalg_with_coefficients(&h, &m, n).unwrap(), false),
            (coinvariant_cocyclic(&h, &m, n).unwrap().module, true),
        ];
        for (y, strict) in &cocyclic {
            cyclic_ok(&y.hat_dual().map_err(|e| format!("{}: {e}", y.name))?, *strict)?;
        }
        let printed = k_dual_printed(&h, &m, n).unwrap();
        let hatted = coalg_with_coefficients(&h, &m, n).unwrap().hat_dual().unwrap();
        ensure(
            printed.faces == hatted.faces
                && printed.degeneracies == hatted.degeneracies
                && printed.cyclic == hatted.cyclic,
            format!("{}: printed K differs from the hat dual", h.name()),
        )?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    for h in [c2(), sweedler_h4(Q)] {
        let a = contracting_homotopy_algebra(&h.algebra(), &first_coordinate(Q, h.dim()), 4).unwrap();
        ensure(a.passed(), format!("{} algebra: {:?}", h.name(), a.report.failure_names()))?;
        ensure(a.homology.values()[1..=3] == [0, 0, 0], format!("{} algebra HH", h.name()))?;
        let c = contracting_homotopy_coalgebra(&h.coalgebra(), &h.unit, 4).unwrap();
        ensure(c.passed(), format!("{} coalgebra: {:?}", h.name(), c.report.failure_names()))?;
        ensure(c.homology.values()[1..=3] == [0, 0, 0], format!("{} coalgebra HH", h.name()))?;
        for r in [&a.report, &c.report] {
            for d in 1..=3 {
                ensure(
                    r.checks.iter().any(|k| k.degree == Some(d) && k.name.contains("= id") && k.passed()),
                    format!("{}: homotopy identity in degree {d}", h.name()),
                )?;
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (h, _, m, n) in fixtures() {
        report_ok(&verify_theta_morphism(&h, &m, n).unwrap(), h.name())?;
        report_ok(&verify_theta_descent(&h, &m, n).unwrap(), h.name())?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for (h, _, m, n) in fixtures() {
        let co = coinvariant_cocyclic(&h, &m, n).unwrap();
        let inv = invariant_cyclic(&h, &m, n).unwrap();
        for k in 0..=n {
            phi_maps(&h, &m, k, &co.quotients[k]).map_err(|e| e.to_string())?;
            phi_prime_maps(&h, &m, k, &inv.inclusions[k]).map_err(|e| e.to_string())?;
        }
        let r = verify_theta_bar(&h, &m, n).unwrap();
        report_ok(&r, h.name())?;
        ensure(r.checks.iter().any(|c| c.name == "cyclic homology agrees"), "homology comparison ran")?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for (h, pair, _, n) in fixtures() {
        for id in [invariant_to_kr(&h, &pair, n).unwrap(), coinvariant_to_cm(&h, &pair, n).unwrap()] {
            ensure(id.map.is_invertible(), format!("{}: not invertible", h.name()))?;
            ensure(id.passed(), format!("{}: {:?}", h.name(), id.report.failure_names()))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    let h = c2();
    let g = dual_hopf(&h).unwrap();
    let ev = evaluation_pairing(&h);
    report_ok(&verify_hopf_pairing(&h, &g, &ev).unwrap(), "Hopf pairing")?;
    let one = Matrix::identity(Q, 1);
    let m = SaydModule::trivial(&h, SaydVariant::LR);
    let n = SaydModule::trivial(&g, SaydVariant::RL);
    report_ok(&verify_module_pairing(&h, &g, &m, &n, &ev, &one).unwrap(), "module pairing")?;
    let n = SaydModule::trivial(&g, SaydVariant::LR);
    let p = pairing_morphism(&h, &g, &m, &n, &ev, &one, 3).unwrap();
    report_ok(&p.report, "pairing morphism")?;
    ensure(p.map.maps.iter().all(|x| x.is_square() && x.rank() == x.rows()), "invertible")
}

fn criterion_9() -> Outcome {
    let k = algebra_cyclic(&ground_field(Q).algebra(), 4);
    ensure(cyclic_dims(&k, 3).unwrap().values() == [1, 0, 1, 0], "HC of k via the bicomplex")?;
    ensure(connes_dims(&k, 3).unwrap().values() == [1, 0, 1, 0], "HC of k via the quotient")?;
    let a = algebra_cyclic(&c2().algebra(), 4);
    ensure(hochschild_dims(&a, 3).unwrap().values() == [2, 0, 0, 0], "HH of k[C₂]")?;
    let mut cyclic = vec![k, a];
    let mut cocyclic = vec![coalgebra_cocyclic(&ground_field(Q).coalgebra(), 4)];
    for (h, pair, m, n) in fixtures() {
        cyclic.push(algebra_cyclic(&h.algebra(), n));
        cyclic.push(kr_cyclic(&h, &pair, n).unwrap());
        cyclic.push(invariant_cyclic(&h, &m, n).unwrap().module);
        cocyclic.push(coalgebra_cocyclic(&h.coalgebra(), n));
        cocyclic.push(connes_moscovici(&h, &pair, n).unwrap());
        cocyclic.push(coinvariant_cocyclic(&h, &m, n).unwrap().module);
    }
    for x in &cyclic {
        let up = x.truncation() - 1;
        let (b, c) = (cyclic_dims(x, up).unwrap().values(), connes_dims(x, up).unwrap().values());
        ensure(b == c, format!("{}: {b:?} vs {c:?}", x.name))?;
    }
    for y in &cocyclic {
        let up = y.truncation() - 1;
        let (b, c) = (cyclic_cohomology_dims(y, up).unwrap().values(), connes_cohomology_dims(y, up).unwrap().values());
        ensure(b == c, format!("{}: {b:?} vs {c:?}", y.name))?;
    }
    Ok(())
}

fn hopfcyc(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfcyc")).args(args).output().unwrap();
    let mut bytes = out.status.code().unwrap_or(-1).to_string().into_bytes();
    bytes.extend(out.stdout);
    bytes
}

fn criterion_10() -> Outcome {
    let runs: [&[&str]; 7] = [
        &["examples"],
        &["verify-hopf", "h4"],
        &["check-theorem31", "--hopf", "h4", "--pair", "auto", "--N", "3"],
        &["check-identifications", "--hopf", "h4", "--N", "2"],
        &["check-pairing", "--hopf", "c2", "--N", "3"],
        &["build", "--construction", "coinvariant", "--hopf", "h4", "--N", "2"],
        &["homology", "--kind", "cyclic", "--construction", "kr", "--hopf", "h4", "--N", "3", "--table"],
    ];
    for args in runs {
        let first = hopfcyc(args);
        ensure(first.len() > 2, format!("{args:?}: no output"))?;
        ensure(first == hopfcyc(args), format!("{args:?}: outputs differ"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut failed = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(c)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(()) => println!("criterion {}: pass", i + 1),
            Err(why) => {
                println!("criterion {}: fail ({why})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
