use hopf_cyclic::constructions::*;
use hopf_cyclic::cyclic::{ParaCocyclicModule, ParaCyclicModule, RelationReport};
use hopf_cyclic::hopf::*;
use hopf_cyclic::FieldTag;

const Q: FieldTag = FieldTag::Rationals;

fn c2() -> HopfAlgebra {
    group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap()
}

fn h4_with_pair() -> (HopfAlgebra, ModularPair, SaydModule) {
    let h = sweedler_h4(Q);
    let pair = search_involution_pairs(&h, &sweedler_h4_candidates(&h)).remove(0).pair;
    let m = sayd_from_modular_pair(&h, &pair, SaydVariant::LR).unwrap();
    (h, pair, m)
}

fn c2_with_pair() -> (HopfAlgebra, ModularPair, SaydModule) {
    let h = c2();
    let pair = verify_modular_pair(&h, &Character::counit(&h), &Grouplike::unit(&h)).unwrap();
    let m = sayd_from_modular_pair(&h, &pair, SaydVariant::LR).unwrap();
    (h, pair, m)
}

const CYCLIC_RELATIONS: [&str; 4] = ["face-cyclic", "first-face-cyclic", "degeneracy-cyclic", "first-degeneracy-cyclic"];
const COCYCLIC_RELATIONS: [&str; 4] = [
    "cyclic-coface",
    "cyclic-first-coface",
    "cyclic-codegeneracy",
    "cyclic-first-codegeneracy",
];

fn assert_every_relation(r: &RelationReport, names: &[&str], cyclic: bool, what: &str) {
    for name in names {
        let count = r.report.checks.iter().filter(|c| c.name == *name).count();
        assert!(count > 0, "{what}: relation {name} was never checked");
        assert!(!r.report.failed(name), "{what}: {name} fails");
    }
    assert!(r.paracyclic(), "{what}: {:?}", r.report.failure_names());
    if cyclic {
        assert!(r.cyclic(), "{what}: orders {:?}", r.orders);
    }
}

fn cyclic_ok(x: &ParaCyclicModule, cyclic: bool) {
    let r = x.check_relations().unwrap();
    let mut names = vec!["face-face", "degeneracy-degeneracy", "face-degeneracy"];
    names.extend(CYCLIC_RELATIONS);
    assert_every_relation(&r, &names, cyclic, &x.name);
}

fn cocyclic_ok(x: &ParaCocyclicModule, cyclic: bool) {
    let r = x.check_relations().unwrap();
    let mut names = vec!["coface-coface", "codegeneracy-codegeneracy", "codegeneracy-coface"];
    names.extend(COCYCLIC_RELATIONS);
    assert_every_relation(&r, &names, cyclic, &x.name);
}

#[test]
fn examples_on_c2_at_truncation_4() {
    let (h, pair, _) = c2_with_pair();
    cyclic_ok(&algebra_cyclic(&h.algebra(), 4), true);
    cocyclic_ok(&coalgebra_cocyclic(&h.coalgebra(), 4), true);
    cocyclic_ok(&connes_moscovici(&h, &pair, 4).unwrap(), true);
    cyclic_ok(&kr_cyclic(&h, &pair, 4).unwrap(), true);
}

#[test]
fn examples_on_h4_at_truncation_3() {
    let (h, pair, _) = h4_with_pair();
    cyclic_ok(&algebra_cyclic(&h.algebra(), 3), true);
    cocyclic_ok(&coalgebra_cocyclic(&h.coalgebra(), 3), true);
    cocyclic_ok(&connes_moscovici(&h, &pair, 3).unwrap(), true);
    cyclic_ok(&kr_cyclic(&h, &pair, 3).unwrap(), true);
}

#[test]
fn both_h4_involution_pairs_give_cyclic_examples() {
    let h = sweedler_h4(Q);
    for found in search_involution_pairs(&h, &sweedler_h4_candidates(&h)) {
        cocyclic_ok(&connes_moscovici(&h, &found.pair, 3).unwrap(), true);
        cyclic_ok(&kr_cyclic(&h, &found.pair, 3).unwrap(), true);
    }
}

#[test]
fn coefficient_modules_on_h4_at_truncation_3() {
    let (h, _, m) = h4_with_pair();
    let alg = alg_with_coefficients(&h, &m, 3).unwrap();
    cyclic_ok(&alg, false);
    cocyclic_ok(&coalg_with_coefficients(&h, &m, 3).unwrap(), false);
    cyclic_ok(&k_dual_module(&h, &m, 3).unwrap(), false);
    cyclic_ok(&invariant_cyclic(&h, &m, 3).unwrap().module, true);
    cocyclic_ok(&coinvariant_cocyclic(&h, &m, 3).unwrap().module, true);
}

#[test]
fn dimension_ledger() {
    for (h, _, m) in [c2_with_pair(), h4_with_pair()] {
        let d = h.dim();
        let alg = alg_with_coefficients(&h, &m, 2).unwrap();
        let coalg = coalg_with_coefficients(&h, &m, 2).unwrap();
        let inv = invariant_cyclic(&h, &m, 2).unwrap();
        let co = coinvariant_cocyclic(&h, &m, 2).unwrap();
        for n in 0..=2u32 {
            let i = n as usize;
            assert_eq!(alg.dims[i], d.pow(n + 1));
            assert_eq!(coalg.dims[i], d.pow(n + 1));
            assert_eq!(inv.module.dims[i], d.pow(n));
            assert_eq!(co.module.dims[i], d.pow(n));
        }
    }
}
