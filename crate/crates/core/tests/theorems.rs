use hopf_cyclic::constructions::*;
use hopf_cyclic::homology::{cyclic_dims, hochschild_dims};
use hopf_cyclic::hopf::*;
use hopf_cyclic::theorems::*;
use hopf_cyclic::{Error, FieldTag, Matrix};

const Q: FieldTag = FieldTag::Rationals;

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

#[test]
fn theta_on_both_fixtures() {
    let (h, _, m) = c2_fixture();
    for r in [verify_theta_morphism(&h, &m, 4).unwrap(), verify_theta_descent(&h, &m, 4).unwrap()] {
        assert!(r.all_passed(), "{:?}", r.failure_names());
    }
    for (h, _, m) in h4_fixtures() {
        for r in [verify_theta_morphism(&h, &m, 3).unwrap(), verify_theta_descent(&h, &m, 3).unwrap()] {
            assert!(r.all_passed(), "{:?}", r.failure_names());
        }
    }
}

#[test]
fn theta_at_degree_zero() {
    // θ(h⊗m) = h⁽²⁾m⁽⁰⁾ ⊗ h⁽³⁾m⁽¹⁾S(h⁽¹⁾) for H = k[C₂], M = k: g ↦ ε(g) ⊗ g·1·g⁻¹ = 1⊗e.
    let (h, _, m) = c2_fixture();
    let t = theta(&h, &m, 0);
    assert_eq!(t, Matrix::from_ints(Q, &[&[1, 1], &[0, 0]]));
}

#[test]
fn identification_maps_are_inverse() {
    let (h, _, m) = c2_fixture();
    let co = coinvariant_cocyclic(&h, &m, 1).unwrap();
    let inv = invariant_cyclic(&h, &m, 1).unwrap();
    let (phi, psi) = phi_maps(&h, &m, 1, &co.quotients[1]).unwrap();
    assert_eq!(phi.shape(), (2, 2));
    assert!((&phi * &psi).is_identity());
    let (pp, qq) = phi_prime_maps(&h, &m, 1, &inv.inclusions[1]).unwrap();
    assert!((&pp * &qq).is_identity() && (&qq * &pp).is_identity());
    for (h, _, m) in h4_fixtures() {
        let co = coinvariant_cocyclic(&h, &m, 3).unwrap();
        let inv = invariant_cyclic(&h, &m, 3).unwrap();
        for n in 0..=3 {
            phi_maps(&h, &m, n, &co.quotients[n]).unwrap();
            phi_prime_maps(&h, &m, n, &inv.inclusions[n]).unwrap();
        }
    }
}

#[test]
fn theta_bar_is_an_isomorphism() {
    let (h, _, m) = c2_fixture();
    let r = verify_theta_bar(&h, &m, 4).unwrap();
    assert!(r.all_passed(), "{:?}", r.failure_names());
    for (h, _, m) in h4_fixtures() {
        let r = verify_theta_bar(&h, &m, 3).unwrap();
        assert!(r.all_passed(), "{:?}", r.failure_names());
        let sides = theorem_sides(&h, &m, 3).unwrap();
        assert!(sides.theta_bar.maps[0].is_identity());
    }
}

#[test]
fn theta_bar_on_the_ground_field() {
    let k = ground_field(Q);
    let m = SaydModule::trivial(&k, SaydVariant::LR);
    let sides = theorem_sides(&k, &m, 3).unwrap();
    assert!(sides.theta_bar.maps.iter().all(Matrix::is_identity));
}

#[test]
fn printed_theta_bar_has_an_extra_leg() {
    let (h, _, m) = h4_fixtures().remove(0);
    let r = printed_theta_bar_report(&h, &m, 2).unwrap();
    assert!(r.failed("printed θ̄ has the composite's shape"));
    for n in 1..=2 {
        assert!(r.checks.iter().any(|c| c.degree == Some(n) && !c.passed()));
    }
}

#[test]
fn gamma_readings() {
    let k = ground_field(Q);
    let m = SaydModule::trivial(&k, SaydVariant::LR);
    let co = coinvariant_cocyclic(&k, &m, 1).unwrap();
    let inv = invariant_cyclic(&k, &m, 1).unwrap();
    let g = gamma_candidate(&k, &m, 1, &co.quotients[1], &inv.inclusions[1]).unwrap();
    assert!(g.readings.iter().all(|(_, ok)| *ok));

    let (h, _, m) = c2_fixture();
    let co = coinvariant_cocyclic(&h, &m, 1).unwrap();
    let inv = invariant_cyclic(&h, &m, 1).unwrap();
    let g = gamma_candidate(&h, &m, 1, &co.quotients[1], &inv.inclusions[1]).unwrap();
    assert!(g.readings.iter().any(|(_, ok)| *ok));

    for (h, pair, m) in h4_fixtures() {
        let co = coinvariant_cocyclic(&h, &m, 2).unwrap();
        let inv = invariant_cyclic(&h, &m, 2).unwrap();
        let g = gamma_candidate(&h, &m, 2, &co.quotients[2], &inv.inclusions[2]).unwrap();
        let without = g.readings.iter().find(|(name, _)| name.starts_with("without")).unwrap().1;
        assert!(without, "{:?}", g.readings);
        let with = g.readings.iter().find(|(name, _)| name.starts_with("with ")).unwrap().1;
        assert_eq!(with, pair.sigma == Grouplike::unit(&h), "{:?}", g.readings);
    }
}

#[test]
fn identifications_with_the_examples() {
    let (h, pair, _) = c2_fixture();
    let kr = invariant_to_kr(&h, &pair, 4).unwrap();
    assert!(kr.passed(), "{:?}", kr.report.failure_names());
    let cm = coinvariant_to_cm(&h, &pair, 4).unwrap();
    assert!(cm.passed(), "{:?}", cm.report.failure_names());
    for (h, pair, _) in h4_fixtures() {
        let kr = invariant_to_kr(&h, &pair, 3).unwrap();
        assert!(kr.passed(), "{:?}", kr.report.failure_names());
        let cm = coinvariant_to_cm(&h, &pair, 3).unwrap();
        assert!(cm.passed(), "{:?}", cm.report.failure_names());
    }
}

#[test]
fn identifications_agree_on_homology() {
    for (h, pair, m) in h4_fixtures() {
        let inv = invariant_cyclic(&h, &m, 3).unwrap();
        let kr = kr_cyclic(&h, &pair, 3).unwrap();
        assert_eq!(cyclic_dims(&inv.module, 2).unwrap().values(), cyclic_dims(&kr, 2).unwrap().values());
        assert_eq!(hochschild_dims(&inv.module, 2).unwrap().values(), hochschild_dims(&kr, 2).unwrap().values());
    }
}

#[test]
fn phi_bar_alone_does_not_reach_the_connes_moscovici_module() {
    for (h, pair, _) in h4_fixtures() {
        let r = phi_bar_against_cm(&h, &pair, 2).unwrap();
        assert!(r.failures().iter().any(|c| c.name == "coface"));
    }
}

#[test]
fn identity_is_not_an_opposite_isomorphism_for_h4() {
    let (h, pair, _) = h4_fixtures().remove(0);
    let id = coinvariant_to_cm_via(&h, &pair, &Matrix::identity(Q, 4), 2).unwrap();
    assert!(!id.passed());
}

#[test]
fn lemma_homotopies() {
    let h = c2();
    let a = contracting_homotopy_algebra(&h.algebra(), &first_coordinate(Q, 2), 4).unwrap();
    assert!(a.passed(), "{:?}", a.report.failure_names());
    assert!(!a.degree_zero);
    let c = contracting_homotopy_coalgebra(&h.coalgebra(), &h.unit, 4).unwrap();
    assert!(c.passed(), "{:?}", c.report.failure_names());
    let h4 = sweedler_h4(Q);
    let a = contracting_homotopy_algebra(&h4.algebra(), &first_coordinate(Q, 4), 4).unwrap();
    assert!(a.passed(), "{:?}", a.report.failure_names());
    let c = contracting_homotopy_coalgebra(&h4.coalgebra(), &h4.unit, 4).unwrap();
    assert!(c.passed(), "{:?}", c.report.failure_names());
    assert_eq!(c.homology.values()[1..], [0, 0, 0]);
}

#[test]
fn pairing_with_the_dual() {
    let h = c2();
    let g = dual_hopf(&h).unwrap();
    let ev = evaluation_pairing(&h);
    assert!(verify_hopf_pairing(&h, &g, &ev).unwrap().all_passed());
    let m = SaydModule::trivial(&h, SaydVariant::LR);
    let n = SaydModule::trivial(&g, SaydVariant::LR);
    let one = Matrix::identity(Q, 1);
    let p = pairing_morphism(&h, &g, &m, &n, &ev, &one, 3).unwrap();
    assert!(p.report.all_passed(), "{:?}", p.report.failure_names());
}

/// `N` over the dual with the roles of the pair exchanged.
fn dual_coefficients(g: &HopfAlgebra, pair: &ModularPair) -> SaydModule {
    let delta = Character::new(g, pair.sigma.vector().transpose()).unwrap();
    let sigma = Grouplike::new(g, pair.delta.functional().transpose()).unwrap();
    let gp = verify_modular_pair(g, &delta, &sigma).unwrap();
    sayd_from_modular_pair(g, &gp, SaydVariant::LR).unwrap()
}

#[test]
fn trivial_coefficients_are_not_sayd_over_h4() {
    let h = sweedler_h4(Q);
    let g = dual_hopf(&h).unwrap();
    let m = SaydModule::trivial(&h, SaydVariant::LR);
    let n = SaydModule::trivial(&g, SaydVariant::LR);
    let one = Matrix::identity(Q, 1);
    let r = pairing_morphism(&h, &g, &m, &n, &evaluation_pairing(&h), &one, 2);
    assert!(matches!(r, Err(Error::SaydViolation(_))));
}

#[test]
fn pairing_order_matters_off_the_commutative_case() {
    let one = Matrix::identity(Q, 1);
    let s3 = group_algebra(Q, "s3", &symmetric_group_s3_table()).unwrap();
    let s3_pair = verify_modular_pair(&s3, &Character::counit(&s3), &Grouplike::unit(&s3)).unwrap();
    let mut cases = vec![(s3.clone(), s3_pair)];
    cases.extend(h4_fixtures().into_iter().take(1).map(|(h, p, _)| (h, p)));
    for (h, pair) in cases {
        let ev = evaluation_pairing(&h);
        let m = sayd_from_modular_pair(&h, &pair, SaydVariant::LR).unwrap();
        let g = dual_hopf(&h).unwrap();
        assert!(verify_hopf_pairing(&h, &g, &ev).unwrap().all_passed());
        let p = pairing_morphism(&h, &g, &m, &dual_coefficients(&g, &pair), &ev, &one, 2).unwrap();
        assert_eq!(p.report.failure_names(), vec!["cyclic (degree 2)"], "{}", h.name());

        let gc = co_opposite(&g).unwrap();
        let r = verify_hopf_pairing(&h, &gc, &ev).unwrap();
        assert_eq!(r.failure_names(), vec!["⟨h₁h₂,g⟩ = ⟨h₁,g⁽¹⁾⟩⟨h₂,g⁽²⁾⟩"]);
        let p = pairing_morphism(&h, &gc, &m, &dual_coefficients(&gc, &pair), &ev, &one, 2).unwrap();
        assert!(p.report.all_passed(), "{}: {:?}", h.name(), p.report.failure_names());
    }
}
