use crate::constructions::{alg_with_coefficients, k_dual_module, require_sayd};
use crate::cyclic::{verify_morphism, GradedMap, ModulePair};
use crate::error::Result;
use crate::hopf::{diagonal_left_coaction, h_tensor_quotient, HopfAlgebra, SaydModule};
use crate::matrix::Matrix;
use crate::report::Report;

use super::maps::theta;

pub fn theta_graded(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> GradedMap {
    GradedMap::new((0..=truncation).map(|n| theta(h, module, n)).collect())
}

/// `θ` against every operator of `K_*(H,M)` and `C^alg_*(H,M)`.
pub fn verify_theta_morphism(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<Report> {
    require_sayd(h, module)?;
    let k = k_dual_module(h, module, truncation)?;
    let alg = alg_with_coefficients(h, module, truncation)?;
    verify_morphism(&theta_graded(h, module, truncation), ModulePair::Cyclic(&k, &alg))
}

/// Per degree: `(Δ_M⊗id − id⊗Δ)∘θ = 0` and `θ` kills the relations of `⊗_H`.
pub fn verify_theta_descent(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<Report> {
    require_sayd(h, module)?;
    let f = h.field();
    let m = module.dim();
    let mut r = Report::new();
    for n in 0..=truncation {
        let t = theta(h, module, n);
        let legs = Matrix::identity(f, h.dim().pow(n as u32 + 1));
        let cotensor = &module.coaction.kron(&legs) - &Matrix::identity(f, m).kron(&diagonal_left_coaction(h, n + 1));
        r.record("image in cotensor", Some(n), &[], (&cotensor * &t).is_zero());
        let rel = h_tensor_quotient(h, n, &module.action)?.relations;
        r.record("kills balancing relations", Some(n), &[], (&t * &rel).is_zero());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        cyclic_group_table, ground_field, group_algebra, sayd_from_modular_pair, search_involution_pairs,
        sweedler_h4, sweedler_h4_candidates, SaydVariant,
    };
    use crate::scalar::FieldTag;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn ground_field_theta_is_identity() {
        let k = ground_field(Q);
        let m = SaydModule::trivial(&k, SaydVariant::LR);
        for n in 0..3 {
            assert!(theta(&k, &m, n).is_identity());
        }
        assert!(verify_theta_descent(&k, &m, 2).unwrap().all_passed());
    }

    #[test]
    fn c2_theta_is_a_morphism_and_descends() {
        let h = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let m = SaydModule::trivial(&h, SaydVariant::LR);
        let r = verify_theta_morphism(&h, &m, 3).unwrap();
        assert!(r.all_passed(), "{:?}", r.failure_names());
        assert!(verify_theta_descent(&h, &m, 3).unwrap().all_passed());
    }

    #[test]
    fn sabotaged_theta_is_caught() {
        let h = sweedler_h4(Q);
        let pair = search_involution_pairs(&h, &sweedler_h4_candidates(&h)).remove(0).pair;
        let m = sayd_from_modular_pair(&h, &pair, SaydVariant::LR).unwrap();
        let k = k_dual_module(&h, &m, 2).unwrap();
        let alg = alg_with_coefficients(&h, &m, 2).unwrap();
        let mut g = theta_graded(&h, &m, 2);
        g.maps[1] = g.maps[1].transpose();
        let r = verify_morphism(&g, ModulePair::Cyclic(&k, &alg)).unwrap();
        assert!(!r.all_passed());
    }
}
