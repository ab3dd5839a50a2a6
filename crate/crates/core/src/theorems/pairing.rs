use crate::constructions::{coinvariant_cocyclic, invariant_cyclic};
use crate::cyclic::{verify_morphism, GradedMap, ModulePair, ParaCocyclicModule, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, SaydModule, SaydVariant};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::tensor::permutation_matrix;

use super::identification::phi_prime_maps;
use super::maps::absorb_first;

/// The four conditions of a Hopf pairing `⟨h_i, g_j⟩ = pairing[i][j]`.
pub fn verify_hopf_pairing(h: &HopfAlgebra, g: &HopfAlgebra, pairing: &Matrix) -> Result<Report> {
    if pairing.shape() != (h.dim(), g.dim()) {
        return Err(Error::ShapeMismatch(format!(
            "pairing is {}x{}, expected {}x{}",
            pairing.rows(),
            pairing.cols(),
            h.dim(),
            g.dim()
        )));
    }
    let pp = pairing.kron(pairing);
    let mut r = Report::new();
    r.push("⟨h₁h₂,g⟩ = ⟨h₁,g⁽¹⁾⟩⟨h₂,g⁽²⁾⟩", &h.mult.transpose() * pairing == &pp * &g.comult);
    r.push("⟨h,g₁g₂⟩ = ⟨h⁽¹⁾,g₁⟩⟨h⁽²⁾,g₂⟩", pairing * &g.mult == &h.comult.transpose() * &pp);
    r.push("⟨h,1⟩ = ε(h)", pairing * &g.unit == h.counit.transpose());
    r.push("⟨1,g⟩ = ε(g)", &h.unit.transpose() * pairing == g.counit);
    Ok(r)
}

/// `⟨hm,n⟩ = ⟨h,n⁽⁻¹⁾⟩⟨m,n⁽⁰⁾⟩` and `⟨m,ng⟩ = ⟨m⁽⁰⁾,n⟩⟨m⁽¹⁾,g⟩` for `M` a left
/// `H`-module and right comodule, `N` a right `G`-module and left comodule.
pub fn verify_module_pairing(
    h: &HopfAlgebra,
    g: &HopfAlgebra,
    m: &SaydModule,
    n: &SaydModule,
    hopf_pairing: &Matrix,
    pairing: &Matrix,
) -> Result<Report> {
    if m.variant != SaydVariant::LR || n.variant != SaydVariant::RL {
        return Err(Error::Input(format!("expected LR and RL modules, got {:?} and {:?}", m.variant, n.variant)));
    }
    if pairing.shape() != (m.dim(), n.dim()) {
        return Err(Error::ShapeMismatch(format!(
            "module pairing is {}x{}, expected {}x{}",
            pairing.rows(),
            pairing.cols(),
            m.dim(),
            n.dim()
        )));
    }
    if hopf_pairing.shape() != (h.dim(), g.dim()) {
        return Err(Error::ShapeMismatch("Hopf pairing".into()));
    }
    let mut r = Report::new();
    r.push("⟨hm,n⟩ = ⟨h,n⁽⁻¹⁾⟩⟨m,n⁽⁰⁾⟩", &m.action.transpose() * pairing == &hopf_pairing.kron(pairing) * &n.coaction);
    r.push("⟨m,ng⟩ = ⟨m⁽⁰⁾,n⟩⟨m⁽¹⁾,g⟩", pairing * &n.action == &m.coaction.transpose() * &pairing.kron(hopf_pairing));
    Ok(r)
}

/// `C^*_H(H,M)` carried to `H^{⊗n}⊗M` by absorbing the first factor.
pub fn coalgebra_side(h: &HopfAlgebra, m: &SaydModule, truncation: usize) -> Result<ParaCocyclicModule> {
    let co = coinvariant_cocyclic(h, m, truncation)?;
    let mut maps = Vec::new();
    for n in 0..=truncation {
        let q = &co.quotients[n];
        let a = absorb_first(h, m, n);
        if !(&a * &q.relations).is_zero() {
            return Err(Error::NotWellDefined(format!("absorbing the first factor in degree {n}")));
        }
        maps.push(&a * &q.quotient.section);
    }
    co.module.transport("C_H", &GradedMap::new(maps))
}

/// `C^H_*(G,N)` carried to `N⊗G^{⊗n}` along `φ′`.
pub fn algebra_side(g: &HopfAlgebra, n: &SaydModule, truncation: usize) -> Result<ParaCyclicModule> {
    let inv = invariant_cyclic(g, n, truncation)?;
    let maps = (0..=truncation)
        .map(|k| phi_prime_maps(g, n, k, &inv.inclusions[k]).map(|p| p.0))
        .collect::<Result<Vec<_>>>()?;
    inv.module.transport("C^H", &GradedMap::new(maps))
}

/// `(h_1⊗…⊗h_n⊗m) ↦ (n⊗g_1⊗…⊗g_n ↦ ⟨m,n⟩∏⟨h_i,g_i⟩)` as a matrix
/// `H^{⊗n}⊗M → (N⊗G^{⊗n})^*`.
pub fn pairing_matrix(hopf_pairing: &Matrix, pairing: &Matrix, n: usize) -> Matrix {
    let f = pairing.field();
    let mut b = pairing.clone();
    for _ in 0..n {
        b = b.kron(hopf_pairing);
    }
    let mut dims = vec![hopf_pairing.rows(); n];
    dims.push(pairing.rows());
    let order: Vec<usize> = std::iter::once(n).chain(0..n).collect();
    &b.transpose() * &permutation_matrix(f, &dims, &order)
}

pub struct PairingMorphism {
    pub map: GradedMap,
    pub report: Report,
}

/// The pairing as a map of cocyclic modules from the coalgebra side over `H`
/// to the linear dual of the algebra side over `G`. Both coefficient modules
/// enter the constructions as left modules and right comodules.
pub fn pairing_morphism(
    h: &HopfAlgebra,
    g: &HopfAlgebra,
    m: &SaydModule,
    n: &SaydModule,
    hopf_pairing: &Matrix,
    pairing: &Matrix,
    truncation: usize,
) -> Result<PairingMorphism> {
    let source = coalgebra_side(h, m, truncation)?;
    let target = algebra_side(g, n, truncation)?.linear_dual();
    let map = GradedMap::new((0..=truncation).map(|k| pairing_matrix(hopf_pairing, pairing, k)).collect());
    let mut report = verify_morphism(&map, ModulePair::Cocyclic(&source, &target))?;
    for (k, p) in map.maps.iter().enumerate() {
        report.record("invertible", Some(k), &[], p.is_square() && p.rank() == p.rows());
    }
    Ok(PairingMorphism { map, report })
}

/// `⟨h_i, g_j⟩ = g_j(h_i)` for `G` the dual of `H` on the dual basis.
pub fn evaluation_pairing(h: &HopfAlgebra) -> Matrix {
    Matrix::identity(h.field(), h.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_group_table, dual_hopf, ground_field, group_algebra};
    use crate::scalar::FieldTag;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn ground_field_pairing() {
        let k = ground_field(Q);
        let one = Matrix::identity(Q, 1);
        assert!(verify_hopf_pairing(&k, &k, &one).unwrap().all_passed());
        let m = SaydModule::trivial(&k, SaydVariant::LR);
        let p = pairing_morphism(&k, &k, &m, &m, &one, &one, 2).unwrap();
        assert!(p.map.maps.iter().all(Matrix::is_identity));
        assert!(p.report.all_passed());
    }

    #[test]
    fn c2_evaluation_pairing() {
        let h = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let g = dual_hopf(&h).unwrap();
        let ev = evaluation_pairing(&h);
        assert!(verify_hopf_pairing(&h, &g, &ev).unwrap().all_passed());
        let zero = Matrix::zeros(Q, 2, 2);
        let r = verify_hopf_pairing(&h, &g, &zero).unwrap();
        assert!(r.failed("⟨h,1⟩ = ε(h)"));
        let one = Matrix::identity(Q, 1);
        let m = SaydModule::trivial(&h, SaydVariant::LR);
        let n = SaydModule::trivial(&g, SaydVariant::RL);
        assert!(verify_module_pairing(&h, &g, &m, &n, &ev, &one).unwrap().all_passed());
        let r = verify_module_pairing(&h, &g, &m, &n, &zero, &one).unwrap();
        assert!(!r.all_passed());
    }

    #[test]
    fn pairing_matrix_layout() {
        let p = Matrix::from_ints(Q, &[&[1, 2], &[3, 4]]);
        let q = Matrix::from_ints(Q, &[&[5]]);
        let m = pairing_matrix(&p, &q, 1);
        // rows (n, g_j), columns (h_i, m)
        assert_eq!(m, Matrix::from_ints(Q, &[&[5, 15], &[10, 20]]));
    }
}
