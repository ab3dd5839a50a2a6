use crate::error::{Error, Result};
use crate::matrix::{Matrix, Quotient};
use crate::tensor::linear_map;

use super::{gather, Gather, HopfAlgebra};

/// Inclusion of the cotensor product `M □_H N`, the kernel of
/// `Δ_M ⊗ 1 − 1 ⊗ _NΔ : M⊗N → M⊗H⊗N`, for a right coaction
/// `M → M⊗H` and a left coaction `N → H⊗N`.
pub fn cotensor_subspace(h: &HopfAlgebra, right_coaction: &Matrix, left_coaction: &Matrix) -> Result<Matrix> {
    let d = h.dim();
    let m = right_coaction.cols();
    let n = left_coaction.cols();
    if right_coaction.rows() != m * d || left_coaction.rows() != d * n {
        return Err(Error::ShapeMismatch(format!(
            "coactions are {}x{} and {}x{} over a {d}-dimensional H",
            right_coaction.rows(),
            m,
            left_coaction.rows(),
            n
        )));
    }
    let f = h.field();
    let map = &right_coaction.kron(&Matrix::identity(f, n)) - &Matrix::identity(f, m).kron(left_coaction);
    Ok(map.kernel_basis())
}

/// Left coaction of `H` on `H^{⊗legs}`:
/// `h_1⊗…⊗h_k ↦ h_1⁽¹⁾⋯h_k⁽¹⁾ ⊗ h_1⁽²⁾⊗…⊗h_k⁽²⁾`. On `H^{⊗0} = k` it is `1 ↦ 1⊗1`.
pub fn diagonal_left_coaction(h: &HopfAlgebra, legs: usize) -> Matrix {
    let d = h.dim();
    if legs == 0 {
        return h.unit.clone();
    }
    let src = vec![d; legs];
    let dst = vec![d; legs + 1];
    linear_map(h.field(), &src, &dst, |t| {
        let mut t = t;
        for i in (0..legs).rev() {
            t = h.split(&t, i);
        }
        let mut groups = vec![Gather::Product((0..legs).map(|i| 2 * i).collect())];
        groups.extend((0..legs).map(|i| Gather::Leg(2 * i + 1)));
        gather(h, None, &t, &groups)
    })
}

/// Right action of `H` on `H^{⊗legs}` through the iterated coproduct:
/// `(h_1⊗…⊗h_k)·g = h_1 g⁽¹⁾ ⊗ … ⊗ h_k g⁽ᵏ⁾`, as a map `H^{⊗legs}⊗H → H^{⊗legs}`.
pub fn right_diagonal_action(h: &HopfAlgebra, legs: usize) -> Matrix {
    let d = h.dim();
    let src = vec![d; legs + 1];
    let dst = vec![d; legs];
    linear_map(h.field(), &src, &dst, |t| {
        if legs == 0 {
            return h.counit_on(&t, 0);
        }
        let t = h.split_n(&t, legs, legs);
        let groups: Vec<Gather> = (0..legs).map(|i| Gather::Product(vec![i, legs + i])).collect();
        gather(h, None, &t, &groups)
    })
}

/// `H^{⊗(n+1)} ⊗_H M` together with the relation span it is the quotient by.
#[derive(Clone, Debug)]
pub struct TensorQuotient {
    pub quotient: Quotient,
    pub relations: Matrix,
}

/// Quotient of `H^{⊗(n+1)}⊗M` by the span of `(x·g)⊗m − x⊗(g·m)` for the
/// diagonal right action on `x` and a left action `H⊗M → M`.
pub fn h_tensor_quotient(h: &HopfAlgebra, n: usize, left_action: &Matrix) -> Result<TensorQuotient> {
    let d = h.dim();
    let m = left_action.rows();
    if left_action.cols() != d * m {
        return Err(Error::ShapeMismatch(format!(
            "action is {}x{}, expected {m}x{}",
            m,
            left_action.cols(),
            d * m
        )));
    }
    let f = h.field();
    let x_dim = d.pow(n as u32 + 1);
    let rho = right_diagonal_action(h, n + 1);
    let relations = &rho.kron(&Matrix::identity(f, m)) - &Matrix::identity(f, x_dim).kron(left_action);
    Ok(TensorQuotient {
        quotient: Matrix::quotient_by_span(&relations),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        cyclic_group_table, ground_field, group_algebra, sweedler_h4, sweedler_h4_candidates, Character, Grouplike,
    };
    use crate::scalar::FieldTag;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn cotensor_with_regular_comodule_is_one_dimensional() {
        let h = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let inc = cotensor_subspace(&h, &h.unit, &h.comult).unwrap();
        assert_eq!(inc.cols(), 1);
        let k = ground_field(Q);
        assert_eq!(cotensor_subspace(&k, &k.unit, &k.unit).unwrap().cols(), 1);
    }

    #[test]
    fn cotensor_with_diagonal_coaction_has_dimension_of_one_fewer_leg() {
        let h = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let sigma = Grouplike::unit(&h);
        for n in 0..=2 {
            let inc = cotensor_subspace(&h, sigma.vector(), &diagonal_left_coaction(&h, n + 1)).unwrap();
            assert_eq!(inc.cols(), 2usize.pow(n as u32));
        }
        let h4 = sweedler_h4(Q);
        let c = sweedler_h4_candidates(&h4);
        let g = c.grouplike("g").unwrap();
        for n in 0..=2 {
            let inc = cotensor_subspace(&h4, g.vector(), &diagonal_left_coaction(&h4, n + 1)).unwrap();
            assert_eq!(inc.cols(), 4usize.pow(n as u32));
        }
    }

    #[test]
    fn diagonal_coaction_is_coassociative_and_counital() {
        let h = sweedler_h4(Q);
        for legs in 0..=2 {
            let c = diagonal_left_coaction(&h, legs);
            let n = 4usize.pow(legs as u32);
            let id = Matrix::identity(Q, n);
            assert_eq!(&h.comult.kron(&id) * &c, &Matrix::identity(Q, 4).kron(&c) * &c);
            assert!((&h.counit.kron(&id) * &c).is_identity());
        }
    }

    #[test]
    fn right_diagonal_action_is_an_action() {
        let h = sweedler_h4(Q);
        for legs in 1..=2 {
            let rho = right_diagonal_action(&h, legs);
            let n = 4usize.pow(legs as u32);
            let id = Matrix::identity(Q, n);
            let id_h = Matrix::identity(Q, 4);
            assert_eq!(&rho * &id.kron(&h.mult), &rho * &rho.kron(&id_h));
            assert!((&rho * &id.kron(&h.unit)).is_identity());
        }
    }

    #[test]
    fn quotient_dimensions() {
        let c2 = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let q = h_tensor_quotient(&c2, 0, &Character::counit(&c2).functional().clone()).unwrap();
        assert_eq!(q.quotient.dim(), 1);
        // Free module M = H: the quotient is H^{⊗(n+1)} again.
        for n in 0..=1 {
            let q = h_tensor_quotient(&c2, n, &c2.mult).unwrap();
            assert_eq!(q.quotient.dim(), 2usize.pow(n as u32 + 1));
        }
        let h4 = sweedler_h4(Q);
        let q = h_tensor_quotient(&h4, 1, &h4.mult).unwrap();
        assert_eq!(q.quotient.dim(), 16);
        let k = ground_field(Q);
        for n in 0..=3 {
            assert_eq!(h_tensor_quotient(&k, n, &k.counit).unwrap().quotient.dim(), 1);
        }
        let delta = sweedler_h4_candidates(&h4).character("delta").unwrap().clone();
        for n in 0..=2 {
            let q = h_tensor_quotient(&h4, n, delta.functional()).unwrap();
            assert_eq!(q.quotient.dim(), 4usize.pow(n as u32));
        }
    }
}
