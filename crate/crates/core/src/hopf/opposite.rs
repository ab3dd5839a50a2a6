use crate::matrix::Matrix;
use crate::report::Report;
use crate::tensor::permutation_matrix;

use super::{HopfAlgebra, ModularPair};

/// Checks that `β: H^op → H` is an isomorphism of Hopf algebras carrying the
/// pair `(δ, σ⁻¹)` of `H^op` to `(δ, σ)`.
pub fn verify_opposite_isomorphism(h: &HopfAlgebra, beta: &Matrix, pair: &ModularPair) -> Report {
    let (f, d) = (h.field(), h.dim());
    let mut r = Report::new();
    if beta.shape() != (d, d) {
        r.push("shape", false);
        return r;
    }
    let flip = permutation_matrix(f, &[d, d], &[1, 0]);
    let bb = beta.kron(beta);
    r.push("reverses multiplication", beta * &h.mult == &(&h.mult * &flip) * &bb);
    r.push("preserves unit", beta * &h.unit == h.unit);
    r.push("preserves comultiplication", &h.comult * beta == &bb * &h.comult);
    r.push("preserves counit", &h.counit * beta == h.counit);
    r.push("invertible", beta.rank() == d);
    r.push("fixes the character", pair.delta.functional() * beta == *pair.delta.functional());
    let sigma = pair.sigma.vector();
    r.push("sends σ⁻¹ to σ", &(beta * &h.antipode) * sigma == *sigma);
    r
}

/// Exhaustive search over `S^k·D` with `D` a diagonal sign matrix in the
/// given basis, `k` up to the order of `S` (at most 4). Returns the first hit.
pub fn search_opposite_isomorphism(h: &HopfAlgebra, pair: &ModularPair) -> Option<Matrix> {
    let (f, d) = (h.field(), h.dim());
    if d > 12 {
        return None;
    }
    let mut powers = vec![Matrix::identity(f, d)];
    for _ in 0..3 {
        let next = &h.antipode * powers.last().unwrap();
        if next.is_identity() {
            break;
        }
        powers.push(next);
    }
    for s in &powers {
        for mask in 0u32..(1 << d) {
            let sign = Matrix::from_fn(f, d, d, |r, c| match (r == c, mask >> r & 1) {
                (false, _) => f.zero(),
                (true, 0) => f.one(),
                (true, _) => -f.one(),
            });
            let beta = s * &sign;
            if verify_opposite_isomorphism(h, &beta, pair).all_passed() {
                return Some(beta);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        cyclic_group_table, group_algebra, group_algebra_candidates, search_involution_pairs, sweedler_h4,
        sweedler_h4_candidates,
    };
    use crate::scalar::FieldTag;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn sweedler_opposites_are_sign_changes() {
        let h = sweedler_h4(Q);
        let fix_x = Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let fix_gx = Matrix::from_ints(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]]);
        for found in search_involution_pairs(&h, &sweedler_h4_candidates(&h)) {
            assert!(verify_opposite_isomorphism(&h, &fix_x, &found.pair).all_passed());
            assert_eq!(search_opposite_isomorphism(&h, &found.pair), Some(fix_gx.clone()));
        }
        let p = search_involution_pairs(&h, &sweedler_h4_candidates(&h)).remove(0).pair;
        assert!(verify_opposite_isomorphism(&h, &Matrix::identity(Q, 4), &p).failed("reverses multiplication"));
    }

    #[test]
    fn group_algebra_opposite_and_failures() {
        let t = cyclic_group_table(2);
        let h = group_algebra(Q, "c2", &t).unwrap();
        for found in search_involution_pairs(&h, &group_algebra_candidates(&h, &t)) {
            assert!(search_opposite_isomorphism(&h, &found.pair).unwrap().is_identity());
        }
        let found = search_involution_pairs(&h, &group_algebra_candidates(&h, &t)).remove(0);
        let r = verify_opposite_isomorphism(&h, &Matrix::zeros(Q, 2, 2), &found.pair);
        assert!(r.failed("invertible"));
        assert!(r.failed("preserves unit"));
    }
}
