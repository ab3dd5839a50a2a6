//! Sparse elements of tensor products of based spaces.
//!
//! Operator matrices are assembled one basis tensor at a time: a basis
//! tensor is pushed through a short program of leg operations (apply a
//! structure map to some legs, permute legs) and the result becomes a
//! column. Sweedler components are thereby always realized by composing
//! the comultiplication matrices.

use std::collections::BTreeMap;

use crate::matrix::Matrix;
use crate::scalar::{FieldTag, Scalar};

/// Flat index of a multi-index, leftmost leg most significant.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    field: FieldTag,
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Scalar>,
}

/// Nonzero pattern of a matrix column by column.
struct SparseColumns(Vec<Vec<(usize, Scalar)>>);

impl SparseColumns {
    fn of(m: &Matrix) -> Self {
        let mut cols = vec![Vec::new(); m.cols()];
        for r in 0..m.rows() {
            for (c, v) in m.row(r).iter().enumerate() {
                if !v.is_zero() {
                    cols[c].push((r, v.clone()));
                }
            }
        }
        SparseColumns(cols)
    }
}

impl Tensor {
    pub fn zero(field: FieldTag, dims: &[usize]) -> Tensor {
        Tensor {
            field,
            dims: dims.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(field: FieldTag, dims: &[usize], idx: &[usize]) -> Tensor {
        debug_assert_eq!(dims.len(), idx.len());
        let mut t = Tensor::zero(field, dims);
        t.terms.insert(idx.to_vec(), field.one());
        t
    }

    pub fn basis_flat(field: FieldTag, dims: &[usize], flat: usize) -> Tensor {
        Tensor::basis(field, dims, &multi_index(dims, flat))
    }

    /// A one-leg tensor from a column of coefficients.
    pub fn vector(v: &[Scalar], field: FieldTag) -> Tensor {
        let mut t = Tensor::zero(field, &[v.len()]);
        for (i, s) in v.iter().enumerate() {
            if !s.is_zero() {
                t.terms.insert(vec![i], s.clone());
            }
        }
        t
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn legs(&self) -> usize {
        self.dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    fn accumulate(terms: &mut BTreeMap<Vec<usize>, Scalar>, idx: Vec<usize>, v: Scalar) {
        use std::collections::btree_map::Entry;
        match terms.entry(idx) {
            Entry::Vacant(e) => {
                if !v.is_zero() {
                    e.insert(v);
                }
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &v;
                if s.is_zero() {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Tensor {
        let mut out = Tensor::zero(self.field, &self.dims);
        for (k, v) in &self.terms {
            Tensor::accumulate(&mut out.terms, k.clone(), v * s);
        }
        out
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.dims, other.dims, "adding tensors of different shapes");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            Tensor::accumulate(&mut out.terms, k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        self.add(&other.scale(&-self.field.one()))
    }

    /// Feeds the listed legs (in the listed order, flattened) into `map`,
    /// removes them, and inserts the output legs of shape `out_dims` at
    /// position `at` among the remaining legs. `legs` may be empty (the map
    /// then has one column, e.g. a unit) and `out_dims` may be empty (the map
    /// has one row, e.g. a counit).
    pub fn apply(&self, legs: &[usize], map: &Matrix, out_dims: &[usize], at: usize) -> Tensor {
        let in_dims: Vec<usize> = legs.iter().map(|&l| self.dims[l]).collect();
        assert_eq!(map.cols(), in_dims.iter().product::<usize>(), "map input size");
        assert_eq!(map.rows(), out_dims.iter().product::<usize>(), "map output size");
        let rest: Vec<usize> = (0..self.legs()).filter(|l| !legs.contains(l)).collect();
        assert!(at <= rest.len(), "insertion point out of range");
        let mut dims: Vec<usize> = rest.iter().map(|&l| self.dims[l]).collect();
        dims.splice(at..at, out_dims.iter().copied());

        let cols = SparseColumns::of(map);
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, coeff) in &self.terms {
            let input: Vec<usize> = legs.iter().map(|&l| idx[l]).collect();
            let col = flat_index(&in_dims, &input);
            let kept: Vec<usize> = rest.iter().map(|&l| idx[l]).collect();
            for (row, v) in &cols.0[col] {
                let mut new_idx = kept.clone();
                new_idx.splice(at..at, multi_index(out_dims, *row));
                Tensor::accumulate(&mut out.terms, new_idx, coeff * v);
            }
        }
        out
    }

    /// Applies a single-leg endomorphism-like map `V → W` to leg `leg`.
    pub fn map_leg(&self, leg: usize, map: &Matrix) -> Tensor {
        self.apply(&[leg], map, &[map.rows()], leg)
    }

    /// Replaces leg `leg` by the two legs of `map: V → W1 ⊗ W2`.
    pub fn split_leg(&self, leg: usize, map: &Matrix, out: [usize; 2]) -> Tensor {
        self.apply(&[leg], map, &out, leg)
    }

    /// Removes leg `leg` through a functional `map: V → k`.
    pub fn eval_leg(&self, leg: usize, map: &Matrix) -> Tensor {
        self.apply(&[leg], map, &[], leg)
    }

    /// Inserts a vector (a `dim × 1` matrix) as a new leg at position `at`.
    pub fn insert(&self, at: usize, vector: &Matrix) -> Tensor {
        self.apply(&[], vector, &[vector.rows()], at)
    }

    /// Multiplies the listed legs in order with `mult: A ⊗ A → A` and puts the
    /// product where the first listed leg was.
    pub fn product(&self, legs: &[usize], mult: &Matrix) -> Tensor {
        assert!(!legs.is_empty());
        let d = self.dims[legs[0]];
        let cols = SparseColumns::of(mult);
        let rest: Vec<usize> = (0..self.legs())
            .filter(|l| *l == legs[0] || !legs.contains(l))
            .collect();
        let pos = rest.iter().position(|&l| l == legs[0]).unwrap();
        let dims: Vec<usize> = rest.iter().map(|&l| self.dims[l]).collect();
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, coeff) in &self.terms {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            acc.insert(idx[legs[0]], coeff.clone());
            for &l in &legs[1..] {
                let mut next = BTreeMap::new();
                for (a, va) in &acc {
                    for (r, v) in &cols.0[a * d + idx[l]] {
                        let entry = next.entry(*r).or_insert_with(|| self.field.zero());
                        *entry = &*entry + &(va * v);
                    }
                }
                acc = next;
            }
            let kept: Vec<usize> = rest.iter().map(|&l| idx[l]).collect();
            for (r, v) in acc {
                let mut new_idx = kept.clone();
                new_idx[pos] = r;
                Tensor::accumulate(&mut out.terms, new_idx, v);
            }
        }
        out
    }

    /// New leg `k` is old leg `order[k]`; `order` must be a permutation.
    pub fn permute(&self, order: &[usize]) -> Tensor {
        assert_eq!(order.len(), self.legs());
        let dims: Vec<usize> = order.iter().map(|&l| self.dims[l]).collect();
        let mut out = Tensor::zero(self.field, &dims);
        for (idx, v) in &self.terms {
            let new_idx = order.iter().map(|&l| idx[l]).collect();
            out.terms.insert(new_idx, v.clone());
        }
        out
    }

    /// Moves leg `from` to position `to`, shifting the legs in between.
    pub fn move_leg(&self, from: usize, to: usize) -> Tensor {
        let mut order: Vec<usize> = (0..self.legs()).filter(|&l| l != from).collect();
        order.insert(to, from);
        self.permute(&order)
    }

    /// Dense coordinates in the flattened basis.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let n = self.dims.iter().product();
        let mut v = vec![self.field.zero(); n];
        for (idx, s) in &self.terms {
            v[flat_index(&self.dims, idx)] = s.clone();
        }
        v
    }
}

/// Matrix of the linear map whose value on each basis tensor of shape
/// `src` is computed by `f`; every value must have shape `dst`.
pub fn linear_map(
    field: FieldTag,
    src: &[usize],
    dst: &[usize],
    f: impl Fn(Tensor) -> Tensor,
) -> Matrix {
    let n_src: usize = src.iter().product();
    let n_dst: usize = dst.iter().product();
    let mut m = Matrix::zeros(field, n_dst, n_src);
    for col in 0..n_src {
        let image = f(Tensor::basis_flat(field, src, col));
        assert_eq!(image.dims(), dst, "formula produced a tensor of the wrong shape");
        for (idx, v) in image.terms() {
            m.set(flat_index(dst, idx), col, v.clone());
        }
    }
    m
}

/// Matrix of the permutation of tensor legs: new leg `k` is old leg `order[k]`.
pub fn permutation_matrix(field: FieldTag, dims: &[usize], order: &[usize]) -> Matrix {
    let dst: Vec<usize> = order.iter().map(|&l| dims[l]).collect();
    linear_map(field, dims, &dst, |t| t.permute(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn index_convention_is_leftmost_major() {
        assert_eq!(flat_index(&[2, 3, 4], &[1, 2, 3]), 12 + 2 * 4 + 3);
        assert_eq!(multi_index(&[2, 3, 4], 23), vec![1, 2, 3]);
    }

    #[test]
    fn single_leg_maps_agree_with_kronecker() {
        let a = Matrix::from_ints(Q, &[&[1, 2], &[3, 4], &[0, 1]]);
        let b = Matrix::from_ints(Q, &[&[0, 1], &[5, -1]]);
        let via_legs = linear_map(Q, &[2, 2], &[3, 2], |t| t.map_leg(0, &a).map_leg(1, &b));
        assert_eq!(via_legs, a.kron(&b));
    }

    #[test]
    fn swap_of_two_legs() {
        let p = permutation_matrix(Q, &[2, 2], &[1, 0]);
        let expected = Matrix::from_ints(
            Q,
            &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]],
        );
        assert_eq!(p, expected);
    }

    #[test]
    fn product_multiplies_in_listed_order() {
        // 2x2 matrix units as a 4-dim algebra: e_ij e_kl = [j==k] e_il.
        let d = 4;
        let mult = Matrix::from_fn(Q, d, d * d, |r, c| {
            let (a, b) = (c / d, c % d);
            let (i, j, k, l) = (a / 2, a % 2, b / 2, b % 2);
            if j == k && r == i * 2 + l { Q.one() } else { Q.zero() }
        });
        // e_01 ⊗ e_10: product of legs [1, 0] is e_10 e_01 = e_11.
        let t = Tensor::basis(Q, &[4, 4], &[1, 2]);
        let p = t.product(&[1, 0], &mult);
        assert_eq!(p, Tensor::basis(Q, &[4], &[3]));
        let p = t.product(&[0, 1], &mult);
        assert_eq!(p, Tensor::basis(Q, &[4], &[0]));
    }

    proptest! {
        #[test]
        fn flat_round_trip(dims in proptest::collection::vec(1usize..5, 1..5), seed in any::<usize>()) {
            let n: usize = dims.iter().product();
            let flat = seed % n;
            prop_assert_eq!(flat_index(&dims, &multi_index(&dims, flat)), flat);
        }
    }
}
