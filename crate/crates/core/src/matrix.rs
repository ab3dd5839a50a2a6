//! Dense exact matrices and the elimination kernel: rank, kernels, inverses,
//! quotients by a span and restriction of operators to subspaces.
//!
//! A matrix represents a linear map acting on column vectors, so the matrix
//! of `f: V → W` has `dim W` rows and `dim V` columns and `g ∘ f` is `g * f`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{FieldTag, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|s| s.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A quotient `V / U` presented by a projection `V → V/U` and a fixed
/// section `V/U → V` with `projection * section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub projection: Matrix,
    pub section: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.projection.cols()
    }
}

impl Matrix {
    pub fn zeros(field: FieldTag, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldTag, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: FieldTag,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, field, data }
    }

    /// Builds a matrix from row vectors, checking rectangularity and field.
    pub fn from_rows(field: FieldTag, rows: Vec<Vec<Scalar>>, cols: usize) -> Result<Matrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, s) in row.into_iter().enumerate() {
                if s.field() != field {
                    return Err(Error::Input(format!(
                        "entry ({i},{j}) lives in {} but the matrix is over {field}",
                        s.field()
                    )));
                }
                data.push(s);
            }
        }
        Ok(Matrix { rows: n, cols, field, data })
    }

    /// Convenience constructor from small integers.
    pub fn from_ints(field: FieldTag, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.int(x)).collect())
            .collect();
        Matrix::from_rows(field, rows, cols).expect("rectangular integer matrix")
    }

    /// A single column vector.
    pub fn column(field: FieldTag, entries: Vec<Scalar>) -> Matrix {
        let rows = entries.len();
        Matrix { rows, cols: 1, field, data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        debug_assert_eq!(value.field(), self.field);
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                self.row(r)
                    .iter()
                    .enumerate()
                    .all(|(c, s)| if r == c { s.is_one() } else { s.is_zero() })
            })
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| x * s).collect(),
            ..*self
        }
    }

    /// `self * rhs`, reporting incompatible shapes instead of panicking.
    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        // Row-oriented accumulation; operator matrices are very sparse.
        let rhs_nz: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..rhs.cols).filter(|&c| !rhs.get(k, c).is_zero()).collect())
            .collect();
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &c in &rhs_nz[k] {
                    let idx = i * out.cols + c;
                    let term = a * rhs.get(k, c);
                    out.data[idx] = &out.data[idx] + &term;
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.shape() != rhs.shape() {
            return Err(Error::ShapeMismatch(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(Matrix {
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
            ..*self
        })
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut acc = Matrix::identity(self.field, self.rows);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Kronecker product, matching the leftmost-most-significant tensor basis.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let (r2, c2) = rhs.shape();
        let mut out = Matrix::zeros(self.field, self.rows * r2, self.cols * c2);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * r2 + k, j * c2 + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(field: FieldTag, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            out.paste(0, off, b);
            off += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                let v = block.get(r, c);
                if !v.is_zero() {
                    self.set(r0 + r, c0 + c, v.clone());
                }
            }
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = eliminate(&mut rows, self.cols, true);
        let data = rows.into_iter().flatten().collect();
        (
            Matrix {
                data,
                ..*self
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        // Eliminate along the shorter side.
        if self.cols > self.rows {
            return self.transpose().rank();
        }
        let mut rows = self.to_rows();
        eliminate(&mut rows, self.cols, false).len()
    }

    /// Columns form a basis of the null space. For each free column `f` the
    /// basis vector has a 1 in coordinate `f` and zeros at the other free
    /// coordinates.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.field, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, self.field.one());
            for (pr, &pc) in pivots.iter().enumerate() {
                let v = r.get(pr, f);
                if !v.is_zero() {
                    k.set(pc, j, -v);
                }
            }
        }
        k
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { self.field.one() } else { self.field.zero() }));
                row
            })
            .collect();
        let pivots = eliminate(&mut rows, n, true);
        if pivots.len() < n {
            return Err(Error::Singular(format!("rank {} < {n}", pivots.len())));
        }
        Ok(Matrix {
            rows: n,
            cols: n,
            field: self.field,
            data: rows.into_iter().flat_map(|r| r.into_iter().skip(n)).collect(),
        })
    }

    /// A left inverse of a matrix with independent columns.
    pub fn left_inverse(&self) -> Result<Matrix> {
        let (_, pivot_rows) = self.transpose().rref();
        if pivot_rows.len() < self.cols {
            return Err(Error::Singular("columns are dependent".into()));
        }
        let square = self.select_rows(&pivot_rows);
        let inv = square.inverse()?;
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for (j, &r) in pivot_rows.iter().enumerate() {
            for i in 0..self.cols {
                out.set(i, r, inv.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Quotient of the ambient space by the span of the given columns.
    pub fn quotient_by_span(span: &Matrix) -> Quotient {
        let ambient = span.rows;
        let projection = span.transpose().kernel_basis().transpose();
        // Rows of `projection` are indexed by the free coordinates of the
        // span's row-reduced transpose; the section embeds those coordinates.
        let (_, pivots) = span.transpose().rref();
        let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let mut section = Matrix::zeros(span.field, ambient, free.len());
        for (j, &f) in free.iter().enumerate() {
            section.set(f, j, span.field.one());
        }
        Quotient { projection, section }
    }

    /// The matrix of `op` between the subspaces spanned by the columns of
    /// `source` and `target`, i.e. the unique `g` with `target * g = op * source`.
    pub fn restrict(op: &Matrix, source: &Matrix, target: &Matrix) -> Result<Matrix> {
        let image = op.checked_mul(source)?;
        let g = target.left_inverse()?.checked_mul(&image)?;
        if target.checked_mul(&g)? != image {
            return Err(Error::NotPreserved(format!(
                "{}x{} operator leaves the {}-dimensional target subspace",
                op.rows, op.cols, target.cols
            )));
        }
        Ok(g)
    }

    /// Map induced by `op` between quotients: `target.projection * op * source.section`,
    /// after checking that `op` carries the source relations into the target ones.
    pub fn induce_on_quotients(
        op: &Matrix,
        source_relations: &Matrix,
        source: &Quotient,
        target: &Quotient,
    ) -> Result<Matrix> {
        let leak = target
            .projection
            .checked_mul(op)?
            .checked_mul(source_relations)?;
        if !leak.is_zero() {
            return Err(Error::NotWellDefined(format!(
                "{}x{} operator does not map relations to relations",
                op.rows, op.cols
            )));
        }
        target.projection.checked_mul(op)?.checked_mul(&source.section)
    }
}

/// Gaussian elimination in place on `rows` over the first `ncols` columns
/// (extra columns ride along). Returns pivot columns; with `reduce`, the
/// result is reduced row echelon form in those columns.
fn eliminate(rows: &mut [Vec<Scalar>], ncols: usize, reduce: bool) -> Vec<usize> {
    let nrows = rows.len();
    let width = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // Prefer a unit pivot to limit coefficient growth.
        let mut choice = None;
        for (i, row) in rows.iter().enumerate().skip(r) {
            let v = &row[c];
            if v.is_zero() {
                continue;
            }
            if v.is_one() || (-v).is_one() {
                choice = Some(i);
                break;
            }
            choice.get_or_insert(i);
        }
        let Some(p) = choice else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if reduce && !rows[r][c].is_one() {
            for v in rows[r][c..].iter_mut() {
                if !v.is_zero() {
                    *v = &*v * &inv;
                }
            }
        }
        let support: Vec<usize> = (c..width).filter(|&j| !rows[r][j].is_zero()).collect();
        let pivot_row = rows[r].clone();
        let start = if reduce { 0 } else { r + 1 };
        for (i, row) in rows.iter_mut().enumerate().skip(start) {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = if reduce { row[c].clone() } else { &row[c] * &inv };
            for &j in &support {
                row[j] = &row[j] - &(&factor * &pivot_row[j]);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product shape")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.checked_add(rhs).expect("matrix sum shape")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            data: self.data.iter().map(|x| -x).collect(),
            ..*self
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 3, 3).rank(), 0);
        assert_eq!(Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
        let k = Matrix::zeros(Q, 2, 3).kernel_basis();
        assert_eq!(k.cols(), 3);
        assert_eq!(k.rank(), 3);
        let k = Matrix::from_ints(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_ints(Q, &[&[-1], &[1]]));
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::identity(Q, 3);
        assert_eq!(id.inverse().unwrap(), id);
        let two = Matrix::from_ints(Q, &[&[2]]);
        assert_eq!(two.inverse().unwrap().get(0, 0), &Q.ratio(1, 2).unwrap());
        let u = Matrix::from_ints(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(u.inverse().unwrap(), Matrix::from_ints(Q, &[&[1, -1], &[0, 1]]));
        let sing = Matrix::from_ints(Q, &[&[1, 2], &[2, 4]]);
        assert!(matches!(sing.inverse(), Err(Error::Singular(_))));
    }

    #[test]
    fn quotient_examples() {
        let q = Matrix::quotient_by_span(&Matrix::zeros(Q, 3, 0));
        assert!(q.projection.is_identity());
        let q = Matrix::quotient_by_span(&Matrix::identity(Q, 3));
        assert_eq!(q.dim(), 0);
        let span = Matrix::from_ints(Q, &[&[1], &[1]]);
        let q = Matrix::quotient_by_span(&span);
        assert_eq!(q.dim(), 1);
        assert!((&q.projection * &span).is_zero());
        assert!((&q.projection * &q.section).is_identity());
    }

    #[test]
    fn restriction_examples() {
        let axis = Matrix::from_ints(Q, &[&[1], &[0]]);
        let diag = Matrix::from_ints(Q, &[&[1, 0], &[0, 2]]);
        assert_eq!(Matrix::restrict(&diag, &axis, &axis).unwrap(), Matrix::from_ints(Q, &[&[1]]));
        let id = Matrix::identity(Q, 2);
        assert!(Matrix::restrict(&id, &axis, &axis).unwrap().is_identity());
        let zero = Matrix::zeros(Q, 2, 2);
        assert!(Matrix::restrict(&zero, &axis, &axis).unwrap().is_zero());
        let swap = Matrix::from_ints(Q, &[&[0, 1], &[1, 0]]);
        assert!(matches!(
            Matrix::restrict(&swap, &axis, &axis),
            Err(Error::NotPreserved(_))
        ));
    }

    #[test]
    fn prime_field_rank_differs_from_rationals() {
        let f2 = FieldTag::prime(2).unwrap();
        let m = |f| Matrix::from_ints(f, &[&[1, 1], &[1, -1]]);
        assert_eq!(m(Q).rank(), 2);
        assert_eq!(m(f2).rank(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                Matrix::from_fn(Q, r, c, |i, j| Q.int(v[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.cols(), m.cols());
            prop_assert!((&m * &k).is_zero());
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn inverse_iff_full_rank(n in 1usize..6, v in proptest::collection::vec(-2i64..3, 36)) {
            let m = Matrix::from_fn(Q, n, n, |i, j| Q.int(v[i * 6 + j]));
            match m.inverse() {
                Ok(inv) => {
                    prop_assert!((&inv * &m).is_identity());
                    prop_assert!((&m * &inv).is_identity());
                }
                Err(_) => prop_assert!(m.rank() < m.rows()),
            }
        }

        #[test]
        fn quotient_section_splits(m in small_matrix()) {
            let q = Matrix::quotient_by_span(&m);
            prop_assert_eq!(q.dim(), m.rows() - m.rank());
            prop_assert!((&q.projection * &m).is_zero());
            prop_assert!((&q.projection * &q.section).is_identity());
            prop_assert_eq!(q.projection.rank(), q.dim());
        }
    }
}
