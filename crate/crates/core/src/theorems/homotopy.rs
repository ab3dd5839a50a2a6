use serde::Serialize;

use crate::constructions::{algebra_cyclic, coalgebra_cocyclic};
use crate::error::{Error, Result};
use crate::homology::{hochschild_boundary, hochschild_coboundary, hochschild_cohomology_dims, hochschild_dims, HomologyReport};
use crate::hopf::{AlgebraData, CoalgebraData};
use crate::matrix::Matrix;
use crate::report::Report;

#[derive(Clone, Debug, Serialize)]
pub struct HomotopyReport {
    /// `b∘h + h∘b = id` in degrees `1..N−1`, and vanishing of the
    /// Hochschild (co)homology there.
    pub report: Report,
    /// The same identity in degree 0, which is not expected to hold.
    pub degree_zero: bool,
    pub homology: HomologyReport,
}

impl HomotopyReport {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

fn record_vanishing(r: &mut Report, homology: &HomologyReport) {
    for d in homology.dims.iter().filter(|d| d.degree >= 1) {
        r.record("vanishing Hochschild (co)homology", Some(d.degree), &[], d.dim == 0 && d.guaranteed);
    }
}

/// `h(a_0⊗…⊗a_n) = φ(a_0) a_1⊗…⊗a_n` on the Hochschild complex of the cyclic
/// dual of `A^♮`.
pub fn contracting_homotopy_algebra(a: &AlgebraData, phi: &Matrix, truncation: usize) -> Result<HomotopyReport> {
    let f = a.field;
    let d = a.dim;
    if phi.shape() != (1, d) {
        return Err(Error::ShapeMismatch(format!("functional is {}x{}, expected 1x{d}", phi.rows(), phi.cols())));
    }
    if !(phi * &a.unit).is_identity() {
        return Err(Error::Normalization("φ(1) ≠ 1".into()));
    }
    if truncation < 2 {
        return Err(Error::Input("the homotopy needs truncation at least 2".into()));
    }
    let x = algebra_cyclic(a, truncation).check_dual()?;
    let h = |n: usize| phi.kron(&Matrix::identity(f, d.pow(n as u32)));
    let b = |n: usize| hochschild_coboundary(&x, n);
    let mut r = Report::new();
    for n in 1..truncation {
        let lhs = &(&b(n - 1) * &h(n)) + &(&h(n + 1) * &b(n));
        r.record("bh + hb = id", Some(n), &[], lhs.is_identity());
    }
    let degree_zero = (&h(1) * &b(0)).is_identity();
    let homology = hochschild_cohomology_dims(&x, truncation - 1)?;
    record_vanishing(&mut r, &homology);
    Ok(HomotopyReport { report: r, degree_zero, homology })
}

/// `s(c_0⊗…⊗c_{n−1}) = c⊗c_0⊗…⊗c_{n−1}` on the Hochschild complex of the
/// cyclic dual of `C_♮`.
pub fn contracting_homotopy_coalgebra(c: &CoalgebraData, element: &Matrix, truncation: usize) -> Result<HomotopyReport> {
    let f = c.field;
    let d = c.dim;
    if element.shape() != (d, 1) {
        return Err(Error::ShapeMismatch(format!("element is {}x{}, expected {d}x1", element.rows(), element.cols())));
    }
    if !(&c.counit * element).is_identity() {
        return Err(Error::Normalization("ε(c) ≠ 1".into()));
    }
    if truncation < 2 {
        return Err(Error::Input("the homotopy needs truncation at least 2".into()));
    }
    let x = coalgebra_cocyclic(c, truncation).hat_dual()?;
    let s = |n: usize| element.kron(&Matrix::identity(f, d.pow(n as u32)));
    let b = |n: usize| hochschild_boundary(&x, n);
    let mut r = Report::new();
    for n in 1..truncation {
        let lhs = &(&b(n + 1) * &s(n + 1)) + &(&s(n) * &b(n));
        r.record("bs + sb = id", Some(n), &[], lhs.is_identity());
    }
    let degree_zero = (&b(1) * &s(1)).is_identity();
    let homology = hochschild_dims(&x, truncation - 1)?;
    record_vanishing(&mut r, &homology);
    Ok(HomotopyReport { report: r, degree_zero, homology })
}

/// The functional picking the coefficient of the first basis vector.
pub fn first_coordinate(field: crate::scalar::FieldTag, d: usize) -> Matrix {
    Matrix::from_fn(field, 1, d, |_, c| if c == 0 { field.one() } else { field.zero() })
}
