//! Finite-dimensional Hopf algebras given by structure constants.

mod builders;
mod opposite;
mod pairs;
mod sayd;
mod spaces;

pub use builders::{
    co_opposite, cyclic_group_table, dual_hopf, ground_field, group_algebra, group_algebra_candidates,
    symmetric_group_s3_table, sweedler_h4, sweedler_h4_candidates,
};
pub use opposite::{search_opposite_isomorphism, verify_opposite_isomorphism};
pub use pairs::{
    search_involution_pairs, twisted_antipode, verify_modular_pair, Candidates, Character, NamedPair,
    Grouplike, ModularPair,
};
pub use sayd::{sayd_from_modular_pair, verify_sayd, SaydModule, SaydVariant};
pub use spaces::{
    cotensor_subspace, diagonal_left_coaction, h_tensor_quotient, right_diagonal_action,
    TensorQuotient,
};

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::scalar::FieldTag;
use crate::tensor::Tensor;

/// A vector space with a named basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasedSpace {
    pub field: FieldTag,
    pub labels: Vec<String>,
}

impl BasedSpace {
    pub fn new(field: FieldTag, labels: Vec<String>) -> Result<BasedSpace> {
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::Input(format!("duplicate basis label {l:?}")));
            }
        }
        Ok(BasedSpace { field, labels })
    }

    pub fn numbered(field: FieldTag, prefix: &str, dim: usize) -> BasedSpace {
        BasedSpace {
            field,
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }
}

/// Raw structure constants; nothing is assumed to hold. Maps act on
/// columns: `mult` is `d × d²`, `unit` is `d × 1`, `comult` is `d² × d`,
/// `counit` is `1 × d`, `antipode` is `d × d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebraData {
    pub space: BasedSpace,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

impl HopfAlgebraData {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn field(&self) -> FieldTag {
        self.space.field
    }

    fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        let expect = [
            ("mult", &self.mult, (d, d * d)),
            ("unit", &self.unit, (d, 1)),
            ("comult", &self.comult, (d * d, d)),
            ("counit", &self.counit, (1, d)),
            ("antipode", &self.antipode, (d, d)),
        ];
        for (name, m, shape) in expect {
            if m.shape() != shape {
                return Err(Error::ShapeMismatch(format!(
                    "{name} is {}x{}, expected {}x{} for dimension {d}",
                    m.rows(),
                    m.cols(),
                    shape.0,
                    shape.1
                )));
            }
            if m.field() != self.field() {
                return Err(Error::Input(format!("{name} is not over {}", self.field())));
            }
        }
        Ok(())
    }
}

/// Checks every Hopf algebra axiom as an exact matrix identity.
pub fn verify_hopf_axioms(h: &HopfAlgebraData) -> Result<Report> {
    h.check_shapes()?;
    let f = h.field();
    let d = h.dim();
    let id = Matrix::identity(f, d);
    let one = Matrix::identity(f, 1);
    let flip = crate::tensor::permutation_matrix(f, &[d, d], &[1, 0]);
    let (mu, eta, delta, eps, s) = (&h.mult, &h.unit, &h.comult, &h.counit, &h.antipode);

    let mut r = Report::new();
    r.push("associativity", mu * &mu.kron(&id) == mu * &id.kron(mu));
    r.push("left unit", (mu * &eta.kron(&id)).is_identity());
    r.push("right unit", (mu * &id.kron(eta)).is_identity());
    r.push("coassociativity", &delta.kron(&id) * delta == &id.kron(delta) * delta);
    r.push("left counit", (&eps.kron(&id) * delta).is_identity());
    r.push("right counit", (&id.kron(eps) * delta).is_identity());
    let middle_flip = id.kron(&flip).kron(&id);
    r.push(
        "comultiplication is multiplicative",
        delta * mu == &(&mu.kron(mu) * &middle_flip) * &delta.kron(delta),
    );
    r.push("comultiplication is unital", delta * eta == eta.kron(eta));
    r.push("counit is multiplicative", eps * mu == eps.kron(eps));
    r.push("counit is unital", eps * eta == one);
    let eta_eps = eta * eps;
    r.push("antipode left", &(mu * &s.kron(&id)) * delta == eta_eps);
    r.push("antipode right", &(mu * &id.kron(s)) * delta == eta_eps);
    Ok(r)
}

/// Associative unital algebra structure only.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: FieldTag,
    pub dim: usize,
    pub mult: Matrix,
    pub unit: Matrix,
}

impl AlgebraData {
    pub fn verify(&self) -> Report {
        let id = Matrix::identity(self.field, self.dim);
        let mu = &self.mult;
        let mut r = Report::new();
        r.push("associativity", mu * &mu.kron(&id) == mu * &id.kron(mu));
        r.push("left unit", (mu * &self.unit.kron(&id)).is_identity());
        r.push("right unit", (mu * &id.kron(&self.unit)).is_identity());
        r
    }
}

/// Coassociative counital coalgebra structure only.
#[derive(Clone, Debug)]
pub struct CoalgebraData {
    pub field: FieldTag,
    pub dim: usize,
    pub comult: Matrix,
    pub counit: Matrix,
}

impl CoalgebraData {
    pub fn verify(&self) -> Report {
        let id = Matrix::identity(self.field, self.dim);
        let delta = &self.comult;
        let mut r = Report::new();
        r.push("coassociativity", &delta.kron(&id) * delta == &id.kron(delta) * delta);
        r.push("left counit", (&self.counit.kron(&id) * delta).is_identity());
        r.push("right counit", (&id.kron(&self.counit) * delta).is_identity());
        r
    }
}

/// A Hopf algebra whose axioms have been verified, with `S⁻¹` cached.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    data: HopfAlgebraData,
    antipode_inv: Matrix,
    name: String,
}

impl Deref for HopfAlgebra {
    type Target = HopfAlgebraData;
    fn deref(&self) -> &HopfAlgebraData {
        &self.data
    }
}

impl HopfAlgebra {
    /// Verifies the axioms and inverts the antipode.
    pub fn new(name: impl Into<String>, data: HopfAlgebraData) -> Result<HopfAlgebra> {
        let report = verify_hopf_axioms(&data)?;
        if !report.all_passed() {
            return Err(Error::Input(format!(
                "Hopf axioms fail: {}",
                report.failure_names().join(", ")
            )));
        }
        let antipode_inv = antipode_inverse(&data)?;
        Ok(HopfAlgebra {
            data,
            antipode_inv,
            name: name.into(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn data(&self) -> &HopfAlgebraData {
        &self.data
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn algebra(&self) -> AlgebraData {
        AlgebraData {
            field: self.field(),
            dim: self.dim(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> CoalgebraData {
        CoalgebraData {
            field: self.field(),
            dim: self.dim(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    /// Left multiplication by a fixed element `a`, as a `d × d` matrix.
    pub fn left_mult_by(&self, a: &Matrix) -> Matrix {
        let d = self.dim();
        &self.mult * &a.kron(&Matrix::identity(self.field(), d))
    }

    /// Right multiplication by a fixed element `a`.
    pub fn right_mult_by(&self, a: &Matrix) -> Matrix {
        let d = self.dim();
        &self.mult * &Matrix::identity(self.field(), d).kron(a)
    }

    /// Whether `flip ∘ Δ = Δ`.
    pub fn is_cocommutative(&self) -> bool {
        let d = self.dim();
        let flip = crate::tensor::permutation_matrix(self.field(), &[d, d], &[1, 0]);
        &flip * &self.comult == self.comult
    }

    // Leg operations used to assemble operator matrices from formulas.

    /// `Δ` on leg `leg`, producing two adjacent legs.
    pub fn split(&self, t: &Tensor, leg: usize) -> Tensor {
        t.split_leg(leg, &self.comult, [self.dim(), self.dim()])
    }

    /// Iterated coproduct `Δ^{pieces-1}` on leg `leg`, producing `pieces` legs.
    pub fn split_n(&self, t: &Tensor, leg: usize, pieces: usize) -> Tensor {
        assert!(pieces >= 1);
        let mut t = t.clone();
        for k in 0..pieces - 1 {
            t = self.split(&t, leg + k);
        }
        t
    }

    pub fn counit_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.eval_leg(leg, &self.counit)
    }

    pub fn unit_at(&self, t: &Tensor, at: usize) -> Tensor {
        t.insert(at, &self.unit)
    }

    pub fn antipode_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, &self.antipode)
    }

    pub fn antipode_inv_on(&self, t: &Tensor, leg: usize) -> Tensor {
        t.map_leg(leg, &self.antipode_inv)
    }

    /// Product of the listed legs in the listed order, placed at the first.
    pub fn multiply(&self, t: &Tensor, legs: &[usize]) -> Tensor {
        t.product(legs, &self.mult)
    }
}

/// Exact inverse of the antipode.
pub fn antipode_inverse(h: &HopfAlgebraData) -> Result<Matrix> {
    h.antipode
        .inverse()
        .map_err(|_| Error::Singular("the antipode is not bijective".into()))
}

/// How the legs of a tensor are gathered into the output legs of a formula.
#[derive(Clone, Debug)]
pub enum Gather {
    /// The leg is passed through unchanged.
    Leg(usize),
    /// Product in the Hopf algebra of the listed legs, left to right.
    Product(Vec<usize>),
    /// Left action `h · m` of Hopf leg `h` on module leg `m`.
    Act { h: usize, m: usize },
}

impl Gather {
    fn legs(&self) -> Vec<usize> {
        match self {
            Gather::Leg(l) => vec![*l],
            Gather::Product(ls) => ls.clone(),
            Gather::Act { h, m } => vec![*h, *m],
        }
    }
}

/// Regroups the legs of `t` in the order given by `groups` (which must use
/// every leg exactly once) and contracts each group to a single leg.
pub fn gather(h: &HopfAlgebra, action: Option<(&Matrix, usize)>, t: &Tensor, groups: &[Gather]) -> Tensor {
    let order: Vec<usize> = groups.iter().flat_map(Gather::legs).collect();
    let mut sorted = order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..t.legs()).collect::<Vec<_>>(), "groups must use every leg once");
    let mut t = t.permute(&order);
    let starts: Vec<usize> = groups
        .iter()
        .scan(0, |acc, g| {
            let s = *acc;
            *acc += g.legs().len();
            Some(s)
        })
        .collect();
    for (g, &p) in groups.iter().zip(&starts).rev() {
        t = match g {
            Gather::Leg(_) => t,
            Gather::Product(ls) if ls.len() == 1 => t,
            Gather::Product(ls) => {
                let legs: Vec<usize> = (p..p + ls.len()).collect();
                h.multiply(&t, &legs)
            }
            Gather::Act { .. } => {
                let (act, mdim) = action.expect("module action required");
                t.apply(&[p, p + 1], act, &[mdim], p)
            }
        };
    }
    t
}
