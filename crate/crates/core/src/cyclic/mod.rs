//! Truncated paracyclic and paracocyclic modules, their relation checkers,
//! and the cyclic duality functors.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Quotient};
use crate::report::Report;
use crate::scalar::FieldTag;

/// `X_0, …, X_N` with faces `δ_i: X_n → X_{n-1}` (`0 ≤ i ≤ n`),
/// degeneracies `σ_i: X_n → X_{n+1}` (`0 ≤ i ≤ n`, `n < N`) and `τ_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaCyclicModule {
    pub name: String,
    pub field: FieldTag,
    pub dims: Vec<usize>,
    /// `faces[n][i]`; `faces[0]` is empty.
    pub faces: Vec<Vec<Matrix>>,
    /// `degeneracies[n][i]` for `n < N`.
    pub degeneracies: Vec<Vec<Matrix>>,
    pub cyclic: Vec<Matrix>,
}

/// `X^0, …, X^N` with cofaces `d_i: X^n → X^{n+1}` (`0 ≤ i ≤ n+1`, `n < N`),
/// codegeneracies `s_i: X^n → X^{n-1}` (`0 ≤ i ≤ n-1`) and `t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParaCocyclicModule {
    pub name: String,
    pub field: FieldTag,
    pub dims: Vec<usize>,
    /// `cofaces[n][i]` for `n < N`.
    pub cofaces: Vec<Vec<Matrix>>,
    /// `codegeneracies[n][i]`; `codegeneracies[0]` is empty.
    pub codegeneracies: Vec<Vec<Matrix>>,
    pub cyclic: Vec<Matrix>,
}

/// One matrix per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMap {
    pub maps: Vec<Matrix>,
}

impl GradedMap {
    pub fn new(maps: Vec<Matrix>) -> GradedMap {
        GradedMap { maps }
    }

    pub fn identity(field: FieldTag, dims: &[usize]) -> GradedMap {
        GradedMap::new(dims.iter().map(|&d| Matrix::identity(field, d)).collect())
    }

    pub fn zero(field: FieldTag, source: &[usize], target: &[usize]) -> GradedMap {
        GradedMap::new(source.iter().zip(target).map(|(&s, &t)| Matrix::zeros(field, t, s)).collect())
    }

    pub fn degree(&self, n: usize) -> &Matrix {
        &self.maps[n]
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn compose(&self, first: &GradedMap) -> GradedMap {
        GradedMap::new(self.maps.iter().zip(&first.maps).map(|(g, f)| g * f).collect())
    }

    pub fn inverse(&self) -> Result<GradedMap> {
        self.maps
            .iter()
            .enumerate()
            .map(|(n, m)| {
                m.inverse()
                    .map_err(|_| Error::NotInvertible(format!("degree {n}: {}x{} map of rank {}", m.rows(), m.cols(), m.rank())))
            })
            .collect::<Result<Vec<_>>>()
            .map(GradedMap::new)
    }

    pub fn is_invertible(&self) -> bool {
        self.maps.iter().all(|m| m.is_square() && m.rank() == m.rows())
    }
}

/// Relation-check results plus, per degree, the least `k ≤ n+1` with
/// `τ_n^k = id` and whether `τ_n^{n+1} = id`.
#[derive(Clone, Debug)]
pub struct RelationReport {
    pub report: Report,
    pub orders: Vec<Option<usize>>,
    pub cyclic_degrees: Vec<bool>,
}

impl RelationReport {
    /// All (co)simplicial and compatibility relations hold.
    pub fn paracyclic(&self) -> bool {
        self.report.all_passed()
    }

    /// Additionally `τ_n^{n+1} = id` in every degree.
    pub fn cyclic(&self) -> bool {
        self.paracyclic() && self.cyclic_degrees.iter().all(|&c| c)
    }
}

fn least_order(t: &Matrix, n: usize) -> (Option<usize>, bool) {
    let mut p = t.clone();
    let mut order = None;
    for k in 1..=n + 1 {
        if p.is_identity() {
            order = Some(k);
            break;
        }
        p = &p * t;
    }
    let full = match order {
        Some(k) => (n + 1).is_multiple_of(k),
        None => false,
    };
    (order, full)
}

fn eq_checked(a: Result<Matrix>, b: Result<Matrix>) -> bool {
    matches!((a, b), (Ok(x), Ok(y)) if x == y)
}

fn mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.checked_mul(b)
}

fn check_invertible(r: &mut Report, ops: &[Matrix]) {
    for (n, t) in ops.iter().enumerate() {
        r.record("cyclic operator invertible", Some(n), &[], t.rank() == t.rows());
    }
}

impl ParaCyclicModule {
    /// Every space `k` and every operator `[[1]]`.
    pub fn constant(field: FieldTag, truncation: usize) -> ParaCyclicModule {
        let one = Matrix::identity(field, 1);
        ParaCyclicModule {
            name: "constant".into(),
            field,
            dims: vec![1; truncation + 1],
            faces: (0..=truncation).map(|n| vec![one.clone(); if n == 0 { 0 } else { n + 1 }]).collect(),
            degeneracies: (0..truncation).map(|n| vec![one.clone(); n + 1]).collect(),
            cyclic: vec![one; truncation + 1],
        }
    }

    pub fn truncation(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn face(&self, n: usize, i: usize) -> &Matrix {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.degeneracies[n][i]
    }

    pub fn check_shapes(&self) -> Result<()> {
        let big_n = self.truncation();
        let bad = |what: String| Err(Error::ShapeMismatch(format!("{}: {what}", self.name)));
        if self.faces.len() != big_n + 1 || self.degeneracies.len() != big_n || self.cyclic.len() != big_n + 1 {
            return bad("operator family lengths disagree with the truncation".into());
        }
        for n in 0..=big_n {
            let want_faces = if n == 0 { 0 } else { n + 1 };
            if self.faces[n].len() != want_faces {
                return bad(format!("degree {n} has {} faces", self.faces[n].len()));
            }
            for (i, m) in self.faces[n].iter().enumerate() {
                if m.shape() != (self.dims[n - 1], self.dims[n]) {
                    return bad(format!("face {i} in degree {n} is {}x{}", m.rows(), m.cols()));
                }
            }
            if n < big_n {
                if self.degeneracies[n].len() != n + 1 {
                    return bad(format!("degree {n} has {} degeneracies", self.degeneracies[n].len()));
                }
                for (i, m) in self.degeneracies[n].iter().enumerate() {
                    if m.shape() != (self.dims[n + 1], self.dims[n]) {
                        return bad(format!("degeneracy {i} in degree {n} is {}x{}", m.rows(), m.cols()));
                    }
                }
            }
            if self.cyclic[n].shape() != (self.dims[n], self.dims[n]) {
                return bad(format!("cyclic operator in degree {n} is not {0}x{0}", self.dims[n]));
            }
        }
        Ok(())
    }

    /// Every simplicial identity and cyclic compatibility relation, per
    /// (relation, degree, indices), in all degrees within the truncation.
    pub fn check_relations(&self) -> Result<RelationReport> {
        self.check_shapes()?;
        let big_n = self.truncation();
        let d = |n: usize, i: usize| &self.faces[n][i];
        let s = |n: usize, i: usize| &self.degeneracies[n][i];
        let t = |n: usize| &self.cyclic[n];
        let mut r = Report::new();

        for n in 2..=big_n {
            for j in 1..=n {
                for i in 0..j {
                    r.record("face-face", Some(n), &[i, j], eq_checked(mul(d(n - 1, i), d(n, j)), mul(d(n - 1, j - 1), d(n, i))));
                }
            }
        }
        for n in 0..big_n.saturating_sub(1) {
            for j in 0..=n {
                for i in 0..=j {
                    r.record(
                        "degeneracy-degeneracy",
                        Some(n),
                        &[i, j],
                        eq_checked(mul(s(n + 1, i), s(n, j)), mul(s(n + 1, j + 1), s(n, i))),
                    );
                }
            }
        }
        for n in 0..big_n {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = mul(d(n + 1, i), s(n, j));
                    let ok = if i < j {
                        eq_checked(lhs, mul(s(n - 1, j - 1), d(n, i)))
                    } else if i == j || i == j + 1 {
                        matches!(lhs, Ok(m) if m.is_identity())
                    } else {
                        eq_checked(lhs, mul(s(n - 1, j), d(n, i - 1)))
                    };
                    r.record("face-degeneracy", Some(n), &[i, j], ok);
                }
            }
        }
        check_invertible(&mut r, &self.cyclic);
        for n in 1..=big_n {
            for i in 1..=n {
                r.record("face-cyclic", Some(n), &[i], eq_checked(mul(d(n, i), t(n)), mul(t(n - 1), d(n, i - 1))));
            }
            r.record("first-face-cyclic", Some(n), &[0], eq_checked(mul(d(n, 0), t(n)), Ok(d(n, n).clone())));
        }
        for n in 0..big_n {
            for i in 1..=n {
                r.record(
                    "degeneracy-cyclic",
                    Some(n),
                    &[i],
                    eq_checked(mul(s(n, i), t(n)), mul(t(n + 1), s(n, i - 1))),
                );
            }
            let t2 = t(n + 1) * t(n + 1);
            r.record("first-degeneracy-cyclic", Some(n), &[0], eq_checked(mul(s(n, 0), t(n)), mul(&t2, s(n, n))));
        }
        let (orders, cyclic_degrees) = (0..=big_n).map(|n| least_order(t(n), n)).unzip();
        Ok(RelationReport { report: r, orders, cyclic_degrees })
    }

    /// The cyclic operators' inverses, degreewise.
    pub fn cyclic_inverses(&self) -> Result<Vec<Matrix>> {
        self.cyclic
            .iter()
            .enumerate()
            .map(|(n, t)| t.inverse().map_err(|_| Error::Singular(format!("τ_{n} of {}", self.name))))
            .collect()
    }

    /// The cyclic dual `X̌`: `d_0 = τ_{n+1}σ_n`, `d_i = σ_{i-1}`,
    /// `s_i = δ_i`, `t_n = τ_n⁻¹`.
    pub fn check_dual(&self) -> Result<ParaCocyclicModule> {
        self.check_shapes()?;
        let big_n = self.truncation();
        let cofaces = (0..big_n)
            .map(|n| {
                let mut ops = vec![&self.cyclic[n + 1] * self.degeneracy(n, n)];
                ops.extend((1..=n + 1).map(|i| self.degeneracy(n, i - 1).clone()));
                ops
            })
            .collect();
        let codegeneracies = (0..=big_n)
            .map(|n| (0..n).map(|i| self.face(n, i).clone()).collect())
            .collect();
        Ok(ParaCocyclicModule {
            name: format!("check({})", self.name),
            field: self.field,
            dims: self.dims.clone(),
            cofaces,
            codegeneracies,
            cyclic: self.cyclic_inverses()?,
        })
    }

    /// The transposed module on the dual spaces, a paracocyclic module
    /// with `d_i = δ_iᵀ`, `s_i = σ_iᵀ`, `t_n = τ_nᵀ`.
    pub fn linear_dual(&self) -> ParaCocyclicModule {
        let big_n = self.truncation();
        ParaCocyclicModule {
            name: format!("dual({})", self.name),
            field: self.field,
            dims: self.dims.clone(),
            cofaces: (0..big_n)
                .map(|n| self.faces[n + 1].iter().map(Matrix::transpose).collect())
                .collect(),
            codegeneracies: (0..=big_n)
                .map(|n| if n == 0 { vec![] } else { self.degeneracies[n - 1].iter().map(Matrix::transpose).collect() })
                .collect(),
            cyclic: self.cyclic.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Restriction to subspaces spanned by `inclusions[n]` (which every
    /// operator must preserve).
    pub fn restrict(&self, name: impl Into<String>, inclusions: &[Matrix]) -> Result<ParaCyclicModule> {
        let big_n = self.truncation();
        let sub = |op: &Matrix, from: usize, to: usize| Matrix::restrict(op, &inclusions[from], &inclusions[to]);
        Ok(ParaCyclicModule {
            name: name.into(),
            field: self.field,
            dims: inclusions.iter().map(Matrix::cols).collect(),
            faces: (0..=big_n)
                .map(|n| self.faces[n].iter().map(|m| sub(m, n, n - 1)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
            degeneracies: (0..big_n)
                .map(|n| self.degeneracies[n].iter().map(|m| sub(m, n, n + 1)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
            cyclic: (0..=big_n).map(|n| sub(&self.cyclic[n], n, n)).collect::<Result<_>>()?,
        })
    }

    /// `f X f⁻¹`: the structure carried along a degreewise isomorphism.
    pub fn transport(&self, name: impl Into<String>, f: &GradedMap) -> Result<ParaCyclicModule> {
        let inv = f.inverse()?;
        let big_n = self.truncation();
        let conj = |op: &Matrix, from: usize, to: usize| &(&f.maps[to] * op) * &inv.maps[from];
        Ok(ParaCyclicModule {
            name: name.into(),
            field: self.field,
            dims: f.maps.iter().map(Matrix::rows).collect(),
            faces: (0..=big_n).map(|n| self.faces[n].iter().map(|m| conj(m, n, n - 1)).collect()).collect(),
            degeneracies: (0..big_n)
                .map(|n| self.degeneracies[n].iter().map(|m| conj(m, n, n + 1)).collect())
                .collect(),
            cyclic: (0..=big_n).map(|n| conj(&self.cyclic[n], n, n)).collect(),
        })
    }
}

impl ParaCocyclicModule {
    pub fn constant(field: FieldTag, truncation: usize) -> ParaCocyclicModule {
        let one = Matrix::identity(field, 1);
        ParaCocyclicModule {
            name: "constant".into(),
            field,
            dims: vec![1; truncation + 1],
            cofaces: (0..truncation).map(|n| vec![one.clone(); n + 2]).collect(),
            codegeneracies: (0..=truncation).map(|n| vec![one.clone(); n]).collect(),
            cyclic: vec![one; truncation + 1],
        }
    }

    pub fn truncation(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn coface(&self, n: usize, i: usize) -> &Matrix {
        &self.cofaces[n][i]
    }

    pub fn codegeneracy(&self, n: usize, i: usize) -> &Matrix {
        &self.codegeneracies[n][i]
    }

    pub fn check_shapes(&self) -> Result<()> {
        let big_n = self.truncation();
        let bad = |what: String| Err(Error::ShapeMismatch(format!("{}: {what}", self.name)));
        if self.cofaces.len() != big_n || self.codegeneracies.len() != big_n + 1 || self.cyclic.len() != big_n + 1 {
            return bad("operator family lengths disagree with the truncation".into());
        }
        for n in 0..=big_n {
            if n < big_n {
                if self.cofaces[n].len() != n + 2 {
                    return bad(format!("degree {n} has {} cofaces", self.cofaces[n].len()));
                }
                for (i, m) in self.cofaces[n].iter().enumerate() {
                    if m.shape() != (self.dims[n + 1], self.dims[n]) {
                        return bad(format!("coface {i} in degree {n} is {}x{}", m.rows(), m.cols()));
                    }
                }
            }
            if self.codegeneracies[n].len() != n {
                return bad(format!("degree {n} has {} codegeneracies", self.codegeneracies[n].len()));
            }
            for (i, m) in self.codegeneracies[n].iter().enumerate() {
                if m.shape() != (self.dims[n - 1], self.dims[n]) {
                    return bad(format!("codegeneracy {i} in degree {n} is {}x{}", m.rows(), m.cols()));
                }
            }
            if self.cyclic[n].shape() != (self.dims[n], self.dims[n]) {
                return bad(format!("cyclic operator in degree {n} is not {0}x{0}", self.dims[n]));
            }
        }
        Ok(())
    }

    /// Every cosimplicial identity and cocyclic compatibility relation.
    pub fn check_relations(&self) -> Result<RelationReport> {
        self.check_shapes()?;
        let big_n = self.truncation();
        let d = |n: usize, i: usize| &self.cofaces[n][i];
        let s = |n: usize, i: usize| &self.codegeneracies[n][i];
        let t = |n: usize| &self.cyclic[n];
        let mut r = Report::new();

        for n in 0..big_n.saturating_sub(1) {
            for j in 1..=n + 2 {
                for i in 0..j {
                    r.record(
                        "coface-coface",
                        Some(n),
                        &[i, j],
                        eq_checked(mul(d(n + 1, j), d(n, i)), mul(d(n + 1, i), d(n, j - 1))),
                    );
                }
            }
        }
        for n in 2..=big_n {
            for j in 0..=n - 2 {
                for i in 0..=j {
                    r.record(
                        "codegeneracy-codegeneracy",
                        Some(n),
                        &[i, j],
                        eq_checked(mul(s(n - 1, j), s(n, i)), mul(s(n - 1, i), s(n, j + 1))),
                    );
                }
            }
        }
        for n in 0..big_n {
            for j in 0..=n {
                for i in 0..=n + 1 {
                    let lhs = mul(s(n + 1, j), d(n, i));
                    let ok = if i < j {
                        eq_checked(lhs, mul(d(n - 1, i), s(n, j - 1)))
                    } else if i == j || i == j + 1 {
                        matches!(lhs, Ok(m) if m.is_identity())
                    } else {
                        eq_checked(lhs, mul(d(n - 1, i - 1), s(n, j)))
                    };
                    r.record("codegeneracy-coface", Some(n), &[i, j], ok);
                }
            }
        }
        check_invertible(&mut r, &self.cyclic);
        for n in 0..big_n {
            for i in 1..=n + 1 {
                r.record("cyclic-coface", Some(n), &[i], eq_checked(mul(t(n + 1), d(n, i)), mul(d(n, i - 1), t(n))));
            }
            r.record("cyclic-first-coface", Some(n), &[0], eq_checked(mul(t(n + 1), d(n, 0)), Ok(d(n, n + 1).clone())));
        }
        for n in 1..=big_n {
            for i in 1..n {
                r.record(
                    "cyclic-codegeneracy",
                    Some(n),
                    &[i],
                    eq_checked(mul(t(n - 1), s(n, i)), mul(s(n, i - 1), t(n))),
                );
            }
            let t2 = t(n) * t(n);
            r.record(
                "cyclic-first-codegeneracy",
                Some(n),
                &[0],
                eq_checked(mul(t(n - 1), s(n, 0)), mul(s(n, n - 1), &t2)),
            );
        }
        let (orders, cyclic_degrees) = (0..=big_n).map(|n| least_order(t(n), n)).unzip();
        Ok(RelationReport { report: r, orders, cyclic_degrees })
    }

    pub fn cyclic_inverses(&self) -> Result<Vec<Matrix>> {
        self.cyclic
            .iter()
            .enumerate()
            .map(|(n, t)| t.inverse().map_err(|_| Error::Singular(format!("t_{n} of {}", self.name))))
            .collect()
    }

    /// The cyclic dual `X̂`: `δ_0 = s_{n-1}t_n`, `δ_i = s_{i-1}`,
    /// `σ_i = d_i`, `τ_n = t_n⁻¹`.
    pub fn hat_dual(&self) -> Result<ParaCyclicModule> {
        self.check_shapes()?;
        let big_n = self.truncation();
        let faces = (0..=big_n)
            .map(|n| {
                if n == 0 {
                    return vec![];
                }
                let mut ops = vec![self.codegeneracy(n, n - 1) * &self.cyclic[n]];
                ops.extend((1..=n).map(|i| self.codegeneracy(n, i - 1).clone()));
                ops
            })
            .collect();
        let degeneracies = (0..big_n)
            .map(|n| (0..=n).map(|i| self.coface(n, i).clone()).collect())
            .collect();
        Ok(ParaCyclicModule {
            name: format!("hat({})", self.name),
            field: self.field,
            dims: self.dims.clone(),
            faces,
            degeneracies,
            cyclic: self.cyclic_inverses()?,
        })
    }

    /// Operators induced on the quotients `quotients[n]` of each space by the
    /// column span `relations[n]`.
    pub fn induce(&self, name: impl Into<String>, quotients: &[Quotient], relations: &[Matrix]) -> Result<ParaCocyclicModule> {
        let big_n = self.truncation();
        let ind = |op: &Matrix, from: usize, to: usize| {
            Matrix::induce_on_quotients(op, &relations[from], &quotients[from], &quotients[to])
        };
        Ok(ParaCocyclicModule {
            name: name.into(),
            field: self.field,
            dims: quotients.iter().map(Quotient::dim).collect(),
            cofaces: (0..big_n)
                .map(|n| self.cofaces[n].iter().map(|m| ind(m, n, n + 1)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
            codegeneracies: (0..=big_n)
                .map(|n| self.codegeneracies[n].iter().map(|m| ind(m, n, n - 1)).collect::<Result<_>>())
                .collect::<Result<_>>()?,
            cyclic: (0..=big_n).map(|n| ind(&self.cyclic[n], n, n)).collect::<Result<_>>()?,
        })
    }

    pub fn transport(&self, name: impl Into<String>, f: &GradedMap) -> Result<ParaCocyclicModule> {
        let inv = f.inverse()?;
        let big_n = self.truncation();
        let conj = |op: &Matrix, from: usize, to: usize| &(&f.maps[to] * op) * &inv.maps[from];
        Ok(ParaCocyclicModule {
            name: name.into(),
            field: self.field,
            dims: f.maps.iter().map(Matrix::rows).collect(),
            cofaces: (0..big_n).map(|n| self.cofaces[n].iter().map(|m| conj(m, n, n + 1)).collect()).collect(),
            codegeneracies: (0..=big_n)
                .map(|n| self.codegeneracies[n].iter().map(|m| conj(m, n, n - 1)).collect())
                .collect(),
            cyclic: (0..=big_n).map(|n| conj(&self.cyclic[n], n, n)).collect(),
        })
    }

    /// The transposed module on the dual spaces: `δ_i = d_iᵀ`, `σ_i = s_iᵀ`, `τ_n = t_nᵀ`.
    pub fn linear_dual(&self) -> ParaCyclicModule {
        let big_n = self.truncation();
        ParaCyclicModule {
            name: format!("dual({})", self.name),
            field: self.field,
            dims: self.dims.clone(),
            faces: (0..=big_n)
                .map(|n| if n == 0 { vec![] } else { self.cofaces[n - 1].iter().map(Matrix::transpose).collect() })
                .collect(),
            degeneracies: (0..big_n)
                .map(|n| self.codegeneracies[n + 1].iter().map(Matrix::transpose).collect())
                .collect(),
            cyclic: self.cyclic.iter().map(Matrix::transpose).collect(),
        }
    }
}

/// Which structure a [`GradedMap`] is checked against.
pub enum ModulePair<'a> {
    Cyclic(&'a ParaCyclicModule, &'a ParaCyclicModule),
    Cocyclic(&'a ParaCocyclicModule, &'a ParaCocyclicModule),
}

/// Checks that `f` commutes with every operator, degree by degree.
/// Identities needing a degree beyond `f`'s last are reported as out of
/// truncation.
pub fn verify_morphism(f: &GradedMap, modules: ModulePair<'_>) -> Result<Report> {
    let mut r = Report::new();
    let (src_dims, dst_dims, big_n) = match &modules {
        ModulePair::Cyclic(x, y) => {
            x.check_shapes()?;
            y.check_shapes()?;
            (&x.dims, &y.dims, x.truncation().min(y.truncation()))
        }
        ModulePair::Cocyclic(x, y) => {
            x.check_shapes()?;
            y.check_shapes()?;
            (&x.dims, &y.dims, x.truncation().min(y.truncation()))
        }
    };
    for (n, m) in f.maps.iter().enumerate() {
        if n <= big_n && m.shape() != (dst_dims[n], src_dims[n]) {
            return Err(Error::ShapeMismatch(format!(
                "map in degree {n} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                dst_dims[n],
                src_dims[n]
            )));
        }
    }
    let have = |n: usize| n < f.len() && n <= big_n;
    let commute = |r: &mut Report, name: &str, n: usize, i: Option<usize>, from: usize, to: usize, a: &Matrix, b: &Matrix| {
        let idx: Vec<usize> = i.into_iter().collect();
        if have(from) && have(to) {
            r.record(name, Some(n), &idx, &f.maps[to] * a == b * &f.maps[from]);
        } else {
            r.skip(name, Some(n), &idx);
        }
    };
    match modules {
        ModulePair::Cyclic(x, y) => {
            for n in 0..=big_n {
                for i in 0..x.faces[n].len() {
                    commute(&mut r, "face", n, Some(i), n, n - 1, x.face(n, i), y.face(n, i));
                }
                if n < big_n {
                    for i in 0..=n {
                        commute(&mut r, "degeneracy", n, Some(i), n, n + 1, x.degeneracy(n, i), y.degeneracy(n, i));
                    }
                }
                commute(&mut r, "cyclic", n, None, n, n, &x.cyclic[n], &y.cyclic[n]);
            }
        }
        ModulePair::Cocyclic(x, y) => {
            for n in 0..=big_n {
                if n < big_n {
                    for i in 0..=n + 1 {
                        commute(&mut r, "coface", n, Some(i), n, n + 1, x.coface(n, i), y.coface(n, i));
                    }
                }
                for i in 0..n {
                    commute(&mut r, "codegeneracy", n, Some(i), n, n - 1, x.codegeneracy(n, i), y.codegeneracy(n, i));
                }
                commute(&mut r, "cyclic", n, None, n, n, &x.cyclic[n], &y.cyclic[n]);
            }
        }
    }
    Ok(r)
}
