//! Hochschild and cyclic (co)homology dimensions.
//!
//! Cohomology of a cocyclic module is computed as the homology of its
//! transpose, which has the same ranks.

use serde::Serialize;

use crate::cyclic::{ParaCocyclicModule, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Quotient};
use crate::scalar::FieldTag;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Homology,
    Cohomology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Complex,
    Bicomplex,
    ConnesQuotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDim {
    pub degree: usize,
    pub dim: usize,
    /// False when the differential leaving the next degree lies beyond the
    /// truncation; the value is then only an upper bound.
    pub guaranteed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub module: String,
    pub kind: Kind,
    pub direction: Direction,
    pub method: Method,
    pub field: String,
    pub truncation: usize,
    pub dims: Vec<DegreeDim>,
}

impl HomologyReport {
    pub fn values(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d.dim).collect()
    }

    pub fn guaranteed_values(&self) -> Vec<usize> {
        self.dims.iter().filter(|d| d.guaranteed).map(|d| d.dim).collect()
    }

    /// Plain-text table, one degree per line.
    pub fn table(&self) -> String {
        let mut out = format!("{:?} {:?} of {} over {}\n", self.kind, self.direction, self.module, self.field);
        out.push_str("degree  dim  exact\n");
        for d in &self.dims {
            out.push_str(&format!("{:>6}  {:>3}  {}\n", d.degree, d.dim, if d.guaranteed { "yes" } else { "no" }));
        }
        out
    }
}

fn alternating(field: FieldTag, ops: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(field, ops[0].rows(), ops[0].cols());
    for (i, op) in ops.iter().enumerate() {
        out = if i % 2 == 0 { &out + op } else { &out - op };
    }
    out
}

/// `b = Σ_{i=0}^{n} (−1)^i δ_i : X_n → X_{n−1}`, for `n ≥ 1`.
pub fn hochschild_boundary(x: &ParaCyclicModule, n: usize) -> Matrix {
    alternating(x.field, &x.faces[n])
}

/// `b′ = Σ_{i=0}^{n−1} (−1)^i δ_i`.
pub fn primed_boundary(x: &ParaCyclicModule, n: usize) -> Matrix {
    alternating(x.field, &x.faces[n][..n])
}

/// `b = Σ_{i=0}^{n+1} (−1)^i d_i : Y_n → Y_{n+1}`.
pub fn hochschild_coboundary(y: &ParaCocyclicModule, n: usize) -> Matrix {
    alternating(y.field, &y.cofaces[n])
}

/// `λ_n = (−1)^n τ_n`.
fn signed_cyclic(x: &ParaCyclicModule, n: usize) -> Matrix {
    if n.is_multiple_of(2) {
        x.cyclic[n].clone()
    } else {
        -&x.cyclic[n]
    }
}

fn norm(x: &ParaCyclicModule, n: usize) -> Matrix {
    let lambda = signed_cyclic(x, n);
    let mut power = Matrix::identity(x.field, x.dims[n]);
    let mut out = Matrix::zeros(x.field, x.dims[n], x.dims[n]);
    for _ in 0..=n {
        out = &out + &power;
        power = &lambda * &power;
    }
    out
}

fn check_up_to(x: &ParaCyclicModule, up_to: usize) -> Result<()> {
    if up_to > x.truncation() {
        return Err(Error::Input(format!(
            "degree {up_to} requested but {} is truncated at {}",
            x.name,
            x.truncation()
        )));
    }
    Ok(())
}

fn check_complex(x: &ParaCyclicModule) -> Result<()> {
    for n in 2..=x.truncation() {
        if !(&hochschild_boundary(x, n - 1) * &hochschild_boundary(x, n)).is_zero() {
            return Err(Error::NotAComplex(format!("b∘b ≠ 0 from degree {n} of {}", x.name)));
        }
        if !(&primed_boundary(x, n - 1) * &primed_boundary(x, n)).is_zero() {
            return Err(Error::NotAComplex(format!("b′∘b′ ≠ 0 from degree {n} of {}", x.name)));
        }
    }
    Ok(())
}

fn require_cyclic(x: &ParaCyclicModule, up_to: usize) -> Result<()> {
    for n in 0..=(up_to + 1).min(x.truncation()) {
        if !x.cyclic[n].pow(n + 1).is_identity() {
            return Err(Error::NotCyclic(format!("τ^{} ≠ id in degree {n} of {}", n + 1, x.name)));
        }
    }
    Ok(())
}

/// `dim H_n = dim C_n − rank d_n − rank d_{n+1}` where `ranks[n]` is the rank
/// of the differential leaving degree `n` (`None` past the truncation).
fn dims_from_ranks(sizes: &[usize], ranks: &[Option<usize>], up_to: usize) -> Vec<DegreeDim> {
    (0..=up_to)
        .map(|n| {
            let out = if n == 0 { 0 } else { ranks[n].expect("differential within truncation") };
            let incoming = ranks.get(n + 1).copied().flatten();
            DegreeDim {
                degree: n,
                dim: sizes[n] - out - incoming.unwrap_or(0),
                guaranteed: incoming.is_some(),
            }
        })
        .collect()
}

fn report(x: &ParaCyclicModule, kind: Kind, method: Method, dims: Vec<DegreeDim>) -> HomologyReport {
    HomologyReport {
        module: x.name.clone(),
        kind,
        direction: Direction::Homology,
        method,
        field: x.field.to_string(),
        truncation: x.truncation(),
        dims,
    }
}

/// Hochschild homology `HH_0..HH_{up_to}` of the `b`-complex.
pub fn hochschild_dims(x: &ParaCyclicModule, up_to: usize) -> Result<HomologyReport> {
    x.check_shapes()?;
    check_up_to(x, up_to)?;
    check_complex(x)?;
    let big_n = x.truncation();
    let ranks: Vec<Option<usize>> = (0..=up_to + 1)
        .map(|n| (n >= 1 && n <= big_n).then(|| hochschild_boundary(x, n).rank()))
        .collect();
    Ok(report(x, Kind::Hochschild, Method::Complex, dims_from_ranks(&x.dims, &ranks, up_to)))
}

/// Total differential of the cyclic bicomplex `Tot_n → Tot_{n−1}`, where
/// `Tot_n = ⊕_{p+q=n} X_q` ordered by column `p`. Even columns carry `b`,
/// odd columns `−b′`; the horizontal maps are `1−λ` out of odd columns and
/// `N` out of even ones.
fn total_differential(x: &ParaCyclicModule, n: usize) -> Matrix {
    let f = x.field;
    let offsets = |total: usize| -> Vec<usize> {
        let mut off = vec![0];
        for p in 0..=total {
            off.push(off[p] + x.dims[total - p]);
        }
        off
    };
    let (src, dst) = (offsets(n), offsets(n - 1));
    let mut out = Matrix::zeros(f, dst[n], src[n + 1]);
    for p in 0..=n {
        let q = n - p;
        if q >= 1 {
            let v = if p % 2 == 0 { hochschild_boundary(x, q) } else { -&primed_boundary(x, q) };
            out.paste(dst[p], src[p], &v);
        }
        if p >= 1 {
            let h = if p % 2 == 1 {
                &Matrix::identity(f, x.dims[q]) - &signed_cyclic(x, q)
            } else {
                norm(x, q)
            };
            out.paste(dst[p - 1], src[p], &h);
        }
    }
    out
}

fn check_bicomplex(x: &ParaCyclicModule) -> Result<()> {
    let f = x.field;
    for n in 1..=x.truncation() {
        let one_minus = |k: usize| &Matrix::identity(f, x.dims[k]) - &signed_cyclic(x, k);
        let b = hochschild_boundary(x, n);
        let bp = primed_boundary(x, n);
        if &b * &one_minus(n) != &one_minus(n - 1) * &bp {
            return Err(Error::NotAComplex(format!("b(1−λ) ≠ (1−λ)b′ in degree {n} of {}", x.name)));
        }
        if &bp * &norm(x, n) != &norm(x, n - 1) * &b {
            return Err(Error::NotAComplex(format!("b′N ≠ Nb in degree {n} of {}", x.name)));
        }
    }
    Ok(())
}

/// Cyclic homology `HC_0..HC_{up_to}` from the cyclic bicomplex. Degrees
/// below the truncation are exact; the truncation degree itself is an upper
/// bound.
pub fn cyclic_dims(x: &ParaCyclicModule, up_to: usize) -> Result<HomologyReport> {
    x.check_shapes()?;
    check_up_to(x, up_to)?;
    require_cyclic(x, up_to)?;
    check_complex(x)?;
    check_bicomplex(x)?;
    let big_n = x.truncation();
    let sizes: Vec<usize> = (0..=up_to).map(|n| x.dims[..=n].iter().sum()).collect();
    let ranks: Vec<Option<usize>> = (0..=up_to + 1)
        .map(|n| (n >= 1 && n <= big_n).then(|| total_differential(x, n).rank()))
        .collect();
    Ok(report(x, Kind::Cyclic, Method::Bicomplex, dims_from_ranks(&sizes, &ranks, up_to)))
}

/// Cyclic homology as the homology of Connes' complex `X_n / (1−λ)`, valid
/// in characteristic zero or above `up_to + 1`.
pub fn connes_dims(x: &ParaCyclicModule, up_to: usize) -> Result<HomologyReport> {
    x.check_shapes()?;
    check_up_to(x, up_to)?;
    let p = x.field.characteristic();
    if p != 0 && p <= up_to as u64 + 1 {
        return Err(Error::Unsupported(format!(
            "the (1−λ) quotient needs characteristic 0 or above {}, field is {}",
            up_to + 1,
            x.field
        )));
    }
    require_cyclic(x, up_to)?;
    check_complex(x)?;
    let big_n = x.truncation();
    let top = (up_to + 1).min(big_n);
    let relations: Vec<Matrix> = (0..=top)
        .map(|n| &Matrix::identity(x.field, x.dims[n]) - &signed_cyclic(x, n))
        .collect();
    let quotients: Vec<Quotient> = relations.iter().map(Matrix::quotient_by_span).collect();
    let sizes: Vec<usize> = quotients.iter().map(Quotient::dim).collect();
    let mut ranks = vec![None];
    for n in 1..=up_to + 1 {
        if n > big_n {
            ranks.push(None);
            continue;
        }
        let b = Matrix::induce_on_quotients(&hochschild_boundary(x, n), &relations[n], &quotients[n], &quotients[n - 1])?;
        ranks.push(Some(b.rank()));
    }
    Ok(report(x, Kind::Cyclic, Method::ConnesQuotient, dims_from_ranks(&sizes, &ranks, up_to)))
}

fn as_cohomology(mut r: HomologyReport, y: &ParaCocyclicModule) -> HomologyReport {
    r.module = y.name.clone();
    r.direction = Direction::Cohomology;
    r
}

pub fn hochschild_cohomology_dims(y: &ParaCocyclicModule, up_to: usize) -> Result<HomologyReport> {
    y.check_shapes()?;
    Ok(as_cohomology(hochschild_dims(&y.linear_dual(), up_to)?, y))
}

pub fn cyclic_cohomology_dims(y: &ParaCocyclicModule, up_to: usize) -> Result<HomologyReport> {
    y.check_shapes()?;
    Ok(as_cohomology(cyclic_dims(&y.linear_dual(), up_to)?, y))
}

pub fn connes_cohomology_dims(y: &ParaCocyclicModule, up_to: usize) -> Result<HomologyReport> {
    y.check_shapes()?;
    Ok(as_cohomology(connes_dims(&y.linear_dual(), up_to)?, y))
}

/// Whether `b′` is exact in degrees `1..=up_to` (`dim ker = dim im`).
pub fn primed_exactness(x: &ParaCyclicModule, up_to: usize) -> Vec<(usize, bool)> {
    let big_n = x.truncation();
    (1..=up_to.min(big_n.saturating_sub(1)))
        .map(|n| {
            let kernel = x.dims[n] - primed_boundary(x, n).rank();
            (n, kernel == primed_boundary(x, n + 1).rank())
        })
        .collect()
}
