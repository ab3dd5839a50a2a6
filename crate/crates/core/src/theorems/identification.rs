use serde::Serialize;

use crate::constructions::{
    connes_moscovici, invariant_cyclic, kr_cyclic, coinvariant_cocyclic, require_sayd, CoinvariantModule,
    InvariantModule,
};
use crate::cyclic::{verify_morphism, GradedMap, ModulePair, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::homology::cyclic_dims;
use crate::hopf::{
    sayd_from_modular_pair, search_opposite_isomorphism, verify_opposite_isomorphism, HopfAlgebra, ModularPair,
    SaydModule, SaydVariant, TensorQuotient,
};
use crate::matrix::Matrix;
use crate::report::Report;

use super::maps::{
    absorb_first, gamma_reading, legwise, phi_bar, phi_prime_ambient, psi_lift, psi_prime_ambient, theta,
    theta_bar_closed_form, theta_bar_printed,
};

fn inverse_pair(a: &Matrix, b: &Matrix) -> bool {
    a.is_square() && b.is_square() && (a * b).is_identity() && (b * a).is_identity()
}

/// `(φ̄, ψ)` between `H^{⊗(n+1)} ⊗_H M` (quotient coordinates) and `H^{⊗n} ⊗ M`.
pub fn phi_maps(h: &HopfAlgebra, module: &SaydModule, n: usize, q: &TensorQuotient) -> Result<(Matrix, Matrix)> {
    let phi = phi_bar(h, module, n, &q.quotient, &q.relations)?;
    let psi = &q.quotient.projection * &psi_lift(h, module, n);
    if !inverse_pair(&phi, &psi) {
        return Err(Error::IdentificationFailure(format!("φ̄ and ψ in degree {n}")));
    }
    Ok((phi, psi))
}

/// `(φ′, ψ′)` between `M □_H H^{⊗(n+1)}` (coordinates along `inclusion`) and `M ⊗ H^{⊗n}`.
pub fn phi_prime_maps(h: &HopfAlgebra, module: &SaydModule, n: usize, inclusion: &Matrix) -> Result<(Matrix, Matrix)> {
    let phi = &phi_prime_ambient(h, module, n) * inclusion;
    let ambient = psi_prime_ambient(h, module, n);
    let psi = &inclusion.left_inverse()? * &ambient;
    if (inclusion * &psi) != ambient {
        return Err(Error::IdentificationFailure(format!("ψ′ leaves the cotensor product in degree {n}")));
    }
    if !inverse_pair(&phi, &psi) {
        return Err(Error::IdentificationFailure(format!("φ′ and ψ′ in degree {n}")));
    }
    Ok((phi, psi))
}

/// `θ` in quotient and cotensor coordinates.
fn theta_on_quotient(h: &HopfAlgebra, module: &SaydModule, n: usize, q: &TensorQuotient, inclusion: &Matrix) -> Result<Matrix> {
    let image = &theta(h, module, n) * &q.quotient.section;
    let coords = &inclusion.left_inverse()? * &image;
    if (inclusion * &coords) != image {
        return Err(Error::NotPreserved(format!("θ leaves the cotensor product in degree {n}")));
    }
    Ok(coords)
}

/// `θ̄ = φ′ ∘ θ ∘ ψ : H^{⊗n}⊗M → M⊗H^{⊗n}`.
pub fn theta_bar(h: &HopfAlgebra, module: &SaydModule, n: usize, q: &TensorQuotient, inclusion: &Matrix) -> Result<Matrix> {
    let (_, psi) = phi_maps(h, module, n, q)?;
    let (phi_prime, _) = phi_prime_maps(h, module, n, inclusion)?;
    let t = &(&phi_prime * &theta_on_quotient(h, module, n, q, inclusion)?) * &psi;
    if !t.is_square() || t.rank() != t.rows() {
        return Err(Error::NotInvertible(format!("θ̄ in degree {n} has rank {}", t.rank())));
    }
    Ok(t)
}

/// Both sides of `θ̄` as cyclic modules on `H^{⊗n}⊗M` and `M⊗H^{⊗n}`.
pub struct TheoremSides {
    pub invariant: InvariantModule,
    pub coinvariant: CoinvariantModule,
    /// `K^H_*` carried to `H^{⊗n}⊗M` along `φ̄`.
    pub source: ParaCyclicModule,
    /// `C^H_*` carried to `M⊗H^{⊗n}` along `φ′`.
    pub target: ParaCyclicModule,
    pub theta_bar: GradedMap,
}

pub fn theorem_sides(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<TheoremSides> {
    require_sayd(h, module)?;
    let invariant = invariant_cyclic(h, module, truncation)?;
    let coinvariant = coinvariant_cocyclic(h, module, truncation)?;
    let mut phis = Vec::new();
    let mut phi_primes = Vec::new();
    let mut bars = Vec::new();
    for n in 0..=truncation {
        let q = &coinvariant.quotients[n];
        let inc = &invariant.inclusions[n];
        phis.push(phi_maps(h, module, n, q)?.0);
        phi_primes.push(phi_prime_maps(h, module, n, inc)?.0);
        bars.push(theta_bar(h, module, n, q, inc)?);
    }
    let source = coinvariant.module.hat_dual()?.transport("K^H", &GradedMap::new(phis))?;
    let target = invariant.module.transport("C^H", &GradedMap::new(phi_primes))?;
    Ok(TheoremSides { invariant, coinvariant, source, target, theta_bar: GradedMap::new(bars) })
}

/// The whole isomorphism statement: identifications, invertibility of `θ̄`,
/// agreement with its closed form, compatibility with every transported
/// operator, and equal cyclic homology on both sides.
pub fn verify_theta_bar(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<Report> {
    let sides = theorem_sides(h, module, truncation)?;
    let mut r = Report::new();
    for (n, t) in sides.theta_bar.maps.iter().enumerate() {
        r.record("θ̄ invertible", Some(n), &[], t.rank() == t.rows());
        r.record("θ̄ closed form", Some(n), &[], *t == theta_bar_closed_form(h, module, n));
    }
    r.absorb("θ̄ intertwines", verify_morphism(&sides.theta_bar, ModulePair::Cyclic(&sides.source, &sides.target))?);
    let up_to = truncation.saturating_sub(1);
    let lhs = cyclic_dims(&sides.source, up_to)?;
    let rhs = cyclic_dims(&sides.target, up_to)?;
    for (a, b) in lhs.dims.iter().zip(&rhs.dims) {
        r.record("cyclic homology agrees", Some(a.degree), &[], a.dim == b.dim);
    }
    Ok(r)
}

/// How the printed `θ̄` compares with the composite: it has one more factor
/// of `H`, so only shapes and, when `M` is one-dimensional, the image after
/// dropping the extra leg are compared.
pub fn printed_theta_bar_report(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<Report> {
    let sides = theorem_sides(h, module, truncation)?;
    let mut r = Report::new();
    for (n, t) in sides.theta_bar.maps.iter().enumerate() {
        let printed = theta_bar_printed(h, module, n);
        r.record("printed θ̄ has the composite's shape", Some(n), &[], printed.shape() == t.shape());
        let dropped = &phi_prime_ambient(h, module, n) * &printed;
        r.record("printed θ̄ after dropping a leg", Some(n), &[], &dropped == t);
    }
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub degree: usize,
    pub readings: Vec<(String, bool)>,
    /// Rows of the true inverse of `θ̄`, as scalar strings.
    pub inverse: Vec<Vec<String>>,
}

/// Tests the readings of the printed inverse against `θ̄⁻¹`.
pub fn gamma_candidate(h: &HopfAlgebra, module: &SaydModule, n: usize, q: &TensorQuotient, inclusion: &Matrix) -> Result<GammaReport> {
    let inv = theta_bar(h, module, n, q, inclusion)?.inverse()?;
    let readings = [("with S(m⁽¹⁾)", true), ("without S(m⁽¹⁾)", false)]
        .into_iter()
        .map(|(name, with)| (name.to_string(), gamma_reading(h, module, n, with) == inv))
        .collect();
    let inverse = (0..inv.rows()).map(|i| inv.row(i).iter().map(ToString::to_string).collect()).collect();
    Ok(GammaReport { degree: n, readings, inverse })
}

/// An explicit isomorphism between a module built from `M = k_{(δ,σ)}` and
/// the corresponding example module.
pub struct Identification {
    pub map: GradedMap,
    pub report: Report,
}

impl Identification {
    pub fn passed(&self) -> bool {
        self.report.all_passed()
    }
}

fn pair_module(h: &HopfAlgebra, pair: &ModularPair) -> Result<SaydModule> {
    sayd_from_modular_pair(h, pair, SaydVariant::LR)
}

/// `C^H_*(H, k_{(δ,σ)}) ≅ K_*(H)` through `φ′` on the cotensor product.
pub fn invariant_to_kr(h: &HopfAlgebra, pair: &ModularPair, truncation: usize) -> Result<Identification> {
    let m = pair_module(h, pair)?;
    let inv = invariant_cyclic(h, &m, truncation)?;
    let kr = kr_cyclic(h, pair, truncation)?;
    let map = GradedMap::new((0..=truncation).map(|n| &phi_prime_ambient(h, &m, n) * &inv.inclusions[n]).collect());
    let mut report = verify_morphism(&map, ModulePair::Cyclic(&inv.module, &kr))?;
    report.push("invertible", map.is_invertible());
    Ok(Identification { map, report })
}

/// `C^*_H(H, k_{(δ,σ)}) ≅ C^*(H)` of Connes and Moscovici. The quotient is
/// identified with `H^{⊗n}` by absorbing the first factor, which turns the
/// structure into the one of `H^op` with the pair `(δ, σ⁻¹)`; a Hopf
/// isomorphism `β: H^op → H` found by [`search_opposite_isomorphism`] then
/// finishes the job.
pub fn coinvariant_to_cm(h: &HopfAlgebra, pair: &ModularPair, truncation: usize) -> Result<Identification> {
    let beta = search_opposite_isomorphism(h, pair)
        .ok_or_else(|| Error::Unsupported(format!("no sign-changed power of S maps {}^op to {}", h.name(), h.name())))?;
    coinvariant_to_cm_via(h, pair, &beta, truncation)
}

pub fn coinvariant_to_cm_via(h: &HopfAlgebra, pair: &ModularPair, beta: &Matrix, truncation: usize) -> Result<Identification> {
    let m = pair_module(h, pair)?;
    let co = coinvariant_cocyclic(h, &m, truncation)?;
    let cm = connes_moscovici(h, pair, truncation)?;
    let mut report = Report::new();
    report.absorb("β", verify_opposite_isomorphism(h, beta, pair));
    let mut maps = Vec::new();
    for n in 0..=truncation {
        let q = &co.quotients[n];
        let a = absorb_first(h, &m, n);
        report.record("balanced", Some(n), &[], (&a * &q.relations).is_zero());
        maps.push(&(&legwise(beta, n, m.dim()) * &a) * &q.quotient.section);
    }
    let map = GradedMap::new(maps);
    report.absorb("morphism", verify_morphism(&map, ModulePair::Cocyclic(&co.module, &cm))?);
    report.push("invertible", map.is_invertible());
    Ok(Identification { map, report })
}

/// `φ̄` itself checked as a map `C^*_H(H, k_{(δ,σ)}) → C^*(H)`.
pub fn phi_bar_against_cm(h: &HopfAlgebra, pair: &ModularPair, truncation: usize) -> Result<Report> {
    let m = pair_module(h, pair)?;
    let co = coinvariant_cocyclic(h, &m, truncation)?;
    let cm = connes_moscovici(h, pair, truncation)?;
    let maps = (0..=truncation)
        .map(|n| phi_maps(h, &m, n, &co.quotients[n]).map(|p| p.0))
        .collect::<Result<Vec<_>>>()?;
    verify_morphism(&GradedMap::new(maps), ModulePair::Cocyclic(&co.module, &cm))
}
