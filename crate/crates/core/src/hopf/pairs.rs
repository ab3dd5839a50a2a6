use crate::error::{Error, Result};
use crate::matrix::Matrix;

use super::HopfAlgebra;

/// An algebra map `δ: H → k`, stored as a `1 × d` functional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    functional: Matrix,
}

impl Character {
    pub fn new(h: &HopfAlgebra, functional: Matrix) -> Result<Character> {
        if functional.shape() != (1, h.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "character is {}x{}, expected 1x{}",
                functional.rows(),
                functional.cols(),
                h.dim()
            )));
        }
        if &functional * &h.mult != functional.kron(&functional) {
            return Err(Error::Input("character is not multiplicative".into()));
        }
        if !(&functional * &h.unit).is_identity() {
            return Err(Error::Input("character does not send 1 to 1".into()));
        }
        Ok(Character { functional })
    }

    /// The counit, always a character.
    pub fn counit(h: &HopfAlgebra) -> Character {
        Character { functional: h.counit.clone() }
    }

    pub fn functional(&self) -> &Matrix {
        &self.functional
    }
}

/// A grouplike element `σ` (`Δσ = σ⊗σ`, `ε(σ) = 1`), stored as a `d × 1` vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouplike {
    vector: Matrix,
}

impl Grouplike {
    pub fn new(h: &HopfAlgebra, vector: Matrix) -> Result<Grouplike> {
        if vector.shape() != (h.dim(), 1) {
            return Err(Error::ShapeMismatch(format!(
                "grouplike is {}x{}, expected {}x1",
                vector.rows(),
                vector.cols(),
                h.dim()
            )));
        }
        if &h.comult * &vector != vector.kron(&vector) {
            return Err(Error::Input("element is not grouplike: Δσ ≠ σ⊗σ".into()));
        }
        if !(&h.counit * &vector).is_identity() {
            return Err(Error::Input("element is not grouplike: ε(σ) ≠ 1".into()));
        }
        Ok(Grouplike { vector })
    }

    pub fn unit(h: &HopfAlgebra) -> Grouplike {
        Grouplike { vector: h.unit.clone() }
    }

    pub fn vector(&self) -> &Matrix {
        &self.vector
    }

    /// `σ⁻¹ = S(σ)`.
    pub fn inverse(&self, h: &HopfAlgebra) -> Matrix {
        &h.antipode * &self.vector
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularPair {
    pub delta: Character,
    pub sigma: Grouplike,
    pub in_involution: bool,
}

/// `S̃(h) = δ(h⁽¹⁾) S(h⁽²⁾)`.
pub fn twisted_antipode(h: &HopfAlgebra, delta: &Character) -> Matrix {
    &delta.functional.kron(&h.antipode) * &h.comult
}

/// Checks `δ(σ) = 1` and records whether `(σ⁻¹S̃)² = id`.
pub fn verify_modular_pair(h: &HopfAlgebra, delta: &Character, sigma: &Grouplike) -> Result<ModularPair> {
    if !(&delta.functional * &sigma.vector).is_identity() {
        return Err(Error::NotModularPair(format!(
            "δ(σ) = {}",
            (&delta.functional * &sigma.vector).get(0, 0)
        )));
    }
    let twisted = &h.left_mult_by(&sigma.inverse(h)) * &twisted_antipode(h, delta);
    Ok(ModularPair {
        delta: delta.clone(),
        sigma: sigma.clone(),
        in_involution: (&twisted * &twisted).is_identity(),
    })
}

/// Named characters and grouplikes to search over.
#[derive(Clone, Debug)]
pub struct Candidates {
    pub characters: Vec<(String, Character)>,
    pub grouplikes: Vec<(String, Grouplike)>,
}

impl Candidates {
    /// Candidates for the dual Hopf algebra: grouplikes of `H` are the
    /// characters of `H*` and characters of `H` are grouplikes of `H*`.
    pub fn for_dual(&self, dual: &HopfAlgebra) -> Result<Candidates> {
        let characters = self
            .grouplikes
            .iter()
            .map(|(n, g)| Ok((format!("{n}*"), Character::new(dual, g.vector.transpose())?)))
            .collect::<Result<_>>()?;
        let grouplikes = self
            .characters
            .iter()
            .map(|(n, c)| Ok((format!("{n}*"), Grouplike::new(dual, c.functional.transpose())?)))
            .collect::<Result<_>>()?;
        Ok(Candidates { characters, grouplikes })
    }

    pub fn character(&self, name: &str) -> Option<&Character> {
        self.characters.iter().find(|(n, _)| n == name).map(|(_, c)| c)
    }

    pub fn grouplike(&self, name: &str) -> Option<&Grouplike> {
        self.grouplikes.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }
}

/// A pair found by [`search_involution_pairs`], with its candidate names.
#[derive(Clone, Debug)]
pub struct NamedPair {
    pub delta: String,
    pub sigma: String,
    pub pair: ModularPair,
}

/// Every modular pair in involution among the candidates, characters
/// outermost, in candidate order.
pub fn search_involution_pairs(h: &HopfAlgebra, candidates: &Candidates) -> Vec<NamedPair> {
    let mut found = Vec::new();
    for (dn, delta) in &candidates.characters {
        for (sn, sigma) in &candidates.grouplikes {
            if let Ok(pair) = verify_modular_pair(h, delta, sigma) {
                if pair.in_involution {
                    found.push(NamedPair {
                        delta: dn.clone(),
                        sigma: sn.clone(),
                        pair,
                    });
                }
            }
        }
    }
    found
}
