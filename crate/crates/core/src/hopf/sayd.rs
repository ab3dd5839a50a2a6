use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::Report;
use crate::tensor::{linear_map, permutation_matrix};

use super::pairs::{Character, Grouplike, ModularPair};
use super::{gather, BasedSpace, Gather, HopfAlgebra};

/// Module side then comodule side: `LR` is a left module and right comodule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SaydVariant {
    LL,
    LR,
    RL,
    RR,
}

impl SaydVariant {
    pub const ALL: [SaydVariant; 4] = [SaydVariant::LL, SaydVariant::LR, SaydVariant::RL, SaydVariant::RR];

    pub fn left_module(self) -> bool {
        matches!(self, SaydVariant::LL | SaydVariant::LR)
    }

    pub fn left_comodule(self) -> bool {
        matches!(self, SaydVariant::LL | SaydVariant::RL)
    }
}

impl std::str::FromStr for SaydVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<SaydVariant> {
        match s {
            "LL" => Ok(SaydVariant::LL),
            "LR" => Ok(SaydVariant::LR),
            "RL" => Ok(SaydVariant::RL),
            "RR" => Ok(SaydVariant::RR),
            _ => Err(Error::Input(format!("unknown SAYD variant {s:?}"))),
        }
    }
}

/// A finite-dimensional module and comodule over `H`. A left action is
/// `H⊗M → M`, a right one `M⊗H → M`; a left coaction is `M → H⊗M`, a
/// right one `M → M⊗H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaydModule {
    pub space: BasedSpace,
    pub variant: SaydVariant,
    pub action: Matrix,
    pub coaction: Matrix,
}

impl SaydModule {
    pub fn new(h: &HopfAlgebra, space: BasedSpace, variant: SaydVariant, action: Matrix, coaction: Matrix) -> Result<SaydModule> {
        let (d, m) = (h.dim(), space.dim());
        if action.shape() != (m, d * m) {
            return Err(Error::ShapeMismatch(format!(
                "action is {}x{}, expected {}x{}",
                action.rows(),
                action.cols(),
                m,
                d * m
            )));
        }
        if coaction.shape() != (d * m, m) {
            return Err(Error::ShapeMismatch(format!(
                "coaction is {}x{}, expected {}x{}",
                coaction.rows(),
                coaction.cols(),
                d * m,
                m
            )));
        }
        if action.field() != h.field() || coaction.field() != h.field() || space.field != h.field() {
            return Err(Error::Input(format!("module is not over {}", h.field())));
        }
        Ok(SaydModule { space, variant, action, coaction })
    }

    /// `k_{(δ,σ)}`: the ground field acted on through `δ`, coacted on by `σ`.
    /// Nothing is verified.
    pub fn one_dimensional(h: &HopfAlgebra, delta: &Character, sigma: &Grouplike, variant: SaydVariant) -> SaydModule {
        SaydModule {
            space: BasedSpace::new(h.field(), vec!["m".into()]).unwrap(),
            variant,
            action: delta.functional().clone(),
            coaction: sigma.vector().clone(),
        }
    }

    /// `k` with action through `ε` and coaction through `1`.
    pub fn trivial(h: &HopfAlgebra, variant: SaydVariant) -> SaydModule {
        SaydModule::one_dimensional(h, &Character::counit(h), &Grouplike::unit(h), variant)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The action as a map `H⊗M → M` whatever the side.
    pub fn action_h_first(&self, h: &HopfAlgebra) -> Matrix {
        if self.variant.left_module() {
            self.action.clone()
        } else {
            &self.action * &permutation_matrix(h.field(), &[h.dim(), self.dim()], &[1, 0])
        }
    }

    /// The coaction as a map `M → M⊗H` whatever the side.
    pub fn coaction_m_first(&self, h: &HopfAlgebra) -> Matrix {
        if self.variant.left_comodule() {
            &permutation_matrix(h.field(), &[h.dim(), self.dim()], &[1, 0]) * &self.coaction
        } else {
            self.coaction.clone()
        }
    }
}

/// Module, comodule, anti-Yetter-Drinfeld and stability identities of the
/// module's variant, each as an exact matrix identity.
pub fn verify_sayd(h: &HopfAlgebra, module: &SaydModule) -> Result<Report> {
    let module = SaydModule::new(
        h,
        module.space.clone(),
        module.variant,
        module.action.clone(),
        module.coaction.clone(),
    )?;
    let f = h.field();
    let (d, m) = (h.dim(), module.dim());
    let id_h = Matrix::identity(f, d);
    let id_m = Matrix::identity(f, m);
    let (a, c) = (&module.action, &module.coaction);
    let v = module.variant;
    let mut r = Report::new();

    if v.left_module() {
        r.push("action is associative", a * &h.mult.kron(&id_m) == a * &id_h.kron(a));
        r.push("action is unital", (a * &h.unit.kron(&id_m)).is_identity());
    } else {
        r.push("action is associative", a * &id_m.kron(&h.mult) == a * &a.kron(&id_h));
        r.push("action is unital", (a * &id_m.kron(&h.unit)).is_identity());
    }
    if v.left_comodule() {
        r.push("coaction is coassociative", &h.comult.kron(&id_m) * c == &id_h.kron(c) * c);
        r.push("coaction is counital", (&h.counit.kron(&id_m) * c).is_identity());
    } else {
        r.push("coaction is coassociative", &c.kron(&id_h) * c == &id_m.kron(&h.comult) * c);
        r.push("coaction is counital", (&id_m.kron(&h.counit) * c).is_identity());
    }

    let act = module.action_h_first(h);
    let action = Some((&act, m));
    let rhs = match v {
        SaydVariant::LL => linear_map(f, &[d, m], &[d, m], |t| {
            let t = h.split_n(&t, 0, 3);
            let t = t.split_leg(3, c, [d, m]);
            let t = h.antipode_inv_on(&t, 2);
            gather(h, action, &t, &[Gather::Product(vec![0, 3, 2]), Gather::Act { h: 1, m: 4 }])
        }),
        SaydVariant::LR => linear_map(f, &[d, m], &[m, d], |t| {
            let t = h.split_n(&t, 0, 3);
            let t = t.split_leg(3, c, [m, d]);
            let t = h.antipode_on(&t, 0);
            gather(h, action, &t, &[Gather::Act { h: 1, m: 3 }, Gather::Product(vec![2, 4, 0])])
        }),
        SaydVariant::RL => linear_map(f, &[m, d], &[d, m], |t| {
            let t = h.split_n(&t, 1, 3);
            let t = t.split_leg(0, c, [d, m]);
            let t = h.antipode_on(&t, 4);
            gather(h, action, &t, &[Gather::Product(vec![4, 0, 2]), Gather::Act { h: 3, m: 1 }])
        }),
        SaydVariant::RR => linear_map(f, &[m, d], &[m, d], |t| {
            let t = h.split_n(&t, 1, 3);
            let t = t.split_leg(0, c, [m, d]);
            let t = h.antipode_inv_on(&t, 2);
            gather(h, action, &t, &[Gather::Act { h: 3, m: 0 }, Gather::Product(vec![2, 1, 4])])
        }),
    };
    r.push("anti-Yetter-Drinfeld", c * a == rhs);

    let flip_coaction = if v.left_module() == v.left_comodule() {
        c.clone()
    } else if v.left_module() {
        &permutation_matrix(f, &[m, d], &[1, 0]) * c
    } else {
        &permutation_matrix(f, &[d, m], &[1, 0]) * c
    };
    r.push("stability", (a * &flip_coaction).is_identity());
    Ok(r)
}

/// The one-dimensional SAYD module of a modular pair in involution.
pub fn sayd_from_modular_pair(h: &HopfAlgebra, pair: &ModularPair, variant: SaydVariant) -> Result<SaydModule> {
    if !pair.in_involution {
        return Err(Error::NotInInvolution);
    }
    let module = SaydModule::one_dimensional(h, &pair.delta, &pair.sigma, variant);
    let report = verify_sayd(h, &module)?;
    if !report.all_passed() {
        return Err(Error::SaydViolation(report.failure_names()));
    }
    Ok(module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{
        cyclic_group_table, ground_field, group_algebra, sweedler_h4, sweedler_h4_candidates, verify_modular_pair,
    };
    use crate::scalar::FieldTag;

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn trivial_module_is_sayd_in_every_variant() {
        let s3 = group_algebra(Q, "s3", &crate::hopf::symmetric_group_s3_table()).unwrap();
        for h in [ground_field(Q), group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap(), s3] {
            for v in SaydVariant::ALL {
                let r = verify_sayd(&h, &SaydModule::trivial(&h, v)).unwrap();
                assert!(r.all_passed(), "{} {v:?}: {:?}", h.name(), r.failure_names());
            }
        }
    }

    #[test]
    fn trivial_module_over_h4_fails_since_eps_one_is_not_in_involution() {
        let h = sweedler_h4(Q);
        for v in SaydVariant::ALL {
            let r = verify_sayd(&h, &SaydModule::trivial(&h, v)).unwrap();
            assert!(r.failed("anti-Yetter-Drinfeld"), "{v:?}");
            assert!(!r.failed("stability"));
        }
    }

    #[test]
    fn lr_sayd_iff_modular_pair_in_involution_on_h4() {
        let h = sweedler_h4(Q);
        let c = sweedler_h4_candidates(&h);
        for (_, delta) in &c.characters {
            for (_, sigma) in &c.grouplikes {
                let involution = verify_modular_pair(&h, delta, sigma).map(|p| p.in_involution).unwrap_or(false);
                let m = SaydModule::one_dimensional(&h, delta, sigma, SaydVariant::LR);
                assert_eq!(verify_sayd(&h, &m).unwrap().all_passed(), involution);
            }
        }
    }

    #[test]
    fn non_involution_pair_is_refused() {
        let h = sweedler_h4(Q);
        let p = verify_modular_pair(&h, &Character::counit(&h), &Grouplike::unit(&h)).unwrap();
        assert_eq!(sayd_from_modular_pair(&h, &p, SaydVariant::LR), Err(Error::NotInInvolution));
        let m = SaydModule::one_dimensional(&h, &p.delta, &p.sigma, SaydVariant::LR);
        assert!(verify_sayd(&h, &m).unwrap().failed("anti-Yetter-Drinfeld"));
    }

    #[test]
    fn distinct_involution_pairs_give_distinct_coactions() {
        let h = sweedler_h4(Q);
        let c = sweedler_h4_candidates(&h);
        let modules: Vec<SaydModule> = crate::hopf::search_involution_pairs(&h, &c)
            .iter()
            .map(|p| sayd_from_modular_pair(&h, &p.pair, SaydVariant::LR).unwrap())
            .collect();
        assert_eq!(modules.len(), 2);
        assert_ne!(modules[0].coaction, modules[1].coaction);
    }

    #[test]
    fn regular_module_is_not_stable() {
        // H acting on itself by multiplication, coacting by Δ (left): the AYD
        // identity and stability both fail for k[C₂].
        let h = group_algebra(Q, "c2", &cyclic_group_table(2)).unwrap();
        let m = SaydModule::new(&h, h.space.clone(), SaydVariant::LL, h.mult.clone(), h.comult.clone()).unwrap();
        let r = verify_sayd(&h, &m).unwrap();
        assert!(!r.failed("action is associative"));
        assert!(!r.failed("coaction is coassociative"));
        assert!(r.failed("stability"));
    }

    #[test]
    fn shapes_are_checked() {
        let h = sweedler_h4(Q);
        let bad = SaydModule {
            space: BasedSpace::numbered(Q, "m", 1),
            variant: SaydVariant::LR,
            action: Matrix::zeros(Q, 1, 3),
            coaction: Matrix::zeros(Q, 4, 1),
        };
        assert!(matches!(verify_sayd(&h, &bad), Err(Error::ShapeMismatch(_))));
    }
}
