//! The named (co)cyclic modules, each assembled directly from structure
//! constants.

use crate::cyclic::{ParaCocyclicModule, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::{
    cotensor_subspace, diagonal_left_coaction, gather, h_tensor_quotient, twisted_antipode, verify_sayd,
    AlgebraData, CoalgebraData, Gather, HopfAlgebra, ModularPair, SaydModule, SaydVariant, TensorQuotient,
};
use crate::matrix::Matrix;
use crate::scalar::FieldTag;
use crate::tensor::{linear_map, Tensor};

fn pow_dims(d: usize, legs: usize) -> Vec<usize> {
    vec![d; legs]
}

fn with_module(d: usize, legs: usize, m: usize, module_first: bool) -> Vec<usize> {
    let mut v = vec![d; legs];
    if module_first {
        v.insert(0, m);
    } else {
        v.push(m);
    }
    v
}

fn op(field: FieldTag, src: &[usize], dst: &[usize], f: impl Fn(Tensor) -> Tensor) -> Matrix {
    linear_map(field, src, dst, f)
}

/// `A^♮`: `A^{⊗(n+1)}` with `δ_i` multiplying factors `i, i+1`, `δ_n`
/// multiplying `a_n a_0`, `σ_i` inserting `1` after factor `i`, `τ` rotating
/// the last factor to the front.
pub fn algebra_cyclic(a: &AlgebraData, truncation: usize) -> ParaCyclicModule {
    let (f, d) = (a.field, a.dim);
    let dims = |n: usize| pow_dims(d, n + 1);
    let faces = (0..=truncation)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    op(f, &dims(n), &dims(n - 1), |t| {
                        if i < n {
                            t.product(&[i, i + 1], &a.mult)
                        } else {
                            t.move_leg(n, 0).product(&[0, 1], &a.mult)
                        }
                    })
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..truncation)
        .map(|n| (0..=n).map(|i| op(f, &dims(n), &dims(n + 1), |t| t.insert(i + 1, &a.unit))).collect())
        .collect();
    let cyclic = (0..=truncation).map(|n| op(f, &dims(n), &dims(n), |t| t.move_leg(n, 0))).collect();
    ParaCyclicModule {
        name: "A^natural".into(),
        field: f,
        dims: (0..=truncation).map(|n| d.pow(n as u32 + 1)).collect(),
        faces,
        degeneracies,
        cyclic,
    }
}

/// `C_♮`: `C^{⊗(n+1)}` with `d_i` comultiplying factor `i`,
/// `d_{n+1}(c) = c_0⁽²⁾ ⊗ c_1 ⊗ … ⊗ c_n ⊗ c_0⁽¹⁾`, `s_i` the counit on
/// factor `i+1`, `t` rotating the first factor to the end.
pub fn coalgebra_cocyclic(c: &CoalgebraData, truncation: usize) -> ParaCocyclicModule {
    let (f, d) = (c.field, c.dim);
    let dims = |n: usize| pow_dims(d, n + 1);
    let cofaces = (0..truncation)
        .map(|n| {
            (0..=n + 1)
                .map(|i| {
                    op(f, &dims(n), &dims(n + 1), |t| {
                        if i <= n {
                            t.split_leg(i, &c.comult, [d, d])
                        } else {
                            t.split_leg(0, &c.comult, [d, d]).move_leg(0, n + 1)
                        }
                    })
                })
                .collect()
        })
        .collect();
    let codegeneracies = (0..=truncation)
        .map(|n| (0..n).map(|i| op(f, &dims(n), &dims(n - 1), |t| t.eval_leg(i + 1, &c.counit))).collect())
        .collect();
    let cyclic = (0..=truncation).map(|n| op(f, &dims(n), &dims(n), |t| t.move_leg(0, n))).collect();
    ParaCocyclicModule {
        name: "C_natural".into(),
        field: f,
        dims: (0..=truncation).map(|n| d.pow(n as u32 + 1)).collect(),
        cofaces,
        codegeneracies,
        cyclic,
    }
}

fn require_involution(pair: &ModularPair) -> Result<()> {
    if pair.in_involution {
        Ok(())
    } else {
        Err(Error::NotInInvolution)
    }
}

/// The Connes–Moscovici cocyclic module `H^♮_{(δ,σ)}` on `H^{⊗n}`:
/// `d_0` inserts `1` in front, `d_i` comultiplies factor `i`, `d_{n+1}`
/// appends `σ`, `s_i` is the counit on factor `i+1`, and
/// `t_n = Δ^{n-1}S̃(h_1)·(h_2 ⊗ … ⊗ h_n ⊗ σ)`.
pub fn connes_moscovici(h: &HopfAlgebra, pair: &ModularPair, truncation: usize) -> Result<ParaCocyclicModule> {
    require_involution(pair)?;
    let (f, d) = (h.field(), h.dim());
    let sigma = pair.sigma.vector();
    let st = twisted_antipode(h, &pair.delta);
    let dims = |n: usize| pow_dims(d, n);
    let cofaces = (0..truncation)
        .map(|n| {
            (0..=n + 1)
                .map(|i| {
                    op(f, &dims(n), &dims(n + 1), |t| {
                        if i == 0 {
                            h.unit_at(&t, 0)
                        } else if i <= n {
                            h.split(&t, i - 1)
                        } else {
                            t.insert(n, sigma)
                        }
                    })
                })
                .collect()
        })
        .collect();
    let codegeneracies = (0..=truncation)
        .map(|n| (0..n).map(|i| op(f, &dims(n), &dims(n - 1), |t| h.counit_on(&t, i))).collect())
        .collect();
    let cyclic = (0..=truncation)
        .map(|n| {
            op(f, &dims(n), &dims(n), |t| {
                if n == 0 {
                    return t;
                }
                let t = t.map_leg(0, &st).insert(n, sigma);
                let t = h.split_n(&t, 0, n);
                let groups: Vec<Gather> = (0..n).map(|i| Gather::Product(vec![i, n + i])).collect();
                gather(h, None, &t, &groups)
            })
        })
        .collect();
    Ok(ParaCocyclicModule {
        name: "connes-moscovici".into(),
        field: f,
        dims: (0..=truncation).map(|n| d.pow(n as u32)).collect(),
        cofaces,
        codegeneracies,
        cyclic,
    })
}

/// The cyclic module `H̃^{(δ,σ)}_♮` on `H^{⊗n}`: `δ_0` is the counit on the
/// first factor, `δ_i` multiplies factors `i, i+1`, `δ_n` applies `δ` to the
/// last factor, `σ_i` inserts `1` at position `i`, and
/// `τ_n = δ(h_n⁽²⁾)σS(h_1⁽¹⁾⋯h_n⁽¹⁾) ⊗ h_1⁽²⁾ ⊗ … ⊗ h_{n-1}⁽²⁾`.
pub fn kr_cyclic(h: &HopfAlgebra, pair: &ModularPair, truncation: usize) -> Result<ParaCyclicModule> {
    require_involution(pair)?;
    let (f, d) = (h.field(), h.dim());
    let delta = pair.delta.functional();
    let sigma = pair.sigma.vector();
    let dims = |n: usize| pow_dims(d, n);
    let faces = (0..=truncation)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    op(f, &dims(n), &dims(n - 1), |t| {
                        if i == 0 {
                            h.counit_on(&t, 0)
                        } else if i < n {
                            h.multiply(&t, &[i - 1, i])
                        } else {
                            t.eval_leg(n - 1, delta)
                        }
                    })
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..truncation)
        .map(|n| (0..=n).map(|i| op(f, &dims(n), &dims(n + 1), |t| h.unit_at(&t, i))).collect())
        .collect();
    let cyclic = (0..=truncation)
        .map(|n| {
            op(f, &dims(n), &dims(n), |t| {
                if n == 0 {
                    return t;
                }
                let mut t = t;
                for i in (0..n).rev() {
                    t = h.split(&t, i);
                }
                let t = t.eval_leg(2 * n - 1, delta);
                let mut groups = vec![Gather::Product((0..n).map(|i| 2 * i).collect())];
                groups.extend((0..n - 1).map(|i| Gather::Leg(2 * i + 1)));
                let t = gather(h, None, &t, &groups);
                let t = h.antipode_on(&t, 0).insert(0, sigma);
                h.multiply(&t, &[0, 1])
            })
        })
        .collect();
    Ok(ParaCyclicModule {
        name: "khalkhali-rangipour".into(),
        field: f,
        dims: (0..=truncation).map(|n| d.pow(n as u32)).collect(),
        faces,
        degeneracies,
        cyclic,
    })
}

/// Refuses modules that are not verified left-module/right-comodule SAYD.
pub fn require_sayd(h: &HopfAlgebra, module: &SaydModule) -> Result<()> {
    if module.variant != SaydVariant::LR {
        return Err(Error::Unsupported(format!(
            "coefficients must be a left module and right comodule, got {:?}",
            module.variant
        )));
    }
    let report = verify_sayd(h, module)?;
    if report.all_passed() {
        Ok(())
    } else {
        Err(Error::SaydViolation(report.failure_names()))
    }
}

/// `C^alg_n(H,M) = M ⊗ H^{⊗(n+1)}`.
pub fn alg_with_coefficients(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<ParaCyclicModule> {
    require_sayd(h, module)?;
    let (f, d, m) = (h.field(), h.dim(), module.dim());
    let act = Some((&module.action, m));
    let dims = |n: usize| with_module(d, n + 1, m, true);
    let faces = (0..=truncation)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n)
                .map(|i| {
                    op(f, &dims(n), &dims(n - 1), |t| {
                        if i < n {
                            h.multiply(&t, &[1 + i, 2 + i])
                        } else {
                            let t = h.split(&t, n + 1);
                            let mut groups = vec![Gather::Act { h: n + 1, m: 0 }, Gather::Product(vec![n + 2, 1])];
                            groups.extend((2..=n).map(Gather::Leg));
                            gather(h, act, &t, &groups)
                        }
                    })
                })
                .collect()
        })
        .collect();
    let degeneracies = (0..truncation)
        .map(|n| (0..=n).map(|i| op(f, &dims(n), &dims(n + 1), |t| h.unit_at(&t, 2 + i))).collect())
        .collect();
    let cyclic = (0..=truncation)
        .map(|n| {
            op(f, &dims(n), &dims(n), |t| {
                let t = h.split(&t, n + 1);
                let mut groups = vec![Gather::Act { h: n + 1, m: 0 }, Gather::Leg(n + 2)];
                groups.extend((1..=n).map(Gather::Leg));
                gather(h, act, &t, &groups)
            })
        })
        .collect();
    Ok(ParaCyclicModule {
        name: "C^alg".into(),
        field: f,
        dims: (0..=truncation).map(|n| m * d.pow(n as u32 + 1)).collect(),
        faces,
        degeneracies,
        cyclic,
    })
}

/// `C^n_coalg(H,M) = H^{⊗(n+1)} ⊗ M`.
pub fn coalg_with_coefficients(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<ParaCocyclicModule> {
    require_sayd(h, module)?;
    let (f, d, m) = (h.field(), h.dim(), module.dim());
    let coact = &module.coaction;
    let dims = |n: usize| with_module(d, n + 1, m, false);
    let cofaces = (0..truncation)
        .map(|n| {
            (0..=n + 1)
                .map(|i| {
                    op(f, &dims(n), &dims(n + 1), |t| {
                        if i <= n {
                            return h.split(&t, i);
                        }
                        // h_0⁽²⁾ ⊗ h_1 ⊗ … ⊗ h_n ⊗ h_0⁽¹⁾S⁻¹(m⁽¹⁾) ⊗ m⁽⁰⁾
                        let t = h.split(&t, 0);
                        let t = t.split_leg(n + 2, coact, [m, d]);
                        let t = h.antipode_inv_on(&t, n + 3);
                        let mut groups: Vec<Gather> = (1..=n + 1).map(Gather::Leg).collect();
                        groups.push(Gather::Product(vec![0, n + 3]));
                        groups.push(Gather::Leg(n + 2));
                        gather(h, None, &t, &groups)
                    })
                })
                .collect()
        })
        .collect();
    let codegeneracies = (0..=truncation)
        .map(|n| (0..n).map(|i| op(f, &dims(n), &dims(n - 1), |t| h.counit_on(&t, i + 1))).collect())
        .collect();
    let cyclic = (0..=truncation)
        .map(|n| {
            op(f, &dims(n), &dims(n), |t| {
                let t = t.split_leg(n + 1, coact, [m, d]);
                let t = h.antipode_inv_on(&t, n + 2);
                let mut groups: Vec<Gather> = (1..=n).map(Gather::Leg).collect();
                groups.push(Gather::Product(vec![0, n + 2]));
                groups.push(Gather::Leg(n + 1));
                gather(h, None, &t, &groups)
            })
        })
        .collect();
    Ok(ParaCocyclicModule {
        name: "C_coalg".into(),
        field: f,
        dims: (0..=truncation).map(|n| m * d.pow(n as u32 + 1)).collect(),
        cofaces,
        codegeneracies,
        cyclic,
    })
}

/// `K_n(H,M) = H^{⊗(n+1)} ⊗ M` from its printed operators: `δ_i` the counit
/// on factor `i`, `σ_i` comultiplying factor `i`, and
/// `τ = h_n m⁽¹⁾ ⊗ h_0 ⊗ … ⊗ h_{n-1} ⊗ m⁽⁰⁾`.
pub fn k_dual_printed(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<ParaCyclicModule> {
    require_sayd(h, module)?;
    let (f, d, m) = (h.field(), h.dim(), module.dim());
    let dims = |n: usize| with_module(d, n + 1, m, false);
    let faces = (0..=truncation)
        .map(|n| {
            if n == 0 {
                return vec![];
            }
            (0..=n).map(|i| op(f, &dims(n), &dims(n - 1), |t| h.counit_on(&t, i))).collect()
        })
        .collect();
    let degeneracies = (0..truncation)
        .map(|n| (0..=n).map(|i| op(f, &dims(n), &dims(n + 1), |t| h.split(&t, i))).collect())
        .collect();
    let cyclic = (0..=truncation)
        .map(|n| {
            op(f, &dims(n), &dims(n), |t| {
                let t = t.split_leg(n + 1, &module.coaction, [m, d]);
                let mut groups = vec![Gather::Product(vec![n, n + 2])];
                groups.extend((0..n).map(Gather::Leg));
                groups.push(Gather::Leg(n + 1));
                gather(h, None, &t, &groups)
            })
        })
        .collect();
    Ok(ParaCyclicModule {
        name: "K".into(),
        field: f,
        dims: (0..=truncation).map(|n| m * d.pow(n as u32 + 1)).collect(),
        faces,
        degeneracies,
        cyclic,
    })
}

/// `K_*(H,M)`: the printed operators, after checking they coincide matrix
/// for matrix with the cyclic dual of `C^*_coalg(H,M)`.
pub fn k_dual_module(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<ParaCyclicModule> {
    let printed = k_dual_printed(h, module, truncation)?;
    let hatted = coalg_with_coefficients(h, module, truncation)?.hat_dual()?;
    let mismatch = |what: &str, n: usize, i: Option<usize>| {
        let at = i.map(|i| format!(" {i}")).unwrap_or_default();
        Err(Error::MismatchWithHatDual(format!("{what}{at} in degree {n}")))
    };
    for n in 0..=truncation {
        for (i, (a, b)) in printed.faces[n].iter().zip(&hatted.faces[n]).enumerate() {
            if a != b {
                return mismatch("face", n, Some(i));
            }
        }
        if n < truncation {
            for (i, (a, b)) in printed.degeneracies[n].iter().zip(&hatted.degeneracies[n]).enumerate() {
                if a != b {
                    return mismatch("degeneracy", n, Some(i));
                }
            }
        }
        if printed.cyclic[n] != hatted.cyclic[n] {
            return mismatch("cyclic operator", n, None);
        }
    }
    Ok(printed)
}

/// `C^H_*(H,M) = M □_H H^{⊗(n+1)}` with the operators of `C^alg`
/// restricted, together with the inclusions of the subspaces.
#[derive(Clone, Debug)]
pub struct InvariantModule {
    pub module: ParaCyclicModule,
    pub inclusions: Vec<Matrix>,
}

pub fn invariant_cyclic(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<InvariantModule> {
    let ambient = alg_with_coefficients(h, module, truncation)?;
    let inclusions = (0..=truncation)
        .map(|n| cotensor_subspace(h, &module.coaction, &diagonal_left_coaction(h, n + 1)))
        .collect::<Result<Vec<_>>>()?;
    let module = ambient.restrict("C^H", &inclusions)?;
    Ok(InvariantModule { module, inclusions })
}

/// `C^*_H(H,M) = H^{⊗(n+1)} ⊗_H M` with the operators of `C_coalg` induced
/// on the quotients.
#[derive(Clone, Debug)]
pub struct CoinvariantModule {
    pub module: ParaCocyclicModule,
    pub quotients: Vec<TensorQuotient>,
}

pub fn coinvariant_cocyclic(h: &HopfAlgebra, module: &SaydModule, truncation: usize) -> Result<CoinvariantModule> {
    let ambient = coalg_with_coefficients(h, module, truncation)?;
    let quotients = (0..=truncation)
        .map(|n| h_tensor_quotient(h, n, &module.action))
        .collect::<Result<Vec<_>>>()?;
    let qs: Vec<_> = quotients.iter().map(|q| q.quotient.clone()).collect();
    let rels: Vec<_> = quotients.iter().map(|q| q.relations.clone()).collect();
    let module = ambient.induce("C_H", &qs, &rels)?;
    Ok(CoinvariantModule { module, quotients })
}
