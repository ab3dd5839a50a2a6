use crate::error::{Error, Result};
use crate::hopf::{gather, Gather, HopfAlgebra, SaydModule};
use crate::matrix::{Matrix, Quotient};
use crate::tensor::{linear_map, Tensor};

fn dims_h_then_m(d: usize, legs: usize, m: usize) -> Vec<usize> {
    let mut v = vec![d; legs];
    v.push(m);
    v
}

fn dims_m_then_h(d: usize, legs: usize, m: usize) -> Vec<usize> {
    let mut v = vec![d; legs];
    v.insert(0, m);
    v
}

/// `θ: K_n(H,M) → C^alg_n(H,M)`,
/// `θ(h_0⊗…⊗h_n⊗m) = h_n⁽²⁾m⁽⁰⁾ ⊗ h_n⁽³⁾m⁽¹⁾S(h_0⁽¹⁾) ⊗ h_0⁽²⁾S(h_1⁽¹⁾) ⊗ … ⊗ h_{n-1}⁽²⁾S(h_n⁽¹⁾)`.
pub fn theta(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    let act = Some((&module.action, m));
    linear_map(h.field(), &dims_h_then_m(d, n + 1, m), &dims_m_then_h(d, n + 1, m), |t| {
        // Legs after splitting: h_j⁽¹⁾ at 2j, h_j⁽²⁾ at 2j+1 (j < n), the
        // three pieces of h_n at 2n..2n+2, then m⁽⁰⁾, m⁽¹⁾.
        let mut t = t.split_leg(n + 1, &module.coaction, [m, d]);
        t = h.split_n(&t, n, 3);
        for j in (0..n).rev() {
            t = h.split(&t, j);
        }
        let (c1, c2, c3, m0, m1) = (2 * n, 2 * n + 1, 2 * n + 2, 2 * n + 3, 2 * n + 4);
        for j in 0..n {
            t = h.antipode_on(&t, 2 * j);
        }
        t = h.antipode_on(&t, c1);
        let mut groups = vec![Gather::Act { h: c2, m: m0 }];
        if n == 0 {
            groups.push(Gather::Product(vec![c3, m1, c1]));
        } else {
            groups.push(Gather::Product(vec![c3, m1, 0]));
            for j in 1..n {
                groups.push(Gather::Product(vec![2 * j - 1, 2 * j]));
            }
            groups.push(Gather::Product(vec![2 * n - 1, c1]));
        }
        gather(h, act, &t, &groups)
    })
}

/// `φ(h_0⊗…⊗h_n⊗m) = h_0S(h_n⁽ⁿ⁾) ⊗ h_1S(h_n⁽ⁿ⁻¹⁾) ⊗ … ⊗ h_{n-1}S(h_n⁽¹⁾) ⊗ h_n⁽ⁿ⁺¹⁾m`.
pub fn phi(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    let act = Some((&module.action, m));
    linear_map(h.field(), &dims_h_then_m(d, n + 1, m), &dims_h_then_m(d, n, m), |t| {
        // h_n⁽ᵏ⁾ sits at leg n+k-1, m at 2n+1.
        let mut t = h.split_n(&t, n, n + 1);
        for leg in n..2 * n {
            t = h.antipode_on(&t, leg);
        }
        let mut groups: Vec<Gather> = (0..n).map(|j| Gather::Product(vec![j, 2 * n - j - 1])).collect();
        groups.push(Gather::Act { h: 2 * n, m: 2 * n + 1 });
        gather(h, act, &t, &groups)
    })
}

/// `h_1⊗…⊗h_n⊗m ↦ h_1⊗…⊗h_n⊗1⊗m`, before projecting to the quotient.
pub fn psi_lift(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_h_then_m(d, n, m), &dims_h_then_m(d, n + 1, m), |t| h.unit_at(&t, n))
}

/// `φ'(m⊗h_0⊗…⊗h_n) = m ⊗ ε(h_0)h_1 ⊗ … ⊗ h_n` on the ambient space.
pub fn phi_prime_ambient(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_m_then_h(d, n + 1, m), &dims_m_then_h(d, n, m), |t| h.counit_on(&t, 1))
}

/// `ψ'(m⊗h_1⊗…⊗h_n) = m⁽⁰⁾ ⊗ m⁽¹⁾S(h_1⁽¹⁾⋯h_n⁽¹⁾) ⊗ h_1⁽²⁾ ⊗ … ⊗ h_n⁽²⁾` in the ambient space.
pub fn psi_prime_ambient(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_m_then_h(d, n, m), &dims_m_then_h(d, n + 1, m), |t| {
        let mut t = t;
        for i in (1..=n).rev() {
            t = h.split(&t, i);
        }
        // m⁽⁰⁾, m⁽¹⁾, then h_i⁽¹⁾ at 2i, h_i⁽²⁾ at 2i+1.
        let t = t.split_leg(0, &module.coaction, [m, d]);
        if n == 0 {
            return t;
        }
        let mut groups = vec![Gather::Leg(0), Gather::Leg(1), Gather::Product((1..=n).map(|i| 2 * i).collect())];
        groups.extend((1..=n).map(|i| Gather::Leg(2 * i + 1)));
        let t = gather(h, None, &t, &groups);
        let t = h.antipode_on(&t, 2);
        h.multiply(&t, &[1, 2])
    })
}

/// `θ̄` in the closed form obtained by composing the identifications:
/// `m ⊗ h_1S(h_2⁽¹⁾) ⊗ h_2⁽²⁾S(h_3⁽¹⁾) ⊗ … ⊗ h_n⁽²⁾`.
pub fn theta_bar_closed_form(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_h_then_m(d, n, m), &dims_m_then_h(d, n, m), |t| {
        let t = t.move_leg(n, 0);
        if n == 0 {
            return t;
        }
        // h_1 at 1; h_j for j ≥ 2 split into 2j-2, 2j-1.
        let mut t = t;
        for j in (2..=n).rev() {
            t = h.split(&t, j);
        }
        for j in 2..=n {
            t = h.antipode_on(&t, 2 * j - 2);
        }
        let mut groups = vec![Gather::Leg(0)];
        let mut prev = 1;
        for j in 2..=n {
            groups.push(Gather::Product(vec![prev, 2 * j - 2]));
            prev = 2 * j - 1;
        }
        groups.push(Gather::Leg(prev));
        gather(h, None, &t, &groups)
    })
}

/// The printed formula for `θ̄` read literally after renaming `h_1, …, h_n`
/// to `h_0, …, h_{n-1}`: `m⁽⁰⁾ ⊗ m⁽¹⁾S(h_0⁽¹⁾) ⊗ h_0⁽²⁾S(h_1⁽¹⁾) ⊗ … ⊗ h_{n-1}⁽²⁾`,
/// which has `n+1` factors of `H`.
pub fn theta_bar_printed(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_h_then_m(d, n, m), &dims_m_then_h(d, n + 1, m), |t| {
        let t = t.split_leg(n, &module.coaction, [m, d]);
        // h_j (j < n), m⁽⁰⁾ at n, m⁽¹⁾ at n+1.
        let mut t = t.move_leg(n, 0).move_leg(n + 1, 1);
        // m⁽⁰⁾, m⁽¹⁾, h_0 … h_{n-1} at 2..n+1.
        if n == 0 {
            return t;
        }
        for j in (0..n).rev() {
            t = h.split(&t, 2 + j);
        }
        // h_j⁽¹⁾ at 2+2j, h_j⁽²⁾ at 3+2j.
        for j in 0..n {
            t = h.antipode_on(&t, 2 + 2 * j);
        }
        let mut groups = vec![Gather::Leg(0), Gather::Product(vec![1, 2])];
        for j in 1..n {
            groups.push(Gather::Product(vec![1 + 2 * j, 2 + 2 * j]));
        }
        groups.push(Gather::Leg(1 + 2 * n));
        gather(h, None, &t, &groups)
    })
}

/// Readings of the printed inverse `γ`, after renaming `h_0, …, h_{n-1}` to
/// `h_1, …, h_n` and reading `h_{n_2}` as `h_{n-1}`:
/// `[S(m⁽¹⁾)] h_1h_2⁽¹⁾⋯h_n⁽¹⁾ ⊗ h_2⁽²⁾⋯h_n⁽²⁾ ⊗ … ⊗ h_n⁽ⁿ⁾ ⊗ m⁽⁰⁾`, with and
/// without the leading `S(m⁽¹⁾)`.
pub fn gamma_reading(h: &HopfAlgebra, module: &SaydModule, n: usize, with_coaction: bool) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    linear_map(h.field(), &dims_m_then_h(d, n, m), &dims_h_then_m(d, n, m), |t| {
        let mut t: Tensor = t.move_leg(0, n);
        if with_coaction {
            t = t.split_leg(n, &module.coaction, [m, d]);
            t = h.antipode_on(&t, n + 1);
        }
        if n == 0 {
            return if with_coaction { t.eval_leg(1, &h.counit) } else { t };
        }
        // h_j (1-based) splits into j pieces; piece k of h_j is at offset[j]+k-1.
        let mut offsets = vec![0; n + 1];
        let mut next = 0;
        for j in 1..=n {
            offsets[j] = next;
            next += j;
        }
        for j in (1..=n).rev() {
            t = h.split_n(&t, j - 1, j);
        }
        let m_leg = next;
        let mut groups = Vec::new();
        for k in 1..=n {
            let mut legs: Vec<usize> = Vec::new();
            if k == 1 && with_coaction {
                legs.push(m_leg + 1);
            }
            legs.extend((k..=n).map(|j| offsets[j] + k - 1));
            groups.push(Gather::Product(legs));
        }
        groups.push(Gather::Leg(m_leg));
        gather(h, None, &t, &groups)
    })
}

/// `φ̄ = φ ∘ section` on the quotient, after checking `φ` kills the relations.
pub fn phi_bar(h: &HopfAlgebra, module: &SaydModule, n: usize, quotient: &Quotient, relations: &Matrix) -> Result<Matrix> {
    let p = phi(h, module, n);
    if !(&p * relations).is_zero() {
        return Err(Error::NotWellDefined(format!("φ does not vanish on the relations in degree {n}")));
    }
    Ok(&p * &quotient.section)
}

/// `h_0⊗…⊗h_n⊗m ↦ h_1S⁻¹(h_0⁽ⁿ⁺¹⁾) ⊗ … ⊗ h_nS⁻¹(h_0⁽²⁾) ⊗ h_0⁽¹⁾m`, the
/// identification of `H^{⊗(n+1)} ⊗_H M` with `H^{⊗n} ⊗ M` that absorbs the
/// first factor instead of the last.
pub fn absorb_first(h: &HopfAlgebra, module: &SaydModule, n: usize) -> Matrix {
    let (d, m) = (h.dim(), module.dim());
    let act = Some((&module.action, m));
    linear_map(h.field(), &dims_h_then_m(d, n + 1, m), &dims_h_then_m(d, n, m), |t| {
        // h_0⁽ᵏ⁾ at leg k-1, h_j at n+j, m at 2n+1.
        let mut t = h.split_n(&t, 0, n + 1);
        for leg in 1..=n {
            t = h.antipode_inv_on(&t, leg);
        }
        let mut groups: Vec<Gather> = (1..=n).map(|j| Gather::Product(vec![n + j, n + 1 - j])).collect();
        groups.push(Gather::Act { h: 0, m: 2 * n + 1 });
        gather(h, act, &t, &groups)
    })
}

/// `β^{⊗n} ⊗ id_M` on `H^{⊗n} ⊗ M`.
pub fn legwise(beta: &Matrix, n: usize, m: usize) -> Matrix {
    let f = beta.field();
    let mut out = Matrix::identity(f, 1);
    for _ in 0..n {
        out = out.kron(beta);
    }
    out.kron(&Matrix::identity(f, m))
}
