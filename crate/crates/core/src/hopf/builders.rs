use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::FieldTag;
use crate::tensor::permutation_matrix;

use super::pairs::{Candidates, Character, Grouplike};
use super::{BasedSpace, HopfAlgebra, HopfAlgebraData};

/// The ground field as a one-dimensional Hopf algebra.
pub fn ground_field(field: FieldTag) -> HopfAlgebra {
    let one = Matrix::identity(field, 1);
    let data = HopfAlgebraData {
        space: BasedSpace::new(field, vec!["1".into()]).unwrap(),
        mult: one.clone(),
        unit: one.clone(),
        comult: one.clone(),
        counit: one.clone(),
        antipode: one,
    };
    HopfAlgebra::new("k", data).expect("the ground field is a Hopf algebra")
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// Multiplication table of S₃ on the permutations of {0,1,2} in
/// lexicographic order, composing right to left.
pub fn symmetric_group_s3_table() -> Vec<Vec<usize>> {
    let perms = s3_elements();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<usize> = (0..3).map(|i| a[b[i]]).collect();
                    perms.iter().position(|p| c == *p).unwrap()
                })
                .collect()
        })
        .collect()
}

fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

/// Checks a multiplication table is a group and returns (identity, inverses).
fn check_group(table: &[Vec<usize>]) -> Result<(usize, Vec<usize>)> {
    let n = table.len();
    if n == 0 || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup("table is not a square table over 0..n".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    let inverses = (0..n)
        .map(|a| {
            (0..n)
                .find(|&b| table[a][b] == e && table[b][a] == e)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((e, inverses))
}

/// Group algebra `k[G]`: `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: FieldTag, name: &str, table: &[Vec<usize>]) -> Result<HopfAlgebra> {
    let (e, inv) = check_group(table)?;
    let n = table.len();
    let labels = (0..n)
        .map(|g| if g == e { "e".to_string() } else { format!("g{g}") })
        .collect();
    let one = field.one();
    let mut mult = Matrix::zeros(field, n, n * n);
    let mut comult = Matrix::zeros(field, n * n, n);
    let mut antipode = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(table[a][b], a * n + b, one.clone());
        }
        comult.set(a * n + a, a, one.clone());
        antipode.set(inv[a], a, one.clone());
    }
    let mut unit = Matrix::zeros(field, n, 1);
    unit.set(e, 0, one.clone());
    let counit = Matrix::from_fn(field, 1, n, |_, _| one.clone());
    let data = HopfAlgebraData {
        space: BasedSpace::new(field, labels)?,
        mult,
        unit,
        comult,
        counit,
        antipode,
    };
    HopfAlgebra::new(name, data)
}

/// Characters of `k[G]` with values ±1 (all group homomorphisms to {±1},
/// by exhaustive search) and the grouplikes, which are the group elements.
pub fn group_algebra_candidates(h: &HopfAlgebra, table: &[Vec<usize>]) -> Candidates {
    let n = table.len();
    let f = h.field();
    let mut characters = Vec::new();
    for mask in 0u32..(1 << n) {
        let sign = |g: usize| if mask >> g & 1 == 1 { -1 } else { 1 };
        let hom = (0..n).all(|a| (0..n).all(|b| sign(table[a][b]) == sign(a) * sign(b)));
        if hom {
            let functional = Matrix::from_fn(f, 1, n, |_, g| f.int(sign(g)));
            let name = if mask == 0 { "eps".to_string() } else { format!("chi{mask}") };
            characters.push((name, Character::new(h, functional).expect("homomorphism")));
        }
    }
    let grouplikes = (0..n)
        .map(|g| {
            let mut v = Matrix::zeros(f, n, 1);
            v.set(g, 0, f.one());
            let name = h.space.labels[g].clone();
            (name, Grouplike::new(h, v).expect("group element"))
        })
        .collect();
    Candidates { characters, grouplikes }
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, g, x, gx` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler_h4(field: FieldTag) -> HopfAlgebra {
    let d = 4;
    let (one, g, x, gx) = (0, 1, 2, 3);
    // Products of basis elements as (left, right, result, sign).
    let products: [(usize, usize, usize, i64); 10] = [
        (g, g, one, 1),
        (g, x, gx, 1),
        (g, gx, x, 1),
        (x, g, gx, -1),
        (gx, g, x, -1),
        (one, one, one, 1),
        (one, g, g, 1),
        (one, x, x, 1),
        (one, gx, gx, 1),
        (g, one, g, 1),
    ];
    let mut mult = Matrix::zeros(field, d, d * d);
    for (a, b, c, s) in products {
        mult.set(c, a * d + b, field.int(s));
    }
    mult.set(x, x * d + one, field.one());
    mult.set(gx, gx * d + one, field.one());
    // x·x, x·gx, gx·x, gx·gx all vanish.
    let mut comult = Matrix::zeros(field, d * d, d);
    comult.set(one * d + one, one, field.one());
    comult.set(g * d + g, g, field.one());
    comult.set(x * d + one, x, field.one());
    comult.set(g * d + x, x, field.one());
    comult.set(gx * d + g, gx, field.one());
    comult.set(one * d + gx, gx, field.one());
    let mut unit = Matrix::zeros(field, d, 1);
    unit.set(one, 0, field.one());
    let counit = Matrix::from_ints(field, &[&[1, 1, 0, 0]]);
    // S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x.
    let antipode = Matrix::from_ints(
        field,
        &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]],
    );
    let data = HopfAlgebraData {
        space: BasedSpace::new(field, ["1", "g", "x", "gx"].map(String::from).to_vec()).unwrap(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    };
    HopfAlgebra::new("h4", data).expect("Sweedler's algebra satisfies the Hopf axioms")
}

/// Characters `δ(g) = ±1, δ(x) = 0` and grouplikes `1, g` of H₄.
pub fn sweedler_h4_candidates(h: &HopfAlgebra) -> Candidates {
    let f = h.field();
    let character = |s: i64| Character::new(h, Matrix::from_ints(f, &[&[1, s, 0, 0]])).unwrap();
    let grouplike = |i: usize| {
        let mut v = Matrix::zeros(f, 4, 1);
        v.set(i, 0, f.one());
        Grouplike::new(h, v).unwrap()
    };
    Candidates {
        characters: vec![("eps".into(), character(1)), ("delta".into(), character(-1))],
        grouplikes: vec![("1".into(), grouplike(0)), ("g".into(), grouplike(1))],
    }
}

/// The dual Hopf algebra `H*` on the dual basis: every structure map is
/// transposed, exchanging multiplication with comultiplication and unit
/// with counit.
pub fn dual_hopf(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let labels = h.space.labels.iter().map(|l| format!("{l}*")).collect();
    let data = HopfAlgebraData {
        space: BasedSpace::new(h.field(), labels)?,
        mult: h.comult.transpose(),
        unit: h.counit.transpose(),
        comult: h.mult.transpose(),
        counit: h.unit.transpose(),
        antipode: h.antipode.transpose(),
    };
    HopfAlgebra::new(format!("dual-{}", h.name()), data)
}

/// `H^cop`: the flipped comultiplication with the inverse antipode.
pub fn co_opposite(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let d = h.dim();
    let mut data = h.data().clone();
    data.comult = &permutation_matrix(h.field(), &[d, d], &[1, 0]) * &data.comult;
    data.antipode = h.antipode_inv().clone();
    HopfAlgebra::new(format!("{}-cop", h.name()), data)
}
