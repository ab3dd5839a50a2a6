//! JSON formats for Hopf algebras, SAYD modules, (co)cyclic modules and
//! graded maps.
//!
//! Every linear map is stored with one row per basis vector of its source,
//! holding the coordinates of the image; this is the transpose of the
//! in-memory column convention. So `mult` has `d²` rows of length `d`.
//! Scalars are strings: `"p/q"` or `"n"` over `Q`, residues over `F_p`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclic::{GradedMap, ParaCocyclicModule, ParaCyclicModule};
use crate::error::{Error, Result};
use crate::hopf::{BasedSpace, Candidates, Character, Grouplike, HopfAlgebra, HopfAlgebraData, SaydModule, SaydVariant};
use crate::matrix::Matrix;
use crate::scalar::FieldTag;

pub type Rows = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldJson {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldJson {
    pub fn tag(&self) -> Result<FieldTag> {
        match self {
            FieldJson::Named(s) => s.parse(),
            FieldJson::Prime { fp } => FieldTag::prime(*fp),
        }
    }
}

impl From<FieldTag> for FieldJson {
    fn from(f: FieldTag) -> FieldJson {
        match f {
            FieldTag::Rationals => FieldJson::Named("Q".into()),
            FieldTag::Prime(p) => FieldJson::Prime { fp: p },
        }
    }
}

/// Rows indexed by source basis vectors.
pub fn to_rows(m: &Matrix) -> Rows {
    (0..m.cols()).map(|c| m.col(c).iter().map(ToString::to_string).collect()).collect()
}

/// Inverse of [`to_rows`]; `what` names the matrix in error messages.
pub fn from_rows(field: FieldTag, rows: &Rows, source: usize, target: usize, what: &str) -> Result<Matrix> {
    if rows.len() != source {
        return Err(Error::ShapeMismatch(format!("{what} has {} rows, expected {source}", rows.len())));
    }
    let mut m = Matrix::zeros(field, target, source);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != target {
            return Err(Error::ShapeMismatch(format!("{what} row {r} has {} entries, expected {target}", row.len())));
        }
        for (c, text) in row.iter().enumerate() {
            let s = field
                .parse(text)
                .map_err(|e| Error::Input(format!("{what} row {r} entry {c}: {e}")))?;
            m.set(c, r, s);
        }
    }
    Ok(m)
}

fn vector_strings(m: &Matrix) -> Vec<String> {
    m.entries().iter().map(ToString::to_string).collect()
}

fn parse_vector(field: FieldTag, v: &[String], d: usize, what: &str) -> Result<Vec<crate::Scalar>> {
    if v.len() != d {
        return Err(Error::ShapeMismatch(format!("{what} has {} entries, expected {d}", v.len())));
    }
    v.iter()
        .enumerate()
        .map(|(i, t)| field.parse(t).map_err(|e| Error::Input(format!("{what} entry {i}: {e}"))))
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldJson,
    pub basis: Vec<String>,
    pub mult: Rows,
    pub unit: Rows,
    pub comult: Rows,
    pub counit: Rows,
    pub antipode: Rows,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub characters: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub grouplikes: BTreeMap<String, Vec<String>>,
}

/// Raw structure constants and named candidates; the axioms are not checked.
pub fn parse_hopf_data(text: &str) -> Result<(String, HopfAlgebraData, HopfJson)> {
    let j: HopfJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed Hopf JSON: {e}")))?;
    let field = j.field.tag()?;
    let space = BasedSpace::new(field, j.basis.clone())?;
    let d = space.dim();
    let data = HopfAlgebraData {
        mult: from_rows(field, &j.mult, d * d, d, "mult")?,
        unit: from_rows(field, &j.unit, 1, d, "unit")?,
        comult: from_rows(field, &j.comult, d, d * d, "comult")?,
        counit: from_rows(field, &j.counit, d, 1, "counit")?,
        antipode: from_rows(field, &j.antipode, d, d, "antipode")?,
        space,
    };
    Ok((j.name.clone().unwrap_or_else(|| "H".into()), data, j))
}

/// A verified Hopf algebra together with the characters and grouplikes
/// named in the file (each verified as such).
pub fn read_hopf(text: &str) -> Result<(HopfAlgebra, Candidates)> {
    let (name, data, j) = parse_hopf_data(text)?;
    let h = HopfAlgebra::new(name, data)?;
    let (f, d) = (h.field(), h.dim());
    let characters = j
        .characters
        .iter()
        .map(|(n, v)| {
            let row = Matrix::from_rows(f, vec![parse_vector(f, v, d, &format!("character {n}"))?], d)?;
            Ok((n.clone(), Character::new(&h, row)?))
        })
        .collect::<Result<_>>()?;
    let grouplikes = j
        .grouplikes
        .iter()
        .map(|(n, v)| {
            let col = Matrix::column(f, parse_vector(f, v, d, &format!("grouplike {n}"))?);
            Ok((n.clone(), Grouplike::new(&h, col)?))
        })
        .collect::<Result<_>>()?;
    Ok((h, Candidates { characters, grouplikes }))
}

pub fn hopf_json(h: &HopfAlgebraData, name: &str, candidates: Option<&Candidates>) -> HopfJson {
    let mut characters = BTreeMap::new();
    let mut grouplikes = BTreeMap::new();
    if let Some(c) = candidates {
        for (n, x) in &c.characters {
            characters.insert(n.clone(), vector_strings(x.functional()));
        }
        for (n, g) in &c.grouplikes {
            grouplikes.insert(n.clone(), vector_strings(g.vector()));
        }
    }
    HopfJson {
        name: Some(name.to_string()),
        field: h.field().into(),
        basis: h.space.labels.clone(),
        mult: to_rows(&h.mult),
        unit: to_rows(&h.unit),
        comult: to_rows(&h.comult),
        counit: to_rows(&h.counit),
        antipode: to_rows(&h.antipode),
        characters,
        grouplikes,
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaydJson {
    pub variant: SaydVariant,
    pub basis: Vec<String>,
    /// `H⊗M → M` for a left action, `M⊗H → M` for a right one.
    pub action: Rows,
    /// `M → M⊗H` for a right coaction, `M → H⊗M` for a left one.
    pub coaction: Rows,
}

pub fn read_sayd(h: &HopfAlgebra, text: &str) -> Result<SaydModule> {
    let j: SaydJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed module JSON: {e}")))?;
    let f = h.field();
    let space = BasedSpace::new(f, j.basis)?;
    let (d, m) = (h.dim(), space.dim());
    let action = from_rows(f, &j.action, d * m, m, "action")?;
    let coaction = from_rows(f, &j.coaction, m, d * m, "coaction")?;
    SaydModule::new(h, space, j.variant, action, coaction)
}

pub fn sayd_json(m: &SaydModule) -> SaydJson {
    SaydJson {
        variant: m.variant,
        basis: m.space.labels.clone(),
        action: to_rows(&m.action),
        coaction: to_rows(&m.coaction),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleKind {
    Cyclic,
    Cocyclic,
}

/// A truncated (co)cyclic module. For a cyclic module `lowering` holds the
/// faces and `raising` the degeneracies; for a cocyclic one `raising` holds
/// the cofaces and `lowering` the codegeneracies. Index `[n][i]` is the
/// operator with source degree `n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub name: String,
    pub kind: ModuleKind,
    pub field: FieldJson,
    pub dims: Vec<usize>,
    pub lowering: Vec<Vec<Rows>>,
    pub raising: Vec<Vec<Rows>>,
    pub cyclic: Vec<Rows>,
}

pub enum AnyModule {
    Cyclic(ParaCyclicModule),
    Cocyclic(ParaCocyclicModule),
}

impl AnyModule {
    pub fn name(&self) -> &str {
        match self {
            AnyModule::Cyclic(x) => &x.name,
            AnyModule::Cocyclic(y) => &y.name,
        }
    }
}

fn all_rows(ops: &[Vec<Matrix>]) -> Vec<Vec<Rows>> {
    ops.iter().map(|v| v.iter().map(to_rows).collect()).collect()
}

pub fn cyclic_json(x: &ParaCyclicModule) -> ModuleJson {
    ModuleJson {
        name: x.name.clone(),
        kind: ModuleKind::Cyclic,
        field: x.field.into(),
        dims: x.dims.clone(),
        lowering: all_rows(&x.faces),
        raising: all_rows(&x.degeneracies),
        cyclic: x.cyclic.iter().map(to_rows).collect(),
    }
}

pub fn cocyclic_json(y: &ParaCocyclicModule) -> ModuleJson {
    ModuleJson {
        name: y.name.clone(),
        kind: ModuleKind::Cocyclic,
        field: y.field.into(),
        dims: y.dims.clone(),
        lowering: all_rows(&y.codegeneracies),
        raising: all_rows(&y.cofaces),
        cyclic: y.cyclic.iter().map(to_rows).collect(),
    }
}

fn parse_ops(f: FieldTag, dims: &[usize], ops: &[Vec<Rows>], shift: isize, what: &str) -> Result<Vec<Vec<Matrix>>> {
    ops.iter()
        .enumerate()
        .map(|(n, v)| {
            let to = n as isize + shift;
            if to < 0 || to as usize >= dims.len() {
                return if v.is_empty() {
                    Ok(vec![])
                } else {
                    Err(Error::ShapeMismatch(format!("{what} in degree {n} leave the truncation")))
                };
            }
            v.iter()
                .enumerate()
                .map(|(i, rows)| from_rows(f, rows, dims[n], dims[to as usize], &format!("{what}[{n}][{i}]")))
                .collect()
        })
        .collect()
}

pub fn read_module(text: &str) -> Result<AnyModule> {
    let j: ModuleJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed module JSON: {e}")))?;
    let f = j.field.tag()?;
    let cyclic = j
        .cyclic
        .iter()
        .enumerate()
        .map(|(n, rows)| {
            let d = *j.dims.get(n).ok_or_else(|| Error::ShapeMismatch(format!("cyclic[{n}] beyond the listed dims")))?;
            from_rows(f, rows, d, d, &format!("cyclic[{n}]"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(match j.kind {
        ModuleKind::Cyclic => {
            let x = ParaCyclicModule {
                name: j.name,
                field: f,
                faces: parse_ops(f, &j.dims, &j.lowering, -1, "faces")?,
                degeneracies: parse_ops(f, &j.dims, &j.raising, 1, "degeneracies")?,
                dims: j.dims,
                cyclic,
            };
            x.check_shapes()?;
            AnyModule::Cyclic(x)
        }
        ModuleKind::Cocyclic => {
            let y = ParaCocyclicModule {
                name: j.name,
                field: f,
                cofaces: parse_ops(f, &j.dims, &j.raising, 1, "cofaces")?,
                codegeneracies: parse_ops(f, &j.dims, &j.lowering, -1, "codegeneracies")?,
                dims: j.dims,
                cyclic,
            };
            y.check_shapes()?;
            AnyModule::Cocyclic(y)
        }
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedMapJson {
    pub field: FieldJson,
    pub maps: Vec<Rows>,
}

pub fn graded_map_json(f: &GradedMap, field: FieldTag) -> GradedMapJson {
    GradedMapJson { field: field.into(), maps: f.maps.iter().map(to_rows).collect() }
}

pub fn read_graded_map(text: &str) -> Result<GradedMap> {
    let j: GradedMapJson = serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed map JSON: {e}")))?;
    let f = j.field.tag()?;
    let maps = j
        .maps
        .iter()
        .enumerate()
        .map(|(n, rows)| {
            let target = rows.first().map_or(0, Vec::len);
            from_rows(f, rows, rows.len(), target, &format!("map[{n}]"))
        })
        .collect::<Result<_>>()?;
    Ok(GradedMap::new(maps))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{algebra_cyclic, connes_moscovici};
    use crate::hopf::{search_involution_pairs, sweedler_h4, sweedler_h4_candidates};

    const Q: FieldTag = FieldTag::Rationals;

    #[test]
    fn hopf_round_trip() {
        let h = sweedler_h4(Q);
        let c = sweedler_h4_candidates(&h);
        let text = to_json(&hopf_json(&h, h.name(), Some(&c)));
        let (back, cands) = read_hopf(&text).unwrap();
        assert_eq!(back.data(), h.data());
        assert_eq!(cands.characters.len(), c.characters.len());
        assert_eq!(to_json(&hopf_json(&back, back.name(), Some(&cands))), text);
    }

    #[test]
    fn rows_are_indexed_by_source() {
        let m = Matrix::from_ints(Q, &[&[1, 2, 3], &[4, 5, 6]]);
        let rows = to_rows(&m);
        assert_eq!(rows, vec![vec!["1", "4"], vec!["2", "5"], vec!["3", "6"]]);
        assert_eq!(from_rows(Q, &rows, 3, 2, "m").unwrap(), m);
    }

    #[test]
    fn bad_entries_are_named() {
        let rows = vec![vec!["1".to_string(), "x".to_string()]];
        let err = from_rows(Q, &rows, 1, 2, "antipode").unwrap_err();
        assert!(err.to_string().contains("antipode row 0 entry 1"), "{err}");
        let err = from_rows(Q, &rows, 2, 2, "antipode").unwrap_err();
        assert!(matches!(err, Error::ShapeMismatch(_)));
    }

    #[test]
    fn module_round_trip() {
        let h = sweedler_h4(Q);
        let pair = search_involution_pairs(&h, &sweedler_h4_candidates(&h)).remove(0).pair;
        let y = connes_moscovici(&h, &pair, 2).unwrap();
        match read_module(&to_json(&cocyclic_json(&y))).unwrap() {
            AnyModule::Cocyclic(back) => assert_eq!(back, y),
            AnyModule::Cyclic(_) => panic!("kind lost"),
        }
        let x = algebra_cyclic(&h.algebra(), 2);
        match read_module(&to_json(&cyclic_json(&x))).unwrap() {
            AnyModule::Cyclic(back) => assert_eq!(back, x),
            AnyModule::Cocyclic(_) => panic!("kind lost"),
        }
    }

    #[test]
    fn prime_field_json() {
        assert_eq!(serde_json::to_string(&FieldJson::from(FieldTag::Prime(7))).unwrap(), r#"{"Fp":7}"#);
        let f: FieldJson = serde_json::from_str(r#""Q""#).unwrap();
        assert_eq!(f.tag().unwrap(), Q);
    }
}
