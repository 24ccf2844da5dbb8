//! JSON file formats. Indices in files are 0-based; rationals are strings
//! such as `"3"` or `"-1/2"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::digroup::FiniteDigroup;
use crate::error::{Error, Result};
use crate::exactla::{format_rational, parse_rational, Matrix, Rational, Subspace};
use crate::leibniz::{Dialgebra, LeibnizAlgebra, Representation};
use crate::lierack::LinearLieGroupModel;
use crate::numeric::FMat;
use crate::rack::{FiniteGroup, FiniteRack};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub val: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DialgebraFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub vdash: Vec<BracketEntry>,
    #[serde(default)]
    pub dashv: Vec<BracketEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationFile {
    pub module_dim: usize,
    pub rho: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceFile {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RackFile {
    pub size: usize,
    pub point: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub size: usize,
    pub point: usize,
    pub table: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigroupFile {
    pub size: usize,
    pub unit: usize,
    pub vdash: Vec<Vec<usize>>,
    pub dashv: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub ambient: usize,
    pub lie_basis: Vec<Vec<Vec<f64>>>,
    pub module_dim: usize,
    pub rho: Vec<Vec<Vec<f64>>>,
}

fn parse_vec(v: &[String], n: usize, what: &str) -> Result<Vec<Rational>> {
    if v.len() != n {
        return Err(Error::Parse(format!("{what} has length {}, expected {n}", v.len())));
    }
    v.iter().map(|s| parse_rational(s)).collect()
}

fn format_vec(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn entries<F>(dim: usize, list: &[BracketEntry], mut set: F) -> Result<()>
where
    F: FnMut(usize, usize, Vec<Rational>) -> Result<()>,
{
    let mut seen = std::collections::HashSet::new();
    for e in list {
        if e.i >= dim || e.j >= dim {
            return Err(Error::Parse(format!("bracket index ({}, {}) out of range for dim {dim}", e.i, e.j)));
        }
        if !seen.insert((e.i, e.j)) {
            return Err(Error::Parse(format!("pair ({}, {}) listed twice", e.i, e.j)));
        }
        set(e.i, e.j, parse_vec(&e.val, dim, "val")?)?;
    }
    Ok(())
}

fn names_or_default(basis: &Option<Vec<String>>, dim: usize) -> Result<Vec<String>> {
    match basis {
        Some(b) if b.len() != dim => Err(Error::Parse(format!("basis has {} names, expected {dim}", b.len()))),
        Some(b) => Ok(b.clone()),
        None => Ok((1..=dim).map(|i| format!("e{i}")).collect()),
    }
}

fn nonzero_entries(dim: usize, get: impl Fn(usize, usize) -> Vec<Rational>) -> Vec<BracketEntry> {
    let mut out = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let v = get(i, j);
            if !crate::exactla::is_zero_vec(&v) {
                out.push(BracketEntry { i, j, val: format_vec(&v) });
            }
        }
    }
    out
}

impl AlgebraFile {
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra> {
        let mut g = LeibnizAlgebra::zero_with_names(names_or_default(&self.basis, self.dim)?);
        entries(self.dim, &self.brackets, |i, j, v| g.set_basis_bracket(i, j, v))?;
        Ok(g)
    }

    pub fn from_algebra(g: &LeibnizAlgebra) -> Self {
        AlgebraFile {
            dim: g.dim(),
            basis: Some(g.names().to_vec()),
            brackets: nonzero_entries(g.dim(), |i, j| g.basis_bracket(i, j).to_vec()),
        }
    }
}

impl DialgebraFile {
    pub fn to_dialgebra(&self) -> Result<Dialgebra> {
        let mut d = Dialgebra::zero_with_names(names_or_default(&self.basis, self.dim)?);
        entries(self.dim, &self.vdash, |i, j, v| d.set_vdash(i, j, v))?;
        entries(self.dim, &self.dashv, |i, j, v| d.set_dashv(i, j, v))?;
        Ok(d)
    }

    pub fn from_dialgebra(d: &Dialgebra) -> Self {
        DialgebraFile {
            dim: d.dim(),
            basis: Some(d.names().to_vec()),
            vdash: nonzero_entries(d.dim(), |i, j| d.vdash_basis(i, j).to_vec()),
            dashv: nonzero_entries(d.dim(), |i, j| d.dashv_basis(i, j).to_vec()),
        }
    }
}

fn parse_matrix(rows: &[Vec<String>], n: usize) -> Result<Matrix> {
    if rows.len() != n {
        return Err(Error::Parse(format!("matrix has {} rows, expected {n}", rows.len())));
    }
    Matrix::from_rows(rows.iter().map(|r| parse_vec(r, n, "matrix row")).collect::<Result<_>>()?)
}

impl RepresentationFile {
    pub fn to_representation(&self) -> Result<Representation> {
        let rho = self.rho.iter().map(|m| parse_matrix(m, self.module_dim)).collect::<Result<_>>()?;
        Representation::new(self.module_dim, rho)
    }

    pub fn from_representation(r: &Representation) -> Self {
        RepresentationFile {
            module_dim: r.module_dim(),
            rho: r.matrices().iter().map(|m| m.row_vectors().iter().map(|v| format_vec(v)).collect()).collect(),
        }
    }
}

impl SubspaceFile {
    pub fn to_subspace(&self) -> Result<Subspace> {
        let vs: Vec<Vec<Rational>> =
            self.basis.iter().map(|v| parse_vec(v, self.ambient_dim, "basis vector")).collect::<Result<_>>()?;
        Ok(Subspace::span(self.ambient_dim, &vs))
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        SubspaceFile { ambient_dim: s.ambient_dim(), basis: s.basis().iter().map(|v| format_vec(v)).collect() }
    }
}

fn flatten(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<usize>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("{what} must be {n}×{n}")));
    }
    Ok(rows.concat())
}

impl RackFile {
    pub fn to_rack(&self) -> Result<FiniteRack> {
        FiniteRack::new(self.size, self.point, flatten(&self.table, self.size, "table")?)
    }

    pub fn from_rack(q: &FiniteRack) -> Self {
        RackFile { size: q.size(), point: q.point(), table: q.rows() }
    }
}

impl GroupFile {
    pub fn to_group(&self) -> Result<FiniteGroup> {
        FiniteGroup::new_unchecked(self.size, self.point, flatten(&self.table, self.size, "table")?, self.inv.clone())
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupFile {
            size: g.size(),
            point: g.unit(),
            table: g.table().chunks(g.size()).map(<[usize]>::to_vec).collect(),
            inv: g.inverses().to_vec(),
        }
    }
}

impl DigroupFile {
    pub fn to_digroup(&self) -> Result<FiniteDigroup> {
        FiniteDigroup::new(
            self.size,
            self.unit,
            flatten(&self.vdash, self.size, "vdash")?,
            flatten(&self.dashv, self.size, "dashv")?,
            self.inv.clone(),
        )
    }

    pub fn from_digroup(g: &FiniteDigroup) -> Self {
        let n = g.size();
        DigroupFile {
            size: n,
            unit: g.unit(),
            vdash: FiniteDigroup::rows(g.vdash_table(), n),
            dashv: FiniteDigroup::rows(g.dashv_table(), n),
            inv: g.inverses().to_vec(),
        }
    }
}

fn to_fmat(rows: &[Vec<f64>], n: usize) -> Result<FMat> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse(format!("model matrix must be {n}×{n}")));
    }
    Ok(FMat::from_fn(n, n, |i, j| rows[i][j]))
}

fn from_fmat(m: &FMat) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect()).collect()
}

impl ModelFile {
    pub fn to_model(&self) -> Result<LinearLieGroupModel> {
        let lie = self.lie_basis.iter().map(|m| to_fmat(m, self.ambient)).collect::<Result<_>>()?;
        let rho = self.rho.iter().map(|m| to_fmat(m, self.module_dim)).collect::<Result<_>>()?;
        LinearLieGroupModel::new(self.ambient, lie, self.module_dim, rho)
    }

    pub fn from_model(m: &LinearLieGroupModel) -> Self {
        ModelFile {
            ambient: m.ambient(),
            lie_basis: m.lie_basis().iter().map(from_fmat).collect(),
            module_dim: m.module_dim(),
            rho: m.rho().iter().map(from_fmat).collect(),
        }
    }
}

/// Parses JSON text into `T`. Empty or malformed input is a parse error.
pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digroup::order6_standard;
    use crate::leibniz::builtins::*;

    #[test]
    fn algebra_round_trip() {
        for g in [example_2_2(), example_2_1(2), heisenberg_dtwist()] {
            let f = AlgebraFile::from_algebra(&g);
            let back: AlgebraFile = parse(&to_json(&f).unwrap()).unwrap();
            assert_eq!(back, f);
            assert!(back.to_algebra().unwrap().constants_equal(&g));
        }
    }

    #[test]
    fn algebra_text_parses() {
        let text = r#"{"dim": 3, "brackets": [{"i": 2, "j": 1, "val": ["1", "0", "0"]}]}"#;
        let g = parse::<AlgebraFile>(text).unwrap().to_algebra().unwrap();
        assert!(g.constants_equal(&example_2_2()));
        assert_eq!(g.names()[0], "e1");
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse::<AlgebraFile>(""), Err(Error::Parse(_))));
        assert!(matches!(parse::<AlgebraFile>("{"), Err(Error::Parse(_))));
        let bad = r#"{"dim": 2, "brackets": [{"i": 2, "j": 0, "val": ["1", "0"]}]}"#;
        assert!(parse::<AlgebraFile>(bad).unwrap().to_algebra().is_err());
        let bad = r#"{"dim": 2, "brackets": [{"i": 0, "j": 0, "val": ["1/0", "0"]}]}"#;
        assert!(parse::<AlgebraFile>(bad).unwrap().to_algebra().is_err());
    }

    #[test]
    fn digroup_round_trip() {
        let g = order6_standard();
        let f = DigroupFile::from_digroup(&g);
        let back: DigroupFile = parse(&to_json(&f).unwrap()).unwrap();
        assert_eq!(back.to_digroup().unwrap(), g);
    }

    #[test]
    fn model_round_trip() {
        let m = crate::lierack::builtin_model("so3-standard").unwrap();
        let f = ModelFile::from_model(&m);
        let back: ModelFile = parse(&to_json(&f).unwrap()).unwrap();
        assert_eq!(back.to_model().unwrap(), m);
    }

    #[test]
    fn subspace_and_rep_round_trip() {
        let g = example_2_1(2);
        let k = g.ker_ad();
        let f = SubspaceFile::from_subspace(&k);
        assert_eq!(parse::<SubspaceFile>(&to_json(&f).unwrap()).unwrap().to_subspace().unwrap(), k);
        let r = gl_standard_rep(2);
        let f = RepresentationFile::from_representation(&r);
        let back = parse::<RepresentationFile>(&to_json(&f).unwrap()).unwrap().to_representation().unwrap();
        assert_eq!(back.matrices(), r.matrices());
    }
}
