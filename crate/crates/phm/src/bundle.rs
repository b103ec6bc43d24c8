//! The JSON bundle format: a group table, per-degree dimensions and every
//! structure map as a sparse matrix of exact rationals.
//!
//! Matrices act on columns; tensor bases are ordered with the leftmost
//! factor slowest. Pair-indexed families (`comult`, `coaction`) list
//! `(α, β)` in the order `α * |G| + β`.

use std::collections::BTreeMap;
use std::path::Path;

use phm_core::fixtures::{ExpectedValue, FixtureBundle};
use phm_core::hopf::AlgebraFamily;
use phm_core::{
    Coaction, ColinearUnitMap, ComodulePoissonAlgebra, GroupTable, HopfGCoalgebra, Instance,
    Matrix, PoissonAlgebraFamily, PoissonHopfModule,
};
use serde::{Deserialize, Serialize};

use crate::rational;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("schema violation at {path} (line {line}, column {column}): {message}")]
    Schema {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported format_version {0:?}")]
    Version(String),
    #[error("malformed rational {value:?} at {path}")]
    MalformedRational { path: String, value: String },
    #[error("index out of range at {path}: ({row}, {col}) in a {rows}x{cols} block")]
    IndexOutOfRange {
        path: String,
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("{path}: {message}")]
    Roles { path: String, message: String },
    #[error("inconsistent structure: {0}")]
    Structure(#[from] phm_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    H,
    A,
    M,
    #[serde(rename = "phi")]
    Phi,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseBlock {
    pub rows: usize,
    pub cols: usize,
    /// `[row, col, "p/q"]`, row-major, zeros omitted.
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub order: usize,
    pub identity: usize,
    /// `mul[a][b] = ab`.
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfBlock {
    pub dims: Vec<usize>,
    pub mult: Vec<SparseBlock>,
    pub unit: Vec<SparseBlock>,
    pub comult: Vec<SparseBlock>,
    pub counit: SparseBlock,
    pub antipode: Vec<SparseBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub dims: Vec<usize>,
    pub mult: Vec<SparseBlock>,
    pub unit: Vec<SparseBlock>,
    pub bracket: Vec<SparseBlock>,
    pub coaction: Vec<SparseBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleBlock {
    pub dims: Vec<usize>,
    pub action: Vec<SparseBlock>,
    pub lie: Vec<SparseBlock>,
    pub coaction: Vec<SparseBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiBlock {
    pub maps: Vec<SparseBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum ExpectedEntry {
    Dims(Vec<usize>),
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleFile {
    pub format_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub roles: Vec<Role>,
    pub group: GroupBlock,
    #[serde(rename = "H", default, skip_serializing_if = "Option::is_none")]
    pub hopf: Option<HopfBlock>,
    #[serde(rename = "A", default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
    #[serde(rename = "M", default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<PhiBlock>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<String, ExpectedEntry>,
}

/// A parsed bundle: structures built and shape-checked, not yet certified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bundle {
    pub name: Option<String>,
    pub instance: Instance,
    pub expected: BTreeMap<String, ExpectedValue>,
}

impl From<FixtureBundle> for Bundle {
    fn from(f: FixtureBundle) -> Self {
        Bundle {
            name: Some(f.name),
            instance: f.instance,
            expected: f.expected,
        }
    }
}

fn sparse(m: &Matrix) -> SparseBlock {
    let mut entries = Vec::new();
    for r in 0..m.rows() {
        for (c, x) in m.row(r).iter().enumerate() {
            if !num_traits::Zero::is_zero(x) {
                entries.push((r, c, rational::format(x)));
            }
        }
    }
    SparseBlock {
        rows: m.rows(),
        cols: m.cols(),
        entries,
    }
}

pub(crate) fn sparse_all(ms: &[Matrix]) -> Vec<SparseBlock> {
    ms.iter().map(sparse).collect()
}

fn column(v: &[phm_core::Scalar]) -> SparseBlock {
    sparse(&Matrix::column_vector(v))
}

pub fn to_file(b: &Bundle) -> BundleFile {
    let inst = &b.instance;
    let g = inst.group();
    let h = &inst.hopf;
    let mut roles = vec![Role::H];
    let hopf = HopfBlock {
        dims: h.dims().to_vec(),
        mult: sparse_all(&h.algebra.mult),
        unit: h.algebra.unit.iter().map(|u| column(u)).collect(),
        comult: sparse_all(&h.comult),
        counit: sparse(&h.counit),
        antipode: sparse_all(&h.antipode),
    };
    let algebra = inst.algebra.as_ref().map(|a| {
        roles.push(Role::A);
        AlgebraBlock {
            dims: a.dims().to_vec(),
            mult: sparse_all(&a.poisson.algebra.mult),
            unit: a.poisson.algebra.unit.iter().map(|u| column(u)).collect(),
            bracket: sparse_all(&a.poisson.bracket),
            coaction: sparse_all(&a.coaction.maps),
        }
    });
    let module = inst.module.as_ref().map(|m| {
        roles.push(Role::M);
        ModuleBlock {
            dims: m.dims.clone(),
            action: sparse_all(&m.act),
            lie: sparse_all(&m.lie),
            coaction: sparse_all(&m.coaction.maps),
        }
    });
    let phi = inst.phi.as_ref().map(|p| {
        roles.push(Role::Phi);
        PhiBlock {
            maps: sparse_all(&p.maps),
        }
    });
    let expected = b
        .expected
        .iter()
        .map(|(k, v)| {
            let e = match v {
                ExpectedValue::Dims(d) => ExpectedEntry::Dims(d.clone()),
                ExpectedValue::Flag(f) => ExpectedEntry::Flag(*f),
            };
            (k.clone(), e)
        })
        .collect();
    BundleFile {
        format_version: FORMAT_VERSION.into(),
        name: b.name.clone(),
        roles,
        group: GroupBlock {
            order: g.order(),
            identity: g.identity(),
            mul: g
                .raw_mul()
                .chunks(g.order())
                .map(<[usize]>::to_vec)
                .collect(),
            inv: g.raw_inv().to_vec(),
        },
        hopf: Some(hopf),
        algebra,
        module,
        phi,
        expected,
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(b: &Bundle) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(b)).expect("bundle serializes");
    s.push('\n');
    s
}

fn dense(path: &str, b: &SparseBlock) -> Result<Matrix, ParseError> {
    let mut m = Matrix::zeros(b.rows, b.cols);
    for (i, (r, c, v)) in b.entries.iter().enumerate() {
        let here = || format!("{path}.entries[{i}]");
        if *r >= b.rows || *c >= b.cols {
            return Err(ParseError::IndexOutOfRange {
                path: here(),
                row: *r,
                col: *c,
                rows: b.rows,
                cols: b.cols,
            });
        }
        m[(*r, *c)] = rational::parse(v).ok_or_else(|| ParseError::MalformedRational {
            path: here(),
            value: v.clone(),
        })?;
    }
    Ok(m)
}

fn dense_all(path: &str, bs: &[SparseBlock]) -> Result<Vec<Matrix>, ParseError> {
    bs.iter()
        .enumerate()
        .map(|(i, b)| dense(&format!("{path}[{i}]"), b))
        .collect()
}

fn vectors(path: &str, bs: &[SparseBlock]) -> Result<Vec<Vec<phm_core::Scalar>>, ParseError> {
    let ms = dense_all(path, bs)?;
    Ok(ms.iter().map(|m| m.column(0)).collect())
}

fn role_block<T>(path: &str, declared: bool, block: Option<T>) -> Result<Option<T>, ParseError> {
    match (declared, block) {
        (true, None) => Err(ParseError::Roles {
            path: path.into(),
            message: "role is declared but its block is missing".into(),
        }),
        (false, Some(_)) => Err(ParseError::Roles {
            path: path.into(),
            message: "block is present but its role is not declared".into(),
        }),
        (_, b) => Ok(b),
    }
}

fn group(g: &GroupBlock) -> Result<GroupTable, ParseError> {
    if g.mul.len() != g.order || g.mul.iter().any(|row| row.len() != g.order) {
        return Err(ParseError::Roles {
            path: "group.mul".into(),
            message: format!("expected a {0}x{0} table", g.order),
        });
    }
    Ok(GroupTable::new(
        g.order,
        g.mul.concat(),
        g.identity,
        g.inv.clone(),
    )?)
}

pub fn from_file(f: BundleFile) -> Result<Bundle, ParseError> {
    if f.format_version != FORMAT_VERSION {
        return Err(ParseError::Version(f.format_version));
    }
    let has = |r| f.roles.contains(&r);
    let g = group(&f.group)?;
    let hb = role_block("H", has(Role::H), f.hopf)?.ok_or_else(|| ParseError::Roles {
        path: "roles".into(),
        message: "every bundle needs the role H".into(),
    })?;
    let mut hopf = HopfGCoalgebra {
        algebra: AlgebraFamily {
            group: g.clone(),
            dims: hb.dims,
            mult: dense_all("H.mult", &hb.mult)?,
            unit: vectors("H.unit", &hb.unit)?,
        },
        comult: dense_all("H.comult", &hb.comult)?,
        counit: dense("H.counit", &hb.counit)?,
        antipode: dense_all("H.antipode", &hb.antipode)?,
        antipode_inverse: None,
    };
    hopf.check_shapes()?;
    // a singular antipode is reported by validation, not refused here
    hopf.antipode_inverse = phm_core::hopf::invert_antipode(&hopf).ok();

    let algebra = role_block("A", has(Role::A), f.algebra)?
        .map(|ab| -> Result<_, ParseError> {
            let order = g.order();
            Ok(ComodulePoissonAlgebra {
                poisson: PoissonAlgebraFamily {
                    algebra: AlgebraFamily {
                        group: g.clone(),
                        dims: ab.dims,
                        mult: dense_all("A.mult", &ab.mult)?,
                        unit: vectors("A.unit", &ab.unit)?,
                    },
                    bracket: dense_all("A.bracket", &ab.bracket)?,
                },
                coaction: Coaction {
                    order,
                    maps: dense_all("A.coaction", &ab.coaction)?,
                },
            })
        })
        .transpose()?;
    let module = role_block("M", has(Role::M), f.module)?
        .map(|mb| -> Result<_, ParseError> {
            Ok(PoissonHopfModule {
                dims: mb.dims,
                act: dense_all("M.action", &mb.action)?,
                lie: dense_all("M.lie", &mb.lie)?,
                coaction: Coaction {
                    order: g.order(),
                    maps: dense_all("M.coaction", &mb.coaction)?,
                },
            })
        })
        .transpose()?;
    let phi = role_block("phi", has(Role::Phi), f.phi)?
        .map(|pb| -> Result<_, ParseError> {
            Ok(ColinearUnitMap {
                maps: dense_all("phi.maps", &pb.maps)?,
            })
        })
        .transpose()?;
    let instance = Instance {
        hopf,
        algebra,
        module,
        phi,
    };
    instance.check_shapes()?;
    let expected = f
        .expected
        .into_iter()
        .map(|(k, v)| {
            let v = match v {
                ExpectedEntry::Dims(d) => ExpectedValue::Dims(d),
                ExpectedEntry::Flag(b) => ExpectedValue::Flag(b),
            };
            (k, v)
        })
        .collect();
    Ok(Bundle {
        name: f.name,
        instance,
        expected,
    })
}

pub fn from_json(text: &str) -> Result<Bundle, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let file: BundleFile = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        ParseError::Schema {
            path,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })?;
    from_file(file)
}

pub fn parse_bundle(path: &Path) -> Result<Bundle, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use phm_core::fixtures::{fixture, FIXTURES, MUTANTS};

    #[test]
    fn fixtures_round_trip() {
        for name in FIXTURES.iter().chain(MUTANTS.iter()) {
            let b = Bundle::from(fixture(name).unwrap());
            let text = to_json(&b);
            let back = from_json(&text).unwrap();
            assert_eq!(back, b, "{name}");
            assert_eq!(to_json(&back), text, "{name}");
        }
    }

    #[test]
    fn undeclared_block_is_refused() {
        let b = Bundle::from(fixture("F1").unwrap());
        let mut f = to_file(&b);
        f.roles.retain(|r| *r != Role::M);
        assert!(matches!(from_file(f), Err(ParseError::Roles { path, .. }) if path == "M"));
    }
}
