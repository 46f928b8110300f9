//! Model file format (UTF-8 JSON).
//!
//! ```json
//! {"kind":"cayley","order":2,"labels":["0","1"],"op":[[0,1],[1,0]]}
//! {"kind":"mobius"}
//! {"kind":"einstein","c":"1"}
//! ```
//!
//! Exact numbers are strings (`"1/2"`, `"0.25"`). `op` is a list of rows; a
//! single row-major list of `order²` indices is accepted as well.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::cayley::{numeric_labels, CayleyGyro, CayleyTable};
use super::einstein::{EinsteinBall, Vec3};
use super::mobius::{exact, ExactComplex, MobiusDisk};
use crate::error::{Error, Result};
use crate::rational::{parse_rational, to_f64};

/// Largest carrier accepted from a document; the derived gyration table is
/// cubic in the order.
pub const MAX_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OpRows {
    Rows(Vec<Vec<usize>>),
    Flat(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ModelDoc {
    Cayley {
        order: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
        op: OpRows,
    },
    Mobius {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tol: Option<String>,
    },
    Einstein {
        c: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tol: Option<String>,
    },
}

pub fn parse_model_doc(text: &str) -> Result<ModelDoc> {
    Ok(serde_json::from_str(text)?)
}

impl ModelDoc {
    /// The raw table of a `cayley` document, checked for shape only.
    pub fn to_table(&self) -> Result<CayleyTable> {
        let ModelDoc::Cayley { order, labels, op } = self else {
            return Err(Error::Malformed("expected a document of kind \"cayley\"".into()));
        };
        let n = *order;
        if n == 0 || n > MAX_ORDER {
            return Err(Error::Malformed(format!("order {n} outside 1..={MAX_ORDER}")));
        }
        let rows = match op {
            OpRows::Rows(rows) if rows.len() == 1 && n > 1 && rows[0].len() == n * n => {
                rows[0].chunks(n).map(<[usize]>::to_vec).collect()
            }
            OpRows::Rows(rows) => rows.clone(),
            OpRows::Flat(flat) if flat.len() == n * n => flat.chunks(n).map(<[usize]>::to_vec).collect(),
            OpRows::Flat(flat) => {
                return Err(Error::Malformed(format!("flat op has {} entries, expected {}", flat.len(), n * n)))
            }
        };
        let labels = match labels {
            Some(l) if l.len() != n => {
                return Err(Error::Malformed(format!("{} labels for order {n}", l.len())));
            }
            Some(l) => {
                if l.iter().collect::<BTreeSet<_>>().len() != n {
                    return Err(Error::Malformed("labels must be distinct".into()));
                }
                l.clone()
            }
            None => numeric_labels(n),
        };
        CayleyTable::new(labels, rows)
    }
}

/// Parses and validates a finite model document.
pub fn table_load(text: &str) -> Result<CayleyGyro> {
    CayleyGyro::new(parse_model_doc(text)?.to_table()?)
}

/// Parses a finite model document without requiring it to be a gyrogroup.
pub fn raw_table_load(text: &str) -> Result<CayleyTable> {
    parse_model_doc(text)?.to_table()
}

/// Canonical document text for a table: one row per line, trailing newline.
pub fn emit_table(table: &CayleyTable) -> String {
    let labels: Vec<String> = table
        .labels()
        .iter()
        .map(|l| serde_json::to_string(l).expect("strings serialize"))
        .collect();
    let rows: Vec<String> = table
        .rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(usize::to_string).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    format!(
        "{{\n  \"kind\": \"cayley\",\n  \"order\": {},\n  \"labels\": [{}],\n  \"op\": [\n{}\n  ]\n}}\n",
        table.order(),
        labels.join(", "),
        rows.join(",\n")
    )
}

pub fn table_emit(model: &CayleyGyro) -> String {
    emit_table(model.table())
}

/// A loaded model of any supported kind.
#[derive(Debug, Clone)]
pub enum Model {
    Cayley(CayleyGyro),
    Mobius(MobiusDisk),
    Einstein { ball: EinsteinBall, c: BigRational },
}

fn parse_tol(tol: &Option<String>) -> Result<Option<f64>> {
    tol.as_deref()
        .map(|t| {
            let r = parse_rational(t)?;
            if r.is_negative() {
                return Err(Error::Malformed(format!("negative tolerance {t}")));
            }
            Ok(to_f64(&r))
        })
        .transpose()
}

pub fn load_model(text: &str) -> Result<Model> {
    let doc = parse_model_doc(text)?;
    match &doc {
        ModelDoc::Cayley { .. } => Ok(Model::Cayley(CayleyGyro::new(doc.to_table()?)?)),
        ModelDoc::Mobius { tol } => {
            let mut m = MobiusDisk::default();
            if let Some(t) = parse_tol(tol)? {
                m.tolerance = t;
            }
            Ok(Model::Mobius(m))
        }
        ModelDoc::Einstein { c, tol } => {
            let c = parse_rational(c)?;
            if !c.is_positive() {
                return Err(Error::Malformed("einstein speed bound c must be positive".into()));
            }
            let mut ball = EinsteinBall::new(to_f64(&c))?;
            if let Some(t) = parse_tol(tol)? {
                ball.tolerance = t;
            }
            Ok(Model::Einstein { ball, c })
        }
    }
}

fn coordinates(text: &str, expected: usize) -> Result<Vec<BigRational>> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != expected {
        return Err(Error::Malformed(format!(
            "expected {expected} comma-separated coordinates, found {}",
            parts.len()
        )));
    }
    parts.into_iter().map(parse_rational).collect()
}

/// `"re,im"` as an exact point of the disk.
pub fn parse_complex(text: &str) -> Result<ExactComplex> {
    let mut c = coordinates(text, 2)?;
    let im = c.pop().unwrap_or_else(BigRational::zero);
    let re = c.pop().unwrap_or_else(BigRational::zero);
    Ok(exact(re, im))
}

/// `"x,y,z"` as a velocity.
pub fn parse_vec3(text: &str) -> Result<Vec3> {
    let c = coordinates(text, 3)?;
    Ok([to_f64(&c[0]), to_f64(&c[1]), to_f64(&c[2])])
}

/// An element index or label of a finite model.
pub fn parse_finite_element(text: &str, model: &CayleyGyro) -> Result<usize> {
    let t = text.trim();
    if let Some(i) = model.labels().iter().position(|l| l == t) {
        return Ok(i);
    }
    let i: usize = t
        .parse()
        .map_err(|_| Error::Malformed(format!("unknown element {t:?}")))?;
    if i >= model.order() {
        return Err(Error::IndexOutOfRange { index: i, order: model.order() });
    }
    Ok(i)
}
